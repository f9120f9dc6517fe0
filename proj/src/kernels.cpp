#include "pick/kernels.hpp"

#include <cmath>

namespace pick {

Complex hermitianInner(const Point& z, const Point& w) {
    Complex s = 0.0;
    for (Eigen::Index i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
    return s;
}

ClosedFormKernel::ClosedFormKernel(SpaceKind s, DomainSpec d)
    : space(s), domain(std::move(d)) {
    if (domain.kind == DomainKind::Grid)
        throw std::invalid_argument(
            "ClosedFormKernel: no closed form for grid domains; use the weighted-model route");
}

namespace {
void requireInterior(const DomainSpec& dom, const Point& z, const char* which) {
    if (static_cast<int>(z.size()) != dom.dim)
        throw std::invalid_argument(std::string("ClosedFormKernel: point ") + which +
                                    " has wrong dimension");
    if (!insideDomain(dom, z))
        throw std::domain_error(std::string("ClosedFormKernel: point ") + which +
                                " is on or outside the boundary");
}
}  // namespace

Complex ClosedFormKernel::eval(const Point& z, const Point& w) const {
    requireInterior(domain, z, "z");
    requireInterior(domain, w, "w");
    if (domain.kind == DomainKind::Polydisk) {
        Complex v = 1.0;
        for (int i = 0; i < domain.dim; ++i) {
            Complex den = 1.0 - z[i] * std::conj(w[i]);
            v /= (space == SpaceKind::Hardy) ? den : den * den;
        }
        return v;
    }
    // Ball
    Complex den = 1.0 - hermitianInner(z, w);
    int power = (space == SpaceKind::Hardy) ? domain.dim : domain.dim + 1;
    return std::pow(den, -power);
}

}  // namespace pick
