#include "pick/moments.hpp"

#include <cmath>
#include <sstream>

#include "pick/errors.hpp"

namespace pick {

BaseMeasure::BaseMeasure(DomainSpec d, SpaceKind s) : domain(std::move(d)), space(s) {
    if (space == SpaceKind::Hardy && domain.kind == DomainKind::Grid)
        throw std::invalid_argument("BaseMeasure: Hardy space requires polydisk or ball");
    if (domain.kind == DomainKind::Grid && domain.cells.empty())
        throw std::invalid_argument("BaseMeasure: empty grid");
}

namespace {

double factorial(int n) {
    double v = 1.0;
    for (int k = 2; k <= n; ++k) v *= k;
    return v;
}

double multiFactorial(const MultiIndex& a) {
    double v = 1.0;
    for (int e : a.exps) v *= factorial(e);
    return v;
}

}  // namespace

std::pair<Complex, MomentProvenance> MomentTable::compute(const MultiIndex& alpha,
                                                          const MultiIndex& beta) const {
    const int d = measure_.domain.dim;
    if (alpha.dim() != d || beta.dim() != d)
        throw std::invalid_argument("MomentTable: multi-index dimension mismatch");

    if (measure_.domain.kind == DomainKind::Grid) {
        // Midpoint rule over the cells, normalized by total grid mass; the
        // common factor h^{2d} cancels, leaving the plain cell average.
        Complex s = 0.0;
        for (const Point& c : measure_.domain.cells)
            s += evalMonomial(alpha, c) * std::conj(evalMonomial(beta, c));
        return {s / static_cast<double>(measure_.domain.cells.size()),
                MomentProvenance::Quadrature};
    }

    // All closed forms are diagonal in (alpha, beta).
    if (!(alpha == beta)) return {Complex(0.0), MomentProvenance::Exact};

    const int total = alpha.degree();
    double v = 0.0;
    if (measure_.space == SpaceKind::Hardy) {
        if (measure_.domain.kind == DomainKind::Polydisk) {
            v = 1.0;  // torus characters are orthonormal
        } else {
            // sphere: (d-1)! alpha! / (d-1+|alpha|)!
            v = factorial(d - 1) * multiFactorial(alpha) / factorial(d - 1 + total);
        }
    } else {
        if (measure_.domain.kind == DomainKind::Polydisk) {
            v = 1.0;
            for (int e : alpha.exps) v /= (e + 1);
        } else {
            // ball: d! alpha! / (d+|alpha|)!
            v = factorial(d) * multiFactorial(alpha) / factorial(d + total);
        }
    }
    return {Complex(v), MomentProvenance::Exact};
}

Complex MomentTable::base(const MultiIndex& alpha, const MultiIndex& beta) {
    Key k{alpha.exps, beta.exps};
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second.first;
    auto val = compute(alpha, beta);
    cache_.emplace(std::move(k), val);
    return val.first;
}

Complex MomentTable::weighted(const CPolynomial& f, const MultiIndex& alpha,
                              const MultiIndex& beta) {
    if (f.isZero())
        throw DegenerateMeasureError("weighted moment: f = 0 gives the zero measure");
    if (f.dim() != measure_.domain.dim)
        throw std::invalid_argument("weighted moment: weight dimension mismatch");
    Complex s = 0.0;
    for (const auto& [gamma, cg] : f.terms())
        for (const auto& [delta, cd] : f.terms())
            s += cg * std::conj(cd) * base(alpha + gamma, beta + delta);
    return s;
}

Complex MomentTable::inner(const CPolynomial& u, const CPolynomial& v) {
    Complex s = 0.0;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) s += ca * std::conj(cb) * base(a, b);
    return s;
}

std::string MomentTable::dumpCsv() const {
    std::ostringstream os;
    os << "alpha,beta,re,im,provenance\n";
    os.precision(17);
    for (const auto& [k, v] : cache_) {
        auto emit = [&](const std::vector<int>& e) {
            for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        };
        emit(k.a);
        os << ",";
        emit(k.b);
        os << "," << v.first.real() << "," << v.first.imag() << ","
           << (v.second == MomentProvenance::Exact ? "exact" : "quadrature") << "\n";
    }
    return os.str();
}

Complex baseMoment(const BaseMeasure& m, const MultiIndex& alpha, const MultiIndex& beta) {
    return MomentTable(m).base(alpha, beta);
}

Complex weightedMoment(const BaseMeasure& m, const CPolynomial& f, const MultiIndex& alpha,
                       const MultiIndex& beta) {
    return MomentTable(m).weighted(f, alpha, beta);
}

}  // namespace pick
