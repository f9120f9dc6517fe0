#include "pick/poly.hpp"

#include <cmath>

namespace pick {

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    if (dim() != o.dim())
        throw std::invalid_argument("MultiIndex: dimension mismatch in addition");
    MultiIndex r;
    r.exps.resize(exps.size());
    for (size_t i = 0; i < exps.size(); ++i) r.exps[i] = exps[i] + o.exps[i];
    return r;
}

CPolynomial CPolynomial::constant(int dim, Complex c) {
    CPolynomial p(dim);
    p.addTerm(MultiIndex(std::vector<int>(dim, 0)), c);
    return p;
}

CPolynomial CPolynomial::monomial(const MultiIndex& alpha, Complex c) {
    CPolynomial p(alpha.dim());
    p.addTerm(alpha, c);
    return p;
}

CPolynomial CPolynomial::coordinate(int dim, int j) {
    if (j < 0 || j >= dim) throw std::invalid_argument("CPolynomial::coordinate: index out of range");
    std::vector<int> e(dim, 0);
    e[j] = 1;
    return monomial(MultiIndex(std::move(e)));
}

int CPolynomial::degree() const {
    int d = -1;
    for (const auto& [a, c] : terms_) d = std::max(d, a.degree());
    return d;
}

void CPolynomial::addTerm(const MultiIndex& alpha, Complex c) {
    if (alpha.dim() != dim_)
        throw std::invalid_argument("CPolynomial::addTerm: multi-index dimension mismatch");
    for (int e : alpha.exps)
        if (e < 0) throw std::invalid_argument("CPolynomial::addTerm: negative exponent");
    auto it = terms_.find(alpha);
    if (it == terms_.end()) {
        if (c != Complex(0.0)) terms_.emplace(alpha, c);
    } else {
        it->second += c;
        if (it->second == Complex(0.0)) terms_.erase(it);
    }
}

Complex evalMonomial(const MultiIndex& alpha, const Point& z) {
    Complex v = 1.0;
    for (int i = 0; i < alpha.dim(); ++i) {
        Complex p = 1.0;
        for (int k = 0; k < alpha.exps[i]; ++k) p *= z[i];
        v *= p;
    }
    return v;
}

Complex CPolynomial::eval(const Point& z) const {
    if (static_cast<int>(z.size()) != dim_)
        throw std::invalid_argument("CPolynomial::eval: point dimension mismatch");
    Complex s = 0.0;
    for (const auto& [a, c] : terms_) s += c * evalMonomial(a, z);
    return s;
}

CPolynomial CPolynomial::operator+(const CPolynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CPolynomial: dimension mismatch");
    CPolynomial r = *this;
    for (const auto& [a, c] : o.terms_) r.addTerm(a, c);
    return r;
}

CPolynomial CPolynomial::operator-(const CPolynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CPolynomial: dimension mismatch");
    CPolynomial r = *this;
    for (const auto& [a, c] : o.terms_) r.addTerm(a, -c);
    return r;
}

CPolynomial CPolynomial::operator*(const CPolynomial& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("CPolynomial: dimension mismatch");
    CPolynomial r(dim_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_) r.addTerm(a + b, ca * cb);
    return r;
}

CPolynomial CPolynomial::operator*(Complex c) const {
    CPolynomial r(dim_);
    if (c == Complex(0.0)) return r;
    for (const auto& [a, ca] : terms_) r.addTerm(a, ca * c);
    return r;
}

double CPolynomial::coeffNorm() const {
    double s = 0.0;
    for (const auto& [a, c] : terms_) s += std::norm(c);
    return std::sqrt(s);
}

namespace {
void enumerateRec(int dim, int pos, int remaining, std::vector<int>& cur,
                  std::vector<MultiIndex>& out) {
    if (pos == dim) {
        out.emplace_back(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[pos] = e;
        enumerateRec(dim, pos + 1, remaining - e, cur, out);
    }
    cur[pos] = 0;
}
}  // namespace

std::vector<MultiIndex> monomialExponents(int dim, int maxDegree) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(dim, 0);
    for (int deg = 0; deg <= maxDegree; ++deg) {
        std::vector<MultiIndex> level;
        enumerateRec(dim, 0, deg, cur, level);
        for (auto& a : level)
            if (a.degree() == deg) out.push_back(std::move(a));
    }
    // enumerateRec emits each level already sorted lexicographically
    return out;
}

}  // namespace pick
