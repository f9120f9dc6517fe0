#pragma once

#include <map>
#include <string>
#include <utility>

#include "pick/instance.hpp"

namespace pick {

/// Normalized base measure of the ambient L^2 space: Lebesgue probability
/// measure on the distinguished boundary (Hardy) or on the domain (Bergman).
struct BaseMeasure {
    DomainSpec domain;
    SpaceKind space = SpaceKind::Hardy;

    BaseMeasure() = default;
    BaseMeasure(DomainSpec d, SpaceKind s);
};

enum class MomentProvenance { Exact, Quadrature };

/// Cache of monomial moments m(alpha,beta) = integral of z^alpha conj(z)^beta
/// against the base measure. Entries are Hermitian: m(a,b) = conj(m(b,a)).
class MomentTable {
public:
    explicit MomentTable(BaseMeasure m) : measure_(std::move(m)) {}

    const BaseMeasure& measure() const { return measure_; }

    Complex base(const MultiIndex& alpha, const MultiIndex& beta);

    // integral of z^alpha conj(z)^beta |f|^2 dmu, expanded bilinearly over
    // the terms of f so that exact base moments stay exact.
    Complex weighted(const CPolynomial& f, const MultiIndex& alpha, const MultiIndex& beta);

    // <u, v> = sum over terms u_a conj(v_b) m(a,b) in the ambient L^2(mu).
    Complex inner(const CPolynomial& u, const CPolynomial& v);

    // CSV dump of all cached entries: alpha, beta, re, im, provenance.
    std::string dumpCsv() const;

private:
    struct Key {
        std::vector<int> a, b;
        bool operator<(const Key& o) const {
            if (a != o.a) return a < o.a;
            return b < o.b;
        }
    };
    BaseMeasure measure_;
    std::map<Key, std::pair<Complex, MomentProvenance>> cache_;

    std::pair<Complex, MomentProvenance> compute(const MultiIndex& alpha,
                                                 const MultiIndex& beta) const;
};

// One-shot conveniences over a throwaway table.
Complex baseMoment(const BaseMeasure& m, const MultiIndex& alpha, const MultiIndex& beta);
Complex weightedMoment(const BaseMeasure& m, const CPolynomial& f, const MultiIndex& alpha,
                       const MultiIndex& beta);

}  // namespace pick
