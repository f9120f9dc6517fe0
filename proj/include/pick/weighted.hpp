#pragma once

#include <memory>

#include "pick/errors.hpp"
#include "pick/moments.hpp"

namespace pick {

// Eigenvalues below this fraction of the largest are discarded when
// orthonormalizing a Gram matrix; generated algebras produce dependent words.
inline constexpr double kRankCutoff = 1e-12;

// Points with |<f, k_z^f>| at or below this are outside Omega_f.
inline constexpr double kOmegaFTol = 1e-10;

// Truncation degree defaults keep Gram sizes manageable per dimension.
int defaultTruncation(int dim);

/// Ordered, deterministic list of algebra basis candidates up to the degree cap:
/// monomials in graded-lex order for the full algebra, deduplicated generator
/// words (of at most N factors, including the empty word 1) otherwise.
struct BasisEnumeration {
    AlgebraSpec algebra;
    int degreeCap = 0;
    std::vector<CPolynomial> elems;  // first element is the constant 1
};

BasisEnumeration enumerateBasis(const AlgebraSpec& algebra, int dim, int degreeCap);

/// Truncated model of A^2(nu) for nu = |f|^2 mu, built from the weighted Gram.
/// Truncation error grows like r^N toward the boundary: evaluations are
/// accurate well inside the domain, increasingly unreliable for |coords|
/// above ~0.6, and should not be trusted above ~0.9.
/// The kernel is evaluated through an orthonormal basis {e_i} of the span:
/// k(z,w) = sum_i e_i(z) conj(e_i(w)).
class WeightedKernelModel {
public:
    const BasisEnumeration& basis() const { return basis_; }
    const CMatrix& gram() const { return gram_; }
    // r x B coefficient matrix: e_i = sum_p ortho(i,p) * b_p.
    const CMatrix& ortho() const { return ortho_; }
    int rank() const { return static_cast<int>(ortho_.rows()); }
    const CPolynomial& weightUnit() const { return fUnit_; }
    const BaseMeasure& measure() const { return measure_; }

    Complex eval(const Point& z, const Point& w) const;

    // Values e_i(z) of the orthonormal basis.
    CVector orthoEval(const Point& z) const;

    // Orthonormal basis coefficients as CSV (one row per e_i).
    std::string dumpCsv() const;

    friend WeightedKernelModel buildWeightedModel(MomentTable&, const CPolynomial&,
                                                  const AlgebraSpec&, int);

private:
    BasisEnumeration basis_;
    CMatrix gram_;
    CMatrix ortho_;
    CPolynomial fUnit_{1};
    BaseMeasure measure_;
};

// Gram assembly reuses the table's cached base moments; sweeps share one
// table across all sampled weights.
WeightedKernelModel buildWeightedModel(MomentTable& table, const CPolynomial& f,
                                       const AlgebraSpec& algebra, int degreeCap);
WeightedKernelModel buildWeightedModel(const BaseMeasure& measure, const CPolynomial& f,
                                       const AlgebraSpec& algebra, int degreeCap);

/// Truncated model of the cyclic subspace A[f] inside the ambient space H,
/// holding k^f, the Omega_f data <f, k_z^f>, and the rescaled kernel j^f.
class CyclicKernelModel {
public:
    const BasisEnumeration& basis() const { return basis_; }
    const CMatrix& gramH() const { return gramH_; }
    const CPolynomial& weightUnit() const { return fUnit_; }
    int rank() const { return static_cast<int>(ortho_.rows()); }

    // k^f(z,w) of the truncated cyclic subspace.
    Complex kernelEval(const Point& z, const Point& w) const;

    // <f, k_z^f>_H from the truncated projection (not shortcut to f(z)).
    Complex innerWithF(const Point& z) const;

    // true iff |<f, k_z^f>| exceeds kOmegaFTol; magnitude reported either way.
    bool omegaFCheck(const Point& z, double* magnitude = nullptr) const;

    // j^f(z,w) = k^f(z,w) / (<f,k_z^f> conj(<f,k_w^f>)); throws OutsideOmegaFError.
    Complex rescaledEval(const Point& z, const Point& w) const;

    friend CyclicKernelModel buildCyclicModel(MomentTable&, const CPolynomial&,
                                              const AlgebraSpec&, int);

private:
    BasisEnumeration basis_;   // algebra basis {b_p}
    CMatrix gramH_;            // Gram of {b_p f} in H
    CMatrix ortho_;            // u_i = sum_p ortho(i,p) * (b_p f)
    CVector fInner_;           // <f, u_i>_H
    CPolynomial fUnit_{1};
    BaseMeasure measure_;

    CVector orthoEval(const Point& z) const;  // u_i(z)
};

CyclicKernelModel buildCyclicModel(MomentTable& table, const CPolynomial& f,
                                   const AlgebraSpec& algebra, int degreeCap);
CyclicKernelModel buildCyclicModel(const BaseMeasure& measure, const CPolynomial& f,
                                   const AlgebraSpec& algebra, int degreeCap);

}  // namespace pick
