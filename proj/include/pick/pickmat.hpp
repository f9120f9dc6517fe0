#pragma once

#include <optional>

#include "pick/poly.hpp"

namespace pick {

// Default PSD decision tolerance, relative to max(1, lambda_max).
inline constexpr double kPsdTol = 1e-9;

struct Verdict {
    bool psd = false;
    double lambdaMin = 0.0;
    double lambdaMax = 0.0;
    double tol = kPsdTol;
};

// Entrywise [(1 - w_i conj(w_j))] * K for a Hermitian kernel matrix K.
CMatrix pickMatrix(const CMatrix& kernelValues, const std::vector<Complex>& targets);

// Full Hermitian eigendecomposition; psd iff
// lambda_min >= -tol * max(1, lambda_max). Throws on non-Hermitian input.
Verdict psdCheck(const CMatrix& m, double tol = kPsdTol);

// Eigenvector of the smallest eigenvalue.
CVector minEigenvector(const CMatrix& m);

CMatrix schurProduct(const CMatrix& a, const CMatrix& b);

}  // namespace pick
