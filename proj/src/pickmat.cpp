#include "pick/pickmat.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace pick {

CMatrix pickMatrix(const CMatrix& k, const std::vector<Complex>& w) {
    const auto n = k.rows();
    if (k.cols() != n) throw std::invalid_argument("pickMatrix: kernel matrix not square");
    if (static_cast<Eigen::Index>(w.size()) != n)
        throw std::invalid_argument("pickMatrix: target count does not match matrix size");
    CMatrix p(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            p(i, j) = (Complex(1.0) - w[i] * std::conj(w[j])) * k(i, j);
    return p;
}

namespace {
void requireHermitian(const CMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("psdCheck: matrix not square");
    double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (dev > tol * scale) throw std::invalid_argument("psdCheck: matrix is not Hermitian");
}
}  // namespace

Verdict psdCheck(const CMatrix& m, double tol) {
    requireHermitian(m, 1e-10);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    Verdict v;
    v.lambdaMin = es.eigenvalues().minCoeff();
    v.lambdaMax = es.eigenvalues().maxCoeff();
    v.tol = tol;
    v.psd = v.lambdaMin >= -tol * std::max(1.0, v.lambdaMax);
    return v;
}

CVector minEigenvector(const CMatrix& m) {
    requireHermitian(m, 1e-10);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    return es.eigenvectors().col(0);  // eigenvalues ascending
}

CMatrix schurProduct(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("schurProduct: size mismatch");
    return a.cwiseProduct(b);
}

}  // namespace pick
