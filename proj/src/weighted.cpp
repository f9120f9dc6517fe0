#include "pick/weighted.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace pick {

int defaultTruncation(int dim) {
    switch (dim) {
        case 1: return 12;
        case 2: return 8;
        case 3: return 5;
        default: return 3;
    }
}

BasisEnumeration enumerateBasis(const AlgebraSpec& algebra, int dim, int degreeCap) {
    if (degreeCap < 0) throw std::invalid_argument("enumerateBasis: degree cap must be >= 0");
    BasisEnumeration out;
    out.algebra = algebra;
    out.degreeCap = degreeCap;
    if (algebra.full) {
        for (const MultiIndex& a : monomialExponents(dim, degreeCap))
            out.elems.push_back(CPolynomial::monomial(a));
        return out;
    }
    // Words of at most degreeCap generator factors, including the empty word.
    std::vector<CPolynomial> words{CPolynomial::constant(dim, 1.0)};
    std::vector<CPolynomial> frontier = words;
    for (int len = 1; len <= degreeCap; ++len) {
        std::vector<CPolynomial> next;
        for (const CPolynomial& w : frontier)
            for (const CPolynomial& g : algebra.generators) next.push_back(w * g);
        words.insert(words.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    for (const CPolynomial& w : words) {
        bool dup = false;
        for (const CPolynomial& e : out.elems)
            if (e == w) {
                dup = true;
                break;
            }
        if (!dup && !w.isZero()) out.elems.push_back(w);
    }
    if (out.elems.empty() || !(out.elems.front() == CPolynomial::constant(dim, 1.0)))
        out.elems.insert(out.elems.begin(), CPolynomial::constant(dim, 1.0));
    return out;
}

namespace {

// Rows of the result C satisfy C G C^* = I on the retained rank.
CMatrix orthonormalize(const CMatrix& gram) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram);
    const Eigen::VectorXd& ev = es.eigenvalues();
    double evMax = ev.maxCoeff();
    if (!(evMax > 0))
        throw DegenerateMeasureError("orthonormalize: Gram matrix is numerically zero");
    std::vector<int> keep;
    for (int i = static_cast<int>(ev.size()) - 1; i >= 0; --i)
        if (ev[i] > kRankCutoff * evMax) keep.push_back(i);
    CMatrix c(keep.size(), gram.rows());
    for (size_t r = 0; r < keep.size(); ++r)
        c.row(r) = es.eigenvectors().col(keep[r]).adjoint() / std::sqrt(ev[keep[r]]);
    return c;
}

CPolynomial normalizeWeight(MomentTable& table, const CPolynomial& f) {
    if (f.isZero()) throw DegenerateMeasureError("weight f = 0");
    double norm2 = table.inner(f, f).real();
    if (!(norm2 > 0))
        throw DegenerateMeasureError("weight f vanishes a.e. on the measure support");
    return f * Complex(1.0 / std::sqrt(norm2));
}

CVector basisValues(const std::vector<CPolynomial>& polys, const Point& z) {
    CVector v(polys.size());
    for (size_t p = 0; p < polys.size(); ++p) v[p] = polys[p].eval(z);
    return v;
}

}  // namespace

WeightedKernelModel buildWeightedModel(MomentTable& table, const CPolynomial& f,
                                       const AlgebraSpec& algebra, int degreeCap) {
    const BaseMeasure& measure = table.measure();
    WeightedKernelModel m;
    m.measure_ = measure;
    m.basis_ = enumerateBasis(algebra, measure.domain.dim, degreeCap);
    m.fUnit_ = normalizeWeight(table, f);

    const auto& elems = m.basis_.elems;
    const int B = static_cast<int>(elems.size());
    m.gram_.resize(B, B);
    for (int p = 0; p < B; ++p) {
        for (int q = 0; q <= p; ++q) {
            Complex s = 0.0;
            for (const auto& [a, ca] : elems[p].terms())
                for (const auto& [b, cb] : elems[q].terms())
                    s += ca * std::conj(cb) * table.weighted(m.fUnit_, a, b);
            m.gram_(p, q) = s;
            m.gram_(q, p) = std::conj(s);
        }
    }
    m.ortho_ = orthonormalize(m.gram_);
    return m;
}

WeightedKernelModel buildWeightedModel(const BaseMeasure& measure, const CPolynomial& f,
                                       const AlgebraSpec& algebra, int degreeCap) {
    MomentTable table(measure);
    return buildWeightedModel(table, f, algebra, degreeCap);
}

CVector WeightedKernelModel::orthoEval(const Point& z) const {
    return ortho_ * basisValues(basis_.elems, z);
}

Complex WeightedKernelModel::eval(const Point& z, const Point& w) const {
    if (!insideDomain(measure_.domain, z) || !insideDomain(measure_.domain, w))
        throw std::domain_error("WeightedKernelModel::eval: point outside domain");
    CVector ez = orthoEval(z), ew = orthoEval(w);
    return ew.dot(ez);  // sum_i e_i(z) conj(e_i(w))
}

std::string WeightedKernelModel::dumpCsv() const {
    std::ostringstream os;
    os.precision(17);
    os << "basis_index,coeff_re,coeff_im\n";
    for (int i = 0; i < ortho_.rows(); ++i)
        for (int p = 0; p < ortho_.cols(); ++p)
            os << i << "," << p << "," << ortho_(i, p).real() << "," << ortho_(i, p).imag()
               << "\n";
    return os.str();
}

CyclicKernelModel buildCyclicModel(MomentTable& table, const CPolynomial& f,
                                   const AlgebraSpec& algebra, int degreeCap) {
    const BaseMeasure& measure = table.measure();
    CyclicKernelModel m;
    m.measure_ = measure;
    m.basis_ = enumerateBasis(algebra, measure.domain.dim, degreeCap);
    m.fUnit_ = normalizeWeight(table, f);

    const auto& elems = m.basis_.elems;
    const int B = static_cast<int>(elems.size());
    std::vector<CPolynomial> cyclic;  // {b_p f}
    cyclic.reserve(B);
    for (const CPolynomial& b : elems) cyclic.push_back(b * m.fUnit_);

    m.gramH_.resize(B, B);
    for (int p = 0; p < B; ++p) {
        for (int q = 0; q <= p; ++q) {
            Complex s = table.inner(cyclic[p], cyclic[q]);
            m.gramH_(p, q) = s;
            m.gramH_(q, p) = std::conj(s);
        }
    }
    m.ortho_ = orthonormalize(m.gramH_);

    // <f, u_i>_H with u_i = sum_p ortho(i,p) (b_p f)
    CVector fq(B);
    for (int p = 0; p < B; ++p) fq[p] = table.inner(m.fUnit_, cyclic[p]);
    m.fInner_ = m.ortho_.conjugate() * fq;
    return m;
}

CyclicKernelModel buildCyclicModel(const BaseMeasure& measure, const CPolynomial& f,
                                   const AlgebraSpec& algebra, int degreeCap) {
    MomentTable table(measure);
    return buildCyclicModel(table, f, algebra, degreeCap);
}

CVector CyclicKernelModel::orthoEval(const Point& z) const {
    CVector bv = basisValues(basis_.elems, z);
    Complex fz = fUnit_.eval(z);
    return ortho_ * (bv * fz);
}

Complex CyclicKernelModel::kernelEval(const Point& z, const Point& w) const {
    if (!insideDomain(measure_.domain, z) || !insideDomain(measure_.domain, w))
        throw std::domain_error("CyclicKernelModel::kernelEval: point outside domain");
    CVector uz = orthoEval(z), uw = orthoEval(w);
    return uw.dot(uz);
}

Complex CyclicKernelModel::innerWithF(const Point& z) const {
    CVector uz = orthoEval(z);
    return (uz.array() * fInner_.array()).sum();
}

bool CyclicKernelModel::omegaFCheck(const Point& z, double* magnitude) const {
    double mag = std::abs(innerWithF(z));
    if (magnitude) *magnitude = mag;
    return mag > kOmegaFTol;
}

Complex CyclicKernelModel::rescaledEval(const Point& z, const Point& w) const {
    Complex dz = innerWithF(z), dw = innerWithF(w);
    if (std::abs(dz) <= kOmegaFTol)
        throw OutsideOmegaFError("rescaledEval: z lies outside Omega_f");
    if (std::abs(dw) <= kOmegaFTol)
        throw OutsideOmegaFError("rescaledEval: w lies outside Omega_f");
    return kernelEval(z, w) / (dz * std::conj(dw));
}

}  // namespace pick
