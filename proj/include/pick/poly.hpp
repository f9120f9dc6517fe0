#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace pick {

using Complex = std::complex<double>;
using Point = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Exponent vector of a monomial z^alpha in C^d.
struct MultiIndex {
    std::vector<int> exps;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> e) : exps(std::move(e)) {}

    int dim() const { return static_cast<int>(exps.size()); }
    int degree() const {
        int s = 0;
        for (int e : exps) s += e;
        return s;
    }
    MultiIndex operator+(const MultiIndex& o) const;
    bool operator==(const MultiIndex&) const = default;
};

// Graded lexicographic: lower total degree first, then lex on exponents.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exps < b.exps;
    }
};

/// Multivariate polynomial with complex coefficients, sparse term map.
/// Zero coefficients are never stored; degree of the zero polynomial is -1.
class CPolynomial {
public:
    using TermMap = std::map<MultiIndex, Complex, GradedLexLess>;

    explicit CPolynomial(int dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("CPolynomial: dimension must be >= 1");
    }

    static CPolynomial constant(int dim, Complex c);
    static CPolynomial monomial(const MultiIndex& alpha, Complex c = Complex(1.0));
    // z_j as a polynomial in d variables (j is 0-based).
    static CPolynomial coordinate(int dim, int j);

    int dim() const { return dim_; }
    int degree() const;
    bool isZero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void addTerm(const MultiIndex& alpha, Complex c);

    Complex eval(const Point& z) const;

    CPolynomial operator+(const CPolynomial& o) const;
    CPolynomial operator-(const CPolynomial& o) const;
    CPolynomial operator*(const CPolynomial& o) const;
    CPolynomial operator*(Complex c) const;

    // l2 norm of the coefficient vector.
    double coeffNorm() const;

    bool operator==(const CPolynomial&) const = default;

private:
    int dim_;
    TermMap terms_;
};

// All exponents with |alpha| <= maxDegree, in graded-lex order.
// The first element is always the zero index (constant term).
std::vector<MultiIndex> monomialExponents(int dim, int maxDegree);

// z1^a1 * ... * zd^ad for a point z.
Complex evalMonomial(const MultiIndex& alpha, const Point& z);

}  // namespace pick
