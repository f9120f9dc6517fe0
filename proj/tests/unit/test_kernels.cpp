#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <random>

#include "pick/kernels.hpp"
#include "pick/moments.hpp"

using namespace pick;

namespace {
Point pt1(Complex c) {
    Point p(1);
    p[0] = c;
    return p;
}
Point pt2(Complex a, Complex b) {
    Point p(2);
    p[0] = a;
    p[1] = b;
    return p;
}
Point randomDiskPoint(int dim, double radius, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-radius, radius);
    Point p(dim);
    for (int i = 0; i < dim; ++i) p[i] = Complex(u(rng), u(rng)) / std::sqrt(2.0);
    return p;
}
}  // namespace

TEST_CASE("kernel values at reference points") {
    ClosedFormKernel hardyPoly(SpaceKind::Hardy, DomainSpec::polydisk(2));
    CHECK(std::abs(hardyPoly.eval(pt2(0, 0), pt2(0, 0)) - 1.0) < 1e-15);

    ClosedFormKernel hardyBall(SpaceKind::Hardy, DomainSpec::ball(2));
    CHECK(std::abs(hardyBall.eval(pt2(0.5, 0), pt2(0.5, 0)) - 16.0 / 9.0) < 1e-14);

    ClosedFormKernel bergBall(SpaceKind::Bergman, DomainSpec::ball(2));
    double cube = (4.0 / 3.0) * (4.0 / 3.0) * (4.0 / 3.0);
    CHECK(std::abs(bergBall.eval(pt2(0.5, 0), pt2(0.5, 0)) - cube) < 1e-14);

    ClosedFormKernel bergDisk(SpaceKind::Bergman, DomainSpec::polydisk(1));
    CHECK(std::abs(bergDisk.eval(pt1(0.5), pt1(-0.5)) - 0.64) < 1e-14);
}

TEST_CASE("boundary points are rejected") {
    ClosedFormKernel k(SpaceKind::Hardy, DomainSpec::polydisk(1));
    CHECK_THROWS_AS(k.eval(pt1(1.0), pt1(0.0)), std::domain_error);
    CHECK_THROWS_AS(k.eval(pt1(0.0), pt1(Complex(0.0, 1.0))), std::domain_error);
    CHECK_THROWS_AS((ClosedFormKernel{SpaceKind::Hardy, makeGridDisk(0.1)}),
                    std::invalid_argument);
}

TEST_CASE("Hermitian symmetry on random interior pairs") {
    std::mt19937_64 rng(11);
    for (auto space : {SpaceKind::Hardy, SpaceKind::Bergman})
        for (auto dom : {DomainSpec::polydisk(2), DomainSpec::ball(2)}) {
            ClosedFormKernel k(space, dom);
            for (int t = 0; t < 25; ++t) {
                Point z = randomDiskPoint(2, 0.6, rng), w = randomDiskPoint(2, 0.6, rng);
                CHECK(std::abs(k.eval(z, w) - std::conj(k.eval(w, z))) <= 1e-14);
            }
        }
}

TEST_CASE("sampled Gram matrices are positive definite") {
    std::mt19937_64 rng(13);
    for (auto space : {SpaceKind::Hardy, SpaceKind::Bergman}) {
        ClosedFormKernel k(space, DomainSpec::ball(2));
        const int n = 8;
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) pts.push_back(randomDiskPoint(2, 0.5, rng));
        CMatrix g(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = k.eval(pts[i], pts[j]);
        Eigen::SelfAdjointEigenSolver<CMatrix> es((g + g.adjoint()) / 2.0);
        CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
}

TEST_CASE("truncated monomial series converges to the closed form") {
    // sum over |alpha| <= N of z^alpha conj(w)^alpha / m_alpha
    auto seriesValue = [](SpaceKind space, const DomainSpec& dom, const Point& z,
                          const Point& w, int n) {
        MomentTable table(BaseMeasure{dom, space});
        Complex s = 0.0;
        for (const MultiIndex& a : monomialExponents(dom.dim, n))
            s += evalMonomial(a, z) * std::conj(evalMonomial(a, w)) / table.base(a, a);
        return s;
    };
    std::mt19937_64 rng(17);
    for (auto space : {SpaceKind::Hardy, SpaceKind::Bergman})
        for (auto dom : {DomainSpec::polydisk(2), DomainSpec::ball(2)}) {
            ClosedFormKernel k(space, dom);
            Point z = randomDiskPoint(2, 0.45, rng), w = randomDiskPoint(2, 0.45, rng);
            Complex exact = k.eval(z, w);
            double prev = std::abs(seriesValue(space, dom, z, w, 5) - exact);
            for (int n : {10, 15, 20}) {
                double err = std::abs(seriesValue(space, dom, z, w, n) - exact);
                CHECK(err < prev + 1e-14);  // geometric decay; never grows
                prev = err;
            }
            CHECK(prev < 1e-6);
        }
}
