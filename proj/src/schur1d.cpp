#include "pick/schur1d.hpp"

#include <cmath>

namespace pick {

namespace {

constexpr double kUnimodularTol = 1e-10;
constexpr double kConsistencyTol = 1e-7;
constexpr double kRigidThreshold = 1e-6;

void checkNodes(const std::vector<Complex>& z) {
    for (size_t i = 0; i < z.size(); ++i) {
        if (1.0 - std::abs(z[i]) < 1e-12)
            throw std::domain_error("classicalPickMatrix: node on or outside the unit circle");
        for (size_t j = i + 1; j < z.size(); ++j)
            if (z[i] == z[j])
                throw std::invalid_argument("classicalPickMatrix: duplicate nodes");
    }
}

Complex blaschke(Complex z, Complex a) { return (z - a) / (1.0 - std::conj(a) * z); }

}  // namespace

CMatrix classicalPickMatrix(const std::vector<Complex>& z, const std::vector<Complex>& w) {
    if (z.size() != w.size())
        throw std::invalid_argument("classicalPickMatrix: node/target count mismatch");
    checkNodes(z);
    const auto n = static_cast<Eigen::Index>(z.size());
    CMatrix p(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            p(i, j) = (1.0 - w[i] * std::conj(w[j])) / (1.0 - z[i] * std::conj(z[j]));
    return p;
}

DiskSolveResult solveDisk(const std::vector<Complex>& nodes,
                          const std::vector<Complex>& targets, double tol) {
    DiskSolveResult res;
    if (nodes.empty()) {
        res.feasible = true;
        return res;
    }
    CMatrix p = classicalPickMatrix(nodes, targets);
    Verdict v = psdCheck(p, tol);
    res.lambdaMin = v.lambdaMin;
    if (!v.psd) return res;

    res.feasible = true;
    res.chain.rigid = v.lambdaMin < kRigidThreshold;

    std::vector<Complex> zs = nodes, ws = targets;
    while (!zs.empty()) {
        Complex gamma = ws.front();
        double mag = std::abs(gamma);
        if (mag >= 1.0 - kUnimodularTol) {
            // Rigid stage: the interpolant is the unimodular constant gamma
            // from here on; remaining targets must agree.
            gamma /= mag;
            res.chain.steps.push_back({zs.front(), gamma});
            for (size_t i = 1; i < ws.size(); ++i) {
                if (std::abs(ws[i] - gamma) > kConsistencyTol) {
                    res.feasible = false;
                    return res;
                }
            }
            return res;
        }
        res.chain.steps.push_back({zs.front(), gamma});
        std::vector<Complex> reduced;
        reduced.reserve(ws.size() - 1);
        for (size_t i = 1; i < ws.size(); ++i) {
            Complex m = (ws[i] - gamma) / (1.0 - std::conj(gamma) * ws[i]);
            Complex b = blaschke(zs[i], zs.front());
            reduced.push_back(m / b);
        }
        zs.erase(zs.begin());
        ws = std::move(reduced);
    }
    return res;
}

Complex evalInterpolant(const SchurChain& chain, Complex z) {
    if (1.0 - std::abs(z) < 1e-12)
        throw std::domain_error("evalInterpolant: point on or outside the unit circle");
    Complex psi = chain.terminal;
    for (auto it = chain.steps.rbegin(); it != chain.steps.rend(); ++it) {
        Complex bz = blaschke(z, it->node);
        psi = (it->gamma + bz * psi) / (1.0 + std::conj(it->gamma) * bz * psi);
    }
    return psi;
}

}  // namespace pick
