#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "pick/pickmat.hpp"
#include "pick/weighted.hpp"

namespace pick {

struct SweepConfig {
    int samples = 50;        // random weights beyond the always-included f = 1
    int maxWeightDegree = 4;
    std::uint64_t seed = 0;
    int truncation = -1;     // -1: defaultTruncation(dim)
    double tol = kPsdTol;
};

// Negative eigenvalues are attributed to truncation rather than to the data
// unless they exceed kDriftSafety times the observed diagonal drift of the
// kernel between truncations N-2 and N. Sampled weights routinely have zeros
// near the boundary, where the kernel series converges slowly and the
// truncated Pick matrix of perfectly feasible data can dip to ~1e-2 below
// zero; drift scales with that error while genuine violations do not.
inline constexpr double kDriftSafety = 4.0;

struct SweepSample {
    int index = 0;  // 0 is f = 1
    CPolynomial weight{1};
    bool skipped = false;            // some node fell outside Omega_f
    std::vector<int> skippedNodes;
    Verdict verdict;
    double drift = 0.0;              // diagonal kernel drift, set when not psd
    bool inconclusive = false;       // negative but within the drift guard
};

struct SweepReport {
    std::vector<SweepSample> samples;
    bool violationFound = false;
    double worstLambdaMin = 0.0;
    int skippedCount = 0;
    int inconclusiveCount = 0;
};

// Coefficients drawn as i.i.d. standard complex Gaussians over monomials of
// degree <= maxDegree, then unit-normalized.
CPolynomial randomWeight(int dim, int maxDegree, std::mt19937_64& rng);

// Evaluates the Pick matrix of nu = |f|^2 mu at the instance nodes through the
// cyclic model (k^f rescaled to j^f = k^nu).
SweepReport familySweep(const InterpolationInstance& inst, const SweepConfig& cfg);

struct CertifyConfig {
    int restarts = 20;
    int iterations = 200;
    int maxWeightDegree = 4;
    std::uint64_t seed = 0;
    int truncation = -1;
    double tol = kPsdTol;
};

struct Certificate {
    CPolynomial weight{1};   // unit-normalized witness f
    CMatrix pickMatrix;
    double lambdaMin = 0.0;
    CVector eigenvector;
};

// Multi-start Nelder-Mead over the weight coefficient sphere, minimizing
// lambda_min of the Pick matrix. Restart 0 starts at f = 1. A certificate is
// returned only when the best value is below -10*tol, survives a fresh
// rebuild, and clears the same drift guard the sweep applies. Absence of a
// certificate proves nothing.
std::optional<Certificate> certifyInfeasible(const InterpolationInstance& inst,
                                             const CertifyConfig& cfg);

}  // namespace pick
