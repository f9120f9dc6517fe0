#include "pick/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace pick {

namespace {

void requireValid(const InterpolationInstance& inst) {
    auto violations = validateInstance(inst);
    if (!violations.empty()) {
        std::string msg = "invalid instance:";
        for (const auto& v : violations) msg += " " + toString(v.code) + " (" + v.detail + ")";
        throw std::invalid_argument(msg);
    }
}

struct PickBuild {
    CMatrix matrix;                 // valid when skippedNodes is empty
    std::vector<int> skippedNodes;  // nodes outside Omega_f
};

PickBuild buildPickForWeight(const InterpolationInstance& inst, MomentTable& table,
                             const CPolynomial& f, int truncation) {
    PickBuild out;
    CyclicKernelModel model = buildCyclicModel(table, f, inst.algebra, truncation);
    for (size_t i = 0; i < inst.nodes.size(); ++i)
        if (!model.omegaFCheck(inst.nodes[i])) out.skippedNodes.push_back(static_cast<int>(i));
    if (!out.skippedNodes.empty()) return out;

    const auto n = static_cast<Eigen::Index>(inst.nodes.size());
    CMatrix k(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) {
            k(i, j) = model.rescaledEval(inst.nodes[i], inst.nodes[j]);
            k(j, i) = std::conj(k(i, j));
        }
    out.matrix = pickMatrix(k, inst.targets);
    out.matrix = (out.matrix + out.matrix.adjoint().eval()) / 2.0;
    return out;
}

// Largest increase of the rescaled diagonal k(z_i, z_i) between truncations
// nLo and nHi; +inf when a node leaves Omega_f at the lower truncation.
double diagonalDrift(const InterpolationInstance& inst, MomentTable& table,
                     const CPolynomial& f, int nHi, int nLo) {
    CyclicKernelModel hi = buildCyclicModel(table, f, inst.algebra, nHi);
    CyclicKernelModel lo = buildCyclicModel(table, f, inst.algebra, nLo);
    double drift = 0.0;
    for (const auto& z : inst.nodes) {
        if (!lo.omegaFCheck(z) || !hi.omegaFCheck(z))
            return std::numeric_limits<double>::infinity();
        drift = std::max(drift, hi.rescaledEval(z, z).real() - lo.rescaledEval(z, z).real());
    }
    return std::max(drift, 0.0);
}

}  // namespace

CPolynomial randomWeight(int dim, int maxDegree, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CPolynomial f(dim);
    for (const MultiIndex& a : monomialExponents(dim, maxDegree))
        f.addTerm(a, Complex(gauss(rng), gauss(rng)));
    double norm = f.coeffNorm();
    if (norm == 0.0) return CPolynomial::constant(dim, 1.0);
    return f * Complex(1.0 / norm);
}

SweepReport familySweep(const InterpolationInstance& inst, const SweepConfig& cfg) {
    requireValid(inst);
    if (cfg.samples < 1) throw std::invalid_argument("familySweep: need at least one sample");
    MomentTable table(BaseMeasure(inst.domain, inst.space));
    const int n = cfg.truncation < 0 ? defaultTruncation(inst.domain.dim) : cfg.truncation;

    std::mt19937_64 rng(cfg.seed);
    SweepReport report;
    report.worstLambdaMin = std::numeric_limits<double>::infinity();

    for (int s = 0; s <= cfg.samples; ++s) {
        SweepSample sample;
        sample.index = s;
        sample.weight = s == 0 ? CPolynomial::constant(inst.domain.dim, 1.0)
                               : randomWeight(inst.domain.dim, cfg.maxWeightDegree, rng);
        PickBuild pb = buildPickForWeight(inst, table, sample.weight, n);
        if (!pb.skippedNodes.empty()) {
            sample.skipped = true;
            sample.skippedNodes = std::move(pb.skippedNodes);
            ++report.skippedCount;
        } else {
            sample.verdict = psdCheck(pb.matrix, cfg.tol);
            if (!sample.verdict.psd) {
                sample.drift =
                    diagonalDrift(inst, table, sample.weight, n, std::max(0, n - 2));
                double guard = cfg.tol * std::max(1.0, sample.verdict.lambdaMax) +
                               kDriftSafety * sample.drift;
                if (sample.verdict.lambdaMin >= -guard) {
                    sample.inconclusive = true;
                    ++report.inconclusiveCount;
                } else {
                    report.violationFound = true;
                }
            }
            report.worstLambdaMin = std::min(report.worstLambdaMin, sample.verdict.lambdaMin);
        }
        report.samples.push_back(std::move(sample));
    }
    if (!std::isfinite(report.worstLambdaMin)) report.worstLambdaMin = 0.0;
    return report;
}

namespace {

constexpr double kPenalty = 1e6;

CPolynomial weightFromCoords(int dim, const std::vector<MultiIndex>& exps,
                             const Eigen::VectorXd& x) {
    CPolynomial f(dim);
    for (size_t i = 0; i < exps.size(); ++i)
        f.addTerm(exps[i], Complex(x[2 * i], x[2 * i + 1]));
    return f;
}

// Nelder-Mead with standard reflection/expansion/contraction/shrink moves.
Eigen::VectorXd nelderMead(const std::function<double(const Eigen::VectorXd&)>& fn,
                           const Eigen::VectorXd& start, int iterations, double* bestVal) {
    const int n = static_cast<int>(start.size());
    std::vector<Eigen::VectorXd> pts(n + 1, start);
    std::vector<double> vals(n + 1);
    for (int i = 1; i <= n; ++i) pts[i][i - 1] += 0.5;
    for (int i = 0; i <= n; ++i) vals[i] = fn(pts[i]);

    auto order = [&] {
        std::vector<int> idx(n + 1);
        for (int i = 0; i <= n; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return vals[a] < vals[b]; });
        std::vector<Eigen::VectorXd> p2(n + 1);
        std::vector<double> v2(n + 1);
        for (int i = 0; i <= n; ++i) {
            p2[i] = pts[idx[i]];
            v2[i] = vals[idx[i]];
        }
        pts = std::move(p2);
        vals = std::move(v2);
    };

    for (int it = 0; it < iterations; ++it) {
        order();
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
        for (int i = 0; i < n; ++i) centroid += pts[i];
        centroid /= n;

        Eigen::VectorXd refl = centroid + (centroid - pts[n]);
        double fr = fn(refl);
        if (fr < vals[0]) {
            Eigen::VectorXd exp2 = centroid + 2.0 * (centroid - pts[n]);
            double fe = fn(exp2);
            if (fe < fr) {
                pts[n] = exp2;
                vals[n] = fe;
            } else {
                pts[n] = refl;
                vals[n] = fr;
            }
        } else if (fr < vals[n - 1]) {
            pts[n] = refl;
            vals[n] = fr;
        } else {
            Eigen::VectorXd contr = centroid + 0.5 * (pts[n] - centroid);
            double fc = fn(contr);
            if (fc < vals[n]) {
                pts[n] = contr;
                vals[n] = fc;
            } else {
                for (int i = 1; i <= n; ++i) {
                    pts[i] = pts[0] + 0.5 * (pts[i] - pts[0]);
                    vals[i] = fn(pts[i]);
                }
            }
        }
    }
    order();
    *bestVal = vals[0];
    return pts[0];
}

}  // namespace

std::optional<Certificate> certifyInfeasible(const InterpolationInstance& inst,
                                             const CertifyConfig& cfg) {
    requireValid(inst);
    MomentTable table(BaseMeasure(inst.domain, inst.space));
    const int n = cfg.truncation < 0 ? defaultTruncation(inst.domain.dim) : cfg.truncation;
    const auto exps = monomialExponents(inst.domain.dim, cfg.maxWeightDegree);
    const int dims = 2 * static_cast<int>(exps.size());

    // The raw lambda_min rewards weights whose kernels converge slowly (the
    // truncated Pick matrix of feasible data dips below zero there), so the
    // search minimizes the drift-guarded value instead.
    auto objective = [&](const Eigen::VectorXd& x) -> double {
        CPolynomial f = weightFromCoords(inst.domain.dim, exps, x);
        if (f.coeffNorm() < 1e-8) return kPenalty;
        try {
            PickBuild pb = buildPickForWeight(inst, table, f, n);
            if (!pb.skippedNodes.empty()) return kPenalty;
            double drift = diagonalDrift(inst, table, f, n, std::max(0, n - 2));
            if (!std::isfinite(drift)) return kPenalty;
            return psdCheck(pb.matrix, cfg.tol).lambdaMin + kDriftSafety * drift;
        } catch (const DegenerateMeasureError&) {
            return kPenalty;
        }
    };

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double bestVal = kPenalty;
    Eigen::VectorXd bestX;
    for (int r = 0; r < cfg.restarts; ++r) {
        Eigen::VectorXd start = Eigen::VectorXd::Zero(dims);
        if (r == 0) {
            start[0] = 1.0;  // f = 1
        } else {
            for (int i = 0; i < dims; ++i) start[i] = gauss(rng);
        }
        double val = 0;
        Eigen::VectorXd x = nelderMead(objective, start, cfg.iterations, &val);
        if (val < bestVal) {
            bestVal = val;
            bestX = x;
        }
        if (bestVal < -0.1) break;  // a clear violation; no need to keep searching
    }
    if (!(bestVal < -10.0 * cfg.tol)) return std::nullopt;

    // Recheck with a fresh model build from the unit-normalized witness.
    CPolynomial f = weightFromCoords(inst.domain.dim, exps, bestX);
    f = f * Complex(1.0 / f.coeffNorm());
    PickBuild pb = buildPickForWeight(inst, table, f, n);
    if (!pb.skippedNodes.empty()) return std::nullopt;
    Verdict v = psdCheck(pb.matrix, cfg.tol);
    double drift = diagonalDrift(inst, table, f, n, std::max(0, n - 2));
    if (!(v.lambdaMin + kDriftSafety * drift < -10.0 * cfg.tol)) return std::nullopt;

    Certificate cert;
    cert.weight = f;
    cert.pickMatrix = pb.matrix;
    cert.lambdaMin = v.lambdaMin;
    cert.eigenvector = minEigenvector(pb.matrix);
    return cert;
}

}  // namespace pick
