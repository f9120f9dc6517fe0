// picktool: Pick interpolation feasibility on the polydisk, ball, and
// grid-sampled bounded domains via weighted reproducing kernels.
//
// Exit codes: 0 feasible / no violation found, 1 violation or infeasible,
// 2 input error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "pick/io.hpp"
#include "pick/kernels.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using namespace pick;
using Clock = std::chrono::steady_clock;

struct CommonFlags {
    int degree = -1;
    int samples = 50;
    double tol = kPsdTol;
    std::uint64_t seed = 0;
    int fdeg = 4;
    int restarts = 20;
    std::string csvPath;
};

void addCommon(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--degree", f.degree, "truncation degree N (default: per-dimension)");
    cmd->add_option("--samples", f.samples, "sweep sample count M");
    cmd->add_option("--tol", f.tol, "PSD tolerance");
    cmd->add_option("--seed", f.seed, "random seed");
    cmd->add_option("--fdeg", f.fdeg, "max degree of sampled weights f");
    cmd->add_option("--restarts", f.restarts, "certificate search restarts");
    cmd->add_option("--csv", f.csvPath, "write eigenvalue trace CSV to this path");
}

Json makeEnvelope(const std::string& command, std::uint64_t seed) {
    return {{"tool", "picktool"}, {"version", kVersion}, {"command", command}, {"seed", seed}};
}

void emit(Json envelope, Clock::time_point t0) {
    envelope["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    std::cout << envelope.dump(2) << "\n";
}

InterpolationInstance loadValidated(const std::string& path) {
    InterpolationInstance inst = loadInstance(path);
    auto violations = validateInstance(inst);
    if (!violations.empty()) {
        for (const auto& v : violations)
            std::cerr << path << ": " << toString(v.code) << ": " << v.detail << "\n";
        throw std::invalid_argument("instance validation failed");
    }
    return inst;
}

bool isClassicalDisk(const InterpolationInstance& inst) {
    return inst.domain.kind == DomainKind::Polydisk && inst.domain.dim == 1 &&
           inst.space == SpaceKind::Hardy && inst.algebra.full;
}

std::vector<Complex> scalarNodes(const InterpolationInstance& inst) {
    std::vector<Complex> z;
    for (const auto& n : inst.nodes) z.push_back(n[0]);
    return z;
}

SweepConfig sweepConfig(const InterpolationInstance& inst, const CommonFlags& f) {
    SweepConfig cfg;
    cfg.samples = f.samples;
    cfg.maxWeightDegree = f.fdeg;
    cfg.seed = f.seed;
    cfg.truncation = f.degree;
    cfg.tol = f.tol;
    (void)inst;
    return cfg;
}

void writeCsv(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write CSV file: " + path);
    out << body;
}

int runCheck(const std::string& path, const CommonFlags& flags) {
    auto t0 = Clock::now();
    InterpolationInstance inst = loadValidated(path);
    Json env = makeEnvelope("check", flags.seed);
    env["instance"] = toJson(inst);
    int exitCode = 0;
    if (isClassicalDisk(inst)) {
        DiskSolveResult res = solveDisk(scalarNodes(inst), inst.targets, flags.tol);
        Json result{{"mode", "classical-disk"},
                    {"feasible", res.feasible},
                    {"lambda_min", res.lambdaMin}};
        if (res.feasible)
            result["chain"] = toJson(res.chain);
        else
            exitCode = 1;
        env["result"] = result;
    } else {
        SweepReport report = familySweep(inst, sweepConfig(inst, flags));
        Json result{{"mode", "family-sweep"},
                    {"violation_found", report.violationFound},
                    {"worst_lambda_min", report.worstLambdaMin},
                    {"skipped_count", report.skippedCount},
                    {"inconclusive_count", report.inconclusiveCount},
                    {"samples", static_cast<int>(report.samples.size())},
                    {"status", report.violationFound ? "violation found"
                                                     : "no violation found"}};
        env["result"] = result;
        if (!flags.csvPath.empty()) writeCsv(flags.csvPath, sweepTraceCsv(report));
        if (report.violationFound) exitCode = 1;
    }
    emit(env, t0);
    return exitCode;
}

int runSolve(const std::string& path, const CommonFlags& flags) {
    auto t0 = Clock::now();
    InterpolationInstance inst = loadValidated(path);
    if (!isClassicalDisk(inst))
        throw std::invalid_argument(
            "solve: only d=1 Hardy polydisk instances with the full algebra");
    DiskSolveResult res = solveDisk(scalarNodes(inst), inst.targets, flags.tol);
    Json env = makeEnvelope("solve", flags.seed);
    env["instance"] = toJson(inst);
    Json result{{"feasible", res.feasible}, {"lambda_min", res.lambdaMin}};
    if (res.feasible) result["chain"] = toJson(res.chain);
    env["result"] = result;
    emit(env, t0);
    return res.feasible ? 0 : 1;
}

int runSweep(const std::string& path, const CommonFlags& flags) {
    auto t0 = Clock::now();
    InterpolationInstance inst = loadValidated(path);
    SweepReport report = familySweep(inst, sweepConfig(inst, flags));
    Json env = makeEnvelope("sweep", flags.seed);
    env["instance"] = toJson(inst);
    env["result"] = toJson(report);
    if (!flags.csvPath.empty()) writeCsv(flags.csvPath, sweepTraceCsv(report));
    emit(env, t0);
    return report.violationFound ? 1 : 0;
}

int runCertify(const std::string& path, const CommonFlags& flags) {
    auto t0 = Clock::now();
    InterpolationInstance inst = loadValidated(path);
    CertifyConfig cfg;
    cfg.restarts = flags.restarts;
    cfg.maxWeightDegree = flags.fdeg;
    cfg.seed = flags.seed;
    cfg.truncation = flags.degree;
    cfg.tol = flags.tol;
    auto cert = certifyInfeasible(inst, cfg);
    Json env = makeEnvelope("certify", flags.seed);
    env["instance"] = toJson(inst);
    if (cert) {
        env["result"] = {{"certificate", toJson(*cert)}, {"status", "infeasible"}};
    } else {
        env["result"] = {{"status", "none found"}};
    }
    emit(env, t0);
    return cert ? 1 : 0;
}

Point parsePointFlag(const std::string& s, int dim) {
    std::vector<double> vals;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
    if (static_cast<int>(vals.size()) != 2 * dim)
        throw std::invalid_argument("point flag needs 2*dim comma-separated reals (re,im pairs)");
    Point p(dim);
    for (int i = 0; i < dim; ++i) p[i] = Complex(vals[2 * i], vals[2 * i + 1]);
    return p;
}

struct KernelFlags {
    std::string domain = "polydisk";
    std::string space = "hardy";
    int dim = 1;
    std::string fJson;
    std::string zFlag, wFlag;
    double h = 0.05, rin = 0.2, rout = 0.8;
    int degree = -1;
};

int runKernel(const KernelFlags& kf) {
    auto t0 = Clock::now();
    DomainSpec dom;
    if (kf.domain == "polydisk")
        dom = DomainSpec::polydisk(kf.dim);
    else if (kf.domain == "ball")
        dom = DomainSpec::ball(kf.dim);
    else if (kf.domain == "disk-grid")
        dom = makeGridDisk(kf.h);
    else if (kf.domain == "annulus-grid")
        dom = makeGridAnnulus(kf.rin, kf.rout, kf.h);
    else
        throw std::invalid_argument("unknown domain: " + kf.domain);
    SpaceKind space = kf.space == "hardy" ? SpaceKind::Hardy : SpaceKind::Bergman;
    if (kf.space != "hardy" && kf.space != "bergman")
        throw std::invalid_argument("unknown space: " + kf.space);

    CPolynomial f = kf.fJson.empty() ? CPolynomial::constant(dom.dim, 1.0)
                                     : parsePolynomial(Json::parse(kf.fJson), dom.dim);
    Point z = parsePointFlag(kf.zFlag, dom.dim);
    Point w = kf.wFlag.empty() ? z : parsePointFlag(kf.wFlag, dom.dim);
    int n = kf.degree < 0 ? defaultTruncation(dom.dim) : kf.degree;

    BaseMeasure measure(dom, space);
    AlgebraSpec full = AlgebraSpec::fullAlgebra();
    WeightedKernelModel wm = buildWeightedModel(measure, f, full, n);
    CyclicKernelModel cm = buildCyclicModel(measure, f, full, n);

    Json env = makeEnvelope("kernel", 0);
    Json result{{"truncation", n}, {"f", toJson(f)}};
    Complex gramVal = wm.eval(z, w);
    result["gram_route"] = Json::array({gramVal.real(), gramVal.imag()});

    double magZ = 0, magW = 0;
    bool inZ = cm.omegaFCheck(z, &magZ), inW = cm.omegaFCheck(w, &magW);
    result["omega_f"] = {{"z", inZ}, {"w", inW}, {"mag_z", magZ}, {"mag_w", magW}};
    if (inZ && inW) {
        Complex cycVal = cm.rescaledEval(z, w);
        result["cyclic_route"] = Json::array({cycVal.real(), cycVal.imag()});
        result["delta_gram_cyclic"] = std::abs(gramVal - cycVal);
    } else {
        result["cyclic_route"] = nullptr;
        result["note"] = "evaluation point outside Omega_f";
    }
    if (dom.kind != DomainKind::Grid) {
        Complex closed = ClosedFormKernel(space, dom).eval(z, w);
        result["closed_form"] = Json::array({closed.real(), closed.imag()});
        result["delta_closed_gram"] = std::abs(closed - gramVal);
    }
    env["result"] = result;
    emit(env, t0);
    return 0;
}

struct MomentFlags {
    std::string domain = "polydisk";
    std::string space = "hardy";
    int dim = 1;
    int maxdeg = 4;
    std::string fJson;
    double h = 0.05, rin = 0.2, rout = 0.8;
    std::string csvPath;
};

int runMoments(const MomentFlags& mf) {
    DomainSpec dom;
    if (mf.domain == "polydisk")
        dom = DomainSpec::polydisk(mf.dim);
    else if (mf.domain == "ball")
        dom = DomainSpec::ball(mf.dim);
    else if (mf.domain == "disk-grid")
        dom = makeGridDisk(mf.h);
    else if (mf.domain == "annulus-grid")
        dom = makeGridAnnulus(mf.rin, mf.rout, mf.h);
    else
        throw std::invalid_argument("unknown domain: " + mf.domain);
    SpaceKind space = mf.space == "hardy" ? SpaceKind::Hardy : SpaceKind::Bergman;

    BaseMeasure measure(dom, space);
    MomentTable table(measure);
    auto exps = monomialExponents(dom.dim, mf.maxdeg);
    if (mf.fJson.empty()) {
        for (const auto& a : exps)
            for (const auto& b : exps) table.base(a, b);
    } else {
        CPolynomial f = parsePolynomial(Json::parse(mf.fJson), dom.dim);
        for (const auto& a : exps)
            for (const auto& b : exps) table.weighted(f, a, b);
    }
    std::string csv = table.dumpCsv();
    if (mf.csvPath.empty())
        std::cout << csv;
    else
        writeCsv(mf.csvPath, csv);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pick interpolation feasibility via weighted reproducing kernels"};
    app.require_subcommand(1);

    std::string instancePath;
    CommonFlags flags;
    KernelFlags kflags;
    MomentFlags mflags;

    auto* check = app.add_subcommand("check", "decide feasibility (d=1) or sweep for violations");
    check->add_option("instance", instancePath, "instance JSON file")->required();
    addCommon(check, flags);

    auto* solve = app.add_subcommand("solve", "classical disk solver: verdict plus Schur chain");
    solve->add_option("instance", instancePath, "instance JSON file")->required();
    addCommon(solve, flags);

    auto* sweep = app.add_subcommand("sweep", "family sweep over sampled weights f");
    sweep->add_option("instance", instancePath, "instance JSON file")->required();
    addCommon(sweep, flags);

    auto* certify = app.add_subcommand("certify", "search for an infeasibility certificate");
    certify->add_option("instance", instancePath, "instance JSON file")->required();
    addCommon(certify, flags);

    auto* kernel = app.add_subcommand("kernel", "evaluate kernels by all available routes");
    kernel->add_option("--domain", kflags.domain, "polydisk|ball|disk-grid|annulus-grid");
    kernel->add_option("--space", kflags.space, "hardy|bergman");
    kernel->add_option("--dim", kflags.dim, "ambient dimension d");
    kernel->add_option("--f", kflags.fJson, "weight polynomial as JSON term list");
    kernel->add_option("--z", kflags.zFlag, "point z as re,im[,re,im...]")->required();
    kernel->add_option("--w", kflags.wFlag, "point w (default: z)");
    kernel->add_option("--degree", kflags.degree, "truncation degree N");
    kernel->add_option("--cell-size", kflags.h, "grid cell size");
    kernel->add_option("--rin", kflags.rin, "annulus inner radius");
    kernel->add_option("--rout", kflags.rout, "annulus outer radius");

    auto* moments = app.add_subcommand("moments", "dump a monomial moment table as CSV");
    moments->add_option("--domain", mflags.domain, "polydisk|ball|disk-grid|annulus-grid");
    moments->add_option("--space", mflags.space, "hardy|bergman");
    moments->add_option("--dim", mflags.dim, "ambient dimension d");
    moments->add_option("--maxdeg", mflags.maxdeg, "max multi-index degree");
    moments->add_option("--f", mflags.fJson, "weight polynomial (weighted moments)");
    moments->add_option("--cell-size", mflags.h, "grid cell size");
    moments->add_option("--rin", mflags.rin, "annulus inner radius");
    moments->add_option("--rout", mflags.rout, "annulus outer radius");
    moments->add_option("--csv", mflags.csvPath, "write CSV here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return runCheck(instancePath, flags);
        if (solve->parsed()) return runSolve(instancePath, flags);
        if (sweep->parsed()) return runSweep(instancePath, flags);
        if (certify->parsed()) return runCertify(instancePath, flags);
        if (kernel->parsed()) return runKernel(kflags);
        if (moments->parsed()) return runMoments(mflags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
