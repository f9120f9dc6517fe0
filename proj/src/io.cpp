#include "pick/io.hpp"

#include <fstream>
#include <sstream>

namespace pick {

namespace {

Complex parseComplex(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected [re, im] pair: " + j.dump());
    return {j[0].get<double>(), j[1].get<double>()};
}

Json complexToJson(Complex c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

Point parsePoint(const Json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("expected a point as a list of [re, im] pairs");
    Point p(j.size());
    for (size_t i = 0; i < j.size(); ++i) p[static_cast<Eigen::Index>(i)] = parseComplex(j[i]);
    return p;
}

CPolynomial parsePolynomial(const Json& j, int dim) {
    if (!j.is_array()) throw std::invalid_argument("expected a polynomial as a list of terms");
    CPolynomial p(dim);
    for (const Json& term : j) {
        std::vector<int> alpha = term.at("alpha").get<std::vector<int>>();
        if (static_cast<int>(alpha.size()) != dim)
            throw std::invalid_argument("polynomial term alpha has wrong dimension");
        p.addTerm(MultiIndex(std::move(alpha)),
                  Complex(term.value("re", 0.0), term.value("im", 0.0)));
    }
    return p;
}

InterpolationInstance parseInstance(const Json& j) {
    InterpolationInstance inst;
    const Json& dom = j.at("domain");
    std::string kind = dom.at("kind").get<std::string>();
    int dim = dom.at("dim").get<int>();
    if (kind == "polydisk") {
        inst.domain = DomainSpec::polydisk(dim);
    } else if (kind == "ball") {
        inst.domain = DomainSpec::ball(dim);
    } else if (kind == "grid") {
        std::vector<Point> cells;
        for (const Json& c : dom.at("cells")) cells.push_back(parsePoint(c));
        inst.domain = DomainSpec::grid(dim, dom.at("h").get<double>(), std::move(cells));
    } else {
        throw std::invalid_argument("unknown domain kind: " + kind);
    }

    std::string space = j.at("space").get<std::string>();
    if (space == "hardy")
        inst.space = SpaceKind::Hardy;
    else if (space == "bergman")
        inst.space = SpaceKind::Bergman;
    else
        throw std::invalid_argument("unknown space: " + space);

    if (j.contains("algebra")) {
        const Json& alg = j.at("algebra");
        std::string akind = alg.at("kind").get<std::string>();
        if (akind == "full") {
            inst.algebra = AlgebraSpec::fullAlgebra();
        } else if (akind == "generated") {
            std::vector<CPolynomial> gens;
            for (const Json& g : alg.at("generators")) gens.push_back(parsePolynomial(g, dim));
            inst.algebra = AlgebraSpec::generated(std::move(gens));
        } else {
            throw std::invalid_argument("unknown algebra kind: " + akind);
        }
    }

    for (const Json& n : j.at("nodes")) inst.nodes.push_back(parsePoint(n));
    for (const Json& t : j.at("targets")) inst.targets.push_back(parseComplex(t));
    return inst;
}

InterpolationInstance loadInstance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open instance file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("parse error in " + path + ": " + e.what());
    }
    return parseInstance(j);
}

Json toJson(const Point& p) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(complexToJson(p[i]));
    return a;
}

Json toJson(const CPolynomial& p) {
    Json a = Json::array();
    for (const auto& [alpha, c] : p.terms())
        a.push_back({{"alpha", alpha.exps}, {"re", c.real()}, {"im", c.imag()}});
    return a;
}

Json toJson(const InterpolationInstance& inst) {
    Json dom{{"dim", inst.domain.dim}};
    switch (inst.domain.kind) {
        case DomainKind::Polydisk: dom["kind"] = "polydisk"; break;
        case DomainKind::Ball: dom["kind"] = "ball"; break;
        case DomainKind::Grid: {
            dom["kind"] = "grid";
            dom["h"] = inst.domain.h;
            dom["cell_count"] = inst.domain.cells.size();
            break;
        }
    }
    Json alg;
    if (inst.algebra.full) {
        alg = {{"kind", "full"}};
    } else {
        alg = {{"kind", "generated"}, {"generators", Json::array()}};
        for (const auto& g : inst.algebra.generators) alg["generators"].push_back(toJson(g));
    }
    Json nodes = Json::array(), targets = Json::array();
    for (const auto& n : inst.nodes) nodes.push_back(toJson(n));
    for (const auto& t : inst.targets) targets.push_back(complexToJson(t));
    return {{"domain", dom},
            {"space", inst.space == SpaceKind::Hardy ? "hardy" : "bergman"},
            {"algebra", alg},
            {"nodes", nodes},
            {"targets", targets}};
}

Json toJson(const Verdict& v) {
    return {{"psd", v.psd},
            {"lambda_min", v.lambdaMin},
            {"lambda_max", v.lambdaMax},
            {"tol", v.tol}};
}

Json toJson(const SweepReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.samples) {
        Json js{{"index", s.index}, {"skipped", s.skipped}};
        if (s.skipped) {
            js["skipped_nodes"] = s.skippedNodes;
        } else {
            js["verdict"] = toJson(s.verdict);
            js["drift"] = s.drift;
            js["inconclusive"] = s.inconclusive;
        }
        samples.push_back(std::move(js));
    }
    return {{"samples", samples},
            {"violation_found", r.violationFound},
            {"worst_lambda_min", r.worstLambdaMin},
            {"skipped_count", r.skippedCount},
            {"inconclusive_count", r.inconclusiveCount}};
}

Json toJson(const Certificate& c) {
    Json ev = Json::array();
    for (Eigen::Index i = 0; i < c.eigenvector.size(); ++i)
        ev.push_back(complexToJson(c.eigenvector[i]));
    Json pm = Json::array();
    for (Eigen::Index i = 0; i < c.pickMatrix.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < c.pickMatrix.cols(); ++j)
            row.push_back(complexToJson(c.pickMatrix(i, j)));
        pm.push_back(std::move(row));
    }
    return {{"f", toJson(c.weight)},
            {"lambda_min", c.lambdaMin},
            {"eigenvector", ev},
            {"pick_matrix", pm}};
}

Json toJson(const SchurChain& c) {
    Json steps = Json::array();
    for (const auto& s : c.steps)
        steps.push_back({{"node", complexToJson(s.node)}, {"gamma", complexToJson(s.gamma)}});
    return {{"steps", steps},
            {"terminal", complexToJson(c.terminal)},
            {"rigid", c.rigid}};
}

std::string sweepTraceCsv(const SweepReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "index,skipped,lambda_min,lambda_max,psd,drift,inconclusive\n";
    for (const auto& s : r.samples) {
        if (s.skipped)
            os << s.index << ",1,,,,,\n";
        else
            os << s.index << ",0," << s.verdict.lambdaMin << "," << s.verdict.lambdaMax << ","
               << (s.verdict.psd ? 1 : 0) << "," << s.drift << "," << (s.inconclusive ? 1 : 0)
               << "\n";
    }
    return os.str();
}

}  // namespace pick
