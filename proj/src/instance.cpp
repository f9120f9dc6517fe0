#include "pick/instance.hpp"

#include <cmath>
#include <sstream>

namespace pick {

DomainSpec makeGridDisk(double h) {
    if (h <= 0) throw std::invalid_argument("makeGridDisk: h must be positive");
    std::vector<Point> cells;
    int n = static_cast<int>(std::ceil(1.0 / h));
    for (int i = -n; i < n; ++i) {
        for (int j = -n; j < n; ++j) {
            Complex c((i + 0.5) * h, (j + 0.5) * h);
            if (std::abs(c) < 1.0) {
                Point p(1);
                p[0] = c;
                cells.push_back(p);
            }
        }
    }
    return DomainSpec::grid(1, h, std::move(cells));
}

DomainSpec makeGridAnnulus(double rInner, double rOuter, double h) {
    if (h <= 0 || rInner < 0 || rOuter <= rInner)
        throw std::invalid_argument("makeGridAnnulus: need 0 <= rInner < rOuter and h > 0");
    std::vector<Point> cells;
    int n = static_cast<int>(std::ceil(rOuter / h));
    for (int i = -n; i < n; ++i) {
        for (int j = -n; j < n; ++j) {
            Complex c((i + 0.5) * h, (j + 0.5) * h);
            double r = std::abs(c);
            if (r > rInner && r < rOuter) {
                Point p(1);
                p[0] = c;
                cells.push_back(p);
            }
        }
    }
    return DomainSpec::grid(1, h, std::move(cells));
}

namespace {
bool samePoint(const Point& a, const Point& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}
}  // namespace

std::string toString(ValidationError e) {
    switch (e) {
        case ValidationError::DuplicateNode: return "duplicate-node";
        case ValidationError::NodeOutsideDomain: return "node-outside-domain";
        case ValidationError::HardyGridUnsupported: return "hardy-grid-unsupported";
        case ValidationError::CountMismatch: return "count-mismatch";
        case ValidationError::DimensionMismatch: return "dimension-mismatch";
        case ValidationError::EmptyGrid: return "empty-grid";
        case ValidationError::BadGridCell: return "bad-grid-cell";
        case ValidationError::BadGenerator: return "bad-generator";
    }
    return "unknown";
}

bool insideDomain(const DomainSpec& dom, const Point& z) {
    if (static_cast<int>(z.size()) != dom.dim) return false;
    switch (dom.kind) {
        case DomainKind::Polydisk:
            for (int i = 0; i < dom.dim; ++i)
                if (1.0 - std::abs(z[i]) < kBoundaryTol) return false;
            return true;
        case DomainKind::Ball:
            return 1.0 - z.norm() >= kBoundaryTol;
        case DomainKind::Grid: {
            double half = dom.h / 2.0;
            for (const Point& c : dom.cells) {
                bool in = true;
                for (int i = 0; i < dom.dim && in; ++i) {
                    if (std::abs(z[i].real() - c[i].real()) > half ||
                        std::abs(z[i].imag() - c[i].imag()) > half)
                        in = false;
                }
                if (in) return true;
            }
            return false;
        }
    }
    return false;
}

std::vector<Violation> validateInstance(const InterpolationInstance& inst) {
    std::vector<Violation> out;
    auto add = [&](ValidationError e, const std::string& d) { out.push_back({e, d}); };

    if (inst.space == SpaceKind::Hardy && inst.domain.kind == DomainKind::Grid)
        add(ValidationError::HardyGridUnsupported,
            "Hardy space is only defined on the polydisk and ball");

    if (inst.domain.kind == DomainKind::Grid) {
        if (inst.domain.cells.empty())
            add(ValidationError::EmptyGrid, "grid domain has no cells");
        if (inst.domain.h <= 0)
            add(ValidationError::BadGridCell, "grid cell size h must be positive");
        for (size_t i = 0; i < inst.domain.cells.size(); ++i) {
            if (static_cast<int>(inst.domain.cells[i].size()) != inst.domain.dim) {
                add(ValidationError::BadGridCell,
                    "cell " + std::to_string(i) + " has wrong dimension");
                break;
            }
        }
        // distinct cells
        for (size_t i = 0; i + 1 < inst.domain.cells.size(); ++i)
            for (size_t j = i + 1; j < inst.domain.cells.size(); ++j)
                if (samePoint(inst.domain.cells[i], inst.domain.cells[j])) {
                    add(ValidationError::BadGridCell, "grid cells are not distinct");
                    goto cells_done;
                }
    cells_done:;
    }

    if (inst.nodes.size() != inst.targets.size())
        add(ValidationError::CountMismatch,
            "node count " + std::to_string(inst.nodes.size()) + " != target count " +
                std::to_string(inst.targets.size()));

    for (size_t i = 0; i < inst.nodes.size(); ++i) {
        if (static_cast<int>(inst.nodes[i].size()) != inst.domain.dim) {
            add(ValidationError::DimensionMismatch,
                "node " + std::to_string(i) + " has wrong dimension");
            continue;
        }
        if (!insideDomain(inst.domain, inst.nodes[i]))
            add(ValidationError::NodeOutsideDomain, "node " + std::to_string(i));
    }

    for (size_t i = 0; i + 1 < inst.nodes.size(); ++i)
        for (size_t j = i + 1; j < inst.nodes.size(); ++j)
            if (samePoint(inst.nodes[i], inst.nodes[j]))
                add(ValidationError::DuplicateNode,
                    "nodes " + std::to_string(i) + " and " + std::to_string(j));

    if (!inst.algebra.full) {
        if (inst.algebra.generators.empty())
            add(ValidationError::BadGenerator, "generated algebra needs at least one generator");
        for (size_t i = 0; i < inst.algebra.generators.size(); ++i)
            if (inst.algebra.generators[i].dim() != inst.domain.dim)
                add(ValidationError::BadGenerator,
                    "generator " + std::to_string(i) + " has wrong dimension");
    }
    return out;
}

}  // namespace pick
