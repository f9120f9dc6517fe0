#pragma once

#include <string>
#include <vector>

#include "pick/poly.hpp"

namespace pick {

enum class DomainKind { Polydisk, Ball, Grid };
enum class SpaceKind { Hardy, Bergman };

// Points closer to the boundary than this are rejected by interior checks;
// the kernel denominators degenerate there.
inline constexpr double kBoundaryTol = 1e-12;

struct DomainSpec {
    DomainKind kind = DomainKind::Polydisk;
    int dim = 1;
    // Grid only: cell side length and cell centers.
    double h = 0.0;
    std::vector<Point> cells;

    static DomainSpec polydisk(int d) { return {DomainKind::Polydisk, d, 0.0, {}}; }
    static DomainSpec ball(int d) { return {DomainKind::Ball, d, 0.0, {}}; }
    static DomainSpec grid(int d, double h, std::vector<Point> cells) {
        return {DomainKind::Grid, d, h, std::move(cells)};
    }
};

// Square-cell grids for the planar disk and annulus, cell centers strictly
// inside the region. The grid itself is treated as the exact domain.
DomainSpec makeGridDisk(double h);
DomainSpec makeGridAnnulus(double rInner, double rOuter, double h);

struct AlgebraSpec {
    bool full = true;
    // Generated only. The constant 1 is always implicitly included.
    std::vector<CPolynomial> generators;

    static AlgebraSpec fullAlgebra() { return {}; }
    static AlgebraSpec generated(std::vector<CPolynomial> gens) {
        return {false, std::move(gens)};
    }
};

struct InterpolationInstance {
    DomainSpec domain;
    SpaceKind space = SpaceKind::Hardy;
    AlgebraSpec algebra;
    std::vector<Point> nodes;
    std::vector<Complex> targets;
};

enum class ValidationError {
    DuplicateNode,
    NodeOutsideDomain,
    HardyGridUnsupported,
    CountMismatch,
    DimensionMismatch,
    EmptyGrid,
    BadGridCell,
    BadGenerator,
};

struct Violation {
    ValidationError code;
    std::string detail;
};

std::string toString(ValidationError e);

// True if z lies strictly inside the domain (boundary tolerance kBoundaryTol).
// For grids: z belongs to some cell's h-box.
bool insideDomain(const DomainSpec& dom, const Point& z);

// Empty result means the instance satisfies every invariant.
std::vector<Violation> validateInstance(const InterpolationInstance& inst);

}  // namespace pick
