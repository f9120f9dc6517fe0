#pragma once

#include <stdexcept>

namespace pick {

// The measure |f|^2 mu is numerically zero (f = 0, or f vanishes on the grid support).
struct DegenerateMeasureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point lies outside Omega_f: <f, k_z^f> vanishes, so the
// rescaled kernel j^f is undefined there.
struct OutsideOmegaFError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pick
