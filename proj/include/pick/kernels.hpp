#pragma once

#include "pick/instance.hpp"

namespace pick {

/// Closed-form reproducing kernels on the polydisk and ball:
///   Hardy polydisk    prod_i 1/(1 - z_i conj(w_i))
///   Hardy ball        1/(1 - <z,w>)^d
///   Bergman polydisk  prod_i 1/(1 - z_i conj(w_i))^2
///   Bergman ball      1/(1 - <z,w>)^(d+1)
/// where <z,w> = sum_i z_i conj(w_i).
struct ClosedFormKernel {
    SpaceKind space;
    DomainSpec domain;  // Polydisk or Ball only

    ClosedFormKernel(SpaceKind s, DomainSpec d);

    Complex eval(const Point& z, const Point& w) const;
};

Complex hermitianInner(const Point& z, const Point& w);

}  // namespace pick
