#pragma once

#include <vector>

#include "pick/pickmat.hpp"

namespace pick {

/// One stage of the Schur-Nevanlinna recursion: the node that was peeled off
/// and its parameter gamma in the closed unit disk. A step with |gamma| = 1
/// terminates the chain (the interpolant is rigid from that stage on).
struct SchurStep {
    Complex node;
    Complex gamma;
};

struct SchurChain {
    std::vector<SchurStep> steps;
    Complex terminal = 0.0;  // the free tail parameter; 0 picks the Blaschke-type solution
    bool rigid = false;      // Pick matrix was nearly singular; denominators are delicate
};

struct DiskSolveResult {
    bool feasible = false;
    SchurChain chain;      // meaningful only when feasible
    double lambdaMin = 0;  // smallest eigenvalue of the classical Pick matrix
};

// [(1 - w_i conj(w_j)) / (1 - z_i conj(z_j))], the Szego-kernel Pick matrix.
CMatrix classicalPickMatrix(const std::vector<Complex>& nodes,
                            const std::vector<Complex>& targets);

// Full decision for the disk: PSD test of the single classical Pick matrix,
// then chain construction by one Mobius reduction per node.
DiskSolveResult solveDisk(const std::vector<Complex>& nodes,
                          const std::vector<Complex>& targets, double tol = kPsdTol);

// Unwinds the chain; |result| <= 1 on the open disk.
Complex evalInterpolant(const SchurChain& chain, Complex z);

}  // namespace pick
