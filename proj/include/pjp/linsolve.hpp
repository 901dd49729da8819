#pragma once

#include <vector>

#include "pjp/rational.hpp"

namespace pjp {

using RMatrix = std::vector<RVec>;

// Exact solution of A x = b for square nonsingular A. Solves modulo a run of
// 62-bit primes, lifts by CRT and rational reconstruction, and accepts the
// candidate only after an exact check of every equation. Falls back to
// rational Gaussian elimination. Throws SingularGram.
RVec solve_exact(const RMatrix& A, const RVec& b);

// Plain fraction Gaussian elimination with pivoting; the oracle path.
RVec solve_gauss(RMatrix A, RVec b);

}  // namespace pjp
