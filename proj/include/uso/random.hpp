#pragma once

#include <cstdint>
#include <random>

#include "uso/matrix.hpp"

namespace uso {

// All randomized routines take an explicit seeded generator so runs are
// reproducible bit for bit.
using Rng = std::mt19937_64;

// Uniform k/denom with k in [-(denom-1), denom-1]; nonzero if requested.
Rational random_grid_rational(Rng& rng, int denom, bool nonzero);

// Strictly diagonally dominant with positive diagonal, hence a P-matrix;
// verified exactly before returning. Off-diagonal entries on a 1/8 grid.
RationalMatrix random_p_matrix(int n, Rng& rng);

// P-matrix with at least one strictly positive off-diagonal entry.
RationalMatrix random_p_not_z_matrix(int n, Rng& rng);

// Diagonally dominant Z-matrix with positive diagonal (a K-matrix).
RationalMatrix random_k_matrix(int n, Rng& rng);

// Entries k/64, k in +-[1..64].
RationalVector random_q(int n, Rng& rng);

// Resamples q until LCP(M, q) is nondegenerate.
RationalVector random_nondegenerate_q(const RationalMatrix& M, Rng& rng);

}  // namespace uso
