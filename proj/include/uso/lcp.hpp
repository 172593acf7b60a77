#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uso/checks.hpp"
#include "uso/cube.hpp"
#include "uso/matrix.hpp"

namespace uso {

// A basis B is the set of z-columns in play; it is in bijection with cube
// vertices through B(v) = { j : v_j = 1 }, so it shares the bitmask
// encoding of vertices.
using Basis = std::uint32_t;

struct NotPMatrixError : std::runtime_error {
  NotPMatrixError() : std::runtime_error("matrix is not a P-matrix") {}
};

struct DegenerateError : std::runtime_error {
  DegenerateError(std::uint32_t vertex, int coord)
      : std::runtime_error("degenerate instance: (A_B^{-1} q)_i = 0 at vertex " +
                           std::to_string(vertex) + ", coordinate " +
                           std::to_string(coord)),
        vertex(vertex),
        coord(coord) {}
  std::uint32_t vertex;
  int coord;
};

struct StepLimitError : std::runtime_error {
  StepLimitError() : std::runtime_error("pivot walk exceeded step limit") {}
};

struct LcpInstance {
  RationalMatrix M;
  RationalVector q;
};

struct LcpSolution {
  RationalVector w, z;
  Basis basis = 0;
};

// Exact per-(vertex, coordinate) signs of (A_{B(v)}^{-1} q)_i. Entries
// are -1 or +1; a zero anywhere is a degeneracy and is rejected.
struct SignVector {
  int n = 0;
  std::vector<int> signs;  // index v * n + (i-1)

  int sign(std::uint32_t v, int i) const { return signs[v * n + (i - 1)]; }
};

// All principal minors positive (2^n - 1 exact determinants).
bool is_p_matrix(const RationalMatrix& M);
// All off-diagonal entries non-positive.
bool is_z_matrix(const RationalMatrix& M);
bool is_k_matrix(const RationalMatrix& M);

// Column i is column i of -M if i in B, else column i of the identity.
RationalMatrix basis_matrix(const RationalMatrix& M, Basis B);

// All 2^n basis solutions A_{B(v)}^{-1} q, indexed by vertex.
std::vector<RationalVector> all_basis_solutions(const RationalMatrix& M,
                                                const RationalVector& q);

// True iff no entry of any basis solution vanishes.
bool is_nondegenerate(const RationalMatrix& M, const RationalVector& q);

// The USO induced by a nondegenerate P-LCP: v -> v+i iff
// (A_{B(v)}^{-1} q)_i < 0. Throws NotPMatrixError / DegenerateError.
Orientation induced_orientation(const RationalMatrix& M, const RationalVector& q);

// The full sign sequence; also checks sgn det A_{B(v)} = (-1)^{|B(v)|}
// during the sweep and throws std::logic_error on a violation.
SignVector sign_vector(const RationalMatrix& M, const RationalVector& q);

Orientation orientation_from_signs(const SignVector& sv);

// Finds the basis with A_B^{-1} q >= 0 and assembles w, z. Degenerate q
// is permitted. Throws NotPMatrixError.
LcpSolution solve_lcp(const RationalMatrix& M, const RationalVector& q);

enum class PivotRule { LeastIndex, Random };

// Sink-seeking walk in the induced USO; returns the vertex sequence
// including start and sink. Throws StepLimitError after n*2^n steps.
std::vector<std::uint32_t> pivot_walk(const RationalMatrix& M,
                                      const RationalVector& q,
                                      Vertex start, PivotRule rule,
                                      std::uint64_t seed = 0);

// q + (eps, eps^2, ..., eps^n) with eps = 1/2^k, k grown until the
// instance is nondegenerate (verified exactly). Throws std::runtime_error
// if 64 halvings do not suffice.
RationalVector perturb_nondegenerate(const RationalMatrix& M,
                                     const RationalVector& q);

}  // namespace uso
