#pragma once

#include <cstdint>
#include <optional>

#include "uso/checks.hpp"
#include "uso/cube.hpp"
#include "uso/matrix.hpp"

namespace uso {

struct CensusReport {
  int n = 0;
  std::uint64_t total = 0;  // orientations examined / instances sampled
  std::uint64_t usos = 0;
  // class tallies over the USOs found
  std::uint64_t acyclic = 0;
  std::uint64_t locally_uniform = 0;
  std::uint64_t holt_klee = 0;
  std::uint64_t strongly_holt_klee = 0;
  std::uint64_t strong_hk_failures = 0;  // sampled-P mode: must stay 0
};

// Exhaustive census over all 2^{n 2^{n-1}} orientations (n <= 3 for the
// full sweep; the incremental strategy with screen pruning also handles
// n = 4 given patience). USO status uses the definitional 3^n-subcube
// test, cross-checked against the pairwise screen; disagreement throws.
CensusReport enumerate_usos(int n, bool prune = true);

// USO count only, via the chosen strategy (prune = incremental extension).
std::uint64_t count_usos(int n, bool prune);

// Class tallies for USOs induced by `trials` random P-instances. Any
// strongly-Holt-Klee failure is recorded in strong_hk_failures.
CensusReport census_sampled_p(int n, int trials, std::uint64_t seed);

struct FixedMatrixCount {
  int samples = 0;
  int degenerate_skipped = 0;
  int distinct = 0;                 // sampling lower bound on u(M)
  std::optional<int> exact = {};    // n = 2 sector enumeration
};

// Lower-bounds u(M) by sampling right-hand sides from a seeded rational
// grid with all coordinates nonzero, deduplicating the induced USOs.
// For n = 2 with exact_n2 set, additionally enumerates the open sectors
// of the central line arrangement of all A_B^{-1} rows, giving u(M)
// exactly. Throws NotPMatrixError.
FixedMatrixCount count_fixed_matrix_usos(const RationalMatrix& M, int samples,
                                         std::uint64_t seed,
                                         bool exact_n2 = false);

}  // namespace uso
