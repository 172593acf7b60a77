#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "uso/cube.hpp"
#include "uso/lcp.hpp"
#include "uso/matrix.hpp"
#include "uso/random.hpp"

namespace uso {

// Truth table of a monotone Boolean function on k variables; table[x] is
// indexed by the usual little-endian vertex encoding. Monotonicity is
// validated on construction.
class MonotoneFunction {
 public:
  MonotoneFunction(int k, std::vector<bool> table);

  int arity() const { return k_; }
  bool operator()(std::uint32_t x) const { return table_[x]; }
  const std::vector<bool>& table() const { return table_; }
  bool operator==(const MonotoneFunction&) const = default;

 private:
  int k_;
  std::vector<bool> table_;
};

// f_A(x) = 1 iff some y in A has y <= x componentwise. Every member of A
// must lie on the middle layer (exactly floor(k/2) ones).
MonotoneFunction antichain_function(const std::vector<std::uint32_t>& A, int k);

// All monotone Boolean functions of arity k, by brute force (k <= 4).
std::vector<MonotoneFunction> enumerate_monotone_functions(int k);

// The n-USO built from an (n-1)-variate monotone function: coordinates
// below n point 0 -> 1; the edge in coordinate n leaves v iff
// v_n + f(v') = 1 where v' is the first n-1 bits of v.
Orientation monotone_uso(const MonotoneFunction& f);

// Same construction with the roles of 0 and 1 swapped in coordinate n
// of coordinate n; still Holt-Klee but not necessarily locally uniform.
Orientation monotone_uso_swapped(const MonotoneFunction& f);

// The parameters beta_{i,j}, 1 <= i < j <= n, of the upper-triangular
// family M(beta).
class BetaAssignment {
 public:
  explicit BetaAssignment(int n);

  int dim() const { return n_; }
  const Rational& at(int i, int j) const;
  void set(int i, int j, Rational value);
  // True iff all |beta_{i,j}| < 1, which makes M(beta) a K-matrix.
  bool in_k_range() const;
  Rational max_abs() const;

  static BetaAssignment sampled(int n, Rng& rng);  // grid 1/64, |beta| < 1

 private:
  int n_;
  std::vector<Rational> b_;  // row-major upper triangle
  int slot(int i, int j) const;
};

// Unit upper-triangular M(beta): entry (i, j) = -1 - beta_{i,j} for i < j.
RationalMatrix k_family_matrix(const BetaAssignment& beta);
// The companion right-hand side (-1, 1, -1, ..., (-1)^n).
RationalVector k_family_q(int n);

// Strict total order on index pairs: by column, then by decreasing row.
bool prec_less(std::pair<int, int> a, std::pair<int, int> b);
// Successor of (r, m): (r-1, m) if r > 1, else (m, m+1).
std::pair<int, int> prec_successor(std::pair<int, int> p);

struct InverseEntryReport {
  int entries_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Verifies the closed-form shape of A_B(beta)^{-1} entry by entry:
// sigma_r * entry(r,s) is 1 on the diagonal, 0 below it and on columns
// outside B, equals 2^{p(B,r,s)} at beta = 0 otherwise, and depends on
// beta_{r,s} with unit linear coefficient (checked by exact finite
// differences in that single variable).
InverseEntryReport inverse_entry_check(int n, Basis B);

struct ResidualCheck {
  int checked = 0;
  int violations = 0;
};

// Residual bound sanity: for every basis B with max B = m and all other
// members of parity m+1, and every admissible r, the residual
// t' = beta_{r,m} - (-1)^m (A_B^{-1} q)_r satisfies
// |t'| <= 9^{m-r+1} * max|beta|.
ResidualCheck residual_bound_check(const BetaAssignment& beta);

struct KSampleResult {
  int trials = 0;
  int degenerate_skipped = 0;
  std::vector<Orientation> distinct;  // sorted, deduplicated
};

// Draws beta uniformly from the 1/64 grid in (-1,1)^{n(n-1)/2} and
// collects the distinct induced USOs. Every sample is verified to be a
// K-matrix and every orientation to be locally uniform.
KSampleResult sample_k_usos(int n, int trials, std::uint64_t seed);

// Guaranteed number of distinct K-USOs from the family at
// dimension n: prod over m of prod over admissible r of (2^{(m-r-1)/2}+1).
std::uint64_t k_family_lower_bound(int n);

struct WitnessResult {
  RationalVector q;
  int i = 0, j = 0;  // coordinates of the violated 2-face at vertex 0
};

// For a P-matrix that is not a K-matrix, produces a nondegenerate q whose
// induced USO violates local uniformity at vertex 0 in coordinates (i, j):
// both edges outgoing at 0, edge i not incoming at e_i + e_j. Returns
// nullopt for K-matrices. Throws NotPMatrixError.
std::optional<WitnessResult> local_uniformity_witness(const RationalMatrix& M);

}  // namespace uso
