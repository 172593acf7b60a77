#include "uso/constructions.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "uso/checks.hpp"

namespace uso {

MonotoneFunction::MonotoneFunction(int k, std::vector<bool> table)
    : k_(k), table_(std::move(table)) {
  if (k < 0 || k > 20) throw std::invalid_argument("arity out of range");
  if (table_.size() != (std::size_t{1} << k))
    throw std::invalid_argument("table size must be 2^k");
  for (std::uint32_t x = 0; x < table_.size(); ++x)
    for (int b = 0; b < k; ++b)
      if (!((x >> b) & 1u) && table_[x] && !table_[x | (1u << b)])
        throw std::invalid_argument("function is not monotone");
}

MonotoneFunction antichain_function(const std::vector<std::uint32_t>& A, int k) {
  const int mid = k / 2;
  std::vector<bool> table(std::size_t{1} << k, false);
  for (std::uint32_t y : A) {
    if (y >= table.size() || std::popcount(y) != mid)
      throw std::invalid_argument("antichain member off the middle layer");
    for (std::uint32_t x = 0; x < table.size(); ++x)
      if ((x & y) == y) table[x] = true;
  }
  return MonotoneFunction(k, std::move(table));
}

std::vector<MonotoneFunction> enumerate_monotone_functions(int k) {
  if (k < 0 || k > 4)
    throw std::invalid_argument("monotone enumeration supported for k <= 4");
  const std::uint32_t cells = std::uint32_t{1} << k;
  std::vector<MonotoneFunction> fs;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << cells); ++t) {
    std::vector<bool> table(cells);
    for (std::uint32_t x = 0; x < cells; ++x) table[x] = (t >> x) & 1u;
    bool mono = true;
    for (std::uint32_t x = 0; x < cells && mono; ++x)
      for (int b = 0; b < k && mono; ++b)
        if (!((x >> b) & 1u) && table[x] && !table[x | (1u << b)]) mono = false;
    if (mono) fs.emplace_back(k, std::move(table));
  }
  return fs;
}

namespace {

Orientation monotone_uso_impl(const MonotoneFunction& f, bool swapped) {
  const int n = f.arity() + 1;
  const std::uint32_t prefix = (std::uint32_t{1} << f.arity()) - 1;
  std::vector<std::uint32_t> out(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < out.size(); ++v) {
    std::uint32_t m = full_coord_set(n - 1) & ~v;  // coords < n point 0 -> 1
    bool vn = (v >> (n - 1)) & 1u;
    bool fv = f(v & prefix);
    if (swapped ? (vn == fv) : (vn != fv)) m |= coord_bit(n);
    out[v] = m;
  }
  return Orientation(n, std::move(out));
}

}  // namespace

Orientation monotone_uso(const MonotoneFunction& f) {
  return monotone_uso_impl(f, false);
}

Orientation monotone_uso_swapped(const MonotoneFunction& f) {
  return monotone_uso_impl(f, true);
}

BetaAssignment::BetaAssignment(int n) : n_(n) {
  if (n < 1 || n > 31) throw std::invalid_argument("dimension out of range");
  b_.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
}

int BetaAssignment::slot(int i, int j) const {
  if (i < 1 || i >= j || j > n_) throw std::invalid_argument("bad beta index pair");
  return (j - 1) * (j - 2) / 2 + (i - 1);
}

const Rational& BetaAssignment::at(int i, int j) const { return b_[slot(i, j)]; }

void BetaAssignment::set(int i, int j, Rational value) {
  b_[slot(i, j)] = std::move(value);
}

bool BetaAssignment::in_k_range() const {
  for (const auto& v : b_)
    if (abs(v) >= 1) return false;
  return true;
}

Rational BetaAssignment::max_abs() const {
  Rational m = 0;
  for (const auto& v : b_) m = std::max(m, Rational(abs(v)));
  return m;
}

BetaAssignment BetaAssignment::sampled(int n, Rng& rng) {
  BetaAssignment beta(n);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i)
      beta.set(i, j, random_grid_rational(rng, 64, false));
  return beta;
}

RationalMatrix k_family_matrix(const BetaAssignment& beta) {
  const int n = beta.dim();
  RationalMatrix M = RationalMatrix::identity(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      M.at(i - 1, j - 1) = Rational(-1) - beta.at(i, j);
  return M;
}

RationalVector k_family_q(int n) {
  RationalVector q(n);
  for (int i = 0; i < n; ++i) q[i] = (i % 2 == 0) ? -1 : 1;
  return q;
}

bool prec_less(std::pair<int, int> a, std::pair<int, int> b) {
  if (a.second != b.second) return a.second < b.second;
  return a.first > b.first;
}

std::pair<int, int> prec_successor(std::pair<int, int> p) {
  auto [r, m] = p;
  if (r > 1) return {r - 1, m};
  return {m, m + 1};
}

namespace {

int p_count(Basis B, int r, int s) {
  int p = 0;
  for (int j = r + 1; j < s; ++j)
    if ((B >> (j - 1)) & 1u) ++p;
  return p;
}

}  // namespace

InverseEntryReport inverse_entry_check(int n, Basis B) {
  InverseEntryReport rep;
  auto check_at = [&](const BetaAssignment& beta, const Rational& delta, int dr,
                      int ds) {
    RationalMatrix inv = basis_matrix(k_family_matrix(beta), B).inverse();
    for (int r = 1; r <= n; ++r) {
      Rational sigma = ((B >> (r - 1)) & 1u) ? -1 : 1;
      for (int s = 1; s <= n; ++s) {
        Rational e = sigma * inv.at(r - 1, s - 1);
        Rational expect;
        if (r == s) expect = 1;
        else if (r > s || !((B >> (s - 1)) & 1u)) expect = 0;
        else {
          expect = rational_pow(2, static_cast<unsigned>(p_count(B, r, s)));
          if (r == dr && s == ds) expect += delta;  // unit linear coefficient
          else if (dr != 0) continue;  // other entries may involve delta too
        }
        ++rep.entries_checked;
        if (e != expect)
          rep.mismatches.push_back("B=" + std::to_string(B) + " entry(" +
                                   std::to_string(r) + "," + std::to_string(s) +
                                   ") = " + rational_to_string(e) +
                                   ", expected " + rational_to_string(expect));
      }
    }
  };

  // full shape at beta = 0
  check_at(BetaAssignment(n), 0, 0, 0);
  // unit coefficient of beta_{r,s}: with all other variables zero the
  // dependence is exactly linear, so one exact offset per entry suffices;
  // two offsets guard against an accidental match
  for (int s = 2; s <= n; ++s) {
    if (!((B >> (s - 1)) & 1u)) continue;
    for (int r = 1; r < s; ++r) {
      for (const Rational& delta : {Rational(1, 3), Rational(-2, 7)}) {
        BetaAssignment beta(n);
        beta.set(r, s, delta);
        check_at(beta, delta, r, s);
      }
    }
  }
  return rep;
}

ResidualCheck residual_bound_check(const BetaAssignment& beta) {
  const int n = beta.dim();
  const RationalMatrix M = k_family_matrix(beta);
  const RationalVector q = k_family_q(n);
  const Rational bbar = beta.max_abs();
  ResidualCheck res;
  for (int m = 2; m <= n; ++m) {
    std::vector<int> allowed;  // r < m with r = m+1 (mod 2)
    for (int r = 1; r < m; ++r)
      if ((r % 2) == ((m + 1) % 2)) allowed.push_back(r);
    const std::uint32_t k = static_cast<std::uint32_t>(allowed.size());
    for (std::uint32_t T = 0; T < (std::uint32_t{1} << k); ++T) {
      Basis B = coord_bit(m);
      for (std::uint32_t t = 0; t < k; ++t)
        if ((T >> t) & 1u) B |= coord_bit(allowed[t]);
      RationalVector x = basis_matrix(M, B).solve(q);
      for (int r : allowed) {
        Rational signed_x = x[r - 1];
        if (m % 2) signed_x = -signed_x;
        Rational tprime = beta.at(r, m) - signed_x;
        Rational bound = rational_pow(9, static_cast<unsigned>(m - r + 1)) * bbar;
        ++res.checked;
        if (abs(tprime) > bound) ++res.violations;
      }
    }
  }
  return res;
}

KSampleResult sample_k_usos(int n, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  Rng rng(seed);
  KSampleResult result;
  result.trials = trials;
  const RationalVector q = k_family_q(n);
  std::set<Orientation> seen;
  for (int t = 0; t < trials; ++t) {
    BetaAssignment beta = BetaAssignment::sampled(n, rng);
    RationalMatrix M = k_family_matrix(beta);
    if (!beta.in_k_range() || !is_k_matrix(M))
      throw std::logic_error("sampled matrix is not a K-matrix");
    try {
      Orientation phi = induced_orientation(M, q);
      if (seen.insert(phi).second && !is_locally_uniform(phi))
        throw std::logic_error("K-USO failed local uniformity");
    } catch (const DegenerateError&) {
      ++result.degenerate_skipped;
    }
  }
  result.distinct.assign(seen.begin(), seen.end());
  return result;
}

std::uint64_t k_family_lower_bound(int n) {
  std::uint64_t prod = 1;
  for (int m = 1; m <= n; ++m)
    for (int r = m - 1; r >= 1; r -= 2)
      prod *= (std::uint64_t{1} << ((m - r - 1) / 2)) + 1;
  return prod;
}

std::optional<WitnessResult> local_uniformity_witness(const RationalMatrix& M) {
  if (!is_p_matrix(M)) throw NotPMatrixError();
  const int n = M.rows();
  int wi = 0, wj = 0;
  for (int r = 1; r <= n && wi == 0; ++r)
    for (int c = 1; c <= n; ++c)
      if (r != c && sgn(M.at(r - 1, c - 1)) > 0) {
        wi = r;
        wj = c;
        break;
      }
  if (wi == 0) return std::nullopt;  // Z and P, hence K

  // q concentrated on coordinates (wi, wj); the 2x2 principal block then
  // pins (A_{B}^{-1} q)_{wi} = -m_{wi,wj} / det < 0 at B = {wi, wj}
  RationalVector q(n);
  q[wi - 1] = -M.at(wi - 1, wj - 1);
  q[wj - 1] = -(M.at(wj - 1, wj - 1) + 1);

  const Basis Bij = coord_bit(wi) | coord_bit(wj);
  for (int k = 1; k <= 128; ++k) {
    Rational eps = Rational(1) / rational_pow(2, static_cast<unsigned>(k));
    RationalVector qp(n);
    Rational p = 1;
    for (int i = 0; i < n; ++i) {
      p *= eps;
      qp[i] = q[i] + p;
    }
    if (!is_nondegenerate(M, qp)) continue;
    // strict inequalities survive a small enough perturbation
    if (sgn(qp[wi - 1]) >= 0 || sgn(qp[wj - 1]) >= 0) continue;
    RationalVector x = basis_matrix(M, Bij).solve(qp);
    if (sgn(x[wi - 1]) >= 0) continue;
    return WitnessResult{qp, wi, wj};
  }
  throw std::runtime_error("perturbation failed to preserve the witness");
}

}  // namespace uso
