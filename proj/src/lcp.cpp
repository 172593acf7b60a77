#include "uso/lcp.hpp"

#include <bit>
#include <random>

namespace uso {

bool is_p_matrix(const RationalMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("non-square matrix");
  const int n = M.rows();
  for (std::uint32_t S = 1; S < (std::uint32_t{1} << n); ++S)
    if (sgn(M.principal_minor(S)) <= 0) return false;
  return true;
}

bool is_z_matrix(const RationalMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("non-square matrix");
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c)
      if (r != c && sgn(M.at(r, c)) > 0) return false;
  return true;
}

bool is_k_matrix(const RationalMatrix& M) {
  return is_z_matrix(M) && is_p_matrix(M);
}

RationalMatrix basis_matrix(const RationalMatrix& M, Basis B) {
  const int n = M.rows();
  RationalMatrix A = RationalMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    if (!((B >> c) & 1u)) continue;
    for (int r = 0; r < n; ++r) A.at(r, c) = -M.at(r, c);
  }
  return A;
}

std::vector<RationalVector> all_basis_solutions(const RationalMatrix& M,
                                                const RationalVector& q) {
  const int n = M.rows();
  if (q.size() != n) throw std::invalid_argument("q shape mismatch");
  std::vector<RationalVector> sols;
  sols.reserve(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v)
    sols.push_back(basis_matrix(M, v).solve(q));
  return sols;
}

bool is_nondegenerate(const RationalMatrix& M, const RationalVector& q) {
  for (const auto& x : all_basis_solutions(M, q))
    for (int i = 0; i < x.size(); ++i)
      if (sgn(x[i]) == 0) return false;
  return true;
}

namespace {

std::vector<std::uint32_t> outmap_from_solutions(
    const std::vector<RationalVector>& sols, int n) {
  std::vector<std::uint32_t> out(sols.size(), 0);
  for (std::uint32_t v = 0; v < sols.size(); ++v) {
    for (int i = 1; i <= n; ++i) {
      int s = sgn(sols[v][i - 1]);
      if (s == 0) throw DegenerateError(v, i);
      if (s < 0) out[v] |= coord_bit(i);
    }
  }
  return out;
}

}  // namespace

Orientation induced_orientation(const RationalMatrix& M, const RationalVector& q) {
  if (!is_p_matrix(M)) throw NotPMatrixError();
  const int n = M.rows();
  Orientation phi(n, outmap_from_solutions(all_basis_solutions(M, q), n));
  // Stickney-Watson guarantee; the screen is cheap enough to keep on
  if (!uso_screen(phi))
    throw std::logic_error("induced orientation failed the USO screen");
  return phi;
}

SignVector sign_vector(const RationalMatrix& M, const RationalVector& q) {
  if (!is_p_matrix(M)) throw NotPMatrixError();
  const int n = M.rows();
  SignVector sv{n, std::vector<int>(n << n, 0)};
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << n); ++v) {
    RationalMatrix A = basis_matrix(M, v);
    if (sgn(A.determinant()) != ((std::popcount(v) & 1) ? -1 : 1))
      throw std::logic_error("sgn det A_B != (-1)^|B|");
    RationalVector x = A.solve(q);
    for (int i = 1; i <= n; ++i) {
      int s = sgn(x[i - 1]);
      if (s == 0) throw DegenerateError(v, i);
      sv.signs[v * n + (i - 1)] = s;
    }
  }
  return sv;
}

Orientation orientation_from_signs(const SignVector& sv) {
  std::vector<std::uint32_t> out(std::size_t{1} << sv.n, 0);
  for (std::uint32_t v = 0; v < out.size(); ++v)
    for (int i = 1; i <= sv.n; ++i)
      if (sv.sign(v, i) < 0) out[v] |= coord_bit(i);
  return Orientation(sv.n, std::move(out));
}

LcpSolution solve_lcp(const RationalMatrix& M, const RationalVector& q) {
  if (!is_p_matrix(M)) throw NotPMatrixError();
  const int n = M.rows();
  for (std::uint32_t B = 0; B < (std::uint32_t{1} << n); ++B) {
    RationalVector x = basis_matrix(M, B).solve(q);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (sgn(x[i]) < 0) ok = false;
    if (!ok) continue;
    LcpSolution sol;
    sol.basis = B;
    sol.w = RationalVector(n);
    sol.z = RationalVector(n);
    for (int i = 0; i < n; ++i) {
      if ((B >> i) & 1u) sol.z[i] = x[i];
      else sol.w[i] = x[i];
    }
    return sol;
  }
  throw std::logic_error("no feasible basis found for a P-matrix LCP");
}

std::vector<std::uint32_t> pivot_walk(const RationalMatrix& M,
                                      const RationalVector& q, Vertex start,
                                      PivotRule rule, std::uint64_t seed) {
  if (!is_p_matrix(M)) throw NotPMatrixError();
  const int n = M.rows();
  if (start.n != n || start.bits >= (std::uint32_t{1} << n))
    throw std::invalid_argument("start vertex outside the cube");
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> path{start.bits};
  std::uint32_t v = start.bits;
  const std::uint64_t limit = static_cast<std::uint64_t>(n) << n;
  for (std::uint64_t step = 0;; ++step) {
    RationalVector x = basis_matrix(M, v).solve(q);
    std::vector<int> outgoing;
    for (int i = 1; i <= n; ++i) {
      int s = sgn(x[i - 1]);
      if (s == 0) throw DegenerateError(v, i);
      if (s < 0) outgoing.push_back(i);
    }
    if (outgoing.empty()) return path;
    if (step >= limit) throw StepLimitError();
    int i = outgoing.front();
    if (rule == PivotRule::Random && outgoing.size() > 1) {
      std::uniform_int_distribution<std::size_t> d(0, outgoing.size() - 1);
      i = outgoing[d(rng)];
    }
    v ^= coord_bit(i);
    path.push_back(v);
  }
}

RationalVector perturb_nondegenerate(const RationalMatrix& M,
                                     const RationalVector& q) {
  const int n = M.rows();
  for (int k = 1; k <= 64; ++k) {
    Rational eps = Rational(1) / rational_pow(2, k);
    RationalVector qp(n);
    Rational p = 1;
    for (int i = 0; i < n; ++i) {
      p *= eps;
      qp[i] = q[i] + p;
    }
    if (is_nondegenerate(M, qp)) return qp;
  }
  throw std::runtime_error("perturbation failed to reach nondegeneracy");
}

}  // namespace uso
