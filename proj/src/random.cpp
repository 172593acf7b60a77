#include "uso/random.hpp"

#include "uso/lcp.hpp"

namespace uso {

Rational random_grid_rational(Rng& rng, int denom, bool nonzero) {
  std::uniform_int_distribution<int> d(-(denom - 1), denom - 1);
  int k = d(rng);
  while (nonzero && k == 0) k = d(rng);
  return make_rational(k, denom);
}

RationalMatrix random_p_matrix(int n, Rng& rng) {
  std::uniform_int_distribution<int> off(-8, 8);
  std::uniform_int_distribution<int> diag(0, 8);
  RationalMatrix M(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      if (r != c) M.at(r, c) = make_rational(off(rng), 8);
    M.at(r, r) = Rational(n) + make_rational(diag(rng), 8);
  }
  if (!is_p_matrix(M)) throw std::logic_error("dominant matrix failed P test");
  return M;
}

RationalMatrix random_p_not_z_matrix(int n, Rng& rng) {
  while (true) {
    RationalMatrix M = random_p_matrix(n, rng);
    if (!is_z_matrix(M)) return M;
  }
}

RationalMatrix random_k_matrix(int n, Rng& rng) {
  std::uniform_int_distribution<int> off(0, 8);
  std::uniform_int_distribution<int> diag(0, 8);
  RationalMatrix M(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      if (r != c) M.at(r, c) = make_rational(-off(rng), 8);
    M.at(r, r) = Rational(n) + make_rational(diag(rng), 8);
  }
  if (!is_k_matrix(M)) throw std::logic_error("dominant Z-matrix failed K test");
  return M;
}

RationalVector random_q(int n, Rng& rng) {
  std::uniform_int_distribution<int> num(1, 64);
  std::uniform_int_distribution<int> s(0, 1);
  RationalVector q(n);
  for (int i = 0; i < n; ++i)
    q[i] = make_rational(s(rng) ? num(rng) : -num(rng), 64);
  return q;
}

RationalVector random_nondegenerate_q(const RationalMatrix& M, Rng& rng) {
  while (true) {
    RationalVector q = random_q(M.rows(), rng);
    if (is_nondegenerate(M, q)) return q;
  }
}

}  // namespace uso
