#include <doctest.h>

#include <bit>
#include <random>

#include "uso/checks.hpp"
#include "uso/constructions.hpp"
#include "uso/lcp.hpp"
#include "uso/random.hpp"

using namespace uso;

namespace {

RationalMatrix beta2_matrix(const Rational& b12) {
  BetaAssignment beta(2);
  beta.set(1, 2, b12);
  return k_family_matrix(beta);
}

}  // namespace

TEST_CASE("matrix classes") {
  CHECK(is_p_matrix(RationalMatrix::identity(4)));
  CHECK(is_z_matrix(RationalMatrix::identity(4)));
  CHECK(is_k_matrix(RationalMatrix::identity(4)));

  RationalMatrix A(2, 2);
  A.at(0, 0) = 1;
  A.at(0, 1) = 2;
  A.at(1, 1) = 1;
  CHECK(is_p_matrix(A));  // minors 1, 1, 1
  CHECK_FALSE(is_z_matrix(A));
  CHECK_FALSE(is_k_matrix(A));

  RationalMatrix B(2, 2);
  B.at(0, 1) = 1;
  B.at(1, 0) = 1;
  CHECK_FALSE(is_p_matrix(B));  // minor {1} is 0

  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    BetaAssignment beta = BetaAssignment::sampled(4, rng);
    CHECK(is_k_matrix(k_family_matrix(beta)));
  }
}

TEST_CASE("basis matrix") {
  RationalMatrix M(2, 2);
  M.at(0, 0) = 1;
  M.at(0, 1) = Rational(-3, 2);
  M.at(1, 1) = 1;
  CHECK(basis_matrix(M, 0) == RationalMatrix::identity(2));

  RationalMatrix negM(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) negM.at(r, c) = -M.at(r, c);
  CHECK(basis_matrix(M, 0b11) == negM);

  RationalMatrix expect = RationalMatrix::identity(2);
  expect.at(0, 1) = Rational(3, 2);
  expect.at(1, 1) = -1;
  CHECK(basis_matrix(M, 0b10) == expect);
}

TEST_CASE("induced orientation, identity matrix") {
  RationalVector q(2);
  q[0] = -1;
  q[1] = -1;
  CHECK(induced_orientation(RationalMatrix::identity(2), q) ==
        Orientation::uniform(2));

  // closed form for all sign patterns, n <= 3
  for (int n = 1; n <= 3; ++n) {
    for (std::uint32_t signs = 0; signs < (std::uint32_t{1} << n); ++signs) {
      RationalVector qq(n);
      for (int i = 0; i < n; ++i) qq[i] = ((signs >> i) & 1u) ? 1 : -1;
      Orientation phi = induced_orientation(RationalMatrix::identity(n), qq);
      for (std::uint32_t v = 0; v < phi.vertex_count(); ++v)
        for (int i = 1; i <= n; ++i) {
          bool qi_neg = !((signs >> (i - 1)) & 1u);
          bool vi = (v >> (i - 1)) & 1u;
          CHECK(phi.edge_out(v, i) == (vi ? !qi_neg : qi_neg));
        }
    }
  }
}

TEST_CASE("degeneracy is reported with its witness") {
  RationalVector q(2);
  q[0] = 0;
  q[1] = 1;
  try {
    induced_orientation(RationalMatrix::identity(2), q);
    FAIL("expected DegenerateError");
  } catch (const DegenerateError& e) {
    CHECK(e.vertex == 0);
    CHECK(e.coord == 1);
  }
}

TEST_CASE("beta family at n = 2") {
  RationalVector q = k_family_q(2);
  Orientation plus = induced_orientation(beta2_matrix(Rational(1, 2)), q);
  CHECK(plus.out(0b00) == coord_bit(1));
  CHECK(plus.out(0b01) == 0);               // vertex 10
  CHECK(plus.out(0b10) == coord_bit(2));    // vertex 01
  CHECK(plus.out(0b11) == (coord_bit(1) | coord_bit(2)));

  Orientation minus = induced_orientation(beta2_matrix(Rational(-1, 2)), q);
  // exactly the edge between 01 and 11 flips with the sign of beta_{1,2}
  CHECK(minus.out(0b00) == plus.out(0b00));
  CHECK(minus.out(0b01) == plus.out(0b01));
  CHECK(minus.out(0b10) == (coord_bit(2) | coord_bit(1)));
  CHECK(minus.out(0b11) == coord_bit(2));
}

TEST_CASE("sign vector") {
  RationalVector q(2);
  q[0] = -1;
  q[1] = -1;
  SignVector sv = sign_vector(RationalMatrix::identity(2), q);
  for (std::uint32_t v = 0; v < 4; ++v)
    for (int i = 1; i <= 2; ++i)
      CHECK(sv.sign(v, i) == (((v >> (i - 1)) & 1u) ? 1 : -1));

  // reconstruction matches the direct route
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    RationalMatrix M = random_p_matrix(3, rng);
    RationalVector qq = random_nondegenerate_q(M, rng);
    CHECK(orientation_from_signs(sign_vector(M, qq)) ==
          induced_orientation(M, qq));
  }
}

TEST_CASE("sgn det A_B = (-1)^|B| for random P-matrices") {
  Rng rng(29);
  for (int t = 0; t < 50; ++t) {
    RationalMatrix M = random_p_matrix(4, rng);
    for (Basis B = 0; B < 16; ++B) {
      int expect = (std::popcount(B) % 2) ? -1 : 1;
      CHECK(sgn(basis_matrix(M, B).determinant()) == expect);
    }
  }
}

TEST_CASE("solve_lcp") {
  SUBCASE("q >= 0 solves with the empty basis") {
    RationalVector q(2);
    q[0] = 1;
    q[1] = 2;
    LcpSolution sol = solve_lcp(RationalMatrix::identity(2), q);
    CHECK(sol.basis == 0);
    CHECK(sol.w[0] == 1);
    CHECK(sol.w[1] == 2);
    CHECK(sol.z[0] == 0);
    CHECK(sol.z[1] == 0);
  }
  SUBCASE("beta family, q = (-1, 1)") {
    for (const Rational& b : {Rational(1, 2), Rational(-1, 4), Rational(0)}) {
      RationalMatrix M = beta2_matrix(b);
      LcpSolution sol = solve_lcp(M, k_family_q(2));
      CHECK(sol.basis == 0b01);
      CHECK(sol.z[0] == 1);
      CHECK(sol.z[1] == 0);
      CHECK(sol.w[0] == 0);
      CHECK(sol.w[1] == 1);
      // w - M z = q exactly
      RationalVector mz = M.multiply(sol.z);
      for (int i = 0; i < 2; ++i) CHECK(sol.w[i] - mz[i] == k_family_q(2)[i]);
    }
  }
  SUBCASE("exactly one feasible basis on nondegenerate instances") {
    Rng rng(31);
    for (int t = 0; t < 100; ++t) {
      RationalMatrix M = random_p_matrix(3, rng);
      RationalVector q = random_nondegenerate_q(M, rng);
      int feasible = 0;
      for (Basis B = 0; B < 8; ++B) {
        RationalVector x = basis_matrix(M, B).solve(q);
        bool ok = true;
        for (int i = 0; i < 3; ++i)
          if (sgn(x[i]) < 0) ok = false;
        if (ok) ++feasible;
      }
      CHECK(feasible == 1);
    }
  }
  SUBCASE("invariants of the assembled solution") {
    Rng rng(37);
    for (int t = 0; t < 25; ++t) {
      RationalMatrix M = random_p_matrix(3, rng);
      RationalVector q = random_q(3, rng);
      LcpSolution sol = solve_lcp(M, q);
      RationalVector mz = M.multiply(sol.z);
      for (int i = 0; i < 3; ++i) {
        CHECK(sol.w[i] - mz[i] == q[i]);
        CHECK(sgn(sol.w[i]) >= 0);
        CHECK(sgn(sol.z[i]) >= 0);
        CHECK(sol.w[i] * sol.z[i] == 0);
      }
    }
  }
  CHECK_THROWS_AS(solve_lcp(RationalMatrix(2, 2), RationalVector(2)),
                  NotPMatrixError);
}

TEST_CASE("pivot walk") {
  RationalMatrix I3 = RationalMatrix::identity(3);
  RationalVector q(3);
  for (int i = 0; i < 3; ++i) q[i] = -1;
  SUBCASE("least index on the uniform USO") {
    auto path = pivot_walk(I3, q, Vertex{3, 0}, PivotRule::LeastIndex);
    CHECK(path == std::vector<std::uint32_t>{0b000, 0b001, 0b011, 0b111});
  }
  SUBCASE("starting at the sink") {
    auto path = pivot_walk(I3, q, Vertex{3, 0b111}, PivotRule::LeastIndex);
    CHECK(path.size() == 1);
  }
  SUBCASE("random walks end at the LCP basis and follow outgoing edges") {
    Rng rng(41);
    for (int t = 0; t < 20; ++t) {
      RationalMatrix M = random_p_matrix(3, rng);
      RationalVector qq = random_nondegenerate_q(M, rng);
      std::uint32_t start = static_cast<std::uint32_t>(rng() & 7);
      auto path = pivot_walk(M, qq, Vertex{3, start}, PivotRule::Random, rng());
      CHECK(path.back() == solve_lcp(M, qq).basis);
      Orientation phi = induced_orientation(M, qq);
      for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        std::uint32_t diff = path[k] ^ path[k + 1];
        CHECK(std::popcount(diff) == 1);
        int i = std::countr_zero(diff) + 1;
        CHECK(phi.edge_out(path[k], i));
      }
    }
  }
}

TEST_CASE("perturbation reaches nondegeneracy") {
  RationalMatrix I2 = RationalMatrix::identity(2);
  RationalVector q(2);
  q[0] = 0;
  q[1] = -1;
  CHECK_FALSE(is_nondegenerate(I2, q));
  RationalVector qp = perturb_nondegenerate(I2, q);
  CHECK(is_nondegenerate(I2, qp));
  // strictly negative entries stay negative
  CHECK(sgn(qp[1]) < 0);
}
