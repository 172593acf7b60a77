#include <doctest.h>

#include <random>

#include "uso/constructions.hpp"
#include "uso/matrix.hpp"
#include "uso/rational.hpp"

using namespace uso;

namespace {

RationalMatrix random_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  RationalMatrix M(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) M.at(r, c) = make_rational(num(rng), den(rng));
  return M;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("-6/3") == Rational(-2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(rational_to_string(Rational(1, 2)) == "1/2");
  CHECK(rational_to_string(Rational(-3)) == "-3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(sign_of(Rational(-1, 7)) == -1);
  CHECK(sign_of(Rational(0)) == 0);
}

TEST_CASE("determinant") {
  CHECK(RationalMatrix::identity(3).determinant() == 1);

  RationalMatrix A(2, 2);
  A.at(0, 0) = -1;
  A.at(0, 1) = 2;
  A.at(1, 1) = -1;
  CHECK(A.determinant() == 1);

  // unit upper-triangular members of the beta family
  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    BetaAssignment beta = BetaAssignment::sampled(4, rng);
    CHECK(k_family_matrix(beta).determinant() == 1);
  }

  RationalMatrix rect(2, 3);
  CHECK_THROWS_AS(rect.determinant(), std::invalid_argument);
}

TEST_CASE("solve") {
  RationalVector b(3);
  b[0] = Rational(1, 2);
  b[1] = -3;
  b[2] = Rational(7, 5);
  CHECK(RationalMatrix::identity(3).solve(b) == b);

  RationalMatrix A(2, 2);
  A.at(0, 0) = -1;
  A.at(0, 1) = Rational(3, 2);
  A.at(1, 1) = -1;
  RationalVector q(2);
  q[0] = -1;
  q[1] = 1;
  RationalVector x = A.solve(q);
  CHECK(x[0] == Rational(-1, 2));
  CHECK(x[1] == -1);

  RationalMatrix zero(2, 2);
  CHECK_THROWS_AS(zero.solve(q), SingularMatrixError);
}

TEST_CASE("solve residual is exactly zero") {
  std::mt19937_64 rng(11);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 10; ++t) {
      RationalMatrix A = random_matrix(n, rng);
      if (sgn(A.determinant()) == 0) continue;
      RationalVector b(n);
      std::uniform_int_distribution<int> num(-9, 9);
      for (int i = 0; i < n; ++i) b[i] = make_rational(num(rng), 4);
      RationalVector x = A.solve(b);
      RationalVector r = A.multiply(x);
      for (int i = 0; i < n; ++i) CHECK(r[i] == b[i]);
    }
}

TEST_CASE("det(A) det(A^-1) = 1") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 6; ++n) {
    int done = 0;
    while (done < 5) {
      RationalMatrix A = random_matrix(n, rng);
      Rational d = A.determinant();
      if (sgn(d) == 0) continue;
      CHECK(d * A.inverse().determinant() == 1);
      ++done;
    }
  }
}

TEST_CASE("principal minors") {
  for (std::uint32_t S = 1; S < 8; ++S)
    CHECK(RationalMatrix::identity(3).principal_minor(S) == 1);

  RationalMatrix A(2, 2);
  A.at(0, 0) = 1;
  A.at(0, 1) = 2;
  A.at(1, 1) = 1;
  CHECK(A.principal_minor(0b11) == 1);

  RationalMatrix B(2, 2);
  B.at(0, 1) = 1;
  B.at(1, 0) = 1;
  CHECK(B.principal_minor(0b01) == 0);

  CHECK_THROWS_AS(A.principal_minor(0), std::invalid_argument);
  CHECK_THROWS_AS(A.principal_minor(0b100), std::invalid_argument);
}
