#include "uso/rational.hpp"

#include <stdexcept>

namespace uso {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

Rational rational_pow(long base, unsigned exp) {
  mpz_class n;
  mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), exp);
  if (base < 0 && (exp & 1u)) n = -n;
  return Rational(n);
}

}  // namespace uso
