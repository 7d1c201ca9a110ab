#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cyclomat {

using BigInt = mpz_class;
/// Always kept canonical: gcd(num, den) = 1, den > 0.
using Rational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(10); }

/// "num/den", or just "num" when the denominator is 1.
inline std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
  return make_rational(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

inline bool is_perfect_square(const BigInt& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

/// (-1)^e for a possibly negative exponent.
constexpr int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace cyclomat
