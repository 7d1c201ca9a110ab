#include "cyclomat/closed_forms.hpp"

#include <stdexcept>

namespace cyclomat::closed_form {

BigInt det_A1(std::int64_t q) {
  if (q < 2) throw std::invalid_argument("det_A1: q must be at least 2");
  const BigInt mag = pow_int(BigInt(static_cast<long>(q - 1)), static_cast<unsigned long>(q - 1));
  return sign_pow((q - 2) * (q - 3) / 2) < 0 ? BigInt(-mag) : mag;
}

BigInt det_A2(int p, int n) {
  if (p % 2 == 0) throw std::invalid_argument("det_A2: q must be odd");
  std::int64_t q = 1;
  for (int i = 0; i < n; ++i) q *= p;
  const std::int64_t half = (q - 1) / 2;
  const std::int64_t alpha = (n % 2 == 1) ? 1 : (static_cast<std::int64_t>(p) * p + 7) / 8;
  const std::int64_t two_exp = (q / p - 1) / 2;
  BigInt mag = pow_int(BigInt(static_cast<long>(half)), static_cast<unsigned long>(half)) *
               pow_int(BigInt(2), static_cast<unsigned long>(two_exp));
  return sign_pow(alpha) < 0 ? BigInt(-mag) : mag;
}

int det_A_residue(std::int64_t m, int p) {
  const int s = sign_pow((m * m - m + 2) / 2);
  return s > 0 ? 1 % p : p - 1;
}

Rational det_B1(int p) {
  const std::int64_t pp = p;
  Rational r = make_rational(pow_int(BigInt(p - 1), static_cast<unsigned long>(p - 1)),
                             pow_int(BigInt(p), static_cast<unsigned long>(p - 2)));
  return sign_pow(pp * (pp + 1) / 2) < 0 ? Rational(-r) : r;
}

Rational det_B2(int p) {
  if (p % 2 == 0) throw std::invalid_argument("det_B2: p must be odd");
  const std::int64_t pp = p;
  const Rational base = make_rational(p - 1, 2 * p);
  Rational r = Rational(p) * pow_rational(base, static_cast<unsigned long>((p - 1) / 2));
  r.canonicalize();
  return sign_pow((pp + 3) * (pp - 1) / 4) < 0 ? Rational(-r) : r;
}

Rational det_B2_with_reversal(int p) {
  const Rational r = det_B2(p);
  return sign_of_negation((p - 1) / 2) < 0 ? Rational(-r) : r;
}

BigInt gamma_hankel(int n) {
  BigInt r = 1;
  for (int k = 0; k < n; ++k) r *= factorial(k) * factorial(k + 1);
  return r;
}

Rational gamma_reciprocal_hankel(int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= make_rational(factorial(k), factorial(n + k));
  r.canonicalize();
  const std::int64_t nn = n;
  return sign_pow(nn * (nn - 1) / 2) < 0 ? Rational(-r) : r;
}

int sign_of_negation(std::int64_t m) { return sign_pow((m - 1) * (m - 2) / 2); }

}  // namespace cyclomat::closed_form
