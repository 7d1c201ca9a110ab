#pragma once

// Multiplicative characters of F_q, exact Gauss sums in Q(zeta_{q-1}, zeta_p),
// and the classical identities they satisfy.
//
// Characters are powers of the fixed generator chi with chi(g) = zeta_{q-1},
// g being the generator chosen by build_field.  Reducing zeta_{q-1} -> g
// therefore turns chi into the Teichmueller character of the prime above p
// that this reduction singles out.

#include "cyclomat/bigint.hpp"
#include "cyclomat/cyclotomic.hpp"
#include "cyclomat/finite_field.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace cyclomat {

class GaussContext;
using GaussContextPtr = std::shared_ptr<const GaussContext>;

/// F_q together with L = Q(zeta_{q-1}, zeta_p) and a Gauss-sum cache.
class GaussContext {
 public:
  static GaussContextPtr make(FqCtxPtr field);
  static GaussContextPtr make(int p, int n);

  const FqCtx& field() const { return *field_; }
  const FqCtxPtr& field_ptr() const { return field_; }
  const CycloCtxPtr& cyclo() const { return cyclo_; }
  int q() const { return field_->q(); }
  int p() const { return field_->p(); }
  int n() const { return field_->n(); }
  /// q - 1, the order of the character group.
  int group_order() const { return field_->q() - 1; }

  /// G_q(chi^t); thread-safe, computed once per t modulo q - 1.
  CycloElem gauss_sum(std::int64_t t) const;

 private:
  explicit GaussContext(FqCtxPtr field);
  CycloElem compute_gauss_sum(int t) const;

  FqCtxPtr field_;
  CycloCtxPtr cyclo_;
  mutable std::mutex mu_;
  mutable std::vector<std::optional<CycloElem>> cache_;
};

/// chi^t, with t taken modulo q - 1.
class Character {
 public:
  Character(GaussContextPtr ctx, std::int64_t t);

  const GaussContextPtr& context() const { return ctx_; }
  int exponent() const { return t_; }
  bool is_trivial() const { return t_ == 0; }
  /// min{r >= 1 : psi^r = trivial}.
  int order() const;
  Character pow(std::int64_t e) const { return Character(ctx_, static_cast<std::int64_t>(t_) * e); }
  Character inverse() const { return pow(-1); }
  Character operator*(const Character& other) const { return Character(ctx_, t_ + other.t_); }
  /// psi(-1), always +1 or -1.
  int value_at_minus_one() const;

 private:
  GaussContextPtr ctx_;
  int t_;
};

/// psi(x) for x given by its field index; psi(0) = 0.
CycloElem char_eval(const Character& ch, int x);
CycloElem char_eval(const Character& ch, const FqElem& x);

CycloElem gauss_sum(const Character& ch);

/// 1 / G_q(psi) through the reflection psi(-1) G_q(psi^-1) / q; -1 for the
/// trivial character.
CycloElem gauss_sum_inverse(const Character& ch);

/// Jacobi symbol (a/m) for odd m >= 1.  Throws std::invalid_argument for even
/// or nonpositive m.
int jacobi_symbol(std::int64_t a, std::int64_t m);

/// Sign of the permutation x -> a x of Z/m.  Throws std::invalid_argument
/// unless gcd(a, m) = 1.
int lerch_sign(std::int64_t a, std::int64_t m);

struct DigitStats {
  int digit_sum = 0;          // s(r)
  BigInt factorial_product;   // t(r) = prod r_j!
};

/// Base-p digits of 0 <= r <= p^n - 2.
DigitStats digit_stats(std::int64_t r, int p, int n);

/// Element of F_q[t] / (t^(p-1)), coefficients as field indices.
struct LocalElem {
  std::vector<int> coeffs;
  bool is_zero() const;
  friend bool operator==(const LocalElem&, const LocalElem&) = default;
};

/// Reduction zeta_{q-1} -> g, zeta_p -> 1 + t, rationals mod p.  Requires the
/// context of e to be Q(zeta_{q-1}, zeta_p) for this field.  Throws
/// std::domain_error when a denominator is divisible by p.
LocalElem to_local(const CycloElem& e, const FqCtx& field);

struct CheckResult {
  bool pass = false;
  std::string expected;
  std::string computed;
};

/// Leading-term form of G_q(chi^-r) in F_q[t]/(t^(p-1)): zero below t^s(r)
/// and -1/t(r) at t^s(r) when s(r) <= p - 2, identically zero otherwise.
CheckResult stickelberger_check(const GaussContext& ctx, std::int64_t r);

/// G_q(psi o N) = (-1)^(n-1) G_p(psi)^n for psi = chi_p^t.
CheckResult hd_lifting_check(int p, int n, std::int64_t t);

/// prod_a G(psi rho^a) = -psi^-m(m) G(psi^m) prod_a G(rho^a) for
/// psi = chi^t, rho = chi^a0 of order m.  Throws std::invalid_argument when
/// ord(rho) != m.
CheckResult hd_product_check(const GaussContext& ctx, int m, std::int64_t t, std::int64_t a0);

/// Human-readable form of a local element, e.g. "[0, 4, 0]".
std::string to_string(const LocalElem& e);

}  // namespace cyclomat
