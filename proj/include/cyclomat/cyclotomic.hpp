#pragma once

// Exact arithmetic in L = Q(zeta_N, zeta_p) with gcd(N, p) = 1.
//
// Elements are stored densely on the basis zeta_N^u zeta_p^v with
// 0 <= u < phi(N), 0 <= v < p - 1, as integer numerators over one positive
// common denominator.  Every operation returns the fully reduced canonical
// form, so equality is coefficient-wise.

#include "cyclomat/bigint.hpp"

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cyclomat {

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
std::vector<BigInt> cyclotomic_poly(unsigned n);

/// Euler's totient by trial division.
std::uint64_t euler_phi(std::uint64_t n);

class CycloCtx;
using CycloCtxPtr = std::shared_ptr<const CycloCtx>;

class CycloCtx {
 public:
  /// Throws std::invalid_argument unless N >= 1, p prime and gcd(N, p) = 1.
  static CycloCtxPtr make(int N, int p);

  int order_n() const { return n_; }
  int prime() const { return p_; }
  int deg_n() const { return deg_n_; }
  int deg_p() const { return p_ - 1; }
  /// Degree of L over Q.
  int dim() const { return deg_n_ * (p_ - 1); }

  const std::vector<BigInt>& phi_n() const { return phi_n_; }
  const std::vector<BigInt>& phi_p() const { return phi_p_; }

  /// Residue of x^a modulo Phi_N for 0 <= a < N, length deg_n().
  std::span<const std::int64_t> power_residue(int a) const {
    return {power_residues_.data() + static_cast<std::size_t>(a) * deg_n_,
            static_cast<std::size_t>(deg_n_)};
  }
  std::span<const std::int64_t> phi_n_small() const { return phi_n_small_; }

  const std::vector<std::complex<double>>& root_n() const { return root_n_; }
  const std::vector<std::complex<double>>& root_p() const { return root_p_; }

  bool same_field(const CycloCtx& other) const {
    return n_ == other.n_ && p_ == other.p_;
  }

 private:
  CycloCtx(int N, int p);

  int n_ = 1;
  int p_ = 2;
  int deg_n_ = 1;
  std::vector<BigInt> phi_n_;
  std::vector<BigInt> phi_p_;
  std::vector<std::int64_t> phi_n_small_;
  std::vector<std::int64_t> power_residues_;
  std::vector<std::complex<double>> root_n_;
  std::vector<std::complex<double>> root_p_;
};

class CycloElem {
 public:
  /// Detached zero with no field attached; only useful as a placeholder
  /// before assignment (e.g. inside Eigen containers).
  CycloElem() = default;

  static CycloElem zero(CycloCtxPtr ctx);
  static CycloElem one(CycloCtxPtr ctx);
  static CycloElem constant(CycloCtxPtr ctx, const Rational& c);
  /// zeta_N^a * zeta_p^b; exponents may be any integers.
  static CycloElem monomial(CycloCtxPtr ctx, std::int64_t a, std::int64_t b);
  /// sum over (a, b) of counts[a * p + b] * zeta_N^a zeta_p^b,
  /// with counts of size N * p.
  static CycloElem from_exponent_counts(CycloCtxPtr ctx,
                                        std::span<const std::int64_t> counts);

  const CycloCtxPtr& context() const { return ctx_; }
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }
  Rational coeff(int u, int v) const;

  bool is_zero() const;
  bool is_integral() const { return den_ == 1; }
  /// True when the element lies in Q.
  bool is_rational() const;
  /// Throws std::domain_error when the element is not rational.
  Rational to_rational() const;

  CycloElem& operator+=(const CycloElem& b);
  CycloElem& operator-=(const CycloElem& b);
  CycloElem& operator*=(const CycloElem& b);
  CycloElem& operator*=(const Rational& c);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(const CycloElem& a, const CycloElem& b);
  friend CycloElem operator*(CycloElem a, const Rational& c) { return a *= c; }
  friend CycloElem operator*(const Rational& c, CycloElem a) { return a *= c; }
  CycloElem operator-() const;

  friend bool operator==(const CycloElem& a, const CycloElem& b);

  /// Negative exponents go through inverse().
  CycloElem pow(std::int64_t e) const;
  /// Throws std::domain_error on zero.
  CycloElem inverse() const;

  CycloElem times_zeta_n() const;
  CycloElem times_zeta_p() const;

  /// Image under the inclusion into Q(zeta_M, zeta_p) with N | M, sending
  /// zeta_N to zeta_M^(M/N).
  CycloElem lift_to(CycloCtxPtr target) const;

  /// Sum of absolute values of the coefficients; bounds |sigma(x)| for
  /// every embedding sigma.
  double l1_norm() const;

 private:
  CycloElem(CycloCtxPtr ctx, std::vector<BigInt> num, BigInt den);
  void require_same_field(const CycloElem& b) const;
  void canonicalize();

  CycloCtxPtr ctx_;
  std::vector<BigInt> num_;
  BigInt den_ = 1;
};

/// Multiplicative inverse via the regular representation.
inline CycloElem invert(const CycloElem& a) { return a.inverse(); }

/// Principal embedding zeta_M -> exp(2 pi i / M).
std::complex<double> embed_complex(const CycloElem& a);

/// prod_{b=1}^{p-1} (1 - zeta_p^b), computed in ctx.
CycloElem one_minus_zeta_product(CycloCtxPtr ctx);

/// Human-readable sum of monomials, e.g. "-1 - 2*zp^2 + 3/2*zN*zp".
std::string to_string(const CycloElem& a);

}  // namespace cyclomat
