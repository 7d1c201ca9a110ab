#pragma once

// Exact determinant engines over Eigen dense matrices, templated on the
// scalar ring.  The scalar supplies its ring operations through
// ExactRing<Scalar>; specializations exist for BigInt, Rational and
// CycloElem.

#include "cyclomat/bigint.hpp"
#include "cyclomat/cyclotomic.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cyclomat {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
struct ExactRing;

template <>
struct ExactRing<BigInt> {
  static bool is_zero(const BigInt& x) { return x == 0; }
  static bool is_integral(const BigInt&) { return true; }
  static BigInt zero_like(const BigInt&) { return 0; }
  static BigInt one_like(const BigInt&) { return 1; }

  class Divisor {
   public:
    explicit Divisor(const BigInt& d) : d_(d) {}
    BigInt operator()(const BigInt& x) const {
      if (!mpz_divisible_p(x.get_mpz_t(), d_.get_mpz_t())) {
        throw std::logic_error("inexact division in fraction-free elimination");
      }
      BigInt r;
      mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), d_.get_mpz_t());
      return r;
    }

   private:
    BigInt d_;
  };
};

template <>
struct ExactRing<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static bool is_integral(const Rational& x) { return x.get_den() == 1; }
  static Rational zero_like(const Rational&) { return 0; }
  static Rational one_like(const Rational&) { return 1; }

  class Divisor {
   public:
    explicit Divisor(const Rational& d) : inv_(1 / d) {}
    Rational operator()(const Rational& x) const { return Rational(x * inv_); }

   private:
    Rational inv_;
  };
};

template <>
struct ExactRing<CycloElem> {
  static bool is_zero(const CycloElem& x) { return x.is_zero(); }
  static bool is_integral(const CycloElem& x) { return x.is_integral(); }
  static CycloElem zero_like(const CycloElem& x) { return CycloElem::zero(x.context()); }
  static CycloElem one_like(const CycloElem& x) { return CycloElem::one(x.context()); }

  class Divisor {
   public:
    explicit Divisor(const CycloElem& d) : inv_(d.inverse()) {}
    CycloElem operator()(const CycloElem& x) const { return x * inv_; }

   private:
    CycloElem inv_;
  };
};

/// Fraction-free (Bareiss) determinant.  The pivot in each column is the
/// first nonzero entry at or below the diagonal.  When every input entry is
/// integral, every intermediate entry is a minor and must stay integral; a
/// violation throws std::logic_error.
template <class Derived>
typename Derived::Scalar det_bareiss(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Ring = ExactRing<Scalar>;
  const Eigen::Index n = input.rows();
  if (n != input.cols()) throw std::invalid_argument("det_bareiss: matrix is not square");
  if (n == 0) throw std::invalid_argument("det_bareiss: empty matrix");

  DenseMatrix<Scalar> m = input;
  bool integral = true;
  for (Eigen::Index i = 0; i < n && integral; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!Ring::is_integral(m(i, j))) {
        integral = false;
        break;
      }
    }
  }

  bool negate = false;
  Scalar prev = Ring::one_like(m(0, 0));
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot_row = k;
    while (pivot_row < n && Ring::is_zero(m(pivot_row, k))) ++pivot_row;
    if (pivot_row == n) return Ring::zero_like(m(0, 0));
    if (pivot_row != k) {
      m.row(k).swap(m.row(pivot_row));
      negate = !negate;
    }
    if (k + 1 == n) break;
    const typename Ring::Divisor divide(prev);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar t = m(i, j) * m(k, k);
        t -= m(i, k) * m(k, j);
        m(i, j) = divide(t);
        if (integral && !Ring::is_integral(m(i, j))) {
          throw std::logic_error("fraction-free elimination produced a non-integral minor");
        }
      }
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// Solves M x = rhs exactly for nonsingular integer M.  Throws
/// std::domain_error when M is singular.
inline std::vector<Rational> solve_fraction_free(DenseMatrix<BigInt> m, std::vector<BigInt> rhs) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || static_cast<std::size_t>(n) != rhs.size()) {
    throw std::invalid_argument("solve_fraction_free: shape mismatch");
  }
  BigInt prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot_row = k;
    while (pivot_row < n && m(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) throw std::domain_error("solve_fraction_free: singular matrix");
    if (pivot_row != k) {
      m.row(k).swap(m.row(pivot_row));
      std::swap(rhs[k], rhs[pivot_row]);
    }
    const ExactRing<BigInt>::Divisor divide(prev);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = divide(BigInt(m(i, j) * m(k, k) - m(i, k) * m(k, j)));
      }
      rhs[i] = divide(BigInt(rhs[i] * m(k, k) - m(i, k) * rhs[k]));
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  std::vector<Rational> x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Rational acc(rhs[i]);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= Rational(m(i, j)) * x[j];
    x[i] = acc / Rational(m(i, i));
    x[i].canonicalize();
  }
  return x;
}

/// Determinant over Z/ell for a prime ell < 2^32, entries already reduced.
inline std::uint64_t det_mod_prime(DenseMatrix<std::uint64_t> m, std::uint64_t ell) {
  const Eigen::Index n = m.rows();
  auto pow_mod = [ell](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= ell;
    while (e) {
      if (e & 1) r = r * b % ell;
      b = b * b % ell;
      e >>= 1;
    }
    return r;
  };
  std::uint64_t det = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot_row = k;
    while (pivot_row < n && m(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) return 0;
    if (pivot_row != k) {
      m.row(k).swap(m.row(pivot_row));
      det = (ell - det) % ell;
    }
    det = det * m(k, k) % ell;
    const std::uint64_t inv = pow_mod(m(k, k), ell - 2);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const std::uint64_t f = m(i, k) * inv % ell;
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) + (ell - f) * m(k, j)) % ell;
      }
      m(i, k) = 0;
    }
  }
  return det;
}

}  // namespace cyclomat
