#pragma once

// F_q, q = p^n, in the polynomial basis over F_p with a deterministic
// modulus (lexicographically least monic irreducible, constant term compared
// first) and generator (least element of order q - 1 in the same order).
//
// Elements are addressed by their index sum_i a_i p^i, which is also the
// order used to store the log/exp tables.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace cyclomat {

inline constexpr std::uint64_t kDefaultFieldBound = 1u << 20;

/// Coefficients a_0..a_{n-1} in [0, p).
struct FqElem {
  std::vector<int> coeffs;
  friend bool operator==(const FqElem&, const FqElem&) = default;
};

bool is_prime(std::uint64_t n);

/// Prime-power decomposition q = p^n; returns false when q is not a prime
/// power (or q < 2).
bool prime_power(std::uint64_t q, int& p, int& n);

/// Distinct prime factors by trial division, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Least f >= 1 with p^f = 1 (mod k).  Throws std::invalid_argument when
/// gcd(p, k) != 1.
int order_mod(std::uint64_t p, std::uint64_t k);

class FqCtx;
using FqCtxPtr = std::shared_ptr<const FqCtx>;

class FqCtx {
 public:
  int p() const { return p_; }
  int n() const { return n_; }
  int q() const { return q_; }
  /// Monic modulus, constant term first, length n + 1.
  const std::vector<int>& modulus() const { return modulus_; }
  int generator_index() const { return generator_index_; }
  FqElem generator() const { return element(generator_index()); }

  FqElem element(int index) const;
  int index_of(const FqElem& x) const;
  /// Index of the prime-field element c (mod p).
  int prime_index(std::int64_t c) const;

  int add(int x, int y) const;
  int neg(int x) const;
  int mul(int x, int y) const;
  int pow(int x, std::int64_t e) const;
  int inv(int x) const;

  /// Throws std::domain_error on zero.
  int dlog(int x) const;
  int exp(std::int64_t e) const;

  /// Tr(x) in [0, p).
  int trace(int x) const { return trace_[x]; }
  /// N(x) in [0, p), zero for zero.
  int norm(int x) const;

  std::span<const int> log_table() const { return log_; }
  std::span<const int> exp_table() const { return exp_; }

  /// Computes Tr(x) = sum_j x^(p^j) in F_q by polynomial arithmetic and
  /// checks that it lands in the prime field.
  int trace_by_frobenius(int x) const;

  /// Lower-level constructor used by the cache loader: validates the
  /// modulus and generator and rebuilds all tables.
  static FqCtxPtr from_parts(int p, int n, std::vector<int> modulus, int generator_index);

 private:
  FqCtx() = default;
  void build_tables(int generator_index);
  FqElem poly_mul(const FqElem& a, const FqElem& b) const;
  FqElem poly_pow(FqElem a, std::uint64_t e) const;

  int p_ = 0;
  int n_ = 0;
  int q_ = 0;
  int generator_index_ = 0;
  std::vector<int> modulus_;
  std::vector<int> log_;  // log_[0] = -1
  std::vector<int> exp_;  // exp_[e] for 0 <= e < q - 1
  std::vector<int> trace_;

  friend FqCtxPtr build_field(int p, int n, std::uint64_t max_q);
};

/// Throws std::invalid_argument for composite p, n < 1 or q > max_q.
FqCtxPtr build_field(int p, int n, std::uint64_t max_q = kDefaultFieldBound);

/// Monic polynomial over F_p (constant term first) irreducibility test.
bool is_irreducible(const std::vector<int>& monic, int p);

int trace(const FqCtx& ctx, const FqElem& x);
int norm(const FqCtx& ctx, const FqElem& x);
/// g^result = x; throws std::domain_error for x = 0.
int discrete_log(const FqCtx& ctx, const FqElem& x);

}  // namespace cyclomat
