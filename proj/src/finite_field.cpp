#include "cyclomat/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclomat {

namespace {

using Poly = std::vector<int>;  // over F_p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  long long r = 1, b = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

Poly poly_rem(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const long long c = 1LL * a.back() * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<int>(((a[shift + i] - c * m[i]) % p + p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
    }
  }
  return poly_rem(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, int p) {
  Poly result{1};
  base = poly_rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, m, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, m, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

// x^(p^d) mod m by d successive p-th powers.
Poly frobenius_power_of_x(int d, const Poly& m, int p) {
  Poly h{0, 1};
  h = poly_rem(std::move(h), m, p);
  for (int i = 0; i < d; ++i) h = poly_powmod(h, static_cast<std::uint64_t>(p), m, p);
  return h;
}

// Digits in "constant term first" lexicographic order: the first
// coefficient is the most significant.
std::vector<int> lex_digits(std::uint64_t key, int n, int p) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(key % p);
    key /= p;
  }
  return digits;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool prime_power(std::uint64_t q, int& p, int& n) {
  if (q < 2) return false;
  std::uint64_t d = 2;
  while (d * d <= q && q % d != 0) ++d;
  if (q % d != 0) d = q;
  std::uint64_t rest = q;
  int e = 0;
  while (rest % d == 0) {
    rest /= d;
    ++e;
  }
  if (rest != 1) return false;
  p = static_cast<int>(d);
  n = e;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int order_mod(std::uint64_t p, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("order_mod: k must be positive");
  if (std::gcd(p, k) != 1) throw std::invalid_argument("order_mod: gcd(p, k) != 1");
  if (k == 1) return 1;
  std::uint64_t x = p % k;
  int f = 1;
  while (x != 1) {
    x = x * (p % k) % k;
    ++f;
  }
  return f;
}

bool is_irreducible(const std::vector<int>& monic, int p) {
  Poly f = monic;
  trim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1 || f.back() != 1) throw std::invalid_argument("is_irreducible: expects a monic polynomial of degree >= 1");
  if (n == 1) return true;
  const Poly x{0, 1};
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const Poly g = poly_gcd(poly_sub(frobenius_power_of_x(d, f, p), x, p), f, p);
    if (g.size() > 1) return false;
  }
  return poly_sub(frobenius_power_of_x(n, f, p), poly_rem(x, f, p), p).empty();
}

FqElem FqCtx::element(int index) const {
  FqElem e{std::vector<int>(n_)};
  for (int i = 0; i < n_; ++i) {
    e.coeffs[i] = index % p_;
    index /= p_;
  }
  return e;
}

int FqCtx::index_of(const FqElem& x) const {
  if (static_cast<int>(x.coeffs.size()) != n_) throw std::invalid_argument("FqElem: wrong length");
  int idx = 0;
  for (int i = n_ - 1; i >= 0; --i) {
    const int c = x.coeffs[i];
    if (c < 0 || c >= p_) throw std::invalid_argument("FqElem: coefficient out of range");
    idx = idx * p_ + c;
  }
  return idx;
}

int FqCtx::prime_index(std::int64_t c) const {
  const std::int64_t r = c % p_;
  return static_cast<int>(r < 0 ? r + p_ : r);
}

int FqCtx::add(int x, int y) const {
  int r = 0, scale = 1;
  for (int i = 0; i < n_; ++i) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return r;
}

int FqCtx::neg(int x) const {
  int r = 0, scale = 1;
  for (int i = 0; i < n_; ++i) {
    r += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return r;
}

int FqCtx::mul(int x, int y) const {
  if (x == 0 || y == 0) return 0;
  return exp_[(log_[x] + log_[y]) % (q_ - 1)];
}

int FqCtx::pow(int x, std::int64_t e) const {
  if (x == 0) {
    if (e == 0) return 1;
    if (e < 0) throw std::domain_error("FqCtx::pow: zero to a negative power");
    return 0;
  }
  return exp(static_cast<std::int64_t>(log_[x]) * e);
}

int FqCtx::inv(int x) const {
  if (x == 0) throw std::domain_error("FqCtx::inv: zero has no inverse");
  return exp(-static_cast<std::int64_t>(log_[x]));
}

int FqCtx::dlog(int x) const {
  if (x == 0) throw std::domain_error("discrete_log: zero has no logarithm");
  return log_[x];
}

int FqCtx::exp(std::int64_t e) const {
  const std::int64_t m = q_ - 1;
  std::int64_t r = e % m;
  if (r < 0) r += m;
  return exp_[r];
}

int FqCtx::norm(int x) const {
  if (x == 0) return 0;
  const int y = exp(static_cast<std::int64_t>(log_[x]) * ((q_ - 1) / (p_ - 1)));
  if (y >= p_) throw std::logic_error("norm left the prime field");
  return y;
}

FqElem FqCtx::poly_mul(const FqElem& a, const FqElem& b) const {
  Poly r = poly_mulmod(a.coeffs, b.coeffs, modulus_, p_);
  r.resize(n_, 0);
  return FqElem{std::move(r)};
}

FqElem FqCtx::poly_pow(FqElem a, std::uint64_t e) const {
  Poly r = poly_powmod(a.coeffs, e, modulus_, p_);
  r.resize(n_, 0);
  return FqElem{std::move(r)};
}

int FqCtx::trace_by_frobenius(int x) const {
  FqElem y = element(x);
  FqElem sum{std::vector<int>(n_, 0)};
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) sum.coeffs[i] = (sum.coeffs[i] + y.coeffs[i]) % p_;
    y = poly_pow(y, static_cast<std::uint64_t>(p_));
  }
  for (int i = 1; i < n_; ++i) {
    if (sum.coeffs[i] != 0) throw std::logic_error("trace left the prime field");
  }
  return sum.coeffs[0];
}

void FqCtx::build_tables(int generator_index) {
  generator_index_ = generator_index;
  const FqElem g = element(generator_index);
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  FqElem cur = element(1);
  for (int e = 0; e < q_ - 1; ++e) {
    const int idx = index_of(cur);
    if (log_[idx] != -1) throw std::invalid_argument("generator does not have order q - 1");
    exp_[e] = idx;
    log_[idx] = e;
    cur = poly_mul(cur, g);
  }
  if (index_of(cur) != 1) throw std::invalid_argument("generator does not have order q - 1");

  // Trace is F_p-linear: evaluate it on the basis t^i only.
  std::vector<int> basis_trace(n_);
  int power = 1;
  for (int i = 0; i < n_; ++i) {
    basis_trace[i] = trace_by_frobenius(power);
    power *= p_;
  }
  trace_.assign(q_, 0);
  for (int x = 0; x < q_; ++x) {
    int rest = x, t = 0;
    for (int i = 0; i < n_; ++i) {
      t = (t + (rest % p_) * basis_trace[i]) % p_;
      rest /= p_;
    }
    trace_[x] = t;
  }
}

FqCtxPtr FqCtx::from_parts(int p, int n, std::vector<int> modulus, int generator_index) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("FqCtx: p must be prime");
  if (n < 1 || static_cast<int>(modulus.size()) != n + 1 || modulus.back() != 1) {
    throw std::invalid_argument("FqCtx: modulus must be monic of degree n");
  }
  for (int c : modulus) {
    if (c < 0 || c >= p) throw std::invalid_argument("FqCtx: modulus coefficient out of range");
  }
  if (!is_irreducible(modulus, p)) throw std::invalid_argument("FqCtx: modulus is reducible");
  auto ctx = std::shared_ptr<FqCtx>(new FqCtx());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->q_ = 1;
  for (int i = 0; i < n; ++i) ctx->q_ *= p;
  if (generator_index <= 0 || generator_index >= ctx->q_) {
    throw std::invalid_argument("FqCtx: generator index out of range");
  }
  ctx->modulus_ = std::move(modulus);
  ctx->build_tables(generator_index);
  return ctx;
}

FqCtxPtr build_field(int p, int n, std::uint64_t max_q) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("build_field: p = " + std::to_string(p) + " is not prime");
  }
  if (n < 1) throw std::invalid_argument("build_field: n must be positive");
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > max_q) throw std::invalid_argument("build_field: q exceeds the configured bound");
  }

  std::vector<int> modulus;
  for (std::uint64_t key = 0; key < q; ++key) {
    std::vector<int> cand = lex_digits(key, n, p);
    cand.push_back(1);
    if (is_irreducible(cand, p)) {
      modulus = std::move(cand);
      break;
    }
  }
  if (modulus.empty()) throw std::logic_error("build_field: no irreducible modulus found");

  auto ctx = std::shared_ptr<FqCtx>(new FqCtx());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->q_ = static_cast<int>(q);
  ctx->modulus_ = modulus;

  const auto factors = prime_factors(q - 1);
  int generator = -1;
  for (std::uint64_t key = 1; key < q && generator < 0; ++key) {
    const FqElem cand{lex_digits(key, n, p)};
    bool primitive = true;
    for (std::uint64_t r : factors) {
      const FqElem y = ctx->poly_pow(cand, (q - 1) / r);
      if (ctx->index_of(y) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) generator = ctx->index_of(cand);
  }
  if (generator < 0) throw std::logic_error("build_field: no generator found");
  ctx->build_tables(generator);
  return ctx;
}

int trace(const FqCtx& ctx, const FqElem& x) { return ctx.trace(ctx.index_of(x)); }

int norm(const FqCtx& ctx, const FqElem& x) { return ctx.norm(ctx.index_of(x)); }

int discrete_log(const FqCtx& ctx, const FqElem& x) { return ctx.dlog(ctx.index_of(x)); }

}  // namespace cyclomat
