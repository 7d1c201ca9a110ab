#include "cyclomat/cyclotomic.hpp"

#include "cyclomat/determinant.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cyclomat {

namespace {

using Poly = std::vector<BigInt>;

// Exact quotient of a by a monic b; throws if the remainder is nonzero.
Poly divide_monic(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("divide_monic: degree too small");
  Poly quot(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const BigInt c = a[i];
    quot[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("divide_monic: inexact division");
  }
  return quot;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t checked_i64(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("cyclotomic residue overflow");
  return static_cast<std::int64_t>(v);
}

void addmul_si(BigInt& r, const BigInt& c, long s) {
  if (s >= 0) {
    mpz_addmul_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(s));
  } else {
    mpz_submul_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(-s));
  }
}

BigInt from_i128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(u & 0xffffffffffffffffULL);
  return neg ? BigInt(-r) : r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<BigInt> cyclotomic_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
  static std::mutex mu;
  static std::map<unsigned, Poly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  Poly xn(n + 1);
  xn[0] = -1;
  xn[n] = 1;
  Poly divisor{1};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) divisor = multiply(divisor, cyclotomic_poly(d));
  }
  Poly phi = divide_monic(std::move(xn), divisor);
  std::lock_guard lock(mu);
  memo.emplace(n, phi);
  return phi;
}

// ---------------------------------------------------------------------------
// CycloCtx

CycloCtxPtr CycloCtx::make(int N, int p) {
  if (N < 1) throw std::invalid_argument("CycloCtx: N must be positive");
  if (!is_prime_int(p)) throw std::invalid_argument("CycloCtx: p must be prime");
  if (N % p == 0) throw std::invalid_argument("CycloCtx: gcd(N, p) must be 1");
  return CycloCtxPtr(new CycloCtx(N, p));
}

CycloCtx::CycloCtx(int N, int p) : n_(N), p_(p) {
  phi_n_ = cyclotomic_poly(static_cast<unsigned>(N));
  phi_p_ = cyclotomic_poly(static_cast<unsigned>(p));
  deg_n_ = static_cast<int>(phi_n_.size()) - 1;
  phi_n_small_.reserve(phi_n_.size());
  for (const auto& c : phi_n_) {
    if (!c.fits_slong_p()) throw std::overflow_error("CycloCtx: cyclotomic coefficient too large");
    phi_n_small_.push_back(c.get_si());
  }

  // x^a mod Phi_N for a < N by repeated multiplication by x.
  power_residues_.assign(static_cast<std::size_t>(N) * deg_n_, 0);
  std::vector<std::int64_t> cur(deg_n_, 0);
  cur[0] = 1;
  if (deg_n_ == 0) throw std::logic_error("CycloCtx: degenerate cyclotomic polynomial");
  for (int a = 0; a < N; ++a) {
    std::copy(cur.begin(), cur.end(), power_residues_.begin() + static_cast<std::ptrdiff_t>(a) * deg_n_);
    const std::int64_t top = cur[deg_n_ - 1];
    for (int i = deg_n_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int i = 0; i < deg_n_; ++i) {
        cur[i] = checked_i64(static_cast<__int128>(cur[i]) -
                             static_cast<__int128>(top) * phi_n_small_[i]);
      }
    }
  }

  root_n_.resize(deg_n_);
  for (int u = 0; u < deg_n_; ++u) root_n_[u] = std::polar(1.0, 2.0 * std::numbers::pi * u / N);
  root_p_.resize(p - 1);
  for (int v = 0; v < p - 1; ++v) root_p_[v] = std::polar(1.0, 2.0 * std::numbers::pi * v / p);
}

// ---------------------------------------------------------------------------
// CycloElem

CycloElem::CycloElem(CycloCtxPtr ctx, std::vector<BigInt> num, BigInt den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

CycloElem CycloElem::zero(CycloCtxPtr ctx) {
  const int d = ctx->dim();
  return CycloElem(std::move(ctx), std::vector<BigInt>(d), 1);
}

CycloElem CycloElem::one(CycloCtxPtr ctx) { return constant(std::move(ctx), 1); }

CycloElem CycloElem::constant(CycloCtxPtr ctx, const Rational& c) {
  std::vector<BigInt> num(ctx->dim());
  num[0] = c.get_num();
  return CycloElem(std::move(ctx), std::move(num), c.get_den());
}

CycloElem CycloElem::monomial(CycloCtxPtr ctx, std::int64_t a, std::int64_t b) {
  const int n = ctx->order_n();
  const int p = ctx->prime();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) * p, 0);
  counts[mod_floor(a, n) * p + mod_floor(b, p)] = 1;
  return from_exponent_counts(std::move(ctx), counts);
}

CycloElem CycloElem::from_exponent_counts(CycloCtxPtr ctx, std::span<const std::int64_t> counts) {
  const int n = ctx->order_n();
  const int p = ctx->prime();
  const int dn = ctx->deg_n();
  const int dp = p - 1;
  if (counts.size() != static_cast<std::size_t>(n) * p) {
    throw std::invalid_argument("from_exponent_counts: wrong table size");
  }
  // zeta_p^(p-1) = -(1 + zeta_p + ... + zeta_p^(p-2)).
  std::vector<__int128> acc(static_cast<std::size_t>(dn) * dp, 0);
  std::vector<std::int64_t> row(dp);
  for (int a = 0; a < n; ++a) {
    const std::int64_t* c = counts.data() + static_cast<std::size_t>(a) * p;
    bool any = false;
    for (int v = 0; v < dp; ++v) {
      row[v] = c[v] - c[dp];
      any = any || row[v] != 0;
    }
    if (!any) continue;
    const auto res = ctx->power_residue(a);
    for (int u = 0; u < dn; ++u) {
      if (res[u] == 0) continue;
      for (int v = 0; v < dp; ++v) {
        acc[u * dp + v] += static_cast<__int128>(res[u]) * row[v];
      }
    }
  }
  std::vector<BigInt> num(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) num[i] = from_i128(acc[i]);
  return CycloElem(std::move(ctx), std::move(num), 1);
}

void CycloElem::canonicalize() {
  if (!ctx_) return;
  if (den_ == 0) throw std::domain_error("CycloElem: zero denominator");
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  BigInt g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g == den_ && std::all_of(num_.begin(), num_.end(), [](const BigInt& c) { return c == 0; })) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void CycloElem::require_same_field(const CycloElem& b) const {
  if (!ctx_ || !b.ctx_) throw std::invalid_argument("CycloElem: detached element");
  if (ctx_ != b.ctx_ && !ctx_->same_field(*b.ctx_)) {
    throw std::invalid_argument("CycloElem: context mismatch");
  }
}

Rational CycloElem::coeff(int u, int v) const {
  if (!ctx_) return 0;
  return make_rational(num_[static_cast<std::size_t>(u) * ctx_->deg_p() + v], den_);
}

bool CycloElem::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const BigInt& c) { return c == 0; });
}

bool CycloElem::is_rational() const {
  return std::all_of(num_.begin() + (num_.empty() ? 0 : 1), num_.end(),
                     [](const BigInt& c) { return c == 0; });
}

Rational CycloElem::to_rational() const {
  if (!is_rational()) throw std::domain_error("CycloElem: element is not rational");
  if (num_.empty()) return 0;
  return make_rational(num_[0], den_);
}

CycloElem& CycloElem::operator+=(const CycloElem& b) {
  require_same_field(b);
  if (den_ == b.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += b.num_[i];
  } else {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), den_.get_mpz_t(), b.den_.get_mpz_t());
    const BigInt fa = l / den_;
    const BigInt fb = l / b.den_;
    for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * fa + b.num_[i] * fb;
    den_ = l;
  }
  canonicalize();
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& b) { return *this += -b; }

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycloElem& CycloElem::operator*=(const CycloElem& b) {
  *this = *this * b;
  return *this;
}

CycloElem& CycloElem::operator*=(const Rational& c) {
  if (!ctx_) throw std::invalid_argument("CycloElem: detached element");
  for (auto& x : num_) x *= c.get_num();
  den_ *= c.get_den();
  canonicalize();
  return *this;
}

CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  a.require_same_field(b);
  const CycloCtx& ctx = *a.ctx_;
  const int dn = ctx.deg_n();
  const int p = ctx.prime();
  const int dp = p - 1;

  std::vector<int> nz_a, nz_b;
  for (int i = 0; i < static_cast<int>(a.num_.size()); ++i) {
    if (a.num_[i] != 0) nz_a.push_back(i);
  }
  for (int i = 0; i < static_cast<int>(b.num_.size()); ++i) {
    if (b.num_[i] != 0) nz_b.push_back(i);
  }
  if (nz_a.empty() || nz_b.empty()) return CycloElem::zero(a.ctx_);

  // Raw product in Z[x]/(deg < 2dn-1) x Z[y]/(y^p - 1).
  thread_local std::vector<BigInt> raw;
  const std::size_t raw_size = static_cast<std::size_t>(2 * dn - 1) * p;
  if (raw.size() < raw_size) raw.resize(raw_size);
  for (std::size_t i = 0; i < raw_size; ++i) raw[i] = 0;

  for (int ia : nz_a) {
    const int ua = ia / dp, va = ia % dp;
    const mpz_srcptr ca = a.num_[ia].get_mpz_t();
    for (int ib : nz_b) {
      const int ub = ib / dp, vb = ib % dp;
      int v = va + vb;
      if (v >= p) v -= p;
      mpz_addmul(raw[static_cast<std::size_t>(ua + ub) * p + v].get_mpz_t(), ca, b.num_[ib].get_mpz_t());
    }
  }
  // y^(p-1) -> -(1 + ... + y^(p-2))
  for (int u = 0; u < 2 * dn - 1; ++u) {
    BigInt& top = raw[static_cast<std::size_t>(u) * p + dp];
    if (top == 0) continue;
    for (int v = 0; v < dp; ++v) raw[static_cast<std::size_t>(u) * p + v] -= top;
    top = 0;
  }
  // x^u for u >= dn via Phi_N.
  const auto phi = ctx.phi_n_small();
  for (int u = 2 * dn - 2; u >= dn; --u) {
    for (int v = 0; v < dp; ++v) {
      BigInt& c = raw[static_cast<std::size_t>(u) * p + v];
      if (c == 0) continue;
      for (int i = 0; i < dn; ++i) {
        if (phi[i] != 0) addmul_si(raw[static_cast<std::size_t>(u - dn + i) * p + v], c, -phi[i]);
      }
      c = 0;
    }
  }
  std::vector<BigInt> num(static_cast<std::size_t>(dn) * dp);
  for (int u = 0; u < dn; ++u) {
    for (int v = 0; v < dp; ++v) num[u * dp + v] = raw[static_cast<std::size_t>(u) * p + v];
  }
  return CycloElem(a.ctx_, std::move(num), a.den_ * b.den_);
}

bool operator==(const CycloElem& a, const CycloElem& b) {
  if (!a.ctx_ || !b.ctx_) return a.is_zero() && b.is_zero();
  if (a.ctx_ != b.ctx_ && !a.ctx_->same_field(*b.ctx_)) return false;
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CycloElem CycloElem::pow(std::int64_t e) const {
  if (!ctx_) throw std::invalid_argument("CycloElem: detached element");
  CycloElem base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  CycloElem result = one(ctx_);
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

CycloElem CycloElem::times_zeta_n() const {
  const int dn = ctx_->deg_n();
  const int dp = ctx_->deg_p();
  std::vector<BigInt> num(num_.size());
  for (int u = dn - 1; u > 0; --u) {
    for (int v = 0; v < dp; ++v) num[u * dp + v] = num_[(u - 1) * dp + v];
  }
  const auto phi = ctx_->phi_n_small();
  for (int v = 0; v < dp; ++v) {
    const BigInt& top = num_[(dn - 1) * dp + v];
    if (top == 0) continue;
    for (int i = 0; i < dn; ++i) {
      if (phi[i] != 0) addmul_si(num[i * dp + v], top, -phi[i]);
    }
  }
  return CycloElem(ctx_, std::move(num), den_);
}

CycloElem CycloElem::times_zeta_p() const {
  const int dn = ctx_->deg_n();
  const int dp = ctx_->deg_p();
  std::vector<BigInt> num(num_.size());
  for (int u = 0; u < dn; ++u) {
    const BigInt& top = num_[u * dp + dp - 1];
    for (int v = dp - 1; v > 0; --v) num[u * dp + v] = num_[u * dp + v - 1] - top;
    num[u * dp] = -top;
  }
  return CycloElem(ctx_, std::move(num), den_);
}

CycloElem CycloElem::inverse() const {
  if (!ctx_) throw std::invalid_argument("CycloElem: detached element");
  if (is_zero()) throw std::domain_error("CycloElem: division by zero");
  const int d = ctx_->dim();
  const int dn = ctx_->deg_n();
  const int dp = ctx_->deg_p();

  // Column (u, v) of the regular representation of the integral part.
  DenseMatrix<BigInt> reg(d, d);
  CycloElem row_start(ctx_, num_, 1);
  for (int u = 0; u < dn; ++u) {
    CycloElem col = row_start;
    for (int v = 0; v < dp; ++v) {
      for (int i = 0; i < d; ++i) reg(i, u * dp + v) = col.num_[i];
      if (v + 1 < dp) col = col.times_zeta_p();
    }
    if (u + 1 < dn) row_start = row_start.times_zeta_n();
  }
  std::vector<BigInt> rhs(d);
  rhs[0] = 1;
  const std::vector<Rational> x = solve_fraction_free(std::move(reg), std::move(rhs));

  BigInt common = 1;
  for (const auto& xi : x) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), xi.get_den().get_mpz_t());
  std::vector<BigInt> num(d);
  for (int i = 0; i < d; ++i) num[i] = x[i].get_num() * (common / x[i].get_den()) * den_;
  return CycloElem(ctx_, std::move(num), common);
}

CycloElem CycloElem::lift_to(CycloCtxPtr target) const {
  if (!ctx_) throw std::invalid_argument("CycloElem: detached element");
  if (target->prime() != ctx_->prime() || target->order_n() % ctx_->order_n() != 0) {
    throw std::invalid_argument("lift_to: target field does not contain the source field");
  }
  const int factor = target->order_n() / ctx_->order_n();
  const int dn = ctx_->deg_n();
  const int dp = ctx_->deg_p();
  const int tdn = target->deg_n();
  std::vector<BigInt> num(static_cast<std::size_t>(target->dim()));
  for (int u = 0; u < dn; ++u) {
    const auto res = target->power_residue(u * factor);
    for (int v = 0; v < dp; ++v) {
      const BigInt& c = num_[u * dp + v];
      if (c == 0) continue;
      for (int w = 0; w < tdn; ++w) {
        if (res[w] != 0) addmul_si(num[w * dp + v], c, res[w]);
      }
    }
  }
  return CycloElem(std::move(target), std::move(num), den_);
}

double CycloElem::l1_norm() const {
  BigInt total = 0;
  for (const auto& c : num_) total += abs(c);
  return Rational(total, den_).get_d();
}

std::complex<double> embed_complex(const CycloElem& a) {
  if (!a.context()) return {0.0, 0.0};
  const CycloCtx& ctx = *a.context();
  const int dn = ctx.deg_n();
  const int dp = ctx.deg_p();
  std::complex<double> total{0.0, 0.0};
  for (int u = 0; u < dn; ++u) {
    for (int v = 0; v < dp; ++v) {
      const BigInt& c = a.numerators()[u * dp + v];
      if (c == 0) continue;
      total += c.get_d() * ctx.root_n()[u] * ctx.root_p()[v];
    }
  }
  return total / a.denominator().get_d();
}

CycloElem one_minus_zeta_product(CycloCtxPtr ctx) {
  CycloElem result = CycloElem::one(ctx);
  const CycloElem one = CycloElem::one(ctx);
  for (int b = 1; b < ctx->prime(); ++b) result *= one - CycloElem::monomial(ctx, 0, b);
  return result;
}

std::string to_string(const CycloElem& a) {
  if (!a.context() || a.is_zero()) return "0";
  const CycloCtx& ctx = *a.context();
  const int dp = ctx.deg_p();
  std::ostringstream out;
  bool first = true;
  for (int u = 0; u < ctx.deg_n(); ++u) {
    for (int v = 0; v < dp; ++v) {
      Rational c = a.coeff(u, v);
      if (c == 0) continue;
      std::string mono;
      if (u > 0) {
        mono += "zN";
        if (u > 1) mono += "^" + std::to_string(u);
      }
      if (v > 0) {
        if (!mono.empty()) mono += "*";
        mono += "zp";
        if (v > 1) mono += "^" + std::to_string(v);
      }
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) out << "-";
      } else {
        out << (neg ? " - " : " + ");
      }
      first = false;
      if (mono.empty()) {
        out << to_string(c);
      } else if (c == 1) {
        out << mono;
      } else {
        out << to_string(c) << "*" << mono;
      }
    }
  }
  return out.str();
}

}  // namespace cyclomat
