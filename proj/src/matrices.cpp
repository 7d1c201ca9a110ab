#include "cyclomat/matrices.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cyclomat {

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

u64 primitive_root(u64 ell) {
  const auto factors = prime_factors(ell - 1);
  for (u64 g = 2; g < ell; ++g) {
    bool ok = true;
    for (u64 r : factors) {
      if (pow_mod(g, (ell - 1) / r, ell) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

// Images of zeta_N^u zeta_p^v in F_ell for u < deg_n, v < p - 1 under
// zeta_Np -> omega.
std::vector<u64> basis_images(const CycloCtx& ctx, u64 omega, u64 ell) {
  const u64 zn = pow_mod(omega, static_cast<u64>(ctx.prime()), ell);
  const u64 zp = pow_mod(omega, static_cast<u64>(ctx.order_n()), ell);
  const int dn = ctx.deg_n(), dp = ctx.deg_p();
  std::vector<u64> img(static_cast<std::size_t>(dn) * dp);
  u64 xu = 1;
  for (int u = 0; u < dn; ++u) {
    u64 yv = 1;
    for (int v = 0; v < dp; ++v) {
      img[u * dp + v] = xu * yv % ell;
      yv = yv * zp % ell;
    }
    xu = xu * zn % ell;
  }
  return img;
}

template <class Entry>
CycloMatrix fill(int m, Entry entry) {
  CycloMatrix out(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out(i, j) = entry(i, j);
  }
  return out;
}

}  // namespace

int matrix_dim(const GaussContext& ctx, int k) {
  if (k < 1 || ctx.group_order() % k != 0) {
    throw std::invalid_argument("k = " + std::to_string(k) + " does not divide q - 1 = " +
                                std::to_string(ctx.group_order()));
  }
  return ctx.group_order() / k;
}

CycloMatrix build_A(const GaussContextPtr& ctx, int k, std::int64_t gen_power) {
  const int m = matrix_dim(*ctx, k);
  return fill(m, [&](int i, int j) { return ctx->gauss_sum(gen_power * k * (i + j)); });
}

CycloMatrix build_B(const GaussContextPtr& ctx, int k, std::int64_t gen_power) {
  const int m = matrix_dim(*ctx, k);
  return fill(m, [&](int i, int j) {
    return gauss_sum_inverse(Character(ctx, gen_power * k * (i + j)));
  });
}

CycloMatrix build_C(const GaussContextPtr& ctx, int k, std::int64_t gen_power) {
  const int m = matrix_dim(*ctx, k);
  return fill(m, [&](int i, int j) { return ctx->gauss_sum(gen_power * k * (i - j)); });
}

CycloMatrix build_D(const GaussContextPtr& ctx, int k, std::int64_t gen_power) {
  const int m = matrix_dim(*ctx, k);
  return fill(m, [&](int i, int j) {
    CycloElem g = ctx->gauss_sum(gen_power * k * (i - j));
    return sign_pow(static_cast<std::int64_t>(k) * (i - j)) < 0 ? -g : g;
  });
}

CycloElem eigenvalue_at(const GaussContextPtr& ctx, int k, int b) {
  const int m = matrix_dim(*ctx, k);
  const FqCtx& field = ctx->field();
  const int p = field.p();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(ctx->group_order()) * p, 0);
  for (int j = 0; j < k; ++j) {
    const int y = field.exp(static_cast<std::int64_t>(m) * j);
    counts[field.trace(field.mul(b, y))] += m;
  }
  return CycloElem::from_exponent_counts(ctx->cyclo(), counts);
}

EigenData eigenvalues(const GaussContextPtr& ctx, int k) {
  EigenData out;
  out.k = k;
  out.m = matrix_dim(*ctx, k);
  for (int j = 0; j < out.m; ++j) {
    const int b = ctx->field().exp(j);
    out.coset_reps.push_back(b);
    out.values.push_back(eigenvalue_at(ctx, k, b));
  }
  return out;
}

CycloElem det_exact(const CycloMatrix& m) { return det_bareiss(m); }

Rational det_multimodular(const CycloMatrix& mat) {
  const Eigen::Index n = mat.rows();
  if (n != mat.cols() || n == 0) throw std::invalid_argument("det_multimodular: expects a nonempty square matrix");
  const CycloCtxPtr ctx = mat(0, 0).context();
  const int dim = ctx->dim();

  BigInt common = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), mat(i, j).denominator().get_mpz_t());
    }
  }
  // Scaled integral numerators and the Hadamard bound on |det(common * M)|.
  std::vector<std::vector<BigInt>> nums(static_cast<std::size_t>(n * n));
  double log2_bound = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const CycloElem& e = mat(i, j);
      if (!e.context() || !e.context()->same_field(*ctx)) {
        throw std::invalid_argument("det_multimodular: entries must share one field");
      }
      const BigInt scale = common / e.denominator();
      auto& v = nums[i * n + j];
      v.resize(dim);
      BigInt l1 = 0;
      for (int c = 0; c < dim; ++c) {
        v[c] = e.numerators()[c] * scale;
        l1 += abs(v[c]);
      }
      const double l1d = l1.get_d();
      row += l1d * l1d;
    }
    if (row == 0.0) return 0;
    log2_bound += 0.5 * std::log2(row);
  }
  log2_bound += 2.0;

  const u64 conductor = static_cast<u64>(ctx->order_n()) * static_cast<u64>(ctx->prime());
  // A second primitive conductor-th root gives a different embedding.
  u64 other_power = 0;
  for (u64 s = 2; s < conductor; ++s) {
    if (std::gcd(s, conductor) == 1) {
      other_power = s;
      break;
    }
  }

  BigInt residue = 0;
  BigInt modulus = 1;
  u64 ell = ((u64{1} << 31) / conductor) * conductor + 1;
  while (mpz_sizeinbase(modulus.get_mpz_t(), 2) < log2_bound + 1.0) {
    do {
      if (ell <= conductor + 1) throw std::runtime_error("det_multimodular: ran out of primes");
      ell -= conductor;
    } while (!is_prime(ell));
    const u64 omega = pow_mod(primitive_root(ell), (ell - 1) / conductor, ell);

    auto det_under = [&](u64 root) {
      const std::vector<u64> img = basis_images(*ctx, root, ell);
      DenseMatrix<u64> red(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          u64 acc = 0;
          const auto& v = nums[i * n + j];
          for (int c = 0; c < dim; ++c) {
            if (v[c] == 0) continue;
            acc = (acc + mpz_fdiv_ui(v[c].get_mpz_t(), ell) * img[c]) % ell;
          }
          red(i, j) = acc;
        }
      }
      return det_mod_prime(std::move(red), ell);
    };

    const u64 d = det_under(omega);
    if (other_power != 0 && det_under(pow_mod(omega, other_power, ell)) != d) {
      throw std::domain_error("det_multimodular: determinant is not rational");
    }
    // CRT: residue += modulus * ((d - residue) / modulus mod ell)
    const u64 r_mod = mpz_fdiv_ui(residue.get_mpz_t(), ell);
    const u64 m_mod = mpz_fdiv_ui(modulus.get_mpz_t(), ell);
    const u64 t = (d + ell - r_mod) % ell * pow_mod(m_mod, ell - 2, ell) % ell;
    residue += modulus * t;
    modulus *= ell;
  }
  if (residue * 2 > modulus) residue -= modulus;
  return make_rational(residue, pow_int(common, static_cast<unsigned long>(n)));
}

CycloElem det_A_via_eigen(const GaussContextPtr& ctx, int k) {
  const EigenData eig = eigenvalues(ctx, k);
  CycloElem prod = CycloElem::constant(ctx->cyclo(), lerch_sign(-1, eig.m));
  for (const auto& lam : eig.values) prod *= lam;
  return prod;
}

Rational det_B_via_eigen(const GaussContextPtr& ctx, int k) {
  const EigenData eig = eigenvalues(ctx, k);
  const CycloElem shift = CycloElem::constant(ctx->cyclo(), 1 - ctx->q());
  CycloElem prod = CycloElem::one(ctx->cyclo());
  for (const auto& lam : eig.values) {
    const CycloElem factor = lam + shift;
    if (factor.is_zero()) return 0;
    prod *= factor;
  }
  return lerch_sign(-1, eig.m) * prod.to_rational() /
         pow_int(ctx->q(), static_cast<unsigned long>(eig.m));
}

CycloMatrix build_carlitz(const GaussContextPtr& ctx, std::int64_t t) {
  if (ctx->n() != 1) throw std::invalid_argument("build_carlitz: expects a prime field");
  const int p = ctx->p();
  const Character psi(ctx, t);
  return fill(p - 1, [&](int i, int j) { return char_eval(psi, (i + 1 + j + 1) % p); });
}

CycloElem carlitz_det_formula(const GaussContextPtr& ctx, std::int64_t t) {
  if (ctx->n() != 1) throw std::invalid_argument("carlitz_det_formula: expects a prime field");
  const int p = ctx->p();
  if (p == 2) throw std::invalid_argument("carlitz_det_formula: p must be odd");
  const Character psi(ctx, t);
  if (psi.is_trivial()) throw std::invalid_argument("carlitz_det_formula: psi must be nontrivial");
  const int f = psi.order();
  int exponent = 0;
  if (f % 2 == 1) {
    exponent = (p - 1) / (2 * f);
  } else if (psi.value_at_minus_one() == 1) {
    exponent = (p - 1) / f;
  } else {
    exponent = (f + 2) * (p - 1) / (2 * f);
  }
  return gauss_sum(psi).pow(p - 1) * Rational(sign_pow(exponent), p);
}

int legendre(std::int64_t a, int p) { return jacobi_symbol(a, p); }

namespace {

template <class Entry>
IntMatrix half_range_matrix(int p, Entry entry) {
  if (p < 3 || !is_prime(static_cast<u64>(p))) throw std::invalid_argument("expected an odd prime");
  const int h = (p - 1) / 2;
  IntMatrix out(h, h);
  for (int i = 1; i <= h; ++i) {
    for (int j = 1; j <= h; ++j) out(i - 1, j - 1) = legendre(entry(i, j), p);
  }
  return out;
}

}  // namespace

IntMatrix build_legendre_V(int p) {
  return half_range_matrix(p, [](std::int64_t i, std::int64_t j) { return i + j - 1; });
}

IntMatrix build_legendre_shifted(int p) {
  return half_range_matrix(p, [](std::int64_t i, std::int64_t j) { return i + j; });
}

IntMatrix build_sun_S(int p) {
  return half_range_matrix(p, [](std::int64_t i, std::int64_t j) { return i * i + j * j; });
}

}  // namespace cyclomat
