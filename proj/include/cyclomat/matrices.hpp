#pragma once

// Gauss-sum matrices indexed by multiples of k in the character group, their
// eigenvalues, and three exact determinant routes: fraction-free elimination
// over L, the eigenvalue product, and a multimodular evaluation over primes
// that split completely in L.

#include "cyclomat/characters.hpp"
#include "cyclomat/determinant.hpp"

#include <cstdint>
#include <vector>

namespace cyclomat {

using CycloMatrix = DenseMatrix<CycloElem>;
using IntMatrix = DenseMatrix<BigInt>;

/// Dimension m = (q - 1) / k.  Throws std::invalid_argument unless k | q - 1.
int matrix_dim(const GaussContext& ctx, int k);

// The builders index rows and columns by 0 <= i, j < m.  `gen_power` = s
// replaces the generator chi by chi^s (gcd(s, q - 1) = 1 expected).

/// [G(chi^(k i + k j))]
CycloMatrix build_A(const GaussContextPtr& ctx, int k, std::int64_t gen_power = 1);
/// [1 / G(chi^(k i + k j))]
CycloMatrix build_B(const GaussContextPtr& ctx, int k, std::int64_t gen_power = 1);
/// [G(chi^(k i - k j))]
CycloMatrix build_C(const GaussContextPtr& ctx, int k, std::int64_t gen_power = 1);
/// [(-1)^(k i - k j) G(chi^(k i - k j))]
CycloMatrix build_D(const GaussContextPtr& ctx, int k, std::int64_t gen_power = 1);

struct EigenData {
  int k = 1;
  int m = 1;
  /// Field indices of the coset representatives g^0, ..., g^(m-1).
  std::vector<int> coset_reps;
  /// lambda_b = m * sum_{y in U_k} zeta_p^Tr(b y), aligned with coset_reps.
  std::vector<CycloElem> values;
};

/// Eigenvalues of build_C(ctx, k), one per coset of U_k = {x : x^k = 1}.
EigenData eigenvalues(const GaussContextPtr& ctx, int k);

/// lambda_b for an arbitrary nonzero field element b.
CycloElem eigenvalue_at(const GaussContextPtr& ctx, int k, int b);

/// Fraction-free elimination over L.
CycloElem det_exact(const CycloMatrix& m);

/// Rational determinant via reduction modulo primes ell = 1 (mod N p), CRT
/// and a Hadamard bound.  Each prime is evaluated under two embeddings, which
/// must agree; throws std::domain_error when the determinant is not rational.
Rational det_multimodular(const CycloMatrix& m);

/// sign(tau_m(-1)) * prod_b lambda_b
CycloElem det_A_via_eigen(const GaussContextPtr& ctx, int k);

/// sign(tau_m(-1)) * prod_b (lambda_b + 1 - q) / q, asserted rational.
Rational det_B_via_eigen(const GaussContextPtr& ctx, int k);

/// [psi(i + j)] for 1 <= i, j <= p - 1 over the prime field ctx, psi = chi^t.
CycloMatrix build_carlitz(const GaussContextPtr& ctx, std::int64_t t);

/// Closed-form det of build_carlitz, selected by ord(psi) and psi(-1).
/// Throws std::invalid_argument for trivial psi or a non-prime field.
CycloElem carlitz_det_formula(const GaussContextPtr& ctx, std::int64_t t);

/// Legendre symbol (a/p).
int legendre(std::int64_t a, int p);

/// [((i + j - 1)/p)] for 1 <= i, j <= (p - 1)/2.
IntMatrix build_legendre_V(int p);
/// [((i + j)/p)] for 1 <= i, j <= (p - 1)/2.
IntMatrix build_legendre_shifted(int p);
/// [((i^2 + j^2)/p)] for 1 <= i, j <= (p - 1)/2.
IntMatrix build_sun_S(int p);

inline BigInt det_integer(const IntMatrix& m) { return det_bareiss(m); }

}  // namespace cyclomat
