#pragma once

// Closed-form values of the determinant identities.  Nothing here touches a
// matrix: these are the "expected" side of every verification, computed
// with integer and rational arithmetic only.

#include "cyclomat/bigint.hpp"

#include <cstdint>

namespace cyclomat::closed_form {

/// (-1)^((q-2)(q-3)/2) (q-1)^(q-1)
BigInt det_A1(std::int64_t q);

/// (-1)^alpha ((q-1)/2)^((q-1)/2) 2^((p^(n-1)-1)/2), alpha = 1 for odd n and
/// (p^2+7)/8 for even n; q = p^n odd.
BigInt det_A2(int p, int n);

/// (-1)^((m^2-m+2)/2) reduced into [0, p).
int det_A_residue(std::int64_t m, int p);

/// (-1)^(p(p+1)/2) (p-1)^(p-1) / p^(p-2)
Rational det_B1(int p);

/// (-1)^((p+3)(p-1)/4) p ((p-1)/(2p))^((p-1)/2), p odd.
Rational det_B2(int p);

/// det_B2(p) times (-1)^((m-1)(m-2)/2), m = (p - 1)/2: the sign of the
/// reversal j -> -j on Z/m taken into account.  This is what the matrix
/// actually evaluates to; the two differ exactly when p = +-1 (mod 8).
Rational det_B2_with_reversal(int p);

/// prod_{r=0}^{n-1} r! (r+1)!
BigInt gamma_hankel(int n);

/// (-1)^(n(n-1)/2) prod_{r=0}^{n-1} r! / (n+r)!
Rational gamma_reciprocal_hankel(int n);

/// (-1)^((m-1)(m-2)/2), the sign of x -> -x on Z/m.
int sign_of_negation(std::int64_t m);

}  // namespace cyclomat::closed_form
