"""Independent numeric oracle for determinants of Gauss-sum matrices.

Builds F_q by brute force (own polynomial arithmetic), evaluates Gauss sums
as complex numbers with mpmath, and rounds determinants to exact integers or
rationals.  Used to freeze expected values in the C++ test suites; it shares
no code with the library.
"""
import itertools
import sys
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 60


def poly_mulmod(a, b, mod, p):
    n = len(mod) - 1
    r = [0] * (2 * n)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            r[i + j] = (r[i + j] + x * y) % p
    for d in range(2 * n - 1, n - 1, -1):
        c = r[d]
        if c:
            for i in range(n + 1):
                r[d - n + i] = (r[d - n + i] - c * mod[i]) % p
    return tuple(r[:n])


def field(p, n):
    # brute force: any irreducible modulus, any generator; determinants must not care
    for tail in itertools.product(range(p), repeat=n):
        mod = list(tail) + [1]
        elems = list(itertools.product(range(p), repeat=n))
        one = tuple([1] + [0] * (n - 1))
        for g in elems:
            if g == tuple([0] * n):
                continue
            pw, x = [], one
            for _ in range(p**n - 1):
                pw.append(x)
                x = poly_mulmod(x, g, mod, p)
            if len(set(pw)) == p**n - 1 and x == one:
                return mod, pw
    raise RuntimeError


def gauss_sums(p, n):
    q = p**n
    mod, pw = field(p, n)
    N = q - 1

    def tr(x):
        s, y = 0, x
        for _ in range(n):
            s = (s + y[0]) % p
            # y -> y^p
            z = tuple([1] + [0] * (n - 1))
            for _ in range(p):
                z = poly_mulmod(z, y, mod, p)
            y = z
        return s

    traces = [tr(x) for x in pw]
    G = []
    for t in range(N):
        s = mp.mpc(0)
        for j in range(N):
            s += mp.expjpi(2 * mp.mpf(t * j % N) / N) * mp.expjpi(2 * mp.mpf(traces[j]) / p)
        G.append(s)
    return G


def det_A(p, n, k):
    q = p**n
    G = gauss_sums(p, n)
    m = (q - 1) // k
    M = mp.matrix(m, m)
    for i in range(m):
        for j in range(m):
            M[i, j] = G[(k * i + k * j) % (q - 1)]
    d = mp.det(M)
    return int(mp.nint(d.real)), d


def det_B(p, n, k):
    q = p**n
    G = gauss_sums(p, n)
    m = (q - 1) // k
    M = mp.matrix(m, m)
    for i in range(m):
        for j in range(m):
            M[i, j] = 1 / G[(k * i + k * j) % (q - 1)]
    d = mp.det(M) * mp.mpf(q) ** m
    return Fraction(int(mp.nint(d.real)), q**m), d


if __name__ == "__main__":
    cases = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)]
    for p, n in cases:
        q = p**n
        for k in range(1, q):
            if (q - 1) % k:
                continue
            a, ad = det_A(p, n, k)
            b, bd = det_B(p, n, k)
            print(f"q={q} k={k} detA={a} (imag {mp.nstr(ad.imag, 3)}) detB={b}")
    sys.stdout.flush()
