#!/usr/bin/env python3
"""Generate classical modular polynomial data files Phi_p(X, Y).

Method: over a prime l with l = 1 (mod p), F_l contains a primitive p-th
root of unity z, so the p+1 functions

    j(q^p),  j(z^i * q^(1/p))   (i = 0, ..., p-1)

can be manipulated directly as Laurent series in u = q^(1/p) with
coefficients in F_l.  Their monic product in X is Phi_p(X, j(q)); its
X-coefficients collapse to series in q (asserted), each equal to an
integer polynomial in j(q) of degree <= p+1.  The run is repeated for
enough word-size primes l to recover the integer coefficients by CRT
(symmetric lift), and re-checked against held-out primes.

Validation performed here:
  * the X-coefficient series reduce to polynomials in j with zero remainder
  * literal classical coefficients of Phi_2 and Phi_3
  * symmetry  c[a][b] == c[b][a]  and monicity  c[p+1][0] == 1
  * Kronecker congruence  Phi_p(X,Y) == (X^p - Y)(X - Y^p)  (mod p)
  * full recomputation modulo two held-out primes

Output format (one file per p, consumed by the C++ loader):
    p <prime>
    <a> <b> <coefficient>     # term in X^a Y^b and X^b Y^a, a >= b
"""

import argparse
import sys
import time
from pathlib import Path

import numpy as np
from sympy import isprime

GUARD = 6  # q-precision kept above q^0 to witness exact remainders


# ----------------------------------------------------------------------------
# Laurent series windows: coefficients for exponents lo .. lo+len(a)-1.
# ----------------------------------------------------------------------------
class Ser:
    __slots__ = ("lo", "a")

    def __init__(self, lo, a):
        self.lo = lo
        self.a = np.asarray(a, dtype=np.int64)

    @property
    def hi(self):
        return self.lo + len(self.a) - 1


def ser_mul(s, t, ell, hi):
    arr = np.convolve(s.a, t.a) % ell
    lo = s.lo + t.lo
    return Ser(lo, arr[: hi - lo + 1])


def ser_sub(s, t, ell):
    lo = min(s.lo, t.lo)
    hi = max(s.hi, t.hi)
    arr = np.zeros(hi - lo + 1, dtype=np.int64)
    arr[s.lo - lo : s.lo - lo + len(s.a)] += s.a
    arr[t.lo - lo : t.lo - lo + len(t.a)] -= t.a
    return Ser(lo, arr % ell)


# ----------------------------------------------------------------------------
# q-expansion of j: exact over Z (small windows) and mod l (long windows).
# ----------------------------------------------------------------------------
def j_coeffs_exact(nmax):
    """Integer coefficients c_n of j = 1/q + 744 + ... for n <= nmax."""
    H = nmax + 1
    sig3 = [0] * (H + 1)
    for d in range(1, H + 1):
        d3 = d * d * d
        for m in range(d, H + 1, d):
            sig3[m] += d3
    e4 = [240 * s for s in sig3]
    e4[0] = 1

    def mul_trunc(x, y):
        out = [0] * (H + 1)
        for i, xi in enumerate(x):
            if xi:
                for k in range(0, H + 1 - i):
                    out[i + k] += xi * y[k]
        return out

    e4cb = mul_trunc(mul_trunc(e4, e4), e4)
    phi = [0] * (H + 1)
    phi[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= H:
        s = -1 if k % 2 else 1
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        phi[g1] += s
        if g2 <= H:
            phi[g2] += s
        k += 1
    p2 = mul_trunc(phi, phi)
    p4 = mul_trunc(p2, p2)
    p8 = mul_trunc(p4, p4)
    p16 = mul_trunc(p8, p8)
    p24 = mul_trunc(p16, p8)
    inv = [0] * (H + 1)
    inv[0] = 1
    for m in range(1, H + 1):
        inv[m] = -sum(p24[k] * inv[m - k] for k in range(1, m + 1))
    jq = mul_trunc(e4cb, inv)
    assert jq[0] == 1 and jq[1] == 744 and jq[2] == 196884 and jq[3] == 21493760
    return jq[: nmax + 2]  # c_{-1} .. c_{nmax}


def j_coeffs_mod(ell, nmax):
    """c_n mod ell for n <= nmax, as int64 array indexed by n+1."""
    H = nmax + 1
    n = np.arange(H + 1, dtype=np.int64)
    cube = (n * n % ell) * n % ell
    sig3 = np.zeros(H + 1, dtype=np.int64)
    for d in range(1, H + 1):
        sig3[d::d] += cube[d]
        if d % 32 == 0:
            sig3 %= ell
    sig3 %= ell
    e4 = (240 * sig3) % ell
    e4[0] = 1
    e4cb = np.convolve(np.convolve(e4, e4)[: H + 1] % ell, e4)[: H + 1] % ell
    phi = np.zeros(H + 1, dtype=np.int64)
    phi[0] = 1
    k = 1
    while k * (3 * k - 1) // 2 <= H:
        s = ell - 1 if k % 2 else 1
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        phi[g1] = (phi[g1] + s) % ell
        if g2 <= H:
            phi[g2] = (phi[g2] + s) % ell
        k += 1
    p2 = np.convolve(phi, phi)[: H + 1] % ell
    p4 = np.convolve(p2, p2)[: H + 1] % ell
    p8 = np.convolve(p4, p4)[: H + 1] % ell
    p16 = np.convolve(p8, p8)[: H + 1] % ell
    p24 = np.convolve(p16, p8)[: H + 1] % ell
    inv = np.zeros(H + 1, dtype=np.int64)
    inv[0] = 1
    for m in range(1, H + 1):
        inv[m] = (-np.dot(p24[1 : m + 1], inv[m - 1 :: -1])) % ell
    jq = np.convolve(e4cb, inv) % ell
    out = jq[: nmax + 2]
    assert out[0] == 1 and out[1] == 744 % ell and out[2] == 196884 % ell
    return out


def primitive_pth_root(p, ell):
    assert (ell - 1) % p == 0
    e = (ell - 1) // p
    a = 2
    while True:
        z = pow(a, e, ell)
        if z != 1:
            assert pow(z, p, ell) == 1
            return z
        a += 1


def phi_columns_mod(p, ell, G=GUARD):
    """X-coefficient q-series of Phi_p(X, j(q)) modulo ell.

    Returns a list C[0..p+1]; C[r] is the q-window [-(p+1), G] of the
    coefficient of X^r.
    """
    qtop = G + p          # q-precision needed before the j(q^p) factor
    ntop = p * qtop + p + 2
    jc = j_coeffs_mod(ell, ntop)  # c_n, index n+1
    z = primitive_pth_root(p, ell)
    zpow = np.array([pow(z, i, ell) for i in range(p)], dtype=np.int64)
    exps = np.arange(-1, ntop + 1, dtype=np.int64)

    # incremental product over the p twists, coefficients = u-series
    poly = [Ser(0, np.array([1], dtype=np.int64))]  # degree 0 in X
    for i in range(p):
        f = Ser(-1, jc * zpow[(i * exps) % p] % ell)
        top = p * qtop + (p - 1 - i)  # u-precision still trusted after this step
        new = []
        for r in range(len(poly) + 1):
            cur = None
            if r >= 1:
                cur = poly[r - 1]
            if r < len(poly):
                fs = ser_mul(f, poly[r], ell, top)
                cur = ser_sub(cur, fs, ell) if cur is not None else Ser(fs.lo, (-fs.a) % ell)
            new.append(cur)
        poly = new

    # u-support must be concentrated on multiples of p: reindex u^(pm) -> q^m
    trusted = p * qtop
    qser = []
    for r, s in enumerate(poly):
        lo = s.lo
        arr = s.a[: trusted - lo + 1]  # drop coefficients past the trusted top
        exps_r = np.arange(lo, lo + len(arr))
        stray = (exps_r % p != 0) & (arr % ell != 0)
        if stray.any():
            raise AssertionError(f"p={p} ell={ell}: X^{r} has stray u-terms")
        first = lo + (-lo) % p
        take = arr[first - lo :: p]
        qs = Ser(first // p, take)
        qser.append(qs)

    # multiply by (X - j(q^p)); j(q^p) needs few q-terms only
    jp = np.zeros(2 * p + G + 1, dtype=np.int64)
    for nn in range(-1, (G + p) // p + 1):
        if p * nn + p < len(jp):
            jp[p * nn + p] = jc[nn + 1]
    jpser = Ser(-p, jp)
    cols = []
    for r in range(p + 2):
        cur = None
        if r >= 1:
            cur = qser[r - 1]
        if r < len(qser):
            fs = ser_mul(jpser, qser[r], ell, G)
            cur = ser_sub(cur, fs, ell) if cur is not None else Ser(fs.lo, (-fs.a) % ell)
        # final window [-(p+1), G]
        lo, hi = -(p + 1), G
        arr = np.zeros(hi - lo + 1, dtype=np.int64)
        s0 = max(cur.lo, lo)
        s1 = min(cur.hi, hi)
        if s0 <= s1:
            arr[s0 - lo : s1 - lo + 1] = cur.a[s0 - cur.lo : s1 - cur.lo + 1]
        for e in range(cur.lo, lo):  # nothing may live below the window
            assert cur.a[e - cur.lo] % ell == 0
        cols.append(arr % ell)
    return cols


def crt_lift(residues, mods):
    """Symmetric CRT lift of one integer from (residue, modulus) pairs."""
    M = 1
    x = 0
    for r, m in zip(residues, mods):
        r = int(r)
        # incremental CRT: x' = x + M * t, t = (r - x)/M mod m
        t = ((r - x) * pow(M % m, -1, m)) % m
        x = x + M * t
        M *= m
    if x > M // 2:
        x -= M
    return x


PHI2_LITERAL = {
    (3, 0): 1,
    (2, 2): -1,
    (2, 1): 1488,
    (2, 0): -162000,
    (1, 1): 40773375,
    (1, 0): 8748000000,
    (0, 0): -157464000000000,
}

PHI3_LITERAL = {
    (4, 0): 1,
    (3, 3): -1,
    (3, 2): 2232,
    (3, 1): -1069956,
    (3, 0): 36864000,
    (2, 2): 2587918086,
    (2, 1): 8900222976000,
    (2, 0): 452984832000000,
    (1, 1): -770845966336000000,
    (1, 0): 1855425871872000000000,
    (0, 0): 0,
}


def reduce_to_j_polys(p, cols_int, G=GUARD):
    """Rewrite each exact X-coefficient q-series as a polynomial in j."""
    T = G + p + 1  # power windows carry slack: each multiply loses one top term
    jx = j_coeffs_exact(T + p + 1)
    jpow = [[1] + [0] * G]  # j^0 on [0, G]
    cur = {0: 1}
    for d in range(1, p + 2):
        nxt = {}
        for e1, v1 in cur.items():
            for n in range(-1, T - e1 + 1):
                e = e1 + n
                if -d <= e <= T:
                    nxt[e] = nxt.get(e, 0) + v1 * jx[n + 1]
        cur = nxt
        jpow.append([cur.get(e, 0) for e in range(-d, G + 1)])

    out = []
    for r in range(p + 2):
        E = list(cols_int[r])  # window [-(p+1), G]
        lo = -(p + 1)
        g = [0] * (p + 2)
        for d in range(p + 1, -1, -1):
            a = E[-d - lo]
            if a:
                g[d] = a
                w = jpow[d]
                for idx, e in enumerate(range(-d, G + 1)):
                    E[e - lo] -= a * w[idx]
        if any(E):
            raise AssertionError(f"p={p}: X^{r} series is not a polynomial in j")
        out.append(g)
    return out


def kronecker_check(p, coeff):
    """Phi_p(X,Y) == (X^p - Y)(X - Y^p) mod p."""
    ref = {}
    ref[(p + 1, 0)] = ref.get((p + 1, 0), 0) + 1  # X^{p+1}
    ref[(p, p)] = ref.get((p, p), 0) - 1          # -X^p Y^p
    ref[(1, 1)] = ref.get((1, 1), 0) - 1          # -X Y
    ref[(0, p + 1)] = ref.get((0, p + 1), 0) + 1  # Y^{p+1}
    keys = set(coeff) | {k for k in ref}
    for (a, b) in keys:
        lhs = coeff.get((a, b), 0) % p
        rhs = ref.get((a, b), 0) % p
        if lhs != rhs:
            raise AssertionError(f"p={p}: Kronecker congruence fails at X^{a} Y^{b}")


def gen_phi(p, num_primes, out_dir):
    t0 = time.time()
    ells = []
    cand = (2**23 - 2) // p * p + 1
    while len(ells) < num_primes + 2:
        if cand > 1 and isprime(cand) and cand > p + 1:
            ells.append(cand)
        cand -= p
        if cand < 3:
            raise RuntimeError("ran out of CRT primes")
    held_out = ells[num_primes:]
    ells = ells[:num_primes]

    per_ell = [phi_columns_mod(p, ell) for ell in ells]
    width = (p + 1) + GUARD + 1
    cols_int = []
    for r in range(p + 2):
        col = []
        for idx in range(width):
            col.append(crt_lift([pe[r][idx] for pe in per_ell], ells))
        cols_int.append(col)

    # held-out verification of the CRT lift
    for ell in held_out:
        ref = phi_columns_mod(p, ell)
        for r in range(p + 2):
            for idx in range(width):
                if cols_int[r][idx] % ell != ref[r][idx] % ell:
                    raise AssertionError(f"p={p}: held-out prime {ell} disagrees; "
                                         "increase --num-primes")

    gpolys = reduce_to_j_polys(p, cols_int)
    coeff = {}
    for r in range(p + 2):
        for d in range(p + 2):
            c = gpolys[r][d]
            if c:
                coeff[(r, d)] = c

    # structural validation
    assert coeff.get((p + 1, 0)) == 1, "not monic"
    for (a, b), c in coeff.items():
        assert a <= p + 1 and b <= p + 1
        assert coeff.get((b, a), 0) == c, f"asymmetric at {(a, b)}"
    kronecker_check(p, coeff)
    if p == 2:
        lit = {k: v for k, v in PHI2_LITERAL.items() if v}
        got = {(a, b): c for (a, b), c in coeff.items() if a >= b}
        assert got == lit, "Phi_2 mismatch with classical literal"
    if p == 3:
        lit = {k: v for k, v in PHI3_LITERAL.items() if v}
        got = {(a, b): c for (a, b), c in coeff.items() if a >= b}
        assert got == lit, "Phi_3 mismatch with classical literal"

    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"phi_{p}.txt"
    with open(path, "w") as fh:
        fh.write(f"p {p}\n")
        for (a, b) in sorted((k for k in coeff if k[0] >= k[1]), reverse=True):
            fh.write(f"{a} {b} {coeff[(a, b)]}\n")
    print(f"phi_{p}: {len(coeff)} terms, {time.time()-t0:.1f}s -> {path}",
          flush=True)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="*",
                    default=[2, 3, 5, 7, 11, 13, 17, 19, 23, 29])
    ap.add_argument("--num-primes", type=int, default=72,
                    help="CRT primes per level (2 extra are held out)")
    ap.add_argument("--out-dir", type=Path,
                    default=Path(__file__).resolve().parent.parent / "data" / "modpoly")
    args = ap.parse_args()
    for p in args.primes:
        if not isprime(p):
            sys.exit(f"{p} is not prime")
        gen_phi(p, args.num_primes, args.out_dir)


if __name__ == "__main__":
    main()
