"""Univariate polynomial arithmetic and factorization over GF(p).

Polynomials are tuples of coefficients in [0, p), lowest degree first,
with no trailing zeros; () is the zero polynomial.  The factorization
pipeline is squarefree decomposition, then distinct-degree splitting,
then equal-degree splitting (Cantor-Zassenhaus for odd p, the trace map
for p = 2).  Randomization inside equal-degree splitting is seeded from
the input so results are reproducible.
"""

from __future__ import annotations

import random

Poly = tuple[int, ...]

X: Poly = (0, 1)


def trim(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def from_int_coeffs(coeffs, p: int) -> Poly:
    return trim(c % p for c in coeffs)


def deg(a: Poly) -> int:
    return len(a) - 1


def is_monic(a: Poly) -> bool:
    return bool(a) and a[-1] == 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, v in enumerate(b):
        c[i] = (c[i] + v) % p
    return trim(c)


def neg(a: Poly, p: int) -> Poly:
    return tuple((p - v) % p for v in a)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    return add(a, neg(b, p), p)


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return ()
    c = [0] * (len(a) + len(b) - 1)
    for i, av in enumerate(a):
        if av:
            for j, bv in enumerate(b):
                c[i + j] = (c[i + j] + av * bv) % p
    return trim(c)


def scale(a: Poly, k: int, p: int) -> Poly:
    k %= p
    return trim(v * k % p for v in a)


def divmod_poly(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    inv_lead = pow(b[-1], p - 2, p)
    r = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        if len(r) >= i + len(b) and r[i + len(b) - 1]:
            qi = r[i + len(b) - 1] * inv_lead % p
            q[i] = qi
            for j, bv in enumerate(b):
                r[i + j] = (r[i + j] - qi * bv) % p
        while r and r[-1] == 0:
            r.pop()
    return trim(q), trim(r)


def mod(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_poly(a, b, p)[1]


def monic(a: Poly, p: int) -> Poly:
    if not a or a[-1] == 1:
        return a
    return scale(a, pow(a[-1], p - 2, p), p)


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def gcdext(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly, Poly]:
    """Returns (g, s, t) with g = gcd monic and s*a + t*b = g."""
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while b:
        q, r = divmod_poly(a, b, p)
        a, b = b, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not a:
        return (), s0, t0
    lead_inv = pow(a[-1], p - 2, p)
    return scale(a, lead_inv, p), scale(s0, lead_inv, p), scale(t0, lead_inv, p)


def pow_mod(a: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = (1,)
    a = mod(a, m, p)
    while e:
        if e & 1:
            result = mod(mul(result, a, p), m, p)
        a = mod(mul(a, a, p), m, p)
        e >>= 1
    return result


def derivative(a: Poly, p: int) -> Poly:
    return trim((i * a[i]) % p for i in range(1, len(a)))


def evaluate(a: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def render(a: Poly, var: str = "x") -> str:
    if not a:
        return "0"
    parts = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{'' if c == 1 else c}{var}")
        else:
            parts.append(f"{'' if c == 1 else c}{var}^{i}")
    return "+".join(parts)


# -- factorization ---------------------------------------------------------


def squarefree_decomposition(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Monic squarefree pairwise-coprime parts with multiplicities.

    Multiplicities not divisible by p fall out of the gcd ladder; the
    residue is a p-th power whose root (coefficients at indices divisible
    by p, since Frobenius fixes the prime field) is processed recursively.
    """
    f = monic(f, p)
    out: dict[Poly, int] = {}

    def pth_root(g: Poly) -> Poly:
        return trim(g[i] for i in range(0, len(g), p))

    def sff(f: Poly, mult: int):
        if deg(f) < 1:
            return
        d = derivative(f, p)
        if not d:
            sff(pth_root(f), mult * p)
            return
        c = gcd(f, d, p)
        w = divmod_poly(f, c, p)[0]
        i = 1
        while deg(w) >= 1:
            y = gcd(w, c, p)
            z = divmod_poly(w, y, p)[0]
            if deg(z) >= 1:
                out[z] = out.get(z, 0) + mult * i
            w = y
            c = divmod_poly(c, y, p)[0]
            i += 1
        if deg(c) >= 1:
            sff(pth_root(c), mult * p)

    sff(f, 1)
    return sorted(out.items())


def distinct_degree(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Splits squarefree monic f into products of irreducibles of equal degree."""
    out = []
    h: Poly = X
    k = 0
    f_star = f
    while deg(f_star) >= 2 * (k + 1):
        k += 1
        h = pow_mod(h, p, f_star, p)
        g = gcd(sub(h, X, p), f_star, p)
        if deg(g) >= 1:
            out.append((g, k))
            f_star = divmod_poly(f_star, g, p)[0]
            h = mod(h, f_star, p)
    if deg(f_star) >= 1:
        out.append((f_star, deg(f_star)))
    return out


def equal_degree_split(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    """Factor squarefree monic f whose irreducible factors all have degree d."""
    n = deg(f)
    if n == d:
        return [f]
    while True:
        a = trim(rng.randrange(p) for _ in range(n))
        if deg(a) < 1:
            continue
        g = gcd(a, f, p)
        if 1 <= deg(g) < n:
            pass
        elif p == 2:
            # trace map: a + a^2 + a^4 + ... splits over GF(2)
            t: Poly = ()
            b = mod(a, f, p)
            for _ in range(d):
                t = add(t, b, p)
                b = pow_mod(b, 2, f, p)
            g = gcd(t, f, p)
        else:
            e = (p**d - 1) // 2
            b = pow_mod(a, e, f, p)
            g = gcd(sub(b, (1,), p), f, p)
        if 1 <= deg(g) < n:
            other = divmod_poly(f, g, p)[0]
            return equal_degree_split(g, d, p, rng) + equal_degree_split(other, d, p, rng)


def factor(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, deterministic output.

    The leading coefficient is dropped (callers here only factor monic
    inputs; a unit never changes the factor set).
    """
    f = monic(f, p)
    if deg(f) < 1:
        return []
    rng = random.Random(hash((p,) + f) & 0xFFFFFFFF)
    out: list[tuple[Poly, int]] = []
    for g, m in squarefree_decomposition(f, p):
        for h, d in distinct_degree(g, p):
            for irr in equal_degree_split(h, d, p, rng):
                out.append((irr, m))
    out.sort()
    # verify the factorization really multiplies back (cheap, always on)
    check: Poly = (1,)
    for g, m in out:
        for _ in range(m):
            check = mul(check, g, p)
    if check != f:
        raise AssertionError("polynomial factorization failed to verify")
    return out


def is_irreducible(f: Poly, p: int) -> bool:
    fs = factor(f, p)
    return len(fs) == 1 and fs[0][1] == 1


def crt_idempotents(parts: list[Poly], f: Poly, p: int) -> list[Poly]:
    """Orthogonal idempotent lifts: e_i = 1 mod parts[i], 0 mod the others.

    ``parts`` must be pairwise coprime with product f.
    """
    units = []
    for q in parts:
        m = divmod_poly(f, q, p)[0]
        g, s, _ = gcdext(m, q, p)
        if g != (1,):
            raise ValueError("CRT parts are not coprime")
        units.append(mod(mul(m, s, p), f, p))
    return units
