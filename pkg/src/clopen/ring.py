"""Computable commutative rings: idempotents, spectra, and decomposition.

Four descriptor classes are supported:

  Zmod(n)          residues mod n, elements are ints in [0, n)
  PolyQuot(p, f)   GF(p)[x]/(f) with f monic, elements are reduced
                   coefficient tuples (see gfpoly)
  Product(...)     finite products, elements are tuples
  Table(...)       explicit operation tables up to 64 elements, the
                   representation-agnostic oracle class

Idempotents of Zmod / PolyQuot rings are built by CRT over the coprime
prime-power factorization and, whenever the ring has at most 4096
elements, cross-checked against a direct scan of e*e == e; the two
routes stay separate on purpose.  Element equality is representation
equality: every constructor below returns canonical representatives.

The zero ring is rejected everywhere (modulus 1, empty products,
one-element tables): the decomposition statements verified here are
stated for nonzero rings only.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional, Union

from . import gfpoly
from .errors import FalsifiedInvariantError, InvalidRingError, ResourceBoundError
from .factorint import factorize, is_probable_prime
from .reports import CheckReport
from .stone import BoolRing, boolean_spectrum, clop_ring, stone_homeo_check
from .topo import FiniteSpace

ZMOD_LIMIT = 10**9
POLY_P_LIMIT = 97
POLY_DEG_LIMIT = 12
TABLE_LIMIT = 64
BRUTE_LIMIT = 4096
MATERIALIZE_LIMIT = 4096
SPECTRUM_POINT_LIMIT = 16


@dataclass(frozen=True)
class Zmod:
    n: int


@dataclass(frozen=True)
class PolyQuot:
    p: int
    f: tuple[int, ...]  # monic, coefficients reduced, lowest degree first


@dataclass(frozen=True)
class Product:
    factors: tuple["RingDesc", ...]


@dataclass(frozen=True)
class Table:
    size: int
    add_table: tuple[tuple[int, ...], ...]
    mul_table: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    path: Optional[str] = None


RingDesc = Union[Zmod, PolyQuot, Product, Table]


def validate_ring(ring: RingDesc) -> RingDesc:
    if isinstance(ring, Zmod):
        if ring.n < 2:
            raise InvalidRingError("modulus must be at least 2 (the zero ring is excluded)")
        if ring.n > ZMOD_LIMIT:
            raise ResourceBoundError(f"modulus capped at {ZMOD_LIMIT}")
        return ring
    if isinstance(ring, PolyQuot):
        if not is_probable_prime(ring.p):
            raise InvalidRingError(f"{ring.p} is not prime")
        if ring.p > POLY_P_LIMIT:
            raise ResourceBoundError(f"polynomial coefficients capped at GF({POLY_P_LIMIT})")
        f = ring.f
        if gfpoly.deg(f) < 1:
            raise InvalidRingError("quotient polynomial must have degree >= 1")
        if gfpoly.deg(f) > POLY_DEG_LIMIT:
            raise ResourceBoundError(f"quotient polynomial degree capped at {POLY_DEG_LIMIT}")
        if not gfpoly.is_monic(f):
            raise InvalidRingError("quotient polynomial must be monic")
        if any(not (0 <= c < ring.p) for c in f):
            raise InvalidRingError("polynomial coefficients must be reduced mod p")
        return ring
    if isinstance(ring, Product):
        if not ring.factors:
            raise InvalidRingError("empty products are excluded")
        for f in ring.factors:
            validate_ring(f)
        return ring
    if isinstance(ring, Table):
        _validate_table(ring)
        return ring
    raise InvalidRingError(f"unknown ring descriptor {ring!r}")


def product_of(factors) -> RingDesc:
    """Flatten nested products and collapse singletons."""
    flat: list[RingDesc] = []
    for f in factors:
        if isinstance(f, Product):
            flat.extend(f.factors)
        else:
            flat.append(f)
    if not flat:
        raise InvalidRingError("empty products are excluded")
    if len(flat) == 1:
        return flat[0]
    return Product(tuple(flat))


def _validate_table(ring: Table) -> None:
    size = ring.size
    if size < 2:
        raise InvalidRingError("table rings must have at least 2 elements")
    if size > TABLE_LIMIT:
        raise ResourceBoundError(f"table rings capped at {TABLE_LIMIT} elements")
    add_t, mul_t = ring.add_table, ring.mul_table
    if len(add_t) != size or len(mul_t) != size:
        raise InvalidRingError("table dimensions do not match size")
    for row in add_t + mul_t:
        if len(row) != size or any(not (0 <= v < size) for v in row):
            raise InvalidRingError("table entries out of range")
    z, o = ring.zero, ring.one
    if not (0 <= z < size and 0 <= o < size) or z == o:
        raise InvalidRingError("zero/one invalid (the zero ring is excluded)")
    els = range(size)
    for a in els:
        if add_t[a][z] != a:
            raise InvalidRingError(f"additive identity fails at {a}")
        if mul_t[a][o] != a:
            raise InvalidRingError(f"multiplicative identity fails at {a}")
        if all(add_t[a][b] != z for b in els):
            raise InvalidRingError(f"no additive inverse for {a}")
    for a in els:
        for b in els:
            if add_t[a][b] != add_t[b][a]:
                raise InvalidRingError(f"addition not commutative at ({a},{b})")
            if mul_t[a][b] != mul_t[b][a]:
                raise InvalidRingError(f"multiplication not commutative at ({a},{b})")
    for a in els:
        for b in els:
            for c in els:
                if add_t[add_t[a][b]][c] != add_t[a][add_t[b][c]]:
                    raise InvalidRingError(f"addition not associative at ({a},{b},{c})")
                if mul_t[mul_t[a][b]][c] != mul_t[a][mul_t[b][c]]:
                    raise InvalidRingError(f"multiplication not associative at ({a},{b},{c})")
                if mul_t[a][add_t[b][c]] != add_t[mul_t[a][b]][mul_t[a][c]]:
                    raise InvalidRingError(f"distributivity fails at ({a},{b},{c})")


def table_from_json(data: dict, path: Optional[str] = None) -> Table:
    try:
        ring = Table(
            size=int(data["size"]),
            add_table=tuple(tuple(row) for row in data["add"]),
            mul_table=tuple(tuple(row) for row in data["mul"]),
            zero=int(data["zero"]),
            one=int(data["one"]),
            path=path,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidRingError(f"malformed table JSON: {exc}") from exc
    return validate_ring(ring)


# -- element operations ------------------------------------------------------


def ring_size(ring: RingDesc) -> int:
    if isinstance(ring, Zmod):
        return ring.n
    if isinstance(ring, PolyQuot):
        return ring.p ** gfpoly.deg(ring.f)
    if isinstance(ring, Product):
        out = 1
        for f in ring.factors:
            out *= ring_size(f)
        return out
    return ring.size


def zero(ring: RingDesc):
    if isinstance(ring, Zmod):
        return 0
    if isinstance(ring, PolyQuot):
        return ()
    if isinstance(ring, Product):
        return tuple(zero(f) for f in ring.factors)
    return ring.zero


def one(ring: RingDesc):
    if isinstance(ring, Zmod):
        return 1 % ring.n
    if isinstance(ring, PolyQuot):
        return (1,)
    if isinstance(ring, Product):
        return tuple(one(f) for f in ring.factors)
    return ring.one


def add(ring: RingDesc, a, b):
    if isinstance(ring, Zmod):
        return (a + b) % ring.n
    if isinstance(ring, PolyQuot):
        return gfpoly.add(a, b, ring.p)
    if isinstance(ring, Product):
        return tuple(add(f, x, y) for f, x, y in zip(ring.factors, a, b))
    return ring.add_table[a][b]


def neg(ring: RingDesc, a):
    if isinstance(ring, Zmod):
        return (-a) % ring.n
    if isinstance(ring, PolyQuot):
        return gfpoly.neg(a, ring.p)
    if isinstance(ring, Product):
        return tuple(neg(f, x) for f, x in zip(ring.factors, a))
    z = ring.zero
    for b in range(ring.size):
        if ring.add_table[a][b] == z:
            return b
    raise InvalidRingError(f"no additive inverse for {a}")


def sub(ring: RingDesc, a, b):
    return add(ring, a, neg(ring, b))


def mul(ring: RingDesc, a, b):
    if isinstance(ring, Zmod):
        return (a * b) % ring.n
    if isinstance(ring, PolyQuot):
        return gfpoly.mod(gfpoly.mul(a, b, ring.p), ring.f, ring.p)
    if isinstance(ring, Product):
        return tuple(mul(f, x, y) for f, x, y in zip(ring.factors, a, b))
    return ring.mul_table[a][b]


def ring_elements(ring: RingDesc) -> Iterator:
    if isinstance(ring, Zmod):
        yield from range(ring.n)
    elif isinstance(ring, PolyQuot):
        d = gfpoly.deg(ring.f)
        for coeffs in itertools.product(range(ring.p), repeat=d):
            yield gfpoly.trim(coeffs)
    elif isinstance(ring, Product):
        yield from itertools.product(*(ring_elements(f) for f in ring.factors))
    else:
        yield from range(ring.size)


def render_elem(ring: RingDesc, a) -> str:
    if isinstance(ring, Zmod):
        return str(a)
    if isinstance(ring, PolyQuot):
        return gfpoly.render(a)
    if isinstance(ring, Product):
        return "(" + ", ".join(render_elem(f, x) for f, x in zip(ring.factors, a)) + ")"
    return f"e{a}"


def elem_key(ring: RingDesc, a):
    if isinstance(ring, Zmod) or isinstance(ring, Table):
        return a
    if isinstance(ring, PolyQuot):
        return (len(a), a)
    return tuple(elem_key(f, x) for f, x in zip(ring.factors, a))


def random_element(ring: RingDesc, rng: random.Random):
    if isinstance(ring, Zmod):
        return rng.randrange(ring.n)
    if isinstance(ring, PolyQuot):
        d = gfpoly.deg(ring.f)
        return gfpoly.trim(rng.randrange(ring.p) for _ in range(d))
    if isinstance(ring, Product):
        return tuple(random_element(f, rng) for f in ring.factors)
    return rng.randrange(ring.size)


# -- idempotents -------------------------------------------------------------


@lru_cache(maxsize=65536)
def idempotents(ring: RingDesc) -> tuple:
    """All solutions of e*e = e, canonically sorted.

    Zmod and PolyQuot go through CRT over the coprime prime-power
    factorization; rings of at most 4096 elements are additionally
    cross-checked against the direct quadratic scan.
    """
    if isinstance(ring, Zmod):
        out = _zmod_idempotents(ring.n)
    elif isinstance(ring, PolyQuot):
        out = _poly_idempotents(ring)
    elif isinstance(ring, Product):
        parts = [idempotents(f) for f in ring.factors]
        out = list(itertools.product(*parts))
    else:
        out = [e for e in range(ring.size) if ring.mul_table[e][e] == e]
    for e in out:
        if mul(ring, e, e) != e:
            raise FalsifiedInvariantError("constructed element is not idempotent",
                                          witness=render_elem(ring, e))
    if len(set(out)) != len(out):
        raise FalsifiedInvariantError("idempotent construction produced duplicates")
    if not isinstance(ring, (Table, Product)) and ring_size(ring) <= BRUTE_LIMIT:
        brute = {e for e in ring_elements(ring) if mul(ring, e, e) == e}
        if brute != set(out):
            raise FalsifiedInvariantError(
                "CRT idempotents disagree with the direct scan",
                witness={"crt": len(out), "scan": len(brute)},
            )
    return tuple(sorted(out, key=lambda e: elem_key(ring, e)))


def _zmod_idempotents(n: int) -> list[int]:
    parts = [p**a for p, a in factorize(n)]
    units = []
    for q in parts:
        m = n // q
        units.append(m * pow(m, -1, q) % n)
    out = []
    for bits in range(1 << len(units)):
        e = 0
        for i, u in enumerate(units):
            if (bits >> i) & 1:
                e += u
        out.append(e % n)
    return out


def _poly_idempotents(ring: PolyQuot) -> list:
    p, f = ring.p, ring.f
    parts = [_poly_pow(g, m, p) for g, m in gfpoly.factor(f, p)]
    units = gfpoly.crt_idempotents(parts, f, p)
    out = []
    for bits in range(1 << len(units)):
        e: gfpoly.Poly = ()
        for i, u in enumerate(units):
            if (bits >> i) & 1:
                e = gfpoly.add(e, u, p)
        out.append(e)
    return out


def _poly_pow(g, m: int, p: int):
    out: gfpoly.Poly = (1,)
    for _ in range(m):
        out = gfpoly.mul(out, g, p)
    return out


def primitive_idempotents(ring: RingDesc) -> tuple:
    """Atoms of the idempotent lattice; orthogonal with sum 1 (verified)."""
    idems = idempotents(ring)
    prims = []
    for e in idems:
        if e == zero(ring):
            continue
        if any(
            e2 != e and e2 != zero(ring) and mul(ring, e, e2) == e2
            for e2 in idems
        ):
            continue
        prims.append(e)
    for i, e in enumerate(prims):
        for e2 in prims[i + 1:]:
            if mul(ring, e, e2) != zero(ring):
                raise FalsifiedInvariantError(
                    "primitive idempotents are not orthogonal",
                    witness=(render_elem(ring, e), render_elem(ring, e2)),
                )
    total = zero(ring)
    for e in prims:
        total = add(ring, total, e)
    if total != one(ring):
        raise FalsifiedInvariantError("primitive idempotents do not sum to 1")
    return tuple(prims)


def boolean_ring(ring: RingDesc) -> BoolRing:
    """Idempotents under e (+) e' = e + e' - 2ee' and the ring product."""
    idems = idempotents(ring)

    def bool_add(a, b):
        twice = add(ring, mul(ring, a, b), mul(ring, a, b))
        return sub(ring, add(ring, a, b), twice)

    out = BoolRing(
        idems,
        bool_add,
        lambda a, b: mul(ring, a, b),
        zero(ring),
        one(ring),
        render=lambda a: render_elem(ring, a),
    )
    if len(idems) <= 256:
        out.check_laws()
    return out


# -- prime spectra -----------------------------------------------------------


@dataclass(frozen=True)
class PrimeIdeal:
    """Symbolic prime descriptor; ``data`` depends on ``kind``.

    zmod: the prime divisor p (the ideal pZ/nZ); poly: a monic
    irreducible factor of f; product: (component index, inner prime);
    table: the explicit element set.
    """

    kind: str
    data: object

    def contains(self, ring: RingDesc, elem) -> bool:
        if self.kind == "zmod":
            return elem % self.data == 0
        if self.kind == "poly":
            return gfpoly.mod(elem, self.data, ring.p) == ()
        if self.kind == "product":
            idx, inner = self.data
            return inner.contains(ring.factors[idx], elem[idx])
        return elem in self.data

    def contains_prime(self, ring: RingDesc, other: "PrimeIdeal") -> bool:
        """Whether self, as a set, contains the other prime."""
        if self.kind != other.kind:
            return False
        if self.kind == "zmod":
            return other.data % self.data == 0
        if self.kind == "poly":
            return gfpoly.mod(other.data, self.data, ring.p) == ()
        if self.kind == "product":
            i, inner_self = self.data
            j, inner_other = other.data
            return i == j and inner_self.contains_prime(ring.factors[i], inner_other)
        return other.data <= self.data

    def materialize(self, ring: RingDesc) -> frozenset:
        if ring_size(ring) > MATERIALIZE_LIMIT:
            raise ResourceBoundError("ideal materialization capped at 4096 elements")
        return frozenset(e for e in ring_elements(ring) if self.contains(ring, e))

    def render(self, ring: RingDesc) -> str:
        if self.kind == "zmod":
            return f"({self.data % ring.n})"
        if self.kind == "poly":
            return f"({gfpoly.render(self.data)})"
        if self.kind == "product":
            idx, inner = self.data
            return f"[{idx}]{inner.render(ring.factors[idx])}"
        return "(" + ",".join(f"e{i}" for i in sorted(self.data)) + ")"

    def sort_key(self):
        if self.kind == "zmod":
            return (self.data,)
        if self.kind == "poly":
            return (len(self.data), self.data)
        if self.kind == "product":
            idx, inner = self.data
            return (idx, inner.sort_key())
        return tuple(sorted(self.data))


@dataclass(frozen=True)
class Spectrum:
    """The prime spectrum as a finite space with prime labels per point."""

    ring: RingDesc
    space: FiniteSpace
    primes: tuple[PrimeIdeal, ...]

    def point_of(self, prime: PrimeIdeal) -> int:
        return self.primes.index(prime)

    def labels(self) -> list[str]:
        return [p.render(self.ring) for p in self.primes]


@lru_cache(maxsize=8192)
def spectrum(ring: RingDesc) -> Spectrum:
    """Zariski spectrum; built via basic open sets D(r) and checked discrete.

    Discreteness is asserted, not assumed: the supported classes are
    zero-dimensional, so the generated topology must come out as the
    full power set, and anything else raises.
    """
    primes = _prime_list(ring)
    k = len(primes)
    if k > SPECTRUM_POINT_LIMIT:
        raise ResourceBoundError("spectra capped at 16 points")
    gens = set()
    for r in _separating_elements(ring):
        gens.add(_d_mask(ring, r, primes))
    opens = set(gens)
    opens.add(0)
    opens.add((1 << k) - 1)
    changed = True
    while changed:
        changed = False
        current = list(opens)
        for a in current:
            for b in current:
                for c in (a | b, a & b):
                    if c not in opens:
                        opens.add(c)
                        changed = True
    if opens != set(range(1 << k)):
        raise FalsifiedInvariantError(
            "spectrum failed the discreteness audit",
            witness={"points": k, "opens": len(opens)},
        )
    space = FiniteSpace(k, frozenset(opens))
    return Spectrum(ring, space, primes)


def _prime_list(ring: RingDesc) -> tuple[PrimeIdeal, ...]:
    if isinstance(ring, Zmod):
        primes = [PrimeIdeal("zmod", p) for p, _ in factorize(ring.n)]
    elif isinstance(ring, PolyQuot):
        primes = [PrimeIdeal("poly", g) for g, _ in gfpoly.factor(ring.f, ring.p)]
    elif isinstance(ring, Product):
        primes = [
            PrimeIdeal("product", (i, inner))
            for i, f in enumerate(ring.factors)
            for inner in _prime_list(f)
        ]
    else:
        primes = [PrimeIdeal("table", ideal) for ideal in table_prime_ideals(ring)]
    return tuple(sorted(primes, key=lambda p: p.sort_key()))


def _separating_elements(ring: RingDesc) -> Iterator:
    """Elements whose D-sets generate the topology.

    All idempotents always; every element too when the ring is small, so
    the construction is not secretly specialized to idempotent opens.
    """
    yield one(ring)
    yield zero(ring)
    yield from idempotents(ring)
    if ring_size(ring) <= 256:
        yield from ring_elements(ring)


def _d_mask(ring: RingDesc, r, primes) -> int:
    m = 0
    for i, p in enumerate(primes):
        if not p.contains(ring, r):
            m |= 1 << i
    return m


def d_set(ring: RingDesc, r, spec: Optional[Spectrum] = None) -> int:
    """Points of the spectrum whose prime does not contain r, as a mask."""
    spec = spec or spectrum(ring)
    return _d_mask(ring, r, spec.primes)


# -- ideals of table rings ---------------------------------------------------


def table_all_ideals(ring: Table) -> list[frozenset]:
    """Every ideal: principal ideals closed under pairwise ideal sum.

    Complete because each ideal of a finite ring is a finite sum of
    principal ideals.
    """
    els = range(ring.size)
    principal = {
        frozenset(ring.mul_table[r][a] for r in els) for a in els
    }
    ideals = set(principal)
    frontier = list(principal)
    while frontier:
        new = []
        for i in frontier:
            for j in principal:
                s = frozenset(
                    ring.add_table[x][y] for x in i for y in j
                )
                if s not in ideals:
                    ideals.add(s)
                    new.append(s)
        frontier = new
    return sorted(ideals, key=lambda s: (len(s), sorted(s)))


def table_prime_ideals(ring: Table) -> list[frozenset]:
    out = []
    for ideal in table_all_ideals(ring):
        if ring.one in ideal:
            continue
        prime = True
        for a in range(ring.size):
            if not prime:
                break
            for b in range(ring.size):
                if ring.mul_table[a][b] in ideal and a not in ideal and b not in ideal:
                    prime = False
                    break
        if prime:
            out.append(ideal)
    return out


def to_table(ring: RingDesc) -> Table:
    """Re-encode a small ring as an explicit table (oracle cross-checks)."""
    size = ring_size(ring)
    if size > TABLE_LIMIT:
        raise ResourceBoundError(f"table encoding capped at {TABLE_LIMIT} elements")
    els = sorted(ring_elements(ring), key=lambda e: elem_key(ring, e))
    idx = {e: i for i, e in enumerate(els)}
    return validate_ring(Table(
        size=size,
        add_table=tuple(tuple(idx[add(ring, a, b)] for b in els) for a in els),
        mul_table=tuple(tuple(idx[mul(ring, a, b)] for b in els) for a in els),
        zero=idx[zero(ring)],
        one=idx[one(ring)],
    ))


# -- regular ideals and quotients --------------------------------------------


@dataclass(frozen=True)
class RegularIdeal:
    """A principal ideal generated by an idempotent."""

    generator: object


def regular_ideal(ring: RingDesc, generator) -> RegularIdeal:
    if mul(ring, generator, generator) != generator:
        raise InvalidRingError("regular ideals need an idempotent generator")
    return RegularIdeal(generator)


def regular_part(ring: RingDesc, prime: PrimeIdeal) -> RegularIdeal:
    """The ideal generated by the idempotents inside a prime.

    Always principal: the generator is the join of those idempotents,
    and it equals 1 - e for the unique primitive idempotent e whose
    D-set contains the prime (checked).
    """
    inside = [e for e in idempotents(ring) if prime.contains(ring, e)]
    gen = zero(ring)
    for e in inside:
        # join of commuting idempotents: a + b - ab
        gen = sub(ring, add(ring, gen, e), mul(ring, gen, e))
    for e in inside:
        if mul(ring, e, gen) != e:
            raise FalsifiedInvariantError("join does not dominate an idempotent in the prime")
    outside = [e for e in primitive_idempotents(ring) if not prime.contains(ring, e)]
    if len(outside) != 1 or sub(ring, one(ring), outside[0]) != gen:
        raise FalsifiedInvariantError(
            "idempotent part of a prime is not the complement of one primitive idempotent",
            witness=prime.render(ring),
        )
    return RegularIdeal(gen)


@dataclass(frozen=True)
class QuotientMap:
    """Canonical quotient by a principal regular ideal, with a section."""

    source: RingDesc
    ring: RingDesc
    project: Callable
    lift: Callable


def quotient_by(ring: RingDesc, ideal: RegularIdeal) -> QuotientMap:
    gen = ideal.generator
    if mul(ring, gen, gen) != gen:
        raise InvalidRingError("quotient requires an idempotent generator")
    if gen == one(ring):
        raise InvalidRingError("quotient by the unit ideal is rejected")
    if isinstance(ring, Zmod):
        import math

        d = math.gcd(gen, ring.n)
        if d == 1:
            raise InvalidRingError("quotient by the unit ideal is rejected")
        return QuotientMap(ring, Zmod(d), lambda r: r % d, lambda c: c)
    if isinstance(ring, PolyQuot):
        g = gfpoly.gcd(gen, ring.f, ring.p)
        if gfpoly.deg(g) < 1:
            raise InvalidRingError("quotient by the unit ideal is rejected")
        p = ring.p
        return QuotientMap(
            ring, PolyQuot(p, g),
            lambda r: gfpoly.mod(r, g, p),
            lambda c: c,
        )
    if isinstance(ring, Product):
        kept = [i for i, f in enumerate(ring.factors) if gen[i] != one(f)]
        if not kept:
            raise InvalidRingError("quotient by the unit ideal is rejected")
        sub_maps = [quotient_by(ring.factors[i], regular_ideal(ring.factors[i], gen[i]))
                    for i in kept]
        target = product_of([m.ring for m in sub_maps])
        zeros = tuple(zero(f) for f in ring.factors)
        if len(kept) == 1:
            (i0,), (m0,) = kept, sub_maps

            def project(r):
                return m0.project(r[i0])

            def lift(c):
                out = list(zeros)
                out[i0] = m0.lift(c)
                return tuple(out)
        else:
            def project(r):
                return tuple(m.project(r[i]) for i, m in zip(kept, sub_maps))

            def lift(c):
                out = list(zeros)
                for (i, m), v in zip(zip(kept, sub_maps), c):
                    out[i] = m.lift(v)
                return tuple(out)

        return QuotientMap(ring, target, project, lift)
    # Table: explicit cosets
    ideal_set = sorted({ring.mul_table[r][gen] for r in range(ring.size)})
    coset_of = {}
    reps = []
    for a in range(ring.size):
        if a in coset_of:
            continue
        coset = sorted(ring.add_table[a][j] for j in ideal_set)
        rep = coset[0]
        reps.append(rep)
        for member in coset:
            coset_of[member] = rep
    reps.sort()
    new_index = {rep: i for i, rep in enumerate(reps)}
    add_t = tuple(
        tuple(new_index[coset_of[ring.add_table[a][b]]] for b in reps) for a in reps
    )
    mul_t = tuple(
        tuple(new_index[coset_of[ring.mul_table[a][b]]] for b in reps) for a in reps
    )
    target = validate_ring(Table(
        size=len(reps),
        add_table=add_t,
        mul_table=mul_t,
        zero=new_index[coset_of[ring.zero]],
        one=new_index[coset_of[ring.one]],
    ))
    return QuotientMap(
        ring, target,
        lambda r: new_index[coset_of[r]],
        lambda c: reps[c],
    )


def max_regular_check(ring: RingDesc, ideal: RegularIdeal) -> bool:
    """True iff the quotient has no nontrivial idempotents."""
    if ideal.generator == one(ring):
        raise InvalidRingError("the unit ideal is not a proper regular ideal")
    q = quotient_by(ring, ideal)
    return len(idempotents(q.ring)) == 2


# -- the equivalence and decomposition suites ---------------------------------


def primitivity_suite(ring: RingDesc, e) -> CheckReport:
    """Evaluate the four equivalent characterizations of a primitive idempotent.

    (a) e primitive; (b) (1-e) generates a max-regular ideal; (c) D(e)
    is a connected component of the spectrum; (d) D(e) is connected.
    All four must agree for every idempotent.
    """
    if mul(ring, e, e) != e:
        raise InvalidRingError("primitivity suite requires an idempotent")
    spec = spectrum(ring)
    is_primitive = e in primitive_idempotents(ring)
    complement = sub(ring, one(ring), e)
    if complement == one(ring):  # e == 0, so the candidate ideal is all of R
        is_max_regular = False
    else:
        is_max_regular = max_regular_check(ring, RegularIdeal(complement))
    mask = d_set(ring, e, spec)
    components = spec.space.connected_components().blocks
    is_component = mask in components
    is_connected = spec.space.subset_connected(mask)
    agree = is_primitive == is_max_regular == is_component == is_connected
    return CheckReport(
        check="primitivity-equivalence",
        instance=f"e={render_elem(ring, e)}",
        passed=agree,
        witness={
            "primitive": is_primitive,
            "max_regular": is_max_regular,
            "component": is_component,
            "connected": is_connected,
        },
    )


@dataclass
class Decomposition:
    ring: RingDesc
    primitive: tuple
    maps: tuple[QuotientMap, ...]
    verified: bool
    checked_elements: int

    @property
    def factors(self) -> tuple[RingDesc, ...]:
        return tuple(m.ring for m in self.maps)

    def forward(self, r):
        return tuple(m.project(r) for m in self.maps)

    def backward(self, t):
        out = zero(self.ring)
        for m, e, c in zip(self.maps, self.primitive, t):
            out = add(self.ring, out, mul(self.ring, m.lift(c), e))
        return out


def decompose(ring: RingDesc, rng: Optional[random.Random] = None) -> Decomposition:
    """The product decomposition along primitive idempotents, verified.

    Forward map r |-> (r mod (1-e_k))_k; backward map lifts and
    recombines via r = sum r_k e_k.  Both composites are checked to be
    identities on every element for rings of at most 4096 elements, on
    1000 seeded samples (plus all idempotents) otherwise; the
    homomorphism law is checked on all pairs for tiny rings and sampled
    pairs otherwise.
    """
    prims = primitive_idempotents(ring)
    maps = tuple(
        quotient_by(ring, regular_ideal(ring, sub(ring, one(ring), e)))
        for e in prims
    )
    dec = Decomposition(ring, prims, maps, verified=False, checked_elements=0)
    size = ring_size(ring)
    prod_size = 1
    for m in maps:
        prod_size *= ring_size(m.ring)
    ok = prod_size == size
    checked = 0
    if size <= MATERIALIZE_LIMIT:
        for r in ring_elements(ring):
            if dec.backward(dec.forward(r)) != r:
                ok = False
                break
            checked += 1
        if ok:
            for t in itertools.product(*(ring_elements(m.ring) for m in maps)):
                if dec.forward(dec.backward(t)) != t:
                    ok = False
                    break
    else:
        rng = rng or random.Random(0)
        sample = [random_element(ring, rng) for _ in range(1000)]
        sample.extend(idempotents(ring))
        for r in sample:
            if dec.backward(dec.forward(r)) != r:
                ok = False
                break
            checked += 1
        if ok:
            for _ in range(1000):
                t = tuple(random_element(m.ring, rng) for m in maps)
                if dec.forward(dec.backward(t)) != t:
                    ok = False
                    break
    if ok:
        if size <= 64:
            pairs = [(a, b) for a in ring_elements(ring) for b in ring_elements(ring)]
        else:
            rng = rng or random.Random(0)
            pairs = [
                (random_element(ring, rng), random_element(ring, rng))
                for _ in range(300)
            ]
        for a, b in pairs:
            fa, fb = dec.forward(a), dec.forward(b)
            sum_ok = dec.forward(add(ring, a, b)) == tuple(
                add(m.ring, x, y) for m, x, y in zip(maps, fa, fb))
            mul_ok = dec.forward(mul(ring, a, b)) == tuple(
                mul(m.ring, x, y) for m, x, y in zip(maps, fa, fb))
            if not (sum_ok and mul_ok):
                ok = False
                break
    dec.verified = ok
    dec.checked_elements = checked
    return dec


def clop_iso_check(ring: RingDesc) -> CheckReport:
    """e |-> D(e) must be a Boolean ring isomorphism onto the clopens."""
    b = boolean_ring(ring)
    spec = spectrum(ring)
    clop = clop_ring(spec.space)
    image = {e: d_set(ring, e, spec) for e in b.elements}
    bijective = (
        len(set(image.values())) == len(b.elements)
        and set(image.values()) == set(clop.elements)
    )
    zero_one = image[b.zero] == 0 and image[b.one] == spec.space.full
    hom = all(
        image[b.add(x, y)] == (image[x] ^ image[y])
        and image[b.mul(x, y)] == (image[x] & image[y])
        for x in b.elements
        for y in b.elements
    )
    return CheckReport(
        check="idempotent-clopen-isomorphism",
        instance=f"|B|={len(b.elements)}",
        passed=bijective and zero_one and hom,
        witness={"idempotents": len(b.elements), "clopens": len(clop.elements)},
    )


def component_suite(ring: RingDesc, rng: Optional[random.Random] = None) -> list[CheckReport]:
    """Finiteness/decomposition facts for one ring, cross-checked.

    Covers: idempotent count a power of two; orthogonal unit sum;
    verified product decomposition with idempotent-free factors; the
    spectrum components being exactly the D(e) = V(1-e) of primitive e;
    kappa agreeing across all counts; the minimal-prime law for
    max-regular ideals; principality of regular ideals; and the
    component space of the spectrum matching the Boolean spectrum.
    """
    instance = _describe(ring)
    reports = []
    idems = idempotents(ring)
    prims = primitive_idempotents(ring)
    k = len(prims)
    reports.append(CheckReport(
        "idempotent-count-power-of-two", instance,
        len(idems) == (1 << k), witness={"idempotents": len(idems), "primitive": k}))

    ordinary = zero(ring)
    boolean = zero(ring)
    b = boolean_ring(ring)
    orthogonal = True
    for i, e in enumerate(prims):
        ordinary = add(ring, ordinary, e)
        boolean = b.add(boolean, e)
        for e2 in prims[i + 1:]:
            if mul(ring, e, e2) != zero(ring):
                orthogonal = False
    reports.append(CheckReport(
        "primitive-orthogonal-unit-sum", instance,
        orthogonal and ordinary == one(ring) and boolean == one(ring)))

    dec = decompose(ring, rng)
    reports.append(CheckReport(
        "decomposition-isomorphism", instance, dec.verified and len(dec.maps) == k,
        witness={"factors": len(dec.maps), "checked_elements": dec.checked_elements}))

    factors_trivial = all(len(idempotents(m.ring)) == 2 for m in dec.maps)
    reports.append(CheckReport(
        "factors-have-trivial-idempotents", instance, factors_trivial))

    spec = spectrum(ring)
    components = set(spec.space.connected_components().blocks)
    d_sets = {d_set(ring, e, spec) for e in prims}
    v_sets = {spec.space.full & ~d_set(ring, sub(ring, one(ring), e), spec) for e in prims}
    reports.append(CheckReport(
        "components-are-primitive-d-sets", instance,
        components == d_sets and components == v_sets,
        witness={"components": len(components)}))

    bool_spec = boolean_spectrum(b)
    stone_ok = stone_homeo_check(spec.space).passed
    reports.append(CheckReport(
        "kappa-consistency", instance,
        len(components) == k == len(bool_spec.primes)
        and len(idems) == (1 << k) and stone_ok,
        witness={"kappa": k}))

    min_ok = True
    all_primes = spec.primes
    minimal = [
        p for p in all_primes
        if not any(q != p and p.contains_prime(ring, q) for q in all_primes)
    ]
    for e in prims:
        gen = sub(ring, one(ring), e)
        v_of = [p for p in all_primes if p.contains(ring, gen)]
        min_of_ideal = [
            p for p in v_of
            if not any(q != p and p.contains_prime(ring, q) for q in v_of)
        ]
        expected = [p for p in minimal if p in v_of]
        if set(min_of_ideal) != set(expected):
            min_ok = False
    reports.append(CheckReport("max-regular-min-primes", instance, min_ok))

    # Ideals generated by two idempotents collapse to the principal ideal
    # of their join: join = a + (1-a)c exhibits membership, and a, c are
    # both multiples of the join.  With finitely many idempotents this
    # pins every regular ideal as finitely generated and principal.
    principal_ok = True
    for a in idems:
        for c in idems:
            join = sub(ring, add(ring, a, c), mul(ring, a, c))
            combination = add(ring, a, mul(ring, sub(ring, one(ring), a), c))
            if combination != join:
                principal_ok = False
            if mul(ring, a, join) != a or mul(ring, c, join) != c:
                principal_ok = False
    reports.append(CheckReport(
        "regular-ideals-principal", instance, principal_ok,
        witness={"checked_pairs": len(idems) ** 2}))

    reports.append(clop_iso_check(ring))
    return reports


def _describe(ring: RingDesc) -> str:
    if isinstance(ring, Zmod):
        return f"Z/{ring.n}"
    if isinstance(ring, PolyQuot):
        return f"GF({ring.p})[x]/({gfpoly.render(ring.f)})"
    if isinstance(ring, Product):
        return " x ".join(_describe(f) for f in ring.factors)
    if ring.path:
        return f"table:{ring.path}"
    return f"table#{ring.size}"
