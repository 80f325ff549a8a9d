"""Explicit finite Boolean rings, their spectra, and the Stone comparison map.

A Boolean ring is carried as an explicit element list plus operation
callables.  Clopen-set rings use bitmask elements with symmetric
difference / intersection; table rings use integer indices.  Prime
ideals are constructed from atoms and, for rings of at most 256
elements, revalidated against a from-scratch enumeration of principal
ideals (every ideal of a finite Boolean ring is principal, so that
enumeration is complete) — the two routes share nothing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import FalsifiedInvariantError, InvalidRingError, ResourceBoundError
from .reports import CheckReport
from .topo import FiniteSpace, Partition, are_homeomorphic, points_of

FULL_AXIOM_LIMIT = 64
TABLE_SIZE_LIMIT = 256
BRUTE_PRIME_LIMIT = 256


class BoolRing:
    """Finite Boolean ring with explicit carrier and operations."""

    def __init__(self, elements, add, mul, zero, one, render=None):
        self.elements = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise InvalidRingError("duplicate elements in Boolean ring carrier")
        if zero not in self._index or one not in self._index:
            raise InvalidRingError("zero/one not in carrier")
        self.add: Callable = add
        self.mul: Callable = mul
        self.zero = zero
        self.one = one
        self._render = render or str

    def __len__(self) -> int:
        return len(self.elements)

    def render(self, a) -> str:
        return self._render(a)

    def index(self, a) -> int:
        return self._index[a]

    def check_laws(self) -> None:
        """Pairwise laws: commutativity, identities, x+x=0, x*x=x, closure."""
        els = self.elements
        member = self._index
        for a in els:
            if self.add(a, self.zero) != a or self.mul(a, self.one) != a:
                raise InvalidRingError(f"identity law fails at {a!r}")
            if self.add(a, a) != self.zero:
                raise InvalidRingError(f"characteristic-2 law fails at {a!r}")
            if self.mul(a, a) != a:
                raise InvalidRingError(f"idempotence fails at {a!r}")
        for a in els:
            for b in els:
                s, p = self.add(a, b), self.mul(a, b)
                if s not in member or p not in member:
                    raise InvalidRingError(f"operations not closed at ({a!r}, {b!r})")
                if s != self.add(b, a) or p != self.mul(b, a):
                    raise InvalidRingError(f"commutativity fails at ({a!r}, {b!r})")

    def check_axioms(self, rng: Optional[random.Random] = None) -> None:
        """Full ring axioms.  Cubic checks run exhaustively up to 64
        elements and on seeded samples up to 256."""
        self.check_laws()
        els = self.elements
        if len(els) <= FULL_AXIOM_LIMIT:
            triples = [(a, b, c) for a in els for b in els for c in els]
        else:
            rng = rng or random.Random(0)
            triples = [
                (rng.choice(els), rng.choice(els), rng.choice(els))
                for _ in range(20000)
            ]
        for a, b, c in triples:
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)):
                raise InvalidRingError(f"addition not associative at ({a!r},{b!r},{c!r})")
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise InvalidRingError(f"multiplication not associative at ({a!r},{b!r},{c!r})")
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                raise InvalidRingError(f"distributivity fails at ({a!r},{b!r},{c!r})")

    @classmethod
    def from_tables(cls, size, add_table, mul_table, zero, one) -> "BoolRing":
        if size < 1 or size > TABLE_SIZE_LIMIT:
            raise ResourceBoundError(f"Boolean table rings capped at {TABLE_SIZE_LIMIT} elements")
        if len(add_table) != size or len(mul_table) != size:
            raise InvalidRingError("table dimensions do not match size")
        for row in list(add_table) + list(mul_table):
            if len(row) != size or any(not (0 <= v < size) for v in row):
                raise InvalidRingError("table entries out of range")
        ring = cls(
            range(size),
            lambda a, b: add_table[a][b],
            lambda a, b: mul_table[a][b],
            zero,
            one,
        )
        ring.check_axioms()
        return ring

    def to_table_json(self) -> dict:
        if len(self) > TABLE_SIZE_LIMIT:
            raise ResourceBoundError("table emission capped at 256 elements")
        idx = self._index
        els = self.elements
        return {
            "size": len(els),
            "add": [[idx[self.add(a, b)] for b in els] for a in els],
            "mul": [[idx[self.mul(a, b)] for b in els] for a in els],
            "zero": idx[self.zero],
            "one": idx[self.one],
        }


def clop_ring(space: FiniteSpace) -> BoolRing:
    """Clopen sets under symmetric difference and intersection."""
    masks = space.clopen_masks
    ring = BoolRing(
        masks,
        lambda a, b: a ^ b,
        lambda a, b: a & b,
        0,
        space.full,
        render=lambda a: str(points_of(a)),
    )
    if len(masks) <= TABLE_SIZE_LIMIT:
        ring.check_laws()
    return ring


def atoms(ring: BoolRing) -> tuple:
    """Primitive elements: nonzero a such that a*b = b and b != 0 force b = a."""
    out = []
    for a in ring.elements:
        if a == ring.zero:
            continue
        primitive = True
        for b in ring.elements:
            if b == ring.zero or b == a:
                continue
            if ring.mul(a, b) == b:
                primitive = False
                break
        if primitive:
            out.append(a)
    return tuple(out)


def prime_ideals_bruteforce(ring: BoolRing) -> tuple[frozenset, ...]:
    """All prime ideals, with no reference to atoms.

    Enumerates every principal ideal (z : z*b = z, i.e. the multiples of
    b) — complete because each ideal of a finite Boolean ring is
    principal, generated by the join of its elements — then filters for
    primality directly from the definition.
    """
    if len(ring) > BRUTE_PRIME_LIMIT:
        raise ResourceBoundError("brute-force prime enumeration capped at 256 elements")
    els = ring.elements
    ideals = {frozenset(ring.mul(r, b) for r in els) for b in els}
    primes = []
    for ideal in ideals:
        if ring.one in ideal:
            continue
        is_prime = True
        for x in els:
            for y in els:
                if ring.mul(x, y) in ideal and x not in ideal and y not in ideal:
                    is_prime = False
                    break
            if not is_prime:
                break
        if is_prime:
            primes.append(ideal)
    return tuple(sorted(primes, key=lambda p: sorted(ring.index(e) for e in p)))


@dataclass(frozen=True)
class BoolSpectrum:
    """Prime spectrum of a finite Boolean ring: a discrete finite space.

    Point i carries the prime ideal ``primes[i]``, the annihilator of
    ``point_atoms[i]``.
    """

    space: FiniteSpace
    primes: tuple[frozenset, ...]
    point_atoms: tuple


def boolean_spectrum(ring: BoolRing) -> BoolSpectrum:
    """Spectrum via atoms, cross-validated against brute-force enumeration.

    The zero ring (zero == one) yields the empty space.
    """
    if ring.zero == ring.one:
        return BoolSpectrum(FiniteSpace(0, frozenset({0})), (), ())
    ring_atoms = atoms(ring)
    primes = tuple(
        frozenset(b for b in ring.elements if ring.mul(a, b) == ring.zero)
        for a in ring_atoms
    )
    if len(set(primes)) != len(primes):
        raise FalsifiedInvariantError("distinct atoms produced equal annihilator primes")
    for prime in primes:
        # Boolean maximality: a proper ideal with x or 1+x inside, for all x
        if ring.one in prime:
            raise FalsifiedInvariantError("annihilator prime is not proper")
        for x in ring.elements:
            if x not in prime and ring.add(ring.one, x) not in prime:
                raise FalsifiedInvariantError(
                    "annihilator prime is not maximal", witness=ring.render(x))
    if len(ring) <= BRUTE_PRIME_LIMIT:
        brute = set(prime_ideals_bruteforce(ring))
        if brute != set(primes):
            raise FalsifiedInvariantError(
                "atom-built primes disagree with brute-force prime enumeration",
                witness={
                    "atom_route": len(primes),
                    "brute_route": len(brute),
                },
            )
    k = len(primes)
    space = FiniteSpace(k, frozenset(range(1 << k)))  # finite Boolean spectra are discrete
    return BoolSpectrum(space, primes, ring_atoms)


@dataclass(frozen=True)
class StoneMap:
    """The comparison map components(X) -> Spec(Clop(X)).

    ``point_map[i]`` is the spectrum point of component block i; the
    prime of block [x] is {A clopen : x not in A}.
    """

    components: Partition
    spectrum: BoolSpectrum
    point_map: tuple[int, ...]


def stone_map(space: FiniteSpace) -> StoneMap:
    comps = space.connected_components()
    ring = clop_ring(space)
    spec = boolean_spectrum(ring)
    clop = space.clopen_masks
    prime_index = {p: i for i, p in enumerate(spec.primes)}
    mapping = []
    for block in comps.blocks:
        per_point = {
            frozenset(a for a in clop if not ((a >> x) & 1))
            for x in points_of(block)
        }
        if len(per_point) != 1:
            raise FalsifiedInvariantError(
                "component prime depends on the representative point",
                witness=points_of(block),
            )
        prime = per_point.pop()
        if prime not in prime_index:
            raise FalsifiedInvariantError(
                "component prime missing from the spectrum", witness=points_of(block))
        mapping.append(prime_index[prime])
    return StoneMap(comps, spec, tuple(mapping))


def stone_homeo_check(space: FiniteSpace) -> CheckReport:
    """Assert the comparison map is a bijective homeomorphism.

    Both sides are computed independently (quotient topology vs atom
    spectrum); any failure raises, since it cannot happen on a finite
    space.
    """
    sm = stone_map(space)
    quotient = space.component_space()
    spec_space = sm.spectrum.space
    if len(set(sm.point_map)) != len(sm.point_map):
        raise FalsifiedInvariantError("comparison map is not injective")
    if set(sm.point_map) != set(range(spec_space.n)):
        raise FalsifiedInvariantError("comparison map is not surjective")
    fwd = sm.point_map
    inv = [0] * spec_space.n
    for i, j in enumerate(fwd):
        inv[j] = i
    for v in spec_space.opens:
        pre = 0
        for i in range(quotient.n):
            if (v >> fwd[i]) & 1:
                pre |= 1 << i
        if pre not in quotient.opens:
            raise FalsifiedInvariantError("comparison map is not continuous")
    for u in quotient.opens:
        img = 0
        for j in range(spec_space.n):
            if (u >> inv[j]) & 1:
                img |= 1 << j
        if img not in spec_space.opens:
            raise FalsifiedInvariantError("comparison map inverse is not continuous")
    return CheckReport(
        check="stone-comparison-homeomorphism",
        instance=f"n={space.n},opens={len(space.opens)}",
        passed=True,
        witness={"components": len(sm.components), "spectrum_points": spec_space.n},
    )


def clopen_count_check(space: FiniteSpace) -> CheckReport:
    """|Clop(X)| must equal 2^(number of components)."""
    k = len(space.connected_components())
    ok = len(space.clopen_masks) == (1 << k)
    if not ok:
        raise FalsifiedInvariantError(
            "clopen count is not 2^components",
            witness={"clopens": len(space.clopen_masks), "components": k},
        )
    return CheckReport(
        check="clopen-count-power",
        instance=f"n={space.n},opens={len(space.opens)}",
        passed=True,
        witness={"clopens": len(space.clopen_masks), "components": k},
    )


def selfdual_check(space: FiniteSpace) -> bool:
    """Whether X is homeomorphic to the spectrum of its clopen ring."""
    spec_space = boolean_spectrum(clop_ring(space)).space
    return are_homeomorphic(space, spec_space)


def finiteness_suite(space: FiniteSpace) -> list[CheckReport]:
    """Cross-consistent finiteness facts tied to the component count.

    With k components: the clopen ring is (Z/2)^k by an explicit
    coordinate map, component clopens are a basis over the two-element
    field, the unit is the sum of the pairwise-orthogonal component
    clopens, the ring atoms are exactly the components, and every
    component is open.
    """
    instance = f"n={space.n},opens={len(space.opens)}"
    comps = space.connected_components().blocks
    k = len(comps)
    clop = space.clopen_masks
    reports = []

    # explicit coordinate isomorphism onto (Z/2)^k
    def coords(a: int) -> tuple[int, ...]:
        return tuple(1 if (a & c) == c else 0 for c in comps)

    coord_map = {a: coords(a) for a in clop}
    bijective = (
        len(set(coord_map.values())) == len(clop) and len(clop) == (1 << k)
    )
    hom_ok = all(
        coord_map[a ^ b] == tuple(x ^ y for x, y in zip(coord_map[a], coord_map[b]))
        and coord_map[a & b] == tuple(x & y for x, y in zip(coord_map[a], coord_map[b]))
        for a in clop
        for b in clop
    )
    ends_ok = coord_map[0] == (0,) * k and coord_map[space.full] == (1,) * k
    reports.append(CheckReport(
        "clopen-ring-is-z2-power", instance, bijective and hom_ok and ends_ok,
        witness={"k": k, "clopens": len(clop)},
    ))

    # components are a basis: every clopen is a unique union of components
    spans = all(
        a == _union_of(comps, coord_map[a]) for a in clop
    )
    reports.append(CheckReport("component-clopens-form-basis", instance, bijective and spans))

    # unit decomposes into orthogonal component clopens
    acc = 0
    orthogonal = True
    for i, c in enumerate(comps):
        for d in comps[i + 1:]:
            if c & d:
                orthogonal = False
        acc ^= c
    reports.append(CheckReport(
        "unit-is-orthogonal-component-sum", instance, orthogonal and acc == space.full))

    ring = clop_ring(space)
    reports.append(CheckReport(
        "atoms-are-components", instance, set(atoms(ring)) == set(comps)))

    reports.append(CheckReport(
        "components-are-open", instance, all(c in space.opens for c in comps)))
    return reports


def _union_of(comps, bits) -> int:
    m = 0
    for c, take in zip(comps, bits):
        if take:
            m |= c
    return m
