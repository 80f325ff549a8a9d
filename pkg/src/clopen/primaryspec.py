"""The space of primary ideals with its radical-complement basis opens.

A proper ideal I is primary when ab in I and a outside sqrt(I) force
b in I.  For Z/n the primary ideals are exactly (d) for the prime-power
divisors d > 1 (with (n) = (0)); for table rings they are found by
scanning every ideal against the definition.  The topology is generated
by the sets U_r = {I : r not in sqrt(I)}; that family already contains
the whole space (r = 1) and is closed under intersection, so closing
under unions is all that generation needs — both facts are checked, not
assumed.

The point of this space: closures behave like Zariski closures
(cl{I} = {J : I inside sqrt(J)}, verified), but generic points need not
be unique — Z/p^k for k >= 2 has ((p), (0)) as distinct generic points
of the same irreducible closed set, so the space fails soberness.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import ring as rng_mod
from .errors import FalsifiedInvariantError, InvalidRingError, ResourceBoundError
from .factorint import prime_power_divisors, radical
from .reports import CheckReport
from .ring import RingDesc, Table, Zmod, ring_elements, ring_size
from .topo import ContinuousMap, FiniteSpace

PRIMARY_ZMOD_LIMIT = 4096
PRIMARY_TABLE_LIMIT = 16


@dataclass(frozen=True)
class PrimaryIdeal:
    """Symbolic primary ideal: a prime-power divisor for Z/n (d = n is
    the zero ideal), or an explicit element set for table rings."""

    kind: str
    data: object

    def contains(self, ring: RingDesc, elem) -> bool:
        if self.kind == "zmod":
            return elem % self.data == 0
        return elem in self.data

    def radical_contains(self, ring: RingDesc, elem) -> bool:
        if self.kind == "zmod":
            return elem % radical(self.data) == 0
        return _table_radical_contains(ring, self.data, elem)

    def radical_subset_of(self, ring: RingDesc, other: "PrimaryIdeal") -> bool:
        """Whether self is contained in sqrt(other)."""
        if self.kind == "zmod":
            # (d) inside (rad(d')) iff rad(d') divides d
            return self.data % radical(other.data) == 0
        return all(other.radical_contains(ring, e) for e in self.data)

    def render(self, ring: RingDesc) -> str:
        if self.kind == "zmod":
            return f"({self.data % ring.n})"
        return "(" + ",".join(f"e{i}" for i in sorted(self.data)) + ")"

    def sort_key(self):
        if self.kind == "zmod":
            return (self.data,)
        return tuple(sorted(self.data))


def _table_radical_contains(ring: Table, ideal: frozenset, elem) -> bool:
    power = elem
    for _ in range(ring.size + 1):
        if power in ideal:
            return True
        power = ring.mul_table[power][elem]
    return False


def is_primary_ideal(ring: RingDesc, members: frozenset) -> bool:
    """Direct check of the primary condition on a materialized ideal."""
    size = ring_size(ring)
    if size > PRIMARY_ZMOD_LIMIT:
        raise ResourceBoundError("primary brute-force check capped at 4096 elements")
    if rng_mod.one(ring) in members:
        return False

    def in_radical(a):
        power = a
        for _ in range(size + 1):
            if power in members:
                return True
            power = rng_mod.mul(ring, power, a)
        return False

    for a in ring_elements(ring):
        if in_radical(a):
            continue
        for b in ring_elements(ring):
            if rng_mod.mul(ring, a, b) in members and b not in members:
                return False
    return True


def primary_ideals(ring: RingDesc) -> tuple[PrimaryIdeal, ...]:
    if isinstance(ring, Zmod):
        ds = set(prime_power_divisors(ring.n))
        # the zero ideal (n) is primary exactly when n is a prime power
        out = [PrimaryIdeal("zmod", d) for d in sorted(ds)]
        return tuple(sorted(out, key=lambda i: i.sort_key()))
    if isinstance(ring, Table):
        if ring.size > PRIMARY_TABLE_LIMIT:
            raise ResourceBoundError(
                f"table primary enumeration capped at {PRIMARY_TABLE_LIMIT} elements")
        out = []
        for ideal in rng_mod.table_all_ideals(ring):
            if is_primary_ideal(ring, ideal):
                out.append(PrimaryIdeal("table", ideal))
        return tuple(sorted(out, key=lambda i: i.sort_key()))
    raise InvalidRingError("primary spectra support Zmod and Table rings")


@dataclass(frozen=True)
class PrimarySpace:
    ring: RingDesc
    ideals: tuple[PrimaryIdeal, ...]
    space: FiniteSpace

    def labels(self) -> list[str]:
        return [i.render(self.ring) for i in self.ideals]

    def u_mask(self, r) -> int:
        """U_r: the points whose radical misses r."""
        return _u_mask(self.ring, self.ideals, r)


def _u_mask(ring: RingDesc, ideals, r) -> int:
    m = 0
    for i, ideal in enumerate(ideals):
        if not ideal.radical_contains(ring, r):
            m |= 1 << i
    return m


def primary_space(ring: RingDesc) -> PrimarySpace:
    if isinstance(ring, Zmod) and ring.n > PRIMARY_ZMOD_LIMIT:
        raise ResourceBoundError(f"primary spaces capped at Z/{PRIMARY_ZMOD_LIMIT}")
    ideals = primary_ideals(ring)
    k = len(ideals)
    basis = {_u_mask(ring, ideals, r) for r in ring_elements(ring)}
    opens = set(basis)
    opens.add(0)
    frontier = list(opens)
    while frontier:
        new = []
        for a in frontier:
            for b in basis:
                u = a | b
                if u not in opens:
                    opens.add(u)
                    new.append(u)
        frontier = new
    space = FiniteSpace(k, frozenset(opens))
    return PrimarySpace(ring, ideals, space)


def basis_identity_check(ring: RingDesc) -> CheckReport:
    """U_1 = X and U_r * U_s = U_{rs} for every element pair."""
    ps = primary_space(ring)
    full = ps.space.full
    masks = {r: ps.u_mask(r) for r in ring_elements(ring)}
    ok = masks[rng_mod.one(ring)] == full
    pairs = 0
    for r, mr in masks.items():
        for s, ms in masks.items():
            pairs += 1
            if (mr & ms) != masks[rng_mod.mul(ring, r, s)]:
                ok = False
    return CheckReport(
        check="primary-basis-identities",
        instance=_name(ring),
        passed=ok,
        witness={"pairs": pairs, "points": len(ps.ideals)},
    )


def radical_projection(ring: RingDesc) -> tuple[PrimarySpace, rng_mod.Spectrum, ContinuousMap]:
    """The map I -> sqrt(I) onto the prime spectrum, verified continuous
    (preimage of D(r) is U_r) and surjective."""
    ps = primary_space(ring)
    spec = rng_mod.spectrum(ring)
    values = []
    for ideal in ps.ideals:
        target = None
        for j, prime in enumerate(spec.primes):
            if _radical_equals_prime(ring, ideal, prime):
                target = j
                break
        if target is None:
            raise FalsifiedInvariantError(
                "primary ideal whose radical is not prime", witness=ideal.render(ring))
        values.append(target)
    fmap = ContinuousMap(ps.space, spec.space, tuple(values))
    if set(values) != set(range(spec.space.n)):
        raise FalsifiedInvariantError("radical projection is not surjective")
    for r in ring_elements(ring):
        if fmap.preimage(rng_mod.d_set(ring, r, spec)) != ps.u_mask(r):
            raise FalsifiedInvariantError(
                "preimage of a basic open is not the matching U_r",
                witness=rng_mod.render_elem(ring, r),
            )
    return ps, spec, fmap


def _radical_equals_prime(ring: RingDesc, ideal: PrimaryIdeal, prime) -> bool:
    if ideal.kind == "zmod":
        return radical(ideal.data) == prime.data
    rad = frozenset(
        e for e in ring_elements(ring) if _table_radical_contains(ring, ideal.data, e)
    )
    return rad == prime.data


def closure_law_check(ring: RingDesc) -> CheckReport:
    """cl{I} must equal {J : I inside sqrt(J)} point for point."""
    ps = primary_space(ring)
    ok = True
    for i, ideal in enumerate(ps.ideals):
        expected = 0
        for j, other in enumerate(ps.ideals):
            if ideal.radical_subset_of(ring, other):
                expected |= 1 << j
        if ps.space.point_closures[i] != expected:
            ok = False
    if not ok:
        raise FalsifiedInvariantError("closure law failed on the primary space")
    return CheckReport("primary-closure-law", _name(ring), True,
                       witness={"points": len(ps.ideals)})


def sober_witness(ring: RingDesc) -> Optional[dict]:
    """A non-soberness witness, or None when the space is sober.

    Returns the offending irreducible closed set together with all its
    generic points; the closure law is revalidated on the way.
    """
    closure_law_check(ring)
    ps = primary_space(ring)
    sober, witness = ps.space.is_sober()
    if sober:
        return None
    labels = ps.labels()
    return {
        "closed_set": [labels[i] for i in witness["closed_set"]],
        "generic_points": [labels[i] for i in witness["generic_points"]],
    }


def closed_points_maximal_check(ring: RingDesc) -> CheckReport:
    """Every closed point of the primary space is a maximal ideal.

    (Only this direction is claimed; the converse needs infinite rings.)
    """
    ps = primary_space(ring)
    ok = True
    for i, ideal in enumerate(ps.ideals):
        if ps.space.point_closures[i] != (1 << i):
            continue
        if not _is_maximal(ring, ideal):
            ok = False
    return CheckReport("closed-points-are-maximal", _name(ring), ok)


def _is_maximal(ring: RingDesc, ideal: PrimaryIdeal) -> bool:
    if ideal.kind == "zmod":
        from .factorint import is_probable_prime

        return is_probable_prime(ideal.data)
    members = ideal.data
    for other in rng_mod.table_all_ideals(ring):
        if members < other and ring.one not in other:
            return False
    return True


def spectrum_embeds_check(ring: RingDesc) -> CheckReport:
    """Primes sit inside the primary space with their Zariski topology.

    Every prime is primary; the subspace topology on those points must
    match the spectrum exactly.
    """
    ps = primary_space(ring)
    spec = rng_mod.spectrum(ring)
    prime_points = []
    for prime in spec.primes:
        hit = None
        for i, ideal in enumerate(ps.ideals):
            if _materialize_equal(ring, ideal, prime):
                hit = i
                break
        if hit is None:
            return CheckReport("spectrum-embeds-in-primary-space", _name(ring), False,
                               witness=prime.render(ring))
        prime_points.append(hit)
    sub_opens = set()
    mask = 0
    for i in prime_points:
        mask |= 1 << i
    for u in ps.space.opens:
        rel = 0
        for k, i in enumerate(prime_points):
            if (u >> i) & 1:
                rel |= 1 << k
        sub_opens.add(rel)
    ok = sub_opens == set(spec.space.opens)
    return CheckReport("spectrum-embeds-in-primary-space", _name(ring), ok,
                       witness={"primes": len(prime_points)})


def _materialize_equal(ring: RingDesc, ideal: PrimaryIdeal, prime) -> bool:
    if ideal.kind == "zmod":
        return prime.kind == "zmod" and ideal.data == prime.data
    return prime.kind == "table" and ideal.data == prime.data


def basis_quasi_compactness_check(ring: RingDesc) -> CheckReport:
    """Every U_r is covered by finitely many basis opens inside it.

    Vacuous at finite scale (recorded for form): the canonical cover of
    U_r by all U_s contained in it is itself finite and must reassemble
    U_r exactly.
    """
    ps = primary_space(ring)
    masks = {ps.u_mask(r) for r in ring_elements(ring)}
    ok = True
    for u in masks:
        union = 0
        pieces = 0
        for v in masks:
            if v & ~u == 0:
                union |= v
                pieces += 1
        if union != u:
            ok = False
    return CheckReport("primary-basis-opens-quasi-compact", _name(ring), ok,
                       witness={"basis_opens": len(masks)})


def primary_suite(ring: RingDesc) -> list[CheckReport]:
    reports = [
        basis_identity_check(ring),
        closure_law_check(ring),
        spectrum_embeds_check(ring),
        closed_points_maximal_check(ring),
        basis_quasi_compactness_check(ring),
    ]
    ps, spec, fmap = radical_projection(ring)
    reports.append(CheckReport(
        "radical-projection-continuous-surjective", _name(ring), True,
        witness={"points": ps.space.n, "primes": spec.space.n}))
    return reports


def _name(ring: RingDesc) -> str:
    return rng_mod._describe(ring)
