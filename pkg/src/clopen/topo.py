"""Finite topological spaces on point sets {0, ..., n-1}.

Subsets are machine-word bitmasks: point i belongs to mask m iff
``(m >> i) & 1``.  A space is a pair (n, opens) where ``opens`` is a
frozenset of masks containing the empty and full masks and closed under
pairwise union and intersection; for finite spaces that is the complete
set of topology axioms (arbitrary unions/intersections reduce to pairwise
ones).

Connected components are computed from the comparability graph of the
specialization preorder (x <= y iff x lies in the closure of {y}), never
from clopen sets.  Quasi-components are computed from clopen sets only.
Keeping the two routes disjoint is what makes comparing them a test
rather than a restatement, so do not "optimize" one in terms of the
other.

Exhaustive enumeration of all topologies on n points is supported for
n <= 4 by filtering subset families (2^(2^n - 2) candidates) and for
n = 5 through the preorder representation; the two routes double as
independent recounts of each other.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Optional

from .errors import (
    FalsifiedInvariantError,
    InvalidMapError,
    InvalidSpaceError,
    ResourceBoundError,
)

ENUM_POINT_LIMIT = 5
SUBBASIS_POINT_LIMIT = 16
SINGLE_SPACE_POINT_LIMIT = 64


def mask_of(points: Iterable[int]) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def points_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def lowest_point(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class UnionFind:
    """Disjoint sets over range(n) with path compression + union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty blocks (as masks) covering {0, ..., n-1}.

    Blocks are kept sorted by their least point, so equal partitions
    compare equal structurally.
    """

    n: int
    blocks: tuple[int, ...]

    def __post_init__(self):
        full = (1 << self.n) - 1
        seen = 0
        for b in self.blocks:
            if b == 0:
                raise InvalidSpaceError("empty partition block")
            if b & seen:
                raise InvalidSpaceError("overlapping partition blocks")
            seen |= b
        if seen != full:
            raise InvalidSpaceError("partition blocks do not cover all points")
        if list(self.blocks) != sorted(self.blocks, key=lowest_point):
            raise InvalidSpaceError("partition blocks not in canonical order")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[int]) -> "Partition":
        return cls(n, tuple(sorted(blocks, key=lowest_point)))

    def as_lists(self) -> list[list[int]]:
        return [points_of(b) for b in self.blocks]

    def block_of(self, point: int) -> int:
        for b in self.blocks:
            if (b >> point) & 1:
                return b
        raise IndexError(point)

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class FiniteSpace:
    """A finite topological space: point count + open-set family."""

    n: int
    opens: frozenset[int]

    def __post_init__(self):
        if self.n < 0 or self.n > SINGLE_SPACE_POINT_LIMIT:
            raise ResourceBoundError(f"point count {self.n} out of supported range")
        full = (1 << self.n) - 1
        if 0 not in self.opens or full not in self.opens:
            raise InvalidSpaceError("opens must contain the empty and full sets")
        for u in self.opens:
            if u & ~full:
                raise InvalidSpaceError(f"open {u:#x} mentions points >= {self.n}")

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_opens(cls, n: int, opens: Iterable[Iterable[int] | int]) -> "FiniteSpace":
        """Validating constructor: checks closure under union/intersection."""
        masks = set()
        for u in opens:
            masks.add(u if isinstance(u, int) else mask_of(u))
        masks.add(0)
        masks.add((1 << n) - 1)
        space = cls(n, frozenset(masks))
        fam = sorted(masks)
        for i, a in enumerate(fam):
            for b in fam[i + 1:]:
                if a | b not in masks:
                    raise InvalidSpaceError(
                        f"not closed under union: {points_of(a)} | {points_of(b)}")
                if a & b not in masks:
                    raise InvalidSpaceError(
                        f"not closed under intersection: {points_of(a)} & {points_of(b)}")
        return space

    @classmethod
    def from_subbasis(cls, n: int, sets: Iterable[Iterable[int] | int]) -> "FiniteSpace":
        """Smallest topology containing ``sets``.

        Finite intersections first (the empty intersection is the full
        set), then arbitrary unions (the empty union is the empty set).
        """
        if n > SUBBASIS_POINT_LIMIT:
            raise ResourceBoundError(f"subbasis generation capped at {SUBBASIS_POINT_LIMIT} points")
        full = (1 << n) - 1
        gens = []
        for s in sets:
            m = s if isinstance(s, int) else mask_of(s)
            if m & ~full:
                raise InvalidSpaceError(f"subbasis set {points_of(m)} not within 0..{n - 1}")
            gens.append(m)
        basis = {full}
        for g in gens:
            basis |= {b & g for b in basis}
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
        return cls(n, frozenset(opens))

    @classmethod
    def discrete(cls, n: int) -> "FiniteSpace":
        if n > SUBBASIS_POINT_LIMIT:
            raise ResourceBoundError("discrete space materialization capped at 16 points")
        return cls(n, frozenset(range(1 << n)))

    @classmethod
    def indiscrete(cls, n: int) -> "FiniteSpace":
        return cls(n, frozenset({0, (1 << n) - 1}))

    @classmethod
    def sierpinski(cls) -> "FiniteSpace":
        return cls(2, frozenset({0, 0b10, 0b11}))

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteSpace":
        if ("opens" in data) == ("subbasis" in data):
            raise InvalidSpaceError("space JSON needs exactly one of 'opens' / 'subbasis'")
        n = data["n"]
        if not isinstance(n, int) or n < 0:
            raise InvalidSpaceError("'n' must be a nonnegative integer")
        if "opens" in data:
            return cls.from_opens(n, data["opens"])
        return cls.from_subbasis(n, data["subbasis"])

    def to_json_dict(self) -> dict:
        return {"n": self.n, "opens": [points_of(u) for u in self.opens_sorted]}

    # -- basic structure ------------------------------------------------

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def opens_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens))

    @cached_property
    def closed_sorted(self) -> tuple[int, ...]:
        full = self.full
        return tuple(sorted(full & ~u for u in self.opens))

    def is_open(self, mask: int) -> bool:
        return mask in self.opens

    def is_closed(self, mask: int) -> bool:
        return (self.full & ~mask) in self.opens

    def closure(self, mask: int) -> int:
        """Smallest closed superset: complement of the union of opens missing mask."""
        avoid = 0
        for u in self.opens:
            if not (u & mask):
                avoid |= u
        return self.full & ~avoid

    @cached_property
    def point_closures(self) -> tuple[int, ...]:
        return tuple(self.closure(1 << x) for x in range(self.n))

    def specializes(self, x: int, y: int) -> bool:
        """x <= y in the specialization preorder, i.e. x in cl{y}."""
        return bool((self.point_closures[y] >> x) & 1)

    @cached_property
    def comparability(self) -> tuple[int, ...]:
        """Adjacency masks of the specialization comparability graph."""
        cls = self.point_closures
        adj = [0] * self.n
        for x in range(self.n):
            for y in range(self.n):
                if x != y and (((cls[y] >> x) & 1) or ((cls[x] >> y) & 1)):
                    adj[x] |= 1 << y
        return tuple(adj)

    # -- components and quasi-components ---------------------------------

    def connected_components(self) -> Partition:
        """Components via the specialization comparability graph.

        Every returned block is audited directly: its subspace topology
        must have no nontrivial clopen subset.
        """
        part = self._components
        for block in part.blocks:
            bad = self._nontrivial_subspace_clopen(block)
            if bad is not None:
                raise FalsifiedInvariantError(
                    "component audit failed: subspace has a nontrivial clopen",
                    witness={"block": points_of(block), "clopen": points_of(bad)},
                )
        return part

    @cached_property
    def _components(self) -> Partition:
        uf = UnionFind(self.n)
        adj = self.comparability
        for x in range(self.n):
            for y in points_of(adj[x]):
                uf.union(x, y)
        groups: dict[int, int] = {}
        for x in range(self.n):
            r = uf.find(x)
            groups[r] = groups.get(r, 0) | (1 << x)
        return Partition.from_blocks(self.n, groups.values())

    def _nontrivial_subspace_clopen(self, block: int) -> Optional[int]:
        rel = {u & block for u in self.opens}
        for a in rel:
            if a != 0 and a != block and (block & ~a) in rel:
                return a
        return None

    def quasi_components(self) -> Partition:
        """Blocks are intersections of all clopens containing each point."""
        clop = self.clopen_masks
        blocks = {}
        for x in range(self.n):
            q = self.full
            for a in clop:
                if (a >> x) & 1:
                    q &= a
            blocks[q] = True
        return Partition.from_blocks(self.n, blocks.keys())

    @cached_property
    def clopen_masks(self) -> tuple[int, ...]:
        full = self.full
        return tuple(sorted(u for u in self.opens if (full & ~u) in self.opens))

    def subset_connected(self, mask: int) -> bool:
        """Connectivity of a subspace: nonempty + comparability-connected.

        The subspace specialization order is the restriction of the
        ambient one, so the restricted comparability graph decides it.
        """
        if mask == 0:
            return False
        adj = self.comparability
        reach = mask & -mask
        while True:
            grow = reach
            m = reach
            while m:
                x = lowest_point(m)
                m &= m - 1
                grow |= adj[x] & mask
            if grow == reach:
                return reach == mask
            reach = grow

    def is_connected(self) -> bool:
        return self.subset_connected(self.full)

    # -- quotient by components ------------------------------------------

    def component_space(self) -> "FiniteSpace":
        """Quotient space of components with the quotient topology.

        Point i of the result is block i of ``connected_components()``.
        An image set is open iff its preimage (a union of blocks) is open.
        """
        part = self._components
        k = len(part.blocks)
        opens = set()
        for u in self.opens:
            q = 0
            saturated = True
            for i, b in enumerate(part.blocks):
                inter = u & b
                if inter == b:
                    q |= 1 << i
                elif inter:
                    saturated = False
                    break
            if saturated:
                opens.add(q)
        return FiniteSpace(k, frozenset(opens))

    def component_indicator_basis(self) -> tuple[tuple[int, ...], ...]:
        """Characteristic functions of the components, as integer vectors.

        These are the primitive idempotents of the ring of continuous
        integer-valued functions and an integer basis for it.
        """
        part = self._components
        return tuple(
            tuple(1 if (b >> x) & 1 else 0 for x in range(self.n))
            for b in part.blocks
        )

    # -- soberness --------------------------------------------------------

    def is_irreducible_closed(self, mask: int) -> bool:
        """Nonempty closed set whose meeting opens pairwise meet inside it."""
        if mask == 0 or not self.is_closed(mask):
            return False
        meeting = [u for u in self.opens if u & mask]
        for i, u in enumerate(meeting):
            for v in meeting[i + 1:]:
                if not (u & v & mask):
                    return False
        return True

    def generic_points(self, mask: int) -> list[int]:
        return [x for x in points_of(mask) if self.point_closures[x] == mask]

    def is_sober(self) -> tuple[bool, Optional[dict]]:
        """True iff every irreducible closed subset has a unique generic point.

        On failure returns a witness: the offending closed set and its
        generic-point list.
        """
        for c in self.closed_sorted:
            if c == 0:
                continue
            if self.is_irreducible_closed(c):
                gen = self.generic_points(c)
                if len(gen) != 1:
                    return False, {"closed_set": points_of(c), "generic_points": gen}
        return True, None

    # -- rendering ---------------------------------------------------------

    def specialization_dot(self) -> str:
        """DOT digraph of the transitively reduced specialization preorder.

        Edge x -> y iff x lies in cl{y}; components are clusters.
        Topologically indistinguishable points are drawn as a cycle.
        """
        n = self.n
        leq = [[self.specializes(x, y) for y in range(n)] for x in range(n)]
        uf = UnionFind(n)
        for x in range(n):
            for y in range(n):
                if x != y and leq[x][y] and leq[y][x]:
                    uf.union(x, y)
        classes: dict[int, list[int]] = {}
        for x in range(n):
            classes.setdefault(uf.find(x), []).append(x)
        cls_list = sorted(classes.values(), key=lambda c: c[0])
        idx = {x: i for i, c in enumerate(cls_list) for x in c}
        k = len(cls_list)
        below = [
            [i != j and leq[cls_list[i][0]][cls_list[j][0]] for j in range(k)]
            for i in range(k)
        ]
        edges = []
        for i in range(k):
            for j in range(k):
                if below[i][j] and not any(
                    below[i][m] and below[m][j] for m in range(k) if m not in (i, j)
                ):
                    edges.append((cls_list[i][0], cls_list[j][0]))
        for c in cls_list:
            if len(c) > 1:
                edges.extend(zip(c, c[1:] + c[:1]))
        lines = ["digraph specialization {", "  rankdir=BT;"]
        for ci, block in enumerate(self._components.blocks):
            lines.append(f"  subgraph cluster_{ci} {{")
            for x in points_of(block):
                lines.append(f"    p{x} [label=\"{x}\"];")
            lines.append("  }")
        for x, y in sorted(edges):
            lines.append(f"  p{x} -> p{y};")
        lines.append("}")
        return "\n".join(lines)


def are_homeomorphic(x: FiniteSpace, y: FiniteSpace) -> bool:
    """Brute-force homeomorphism test (point permutations), n <= 8."""
    if x.n != y.n or len(x.opens) != len(y.opens):
        return False
    if sorted(u.bit_count() for u in x.opens) != sorted(u.bit_count() for u in y.opens):
        return False
    if x.n > 8:
        raise ResourceBoundError("homeomorphism search capped at 8 points")
    from itertools import permutations

    for perm in permutations(range(x.n)):
        image = set()
        for u in x.opens:
            image.add(mask_of(perm[p] for p in points_of(u)))
        if image == set(y.opens):
            return True
    return False


@dataclass(frozen=True)
class ContinuousMap:
    """A point map whose open-set preimages are open (checked on build)."""

    source: FiniteSpace
    target: FiniteSpace
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.source.n:
            raise InvalidMapError("values length must match source point count")
        for v in self.values:
            if not (0 <= v < self.target.n):
                raise InvalidMapError(f"value {v} outside target point range")
        for u in self.target.opens:
            if self.preimage(u) not in self.source.opens:
                raise InvalidMapError(
                    f"preimage of open {points_of(u)} is not open")

    def preimage(self, target_mask: int) -> int:
        m = 0
        for x, v in enumerate(self.values):
            if (target_mask >> v) & 1:
                m |= 1 << x
        return m

    def image(self, source_mask: int) -> int:
        m = 0
        for x in points_of(source_mask):
            m |= 1 << self.values[x]
        return m

    def fibers(self) -> tuple[int, ...]:
        return tuple(self.preimage(1 << y) for y in range(self.target.n))

    def is_closed_map(self) -> bool:
        return all(self.target.is_closed(self.image(c)) for c in self.source.closed_sorted)

    def is_open_map(self) -> bool:
        return all(self.image(u) in self.target.opens for u in self.source.opens)

    @classmethod
    def identity(cls, space: FiniteSpace) -> "ContinuousMap":
        return cls(space, space, tuple(range(space.n)))


def find_section(f: ContinuousMap, limit: int = 4096) -> Optional[ContinuousMap]:
    """Search for a continuous right inverse of f, if any fiber choice yields one."""
    from itertools import product as iproduct

    fibers = [points_of(m) for m in f.fibers()]
    if any(not fib for fib in fibers):
        return None
    total = 1
    for fib in fibers:
        total *= len(fib)
        if total > limit:
            raise ResourceBoundError("section search space too large")
    for choice in iproduct(*fibers):
        try:
            g = ContinuousMap(f.target, f.source, tuple(choice))
        except InvalidMapError:
            continue
        return g
    return None


def pullback_clopens(f: ContinuousMap) -> dict[int, int]:
    """The preimage map on clopen sets, verified to be a Boolean ring morphism."""
    src, tgt = f.source, f.target
    src_clop = set(src.clopen_masks)
    out = {}
    for a in tgt.clopen_masks:
        pre = f.preimage(a)
        if pre not in src_clop:
            raise FalsifiedInvariantError(
                "preimage of a clopen is not clopen", witness=points_of(a))
        out[a] = pre
    full_t, full_s = tgt.full, src.full
    if out[0] != 0 or out[full_t] != full_s:
        raise FalsifiedInvariantError("clopen pullback does not preserve 0/1")
    items = list(out)
    for a in items:
        for b in items:
            if out[a ^ b] != out[a] ^ out[b] or out[a & b] != out[a] & out[b]:
                raise FalsifiedInvariantError(
                    "clopen pullback is not a ring morphism",
                    witness=(points_of(a), points_of(b)),
                )
    return out


@dataclass(frozen=True)
class FiberTransferReport:
    applicable: bool
    mode: str
    reason: Optional[str] = None
    subsets_checked: int = 0
    whole_space_agrees: bool = False

    @property
    def passed(self) -> bool:
        return self.applicable


def fiber_transfer_check(
    f: ContinuousMap,
    mode: str,
    section: Optional[ContinuousMap] = None,
) -> FiberTransferReport:
    """Connectivity transfer along a map with connected fibers.

    Preconditions: every fiber nonempty and connected, and f closed /
    open / admitting a section per ``mode``.  When they hold, checks the
    biconditional "C connected iff preimage(C) connected" for every
    subset C of the target; a failure there is raised, not reported,
    since it would falsify the transfer principle itself.  Precondition
    violations yield a not-applicable report and no claim.
    """
    if mode not in ("closed", "open", "section"):
        raise ValueError(f"unknown mode {mode!r}")
    src, tgt = f.source, f.target
    for y, fib in enumerate(f.fibers()):
        if not src.subset_connected(fib):
            return FiberTransferReport(False, mode, reason=f"fiber over {y} not connected")
    if mode == "closed":
        if not f.is_closed_map():
            return FiberTransferReport(False, mode, reason="not a closed map")
    elif mode == "open":
        if not f.is_open_map():
            return FiberTransferReport(False, mode, reason="not an open map")
    else:
        if section is None:
            section = find_section(f)
        if section is None:
            return FiberTransferReport(False, mode, reason="no continuous section found")
        if section.source != tgt or section.target != src:
            return FiberTransferReport(False, mode, reason="section domain mismatch")
        if any(f.values[section.values[y]] != y for y in range(tgt.n)):
            return FiberTransferReport(False, mode, reason="supplied map is not a section")
    if tgt.n > SUBBASIS_POINT_LIMIT:
        raise ResourceBoundError("subset scan capped at 16 target points")
    for c in range(1 << tgt.n):
        lhs = tgt.subset_connected(c)
        rhs = src.subset_connected(f.preimage(c))
        if lhs != rhs:
            raise FalsifiedInvariantError(
                "connectivity transfer failed with valid preconditions",
                witness={
                    "subset": points_of(c),
                    "target_connected": lhs,
                    "preimage_connected": rhs,
                    "mode": mode,
                },
            )
    whole = src.is_connected() == tgt.is_connected()
    if not whole:
        raise FalsifiedInvariantError("whole-space connectivity biconditional failed")
    return FiberTransferReport(
        True, mode, subsets_checked=1 << tgt.n, whole_space_agrees=True)


# -- exhaustive enumeration ---------------------------------------------


@lru_cache(maxsize=8)
def enumerate_topologies(n: int) -> tuple[FiniteSpace, ...]:
    """All topologies on {0,...,n-1}, deterministically ordered.

    n <= 4 filters subset families directly; n = 5 goes through the
    preorder representation (the family filter would scan 2^30 sets).
    """
    if n < 1 or n > ENUM_POINT_LIMIT:
        raise ResourceBoundError(f"exhaustive enumeration supports 1..{ENUM_POINT_LIMIT} points")
    if n <= 4:
        families = _family_filter(n)
    else:
        families = {space.opens for space in preorder_topologies(n)}
    spaces = [FiniteSpace(n, fam) for fam in families]
    spaces.sort(key=lambda s: (len(s.opens), s.opens_sorted))
    return tuple(spaces)


def _family_filter(n: int) -> set[frozenset[int]]:
    full = (1 << n) - 1
    inner = list(range(1, full))
    out = set()
    for bits in range(1 << len(inner)):
        fam = [0, full]
        b = bits
        i = 0
        while b:
            if b & 1:
                fam.append(inner[i])
            b >>= 1
            i += 1
        family = set(fam)
        ok = True
        for j, a in enumerate(fam):
            for c in fam[j + 1:]:
                if (a | c) not in family or (a & c) not in family:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(frozenset(family))
    return out


def enumerate_preorders(n: int) -> list[tuple[int, ...]]:
    """All preorders on range(n) as tuples of row masks (row[x] = {y : x <= y})."""
    if n < 1 or n > ENUM_POINT_LIMIT:
        raise ResourceBoundError(f"preorder enumeration supports 1..{ENUM_POINT_LIMIT} points")
    from itertools import product as iproduct

    choices = [[m for m in range(1 << n) if (m >> x) & 1] for x in range(n)]
    return [rel for rel in iproduct(*choices) if _is_transitive(rel, n)]


def _is_transitive(rel: tuple[int, ...], n: int) -> bool:
    for x in range(n):
        m = rel[x]
        t = m
        while t:
            y = lowest_point(t)
            t &= t - 1
            if rel[y] & ~m:
                return False
    return True


def space_from_preorder(rel: tuple[int, ...], n: int) -> FiniteSpace:
    """Alexandrov topology of a preorder: opens are the up-sets."""
    opens = set()
    for u in range(1 << n):
        ok = True
        t = u
        while t:
            x = lowest_point(t)
            t &= t - 1
            if rel[x] & ~u:
                ok = False
                break
        if ok:
            opens.add(u)
    return FiniteSpace(n, frozenset(opens))


def preorder_topologies(n: int) -> list[FiniteSpace]:
    """Independent recount route: every topology on n points, via preorders."""
    return [space_from_preorder(rel, n) for rel in enumerate_preorders(n)]


def random_preorder(rng: random.Random, n: int, edge_bias: float = 0.3) -> tuple[int, ...]:
    rel = [1 << x for x in range(n)]
    for x in range(n):
        for y in range(n):
            if x != y and rng.random() < edge_bias:
                rel[x] |= 1 << y
    for _ in range(n):  # transitive closure, Warshall-style
        changed = False
        for x in range(n):
            m = rel[x]
            t = m
            acc = m
            while t:
                y = lowest_point(t)
                t &= t - 1
                acc |= rel[y]
            if acc != m:
                rel[x] = acc
                changed = True
        if not changed:
            break
    return tuple(rel)


def random_space(rng: random.Random, n: int, edge_bias: float = 0.3) -> FiniteSpace:
    return space_from_preorder(random_preorder(rng, n, edge_bias), n)


def product_space(a: FiniteSpace, b: FiniteSpace) -> tuple[FiniteSpace, list[tuple[int, int]]]:
    """Product topology via the product specialization preorder.

    Returns the space and the list mapping product point index -> (a, b)
    point pair.  Valid because finite spaces are Alexandrov: box opens
    generate exactly the up-sets of the componentwise preorder.
    """
    pairs = [(i, j) for i in range(a.n) for j in range(b.n)]
    n = len(pairs)
    if n > SUBBASIS_POINT_LIMIT:
        raise ResourceBoundError("product space too large to materialize")
    rel = []
    for (i, j) in pairs:
        m = 0
        for k, (i2, j2) in enumerate(pairs):
            if ((a.point_closures[i2] >> i) & 1) and ((b.point_closures[j2] >> j) & 1):
                m |= 1 << k
        rel.append(m)
    return space_from_preorder(tuple(rel), n), pairs
