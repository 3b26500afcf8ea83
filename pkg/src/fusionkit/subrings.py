"""Subrings, invertible objects, gradings and generalized Tambara-Yamagami data."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .groups import Element, FiniteAbelianGroup, TableGroup
from .ring import FusionRing, max_rank_bound


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class Subring:
    simples: tuple[int, ...]
    parent: FusionRing = field(compare=False, repr=False)

    @property
    def rank(self) -> int:
        return len(self.simples)

    def __contains__(self, x) -> bool:
        return x in self._set

    @property
    def _set(self) -> frozenset:
        return frozenset(self.simples)

    def __le__(self, other: "Subring") -> bool:
        return self._set <= other._set

    def __lt__(self, other: "Subring") -> bool:
        return self._set < other._set

    def is_pointed(self) -> bool:
        inv = set(invertible_indices(self.parent))
        return all(x in inv for x in self.simples)

    def as_ring(self) -> FusionRing:
        return self.parent.restrict(self.simples)

    def labels(self) -> list[str]:
        return [self.parent.labels[x] for x in self.simples]


def closure(ring: FusionRing, seeds: Iterable[int]) -> tuple[int, ...]:
    """Smallest set containing the unit and ``seeds`` closed under products and duals.

    Breadth-first from the unit, multiplying on the left by the seeds and
    their duals; every constituent of every word in the seeds is reached.
    """
    gens = set()
    for s in seeds:
        gens.add(s)
        gens.add(ring.dual[s])
    gens.discard(ring.unit)
    gens = sorted(gens)
    seen = {ring.unit}
    queue = deque([ring.unit])
    while queue:
        y = queue.popleft()
        for g in gens:
            for c in ring.product(g, y):
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
    return tuple(sorted(seen))


def subring_generated(ring: FusionRing, seeds: Iterable[int]) -> Subring:
    return Subring(closure(ring, seeds), ring)


def invertible_indices(ring: FusionRing) -> tuple[int, ...]:
    """Simples X with X (x) X* = 1."""
    if "invertible" not in ring._cache:
        ring._cache["invertible"] = tuple(
            x for x in range(ring.rank) if dict(ring.product(x, ring.dual[x])) == {ring.unit: 1})
    return ring._cache["invertible"]


def is_pointed(ring: FusionRing) -> bool:
    return len(invertible_indices(ring)) == ring.rank


def adjoint_subring(ring: FusionRing) -> Subring:
    """Subring generated by the constituents of X (x) X* over all simples X."""
    if "adjoint" not in ring._cache:
        seeds = set()
        for x in range(ring.rank):
            seeds.update(ring.product(x, ring.dual[x]))
        ring._cache["adjoint"] = subring_generated(ring, seeds)
    return ring._cache["adjoint"]


@dataclass
class Invertibles:
    elements: tuple[int, ...]
    group: TableGroup
    invariant_factors: tuple[int, ...] | None
    pointed: Subring

    @property
    def order(self) -> int:
        return len(self.elements)


def invertibles(ring: FusionRing) -> Invertibles:
    """The group G(C) of invertible simples, with its structure if abelian."""
    elems = invertible_indices(ring)
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[next(iter(ring.product(x, y)))] for y in elems] for x in elems]
    group = TableGroup(table, pos[ring.unit])
    factors = group.invariant_factors() if group.is_abelian() else None
    return Invertibles(elems, group, factors, Subring(tuple(sorted(elems)), ring))


@dataclass
class Stabilizer:
    simple: int
    stabilizer: tuple[int, ...]
    decomposition: dict[int, int]
    consistent: bool


def stabilizer_decomposition(ring: FusionRing, x: int) -> Stabilizer:
    """G[X] and the decomposition of X (x) X*.

    ``consistent`` records that the invertible part of X (x) X* is exactly
    G[X], each with multiplicity one.
    """
    if not 0 <= x < ring.rank:
        raise IndexError(f"simple {x} out of range")
    inv = invertible_indices(ring)
    stab = tuple(g for g in inv if dict(ring.product(g, x)) == {x: 1})
    dec = dict(sorted(ring.product(x, ring.dual[x]).items()))
    inv_part = {c: n for c, n in dec.items() if c in set(inv)}
    consistent = inv_part == {g: 1 for g in stab}
    return Stabilizer(x, stab, dec, consistent)


@dataclass
class Grading:
    group: FiniteAbelianGroup
    degree: tuple[Element, ...]
    faithful: bool
    # class-level data kept for the structure decomposition
    generator_classes: list[int] = field(default_factory=list, repr=False)

    def component(self, g: Element) -> list[int]:
        g = self.group.reduce(g)
        return [x for x, d in enumerate(self.degree) if d == g]

    def components(self) -> dict[Element, list[int]]:
        out = {g: [] for g in self.group.elements}
        for x, d in enumerate(self.degree):
            out[d].append(x)
        return out


def is_grading(ring: FusionRing, grading: Grading) -> bool:
    G = grading.group
    for a, b, c, _ in ring.triples():
        if grading.degree[c] != G.add(grading.degree[a], grading.degree[b]):
            return False
    return True


def universal_grading(ring: FusionRing) -> Grading:
    """The universal grading; degree classes are cosets of the adjoint subring.

    X and Y share a degree iff X (x) Y* has a constituent in C_ad.  Each class
    is found by closing {X} under multiplication by adjoint simples.
    """
    if "universal" in ring._cache:
        return ring._cache["universal"]
    ad = adjoint_subring(ring).simples
    cls = [-1] * ring.rank
    classes: list[list[int]] = []
    for x in range(ring.rank):
        if cls[x] != -1:
            continue
        k = len(classes)
        members = [x]
        cls[x] = k
        queue = deque([x])
        while queue:
            y = queue.popleft()
            for a in ad:
                for c in list(ring.product(y, a)) + list(ring.product(a, y)):
                    if cls[c] == -1:
                        cls[c] = k
                        members.append(c)
                        queue.append(c)
                    elif cls[c] != k:
                        raise GradingError("adjoint cosets overlap; ring is corrupt")
        classes.append(sorted(members))
    n = len(classes)
    table = [[-1] * n for _ in range(n)]
    for a in range(ring.rank):
        for b in range(ring.rank):
            prod_classes = {cls[c] for c in ring.product(a, b)}
            if len(prod_classes) != 1:
                raise GradingError(
                    f"{ring.labels[a]} x {ring.labels[b]} meets classes {sorted(prod_classes)}")
            k = prod_classes.pop()
            if table[cls[a]][cls[b]] not in (-1, k):
                raise GradingError("class multiplication is not well defined")
            table[cls[a]][cls[b]] = k
    tg = TableGroup(table, cls[ring.unit])
    if not tg.is_abelian():
        raise GradingError("universal grading group is not abelian")
    group, gens, coords = tg.structure()
    degree = tuple(coords[cls[x]] for x in range(ring.rank))
    out = Grading(group, degree, faithful=True, generator_classes=gens)
    ring._cache["universal"] = out
    return out


@dataclass
class Lattice:
    subrings: list[Subring]
    contains: list[tuple[int, int]]  # (i, j): subrings[i] strictly inside subrings[j]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges of the containment order."""
        rel = set(self.contains)
        out = []
        for i, j in self.contains:
            if not any((i, k) in rel and (k, j) in rel for k in range(len(self.subrings))):
                out.append((i, j))
        return out

    def index(self, simples) -> int:
        key = tuple(sorted(simples))
        return next(i for i, s in enumerate(self.subrings) if s.simples == key)


def subring_lattice(ring: FusionRing, max_rank: int | None = None) -> Lattice:
    """Every subring, via iterated joins of the singly generated ones."""
    bound = max_rank if max_rank is not None else max_rank_bound()
    if ring.rank > bound:
        raise ValueError(f"rank {ring.rank} exceeds lattice bound {bound}")
    principal = {}
    for x in range(ring.rank):
        s = closure(ring, [x])
        principal.setdefault(s, x)
    found: dict[tuple, tuple[int, ...]] = {s: (x,) for s, x in principal.items()}
    queue = deque(found)
    while queue:
        s = queue.popleft()
        sset = set(s)
        for p, x in principal.items():
            if set(p) <= sset:
                continue
            gens = tuple(sorted(set(found[s]) | {x}))
            j = closure(ring, gens)
            if j not in found:
                found[j] = gens
                queue.append(j)
    subs = sorted(found, key=lambda s: (len(s), s))
    objs = [Subring(s, ring) for s in subs]
    sets = [set(s) for s in subs]
    contains = [(i, j) for i in range(len(subs)) for j in range(len(subs))
                if i != j and sets[i] < sets[j]]
    return Lattice(objs, contains)


@dataclass
class GTYReport:
    is_gty: bool
    n: int | None = None
    invertible_count: int | None = None
    noninvertible_count: int | None = None
    adjoint_rank: int | None = None
    universal_order: int | None = None
    transitive: bool | None = None
    z2_normal: bool | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def passes(self) -> bool:
        return self.is_gty and not self.failures


def gty_structure(ring: FusionRing) -> GTYReport:
    """Generalized Tambara-Yamagami checks for a non-pointed ring."""
    inv = set(invertible_indices(ring))
    non = [x for x in range(ring.rank) if x not in inv]
    if not non:
        raise ValueError("gty_structure expects a non-pointed ring")
    is_gty = all(set(ring.product(x, y)) <= inv for x in non for y in non)
    if not is_gty:
        return GTYReport(False)
    n = len(non)
    ad = adjoint_subring(ring)
    grading = universal_grading(ring)
    # orbit-stabilizer: |orbit of X| = |G(C)| / |G[X]|, G[X] read off X (x) X*
    stab = stabilizer_decomposition(ring, non[0])
    transitive = len(inv) // len(stab.stabilizer) == n
    delta = [x for x in ad.simples if x != ring.unit]
    z2_normal = False
    if len(delta) == 1 and delta[0] in inv:
        d = delta[0]
        z2_normal = True
        for g in inv:
            gd = next(iter(ring.product(g, d)))
            if set(ring.product(gd, ring.dual[g])) != {d}:
                z2_normal = False
                break
    rep = GTYReport(True, n, len(inv), n, ad.rank, grading.group.order, transitive, z2_normal)
    if len(inv) != 2 * n:
        rep.failures.append(f"{len(inv)} invertibles, expected {2 * n}")
    if ad.rank != 2:
        rep.failures.append(f"adjoint rank {ad.rank}, expected 2")
    if grading.group.order != 2 * n:
        rep.failures.append(f"|U(C)| = {grading.group.order}, expected {2 * n}")
    if not transitive:
        rep.failures.append("G(C) does not act transitively on non-invertibles")
    if not z2_normal:
        rep.failures.append("adjoint Z_2 is not normal in G(C)")
    if not stab.consistent:
        rep.failures.append("X (x) X* does not match its stabilizer")
    return rep
