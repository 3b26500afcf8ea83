"""Based-ring isomorphism by backtracking with fingerprint pruning."""

from __future__ import annotations

import sys
from collections import Counter

from .dims import DimensionError, fp_dims
from .ring import FusionRing, is_isomorphism
from .subrings import GradingError, closure, invertible_indices, universal_grading

DEFAULT_ISO_MAX_RANK = 1024


def canonical_order(ring: FusionRing) -> list[int]:
    """Basis sorted by (dimension, invertible first, label)."""
    dims = _dim_keys(ring)
    inv = set(invertible_indices(ring))
    return sorted(range(ring.rank), key=lambda x: (dims[x], x not in inv, ring.labels[x]))


def _dim_keys(ring: FusionRing):
    try:
        return [round(d.value, 9) for d in fp_dims(ring).dims]
    except DimensionError:
        return [0.0] * ring.rank


def fingerprints(ring: FusionRing) -> list[tuple]:
    """Per-simple invariants preserved by any based-ring isomorphism."""
    if "fingerprints" in ring._cache:
        return ring._cache["fingerprints"]
    dims = _dim_keys(ring)
    inv = set(invertible_indices(ring))
    try:
        g = universal_grading(ring)
        deg_order = [g.group.element_order(d) for d in g.degree]
    except GradingError:
        deg_order = [0] * ring.rank
    out = []
    for x in range(ring.rank):
        xx = ring.product(x, ring.dual[x])
        sq = ring.product(x, x)
        if x in inv:
            k, y = 1, x
            while y != ring.unit:
                y = next(iter(ring.product(y, x)))
                k += 1
        else:
            k = 0
        out.append((dims[x], x in inv, ring.dual[x] == x, deg_order[x], k,
                    tuple(sorted(xx.values())), tuple(sorted(sq.values()))))
    ring._cache["fingerprints"] = out
    return out


def _search_plan(ring: FusionRing, fp: list[tuple], order_key: list[int]):
    """Generators (rarest fingerprint first) and a BFS placement order.

    Each non-generator entry records how it was reached: ("dual", y) or
    ("mul", g, y) meaning it is a constituent of g (x) y.
    """
    counts = Counter(fp)
    rank_pos = {x: i for i, x in enumerate(order_key)}
    candidates = sorted(range(ring.rank), key=lambda x: (counts[fp[x]], rank_pos[x]))
    gens: list[int] = []
    covered = {ring.unit}
    plan: list[tuple] = []
    placed = {ring.unit}
    for x in candidates:
        if x in covered:
            continue
        gens.append(x)
        plan.append(("free", x))
        placed.add(x)
        multipliers = []
        for g in gens:
            multipliers.append(g)
            multipliers.append(ring.dual[g])
        # grow placement by BFS over everything placed so far, until stable
        grew = True
        while grew:
            grew = False
            order = [ring.unit] + [p[-1] for p in plan]
            i = 0
            while i < len(order):
                y = order[i]
                i += 1
                d = ring.dual[y]
                if d not in placed:
                    placed.add(d)
                    plan.append(("dual", y, d))
                    order.append(d)
                    grew = True
                for g in multipliers:
                    if g not in placed:
                        continue
                    for c in sorted(ring.product(g, y), key=rank_pos.__getitem__):
                        if c not in placed:
                            placed.add(c)
                            plan.append(("mul", g, y, c))
                            order.append(c)
                            grew = True
        covered = placed
        if len(covered) == ring.rank:
            break
    return plan


def ring_isomorphic(r1: FusionRing, r2: FusionRing, max_rank: int | None = None):
    """A basis bijection r1 -> r2 preserving unit, duals and coefficients, or None.

    Returns a list ``phi`` with ``phi[i]`` the image of simple ``i``.  The
    search is deterministic: candidates are tried in canonical basis order.
    """
    bound = DEFAULT_ISO_MAX_RANK if max_rank is None else max_rank
    if r1.rank + r2.rank > 2 * bound:
        raise ValueError(f"combined rank {r1.rank + r2.rank} exceeds bound {2 * bound}")
    if r1.rank != r2.rank:
        return None
    fp1, fp2 = fingerprints(r1), fingerprints(r2)
    if Counter(fp1) != Counter(fp2) or fp1[r1.unit] != fp2[r2.unit]:
        return None
    n = r1.rank
    order2 = canonical_order(r2)
    pos2 = {x: i for i, x in enumerate(order2)}
    plan = _search_plan(r1, fp1, canonical_order(r1))
    by_fp: dict[tuple, list[int]] = {}
    for x in order2:
        by_fp.setdefault(fp2[x], []).append(x)
    phi = [-1] * n
    inv = [-1] * n
    assigned: list[int] = []
    commutative = r1.is_commutative() and r2.is_commutative()

    def agree(p1, p2) -> bool:
        for c, m in p1.items():
            pc = phi[c]
            if pc != -1 and p2.get(pc, 0) != m:
                return False
        for w, m in p2.items():
            iw = inv[w]
            if iw != -1 and p1.get(iw, 0) != m:
                return False
        return Counter((fp1[c], m) for c, m in p1.items()) == Counter((fp2[w], m) for w, m in p2.items())

    def consistent(x: int, u: int) -> bool:
        dx = r1.dual[x]
        if phi[dx] != -1 and phi[dx] != r2.dual[u]:
            return False
        if dx == x and r2.dual[u] != u:
            return False
        if not agree(r1.product(x, x), r2.product(u, u)):
            return False
        for y in assigned:
            v = phi[y]
            if not agree(r1.product(x, y), r2.product(u, v)):
                return False
            if not commutative and not agree(r1.product(y, x), r2.product(v, u)):
                return False
        return True

    def assign(x, u):
        phi[x] = u
        inv[u] = x
        assigned.append(x)

    def unassign(x):
        inv[phi[x]] = -1
        phi[x] = -1
        assigned.pop()

    assign(r1.unit, r2.unit)

    def candidates(step):
        kind = step[0]
        x = step[-1]
        if kind == "free":
            return [u for u in by_fp[fp1[x]] if inv[u] == -1]
        if kind == "dual":
            return [r2.dual[phi[step[1]]]]
        _, g, y, _ = step
        mult = r1.coeff(g, y, x)
        prod2 = r2.product(phi[g], phi[y])
        return sorted((w for w, m in prod2.items() if m == mult and fp2[w] == fp1[x] and inv[w] == -1),
                      key=pos2.__getitem__)

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * n + 1000))
    try:
        def search(k: int) -> bool:
            if k == len(plan):
                return is_isomorphism(r1, r2, phi)
            x = plan[k][-1]
            for u in candidates(plan[k]):
                if inv[u] != -1 or not consistent(x, u):
                    continue
                assign(x, u)
                if search(k + 1):
                    return True
                unassign(x)
            return False

        found = search(0)
    finally:
        sys.setrecursionlimit(limit)
    return list(phi) if found else None
