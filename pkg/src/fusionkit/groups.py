"""Finite abelian groups.

Two representations are used.  :class:`FiniteAbelianGroup` is a product of
cyclic groups with elements stored as residue tuples; :class:`TableGroup` is
an abstract group given by its multiplication table (this is what comes out of
a fusion ring: invertible objects, grading classes).  ``TableGroup.structure``
connects the two by brute-force element-order analysis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Iterator, Sequence

Element = tuple


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factors_from_exponents(exponents: dict[int, list[int]]) -> tuple[int, ...]:
    """Combine per-prime exponent partitions into a divisibility chain."""
    depth = max((len(v) for v in exponents.values()), default=0)
    factors = []
    for k in range(depth):
        d = 1
        for p, exps in exponents.items():
            ordered = sorted(exps, reverse=True)
            if k < len(ordered):
                d *= p ** ordered[k]
        factors.append(d)
    return tuple(sorted(f for f in factors if f > 1))


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z_{n_1} x ... x Z_{n_k}; elements are tuples of residues.

    The moduli need not form a divisibility chain; ``invariant_factors`` gives
    the canonical d_1 | d_2 | ... | d_r form.
    """

    moduli: tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        if any(m < 1 for m in moduli):
            raise ValueError(f"moduli must be positive: {moduli}")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls((n,))

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def identity(self) -> Element:
        return (0,) * len(self.moduli)

    @property
    def exponent(self) -> int:
        e = 1
        for m in self.moduli:
            e = e * m // gcd(e, m)
        return e

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        return tuple(itertools.product(*(range(m) for m in self.moduli)))

    @cached_property
    def _position(self) -> dict:
        return {g: i for i, g in enumerate(self.elements)}

    def index(self, g: Element) -> int:
        return self._position[self.reduce(g)]

    def reduce(self, g) -> Element:
        return tuple(int(x) % m for x, m in zip(g, self.moduli))

    def add(self, a: Element, b: Element) -> Element:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.moduli))

    def neg(self, a: Element) -> Element:
        return tuple((-x) % m for x, m in zip(a, self.moduli))

    def scale(self, k: int, a: Element) -> Element:
        return tuple((k * x) % m for x, m in zip(a, self.moduli))

    def element_order(self, a: Element) -> int:
        o = 1
        for x, m in zip(a, self.moduli):
            c = m // gcd(x, m)
            o = o * c // gcd(o, c)
        return o

    def generators(self) -> list[Element]:
        """Canonical generators e_i (unit vectors)."""
        k = len(self.moduli)
        return [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]

    @cached_property
    def invariant_factors(self) -> tuple[int, ...]:
        exps: dict[int, list[int]] = {}
        for m in self.moduli:
            for p, e in _factorize(m).items():
                exps.setdefault(p, []).append(e)
        return invariant_factors_from_exponents(exps)

    def is_isomorphic(self, other: "FiniteAbelianGroup") -> bool:
        return self.invariant_factors == other.invariant_factors

    def subgroup_generated(self, gens: Sequence[Element]) -> list[Element]:
        members = {self.identity}
        frontier = [self.identity]
        gens = [self.reduce(g) for g in gens]
        while frontier:
            nxt = []
            for h in frontier:
                for g in gens:
                    s = self.add(h, g)
                    if s not in members:
                        members.add(s)
                        nxt.append(s)
            frontier = nxt
        return sorted(members)

    def endomorphism_candidates(self) -> Iterator[tuple[Element, ...]]:
        """Images of the canonical generators that define homomorphisms."""
        pools = []
        for m in self.moduli:
            pools.append([g for g in self.elements if self.scale(m, g) == self.identity])
        return itertools.product(*pools)

    def apply_hom(self, images: Sequence[Element], g: Element) -> Element:
        out = self.identity
        for x, img in zip(g, images):
            out = self.add(out, self.scale(x, img))
        return out

    def automorphisms(self, limit: int = 10**6) -> Iterator[dict]:
        """Yield every automorphism as an element -> element dict.

        Candidates are generator images of compatible order, filtered for
        bijectivity.  Raises ValueError when the candidate space exceeds
        ``limit``.
        """
        if self.order > 256:
            raise ValueError(f"|G| = {self.order} exceeds the automorphism bound 256")
        space = 1
        for m in self.moduli:
            space *= sum(1 for g in self.elements if self.scale(m, g) == self.identity)
        if space > limit:
            raise ValueError(f"{space} endomorphism candidates exceed limit {limit}")
        for images in self.endomorphism_candidates():
            mapping = {g: self.apply_hom(images, g) for g in self.elements}
            if len(set(mapping.values())) == self.order:
                yield mapping

    def label(self, g: Element) -> str:
        if len(self.moduli) == 1:
            return str(g[0])
        return "(" + ",".join(str(x) for x in g) + ")"

    def __str__(self):
        if not self.moduli:
            return "trivial"
        return " x ".join(f"Z_{m}" for m in self.moduli)


def order_two_complement(group: FiniteAbelianGroup, u: Element) -> list[Element] | None:
    """A subgroup H with G = H + <u> (direct), for u of order 2.

    Searches kernels of characters G -> Z_2 that are nontrivial on u; these
    are exactly the index-2 subgroups avoiding u.  Returns sorted elements of
    the first one found in canonical order, or None.
    """
    u = group.reduce(u)
    if group.element_order(u) != 2:
        raise ValueError(f"{u} does not have order 2")
    choices = [(0, 1) if m % 2 == 0 else (0,) for m in group.moduli]
    for coeffs in itertools.product(*choices):
        if not any(coeffs):
            continue
        if sum(c * x for c, x in zip(coeffs, u)) % 2 != 1:
            continue
        return [g for g in group.elements if sum(c * x for c, x in zip(coeffs, g)) % 2 == 0]
    return None


class TableGroup:
    """A finite group given by a multiplication table on 0..n-1."""

    def __init__(self, table: Sequence[Sequence[int]], identity: int):
        self.table = [list(row) for row in table]
        self.n = len(self.table)
        self.identity = identity
        if any(len(row) != self.n for row in self.table):
            raise ValueError("multiplication table must be square")

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverse(self) -> list[int]:
        inv = [-1] * self.n
        for a in range(self.n):
            for b in range(self.n):
                if self.table[a][b] == self.identity:
                    inv[a] = b
                    break
        return inv

    def is_abelian(self) -> bool:
        return all(self.table[a][b] == self.table[b][a]
                   for a in range(self.n) for b in range(a + 1, self.n))

    def power(self, a: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = self.table[out][a]
        return out

    @cached_property
    def orders(self) -> list[int]:
        out = []
        for a in range(self.n):
            k, x = 1, a
            while x != self.identity:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return out

    def invariant_factors(self) -> tuple[int, ...]:
        """Invariant factors from counts of elements of p-power order.

        For each prime p, #{x : x^(p^k) = 1} = p^(sum_i min(k, e_i)), which
        determines the exponent partition (e_i) of the p-part.
        """
        if not self.is_abelian():
            raise ValueError("group is not abelian")
        exps: dict[int, list[int]] = {}
        for p, top in _factorize(self.n).items():
            logs = [0]
            for k in range(1, top + 1):
                count = sum(1 for o in self.orders if (p ** k) % o == 0)
                logs.append(round(_log(count, p)))
            parts = []
            for k in range(1, top + 1):
                at_least = logs[k] - logs[k - 1]
                at_least_next = (logs[k + 1] - logs[k]) if k < top else 0
                parts.extend([k] * (at_least - at_least_next))
            exps[p] = parts
        return invariant_factors_from_exponents(exps)

    def structure(self) -> tuple[FiniteAbelianGroup, list[int], dict[int, Element]]:
        """Return (Z_{d_1} x ... x Z_{d_r}, generators g_i, coordinates).

        ``coords[x]`` is the tuple (k_1, ..., k_r) with x = prod g_i^{k_i}.
        Generators are found by backtracking from the largest factor down.
        """
        factors = self.invariant_factors()
        r = len(factors)
        chosen: list[int] = [0] * r

        def generated_size_ok(members: set, g: int, d: int):
            new = set()
            x = self.identity
            for _ in range(d):
                for h in members:
                    new.add(self.table[h][x])
                x = self.table[x][g]
            return new if len(new) == len(members) * d else None

        def search(i: int, members: set) -> bool:
            if i < 0:
                return True
            d = factors[i]
            for g in range(self.n):
                if self.orders[g] != d:
                    continue
                grown = generated_size_ok(members, g, d)
                if grown is None:
                    continue
                chosen[i] = g
                if search(i - 1, grown):
                    return True
            return False

        if not search(r - 1, {self.identity}):
            raise RuntimeError("failed to find a basis; table is not an abelian group")
        group = FiniteAbelianGroup(factors)
        coords: dict[int, Element] = {}
        for t in group.elements:
            x = self.identity
            for g, k in zip(chosen, t):
                for _ in range(k):
                    x = self.table[x][g]
            coords[x] = t
        if len(coords) != self.n:
            raise RuntimeError("coordinate map is not bijective")
        return group, list(chosen), coords


def _log(x: int, p: int) -> float:
    k = 0
    while x > 1:
        if x % p:
            raise ValueError(f"{x} is not a power of {p}")
        x //= p
        k += 1
    return k
