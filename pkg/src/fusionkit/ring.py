"""Fusion rings: storage, axiom validation, JSON I/O and basic constructors."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

import numpy as np
from scipy import sparse

from .groups import FiniteAbelianGroup

DEFAULT_MAX_RANK = 64
_EMPTY: Mapping[int, int] = {}


class MalformedRingError(ValueError):
    """Input data that cannot describe a fusion ring at all."""


def max_rank_bound() -> int:
    return int(os.environ.get("FUSIONKIT_MAX_RANK", DEFAULT_MAX_RANK))


class FusionRing:
    """A based ring with basis 0..rank-1 and coefficients N_{ab}^c.

    Coefficients are kept sparse by (a, b): ``product(a, b)`` is a dict
    c -> N_{ab}^c holding only nonzero entries.  Instances are treated as
    immutable; derived data (dimensions, gradings, ...) is memoised in
    ``_cache``.
    """

    def __init__(self, labels: Iterable[str], unit: int, dual: Iterable[int],
                 coeffs, metadata: Mapping | None = None):
        self.labels = tuple(str(s) for s in labels)
        self.rank = len(self.labels)
        self.unit = int(unit)
        self.dual = tuple(int(d) for d in dual)
        self.metadata = dict(metadata or {})
        r = self.rank
        if r < 1:
            raise MalformedRingError("rank must be at least 1")
        if len(self.dual) != r:
            raise MalformedRingError(f"dual has length {len(self.dual)}, expected {r}")
        if not 0 <= self.unit < r:
            raise MalformedRingError(f"unit index {self.unit} out of range")
        for i, d in enumerate(self.dual):
            if not 0 <= d < r:
                raise MalformedRingError(f"dual[{i}] = {d} out of range")
        if isinstance(coeffs, Mapping):
            items = ((a, b, c, n) for (a, b, c), n in coeffs.items())
        else:
            items = coeffs
        prods: dict[tuple[int, int], dict[int, int]] = {}
        for entry in items:
            a, b, c, n = (int(x) for x in entry)
            for x in (a, b, c):
                if not 0 <= x < r:
                    raise MalformedRingError(f"index {x} out of range in triple {(a, b, c)}")
            if n < 0:
                raise MalformedRingError(f"negative coefficient N_{(a, b)}^{c} = {n}")
            if n:
                prods.setdefault((a, b), {})[c] = n
        self._prods = prods
        self._cache: dict = {}

    # -- access -----------------------------------------------------------
    def product(self, a: int, b: int) -> Mapping[int, int]:
        return self._prods.get((a, b), _EMPTY)

    def coeff(self, a: int, b: int, c: int) -> int:
        return self._prods.get((a, b), _EMPTY).get(c, 0)

    def vector(self, a: int, b: int) -> np.ndarray:
        v = np.zeros(self.rank, dtype=np.int64)
        for c, n in self.product(a, b).items():
            v[c] = n
        return v

    def triples(self):
        for (a, b) in sorted(self._prods):
            for c in sorted(self._prods[(a, b)]):
                yield a, b, c, self._prods[(a, b)][c]

    def dense(self) -> np.ndarray:
        """(rank, rank, rank) float array of coefficients; small rings only."""
        if "dense" not in self._cache:
            t = np.zeros((self.rank,) * 3)
            for a, b, c, n in self.triples():
                t[a, b, c] = n
            self._cache["dense"] = t
        return self._cache["dense"]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def is_commutative(self) -> bool:
        if "commutative" not in self._cache:
            self._cache["commutative"] = all(
                self.product(b, a) == p for (a, b), p in self._prods.items())
        return self._cache["commutative"]

    def constituents(self, a: int, b: int) -> list[int]:
        return sorted(self.product(a, b))

    def restrict(self, simples: Iterable[int]) -> "FusionRing":
        """The based subring on ``simples`` (assumed closed), reindexed."""
        keep = sorted(simples)
        pos = {x: i for i, x in enumerate(keep)}
        coeffs = []
        for a in keep:
            for b in keep:
                for c, n in self.product(a, b).items():
                    coeffs.append((pos[a], pos[b], pos[c], n))
        return FusionRing([self.labels[x] for x in keep], pos[self.unit],
                          [pos[self.dual[x]] for x in keep], coeffs)

    def permuted(self, order: Iterable[int]) -> "FusionRing":
        """Same ring with basis listed in ``order`` (old indices)."""
        order = list(order)
        pos = {x: i for i, x in enumerate(order)}
        coeffs = [(pos[a], pos[b], pos[c], n) for a, b, c, n in self.triples()]
        return FusionRing([self.labels[x] for x in order], pos[self.unit],
                          [pos[self.dual[x]] for x in order], coeffs, self.metadata)

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (self.labels == other.labels and self.unit == other.unit
                and self.dual == other.dual and self._prods == other._prods)

    __hash__ = None

    def __repr__(self):
        return f"FusionRing(rank={self.rank}, labels={list(self.labels)[:6]}{'...' if self.rank > 6 else ''})"

    # -- serialisation ----------------------------------------------------
    def to_json(self) -> dict:
        out = {
            "rank": self.rank,
            "labels": list(self.labels),
            "unit": self.unit,
            "dual": list(self.dual),
            "coeffs": [list(t) for t in self.triples()],
        }
        if self.metadata:
            out["metadata"] = self.metadata
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "FusionRing":
        try:
            rank = int(data["rank"])
            labels = data.get("labels") or [str(i) for i in range(rank)]
            if len(labels) != rank:
                raise MalformedRingError(f"{len(labels)} labels for rank {rank}")
            return cls(labels, data["unit"], data["dual"], data["coeffs"], data.get("metadata"))
        except (KeyError, TypeError) as exc:
            raise MalformedRingError(f"bad ring document: {exc!r}") from exc


def load_ring(path) -> FusionRing:
    return FusionRing.from_json(json.loads(Path(path).read_text()))


def save_ring(ring: FusionRing, path) -> None:
    Path(path).write_text(json.dumps(ring.to_json(), indent=1, sort_keys=True) + "\n")


# -- validation -----------------------------------------------------------

@dataclass
class ValidationReport:
    malformed: list[str] = field(default_factory=list)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.malformed and not self.violations


def validate_ring(ring, max_per_axiom: int = 5) -> ValidationReport:
    """Check the unit, rigidity, involution and associativity axioms.

    ``ring`` may be a :class:`FusionRing` or a JSON-style dict; malformed input
    (bad indices, negative coefficients) lands in ``report.malformed`` and
    suppresses the axiom checks.
    """
    report = ValidationReport()
    if not isinstance(ring, FusionRing):
        try:
            ring = FusionRing.from_json(ring)
        except MalformedRingError as exc:
            report.malformed.append(str(exc))
            return report
    r, u, L = ring.rank, ring.unit, ring.labels

    def flag(kind, msgs, text):
        if sum(1 for m in msgs if m.startswith(kind)) < max_per_axiom:
            msgs.append(f"{kind}: {text}")

    out = report.violations
    for a in range(r):
        if ring.dual[ring.dual[a]] != a:
            flag("involution", out, f"dual(dual({L[a]})) != {L[a]}")
        if dict(ring.product(a, u)) != {a: 1}:
            flag("unit", out, f"{L[a]} x 1 = {dict(ring.product(a, u))}")
        if dict(ring.product(u, a)) != {a: 1}:
            flag("unit", out, f"1 x {L[a]} = {dict(ring.product(u, a))}")
        for b in range(r):
            want = 1 if b == ring.dual[a] else 0
            if ring.coeff(a, b, u) != want:
                flag("rigidity", out, f"N_({L[a]},{L[b]})^1 = {ring.coeff(a, b, u)}, expected {want}")
    for bad in _associativity_failures(ring, max_per_axiom):
        out.append("associativity: " + bad)
    return report


def _associativity_failures(ring: FusionRing, limit: int) -> list[str]:
    r, L = ring.rank, ring.labels
    fails = []
    if r <= 64:
        t = ring.dense()
        flat = t.reshape(r, r * r)
        stacked = t.reshape(r * r, r)
        for a in range(r):
            lhs = (t[a] @ flat).reshape(r, r, r)   # sum_e N_ab^e N_ec^d
            rhs = (stacked @ t[a]).reshape(r, r, r)  # sum_f N_bc^f N_af^d
            for b, c, d in np.argwhere(lhs != rhs)[:limit - len(fails)]:
                fails.append(f"({L[a]} · {L[b]}) · {L[c]} -> {L[d]}: {int(lhs[b, c, d])} != {int(rhs[b, c, d])}")
            if len(fails) >= limit:
                break
        return fails
    # sparse route: same two contractions, one left-multiplication matrix at a time
    rows, cols, vals = [], [], []
    for (a, b), p in ring._prods.items():
        for c, n in p.items():
            rows.append(a * r + b)
            cols.append(c)
            vals.append(n)
    T = sparse.csr_matrix((vals, (rows, cols)), shape=(r * r, r), dtype=np.int64)  # [(a,b), c]
    T_ecd = T.reshape((r, r * r)).tocsr()                                          # [e, (c,d)]
    for a in range(r):
        P = T[a * r:(a + 1) * r]                              # [b, e] = N_ab^e
        lhs = (P @ T_ecd).reshape((r * r, r)).tocsr()         # [(b,c), d]
        rhs = (T @ P).tocsr()                                 # [(b,c), d]
        diff = (lhs - rhs).tocoo()
        diff.eliminate_zeros()
        for bc, d in sorted(zip(diff.row.tolist(), diff.col.tolist()))[:limit - len(fails)]:
            b, c = divmod(bc, r)
            fails.append(f"({L[a]} · {L[b]}) · {L[c]} -> {L[d]}: {lhs[bc, d]} != {rhs[bc, d]}")
        if len(fails) >= limit:
            break
    return fails


# -- constructors -----------------------------------------------------------

def pointed_ring(moduli) -> FusionRing:
    """Group ring of Z_{n_1} x ... x Z_{n_k} with its natural basis."""
    group = FiniteAbelianGroup(tuple(moduli))
    elems = group.elements
    labels = [group.label(g) for g in elems] if group.moduli else ["1"]
    coeffs = [(i, j, group.index(group.add(g, h)), 1)
              for i, g in enumerate(elems) for j, h in enumerate(elems)]
    dual = [group.index(group.neg(g)) for g in elems]
    return FusionRing(labels, group.index(group.identity), dual, coeffs,
                      {"family": "pointed", "moduli": list(group.moduli)})


def trivial_ring() -> FusionRing:
    return pointed_ring(())


def deligne_product(r1: FusionRing, r2: FusionRing) -> FusionRing:
    """External product: basis (i, j) -> i * rank2 + j, coefficients multiply."""
    n2 = r2.rank
    labels = [f"{x}⊠{y}" for x in r1.labels for y in r2.labels]
    dual = [r1.dual[i] * n2 + r2.dual[j] for i in range(r1.rank) for j in range(n2)]
    coeffs = []
    items2 = list(r2._prods.items())
    for (a1, b1), p1 in r1._prods.items():
        for (a2, b2), p2 in items2:
            a, b = a1 * n2 + a2, b1 * n2 + b2
            for c1, n in p1.items():
                for c2, m in p2.items():
                    coeffs.append((a, b, c1 * n2 + c2, n * m))
    return FusionRing(labels, r1.unit * n2 + r2.unit, dual, coeffs)


def is_isomorphism(r1: FusionRing, r2: FusionRing, phi) -> bool:
    """Whether phi (list: basis of r1 -> basis of r2) is a based-ring isomorphism."""
    if r1.rank != r2.rank or sorted(phi) != list(range(r2.rank)):
        return False
    if phi[r1.unit] != r2.unit:
        return False
    if any(phi[r1.dual[a]] != r2.dual[phi[a]] for a in range(r1.rank)):
        return False
    for a in range(r1.rank):
        for b in range(r1.rank):
            mapped = {phi[c]: n for c, n in r1.product(a, b).items()}
            if mapped != dict(r2.product(phi[a], phi[b])):
                return False
    return True
