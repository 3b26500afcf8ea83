"""Frobenius-Perron dimensions, exact in Z[sqrt 2] when possible."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ring import FusionRing

SQRT2 = math.sqrt(2.0)
_SNAP_BOUND = 2 ** 16
_SNAP_TOL = 1e-9
# b values ordered 0, 1, -1, 2, -2, ... so the smallest |b| wins
_B_CANDIDATES = np.array([0] + [s * k for k in range(1, _SNAP_BOUND + 1) for s in (1, -1)],
                         dtype=np.int64)


class DimensionError(ArithmeticError):
    pass


@dataclass(frozen=True)
class ExactDim:
    """a + b*sqrt(2); ``approx`` is set only for values outside Z[sqrt 2]."""

    a: int = 0
    b: int = 0
    approx: float | None = None

    @property
    def exact(self) -> bool:
        return self.approx is None

    @property
    def value(self) -> float:
        return self.a + self.b * SQRT2 if self.approx is None else self.approx

    def __float__(self):
        return self.value

    def __add__(self, other):
        if self.exact and other.exact:
            return ExactDim(self.a + other.a, self.b + other.b)
        return ExactDim(approx=self.value + other.value)

    def __mul__(self, other):
        if isinstance(other, int):
            other = ExactDim(other)
        if self.exact and other.exact:
            return ExactDim(self.a * other.a + 2 * self.b * other.b,
                            self.a * other.b + self.b * other.a)
        return ExactDim(approx=self.value * other.value)

    __rmul__ = __mul__

    def __lt__(self, other):
        return self.value < other.value

    def __str__(self):
        if not self.exact:
            return f"~{self.approx:.12g}"
        if self.b == 0:
            return str(self.a)
        root = "√2" if abs(self.b) == 1 else f"{abs(self.b)}√2"
        if self.a == 0:
            return root if self.b > 0 else "-" + root
        return f"{self.a}{'+' if self.b > 0 else '-'}{root}"


ONE = ExactDim(1)
ROOT2 = ExactDim(0, 1)


def snap(x: float) -> ExactDim | None:
    """Nearest a + b*sqrt2 within 1e-9, smallest |b| first; None if none."""
    r = x - _B_CANDIDATES * SQRT2
    err = np.abs(r - np.round(r))
    hits = np.nonzero(err < _SNAP_TOL)[0]
    if hits.size == 0:
        return None
    k = hits[0]
    return ExactDim(int(round(r[k])), int(_B_CANDIDATES[k]))


@dataclass(frozen=True)
class Dimensions:
    dims: tuple[ExactDim, ...]
    total: ExactDim

    @property
    def exact(self) -> bool:
        return all(d.exact for d in self.dims)

    def __getitem__(self, i):
        return self.dims[i]

    def __len__(self):
        return len(self.dims)


def _pf_vector(ring: FusionRing, tol: float = 1e-12, max_iter: int = 20000) -> np.ndarray:
    # sum of all left-multiplication matrices is entrywise positive for a
    # rigid ring, so power iteration converges to the dimension vector
    r = ring.rank
    A = np.zeros((r, r))
    for x, b, c, n in ring.triples():
        A[c, b] += n
    v = np.ones(r) / r
    for _ in range(max_iter):
        w = A @ v
        lam = np.max(w)
        if not np.isfinite(lam) or lam <= 0:
            break
        w = w / lam
        if np.max(np.abs(A @ w - lam * w)) <= tol * lam:
            if w[ring.unit] <= tol:
                break  # unit must have dimension 1
            return w / w[ring.unit]
        v = w
    raise DimensionError("Perron-Frobenius iteration did not converge; ring is likely corrupt")


def fp_dims(ring: FusionRing) -> Dimensions:
    """Frobenius-Perron dimension of every simple and of the whole ring."""
    if "fp_dims" in ring._cache:
        return ring._cache["fp_dims"]
    v = _pf_vector(ring)
    for x in range(ring.rank):
        # each d_x must be the PF eigenvalue of L_x with the same eigenvector
        Lv = np.zeros(ring.rank)
        for b in range(ring.rank):
            for c, n in ring.product(x, b).items():
                Lv[c] += n * v[b]
        if np.max(np.abs(Lv - v[x] * v)) > 1e-8 * max(1.0, v[x]) * np.max(v):
            raise DimensionError(f"dimension vector is not an eigenvector of L_{ring.labels[x]}")
    memo: dict[float, ExactDim | None] = {}
    snapped = []
    for x in v:
        key = round(float(x), 10)
        if key not in memo:
            memo[key] = snap(float(x))
        snapped.append(memo[key])
    if all(s is not None for s in snapped) and _satisfies_dimension_equations(ring, snapped):
        dims = tuple(snapped)
    else:
        dims = tuple(ExactDim(approx=float(x)) for x in v)
    total = ExactDim(0)
    for d in dims:
        total = total + d * d
    out = Dimensions(dims, total)
    ring._cache["fp_dims"] = out
    return out


def _satisfies_dimension_equations(ring: FusionRing, dims) -> bool:
    """d_a d_b = sum_c N_ab^c d_c exactly, on both Z and sqrt2 parts."""
    if dims[ring.unit] != ONE or any(d.value < 1 - 1e-12 for d in dims):
        return False
    r = ring.rank
    A = np.array([d.a for d in dims], dtype=object)
    B = np.array([d.b for d in dims], dtype=object)
    rows = [(a, b, c, n) for a, b, c, n in ring.triples()]
    ia, ib, ic, n = (np.array(col, dtype=np.int64) for col in zip(*rows)) if rows else ([],) * 4
    rhs_a = np.zeros(r * r, dtype=object)
    rhs_b = np.zeros(r * r, dtype=object)
    np.add.at(rhs_a, ia * r + ib, n.astype(object) * A[ic])
    np.add.at(rhs_b, ia * r + ib, n.astype(object) * B[ic])
    lhs_a = (np.outer(A, A) + 2 * np.outer(B, B)).ravel()
    lhs_b = (np.outer(A, B) + np.outer(B, A)).ravel()
    return bool(np.all(lhs_a == rhs_a) and np.all(lhs_b == rhs_b))


def cd_set(ring: FusionRing) -> frozenset:
    """Distinct dimensions of simple objects."""
    return frozenset(fp_dims(ring).dims)
