"""Pre-metric groups and braidings of pointed categories.

A pointed braided fusion category is determined by its group of invertible
objects and a quadratic form q; the squared braiding on a pair of invertibles
is the associated bilinear form beta(a, b) = q(a+b) / (q(a) q(b)).  On a
cyclic group Z_M the associativity classes are the cocycles omega_zeta and
the braidings are parametrised by roots xi with xi^(2M) = xi^(M^2) = 1.

Everything here is exact: scalars are :class:`RootOfUnity` values.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Mapping

from .groups import Element, FiniteAbelianGroup, TableGroup, order_two_complement
from .roots import MINUS_ONE, ONE, RootOfUnity

MAX_GROUP_ORDER = 256


class QuadraticForm:
    """A map q: G -> roots of unity (not necessarily a valid quadratic form;
    see :func:`is_quadratic`)."""

    def __init__(self, group: FiniteAbelianGroup, values: Mapping[Element, RootOfUnity]):
        self.group = group
        self.values = {group.reduce(g): v for g, v in values.items()}
        missing = [g for g in group.elements if g not in self.values]
        if missing:
            raise ValueError(f"form undefined on {missing[:3]}")

    def __call__(self, g) -> RootOfUnity:
        return self.values[self.group.reduce(g)]

    def beta(self, a, b) -> RootOfUnity:
        G = self.group
        return self(G.add(a, b)) / (self(a) * self(b))

    def compose(self, phi: Mapping[Element, Element]) -> "QuadraticForm":
        """g -> q(phi(g))."""
        return QuadraticForm(self.group, {g: self.values[phi[g]] for g in self.group.elements})

    def __eq__(self, other):
        return (isinstance(other, QuadraticForm) and self.group == other.group
                and self.values == other.values)

    def __repr__(self):
        body = ", ".join(f"{self.group.label(g)}:{v}" for g, v in list(self.values.items())[:8])
        return f"QuadraticForm({self.group}; {body}{', ...' if self.group.order > 8 else ''})"

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.group.moduli),
                "q": [[list(g), str(self.values[g])] for g in self.group.elements]}

    @classmethod
    def from_json(cls, data: Mapping) -> "QuadraticForm":
        group = FiniteAbelianGroup(tuple(data["invariant_factors"]))
        return cls(group, {tuple(g): RootOfUnity.parse(v) for g, v in data["q"]})


def is_quadratic(q: QuadraticForm) -> bool:
    """q(g) = q(-g) everywhere and beta is a bicharacter.

    beta is symmetric by construction, so additivity in the first slot is
    enough; it is checked as beta(a + e_i, c) = beta(a, c) beta(e_i, c) for
    all a, c and every canonical generator e_i, which forces
    beta(., c) to be a homomorphism.
    """
    G = q.group
    if not q(G.identity).is_one():
        return False
    if any(q(g) != q(G.neg(g)) for g in G.elements):
        return False
    for e in G.generators():
        for a in G.elements:
            ae = G.add(a, e)
            for c in G.elements:
                if q.beta(ae, c) != q.beta(a, c) * q.beta(e, c):
                    return False
    return True


# -- cyclic cocycles and braidings -----------------------------------------

@dataclass(frozen=True)
class CyclicCocycle:
    """omega_zeta on Z_M: 1 if j + l < M, else zeta^i."""

    M: int
    zeta: RootOfUnity

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("M must be positive")
        if not (self.zeta ** self.M).is_one():
            raise ValueError(f"zeta = {self.zeta} is not an {self.M}-th root of unity")


def omega_eval(c: CyclicCocycle, i: int, j: int, l: int) -> RootOfUnity:
    M = c.M
    if not all(0 <= t < M for t in (i, j, l)):
        raise ValueError(f"residues {(i, j, l)} out of range for M = {M}")
    return ONE if j + l < M else c.zeta ** i


def cocycle_defects(c: CyclicCocycle) -> list[tuple[int, int, int, int]]:
    """Quadruples where the 3-cocycle identity fails (brute force)."""
    M = c.M
    w = lambda i, j, l: omega_eval(c, i % M, j % M, l % M)
    bad = []
    for a, b, x, d in itertools.product(range(M), repeat=4):
        lhs = w(b, x, d) * w(a, b + x, d) * w(a, b, x)
        rhs = w(a + b, x, d) * w(a, b, x + d)
        if lhs != rhs:
            bad.append((a, b, x, d))
    return bad


@dataclass(frozen=True)
class CyclicBraiding:
    """sigma_xi(i, j) = xi^(ij) on Z_M, braiding vect_{Z_M}^{xi^M}."""

    M: int
    xi: RootOfUnity

    def __post_init__(self):
        if not (self.xi ** (2 * self.M)).is_one() or not (self.xi ** (self.M * self.M)).is_one():
            raise ValueError(f"xi = {self.xi} must satisfy xi^(2M) = xi^(M^2) = 1 for M = {self.M}")

    @property
    def zeta(self) -> RootOfUnity:
        return self.xi ** self.M

    @property
    def cocycle(self) -> CyclicCocycle:
        return CyclicCocycle(self.M, self.zeta)

    def sigma(self, i: int, j: int) -> RootOfUnity:
        return self.xi ** (i * j)


def hexagon_defects(b: CyclicBraiding) -> list[tuple[int, int, int]]:
    """Triples failing omega(a,b,c) omega(b,c,a) sigma(a,b+c) = omega(b,a,c) sigma(a,b) sigma(a,c)."""
    M, c = b.M, b.cocycle
    w = lambda i, j, l: omega_eval(c, i % M, j % M, l % M)
    s = lambda i, j: b.sigma(i % M, j % M)
    bad = []
    for x, y, z in itertools.product(range(M), repeat=3):
        if w(x, y, z) * w(y, z, x) * s(x, y + z) != w(y, x, z) * s(x, y) * s(x, z):
            bad.append((x, y, z))
    return bad


def quadratic_from_xi(b: CyclicBraiding) -> QuadraticForm:
    """q(j) = xi^(j^2) on Z_M."""
    G = FiniteAbelianGroup.cyclic(b.M)
    return QuadraticForm(G, {(j,): b.xi ** (j * j) for j in range(b.M)})


def enumerate_braidings(M: int, zeta: RootOfUnity | None = None) -> list[CyclicBraiding]:
    """All xi with xi^(2M) = xi^(M^2) = 1, optionally with xi^M = zeta."""
    if M < 1:
        raise ValueError("M must be positive")
    out = []
    for k in range(2 * M):
        xi = RootOfUnity(Fraction(k, 2 * M))
        if not (xi ** (M * M)).is_one():
            continue
        if zeta is not None and xi ** M != zeta:
            continue
        out.append(CyclicBraiding(M, xi))
    return out


def enumerate_quadratic_forms(G: FiniteAbelianGroup, max_order: int = MAX_GROUP_ORDER) -> list[QuadraticForm]:
    """Every quadratic form on G.

    A quadratic form is fixed by q(e_i) and beta(e_i, e_j) (i < j).  Those
    range over roots whose orders are forced by q(-e_i) = q(e_i), q(d_i e_i) = 1
    (so q(e_i)^(2 d_i) = 1) and beta(e_i, e_j)^gcd(d_i, d_j) = 1; each
    candidate map is then filtered through :func:`is_quadratic`.
    """
    if G.order > max_order:
        raise ValueError(f"|G| = {G.order} exceeds bound {max_order}")
    d = G.moduli
    r = len(d)
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    diag_pools = [[Fraction(k, 2 * m) for k in range(2 * m)] for m in d]
    off_pools = [[Fraction(k, gcd(d[i], d[j])) for k in range(gcd(d[i], d[j]))] for i, j in pairs]
    out, seen = [], set()
    for diag in itertools.product(*diag_pools):
        for off in itertools.product(*off_pools):
            vals = {}
            for g in G.elements:
                e = sum(x * x * t for x, t in zip(g, diag))
                e += sum(g[i] * g[j] * t for (i, j), t in zip(pairs, off))
                vals[g] = RootOfUnity(e)
            key = tuple(vals[g] for g in G.elements)
            if key in seen:
                continue  # trivial factors give repeated parameters
            seen.add(key)
            q = QuadraticForm(G, vals)
            if is_quadratic(q):
                out.append(q)
    return out


# -- radical and Mueger-centre classification ------------------------------

class CenterType(str, enum.Enum):
    NON_DEGENERATE = "NonDegenerate"
    SLIGHTLY_DEGENERATE = "SlightlyDegenerate"
    CONTAINS_TANNAKIAN = "ContainsTannakian"
    SYMMETRIC_OTHER = "SymmetricOther"


@dataclass(frozen=True)
class CenterClass:
    verdict: CenterType
    support: tuple[Element, ...]
    witness: Element | None = None


def radical(q: QuadraticForm, within=None) -> dict[Element, RootOfUnity]:
    """{g : beta(g, h) = 1 for all h}, with q values; optionally inside a subgroup."""
    S = list(within) if within is not None else list(q.group.elements)
    return {g: q(g) for g in S if all(q.beta(g, h).is_one() for h in S)}


def classify_symmetric(values: Mapping[Element, RootOfUnity], identity: Element) -> CenterClass:
    """Classify a symmetric pointed category given q on its (centralizing) support."""
    support = tuple(sorted(values))
    nontrivial = [g for g in support if g != identity]
    if not nontrivial:
        return CenterClass(CenterType.NON_DEGENERATE, support)
    tann = [g for g in nontrivial if values[g].is_one()]
    if tann:
        return CenterClass(CenterType.CONTAINS_TANNAKIAN, support, tann[0])
    if len(nontrivial) == 1 and values[nontrivial[0]] == MINUS_ONE:
        return CenterClass(CenterType.SLIGHTLY_DEGENERATE, support, nontrivial[0])
    return CenterClass(CenterType.SYMMETRIC_OTHER, support, nontrivial[0])


def classify_center(q: QuadraticForm) -> CenterClass:
    return classify_symmetric(radical(q), q.group.identity)


def premetric_equivalent(q1: QuadraticForm, q2: QuadraticForm, limit: int = 10**6):
    """An automorphism phi with q2(phi(g)) = q1(g) for all g, or None."""
    if q1.group != q2.group:
        raise ValueError("forms live on different groups")
    for phi in q1.group.automorphisms(limit):
        if all(q2.values[phi[g]] == q1.values[g] for g in q1.group.elements):
            return phi
    return None


@dataclass
class SvectSplit:
    u: Element
    complement: list[Element]
    complement_factors: tuple[int, ...]
    restricted: dict[Element, RootOfUnity]


def split_svect_factor(q: QuadraticForm) -> SvectSplit | None:
    """Split off a radical element u with q(u) = -1 as a direct factor.

    Only u of order 2 qualify.  Returns the first such u (canonical order)
    that admits an index-2 complement H, with q restricted to H; None when
    no radical u of order 2 has q(u) = -1 or no complement exists.
    """
    G = q.group
    for u, v in radical(q).items():
        if v != MINUS_ONE or G.element_order(u) != 2:
            continue
        H = order_two_complement(G, u)
        if H is None:
            continue
        pos = {h: i for i, h in enumerate(H)}
        table = [[pos[G.add(a, b)] for b in H] for a in H]
        factors = TableGroup(table, pos[G.identity]).invariant_factors()
        return SvectSplit(u, H, factors, {h: q(h) for h in H})
    return None
