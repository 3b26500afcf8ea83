"""Ising, C_M and N-Ising fusion rings, and their induced braidings.

C_M is the subring of Ising x Z_M generated by Z x 1.  Its simples are the
invertibles delta^y x 2j and the non-invertibles Z_j = Z x (2j+1),
0 <= j < M/2.  I_N is C_{2^N}; a twist label zeta only changes the
associator, so it is carried as metadata and never touches the coefficients.

Braidings are modelled by squared-braiding scalars only: on the Ising side
by an :class:`IsingPairing`, on the cyclic side by xi (beta = xi^(2ij)).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .dims import fp_dims
from .groups import Element, FiniteAbelianGroup
from .isomorphism import ring_isomorphic
from .pointed import (CenterClass, CenterType, CyclicBraiding, QuadraticForm,
                      classify_symmetric, enumerate_braidings, quadratic_from_xi, radical)
from .ring import FusionRing, deligne_product, is_isomorphism, pointed_ring
from .roots import I, MINUS_I, MINUS_ONE, ONE, RootOfUnity
from .subrings import Grading, closure, invertible_indices, subring_lattice


def build_ising() -> FusionRing:
    """Rank 3: 1, delta, Z with Z (x) Z = 1 + delta."""
    ring, _ = build_cm(2)
    return FusionRing(["1", "δ", "Z"], ring.unit, ring.dual, list(ring.triples()),
                      {"family": "ising"})


def cm_factors(M: int) -> list[tuple[str, int]]:
    """(Ising simple, Z_M residue) for each basis element of ``build_cm(M)``."""
    half = M // 2
    out = [(y, 2 * j) for j in range(half) for y in ("1", "δ")]
    out += [("Z", 2 * j + 1) for j in range(half)]
    return out


def build_cm(M: int) -> tuple[FusionRing, Grading]:
    """The ring C_M with its Z_M grading.

    Basis: delta^y x 2j at index 2j + y, then Z_j at index M + j.
    """
    if M < 2 or M % 2:
        raise ValueError(f"M must be an even integer >= 2, got {M}")
    half = M // 2

    def inv(y, j):
        return 2 * (j % half) + (y % 2)

    def Z(j):
        return M + (j % half)

    coeffs = []
    for j in range(half):
        for y in (0, 1):
            for l in range(half):
                for y2 in (0, 1):
                    coeffs.append((inv(y, j), inv(y2, l), inv(y + y2, j + l), 1))
                coeffs.append((inv(y, j), Z(l), Z(j + l), 1))
                coeffs.append((Z(l), inv(y, j), Z(j + l), 1))
    for j in range(half):
        for l in range(half):
            s = j + l + 1
            coeffs.append((Z(j), Z(l), inv(0, s), 1))
            coeffs.append((Z(j), Z(l), inv(1, s), 1))
    dual = [inv(y, -j) for j in range(half) for y in (0, 1)]
    dual += [Z(half - 1 - j) for j in range(half)]
    labels = [f"{y}⊠{k}" for y, k in cm_factors(M)]
    ring = FusionRing(labels, 0, dual, coeffs, {"family": "cm", "M": M})
    group = FiniteAbelianGroup.cyclic(M)
    grading = Grading(group, tuple((k,) for _, k in cm_factors(M)), faithful=True)
    return ring, grading


@dataclass(frozen=True)
class NIsingSpec:
    N: int
    zeta: RootOfUnity = ONE

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be >= 1")
        if not (self.zeta ** (2 ** self.N)).is_one():
            raise ValueError(f"zeta = {self.zeta} is not a 2^{self.N}-th root of unity")


@dataclass
class NIsingRing:
    spec: NIsingSpec
    ring: FusionRing
    grading: Grading

    @property
    def factors(self) -> list[tuple[str, int]]:
        return cm_factors(2 ** self.spec.N)


def build_nising(spec: NIsingSpec) -> NIsingRing:
    ring, grading = build_cm(2 ** spec.N)
    ring.metadata.update({"family": "nising", "N": spec.N, "zeta": str(spec.zeta)})
    return NIsingRing(spec, ring, grading)


def self_dual_noninvertibles(M: int) -> list[int]:
    """Indices of the Z_j with Z_j* = Z_j in ``build_cm(M)``."""
    ring, _ = build_cm(M)
    return [x for x in range(M, ring.rank) if ring.dual[x] == x]


def two_adic(M: int) -> tuple[int, int]:
    N = 0
    while M % 2 == 0:
        M //= 2
        N += 1
    return N, M


@dataclass
class FactCM:
    M: int
    N: int
    m: int
    witness: list[int]  # basis of I_N x Z_m -> basis of C_M


def verify_fact_cm(M: int) -> FactCM:
    """Ring isomorphism I_N x pointed(Z_m) -> C_M for M = 2^N m, m odd."""
    if M < 2 or M % 2:
        raise ValueError(f"M must be even and >= 2, got {M}")
    N, m = two_adic(M)
    product = deligne_product(build_nising(NIsingSpec(N)).ring, pointed_ring((m,)))
    target, _ = build_cm(M)
    phi = ring_isomorphic(product, target)
    if phi is None or not is_isomorphism(product, target, phi):
        raise RuntimeError(f"no isomorphism C_{M} ~ I_{N} x Z_{m}")
    return FactCM(M, N, m, phi)


@dataclass
class NoFactReport:
    N: int
    subring_count: int
    proper_pointed: bool
    noninvertibles_faithful: bool
    offending: list[list[str]] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.proper_pointed and self.noninvertibles_faithful


def verify_nofact(N: int, max_N: int = 5) -> NoFactReport:
    """Every proper subring of I_N is pointed; every non-invertible is faithful."""
    if N > max_N:
        raise ValueError(f"N = {N} exceeds bound {max_N}")
    ring = build_nising(NIsingSpec(N)).ring
    lat = subring_lattice(ring)
    inv = set(invertible_indices(ring))
    offending = [s.labels() for s in lat.subrings
                 if s.rank < ring.rank and not set(s.simples) <= inv]
    faithful = all(len(closure(ring, [x])) == ring.rank
                   for x in range(ring.rank) if x not in inv)
    return NoFactReport(N, len(lat.subrings), not offending, faithful, offending)


class TwistStatus(str, enum.Enum):
    ADMITS = "Admits"
    RULED_OUT = "RuledOut"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class TwistVerdict:
    status: TwistStatus
    reason: str


def twist_obstruction(spec: NIsingSpec) -> TwistVerdict:
    """Whether I_{N,zeta} can carry a braiding, as far as is known."""
    z = spec.zeta
    if z in (ONE, MINUS_ONE):
        return TwistVerdict(TwistStatus.ADMITS,
                            "restriction of a braiding on Ising x vect_{Z_2^N}^zeta (zeta = ±1)")
    if z not in (I, MINUS_I):
        return TwistVerdict(TwistStatus.RULED_OUT,
                            f"pointed part <2> carries omega_(zeta^2) with zeta^2 = {z ** 2} != ±1, "
                            "which admits no braiding")
    if spec.N == 2:
        return TwistVerdict(TwistStatus.RULED_OUT,
                            "<2> would be vect_{Z_2}^{-1}, non-degenerate, contradicting primeness")
    return TwistVerdict(TwistStatus.UNKNOWN, "zeta = ±i with N > 2 is not settled")


# -- induced braidings -------------------------------------------------------

@dataclass(frozen=True)
class IsingPairing:
    s_delta_Z: RootOfUnity
    q_delta: RootOfUnity


def ising_monodromy_oracle() -> RootOfUnity:
    """Squared braiding of delta with Z in a non-degenerate braided Ising ring.

    delta has order 2, so the scalar is ±1.  In a non-degenerate category
    FPdim(D) FPdim(D') = FPdim(C); with D = <delta> this forces <delta>' to
    be a subring of dimension 2.  If Z centralized delta, <delta>' would
    contain <Z>; the value is whichever sign keeps <delta>' of dimension 2.
    """
    ring = build_ising()
    dims = fp_dims(ring)
    total = dims.total.value
    delta, Z = ring.index("δ"), ring.index("Z")
    lattice = subring_lattice(ring)

    def dim(s):
        return sum(dims[x].value ** 2 for x in s.simples)

    target = total / dim(next(s for s in lattice.subrings if s.simples == closure(ring, [delta])))
    for s in (ONE, MINUS_ONE):
        # delta centralizes itself (q(delta)^2 = 1); Z centralizes delta iff s == 1
        centralizer = [ring.unit, delta] + ([Z] if s.is_one() else [])
        sub = closure(ring, centralizer)
        if abs(sum(dims[x].value ** 2 for x in sub) - target) < 1e-9:
            return s
    raise RuntimeError("no consistent monodromy sign")


def ising_pairing() -> IsingPairing:
    return IsingPairing(ising_monodromy_oracle(), MINUS_ONE)


@dataclass(frozen=True)
class InducedBraiding:
    ising: IsingPairing
    xi: RootOfUnity


def _check(N: int, br: InducedBraiding) -> int:
    M = 2 ** N
    if not (br.xi ** (2 * M)).is_one():
        raise ValueError(f"xi = {br.xi} must satisfy xi^(2^(N+1)) = 1 for N = {N}")
    return M


def ising_monodromy(y1: str, y2: str, pairing: IsingPairing) -> tuple[RootOfUnity, bool]:
    """(scalar, is_scalar) for the Ising factor of the squared braiding."""
    if y1 == "Z" and y2 == "Z":
        return ONE, False
    if {y1, y2} == {"δ", "Z"}:
        return pairing.s_delta_Z, True
    return ONE, True


@dataclass
class SquaredBraidingTable:
    labels: list[str]
    values: list[list[RootOfUnity]]
    projective_only: list[list[bool]]


def squared_braiding_table(N: int, br: InducedBraiding) -> SquaredBraidingTable:
    """c_{Y,X} c_{X,Y} on simples of I_N for the braiding induced by ``br``.

    Pairs of two non-invertibles are not scalar; their entry is the pointed
    (grading-level) factor xi^(2ij), flagged ``projective_only``.
    """
    M = _check(N, br)
    fac = cm_factors(M)
    values, proj = [], []
    for y1, i in fac:
        row, prow = [], []
        for y2, j in fac:
            s, scalar = ising_monodromy(y1, y2, br.ising)
            row.append(s * br.xi ** (2 * i * j))
            prow.append(not scalar)
        values.append(row)
        proj.append(prow)
    return SquaredBraidingTable([f"{y}⊠{k}" for y, k in fac], values, proj)


def pointed_part(N: int) -> tuple[FiniteAbelianGroup, dict[Element, int]]:
    """C_pt of I_N as Z_2 x Z_{2^(N-1)}: (y, j) <-> delta^y x 2j."""
    half = 2 ** (N - 1)
    G = FiniteAbelianGroup((2, half))
    return G, {g: 2 * g[1] + g[0] for g in G.elements}


def induced_pointed_form(N: int, br: InducedBraiding) -> QuadraticForm:
    """q(delta^y x i) = q_I(delta)^y xi^(i^2) on C_pt."""
    _check(N, br)
    G, _ = pointed_part(N)
    return QuadraticForm(G, {(y, j): br.ising.q_delta ** y * br.xi ** ((2 * j) ** 2)
                             for (y, j) in G.elements})


@dataclass
class CenterReport:
    N: int
    xi: RootOfUnity
    center: list[int]            # basis indices of I_N
    center_labels: list[str]
    classification: CenterClass
    q_values: dict[str, RootOfUnity] = field(default_factory=dict)
    witness_label: str | None = None

    @property
    def verdict(self) -> CenterType:
        return self.classification.verdict


def induced_center(N: int, br: InducedBraiding) -> CenterReport:
    """Mueger centre of I_N with the induced braiding.

    Z x 1 generates I_N and the centre lies in C_pt, so the centre is the set
    of invertibles whose squared braiding with Z x 1 is trivial.
    """
    M = _check(N, br)
    fac = cm_factors(M)
    z1 = fac.index(("Z", 1))
    table = squared_braiding_table(N, br)
    G, to_index = pointed_part(N)
    q = induced_pointed_form(N, br)
    support = {g: q(g) for g in G.elements if table.values[to_index[g]][z1].is_one()}
    cls = classify_symmetric(support, G.identity)
    idx = sorted(to_index[g] for g in support)
    return CenterReport(N, br.xi, idx, [_label(fac[x]) for x in idx], cls,
                        {_label(fac[to_index[g]]): q(g) for g in support},
                        None if cls.witness is None else _label(fac[to_index[cls.witness]]))


def _label(f) -> str:
    return f"{f[0]}⊠{f[1]}"


def cad_cpt_check(N: int, br: InducedBraiding) -> bool:
    """q(delta x 0) = -1, and Rad(q on C_pt) = <delta x 0> joined with the centre."""
    G, to_index = pointed_part(N)
    q = induced_pointed_form(N, br)
    if q((1, 0)) != MINUS_ONE:
        return False
    inside = set(induced_center(N, br).center)
    centre = [g for g in G.elements if to_index[g] in inside]
    join = set(G.subgroup_generated([(1, 0)] + centre))
    return set(radical(q)) == join


def valid_xis(N: int, zeta: RootOfUnity | None = None) -> list[RootOfUnity]:
    """xi with xi^(2^(N+1)) = 1 (and xi^(2^N) = zeta if given)."""
    return [b.xi for b in enumerate_braidings(2 ** N, zeta)]


@dataclass
class DegeneracyRow:
    xi: RootOfUnity
    verdict: CenterType
    slightly_degenerate: bool
    pointed_nondegenerate: bool


@dataclass
class DegeneracyTable:
    N: int
    zeta: RootOfUnity
    rows: list[DegeneracyRow]
    asserted: bool

    @property
    def equivalence_holds(self) -> bool:
        return all(r.slightly_degenerate == r.pointed_nondegenerate for r in self.rows)

    @property
    def holds(self) -> bool:
        return self.equivalence_holds or not self.asserted


def degeneracy_criterion(N: int, zeta: RootOfUnity, pairing: IsingPairing | None = None) -> DegeneracyTable:
    """Slightly degenerate <=> the cyclic braiding xi is non-degenerate, over all xi."""
    pairing = pairing or ising_pairing()
    rows = []
    for xi in valid_xis(N, zeta):
        rep = induced_center(N, InducedBraiding(pairing, xi))
        q = quadratic_from_xi(CyclicBraiding(2 ** N, xi))
        nondeg = len(radical(q)) == 1
        rows.append(DegeneracyRow(xi, rep.verdict,
                                  rep.verdict == CenterType.SLIGHTLY_DEGENERATE, nondeg))
    return DegeneracyTable(N, zeta, rows, asserted=N > 2)


@dataclass
class PrimenessReport:
    N: int
    checked_braidings: int
    violations: list[str]

    @property
    def prime(self) -> bool:
        return not self.violations


def verify_prime(N: int, pairing: IsingPairing | None = None) -> PrimenessReport:
    """No non-trivial subring of I_N is non-degenerate, for every induced braiding.

    Non-pointed subrings must be the whole ring (which is degenerate for
    N > 1); pointed subrings are tested through the radical of the induced
    form restricted to them.
    """
    pairing = pairing or ising_pairing()
    ring = build_nising(NIsingSpec(N)).ring
    lat = subring_lattice(ring)
    inv = set(invertible_indices(ring))
    G, to_index = pointed_part(N)
    from_index = {v: k for k, v in to_index.items()}
    xis = valid_xis(N)
    bad = []
    for s in lat.subrings:
        if not set(s.simples) <= inv and s.rank != ring.rank:
            bad.append(f"proper non-pointed subring {s.labels()}")
    for xi in xis:
        br = InducedBraiding(pairing, xi)
        q = induced_pointed_form(N, br)
        for s in lat.subrings:
            if s.rank == 1:
                continue
            if set(s.simples) <= inv:
                elems = [from_index[x] for x in s.simples]
                if len(radical(q, within=elems)) == 1:
                    bad.append(f"xi={xi}: pointed subring {s.labels()} is non-degenerate")
            elif N > 1 and induced_center(N, br).verdict == CenterType.NON_DEGENERATE:
                bad.append(f"xi={xi}: I_{N} itself is non-degenerate")
    return PrimenessReport(N, len(xis), bad)
