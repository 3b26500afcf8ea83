"""Splitting a braided-admissible GTY ring as I_N x B.

``decompose_gty`` runs the constructive argument step by step on the ring
alone; each step either records re-checkable data in a trace or stops with
a :class:`NotDecomposable` naming the step.  Braidedness cannot be decided
from fusion rules, so a stop is a legitimate answer, not a bug.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .dims import ROOT2, ONE as DIM_ONE, DimensionError, cd_set
from .groups import FiniteAbelianGroup, TableGroup, order_two_complement
from .isomorphism import ring_isomorphic
from .nising import build_cm, two_adic, verify_fact_cm
from .ring import FusionRing, deligne_product, is_isomorphism, pointed_ring, validate_ring
from .subrings import (Subring, closure, gty_structure, invertible_indices, invertibles,
                       is_pointed, subring_generated, universal_grading)


@dataclass
class DecompositionTrace:
    universal_factors: list[int] = field(default_factory=list)
    # e_i given by the simples of C_{e_i}
    generator_components: list[list[str]] = field(default_factory=list)
    noninvertible_indices: list[int] = field(default_factory=list)   # i_1 <= ... <= i_p
    invertible_indices: list[int] = field(default_factory=list)      # j_1 <= ... <= j_q
    Z: str | None = None
    Z_components: list[str] = field(default_factory=list)            # Z_{i_l}
    a_b: list[list[str]] = field(default_factory=list)               # (a_{j_s}, b_{j_s})
    g: list[str] = field(default_factory=list)                       # g_l, g_1 = delta
    B_tilde_generators: list[str] = field(default_factory=list)
    B_tilde: list[str] = field(default_factory=list)
    delta: str | None = None
    B0: list[str] = field(default_factory=list)
    B0_factors: list[int] = field(default_factory=list)
    Z_subring: list[str] = field(default_factory=list)
    M: int | None = None
    N: int | None = None
    m: int | None = None
    B_factors: list[int] = field(default_factory=list)
    witness: list[int] = field(default_factory=list)  # basis of I_N x B -> basis of R

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class Decomposition:
    N: int
    B: FusionRing
    B_factors: tuple[int, ...]
    trace: DecompositionTrace
    Z_subring: Subring
    B0: Subring

    @property
    def ok(self) -> bool:
        return True

    @property
    def B_order(self) -> int:
        return self.B.rank


@dataclass
class NotDecomposable:
    step: str
    reason: str
    trace: DecompositionTrace

    @property
    def ok(self) -> bool:
        return False


@dataclass
class FactorizationResult:
    ok: bool
    counterexample: str | None = None

    def __bool__(self):
        return self.ok


def exact_factorization_check(ring: FusionRing, A: Subring, B: Subring) -> FactorizationResult:
    """Every simple of ``ring`` is X (x) g for exactly one X in A and g in B."""
    inv = set(invertible_indices(ring))
    if any(g not in inv for g in B.simples):
        raise ValueError("B must be pointed")
    hit: dict[int, tuple[int, int]] = {}
    for x in A.simples:
        for g in B.simples:
            p = ring.product(x, g)
            if len(p) != 1 or next(iter(p.values())) != 1:
                return FactorizationResult(False, f"{ring.labels[x]} x {ring.labels[g]} is not simple")
            y = next(iter(p))
            if y in hit:
                x0, g0 = hit[y]
                return FactorizationResult(
                    False, f"{ring.labels[y]} = {ring.labels[x0]} x {ring.labels[g0]} "
                           f"= {ring.labels[x]} x {ring.labels[g]}")
            hit[y] = (x, g)
    missing = [ring.labels[y] for y in range(ring.rank) if y not in hit]
    if missing:
        return FactorizationResult(False, f"{missing[0]} is not reached")
    return FactorizationResult(True)


@dataclass
class CyclicIdentification:
    family: str                      # "C_M" or "unknown"
    M: int
    witness: list[int] | None
    invertibles_cyclic: bool
    braidable: bool | None           # False when excluded by the classification
    note: str = ""


def cyclic_extension_identify(ring: FusionRing) -> CyclicIdentification:
    """Match a GTY ring with cyclic universal grading of order M against C_M."""
    rep = gty_structure(ring)
    if not rep.is_gty:
        raise ValueError("ring is not GTY")
    grading = universal_grading(ring)
    if len(grading.group.moduli) > 1:
        raise ValueError(f"universal grading group {grading.group} is not cyclic")
    M = grading.group.order
    G = invertibles(ring)
    cyclic = G.invariant_factors is not None and len(G.invariant_factors) <= 1
    target, _ = build_cm(M) if M % 2 == 0 else (None, None)
    phi = ring_isomorphic(ring, target) if target is not None else None
    if phi is not None:
        return CyclicIdentification("C_M", M, phi, cyclic, None)
    note = "not ring-isomorphic to C_M; no braided category has these fusion rules"
    if cyclic and M % 4 == 0:
        note += f" (G(C) cyclic of order {M}: a twisted (D_2M)_E pattern)"
    return CyclicIdentification("unknown", M, None, cyclic, False, note)


def fermionic_moore_read_ring() -> FusionRing:
    """Rank 6: Z_4 = {0,1,2,3} with delta = 2, and s0, s1 of degree 1 and 3."""
    labels = ["0", "1", "2", "3", "σ0", "σ1"]
    coeffs = []
    for g in range(4):
        for h in range(4):
            coeffs.append((g, h, (g + h) % 4, 1))
        for a in range(2):
            coeffs.append((g, 4 + a, 4 + (a + g) % 2, 1))
            coeffs.append((4 + a, g, 4 + (a + g) % 2, 1))
    for a in range(2):
        for b in range(2):
            for g in range(4):
                if g % 2 == (a + b + 1) % 2:
                    coeffs.append((4 + a, 4 + b, g, 1))
    return FusionRing(labels, 0, [0, 3, 2, 1, 5, 4], coeffs, {"family": "fermionic-moore-read"})


def _check_preconditions(ring: FusionRing) -> None:
    rep = validate_ring(ring)
    if not rep.ok:
        raise ValueError(f"ring is not valid: {rep.malformed or rep.violations}")
    if not ring.is_commutative():
        raise ValueError("ring is not commutative")
    if is_pointed(ring):
        raise ValueError("ring is pointed")
    try:
        cd = cd_set(ring)
    except DimensionError as exc:
        raise ValueError(str(exc)) from exc
    if cd != frozenset({DIM_ONE, ROOT2}):
        raise ValueError(f"cd(R) = {{{', '.join(sorted(map(str, cd)))}}}, expected {{1, √2}}")


def _group_of(ring: FusionRing, elems) -> tuple[FiniteAbelianGroup, list[int], dict]:
    """Abelian structure of a set of invertibles closed under products."""
    elems = sorted(elems)
    pos = {x: i for i, x in enumerate(elems)}
    table = [[pos[next(iter(ring.product(x, y)))] for y in elems] for x in elems]
    group, gens, coords = TableGroup(table, pos[ring.unit]).structure()
    return group, [elems[g] for g in gens], {elems[i]: c for i, c in coords.items()}


def decompose_gty(ring: FusionRing) -> Decomposition | NotDecomposable:
    """Find N, a pointed B and an isomorphism I_N x B -> ring, or the failing step."""
    _check_preconditions(ring)
    L = ring.labels
    tr = DecompositionTrace()

    def stop(step, reason):
        return NotDecomposable(step, reason, tr)

    rep = gty_structure(ring)
    if not rep.passes:
        return stop("a", "; ".join(rep.failures) or "not GTY")

    # (a) universal grading and invariant-factor generators
    grading = universal_grading(ring)
    U = grading.group
    tr.universal_factors = list(U.moduli)
    comps = [grading.component(e) for e in U.generators()]
    tr.generator_components = [[L[x] for x in c] for c in comps]

    # (b) partition; indices stay ascending so d_{i_1} | d_{i_2} | ...
    inv = set(invertible_indices(ring))
    I_idx, J_idx = [], []
    for i, c in enumerate(comps):
        if len(c) == 1 and c[0] not in inv:
            I_idx.append(i)
        elif len(c) == 2 and all(x in inv for x in c):
            J_idx.append(i)
        else:
            return stop("b", f"component of e_{i + 1} is {[L[x] for x in c]}")
    tr.noninvertible_indices = [i + 1 for i in I_idx]
    tr.invertible_indices = [j + 1 for j in J_idx]
    if not I_idx:
        return stop("b", "no generator component holds a non-invertible")
    Zs = [comps[i][0] for i in I_idx]
    Z = Zs[0]
    tr.Z, tr.Z_components = L[Z], [L[x] for x in Zs]
    ab = [comps[j] for j in J_idx]
    tr.a_b = [[L[x] for x in c] for c in ab]

    # (c) translations g_l with Z_{i_1} (x) Z_{i_l}* = g_l + delta g_l
    assert rep.transitive, "transitivity premise"
    g_list = []
    for Zl in Zs:
        prod = ring.product(Z, ring.dual[Zl])
        cands = sorted(c for c in prod if c != ring.unit)
        if len(prod) != 2 or not cands or any(c not in inv for c in prod):
            return stop("c", f"{L[Z]} x {L[Zl]}* = {sorted(L[c] for c in prod)}")
        g = cands[0]
        if dict(ring.product(g, Zl)) != {Z: 1}:
            return stop("c", f"{L[g]} x {L[Zl]} is not {L[Z]}")
        g_list.append(g)
    delta = g_list[0]
    tr.g, tr.delta = [L[g] for g in g_list], L[delta]

    # (d) B~ generated by the a's, b's and g's
    b_gens = [x for c in ab for x in c] + g_list
    tr.B_tilde_generators = [L[x] for x in b_gens]
    B_tilde = closure(ring, b_gens)
    tr.B_tilde = [L[x] for x in B_tilde]
    if any(x not in inv for x in B_tilde):
        return stop("d", "B~ is not pointed")

    # (e) B~ = <delta> x B_0
    group, _, coords = _group_of(ring, B_tilde)
    back = {c: x for x, c in coords.items()}
    H = order_two_complement(group, coords[delta])
    if H is None:
        return stop("e", f"<{L[delta]}> has no complement in G(B~) = {group}")
    B0 = Subring(tuple(sorted(back[h] for h in H)), ring)
    tr.B0 = B0.labels()
    b0_group, _, b0_coords = _group_of(ring, B0.simples)
    tr.B0_factors = list(b0_group.moduli)

    # (f) exact factorisation <Z> . B_0
    Zsub = subring_generated(ring, [Z])
    tr.Z_subring = Zsub.labels()
    fact = exact_factorization_check(ring, Zsub, B0)
    if not fact:
        return stop("f", fact.counterexample)

    # (g) <Z> is C_M = I_N x Z_m
    zring = Zsub.as_ring()
    try:
        ident = cyclic_extension_identify(zring)
    except ValueError as exc:
        return stop("g", str(exc))
    if ident.family != "C_M":
        return stop("g", f"<{L[Z]}> is {ident.note}")
    M = ident.M
    fc = verify_fact_cm(M)
    N, m = fc.N, fc.m
    tr.M, tr.N, tr.m = M, N, m
    # I_N x Z_m -> C_M -> <Z> (indices of zring) -> ring
    cm_to_z = {v: i for i, v in enumerate(ident.witness)}
    inz = [Zsub.simples[cm_to_z[fc.witness[k]]] for k in range(len(fc.witness))]

    B0_ring = pointed_ring(b0_group.moduli)
    b0_elems = b0_group.elements
    b0_back = {c: x for x, c in b0_coords.items()}
    Zm = pointed_ring((m,))
    B_ring = deligne_product(Zm, B0_ring)
    B_ring.metadata = {"family": "pointed", "moduli": [m] + list(b0_group.moduli)}
    full = deligne_product(build_cm(2 ** N)[0], B_ring)
    # basis of I_N x (Z_m x B_0) is ((x * m) + k) * |B_0| + t
    nI, nm, nb = 3 * 2 ** (N - 1), m, len(b0_elems)
    phi = []
    for x in range(nI):
        for k in range(nm):
            for t in range(nb):
                z = inz[x * nm + k]
                g = b0_back[b0_elems[t]]
                phi.append(next(iter(ring.product(z, g))))
    if not is_isomorphism(full, ring, phi):
        return stop("g", "assembled map I_N x B -> R is not an isomorphism")
    tr.witness = phi
    tr.B_factors = list(FiniteAbelianGroup((m,) + tuple(b0_group.moduli)).invariant_factors)
    return Decomposition(N, B_ring, tuple(tr.B_factors), tr, Zsub, B0)
