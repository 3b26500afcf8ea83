"""End-to-end acceptance checks, one test per criterion.

Each criterion records PASS/FAIL with its wall time; the summary lines are
printed at the end of the pytest run (see conftest).  Run directly with
``python tests/test_acceptance.py``.
"""

import functools
import itertools
import random
import sys
import time
from math import gcd, prod

import pytest

from fusionkit import (CenterType, CyclicBraiding, FiniteAbelianGroup, FusionRing, InducedBraiding,
                       NIsingSpec, RootOfUnity, build_cm, build_nising, decompose_gty,
                       deligne_product, enumerate_braidings, enumerate_quadratic_forms,
                       fp_dims, gty_structure, induced_center, invertibles, is_isomorphism,
                       pointed_ring, quadratic_from_xi, radical, ring_isomorphic, universal_grading,
                       validate_ring, verify_fact_cm, verify_nofact, verify_prime, degeneracy_criterion)
from fusionkit.dims import ExactDim, ROOT2
from fusionkit.nising import ising_pairing, two_adic, valid_xis
from fusionkit.roots import MINUS_ONE, ONE

from conftest import brute_associative, brute_isomorphic, brute_orbit, relabel, small_family_rings

RESULTS: dict[int, tuple[bool, float, str]] = {}


def criterion(number: int, title: str, limit: float | None = None):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                RESULTS[number] = (False, time.perf_counter() - start, f"{title}: {exc!s:.120}")
                raise
            elapsed = time.perf_counter() - start
            ok = limit is None or elapsed < limit
            note = title if ok else f"{title}: took {elapsed:.1f}s, limit {limit}s"
            RESULTS[number] = (ok, elapsed, note)
            assert ok, note
        return run
    return wrap


def summary_lines() -> list[str]:
    lines = []
    for n in sorted(RESULTS):
        ok, secs, note = RESULTS[n]
        lines.append(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} ({secs:6.2f}s) {note}")
    return lines


@criterion(1, "family invariants of I_N for N = 1..6", limit=1.0)
def test_c01_family_invariants():
    for N in range(1, 7):
        ring = build_nising(NIsingSpec(N)).ring
        d = fp_dims(ring)
        assert d.exact
        assert d.total == ExactDim(2 ** (N + 1))
        non = [x for x in d.dims if x != ExactDim(1)]
        assert non == [ROOT2] * 2 ** (N - 1)
        assert invertibles(ring).invariant_factors == FiniteAbelianGroup((2, 2 ** (N - 1))).invariant_factors
        assert universal_grading(ring).group.invariant_factors == (2 ** N,)


@criterion(2, "C_M is I_N x pointed(Z_m) with a verified witness", limit=30.0)
def test_c02_fact_cm():
    for M in (2, 4, 6, 8, 10, 12, 20, 24, 40, 48):
        f = verify_fact_cm(M)
        assert (f.N, f.m) == two_adic(M)
        src = deligne_product(build_nising(NIsingSpec(f.N)).ring, pointed_ring((f.m,)))
        assert is_isomorphism(src, build_cm(M)[0], f.witness)


@criterion(3, "proper subrings of I_N pointed, non-invertibles faithful, I_N prime", limit=60.0)
def test_c03_nofact_and_prime():
    for N in range(1, 6):
        rep = verify_nofact(N)
        assert rep.proper_pointed and rep.noninvertibles_faithful, (N, rep.offending)
    for N in range(1, 5):
        rep = verify_prime(N)
        assert rep.prime, (N, rep.violations)
        assert rep.checked_braidings == len(valid_xis(N))


@criterion(4, "braiding counts on Z_M for M = 1..12", limit=5.0)
def test_c04_braiding_counts():
    for M in range(1, 13):
        for zeta in (ONE, MINUS_ONE):
            want = M if zeta == ONE or M % 2 == 0 else 0
            assert len(enumerate_braidings(M, zeta)) == want
        # any other zeta with zeta^M = 1 admits nothing
        for k in range(1, M):
            z = RootOfUnity.of_order(M) ** k
            if z not in (ONE, MINUS_ONE):
                assert enumerate_braidings(M, z) == []
        total = enumerate_braidings(M)
        assert len(total) == gcd(M * M, 2 * M)
        forms = {tuple(q(g) for g in q.group.elements)
                 for q in enumerate_quadratic_forms(FiniteAbelianGroup.cyclic(M))}
        from_xi = {tuple(q(g) for g in q.group.elements) for q in map(quadratic_from_xi, total)}
        assert len(from_xi) == len(total) and from_xi == forms


@criterion(5, "Z_4 with a primitive 8th root: trivial radical, q(2) = -1")
def test_c05_braided_z4():
    q = quadratic_from_xi(CyclicBraiding(4, RootOfUnity.of_order(8)))
    assert list(radical(q)) == [(0,)]
    assert q((2,)) == MINUS_ONE


@criterion(6, "induced centres of I_N for N = 2..5", limit=5.0)
def test_c06_induced_centres():
    pairing = ising_pairing()
    for N in (3, 4, 5):
        prim = [xi for xi in valid_xis(N, MINUS_ONE) if xi.order == 2 ** (N + 1)]
        assert prim
        for xi in prim:
            rep = induced_center(N, InducedBraiding(pairing, xi))
            assert rep.center_labels == ["1⊠0", f"δ⊠{2 ** (N - 1)}"]
            assert rep.verdict == CenterType.SLIGHTLY_DEGENERATE
    for xi in valid_xis(2, MINUS_ONE):
        rep = induced_center(2, InducedBraiding(pairing, xi))
        assert rep.verdict == CenterType.CONTAINS_TANNAKIAN
        assert rep.witness_label == "δ⊠2"


@criterion(7, "slightly degenerate iff pointed part non-degenerate, N = 3, 4", limit=10.0)
def test_c07_degeneracy_equivalence():
    for N in (3, 4):
        for zeta in (ONE, MINUS_ONE):
            t = degeneracy_criterion(N, zeta)
            assert len(t.rows) == 2 ** N
            assert t.asserted and t.equivalence_holds


def _abelian_groups(max_order=16):
    out = set()
    for n in range(1, max_order + 1):
        divisors = [d for d in range(1, n + 1) if n % d == 0]
        for k in range(1, 5):
            for moduli in itertools.product(divisors, repeat=k):
                if prod(moduli) == n:
                    out.add(FiniteAbelianGroup(moduli).invariant_factors)
    return sorted(out, key=lambda f: (prod(f), f))


@criterion(8, "20 randomized round trips through decompose_gty", limit=60.0)
def test_c08_round_trip():
    rng = random.Random(2024)
    groups = _abelian_groups()
    passed = 0
    for _ in range(20):
        N = rng.randint(1, 4)
        f = rng.choice(groups)
        ring = deligne_product(build_nising(NIsingSpec(N)).ring, pointed_ring(f or (1,)))
        d = decompose_gty(ring)
        assert d.ok, (N, f, getattr(d, "reason", ""))
        assert d.N == N and d.B_order == prod(f)
        back = deligne_product(build_nising(NIsingSpec(d.N)).ring, d.B)
        assert is_isomorphism(back, ring, d.trace.witness)
        assert ring_isomorphic(back, ring) is not None
        passed += 1
    assert passed == 20


@criterion(9, "isomorphism search and transitivity agree with brute force")
def test_c09_oracles():
    rings = small_family_rings()
    rings["C_2"] = build_cm(2)[0]
    rings["I_2"] = build_nising(NIsingSpec(2)).ring
    rng = random.Random(9)
    names = sorted(rings)
    for n1, n2 in itertools.combinations_with_replacement(names, 2):
        r1, r2 = rings[n1], rings[n2]
        if r1.rank > 8 or r2.rank > 8:
            continue
        perm = list(range(r2.rank))
        rng.shuffle(perm)
        r2 = relabel(r2, perm)
        phi = ring_isomorphic(r1, r2)
        assert (phi is not None) == brute_isomorphic(r1, r2), (n1, n2)
        if phi is not None:
            assert is_isomorphism(r1, r2, phi)
    for r in list(rings.values()) + [build_cm(M)[0] for M in (6, 8, 12)]:
        if not validate_ring(r).ok:
            continue
        try:
            rep = gty_structure(r)
        except ValueError:
            continue  # pointed
        if not rep.is_gty:
            continue
        inv = set(invertibles(r).elements)
        non = [x for x in range(r.rank) if x not in inv]
        assert rep.transitive == (brute_orbit(r, non[0]) == set(non))


def _mutate(ring: FusionRing, rng: random.Random):
    """One random change to the raw table; returns (kind, json data)."""
    data = ring.to_json()
    r = ring.rank
    kind = rng.choice(["bump", "drop", "add", "dual", "unit"])
    coeffs = data["coeffs"]
    if kind == "bump":
        e = rng.choice(coeffs)
        e[3] += rng.choice([1, 2])
    elif kind == "drop":
        coeffs.pop(rng.randrange(len(coeffs)))
    elif kind == "add":
        have = {tuple(e[:3]) for e in coeffs}
        free = [t for t in itertools.product(range(r), repeat=3) if t not in have]
        coeffs.append(list(rng.choice(free)) + [1])
    elif kind == "dual":
        a, b = rng.sample(range(r), 2)
        dual = data["dual"]
        dual[a], dual[b] = dual[b], dual[a]
    else:
        data["unit"] = rng.choice([x for x in range(r) if x != ring.unit])
    return kind, data


@criterion(10, "200 random mutations never pass silently")
def test_c10_mutations():
    bases = [build_nising(NIsingSpec(1)).ring, build_cm(4)[0], build_cm(6)[0], build_cm(8)[0],
             deligne_product(build_cm(2)[0], pointed_ring((2,))), pointed_ring((2, 2)),
             pointed_ring((6,)), small_family_rings()["moore-read"]]
    rng = random.Random(10)
    caught = accepted_new = 0
    for _ in range(200):
        base = rng.choice(bases)
        kind, data = _mutate(base, rng)
        rep = validate_ring(data)
        if not rep.ok:
            assert rep.malformed or rep.violations
            caught += 1
            continue
        # accepted: it has to be a genuinely valid ring of a different class
        mutant = FusionRing.from_json(data)
        assert brute_associative(mutant), kind
        assert ring_isomorphic(mutant, base) is None, kind
        accepted_new += 1
    assert caught + accepted_new == 200


if __name__ == "__main__":
    import subprocess
    sys.exit(subprocess.call([sys.executable, "-m", "pytest", __file__, "-q", "-p", "no:cacheprovider"]))
