import itertools
import sys

import pytest
from hypothesis import HealthCheck, settings

from fusionkit import build_cm, build_ising, deligne_product, fermionic_moore_read_ring, pointed_ring

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


# -- independent oracles: plain loops over the raw coefficient table ----------

def coeff_table(ring):
    """{(a, b, c): N} straight from the JSON form, bypassing FusionRing lookups."""
    return {(a, b, c): n for a, b, c, n in ring.to_json()["coeffs"] if n}


def brute_associative(ring) -> bool:
    N = coeff_table(ring)
    r = ring.rank
    for a, b, c, d in itertools.product(range(r), repeat=4):
        lhs = sum(N.get((a, b, e), 0) * N.get((e, c, d), 0) for e in range(r))
        rhs = sum(N.get((b, c, f), 0) * N.get((a, f, d), 0) for f in range(r))
        if lhs != rhs:
            return False
    return True


def brute_isomorphic(r1, r2) -> bool:
    """Try every bijection fixing the unit."""
    if r1.rank != r2.rank:
        return False
    N1, N2 = coeff_table(r1), coeff_table(r2)
    rest1 = [x for x in range(r1.rank) if x != r1.unit]
    rest2 = [x for x in range(r2.rank) if x != r2.unit]
    for perm in itertools.permutations(rest2):
        phi = dict(zip(rest1, perm))
        phi[r1.unit] = r2.unit
        if any(phi[r1.dual[x]] != r2.dual[phi[x]] for x in range(r1.rank)):
            continue
        if len(N1) == len(N2) and all(N2.get((phi[a], phi[b], phi[c])) == n
                                      for (a, b, c), n in N1.items()):
            return True
    return False


def brute_orbit(ring, x):
    """Left-multiplication orbit of x under the simples g with g x g* = 1."""
    N = coeff_table(ring)
    inv = [g for g in range(ring.rank)
           if [c for c in range(ring.rank) if N.get((g, ring.dual[g], c))] == [ring.unit]]
    orbit = set()
    for g in inv:
        orbit.update(c for c in range(ring.rank) if N.get((g, x, c)))
    return orbit


def relabel(ring, perm):
    """Copy of ring with basis element i renamed perm[i]."""
    data = ring.to_json()
    inv = {p: i for i, p in enumerate(perm)}
    from fusionkit import FusionRing
    labels = [ring.labels[inv[j]] for j in range(ring.rank)]
    dual = [perm[ring.dual[inv[j]]] for j in range(ring.rank)]
    coeffs = [(perm[a], perm[b], perm[c], n) for a, b, c, n in data["coeffs"]]
    return FusionRing(labels, perm[ring.unit], dual, coeffs)


def small_family_rings():
    """Family rings of rank <= 8 keyed by a readable name."""
    out = {
        "ising": build_ising(),
        "C_4": build_cm(4)[0],
        "moore-read": fermionic_moore_read_ring(),
        "ising x Z2": deligne_product(build_ising(), pointed_ring((2,))),
    }
    for moduli in [(1,), (2,), (3,), (4,), (2, 2), (5,), (6,), (2, 3), (7,), (8,), (2, 4), (2, 2, 2)]:
        out[f"pointed{moduli}"] = pointed_ring(moduli)
    return out


@pytest.fixture(scope="session")
def family_small():
    return small_family_rings()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
