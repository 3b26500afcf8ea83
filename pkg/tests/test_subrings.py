import itertools

import pytest
from hypothesis import given, strategies as st

from fusionkit import (FiniteAbelianGroup, adjoint_subring, build_cm, build_ising, build_nising,
                       deligne_product, fermionic_moore_read_ring, gty_structure, invertibles,
                       is_grading, pointed_ring, stabilizer_decomposition, subring_generated,
                       subring_lattice, trivial_ring, universal_grading, NIsingSpec)
from fusionkit.dims import ONE, ROOT2, cd_set
from fusionkit.subrings import closure, is_pointed
from conftest import brute_orbit


def _fac(*moduli):
    return FiniteAbelianGroup(moduli).invariant_factors


def test_invertibles_examples():
    for M in (4, 6, 8, 12):
        assert invertibles(build_cm(M)[0]).invariant_factors == _fac(2, M // 2)
    ising = invertibles(build_ising())
    assert ising.invariant_factors == (2,)
    assert ising.elements == (0, 1)
    triv = invertibles(trivial_ring())
    assert triv.order == 1 and triv.invariant_factors == ()


def test_invertibles_are_exactly_dimension_one():
    from fusionkit import fp_dims
    for ring in (build_cm(8)[0], deligne_product(build_ising(), build_ising())):
        d = fp_dims(ring)
        assert set(invertibles(ring).elements) == {x for x in range(ring.rank) if d[x] == ONE}


def test_stabilizers():
    ising = build_ising()
    st_z = stabilizer_decomposition(ising, 2)
    assert st_z.stabilizer == (0, 1)
    assert st_z.decomposition == {0: 1, 1: 1}
    assert st_z.consistent
    st_d = stabilizer_decomposition(ising, 1)
    assert st_d.stabilizer == (0,) and st_d.decomposition == {0: 1}
    c8 = build_cm(8)[0]
    z1 = c8.index("Z⊠3")
    assert [c8.labels[g] for g in stabilizer_decomposition(c8, z1).stabilizer] == ["1⊠0", "δ⊠0"]
    with pytest.raises(IndexError):
        stabilizer_decomposition(ising, 5)


def test_subring_generated_examples():
    ising = build_ising()
    assert subring_generated(ising, [2]).rank == 3
    assert subring_generated(ising, [0]).simples == (0,)
    c8 = build_cm(8)[0]
    da = c8.index("δ⊠2")
    sub = subring_generated(c8, [da])
    assert sub.rank == 4 and sub.is_pointed()


def test_adjoint_subrings():
    for M in (2, 4, 6, 8):
        ring = build_cm(M)[0]
        assert adjoint_subring(ring).labels() == ["1⊠0", "δ⊠0"]
    assert adjoint_subring(pointed_ring((2, 3))).rank == 1
    prod = deligne_product(build_ising(), pointed_ring((3,)))
    assert adjoint_subring(prod).labels() == ["1⊠0", "δ⊠0"]


def test_universal_grading_examples():
    for N in range(1, 5):
        g = universal_grading(build_nising(NIsingSpec(N)).ring)
        assert g.group.invariant_factors == (2 ** N,)
    assert universal_grading(pointed_ring((2, 4))).group.invariant_factors == (2, 4)
    prod = deligne_product(build_ising(), pointed_ring((3,)))
    assert universal_grading(prod).group.invariant_factors == (6,)


@pytest.mark.parametrize("ring", [build_cm(12)[0], deligne_product(build_ising(), pointed_ring((2, 2))),
                                  fermionic_moore_read_ring(), deligne_product(build_ising(), build_ising())])
def test_universal_grading_is_faithful_with_adjoint_trivial_component(ring):
    g = universal_grading(ring)
    assert is_grading(ring, g)
    assert set(g.degree) == set(g.group.elements)
    assert tuple(g.component(g.group.identity)) == adjoint_subring(ring).simples


def test_cm_grading_matches_construction():
    ring, grading = build_cm(8)
    assert is_grading(ring, grading)
    assert grading.degree[ring.index("Z⊠3")] == (3,)


def test_lattice_examples():
    lat = subring_lattice(build_ising())
    assert [s.labels() for s in lat.subrings] == [["1"], ["1", "δ"], ["1", "δ", "Z"]]
    assert sorted(lat.covers()) == [(0, 1), (1, 2)]
    assert len(subring_lattice(trivial_ring()).subrings) == 1
    ring = build_nising(NIsingSpec(3)).ring
    lat = subring_lattice(ring)
    assert all(s.is_pointed() for s in lat.subrings if s.rank < ring.rank)


def test_lattice_bound(monkeypatch):
    with pytest.raises(ValueError):
        subring_lattice(build_cm(48)[0])
    monkeypatch.setenv("FUSIONKIT_MAX_RANK", "100")
    assert len(subring_lattice(build_cm(48)[0]).subrings) > 1


def _brute_lattice(ring):
    # every subset closure, by brute force over all subsets
    out = set()
    for k in range(ring.rank + 1):
        for seeds in itertools.combinations(range(ring.rank), k):
            out.add(closure(ring, seeds))
    return out


@pytest.mark.parametrize("ring", [build_ising(), build_cm(4)[0], build_cm(6)[0],
                                  pointed_ring((2, 2)), fermionic_moore_read_ring()])
def test_lattice_is_complete(ring):
    lat = subring_lattice(ring)
    assert {s.simples for s in lat.subrings} == _brute_lattice(ring)


@pytest.mark.parametrize("ring", [build_cm(8)[0], build_cm(12)[0], pointed_ring((2, 4))])
def test_lattice_closed_under_join(ring):
    lat = subring_lattice(ring)
    members = {s.simples for s in lat.subrings}
    for a, b in itertools.combinations(lat.subrings, 2):
        assert closure(ring, a.simples + b.simples) in members


@given(st.sampled_from([4, 6, 8, 12]), st.lists(st.integers(0, 17), min_size=1, max_size=3))
def test_subring_generated_idempotent_and_monotone(M, seeds):
    ring = build_cm(M)[0]
    seeds = [s % ring.rank for s in seeds]
    s = subring_generated(ring, seeds)
    assert subring_generated(ring, s.simples) == s
    assert ring.unit in s
    assert subring_generated(ring, seeds[:1]) <= s
    # closed under products and duals
    for a in s.simples:
        assert ring.dual[a] in s
        for b in s.simples:
            assert set(ring.product(a, b)) <= set(s.simples)


def test_gty_examples():
    rep = gty_structure(build_cm(8)[0])
    assert rep.passes
    assert (rep.n, rep.invertible_count, rep.universal_order) == (4, 8, 8)
    assert rep.transitive and rep.z2_normal and rep.adjoint_rank == 2
    rep = gty_structure(build_ising())
    assert rep.passes and (rep.n, rep.invertible_count) == (1, 2)
    assert not gty_structure(deligne_product(build_ising(), build_ising())).is_gty
    with pytest.raises(ValueError):
        gty_structure(pointed_ring((3,)))


def _gty_family():
    rings = [build_cm(M)[0] for M in (2, 4, 6, 8, 10, 12)]
    rings += [deligne_product(build_cm(4)[0], pointed_ring((3,))),
              deligne_product(build_ising(), pointed_ring((2, 2))),
              deligne_product(build_ising(), build_ising()),
              fermionic_moore_read_ring()]
    return rings


@pytest.mark.parametrize("ring", _gty_family())
def test_gty_iff_dimension_set(ring):
    is_gty = gty_structure(ring).is_gty
    assert is_gty == (cd_set(ring) == {ONE, ROOT2} and not is_pointed(ring))


@pytest.mark.parametrize("ring", _gty_family())
def test_transitivity_agrees_with_brute_orbit(ring):
    rep = gty_structure(ring)
    if not rep.is_gty:
        return
    inv = set(invertibles(ring).elements)
    non = [x for x in range(ring.rank) if x not in inv]
    assert rep.transitive == (brute_orbit(ring, non[0]) == set(non))
