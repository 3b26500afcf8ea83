import json

import pytest
from hypothesis import given, strategies as st

from fusionkit import (FusionRing, MalformedRingError, build_cm, build_ising, deligne_product,
                       fp_dims, is_isomorphism, load_ring, pointed_ring, ring_isomorphic,
                       save_ring, trivial_ring, validate_ring)
from conftest import brute_associative, coeff_table


def _ising_json():
    return build_ising().to_json()


def test_ising_is_valid():
    ring = build_ising()
    assert ring.labels == ("1", "δ", "Z")
    assert ring.product(2, 2) == {0: 1, 1: 1}
    assert validate_ring(ring).ok


def test_trivial_ring_is_valid():
    assert validate_ring(trivial_ring()).ok
    assert trivial_ring().rank == 1


def test_doubling_delta_in_z_squared_breaks_associativity():
    data = _ising_json()
    for entry in data["coeffs"]:
        if entry[:3] == [2, 2, 1]:
            entry[3] = 2
    rep = validate_ring(data)
    assert not rep.malformed
    assert any(v.startswith("associativity") for v in rep.violations)
    assert not brute_associative(FusionRing.from_json(data))


def test_malformed_input_is_reported_separately():
    data = _ising_json()
    data["coeffs"].append([0, 1, 7, 1])
    rep = validate_ring(data)
    assert rep.malformed and not rep.violations
    data = _ising_json()
    data["coeffs"][0][3] = -1
    assert validate_ring(data).malformed
    with pytest.raises(MalformedRingError):
        FusionRing(["1"], 0, [3], [])


def test_axiom_failures_are_named():
    data = _ising_json()
    data["dual"] = [0, 2, 1]
    kinds = {v.split(":")[0] for v in validate_ring(data).violations}
    assert "involution" in kinds or "rigidity" in kinds
    data = _ising_json()
    data["coeffs"] = [c for c in data["coeffs"] if c[:2] != [0, 1]]
    assert any(v.startswith("unit") for v in validate_ring(data).violations)


@pytest.mark.parametrize("ring", [build_ising(), build_cm(4)[0], pointed_ring((2, 2)),
                                  deligne_product(build_ising(), pointed_ring((2,)))])
def test_validation_agrees_with_brute_force(ring):
    assert validate_ring(ring).ok == brute_associative(ring) is True


def test_sparse_and_dense_associativity_routes_agree():
    # rank 72 goes through the sparse route, rank 12 through the dense one
    big = build_cm(48)[0]
    assert validate_ring(big).ok
    data = big.to_json()
    data["coeffs"][123][3] += 1
    assert any(v.startswith("associativity") for v in validate_ring(data).violations)


def test_json_roundtrip(tmp_path):
    ring = build_cm(6)[0]
    path = tmp_path / "c6.fring.json"
    save_ring(ring, path)
    raw = json.loads(path.read_text())
    assert set(raw) >= {"rank", "labels", "unit", "dual", "coeffs"}
    assert raw["rank"] == 9
    back = load_ring(path)
    assert back == ring
    assert coeff_table(back) == coeff_table(ring)


def test_json_omitted_triples_are_zero():
    ring = FusionRing.from_json({"rank": 2, "labels": ["1", "g"], "unit": 0, "dual": [0, 1],
                                 "coeffs": [[0, 0, 0, 1], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]]})
    assert ring.coeff(1, 1, 1) == 0
    assert validate_ring(ring).ok


def test_deligne_product_examples():
    prod = deligne_product(build_ising(), pointed_ring((2,)))
    assert prod.rank == 6
    assert fp_dims(prod).total.value == pytest.approx(8)
    assert str(fp_dims(prod).total) == "8"
    # R x trivial is R
    r = build_cm(4)[0]
    assert is_isomorphism(deligne_product(r, trivial_ring()), r, list(range(r.rank)))


def test_c8_is_the_closure_of_z_times_1():
    from fusionkit import subring_generated
    big = deligne_product(build_ising(), pointed_ring((8,)))
    z1 = big.index("Z⊠1")
    sub = subring_generated(big, [z1])
    assert sub.rank == 12
    assert ring_isomorphic(sub.as_ring(), build_cm(8)[0]) is not None


@given(st.lists(st.integers(1, 4), min_size=1, max_size=2), st.lists(st.integers(1, 4), min_size=1, max_size=2))
def test_product_dimensions_multiply(m1, m2):
    r1 = deligne_product(build_ising(), pointed_ring(m1))
    r2 = pointed_ring(m2)
    prod = deligne_product(r1, r2)
    assert validate_ring(prod).ok
    assert fp_dims(prod).total == fp_dims(r1).total * fp_dims(r2).total


def test_valid_mutation_changes_the_class():
    # Z*Z = 1 + delta + Z is the Rep(S_3) table: a different, valid ring
    data = _ising_json()
    data["coeffs"].append([2, 2, 2, 1])
    assert validate_ring(data).ok
    mutant = FusionRing.from_json(data)
    assert brute_associative(mutant)
    assert ring_isomorphic(mutant, build_ising()) is None
    assert str(fp_dims(mutant).dims[2]) == "2"
