"""Golden negativity witnesses and their independent re-verification."""

import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from tetravol.anti_certification import (
    ASSERTED_BETAS, Witness, anti_certify, barycentric_sample,
    excluded_chambers, f_value_bordered, full_k4_campaign, g_value_stencil,
    read_witnesses, snap_point, verify_witness, write_witnesses,
)
from tetravol.cayley_menger import EdgeSubset, directional_derivative, \
    f_polynomial
from tetravol.chamber_geometry import build_partitions, certified_chambers

int_points = st.tuples(*[st.integers(-40, 40) for _ in range(6)])


@given(int_points)
@settings(max_examples=60)
def test_bordered_determinant_matches_the_polynomial(pt):
    assert f_value_bordered(pt) == f_polynomial().evaluate(pt)


@given(int_points)
@settings(max_examples=25, deadline=None)
def test_stencil_matches_the_polynomial_derivative(pt):
    for spec in ("12", "12,13,24,34"):
        g = directional_derivative(EdgeSubset.parse(spec))
        assert g_value_stencil(pt, spec) == g.evaluate(pt)


def test_excluded_plus_certified_cover_all_chambers():
    for spec in ASSERTED_BETAS:
        beta = EdgeSubset.parse(spec)
        cert = {d.id for d in certified_chambers(beta)}
        excl = {d.id for d in excluded_chambers(beta)}
        assert not cert & excl
        assert len(cert) + len(excl) == 48


def test_witness_file_has_one_entry_per_excluded_chamber():
    ws = read_witnesses()
    assert len(ws) == 216
    counts = Counter(w.beta for w in ws)
    assert counts == {
        "12": 36, "12,13": 44, "12,34": 16, "12,13,14": 36,
        "12,14,23": 40, "12,13,24,34": 32, "12,13,23": 12,
    }
    for spec in ASSERTED_BETAS:
        if spec == "12,13,14,23,24,34":
            continue
        chamber_ids = {w.chamber for w in ws if w.beta == spec}
        expected = {d.id for d in
                    excluded_chambers(EdgeSubset.parse(spec))}
        assert chamber_ids == expected


def test_every_golden_witness_reverifies():
    ws = read_witnesses()
    assert all(min(w.f_value, w.g_value) < 0 for w in ws)
    assert all(verify_witness(w) for w in ws)


def test_witness_line_roundtrip():
    ws = read_witnesses()
    for w in ws[::37]:
        assert Witness.parse(w.line()) == w
    with pytest.raises(ValueError):
        Witness.parse("only three fields")


def test_tampered_witness_fails_verification():
    w = read_witnesses()[0]
    bad = Witness(w.beta, w.chamber, w.point, w.f_value + 1, w.g_value,
                  w.seed)
    assert not verify_witness(bad)


def test_write_read_roundtrip(tmp_path):
    ws = read_witnesses()[:5]
    path = tmp_path / "w.txt"
    write_witnesses(path, ws)
    assert read_witnesses(path) == ws


def test_anti_certify_is_deterministic():
    beta = EdgeSubset.parse("12,13")
    chamber = excluded_chambers(beta)[0]
    a = anti_certify(chamber, beta, trials=500, seed=4)
    b = anti_certify(chamber, beta, trials=500, seed=4)
    assert a is not None
    assert a == b
    assert a.chamber == chamber.id
    assert min(a.f_value, a.g_value) < 0
    assert verify_witness(a)


def test_anti_certify_finds_nothing_on_a_certified_chamber():
    beta = EdgeSubset.parse("12")
    chamber = certified_chambers(beta)[0]
    assert anti_certify(chamber, beta, trials=300, seed=1) is None


def test_small_campaign_comes_back_empty():
    ws, hits = full_k4_campaign(trials=400, seed=9)
    assert ws == []
    assert hits == 0
    again = full_k4_campaign(trials=400, seed=9)
    assert again == (ws, hits)


def test_sampling_helpers():
    rng = random.Random(3)
    lam = barycentric_sample(rng)
    assert len(lam) == 6
    assert all(v >= 0 for v in lam)
    assert abs(sum(lam) - 1.0) < 1e-9
    cell = build_partitions().fortyeight["D_1111"]
    pt = snap_point(lam, cell.vertices, snap=1000)
    assert all(isinstance(v, int) for v in pt)
    # snapped numerators stay within the scaled hull bounds
    assert all(0 <= v <= 8 * 1000 for v in pt)
