"""Partition, relabeling-group, and chamber-membership checks."""

import random
from fractions import Fraction

import pytest

from tetravol.cayley_menger import EdgeSubset, f_polynomial
from tetravol.chamber_geometry import (
    A_MID, B_MID, CENTER, EXTREME_A, EXTREME_B, all_relabelings,
    apply_relabel, axis_image, axis_sums, build_partitions,
    cell_description_membership, cell_transporter, certified_chambers,
    chamber_membership, chambers_containing, compose, decorations,
    even_relabelings, extrema, in_cone, invert, midpoint, partition_check,
    relabel_action, relabel_sign, sample_x24, stabilizer,
    verify_barycenter_conditions, vertex_sums,
)

IDENTITY = (1, 2, 3, 4)


def test_extrema_listing():
    named = dict(extrema())
    assert len(named) == 7
    for i, p in EXTREME_A.items():
        assert named["A%d" % i] == p
    for j, p in EXTREME_B.items():
        assert named["B%d" % j] == p


def test_extrema_and_midpoints_are_degenerate():
    f = f_polynomial()
    for _, p in extrema():
        assert f.evaluate(p) == 0
    for p in B_MID.values():
        assert f.evaluate(p) == 0
    for p in A_MID.values():
        assert f.evaluate(p) == -93312


def test_midpoints_are_actual_midpoints():
    assert A_MID[(1, 2)] == midpoint(EXTREME_A[1], EXTREME_A[2])
    assert B_MID[(3, 4)] == midpoint(EXTREME_B[3], EXTREME_B[4])
    with pytest.raises(ValueError):
        midpoint((0,) * 6, (1,) * 6)


def test_extrema_average_to_center():
    acc = [0] * 6
    for _, p in extrema():
        for k in range(6):
            acc[k] += p[k]
    # A-points weight 4, B-points weight 3 in X24
    weighted = [0] * 6
    for i in (1, 2, 3):
        for k in range(6):
            weighted[k] += 4 * EXTREME_A[i][k]
    for j in (1, 2, 3, 4):
        for k in range(6):
            weighted[k] += 3 * EXTREME_B[j][k]
    assert tuple(Fraction(v, 24) for v in weighted) == CENTER


def test_sum_identities():
    for p in [CENTER, EXTREME_A[1], EXTREME_B[2], B_MID[(1, 4)]]:
        assert sum(axis_sums(p)) == sum(p)
        assert sum(vertex_sums(p)) == 2 * sum(p)
    assert axis_sums(CENTER) == (8, 8, 8)
    assert vertex_sums(CENTER) == (12, 12, 12, 12)
    assert axis_sums(EXTREME_A[1]) == (0, 12, 12)


def test_in_cone():
    assert in_cone(CENTER)
    for _, p in extrema():
        assert in_cone(p)
    assert not in_cone((-1, 4, 4, 4, 4, 4))
    # violates a face triangle condition outright
    assert not in_cone((24, 0, 0, 0, 0, 0))


# -- the relabeling group ------------------------------------------------

def test_group_sizes():
    full = all_relabelings()
    assert len(full) == 24
    assert len(set(full)) == 24
    evens = even_relabelings()
    assert len(evens) == 12
    assert all(relabel_sign(s) == 1 for s in evens)
    assert sum(1 for s in full if relabel_sign(s) == -1) == 12


def test_group_axioms():
    full = all_relabelings()
    for s in full:
        assert compose(s, invert(s)) == IDENTITY
        assert compose(invert(s), s) == IDENTITY
    s, t = full[5], full[17]
    p = (1, 2, 3, 4, 5, 6)
    assert apply_relabel(compose(s, t), p) in (
        apply_relabel(s, apply_relabel(t, p)),
        apply_relabel(t, apply_relabel(s, p)),
    )


def test_relabel_action_matches_apply():
    # coordinate k of the source lands in slot perm[k] of the image
    p = (10, 20, 30, 40, 50, 60)
    for s in all_relabelings():
        perm = relabel_action(s)
        out = apply_relabel(s, p)
        assert tuple(out[perm[k]] for k in range(6)) == p


def test_relabel_sign_is_multiplicative():
    full = all_relabelings()
    for s in full[:6]:
        for t in full[10:16]:
            assert relabel_sign(compose(s, t)) == (
                relabel_sign(s) * relabel_sign(t))


def test_axis_image_is_a_permutation():
    for s in all_relabelings():
        assert sorted(axis_image(s)) == [1, 2, 3]


def test_stabilizer_sizes_and_orbit_products():
    expected = {
        "12": 4, "12,13": 2, "12,34": 8, "12,13,14": 6,
        "12,14,23": 2, "12,13,24,34": 8, "12,13,23": 6,
        "12,13,14,23,24,34": 24,
    }
    for spec, size in expected.items():
        beta = EdgeSubset.parse(spec)
        stab = stabilizer(tuple(sorted(beta.indices)))
        assert len(stab) == size
        # orbit-stabilizer over the 24 relabelings
        orbit = set()
        for s in all_relabelings():
            perm = relabel_action(s)
            orbit.add(frozenset(perm[k] for k in beta.indices))
        assert len(orbit) * size == 24
        # every stabilizer element fixes the edge set
        for s in stab:
            perm = relabel_action(s)
            assert {perm[k] for k in beta.indices} == beta.indices


def test_cell_transporter_contract():
    assert cell_transporter(1, 1) == IDENTITY
    seen = set()
    for i in (1, 2, 3):
        for j in (1, 2, 3, 4):
            t = cell_transporter(i, j)
            assert relabel_sign(t) == 1
            assert t[0] == j
            assert axis_image(t)[0] == i
            seen.add(t)
    assert seen == set(even_relabelings())


# -- partitions ----------------------------------------------------------

def test_partition_cell_names():
    parts = build_partitions()
    assert sorted(parts.three) == ["A_1", "A_2", "A_3"]
    assert sorted(parts.four) == ["B_1", "B_2", "B_3", "B_4"]
    assert len(parts.twelve) == 12
    assert len(parts.fortyeight) == 48
    assert len(parts.all_cells()) == 67


def test_volumes_agree_at_every_level():
    parts = build_partitions()
    for cells in (parts.three, parts.four, parts.twelve, parts.fortyeight):
        assert sum(s.volume_scaled() for s in cells.values()) == 147456
        assert all(s.volume_scaled() > 0 for s in cells.values())


def test_simplex_barycentric_roundtrip():
    parts = build_partitions()
    for name in ["A_2", "B_1", "C_31", "D_2412"]:
        cell = parts.all_cells()[name]
        bc = cell.barycenter()
        assert cell.contains(bc)
        lam = cell.barycentric(bc)
        assert sum(lam) == 1
        assert all(w == Fraction(1, 6) for w in lam)
        rebuilt = tuple(
            sum(w * v[k] for w, v in zip(lam, cell.vertices))
            for k in range(6))
        assert rebuilt == bc


def test_simplex_relabeled_preserves_volume():
    parts = build_partitions()
    cell = parts.twelve["C_11"]
    for s in all_relabelings()[:8]:
        image = cell.relabeled(s)
        assert image.volume_scaled() == cell.volume_scaled()
        assert image.vertex_set() == {
            apply_relabel(s, v) for v in cell.vertices}


def test_decorations_biject_with_the_finest_cells():
    decs = decorations()
    assert len(decs) == 48
    assert len({d.id for d in decs}) == 48
    parts = build_partitions()
    names = {parts.simplex_for_decoration(d).name for d in decs}
    assert names == set(parts.fortyeight)


def test_center_lies_in_every_chamber():
    assert len(chambers_containing(CENTER)) == 48
    for d in decorations():
        assert chamber_membership(d, CENTER)


def test_chamber_membership_rejects_points_outside_the_cone():
    with pytest.raises(ValueError):
        chamber_membership(decorations()[0], (-1, 5, 5, 5, 5, 5))


def test_generic_points_land_in_exactly_one_chamber():
    rng = random.Random(11)
    for p in sample_x24(rng, 12):
        assert len(chambers_containing(p)) == 1


def test_membership_agrees_with_cell_descriptions():
    rng = random.Random(5)
    parts = build_partitions()
    decs = decorations()
    for p in sample_x24(rng, 6):
        for d in decs[:10]:
            name = parts.simplex_for_decoration(d).name
            assert chamber_membership(d, p) == (
                cell_description_membership(name, p))


def test_partition_check_small_run():
    out = partition_check(samples=300, seed=3, cross_check=30)
    assert out["ok"] is True
    assert out["misses"] == {
        "three": 0, "four": 0, "twelve": 0, "fortyeight": 0}
    assert out["cross_mismatches"] == 0


def test_barycenter_conditions_report():
    out = verify_barycenter_conditions()
    assert out["face_equality_holds"] is True
    assert out["vertex_tie_holds"] is True
    assert out["extrema_average_to_center"] is True


def test_certified_chamber_counts():
    expected = {
        "12": 12, "12,13": 4, "12,34": 32, "12,13,14": 12,
        "12,14,23": 8, "12,13,24,34": 16, "12,13,23": 36,
        "12,13,14,23,24,34": 48,
    }
    for spec, count in expected.items():
        assert len(certified_chambers(EdgeSubset.parse(spec))) == count


def test_unfriendly_types_have_no_certified_region():
    for spec in ["12,13,14,23", "12,13,14,23,24"]:
        with pytest.raises(ValueError):
            certified_chambers(EdgeSubset.parse(spec))
