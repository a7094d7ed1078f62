"""Label arithmetic for the bundles: characteristic-class solving,
decomposition matrices, total-space classes, and cohomology."""

import math

import numpy as np
import pytest

from milnor.bundles import (
    TOTAL_SPACE_RESIDUES,
    canonical_solution,
    classify_pair,
    cohomology_report,
    euler_class,
    mayer_vietoris_matrix,
    s7_bundle_class,
    s7_orientation_partner,
    second_label,
    solve_euler,
)
from milnor.errors import ParameterError, ValidationError

RNG = np.random.default_rng(3141)


def brute_force_solutions(k, slack=0):
    """Windowed scan oracle: any solution has |p| <= 2|k| + 1 because the
    two squares are distinct odd squares differing by 8k (equal squares
    only happen at k = 0)."""
    window = 2 * abs(k) + 1 + slack
    out = set()
    for p_minus in range(-window, window + 1):
        if p_minus % 4 != 1:
            continue
        rhs = p_minus * p_minus - 8 * k
        if rhs < 0:
            continue
        root = math.isqrt(rhs)
        if root * root != rhs:
            continue
        for p_plus in {root, -root}:
            if p_plus % 4 == 1:
                out.add((p_minus, p_plus))
    return sorted(out, key=lambda s: (abs(s[0]), abs(s[1]), s[0], s[1]))


def random_label(rng, bound=400):
    while True:
        p = int(rng.integers(-bound, bound))
        if p % 4 == 1:
            return p


def test_euler_class_worked_values():
    assert euler_class(5, -3) == 2
    assert euler_class(-3, 1) == 1
    assert euler_class(29, 1) == 105
    assert euler_class(1, 1) == 0
    with pytest.raises(ValidationError):
        euler_class(3, 1)
    with pytest.raises(ValidationError):
        euler_class(5, 0)


def test_solve_euler_small_worked_sets():
    assert solve_euler(1) == [(-3, 1)]
    assert solve_euler(2) == [(5, -3)]
    assert solve_euler(3) == [(5, 1), (-7, 5)]
    assert solve_euler(-2) == [(-3, 5)]
    assert solve_euler(-3) == [(1, 5), (5, -7)]


def test_solve_euler_k105_printed_list():
    assert solve_euler(105) == [
        (29, 1), (-31, -11), (37, -23), (41, 29),
        (-47, 37), (73, -67), (-107, -103), (-211, 209),
    ]


def test_solve_euler_matches_brute_force_window():
    for k in list(range(-80, 81)) + [105, -105, 256, 500]:
        if k == 0:
            continue
        assert solve_euler(k) == brute_force_solutions(k), k


def test_powers_of_two_have_unique_solutions():
    for t in range(0, 9):
        k = 2 ** t
        sols = solve_euler(k)
        assert len(sols) == 1
        p_minus, p_plus = sols[0]
        assert {abs(p_minus), abs(p_plus)} == {2 * k + 1, abs(2 * k - 1)}
        if k % 2 == 0:
            assert sols[0] == (2 * k + 1, 1 - 2 * k)


def test_zero_euler_number_family():
    assert solve_euler(0, bound=9) == [(1, 1), (-3, -3), (5, 5), (-7, -7), (9, 9)]
    with pytest.raises(ParameterError):
        solve_euler(0)


def test_solutions_flip_with_orientation():
    for k in range(1, 40):
        swapped = sorted(((q, p) for p, q in solve_euler(k)),
                         key=lambda s: (abs(s[0]), abs(s[1]), s[0], s[1]))
        assert solve_euler(-k) == swapped


def test_canonical_solution_branches():
    assert canonical_solution(1) == (-3, 1)
    assert canonical_solution(2) == (5, -3)
    assert canonical_solution(3) == (5, 1)
    assert canonical_solution(0) == (1, 1)
    for k in range(-30, 31):
        sol = canonical_solution(k)
        assert euler_class(*sol) == k
        if k != 0:
            assert sol in solve_euler(k)


def test_second_label_and_pair_classification():
    assert second_label(-3, 5) == 2
    assert classify_pair(5, -3, 1, 5) == (3, 2)
    assert classify_pair(-7, 5, 5, -3) == (3, -2)
    for n in range(-6, 7):
        assert classify_pair(-3, 4 * n + 1, 1, 4 * n + 1) == (1, 0)


def test_mayer_vietoris_determinant_tracks_euler_class():
    for _ in range(2000):
        p_minus = random_label(RNG)
        p_plus = random_label(RNG)
        rep = mayer_vietoris_matrix(p_minus, p_plus)
        k = euler_class(p_minus, p_plus)
        assert rep.det == -8 * k
        assert rep.torsion_order == abs(k)
        mat = np.array(rep.matrix)
        assert mat.shape == (2, 2)
        assert round(float(np.linalg.det(mat))) == rep.det


def test_mayer_vietoris_worked_values():
    assert mayer_vietoris_matrix(5, 1).det == -24
    assert mayer_vietoris_matrix(5, 1).torsion_order == 3
    assert mayer_vietoris_matrix(-3, 1).det == -8
    assert mayer_vietoris_matrix(9, 9).det == 0
    assert mayer_vietoris_matrix(9, 9).torsion_order == 0


def test_s7_class_arithmetic():
    image = {s7_bundle_class(k) for k in range(-200, 201)}
    assert image == set(TOTAL_SPACE_RESIDUES)
    for k in range(-50, 51):
        assert s7_bundle_class(k) == s7_bundle_class(k + 24)
        assert s7_bundle_class(k) == s7_bundle_class(-k - 1)
    # residues outside the achievable set pair with achievable ones under
    # orientation reversal
    complement = set(range(12)) - set(TOTAL_SPACE_RESIDUES)
    assert complement == {2, 5, 8, 11}
    assert {s7_orientation_partner(r) for r in complement} == {10, 7, 4, 1}
    # unoriented count: 3 and 9 merge, every other achievable residue is
    # its own class, leaving seven
    folded = {frozenset({r, s7_orientation_partner(r)} & set(TOTAL_SPACE_RESIDUES))
              for r in TOTAL_SPACE_RESIDUES}
    assert len(folded) == 7


def test_cohomology_principal3():
    rep = cohomology_report("principal3", 4)
    assert rep.group(4) == "Z/4"
    assert rep.group(0) == "Z" and rep.group(7) == "Z"
    rep0 = cohomology_report("principal3", 0)
    assert rep0.group(3) == "Z" and rep0.group(4) == "Z"
    assert any("7-sphere" in n for n in cohomology_report("principal3", 1).notes)
    assert any("unit tangent" in n for n in cohomology_report("principal3", 2).notes)


def test_cohomology_sphere2():
    rep = cohomology_report("sphere2", 3)
    assert rep.group(2) == "Z" and rep.group(4) == "Z" and rep.group(6) == "Z"
    assert "x^2 = 3" in rep.ring_note
    assert any("product" in n for n in cohomology_report("sphere2", 0).notes)
    assert any("complex projective" in n
               for n in cohomology_report("sphere2", -1).notes)


def test_cohomology_sphere3():
    rep = cohomology_report("sphere3", 3, l=-2)
    assert any("7-sphere" in n for n in rep.notes)
    rep2 = cohomology_report("sphere3", 2, l=3)
    assert rep2.group(4) == "Z/5"
    with pytest.raises(ParameterError):
        cohomology_report("sphere3", 2)


def test_cohomology_principal33():
    rep = cohomology_report("principal33", 2, l=4)
    assert rep.group(4) == "Z/2"
    assert rep.group(3) == "Z" and rep.group(10) == "Z"
    rep0 = cohomology_report("principal33", 0, l=0)
    assert rep0.group(3) == "Z^2"
    with pytest.raises(ParameterError):
        cohomology_report("nonsense", 1)
