from __future__ import annotations

from fractions import Fraction

import pytest

from mlerch.classifier import check_pole_proximity, classify, classify_hurwitz, classify_lerch
from mlerch.core import EvalPoint, Hyperplane, PoleProximityError, TwistParams


def _by_certainty(report, i, certainty, bound=12):
    return [k for k in range(bound + 1) if report.certainty(Hyperplane(i, k)) == certainty]


@pytest.mark.parametrize("depth", [2, 3])
def test_hurwitz_difference_zero(depth):
    rep = classify_hurwitz((0,) * depth)
    assert rep.status == "exact-poles"
    assert _by_certainty(rep, 1, "proven-pole") == [0]
    assert _by_certainty(rep, 2, "removable") == [3, 5, 7, 9, 11]
    assert _by_certainty(rep, 2, "proven-pole") == [0, 1, 2, 4, 6, 8, 10, 12]
    if depth == 3:
        assert _by_certainty(rep, 3, "proven-pole") == list(range(13))


def test_hurwitz_difference_half():
    rep = classify_hurwitz((0, Fraction(1, 2), Fraction(1, 4)))
    assert _by_certainty(rep, 2, "removable") == [1, 3, 5, 7, 9, 11]
    assert _by_certainty(rep, 2, "proven-pole") == [0, 2, 4, 6, 8, 10, 12]


def test_hurwitz_difference_third_has_no_removable_hyperplane():
    rep = classify_hurwitz((Fraction(1, 3), Fraction(2, 3)))
    assert _by_certainty(rep, 2, "proven-pole") == list(range(13))
    assert rep.certainty(Hyperplane(1, 1)) is None


def test_irrational_difference_is_flagged():
    rep = classify_hurwitz((0, 2 ** 0.5 - 1))
    assert all(f.indeterminate for f in rep.families if f.i == 2)


def test_lerch_classification():
    assert classify_lerch(TwistParams((Fraction(1, 3), Fraction(1, 4)), (0, 0))).status == "entire"
    rep = classify(TwistParams((0, Fraction(1, 2), Fraction(1, 2)), (0, 0, 0)))
    assert rep.integer_indices == (1, 3)
    assert rep.certainty(Hyperplane(1, 0)) == "possible"
    assert _by_certainty(rep, 3, "possible", 4) == [1, 2, 3, 4]
    rep = classify(TwistParams((Fraction(1, 2), Fraction(1, 2), 0), (0, 0, 0)))
    assert [(f.i, f.kset.k0) for f in rep.families] == [(2, 1), (3, 1)]


def test_float_twists_use_integer_tolerance():
    rep = classify(TwistParams((0.1, 0.9), (0, 0)))
    assert rep.integer_indices == (2,)


def test_to_dict_lists_values_up_to_bound():
    doc = classify_hurwitz((0, 0)).to_dict(6)
    assert doc["families"][2]["k_values"] == [3, 5]


def test_pole_proximity():
    params = TwistParams.hurwitz((0, 0))
    with pytest.raises(PoleProximityError) as info:
        check_pole_proximity(params, EvalPoint((0.5, 0.5 + 1e-10)), 1e-8)
    assert info.value.hyperplane == Hyperplane(2, 1)
    # H_{2,3} is removable for the double zeta function
    check_pole_proximity(params, EvalPoint((0.5, -1.5)), 1e-8)
