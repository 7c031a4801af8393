from fractions import Fraction

import pytest

from avgconn.bounds import BOUNDS, bound_ids, check_bound, eval_bound
from avgconn.families import mobius_ladder, snake
from avgconn.search import search_exhaustive, search_local


class TestEvalBound:
    def test_odd_regular_values(self):
        assert eval_bound("odd_regular_upper", r=3, n=14) == Fraction(33, 26)
        assert eval_bound("odd_regular_upper", r=3, n=8) == Fraction(9, 7)
        assert eval_bound("odd_regular_upper", r=3, n=6) == Fraction(13, 10)

    def test_even_r_rejected(self):
        with pytest.raises(ValueError, match="odd"):
            eval_bound("odd_regular_upper", r=4, n=10)

    def test_min2conn_upper(self):
        assert eval_bound("min2conn_upper", n=9) == Fraction(9, 8)
        for n in range(3, 200):
            assert eval_bound("min2conn_upper", n=n) < Fraction(5, 4)

    def test_inflation_formula(self):
        assert eval_bound("inflation_formula", n=4, kbm=Fraction(4, 3)) == Fraction(13, 11)
        assert eval_bound("inflation_formula", n=12, kbm=Fraction(13, 11)) == Fraction(23, 21)

    def test_two_tree_lower(self):
        assert eval_bound("two_tree_lower", n=4) == Fraction(13, 12)

    def test_star_formula(self):
        assert eval_bound("star_formula", n=5) == Fraction(2, 5)
        assert eval_bound("star_formula", n=4) == Fraction(5, 12)

    def test_tree_interval(self):
        assert eval_bound("tree_bounds_lower", n=5) == Fraction(2, 9)
        assert eval_bound("tree_bounds_upper", n=5) == Fraction(1, 2)

    def test_snake_value(self):
        assert eval_bound("snake_value", n=3) == Fraction(6, 5)

    def test_mop_bounds(self):
        assert eval_bound("mop_average", n=6) == Fraction(11, 5)
        assert eval_bound("mop_upper", n=5) == Fraction(3, 2)

    def test_subdivision_identity(self):
        assert eval_bound("subdivision_identity", n=4, m=6, K=18) == 96

    def test_general_upper(self):
        assert eval_bound("general_upper", n=5) == 2

    def test_unknown_id(self):
        with pytest.raises(ValueError, match="unknown bound id"):
            eval_bound("no_such_bound", n=3)

    def test_missing_params(self):
        with pytest.raises(ValueError, match="missing"):
            eval_bound("odd_regular_upper", n=8)

    def test_catalog_consistency(self):
        for n in range(4, 101):
            assert eval_bound("two_tree_lower", n=n) <= eval_bound("mop_upper", n=n)

    def test_all_values_are_rational(self):
        assert all(isinstance(eval_bound("mop_upper", n=n), Fraction) for n in (3, 7, 50))


class TestCheckBound:
    def test_tight_on_mobius_ladder(self):
        r = search_exhaustive(mobius_ladder(6))
        v = check_bound("odd_regular_upper", r, graph=mobius_ladder(6))
        assert v.holds and v.tight
        assert v.relation == "<=" and v.certified_inputs is True

    def test_not_tight(self):
        v = check_bound("mop_upper", Fraction(6, 5), graph=snake(3))
        assert v.holds and not v.tight

    def test_uncertified_recorded(self):
        r = search_local(mobius_ladder(6), seed=0, restarts=2, max_plateau=10)
        v = check_bound("odd_regular_upper", r, graph=mobius_ladder(6))
        assert v.certified_inputs is False

    def test_strict_relation_never_tight(self):
        v = check_bound("min2conn_ratio_upper", Fraction(5, 8))
        assert not v.holds  # strict: equality fails
        assert not v.tight  # tightness suppressed for the ratio interval
        v = check_bound("min2conn_ratio_lower", Fraction(1, 2))
        assert v.holds and not v.tight

    def test_equality_relation(self):
        v = check_bound("snake_value", Fraction(6, 5), graph=snake(3))
        assert v.holds and v.tight
        v = check_bound("snake_value", Fraction(1, 1), graph=snake(3))
        assert not v.holds

    def test_conjecture_flagged(self):
        v = check_bound("mop_lower_conjecture", Fraction(13, 12))
        assert v.conjecture and v.holds

    def test_kbm_search_result_input(self):
        base = search_exhaustive(mobius_ladder(6))
        v = check_bound(
            "inflation_formula",
            eval_bound("inflation_formula", n=6, kbm=base.best_average),
            n=6,
            kbm=base,
        )
        assert v.holds and v.tight and v.certified_inputs is True

    def test_json_shape(self):
        v = check_bound("general_upper", Fraction(1, 1), n=5)
        js = v.to_json_dict()
        assert js["bound_value"] == {"num": 2, "den": 1}
        assert js["holds"] is True and js["tight"] is False
        assert "conjecture" not in js

    def test_regularity_required_for_derivation(self):
        with pytest.raises(ValueError, match="regular"):
            check_bound("odd_regular_upper", Fraction(1), graph=snake(3))


def test_bound_ids_sorted_and_complete():
    ids = bound_ids()
    assert ids == sorted(BOUNDS)
    for required in (
        "tree_bounds_lower",
        "tree_bounds_upper",
        "star_formula",
        "general_upper",
        "odd_regular_upper",
        "inflation_formula",
        "min2conn_upper",
        "min2conn_ratio_lower",
        "min2conn_ratio_upper",
        "subdivision_identity",
        "mop_average",
        "mop_upper",
        "snake_value",
        "two_tree_lower",
        "edge_ratio_upper",
        "edge_ratio_lower_2ec",
    ):
        assert required in ids
