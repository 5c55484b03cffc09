import pytest

from vbraid.braidword import parse_word
from vbraid.errors import (
    FlavorError,
    GaussSyntaxError,
    LabelCountError,
    NotAKnotError,
)
from vbraid.gauss import (
    GaussCode,
    closure_code,
    closure_permutation,
    parse_gauss,
    render_gauss,
)
from vbraid.perm import Permutation


class TestParse:
    def test_trefoil(self):
        code = parse_gauss("O1U2O3U1O2U3")
        assert code.visits == (
            ("O", 1),
            ("U", 2),
            ("O", 3),
            ("U", 1),
            ("O", 2),
            ("U", 3),
        )
        assert code.crossings == 3

    def test_whitespace_ignored(self):
        assert parse_gauss("O1 U1") == parse_gauss("O1U1")

    def test_empty(self):
        assert parse_gauss("").visits == ()

    def test_bad_token(self):
        with pytest.raises(GaussSyntaxError):
            parse_gauss("O1X2")

    def test_label_seen_twice_as_over(self):
        with pytest.raises(LabelCountError):
            parse_gauss("O1O1")

    def test_unbalanced_label(self):
        with pytest.raises(LabelCountError):
            parse_gauss("O1U1O2")

    def test_labels_must_be_dense(self):
        with pytest.raises(LabelCountError):
            parse_gauss("O1U1O3U3")

    def test_labels_must_follow_first_visit_order(self):
        with pytest.raises(LabelCountError):
            parse_gauss("O2U1O1U2")

    def test_render_round_trip(self):
        text = "O1U2O3U1O2U3"
        assert render_gauss(parse_gauss(text)) == text


class TestRotation:
    def test_rotations_are_canonical(self):
        code = parse_gauss("O1U2O3U1O2U3")
        for rot in code.rotations():
            # every rotation is itself a valid canonical code
            assert GaussCode(rot.visits) == rot

    def test_equality_up_to_rotation(self):
        code = parse_gauss("O1U2O3U1O2U3")
        # rotate by one visit: U.O.U.O.U.O relabeled in first-visit order
        rotated = parse_gauss("U1O2U3O1U2O3")
        assert code.equals_up_to_rotation(rotated)

    def test_inequality(self):
        trefoil = parse_gauss("O1U2O3U1O2U3")
        figure_like = parse_gauss("O1U2O2U1")
        assert not trefoil.equals_up_to_rotation(figure_like)


class TestClosurePermutation:
    def test_virtual_letters_count(self):
        w = parse_word("z1 s2", "vb", 3)
        assert closure_permutation(w) == Permutation([3, 1, 2])

    def test_exponent_blind(self):
        w = parse_word("s1^-1", "vb", 2)
        assert closure_permutation(w) == Permutation([2, 1])


class TestClosureCode:
    def test_trefoil(self):
        w = parse_word("s1 s1 s1", "vb", 2)
        expected = parse_gauss("O1U2O3U1O2U3")
        assert closure_code(w).equals_up_to_rotation(expected)

    def test_single_crossing(self):
        assert closure_code(parse_word("s1", "vb", 2)) == parse_gauss("O1U1")

    def test_negative_crossing_swaps_passages(self):
        assert closure_code(parse_word("s1^-1", "vb", 2)) == parse_gauss("U1O1")

    def test_virtual_crossings_not_recorded(self):
        # z1 s1 z1 closes to a knot whose only recorded crossing is classical
        w = parse_word("s1 z1 s1", "vb", 2)
        code = closure_code(w)
        assert code.crossings == 2

    def test_unknot_with_virtual_only(self):
        w = parse_word("z1", "vb", 2)
        assert closure_code(w).visits == ()

    def test_multi_component_rejected(self):
        with pytest.raises(NotAKnotError):
            closure_code(parse_word("s1 s1", "vb", 2))
        with pytest.raises(NotAKnotError):
            closure_code(parse_word("", "vb", 2))

    def test_monoid_flavor_rejected(self):
        with pytest.raises(FlavorError):
            closure_code(parse_word("a1", "sb", 2))

    def test_each_crossing_visited_over_and_under(self):
        w = parse_word("s1 s2 s1 z2", "vb", 3)
        code = closure_code(w)
        # validated by construction: would raise otherwise; also check count
        s_letters = sum(1 for lt in w.letters if lt.kind == "s")
        assert code.crossings == s_letters
