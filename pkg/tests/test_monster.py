from itertools import product

import pytest

from shufflesc import (
    MonsterLetter,
    SizeGuardError,
    Tableau,
    Transformation,
    count_distinguishable,
    distinguishing_letters,
    f_bound,
    is_valid_tableau,
    reachable_tableaux,
    state_complexity_shuffle,
    tableau_step,
)
from shufflesc.monster import all_valid_tableaux, monster_dfa


def T(m, n, cells):
    return Tableau(m, n, cells)


class TestTableau:
    def test_mask_roundtrip(self):
        t = T(3, 4, {(0, 1), (2, 3)})
        assert Tableau.from_mask(3, 4, t.mask) == t

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            T(2, 2, {(2, 0)})

    def test_render(self):
        t = T(2, 2, {(0, 0), (1, 1)})
        assert t.render() == "×.\n.×"

    def test_json(self):
        t = T(2, 3, {(0, 0), (1, 2)})
        assert Tableau.from_json(t.to_json()) == t
        assert t.to_json(depth=2)["depth"] == 2


class TestTableauStep:
    def test_first_step(self, fig1_letters):
        a, _, _ = fig1_letters
        assert tableau_step(T(4, 3, {(0, 0)}), a) == T(4, 3, {(0, 1), (2, 0)})

    def test_detailed_transition(self, fig1_letters):
        _, _, c = fig1_letters
        src = T(4, 3, {(0, 0), (0, 1), (2, 2), (3, 0)})
        dst = T(4, 3, {(0, 2), (2, 0), (2, 1), (3, 0), (3, 2)})
        assert tableau_step(src, c) == dst

    def test_identity_letter(self):
        letter = MonsterLetter(Transformation.identity(3), Transformation.identity(3))
        t = T(3, 3, {(0, 0), (1, 2), (2, 1)})
        assert tableau_step(t, letter) == t

    def test_size_mismatch(self):
        letter = MonsterLetter(Transformation.identity(2), Transformation.identity(2))
        with pytest.raises(ValueError):
            tableau_step(T(3, 3, {(0, 0)}), letter)


class TestValidity:
    def test_examples(self):
        assert is_valid_tableau(T(1, 1, {(0, 0)}))
        assert not is_valid_tableau(T(2, 2, {(1, 1)}))
        assert not is_valid_tableau(T(2, 2, set()))

    def test_all_reachable_are_valid(self):
        for m, n in ((2, 2), (2, 3), (3, 3), (4, 2)):
            reach = reachable_tableaux(m, n)
            assert all(is_valid_tableau(t) for t in reach.depths)

    def test_valid_enumeration_matches_bound(self):
        for m, n in ((1, 1), (2, 2), (2, 3), (3, 3), (2, 4)):
            assert sum(1 for _ in all_valid_tableaux(m, n)) == f_bound(m, n)


class TestFBound:
    def test_known_values(self):
        assert f_bound(1, 1) == 1
        assert f_bound(2, 2) == 10
        assert f_bound(2, 3) == 44
        assert f_bound(3, 3) == 400
        assert f_bound(3, 4) == 3392
        assert f_bound(2, 5) == 752

    def test_symmetry(self):
        for m in range(1, 6):
            for n in range(1, 6):
                assert f_bound(m, n) == f_bound(n, m)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            f_bound(0, 3)


class TestReachability:
    def test_trivial(self):
        reach = reachable_tableaux(1, 1)
        assert reach.count == 1
        assert reach.depths[T(1, 1, {(0, 0)})] == 0

    def test_2x2_exact_set(self):
        reach = reachable_tableaux(2, 2)
        expected = {
            T(2, 2, {(0, 0)}),
            T(2, 2, {(0, 0), (0, 1)}),
            T(2, 2, {(0, 0), (1, 0)}),
            T(2, 2, {(0, 1), (1, 0)}),
            T(2, 2, {(0, 0), (1, 1)}),
            T(2, 2, {(0, 0), (0, 1), (1, 0)}),
            T(2, 2, {(0, 0), (1, 0), (1, 1)}),
            T(2, 2, {(0, 0), (0, 1), (1, 1)}),
            T(2, 2, {(0, 1), (1, 0), (1, 1)}),
            T(2, 2, {(0, 0), (0, 1), (1, 0), (1, 1)}),
        }
        assert set(reach.depths) == expected

    def test_depth_anomaly(self):
        # the diagonal needs two steps, the antidiagonal only one
        reach = reachable_tableaux(2, 2)
        assert reach.depths[T(2, 2, {(0, 0), (1, 1)})] == 2
        assert reach.depths[T(2, 2, {(0, 1), (1, 0)})] == 1

    def test_3x3_count(self):
        assert reachable_tableaux(3, 3).count == 400

    def test_depth_monotone_under_step(self):
        reach = reachable_tableaux(2, 3)
        for t, d in reach.depths.items():
            rows, cols = t.occupied_rows(), t.occupied_cols()
            for f in product(range(2), repeat=len(rows)):
                for g in product(range(3), repeat=len(cols)):
                    letter = MonsterLetter(
                        Transformation.from_map(2, dict(zip(rows, f))),
                        Transformation.from_map(3, dict(zip(cols, g))),
                    )
                    assert reach.depths[tableau_step(t, letter)] <= d + 1

    def test_full_alphabet_agrees(self):
        # independent closure over every whole-grid letter
        for m, n in ((2, 2), (2, 3), (3, 3)):
            seen = {T(m, n, {(0, 0)})}
            frontier = list(seen)
            letters = [
                MonsterLetter(Transformation(f), Transformation(g))
                for f in product(range(m), repeat=m)
                for g in product(range(n), repeat=n)
            ]
            while frontier:
                t = frontier.pop()
                for letter in letters:
                    nt = tableau_step(t, letter)
                    if nt not in seen:
                        seen.add(nt)
                        frontier.append(nt)
            assert seen == set(reachable_tableaux(m, n).depths)

    def test_depth_limit_incomplete(self):
        reach = reachable_tableaux(3, 3, depth_limit=1)
        assert not reach.complete
        assert reach.count < 400
        assert max(reach.depths.values()) == 1

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            reachable_tableaux(5, 5)
        # override on a small case still works
        assert reachable_tableaux(2, 2, max_cells=4).count == 10

    def test_histogram_and_saturation(self):
        reach = reachable_tableaux(2, 2)
        hist = reach.depth_histogram()
        assert sum(hist.values()) == 10
        assert hist[0] == 1
        assert reach.saturation_depth() == 2


class TestDistinguishingLetters:
    def test_2x2_letters(self):
        a, b, c = distinguishing_letters(2, 2)
        assert a.left.images == (1, 0) and a.right.images == (0, 0)
        assert b.left.images == (0, 0) and b.right.images == (1, 0)
        assert c.left.images == (1, 0) and c.right.images == (1, 1)

    def test_kronecker_left_component(self):
        _, _, c = distinguishing_letters(4, 3)
        assert c.left.images == (1, 0, 0, 0)
        assert c.right.images == (2, 2, 2)

    def test_requires_two_states(self):
        with pytest.raises(ValueError):
            distinguishing_letters(1, 3)

    def test_three_letters_distinguish_everything(self):
        for m, n in ((2, 2), (2, 3), (3, 2)):
            res = count_distinguishable(m, n, distinguishing_letters(m, n))
            assert res.value == res.reachable_count == f_bound(m, n)


class TestStateComplexity:
    def test_trivial(self):
        assert state_complexity_shuffle(1, 1).value == 1

    def test_2x2(self):
        res = state_complexity_shuffle(2, 2)
        assert res.value == 10
        assert res.reachable_count == 10
        f1, f2 = res.witness()
        assert f1 and f2
        assert all(fa and fb for fa, fb in res.maximizers)

    def test_2x3_and_symmetry(self):
        assert state_complexity_shuffle(2, 3).value == 44
        assert state_complexity_shuffle(3, 2).value == 44

    def test_never_exceeds_bound(self):
        for m, n in ((1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2)):
            res = state_complexity_shuffle(m, n)
            assert res.value <= f_bound(m, n)

    def test_bound_tight_with_two_plus_states(self):
        for m, n in ((2, 2), (2, 3), (3, 2), (2, 4)):
            assert state_complexity_shuffle(m, n).value == f_bound(m, n)

    def test_bound_not_tight_with_a_single_state_side(self):
        # with one state on the left the only usable final set is {0}: all
        # valid tableaux stay reachable but stop being pairwise
        # distinguishable, and the complexity drops to 2^(n-2) + 1
        for n in (3, 4, 5):
            res = state_complexity_shuffle(1, n)
            assert res.reachable_count == f_bound(1, n)
            assert res.value == (1 << (n - 2)) + 1 < f_bound(1, n)

    def test_guard(self):
        with pytest.raises(SizeGuardError):
            state_complexity_shuffle(4, 4)


class TestMonsterDfa:
    def test_sides_act_independently(self, fig1_letters):
        letters = list(fig1_letters)
        k = monster_dfa(4, {3}, letters, "left")
        l = monster_dfa(3, {2}, letters, "right")
        a = letters[0]
        assert k.delta[(0, a)] == a.left(0)
        assert l.delta[(0, a)] == a.right(0)

    def test_size_mismatch(self, fig1_letters):
        with pytest.raises(ValueError):
            monster_dfa(5, {0}, list(fig1_letters), "left")

    def test_minimized_shuffle_matches_tableau_count(self):
        # classical pipeline (shuffle NFA, subset construction, minimization)
        # against the tableau machinery, over the full letter set and the
        # maximizing final sets
        from shufflesc import determinize, minimize, shuffle_nfa

        for m, n in ((2, 2), (2, 3)):
            res = state_complexity_shuffle(m, n)
            f1, f2 = res.witness()
            letters = [
                MonsterLetter(Transformation(f), Transformation(g))
                for f in product(range(m), repeat=m)
                for g in product(range(n), repeat=n)
            ]
            k = monster_dfa(m, f1, letters, "left")
            l = monster_dfa(n, f2, letters, "right")
            minimal = minimize(determinize(shuffle_nfa(k, l)))
            assert minimal.state_count == res.value == f_bound(m, n)
