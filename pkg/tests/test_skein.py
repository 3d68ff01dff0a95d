"""Conway/Jones skein engine and the independent bracket oracle."""

from fractions import Fraction

import pytest

from knotforge.diagram import PDDiagram, parse_pd
from knotforge.laurent import LaurentPoly
from knotforge.skein import (
    BRACKET_ORACLE_BUDGET,
    CrossingBudgetExceeded,
    SkeinMemo,
    conway,
    jones,
    jones_bracket_oracle,
)

from conftest import random_planar_diagrams

F = Fraction
ONE = LaurentPoly.one()
Z = LaurentPoly.monomial(1, 1)
V_L0 = LaurentPoly.from_exponents(
    {-1: 1, -2: -1, -3: 2, -4: -1, -5: 1, -6: -1})
TILDE_V = LaurentPoly.from_exponents(
    {-1: 2, -2: -3, -3: 3, -4: -3, -5: 2, -6: -2, -7: 1})
T_INV = LaurentPoly.monomial(1, -1)
DELTA = LaurentPoly.from_exponents({F(1, 2): 1, F(-1, 2): -1})
LOOP = LaurentPoly.from_exponents({F(1, 2): 1, F(-1, 2): 1})


class TestConway:
    def test_unknot(self):
        assert conway(parse_pd("loops=1")) == ONE

    def test_5_2(self, table):
        assert conway(table.diagram("5_2")) == LaurentPoly.from_exponents({0: 1, 2: 2})

    def test_l7n2(self, table):
        assert conway(table.diagram("L7n2")) == LaurentPoly.monomial(1, 3)

    def test_positive_hopf(self, table):
        assert conway(table.diagram("hopf+")) == -Z

    def test_split_links_vanish(self):
        split = PDDiagram(parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").crossings,
                          free_loops=1)
        assert conway(split).is_zero
        assert conway(PDDiagram((), free_loops=3)).is_zero

    def test_trefoil(self):
        d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
        assert conway(d) == LaurentPoly.from_exponents({0: 1, 2: 1})


class TestJones:
    def test_unknot(self):
        assert jones(parse_pd("loops=1")) == ONE

    def test_5_2(self, table):
        assert jones(table.diagram("5_2")) == V_L0

    def test_j0_tilde_identity(self, table):
        v_j0 = jones(table.diagram("L7n2"))
        assert T_INV * DELTA * v_j0 == TILDE_V

    def test_two_component_unlink(self):
        # the engine's convention makes the skein relation of the source
        # give +(t^(1/2) + t^(-1/2)) here; pinned by the Vt identity above
        assert jones(PDDiagram((), free_loops=2)) == LOOP
        # unlink diagram with crossings: hopf with one crossing switched
        u2 = parse_pd("X(4,1,3,2) X(2,3,1,4)").switch_crossing(0)
        assert jones(u2) == LOOP

    def test_k_unlink_power_law(self):
        for k in range(1, 6):
            assert jones(PDDiagram((), free_loops=k)) == LOOP ** (k - 1)

    def test_knots_are_integral(self):
        for d in random_planar_diagrams(seed=31, count=60, max_crossings=10):
            v = jones(d)
            if d.component_count() == 1:
                assert v.is_integral

    def test_moment_constraints_on_knots(self):
        # V(K, t=1) = 1 (moment 0) and first moment 0 for every knot
        for d in random_planar_diagrams(seed=37, count=60, max_crossings=10):
            if d.component_count() != 1:
                continue
            v = jones(d)
            assert v.moment(0) == 1
            assert v.moment(1) == 0


class TestSkeinIdentities:
    def test_conway_relation_at_every_crossing(self):
        for d in random_planar_diagrams(seed=41, count=30, max_crossings=9):
            for i in range(d.n_crossings):
                plus = d if d.crossing_sign(i) > 0 else d.switch_crossing(i)
                minus = d if d.crossing_sign(i) < 0 else d.switch_crossing(i)
                zero = d.smooth_crossing(i)
                assert conway(plus) - conway(minus) + Z * conway(zero) \
                    == LaurentPoly.zero()

    def test_jones_relation_at_every_crossing(self):
        t = LaurentPoly.monomial(1, 1)
        for d in random_planar_diagrams(seed=43, count=30, max_crossings=9):
            for i in range(d.n_crossings):
                plus = d if d.crossing_sign(i) > 0 else d.switch_crossing(i)
                minus = d if d.crossing_sign(i) < 0 else d.switch_crossing(i)
                zero = d.smooth_crossing(i)
                assert t * jones(plus) - T_INV * jones(minus) \
                    == DELTA * jones(zero)

    def test_relabeling_invariance(self, table):
        # rotating the base edge of a component leaves the values unchanged
        d = table.diagram("5_2")
        n_edges = 2 * d.n_crossings
        for shift in (1, 3, 7):
            relab = [tuple((e - 1 + shift) % n_edges + 1 for e in x)
                     for x in d.crossings]
            rotated = PDDiagram(relab)
            assert conway(rotated) == conway(d)
            assert jones(rotated) == jones(d)


class TestOracle:
    def test_unknot(self):
        assert jones_bracket_oracle(parse_pd("loops=1")) == ONE

    def test_5_2(self, table):
        d = table.diagram("5_2")
        assert jones_bracket_oracle(d) == jones(d) == V_L0

    def test_every_table_entry(self, table):
        for name in table.names():
            d = table.diagram(name)
            assert jones_bracket_oracle(d) == jones(d), name

    def test_table_mirrors(self, table):
        for name in table.names():
            d = table.diagram(name).mirror()
            assert jones_bracket_oracle(d) == jones(d), name

    def test_200_random_diagrams(self):
        for d in random_planar_diagrams(seed=47, count=200, max_crossings=10):
            assert jones_bracket_oracle(d) == jones(d), d.render()

    def test_budget(self, table):
        d = table.diagram("5_2")
        while d.n_crossings <= BRACKET_ORACLE_BUDGET:
            d = d.insert_full_twists((1, 4), 1)
        with pytest.raises(CrossingBudgetExceeded):
            jones_bracket_oracle(d)


class TestBudgetAndMemo:
    def test_crossing_budget_exceeded(self, table):
        d = table.diagram("5_2")
        while d.n_crossings <= 24:
            d = d.insert_full_twists((1, 4), 1)
        with pytest.raises(CrossingBudgetExceeded):
            conway(d)
        with pytest.raises(CrossingBudgetExceeded):
            jones(d)
        # a raised budget lets a slightly oversized diagram through
        small = table.diagram("5_2").insert_full_twists((1, 4), 10)
        assert small.n_crossings == 25
        assert conway(small, budget=25) is not None

    def test_memo_is_hit_and_consistent(self, table):
        memo = SkeinMemo()
        v1 = jones(table.diagram("9_45"), memo=memo)
        misses_first = memo.misses
        v2 = jones(table.diagram("9_45"), memo=memo)
        assert v1 == v2
        assert memo.hits > 0
        assert memo.misses == misses_first  # second run fully cached

    def test_memo_rejects_value_collision(self):
        memo = SkeinMemo()
        memo.put("k", ONE)
        memo.put("k", ONE)  # same value is fine
        with pytest.raises(AssertionError):
            memo.put("k", Z)

    def test_mirror_conjugates_jones(self, table):
        for name in ("trefoil", "5_2", "9_45"):
            d = table.diagram(name)
            assert jones(d.mirror()) == jones(d).reciprocal_variable()
