import pytest
from hypothesis import given, settings, strategies as st

from smzv.shapes import (FamilySpec, IndexOutOfRange, NotCheckerboardable,
                         Partition, SkewShape, Tableau, checkerboard_fill,
                         corner_parity, family_shape, glue_h, glue_v,
                         is_checkerboardable, is_ribbon, iter_skew_shapes,
                         make_family, ribbon_walk, staircase)

ALL_SHAPES_7 = list(iter_skew_shapes(7))


def shapes_strategy(max_cells=7):
    return st.sampled_from(ALL_SHAPES_7)


class TestPartition:
    def test_basic(self):
        p = Partition((5, 4, 3))
        assert p.weight == 12
        assert p.part(1) == 5 and p.part(4) == 0

    def test_strips_trailing_zeros(self):
        assert Partition((2, 1, 0, 0)) == Partition((2, 1))

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Partition((2, -1))

    def test_conjugate(self):
        assert Partition((5, 4, 3)).conjugate() == Partition((3, 3, 3, 2, 1))
        assert Partition().conjugate() == Partition()

    def test_staircase(self):
        assert staircase(3) == Partition((3, 2, 1))
        assert staircase(0) == Partition()
        assert staircase(-1) == Partition()


class TestSkewShape:
    def test_cells(self):
        s = SkewShape((5, 4, 3), (3, 1))
        assert s.n_cells == 8
        assert (1, 4) in s.cells and (1, 3) not in s.cells
        assert s.top_right == (1, 5) and s.bottom_left == (3, 1)

    def test_strict_containment_enforced(self):
        with pytest.raises(ValueError):
            SkewShape((2, 2), (2,))
        with pytest.raises(ValueError):
            SkewShape((2,), (1, 1))

    def test_conjugate_example(self):
        s = SkewShape((5, 4, 3), (3, 1))
        assert s.conjugate() == SkewShape((3, 3, 3, 2, 1), (2, 1, 1))

    def test_corners_example(self):
        s = SkewShape((5, 4, 3), (3, 1))
        assert s.corners() == frozenset({(1, 5), (2, 4), (3, 3)})

    def test_corners_trivial(self):
        assert SkewShape((1,)).corners() == frozenset({(1, 1)})
        assert SkewShape((4,)).corners() == frozenset({(1, 4)})

    def test_from_cells_roundtrip(self):
        s = SkewShape((5, 4, 3), (3, 1))
        assert SkewShape.from_cells(s.cells) == s

    def test_from_cells_rejects_bad(self):
        with pytest.raises(ValueError):
            SkewShape.from_cells({(1, 1), (1, 3)})  # gap in a row

    def test_empty(self):
        e = SkewShape.empty()
        assert e.is_empty and e.n_cells == 0
        assert e.conjugate() is e

    @given(shapes_strategy())
    def test_conjugate_involution(self, s):
        assert s.conjugate().conjugate() == s
        assert s.conjugate().n_cells == s.n_cells

    @given(shapes_strategy())
    def test_conjugate_maps_corners(self, s):
        transposed = {(j, i) for (i, j) in s.corners()}
        assert s.conjugate().corners() == transposed


class TestCheckerboard:
    def test_square_2x2(self):
        t = checkerboard_fill(SkewShape((2, 2)), 1, 3)
        assert t.rows() == [[3, 1], [1, 3]]
        assert t.admissible() and t.diagonal_constant()

    def test_not_checkerboardable(self):
        with pytest.raises(NotCheckerboardable):
            checkerboard_fill(SkewShape((3, 1)), 1, 3)

    def test_equal_entries_any_shape(self):
        t = checkerboard_fill(SkewShape((3, 1)), 2, 2)
        assert all(v == 2 for v in t.entries.values())

    def test_hook_parity_rule(self):
        for m in range(2, 6):
            for n in range(1, 6):
                hook = SkewShape((m,) + (1,) * n)
                assert is_checkerboardable(hook) == ((m - n) % 2 == 1)
                if (m - n) % 2 == 1:
                    make_family(FamilySpec("hook", (m, n), (1, 3)))
                else:
                    with pytest.raises(NotCheckerboardable):
                        make_family(FamilySpec("hook", (m, n), (1, 3)))
        # m = 1 degenerates to a single column: one corner, always fillable
        assert is_checkerboardable(SkewShape((1, 1)))

    def test_validates_fill(self):
        with pytest.raises(ValueError):
            checkerboard_fill(SkewShape((2, 2)), 0, 3)
        with pytest.raises(ValueError):
            checkerboard_fill(SkewShape((2, 2)), 1, 1)

    def test_uniqueness(self):
        # among the two alternating patterns, exactly one puts b on corners
        for s in iter_skew_shapes(6):
            if not is_checkerboardable(s):
                continue
            a, b = 2, 5
            candidates = []
            for parity in (0, 1):
                fill = {(i, j): (b if (j - i) % 2 == parity else a) for (i, j) in s.cells}
                if all(fill[c] == b for c in s.corners()):
                    candidates.append(fill)
            assert len(candidates) == 1
            assert candidates[0] == checkerboard_fill(s, a, b).entries

    def test_family_corner_parity_uniform(self):
        specs = [("A", (3,)), ("B", (2,)), ("L", (2,)), ("Lstar", (2,)),
                 ("S", (3,)), ("Sstar", (3,)), ("hook", (4, 3)),
                 ("antihook", (3, 2)), ("stair", (5, (2, 2, 1))), ("square", (3,))]
        for kind, args in specs:
            shape = family_shape(kind, args)
            assert len({(j - i) % 2 for (i, j) in shape.corners()}) == 1


class TestFamilies:
    def test_b0_single_cell(self):
        assert make_family(FamilySpec("B", (0,), (1, 3))).rows() == [[3]]

    def test_a1(self):
        assert make_family(FamilySpec("A", (1,), (1, 3))).rows() == [[1], [1, 3]]

    def test_s0_sentinel(self):
        assert make_family(FamilySpec("S", (0,), (1, 3))).is_empty
        assert make_family(FamilySpec("Sstar", (0,), (1, 3))).is_empty

    def test_stair_example(self):
        t = make_family(FamilySpec("stair", (5, (2, 2, 1)), (1, 3)))
        assert t.shape == SkewShape((5, 4, 3, 2, 1), (2, 2, 1))
        assert t.rows()[0] == [3, 1, 3]

    def test_stair_allows_zero_parts(self):
        t = make_family(FamilySpec("stair", (3, (1, 0, 0)), (1, 3)))
        assert t.shape == SkewShape((3, 2, 1), (1,))

    def test_stair_rejects_bad_mu(self):
        with pytest.raises(IndexOutOfRange):
            make_family(FamilySpec("stair", (3, (3,)), (1, 3)))

    def test_family_shapes(self):
        assert family_shape("L", (1,)) == SkewShape((2, 2), (1,))
        assert family_shape("Lstar", (1,)) == SkewShape((2, 2), (1,))
        assert family_shape("L", (2,)) == SkewShape((2, 2, 2, 2), (1, 1, 1))
        assert family_shape("Lstar", (2,)) == SkewShape((4, 4), (3,))
        assert family_shape("S", (2,)) == SkewShape((2, 2, 1), (1,))
        assert family_shape("Sstar", (2,)) == SkewShape((3, 2), (1,))
        assert family_shape("antihook", (4, 2)) == SkewShape((4, 4, 4), (3, 3))

    def test_index_ranges(self):
        with pytest.raises(IndexOutOfRange):
            family_shape("A", (0,))
        with pytest.raises(IndexOutOfRange):
            family_shape("B", (-1,))
        with pytest.raises(IndexOutOfRange):
            family_shape("antihook", (1, 1))


class TestGluing:
    def test_single_cells(self):
        ta = Tableau(SkewShape((1,)), {(1, 1): 4})
        tb = Tableau(SkewShape((1,)), {(1, 1): 7})
        assert glue_h(ta, tb).rows() == [[4, 7]]
        gv = glue_v(ta, tb)
        assert gv.shape == SkewShape((1, 1))
        assert gv.entries == {(1, 1): 7, (2, 1): 4}

    def test_eight_column_gluing_dimensions(self):
        t1 = checkerboard_fill(SkewShape((5, 4, 3), (3, 1)), 1, 3)
        t2 = checkerboard_fill(SkewShape((3, 3, 3, 2, 1), (2, 1, 1)), 1, 3)
        gh = glue_h(t1, t2)
        gv = glue_v(t1, t2)
        assert (gh.shape.height, gh.shape.width) == (7, 8)
        assert (gv.shape.height, gv.shape.width) == (8, 7)
        assert gh.shape.n_cells == gv.shape.n_cells == 16

    def test_cell_count_additive(self):
        t1 = checkerboard_fill(SkewShape((2, 1)), 2, 3)
        t2 = checkerboard_fill(SkewShape((2, 2)), 1, 3)
        assert glue_v(t1, t2).shape.n_cells == 7

    def test_empty_neutral(self):
        t = checkerboard_fill(SkewShape((2, 2)), 1, 3)
        assert glue_h(t, Tableau.empty()) == t
        assert glue_v(Tableau.empty(), t) == t

    @given(shapes_strategy(), shapes_strategy(), st.integers(0, 2 ** 30))
    @settings(max_examples=40, deadline=None)
    def test_gluing_preserves_admissibility(self, s1, s2, seed):
        import random
        rng = random.Random(seed)
        t1 = Tableau(s1, {c: rng.randint(2, 4) for c in s1.cells})
        t2 = Tableau(s2, {c: rng.randint(2, 4) for c in s2.cells})
        assert t1.admissible() and t2.admissible()
        assert glue_h(t1, t2).admissible()
        assert glue_v(t1, t2).admissible()


class TestRibbons:
    def test_strip_family_is_ribbon(self):
        for n in range(0, 4):
            assert is_ribbon(family_shape("B", (n,)))

    def test_blocks_are_not(self):
        assert not is_ribbon(SkewShape((2, 2)))
        assert not is_ribbon(SkewShape((5, 4, 3), (3, 1)))

    def test_disconnected_not_ribbon(self):
        assert not is_ribbon(SkewShape((2, 1), (1,)))

    def test_walk(self):
        cells, moves = ribbon_walk(family_shape("A", (1,)))
        assert cells == [(2, 1), (2, 2), (1, 2)]
        assert moves == "RU"

    def test_walk_single_row(self):
        cells, moves = ribbon_walk(SkewShape((3,)))
        assert moves == "RR"


class TestTableau:
    def test_entry_validation(self):
        s = SkewShape((2,))
        with pytest.raises(ValueError):
            Tableau(s, {(1, 1): 1})  # missing a cell
        with pytest.raises(ValueError):
            Tableau(s, {(1, 1): 1, (1, 2): 0})

    def test_admissibility(self):
        s = SkewShape((2, 1))
        t = Tableau(s, {(1, 1): 1, (1, 2): 2, (2, 1): 2})
        assert t.admissible()
        t2 = Tableau(s, {(1, 1): 2, (1, 2): 1, (2, 1): 2})
        assert not t2.admissible()

    def test_diagonal_constant(self):
        t = checkerboard_fill(SkewShape((3, 2)), 2, 3)
        assert t.diagonal_constant()
        t2 = Tableau(SkewShape((2,)), {(1, 1): 1, (1, 2): 2})
        assert t2.diagonal_constant()  # one cell per diagonal

    def test_conjugate_transposes_entries(self):
        t = checkerboard_fill(SkewShape((3, 2)), 1, 3)
        tc = t.conjugate()
        assert tc.shape == SkewShape((2, 2, 1))
        for (i, j), v in t.entries.items():
            assert tc.entries[(j, i)] == v


class TestEnumeration:
    def test_small_counts(self):
        assert sum(1 for _ in iter_skew_shapes(1)) == 1
        assert sum(1 for _ in iter_skew_shapes(2)) == 4          # 1 + 3
        assert sum(1 for _ in iter_skew_shapes(3)) == 13         # 1 + 3 + 9

    def test_canonical_position(self):
        for s in iter_skew_shapes(5):
            assert any(j == 1 for (_, j) in s.cells)
            assert any(i == 1 for (i, _) in s.cells)
            occupied = {j for (_, j) in s.cells}
            assert occupied == set(range(1, s.width + 1))

    def test_no_duplicates(self):
        shapes = list(iter_skew_shapes(6))
        assert len(shapes) == len(set(shapes))
