import json

import pytest

from klmatroids.errors import IndexOutOfRange, InvalidParameters, InvalidShape
from klmatroids.tableaux import (
    Filling,
    SkewShape,
    count_overline_skyt,
    count_skyt,
    count_skyt_rho_direct,
    count_syt,
    enumerate_skyt,
    involution_rotate,
    iota_action,
    satisfies_removed_family_conditions,
)

from oracles import brute_syt_count, catalan

# Named fillings reused across tests: a legal filling of shape (4, 3, 3),
# its half-turn image in (3, 3, 4), and the restricted-family pair linking
# shapes (2, 3, 3) and (4, 3, 3).
FILLING_433 = Filling.from_columns(4, 3, 3, [[2, 3, 10, 11], [4, 6], [5, 8], [1, 7, 9]])
ROTATED_334 = Filling.from_columns(3, 3, 4, [[3, 5, 11], [4, 7], [6, 8], [1, 2, 9, 10]])
OVERLINE_233 = Filling.from_columns(2, 3, 3, [[1, 3], [4, 6], [5, 8], [2, 7, 9]])
LIFTED_433 = Filling.from_columns(4, 3, 3, [[1, 3, 10, 11], [4, 6], [5, 8], [2, 7, 9]])


class TestShapeGeometry:
    def test_cell_count(self):
        assert SkewShape(4, 3, 3).cell_count == 11
        assert SkewShape(2, 1, 2).cell_count == 4

    def test_column_rows(self):
        shape = SkewShape(4, 3, 3)
        assert list(shape.column_rows(0)) == [0, 1, 2, 3]
        assert list(shape.column_rows(1)) == [0, 1]
        assert list(shape.column_rows(3)) == [-1, 0, 1]

    def test_degenerate_shapes_rejected(self):
        with pytest.raises(InvalidShape):
            SkewShape(1, 2, 3)
        with pytest.raises(InvalidShape):
            SkewShape(3, 0, 3)


class TestEnumeration:
    def test_b_below_two_is_empty(self):
        assert enumerate_skyt(2, 1, 1) == []
        assert enumerate_skyt(1, 2, 4) == []

    def test_square_shape(self):
        fillings = enumerate_skyt(2, 1, 2)
        assert len(fillings) == 2
        as_columns = {f.columns for f in fillings}
        assert as_columns == {((1, 2), (3, 4)), ((1, 3), (2, 4))}

    def test_lexicographic_order(self):
        fillings = enumerate_skyt(3, 2, 3)
        keys = [f.entries_column_major() for f in fillings]
        assert keys == sorted(keys)

    def test_contains_figure_element(self):
        assert FILLING_433 in enumerate_skyt(4, 3, 3)

    def test_all_enumerated_fillings_are_legal(self):
        for f in enumerate_skyt(3, 2, 4):
            assert f.is_legal()

    def test_i_zero_refused(self):
        with pytest.raises(InvalidShape):
            enumerate_skyt(3, 0, 3)


class TestCountSyt:
    def test_spot_values(self):
        assert count_syt(3, 1, 0) == 5
        assert count_syt(2, 0, 0) == 1
        # hooks of the two-row shape (3, 2) are 4,3,1,2,1: 120 / 24
        assert count_syt(2, 1, 1) == 5

    def test_single_row(self):
        assert count_syt(1, 0, 4) == 1

    def test_invalid_shape(self):
        with pytest.raises(InvalidShape):
            count_syt(1, 2, 0)
        with pytest.raises(InvalidShape):
            count_syt(2, 1, -1)

    @pytest.mark.parametrize("a", range(1, 6))
    @pytest.mark.parametrize("i", range(0, 4))
    @pytest.mark.parametrize("k", range(0, 4))
    def test_matches_backtracking(self, a, i, k):
        if a == 1 and i > 0:
            return
        rows = [1 + i + k, 1 + i] + [1] * (a - 2) if a >= 2 else [1 + k]
        if sum(rows) > 13:
            return
        assert count_syt(a, i, k) == brute_syt_count(tuple(rows))


class TestCountSkyt:
    def test_conventions(self):
        assert count_skyt(7, 0, 4) == 1
        assert count_skyt(2, 0, 0) == 1
        assert count_skyt(1, 3, 5) == 0
        assert count_skyt(5, 2, 1) == 0

    def test_spot_values(self):
        assert count_skyt(3, 1, 2) == 5
        assert count_skyt(2, 2, 2) == 5
        assert count_skyt(2, 1, 3) == 5
        assert count_skyt(2, 1, 4) == 9
        assert count_skyt(4, 3, 3) == 2145

    @pytest.mark.parametrize("i", range(1, 4))
    @pytest.mark.parametrize("a", range(0, 6))
    @pytest.mark.parametrize("b", range(0, 6))
    def test_matches_enumeration(self, a, i, b):
        if a + 2 * i + b - 2 > 12:
            return
        assert count_skyt(a, i, b) == len(enumerate_skyt(a, i, b))

    def test_catalan_specialization(self):
        for i in range(1, 6):
            assert count_skyt(2, i, 2) == catalan(i + 1)


class TestInvolution:
    def test_figure_pair(self):
        assert involution_rotate(FILLING_433) == ROTATED_334
        assert involution_rotate(ROTATED_334) == FILLING_433

    def test_single_square_block(self):
        f = Filling.from_columns(2, 1, 2, [[1, 2], [3, 4]])
        g = involution_rotate(f)
        assert g.is_legal()
        assert involution_rotate(g) == f

    @pytest.mark.parametrize("a,i,b", [(2, 1, 3), (3, 2, 2), (4, 1, 2), (2, 2, 4)])
    def test_bijection_onto_mirror_shape(self, a, i, b):
        fillings = enumerate_skyt(a, i, b)
        images = [involution_rotate(f) for f in fillings]
        assert all(g.is_legal() for g in images)
        assert all(involution_rotate(g) == f for f, g in zip(fillings, images))
        assert set(images) == set(enumerate_skyt(b, i, a))


class TestOverline:
    def test_conventions_and_values(self):
        assert count_overline_skyt(0, 5) == 0
        assert count_overline_skyt(1, 1) == 0
        assert count_overline_skyt(1, 2) == 2
        # frozen from filtered enumeration by hand
        assert count_overline_skyt(1, 3) == 3
        assert count_overline_skyt(1, 4) == 4
        assert count_overline_skyt(2, 2) == 5

    @pytest.mark.parametrize("i", range(1, 5))
    @pytest.mark.parametrize("b", range(0, 7))
    def test_matches_filtered_enumeration(self, i, b):
        if 2 * i + b > 14:
            return
        filtered = sum(
            1 for f in enumerate_skyt(2, i, b) if f.value_at(0, 0) == 1
        )
        assert count_overline_skyt(i, b) == filtered

    @pytest.mark.parametrize("i,b", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)])
    def test_taller_left_columns_forget_to_the_same_count(self, i, b):
        expected = count_overline_skyt(i, b)
        for a in range(2, 6):
            n = a + 2 * i + b - 2
            largest = set(range(n - (a - 2) + 1, n + 1))
            filtered = [
                f
                for f in enumerate_skyt(a, i, b)
                if f.value_at(0, 0) == 1 and set(f.columns[0][2:]) == largest
            ]
            assert len(filtered) == expected


class TestRemovedFamilyCount:
    def test_spot_values(self):
        assert count_skyt_rho_direct(2, 3, 1, 0) == 5
        assert count_skyt_rho_direct(2, 3, 1, 1) == 3
        assert count_skyt_rho_direct(1, 3, 1, 1) == 0
        assert count_skyt_rho_direct(5, 4, 0, 2) == 1

    def test_rho_zero_counts_everything(self):
        # Without removals, the bottom-right entry always exceeds the rank.
        for (m, d, i) in [(1, 3, 1), (2, 3, 1), (2, 5, 2), (3, 4, 1)]:
            assert count_skyt_rho_direct(m, d, i, 0) == count_skyt(m + 1, i, d - 2 * i + 1)

    @pytest.mark.parametrize(
        "m,d,rho",
        [(2, 3, 1), (1, 3, 1), (2, 4, 1), (3, 3, 2), (2, 2, 2), (4, 2, 3), (3, 5, 1)],
    )
    def test_subtraction_formula(self, m, d, rho):
        for i in range((d - 1) // 2 + 1):
            b = d - 2 * i + 1
            direct = count_skyt_rho_direct(m, d, i, rho)
            assert direct == count_skyt(m + 1, i, b) - rho * count_overline_skyt(i, b)

    def test_parameter_validation(self):
        with pytest.raises(InvalidParameters):
            count_skyt_rho_direct(0, 3, 1, 0)
        with pytest.raises(InvalidParameters):
            count_skyt_rho_direct(2, 1, 0, 1)
        with pytest.raises(InvalidParameters):
            count_skyt_rho_direct(1, 3, 1, 2)  # 2 disjoint 3-sets need 6 elements


class TestIotaAction:
    def test_zero_index_appends_untouched_tail(self):
        f = Filling.from_columns(2, 1, 2, [[1, 3], [2, 4]])
        g = iota_action(0, f, 3)
        assert g.columns == ((1, 3, 5, 6), (2, 4))

    def test_figure_correspondence(self):
        assert iota_action(0, OVERLINE_233, 3) == LIFTED_433

    def test_moves_bottom_right(self):
        f = Filling.from_columns(2, 1, 2, [[1, 3], [2, 4]])
        g = iota_action(2, f, 4)
        assert g.columns == ((1, 3, 4, 5, 7), (2, 6))
        assert g.is_legal()

    def test_injective_on_small_shapes(self):
        m = 3
        seen = {}
        for j in range(m):
            for f in enumerate_skyt(2, 2, 2):
                image = iota_action(j, f, m)
                assert image.is_legal()
                assert image not in seen, (seen[image], (j, f))
                seen[image] = (j, f)

    def test_image_is_exactly_the_excluded_set(self):
        # The images of the top-left-1 fillings under indices below rho are
        # exactly the fillings failing all three boundary conditions.
        m, d, i, rho = 3, 4, 1, 2
        b = d - 2 * i + 1
        overline = [f for f in enumerate_skyt(2, i, b) if f.value_at(0, 0) == 1]
        images = {iota_action(j, f, m) for j in range(rho) for f in overline}
        complement = {
            f
            for f in enumerate_skyt(m + 1, i, b)
            if not satisfies_removed_family_conditions(f, d, rho)
        }
        assert images == complement

    def test_index_range(self):
        f = Filling.from_columns(2, 1, 2, [[1, 3], [2, 4]])
        with pytest.raises(IndexOutOfRange):
            iota_action(3, f, 3)
        with pytest.raises(InvalidShape):
            iota_action(0, LIFTED_433, 5)


def test_filling_json_roundtrip():
    payload = json.loads(FILLING_433.to_json())
    assert payload == {
        "a": 4,
        "i": 3,
        "b": 3,
        "columns": [[2, 3, 10, 11], [4, 6], [5, 8], [1, 7, 9]],
    }
    assert Filling.from_json_dict(payload) == FILLING_433
