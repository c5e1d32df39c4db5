"""Tests for composition and vector-range iterators."""

from __future__ import annotations

import math

import pytest

from enumeration.compositions import compositions, vec_compositions, vec_range


class TestCompositions:
    def test_colex_order(self):
        assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]

    @pytest.mark.parametrize("n", range(9))
    @pytest.mark.parametrize("s", range(1, 6))
    def test_count_and_sums(self, n, s):
        parts = list(compositions(n, s))
        assert len(parts) == math.comb(n + s - 1, s - 1)
        assert len(set(parts)) == len(parts)
        assert all(sum(p) == n and len(p) == s and min(p) >= 0 for p in parts)

    def test_repeatable(self):
        assert list(compositions(4, 3)) == list(compositions(4, 3))

    def test_zero_parts(self):
        assert list(compositions(0, 0)) == [()]
        with pytest.raises(ValueError):
            compositions(3, 0)

    def test_negative_arguments(self):
        with pytest.raises(ValueError):
            compositions(-1, 2)
        with pytest.raises(ValueError):
            compositions(1, -2)


class TestVectorRanges:
    def test_row_major(self):
        assert list(vec_range((1, 2))) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]

    def test_empty_vector(self):
        assert list(vec_range(())) == [()]

    def test_negative_component(self):
        with pytest.raises(ValueError):
            vec_range((1, -1))


class TestVectorCompositions:
    def test_small_case(self):
        blocks = list(vec_compositions((1, 1), 2))
        assert len(blocks) == 4
        assert blocks[-1] == ((0, 0), (1, 1))
        assert all(tuple(map(sum, zip(*b))) == (1, 1) for b in blocks)

    @pytest.mark.parametrize("n", [(2,), (1, 2), (2, 0, 1)])
    @pytest.mark.parametrize("s", [1, 2, 3])
    def test_count(self, n, s):
        blocks = list(vec_compositions(n, s))
        assert len(blocks) == math.prod(math.comb(c + s - 1, s - 1) for c in n)
        assert len(set(blocks)) == len(blocks)
        assert all(len(b) == s for b in blocks)

    def test_zero_parts(self):
        assert list(vec_compositions((0, 0), 0)) == [()]
        with pytest.raises(ValueError):
            vec_compositions((1, 0), 0)
