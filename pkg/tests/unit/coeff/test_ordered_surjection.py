"""Tests for OrderedSurjection."""

from fractions import Fraction
from math import comb

import pytest

from app.core.shared.exceptions import ValidationError
from app.features.coeff.domain.value_objects.ordered_surjection import OrderedSurjection


@pytest.mark.unit
class TestOrderedSurjection:
    def test_all_orders_by_cut_position(self):
        sizes = [psi.block_sizes for psi in OrderedSurjection.all(4, 2)]
        assert sizes == [(1, 3), (2, 2), (3, 1)]

    @pytest.mark.parametrize("l", [1, 2, 3, 4, 5, 6])
    def test_counts_are_binomial(self, l):
        for m in range(1, l + 1):
            assert len(OrderedSurjection.all(l, m)) == comb(l - 1, m - 1)

    def test_out_of_range_is_empty(self):
        assert OrderedSurjection.all(2, 3) == []
        assert OrderedSurjection.all(2, 0) == []

    def test_image_and_blocks(self):
        psi = OrderedSurjection((2, 1, 2))
        assert [psi.image(i) for i in range(5)] == [0, 0, 1, 2, 2]
        assert psi.blocks("abcde") == [("a", "b"), ("c",), ("d", "e")]

    def test_blocks_need_matching_length(self):
        with pytest.raises(ValidationError, match="expected 5 items"):
            OrderedSurjection((2, 1, 2)).blocks([1, 2])

    def test_image_outside_range(self):
        with pytest.raises(ValidationError):
            OrderedSurjection((1,)).image(1)

    def test_factorial_weight(self):
        assert OrderedSurjection((3, 2)).factorial_weight() == Fraction(1, 12)

    def test_rejects_empty_blocks(self):
        with pytest.raises(ValidationError):
            OrderedSurjection((1, 0))
        with pytest.raises(ValidationError):
            OrderedSurjection(())

    def test_to_dict(self):
        assert OrderedSurjection((1, 2)).to_dict() == {"l": 3, "m": 2, "block_sizes": [1, 2]}
