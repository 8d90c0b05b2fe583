"""
Unit and property tests for index subsets and the dominance order.
"""

from itertools import combinations_with_replacement, permutations

import pytest
from hypothesis import given, strategies as st

from models.poset import (
    IndexMultiset,
    IndexSubset,
    dominates,
    down_closure,
    find_partition,
    initial_segment,
    k0,
    lower_covers,
    mask_lower_covers,
    mask_rank,
    mask_upper_covers,
    max_initial_segment,
    multiset_union,
    upper_covers,
)

subsets_of_8 = st.frozensets(st.integers(min_value=1, max_value=8), max_size=6).map(
    lambda items: IndexSubset(tuple(items))
)

small_multisets = [
    IndexMultiset(items)
    for size in range(5)
    for items in combinations_with_replacement(range(1, 7), size)
]


def injects_upward(smaller, larger) -> bool:
    """Some injection sends each element of ``smaller`` to a larger-or-equal one."""
    s, t = smaller.elements, larger.elements
    return any(
        all(a <= t[j] for a, j in zip(s, positions))
        for positions in permutations(range(len(t)), len(s))
    )


class TestIndexSubset:
    """Tests for the canonical subset value type."""

    def test_elements_are_sorted_and_deduplicated(self):
        """Construction order and repeats do not matter."""
        assert IndexSubset((4, 1, 2, 1)).elements == (1, 2, 4)
        assert IndexSubset.of(4, 2, 1) == IndexSubset.of(1, 2, 4)

    def test_non_positive_elements_rejected(self):
        with pytest.raises(ValueError):
            IndexSubset.of(0, 2)

    def test_labels(self):
        """Gene notation is descending; braces once an element needs two digits."""
        assert IndexSubset.of(9, 4, 2, 1).label == "9421"
        assert IndexSubset.of(10, 4, 2, 1).label == "{10,4,2,1}"
        assert IndexSubset().label == "∅"
        assert IndexSubset.of(2, 1).subscript == "12"

    def test_sort_key_orders_by_size_then_elements(self):
        ordered = sorted([IndexSubset.of(1, 2), IndexSubset.of(3), IndexSubset(), IndexSubset.of(2)])
        assert ordered == [IndexSubset(), IndexSubset.of(2), IndexSubset.of(3), IndexSubset.of(1, 2)]

    def test_mask_round_trip(self):
        subset = IndexSubset.of(1, 3, 4)
        assert subset.mask == 0b1101
        assert IndexSubset.from_mask(subset.mask) == subset

    def test_set_operations(self):
        a = IndexSubset.of(1, 2)
        assert a.with_element(5) == IndexSubset.of(1, 2, 5)
        assert a.without(1) == IndexSubset.of(2)
        assert a.union(IndexSubset.of(2, 3)) == IndexSubset.of(1, 2, 3)
        assert a.issubset(IndexSubset.of(1, 2, 3))
        assert a.isdisjoint(IndexSubset.of(3, 4))

    def test_multiset_keeps_repeats(self):
        assert IndexMultiset.of(3, 1, 1).elements == (1, 1, 3)


class TestDominance:
    """Tests for the tail-aligned dominance order."""

    def test_basic_cases(self):
        assert dominates((1, 3), (2, 4))
        assert not dominates((2, 3), (1, 4))
        assert dominates((3,), (1, 4))
        assert not dominates((1, 2, 3), (4, 5))
        assert dominates((), (1,))

    def test_initial_segment_is_below_every_subset_of_its_size(self):
        assert dominates(initial_segment(3), IndexSubset.of(2, 5, 7))
        assert initial_segment(0) == IndexSubset()

    def test_multiset_union_and_max_initial_segment(self):
        union = multiset_union(IndexSubset.of(1, 2), IndexSubset.of(2, 3))
        assert union.elements == (1, 2, 2, 3)
        assert max_initial_segment(union) == 3
        assert max_initial_segment((1, 1, 2, 2)) == 2
        assert max_initial_segment((4,)) == 1
        assert max_initial_segment(()) == 0

    @pytest.mark.parametrize("smaller", small_multisets, ids=lambda m: str(m.elements))
    def test_matches_injection_definition(self, smaller):
        """Every multiset pair with elements up to 6 and size up to 4."""
        for larger in small_multisets:
            assert dominates(smaller, larger) == injects_upward(smaller, larger), (
                smaller.elements,
                larger.elements,
            )

    def test_antisymmetric(self):
        for first in small_multisets:
            for second in small_multisets:
                if dominates(first, second) and dominates(second, first):
                    assert first == second

    def test_max_initial_segment_matches_dominance(self):
        for values in small_multisets:
            top = max_initial_segment(values)
            assert dominates(initial_segment(top), values)
            assert not dominates(initial_segment(top + 1), values)

    @given(subsets_of_8)
    def test_reflexive(self, subset):
        assert dominates(subset, subset)

    @given(subsets_of_8, subsets_of_8, subsets_of_8)
    def test_transitive(self, a, b, c):
        if dominates(a, b) and dominates(b, c):
            assert dominates(a, c)

    @given(subsets_of_8)
    def test_covers_change_rank_by_one(self, subset):
        """Lower covers are dominated and have element sum one less."""
        for cover in lower_covers(subset):
            assert dominates(cover, subset)
            assert mask_rank(cover.mask) == mask_rank(subset.mask) - 1
        for cover in upper_covers(subset, 8):
            assert dominates(subset, cover)
            assert mask_rank(cover.mask) == mask_rank(subset.mask) + 1


class TestCovers:
    """Tests for explicit cover lists."""

    def test_lower_covers(self):
        assert lower_covers(IndexSubset.of(1, 3)) == [IndexSubset.of(3), IndexSubset.of(1, 2)]

    def test_upper_covers_respect_universe(self):
        assert upper_covers(IndexSubset.of(1, 3), 4) == [IndexSubset.of(2, 3), IndexSubset.of(1, 4)]
        assert mask_upper_covers(IndexSubset.of(1, 3).mask, 3) == [IndexSubset.of(2, 3).mask]

    def test_empty_set_has_no_lower_cover(self):
        assert mask_lower_covers(0) == []

    def test_down_closure(self):
        closure = down_closure([IndexSubset.of(1, 2).mask])
        assert closure == {0, 0b1, 0b10, 0b11}


class TestK0AndPartitions:
    """Tests for k0 and splits of initial segments."""

    def test_k0_of_example_code(self):
        """Gees 421 and 5: both G + G and G + G' reach [4]."""
        assert k0([IndexSubset.of(1, 2, 4), IndexSubset.of(5)]) == 4

    def test_k0_of_empty_gee(self):
        assert k0([IndexSubset()]) == 0

    def test_k0_needs_a_gee(self):
        with pytest.raises(ValueError):
            k0([])

    def test_find_partition_is_deterministic(self):
        split = find_partition(IndexSubset.of(1, 2, 4), IndexSubset.of(1, 2, 4), 4)
        assert split == (IndexSubset.of(3), IndexSubset.of(1, 2, 4))

    def test_find_partition_none_when_impossible(self):
        assert find_partition(IndexSubset.of(1), IndexSubset.of(1), 3) is None
        assert find_partition(IndexSubset.of(1), IndexSubset.of(1), 2) is None

    def test_negative_k_rejected(self):
        with pytest.raises(ValueError):
            find_partition(IndexSubset(), IndexSubset(), -1)

    @given(subsets_of_8, subsets_of_8)
    def test_partition_exists_up_to_max_initial_segment(self, first, second):
        """Multiset dominance of [k] always yields an actual split."""
        top = max_initial_segment(multiset_union(first, second))
        for k in range(top + 1):
            split = find_partition(first, second, k)
            assert split is not None
            s, t = split
            assert s.union(t) == initial_segment(k)
            assert s.isdisjoint(t)
            assert dominates(s, first) and dominates(t, second)

    @given(st.lists(subsets_of_8, min_size=1, max_size=4), st.data())
    def test_k0_ignores_order_and_repeats(self, gees, data):
        """k0 depends only on the set of gees."""
        expected = k0(gees)
        assert k0(data.draw(st.permutations(gees))) == expected
        assert k0(gees + [data.draw(st.sampled_from(gees))]) == expected
        assert k0(list(reversed(gees))) == expected

    @given(st.lists(subsets_of_8, min_size=1, max_size=4))
    def test_k0_matches_pairwise_dominance(self, gees):
        """k0 is the largest k with [k] below some G ∪ G', G = G' allowed."""
        expected = max(
            k
            for first in gees
            for second in gees
            for k in range(len(first) + len(second) + 1)
            if dominates(initial_segment(k), multiset_union(first, second))
        )
        assert k0(gees) == expected
