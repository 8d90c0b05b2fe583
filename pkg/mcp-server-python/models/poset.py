"""
Index subsets and multisets of positive integers under the dominance order.

S <= T ("T dominates S") when T contains a subfamily t_1 < ... < t_l with
s_i <= t_i for the sorted elements s_1 < ... < s_l of S. The order is applied
to multisets as well. Both value types are immutable and canonical, so
equality of values is equality of sets/multisets.

Subsets of [N] are also handled as bitmasks (bit i-1 stands for element i)
by the enumeration code; the mask helpers below share the cover relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence, Union


@dataclass(frozen=True)
class IndexSubset:
    """Strictly increasing tuple of positive integers."""

    elements: tuple[int, ...] = ()

    def __post_init__(self):
        items = tuple(sorted(set(int(x) for x in self.elements)))
        if items and items[0] < 1:
            raise ValueError(f"Subset elements must be positive integers, got {items}")
        object.__setattr__(self, "elements", items)

    @classmethod
    def of(cls, *items: int) -> "IndexSubset":
        return cls(tuple(items))

    @classmethod
    def from_mask(cls, mask: int) -> "IndexSubset":
        return cls(tuple(mask_elements(mask)))

    @property
    def mask(self) -> int:
        value = 0
        for x in self.elements:
            value |= 1 << (x - 1)
        return value

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements

    def __lt__(self, other: "IndexSubset") -> bool:
        return self.sort_key < other.sort_key

    @property
    def sort_key(self) -> tuple:
        """Cardinality first, then lexicographic on ascending elements."""
        return (len(self.elements), self.elements)

    def with_element(self, item: int) -> "IndexSubset":
        return IndexSubset(self.elements + (item,))

    def without(self, item: int) -> "IndexSubset":
        return IndexSubset(tuple(x for x in self.elements if x != item))

    def union(self, other: "IndexSubset") -> "IndexSubset":
        return IndexSubset(self.elements + other.elements)

    def issubset(self, other: "IndexSubset") -> bool:
        return set(self.elements) <= set(other.elements)

    def isdisjoint(self, other: "IndexSubset") -> bool:
        return not set(self.elements) & set(other.elements)

    @property
    def label(self) -> str:
        """Gene notation: descending digits ("9421"), or "{10,4,2,1}" past one digit."""
        if not self.elements:
            return "∅"
        descending = sorted(self.elements, reverse=True)
        if descending[0] <= 9:
            return "".join(str(x) for x in descending)
        return "{" + ",".join(str(x) for x in descending) + "}"

    @property
    def subscript(self) -> str:
        """Class subscript in ascending order ("12" for V_12), braces past one digit."""
        if not self.elements:
            return "∅"
        if self.elements[-1] <= 9:
            return "".join(str(x) for x in self.elements)
        return "{" + ",".join(str(x) for x in self.elements) + "}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class IndexMultiset:
    """Nondecreasing tuple of positive integers, repetitions allowed."""

    elements: tuple[int, ...] = ()

    def __post_init__(self):
        items = tuple(sorted(int(x) for x in self.elements))
        if items and items[0] < 1:
            raise ValueError(f"Multiset elements must be positive integers, got {items}")
        object.__setattr__(self, "elements", items)

    @classmethod
    def of(cls, *items: int) -> "IndexMultiset":
        return cls(tuple(items))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)


Indexed = Union[IndexSubset, IndexMultiset, Sequence[int]]


def _sorted_elements(value: Indexed) -> tuple[int, ...]:
    if isinstance(value, (IndexSubset, IndexMultiset)):
        return value.elements
    return tuple(sorted(value))


def dominates(smaller: Indexed, larger: Indexed) -> bool:
    """
    Return True when ``smaller <= larger`` in the dominance order.

    Tail alignment: with s ascending of length l and t ascending of length k,
    s <= t iff l <= k and s_i <= t_{k-l+i} for every i.
    """
    s = _sorted_elements(smaller)
    t = _sorted_elements(larger)
    if len(s) > len(t):
        return False
    offset = len(t) - len(s)
    return all(a <= t[offset + i] for i, a in enumerate(s))


def multiset_union(first: Indexed, second: Indexed) -> IndexMultiset:
    """Merge two index collections keeping multiplicities."""
    return IndexMultiset(_sorted_elements(first) + _sorted_elements(second))


def initial_segment(k: int) -> IndexSubset:
    """[k] = {1, ..., k}; [0] is the empty set."""
    return IndexSubset(tuple(range(1, k + 1)))


def max_initial_segment(values: Indexed) -> int:
    """Largest k >= 0 with [k] <= values."""
    u = _sorted_elements(values)
    for k in range(len(u), 0, -1):
        offset = len(u) - k
        if all(i + 1 <= u[offset + i] for i in range(k)):
            return k
    return 0


def k0(gees: Iterable[IndexSubset]) -> int:
    """
    Max over ordered gee pairs (G, G'), repetition allowed, of the largest k
    with G ∪ G' >= [k].
    """
    pool = list(gees)
    if not pool:
        raise ValueError("k0 needs at least one gee (the empty gee counts)")
    return max(max_initial_segment(multiset_union(g, h)) for g, h in product(pool, repeat=2))


def find_partition(
    first: IndexSubset, second: IndexSubset, k: int
) -> Optional[tuple[IndexSubset, IndexSubset]]:
    """
    Search all 2^k splits [k] = S ⊔ T for one with S <= first and T <= second.

    Splits are tried in increasing bitmask order of S, so the witness is
    deterministic. Returns None when no split works.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k > len(first) + len(second):
        return None
    full = (1 << k) - 1
    for mask in range(full + 1):
        s = IndexSubset.from_mask(mask)
        if not dominates(s, first):
            continue
        t = IndexSubset.from_mask(full & ~mask)
        if dominates(t, second):
            return s, t
    return None


# Bitmask helpers for subsets of [N]


def mask_elements(mask: int) -> list[int]:
    """Ascending elements of a subset mask."""
    items = []
    position = 1
    while mask:
        if mask & 1:
            items.append(position)
        mask >>= 1
        position += 1
    return items


def mask_rank(mask: int) -> int:
    """Sum of the elements; every cover step changes it by exactly one."""
    return sum(mask_elements(mask))


def mask_lower_covers(mask: int) -> list[int]:
    """Subsets covered by ``mask``: lower one element into a gap, or drop element 1."""
    covers = []
    for x in mask_elements(mask):
        bit = 1 << (x - 1)
        if x == 1:
            covers.append(mask & ~bit)
        elif not mask & (bit >> 1):
            covers.append((mask & ~bit) | (bit >> 1))
    return covers


def mask_upper_covers(mask: int, universe: int) -> list[int]:
    """Subsets of [universe] covering ``mask``: add element 1, or raise one element into a gap."""
    covers = []
    if not mask & 1:
        covers.append(mask | 1)
    for x in mask_elements(mask):
        if x >= universe:
            continue
        bit = 1 << (x - 1)
        if not mask & (bit << 1):
            covers.append((mask & ~bit) | (bit << 1))
    return covers


def lower_covers(subset: IndexSubset) -> list[IndexSubset]:
    return [IndexSubset.from_mask(m) for m in mask_lower_covers(subset.mask)]


def upper_covers(subset: IndexSubset, universe: int) -> list[IndexSubset]:
    return [IndexSubset.from_mask(m) for m in mask_upper_covers(subset.mask, universe)]


def down_closure(masks: Iterable[int]) -> set[int]:
    """All subsets dominated by at least one of ``masks``."""
    closed: set[int] = set()
    stack = list(masks)
    while stack:
        mask = stack.pop()
        if mask in closed:
            continue
        closed.add(mask)
        stack.extend(mask_lower_covers(mask))
    return closed
