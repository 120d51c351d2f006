"""Standard parabolic subgroups and their double cosets.

For simple subsets J and K, each (W_J, W_K) double coset contains a unique
element of minimal length (no left descents in J, no right descents in K)
and a unique element of maximal length (all of them are descents).  Both
are reached greedily from any member.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import MixedGroups
from .rootsys import WeylElement, WeylGroup, word_name, _normalize_subset


def normalize_subset(rank: int, J) -> tuple[int, ...]:
    """Sorted duplicate-free subset of {0, ..., rank-1}; raises InvalidSubset."""
    return _normalize_subset(rank, J)


def parabolic_elements(group: WeylGroup, J) -> tuple[WeylElement, ...]:
    """All elements of the standard parabolic W_J, in enumeration order."""
    subset = _normalize_subset(group.rank, J)
    seen = {0}
    queue = [0]
    while queue:
        x = queue.pop()
        for i in subset:
            y = group.right_index(x, i)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return tuple(group.elements[x] for x in sorted(seen))


@dataclass(frozen=True)
class DoubleCoset:
    """One (W_J, W_K) double coset, elements in enumeration order."""

    elements: tuple[WeylElement, ...]
    min_rep: WeylElement
    max_rep: WeylElement

    @property
    def size(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    """Partition of W into (W_J, W_K) double cosets.

    Cosets are ordered by their minimal representative (length, then lex on
    the canonical word), i.e. by enumeration index of min_rep.
    """

    J: tuple[int, ...]
    K: tuple[int, ...]
    cosets: tuple[DoubleCoset, ...]
    _coset_index: dict = field(repr=False, compare=False, default_factory=dict)

    def coset_of(self, w: WeylElement) -> DoubleCoset:
        return self.cosets[self._coset_index[w.index]]

    def __len__(self) -> int:
        return len(self.cosets)


def double_cosets(group: WeylGroup, J, K) -> DoubleCosetDecomposition:
    """Decompose W into (W_J, W_K) double cosets W_J w W_K.

    Orbit search under left multiplication by J and right multiplication by
    K.  Seeds are taken in enumeration order, so each orbit is discovered at
    its minimal representative and the coset list comes out sorted.
    """
    subJ = _normalize_subset(group.rank, J)
    subK = _normalize_subset(group.rank, K)
    order = group.order
    assigned = [-1] * order
    cosets: list[DoubleCoset] = []
    index_map: dict[int, int] = {}
    for seed in range(order):
        if assigned[seed] >= 0:
            continue
        tag = len(cosets)
        members = [seed]
        assigned[seed] = tag
        queue = [seed]
        while queue:
            x = queue.pop()
            for j in subJ:
                y = group.left_index(x, j)
                if assigned[y] < 0:
                    assigned[y] = tag
                    members.append(y)
                    queue.append(y)
            for k in subK:
                y = group.right_index(x, k)
                if assigned[y] < 0:
                    assigned[y] = tag
                    members.append(y)
                    queue.append(y)
        members.sort()
        for x in members:
            index_map[x] = tag
        elems = tuple(group.elements[x] for x in members)
        cosets.append(DoubleCoset(elements=elems, min_rep=elems[0], max_rep=elems[-1]))
    return DoubleCosetDecomposition(
        J=subJ, K=subK, cosets=tuple(cosets), _coset_index=index_map
    )


def min_double_coset_rep(w: WeylElement, J, K) -> WeylElement:
    """Minimal-length element of W_J w W_K, by greedy descent removal."""
    group = w.group
    subJ = _normalize_subset(group.rank, J)
    subK = _normalize_subset(group.rank, K)
    x = w.index
    while True:
        left = group.left_descent_mask(x)
        for j in subJ:
            if left >> j & 1:
                x = group.left_index(x, j)
                break
        else:
            right = group.right_descent_mask(x)
            for k in subK:
                if right >> k & 1:
                    x = group.right_index(x, k)
                    break
            else:
                return group.elements[x]


def max_double_coset_rep(w: WeylElement, J, K) -> WeylElement:
    """Maximal-length element of W_J w W_K, by greedy ascent."""
    group = w.group
    subJ = _normalize_subset(group.rank, J)
    subK = _normalize_subset(group.rank, K)
    x = w.index
    while True:
        left = group.left_descent_mask(x)
        for j in subJ:
            if not left >> j & 1:
                x = group.left_index(x, j)
                break
        else:
            right = group.right_descent_mask(x)
            for k in subK:
                if not right >> k & 1:
                    x = group.right_index(x, k)
                    break
            else:
                return group.elements[x]


def is_minimal_in_double_coset(w: WeylElement, J, K) -> bool:
    """True iff w is the minimal element of W_J w W_K.

    Equivalent to having no left descent in J and no right descent in K;
    for J = {s}, K = empty this reads sw > w.
    """
    group = w.group
    subJ = _normalize_subset(group.rank, J)
    subK = _normalize_subset(group.rank, K)
    left = group.left_descent_mask(w.index)
    if any(left >> j & 1 for j in subJ):
        return False
    right = group.right_descent_mask(w.index)
    return not any(right >> k & 1 for k in subK)


def maximal_reps(group: WeylGroup, J, K) -> tuple[WeylElement, ...]:
    """Maximal-length representatives, one per (W_J, W_K) double coset."""
    return tuple(c.max_rep for c in double_cosets(group, J, K).cosets)


def decomposition_jsonable(dec: DoubleCosetDecomposition) -> dict:
    """JSON form: subsets plus min/max canonical words and size per coset."""
    return {
        "J": list(dec.J),
        "K": list(dec.K),
        "cosets": [
            {
                "min": word_name(c.min_rep.canonical_word),
                "max": word_name(c.max_rep.canonical_word),
                "size": c.size,
            }
            for c in dec.cosets
        ],
    }
