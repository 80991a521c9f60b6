"""Boolean completion of a finite separative poset.

The completion is the regular-open algebra of the poset's down-set topology
(opens = down-closed subsets), minus the empty set, with each element sent to
int(cl(of its extension set)).  For separative posets the map is injective,
order-preserving and order-reflecting, and its image is dense.
"""

from __future__ import annotations

from .posets import FinitePoset, PosetError, _bits
from .topology import FiniteSpace, regular_open_algebra

COMPLETION_LIMIT = 20


def down_set_space(poset: FinitePoset) -> FiniteSpace:
    """The poset's down-set (Alexandrov) topology as a finite space."""
    n = len(poset)
    if n > COMPLETION_LIMIT:
        raise PosetError(
            f"down-set topology scan refused for {n} > {COMPLETION_LIMIT} elements"
        )
    opens = []
    for mask in range(1 << n):
        if all(not (poset.below[p] & ~mask) for p in _bits(mask)):
            opens.append(mask)
    return FiniteSpace(poset.elements, opens)


def boolean_completion(
    poset: FinitePoset,
) -> tuple[FinitePoset, dict[str, str]]:
    """The completion poset (a finite Boolean algebra minus its zero) and the
    dense order embedding p -> int(cl(p-down)).  Requires separativity; for
    non-separative posets the map need not be injective."""
    separative, witness = poset.is_separative()
    if not separative:
        raise PosetError(f"poset is not separative (witness {witness})")
    space = down_set_space(poset)
    algebra, masks = regular_open_algebra(space)
    by_mask = {m: name for name, m in masks.items()}
    embedding: dict[str, str] = {}
    for i, element in enumerate(poset.elements):
        down = space.mask(poset.elements[j] for j in _bits(poset.below[i]))
        image = space.interior_mask(space.closure_mask(down))
        embedding[element] = by_mask[image]
    return algebra, embedding
