"""Exhaustive enumeration of labeled posets on up to 6 elements.

A poset on {0..n-1} is determined by its restriction to {0..n-2} plus the
strict down-set D and strict up-set U of element n-1, which must satisfy:
D down-closed, U up-closed, D and U disjoint, and d < u already holding for
every d in D, u in U.  Recursing on that decomposition yields every labeled
poset exactly once (counts 1, 3, 19, 219, 4231, 130023 for n = 1..6).
"""

from __future__ import annotations

from typing import Iterator

from .posets import FinitePoset, PosetError, _bits

MAX_N = 6

_LABELS = tuple(f"e{i}" for i in range(MAX_N))


def _subsets(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _strict_matrices(n: int) -> Iterator[list[int]]:
    """Yield strict-order matrices down[i] = {j : j strictly extends i}
    for all labeled posets on 0..n-1."""
    if n == 1:
        yield [0]
        return
    m = n - 1
    full = (1 << m) - 1
    for base in _strict_matrices(m):
        ups = [0] * m  # ups[j] = {i : j strictly extends i}
        for i in range(m):
            for j in _bits(base[i]):
                ups[j] |= 1 << i
        for down in range(1 << m):
            # D must be down-closed under the base order
            if any(base[d] & ~down for d in _bits(down)):
                continue
            for up in _subsets(full & ~down):
                # U must be up-closed
                if any(ups[u] & ~up for u in _bits(up)):
                    continue
                # transitivity through the new element: d < u must pre-exist
                if any(up & ~ups[d] for d in _bits(down)):
                    continue
                rows = list(base)
                for i in _bits(up):
                    rows[i] |= 1 << m
                rows.append(down)
                yield rows


def enumerate_posets(n: int) -> Iterator[FinitePoset]:
    """All labeled posets on n elements (ids e0..e{n-1}), each exactly once."""
    if not 1 <= n <= MAX_N:
        raise PosetError(f"enumerate_posets supports 1 <= n <= {MAX_N}, got {n}")
    labels = _LABELS[:n]
    for strict in _strict_matrices(n):
        below = [strict[i] | 1 << i for i in range(n)]
        yield FinitePoset(labels, below)


def count_posets(n: int) -> int:
    return sum(1 for _ in enumerate_posets(n))
