"""Labeled poset enumeration against known counts and a brute-force oracle."""

import pytest

import oracles
from bmgl.posets import PosetError
from bmgl.poset_enum import count_posets, enumerate_posets


def test_known_counts():
    assert count_posets(1) == 1
    assert count_posets(2) == 3
    assert count_posets(3) == 19
    assert count_posets(4) == 219
    assert count_posets(5) == 4231


def test_counts_against_relation_brute_force():
    for n in (1, 2, 3, 4):
        assert count_posets(n) == oracles.labeled_poset_count_brute(n)


def test_enumeration_is_duplicate_free_and_valid():
    for n in (1, 2, 3, 4):
        seen = set()
        for poset in enumerate_posets(n):
            assert poset.elements == tuple(f"e{i}" for i in range(n))
            key = poset.below
            assert key not in seen
            seen.add(key)
            # axioms hold: reflexive diagonals, antisymmetric, transitive
            for i in range(n):
                assert poset.below[i] >> i & 1
                for j in range(n):
                    if i != j and poset.below[i] >> j & 1:
                        assert not poset.below[j] >> i & 1
                        assert not poset.below[j] & ~poset.below[i]


def test_range_errors():
    with pytest.raises(PosetError):
        list(enumerate_posets(0))
    with pytest.raises(PosetError):
        list(enumerate_posets(7))
