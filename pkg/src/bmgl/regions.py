"""Symbolic region systems: the game boards.

A region denotes a nonempty open set; a region system supplies subset and
equality tests, a seeded strict refinement sampler, and a witness oracle that
either names a point lying in every region of a nested chain or honestly
reports "unknown".  Three systems are provided: basic clopen sets of the
Baire space, finite unions of rational open intervals, and the elements of a
finite poset under its down-set topology.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .posets import ExtendedCardinal, FinitePoset


class RegionError(ValueError):
    pass


class UnsupportedSystem(RegionError):
    pass


@dataclass(frozen=True)
class BaireClopen:
    """The basic clopen [s] of all sequences extending the finite s."""

    seq: tuple[int, ...]

    def __post_init__(self):
        if any(x < 0 for x in self.seq):
            raise RegionError("Baire sequences use naturals")

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.seq)) + "]"


@dataclass(frozen=True)
class IntervalRegion:
    """Finite union of disjoint open intervals with rational endpoints,
    stored normalized (ascending, overlaps merged)."""

    components: tuple[tuple[Fraction, Fraction], ...]

    @staticmethod
    def of(*pairs) -> "IntervalRegion":
        comps = sorted((Fraction(lo), Fraction(hi)) for lo, hi in pairs)
        if any(lo >= hi for lo, hi in comps):
            raise RegionError("interval needs lo < hi")
        merged: list[tuple[Fraction, Fraction]] = []
        for lo, hi in comps:
            if merged and lo < merged[-1][1]:
                merged[-1] = (merged[-1][0], max(hi, merged[-1][1]))
            else:
                merged.append((lo, hi))
        if not merged:
            raise RegionError("empty interval region")
        return IntervalRegion(tuple(merged))

    def __str__(self) -> str:
        return " u ".join(f"({lo},{hi})" for lo, hi in self.components)


class BaireSystem:
    """Basic clopen subsets of the Baire space omega^omega."""

    name = "baire"
    declared_souslin = ExtendedCardinal.aleph(1)  # the space is ccc

    def full_region(self) -> BaireClopen:
        return BaireClopen(())

    def is_subset(self, a: BaireClopen, b: BaireClopen) -> bool:
        return a.seq[: len(b.seq)] == b.seq

    def equals(self, a: BaireClopen, b: BaireClopen) -> bool:
        return a.seq == b.seq

    def sample_refinement(self, a: BaireClopen, rng: random.Random) -> BaireClopen:
        return BaireClopen(a.seq + (rng.randrange(10),))

    def closed_refinement(self, a: BaireClopen) -> BaireClopen:
        # every basic clopen is closed; one-step extension by 0
        return BaireClopen(a.seq + (0,))

    def witness_point(self, chain: Sequence[BaireClopen]) -> Optional[list[int]]:
        """The longest sequence of a nested chain, extended by zeros, lies in
        every member; serialized as the finite prefix (zeros implied)."""
        point: tuple[int, ...] = ()
        for region in chain:
            if region.seq[: len(point)] != point[: len(region.seq)]:
                return None
            if len(region.seq) > len(point):
                point = region.seq
        return list(point)

    def region_to_json(self, a: BaireClopen) -> list[int]:
        return list(a.seq)

    def region_from_json(self, data) -> BaireClopen:
        if not isinstance(data, list) or not all(
            isinstance(x, int) and x >= 0 for x in data
        ):
            raise RegionError(f"not a Baire region literal: {data!r}")
        return BaireClopen(tuple(data))

    def parse_region(self, text: str) -> BaireClopen:
        """Space-separated naturals; empty string is the root clopen."""
        text = text.strip().strip("[]")
        if not text:
            return BaireClopen(())
        try:
            return BaireClopen(tuple(int(t) for t in text.split()))
        except ValueError as exc:
            raise RegionError(f"bad Baire move {text!r}: {exc}") from None


class IntervalSystem:
    """Finite unions of rational open intervals inside a bounded board.

    All arithmetic is exact; no witness is ever certified because a rational
    point of the finite chain says nothing about the intersection at omega.
    """

    name = "intervals"
    declared_souslin = ExtendedCardinal.aleph(1)

    def __init__(self, board: tuple = (0, 1)):
        self.board = IntervalRegion.of(board)

    def full_region(self) -> IntervalRegion:
        return self.board

    def is_subset(self, a: IntervalRegion, b: IntervalRegion) -> bool:
        return all(
            any(blo <= lo and hi <= bhi for blo, bhi in b.components)
            for lo, hi in a.components
        )

    def equals(self, a: IntervalRegion, b: IntervalRegion) -> bool:
        return a.components == b.components

    def sample_refinement(self, a: IntervalRegion, rng: random.Random) -> IntervalRegion:
        lo, hi = a.components[rng.randrange(len(a.components))]
        width = hi - lo
        return IntervalRegion.of((lo + width / 4, hi - width / 4))

    def witness_point(self, chain: Sequence[IntervalRegion]) -> None:
        return None

    def region_to_json(self, a: IntervalRegion) -> list[list[str]]:
        return [[str(lo), str(hi)] for lo, hi in a.components]

    def region_from_json(self, data) -> IntervalRegion:
        try:
            return IntervalRegion.of(*[(Fraction(lo), Fraction(hi)) for lo, hi in data])
        except (TypeError, ValueError) as exc:
            raise RegionError(f"not an interval region literal: {data!r}") from None

    def parse_region(self, text: str) -> IntervalRegion:
        """Comma-separated ``lo..hi`` pairs of rationals, e.g. ``1/3..1/2``."""
        pairs = []
        for part in text.split(","):
            lo, _, hi = part.strip().partition("..")
            try:
                pairs.append((Fraction(lo), Fraction(hi)))
            except ValueError as exc:
                raise RegionError(f"bad interval {part!r}: {exc}") from None
        return IntervalRegion.of(*pairs)


class PosetSystem:
    """A finite poset played directly: regions are elements, containment is
    the extension order (regions denote down-sets of the poset's Alexandrov
    topology)."""

    name = "poset"

    def __init__(self, poset: FinitePoset):
        self.poset = poset
        self.declared_souslin = poset.souslin_number()

    def full_region(self) -> None:
        return None  # no canonical board element; first moves are free

    def is_subset(self, a: str, b: str) -> bool:
        return self.poset.leq(a, b)

    def equals(self, a: str, b: str) -> bool:
        return a == b

    def sample_refinement(self, a: str, rng: random.Random) -> str:
        """A random proper extension; at a minimal element the only legal
        continuation is the element itself."""
        proper = [e for e in self.poset.elements if e != a and self.poset.leq(e, a)]
        if not proper:
            return a
        return proper[rng.randrange(len(proper))]

    def sample_element(self, rng: random.Random) -> str:
        return self.poset.elements[rng.randrange(len(self.poset.elements))]

    def witness_point(self, chain: Sequence[str]) -> Optional[str]:
        """The last element of the chain extends every earlier one, so it
        lies in all the denoted down-sets (and survives stabilization)."""
        if not chain:
            return None
        last = chain[-1]
        if all(self.poset.leq(last, earlier) for earlier in chain):
            return last
        return None

    def region_to_json(self, a: str) -> str:
        return a

    def region_from_json(self, data) -> str:
        if not isinstance(data, str):
            raise RegionError(f"not a poset element literal: {data!r}")
        self.poset.index(data)
        return data

    def parse_region(self, text: str) -> str:
        element = text.strip()
        self.poset.index(element)
        return element
