"""Finite topological spaces, regular-open algebras, and cellular families.

Opens are stored as bit-sets over the (lexicographically sorted) point list;
the public API speaks in sorted tuples of point ids.  Topology generation is
fixpoint closure under unions and intersections, so everything terminates.

Because finite Hausdorff spaces are discrete, the literal quasi-regular
predicate is nearly vacuous here; the ``pi_regular`` variant (the refinement
condition without Hausdorff) is what lets the space/poset translation be
exercised on non-discrete finite spaces, and reports label it explicitly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .posets import FinitePoset, _bits


class SpaceError(ValueError):
    pass


class TranslationError(AssertionError):
    """Space and regular-open poset invariants disagreed where the
    translation theorem promises equality."""


OpenSet = tuple[str, ...]


@dataclass(frozen=True)
class CellularFamily:
    """Pairwise disjoint nonempty opens."""

    members: tuple[OpenSet, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class SpacePredicates:
    hausdorff: bool
    quasi_regular: bool
    pi_regular: bool
    hausdorff_witness: Optional[tuple[str, str]]
    refinement_witness: Optional[OpenSet]


@dataclass(frozen=True)
class SpaceInvariants:
    souslin: int
    pi_noetherian_type: int
    pi_base: tuple[OpenSet, ...]


@dataclass(frozen=True)
class TranslationReport:
    space_souslin: int
    space_pnt: int
    ro_souslin: int
    ro_pnt: int
    pi_regular: bool
    asserted: bool

    @property
    def equal(self) -> bool:
        return (
            self.space_souslin == self.ro_souslin
            and self.space_pnt == self.ro_pnt
        )


class FiniteSpace:
    """Points with a family of opens closed under union and intersection."""

    __slots__ = ("points", "opens", "_index", "_full")

    def __init__(self, points: Sequence[str], opens: Iterable[int]):
        self.points: tuple[str, ...] = tuple(sorted(points))
        if len(set(self.points)) != len(self.points):
            raise SpaceError("duplicate point ids")
        self._index = {p: i for i, p in enumerate(self.points)}
        self._full = (1 << len(self.points)) - 1
        opens_set = frozenset(opens)
        if 0 not in opens_set or self._full not in opens_set:
            raise SpaceError("opens must contain the empty set and the space")
        for a, b in itertools.combinations_with_replacement(opens_set, 2):
            if a | b not in opens_set or a & b not in opens_set:
                raise SpaceError("opens not closed under union/intersection")
        self.opens: frozenset[int] = opens_set

    def __repr__(self) -> str:
        return f"FiniteSpace({len(self.points)} points, {len(self.opens)} opens)"

    # -- conversions -------------------------------------------------------

    def mask(self, subset: Iterable[str]) -> int:
        m = 0
        for p in subset:
            if p not in self._index:
                raise SpaceError(f"unknown point {p!r}")
            m |= 1 << self._index[p]
        return m

    def ids(self, mask: int) -> OpenSet:
        return tuple(self.points[i] for i in _bits(mask))

    def sorted_opens(self) -> list[int]:
        """All opens in lexicographic order of their sorted point tuples."""
        return sorted(self.opens, key=lambda m: tuple(_bits(m)))

    # -- lattice operations --------------------------------------------------

    def closure_mask(self, mask: int) -> int:
        away = 0
        for o in self.opens:
            if not (o & mask):
                away |= o
        return self._full & ~away

    def interior_mask(self, mask: int) -> int:
        inside = 0
        for o in self.opens:
            if not (o & ~mask):
                inside |= o
        return inside

    def closure_interior(self, subset: Iterable[str]) -> tuple[OpenSet, OpenSet]:
        m = self.mask(subset)
        return self.ids(self.closure_mask(m)), self.ids(self.interior_mask(m))

    def regular_opens(self) -> list[int]:
        return [
            o
            for o in self.sorted_opens()
            if self.interior_mask(self.closure_mask(o)) == o
        ]

    # -- predicates ----------------------------------------------------------

    def predicates(self) -> SpacePredicates:
        hausdorff = True
        h_witness = None
        n = len(self.points)
        for i in range(n):
            for j in range(i + 1, n):
                if not any(
                    o1 >> i & 1 and o2 >> j & 1 and not (o1 & o2)
                    for o1 in self.opens
                    for o2 in self.opens
                ):
                    hausdorff = False
                    h_witness = (self.points[i], self.points[j])
                    break
            if not hausdorff:
                break
        refinement = True
        r_witness = None
        for u in self.sorted_opens():
            if not u:
                continue
            if not any(
                v and not (self.closure_mask(v) & ~u) for v in self.opens
            ):
                refinement = False
                r_witness = self.ids(u)
                break
        return SpacePredicates(
            hausdorff=hausdorff,
            quasi_regular=hausdorff and refinement,
            pi_regular=refinement,
            hausdorff_witness=h_witness,
            refinement_witness=r_witness,
        )


def generate_topology(
    points: Sequence[str], subbasis: Iterable[Iterable[str]]
) -> FiniteSpace:
    """Smallest topology containing the subbasis: close under finite
    intersections, then under unions, to a fixpoint."""
    names = tuple(sorted(points))
    index = {p: i for i, p in enumerate(names)}
    full = (1 << len(names)) - 1
    masks = set()
    for s in subbasis:
        m = 0
        for p in s:
            if p not in index:
                raise SpaceError(f"subbasis point {p!r} not among the points")
            m |= 1 << index[p]
        masks.add(m)
    opens = {0, full} | masks
    changed = True
    while changed:
        changed = False
        current = list(opens)
        for a, b in itertools.combinations(current, 2):
            for m in (a | b, a & b):
                if m not in opens:
                    opens.add(m)
                    changed = True
    return FiniteSpace(names, opens)


def open_set_poset(space: FiniteSpace) -> tuple[FinitePoset, dict[str, int]]:
    """The poset of nonempty opens ordered by inclusion (smaller extends
    bigger), with a map from element id back to the open's bitmask."""
    nonempty = [o for o in space.sorted_opens() if o]
    ids = [_set_id(space, o) for o in nonempty]
    order = sorted(range(len(nonempty)), key=lambda i: ids[i])
    names = [ids[i] for i in order]
    masks = [nonempty[i] for i in order]
    below = []
    for p, pm in enumerate(masks):
        row = 0
        for q, qm in enumerate(masks):
            if not (qm & ~pm):  # q subset of p
                row |= 1 << q
        below.append(row)
    poset = FinitePoset(names, below)
    return poset, dict(zip(names, masks))


def _set_id(space: FiniteSpace, mask: int) -> str:
    return "{" + ",".join(space.ids(mask)) + "}"


def regular_open_algebra(space: FiniteSpace) -> tuple[FinitePoset, dict[str, int]]:
    """The poset of nonempty regular-open sets under inclusion, with the
    id-to-bitmask map.  The whole space is regular open, so this is never
    empty."""
    ros = [o for o in space.regular_opens() if o]
    names = sorted(_set_id(space, o) for o in ros)
    by_id = {_set_id(space, o): o for o in ros}
    masks = [by_id[n] for n in names]
    below = []
    for pm in masks:
        row = 0
        for q, qm in enumerate(masks):
            if not (qm & ~pm):
                row |= 1 << q
        below.append(row)
    return FinitePoset(names, below), dict(zip(names, masks))


def maximal_cellular(
    space: FiniteSpace, seed: Sequence[Iterable[str]] = ()
) -> CellularFamily:
    """Greedy extension of a cellular family by the lexicographically least
    addable open until the union is dense (equivalently: maximal)."""
    members: list[int] = []
    for s in seed:
        m = space.mask(s)
        if m not in space.opens or not m:
            raise SpaceError("seed member is not a nonempty open")
        if any(m & prev for prev in members):
            raise SpaceError("seed family is not pairwise disjoint")
        members.append(m)
    while True:
        union = 0
        for m in members:
            union |= m
        if space.closure_mask(union) == space._full:
            break
        addable = next(
            o for o in space.sorted_opens() if o and not (o & union)
        )
        members.append(addable)
    return CellularFamily(tuple(space.ids(m) for m in members))


def space_invariants(space: FiniteSpace) -> SpaceInvariants:
    """Souslin number and pi-Noetherian type, computed on the poset of
    nonempty opens; the optimal pi-base is the minimal nonempty opens."""
    poset, masks = open_set_poset(space)
    souslin = poset.souslin_number()
    pnt, pi_base_ids = poset.pi_noetherian_type()
    ok, _ = poset.is_dense(pi_base_ids)
    assert ok
    pi_base = tuple(space.ids(masks[i]) for i in pi_base_ids)
    return SpaceInvariants(souslin.value, pnt.value, pi_base)


def check_translation(space: FiniteSpace) -> TranslationReport:
    """Compare (S, pNt) for the space against its regular-open poset.

    For pi-regular spaces the equalities are asserted (TranslationError on
    failure); otherwise the values are reported without assertion.
    """
    inv = space_invariants(space)
    ro_poset, _ = regular_open_algebra(space)
    ro_s = ro_poset.souslin_number().value
    ro_pnt, _ = ro_poset.pi_noetherian_type()
    pi_regular = space.predicates().pi_regular
    report = TranslationReport(
        space_souslin=inv.souslin,
        space_pnt=inv.pi_noetherian_type,
        ro_souslin=ro_s,
        ro_pnt=ro_pnt.value,
        pi_regular=pi_regular,
        asserted=pi_regular,
    )
    if pi_regular and not report.equal:
        raise TranslationError(f"translation equalities failed: {report}")
    return report


def parse_space_text(text: str) -> tuple[str, FiniteSpace]:
    """Parse the line-oriented space format:

        space <name>
        points <id> <id> ...
        subbasis <id>,<id>,...     (one set per line; empty set = bare word)
    """
    name = ""
    points: list[str] = []
    subbasis: list[list[str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "space" and len(fields) == 2:
            name = fields[1]
        elif fields[0] == "points" and len(fields) >= 2:
            points.extend(fields[1:])
        elif fields[0] == "subbasis":
            for spec in fields[1:]:
                subbasis.append([p for p in spec.split(",") if p])
        else:
            raise SpaceError(f"line {lineno}: cannot parse {line!r}")
    return name, generate_topology(points, subbasis)
