"""Finite posets and exact computation of their order invariants.

Conventions: ``q leq p`` means "q extends p" (q is the stronger condition),
so extensions point downward, minimal elements are the strongest conditions,
and an antichain is a set of pairwise incompatible elements.

The relation is stored as a dense bit-matrix (one int bitmask per element),
which caps the universe at 64 elements.  Every search is exhaustive, with
branch-and-bound where it matters; ties are always broken by lexicographic
element order so results are reproducible byte-for-byte.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

MAX_ELEMENTS = 64
EXHAUSTIVE_PNT_LIMIT = 20


class PosetError(ValueError):
    """Base class for poset construction and usage errors."""


class AxiomViolation(PosetError):
    """A poset axiom failed; carries the axiom name and a witness pair."""

    def __init__(self, axiom: str, witness: tuple[str, ...]):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} violated at {witness}")


class UnknownElement(PosetError):
    def __init__(self, element: str):
        self.element = element
        super().__init__(f"unknown element {element!r}")


class NotDense(PosetError):
    """Raised when an operation requires a dense subset and got one that
    is not; carries an element with no extension in the subset."""

    def __init__(self, witness: str):
        self.witness = witness
        super().__init__(f"subset is not dense: {witness!r} has no extension in it")


@dataclass(frozen=True)
class ExtendedCardinal:
    """Finite cardinal or symbolic aleph.  Finite(n) < Aleph(k) always."""

    kind: str  # "finite" | "aleph"
    value: int

    @staticmethod
    def finite(n: int) -> "ExtendedCardinal":
        if n < 1:
            raise ValueError("finite cardinal values start at 1")
        return ExtendedCardinal("finite", n)

    @staticmethod
    def aleph(k: int) -> "ExtendedCardinal":
        if k < 0:
            raise ValueError("aleph index must be >= 0")
        return ExtendedCardinal("aleph", k)

    def _key(self) -> tuple[int, int]:
        return (0, self.value) if self.kind == "finite" else (1, self.value)

    def __lt__(self, other: "ExtendedCardinal") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "ExtendedCardinal") -> bool:
        return self._key() <= other._key()

    def __str__(self) -> str:
        return str(self.value) if self.kind == "finite" else f"aleph_{self.value}"


@dataclass(frozen=True)
class Antichain:
    """A set of pairwise incompatible elements, stored sorted."""

    members: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class NablaReport:
    holds: bool
    pi_noetherian_type: ExtendedCardinal
    souslin: ExtendedCardinal

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FinitePoset:
    """Immutable finite poset over opaque string element ids.

    ``below[i]`` is the bitmask of extensions of element i (everything leq
    it, including itself); ``above[i]`` the mask of elements it extends.
    Construct through :func:`validate_poset` unless the relation is already
    known to satisfy the axioms.
    """

    __slots__ = ("elements", "below", "above", "_index", "_incomp")

    def __init__(self, elements: Sequence[str], below: Sequence[int]):
        self.elements: tuple[str, ...] = tuple(elements)
        self.below: tuple[int, ...] = tuple(below)
        self._index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        above = [0] * n
        for p in range(n):
            for q in _bits(self.below[p]):
                above[q] |= 1 << p
        self.above: tuple[int, ...] = tuple(above)
        incomp = []
        for i in range(n):
            m = 0
            for j in range(n):
                if i != j and not (self.below[i] & self.below[j]):
                    m |= 1 << j
            incomp.append(m)
        self._incomp: tuple[int, ...] = tuple(incomp)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"FinitePoset({len(self)} elements)"

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise UnknownElement(element) from None

    def _mask_of(self, subset: Iterable[str]) -> int:
        m = 0
        for e in subset:
            m |= 1 << self.index(e)
        return m

    def _ids(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in _bits(mask))

    def leq(self, q: str, p: str) -> bool:
        """True iff q extends p."""
        return bool(self.below[self.index(p)] >> self.index(q) & 1)

    # ------------------------------------------------------------------
    # compatibility / separativity

    def is_compatible(self, p: str, q: str) -> tuple[bool, Optional[str]]:
        """Common-extension test; returns the lexicographically least
        witness r with r leq p and r leq q when one exists."""
        common = self.below[self.index(p)] & self.below[self.index(q)]
        if not common:
            return False, None
        return True, self.elements[(common & -common).bit_length() - 1]

    def is_separative(self) -> tuple[bool, Optional[tuple[str, str]]]:
        """Separativity check: whenever q does not extend p, some extension
        of q must be incompatible with p.  Returns the first failing (p, q)
        in lexicographic pair order."""
        n = len(self)
        for pi in range(n):
            for qi in range(n):
                if self.below[pi] >> qi & 1:
                    continue  # q extends p, nothing to check
                ok = False
                for ri in _bits(self.below[qi]):
                    if not (self.below[ri] & self.below[pi]):
                        ok = True
                        break
                if not ok:
                    return False, (self.elements[pi], self.elements[qi])
        return True, None

    # ------------------------------------------------------------------
    # antichains and the Souslin number

    def is_antichain(self, members: Iterable[str]) -> bool:
        idx = [self.index(e) for e in members]
        return all(
            not (self.below[a] & self.below[b])
            for a, b in itertools.combinations(idx, 2)
        )

    def _max_antichain_size(self) -> int:
        n = len(self)
        incomp = self._incomp
        best = 0

        def grow(size: int, cand: int) -> None:
            nonlocal best
            if size + _popcount(cand) <= best:
                return
            if not cand:
                best = max(best, size)
                return
            v = (cand & -cand).bit_length() - 1
            grow(size + 1, cand & incomp[v])
            grow(size, cand & ~(1 << v))

        grow(0, (1 << n) - 1)
        return best

    def _can_reach(self, size: int, cand: int, target: int) -> bool:
        if size == target:
            return True
        if size + _popcount(cand) < target:
            return False
        v = (cand & -cand).bit_length() - 1
        if self._can_reach(size + 1, cand & self._incomp[v], target):
            return True
        return self._can_reach(size, cand & ~(1 << v), target)

    def max_antichain(self) -> Antichain:
        """A maximum-cardinality antichain, lexicographically least among
        the maximum ones (branch-and-bound plus a greedy fixing pass)."""
        target = self._max_antichain_size()
        chosen: list[int] = []
        cand = (1 << len(self)) - 1
        while len(chosen) < target:
            v = (cand & -cand).bit_length() - 1
            if self._can_reach(len(chosen) + 1, cand & self._incomp[v], target):
                chosen.append(v)
                cand &= self._incomp[v]
            else:
                cand &= ~(1 << v)
        return Antichain(tuple(self.elements[i] for i in chosen))

    def souslin_number(self) -> ExtendedCardinal:
        """Least kappa such that the poset has no antichain of size kappa:
        for finite posets, max antichain size + 1."""
        return ExtendedCardinal.finite(self._max_antichain_size() + 1)

    # ------------------------------------------------------------------
    # dense subsets and Noetherian types

    def is_dense(self, subset: Iterable[str]) -> tuple[bool, Optional[str]]:
        """Density check; on failure returns the lexicographically least
        element with no extension in the subset."""
        dmask = self._mask_of(subset)
        for p in range(len(self)):
            if not (self.below[p] & dmask):
                return False, self.elements[p]
        return True, None

    def _nt_mask(self, dmask: int) -> int:
        worst = 0
        for q in range(len(self)):
            worst = max(worst, _popcount(self.above[q] & dmask))
        return 1 + worst

    def noetherian_type(self, dense_subset: Iterable[str]) -> ExtendedCardinal:
        """nt(D): one more than the largest fiber {p in D : q leq p}."""
        dmask = self._mask_of(dense_subset)
        ok, witness = self.is_dense(self._ids(dmask))
        if not ok:
            assert witness is not None
            raise NotDense(witness)
        return ExtendedCardinal.finite(self._nt_mask(dmask))

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(
            e for i, e in enumerate(self.elements) if self.below[i] == 1 << i
        )

    def pi_noetherian_type(
        self, exhaustive: bool = False
    ) -> tuple[ExtendedCardinal, tuple[str, ...]]:
        """Minimum nt over dense subsets, with the optimal subset.

        The minimal elements are always dense with fibers of size <= 1, and
        every dense subset of a nonempty poset has nt >= 2, so the answer is
        Finite(2) with D = minimal elements.  ``exhaustive`` re-derives the
        minimum by scanning all dense subsets and asserts agreement.
        """
        minimal = self.minimal_elements()
        nt = self.noetherian_type(minimal)
        assert nt == ExtendedCardinal.finite(2)
        if exhaustive:
            n = len(self)
            if n > EXHAUSTIVE_PNT_LIMIT:
                raise PosetError(
                    f"exhaustive dense-subset scan refused for {n} > "
                    f"{EXHAUSTIVE_PNT_LIMIT} elements"
                )
            best = None
            for dmask in range(1, 1 << n):
                if any(not (self.below[p] & dmask) for p in range(n)):
                    continue
                value = self._nt_mask(dmask)
                if best is None or value < best:
                    best = value
                    if best == 2:
                        break
            assert best == 2, f"dense-subset scan disagreed: {best}"
        return nt, minimal

    # ------------------------------------------------------------------
    # down-sets

    def down_set(self, subset: Iterable[str]) -> tuple[str, ...]:
        """{p : p leq q for all q in Q}; the whole poset when Q is empty."""
        mask = (1 << len(self)) - 1
        for q in subset:
            mask &= self.below[self.index(q)]
        return self._ids(mask)

    def reduce_down_set(self, subset: Sequence[str]) -> tuple[str, ...]:
        """Greedy pass over Q in input order keeping q only when it strictly
        shrinks the running down-set.  Guarantees Q'down = Qdown; when the
        poset is separative, |Q'| is bounded by the maximum antichain size.
        Minimality is not promised."""
        running = (1 << len(self)) - 1
        kept: list[str] = []
        for q in subset:
            shrunk = running & self.below[self.index(q)]
            if shrunk != running:
                kept.append(q)
                running = shrunk
        return tuple(kept)

    # ------------------------------------------------------------------
    # enumeration-dense subsets (the countable-poset construction, finitized)

    def enumeration_dense(self, order: Sequence[str]) -> tuple[str, ...]:
        """D = {p_a : no earlier p_x extends p_a}, for a permutation order.

        D is dense, and whenever q in D extends p_a the index of q is at
        most a (the element p_a itself may realize equality)."""
        if sorted(order) != sorted(self.elements) or len(order) != len(self):
            raise PosetError("order is not a permutation of the elements")
        kept: list[str] = []
        for a, p in enumerate(order):
            pi = self.index(p)
            if not any(self.below[pi] >> self.index(order[x]) & 1 for x in range(a)):
                kept.append(p)
        return tuple(sorted(kept))

    # ------------------------------------------------------------------
    # statement "nabla" at finite scale

    def check_nabla(self) -> NablaReport:
        """pi-Noetherian type vs Souslin number; holds for every finite
        nonempty poset since pNt = 2 <= S."""
        pnt, _ = self.pi_noetherian_type()
        souslin = self.souslin_number()
        return NablaReport(pnt <= souslin, pnt, souslin)


# ----------------------------------------------------------------------
# construction and the text format


def validate_poset(
    elements: Sequence[str],
    pairs: Iterable[tuple[str, str]],
    closure: bool = False,
) -> FinitePoset:
    """Build a poset from (q, p) pairs meaning "q extends p".

    Reflexivity is supplied automatically.  With ``closure`` the transitive
    closure is applied before the axiom checks; otherwise missing transitive
    pairs are reported.  Raises :class:`AxiomViolation` with the first
    violated axiom and a witness pair, in lexicographic element order.
    """
    if not elements:
        raise PosetError("empty element list rejected")
    if len(set(elements)) != len(elements):
        raise PosetError("duplicate element ids")
    if len(elements) > MAX_ELEMENTS:
        raise PosetError(f"more than {MAX_ELEMENTS} elements unsupported")
    names = tuple(sorted(elements))
    index = {e: i for i, e in enumerate(names)}
    n = len(names)
    below = [1 << i for i in range(n)]
    for q, p in pairs:
        if q not in index:
            raise UnknownElement(q)
        if p not in index:
            raise UnknownElement(p)
        below[index[p]] |= 1 << index[q]
    if closure:
        changed = True
        while changed:
            changed = False
            for p in range(n):
                merged = below[p]
                for q in _bits(below[p]):
                    merged |= below[q]
                if merged != below[p]:
                    below[p] = merged
                    changed = True
    for a in range(n):
        for b in range(n):
            if a != b and below[b] >> a & 1 and below[a] >> b & 1:
                raise AxiomViolation("antisymmetry", (names[a], names[b]))
    for b in range(n):
        for a in _bits(below[b]):
            missing = below[a] & ~below[b]  # everything below a must be below b
            if missing:
                c = (missing & -missing).bit_length() - 1
                raise AxiomViolation("transitivity", (names[c], names[b]))
    return FinitePoset(names, below)


def parse_poset_text(text: str) -> tuple[str, FinitePoset]:
    """Parse the line-oriented poset format:

        poset <name>
        elements <id> <id> ...
        leq <q> <p>
        closure            (optional flag line)
    """
    name = ""
    elements: list[str] = []
    pairs: list[tuple[str, str]] = []
    closure = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] == "poset" and len(fields) == 2:
            name = fields[1]
        elif fields[0] == "elements" and len(fields) >= 2:
            elements.extend(fields[1:])
        elif fields[0] == "leq" and len(fields) == 3:
            pairs.append((fields[1], fields[2]))
        elif fields[0] == "closure" and len(fields) == 1:
            closure = True
        else:
            raise PosetError(f"line {lineno}: cannot parse {line!r}")
    return name, validate_poset(elements, pairs, closure=closure)
