"""Symbolic ordinal arithmetic for cardinal normal forms.

The supported class: finite sums  w_k1*b1 + ... + w_kr*br + c + n  where the
w_k are alephs with strictly decreasing indices k >= 1, each factor b is an
ordinal of the same class with aleph indices <= k (so the term w_k*b has
cardinality aleph_k), c is a countable part in base-omega Cantor normal form
with exponents >= 1, and n is a finite tail.  This class is closed under
ordinal addition and under the normal-form decompositions used here; general
ordinal multiplication and exponentiation are not provided.

Canonical representations are unique per value: addition merges and absorbs
terms, comparison is lexicographic on the term lists.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class OrdinalError(ValueError):
    pass


@dataclass(frozen=True)
class CardinalSym:
    """FiniteCard(n) or Aleph(k), totally ordered with every FiniteCard
    below every Aleph."""

    kind: str  # "finite" | "aleph"
    value: int

    @staticmethod
    def finite(n: int) -> "CardinalSym":
        if n < 0:
            raise OrdinalError("finite cardinal must be >= 0")
        return CardinalSym("finite", n)

    @staticmethod
    def aleph(k: int) -> "CardinalSym":
        if k < 0:
            raise OrdinalError("aleph index must be >= 0")
        return CardinalSym("aleph", k)

    @property
    def is_infinite(self) -> bool:
        return self.kind == "aleph"

    def _key(self) -> tuple[int, int]:
        return (0, self.value) if self.kind == "finite" else (1, self.value)

    def __lt__(self, other: "CardinalSym") -> bool:
        return self._key() < other._key()

    def __le__(self, other: "CardinalSym") -> bool:
        return self._key() <= other._key()

    def __str__(self) -> str:
        return str(self.value) if self.kind == "finite" else f"aleph_{self.value}"


@dataclass(frozen=True)
class Ordinal:
    """Canonical layered normal form.

    ``aleph_terms``: ((k, beta), ...) with k strictly decreasing, each beta a
    nonzero Ordinal whose aleph indices are <= k; the term denotes w_k * beta.
    ``cnf_terms``: ((e, c), ...) the countable part, exponents e >= 1 strictly
    decreasing countable Ordinals, coefficients c >= 1; each denotes w^e * c.
    ``tail``: the finite part.
    """

    aleph_terms: tuple[tuple[int, "Ordinal"], ...] = ()
    cnf_terms: tuple[tuple["Ordinal", int], ...] = ()
    tail: int = 0

    def __post_init__(self):
        if self.tail < 0:
            raise OrdinalError("negative finite tail")
        last_k = None
        for k, beta in self.aleph_terms:
            if k < 1:
                raise OrdinalError("aleph term index must be >= 1")
            if last_k is not None and k >= last_k:
                raise OrdinalError("aleph indices must strictly decrease")
            if beta.is_zero():
                raise OrdinalError("aleph term factor must be nonzero")
            if beta.max_aleph_index() > k:
                raise OrdinalError(
                    f"factor of w_{k} term must have aleph indices <= {k}"
                )
            last_k = k
        last_e = None
        for e, c in self.cnf_terms:
            if c < 1:
                raise OrdinalError("CNF coefficient must be >= 1")
            if e.aleph_terms or e.is_zero():
                raise OrdinalError("CNF exponents must be countable and >= 1")
            if last_e is not None and not e < last_e:
                raise OrdinalError("CNF exponents must strictly decrease")
            last_e = e

    # -- basic predicates ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.aleph_terms and not self.cnf_terms and self.tail == 0

    def is_finite(self) -> bool:
        return not self.aleph_terms and not self.cnf_terms

    def max_aleph_index(self) -> int:
        """Largest aleph index appearing anywhere; 0 when countable."""
        if not self.aleph_terms:
            return 0
        return self.aleph_terms[0][0]

    # -- comparison ------------------------------------------------------

    def _term_seq(self):
        for k, beta in self.aleph_terms:
            yield (2, k, beta)
        for e, c in self.cnf_terms:
            yield (1, e, c)
        if self.tail:
            yield (0, self.tail, 0)

    def compare(self, other: "Ordinal") -> int:
        for mine, theirs in zip(self._term_seq(), other._term_seq()):
            if mine[0] != theirs[0]:
                return -1 if mine[0] < theirs[0] else 1
            if mine[0] == 2:  # aleph terms: index, then factor
                if mine[1] != theirs[1]:
                    return -1 if mine[1] < theirs[1] else 1
                c = mine[2].compare(theirs[2])
                if c:
                    return c
            elif mine[0] == 1:  # CNF terms: exponent, then coefficient
                c = mine[1].compare(theirs[1])
                if c:
                    return c
                if mine[2] != theirs[2]:
                    return -1 if mine[2] < theirs[2] else 1
            else:  # finite tails
                if mine[1] != theirs[1]:
                    return -1 if mine[1] < theirs[1] else 1
        m = sum(1 for _ in self._term_seq())
        t = sum(1 for _ in other._term_seq())
        return 0 if m == t else (-1 if m < t else 1)

    def __lt__(self, other: "Ordinal") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "Ordinal") -> bool:
        return self.compare(other) <= 0

    # -- display ---------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, beta in self.aleph_terms:
            if beta == ONE:
                parts.append(f"w_{k}")
            elif beta.is_finite():
                parts.append(f"w_{k}*{beta.tail}")
            else:
                parts.append(f"w_{k}*({beta})")
        for e, c in self.cnf_terms:
            if e == ONE:
                base = "w"
            elif e.is_finite():
                base = f"w^{e.tail}"
            else:
                base = f"w^({e})"
            parts.append(base if c == 1 else f"{base}*{c}")
        if self.tail:
            parts.append(str(self.tail))
        return " + ".join(parts)

    __repr__ = __str__


ZERO = Ordinal()
ONE = Ordinal(tail=1)
OMEGA = Ordinal(cnf_terms=((ONE, 1),))


def from_int(n: int) -> Ordinal:
    return Ordinal(tail=n)


def omega_power(e: Ordinal, c: int = 1) -> Ordinal:
    """w^e * c for a countable exponent e >= 1."""
    return Ordinal(cnf_terms=((e, c),))


def aleph_ordinal(k: int, beta: Ordinal = ONE) -> Ordinal:
    """w_k * beta as an ordinal value."""
    return Ordinal(aleph_terms=((k, beta),))


# ----------------------------------------------------------------------
# addition


def _single_terms(a: Ordinal) -> list[Ordinal]:
    out: list[Ordinal] = [Ordinal(aleph_terms=(t,)) for t in a.aleph_terms]
    out.extend(Ordinal(cnf_terms=(t,)) for t in a.cnf_terms)
    if a.tail:
        out.append(Ordinal(tail=a.tail))
    return out


def _class_rank(a: Ordinal) -> tuple[int, ...]:
    """Absorption rank of a single-term ordinal's leading term."""
    if a.aleph_terms:
        return (2, a.aleph_terms[0][0])
    if a.cnf_terms:
        return (1,)
    return (0,)


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Canonical ordinal sum with left absorption of lower terms."""
    if b.is_zero():
        return a
    if a.is_zero():
        return b
    return _add(a, b)


def _add(a: Ordinal, b: Ordinal) -> Ordinal:
    # absorption threshold is b's leading term
    if b.aleph_terms:
        k = b.aleph_terms[0][0]
        kept = [t for t in a.aleph_terms if t[0] >= k]
        b_aleph = list(b.aleph_terms)
        if kept and kept[-1][0] == k:
            merged_beta = _add(kept[-1][1], b_aleph[0][1])
            kept[-1] = (k, merged_beta)
            b_aleph = b_aleph[1:]
        return Ordinal(
            aleph_terms=tuple(kept) + tuple(b_aleph),
            cnf_terms=b.cnf_terms,
            tail=b.tail,
        )
    if b.cnf_terms:
        e = b.cnf_terms[0][0]
        kept = [t for t in a.cnf_terms if e < t[0]]
        b_cnf = list(b.cnf_terms)
        boundary = [t for t in a.cnf_terms if t[0].compare(e) == 0]
        if boundary:
            b_cnf[0] = (e, boundary[0][1] + b_cnf[0][1])
        return Ordinal(
            aleph_terms=a.aleph_terms,
            cnf_terms=tuple(kept) + tuple(b_cnf),
            tail=b.tail,
        )
    return Ordinal(
        aleph_terms=a.aleph_terms, cnf_terms=a.cnf_terms, tail=a.tail + b.tail
    )


def ord_sum(parts: Iterable[Ordinal]) -> Ordinal:
    total = ZERO
    for p in parts:
        total = ord_add(total, p)
    return total


# ----------------------------------------------------------------------
# cardinality and normal forms


def cardinal_of(a: Ordinal) -> CardinalSym:
    """|a| for a >= 1: the largest aleph index appearing, Aleph(0) for
    infinite countable values, FiniteCard(n) for finite ones."""
    if a.is_zero():
        raise OrdinalError("cardinality of 0 undefined here")
    if a.is_finite():
        return CardinalSym.finite(a.tail)
    if a.aleph_terms:
        return CardinalSym.aleph(a.aleph_terms[0][0])
    return CardinalSym.aleph(0)


def is_cardinally_even(a: Ordinal) -> bool:
    """True iff a = |a| * b for some ordinal b, i.e. the part of the
    representation below |a| vanishes."""
    if a.is_zero():
        raise OrdinalError("evenness is defined for ordinals >= 1")
    if a.is_finite():
        return True  # n = n * 1
    if a.aleph_terms:
        return len(a.aleph_terms) == 1 and not a.cnf_terms and a.tail == 0
    return a.tail == 0


def cnf(a: Ordinal) -> list[Ordinal]:
    """Cardinal normal form: the unique decomposition into cardinally even
    terms of strictly decreasing cardinality.  0 -> empty list."""
    parts = [Ordinal(aleph_terms=(t,)) for t in a.aleph_terms]
    if a.cnf_terms:
        parts.append(Ordinal(cnf_terms=a.cnf_terms))
    if a.tail:
        parts.append(Ordinal(tail=a.tail))
    return parts


def truncated_cnf(a: Ordinal, lam: CardinalSym) -> list[Ordinal]:
    """lambda-truncated form: the CNF with all terms below lam collapsed
    into a single final ordinal term."""
    if not lam.is_infinite:
        raise OrdinalError("truncation cardinal must be infinite")
    parts = cnf(a)
    big = [p for p in parts if not _below(p, lam)]
    small = [p for p in parts if _below(p, lam)]
    if small:
        big.append(ord_sum(small))
    return big


def _below(part: Ordinal, lam: CardinalSym) -> bool:
    # a cardinally even part is < lam exactly when its cardinality is
    return cardinal_of(part) < lam


def daleth(a: Ordinal, lam: CardinalSym) -> int:
    """Depth: the number of terms in the lambda-truncated normal form."""
    return len(truncated_cnf(a, lam))


def normal_segment(a: Ordinal, j: int, lam: CardinalSym) -> Ordinal:
    """Sum of the first j truncated terms; segment 0 is 0, segment
    daleth(a) is a itself."""
    parts = truncated_cnf(a, lam)
    if not 0 <= j <= len(parts):
        raise OrdinalError(f"segment index {j} out of range 0..{len(parts)}")
    return ord_sum(parts[:j])


def normal_interval(a: Ordinal, j: int, lam: CardinalSym) -> tuple[Ordinal, Ordinal]:
    """The half-open block [segment_j, segment_{j+1}) as a (lo, hi) pair."""
    parts = truncated_cnf(a, lam)
    if not 0 <= j < len(parts):
        raise OrdinalError(f"interval index {j} out of range 0..{len(parts) - 1}")
    return ord_sum(parts[:j]), ord_sum(parts[: j + 1])


# ----------------------------------------------------------------------
# expression grammar: `w_k` / `w` / integers with `+` and `*`

_TOKEN = re.compile(r"\s*(w_\d+|w|\d+|[+*])")


def parse_ordinal(text: str) -> Ordinal:
    """Parse expressions like ``w_1*2 + w*3 + 4``.

    Atoms are ``w_k`` (the aleph w_k), ``w`` (omega), and integer literals;
    ``*`` multiplies an atom by a positive integer, ``+`` is ordinal sum.
    """
    pos = 0
    tokens: list[str] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise OrdinalError(f"cannot tokenize ordinal expression at {text[pos:]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise OrdinalError("empty ordinal expression")

    def parse_term(i: int) -> tuple[Ordinal, int]:
        tok = tokens[i]
        if tok == "w" or tok == "w_0":
            value = OMEGA
        elif tok.startswith("w_"):
            value = aleph_ordinal(int(tok[2:]))
        elif tok.isdigit():
            value = from_int(int(tok))
        else:
            raise OrdinalError(f"expected atom, got {tok!r}")
        i += 1
        while i < len(tokens) and tokens[i] == "*":
            if i + 1 >= len(tokens) or not tokens[i + 1].isdigit():
                raise OrdinalError("`*` needs a positive integer right factor")
            factor = int(tokens[i + 1])
            if factor < 1:
                raise OrdinalError("`*` factor must be >= 1")
            value = _scale(value, factor)
            i += 2
        return value, i

    total, i = parse_term(0)
    while i < len(tokens):
        if tokens[i] != "+":
            raise OrdinalError(f"expected `+`, got {tokens[i]!r}")
        part, i = parse_term(i + 1)
        total = ord_add(total, part)
    return total


def _scale(atom: Ordinal, factor: int) -> Ordinal:
    """atom * factor for the grammar's atoms (single-term ordinals)."""
    if atom.is_finite():
        return Ordinal(tail=atom.tail * factor)
    if atom.aleph_terms:
        (k, beta), = atom.aleph_terms
        return Ordinal(aleph_terms=((k, _scale_factor(beta, factor)),))
    (e, c), = atom.cnf_terms
    return Ordinal(cnf_terms=((e, c * factor),))


def _scale_factor(beta: Ordinal, factor: int) -> Ordinal:
    if beta.is_finite():
        return Ordinal(tail=beta.tail * factor)
    # (w_k * b) * m with infinite b: fold by right-adding copies
    return ord_sum([beta] * factor)
