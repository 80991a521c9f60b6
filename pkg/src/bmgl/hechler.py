"""The Hechler forcing order on finitely represented conditions.

Side functions are eventually affine with finitely many exceptions: the
smallest class closed under pointwise max that keeps eventual dominance and
the extension bullets decidable while still containing genuinely unbounded
functions.  The order is a preorder, not a partial order: side values below
the stem are unconstrained, so distinct conditions can extend each other.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional


class HechlerError(ValueError):
    pass


@dataclass(frozen=True)
class EvFun:
    """f(n) = exceptions[n] where defined, else slope*n + intercept.

    Canonical: no recorded exception equals its affine value, keys sorted.
    """

    exceptions: tuple[tuple[int, int], ...] = ()
    slope: int = 0
    intercept: int = 0

    def __post_init__(self):
        if self.slope < 0 or self.intercept < 0:
            raise HechlerError("affine tail needs non-negative coefficients")
        keys = [k for k, _ in self.exceptions]
        if keys != sorted(set(keys)):
            raise HechlerError("exception keys must be sorted and distinct")
        for k, v in self.exceptions:
            if k < 0 or v < 0:
                raise HechlerError("exceptions map naturals to naturals")
            if v == self.slope * k + self.intercept:
                raise HechlerError(f"exception at {k} equals the tail value")

    @staticmethod
    def make(exceptions: Optional[dict] = None, slope: int = 0, intercept: int = 0) -> "EvFun":
        cleaned = tuple(
            sorted(
                (k, v)
                for k, v in (exceptions or {}).items()
                if v != slope * k + intercept
            )
        )
        return EvFun(cleaned, slope, intercept)

    def __call__(self, n: int) -> int:
        for k, v in self.exceptions:
            if k == n:
                return v
        return self.slope * n + self.intercept

    @property
    def settled_from(self) -> int:
        """First index from which the affine tail applies unconditionally."""
        return self.exceptions[-1][0] + 1 if self.exceptions else 0

    def __str__(self) -> str:
        affine = {
            (0, 0): "0",
        }.get((self.slope, self.intercept))
        if affine is None:
            n_part = "" if self.slope == 0 else ("n" if self.slope == 1 else f"{self.slope}n")
            c_part = "" if self.intercept == 0 and n_part else str(self.intercept)
            affine = n_part + ("+" if n_part and c_part else "") + c_part
        if not self.exceptions:
            return affine
        ex = ",".join(f"{k}:{v}" for k, v in self.exceptions)
        return "{" + ex + "} + " + affine


@dataclass(frozen=True)
class HechlerCond:
    """A condition (s, f): finite stem s and side function f."""

    stem: tuple[int, ...]
    side: EvFun

    def __post_init__(self):
        if any(x < 0 for x in self.stem):
            raise HechlerError("stem entries are naturals")

    def __str__(self) -> str:
        return f"([{','.join(map(str, self.stem))}], {self.side})"


def concat(s: tuple[int, ...], t: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(s) + tuple(t)


def _affine_crossing(f: EvFun, g: EvFun) -> int:
    """First n from which g's affine tail is >= f's forever, given that the
    asymptotic comparison already favors g."""
    if g.slope == f.slope:
        return 0
    gap = f.intercept - g.intercept
    if gap <= 0:
        return 0
    return -(-gap // (g.slope - f.slope))  # ceil division


def ev_geq_from(g: EvFun, f: EvFun, start: int) -> bool:
    """g(n) >= f(n) for all n >= start."""
    if g.slope < f.slope or (g.slope == f.slope and g.intercept < f.intercept):
        return False
    bound = max(g.settled_from, f.settled_from, _affine_crossing(f, g))
    return all(g(n) >= f(n) for n in range(start, bound))


def ev_leq_star(f: EvFun, g: EvFun) -> bool:
    """f(n) <= g(n) for all but finitely many n.  The exceptional region is
    finite by construction, so only the affine tails decide: slope first,
    then intercept."""
    return f.slope < g.slope or (f.slope == g.slope and f.intercept <= g.intercept)


def hechler_leq(c2: HechlerCond, c1: HechlerCond) -> bool:
    """(t, g) extends (s, f): t extends s, g dominates f everywhere from
    dom(t) on, and the new stem entries sit above f."""
    t, g = c2.stem, c2.side
    s, f = c1.stem, c1.side
    if t[: len(s)] != s:
        return False
    if not ev_geq_from(g, f, len(t)):
        return False
    return all(t[n] >= f(n) for n in range(len(s), len(t)))


def ev_pointwise_max(f: EvFun, g: EvFun) -> EvFun:
    """Pointwise maximum, canonicalized back into the class."""
    if (f.slope, f.intercept) >= (g.slope, g.intercept):
        dom, other = f, g
    else:
        dom, other = g, f
    bound = max(f.settled_from, g.settled_from, _affine_crossing(other, dom))
    exceptions = {}
    for n in range(bound):
        value = max(f(n), g(n))
        if value != dom.slope * n + dom.intercept:
            exceptions[n] = value
    return EvFun.make(exceptions, dom.slope, dom.intercept)


def hechler_compatible(
    c1: HechlerCond, c2: HechlerCond
) -> tuple[bool, Optional[HechlerCond]]:
    """Compatibility with a witness: the stems must be comparable and the
    longer stem must clear the shorter condition's side function on the new
    entries; the witness keeps the longer stem over the pointwise max of the
    sides."""
    s1, s2 = c1.stem, c2.stem
    if len(s1) < len(s2):
        shorter, longer = c1, c2
    else:
        shorter, longer = c2, c1
    if longer.stem[: len(shorter.stem)] != shorter.stem:
        return False, None
    t = longer.stem
    f = shorter.side
    if not all(t[n] >= f(n) for n in range(len(shorter.stem), len(t))):
        return False, None
    witness = HechlerCond(t, ev_pointwise_max(c1.side, c2.side))
    assert hechler_leq(witness, c1) and hechler_leq(witness, c2)
    return True, witness


def antisymmetry_counterexample() -> tuple[HechlerCond, HechlerCond]:
    """Two distinct conditions extending each other: side values below the
    stem are unconstrained by the order."""
    a = HechlerCond((5,), EvFun.make({}, 0, 0))
    b = HechlerCond((5,), EvFun.make({0: 9}, 0, 0))
    return a, b


# ----------------------------------------------------------------------
# condition literal syntax: ([3,4], {0:7} + 2n+1)

_CONDITION = re.compile(
    r"^\s*\(\s*\[(?P<stem>[^\]]*)\]\s*,\s*(?P<side>.+?)\s*\)\s*$"
)
_SIDE = re.compile(r"^(?:\{(?P<ex>[^}]*)\}\s*\+\s*)?(?P<aff>.+)$")
_AFFINE = re.compile(r"^\s*(?:(?P<a>\d*)n\s*(?:\+\s*(?P<c1>\d+))?|(?P<c0>\d+))\s*$")


def parse_condition(text: str) -> HechlerCond:
    m = _CONDITION.match(text)
    if not m:
        raise HechlerError(f"cannot parse condition literal {text!r}")
    stem_text = m.group("stem").strip()
    stem = tuple(int(x) for x in stem_text.split(",")) if stem_text else ()
    side_m = _SIDE.match(m.group("side"))
    if not side_m:
        raise HechlerError(f"cannot parse side function in {text!r}")
    exceptions = {}
    if side_m.group("ex"):
        for entry in side_m.group("ex").split(","):
            k, _, v = entry.partition(":")
            exceptions[int(k)] = int(v)
    aff_m = _AFFINE.match(side_m.group("aff"))
    if not aff_m:
        raise HechlerError(f"cannot parse affine tail in {text!r}")
    if aff_m.group("c0") is not None:
        slope, intercept = 0, int(aff_m.group("c0"))
    else:
        slope = int(aff_m.group("a")) if aff_m.group("a") else 1
        intercept = int(aff_m.group("c1") or 0)
    return HechlerCond(stem, EvFun.make(exceptions, slope, intercept))
