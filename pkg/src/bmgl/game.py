"""The Banach-Mazur referee: strategies, k-tactics, transcripts.

Plays are truncated at a configurable horizon.  Winning is certification,
not truth: at the horizon the region system is asked for a point of the
V-chain, and the outcome is NonemptyCertified only when it produces one;
Undetermined is an honest third outcome, since emptiness of the intersection
at omega is not decidable from finite data.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .regions import UnsupportedSystem

# A strategy maps the full alternating history U0,V0,...,(U_n) to the next
# move: NONEMPTY sees odd-length histories ending in U_n, EMPTY even-length
# histories ending in V_{n-1} (empty for the opening move).
Strategy = Callable[[tuple], object]

EMPTY_PLAYER = "EMPTY"
NONEMPTY_PLAYER = "NONEMPTY"


@dataclass(frozen=True)
class Outcome:
    kind: str  # "NonemptyCertified" | "Undetermined" | "IllegalMove"
    witness: object = None
    horizon: Optional[int] = None
    round: Optional[int] = None
    mover: Optional[str] = None
    reason: Optional[str] = None

    def to_json_dict(self) -> dict:
        if self.kind == "NonemptyCertified":
            return {"outcome": self.kind, "witness": self.witness}
        if self.kind == "Undetermined":
            return {"outcome": self.kind, "horizon": self.horizon}
        return {
            "outcome": self.kind,
            "round": self.round,
            "mover": self.mover,
            "reason": self.reason,
        }


@dataclass
class Transcript:
    """Alternating legal move sequence with outcome certification."""

    rounds: list[tuple[object, object]] = field(default_factory=list)
    outcome: Optional[Outcome] = None
    meta: dict = field(default_factory=dict)

    def to_json_lines(self, system) -> str:
        lines = [
            json.dumps(
                {
                    "n": n,
                    "U": system.region_to_json(u),
                    "V": system.region_to_json(v),
                }
            )
            for n, (u, v) in enumerate(self.rounds)
        ]
        if self.outcome is not None:
            lines.append(json.dumps(self.outcome.to_json_dict()))
        return "\n".join(lines) + "\n" if lines else ""


class KTactic:
    """A responder that sees only the opponent's previous k moves.

    Purity is structural: ``respond`` receives the window and nothing else.
    Subclasses implement ``respond``.
    """

    def __init__(self, k: int):
        self.k = k

    def respond(self, window: tuple) -> object:
        raise NotImplementedError


def as_strategy(tactic: KTactic) -> Strategy:
    """Wrap a k-tactic as a full-history strategy by slicing the window."""

    def play(history: tuple):
        empties = history[0::2]
        return tactic.respond(tuple(empties[-tactic.k :]))

    return play


def run_game(
    system,
    empty_player: Strategy,
    nonempty_player: Strategy,
    horizon: int,
    seed: Optional[int] = None,
) -> Transcript:
    """Referee a play: alternate moves, validate containment each half-round,
    and certify the outcome at the horizon via the system's witness oracle.
    Strategy exceptions surface as forfeits of the raising player."""
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    transcript = Transcript(meta={"system": system.name, "horizon": horizon})
    if seed is not None:
        transcript.meta["seed"] = seed
    history: list = []
    for n in range(horizon):
        try:
            u = empty_player(tuple(history))
        except Exception as exc:  # noqa: BLE001 - forfeits are part of the contract
            transcript.outcome = Outcome(
                "IllegalMove", round=n, mover=EMPTY_PLAYER, reason=f"forfeit: {exc}"
            )
            return transcript
        if u is None or (history and not system.is_subset(u, history[-1])):
            transcript.outcome = Outcome(
                "IllegalMove",
                round=n,
                mover=EMPTY_PLAYER,
                reason="not a subset of previous V",
            )
            return transcript
        history.append(u)
        try:
            v = nonempty_player(tuple(history))
        except Exception as exc:  # noqa: BLE001
            transcript.outcome = Outcome(
                "IllegalMove", round=n, mover=NONEMPTY_PLAYER, reason=f"forfeit: {exc}"
            )
            return transcript
        if v is None or not system.is_subset(v, u):
            transcript.outcome = Outcome(
                "IllegalMove",
                round=n,
                mover=NONEMPTY_PLAYER,
                reason="not a subset of previous U",
            )
            return transcript
        history.append(v)
        transcript.rounds.append((u, v))
    witness = system.witness_point([v for _, v in transcript.rounds])
    if witness is not None:
        transcript.outcome = Outcome("NonemptyCertified", witness=witness)
    else:
        transcript.outcome = Outcome("Undetermined", horizon=horizon)
    return transcript


def verify_transcript(system, transcript: Transcript) -> bool:
    """Post-hoc machine check of the nested-chain invariant at every index."""
    previous = None
    for u, v in transcript.rounds:
        if previous is not None and not system.is_subset(u, previous):
            return False
        if not system.is_subset(v, u):
            return False
        previous = v
    return True


def closure_refinement_strategy(system) -> Strategy:
    """The compact-space rule: answer U with a refinement whose closure
    stays inside U.  On the Baire system every basic clopen is closed and
    the move appends the symbol 0; systems without a closed-refinement
    oracle are unsupported."""
    if not hasattr(system, "closed_refinement"):
        raise UnsupportedSystem(
            f"system {system.name!r} has no closed-refinement oracle"
        )

    def play(history: tuple):
        return system.closed_refinement(history[-1])

    return play


def identity_strategy() -> Strategy:
    """NONEMPTY plays V = U; always legal."""

    def play(history: tuple):
        return history[-1]

    return play


def scripted_player(moves: Sequence) -> Strategy:
    """Plays a fixed move list; used for human input replay and tests."""

    def play(history: tuple):
        n = len(history) // 2
        if n >= len(moves):
            raise IndexError(f"script exhausted at round {n}")
        return moves[n]

    return play


def _round_rng(seed: int, n: int) -> random.Random:
    return random.Random(((seed * 0x9E3779B97F4A7C15) ^ (n * 0xBF58476D1CE4E5B9)) & (2**63 - 1))


class RandomEmptyPlayer:
    """Seeded, reproducible legal refinements for EMPTY.

    A pure function of (seed, history): round n draws from an rng derived
    from the seed and n only, so identical seeds replay identical games.
    On the Baire system the opening move appends exactly one uniformly drawn
    symbol in 0..9; later moves append one symbol and then optionally more.
    """

    def __init__(self, system, seed: int, extend_probability: float = 0.5):
        self.system = system
        self.seed = seed
        self.extend_probability = extend_probability

    def __call__(self, history: tuple):
        n = len(history) // 2
        rng = _round_rng(self.seed, n)
        if history:
            base = history[-1]
        else:
            base = self.system.full_region()
            if base is None:
                return self.system.sample_element(rng)
        move = self.system.sample_refinement(base, rng)
        if n >= 1:
            extra = 0
            while extra < 3 and rng.random() < self.extend_probability:
                move = self.system.sample_refinement(move, rng)
                extra += 1
        return move


def random_empty_player(system, seed: int) -> RandomEmptyPlayer:
    return RandomEmptyPlayer(system, seed)
