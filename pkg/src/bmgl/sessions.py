"""Interactive game sessions: a human (or script) plays EMPTY against the
Galvin 2-tactic, with a decode audit after every round from round 2 on.

The CLI's interactive loop and the HTTP service share this machinery, which
is what keeps their game evolutions identical for identical histories.
"""

from __future__ import annotations

import threading
from typing import Optional

from .galvin import (
    DecodeAudit,
    RoundAudit,
    audit_round,
    baire_coded_base,
    galvin_two_tactic,
)
from .game import Outcome, Transcript, closure_refinement_strategy


class IllegalSessionMove(Exception):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


class UnknownSessionConfig(ValueError):
    pass


def _baire_setup():
    base = baire_coded_base()
    return base.system, base


SYSTEMS = {"baire": _baire_setup}
SIGMAS = {"closure0": closure_refinement_strategy}


class GameSession:
    """Single-owner sequential session; the machine always answers with the
    registered 2-tactic, so replies are deterministic functions of the move
    history."""

    def __init__(self, system_id: str, horizon: int, seed: int, sigma_id: str):
        if system_id not in SYSTEMS:
            raise UnknownSessionConfig(f"unknown system {system_id!r}")
        if sigma_id not in SIGMAS:
            raise UnknownSessionConfig(f"unknown sigma {sigma_id!r}")
        if horizon < 1:
            raise UnknownSessionConfig("horizon must be >= 1")
        self.system_id = system_id
        self.sigma_id = sigma_id
        self.horizon = horizon
        self.seed = seed
        self.system, self.base = SYSTEMS[system_id]()
        self.sigma = SIGMAS[sigma_id](self.system)
        self.tactic = galvin_two_tactic(self.base, self.sigma)
        self.lock = threading.Lock()  # one sequential executor per session
        self.transcript = Transcript(
            meta={
                "system": system_id,
                "horizon": horizon,
                "seed": seed,
                "sigma": sigma_id,
            }
        )

    @property
    def round(self) -> int:
        return len(self.transcript.rounds)

    @property
    def outcome(self) -> Optional[Outcome]:
        return self.transcript.outcome

    def state(self) -> dict:
        return {
            "round": self.round,
            "horizon": self.horizon,
            "system": self.system_id,
            "sigma": self.sigma_id,
            "seed": self.seed,
            "outcome": self.outcome.to_json_dict() if self.outcome else None,
        }

    def move(self, u) -> tuple[object, Optional[RoundAudit], Optional[Outcome]]:
        """Apply one EMPTY move; returns the machine reply, the round's
        decode audit (rounds >= 2), and the outcome when the horizon is
        reached.  Raises IllegalSessionMove without committing anything."""
        with self.lock:
            if self.outcome is not None:
                raise IllegalSessionMove("game over")
            n = self.round
            if n > 0 and not self.system.is_subset(u, self.transcript.rounds[-1][1]):
                raise IllegalSessionMove("not a subset of previous V")
            window = (self.transcript.rounds[-1][0], u) if n > 0 else (u,)
            v = self.tactic.respond(window)
            self.transcript.rounds.append((u, v))
            audit = None
            if n >= 2:
                empties = [move for move, _ in self.transcript.rounds]
                replies = [reply for _, reply in self.transcript.rounds]
                audit = audit_round(self.base, self.sigma, empties, replies, n)
            if self.round == self.horizon:
                witness = self.system.witness_point(
                    [reply for _, reply in self.transcript.rounds]
                )
                if witness is not None:
                    self.transcript.outcome = Outcome(
                        "NonemptyCertified", witness=witness
                    )
                else:
                    self.transcript.outcome = Outcome(
                        "Undetermined", horizon=self.horizon
                    )
            return v, audit, self.outcome

    def transcript_json_lines(self) -> str:
        return self.transcript.to_json_lines(self.system)
