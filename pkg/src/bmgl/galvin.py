"""The coding transform: full-information strategies to 2-tactics.

NONEMPTY plays inside a coded pi-base: a family closed under a selector
``pi`` (pi(U) is a member inside U) where each member V knows its finitely
many supersets in the family and carries an injection ``psi(V, .)`` from
finite sets of those supersets into a cellular family of members strictly
inside V.  Each NONEMPTY reply is computed inside psi-image regions, so a
consecutive pair of EMPTY moves pins down the unique cellular-family member
the play went through, and inverting psi recovers the whole history of
selector values.  Replaying the auxiliary game on those values reconstructs
every past move, which turns any full-information strategy into a 2-tactic
whose plays win whenever the original strategy's do.

On the Baire board: supersets of [s] are its prefixes, and psi marks a set
of prefixes as a bitmask appended as one extra symbol.  The mask is
invertible in O(|s|) and keeps transcripts byte-stable; any injective coding
into pairwise-disjoint child clopens would do.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .game import KTactic, Strategy, Transcript
from .regions import BaireClopen, BaireSystem, RegionError


class GalvinError(ValueError):
    pass


class DecodeFailure(GalvinError):
    """The observed window was not produced by this coding."""


class BaireCodedBase:
    """The coded pi-base of all basic clopen sets of the Baire space.

    supersets([s]) lists the prefixes of s, shortest first, so the prefix of
    length i sits at index i; psi([s], F) appends the bitmask over those
    indices as a single new symbol.  The psi image is a cellular family
    strictly inside [s] (children with distinct last symbols), and pi is the
    identity on basic clopens (the least shortest clopen inside [s] is [s]).
    """

    system = BaireSystem()

    def member(self, region) -> bool:
        return isinstance(region, BaireClopen)

    def supersets(self, region: BaireClopen) -> list[BaireClopen]:
        return [BaireClopen(region.seq[:i]) for i in range(len(region.seq) + 1)]

    def pi(self, region: BaireClopen) -> BaireClopen:
        if not self.member(region):
            raise RegionError(f"pi expects a basic clopen, got {region!r}")
        return region

    def psi(self, region: BaireClopen, supersets: Sequence[BaireClopen]) -> BaireClopen:
        mask = 0
        for w in supersets:
            if region.seq[: len(w.seq)] != w.seq:
                raise GalvinError(f"{w} is not a superset of {region}")
            mask |= 1 << len(w.seq)
        return BaireClopen(region.seq + (mask,))

    def psi_invert(self, region: BaireClopen, image: BaireClopen) -> list[BaireClopen]:
        """Decode an image back to its superset list, shortest first."""
        if len(image.seq) != len(region.seq) + 1 or image.seq[:-1] != region.seq:
            raise DecodeFailure(f"{image} is not a psi-image under {region}")
        mask = image.seq[-1]
        if mask >> (len(region.seq) + 1):
            raise DecodeFailure(
                f"mask {mask} marks prefixes beyond the region's length"
            )
        return [
            BaireClopen(region.seq[:i])
            for i in range(len(region.seq) + 1)
            if mask >> i & 1
        ]


def check_base_laws(base, seed: int = 0, samples: int = 32) -> None:
    """Sampled verification of the base laws: pi(U) inside U, V among its own
    supersets, psi injective with pairwise-disjoint image inside V, and
    psi_invert inverting psi.  Raises GalvinError on any failure."""
    rng = random.Random(seed)
    system = base.system
    for _ in range(samples):
        v = system.full_region()
        for _ in range(rng.randrange(5)):
            v = system.sample_refinement(v, rng)
        if not system.is_subset(base.pi(v), v):
            raise GalvinError(f"pi({v}) escapes {v}")
        sups = base.supersets(v)
        if not any(system.equals(w, v) for w in sups):
            raise GalvinError(f"{v} missing from its own supersets")
        subsets = {
            tuple(sorted((w.seq for w in sups if rng.random() < 0.5), key=len))
            for _ in range(4)
        }
        images = {}
        for f in subsets:
            image = base.psi(v, [BaireClopen(s) for s in f])
            if not system.is_subset(image, v) or system.equals(image, v):
                raise GalvinError(f"psi image {image} not strictly inside {v}")
            back = base.psi_invert(v, image)
            if tuple(w.seq for w in back) != f:
                raise GalvinError("psi_invert does not invert psi")
            images[f] = image
        pairs = list(images.items())
        for i, (fa, a) in enumerate(pairs):
            for fb, b in pairs[i + 1 :]:
                if system.is_subset(a, b) or system.is_subset(b, a):
                    raise GalvinError(
                        f"psi images of {fa} and {fb} are not disjoint"
                    )


def hat_simulation(
    base, empty_moves: Sequence, sigma: Strategy
) -> tuple[list, list]:
    """The auxiliary play: hat(U_n) = psi applied at pi(U_n) to the selector
    values so far, answered by sigma on the hatted history.  Returns the
    hat-move and reply lists; raises on an illegal move sequence."""
    system = base.system
    pis: list = []
    hats: list = []
    vs: list = []
    history: list = []
    for n, u in enumerate(empty_moves):
        if n > 0 and not system.is_subset(u, vs[-1]):
            raise GalvinError(f"move {n} is not inside the previous reply")
        p = base.pi(u)
        pis.append(p)
        hat = base.psi(p, pis)
        hats.append(hat)
        history.append(hat)
        v = sigma(tuple(history))
        if not system.is_subset(v, hat):
            raise GalvinError(f"sigma reply {v} escapes {hat}")
        vs.append(v)
        history.append(v)
    return hats, vs


def decode_history(base, u_prev, u_cur) -> list:
    """Recover the selector chain from two consecutive EMPTY moves.

    u_cur lies in exactly one member of the psi image at pi(u_prev); the
    inverse of psi there is the set of selector values, ordered here by
    strict reverse inclusion (they form a chain, so sorting is decoding).
    """
    p = base.pi(u_prev)
    if len(u_cur.seq) <= len(p.seq) or u_cur.seq[: len(p.seq)] != p.seq:
        raise DecodeFailure(
            f"{u_cur} is contained in no psi-image member under {p}"
        )
    image = BaireClopen(p.seq + (u_cur.seq[len(p.seq)],))
    recovered = base.psi_invert(p, image)
    if not recovered or recovered[-1].seq != p.seq:
        raise DecodeFailure(
            "decoded set does not name the previous move as its newest entry"
        )
    return recovered


class GalvinTwoTactic(KTactic):
    """The 2-tactic: decode the window, replay the auxiliary game, answer
    with the full-information strategy on the reconstructed history."""

    def __init__(self, base, sigma: Strategy):
        super().__init__(2)
        self.base = base
        self.sigma = sigma

    def respond(self, window: tuple):
        base = self.base
        system = base.system
        if len(window) == 1:
            (u0,) = window
            p0 = base.pi(u0)
            hat0 = base.psi(p0, [p0])
            return self.sigma((hat0,))
        u_prev, u_cur = window
        chain = decode_history(base, u_prev, u_cur)
        hats, vs = hat_simulation(base, chain, self.sigma)
        if not system.is_subset(u_cur, vs[-1]):
            raise DecodeFailure(
                f"window move {u_cur} is not inside the reconstructed reply"
            )
        p_cur = base.pi(u_cur)
        hat_cur = base.psi(p_cur, chain + [p_cur])
        history: list = []
        for h, v in zip(hats, vs):
            history.extend((h, v))
        history.append(hat_cur)
        reply = self.sigma(tuple(history))
        if not system.is_subset(reply, hat_cur):
            raise GalvinError(f"sigma reply {reply} escapes {hat_cur}")
        return reply


def galvin_two_tactic(base, sigma: Strategy) -> GalvinTwoTactic:
    """Build the 2-tactic after checking the base laws on a deterministic
    sample."""
    check_base_laws(base)
    return GalvinTwoTactic(base, sigma)


def baire_coded_base() -> BaireCodedBase:
    return BaireCodedBase()


# ----------------------------------------------------------------------
# audits


@dataclass(frozen=True)
class RoundAudit:
    """Decode audit for one round n >= 2 of a coded play."""

    round: int
    recovered: tuple
    hats: tuple
    vs: tuple
    history_match: bool
    hats_match: bool
    vs_match: bool
    aux_chain_match: bool

    @property
    def all_match(self) -> bool:
        return (
            self.history_match
            and self.hats_match
            and self.vs_match
            and self.aux_chain_match
        )

    def to_json_dict(self, system) -> dict:
        return {
            "round": self.round,
            "recovered": [system.region_to_json(r) for r in self.recovered],
            "hats": [system.region_to_json(r) for r in self.hats],
            "vs": [system.region_to_json(r) for r in self.vs],
            "matches": {
                "history": self.history_match,
                "hats": self.hats_match,
                "vs": self.vs_match,
                "aux_chain": self.aux_chain_match,
            },
            "all_match": self.all_match,
        }


@dataclass(frozen=True)
class DecodeAudit:
    rounds: tuple[RoundAudit, ...]
    aux_play_legal: bool
    v_chain_equal: bool

    @property
    def all_match(self) -> bool:
        return (
            self.aux_play_legal
            and self.v_chain_equal
            and all(r.all_match for r in self.rounds)
        )

    def to_json_dict(self, system) -> dict:
        return {
            "rounds": [r.to_json_dict(system) for r in self.rounds],
            "aux_play_legal": self.aux_play_legal,
            "v_chain_equal": self.v_chain_equal,
            "all_match": self.all_match,
        }


def audit_round(base, sigma: Strategy, empties: Sequence, vs_real: Sequence, n: int) -> RoundAudit:
    """Audit round n (>= 2): decode the window, reconstruct the auxiliary
    play, and compare everything against the true simulation."""
    true_pis = [base.pi(u) for u in empties[: n]]
    true_hats, true_vs = hat_simulation(base, empties[: n], sigma)
    try:
        recovered = decode_history(base, empties[n - 1], empties[n])
    except DecodeFailure:
        return RoundAudit(n, (), (), (), False, False, False, False)
    history_match = [r.seq for r in recovered] == [p.seq for p in true_pis]
    try:
        rec_hats, rec_vs = hat_simulation(base, recovered, sigma)
    except GalvinError:
        return RoundAudit(n, tuple(recovered), (), (), history_match, False, False, False)
    hats_match = [h.seq for h in rec_hats] == [h.seq for h in true_hats]
    vs_match = [v.seq for v in rec_vs] == [v.seq for v in true_vs]
    aux_chain_match = [v.seq for v in rec_vs] == [v.seq for v in vs_real[: n]]
    return RoundAudit(
        n,
        tuple(recovered),
        tuple(rec_hats),
        tuple(rec_vs),
        history_match,
        hats_match,
        vs_match,
        aux_chain_match,
    )


def audit_play(base, sigma: Strategy, transcript: Transcript) -> DecodeAudit:
    """Round-by-round verification of a coded play: decoded history equals
    the true history, reconstruction equals the direct simulation, and the
    auxiliary play (hats against sigma) is legal with the same V-chain as
    the real game."""
    system = base.system
    empties = [u for u, _ in transcript.rounds]
    vs_real = [v for _, v in transcript.rounds]
    rounds = tuple(
        audit_round(base, sigma, empties, vs_real, n)
        for n in range(2, len(empties))
    )
    try:
        hats, vs = hat_simulation(base, empties, sigma)
        aux_legal = all(
            system.is_subset(hats[i + 1], vs[i]) for i in range(len(hats) - 1)
        )
        v_chain_equal = [v.seq for v in vs] == [v.seq for v in vs_real]
    except GalvinError:
        aux_legal = False
        v_chain_equal = False
    return DecodeAudit(rounds, aux_legal, v_chain_equal)
