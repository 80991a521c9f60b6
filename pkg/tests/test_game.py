"""Game engine: legality, certification, determinism, k-tactic purity."""

from fractions import Fraction

import pytest

from bmgl.game import (
    KTactic,
    as_strategy,
    closure_refinement_strategy,
    identity_strategy,
    random_empty_player,
    run_game,
    scripted_player,
    verify_transcript,
)
from bmgl.posets import validate_poset
from bmgl.regions import (
    BaireClopen,
    BaireSystem,
    IntervalRegion,
    IntervalSystem,
    PosetSystem,
    RegionError,
    UnsupportedSystem,
)


def test_declared_souslin_numbers():
    from bmgl.posets import ExtendedCardinal

    assert BaireSystem.declared_souslin == ExtendedCardinal.aleph(1)
    assert IntervalSystem().declared_souslin == ExtendedCardinal.aleph(1)
    poset = validate_poset(["a", "b"], [])
    assert PosetSystem(poset).declared_souslin == ExtendedCardinal.finite(3)


def test_baire_region_basics():
    s = BaireSystem()
    assert s.is_subset(BaireClopen((2, 5)), BaireClopen((2,)))
    assert not s.is_subset(BaireClopen((2,)), BaireClopen((2, 5)))
    assert s.is_subset(BaireClopen(()), BaireClopen(()))
    assert s.parse_region("2 5") == BaireClopen((2, 5))
    assert s.parse_region("") == BaireClopen(())
    with pytest.raises(RegionError):
        s.parse_region("2 x")
    with pytest.raises(RegionError):
        s.region_from_json([1, -2])


def test_interval_region_basics():
    s = IntervalSystem()
    a = IntervalRegion.of((Fraction(1, 4), Fraction(1, 2)))
    assert s.is_subset(a, s.full_region())
    assert not s.is_subset(s.full_region(), a)
    merged = IntervalRegion.of((0, 1), (Fraction(1, 2), 2))
    assert merged.components == ((Fraction(0), Fraction(2)),)
    adjacent = IntervalRegion.of((0, 1), (1, 2))
    assert len(adjacent.components) == 2
    with pytest.raises(RegionError):
        IntervalRegion.of((1, 1))
    assert s.region_from_json(s.region_to_json(a)) == a


def test_baire_game_always_certified():
    system = BaireSystem()
    for seed in range(5):
        transcript = run_game(
            system,
            random_empty_player(system, seed),
            closure_refinement_strategy(system),
            8,
            seed=seed,
        )
        assert transcript.outcome.kind == "NonemptyCertified"
        assert verify_transcript(system, transcript)
        # the witness extends the final V by zeros
        final_v = transcript.rounds[-1][1]
        assert tuple(transcript.outcome.witness) == final_v.seq


def test_closure_refinement_rule():
    system = BaireSystem()
    sigma = closure_refinement_strategy(system)
    assert sigma((BaireClopen((2,)),)) == BaireClopen((2, 0))
    assert sigma((BaireClopen(()),)) == BaireClopen((0,))
    with pytest.raises(UnsupportedSystem):
        closure_refinement_strategy(IntervalSystem())


def test_interval_game_is_undetermined():
    # EMPTY shrinks rational intervals around sqrt(2) along its continued
    # fraction convergents: 1, 3/2, 7/5, 17/12, 41/29, 99/70 alternate below
    # and above, so consecutive pairs nest and trap only the irrational.
    convergents = [
        Fraction(1),
        Fraction(3, 2),
        Fraction(7, 5),
        Fraction(17, 12),
        Fraction(41, 29),
        Fraction(99, 70),
    ]
    moves = []
    for lo, hi in zip(convergents[::2], convergents[1::2]):
        moves.append(IntervalRegion.of((lo, hi)))
    system = IntervalSystem(board=(0, 2))
    transcript = run_game(
        system, scripted_player(moves), identity_strategy(), len(moves)
    )
    assert verify_transcript(system, transcript)
    assert transcript.outcome.kind == "Undetermined"
    assert transcript.outcome.horizon == len(moves)


def test_interval_multi_component_subset():
    s = IntervalSystem()
    union = IntervalRegion.of((0, Fraction(1, 4)), (Fraction(1, 2), 1))
    inner = IntervalRegion.of((Fraction(1, 8), Fraction(1, 4)), (Fraction(3, 4), 1))
    straddling = IntervalRegion.of((Fraction(1, 8), Fraction(3, 4)))
    assert s.is_subset(inner, union)
    assert not s.is_subset(straddling, union)
    shrunk = s.sample_refinement(union, __import__("random").Random(0))
    assert s.is_subset(shrunk, union) and not s.equals(shrunk, union)


def test_poset_system_game():
    poset = validate_poset(
        ["a", "b", "t"], [("a", "t"), ("b", "t")], closure=True
    )
    system = PosetSystem(poset)
    transcript = run_game(
        system, scripted_player(["t", "a", "a"]), identity_strategy(), 3
    )
    assert transcript.outcome.kind == "NonemptyCertified"
    assert transcript.outcome.witness == "a"
    # random EMPTY stays legal even once it hits a minimal element
    for seed in range(10):
        transcript = run_game(
            system, random_empty_player(system, seed), identity_strategy(), 5
        )
        assert transcript.outcome.kind == "NonemptyCertified"
        assert verify_transcript(system, transcript)


def test_illegal_moves_are_recorded():
    system = BaireSystem()
    bad_empty = scripted_player([BaireClopen((1,)), BaireClopen((2,))])
    transcript = run_game(system, bad_empty, identity_strategy(), 2)
    assert transcript.outcome.kind == "IllegalMove"
    assert transcript.outcome.round == 1
    assert transcript.outcome.mover == "EMPTY"
    assert transcript.outcome.reason == "not a subset of previous V"

    def bad_nonempty(history):
        return BaireClopen((9, 9))

    transcript = run_game(system, scripted_player([BaireClopen((1,))]), bad_nonempty, 1)
    assert transcript.outcome.kind == "IllegalMove"
    assert transcript.outcome.mover == "NONEMPTY"


def test_strategy_exception_is_forfeit():
    system = BaireSystem()

    def exploding(history):
        raise RuntimeError("boom")

    transcript = run_game(system, exploding, identity_strategy(), 2)
    assert transcript.outcome.kind == "IllegalMove"
    assert transcript.outcome.mover == "EMPTY"
    assert "boom" in transcript.outcome.reason


def test_random_empty_player_determinism_and_legality():
    system = BaireSystem()
    for seed in (0, 7, 123):
        t1 = run_game(
            system,
            random_empty_player(system, seed),
            closure_refinement_strategy(system),
            16,
            seed=seed,
        )
        t2 = run_game(
            system,
            random_empty_player(system, seed),
            closure_refinement_strategy(system),
            16,
            seed=seed,
        )
        assert t1.to_json_lines(system) == t2.to_json_lines(system)
        assert t1.outcome.kind == "NonemptyCertified"
    # legality across a batch
    for seed in range(100):
        transcript = run_game(
            system,
            random_empty_player(system, seed),
            closure_refinement_strategy(system),
            16,
        )
        assert transcript.outcome.kind == "NonemptyCertified"
        assert verify_transcript(system, transcript)


def test_random_empty_first_move_is_first_draw():
    import random as random_module

    from bmgl.game import _round_rng

    system = BaireSystem()
    for seed in range(20):
        player = random_empty_player(system, seed)
        first = player(())
        assert first == BaireClopen((_round_rng(seed, 0).randrange(10),))


def test_ktactic_window_purity():
    system = BaireSystem()

    class LastMoveTactic(KTactic):
        def __init__(self):
            super().__init__(2)

        def respond(self, window):
            return BaireClopen(window[-1].seq + (0,))

    tactic = LastMoveTactic()
    # identical windows with different pre-histories give identical replies
    window = (BaireClopen((1, 2)), BaireClopen((1, 2, 3)))
    assert tactic.respond(window) == tactic.respond(tuple(window))
    strategy = as_strategy(tactic)
    # two histories with different pre-histories but the same last two
    # EMPTY moves (1,2) and (1,2,3)
    history_a = (
        BaireClopen((1,)),
        BaireClopen((1, 2)),
        BaireClopen((1, 2)),
        BaireClopen((1, 2, 9)),
        BaireClopen((1, 2, 3)),
    )
    history_b = (
        BaireClopen((1, 2)),
        BaireClopen((1, 2, 9)),
        BaireClopen((1, 2, 3)),
    )
    assert strategy(history_a) == strategy(history_b)


def test_transcript_serialization_schema():
    import json

    system = BaireSystem()
    transcript = run_game(
        system,
        scripted_player([BaireClopen((3,))]),
        closure_refinement_strategy(system),
        1,
    )
    lines = transcript.to_json_lines(system).splitlines()
    assert json.loads(lines[0]) == {"n": 0, "U": [3], "V": [3, 0]}
    final = json.loads(lines[-1])
    assert final["outcome"] == "NonemptyCertified"
    assert final["witness"] == [3, 0]
