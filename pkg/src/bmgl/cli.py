"""Command-line entry point.

Subcommands:

    analyze-poset FILE     order invariants of a poset text file
    survey N               exhaustive check of all labeled posets on N elements
    game run|audit|play    Banach-Mazur games against the Galvin 2-tactic
    hechler leq|compat     the Hechler order on condition literals
    serve                  start the HTTP session service

Exit codes: 0 success, 1 invariant/audit violation, 2 parse or usage error.
BMGL_SEED provides the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import poset_enum
from .galvin import DecodeFailure, audit_play, baire_coded_base, galvin_two_tactic
from .game import as_strategy, random_empty_player, run_game, scripted_player
from .posets import AxiomViolation, PosetError, parse_poset_text
from .regions import RegionError
from .sessions import GameSession, IllegalSessionMove

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_PARSE = 2


def _default_seed() -> int:
    return int(os.environ.get("BMGL_SEED", "0"))


# ----------------------------------------------------------------------
# analyze-poset


def cmd_analyze_poset(args) -> int:
    try:
        text = open(args.file).read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        name, poset = parse_poset_text(text)
    except AxiomViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except PosetError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    separative, witness = poset.is_separative()
    souslin = poset.souslin_number()
    pnt, minimal = poset.pi_noetherian_type(exhaustive=args.exhaustive)
    nt_all = poset.noetherian_type(poset.elements)
    nt_min = poset.noetherian_type(minimal)
    nabla = poset.check_nabla()
    if args.json:
        print(
            json.dumps(
                {
                    "name": name,
                    "elements": len(poset),
                    "separative": separative,
                    "separative_witness": list(witness) if witness else None,
                    "souslin": souslin.value,
                    "pi_noetherian_type": pnt.value,
                    "nt_all": nt_all.value,
                    "nt_minimal": nt_min.value,
                    "nabla": nabla.verdict,
                }
            )
        )
    else:
        sep = "yes" if separative else f"no (witness {witness[0]},{witness[1]})"
        print(
            f"separative: {sep}; S={souslin.value}; πNt={pnt.value}; "
            f"nt(P)={nt_all.value}; nt(minimal)={nt_min.value}; "
            f"▽: {nabla.verdict}"
        )
    return EXIT_OK


# ----------------------------------------------------------------------
# survey


def cmd_survey(args) -> int:
    started = time.monotonic()
    count = 0
    violations = 0
    for poset in poset_enum.enumerate_posets(args.n):
        count += 1
        pnt, _ = poset.pi_noetherian_type(exhaustive=args.oracle)
        report = poset.check_nabla()
        if pnt.value != 2 or not report.holds:
            violations += 1
    elapsed = time.monotonic() - started
    if args.json:
        print(
            json.dumps(
                {
                    "n": args.n,
                    "posets": count,
                    "violations": violations,
                    "seconds": round(elapsed, 3),
                    "oracle": args.oracle,
                }
            )
        )
    else:
        suffix = " (dense-subset oracle on)" if args.oracle else ""
        print(f"{count} posets, {violations} violations in {elapsed:.2f}s{suffix}")
    return EXIT_OK if violations == 0 else EXIT_VIOLATION


# ----------------------------------------------------------------------
# game


def cmd_game_run(args) -> int:
    base = baire_coded_base()
    system = base.system
    sigma = _sigma(system)
    tactic = galvin_two_tactic(base, sigma)
    if args.moves is not None:
        try:
            moves = [system.parse_region(m) for m in args.moves.split(";")]
        except RegionError as exc:
            print(f"parse error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        horizon = min(args.horizon, len(moves))
        empty = scripted_player(moves)
    else:
        horizon = args.horizon
        empty = random_empty_player(system, args.seed)
    transcript = run_game(system, empty, as_strategy(tactic), horizon, seed=args.seed)
    sys.stdout.write(transcript.to_json_lines(system))
    if args.audit:
        audit = audit_play(base, sigma, transcript)
        sys.stdout.write(json.dumps({"audit": audit.to_json_dict(system)}) + "\n")
        if not audit.all_match:
            return EXIT_VIOLATION
    return EXIT_OK


def cmd_game_audit(args) -> int:
    base = baire_coded_base()
    system = base.system
    sigma = _sigma(system)
    tactic = galvin_two_tactic(base, sigma)
    matches = 0
    certified = 0
    for i in range(args.n):
        seed = args.seed + i
        transcript = run_game(
            system,
            random_empty_player(system, seed),
            as_strategy(tactic),
            args.horizon,
            seed=seed,
        )
        audit = audit_play(base, sigma, transcript)
        if audit.all_match:
            matches += 1
        if transcript.outcome and transcript.outcome.kind == "NonemptyCertified":
            certified += 1
    if args.json:
        print(
            json.dumps(
                {
                    "games": args.n,
                    "all_match": matches,
                    "certified": certified,
                    "horizon": args.horizon,
                    "seed": args.seed,
                }
            )
        )
    else:
        print(f"{matches}/{args.n} all-match, {certified}/{args.n} certified")
    return EXIT_OK if matches == args.n else EXIT_VIOLATION


def cmd_game_play(args, stdin=None) -> int:
    stdin = stdin or sys.stdin
    session = GameSession("baire", args.horizon, args.seed, "closure0")
    system = session.system
    print(f"Banach-Mazur on the Baire space; horizon {args.horizon}.")
    print("You are EMPTY: enter basic clopen moves as space-separated naturals.")
    while session.outcome is None:
        print(f"U_{session.round}> ", end="", flush=True)
        line = stdin.readline()
        if not line:
            print("\n(end of input)")
            return EXIT_OK
        try:
            u = system.parse_region(line)
        except RegionError as exc:
            print(f"illegal: {exc}; try again")
            continue
        try:
            v, audit, outcome = session.move(u)
        except IllegalSessionMove as exc:
            print(f"illegal: {exc.reason}; your move must refine the machine's last reply")
            continue
        print(f"NONEMPTY replies V = {v}")
        if audit is not None:
            chain = " > ".join(str(r) for r in audit.recovered)
            print(f"decode audit: recovered {chain}; all-match: {audit.all_match}")
        if outcome is not None:
            print(json.dumps(outcome.to_json_dict()))
    return EXIT_OK


def _sigma(system):
    from .game import closure_refinement_strategy

    return closure_refinement_strategy(system)


# ----------------------------------------------------------------------
# hechler


def cmd_hechler(args) -> int:
    from .hechler import HechlerError, hechler_compatible, hechler_leq, parse_condition

    try:
        left = parse_condition(args.left)
        right = parse_condition(args.right)
    except HechlerError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.relation == "leq":
        print("true" if hechler_leq(left, right) else "false")
    else:
        ok, witness = hechler_compatible(left, right)
        print(f"compatible, witness {witness}" if ok else "incompatible")
    return EXIT_OK


# ----------------------------------------------------------------------
# serve


def cmd_serve(args) -> int:
    from .service import run_service

    run_service(host=args.host, port=args.port, persist_dir=args.persist)
    return EXIT_OK


# ----------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bmgl",
        description="Banach-Mazur game laboratory: poset invariants, coded 2-tactics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze-poset", help="order invariants of a poset file")
    p.add_argument("file")
    p.add_argument("--exhaustive", action="store_true", help="dense-subset oracle")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze_poset)

    p = sub.add_parser("survey", help="check all labeled posets on n elements")
    p.add_argument("n", type=int, choices=range(1, poset_enum.MAX_N + 1))
    p.add_argument("--oracle", action="store_true", help="dense-subset cross-check")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_survey)

    game = sub.add_parser("game", help="Banach-Mazur games")
    game_sub = game.add_subparsers(dest="game_command", required=True)

    p = game_sub.add_parser("run", help="one game, transcript on stdout")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--horizon", type=int, default=16)
    p.add_argument("--moves", help="semicolon-separated EMPTY moves, e.g. '3;3 1'")
    p.add_argument("--audit", action="store_true", help="append the decode audit")
    p.set_defaults(func=cmd_game_run)

    p = game_sub.add_parser("audit", help="seeded batch with decode audits")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--horizon", type=int, default=16)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_game_audit)

    p = game_sub.add_parser("play", help="interactive: you are EMPTY")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--horizon", type=int, default=8)
    p.set_defaults(func=cmd_game_play)

    p = sub.add_parser("hechler", help="Hechler order on condition literals")
    p.add_argument("relation", choices=["leq", "compat"])
    p.add_argument("left", help="condition literal, e.g. '([3,4], {0:7} + 2n+1)'")
    p.add_argument("right")
    p.set_defaults(func=cmd_hechler)

    p = sub.add_parser("serve", help="HTTP session service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8421)
    p.add_argument("--persist", help="directory for session persistence")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DecodeFailure as exc:
        print(f"decode failure: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
