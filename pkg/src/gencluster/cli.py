"""Command-line interface: mutate | orbit | fpoly | verify.

Exit status: 0 on success, 1 when a verification suite reports failures,
2 on input errors (bad documents, bad words, unusable options).  All output
is deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import orbit as orbit_mod
from .exactalg import NonExactDivision
from .patterns import c_vector, f_polynomial, g_vector, run_principal
from .seedcore import Seed, mutate
from .seedio import ParseError, load_seed
from .semifield import DomainError
from .verify import SUITE_NAMES, run_suite


class InputError(ValueError):
    pass


def _parse_word(text: str, n: int) -> list[int]:
    if not text.strip():
        return []
    parts = text.replace(",", " ").split()
    word = []
    for p in parts:
        try:
            k = int(p)
        except ValueError:
            raise InputError(f"word entry {p!r} is not an integer") from None
        if not 1 <= k <= n:
            raise IndexError(f"mutation direction {k} out of range 1..{n}")
        word.append(k)
    return word


def _parse_epsilon(text: str) -> int:
    if text in ("+1", "1"):
        return 1
    if text == "-1":
        return -1
    raise InputError(f"epsilon must be +1 or -1, got {text!r}")


def _render_seed_text(seed: Seed) -> str:
    lines = [f"n: {seed.n}", f"semifield: {seed.context.kind} (rank {seed.context.rank})"]
    lines.append(f"B: {seed.B}")
    lines.append(f"d: ({', '.join(str(v) for v in seed.d)})")
    for i, row in enumerate(seed.z):
        lines.append(f"z{i + 1}: ({'; '.join(str(c) for c in row)})")
    for i, xi in enumerate(seed.x):
        lines.append(f"x{i + 1} = {xi}")
    for i, yi in enumerate(seed.y):
        lines.append(f"y{i + 1} = {yi}")
    return "\n".join(lines) + "\n"


def _render_seed_json(seed: Seed) -> str:
    payload = {
        "n": seed.n,
        "semifield": seed.context.kind,
        "rank": seed.context.rank,
        "B": [list(row) for row in seed.B.rows],
        "d": list(seed.d),
        "z": [[str(c) for c in row] for row in seed.z],
        "x": [str(xi) for xi in seed.x],
        "y": [str(yi) for yi in seed.y],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cmd_mutate(args) -> int:
    seed = load_seed(args.seed)
    word = _parse_word(args.word, seed.n)
    eps = _parse_epsilon(args.epsilon)
    for k in word:
        seed = mutate(seed, k, eps)
    if args.format == "json":
        sys.stdout.write(_render_seed_json(seed))
    else:
        sys.stdout.write(_render_seed_text(seed))
    return 0


def cmd_orbit(args) -> int:
    seed = load_seed(args.seed)
    eps = _parse_epsilon(args.epsilon)
    graph = orbit_mod.explore(
        seed, args.max_depth, mode=args.mode, max_nodes=args.max_nodes, eps=eps
    )
    renderers = {
        "dot": orbit_mod.to_dot,
        "csv": orbit_mod.to_csv,
        "text": orbit_mod.to_text,
        "json": orbit_mod.to_json,
    }
    sys.stdout.write(renderers[args.format](graph))
    return 0


def cmd_fpoly(args) -> int:
    seed = load_seed(args.seed)
    word = _parse_word(args.word, seed.n)
    run = run_principal(seed.B, seed.d, seed.z, word, strict=seed.strict)
    rows = []
    for t in run.steps:
        for i in range(1, run.n + 1):
            F = f_polynomial(run, t, i)
            c = c_vector(run, t, i)
            g = g_vector(run, t, i)
            rows.append((t, i, str(F), c, g))
    if args.format == "csv":
        lines = ["t,i,F,c,g"]
        for t, i, F, c, g in rows:
            cs = " ".join(str(v) for v in c)
            gs = " ".join(str(v) for v in g)
            lines.append(f'{t},{i},"{F}","{cs}","{gs}"')
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        lines = [f"word: {' '.join(str(k) for k in word) or '(empty)'}"]
        for t, i, F, c, g in rows:
            cs = "(" + ", ".join(str(v) for v in c) + ")"
            gs = "(" + ", ".join(str(v) for v in g) + ")"
            lines.append(f"t={t} i={i}  F = {F}  c = {cs}  g = {gs}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    seed = load_seed(args.seed)
    report = run_suite(args.suite, seed, args.budget)
    sys.stdout.write("\n".join(report.lines()) + "\n")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gencluster",
        description="Exact mutation engine for generalized cluster seed patterns.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mutate = sub.add_parser("mutate", help="mutate a seed along a word and print it")
    p_mutate.add_argument("--seed", required=True, help="path to a seed document")
    p_mutate.add_argument("--word", default="", help="space-separated directions, 1-based")
    p_mutate.add_argument("--epsilon", default="+1", help="mutation sign, +1 or -1")
    p_mutate.add_argument("--format", choices=("text", "json"), default="text")
    p_mutate.set_defaults(func=cmd_mutate)

    p_orbit = sub.add_parser("orbit", help="breadth-first exchange-graph exploration")
    p_orbit.add_argument("--seed", required=True)
    p_orbit.add_argument("--max-depth", type=int, default=10)
    p_orbit.add_argument("--mode", choices=("labeled", "unlabeled"), default="labeled")
    p_orbit.add_argument("--max-nodes", type=int, default=20000)
    p_orbit.add_argument("--epsilon", default="+1")
    p_orbit.add_argument("--format", choices=("dot", "csv", "text", "json"), default="text")
    p_orbit.set_defaults(func=cmd_orbit)

    p_fpoly = sub.add_parser("fpoly", help="F-polynomial / c-vector / g-vector table")
    p_fpoly.add_argument("--seed", required=True)
    p_fpoly.add_argument("--word", default="")
    p_fpoly.add_argument("--format", choices=("csv", "text"), default="text")
    p_fpoly.set_defaults(func=cmd_fpoly)

    p_verify = sub.add_parser("verify", help="run a property suite")
    p_verify.add_argument("--seed", required=True)
    p_verify.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p_verify.add_argument("--budget", type=int, default=20, help="number of random cases")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        InputError,
        ParseError,
        DomainError,
        IndexError,
        NonExactDivision,
        FileNotFoundError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
