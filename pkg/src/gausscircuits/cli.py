"""Command-line interface.

One subcommand per library operation plus the acceptance suites.  Words
are passed inline (quoted) or as ``@file``; matrices always come from
files in the shared text format (first line n, then n rows; the framed
adjacency variant admits G on the diagonal).  Matrix indices on the
command line are 1-based, matching the printed rows.

Exit codes: 0 success (negative verdicts are output, not errors);
1 failed verify suite; 2 parse/format error; 3 precondition error;
4 size bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import circuits, graphs, symmat, verify, words
from .errors import (
    FormatError,
    GaussCircuitsError,
    TooLargeError,
)
from .words import FramedWord


def _load_word(arg: str) -> FramedWord:
    if arg.startswith("@"):
        arg = Path(arg[1:]).read_text()
    return words.parse(arg)


def _load_sym(path: str) -> symmat.SymMatrix:
    return symmat.from_text(Path(path).read_text())


def _load_adjacency(path: str) -> words.FramedAdjacency:
    return words.adjacency_from_text(Path(path).read_text())


def _print_sym(m: symmat.SymMatrix) -> None:
    sys.stdout.write(symmat.to_text(m))


def _order_names(w: FramedWord, mode: str) -> tuple[str, ...]:
    if mode == "sorted":
        return tuple(sorted(w.names, key=graphs.natural_key))
    return w.names


def _add_word_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("word", help="framed word, inline or @file")


def _add_order_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--order",
        choices=("first", "sorted"),
        default="first",
        help="matrix index order: first occurrence (default) or sorted letter names",
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gausscircuits",
        description="Gauss circuits of framed 4-valent graphs over GF(2)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="canonical form and framings of a word")
    _add_word_arg(p)

    p = sub.add_parser("adj", help="framed adjacency matrix of a word")
    _add_word_arg(p)
    _add_order_flag(p)

    p = sub.add_parser("gauss-exists", help="Gauss-circuit existence verdict")
    _add_word_arg(p)

    p = sub.add_parser("gauss", help="Gauss circuit: matrix, word, consistency")
    _add_word_arg(p)
    _add_order_flag(p)

    p = sub.add_parser("rotating", help="Gaussian-free word of the same graph")
    _add_word_arg(p)

    p = sub.add_parser("star", help="framed star at a letter")
    _add_word_arg(p)
    p.add_argument("letter")

    p = sub.add_parser("pivot-word", help="triple star at an interlaced pair")
    _add_word_arg(p)
    p.add_argument("letter_a")
    p.add_argument("letter_b")

    p = sub.add_parser("surgery", help="circle count after smoothing all chords")
    _add_word_arg(p)

    p = sub.add_parser("ddiagram", help="split into two interlacement-free chord sets")
    _add_word_arg(p)

    p = sub.add_parser("tours", help="all Euler tour words of the word's graph")
    _add_word_arg(p)
    p.add_argument("--max-n", type=int, default=10, help="vertex bound (default 10)")

    p = sub.add_parser("chi", help="diagonal-blind class of (A+E)^-1")
    p.add_argument("file")

    p = sub.add_parser("chi-inv", help="representative of the inverse class map")
    p.add_argument("file")

    p = sub.add_parser("loc", help="local complementation at diagonal index k")
    p.add_argument("file")
    p.add_argument("k", type=int, help="1-based index")

    p = sub.add_parser("pivot", help="pivot at off-diagonal pair (i, j)")
    p.add_argument("file")
    p.add_argument("i", type=int, help="1-based index")
    p.add_argument("j", type=int, help="1-based index")

    p = sub.add_parser("orbit", help="bounded loc/pivot orbit: size and canonical member")
    p.add_argument("file")
    p.add_argument("--max-n", type=int, default=8, help="size bound (default 8)")

    p = sub.add_parser("realize", help="search for a word with the given adjacency")
    p.add_argument("file", help="framed adjacency text (0/1/G diagonal)")
    p.add_argument("--max-n", type=int, default=7, help="search bound (default 7)")

    p = sub.add_parser("random", help="seeded random double-occurrence word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=graphs._MODES, default="any")

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("--suite", default="all", help="suite name or 'all'")
    p.add_argument("--list", action="store_true", help="list suite names")

    p = sub.add_parser("export-dot", help="interlacement graph as DOT (or JSON endpoints)")
    _add_word_arg(p)
    p.add_argument("--json", action="store_true", help="emit chord endpoints as JSON instead")

    return ap


def _cmd_parse(args) -> int:
    w = _load_word(args.word)
    print(f"word: {words.to_text(w)}")
    print(f"canonical: {words.to_text(words.canonical(w))}")
    print(f"n: {w.n}")
    print("framings:")
    for name in sorted(w.names, key=graphs.natural_key):
        print(f"  {name} {w.framings[name].value}")
    return 0


def _cmd_adj(args) -> int:
    w = _load_word(args.word)
    adj = words.adjacency(w, order=_order_names(w, args.order))
    print("letters: " + " ".join(adj.letters))
    sys.stdout.write(words.adjacency_to_text(adj))
    return 0


def _cmd_gauss_exists(args) -> int:
    w = _load_word(args.word)
    corank = circuits.gauss_corank(w)
    print(f"gauss circuit: {'yes' if corank == 0 else 'no'}")
    print(f"corank: {corank}")
    return 0


def _cmd_gauss(args) -> int:
    w = _load_word(args.word)
    res = circuits.gauss_word(w, order=_order_names(w, args.order))
    print("letters: " + " ".join(res.matrix.letters))
    sys.stdout.write(words.adjacency_to_text(res.matrix))
    print(f"word: {words.to_text(res.word)}")
    print(f"consistent: {'yes' if res.consistent else 'no'}")
    return 0


def _cmd_rotating(args) -> int:
    print(words.to_text(circuits.to_rotating(_load_word(args.word))))
    return 0


def _cmd_star(args) -> int:
    print(words.to_text(words.framed_star(_load_word(args.word), args.letter)))
    return 0


def _cmd_pivot_word(args) -> int:
    print(words.to_text(words.star_pivot(_load_word(args.word), args.letter_a, args.letter_b)))
    return 0


def _cmd_surgery(args) -> int:
    w = _load_word(args.word)
    print(f"components (simulation): {circuits.surgery_components(w)}")
    print(f"components (corank + 1): {words.adjacency(w).with_bit_diag().corank() + 1}")
    return 0


def _cmd_ddiagram(args) -> int:
    split = circuits.is_d_diagram(_load_word(args.word))
    if split is None:
        print("d-diagram: no")
    else:
        print("d-diagram: yes")
        for label, group in zip(("first", "second"), split):
            print(f"{label}: " + " ".join(sorted(group, key=graphs.natural_key)))
    return 0


def _cmd_tours(args) -> int:
    w = _load_word(args.word)
    g, _ = graphs.from_word(w)
    tours = graphs.all_euler_tours(g, max_vertices=args.max_n)
    texts = sorted(words.to_text(words.canonical(graphs.tour_word(g, t))) for t in tours)
    print(f"tours: {len(texts)}")
    for t in texts:
        print(t)
    return 0


def _cmd_chi(args) -> int:
    _print_sym(symmat.chi(_load_sym(args.file)).rep)
    return 0


def _cmd_chi_inv(args) -> int:
    _print_sym(symmat.chi_inverse(symmat.DiagClass.of(_load_sym(args.file))).rep)
    return 0


def _cmd_loc(args) -> int:
    _print_sym(symmat.loc(_load_sym(args.file), args.k - 1))
    return 0


def _cmd_pivot(args) -> int:
    _print_sym(symmat.pivot(_load_sym(args.file), args.i - 1, args.j - 1))
    return 0


def _cmd_orbit(args) -> int:
    m = _load_sym(args.file)
    orb = symmat.orbit(m, max_n=args.max_n)
    print(f"orbit size: {len(orb)}")
    print("canonical:")
    _print_sym(min(orb, key=lambda x: x.rows))
    return 0


def _cmd_realize(args) -> int:
    target = _load_adjacency(args.file)
    found = symmat.realize(target, max_n=args.max_n)
    if found is None:
        print("realizable: no")
    else:
        print("realizable: yes")
        print(f"word: {words.to_text(found)}")
    return 0


def _cmd_random(args) -> int:
    print(words.to_text(graphs.random_word(args.n, args.seed, mode=args.mode)))
    return 0


def _cmd_verify(args) -> int:
    if args.list:
        for name in verify.suite_names():
            print(name)
        return 0
    names = verify.suite_names() if args.suite == "all" else [args.suite]
    for name in names:
        if name not in verify.suite_names():
            print(f"unknown suite {name!r}; use --list", file=sys.stderr)
            return 2
    results = verify.run_suites(names)
    for r in results:
        print(verify.format_line(r))
    return 0 if all(r.passed for r in results) else 1


def _cmd_export_dot(args) -> int:
    w = _load_word(args.word)
    adj = words.adjacency(w)
    if args.json:
        payload = {
            "n": adj.n,
            "letters": [
                {
                    "name": name,
                    "framing": adj.diag[i].value,
                    "positions": [p + 1 for p in w.positions[name]],
                }
                for i, name in enumerate(adj.letters)
            ],
        }
        print(json.dumps(payload, indent=2))
        return 0
    lines = ["graph interlacement {"]
    for i, name in enumerate(adj.letters):
        lines.append(f'  "{name}" [framing="{adj.diag[i].value}"];')
    for i in range(adj.n):
        for j in range(i + 1, adj.n):
            if adj.entry(i, j):
                lines.append(f'  "{adj.letters[i]}" -- "{adj.letters[j]}";')
    lines.append("}")
    print("\n".join(lines))
    return 0


_COMMANDS = {
    "parse": _cmd_parse,
    "adj": _cmd_adj,
    "gauss-exists": _cmd_gauss_exists,
    "gauss": _cmd_gauss,
    "rotating": _cmd_rotating,
    "star": _cmd_star,
    "pivot-word": _cmd_pivot_word,
    "surgery": _cmd_surgery,
    "ddiagram": _cmd_ddiagram,
    "tours": _cmd_tours,
    "chi": _cmd_chi,
    "chi-inv": _cmd_chi_inv,
    "loc": _cmd_loc,
    "pivot": _cmd_pivot,
    "orbit": _cmd_orbit,
    "realize": _cmd_realize,
    "random": _cmd_random,
    "verify": _cmd_verify,
    "export-dot": _cmd_export_dot,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GaussCircuitsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
