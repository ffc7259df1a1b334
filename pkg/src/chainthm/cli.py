"""Command-line entry point: ``chainthm <subcommand> ...``.

Exit status is 0 on success/pass, 1 when a property fails or violations
are found, and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, Tuple

from . import families as fam
from . import graph6
from .chains import ChainError, IneligibleInput, TheoremId, find_chain, read_chain, verify_chain
from .connectivity import (
    find_separation_below,
    is_internally_4c_cubic,
    quasi_violation,
    weak_violation,
)
from .enumeration import LEMMA_IDS, MODES, EXHAUSTIVE_BOUND, generate_from_base, verify_lemma, verify_theorem, write_catalog
from .graph import Graph, GraphError

CLASSES = ("3c", "4c", "w4c", "q4c", "i4c-cubic")
THEOREMS = [t.value for t in TheoremId]


class InputError(Exception):
    pass


def _load(path: str) -> List[Tuple[int, Graph]]:
    try:
        return graph6.read_file(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _below(g: Graph, k: int) -> Tuple[bool, Optional[str]]:
    if g.n <= k:
        return False, f"only {g.n} vertices"
    sep = find_separation_below(g, k)
    return sep is None, None if sep is None else str(sep)


def check_graph(g: Graph, cls: str) -> Tuple[bool, Optional[str]]:
    """(verdict, witness text) for one graph and class."""
    if cls == "3c":
        return _below(g, 3)
    if cls == "4c":
        return _below(g, 4)
    if cls == "i4c-cubic":
        if not g.is_regular(3):
            return False, "not cubic"
        if g.n < 6:
            return False, f"only {g.n} vertices"
        return is_internally_4c_cubic(g), None
    ok, why = _below(g, 3)
    if not ok:
        return ok, why
    sep = weak_violation(g) if cls == "w4c" else quasi_violation(g)
    return sep is None, None if sep is None else str(sep)


def cmd_check(args) -> int:
    status = 0
    for _, g in _load(args.file):
        ok, why = check_graph(g, args.cls)
        print(f"{graph6.encode(g)} {'true' if ok else 'false'}")
        if not ok:
            status = 1
            if why:
                print(f"  {why}")
    return status


def cmd_recognize(args) -> int:
    for _, g in _load(args.file):
        fids = fam.recognize(g)
        print(f"{graph6.encode(g)} {fam.format_families(fids) or '-'}")
    return 0


def cmd_chain(args) -> int:
    t = TheoremId.parse(args.theorem)
    graphs = _load(args.file)
    texts = []
    status = 0
    for lineno, g in graphs:
        try:
            chain = find_chain(g, t)
        except IneligibleInput as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            status = max(status, 2)
            continue
        except ChainError as exc:
            print(f"line {lineno}: {exc}", file=sys.stderr)
            status = max(status, 1)
            continue
        texts.append(chain.to_text())
    out = "\n".join(texts)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return status


def cmd_verify_chain(args) -> int:
    try:
        with open(args.chainfile) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"{args.chainfile}: {exc.strerror or exc}") from None
    try:
        chain = read_chain(text)
    except (ChainError, GraphError) as exc:
        raise InputError(f"{args.chainfile}: {exc}") from None
    rep = verify_chain(chain)
    for v in rep.violations:
        print(f"violation {v}")
    print(f"steps {len(chain)}")
    print("result pass" if rep.ok else "result fail")
    return 0 if rep.ok else 1


def _check_n(n: int) -> None:
    if not 1 <= n <= EXHAUSTIVE_BOUND:
        raise InputError(f"--max-n must be in 1..{EXHAUSTIVE_BOUND}")


def cmd_verify_theorem(args) -> int:
    _check_n(args.max_n)
    rep = verify_theorem(TheoremId.parse(args.theorem), args.max_n)
    sys.stdout.write(rep.to_text(timing=not args.no_timing))
    return 0 if rep.passed else 1


def cmd_verify_lemma(args) -> int:
    _check_n(args.max_n)
    rep = verify_lemma(args.id, args.max_n)
    sys.stdout.write(rep.to_text(timing=not args.no_timing))
    return 0 if rep.passed else 1


def cmd_generate(args) -> int:
    _check_n(args.max_n)
    t = TheoremId.parse(args.theorem)
    try:
        graphs = generate_from_base(t, args.max_n, args.mode)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if args.out:
        write_catalog(args.out, graphs)
    else:
        for g in graphs:
            print(graph6.encode(g))
    print(f"count {len(graphs)}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chainthm", description="Chain theorems for 3- and 4-connected graphs.")
    # --seed is accepted before or after the subcommand and ignored
    seed = argparse.ArgumentParser(add_help=False)
    seed.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="accepted and ignored; nothing is randomised")
    p.add_argument("--seed", type=int, default=None, help="accepted and ignored; nothing is randomised")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[seed])

    s = add("check", "test a connectivity class for each graph in a graph6 file")
    s.add_argument("file")
    s.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    s.set_defaults(fn=cmd_check)

    s = add("recognize", "print family memberships")
    s.add_argument("file")
    s.set_defaults(fn=cmd_recognize)

    s = add("chain", "build a chain to the theorem's targets")
    s.add_argument("file")
    s.add_argument("--theorem", choices=THEOREMS, required=True)
    s.add_argument("--out")
    s.set_defaults(fn=cmd_chain)

    s = add("verify-chain", "replay and check a chain file")
    s.add_argument("chainfile")
    s.set_defaults(fn=cmd_verify_chain)

    s = add("verify-theorem", "exhaustive chain check up to max-n vertices")
    s.add_argument("--theorem", choices=THEOREMS, required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--no-timing", action="store_true", help="omit the duration line")
    s.set_defaults(fn=cmd_verify_theorem)

    s = add("verify-lemma", "exhaustive lemma check up to max-n vertices")
    s.add_argument("--id", choices=LEMMA_IDS, required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--no-timing", action="store_true")
    s.set_defaults(fn=cmd_verify_lemma)

    s = add("generate", "close the targets under inverse steps")
    s.add_argument("--theorem", choices=THEOREMS, required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--mode", choices=MODES, default="class-checked")
    s.add_argument("--out")
    s.set_defaults(fn=cmd_generate)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
