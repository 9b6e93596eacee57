"""Command-line interface.

    parikh image GRAMMAR [--format json|text] [--budget N]
    parikh member GRAMMAR (--word W | --vector "(n1,...,nd)")
    parikh decompose GRAMMAR --tree T
    parikh check GRAMMAR --max-len N [--coeff-budget C] [--json]
    parikh stats GRAMMAR

``member`` tests Parikh-image membership: a word is accepted whenever some
permutation of it is in the language.

Exit codes: 0 success, 1 crosscheck mismatch or budget exceeded, 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .decompose import decompose
from .enumeration import DEFAULT_BUDGET, stats
from .errors import BudgetExceeded, GrammarError, TreeSyntaxError, UnknownLetterError
from .grammar import load_grammar, parikh_dimension
from .oracle import crosscheck
from .semilinear import build_image, member, to_json, to_text
from .tree import parikh_of_word, parse_tree


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _default_budget() -> int:
    raw = os.environ.get("PARIKH_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"PARIKH_BUDGET must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="parikh", description="Parikh images of context-free grammars")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    img = sub.add_parser("image", help="print the semilinear Parikh image")
    img.add_argument("grammar")
    img.add_argument("--format", choices=("json", "text"), default="text")
    img.add_argument("--budget", type=int, default=None)

    mem = sub.add_parser("member", help="test Parikh-image membership")
    mem.add_argument("grammar")
    grp = mem.add_mutually_exclusive_group(required=True)
    grp.add_argument("--word")
    grp.add_argument("--vector")
    mem.add_argument("--budget", type=int, default=None)

    dec = sub.add_parser("decompose", help="split a tree into core and pumps")
    dec.add_argument("grammar")
    dec.add_argument("--tree", required=True)

    chk = sub.add_parser("check", help="crosscheck the image against enumerated words")
    chk.add_argument("grammar")
    chk.add_argument("--max-len", type=int, required=True)
    chk.add_argument("--coeff-budget", type=int, default=4)
    chk.add_argument("--budget", type=int, default=None)
    chk.add_argument("--json", action="store_true", help="print the report as JSON")

    st = sub.add_parser("stats", help="print enumeration counts")
    st.add_argument("grammar")
    st.add_argument("--budget", type=int, default=None)
    return p


def _tokenize_word(word: str, alphabet) -> list:
    if any(c.isspace() for c in word):
        return word.split()
    # greedy longest match against the alphabet
    letters = sorted(alphabet, key=len, reverse=True)
    out, i = [], 0
    while i < len(word):
        for a in letters:
            if word.startswith(a, i):
                out.append(a)
                i += len(a)
                break
        else:
            raise UnknownLetterError(f"cannot split {word!r} into alphabet letters at offset {i}")
    return out


def _parse_vector(text: str, d: int) -> tuple:
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    try:
        vec = tuple(int(x) for x in body.split(",") if x.strip()) if body.strip() else ()
    except ValueError:
        raise _UsageError(f"malformed vector {text!r}") from None
    if len(vec) != d or any(x < 0 for x in vec):
        raise _UsageError(f"vector {text!r} must have {d} nonnegative coordinates")
    return vec


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        budget = getattr(args, "budget", None)
        if budget is None:
            budget = _default_budget()
        g = load_grammar(args.grammar)

        if args.command == "image":
            image = build_image(g, budget)
            out.write(to_json(image, g.alphabet) + "\n" if args.format == "json" else to_text(image))
            return 0

        if args.command == "member":
            if args.word is not None:
                vec = parikh_of_word(_tokenize_word(args.word, g.alphabet), g)
            else:
                vec = _parse_vector(args.vector, parikh_dimension(g))
            out.write(("true" if member(build_image(g, budget), vec) else "false") + "\n")
            return 0

        if args.command == "decompose":
            d = decompose(parse_tree(args.tree))
            out.write(f"core: {d.core.text}\n")
            for alpha in d.sorted_pumps():
                out.write(f"pump: {alpha.text}\n")
            return 0

        if args.command == "check":
            report = crosscheck(g, args.max_len, args.coeff_budget, budget=budget)
            if args.json:
                out.write(json.dumps(report.to_dict(), separators=(",", ":")) + "\n")
            else:
                out.write(report.to_text())
            return 0 if report.passed else 1

        if args.command == "stats":
            out.write(stats(g, budget).to_text())
            return 0
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except (GrammarError, TreeSyntaxError, UnknownLetterError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except BudgetExceeded as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
