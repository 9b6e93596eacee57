"""Brute-force ground truth for the Parikh image.

Nothing here goes through the decomposition or the simple-tree enumeration:
words are generated straight from the grammar rules, two different ways, and
the computed semilinear set is compared against them in both directions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .grammar import EPSILON, NONTERMINAL, TERMINAL, Grammar
from .semilinear import SemilinearSet, build_image, member, vectors_up_to
from .tree import Leaf, Node, Tree, parikh_of_word


def _concat(left: dict, right: dict, max_len: int) -> dict:
    out: dict = {}
    for la, words_a in left.items():
        for lb, words_b in right.items():
            n = la + lb
            if n > max_len:
                continue
            bucket = out.setdefault(n, set())
            for u in words_a:
                for v in words_b:
                    bucket.add(u + v)
    return out


def enumerate_words(g: Grammar, max_len: int) -> frozenset:
    """All words of L(g) with at most ``max_len`` letters, as tuples of terminals.

    Rounds of a least-fixpoint closure over a table indexed by (nonterminal,
    length): each round re-derives every rule from the current table, and the
    loop stops when a round adds nothing.
    """
    table = {x: {} for x in g.nonterminals}

    def words_of(sym):
        if sym.kind == TERMINAL:
            return {1: {(sym.name,)}} if max_len >= 1 else {}
        if sym.kind == EPSILON:
            return {0: {()}}
        return table[sym.name]

    changed = True
    while changed:
        changed = False
        for rule in g.rules:
            acc = {0: {()}}
            for sym in rule.rhs:
                acc = _concat(acc, words_of(sym), max_len)
                if not acc:
                    break
            target = table[rule.lhs]
            for n, ws in acc.items():
                bucket = target.setdefault(n, set())
                before = len(bucket)
                bucket |= ws
                if len(bucket) != before:
                    changed = True
    return frozenset(w for ws in table[g.start].values() for w in ws)


def derivable_lengths(g: Grammar, max_len: int) -> dict:
    """Yield lengths (up to ``max_len``) each nonterminal can derive."""
    lens = {x: set() for x in g.nonterminals}
    changed = True
    while changed:
        changed = False
        for rule in g.rules:
            acc = {0}
            for sym in rule.rhs:
                if sym.kind == TERMINAL:
                    opts = {1}
                elif sym.kind == EPSILON:
                    opts = {0}
                else:
                    opts = lens[sym.name]
                acc = {a + b for a in acc for b in opts if a + b <= max_len}
            if not acc <= lens[rule.lhs]:
                lens[rule.lhs] |= acc
                changed = True
    return lens


def enumerate_words_by_trees(g: Grammar, max_len: int) -> frozenset:
    """Second, independent enumeration of the same words.

    Walks derivation trees top-down, splitting the target yield length among
    the children. Only trees with no redundant segment are visited: along a
    path, a nonterminal may not repeat while the yield length stays the same
    (such a segment could be cut out without changing the word). Every word
    has such a tree, and there are finitely many of them per length.
    """
    lens = derivable_lengths(g, max_len)

    @lru_cache(maxsize=None)
    def gen(x: str, n: int, same: frozenset) -> frozenset:
        # same: nonterminals above x on the path whose subtree yield is also n
        out = set()
        below = same | {x}
        for rule in g.rules_by_lhs[x]:
            out |= split(rule.rhs, 0, n, n, below)
        return frozenset(out)

    def split(rhs, i, left, parent_len, below) -> set:
        if i == len(rhs):
            return {()} if left == 0 else set()
        sym = rhs[i]
        if sym.kind == TERMINAL:
            if left < 1:
                return set()
            return {(sym.name,) + rest for rest in split(rhs, i + 1, left - 1, parent_len, below)}
        if sym.kind == EPSILON:
            return split(rhs, i + 1, left, parent_len, below)
        out = set()
        for m in sorted(lens[sym.name]):
            if m > left:
                break
            same = below if m == parent_len else frozenset()
            if sym.name in same:
                continue
            heads = gen(sym.name, m, same)
            if not heads:
                continue
            tails = split(rhs, i + 1, left - m, parent_len, below)
            out |= {h + t for h in heads for t in tails}
        return out

    words = set()
    for n in range(max_len + 1):
        if n in lens[g.start]:
            words |= gen(g.start, n, frozenset())
    return frozenset(words)


def derivation_trees(g: Grammar, max_nodes: int) -> list:
    """Every derivation tree of ``g`` with at most ``max_nodes`` nodes."""

    @lru_cache(maxsize=None)
    def rooted(x: str, n: int) -> tuple:
        out = []
        for rule in g.rules_by_lhs[x]:
            for kids in fill(rule.rhs, n - 1):
                out.append(Node(x, kids))
        return tuple(out)

    def fill(rhs, n):
        if not rhs:
            if n == 0:
                yield ()
            return
        sym, rest = rhs[0], rhs[1:]
        if sym.kind != NONTERMINAL:
            if n >= 1:
                for tail in fill(rest, n - 1):
                    yield (Leaf(sym.name),) + tail
            return
        # every remaining symbol needs at least one node
        for m in range(2, n - len(rest) + 1):
            heads = rooted(sym.name, m)
            if not heads:
                continue
            for tail in fill(rest, n - m):
                for h in heads:
                    yield (h,) + tail

    return [t for n in range(1, max_nodes + 1) for t in rooted(g.start, n)]


def min_heights(g: Grammar) -> dict:
    """Smallest possible depth (nodes on the longest path) of a complete x-tree."""
    inf = float("inf")
    h = {x: inf for x in g.nonterminals}
    changed = True
    while changed:
        changed = False
        for rule in g.rules:
            cand = 1 + max(h[s.name] if s.kind == NONTERMINAL else 1 for s in rule.rhs)
            if cand < h[rule.lhs]:
                h[rule.lhs] = cand
                changed = True
    return h


def random_derivation_tree(g: Grammar, max_depth: int, rng: random.Random) -> Tree:
    """Uniform choice among the rules that can still finish within ``max_depth``."""
    h = min_heights(g)
    if h[g.start] > max_depth:
        raise ValueError(f"no derivation tree of depth <= {max_depth}")

    def height(sym):
        return h[sym.name] if sym.kind == NONTERMINAL else 1

    def grow(x, room):
        rules = [r for r in g.rules_by_lhs[x] if 1 + max(height(s) for s in r.rhs) <= room]
        rule = rng.choice(rules)
        kids = [grow(s.name, room - 1) if s.kind == NONTERMINAL else Leaf(s.name) for s in rule.rhs]
        return Node(x, kids)

    return grow(g.start, max_depth)


def adjoinable_by_permutation(available, members) -> bool:
    """Ground truth for adjoinability: try every ordering of ``members``.

    ``members`` are (root, introduced) pairs.
    """
    members = list(members)
    if not members:
        return True
    for order in itertools.permutations(members):
        have = set(available)
        for root, intro in order:
            if root not in have:
                break
            have |= intro
        else:
            return True
    return False


# ---------------------------------------------------------------- crosscheck


@dataclass
class CrossCheckReport:
    max_len: int
    coeff_budget: int
    words_checked: int
    vectors_generated: int = 0
    missing_vectors: list = field(default_factory=list)
    unrealized_vectors: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.missing_vectors and not self.unrealized_vectors

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "max_len": self.max_len,
            "coeff_budget": self.coeff_budget,
            "words_checked": self.words_checked,
            "vectors_generated": self.vectors_generated,
            "missing_vectors": [list(v) for v in self.missing_vectors],
            "unrealized_vectors": [list(v) for v in self.unrealized_vectors],
        }

    def to_text(self) -> str:
        fmt = lambda v: "(" + ",".join(map(str, v)) + ")"  # noqa: E731
        lines = [
            f"result: {'pass' if self.passed else 'FAIL'}",
            f"max_len: {self.max_len}",
            f"coeff_budget: {self.coeff_budget}",
            f"words_checked: {self.words_checked}",
            f"vectors_generated: {self.vectors_generated}",
            f"missing_vectors: {len(self.missing_vectors)}",
        ]
        lines += ["  " + fmt(v) for v in self.missing_vectors]
        lines.append(f"unrealized_vectors: {len(self.unrealized_vectors)}")
        lines += ["  " + fmt(v) for v in self.unrealized_vectors]
        return "\n".join(lines) + "\n"


def crosscheck(
    g: Grammar,
    max_len: int,
    coeff_budget: int = 4,
    image: SemilinearSet | None = None,
    budget: int | None = None,
) -> CrossCheckReport:
    """Compare the image against all words of length <= ``max_len``.

    Direction 1: every enumerated word's Parikh vector is in the image.
    Direction 2: every image vector reachable with coefficient sum <=
    ``coeff_budget`` and total <= ``max_len`` is the vector of some word.
    """
    if image is None:
        image = build_image(g) if budget is None else build_image(g, budget)
    words = enumerate_words(g, max_len)
    realized = {parikh_of_word(w, g) for w in words}
    report = CrossCheckReport(max_len, coeff_budget, len(words))
    report.missing_vectors = sorted(v for v in realized if not member(image, v))
    unrealized = set()
    for comp in image.components:
        for u in vectors_up_to(comp, coeff_budget):
            if sum(u) > max_len:
                continue
            report.vectors_generated += 1
            if u not in realized:
                unrealized.add(u)
    report.unrealized_vectors = sorted(unrealized)
    return report
