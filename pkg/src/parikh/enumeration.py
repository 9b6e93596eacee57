"""Finite enumeration of simple derivation trees and simple adjunct trees.

Rather than collecting decomposition cores and pumps over the infinite set of
derivation trees, we enumerate every rule-valid simple derivation tree and
every rule-valid simple adjunct tree. These finite sets contain all cores and
pumps that decomposition can produce, and adjoining rule-valid adjuncts onto
rule-valid trees never leaves the grammar, so the resulting Parikh image is
the same.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Union

from .errors import BudgetExceeded
from .grammar import NONTERMINAL, Grammar
from .kernels import closure_covers
from .tree import AdjunctTree, Hole, Leaf, Node, Tree, parikh_of_adjunct

DEFAULT_BUDGET = 10**6


class _Counter:
    def __init__(self, what, budget):
        self.what = what
        self.budget = budget
        self.count = 0

    def add(self, n=1):
        self.count += n
        if self.count > self.budget:
            raise BudgetExceeded(self.what, self.count, self.budget)


class _Expander:
    """Memoised generation of subtrees under a path constraint."""

    def __init__(self, g: Grammar, counter: _Counter):
        self.g = g
        self.counter = counter
        self.memo: dict = {}
        self.hole_memo: dict = {}

    def plain(self, x: str, path: frozenset) -> tuple:
        """Simple x-rooted trees whose paths avoid ``path``."""
        if x in path:
            return ()
        key = (x, path)
        if key in self.memo:
            return self.memo[key]
        below = path | {x}
        out = []
        for rule in self.g.rules_by_lhs[x]:
            options = [self._child_options(sym, below) for sym in rule.rhs]
            for combo in itertools.product(*options):
                out.append(Node(x, combo))
                self.counter.add()
        result = tuple(out)
        self.memo[key] = result
        return result

    def with_hole(self, y: str, path: frozenset, root: str) -> tuple:
        """y-rooted trees holding the single marked leaf ``*root``.

        The marked leaf counts as an occurrence of ``root`` on its own path,
        so ``root`` may not label any node between y and the marked leaf.
        """
        if y in path or y == root:
            return ()
        key = (y, path, root)
        if key in self.hole_memo:
            return self.hole_memo[key]
        below = path | {y}
        out = []
        for rule in self.g.rules_by_lhs[y]:
            out.extend(self._place_hole(y, rule.rhs, below, root))
        result = tuple(out)
        self.hole_memo[key] = result
        return result

    def _place_hole(self, label, rhs, below, root):
        plain = [self._child_options(sym, below) for sym in rhs]
        for k, sym in enumerate(rhs):
            if sym.kind != NONTERMINAL:
                continue
            if sym.name == root:
                hole_opts = (Hole(root),)
            else:
                hole_opts = self.with_hole(sym.name, below, root)
            if not hole_opts:
                continue
            options = plain[:k] + [hole_opts] + plain[k + 1:]
            for combo in itertools.product(*options):
                self.counter.add()
                yield Node(label, combo)

    def _child_options(self, sym, path):
        if sym.kind == NONTERMINAL:
            return self.plain(sym.name, path)
        return (Leaf(sym.name),)


def enumerate_simple_trees(g: Grammar, budget: int = DEFAULT_BUDGET) -> tuple:
    """All simple derivation trees of ``g``, sorted by canonical text."""
    counter = _Counter("simple trees", budget)
    trees = _Expander(g, counter).plain(g.start, frozenset())
    return tuple(sorted(set(trees), key=lambda t: t.text))


def enumerate_simple_adjuncts(g: Grammar, budget: int = DEFAULT_BUDGET) -> tuple:
    """All rule-valid simple adjunct trees of ``g``, for every root."""
    counter = _Counter("simple adjuncts", budget)
    ex = _Expander(g, counter)
    found = set()
    for x in g.nonterminals:
        for rule in g.rules_by_lhs[x]:
            # the root itself is not on any child path
            for body in ex._place_hole(x, rule.rhs, frozenset(), x):
                found.add(AdjunctTree(body))
    return tuple(sorted(found, key=lambda a: a.text))


@dataclass(frozen=True)
class AdjunctClass:
    """Adjuncts with the same root, nonterminal set and Parikh vector."""

    root: str
    introduced: frozenset
    parikh: tuple
    representative: AdjunctTree = field(default=None, compare=False, repr=False)

    def sort_key(self):
        return (self.root, tuple(sorted(self.introduced)), self.parikh)


def classify(adjuncts: Iterable[AdjunctTree], g: Grammar) -> tuple:
    classes: dict = {}
    for alpha in sorted(adjuncts, key=lambda a: a.text):
        key = (alpha.root, alpha.nonterminals, parikh_of_adjunct(alpha, g))
        if key not in classes:
            classes[key] = AdjunctClass(*key, representative=alpha)
    return tuple(sorted(classes.values(), key=AdjunctClass.sort_key))


Member = Union[AdjunctTree, AdjunctClass]


def _root_and_intro(m: Member):
    if isinstance(m, AdjunctClass):
        return m.root, m.introduced
    return m.root, m.nonterminals


def adjoinable(t: Union[Tree, Iterable[str]], s: Iterable[Member]) -> bool:
    """Can every member of ``s`` be adjoined, in some order, starting from ``t``?

    ``t`` may be a tree or directly a set of nonterminal names.
    """
    have = t.nonterminals if isinstance(t, Tree) else frozenset(t)
    members = [_root_and_intro(m) for m in s]
    names = sorted(set(have).union(*(intro | {root} for root, intro in members)))
    bit = {name: 1 << i for i, name in enumerate(names)}

    def mask(xs):
        out = 0
        for x in xs:
            out |= bit[x]
        return out

    return closure_covers(
        mask(have),
        [bit[root] for root, _ in members],
        [mask(intro) for _, intro in members],
    )


@dataclass
class Stats:
    simple_trees: int
    simple_adjuncts: int
    adjunct_classes: int
    per_nonterminal: list  # (name, adjuncts, classes)

    def to_text(self) -> str:
        lines = [
            f"simple_trees: {self.simple_trees}",
            f"simple_adjuncts: {self.simple_adjuncts}",
            f"adjunct_classes: {self.adjunct_classes}",
            "nonterminal adjuncts classes",
        ]
        lines += [f"{name} {a} {c}" for name, a, c in self.per_nonterminal]
        return "\n".join(lines) + "\n"


def stats(g: Grammar, budget: int = DEFAULT_BUDGET) -> Stats:
    trees = enumerate_simple_trees(g, budget)
    adjuncts = enumerate_simple_adjuncts(g, budget)
    classes = classify(adjuncts, g)
    per = [
        (x, sum(a.root == x for a in adjuncts), sum(c.root == x for c in classes))
        for x in g.nonterminals
    ]
    return Stats(len(trees), len(adjuncts), len(classes), per)
