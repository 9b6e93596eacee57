"""Split a derivation tree into a simple core and a set of simple pumps.

The decomposition works bottom-up: children are decomposed first, and when a
node's label reappears inside its already-decomposed children, the left-most
proper subtree with that label becomes the new core while the part above it
(with the core cut out as a marked leaf) becomes a pump.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .grammar import Grammar
from .tree import (
    AdjunctTree,
    Hole,
    Node,
    Tree,
    adjoin,
    is_derivation_tree,
    is_simple_adjunct,
    is_simple_tree,
    is_valid_adjunct,
    occurrences,
    parikh_of_adjunct,
    parikh_of_tree,
    replace_at,
    subtree_at,
)


@dataclass(frozen=True)
class Decomposition:
    core: Tree
    pumps: frozenset = frozenset()

    def sorted_pumps(self) -> list:
        return sorted(self.pumps, key=lambda a: a.text)


def decompose(t: Tree) -> Decomposition:
    if not isinstance(t, Node):
        return Decomposition(t, frozenset())
    parts = [decompose(c) for c in t.children]
    pumps = frozenset().union(*(p.pumps for p in parts))
    rebuilt = Node(t.label, [p.core for p in parts])
    # rebuilt.nonterminals includes the root itself, so look at the children
    if not any(t.label in p.core.nonterminals for p in parts):
        return Decomposition(rebuilt, pumps)
    # pre-order, skipping the root: the first hit is the left-most proper subtree
    path = occurrences(rebuilt, t.label)[1]
    core = subtree_at(rebuilt, path)
    alpha = AdjunctTree(replace_at(rebuilt, path, Hole(t.label)))
    return Decomposition(core, pumps | {alpha})


# ---------------------------------------------------------------- lemma checks


@dataclass
class LemmaReport:
    core_simple: bool
    core_derivation: bool
    pumps_simple: bool
    pumps_valid: bool
    reconstructed: bool
    # forward adjoining steps (pump, occurrence index) turning core into t
    sequence: list = field(default_factory=list)
    witness: str = ""
    search_nodes: int = 0

    @property
    def claim1(self) -> bool:
        return self.core_simple and self.core_derivation

    @property
    def claim2(self) -> bool:
        return self.pumps_simple and self.pumps_valid

    @property
    def claim3(self) -> bool:
        return self.reconstructed

    @property
    def passed(self) -> bool:
        return self.claim1 and self.claim2 and self.claim3

    def multiplicities(self) -> dict:
        counts: dict = {}
        for alpha, _ in self.sequence:
            counts[alpha] = counts.get(alpha, 0) + 1
        return counts


def _match_adjunct(pattern: Tree, t: Tree):
    """Match an adjunct body against ``t``; return the subtree at the marked leaf."""
    if isinstance(pattern, Hole):
        return t if isinstance(t, Node) and t.label == pattern.label else None
    if not isinstance(pattern, Node) or not pattern.has_hole:
        return True if pattern == t else None
    if not isinstance(t, Node) or t.label != pattern.label or len(t.children) != len(pattern.children):
        return None
    plugged = None
    for pc, tc in zip(pattern.children, t.children):
        r = _match_adjunct(pc, tc)
        if r is None:
            return None
        if r is not True:
            plugged = r
    return plugged


def _node_paths(t: Tree, label: str, path=()):
    if isinstance(t, Node) and label in t.nonterminals:
        if t.label == label:
            yield path
        for i, c in enumerate(t.children):
            yield from _node_paths(c, label, path + (i,))


def reconstruct(core: Tree, pumps, t: Tree, budget: int = 100_000):
    """Search for adjoining steps that take ``core`` to ``t`` using every pump.

    Works backwards from ``t``, removing one pump occurrence per step. Returns
    ``(steps, nodes_searched)`` where steps is a forward list of
    ``(pump, path)`` pairs, or ``(None, nodes_searched)`` if no reconstruction
    exists within ``budget`` search nodes.
    """
    pumps = sorted(pumps, key=lambda a: a.text)
    full = (1 << len(pumps)) - 1
    gains = [a.body.size - 1 for a in pumps]
    seen = set()
    nodes = 0
    # stack entries: (tree, used mask, steps so far in backward order)
    stack = [(t, 0, ())]
    while stack:
        cur, used, steps = stack.pop()
        key = (cur.text, used)
        if key in seen:
            continue
        seen.add(key)
        nodes += 1
        if nodes > budget:
            return None, nodes
        if cur.size == core.size:
            if used == full and cur == core:
                return [(pumps[i], path) for i, path in reversed(steps)], nodes
            continue
        need = sum(gains[i] for i in range(len(pumps)) if not used >> i & 1)
        if cur.size - core.size < need:
            continue
        moves = []
        for i, alpha in enumerate(pumps):
            for path in _node_paths(cur, alpha.root):
                inner = _match_adjunct(alpha.body, subtree_at(cur, path))
                if inner is None or inner is True:
                    continue
                moves.append((replace_at(cur, path, inner), used | 1 << i, steps + ((i, path),)))
        # unused pumps first: pushed last so they are popped first
        moves.sort(key=lambda m: m[1] == used)
        stack.extend(reversed(moves))
    return None, nodes


def check_lemma(t: Tree, g: Grammar, budget: int = 100_000) -> LemmaReport:
    """Check the three claims about ``decompose(t)`` for a derivation tree ``t``."""
    d = decompose(t)
    pumps = d.sorted_pumps()
    report = LemmaReport(
        core_simple=is_simple_tree(d.core),
        core_derivation=is_derivation_tree(d.core, g),
        pumps_simple=all(is_simple_adjunct(a) for a in pumps),
        pumps_valid=all(is_valid_adjunct(a, g) for a in pumps),
        reconstructed=False,
    )
    if not report.claim1:
        report.witness = f"core {d.core.text} is not a simple derivation tree"
    elif not report.claim2:
        bad = next(a for a in pumps if not (is_simple_adjunct(a) and is_valid_adjunct(a, g)))
        report.witness = f"pump {bad.text} is not a simple rule-valid adjunct"

    steps, report.search_nodes = reconstruct(d.core, pumps, t, budget)
    if steps is None:
        report.witness = report.witness or f"no reconstruction of {t.text} within {budget} search nodes"
        return report

    # replay forward with occurrence indices, as an independent check of the search
    cur = d.core
    sequence = []
    for alpha, path in steps:
        k = occurrences(cur, alpha.root).index(path)
        cur = adjoin(cur, alpha, k)
        sequence.append((alpha, k))
    report.sequence = sequence
    report.reconstructed = cur == t and {a for a, _ in sequence} == set(pumps)
    if not report.reconstructed:
        report.witness = report.witness or f"replay produced {cur.text}, expected {t.text}"
    return report


def parikh_balance(report: LemmaReport, t: Tree, core: Tree, g: Grammar) -> bool:
    """Does Φ(t) equal Φ(core) plus the pump vectors counted with multiplicity?"""
    total = list(parikh_of_tree(core, g))
    for alpha, count in report.multiplicities().items():
        for i, v in enumerate(parikh_of_adjunct(alpha, g)):
            total[i] += count * v
    return tuple(total) == parikh_of_tree(t, g)

