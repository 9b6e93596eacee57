"""Linear and semilinear sets of natural-number vectors, and the Parikh image.

A linear set ``Linear(b, {p1..pk})`` denotes ``{b + x1*p1 + ... + xk*pk}`` for
natural coefficients ``xi``; a semilinear set is a finite union of them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .enumeration import (
    DEFAULT_BUDGET,
    AdjunctClass,
    adjoinable,
    classify,
    enumerate_simple_adjuncts,
    enumerate_simple_trees,
)
from .errors import BudgetExceeded, DimensionMismatch
from .grammar import Grammar, parikh_dimension
from .kernels import linear_member
from .tree import parikh_of_adjunct, parikh_of_tree


def _vec(v) -> tuple:
    out = tuple(int(x) for x in v)
    if any(x < 0 for x in out):
        raise ValueError(f"vector {out} has a negative coordinate")
    return out


@dataclass(frozen=True, order=True)
class LinearSet:
    base: tuple
    periods: tuple = ()

    def __post_init__(self):
        base = _vec(self.base)
        periods = []
        for p in self.periods:
            p = _vec(p)
            if len(p) != len(base):
                raise DimensionMismatch(f"period {p} does not match base {base}")
            if any(p):
                periods.append(p)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "periods", tuple(sorted(set(periods))))

    @property
    def dimension(self) -> int:
        return len(self.base)

    def __str__(self):
        return f"{_fmt(self.base)} + <{','.join(_fmt(p) for p in self.periods)}>*"


@dataclass(frozen=True)
class SemilinearSet:
    dimension: int
    components: tuple = ()

    def __post_init__(self):
        comps = tuple(sorted(set(self.components)))
        for c in comps:
            if c.dimension != self.dimension:
                raise DimensionMismatch(f"component {c} is not {self.dimension}-dimensional")
        object.__setattr__(self, "components", comps)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __str__(self):
        return to_text(self)


def _fmt(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def member_linear(l: LinearSet, u: Sequence[int]) -> bool:
    u = tuple(u)
    if len(u) != l.dimension:
        raise DimensionMismatch(f"vector of length {len(u)} against {l.dimension}-dimensional set")
    return linear_member(l.base, l.periods, u)


def member(s: SemilinearSet, u: Sequence[int]) -> bool:
    u = tuple(u)
    if len(u) != s.dimension:
        raise DimensionMismatch(f"vector of length {len(u)} against {s.dimension}-dimensional set")
    return any(linear_member(c.base, c.periods, u) for c in s.components)


def normalize(s: SemilinearSet) -> SemilinearSet:
    """Drop components contained in another one with a superset of periods."""
    comps = s.components  # already deduplicated
    keep = []
    for c in comps:
        covered = any(
            other != c and set(c.periods) <= set(other.periods) and member_linear(other, c.base)
            for other in comps
        )
        if not covered:
            keep.append(c)
    return SemilinearSet(s.dimension, tuple(keep))


def build_image(g: Grammar, budget: int = DEFAULT_BUDGET) -> SemilinearSet:
    """Parikh image of L(g) as a semilinear set.

    Each simple derivation tree T and each adjoinable set S of adjunct classes
    contributes ``Linear(Φ(T) + ΣΦ(α), {Φ(α) : α ∈ S})``; adding one copy of
    every period to the base accounts for each member being used at least once.
    """
    trees = enumerate_simple_trees(g, budget)
    classes = classify(enumerate_simple_adjuncts(g, budget), g)
    return image_from_parts(g, trees, classes, budget)


def image_from_parts(g: Grammar, trees, members, budget: int = DEFAULT_BUDGET) -> SemilinearSet:
    """Assemble the image from simple trees and adjuncts (or adjunct classes)."""
    d = parikh_dimension(g)
    info = []
    for m in members:
        if isinstance(m, AdjunctClass):
            info.append((m, m.root, m.introduced | {m.root}, m.parikh))
        else:
            info.append((m, m.root, m.nonterminals, parikh_of_adjunct(m, g)))

    components = set()
    visited = 0
    for t in trees:
        base = parikh_of_tree(t, g)
        # members whose root can never become available are useless for t
        reach = set(t.nonterminals)
        changed = True
        while changed:
            changed = False
            for _, root, intro, _ in info:
                if root in reach and not intro <= reach:
                    reach |= intro
                    changed = True
        usable = [x for x in info if x[1] in reach]
        visited += 1 << len(usable)
        if visited > budget:
            raise BudgetExceeded("adjunct subsets", visited, budget)
        for mask in range(1 << len(usable)):
            chosen = [usable[i] for i in range(len(usable)) if mask >> i & 1]
            if chosen and not adjoinable(t, [m for m, *_ in chosen]):
                continue
            shift = list(base)
            for *_, vec in chosen:
                for i in range(d):
                    shift[i] += vec[i]
            components.add(LinearSet(tuple(shift), tuple(vec for *_, vec in chosen)))
    return SemilinearSet(d, tuple(components))


# ---------------------------------------------------------------- serialisation


def to_json(s: SemilinearSet, alphabet: Sequence[str]) -> str:
    doc = {
        "alphabet": list(alphabet),
        "linear_sets": [
            {"base": list(c.base), "periods": [list(p) for p in c.periods]} for c in s.components
        ],
    }
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> tuple:
    """Parse the JSON form; returns ``(alphabet, SemilinearSet)``."""
    doc = json.loads(text)
    alphabet = tuple(doc["alphabet"])
    comps = [LinearSet(tuple(c["base"]), tuple(tuple(p) for p in c["periods"])) for c in doc["linear_sets"]]
    return alphabet, SemilinearSet(len(alphabet), tuple(comps))


def to_text(s: SemilinearSet) -> str:
    return "".join(str(c) + "\n" for c in s.components)


def vectors_up_to(l: LinearSet, coeff_budget: int) -> Iterable[tuple]:
    """Vectors of ``l`` whose coefficients sum to at most ``coeff_budget``."""
    k = len(l.periods)

    def rec(i, left, acc):
        if i == k:
            yield tuple(acc)
            return
        p = l.periods[i]
        for x in range(left + 1):
            yield from rec(i + 1, left - x, [a + x * v for a, v in zip(acc, p)])

    yield from rec(0, coeff_budget, list(l.base))
