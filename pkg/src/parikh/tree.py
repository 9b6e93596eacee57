"""(V,A)-trees, adjunct trees, adjoining and Parikh vectors.

Trees are immutable and compare by their canonical text, e.g.
``X(Z(X(a),X(b)),Y(a,X(b)))``. An adjunct tree is a tree whose body contains
exactly one marked leaf ``*X`` standing for its root nonterminal ``X``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Union

from .errors import NotAdjoinableError, TreeSyntaxError, UnknownLetterError
from .grammar import EPS, Grammar

Vector = tuple  # tuple[int, ...] aligned to Grammar.alphabet
Path = tuple  # tuple[int, ...] of child indices from the root


class Tree:
    __slots__ = ("text",)

    def __eq__(self, other):
        return isinstance(other, Tree) and self.text == other.text

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.text)

    def __lt__(self, other):
        return self.text < other.text

    def __str__(self):
        return self.text

    def __repr__(self):
        return f"{type(self).__name__}({self.text!r})"


class Leaf(Tree):
    """Terminal or epsilon leaf."""

    __slots__ = ("symbol",)
    size = 1
    depth = 1
    nonterminals = frozenset()

    def __init__(self, symbol: str):
        self.symbol = symbol
        self.text = symbol

    @property
    def root(self):
        return self.symbol


class Hole(Tree):
    """The marked leaf of an adjunct tree, standing for nonterminal ``label``."""

    __slots__ = ("label",)
    size = 1
    depth = 1
    nonterminals = frozenset()

    def __init__(self, label: str):
        self.label = label
        self.text = "*" + label

    @property
    def root(self):
        return self.label


class Node(Tree):
    __slots__ = ("label", "children", "nonterminals", "size", "depth", "has_hole")

    def __init__(self, label: str, children: Sequence[Tree]):
        if not children:
            raise ValueError(f"node {label} needs at least one child")
        self.label = label
        self.children = tuple(children)
        self.text = label + "(" + ",".join(c.text for c in self.children) + ")"
        nts = {label}
        size = 1
        depth = 0
        holes = 0
        for c in self.children:
            nts |= c.nonterminals
            size += c.size
            depth = max(depth, c.depth)
            if isinstance(c, Hole):
                holes += 1
            elif isinstance(c, Node):
                holes += c.has_hole
        self.nonterminals = frozenset(nts)
        self.size = size
        self.depth = depth + 1
        self.has_hole = holes

    @property
    def root(self):
        return self.label


Body = Union[Node, Leaf, Hole]


class AdjunctTree:
    """An X-rooted tree with exactly one marked leaf labelled X."""

    __slots__ = ("body",)

    def __init__(self, body: Tree):
        if not isinstance(body, Node):
            raise ValueError(f"adjunct body must be a node, got {body.text}")
        if body.has_hole != 1:
            raise ValueError(f"adjunct {body.text} must contain exactly one marked leaf")
        hole = next(_holes(body))
        if hole.label != body.label:
            raise ValueError(f"marked leaf *{hole.label} does not match root {body.label}")
        self.body = body

    @property
    def root(self) -> str:
        return self.body.label

    @property
    def text(self) -> str:
        return self.body.text

    @property
    def nonterminals(self) -> frozenset:
        return self.body.nonterminals

    def __eq__(self, other):
        return isinstance(other, AdjunctTree) and self.text == other.text

    def __hash__(self):
        return hash(("adj", self.text))

    def __lt__(self, other):
        return self.text < other.text

    def __str__(self):
        return self.text

    def __repr__(self):
        return f"AdjunctTree({self.text!r})"


def _holes(t: Tree) -> Iterator[Hole]:
    if isinstance(t, Hole):
        yield t
    elif isinstance(t, Node) and t.has_hole:
        for c in t.children:
            yield from _holes(c)


# ---------------------------------------------------------------- parsing


def parse_tree(text: str) -> Tree:
    """Parse canonical tree syntax. Marked leaves ``*X`` are accepted."""
    text = text.strip()
    tree, pos = _parse_at(text, 0)
    if pos != len(text):
        raise TreeSyntaxError("trailing characters", pos)
    return tree


def parse_adjunct(text: str) -> AdjunctTree:
    tree = parse_tree(text)
    try:
        return AdjunctTree(tree)
    except ValueError as exc:
        raise TreeSyntaxError(str(exc)) from None


def _parse_at(s: str, i: int) -> tuple[Tree, int]:
    n = len(s)
    if i >= n:
        raise TreeSyntaxError("unexpected end of input", i)
    if s[i] in "(),":
        # a lone punctuation character is a terminal leaf
        return Leaf(s[i]), i + 1
    j = i
    while j < n and s[j] not in "(),":
        j += 1
    token = s[i:j]
    if j < n and s[j] == "(":
        if token.startswith("*"):
            raise TreeSyntaxError("marked leaf cannot have children", i)
        children = []
        j += 1
        while True:
            child, j = _parse_at(s, j)
            children.append(child)
            if j >= n:
                raise TreeSyntaxError(f"unclosed node {token}", j)
            if s[j] == ",":
                j += 1
            elif s[j] == ")":
                return Node(token, children), j + 1
            else:
                raise TreeSyntaxError(f"unexpected {s[j]!r}", j)
    if len(token) > 1 and token.startswith("*"):
        return Hole(token[1:]), j
    if any(c.isspace() for c in token):
        raise TreeSyntaxError(f"whitespace in token {token!r}", i)
    return Leaf(token), j


# ---------------------------------------------------------------- basic queries


def yield_of(t: Tree) -> tuple[str, ...]:
    """Left-to-right terminal leaves; epsilon and marked leaves are dropped."""
    out: list[str] = []
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Node):
            stack.extend(reversed(node.children))
        elif isinstance(node, Leaf) and node.symbol != EPS:
            out.append(node.symbol)
    return tuple(out)


def nonterminals_of(t: Union[Tree, AdjunctTree]) -> frozenset:
    return t.nonterminals


def _paths_ok(t: Tree, seen: frozenset, count_hole: bool) -> bool:
    if isinstance(t, Leaf):
        return True
    if isinstance(t, Hole):
        return not count_hole or t.label not in seen
    if t.label in seen:
        return False
    seen = seen | {t.label}
    return all(_paths_ok(c, seen, count_hole) for c in t.children)


def is_simple_tree(t: Tree) -> bool:
    """No nonterminal repeats along any root-to-leaf path."""
    return _paths_ok(t, frozenset(), True)


def is_simple_adjunct(alpha: AdjunctTree) -> bool:
    """No nonterminal repeats along any path from a child of the root.

    The marked leaf counts as an occurrence of the root nonterminal, so the
    root label may not appear above it on its path.
    """
    return all(_paths_ok(c, frozenset(), True) for c in alpha.body.children)


def _rules_ok(t: Tree, g: Grammar) -> bool:
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Node):
            if not g.has_rule(node.label, tuple(c.root for c in node.children)):
                return False
            stack.extend(node.children)
    return True


def is_derivation_tree(t: Tree, g: Grammar) -> bool:
    if not isinstance(t, Node) or t.has_hole or t.label != g.start:
        return False
    return _rules_ok(t, g)


def is_valid_adjunct(alpha: AdjunctTree, g: Grammar) -> bool:
    """Every internal node of the adjunct matches a rule of ``g``."""
    return _rules_ok(alpha.body, g)


# ---------------------------------------------------------------- positions and splicing


def subtree_at(t: Tree, path: Path) -> Tree:
    for i in path:
        t = t.children[i]
    return t


def replace_at(t: Tree, path: Path, new: Tree) -> Tree:
    if not path:
        return new
    i = path[0]
    kids = list(t.children)
    kids[i] = replace_at(kids[i], path[1:], new)
    return Node(t.label, kids)


def occurrences(t: Tree, label: str) -> list:
    """Paths of ``label``-rooted subtrees of ``t`` in pre-order (left-most first)."""
    out = []

    def walk(node, path):
        if not isinstance(node, Node) or label not in node.nonterminals:
            return
        if node.label == label:
            out.append(path)
        for i, c in enumerate(node.children):
            walk(c, path + (i,))

    walk(t, ())
    return out


def hole_path(t: Tree) -> Path:
    path = []
    while not isinstance(t, Hole):
        for i, c in enumerate(t.children):
            if isinstance(c, Hole) or (isinstance(c, Node) and c.has_hole):
                path.append(i)
                t = c
                break
        else:
            raise ValueError("tree has no marked leaf")
    return tuple(path)


def plug(alpha: AdjunctTree, t: Tree) -> Tree:
    """alpha[t]: replace the marked leaf of ``alpha`` by ``t``."""
    return replace_at(alpha.body, hole_path(alpha.body), t)


def adjoin(t: Tree, alpha: AdjunctTree, occurrence: int = 0) -> Tree:
    """Adjoin ``alpha`` at an occurrence of its root in ``t``.

    ``occurrence`` indexes the root-labelled subtrees of ``t`` in pre-order;
    the default 0 is the left-most one.
    """
    paths = occurrences(t, alpha.root)
    if not paths:
        raise NotAdjoinableError(f"{alpha.root} does not occur in {t.text}")
    if not 0 <= occurrence < len(paths):
        raise NotAdjoinableError(
            f"occurrence {occurrence} out of range; {t.text} has {len(paths)} {alpha.root}-nodes"
        )
    path = paths[occurrence]
    return replace_at(t, path, plug(alpha, subtree_at(t, path)))


# ---------------------------------------------------------------- Parikh vectors


def parikh_of_word(w: Iterable[str], g: Grammar) -> Vector:
    index = g.letter_index
    counts = [0] * len(index)
    for letter in w:
        try:
            counts[index[letter]] += 1
        except KeyError:
            raise UnknownLetterError(f"{letter!r} is not in the alphabet {g.alphabet}") from None
    return tuple(counts)


def parikh_of_tree(t: Tree, g: Grammar) -> Vector:
    return parikh_of_word(yield_of(t), g)


def parikh_of_adjunct(alpha: AdjunctTree, g: Grammar) -> Vector:
    # the marked leaf contributes nothing, exactly as alpha[X(eps)] would
    return parikh_of_word(yield_of(alpha.body), g)
