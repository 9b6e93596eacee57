"""Context-free grammars with a fixed terminal order.

Grammar files are line oriented::

    start: S
    alphabet: a b
    S -> a S b | eps      # comments run to end of line

The order of the ``alphabet`` line fixes the coordinate order of every
Parikh vector computed for the grammar.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import GrammarError

EPS = "eps"
TERMINAL = "terminal"
NONTERMINAL = "nonterminal"
EPSILON = "epsilon"

# characters with structural meaning in the canonical tree syntax
_TREE_PUNCT = "(),"
_RESERVED_TOKENS = {"->", "|", EPS}


@dataclass(frozen=True)
class Symbol:
    kind: str
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Rule:
    lhs: str
    rhs: tuple[Symbol, ...]

    def __post_init__(self):
        if not self.rhs:
            raise GrammarError(f"rule for {self.lhs} has an empty right-hand side")

    @property
    def rhs_names(self) -> tuple[str, ...]:
        return tuple(s.name for s in self.rhs)

    def __str__(self):
        return f"{self.lhs} -> {' '.join(self.rhs_names)}"


@dataclass(frozen=True)
class Grammar:
    start: str
    nonterminals: tuple[str, ...]
    alphabet: tuple[str, ...]
    rules: tuple[Rule, ...]

    def __post_init__(self):
        if self.start not in self.nonterminals:
            raise GrammarError(f"start symbol {self.start!r} is not a nonterminal")
        overlap = set(self.nonterminals) & set(self.alphabet)
        if overlap:
            raise GrammarError(f"symbols used as both terminal and nonterminal: {sorted(overlap)}")
        if EPS in self.nonterminals or EPS in self.alphabet:
            raise GrammarError(f"{EPS!r} is reserved for the empty word")
        for rule in self.rules:
            if rule.lhs not in self.nonterminals:
                raise GrammarError(f"rule {rule} has undeclared left-hand side")
            for sym in rule.rhs:
                ok = (
                    (sym.kind == NONTERMINAL and sym.name in self.nonterminals)
                    or (sym.kind == TERMINAL and sym.name in self.alphabet)
                    or (sym.kind == EPSILON and sym.name == EPS)
                )
                if not ok:
                    raise GrammarError(f"rule {rule} uses undeclared symbol {sym.name!r}")

    @cached_property
    def rule_index(self) -> dict[str, frozenset[tuple[str, ...]]]:
        """Map each nonterminal to the set of its right-hand sides (as names)."""
        index: dict[str, set] = {x: set() for x in self.nonterminals}
        for rule in self.rules:
            index[rule.lhs].add(rule.rhs_names)
        return {x: frozenset(v) for x, v in index.items()}

    @cached_property
    def rules_by_lhs(self) -> dict[str, tuple[Rule, ...]]:
        out: dict[str, list] = {x: [] for x in self.nonterminals}
        for rule in self.rules:
            out[rule.lhs].append(rule)
        return {x: tuple(v) for x, v in out.items()}

    @cached_property
    def letter_index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    def has_rule(self, lhs: str, rhs_names: tuple[str, ...]) -> bool:
        return rhs_names in self.rule_index.get(lhs, ())

    def is_nonterminal(self, name: str) -> bool:
        return name in self.rule_index

    def to_text(self) -> str:
        lines = [f"start: {self.start}", "alphabet: " + " ".join(self.alphabet)]
        for x in self.nonterminals:
            alts = self.rules_by_lhs[x]
            if alts:
                lines.append(f"{x} -> " + " | ".join(" ".join(r.rhs_names) for r in alts))
        return "\n".join(lines) + "\n"


def parikh_dimension(g: Grammar) -> int:
    return len(g.alphabet)


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def _tokens_with_columns(text: str, offset: int = 0):
    """Yield (token, 1-based column) pairs for whitespace-separated tokens."""
    i, n = 0, len(text)
    while i < n:
        while i < n and text[i].isspace():
            i += 1
        if i >= n:
            break
        j = i
        while j < n and not text[j].isspace():
            j += 1
        yield text[i:j], offset + i + 1
        i = j


def _check_name(token: str, lineno: int, col: int, role: str):
    if token in _RESERVED_TOKENS:
        raise GrammarError(f"{token!r} is reserved and cannot be a {role}", lineno, col)
    if role == "nonterminal":
        if any(c in token for c in _TREE_PUNCT) or token.startswith("*") or token.endswith(":"):
            raise GrammarError(f"invalid nonterminal name {token!r}", lineno, col)
    else:
        # single punctuation characters are fine; longer tokens must not
        # collide with the tree syntax
        if len(token) > 1 and (any(c in token for c in _TREE_PUNCT) or token.startswith("*")):
            raise GrammarError(f"invalid terminal name {token!r}", lineno, col)


def parse_grammar(text: str) -> Grammar:
    """Parse and validate a grammar file.

    Raises GrammarError carrying the offending line and column.
    """
    header: list[tuple[int, str]] = []
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        (header if len(header) < 2 else body).append((lineno, line))

    if not header or not header[0][1].lstrip().startswith("start:"):
        where = header[0][0] if header else None
        raise GrammarError("missing start declaration", where, 1 if header else None)
    lineno, line = header[0]
    start_col = line.index("start:") + len("start:")
    start_toks = list(_tokens_with_columns(line[start_col:], start_col))
    if len(start_toks) != 1:
        raise GrammarError("start declaration needs exactly one nonterminal", lineno, start_col + 1)
    start, col = start_toks[0]
    _check_name(start, lineno, col, "nonterminal")

    if len(header) < 2 or not header[1][1].lstrip().startswith("alphabet:"):
        where = header[1][0] if len(header) > 1 else lineno + 1
        raise GrammarError("missing alphabet declaration", where, 1)
    lineno, line = header[1]
    alpha_col = line.index("alphabet:") + len("alphabet:")
    alphabet: list[str] = []
    for tok, col in _tokens_with_columns(line[alpha_col:], alpha_col):
        _check_name(tok, lineno, col, "terminal")
        if tok in alphabet:
            raise GrammarError(f"duplicate alphabet token {tok!r}", lineno, col)
        alphabet.append(tok)
    if start in alphabet:
        raise GrammarError(f"start symbol {start!r} is declared as a terminal", header[0][0])

    # first pass: collect left-hand sides so forward references resolve
    productions: list[tuple[int, str, int, str, int]] = []
    nonterminals = [start]
    for lineno, line in body:
        arrow = line.find("->")
        if arrow < 0:
            raise GrammarError("expected '<nonterminal> -> ...'", lineno, 1)
        lhs_toks = list(_tokens_with_columns(line[:arrow]))
        if len(lhs_toks) != 1:
            raise GrammarError("left-hand side must be a single nonterminal", lineno, 1)
        lhs, col = lhs_toks[0]
        _check_name(lhs, lineno, col, "nonterminal")
        if lhs in alphabet:
            raise GrammarError(f"{lhs!r} is declared as a terminal", lineno, col)
        if lhs not in nonterminals:
            nonterminals.append(lhs)
        productions.append((lineno, lhs, col, line, arrow + 2))

    ntset = set(nonterminals)
    alphaset = set(alphabet)
    rules: list[Rule] = []
    seen = set()
    for lineno, lhs, _, line, rhs_start in productions:
        pos = rhs_start
        for alt in line[rhs_start:].split("|"):
            toks = list(_tokens_with_columns(alt, pos))
            if not toks:
                raise GrammarError(f"empty right-hand side for {lhs}", lineno, pos + 1)
            rhs = []
            for tok, col in toks:
                if tok == EPS:
                    rhs.append(Symbol(EPSILON, EPS))
                elif tok in ntset:
                    rhs.append(Symbol(NONTERMINAL, tok))
                elif tok in alphaset:
                    rhs.append(Symbol(TERMINAL, tok))
                else:
                    raise GrammarError(f"undeclared symbol {tok!r}", lineno, col)
            rule = Rule(lhs, tuple(rhs))
            if rule not in seen:
                seen.add(rule)
                rules.append(rule)
            pos += len(alt) + 1

    return Grammar(start, tuple(nonterminals), tuple(alphabet), tuple(rules))


def load_grammar(path) -> Grammar:
    with open(path, encoding="utf-8") as fh:
        return parse_grammar(fh.read())
