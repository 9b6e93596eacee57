import itertools
import random
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parikh import (
    AdjunctClass,
    AdjunctTree,
    BudgetExceeded,
    adjoin,
    adjoinable,
    build_image,
    classify,
    decompose,
    enumerate_simple_adjuncts,
    enumerate_simple_trees,
    is_derivation_tree,
    is_simple_adjunct,
    is_simple_tree,
    is_valid_adjunct,
    member,
    parse_grammar,
    parse_tree,
)
from parikh.enumeration import stats
from parikh.oracle import adjoinable_by_permutation, derivation_trees
from parikh.semilinear import image_from_parts
from parikh.tree import Hole, Leaf, Node, occurrences

from conftest import BUNDLED, bundled


def brute_force(g, depth, hole=None):
    """Every rule-valid tree rooted at each nonterminal with at most ``depth``
    nodes per path. Nonterminal positions may instead hold ``*hole``."""

    @lru_cache(maxsize=None)
    def rooted(x, room):
        if room < 2:
            return ()
        out = []
        for rule in g.rules_by_lhs[x]:
            options = []
            for sym in rule.rhs:
                if sym.kind == "nonterminal":
                    opts = list(rooted(sym.name, room - 1))
                    if sym.name == hole:
                        opts.append(Hole(hole))
                    options.append(opts)
                else:
                    options.append([Leaf(sym.name)])
            out.extend(Node(x, combo) for combo in itertools.product(*options))
        return tuple(out)

    return rooted


def brute_simple_trees(g):
    trees = brute_force(g, None)(g.start, len(g.nonterminals) + 1)
    return {t.text for t in trees if is_simple_tree(t)}


def brute_simple_adjuncts(g):
    found = set()
    for x in g.nonterminals:
        for body in brute_force(g, len(g.nonterminals) + 2, hole=x)(x, len(g.nonterminals) + 2):
            if body.has_hole == 1:
                alpha = AdjunctTree(body)
                if is_simple_adjunct(alpha):
                    found.add(alpha.text)
    return found


def test_anbn():
    g = bundled("anbn")
    assert [t.text for t in enumerate_simple_trees(g)] == ["S(eps)"]
    assert [a.text for a in enumerate_simple_adjuncts(g)] == ["S(a,*S,b)"]


def test_ssa():
    g = bundled("ssa")
    # S(S(a),S(a)) repeats S on every path, so S(a) is the only simple tree
    assert [t.text for t in enumerate_simple_trees(g)] == ["S(a)"]
    assert [a.text for a in enumerate_simple_adjuncts(g)] == ["S(*S,S(a))", "S(S(a),*S)"]


def test_empty_language():
    g = bundled("empty")
    assert enumerate_simple_trees(g) == ()
    assert [a.text for a in enumerate_simple_adjuncts(g)] == ["S(*S)"]


def test_no_pumps_without_recursion():
    g = parse_grammar("start: S\nalphabet: a\nS -> a")
    assert enumerate_simple_adjuncts(g) == ()


@pytest.mark.parametrize("name", BUNDLED)
def test_matches_brute_force(name):
    g = bundled(name)
    trees = enumerate_simple_trees(g)
    adjuncts = enumerate_simple_adjuncts(g)
    assert {t.text for t in trees} == brute_simple_trees(g)
    assert {a.text for a in adjuncts} == brute_simple_adjuncts(g)
    assert all(is_derivation_tree(t, g) for t in trees)
    assert all(is_valid_adjunct(a, g) for a in adjuncts)
    assert [t.text for t in trees] == sorted(t.text for t in trees)
    assert len(set(trees)) == len(trees)


def test_matches_brute_force_on_a_wider_grammar():
    g = parse_grammar(
        "start: S\nalphabet: a b c\n"
        "S -> A B | B S A | c\nA -> a A | S | eps\nB -> b | A B | S a"
    )
    assert {t.text for t in enumerate_simple_trees(g)} == brute_simple_trees(g)
    assert {a.text for a in enumerate_simple_adjuncts(g)} == brute_simple_adjuncts(g)


def test_budget_is_enforced():
    g = parse_grammar(
        "start: S\nalphabet: a b c\n"
        "S -> A B | B S A | c\nA -> a A | S | eps\nB -> b | A B | S a"
    )
    with pytest.raises(BudgetExceeded) as info:
        enumerate_simple_adjuncts(g, budget=5)
    assert info.value.count == 6


def test_classify_examples():
    g = bundled("anbn")
    (cls,) = classify(enumerate_simple_adjuncts(g), g)
    assert (cls.root, cls.introduced, cls.parikh) == ("S", {"S"}, (1, 1))
    g = bundled("ssa")
    (cls,) = classify(enumerate_simple_adjuncts(g), g)
    assert (cls.root, cls.introduced, cls.parikh) == ("S", {"S"}, (1,))
    assert classify([], g) == ()


def _cls(root, *intro):
    return AdjunctClass(root, frozenset(intro) | {root}, ())


def test_adjoinable_examples():
    g = bundled("anbn")
    assert adjoinable(parse_tree("S(eps)"), enumerate_simple_adjuncts(g))
    assert not adjoinable({"S"}, [_cls("X", "Y"), _cls("Y")])
    assert adjoinable({"S"}, [_cls("S", "X"), _cls("X")])
    assert adjoinable({"S"}, [])


_nts = st.sampled_from("SABCDE")


@settings(max_examples=300, deadline=None)
@given(
    st.sets(_nts, min_size=1, max_size=3),
    st.lists(st.tuples(_nts, st.sets(_nts, max_size=3)), max_size=6),
)
def test_fixpoint_matches_permutation_search(have, raw):
    members = [(root, frozenset(intro) | {root}) for root, intro in raw]
    classes = [AdjunctClass(r, i, ()) for r, i in members]
    assert adjoinable(have, classes) == adjoinable_by_permutation(have, members)


@pytest.mark.parametrize("name", BUNDLED)
def test_decomposition_lands_in_enumerated_sets(name):
    g = bundled(name)
    trees = set(enumerate_simple_trees(g))
    adjuncts = set(enumerate_simple_adjuncts(g))
    for t in derivation_trees(g, 12):
        d = decompose(t)
        assert d.core in trees
        assert d.pumps <= adjuncts


@pytest.mark.parametrize("name", ["anbn", "ssa", "dyck", "expr", "unreachable", "t2"])
def test_adjoining_sequences_stay_valid(name):
    g = bundled(name)
    rng = random.Random(name)
    trees = enumerate_simple_trees(g)
    adjuncts = enumerate_simple_adjuncts(g)
    for _ in range(100):
        t = rng.choice(trees)
        for _ in range(rng.randint(0, 6)):
            usable = [a for a in adjuncts if a.root in t.nonterminals]
            if not usable:
                break
            alpha = rng.choice(usable)
            t = adjoin(t, alpha, rng.randrange(len(occurrences(t, alpha.root))))
        assert is_derivation_tree(t, g)


@pytest.mark.parametrize("name", BUNDLED)
def test_class_reduction_keeps_the_image(name):
    g = bundled(name)
    trees = enumerate_simple_trees(g)
    raw = image_from_parts(g, trees, enumerate_simple_adjuncts(g))
    reduced = build_image(g)
    for u in itertools.product(range(9), repeat=len(g.alphabet)):
        assert member(raw, u) == member(reduced, u)


def test_stats_text():
    text = stats(bundled("t2")).to_text()
    assert text.splitlines()[:4] == [
        "simple_trees: 2",
        "simple_adjuncts: 12",
        "adjunct_classes: 3",
        "nonterminal adjuncts classes",
    ]
