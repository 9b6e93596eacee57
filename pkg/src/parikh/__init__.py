"""Parikh images of context-free languages via derivation-tree decomposition."""

from .decompose import Decomposition, check_lemma, decompose
from .enumeration import (
    AdjunctClass,
    adjoinable,
    classify,
    enumerate_simple_adjuncts,
    enumerate_simple_trees,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    GrammarError,
    NotAdjoinableError,
    TreeSyntaxError,
    UnknownLetterError,
)
from .grammar import Grammar, Rule, Symbol, load_grammar, parikh_dimension, parse_grammar
from .kernels import BACKEND
from .oracle import CrossCheckReport, crosscheck, enumerate_words
from .semilinear import LinearSet, SemilinearSet, build_image, member, member_linear, normalize
from .tree import (
    AdjunctTree,
    Hole,
    Leaf,
    Node,
    Tree,
    adjoin,
    is_derivation_tree,
    is_simple_adjunct,
    is_simple_tree,
    is_valid_adjunct,
    nonterminals_of,
    parikh_of_adjunct,
    parikh_of_tree,
    parikh_of_word,
    parse_adjunct,
    parse_tree,
    yield_of,
)

__version__ = "0.1.0"
