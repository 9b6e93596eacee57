from importlib import resources

import pytest

from parikh import load_grammar, parse_adjunct, parse_tree

BUNDLED = ["anbn", "ssa", "dyck", "expr", "unreachable", "empty", "t2"]

# one summary line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES = []


def grammar_path(name):
    return str(resources.files("parikh") / "grammars" / f"{name}.cfg")


def bundled(name):
    return load_grammar(grammar_path(name))


@pytest.fixture(scope="session")
def grammars():
    return {name: bundled(name) for name in BUNDLED}


@pytest.fixture
def T():
    return parse_tree


@pytest.fixture
def A():
    return parse_adjunct


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
