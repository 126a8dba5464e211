import sys
import itertools

import pytest
from hypothesis import strategies as st

from subcomplexity.automata import Nfa
from subcomplexity.verifier import RandomRegularSpec
from subcomplexity.words import Alphabet


def brute_language(nfa: Nfa, max_len: int) -> set[str]:
    """Every accepted word up to ``max_len``, by testing all of A^<=max_len."""
    out = set()
    for n in range(max_len + 1):
        for t in itertools.product(nfa.alphabet.symbols, repeat=n):
            w = "".join(t)
            if nfa.accepts(w):
                out.add(w)
    return out


def brute_factors(nfa: Nfa, n: int) -> set[str]:
    """Length-n factors: any factor sits inside an accepted word at most n + 2(states-1) long."""
    words = brute_language(nfa, n + 2 * max(nfa.states - 1, 0))
    return {w[i:i + n] for w in words for i in range(len(w) - n + 1)}


def small_spec(seed: int, max_states: int = 4, max_alpha: int = 2) -> RandomRegularSpec:
    spec = RandomRegularSpec.from_seed(seed)
    return RandomRegularSpec(seed, min(spec.states, max_states), min(spec.alphabet_size, max_alpha),
                             spec.transition_density, spec.final_density)


seeds = st.integers(min_value=0, max_value=2 ** 64 - 1)


@pytest.fixture
def ab():
    return Alphabet("ab")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
