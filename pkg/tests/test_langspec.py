import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from subcomplexity import langspec as ls
from subcomplexity.complexity import least_period
from subcomplexity.langspec import (AB, BiInfiniteSource, EventuallyPeriodic, FiniteSource, InfiniteSource, Morphic,
                                    RegularSource, SturmianCF, builtin, enumerate_factors, expand_prefix,
                                    is_extendable)
from subcomplexity.words import primitive_root


def iterate_morphism(rules, seed, rounds):
    w = seed
    for _ in range(rounds):
        w = "".join(rules[c] for c in w)
    return w


def test_expand_prefix_examples():
    assert expand_prefix(EventuallyPeriodic("", "ab"), 5) == "ababa"
    fib = {"a": "ab", "b": "a"}
    # a, ab, aba, abaab, abaababa
    assert iterate_morphism(fib, "a", 4) == "abaababa"
    assert expand_prefix(Morphic(fib, "a"), 8) == "abaababa"
    tm = {"a": "ab", "b": "ba"}
    assert iterate_morphism(tm, "a", 3) == "abbabaab"
    assert expand_prefix(Morphic(tm, "a"), 8) == "abbabaab"


def test_morphic_rejects_non_prolongable():
    with pytest.raises(ValueError):
        Morphic({"a": "ba", "b": "a"}, "a")
    with pytest.raises(ValueError):
        Morphic({"a": "a", "b": "ab"}, "a")


def test_morphic_coding():
    g = Morphic({"a": "ab", "b": "ba"}, "a", {"a": "x", "b": "y"})
    assert expand_prefix(g, 4) == "xyyx"


def test_sturmian_all_ones_is_fibonacci():
    fib = expand_prefix(Morphic({"a": "ab", "b": "a"}, "a"), 1000)
    assert expand_prefix(SturmianCF((), (1,)), 1000) == fib
    assert expand_prefix(SturmianCF((1, 1), (1,)), 1000) == fib


def test_sturmian_standard_words():
    # s1 = a^2 b, s2 = s1 s0 = aaba, s3 = s2^2 s1 ...
    assert expand_prefix(SturmianCF((2,), (1, 2)), 4) == "aaba"
    with pytest.raises(ValueError):
        SturmianCF((0,), (1,))


@pytest.mark.parametrize("tail", [(1,), (2,), (1, 2), (3, 1)])
def test_sturmian_complexity_is_n_plus_one(tail):
    src = InfiniteSource(AB, SturmianCF((), tail))
    w = src.window(20000)
    for n in range(1, 41):
        assert len({w[i:i + n] for i in range(len(w) - n + 1)}) == n + 1


def test_fibonacci_sturmian_to_200():
    src = InfiniteSource(AB, SturmianCF((), (1,)))
    for n in (1, 50, 120, 200):
        fs = enumerate_factors(src, n, 30000)
        assert len(fs) == n + 1 and not fs.exact


def test_enumerate_factors_examples():
    assert enumerate_factors(builtin("U"), 2).members == {"aa", "ab", "bb"}
    fs = enumerate_factors(builtin("AKB"), 3)
    assert fs.members == {"aaa", "aab"} and fs.exact
    fs = enumerate_factors(builtin("AAABBB"), 2, 10)
    assert fs.members == {"aa", "ab", "bb"} and fs.exact


def test_enumerate_factors_horizon_errors():
    with pytest.raises(ValueError):
        enumerate_factors(builtin("FIBONACCI"), 10, 5)


def test_exactness_rule():
    src = InfiniteSource(AB, EventuallyPeriodic("bb", "aab"))
    assert enumerate_factors(src, 4, 9).exact
    assert not enumerate_factors(src, 4, 8).exact
    assert not enumerate_factors(builtin("THUEMORSE"), 4).exact


def test_empty_and_nonempty_at_zero():
    assert len(enumerate_factors(FiniteSource(AB, frozenset()), 0)) == 0
    for name in ls.BUILTINS:
        assert len(enumerate_factors(builtin(name), 0)) == 1


def test_is_extendable_examples():
    assert not is_extendable(FiniteSource(AB, frozenset({"a", "ab"})))
    assert is_extendable(builtin("FIBONACCI"))
    assert is_extendable(builtin("AAABBB"))
    assert is_extendable(builtin("U"))
    assert not is_extendable(builtin("AKB"))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 300), st.integers(0, 300))
def test_window_monotone(h1, h2):
    src = builtin("THUEMORSE")
    lo, hi = sorted((h1 + 5, h2 + 5))
    assert enumerate_factors(src, 5, lo).members <= enumerate_factors(src, 5, hi).members


@settings(max_examples=40, deadline=None)
@given(st.text(alphabet="ab", min_size=1, max_size=8))
def test_purely_periodic_count_is_least_period(cycle):
    src = InfiniteSource(AB, EventuallyPeriodic("", cycle))
    period = len(primitive_root(cycle))
    assert period == least_period(src.window(200))
    assert len(enumerate_factors(src, 3 * len(cycle), 200)) == period


def test_biinfinite_crossing_window():
    # ...bbb|aaa...: the only crossing factors are b^i a^j
    src = BiInfiniteSource(AB, EventuallyPeriodic("", "b"), EventuallyPeriodic("", "a"))
    assert enumerate_factors(src, 3, 10).members == {"bbb", "bba", "baa", "aaa"}


def test_json_round_trip(tmp_path):
    docs = [
        {"alphabet": ["a", "b"], "source": {"type": "finite", "words": ["ab", "ba"]}},
        {"alphabet": ["a", "b"], "source": {"type": "regular", "states": 2, "start": [0], "finals": [0, 1],
                                            "transitions": [[0, "a", 0], [0, "b", 1], [1, "b", 1]]}},
        {"alphabet": ["a", "b"], "source": {"type": "morphic", "rules": {"a": "ab", "b": "a"}, "seed": "a"}},
        {"alphabet": ["a", "b"], "source": {"type": "eventually_periodic", "prefix": "b", "cycle": "a"}},
        {"alphabet": ["a", "b"], "source": {"type": "sturmian_cf", "directive": [1, 2], "repeated_tail": [1]}},
        {"alphabet": ["a", "b"], "source": {"type": "bi_infinite",
                                            "left": {"type": "eventually_periodic", "prefix": "", "cycle": "a"},
                                            "right": {"type": "eventually_periodic", "prefix": "", "cycle": "b"}}},
    ]
    for doc in docs:
        src = ls.source_from_json(doc)
        again = ls.source_from_json(json.loads(json.dumps(ls.source_to_json(src))))
        assert again == src
    path = tmp_path / "u.json"
    path.write_text(json.dumps(docs[1]), encoding="utf-8")
    assert enumerate_factors(ls.load_source(str(path)), 3).members == {"aaa", "aab", "abb", "bbb"}
    assert ls.source_from_json({"source": {"type": "builtin", "name": "U"}}) == builtin("U")


def test_json_errors():
    with pytest.raises(ValueError):
        ls.source_from_json({"alphabet": ["a"], "source": {"type": "nope"}})
    with pytest.raises(ValueError):
        ls.source_from_json({"source": {}})
    with pytest.raises(ValueError):
        ls.source_from_json({"alphabet": ["a"], "source": {"type": "finite", "words": ["b"]}})
    with pytest.raises(ValueError):
        builtin("NOPE")


def test_as_nfa_for_periodic_words():
    from subcomplexity import automata
    src = builtin("AAABBB")
    assert automata.equivalent(automata.factor_closure(ls.as_nfa(src)), builtin("U").nfa)
    assert ls.as_nfa(builtin("FIBONACCI")) is None
    assert isinstance(builtin("U"), RegularSource)
