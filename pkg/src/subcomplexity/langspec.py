"""Language sources: finite sets, regular languages, and (bi-)infinite words.

Every source can enumerate its length-``n`` factors. Regular and finite
sources are exact. Infinite words are read through a finite window of
``horizon`` letters; the result is flagged exact only when the window is
provably long enough to contain every factor (eventually periodic words).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import cycle
from typing import Mapping, Union

from . import automata
from .automata import Nfa
from .words import Alphabet, FactorSet, factors_of_word, factors_of_words

AB = Alphabet("ab")


def default_horizon(n: int) -> int:
    return max(64 * n, 4096)


# --- generators of infinite words ----------------------------------------


@dataclass(frozen=True)
class EventuallyPeriodic:
    prefix: str
    cycle: str

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("eventually periodic word needs a non-empty cycle")

    def expand(self, length: int) -> str:
        if length <= len(self.prefix):
            return self.prefix[:length]
        rest = length - len(self.prefix)
        reps = -(-rest // len(self.cycle))
        return self.prefix + (self.cycle * reps)[:rest]

    def exact_at(self, n: int, horizon: int) -> bool:
        return horizon >= len(self.prefix) + len(self.cycle) + n

    def symbols(self) -> set[str]:
        return set(self.prefix + self.cycle)


@dataclass(frozen=True)
class Morphic:
    """Fixed point of a prolongable morphism, optionally passed through a letter-to-letter coding."""

    rules: Mapping[str, str]
    seed: str
    coding: Mapping[str, str] | None = None

    def __post_init__(self):
        for a, img in self.rules.items():
            if not img:
                raise ValueError(f"morphism image of {a!r} is empty")
            for c in img:
                if c not in self.rules:
                    raise ValueError(f"morphism image {img!r} uses {c!r}, which has no rule")
        img = self.rules.get(self.seed, "")
        if not (len(img) >= 2 and img[0] == self.seed):
            raise ValueError(f"morphism is not prolongable on {self.seed!r}")

    def expand(self, length: int) -> str:
        out = list(self.rules[self.seed])
        i = 1
        # u = m(u): the image of the i-th letter is the next block of u
        while len(out) < length:
            out.extend(self.rules[out[i]])
            i += 1
        word = "".join(out[:length])
        if self.coding:
            word = "".join(self.coding[c] for c in word)
        return word

    def exact_at(self, n: int, horizon: int) -> bool:
        return False

    def symbols(self) -> set[str]:
        if self.coding:
            return set(self.coding.values())
        return set(self.rules)


@dataclass(frozen=True)
class SturmianCF:
    """Characteristic Sturmian word from continued-fraction partial quotients.

    Standard words follow ``s[k] = s[k-1]^d[k] s[k-2]`` with ``s[-1]`` the
    second symbol and ``s[0]`` the first; quotients are ``directive``
    followed by ``repeated_tail`` repeated forever.
    """

    directive: tuple[int, ...]
    repeated_tail: tuple[int, ...]
    letters: tuple[str, str] = ("a", "b")

    def __post_init__(self):
        object.__setattr__(self, "directive", tuple(self.directive))
        object.__setattr__(self, "repeated_tail", tuple(self.repeated_tail))
        if not self.repeated_tail:
            raise ValueError("repeated tail must be non-empty")
        if any(not isinstance(d, int) or d < 1 for d in self.directive + self.repeated_tail):
            raise ValueError("partial quotients must be positive integers")

    def expand(self, length: int) -> str:
        prev, cur = self.letters[1], self.letters[0]
        quotients = _chain(self.directive, self.repeated_tail)
        while len(cur) < length:
            d = next(quotients)
            prev, cur = cur, cur * d + prev
        return cur[:length]

    def exact_at(self, n: int, horizon: int) -> bool:
        return False

    def symbols(self) -> set[str]:
        return set(self.letters)


def _chain(head, tail):
    yield from head
    yield from cycle(tail)


Generator = Union[EventuallyPeriodic, Morphic, SturmianCF]


def expand_prefix(gen: Generator, length: int) -> str:
    if length < 0:
        raise ValueError("prefix length must be non-negative")
    return gen.expand(length)


# --- sources ---------------------------------------------------------------


@dataclass(frozen=True)
class FiniteSource:
    alphabet: Alphabet
    words: frozenset[str]
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(self.alphabet.check(w) for w in self.words))

    def to_nfa(self) -> Nfa:
        return automata.nfa_from_words(self.words, self.alphabet)


@dataclass(frozen=True)
class RegularSource:
    alphabet: Alphabet
    nfa: Nfa
    name: str | None = None

    def __post_init__(self):
        if self.nfa.alphabet != self.alphabet:
            raise ValueError("automaton alphabet differs from the source alphabet")

    def to_nfa(self) -> Nfa:
        return self.nfa


@dataclass(frozen=True)
class InfiniteSource:
    alphabet: Alphabet
    gen: Generator
    name: str | None = None

    def __post_init__(self):
        _check_gen(self.gen, self.alphabet)

    def window(self, horizon: int) -> str:
        return self.gen.expand(horizon)

    def exact_at(self, n: int, horizon: int) -> bool:
        return self.gen.exact_at(n, horizon)


@dataclass(frozen=True)
class BiInfiniteSource:
    """``...u(-2) u(-1) | u(0) u(1)...``: ``left`` generates ``u(-1), u(-2), ...``."""

    alphabet: Alphabet
    left: Generator
    right: Generator
    name: str | None = None

    def __post_init__(self):
        _check_gen(self.left, self.alphabet)
        _check_gen(self.right, self.alphabet)

    def window(self, horizon: int) -> str:
        return self.left.expand(horizon)[::-1] + self.right.expand(horizon)

    def exact_at(self, n: int, horizon: int) -> bool:
        return self.left.exact_at(n, horizon) and self.right.exact_at(n, horizon)


LanguageSource = Union[FiniteSource, RegularSource, InfiniteSource, BiInfiniteSource]


def _check_gen(gen: Generator, alphabet: Alphabet):
    extra = gen.symbols() - set(alphabet)
    if extra:
        raise ValueError(f"generator uses symbols outside the alphabet: {sorted(extra)}")


def is_word_source(src) -> bool:
    return isinstance(src, (InfiniteSource, BiInfiniteSource))


def as_nfa(src: LanguageSource) -> Nfa | None:
    """An automaton for the source's language when it is regular, else ``None``.

    For eventually periodic (bi-)infinite words this is an automaton whose
    factor closure is the language of the word.
    """
    if isinstance(src, (FiniteSource, RegularSource)):
        return src.to_nfa()
    gens = [src.gen] if isinstance(src, InfiniteSource) else [src.left, src.right]
    if not all(isinstance(g, EventuallyPeriodic) for g in gens):
        return None
    if isinstance(src, InfiniteSource):
        head, middle, tail = "", src.gen.prefix, src.gen.cycle
    else:
        head = src.left.cycle[::-1]
        middle = src.left.prefix[::-1] + src.right.prefix
        tail = src.right.cycle
    return automata.concat(automata.star_of_word(head, src.alphabet),
                           automata.nfa_from_words([middle], src.alphabet),
                           automata.star_of_word(tail, src.alphabet))


def enumerate_factors(src: LanguageSource, n: int, horizon: int | None = None) -> FactorSet:
    """The length-``n`` factors of the source, with an exactness flag."""
    if n < 0:
        raise ValueError("factor length must be non-negative")
    if isinstance(src, FiniteSource):
        return factors_of_words(src.words, n)
    if isinstance(src, RegularSource):
        dfa = automata.factor_dfa(src.nfa)
        return FactorSet(n, frozenset(automata.words_of_length(dfa, n)))
    horizon = default_horizon(n) if horizon is None else horizon
    if horizon < n:
        raise ValueError(f"horizon {horizon} is shorter than factor length {n}")
    window = src.window(horizon)
    fs = factors_of_word(window, n)
    return FactorSet(n, fs.members, src.exact_at(n, horizon))


def is_extendable(src: LanguageSource) -> bool:
    """Whether every word of the language has a one-letter right extension in it."""
    if isinstance(src, FiniteSource):
        return all(any(w + a in src.words for a in src.alphabet) for w in src.words)
    if isinstance(src, RegularSource):
        dfa = automata.regular_dfa(src.nfa)
        return all(any(q in dfa.finals for _, q in dfa.out_edges(f)) for f in dfa.finals)
    return True


# --- builtins ------------------------------------------------------------


def _nfa(states, trans, starts, finals):
    return Nfa(states, AB, trans, starts, finals)


def _u_nfa():
    return _nfa(2, [(0, "a", 0), (0, "b", 1), (1, "b", 1)], [0], [0, 1])


def _baab_nfa():
    # b (aa)* b  with the a-pairs counted by states 1/2
    return _nfa(4, [(0, "b", 1), (1, "a", 2), (2, "a", 1), (1, "b", 3)], [0], [3])


def _abba_nfa():
    return _nfa(4, [(0, "a", 1), (1, "b", 2), (2, "b", 1), (1, "a", 3)], [0], [3])


@dataclass(frozen=True)
class Builtin:
    name: str
    description: str
    make: object = field(repr=False)
    note: str | None = None

    def source(self) -> LanguageSource:
        return self.make()


BUILTINS: dict[str, Builtin] = {b.name: b for b in [
    Builtin("U", "{a^i b^j : i, j >= 0}; p(n) = n + 1",
            lambda: RegularSource(AB, _u_nfa(), "U")),
    Builtin("AAABBB", "bi-infinite ...aaa|bbb...; its language is U",
            lambda: BiInfiniteSource(AB, EventuallyPeriodic("", "a"), EventuallyPeriodic("", "b"), "AAABBB")),
    Builtin("BAAB", "{b a^(2k) b : k >= 0}; p(n) = 3 for odd n >= 3, 4 for even n >= 2",
            lambda: RegularSource(AB, _baab_nfa(), "BAAB"),
            note="p(1) = 2 rather than 3: at n = 1 the words b a^(n-1) and a^(n-1) b both equal b"),
    Builtin("MIX", "U with {a b^(2k) a} and {b a^(2k) b}",
            lambda: RegularSource(AB, automata.union(_u_nfa(), _abba_nfa(), _baab_nfa()), "MIX"),
            note="factors b^(n-1) a and b a^(n-1) of the added words lie outside U: "
                 "p(2) = 4, p(n) = n + 3 for odd n >= 3, p(n) = n + 5 for even n >= 4"),
    Builtin("AKB", "{a^k b : k >= 0}; bounded (p(n) = 2) with infinitely many special factors",
            lambda: RegularSource(AB, _nfa(2, [(0, "a", 0), (0, "b", 1)], [0], [1]), "AKB")),
    Builtin("FIBONACCI", "fixed point of a -> ab, b -> a (Sturmian)",
            lambda: InfiniteSource(AB, Morphic({"a": "ab", "b": "a"}, "a"), "FIBONACCI")),
    Builtin("THUEMORSE", "fixed point of a -> ab, b -> ba",
            lambda: InfiniteSource(AB, Morphic({"a": "ab", "b": "ba"}, "a"), "THUEMORSE")),
]}


def builtin(name: str) -> LanguageSource:
    try:
        return BUILTINS[name].source()
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}") from None


# --- JSON ----------------------------------------------------------------


def _gen_from_json(d: dict) -> Generator:
    kind = d.get("type")
    if kind == "eventually_periodic":
        return EventuallyPeriodic(d.get("prefix", ""), d["cycle"])
    if kind == "morphic":
        return Morphic(dict(d["rules"]), d["seed"], d.get("coding"))
    if kind == "sturmian_cf":
        return SturmianCF(tuple(d.get("directive", ())), tuple(d["repeated_tail"]))
    raise ValueError(f"unknown generator type {kind!r}")


def _gen_to_json(g: Generator) -> dict:
    if isinstance(g, EventuallyPeriodic):
        return {"type": "eventually_periodic", "prefix": g.prefix, "cycle": g.cycle}
    if isinstance(g, Morphic):
        out = {"type": "morphic", "rules": dict(g.rules), "seed": g.seed}
        if g.coding:
            out["coding"] = dict(g.coding)
        return out
    return {"type": "sturmian_cf", "directive": list(g.directive), "repeated_tail": list(g.repeated_tail)}


def nfa_from_json(d: dict, alphabet: Alphabet) -> Nfa:
    return Nfa(int(d["states"]), alphabet, [tuple(t) for t in d["transitions"]], d["start"], d["finals"])


def nfa_to_json(nfa: Nfa) -> dict:
    key = lambda t: (t[0], nfa.alphabet.index(t[1]), t[2])  # noqa: E731
    return {"type": "regular", "states": nfa.states, "start": sorted(nfa.starts),
            "finals": sorted(nfa.finals), "transitions": [list(t) for t in sorted(nfa.transitions, key=key)]}


def source_from_json(data: dict) -> LanguageSource:
    """Parse the language-spec JSON document (already decoded)."""
    try:
        spec = data["source"]
        kind = spec["type"]
        if kind == "builtin":
            return builtin(spec["name"])
        alphabet = Alphabet(data["alphabet"])
        if kind == "finite":
            return FiniteSource(alphabet, frozenset(spec["words"]))
        if kind == "regular":
            return RegularSource(alphabet, nfa_from_json(spec, alphabet))
        if kind == "bi_infinite":
            return BiInfiniteSource(alphabet, _gen_from_json(spec["left"]), _gen_from_json(spec["right"]))
        return InfiniteSource(alphabet, _gen_from_json(spec))
    except (KeyError, TypeError) as e:
        raise ValueError(f"malformed language spec: {e!r}") from None


def source_to_json(src: LanguageSource) -> dict:
    out: dict = {"alphabet": list(src.alphabet)}
    if isinstance(src, FiniteSource):
        out["source"] = {"type": "finite", "words": sorted(src.words, key=lambda w: (len(w), w))}
    elif isinstance(src, RegularSource):
        out["source"] = nfa_to_json(src.nfa)
    elif isinstance(src, InfiniteSource):
        out["source"] = _gen_to_json(src.gen)
    else:
        out["source"] = {"type": "bi_infinite", "left": _gen_to_json(src.left), "right": _gen_to_json(src.right)}
    return out


def load_source(path: str) -> LanguageSource:
    with open(path, encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: not valid JSON: {e}") from None
    return source_from_json(data)


def source_label(src: LanguageSource) -> str:
    return src.name or type(src).__name__


def periodic_biinfinite(cycle_word: str, alphabet: Alphabet = AB) -> BiInfiniteSource:
    """The bi-infinite word ``...ccc|ccc...`` with period word ``cycle_word``."""
    return BiInfiniteSource(alphabet, EventuallyPeriodic("", cycle_word[::-1]), EventuallyPeriodic("", cycle_word))

