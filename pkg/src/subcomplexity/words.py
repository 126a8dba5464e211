"""Words over a small explicit alphabet, and the factor primitives on them.

Words are plain Python strings: immutable, hashable, cheap to slice. The
empty word is ``""``. Iteration over word sets is always done in
length-lexicographic order (see :func:`shortlex`) so output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

EPSILON = "ε"
MAX_ALPHABET = 64


def shortlex(word: str) -> tuple[int, str]:
    """Sort key: shorter words first, then lexicographic."""
    return (len(word), word)


def show(word: str) -> str:
    """Human rendering; the empty word becomes ``ε``."""
    return word if word else EPSILON


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of distinct single-character symbols."""

    symbols: tuple[str, ...]

    def __init__(self, symbols: Iterable[str]):
        syms = tuple(symbols)
        if not 1 <= len(syms) <= MAX_ALPHABET:
            raise ValueError(f"alphabet size must be in 1..{MAX_ALPHABET}, got {len(syms)}")
        for s in syms:
            if not isinstance(s, str) or len(s) != 1 or not s.isprintable():
                raise ValueError(f"alphabet symbols must be single printable characters: {s!r}")
        if len(set(syms)) != len(syms):
            raise ValueError(f"alphabet symbols are not distinct: {syms}")
        object.__setattr__(self, "symbols", syms)

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self.symbols

    def index(self, symbol: str) -> int:
        return self.symbols.index(symbol)

    def check(self, word: str) -> str:
        """Return ``word`` unchanged, raising if it uses a foreign symbol."""
        for c in word:
            if c not in self.symbols:
                raise ValueError(f"symbol {c!r} of word {word!r} is not in alphabet {''.join(self.symbols)!r}")
        return word

    def words(self, n: int) -> Iterator[str]:
        """All words of length ``n`` in lexicographic order (by alphabet order)."""
        if n == 0:
            yield ""
            return
        for head in self.words(n - 1):
            for c in self.symbols:
                yield head + c


@dataclass(frozen=True)
class FactorSet:
    """The set of length-``n`` factors of something, with an exactness flag.

    ``exact`` is False when the set was read off a finite window of an
    infinite word and may be missing members.
    """

    n: int
    members: frozenset[str] = field(default_factory=frozenset)
    exact: bool = True

    def __post_init__(self):
        for w in self.members:
            if len(w) != self.n:
                raise ValueError(f"factor {w!r} does not have length {self.n}")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.members))

    def __contains__(self, word: object) -> bool:
        return word in self.members


def rho_parent(w: str) -> str:
    """Drop the last letter of a non-empty word."""
    if not w:
        raise ValueError("rho undefined on empty word")
    return w[:-1]


def is_prefix(x: str, y: str) -> bool:
    return y.startswith(x)


def is_suffix(x: str, y: str) -> bool:
    return y.endswith(x)


def is_factor(x: str, y: str) -> bool:
    return x in y


def factors_of_word(y: str, n: int) -> FactorSet:
    """All distinct length-``n`` blocks of ``y``."""
    if n < 0:
        raise ValueError("factor length must be non-negative")
    return FactorSet(n, frozenset(y[i:i + n] for i in range(len(y) - n + 1)))


def factors_of_words(words: Iterable[str], n: int) -> FactorSet:
    """Union of :func:`factors_of_word` over a finite word list."""
    out: set[str] = set()
    for y in words:
        out.update(y[i:i + n] for i in range(len(y) - n + 1))
    return FactorSet(n, frozenset(out))


def primitive_root(w: str) -> str:
    """Shortest ``r`` with ``w == r * k``; the word itself when primitive."""
    if not w:
        raise ValueError("empty word has no primitive root")
    i = (w + w).find(w, 1)
    return w[:i] if len(w) % i == 0 else w
