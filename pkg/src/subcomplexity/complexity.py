"""Complexity profiles, special factors and the bounded-or-linear classification."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from . import automata
from .automata import Dfa, GapCertificate, Nfa
from .langspec import (BiInfiniteSource, EventuallyPeriodic, FiniteSource, InfiniteSource, LanguageSource,
                       RegularSource, default_horizon, is_extendable)
from .words import factors_of_word, factors_of_words, rho_parent, shortlex


@lru_cache(maxsize=256)
def _factor_dfa(nfa: Nfa) -> Dfa:
    return automata.factor_dfa(nfa)


@dataclass(frozen=True)
class ComplexityProfile:
    """``p[n]`` and ``s[n]`` (special-factor counts) for ``n = 0..N``.

    ``exact[n]`` is False when ``p[n]`` or ``s[n]`` was read off a finite
    window and is only a lower bound.
    """

    p: tuple[int, ...]
    s: tuple[int, ...]
    exact: tuple[bool, ...]
    alphabet_size: int

    @property
    def N(self) -> int:
        return len(self.p) - 1

    @property
    def all_exact(self) -> bool:
        return all(self.exact)

    def rows(self):
        return [(n, self.p[n], self.s[n], self.exact[n]) for n in range(len(self.p))]


@dataclass(frozen=True)
class SpecialFactorReport:
    n: int
    specials: frozenset[str]
    exact: bool = True

    @property
    def s(self) -> int:
        return len(self.specials)


def _specials_from(longer: frozenset[str]) -> frozenset[str]:
    children = defaultdict(int)
    for w in longer:
        children[rho_parent(w)] += 1
    return frozenset(w for w, c in children.items() if c >= 2)


def profile(src: LanguageSource, N: int, horizon: int | None = None) -> ComplexityProfile:
    if N < 0:
        raise ValueError("N must be non-negative")
    alpha = src.alphabet.size
    if isinstance(src, RegularSource):
        dfa = _factor_dfa(src.nfa)
        p = automata.count_words_per_length(dfa, N)
        s = automata.count_branching_per_length(dfa, N)
        return ComplexityProfile(tuple(p), tuple(s), (True,) * (N + 1), alpha)
    if isinstance(src, FiniteSource):
        sets = [factors_of_words(src.words, n).members for n in range(N + 2)]
        exact = [True] * (N + 2)
    else:
        horizon = default_horizon(N + 1) if horizon is None else horizon
        if horizon < N + 1:
            raise ValueError(f"horizon {horizon} is shorter than N + 1 = {N + 1}")
        window = src.window(horizon)
        sets = [factors_of_word(window, n).members for n in range(N + 2)]
        exact = [src.exact_at(n, horizon) for n in range(N + 2)]
    p = tuple(len(sets[n]) for n in range(N + 1))
    s = tuple(len(_specials_from(sets[n + 1])) for n in range(N + 1))
    flags = tuple(exact[n] and exact[n + 1] for n in range(N + 1))
    return ComplexityProfile(p, s, flags, alpha)


def special_factors(src: LanguageSource, n: int, horizon: int | None = None) -> SpecialFactorReport:
    """Words of length ``n`` with at least two distinct right extensions among the factors.

    On a finite window, a factor touching the right edge may look like it
    has fewer extensions than it really does; such reports carry
    ``exact=False``.
    """
    if isinstance(src, RegularSource):
        longer = frozenset(automata.words_of_length(_factor_dfa(src.nfa), n + 1))
        exact = True
    elif isinstance(src, FiniteSource):
        longer = factors_of_words(src.words, n + 1).members
        exact = True
    else:
        horizon = default_horizon(n + 1) if horizon is None else horizon
        longer = factors_of_word(src.window(horizon), n + 1).members
        exact = src.exact_at(n + 1, horizon)
    return SpecialFactorReport(n, _specials_from(longer), exact)


# --- FIATC ---------------------------------------------------------------


@dataclass(frozen=True)
class FiatcResult:
    is_fiatc: bool
    m: int | None = None

    def __bool__(self):
        return self.is_fiatc


def is_fiatc(prof: ComplexityProfile) -> FiatcResult:
    """Strictly increasing up to some ``m < N``, then constant through ``N``."""
    if not prof.all_exact:
        raise ValueError("FIATC undecidable on horizon-limited data")
    p = prof.p
    m = 0
    while m < prof.N and p[m] < p[m + 1]:
        m += 1
    if m == prof.N:
        return FiatcResult(False)
    if all(v == p[m] for v in p[m:]):
        return FiatcResult(True, m)
    return FiatcResult(False)


def strictly_increasing(p) -> bool:
    return all(a < b for a, b in zip(p, p[1:]))


def least_period(word: str) -> int:
    """Smallest ``P >= 1`` with ``word[i] == word[i + P]`` wherever both exist."""
    for P in range(1, len(word) + 1):
        if all(word[i] == word[i + P] for i in range(len(word) - P)):
            return P
    return max(len(word), 1)


def least_period_biinfinite(src: BiInfiniteSource, N: int, horizon: int | None = None) -> int:
    if not (isinstance(src, BiInfiniteSource) and isinstance(src.left, EventuallyPeriodic)
            and isinstance(src.right, EventuallyPeriodic)):
        raise ValueError("least period needs a bi-infinite word built from eventually periodic sides")
    horizon = default_horizon(N + 1) if horizon is None else horizon
    window = src.window(horizon)
    if least_period(window) > len(window) // 2:
        raise ValueError("bi-infinite word is not periodic on the materialized window")
    prof = profile(src, N, horizon)
    res = is_fiatc(prof)
    if not res:
        raise ValueError("no plateau within horizon")
    return max(prof.p)


# --- classification ------------------------------------------------------


@dataclass(frozen=True)
class GapVerdict:
    """One of ``bounded``, ``linear``, ``consistent_with_linear``, ``undetermined``.

    ``bounded`` always comes with either a triple certificate or a plateau
    index ``m`` where an extendable language's exact profile stopped
    growing. ``linear`` carries a structural witness.
    """

    kind: str
    bound: int | None = None
    certificate: GapCertificate | None = None
    plateau: int | None = None
    checked_up_to: int | None = None
    reason: str | None = None

    @property
    def proven(self) -> bool:
        return self.kind in ("bounded", "linear")

    def to_json(self) -> dict:
        if self.kind == "bounded":
            if self.certificate is not None:
                return self.certificate.to_json()
            return {"verdict": "bounded", "bound": self.bound, "plateau": self.plateau}
        if self.kind == "linear":
            return {"verdict": "unbounded", "lower_bound": "p(n) > n for all n", **self.certificate.to_json()}
        if self.kind == "consistent_with_linear":
            return {"verdict": "consistent_with_linear", "checked_up_to": self.checked_up_to}
        return {"verdict": "undetermined", "reason": self.reason}


def classify_nfa(nfa: Nfa) -> GapVerdict:
    cert = automata.decide_bounded(_factor_dfa(nfa))
    if cert.bounded:
        return GapVerdict("bounded", cert.bound, cert)
    return GapVerdict("linear", certificate=cert)


def classify(src: LanguageSource, N: int = 64, horizon: int | None = None) -> GapVerdict:
    """Bounded complexity, or ``p(n) > n`` for every ``n``, as far as can be shown."""
    if isinstance(src, (RegularSource, FiniteSource)):
        return classify_nfa(src.to_nfa())
    if not isinstance(src, (InfiniteSource, BiInfiniteSource)):
        return GapVerdict("undetermined", reason=f"unsupported source {type(src).__name__}")
    prof = profile(src, N, horizon)
    p = prof.p
    for m in range(N):
        if p[m + 1] == p[m]:
            if prof.exact[m] and prof.exact[m + 1]:
                return GapVerdict("bounded", bound=p[m], plateau=m)
            return GapVerdict("undetermined", reason=f"plateau at n = {m} observed only within the horizon window")
    # window counts are lower bounds, so growth seen in the window is real
    if all(p[n] > n for n in range(N + 1)):
        return GapVerdict("consistent_with_linear", checked_up_to=N)
    return GapVerdict("undetermined", reason="profile neither plateaued nor exceeded n within the horizon")


# --- quantitative bounds -------------------------------------------------


def phi(x: int) -> int:
    """``ceil((x + 1) / 2) * floor((x + 1) / 2)``."""
    return ((x + 2) // 2) * ((x + 1) // 2)


def bb_bound_check(prof: ComplexityProfile) -> list[tuple[int, int]]:
    """Pairs ``(m, n)`` violating ``p(n + p(m) + m) <= phi(p(m))`` whenever ``p(m) <= m``.

    Inexact (window-limited) entries are skipped: a lower bound can neither
    establish the premise nor refute the conclusion.
    """
    p, N = prof.p, prof.N
    bad = []
    for m in range(N + 1):
        if not prof.exact[m] or p[m] > m:
            continue
        cap = phi(p[m])
        for n in range(N - p[m] - m + 1):
            k = n + p[m] + m
            if prof.exact[k] and p[k] > cap:
                bad.append((m, n))
    return bad


@dataclass(frozen=True)
class ConvolutionCheck:
    ok: bool
    violation: tuple[int, str] | None = None
    sup_f: int = 0
    sum_g: int = 0
    terms: tuple[int, ...] = field(default=(), repr=False)

    def __bool__(self):
        return self.ok


def convolution_bound_check(f, g, h, N: int) -> ConvolutionCheck:
    """Check ``h(n) <= sum_k f(n-k) g(k)`` and, for non-empty ``Y``, ``f(n) <= h(n)``.

    ``f``, ``g``, ``h`` are complexity sequences (or profiles) of ``X``, ``Y``
    and ``XY``. ``sup_f`` and ``sum_g`` are the two constants whose product
    bounds ``h`` when ``f`` is bounded and ``Y`` is finite.
    """
    f, g, h = (x.p if isinstance(x, ComplexityProfile) else tuple(x) for x in (f, g, h))
    terms = tuple(sum(f[n - k] * g[k] for k in range(n + 1)) for n in range(N + 1))
    y_nonempty = g[0] >= 1
    info = dict(sup_f=max(f[:N + 1]), sum_g=sum(g[:N + 1]), terms=terms)
    for n in range(N + 1):
        if h[n] > terms[n]:
            return ConvolutionCheck(False, (n, "convolution"), **info)
        if y_nonempty and f[n] > h[n]:
            return ConvolutionCheck(False, (n, "monotone"), **info)
    return ConvolutionCheck(True, None, **info)


@dataclass(frozen=True)
class PsCheck:
    ok: bool
    extendable: bool
    violations: tuple[tuple[int, str], ...] = ()

    def __bool__(self):
        return self.ok


def exercise_ps_check(src: LanguageSource, N: int, horizon: int | None = None,
                      prof: ComplexityProfile | None = None) -> PsCheck:
    """``p(n+1) - p(n) <= (alpha - 1) s(n)``; for extendable sources also ``>= s(n)``."""
    prof = prof or profile(src, N, horizon)
    if not all(prof.exact[: N + 1]):
        raise ValueError("increment bounds need exact profile entries")
    ext = is_extendable(src)
    alpha = src.alphabet.size
    bad = []
    for n in range(N):
        d = prof.p[n + 1] - prof.p[n]
        if d > (alpha - 1) * prof.s[n]:
            bad.append((n, "upper"))
        if ext and d < prof.s[n]:
            bad.append((n, "lower"))
    return PsCheck(not bad, ext, tuple(bad))


def concat(X, Y) -> frozenset[str]:
    return frozenset(x + y for x in X for y in Y)


def sorted_words(ws):
    return sorted(ws, key=shortlex)
