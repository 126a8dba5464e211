"""Check harness: every statement is run against builtins, random regular
languages and brute-force oracles.

The oracles at the top of this module deliberately share no code with
:mod:`subcomplexity.automata`: they trim, simulate and enumerate on the raw
transition relation with plain sets and sliding windows.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from functools import lru_cache

from . import automata
from .automata import Nfa
from .complexity import (ComplexityProfile, bb_bound_check, classify, classify_nfa, concat, convolution_bound_check,
                         exercise_ps_check, is_fiatc, least_period, profile, strictly_increasing)
from .langspec import (AB, BUILTINS, BiInfiniteSource, EventuallyPeriodic, InfiniteSource, RegularSource, as_nfa,
                       builtin, default_horizon, is_extendable, periodic_biinfinite, source_label)
from .words import Alphabet, primitive_root, shortlex

ORACLE_MAX_LEN = 14


# --- oracles ---------------------------------------------------------------


def oracle_factors(words, n: int) -> frozenset[str]:
    """Length-``n`` factors of an explicit word list, by sliding windows."""
    out = set()
    for w in words:
        for i in range(len(w) - n + 1):
            out.add(w[i:i + n])
    return frozenset(out)


def _edges(nfa: Nfa):
    out = {}
    for p, a, q in nfa.transitions:
        out.setdefault(p, []).append((a, q))
    return out


def _useful_states(nfa: Nfa) -> set[int]:
    fwd = _edges(nfa)
    bwd = {}
    for p, _, q in nfa.transitions:
        bwd.setdefault(q, []).append(p)

    def closure(seed, nxt):
        seen, todo = set(seed), list(seed)
        while todo:
            for r in nxt(todo.pop()):
                if r not in seen:
                    seen.add(r)
                    todo.append(r)
        return seen

    return closure(nfa.starts, lambda p: [q for _, q in fwd.get(p, ())]) & closure(nfa.finals, lambda q: bwd.get(q, ()))


def oracle_words(nfa: Nfa, max_len: int) -> list[str]:
    """Every accepted word of length ``<= max_len``, by direct simulation."""
    if max_len > ORACLE_MAX_LEN:
        raise ValueError(f"oracle truncation {max_len} exceeds {ORACLE_MAX_LEN}")
    fwd = _edges(nfa)
    useful = _useful_states(nfa)
    frontier = {"": frozenset(s for s in nfa.starts if s in useful)} if useful else {}
    out = []
    for n in range(max_len + 1):
        out += [w for w, st in frontier.items() if st & nfa.finals]
        if n == max_len:
            break
        nxt = {}
        for w, st in frontier.items():
            for p in st:
                for a, q in fwd.get(p, ()):
                    if q in useful:
                        nxt.setdefault(w + a, set()).add(q)
        frontier = {w: frozenset(s) for w, s in nxt.items()}
    return sorted(out, key=shortlex)


def oracle_path_factors(nfa: Nfa, n: int, limit: int | None = None) -> frozenset[str]:
    """Labels of length-``n`` paths between useful states: the length-``n`` factors.

    With ``limit``, each intermediate set is cut to ``limit`` members; the
    result then has exactly ``min(limit, p(n))`` members or more, so
    comparisons against ``limit - 1`` stay exact.
    """
    fwd = _edges(nfa)
    useful = sorted(_useful_states(nfa))

    @lru_cache(maxsize=None)
    def labels(q, r):
        if r == 0:
            return frozenset([""])
        acc = set()
        for a, q2 in sorted(fwd.get(q, ())):
            if q2 in useful_set:
                for w in labels(q2, r - 1):
                    acc.add(a + w)
                    if limit is not None and len(acc) >= limit:
                        return frozenset(acc)
        return frozenset(acc)

    useful_set = set(useful)
    if not useful:
        return frozenset()
    out = set()
    for q in useful:
        out |= labels(q, n)
        if limit is not None and len(out) >= limit:
            break
    return frozenset(out)


def oracle_is_factor(nfa: Nfa, w: str) -> bool:
    fwd = _edges(nfa)
    useful = _useful_states(nfa)
    cur = set(useful)
    for c in w:
        cur = {q for p in cur for a, q in fwd.get(p, ()) if a == c and q in useful}
        if not cur:
            return False
    return bool(useful)


# --- reports and random specs --------------------------------------------


@dataclass
class CheckReport:
    check: str
    instance: str
    outcome: str
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.outcome not in ("pass", "fail", "undetermined"):
            raise ValueError(f"bad outcome {self.outcome!r}")
        if self.outcome == "fail" and "counterexample" not in self.details:
            raise ValueError("a failing report must carry a counterexample")

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"

    def to_json(self) -> str:
        return json.dumps({"check": self.check, "instance": self.instance, "outcome": self.outcome,
                           "details": self.details}, sort_keys=True, ensure_ascii=False)


@dataclass(frozen=True)
class RandomRegularSpec:
    seed: int
    states: int
    alphabet_size: int
    transition_density: float
    final_density: float

    def __post_init__(self):
        if not (1 <= self.states <= 8 and 1 <= self.alphabet_size <= 3):
            raise ValueError("random specs use at most 8 states and 3 letters")
        if not (0 <= self.transition_density <= 1 and 0 < self.final_density <= 1):
            raise ValueError("densities out of range")

    @classmethod
    def from_seed(cls, seed: int) -> "RandomRegularSpec":
        rng = random.Random(seed)
        return cls(seed, rng.randint(1, 8), rng.randint(1, 3), round(rng.uniform(0.2, 0.9), 4),
                   round(rng.uniform(0.1, 1.0), 4))

    def build(self) -> Nfa:
        rng = random.Random(f"{self.seed}:{self.states}:{self.alphabet_size}")
        alphabet = Alphabet("abc"[: self.alphabet_size])
        # each (state, letter) gets an edge with the density; a second, nondeterministic one a quarter as often
        trans = []
        for p in range(self.states):
            for a in alphabet:
                for odds in (self.transition_density, self.transition_density / 4):
                    if rng.random() < odds:
                        trans.append((p, a, rng.randrange(self.states)))
        finals = [q for q in range(self.states) if rng.random() < self.final_density] or [rng.randrange(self.states)]
        return Nfa(self.states, alphabet, trans, [0], finals)

    @property
    def label(self) -> str:
        return f"random:{self.seed:#018x}"


def derive_seeds(seed: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(64) for _ in range(count)]


def random_specs(seed: int, count: int) -> list[RandomRegularSpec]:
    return [RandomRegularSpec.from_seed(s) for s in derive_seeds(seed, count)]


def random_primitive_cycles(seed: int, count: int, max_len: int = 8) -> list[str]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        w = "".join(rng.choice("ab") for _ in range(rng.randint(1, max_len)))
        if primitive_root(w) == w:
            out.append(w)
    return out


def _target(obj):
    """(label, nfa) for a random spec, a builtin name, a source, or a bare NFA."""
    if isinstance(obj, RandomRegularSpec):
        return obj.label, obj.build()
    if isinstance(obj, str):
        src = builtin(obj)
        return obj, as_nfa(src)
    if isinstance(obj, Nfa):
        return "nfa", obj
    return source_label(obj), as_nfa(obj)


# --- checks ----------------------------------------------------------------


def check_gap_theorem(target, N: int = 12) -> CheckReport:
    """Bounded, or ``p(n) > n`` everywhere; the verdict is re-checked by the oracle."""
    label, nfa = _target(target)
    if nfa is None:
        src = builtin(target) if isinstance(target, str) else target
        verdict = classify(src, max(N, 50))
        details = {"verdict": verdict.to_json()}
        if verdict.kind == "bounded":
            p = profile(src, max(N, 50)).p
            bad = [n for n, v in enumerate(p) if v > verdict.bound]
            if bad:
                return CheckReport("gap", label, "fail", {**details, "counterexample": {"n": bad[0], "p": p[bad[0]]}})
            return CheckReport("gap", label, "pass", details)
        return CheckReport("gap", label, "undetermined", details)

    verdict = classify_nfa(nfa)
    details = {"verdict": verdict.to_json()}
    if verdict.kind == "bounded":
        B = verdict.bound
        for n in range(N + 1):
            got = oracle_path_factors(nfa, n, limit=B + 1)
            if len(got) > B:
                return CheckReport("gap", label, "fail",
                                   {**details, "counterexample": {"n": n, "factors": sorted(got, key=shortlex)}})
        return CheckReport("gap", label, "pass", details)
    if verdict.kind != "linear":
        return CheckReport("gap", label, "fail", {**details, "counterexample": "regular source not decided"})
    for n in range(N + 1):
        got = oracle_path_factors(nfa, n, limit=n + 1)
        if len(got) <= n:
            return CheckReport("gap", label, "fail",
                               {**details, "counterexample": {"n": n, "factors": sorted(got, key=shortlex)}})
    wit = verdict.certificate.witness
    for i in range(3):
        for j in range(3):
            w = automata.witness_words(wit, i, j)
            if not oracle_is_factor(nfa, w):
                return CheckReport("gap", label, "fail", {**details, "counterexample": {"witness_word": w}})
    return CheckReport("gap", label, "pass", details)


def _cover_factor_bound(triples) -> int:
    return sum((len(t.x) + len(t.y) + len(t.z) + 1) ** 2 for t in triples)


def check_er82v(target, N: int = 12, drop: int | None = None, formal: bool = True) -> CheckReport:
    """The bounded-verdict triple set covers the language, in both modes.

    ``drop`` removes one triple first (negative control); the check then
    runs on the factor language, where every triple is needed.
    """
    label, nfa = _target(target)
    verdict = classify_nfa(nfa)
    if verdict.kind != "bounded":
        return CheckReport("er82v", label, "undetermined", {"reason": "complexity is unbounded"})
    triples = list(verdict.certificate.triples)
    details = {"triples": len(triples), "bound": verdict.bound}
    langs = [("factors", automata.factor_closure(nfa))]
    if drop is not None:
        details["dropped"] = list(triples.pop(drop)[:3])
        label = f"{label}#drop{drop}"
    else:
        langs.insert(0, ("language", nfa))
    modes = ["sampled"] + (["formal"] if formal else [])
    for what, lang in langs:
        for mode in modes:
            res = automata.verify_triple_cover(lang, triples, mode, N)
            if res.cap_exceeded:
                details[f"{what}:{mode}"] = "cap exceeded"
                continue
            details[f"{what}:{mode}"] = res.ok
            if not res.ok:
                return CheckReport("er82v", label, "fail",
                                   {**details, "counterexample": {"word": res.counterexample, "mode": mode}})
    if drop is None:
        # converse: the cover language itself has bounded complexity
        cover = automata.cover_nfa(triples, nfa.alphabet)
        cap = _cover_factor_bound(triples)
        for n in range(N + 1):
            got = oracle_path_factors(cover, n, limit=cap + 1)
            if len(got) > cap:
                return CheckReport("er82v", label, "fail",
                                   {**details, "counterexample": {"cover_complexity_n": n, "bound": cap}})
        details["cover_bound"] = cap
    return CheckReport("er82v", label, "pass", details)


def check_mh1938(src: BiInfiniteSource, N: int = 24) -> CheckReport:
    label = source_label(src)
    horizon = default_horizon(N + 1)
    prof = profile(src, N, horizon)
    details = {"p": list(prof.p)}
    if isinstance(src.left, EventuallyPeriodic) and isinstance(src.right, EventuallyPeriodic):
        window = src.window(horizon)
        period = least_period(window)
        if period <= len(window) // 2:
            res = is_fiatc(prof)
            details.update(least_period=period, fiatc_m=res.m)
            if not res:
                return CheckReport("mh1938", label, "undetermined" if max(prof.p) < period else "fail",
                                   {**details, "counterexample": "profile is not FIATC"})
            if max(prof.p) != period:
                return CheckReport("mh1938", label, "fail",
                                   {**details, "counterexample": {"sup_p": max(prof.p), "least_period": period}})
            return CheckReport("mh1938", label, "pass", details)
        if not strictly_increasing(prof.p):
            return CheckReport("mh1938", label, "fail", {**details, "counterexample": "aperiodic but not increasing"})
        return CheckReport("mh1938", label, "pass", details)
    if strictly_increasing(prof.p):
        return CheckReport("mh1938", label, "pass", details)
    return CheckReport("mh1938", label, "undetermined", {**details, "reason": "plateau seen; periodicity unknown"})


def check_mh1973(src: InfiniteSource, N: int = 50) -> CheckReport:
    label = source_label(src)
    horizon = default_horizon(N + 1)
    prof = profile(src, N, horizon)
    details = {"p": list(prof.p)}
    if isinstance(src.gen, EventuallyPeriodic):
        period = least_period(src.window(horizon)[len(src.gen.prefix):])
        res = is_fiatc(prof)
        details.update(period=period, fiatc_m=res.m)
        if not res:
            return CheckReport("mh1973", label, "fail", {**details, "counterexample": "profile is not FIATC"})
        if period > max(prof.p):
            return CheckReport("mh1973", label, "fail",
                               {**details, "counterexample": {"sup_p": max(prof.p), "period": period}})
        return CheckReport("mh1973", label, "pass", details)
    if strictly_increasing(prof.p):
        return CheckReport("mh1973", label, "pass", details)
    return CheckReport("mh1973", label, "undetermined", {**details, "reason": "plateau seen; periodicity unknown"})


def _factor_sets(nfa: Nfa, n_max: int) -> list[frozenset[str]]:
    dfa = automata.factor_dfa(nfa)
    return [frozenset(automata.words_of_length(dfa, n)) for n in range(n_max + 1)]


def check_claims_chain(target, n_max: int = 8, k_max: int | None = None) -> CheckReport:
    """Monotone factor chain, extendable limit, the bounded-transfer claim, and stabilization."""
    label, nfa = _target(target)
    if nfa is None:
        return _claims_word_source(builtin(target) if isinstance(target, str) else target, label, n_max)
    t, q = automata.lprime_index(nfa)
    k_max = t + q if k_max is None else k_max
    shifted = [automata.shift_finals(nfa, k) for k in range(k_max + 1)]
    F = [_factor_sets(m, n_max) for m in shifted]
    lprime = automata.stabilize_lprime(nfa)
    FL = _factor_sets(lprime, n_max)
    details = {"t": t, "q": q, "k_max": k_max}

    def fail(claim, cx):
        return CheckReport("claims", label, "fail", {**details, "claim": claim, "counterexample": cx})

    for k in range(k_max):
        for n in range(n_max + 1):
            extra = F[k + 1][n] - F[k][n]
            if extra:
                return fail("monotone", {"k": k, "n": n, "word": min(extra, key=shortlex)})
    for n in range(n_max + 1):
        meet = frozenset.intersection(*(F[k][n] for k in range(k_max + 1)))
        if meet != FL[n]:
            return fail("limit", {"n": n, "difference": sorted(meet ^ FL[n], key=shortlex)[:5]})
    if not is_extendable(RegularSource(nfa.alphabet, lprime)):
        return fail("extendable", {"reason": "automaton check"})
    for n in range(n_max):
        for w in FL[n]:
            if not any(w + a in FL[n + 1] for a in nfa.alphabet):
                return fail("extendable", {"word": w})
    stab = []
    for n in range(n_max + 1):
        k = next((k for k in range(min(t, k_max) + 1) if F[k][n] <= FL[n]), None)
        if k is None:
            return fail("stabilization", {"n": n})
        stab.append(k)
    details["stabilized_at"] = stab
    p_bounded = classify_nfa(nfa).kind == "bounded"
    details["p_bounded"] = p_bounded
    for k, m in enumerate(shifted):
        if classify_nfa(m).kind == "bounded" and not p_bounded:
            return fail("transfer", {"k": k})
    lp_prof = [len(s) for s in FL]
    if not strictly_increasing(lp_prof) and not p_bounded:
        return fail("dichotomy", {"lprime_profile": lp_prof})
    return CheckReport("claims", label, "pass", details)


def _claims_word_source(src, label: str, n_max: int) -> CheckReport:
    """Every factor of a one-sided or bi-infinite word extends to the right inside the word.

    So the factor language is extendable, each L_k equals it, and so does
    L'. The factor chain is constant, L' is extendable, stabilization
    happens at index 0, and bounded transfer reduces to p_0 = p. Nothing
    here depends on the window.
    """
    if not isinstance(src, (InfiniteSource, BiInfiniteSource)):
        return CheckReport("claims", label, "undetermined", {"reason": "language is not regular"})
    return CheckReport("claims", label, "pass", {"t": 0, "q": 1, "structural": "factor language of an infinite word",
                                                 "stabilized_at": [0] * (n_max + 1)})


def pair_decomposition(nfa: Nfa) -> list[tuple[str, str]] | None:
    """Pairs ``(x, y)`` with ``L`` inside the union of ``x y*``, when ``L`` has finitely many special factors."""
    if not automata.finitely_many_branching_words(automata.factor_dfa(nfa)):
        return None
    dfa = automata.regular_dfa(nfa)
    if dfa.states == 0:
        return []
    pairs: list[tuple[str, str]] = []
    residual: list[str] = []
    comps, comp_of = automata._components(dfa)
    cyclic = {comp_of[p] for (p, _), q in dfa.delta.items() if comp_of[p] == comp_of[q]}

    def walk(q, acc):
        if comp_of[q] in cyclic:
            cyc, r = "", q
            while True:
                (a, r), = dfa.out_edges(r)
                cyc += a
                if r == q:
                    break
            r, u = q, ""
            for a in cyc:
                if r in dfa.finals:
                    pairs.append((acc + u, cyc[len(u):] + cyc[:len(u)]))
                r = dfa.delta[r, a]
                u += a
            return
        if q in dfa.finals:
            residual.append(acc)
        for a, r in dfa.out_edges(q):
            walk(r, acc + a)

    walk(dfa.start, "")
    for w in sorted(residual, key=shortlex):
        if any(_pair_covers(p, w) for p in pairs):
            continue
        pairs.append(("", w or dfa.alphabet.symbols[0]))
    return pairs


def _pair_covers(pair, w: str) -> bool:
    x, y = pair
    if not w.startswith(x):
        return False
    rest = w[len(x):]
    return len(rest) % len(y) == 0 and rest == y * (len(rest) // len(y))


def check_exercise2_decomposition(target, N: int = 12) -> CheckReport:
    label, nfa = _target(target)
    pairs = pair_decomposition(nfa)
    if pairs is None:
        return CheckReport("exercise2", label, "undetermined", {"reason": "infinitely many special factors"})
    details = {"pairs": [list(p) for p in pairs]}
    for w in oracle_words(nfa, min(N, ORACLE_MAX_LEN)):
        if not any(_pair_covers(p, w) for p in pairs):
            return CheckReport("exercise2", label, "fail", {**details, "counterexample": w})
    return CheckReport("exercise2", label, "pass", details)


def check_exercise4(target, N: int = 11) -> CheckReport:
    if isinstance(target, RandomRegularSpec):
        label, src = target.label, RegularSource(target.build().alphabet, target.build())
    elif isinstance(target, str):
        label, src = target, builtin(target)
    else:
        label, src = source_label(target), target
    prof = profile(src, N + 1)
    if not all(prof.exact):
        if isinstance(src, (InfiniteSource, BiInfiniteSource)) and as_nfa(src) is not None:
            nfa = as_nfa(src)
            src = RegularSource(src.alphabet, automata.factor_closure(nfa), label)
            prof = profile(src, N + 1)
        else:
            return CheckReport("exercise4", label, "undetermined", {"reason": "horizon-limited profile"})
    res = exercise_ps_check(src, N + 1, prof=prof)
    details = {"extendable": res.extendable, "p": list(prof.p), "s": list(prof.s)}
    if not res.ok:
        return CheckReport("exercise4", label, "fail", {**details, "counterexample": [list(v) for v in res.violations]})
    return CheckReport("exercise4", label, "pass", details)


def check_bb(label: str, prof: ComplexityProfile) -> CheckReport:
    bad = bb_bound_check(prof)
    if bad:
        return CheckReport("bb2005", label, "fail", {"counterexample": [list(v) for v in bad[:5]]})
    return CheckReport("bb2005", label, "pass", {"N": prof.N})


def convolution_instance(seed: int):
    """A random ``(X, Y)``: ``X`` a truncated random regular language, ``Y`` at most five words."""
    spec = RandomRegularSpec.from_seed(seed)
    nfa = spec.build()
    X = frozenset(oracle_words(nfa, 6))
    rng = random.Random(seed ^ 0x5EED)
    letters = list(nfa.alphabet)
    Y = frozenset("".join(rng.choice(letters) for _ in range(rng.randint(0, 4))) for _ in range(rng.randint(1, 5)))
    return spec.label, X, Y


def check_convolution(seed: int, N: int = 10) -> CheckReport:
    label, X, Y = convolution_instance(seed)
    XY = concat(X, Y)
    f, g, h = ([len(oracle_factors(S, n)) for n in range(N + 1)] for S in (X, Y, XY))
    res = convolution_bound_check(f, g, h, N)
    details = {"f": f, "g": g, "h": h, "sup_f": res.sup_f, "sum_g": res.sum_g}
    if not res.ok:
        return CheckReport("convolution", label, "fail", {**details, "counterexample": list(res.violation)})
    return CheckReport("convolution", label, "pass", details)


def negative_control(report: CheckReport, name: str) -> CheckReport:
    """Wrap a check that is expected to fail: it passes iff the inner check failed with a counterexample."""
    if report.outcome == "fail":
        return CheckReport(name, report.instance, "pass", {"rejected_with": report.details["counterexample"]})
    return CheckReport(name, report.instance, "fail",
                       {"counterexample": "corrupted instance was accepted", "inner": report.outcome})


# --- suites ----------------------------------------------------------------

REGULAR_BUILTINS = [name for name in BUILTINS if as_nfa(builtin(name)) is not None]
WORD_BUILTINS = [name for name in BUILTINS if name not in REGULAR_BUILTINS]


def _suite_gap(seed, count):
    yield from (check_gap_theorem(b) for b in BUILTINS)
    yield from (check_gap_theorem(s) for s in random_specs(seed, count))


def _suite_er82v(seed, count):
    yield from (check_er82v(b) for b in REGULAR_BUILTINS)
    controls = 0
    for s in random_specs(seed, count):
        rep = check_er82v(s)
        yield rep
        if rep.outcome == "pass" and controls < 10 and rep.details["triples"] > 0:
            controls += 1
            for i in range(rep.details["triples"]):
                yield negative_control(check_er82v(s, drop=i, formal=True), "er82v-negative")


def _suite_mh(seed, count):
    yield check_mh1938(builtin("AAABBB"))
    for c in random_primitive_cycles(seed, min(count, 50)):
        yield check_mh1938(periodic_biinfinite(c))
    yield check_mh1973(InfiniteSource(AB, EventuallyPeriodic("b", "a"), "b.a^w"))
    for name in WORD_BUILTINS:
        yield check_mh1973(builtin(name))


def _suite_claims(seed, count):
    yield from (check_claims_chain(b) for b in BUILTINS)
    yield from (check_claims_chain(s) for s in random_specs(seed, count))


def _suite_exercise2(seed, count):
    yield from (check_exercise2_decomposition(b) for b in REGULAR_BUILTINS)
    yield from (check_exercise2_decomposition(s) for s in random_specs(seed, count))


def _suite_exercise4(seed, count):
    yield from (check_exercise4(b) for b in REGULAR_BUILTINS)
    yield from (check_exercise4(s) for s in random_specs(seed, count))


def _suite_convolution(seed, count):
    yield from (check_convolution(s) for s in derive_seeds(seed ^ 0xC0, count))


def _suite_bb(seed, count):
    for name in BUILTINS:
        yield check_bb(name, profile(builtin(name), 24))
    for s in random_specs(seed, count):
        yield check_bb(s.label, profile(RegularSource(s.build().alphabet, s.build()), 16))


SUITES = {
    "gap": _suite_gap,
    "er82v": _suite_er82v,
    "mh": _suite_mh,
    "claims": _suite_claims,
    "exercise2": _suite_exercise2,
    "exercise4": _suite_exercise4,
    "convolution": _suite_convolution,
    "bb": _suite_bb,
}


def run_suite(name: str, seed: int = 42, count: int = 50) -> list[CheckReport]:
    names = list(SUITES) if name == "all" else [name]
    out = []
    for n in names:
        if n not in SUITES:
            raise ValueError(f"unknown suite {n!r}; choose from all, {', '.join(SUITES)}")
        out.extend(SUITES[n](seed, count))
    return out


def summarize(reports) -> dict[str, dict[str, int]]:
    table: dict[str, dict[str, int]] = {}
    for r in reports:
        row = table.setdefault(r.check, {"pass": 0, "fail": 0, "undetermined": 0})
        row[r.outcome] += 1
    return table
