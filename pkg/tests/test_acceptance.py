"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (printed in the terminal summary) and
then asserts. All checks are exact integer comparisons, and each must
finish in under 60 seconds.
"""

import subprocess
import sys
import time

from subcomplexity.complexity import profile, special_factors, strictly_increasing
from subcomplexity.langspec import BUILTINS, RegularSource, builtin, periodic_biinfinite
from subcomplexity.verifier import (check_bb, check_claims_chain, check_convolution, check_er82v, check_exercise4,
                                    check_gap_theorem, check_mh1938, derive_seeds, negative_control, oracle_factors,
                                    oracle_words, random_primitive_cycles, random_specs)

SEED = 42
LIMIT = 60.0
RESULTS: dict[int, str] = {}
# profiles produced by criteria 1-7, re-used by criterion 10
PROFILES: dict[str, object] = {}


def record(k: int, title: str, ok: bool, started: float, detail: str = ""):
    took = time.perf_counter() - started
    ok = ok and took < LIMIT
    RESULTS[k] = f"{'PASS' if ok else 'FAIL'} criterion {k:>2}: {title} ({took:.1f}s){'; ' + detail if detail else ''}"
    assert ok, RESULTS[k]


def test_c01_example1_u():
    t = time.perf_counter()
    prof = profile(builtin("U"), 64)
    PROFILES["U"] = prof
    words = oracle_words(builtin("U").nfa, 14)
    oracle = [len(oracle_factors(words, n)) for n in range(11)]
    ok = list(prof.p) == [n + 1 for n in range(65)] and prof.all_exact and oracle == [n + 1 for n in range(11)]
    record(1, "U has p(n) = n + 1 (n <= 64; oracle n <= 10)", ok, t)


def test_c02_example3_baab():
    t = time.perf_counter()
    prof = profile(builtin("BAAB"), 21)
    PROFILES["BAAB"] = prof
    odd = all(prof.p[n] == 3 for n in range(3, 22, 2))
    even = all(prof.p[n] == 4 for n in range(2, 21, 2))
    note = BUILTINS["BAAB"].note or ""
    ok = odd and even and prof.p[1] == 2 and "p(1) = 2" in note
    record(2, "BAAB has p = 3 (odd n >= 3), 4 (even n >= 2), p(1) = 2 noted", ok, t)


def test_c03_example4_mix():
    t = time.perf_counter()
    prof = profile(builtin("MIX"), 21)
    PROFILES["MIX"] = prof
    p = prof.p
    claimed = {2: 3, **{n: n + 1 for n in range(1, 22, 2)}, **{n: n + 3 for n in range(4, 21, 2)}}
    wrong = {n: (v, p[n]) for n, v in claimed.items() if p[n] != v}
    detail = ""
    if wrong:
        first = sorted(wrong.items())[:4]
        detail = "expected/got " + ", ".join(f"p({n}) {v}/{g}" for n, (v, g) in first)
        detail += f" ... ({len(wrong)} of {len(claimed)} values differ)"
    record(3, "MIX has p(2) = 3, p = n + 1 (odd n), n + 3 (even n >= 4)", not wrong, t, detail)


def test_c04_akb():
    t = time.perf_counter()
    prof = profile(builtin("AKB"), 64)
    PROFILES["AKB"] = prof
    ok = all(prof.p[n] == 2 for n in range(1, 65))
    ok = ok and all(special_factors(builtin("AKB"), n).specials == {"a" * n} for n in range(21))
    ok = ok and all(prof.s[n] == 1 for n in range(21))
    record(4, "AKB has p(n) = 2 (n <= 64), specials {a^n} (n <= 20)", ok, t)


SPECS = random_specs(SEED, 500)


def test_c05_gap_dichotomy():
    t = time.perf_counter()
    bad, kinds = [], {"bounded": 0, "unbounded": 0}
    for spec in SPECS:
        r = check_gap_theorem(spec, N=12)
        if r.outcome != "pass":
            bad.append(r.instance)
        else:
            kinds[r.details["verdict"]["verdict"]] += 1
    ok = not bad and sum(kinds.values()) == 500
    record(5, "gap dichotomy on 500 random regular languages, oracle n <= 12", ok, t,
           f"{kinds['bounded']} bounded, {kinds['unbounded']} unbounded, {len(bad)} failures")


def test_c06_er82v_round_trip():
    t = time.perf_counter()
    bounded = fails = formal = controls = 0
    for spec in SPECS:
        r = check_er82v(spec, N=12)
        if r.outcome == "undetermined":
            continue
        bounded += 1
        if r.outcome != "pass":
            fails += 1
            continue
        formal += r.details.get("factors:formal") is True
        if controls < 12 and r.details["triples"] > 0:
            controls += 1
            for i in range(r.details["triples"]):
                if not negative_control(check_er82v(spec, N=12, drop=i), "neg").passed:
                    fails += 1
    ok = fails == 0 and controls >= 10 and bounded > 0
    record(6, "triple covers of every bounded verdict; dropped triples rejected", ok, t,
           f"{bounded} bounded, {formal} formally checked, {controls} negative-control instances, {fails} failures")


def test_c07_morse_hedlund():
    t = time.perf_counter()
    bad = []
    for c in random_primitive_cycles(SEED, 50):
        src = periodic_biinfinite(c)
        r = check_mh1938(src)
        PROFILES[f"cycle:{c}"] = profile(src, 24)
        if not (r.passed and r.details["least_period"] == len(c) and max(r.details["p"]) == len(c)):
            bad.append(c)
    fib = profile(builtin("FIBONACCI"), 50)
    tm = profile(builtin("THUEMORSE"), 50)
    PROFILES["FIBONACCI"], PROFILES["THUEMORSE"] = fib, tm
    ok = not bad and strictly_increasing(fib.p) and strictly_increasing(tm.p)
    ok = ok and list(fib.p) == [n + 1 for n in range(51)]
    record(7, "50 periodic words FIATC with sup p = period; FIBONACCI, THUEMORSE increasing", ok, t,
           f"{len(bad)} failing cycles")


def test_c08_exercise4():
    t = time.perf_counter()
    targets = ["U", "BAAB", "MIX", "AKB"] + SPECS
    reports = [check_exercise4(x, N=11) for x in targets]
    bad = [r.instance for r in reports if not r.passed]
    ext = sum(r.details.get("extendable", False) for r in reports)
    record(8, "increment bounds (alpha - 1) s(n) >= p(n+1) - p(n) >= s(n) (extendable)", not bad, t,
           f"{len(reports)} instances, {ext} extendable, {len(bad)} failures")


def test_c09_convolution():
    t = time.perf_counter()
    reports = [check_convolution(s, N=10) for s in derive_seeds(SEED ^ 0xC0, 100)]
    bad = [r.instance for r in reports if not r.passed]
    record(9, "h(n) <= sum f(n-k) g(k) on 100 random pairs, n <= 10", not bad, t, f"{len(bad)} failures")


def test_c10_bb_bound():
    t = time.perf_counter()
    for name in ("U", "BAAB", "MIX", "AKB"):
        PROFILES.setdefault(name, profile(builtin(name), 64))
    for spec in SPECS:
        nfa = spec.build()
        PROFILES[spec.label] = profile(RegularSource(nfa.alphabet, nfa), 12)
    for c in random_primitive_cycles(SEED, 50):
        PROFILES.setdefault(f"cycle:{c}", profile(periodic_biinfinite(c), 24))
    for name in ("FIBONACCI", "THUEMORSE"):
        PROFILES.setdefault(name, profile(builtin(name), 50))
    bad = [k for k, prof in PROFILES.items() if not check_bb(k, prof).passed]
    record(10, "p(n + p(m) + m) <= phi(p(m)) on every profile of criteria 1-7", not bad, t,
           f"{len(PROFILES)} profiles, {len(bad)} violations")


def test_c11_claims():
    t = time.perf_counter()
    reports = [check_claims_chain(b, n_max=8) for b in BUILTINS]
    reports += [check_claims_chain(s, n_max=8) for s in random_specs(SEED, 100)]
    bad = [r.instance for r in reports if not r.passed]
    record(11, "claims chain on all builtins and 100 random specs (n <= 8)", not bad, t,
           f"{len(reports)} instances, {len(bad)} not passing")


def test_c12_determinism(tmp_path):
    t = time.perf_counter()
    outs = []
    for i in range(2):
        path = tmp_path / f"run{i}.jsonl"
        proc = subprocess.run([sys.executable, "-m", "subcomplexity", "verify", "--suite", "all", "--seed", "42",
                               "--out", str(path)], capture_output=True)
        outs.append((proc.returncode, proc.stdout, path.read_bytes()))
    same = outs[0] == outs[1]
    ok = same and outs[0][0] == 0 and b"failures: 0" in outs[0][1]
    record(12, "two runs of verify --suite all --seed 42 are byte-identical", ok, t,
           f"{len(outs[0][2].splitlines())} report lines, exit {outs[0][0]}")
