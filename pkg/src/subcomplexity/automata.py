"""Finite automata for exact decisions about regular languages.

Everything here is a pure function over immutable :class:`Nfa` / :class:`Dfa`
values. States are the integers ``0 .. states-1``. Iteration order is always
state index, then alphabet order, so certificates come out byte-identical
from run to run.

The boundedness test works on the factor closure of a language: the
complexity function of ``L`` is the word-count function of ``Fact(L)``, and a
trim DFA accepts a language with boundedly many words per length exactly
when each of its strongly connected components is at most a single simple
cycle and no path visits two cyclic components.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

import networkx as nx

from .words import Alphabet, shortlex

SUBSET_CAP = 2 ** 20


class CapExceeded(RuntimeError):
    """A subset construction would exceed the state cap."""


@dataclass(frozen=True)
class Nfa:
    """Epsilon-free NFA with any number of start states."""

    states: int
    alphabet: Alphabet
    transitions: frozenset[tuple[int, str, int]]
    starts: frozenset[int]
    finals: frozenset[int]

    def __init__(self, states: int, alphabet: Alphabet, transitions: Iterable[tuple[int, str, int]],
                 starts: Iterable[int], finals: Iterable[int]):
        trans = frozenset((int(p), a, int(q)) for p, a, q in transitions)
        starts = frozenset(starts)
        finals = frozenset(finals)
        for p, a, q in trans:
            if not (0 <= p < states and 0 <= q < states):
                raise ValueError(f"transition ({p}, {a!r}, {q}) uses a state outside 0..{states - 1}")
            if a not in alphabet:
                raise ValueError(f"transition symbol {a!r} not in alphabet")
        for s in starts | finals:
            if not 0 <= s < states:
                raise ValueError(f"state {s} outside 0..{states - 1}")
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "transitions", trans)
        object.__setattr__(self, "starts", starts)
        object.__setattr__(self, "finals", finals)

    @cached_property
    def successors(self) -> dict[tuple[int, str], tuple[int, ...]]:
        succ: dict[tuple[int, str], list[int]] = {}
        for p, a, q in sorted(self.transitions, key=lambda t: (t[0], self.alphabet.index(t[1]), t[2])):
            succ.setdefault((p, a), []).append(q)
        return {k: tuple(v) for k, v in succ.items()}

    @cached_property
    def predecessors(self) -> dict[int, tuple[int, ...]]:
        pred: dict[int, set[int]] = {}
        for p, _, q in self.transitions:
            pred.setdefault(q, set()).add(p)
        return {q: tuple(sorted(ps)) for q, ps in pred.items()}

    def step(self, current: Iterable[int], symbol: str) -> frozenset[int]:
        succ = self.successors
        return frozenset(q for p in current for q in succ.get((p, symbol), ()))

    def accepts(self, word: str) -> bool:
        current = self.starts
        for c in word:
            current = self.step(current, c)
            if not current:
                return False
        return bool(current & self.finals)


@dataclass(frozen=True)
class Dfa:
    """Partial DFA. A DFA with zero states (and ``start=None``) accepts nothing."""

    states: int
    alphabet: Alphabet
    delta: dict = field(hash=False)
    start: int | None
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "finals", frozenset(self.finals))
        if self.states == 0:
            if self.start is not None or self.delta or self.finals:
                raise ValueError("a zero-state DFA has no start, transitions or finals")
            return
        if self.start is None or not 0 <= self.start < self.states:
            raise ValueError(f"start state {self.start} out of range")
        for (p, a), q in self.delta.items():
            if not (0 <= p < self.states and 0 <= q < self.states) or a not in self.alphabet:
                raise ValueError(f"bad transition ({p}, {a!r}) -> {q}")

    def __eq__(self, other):
        if not isinstance(other, Dfa):
            return NotImplemented
        return (self.states, self.alphabet, self.delta, self.start, self.finals) == \
            (other.states, other.alphabet, other.delta, other.start, other.finals)

    __hash__ = None

    def out_edges(self, q: int) -> list[tuple[str, int]]:
        return [(a, self.delta[q, a]) for a in self.alphabet if (q, a) in self.delta]

    def accepts(self, word: str) -> bool:
        q = self.start
        for c in word:
            if q is None:
                return False
            q = self.delta.get((q, c))
        return q is not None and q in self.finals

    def is_trim(self) -> bool:
        if self.states == 0:
            return True
        return len(_dfa_useful(self)) == self.states

    def to_nfa(self) -> Nfa:
        return Nfa(self.states, self.alphabet,
                   [(p, a, q) for (p, a), q in self.delta.items()],
                   [] if self.start is None else [self.start], self.finals)


def empty_nfa(alphabet: Alphabet) -> Nfa:
    return Nfa(0, alphabet, [], [], [])


def nfa_from_words(words: Iterable[str], alphabet: Alphabet) -> Nfa:
    """Prefix-tree automaton accepting exactly the given finite set."""
    words = sorted(set(alphabet.check(w) for w in words), key=shortlex)
    if not words:
        return empty_nfa(alphabet)
    nodes = {"": 0}
    trans = []
    finals = []
    for w in words:
        for i in range(1, len(w) + 1):
            if w[:i] not in nodes:
                nodes[w[:i]] = len(nodes)
                trans.append((nodes[w[:i - 1]], w[i - 1], nodes[w[:i]]))
        finals.append(nodes[w])
    return Nfa(len(nodes), alphabet, trans, [0], finals)


def union(*nfas: Nfa) -> Nfa:
    """Disjoint union; all operands must share one alphabet."""
    alphabet = nfas[0].alphabet
    trans, starts, finals = [], [], []
    offset = 0
    for m in nfas:
        if m.alphabet != alphabet:
            raise ValueError("union of automata over different alphabets")
        trans += [(p + offset, a, q + offset) for p, a, q in m.transitions]
        starts += [s + offset for s in m.starts]
        finals += [f + offset for f in m.finals]
        offset += m.states
    return Nfa(offset, alphabet, trans, starts, finals)


def star_of_word(word: str, alphabet: Alphabet) -> Nfa:
    """``word*`` as a single cycle through the start state."""
    if not word:
        return Nfa(1, alphabet, [], [0], [0])
    n = len(word)
    return Nfa(n, alphabet, [(i, c, (i + 1) % n) for i, c in enumerate(word)], [0], [0])


def concat(*nfas: Nfa) -> Nfa:
    """Epsilon-free concatenation of the operands' languages."""
    out = nfas[0]
    for m in nfas[1:]:
        off = out.states
        trans = set(out.transitions) | {(p + off, a, q + off) for p, a, q in m.transitions}
        # jump from every final of the left part along the right part's first letters
        trans |= {(f, a, q + off) for f in out.finals for s, a, q in m.transitions if s in m.starts}
        starts = set(out.starts)
        if out.starts & out.finals:
            starts |= {s + off for s in m.starts}
        finals = {f + off for f in m.finals}
        if m.starts & m.finals:
            finals |= out.finals
        out = Nfa(off + m.states, out.alphabet, trans, starts, finals)
    return out


def _reachable(starts: Iterable[int], succ) -> set[int]:
    seen = set(starts)
    todo = list(seen)
    while todo:
        p = todo.pop()
        for q in succ(p):
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return seen


def _nfa_useful(nfa: Nfa) -> set[int]:
    fwd: dict[int, list[int]] = {}
    for p, _, q in nfa.transitions:
        fwd.setdefault(p, []).append(q)
    acc = _reachable(nfa.starts, lambda p: fwd.get(p, ()))
    co = _reachable(nfa.finals, lambda q: nfa.predecessors.get(q, ()))
    return acc & co


def _dfa_useful(dfa: Dfa) -> set[int]:
    if dfa.start is None:
        return set()
    fwd: dict[int, list[int]] = {}
    bwd: dict[int, list[int]] = {}
    for (p, _), q in dfa.delta.items():
        fwd.setdefault(p, []).append(q)
        bwd.setdefault(q, []).append(p)
    acc = _reachable([dfa.start], lambda p: fwd.get(p, ()))
    co = _reachable(dfa.finals, lambda q: bwd.get(q, ()))
    return acc & co


def trim(m):
    """Drop states that are unreachable or cannot reach a final state.

    Accepts either kind of automaton and returns the same kind, with the
    surviving states renumbered in increasing order of their old index.
    """
    if isinstance(m, Dfa):
        keep = sorted(_dfa_useful(m))
        if not keep:
            return Dfa(0, m.alphabet, {}, None, frozenset())
        idx = {q: i for i, q in enumerate(keep)}
        delta = {(idx[p], a): idx[q] for (p, a), q in m.delta.items() if p in idx and q in idx}
        return Dfa(len(keep), m.alphabet, delta, idx[m.start], frozenset(idx[f] for f in m.finals if f in idx))
    keep = sorted(_nfa_useful(m))
    idx = {q: i for i, q in enumerate(keep)}
    return Nfa(len(keep), m.alphabet,
               [(idx[p], a, idx[q]) for p, a, q in m.transitions if p in idx and q in idx],
               [idx[s] for s in m.starts if s in idx], [idx[f] for f in m.finals if f in idx])


def determinize(nfa: Nfa, cap: int = SUBSET_CAP) -> Dfa:
    """Accessible subset construction. The empty subset is never materialized."""
    start = frozenset(nfa.starts)
    if not start:
        return Dfa(0, nfa.alphabet, {}, None, frozenset())
    index = {start: 0}
    order = [start]
    delta = {}
    i = 0
    while i < len(order):
        cur = order[i]
        for a in nfa.alphabet:
            nxt = nfa.step(cur, a)
            if not nxt:
                continue
            if nxt not in index:
                if len(order) >= cap:
                    raise CapExceeded("determinization cap exceeded")
                index[nxt] = len(order)
                order.append(nxt)
            delta[i, a] = index[nxt]
        i += 1
    finals = frozenset(j for j, s in enumerate(order) if s & nfa.finals)
    return Dfa(len(order), nfa.alphabet, delta, 0, finals)


def _renumber_bfs(dfa: Dfa) -> Dfa:
    if dfa.states == 0:
        return dfa
    order = [dfa.start]
    idx = {dfa.start: 0}
    i = 0
    while i < len(order):
        for _, q in dfa.out_edges(order[i]):
            if q not in idx:
                idx[q] = len(order)
                order.append(q)
        i += 1
    delta = {(idx[p], a): idx[q] for (p, a), q in dfa.delta.items() if p in idx}
    return Dfa(len(order), dfa.alphabet, delta, 0, frozenset(idx[f] for f in dfa.finals if f in idx))


def minimize(dfa: Dfa) -> Dfa:
    """Minimal trim DFA, states numbered in breadth-first order from the start.

    The canonical numbering makes two minimal DFAs for the same language
    compare equal with ``==``.
    """
    dfa = trim(dfa)
    if dfa.states == 0:
        return dfa
    # Moore refinement; a missing transition goes to the implicit sink (-1)
    block = [1 if q in dfa.finals else 0 for q in range(dfa.states)]
    while True:
        sigs = {}
        new = []
        for q in range(dfa.states):
            sig = (block[q],) + tuple(block[dfa.delta[q, a]] if (q, a) in dfa.delta else -1 for a in dfa.alphabet)
            new.append(sigs.setdefault(sig, len(sigs)))
        stable = len(sigs) == len(set(block))
        block = new
        if stable:
            break
    delta = {(block[p], a): block[q] for (p, a), q in dfa.delta.items()}
    quotient = Dfa(len(set(block)), dfa.alphabet, delta, block[dfa.start],
                   frozenset(block[f] for f in dfa.finals))
    return _renumber_bfs(quotient)


def factor_closure(nfa: Nfa) -> Nfa:
    """Automaton for the set of all factors of the accepted language."""
    t = trim(nfa)
    everything = range(t.states)
    return Nfa(t.states, t.alphabet, t.transitions, everything, everything)


def _shift_once(nfa: Nfa, finals: frozenset[int]) -> frozenset[int]:
    return frozenset(p for p, _, q in nfa.transitions if q in finals)


def shift_finals(nfa: Nfa, k: int) -> Nfa:
    """Automaton for ``{w : w x in L for some x of length k}``."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    finals = nfa.finals
    for _ in range(k):
        finals = _shift_once(nfa, finals)
    return Nfa(nfa.states, nfa.alphabet, nfa.transitions, nfa.starts, finals)


def lprime_index(nfa: Nfa) -> tuple[int, int]:
    """``(t, q)``: the shifted final sets repeat with period ``q`` from index ``t``."""
    seen = {}
    finals = nfa.finals
    k = 0
    while finals not in seen:
        seen[finals] = k
        finals = _shift_once(nfa, finals)
        k += 1
    t = seen[finals]
    return t, k - t


def stabilize_lprime(nfa: Nfa) -> Nfa:
    """Automaton for the words that are factors of every shifted language.

    The factor languages of the shifts form a decreasing chain; once the
    final-state set repeats, two members of the chain coincide, which pins
    the whole chain from that index on.
    """
    t, _ = lprime_index(nfa)
    return factor_closure(shift_finals(nfa, t))


def count_words_per_length(dfa: Dfa, n_max: int) -> list[int]:
    """``c[n]`` = number of accepted words of length ``n``, for ``n <= n_max``."""
    if dfa.states == 0:
        return [0] * (n_max + 1)
    edges = [[q for _, q in dfa.out_edges(p)] for p in range(dfa.states)]
    paths = [0] * dfa.states
    paths[dfa.start] = 1
    out = []
    for n in range(n_max + 1):
        out.append(sum(paths[f] for f in dfa.finals))
        if n == n_max:
            break
        nxt = [0] * dfa.states
        for p, c in enumerate(paths):
            if c:
                for q in edges[p]:
                    nxt[q] += c
        paths = nxt
    return out


def count_branching_per_length(dfa: Dfa, n_max: int) -> list[int]:
    """Number of length-``n`` words leading to a state with two or more out-letters.

    On a DFA for a factor-closed language these are the special factors.
    """
    if dfa.states == 0:
        return [0] * (n_max + 1)
    branching = [q for q in range(dfa.states) if len(dfa.out_edges(q)) >= 2]
    edges = [[q for _, q in dfa.out_edges(p)] for p in range(dfa.states)]
    paths = [0] * dfa.states
    paths[dfa.start] = 1
    out = []
    for n in range(n_max + 1):
        out.append(sum(paths[q] for q in branching))
        nxt = [0] * dfa.states
        for p, c in enumerate(paths):
            if c:
                for q in edges[p]:
                    nxt[q] += c
        paths = nxt
    return out


def words_of_length(dfa: Dfa, n: int) -> Iterator[str]:
    """Accepted words of length ``n`` in lexicographic (alphabet) order."""
    if dfa.states == 0:
        return
    t = trim(dfa)
    if t.states == 0:
        return
    # can_finish[r]: states with an accepting path of exactly r more letters
    can_finish = [set() for _ in range(n + 1)]
    can_finish[0] = set(t.finals)
    for r in range(1, n + 1):
        can_finish[r] = {p for p in range(t.states) if any(q in can_finish[r - 1] for _, q in t.out_edges(p))}

    def walk(q, prefix, rest):
        if rest == 0:
            yield prefix
            return
        for a, r in t.out_edges(q):
            if r in can_finish[rest - 1]:
                yield from walk(r, prefix + a, rest - 1)

    if t.start in can_finish[n]:
        yield from walk(t.start, "", n)


def accepted_words(nfa: Nfa, max_len: int) -> list[str]:
    """All accepted words of length ``<= max_len``, in shortlex order."""
    t = trim(nfa)
    out = []
    layer = {"": frozenset(t.starts)} if t.starts else {}
    for n in range(max_len + 1):
        for w in sorted(layer):
            if layer[w] & t.finals:
                out.append(w)
        if n == max_len:
            break
        nxt = {}
        for w in sorted(layer):
            for a in t.alphabet:
                s = t.step(layer[w], a)
                if s:
                    nxt[w + a] = s
        layer = nxt
    return out


def regular_dfa(nfa: Nfa, cap: int = SUBSET_CAP) -> Dfa:
    """Minimal trim DFA of an NFA's language."""
    return minimize(determinize(trim(nfa), cap))


def factor_dfa(nfa: Nfa, cap: int = SUBSET_CAP) -> Dfa:
    """Minimal trim DFA of the factor language."""
    return regular_dfa(factor_closure(nfa), cap)


def equivalent(m1: Nfa, m2: Nfa, cap: int = SUBSET_CAP) -> bool:
    return regular_dfa(m1, cap) == regular_dfa(m2, cap)


# --- boundedness ---------------------------------------------------------


class Triple(NamedTuple):
    """``x y^n z`` for all ``n``; with ``acyclic`` set, only ``n = 0`` (the word ``xz``)."""

    x: str
    y: str
    z: str
    acyclic: bool = False

    def covers(self, w: str) -> bool:
        if self.acyclic:
            return w == self.x + self.z
        if not (w.startswith(self.x) and w.endswith(self.z)):
            return False
        middle = len(w) - len(self.x) - len(self.z)
        if middle < 0:
            return False
        if not self.y:
            return middle == 0
        if middle % len(self.y):
            return False
        return w[len(self.x):len(self.x) + middle] == self.y * (middle // len(self.y))


@dataclass(frozen=True)
class GapCertificate:
    """Either a finite triple cover with a per-length bound, or an unboundedness witness."""

    verdict: str
    bound: int | None = None
    triples: tuple[Triple, ...] = ()
    witness: dict | None = None

    @property
    def bounded(self) -> bool:
        return self.verdict == "bounded"

    def to_json(self) -> dict:
        if self.bounded:
            out = {"verdict": "bounded", "bound": self.bound,
                   "triples": [[t.x, t.y, t.z] for t in self.triples]}
            acyclic = [i for i, t in enumerate(self.triples) if t.acyclic]
            if acyclic:
                out["exponent_zero"] = acyclic
            return out
        return {"verdict": "unbounded", "witness": self.witness}

    @classmethod
    def from_json(cls, data: dict) -> "GapCertificate":
        if data["verdict"] == "bounded":
            zero = set(data.get("exponent_zero", ()))
            triples = tuple(Triple(x, y, z, i in zero) for i, (x, y, z) in enumerate(data["triples"]))
            return cls("bounded", data["bound"], triples)
        return cls("unbounded", witness=data["witness"])


def _components(dfa: Dfa) -> tuple[list[list[int]], list[int]]:
    g = nx.DiGraph()
    g.add_nodes_from(range(dfa.states))
    g.add_edges_from((p, q) for (p, _), q in dfa.delta.items())
    comps = sorted((sorted(c) for c in nx.strongly_connected_components(g)), key=lambda c: c[0])
    comp_of = [0] * dfa.states
    for i, c in enumerate(comps):
        for q in c:
            comp_of[q] = i
    return comps, comp_of


def _shortest(dfa: Dfa, src: int, targets, allowed=None) -> tuple[str, int]:
    """BFS path label from ``src`` to the first state in ``targets`` (``src`` itself counts)."""
    if src in targets:
        return "", src
    parent = {src: None}
    queue = deque([src])
    while queue:
        p = queue.popleft()
        for a, q in dfa.out_edges(p):
            if q in parent or (allowed is not None and q not in allowed):
                continue
            parent[q] = (p, a)
            if q in targets:
                label = []
                r = q
                while parent[r] is not None:
                    r, c = parent[r]
                    label.append(c)
                return "".join(reversed(label)), q
            queue.append(q)
    raise ValueError("no path")


def decide_bounded(dfa: Dfa) -> GapCertificate:
    """Decide whether a trim DFA accepts boundedly many words of each length."""
    if not dfa.is_trim():
        raise ValueError("decide_bounded requires a trim DFA")
    if dfa.states == 0:
        return GapCertificate("bounded", 0, ())
    comps, comp_of = _components(dfa)
    internal = [[(a, q) for a, q in dfa.out_edges(p) if comp_of[q] == comp_of[p]] for p in range(dfa.states)]
    cyclic = [any(internal[q] for q in c) for c in comps]
    finals = dfa.finals

    for ci, c in enumerate(comps):
        for q in c:
            if len(internal[q]) >= 2:
                members = set(c)
                cycles = [a + _shortest(dfa, r, {q}, members)[0] for a, r in internal[q][:2]]
                return GapCertificate("unbounded", witness={
                    "kind": "branching",
                    "state": q,
                    "prefix": _shortest(dfa, dfa.start, {q})[0],
                    "cycles": cycles,
                    "suffix": _shortest(dfa, q, finals)[0],
                })

    def cycle_from(q):
        label = []
        r = q
        while True:
            a, r = internal[r][0]
            label.append(a)
            if r == q:
                return "".join(label)

    for ci, c in enumerate(comps):
        if not cyclic[ci]:
            continue
        others = {q for cj, d in enumerate(comps) if cj != ci and cyclic[cj] for q in d}
        prefix, entry = _shortest(dfa, dfa.start, set(c))
        try:
            middle, d = _shortest(dfa, entry, others)
        except ValueError:
            continue
        return GapCertificate("unbounded", witness={
            "kind": "chained",
            "prefix": prefix,
            "cycle1": cycle_from(entry),
            "middle": middle,
            "cycle2": cycle_from(d),
            "suffix": _shortest(dfa, d, finals)[0],
        })

    def tails(q, acc, out):
        # words along trivial-component paths from q that end in a final state
        if q in finals:
            out.append(acc)
        for a, r in dfa.out_edges(q):
            tails(r, acc + a, out)

    entries: list[tuple[str, int]] = []
    acyclic_words: list[str] = []

    def walk(q, acc):
        if cyclic[comp_of[q]]:
            entries.append((acc, q))
            return
        if q in finals:
            acyclic_words.append(acc)
        for a, r in dfa.out_edges(q):
            walk(r, acc + a)

    walk(dfa.start, "")
    triples: list[Triple] = []
    for x, e in entries:
        y = cycle_from(e)
        q, partial = e, ""
        for step in range(len(y)):
            exits: list[str] = [""] if q in finals else []
            for a, r in dfa.out_edges(q):
                if comp_of[r] != comp_of[q]:
                    tails(r, a, exits)
            triples += [Triple(x, y, partial + w) for w in exits]
            a, q = internal[q][0]
            partial += a
    y0 = dfa.alphabet.symbols[0]
    triples += [Triple(w, y0, "", True) for w in acyclic_words]
    return GapCertificate("bounded", _per_length_bound(dfa, triples), tuple(triples))


def _per_length_bound(dfa: Dfa, triples: Sequence[Triple]) -> int:
    # the count sequence is periodic beyond the longest x+z, with period lcm(|y|)
    period = 1
    reach = 0
    for t in triples:
        reach = max(reach, len(t.x) + len(t.z))
        if not t.acyclic:
            period = math.lcm(period, len(t.y))
    if period > 100_000:
        cyclic = sum(1 for t in triples if not t.acyclic)
        return cyclic + max((sum(1 for t in triples if t.acyclic and len(t.x) == n) for n in range(reach + 1)), default=0)
    return max(count_words_per_length(dfa, reach + period))


def witness_words(witness: dict, i: int, j: int) -> str:
    """Instantiate an unboundedness witness with cycle exponents ``i`` and ``j``."""
    if witness["kind"] == "branching":
        c1, c2 = witness["cycles"]
        return witness["prefix"] + c1 * i + c2 * j + witness["suffix"]
    return witness["prefix"] + witness["cycle1"] * i + witness["middle"] + witness["cycle2"] * j + witness["suffix"]


def cover_nfa(triples: Iterable[Triple], alphabet: Alphabet) -> Nfa:
    """NFA for the union of ``x y* z`` over a triple set."""
    trans = []
    starts = []
    finals = []
    n = 0

    def chain(start, word):
        nonlocal n
        cur = start
        for c in word:
            trans.append((cur, c, n))
            cur = n
            n += 1
        return cur

    for t in triples:
        s = n
        n += 1
        starts.append(s)
        hub = chain(s, t.x)
        if not t.acyclic and t.y:
            loop_end = chain(hub, t.y[:-1])
            trans.append((loop_end, t.y[-1], hub))
        finals.append(chain(hub, t.z))
    return Nfa(n, alphabet, trans, starts, finals)


@dataclass(frozen=True)
class CoverCheck:
    ok: bool
    counterexample: str | None = None
    cap_exceeded: bool = False

    def __bool__(self):
        return self.ok


def verify_triple_cover(nfa: Nfa, triples: Iterable[Triple], mode: str = "formal",
                        sample_max: int = 12, cap: int = SUBSET_CAP) -> CoverCheck:
    """Check that every word accepted by ``nfa`` lies in some ``x y^n z``.

    ``formal`` decides the inclusion exactly by exploring the product of the
    language with the determinized cover; ``sampled`` tests every accepted
    word up to ``sample_max`` letters directly.
    """
    triples = list(triples)
    if mode == "sampled":
        for w in accepted_words(nfa, sample_max):
            if not any(t.covers(w) for t in triples):
                return CoverCheck(False, w)
        return CoverCheck(True)
    if mode != "formal":
        raise ValueError(f"unknown mode {mode!r}")
    try:
        cover = determinize(cover_nfa(triples, nfa.alphabet), cap)
    except CapExceeded:
        return CoverCheck(False, cap_exceeded=True)
    lang = trim(nfa)
    start = (frozenset(lang.starts), cover.start)
    if not start[0]:
        return CoverCheck(True)
    parent = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        s, c = node
        if s & lang.finals and (c is None or c not in cover.finals):
            label = []
            while parent[node] is not None:
                node, a = parent[node]
                label.append(a)
            return CoverCheck(False, "".join(reversed(label)))
        for a in lang.alphabet:
            s2 = lang.step(s, a)
            if not s2:
                continue
            c2 = None if c is None else cover.delta.get((c, a))
            nxt = (s2, c2)
            if nxt not in parent:
                if len(parent) >= cap:
                    return CoverCheck(False, cap_exceeded=True)
                parent[nxt] = (node, a)
                queue.append(nxt)
    return CoverCheck(True)


def finitely_many_branching_words(dfa: Dfa) -> bool:
    """True when only finitely many words lead to a state with two out-letters."""
    if dfa.states == 0:
        return True
    comps, comp_of = _components(dfa)
    cyclic = {comp_of[p] for (p, _), q in dfa.delta.items() if comp_of[p] == comp_of[q]}
    pumped = _reachable([q for q in range(dfa.states) if comp_of[q] in cyclic],
                        lambda p: [q for _, q in dfa.out_edges(p)])
    return not any(len(dfa.out_edges(q)) >= 2 for q in pumped)
