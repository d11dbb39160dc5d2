"""Exact digraph Turán numbers at small n, and related extremal checks."""

from __future__ import annotations

import itertools
import json
import multiprocessing
import os
import threading
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .digraph import (
    Digraph,
    DigraphError,
    bidirected_turan,
    binom,
    canonical_key,
    contains,
    d10_family,
    d10_pattern,
    d10_sizes,
    digraph_from_key,
    f_value,
    gamma2,
    sum_of,
    transitive_tournament,
    turan_numbers,
)

LIMITS = {
    "ex_general": 5,
    "ex_small_pattern": 6,
    "small_pattern_size": 4,
    "gamma2": 5,
    "lower_bound_slack": 4,
    "d10_freeness": 20,
    "witness_cap": 100,
}

CACHE_ENV = "UNITURAN_CACHE"


class ExtremalError(ValueError):
    pass


@dataclass
class ExtremalResult:
    value: int
    witnesses: list = field(default_factory=list)  # canonical keys (bytes), sorted
    nodes: int = 0
    exhaustive: bool = True

    def witness_digraphs(self) -> list:
        return [digraph_from_key(k) for k in self.witnesses]


# --------------------------------------------------------------------------
# containment through a freshly added arc


class _PatternIndex:
    """The pattern's arcs, plus for each arc the remaining vertices to place."""

    def __init__(self, pattern: Digraph):
        if pattern.allow_loops and any(u == v for u, v in pattern.arcs):
            raise ExtremalError("patterns with loops are not supported")
        if not pattern.arcs:
            raise ExtremalError("pattern has no arcs; every large enough digraph contains it")
        self.k = pattern.n
        self.arcs = sorted(pattern.arcs)
        self.through = []
        for p, q in self.arcs:
            rest = [v for v in range(self.k) if v not in (p, q)]
            self.through.append((p, q, rest))

    def hits(self, out, n, x, y) -> bool:
        """Whether some copy of the pattern maps one of its arcs onto (x, y)."""
        others = [v for v in range(n) if v != x and v != y]
        img = [0] * self.k
        for p, q, rest in self.through:
            img[p], img[q] = x, y
            for choice in itertools.permutations(others, len(rest)):
                for v, h in zip(rest, choice):
                    img[v] = h
                if all((out[img[a]] >> img[b]) & 1 for a, b in self.arcs):
                    return True
        return False


def _check_ex_bounds(pattern: Digraph, n: int):
    if n < 0:
        raise ExtremalError(f"n must be non-negative, got {n}")
    small = pattern.n <= LIMITS["small_pattern_size"]
    bound = LIMITS["ex_small_pattern"] if small else LIMITS["ex_general"]
    if n > bound:
        raise ExtremalError(
            f"ex_exact on n={n} exceeds the bound n <= {bound} for a {pattern.n}-vertex pattern"
        )


# pair states in the order they are tried: both arcs, u->v, v->u, none
_STATES = (3, 1, 2, 0)


class _ExSearch:
    def __init__(self, index: _PatternIndex, n: int, best: int = -1, shared=None):
        self.index = index
        self.n = n
        self.pairs = list(itertools.combinations(range(n), 2))
        self.out = [0] * n
        self.arcs = 0
        self.best = best
        self.shared = shared
        self.keys = set()
        self.nodes = 0

    def _incumbent(self):
        if self.shared is not None:
            return max(self.best, self.shared.value)
        return self.best

    def _publish(self, value):
        if self.shared is not None:
            with self.shared.get_lock():
                if value > self.shared.value:
                    self.shared.value = value

    def _apply(self, u, v, s) -> bool:
        """Add the arcs of state ``s``; False (with nothing added) if that creates a copy."""
        out, n = self.out, self.n
        added = []
        ok = True
        for bit, (a, b) in ((1, (u, v)), (2, (v, u))):
            if s & bit:
                out[a] |= 1 << b
                added.append((a, b))
                if self.index.hits(out, n, a, b):
                    ok = False
                    break
        if not ok:
            for a, b in added:
                out[a] &= ~(1 << b)
            return False
        self.arcs += len(added)
        return True

    def _undo(self, u, v, s):
        if s & 1:
            self.out[u] &= ~(1 << v)
            self.arcs -= 1
        if s & 2:
            self.out[v] &= ~(1 << u)
            self.arcs -= 1

    def _leaf(self):
        if self.arcs > self.best:
            self.best = self.arcs
            self.keys = set()
            self._publish(self.arcs)
        if self.arcs == self.best and len(self.keys) < LIMITS["witness_cap"]:
            d = Digraph.from_masks(self.out)
            self.keys.add(canonical_key(d))

    def run(self, i=0):
        self.nodes += 1
        # strict comparison keeps every optimal leaf reachable, for the witness set
        if self.arcs + 2 * (len(self.pairs) - i) < self._incumbent():
            return
        if i == len(self.pairs):
            self._leaf()
            return
        u, v = self.pairs[i]
        for s in _STATES:
            if self._apply(u, v, s):
                self.run(i + 1)
                self._undo(u, v, s)

    def replay(self, prefix) -> bool:
        for (u, v), s in zip(self.pairs, prefix):
            if not self._apply(u, v, s):
                return False
        return True


_SHARED_BEST = None


def _init_worker(shared):
    global _SHARED_BEST
    _SHARED_BEST = shared


def _run_subtree(args):
    pattern, n, prefix = args
    search = _ExSearch(_PatternIndex(pattern), n, shared=_SHARED_BEST)
    if not search.replay(prefix):
        return -1, [], 1
    search.run(len(prefix))
    return search.best, sorted(search.keys), search.nodes


def _ex_parallel(pattern: Digraph, n: int, workers: int, depth: int) -> ExtremalResult:
    pairs = n * (n - 1) // 2
    depth = max(0, min(depth, pairs))
    prefixes = list(itertools.product(_STATES, repeat=depth))
    ctx = multiprocessing.get_context()
    shared = ctx.Value("i", -1)
    with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker, initargs=(shared,)) as pool:
        parts = list(pool.map(_run_subtree, [(pattern, n, p) for p in prefixes]))
    value = max(b for b, _, _ in parts)
    keys = set()
    for b, ks, _ in parts:
        if b == value:
            keys.update(ks)
    return ExtremalResult(value, sorted(keys)[: LIMITS["witness_cap"]], sum(nd for _, _, nd in parts), True)


def ex_exact(pattern: Digraph, n: int, cache: "ExtremalCache | None" = None, workers: int = 1, depth: int = 2) -> ExtremalResult:
    """Maximum arc count of a loop-free ``pattern``-free digraph on ``n`` vertices.

    Branch and bound over the pair states of ``(u, v)``, ``u < v`` in
    lexicographic order. A state is rejected as soon as one of its new arcs
    completes a copy of the pattern; a subtree is cut when even making all
    remaining pairs bidirected could not reach the incumbent. Witnesses are
    canonical keys of extremal digraphs, at most 100 classes.
    """
    index = _PatternIndex(pattern)
    _check_ex_bounds(pattern, n)
    if cache is not None:
        hit = cache.get(pattern, n)
        if hit is not None:
            return hit
    if workers > 1 and n >= 3:
        result = _ex_parallel(pattern, n, workers, depth)
    else:
        search = _ExSearch(index, n)
        search.run()
        result = ExtremalResult(search.best, sorted(search.keys), search.nodes, True)
    if cache is not None:
        cache.put(pattern, n, result)
    return result


def ex_bruteforce(pattern: Digraph, n: int) -> int:
    """Maximum over all 4^C(n,2) labelled digraphs, checked with the general embedder (n <= 4)."""
    if n > 4:
        raise ExtremalError(f"ex_bruteforce supports n <= 4, got {n}")
    from .digraph import digraph_from_code, count_labeled

    best = 0
    for code in range(count_labeled(n, "digraphs")):
        d = digraph_from_code(n, code)
        if d.num_arcs > best and contains(d, pattern) is None:
            best = d.num_arcs
    return best


@dataclass
class GoodnessRow:
    n: int
    ex: int
    f: int

    @property
    def ok(self) -> bool:
        return self.ex == self.f


def is_r_good_upto(d: Digraph, n_max: int, cache=None):
    """``(all rows match, rows)`` comparing ex(n, d) with f(n, r) for r <= n <= n_max.

    This only inspects a finite prefix of n; it is evidence, not a proof.
    """
    r = d.n
    rows = []
    for n in range(r, n_max + 1):
        rows.append(GoodnessRow(n, ex_exact(d, n, cache=cache).value, f_value(n, r)))
    return all(row.ok for row in rows), rows


# --------------------------------------------------------------------------
# degree-squared sums


class _Gamma2Search:
    def __init__(self, index: _PatternIndex, n: int):
        self.index = index
        self.n = n
        self.pairs = list(itertools.combinations(range(n), 2))
        self.out = [0] * n
        self.outdeg = [0] * n
        self.indeg = [0] * n
        self.open = [n - 1] * n  # undecided pairs at each vertex
        self.best = -1
        self.witness = None
        self.nodes = 0

    def _bound(self):
        a = sum((o + f) ** 2 for o, f in zip(self.outdeg, self.open))
        b = sum((i + f) ** 2 for i, f in zip(self.indeg, self.open))
        return max(a, b)

    def _set(self, a, b, on):
        if on:
            self.out[a] |= 1 << b
            self.outdeg[a] += 1
            self.indeg[b] += 1
        else:
            self.out[a] &= ~(1 << b)
            self.outdeg[a] -= 1
            self.indeg[b] -= 1

    def run(self, i=0):
        self.nodes += 1
        if self._bound() <= self.best:
            return
        if i == len(self.pairs):
            p = sum(x * x for x in self.outdeg)
            m = sum(x * x for x in self.indeg)
            value = max(p, m)
            if value > self.best:
                self.best = value
                self.witness = Digraph.from_masks(self.out)
            return
        u, v = self.pairs[i]
        self.open[u] -= 1
        self.open[v] -= 1
        for s in _STATES:
            added = []
            ok = True
            for bit, (a, b) in ((1, (u, v)), (2, (v, u))):
                if s & bit:
                    self._set(a, b, True)
                    added.append((a, b))
                    if self.index.hits(self.out, self.n, a, b):
                        ok = False
                        break
            if ok:
                self.run(i + 1)
            for a, b in added:
                self._set(a, b, False)
        self.open[u] += 1
        self.open[v] += 1


def max_gamma2(r: int, n: int, pattern: Digraph | None = None):
    """``(value, witness)`` maximising max(sum d+^2, sum d-^2) over pattern-free digraphs.

    The pattern defaults to the transitive tournament on r vertices.
    """
    if n > LIMITS["gamma2"]:
        raise ExtremalError(f"max_gamma2 supports n <= {LIMITS['gamma2']}, got {n}")
    if pattern is None:
        if r < 2:
            raise ExtremalError(f"r must be at least 2, got {r}")
        pattern = transitive_tournament(r)
    search = _Gamma2Search(_PatternIndex(pattern), n)
    search.run()
    return search.best, search.witness


def max_gamma2_bruteforce(pattern: Digraph, n: int) -> int:
    if n > 4:
        raise ExtremalError(f"max_gamma2_bruteforce supports n <= 4, got {n}")
    from .digraph import digraph_from_code, count_labeled

    best = 0
    for code in range(count_labeled(n, "digraphs")):
        d = digraph_from_code(n, code)
        g = gamma2(d)[2]
        if g > best and contains(d, pattern) is None:
            best = g
    return best


def gamma2_bound(r: int, n: int) -> Fraction:
    return Fraction(r - 2, r - 1) ** 2 * n**3


# --------------------------------------------------------------------------
# lower-bound constructions


def verify_lower_bound(r1: int, r2: int, r3: int, n: int, tournaments=None) -> bool:
    """Whether the bidirected Turán digraph on n vertices with r-1 parts avoids T1+T2+T3 and has f(n, r) arcs.

    ``tournaments`` optionally supplies the three summands; by default they
    are transitive tournaments of orders r1, r2, r3.
    """
    r = r1 + r2 + r3
    if n > r + LIMITS["lower_bound_slack"]:
        raise ExtremalError(f"verify_lower_bound supports n <= r + {LIMITS['lower_bound_slack']} = {r + LIMITS['lower_bound_slack']}, got {n}")
    if tournaments is None:
        tournaments = (transitive_tournament(r1), transitive_tournament(r2), transitive_tournament(r3))
    sizes = tuple(t.n for t in tournaments)
    if sizes != (r1, r2, r3) or not all(t.is_tournament() for t in tournaments):
        raise ExtremalError(f"summands must be tournaments of orders {(r1, r2, r3)}, got orders {sizes}")
    pattern = sum_of(*tournaments)
    host = bidirected_turan(n, r)
    return contains(host, pattern) is None and host.num_arcs == f_value(n, r)


@dataclass
class D10Report:
    n: int
    arcs: int
    f: int
    free: dict  # variant name -> bool, empty when n is above the embedding bound
    links: list  # (description, holds, first n >= 10 from which it holds up to the scan limit)
    excess_from: int | None = None  # same, for |A(D_n)| > 2 ex(n, K_10)

    @property
    def excess(self) -> bool:
        return self.arcs > self.f

    @property
    def chain_holds(self) -> bool:
        return all(h for _, h, _ in self.links)

    @property
    def ok(self) -> bool:
        return self.excess and all(self.free.values())


def _d10_arcs(n: int) -> int:
    return n * (n - 1) - sum(s * (s - 1) // 2 for s in d10_sizes(n))


def _d10_links(n: int):
    """The four comparisons of the arc-count chain at n, each as (lhs, rhs, strict)."""
    n = Fraction(n)
    a = Fraction(_d10_arcs(int(n)))
    mid = n * (n - 1) - 5 * binom((n + 4) / 5)
    quad = Fraction(9, 10) * n**2 - Fraction(3, 2) * n
    eight = Fraction(8, 9) * n**2
    return [
        ("|A(D_n)| > n(n-1) - 5*C((n+4)/5, 2)", a, mid, True),
        ("n(n-1) - 5*C((n+4)/5, 2) >= (9/10)n^2 - (3/2)n", mid, quad, False),
        ("(9/10)n^2 - (3/2)n > (8/9)n^2", quad, eight, True),
        ("(8/9)n^2 >= 2 ex(n, K_10)", eight, Fraction(f_value(int(n), 10)), False),
    ]


def _holds(lhs, rhs, strict):
    return lhs > rhs if strict else lhs >= rhs


def d10_first_holding(scan_to: int = 400) -> list:
    """For each link and then the direct comparison, the least n >= 10 such that it holds for every n' in [n, scan_to]."""
    firsts = []
    table = {m: _d10_links(m) for m in range(10, scan_to + 1)}
    for m in table:
        table[m].append(("direct", _d10_arcs(m), f_value(m, 10), True))
    for i in range(5):
        first = None
        for m in range(scan_to, 9, -1):
            _, lhs, rhs, strict = table[m][i]
            if not _holds(lhs, rhs, strict):
                break
            first = m
        firsts.append(first)
    return firsts


def d10_remark_check(n: int, check_freeness: bool | None = None) -> D10Report:
    """Arc count of D_n against 2 ex(n, K_10), plus freeness of D_n from both D_10 variants.

    Freeness is checked by embedding search when n is at most 20. Each link
    of the inequality chain is evaluated exactly at n and reported with the
    first n from which it keeps holding.
    """
    if n < 10:
        raise ExtremalError(f"the D_10 construction is compared for n >= 10, got {n}")
    if check_freeness is None:
        check_freeness = n <= LIMITS["d10_freeness"]
    free = {}
    if check_freeness:
        host = d10_family(n)
        for strong in (True, False):
            name = "strong" if strong else "dominating"
            free[name] = contains(host, d10_pattern(strong)) is None
    firsts = d10_first_holding()
    links = []
    for (desc, lhs, rhs, strict), first in zip(_d10_links(n), firsts):
        links.append((desc, _holds(lhs, rhs, strict), first))
    return D10Report(n, _d10_arcs(n), f_value(n, 10), free, links, firsts[4])


# --------------------------------------------------------------------------
# persistent cache


def _pattern_json(d: Digraph) -> dict:
    return {"n": d.n, "arcs": sorted([list(a) for a in d.arcs])}


class ExtremalCache:
    """JSON file mapping "<hex canonical key>:<n>" to an ex_exact result.

    Each entry stores the pattern itself; on load its canonical key is
    recomputed and entries whose key does not match are dropped.
    """

    def __init__(self, path: str | None):
        self.path = path
        self.lock = threading.Lock()
        self.entries = {}
        if path and os.path.exists(path):
            self._load()

    def _load(self):
        with open(self.path) as fh:
            raw = json.load(fh)
        for name, entry in raw.items():
            try:
                hexkey, n = name.rsplit(":", 1)
                pat = Digraph(entry["pattern"]["n"], frozenset(tuple(a) for a in entry["pattern"]["arcs"]))
                if canonical_key(pat).hex() != hexkey:
                    continue
                int(n)
            except (ValueError, KeyError, TypeError, DigraphError):
                continue
            self.entries[name] = entry

    @staticmethod
    def _name(pattern: Digraph, n: int) -> str:
        return f"{canonical_key(pattern).hex()}:{n}"

    def get(self, pattern: Digraph, n: int) -> ExtremalResult | None:
        with self.lock:
            entry = self.entries.get(self._name(pattern, n))
        if entry is None:
            return None
        return ExtremalResult(
            entry["value"], [bytes.fromhex(k) for k in entry["witness_keys"]], entry["nodes"], entry.get("exhaustive", True)
        )

    def put(self, pattern: Digraph, n: int, result: ExtremalResult):
        entry = {
            "value": result.value,
            "witness_keys": [k.hex() for k in result.witnesses],
            "nodes": result.nodes,
            "exhaustive": result.exhaustive,
            "pattern": _pattern_json(pattern),
        }
        with self.lock:
            self.entries[self._name(pattern, n)] = entry
            if self.path:
                self._save()

    def _save(self):
        directory = os.path.dirname(os.path.abspath(self.path))
        os.makedirs(directory, exist_ok=True)
        tmp = self.path + ".tmp"
        with open(tmp, "w") as fh:
            json.dump(self.entries, fh, indent=1, sort_keys=True)
        os.replace(tmp, self.path)


def default_cache(setting: str | None = None) -> ExtremalCache | None:
    """Cache from an explicit setting or the environment; "off" disables it."""
    setting = setting if setting is not None else os.environ.get(CACHE_ENV)
    if setting == "off":
        return None
    if not setting:
        setting = os.path.join(os.path.expanduser("~"), ".cache", "unituran", "extremal.json")
    return ExtremalCache(setting)


def turan_reference(n: int, r: int) -> tuple:
    """``(ex(n, K_r), 2 ex(n, K_r))`` for quick reference in reports."""
    return turan_numbers(n, r)
