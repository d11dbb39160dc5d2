"""3-graphs, linear k-graphs, the named gadgets, and the monotone-edge property."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

LIMITS = {
    "monotone": 11,
    "iso": 8,
}


class HypergraphError(ValueError):
    pass


def _check_edges(n: int, k: int, edges) -> frozenset:
    out = set()
    for e in edges:
        e = tuple(int(x) for x in e)
        if len(set(e)) != k or len(e) != k:
            raise HypergraphError(f"edge {e} does not have {k} distinct vertices")
        if any(not (0 <= x < n) for x in e):
            raise HypergraphError(f"edge {e} has a vertex outside [0, {n})")
        e = tuple(sorted(e))
        if e in out:
            raise HypergraphError(f"duplicate edge {e}")
        out.add(e)
    return frozenset(out)


@dataclass(frozen=True)
class ThreeGraph:
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise HypergraphError(f"vertex count must be non-negative, got {self.n}")
        object.__setattr__(self, "edges", _check_edges(self.n, 3, self.edges))

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def relabel(self, perm: Sequence[int]) -> "ThreeGraph":
        return ThreeGraph(self.n, frozenset(tuple(sorted(perm[x] for x in e)) for e in self.edges))

    def __len__(self):
        return len(self.edges)


@dataclass(frozen=True)
class LinearKGraph:
    """k-uniform hypergraph in which two distinct edges share at most one vertex."""

    k: int
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.k < 3:
            raise HypergraphError(f"uniformity must be at least 3, got {self.k}")
        edges = _check_edges(self.n, self.k, self.edges)
        for e, f in itertools.combinations(sorted(edges), 2):
            if len(set(e) & set(f)) >= 2:
                raise HypergraphError(f"edges {e} and {f} share {len(set(e) & set(f))} vertices")
        object.__setattr__(self, "edges", edges)


def is_linear(edges) -> bool:
    edges = [set(e) for e in edges]
    return all(len(a & b) <= 1 for a, b in itertools.combinations(edges, 2))


def shadow(f: ThreeGraph) -> frozenset:
    """Vertex pairs ``(a, b)``, ``a < b``, covered by at least one edge."""
    return frozenset(p for e in f.edges for p in itertools.combinations(e, 2))


def named_threegraph(name: str, *params: int) -> ThreeGraph:
    """Build one of ``complete(m)``, ``k4minus``, ``f5star``, ``tight_cycle(l)``.

    ``f5star`` adds vertex 4 to k4minus (edges 012, 013, 023) with link the
    matching {01, 23}. ``tight_cycle(4)`` is the complete 3-graph on four
    vertices.
    """
    if name == "complete":
        (m,) = params
        return ThreeGraph(m, frozenset(itertools.combinations(range(m), 3)))
    if name == "k4minus":
        return ThreeGraph(4, frozenset({(0, 1, 2), (0, 1, 3), (0, 2, 3)}))
    if name == "f5star":
        return ThreeGraph(5, frozenset({(0, 1, 2), (0, 1, 3), (0, 2, 3), (0, 1, 4), (2, 3, 4)}))
    if name == "tight_cycle":
        (length,) = params
        if length < 4:
            raise HypergraphError(f"tight cycles need length >= 4, got {length}")
        return ThreeGraph(length, frozenset(tuple(sorted((i, (i + 1) % length, (i + 2) % length))) for i in range(length)))
    raise HypergraphError(f"unknown 3-graph {name!r}")


# triples generated per source edge, as indices into the sorted edge
F4_TRIPLES = ((0, 1, 2), (0, 2, 3))
F7_TRIPLES = ((0, 1, 3), (1, 2, 3), (0, 2, 3), (3, 4, 5), (3, 4, 6), (3, 5, 6))


def scheme_triples(scheme: str, k: int) -> tuple:
    if scheme == "FH":
        if k < 4:
            raise HypergraphError(f"scheme FH needs uniformity k = r+1 >= 4, got {k}")
        return tuple((0, i, j) for i, j in itertools.combinations(range(1, k), 2))
    if scheme == "F4":
        if k != 4:
            raise HypergraphError(f"scheme F4 needs uniformity 4, got {k}")
        return F4_TRIPLES
    if scheme == "F7":
        if k != 7:
            raise HypergraphError(f"scheme F7 needs uniformity 7, got {k}")
        return F7_TRIPLES
    raise HypergraphError(f"unknown scheme {scheme!r}; expected FH, F4 or F7")


def construct_from_linear(h: LinearKGraph, scheme: str) -> ThreeGraph:
    """Place the scheme's triples on every edge of ``h`` (edge vertices in increasing order).

    FH puts ``{x0, xi, xj}`` for ``1 <= i < j <= r`` on an edge
    ``x0 < x1 < ... < xr``; F4 puts ``v1v2v3, v1v3v4``; F7 puts the six
    triples through the middle vertex ``v4``.
    """
    pattern = scheme_triples(scheme, h.k)
    edges = set()
    for e in h.edges:
        e = sorted(e)
        for t in pattern:
            edges.add(tuple(e[i] for i in t))
    return ThreeGraph(h.n, frozenset(edges))


def single_edge_gadget(scheme: str, k: int | None = None) -> ThreeGraph:
    k = {"F4": 4, "F7": 7}.get(scheme, k)
    if k is None:
        raise HypergraphError("scheme FH needs an explicit uniformity")
    return construct_from_linear(LinearKGraph(k, k, frozenset({tuple(range(k))})), scheme)


# --------------------------------------------------------------------------
# monotone-edge property


def _monotone(sigma, e) -> bool:
    vals = [sigma[x] for x in e]
    inc = all(a < b for a, b in zip(vals, vals[1:]))
    return inc or all(a > b for a, b in zip(vals, vals[1:]))


class BudgetExceeded(RuntimeError):
    pass


def _violating_permutation(n: int, edges, budget: int | None = None):
    """Lexicographically first sigma monotone on no edge, plus the node count.

    sigma(0), sigma(1), ... are assigned in turn; an edge is checked once
    its largest vertex is assigned, and a monotone edge kills the branch.
    """
    closing = [[] for _ in range(n)]
    for e in edges:
        e = tuple(sorted(e))
        closing[e[-1]].append(e)
    sigma = [0] * n
    used = [False] * n
    nodes = 0

    def rec(v):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded
        if v == n:
            return True
        for val in range(n):
            if used[val]:
                continue
            sigma[v] = val
            if any(_monotone(sigma, e) for e in closing[v]):
                continue
            used[val] = True
            if rec(v + 1):
                return True
            used[val] = False
        return False

    found = rec(0)
    return (tuple(sigma) if found else None), nodes


def monotone_edge_property(h: LinearKGraph, limit: int | None = None):
    """``(holds, counterexample)``.

    ``holds`` is True iff every permutation of the vertices is increasing or
    decreasing on some edge. Otherwise the lexicographically first
    violating permutation (as the tuple ``sigma(0..n-1)``) is returned.
    """
    limit = LIMITS["monotone"] if limit is None else limit
    if h.n > limit:
        raise HypergraphError(f"monotone_edge_property supports n <= {limit}, got {h.n}")
    sigma, _ = _violating_permutation(h.n, h.edges)
    return sigma is None, sigma


def monotone_edge_property_naive(n: int, edges) -> bool:
    """Check every permutation directly; the independent oracle."""
    edges = [tuple(sorted(e)) for e in edges]
    return all(any(_monotone(s, e) for e in edges) for s in itertools.permutations(range(n)))


def random_maximal_linear(k: int, n: int, rng: random.Random) -> LinearKGraph:
    """Greedy maximal linear k-graph on [n] built from a shuffled list of k-sets."""
    cands = list(itertools.combinations(range(n), k))
    rng.shuffle(cands)
    covered = set()
    edges = []
    for e in cands:
        pairs = set(itertools.combinations(e, 2))
        if pairs & covered:
            continue
        covered |= pairs
        edges.append(e)
    return LinearKGraph(k, n, frozenset(edges))


def search_monotone_witness(k: int, n_max: int, budget: int, seed: int = 0, attempts_per_n: int = 20):
    """Randomised search for a linear k-graph with the monotone-edge property.

    Tries random maximal linear k-graphs for n = k..n_max until the node
    budget (shared by all property checks) runs out. ``None`` means nothing
    was found within the budget; it says nothing about existence.
    """
    if k < 3:
        raise HypergraphError(f"uniformity must be at least 3, got {k}")
    rng = random.Random(seed)
    left = budget
    for n in range(k, n_max + 1):
        for _ in range(attempts_per_n):
            if left <= 0:
                return None
            h = random_maximal_linear(k, n, rng)
            if not h.edges:
                continue
            try:
                sigma, used = _violating_permutation(n, h.edges, budget=left)
            except BudgetExceeded:
                return None
            left -= used
            if sigma is None:
                holds, _ = monotone_edge_property(h, limit=max(n, LIMITS["monotone"]))
                assert holds
                return h
    return None


# --------------------------------------------------------------------------
# small-scale isomorphism


def canonical_threegraph(f: ThreeGraph) -> tuple:
    """Least sorted edge list over all relabellings (brute force, n <= 8)."""
    if f.n > LIMITS["iso"]:
        raise HypergraphError(f"3-graph isomorphism supports n <= {LIMITS['iso']}, got {f.n}")
    best = None
    for perm in itertools.permutations(range(f.n)):
        key = tuple(sorted(tuple(sorted(perm[x] for x in e)) for e in f.edges))
        if best is None or key < best:
            best = key
    return (f.n, best)


def nonisomorphic_threegraphs(n: int):
    """One representative of every isomorphism class of 3-graphs on ``n`` vertices."""
    triples = list(itertools.combinations(range(n), 3))
    seen = set()
    for mask in range(1 << len(triples)):
        f = ThreeGraph(n, frozenset(t for i, t in enumerate(triples) if (mask >> i) & 1))
        key = canonical_threegraph(f)
        if key not in seen:
            seen.add(key)
            yield f


def automorphisms(f: ThreeGraph) -> list:
    if f.n > LIMITS["iso"]:
        raise HypergraphError(f"automorphism search supports n <= {LIMITS['iso']}, got {f.n}")
    return [p for p in itertools.permutations(range(f.n)) if f.relabel(p).edges == f.edges]
