"""Deciding whether a 3-graph is colourable by a palette.

A colouring is a vertex order plus a colour for every shadow pair such that
each edge u < v < w (in that order) reads an admissible triple
``(phi(uv), phi(uw), phi(vw))``.

Orders are given as a tuple listing the vertices from first to last.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Sequence

from ._csp import TernaryCSP
from .hypergraph import ThreeGraph, automorphisms, shadow
from .palette import Palette, PaletteHom, reverse

LIMITS = {
    "solver_n": 10,
    "solver_shadow": 45,
    "oracle_n": 6,
    "oracle_shadow": 12,
}


class ColoringError(ValueError):
    pass


def _pair(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ColoringWitness:
    order: tuple
    phi: dict = field(hash=False)

    def to_json(self) -> dict:
        return {
            "order": list(self.order),
            "phi": {f"{u},{v}": c for (u, v), c in sorted(self.phi.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "ColoringWitness":
        phi = {}
        for key, c in data["phi"].items():
            u, v = (int(x) for x in key.split(","))
            phi[_pair(u, v)] = int(c)
        return cls(tuple(int(v) for v in data["order"]), phi)


@dataclass
class ColoringResult:
    witness: ColoringWitness | None
    orders_tried: int = 0
    distinct_instances: int = 0
    nodes: int = 0
    exhausted: bool = False


def _check_order(f: ThreeGraph, order: Sequence[int]):
    if sorted(order) != list(range(f.n)):
        raise ColoringError(f"order {list(order)} is not a permutation of range({f.n})")


def edge_triple(order_pos, e):
    """The edge's vertices sorted by position, i.e. (u, v, w) with u before v before w."""
    return tuple(sorted(e, key=order_pos.__getitem__))


def is_valid_coloring(f: ThreeGraph, p: Palette, order: Sequence[int], phi: dict) -> bool:
    """Independent re-check of the colouring condition on every edge."""
    if sorted(order) != list(range(f.n)):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for e in f.edges:
        u, v, w = edge_triple(pos, e)
        try:
            t = (phi[_pair(u, v)], phi[_pair(u, w)], phi[_pair(v, w)])
        except KeyError:
            return False
        if t not in p.triples:
            return False
    return True


def check_witness(f: ThreeGraph, p: Palette, w: ColoringWitness) -> bool:
    return is_valid_coloring(f, p, w.order, w.phi)


class _FixedOrderSolver:
    """Shadow colouring for a given order, as a ternary CSP over the shadow pairs."""

    def __init__(self, f: ThreeGraph, p: Palette):
        self.f = f
        self.p = p
        self.pairs = sorted(shadow(f))
        self.var = {pr: i for i, pr in enumerate(self.pairs)}
        self.relation = sorted(p.triples)
        self.nodes = 0

    def scopes_for(self, edge_orders):
        return [(self.var[_pair(u, v)], self.var[_pair(u, w)], self.var[_pair(v, w)]) for u, v, w in edge_orders]

    def solve(self, edge_orders):
        if not self.pairs:
            return {}
        if self.p.m == 0:
            return None
        csp = TernaryCSP(len(self.pairs), self.p.m, self.relation, self.scopes_for(edge_orders))
        values = csp.solve()
        self.nodes += csp.nodes
        if values is None:
            return None
        return {pr: c for pr, c in zip(self.pairs, values)}


def colorable_fixed_order(f: ThreeGraph, p: Palette, order: Sequence[int]) -> dict | None:
    """A shadow colouring valid for ``order``, or ``None``."""
    _check_order(f, order)
    pos = {v: i for i, v in enumerate(order)}
    solver = _FixedOrderSolver(f, p)
    phi = solver.solve([edge_triple(pos, e) for e in sorted(f.edges)])
    if phi is not None and not is_valid_coloring(f, p, order, phi):
        raise AssertionError("solver returned an invalid colouring")
    return phi


def _check_solver_bounds(f: ThreeGraph):
    if f.n > LIMITS["solver_n"] or len(shadow(f)) > LIMITS["solver_shadow"]:
        raise ColoringError(
            f"3-graph with n={f.n} and {len(shadow(f))} shadow pairs exceeds the solver bound "
            f"(n <= {LIMITS['solver_n']}, shadow <= {LIMITS['solver_shadow']})"
        )


def _orders(f: ThreeGraph, mode: str, first=None):
    """Orders of the covered vertices; isolated vertices are appended at the end."""
    covered = sorted({v for e in f.edges for v in e})
    isolated = [v for v in range(f.n) if v not in set(covered)]
    group = None
    if mode == "automorphism":
        group = automorphisms(f)
    elif mode != "full":
        raise ColoringError(f"unknown order mode {mode!r}; expected 'full' or 'automorphism'")
    if not covered:
        yield tuple(isolated)
        return
    heads = covered if first is None else [first]
    for head in heads:
        rest = [v for v in covered if v != head]
        for tail in itertools.permutations(rest):
            order = (head,) + tail
            if group is not None:
                # keep the lexicographically least order in each automorphism orbit
                if any(tuple(g[v] for v in order) < order for g in group):
                    continue
            yield order + tuple(isolated)


def solve_colorability(f: ThreeGraph, p: Palette, mode: str = "full", first=None) -> ColoringResult:
    """Search all vertex orders; ``first`` restricts to orders starting at that vertex.

    Orders inducing the same order on every edge pose the same colouring
    problem, so each distinct edge-order pattern is solved once.
    """
    _check_solver_bounds(f)
    solver = _FixedOrderSolver(f, p)
    edges = sorted(f.edges)
    seen = {}
    result = ColoringResult(None)
    for order in _orders(f, mode, first):
        result.orders_tried += 1
        pos = {v: i for i, v in enumerate(order)}
        key = tuple(edge_triple(pos, e) for e in edges)
        if key in seen:
            continue
        phi = solver.solve(key)
        seen[key] = phi is not None
        if phi is not None:
            w = ColoringWitness(order, phi)
            if not check_witness(f, p, w):
                raise AssertionError("solver returned an invalid witness")
            result.witness = w
            break
    else:
        result.exhausted = True
    result.distinct_instances = len(seen)
    result.nodes = solver.nodes
    return result


def _solve_block(args):
    f, p, mode, first = args
    return solve_colorability(f, p, mode, first)


def colorable(f: ThreeGraph, p: Palette, mode: str = "full", workers: int = 1) -> ColoringWitness | None:
    """A verified colouring witness, or ``None`` if no vertex order admits one.

    With ``workers > 1`` the orders are split by their first vertex and the
    blocks are searched in separate processes; the first witness found wins.
    """
    if workers <= 1 or not f.edges:
        return solve_colorability(f, p, mode).witness
    _check_solver_bounds(f)
    heads = sorted({v for e in f.edges for v in e})
    pool = ProcessPoolExecutor(max_workers=workers)
    try:
        futures = [pool.submit(_solve_block, (f, p, mode, h)) for h in heads]
        for fut in as_completed(futures):
            res = fut.result()
            if res.witness is not None:
                return res.witness
        return None
    finally:
        pool.shutdown(wait=False, cancel_futures=True)


def brute_oracle(f: ThreeGraph, p: Palette) -> bool:
    """Plain enumeration of every order and every shadow colouring; no pruning."""
    pairs = sorted(shadow(f))
    if f.n > LIMITS["oracle_n"] or len(pairs) > LIMITS["oracle_shadow"]:
        raise ColoringError(
            f"brute_oracle supports n <= {LIMITS['oracle_n']} and shadow <= {LIMITS['oracle_shadow']}"
        )
    edges = sorted(f.edges)
    for order in itertools.permutations(range(f.n)):
        pos = {v: i for i, v in enumerate(order)}
        ordered = [edge_triple(pos, e) for e in edges]
        for colours in itertools.product(range(p.m), repeat=len(pairs)):
            phi = dict(zip(pairs, colours))
            ok = True
            for u, v, w in ordered:
                if (phi[_pair(u, v)], phi[_pair(u, w)], phi[_pair(v, w)]) not in p.triples:
                    ok = False
                    break
            if ok:
                return True
    return False


def reverse_witness(w: ColoringWitness) -> ColoringWitness:
    """Witness for the reversed palette: same colours, reversed order."""
    return ColoringWitness(tuple(reversed(w.order)), dict(w.phi))


def push_forward(w: ColoringWitness, hom: PaletteHom) -> ColoringWitness:
    """Compose the colouring with a palette homomorphism."""
    return ColoringWitness(w.order, {pr: hom(c) for pr, c in w.phi.items()})


def reverse_symmetry_check(f: ThreeGraph, p: Palette) -> bool:
    """Whether colourability by ``p`` and by its reverse agree (they always should)."""
    a = colorable(f, p)
    b = colorable(f, reverse(p))
    if a is not None and not check_witness(f, reverse(p), reverse_witness(a)):
        return False
    return (a is None) == (b is None)
