"""Palettes: colour sets with admissible ordered triples.

Colours are ``0..m-1``. A triple ``(x, y, z)`` has left colour ``x``, top
colour ``y`` and right colour ``z``. Named palettes written 1-based in the
literature are shifted down by one on construction.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ._csp import TernaryCSP
from .digraph import Digraph, DigraphError


class PaletteError(ValueError):
    pass


@dataclass(frozen=True)
class Palette:
    m: int
    triples: frozenset = frozenset()
    tags: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.m < 0:
            raise PaletteError(f"colour count must be non-negative, got {self.m}")
        triples = frozenset(tuple(int(c) for c in t) for t in self.triples)
        for t in triples:
            if len(t) != 3 or any(not (0 <= c < self.m) for c in t):
                raise PaletteError(f"triple {t} is not a triple over colours [0, {self.m})")
        object.__setattr__(self, "triples", triples)
        if self.tags is not None and len(self.tags) != self.m:
            raise PaletteError(f"{len(self.tags)} tags for {self.m} colours")

    @classmethod
    def from_triples(cls, m: int, triples, tags=None) -> "Palette":
        triples = [tuple(t) for t in triples]
        dup = [t for t, c in Counter(triples).items() if c > 1]
        if dup:
            raise PaletteError(f"duplicate triple {dup[0]}")
        return cls(m, frozenset(triples), tuple(tags) if tags is not None else None)

    @classmethod
    def one_based(cls, m: int, triples) -> "Palette":
        return cls(m, frozenset(tuple(c - 1 for c in t) for t in triples))

    def sorted_triples(self) -> list:
        return sorted(self.triples)

    def describe(self, one_based: bool = True) -> str:
        s = 1 if one_based else 0
        body = ", ".join("(" + ",".join(str(c + s) for c in t) + ")" for t in self.sorted_triples())
        return f"([{self.m}], {{{body}}})"

    def __len__(self):
        return len(self.triples)


@dataclass(frozen=True)
class PaletteHom:
    """A total colour map ``mapping[c]`` from a source palette to a target palette."""

    mapping: tuple

    def __call__(self, c: int) -> int:
        return self.mapping[c]

    def is_valid(self, source: Palette, target: Palette) -> bool:
        if len(self.mapping) != source.m or any(not (0 <= c < target.m) for c in self.mapping):
            return False
        f = self.mapping
        return all((f[x], f[y], f[z]) in target.triples for x, y, z in source.triples)

    def then(self, other: "PaletteHom") -> "PaletteHom":
        """Composite: apply ``self`` first, then ``other``."""
        return PaletteHom(tuple(other.mapping[c] for c in self.mapping))


def density(p: Palette) -> Fraction:
    if p.m == 0:
        raise PaletteError("density of a palette with no colours is undefined")
    return Fraction(len(p.triples), p.m ** 3)


def union(p1: Palette, p2: Palette) -> Palette:
    """Disjoint union; colours of ``p2`` are shifted by ``p1.m``."""
    s = p1.m
    triples = set(p1.triples) | {(x + s, y + s, z + s) for x, y, z in p2.triples}
    tags = None
    if p1.tags is not None or p2.tags is not None:
        t1 = p1.tags or tuple(str(c) for c in range(p1.m))
        t2 = p2.tags or tuple(str(c) for c in range(p2.m))
        tags = tuple(f"1:{t}" for t in t1) + tuple(f"2:{t}" for t in t2)
    return Palette(p1.m + p2.m, frozenset(triples), tags)


def reverse(p: Palette) -> Palette:
    return Palette(p.m, frozenset((z, y, x) for x, y, z in p.triples), p.tags)


def full_palette(m: int) -> Palette:
    return Palette(m, frozenset(itertools.product(range(m), repeat=3)))


def empty_palette(m: int) -> Palette:
    return Palette(m)


def left_top_right_sets(p: Palette) -> tuple:
    L = frozenset(t[0] for t in p.triples)
    T = frozenset(t[1] for t in p.triples)
    R = frozenset(t[2] for t in p.triples)
    return L, T, R


def used_colours(p: Palette) -> frozenset:
    return frozenset(c for t in p.triples for c in t)


# --------------------------------------------------------------------------
# homomorphism search


def _hom_search(p1: Palette, p2: Palette, injective: bool):
    if injective and p1.m > p2.m:
        return None, 0
    counts = Counter(c for t in p1.triples for c in t)
    used = sorted(counts, key=lambda c: (-counts[c], c))
    if not used:
        if p1.m and not p2.m:
            return None, 0
        if injective:
            return PaletteHom(tuple(range(p1.m))), 0
        return PaletteHom((0,) * p1.m), 0
    if not p2.m:
        return None, 0
    index = {c: i for i, c in enumerate(used)}
    L2, T2, R2 = left_top_right_sets(p2)
    position_sets = (L2, T2, R2)
    domains = []
    for c in used:
        allowed = set(range(p2.m))
        for t in p1.triples:
            for pos in range(3):
                if t[pos] == c:
                    allowed &= position_sets[pos]
        mask = 0
        for v in allowed:
            mask |= 1 << v
        domains.append(mask)
    scopes = [tuple(index[c] for c in t) for t in sorted(p1.triples)]
    csp = TernaryCSP(len(used), p2.m, sorted(p2.triples), scopes, domains, injective=injective)
    values = csp.solve()
    if values is None:
        return None, csp.nodes
    mapping = [0] * p1.m
    for c, v in zip(used, values):
        mapping[c] = v
    if injective:
        free = iter(sorted(set(range(p2.m)) - set(values)))
        for c in range(p1.m):
            if c not in index:
                mapping[c] = next(free)
    hom = PaletteHom(tuple(mapping))
    assert hom.is_valid(p1, p2)
    return hom, csp.nodes


def subpalette(p1: Palette, p2: Palette) -> PaletteHom | None:
    """A colour map sending every admissible triple of ``p1`` into ``p2``, or ``None``.

    Colours in no triple map to colour 0.
    """
    hom, _ = _hom_search(p1, p2, injective=False)
    return hom


def palette_isomorphism(p1: Palette, p2: Palette) -> PaletteHom | None:
    """A colour bijection carrying the triples of ``p1`` exactly onto those of ``p2``."""
    if p1.m != p2.m or len(p1.triples) != len(p2.triples):
        return None
    if len(used_colours(p1)) != len(used_colours(p2)):
        return None
    # an injective hom between palettes with equally many triples is onto the triples
    hom, _ = _hom_search(p1, p2, injective=True)
    return hom


def existence_condition(p1: Palette, p2: Palette) -> bool:
    """True iff ``p1`` maps neither into ``p2`` nor into its reverse.

    By the classification of palette pairs this is exactly when some 3-graph
    is ``p1``-colourable but not ``p2``-colourable.
    """
    return subpalette(p1, p2) is None and subpalette(p1, reverse(p2)) is None


# --------------------------------------------------------------------------
# named palettes and digraph palettes


def named_palette(name: str, *params: int) -> Palette:
    """One of ``Qr(r)``, ``Q2r(r)``, ``Qminus3``, ``Qplus1_5``, ``Qplus2_5``, ``QprimeMinus3``.

    ``Qr(r)``: triples over r colours with left != top, density (r-1)/r.
    ``Q2r(m)``: left != top != right over m colours, density ((m-1)/m)^2;
    it is indexed by its own colour count.
    """
    if name == "Qr":
        (r,) = params
        if r < 1:
            raise PaletteError(f"Qr needs r >= 1, got {r}")
        return Palette(r, frozenset(t for t in itertools.product(range(r), repeat=3) if t[0] != t[1]))
    if name == "Q2r":
        (r,) = params
        if r < 1:
            raise PaletteError(f"Q2r needs r >= 1, got {r}")
        return Palette(r, frozenset(t for t in itertools.product(range(r), repeat=3) if t[0] != t[1] and t[1] != t[2]))
    if name == "Qminus3":
        return Palette.one_based(3, [(1, 2, 3)])
    if name == "Qplus1_5":
        return Palette.one_based(5, [(1, 2, 3), (4, 5, 1)])
    if name == "Qplus2_5":
        return Palette.one_based(5, [(1, 2, 3), (4, 1, 5)])
    if name == "QprimeMinus3":
        return Palette.one_based(3, [(1, 3, 1), (1, 3, 2), (2, 3, 1), (2, 3, 2)])
    raise PaletteError(f"unknown palette {name!r}")


NAMED_PALETTES = ("Qr", "Q2r", "Qminus3", "Qplus1_5", "Qplus2_5", "QprimeMinus3")


def pair_colour(r: int, a: int, b: int) -> int:
    """Index of the pair colour c_ab in a side palette built on r base colours."""
    return r + a * r + b


def side_palette(d: Digraph, side: str) -> Palette:
    """Left or right palette of a loop-free digraph on r vertices.

    Colours ``0..r-1`` are the vertices, ``r + a*r + b`` is the pair colour
    c_ab for every ordered pair (all r^2 of them, used or not). Left triples
    are ``(a, b, c_ab)``, right triples ``(c_ab, a, b)``, one per arc (a, b).
    """
    if d.allow_loops and any(u == v for u, v in d.arcs):
        raise DigraphError("side palettes need a loop-free digraph")
    r = d.n
    if side == "left":
        triples = {(a, b, pair_colour(r, a, b)) for a, b in d.arcs}
    elif side == "right":
        triples = {(pair_colour(r, a, b), a, b) for a, b in d.arcs}
    else:
        raise PaletteError(f"side must be 'left' or 'right', got {side!r}")
    tags = tuple(f"v{a}" for a in range(r)) + tuple(f"c{a}{b}" if r <= 10 else f"c{a},{b}" for a in range(r) for b in range(r))
    return Palette(r + r * r, frozenset(triples), tags)


def digraph_union_palette(left: Digraph, right: Digraph) -> Palette:
    """Left palette of ``left`` united with the right palette of ``right``."""
    return union(side_palette(left, "left"), side_palette(right, "right"))


def aux_digraph(p: Palette, side: str) -> Digraph:
    """Loop-permitting digraph on the colours.

    ``left``: (a, b) whenever some (a, b, c) is admissible.
    ``right``: (a, b) whenever some (c, a, b) is admissible.
    """
    if side == "left":
        arcs = {(x, y) for x, y, _ in p.triples}
    elif side == "right":
        arcs = {(y, z) for _, y, z in p.triples}
    else:
        raise PaletteError(f"side must be 'left' or 'right', got {side!r}")
    return Digraph(p.m, frozenset(arcs), allow_loops=True)


def relabel(p: Palette, perm: Sequence[int]) -> Palette:
    return Palette(p.m, frozenset(tuple(perm[c] for c in t) for t in p.triples))
