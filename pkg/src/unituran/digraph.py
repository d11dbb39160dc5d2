"""Digraphs on the vertex set 0..n-1, stored as out/in neighbourhood bitmasks.

Besides the container this module holds the constructions used throughout
the package: sums, balanced bidirected Turán digraphs, transitive
tournaments, the five-summand family ``d10_family`` and friends, plus
embedding search, 3-cycle counting and canonical forms.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

# Feasibility bounds. These are configuration, not hard limits: raise them
# if you have the patience.
LIMITS = {
    "tournaments": 7,
    "digraphs": 5,
    "canonical": 10,
}


class DigraphError(ValueError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, eq=False)
class Digraph:
    """A digraph on vertices ``0..n-1``.

    ``arcs`` is a frozenset of ordered pairs. Loops are rejected unless
    ``allow_loops`` is set (the auxiliary digraphs built from palettes need
    them).
    """

    n: int
    arcs: frozenset = frozenset()
    allow_loops: bool = False

    def __post_init__(self):
        if self.n < 0:
            raise DigraphError(f"vertex count must be non-negative, got {self.n}")
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise DigraphError(f"arc ({u}, {v}) has an endpoint outside [0, {self.n})")
            if u == v and not self.allow_loops:
                raise DigraphError(f"loop ({u}, {u}) in a loop-free digraph")
        object.__setattr__(self, "arcs", arcs)

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return (self.n, self.arcs, self.allow_loops) == (other.n, other.arcs, other.allow_loops)

    def __hash__(self):
        return hash((self.n, self.arcs, self.allow_loops))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable, allow_loops: bool = False) -> "Digraph":
        """Build from an arc list, rejecting repeated arcs."""
        arcs = [tuple(a) for a in arcs]
        seen = set()
        for a in arcs:
            if a in seen:
                raise DigraphError(f"duplicate arc {a}")
            seen.add(a)
        return cls(n, frozenset(arcs), allow_loops)

    @classmethod
    def from_masks(cls, out: Sequence[int], allow_loops: bool = False) -> "Digraph":
        n = len(out)
        return cls(n, frozenset((u, v) for u in range(n) for v in _bits(out[u])), allow_loops)

    @cached_property
    def out_masks(self) -> tuple:
        out = [0] * self.n
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)

    @cached_property
    def in_masks(self) -> tuple:
        inn = [0] * self.n
        for u, v in self.arcs:
            inn[v] |= 1 << u
        return tuple(inn)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (self.out_masks[u] >> v) & 1 == 1

    def out_degree(self, v: int) -> int:
        return self.out_masks[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.in_masks[v].bit_count()

    def degree(self, v: int) -> int:
        """Total degree: out-degree plus in-degree."""
        return self.out_degree(v) + self.in_degree(v)

    def connection(self, v: int, others: Iterable[int]) -> int:
        """Number of arcs between ``v`` and the set ``others``, both directions counted."""
        mask = 0
        for u in others:
            mask |= 1 << u
        return (self.out_masks[v] & mask).bit_count() + (self.in_masks[v] & mask).bit_count()

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Image under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise DigraphError(f"{list(perm)} is not a permutation of range({self.n})")
        return Digraph(self.n, frozenset((perm[u], perm[v]) for u, v in self.arcs), self.allow_loops)

    def induced(self, vertices: Sequence[int]) -> "Digraph":
        """Induced subdigraph, relabelled so that ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        return Digraph(
            len(vertices),
            frozenset((index[u], index[v]) for u, v in self.arcs if u in index and v in index),
            self.allow_loops,
        )

    def converse(self) -> "Digraph":
        return Digraph(self.n, frozenset((v, u) for u, v in self.arcs), self.allow_loops)

    def underlying_edges(self) -> frozenset:
        return frozenset((min(u, v), max(u, v)) for u, v in self.arcs if u != v)

    def is_tournament(self) -> bool:
        if self.allow_loops and any(u == v for u, v in self.arcs):
            return False
        for u, v in itertools.combinations(range(self.n), 2):
            if self.has_arc(u, v) == self.has_arc(v, u):
                return False
        return True

    def __str__(self):
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)})"


@dataclass(frozen=True, eq=False)
class Tournament(Digraph):
    """A digraph with exactly one arc on every vertex pair."""

    def __post_init__(self):
        super().__post_init__()
        if self.allow_loops:
            raise DigraphError("tournaments cannot allow loops")
        for u, v in itertools.combinations(range(self.n), 2):
            a, b = (u, v) in self.arcs, (v, u) in self.arcs
            if a and b:
                raise DigraphError(f"pair {{{u}, {v}}} is bidirected")
            if not (a or b):
                raise DigraphError(f"pair {{{u}, {v}}} has no arc")

    @classmethod
    def of(cls, d: Digraph) -> "Tournament":
        if isinstance(d, Tournament):
            return d
        return cls(d.n, d.arcs, d.allow_loops)


# --------------------------------------------------------------------------
# constructions


def sum_digraphs(d1: Digraph, d2: Digraph) -> Digraph:
    """Disjoint union of ``d1`` and ``d2`` plus every arc in both directions between them.

    The vertices of ``d2`` are shifted by ``d1.n``.
    """
    if d1.allow_loops or d2.allow_loops:
        raise DigraphError("sum is defined for loop-free digraphs only")
    n1 = d1.n
    arcs = set(d1.arcs)
    arcs.update((u + n1, v + n1) for u, v in d2.arcs)
    for u in range(n1):
        for v in range(n1, n1 + d2.n):
            arcs.add((u, v))
            arcs.add((v, u))
    return Digraph(n1 + d2.n, frozenset(arcs))


def sum_of(*parts: Digraph) -> Digraph:
    result = Digraph(0)
    for p in parts:
        result = sum_digraphs(result, p)
    return result


def transitive_tournament(s: int) -> Tournament:
    """T*_s with arcs ``i -> j`` for all ``i < j``."""
    return Tournament(s, frozenset(itertools.combinations(range(s), 2)))


def cycle3() -> Tournament:
    return Tournament(3, frozenset({(0, 1), (1, 2), (2, 0)}))


def complete_digraph(s: int) -> Digraph:
    return Digraph(s, frozenset((u, v) for u in range(s) for v in range(s) if u != v))


def empty_digraph(n: int) -> Digraph:
    return Digraph(n)


def four_tournament_with_cycle(strong: bool = True) -> Tournament:
    """A 4-vertex tournament containing a directed triangle.

    There are two up to isomorphism: the strongly connected one (default)
    and the one where a directed triangle dominates (or is dominated by) a
    single vertex; ``strong=False`` returns the triangle dominating vertex 3.
    """
    if strong:
        # 0->1->2->3->0 with chords 0->2, 1->3
        return Tournament(4, frozenset({(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)}))
    return Tournament(4, frozenset({(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)}))


def d10_pattern(strong: bool = True) -> Digraph:
    """C3 + C3 + T'_4 (sum), the 10-vertex digraph that is not 10-good."""
    return sum_of(cycle3(), cycle3(), four_tournament_with_cycle(strong))


def d10_sizes(n: int) -> list:
    return [(n + i) // 5 for i in range(5)]


def d10_family(n: int) -> Digraph:
    """Sum of the five transitive tournaments on floor((n+i)/5) vertices, i = 0..4."""
    if n < 5:
        raise DigraphError(f"d10_family needs n >= 5, got {n}")
    return sum_of(*(transitive_tournament(s) for s in d10_sizes(n)))


def turan_part_sizes(n: int, r: int) -> list:
    """Part sizes of the balanced complete (r-1)-partite graph on n vertices."""
    if r < 2:
        raise DigraphError(f"r must be at least 2, got {r}")
    k = r - 1
    q, a = divmod(n, k)
    return [q + 1] * a + [q] * (k - a)


def bidirected_turan(n: int, r: int) -> Digraph:
    """The bidirected balanced complete (r-1)-partite digraph on ``n`` vertices.

    Parts are consecutive label blocks, larger parts first.
    """
    sizes = turan_part_sizes(n, r)
    part = []
    for i, s in enumerate(sizes):
        part.extend([i] * s)
    return Digraph(n, frozenset((u, v) for u in range(n) for v in range(n) if part[u] != part[v]))


def turan_numbers(n: int, r: int) -> tuple:
    """``(ex(n, K_r), f(n, r))`` from the closed form, with ``f = 2 ex``."""
    if r < 2:
        raise DigraphError(f"r must be at least 2, got {r}")
    alpha = n % (r - 1)
    ex = Fraction(r - 2, 2 * (r - 1)) * n * n - Fraction((r - 1 - alpha) * alpha, 2 * (r - 1))
    if ex.denominator != 1:
        raise ArithmeticError(f"non-integral Turán number for n={n}, r={r}: {ex}")
    ex = int(ex)
    return ex, 2 * ex


def f_value(n: int, r: int) -> int:
    return turan_numbers(n, r)[1]


def relation_gap(n1: int, n2: int, r: int) -> tuple:
    """Both sides of the additivity identity for ``f``.

    ``lhs = f(n1+n2, r) - f(n1, r) - f(n2, r) - 2 (r-2)/(r-1) n1 n2`` and
    ``rhs`` is the residue case split. Both are returned as Fractions.
    """
    if r < 2:
        raise DigraphError(f"r must be at least 2, got {r}")
    k = r - 1
    lhs = f_value(n1 + n2, r) - f_value(n1, r) - f_value(n2, r) - 2 * Fraction(r - 2, k) * n1 * n2
    a1, a2 = n1 % k, n2 % k
    if a1 + a2 < k:
        rhs = 2 * Fraction(a1 * a2, k)
    else:
        rhs = 2 * Fraction((k - a1) * (k - a2), k)
    return lhs, rhs


# --------------------------------------------------------------------------
# embedding search


def _greedy_colour_count(vertices: int, adj: Sequence[int]) -> int:
    """Colours used by a greedy colouring of the graph induced on ``vertices``."""
    colours = []
    for v in _bits(vertices):
        for i, cls in enumerate(colours):
            if not adj[v] & cls:
                colours[i] |= 1 << v
                break
        else:
            colours.append(1 << v)
    return len(colours)


def _clique_number(n: int, adj: Sequence[int]) -> int:
    best = 0

    def grow(size, cand):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            grow(size + 1, cand & adj[v])

    grow(0, (1 << n) - 1)
    return best


class _Embedder:
    """Backtracking search for injections sending pattern arcs onto host arcs.

    Pattern vertices are taken in decreasing total degree, ties by label.
    Candidate sets are pruned by degree compatibility, forward checking,
    and a Hall-condition check on the remaining candidate sets. Host
    vertices whose transposition is an automorphism fixing the current
    image are tried only once per level.
    """

    def __init__(self, hout, hin, pattern: Digraph):
        self.hout = list(hout)
        self.hin = list(hin)
        self.hn = len(hout)
        self.pattern = pattern
        self.pout = pattern.out_masks
        self.pin = pattern.in_masks
        pn = pattern.n
        self.order = sorted(range(pn), key=lambda v: (-pattern.degree(v), v))
        full = (1 << self.hn) - 1
        self.base = []
        for p in range(pn):
            po, pi = self.pout[p].bit_count(), self.pin[p].bit_count()
            m = 0
            for h in range(self.hn):
                ho = (self.hout[h] & ~(1 << h)).bit_count()
                hi = (self.hin[h] & ~(1 << h)).bit_count()
                if ho >= po and hi >= pi:
                    m |= 1 << h
            self.base.append(m & full)
        self.nodes = 0

    def _candidates(self, p, image):
        m = self.base[p]
        for q, h in image.items():
            if (self.pout[p] >> q) & 1:
                m &= self.hin[h]
            if (self.pin[p] >> q) & 1:
                m &= self.hout[h]
            m &= ~(1 << h)
        return m

    def _twins(self, a, b):
        ma, mb = ~((1 << a) | (1 << b)), ~((1 << a) | (1 << b))
        if (self.hout[a] & ma) != (self.hout[b] & mb) or (self.hin[a] & ma) != (self.hin[b] & mb):
            return False
        if ((self.hout[a] >> b) & 1) != ((self.hout[b] >> a) & 1):
            return False
        return ((self.hout[a] >> a) & 1) == ((self.hout[b] >> b) & 1)

    @staticmethod
    def _hall_ok(sets):
        # sets: list of candidate masks; check a system of distinct representatives exists
        match = {}

        def augment(i, seen):
            for h in _bits(sets[i]):
                if h in seen:
                    continue
                seen.add(h)
                if h not in match or augment(match[h], seen):
                    match[h] = i
                    return True
            return False

        return all(augment(i, set()) for i in range(len(sets)))

    def search(self, seed=None):
        pn = self.pattern.n
        if pn > self.hn:
            return None
        image = dict(seed or {})
        for p, h in image.items():
            if not (self.base[p] >> h) & 1:
                return None
        for p, h in image.items():
            for q, g in image.items():
                if p != q and (self.pout[p] >> q) & 1 and not (self.hout[h] >> g) & 1:
                    return None
        if not seed and pn:
            # clique bound on the underlying graphs
            pu = [self.pout[v] | self.pin[v] for v in range(pn)]
            hu = [(self.hout[v] | self.hin[v]) & ~(1 << v) for v in range(self.hn)]
            usable = 0
            for m in self.base:
                usable |= m
            if _clique_number(pn, pu) > _greedy_colour_count(usable, hu):
                return None
        rest = [p for p in self.order if p not in image]
        found = self._extend(rest, image)
        return found

    def _extend(self, rest, image):
        self.nodes += 1
        if not rest:
            return dict(image)
        cands = [self._candidates(p, image) for p in rest]
        if any(c == 0 for c in cands):
            return None
        if len(rest) > 1 and not self._hall_ok(cands):
            return None
        p = rest[0]
        tried = []
        for h in _bits(cands[0]):
            if any(self._twins(h, t) for t in tried):
                continue
            tried.append(h)
            image[p] = h
            found = self._extend(rest[1:], image)
            del image[p]
            if found is not None:
                return found
        return None


def find_embedding(host: Digraph, pattern: Digraph, seed: dict | None = None) -> dict | None:
    """Return an injective map sending every pattern arc to a host arc, or ``None``.

    ``seed`` optionally fixes the images of some pattern vertices.
    """
    if pattern.allow_loops and any(u == v for u, v in pattern.arcs):
        raise DigraphError("pattern must be loop-free")
    return _Embedder(host.out_masks, host.in_masks, pattern).search(seed)


def contains(host: Digraph, pattern: Digraph) -> tuple | None:
    """Embedding of ``pattern`` into ``host`` as a tuple ``eta[p] = h``, or ``None``."""
    emb = find_embedding(host, pattern)
    if emb is None:
        return None
    return tuple(emb[p] for p in range(pattern.n))


def is_embedding(host: Digraph, pattern: Digraph, eta: Sequence[int]) -> bool:
    if len(set(eta)) != len(eta) or len(eta) != pattern.n:
        return False
    return all(host.has_arc(eta[u], eta[v]) for u, v in pattern.arcs)


# --------------------------------------------------------------------------
# tournaments and degree statistics


def _is_cyclic_triple(out, a, b, c) -> bool:
    # in a tournament a triple is cyclic iff each vertex beats exactly one other
    m = (1 << a) | (1 << b) | (1 << c)
    return (out[a] & m).bit_count() == 1 and (out[b] & m).bit_count() == 1


def count_c3(t: Digraph) -> int:
    """Number of 3-vertex subsets inducing a directed triangle."""
    if not isinstance(t, Tournament):
        if not t.is_tournament():
            raise DigraphError("count_c3 expects a tournament")
    out = t.out_masks
    return sum(1 for a, b, c in itertools.combinations(range(t.n), 3) if _is_cyclic_triple(out, a, b, c))


def moon_moser_bound(n: int) -> int:
    if n % 2 == 0:
        return n * (n * n - 4) // 24
    return n * (n * n - 1) // 24


def transitive_partition6(t: Digraph) -> tuple | None:
    """Split a 6-vertex tournament into two transitive triples, or ``None``."""
    if t.n != 6:
        raise DigraphError(f"transitive_partition6 expects 6 vertices, got {t.n}")
    if not isinstance(t, Tournament) and not t.is_tournament():
        raise DigraphError("transitive_partition6 expects a tournament")
    out = t.out_masks
    for rest in itertools.combinations(range(1, 6), 2):
        first = (0,) + rest
        second = tuple(v for v in range(6) if v not in first)
        if not _is_cyclic_triple(out, *first) and not _is_cyclic_triple(out, *second):
            return frozenset(first), frozenset(second)
    return None


def gamma2(d: Digraph) -> tuple:
    """``(sum of squared out-degrees, sum of squared in-degrees, max of the two)``."""
    if d.allow_loops:
        raise DigraphError("gamma2 is defined for loop-free digraphs")
    plus = sum(m.bit_count() ** 2 for m in d.out_masks)
    minus = sum(m.bit_count() ** 2 for m in d.in_masks)
    return plus, minus, max(plus, minus)


# --------------------------------------------------------------------------
# enumeration


def _pairs(n):
    return list(itertools.combinations(range(n), 2))


def tournament_from_code(n: int, code: int) -> Tournament:
    """Bit i of ``code`` set means the i-th pair (u, v), u < v in lex order, is oriented u -> v."""
    arcs = []
    for i, (u, v) in enumerate(_pairs(n)):
        arcs.append((u, v) if (code >> i) & 1 else (v, u))
    return Tournament(n, frozenset(arcs))


# pair states for general digraphs: 0 none, 1 u->v, 2 v->u, 3 both
def digraph_from_code(n: int, code: int) -> Digraph:
    arcs = []
    for i, (u, v) in enumerate(_pairs(n)):
        s = (code >> (2 * i)) & 3
        if s & 1:
            arcs.append((u, v))
        if s & 2:
            arcs.append((v, u))
    return Digraph(n, frozenset(arcs))


def count_labeled(n: int, kind: str) -> int:
    m = n * (n - 1) // 2
    if kind == "tournaments":
        return 2 ** m
    if kind == "digraphs":
        return 4 ** m
    raise DigraphError(f"unknown kind {kind!r}; expected 'tournaments' or 'digraphs'")


def enumerate_digraphs(
    n: int,
    kind: str = "tournaments",
    canonical_only: bool = False,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[Digraph]:
    """Yield labelled tournaments or loop-free digraphs on ``n`` vertices.

    ``start``/``stop`` select a sub-range of the code space so independent
    workers can split the enumeration. With ``canonical_only`` one
    representative per isomorphism class (within the range) is yielded.
    """
    total = count_labeled(n, kind)
    bound = LIMITS[kind]
    if n > bound:
        raise DigraphError(f"enumerating {kind} on {n} vertices exceeds the bound n <= {bound}")
    build = tournament_from_code if kind == "tournaments" else digraph_from_code
    stop = total if stop is None else min(stop, total)
    seen = set()
    for code in range(start, stop):
        d = build(n, code)
        if canonical_only:
            key = canonical_key(d)
            if key in seen:
                continue
            seen.add(key)
        yield d


def c3_counts_all(n: int) -> np.ndarray:
    """Directed-triangle counts of every labelled n-vertex tournament, indexed by code."""
    if n > LIMITS["tournaments"]:
        raise DigraphError(f"enumerating tournaments on {n} vertices exceeds the bound n <= {LIMITS['tournaments']}")
    pairs = _pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    codes = np.arange(2 ** len(pairs), dtype=np.uint32)
    bit = {p: ((codes >> i) & 1).astype(np.uint8) for p, i in index.items()}
    counts = np.zeros(codes.shape, dtype=np.int32)
    for a, b, c in itertools.combinations(range(n), 3):
        ab, bc, ac = bit[(a, b)], bit[(b, c)], bit[(a, c)]
        # a->b->c->a or a->c->b->a
        counts += (ab & bc & (1 - ac)) | ((1 - ab) & (1 - bc) & ac)
    return counts


# --------------------------------------------------------------------------
# canonical form


def _chunk(out, perm, v, inv):
    row = [inv[v][0], inv[v][1], (out[v] >> v) & 1]
    for u in perm:
        row.append(((out[u] >> v) & 1) * 2 + ((out[v] >> u) & 1))
    return tuple(row)


def _transposition_is_auto(out, inn, a, b):
    keep = ~((1 << a) | (1 << b))
    if (out[a] & keep) != (out[b] & keep) or (inn[a] & keep) != (inn[b] & keep):
        return False
    if ((out[a] >> b) & 1) != ((out[b] >> a) & 1):
        return False
    return ((out[a] >> a) & 1) == ((out[b] >> b) & 1)


def _canonical_perm(d: Digraph):
    out, inn = d.out_masks, d.in_masks
    n = d.n
    inv = [(out[v].bit_count(), inn[v].bit_count()) for v in range(n)]
    frontier = [()]
    encoding = []
    for _ in range(n):
        best = None
        nxt = []
        for perm in frontier:
            used = set(perm)
            tried = []
            for v in range(n):
                if v in used:
                    continue
                if any(_transposition_is_auto(out, inn, v, t) for t in tried):
                    continue
                tried.append(v)
                ch = _chunk(out, perm, v, inv)
                if best is None or ch < best:
                    best = ch
                    nxt = [perm + (v,)]
                elif ch == best:
                    nxt.append(perm + (v,))
        encoding.append(best)
        frontier = nxt
    return frontier[0], encoding


def canonical_key(d: Digraph) -> bytes:
    """Minimal adjacency encoding over all relabellings of ``d``.

    Vertices are placed one at a time; each placement contributes the
    vertex's (out-degree, in-degree, loop) and its arcs to the vertices
    already placed. The lexicographically least sequence is the key, so
    two digraphs get equal keys iff they are isomorphic.
    """
    bound = LIMITS["canonical"]
    if d.n > bound:
        raise DigraphError(f"canonical_key supports n <= {bound}, got {d.n}")
    _, encoding = _canonical_perm(d)
    flat = [d.n]
    for ch in encoding:
        flat.extend(ch)
    return bytes(flat)


def digraph_from_key(key: bytes) -> Digraph:
    """Rebuild the canonical form from a canonical key."""
    n = key[0]
    arcs = set()
    loops = False
    pos = 1
    for i in range(n):
        chunk = key[pos : pos + 3 + i]
        if len(chunk) != 3 + i:
            raise DigraphError("truncated canonical key")
        if chunk[2]:
            arcs.add((i, i))
            loops = True
        for j, code in enumerate(chunk[3:]):
            if code & 2:
                arcs.add((j, i))
            if code & 1:
                arcs.add((i, j))
        pos += 3 + i
    if pos != len(key):
        raise DigraphError("trailing bytes in canonical key")
    return Digraph(n, frozenset(arcs), allow_loops=loops)


def canonical_form(d: Digraph) -> Digraph:
    """The relabelling of ``d`` that realises its canonical key."""
    perm, _ = _canonical_perm(d)
    pos = [0] * d.n
    for i, v in enumerate(perm):
        pos[v] = i
    return d.relabel(pos)


def is_isomorphic(a: Digraph, b: Digraph) -> bool:
    return a.n == b.n and a.num_arcs == b.num_arcs and canonical_key(a) == canonical_key(b)


def brute_isomorphic(a: Digraph, b: Digraph) -> bool:
    """Isomorphism by trying every bijection; for cross-checking only."""
    if a.n != b.n or a.num_arcs != b.num_arcs:
        return False
    return any(a.relabel(p).arcs == b.arcs for p in itertools.permutations(range(a.n)))


def binom(x, k: int = 2):
    """Generalised binomial coefficient, exact for Fractions."""
    result = Fraction(1)
    for i in range(k):
        result *= Fraction(x) - i
    return result / math.factorial(k)
