"""One test per acceptance criterion, each with its tolerance and time limit.

Every test records a single PASS/FAIL line, printed in the terminal summary.
"""

import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from unituran import coloring, digraph, extremal, hypergraph, palette


@contextmanager
def criterion(number, title, limit):
    t0 = time.perf_counter()
    status = "FAIL"
    detail = ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        if elapsed >= limit:
            detail = f"; over the {limit}s limit"
            raise AssertionError(f"criterion {number} took {elapsed:.1f}s, limit {limit}s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        line = f"criterion {number}: {status} {title} ({elapsed:.2f}s, limit {limit}s{detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)


def test_criterion_01_six_vertex_tournaments_split():
    with criterion(1, "all 32768 six-vertex tournaments split into two transitive triples", 5):
        failures = 0
        for code in range(2**15):
            t = digraph.tournament_from_code(6, code)
            split = digraph.transitive_partition6(t)
            if split is None:
                failures += 1
                continue
            a, b = split
            assert a | b == set(range(6)) and not a & b
            for part in (a, b):
                x, y, z = sorted(part)
                out = t.out_masks
                # transitive triple: some vertex beats both others
                assert any(((out[v] >> u) & 1) and ((out[v] >> w) & 1) for v, u, w in ((x, y, z), (y, x, z), (z, x, y)))
        assert failures == 0


def test_criterion_02_directed_triangle_bound():
    with criterion(2, "directed triangle counts of all tournaments on 3..7 vertices within the bound", 60):
        maxima = {}
        for n in range(3, 8):
            counts = digraph.c3_counts_all(n)
            assert counts.size == 2 ** (n * (n - 1) // 2)
            assert int(counts.max()) <= digraph.moon_moser_bound(n)
            maxima[n] = int(counts.max())
            # spot-check the vectorised counts with the per-tournament count
            rng = random.Random(n)
            for code in rng.sample(range(counts.size), min(200, counts.size)):
                assert counts[code] == digraph.count_c3(digraph.tournament_from_code(n, code))
        assert maxima[6] == 8 and maxima[7] == 14


def test_criterion_03_small_extremal_numbers():
    with criterion(3, "ex(n, T) = 2 ex(n, K3) and ex(n, bidirected K3) = C(n,2) + ex(n, K3)", 600):
        for pattern in (digraph.transitive_tournament(3), digraph.cycle3()):
            for n in (3, 4, 5):
                assert extremal.ex_exact(pattern, n).value == 2 * digraph.turan_numbers(n, 3)[0]
        k3 = digraph.complete_digraph(3)
        for n in (3, 4):
            assert extremal.ex_exact(k3, n).value == n * (n - 1) // 2 + digraph.turan_numbers(n, 3)[0]


def test_criterion_04_degree_squared_sums():
    with criterion(4, "max degree-squared sum of T3-free digraphs at most n^3/4, equal to 16 at n=4", 60):
        for n in range(2, 6):
            value, witness = extremal.max_gamma2(3, n)
            assert value <= Fraction(n**3, 4)
            assert digraph.gamma2(witness)[2] == value
        assert extremal.max_gamma2(3, 4)[0] == 16


def test_criterion_05_colorability():
    named = palette.named_palette
    g = hypergraph.named_threegraph
    with criterion(5, "colorability claims for complete graphs, K4-, F5*, C5 and the F4/F7 gadgets", 300):
        # a. pigeonhole
        assert coloring.colorable(g("complete", 4), named("Qr", 2)) is None
        assert coloring.colorable(g("complete", 5), named("Qr", 3)) is None
        # b. K4- and F5*
        left_t3 = palette.side_palette(digraph.transitive_tournament(3), "left")
        for name in ("k4minus", "f5star"):
            w = coloring.colorable(g(name), left_t3)
            assert w is not None and coloring.check_witness(g(name), left_t3, w)
            assert coloring.colorable(g(name), named("Q2r", 2)) is None
        # c. tight 5-cycle
        assert coloring.colorable(g("tight_cycle", 5), named("Qplus2_5")) is None
        # d. F4 gadget, with the construction's colours (4,1,5) and (1,2,3) written 0-based
        f4 = hypergraph.single_edge_gadget("F4")
        phi = {(0, 1): 3, (0, 2): 0, (1, 2): 4, (0, 3): 1, (2, 3): 2}
        assert coloring.is_valid_coloring(f4, named("Qplus2_5"), (0, 1, 2, 3), phi)
        for order in ((0, 1, 2, 3), (3, 2, 1, 0)):
            assert coloring.colorable_fixed_order(f4, named("QprimeMinus3"), order) is None
        # e. F7 gadget
        f7 = hypergraph.single_edge_gadget("F7")
        t3 = digraph.transitive_tournament(3)
        union = palette.digraph_union_palette(t3, t3)
        phi7 = coloring.colorable_fixed_order(f7, union, tuple(range(7)))
        assert phi7 is not None and coloring.is_valid_coloring(f7, union, tuple(range(7)), phi7)
        for order in (tuple(range(7)), tuple(range(6, -1, -1))):
            assert coloring.colorable_fixed_order(f7, named("Qr", 2), order) is None


def _random_palette(rng, m_max, dens):
    m = rng.randint(1, m_max)
    return palette.Palette(m, frozenset(t for t in itertools.product(range(m), repeat=3) if rng.random() < dens))


def test_criterion_06_palettes():
    named = palette.named_palette
    with criterion(6, "palette densities, existence condition for r=3,4, reverse and subpalette properties", 60):
        for r in range(1, 8):
            assert palette.density(named("Qr", r)) == Fraction(r - 1, r)
            assert palette.density(named("Q2r", r)) == Fraction(r - 1, r) ** 2
        assert palette.density(named("Qminus3")) == Fraction(1, 27)
        assert palette.density(named("QprimeMinus3")) == Fraction(4, 27)
        for r in (3, 4):
            t = digraph.transitive_tournament(r)
            assert palette.existence_condition(palette.digraph_union_palette(t, t), named("Qr", r - 1))
        rng = random.Random(2024)
        cases = 0
        for _ in range(250):
            a = _random_palette(rng, 3, 0.25)
            b = _random_palette(rng, 3, 0.5)
            c = _random_palette(rng, 3, 0.7)
            assert palette.reverse(palette.reverse(a)) == a
            assert palette.subpalette(a, a) is not None
            h1, h2 = palette.subpalette(a, b), palette.subpalette(b, c)
            if h1 is not None and h2 is not None:
                assert h1.then(h2).is_valid(a, c)
            cases += 1
        assert cases >= 200


def test_criterion_07_oracle_equivalence():
    named = palette.named_palette
    pals = [named("Qr", 2), named("Qminus3"), named("Qplus2_5"), named("QprimeMinus3")]
    with criterion(7, "solver agrees with brute force on all 3-graphs with at most 4 vertices", 600):
        disagreements = 0
        graphs = 0
        for n in range(0, 5):
            for f in hypergraph.nonisomorphic_threegraphs(n):
                graphs += 1
                for p in pals:
                    if (coloring.colorable(f, p) is not None) != coloring.brute_oracle(f, p):
                        disagreements += 1
        assert graphs == 10
        assert disagreements == 0


def test_criterion_08_turan_relation_grid():
    with criterion(8, "relation between Turan numbers on the grid n1, n2 <= 40, r <= 12", 5):
        failures = 0
        for r in range(2, 13):
            for n1 in range(0, 41):
                for n2 in range(0, 41):
                    lhs, rhs = digraph.relation_gap(n1, n2, r)
                    failures += lhs != rhs
        assert failures == 0


def test_criterion_09_d10_construction():
    with criterion(9, "D_15 is D_10-free and |A(D_n)| > 2 ex(n, K10) for n = 50, 100, 1000", 60):
        host = digraph.d10_family(15)
        for strong in (True, False):
            assert digraph.contains(host, digraph.d10_pattern(strong)) is None
        for n in (50, 100, 1000):
            arcs = digraph.d10_family(n).num_arcs
            assert arcs > digraph.f_value(n, 10)


def test_criterion_10_turan_lower_bound():
    with criterion(10, "bidirected Turan digraph on n = 11..15 avoids T4+T4+T3 with f(n, 11) arcs", 300):
        for n in range(11, 16):
            assert extremal.verify_lower_bound(4, 4, 3, n) is True
