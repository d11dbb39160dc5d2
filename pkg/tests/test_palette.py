import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from unituran._csp import SearchBudgetExceeded, TernaryCSP
from unituran.digraph import (
    Digraph,
    complete_digraph,
    count_labeled,
    cycle3,
    digraph_from_code,
    transitive_tournament,
)
from unituran.palette import (
    Palette,
    PaletteError,
    PaletteHom,
    aux_digraph,
    density,
    digraph_union_palette,
    empty_palette,
    existence_condition,
    full_palette,
    left_top_right_sets,
    named_palette,
    pair_colour,
    palette_isomorphism,
    relabel,
    reverse,
    side_palette,
    subpalette,
    union,
)


@st.composite
def palettes(draw, max_m=3):
    m = draw(st.integers(1, max_m))
    triples = draw(st.sets(st.tuples(*(st.integers(0, m - 1),) * 3), max_size=8))
    return Palette(m, frozenset(triples))


def brute_subpalette(p1, p2):
    """Try every colour map; the oracle for the homomorphism search."""
    for f in itertools.product(range(p2.m), repeat=p1.m):
        if all((f[x], f[y], f[z]) in p2.triples for x, y, z in p1.triples):
            return True
    return False


class TestCSP:
    def test_simple_relation(self):
        csp = TernaryCSP(3, 2, [(0, 1, 0)], [(0, 1, 2)])
        assert csp.solve() == [0, 1, 0]

    def test_repeated_variable_in_scope(self):
        assert TernaryCSP(1, 2, [(0, 1, 0)], [(0, 0, 0)]).solve() is None
        assert TernaryCSP(1, 2, [(0, 1, 0), (1, 1, 1)], [(0, 0, 0)]).solve() == [1]

    def test_injective(self):
        rel = [(a, b, c) for a, b, c in itertools.product(range(2), repeat=3)]
        assert TernaryCSP(3, 2, rel, [(0, 1, 2)], injective=True).solve() is None
        assert TernaryCSP(3, 3, rel + [(2, 2, 2)], [(0, 1, 2)], injective=True).solve() is None
        sol = TernaryCSP(3, 3, rel + [(0, 2, 1)], [(0, 1, 2)], injective=True).solve()
        assert sol == [0, 2, 1]

    def test_budget(self):
        # pigeonhole: 4 variables pairwise different over 3 values
        rel = [t for t in itertools.product(range(3), repeat=3) if t[0] != t[1]]
        scopes = [(a, b, a) for a, b in itertools.permutations(range(4), 2)]
        csp = TernaryCSP(4, 3, rel, scopes)
        assert csp.solve() is None
        with pytest.raises(SearchBudgetExceeded):
            TernaryCSP(4, 3, rel, scopes).solve(node_limit=0)

    def test_components_are_independent(self):
        csp = TernaryCSP(6, 2, [(0, 1, 1)], [(0, 1, 2), (3, 4, 5)])
        assert len(csp.components()) == 2
        assert csp.solve() == [0, 1, 1, 0, 1, 1]


class TestPaletteBasics:
    def test_validation(self):
        with pytest.raises(PaletteError):
            Palette(2, frozenset({(0, 1, 2)}))
        with pytest.raises(PaletteError):
            Palette.from_triples(2, [(0, 1, 1), (0, 1, 1)])

    def test_density_of_empty_colour_set(self):
        with pytest.raises(PaletteError):
            density(Palette(0))

    @pytest.mark.parametrize("r", range(1, 7))
    def test_qr_density(self, r):
        assert density(named_palette("Qr", r)) == Fraction(r - 1, r)

    @pytest.mark.parametrize("m", range(1, 7))
    def test_q2r_density(self, m):
        assert density(named_palette("Q2r", m)) == Fraction(m - 1, m) ** 2

    def test_small_named_densities(self):
        assert density(named_palette("Qminus3")) == Fraction(1, 27)
        assert density(named_palette("QprimeMinus3")) == Fraction(4, 27)
        assert density(named_palette("Qplus1_5")) == Fraction(2, 125)
        assert density(named_palette("Qplus2_5")) == Fraction(2, 125)

    def test_one_based_shift(self):
        assert named_palette("Qplus2_5").triples == {(0, 1, 2), (3, 0, 4)}

    def test_unknown_name(self):
        with pytest.raises(PaletteError):
            named_palette("Qzz")

    def test_union_offsets(self):
        u = union(named_palette("Qminus3"), named_palette("Qminus3"))
        assert u.m == 6 and u.triples == {(0, 1, 2), (3, 4, 5)}

    def test_left_top_right(self):
        L, T, R = left_top_right_sets(named_palette("QprimeMinus3"))
        assert L == {0, 1} and T == {2} and R == {0, 1}

    def test_full_and_empty(self):
        assert density(full_palette(3)) == 1
        assert density(empty_palette(3)) == 0


class TestSidePalettes:
    def test_pair_colour_layout(self):
        p = side_palette(transitive_tournament(3), "left")
        assert p.m == 3 + 9
        assert p.triples == {(0, 1, pair_colour(3, 0, 1)), (0, 2, pair_colour(3, 0, 2)), (1, 2, pair_colour(3, 1, 2))}
        assert p.tags[pair_colour(3, 1, 2)] == "c12"

    def test_right_palette(self):
        p = side_palette(cycle3(), "right")
        assert (pair_colour(3, 2, 0), 2, 0) in p.triples and len(p) == 3

    def test_aux_digraphs_recover_arcs(self):
        d = cycle3()
        left = aux_digraph(side_palette(d, "left"), "left")
        right = aux_digraph(side_palette(d, "right"), "right")
        assert left.arcs == d.arcs == right.arcs
        assert left.allow_loops

    def test_reverse_left_is_right_of_converse(self):
        for code in range(count_labeled(3, "digraphs")):
            d = digraph_from_code(3, code)
            assert palette_isomorphism(reverse(side_palette(d, "left")), side_palette(d.converse(), "right")) is not None

    def test_reverse_left_is_right_for_self_converse(self):
        for d in (transitive_tournament(3), transitive_tournament(4), cycle3(), complete_digraph(3)):
            assert palette_isomorphism(reverse(side_palette(d, "left")), side_palette(d, "right")) is not None

    def test_reverse_left_differs_from_right_for_out_star(self):
        star = Digraph(3, frozenset({(0, 1), (0, 2)}))
        assert palette_isomorphism(reverse(side_palette(star, "left")), side_palette(star, "right")) is None

    @pytest.mark.parametrize("r", [3, 4])
    def test_existence_condition_for_transitive_union(self, r):
        t = transitive_tournament(r)
        assert existence_condition(digraph_union_palette(t, t), named_palette("Qr", r - 1))

    def test_union_fits_in_enough_colours(self):
        t = transitive_tournament(3)
        assert subpalette(digraph_union_palette(t, t), named_palette("Qr", 3)) is not None


class TestHomomorphisms:
    def test_qminus_into_qplus(self):
        hom = subpalette(named_palette("Qminus3"), named_palette("Qplus1_5"))
        assert hom == PaletteHom((0, 1, 2))

    def test_qplus_into_larger(self):
        assert subpalette(named_palette("Qplus2_5"), named_palette("Qr", 3)) is not None
        assert subpalette(named_palette("Qr", 3), named_palette("Qr", 2)) is None

    def test_into_empty_palette(self):
        assert subpalette(named_palette("Qminus3"), empty_palette(4)) is None
        assert subpalette(empty_palette(2), empty_palette(1)) == PaletteHom((0, 0))

    @settings(max_examples=200, deadline=None)
    @given(palettes(3), palettes(3))
    def test_subpalette_matches_brute_force(self, p1, p2):
        hom = subpalette(p1, p2)
        assert (hom is not None) == brute_subpalette(p1, p2)
        if hom is not None:
            assert hom.is_valid(p1, p2)

    @settings(max_examples=200, deadline=None)
    @given(palettes(4))
    def test_reverse_involution(self, p):
        assert reverse(reverse(p)) == p

    @settings(max_examples=200, deadline=None)
    @given(palettes(4))
    def test_reflexive(self, p):
        assert subpalette(p, p) is not None

    @settings(max_examples=200, deadline=None)
    @given(palettes(3), palettes(3), palettes(3))
    def test_composition(self, a, b, c):
        h1, h2 = subpalette(a, b), subpalette(b, c)
        if h1 is not None and h2 is not None:
            assert h1.then(h2).is_valid(a, c)
            assert subpalette(a, c) is not None

    @settings(max_examples=100, deadline=None)
    @given(palettes(4), st.permutations(range(4)))
    def test_isomorphism_finds_relabelling(self, p, perm):
        perm = [c for c in perm if c < p.m]
        q = relabel(p, perm)
        hom = palette_isomorphism(p, q)
        assert hom is not None and hom.is_valid(p, q)
        assert len(set(hom.mapping)) == p.m

    def test_isomorphism_rejects_different_sizes(self):
        assert palette_isomorphism(named_palette("Qr", 2), named_palette("Qr", 3)) is None

    @settings(max_examples=100, deadline=None)
    @given(palettes(3), palettes(3))
    def test_existence_condition_definition(self, p1, p2):
        expected = not brute_subpalette(p1, p2) and not brute_subpalette(p1, reverse(p2))
        assert existence_condition(p1, p2) == expected
