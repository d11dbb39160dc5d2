import json
from fractions import Fraction

import pytest

from unituran.digraph import (
    Digraph,
    bidirected_turan,
    complete_digraph,
    contains,
    cycle3,
    empty_digraph,
    f_value,
    four_tournament_with_cycle,
    gamma2,
    sum_of,
    transitive_tournament,
)
from unituran.extremal import (
    ExtremalCache,
    ExtremalError,
    d10_remark_check,
    default_cache,
    ex_bruteforce,
    ex_exact,
    gamma2_bound,
    is_r_good_upto,
    max_gamma2,
    max_gamma2_bruteforce,
    verify_lower_bound,
)

T3, C3, K3 = transitive_tournament(3), cycle3(), complete_digraph(3)


@pytest.mark.parametrize("pattern", [T3, C3, K3, complete_digraph(2), Digraph(3, frozenset({(0, 1), (1, 2)}))], ids=["T3", "C3", "K3", "K2", "P3"])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_ex_matches_brute_force(pattern, n):
    assert ex_exact(pattern, n).value == ex_bruteforce(pattern, n)


def test_examples():
    assert ex_exact(T3, 4).value == 8
    assert ex_exact(complete_digraph(2), 2).value == 1
    assert ex_exact(K3, 3).value == 5


def test_tournament_patterns_agree():
    for n in (3, 4, 5):
        assert ex_exact(T3, n).value == ex_exact(C3, n).value == f_value(n, 3)


def test_witnesses_are_free_and_extremal():
    for pattern in (T3, C3, K3):
        res = ex_exact(pattern, 4)
        assert res.exhaustive and res.witnesses
        for d in res.witness_digraphs():
            assert d.num_arcs == res.value
            assert contains(d, pattern) is None


def test_turan_digraph_among_witnesses():
    res = ex_exact(T3, 5)
    from unituran.digraph import canonical_key

    assert canonical_key(bidirected_turan(5, 3)) in res.witnesses


def test_monotone_and_normalised_nonincreasing():
    values = [ex_exact(C3, n).value for n in range(2, 6)]
    assert values == sorted(values)
    dens = [Fraction(v, n * n - n) for v, n in zip(values, range(2, 6))]
    assert all(a >= b for a, b in zip(dens, dens[1:]))


def test_small_host_is_complete():
    assert ex_exact(transitive_tournament(4), 3).value == 6


def test_bounds_and_rejections():
    with pytest.raises(ExtremalError):
        ex_exact(transitive_tournament(5), 6)
    with pytest.raises(ExtremalError):
        ex_exact(T3, 7)
    with pytest.raises(ExtremalError):
        ex_exact(Digraph(2, frozenset({(0, 0)}), allow_loops=True), 3)
    with pytest.raises(ExtremalError):
        ex_exact(empty_digraph(2), 3)


def test_parallel_matches_serial():
    a = ex_exact(C3, 5)
    b = ex_exact(C3, 5, workers=2)
    assert a.value == b.value and a.witnesses == b.witnesses


def test_goodness():
    good, rows = is_r_good_upto(T3, 5)
    assert good and [r.n for r in rows] == [3, 4, 5]
    assert is_r_good_upto(C3, 5)[0]
    good, rows = is_r_good_upto(K3, 3)
    assert not good and rows[0].ex == 5 and rows[0].f == 4


def test_gamma2_values():
    assert max_gamma2(3, 4)[0] == 16
    for r in (3, 4):
        for n in range(1, r):
            assert max_gamma2(r, n)[0] == n * (n - 1) ** 2


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gamma2_matches_brute_force(n):
    for pattern in (T3, C3):
        value, witness = max_gamma2(3, n, pattern)
        assert value == max_gamma2_bruteforce(pattern, n)
        assert gamma2(witness)[2] == value and contains(witness, pattern) is None


def test_gamma2_bound_holds():
    for n in range(2, 6):
        assert max_gamma2(3, n)[0] <= gamma2_bound(3, n)


def test_gamma2_size_bound():
    with pytest.raises(ExtremalError):
        max_gamma2(3, 6)


def test_lower_bound():
    assert verify_lower_bound(4, 4, 3, 12)
    assert verify_lower_bound(1, 1, 1, 3)
    assert verify_lower_bound(2, 2, 2, 4)
    t4 = four_tournament_with_cycle()
    assert verify_lower_bound(4, 4, 3, 11, tournaments=(t4, t4, C3))
    with pytest.raises(ExtremalError):
        verify_lower_bound(1, 1, 1, 8)


def test_two_part_host_avoids_bidirected_triangle():
    host = bidirected_turan(6, 3)
    one = transitive_tournament(1)
    assert contains(host, sum_of(one, one, one)) is None
    assert contains(bidirected_turan(6, 4), sum_of(one, one, one)) is not None


def test_d10_report():
    rep = d10_remark_check(15)
    assert rep.free == {"strong": True, "dominating": True}
    assert rep.arcs == 195 and rep.f == 198 and not rep.excess
    assert [first for _, _, first in rep.links] == [10, 10, 136, 10]
    assert rep.excess_from == 46
    for n, arcs, f in ((50, 2225, 2220), (100, 8950, 8888)):
        rep = d10_remark_check(n)
        assert rep.free == {} and rep.arcs == arcs and rep.f == f and rep.ok
    assert d10_remark_check(1000).chain_holds


def test_cache_round_trip(tmp_path):
    path = tmp_path / "cache.json"
    cache = ExtremalCache(str(path))
    first = ex_exact(C3, 4, cache=cache)
    again = ExtremalCache(str(path))
    assert again.get(C3.relabel([2, 0, 1]), 4) == first
    # a tampered entry whose key no longer matches its pattern is dropped
    raw = json.loads(path.read_text())
    name = next(iter(raw))
    raw[name]["pattern"]["arcs"] = [[0, 1], [1, 2], [0, 2]]
    path.write_text(json.dumps(raw))
    assert ExtremalCache(str(path)).get(C3, 4) is None


def test_default_cache_settings(tmp_path, monkeypatch):
    monkeypatch.setenv("UNITURAN_CACHE", "off")
    assert default_cache() is None
    monkeypatch.setenv("UNITURAN_CACHE", str(tmp_path / "c.json"))
    assert default_cache().path == str(tmp_path / "c.json")
    assert default_cache("off") is None
