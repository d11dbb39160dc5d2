"""Fixed verification suites with text and JSON reports.

Every suite pins its own sizes and bounds, so a report means the same thing
regardless of module defaults.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import coloring, digraph, extremal, hypergraph, palette

SCHEMA = 1


class UnknownSuite(KeyError):
    pass


@dataclass
class Claim:
    id: str
    anchor: str
    passed: bool
    values: dict = field(default_factory=dict)
    runtime: float = 0.0
    counterexample: object = None

    def to_json(self, with_runtime=True) -> dict:
        out = {"id": self.id, "anchor": self.anchor, "status": "pass" if self.passed else "fail", "values": self.values}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if with_runtime:
            out["runtime"] = round(self.runtime, 4)
        return out


@dataclass
class SuiteReport:
    suite: str
    claims: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_json(self, with_runtime=True) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "claims": [c.to_json(with_runtime) for c in self.claims],
        }

    def dumps(self, with_runtime=True) -> str:
        return json.dumps(self.to_json(with_runtime), indent=1, sort_keys=True, default=_jsonable)

    def text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.claims:
            vals = ", ".join(f"{k}={_short(v)}" for k, v in c.values.items())
            lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.id} ({c.anchor}) {vals} [{c.runtime:.2f}s]")
            if c.counterexample is not None:
                lines.append(f"      counterexample: {_short(c.counterexample)}")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (set, frozenset, tuple)):
        return sorted(x) if isinstance(x, (set, frozenset)) else list(x)
    if isinstance(x, bytes):
        return x.hex()
    return str(x)


def _short(v, limit=80):
    s = json.dumps(v, default=_jsonable, sort_keys=True)
    return s if len(s) <= limit else s[: limit - 3] + "..."


def _arcs(d: digraph.Digraph) -> list:
    return [list(a) for a in sorted(d.arcs)]


# --------------------------------------------------------------------------
# claim bodies: each returns (passed, values, counterexample)


def _six_vertex_split():
    n = 6
    failures = []
    total = digraph.count_labeled(n, "tournaments")
    for code in range(total):
        t = digraph.tournament_from_code(n, code)
        split = digraph.transitive_partition6(t)
        # re-check each part independently through the induced sub-tournament
        if split is None or any(digraph.count_c3(digraph.Tournament.of(t.induced(sorted(part)))) for part in split):
            failures.append(code)
            if len(failures) >= 5:
                break
    cex = None
    if failures:
        cex = {"code": failures[0], "arcs": _arcs(digraph.tournament_from_code(n, failures[0]))}
    return not failures, {"checked": total, "failures": len(failures)}, cex


def _moon_moser_claims():
    claims = []
    for n in range(3, 8):
        def body(n=n):
            counts = _c3_counts(n)
            bound = digraph.moon_moser_bound(n)
            top = int(counts.max())
            cex = None
            if top > bound:
                code = int(counts.argmax())
                cex = {"code": code, "arcs": _arcs(digraph.tournament_from_code(n, code))}
            return top <= bound, {"n": n, "tournaments": int(counts.size), "max_c3": top, "bound": bound}, cex

        claims.append((f"c3-bound-n{n}", "directed triangle count at most the Moon-Moser bound", body))
    for n, expected in ((6, 8), (7, 14)):
        def attained(n=n, expected=expected):
            top = int(_c3_counts(n).max())
            return top == expected, {"n": n, "max_c3": top, "expected": expected}, None

        claims.append((f"c3-max-n{n}", "exhaustive maximum of directed triangles", attained))
    return claims


_C3_CACHE = {}


def _c3_counts(n):
    # shared by the bound and maximum claims; numpy arrays are read-only here
    if n not in _C3_CACHE:
        _C3_CACHE[n] = digraph.c3_counts_all(n)
    return _C3_CACHE[n]


def _brown_harary_claims():
    claims = []
    t3 = digraph.transitive_tournament(3)
    c3 = digraph.cycle3()
    k3 = digraph.complete_digraph(3)
    for name, pat in (("T3", t3), ("C3", c3)):
        for n in (3, 4, 5):
            def body(pat=pat, n=n):
                res = extremal.ex_exact(pat, n)
                target = digraph.f_value(n, 3)
                bad = [k.hex() for k in res.witnesses if digraph.contains(digraph.digraph_from_key(k), pat) is not None]
                return res.value == target and not bad, {"n": n, "ex": res.value, "2ex(n,K3)": target, "nodes": res.nodes}, (bad or None)

            claims.append((f"ex-{name}-n{n}", "ex(n, T) = 2 ex(n, K_r) for an r-vertex tournament T", body))
    for n in (3, 4):
        def body(n=n):
            res = extremal.ex_exact(k3, n)
            target = n * (n - 1) // 2 + digraph.turan_numbers(n, 3)[0]
            return res.value == target, {"n": n, "ex": res.value, "C(n,2)+ex(n,K3)": target, "nodes": res.nodes}, None

        claims.append((f"ex-K3bi-n{n}", "ex(n, bidirected K_r) = C(n,2) + ex(n, K_r)", body))
    for name, pat, nmax, expect in (("T3", t3, 5, True), ("C3", c3, 5, True), ("K3bi", k3, 3, False)):
        def body(pat=pat, nmax=nmax, expect=expect):
            good, rows = extremal.is_r_good_upto(pat, nmax)
            return good == expect, {"good": good, "rows": [[r.n, r.ex, r.f] for r in rows], "prefix-verified only": True}, None

        claims.append((f"good-{name}-upto{nmax}", "r-goodness on a finite prefix of n", body))
    return claims


def _degree_squared_claims():
    claims = []
    for n in range(2, 6):
        def body(n=n):
            value, witness = extremal.max_gamma2(3, n)
            bound = extremal.gamma2_bound(3, n)
            ok = value <= bound and digraph.contains(witness, digraph.transitive_tournament(3)) is None
            ok = ok and digraph.gamma2(witness)[2] == value
            vals = {"n": n, "max_gamma2": value, "bound": bound}
            if n <= 4:
                brute = extremal.max_gamma2_bruteforce(digraph.transitive_tournament(3), n)
                vals["bruteforce"] = brute
                ok = ok and brute == value
            return ok, vals, None if ok else {"witness": _arcs(witness)}

        claims.append((f"gamma2-n{n}", "degree-squared sum of T_r-free digraphs at most ((r-2)/(r-1))^2 n^3", body))

    def attained():
        value, witness = extremal.max_gamma2(3, 4)
        return value == 16, {"max_gamma2": value, "expected": 16, "witness": _arcs(witness)}, None

    claims.append(("gamma2-n4-attained", "bound (1/4) n^3 attained at n = 4", attained))
    return claims


def _witness_claim(f, p, expect: bool):
    w = coloring.colorable(f, p)
    ok = (w is not None) == expect and (w is None or coloring.check_witness(f, p, w))
    vals = {"colorable": w is not None, "expected": expect}
    if w is not None:
        vals["order"] = list(w.order)
    return ok, vals, None


def _colorability_claims():
    named = palette.named_palette
    g = hypergraph.named_threegraph
    qlt3 = palette.side_palette(digraph.transitive_tournament(3), "left")
    t3u = palette.digraph_union_palette(digraph.transitive_tournament(3), digraph.transitive_tournament(3))
    f4 = hypergraph.single_edge_gadget("F4")
    f7 = hypergraph.single_edge_gadget("F7")
    natural4, reversed4 = tuple(range(4)), tuple(range(3, -1, -1))
    natural7, reversed7 = tuple(range(7)), tuple(range(6, -1, -1))
    # colours 1-based in the construction: (v1v2, v1v3, v2v3) = (4,1,5), (v1v3, v1v4, v3v4) = (1,2,3)
    f4_phi = {(0, 1): 3, (0, 2): 0, (1, 2): 4, (0, 3): 1, (2, 3): 2}

    def fixed(f, p, order, expect):
        phi = coloring.colorable_fixed_order(f, p, order)
        return (phi is not None) == expect, {"order": list(order), "colorable": phi is not None, "expected": expect}, None

    def f4_given():
        ok = coloring.is_valid_coloring(f4, named("Qplus2_5"), natural4, f4_phi)
        solver = coloring.colorable_fixed_order(f4, named("Qplus2_5"), natural4) is not None
        return ok and solver, {"given_phi_valid": ok, "solver_finds_phi": solver}, None

    return [
        ("K4-not-Qr2", "complete 3-graph on r+2 vertices is not Q_r-colorable", lambda: _witness_claim(g("complete", 4), named("Qr", 2), False)),
        ("K5-not-Qr3", "complete 3-graph on r+2 vertices is not Q_r-colorable", lambda: _witness_claim(g("complete", 5), named("Qr", 3), False)),
        ("k4minus-left-T3", "K4- is colorable by the left palette of T3", lambda: _witness_claim(g("k4minus"), qlt3, True)),
        ("k4minus-not-Q2r2", "K4- is not colorable by the 2-colour double-difference palette", lambda: _witness_claim(g("k4minus"), named("Q2r", 2), False)),
        ("f5star-left-T3", "F5* is colorable by the left palette of T3", lambda: _witness_claim(g("f5star"), qlt3, True)),
        ("f5star-not-Q2r2", "F5* is not colorable by the 2-colour double-difference palette", lambda: _witness_claim(g("f5star"), named("Q2r", 2), False)),
        ("C5-not-Qplus2", "tight 5-cycle is not Q+2_5-colorable", lambda: _witness_claim(g("tight_cycle", 5), named("Qplus2_5"), False)),
        ("F4-Qplus2-given-phi", "F4 gadget colouring (4,1,5),(1,2,3)", f4_given),
        ("F4-not-Qprime-natural", "no colour is both a top and a left colour of Q'-_3", lambda: fixed(f4, named("QprimeMinus3"), natural4, False)),
        ("F4-not-Qprime-reversed", "no colour is both a top and a left colour of Q'-_3", lambda: fixed(f4, named("QprimeMinus3"), reversed4, False)),
        ("F7-T3uT3-natural", "F7 gadget colorable by left(T3) united with right(T3)", lambda: fixed(f7, t3u, natural7, True)),
        ("F7-not-Qr2-natural", "F7 gadget not Q_2-colorable in the given order", lambda: fixed(f7, named("Qr", 2), natural7, False)),
        ("F7-not-Qr2-reversed", "F7 gadget not Q_2-colorable in the given order", lambda: fixed(f7, named("Qr", 2), reversed7, False)),
    ]


def _random_palette(rng, m_max=3, dens=0.3):
    m = rng.randint(1, m_max)
    triples = [t for t in itertools.product(range(m), repeat=3) if rng.random() < dens]
    return palette.Palette(m, frozenset(triples))


def _palette_claims():
    named = palette.named_palette
    claims = []
    closed = [("Qr", r, Fraction(r - 1, r)) for r in (1, 2, 3, 4, 5)]
    closed += [("Q2r", m, Fraction(m - 1, m) ** 2) for m in (1, 2, 3, 4, 5)]

    def densities():
        bad = []
        got = {}
        for name, param, expect in closed:
            d = palette.density(named(name, param))
            got[f"{name}({param})"] = d
            if d != expect:
                bad.append(f"{name}({param})")
        for name, expect in (("Qminus3", Fraction(1, 27)), ("QprimeMinus3", Fraction(4, 27))):
            d = palette.density(named(name))
            got[name] = d
            if d != expect:
                bad.append(name)
        return not bad, {k: str(v) for k, v in got.items()}, bad or None

    claims.append(("densities", "closed-form palette densities", densities))
    for r in (3, 4):
        def body(r=r):
            t = digraph.transitive_tournament(r)
            p = palette.digraph_union_palette(t, t)
            ok = palette.existence_condition(p, named("Qr", r - 1))
            return ok, {"r": r, "existence_condition": ok}, None

        claims.append((f"existence-T{r}uT{r}-vs-Qr{r - 1}", "left(T_r) united with right(T_r) fits in neither Q_(r-1) nor its reverse", body))

    def reverse_involution():
        rng = random.Random(1)
        for i in range(250):
            p = _random_palette(rng)
            if palette.reverse(palette.reverse(p)) != p:
                return False, {"cases": i + 1}, {"m": p.m, "triples": sorted(p.triples)}
        return True, {"cases": 250}, None

    def reflexive_and_composition():
        rng = random.Random(2)
        for i in range(250):
            a, b, c = (_random_palette(rng, 3, 0.25), _random_palette(rng, 3, 0.5), _random_palette(rng, 3, 0.7))
            if palette.subpalette(a, a) is None:
                return False, {"cases": i}, {"reflexivity": sorted(a.triples)}
            h1, h2 = palette.subpalette(a, b), palette.subpalette(b, c)
            if h1 is not None and h2 is not None:
                comp = h1.then(h2)
                if not comp.is_valid(a, c) or palette.subpalette(a, c) is None:
                    return False, {"cases": i}, {"a": sorted(a.triples), "b": sorted(b.triples), "c": sorted(c.triples)}
        return True, {"cases": 250}, None

    def side_reverse():
        # reversing a left palette gives the right palette of the converse digraph
        rng = random.Random(3)
        for i in range(60):
            d = digraph.digraph_from_code(3, rng.randrange(digraph.count_labeled(3, "digraphs")))
            rl = palette.reverse(palette.side_palette(d, "left"))
            rc = palette.side_palette(d.converse(), "right")
            if palette.palette_isomorphism(rl, rc) is None:
                return False, {"cases": i}, {"arcs": _arcs(d)}
        return True, {"cases": 60}, None

    claims += [
        ("reverse-involution", "reverse of reverse is the palette itself", reverse_involution),
        ("subpalette-reflexive-composition", "subpalette relation is reflexive and transitive", reflexive_and_composition),
        ("side-palette-reverse", "reversed left palette matches the right palette of the converse", side_reverse),
    ]
    return claims


def _d10_claims():
    def freeness():
        rep = extremal.d10_remark_check(15)
        return all(rep.free.values()) and len(rep.free) == 2, {"n": 15, "free": rep.free, "arcs": rep.arcs}, None

    claims = [("d10-free-n15", "D_n is D_10-free", freeness)]
    for n in (50, 100, 1000):
        def body(n=n):
            rep = extremal.d10_remark_check(n, check_freeness=False)
            vals = {
                "n": n,
                "arcs": rep.arcs,
                "2ex(n,K10)": rep.f,
                "links": [[desc, holds, first] for desc, holds, first in rep.links],
                "excess_from": rep.excess_from,
            }
            return rep.excess, vals, None

        claims.append((f"d10-excess-n{n}", "D_n has strictly more arcs than 2 ex(n, K_10)", body))
    return claims


def _prop_relation():
    bad = []
    count = 0
    for r in range(2, 13):
        for n1 in range(0, 41):
            for n2 in range(0, 41):
                lhs, rhs = digraph.relation_gap(n1, n2, r)
                count += 1
                if lhs != rhs:
                    bad.append([n1, n2, r, str(lhs), str(rhs)])
    return not bad, {"cases": count, "failures": len(bad)}, (bad[:5] or None)


def _oracle_equivalence():
    named = palette.named_palette
    pals = {"Qr(2)": named("Qr", 2), "Qminus3": named("Qminus3"), "Qplus2_5": named("Qplus2_5"), "QprimeMinus3": named("QprimeMinus3")}
    graphs = [f for n in range(0, 5) for f in hypergraph.nonisomorphic_threegraphs(n)]
    disagreements = []
    checks = 0
    for f in graphs:
        for name, p in pals.items():
            solver = coloring.colorable(f, p) is not None
            oracle = coloring.brute_oracle(f, p)
            checks += 1
            if solver != oracle:
                disagreements.append({"n": f.n, "edges": f.sorted_edges(), "palette": name, "solver": solver, "oracle": oracle})
    return not disagreements, {"graphs": len(graphs), "checks": checks, "disagreements": len(disagreements)}, (disagreements[:3] or None)


def _lower_bound_claims():
    claims = []
    for n in range(11, 16):
        def body(n=n):
            ok = extremal.verify_lower_bound(4, 4, 3, n)
            host = digraph.bidirected_turan(n, 11)
            return ok, {"n": n, "arcs": host.num_arcs, "f(n,11)": digraph.f_value(n, 11)}, None

        claims.append((f"turan-free-n{n}", "bidirected Turan digraph avoids T4+T4+T3 with f(n, 11) arcs", body))
    return claims


SUITES = {
    "lemma-t6": lambda: [("all-6-tournaments", "six-vertex tournaments split into two transitive triples", _six_vertex_split)],
    "moon-moser": _moon_moser_claims,
    "brown-harary": _brown_harary_claims,
    "degree-squared": _degree_squared_claims,
    "colorability": _colorability_claims,
    "palettes": _palette_claims,
    "d10-remark": _d10_claims,
    "prop-relation": lambda: [("grid-n40-r12", "ex(n1+n2) relation between Turan numbers", _prop_relation)],
    "oracle-equivalence": lambda: [("upto-4-vertices", "solver agrees with brute-force enumeration", _oracle_equivalence)],
    "turan-lower-bounds": _lower_bound_claims,
}


def _run_claim(spec) -> Claim:
    cid, anchor, body = spec
    t0 = time.perf_counter()
    try:
        passed, values, cex = body()
    except Exception as exc:  # a crash is a failed claim with the error as evidence
        passed, values, cex = False, {}, {"error": f"{type(exc).__name__}: {exc}"}
    return Claim(cid, anchor, bool(passed), values, time.perf_counter() - t0, cex)


def run_suite(suite_id: str, parallel: bool = False, workers: int = 4) -> SuiteReport:
    if suite_id not in SUITES:
        raise UnknownSuite(f"unknown suite {suite_id!r}; expected one of {', '.join(SUITES)}")
    specs = SUITES[suite_id]()
    if parallel and len(specs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            claims = list(pool.map(_run_claim, specs))
    else:
        claims = [_run_claim(s) for s in specs]
    return SuiteReport(suite_id, claims)
