"""Text and JSON formats for digraphs, 3-graphs, k-graphs, palettes and witnesses.

Text formats have a header line followed by one item per line; ``#`` starts
a comment. Saving writes a canonical text form (sorted items), so loading
and saving again reproduces the file byte for byte.

    digraph n=4 [loops]      tournament n=3       3graph n=5
    0 1                      0 1                  0 1 2
    1 2                      ...                  ...

    kgraph k=4 n=7           palette m=3
    0 1 2 3                  0 2 0
"""

from __future__ import annotations

import json
from pathlib import Path

from .coloring import ColoringWitness
from .digraph import Digraph, DigraphError, Tournament
from .hypergraph import HypergraphError, LinearKGraph, ThreeGraph
from .palette import Palette, PaletteError


class FormatError(ValueError):
    """Malformed input; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield no, body


def _header(text: str, kinds: tuple):
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty input", 1)
    no, head = lines[0]
    words = head.split()
    if words[0] not in kinds:
        raise FormatError(f"expected header starting with one of {', '.join(kinds)}, got {words[0]!r}", no)
    fields, flags = {}, set()
    for w in words[1:]:
        if "=" in w:
            key, _, value = w.partition("=")
            try:
                fields[key] = int(value)
            except ValueError:
                raise FormatError(f"header field {key} must be an integer, got {value!r}", no) from None
        else:
            flags.add(w)
    return words[0], fields, flags, lines[1:], no


def _need(fields, key, no):
    if key not in fields:
        raise FormatError(f"header is missing {key}=", no)
    return fields[key]


def _ints(body: str, count: int, no: int) -> tuple:
    parts = body.split()
    if len(parts) != count:
        raise FormatError(f"expected {count} integers, got {len(parts)}", no)
    try:
        return tuple(int(x) for x in parts)
    except ValueError:
        raise FormatError(f"non-integer entry in {body!r}", no) from None


def _items(rows, count, lo, hi, what, ordered=True):
    """Parse rows of ``count`` integers in [lo, hi), rejecting duplicates by line."""
    seen = {}
    for no, body in rows:
        t = _ints(body, count, no)
        for x in t:
            if not (lo <= x < hi):
                raise FormatError(f"{what} entry {x} outside [{lo}, {hi})", no)
        key = t if ordered else tuple(sorted(t))
        if key in seen:
            raise FormatError(f"duplicate {what} {t} (first on line {seen[key]})", no)
        seen[key] = no
    return seen


# --------------------------------------------------------------------------
# digraphs and tournaments


def parse_digraph(text: str) -> Digraph:
    kind, fields, flags, rows, no = _header(text, ("digraph", "tournament"))
    n = _need(fields, "n", no)
    loops = "loops" in flags
    if kind == "tournament" and loops:
        raise FormatError("tournaments cannot have loops", no)
    arcs = _items(rows, 2, 0, n, "arc")
    for (u, v), line in arcs.items():
        if u == v and not loops:
            raise FormatError(f"loop ({u}, {v}) without the 'loops' flag", line)
    if kind == "tournament":
        for (u, v), line in arcs.items():
            if (v, u) in arcs:
                raise FormatError(f"pair {{{u}, {v}}} is oriented both ways; not a tournament", max(line, arcs[(v, u)]))
        try:
            return Tournament(n, frozenset(arcs))
        except DigraphError as exc:
            raise FormatError(str(exc)) from None
    try:
        return Digraph(n, frozenset(arcs), allow_loops=loops)
    except DigraphError as exc:
        raise FormatError(str(exc)) from None


def format_digraph(d: Digraph) -> str:
    if isinstance(d, Tournament):
        head = f"tournament n={d.n}"
    else:
        head = f"digraph n={d.n}" + (" loops" if d.allow_loops else "")
    return "\n".join([head] + [f"{u} {v}" for u, v in sorted(d.arcs)]) + "\n"


# --------------------------------------------------------------------------
# hypergraphs


def parse_threegraph(text: str) -> ThreeGraph:
    _, fields, _, rows, no = _header(text, ("3graph",))
    n = _need(fields, "n", no)
    edges = _items(rows, 3, 0, n, "edge", ordered=False)
    for t, line in edges.items():
        if len(set(t)) != 3:
            raise FormatError(f"edge {t} repeats a vertex", line)
    return ThreeGraph(n, frozenset(edges))


def format_threegraph(f: ThreeGraph) -> str:
    return "\n".join([f"3graph n={f.n}"] + [" ".join(map(str, e)) for e in f.sorted_edges()]) + "\n"


def parse_kgraph(text: str) -> LinearKGraph:
    _, fields, _, rows, no = _header(text, ("kgraph",))
    k = _need(fields, "k", no)
    n = _need(fields, "n", no)
    edges = _items(rows, k, 0, n, "edge", ordered=False)
    for t, line in edges.items():
        if len(set(t)) != k:
            raise FormatError(f"edge {t} repeats a vertex", line)
    placed = []
    for t, line in sorted(edges.items(), key=lambda kv: kv[1]):
        for other, other_line in placed:
            if len(set(t) & set(other)) >= 2:
                raise FormatError(
                    f"edges {other} (line {other_line}) and {t} share {len(set(t) & set(other))} vertices; not linear",
                    line,
                )
        placed.append((t, line))
    try:
        return LinearKGraph(k, n, frozenset(edges))
    except HypergraphError as exc:
        raise FormatError(str(exc), no) from None


def format_kgraph(h: LinearKGraph) -> str:
    return "\n".join([f"kgraph k={h.k} n={h.n}"] + [" ".join(map(str, e)) for e in sorted(h.edges)]) + "\n"


# --------------------------------------------------------------------------
# palettes


def parse_palette(text: str) -> Palette:
    _, fields, _, rows, no = _header(text, ("palette",))
    m = _need(fields, "m", no)
    triples = _items(rows, 3, 0, m, "triple")
    try:
        return Palette(m, frozenset(triples))
    except PaletteError as exc:
        raise FormatError(str(exc), no) from None


def format_palette(p: Palette) -> str:
    return "\n".join([f"palette m={p.m}"] + [" ".join(map(str, t)) for t in p.sorted_triples()]) + "\n"


# --------------------------------------------------------------------------
# witnesses


def parse_witness(text: str) -> ColoringWitness:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "order" not in data or "phi" not in data:
        raise FormatError("witness JSON needs 'order' and 'phi'")
    try:
        return ColoringWitness.from_json(data)
    except (ValueError, AttributeError, TypeError) as exc:
        raise FormatError(f"malformed witness: {exc}") from None


def format_witness(w: ColoringWitness) -> str:
    return json.dumps(w.to_json(), indent=1, sort_keys=True) + "\n"


# --------------------------------------------------------------------------
# files

_PARSERS = {
    "digraph": parse_digraph,
    "tournament": parse_digraph,
    "3graph": parse_threegraph,
    "kgraph": parse_kgraph,
    "palette": parse_palette,
}


def parse_any(text: str):
    """Dispatch on the header word."""
    for _, body in _lines(text):
        word = body.split()[0]
        if word not in _PARSERS:
            raise FormatError(f"unknown object type {word!r}")
        return _PARSERS[word](text)
    raise FormatError("empty input", 1)


def format_any(obj) -> str:
    if isinstance(obj, Digraph):
        return format_digraph(obj)
    if isinstance(obj, ThreeGraph):
        return format_threegraph(obj)
    if isinstance(obj, LinearKGraph):
        return format_kgraph(obj)
    if isinstance(obj, Palette):
        return format_palette(obj)
    if isinstance(obj, ColoringWitness):
        return format_witness(obj)
    raise TypeError(f"cannot format {type(obj).__name__}")


def load(path) -> object:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return parse_witness(text)
    return parse_any(text)


def save(obj, path) -> None:
    Path(path).write_text(format_any(obj))
