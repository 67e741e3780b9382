"""Instance file parsing and formatting.

Formats ('#' starts a comment, ids are 0-based):

    graph n s t          dag n s t           setsystem n m
    u v                  u v                 e1 e2 ...   (one line per set,
    ...                  ...                              blank line = empty set)
"""

from __future__ import annotations

from typing import Tuple, Union

from .errors import CycleError
from .graph import Digraph, Graph, topological_order
from .setsystem import SetSystem

Instance = Union[Graph, Digraph, SetSystem]


class ParseError(Exception):
    def __init__(self, line_no: int, msg: str):
        super().__init__(f"parse error line {line_no}: {msg}")
        self.line_no = line_no


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _int_fields(payload: str, line_no: int) -> list[int]:
    fields = []
    for tok in payload.split():
        try:
            fields.append(int(tok))
        except ValueError:
            raise ParseError(line_no, f"expected integer, got {tok!r}")
    return fields


def parse_instance(text: str) -> Tuple[str, Instance]:
    """Parse an instance file; returns (kind, instance).

    Raises ParseError with a 1-based line number on malformed input,
    including duplicate edges, self-loops, cyclic 'dag' payloads and
    duplicate family sets.
    """
    lines = text.splitlines()
    header_no = None
    for i, raw in enumerate(lines, 1):
        if _strip(raw):
            header_no = i
            break
    if header_no is None:
        raise ParseError(1, "empty instance")
    header = _strip(lines[header_no - 1]).split()
    kind = header[0]
    if kind in ("graph", "dag"):
        if len(header) != 4:
            raise ParseError(header_no, f"expected '{kind} n s t'")
        n, s, t = _int_fields(" ".join(header[1:]), header_no)
        edges = []
        for i in range(header_no, len(lines)):
            payload = _strip(lines[i])
            if not payload:
                continue
            fields = _int_fields(payload, i + 1)
            if len(fields) != 2:
                raise ParseError(i + 1, "expected 'u v'")
            edges.append((fields[0], fields[1], i + 1))
        seen = set()
        pairs = []
        for u, v, line_no in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(line_no, f"endpoint out of range: {u} {v}")
            if u == v:
                raise ParseError(line_no, f"self-loop at vertex {u}")
            key = (u, v) if kind == "dag" else (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(line_no, f"duplicate {'arc' if kind == 'dag' else 'edge'} {u} {v}")
            seen.add(key)
            pairs.append((u, v))
        try:
            if kind == "graph":
                return kind, Graph(n, pairs, s, t)
            d = Digraph(n, pairs, s, t)
            topological_order(d)
            return kind, d
        except CycleError:
            raise ParseError(header_no, "digraph contains a cycle")
        except ValueError as exc:
            raise ParseError(header_no, str(exc))
    if kind == "setsystem":
        if len(header) != 3:
            raise ParseError(header_no, "expected 'setsystem n m'")
        n, m = _int_fields(" ".join(header[1:]), header_no)
        family = []
        seen_sets = {}
        taken = 0
        for i in range(header_no, len(lines)):
            if taken == m:
                if _strip(lines[i]):
                    raise ParseError(i + 1, f"extra content after {m} sets")
                continue
            raw = lines[i].split("#", 1)[0]
            if not raw.strip() and "#" in lines[i]:
                continue  # pure comment line; a fully blank line is an empty set
            elems = _int_fields(raw, i + 1)
            for e in elems:
                if not (0 <= e < n):
                    raise ParseError(i + 1, f"element out of range: {e}")
            fs = frozenset(elems)
            if len(fs) != len(elems):
                raise ParseError(i + 1, "repeated element within a set")
            if fs in seen_sets:
                raise ParseError(i + 1, f"duplicate set (same as line {seen_sets[fs]})")
            seen_sets[fs] = i + 1
            family.append(fs)
            taken += 1
        if taken != m:
            raise ParseError(len(lines), f"expected {m} sets, found {taken}")
        return kind, SetSystem(n, family)
    raise ParseError(header_no, f"unknown instance kind {kind!r}")


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n} {g.s} {g.t}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def format_digraph(d: Digraph) -> str:
    lines = [f"dag {d.n} {d.s} {d.t}"]
    lines += [f"{u} {v}" for u, v in d.arcs]
    return "\n".join(lines) + "\n"


def format_setsystem(sys: SetSystem) -> str:
    lines = [f"setsystem {sys.universe_size} {len(sys.family)}"]
    lines += [" ".join(str(e) for e in sorted(s)) for s in sys.family]
    return "\n".join(lines) + "\n"


def format_instance(obj: Instance) -> str:
    if isinstance(obj, Graph):
        return format_graph(obj)
    if isinstance(obj, Digraph):
        return format_digraph(obj)
    return format_setsystem(obj)
