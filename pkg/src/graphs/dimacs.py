"""
DIMACS-like edge format: `c` comments, one `p edge <n> <m>` header, `e <u> <v>` lines
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Set, TextIO, Tuple, Union

from .graph import Edge, Graph, MAX_DEGREE, sorted_edges

logger = logging.getLogger(__name__)


class GraphFormatError(ValueError):
    """Malformed graph text, with the offending line number"""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(line_no, f"expected an integer, got '{token}'")


def parse_graph(text: Union[str, Iterable[str]]) -> Graph:
    """Parse graph text (a string or an iterable of lines)"""
    lines = text.splitlines() if isinstance(text, str) else text

    header: Optional[Tuple[int, int]] = None
    edges: List[Tuple[int, Edge]] = []
    degree = {}
    seen: Set[Edge] = set()

    for line_no, raw in enumerate(lines, 1):
        tokens = raw.split()
        if not tokens or tokens[0] == 'c':
            continue
        kind = tokens[0]
        if kind == 'p':
            if header is not None:
                raise GraphFormatError(line_no, "duplicate 'p' header")
            if edges:
                raise GraphFormatError(line_no, "'p' header after edge lines")
            if len(tokens) != 4 or tokens[1] != 'edge':
                raise GraphFormatError(line_no, "header must read 'p edge <n> <m>'")
            n, m = _parse_int(tokens[2], line_no), _parse_int(tokens[3], line_no)
            if n < 0 or m < 0:
                raise GraphFormatError(line_no, "negative node or edge count")
            header = (n, m)
        elif kind == 'e':
            if len(tokens) != 3:
                raise GraphFormatError(line_no, "edge line must read 'e <u> <v>'")
            u, v = _parse_int(tokens[1], line_no), _parse_int(tokens[2], line_no)
            if u == v:
                raise GraphFormatError(line_no, f"self-loop on node {u}")
            if header is not None:
                for x in (u, v):
                    if not 1 <= x <= header[0]:
                        raise GraphFormatError(line_no, f"node id {x} outside 1..{header[0]}")
            elif u < 1 or v < 1:
                raise GraphFormatError(line_no, "node ids are 1-based")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphFormatError(line_no, f"duplicate edge {key}")
            seen.add(key)
            for x in (u, v):
                degree[x] = degree.get(x, 0) + 1
                if degree[x] > MAX_DEGREE:
                    raise GraphFormatError(line_no, f"node {x} exceeds degree {MAX_DEGREE}")
            edges.append((line_no, key))
        else:
            raise GraphFormatError(line_no, f"unknown line type '{kind}'")

    if header is not None:
        n, m = header
        if len(edges) != m:
            last_line = edges[-1][0] if edges else 1
            raise GraphFormatError(last_line, f"header announces {m} edges, found {len(edges)}")
        nodes: Iterable[int] = range(1, n + 1)
    else:
        nodes = sorted({x for _, e in edges for x in e})

    graph = Graph.from_edges(nodes, [e for _, e in edges])
    logger.debug(f"Parsed graph with n={graph.n}, m={graph.m}")
    return graph


def read_graph(path: Union[str, Path]) -> Graph:
    with open(path, 'r', encoding='utf-8') as handle:
        return parse_graph(handle.read())


def format_graph(graph: Graph, comments: Iterable[str] = ()) -> str:
    """Render a graph with 1-based ids in DIMACS-like form"""
    out = [f"c {c}" for c in comments]
    n = max(graph.nodes, default=0)
    if sorted(graph.nodes) != list(range(1, n + 1)):
        raise ValueError("graph ids must be exactly 1..n to be written")
    out.append(f"p edge {n} {graph.m}")
    out.extend(f"e {u} {v}" for u, v in graph.edges())
    return "\n".join(out) + "\n"


def write_graph(graph: Graph, handle: TextIO, comments: Iterable[str] = ()):
    handle.write(format_graph(graph, comments))


def format_matching(edges: Iterable[Edge], label: str = 'mim') -> str:
    """Solution block: `s <label> <K>` followed by one `e u v` per edge"""
    ordered = sorted_edges(edges)
    lines = [f"s {label} {len(ordered)}"] + [f"e {u} {v}" for u, v in ordered]
    return "\n".join(lines) + "\n"


def parse_sides(text: Union[str, Iterable[str]]) -> dict:
    """Side file: `c` comments and `s <v> <side>` lines with side 1 or 2"""
    lines = text.splitlines() if isinstance(text, str) else text
    side = {}
    for line_no, raw in enumerate(lines, 1):
        tokens = raw.split()
        if not tokens or tokens[0] == 'c':
            continue
        if tokens[0] != 's' or len(tokens) != 3:
            raise GraphFormatError(line_no, "side line must read 's <v> <side>'")
        v, which = _parse_int(tokens[1], line_no), _parse_int(tokens[2], line_no)
        if which not in (1, 2):
            raise GraphFormatError(line_no, f"side must be 1 or 2, got {which}")
        if v in side:
            raise GraphFormatError(line_no, f"node {v} assigned twice")
        side[v] = which
    return side


def format_sides(side: dict) -> str:
    return "".join(f"s {v} {side[v]}\n" for v in sorted(side))
