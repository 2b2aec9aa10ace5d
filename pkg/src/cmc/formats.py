"""On-disk formats: charpoly sidecar lines, the class report and DOT files."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, TextIO

from .cospectral import CoalescenceSpec
from .graph import Graph, Graph6Error, graph6_decode, graph6_encode
from .poly import IntPoly

__all__ = [
    "SidecarLine",
    "FormatError",
    "format_sidecar_line",
    "parse_sidecar_line",
    "read_sidecar",
    "sidecar_sort_key",
    "class_record",
    "write_dot",
    "read_dot",
]


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class SidecarLine:
    graph6: str
    coeffs: tuple[int, ...]  # high degree first
    lineno: int = 0

    @property
    def graph(self) -> Graph:
        return graph6_decode(self.graph6)

    @property
    def poly(self) -> IntPoly:
        return IntPoly.from_high(self.coeffs)


def format_sidecar_line(graph6: str, p: IntPoly) -> str:
    return " ".join([graph6] + [str(c) for c in p.high_to_low()])


def parse_sidecar_line(text: str, lineno: int = 0) -> SidecarLine:
    fields = text.split()
    if len(fields) < 2:
        raise FormatError("expected a graph6 string followed by coefficients", lineno)
    try:
        g = graph6_decode(fields[0])
    except Graph6Error as exc:
        raise FormatError(f"bad graph6 string: {exc}", lineno) from None
    try:
        coeffs = tuple(int(c) for c in fields[1:])
    except ValueError:
        raise FormatError("non-integer coefficient", lineno) from None
    if len(coeffs) != g.n + 1 or coeffs[0] != 1:
        raise FormatError(f"expected a monic polynomial with {g.n + 1} coefficients", lineno)
    return SidecarLine(fields[0], coeffs, lineno)


def read_sidecar(stream: TextIO, errors: list[str] | None = None) -> Iterator[SidecarLine]:
    """Parse lines, skipping blanks; malformed lines raise unless ``errors`` collects them."""
    for lineno, raw in enumerate(stream, 1):
        if not raw.strip():
            continue
        try:
            yield parse_sidecar_line(raw, lineno)
        except FormatError as exc:
            if errors is None:
                raise
            errors.append(str(exc))


def sidecar_sort_key(line: SidecarLine):
    return (len(line.coeffs), line.coeffs)


# ---------------------------------------------------------------- report

def class_record(index: int, cls) -> str:
    """One JSON line describing a match class; field order is fixed."""
    rec = {
        "class": index,
        "size": cls.size,
        "signature": list(cls.signature),
        "removal_cospectral": cls.removal_cospectral_flag,
        "members": [_spec_record(m) for m in cls.members],
        "equivalents": [[list(s.vertices) for s in e] for e in cls.equivalents],
        "vector": [p.high_to_low() for p in cls.vector],
    }
    return json.dumps(rec, separators=(",", ":"))


def _spec_record(spec: CoalescenceSpec) -> dict:
    return {"graph6": graph6_encode(spec.graph), "vertices": list(spec.vertices)}


# ---------------------------------------------------------------- DOT

def write_dot(stream: TextIO, specs: Iterable[CoalescenceSpec], name: str = "cmc") -> None:
    """Each spec becomes one undirected graph; selected vertices carry ``mult``.

    A point-shaped "droplet" node hangs off a selected vertex for each
    attached copy; droplets are drawn dashed and marked ``droplet=true``.
    """
    for i, spec in enumerate(specs, 1):
        mult = spec.multiplicities()
        sig = ",".join(map(str, spec.signature))
        stream.write(f'graph {name}_{i} {{\n')
        stream.write(f'  graph [graph6="{graph6_encode(spec.graph)}", signature="{sig}"];\n')
        for v in range(spec.graph.n):
            if v in mult:
                stream.write(f'  v{v} [label="{v}", mult={mult[v]}, style=filled, fillcolor=lightgray];\n')
            else:
                stream.write(f'  v{v} [label="{v}"];\n')
        for u, v in spec.graph.edges():
            stream.write(f"  v{u} -- v{v};\n")
        for v in spec.vertices:
            for j in range(mult[v]):
                stream.write(f'  d{v}_{j} [shape=point, droplet=true];\n')
                stream.write(f"  v{v} -- d{v}_{j} [style=dashed];\n")
        stream.write("}\n")


_GRAPH_RE = re.compile(r"graph\s+\w+\s*\{(.*?)\n\}", re.S)
_NODE_RE = re.compile(r"^\s*(v\d+|d\d+_\d+)\s*\[(.*)\];\s*$")
_EDGE_RE = re.compile(r"^\s*v(\d+)\s*--\s*v(\d+)\s*;\s*$")
_ATTR_RE = re.compile(r'(\w+)=("[^"]*"|[^,\s]+)')


def read_dot(text: str) -> list[CoalescenceSpec]:
    """Inverse of :func:`write_dot` for files it produced."""
    specs = []
    for body in _GRAPH_RE.findall(text):
        n = 0
        mult: dict[int, int] = {}
        edges = []
        for line in body.splitlines():
            node = _NODE_RE.match(line)
            if node and node.group(1).startswith("v"):
                v = int(node.group(1)[1:])
                n = max(n, v + 1)
                attrs = dict(_ATTR_RE.findall(node.group(2)))
                if "mult" in attrs:
                    mult[v] = int(attrs["mult"])
                continue
            edge = _EDGE_RE.match(line)
            if edge:
                edges.append((int(edge.group(1)), int(edge.group(2))))
        g = Graph.from_edges(n, edges)
        order = sorted(mult, key=lambda v: (-mult[v], v))
        specs.append(CoalescenceSpec(g, tuple(order), tuple(mult[v] for v in order)))
    return specs
