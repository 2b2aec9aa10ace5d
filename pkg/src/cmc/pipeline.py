"""File-level pipeline: list charpolys, sort them, search cospectral groups."""
from __future__ import annotations

import itertools
import logging
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .charpoly import charpoly
from .formats import (
    FormatError,
    SidecarLine,
    class_record,
    format_sidecar_line,
    parse_sidecar_line,
    read_sidecar,
    sidecar_sort_key,
    write_dot,
)
from .graph import Graph6Error, graph6_decode
from .search import MatchClass, SearchReport, find_matches

__all__ = ["list_charpolys", "sort_sidecar", "search_file", "summary_text"]

log = logging.getLogger(__name__)


def list_charpolys(src: Path, dst: Path | None = None) -> Path:
    """Write ``<graph6> <coefficients high to low>`` for every input graph, in order."""
    src = Path(src)
    dst = Path(dst) if dst else src.with_name(src.name + ".charpoly.g6")
    lines = []
    with open(src) as fh:
        for lineno, raw in enumerate(fh, 1):
            text = raw.strip()
            if not text:
                continue
            try:
                g = graph6_decode(text)
            except Graph6Error as exc:
                raise FormatError(f"bad graph6 string: {exc}", lineno) from None
            lines.append(format_sidecar_line(text, charpoly(g)))
    with open(dst, "w") as out:
        out.writelines(line + "\n" for line in lines)
    return dst


def sort_sidecar(src: Path, dst: Path | None = None) -> Path:
    """Stable sort by coefficient vector so cospectral graphs become adjacent."""
    src = Path(src)
    dst = Path(dst) if dst else src.with_name(src.name.replace(".g6.charpoly.g6", ".charpoly.sorted.g6")
                                               if src.name.endswith(".g6.charpoly.g6")
                                               else src.name + ".sorted")
    with open(src) as fh:
        raw = [line.rstrip("\n") for line in fh if line.strip()]
    parsed = [parse_sidecar_line(text, i) for i, text in enumerate(raw, 1)]
    order = sorted(range(len(parsed)), key=lambda i: sidecar_sort_key(parsed[i]))
    with open(dst, "w") as out:
        out.writelines(raw[i] + "\n" for i in order)
    return dst


def _groups(lines: Iterable[SidecarLine]):
    for _, run in itertools.groupby(lines, key=lambda s: s.coeffs):
        yield list(run)


def search_file(path: Path, mse: int, out_dir: Path | None = None, max_k: int | None = None,
                jobs: int = 1, dedup_automorphisms: bool = False,
                on_class: Callable[[int, MatchClass], None] | None = None) -> SearchReport:
    """Search every cospectral group of a sorted sidecar file.

    Each class is written as soon as its group finishes: a DOT file per class
    and one line of ``report.jsonl``; ``summary.txt`` is written at the end.
    Malformed lines are reported with their line numbers and skipped.
    """
    report = SearchReport()
    out_dir = Path(out_dir) if out_dir else None
    records = None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
        records = open(out_dir / "report.jsonl", "w")
    try:
        with open(path) as fh:
            for group in _groups(read_sidecar(fh, report.errors)):
                report.groups += 1
                graphs = [line.graph for line in group]
                k_range = (1, max_k) if max_k else None
                for cls in find_matches(graphs, mse, k_range, dedup_automorphisms, jobs):
                    report.add(cls)
                    index = len(report.classes)
                    if out_dir:
                        with open(out_dir / f"cmc_{index:06d}_{cls.size}.dot", "w") as dot:
                            write_dot(dot, cls.members, name=f"cmc{index}")
                        records.write(class_record(index, cls) + "\n")
                        records.flush()
                    if on_class:
                        on_class(index, cls)
        for err in report.errors:
            log.warning("%s: %s", path, err)
    finally:
        if records:
            records.close()
    if out_dir:
        (out_dir / "summary.txt").write_text(summary_text(report))
    return report


def summary_text(report: SearchReport) -> str:
    names = {2: "pairs", 3: "triplets", 4: "quadruplets"}
    lines = [f"groups: {report.groups}"]
    for size in sorted(set(report.counts) | {2, 3, 4}):
        lines.append(f"{names.get(size, f'{size}-tuples')}: {report.counts.get(size, 0)}")
    if report.errors:
        lines.append(f"malformed lines: {len(report.errors)}")
    return "\n".join(lines) + "\n"
