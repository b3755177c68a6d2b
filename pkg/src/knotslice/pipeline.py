"""Batch sliceness scanning: per-knot analysis, caching, and report output.

A corpus file has one knot per line, ``name<TAB>kind:payload`` where kind is
``pd``, ``dt`` or ``braid``.  Blank lines and ``#`` comments are skipped.
Each knot gets a full invariant workup (Khovanov ranks, s, HOMFLY span,
Alexander triviality, quasipositivity obstructions) and a coarse sliceness
classification; failures are recorded per row instead of aborting the scan.
"""

from __future__ import annotations

import csv
import hashlib
import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, TextIO

from .braid import BraidError, closure, parse_braid
from .diagram import DiagramError, PlanarDiagram, canonical_pd_string, parse_dt, parse_pd
from .khovanov import (
    DEFAULT_MAX_CROSSINGS,
    ResourceLimitError,
    homological_width,
    homology_ranks,
)
from .poly import Laurent1
from .polyinv import alexander, homfly, qp_obstruction, v_span
from .rasmussen import ExtractionError, SResult, extract_s
from .skein import SkeinBudgetError

CSV_COLUMNS = ("name", "s", "hw", "delta1", "e", "E", "classification", "qp", "mirror_qp")

CLASS_TOPOLOGICAL = "topologically-slice-not-smoothly"
CLASS_POSSIBLE = "smoothly-slice-possible"
CLASS_NONE = "no-topological-conclusion"

_CACHE_VERSION = "1"


@dataclass
class InvariantReport:
    """Everything the scanner knows about one knot."""

    name: str
    s: Optional[SResult] = None
    hw: Optional[int] = None
    delta1: Optional[bool] = None
    e: Optional[int] = None
    E: Optional[int] = None
    classification: str = CLASS_NONE
    qp: Optional[bool] = None
    mirror_qp: Optional[bool] = None
    error: Optional[str] = None

    def row(self) -> dict[str, str]:
        """Stringify for delimited output; blank cells for missing values."""

        def cell(v) -> str:
            if v is None:
                return ""
            if isinstance(v, bool):
                return "yes" if v else "no"
            return str(v)

        if self.error is not None:
            return {"name": self.name, "s": "", "hw": "", "delta1": "",
                    "e": "", "E": "", "classification": f"error: {self.error}",
                    "qp": "", "mirror_qp": ""}
        return {
            "name": self.name,
            "s": cell(self.s),
            "hw": cell(self.hw),
            "delta1": cell(self.delta1),
            "e": cell(self.e),
            "E": cell(self.E),
            "classification": self.classification,
            "qp": cell(self.qp),
            "mirror_qp": cell(self.mirror_qp),
        }


def parse_knot(kind: str, payload: str) -> PlanarDiagram:
    """Turn a ``kind:payload`` description into a diagram."""
    if kind == "pd":
        return parse_pd(payload)
    if kind == "dt":
        return parse_dt(payload)
    if kind == "braid":
        return closure(parse_braid(payload))
    raise DiagramError(f"unknown knot kind {kind!r} (expected pd, dt or braid)")


def _classify(s: SResult, delta1: bool) -> str:
    if not delta1:
        return CLASS_NONE
    if s.is_determined and s.determined != 0:
        return CLASS_TOPOLOGICAL
    return CLASS_POSSIBLE


def analyze(name: str, diagram: PlanarDiagram, max_crossings: Optional[int] = None) -> InvariantReport:
    """Compute the full invariant report for one knot diagram."""
    report = InvariantReport(name=name)
    if max_crossings is None:
        max_crossings = DEFAULT_MAX_CROSSINGS
    try:
        ranks = homology_ranks(diagram, max_crossings=max_crossings)
        report.s = extract_s(ranks)
        report.hw = homological_width(ranks)
        p = homfly(diagram)
        span = v_span(p)
        report.e, report.E = span.e, span.E
        report.delta1 = alexander(p) == Laurent1.one()
        flags = qp_obstruction(report.s, span)
        report.qp = flags.can_be_qp
        report.mirror_qp = flags.can_be_mirror_qp
        report.classification = _classify(report.s, report.delta1)
    except (DiagramError, BraidError, ExtractionError, ResourceLimitError,
            SkeinBudgetError) as exc:
        report.error = str(exc)
    return report


# --------------------------------------------------------------------------
# Corpus files
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str
    payload: str


def read_corpus(path: str) -> list[CorpusEntry]:
    """Parse a corpus file; raises DiagramError on malformed lines."""
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "\t" not in line:
                raise DiagramError(f"{path}:{lineno}: expected name<TAB>kind:payload")
            name, spec = line.split("\t", 1)
            kind, sep, payload = spec.partition(":")
            if not sep or not name.strip():
                raise DiagramError(f"{path}:{lineno}: expected name<TAB>kind:payload")
            entries.append(CorpusEntry(name.strip(), kind.strip(), payload.strip()))
    return entries


# --------------------------------------------------------------------------
# Result cache
# --------------------------------------------------------------------------


class ReportCache:
    """Content-addressed cache of finished reports, keyed by the diagram.

    Keys hash the canonical PD string (label-rotation invariant), so a knot
    entered with equivalent labellings hits the same slot.  Corrupt entries
    are treated as misses.
    """

    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, diagram: PlanarDiagram) -> str:
        digest = hashlib.sha256(
            f"v{_CACHE_VERSION}:{canonical_pd_string(diagram)}".encode()
        ).hexdigest()
        return os.path.join(self.directory, digest + ".json")

    def get(self, name: str, diagram: PlanarDiagram) -> Optional[InvariantReport]:
        try:
            with open(self._path(diagram), encoding="utf-8") as fh:
                data = json.load(fh)
            report = _report_from_json(data)
        except FileNotFoundError:
            return None
        except (OSError, ValueError, KeyError, TypeError):
            return None
        report.name = name  # same knot may appear under several names
        return report

    def put(self, diagram: PlanarDiagram, report: InvariantReport) -> None:
        if report.error is not None:
            return  # never cache failures; they may be resource-dependent
        payload = json.dumps(_report_to_json(report))
        path = self._path(diagram)
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(payload)
            os.replace(tmp, path)
        except OSError:
            try:
                os.unlink(tmp)
            except OSError:
                pass


def _report_to_json(r: InvariantReport) -> dict:
    s: Optional[list[int]] = None
    if r.s is not None:
        s = list(r.s.candidates())
    return {"name": r.name, "s": s, "hw": r.hw, "delta1": r.delta1,
            "e": r.e, "E": r.E, "classification": r.classification,
            "qp": r.qp, "mirror_qp": r.mirror_qp}


def _report_from_json(data: dict) -> InvariantReport:
    s = None
    if data["s"] is not None:
        cands = [int(x) for x in data["s"]]
        s = SResult.of(cands[0]) if len(cands) == 1 else SResult.among(cands)
    return InvariantReport(
        name=data["name"], s=s, hw=data["hw"], delta1=data["delta1"],
        e=data["e"], E=data["E"], classification=data["classification"],
        qp=data["qp"], mirror_qp=data["mirror_qp"],
    )


# --------------------------------------------------------------------------
# Scanning
# --------------------------------------------------------------------------


@dataclass
class ScanResult:
    reports: list[InvariantReport] = field(default_factory=list)

    def summary(self) -> dict[str, int]:
        ok = [r for r in self.reports if r.error is None]
        delta1 = [r for r in ok if r.delta1]
        return {
            "total": len(self.reports),
            "errors": len(self.reports) - len(ok),
            "alexander_trivial": len(delta1),
            "nonzero_s_among_trivial": sum(
                1 for r in delta1
                if r.s is not None and r.s.is_determined and r.s.determined != 0
            ),
            "ambiguous_s": sum(
                1 for r in ok if r.s is not None and not r.s.is_determined
            ),
        }


def _scan_worker(args: tuple[CorpusEntry, Optional[int]]) -> InvariantReport:
    entry, max_crossings = args
    try:
        diagram = parse_knot(entry.kind, entry.payload)
    except (DiagramError, BraidError) as exc:
        return InvariantReport(name=entry.name, error=str(exc))
    return analyze(entry.name, diagram, max_crossings=max_crossings)


def scan(entries: Sequence[CorpusEntry], jobs: int = 1,
         cache: Optional[ReportCache] = None,
         max_crossings: Optional[int] = None) -> ScanResult:
    """Analyze every corpus entry, preserving input order.

    A per-knot failure becomes an ``error`` report row; only corpus-level
    problems (unreadable file, bad syntax) raise.
    """
    reports: list[Optional[InvariantReport]] = [None] * len(entries)
    todo: list[tuple[int, CorpusEntry]] = []
    for idx, entry in enumerate(entries):
        if cache is not None:
            try:
                diagram = parse_knot(entry.kind, entry.payload)
            except (DiagramError, BraidError) as exc:
                reports[idx] = InvariantReport(name=entry.name, error=str(exc))
                continue
            hit = cache.get(entry.name, diagram)
            if hit is not None:
                reports[idx] = hit
                continue
        todo.append((idx, entry))

    work = [(entry, max_crossings) for _, entry in todo]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            fresh = list(pool.map(_scan_worker, work))
    else:
        fresh = [_scan_worker(w) for w in work]

    for (idx, entry), report in zip(todo, fresh):
        reports[idx] = report
        if cache is not None and report.error is None:
            cache.put(parse_knot(entry.kind, entry.payload), report)
    return ScanResult(reports=[r for r in reports if r is not None])


def write_csv(result: ScanResult, out: TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=list(CSV_COLUMNS))
    writer.writeheader()
    for report in result.reports:
        writer.writerow(report.row())


def write_json(result: ScanResult, out: TextIO) -> None:
    rows = [r.row() for r in result.reports]
    json.dump({"knots": rows, "summary": result.summary()}, out, indent=2)
    out.write("\n")
