"""Parsing of offshore-leak CSV dumps and projection onto the country network.

The record file and the relationship file follow the ICIJ column conventions:
records carry ``node_id`` and a ``country_codes`` column of semicolon-separated
ISO-3166 alpha-3 codes; relationships carry a source id, a target id and a
free-text label. Header names for relationships vary between dump releases,
so a small set of aliases is accepted.

Projection modes
----------------
relationship-bridge
    Every relationship bridges all (source country, target country) pairs
    with one unit of weight, directed along the relationship. A single
    shareholder living in X who holds a company tied to Y and Z yields the
    directed bridges X->Y and X->Z.
record-clique
    Every record associated with two or more countries contributes one unit
    to each unordered pair, stored with the lexicographically smaller code as
    source.
both
    Union of the two accumulations.
"""

from __future__ import annotations

import csv
import enum
import re
from dataclasses import dataclass, fields
from itertools import combinations
from typing import IO, Iterable, Optional

from .errors import CsvSyntax, MalformedHeader
from .network import CountryNetwork

ALPHA3 = re.compile(r"^[A-Z]{3}$")

RECORD_KINDS = ("Entity", "Officer", "Intermediary", "Address")

_SOURCE_ALIASES = ("src_id", "node_id_start", "start", "source", "node_1", "from")
_TARGET_ALIASES = ("dst_id", "node_id_end", "end", "target", "node_2", "to")
_LABEL_ALIASES = ("rel_type", "link", "type", "relationship")


class ProjectionMode(enum.Enum):
    RELATIONSHIP_BRIDGE = "relationship-bridge"
    RECORD_CLIQUE = "record-clique"
    BOTH = "both"


@dataclass(frozen=True)
class LeakRecord:
    """One node row of a leak dump."""

    node_id: int
    kind: str
    name: str
    country_codes: tuple[str, ...]  # deduplicated and sorted
    jurisdiction: Optional[str] = None


@dataclass(frozen=True)
class LeakRelationship:
    """One edge row of a leak dump; duplicates are meaningful and preserved."""

    src_id: int
    dst_id: int
    rel_type: str = ""


@dataclass
class IngestReport:
    """Counters accumulated over one ingestion.

    The first five fields are the public report (see :func:`report_json_dict`);
    the remaining ones are programmatic diagnostics only.
    """

    records_read: int = 0
    relationships_read: int = 0
    records_missing_country: int = 0
    self_loops_dropped: int = 0
    dangling_relationships: int = 0
    records_skipped: int = 0
    relationships_skipped: int = 0
    invalid_country_tokens: int = 0

    def __add__(self, other: "IngestReport") -> "IngestReport":
        if not isinstance(other, IngestReport):
            return NotImplemented
        merged = IngestReport()
        for f in fields(IngestReport):
            setattr(merged, f.name, getattr(self, f.name) + getattr(other, f.name))
        return merged


def report_json_dict(report: IngestReport) -> dict:
    """The five public counters, in their documented order."""
    return {
        "records_read": report.records_read,
        "relationships_read": report.relationships_read,
        "records_missing_country": report.records_missing_country,
        "self_loops_dropped": report.self_loops_dropped,
        "dangling_relationships": report.dangling_relationships,
    }


def _normalize_code(token: str) -> Optional[str]:
    """Uppercased alpha-3 code, or None when the token is not one."""
    token = token.strip().upper()
    return token if ALPHA3.match(token) else None


def _normalize_kind(raw: Optional[str]) -> str:
    if raw:
        candidate = raw.strip().title()
        if candidate in RECORD_KINDS:
            return candidate
    return "Entity"


def parse_records(stream: IO[str]) -> tuple[list[LeakRecord], IngestReport]:
    """Parse a record CSV into LeakRecord values plus its report fragment.

    Rows with an unparseable ``node_id`` are skipped and counted. Country
    tokens that are not alpha-3 codes are dropped per token; a record left
    with no valid country still parses and increments
    ``records_missing_country``.
    """
    report = IngestReport()
    reader = csv.DictReader(stream, strict=True)
    try:
        header = reader.fieldnames
    except csv.Error as exc:
        raise CsvSyntax(str(exc)) from exc
    if header is None:
        raise MalformedHeader("record file is empty; a header row is required")
    missing = {"node_id", "country_codes"} - set(header)
    if missing:
        raise MalformedHeader(f"record file lacks column(s): {', '.join(sorted(missing))}")

    records: list[LeakRecord] = []
    try:
        for row in reader:
            try:
                node_id = int((row.get("node_id") or "").strip())
            except ValueError:
                report.records_skipped += 1
                continue
            raw_codes = (row.get("country_codes") or "").split(";")
            codes = set()
            for token in raw_codes:
                if not token.strip():
                    continue
                code = _normalize_code(token)
                if code is None:
                    report.invalid_country_tokens += 1
                else:
                    codes.add(code)
            jurisdiction = None
            raw_jur = (row.get("jurisdiction") or "").strip()
            if raw_jur:
                jurisdiction = _normalize_code(raw_jur)
                if jurisdiction is None:
                    report.invalid_country_tokens += 1
            record = LeakRecord(
                node_id=node_id,
                kind=_normalize_kind(row.get("kind")),
                name=(row.get("name") or "").strip(),
                country_codes=tuple(sorted(codes)),
                jurisdiction=jurisdiction,
            )
            records.append(record)
            report.records_read += 1
            if not record.country_codes:
                report.records_missing_country += 1
    except csv.Error as exc:
        raise CsvSyntax(str(exc)) from exc
    return records, report


def _resolve_column(header: Iterable[str], aliases: tuple[str, ...]) -> Optional[str]:
    lowered = {name.lower(): name for name in header}
    for alias in aliases:
        if alias in lowered:
            return lowered[alias]
    return None


def parse_relationships(stream: IO[str]) -> tuple[list[LeakRelationship], IngestReport]:
    """Parse a relationship CSV; duplicate rows bridge independently."""
    report = IngestReport()
    reader = csv.DictReader(stream, strict=True)
    try:
        header = reader.fieldnames
    except csv.Error as exc:
        raise CsvSyntax(str(exc)) from exc
    if header is None:
        raise MalformedHeader("relationship file is empty; a header row is required")
    src_col = _resolve_column(header, _SOURCE_ALIASES)
    dst_col = _resolve_column(header, _TARGET_ALIASES)
    if src_col is None or dst_col is None:
        raise MalformedHeader(
            "relationship file needs a source id and a target id column "
            f"(accepted names: {', '.join(_SOURCE_ALIASES)} / {', '.join(_TARGET_ALIASES)})"
        )
    label_col = _resolve_column(header, _LABEL_ALIASES)

    relationships: list[LeakRelationship] = []
    try:
        for row in reader:
            try:
                src_id = int((row.get(src_col) or "").strip())
                dst_id = int((row.get(dst_col) or "").strip())
            except ValueError:
                report.relationships_skipped += 1
                continue
            label = (row.get(label_col) or "").strip() if label_col else ""
            relationships.append(LeakRelationship(src_id, dst_id, label))
            report.relationships_read += 1
    except csv.Error as exc:
        raise CsvSyntax(str(exc)) from exc
    return relationships, report


def _record_countries(record: LeakRecord, merge_jurisdiction: bool) -> tuple[str, ...]:
    if merge_jurisdiction and record.jurisdiction:
        return tuple(sorted(set(record.country_codes) | {record.jurisdiction}))
    return record.country_codes


def build_country_network(
    records: Iterable[LeakRecord],
    relationships: Iterable[LeakRelationship],
    mode: ProjectionMode = ProjectionMode.RELATIONSHIP_BRIDGE,
    *,
    merge_jurisdiction: bool = False,
    report: Optional[IngestReport] = None,
) -> tuple[CountryNetwork, IngestReport]:
    """Project parsed records and relationships onto a frozen CountryNetwork.

    Pass the merged parse-stage report to keep one set of counters for the
    whole ingestion; a fresh report is used otherwise. Relationships whose
    endpoints do not resolve against the record table count as dangling;
    country pairs that collapse to a single country count as dropped
    self-loops.
    """
    if report is None:
        report = IngestReport()
    by_id: dict[int, LeakRecord] = {}
    ordered_records = list(records)
    for record in ordered_records:
        by_id.setdefault(record.node_id, record)

    net = CountryNetwork()
    if mode in (ProjectionMode.RELATIONSHIP_BRIDGE, ProjectionMode.BOTH):
        for rel in relationships:
            src = by_id.get(rel.src_id)
            dst = by_id.get(rel.dst_id)
            if src is None or dst is None:
                report.dangling_relationships += 1
                continue
            for cs in _record_countries(src, merge_jurisdiction):
                for cd in _record_countries(dst, merge_jurisdiction):
                    if cs == cd:
                        report.self_loops_dropped += 1
                    else:
                        net.accumulate_edge(cs, cd, 1)
    if mode in (ProjectionMode.RECORD_CLIQUE, ProjectionMode.BOTH):
        for record in ordered_records:
            countries = _record_countries(record, merge_jurisdiction)
            if len(countries) < 2:
                continue
            for a, b in combinations(sorted(countries), 2):
                net.accumulate_edge(a, b, 1)
    return net.freeze(), report
