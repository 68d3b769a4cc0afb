"""Readers and writers for every file the CLI produces or consumes.

All CSV outputs carry a header row and use ``\n`` line endings so reruns are
byte-identical across platforms. JSON is written with two-space indentation
and a trailing newline, with key order fixed by construction.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Optional

from .core import CoreReport, RankedCountry, StrengthRanking
from .errors import MalformedHeader
from .ingest import IngestReport, report_json_dict
from .network import CountryNetwork
from .richclub import RichClubCurve, RichClubPoint

RICHCLUB_FIELDS = (
    "k",
    "n_above",
    "phi",
    "phi_null_mean",
    "phi_null_sd",
    "phi_null_p05",
    "phi_null_p95",
    "rho",
    "null_excluded",
)

RANKING_FIELDS = ("rank", "country", "strength", "in_strength", "out_strength")


def _write_json(payload, path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def _csv_writer(fh):
    return csv.writer(fh, lineterminator="\n")


# -- weighted edge list -------------------------------------------------------


def write_network_csv(net: CountryNetwork, path: Path) -> None:
    """Edge list ``src,dst,weight`` sorted by (src, dst)."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = _csv_writer(fh)
        writer.writerow(("src", "dst", "weight"))
        writer.writerows(net.sorted_edges())


def read_network_csv(path: Path) -> CountryNetwork:
    """Load a frozen CountryNetwork from an edge-list CSV."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh, strict=True)
        header = reader.fieldnames
        if header is None or {"src", "dst", "weight"} - set(header):
            raise MalformedHeader("edge list must have columns src,dst,weight")
        net = CountryNetwork()
        for row in reader:
            weight = int(row["weight"])
            net.accumulate_edge(row["src"], row["dst"], weight)
    return net.freeze()


def write_ingest_report(report: IngestReport, path: Path) -> None:
    _write_json(report_json_dict(report), path)


# -- rich-club curve -----------------------------------------------------------


def point_dict(point: RichClubPoint) -> dict:
    return {
        "k": point.k,
        "n_above": point.n_above,
        "phi": point.phi,
        "phi_null_mean": point.phi_null_mean,
        "phi_null_sd": point.phi_null_sd,
        "phi_null_p05": point.phi_null_p05,
        "phi_null_p95": point.phi_null_p95,
        "rho": point.rho,
        "null_excluded": point.null_excluded,
    }


def write_richclub_json(curve: RichClubCurve, path: Path) -> None:
    """The curve as a JSON array, one object per threshold."""
    _write_json([point_dict(p) for p in curve.points], path)


def write_richclub_csv(curve: RichClubCurve, path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = _csv_writer(fh)
        writer.writerow(RICHCLUB_FIELDS)
        for point in curve.points:
            row = point_dict(point)
            writer.writerow("" if row[f] is None else row[f] for f in RICHCLUB_FIELDS)


# -- ranking -------------------------------------------------------------------


def ranking_row_dict(row: RankedCountry) -> dict:
    return {
        "rank": row.rank,
        "country": row.country,
        "strength": row.strength,
        "in_strength": row.in_strength,
        "out_strength": row.out_strength,
    }


def write_ranking_csv(ranking: StrengthRanking, path: Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = _csv_writer(fh)
        writer.writerow(RANKING_FIELDS)
        for row in ranking:
            writer.writerow(
                (row.rank, row.country, row.strength, row.in_strength, row.out_strength)
            )


# -- core report ----------------------------------------------------------------


def core_dict(report: CoreReport, warning: Optional[str] = None) -> dict:
    payload = {
        "k_used": report.k_used,
        "members": [ranking_row_dict(row) for row in report.members],
        "internal_flows": [
            {"src": src, "dst": dst, "weight": weight}
            for src, dst, weight in report.internal_flows
        ],
        "coverage": report.coverage,
    }
    if warning is not None:
        payload["warning"] = warning
    return payload


def write_core_json(report: CoreReport, path: Path, warning: Optional[str] = None) -> None:
    _write_json(core_dict(report, warning), path)


def write_chord_csv(report: CoreReport, path: Path) -> None:
    """One ribbon per row; downstream ribbon width is proportional to weight."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = _csv_writer(fh)
        writer.writerow(("src", "dst", "weight"))
        writer.writerows(report.internal_flows)


# -- perturbation ---------------------------------------------------------------


def perturb_dict(
    removed: str,
    k: int,
    before: StrengthRanking,
    after: StrengthRanking,
    core_after: CoreReport,
) -> dict:
    after_ranks = {row.country: row.rank for row in after}
    changes = []
    for row in before:
        new_rank = after_ranks.get(row.country)
        if new_rank != row.rank:
            changes.append(
                {"country": row.country, "rank_before": row.rank, "rank_after": new_rank}
            )
    return {
        "removed": removed,
        "k": k,
        "ranking_before": [ranking_row_dict(row) for row in before],
        "ranking_after": [ranking_row_dict(row) for row in after],
        "rank_changes": changes,
        "core_after": core_dict(core_after),
    }


def write_perturb_json(payload: dict, path: Path) -> None:
    _write_json(payload, path)
