"""Command-line surface: ingest, rank, richclub, core, perturb.

Every command reads either a raw dump pair (``--records`` + ``--relationships``)
or a prebuilt edge list (``--network``) and writes its outputs into
``--out-dir``. Delimited outputs are always written; the matching PNG figure
is rendered alongside unless ``--no-plots`` is given. Reruns with identical
flags overwrite outputs with byte-identical content.

Exit codes: 0 success, 2 input error, 3 analysis precondition failure,
4 unknown entity. Failures emit a single-line JSON object with an ``error``
key on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import export, plots
from .core import extract_core, rank_by_strength, remove_and_rerank
from .errors import (
    ClubTooSmall,
    CsvSyntax,
    EmptyNetwork,
    InsufficientEdges,
    MalformedHeader,
    SelfLoopRejected,
    TooFewEdges,
    UnknownNode,
)
from .ingest import (
    IngestReport,
    ProjectionMode,
    build_country_network,
    parse_records,
    parse_relationships,
)
from .network import CountryNetwork
from .nullmodel import DEFAULT_SEED, EnsembleConfig
from .richclub import rho_curve

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_UNKNOWN_ENTITY = 4

_INPUT_ERRORS = (
    OSError,
    MalformedHeader,
    CsvSyntax,
    SelfLoopRejected,
    ValueError,
)
_PRECONDITION_ERRORS = (TooFewEdges, EmptyNetwork, ClubTooSmall, InsufficientEdges)


class _UsageError(Exception):
    """Bad flag combination; reported as an input error."""


_BOOLEAN_KEYS = {"merge-jurisdiction", "no-plots", "weighted"}
_VALUE_KEYS = {
    "records",
    "relationships",
    "network",
    "mode",
    "out-dir",
    "samples",
    "swaps-per-edge",
    "seed",
    "workers",
    "k",
    "top",
}


def _config_tokens(path: Path) -> list[str]:
    """Flag tokens from a config file of ``key = value`` lines.

    ``#`` starts a comment; keys may use ``_`` or ``-``. Booleans accept
    true/false/yes/no/on/off/1/0.
    """
    tokens: list[str] = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            key, sep, value = line.partition(":")
        if not sep:
            raise _UsageError(f"{path}:{lineno}: expected 'key = value'")
        key = key.strip().lower().replace("_", "-")
        value = value.strip()
        if key in _BOOLEAN_KEYS:
            if value.lower() in ("1", "true", "yes", "on"):
                tokens.append(f"--{key}")
            elif value.lower() not in ("0", "false", "no", "off"):
                raise _UsageError(f"{path}:{lineno}: {key} expects a boolean, got {value!r}")
        elif key in _VALUE_KEYS:
            tokens.extend((f"--{key}", value))
        else:
            raise _UsageError(f"{path}:{lineno}: unknown option {key!r}")
    return tokens


def _expand_config(argv: list[str]) -> list[str]:
    """Splice config-file tokens in ahead of explicit flags, so flags win."""
    path = None
    for i, token in enumerate(argv):
        if token == "--config" and i + 1 < len(argv):
            path = Path(argv[i + 1])
            break
        if token.startswith("--config="):
            path = Path(token.split("=", 1)[1])
            break
    if path is None:
        return argv
    # right after the subcommand: later (explicit) occurrences override
    return argv[:1] + _config_tokens(path) + argv[1:]


def _fail(exc: BaseException, code: int) -> int:
    print(json.dumps({"error": str(exc)}), file=sys.stderr)
    return code


def _out_dir(args) -> Path:
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _parse_dump_pair(args) -> tuple[CountryNetwork, IngestReport]:
    with open(args.records, "r", encoding="utf-8", newline="") as fh:
        records, records_report = parse_records(fh)
    with open(args.relationships, "r", encoding="utf-8", newline="") as fh:
        relationships, rel_report = parse_relationships(fh)
    return build_country_network(
        records,
        relationships,
        mode=ProjectionMode(args.mode),
        merge_jurisdiction=args.merge_jurisdiction,
        report=records_report + rel_report,
    )


def _load_network(args) -> CountryNetwork:
    """Resolve the exactly-one-input contract shared by all commands."""
    has_pair = bool(args.records and args.relationships)
    if args.records or args.relationships:
        if not has_pair:
            raise _UsageError("--records and --relationships must be given together")
    if args.network and has_pair:
        raise _UsageError("give either --network or the --records/--relationships pair, not both")
    if args.network:
        return export.read_network_csv(Path(args.network))
    if has_pair:
        net, _ = _parse_dump_pair(args)
        return net
    raise _UsageError("an input is required: --network or --records plus --relationships")


def cmd_ingest(args) -> int:
    if args.network:
        raise _UsageError("ingest reads raw dumps; --network is not accepted")
    if not (args.records and args.relationships):
        raise _UsageError("ingest needs both --records and --relationships")
    net, report = _parse_dump_pair(args)
    out = _out_dir(args)
    export.write_network_csv(net, out / "network.csv")
    export.write_ingest_report(report, out / "ingest_report.json")
    print(
        f"ingested {report.records_read} records / {report.relationships_read} relationships "
        f"-> {net.node_count()} countries, {net.edge_count()} directed edges"
    )
    return EXIT_OK


def cmd_rank(args) -> int:
    net = _load_network(args)
    ranking = rank_by_strength(net)
    out = _out_dir(args)
    export.write_ranking_csv(ranking, out / "ranking.csv")
    if not args.no_plots:
        plots.save_ranking_plot(ranking, out / "ranking.png", top=args.top)
    for row in ranking[: args.top]:
        print(f"{row.rank:>4}  {row.country}  {row.strength}")
    return EXIT_OK


def cmd_richclub(args) -> int:
    net = _load_network(args)
    cfg = EnsembleConfig(
        n_samples=args.samples,
        swaps_per_edge=args.swaps_per_edge,
        master_seed=args.seed,
    )
    curve = rho_curve(
        net.undirected(), cfg, weighted=args.weighted, workers=args.workers
    )
    out = _out_dir(args)
    export.write_richclub_json(curve, out / "richclub.json")
    export.write_richclub_csv(curve, out / "richclub.csv")
    if not args.no_plots:
        plots.save_richclub_plot(curve, out / "richclub.png")
    defined = [p for p in curve.points if p.rho is not None]
    if defined:
        peak = max(defined, key=lambda p: p.rho)
        print(
            f"{len(curve.points)} thresholds; peak normalized coefficient "
            f"{peak.rho:.3f} at k={peak.k}"
        )
    else:
        print(f"{len(curve.points)} thresholds; normalized coefficient undefined")
    return EXIT_OK


def cmd_core(args) -> int:
    net = _load_network(args)
    report = extract_core(net, args.k)
    warning = None
    if report.empty:
        warning = f"no country has degree above {args.k}; core is empty"
    out = _out_dir(args)
    export.write_core_json(report, out / "core.json", warning=warning)
    export.write_chord_csv(report, out / "chord.csv")
    if not args.no_plots:
        plots.save_chord_plot(report, out / "chord.png")
    if warning:
        print(warning)
    else:
        print(
            f"core at k={args.k}: {len(report.members)} countries, "
            f"{len(report.internal_flows)} internal flows, coverage {report.coverage:.3f}"
        )
    return EXIT_OK


def cmd_perturb(args) -> int:
    net = _load_network(args)
    before = rank_by_strength(net)
    core_after, after = remove_and_rerank(net, args.country, args.k)
    payload = export.perturb_dict(args.country, args.k, before, after, core_after)
    out = _out_dir(args)
    export.write_perturb_json(payload, out / "perturb.json")
    print(
        f"removed {args.country}: {len(payload['rank_changes'])} rank changes, "
        f"new rank 1 is {after[0].country if after else 'nobody'}"
    )
    return EXIT_OK


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--records", help="records CSV of the leak dump")
    parser.add_argument("--relationships", help="relationships CSV of the leak dump")
    parser.add_argument("--network", help="prebuilt edge-list CSV (src,dst,weight)")
    parser.add_argument(
        "--mode",
        choices=[m.value for m in ProjectionMode],
        default=ProjectionMode.RELATIONSHIP_BRIDGE.value,
        help="projection rule used when reading raw dumps",
    )
    parser.add_argument(
        "--merge-jurisdiction",
        action="store_true",
        help="also count a record's jurisdiction as one of its countries",
    )
    parser.add_argument("--out-dir", default=".", help="directory for output files")
    parser.add_argument(
        "--no-plots", action="store_true", help="skip rendering PNG figures"
    )
    parser.add_argument(
        "--config",
        help="key = value file supplying defaults for any flag; explicit flags win",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leaknet",
        description="Country-network reconstruction and rich-club analysis for leak dumps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ingest = sub.add_parser("ingest", help="project raw dump CSVs to an edge list")
    _add_input_flags(p_ingest)
    p_ingest.set_defaults(func=cmd_ingest)

    p_rank = sub.add_parser("rank", help="rank countries by total strength")
    _add_input_flags(p_rank)
    p_rank.add_argument("--top", type=int, default=30, help="rows to print (file is never truncated)")
    p_rank.set_defaults(func=cmd_rank)

    p_rc = sub.add_parser("richclub", help="normalized rich-club curve")
    _add_input_flags(p_rc)
    p_rc.add_argument("--samples", type=int, default=1000, help="ensemble size")
    p_rc.add_argument("--swaps-per-edge", type=int, default=10, help="attempted swaps per edge")
    p_rc.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed for the ensemble")
    p_rc.add_argument("--workers", type=int, default=1, help="processes for ensemble generation")
    p_rc.add_argument(
        "--weighted",
        action="store_true",
        help="use the strength-rank weighted estimator instead of the topological one",
    )
    p_rc.set_defaults(func=cmd_richclub)

    p_core = sub.add_parser("core", help="extract the high-degree core")
    _add_input_flags(p_core)
    p_core.add_argument("--k", type=int, default=80, help="degree threshold")
    p_core.set_defaults(func=cmd_core)

    p_pert = sub.add_parser("perturb", help="remove one country and re-rank")
    _add_input_flags(p_pert)
    p_pert.add_argument("country", help="country code to remove")
    p_pert.add_argument("--k", type=int, default=80, help="degree threshold for the post-removal core")
    p_pert.set_defaults(func=cmd_perturb)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_expand_config(argv))
        return args.func(args)
    except _UsageError as exc:
        return _fail(exc, EXIT_INPUT)
    except UnknownNode as exc:
        return _fail(exc, EXIT_UNKNOWN_ENTITY)
    except _PRECONDITION_ERRORS as exc:
        return _fail(exc, EXIT_PRECONDITION)
    except _INPUT_ERRORS as exc:
        return _fail(exc, EXIT_INPUT)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
