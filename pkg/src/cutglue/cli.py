"""Command-line interface.

Exit codes: 0 all checks pass, 1 verification failure or negative result,
2 usage/input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .boundary import boundary_profile
from .connectivity import (
    NotConnectedError,
    SignatureMismatchError,
    build_move_graph,
    conjecture_scan,
    export_dot,
    find_path,
)
from .enumeration import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    check_budget,
    enumerate_pairings,
    enumeration_report,
)
from .layers import StuckReductionError, is_planar, layer_profile, reduce_layers
from .moves import IllegalMoveError, Move, classify_move, legal_moves, raw_swap
from .pairing_io import (
    emit_pairing,
    pairing_to_dict,
    parse_pairing_file,
    write_pairings_jsonl,
)
from .surface import PairingError, SurfaceSpec
from .verify import run_fixture_regression, run_verify


@dataclass(frozen=True)
class RunConfig:
    """Shared plumbing of one CLI invocation."""

    command: str
    surface: SurfaceSpec | None
    budget: int
    output: Path | None
    format: str
    seed: int

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        surface = getattr(args, "surface", None)
        if isinstance(surface, list):
            surface = surface[0] if surface else None
        fmt = _FORMATS.get(args.command, "json")
        if args.command == "enumerate" and getattr(args, "histogram", False):
            fmt = "csv"
        return cls(
            command=args.command,
            surface=surface,
            budget=getattr(args, "budget", DEFAULT_BUDGET),
            output=getattr(args, "out", None),
            format=fmt,
            seed=getattr(args, "seed", 0),
        )


_FORMATS = {
    "enumerate": "jsonl",
    "moves": "jsonl",
    "connectivity": "json",
    "conjecture-scan": "json",
}


def _parse_surface(text: str) -> SurfaceSpec:
    try:
        sizes = tuple(int(part) for part in text.split(","))
        return SurfaceSpec(sizes)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad surface {text!r}: {exc}") from exc


def _parse_move(text: str) -> Move:
    try:
        pairs = []
        for chunk in text.split(","):
            a, b = chunk.split("-")
            pairs.append((int(a), int(b)))
        pair_a, pair_b = pairs
        return Move(pair_a, pair_b)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(
            f"bad move {text!r}; expected like 1-2,5-4"
        ) from exc


def _out_stream(cfg: RunConfig):
    if cfg.output is not None:
        return open(cfg.output, "w")
    return sys.stdout


def _emit(cfg: RunConfig, text: str) -> None:
    stream = _out_stream(cfg)
    try:
        stream.write(text)
        if not text.endswith("\n"):
            stream.write("\n")
    finally:
        if stream is not sys.stdout:
            stream.close()


def _move_quadruple(move: Move) -> list[int]:
    return list(move.vertices)


def _cmd_enumerate(args, cfg: RunConfig) -> int:
    check_budget(cfg.surface, cfg.budget)
    if cfg.format == "csv":
        report = enumeration_report(cfg.surface, cfg.budget)
        lines = ["signature,count"]
        lines += [f"{s},{c}" for s, c in report.counts_by_signature.items()]
        _emit(cfg, "\n".join(lines))
        return 0
    stream = _out_stream(cfg)
    try:
        pairings = enumerate_pairings(cfg.surface)
        if args.signature_class is not None:
            wanted = args.signature_class
            pairings = (
                p for p in pairings if boundary_profile(p).signature == wanted
            )
        elif args.balanced_only:
            pairings = (p for p in pairings if boundary_profile(p).signature == 0)
        write_pairings_jsonl(stream, pairings)
    finally:
        if stream is not sys.stdout:
            stream.close()
    return 0


def _cmd_signature(args, cfg: RunConfig) -> int:
    p = parse_pairing_file(args.pairing)
    prof = boundary_profile(p)
    _emit(cfg, json.dumps(
        {"signature": prof.signature, "balanced": prof.signature == 0}
    ))
    return 0


def _cmd_boundaries(args, cfg: RunConfig) -> int:
    p = parse_pairing_file(args.pairing)
    prof = boundary_profile(p)
    _emit(cfg, json.dumps({
        "positive": [list(c) for c in prof.positive_cycles],
        "negative": [list(c) for c in prof.negative_cycles],
        "signature": prof.signature,
        "chi": prof.euler_characteristic,
        "genus": prof.genus,
    }))
    return 0


def _cmd_moves(args, cfg: RunConfig) -> int:
    p = parse_pairing_file(args.pairing)
    if args.apply is not None:
        move = args.apply
        verdict = classify_move(p, move)
        if not verdict.legal and not args.force:
            raise IllegalMoveError(move, verdict.distinct_boundaries)
        result = raw_swap(p, move)
        payload = pairing_to_dict(result)
        if not verdict.legal:
            payload["non_conforming"] = True  # forced through a forbidden move
        _emit(cfg, json.dumps(payload))
        return 0
    lines = []
    for move, verdict in legal_moves(p, include_forbidden=not args.legal_only):
        lines.append(json.dumps({
            "pairs": [list(move.pair_a), list(move.pair_b)],
            "distinct_boundaries": verdict.distinct_boundaries,
            "legal": verdict.legal,
            "kind": verdict.kind,
        }))
    _emit(cfg, "\n".join(lines) if lines else "")
    return 0


def _cmd_path(args, cfg: RunConfig) -> int:
    a = parse_pairing_file(args.start)
    b = parse_pairing_file(args.end)
    path = find_path(a, b)
    _emit(cfg, json.dumps([_move_quadruple(m) for m in path.steps]))
    return 0


def _cmd_connectivity(args, cfg: RunConfig) -> int:
    graph = build_move_graph(
        cfg.surface,
        args.signature_class,
        keep_edges=args.export_dot is not None,
        budget=cfg.budget,
    )
    if args.export_dot is not None:
        Path(args.export_dot).write_text(export_dot(graph))
    _emit(cfg, json.dumps({
        "surface": list(cfg.surface.component_sizes),
        "version": __version__,
        "signature_class": args.signature_class,
        "vertices": graph.vertex_count,
        "edges": graph.edge_count,
        "components": graph.component_count,
    }))
    return 0


def _cmd_layers(args, cfg: RunConfig) -> int:
    p = parse_pairing_file(args.pairing)
    prof = layer_profile(p)
    _emit(cfg, json.dumps({
        "x": list(prof.x),
        "c": prof.complexity,
        "planar": is_planar(p),
    }))
    return 0


def _cmd_reduce(args, cfg: RunConfig) -> int:
    p = parse_pairing_file(args.pairing)
    reduced, moves = reduce_layers(p)
    if args.emit_moves:
        _emit(cfg, json.dumps({
            "pairing": pairing_to_dict(reduced),
            "moves": [_move_quadruple(m) for m in moves],
        }))
    else:
        _emit(cfg, emit_pairing(reduced).decode("ascii"))
    return 0


def _cmd_verify(args, cfg: RunConfig) -> int:
    if args.all_fixtures:
        report = run_fixture_regression(budget=cfg.budget)
    else:
        if not args.surface:
            raise PairingError(
                "verify needs --surface (repeatable) or --all-fixtures"
            )
        report = run_verify(
            args.surface, budget=cfg.budget, seed=cfg.seed, sample=args.sample
        )
    _emit(cfg, "\n".join(report.lines()))
    return 0 if report.ok else 1


def _cmd_conjecture_scan(args, cfg: RunConfig) -> int:
    scan = conjecture_scan(cfg.surface, budget=cfg.budget)
    _emit(cfg, json.dumps({
        "surface": list(cfg.surface.component_sizes),
        "version": __version__,
        "components_by_signature": {str(k): v for k, v in scan.items()},
    }))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutglue",
        description="Pairings, boundary signatures, and cut-and-glue moves.",
    )
    parser.add_argument("--version", action="version", version=f"cutglue {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, surface=False):
        p.add_argument("--out", type=Path, default=None, help="write output here")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="max pairings to enumerate")
        if surface:
            p.add_argument("--surface", type=_parse_surface, required=True,
                           help="comma-separated component sizes, e.g. 5 or 2,3")

    p = sub.add_parser("enumerate", help="stream pairings or a signature histogram")
    common(p, surface=True)
    p.add_argument("--histogram", action="store_true",
                   help="emit signature,count CSV instead of pairings")
    p.add_argument("--balanced-only", action="store_true")
    p.add_argument("--signature-class", type=int, default=None)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("signature", help="signature of one pairing")
    common(p)
    p.add_argument("pairing", type=Path)
    p.set_defaults(func=_cmd_signature)

    p = sub.add_parser("boundaries", help="boundary cycles of one pairing")
    common(p)
    p.add_argument("pairing", type=Path)
    p.set_defaults(func=_cmd_boundaries)

    p = sub.add_parser("moves", help="classify or apply cut-and-glue moves")
    common(p)
    p.add_argument("pairing", type=Path)
    p.add_argument("--legal-only", action="store_true")
    p.add_argument("--apply", type=_parse_move, default=None, metavar="O-E,O-E",
                   help="apply one move and print the resulting pairing")
    p.add_argument("--force", action="store_true",
                   help="with --apply: push through a forbidden move; "
                        "the output is marked non-conforming")
    p.set_defaults(func=_cmd_moves)

    p = sub.add_parser("path", help="shortest legal-move path between pairings")
    common(p)
    p.add_argument("start", type=Path)
    p.add_argument("end", type=Path)
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("connectivity", help="move-graph components of a class")
    common(p, surface=True)
    p.add_argument("--signature-class", type=int, default=0)
    p.add_argument("--export-dot", type=Path, default=None)
    p.set_defaults(func=_cmd_connectivity)

    p = sub.add_parser("layers", help="layer profile of one pairing")
    common(p)
    p.add_argument("pairing", type=Path)
    p.set_defaults(func=_cmd_layers)

    p = sub.add_parser("reduce", help="drive all layer counts down to 2")
    common(p)
    p.add_argument("pairing", type=Path)
    p.add_argument("--emit-moves", action="store_true")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("verify", help="run the exhaustive check matrix")
    common(p)
    p.add_argument("--surface", type=_parse_surface, action="append", default=[])
    p.add_argument("--all-fixtures", action="store_true",
                   help="regression-check the frozen derived fixtures")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, default=50)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("conjecture-scan", help="component count per signature class")
    common(p, surface=True)
    p.set_defaults(func=_cmd_conjecture_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig.from_args(args)
    try:
        return args.func(args, cfg)
    except (PairingError, BudgetExceededError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        IllegalMoveError,
        NotConnectedError,
        SignatureMismatchError,
        StuckReductionError,
    ) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
