"""Batch command-line front end with deterministic JSON/CSV/text output.

Subcommands: roots, cells, classify, l2-oracle, model.  JSON is the
canonical machine format (sorted keys, floats at 12 significant digits);
text and CSV render the same record.  Exit codes: 0 success, 2 input
error, 3 resource/limit error, 4 model violation.  WEYL_MODEL_THREADS
caps internal parallelism.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .cells import Cell, cell_of_subset, enumerate_cells, to_json_dict
from .classifier import QuadratureConfig, l2_norm_integral, square_integrable
from .errors import (
    BudgetExceededError,
    DegeneratePotentialError,
    DimensionTooLargeError,
    ExponentOverflowError,
    WeylModelError,
)
from .model import build_model_catalog, summary_line, verify_multiplicity_one
from .potential import NewtonConfig, Potential, Term, canonical_potential, spans_dual
from .root_system import Weight, build_root_datum
from .util import worker_count

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_LIMIT = 3
EXIT_VIOLATION = 4


@dataclass(frozen=True)
class CliConfig:
    output: str = "json"
    newton_tol: float = 1e-10
    quad_eps: float = 1e-6
    radii: tuple[float, ...] = (2.0, 4.0, 8.0, 16.0, 32.0)
    exp_bound: float = 700.0

    def __post_init__(self):
        if not self.newton_tol > 0:
            raise ValueError("--tol must be positive")
        if not self.quad_eps > 0:
            raise ValueError("--quad-eps must be positive")
        if not self.exp_bound > 0:
            raise ValueError("--exp-bound must be positive")
        if any(b <= a for a, b in zip(self.radii, self.radii[1:])):
            raise ValueError("--radii must be strictly increasing")


def _round_floats(obj):
    """Pin floats to 12 significant digits for byte-stable output."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _emit_json(record: dict) -> str:
    return json.dumps(_round_floats(record), sort_keys=True, indent=2)


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _coord_json(c: Fraction):
    return int(c) if c.denominator == 1 else str(c)


def _parse_indices(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.split(",")]


def _parse_weight(text: str) -> Weight:
    return Weight.from_seq(Fraction(tok.strip()) for tok in text.split(","))


def _parse_radii(text: str) -> tuple[float, ...]:
    return tuple(float(tok) for tok in text.split(","))


def _parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))  # decimal reading, not binary expansion
    raise ValueError(f"cannot read rational from {value!r}")


def load_potential(path: str, cell: Cell) -> Potential:
    """Read a potential file and validate its invariants."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    file_s = tuple(sorted(int(i) for i in data.get("cell", {}).get("S", [])))
    if file_s != cell.S:
        raise ValueError(f"potential file pins S={list(file_s)} but the requested cell pins S={list(cell.S)}")
    terms = tuple(
        Term(float(entry["c"]), tuple(_parse_rational(x) for x in entry["mu"]))
        for entry in data["terms"]
    )
    pot = Potential(cell, terms, float(data.get("offset", 0.0)))
    if not spans_dual(pot):
        raise DegeneratePotentialError("potential file exponent forms do not span the cell's dual")
    return pot


def _cmd_roots(args, cfg: CliConfig):
    datum = build_root_datum(args.spec)
    record = {
        "spec": str(datum.spec),
        "rank": datum.n,
        "cartan": [list(row) for row in datum.cartan],
        "d": [str(x) for x in datum.d],
        "gram_fw": [[str(x) for x in row] for row in datum.gram_fw],
        "positive_roots": [list(r) for r in datum.pos_roots],
        "positive_root_count": len(datum.pos_roots),
    }
    return record, EXIT_OK


def _cmd_cells(args, cfg: CliConfig):
    datum = build_root_datum(args.spec)
    cells = enumerate_cells(datum)
    record = {
        "spec": str(datum.spec),
        "count": len(cells),
        "cells": [to_json_dict(c) for c in cells],
    }
    return record, EXIT_OK


def _cmd_classify(args, cfg: CliConfig):
    datum = build_root_datum(args.spec)
    cell = cell_of_subset(datum, _parse_indices(args.zero_set))
    weight = _parse_weight(args.weight)
    pot = load_potential(args.potential, cell) if args.potential else canonical_potential(cell)
    report = square_integrable(
        cell, pot, weight, tol=cfg.newton_tol, newton=NewtonConfig(exp_bound=cfg.exp_bound)
    )
    record = {
        "spec": str(datum.spec),
        "S": list(cell.S),
        "lambda": [_coord_json(c) for c in weight.coords],
        "occurs": report.occurs,
        "l2": report.in_l2,
        "method": report.method,
        "details": dict(report.details),
        "integral": None,
    }
    return record, EXIT_OK


def _cmd_l2_oracle(args, cfg: CliConfig):
    datum = build_root_datum(args.spec)
    cell = cell_of_subset(datum, _parse_indices(args.zero_set))
    weight = _parse_weight(args.weight)
    pot = load_potential(args.potential, cell) if args.potential else canonical_potential(cell)
    qcfg = QuadratureConfig(radii=cfg.radii, rel_eps=cfg.quad_eps, exp_bound=cfg.exp_bound)
    report = l2_norm_integral(cell, pot, weight, qcfg)
    record = {
        "spec": str(datum.spec),
        "S": list(cell.S),
        "lambda": [_coord_json(c) for c in weight.coords],
        "radii": list(report.radii),
        "partial_integrals": list(report.partial_integrals),
        "verdict": report.verdict,
        "limit_estimate": report.limit_estimate,
    }
    return record, EXIT_OK


def _cmd_model(args, cfg: CliConfig):
    datum = build_root_datum(args.spec)
    catalog = build_model_catalog(datum, args.bound, threads=worker_count())
    verdict = verify_multiplicity_one(catalog)
    record = {
        "spec": str(datum.spec),
        "bound": catalog.bound,
        "weights": catalog.weight_count,
        "cells": 2 ** datum.n,
        "multiplicity_one": verdict.ok,
        "summary": summary_line(catalog),
        "assignments": [
            {"lambda": [_coord_json(c) for c in w.coords], "S": list(cell.S)}
            for w, cell in catalog.assignments
        ],
        "violations": [
            {
                "lambda": [_coord_json(c) for c in v.weight.coords],
                "cells": [list(c.S) for c in v.contributors],
                "note": v.note,
            }
            for v in catalog.violations
        ],
    }
    return record, EXIT_OK if verdict.ok else EXIT_VIOLATION


def _render_text(command: str, record: dict) -> str:
    lines: list[str] = []
    if command == "roots":
        lines.append(f"root system {record['spec']} (rank {record['rank']})")
        lines.append("cartan matrix:")
        lines.extend("  " + " ".join(f"{v:3d}" for v in row) for row in record["cartan"])
        lines.append("d: " + " ".join(record["d"]))
        lines.append("gram matrix of fundamental weights:")
        lines.extend("  " + " ".join(f"{v:>6}" for v in row) for row in record["gram_fw"])
        lines.append(f"positive roots: {record['positive_root_count']}")
        lines.extend("  " + " ".join(str(v) for v in root) for root in record["positive_roots"])
    elif command == "cells":
        lines.append(f"{record['spec']}: {record['count']} cells")
        for entry in record["cells"]:
            inner = ",".join(str(i) for i in entry["S"])
            lines.append(f"  S={{{inner}}} m={entry['m']}")
    elif command == "classify":
        lam = ",".join(str(c) for c in record["lambda"])
        inner = ",".join(str(i) for i in record["S"])
        lines.append(
            f"lambda=({lam}) S={{{inner}}}: occurs={str(record['occurs']).lower()}"
            f" l2={record['l2']} method={record['method']}"
        )
    elif command == "l2-oracle":
        lam = ",".join(str(c) for c in record["lambda"])
        inner = ",".join(str(i) for i in record["S"])
        lines.append(f"lambda=({lam}) S={{{inner}}}: {record['verdict']}")
        for r, v in zip(record["radii"], record["partial_integrals"]):
            lines.append(f"  R={_fmt_float(float(r))}: {_fmt_float(float(v))}")
        if record["limit_estimate"] is not None:
            lines.append(f"limit {_fmt_float(float(record['limit_estimate']))}")
    elif command == "model":
        lines.append(record["summary"])
        for entry in record["violations"]:
            lam = ",".join(str(c) for c in entry["lambda"])
            lines.append(f"  violation lambda=({lam}): {entry['note']}")
    return "\n".join(lines)


def _render_csv(command: str, record: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if command == "cells":
        writer.writerow(["S", "m"])
        for entry in record["cells"]:
            writer.writerow([" ".join(str(i) for i in entry["S"]), entry["m"]])
    elif command == "model":
        writer.writerow(["lambda", "S", "status", "note"])
        for entry in record["assignments"]:
            writer.writerow([
                " ".join(str(c) for c in entry["lambda"]),
                " ".join(str(i) for i in entry["S"]),
                "ok",
                "",
            ])
        for entry in record["violations"]:
            writer.writerow([
                " ".join(str(c) for c in entry["lambda"]),
                "|".join(" ".join(str(i) for i in s) for s in entry["cells"]),
                "violation",
                entry["note"],
            ])
    else:
        raise ValueError(f"csv output is not available for {command!r}")
    return buf.getvalue().rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weyl-model",
        description=(
            "Cell decomposition of the closed Weyl chamber, moment images of convex "
            "exponential potentials, and highest-weight occurrence verdicts."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("spec", help="root-system spec, e.g. A2, B3, A1xA1")
        sp.add_argument("--output", choices=("json", "text", "csv"), default="json")

    sp = sub.add_parser("roots", help="print the exact root datum")
    common(sp)

    sp = sub.add_parser("cells", help="list the 2^rank chamber cells")
    common(sp)

    sp = sub.add_parser("classify", help="occurrence and square-integrability of one weight")
    common(sp)
    sp.add_argument("-S", "--zero-set", default="", help="comma-separated pinned simple-root indices")
    sp.add_argument("-w", "--weight", required=True, help="comma-separated fundamental-weight coordinates")
    sp.add_argument("--potential", help="JSON potential file (default: canonical potential)")
    sp.add_argument("--tol", type=float, default=1e-10, help="newton residual tolerance")
    sp.add_argument("--exp-bound", type=float, default=700.0, help="exponent overflow bound")

    sp = sub.add_parser("l2-oracle", help="quadrature oracle for the reduced norm integral")
    common(sp)
    sp.add_argument("-S", "--zero-set", default="", help="comma-separated pinned simple-root indices")
    sp.add_argument("-w", "--weight", required=True, help="comma-separated fundamental-weight coordinates")
    sp.add_argument("--potential", help="JSON potential file (default: canonical potential)")
    sp.add_argument("--radii", default="2,4,8,16,32", help="comma-separated box half-widths")
    sp.add_argument("--quad-eps", type=float, default=1e-6, help="relative increment threshold")
    sp.add_argument("--exp-bound", type=float, default=700.0, help="exponent overflow bound")

    sp = sub.add_parser("model", help="sweep all cells and verify the multiplicity-one model property")
    common(sp)
    sp.add_argument("--bound", type=int, default=3, help="max fundamental-weight coordinate swept")

    return parser


_COMMANDS = {
    "roots": _cmd_roots,
    "cells": _cmd_cells,
    "classify": _cmd_classify,
    "l2-oracle": _cmd_l2_oracle,
    "model": _cmd_model,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = CliConfig(
            output=args.output,
            newton_tol=getattr(args, "tol", 1e-10),
            quad_eps=getattr(args, "quad_eps", 1e-6),
            radii=_parse_radii(args.radii) if getattr(args, "radii", None) else (2.0, 4.0, 8.0, 16.0, 32.0),
            exp_bound=getattr(args, "exp_bound", 700.0),
        )
        record, code = _COMMANDS[args.command](args, cfg)
        if cfg.output == "json":
            rendered = _emit_json(record)
        elif cfg.output == "csv":
            rendered = _render_csv(args.command, record)
        else:
            rendered = _render_text(args.command, record)
    except (DimensionTooLargeError, ExponentOverflowError, BudgetExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (WeylModelError, ValueError, KeyError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
