"""Command-line front end: single radii, parameter sweeps, verification, boundaries.

Exit codes: 0 success, 1 verification failure, 2 invalid usage or inadmissible
parameters, 3 no root in (0, 1).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO

from .bounds import ClassParams
from .errors import InfeasibleParams, NoRoot, StarlikeRadiiError
from .radii import DEFAULT_TOL, RadiusResult, TableEntry, compute_radius, radius_table
from .regions import Region, RegionKind, region, write_boundary_csv
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_NO_ROOT = 3

REGION_NAMES = [k.value for k in RegionKind]

# fixed column order of the output record
_COLUMNS = [
    "class",
    "region",
    "alpha",
    "b",
    "c",
    "q",
    "d",
    "s",
    "m",
    "n",
    "l",
    "radius",
    "method",
    "residual",
    "crosscheck",
    "sharp_claimed",
]


def _g17(x: float) -> str:
    return f"{x:.17g}"


def output_record(result: RadiusResult) -> dict:
    """Flat record of one computed radius, keys per class variant."""
    params, reg = result.params, result.region
    rec: dict = {"class": params.kind, "region": reg.kind.value}
    if reg.kind is RegionKind.STARLIKE:
        rec["alpha"] = reg.alpha
    rec["b"] = params.b
    if params.c is not None:
        rec["c"] = params.c
    rec["q"] = params.q
    rec.update(params.derived())
    rec["radius"] = result.radius
    rec["method"] = result.method
    rec["residual"] = result.residual
    rec["crosscheck"] = result.cross_check_discrepancy
    rec["sharp_claimed"] = result.sharp_claimed
    return rec


def _csv_row(rec: dict, columns: list[str]) -> str:
    cells = []
    for col in columns:
        if col not in rec:
            cells.append("")
        elif isinstance(rec[col], float):
            cells.append(_g17(rec[col]))
        else:
            cells.append(str(rec[col]))
    return ",".join(cells)


def _print_record(rec: dict, fmt: str, out: IO[str]) -> None:
    if fmt == "json":
        print(json.dumps(rec), file=out)
    elif fmt == "csv":
        print(",".join(_COLUMNS), file=out)
        print(_csv_row(rec, _COLUMNS), file=out)
    else:
        for key, value in rec.items():
            shown = f"{value:.7g}" if isinstance(value, float) else value
            print(f"{key}: {shown}", file=out)


def _build_params(args) -> ClassParams:
    if args.klass == "h3":
        if args.c is not None:
            raise InfeasibleParams("class h3 takes no c parameter")
        return ClassParams.h3(args.b, args.q)
    if args.c is None:
        raise InfeasibleParams(f"class {args.klass} requires --c")
    return ClassParams(args.klass, args.b, args.q, args.c)


def _build_region(name: str, alpha: float | None) -> Region:
    kind = RegionKind(name)
    if kind is RegionKind.STARLIKE:
        if alpha is None:
            raise InfeasibleParams("region starlike requires an explicit --alpha")
        return region(kind, alpha)
    if alpha is not None:
        raise InfeasibleParams(f"region {name} takes no --alpha")
    return region(kind)


def cmd_compute(args) -> int:
    try:
        params = _build_params(args)
        reg = _build_region(args.region, args.alpha)
    except (InfeasibleParams, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        result = compute_radius(reg, params, tol=args.tol)
    except NoRoot as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_ROOT
    except StarlikeRadiiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _print_record(output_record(result), args.format, sys.stdout)
    return EXIT_OK


def _parse_range(text: str, name: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"{name} must look like lo:hi:steps (got {text!r})")
    lo, hi = float(parts[0]), float(parts[1])
    steps = int(parts[2])
    if steps < 1:
        raise ValueError(f"{name} needs at least one step (got {steps})")
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def _table_regions(names: list[str], alpha: float | None) -> list[Region]:
    out: list[Region] = []
    for name in names:
        if name == "all":
            # the starlike row of a full sweep defaults to order 0
            a = alpha if alpha is not None else 0.0
            out.extend(region(k, a) if k is RegionKind.STARLIKE else region(k) for k in RegionKind)
        else:
            out.append(_build_region(name, alpha if name == "starlike" else None))
    return out


def _table_record(entry: TableEntry) -> dict:
    if entry.result is not None:
        rec = output_record(entry.result)
        rec["status"] = "ok"
        return rec
    params, reg = entry.params, entry.region
    rec = {"class": params.kind, "region": reg.kind.value}
    if reg.kind is RegionKind.STARLIKE:
        rec["alpha"] = reg.alpha
    rec["b"] = params.b
    if params.c is not None:
        rec["c"] = params.c
    rec["q"] = params.q
    rec["status"] = "inadmissible" if "InfeasibleParams" in (entry.error or "") else f"error:{entry.error}"
    return rec


def cmd_table(args) -> int:
    try:
        regions = _table_regions(args.region, args.alpha)
        b_values = _parse_range(args.b_range, "--b-range")
        q_values = _parse_range(args.q_range, "--q-range")
        if args.klass == "h3":
            if args.c_range is not None:
                raise ValueError("class h3 takes no --c-range")
            c_values: list[float | None] = [None]
        else:
            if args.c_range is None:
                raise ValueError(f"class {args.klass} requires --c-range")
            c_values = _parse_range(args.c_range, "--c-range")
    except (ValueError, InfeasibleParams) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    rows: list[dict] = []
    for reg in regions:
        cells: list[TableEntry] = []
        good: list[tuple] = []
        for b in b_values:
            for c in c_values:
                for q in q_values:
                    try:
                        params = (
                            ClassParams.h3(b, q) if args.klass == "h3" else ClassParams(args.klass, b, q, c)
                        )
                        good.append((None, params))
                    except InfeasibleParams as exc:
                        good.append((str(exc), (b, c, q)))
        admissible = [p for err, p in good if err is None]
        computed = iter(radius_table([reg], admissible, tol=args.tol)) if admissible else iter(())
        for err, payload in good:
            if err is None:
                rows.append(_table_record(next(computed)))
            else:
                b, c, q = payload
                rec = {"class": args.klass, "region": reg.kind.value}
                if reg.kind is RegionKind.STARLIKE:
                    rec["alpha"] = reg.alpha
                rec["b"] = b
                if c is not None:
                    rec["c"] = c
                rec["q"] = q
                rec["status"] = "inadmissible"
                rows.append(rec)

    out = sys.stdout
    close = False
    if args.out is not None:
        try:
            out = open(args.out, "w", encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_USAGE
        close = True
    try:
        if args.format == "json":
            for rec in rows:
                print(json.dumps(rec), file=out)
        else:
            columns = _COLUMNS + ["status"]
            print(",".join(columns), file=out)
            for rec in rows:
                print(_csv_row(rec, columns), file=out)
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, samples=args.samples, seed=args.seed)
    ok = True
    for report in reports:
        print(report.to_json())
        ok = ok and report.passed
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_boundary(args) -> int:
    try:
        reg = _build_region(args.region, args.alpha)
    except (InfeasibleParams, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.points < 1:
        print("error: --points must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.out is None:
        write_boundary_csv(reg, args.points, sys.stdout)
        return EXIT_OK
    try:
        with open(args.out, "w", encoding="utf-8") as handle:
            write_boundary_csv(reg, args.points, handle)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _tol(text: str) -> float:
    value = float(text)
    if not (1e-14 <= value <= 1e-6):
        raise argparse.ArgumentTypeError("tol must lie in [1e-14, 1e-6]")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starlike-radii",
        description="Sharp radii of starlikeness for classes with fixed second coefficient.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute one radius")
    p.add_argument("--class", dest="klass", required=True, choices=["h1", "h2", "h3"])
    p.add_argument("--region", required=True, choices=REGION_NAMES)
    p.add_argument("--alpha", type=float, default=None, help="order of the starlike region")
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--tol", type=_tol, default=DEFAULT_TOL)
    p.add_argument("--format", choices=["json", "csv", "text"], default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="radius sweep over a parameter grid")
    p.add_argument("--class", dest="klass", required=True, choices=["h1", "h2", "h3"])
    p.add_argument("--region", required=True, action="append", choices=REGION_NAMES + ["all"])
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--b-range", required=True, help="lo:hi:steps")
    p.add_argument("--c-range", default=None, help="lo:hi:steps (h1/h2 only)")
    p.add_argument("--q-range", required=True, help="lo:hi:steps")
    p.add_argument("--tol", type=_tol, default=DEFAULT_TOL)
    p.add_argument("--format", choices=["json", "csv"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", required=True, choices=list(SUITES) + ["all"])
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("boundary", help="export a region boundary as CSV")
    p.add_argument("--region", required=True, choices=REGION_NAMES)
    p.add_argument("--alpha", type=float, default=None)
    p.add_argument("--points", type=int, default=4096)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_boundary)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
