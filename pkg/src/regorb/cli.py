"""Command line driver for batch runs.

Subcommands:

  build-normalizer   assemble the full normalizer for a row (or explicit
                     parameters) and write its generators to JSON
  classify           classify rows and write a CSV census plus a JSON
                     report with the full candidate surveys
  verify             compare computed censuses against the reference table
  orbit-check        decide a regular orbit for a serialized matrix group

Exit codes: 0 ok, 1 verification mismatch, 2 invalid input, 3 out of scope.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .catalogue import DESK_ROWS, ROWS, RowParams, census_matches, reference_counts
from .classify import (
    DEFAULT_MAX_GROUP_ORDER,
    DEFAULT_MAX_QUOTIENT,
    DEFAULT_MAX_SPACE,
    classify_row,
    scope_refusal,
)
from .gfp import factorize, field
from .groups import MatGroup, SubgroupView
from .normalizer import assemble_full, predicted_order
from .orbits import (
    code_points,
    covering_certificate,
    has_regular_orbit,
    orbit_census,
    verify_witness,
)
from .serial import Journal, row_record

OK, MISMATCH, INVALID, OUT_OF_SCOPE = 0, 1, 2, 3

_NOTE = {"plus": "E+", "minus": "E-", "symplectic": "S", "odd": ""}


@dataclass
class RunConfig:
    rows: list[int]
    etype: str = "auto"
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER
    max_quotient: int = DEFAULT_MAX_QUOTIENT
    max_space: int = DEFAULT_MAX_SPACE
    threads: int = 1
    checkpoint_dir: str | None = None
    out_dir: str = "."
    seed: int = 0


def _add_common(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--max-group-order", type=int, default=DEFAULT_MAX_GROUP_ORDER)
    ap.add_argument("--max-quotient", type=int, default=DEFAULT_MAX_QUOTIENT)
    ap.add_argument("--max-space", type=int, default=DEFAULT_MAX_SPACE)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--checkpoint-dir", default=os.environ.get("REGORB_CHECKPOINT_DIR"))
    ap.add_argument("--out", default=".", help="output directory (or file for single-file commands)")
    ap.add_argument("--seed", type=int, default=0)


def _parse_rows(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _config(args, rows: list[int]) -> RunConfig:
    return RunConfig(
        rows=rows,
        etype=getattr(args, "etype", "auto"),
        max_group_order=args.max_group_order,
        max_quotient=args.max_quotient,
        max_space=args.max_space,
        threads=args.threads,
        checkpoint_dir=args.checkpoint_dir,
        out_dir=args.out,
        seed=args.seed,
    )


def _params_from_args(args) -> RowParams | str:
    """RowParams from --row or from explicit --e/--p/..., or an error string."""
    if args.row is not None:
        if args.row not in ROWS:
            return f"unknown catalogue row {args.row}"
        return ROWS[args.row]
    if args.e is None or args.p is None:
        return "give either --row or both --e and --p"
    e, p = args.e, args.p
    a = args.a if args.a is not None else 1
    b = args.b if args.b is not None else 1
    if args.d is not None and args.d != e * a * b:
        return f"inconsistent dimensions: d={args.d} but e*a*b={e * a * b}"
    if len(factorize(e)) != 1:
        return f"core dimension e={e} is not a prime power"
    fac = factorize(p)
    if len(fac) != 1 or p not in fac:
        return f"p={p} is not prime"
    if e % p == 0:
        return f"characteristic p={p} divides e={e}"
    return RowParams(0, e=e, p=p, a=a, b=b)


def _modes_for(params: RowParams, etype: str) -> list[str] | str:
    if etype == "auto":
        return params.modes()
    if etype not in params.modes():
        return (f"core type {etype!r} does not exist for these parameters "
                f"(available: {', '.join(params.modes())})")
    return [etype]


# -- build-normalizer -----------------------------------------------------


def cmd_build_normalizer(args) -> int:
    params = _params_from_args(args)
    if isinstance(params, str):
        print(f"error: {params}", file=sys.stderr)
        return INVALID
    reason = scope_refusal(params, args.max_group_order, args.max_quotient,
                           args.max_space)
    if reason:
        print(f"refused: {reason}", file=sys.stderr)
        return OUT_OF_SCOPE
    modes = _modes_for(params, args.etype)
    if isinstance(modes, str):
        print(f"error: {modes}", file=sys.stderr)
        return INVALID

    cfg = _config(args, [params.row] if params.row else [])
    out: dict = {"config": asdict(cfg), "row": params.row or None,
                 "e": params.e, "p": params.p, "a": params.a, "b": params.b,
                 "d": params.d, "modes": {}}
    for mode in modes:
        res = assemble_full(params.r, params.m, params.p, params.a, params.b,
                            mode, max_order=args.max_group_order)
        G = res.group
        gen_ids = SubgroupView(G, np.arange(G.order, dtype=np.int32)).generating_set()
        out["modes"][mode] = {
            "order": G.order,
            "predicted_order": predicted_order(params.r, params.m, params.p,
                                               params.a, params.b, mode),
            "core_order": len(res.core_ids),
            "form_order": res.form_order,
            "generators": [G.mats[int(i)].tolist() for i in gen_ids],
        }
        print(f"{mode}: |N| = {G.order} (core {len(res.core_ids)}, "
              f"form {res.form_order})")

    path = Path(args.out)
    if path.is_dir():
        path = path / "normalizer.json"
    path.write_text(json.dumps(out, indent=1))
    print(f"wrote {path}")
    return OK


# -- classify -------------------------------------------------------------


def _classify_record(task) -> dict:
    row, kwargs = task
    return row_record(classify_row(row, **kwargs))


def _records_for(cfg: RunConfig, log=None) -> list[dict] | int:
    """Journal-aware classification of cfg.rows; exit code on refusal."""
    for row in cfg.rows:
        if row not in ROWS:
            print(f"error: unknown catalogue row {row}", file=sys.stderr)
            return INVALID
        reason = scope_refusal(ROWS[row], cfg.max_group_order, cfg.max_quotient,
                               cfg.max_space, desk_only=True)
        if reason:
            print(f"refused: row {row}: {reason}", file=sys.stderr)
            return OUT_OF_SCOPE
        if cfg.etype != "auto" and cfg.etype not in ROWS[row].modes():
            print(f"error: row {row} has no {cfg.etype!r} core type "
                  f"(available: {', '.join(ROWS[row].modes())})", file=sys.stderr)
            return INVALID
    journal = None
    if cfg.checkpoint_dir:
        journal = Journal(Path(cfg.checkpoint_dir) / "journal.jsonl")
    done = journal.completed_rows() if journal else {}
    todo = [r for r in cfg.rows if r not in done]
    fresh: dict[int, dict] = {}
    kwargs: dict = {"max_order": max(cfg.max_group_order, 1)}
    if cfg.etype != "auto":
        kwargs["only_mode"] = cfg.etype
    if cfg.threads > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            for rec in pool.map(_classify_record, [(r, kwargs) for r in todo]):
                fresh[rec["row"]] = rec
                if journal:
                    journal.append(rec)
                if log:
                    log(f"[{rec['row']}] done: census={rec['census']}")
    else:
        for row in todo:
            rec = _classify_record((row, dict(kwargs, log=log)))
            fresh[row] = rec
            if journal:
                journal.append(rec)
    out = []
    for row in cfg.rows:
        rec = done.get(row) or fresh[row]
        if log and row in done:
            log(f"[{row}] replayed from journal")
        out.append(rec)
    return out


def _census_lines(rec: dict) -> list[tuple[int, int, str]]:
    """(num, max order, note) lines of one row record, reference layout."""
    census = rec.get("census", {})
    if not census:
        return [(0, 0, "")]
    split = len(rec.get("modes", {})) > 1
    return [(int(v[0]), int(v[1]), _NOTE.get(mode, "") if split else "")
            for mode, v in sorted(census.items())]


def _write_reports(cfg: RunConfig, records: list[dict]) -> None:
    out_dir = Path(cfg.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / "report.csv"
    with csv_path.open("w", newline="") as fh:
        fh.write(f"# config: {json.dumps(asdict(cfg))}\n")
        w = csv.writer(fh)
        w.writerow(["No.", "e", "p", "d", "a", "b", "num gps", "max |G|", "Note"])
        for rec in records:
            prm = rec["params"]
            d = prm["e"] * prm["a"] * prm["b"]
            for num, mx, note in _census_lines(rec):
                w.writerow([rec["row"], prm["e"], prm["p"], d, prm["a"],
                            prm["b"], num, mx, note])
    json_path = out_dir / "report.json"
    json_path.write_text(json.dumps({"config": asdict(cfg), "rows": records}, indent=1))
    print(f"wrote {csv_path} and {json_path}")


def cmd_classify(args) -> int:
    rows = _parse_rows(args.rows) if args.rows else sorted(DESK_ROWS)
    cfg = _config(args, rows)
    np.random.seed(cfg.seed)
    records = _records_for(cfg, log=lambda s: print(s, flush=True))
    if isinstance(records, int):
        return records
    _write_reports(cfg, records)
    for rec in records:
        print(f"row {rec['row']}: census={rec['census']} "
              f"{'(reference match)' if rec['matches_reference'] else ''}")
    return OK


# -- verify ---------------------------------------------------------------


def cmd_verify(args) -> int:
    rows = _parse_rows(args.rows) if args.rows else sorted(DESK_ROWS)
    cfg = _config(args, rows)
    np.random.seed(cfg.seed)
    runnable: list[int] = []
    skipped: list[tuple[int, str]] = []
    for row in rows:
        if row not in ROWS:
            print(f"error: unknown catalogue row {row}", file=sys.stderr)
            return INVALID
        reason = scope_refusal(ROWS[row], cfg.max_group_order, cfg.max_quotient,
                               cfg.max_space, desk_only=True)
        if reason:
            skipped.append((row, reason))
        else:
            runnable.append(row)
    sub = RunConfig(**{**asdict(cfg), "rows": runnable})
    records = _records_for(sub, log=lambda s: print(s, flush=True))
    if isinstance(records, int):
        return records

    failures = 0
    for rec in records:
        row = rec["row"]
        got = {k: tuple(v) for k, v in rec["census"].items()}
        want = reference_counts(row)
        if census_matches(row, got):
            print(f"row {row}: PASS {got or '(empty)'}")
        else:
            failures += 1
            print(f"row {row}: FAIL expected {want} got {got or '(empty)'}")
    for row, reason in skipped:
        print(f"row {row}: SKIPPED ({reason})")
    if failures:
        print(f"{failures} row(s) differ from the reference")
        return MISMATCH
    print(f"all {len(records)} verified row(s) match the reference"
          + (f", {len(skipped)} skipped" if skipped else ""))
    return OK


# -- orbit-check ----------------------------------------------------------


def cmd_orbit_check(args) -> int:
    try:
        data = json.loads(Path(args.group_file).read_text())
    except OSError as exc:
        print(f"error: cannot read {args.group_file}: {exc}", file=sys.stderr)
        return INVALID
    except json.JSONDecodeError as exc:
        print(f"error: {args.group_file}: line {exc.lineno} col {exc.colno}: "
              f"{exc.msg}", file=sys.stderr)
        return INVALID
    try:
        p = int(data["p"])
        gens = [np.asarray(g, dtype=np.int64) for g in data["generators"]]
        d = gens[0].shape[0]
        if any(g.shape != (d, d) for g in gens):
            raise ValueError("generator shapes differ")
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        print(f"error: {args.group_file}: expected "
              f'{{"p": prime, "generators": [[...d x d...]]}}: {exc}',
              file=sys.stderr)
        return INVALID
    if p**d > args.max_space:
        print(f"refused: point space {p}^{d} exceeds {args.max_space}",
              file=sys.stderr)
        return OUT_OF_SCOPE

    F = field(p)
    G = MatGroup.from_generators(F, gens, max_order=args.max_group_order)
    view = SubgroupView(G, np.arange(G.order, dtype=np.int32))
    has_reg, witness = has_regular_orbit(view)
    report: dict = {"group": str(args.group_file), "p": p, "d": d,
                    "order": G.order, "has_regular": has_reg}
    if has_reg:
        vec = code_points(F, np.array([witness]), d)[0].tolist()
        assert verify_witness(view, witness)
        report["witness"] = vec
        print(f"regular orbit: witness {vec} (orbit size {G.order})")
    else:
        cover, covered = covering_certificate(view)
        report["cover"] = [{"element": G.mats[int(i)].tolist(),
                            "fixed_basis": B.tolist()} for i, B in cover]
        report["covered_points"] = covered
        print(f"no regular orbit: {len(cover)} fixed spaces cover "
              f"{covered} = {p}^{d} points")
        assert covered == p**d
    if args.oracle:
        census = orbit_census(F, [g % p for g in gens])
        oracle_reg = census.get(G.order, 0) > 0
        report["oracle_census"] = sorted(census.items())
        if oracle_reg != has_reg:
            print("oracle disagreement: census says "
                  f"{'regular' if oracle_reg else 'no regular'}", file=sys.stderr)
            return MISMATCH
        print(f"oracle agrees: orbit sizes {sorted(census)}")
    out = Path(args.out)
    if out.is_dir():
        out = out / "orbit_report.json"
    out.write_text(json.dumps(report, indent=1))
    print(f"wrote {out}")
    return OK


# -- entry ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="regorb", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build-normalizer", help="assemble a normalizer, write JSON")
    b.add_argument("--row", type=int)
    b.add_argument("--e", type=int)
    b.add_argument("--p", type=int)
    b.add_argument("--d", type=int)
    b.add_argument("--a", type=int)
    b.add_argument("--b", type=int)
    b.add_argument("--etype", choices=["auto", "plus", "minus", "symplectic"],
                   default="auto")
    _add_common(b)
    b.set_defaults(func=cmd_build_normalizer)

    c = sub.add_parser("classify", help="classify rows, write CSV + JSON reports")
    c.add_argument("--rows", help="comma list / ranges, e.g. 62,63,66-69")
    c.add_argument("--etype", choices=["auto", "plus", "minus", "symplectic"],
                   default="auto")
    _add_common(c)
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", help="check computed censuses against the reference")
    v.add_argument("--rows", help="defaults to every desk row")
    _add_common(v)
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("orbit-check", help="regular-orbit report for a group file")
    o.add_argument("group_file")
    o.add_argument("--oracle", action="store_true",
                   help="cross-check with the orbit census")
    _add_common(o)
    o.set_defaults(func=cmd_orbit_check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
