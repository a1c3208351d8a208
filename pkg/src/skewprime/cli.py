"""Command-line front end: ``check``, ``repro`` and ``list``."""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import examples
from .errors import AlgebraError
from .scenario import EXIT_INPUT, EXIT_OK, EXIT_REFUTED, dumps, render_text, run_scenario


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _render(report: dict, fmt: str) -> str:
    return dumps(report) if fmt == "json" else render_text(report)


def _check_one(path: str, seed, bound, cap, timing: bool):
    try:
        obj = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        report = {"tool": "skewprime", "scenario": path,
                  "error": {"type": type(e).__name__, "message": str(e)},
                  "exit_code": EXIT_INPUT}
        return report, EXIT_INPUT
    t0 = time.perf_counter()
    report, code = run_scenario(obj, seed=seed, bound=bound, cap=cap)
    if timing:
        report["timing_seconds"] = round(time.perf_counter() - t0, 6)
    return report, code


def cmd_check(args) -> int:
    jobs = max(1, args.jobs)
    work = [(p, args.seed, args.bound, args.cap, args.timing) for p in args.scenarios]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            outcomes = list(ex.map(_check_one, *zip(*work)))
    else:
        outcomes = [_check_one(*w) for w in work]
    reports = [r for r, _ in outcomes]
    codes = [c for _, c in outcomes]
    if len(reports) == 1:
        _emit(_render(reports[0], args.format), args.out)
    elif args.format == "json":
        _emit(dumps({"reports": reports}), args.out)
    else:
        _emit("\n".join(render_text(r) for r in reports), args.out)
    return max(codes)


def cmd_repro(args) -> int:
    try:
        params = examples.resolve_params(args.example_id, {"r": args.r, "p": args.p, "n": args.n,
                                                          "a": args.a})
    except AlgebraError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT
    ex = examples.get(args.example_id)
    scenario = examples.build(args.example_id, params)
    t0 = time.perf_counter()
    report, _ = run_scenario(scenario, seed=args.seed)
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - t0, 6)
    key = examples.params_key(params)
    view = examples.golden_view(report)
    code = EXIT_OK
    if not ex.golden:
        report["golden"] = "computed-only (no golden verdict for this example)"
    else:
        golden = examples.load_golden(args.example_id)
        if args.write_golden:
            golden[key] = view
            path = Path(__file__).parent / "golden" / f"{args.example_id}.json"
            path.write_text(json.dumps(golden, sort_keys=True, indent=2) + "\n")
            report["golden"] = f"written for {key}"
        elif key not in golden:
            report["golden"] = f"computed-only (no golden for {key})"
        else:
            lines = examples.diff(golden[key], view)
            if lines:
                report["golden"] = "mismatch"
                report["golden_diff"] = lines
                code = EXIT_REFUTED
            else:
                report["golden"] = "match"
    text = _render(report, args.format)
    if args.format == "text" and report.get("golden_diff"):
        text += "".join(f"  {line}\n" for line in report["golden_diff"])
    _emit(text, args.out)
    return code


def cmd_list(args) -> int:
    rows = [e for e in examples.CATALOG if args.group in (None, e.group)]
    if args.format == "json":
        _emit(json.dumps([{"id": e.id, "group": e.group, "params": e.params,
                           "location": e.location, "summary": e.summary, "golden": e.golden}
                          for e in rows], indent=2) + "\n", args.out)
        return EXIT_OK
    width = max(len(e.id) for e in examples.CATALOG)
    lines = []
    for e in rows:
        params = examples.params_key(e.params)
        lines.append(f"{e.id:<{width}}  {e.group:<14}  {params:<16}  {e.location}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    from . import __version__
    ap = argparse.ArgumentParser(prog="skewprime",
                                 description="S-primeness and associated primes over skew rings")
    ap.add_argument("--version", action="version", version=f"skewprime {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--seed", type=int)
        p.add_argument("--timing", action="store_true", help="add wall-clock timing to the report")

    c = sub.add_parser("check", help="run scenario files")
    c.add_argument("scenarios", nargs="+", metavar="SCENARIO")
    common(c)
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--bound", type=int)
    c.add_argument("--cap", type=int)
    c.set_defaults(func=cmd_check)

    r = sub.add_parser("repro", help="reproduce a built-in example against its golden file")
    r.add_argument("example_id")
    common(r)
    r.add_argument("--r")
    r.add_argument("--p")
    r.add_argument("--n")
    r.add_argument("--a")
    r.add_argument("--write-golden", action="store_true", help=argparse.SUPPRESS)
    r.set_defaults(func=cmd_repro)

    ls = sub.add_parser("list", help="list built-in examples")
    ls.add_argument("--format", choices=["text", "json"], default="text")
    ls.add_argument("--out", metavar="PATH")
    ls.add_argument("--group", choices=examples.GROUPS)
    ls.set_defaults(func=cmd_list)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        # argparse uses 2 for usage errors; the contract reserves 3 for bad input
        return EXIT_INPUT if e.code not in (0, None) else EXIT_OK
    return args.func(args)


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
