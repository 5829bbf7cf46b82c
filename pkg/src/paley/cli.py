"""Command line front door: ``paley table``, ``paley scan``, ``paley curve``.

Exit codes: 0 all checks pass, 1 a mathematical violation (or a check
that raised), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import datetime as _dt
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__, kernels
from .checks import CHECKS, ERROR, FAIL, SKIP, CheckResult, run_checks
from .curves import count_points
from .errors import IneligibleOrder, NotDistinct, PaleyError
from .ff import field_of_order, paley_orders, prime_power
from .graph import require_paley, table_rows, triple_charsum_terms, triple_via_charsum

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2

TABLE_COLUMNS = ("[1 1 1]", "[1 1 2]", "[1 2 2]", "[2 2 2]")
TABLE_LINES = ("triangle", "path")


# --- table ---

def _eligible(q: int):
    if q % 4 != 1 or prime_power(q) is None:
        raise IneligibleOrder(f"q={q} is not a prime power congruent to 1 mod 4")
    return field_of_order(q)


def _fmt_range(lo: int, hi: int) -> str:
    return str(lo) if lo == hi else f"{lo}-{hi}"


def table_data(qs) -> list[tuple[int, str, list[str]]]:
    """Rows (q, line, four cells); a shape that does not occur prints '-'."""
    rows = []
    for q in qs:
        found = table_rows(_eligible(q))
        for line in TABLE_LINES:
            cells = [_fmt_range(*r) for r in found[line]] if line in found else ["-"] * 4
            rows.append((q, line, cells))
    return rows


def render_tsv(rows) -> str:
    out = ["#" + "\t".join(("q", "line") + TABLE_COLUMNS)]
    out += ["\t".join([str(q), line, *cells]) for q, line, cells in rows]
    return "\n".join(out) + "\n"


def render_text(rows) -> str:
    header = ["q", "line", *TABLE_COLUMNS]
    body = [[str(q), line, *cells] for q, line, cells in rows]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]

    def fmt(r):
        parts = [r[0].rjust(widths[0]), r[1].ljust(widths[1])]
        parts += [c.rjust(w) for c, w in zip(r[2:], widths[2:])]
        return "  ".join(parts).rstrip()

    return "\n".join(fmt(r) for r in [header] + body) + "\n"


def parse_tsv(text: str) -> list[tuple[int, str, list]]:
    """Inverse of ``render_tsv``: cells become (lo, hi) tuples or None."""
    rows = []
    for ln in text.splitlines():
        if not ln or ln.startswith("#"):
            continue
        q, line, *cells = ln.split("\t")
        parsed = []
        for c in cells:
            if c == "-":
                parsed.append(None)
            else:
                lo, _, hi = c.partition("-")
                parsed.append((int(lo), int(hi or lo)))
        rows.append((int(q), line, parsed))
    return rows


def cmd_table(args) -> int:
    rows = table_data(args.q)
    sys.stdout.write(render_tsv(rows) if args.format == "tsv" else render_text(rows))
    return EXIT_OK


# --- scan ---

def _cell(v) -> str:
    return str(v)


def write_reports(results: list[CheckResult], checks, out: Path) -> list[str]:
    """One TSV plus an aligned text mirror per check; returns file names."""
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in checks:
        rows = [r for r in results if r.check == name and r.status != SKIP]
        keys = []
        for r in rows:
            keys += [k for k in r.fields if k not in keys]
        header = ["q", "status", *keys]
        body = [[str(r.q), r.status, *(_cell(r.fields.get(k, "-")) for k in keys)] for r in rows]
        tsv = "#" + "\t".join(header) + "\n" + "".join("\t".join(b) + "\n" for b in body)
        widths = [max(len(x[i]) for x in [header] + body) for i in range(len(header))]
        text = "".join("  ".join(c.rjust(w) for c, w in zip(x, widths)) + "\n" for x in [header] + body)
        for suffix, content in ((".tsv", tsv), (".txt", text)):
            (out / (name + suffix)).write_text(content)
            written.append(name + suffix)
    return written


def write_manifest(path: Path, fields: list[tuple[str, str]]) -> None:
    """``key: value`` lines in the order given (see README for the field list)."""
    path.write_text("".join(f"{k}: {v}\n" for k, v in fields))


def _run_one(item):
    q, checks = item
    return run_checks(q, checks)


def cmd_scan(args) -> int:
    if args.from_ > args.to or args.from_ < 2:
        raise IneligibleOrder(f"bad range {args.from_}..{args.to}")
    checks = args.checks
    qs = paley_orders(args.from_, args.to)
    started = _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    t0 = time.perf_counter()
    items = [(q, checks) for q in qs]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            per_q = list(pool.map(_run_one, items))
    else:
        per_q = [_run_one(it) for it in items]
    results = sorted((r for rs in per_q for r in rs), key=lambda r: (r.q, checks.index(r.check)))
    elapsed = time.perf_counter() - t0

    out = Path(args.out)
    written = write_reports(results, checks, out)
    bad = [r for r in results if r.status in (FAIL, ERROR)]
    manifest = [
        ("command", " ".join(["paley", *args.argv])),
        ("version", __version__),
        ("backend", kernels.backend_name()),
        ("q_from", str(args.from_)),
        ("q_to", str(args.to)),
        ("orders", ",".join(map(str, qs))),
        ("checks", ",".join(checks)),
        ("jobs", str(args.jobs)),
        ("started", started),
        ("elapsed_seconds", f"{elapsed:.3f}"),
    ]
    for name in checks:
        counts = {s: sum(1 for r in results if r.check == name and r.status == s) for s in ("pass", FAIL, SKIP, ERROR)}
        manifest.append((f"result.{name}", " ".join(f"{k}={v}" for k, v in counts.items())))
    for q, rs in zip(qs, per_q):
        manifest.append((f"q.{q}", " ".join(f"{r.check}={r.status}" for r in rs)))
    manifest.append(("skipped", "; ".join(f"{r.q}:{r.check} ({r.note})" for r in results if r.status == SKIP) or "-"))
    manifest.append(("failures", "; ".join(f"{r.q}:{r.check}" + (f" ({r.note})" if r.note else "") for r in bad) or "-"))
    manifest.append(("outputs", ",".join(written + ["manifest.txt"])))
    manifest.append(("status", "fail" if bad else "pass"))
    write_manifest(out / "manifest.txt", manifest)

    for name in checks:
        print(f"{name}: " + dict(manifest)[f"result.{name}"])
    print(f"status: {'fail' if bad else 'pass'} ({len(qs)} orders, {elapsed:.1f}s) -> {out}")
    return EXIT_VIOLATION if bad else EXIT_OK


# --- curve ---

def cmd_curve(args) -> int:
    spec = _eligible(args.q)
    a, b, c = args.roots
    for v in (a, b, c):
        if not 0 <= v < spec.q:
            raise IneligibleOrder(f"{v} is not an element of GF({spec.q})")
    if len({a, b, c}) != 3:
        raise NotDistinct((a, b, c))
    require_paley(spec)
    rep = count_points(spec, a, b, c)
    _, R = triple_charsum_terms(spec, a, b, c)
    lines = [
        ("q", spec.q),
        ("roots", f"{a},{b},{c}"),
        ("S", rep.S),
        ("m", rep.m),
        ("N", rep.N),
        ("supersingular", str(rep.supersingular_flag).lower()),
        ("hasse_slack", rep.hasse_slack),
        ("R", R),
        ("n111", triple_via_charsum(spec, a, b, c)),
    ]
    for k, v in lines:
        print(f"{k}: {v}")
    return EXIT_OK


# --- argument parsing ---

def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _check_list(text: str) -> list[str]:
    names = [x.strip() for x in text.split(",") if x.strip()]
    unknown = [n for n in names if n not in CHECKS]
    if unknown or not names:
        raise argparse.ArgumentTypeError(f"unknown checks {unknown}; choose from {','.join(CHECKS)}")
    return names


def _roots(text: str) -> list[int]:
    vals = _int_list(text)
    if len(vals) != 3:
        raise argparse.ArgumentTypeError("--roots takes exactly three elements a,b,c")
    return vals


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="paley", description="Paley graph intersection numbers and verification scans.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="small-q table of triple intersection numbers")
    t.add_argument("--q", type=_int_list, default=[5, 9, 13, 17, 25, 29])
    t.add_argument("--format", choices=("text", "tsv"), default="text")
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("scan", help="exhaustive checks over a range of q")
    s.add_argument("--from", dest="from_", type=int, required=True)
    s.add_argument("--to", type=int, required=True)
    s.add_argument("--checks", type=_check_list, default=list(CHECKS))
    s.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    s.add_argument("--out", default="reports")
    s.set_defaults(func=cmd_scan)

    c = sub.add_parser("curve", help="point count of y^2 = (x-a)(x-b)(x-c)")
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--roots", type=_roots, required=True)
    c.set_defaults(func=cmd_curve)
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    args.argv = argv
    try:
        return args.func(args)
    except PaleyError as exc:
        print(f"paley: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
