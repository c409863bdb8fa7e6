"""Command-line front end: evaluation, error maps, sweeps, timings, tables.

Every command emits plain CSV (header row, comma separators, no quoting)
so plotting stays external. Exit codes: 0 success, 2 usage or parse
problem, 3 singular evaluation point, 4 oracle accuracy failure.
"""

import argparse
import csv
import math
import os
import statistics
import sys
import time
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import AccuracyError, CapacityError, SingularPointError
from .quadrature import ref_square_table
from .square import (
    MAX_TOTAL_DEGREE,
    CoeffMatrix,
    log_table,
    potential_eval,
    stieltjes_table,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SINGULAR = 3
EXIT_ACCURACY = 4

_ORACLE_TOL = 1e-12
_ORACLE_MAX_DEGREE = 12
_CORNERS = ((1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0))


def _fmt(v):
    # shortest decimal that round-trips the double
    return repr(float(v))


def _thread_count():
    raw = os.environ.get("POTREC_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _map_points(fn, items):
    n = _thread_count()
    if n > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=n) as ex:
            return list(ex.map(fn, items))
    return [fn(it) for it in items]


def _read_coeffs(path):
    rows = []
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise ValueError("cannot open coefficient file: %s" % exc)
    with fh:
        for ln, row in enumerate(csv.reader(fh), start=1):
            if not row or all(c.strip() == "" for c in row):
                continue
            try:
                vals = [float(c) for c in row]
            except ValueError:
                raise ValueError(
                    "%s: line %d: coefficient row is not numeric" % (path, ln)
                )
            if rows and len(vals) != len(rows[0]):
                raise ValueError(
                    "%s: line %d: expected %d columns, got %d"
                    % (path, ln, len(rows[0]), len(vals))
                )
            rows.append(vals)
    if not rows:
        raise ValueError("%s: no coefficient rows" % path)
    return np.array(rows)


def _read_points(path):
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise ValueError("cannot open point file: %s" % exc)
    pts = []
    with fh:
        header_seen = False
        for ln, row in enumerate(csv.reader(fh), start=1):
            if not row or all(c.strip() == "" for c in row):
                continue
            cells = [c.strip() for c in row]
            if not header_seen:
                if [c.lower() for c in cells] != ["x", "y"]:
                    raise ValueError(
                        '%s: line %d: expected header "x,y"' % (path, ln)
                    )
                header_seen = True
                continue
            if len(cells) != 2:
                raise ValueError(
                    "%s: line %d: expected 2 columns, got %d"
                    % (path, ln, len(cells))
                )
            try:
                pts.append((float(cells[0]), float(cells[1])))
            except ValueError:
                raise ValueError("%s: line %d: point is not numeric" % (path, ln))
        if not header_seen:
            raise ValueError('%s: missing header "x,y"' % path)
    return pts


def _write_csv(out_path, header, rows):
    lines = [",".join(header)]
    lines.extend(",".join(r) for r in rows)
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _table_values(kind, z, p, precision):
    builder = log_table if kind == "log" else stieltjes_table
    t = builder(z, p, precision=precision)
    return t.data if precision == "double" else t.approx


def _grid_axis(lo, hi, n):
    if n < 1:
        raise ValueError("grid counts must be >= 1")
    return np.linspace(lo, hi, n)


# ------------------------------------------------------------------ commands


def cmd_eval(args):
    coeffs = CoeffMatrix.from_array(_read_coeffs(args.coeffs))
    if coeffs.m + coeffs.n > MAX_TOTAL_DEGREE:
        raise CapacityError(
            "total degree %d exceeds the supported maximum %d"
            % (coeffs.m + coeffs.n, MAX_TOTAL_DEGREE)
        )
    points = _read_points(args.points)

    def one(pt):
        x, y = pt
        try:
            res = potential_eval(coeffs, complex(x, y), precision=args.precision)
        except SingularPointError:
            nan = _fmt(math.nan)
            return [_fmt(x), _fmt(y), nan, nan, nan, "corner-singular"]
        status = "far-field" if res.advisory else "ok"
        return [
            _fmt(x),
            _fmt(y),
            _fmt(res.potential),
            _fmt(res.gradient[0]),
            _fmt(res.gradient[1]),
            status,
        ]

    rows = _map_points(one, points)
    _write_csv(
        args.out, ["x", "y", "potential", "grad_x", "grad_y", "status"], rows
    )
    return EXIT_OK


def cmd_errgrid(args):
    if args.p > _ORACLE_MAX_DEGREE:
        raise ValueError(
            "errgrid degree is limited to %d by oracle cost" % _ORACLE_MAX_DEGREE
        )
    if args.p < 0:
        raise ValueError("degree must be nonnegative")
    nx, ny = args.grid
    xmin, xmax, ymin, ymax = args.window
    xs = _grid_axis(xmin, xmax, nx)
    ys = _grid_axis(ymin, ymax, ny)
    p = args.p
    tri = [(k, j) for k in range(p + 1) for j in range(p + 1 - k)]

    def one(pt):
        x, y = pt
        if (x, y) in _CORNERS:
            return [_fmt(x), _fmt(y), _fmt(math.nan)]
        z = complex(x, y)
        approx = _table_values("log", z, p, args.precision)
        oracle = ref_square_table("log", p, p, z, _ORACLE_TOL)
        err = max(abs(approx[k, j] - oracle[k, j]) for k, j in tri)
        return [_fmt(x), _fmt(y), _fmt(err)]

    pts = [(x, y) for y in ys for x in xs]
    rows = _map_points(one, pts)
    _write_csv(args.out, ["x", "y", "maxabserr"], rows)
    return EXIT_OK


def cmd_errsweep(args):
    if args.pmax > MAX_TOTAL_DEGREE:
        raise ValueError(
            "pmax %d exceeds the supported maximum %d"
            % (args.pmax, MAX_TOTAL_DEGREE)
        )
    points = _read_points(args.points)
    psamples = list(range(5, args.pmax + 1, 5))
    rows = []

    def sweep(item):
        pid, (x, y) = item
        z = complex(x, y)
        out = []
        qmax = min(args.pmax, _ORACLE_MAX_DEGREE)
        oracles = {
            kind: ref_square_table(kind, qmax, qmax, z, _ORACLE_TOL)
            for kind in ("log", "stieltjes")
        }
        for p in psamples:
            for kind in ("log", "stieltjes"):
                native = _table_values(kind, z, p, "double")
                dwtab = _table_values(kind, z, p, "doubleword")
                # native error against the extended-precision run of the
                # same recurrence: the only reference that tracks p
                err_nat = max(
                    abs(native[k, j] - dwtab[k, j])
                    for k in range(p + 1)
                    for j in range(p + 1 - k)
                )
                out.append(
                    [str(pid), str(p), "double", kind, _fmt(err_nat), "dw-reference"]
                )
                # extended-precision error against the quadrature oracle on
                # the sub-table the oracle can reach
                q = min(p, _ORACLE_MAX_DEGREE)
                oracle = oracles[kind]
                err_dw = max(
                    abs(dwtab[k, j] - oracle[k, j])
                    for k in range(q + 1)
                    for j in range(q + 1 - k)
                )
                out.append(
                    [
                        str(pid),
                        str(p),
                        "doubleword",
                        kind,
                        _fmt(err_dw),
                        "oracle-subtable",
                    ]
                )
        return out

    for chunk in _map_points(sweep, list(enumerate(points))):
        rows.extend(chunk)
    _write_csv(
        args.out,
        ["point_id", "p", "precision", "kind", "err", "methodology"],
        rows,
    )
    return EXIT_OK


def _bench_samples(pmax):
    return [p for p in [5, 10] + list(range(20, 101, 10)) if p <= pmax]


def cmd_bench(args):
    if args.reps < 3:
        raise ValueError("bench needs at least 3 repetitions")
    z = 0.3 + 0.4j
    rows = []
    for p in _bench_samples(args.pmax):
        side = np.linspace(0.5, 1.5, p + 1)
        proxy_pts = side[None, :] + 1j * side[:, None]
        methods = [
            ("recurrence_double", lambda: log_table(z, p, precision="double")),
            (
                "recurrence_doubleword",
                lambda: log_table(z, p, precision="doubleword"),
            ),
            ("kernel_proxy", lambda: np.log(proxy_pts)),
        ]
        for name, fn in methods:
            fn()  # warmup, also triggers any lazy compilation
            times = []
            for _ in range(args.reps):
                t0 = time.perf_counter_ns()
                fn()
                times.append(time.perf_counter_ns() - t0)
            rows.append([str(p), name, str(int(statistics.median(times)))])
    _write_csv(args.out, ["p", "method", "median_ns"], rows)
    return EXIT_OK


def cmd_table(args):
    z = complex(args.x, args.y)
    vals = _table_values(args.kind, z, args.p, args.precision)
    for k in range(args.p + 1):
        for j in range(args.p + 1 - k):
            v = vals[k, j]
            print("%d,%d,%s,%s" % (k, j, _fmt(v.real), _fmt(v.imag)))
    return EXIT_OK


# -------------------------------------------------------------------- parser


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="potrec",
        description="Logarithmic potentials of Legendre-product densities "
        "over the square, by bivariate recurrences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_precision(sp):
        sp.add_argument(
            "--precision",
            choices=("double", "doubleword"),
            default="double",
            help="arithmetic for the recurrences",
        )

    sp = sub.add_parser("eval", help="potential and gradient at listed points")
    sp.add_argument("--coeffs", required=True, help="coefficient CSV, rows k, columns j")
    sp.add_argument("--points", required=True, help='point CSV with header "x,y"')
    add_precision(sp)
    sp.add_argument("--out", help="output CSV path (default stdout)")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("errgrid", help="max table error vs oracle on a grid")
    sp.add_argument("--p", type=int, default=5, help="total degree (max 12)")
    sp.add_argument(
        "--grid", nargs=2, type=int, default=[41, 41], metavar=("NX", "NY")
    )
    sp.add_argument(
        "--window",
        nargs=4,
        type=float,
        default=[-2.0, 2.0, -2.0, 2.0],
        metavar=("XMIN", "XMAX", "YMIN", "YMAX"),
    )
    add_precision(sp)
    sp.add_argument("--out", help="output CSV path (default stdout)")
    sp.set_defaults(func=cmd_errgrid)

    sp = sub.add_parser(
        "errsweep", help="error growth in the degree, both precisions"
    )
    sp.add_argument("--points", required=True, help='point CSV with header "x,y"')
    sp.add_argument("--pmax", type=int, default=100, help="largest degree")
    sp.add_argument("--out", help="output CSV path (default stdout)")
    sp.set_defaults(func=cmd_errsweep)

    sp = sub.add_parser("bench", help="table build timings vs a log-call proxy")
    sp.add_argument("--pmax", type=int, default=100, help="largest degree")
    sp.add_argument("--reps", type=int, default=5, help="timed repetitions (min 3)")
    sp.add_argument("--out", help="output CSV path (default stdout)")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("table", help="print one moment table as k,j,re,im")
    sp.add_argument("kind", choices=("log", "stieltjes"))
    sp.add_argument("x", type=float)
    sp.add_argument("y", type=float)
    sp.add_argument("--p", type=int, default=0, help="total degree")
    add_precision(sp)
    sp.set_defaults(func=cmd_table)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SingularPointError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_SINGULAR
    except AccuracyError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ACCURACY
    except (CapacityError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
