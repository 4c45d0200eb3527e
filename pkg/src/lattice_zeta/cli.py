"""Command-line front end: point evaluation, grid sweeps, acceptance suites.

Three subcommands share one flag vocabulary:

* ``eval``   one s point (``--s=re,im``), prints the value, or a table when
  an ``--n-list`` produces several rows;
* ``sweep``  a grid of s points (``--s-grid=re0:re1:k,im0:im1:m``) crossed
  with the n list, emitting CSV or JSON-lines rows;
* ``check``  a named acceptance suite, printing a pass/fail table.

Exit codes: 0 success, 1 suite failure, 2 argument error, 3 evaluation hit
a pole or left the mathematical domain.  Rows are emitted row-major over
the s grid, then over the n list, regardless of the worker pool order.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import MathDomainError, QuadratureError
from .graphs import xi_Z, zeta_Z, zeta_cycle, zeta_discrete_torus
from .lattices import DiagonalLattice
from .rh import (approx_fe_diff, h_n, h_n_general, h_ratio_sequence,
                 lemma_scan, multiple_zero_S, negativity_check,
                 profile_by_name, theorem1_check, wintner_probe)
from .suites import SUITES, run_suite
from .torus import zeta_real_torus
from .tree import zeta_tree_quadrature
from .zd import zeta_Zd

__all__ = ["main"]

TARGETS = ("zZ", "xiZ", "cycle", "torus-d", "zd", "rtorus", "tree", "h",
           "h-ratio", "S", "fe-diff", "thm1", "lemma-scan", "negativity",
           "wintner")

COLUMNS = ("re_s", "im_s", "n", "d", "re_value", "im_value", "abs_err_est",
           "extra")

MAX_GRID_POINTS = 10 ** 6


class UsageError(Exception):
    """Bad arguments detected after argparse (exit code 2)."""


def _fmt(x):
    """17 significant digits: enough to reconstruct any binary64 exactly."""
    return f"{float(x):.17g}"


def _fmt_any(x):
    xc = complex(x)
    if xc.imag == 0.0:
        return _fmt(xc.real)
    sign = "+" if xc.imag >= 0.0 else "-"
    return f"{_fmt(xc.real)}{sign}{_fmt(abs(xc.imag))}j"


def _parse_complex(text):
    parts = text.split(",")
    if len(parts) > 2:
        raise UsageError(f"bad complex literal {text!r}; expected re,im")
    try:
        re = float(parts[0])
        im = float(parts[1]) if len(parts) == 2 else 0.0
    except ValueError:
        raise UsageError(f"bad complex literal {text!r}; expected re,im")
    return complex(re, im)


def _parse_axis(text):
    fields = text.split(":")
    if len(fields) != 3:
        raise UsageError(f"bad grid axis {text!r}; expected lo:hi:count")
    try:
        lo, hi, count = float(fields[0]), float(fields[1]), int(fields[2])
    except ValueError:
        raise UsageError(f"bad grid axis {text!r}; expected lo:hi:count")
    if count < 1:
        raise UsageError("grid axis needs at least one point")
    if count == 1:
        return [lo]
    step = (hi - lo) / (count - 1)
    return [lo + i * step for i in range(count)]


def _parse_grid(text):
    """Row-major list of s points from ``re0:re1:k[,im0:im1:m]``."""
    parts = text.split(",")
    if len(parts) > 2:
        raise UsageError(f"bad grid spec {text!r}")
    re_axis = _parse_axis(parts[0])
    im_axis = _parse_axis(parts[1]) if len(parts) == 2 else [0.0]
    if len(re_axis) * len(im_axis) > MAX_GRID_POINTS:
        raise UsageError(f"grid exceeds {MAX_GRID_POINTS} points")
    return [complex(re, im) for re in re_axis for im in im_axis]


def _parse_int_list(text):
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}")
    if not values:
        raise UsageError("empty integer list")
    return values


def _parse_float_list(text):
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"bad number list {text!r}")
    if not values:
        raise UsageError("empty number list")
    return values


def _thread_count():
    raw = os.environ.get("LATTICE_ZETA_THREADS", "").strip()
    if raw:
        try:
            n = int(raw)
        except ValueError:
            raise UsageError(f"LATTICE_ZETA_THREADS={raw!r} is not an integer")
        if n < 1:
            raise UsageError("LATTICE_ZETA_THREADS must be >= 1")
        return n
    return os.cpu_count() or 1


class Row:
    """One output record; None fields print as empty CSV cells / JSON nulls."""

    __slots__ = ("s", "n", "d", "value", "abs_err", "extra")

    def __init__(self, s, value, n=None, d=None, abs_err=None, extra=""):
        self.s = complex(s)
        self.n = n
        self.d = d
        self.value = complex(value)
        self.abs_err = abs_err
        self.extra = extra

    def as_record(self):
        return {
            "re_s": self.s.real,
            "im_s": self.s.imag,
            "n": self.n,
            "d": self.d,
            "re_value": self.value.real,
            "im_value": self.value.imag,
            "abs_err_est": self.abs_err,
            "extra": self.extra,
        }


def _csv_cell(key, value):
    if value is None:
        return ""
    if key in ("n", "d"):
        return str(value)
    if key == "extra":
        text = str(value)
        if any(ch in text for ch in ',"\n'):
            text = '"' + text.replace('"', '""') + '"'
        return text
    return _fmt(value)


def _emit(rows, fmt, stream):
    if fmt == "csv":
        stream.write(",".join(COLUMNS) + "\n")
        for row in rows:
            rec = row.as_record()
            stream.write(",".join(_csv_cell(k, rec[k]) for k in COLUMNS) + "\n")
    else:
        for row in rows:
            rec = row.as_record()
            stream.write(json.dumps(rec) + "\n")
    stream.flush()


def _scalar_text(value):
    value = complex(value)
    if value.imag == 0.0:
        return repr(value.real)
    sign = "+" if value.imag >= 0.0 else "-"
    return f"{value.real!r}{sign}{abs(value.imag)!r}j"


# ---------------------------------------------------------------------------
# target evaluation


def _require(condition, message):
    if not condition:
        raise UsageError(message)


def _lattice_from(job):
    _require(job.a is not None, f"target {job.target!r} needs --a=a1,a2,...")
    return DiagonalLattice(tuple(job.a))


def _point_evaluator(job):
    """Return f(s, n) -> Row for targets evaluated one (s, n) at a time."""
    target = job.target
    if target == "zZ":
        return lambda s, n: Row(s, zeta_Z(s))
    if target == "xiZ":
        return lambda s, n: Row(s, xi_Z(s))
    if target == "cycle":
        return lambda s, n: Row(s, zeta_cycle(n, s), n=n)
    if target == "zd":
        _require(job.d is not None, "target 'zd' needs --d")
        return lambda s, n: Row(s, zeta_Zd(job.d, s), d=job.d)
    if target == "rtorus":
        lattice = _lattice_from(job)
        return lambda s, n: Row(s, zeta_real_torus(lattice, s), d=lattice.d)
    if target == "torus-d":
        lattice = _lattice_from(job)

        def one(s, n):
            sides = lattice.sides(1 if n is None else n)
            return Row(s, zeta_discrete_torus(sides, s), n=n, d=lattice.d)
        return one
    if target == "tree":
        _require(job.q is not None, "target 'tree' needs --q")

        def one(s, n):
            res = zeta_tree_quadrature(job.q, s)
            return Row(s, res.value, abs_err=res.abs_err,
                       extra=f"q={_fmt(job.q)}")
        return one
    if target == "h":
        if job.f is None:
            return lambda s, n: Row(s, h_n(s, n), n=n)
        profile = profile_by_name(job.f)
        return lambda s, n: Row(s, h_n_general(profile, s, n), n=n,
                                extra=f"f={job.f}")
    if target == "S":
        return lambda s, n: Row(s, multiple_zero_S(s, n), n=n)
    if target == "fe-diff":
        return lambda s, n: Row(s, approx_fe_diff(s, n), n=n)
    return None


NEEDS_N = {"cycle", "h", "S", "fe-diff"}


def _t_of(s):
    """Frequency parameter for the scan targets: Im s when set, else Re s."""
    return s.imag if s.imag != 0.0 else s.real


def _rows_per_s(job, s):
    """Targets whose natural unit of work is a whole n list at one s."""
    target = job.target
    if target == "h-ratio":
        _require(job.n_list, "target 'h-ratio' needs --n or --n-list")
        ratios = h_ratio_sequence(s, job.n_list)
        return [Row(s, r, n=n) for n, r in zip(job.n_list, ratios)]
    if target == "thm1":
        _require(job.n_list, "target 'thm1' needs --n or --n-list")
        lattice = _lattice_from(job)
        rep = theorem1_check(lattice, s, job.n_list)
        rows = []
        for n, resid, terms in zip(rep.n_list, rep.residuals, rep.model_terms):
            extra = (f"lattice={_fmt_any(terms['lattice'])};"
                     f"torus={_fmt_any(terms['torus'])};"
                     f"fitted_order={_fmt(rep.fitted_order)}")
            rows.append(Row(s, resid, n=n, d=lattice.d, extra=extra))
        return rows
    if target == "wintner":
        _require(job.n_list, "target 'wintner' needs --n or --n-list")
        rep = wintner_probe(_t_of(s), job.n_list)
        rows = []
        for i, n in enumerate(rep.n_list):
            extra = (f"amplitude={_fmt(rep.amplitudes[i])};"
                     f"amplitude_target={_fmt(rep.amplitude_target)}")
            rows.append(Row(s, rep.sequence[i], n=n, extra=extra))
        return rows
    raise AssertionError(target)


def _scan_rows(job):
    """lemma-scan and negativity: rows indexed by sigma, not by (s, n)."""
    if job.target == "negativity":
        _require(job.s_values is not None and len(job.s_values) >= 1,
                 "target 'negativity' needs --s or --s-grid")
        rows = []
        for s in job.s_values:
            rep = negativity_check(s.real)
            rows.append(Row(complex(s.real, 0.0), rep.zeta_value,
                            extra=f"bound={_fmt(rep.bound)};"
                                  f"holds={rep.holds}"))
        return rows
    # lemma-scan: --s=0,t scans a default 200-point sigma grid at height t;
    # --s-grid=s0:s1:k,t:t:1 takes the sigmas from the real axis instead.
    _require(job.s_values is not None and len(job.s_values) >= 1,
             "target 'lemma-scan' needs --s=0,t or --s-grid=s0:s1:k,t:t:1")
    t = _t_of(job.s_values[0])
    if job.grid_spec is not None:
        sigmas = []
        for s in job.s_values:
            if not sigmas or s.real != sigmas[-1]:
                sigmas.append(s.real)
    else:
        sigmas = [(i + 0.5) / 200.0 for i in range(200)]
    rep = lemma_scan(t, sigmas)
    cross = "" if rep.crossing_sigma is None else _fmt(rep.crossing_sigma)
    rows = []
    for sigma, lhs, rhs in zip(rep.sigma_grid, rep.lhs, rep.rhs):
        extra = f"rhs={_fmt(rhs)};crossing_sigma={cross}"
        rows.append(Row(complex(sigma, t), lhs, extra=extra))
    return rows


def _evaluate(job):
    if job.target in ("lemma-scan", "negativity"):
        return _scan_rows(job)

    _require(job.s_values, f"target {job.target!r} needs --s or --s-grid")
    if job.target in ("h-ratio", "thm1", "wintner"):
        units = [(s,) for s in job.s_values]
        worker = lambda args: _rows_per_s(job, args[0])
        expected_rows = len(units) * len(job.n_list or [])
    else:
        one = _point_evaluator(job)
        if job.target in NEEDS_N:
            _require(job.n_list, f"target {job.target!r} needs --n or --n-list")
        n_values = job.n_list if job.n_list else [None]
        units = [(s, n) for s in job.s_values for n in n_values]
        worker = lambda args: [one(*args)]
        expected_rows = len(units)

    if expected_rows > MAX_GRID_POINTS:
        raise UsageError(f"job exceeds {MAX_GRID_POINTS} rows")

    if len(units) == 1:
        batches = [worker(units[0])]
    else:
        # map() already yields results in submission order, so the emitted
        # table is deterministic no matter how workers interleave.
        with ThreadPoolExecutor(max_workers=_thread_count()) as pool:
            batches = list(pool.map(worker, units))
    return [row for batch in batches for row in batch]


# ---------------------------------------------------------------------------
# argument plumbing


class JobSpec:
    __slots__ = ("target", "s_values", "grid_spec", "n_list", "d", "a", "q",
                 "f", "out", "format")


def _build_job(args):
    job = JobSpec()
    target = args.target_flag or args.target
    if target is None:
        raise UsageError("no target given; pass one of " + ", ".join(TARGETS))
    if args.target and args.target_flag and args.target != args.target_flag:
        raise UsageError("positional target and --target disagree")
    if target not in TARGETS:
        raise UsageError(f"unknown target {target!r}; expected one of "
                         + ", ".join(TARGETS))
    job.target = target

    if args.s is not None and args.s_grid is not None:
        raise UsageError("give either --s or --s-grid, not both")
    job.grid_spec = args.s_grid
    if args.s is not None:
        job.s_values = [_parse_complex(args.s)]
    elif args.s_grid is not None:
        job.s_values = _parse_grid(args.s_grid)
    else:
        job.s_values = None

    if args.n is not None and args.n_list is not None:
        raise UsageError("give either --n or --n-list, not both")
    if args.n_list is not None:
        job.n_list = _parse_int_list(args.n_list)
    elif args.n is not None:
        job.n_list = [args.n]
    else:
        job.n_list = None

    job.d = args.d
    job.a = _parse_float_list(args.a) if args.a is not None else None
    job.q = args.q
    job.f = args.f
    job.out = args.out
    job.format = args.format
    return job


def _run_eval(args, single_point):
    job = _build_job(args)
    if single_point and job.s_values is not None and len(job.s_values) > 1:
        raise UsageError("eval takes a single --s point; use sweep for grids")
    rows = _evaluate(job)

    if job.out is None and single_point and len(rows) == 1:
        print(_scalar_text(rows[0].value))
        return 0
    if job.out is None:
        _emit(rows, job.format, sys.stdout)
        return 0
    with open(job.out, "w", encoding="utf-8", newline="") as handle:
        _emit(rows, job.format, handle)
    return 0


def _run_check(args):
    name = args.suite
    if name not in SUITES:
        raise UsageError(f"unknown suite {name!r}; expected one of "
                         + ", ".join(sorted(SUITES)))
    results, all_ok = run_suite(name)
    width = max(len(r.title) for r in results)
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"[{r.cid:2d}] {r.title:<{width}}  {status}  "
              f"{r.runtime:8.2f}s / {r.limit:g}s  {r.detail}")
    print(f"suite {name!r}: {'all criteria passed' if all_ok else 'FAILED'}")
    return 0 if all_ok else 1


def _make_parser():
    parser = argparse.ArgumentParser(
        prog="lattice-zeta",
        description="Spectral zeta functions of lattices, tori and trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_value_flags(p):
        p.add_argument("target", nargs="?", default=None,
                       help="what to evaluate: " + ", ".join(TARGETS))
        p.add_argument("--target", dest="target_flag", default=None)
        p.add_argument("--s", default=None, help="complex point re,im")
        p.add_argument("--s-grid", default=None,
                       help="grid re0:re1:k[,im0:im1:m]")
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--n-list", default=None, help="comma-separated sizes")
        p.add_argument("--d", type=int, default=None, help="lattice dimension")
        p.add_argument("--a", default=None, help="torus sides a1,a2,...")
        p.add_argument("--q", type=float, default=None, help="tree branching")
        p.add_argument("--f", default=None, choices=("sin", "quartic"),
                       help="profile for the generalized h target")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", default="csv", choices=("csv", "json"))

    add_value_flags(sub.add_parser("eval", help="evaluate at one s point"))
    add_value_flags(sub.add_parser("sweep", help="evaluate over an s grid"))
    check = sub.add_parser("check", help="run a named acceptance suite")
    check.add_argument("suite", help="one of " + ", ".join(sorted(SUITES)))
    return parser


def main(argv=None):
    parser = _make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "check":
            return _run_check(args)
        return _run_eval(args, single_point=(args.command == "eval"))
    except UsageError as exc:
        print(f"lattice-zeta: {exc}", file=sys.stderr)
        return 2
    except MathDomainError as exc:
        print(f"lattice-zeta: {exc}", file=sys.stderr)
        return 3
    except QuadratureError as exc:
        print(f"lattice-zeta: quadrature failed: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        # the reader went away (e.g. `lattice-zeta sweep ... | head`); point
        # stdout at devnull so the interpreter's shutdown flush stays quiet
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 141


if __name__ == "__main__":
    sys.exit(main())
