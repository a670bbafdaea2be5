"""Command line: verify suites, compute objects, replay failures.

Exit codes: 0 all good, 1 a verification failure, 2 usage or internal error.
"""
import argparse
import os
import sys

from . import __version__
from .checks import SUITES
from .oracle import SpecConfig

OBJECTS = ("loop-e", "loop-schur", "cylindric", "R-image", "tilde-R", "y-R",
           "quantum-R", "geometric-R", "quiver")


class UsageError(Exception):
    pass


def _ints(text):
    try:
        return tuple(int(x) for x in str(text).replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError("expected comma-separated integers, got %r" % text)


def read_config(path):
    """``key = value`` lines; '#' starts a comment.  Keys mirror the long
    flags (dashes or underscores both accepted)."""
    out = {}
    try:
        fh = open(path)
    except OSError as exc:
        raise UsageError("cannot read config %s: %s" % (path, exc.strerror))
    with fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError("%s:%d: expected key = value" % (path, lineno))
            k, v = (s.strip() for s in line.split("=", 1))
            out[k.replace("-", "_")] = v
    return out


CONFIG_KEYS = {"n", "m", "trials", "root_orders", "prime_bits", "seed", "format",
               "workers", "out", "max_dim", "figures", "timing", "allow_large"}


def _merge_config(args):
    """Values from --config fill in whatever was not given on the command line."""
    if not args.config:
        return
    conf = read_config(args.config)
    unknown = set(conf) - CONFIG_KEYS
    if unknown:
        raise UsageError("unknown config keys: " + ", ".join(sorted(unknown)))
    for k, v in conf.items():
        if getattr(args, k, None) in (None, False):
            if k in ("timing", "allow_large"):
                v = v.lower() in ("1", "true", "yes", "on")
            setattr(args, k, v)


def spec_config(args):
    d = SpecConfig().to_dict()
    if args.trials is not None:
        d["trials"] = int(args.trials)
    if args.root_orders is not None:
        d["root_orders"] = _ints(args.root_orders)
    if args.prime_bits is not None:
        d["prime_bits"] = int(args.prime_bits)
    if args.seed is not None:
        d["seed"] = int(args.seed)
    if args.max_dim is not None:
        d["max_dim"] = int(args.max_dim)
    if d["trials"] < 1 or d["prime_bits"] < 8 or not d["root_orders"]:
        raise UsageError("need trials >= 1, prime bits >= 8 and at least one root order")
    return SpecConfig.from_dict(d)


def _write(args, data):
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _figure_dir(args):
    if args.figures:
        os.makedirs(args.figures, exist_ok=True)
    return args.figures


# ---------------------------------------------------------------- verify

def cmd_verify(args):
    from . import harness

    fmt = args.format or "text"
    if fmt not in ("json", "text"):
        raise UsageError("format must be json or text")
    if args.suite not in SUITES and args.suite not in ("all", "empty"):
        raise UsageError("unknown suite %r; try one of: %s" % (
            args.suite, ", ".join(sorted(SUITES) + ["all", "empty"])))
    try:
        spec = harness.SuiteSpec(args.suite, _ints(args.n) if args.n else None,
                                 _ints(args.m) if args.m else None, spec_config(args),
                                 int(args.workers or 1), bool(args.allow_large))
    except ValueError as exc:
        raise UsageError(str(exc))
    reports = harness.run_suite(spec)
    _write(args, harness.emit_report(reports, fmt, spec, timing=bool(args.timing)))
    figdir = _figure_dir(args)
    if figdir and reports:
        from . import plotting
        plotting.verdict_summary(reports, os.path.join(figdir, "verdicts.png"))
        plotting.check_times(reports, os.path.join(figdir, "timings.png"))
    return harness.exit_code(reports)


# ---------------------------------------------------------------- compute

def _one(text, default, name):
    if text is None:
        return default
    vals = _ints(text)
    if len(vals) != 1:
        raise UsageError("--%s takes a single integer for compute" % name)
    return vals[0]


def _parse_columns(text):
    """'2:3,1:1' -> [(2, 3), (1, 1)]"""
    try:
        return [tuple(int(x) for x in c.split(":")) for c in text.split(",")]
    except ValueError:
        raise UsageError("columns look like top:bottom,top:bottom")


def _label_text(v):
    from .qtorus import format_gen
    from .quiver import format_label, is_frozen_label

    if isinstance(v, tuple) and len(v) == 2 and v[0] == "y":
        return "y" + format_label(v[1])
    if isinstance(v, tuple) and len(v) == 2 and all(isinstance(a, int) for a in v):
        return "x" + format_label(v)
    if is_frozen_label(v):
        return format_label(v)
    return format_gen(v)


def _ratfunc_lines(images, fmt_label):
    out = []
    for v in sorted(images):
        f = images[v]
        num, den = f.num.to_text(_label_text), f.den.to_text(_label_text)
        out.append("%s -> %s" % (fmt_label(v), num if den == "1" else "(%s) / (%s)" % (num, den)))
    return out


def compute(obj, n, m, k=1, r=1, c=1, lam=(2, 1), mu=(), s=None, columns=None, figures=None):
    """Return the text rendering of a computed object (and draw it when a
    figure directory is given)."""
    from . import network as nw
    from .core import LaurentRing
    from .quiver import build_Q, build_Q_tilde, format_label

    lines = []
    if obj == "loop-e":
        net = nw.CylNetwork(n, m)
        lines.append(nw.loop_e(net, k, r).to_text())
    elif obj == "loop-schur":
        net = nw.CylNetwork(n, m)
        shape = nw.SkewShape(lam, mu)
        lines.append(nw.loop_schur(net, shape, r).to_text())
        if figures:
            from .plotting import draw_paths
            src, snk = nw.shape_paths(shape, r, m)
            draw_paths(net, nw.path_families(net, src, snk, cover=True),
                       os.path.join(figures, "loop_schur_paths.png"), "paths for the skew shape")
    elif obj == "cylindric":
        if s is None or columns is None:
            raise UsageError("cylindric needs --s and --columns")
        net = nw.CylNetwork(n, m)
        D = nw.CylindricShape(n, s, columns)
        lines.append(nw.cylindric_loop_schur(net, D, r).to_text())
        if figures:
            from .plotting import draw_paths
            src, snk = nw.cylindric_paths(D, r, m)
            draw_paths(net, nw.path_families(net, src, snk, cover=False),
                       os.path.join(figures, "cylindric_paths.png"), "paths for the cylindric shape")
    elif obj in ("R-image", "tilde-R"):
        from .seeds import closed_R_x, closed_tilde_R
        if not 0 < c < m:
            raise UsageError("closed forms are printed for interior cycles 1..m-1")
        Q = build_Q_tilde(n, m) if obj == "tilde-R" else build_Q(n, m)
        ring = LaurentRing(Q.labels)
        f = closed_tilde_R if obj == "tilde-R" else closed_R_x
        for i in range(1, n + 1):
            lines.append("%s -> %s" % (_label_text((c, i)), f(n, c, ring, i).to_text(_label_text)))
    elif obj == "y-R":
        from .seeds import closed_R_y_classical
        Q = build_Q(n, m)
        ring = LaurentRing([("y", v) for v in Q.labels])
        lines += _ratfunc_lines(closed_R_y_classical(n, c, m, ring), lambda v: "y" + format_label(v))
    elif obj == "quantum-R":
        from .oracle import to_text
        from .rmatrices import quantum_cluster_R_y
        images = quantum_cluster_R_y(n, c, m)
        for v in sorted(images):
            lines.append("%s -> %s" % (format_label(v), to_text(images[v])))
    elif obj == "geometric-R":
        from .rmatrices import GeometricR
        lines += _ratfunc_lines(GeometricR(n).images, _label_text)
    elif obj == "quiver":
        Q = build_Q(n, m)
        lines.append(Q.to_text())
        if figures:
            from .plotting import draw_quiver
            draw_quiver(Q, os.path.join(figures, "quiver_n%d_m%d.png" % (n, m)), n, m)
    else:
        raise UsageError("unknown object %r; try one of: %s" % (obj, ", ".join(OBJECTS)))
    return "\n".join(lines) + "\n"


def cmd_compute(args):
    n = _one(args.n, 3, "n")
    m = _one(args.m, 3, "m")
    if n < 3 or m < 1:
        raise UsageError("need n >= 3 and m >= 1")
    if not args.allow_large and (n > 6 or m > 4):
        raise UsageError("n <= 6 and m <= 4 unless --allow-large")
    try:
        text = compute(args.object, n, m, k=args.k, r=args.r, c=args.cycle,
                       lam=_ints(args.lam), mu=_ints(args.mu), s=args.s,
                       columns=_parse_columns(args.columns) if args.columns else None,
                       figures=_figure_dir(args))
    except ValueError as exc:
        raise UsageError(str(exc))
    _write(args, text.encode())
    return 0


# ---------------------------------------------------------------- replay

def cmd_replay(args):
    from . import harness

    try:
        with open(args.file, "rb") as fh:
            data = fh.read()
        results = harness.replay(data)
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError("cannot replay %s: %s" % (args.file, exc))
    lines = ["%s %s" % ("reproduced" if ok else "NOT reproduced", cid) for cid, ok in results]
    if not results:
        lines.append("no failing checks in report")
    _write(args, ("\n".join(lines) + "\n").encode())
    if any(not ok for _, ok in results):
        return 2
    return 1 if results else 0


# ---------------------------------------------------------------- entry

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", help="n value(s), comma separated")
    common.add_argument("--m", help="m value(s), comma separated")
    common.add_argument("--trials", help="oracle trials per root order")
    common.add_argument("--root-orders", help="orders of the roots of unity, e.g. 5,7,11")
    common.add_argument("--prime-bits", help="bit size of the random primes")
    common.add_argument("--seed", help="random seed")
    common.add_argument("--max-dim", help="largest matrix dimension for the oracle")
    common.add_argument("--format", choices=("json", "text"))
    common.add_argument("--workers", help="parallel worker processes")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--figures", help="directory for png figures")
    common.add_argument("--config", help="key = value file mirroring the flags")
    common.add_argument("--timing", action="store_true", default=None,
                        help="include wall times (breaks byte determinism)")
    common.add_argument("--allow-large", action="store_true", default=None)

    p = argparse.ArgumentParser(prog="clusterr", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version="clusterr " + __version__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", help="suite name, 'all' or 'empty'")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compute", parents=[common], help="print a computed object")
    c.add_argument("object", choices=OBJECTS)
    c.add_argument("--k", type=int, default=1, help="degree for loop-e")
    c.add_argument("--r", type=int, default=1, help="row offset for loop functions")
    c.add_argument("--cycle", type=int, default=1, help="cycle for R-matrix images")
    c.add_argument("--lam", default="2,1", help="outer partition")
    c.add_argument("--mu", default="", help="inner partition")
    c.add_argument("--s", type=int, help="shift of a cylindric shape")
    c.add_argument("--columns", help="cylindric columns as top:bottom,...")
    c.set_defaults(func=cmd_compute)

    r = sub.add_parser("replay", parents=[common], help="re-run the failures of a json report")
    r.add_argument("file")
    r.set_defaults(func=cmd_replay)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on bad usage
    try:
        _merge_config(args)
        return args.func(args)
    except UsageError as exc:
        print("clusterr: error: %s" % exc, file=sys.stderr)
        return 2
    except Exception as exc:  # internal error
        print("clusterr: internal error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
