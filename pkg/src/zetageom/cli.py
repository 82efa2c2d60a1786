"""Command-line front end: JSON evaluation, CSV emitters and SVG renders.

Exit codes: 0 success, 2 usage error (argparse), 3 domain error, 4 I/O
error. Output files are written atomically (temp + rename); CSV uses LF
endings, a header row and '.' decimals; JSON keys keep insertion order.

A config file (key=value lines, '#' comments) can preset defaults such as
grid_step, max_points or threads; command-line flags override it. The
ZETAGEOM_THREADS variable (or threads= in the config) bounds worker threads
for grid scans; evaluation results do not depend on it.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import tempfile

from .dw import SParam
from .errors import DomainError, ZerosParseError

_CSV_KW = dict(lineterminator="\n")


def _atomic_write(path: str, text: str):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".zetageom-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _csv_text(header, rows) -> str:
    import io

    buf = io.StringIO()
    w = csv.writer(buf, **_CSV_KW)
    w.writerow(header)
    for row in rows:
        w.writerow([x if isinstance(x, str) else repr(x) if isinstance(x, float)
                    else str(x) for x in row])
    return buf.getvalue()


def _load_config(path):
    cfg = {}
    if not path:
        return cfg
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise DomainError(f"config line without '=': {raw.strip()!r}")
            key, val = (p.strip() for p in line.split("=", 1))
            cfg[key] = val
    return cfg


def _eval_method(s: SParam, method: str):
    from . import zeta

    if method == "geometric":
        return zeta.zeta_geometric(s)
    if method == "em":
        import math as _m

        N = max(50, int(_m.ceil(s.t / _m.pi)) + 30)
        return zeta.zeta_em(s, N=N, order=16)
    if method == "rs":
        return zeta.riemann_siegel(s)
    if method == "direct":
        return zeta._zeta_direct(s)
    if method == "auto":
        return zeta.zeta_geometric(s)
    raise DomainError(f"unknown method {method!r}")


def cmd_eval(args) -> int:
    s = SParam(args.sigma, args.t)
    zv = _eval_method(s, args.method)
    payload = {
        "sigma": args.sigma,
        "t": args.t,
        "re": zv.value.real,
        "im": zv.value.imag,
        "method": zv.method,
        "est_error": zv.est_error,
    }
    print(json.dumps(payload))
    return 0


def cmd_scan(args) -> int:
    from .zeros import scan_zeros

    records = scan_zeros(args.lo, args.hi, grid_step=args.grid_step)
    text = _csv_text(["index", "alpha", "source"],
                     [(r.index, r.alpha, r.source) for r in records])
    if args.out:
        _atomic_write(args.out, text)
        print(f"{len(records)} zeros -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_gram(args) -> int:
    from .zeros import gram_point

    g = gram_point(args.n)
    print(json.dumps({"n": g.n, "t": g.t}))
    return 0


def cmd_render(args) -> int:
    from . import svg

    spec = svg.RenderSpec(
        kind=args.kind, out_path=args.out, sigma=args.sigma, t=args.t,
        n_lo=args.n_lo, n_hi=args.n_hi, stride=args.stride,
        gram_lo=args.gram_lo, gram_hi=args.gram_hi, grid=args.grid,
        width=args.width, height=args.height, max_points=args.max_points)
    if spec.kind == "argand":
        text = svg.render_argand(spec)
    elif spec.kind == "limacon":
        text = svg.render_limacon(spec)
    else:
        raise DomainError(
            "render supports kinds argand|limacon; use the landau/surface "
            "subcommands for table-backed figures")
    _atomic_write(spec.out_path, text)
    print(f"render {spec.kind} -> {spec.out_path}")
    return 0


def cmd_landau(args) -> int:
    from .arith import ensemble_real_sum, is_prime_power
    from .zeros import ingest_zeros, scan_zeros

    if args.zeros_file:
        zs = [r.alpha for r in ingest_zeros(args.zeros_file)]
    else:
        zs = [r.alpha for r in scan_zeros(max(args.t_min, 7.0), args.t_max)]
    zs = [a for a in zs if a <= args.t_max]
    table = ensemble_real_sum(zs, args.n_max)
    cum = dict(table.cumulative())
    rows = [(n, ch, cum[n], int(is_prime_power(n)))
            for n, ch in table.step_changes]
    text = _csv_text(["n", "change", "cumulative", "is_prime_power"], rows)
    if args.out:
        _atomic_write(args.out, text)
        print(f"landau table T={table.T} -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_surface(args) -> int:
    from .symmetry import pendant_center
    from .zeta import riemann_siegel

    rows = []
    for i in range(args.sigma_steps):
        sg = args.sigma_lo + (args.sigma_hi - args.sigma_lo) * i / max(args.sigma_steps - 1, 1)
        for j in range(args.t_steps):
            t = args.t_lo + (args.t_hi - args.t_lo) * j / max(args.t_steps - 1, 1)
            s = SParam(sg, t)
            pv = pendant_center(s).value
            zv = riemann_siegel(s).value
            rows.append((sg, t, pv.real, pv.imag, zv.real, zv.imag))
    text = _csv_text(["sigma", "t", "re_P", "im_P", "re_zeta", "im_zeta"], rows)
    if args.out:
        _atomic_write(args.out, text)
        print(f"surface grid -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def cmd_hurwitz(args) -> int:
    from .arith import hurwitz

    v = hurwitz(SParam(args.sigma, args.t), args.a)
    print(json.dumps({"sigma": args.sigma, "t": args.t, "a": args.a,
                      "re": v.real, "im": v.imag}))
    return 0


def cmd_lfunction(args) -> int:
    from .arith import characters, l_function

    chars = characters(args.k)
    if not 1 <= args.chi <= len(chars):
        raise DomainError(f"chi index must be in 1..{len(chars)} for k={args.k}")
    chi = chars[args.chi - 1]
    v = l_function(SParam(args.sigma, args.t), chi)
    print(json.dumps({"k": args.k, "chi": args.chi,
                      "principal": chi.principal, "sigma": args.sigma,
                      "t": args.t, "re": v.real, "im": v.imag}))
    return 0


def cmd_ingest(args) -> int:
    from .zeros import ingest_zeros

    records = ingest_zeros(args.path)
    text = _csv_text(["index", "alpha", "source"],
                     [(r.index, r.alpha, r.source) for r in records])
    if args.out:
        _atomic_write(args.out, text)
        print(f"{len(records)} zeros -> {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _build_parser(defaults) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zetageom",
        description="Geometric evaluation of the Riemann zeta function")
    p.add_argument("--config", help="key=value config file")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("eval", help="evaluate zeta(sigma + it)")
    q.add_argument("--sigma", type=float, required=True)
    q.add_argument("--t", type=float, required=True)
    q.add_argument("--method", default="auto",
                   choices=["auto", "geometric", "em", "rs", "direct"])
    q.set_defaults(func=cmd_eval)

    q = sub.add_parser("scan", help="scan critical-line zeros")
    q.add_argument("--lo", type=float, required=True)
    q.add_argument("--hi", type=float, required=True)
    q.add_argument("--grid-step", type=float,
                   default=float(defaults.get("grid_step", 0.02)))
    q.add_argument("--out")
    q.set_defaults(func=cmd_scan)

    q = sub.add_parser("gram", help="compute a Gram point")
    q.add_argument("--n", type=int, required=True)
    q.set_defaults(func=cmd_gram)

    q = sub.add_parser("render", help="emit an SVG figure")
    q.add_argument("--kind", required=True, choices=["argand", "limacon"])
    q.add_argument("--out", required=True)
    q.add_argument("--sigma", type=float, default=0.5)
    q.add_argument("--t", type=float, default=100.586)
    q.add_argument("--n-lo", type=int, default=1)
    q.add_argument("--n-hi", type=int, default=64)
    q.add_argument("--stride", type=int, default=1)
    q.add_argument("--gram-lo", type=int, default=1000)
    q.add_argument("--gram-hi", type=int, default=1004)
    q.add_argument("--grid", type=int, default=400)
    q.add_argument("--width", type=int, default=800)
    q.add_argument("--height", type=int, default=800)
    q.add_argument("--max-points", type=int,
                   default=int(defaults.get("max_points", 100_000)))
    q.set_defaults(func=cmd_render)

    q = sub.add_parser("landau", help="ensemble real-part table as CSV")
    q.add_argument("--zeros-file")
    q.add_argument("--t-min", type=float, default=7.0)
    q.add_argument("--t-max", type=float, required=True)
    q.add_argument("--n-max", type=int, default=30)
    q.add_argument("--out")
    q.set_defaults(func=cmd_landau)

    q = sub.add_parser("surface", help="(sigma, t) grid of P and zeta as CSV")
    q.add_argument("--sigma-lo", type=float, default=0.0)
    q.add_argument("--sigma-hi", type=float, default=1.0)
    q.add_argument("--sigma-steps", type=int, default=21)
    q.add_argument("--t-lo", type=float, required=True)
    q.add_argument("--t-hi", type=float, required=True)
    q.add_argument("--t-steps", type=int, default=101)
    q.add_argument("--out")
    q.set_defaults(func=cmd_surface)

    q = sub.add_parser("hurwitz", help="evaluate the Hurwitz zeta(s, a)")
    q.add_argument("--sigma", type=float, required=True)
    q.add_argument("--t", type=float, required=True)
    q.add_argument("--a", type=float, required=True)
    q.set_defaults(func=cmd_hurwitz)

    q = sub.add_parser("lfunction", help="evaluate a Dirichlet L-function")
    q.add_argument("--sigma", type=float, required=True)
    q.add_argument("--t", type=float, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--chi", type=int, required=True,
                   help="1-based character index in the canonical table")
    q.set_defaults(func=cmd_lfunction)

    q = sub.add_parser("ingest", help="validate and re-emit a zeros file")
    q.add_argument("--path", required=True)
    q.add_argument("--out")
    q.set_defaults(func=cmd_ingest)
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    # --config must be readable before defaults are baked into the parser
    cfg_path = None
    for i, a in enumerate(argv):
        if a == "--config" and i + 1 < len(argv):
            cfg_path = argv[i + 1]
        elif a.startswith("--config="):
            cfg_path = a.split("=", 1)[1]
    try:
        defaults = _load_config(cfg_path)
    except OSError as exc:
        print(f"zetageom: config: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"zetageom: config: {exc}", file=sys.stderr)
        return 3
    if "threads" in defaults and "ZETAGEOM_THREADS" not in os.environ:
        os.environ["ZETAGEOM_THREADS"] = str(defaults["threads"])
    parser = _build_parser(defaults)
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ZerosParseError) as exc:
        print(f"zetageom: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"zetageom: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
