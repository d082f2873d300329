"""Command-line front end: JSON in/out for crossings, braids, and self tests.

Interchange conventions (also in the README): complex numbers are [re, im]
pairs of doubles; matrices are nested row-major lists with the row indexing
the input pair (n1, n2) and the column the output pair.  All randomness is
controlled by --seed, so identical invocations produce identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .braidgrpd import (BraidWord, InadmissibleColoringError, build_diagram,
                        extend_log_coloring, jfunc_eval, log_longitudes,
                        propagate_chi)
from .characters import LogWeylChar, WeylChar
from .qdilog import ConstraintViolationError, RootConfig, Tolerance
from .rmatrix import (CrossingData, PinchedCrossingError, braiding_op,
                      crossing_zetas, det_braiding, det_lu, kashaev_rmat,
                      rmat, rmat_pinched)
from .selftest import run_all


def _cx(v) -> complex:
    """Parse a complex from [re, im], a number, or 'a+bj' strings."""
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, str):
        return complex(v.replace(" ", ""))
    raise ValueError(f"cannot parse complex value from {v!r}")


def _jx(z: complex) -> list:
    return [float(z.real), float(z.imag)]


def _jmat(M: np.ndarray) -> list:
    return [[_jx(complex(v)) for v in row] for row in np.asarray(M)]


def _emit(obj, code: int = 0) -> int:
    json.dump(obj, sys.stdout, indent=1, sort_keys=True)
    sys.stdout.write("\n")
    return code


def _fail(msg: str, code: int, **extra) -> int:
    return _emit({"error": msg, **extra}, code)


def _load_spec(args):
    if args.input == "-":
        return json.load(sys.stdin)
    with open(args.input) as fh:
        return json.load(fh)


def _tolerance(args) -> Tolerance:
    return Tolerance(rel=args.tol_rel, singular=args.tol_singular)


# ------------------------------------------------------------------ selftest

def cmd_selftest(args) -> int:
    try:
        Ns = [int(x) for x in args.N.split(",")]
    except ValueError:
        return _fail(f"cannot parse --N {args.N!r}", 2)
    for N in Ns:
        if N < 2:
            return _fail(f"N must be >= 2, got {N}", 2)
    overrides = {}
    if args.tol_rel != 1e-8:
        overrides = {name: args.tol_rel for name in
                     ("lambda product", "lambda inverse sum", "Fourier transform",
                      "Fourier inverse", "S symmetry", "S Nth power")}
    results = run_all(Ns=Ns, seed=args.seed, scale=args.scale,
                      tol_overrides=overrides)
    report = {}
    ok = True
    for r in results:
        key = f"{r.module}/{r.name}"
        entry = report.setdefault(key, {"max_deviation": 0.0, "tol": r.tol,
                                        "passed": True})
        entry["max_deviation"] = max(entry["max_deviation"], r.deviation)
        entry["passed"] = entry["passed"] and r.passed
        ok = ok and r.passed
    return _emit({"seed": args.seed, "N": Ns, "checks": report,
                  "passed": ok}, 0 if ok else 1)


# ---------------------------------------------------------------------- rmat

def _crossing_from_spec(cfg: RootConfig, spec: dict) -> CrossingData:
    segs = spec["segments"]
    regs = spec["regions"]
    g = {k: _cx(regs[k]) for k in ("N", "W", "S", "E")}

    def lc(key, alpha):
        data = segs[key]
        a = _cx(data["alpha"]) if "alpha" in data else alpha
        return LogWeylChar(a, _cx(data["beta"]), _cx(data["mu"]))

    kappa = spec.get("kappa", "auto")
    kappa = None if kappa in (None, "auto") else _cx(kappa)
    return CrossingData(cfg, int(spec["sign"]),
                        lc("1", g["W"] - g["N"]), lc("2", g["S"] - g["W"]),
                        lc("1p", g["S"] - g["E"]), lc("2p", g["E"] - g["N"]),
                        g["N"], g["W"], g["S"], g["E"], kappa=kappa)


def cmd_rmat(args) -> int:
    cfg = RootConfig(args.N, tol=_tolerance(args))
    if args.kashaev:
        t = kashaev_rmat(cfg)
        return _emit({"N": cfg.N, "kind": "kashaev", "pinched": True,
                      "entries": _jmat(t.entries)})
    try:
        spec = _load_spec(args)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"cannot read crossing spec: {exc}", 2)
    try:
        c = _crossing_from_spec(cfg, spec)
    except (KeyError, ValueError, ConstraintViolationError) as exc:
        return _fail(f"invalid crossing spec: {exc}", 2)
    out = {"N": cfg.N, "sign": c.sign, "pinched": c.pinched}
    if c.pinched and not args.pinched:
        z0 = c.zeta0()
        bad = {r: _jx(z0[r]) for r in "NWSE"
               if abs(z0[r] - round(z0[r].real)) < 1e-7}
        return _fail("crossing is pinched (zeta0 integral); pass --pinched "
                     "to evaluate the closed pinched form", 1,
                     integral_zeta0=bad)
    try:
        if c.pinched:
            t = rmat_pinched(c)
            out["zeta0"] = {r: _jx(v) for r, v in c.zeta0().items()}
        else:
            t = rmat(c)
            zs = crossing_zetas(c)
            out["zeta0"] = {r: _jx(v) for r, v in zs.zeta0.items()}
            out["zeta1"] = {r: _jx(v) for r, v in zs.zeta1.items()}
            out["kappa"] = _jx(c.resolved_kappa())
            b = braiding_op(c)
            out["det_closed"] = _jx(det_braiding(c))
            out["det_lu"] = _jx(det_lu(b))
    except (PinchedCrossingError, ConstraintViolationError) as exc:
        return _fail(str(exc), 1)
    out["entries"] = _jmat(t.entries)
    return _emit(out)


# --------------------------------------------------------------- braid/color

def _braid_setup(cfg, spec):
    word = BraidWord(int(spec["width"]), tuple(spec["word"]))
    d = build_diagram(word)
    tops = [WeylChar(_cx(t["a"]), _cx(t["b"]), _cx(t["m"]))
            for t in spec["top_colors"]]
    return d, tops


def cmd_color(args) -> int:
    cfg = RootConfig(args.N, tol=_tolerance(args))
    try:
        spec = _load_spec(args)
        d, tops = _braid_setup(cfg, spec)
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        return _fail(f"invalid braid spec: {exc}", 2)
    try:
        col = propagate_chi(d, tops)
    except InadmissibleColoringError as exc:
        return _fail(str(exc), 1, crossing=exc.crossing)
    return _emit({
        "N": cfg.N, "width": d.width, "word": list(d.word.letters),
        "segments": [{"a": _jx(c.a), "b": _jx(c.b), "m": _jx(c.m)}
                     for c in col.colors],
        "components": list(d.seg_component),
        "pinched_crossings": col.pinched_crossings,
        "bottom_segments": d.bottom_segments[1:],
    })


def cmd_braid(args) -> int:
    cfg = RootConfig(args.N, tol=_tolerance(args))
    try:
        spec = _load_spec(args)
        d, _ = _braid_setup(cfg, spec)
        log = spec["log"]
        top_b = [_cx(v) for v in log["beta"]]
        top_g = [_cx(v) for v in log["gamma"]]
        mus = [_cx(v) for v in log["mu"]]
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        return _fail(f"invalid braid spec: {exc}", 2)
    try:
        lc = extend_log_coloring(d, top_b, top_g, mus)
        col = propagate_chi(d, [LogWeylChar(top_g[p] - top_g[p - 1],
                                            top_b[p - 1], mus[p - 1]).char()
                                for p in range(1, d.width + 1)])
        mat = jfunc_eval(cfg, d, lc)
    except InadmissibleColoringError as exc:
        return _fail(str(exc), 1, crossing=exc.crossing)
    lam = log_longitudes(d, lc)
    out = {
        "N": cfg.N, "width": d.width, "word": list(d.word.letters),
        "beta": [_jx(complex(b)) for b in lc.beta],
        "gamma": [_jx(complex(g)) for g in lc.gamma],
        "mu": [_jx(complex(m)) for m in lc.mu],
        "log_longitudes": [_jx(complex(x)) for x in lam],
        "pinched_crossings": col.pinched_crossings,
    }
    if not args.matrix_free:
        # serialized with the same row = input convention as crossings
        out["entries"] = _jmat(mat.T)
    return _emit(out)


# ---------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="holorm",
        description="Holonomy R-matrices for quantum sl2 at a root of unity")
    p.add_argument("--format", choices=("json",), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_n=True):
        if with_n:
            sp.add_argument("--N", type=int, default=3,
                            help="order of the root of unity (>= 2)")
        sp.add_argument("--tol-rel", type=float, default=1e-8)
        sp.add_argument("--tol-singular", type=float, default=1e-9)
        sp.add_argument("--seed", type=int, default=7)

    ps = sub.add_parser("selftest", help="run the identity battery")
    ps.add_argument("--N", type=str, default="2,3,5",
                    help="comma-separated list of orders")
    ps.add_argument("--scale", type=float, default=0.5,
                    help="trial-count multiplier")
    common(ps, with_n=False)
    ps.set_defaults(fn=cmd_selftest)

    pr = sub.add_parser("rmat", help="R-matrix of one crossing")
    common(pr)
    pr.add_argument("--input", default="-", help="crossing JSON file or - for stdin")
    pr.add_argument("--kashaev", action="store_true",
                    help="emit the canned Kashaev matrix instead")
    pr.add_argument("--pinched", action="store_true",
                    help="allow pinched crossings (closed pinched form)")
    pr.set_defaults(fn=cmd_rmat)

    pb = sub.add_parser("braid", help="state-sum of a log-colored braid word")
    common(pb)
    pb.add_argument("--input", default="-")
    pb.add_argument("--matrix-free", action="store_true",
                    help="emit coloring metadata only")
    pb.set_defaults(fn=cmd_braid)

    pc = sub.add_parser("color", help="propagate a character coloring")
    common(pc)
    pc.add_argument("--input", default="-")
    pc.set_defaults(fn=cmd_color)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "N", None) is not None and isinstance(args.N, int) and args.N < 2:
        return _fail(f"N must be >= 2, got {args.N}", 2)
    try:
        return args.fn(args)
    except ValueError as exc:
        return _fail(str(exc), 2)


if __name__ == "__main__":
    sys.exit(main())
