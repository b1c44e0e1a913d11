"""Command-line interface: ``ss3 <command> -n N [options]``.

Machine output is JSON on stdout. Exit status: 0 success, 1 disagreement
found by a verification command, 2 invalid arguments, 3 scale guard, 4
internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from ss3 import auxgeom, elliptic, quartic
from ss3.field import DEFAULT_MAX_N, FieldCtx, FieldError, make_ctx
from ss3.quartic import Quartic, ScaleError, WeilPoly
from ss3.synthesis import catalog, types
from ss3.synthesis.census import DEFAULT_MAX_N as CENSUS_MAX_N
from ss3.synthesis.census import census as run_census
from ss3.synthesis.construct import (
    ConstructionError,
    NotAttainable,
    construct_for_weil,
    extreme_weil,
)

EXIT_DIFF, EXIT_USAGE, EXIT_SCALE, EXIT_INTERNAL = 1, 2, 3, 4


class UsageError(ValueError):
    pass


def _hex(ctx: FieldCtx, s: str | None, name: str, default: int | None = None) -> int:
    if s is None:
        if default is None:
            raise UsageError(f"--{name} is required")
        return default
    try:
        return ctx.from_hex(s)
    except (ValueError, FieldError) as exc:
        raise UsageError(f"--{name}: {exc}") from None


def _ctx(args) -> FieldCtx:
    try:
        return make_ctx(args.n, max_n=args.max_field_n)
    except (ValueError, FieldError) as exc:
        raise UsageError(str(exc)) from None


def _quartic(ctx: FieldCtx, args) -> Quartic:
    vals = [_hex(ctx, getattr(args, k), k) for k in ("d", "e", "f", "g")]
    if vals[3] == 0:
        raise UsageError("--g must be nonzero")
    return Quartic(*vals)


# -- commands ---------------------------------------------------------------------------------


def cmd_classify_elliptic(args):
    ctx = _ctx(args)
    a = _hex(ctx, args.a, "a")
    if a == 0:
        raise UsageError("--a must be nonzero")
    E = elliptic.ASModel(a, _hex(ctx, args.b, "b", 0), _hex(ctx, args.c, "c", 0))
    cls = elliptic.classify(ctx, E)
    out = {**cls.to_json(), "t": elliptic.frobenius_trace(cls, ctx.n)}
    if args.naive:
        out["count"] = elliptic.naive_count(ctx, E)
    return out, 0


def cmd_count_d(args):
    ctx = _ctx(args)
    A = _hex(ctx, args.A, "A")
    if A == 0:
        raise UsageError("--A must be nonzero")
    p = auxgeom.DCurveParams(A, _hex(ctx, args.B, "B", 0), _hex(ctx, args.C, "C", 0), _hex(ctx, args.D, "D", 0))
    an = auxgeom.analyze_D(ctx, p)
    return an.to_json(), 0


def cmd_count_quartic(args):
    ctx = _ctx(args)
    C = _quartic(ctx, args)
    counts = quartic.point_counts(ctx, C, max_n=args.max_n)
    return {"type": quartic.type_of(ctx, C).tag, "counts": counts}, 0


def _weil_json(wp: WeilPoly) -> dict:
    return {**wp.to_json(), "poly": str(wp), "N1": wp.q + 1 + wp.a1}


def cmd_weil(args):
    ctx = _ctx(args)
    C = _quartic(ctx, args)
    qt = quartic.type_of(ctx, C)
    wp = quartic.naive_weil_poly(ctx, C, max_n=args.max_n) if args.naive else quartic.weil_poly(ctx, C, qt)
    out = {"type": qt.tag, **_weil_json(wp)}
    if not args.naive:
        out["quotients"] = [{**cls.to_json(), "degree": m} for cls, m in quartic.quotient_classes(ctx, C, qt)]
    return out, 0


def cmd_catalog(args):
    n = args.n
    if not 1 <= n <= args.max_field_n:
        raise UsageError(f"n must be in 1..{args.max_field_n}")
    rows = []
    for spec, wp in catalog.enumerate_classes(n):
        rows.append({**spec.to_json(), **_weil_json(wp), **catalog.contains_jacobian(spec).to_json()})
    return {"n": n, "q": 1 << n, "classes": rows}, 0


def _parse_weil(s: str, q: int) -> WeilPoly:
    try:
        a1, a2, a3 = (int(x) for x in s.split(","))
    except ValueError:
        raise UsageError("--weil expects three integers a1,a2,a3") from None
    return WeilPoly(a1, a2, a3, q)


def cmd_construct(args):
    ctx = _ctx(args)
    picked = sum(x is not None and x is not False for x in (args.weil, args.maximal, args.minimal))
    if picked != 1:
        raise UsageError("give exactly one of --weil, --maximal, --minimal")
    if args.weil is not None:
        target = _parse_weil(args.weil, ctx.q)
    else:
        if ctx.n % 2:
            raise UsageError("--maximal/--minimal need an even n")
        target = extreme_weil(ctx, bool(args.maximal))
    try:
        catalog.lookup(ctx.n, target)
    except catalog.CatalogError as exc:
        raise UsageError(str(exc)) from None
    res = construct_for_weil(ctx, target)
    out = {"target": _weil_json(target)}
    if isinstance(res, NotAttainable):
        out.update(res.to_json())
        return out, 0
    out.update({"attainable": True, "quartic": res.to_json(ctx), "type": quartic.type_of(ctx, res).tag})
    if args.naive:
        naive = quartic.naive_weil_poly(ctx, res, max_n=args.max_n)
        out["naive_agrees"] = naive == target
        if naive != target:
            return out, EXIT_INTERNAL
    return out, 0


def _weil_list(ws) -> list[dict]:
    return [_weil_json(w) for w in sorted(ws, key=lambda w: (w.a1, w.a2, w.a3))]


def cmd_census(args):
    n = args.n
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    res = run_census(n, oracle=args.oracle, jobs=args.jobs, max_n=args.max_n)
    pred = catalog.predicted_set(n)
    got = res.realized()
    out = {
        "n": n,
        "quartics": res.total,
        "oracle": args.oracle,
        "realized": [{**_weil_json(w), "quartics": res.weil[w]} for w in sorted(got, key=lambda w: (w.a1, w.a2, w.a3))],
        "missing": _weil_list(pred - got),
        "unexpected": _weil_list(got - pred),
    }
    return out, EXIT_DIFF if (pred != got) else 0


def cmd_verify_tables(args):
    ctx = _ctx(args)
    n = ctx.n
    out = {"n": n}
    if n > args.max_n_elliptic:
        raise ScaleError(f"elliptic sweep over GF(2^{n}) exceeds the scale guard")
    ell = elliptic.sweep_normal_models(ctx).to_json(ctx)
    out["elliptic"] = ell
    ok = not ell["mismatches"] and ell["classes"] == ell["expected_classes"]
    res = run_census(n, jobs=args.jobs, max_n=args.max_n)
    diffs = []
    for tag in (quartic.SPLIT, quartic.QUADRATIC, quartic.CUBIC):
        for config in types.configurations(tag, n):
            want = types.attained(tag, config, n)
            got = (tag, config) in res.configs
            if want != got:
                diffs.append({"type": tag, "config": list(config), "table": want, "census": got})
    out["types"] = {"mismatches": diffs, "attained": len(res.configs)}
    ok = ok and not diffs
    return out, 0 if ok else EXIT_DIFF


def cmd_moduli(args):
    rows = []
    for n in range(1, args.n + 1):
        ctx = make_ctx(n, max_n=args.max_field_n)
        rows.append({"n": n, "modulus": format(ctx.modulus, "x"), "c0": ctx.to_hex(ctx.c0)})
    return {"moduli": rows}, 0


# -- parser ---------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ss3", description="Supersingular curves and quartics over GF(2^n).")
    p.add_argument("--pretty", action="store_true", help="indent JSON / render tables")
    p.add_argument("-o", "--output", help="write JSON here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("-n", type=int, required=True, help="field degree over GF(2)")
        sp.add_argument("--max-field-n", type=int, default=DEFAULT_MAX_N, help=argparse.SUPPRESS)
        sp.set_defaults(func=fn)
        return sp

    sp = add("classify-elliptic", cmd_classify_elliptic, "classify y^2 + y = ax^3 + bx^2 + c")
    for k in ("a", "b", "c"):
        sp.add_argument(f"--{k}")
    sp.add_argument("--naive", action="store_true", help="also count points")

    sp = add("count-d", cmd_count_d, "analyze y^2 + y = Ax^9 + Bx^3 + Cx + D")
    for k in ("A", "B", "C", "D"):
        sp.add_argument(f"--{k}")

    for name, fn, help_ in (
        ("count-quartic", cmd_count_quartic, "point counts over k, k2, k3"),
        ("weil", cmd_weil, "Weil polynomial of a quartic"),
    ):
        sp = add(name, fn, help_)
        for k in ("d", "e", "f", "g"):
            sp.add_argument(f"--{k}", required=True)
        sp.add_argument("--max-n", type=int, default=quartic.NAIVE_MAX_N, help="scale guard for counting")
        if name == "weil":
            sp.add_argument("--naive", action="store_true", help="use point counting")

    add("catalog", cmd_catalog, "supersingular threefold classes and verdicts")

    sp = add("construct", cmd_construct, "quartic in a prescribed isogeny class")
    sp.add_argument("--weil", help="a1,a2,a3")
    sp.add_argument("--maximal", action="store_true")
    sp.add_argument("--minimal", action="store_true")
    sp.add_argument("--naive", action="store_true", help="cross-check the witness by point counting")
    sp.add_argument("--max-n", type=int, default=quartic.NAIVE_MAX_N, help="scale guard for --naive")

    sp = add("census", cmd_census, "all quartics over GF(2^n)")
    sp.add_argument("--oracle", action="store_true", help="count points instead of using quotients")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--max-n", type=int, default=CENSUS_MAX_N, help="scale guard")

    sp = add("verify-tables", cmd_verify_tables, "elliptic tables and quartic-type tables against enumeration")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--max-n", type=int, default=CENSUS_MAX_N, help="scale guard for the census")
    sp.add_argument("--max-n-elliptic", type=int, default=10, help="scale guard for the elliptic sweep")

    add("moduli", cmd_moduli, "field moduli and c0 for degrees 1..n")
    return p


def _render(obj, pretty: bool) -> str:
    if pretty:
        return json.dumps(obj, indent=2)
    return json.dumps(obj, separators=(",", ":"))


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    t0 = time.perf_counter()
    try:
        out, code = args.func(args)
    except (UsageError, FieldError) as exc:
        print(f"ss3: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ScaleError as exc:
        print(f"ss3: scale guard: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except (ConstructionError, auxgeom.LemmaViolation) as exc:
        print(f"ss3: verification failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    text = _render(out, args.pretty)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.pretty:
        print(f"# {args.command}: {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run())
