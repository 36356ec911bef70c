"""Command-line interface: generate points, dump matrices, verify, compare bounds."""

from __future__ import annotations

import argparse
import sys

from . import bounds as bounds_mod
from . import verify as verify_mod
from .construct import build_matrices, dump_matrices, make_spec
from .digital import generate_point
from .funcfield import ELLIPTIC_F2, RATIONAL, ff_create, place_enumerate
from .gf import field_create

_FIELD_KINDS = {"rational": RATIONAL, "elliptic": ELLIPTIC_F2, "elliptic_f2": ELLIPTIC_F2}


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise ValueError("q must be a prime power >= 2")
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            rest = q
            while rest % p == 0:
                rest //= p
                k += 1
            if rest != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, k
    raise ValueError(f"{q} is not a prime power")


def _digits_needed(n: int, q: int) -> int:
    d = 1
    while q**d <= n:
        d += 1
    return d


def _make_spec(args):
    p, k = _prime_power(args.q)
    ctx = field_create(p, k)
    field = ff_create(_FIELD_KINDS[args.field], ctx)
    if args.places:
        indices = [int(x) for x in args.places.split(",")]
        if any(i < 0 for i in indices):
            raise ValueError("place indices must be nonnegative")
        pool = place_enumerate(field, max(indices) + 1)
        places = [pool[i] for i in indices]
        return make_spec(field, s=args.s if args.s else None, mode=args.mode, places=places)
    if not args.s:
        raise ValueError("either --s or --places is required")
    return make_spec(field, s=args.s, mode=args.mode)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _points(spec, N: int, m: int):
    R = max(m, _digits_needed(max(N - 1, 1), spec.q))
    matrices = build_matrices(spec, m, R)
    return [generate_point(n, matrices, m) for n in range(N)]


def _cmd_gen(args) -> int:
    spec = _make_spec(args)
    pts = _points(spec, args.N, args.m)
    lines = []
    for pt in pts:
        if args.format == "digits":
            lines.append(" ".join(pt.digit_strings()))
        else:
            lines.append(" ".join(f"{v:.{args.prec}f}" for v in pt.values()))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_matrices(args) -> int:
    spec = _make_spec(args)
    mats = build_matrices(spec, args.J, args.R if args.R else None)
    _emit(dump_matrices(spec, mats), args.out)
    return 0


def _cmd_verify(args) -> int:
    spec = _make_spec(args)
    M = args.M
    u = spec.u if args.u is None else args.u
    cols = _digits_needed((args.Kmax + 1) * spec.q**M - 1, spec.q)
    mats = build_matrices(spec, M, max(M, cols))
    lines = []
    ok = True
    rep = verify_mod.seq_rank_check(mats, u, spec.e, M)
    ok &= rep.passed
    lines.append(f"seq_rank_check (u={u}, e={spec.e}, M={M}): {rep}")
    rep = verify_mod.sequence_block_check(mats, u, spec.e, M, Kmax=args.Kmax)
    ok &= rep.passed
    lines.append(f"sequence_block_check (u={u}, Kmax={args.Kmax}): {rep}")
    t, trep = verify_mod.minimal_t(mats, M)
    lines.append(f"minimal_t: {trep.detail}")
    if spec.mode == "finite_row":
        rep = verify_mod.row_length_audit(mats, spec.field.genus, spec.v)
        ok &= rep.passed
        lines.append(f"row_length_audit (g={spec.field.genus}, v={spec.v}): {rep}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if ok else 1


def _cmd_discrepancy(args) -> int:
    spec = _make_spec(args)
    if spec.s > 3:
        raise ValueError("exact star discrepancy is limited to s <= 3")
    pts = _points(spec, args.N, args.m)
    d = verify_mod.star_discrepancy_exact(pts)
    _emit(f"D*({args.N}) = {d.numerator}/{d.denominator} = {float(d):.12g}\n", args.out)
    return 0


def _cmd_bounds(args) -> int:
    import mpmath

    e = tuple(int(x) for x in args.e.split(","))
    s = len(e)
    u = args.u
    t = args.t if args.t is not None else verify_mod.t_from_ue(u, e)
    fk = bounds_mod.c_fk(args.q, s, t)
    tez, tez_up = bounds_mod.c_tez(args.q, s, u, e)
    ratio, wins = bounds_mod.compare_condition(args.q, e)
    lines = [
        f"b={args.q} s={s} u={u} e=({','.join(str(x) for x in e)}) t={t}",
        f"c_fk         = {mpmath.nstr(fk, 15)}",
        f"c_tez        = {mpmath.nstr(tez, 15)}",
        f"c_tez_upper  = {mpmath.nstr(tez_up, 15)}",
        f"ratio_lower  = {mpmath.nstr(ratio, 15)}",
        f"tez_wins     = {'yes' if wins else 'no'}",
    ]
    if args.N:
        lines.append(f"leading_term(c_fk,  N={args.N}) = {mpmath.nstr(bounds_mod.bound_eval(fk, args.N, s), 15)}")
        lines.append(f"leading_term(c_tez, N={args.N}) = {mpmath.nstr(bounds_mod.bound_eval(tez, args.N, s), 15)}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _add_field_flags(p: argparse.ArgumentParser):
    p.add_argument("--q", type=int, required=True, help="prime-power base")
    p.add_argument("--field", choices=sorted(_FIELD_KINDS), default="rational")
    p.add_argument("--s", type=int, default=0, help="dimension (first s canonical places)")
    p.add_argument("--places", type=str, default="",
                   help="comma-separated indices into the canonical place list")
    p.add_argument("--mode", choices=("plain", "finite_row"), default="plain")
    p.add_argument("--out", type=str, default="")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffseq",
        description="Digital (u,e,s)-sequences from function fields, with verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate points")
    _add_field_flags(p)
    p.add_argument("--N", type=int, required=True, help="number of points")
    p.add_argument("--m", type=int, required=True, help="output digits per coordinate")
    p.add_argument("--format", choices=("float", "digits"), default="float")
    p.add_argument("--prec", type=int, default=12, help="decimals in float format")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("matrices", help="dump generating matrices")
    _add_field_flags(p)
    p.add_argument("--J", type=int, required=True, help="rows")
    p.add_argument("--R", type=int, default=0, help="columns (default J)")
    p.set_defaults(func=_cmd_matrices)

    p = sub.add_parser("verify", help="run the verification battery")
    _add_field_flags(p)
    p.add_argument("--M", type=int, default=8, help="largest block exponent m")
    p.add_argument("--Kmax", type=int, default=2, help="largest block index k")
    p.add_argument("--u", type=int, default=None, help="override u (default: genus)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("discrepancy", help="exact star discrepancy of the first N points")
    _add_field_flags(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--m", type=int, required=True, help="digits per coordinate")
    p.set_defaults(func=_cmd_discrepancy)

    p = sub.add_parser("bounds", help="discrepancy-bound constants")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--e", type=str, required=True, help="comma-separated place degrees")
    p.add_argument("--u", type=int, default=0)
    p.add_argument("--t", type=int, default=None, help="override t (default u + sum(e_i - 1))")
    p.add_argument("--N", type=int, default=0, help="also evaluate the leading term at N")
    p.add_argument("--out", type=str, default="")
    p.set_defaults(func=_cmd_bounds)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
