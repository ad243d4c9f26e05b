"""Command-line interface.

Exit codes: 0 success (including a non-member verdict), 2 input error,
3 enumeration guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .elliptic import (
    WeierstrassCurve,
    discriminant_ok,
    grass_group_elements,
    grass_to_ec,
    gr_add,
    gr_identity,
    gr_neg,
    group_order,
    weierstrass_rep,
)
from .errors import FeasibilityError, QuiverCurveError
from .field import FieldSpec, parse_field, parse_scalar
from .poly import curve_points, parse_poly, reducibility_witness, singular_points
from .projective import DEFAULT_GUARD, parse_point, projective_count
from .quiver import (
    build_representation,
    check_membership,
    curve_point_to_grass,
    deserialize_rep,
    enumerate_grassmannian,
    serialize_rep,
)

DIAGNOSTIC_GUARD = 10**5


class InputError(QuiverCurveError):
    pass


@dataclass(frozen=True)
class CliConfig:
    spec: FieldSpec
    guard: int = DEFAULT_GUARD
    fmt: str = "text"

    def __post_init__(self):
        if self.guard < 1:
            raise InputError("guard must be at least 1")


def _config(args) -> CliConfig:
    spec = parse_field(args.field) if getattr(args, "field", None) else FieldSpec.rational()
    return CliConfig(spec, getattr(args, "guard", DEFAULT_GUARD), getattr(args, "format", "text"))


def _load_rep(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return deserialize_rep(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _warn(msg):
    print(f"warning: {msg}", file=sys.stderr)


def _diagnose(P):
    if not P.spec.is_prime:
        return
    try:
        witness = reducibility_witness(P, max_p_guard=DIAGNOSTIC_GUARD)
    except FeasibilityError:
        _warn("reducibility search skipped (too many candidate factors)")
    else:
        if witness is not None:
            g, h = witness
            _warn(f"polynomial factors over {P.spec} as ({g}) * ({h})")
    if projective_count(2, P.spec.p) <= DIAGNOSTIC_GUARD:
        sing = singular_points(P)
        if sing:
            _warn(f"curve has {len(sing)} {P.spec}-rational singular point(s), first {sing[0]}")


def cmd_build(args, out):
    cfg = _config(args)
    P = parse_poly(args.poly, cfg.spec)
    rep = build_representation(P)
    _diagnose(P)
    doc = serialize_rep(rep)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc + "\n")
    else:
        out.write(doc + "\n")
    return 0


def cmd_member(args, out):
    rep = _load_rep(args.rep)
    y = parse_point(args.point, rep.spec)
    res = check_membership(rep, y)
    if args.format == "json":
        doc = {"verdict": "member" if res else "non-member", "point": y.to_text()}
        if res:
            doc["line3"] = res.point.line3.to_text()
        else:
            doc["reason"] = res.reason
        out.write(json.dumps(doc) + "\n")
    elif res:
        out.write(f"member\nline3 {res.point.line3.to_text()}\n")
    else:
        out.write(f"non-member\n{res.reason}\n")
    return 0


def _emit_points(out, fmt, points, texts):
    if fmt == "json":
        out.write(json.dumps({"count": len(points), "points": texts}) + "\n")
    else:
        for t in texts:
            out.write(t + "\n")
        out.write(f"count {len(points)}\n")


def cmd_enumerate(args, out):
    rep = _load_rep(args.rep)
    pts = enumerate_grassmannian(rep, guard=args.guard)
    if args.format == "json":
        texts = [{"line2": u.line2.to_text(), "line3": u.line3.to_text()} for u in pts]
    else:
        texts = [u.to_text() for u in pts]
    _emit_points(out, args.format, pts, texts)
    return 0


def cmd_curve_points(args, out):
    cfg = _config(args)
    if not cfg.spec.is_prime:
        raise InputError("curve-points needs a prime field")
    P = parse_poly(args.poly, cfg.spec)
    pts = curve_points(P, guard=cfg.guard)
    _emit_points(out, cfg.fmt, pts, [p.to_text() for p in pts])
    return 0


def _grass_arg(rep, text):
    pt = parse_point(text, rep.spec)
    if len(pt) == 3:
        return curve_point_to_grass(rep, pt)
    if len(pt) == rep.M:
        res = check_membership(rep, pt)
        if not res:
            raise InputError(f"{pt} is not a Grassmannian point: {res.reason}")
        return res.point
    raise InputError(f"points must have 3 or {rep.M} coordinates, got {len(pt)}")


def cmd_ec(args, out):
    cfg = _config(args)
    spec = cfg.spec
    a, b = parse_scalar(args.a, spec), parse_scalar(args.b, spec)
    if not discriminant_ok(a, b):
        raise InputError(f"singular curve: 4a^3 + 27b^2 = 0 over {spec}")
    curve = WeierstrassCurve(spec, a, b)
    rep = weierstrass_rep(curve)
    needed = {"add": 2, "neg": 1}.get(args.op, 0)
    points = args.points or []
    if len(points) != needed:
        raise InputError(f"ec {args.op} takes {needed} point(s), got {len(points)}")
    us = [_grass_arg(rep, t) for t in points]

    if args.op == "order":
        if not spec.is_prime:
            raise InputError("ec order needs a prime field")
        n = group_order(curve)
        out.write(json.dumps({"order": n}) + "\n" if cfg.fmt == "json" else f"{n}\n")
        return 0

    if args.op == "table":
        if not spec.is_prime:
            raise InputError("ec table needs a prime field")
        elems = grass_group_elements(rep)
        rows = [[gr_add(rep, u, v).line2.to_text() for v in elems] for u in elems]
        if cfg.fmt == "json":
            out.write(json.dumps(rows) + "\n")
        else:
            for row in rows:
                out.write("\t".join(row) + "\n")
        if args.show_curve:
            decoded = [grass_to_ec(rep, u).to_text() for u in elems]
            out.write("elements " + " ".join(decoded) + "\n")
        return 0

    if args.op == "identity":
        result = gr_identity(rep)
    elif args.op == "neg":
        result = gr_neg(rep, us[0])
    else:
        result = gr_add(rep, us[0], us[1])
    if cfg.fmt == "json":
        doc = {"point": result.line2.to_text(), "line3": result.line3.to_text()}
        if args.show_curve:
            doc["curve_point"] = grass_to_ec(rep, result).to_text()
        out.write(json.dumps(doc) + "\n")
    else:
        line = result.line2.to_text()
        if args.show_curve:
            line += f"\t{grass_to_ec(rep, result).to_text()}"
        out.write(line + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivercurves",
        description="Plane curves as quiver Grassmannians of a three-vertex quiver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, field=True, fmt=True, guard=True):
        if field:
            p.add_argument("--field", default="q", help="'p:<prime>' or 'q' (default q)")
        if guard:
            p.add_argument("--guard", type=int, default=DEFAULT_GUARD, help="max ambient points to scan")
        if fmt:
            p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("build", help="emit the quiver representation of a curve as JSON")
    p.add_argument("--poly", required=True)
    p.add_argument("-o", "--output")
    common(p, fmt=False, guard=False)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("member", help="test a point of P^(M-1) for Grassmannian membership")
    p.add_argument("--rep", required=True)
    p.add_argument("--point", required=True)
    common(p, field=False, guard=False)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("enumerate", help="list every F_p-point of the Grassmannian")
    p.add_argument("--rep", required=True)
    common(p, field=False)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("curve-points", help="list the F_p-points of the plane curve")
    p.add_argument("--poly", required=True)
    common(p)
    p.set_defaults(func=cmd_curve_points)

    p = sub.add_parser("ec", help="group law on the Grassmannian of y^2 = x^3 + ax + b")
    p.add_argument("op", choices=("add", "neg", "identity", "table", "order"))
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--points", nargs="+", help="points as [x:y:z] on the curve or [..10 coords..]")
    p.add_argument("--show-curve", action="store_true", help="also print decoded curve points")
    common(p, guard=False)
    p.set_defaults(func=cmd_ec)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except FeasibilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"required guard: {exc.required}", file=sys.stderr)
        return 3
    except (QuiverCurveError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
