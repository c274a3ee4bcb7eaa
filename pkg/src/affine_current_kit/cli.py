"""Command-line front end: ``affine-current-kit <command> [options]``.

Exit status is 0 on success, 2 when the input is rejected (bad type, rank or
level, failed hypothesis, unsupported request) and 1 on internal errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import __version__
from .errors import KitError, NotSpecifiedError, UnsupportedError, ValidationError
from .extension import (
    build_extension,
    check_hypotheses,
    component_lowest_weight,
    generator_spec,
    parity,
)
from .fusion import fusion_table_json, simple_current_group, sl2_fusion_table
from .jsonio import document, emit_json
from .modrep import (
    canonical,
    classify,
    from_integer_label,
    module_lowest_weight,
    sigma_order,
    to_integer_label,
    verlinde_quotient,
)
from .qchar import component_sum_char, ext_module_char, weight_one_dim
from .rootdata import (
    LieType,
    bilinear,
    build_root_system,
    center_group,
    cominimal_indices,
    fundamental_coweight,
)

__all__ = ["main", "build_parser"]


def _root(args):
    try:
        lt = LieType(args.type.upper(), args.rank)
    except KitError as exc:
        raise ValidationError(str(exc)) from None
    return build_root_system(lt)


def _level(args) -> int:
    if args.level < 1:
        raise ValidationError(f"level must be a positive integer, got {args.level}")
    return args.level


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"not a rational number: {text!r}") from None


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}") from None


def _heis_override(args):
    if not getattr(args, "heis_gram", None):
        return None
    rows = [r for r in args.heis_gram.split(";")]
    return [[_parse_rational(x) for x in r.split(",")] for r in rows]


def _extension(args):
    return build_extension(_root(args), _level(args), _heis_override(args))


# --- commands -----------------------------------------------------------------


def cmd_describe(args) -> tuple[dict, list[str]]:
    rs = _root(args)
    cg = center_group(rs)
    norms = []
    for i in sorted(cominimal_indices(rs)):
        h = fundamental_coweight(rs, i)
        norms.append({"node": i, "coweight": list(h.coords), "norm": bilinear(rs, h, h)})
    res = {
        "root_system": rs.to_json(),
        "dimension": rs.dimension,
        "comarks": list(rs.comarks),
        "cominimal_nodes": sorted(cominimal_indices(rs)),
        "cominimal_coweights": norms,
        "center_group": cg.to_json(),
    }
    lines = [
        f"type {rs.type}: dim {rs.dimension}, dual Coxeter number {rs.dual_coxeter}",
        f"marks {list(rs.marks)}",
        f"root norms {[str(x) for x in rs.root_norms]}",
        f"P/Q order {cg.order}, invariants {list(cg.invariants)}, generators {list(cg.generators)}",
    ]
    for d in norms:
        lines.append(f"  <h^({d['node']}), h^({d['node']})> = {d['norm']}")
    return res, lines


def cmd_currents(args):
    rs = _root(args)
    grp = simple_current_group(rs, _level(args))
    res = grp.to_json()
    cyc = " x ".join(f"Z/{m}" for m in grp.center.invariants) or "trivial"
    lines = [f"simple currents of {rs.type} at level {grp.level}: {cyc}"]
    for d in res["elements"]:
        lines.append(
            f"  {d['name']:>3}  L({grp.level},{d['weight']})  order {d['order']}  weight {d['conformal_weight']}"
        )
    lines.append("generators: " + ", ".join(f"[L({grp.level},{d['weight']})]" for d in res["generators"]))
    return res, lines


def cmd_fusion(args):
    rs = _root(args)
    k = _level(args)
    if not (rs.type.family == "A" and rs.rank == 1):
        raise UnsupportedError(f"fusion tables are available for sl(2) and its extension only, not {rs.type}")
    if args.ext:
        ext = build_extension(rs, k)
        table = verlinde_quotient(ext, sl2_fusion_table(k))
        classes = classify(ext)
        res = fusion_table_json(k, classes, table)
        res["extended"] = True
    else:
        weights = sorted({a for a, _ in sl2_fusion_table(k)})
        res = fusion_table_json(k, weights, sl2_fusion_table(k))
        res["extended"] = False
    lines = []
    for row in res["table"]:
        terms = [f"{m}*{c}" if m > 1 else c for m, c in zip(row[2], res["classes"]) if m]
        lines.append(f"{row[0]} x {row[1]} = " + (" + ".join(terms) or "0"))
    return res, lines


def cmd_extension(args):
    ext = _extension(args)
    res: dict[str, Any] = {"extension": ext.to_json(), "hypotheses": check_hypotheses(ext).to_json()}
    lines = [
        f"A_{ext.level}({ext.rs.type}): heis_dim {ext.heis_dim}, B = {[[str(x) for x in r] for r in ext.big_lattice.gram]}"
    ]
    rep = check_hypotheses(ext)
    if not rep.passed:
        rep.require()
    par = parity(ext)
    res["parity"] = par.to_json()
    res["generator_lowest_weights"] = [
        component_lowest_weight(ext, tuple(int(a == b) for b in range(ext.rank))) for a in range(ext.rank)
    ]
    lines.append("superalgebra" if par.is_super else "vertex operator algebra")
    try:
        spec = generator_spec(ext)
        res["generator_spec"] = spec.to_json()
        lines.append(f"generated by (locality order {spec.locality_order}):")
        for s in spec.spaces:
            lines.append(f"  {s.label}  weight {s.lowest_weight}  dim {s.dim}")
    except NotSpecifiedError as exc:
        res["generator_spec"] = None
        res["generator_spec_note"] = str(exc)
        lines.append(f"generators: {exc}")
    try:
        res["weight_one_dim"] = weight_one_dim(ext)
        lines.append(f"weight-one dimension {res['weight_one_dim']}")
    except UnsupportedError as exc:
        res["weight_one_dim"] = None
        res["weight_one_note"] = str(exc)
    return res, lines


def cmd_classify(args):
    ext = _extension(args)
    classes = classify(ext)
    rows = []
    for c in classes:
        row = {
            "lambda_labels": list(c.weight.labels),
            "gamma": c.gamma[0] if ext.heis_dim == 1 else list(c.gamma),
            "conformal_weight": module_lowest_weight(ext, c),
        }
        if ext.label_scale is not None:
            row["j"] = to_integer_label(ext, c)[1]
        rows.append(row)
    res = {"type": str(ext.rs.type), "level": ext.level, "count": len(rows), "modules": rows}
    lines = [f"{len(rows)} irreducible modules of A_{ext.level}({ext.rs.type})"]
    for c, row in zip(classes, rows):
        lines.append(f"  {c}  lowest weight {row['conformal_weight']}")
    return res, lines


def _module_from_arg(ext, text: str | None):
    if ext.heis_dim != 1 or ext.label_scale is None:
        raise UnsupportedError(f"--module needs a rank-one Heisenberg part with integer labels ({ext.rs.type})")
    vals = _parse_ints(text) if text else (0,) * (ext.rs.rank + 1)
    if len(vals) != ext.rs.rank + 1:
        raise ValidationError(f"--module needs {ext.rs.rank} Dynkin labels followed by j")
    return from_integer_label(ext, vals[:-1], vals[-1])


def cmd_char(args):
    ext = _extension(args)
    label = _module_from_arg(ext, args.module)
    twist = sigma_order(ext, label.weight, label.gamma)
    if not twist.untwisted:
        raise ValidationError(f"{label} is twisted (sigma has order {twist.order})")
    order = _parse_rational(args.order)
    method = args.method
    if method == "auto":
        method = "theta" if ext.rs.type == LieType("A", 1) else "components"
    series = ext_module_char(ext, label, order) if method == "theta" else component_sum_char(ext, label, order)
    res = {
        "type": str(ext.rs.type),
        "level": ext.level,
        "module": canonical(ext, label).rep.to_json(),
        "method": method,
        "order": order,
        "series": [[e, c] for e, c in series.terms],
    }
    return res, [series.to_text()]


def cmd_check(args):
    ext = _extension(args)
    rep = check_hypotheses(ext)
    res = {"type": str(ext.rs.type), "level": ext.level, "hypotheses": rep.to_json()}
    lines = [f"{'ok  ' if ok else 'FAIL'} {name}" for name, ok in rep.checks]
    if rep.passed:
        res["parity"] = parity(ext).to_json()
    return res, lines, rep


COMMANDS: dict[str, Callable] = {
    "describe": cmd_describe,
    "currents": cmd_currents,
    "fusion": cmd_fusion,
    "extension": cmd_extension,
    "classify": cmd_classify,
    "char": cmd_char,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affine-current-kit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, level=True):
        sp.add_argument("--type", required=True, help="Lie family A-G")
        sp.add_argument("--rank", required=True, type=int)
        if level:
            sp.add_argument("--level", required=True, type=int)
        sp.add_argument("--json", action="store_true", help="emit one canonical JSON document")

    common(sub.add_parser("describe", help="root-system and coweight data"), level=False)
    common(sub.add_parser("currents", help="simple-current group"))
    sp = sub.add_parser("fusion", help="sl(2) fusion table, or its extension with --ext")
    common(sp)
    sp.add_argument("--ext", action="store_true")
    for name, hlp in (("extension", "extension lattice, parity and generators"), ("classify", "irreducible modules")):
        sp = sub.add_parser(name, help=hlp)
        common(sp)
        sp.add_argument("--heis-gram", help="override <alpha',alpha'>: rows ';', entries ','")
    sp = sub.add_parser("char", help="truncated character of an extended module")
    common(sp)
    sp.add_argument("--module", help="Dynkin labels then j, e.g. 1,1 for W(1,1)")
    sp.add_argument("--order", default="4", help="truncation order (rational)")
    sp.add_argument("--method", choices=("auto", "theta", "components"), default="auto")
    sp.add_argument("--text", action="store_true", help="also print the q-expansion in JSON mode")
    sp.add_argument("--heis-gram", help=argparse.SUPPRESS)
    sp = sub.add_parser("check", help="hypothesis checks for an extension")
    common(sp)
    sp.add_argument("--heis-gram", help="override <alpha',alpha'>: rows ';', entries ','")
    return p


def _color(text: str, code: str, stream) -> str:
    if os.environ.get("NO_COLOR") is not None or not stream.isatty():
        return text
    return f"\033[{code}m{text}\033[0m"


def _write(out, data: bytes) -> None:
    if hasattr(out, "buffer"):
        out.flush()
        out.buffer.write(data)
        out.buffer.flush()
    else:
        out.write(data.decode("utf-8"))


def _emit(args, payload: dict, lines: Sequence[str], out) -> None:
    if args.json:
        _write(out, emit_json(document(args.command, payload)))
    else:
        for line in lines:
            out.write(line + "\n")


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
        if args.command == "check":
            payload, lines, rep = result
            _emit(args, payload, lines, out)
            if not rep.passed:
                err.write(_color("error", "31", err) + f": hypothesis failed: {', '.join(rep.failures)}\n")
                return 2
            return 0
        payload, lines = result
        if args.command == "char" and args.text and args.json:
            payload["text"] = lines[0]
        _emit(args, payload, lines, out)
        return 0
    except KitError as exc:
        _error(args, exc, "validation", out, err)
        return 2
    except Exception as exc:  # noqa: BLE001
        _error(args, exc, "internal", out, err)
        return 1


def _error(args, exc: Exception, kind: str, out, err) -> None:
    if getattr(args, "json", False):
        doc = document(args.command, None)
        doc["error"] = {"kind": kind, "type": type(exc).__name__, "message": str(exc)}
        _write(out, emit_json(doc))
    err.write(_color("error", "31", err) + f": {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
