"""Command line front end.

    hopftrace check DESCRIPTOR [--field q|fp:<p>] [--json] [--out PATH] [--max-dim N]
    hopftrace gram DESCRIPTOR
    hopftrace integral DESCRIPTOR
    hopftrace fourier DESCRIPTOR ELEMENT
    hopftrace blocks DESCRIPTOR
    hopftrace chars DESCRIPTOR COMODULES
    hopftrace diag DESCRIPTOR

Exit codes: 0 analysis done (whatever the verdict), 1 malformed input,
2 axiom failure, 3 unsupported request.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import blocks as blk
from .comodules import character, invariants_dim
from .descriptors import (AxiomFailure, DescriptorError, Diag, build, field_to_json, parse_comodule,
                          parse_document, parse_field, parse_field_flag, parse_group)
from .diag import (density_witness, diag_fourier, diag_integral, diag_phi, diag_trace_pair, finite_hopf_algebra,
                   FinSupportFunctional)
from .dual import convolution_algebra, is_linearly_reductive, separability_oracle, trace_form_gram
from .fields import QQ, Field
from .integral import IntegralSpaceError, fourier, invariant_integral, verify_parseval

EXIT_OK, EXIT_INPUT, EXIT_AXIOM, EXIT_UNSUPPORTED = 0, 1, 2, 3


class Unsupported(Exception):
    pass


def _vec(f: Field, v) -> list[str]:
    return [f.format(x) for x in v]


def _matrix(f: Field, M) -> list[list[str]]:
    return [_vec(f, r) for r in M.rows]


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise DescriptorError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise DescriptorError(f"malformed JSON in {path}: {exc}") from None


def _load_algebra(args):
    doc = _load_json(args.descriptor)
    override = parse_field_flag(args.field) if args.field else None
    desc, fld = parse_document(doc, override)
    if isinstance(desc, Diag):
        raise Unsupported("diag descriptors are analysed with the 'diag' command")
    A = build(desc, fld)
    if A.dim > args.max_dim:
        raise Unsupported(f"dimension {A.dim} exceeds --max-dim {args.max_dim}")
    return desc, fld, A


def _blocks_section(A) -> dict:
    f = A.field
    C = convolution_algebra(A)
    if f.characteristic == 0:
        return {"status": "unsupported over Q", "center_dim": len(blk.center(C))}
    if f.characteristic > blk.MAX_SPLIT_PRIME:
        return {"status": f"unsupported for p > {blk.MAX_SPLIT_PRIME}", "center_dim": len(blk.center(C))}
    if not separability_oracle(C):
        return {"status": "not semisimple", "center_dim": len(blk.center(C))}
    B = blk.split_center(C)
    return {"status": "ok", "dims": list(B.block_dims), "num_blocks": B.num_blocks,
            "idempotents": [_vec(f, e) for e in B.idempotents],
            "pairing": _matrix(f, blk.pairing_of_idempotents(B, trace_form_gram(C)))}


def _integral_section(A) -> tuple[dict, object]:
    res = invariant_integral(A)
    f = A.field
    return ({"present": res.normalized is not None, "space_dim": res.integral_space_dim,
             "space_basis": [_vec(f, v) for v in res.space],
             "vector": _vec(f, res.normalized) if res.normalized is not None else None}, res)


def _base(command, desc, fld, A) -> dict:
    return {"command": command, "descriptor": desc.to_json(), "field": field_to_json(fld), "dim": A.dim}


def cmd_check(args) -> dict:
    desc, fld, A = _load_algebra(args)
    report = _base("check", desc, fld, A)
    dec = is_linearly_reductive(A)
    report.update(reductive=dec.reductive, gram_rank=dec.gram_rank, criteria=list(dec.criteria), note=dec.note)
    report["integral"], res = _integral_section(A)
    if res.normalized is None:
        report["parseval"] = "skipped"
    else:
        report["parseval"] = "pass" if verify_parseval(A).ok else "fail"
    report["blocks"] = _blocks_section(A)
    report["dual_group_discrete"] = (None if fld.characteristic == 0
                                     else report["blocks"]["status"] == "ok")
    report["comodules"] = []
    return report


def cmd_gram(args) -> dict:
    desc, fld, A = _load_algebra(args)
    report = _base("gram", desc, fld, A)
    G = trace_form_gram(convolution_algebra(A))
    dec = is_linearly_reductive(A)
    report.update(gram=_matrix(fld, G.entries), gram_rank=dec.gram_rank, reductive=dec.reductive)
    return report


def cmd_integral(args) -> dict:
    desc, fld, A = _load_algebra(args)
    report = _base("integral", desc, fld, A)
    report["integral"], _ = _integral_section(A)
    return report


def _parse_element(text: str, A) -> tuple:
    """A JSON list of scalars, or a basis index / label."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        obj = text
    if isinstance(obj, int):
        if not 0 <= obj < A.dim:
            raise DescriptorError(f"basis index {obj} out of range")
        return A.basis(obj)
    if isinstance(obj, str):
        labels = [A.label(i) for i in range(A.dim)]
        if obj in labels:
            return A.basis(labels.index(obj))
        raise DescriptorError(f"unknown basis label {obj!r}; labels are {labels}")
    if isinstance(obj, list):
        if len(obj) != A.dim:
            raise DescriptorError(f"element has {len(obj)} coordinates, dim is {A.dim}")
        try:
            return tuple(A.field(str(x)) for x in obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise DescriptorError(f"bad scalar: {exc}") from None
    raise DescriptorError(f"cannot read element {text!r}")


def cmd_fourier(args) -> dict:
    desc, fld, A = _load_algebra(args)
    a = _parse_element(args.element, A)
    report = _base("fourier", desc, fld, A)
    if invariant_integral(A).normalized is None:
        raise Unsupported("no invariant integral: Fourier transform undefined for a non-reductive group scheme")
    report.update(element=_vec(fld, a), fourier=_vec(fld, fourier(A, a)))
    return report


def cmd_blocks(args) -> dict:
    desc, fld, A = _load_algebra(args)
    report = _base("blocks", desc, fld, A)
    report["blocks"] = _blocks_section(A)
    report["dual_group_discrete"] = None if fld.characteristic == 0 else report["blocks"]["status"] == "ok"
    return report


def cmd_chars(args) -> dict:
    desc, fld, A = _load_algebra(args)
    doc = _load_json(args.comodules)
    items = doc if isinstance(doc, list) else doc.get("comodules", [doc]) if isinstance(doc, dict) else None
    if items is None:
        raise DescriptorError("comodule file must hold an object or a list of objects")
    res = invariant_integral(A)
    wG = res.normalized
    records = []
    for obj in items:
        V = parse_comodule(A, obj)
        chi = character(V)
        inv = invariants_dim(V)
        rec = {"name": V.name, "dim": V.dim, "character": _vec(fld, chi), "invariants_dim": inv}
        if wG is None:
            rec.update(integral_of_character=None, dimension_formula="skipped")
        else:
            val = sum((x * y for x, y in zip(wG, chi)), fld.zero)
            rec.update(integral_of_character=fld.format(val), dimension_formula="pass" if val == inv else "fail")
        records.append(rec)
    report = _base("chars", desc, fld, A)
    report.update(reductive=wG is not None, comodules=records)
    return report


def cmd_diag(args) -> dict:
    doc = _load_json(args.descriptor)
    group_obj = doc.get("group", doc) if isinstance(doc, dict) else None
    if not isinstance(group_obj, dict) or group_obj.get("type") != "diag":
        raise DescriptorError("diag expects a descriptor with type 'diag'")
    fld = parse_field_flag(args.field) if args.field else parse_field(doc["field"]) if "field" in doc else QQ
    desc = parse_group(group_obj)
    M = desc.group
    box = [M.element(c) for c in _box(M, args.radius)]
    wG = diag_integral(M, fld)
    # Parseval on every basis indicator inside the box
    parseval_ok = all(diag_fourier(diag_phi(FinSupportFunctional.indicator(M, fld, m))) ==
                      FinSupportFunctional.indicator(M, fld, m) for m in box)
    pairing_ok = all(diag_trace_pair(FinSupportFunctional.indicator(M, fld, m),
                                     FinSupportFunctional.indicator(M, fld, n)) == (1 if m == n else 0)
                     for m in box for n in box)
    report = {"command": "diag", "descriptor": desc.to_json(), "field": field_to_json(fld), "group": str(M),
              "reductive": True, "integral": {"support": [[list(m), fld.format(v)] for m, v in wG.support]},
              "box_radius": args.radius, "box_size": len(box), "parseval": "pass" if parseval_ok else "fail",
              "pairing_diagonal": pairing_ok, "density_witness": density_witness(M, fld, box)}
    if M.is_finite and M.order <= args.max_dim:
        A = finite_hopf_algebra(M, fld)
        res = invariant_integral(A)
        elems = M.elements()
        expect = tuple(fld.one if m == M.identity else fld.zero for m in elems)
        report["finite_pipeline_agreement"] = res.normalized == expect
    else:
        report["finite_pipeline_agreement"] = None
    return report


def _box(M, radius: int) -> list[tuple]:
    from itertools import product

    ranges = [range(-radius, radius + 1)] * M.free_rank + [range(d) for d in M.torsion]
    return [tuple(c) for c in product(*ranges)] if ranges else [()]


def _summary(report: dict) -> str:
    lines = [f"{report['command']}: {json.dumps(report['descriptor'])[:80]}"]
    for key in ("field", "dim", "group", "reductive", "gram_rank", "parseval", "dual_group_discrete",
                "finite_pipeline_agreement", "density_witness", "fourier"):
        if key in report:
            lines.append(f"  {key}: {report[key]}")
    if "integral" in report:
        integ = report["integral"]
        lines.append(f"  integral: {integ.get('vector', integ.get('support'))}")
    if "blocks" in report:
        lines.append(f"  blocks: {report['blocks'].get('dims', report['blocks']['status'])}")
    if "gram" in report:
        lines.extend("  " + " ".join(r) for r in report["gram"])
    for rec in report.get("comodules", []):
        lines.append(f"  comodule {rec['name']}: dim {rec['dim']}, invariants {rec['invariants_dim']}, "
                     f"dimension formula {rec['dimension_formula']}")
    return "\n".join(lines) + "\n"


def render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    return _summary(report)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopftrace",
                                     description="Linear reductivity of finite group schemes via the trace form")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="override the descriptor's field: q or fp:<p>")
    common.add_argument("--json", action="store_true", help="emit the full JSON report")
    common.add_argument("--max-dim", type=int, default=64, help="refuse algebras above this dimension")
    common.add_argument("--out", help="write the report here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn, help_ in (("check", cmd_check, "reductivity, Gram rank, integral, Parseval, blocks"),
                            ("gram", cmd_gram, "trace-form Gram matrix"),
                            ("integral", cmd_integral, "invariant integral"),
                            ("fourier", cmd_fourier, "Fourier transform of an element"),
                            ("blocks", cmd_blocks, "block decomposition of the dual algebra"),
                            ("chars", cmd_chars, "characters and invariants of comodules"),
                            ("diag", cmd_diag, "diagonalizable group Spec K[M]")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("descriptor")
        if name == "fourier":
            p.add_argument("element", help="JSON list of scalars, a basis index, or a basis label")
        if name == "chars":
            p.add_argument("comodules", help="JSON file with a comodule or a list of comodules")
        if name == "diag":
            p.add_argument("--radius", type=int, default=2, help="half-width of the checked box in free directions")
        p.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except AxiomFailure as exc:
        print(json.dumps({"error": str(exc), "axiom_report": exc.report}, indent=2, sort_keys=True),
              file=sys.stderr)
        return EXIT_AXIOM
    except (Unsupported, blk.UnsupportedFieldError) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (DescriptorError, IntegralSpaceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = render(report, args.json)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
