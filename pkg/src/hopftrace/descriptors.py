"""JSON descriptors for fields, group schemes and comodules."""
from __future__ import annotations

from dataclasses import dataclass

from . import groups
from .comodules import (Comodule, ComoduleAxiomError, direct_sum, dual_comodule, make_comodule, one_dimensional_comodule,
                        regular_comodule, tensor_product, trivial_comodule)
from .diag import FinGenAbelianGroup
from .fields import GF, QQ, Field
from .hopf import FiniteHopfAlgebra, HopfAxiomError, alpha_p, cartier_dual, constant_group_scheme, mu_n, product


class DescriptorError(ValueError):
    pass


class AxiomFailure(ValueError):
    """User-supplied structure violates group, Hopf or comodule axioms."""

    def __init__(self, message: str, report: dict):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class ConstantGroup:
    table: tuple

    def to_json(self):
        return {"type": "constant", "table": [list(r) for r in self.table]}


@dataclass(frozen=True)
class MuN:
    n: int

    def to_json(self):
        return {"type": "mu", "n": self.n}


@dataclass(frozen=True)
class AlphaP:
    def to_json(self):
        return {"type": "alpha_p"}


@dataclass(frozen=True)
class Structure:
    """Raw structure constants (scalars as strings or ints); verified when built."""

    mult: list
    unit: list
    comult: list
    counit: list
    antipode: list

    def to_json(self):
        return {"type": "structure", "mult": self.mult, "unit": self.unit, "comult": self.comult,
                "counit": self.counit, "antipode": self.antipode}


@dataclass(frozen=True)
class Product:
    left: object
    right: object

    def to_json(self):
        return {"type": "product", "left": self.left.to_json(), "right": self.right.to_json()}


@dataclass(frozen=True)
class CartierDualOf:
    of: object

    def to_json(self):
        return {"type": "cartier_dual", "of": self.of.to_json()}


@dataclass(frozen=True)
class Diag:
    group: FinGenAbelianGroup

    def to_json(self):
        return {"type": "diag", "free_rank": self.group.free_rank, "torsion": list(self.group.torsion)}


def parse_field(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise DescriptorError(f"bad field descriptor: {obj!r}")
    kind = obj["kind"]
    if kind == "Q":
        return QQ
    if kind == "Fp":
        try:
            return GF(int(obj["p"]))
        except (KeyError, ValueError, TypeError) as exc:
            raise DescriptorError(f"bad prime field descriptor {obj!r}: {exc}") from None
    raise DescriptorError(f"unknown field kind {kind!r}")


def parse_field_flag(text: str) -> Field:
    """``q`` or ``fp:<p>``."""
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("fp:"):
        try:
            return GF(int(t[3:]))
        except ValueError as exc:
            raise DescriptorError(str(exc)) from None
    raise DescriptorError(f"bad --field value {text!r}; use q or fp:<p>")


def field_to_json(f: Field) -> dict:
    return {"kind": "Q"} if f.characteristic == 0 else {"kind": "Fp", "p": f.characteristic}


def parse_group(obj):
    if not isinstance(obj, dict) or "type" not in obj:
        raise DescriptorError(f"bad group descriptor: {obj!r}")
    t = obj["type"]
    try:
        if t == "constant":
            table = tuple(tuple(int(x) for x in row) for row in obj["table"])
            groups.check_group_table(table)
            return ConstantGroup(table)
        if t == "cyclic":
            return ConstantGroup(tuple(map(tuple, groups.cyclic_group(int(obj["n"])))))
        if t == "symmetric":
            return ConstantGroup(tuple(map(tuple, groups.symmetric_group(int(obj["n"])))))
        if t == "mu":
            n = int(obj["n"])
            if n < 1:
                raise DescriptorError("mu needs n >= 1")
            return MuN(n)
        if t == "alpha_p":
            return AlphaP()
        if t == "structure":
            return Structure(obj["mult"], obj["unit"], obj["comult"], obj["counit"], obj["antipode"])
        if t == "product":
            return Product(parse_group(obj["left"]), parse_group(obj["right"]))
        if t == "cartier_dual":
            return CartierDualOf(parse_group(obj["of"]))
        if t == "diag":
            return Diag(FinGenAbelianGroup(int(obj.get("free_rank", 0)), tuple(int(d) for d in obj.get("torsion", ()))))
    except KeyError as exc:
        raise DescriptorError(f"group descriptor {t!r} is missing {exc}") from None
    except groups.GroupTableError as exc:
        raise AxiomFailure(f"table is not a group: {exc}", {"group_table": False}) from None
    raise DescriptorError(f"unknown group type {t!r}")


def build(desc, fld: Field) -> FiniteHopfAlgebra:
    if isinstance(desc, ConstantGroup):
        return constant_group_scheme([list(r) for r in desc.table], fld)
    if isinstance(desc, MuN):
        return mu_n(desc.n, fld)
    if isinstance(desc, AlphaP):
        if fld.characteristic == 0:
            raise DescriptorError("alpha_p needs a field of positive characteristic")
        return alpha_p(fld)
    if isinstance(desc, Structure):
        try:
            return FiniteHopfAlgebra.from_structure(fld, desc.mult, desc.unit, desc.comult, desc.counit,
                                                    desc.antipode)
        except HopfAxiomError as exc:
            raise AxiomFailure(str(exc), exc.report.as_dict()) from None
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise DescriptorError(f"bad structure constants: {exc}") from None
    if isinstance(desc, Product):
        return product(build(desc.left, fld), build(desc.right, fld))
    if isinstance(desc, CartierDualOf):
        try:
            return cartier_dual(build(desc.of, fld))
        except ValueError as exc:
            raise DescriptorError(str(exc)) from None
    if isinstance(desc, Diag):
        raise DescriptorError("diag descriptors describe infinite-dimensional groups; use the diag command")
    raise DescriptorError(f"cannot build {desc!r}")


def parse_document(doc, field_override: Field | None = None):
    """Top-level descriptor document -> (group descriptor, field)."""
    if not isinstance(doc, dict):
        raise DescriptorError("descriptor must be a JSON object")
    group_obj = doc.get("group", doc if "type" in doc else None)
    if group_obj is None:
        raise DescriptorError("descriptor has no 'group'")
    desc = parse_group(group_obj)
    if field_override is not None:
        fld = field_override
    elif "field" in doc:
        fld = parse_field(doc["field"])
    else:
        raise DescriptorError("no field given (descriptor 'field' or --field)")
    return desc, fld


def parse_comodule(A: FiniteHopfAlgebra, obj) -> Comodule:
    """Comodule JSON: explicit ``{"dim", "coaction"}`` or a ``kind`` shorthand."""
    if not isinstance(obj, dict):
        raise DescriptorError("comodule must be a JSON object")
    name = obj.get("name", "")
    kind = obj.get("kind")
    try:
        if kind is None:
            dim = int(obj["dim"])
            co = obj["coaction"]
            if len(co) != dim:
                raise DescriptorError(f"coaction has {len(co)} slices, dim is {dim}")
            return make_comodule(A, co, name or f"V{dim}")
        if kind == "trivial":
            return trivial_comodule(A, int(obj.get("dim", 1)))
        if kind == "regular":
            return regular_comodule(A)
        if kind == "one_dim":
            return one_dimensional_comodule(A, obj["element"], name)
        if kind == "dual":
            return dual_comodule(parse_comodule(A, obj["of"]))
        if kind == "tensor":
            return tensor_product(parse_comodule(A, obj["left"]), parse_comodule(A, obj["right"]))
        if kind == "sum":
            return direct_sum(parse_comodule(A, obj["left"]), parse_comodule(A, obj["right"]))
    except KeyError as exc:
        raise DescriptorError(f"comodule descriptor is missing {exc}") from None
    except ComoduleAxiomError as exc:
        raise AxiomFailure(str(exc), exc.report.as_dict()) from None
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        if isinstance(exc, DescriptorError):
            raise
        raise DescriptorError(f"bad comodule: {exc}") from None
    raise DescriptorError(f"unknown comodule kind {kind!r}")
