"""JSON reading and writing for objects, morphisms, L-operators and algebra elements.

Scalars are written as "num/den" strings (plain integers when the denominator
is 1) so files round-trip exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import carriers, dybm
from .frt.algebra import AlgebraElement, Gen, GenInv, Scalar
from .linalg import format_fraction, to_fraction
from .lop import LOperator, SigmaContext
from .report import StructureError
from .vecth import VectHMorphism, VectHObject, morphism_from_dense


def load(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise StructureError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def save(doc, path) -> None:
    Path(path).write_text(dumps(doc))


def object_to_json(v: VectHObject) -> dict:
    return {"act": [list(row) for row in v.act]}


def object_from_json(doc) -> VectHObject:
    if not isinstance(doc, dict) or "act" not in doc:
        raise StructureError("an object needs an 'act' table")
    return VectHObject(doc["act"])


def morphism_to_json(f: VectHMorphism) -> dict:
    return {"source": object_to_json(f.source), "target": object_to_json(f.target),
            "mats": [[[format_fraction(x) for x in row] for row in m.to_dense()] for m in f.mats]}


def morphism_from_json(doc) -> VectHMorphism:
    try:
        src = object_from_json(doc["source"])
        tgt = object_from_json(doc["target"])
        return morphism_from_dense(src, tgt, doc["mats"], check=True)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, StructureError):
            raise
        raise StructureError(f"malformed morphism: {exc}") from None


def sigma_to_json(ctx: SigmaContext) -> dict:
    return {"kind": "sigma", "x": object_to_json(ctx.x), "sigma": morphism_to_json(ctx.sigma)}


def sigma_from_json(doc) -> SigmaContext:
    """Accepts either a sigma file or a dynamical map file."""
    if isinstance(doc, dict) and doc.get("kind") == "dybm":
        r = dybm.from_json(doc)
        return SigmaContext.build(r.x_object(), dybm.sigma_from_r(r))
    if not isinstance(doc, dict) or doc.get("kind") != "sigma":
        raise StructureError("expected a document with kind 'sigma' or 'dybm'")
    try:
        return SigmaContext.build(object_from_json(doc["x"]), morphism_from_json(doc["sigma"]))
    except KeyError as exc:
        raise StructureError(f"missing field {exc}") from None


def loperator_to_json(lop: LOperator) -> dict:
    return {"kind": "loperator", "v": object_to_json(lop.v), "l": morphism_to_json(lop.l),
            "l_inv": morphism_to_json(lop.l_inv)}


def loperator_from_json(doc, ctx: SigmaContext) -> LOperator:
    if not isinstance(doc, dict) or doc.get("kind") != "loperator":
        raise StructureError("expected a document with kind 'loperator'")
    try:
        v = object_from_json(doc["v"])
        l = morphism_from_json(doc["l"])
        l_inv = morphism_from_json(doc["l_inv"]) if "l_inv" in doc else None
    except KeyError as exc:
        raise StructureError(f"missing field {exc}") from None
    return LOperator.build(v, ctx.x, l, l_inv)


def _letter_to_json(letter):
    if isinstance(letter, Gen):
        return {"L": [letter.a, letter.b]}
    if isinstance(letter, GenInv):
        return {"Linv": [letter.a, letter.b]}
    return {"scalar": [[format_fraction(c) for c in row] for row in letter.coeffs]}


def _letter_from_json(doc):
    if not isinstance(doc, dict) or len(doc) != 1:
        raise StructureError(f"a letter must be a one-key object, got {doc!r}")
    (tag, val), = doc.items()
    if tag in ("L", "Linv"):
        if (not isinstance(val, list) or len(val) != 2
                or not all(isinstance(i, int) and not isinstance(i, bool) for i in val)):
            raise StructureError(f"{tag} needs two integer indices")
        return Gen(*val) if tag == "L" else GenInv(*val)
    if tag == "scalar":
        try:
            return Scalar(val)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, StructureError):
                raise
            raise StructureError(f"bad scalar letter: {exc}") from None
    raise StructureError(f"unknown letter tag {tag!r}")


def element_to_json(e: AlgebraElement) -> list:
    return [{"coeff": format_fraction(c), "word": [_letter_to_json(x) for x in w]}
            for w, c in e.terms.items()]


def element_from_json(doc) -> AlgebraElement:
    if not isinstance(doc, list):
        raise StructureError("an element file is a list of {coeff, word} terms")
    terms = []
    for t in doc:
        try:
            coeff = t.get("coeff", 1)
            word = t["word"]
        except (AttributeError, KeyError):
            raise StructureError(f"bad term {t!r}") from None
        try:
            coeff = to_fraction(coeff)
        except (TypeError, ValueError, ZeroDivisionError):
            raise StructureError(f"bad coefficient {coeff!r}") from None
        terms.append((tuple(_letter_from_json(x) for x in word), coeff))
    return AlgebraElement(terms)


def structure_from_json(doc):
    """Any carrier structure or dynamical map, dispatched on 'kind'."""
    if isinstance(doc, dict) and doc.get("kind") == "dybm":
        return dybm.from_json(doc)
    return carriers.from_json(doc)
