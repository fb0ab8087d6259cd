"""The dualities between V (x) {alpha} -> {beta} (x) V and {beta^-1} (x) V -> V (x) {alpha^-1}.

Both maps are assembled from unit constraints, associators and point
isomorphisms exactly as categorical composites.  With row-major flattening the
net effect is a shift of the H-parameter (see ``vee_closed_form``), which the
tests compare against the composites.
"""

from __future__ import annotations

from ..dhx import left_point, star_product
from ..report import StructureError
from ..vecth import (VectHMorphism, VectHObject, assoc, assoc_inv, compose_all, identity,
                     left_unit, left_unit_inv, point_iso, right_unit, right_unit_inv, tensor_mor,
                     tensor_obj, unit_obj)
from ..wgroup import GroupElement


def _expect(u: VectHMorphism, source: VectHObject, target: VectHObject, what: str) -> None:
    if u.source != source or u.target != target:
        raise StructureError(f"{what} has the wrong one-point-flanked shape")


def vee(u: VectHMorphism, v: VectHObject, alpha: GroupElement, beta: GroupElement) -> VectHMorphism:
    """u: V (x) {alpha} -> {beta} (x) V  gives  {beta^-1} (x) V -> V (x) {alpha^-1}."""
    pa, pb = left_point(alpha), left_point(beta)
    pai, pbi = left_point(alpha.inverse()), left_point(beta.inverse())
    _expect(u, tensor_obj(v, pa), tensor_obj(pb, v), "u")
    i = unit_obj(v.n_h)
    v_ai = tensor_obj(v, pai)
    inner = compose_all(
        assoc(pb, v, pai),
        tensor_mor(u, identity(pai)),
        assoc_inv(v, pa, pai),
        tensor_mor(identity(v), point_iso(i, tensor_obj(pa, pai))),
    )
    return compose_all(
        left_unit(v_ai),
        tensor_mor(point_iso(tensor_obj(pbi, pb), i), identity(v_ai)),
        assoc_inv(pbi, pb, v_ai),
        tensor_mor(identity(pbi), inner),
        assoc(pbi, v, i),
        right_unit_inv(tensor_obj(pbi, v)),
    )


def wedge(u: VectHMorphism, v: VectHObject, alpha: GroupElement, beta: GroupElement) -> VectHMorphism:
    """u: {beta^-1} (x) V -> V (x) {alpha^-1}  gives  V (x) {alpha} -> {beta} (x) V."""
    pa, pb = left_point(alpha), left_point(beta)
    pai, pbi = left_point(alpha.inverse()), left_point(beta.inverse())
    _expect(u, tensor_obj(pbi, v), tensor_obj(v, pai), "u")
    i = unit_obj(v.n_h)
    v_a = tensor_obj(v, pa)
    v_a_ai = tensor_obj(v_a, pai)
    b_v = tensor_obj(pb, v)
    b_v_ai = tensor_obj(b_v, pai)
    v_ai = tensor_obj(v, pai)

    brace = compose_all(
        tensor_mor(identity(pbi), assoc_inv(pb, v, pai)),
        assoc(pbi, pb, v_ai),
        tensor_mor(point_iso(i, tensor_obj(pbi, pb)), identity(v_ai)),
        left_unit_inv(v_ai),
        u,
        right_unit(tensor_obj(pbi, v)),
        assoc_inv(pbi, v, i),
        tensor_mor(identity(pbi),
                   compose_all(tensor_mor(identity(v), point_iso(tensor_obj(pa, pai), i)),
                               assoc(v, pa, pai))),
    )
    bracket = compose_all(
        left_unit(b_v_ai),
        tensor_mor(point_iso(tensor_obj(pb, pbi), i), identity(b_v_ai)),
        assoc_inv(pb, pbi, b_v_ai),
        tensor_mor(identity(pb), brace),
        assoc(pb, pbi, v_a_ai),
        tensor_mor(point_iso(i, tensor_obj(pb, pbi)), identity(v_a_ai)),
        left_unit_inv(v_a_ai),
    )
    return compose_all(
        right_unit(b_v),
        tensor_mor(identity(b_v), point_iso(tensor_obj(pai, pa), i)),
        assoc(b_v, pai, pa),
        tensor_mor(bracket, identity(pa)),
        assoc_inv(v_a, pai, pa),
        tensor_mor(identity(v_a), point_iso(i, tensor_obj(pai, pa))),
        right_unit_inv(v_a),
    )


def vee_closed_form(u: VectHMorphism, v: VectHObject, alpha: GroupElement,
                    beta: GroupElement) -> VectHMorphism:
    """u^vee(lam) = u(lam alpha^-1)."""
    ai = alpha.inverse()
    return VectHMorphism(tensor_obj(left_point(beta.inverse()), v), tensor_obj(v, left_point(ai)),
                         [u.mats[ai(lam)] for lam in range(v.n_h)])


def wedge_closed_form(u: VectHMorphism, v: VectHObject, alpha: GroupElement,
                      beta: GroupElement) -> VectHMorphism:
    """u^wedge(lam) = u(lam alpha)."""
    return VectHMorphism(tensor_obj(v, left_point(alpha)), tensor_obj(left_point(beta), v),
                         [u.mats[alpha(lam)] for lam in range(v.n_h)])


def composite_through_star(u: VectHMorphism, w: VectHMorphism, v: VectHObject, ta: GroupElement,
                    tb: GroupElement, tc: GroupElement) -> VectHMorphism:
    """Right-hand side of the identity u o w^vee = ... (u *_V w) ... for

    u: V (x) {[c]} -> {[a]} (x) V and w: V (x) {[c^-1]} -> {[b^-1]} (x) V,
    with ta, tb, tc the translations [a], [b], [c].
    """
    tbi, tci = tb.inverse(), tc.inverse()
    pa, pb, pbi = left_point(ta), left_point(tb), left_point(tbi)
    one = GroupElement.identity(v.n_h)
    p1 = left_point(one)
    i = unit_obj(v.n_h)
    prod = star_product(v, u, (ta, tc), w, (tbi, tci))
    # prod: V (x) {[c][c^-1]} -> {[a][b^-1]} (x) V; [c][c^-1] is the identity
    prod = prod.retype(tensor_obj(v, p1), prod.target)
    a_v = tensor_obj(pa, v)
    inner = compose_all(
        assoc(pbi, pa, v),
        tensor_mor(point_iso(left_point(ta * tbi), tensor_obj(pbi, pa)), identity(v)),
        prod,
    )
    b_v = tensor_obj(pb, v)
    return compose_all(
        left_unit(a_v),
        tensor_mor(point_iso(tensor_obj(pb, pbi), i), identity(a_v)),
        assoc_inv(pb, pbi, a_v),
        tensor_mor(identity(pb), inner),
        assoc(pb, v, p1),
        tensor_mor(identity(b_v), point_iso(i, p1)),
        right_unit_inv(b_v),
    )
