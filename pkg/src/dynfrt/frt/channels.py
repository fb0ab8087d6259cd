"""Evaluation channels: algebra maps from words into operator algebras.

Every channel here sends the defining ideal to zero (this is certified, not
assumed), so two elements with different images under some channel are
distinct in the quotient.  Agreement on every channel only means the battery
cannot tell them apart.
"""

from __future__ import annotations

from ..dhx import (DhxElement, MHFunction, component_shape, left_point, mu_l, mu_r, phi0, phi2,
                   unit)
from ..linalg import Mat
from ..lop import LOperator, SigmaContext
from ..report import StructureError
from ..vecth import (VectHMorphism, VectHObject, compose_all, element_obj, identity, point_iso,
                     point_morphisms, tensor_mor, tensor_obj, unit_obj, zero)
from .algebra import (AlgebraElement, Brackets, Gen, GenInv, Letter, Scalar, coproduct,
                      letter_counit)
from .duality import vee, wedge


class Channel:
    name = "channel"

    def __init__(self, v: VectHObject, br: Brackets):
        self.v = v
        self.br = br
        self._letters: dict = {}
        self._words: dict = {(): unit(v)}

    @property
    def n_h(self) -> int:
        return self.v.n_h

    def letter_image(self, letter: Letter) -> DhxElement:
        img = self._letters.get(letter)
        if img is None:
            img = self._compute_letter(letter)
            self._letters[letter] = img
        return img

    def _compute_letter(self, letter: Letter) -> DhxElement:
        raise NotImplementedError

    def scalar_image(self, s: Scalar) -> DhxElement:
        """sum_ij c_ij mu_l(delta_i) mu_r(delta_j), grouped by rows."""
        out = DhxElement(self.v)
        for i in range(s.n_h):
            row = s.row(i)
            if not row.is_zero():
                out = out + mu_l(self.v, MHFunction.delta(s.n_h, i)) * mu_r(self.v, row)
        return out

    def word_image(self, word) -> DhxElement:
        img = self._words.get(word)
        if img is None:
            # suffix recursion: suffixes repeat far more often than prefixes
            img = self.letter_image(word[0]) * self.word_image(word[1:])
            self._words[word] = img
        return img

    def evaluate(self, e: AlgebraElement) -> DhxElement:
        out = DhxElement(self.v)
        for word, coef in e.terms.items():
            out = out + self.word_image(word).scale(coef)
        return out

    def mu_l(self, f: MHFunction) -> DhxElement:
        return mu_l(self.v, f)

    def mu_r(self, f: MHFunction) -> DhxElement:
        return mu_r(self.v, f)

    def unit(self) -> DhxElement:
        return unit(self.v)


class CounitChannel(Channel):
    """The counit followed by the identification of f * T_alpha with an element over I."""

    name = "counit"

    def __init__(self, br: Brackets):
        super().__init__(unit_obj(br.n_h), br)

    def _compute_letter(self, letter):
        return phi0(letter_counit(letter, self.br))


class Representation(Channel):
    """A channel given by its generator images.

    gen[(a, b)]: V (x) {[b]} -> {[a]} (x) V is the component of L_ab and
    inv[(a, b)]: V (x) {[a^-1]} -> {[b^-1]} (x) V the component of Linv_ab.
    """

    def __init__(self, name: str, v: VectHObject, br: Brackets,
                 gen: dict[tuple[int, int], VectHMorphism],
                 inv: dict[tuple[int, int], VectHMorphism]):
        super().__init__(v, br)
        self.name = name
        self.gen = gen
        self.inv = inv

    def _compute_letter(self, letter):
        if isinstance(letter, Gen):
            alpha, beta = self.br.letter_degree(letter)
            return DhxElement(self.v, {(alpha, beta): self.gen[(letter.a, letter.b)]})
        if isinstance(letter, GenInv):
            alpha, beta = self.br.letter_degree(letter)
            return DhxElement(self.v, {(alpha, beta): self.inv[(letter.a, letter.b)]})
        return self.scalar_image(letter)

    def same_generators(self, other: "Representation") -> bool:
        return (self.v == other.v and self.gen == other.gen and self.inv == other.inv)


class TensorChannel(Channel):
    """Coproduct followed by the two channels and the tensor gluing phi2."""

    def __init__(self, first: Channel, second: Channel):
        super().__init__(tensor_obj(first.v, second.v), first.br)
        self.first = first
        self.second = second
        self.name = f"({first.name})(x)({second.name})"

    def _compute_letter(self, letter):
        return self.via_coproduct(AlgebraElement({(letter,): 1}, normalize=False))

    def via_coproduct(self, e: AlgebraElement) -> DhxElement:
        out = DhxElement(self.v)
        for (w1, w2), coef in coproduct(e, self.br.action.x.size).items():
            glued = phi2(self.first.word_image(w1), self.second.word_image(w2))
            out = out + glued.scale(coef)
        return out


def _point_chain(x: VectHObject, a: int, ta):
    """({a} -> X inclusion then {[a]} -> {a}) and (X -> {a} then {a} -> {[a]})."""
    i, p = point_morphisms(x, a)
    pa = element_obj(x, a)
    pta = left_point(ta)
    into = i @ point_iso(pta, pa)       # {[a]} -> X
    onto = point_iso(pa, pta) @ p       # X -> {[a]}
    return into, onto


def g_functor(lop: LOperator, ctx: SigmaContext, br: Brackets,
              name: str = "G(L)") -> Representation:
    """Generator images of the representation attached to an L-operator."""
    x, v = ctx.x, lop.v
    n = x.size
    chains = [_point_chain(x, a, br.pos[a]) for a in range(n)]
    gen, inv = {}, {}
    idv = identity(v)
    for a in range(n):
        for b in range(n):
            gen[(a, b)] = compose_all(tensor_mor(chains[a][1], idv), lop.l,
                                      tensor_mor(idv, chains[b][0]))
            pre = compose_all(tensor_mor(idv, chains[a][1]), lop.l_inv,
                              tensor_mor(chains[b][0], idv))
            # pre: {[b]} (x) V -> V (x) {[a]}, i.e. beta^-1 = [b], alpha^-1 = [a]
            inv[(a, b)] = wedge(pre, v, br.neg[a], br.neg[b])
    return Representation(name, v, br, gen, inv)


def f_functor(rep: Representation, ctx: SigmaContext) -> LOperator:
    """The L-operator assembled from a representation's generator images."""
    x, v, br = ctx.x, rep.v, rep.br
    n = x.size
    chains = [_point_chain(x, a, br.pos[a]) for a in range(n)]
    idv = identity(v)
    l = None
    l_inv = None
    for a in range(n):
        for b in range(n):
            term = compose_all(tensor_mor(chains[a][0], idv), rep.gen[(a, b)],
                               tensor_mor(idv, chains[b][1]))
            l = term if l is None else l + term
            dual = vee(rep.inv[(a, b)], v, br.neg[a], br.neg[b])
            term = compose_all(tensor_mor(idv, chains[a][0]), dual,
                               tensor_mor(chains[b][1], idv))
            l_inv = term if l_inv is None else l_inv + term
    if l @ l_inv != identity(l.target) or l_inv @ l != identity(l.source):
        raise StructureError("the assembled L and its candidate inverse do not invert each other")
    return LOperator(v, l, l_inv)


def basic_representation(ctx: SigmaContext, br: Brackets) -> Representation:
    """Generator images written directly from the entries of sigma:

    L_ab:    u(lam)[y][x] = sigma(lam)[(a, y), (x, b)]
    Linv_ab: u(lam)[y][x] = (sigma(lam [a^-1])^-1)[(y, a), (b, x)]
    """
    x = ctx.x
    n = x.size
    gen, inv = {}, {}
    for a in range(n):
        for b in range(n):
            src, tgt = component_shape(x, br.pos[a], br.pos[b])
            mats = [Mat.from_entries(n, n, [(y, xx, m[a * n + y, xx * n + b])
                                            for y in range(n) for xx in range(n)])
                    for m in ctx.sigma.mats]
            gen[(a, b)] = VectHMorphism(src, tgt, mats)
            src, tgt = component_shape(x, br.neg[b], br.neg[a])
            shift = br.neg[a]
            mats = [Mat.from_entries(n, n, [(y, xx, ctx.sigma_inv.mats[shift(lam)][y * n + a, b * n + xx])
                                            for y in range(n) for xx in range(n)])
                    for lam in range(x.n_h)]
            inv[(a, b)] = VectHMorphism(src, tgt, mats)
    return Representation("pi_sigma", x, br, gen, inv)


def trivial_representation(br: Brackets) -> Representation:
    """The counit channel written as a representation on the unit object."""
    i = unit_obj(br.n_h)
    n = br.action.x.size
    gen, inv = {}, {}
    for a in range(n):
        for b in range(n):
            for table, letter in ((gen, Gen(a, b)), (inv, GenInv(a, b))):
                alpha, beta = br.letter_degree(letter)
                img = phi0(letter_counit(letter, br))
                comp = img.terms.get((alpha, beta))
                if comp is None:
                    comp = zero(*component_shape(i, alpha, beta))
                table[(a, b)] = comp
    return Representation("trivial", i, br, gen, inv)
