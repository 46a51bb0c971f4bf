"""Hecke algebra over Z[v, v^-1], Kazhdan-Lusztig basis, the Hom-rank
pairing, and the Jones-Ocneanu trace.

Normalization: H_s^2 = 1 + (v^-1 - v) H_s and b_s = H_s + v; the bar
involution sends v to v^-1 and H_w to the inverse of H_{w^-1}.  The
pairing eps(a(bar(x)) y) computes graded ranks of bimodule Hom spaces:
its values on KL basis elements b_x, b_y match the degreewise linear
algebra of the Soergel category (e.g. (b_s, b_s) = 1 + v^2, the
endomorphism ring generated in degrees 0 and 2, and (b_s, b_e) = v).
"""

from __future__ import annotations

import sympy

from .coxeter import CoxeterSystem, GroupElement
from .errors import BasisMismatch, NotTypeA, SystemMismatch
from .laurent import ONE, LaurentPoly, V


class HeckeElement:
    """Finitely supported map GroupElement -> LaurentPoly with a basis tag."""

    __slots__ = ("system", "coeffs", "basis")

    def __init__(self, system, coeffs=None, basis="H"):
        self.system = system
        self.basis = basis
        self.coeffs = {}
        if coeffs:
            for w, p in coeffs.items():
                if not isinstance(p, LaurentPoly):
                    p = LaurentPoly.const(p)
                if p:
                    self.coeffs[w] = p

    @classmethod
    def unit(cls, system):
        return cls(system, {system.identity: ONE})

    @classmethod
    def std(cls, system, w: GroupElement):
        return cls(system, {w: ONE})

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElement)
            and self.system is other.system
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if self.system is not other.system:
            raise SystemMismatch("elements over different Coxeter systems")
        if self.basis != other.basis:
            raise BasisMismatch(f"bases {self.basis!r} and {other.basis!r}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for w, p in other.coeffs.items():
            out[w] = out.get(w, LaurentPoly()) + p
        return HeckeElement(self.system, out, self.basis)

    def __neg__(self):
        return HeckeElement(
            self.system, {w: -p for w, p in self.coeffs.items()}, self.basis
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p):
        if not isinstance(p, LaurentPoly):
            p = LaurentPoly.const(p)
        return HeckeElement(
            self.system, {w: p * q for w, q in self.coeffs.items()}, self.basis
        )

    def coeff(self, w):
        return self.coeffs.get(w, LaurentPoly())

    def support(self):
        return sorted(self.coeffs, key=lambda w: (w.length, w.word))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for w in self.support():
            word = self.system.word_str(w.word) or "e"
            parts.append(f"({self.coeffs[w]})*{self.basis}_{word}")
        return " + ".join(parts)


def _right_mult_gen(x: HeckeElement, s: int) -> HeckeElement:
    """x * H_s in the standard basis."""
    sys = x.system
    out = {}
    for w, p in x.coeffs.items():
        ws = sys.right_mult(w, s)
        if ws.length > w.length:
            out[ws] = out.get(ws, LaurentPoly()) + p
        else:
            out[ws] = out.get(ws, LaurentPoly()) + p
            out[w] = out.get(w, LaurentPoly()) + (V.bar() - V) * p
    return HeckeElement(sys, out)


def mult(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    x._check(y)
    if x.basis != "H":
        raise BasisMismatch("multiplication requires the standard basis")
    sys = x.system
    total = HeckeElement(sys)
    for w, p in y.coeffs.items():
        term = x
        for s in w.word:
            term = _right_mult_gen(term, s)
        total = total + term.scale(p)
    return total


def _gen_inverse(system, s) -> HeckeElement:
    """H_s^{-1} = H_s + (v - v^{-1})."""
    return HeckeElement(
        system, {system.simple(s): ONE, system.identity: V - V.bar()}
    )


def bar(x: HeckeElement) -> HeckeElement:
    """The bar involution: v -> v^{-1}, H_w -> (H_{w^{-1}})^{-1}."""
    if x.basis != "H":
        raise BasisMismatch("bar acts on the standard basis")
    sys = x.system
    total = HeckeElement(sys)
    for w, p in x.coeffs.items():
        term = HeckeElement.unit(sys)
        for s in w.word:
            term = mult(term, _gen_inverse(sys, s))
        total = total + term.scale(p.bar())
    return total


def alpha(x: HeckeElement) -> HeckeElement:
    """The v-linear anti-automorphism H_w -> H_{w^{-1}}."""
    return HeckeElement(
        x.system, {w.inverse(): p for w, p in x.coeffs.items()}, x.basis
    )


def eps(x: HeckeElement) -> LaurentPoly:
    """Coefficient of H_e."""
    return x.coeff(x.system.identity)


def kl_basis(system: CoxeterSystem, w: GroupElement) -> HeckeElement:
    """The Kazhdan-Lusztig element b_w in the standard basis."""
    cache = getattr(system, "_kl_cache", None)
    if cache is None:
        cache = system._kl_cache = {}
    if w in cache:
        return cache[w]
    if w.length == 0:
        out = HeckeElement.unit(system)
    else:
        s = min(w.left_descents())
        u = system.left_mult(s, w)
        b_s = HeckeElement(
            system, {system.simple(s): ONE, system.identity: V}
        )
        cand = mult(b_s, kl_basis(system, u))
        # subtract lower KL terms so every off-diagonal coefficient
        # lies in v Z[v]
        for x in sorted(cand.support(), key=lambda t: -t.length):
            if x == w:
                continue
            m = cand.coeff(x).coeff(0)
            if m:
                cand = cand - kl_basis(system, x).scale(m)
        out = cand
    cache[w] = out
    return out


def in_kl_basis(x: HeckeElement) -> dict:
    """Coefficients of x in the KL basis: {w: LaurentPoly}."""
    if x.basis != "H":
        raise BasisMismatch("conversion starts from the standard basis")
    rest = x
    out = {}
    while rest:
        w = max(rest.support(), key=lambda t: (t.length, t.word))
        p = rest.coeff(w)
        out[w] = p
        rest = rest - kl_basis(x.system, w).scale(p)
    return out


def hom_rank_pairing(x: HeckeElement, y: HeckeElement) -> LaurentPoly:
    """eps(a(bar(x)) y): the graded rank of Hom between Soergel bimodules
    with characters x and y, as a free left module."""
    if x.system is not y.system:
        raise SystemMismatch("elements over different Coxeter systems")
    return eps(mult(alpha(bar(x)), y))


# -- Jones-Ocneanu trace ----------------------------------------------

A_VAR, V_VAR = sympy.symbols("a v")
_Z = (V_VAR - 1 / V_VAR) / (A_VAR**2 - 1)
_MU = 1 / (A_VAR * _Z)


def _check_type_a(system):
    if not (system.name and system.name.startswith("A")):
        raise NotTypeA(f"system {system.name!r} is not of type A")


def braid_class(system: CoxeterSystem, signed_word) -> HeckeElement:
    """Image of a braid word in the Hecke algebra; entries are nonzero
    signed generator numbers (1-based, negative for inverse crossings)."""
    _check_type_a(system)
    out = HeckeElement.unit(system)
    for g in signed_word:
        s = abs(g) - 1
        if not 0 <= s < system.rank:
            raise SystemMismatch(f"braid letter {g} out of range")
        out = mult(out, HeckeElement.std(system, system.simple(s))
                   if g > 0 else _gen_inverse(system, s))
    return out


def _sym_coeffs(x: HeckeElement):
    return {w: sympy.Rational(0) + _laurent_to_sympy(p) for w, p in x.coeffs.items()}


def _laurent_to_sympy(p: LaurentPoly):
    return sum(sympy.Integer(c) * V_VAR**e for e, c in p.coeffs.items())


def _markov_trace(system, coeffs):
    """Conditional-expectation trace: tr(H_e) = 1, tr(x H_g y) = z tr(xy)
    for the top generator g, with a free strand contributing factor 1."""
    total = sympy.Rational(0)
    for w, c in coeffs.items():
        if c == 0:
            continue
        if w.length == 0:
            total += c
            continue
        g = max(w.word)
        # coset normal form w = u . (g, g-1, ..., j) with u below g
        for j in range(g, -1, -1):
            tail = tuple(range(g, j - 1, -1))
            cj = system.from_word(tail)
            u = system.multiply(w, cj.inverse())
            if u.length + len(tail) == w.length and (
                not u.word or max(u.word) < g
            ):
                break
        else:  # pragma: no cover - normal form always exists
            raise RuntimeError("no coset normal form found")
        cprime = system.from_word(tuple(range(g - 1, j - 1, -1)))
        prod = mult(HeckeElement.std(system, u), HeckeElement.std(system, cprime))
        total += c * _Z * _markov_trace(system, _sym_coeffs(prod))
    return total


def jones_ocneanu_trace(x: HeckeElement, strands: int, writhe: int = 0):
    """HOMFLY-PT polynomial of the closure of a braid whose Hecke image is
    x, as a sympy expression in (a, v).  The writhe is the exponent sum of
    the braid word (needed for the framing factor a^e)."""
    _check_type_a(x.system)
    tr = _markov_trace(x.system, _sym_coeffs(x))
    return sympy.simplify(
        sympy.factor(A_VAR**writhe * _MU ** (strands - 1) * tr)
    )


def homfly_of_braid(signed_word, strands):
    """Convenience wrapper: braid word -> HOMFLY-PT of the closure."""
    if strands < 1:
        raise ValueError("strand count must be positive")
    if strands == 1:
        if signed_word:
            raise ValueError("no generators exist on one strand")
        return sympy.Integer(1)
    system = CoxeterSystem(f"A{strands - 1}")
    x = braid_class(system, signed_word)
    return jones_ocneanu_trace(x, strands, writhe=sum(1 if g > 0 else -1 for g in signed_word))
