"""Multivariate polynomials over Q or Q(sqrt 5), in the simple-root
variables of a Coxeter realization.  Each variable has internal degree 2
(the Soergel-category convention), which callers account for via
`degree2`.  Supports the linear substitutions needed for the W-action
and the exact division by a root variable needed for Demazure operators.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Sqrt5


def _coerce(c):
    if isinstance(c, (Fraction, Sqrt5)):
        return c
    return Fraction(c)


class Poly:
    """terms: {exponent tuple: nonzero coefficient}; nvars fixed."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for m, c in terms.items():
                c = _coerce(c)
                if c:
                    self.terms[tuple(m)] = c

    @classmethod
    def const(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i, coeff=1):
        m = [0] * nvars
        m[i] = 1
        return cls(nvars, {tuple(m): coeff})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Sqrt5)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _same(self, other):
        if isinstance(other, (int, Fraction, Sqrt5)):
            return Poly.const(self.nvars, other)
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return None

    def __add__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return self._same(other) - self

    def __mul__(self, other):
        o = self._same(other)
        if o is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = Poly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def degree(self):
        """Max total degree in the variables, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def degree2(self):
        """Internal degree (variables count 2), or None for zero."""
        d = self.degree()
        return None if d is None else 2 * d

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {sum(m) for m in self.terms}
        return len(degs) == 1

    def homogeneous_part(self, d):
        """Terms of total variable degree d."""
        return Poly(self.nvars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def constant_coeff(self):
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def coeff(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def subs_linear(self, matrix):
        """Substitute x_j -> sum_i matrix[i][j] * x_i (ring endomorphism)."""
        images = [
            Poly(
                self.nvars,
                {
                    tuple(1 if k == i else 0 for k in range(self.nvars)): matrix[i][j]
                    for i in range(self.nvars)
                },
            )
            for j in range(self.nvars)
        ]
        out = Poly(self.nvars, {})
        for m, c in self.terms.items():
            t = Poly.const(self.nvars, c)
            for j, e in enumerate(m):
                for _ in range(e):
                    t = t * images[j]
            out = out + t
        return out

    def divexact_var(self, i):
        """Exact division by the variable x_i; raises if not divisible."""
        out = {}
        for m, c in self.terms.items():
            if m[i] < 1:
                raise ValueError(f"not divisible by variable {i}")
            mm = list(m)
            mm[i] -= 1
            out[tuple(mm)] = c
        return Poly(self.nvars, out)

    def evaluate(self, values):
        total = _coerce(0)
        for m, c in self.terms.items():
            t = c
            for j, e in enumerate(m):
                for _ in range(e):
                    t = t * values[j]
            total = total + t
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mono = "*".join(
                f"x{j}" + (f"^{e}" if e > 1 else "")
                for j, e in enumerate(m)
                if e
            )
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
