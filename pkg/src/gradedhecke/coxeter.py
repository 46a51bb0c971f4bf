"""Finite Coxeter systems: exact reflection representations on the root
lattice, canonical reduced words, Bruhat order, and the action on
polynomials.

The realization is by simple roots: the reflection s sends alpha_t to
alpha_t - <alpha_s^vee, alpha_t> alpha_s, so everything is determined by
the Cartan pairing matrix.  Crystallographic types (A_n, B2, I2(m) for
m in {2,3,4,6}) stay over the rationals; I2(5) uses the golden ratio in
Q(sqrt 5).
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .errors import BoundExceeded, SystemMismatch, UnknownGenerator
from .polynomial import Poly
from .scalars import Sqrt5

GENERATOR_LETTERS = "stuvw"
DEFAULT_BOUND = 1200

_PHI = Sqrt5(Fraction(1, 2), Fraction(1, 2))  # (1 + sqrt 5) / 2


def _cartan_entry(m, s_lt_t):
    """Off-diagonal Cartan entry for bond label m (a_{st} with s != t)."""
    if m == 2:
        return Fraction(0)
    if m == 3:
        return Fraction(-1)
    if m == 4:
        return Fraction(-1) if s_lt_t else Fraction(-2)
    if m == 6:
        return Fraction(-1) if s_lt_t else Fraction(-3)
    if m == 5:
        return -_PHI
    raise ValueError(f"unsupported bond label m = {m}")


def _named_coxeter_matrix(name):
    name = name.strip()
    mm = re.fullmatch(r"A([1-4])", name)
    if mm:
        n = int(mm.group(1))
        return [
            [1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)]
            for i in range(n)
        ]
    if name == "B2":
        return [[1, 4], [4, 1]]
    mm = re.fullmatch(r"I2\((\d+)\)", name)
    if mm:
        m = int(mm.group(1))
        return [[1, m], [m, 1]]
    raise ValueError(f"unknown system name {name!r}")


class GroupElement:
    """Element in canonical form: the lex-least reduced word."""

    __slots__ = ("system", "word", "matrix", "index")

    def __init__(self, system, word, matrix, index):
        self.system = system
        self.word = tuple(word)
        self.matrix = matrix
        self.index = index

    @property
    def length(self):
        return len(self.word)

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.system is other.system
            and self.word == other.word
        )

    def __hash__(self):
        return hash((id(self.system), self.word))

    def __repr__(self):
        return f"<{self.system.word_str(self.word) or 'e'}>"

    def inverse(self):
        return self.system.from_word(reversed(self.word))

    def left_descents(self):
        return frozenset(
            s for s in range(self.system.rank)
            if self.system.left_mult(s, self).length < self.length
        )

    def right_descents(self):
        return frozenset(
            s for s in range(self.system.rank)
            if self.system.right_mult(self, s).length < self.length
        )


class CoxeterSystem:
    """A finite Coxeter system enumerated at construction."""

    def __init__(self, spec, bound=DEFAULT_BOUND):
        if isinstance(spec, str) and spec.lstrip().startswith("["):
            spec = json.loads(spec)
        if isinstance(spec, str):
            self.name = spec.strip()
            self.coxeter_matrix = _named_coxeter_matrix(spec)
        else:
            self.name = "custom"
            self.coxeter_matrix = [list(map(int, row)) for row in spec]
        n = self.rank = len(self.coxeter_matrix)
        for i in range(n):
            if self.coxeter_matrix[i][i] != 1:
                raise ValueError("coxeter matrix diagonal must be 1")
            for j in range(n):
                if self.coxeter_matrix[i][j] != self.coxeter_matrix[j][i]:
                    raise ValueError("coxeter matrix must be symmetric")
                if i != j and self.coxeter_matrix[i][j] < 2:
                    raise ValueError("off-diagonal entries must be >= 2")
        if n > len(GENERATOR_LETTERS):
            raise ValueError("rank too large")
        self.generators = list(GENERATOR_LETTERS[:n])
        self.cartan = [
            [
                Fraction(2) if i == j else _cartan_entry(self.coxeter_matrix[i][j], i < j)
                for j in range(n)
            ]
            for i in range(n)
        ]
        self.uses_sqrt5 = any(
            isinstance(x, Sqrt5) for row in self.cartan for x in row
        )
        self.reflections = [self._reflection_matrix(s) for s in range(n)]
        self._check_braid_relations()
        self._enumerate(bound)

    # -- construction helpers ------------------------------------------

    def _reflection_matrix(self, s):
        n = self.rank
        m = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        for t in range(n):
            m[s][t] = m[s][t] - self.cartan[s][t]
        return m

    @staticmethod
    def _mat_mul(a, b):
        n = len(a)
        return [
            [sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
            for i in range(n)
        ]

    @staticmethod
    def _mat_key(m):
        return tuple(tuple(row) for row in m)

    def _check_braid_relations(self):
        for s in range(self.rank):
            for t in range(s + 1, self.rank):
                m = self.coxeter_matrix[s][t]
                a = self._mat_key(self._alternating(s, t, m))
                b = self._mat_key(self._alternating(t, s, m))
                if a != b:
                    raise ValueError(f"braid relation m({s},{t})={m} fails")

    def _alternating(self, s, t, m):
        out = [[Fraction(1) if i == j else Fraction(0) for j in range(self.rank)] for i in range(self.rank)]
        for i in range(m):
            out = self._mat_mul(out, self.reflections[s if i % 2 == 0 else t])
        return out

    def _enumerate(self, bound):
        ident = [[Fraction(1) if i == j else Fraction(0) for j in range(self.rank)] for i in range(self.rank)]
        self.elements = []
        self._by_key = {}
        e = GroupElement(self, (), ident, 0)
        self.elements.append(e)
        self._by_key[self._mat_key(ident)] = e
        frontier = [e]
        while frontier:
            nxt = []
            for el in sorted(frontier, key=lambda x: x.word):
                for s in range(self.rank):
                    m = self._mat_mul(el.matrix, self.reflections[s])
                    key = self._mat_key(m)
                    if key not in self._by_key:
                        new = GroupElement(self, el.word + (s,), m, len(self.elements))
                        self.elements.append(new)
                        self._by_key[key] = new
                        nxt.append(new)
                        if len(self.elements) > bound:
                            raise BoundExceeded(
                                f"enumeration exceeded {bound} elements"
                            )
            frontier = nxt
        self.elements.sort(key=lambda x: (x.length, x.word))
        for i, el in enumerate(self.elements):
            el.index = i

    # -- queries -------------------------------------------------------

    @property
    def order(self):
        return len(self.elements)

    @property
    def identity(self):
        return self.elements[0]

    def simple(self, s):
        return self._by_key[self._mat_key(self.reflections[s])]

    def longest(self):
        return self.elements[-1]

    def lookup(self, matrix):
        return self._by_key[self._mat_key(matrix)]

    def from_word(self, word):
        m = [[Fraction(1) if i == j else Fraction(0) for j in range(self.rank)] for i in range(self.rank)]
        for s in word:
            if not 0 <= s < self.rank:
                raise UnknownGenerator(f"generator index {s}")
            m = self._mat_mul(m, self.reflections[s])
        return self._by_key[self._mat_key(m)]

    def parse_word(self, text):
        """Word from letters, e.g. 'sts' -> (0, 1, 0)."""
        out = []
        for ch in text.strip():
            if ch in " ,":
                continue
            if ch not in self.generators:
                raise UnknownGenerator(f"generator {ch!r}")
            out.append(self.generators.index(ch))
        return tuple(out)

    def word_str(self, word):
        return "".join(self.generators[s] for s in word)

    def multiply(self, a: GroupElement, b: GroupElement) -> GroupElement:
        if a.system is not self or b.system is not self:
            raise SystemMismatch("elements from different systems")
        return self.lookup(self._mat_mul(a.matrix, b.matrix))

    def right_mult(self, a: GroupElement, s: int) -> GroupElement:
        return self.lookup(self._mat_mul(a.matrix, self.reflections[s]))

    def left_mult(self, s: int, a: GroupElement) -> GroupElement:
        return self.lookup(self._mat_mul(self.reflections[s], a.matrix))

    def bruhat_leq(self, a: GroupElement, b: GroupElement) -> bool:
        if a.system is not self or b.system is not self:
            raise SystemMismatch("elements from different systems")
        if a.length == 0:
            return True
        if a.length > b.length:
            return False
        if a == b:
            return True
        # classic recursion on a right descent of b
        s = next(iter(b.right_descents()))
        bs = self.right_mult(b, s)
        a_s = self.right_mult(a, s)
        if a_s.length < a.length:
            return self.bruhat_leq(a_s, bs)
        return self.bruhat_leq(a, bs)

    def act(self, w: GroupElement, f: Poly) -> Poly:
        if w.system is not self:
            raise SystemMismatch("element from a different system")
        if f.nvars != self.rank:
            raise SystemMismatch("polynomial has wrong variable count")
        return f.subs_linear(w.matrix)

    def act_simple(self, s: int, f: Poly) -> Poly:
        return f.subs_linear(self.reflections[s])

    def demazure(self, s: int, f: Poly) -> Poly:
        """Divided difference (f - s.f) / alpha_s."""
        return (f - self.act_simple(s, f)).divexact_var(s)

    def root_poly(self, s: int) -> Poly:
        return Poly.var(self.rank, s)

    def __repr__(self):
        return f"CoxeterSystem({self.name}, order={self.order})"
