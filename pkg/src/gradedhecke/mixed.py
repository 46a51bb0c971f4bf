"""Toy model of constructible mixed complexes over a point.

A mixed object is a Bigraded complex whose graded degree is read as the
naive Frobenius weight, together with, on every bidegree, an invertible
rational matrix theta (the unit part of Frobenius) commuting with the
differentials.  Frobenius itself is never evaluated: it is the pair
(weight grading, theta), with q kept symbolic.  Semisimplification
forgets theta and keeps the weight grading; the graded Hom between
semisimplifications is the weight-0 part of the enriched Hom, which the
operations below realize concretely.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .bigraded import Bigraded, hom_complex, shift_gr, tensor, unit as bigraded_unit, _splittings
from .errors import BadLevels, LevelMismatch, NonHalfIntegerTwist

MAX_THETA_ORDER = 24


def _identity_theta(under: Bigraded):
    return {k: linalg.identity(d) for k, d in under.entries.items()}


def _nilpotent(m) -> bool:
    n = len(m)
    p = m
    for _ in range(n):
        if linalg.is_zero_matrix(p):
            return True
        p = linalg.mat_mul(p, m)
    return linalg.is_zero_matrix(p)


def quasi_unipotent_witness(m, max_order=MAX_THETA_ORDER):
    """Smallest r with (m^r - 1) nilpotent, or None."""
    n = len(m)
    if n == 0:
        return 1
    p = linalg.identity(n)
    for r in range(1, max_order + 1):
        p = linalg.mat_mul(p, m)
        if _nilpotent(linalg.mat_sub(p, linalg.identity(n))):
            return r
    return None


class MixedObject:
    """Bigraded complex with quasi-unipotent Frobenius unit part."""

    __slots__ = ("underlying", "theta", "level", "theta_order")

    def __init__(self, underlying: Bigraded, theta=None, level: int = 1, check=True):
        self.underlying = underlying
        self.level = int(level)
        if self.level < 1:
            raise BadLevels(f"level must be positive, got {level}")
        self.theta = theta if theta is not None else _identity_theta(underlying)
        self.theta = {k: m for k, m in self.theta.items() if k in underlying.entries}
        self.theta_order = {}
        if check:
            self._validate()

    def _validate(self):
        for k, d in self.underlying.entries.items():
            th = self.theta.get(k)
            if th is None or len(th) != d:
                raise ValueError(f"theta missing or wrong size at {k}")
            if linalg.inverse(th) is None:
                raise ValueError(f"theta not invertible at {k}")
            r = quasi_unipotent_witness(th)
            if r is None:
                raise ValueError(f"theta not quasi-unipotent at {k}")
            self.theta_order[k] = r
        for (g, c), m in self.underlying.diff.items():
            if (g, c + 1) in self.theta:
                lhs = linalg.mat_mul(self.theta[(g, c + 1)], m)
                rhs = linalg.mat_mul(m, self.theta[(g, c)])
                if not linalg.mat_eq(lhs, rhs):
                    raise ValueError(f"theta does not commute with d at {(g, c)}")

    def to_json(self):
        return {
            "level": self.level,
            "bigraded": self.underlying.to_json(),
            "theta": [
                {"g": g, "c": c, "matrix": [[str(Fraction(x)) for x in row] for row in m]}
                for (g, c), m in sorted(self.theta.items())
            ],
        }

    @classmethod
    def from_json(cls, data):
        under = Bigraded.from_json(data["bigraded"])
        theta = {
            (t["g"], t["c"]): [[Fraction(x) for x in row] for row in t["matrix"]]
            for t in data["theta"]
        }
        return cls(under, theta, data["level"])

    def __repr__(self):
        return f"MixedObject(level={self.level}, {self.underlying!r})"


class MixedHom(MixedObject):
    """Enriched Hom object: graded degree records relative naive weight."""


def unit(level: int = 1) -> MixedObject:
    return MixedObject(bigraded_unit(), level=level)


def gr(m: MixedObject) -> Bigraded:
    """Frobenius semisimplification: forget theta, keep the weight grading."""
    return m.underlying


def tate_twist(m: MixedObject, k) -> MixedObject:
    """Twist by k (2k integral): weights shift by -2k, theta transported."""
    k = Fraction(k)
    if (2 * k).denominator != 1:
        raise NonHalfIntegerTwist(f"2k = {2 * k} is not an integer")
    s = int(2 * k)
    under = shift_gr(m.underlying, s)
    theta = {(g - s, c): th for (g, c), th in m.theta.items()}
    return MixedObject(under, theta, m.level, check=False)


def _require_same_level(m, n):
    if m.level != n.level:
        raise LevelMismatch(f"levels {m.level} and {n.level} differ")


def hom_enriched(m: MixedObject, n: MixedObject) -> MixedHom:
    """Enriched Hom: underlying complex hom_complex(gr m, gr n) graded by
    relative weight; theta acts by conjugation."""
    _require_same_level(m, n)
    under = hom_complex(m.underlying, n.underlying)
    theta = {}
    for (g, c), dim in under.entries.items():
        big = linalg.zeros(dim, dim)
        pos = 0
        for (a, b) in sorted(m.underlying.entries):
            if (a + g, b + c) not in n.underlying.entries:
                continue
            th_n = n.theta[(a + g, b + c)]
            th_m_inv = linalg.inverse(m.theta[(a, b)])
            n_t, n_s = len(th_n), len(th_m_inv)
            # phi -> th_n . phi . th_m^{-1} on row-major (p, q) coordinates
            for p in range(n_t):
                for q in range(n_s):
                    for p2 in range(n_t):
                        for q2 in range(n_s):
                            val = th_n[p][p2] * th_m_inv[q2][q]
                            if val:
                                big[pos + p * n_s + q][pos + p2 * n_s + q2] = val
            pos += n_t * n_s
        theta[(g, c)] = big
    return MixedHom(under, theta, m.level, check=False)


def _weight_zero_piece(under: Bigraded) -> Bigraded:
    entries = {(0, c): d for (g, c), d in under.entries.items() if g == 0}
    basis = {(0, c): under.basis[(0, c)] for (g, c) in under.entries if g == 0}
    diff = {(0, c): mm for (g, c), mm in under.diff.items() if g == 0}
    return Bigraded(entries, diff, basis, check=False)


def hom_graded(m: MixedObject, n: MixedObject) -> Bigraded:
    """Weight-0 graded piece of gr(hom_enriched): the Hom complex in the
    graded category, one graded degree."""
    return _weight_zero_piece(hom_enriched(m, n).underlying)


def hom_graded_over(m: MixedObject, n: MixedObject, to_level: int) -> Bigraded:
    """Graded Hom of level-n objects computed in the category of graded
    sheaves over a smaller base: the enriched Hom (itself a mixed object
    over the objects' level) is induced down to to_level before its
    weight-0 part is taken.  For the unit over pt_2 this gives dimension
    2 when to_level = 1 and dimension 1 when to_level = 2."""
    enr = hom_enriched(m, n)
    return _weight_zero_piece(gr(induce(enr, to_level)))


def hom_mixed(m: MixedObject, n: MixedObject) -> Bigraded:
    """Total mixed Hom: the two-term invariants/coinvariants complex of
    (1 - theta) on the weight-0 part of the enriched Hom."""
    enr = hom_enriched(m, n)
    under, theta = enr.underlying, enr.theta
    h0 = {c: d for (g, c), d in under.entries.items() if g == 0}
    entries, diff = {}, {}
    for c in set(h0) | {c + 1 for c in h0}:
        d = h0.get(c, 0) + h0.get(c - 1, 0)
        if d:
            entries[(0, c)] = d
    for c in sorted({k[1] for k in entries}):
        n0, n1 = h0.get(c, 0), h0.get(c - 1, 0)
        m0, m1 = h0.get(c + 1, 0), h0.get(c, 0)
        if (0, c + 1) not in entries:
            continue
        mat = linalg.zeros(m0 + m1, n0 + n1)
        dmat = under.d(0, c) if n0 and m0 else None
        if dmat:
            for i in range(m0):
                for j in range(n0):
                    mat[i][j] = dmat[i][j]
        if n0 and m1:
            th = theta[(0, c)]
            for i in range(n0):
                for j in range(n0):
                    mat[m0 + i][j] = (1 if i == j else 0) - th[i][j]
        if n1 and m1:
            dprev = under.d(0, c - 1)
            for i in range(m1):
                for j in range(n1):
                    mat[m0 + i][n0 + j] = -dprev[i][j]
        diff[(0, c)] = mat
    return Bigraded(entries, diff, check=False)


def induce(m: MixedObject, to_level: int) -> MixedObject:
    """Extension of scalars from pt_{m.level} down to pt_{to_level}: the
    underlying space is repeated level/to_level times; theta becomes the
    cyclic companion block whose power recovers the original theta."""
    if to_level < 1 or m.level % to_level:
        raise BadLevels(f"{to_level} does not divide {m.level}")
    d = m.level // to_level
    if d == 1:
        return MixedObject(m.underlying, m.theta, to_level, check=False)
    under = m.underlying
    entries = {k: dim * d for k, dim in under.entries.items()}
    basis = {
        k: [f"{b}#{i}" for i in range(d) for b in under.basis[k]] for k in under.entries
    }
    diff = {}
    for (g, c), mat in under.diff.items():
        nr, nc = len(mat), len(mat[0])
        big = linalg.zeros(nr * d, nc * d)
        for blk in range(d):
            for i in range(nr):
                for j in range(nc):
                    big[blk * nr + i][blk * nc + j] = mat[i][j]
        diff[(g, c)] = big
    theta = {}
    for k, th in m.theta.items():
        n = len(th)
        big = linalg.zeros(n * d, n * d)
        for blk in range(d - 1):
            for i in range(n):
                big[(blk + 1) * n + i][blk * n + i] = Fraction(1)
        for i in range(n):
            for j in range(n):
                big[i][(d - 1) * n + j] = th[i][j]
        theta[k] = big
    return MixedObject(Bigraded(entries, diff, basis, check=False), theta, to_level, check=False)


def tensor_mixed(m: MixedObject, n: MixedObject) -> MixedObject:
    """Tensor of mixed objects: Day convolution with blockwise Kronecker theta."""
    _require_same_level(m, n)
    under = tensor(m.underlying, n.underlying)
    theta = {}
    for (g, c), dim in under.entries.items():
        big = linalg.zeros(dim, dim)
        pos = 0
        for (g1, c1, g2, c2) in _splittings(m.underlying, n.underlying, g, c):
            a, b = m.theta[(g1, c1)], n.theta[(g2, c2)]
            n1, n2 = len(a), len(b)
            for i in range(n1):
                for k in range(n2):
                    for j in range(n1):
                        for l in range(n2):
                            val = a[i][j] * b[k][l]
                            if val:
                                big[pos + i * n2 + k][pos + j * n2 + l] = val
            pos += n1 * n2
        theta[(g, c)] = big
    return MixedObject(under, theta, m.level, check=False)


def collapse_grading(v: Bigraded) -> Bigraded:
    """Forget the graded direct-sum decomposition: everything to g = 0."""
    entries, basis, diff = {}, {}, {}
    cs = sorted({c for (_, c) in v.entries})
    offsets = {}
    for c in cs:
        gs = sorted(g for (g, cc) in v.entries if cc == c)
        off, pos, labels = {}, 0, []
        for g in gs:
            off[g] = pos
            labels += v.basis[(g, c)]
            pos += v.dim(g, c)
        entries[(0, c)] = pos
        basis[(0, c)] = labels
        offsets[c] = off
    for c in cs:
        if (0, c + 1) not in entries:
            continue
        mat = linalg.zeros(entries[(0, c + 1)], entries[(0, c)])
        any_nz = False
        for g, src in offsets[c].items():
            if g in offsets.get(c + 1, {}):
                d = v.d(g, c)
                tgt = offsets[c + 1][g]
                for i in range(v.dim(g, c + 1)):
                    for j in range(v.dim(g, c)):
                        if d[i][j]:
                            mat[tgt + i][src + j] = d[i][j]
                            any_nz = True
        if any_nz:
            diff[(0, c)] = mat
    return Bigraded(entries, diff, basis, check=False)


def oblv_gr_sum(m: MixedObject, n: MixedObject):
    """Check the sum-over-shifts Hom identity: the total dimension table of
    all graded Homs into grading shifts of n equals the Hom table after
    forgetting the grading entirely.  Returns (lhs_table, rhs_table, ok)."""
    _require_same_level(m, n)
    enr = hom_enriched(m, n)
    lhs = {}
    for (g, c), d in enr.underlying.entries.items():
        # weight-0 part of Hom(m, n twisted by g/2) is the g-piece here
        lhs[c] = lhs.get(c, 0) + d
    rhs_cx = hom_complex(collapse_grading(m.underlying), collapse_grading(n.underlying))
    rhs = {}
    for (g, c), d in rhs_cx.entries.items():
        rhs[c] = rhs.get(c, 0) + d
    return lhs, rhs, lhs == rhs
