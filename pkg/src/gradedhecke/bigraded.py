"""Bigraded rational complexes and their weight/t-structure operations.

An object is a finite family of finite-dimensional vector spaces indexed by
(g, c) = (graded degree, cohomological degree) together with differentials
d : (g, c) -> (g, c+1).  The graded degree is a direct-sum decomposition, so
d never moves g.  The weight of the bidegree (g, c) is g - c; the weight
heart is the diagonal g = c.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import NotPure


def weight(g: int, c: int) -> int:
    return g - c


class Bigraded:
    """A bounded complex of graded vector spaces with explicit bases.

    entries: {(g, c): dim}, diff: {(g, c): matrix} with shape
    dim(g, c+1) x dim(g, c).  Values are conventionally immutable; all
    operations return new objects.
    """

    __slots__ = ("entries", "basis", "diff")

    def __init__(self, entries, diff=None, basis=None, check=True):
        self.entries = {k: int(d) for k, d in entries.items() if d}
        self.diff = {}
        if diff:
            for k, m in diff.items():
                if k in self.entries and (k[0], k[1] + 1) in self.entries:
                    if any(any(x for x in row) for row in m):
                        self.diff[k] = [[Fraction(x) if not hasattr(x, "a") else x for x in row] for row in m]
        self.basis = {}
        for k, d in self.entries.items():
            if basis and k in basis:
                self.basis[k] = list(basis[k])
            else:
                self.basis[k] = [f"e{k[0]},{k[1]},{i}" for i in range(d)]
        if check:
            self._validate()

    def _validate(self):
        for (g, c), m in self.diff.items():
            if len(m) != self.dim(g, c + 1) or (m and len(m[0]) != self.dim(g, c)):
                raise ValueError(f"differential at {(g, c)} has wrong shape")
            nxt = self.diff.get((g, c + 1))
            if nxt is not None:
                if not linalg.is_zero_matrix(linalg.mat_mul(nxt, m)):
                    raise ValueError(f"d o d != 0 at {(g, c)}")

    def dim(self, g, c):
        return self.entries.get((g, c), 0)

    def d(self, g, c):
        m = self.diff.get((g, c))
        if m is None:
            return linalg.zeros(self.dim(g, c + 1), self.dim(g, c))
        return m

    def bidegrees(self):
        return sorted(self.entries)

    def total_dim(self):
        return sum(self.entries.values())

    def is_zero(self):
        return not self.entries

    def graded_degrees(self):
        return sorted({g for g, _ in self.entries})

    def weight_bounds(self):
        """(min, max) of g - c over the support; (None, None) if zero."""
        if not self.entries:
            return None, None
        ws = [g - c for g, c in self.entries]
        return min(ws), max(ws)

    def same_dims(self, other) -> bool:
        return self.entries == other.entries

    def cohomology_dims(self):
        """{(g, c): dim H^c of the g-th graded piece}."""
        out = {}
        keys = set(self.entries)
        for g, c in sorted(keys):
            z = self.dim(g, c) - linalg.fast_rank(self.d(g, c)) if self.dim(g, c) else 0
            b = linalg.fast_rank(self.d(g, c - 1)) if self.dim(g, c - 1) else 0
            h = z - b
            if h:
                out[(g, c)] = h
        return out

    def poincare(self):
        """Dimension table {(g, c): dim} (a copy)."""
        return dict(self.entries)

    # -- serialization -------------------------------------------------

    def to_json(self):
        ents = [
            {"g": g, "c": c, "dim": self.entries[(g, c)], "basis_labels": self.basis[(g, c)]}
            for g, c in sorted(self.entries)
        ]
        diffs = [
            {"g": g, "c": c, "matrix": [[str(Fraction(x)) for x in row] for row in m]}
            for (g, c), m in sorted(self.diff.items())
        ]
        return {"entries": ents, "differentials": diffs}

    @classmethod
    def from_json(cls, data):
        entries = {(e["g"], e["c"]): e["dim"] for e in data["entries"]}
        basis = {(e["g"], e["c"]): e.get("basis_labels") for e in data["entries"]}
        diff = {
            (d["g"], d["c"]): [[Fraction(x) for x in row] for row in d["matrix"]]
            for d in data["differentials"]
        }
        return cls(entries, diff, basis)

    def __repr__(self):
        if not self.entries:
            return "Bigraded(0)"
        parts = ", ".join(f"({g},{c}):{d}" for (g, c), d in sorted(self.entries.items()))
        return f"Bigraded({parts})"


def unit():
    """The monoidal unit: one dimension at (0, 0)."""
    return Bigraded({(0, 0): 1}, basis={(0, 0): ["1"]})


def zero():
    return Bigraded({})


def shift_coh(vv: Bigraded, n: int) -> Bigraded:
    """Cohomological shift [n]: result at (g, c) is vv at (g, c + n)."""
    sign = -1 if n % 2 else 1
    entries = {(g, c - n): d for (g, c), d in vv.entries.items()}
    basis = {(g, c - n): vv.basis[(g, c)] for (g, c) in vv.entries}
    diff = {(g, c - n): linalg.mat_scale(m, sign) for (g, c), m in vv.diff.items()}
    return Bigraded(entries, diff, basis, check=False)


def shift_gr(vv: Bigraded, k: int) -> Bigraded:
    """Grading shift <k>: result at graded degree g is vv at g + k."""
    entries = {(g - k, c): d for (g, c), d in vv.entries.items()}
    basis = {(g - k, c): vv.basis[(g, c)] for (g, c) in vv.entries}
    diff = {(g - k, c): m for (g, c), m in vv.diff.items()}
    return Bigraded(entries, diff, basis, check=False)


def direct_sum(vv: Bigraded, ww: Bigraded) -> Bigraded:
    entries, basis, diff = {}, {}, {}
    for (g, c) in set(vv.entries) | set(ww.entries):
        dv, dw = vv.dim(g, c), ww.dim(g, c)
        entries[(g, c)] = dv + dw
        basis[(g, c)] = [f"L.{b}" for b in vv.basis.get((g, c), [])] + [
            f"R.{b}" for b in ww.basis.get((g, c), [])
        ]
    keys = set(entries)
    for (g, c) in keys:
        if (g, c + 1) in keys:
            a, b = vv.d(g, c), ww.d(g, c)
            nr = vv.dim(g, c + 1) + ww.dim(g, c + 1)
            nc = vv.dim(g, c) + ww.dim(g, c)
            m = linalg.zeros(nr, nc)
            for i in range(vv.dim(g, c + 1)):
                for j in range(vv.dim(g, c)):
                    m[i][j] = a[i][j]
            for i in range(ww.dim(g, c + 1)):
                for j in range(ww.dim(g, c)):
                    m[vv.dim(g, c + 1) + i][vv.dim(g, c) + j] = b[i][j]
            diff[(g, c)] = m
    return Bigraded(entries, diff, basis, check=False)


def _splittings(vv, ww, g, c):
    """Ordered splittings (g1,c1)+(g2,c2)=(g,c) with both factors nonzero."""
    out = []
    for (g1, c1) in sorted(vv.entries):
        g2, c2 = g - g1, c - c1
        if (g2, c2) in ww.entries:
            out.append((g1, c1, g2, c2))
    return out


def tensor(vv: Bigraded, ww: Bigraded) -> Bigraded:
    """Day-convolution tensor with the Koszul sign on the cohomological index."""
    entries, basis = {}, {}
    bidegs = set()
    for (g1, c1) in vv.entries:
        for (g2, c2) in ww.entries:
            bidegs.add((g1 + g2, c1 + c2))
    offsets = {}
    for (g, c) in bidegs:
        labels = []
        off = {}
        pos = 0
        for (g1, c1, g2, c2) in _splittings(vv, ww, g, c):
            off[(g1, c1)] = pos
            for b1 in vv.basis[(g1, c1)]:
                for b2 in ww.basis[(g2, c2)]:
                    labels.append(f"{b1}*{b2}")
            pos += vv.dim(g1, c1) * ww.dim(g2, c2)
        entries[(g, c)] = pos
        basis[(g, c)] = labels
        offsets[(g, c)] = off
    diff = {}
    for (g, c) in bidegs:
        if (g, c + 1) not in bidegs:
            continue
        m = linalg.zeros(entries[(g, c + 1)], entries[(g, c)])
        nonzero = False
        for (g1, c1, g2, c2) in _splittings(vv, ww, g, c):
            src = offsets[(g, c)][(g1, c1)]
            n1, n2 = vv.dim(g1, c1), ww.dim(g2, c2)
            # d_V ⊗ id
            if (g1, c1 + 1) in vv.entries and (g1, c1 + 1) in offsets[(g, c + 1)]:
                tgt = offsets[(g, c + 1)][(g1, c1 + 1)]
                dv = vv.d(g1, c1)
                for i in range(vv.dim(g1, c1 + 1)):
                    for j in range(n1):
                        x = dv[i][j]
                        if x:
                            for k in range(n2):
                                m[tgt + i * n2 + k][src + j * n2 + k] = x
                                nonzero = True
            # (-1)^{c1} id ⊗ d_W
            if (g2, c2 + 1) in ww.entries and (g1, c1) in offsets[(g, c + 1)]:
                tgt = offsets[(g, c + 1)][(g1, c1)]
                dw = ww.d(g2, c2)
                sgn = -1 if c1 % 2 else 1
                for j in range(n1):
                    for i in range(ww.dim(g2, c2 + 1)):
                        for k in range(n2):
                            x = dw[i][k]
                            if x:
                                m[tgt + j * ww.dim(g2, c2 + 1) + i][src + j * n2 + k] = sgn * x
                                nonzero = True
        if nonzero:
            diff[(g, c)] = m
    return Bigraded(entries, diff, basis, check=False)


def hom_complex(vv: Bigraded, ww: Bigraded) -> Bigraded:
    """Internal Hom: the (g, c) component consists of maps sending the
    (a, b) piece of vv into the (a+g, b+c) piece of ww, with the usual
    commutator differential."""
    entries, basis, blocks = {}, {}, {}
    bidegs = set()
    for (a, b) in vv.entries:
        for (a2, b2) in ww.entries:
            bidegs.add((a2 - a, b2 - b))
    for (g, c) in bidegs:
        off, pos, labels = {}, 0, []
        for (a, b) in sorted(vv.entries):
            if (a + g, b + c) in ww.entries:
                off[(a, b)] = pos
                n_t, n_s = ww.dim(a + g, b + c), vv.dim(a, b)
                for p in range(n_t):
                    for q in range(n_s):
                        labels.append(f"[{a},{b}]{q}->{p}")
                pos += n_t * n_s
        if pos:
            entries[(g, c)] = pos
            basis[(g, c)] = labels
            blocks[(g, c)] = off
    diff = {}
    for (g, c) in entries:
        if (g, c + 1) not in entries:
            continue
        m = linalg.zeros(entries[(g, c + 1)], entries[(g, c)])
        nonzero = False
        sgn = -1 if c % 2 else 1
        for (a, b), src in blocks[(g, c)].items():
            n_t, n_s = ww.dim(a + g, b + c), vv.dim(a, b)
            # d_W ∘ phi : lands in block (a, b) of degree (g, c+1)
            if (a, b) in blocks.get((g, c + 1), {}) and (a + g, b + c + 1) in ww.entries:
                tgt = blocks[(g, c + 1)][(a, b)]
                dw = ww.d(a + g, b + c)
                for i in range(ww.dim(a + g, b + c + 1)):
                    for p in range(n_t):
                        x = dw[i][p]
                        if x:
                            for q in range(n_s):
                                m[tgt + i * n_s + q][src + p * n_s + q] += x
                                nonzero = True
            # -(-1)^c phi ∘ d_V : block (a, b-1) of degree (g, c+1)
            if (a, b - 1) in blocks.get((g, c + 1), {}) and (a, b - 1) in vv.entries:
                tgt = blocks[(g, c + 1)][(a, b - 1)]
                dv = vv.d(a, b - 1)
                n_s0 = vv.dim(a, b - 1)
                for p in range(n_t):
                    for q in range(n_s):
                        for j in range(n_s0):
                            x = dv[q][j]
                            if x:
                                m[tgt + p * n_s0 + j][src + p * n_s + q] += -sgn * x
                                nonzero = True
        if nonzero:
            diff[(g, c)] = m
    return Bigraded(entries, diff, basis, check=False)


def weight_truncate(vv: Bigraded, n: int):
    """(low, high): low is the weight <= n subcomplex (within each graded
    piece, the cohomological degrees c >= g - n); high the quotient."""
    low_e, low_d, low_b = {}, {}, {}
    high_e, high_d, high_b = {}, {}, {}
    for (g, c), d in vv.entries.items():
        if g - c <= n:
            low_e[(g, c)] = d
            low_b[(g, c)] = vv.basis[(g, c)]
        else:
            high_e[(g, c)] = d
            high_b[(g, c)] = vv.basis[(g, c)]
    for (g, c), m in vv.diff.items():
        if (g, c) in low_e and (g, c + 1) in low_e:
            low_d[(g, c)] = m
        elif (g, c) in high_e and (g, c + 1) in high_e:
            high_d[(g, c)] = m
    return (
        Bigraded(low_e, low_d, low_b, check=False),
        Bigraded(high_e, high_d, high_b, check=False),
    )


def inclusion_map(sub: Bigraded, amb: Bigraded):
    """Chain map matrices for a truncation inclusion: identity on shared
    bidegrees (bases assumed aligned)."""
    out = {}
    for (g, c), d in sub.entries.items():
        m = linalg.zeros(amb.dim(g, c), d)
        for i in range(d):
            m[i][i] = Fraction(1)
        out[(g, c)] = m
    return out


def cone(phi, xx: Bigraded, yy: Bigraded) -> Bigraded:
    """Mapping cone of a chain map phi: xx -> yy given as {(g,c): matrix}.

    The (g, c) entry is yy(g, c) + xx(g, c+1); d(y, x) = (dy + phi(x), -dx).
    """
    entries, basis = {}, {}
    bidegs = set()
    for (g, c) in yy.entries:
        bidegs.add((g, c))
    for (g, c) in xx.entries:
        bidegs.add((g, c - 1))
    for (g, c) in bidegs:
        d = yy.dim(g, c) + xx.dim(g, c + 1)
        entries[(g, c)] = d
        basis[(g, c)] = [f"y.{b}" for b in yy.basis.get((g, c), [])] + [
            f"x.{b}" for b in xx.basis.get((g, c + 1), [])
        ]
    diff = {}
    for (g, c) in bidegs:
        if (g, c + 1) not in bidegs:
            continue
        ny1, nx1 = yy.dim(g, c + 1), xx.dim(g, c + 2)
        ny0, nx0 = yy.dim(g, c), xx.dim(g, c + 1)
        m = linalg.zeros(ny1 + nx1, ny0 + nx0)
        dy = yy.d(g, c)
        for i in range(ny1):
            for j in range(ny0):
                m[i][j] = dy[i][j]
        f = phi.get((g, c + 1))
        if f is not None:
            for i in range(ny1):
                for j in range(nx0):
                    m[i][ny0 + j] = f[i][j]
        dx = xx.d(g, c + 1)
        for i in range(nx1):
            for j in range(nx0):
                m[ny1 + i][ny0 + j] = -dx[i][j]
        diff[(g, c)] = m
    return Bigraded(entries, diff, basis, check=False)


def _express(columns, vecs):
    """Coordinates of each vec in the span of `columns` (both column lists)."""
    if not columns:
        return [[] for _ in vecs]
    mat = [[col[i] for col in columns] for i in range(len(columns[0]))]
    out = []
    for v in vecs:
        x = linalg.solve(mat, v)
        if x is None:
            raise ValueError("vector not in span")
        out.append(x)
    return out


def t_truncate(vv: Bigraded, n: int):
    """Smart truncations per graded piece: (tau_{<=n}, tau_{>=n+1})."""
    below_e, below_d, below_b = {}, {}, {}
    above_e, above_d, above_b = {}, {}, {}
    for g in vv.graded_degrees():
        cs = sorted(c for (gg, c) in vv.entries if gg == g)
        # below: keep c < n, kernel of d at c = n
        ker_basis = None
        for c in cs:
            if c < n:
                below_e[(g, c)] = vv.dim(g, c)
                below_b[(g, c)] = vv.basis[(g, c)]
                if c + 1 < n and (g, c) in vv.diff:
                    below_d[(g, c)] = vv.diff[(g, c)]
            elif c == n:
                dmat = vv.d(g, c)
                ker = linalg.nullspace(dmat) if vv.dim(g, c + 1) else [
                    [Fraction(1) if i == j else Fraction(0) for i in range(vv.dim(g, c))]
                    for j in range(vv.dim(g, c))
                ]
                if ker:
                    ker_basis = ker
                    below_e[(g, c)] = len(ker)
                    below_b[(g, c)] = [f"k{g},{c},{i}" for i in range(len(ker))]
        if ker_basis is not None and (g, n - 1) in below_e and (g, n - 1) in vv.diff:
            dmat = vv.diff[(g, n - 1)]
            cols = [[row[j] for row in dmat] for j in range(len(dmat[0]))]
            coords = _express(ker_basis, cols)
            below_d[(g, n - 1)] = [[coords[j][i] for j in range(len(cols))] for i in range(len(ker_basis))]
        # above: cokernel of d at c = n+1, keep c > n+1
        coker_keep = None
        if (g, n + 1) in vv.entries:
            dmat = vv.d(g, n)
            if vv.dim(g, n):
                cols = [[row[j] for row in dmat] for j in range(len(dmat[0]))]
                _, pivots = linalg.rref([[col[i] for col in cols] for i in range(vv.dim(g, n + 1))])
                im_rank = len(pivots)
            else:
                cols, im_rank = [], 0
            dim1 = vv.dim(g, n + 1)
            if dim1 - im_rank > 0:
                # choose complement coordinates: standard basis vectors not pivotal
                # for the column space (computed via rref of [im | id])
                idm = [[Fraction(1) if i == j else Fraction(0) for j in range(dim1)] for i in range(dim1)]
                aug = [[col[i] for col in cols] + idm[i] for i in range(dim1)]
                _, piv = linalg.rref(aug)
                keep = [p - len(cols) for p in piv if p >= len(cols)]
                coker_keep = keep
                above_e[(g, n + 1)] = len(keep)
                above_b[(g, n + 1)] = [vv.basis[(g, n + 1)][i] for i in keep]
        for c in cs:
            if c > n + 1:
                above_e[(g, c)] = vv.dim(g, c)
                above_b[(g, c)] = vv.basis[(g, c)]
                if (g, c) in vv.diff:
                    above_d[(g, c)] = vv.diff[(g, c)]
        if coker_keep is not None and (g, n + 2) in vv.entries and (g, n + 1) in vv.diff:
            dmat = vv.diff[(g, n + 1)]
            above_d[(g, n + 1)] = [[dmat[i][j] for j in coker_keep] for i in range(len(dmat))]
    return (
        Bigraded(below_e, below_d, below_b, check=False),
        Bigraded(above_e, above_d, above_b, check=False),
    )


def decompose_pure(vv: Bigraded):
    """Split a weight-heart object into its diagonal cohomology: list of
    (g, c, dim) with c = g.  Raises NotPure off the diagonal."""
    coh = vv.cohomology_dims()
    for (g, c), d in coh.items():
        if c != g and d:
            raise NotPure(f"cohomology of dimension {d} at {(g, c)}, weight {g - c}")
    return sorted((g, c, d) for (g, c), d in coh.items())


def shear_fwd(vv: Bigraded) -> Bigraded:
    """sh=> : move the graded-degree-g piece down g cohomological steps,
    i.e. (g, c) -> (g, c + g)."""
    entries = {(g, c + g): d for (g, c), d in vv.entries.items()}
    basis = {(g, c + g): vv.basis[(g, c)] for (g, c) in vv.entries}
    diff = {}
    for (g, c), m in vv.diff.items():
        diff[(g, c + g)] = linalg.mat_scale(m, -1) if g % 2 else m
    return Bigraded(entries, diff, basis, check=False)


def shear_bwd(vv: Bigraded) -> Bigraded:
    """Inverse of shear_fwd: (g, c) -> (g, c - g)."""
    entries = {(g, c - g): d for (g, c), d in vv.entries.items()}
    basis = {(g, c - g): vv.basis[(g, c)] for (g, c) in vv.entries}
    diff = {}
    for (g, c), m in vv.diff.items():
        diff[(g, c - g)] = linalg.mat_scale(m, -1) if g % 2 else m
    return Bigraded(entries, diff, basis, check=False)
