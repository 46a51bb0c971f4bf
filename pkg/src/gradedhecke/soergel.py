"""Soergel bimodules by explicit linear algebra.

A bimodule is stored as a free graded left R-module (R the polynomial
realization of the attached Coxeter system, variables in internal degree
2) together with one matrix per variable giving the right action in the
left basis.  Homs are computed degreewise by solving the linear system
"commutes with every right action" over the exact coefficient field;
decomposition into indecomposables peels split idempotents found through
Hom pairings against recursively constructed candidates.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from . import linalg
from .coxeter import CoxeterSystem, GroupElement
from .errors import RingMismatch, SearchExhausted, UnknownGenerator, WindowTooSmall
from .hecke import HeckeElement, in_kl_basis, kl_basis, mult
from .laurent import ONE, LaurentPoly, V
from .polynomial import Poly


def monomials(nvars, deg):
    """All exponent tuples of total degree deg."""
    if nvars == 0:
        return [()] if deg == 0 else []
    out = []
    for bars in combinations(range(deg + nvars - 1), nvars - 1):
        prev = -1
        mono = []
        for b in bars:
            mono.append(b - prev - 1)
            prev = b
        mono.append(deg + nvars - 2 - prev)
        out.append(tuple(mono))
    return out


class PolyRing:
    """The realization R = Sym of the root space, variables in degree 2."""

    def __init__(self, system: CoxeterSystem):
        self.system = system
        self.nvars = system.rank

    def zero(self):
        return Poly(self.nvars, {})

    def one(self):
        return Poly.const(self.nvars, 1)

    def var(self, i):
        return Poly.var(self.nvars, i)

    def hilbert_dim(self, internal_degree):
        """Dimension of R in one internal degree (0 unless even >= 0)."""
        if internal_degree < 0 or internal_degree % 2:
            return 0
        return len(monomials(self.nvars, internal_degree // 2))

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.system is other.system

    def __repr__(self):
        return f"PolyRing({self.system.name}, {self.nvars} vars)"


class Bimodule:
    """Free graded left R-module with explicit right action.

    degrees[i] is the internal degree of the i-th left-basis element;
    actions[x][i][j] is the coefficient of basis i in basis_j . x_var.
    char carries the class in the Hecke algebra as bookkeeping metadata.
    """

    __slots__ = ("ring", "degrees", "labels", "actions", "char", "tag")

    def __init__(self, ring, degrees, actions, labels=None, char=None, tag="?", check=False):
        self.ring = ring
        self.degrees = list(degrees)
        self.actions = actions
        self.labels = list(labels) if labels else [f"m{i}" for i in range(len(degrees))]
        self.char = char
        self.tag = tag
        if check:
            self.validate()

    @property
    def rank(self):
        return len(self.degrees)

    def validate(self):
        n = self.rank
        for x, m in enumerate(self.actions):
            for i in range(n):
                for j in range(n):
                    p = m[i][j]
                    if p and not p.is_homogeneous():
                        raise ValueError("inhomogeneous action entry")
                    if p and p.degree2() != 2 + self.degrees[j] - self.degrees[i]:
                        raise ValueError(
                            f"action degree mismatch at var {x}, ({i},{j})"
                        )
        for x in range(len(self.actions)):
            for y in range(x + 1, len(self.actions)):
                a = _poly_mat_mul(self.actions[x], self.actions[y])
                b = _poly_mat_mul(self.actions[y], self.actions[x])
                if not _poly_mat_eq(a, b):
                    raise ValueError(f"right actions of {x} and {y} do not commute")

    def act_poly(self, p: Poly):
        """Matrix of right multiplication by an arbitrary polynomial."""
        n = self.rank
        out = [[self.ring.zero() for _ in range(n)] for _ in range(n)]
        ident = _poly_identity(self.ring, n)
        for mono, c in p.terms.items():
            term = [[e * Poly.const(self.ring.nvars, c) for e in row] for row in ident]
            for v, e in enumerate(mono):
                for _ in range(e):
                    term = _poly_mat_mul(self.actions[v], term)
            out = _poly_mat_add(out, term)
        return out

    def shift(self, k):
        """<k>: raise every basis degree by k; character multiplies by v^k."""
        return Bimodule(
            self.ring,
            [d + k for d in self.degrees],
            self.actions,
            self.labels,
            self.char.scale(LaurentPoly.v(k)) if self.char else None,
            self.tag if k == 0 else f"{self.tag}<{k:+d}>",
        )

    def hilbert_numerator(self):
        """Graded left-rank: sum of v^degree over the basis."""
        out = LaurentPoly()
        for d in self.degrees:
            out = out + LaurentPoly.v(d)
        return out

    def __repr__(self):
        return f"Bimodule({self.tag}, rank={self.rank})"


def _poly_identity(ring, n):
    return [
        [ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)
    ]


def _poly_mat_mul(a, b):
    nr, nk = len(a), len(b)
    nc = len(b[0]) if b else 0
    out = []
    for i in range(nr):
        row = []
        for j in range(nc):
            acc = None
            for k in range(nk):
                if a[i][k] and b[k][j]:
                    t = a[i][k] * b[k][j]
                    acc = t if acc is None else acc + t
            row.append(acc if acc is not None else Poly(a[i][0].nvars if a[i] else 0, {}))
        out.append(row)
    return out


def _poly_mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _poly_mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def free_module(ring: PolyRing) -> Bimodule:
    """R itself."""
    actions = [[[ring.var(i)]] for i in range(ring.nvars)]
    return Bimodule(
        ring, [0], actions, ["1"], HeckeElement.unit(ring.system), tag="R"
    )


def _bs_letter(ring: PolyRing, s: int) -> Bimodule:
    """B_s = (R tensor_{R^s} R)<-1>: basis {1x1, 1xalpha}, degrees {-1, 1}."""
    if not 0 <= s < ring.nvars:
        raise UnknownGenerator(f"generator index {s}")
    sysm = ring.system
    n = ring.nvars
    actions = []
    for t in range(n):
        xt = Poly.var(n, t)
        cols = []
        for f in (xt, Poly.var(n, s) * xt):
            # f = A + B alpha_s with A, B s-invariant
            a_part = (f + sysm.act_simple(s, f)) * Fraction(1, 2)
            b_part = sysm.demazure(s, f) * Fraction(1, 2)
            cols.append((a_part, b_part))
        actions.append(
            [
                [cols[0][0], cols[1][0]],
                [cols[0][1], cols[1][1]],
            ]
        )
    char = kl_basis(sysm, sysm.simple(s))
    letter = sysm.generators[s]
    return Bimodule(
        ring, [-1, 1], actions, ["1*1", "1*a"], char, tag=f"B_{letter}"
    )


def tensor_bimod(b: Bimodule, c: Bimodule) -> Bimodule:
    """B tensor_R C: product left basis; the right action acts through C,
    with C's coefficient polynomials pushed into B's right action."""
    if b.ring != c.ring:
        raise RingMismatch("bimodules over different rings")
    ring = b.ring
    nb, nc = b.rank, c.rank
    degrees = [db + dc for db in b.degrees for dc in c.degrees]
    labels = [f"{lb}*{lc}" for lb in b.labels for lc in c.labels]
    actions = []
    for x in range(ring.nvars):
        m = [[ring.zero() for _ in range(nb * nc)] for _ in range(nb * nc)]
        cx = c.actions[x]
        for j2 in range(nc):
            for k in range(nc):
                p = cx[k][j2]
                if not p:
                    continue
                bp = b.act_poly(p)
                for i in range(nb):
                    for i2 in range(nb):
                        if bp[i2][i]:
                            m[i2 * nc + k][i * nc + j2] = m[i2 * nc + k][i * nc + j2] + bp[i2][i]
        actions.append(m)
    char = None
    if b.char is not None and c.char is not None:
        char = mult(b.char, c.char)
    return Bimodule(
        ring, degrees, actions, labels, char, tag=f"{b.tag}*{c.tag}"
    )


def bott_samelson(ring: PolyRing, word) -> Bimodule:
    """BS(word) with the <length> normalization: character b_{s1}...b_{sk}."""
    out = free_module(ring)
    for s in word:
        out = tensor_bimod(out, _bs_letter(ring, s))
    out.tag = "BS(" + ring.system.word_str(word) + ")" if word else "R"
    return out


def character(b: Bimodule) -> HeckeElement:
    if b.char is None:
        raise ValueError("no character recorded for this bimodule")
    return b.char


class BimoduleMap:
    """Degree-d map of bimodules: matrix over R, target basis x source basis."""

    __slots__ = ("source", "target", "matrix", "degree")

    def __init__(self, source, target, matrix, degree):
        self.source = source
        self.target = target
        self.matrix = matrix
        self.degree = degree

    @classmethod
    def identity(cls, b):
        return cls(b, b, _poly_identity(b.ring, b.rank), 0)

    @classmethod
    def zero(cls, source, target, degree=0):
        m = [[source.ring.zero() for _ in range(source.rank)] for _ in range(target.rank)]
        return cls(source, target, m, degree)

    def compose(self, other):
        """self after other."""
        return BimoduleMap(
            other.source,
            self.target,
            _poly_mat_mul(self.matrix, other.matrix),
            self.degree + other.degree,
        )

    def __add__(self, other):
        return BimoduleMap(
            self.source, self.target, _poly_mat_add(self.matrix, other.matrix), self.degree
        )

    def scale(self, c):
        return BimoduleMap(
            self.source,
            self.target,
            [[x * c for x in row] for row in self.matrix],
            self.degree,
        )

    def __neg__(self):
        return self.scale(Fraction(-1))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return all(not x for row in self.matrix for x in row)

    def commutes_with_actions(self):
        for x in range(self.source.ring.nvars):
            lhs = _poly_mat_mul(self.target.actions[x], self.matrix)
            rhs = _poly_mat_mul(self.matrix, self.source.actions[x])
            if not _poly_mat_eq(lhs, rhs):
                return False
        return True

    def __repr__(self):
        return f"BimoduleMap({self.source.tag} -> {self.target.tag}, deg {self.degree})"


def _entry_vardeg(b, c, i, j, d):
    """Variable-degree of the (i, j) entry of a degree-d map, or None."""
    internal = d + b.degrees[j] - c.degrees[i]
    if internal < 0 or internal % 2:
        return None
    return internal // 2


def _hom_system(b: Bimodule, c: Bimodule, d: int):
    """Rows of the commutation system and the unknown index (i, j, mono)."""
    ring = b.ring
    unknowns = []
    pos = {}
    for i in range(c.rank):
        for j in range(b.rank):
            vd = _entry_vardeg(b, c, i, j, d)
            if vd is None:
                continue
            for m in monomials(ring.nvars, vd):
                pos[(i, j, m)] = len(unknowns)
                unknowns.append((i, j, m))
    if not unknowns:
        return [], unknowns
    rows = {}

    def add(x, k, j2, mono, col, val):
        key = (x, k, j2, mono)
        row = rows.get(key)
        if row is None:
            row = rows[key] = [Fraction(0)] * len(unknowns)
        row[col] = row[col] + val

    for col, (i, j, m) in enumerate(unknowns):
        mono_poly = Poly(ring.nvars, {m: Fraction(1)})
        for x in range(ring.nvars):
            # (C_x . Phi)[k][j]
            for k in range(c.rank):
                p = c.actions[x][k][i]
                if p:
                    for mm, cv in (p * mono_poly).terms.items():
                        add(x, k, j, mm, col, cv)
            # -(Phi . B_x)[i][j2]
            for j2 in range(b.rank):
                p = b.actions[x][j][j2]
                if p:
                    for mm, cv in (p * mono_poly).terms.items():
                        add(x, i, j2, mm, col, -cv)
    return list(rows.values()), unknowns


def hom_dim(b: Bimodule, c: Bimodule, d: int) -> int:
    """Dimension of the space of degree-d bimodule maps b -> c."""
    if b.ring != c.ring:
        raise RingMismatch("bimodules over different rings")
    rows, unknowns = _hom_system(b, c, d)
    if not unknowns:
        return 0
    return len(unknowns) - linalg.fast_rank(rows) if rows else len(unknowns)


def hom_degree(b: Bimodule, c: Bimodule, d: int):
    """Basis of the space of degree-d bimodule maps b -> c."""
    if b.ring != c.ring:
        raise RingMismatch("bimodules over different rings")
    rows, unknowns = _hom_system(b, c, d)
    if not unknowns:
        return []
    if rows:
        kernel = linalg.nullspace(rows)
    else:
        kernel = [
            [Fraction(1) if t == s else Fraction(0) for t in range(len(unknowns))]
            for s in range(len(unknowns))
        ]
    ring = b.ring
    out = []
    for vec in kernel:
        mat = [[ring.zero() for _ in range(b.rank)] for _ in range(c.rank)]
        for col, val in enumerate(vec):
            if val:
                i, j, m = unknowns[col]
                mat[i][j] = mat[i][j] + Poly(ring.nvars, {m: val})
        out.append(BimoduleMap(b, c, mat, d))
    return out


def graded_hom_rank(b: Bimodule, c: Bimodule, window=None) -> LaurentPoly:
    """Graded rank of Hom(b, c) as a free left R-module: degreewise
    dimensions divided by the Hilbert series of R via generator peeling."""
    if b.ring != c.ring:
        raise RingMismatch("bimodules over different rings")
    if b.rank == 0 or c.rank == 0:
        return LaurentPoly()
    ring = b.ring
    lo = min(c.degrees) - max(b.degrees)
    top = max(c.degrees) - min(b.degrees)
    if window is None:
        window = max(top - lo, 2)
    while True:
        hi = lo + window + 4
        dims = {d: hom_dim(b, c, d) for d in range(lo, hi + 1)}
        rank = {}
        ok = True
        for d in range(lo, hi + 1):
            expect = sum(
                mult_ * ring.hilbert_dim(d - d0) for d0, mult_ in rank.items()
            )
            if dims[d] < expect:
                ok = False  # modular rank undershot somewhere; widen and retry
                break
            if dims[d] > expect:
                rank[d] = dims[d] - expect
        if ok and all(d <= hi - 4 for d in rank):
            return LaurentPoly({d: m for d, m in rank.items() if m})
        if window > 16 * max(top - lo, 2):
            raise WindowTooSmall(
                f"no stable rank polynomial within window {window}"
            )
        window *= 2


# -- decomposition -----------------------------------------------------


def _solve_poly_combination(ring, gens, gen_degs, target, target_deg):
    """Coefficients p_t with sum p_t . gens_t = target (columns over R),
    each p_t homogeneous of degree (target_deg - gen_degs[t]); None if
    unsolvable.  Columns are lists of Poly; degrees are internal."""
    unknowns = []
    for t, gd in enumerate(gen_degs):
        vd = target_deg - gd
        if vd < 0 or vd % 2:
            unknowns.append((t, None))
            continue
        for m in monomials(ring.nvars, vd // 2):
            unknowns.append((t, m))
    unknowns = [(t, m) for t, m in unknowns if m is not None]
    rows = {}

    def key_rows(poly_col_idx, mono):
        key = (poly_col_idx, mono)
        row = rows.get(key)
        if row is None:
            row = rows[key] = [Fraction(0)] * (len(unknowns) + 1)
        return row

    for col, (t, m) in enumerate(unknowns):
        mono_poly = Poly(ring.nvars, {m: Fraction(1)})
        for idx, entry in enumerate(gens[t]):
            if entry:
                for mm, cv in (entry * mono_poly).terms.items():
                    key_rows(idx, mm)[col] = key_rows(idx, mm)[col] + cv
    for idx, entry in enumerate(target):
        if entry:
            for mm, cv in entry.terms.items():
                key_rows(idx, mm)[-1] = key_rows(idx, mm)[-1] + cv
    if not rows:
        return [ring.zero() for _ in gen_degs]
    mat = [row[:-1] for row in rows.values()]
    rhs = [row[-1] for row in rows.values()]
    if not unknowns:
        return [ring.zero() for _ in gen_degs] if all(not r for r in rhs) else None
    sol = linalg.solve(mat, rhs)
    if sol is None:
        return None
    coeffs = [ring.zero() for _ in gen_degs]
    for col, (t, m) in enumerate(unknowns):
        if sol[col]:
            coeffs[t] = coeffs[t] + Poly(ring.nvars, {m: sol[col]})
    return coeffs


def _scalar_part(phi: BimoduleMap):
    """Constant-coefficient matrix of a degree-0 endomorphism, blockwise
    over equal basis degrees; returns the square rational matrix."""
    n = phi.source.rank
    degs = phi.source.degrees
    out = linalg.zeros(n, n)
    for i in range(n):
        for j in range(n):
            if degs[i] == degs[j] and phi.matrix[i][j]:
                out[i][j] = phi.matrix[i][j].constant_coeff()
    return out


def _invert_endo(phi: BimoduleMap):
    """Inverse of a degree-0 endomorphism whose scalar part is invertible,
    via Neumann series: phi = S(1 + N) with N nilpotent of positive degree."""
    b = phi.source
    ring = b.ring
    s_inv = linalg.inverse(_scalar_part(phi))
    if s_inv is None:
        return None
    s_inv_poly = [[Poly.const(ring.nvars, x) if x else ring.zero() for x in row] for row in s_inv]
    # N = S^{-1} phi - 1 has entries of positive degree, hence nilpotent
    n_mat = _poly_mat_mul(s_inv_poly, phi.matrix)
    ident = _poly_identity(ring, b.rank)
    n_mat = [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(n_mat, ident)]
    acc = [row[:] for row in ident]
    power = [row[:] for row in ident]
    sign = -1
    for _ in range(b.rank * (max(b.degrees) - min(b.degrees) + 2)):
        power = _poly_mat_mul(power, n_mat)
        if all(not x for row in power for x in row):
            break
        acc = [
            [x + Fraction(sign) * y for x, y in zip(ra, rb)]
            for ra, rb in zip(acc, power)
        ]
        sign = -sign
    inv = _poly_mat_mul(acc, s_inv_poly)
    return BimoduleMap(b, b, inv, 0)


def _image_bimodule(b: Bimodule, proj_matrix, char=None, tag="?"):
    """Realize the image of an idempotent-complement as a free bimodule:
    minimal homogeneous generators of the span of the given columns."""
    ring = b.ring
    cols = []
    for j in range(b.rank):
        col = [proj_matrix[i][j] for i in range(b.rank)]
        if any(col):
            cols.append((b.degrees[j], col))
    cols.sort(key=lambda t: t[0])
    gens, gen_degs = [], []
    for deg, col in cols:
        if gens and _solve_poly_combination(ring, gens, gen_degs, col, deg) is not None:
            continue
        if not gens and all(not x for x in col):
            continue
        gens.append(col)
        gen_degs.append(deg)
    # right action on generators, re-expressed in the generators
    actions = []
    for x in range(ring.nvars):
        bx = b.actions[x]
        m = [[ring.zero() for _ in gens] for _ in gens]
        for t, g in enumerate(gens):
            img = [
                sum((bx[i][k] * g[k] for k in range(b.rank) if g[k]), ring.zero())
                for i in range(b.rank)
            ]
            coeffs = _solve_poly_combination(ring, gens, gen_degs, img, gen_degs[t] + 2)
            if coeffs is None:
                raise SearchExhausted("image is not closed under the right action")
            for u, p in enumerate(coeffs):
                m[u][t] = p
        actions.append(m)
    sub = Bimodule(ring, gen_degs, actions, char=char, tag=tag)
    inc = BimoduleMap(sub, b, [[gens[t][i] for t in range(len(gens))] for i in range(b.rank)], 0)
    # projection: express (columns of proj_matrix) in the generators
    proj = [[ring.zero() for _ in range(b.rank)] for _ in gens]
    for j in range(b.rank):
        col = [proj_matrix[i][j] for i in range(b.rank)]
        coeffs = _solve_poly_combination(ring, gens, gen_degs, col, b.degrees[j])
        if coeffs is None:
            raise SearchExhausted("projection does not factor through generators")
        for t, p in enumerate(coeffs):
            proj[t][j] = p
    return sub, inc, BimoduleMap(b, sub, proj, 0)


class Summand:
    __slots__ = ("bimodule", "element", "shift", "include", "project")

    def __init__(self, bimodule, element, shift, include, project):
        self.bimodule = bimodule
        self.element = element
        self.shift = shift
        self.include = include
        self.project = project

    def __repr__(self):
        return f"Summand({self.bimodule.tag}, shift={self.shift})"


def indecomposable(ring: PolyRing, w: GroupElement) -> Bimodule:
    """B_w: the top summand of the Bott-Samelson of a reduced word of w."""
    cache = getattr(ring.system, "_indec_cache", None)
    if cache is None:
        cache = ring.system._indec_cache = {}
    if w in cache:
        return cache[w]
    if w.length == 0:
        out = free_module(ring)
    elif w.length == 1:
        out = _bs_letter(ring, w.word[0])
    else:
        bs = bott_samelson(ring, w.word)
        out = _peel_to_top(ring, bs, w)
    cache[w] = out
    return out


def _kl_support(char):
    return in_kl_basis(char)


def _peel_to_top(ring, b, w):
    """Strip all proper summands from BS(word(w)), leaving B_w."""
    current = b
    while True:
        supp = _kl_support(current.char)
        lower = [
            (x, e)
            for x, p in supp.items()
            for e, c in sorted(p.coeffs.items())
            for _ in range(c)
            if x != w
        ]
        if not lower:
            break
        x, e = lower[0]
        cand = indecomposable(ring, x).shift(e)
        current = _split_off(current, cand)[2]
    current.tag = "B_" + (ring.system.word_str(w.word) or "e")
    current.char = kl_basis(ring.system, w)
    return current


def _split_off(b: Bimodule, cand: Bimodule):
    """b ~ cand (+) complement.  Returns (cand_inc, cand_proj, rest,
    rest_inc, rest_proj): a biproduct diagram on b."""
    into = hom_degree(cand, b, 0)
    outof = hom_degree(b, cand, 0)
    for u in into:
        for vmap in outof:
            comp = vmap.compose(u)
            inv = _invert_endo(comp)
            if inv is None:
                continue
            proj_c = inv.compose(vmap)  # b -> cand with proj_c . u = id
            e_mat = u.compose(proj_c)  # idempotent onto the cand copy
            ident = _poly_identity(b.ring, b.rank)
            compl_mat = [
                [x - y for x, y in zip(ra, rb)] for ra, rb in zip(ident, e_mat.matrix)
            ]
            compl_char = b.char - cand.char if b.char and cand.char else None
            rest, rest_inc, rest_proj = _image_bimodule(
                b, compl_mat, char=compl_char, tag=f"({b.tag})-rest"
            )
            return u, proj_c, rest, rest_inc, rest_proj
    raise SearchExhausted(f"{cand.tag} is not a split summand of {b.tag}")


def decompose(b: Bimodule):
    """Split into indecomposables: list of Summand records whose inclusion
    and projection maps form a biproduct diagram on b (proj . inc = id per
    summand, cross terms zero, inclusions jointly surjective)."""
    ring = b.ring
    out = []
    current = b
    inc_chain = BimoduleMap.identity(b)  # current -> b
    proj_chain = BimoduleMap.identity(b)  # b -> current
    while current.rank:
        supp = _kl_support(current.char)
        pieces = sorted(
            (x.length, e, x)
            for x, p in supp.items()
            for e, c in p.coeffs.items()
            if c
        )
        if not pieces:
            raise SearchExhausted("character exhausted but module nonzero")
        _, e, x = pieces[0]
        cand = indecomposable(ring, x).shift(e)
        u, proj_c, rest, rest_inc, rest_proj = _split_off(current, cand)
        out.append(
            Summand(
                indecomposable(ring, x),
                x,
                e,
                inc_chain.compose(u),
                proj_c.compose(proj_chain),
            )
        )
        inc_chain = inc_chain.compose(rest_inc)
        proj_chain = rest_proj.compose(proj_chain)
        current = rest
    return out
