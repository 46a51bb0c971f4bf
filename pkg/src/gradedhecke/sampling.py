"""Random generators for bigraded complexes and mixed objects.

Objects are built as direct sums of small atoms (points and contractible
two-term intervals) and then conjugated by random invertible rational
basis changes, so the differentials look generic while homology and
weight structure stay known by construction.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .bigraded import Bigraded, direct_sum, zero
from .mixed import MixedObject


def _rand_invertible(rng, n):
    """Random integer invertible matrix via elementary operations."""
    m = linalg.identity(n)
    for _ in range(2 * n + 2):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            if rng.random() < 0.3:
                m[i] = [-x for x in m[i]]
            continue
        f = Fraction(rng.choice([-2, -1, 1, 2]))
        m[i] = [x + f * y for x, y in zip(m[i], m[j])]
    return m


def _conjugate(v: Bigraded, rng):
    """Change basis at every bidegree; returns (object, {bidegree: Q})."""
    qs = {k: _rand_invertible(rng, d) for k, d in v.entries.items()}
    diff = {}
    for (g, c), m in v.diff.items():
        diff[(g, c)] = linalg.mat_mul(
            qs[(g, c + 1)], linalg.mat_mul(m, linalg.inverse(qs[(g, c)]))
        )
    return Bigraded(v.entries, diff, v.basis, check=False), qs


def _atom(g, c, interval):
    if interval:
        return Bigraded(
            {(g, c): 1, (g, c + 1): 1}, {(g, c): [[Fraction(1)]]}, check=False
        )
    return Bigraded({(g, c): 1}, check=False)


def random_bigraded(rng, n_atoms=4, g_range=(-2, 2), c_range=(-2, 2)) -> Bigraded:
    v = zero()
    for _ in range(n_atoms):
        g = rng.randint(*g_range)
        c = rng.randint(*c_range)
        v = direct_sum(v, _atom(g, c, rng.random() < 0.5))
    out, _ = _conjugate(v, rng)
    return out


def _rand_theta_block(rng, m):
    """Random quasi-unipotent m x m integer matrix: a signed cycle
    permutation or a unipotent upper-triangular matrix."""
    t = linalg.identity(m)
    if m > 1 and rng.random() < 0.5:
        t = linalg.zeros(m, m)
        for i in range(m):
            t[(i + 1) % m][i] = Fraction(1)
    else:
        for i in range(m):
            for j in range(i + 1, m):
                if rng.random() < 0.5:
                    t[i][j] = Fraction(rng.choice([-1, 1]))
    if rng.random() < 0.3:
        t = linalg.mat_scale(t, -1)
    return t


def random_mixed(rng, n_groups=3, level=1, g_range=(-2, 2), c_range=(-2, 2)) -> MixedObject:
    under = zero()
    theta_blocks = []  # (bidegrees of the group block, matrix)
    for _ in range(n_groups):
        g = rng.randint(*g_range)
        c = rng.randint(*c_range)
        interval = rng.random() < 0.5
        mult = rng.randint(1, 3)
        shape = _atom(g, c, interval)
        block = zero()
        for _ in range(mult):
            block = direct_sum(block, shape)
        t = _rand_theta_block(rng, mult)
        # in the direct sum of copies, each bidegree of the atom carries one
        # coordinate per copy and d is the identity between them, so the same
        # multiplicity matrix serves as theta at every bidegree of the group
        theta_blocks.append((set(block.entries), t))
        under = direct_sum(under, block)
    theta = {}
    for k, dim in under.entries.items():
        big = linalg.zeros(dim, dim)
        pos = 0
        for keys, t in theta_blocks:
            if k not in keys:
                continue
            # group blocks appear in sum order, one copy-block per group
            for i in range(len(t)):
                for j in range(len(t)):
                    big[pos + i][pos + j] = t[i][j]
            pos += len(t)
        theta[k] = big
    out, qs = _conjugate(under, rng)
    theta = {
        k: linalg.mat_mul(qs[k], linalg.mat_mul(theta[k], linalg.inverse(qs[k])))
        for k in theta
    }
    return MixedObject(out, theta, level)
