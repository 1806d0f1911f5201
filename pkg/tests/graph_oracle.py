"""Independent Hecke oracle: the supersingular graph (Brandt matrix) method.

Nodes are the supersingular j-invariants over F_{p^2} (roots of the
supersingular polynomial), edges come from the classical modular
polynomials Phi_2 and Phi_3, and the Atkin-Lehner involution acts through
the p-power Frobenius on nodes: the anti-invariant subspace realizes the
w_p = +1 part of the weight-2 cusp forms.  Shares nothing with the modular
symbols implementation except the supersingular polynomial itself (which
the point-counting oracle validates separately).
"""

from fractions import Fraction

from wplus import linalg
from wplus.supersingular import ss_polys

PHI2 = {
    (3, 0): 1, (0, 3): 1, (2, 2): -1,
    (2, 1): 1488, (1, 2): 1488,
    (2, 0): -162000, (0, 2): -162000,
    (1, 1): 40773375,
    (1, 0): 8748000000, (0, 1): 8748000000,
    (0, 0): -157464000000000,
}

PHI3 = {
    (4, 0): 1, (0, 4): 1, (3, 3): -1,
    (3, 2): 2232, (2, 3): 2232,
    (3, 1): -1069956, (1, 3): -1069956,
    (3, 0): 36864000, (0, 3): 36864000,
    (2, 2): 2587918086,
    (2, 1): 8900222976000, (1, 2): 8900222976000,
    (2, 0): 452984832000000, (0, 2): 452984832000000,
    (1, 1): -770845966336000000,
    (1, 0): 1855425871872000000000, (0, 1): 1855425871872000000000,
}


class Fp2:
    """F_{p^2} = F_p[s]/(s^2 - eps) with elements as (a, b) pairs."""

    def __init__(self, p):
        self.p = p
        self.eps = next(e for e in range(2, p)
                        if pow(e, (p - 1) // 2, p) == p - 1)

    def mul(self, x, y):
        p = self.p
        return ((x[0] * y[0] + x[1] * y[1] * self.eps) % p,
                (x[0] * y[1] + x[1] * y[0]) % p)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def pow(self, x, e):
        r = (1, 0)
        while e:
            if e & 1:
                r = self.mul(r, x)
            x = self.mul(x, x)
            e >>= 1
        return r

    def frobenius(self, x):
        return (x[0], (-x[1]) % self.p)


def _eval_bivariate(field, table, x, y, dx=0):
    acc = (0, 0)
    p = field.p
    for (i, j), c in table.items():
        if i < dx:
            continue
        scale = c
        for t in range(dx):
            scale *= i - t
        term = field.mul(field.pow(x, i - dx), field.pow(y, j))
        acc = field.add(acc, tuple(scale % p * v % p for v in term))
    return acc


def supersingular_nodes(p):
    field = Fp2(p)
    sp = ss_polys(p).S_p
    coeffs = [int(c) for c in sp.coeffs]

    def ev(z):
        acc = (0, 0)
        for c in reversed(coeffs):
            acc = field.add(field.mul(acc, z), (c, 0))
        return acc

    nodes = [(a, b) for a in range(p) for b in range(p) if ev((a, b)) == (0, 0)]
    assert len(nodes) == sp.degree()
    return field, nodes


def brandt_matrix(p, ell):
    """ell-isogeny adjacency matrix on supersingular j-invariants, ell in
    {2, 3}; column sums are ell + 1."""
    table = {2: PHI2, 3: PHI3}[ell]
    field, nodes = supersingular_nodes(p)
    n = len(nodes)
    mat = [[0] * n for _ in range(n)]
    for j, z in enumerate(nodes):
        total = 0
        for i, w in enumerate(nodes):
            if _eval_bivariate(field, table, w, z) != (0, 0):
                continue
            mult = 1
            if _eval_bivariate(field, table, w, z, dx=1) == (0, 0):
                mult = 2
                if _eval_bivariate(field, table, w, z, dx=2) == (0, 0):
                    mult = 3
            mat[i][j] += mult
            total += mult
        assert total == ell + 1
    return field, nodes, mat


def hecke_on_plus_part(p, ell):
    """Matrix of T_ell on the w_p = +1 cusp forms, via the Frobenius
    anti-invariant subspace of the supersingular module."""
    field, nodes, mat = brandt_matrix(p, ell)
    idx = {z: i for i, z in enumerate(nodes)}
    frob = [idx[field.frobenius(z)] for z in nodes]
    pairs = [(i, frob[i]) for i in range(len(nodes)) if i < frob[i]]
    vecs = []
    for i, j in pairs:
        v = [Fraction(0)] * len(nodes)
        v[i] = Fraction(1)
        v[j] = Fraction(-1)
        vecs.append(v)
    embed = linalg.transpose(vecs)
    matq = [[Fraction(c) for c in row] for row in mat]
    return linalg.solve(embed, linalg.mat_mul(matq, embed))
