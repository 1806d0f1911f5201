"""Weight-2 modular symbols for Gamma_0(p) and the good basis of S_2^+(p).

The space is presented on Manin symbols (c:d) over P^1(F_p), quotiented by
the two- and three-term relations and by the star involution (so complex
conjugation acts trivially and every Hecke eigenvalue appears once).  Hecke
operators act through their coset representatives on paths, which come back
to Manin symbols via continued-fraction convergents; Merel's determinant-n
matrix family provides an independent cross-check.  See Stein, "Modular
Forms: A Computational Approach", ch. 8, and Cremona, "Algorithms for
Modular Elliptic Curves", ch. 2.

Since every cusp form of prime level is new, the Atkin-Lehner involution
acts on the cuspidal subspace as -U_p; its +1 eigenspace corresponds to
the quotient curve.  Eigenforms are computed blockwise in the quotient ring
Q[x]/(minimal polynomial of a Hecke generator); rational forms are traces
against the power basis, and the unique reduced echelon basis of their span
is the good-basis candidate, with pivots c_1 < ... < c_g.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from . import linalg
from .errors import PrecisionError, WplusError
from .fppoly import is_prime
from .series import QExpansion

_ZERO = Fraction(0)
_ONE = Fraction(1)


def merel_set(n):
    """Merel's matrices (a, b; c, d), det = n, a > b >= 0, d > c >= 0.

    Computes T_n on Manin symbols for every n, including n = level (U_n);
    slower to enumerate than Heilbronn's set, so only used where needed.
    """
    out = []
    for a in range(1, n + 1):
        for d in range((n + a - 1) // a, n + 2 - a):
            bc = a * d - n
            if bc == 0:
                out.extend((a, b, 0, d) for b in range(a))
                out.extend((a, 0, c, d) for c in range(1, d))
            elif d > 1:
                for b in range((bc - 1) // (d - 1) + 1, a):
                    if bc % b == 0:
                        out.append((a, b, bc // b, d))
    return out


class _SignedUnionFind:
    """Union-find tracking x_i = +-x_root, with a kill flag for x = -x."""

    def __init__(self, n):
        self.parent = list(range(n))
        self.sign = [1] * n    # sign of node relative to its parent
        self.dead = [False] * n

    def find(self, i):
        path = []
        j = i
        while self.parent[j] != j:
            path.append(j)
            j = self.parent[j]
        root = j
        # compress, nearest-the-root first, keeping signs relative to root
        for node in reversed(path):
            par = self.parent[node]
            if par != root:
                self.sign[node] *= self.sign[par]
            self.parent[node] = root
        return (root, self.sign[i]) if path else (root, 1)

    def relate(self, i, j, s):
        """Impose x_i = s * x_j."""
        ri, si = self.find(i)
        rj, sj = self.find(j)
        if ri == rj:
            if si != s * sj:
                self.dead[ri] = True
            return
        self.parent[ri] = rj
        self.sign[ri] = si * s * sj
        if self.dead[ri]:
            self.dead[rj] = True

    def resolve(self, i):
        """(root, sign) with x_i = sign * x_root, or (root, 0) if killed."""
        r, s = self.find(i)
        if self.dead[r]:
            return r, 0
        return r, s


class ModSymSpace:
    """Star-quotient of weight-2 modular symbols for Gamma_0(p).

    Attributes:
        p, n:        prime level, n = p + 1 symbols
        dim:         dimension of the quotient (genus of X_0(p) plus one)
        genus:       dimension of the cuspidal subspace
        cuspidal:    dim x genus matrix over Q, columns a cuspidal basis
    """

    def __init__(self, p):
        if not is_prime(p) or p < 5:
            raise ValueError("level must be a prime >= 5")
        self.p = p
        n = p + 1
        self.n = n
        self._inv = np.zeros(p, dtype=np.int64)
        for c in range(1, p):
            self._inv[c] = pow(c, -1, p)

        # symbols: index 0 is (0:1), index 1+d is (1:d)
        pairs_c = np.concatenate([[0], np.ones(p, dtype=np.int64)])
        pairs_d = np.concatenate([[1], np.arange(p, dtype=np.int64)])
        self._sym_c = pairs_c
        self._sym_d = pairs_d

        def idx(c, d):
            c %= p
            d %= p
            if c == 0:
                return 0
            return 1 + d * int(self._inv[c]) % p

        self.index = idx

        # two-term, star, and three-term Manin relations
        uf = _SignedUnionFind(n)
        for i in range(n):
            c, d = int(pairs_c[i]), int(pairs_d[i])
            uf.relate(i, idx(-c, d), 1)       # star involution
            uf.relate(i, idx(d, -c), -1)      # x + xS = 0
        rows = []
        seen = set()
        for i in range(n):
            c, d = int(pairs_c[i]), int(pairs_d[i])
            j = idx(d, -c - d)
            k = idx(-c - d, c)
            key = min(i, j, k)
            if key in seen:
                continue
            seen.add(key)
            row = {}
            for t in (i, j, k):
                r, s = uf.resolve(t)
                if s:
                    row[r] = row.get(r, 0) + s
            if row:
                rows.append({c_: Fraction(v) for c_, v in row.items() if v})
        reducer = linalg.SparseRREF()
        for row in rows:
            reducer.add_row(row)
        pivot_rows = reducer.finish()

        roots = {uf.resolve(i)[0] for i in range(n) if uf.resolve(i)[1]}
        free = sorted(r for r in roots if r not in pivot_rows)
        self.free = free
        self.dim = len(free)
        pos = {r: t for t, r in enumerate(free)}

        # reduction map: symbol index -> dense coordinate row over free basis
        root_expr = {}
        for r in roots:
            if r in pivot_rows:
                vec = [_ZERO] * self.dim
                for c_, v in pivot_rows[r].items():
                    if c_ != r:
                        vec[pos[c_]] = -v
                root_expr[r] = vec
            else:
                vec = [_ZERO] * self.dim
                vec[pos[r]] = _ONE
                root_expr[r] = vec
        reduce_rows = []
        for i in range(n):
            r, s = uf.resolve(i)
            if s == 0:
                reduce_rows.append([_ZERO] * self.dim)
            elif s == 1:
                reduce_rows.append(root_expr[r])
            else:
                reduce_rows.append([-x for x in root_expr[r]])
        self._reduce = reduce_rows

        # integer fast path: R_num[t, i] / R_den = reduce_rows[i][t]
        den = 1
        for row in reduce_rows:
            for x in row:
                den = lcm(den, x.denominator)
        self._r_den = den
        rnum = np.zeros((self.dim, n), dtype=np.int64)
        big = 0
        for i, row in enumerate(reduce_rows):
            for t, x in enumerate(row):
                v = int(x * den)
                rnum[t, i] = v
                big = max(big, abs(v))
        self._r_num = rnum
        self._r_max = big

        # boundary: symbols (0:1) and (1:0) hit the two cusps, others vanish
        boundary = [_ZERO] * self.dim
        for i, s in ((0, 1), (self.index(1, 0), -1)):
            for t in range(self.dim):
                boundary[t] += s * self._reduce[i][t]
        bmat = [boundary]
        kern = linalg.nullspace(bmat) if any(boundary) else \
            [[_ONE if i == j else _ZERO for i in range(self.dim)]
             for j in range(self.dim)]
        self.cuspidal = linalg.transpose(kern) if kern \
            else [[] for _ in range(self.dim)]  # dim x genus
        self.genus = len(kern)

    def symbol_pair(self, i):
        return int(self._sym_c[i]), int(self._sym_d[i])

    def symbol_lift(self, i):
        """SL_2(Z) lift gamma of symbol i: bottom row is (c, d)."""
        c, d = self.symbol_pair(i)
        if c == 0:
            return (1, 0, 0, 1)
        return (0, -1, 1, d)

    def _count_images(self, mats):
        """counts[s, j] = number of matrices sending free symbol j to symbol s."""
        p = self.p
        arr = np.asarray(mats, dtype=np.int64)
        a, b, c, d = arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3]
        counts = np.zeros((self.n, self.dim), dtype=np.int64)
        for j, s in enumerate(self.free):
            u0, v0 = self.symbol_pair(s)
            u = (u0 * a + v0 * c) % p
            v = (u0 * b + v0 * d) % p
            mask = (u != 0) | (v != 0)
            u, v = u[mask], v[mask]
            idx = np.where(u == 0, 0, 1 + (v * self._inv[u]) % p)
            counts[:, j] = np.bincount(idx, minlength=self.n)
        return counts

    def _accumulate_infty_path(self, num, den, coeff, out):
        """Manin symbols of the path from the infinite cusp to num/den, by
        continued-fraction convergents: the j-th term is the class of
        (q_j : (-1)^{j-1} q_{j-1})."""
        qm2, qm1 = 1, 0
        sgn = -1
        while den != 0:
            a = num // den
            qj = a * qm1 + qm2
            idx = self.index(qj, sgn * qm1)
            out[idx] = out.get(idx, 0) + coeff
            qm2, qm1 = qm1, qj
            num, den = den, num - a * den
            sgn = -sgn

    def _hecke_counts(self, ell):
        """Signed symbol counts of the T_ell image of every free symbol.

        Uses the coset representatives (1, j; 0, ell) for 0 <= j < ell,
        plus (ell, 0; 0, 1) when ell != p, acting on the path of each
        symbol; the image paths come back to Manin symbols through the
        convergents of their endpoints (Manin's trick).
        """
        reps = [(1, j, 0, ell) for j in range(ell)]
        if ell != self.p:
            reps.append((ell, 0, 0, 1))
        counts = np.zeros((self.n, self.dim), dtype=np.int64)
        for jcol, s in enumerate(self.free):
            g0, g1, g2, g3 = self.symbol_lift(s)
            acc = {}
            for r0, r1, r2, r3 in reps:
                m00 = r0 * g0 + r1 * g2
                m01 = r0 * g1 + r1 * g3
                m10 = r2 * g0 + r3 * g2
                m11 = r2 * g1 + r3 * g3
                # {M0, M(infty)} = {infty, M(infty)} - {infty, M0}
                if m10 != 0:
                    self._accumulate_infty_path(m00, m10, 1, acc)
                if m11 != 0:
                    self._accumulate_infty_path(m01, m11, -1, acc)
            for idx, cnt in acc.items():
                counts[idx, jcol] = cnt
        return counts

    def hecke_matrix(self, ell):
        """Matrix of T_ell on the quotient, exact rational entries.

        ell must be prime; ell = p gives U_p.
        """
        counts = self._hecke_counts(ell)
        return self._counts_to_matrix(counts)

    def hecke_matrix_merel(self, ell):
        """T_ell from Merel's determinant-ell matrices; slower to enumerate,
        kept as an independent cross-check of the path route."""
        counts = self._count_images(merel_set(ell))
        return self._counts_to_matrix(counts)

    def _counts_to_matrix(self, counts):
        maxcount = int(np.abs(counts).max()) if counts.size else 0
        if self._r_max * maxcount * self.n < 2 ** 62:
            tnum = self._r_num @ counts
            den = self._r_den
            return [[Fraction(int(tnum[i, j]), den) for j in range(self.dim)]
                    for i in range(self.dim)]
        out = [[_ZERO] * self.dim for _ in range(self.dim)]
        for s in range(self.n):
            row = self._reduce[s]
            for j in range(self.dim):
                cnt = int(counts[s, j])
                if cnt:
                    for i in range(self.dim):
                        if row[i]:
                            out[i][j] += cnt * row[i]
        return out

    def restrict_to_cuspidal(self, t):
        """Matrix of t on the cuspidal subspace, in the cuspidal basis."""
        if self.genus == 0:
            return []
        tc = linalg.mat_mul(t, self.cuspidal)
        sol = linalg.solve(self.cuspidal, tc)
        if sol is None:
            raise WplusError("operator does not preserve the cuspidal subspace")
        return sol


def build_space(p):
    """Construct the star-quotient symbol space for a prime level."""
    return ModSymSpace(p)


def atkin_lehner_plus(space):
    """Basis (genus x g matrix of columns) of the w_p = +1 cuspidal part.

    w_p acts as -U_p on the cuspidal subspace (prime level is all new), so
    this is the kernel of U_p + 1 in the cuspidal basis.
    """
    if space.genus == 0:
        return []
    u = space.restrict_to_cuspidal(space.hecke_matrix(space.p))
    g = space.genus
    usq = linalg.mat_mul(u, u)
    if usq != linalg.identity(g):
        raise WplusError("U_p is not an involution on the cuspidal subspace")
    up1 = [row[:] for row in u]
    for i in range(g):
        up1[i][i] += _ONE
    kern = linalg.nullspace(up1)
    return linalg.transpose(kern) if kern else [[] for _ in range(g)]


@dataclass
class GoodBasis:
    """Reduced echelon basis of the rational weight-2 forms invariant under
    the Atkin-Lehner involution: f_i = q^{c_i} + ... with c_1 < ... < c_g,
    and the pivot columns form an identity block (when the pivots are
    consecutive this is the classical f_i = q^{c_i} + O(q^{c_g+1}))."""

    p: int
    g: int
    genus_x0: int
    forms: list        # QExpansion, weight 2, level p
    pivots: list       # c_1 < ... < c_g
    p_integral: bool
    galois_blocks: list  # partition of {1..g} by Hecke-irreducible block

    @property
    def precision(self):
        return self.forms[0].precision if self.forms else 0

    def wt_infinity(self):
        """Weierstrass weight of the cusp at infinity on the quotient curve:
        sum (c_j - j); zero exactly when the pivots are 1..g."""
        return sum(c - (j + 1) for j, c in enumerate(self.pivots))


def wt_infinity(basis):
    return basis.wt_infinity()


#: deterministic schedule of Hecke generators used to split the +1 space
_TIE_SCHEDULE = [
    {2: 1}, {3: 1}, {5: 1}, {7: 1},
    {2: 1, 3: 1}, {2: 1, 3: 2}, {2: 1, 3: 3}, {2: 2, 3: 1},
    {2: 1, 5: 1}, {2: 1, 5: 2}, {3: 1, 5: 1}, {2: 1, 3: 1, 5: 1},
    {2: 1, 3: 5}, {2: 3, 3: 7}, {2: 1, 7: 1}, {3: 1, 7: 2},
]


class BasisComputer:
    """Hecke-eigenform engine for one prime, reusable across precisions."""

    def __init__(self, p):
        self.p = p
        self.space = ModSymSpace(p)
        self.plus = atkin_lehner_plus(self.space)   # genus x g
        self.g = len(self.plus[0]) if self.space.genus else 0
        self._embed = linalg.mat_mul(self.space.cuspidal, self.plus) \
            if self.g else []                        # dim x g
        self._tfull_cache = {}
        self._blocks = []
        if self.g:
            self._split_blocks()

    # -- structure -------------------------------------------------------------

    def _t_full(self, ell):
        t = self._tfull_cache.get(ell)
        if t is None:
            t = self.space.hecke_matrix(ell)
            self._tfull_cache[ell] = t
        return t

    def _restrict_plus(self, t):
        te = linalg.mat_mul(t, self._embed)
        sol = linalg.solve(self._embed, te)
        if sol is None:
            raise WplusError("Hecke operator does not preserve the +1 subspace")
        return sol

    def _split_blocks(self):
        g = self.g
        h = None
        for combo in _TIE_SCHEDULE:
            cand = [[_ZERO] * g for _ in range(g)]
            for ell, r in combo.items():
                tl = self._restrict_plus(self._t_full(ell))
                cand = linalg.mat_add(cand, linalg.mat_scale(tl, Fraction(r)))
            chi = linalg.charpoly(cand)
            if _squarefree_q(chi):
                h = cand
                break
        if h is None:
            raise WplusError(
                f"no squarefree Hecke generator found for p={self.p}")
        self._generator = h
        for minpoly in _factor_monic_q(chi):
            mh = linalg.poly_eval_matrix(minpoly, h)
            kern = linalg.nullspace(mh)
            d = len(minpoly) - 1
            if len(kern) != d:
                raise WplusError("block kernel has wrong dimension")
            block_basis = linalg.transpose(kern)   # g x d
            self._blocks.append(_Block(self, minpoly, block_basis))

    # -- q-expansions ------------------------------------------------------------

    def ensure_eigenvalues(self, prec):
        """Make a_ell available for every prime ell < prec."""
        ell = 2
        while ell < prec:
            if is_prime(ell) and ell != self.p:
                if any(ell not in b.a_prime for b in self._blocks):
                    t = self.space.hecke_matrix(ell)
                    for b in self._blocks:
                        b.record_prime(ell, t)
            ell += 1

    def basis(self, prec):
        """GoodBasis at the given q-expansion precision."""
        if self.g == 0:
            return GoodBasis(self.p, 0, self.space.genus, [], [], True, [])
        self.ensure_eigenvalues(prec)
        rows = []
        blocks = []
        start = 1
        for b in self._blocks:
            rows.extend(b.trace_forms(prec))
            blocks.append(list(range(start, start + b.dim)))
            start += b.dim
        red, pivots = linalg.rref(rows)
        if len(pivots) != self.g:
            if prec <= (self.p + 1) // 6 + 1:
                raise PrecisionError(
                    f"precision {prec} too small to echelonize the basis "
                    f"(pivots can reach {(self.p + 1) // 6})")
            raise WplusError("trace forms do not span the +1 eigenspace")
        forms = []
        for r in range(self.g):
            coeffs = red[r]
            forms.append(QExpansion([_ZERO] + list(coeffs), 0, prec,
                                    weight=2, level=self.p))
        pivot_exps = [c + 1 for c in pivots]
        p_integral = all(f.is_p_integral(self.p) for f in forms)
        return GoodBasis(self.p, self.g, self.space.genus, forms,
                         pivot_exps, p_integral, blocks)


class _Block:
    """One Hecke-irreducible block of the +1 eigenspace.

    Coefficients of the eigenform live in K = Q[x]/(minpoly), represented as
    Fraction vectors in the power basis of the class alpha of x, where alpha
    is the eigenvalue of the chosen Hecke generator.
    """

    def __init__(self, computer, minpoly, block_basis):
        self.computer = computer
        self.minpoly = minpoly
        self.dim = len(minpoly) - 1
        space = computer.space
        h = computer._generator
        # cyclic basis v, h v, ..., h^{d-1} v inside the +1 space
        d = self.dim
        for col in range(len(block_basis[0])):
            v = [row[col] for row in block_basis]
            vecs = [v]
            for _ in range(d - 1):
                vecs.append(linalg.mat_vec(h, vecs[-1]))
            cyc = linalg.transpose(vecs)    # g x d
            if linalg.rank(cyc) == d:
                break
        else:
            raise WplusError("no cyclic vector found in block")
        self.cyclic = cyc
        # full-space images W = embed * cyc (dim x d), with a pivot-row solver
        w = linalg.mat_mul(computer._embed, cyc)
        self.w_full = w
        _, piv = linalg.rref(linalg.transpose(w))
        self.pivot_rows = piv[:d]
        sub = [w[i] for i in self.pivot_rows]
        inv = linalg.solve(sub, linalg.identity(d))
        if inv is None:
            raise WplusError("cyclic pivot rows are singular")
        self.solver = inv
        self.v_full = [w[i][0] for i in range(len(w))]
        # U_p acts as -1 on the whole +1 space
        self.a_prime = {computer.p: _k_scalar(-1, d)}
        self._power_sums = linalg.power_sums(minpoly, 2 * d)
        self._a_cache = None
        self._a_len = 0

    def record_prime(self, ell, t_full):
        y = linalg.mat_vec(t_full, self.v_full)
        rhs = [y[i] for i in self.pivot_rows]
        phi = linalg.mat_vec(self.solver, rhs)
        # confirm T_ell v really lies in the cyclic span
        check = linalg.mat_vec(self.w_full, phi)
        if check != y:
            raise WplusError(f"T_{ell} image left the block")
        self.a_prime[ell] = phi
        self._a_cache = None

    def _k_mul(self, x, y):
        d = self.dim
        conv = [_ZERO] * (2 * d - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        conv[i + j] += xi * yj
        for top in range(2 * d - 2, d - 1, -1):
            c = conv[top]
            if c:
                conv[top] = _ZERO
                for j in range(d):
                    conv[top - self.dim + j] -= c * self.minpoly[j]
        return conv[:d]

    def coefficients(self, prec):
        """a_1 .. a_{prec-1} as K-vectors, by Hecke multiplicativity."""
        if self._a_cache is not None and self._a_len >= prec:
            return self._a_cache[:prec]
        d = self.dim
        p = self.computer.p
        a = [None] * prec
        if prec > 1:
            a[1] = _k_scalar(1, d)
        for n in range(2, prec):
            if a[n] is not None:
                continue
            ell = _smallest_prime_factor(n)
            e = 0
            m = n
            while m % ell == 0:
                m //= ell
                e += 1
            le = n // m
            if a[le] is None:
                al = self.a_prime[ell]
                if ell == p:
                    acc = _k_scalar(1, d)
                    for _ in range(e):
                        acc = self._k_mul(acc, al)
                    a[le] = acc
                else:
                    prev2, prev1 = _k_scalar(1, d), al
                    for _ in range(e - 1):
                        nxt = [x - ell * y for x, y in
                               zip(self._k_mul(al, prev1), prev2)]
                        prev2, prev1 = prev1, nxt
                    a[le] = prev1
            a[n] = a[le] if m == 1 else self._k_mul(a[le], a[m])
        self._a_cache = a
        self._a_len = prec
        return a

    def trace_forms(self, prec):
        """d rational rows (coefficients of q^1..q^{prec-1}): traces of
        alpha^s times the eigenform, s = 0..d-1."""
        a = self.coefficients(prec)
        ps = self._power_sums
        d = self.dim
        while len(ps) < 2 * d:
            ps = linalg.power_sums(self.minpoly, 2 * d)
        rows = []
        for s in range(d):
            row = []
            for n in range(1, prec):
                an = a[n]
                row.append(sum((an[t] * ps[s + t] for t in range(d)
                                if an[t]), _ZERO))
            rows.append(row)
        return rows


def _k_scalar(c, d):
    return [Fraction(c)] + [_ZERO] * (d - 1)


def _smallest_prime_factor(n):
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def _squarefree_q(coeffs):
    """Squarefreeness of a rational polynomial via gcd with its derivative."""
    from sympy import Poly, Rational
    from sympy.abc import x
    f = Poly([Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
             x, domain="QQ")
    return f.gcd(f.diff(x)).degree() == 0


def _factor_monic_q(coeffs):
    """Monic irreducible rational factors (low-first Fraction lists) of a
    monic rational polynomial, via sympy."""
    from sympy import Poly, factor_list, Rational
    from sympy.abc import x
    f = Poly([Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
             x, domain="QQ")
    _, factors = factor_list(f)
    out = []
    for fac, mult in factors:
        if mult != 1:
            raise WplusError("generator polynomial was not squarefree")
        fp = Poly(fac, x)
        cs = [Fraction(int(c.p), int(c.q)) for c in reversed(fp.all_coeffs())]
        lead = cs[-1]
        out.append([c / lead for c in cs])
    out.sort(key=lambda m: (len(m), [str(c) for c in m]))
    return out


def good_basis(p, prec, cache=None):
    """The reduced echelon basis of S_2^+(p) to the given precision.

    Results round-trip through the cache (kind ``good_basis``) when one is
    supplied; a cached basis of at least the requested precision is reused.
    """
    if cache is not None:
        payload = cache.get("good_basis", str(p))
        if payload is not None and payload["precision"] >= prec:
            return _basis_from_payload(payload, prec)
    gb = BasisComputer(p).basis(prec)
    if cache is not None:
        cache.put("good_basis", str(p), _basis_to_payload(gb))
    return gb


def _basis_to_payload(gb):
    return {
        "version": 1,
        "p": gb.p,
        "g": gb.g,
        "genus_x0": gb.genus_x0,
        "pivots": list(gb.pivots),
        "precision": gb.precision if gb.forms else 0,
        "p_integral": gb.p_integral,
        "galois_blocks": [list(b) for b in gb.galois_blocks],
        "coefficients": [[f"{c.numerator}/{c.denominator}" for c in f.coefficients(f.precision)]
                         for f in gb.forms],
    }


def _basis_from_payload(payload, prec):
    forms = []
    for coeffs in payload["coefficients"]:
        vals = [Fraction(s) for s in coeffs[:prec]]
        forms.append(QExpansion(vals, 0, prec, weight=2, level=payload["p"]))
    return GoodBasis(payload["p"], payload["g"], payload["genus_x0"], forms,
                     list(payload["pivots"]), payload["p_integral"],
                     [list(b) for b in payload["galois_blocks"]])
