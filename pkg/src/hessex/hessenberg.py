"""Hessenberg functions, sheet lines and the ideals built from them.

Matrices are plain lists of rows whose entries are ``Polynomial`` objects
(or anything ``Ring.convert`` accepts).  A constant matrix is simply one
whose entries do not involve t.
"""

import itertools
import json
from fractions import Fraction

from .idealops import Ideal, ideal_product, ideal_sum
from .minors import all_minors, minor
from .polycore import QQ, T, Polynomial, Ring, z


class HessenbergFunction:
    """h: [n] -> [n], weakly increasing with h(i) >= i."""

    __slots__ = ("values",)

    def __init__(self, values):
        vals = tuple(int(v) for v in values)
        n = len(vals)
        if n == 0:
            raise ValueError("empty Hessenberg function")
        for i, v in enumerate(vals, 1):
            if not i <= v <= n:
                raise ValueError("need i <= h(i) <= n, failed at i=%d" % i)
            if i > 1 and vals[i - 2] > v:
                raise ValueError("h must be weakly increasing")
        self.values = vals

    @classmethod
    def parse(cls, text):
        """'2,4,4,4' (or '(2,4,4,4)')."""
        return cls(int(x) for x in text.strip().strip("()[]").split(","))

    @classmethod
    def all(cls, n):
        out = []

        def rec(prefix):
            i = len(prefix) + 1
            if i > n:
                out.append(cls(prefix))
                return
            lo = max(i, prefix[-1] if prefix else 1)
            for v in range(lo, n + 1):
                rec(prefix + [v])

        rec([])
        return out

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def full(cls, n):
        return cls([n] * n)

    @property
    def n(self):
        return len(self.values)

    def __call__(self, i):
        return 0 if i == 0 else self.values[i - 1]

    def corners(self):
        return [i for i in range(1, self.n + 1) if self(i) > self(i - 1)]

    def i_star(self, i):
        return max(k for k in range(1, self.n + 1) if self(k) == self(i))

    def is_indecomposable(self):
        return all(self(i) > i for i in range(1, self.n))

    def decomposable_set(self):
        return [j for j in range(1, self.n) if self(j) == j]

    def is_identity(self):
        return self.values == tuple(range(1, self.n + 1))

    def __eq__(self, other):
        return isinstance(other, HessenbergFunction) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __str__(self):
        return "(%s)" % ",".join(map(str, self.values))

    def __repr__(self):
        return "HessenbergFunction(%s)" % (self.values,)


class Partition(tuple):
    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if not parts or any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError("partition must be weakly decreasing")
        return super().__new__(cls, parts)

    @property
    def size(self):
        return sum(self)


class JordanData:
    """Ordered (eigenvalue, partition) blocks, normalized on construction.

    Blocks are sorted by |mu|, then lexicographically by mu; blocks that
    tie on both keep their input order.
    """

    def __init__(self, blocks):
        cleaned = []
        for ev, mu in blocks:
            cleaned.append((QQ(Fraction(ev) if isinstance(ev, str) else ev), Partition(mu)))
        evs = [ev for ev, _ in cleaned]
        if len(set(evs)) != len(evs):
            raise ValueError("eigenvalues must be distinct")
        cleaned.sort(key=lambda b: (b[1].size, tuple(b[1])))
        self.blocks = tuple(cleaned)
        self.n = sum(mu.size for _, mu in cleaned)

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls((b["eigenvalue"], b["mu"]) for b in data)

    @classmethod
    def minimal(cls, n):
        """Jordan data of s = diag(1, 0, ..., 0)."""
        if n < 2:
            raise ValueError("n >= 2")
        return cls([(1, [1]), (0, [1] * (n - 1))])

    @classmethod
    def regular_semisimple(cls, eigenvalues):
        return cls((c, [1]) for c in eigenvalues)

    @classmethod
    def nilpotent(cls, mu):
        return cls([(0, mu)])

    def to_json(self):
        return [{"eigenvalue": str(ev), "mu": list(mu)} for ev, mu in self.blocks]


def lambda_of(jd):
    """Columnwise sum of the partitions."""
    width = max(len(mu) for _, mu in jd.blocks)
    return Partition(sum(mu[k] for _, mu in jd.blocks if k < len(mu)) for k in range(width))


class Tableau:
    """Rows listed top (longest) first."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.shape = Partition(len(r) for r in self.rows)
        for r in self.rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError("rows must increase left to right")

    def column_strict_downward(self):
        """Every entry exceeds all entries of the rows below it."""
        for k in range(len(self.rows) - 1):
            below = [x for r in self.rows[k + 1:] for x in r]
            if below and min(self.rows[k]) <= max(below):
                return False
        return True

    def rows_bottom_up(self):
        return [list(r) for r in reversed(self.rows)]

    def horizontal_pairs(self):
        return [(a, b) for r in self.rows for a, b in zip(r, r[1:])]

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __repr__(self):
        return "Tableau(%r)" % (self.rows,)


def _block_tableau(mu, offset):
    # label bottom row first, each row left to right
    rows = [None] * len(mu)
    nxt = offset + 1
    for k in range(len(mu) - 1, -1, -1):
        rows[k] = list(range(nxt, nxt + mu[k]))
        nxt += mu[k]
    return Tableau(rows)


def block_tableaux(jd):
    out = []
    offset = 0
    for _, mu in jd.blocks:
        out.append(_block_tableau(mu, offset))
        offset += mu.size
    return out


def build_tableau(jd):
    """T_x: the block tableaux concatenated row by row."""
    parts = block_tableaux(jd)
    height = max(len(T_.rows) for T_ in parts)
    rows = []
    for k in range(height):
        row = []
        for T_ in parts:
            if k < len(T_.rows):
                row.extend(T_.rows[k])
        rows.append(row)
    return Tableau(rows)


def associated_nilpotent(jd):
    """0/1 matrix with a 1 at (l, m) for each horizontally adjacent l, m."""
    n = jd.n
    M = [[0] * n for _ in range(n)]
    for a, b in build_tableau(jd).horizontal_pairs():
        M[a - 1][b - 1] = 1
    return M


class SheetLine:
    """x_t = t x_ss + n_x."""

    def __init__(self, jd):
        self.jordan = jd
        self.n = jd.n
        self.diagonal = [ev for ev, mu in jd.blocks for _ in range(mu.size)]
        self.nilpotent = associated_nilpotent(jd)

    def semisimple(self):
        n = self.n
        return [[self.diagonal[i] if i == j else QQ(0) for j in range(n)] for i in range(n)]

    def matrix(self, ring=None):
        """x_t over a ring containing t."""
        ring = ring or Ring(self.n, t=True)
        t = ring.t
        n = self.n
        return [[t * self.diagonal[i] * (i == j) + self.nilpotent[i][j] for j in range(n)] for i in range(n)]

    def at(self, a, ring=None):
        """x_a = a x_ss + n_x as a constant matrix."""
        ring = ring or Ring(self.n, t=False)
        a = QQ(a)
        n = self.n
        return [[ring.const(a * self.diagonal[i] * (i == j) + self.nilpotent[i][j]) for j in range(n)]
                for i in range(n)]


def sheet_line(jd):
    return SheetLine(jd)


def minimal_sheet_line(n):
    return SheetLine(JordanData.minimal(n))


def e_matrix(n, i, j, ring=None):
    """E_ij as a constant matrix."""
    ring = ring or Ring(n, t=False)
    return [[ring.const(1 if (r, c) == (i, j) else 0) for c in range(1, n + 1)] for r in range(1, n + 1)]


def constant_matrix(rows, ring=None):
    n = len(rows)
    ring = ring or Ring(n, t=False)
    return [[ring.convert(x) for x in row] for row in rows]


def parse_matrix(data, ring=None):
    """Row-major JSON array of polynomial strings (or numbers)."""
    if isinstance(data, str):
        data = json.loads(data)
    n = len(data)
    if ring is None:
        uses_t = any(isinstance(x, str) and "t" in x for row in data for x in row)
        ring = Ring(n, t=uses_t)
    return [[ring.convert(x if not isinstance(x, float) else Fraction(x)) for x in row] for row in data]


def _matrix_ring(x, ring):
    if ring is not None:
        return ring
    for row in x:
        for e in row:
            if isinstance(e, Polynomial):
                if T in e.variables() or e.ring.has_t:
                    return Ring(len(x), t=True)
    return Ring(len(x), t=False)


def rank_condition_ideal(x, h, i, ring=None):
    """(h(i)+1)-minors of [x v_1 .. x v_i | v_1 .. v_h(i)]; zero if h(i) = n."""
    n = h.n
    if len(x) != n:
        raise ValueError("matrix size does not match h")
    if not 1 <= i <= n:
        raise ValueError("i out of range")
    ring = _matrix_ring(x, ring)
    if h(i) == n:
        return Ideal.zero(ring)
    X = [[ring.convert(e) for e in row] for row in x]
    Z = [[ring.z(r, c) for c in range(1, n + 1)] for r in range(1, n + 1)]
    cols = []
    for k in range(i):
        col = []
        for r in range(n):
            acc = ring.zero()
            for m in range(n):
                if X[r][m]:
                    acc = acc + X[r][m] * Z[m][k]
            col.append(acc)
        cols.append(col)
    for k in range(h(i)):
        cols.append([Z[r][k] for r in range(n)])
    M = [[cols[c][r] for c in range(len(cols))] for r in range(n)]
    gens = []
    seen = set()
    for d in all_minors(M, h(i) + 1):
        key = d.monic()
        if key not in seen:
            seen.add(key)
            gens.append(d)
    return Ideal(ring, gens)


def hessenberg_ideal(x, h, ring=None, corner_reduced=True):
    """I_{x,h}: rank conditions at i* for corners i, or at every i."""
    ring = _matrix_ring(x, ring)
    idx = sorted({h.i_star(i) for i in h.corners()}) if corner_reduced else range(1, h.n + 1)
    return ideal_sum(*[rank_condition_ideal(x, h, i, ring) for i in idx])


# -- the special families ------------------------------------------------------


def p_B(ring, B):
    """Minor of Z on rows B and columns 1..|B| (p_{} = 1)."""
    B = sorted(B)
    if not B:
        return ring.one()
    Z = [[ring.z(r, c) for c in range(1, len(B) + 1)] for r in range(1, ring.n + 1)]
    return minor(Z, [b - 1 for b in B], range(len(B)))


def jt_ideal(n, i, ring=None):
    """J_i^t = <t z[1,k] + z[n,k] : k <= i>."""
    ring = ring or Ring(n, t=True)
    if not 0 <= i <= n:
        raise ValueError("i out of range")
    return Ideal(ring, [ring.t * ring.z(1, k) + ring.z(n, k) for k in range(1, i + 1)])


def ja_ideal(n, i, a, ring=None):
    """J_i^a = <a z[1,k] + z[n,k] : k <= i>; a = 0 gives J_i^0."""
    ring = ring or Ring(n, t=False)
    if not 0 <= i <= n:
        raise ValueError("i out of range")
    a = QQ(a)
    return Ideal(ring, [ring.z(1, k) * a + ring.z(n, k) for k in range(1, i + 1)])


def k_ideal(n, j, ring=None):
    """K_j = <p_B : B subset of {2..n}, |B| = j>."""
    ring = ring or Ring(n, t=False)
    if not 0 <= j <= n:
        raise ValueError("j out of range")
    return Ideal(ring, [p_B(ring, B) for B in itertools.combinations(range(2, n + 1), j)])


def pt_ideal(h, i, ring=None):
    """P^t_{i,h} = J^t_{i-1} + K_{h(i)}."""
    ring = ring or Ring(h.n, t=True)
    return ideal_sum(jt_ideal(h.n, i - 1, ring), k_ideal(h.n, h(i), ring))


def minimal_sheet_closed_form(h, ring=None):
    """Sum over corners i of J^t_{i*} K_{h(i)}."""
    n = h.n
    ring = ring or Ring(n, t=True)
    parts = [ideal_product(jt_ideal(n, h.i_star(i), ring), k_ideal(n, h(i), ring)) for i in h.corners()]
    return ideal_sum(*parts)


# generators used by the Groebner-basis tables (ring with s and t)


def g_poly(ring, k):
    return ring.t * ring.z(1, k) + ring.z(ring.n, k)


def h_poly(ring, k, l):
    n = ring.n
    return ring.z(1, l) * ring.z(n, k) - ring.z(1, k) * ring.z(n, l)


def f_poly(ring, k):
    return ring.s * ring.z(ring.n, k) + ring.z(1, k)


def H_lower(ring, i):
    """{g_k : k <= i} with {h_kl : k < l <= i}."""
    out = [g_poly(ring, k) for k in range(1, i + 1)]
    out += [h_poly(ring, k, l) for k in range(1, i + 1) for l in range(k + 1, i + 1)]
    return out


def H_upper(ring, j):
    """{p_B : B subset of {2..n}, |B| = j}."""
    return [p_B(ring, B) for B in itertools.combinations(range(2, ring.n + 1), j)]


# -- evaluation and change of variables -------------------------------------------


def ev(a, I):
    """Substitute t := a; the result drops t from the ring."""
    ring = I.ring
    if not ring.has_t:
        return I
    target = ring.extend(t=False)
    return Ideal(target, [g.substitute({T: QQ(a)}, target) for g in I.generators])


def ev_matrix(a, x, ring=None):
    n = len(x)
    target = ring or Ring(n, t=False)
    return [[e.substitute({T: QQ(a)}, target) if isinstance(e, Polynomial) else target.convert(e) for e in row]
            for row in x]


def psi(a, I):
    """z[1,l] -> (z[1,l] - z[n,l]) / a, all other variables fixed."""
    a = QQ(a)
    if not a:
        raise ZeroDivisionError("psi needs a nonzero parameter")
    ring = I.ring
    n = ring.n
    mapping = {z(1, l): (ring.z(1, l) - ring.z(n, l)) * (1 / a) for l in range(1, n + 1)}
    return Ideal(ring, [g.substitute(mapping) for g in I.generators])
