"""Permutations, Bruhat order, Schubert determinantal ideals and Schubert polynomials."""

import itertools
import re
from functools import lru_cache

from .idealops import Ideal
from .minors import minor
from .polycore import Ring, z
from .xpoly import XPoly


class Permutation:
    """w in S_n in one-line notation; the permutation matrix has a 1 at (w(j), j)."""

    __slots__ = ("one_line",)

    def __init__(self, one_line):
        w = tuple(int(x) for x in one_line)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError("not a permutation: %r" % (w,))
        self.one_line = w

    @classmethod
    def parse(cls, text):
        """'[2,1,3,4,5]', '2 1 3 4 5' or compact '21345' (n <= 9)."""
        text = text.strip()
        if re.fullmatch(r"\[?\s*\d+(\s*[, ]\s*\d+)+\s*\]?", text):
            return cls(int(x) for x in re.findall(r"\d+", text))
        body = text.strip("[]").strip()
        if body.isdigit():
            return cls(int(c) for c in body)
        raise ValueError("cannot parse permutation %r" % text)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def longest(cls, n):
        return cls(range(n, 0, -1))

    @classmethod
    def all(cls, n):
        return [cls(p) for p in itertools.permutations(range(1, n + 1))]

    @classmethod
    def simple(cls, n, i):
        w = list(range(1, n + 1))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @property
    def n(self):
        return len(self.one_line)

    def __call__(self, i):
        return self.one_line[i - 1]

    def __mul__(self, other):
        """Composition: (u*v)(i) = u(v(i))."""
        if self.n != other.n:
            raise ValueError("size mismatch")
        return Permutation(self(other(i)) for i in range(1, self.n + 1))

    def inverse(self):
        inv = [0] * self.n
        for i, wi in enumerate(self.one_line, 1):
            inv[wi - 1] = i
        return Permutation(inv)

    def length(self):
        w = self.one_line
        return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])

    def descents(self):
        return [i for i in range(1, self.n) if self(i) > self(i + 1)]

    def matrix(self):
        """0/1 rows: entry (i, j) is 1 iff w(j) = i."""
        n = self.n
        return [[1 if self(j) == i else 0 for j in range(1, n + 1)] for i in range(1, n + 1)]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.one_line == other.one_line

    def __hash__(self):
        return hash(self.one_line)

    def __str__(self):
        if self.n <= 9:
            return "[%s]" % "".join(map(str, self.one_line))
        return "[%s]" % ",".join(map(str, self.one_line))

    __repr__ = __str__


def rank_fn(w, p, q):
    """|{w(1..q)} cap {1..p}|, the rank of the northwest p x q block."""
    n = w.n
    if not (1 <= p <= n and 1 <= q <= n):
        raise ValueError("p, q must lie in [1, %d]" % n)
    return sum(1 for j in range(1, q + 1) if w(j) <= p)


def schubert_determinantal_ideal(w, ring=None):
    """All (1 + r_pq)-minors of the northwest p x q blocks of Z."""
    n = w.n
    ring = ring or Ring(n, t=False)
    Z = [[ring.z(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    gens = []
    seen = set()
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            k = rank_fn(w, p, q) + 1
            if k > min(p, q):
                continue
            for rows in itertools.combinations(range(p), k):
                for cols in itertools.combinations(range(q), k):
                    key = (rows, cols)
                    if key in seen:
                        continue
                    seen.add(key)
                    d = minor(Z, rows, cols)
                    if d:
                        gens.append(d)
    return Ideal(ring, gens)


def u_of(n, i):
    """Shortest u with u(i) = 1: [2, ..., i, 1, i+1, ..., n]."""
    if not 1 <= i <= n:
        raise ValueError("i out of range")
    return Permutation(list(range(2, i + 1)) + [1] + list(range(i + 1, n + 1)))


def v_of(n, j):
    """Shortest v with v(j) = n: [1, ..., j-1, n, j, ..., n-1]."""
    if not 1 <= j <= n:
        raise ValueError("j out of range")
    return Permutation(list(range(1, j)) + [n] + list(range(j, n)))


def w_of(n, i, j):
    """Shortest w with w(i) = 1 and w(j) = n (i != j).

    For i < j this is u[i] v[j].  For i > j the product u[i] v[j] does not
    send i to 1, so the same shortest-permutation description is used
    directly (this is the case the class formula needs for h = id).
    """
    if not (1 <= i <= n and 1 <= j <= n) or i == j and n > 1:
        raise ValueError("need distinct i, j in [1, %d]" % n)
    if i < j:
        return u_of(n, i) * v_of(n, j)
    rest = iter(range(2, n))
    return Permutation(1 if k == i else n if k == j else next(rest) for k in range(1, n + 1))


def bruhat_leq(u, w):
    """Tableau criterion: sorted u(1..k) <= sorted w(1..k) entrywise, all k."""
    if u.n != w.n:
        raise ValueError("size mismatch")
    for k in range(1, u.n):
        a = sorted(u.one_line[:k])
        b = sorted(w.one_line[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def w0_act(I):
    """z[i,j] -> z[n+1-i, j] on every generator."""
    ring = I.ring
    n = ring.n
    mapping = {z(i, j): ring.z(n + 1 - i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    return Ideal(ring, [g.substitute(mapping) for g in I.generators])


@lru_cache(maxsize=None)
def _schubert_cached(one_line):
    w = Permutation(one_line)
    n = w.n
    if w == Permutation.longest(n):
        return XPoly.monomial(max(n - 1, 1), [n - 1 - k for k in range(max(n - 1, 1))])
    # w has an ascent at some i: S_w = d_i S_{w s_i} where w s_i is longer
    for i in range(1, n):
        if w(i) < w(i + 1):
            return _schubert_cached((w * Permutation.simple(n, i)).one_line).divided_difference(i).widen(max(n - 1, 1))
    raise AssertionError("unreachable")


def schubert_polynomial(w):
    """Divided differences applied to x_1^{n-1} x_2^{n-2} ... x_{n-1}."""
    return _schubert_cached(w.one_line)


def class_formula(h):
    """Schubert class predicted for the Hessenberg variety of h (n >= 3).

    Sum of S_{w[i, h(i)]} over corners attaining d_h = max (h(i) - i), or
    2 sum_{i<n} S_{w[i+1, i]} when h is the identity function.
    """
    n = h.n
    if n < 3:
        raise ValueError("class formula needs n >= 3")
    if h.is_identity():
        total = XPoly(n - 1, {})
        for i in range(1, n):
            total = total + schubert_polynomial(w_of(n, i + 1, i))
        return total * 2
    corners = h.corners()
    d = max(h(i) - i for i in corners)
    total = XPoly(n - 1, {})
    for i in corners:
        if h(i) - i == d:
            total = total + schubert_polynomial(w_of(n, i, h(i)))
    return total
