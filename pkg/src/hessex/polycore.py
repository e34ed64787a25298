"""Exact polynomial arithmetic over Q in the variables z[i,j], t, s, w.

Monomials are packed into Python ints: one 8-bit slot per variable, the
top bit of every slot is a guard bit that must stay clear.  In the
canonical layout of a ring the first variable of ``Ring.variables`` sits
in the most significant slot, so comparing packed ints *is* the pure lex
order ``PaperOrder``.  Other orders get their own packed encoding (see
``Encoding``) in which comparison is again plain int comparison and
multiplication is int addition.
"""

import re
from dataclasses import dataclass
from functools import lru_cache

from gmpy2 import mpq

BITS = 8
_SLOT = (1 << BITS) - 1
_GUARD_BIT = 1 << (BITS - 1)
MAX_EXPONENT = _GUARD_BIT - 1

QQ = mpq


def _guard_mask(nslots):
    h = 0
    for k in range(nslots):
        h |= _GUARD_BIT << (k * BITS)
    return h


class ExponentOverflow(ArithmeticError):
    """An exponent (or weight) left the packed slot range."""


@dataclass(frozen=True, order=True)
class Variable:
    kind: str
    row: int = 0
    col: int = 0

    def __str__(self):
        if self.kind == "z":
            return "z[%d,%d]" % (self.row, self.col)
        return self.kind


def z(i, j):
    return Variable("z", i, j)


T = Variable("t")
S = Variable("s")
W = Variable("w")


class Ring:
    """Q[w?, s?, t?, z_ij : 1 <= i,j <= n].

    ``Ring(n, t=True)`` is cached, so equal rings are usually identical
    objects; equality is still structural.
    """

    _cache = {}

    def __new__(cls, n, t=True, s=False, aux=False):
        key = (int(n), bool(t), bool(s), bool(aux))
        ring = cls._cache.get(key)
        if ring is None:
            ring = super().__new__(cls)
            ring._setup(*key)
            cls._cache[key] = ring
        return ring

    def __getnewargs__(self):
        return self.key

    def _setup(self, n, t, s, aux):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.has_t = t
        self.has_s = s
        self.has_aux = aux
        self.key = (n, t, s, aux)
        seq = []
        if aux:
            seq.append(W)
        if s:
            seq.append(S)
        if t:
            seq.append(T)
        # first row reversed, the remaining rows in natural order
        seq.extend(z(1, j) for j in range(n, 0, -1))
        for i in range(2, n + 1):
            seq.extend(z(i, j) for j in range(1, n + 1))
        self.variables = tuple(seq)
        self.nvars = len(seq)
        self.index = {v: k for k, v in enumerate(seq)}
        self.shift = [(self.nvars - 1 - k) * BITS for k in range(self.nvars)]
        self.guard = _guard_mask(self.nvars)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        flags = [k for k, on in (("w", self.has_aux), ("s", self.has_s), ("t", self.has_t)) if on]
        return "Ring(n=%d%s)" % (self.n, "".join(", " + f for f in flags))

    def extend(self, t=None, s=None, aux=None):
        return Ring(
            self.n,
            self.has_t if t is None else t,
            self.has_s if s is None else s,
            self.has_aux if aux is None else aux,
        )

    # -- monomials -------------------------------------------------------

    def pack(self, exps):
        """Pack a mapping Variable -> exponent (or a full exponent list)."""
        m = 0
        if isinstance(exps, dict):
            for v, e in exps.items():
                if e:
                    if not 0 < e <= MAX_EXPONENT:
                        raise ExponentOverflow(e)
                    m += e << self.shift[self.index[v]]
        else:
            for k, e in enumerate(exps):
                if e:
                    if not 0 < e <= MAX_EXPONENT:
                        raise ExponentOverflow(e)
                    m += e << self.shift[k]
        return m

    def unpack(self, m):
        out = [0] * self.nvars
        k = self.nvars - 1
        while m:
            out[k] = m & _SLOT
            m >>= BITS
            k -= 1
        return out

    def exponent_dict(self, m):
        return {self.variables[k]: e for k, e in enumerate(self.unpack(m)) if e}

    def var_mono(self, v):
        return 1 << self.shift[self.index[v]]

    # -- constructors ----------------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {0: QQ(1)})

    def const(self, c):
        c = QQ(c)
        return Polynomial(self, {0: c} if c else {})

    def var(self, v):
        if v not in self.index:
            raise KeyError("%s is not a variable of %r" % (v, self))
        return Polynomial(self, {self.var_mono(v): QQ(1)})

    def z(self, i, j):
        return self.var(z(i, j))

    @property
    def t(self):
        return self.var(T)

    @property
    def s(self):
        return self.var(S)

    @property
    def w(self):
        return self.var(W)

    def monomial(self, exps, coeff=1):
        c = QQ(coeff)
        return Polynomial(self, {self.pack(exps): c} if c else {})

    def parse(self, text):
        return parse_polynomial(text, self)

    def convert(self, x):
        """Coerce ints, rationals, strings and polynomials into this ring."""
        if isinstance(x, Polynomial):
            return x if x.ring == self else x.to_ring(self)
        if isinstance(x, str):
            return parse_polynomial(x, self)
        return self.const(x)


class Monomial:
    """A packed monomial together with its ring (canonical layout)."""

    __slots__ = ("ring", "packed")

    def __init__(self, ring, packed):
        self.ring = ring
        self.packed = packed

    @classmethod
    def from_exponents(cls, ring, exps):
        return cls(ring, ring.pack(exps))

    def exponents(self):
        return self.ring.exponent_dict(self.packed)

    @property
    def degree(self):
        return sum(self.ring.unpack(self.packed))

    def __mul__(self, other):
        m = self.packed + other.packed
        if m & self.ring.guard:
            raise ExponentOverflow("monomial product")
        return Monomial(self.ring, m)

    def divides(self, other):
        h = self.ring.guard
        return ((other.packed | h) - self.packed) & h == h

    def __truediv__(self, other):
        if not other.divides(self):
            raise ValueError("%s does not divide %s" % (other, self))
        return Monomial(self.ring, self.packed - other.packed)

    def lcm(self, other):
        return Monomial(self.ring, packed_lcm(self.packed, other.packed, self.ring.guard))

    def gcd(self, other):
        return Monomial(self.ring, packed_gcd(self.packed, other.packed, self.ring.guard))

    def is_squarefree(self):
        return all(e <= 1 for e in self.ring.unpack(self.packed))

    def support(self):
        return frozenset(k for k, e in enumerate(self.ring.unpack(self.packed)) if e)

    def as_polynomial(self):
        return Polynomial(self.ring, {self.packed: QQ(1)})

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.ring == other.ring and self.packed == other.packed

    def __hash__(self):
        return hash((self.ring.key, self.packed))

    def __str__(self):
        return _format_mono(self.ring, self.packed) or "1"

    __repr__ = __str__


def _ge_mask(a, b, guard):
    # slots where a >= b, as 0x7f-filled slots
    g = ((a | guard) - b) & guard
    return g - (g >> (BITS - 1))


def packed_lcm(a, b, guard):
    mask = _ge_mask(a, b, guard)
    return (a & mask) | (b & ~mask)


def packed_gcd(a, b, guard):
    mask = _ge_mask(a, b, guard)
    return (b & mask) | (a & ~mask)


def packed_divides(a, b, guard):
    """True iff monomial a divides monomial b."""
    return ((b | guard) - a) & guard == guard


class Polynomial:
    """Immutable sparse polynomial: dict packed-monomial -> mpq."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_dict(cls, ring, mapping):
        """Build from {exponent dict or packed int: coefficient}."""
        terms = {}
        for m, c in mapping.items():
            if not isinstance(m, int):
                m = ring.pack(m)
            c = QQ(c)
            if c:
                terms[m] = terms.get(m, 0) + c
        return cls(ring, {m: c for m, c in terms.items() if c})

    # -- predicates ------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or set(self.terms) == {0}

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, mpq)) or hasattr(other, "denominator"):
            return self.terms == ({0: QQ(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.key, frozenset(self.terms.items())))
        return self._hash

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("ring mismatch: %r vs %r" % (self.ring, other.ring))
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m)
            if v is None:
                terms[m] = c
            else:
                v += c
                if v:
                    terms[m] = v
                else:
                    del terms[m]
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = QQ(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {m: a * c for m, a in self.terms.items()})
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        guard = self.ring.guard
        out = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                v = out.get(m)
                if v is None:
                    out[m] = ca * cb
                else:
                    out[m] = v + ca * cb
        for m in out:
            if m & guard:
                raise ExponentOverflow("polynomial product")
        return Polynomial(self.ring, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("non-negative integer exponent required")
        out, base = self.ring.one(), self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def mul_term(self, mono, coeff=1):
        """self * coeff * x^mono for a packed monomial."""
        c = QQ(coeff)
        if not c:
            return self.ring.zero()
        out = {m + mono: a * c for m, a in self.terms.items()}
        for m in out:
            if m & self.ring.guard:
                raise ExponentOverflow("term product")
        return Polynomial(self.ring, out)

    def exact_divide(self, other, order=None):
        """Quotient q with self == q * other; raises if the division is not exact."""
        from .groebner import divide

        res = divide(self, [other], order or PAPER)
        if res.remainder:
            raise ValueError("division is not exact")
        return res.quotients[0]

    # -- order dependent views -------------------------------------------

    def leading_term(self, order=None):
        """(coefficient, Monomial) of the leading term; raises on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order is None or order.is_canonical(self.ring):
            m = max(self.terms)
        else:
            enc = order.encoding(self.ring)
            m = enc.decode(max(enc.encode(x) for x in self.terms))
        return self.terms[m], Monomial(self.ring, m)

    def leading_monomial(self, order=None):
        return self.leading_term(order)[1]

    def leading_coefficient(self, order=None):
        return self.leading_term(order)[0]

    def monic(self, order=None):
        if not self.terms:
            return self
        return self * (1 / self.leading_coefficient(order))

    def sorted_terms(self, order=None):
        """[(coeff, Monomial)] in decreasing order."""
        if order is None or order.is_canonical(self.ring):
            ms = sorted(self.terms, reverse=True)
        else:
            enc = order.encoding(self.ring)
            ms = sorted(self.terms, key=enc.encode, reverse=True)
        return [(self.terms[m], Monomial(self.ring, m)) for m in ms]

    # -- structure -------------------------------------------------------

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(self.ring.unpack(m)) for m in self.terms)

    def degree_in(self, v):
        k = self.ring.index[v]
        sh = self.ring.shift[k]
        return max(((m >> sh) & _SLOT for m in self.terms), default=-1)

    def variables(self):
        used = 0
        for m in self.terms:
            used |= m
        ring = self.ring
        return {ring.variables[k] for k in range(ring.nvars) if (used >> ring.shift[k]) & _SLOT}

    def multidegree_of(self, mono, weights):
        d = None
        for v, e in self.ring.exponent_dict(mono).items():
            w = weights[v]
            d = [e * x for x in w] if d is None else [a + e * x for a, x in zip(d, w)]
        return tuple(d) if d is not None else None

    def is_homogeneous(self, weights):
        """weights: Variable -> tuple of ints, all of one length."""
        width = len(next(iter(weights.values())))
        degs = set()
        for m in self.terms:
            d = self.multidegree_of(m, weights)
            degs.add(d if d is not None else (0,) * width)
        return len(degs) <= 1

    def to_ring(self, ring):
        """Re-embed into another ring containing every variable used."""
        if ring == self.ring:
            return self
        src = self.ring
        moves = []
        for k, v in enumerate(src.variables):
            moves.append((src.shift[k], ring.shift[ring.index[v]] if v in ring.index else None))
        out = {}
        for m, c in self.terms.items():
            new = 0
            for s_src, s_dst in moves:
                e = (m >> s_src) & _SLOT
                if e:
                    if s_dst is None:
                        raise ValueError("polynomial uses a variable missing from %r" % ring)
                    new |= e << s_dst
            out[new] = c
        return Polynomial(ring, out)

    def substitute(self, mapping, ring=None):
        """Substitute Variable -> value (number or Polynomial in the target ring).

        The target ring defaults to self.ring; substituted variables may be
        absent from it.
        """
        ring = ring or self.ring
        src = self.ring
        subs = {}
        for v, val in mapping.items():
            subs[src.index[v]] = ring.convert(val)
        keep = [(k, src.shift[k], ring.shift[ring.index[v]] if v in ring.index else None)
                for k, v in enumerate(src.variables) if k not in subs]
        powers = {}
        out = ring.zero()
        acc = {}
        for m, c in self.terms.items():
            rest = 0
            factor = None
            for k, val in subs.items():
                e = (m >> src.shift[k]) & _SLOT
                if e:
                    key = (k, e)
                    p = powers.get(key)
                    if p is None:
                        p = powers[key] = val ** e
                    factor = p if factor is None else factor * p
            for k, s_src, s_dst in keep:
                e = (m >> s_src) & _SLOT
                if e:
                    if s_dst is None:
                        raise ValueError("variable %s missing from target ring" % src.variables[k])
                    rest |= e << s_dst
            if factor is None:
                acc[rest] = acc.get(rest, 0) + c
            else:
                out = out + factor.mul_term(rest, c)
        return out + Polynomial.from_dict(ring, acc)

    def __call__(self, **values):
        return self.substitute({_named(self.ring, k): v for k, v in values.items()})

    # -- text ------------------------------------------------------------

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return "Polynomial(%r)" % format_polynomial(self)


def _named(ring, name):
    for v in ring.variables:
        if v.kind == name:
            return v
    raise KeyError(name)


# -- monomial orders ------------------------------------------------------


class Encoding:
    """Order-specific packed layout.

    Slots from the most significant end: one slot per weight row, then one
    exponent slot per variable in tie-break sequence.  The encoding is
    linear in the exponent vector, so products stay additions and the
    guard-bit divisibility test stays valid.
    """

    def __init__(self, ring, rows, seq):
        self.ring = ring
        self.nrows = len(rows)
        self.seq = list(seq)
        nslots = self.nrows + ring.nvars
        self.guard = _guard_mask(nslots)
        self.identity = not rows and self.seq == list(range(ring.nvars))
        top = nslots - 1
        self.exp_shift = [0] * ring.nvars
        for pos, k in enumerate(self.seq):
            self.exp_shift[k] = (top - self.nrows - pos) * BITS
        self.unit = []
        for k in range(ring.nvars):
            u = 1 << self.exp_shift[k]
            for r, row in enumerate(rows):
                if row[k]:
                    u += row[k] << ((top - r) * BITS)
            self.unit.append(u)
        self.exp_mask = (1 << (ring.nvars * BITS)) - 1

    def encode(self, m):
        if self.identity:
            return m
        out = 0
        k = self.ring.nvars - 1
        unit = self.unit
        while m:
            e = m & _SLOT
            if e:
                out += e * unit[k]
            m >>= BITS
            k -= 1
        if out & self.guard:
            raise ExponentOverflow("order weight")
        return out

    def decode(self, x):
        if self.identity:
            return x
        ring = self.ring
        m = 0
        for k in range(ring.nvars):
            e = (x >> self.exp_shift[k]) & _SLOT
            if e:
                m |= e << ring.shift[k]
        return m

    def lcm(self, a, b):
        if self.identity:
            return packed_lcm(a, b, self.guard)
        ea, eb = a & self.exp_mask, b & self.exp_mask
        delta = packed_lcm(ea, eb, self.guard) - ea
        out = a
        for k in range(self.ring.nvars):
            e = (delta >> self.exp_shift[k]) & _SLOT
            if e:
                out += e * self.unit[k]
        return out

    def coprime(self, a, b):
        ea, eb = a & self.exp_mask, b & self.exp_mask
        return packed_gcd(ea, eb, self.guard) == 0


class MonomialOrder:
    """Base class.  Subclasses define ``_layout(ring) -> (rows, seq)``."""

    name = "order"

    def encoding(self, ring):
        return _encoding(self, ring)

    def is_canonical(self, ring):
        return self.encoding(ring).identity

    def compare(self, m1, m2):
        """-1, 0, 1 for Monomials m1 <, ==, > m2."""
        enc = self.encoding(m1.ring)
        a, b = enc.encode(m1.packed), enc.encode(m2.packed)
        return (a > b) - (a < b)

    def key(self, ring):
        """Sort key on packed canonical monomials."""
        return self.encoding(ring).encode

    def _seq_indices(self, ring, seq):
        out = [ring.index[v] for v in seq if v in ring.index]
        rest = [k for k in range(ring.nvars) if k not in set(out)]
        return out + rest


@lru_cache(maxsize=None)
def _encoding(order, ring):
    rows, seq = order._layout(ring)
    return Encoding(ring, rows, seq)


def _special_prefix(ring):
    return [v for v in (W, S, T) if v in ring.index]


@dataclass(frozen=True)
class PaperOrder(MonomialOrder):
    """Pure lex: w > s > t > z[1,n] > ... > z[1,1] > z[2,1] > ... > z[n,n]."""

    name = "paper"

    def _layout(self, ring):
        return [], list(range(ring.nvars))

    def __str__(self):
        return "paper"


@dataclass(frozen=True)
class Lex(MonomialOrder):
    """Pure lex along ``sequence``; unlisted variables follow row-major.

    ``Lex()`` is row-major lex: w > s > t > z[1,1] > z[1,2] > ... > z[n,n].
    """

    sequence: tuple = ()
    name = "lex"

    def _layout(self, ring):
        if self.sequence:
            return [], self._seq_indices(ring, self.sequence)
        seq = _special_prefix(ring) + [z(i, j) for i in range(1, ring.n + 1) for j in range(1, ring.n + 1)]
        return [], [ring.index[v] for v in seq]

    def __str__(self):
        return "lex"


@dataclass(frozen=True)
class DiagonalTwist(MonomialOrder):
    """Row-major lex with rows taken in the order perm(1), ..., perm(n).

    Leading terms of minors are then diagonal products relative to the
    permuted row order.
    """

    perm: tuple = ()
    name = "diagonal-twist"

    def _layout(self, ring):
        rows = self.perm or tuple(range(1, ring.n + 1))
        seq = _special_prefix(ring) + [z(i, j) for i in rows for j in range(1, ring.n + 1)]
        return [], [ring.index[v] for v in seq]

    def __str__(self):
        return "twist%s" % (list(self.perm),)


@dataclass(frozen=True)
class Grevlex(MonomialOrder):
    """Graded reverse lex along the default variable sequence (or ``sequence``)."""

    sequence: tuple = ()
    name = "grevlex"

    def _layout(self, ring):
        seq = self._seq_indices(ring, self.sequence) if self.sequence else list(range(ring.nvars))
        # grevlex = lex on the prefix sums S_N, S_{N-1}, ..., S_1
        rows = []
        for cut in range(len(seq), 0, -1):
            row = [0] * ring.nvars
            for k in seq[:cut]:
                row[k] = 1
            rows.append(row)
        return rows, seq

    def __str__(self):
        return "grevlex"


@dataclass(frozen=True)
class DegLex(MonomialOrder):
    """Total degree, ties broken by lex along the default sequence."""

    name = "deglex"

    def _layout(self, ring):
        return [[1] * ring.nvars], list(range(ring.nvars))

    def __str__(self):
        return "deglex"


@dataclass(frozen=True)
class Elimination(MonomialOrder):
    """Block order: lex on ``drop`` first, then ``base`` on the rest."""

    drop: tuple = ()
    base: MonomialOrder = None

    name = "elimination"

    def _layout(self, ring):
        base = self.base or PaperOrder()
        drop = [ring.index[v] for v in self.drop if v in ring.index]
        brows, bseq = base._layout(ring)
        rows = []
        for k in drop:
            row = [0] * ring.nvars
            row[k] = 1
            rows.append(row)
        if not brows and bseq[: len(drop)] == drop:
            return [], bseq
        for row in brows:
            row = list(row)
            for k in drop:
                row[k] = 0
            rows.append(row)
        return rows, drop + [k for k in bseq if k not in drop]

    def __str__(self):
        return "elim(%s; %s)" % (",".join(map(str, self.drop)), self.base or "paper")


PAPER = PaperOrder()

ORDERS = {"paper": PAPER, "lex": Lex(), "grevlex": Grevlex(), "deglex": DegLex()}


def order_from_name(name):
    try:
        return ORDERS[name]
    except KeyError:
        raise ValueError("unknown order %r (choose from %s)" % (name, ", ".join(ORDERS)))


# -- text format ----------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<z>z\[\s*(?P<i>\d+)\s*,\s*(?P<j>\d+)\s*\])|(?P<v>[tsw])(?![A-Za-z_])"
    r"|(?P<num>\d+(?:/\d+)?)|(?P<op>[-+*^()]))"
)


class ParseError(ValueError):
    pass


def _tokens(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected input at %d: %r" % (pos, text[pos:pos + 10]))
        pos = m.end()
        if m.group("z"):
            out.append(("var", z(int(m.group("i")), int(m.group("j")))))
        elif m.group("v"):
            out.append(("var", Variable(m.group("v"))))
        elif m.group("num"):
            out.append(("num", QQ(m.group("num"))))
        else:
            out.append(("op", m.group("op")))
    return out


def parse_polynomial(text, ring):
    """Parse sums of terms ``[sign][rational*]factor(*factor)*``.

    Factors are z[i,j], t, s, w or integers, each with an optional ^k.
    Parentheses are accepted as a convenience.
    """
    toks = _tokens(text)
    if not toks:
        raise ParseError("empty polynomial")
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take():
        nonlocal pos
        pos += 1
        return toks[pos - 1]

    def expr():
        total = ring.zero()
        sign = 1
        first = True
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                sign = -sign if val == "-" else sign
                first = False
                continue
            if not first and kind is None:
                raise ParseError("dangling sign")
            total = total + term() * sign
            kind, val = peek()
            if kind == "op" and val in "+-":
                sign = 1
                first = False
                continue
            return total

    def term():
        p = factor()
        while peek() == ("op", "*"):
            take()
            p = p * factor()
        return p

    def factor():
        kind, val = take() if pos < len(toks) else (None, None)
        if kind == "var":
            if val not in ring.index:
                raise ParseError("%s is not a variable of %r" % (val, ring))
            base = ring.var(val)
        elif kind == "num":
            base = ring.const(val)
        elif (kind, val) == ("op", "("):
            base = expr()
            if take() != ("op", ")"):
                raise ParseError("missing )")
        else:
            raise ParseError("expected a factor, got %r" % (val,))
        if peek() == ("op", "^"):
            take()
            k, e = take() if pos < len(toks) else (None, None)
            if k != "num" or e.denominator != 1:
                raise ParseError("exponent must be a non-negative integer")
            base = base ** int(e)
        return base

    out = expr()
    if pos != len(toks):
        raise ParseError("trailing input: %r" % (toks[pos][1],))
    return out


def _format_mono(ring, m):
    parts = []
    for k, e in enumerate(ring.unpack(m)):
        if e:
            v = str(ring.variables[k])
            parts.append(v if e == 1 else "%s^%d" % (v, e))
    return "*".join(parts)


def format_polynomial(p, order=None):
    """Inverse of ``parse_polynomial``; terms in decreasing order."""
    if not p.terms:
        return "0"
    out = []
    for c, mono in p.sorted_terms(order):
        body = _format_mono(p.ring, mono.packed)
        neg = c < 0
        a = -c if neg else c
        if not body:
            txt = str(a)
        elif a == 1:
            txt = body
        else:
            txt = "%s*%s" % (a, body)
        if out:
            out.append(("-" if neg else "+") + txt)
        else:
            out.append(("-" if neg else "") + txt)
    return "".join(out)
