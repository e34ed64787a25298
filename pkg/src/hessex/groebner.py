"""Buchberger's algorithm, S-polynomials and multivariate division.

Everything runs on packed monomials in the encoding of the chosen order,
so the leading monomial of a dict of terms is just ``max(d)``.  Basis
elements are kept monic; the normal form is computed with a heap over
the terms still to be examined.
"""

import contextvars
import heapq
from contextlib import contextmanager
from dataclasses import dataclass, field

from .polycore import PAPER, QQ, Polynomial

DEFAULT_BUDGET = 10**6

_budget = contextvars.ContextVar("pair_budget", default=DEFAULT_BUDGET)


@contextmanager
def pair_budget(limit):
    """Cap the S-pairs any single Buchberger run may process."""
    token = _budget.set(int(limit))
    try:
        yield
    finally:
        _budget.reset(token)


def current_budget():
    return _budget.get()


class BudgetExceeded(RuntimeError):
    """Raised when Buchberger processes more S-pairs than allowed."""

    def __init__(self, processed, budget):
        super().__init__("S-pair budget exhausted (%d > %d)" % (processed, budget))
        self.processed = processed
        self.budget = budget


# -- encoded helpers -------------------------------------------------------


def _encode(p, enc):
    if enc.identity:
        return dict(p.terms)
    e = enc.encode
    return {e(m): c for m, c in p.terms.items()}


def _decode(d, enc, ring):
    if enc.identity:
        return Polynomial(ring, d)
    e = enc.decode
    return Polynomial(ring, {e(m): c for m, c in d.items()})


def _monic_entry(d):
    """Basis entry: (lm, [(mono, coeff), ...] tail, sorted descending)."""
    lm = max(d)
    lc = d[lm]
    if lc != 1:
        inv = 1 / lc
        d = {m: c * inv for m, c in d.items()}
    tail = sorted(((m, c) for m, c in d.items() if m != lm), reverse=True)
    return lm, tail


def _normal_form(f, basis, guard, full=True):
    """Remainder of f (dict) modulo monic ``basis`` entries (lm, tail).

    Divisors are tried in list order.  With ``full=False`` only the
    leading term is reduced (enough to decide zero-ness).
    """
    p = dict(f)
    heap = [-m for m in p]
    heapq.heapify(heap)
    push, pop = heapq.heappush, heapq.heappop
    r = {}
    while heap:
        m = -pop(heap)
        c = p.pop(m, None)
        if c is None:
            continue
        mg = m | guard
        for lm, tail in basis:
            if (mg - lm) & guard == guard:
                q = m - lm
                for mt, ct in tail:
                    mm = mt + q
                    old = p.get(mm)
                    if old is None:
                        p[mm] = -c * ct
                        push(heap, -mm)
                    else:
                        v = old - c * ct
                        if v:
                            p[mm] = v
                        else:
                            del p[mm]
                break
        else:
            r[m] = c
            if not full:
                r.update(p)
                return r
    return r


def _spoly_entries(a, b, lcm):
    lm1, tail1 = a
    lm2, tail2 = b
    q1, q2 = lcm - lm1, lcm - lm2
    out = {}
    for m, c in tail1:
        out[m + q1] = c
    for m, c in tail2:
        mm = m + q2
        v = out.get(mm)
        if v is None:
            out[mm] = -c
        else:
            v -= c
            if v:
                out[mm] = v
            else:
                del out[mm]
    return out


# -- public API --------------------------------------------------------------


@dataclass
class GroebnerBasis:
    """A Groebner basis together with the order it is taken for."""

    generators: tuple
    order: object
    reduced: bool = False
    stats: dict = field(default_factory=dict, compare=False)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, k):
        return self.generators[k]

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.generators]

    def is_unit(self):
        return any(g.is_constant() and g for g in self.generators)

    def reduce(self, f):
        """Normal form of f modulo this basis (unique when the basis is a GB)."""
        if not self.generators or not f:
            return f
        ring = f.ring
        enc = self.order.encoding(ring)
        entries = self.__dict__.get("_entries")
        if entries is None:
            entries = [_monic_entry(_encode(g, enc)) for g in self.generators if g]
            self.__dict__["_entries"] = entries
        return _decode(_normal_form(_encode(f, enc), entries, enc.guard), enc, ring)

    def contains(self, f):
        return not self.reduce(f)


@dataclass
class DivisionResult:
    quotients: list
    remainder: Polynomial
    standard: bool


def s_polynomial(f, g, order=PAPER):
    """(M/LT(f)) f - (M/LT(g)) g with M the lcm of the leading monomials."""
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    lcm = mf.lcm(mg)
    return f.mul_term((lcm / mf).packed, 1 / cf) - g.mul_term((lcm / mg).packed, 1 / cg)


def divide(f, divisors, order=PAPER):
    """Multivariate division with divisors tried in list order.

    Returns quotients q_i and remainder r with f = sum q_i g_i + r, no term
    of r divisible by any LM(g_i).  ``standard`` records whether
    LM(q_i g_i) <= LM(f) for every i (always true for this algorithm, but
    checked rather than assumed).
    """
    ring = f.ring
    enc = order.encoding(ring)
    guard = enc.guard
    divs = []
    for g in divisors:
        if g.ring != ring:
            raise ValueError("ring mismatch in divide")
        if not g:
            raise ZeroDivisionError("zero divisor")
        d = _encode(g, enc)
        lm = max(d)
        divs.append((lm, d[lm], sorted(d.items(), reverse=True)))
    p = _encode(f, enc)
    quot = [{} for _ in divs]
    r = {}
    while p:
        m = max(p)
        c = p[m]
        mg = m | guard
        for k, (lm, lc, terms) in enumerate(divs):
            if (mg - lm) & guard == guard:
                q = m - lm
                a = c / lc
                quot[k][q] = quot[k].get(q, 0) + a
                for mt, ct in terms:
                    mm = mt + q
                    v = p.get(mm, 0) - a * ct
                    if v:
                        p[mm] = v
                    else:
                        p.pop(mm, None)
                break
        else:
            r[m] = c
            del p[m]
    lmf = max(_encode(f, enc)) if f else None
    standard = True
    quotients = []
    for k, qd in enumerate(quot):
        qd = {m: c for m, c in qd.items() if c}
        if qd and lmf is not None and max(qd) + divs[k][0] > lmf:
            standard = False
        quotients.append(_decode(qd, enc, ring))
    return DivisionResult(quotients, _decode(r, enc, ring), standard)


def reduces_to_zero(f, G, order=PAPER):
    """True iff division of f by G (fixed list order) leaves remainder 0."""
    res = divide(f, list(G), order)
    return not res.remainder and res.standard


def _update_pairs(pairs, basis, new_index, enc, chain, live):
    """Add pairs (k, new) to the heap, applying the selected criteria."""
    lm_new = basis[new_index][0]
    cands = []
    for k in range(new_index):
        if not live[k]:
            continue
        lm_k = basis[k][0]
        cands.append((enc.lcm(lm_k, lm_new), k, enc.coprime(lm_k, lm_new)))
    if not chain:
        for lcm, k, coprime in cands:
            if not coprime:
                heapq.heappush(pairs, (lcm, k, new_index))
        return
    # Gebauer-Moeller: drop old pairs whose lcm is a strict multiple of
    # LM(new) and of the pair lcms built with the new element.
    guard = enc.guard
    lcm_with = {k: l for l, k, _ in cands}
    kept = []
    for lcm, i, j in pairs:
        if (((lcm | guard) - lm_new) & guard == guard
                and lcm_with.get(i) != lcm and lcm_with.get(j) != lcm):
            continue
        kept.append((lcm, i, j))
    pairs[:] = kept
    heapq.heapify(pairs)
    # among new pairs keep one per lcm class, drop ones divisible by another
    cands.sort()
    chosen = []
    for lcm, k, coprime in cands:
        dominated = False
        for l2, _, _ in chosen:
            if ((lcm | guard) - l2) & guard == guard:
                dominated = True
                break
        if not dominated:
            chosen.append((lcm, k, coprime))
    for lcm, k, coprime in chosen:
        if not coprime:
            heapq.heappush(pairs, (lcm, k, new_index))


def buchberger(generators, order=PAPER, budget=None, chain=False):
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Pairs are processed smallest lcm first.  Only the coprime-leading-
    monomial criterion is applied unless ``chain`` is set, which also
    enables the Gebauer-Moeller chain criterion.
    """
    if budget is None:
        budget = _budget.get()
    generators = [g for g in generators if g]
    if not generators:
        return GroebnerBasis((), order, reduced=True)
    ring = generators[0].ring
    enc = order.encoding(ring)
    guard = enc.guard
    basis = []
    live = []
    pairs = []
    processed = 0

    def insert(d):
        basis.append(_monic_entry(d))
        live.append(True)
        _update_pairs(pairs, basis, len(basis) - 1, enc, chain, live)

    for g in sorted((_encode(g, enc) for g in generators), key=max):
        r = _normal_form(g, basis, guard)
        if r:
            if 0 in r and len(r) == 1:
                return _unit_basis(ring, order)
            insert(r)
    while pairs:
        lcm, i, j = heapq.heappop(pairs)
        processed += 1
        if processed > budget:
            raise BudgetExceeded(processed, budget)
        s = _spoly_entries(basis[i], basis[j], lcm)
        r = _normal_form(s, basis, guard)
        if r:
            if 0 in r and len(r) == 1:
                return _unit_basis(ring, order, processed)
            insert(r)
    reduced = _interreduce(basis, guard)
    gens = tuple(_decode(dict([(lm, QQ(1))] + tail), enc, ring) for lm, tail in reduced)
    return GroebnerBasis(gens, order, reduced=True, stats={"pairs": processed, "size": len(basis)})


def _unit_basis(ring, order, processed=0):
    return GroebnerBasis((ring.one(),), order, reduced=True, stats={"pairs": processed})


def _interreduce(basis, guard):
    """Minimalize then fully reduce; result sorted by decreasing LM."""
    entries = sorted(basis, key=lambda e: e[0])
    minimal = []
    for lm, tail in entries:
        if any(((lm | guard) - l2) & guard == guard for l2, _ in minimal):
            continue
        minimal.append((lm, tail))
    out = []
    for k, (lm, tail) in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = _normal_form(dict(tail), others, guard)
        out.append((lm, sorted(r.items(), reverse=True)))
    out.sort(key=lambda e: e[0], reverse=True)
    return out


def is_groebner_basis(G, order=PAPER, skip_coprime=True):
    """Buchberger's criterion: every S-pair divides to remainder zero by G.

    Pairs with coprime leading monomials are skipped when ``skip_coprime``
    (they reduce to zero automatically).
    """
    G = [g for g in G if g]
    if not G:
        return True
    ring = G[0].ring
    enc = order.encoding(ring)
    lms = [max(_encode(g, enc)) for g in G]
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            if skip_coprime and enc.coprime(lms[a], lms[b]):
                continue
            if not reduces_to_zero(s_polynomial(G[a], G[b], order), G, order):
                return False
    return True


def is_reduced(G, order=PAPER):
    """Monic, and no term of any element divisible by another's LM."""
    if not G:
        return True
    ring = G[0].ring
    enc = order.encoding(ring)
    guard = enc.guard
    encoded = [_encode(g, enc) for g in G]
    lms = [max(d) for d in encoded]
    for k, d in enumerate(encoded):
        if d[lms[k]] != 1:
            return False
        for j, lm in enumerate(lms):
            if j != k and any(((m | guard) - lm) & guard == guard for m in d):
                return False
    return True
