"""Ideals and the operations built on Groebner bases.

Intersections and saturations go through an extra variable (w or s)
that ``PaperOrder`` already places first, so that order
doubles as the elimination order and no re-encoding is needed.
"""

import itertools
import json
import warnings
from functools import lru_cache

from .groebner import buchberger, divide
from .polycore import PAPER, S, T, W, Polynomial, Ring, Variable, order_from_name
from .xpoly import XPoly

CERTIFIED_RADICAL = "certified_radical"
INCONCLUSIVE = "inconclusive"


class Ideal:
    """Finitely generated ideal of a ``Ring``; Groebner bases are cached."""

    def __init__(self, ring, generators=()):
        self.ring = ring
        gens = []
        seen = set()
        for g in generators:
            g = ring.convert(g)
            if g and g not in seen:
                seen.add(g)
                gens.append(g)
        self.generators = tuple(gens)
        self._gb = {}

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    def groebner(self, order=PAPER, budget=None, chain=False):
        # reduced bases are canonical, so the cache ignores ``chain``
        gb = self._gb.get(order)
        if gb is None:
            gb = self._gb[order] = buchberger(self.generators, order, budget=budget, chain=chain)
        return gb

    def is_unit(self, order=PAPER):
        return self.groebner(order).is_unit()

    def is_zero(self):
        return not self.generators

    def contains(self, f, order=PAPER):
        if isinstance(f, Ideal):
            return all(self.contains(g, order) for g in f.generators)
        return self.groebner(order).contains(self.ring.convert(f))

    __contains__ = contains

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def to_ring(self, ring):
        return Ideal(ring, [g.to_ring(ring) for g in self.generators])

    def map(self, fn, ring=None):
        return Ideal(ring or self.ring, [fn(g) for g in self.generators])

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        shown = ", ".join(str(g) for g in self.generators[:4])
        more = ", ..." if len(self.generators) > 4 else ""
        return "Ideal(%r, <%s%s>)" % (self.ring, shown, more)

    # -- serialization ---------------------------------------------------

    def to_json(self, order=None):
        data = {
            "ring": _ring_json(self.ring),
            "generators": [str(g) for g in self.generators],
        }
        if order is not None:
            gb = self.groebner(order)
            data["groebner"] = {"order": str(order), "basis": [str(g) for g in gb]}
        return data

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        r = data["ring"]
        ring = Ring(int(r["n"]), t=bool(r.get("has_t", False)), s=bool(r.get("has_s", False)),
                    aux=bool(r.get("has_aux", False)))
        ideal = cls(ring, [ring.parse(g) for g in data.get("generators", [])])
        gbd = data.get("groebner")
        if gbd and gbd.get("basis") is not None:
            from .groebner import GroebnerBasis

            order = order_from_name(gbd.get("order", "paper"))
            ideal._gb[order] = GroebnerBasis(tuple(ring.parse(g) for g in gbd["basis"]), order)
        return ideal


def _ring_json(ring):
    out = {"n": ring.n, "has_t": ring.has_t}
    if ring.has_s:
        out["has_s"] = True
    if ring.has_aux:
        out["has_aux"] = True
    return out


def _same_ring(*ideals):
    ring = ideals[0].ring
    for I in ideals[1:]:
        if I.ring != ring:
            raise ValueError("ring mismatch: %r vs %r" % (ring, I.ring))
    return ring


def ideal_sum(*ideals):
    ring = _same_ring(*ideals)
    return Ideal(ring, [g for I in ideals for g in I.generators])


def ideal_product(I, J):
    ring = _same_ring(I, J)
    return Ideal(ring, [f * g for f in I.generators for g in J.generators])


def eliminate(I, drop, order=PAPER, budget=None):
    """I intersected with the subring avoiding ``drop``.

    The drop set must form a leading block of the order (true for w, s, t
    under ``PaperOrder``).  When the drop set holds only special
    variables the result lives in the smaller ring.
    """
    drop = set(drop)
    ring = I.ring
    enc = order.encoding(ring)
    lead = {ring.variables[k] for k in enc.seq[: len(drop)]}
    if enc.nrows or lead != {v for v in drop if v in ring.index}:
        from .polycore import Elimination

        order = Elimination(tuple(v for v in ring.variables if v in drop), order)
    # auxiliary-variable bases grow many redundant pairs; prune them
    gb = I.groebner(order, budget, chain=True)
    keep = [g for g in gb if not (g.variables() & drop)]
    target = ring.extend(
        t=ring.has_t and T not in drop,
        s=ring.has_s and S not in drop,
        aux=ring.has_aux and W not in drop,
    )
    return Ideal(target, [g.to_ring(target) for g in keep])


def saturate(I, f, budget=None, order=PAPER):
    """(I : f^infinity) via I + <s f - 1> and eliminating s."""
    ring = I.ring
    f = ring.convert(f)
    if not f:
        raise ValueError("cannot saturate by zero")
    if ring.has_s:
        raise ValueError("saturation needs a ring without s")
    big = ring.extend(s=True)
    s = big.s
    J = Ideal(big, [g.to_ring(big) for g in I.generators] + [s * f.to_ring(big) - 1])
    return eliminate(J, {S}, order, budget).to_ring(ring)


def ideal_intersection(I, J, budget=None, order=PAPER):
    """w I + (1 - w) J with w eliminated."""
    ring = _same_ring(I, J)
    if ring.has_aux:
        raise ValueError("intersection needs a ring without w")
    big = ring.extend(aux=True)
    w = big.w
    gens = [w * g.to_ring(big) for g in I.generators]
    gens += [(1 - w) * g.to_ring(big) for g in J.generators]
    return eliminate(Ideal(big, gens), {W}, order, budget).to_ring(ring)


def ideal_intersection_many(ideals, budget=None, order=PAPER):
    ideals = list(ideals)
    out = ideals[0]
    for J in ideals[1:]:
        out = ideal_intersection(out, J, budget, order)
    return out


def ideal_quotient(I, f, budget=None, order=PAPER):
    """(I : f) = (I intersected with <f>) / f."""
    f = I.ring.convert(f)
    if not f:
        raise ValueError("quotient by zero")
    K = ideal_intersection(I, Ideal(I.ring, [f]), budget, order)
    gens = []
    for g in K.generators:
        res = divide(g, [f], PAPER)
        if res.remainder:
            raise ArithmeticError("generator of I cap <f> not divisible by f")
        gens.append(res.quotients[0])
    return Ideal(I.ring, gens)


def ideals_equal(I, J, order=PAPER):
    """Same reduced Groebner basis under a shared order."""
    if I.ring != J.ring:
        return False
    a, b = I.groebner(order), J.groebner(order)
    return [g.terms for g in a] == [g.terms for g in b]


def ideal_contains(I, J, order=PAPER):
    """J subset of I."""
    return I.contains(J, order)


def ideal_member(f, I, order=PAPER):
    return I.contains(f, order)


def radical_certificate(I, order=PAPER):
    """'certified_radical' when every leading monomial is square-free."""
    gb = I.groebner(order)
    if all(m.is_squarefree() for m in gb.leading_monomials()):
        return CERTIFIED_RADICAL
    return INCONCLUSIVE


def initial_ideal_supports(I, order=PAPER):
    return [m.support() for m in I.groebner(order).leading_monomials()]


def min_hitting_set(sets, universe_size=None):
    """Size of a smallest set meeting every member of ``sets`` (branch and bound)."""
    sets = [frozenset(s) for s in sets]
    if any(not s for s in sets):
        return None
    # keep only inclusion-minimal sets
    sets = sorted(set(sets), key=len)
    minimal = []
    for s in sets:
        if not any(m <= s for m in minimal):
            minimal.append(s)
    best = [len({x for s in minimal for x in s})]

    def lower_bound(rest):
        # greedy packing of disjoint sets
        used = set()
        count = 0
        for s in rest:
            if not (s & used):
                used |= s
                count += 1
        return count

    def search(rest, chosen):
        if not rest:
            best[0] = min(best[0], chosen)
            return
        if chosen + lower_bound(rest) >= best[0]:
            return
        pivot = min(rest, key=len)
        for x in sorted(pivot):
            search([s for s in rest if x not in s], chosen + 1)

    search(minimal, 0)
    return best[0]


def krull_dimension(I, order=PAPER):
    """dim R/I from the initial ideal: #vars minus a minimum hitting set.

    The unit ideal has no points; -1 is returned with a warning.
    """
    gb = I.groebner(order)
    if gb.is_unit():
        warnings.warn("krull_dimension of the unit ideal: returning -1")
        return -1
    supports = initial_ideal_supports(I, order)
    if not supports:
        return I.ring.nvars
    return I.ring.nvars - min_hitting_set(supports)


# -- multidegree -------------------------------------------------------------


def column_grading(ring):
    """deg z[i,j] = e_j; t, s, w have degree zero."""
    n = ring.n
    out = {}
    for v in ring.variables:
        if v.kind == "z":
            out[v] = tuple(1 if c == v.col else 0 for c in range(1, n + 1))
        else:
            out[v] = (0,) * n
    return out


def k_polynomial_monomial(monos, ring, grading=None, pivot_threshold=20):
    """K-polynomial of the monomial ideal generated by packed ``monos``.

    Returned as a dict {degree vector: integer coefficient} in the
    variables T_j = exp(e_j).  Up to ``pivot_threshold`` generators the
    Taylor sum is collapsed by exact lcm; above it a pivot recursion is
    used.
    """
    grading = grading or column_grading(ring)
    guard = ring.guard
    weights = [grading[v] for v in ring.variables]
    width = len(weights[0])
    monos = _minimalize(monos, guard)

    def deg(m):
        d = [0] * width
        for k, e in enumerate(ring.unpack(m)):
            if e:
                w = weights[k]
                for c in range(width):
                    d[c] += e * w[c]
        return tuple(d)

    if len(monos) <= pivot_threshold:
        from .polycore import packed_lcm

        acc = {0: 1}
        for m in monos:
            for a, c in list(acc.items()):
                l = packed_lcm(a, m, guard)
                v = acc.get(l, 0) - c
                if v:
                    acc[l] = v
                else:
                    acc.pop(l, None)
        out = {}
        for m, c in acc.items():
            d = deg(m)
            out[d] = out.get(d, 0) + c
        return {d: c for d, c in out.items() if c}
    return _k_pivot(tuple(monos), ring, deg)


def _minimalize(monos, guard):
    monos = sorted(set(monos))
    out = []
    for m in monos:
        if not any(((m | guard) - a) & guard == guard for a in out):
            out.append(m)
    return out


def _k_pivot(monos, ring, deg):
    guard = ring.guard
    width = len(deg(0))
    memo = {}

    def add_into(acc, part, shift=None):
        for d, c in part.items():
            if shift:
                d = tuple(a + b for a, b in zip(d, shift))
            v = acc.get(d, 0) + c
            if v:
                acc[d] = v
            else:
                acc.pop(d, None)

    def rec(gens):
        gens = tuple(_minimalize(gens, guard))
        hit = memo.get(gens)
        if hit is not None:
            return hit
        zero = (0,) * width
        if not gens:
            res = {zero: 1}
        elif len(gens) == 1:
            res = {zero: 1}
            add_into(res, {deg(gens[0]): -1})
        else:
            # pivot on the variable that occurs in the most generators
            counts = [0] * ring.nvars
            for m in gens:
                for k, e in enumerate(ring.unpack(m)):
                    if e:
                        counts[k] += 1
            k = max(range(ring.nvars), key=lambda i: counts[i])
            if counts[k] <= 1:
                # pairwise coprime generators: product of (1 - T^deg)
                res = {zero: 1}
                for m in gens:
                    d = deg(m)
                    nxt = dict(res)
                    add_into(nxt, {tuple(a + b for a, b in zip(x, d)): -c for x, c in res.items()})
                    res = nxt
            else:
                x = 1 << ring.shift[k]
                plus = [m for m in gens if not ((m | guard) - x) & guard == guard] + [x]
                colon = []
                for m in gens:
                    if ((m | guard) - x) & guard == guard:
                        colon.append(m - x)
                    else:
                        colon.append(m)
                # K(I) = K(I + <x>) + T^deg(x) K(I : x)
                res = {}
                add_into(res, rec(plus))
                add_into(res, rec(colon), deg(x))
        memo[gens] = res
        return res

    return rec(monos)


@lru_cache(maxsize=None)
def _binomial_row(a):
    from math import comb

    return [(-1) ** k * comb(a, k) for k in range(a + 1)]


def multidegree_from_k(kpoly, width, codim):
    """Lowest-degree part of K(1 - x); terms above ``codim`` are dropped."""
    out = {}
    for d, c in kpoly.items():
        # expand prod_j (1 - x_j)^{d_j}, truncated at total degree codim
        partial = {(): c}
        for a in d:
            row = _binomial_row(a)
            nxt = {}
            for exps, v in partial.items():
                used = sum(exps)
                for k in range(min(a, codim - used) + 1):
                    key = exps + (k,)
                    nxt[key] = nxt.get(key, 0) + v * row[k]
            partial = nxt
        for exps, v in partial.items():
            if v:
                out[exps] = out.get(exps, 0) + v
    out = {e: c for e, c in out.items() if c}
    if not out:
        return XPoly(width, {})
    low = min(sum(e) for e in out)
    return XPoly(width, {e: c for e, c in out.items() if sum(e) == low})


def multidegree(I, order=PAPER, grading=None):
    """Multidegree of R/I under the column grading (deg t = 0).

    Computed from the K-polynomial of the initial ideal, which has the
    same Hilbert series.
    """
    ring = I.ring
    grading = grading or column_grading(ring)
    for g in I.generators:
        if not g.is_homogeneous(grading):
            raise ValueError("ideal is not homogeneous for the grading: %s" % g)
    gb = I.groebner(order)
    if gb.is_unit():
        return XPoly(ring.n, {})
    monos = [m.packed for m in gb.leading_monomials()]
    width = len(next(iter(grading.values())))
    k = k_polynomial_monomial(monos, ring, grading)
    codim = ring.nvars - krull_dimension(I, order)
    return multidegree_from_k(k, width, codim)


def all_subsets(items, size):
    return itertools.combinations(items, size)
