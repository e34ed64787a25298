"""Integer polynomials in x_1..x_n, used for multidegrees and Schubert polynomials."""


class XPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e) + (0,) * (nvars - len(e))
            if c:
                self.terms[e] = self.terms.get(e, 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def monomial(cls, nvars, exps, coeff=1):
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def var(cls, nvars, i):
        """x_i, 1-based."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    def widen(self, nvars):
        if nvars < self.nvars:
            if any(any(e[nvars:]) for e in self.terms):
                raise ValueError("cannot drop used variables")
            return XPoly(nvars, {e[:nvars]: c for e, c in self.terms.items()})
        return XPoly(nvars, self.terms)

    def _align(self, other):
        if isinstance(other, int):
            return self, XPoly(self.nvars, {(0,) * self.nvars: other} if other else {})
        n = max(self.nvars, other.nvars)
        return self.widen(n), other.widen(n)

    def __add__(self, other):
        a, b = self._align(other)
        out = dict(a.terms)
        for e, c in b.terms.items():
            out[e] = out.get(e, 0) + c
        return XPoly(a.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return XPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if not isinstance(other, int) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return XPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        a, b = self._align(other)
        out = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return XPoly(a.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self == XPoly(self.nvars, {(0,) * self.nvars: other} if other else {})
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        trimmed = {e: c for e, c in self.terms.items()}
        return hash(frozenset((tuple(_strip(e)), c) for e, c in trimmed.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(e) for e in self.terms}) <= 1

    def divided_difference(self, i):
        """(f - s_i f) / (x_i - x_{i+1}), 1-based, termwise."""
        if i >= self.nvars:
            base = self.widen(i + 1)
        else:
            base = self
        out = {}
        for e, c in base.terms.items():
            a, b = e[i - 1], e[i]
            if a == b:
                continue
            sign = 1
            if a < b:
                a, b, sign = b, a, -1
            # x_i^a x_{i+1}^b -> (x_i x_{i+1})^b h_{a-b-1}(x_i, x_{i+1})
            d = a - b - 1
            for k in range(d + 1):
                ne = list(e)
                ne[i - 1] = b + k
                ne[i] = b + d - k
                ne = tuple(ne)
                out[ne] = out.get(ne, 0) + sign * c
        return XPoly(base.nvars, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(("x%d" % (k + 1)) + ("^%d" % a if a > 1 else "") for k, a in enumerate(e) if a)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%d*%s" % (abs(c), mono)
            if parts:
                parts.append(("-" if c < 0 else "+") + body)
            else:
                parts.append(("-" if c < 0 else "") + body)
        return "".join(parts)

    __repr__ = __str__


def _strip(e):
    e = list(e)
    while e and not e[-1]:
        e.pop()
    return e
