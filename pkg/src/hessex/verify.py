"""Named verification jobs producing JSON-ready reports.

Each job records a list of sub-claims.  A claim carries ``ok`` (True,
False, or None for purely informational entries) and a short evidence
string; failed claims always name a concrete witness polynomial or pair
of unequal bases.
"""

import time
from dataclasses import dataclass, field

from .groebner import BudgetExceeded, is_groebner_basis, pair_budget, reduces_to_zero, s_polynomial
from .hessenberg import (
    HessenbergFunction,
    JordanData,
    H_lower,
    H_upper,
    e_matrix,
    ev,
    f_poly,
    g_poly,
    h_poly,
    hessenberg_ideal,
    ja_ideal,
    jt_ideal,
    k_ideal,
    minimal_sheet_closed_form,
    minimal_sheet_line,
    p_B,
    psi,
    pt_ideal,
    sheet_line,
)
from .idealops import (
    CERTIFIED_RADICAL,
    Ideal,
    ideal_intersection_many,
    ideal_quotient,
    ideal_sum,
    ideals_equal,
    krull_dimension,
    multidegree,
    radical_certificate,
    saturate,
)
from .minors import minor
from .polycore import PAPER, Ring, order_from_name
from .xpoly import XPoly
from .schubert import Permutation, bruhat_leq, class_formula, schubert_determinantal_ideal, schubert_polynomial, w0_act, w_of

DEFAULT_SAMPLES = (0, 1, -1, 2)

EXIT_PASS, EXIT_FAIL, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


@dataclass
class VerificationReport:
    job: str
    params: dict
    verdict: str = "pass"
    witnesses: list = field(default_factory=list)
    millis: int = 0

    def add(self, claim, ok, evidence=""):
        self.witnesses.append({"claim": claim, "ok": ok, "evidence": str(evidence)})
        return ok

    @property
    def passed(self):
        return self.verdict == "pass"

    def failures(self):
        return [w for w in self.witnesses if w["ok"] is False]

    def exit_code(self):
        return {"pass": EXIT_PASS, "evidence": EXIT_PASS, "budget_exceeded": EXIT_BUDGET}.get(self.verdict, EXIT_FAIL)

    def to_json(self):
        return {
            "job": self.job,
            "params": self.params,
            "verdict": self.verdict,
            "witnesses": self.witnesses,
            "millis": self.millis,
        }


JOBS = {}


def job(name):
    def register(fn):
        JOBS[name] = fn
        fn.job_name = name
        return fn

    return register


def run_job(name, budget=None, **params):
    """Run a registered job; budget exhaustion becomes a verdict, not an exception."""
    name = name.replace("_", "-")
    if name.startswith("verify-"):
        name = name[len("verify-"):]
    if name not in JOBS:
        raise ValueError("unknown job %r (known: %s)" % (name, ", ".join(sorted(JOBS))))
    report = VerificationReport(name, _params_json(params))
    start = time.perf_counter()
    try:
        if budget is not None:
            with pair_budget(budget):
                JOBS[name](report, **params)
        else:
            JOBS[name](report, **params)
    except BudgetExceeded as exc:
        report.add("groebner computation within budget", False, str(exc))
        report.verdict = "budget_exceeded"
    else:
        if report.verdict == "pass" and report.failures():
            report.verdict = "fail"
    report.millis = int((time.perf_counter() - start) * 1000)
    return report


def _params_json(params):
    out = {}
    for k, v in params.items():
        if v is None:
            continue
        if isinstance(v, HessenbergFunction):
            v = ",".join(map(str, v.values))
        elif isinstance(v, JordanData):
            v = v.to_json()
        elif isinstance(v, (list, tuple)):
            v = [str(x) for x in v]
        elif not isinstance(v, (int, str, bool)):
            v = str(v)
        out[k] = v
    return out


# -- helpers ------------------------------------------------------------------------


def _difference_witness(I, J, order):
    """A generator of one reduced basis missing from the other ideal."""
    for g in J.groebner(order):
        if not I.contains(g, order):
            return "in second, not first: %s" % g
    for g in I.groebner(order):
        if not J.contains(g, order):
            return "in first, not second: %s" % g
    return "bases agree"


def _check_equal(report, claim, I, J, order):
    if ideals_equal(I, J, order):
        return report.add(claim, True, "reduced bases agree (%d elements)" % len(I.groebner(order)))
    return report.add(claim, False, _difference_witness(I, J, order))


def _determinant(ring):
    n = ring.n
    Z = [[ring.z(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return minor(Z, range(n), range(n))


def _torsion_free(report, label, I, a, order):
    t = I.ring.t
    Q = ideal_quotient(I, t - a, order=order)
    return _check_equal(report, "%s is (t-(%s))-torsion-free" % (label, a), I, Q, order)


def _b0(h):
    n = h.n
    i0 = min(h.decomposable_set())
    return i0, [b for b in range(2, i0 + 1)] + [n]


def _decomposable_witness(report, I, h, label):
    i0, B0 = _b0(h)
    p = p_B(I.ring, B0)
    tag = "p_B0 with i0=%d, B0=%s" % (i0, B0)
    report.add("%s: %s not in ideal" % (label, tag), not I.contains(p), p)
    report.add("%s: %s squared in ideal" % (label, tag), I.contains(p * p), p * p)


# golden associated primes (prime, permutation w with prime = w0 . I_w)
def _golden(h):
    n = h.n
    if n != 4:
        return None
    if h.values == (1, 2, 3, 4):
        return [
            ("J3^0", ja_ideal(4, 3, 0), "[2341]"),
            ("J2^0+K2", ideal_sum(ja_ideal(4, 2, 0), k_ideal(4, 2)), "[2413]"),
            ("K1", k_ideal(4, 1), "[4123]"),
        ]
    if h.values == (2, 2, 4, 4):
        return [
            ("J2^0", ja_ideal(4, 2, 0), "[2314]"),
            ("J2^0+K2", ideal_sum(ja_ideal(4, 2, 0), k_ideal(4, 2)), "[2413]"),
            ("K2", k_ideal(4, 2), "[1423]"),
        ]
    return None


def _n_of(n, h):
    if h is None:
        raise ValueError("this job needs --h")
    if n is not None and n != h.n:
        raise ValueError("--n %d does not match h of length %d" % (n, h.n))
    return h.n


# -- jobs -------------------------------------------------------------------------------


@job("assprimes")
def verify_assprimes(report, n=None, h=None, order=PAPER, **_):
    n = _n_of(n, h)
    sl = minimal_sheet_line(n)
    I = hessenberg_ideal(sl.matrix(), h)
    _check_equal(report, "rank conditions equal the closed form sum J^t_{i*} K_h(i)", I,
                 minimal_sheet_closed_form(h), order)
    corners = h.corners()
    primes = [pt_ideal(h, i) for i in corners]
    X = ideal_intersection_many(primes, order=order)
    _check_equal(report, "I_{s_t,h} equals the intersection of P^t_{i,h}, i in %s" % corners, I, X, order)
    for a, (i, P) in enumerate(zip(corners, primes)):
        for b, (j, Q) in enumerate(zip(corners, primes)):
            if a == b:
                continue
            missing = next((g for g in P.groebner(order) if not Q.contains(g, order)), None)
            if missing is None:
                report.add("P_%d not contained in P_%d" % (i, j), False, "P_%d is contained in P_%d" % (i, j))
            else:
                report.add("P_%d not contained in P_%d" % (i, j), True, missing)
    d = _determinant(I.ring)
    for i, P in zip(corners, primes):
        S_ = saturate(P, P.ring.t, order=order)
        _check_equal(report, "P_%d is t-saturated" % i, P, S_, order)
        nf = P.groebner(order).reduce(d)
        report.add("det Z not in P_%d" % i, bool(nf), "normal form has %d terms" % len(nf) if nf else "d reduces to 0")


@job("flatness")
def verify_flatness(report, n=None, h=None, samples=DEFAULT_SAMPLES, order=PAPER, **_):
    n = _n_of(n, h)
    samples = list(samples)
    if not samples:
        raise ValueError("samples must be nonempty")
    I = hessenberg_ideal(minimal_sheet_line(n).matrix(), h)
    for a in samples:
        _torsion_free(report, "I_{s_t,h}", I, a, order)
    dim_family = krull_dimension(I, order)
    report.add("family dimension", None, dim_family)
    degrees = {}
    for a in samples:
        F = ev(a, I)
        d = krull_dimension(F, order)
        report.add("fiber at t=%s has dimension family-1" % a, d == dim_family - 1, "dim %d" % d)
        degrees[a] = multidegree(F, order)
    base = degrees[samples[0]]
    for a in samples[1:]:
        report.add("fiber multidegree at t=%s equals t=%s" % (a, samples[0]), degrees[a] == base,
                   "%s vs %s" % (degrees[a], base))
    report.add("family multidegree", None, multidegree(I, order))
    if not h.is_indecomposable():
        I0 = ev(0, I)
        report.add("special fiber radical certificate", None, radical_certificate(I0, order))
        i0, B0 = _b0(h)
        p = p_B(I0.ring, B0)
        reduced = I0.contains(p) or not I0.contains(p * p)
        report.add("special fiber non-reduced (p_B0 nilpotent)", None, "B0=%s, nilpotent=%s" % (B0, not reduced))


def _table_rows(ring, i):
    """(label, f, g, stated M, stated S) for the S-polynomial table of H_i."""
    n = ring.n
    z, s, t = ring.z, ring.s, ring.t
    st1 = s * t - 1
    rows = []
    for k in range(1, i + 1):
        for l in range(k + 1, i + 1):
            rows.append(("g_%d,g_%d" % (k, l), g_poly(ring, k), g_poly(ring, l), t * z(1, k) * z(1, l), h_poly(ring, k, l)))
    for a in range(1, i + 1):
        for k in range(a + 1, i + 1):
            rows.append(("g_%d,h_%d%d" % (k, a, k), g_poly(ring, k), h_poly(ring, a, k), t * z(1, k) * z(n, a),
                         z(n, k) * g_poly(ring, a)))
    for k in range(1, i + 1):
        for b in range(k + 1, i + 1):
            for l in range(b + 1, i + 1):
                rows.append(("h_%d%d,h_%d%d" % (k, l, k, b), h_poly(ring, k, l), h_poly(ring, k, b),
                             z(1, l) * z(1, b) * z(n, k), z(1, k) * h_poly(ring, b, l)))
    for k in range(1, i + 1):
        for a in range(k + 1, i + 1):
            for l in range(a + 1, i + 1):
                rows.append(("h_%d%d,h_%d%d" % (k, l, a, l), h_poly(ring, k, l), h_poly(ring, a, l),
                             z(1, l) * z(n, k) * z(n, a), z(n, l) * h_poly(ring, k, a)))
    for k in range(1, i + 1):
        rows.append(("g_%d,st-1" % k, g_poly(ring, k), st1, s * t * z(1, k), f_poly(ring, k)))
    for k in range(1, i + 1):
        for l in range(k + 1, i + 1):
            rows.append(("h_%d%d,f_%d" % (k, l, k), h_poly(ring, k, l), f_poly(ring, k), s * z(1, l) * z(n, k),
                         -z(1, k) * f_poly(ring, l)))
    for k in range(1, i + 1):
        for l in range(k + 1, i + 1):
            # lcm of s z_nk and s z_nl (the printed s z_1l z_nk is a typo)
            rows.append(("f_%d,f_%d" % (k, l), f_poly(ring, k), f_poly(ring, l), s * z(n, k) * z(n, l),
                         -h_poly(ring, k, l)))
    for k in range(1, i + 1):
        rows.append(("f_%d,st-1" % k, f_poly(ring, k), st1, s * t * z(n, k), g_poly(ring, k)))
    return rows


def _h_sets(ring, i, j):
    st1 = ring.s * ring.t - 1
    Hi = H_lower(ring, i) + [f_poly(ring, k) for k in range(1, i + 1)] + [st1]
    Hj = H_upper(ring, j) + [st1]
    return Hi, Hj


def _gb_claim(report, label, G, order):
    if is_groebner_basis(G, order):
        return report.add("%s is a Groebner basis" % label, True, "%d elements" % len(G))
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            sp = s_polynomial(G[a], G[b], order)
            if not reduces_to_zero(sp, G, order):
                from .groebner import divide

                r = divide(sp, G, order).remainder
                return report.add("%s is a Groebner basis" % label, False,
                                  "S(%s, %s) has remainder %s" % (G[a], G[b], r))
    return report.add("%s is a Groebner basis" % label, False, "criterion failed")


def _saturation_claim(report, n, i, j, order):
    R = Ring(n, t=True)
    I = ideal_sum(jt_ideal(n, i, R), k_ideal(n, j, R))
    S_ = saturate(I, R.t, order=order)
    if ideals_equal(S_, I, order):
        return report.add("J^t_%d + K_%d is t-saturated" % (i, j), True, "saturation equals the ideal")
    witness = next(g for g in S_.groebner(order) if not I.contains(g, order))
    return report.add("J^t_%d + K_%d is t-saturated" % (i, j), False, "in saturation, not in ideal: %s" % witness)


@job("grobner-tables")
def verify_grobner_tables(report, n=None, i=None, j=None, order=PAPER, **_):
    if n is None:
        raise ValueError("grobner-tables needs --n")
    ring = Ring(n, t=True, s=True)
    if i is None and j is None:
        for ii in range(1, n + 1):
            _gb_claim(report, "H_%d" % ii, _h_sets(ring, ii, 1)[0], order)
        for jj in range(1, n):
            _gb_claim(report, "H^%d" % jj, _h_sets(ring, 1, jj)[1], order)
        for ii in range(1, n):
            for jj in range(ii + 1, n):
                Hi, Hj = _h_sets(ring, ii, jj)
                _gb_claim(report, "H_%d u H^%d" % (ii, jj), Hi + Hj[:-1], order)
        _replay_table(report, ring, n, order)
        for ii in range(0, n + 1):
            for jj in range(ii + 1, n + 1):
                _saturation_claim(report, n, ii, jj, order)
        return
    if i is None or j is None:
        raise ValueError("give both --i and --j, or neither")
    if not (0 <= i <= n and 0 <= j <= n):
        raise ValueError("indices must lie in [0, n]")
    Hi, Hj = _h_sets(ring, i, j)
    if i >= 1:
        _gb_claim(report, "H_%d" % i, Hi, order)
        _replay_table(report, ring, i, order)
    if 1 <= j <= n - 1:
        _gb_claim(report, "H^%d" % j, Hj, order)
    if 1 <= i < j <= n - 1:
        _gb_claim(report, "H_%d u H^%d" % (i, j), Hi + Hj[:-1], order)
    _saturation_claim(report, n, i, j, order)


def _replay_table(report, ring, i, order):
    bad = []
    count = 0
    for label, f, g, M, S_ in _table_rows(ring, i):
        count += 1
        lm = f.leading_monomial(order).lcm(g.leading_monomial(order))
        if lm.as_polynomial() != M:
            bad.append("%s: M=%s, table %s" % (label, lm, M))
        sp = s_polynomial(f, g, order)
        if sp != S_:
            bad.append("%s: S=%s, table %s" % (label, sp, S_))
    report.add("S-polynomial table rows for H_%d match closed forms" % i, not bad,
               "; ".join(bad) if bad else "%d rows" % count)


@job("nilpotent-fiber")
def verify_nilpotent_fiber(report, n=None, h=None, order=PAPER, **_):
    n = _n_of(n, h)
    I = hessenberg_ideal(e_matrix(n, 1, n), h)
    if h.is_indecomposable():
        comps = []
        for i in h.corners():
            C = ideal_sum(ja_ideal(n, i - 1, 0), k_ideal(n, h(i)))
            comps.append(C)
            if h(i) > i:
                w = w_of(n, i, h(i))
                _check_equal(report, "J^0_%d + K_%d equals w0 . I_w[%d,%d] = w0 . I_%s" % (i - 1, h(i), i, h(i), w),
                             C, w0_act(schubert_determinantal_ideal(w)), order)
        _check_equal(report, "I_{n,h} equals the intersection of J^0_{i-1}+K_h(i)", I,
                     ideal_intersection_many(comps, order=order), order)
        cert = radical_certificate(I, order)
        report.add("square-free initial ideal certificate", cert == CERTIFIED_RADICAL, cert)
    else:
        _decomposable_witness(report, I, h, "I_{n,h} not radical")
    golden = _golden(h)
    if golden:
        w0 = Permutation.longest(n)
        comps = []
        for label, P, w in golden:
            w = Permutation.parse(w)
            report.add("I_{n,h} contained in %s" % label, P.contains(I, order), label)
            _check_equal(report, "%s equals w0 . I_%s" % (label, w), P, w0_act(schubert_determinantal_ideal(w)), order)
            comps.append(w0 * w)
        report.add("component permutations", None, ", ".join(map(str, comps)))
        if h.values == (1, 2, 3, 4):
            for a in range(3):
                for b in range(a + 1, 3):
                    inc = not bruhat_leq(comps[a], comps[b]) and not bruhat_leq(comps[b], comps[a])
                    report.add("%s and %s Bruhat-incomparable" % (comps[a], comps[b]), inc, "tableau criterion")
            total = XPoly(n - 1, {})
            for _, _, w in golden:
                total = total + schubert_polynomial(Permutation.parse(w))
            md = multidegree(I, order)
            report.add("multidegree is twice the sum over the listed primes", md == total * 2, md)
        if h.values == (2, 2, 4, 4):
            pairs = [("[3142]", "[3241]"), ("[3142]", "[4132]")]
            for a, b in pairs:
                report.add("%s <= %s in Bruhat order" % (a, b), bruhat_leq(Permutation.parse(a), Permutation.parse(b)),
                           "tableau criterion")
            for a, b in [("[3214]", "[4132]"), ("[3241]", "[4132]")]:
                pa, pb = Permutation.parse(a), Permutation.parse(b)
                report.add("%s and %s Bruhat-incomparable" % (a, b),
                           not bruhat_leq(pa, pb) and not bruhat_leq(pb, pa), "tableau criterion")


def dimension_formula(h):
    n = h.n
    return n * (n + 1) // 2 + (n - 1) * (n - 2) // 2 + max(h(i) - i for i in h.corners())


@job("dim-and-class")
def verify_dim_and_class(report, n=None, h=None, order=PAPER, **_):
    n = _n_of(n, h)
    expected = dimension_formula(h)
    fibers = [("I_{s,h}", hessenberg_ideal(minimal_sheet_line(n).at(1), h)),
              ("I_{E1n,h}", hessenberg_ideal(e_matrix(n, 1, n), h))]
    dims = []
    for label, F in fibers:
        d = krull_dimension(F, order)
        dims.append(d)
        report.add("dim %s equals %d" % (label, expected), d == expected, "computed %d" % d)
    if n >= 3:
        cls = class_formula(h)
        for label, F in fibers:
            md = multidegree(F, order)
            report.add("multidegree %s equals class formula" % label, md == cls, "%s vs %s" % (md, cls))
    family = krull_dimension(hessenberg_ideal(minimal_sheet_line(n).matrix(), h), order)
    bound = 1 + sum(h.values)
    report.add("family dimension %d >= 1 + sum h(i) = %d" % (family, bound), family >= bound,
               "equality" if family == bound else "strict")
    report.add("family dimension is fiber dimension + 1", family == dims[0] + 1, family)


@job("component-degeneration")
def verify_component_degeneration(report, n=None, h=None, samples=DEFAULT_SAMPLES, order=PAPER, **_):
    n = _n_of(n, h)
    if not h.is_indecomposable():
        raise ValueError("component-degeneration needs an indecomposable h")
    for i in h.corners():
        P = pt_ideal(h, i)
        for a in samples:
            _torsion_free(report, "P^t_%d" % i, P, a, order)
        expected0 = ideal_sum(ja_ideal(n, i - 1, 0), k_ideal(n, h(i)))
        _check_equal(report, "ev_0(P^t_%d) = J^0_%d + K_%d" % (i, i - 1, h(i)), ev(0, P), expected0, order)
        richardson = ideal_sum(w0_act(ja_ideal(n, i - 1, 0)), k_ideal(n, h(i)))
        _check_equal(report, "psi_1(ev_1(P^t_%d)) = w0.J^0_%d + K_%d" % (i, i - 1, h(i)), psi(1, ev(1, P)),
                     richardson, order)


@job("explore-conjecture")
def explore_conjecture(report, n=None, h=None, jordan=None, samples=DEFAULT_SAMPLES, order=PAPER, **_):
    """Torsion checks on a non-minimal sheet line; evidence only."""
    if jordan is None:
        if n is None:
            raise ValueError("explore-conjecture needs --n or --jordan")
        jordan = JordanData.regular_semisimple(range(1, n + 1))
    n = jordan.n
    hs = [h] if h is not None else HessenbergFunction.all(n)
    line = sheet_line(jordan)
    x_t = line.matrix()
    for hh in hs:
        if hh.n != n:
            raise ValueError("h does not match the Jordan data size")
        I = hessenberg_ideal(x_t, hh)
        for a in samples:
            Q = ideal_quotient(I, I.ring.t - a, order=order)
            same = ideals_equal(I, Q, order)
            report.add("h=%s: I_{x_t,h} is (t-(%s))-torsion-free" % (hh, a), None,
                       "yes" if same else "no: %s" % _difference_witness(I, Q, order))
    report.verdict = "evidence"


# -- suite ----------------------------------------------------------------------------------

SMOKE_N5 = ("2,5,5,5,5", "1,2,3,4,5", "5,5,5,5,5", "2,3,4,5,5")


def suite_tasks(n):
    if n == 5:
        hs = [HessenbergFunction.parse(s) for s in SMOKE_N5]
    else:
        hs = HessenbergFunction.all(n)
    tasks = [("grobner-tables", {"n": n})]
    for h in hs:
        tasks.append(("assprimes", {"h": h}))
        tasks.append(("flatness", {"h": h}))
        tasks.append(("nilpotent-fiber", {"h": h}))
        if n >= 3:
            tasks.append(("dim-and-class", {"h": h}))
        if h.is_indecomposable():
            tasks.append(("component-degeneration", {"h": h}))
    return tasks


def _run_task(task):
    name, params, budget, order = task
    return run_job(name, budget=budget, order=order, **params)


def run_suite(n, budget=None, order=PAPER, workers=1):
    """Every job over the n = 4 functions (or the n = 5 smoke set).

    Reports come back in task order whatever the worker count.
    """
    tasks = [(name, params, budget, order) for name, params in suite_tasks(n)]
    if workers <= 1:
        return [_run_task(t) for t in tasks]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_task, tasks))
