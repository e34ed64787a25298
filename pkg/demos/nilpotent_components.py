"""
Components of nilpotent Hessenberg schemes
==========================================

For indecomposable h the nilpotent fiber is reduced and its components
are matrix Schubert varieties.  For decomposable h a single minor p_B0
exposes the nilpotents.
"""

from hessex import HessenbergFunction, Permutation, multidegree, radical_certificate
from hessex.hessenberg import e_matrix, hessenberg_ideal, p_B
from hessex.schubert import bruhat_leq, schubert_polynomial
from hessex.verify import run_job

n = 4
x = e_matrix(n, 1, n)

print("h          indecomposable  certificate / witness")
for h in HessenbergFunction.all(n):
    I = hessenberg_ideal(x, h)
    if h.is_indecomposable():
        note = radical_certificate(I)
    else:
        i0 = min(h.decomposable_set())
        B0 = list(range(2, i0 + 1)) + [n]
        p = p_B(I.ring, B0)
        note = "p_%s = %s, in I: %s, square in I: %s" % (B0, p, I.contains(p), I.contains(p * p))
    print("%-10s %-15s %s" % (h, h.is_indecomposable(), note))

# h = id: three primes, each counted twice
h = HessenbergFunction.identity(n)
report = run_job("nilpotent-fiber", h=h)
print("\nh = id:", report.verdict)
for w in report.witnesses:
    print("   ", w["claim"], "->", w["evidence"])

md = multidegree(hessenberg_ideal(x, h))
print("\nmultidegree:", md)
S = [schubert_polynomial(Permutation.parse(w)) for w in ("[4123]", "[2413]", "[2341]")]
top = S[0] + S[1] + S[2]
print("2 * (S[4123] + S[2413] + S[2341]):", top * 2)

# Bruhat relations behind h = (2,2,4,4)
P = Permutation.parse
for a, b in (("[3142]", "[3241]"), ("[3214]", "[4132]"), ("[3241]", "[4132]")):
    print("%s <= %s: %s, %s <= %s: %s" % (a, b, bruhat_leq(P(a), P(b)), b, a, bruhat_leq(P(b), P(a))))
