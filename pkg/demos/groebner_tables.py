"""
Groebner bases of J^t_i + K_j
=============================

Certify the generating sets H_i, H^j and their unions with Buchberger's
criterion, then look at the one pair (i, j) where saturation by t adds
something.
"""

import sys

from hessex.hessenberg import jt_ideal, k_ideal
from hessex.idealops import ideals_equal, saturate
from hessex.polycore import Ring
from hessex.verify import run_job

n = int(sys.argv[1]) if len(sys.argv) > 1 else 4

report = run_job("grobner-tables", n=n)
for w in report.witnesses:
    mark = "ok " if w["ok"] else "BAD"
    print(mark, w["claim"], "(%s)" % w["evidence"])
print("verdict:", report.verdict, "in %d ms" % report.millis)

# i = j breaks saturation
R = Ring(4, t=True)
I = jt_ideal(4, 2, R) + k_ideal(4, 2, R)
S = saturate(I, R.t)
print("\nJ^t_2 + K_2 saturated:", ideals_equal(I, S))
for g in S.groebner():
    if not I.contains(g):
        print("gained:", g)
