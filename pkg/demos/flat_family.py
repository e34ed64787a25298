"""
A one-parameter family of Hessenberg schemes
============================================

Walk along the minimal sheet line x_t for h = (2,4,4,4) and watch the
ideal degenerate from the semisimple fiber (t = 1) to the nilpotent one
(t = 0) without losing dimension or multidegree.
"""

from hessex import HessenbergFunction, Ideal, ideals_equal, krull_dimension, multidegree
from hessex.hessenberg import ev, hessenberg_ideal, k_ideal, minimal_sheet_line
from hessex.idealops import ideal_intersection, ideal_quotient

n = 4
h = HessenbergFunction.parse("2,4,4,4")
line = minimal_sheet_line(n)
print("x_t =")
for row in line.matrix():
    print("   ", [str(e) for e in row])

# the family ideal lives in Q[t, z]
I = hessenberg_ideal(line.matrix(), h)
R = I.ring
print("\ngenerators of the family ideal:")
for g in I.groebner():
    print("   ", g)

# it splits as an intersection of two primes
L = Ideal(R, [R.t * R.z(1, 1) + R.z(4, 1)])
K2 = k_ideal(n, 2, R)
print("\nI == K2 cap <t z11 + z41>:", ideals_equal(I, ideal_intersection(K2, L)))

# flatness over the t-line: no (t - a)-torsion at a handful of points
for a in (0, 1, -1, 2):
    print("t - %2d torsion-free:" % a, ideals_equal(I, ideal_quotient(I, R.t - a)))

print("\ndim family:", krull_dimension(I))
for a in (0, 1):
    F = ev(a, I)
    print("t = %d: dim %d, multidegree %s" % (a, krull_dimension(F), multidegree(F)))
