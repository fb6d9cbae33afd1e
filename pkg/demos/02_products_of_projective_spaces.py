"""
Products of projective spaces
=============================

CP^n x CP^m with the Fubini-Study form scaled by lam has a product of two
simplices as its polytope. Every vertex has all edges of lattice length lam,
so the count is (n+m)! (n+1)(m+1) below lam and zero from lam on.
"""

from fractions import Fraction
from math import factorial

from delzant_emb import cp_product, emb_function

for n, m, lam in [(1, 1, 1), (1, 2, 1), (2, 2, Fraction(3, 2)), (1, 3, Fraction(2, 5))]:
    sf = emb_function(cp_product(n, m, lam))
    formula = factorial(n + m) * (n + 1) * (m + 1)
    print(f"CP^{n} x CP^{m}, lam={lam}: pieces {[(str(a), str(b) if b is not None else 'inf', v) for a, b, v in sf.pieces()]}"
          f"  formula {formula}")
    assert sf(0) == formula and sf(lam) == 0
