"""
Walsh spectra and plateau classification
========================================

Walsh coefficients of a p-ary function live in Z[w], w a primitive p-th root
of unity.  They are kept exactly, as integer coordinate arrays, so bentness
and plateau exponents are decided without floating-point tolerance.
"""

import numpy as np

from pbent import fixtures as fx
from pbent.constructions.base import kasami, sidelnikov
from pbent.galois import find_primitive_modulus, make_field
from pbent.pfun.classify import classify
from pbent.pfun.function import random_function
from pbent.pfun.walsh import walsh, walsh_naive

F = fx.field_3_4()

# the quadratic Kasami-type function Tr(lambda x^(q^(1/2)+1)) is bent
f = kasami(F, F.gen_power(10))  # lambda must lie in the subfield F_9
spec = walsh(f)  # butterfly transform, Parseval and inversion checked
c = classify(spec)
print(c.verdict, c.s, c.regularity)
print("first coefficient:", spec[0])

# the O(q^2) definition gives the identical exact spectrum
print("naive agrees:", walsh_naive(f) == spec)

# Sidelnikov's function over an odd-degree field has a non-real normalised mu
F27 = make_field(3, find_primitive_modulus(3, 3))
S = sidelnikov(F27, F27.gen_power(2))
cs = classify(walsh(S))
print(cs.verdict, cs.regularity, cs.mu_complex)

# the dual of a bent function is again a function on the field
print("dual table head:", c.dual.table[:10])

# random functions are almost never plateaued
rng = np.random.Generator(np.random.Philox(5))
r = random_function(F, rng)
print(classify(walsh(r)).report())
