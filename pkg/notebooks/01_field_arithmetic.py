"""
Finite field arithmetic with exp/log tables
===========================================

Elements of GF(p^n) are stored as integer indices; the field object turns
index arrays into sums, products, traces and norms without Python loops.
"""

import numpy as np

from pbent.galois import (
    find_primitive_modulus,
    make_field,
    norm,
    parse_field_spec,
    quadratic_character,
    trace_to_prime,
)

# a field from an explicit modulus, low-degree coefficient first
F = parse_field_spec("p=3,n=4,mod=[2,0,0,2,1]")
print(F.order, F.p, F.n)

# the generator g and a few of its powers
g = F.gen_power(1)
print(g, F.gen_power(10), F.gen_power(80) == F.one())

# whole-field arrays: every element at once
x = F.elements()
squares = F.mul(x, x)
print("distinct squares:", np.unique(squares).size)  # 0 plus (q-1)/2 nonzero squares

# the absolute trace onto F_3 is balanced
tr = np.array([trace_to_prime(F.element(int(i))) for i in x])
print("trace fiber sizes:", np.bincount(tr, minlength=3))

# the quadratic character is multiplicative
a, b = F.gen_power(3), F.gen_power(7)
print(quadratic_character(a) * quadratic_character(b) == quadratic_character(a * b))

# norm down to the subfield of order p^2
print("N(g) into F_9:", norm(g, 2))

# a primitive modulus found by search, when none is given
mod = find_primitive_modulus(5, 3)
G = make_field(5, mod)
print("F_125 modulus:", mod, "order of g:", G.order - 1)
