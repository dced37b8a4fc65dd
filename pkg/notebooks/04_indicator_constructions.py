"""
Indicator augmentations
=======================

Adding the indicator of a hyperplane section to a bent function can keep
it bent.  The constructors return the function together with a report on the
side conditions, so a caller can see why a parameter choice qualifies.
"""

from pbent import fixtures as fx
from pbent.constructions.indicator import theorem4, theorem5
from pbent.pfun.classify import classify
from pbent.pfun.degree import algebraic_degree
from pbent.pfun.walsh import walsh

F = fx.field_7_4()
f, report, oracle = theorem4(F, F.gen_power(200), F.gen_power(90))
print(report)
spec = walsh(f)
c = classify(spec)
print("closed-form spectrum agrees:", all(spec[a] == oracle(a) for a in range(0, F.order, 97)))
print(c.verdict, c.regularity, "degree", algebraic_degree(f))

G = fx.field_5_3()
h, rep = theorem5(G, G.gen_power(9), G.gen_power(14))
print(rep, "->", classify(walsh(h)).verdict)
