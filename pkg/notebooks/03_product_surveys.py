"""
Product augmentations and parameter surveys
===========================================

Adding Tr(u x) Tr(v x) to a bent function gives a function whose class is
predicted from three trace values.  A survey enumerates (lambda, u, v),
evaluates every function, and compares the measured class with the prediction.
"""

from pbent import fixtures as fx
from pbent.constructions.predict import theorem1_function, theorem1_predict
from pbent.pfun.classify import classify
from pbent.pfun.walsh import walsh
from pbent.survey import run_survey

F = fx.field_3_4()
lam, u, v = F.gen_power(10), F.gen_power(4), F.gen_power(25)

prediction = theorem1_predict(F, lam, u, v)
print("predicted:", prediction)

f = theorem1_function(F, lam, u, v)
print("measured:", classify(walsh(f)).verdict)

# an exhaustive survey over F_81: 8 * 80 * 80 tuples, batched on two threads
result = run_survey("theorem1", F, workers=2)
for line in result.summary_lines():
    print(line)

# a seeded sample over a larger field; the same seed reproduces the same TSV
sample = run_survey("theorem2", fx.field_3_6(), sample=200, seed=7)
print("sampled mismatches:", sample.mismatches)
