"""Walkthrough: where negative correlation breaks, and how an exact point proves it.

Run with ``python3 demos/01_negative_correlation.py``. Every number printed is exact.
"""

# %% A sparse paving matroid on eight elements
from fractions import Fraction

from rayleigh import analysis as an
from rayleigh import catalog
from rayleigh.matroid import parallel_expand

S8 = catalog.get("s8")
print(S8.name, "rank", S8.rank, "bases", len(S8.bases))

# At y = 1 the Rayleigh difference of {1, 8} is a plain count of bases.
rep = an.negative_correlation_check(S8)
print(rep.verdict.name, rep.witnesses)

# %% A rank-4 matrix matroid that is balanced at all ones
J = catalog.get("jprime")
print("balanced:", an.balanced_check(J).verdict.name)
print("Delta{1,8} at all ones:", an.delta_at(J, "1", "8", {}))

# Drag elements 2, 3, 4 down together and the difference goes negative.
for t in (Fraction(1, 2), Fraction(2, 3), Fraction(7, 10), Fraction(9, 10)):
    point = {"2": t, "3": t, "4": t}
    print(f"t = {t}:", an.delta_at(J, "1", "8", point))

# %% Integer weights become parallel classes
# Weight m on an element is the same as m parallel copies at weight one,
# so a rational violation turns into a counting violation on a bigger matroid.
mult = [1, 2, 2, 2, 3, 3, 3, 1]
big = parallel_expand(J, mult)
print("expanded size", big.size, "bases", len(big.bases))
print("Delta{1,8} on the expansion at all ones:", an.delta_at(big, "1", "8", {}))
