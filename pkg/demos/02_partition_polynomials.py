"""Walkthrough: real-rootedness of partition polynomials on the Fano plane.

Run with ``python3 demos/02_partition_polynomials.py``.
"""

# %%
from rayleigh import analysis as an
from rayleigh import catalog
from rayleigh.poly import partition_poly
from rayleigh.unipoly import discriminant, real_root_census

F7 = catalog.get("f7")
ones = {lab: 1 for lab in F7.labels}

# %% Split bases by how many elements of a line they use
line = ["1", "2", "6"]
p = partition_poly(F7, line, ones)
print("line", line, "->", p, "discriminant", discriminant(p))
print("real rooted:", real_root_census(p).is_real_rooted)

# The same failure shows up in the checker, once per line of the plane.
rep = an.rz_lc_check(F7, 3)
print(rep.verdict.name, sorted(tuple(w["subset"]) for w in rep.witnesses))

# At all ones the two-element partition polynomials are real rooted.
print("m = 2:", an.rz_lc_check(F7, 2).verdict.name)

# %% Real points break the strong version right away
point = {"3": 2, "5": 2, "4": -1, "7": -1, "6": 2}
print("Delta{1,2} at a real point:", an.delta_at(F7, "1", "2", point))
