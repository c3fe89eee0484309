"""Walkthrough: electrical networks, where every difference is a perfect square.

Run with ``python3 demos/03_graphs.py``.
"""

# %%
from rayleigh import analysis as an
from rayleigh.graphic import (
    complete_graph,
    effective_conductance,
    graphic_matroid,
    monotonicity_check,
    square_certificate,
)
from rayleigh.poly import format_poly

K4 = complete_graph(4)
print("Y between 1 and 2 with unit conductances:", effective_conductance(K4, "1", "2"))

# Raising an edge conductance never lowers Y. Edge 34 is a balanced bridge, so it
# changes nothing; edge 13 helps.
print("edge 34 at 5:", effective_conductance(K4, "1", "2", {"34": 5}))
print("edge 13 at 5:", effective_conductance(K4, "1", "2", {"13": 5}))
print("monotone on samples:", monotonicity_check(K4, "1", "2", 50, 1).verdict.name)

# %% An explicit square root of the difference, built from oriented cycles
cert = square_certificate(K4, "12", "34")
print("P =", format_poly(cert.P))
print("Delta = P^2:", cert.verified)

# Flipping an edge only flips the sign of P.
print("flipped:", format_poly(square_certificate(K4.reversed(["12"]), "12", "34").P))

# %% So negative correlation holds for all of them
print(an.negative_correlation_check(graphic_matroid(K4)).verdict.name)
