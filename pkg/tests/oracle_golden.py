"""Independent brute-force oracle for the frozen golden values.

Shares no code with the package: plain lists, its own elimination, and
basis enumeration by rank over all subsets. Run as a script to print the
derived facts as JSON; the output was frozen into the package fixture
``data/golden.json`` (section "derived").
"""

from __future__ import annotations

import json
from fractions import Fraction
from itertools import combinations, product


def rank(rows, p=None):
    m = [list(r) for r in rows]
    if p:
        m = [[x % p for x in r] for r in m]
    else:
        m = [[Fraction(x) for x in r] for r in m]
    rk, col, ncols = 0, 0, len(m[0]) if m else 0
    while rk < len(m) and col < ncols:
        piv = next((i for i in range(rk, len(m)) if m[i][col]), None)
        if piv is None:
            col += 1
            continue
        m[rk], m[piv] = m[piv], m[rk]
        inv = pow(m[rk][col], -1, p) if p else 1 / m[rk][col]
        for i in range(len(m)):
            if i != rk and m[i][col]:
                f = m[i][col] * inv
                m[i] = [(a - f * b) % p if p else a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
        col += 1
    return rk


def column_bases(rows, p=None):
    n = len(rows[0])
    r = rank(rows, p)
    return r, [set(S) for S in combinations(range(n), r)
               if rank([[row[j] for j in S] for row in rows], p) == r]


def gen(bases, y, contains=(), avoids=()):
    tot = Fraction(0)
    for B in bases:
        if set(contains) <= B and not set(avoids) & B:
            t = Fraction(1)
            for i in B - set(contains):
                t *= y[i]
            tot += t
    return tot


def delta(bases, e, f, y):
    return (gen(bases, y, [e], [f]) * gen(bases, y, [f], [e])
            - gen(bases, y, [e, f]) * gen(bases, y, [], [e, f]))


S8 = [[1, 1, 1, 1, 1, 1, 1, 0], [0, 1, 0, 0, 0, 1, 1, 1], [0, 0, 1, 0, 1, 0, 1, 1], [0, 0, 0, 1, 1, 1, 0, 1]]
F7 = [[1, 0, 0, 0, 1, 1, 1], [0, 1, 0, 1, 0, 1, 1], [0, 0, 1, 1, 1, 0, 1]]
JP = [[1, 1, 1, 1, 1, 1, 1, 3], [0, 1, 0, 0, 2, 0, 0, 1], [0, 0, 1, 0, 0, 2, 0, 1], [0, 0, 0, 1, 0, 0, 2, 3]]


def transversal_bases(n, sets):
    r = 0
    out = []
    for k in range(min(n, len(sets)), -1, -1):
        found = []
        for S in combinations(range(n), k):
            for perm in product(range(len(sets)), repeat=k):
                if len(set(perm)) == k and all(S[i] in sets[perm[i]] for i in range(k)):
                    found.append(set(S))
                    break
        if found:
            return k, found
    return r, out


def main():
    out = {}
    one8 = [Fraction(1)] * 8
    _, s8 = column_bases(S8, 2)
    out["s8"] = {"M1": str(gen(s8, one8, [0])), "M8": str(gen(s8, one8, [7])),
                 "M18": str(gen(s8, one8, [0, 7])), "M": str(gen(s8, one8)),
                 "delta_1_8": str(delta(s8, 0, 7, one8))}

    _, jp = column_bases(JP)
    out["jprime_table"] = {f"{e + 1},{f + 1}": str(delta(jp, e, f, one8)) for e, f in combinations(range(8), 2)}
    line = {}
    for t in ["7/10", "2/3", "2", "1/2"]:
        tv = Fraction(t)
        y = [Fraction(1), tv, tv, tv, Fraction(1), Fraction(1), Fraction(1), Fraction(1)]
        line[t] = str(delta(jp, 0, 7, y))
    out["jprime_line"] = line
    mult = [1, 2, 2, 2, 3, 3, 3, 1]
    cols = [j for j in range(8) for _ in range(mult[j])]
    big = [[row[j] for j in cols] for row in JP]
    _, jb = column_bases(big)
    n17 = len(cols)
    e_copy, f_copy = 0, n17 - 1
    out["jprime_expanded"] = {"size": n17, "bases": len(jb),
                              "delta_1_8": str(delta(jb, e_copy, f_copy, [Fraction(1)] * n17)),
                              "poly_at_m": str(gen(jp, [Fraction(m) for m in mult]))}

    _, f7 = column_bases(F7, 2)
    t = Fraction(2)
    y = {0: 1, 1: 1, 2: 2, 3: -1, 4: 2, 5: t, 6: -1}
    yy = [Fraction(y[i]) for i in range(7)]
    e, f, g = 0, 1, 5
    out["f7"] = {"bases": len(f7),
                 "F_126": str(gen(f7, yy, [e, f, g])), "F_12^6": str(gen(f7, yy, [e, f], [g])),
                 "F_16^2": str(gen(f7, yy, [e, g], [f])), "F_26^1": str(gen(f7, yy, [f, g], [e])),
                 "F_1^26": str(gen(f7, yy, [e], [f, g])), "F_2^16": str(gen(f7, yy, [f], [e, g])),
                 "F_6^12": str(gen(f7, yy, [g], [e, f])), "F^126": str(gen(f7, yy, [], [e, f, g])),
                 "delta_1_2_at_t2": str(delta(f7, 0, 1, yy))}

    labels = [str(i) for i in range(1, 11)] + ["e", "f"]
    idx = {lab: i for i, lab in enumerate(labels)}
    sets = [{1, 2, 3, 4, "f"}, {5, 6, 7, "f"}, {8, 9, 10, "f"}, {1, 2, 3, 5, 6, 8, 9, "e", "f"}]
    sets = [{idx[str(x)] for x in s} for s in sets]
    _, lb = transversal_bases(12, sets)
    one12 = [Fraction(1)] * 12
    ie, iff = idx["e"], idx["f"]
    out["l_transversal"] = {"L_e": str(gen(lb, one12, [ie])), "L_f": str(gen(lb, one12, [iff])),
                            "L_ef": str(gen(lb, one12, [ie, iff])), "L": str(gen(lb, one12)),
                            "delta_e_f": str(delta(lb, ie, iff, one12))}

    # PG(2,3): normalized nonzero vectors of GF(3)^3
    pts = []
    for v in product(range(3), repeat=3):
        if any(v):
            lead = next(x for x in v if x)
            if lead == 1:
                pts.append(v)
    rows = [[p[i] for p in pts] for i in range(3)]
    _, pg3 = column_bases(rows, 3)
    line3 = [k for k, p in enumerate(pts) if p[0] == 0]
    coeffs = [0] * 4
    for B in pg3:
        coeffs[len(B & set(line3))] += 1
    out["pg23"] = {"points": len(pts), "bases": len(pg3), "line": [k + 1 for k in line3],
                   "A": coeffs[2], "B": coeffs[1], "C": coeffs[0], "x3": coeffs[3],
                   "discriminant": coeffs[1] ** 2 - 4 * coeffs[2] * coeffs[0]}

    # G(2,3) and the 2-sum with U1,2 / U1,3 by direct definition
    edges = [(0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (2, 3), (0, 3)]

    def trees(E, nv):
        res = []
        for S in combinations(range(len(E)), nv - 1):
            par = list(range(nv))

            def find(x):
                while par[x] != x:
                    x = par[x]
                return x
            ok = True
            for i in S:
                a, b = find(E[i][0]), find(E[i][1])
                if a == b:
                    ok = False
                    break
                par[a] = b
            if ok:
                res.append(set(S))
        return res
    q = trees(edges, 4)
    g = 6
    qg = [B for B in q if g in B]
    qng = [B for B in q if g not in B]
    sums = {}
    for m in (2, 3):
        # U_{1,m}: the glue element is contained in 1 basis and avoided by m - 1
        sums[f"U1,{m}"] = len(qg) * (m - 1) + len(qng) * 1
    out["g23"] = {"rank": 3, "trees": len(q), "Q^g": len(qng), "Q_g": len(qg), "two_sum": sums}

    u24 = [set(S) for S in combinations(range(4), 2)]
    out["u24"] = {"delta_at_1": str(delta(u24, 0, 1, [Fraction(1)] * 4))}
    out["pg22_pairs"] = sorted({str(delta(f7, e, f, [Fraction(1)] * 7)) for e, f in combinations(range(7), 2)})

    kn = {}
    for n in (4, 5):
        E = list(combinations(range(n), 2))
        kn[f"K{n}"] = len(trees(E, n))
    kn["K33"] = len(trees([(a, b) for a in range(3) for b in range(3, 6)], 6))
    out["tree_counts"] = kn
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
