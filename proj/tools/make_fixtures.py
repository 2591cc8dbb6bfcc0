#!/usr/bin/env python3
"""Regenerate fixtures/knots.table from the SnapPy census.

Knotscape names 11_N and 12_N for non-alternating knots correspond to
HTLinkExteriors names K11n(N-367) and K12n(N-1288).  Each row stores SnapPy's
simplified fundamental-group presentation; the note column keeps the
HT name and a braid word.  The classical Alexander polynomial is computed
independently from the braid with the reduced Burau representation.

Usage: python3 tools/make_fixtures.py > fixtures/knots.table
"""

import math
import sys

import snappy
import sympy as sp

# name -> known genus (ceiling of the reference twisted bound)
TABLE1 = {
    "11_401": 3, "11_409": 2, "11_412": 3, "11_434": 2, "11_440": 3, "11_464": 2,
    "11_519": 3, "12_1311": 2, "12_1316": 3, "12_1319": 3, "12_1339": 2, "12_1344": 3,
    "12_1351": 3, "12_1375": 3, "12_1412": 2, "12_1417": 3, "12_1420": 3, "12_1509": 3,
    "12_1519": 3, "12_1544": 3, "12_1545": 3, "12_1552": 3, "12_1555": 3, "12_1556": 2,
    "12_1581": 2, "12_1601": 2, "12_1609": 2, "12_1699": 2, "12_1718": 2, "12_1745": 2,
    "12_1807": 2, "12_1953": 3, "12_2038": 3, "12_2096": 3, "12_2100": 3, "12_2118": 3,
}

# name -> (k, p) of the non-fibering certificate
TABLE2 = {
    "12_1345": (4, 3), "12_1498": (5, 2), "12_1502": (5, 11), "12_1546": (3, 2),
    "12_1567": (5, 3), "12_1670": (5, 2), "12_1682": (4, 3), "12_1752": (3, 2),
    "12_1771": (3, 7), "12_1823": (5, 7), "12_1938": (5, 11), "12_2089": (5, 2),
    "12_2103": (4, 3),
}

t = sp.symbols("t")


def ht_name(name):
    crossings, index = (int(x) for x in name.split("_"))
    offset = {11: 367, 12: 1288}[crossings]
    return f"K{crossings}n{index - offset}"


def burau_alexander(braid):
    """Coefficients (from t^0) of the Alexander polynomial of the closure."""
    n = max(abs(x) for x in braid) + 1
    m = n - 1
    zero, one, tp = sp.Poly(0, t), sp.Poly(1, t), sp.Poly(t, t)

    def gen(i, sign):
        # reduced Burau matrix of sigma_i, times t for an inverse letter
        i0 = i - 1
        diag = one if sign > 0 else tp
        a = [[diag if r == c else zero for c in range(m)] for r in range(m)]
        if sign > 0:
            a[i0][i0] = -tp
            if i0 > 0:
                a[i0][i0 - 1] = tp
            if i0 < m - 1:
                a[i0][i0 + 1] = one
        else:
            a[i0][i0] = -one
            if i0 > 0:
                a[i0][i0 - 1] = tp
            if i0 < m - 1:
                a[i0][i0 + 1] = one
        return a

    def mul(a, b):
        return [[sum((a[r][k] * b[k][c] for k in range(m)), zero) for c in range(m)] for r in range(m)]

    # B = t^-e P with P polynomial
    p = [[one if r == c else zero for c in range(m)] for r in range(m)]
    e = 0
    for x in braid:
        p = mul(p, gen(abs(x), 1 if x > 0 else -1))
        e += x < 0
    te = sp.Poly(t**e, t)
    a = [[(te if r == c else zero) - p[r][c] for c in range(m)] for r in range(m)]
    # Bareiss determinant of t^e I - P
    prev = one
    sign = 1
    for k in range(m - 1):
        if a[k][k].is_zero:
            swap = next((r for r in range(k + 1, m) if not a[r][k].is_zero), None)
            if swap is None:
                return [0]
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exquo(prev)
        prev = a[k][k]
    det = a[m - 1][m - 1] * sign
    # det(I - B) = t^(-e m) det; divide by 1 + t + ... + t^(n-1)
    q, r = det.div(sp.Poly(sum(t**i for i in range(n)), t))
    assert r.is_zero, r
    coeffs = [int(c) for c in q.all_coeffs()[::-1]]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
    coeffs = [c // g for c in coeffs]
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return coeffs


def dsl(group):
    gens = group.generators()
    cells = ["gens: " + " ".join(gens)]
    for r in group.relators():
        toks = []
        for ch in r:
            toks.append(ch if ch.islower() else ch.lower() + "^-1")
        cells.append("rel: " + " ".join(toks))
    cells.append("label: " + group_label)
    return ";".join(cells)


def main():
    out = sys.stdout
    out.write("twistalex table 1\n")
    out.write(f"# Generated by tools/make_fixtures.py from SnapPy {snappy.__version__}.\n")
    out.write("# name | input | genus | fibered | alexander | ks | primes | note\n")
    names = sorted(set(TABLE1) | set(TABLE2), key=lambda s: tuple(int(x) for x in s.split("_")))
    for name in names:
        ht = ht_name(name)
        M = snappy.Manifold(ht)
        G = M.fundamental_group()
        braid = snappy.Link(ht).braid_word()
        global group_label
        group_label = f"{name} ({ht[1:]})"
        alex = burau_alexander(braid)
        genus = TABLE1.get(name)
        fibered = ""
        ks = primes = ""
        if name in TABLE2:
            genus = (len(alex) - 1) // 2
            fibered = "no"
            k, p = TABLE2[name]
            ks, primes = str(k), str(p)
        note = f"HT {ht[1:]}; braid {' '.join(map(str, braid))}"
        out.write(" | ".join([name, dsl(G), str(genus), fibered, " ".join(map(str, alex)), ks, primes, note]) + "\n")
        out.flush()


group_label = ""

if __name__ == "__main__":
    main()
