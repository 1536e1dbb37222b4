#!/usr/bin/env python3
"""Writes the largest-element table (m1 and m2 rows) for PSp_{2n}(q), q odd.

For every rank n and every sampled odd q the two largest element orders are
found among the candidate lcm forms, and each is written as c * f(q) with f
monic. Equal (f, c) across samples collapse into one row. Rows seen only at
p = 3 get p_max = 3 and their counterparts from p = 5 on get p_min = 5.

Two hand rows for PSL_2(q), q odd, are appended: m1 = q for prime q and
(q + 1) / 2 otherwise.

usage: gen_m1_table.py OUT.json [--raw RAW.json]

With --raw, a previous raw dump is reused (ranks 2..30 take over an hour).
"""
import itertools
import json
import os
import sys
from fractions import Fraction

import sympy

sys.path.insert(0, os.path.dirname(__file__))
from gen_symplectic_fixtures import lcm, partitions  # noqa: E402

X = sympy.symbols("x")
RANKS = range(2, 31)
PRIMES = [q for q in range(3, 200) if sympy.isprime(q)]
EXTENSIONS = [9, 25, 27, 49, 81, 121, 125, 169, 243, 289, 343, 361, 529, 625, 729, 841, 961, 1331]
# tori with more than three factors never give one of the two largest orders
MAX_PARTS = 3


def shapes(n, p):
    def tori(total):
        for part in partitions(total):
            if len(part) > MAX_PARTS:
                continue
            for signs in itertools.product((1, -1), repeat=len(part)):
                yield part, signs

    out = [("half", (n,), (1,)), ("half", (n,), (-1,))]
    out += [(0, part, signs) for part, signs in tori(n) if len(part) >= 2]
    k = 1
    while p ** (k - 1) + 1 <= 2 * n:
        for total in range(n + 1):
            if p ** (k - 1) + 1 + 2 * total <= 2 * n:
                out += [(k, part, signs) for part, signs in tori(total)]
        k += 1
    return out


def value(shape, q, p):
    if shape[0] == "half":
        return (q ** shape[1][0] - shape[2][0]) // 2
    k, part, signs = shape
    return p ** k * lcm(*[q ** a - s for a, s in zip(part, signs)])


def two_largest(n, q):
    p = sympy.primefactors(q)[0]
    vals = sorted(((value(s, q, p), s) for s in shapes(n, p)), key=lambda v: v[0], reverse=True)
    m1 = vals[0]
    second = next(v for v in vals if v[0] != m1[0])
    m2 = max(second[0], m1[0] // min(sympy.primefactors(m1[0])))
    return m1, m2, second


def shape_poly(shape):
    if shape[0] == "half":
        return sympy.Poly(X ** shape[1][0] - shape[2][0], X)
    k, part, signs = shape
    f = sympy.Integer(1)
    for a, s in zip(part, signs):
        f = sympy.lcm(f, X ** a - s)
    return sympy.Poly(sympy.expand(f * X ** k), X)


def rows_for(n, qs):
    m1rows, m2rows = {}, {}
    for q in qs:
        (m1, s1), m2, second = two_largest(n, q)
        f = shape_poly(s1)
        c = Fraction(m1, int(f.eval(q)))
        m1rows.setdefault((tuple(f.all_coeffs()), c), []).append(q)
        if m2 == second[0]:
            f2 = shape_poly(second[1])
            c2 = Fraction(m2, int(f2.eval(q)))
        else:
            f2, c2 = f, c / 2
        m2rows.setdefault((tuple(f2.all_coeffs()), c2), []).append(q)
    return m1rows, m2rows


def raw_rows():
    out = {"m1": [], "m2": [], "m3": []}
    for n in RANKS:
        for field, qs in (("prime", PRIMES), ("extension", EXTENSIONS)):
            r1, r2 = rows_for(n, qs)
            for tag, rows in (("m1", r1), ("m2", r2)):
                for (coeffs, c), seen in rows.items():
                    out[tag].append({
                        "family": "S", "rank": n,
                        "c_num": str(c.numerator), "c_den": str(c.denominator),
                        "poly": [str(int(v)) for v in reversed(coeffs)],
                        "field": field, "parity": "odd", "seen": [min(seen), max(seen)],
                    })
        print(n, file=sys.stderr)
    return out


def bounded(row):
    row = dict(row)
    lo, hi = row.pop("seen")
    if row["field"] == "prime":
        if hi == 3:
            row["p_max"] = 3
        elif lo > 3:
            row["p_min"] = lo
    return row


def psl2_rows():
    row = {"family": "L", "rank": 1, "parity": "odd"}
    return {
        "m1": [dict(row, c_num="1", c_den="1", poly=["0", "1"], field="prime", p_min=5),
               dict(row, c_num="1", c_den="2", poly=["1", "1"], field="extension")],
        "m2": [dict(row, c_num="1", c_den="2", poly=["1", "1"], field="prime", p_min=5),
               dict(row, c_num="1", c_den="2", poly=["-1", "1"], field="extension")],
    }


def main():
    out_path = sys.argv[1]
    if "--raw" in sys.argv:
        with open(sys.argv[sys.argv.index("--raw") + 1]) as f:
            raw = json.load(f)
    else:
        raw = raw_rows()
    extra = psl2_rows()
    table = {tag: extra.get(tag, []) + [bounded(r) for r in raw[tag]] for tag in ("m1", "m2", "m3")}
    with open(out_path, "w") as f:
        json.dump(table, f, indent=1)
        f.write("\n")
    print({k: len(v) for k, v in table.items()})


if __name__ == "__main__":
    main()
