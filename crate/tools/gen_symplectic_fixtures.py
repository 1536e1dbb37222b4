#!/usr/bin/env python3
"""Writes minimal spectra of PSp_{2n}(q) as fixture files.

The spectrum is built from its arithmetic description: semisimple parts are
lcms of q^{n_i} -+ 1 over the maximal tori, unipotent parts add a factor p^k
whose Jordan block of size p^{k-1}+1 uses up part of the dimension.

usage: gen_symplectic_fixtures.py OUT_DIR n:p:k [n:p:k ...]
"""
import itertools
import json
import math
import os
import sys
from functools import reduce


def lcm(*xs):
    return reduce(lambda a, b: a * b // math.gcd(a, b), xs, 1)


def partitions(n, top=None):
    top = n if top is None else top
    if n == 0:
        yield ()
        return
    for k in range(min(n, top), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def tori(total):
    for part in partitions(total):
        for signs in itertools.product((1, -1), repeat=len(part)):
            yield part, signs


def maximal(xs):
    xs = sorted(set(xs))
    return [x for x in xs if not any(y != x and y % x == 0 for y in xs)]


def sp_mu(n, p, k):
    q = p ** k
    out = []
    if q % 2:
        out += [(q ** n - 1) // 2, (q ** n + 1) // 2]
        for part, signs in tori(n):
            if len(part) >= 2:
                out.append(lcm(*[q ** a - s for a, s in zip(part, signs)]))
    else:
        for part, signs in tori(n):
            out.append(lcm(*[q ** a - s for a, s in zip(part, signs)]))
    e = 1
    while p ** (e - 1) + 1 <= 2 * n:
        for total in range(n + 1):
            if p ** (e - 1) + 1 + 2 * total <= 2 * n:
                for part, signs in tori(total):
                    out.append(p ** e * lcm(*[q ** a - s for a, s in zip(part, signs)]))
        e += 1
    return maximal(out)


def main():
    out_dir = sys.argv[1]
    os.makedirs(out_dir, exist_ok=True)
    for arg in sys.argv[2:]:
        n, p, k = map(int, arg.split(":"))
        q = p ** k
        mu = sp_mu(n, p, k)
        path = os.path.join(out_dir, f"S{2 * n}_{q}.json")
        with open(path, "w") as f:
            json.dump({"family": "S", "n": n, "q": q, "mu": [str(x) for x in mu]}, f, indent=1)
            f.write("\n")
        print(path, len(mu))


if __name__ == "__main__":
    main()
