#!/usr/bin/env python3
"""Random simply connected formal algebras for the shipped corpus.

Each algebra is a monomial quotient of a free graded-commutative algebra on
two or three generators of degree 2..4 (an order ideal of monomials survives),
followed by a random invertible change of basis in every degree so the
structure constants are no longer 0/1. Output is deterministic per seed.

usage: gen_random_corpus.py OUTDIR [--count 2] [--seed 11] [--top 8]
"""

import argparse
import itertools
import json
import random
from fractions import Fraction
from pathlib import Path


def monomials(degrees, top):
    """Exponent vectors of total degree 1..top; odd generators square to zero."""
    ranges = [range(0, 2) if d % 2 else range(0, top // d + 1) for d in degrees]
    out = []
    for e in itertools.product(*ranges):
        deg = sum(a * d for a, d in zip(e, degrees))
        if 0 < deg <= top:
            out.append(e)
    return out


def degree(e, degrees):
    return sum(a * d for a, d in zip(e, degrees))


def sign(a, b, degrees):
    # x^a * x^b -> x^(a+b): odd letters of b move left past larger odd letters of a
    flips = 0
    for i, di in enumerate(degrees):
        for j, dj in enumerate(degrees):
            if di % 2 and dj % 2 and j > i:
                flips += b[i] * a[j]
    return -1 if flips % 2 else 1


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def invertible(n, rng):
    while True:
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if inverse(m) is not None:
            return m


def inverse(m):
    n = len(m)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return None
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def fmt(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def random_algebra(rng, name, top):
    ngen = rng.randint(2, 3)
    degrees = sorted(rng.randint(2, 4) for _ in range(ngen))
    all_monos = monomials(degrees, top)
    # order ideal: everything dividing a few random maximal monomials
    peaks = rng.sample(all_monos, k=min(len(all_monos), rng.randint(2, 4)))
    gens = [tuple(int(i == k) for i in range(ngen)) for k in range(ngen)]
    kept = sorted({m for m in all_monos if any(divides(m, p) for p in peaks + gens)},
                  key=lambda e: (degree(e, degrees), e))

    by_degree = {}
    for m in kept:
        by_degree.setdefault(degree(m, degrees), []).append(m)
    change = {d: invertible(len(ms), rng) for d, ms in by_degree.items()}
    back = {d: inverse(p) for d, p in change.items()}

    ids = {}
    basis = [{"id": "1", "degree": 0}]
    order = []
    for d in sorted(by_degree):
        for k in range(len(by_degree[d])):
            ident = f"e{d}_{k + 1}"
            ids[(d, k)] = ident
            basis.append({"id": ident, "degree": d})
            order.append((d, k))

    def old_coords(d, k):
        # new basis vector (d, k) in monomial coordinates
        return {by_degree[d][j]: change[d][k][j] for j in range(len(by_degree[d])) if change[d][k][j] != 0}

    products = []
    for x in range(len(order)):
        for y in range(x, len(order)):
            (d1, k1), (d2, k2) = order[x], order[y]
            d = d1 + d2
            if d not in by_degree:
                continue
            acc = [Fraction(0)] * len(by_degree[d])
            for ma, ca in old_coords(d1, k1).items():
                for mb, cb in old_coords(d2, k2).items():
                    prod = tuple(p + q for p, q in zip(ma, mb))
                    if prod in by_degree[d] and all(
                            prod[i] <= 1 for i in range(ngen) if degrees[i] % 2):
                        acc[by_degree[d].index(prod)] += sign(ma, mb, degrees) * ca * cb
            # old coordinates -> new: v_old = sum_k c_k row_k(change), so c = v_old * back
            n = len(acc)
            coeffs = [sum(acc[j] * back[d][j][k] for j in range(n)) for k in range(n)]
            result = [{"id": ids[(d, k)], "coeff": fmt(c)} for k, c in enumerate(coeffs) if c != 0]
            if result:
                products.append({"left": ids[(d1, k1)], "right": ids[(d2, k2)], "result": result})

    return {"name": name, "basis": basis, "unit": "1", "products": products,
            "cutoffs": {"max_degree": 8}}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", type=Path)
    ap.add_argument("--count", type=int, default=2)
    ap.add_argument("--seed", type=int, default=11)
    ap.add_argument("--top", type=int, default=8)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    args.outdir.mkdir(parents=True, exist_ok=True)
    for i in range(1, args.count + 1):
        # resample until some degree has a nontrivial basis change to exercise
        while True:
            doc = random_algebra(rng, f"random{i}", args.top)
            degs = [b["degree"] for b in doc["basis"]]
            if len(degs) >= 6 and any(degs.count(d) >= 2 for d in set(degs) if d > 0):
                break
        path = args.outdir / f"random{i}.json"
        path.write_text(json.dumps(doc, indent=2) + "\n")
        print(path, len(doc["basis"]), "basis elements")


if __name__ == "__main__":
    main()
