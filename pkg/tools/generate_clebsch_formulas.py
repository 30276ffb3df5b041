#!/usr/bin/env python3
"""Generate integer-coefficient formulas for the classical binary-sextic
invariants I2, I4, I6 in terms of the sextic's coefficients.

Method: each invariant is an isobaric polynomial in the coefficients
c0..c6 (index = degree).  For f = a*prod(x - x_i) the invariant of weight 2d
is a homogeneous degree-d polynomial in the c_i whose monomials
c_{i1}*...*c_{id} satisfy i1+...+id = 6d - w, where w is the degree in the
roots (w = 6, 12, 18 for I2, I4, I6).  We enumerate those monomials, sample
totally-split integer sextics (random integer roots, so the root-difference
definition is evaluated exactly over Z), and solve the resulting linear
system over Q.  Totally-split sextics are Zariski-dense, so the solution is
the unique polynomial identity; extra samples re-verify it.

Output: src/jacpairs/igusa/_clebsch_formulas.py with each formula as a list
of (integer coefficient, (e0,...,e6) exponent tuple) pairs.

Run from the repository root:  python3 tools/generate_clebsch_formulas.py
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from pathlib import Path

random.seed(20260826)


def root_difference_invariants(a: int, roots: list[int]) -> tuple[int, int, int]:
    """I2, I4, I6 from the symmetric root-difference sums, exactly over Z."""
    x = roots
    d = [[(x[i] - x[j]) ** 2 for j in range(6)] for i in range(6)]

    idx = range(6)

    # I2 = a^2 * sum over the 15 perfect matchings {12}{34}{56}
    def matchings(points):
        if not points:
            yield []
            return
        p0 = points[0]
        for k in range(1, len(points)):
            pk = points[k]
            rest = points[1:k] + points[k + 1 :]
            for m in matchings(rest):
                yield [(p0, pk)] + m

    i2 = 0
    for m in matchings(list(idx)):
        term = 1
        for (i, j) in m:
            term *= d[i][j]
        i2 += term
    i2 *= a * a

    # I4 = a^4 * sum over 10 splits into two unordered triples of
    # (12)^2(23)^2(31)^2 * (45)^2(56)^2(64)^2
    def tri(t):
        i, j, k = t
        return d[i][j] * d[j][k] * d[k][i]

    i4 = 0
    for combo in itertools.combinations(idx, 3):
        if 0 in combo:  # unordered pair of triples: fix 0 in the first
            rest = tuple(sorted(set(idx) - set(combo)))
            i4 += tri(combo) * tri(rest)
    i4 *= a ** 4

    # I6 = a^6 * sum over 60 "pair of triples + a bijection between them":
    # (12)^2(23)^2(31)^2 (45)^2(56)^2(64)^2 (14)^2(25)^2(36)^2
    # i.e. for each split into triples T, T' and each bijection T -> T'.
    i6 = 0
    for combo in itertools.combinations(idx, 3):
        if 0 not in combo:
            continue
        rest = tuple(sorted(set(idx) - set(combo)))
        base = tri(combo) * tri(rest)
        for perm in itertools.permutations(rest):
            cross = 1
            for i, j in zip(combo, perm):
                cross *= d[i][j]
            i6 += base * cross
    i6 *= a ** 6

    return i2, i4, i6


def coeffs_from_roots(a: int, roots: list[int]) -> list[int]:
    poly = [a]
    for r in roots:
        new = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] += c
            new[i] -= c * r
        poly = new
    return poly  # index = degree, length 7


def monomials(degree: int, index_sum: int) -> list[tuple[int, ...]]:
    """Exponent vectors (e0..e6), sum e = degree, sum i*e_i = index_sum."""
    out = []

    def rec(pos, deg_left, sum_left, acc):
        if pos == 6:
            # the last exponent must absorb the remaining degree and index sum
            if sum_left == 6 * deg_left:
                out.append(tuple(acc + [deg_left]))
            return
        for e in range(deg_left + 1):
            if pos * e > sum_left:
                break
            rec(pos + 1, deg_left - e, sum_left - pos * e, acc + [e])

    rec(0, degree, index_sum, [])
    return out


def eval_monomial(cs, expo):
    v = 1
    for c, e in zip(cs, expo):
        if e:
            v *= c ** e
    return v


def solve_formula(degree: int, index_sum: int, which: int, n_extra: int = 40):
    mons = monomials(degree, index_sum)
    n = len(mons)
    rows, rhs = [], []
    samples = []
    tries = 0
    while len(rows) < n + n_extra:
        tries += 1
        a = random.randint(1, 6)
        roots = random.sample(range(-40, 41), 6)
        cs = coeffs_from_roots(a, roots)
        vals = root_difference_invariants(a, roots)
        rows.append([Fraction(eval_monomial(cs, m)) for m in mons])
        rhs.append(Fraction(vals[which]))
        samples.append((cs, vals[which]))
    # Gaussian elimination on the first n independent rows
    aug = [row + [r] for row, r in zip(rows, rhs)]
    sol = _solve_overdetermined(aug, n)
    # verify on all samples
    for cs, target in samples:
        got = sum(c * eval_monomial(cs, m) for c, m in zip(sol, mons))
        assert got == target, "interpolated formula fails re-verification"
    out = []
    for c, m in zip(sol, mons):
        if c != 0:
            assert c.denominator == 1, f"non-integer coefficient {c}"
            out.append((int(c), m))
    return out


def _solve_overdetermined(aug, n):
    rows = [r[:] for r in aug]
    ncols = n
    piv_rows = []
    used = [False] * len(rows)
    col_of = []
    for col in range(ncols):
        piv = None
        for i, r in enumerate(rows):
            if not used[i] and r[col] != 0:
                piv = i
                break
        if piv is None:
            raise ArithmeticError("rank-deficient sample set; rerun")
        used[piv] = True
        piv_rows.append(rows[piv])
        col_of.append(col)
        pr = rows[piv]
        inv = 1 / pr[col]
        for i, r in enumerate(rows):
            if i != piv and r[col] != 0:
                f = r[col] * inv
                for j in range(col, ncols + 1):
                    r[j] -= f * pr[j]
    sol = [Fraction(0)] * ncols
    for pr, col in reversed(list(zip(piv_rows, col_of))):
        s = pr[ncols]
        for j in range(col + 1, ncols):
            s -= pr[j] * sol[j]
        sol[col] = s / pr[col]
    return sol


def main():
    specs = [
        ("I2", 2, 6, 0),
        ("I4", 4, 12, 1),
        ("I6", 6, 18, 2),
    ]
    blocks = []
    for name, deg, isum, which in specs:
        formula = solve_formula(deg, isum, which)
        print(f"{name}: {len(formula)} monomials")
        lines = [f"{name} = ["]
        for c, m in formula:
            lines.append(f"    ({c}, {m}),")
        lines.append("]")
        blocks.append("\n".join(lines))
    header = (
        '"""Frozen coefficient formulas for the binary-sextic invariants.\n'
        "\n"
        "Each entry is (integer coefficient, (e0,...,e6)) where e_i is the\n"
        "exponent of the sextic coefficient of x^i.  Generated by\n"
        "tools/generate_clebsch_formulas.py by exact interpolation against the\n"
        'root-difference definitions; do not edit by hand."""\n\n'
    )
    out = Path(__file__).resolve().parent.parent / "src/jacpairs/igusa/_clebsch_formulas.py"
    out.write_text(header + "\n\n".join(blocks) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
