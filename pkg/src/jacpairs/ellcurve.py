"""Elliptic curve models y^2 = monic cubic: discriminant, j-invariant,
2-torsion, point membership, and a bounded naive rational-point search.

Only the shape y^2 = x^3 + a2 x^2 + a4 x + a6 is supported (characteristic
is never 2 here, so this is lossless after completing the square, and every
model handled by the package is already in this shape).  The curve
discriminant convention is Delta = 16 * disc(cubic).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .exact.integers import is_perfect_square
from .exact.poly import Poly, discriminant
from .exact.rings import QQ, ExtField, PrimeField
from .exact.roots import roots, roots_in_splitting_field


class WeierstrassModel:
    """y^2 = cubic(x) with cubic a monic degree-3 polynomial over a field."""

    __slots__ = ("cubic", "possibly_singular")

    def __init__(self, cubic: Poly, possibly_singular: bool = False):
        if cubic.degree != 3:
            raise ValueError("model requires a cubic right-hand side")
        R = cubic.ring
        if not R.is_one(cubic.lc()):
            raise ValueError("cubic must be monic")
        self.cubic = cubic
        self.possibly_singular = possibly_singular
        if not possibly_singular and R.is_zero(discriminant(cubic)):
            raise ValueError("singular model (discriminant zero)")

    @property
    def ring(self):
        return self.cubic.ring

    @staticmethod
    def from_coefficients(ring, a2, a4, a6, possibly_singular: bool = False):
        cubic = Poly(ring, [a6, a4, a2, ring.one])
        return WeierstrassModel(cubic, possibly_singular=possibly_singular)

    def __repr__(self):
        return f"WeierstrassModel(y^2 = {self.cubic!r})"


@dataclass(frozen=True)
class AffinePoint:
    x: object
    y: object


def curve_discriminant(E: WeierstrassModel):
    """Delta = 16 * disc(cubic); reproduces the printed Delta_N(s) values."""
    R = E.ring
    return R.mul(R.from_int(16), discriminant(E.cubic))


def j_invariant(E: WeierstrassModel):
    """j = c4^3 / Delta for y^2 = x^3 + a2 x^2 + a4 x + a6
    (c4 = 16 a2^2 - 48 a4)."""
    R = E.ring
    delta = curve_discriminant(E)
    if R.is_zero(delta):
        raise ZeroDivisionError("singular model has no j-invariant")
    a2 = E.cubic.coeff(2)
    a4 = E.cubic.coeff(1)
    c4 = R.sub(R.mul(R.from_int(16), R.mul(a2, a2)), R.mul(R.from_int(48), a4))
    return R.div(R.mul(c4, R.mul(c4, c4)), delta)


def two_torsion_x(E: WeierstrassModel):
    """The x-coordinates of the three nonzero 2-torsion points: the roots of
    the cubic in its minimal splitting field.  Returns (field, [x1, x2, x3])
    with roots in a deterministic order."""
    R = E.ring
    if R.is_zero(discriminant(E.cubic)):
        raise ValueError("singular model: 2-torsion degenerate")
    K, xs = roots_in_splitting_field(E.cubic)
    if len(xs) != 3:
        raise AssertionError("separable cubic must have three roots")
    return K, xs


def galois_cubic_split_check(f: Poly):
    """Finite-field shadow of the cubic-splitting criterion: for a monic
    separable cubic over F_p, disc(f) is a square iff f has 0 or 3 roots in
    F_p (a non-square disc forces exactly one root).  Returns a record with
    the two observations and their consistency."""
    F = f.ring
    if not isinstance(F, PrimeField):
        raise TypeError("check defined over prime fields")
    if f.degree != 3 or not F.is_one(f.lc()):
        raise ValueError("monic cubic required")
    d = discriminant(f)
    if F.is_zero(d):
        raise ValueError("inseparable cubic")
    square = F.is_square(d)
    nroots = len(roots(f))
    consistent = (square and nroots in (0, 3)) or (not square and nroots == 1)
    return {"disc_is_square": square, "root_count": nroots, "consistent": consistent}


def on_curve(E: WeierstrassModel, P: AffinePoint) -> bool:
    R = E.ring
    lhs = R.mul(P.y, P.y)
    return lhs == E.cubic.evaluate(P.x)


def bounded_point_search(E: WeierstrassModel, height_bound: int):
    """All affine rational points (a/b^2, c/b^3) with |a|, b <= height_bound
    found by exhaustive scan over x-candidates (NOT a completeness proof).
    The model must be over Q with integer coefficients."""
    if E.ring is not QQ:
        raise TypeError("rational point search requires a model over Q")
    if height_bound < 1:
        raise ValueError("height bound must be >= 1")
    coeffs = []
    for i in range(4):
        c = Fraction(E.cubic.coeff(i))
        if c.denominator != 1:
            raise ValueError("integer model required for the search")
        coeffs.append(c.numerator)
    a6, a4, a2, _ = coeffs
    found = []
    for b in range(1, isqrt(height_bound) + 1):
        b2, b4, b6 = b * b, b**4, b**6
        for a in range(-height_bound, height_bound + 1):
            if gcd(a, b) != 1:
                continue
            # y^2 = cubic(a/b^2); clear denominators by b^6:
            # (b^3 y)^2 = a^3 + a2 a^2 b^2 + a4 a b^4 + a6 b^6
            rhs = a * a * a + a2 * a * a * b2 + a4 * a * b4 + a6 * b6
            if rhs < 0:
                continue
            if is_perfect_square(rhs):
                c = isqrt(rhs)
                x = Fraction(a, b * b)
                y = Fraction(c, b * b * b)
                found.append(AffinePoint(x, y))
                if c != 0:
                    found.append(AffinePoint(x, -y))
    found.sort(key=lambda P: (P.x, P.y))
    return found


def exhaustive_split_scan(p: int) -> dict:
    """Run galois_cubic_split_check over every monic separable cubic mod p
    and count the outcomes; ``pass`` requires every case consistent."""
    from .exact.rings import GF

    F = GF(p)
    total = 0
    inconsistent = 0
    by_roots = {0: 0, 1: 0, 3: 0}
    for a in range(p):
        for b in range(p):
            for c in range(p):
                f = Poly(F, [F.from_int(c), F.from_int(b), F.from_int(a), F.one])
                if F.is_zero(discriminant(f)):
                    continue
                rec = galois_cubic_split_check(f)
                total += 1
                by_roots[rec["root_count"]] += 1
                if not rec["consistent"]:
                    inconsistent += 1
    return {
        "p": p,
        "separable_cubics": total,
        "root_counts": by_roots,
        "inconsistent": inconsistent,
        "pass": inconsistent == 0,
    }
