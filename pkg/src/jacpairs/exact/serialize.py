"""JSON encoding of field descriptors, field elements, and polynomials.

Schema: a polynomial is a JSON array of coefficient encodings with index =
degree.  Integer and rational coefficients are decimal strings ("-3/7"
allowed); prime-field elements are decimal strings; extension-field elements
are objects {"p": "...", "degree": m, "coeffs": ["...", ...]}.
"""
from __future__ import annotations

from fractions import Fraction

from .poly import Poly
from .rings import QQ, ZZ, ExtField, GF, GFext, IntegerRing, PrimeField, RationalField


def field_to_json(R) -> dict:
    if isinstance(R, IntegerRing):
        return {"type": "Z"}
    if isinstance(R, RationalField):
        return {"type": "Q"}
    if isinstance(R, PrimeField):
        return {"type": "Fp", "p": str(R.p)}
    if isinstance(R, ExtField):
        return {
            "type": "Fq",
            "p": str(R.p),
            "degree": R.m,
            "modulus": [str(c) for c in R.modulus],
        }
    raise TypeError(f"no JSON form for ring {R!r}")


def field_from_json(obj: dict):
    kind = obj["type"]
    if kind == "Z":
        return ZZ
    if kind == "Q":
        return QQ
    if kind == "Fp":
        return GF(int(obj["p"]))
    if kind == "Fq":
        K = GFext(int(obj["p"]), int(obj["degree"]))
        if "modulus" in obj and tuple(int(c) for c in obj["modulus"]) != K.modulus:
            raise ValueError("extension field modulus mismatch")
        return K
    raise ValueError(f"unknown field type {kind!r}")


def element_to_json(R, a):
    if isinstance(R, (IntegerRing, RationalField, PrimeField)):
        return str(a)
    if isinstance(R, ExtField):
        return {"p": str(R.p), "degree": R.m, "coeffs": [str(c) for c in a]}
    raise TypeError(f"no JSON form for elements of {R!r}")


def element_from_json(R, obj):
    if isinstance(R, IntegerRing):
        return int(obj)
    if isinstance(R, RationalField):
        return Fraction(str(obj).replace("−", "-"))
    if isinstance(R, PrimeField):
        return int(obj) % R.p
    if isinstance(R, ExtField):
        if int(obj["p"]) != R.p or int(obj["degree"]) != R.m:
            raise ValueError("element does not belong to this field")
        coeffs = [int(c) % R.p for c in obj["coeffs"]]
        if len(coeffs) != R.m:
            coeffs = (coeffs + [0] * R.m)[: R.m]
        return tuple(coeffs)
    raise TypeError(f"cannot parse elements of {R!r}")


def poly_to_json(f: Poly) -> list:
    return [element_to_json(f.ring, c) for c in f.coeffs]


def poly_from_json(coeffs: list, R) -> Poly:
    return Poly(R, [element_from_json(R, c) for c in coeffs])
