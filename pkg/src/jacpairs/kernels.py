"""Fast modular resultant kernels with a compiled and a fallback path.

The hot loop — Euclidean resultant of two dense polynomials over F_p with
p < 2**31 — is compiled with numba when available.  Setting the environment
variable ``JACPAIRS_PURE_PYTHON=1`` (or running without numba installed)
selects the numpy/pure-Python fallback, which computes identical values.

On top of the modular kernel, ``resultant_int_crt`` evaluates integer
resultants by Chinese remaindering over 30-bit primes up to the Hadamard
bound; this is how very large integer resultants stay feasible.
"""
from __future__ import annotations

import math
import os

import numpy as np

from .exact.poly import Poly
from .exact.rings import ZZ

_USE_NUMBA = os.environ.get("JACPAIRS_PURE_PYTHON", "") not in ("1", "true", "yes")

if _USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is normally installed
        _USE_NUMBA = False


def _resultant_mod_p_py(a: np.ndarray, b: np.ndarray, p: int) -> int:
    """Euclidean resultant of dense coefficient arrays (index = degree) mod p.

    Reference implementation; also the fallback path.  Arrays are int64,
    leading entries nonzero, p an odd prime below 2**31.
    """
    a = [int(c) % p for c in a]
    b = [int(c) % p for c in b]
    da = len(a) - 1
    db = len(b) - 1
    res = 1
    sign = 1
    if da < db:
        a, b, da, db = b, a, db, da
        if (da % 2) and (db % 2):
            sign = -sign
    while db > 0:
        # remainder of a modulo b
        inv = pow(b[db], p - 2, p)
        r = list(a)
        for i in range(da, db - 1, -1):
            coef = r[i] * inv % p
            if coef:
                off = i - db
                for j in range(db + 1):
                    r[off + j] = (r[off + j] - coef * b[j]) % p
        dr = db - 1
        while dr >= 0 and r[dr] == 0:
            dr -= 1
        if dr < 0:
            return 0
        res = res * pow(b[db], da - dr, p) % p
        if (da % 2) and (db % 2):
            sign = -sign
        a, da = b, db
        b, db = r[: dr + 1], dr
    if b[0] == 0:
        return 0
    res = res * pow(b[0], da, p) % p
    return (p - res) % p if sign < 0 else res


if _USE_NUMBA:

    @njit(cache=True)
    def _powmod(base, exp, p):  # pragma: no cover - compiled
        result = np.int64(1)
        base = base % p
        while exp > 0:
            if exp & 1:
                result = result * base % p
            base = base * base % p
            exp >>= 1
        return result

    @njit(cache=True)
    def _resultant_mod_p_jit(a, b, p):  # pragma: no cover - compiled
        da = a.shape[0] - 1
        db = b.shape[0] - 1
        res = np.int64(1)
        sign = 1
        if da < db:
            a, b = b, a
            da, db = db, da
            if (da % 2) == 1 and (db % 2) == 1:
                sign = -sign
        a = a.copy() % p
        b = b.copy() % p
        while db > 0:
            inv = _powmod(b[db], p - 2, p)
            r = a.copy()
            for i in range(da, db - 1, -1):
                coef = r[i] * inv % p
                if coef != 0:
                    off = i - db
                    for j in range(db + 1):
                        r[off + j] = (r[off + j] - coef * b[j]) % p
            dr = db - 1
            while dr >= 0 and r[dr] == 0:
                dr -= 1
            if dr < 0:
                return np.int64(0)
            res = res * _powmod(b[db], da - dr, p) % p
            if (da % 2) == 1 and (db % 2) == 1:
                sign = -sign
            a = b
            da = db
            b = r[: dr + 1]
            db = dr
        if b[0] == 0:
            return np.int64(0)
        res = res * _powmod(b[0], da, p) % p
        if sign < 0:
            return (p - res) % p
        return res


def kernel_backend() -> str:
    """Which resultant kernel is active: "numba" or "python"."""
    return "numba" if _USE_NUMBA else "python"


def resultant_mod_p(a_coeffs, b_coeffs, p: int) -> int:
    """Resultant of two nonzero polynomials over F_p, given as dense
    coefficient sequences with index = degree; p an odd prime < 2**31."""
    if not (2 < p < 2**31):
        raise ValueError("prime out of kernel range")
    a = np.asarray([int(c) % p for c in a_coeffs], dtype=np.int64)
    b = np.asarray([int(c) % p for c in b_coeffs], dtype=np.int64)
    if a.shape[0] == 0 or b.shape[0] == 0 or a[-1] == 0 or b[-1] == 0:
        raise ValueError("inputs must be dense with nonzero leading entry")
    if a.shape[0] == 1:
        return int(pow(int(a[0]), b.shape[0] - 1, p))
    if b.shape[0] == 1:
        return int(pow(int(b[0]), a.shape[0] - 1, p))
    if _USE_NUMBA:
        return int(_resultant_mod_p_jit(a, b, p))
    return _resultant_mod_p_py(a, b, p)


def _hadamard_bound(a: Poly, b: Poly) -> int:
    na = math.isqrt(sum(c * c for c in a.coeffs)) + 1
    nb = math.isqrt(sum(c * c for c in b.coeffs)) + 1
    return na**b.degree * nb**a.degree


def _primes_30bit():
    n = 2**30 + 1
    from .exact.integers import is_prime

    while True:
        if is_prime(n):
            yield n
        n += 2


def resultant_int_crt(a: Poly, b: Poly) -> int:
    """Resultant of two integer polynomials via CRT over 30-bit primes.

    Exact: residues are combined up to twice the Hadamard bound, then lifted
    symmetrically.  Primes dividing either leading coefficient are skipped so
    degrees never drop modulo p.
    """
    if a.ring is not ZZ or b.ring is not ZZ:
        raise TypeError("integer polynomials required")
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if a.degree == 0:
        return a.lc() ** b.degree
    if b.degree == 0:
        return b.lc() ** a.degree
    bound = 2 * _hadamard_bound(a, b) + 1
    modulus = 1
    residue = 0
    for p in _primes_30bit():
        if a.lc() % p == 0 or b.lc() % p == 0:
            continue
        rp = resultant_mod_p([c % p for c in a.coeffs], [c % p for c in b.coeffs], p)
        # CRT combine
        inv = pow(modulus % p, p - 2, p) if modulus > 1 else 1
        if modulus == 1:
            residue, modulus = rp, p
        else:
            k = (rp - residue) % p * inv % p
            residue += modulus * k
            modulus *= p
        if modulus >= bound:
            break
    half = modulus // 2
    return residue - modulus if residue > half else residue
