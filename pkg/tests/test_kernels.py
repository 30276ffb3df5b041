"""Tests for the mod-p resultant kernels and the CRT integer resultant."""
import random

import pytest

from jacpairs.exact.poly import Poly, resultant
from jacpairs.exact.rings import ZZ
import numpy as np

from jacpairs.kernels import (
    _resultant_mod_p_py,
    kernel_backend,
    resultant_int_crt,
    resultant_mod_p,
)


def _rand_zpoly(rng, deg, bound):
    coeffs = [rng.randrange(-bound, bound + 1) for _ in range(deg)]
    coeffs.append(rng.randrange(1, bound + 1))
    return Poly.from_ints(ZZ, coeffs)


class TestModP:
    def test_backend_reported(self):
        assert kernel_backend() in ("numba", "python")

    def test_active_backend_matches_pure(self):
        rng = random.Random(11)
        p = 2**31 - 1
        for _ in range(20):
            a = [rng.randrange(p) for _ in range(rng.randrange(2, 30))]
            b = [rng.randrange(p) for _ in range(rng.randrange(2, 30))]
            if a[-1] == 0 or b[-1] == 0:
                continue
            pure = _resultant_mod_p_py(
                np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64), p
            )
            assert resultant_mod_p(a, b, p) == pure

    def test_matches_exact_resultant(self):
        rng = random.Random(12)
        p = 1_000_003
        for _ in range(15):
            a = _rand_zpoly(rng, 8, 40)
            b = _rand_zpoly(rng, 6, 40)
            exact = resultant(a, b) % p
            modp = resultant_mod_p(
                [c % p for c in a.coeffs], [c % p for c in b.coeffs], p
            )
            assert modp == exact


class TestCRT:
    def test_matches_subresultant(self):
        rng = random.Random(13)
        for _ in range(10):
            a = _rand_zpoly(rng, 12, 10**6)
            b = _rand_zpoly(rng, 9, 10**6)
            assert resultant_int_crt(a, b) == resultant(a, b)

    def test_degree_stress(self):
        # high degree, small coefficients: verified against the
        # fraction-free subresultant computation
        rng = random.Random(14)
        a = _rand_zpoly(rng, 250, 9)
        b = _rand_zpoly(rng, 60, 9)
        assert resultant_int_crt(a, b) == resultant(a, b)

    def test_coefficient_stress(self):
        # huge coefficients (around 10^4 digits): multiplicativity
        # res(a, b*c) = res(a, b) * res(a, c) is an independent consistency
        # check that a wrong prime bound or a CRT lift error would break
        rng = random.Random(15)
        bound = 10**10_000
        a = _rand_zpoly(rng, 4, bound)
        b = _rand_zpoly(rng, 3, bound)
        c = _rand_zpoly(rng, 3, bound)
        assert resultant_int_crt(a, b * c) == resultant_int_crt(
            a, b
        ) * resultant_int_crt(a, c)

    def test_common_root_gives_zero(self):
        x = Poly.gen(ZZ)
        shared = x - Poly.constant(ZZ, 5)
        a = shared * (x + Poly.one(ZZ))
        b = shared * (x + Poly.constant(ZZ, 2))
        assert resultant_int_crt(a, b) == 0
