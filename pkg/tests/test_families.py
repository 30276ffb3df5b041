"""Tests for the four curve-pair families: symbolic identities, modular
parameterizations, specialization, and validity handling."""
from fractions import Fraction

import pytest

from jacpairs.exact.poly import Poly, discriminant
from jacpairs.exact.rings import GF, QQ
from jacpairs.families import (
    FAMILY_IDS,
    X0_DEGREES,
    cusp_check,
    eval_poly,
    family_identity_check,
    family_pair,
    family_sextic,
    family_spec,
    galois_restriction_check,
    symbolic_kappa_check,
    weierstrass_at,
    x0_jpair,
)


class TestSymbolicIdentities:
    @pytest.mark.parametrize("fid", FAMILY_IDS)
    def test_model_identities(self, fid):
        rep = family_identity_check(family_spec(fid))
        assert rep["pass"], rep

    @pytest.mark.parametrize("fid", ("deg3", "deg4", "deg7"))
    def test_kappa_assembly(self, fid):
        rep = symbolic_kappa_check(family_spec(fid))
        assert rep["plain"] and rep["tilde"]


class TestModularTable:
    def test_degrees_present(self):
        assert set(X0_DEGREES) == {
            1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25,
        }

    def test_involution_degree_two(self):
        # j'_2(s) = j_2(4096/s): the dual parameterization is the
        # Atkin-Lehner flip of the original
        param = x0_jpair(2)
        for s in (Fraction(3), Fraction(-7, 2), Fraction(11, 5)):
            assert param.j_prime.evaluate(s) == param.j.evaluate(
                Fraction(4096) / s
            )

    def test_involution_degree_ten(self):
        param = x0_jpair(10)
        for s in (Fraction(1), Fraction(5, 3)):
            assert param.j_prime.evaluate(s) == param.j.evaluate(
                Fraction(20) / s
            )

    def test_cusp_check(self):
        # s = 0 is a cusp (denominator root); s = 2 is not
        assert cusp_check(3, Fraction(0)) is False
        assert cusp_check(3, Fraction(2)) is True


class TestSpecialization:
    def test_worked_example(self):
        spec = family_spec("deg3")
        twist, sextic = family_sextic(spec, QQ, Fraction(1))
        assert twist == 560
        assert [int(c) for c in sextic.coeffs] == [-16, 0, -352, 0, -1648, 0, 16]

    def test_pair_over_finite_field(self):
        F = GF(101)
        for fid in FAMILY_IDS:
            spec = family_spec(fid)
            (tw1, c1), (tw2, c2) = family_pair(spec, F, F.from_int(3))
            assert not F.is_zero(discriminant(c1))
            assert not F.is_zero(discriminant(c2))
            assert c2 == c1.substitute_neg() or not F.is_zero(tw2)

    def test_invalid_parameter_rejected(self):
        spec = family_spec("deg3")
        with pytest.raises(ValueError):
            family_sextic(spec, QQ, Fraction(0))

    def test_weierstrass_models_nonsingular(self):
        F = GF(103)
        for fid in FAMILY_IDS:
            spec = family_spec(fid)
            t = F.from_int(2)
            s = eval_poly(spec.s_of_t, F, t)
            for prime in (False, True):
                E = weierstrass_at(spec, F, s, prime=prime)
                assert not F.is_zero(discriminant(E.cubic))


class TestGaloisRestriction:
    def test_odd_family_square_disc(self):
        # the parity-odd restriction: s = t^2 makes the discriminant square
        spec = family_spec("deg3")
        # over Q: s = 4 gives a square discriminant, s = 2 does not
        assert galois_restriction_check(spec, QQ, Fraction(4)) is True
        assert galois_restriction_check(spec, QQ, Fraction(2)) is False
        # over F_p the same criterion is the Euler test
        F = GF(1009)
        assert galois_restriction_check(spec, F, F.from_int(4)) is True

    def test_even_family_square_ratio(self):
        spec = family_spec("deg4")
        # s of t: s = 16 t^2 + 16 always satisfies the even restriction
        s = eval_poly(spec.s_of_t, QQ, Fraction(3))
        assert galois_restriction_check(spec, QQ, s) is True
        F = GF(1009)
        t = F.from_int(3)
        assert galois_restriction_check(
            spec, F, eval_poly(spec.s_of_t, F, t)
        ) is True
