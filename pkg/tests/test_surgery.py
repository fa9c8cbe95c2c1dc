import math
import random
from fractions import Fraction

import pytest

from cobkit.arith import dedekind_sum
from cobkit.cobordism import S3, bound_from_filling
from cobkit.errors import DomainError
from cobkit.lens import LensSpace, m_bounds, rokhlin
from cobkit.surgery import (
    CharSurfaceData,
    SurgeryCandidate,
    arf_from_surgery,
    congruence_obstruction,
    m_bounds_from_surgery,
    obstruction_report,
    qr_obstruction,
    slice_genus_lower,
    slice_knot_surgery_class,
    spin_surgery_model,
    unknotting_one_obstruction,
)


class TestArf:
    def test_unknot_framings(self):
        # +3 surgery on the unknot is L(3,2), -3 surgery is L(3,1)
        assert arf_from_surgery(3, 14) == 0
        assert arf_from_surgery(-3, 2) == 0

    def test_arf_one(self):
        assert arf_from_surgery(3, 6) == 1
        assert arf_from_surgery(-3, 10) == 1

    def test_incompatible(self):
        assert arf_from_surgery(3, 2) is None
        assert arf_from_surgery(-3, 6) is None

    def test_rejects_even_or_zero(self):
        with pytest.raises(DomainError):
            arf_from_surgery(4, 0)
        with pytest.raises(DomainError):
            arf_from_surgery(0, 0)

    def test_inverts_rokhlin_formula(self):
        for n in range(-25, 26):
            if n == 0 or n % 2 == 0:
                continue
            eps = 1 if n > 0 else -1
            for r in range(0, 16, 2):
                a = arf_from_surgery(n, r)
                if a is None:
                    continue
                assert (-(n - eps) + 8 * a) % 16 == r

    def test_matches_congruence_signs(self):
        for h in range(1, 30, 2):
            for r in range(0, 16, 2):
                allowed = congruence_obstruction(h, r)
                assert (arf_from_surgery(h, r) is not None) == ("+" in allowed)
                if h > 1:
                    assert (arf_from_surgery(-h, r) is not None) == ("-" in allowed)


class TestCongruence:
    def test_both_framings_excluded(self):
        assert congruence_obstruction(21, 8) == frozenset()

    def test_single_sign(self):
        assert congruence_obstruction(3, 2) == frozenset({"-"})
        assert congruence_obstruction(7, 6) == frozenset({"-"})
        assert congruence_obstruction(3, 14) == frozenset({"+"})

    def test_both_signs(self):
        assert congruence_obstruction(9, 0) == frozenset({"+", "-"})
        assert congruence_obstruction(5, 4) == frozenset({"+", "-"})
        assert congruence_obstruction(1, 0) == frozenset({"+", "-"})

    def test_rejects_even_h(self):
        with pytest.raises(DomainError):
            congruence_obstruction(4, 0)


class TestSurgeryCandidate:
    def test_forced_data(self):
        c = SurgeryCandidate(n=-3, rokhlin=2, genus_upper=0)
        assert (c.eps, c.mu, c.h) == (-1, 0, 3)
        c = SurgeryCandidate(n=3, rokhlin=6, genus_upper=2)
        assert (c.eps, c.mu) == (1, 1)

    def test_incompatible(self):
        with pytest.raises(DomainError):
            SurgeryCandidate(n=3, rokhlin=2, genus_upper=0)

    def test_negative_genus(self):
        with pytest.raises(DomainError):
            SurgeryCandidate(n=3, rokhlin=14, genus_upper=-1)


class TestSpinModel:
    def test_arf_zero(self):
        f = spin_surgery_model(CharSurfaceData(3, 0, 0, 1, 1))
        assert (f.sigma, f.b2) == (-2, 2)

    def test_arf_one(self):
        f = spin_surgery_model(CharSurfaceData(3, 0, 1, 1, 1))
        assert (f.sigma, f.b2) == (-10, 14)

    def test_genus_contributes(self):
        f = spin_surgery_model(CharSurfaceData(1, 1, 0, 1, 1))
        assert (f.sigma, f.b2) == (0, 2)

    def test_negative_framing(self):
        f = spin_surgery_model(CharSurfaceData(-3, 0, 1, -1, 1))
        assert (f.sigma, f.b2) == (10, 14)

    def test_rejects_bad_data(self):
        with pytest.raises(DomainError):
            CharSurfaceData(0, 0, 0, 0, 1)
        with pytest.raises(DomainError):
            CharSurfaceData(3, -1, 0, 0, 1)
        with pytest.raises(DomainError):
            CharSurfaceData(3, 0, 2, 0, 1)

    def test_impossible_geometry_rejected(self):
        # a genus zero surface in a tiny ambient gives negative b2
        with pytest.raises(DomainError):
            spin_surgery_model(CharSurfaceData(1, 0, 0, 0, 0))


class TestSurgeryBounds:
    def test_positive_framing(self):
        x = m_bounds_from_surgery(3, 14, 0)
        assert (x.m_lower, x.mbar_upper, x.rokhlin.value) == (
            Fraction(-9, 2),
            Fraction(-1, 2),
            14,
        )

    def test_trivial_framing(self):
        x = m_bounds_from_surgery(1, 0, 0)
        assert (x.m_lower, x.mbar_upper) == (0, 0)

    def test_negative_framing_matches_lens(self):
        x = m_bounds_from_surgery(-3, 2, 0)
        y = m_bounds(LensSpace(3, 1))
        assert (x.m_lower, x.mbar_upper, x.rokhlin) == (y.m_lower, y.mbar_upper, y.rokhlin)

    def test_arf_one_widening(self):
        x = m_bounds_from_surgery(3, 6, 0)
        assert (x.m_lower, x.mbar_upper) == (Fraction(-53, 2), Fraction(3, 2))

    def test_agrees_with_spin_model(self):
        rng = random.Random(23)
        for _ in range(200):
            n = rng.choice([k for k in range(-99, 100) if k % 2 != 0])
            g = rng.randint(0, 5)
            mu = rng.randint(0, 1)
            eps = 1 if n > 0 else -1
            r = (-(n - eps) + 8 * mu) % 16
            direct = m_bounds_from_surgery(n, r, g)
            filling = bound_from_filling(
                spin_surgery_model(CharSurfaceData(n, g, mu, eps, 1))
            )
            assert direct.m_lower == filling.m_lower
            assert direct.mbar_upper == filling.mbar_upper
            assert direct.rokhlin == filling.rokhlin


class TestSliceGenusLower:
    def test_series_values(self):
        assert slice_genus_lower(39, 2, Fraction(-3, 2)) == 3
        assert slice_genus_lower(71, 2, Fraction(-3, 2)) == 7

    def test_clamped_at_zero(self):
        assert slice_genus_lower(3, 14, Fraction(-9, 2)) == 0

    def test_unknot_consistent(self):
        # L(3,2) is +3 surgery on the unknot; the bound must allow genus 0
        assert slice_genus_lower(3, rokhlin(LensSpace(3, 2)), -Fraction(9, 2)) == 0

    def test_preconditions(self):
        with pytest.raises(DomainError):
            slice_genus_lower(5, 4, 0)
        with pytest.raises(DomainError):
            slice_genus_lower(9, 2, 0)
        with pytest.raises(DomainError):
            slice_genus_lower(4, 0, 0)


class TestQrObstruction:
    def test_obstructed(self):
        t = qr_obstruction(5, 2)
        assert t.verdict == "obstructed" and t.name == "square_class"
        assert qr_obstruction(15, 2).verdict == "obstructed"

    def test_passes(self):
        assert qr_obstruction(5, 1).verdict == "pass"
        assert qr_obstruction(7, 3).verdict == "pass"
        assert qr_obstruction(9, 2).verdict == "pass"

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError):
            qr_obstruction(4, 1)
        with pytest.raises(DomainError):
            qr_obstruction(9, 3)


class TestUnknottingObstruction:
    def test_obstructed(self):
        assert unknotting_one_obstruction(15).verdict == "obstructed"
        assert unknotting_one_obstruction(5).verdict == "obstructed"
        assert unknotting_one_obstruction(-15).verdict == "obstructed"

    def test_passes(self):
        assert unknotting_one_obstruction(7).verdict == "pass"
        assert unknotting_one_obstruction(9).verdict == "pass"

    def test_rejects_bad_input(self):
        with pytest.raises(DomainError):
            unknotting_one_obstruction(6)
        with pytest.raises(DomainError):
            unknotting_one_obstruction(1)


class TestObstructionReport:
    def test_congruence_rules_out(self):
        rep = obstruction_report(h=21, rokhlin=8)
        assert rep.conclusion == "not_integral_surgery_on_knot"
        assert rep.tests[0].name == "congruence"
        assert rep.tests[0].verdict == "obstructed"
        assert "link" in rep.tests[0].detail

    def test_forced_sign(self):
        rep = obstruction_report(h=3, rokhlin=2)
        assert rep.conclusion == "framing_sign_forced:-"
        rep = obstruction_report(h=3, rokhlin=14)
        assert rep.conclusion == "framing_sign_forced:+"

    def test_inconclusive(self):
        assert obstruction_report(h=9, rokhlin=0).conclusion == "inconclusive"
        assert obstruction_report(lens_pair=(7, 3)).conclusion == "inconclusive"

    def test_obstruction_beats_forced_sign(self):
        rep = obstruction_report(h=3, rokhlin=2, det=15)
        assert rep.conclusion == "not_integral_surgery_on_knot"
        assert [t.verdict for t in rep.tests] == ["pass", "obstructed"]

    def test_lens_only(self):
        rep = obstruction_report(lens_pair=(5, 2))
        assert rep.conclusion == "not_integral_surgery_on_knot"

    def test_to_dict(self):
        d = obstruction_report(h=9, rokhlin=0).to_dict()
        assert set(d) == {"tests", "conclusion"}
        assert set(d["tests"][0]) == {"name", "verdict", "detail"}

    def test_input_validation(self):
        with pytest.raises(DomainError):
            obstruction_report()
        with pytest.raises(DomainError):
            obstruction_report(h=9)


class TestSliceKnotSurgery:
    def test_unit_framing(self):
        assert slice_knot_surgery_class(1) == S3

    def test_reversed_lens(self):
        x = slice_knot_surgery_class(3)
        assert (x.m_lower, x.mbar_upper, x.rokhlin.value) == (
            Fraction(-9, 2),
            Fraction(-1, 2),
            14,
        )
        x = slice_knot_surgery_class(7)
        assert (x.m_lower, x.mbar_upper, x.rokhlin.value) == (
            Fraction(-27, 2),
            Fraction(-3, 2),
            10,
        )

    def test_matches_genus_zero_estimate(self):
        for n in (3, 7, 9, 11):
            x = slice_knot_surgery_class(n)
            y = m_bounds_from_surgery(n, x.rokhlin, 0)
            assert (x.m_lower, x.mbar_upper) == (y.m_lower, y.mbar_upper)

    def test_rejects_bad_framing(self):
        with pytest.raises(DomainError):
            slice_knot_surgery_class(4)
        with pytest.raises(DomainError):
            slice_knot_surgery_class(-3)


class TestDedekindLink:
    def test_rokhlin_residue_mod8(self):
        # R(L(p,q)) and 4 p^2 s(q,p) agree mod 8, with this sign
        mismatch_minus = 0
        for p in range(3, 62, 2):
            for q in range(1, p):
                if math.gcd(p, q) != 1:
                    continue
                r = rokhlin(LensSpace(p, q)).value
                scaled = 4 * p * p * dedekind_sum(q, p)
                assert scaled.denominator == 1
                assert (r - scaled.numerator) % 8 == 0
                if (r + scaled.numerator) % 8 != 0:
                    mismatch_minus += 1
        # the opposite sign convention is not merely untested, it fails
        assert mismatch_minus > 0


class TestUnknotSurgeryEqualsLens:
    def test_exact_agreement(self):
        # -n surgery on the unknot is L(n,1); the genus 0 estimate is sharp
        for n in range(3, 100, 2):
            r = rokhlin(LensSpace(n, 1))
            est = m_bounds_from_surgery(-n, r, 0)
            direct = m_bounds(LensSpace(n, 1))
            assert (est.m_lower, est.mbar_upper) == (direct.m_lower, direct.mbar_upper)
