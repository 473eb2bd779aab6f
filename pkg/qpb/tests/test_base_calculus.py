from fractions import Fraction

import pytest

from qpb.errors import DegreeMismatchError
from qpb.models.forms import BaseForm, MixedForm, Side
from qpb.models.scalar import ExactC, I
from qpb.services import base_calculus as bc
from qpb.services import exact_linalg


def form(degree, c0, c1):
    return BaseForm.of(degree, c0, c1)


class TestProducts:
    def test_zero_forms_multiply_pointwise(self):
        assert bc.mul(form(0, 2, 3), form(0, 5, 7)) == form(0, 10, 21)

    def test_one_form_times_function_swaps_entries(self):
        assert bc.mul(form(1, 1, 2), form(0, 5, 7)) == form(1, 7, 10)
        assert bc.mul(form(0, 5, 7), form(1, 1, 2)) == form(1, 5, 14)

    def test_two_one_forms_carry_the_phase(self):
        assert bc.mul(form(1, 1, 2), form(1, 3, 5)) == BaseForm(2, (5 * I, 6 * I))

    def test_truncation_above_degree_two(self):
        assert bc.mul(form(2, 1, 1), form(1, 1, 1)) == BaseForm.zero(3)

    def test_unit(self):
        a = form(1, ExactC(1, 2), 3)
        assert bc.mul(BaseForm.unit(), a) == a
        assert bc.mul(a, BaseForm.unit()) == a


class TestDifferential:
    def test_d_on_functions(self):
        assert bc.d(form(0, 1, 0)) == BaseForm(1, (-I, I))

    def test_d_on_one_forms(self):
        assert bc.d(form(1, 2, 3)) == form(2, -5, -5)

    def test_d_squared(self):
        for e in BaseForm.basis_elements(0):
            assert bc.d(bc.d(e)).is_zero()

    def test_leibniz_on_functions(self):
        a, b = form(0, 2, ExactC(0, 1)), form(0, -1, 3)
        assert bc.d(bc.mul(a, b)) == bc.mul(bc.d(a), b) + bc.mul(a, bc.d(b))

    def test_leibniz_with_one_form(self):
        a, b = form(1, 1, ExactC(2, 1)), form(0, 3, -1)
        assert bc.d(bc.mul(a, b)) == bc.mul(bc.d(a), b) - bc.mul(a, bc.d(b))



class TestMixedForms:
    def test_product_collects_degrees(self):
        a = MixedForm.of(form(0, 2, 3), form(1, 1, 2))
        assert bc.mixed_mul(a, MixedForm.of(form(0, 5, 7))) == MixedForm.of(form(0, 10, 21), form(1, 7, 10))
        assert bc.mixed_mul(a, MixedForm.of(form(1, 3, 5))) == MixedForm.of(form(1, 6, 15), BaseForm(2, (5 * I, 6 * I)))

    def test_grade_involution(self):
        a = MixedForm.of(form(0, 1, 2), form(1, 3, 4), form(2, 5, 6))
        assert a.grade_involution() == MixedForm.of(form(0, 1, 2), form(1, -3, -4), form(2, 5, 6))
        assert a.grade_involution().grade_involution() == a

    def test_leibniz(self):
        a = MixedForm.of(form(0, 2, I), form(1, 1, -1))
        b = MixedForm.of(form(0, -1, 3), form(1, ExactC(1, 2), 0), form(2, 1, 1))
        lhs = bc.mixed_d(bc.mixed_mul(a, b))
        assert lhs == bc.mixed_mul(bc.mixed_d(a), b) + bc.mixed_mul(a.grade_involution(), bc.mixed_d(b))

    def test_d_squared(self):
        a = MixedForm.of(form(0, 1, 0), form(1, 2, 3))
        assert bc.mixed_d(bc.mixed_d(a)).is_zero()
        assert bc.mixed_d(a) == MixedForm.of(BaseForm(1, (-I, I)), form(2, -5, -5))


class TestStarAndIntegration:
    def test_star_swaps_one_forms(self):
        assert bc.star(form(1, ExactC(1, 2), ExactC(3, -1))) == form(1, ExactC(3, 1), ExactC(1, -2))

    def test_volume_form(self):
        assert bc.dvol() == BaseForm(2, (-I, I))
        assert bc.integral(bc.dvol()) == 1

    def test_integral_of_p0_dp1_dp0(self):
        p0, p1 = form(0, 1, 0), form(0, 0, 1)
        assert bc.integral(bc.mul(bc.mul(p0, bc.d(p1)), bc.d(p0))) == Fraction(1, 2)

    def test_integral_needs_two_form(self):
        with pytest.raises(DegreeMismatchError):
            bc.integral(form(1, 1, 1))


class TestHodge:
    @pytest.mark.parametrize("side", list(Side))
    def test_hodge_is_an_involution(self, side):
        for k in range(3):
            for e in BaseForm.basis_elements(k):
                assert bc.hodge(bc.hodge(e, side), side) == e

    @pytest.mark.parametrize("side", list(Side))
    def test_codiff_is_hodge_d_hodge(self, side):
        for k in (1, 2):
            for e in BaseForm.basis_elements(k):
                assert bc.codiff(e, side) == bc.hodge_codiff(e, side)

    def test_codiff_displays(self):
        assert bc.codiff(form(1, 3, 1)) == BaseForm(0, (2 * I, -2 * I))
        assert bc.codiff(form(2, 1, 2)) == form(1, -3, -3)

    @pytest.mark.parametrize("side", list(Side))
    def test_codiff_is_adjoint_of_d(self, side):
        for k in range(2):
            for eta in BaseForm.basis_elements(k):
                for eta_hat in BaseForm.basis_elements(k + 1):
                    assert bc.inner(eta_hat, bc.d(eta), side) == bc.inner(bc.codiff(eta_hat, side), eta, side)

    def test_gram_matrices_are_half_identity(self):
        half = ExactC(Fraction(1, 2))
        for k in range(3):
            for side in Side:
                assert exact_linalg.to_rows(bc.gram(k, side)) == [[half, 0], [0, half]]

    def test_herm_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            bc.herm(form(0, 1, 1), form(1, 1, 1))
