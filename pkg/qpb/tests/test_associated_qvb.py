from fractions import Fraction

import pytest

from qpb.errors import DegreeMismatchError, NotHorizontalError, UnsupportedCorepError
from qpb.fixtures import OMEGA_I_ZERO, OMEGA_ONE_ZERO, OMEGA_TRIVIAL, OMEGA_YM, random_connection, random_real_connection, random_section, rng
from qpb.models.forms import BaseForm, GroupForm, Side
from qpb.models.scalar import ExactC, I
from qpb.models.sections import AdForm, Section, VForm
from qpb.services import associated_qvb as qvb
from qpb.services import base_calculus, bundle_calculus, exact_linalg, group_hopf
from qpb.services.associated_qvb import LaplacianFormula

TRIVIAL = group_hopf.corep_catalog("trivial")
ALTERNATING = group_hopf.corep_catalog("alternating")
HALF = ExactC(Fraction(1, 2))


class TestSections:
    def test_embed_and_upsilon(self):
        p = BaseForm.of(0, 2, I)
        h = qvb.embed(p, ALTERNATING)
        assert qvb.upsilon(h, ALTERNATING, 0) == p

    def test_upsilon_rejects_non_multiples(self):
        h = bundle_calculus.total(BaseForm.of(0, 1, 0), GroupForm.delta(0))
        with pytest.raises(NotHorizontalError):
            qvb.upsilon(h, ALTERNATING, 0)

    def test_mor_check(self):
        p = BaseForm.of(0, 1, 3)
        assert qvb.mor_check(ALTERNATING, [qvb.section_tensor(Section(ALTERNATING, p))])
        assert qvb.mor_check(TRIVIAL, [qvb.section_tensor(Section(TRIVIAL, p))])
        assert not qvb.mor_check(ALTERNATING, [bundle_calculus.total(p, GroupForm.delta(0))])

    def test_mor_check_dimension(self):
        with pytest.raises(DegreeMismatchError):
            qvb.mor_check(ALTERNATING, [])

    @pytest.mark.parametrize("side", list(Side))
    def test_hermitian_structure_is_modulus(self, side):
        t = Section.of(ALTERNATING, ExactC(1, 2), 3)
        assert qvb.section_herm(t, t, side) == BaseForm.of(0, 5, 9)

    def test_hermitian_structure_requires_one_corep(self):
        with pytest.raises(UnsupportedCorepError):
            qvb.section_herm(Section.of(TRIVIAL, 1, 1), Section.of(ALTERNATING, 1, 1))

    def test_unsupported_corep(self):
        both = group_hopf.direct_sum(TRIVIAL, ALTERNATING)
        with pytest.raises(UnsupportedCorepError):
            qvb.nabla(OMEGA_YM, Section(both, BaseForm.unit()))


class TestCovariantDerivatives:
    def test_trivial_corep_is_plain_differential(self):
        p = BaseForm.of(0, 2, 5)
        for omega in (OMEGA_TRIVIAL, OMEGA_ONE_ZERO, OMEGA_YM):
            assert qvb.nabla(omega, Section(TRIVIAL, p)).comp == base_calculus.d(p)

    def test_alternating_left(self):
        t = Section.of(ALTERNATING, 1, 0)
        assert qvb.nabla(OMEGA_ONE_ZERO, t).comp == BaseForm.of(1, ExactC(2, -1), I)

    def test_alternating_right(self):
        t = Section.of(ALTERNATING, 1, 0)
        value = qvb.nabla_hat(OMEGA_ONE_ZERO, t)
        assert value.side == Side.RIGHT
        assert value.comp == BaseForm.of(1, -I, ExactC(2, 1))

    def test_second_derivative_is_curvature(self):
        gen = rng(21)
        for omega in [OMEGA_ONE_ZERO, OMEGA_YM] + [random_connection(gen) for _ in range(3)]:
            t = random_section(gen, ALTERNATING)
            twice = qvb.ext_cov_deriv(omega, qvb.nabla(omega, t))
            expected = base_calculus.mul(t.p, bundle_calculus.curvature(omega)).scale(2)
            assert twice.comp == expected

    def test_second_derivative_vanishes_on_trivial_corep(self):
        t = Section.of(TRIVIAL, 3, ExactC(1, 1))
        assert qvb.ext_cov_deriv(OMEGA_YM, qvb.nabla(OMEGA_YM, t)).comp.is_zero()

    def test_degree_limits(self):
        with pytest.raises(DegreeMismatchError):
            qvb.ext_cov_deriv(OMEGA_YM, VForm(ALTERNATING, BaseForm.of(2, 1, 1)))
        with pytest.raises(DegreeMismatchError):
            qvb.adjoint_ext_cov(OMEGA_YM, VForm(ALTERNATING, BaseForm.unit()))

    def test_gram_is_half_identity(self):
        for side in Side:
            for degree in (0, 1, 2):
                rows = exact_linalg.to_rows(qvb.vform_gram(ALTERNATING, degree, side))
                assert rows == [[HALF, 0], [0, HALF]]

    def test_adjoint_identity(self):
        gen = rng(22)
        omega = random_connection(gen)
        for side in Side:
            t = random_section(gen, ALTERNATING)
            psi = VForm(ALTERNATING, BaseForm(1, (ExactC(1, 2), ExactC(-1, 1))), side)
            x = VForm(ALTERNATING, t.p, side)
            lhs = qvb.vform_inner(psi, qvb.ext_cov_deriv(omega, x))
            rhs = qvb.vform_inner(qvb.adjoint_ext_cov(omega, psi), x)
            assert lhs == rhs


class TestLaplacian:
    @pytest.mark.parametrize("side", list(Side))
    def test_identity_at_critical_connection(self, side):
        for e in BaseForm.basis_elements(0):
            t = Section(ALTERNATING, e)
            assert qvb.laplacian(OMEGA_YM, t, side) == t

    @pytest.mark.parametrize("side", list(Side))
    def test_formulas_agree_on_real_connections(self, side):
        gen = rng(23)
        for _ in range(4):
            omega = random_real_connection(gen)
            for corep in (TRIVIAL, ALTERNATING):
                t = random_section(gen, corep)
                composite = qvb.laplacian(omega, t, side, LaplacianFormula.COMPOSITE)
                assert composite == qvb.laplacian(omega, t, side)
                assert qvb.laplacian_discrepancy(omega, t, side).is_zero()

    def test_formulas_differ_off_the_real_locus(self):
        t = Section.of(ALTERNATING, 1, 0)
        composite = qvb.laplacian(OMEGA_ONE_ZERO, t, formula=LaplacianFormula.COMPOSITE)
        assert composite.p == BaseForm.of(0, 6, ExactC(-2, -2))
        assert qvb.laplacian_discrepancy(OMEGA_ONE_ZERO, t) == BaseForm.of(0, ExactC(-4, 2), ExactC(0, -2))

    @pytest.mark.parametrize("side", list(Side))
    def test_default_is_component_formulas(self, side):
        t = Section.of(ALTERNATING, 1, 0)
        assert qvb.laplacian(OMEGA_ONE_ZERO, t, side) == qvb.laplacian_transcribed(OMEGA_ONE_ZERO, t, side)

    def test_component_formulas_at_one_zero(self):
        t = Section.of(ALTERNATING, 1, 0)
        assert qvb.laplacian(OMEGA_ONE_ZERO, t).p == BaseForm.of(0, ExactC(2, 2), ExactC(-2, -4))

    def test_component_formulas_at_i_zero(self):
        t = Section.of(ALTERNATING, 1, 0)
        assert qvb.laplacian(OMEGA_I_ZERO, t).p == BaseForm.of(0, 0, 2)

    def test_trivial_corep_laplacian(self):
        t = Section.of(TRIVIAL, 3, 1)
        assert qvb.laplacian(OMEGA_YM, t) == Section.of(TRIVIAL, 4, -4)


class TestKLambda:
    def test_left(self):
        t = Section.of(ALTERNATING, 2, I)
        nu = BaseForm.of(1, 1, ExactC(1, 1))
        assert qvb.k_lambda(AdForm(nu), t).comp == base_calculus.mul(t.p, nu).scale(2)

    def test_right(self):
        t = Section.of(ALTERNATING, 2, I)
        nu = BaseForm.of(1, 1, ExactC(1, 1))
        value = qvb.k_lambda(AdForm(nu), t, Side.RIGHT)
        assert value.comp == base_calculus.mul(base_calculus.star(nu), t.p).scale(2)

    def test_vanishes_on_trivial_corep(self):
        t = Section.of(TRIVIAL, 2, I)
        assert qvb.k_lambda(AdForm(BaseForm.of(1, 1, 1)), t).comp.is_zero()

    def test_needs_one_form(self):
        with pytest.raises(DegreeMismatchError):
            qvb.k_lambda(AdForm(BaseForm.unit()), Section.of(ALTERNATING, 1, 1))
