from fractions import Fraction

import numpy as np
import pytest

from qpb.errors import ParseError, UnsupportedCorepError
from qpb.fixtures import (
    OMEGA_I_ZERO,
    OMEGA_ONE_ZERO,
    OMEGA_TRIVIAL,
    OMEGA_YM,
    flat_points,
    random_connection,
    random_section,
    rng,
)
from qpb.models.forms import BaseForm
from qpb.models.potential import Potential, PotentialKind
from qpb.models.scalar import ExactC, I
from qpb.models.sections import Section
from qpb.services import field_theory, group_hopf
from qpb.services.verification import ALTERNATING_SAMPLES, ALTERNATING_VIOLATION, TRIVIAL_TRIPLETS, alternating_pair

TRIVIAL = group_hopf.corep_catalog("trivial")
ALTERNATING = group_hopf.corep_catalog("alternating")
POTENTIALS = [
    Potential.zero(),
    Potential.identity(),
    Potential.polynomial(1, ExactC(0, 1), 2, -1),
    Potential.paper_example(2, 1),
    Potential.paper_example(3, 2).with_shift(BaseForm.of(0, ExactC(1, 2), -1)),
]
POTENTIAL_IDS = ["zero", "identity", "polynomial", "paper_example", "paper_example_shifted"]


class TestYangMillsAction:
    def test_value_at_critical_connection(self):
        assert field_theory.action_ym(OMEGA_YM) == Fraction(-1, 8)

    def test_value_at_one_zero(self):
        assert field_theory.action_ym(OMEGA_ONE_ZERO) == Fraction(-1, 2)

    def test_flat_connections_have_zero_action(self):
        assert field_theory.action_ym(OMEGA_TRIVIAL) == 0
        for omega in flat_points(3):
            assert field_theory.action_ym(omega) == 0

    def test_definitional_matches_closed_form(self):
        gen = rng(41)
        for _ in range(5):
            omega = random_connection(gen)
            assert field_theory.action_ym(omega) == field_theory.action_ym_closed(omega)


class TestYangMillsEquation:
    def test_critical_points(self):
        for omega in [OMEGA_TRIVIAL, OMEGA_YM] + flat_points(4):
            assert field_theory.ym_residual(omega).is_zero()

    @pytest.mark.parametrize("omega", [OMEGA_ONE_ZERO, OMEGA_I_ZERO], ids=["(1,0)", "(i,0)"])
    def test_non_critical_points(self, omega):
        assert not field_theory.ym_residual(omega).is_zero()

    def test_residual_labels(self):
        assert field_theory.ym_residual(OMEGA_YM).labels == ["e0", "e1", "i*e0", "i*e1"]

    def test_pairing_matches_closed_form(self):
        gen = rng(42)
        for _ in range(4):
            omega = random_connection(gen)
            for _, nu in field_theory.LAMBDA_BASIS:
                assert field_theory.ym_pairing(omega, nu) == field_theory.ym_pairing_closed(omega, nu)

    def test_pairing_at_one_zero(self):
        assert field_theory.ym_pairing(OMEGA_ONE_ZERO, BaseForm.basis(1, 0)) == 2

    def test_float_pairing_agrees(self):
        gen = rng(43)
        omega = random_connection(gen)
        exact = [complex(field_theory.ym_pairing(omega, BaseForm.basis(1, k))) for k in (0, 1)]
        approx = field_theory.ym_pairing_approx(complex(omega.lambda0), complex(omega.lambda1))
        assert np.allclose(approx, exact)

    def test_rhs_ratio(self):
        assert field_theory.alt_rhs_ratio(OMEGA_ONE_ZERO) == -2
        assert field_theory.alt_rhs_ratio(OMEGA_YM) is None

    def test_continuity(self):
        gen = rng(44)
        for omega in [OMEGA_TRIVIAL, OMEGA_YM, random_connection(gen), random_connection(gen)]:
            assert field_theory.continuity_check(omega)


class TestScalarMatter:
    def test_zero_sections_reduce_to_yang_mills(self):
        zero = Section.of(ALTERNATING, 0, 0)
        for omega in (OMEGA_YM, OMEGA_ONE_ZERO):
            value = field_theory.action_ymsm(omega, zero, zero, Potential.identity())
            assert value == field_theory.action_ym(omega)

    def test_sections_must_be_conjugate(self):
        with pytest.raises(UnsupportedCorepError):
            field_theory.ymsm_residuals(OMEGA_YM, Section.of(TRIVIAL, 1, 1), Section.of(ALTERNATING, 1, 1), Potential.zero())

    def test_trivial_corep_triplets(self):
        """(omega, diag(x, y), diag(x, y)) solves the system for the example potential."""
        for x, y in TRIVIAL_TRIPLETS:
            t = Section.of(TRIVIAL, x, y)
            for omega in [OMEGA_TRIVIAL, OMEGA_YM] + flat_points(2):
                residuals = field_theory.ymsm_residuals(omega, t, t, Potential.paper_example(x, y))
                assert residuals.is_zero()

    def test_wrong_potential_breaks_the_triplet(self):
        t = Section.of(TRIVIAL, 2, 1)
        residuals = field_theory.ymsm_residuals(OMEGA_YM, t, t, Potential.identity())
        assert residuals.connection_eq.is_zero()
        assert not residuals.left_section_eq.is_zero()

    def test_alternating_reduction(self):
        for sample in ALTERNATING_SAMPLES:
            t1, t2 = alternating_pair(sample)
            alt_connection_eq, alt_section_eq = field_theory.alt_component_equations(OMEGA_YM, t1, t2)
            assert alt_connection_eq.is_zero() and alt_section_eq.is_zero()

    def test_alternating_violation(self):
        t1, t2 = alternating_pair(ALTERNATING_VIOLATION)
        alt_connection_eq, _ = field_theory.alt_component_equations(OMEGA_YM, t1, t2)
        assert not alt_connection_eq.is_zero()

    def test_component_equations_need_alternating(self):
        t = Section.of(TRIVIAL, 1, 1)
        with pytest.raises(UnsupportedCorepError):
            field_theory.alt_component_equations(OMEGA_YM, t, t)

    @pytest.mark.parametrize("potential", POTENTIALS, ids=POTENTIAL_IDS)
    @pytest.mark.parametrize("corep", [TRIVIAL, ALTERNATING], ids=["trivial", "alternating"])
    def test_float_residuals_agree(self, corep, potential):
        gen = rng(45)
        omega = random_connection(gen)
        t1, t2 = random_section(gen, corep), random_section(gen, corep)
        exact = field_theory.ymsm_residuals(omega, t1, t2, potential)
        params = np.array([complex(z) for z in (omega.lambda0, omega.lambda1, *t1.p.c, *t2.p.c)])
        approx = field_theory.ymsm_residual_approx(params, corep.name, potential)
        expected = [exact.connection_eq["e0"], exact.connection_eq["e1"], *exact.left_section_eq.values, *exact.right_section_eq.values]
        flat = np.concatenate([[complex(z).real, complex(z).imag] for z in expected])
        assert np.allclose(approx, flat)

    def test_connection_eq_real_part(self):
        t = Section.of(ALTERNATING, I, 1)
        residuals = field_theory.ymsm_residuals(OMEGA_ONE_ZERO, t, t, Potential.zero())
        assert residuals.connection_eq_real.values == [ExactC(v.re) for v in residuals.connection_eq.values]
        assert residuals.to_dict()["is_zero"] is False


class TestPotential:
    def test_parse(self):
        assert Potential.parse("zero") == Potential.zero()
        assert Potential.parse("identity") == Potential.identity()
        assert Potential.parse("poly:1,0,i") == Potential.polynomial(1, 0, I)
        assert Potential.parse("paper:2,1") == Potential.paper_example(2, 1)

    def test_tuned_is_an_alias(self):
        potential = Potential.parse("tuned:3,2")
        assert potential.kind == PotentialKind.PAPER_EXAMPLE
        assert potential == Potential.parse("paper:3,2")

    @pytest.mark.parametrize("text", ["cubic", "paper:2", "paper:0,1", "poly:x"])
    def test_parse_errors(self, text):
        with pytest.raises(ParseError):
            Potential.parse(text)

    def test_example_slope(self):
        p = BaseForm.of(0, 5, 7)
        assert Potential.paper_example(2, 1).derivative(p) == BaseForm.of(0, 1, -2)
        assert Potential.paper_example(2, 1).value(p) == BaseForm.of(0, 5, -14)

    def test_shift(self):
        shifted = Potential.identity().with_shift(BaseForm.of(0, 1, -1))
        assert shifted.derivative(BaseForm.of(0, 3, 3)) == BaseForm.of(0, 2, 0)
        assert shifted.to_dict()["shift"] == ["1", "-1"]
