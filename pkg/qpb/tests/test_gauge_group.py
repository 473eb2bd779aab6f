import pytest

from qpb.errors import DegreeMismatchError, NotAGaugeMapError, NotConvolutionInvertibleError
from qpb.fixtures import OMEGA_TRIVIAL, OMEGA_YM, UNIT_MODULUS, flat_points, random_connection, rng
from qpb.models.connection import QPC
from qpb.models.forms import BaseForm, GroupForm, Side
from qpb.models.gauge import TOTAL_SPACES, GaugeMap, total_basis
from qpb.models.scalar import ExactC, I
from qpb.models.sections import Section
from qpb.models.tensor import Tensor
from qpb.services import bundle_calculus, gauge_group, group_hopf

ALTERNATING = group_hopf.corep_catalog("alternating")
TRIVIAL = group_hopf.corep_catalog("trivial")
NU = BaseForm.of(1, 1, ExactC(0, 2))


class TestGaugeMaps:
    def test_total_basis_sizes(self):
        assert [len(total_basis(k)) for k in (0, 1, 2)] == [4, 8, 12]

    def test_images_must_keep_degree(self):
        with pytest.raises(DegreeMismatchError):
            GaugeMap({(0, 0): bundle_calculus.total(NU, GroupForm.unit())})

    def test_matrices_round_trip(self):
        f = gauge_group.shift_map(NU)
        matrices = f.to_dict()["matrices"]
        assert GaugeMap.from_matrices(matrices) == f

    @pytest.mark.parametrize(
        "f",
        [gauge_group.unit_map(), gauge_group.f_sigma(), gauge_group.phase_map(UNIT_MODULUS[1]), gauge_group.shift_map(NU)],
        ids=["unit", "sigma", "phase", "shift"],
    )
    def test_are_gauge_maps(self, f):
        assert gauge_group.is_gauge_map(f)

    def test_phase_one_is_unit(self):
        assert gauge_group.phase_map(1) == gauge_group.unit_map()

    def test_non_covariant_map(self):
        images = {
            (0, 0): bundle_calculus.total(BaseForm.unit(), GroupForm.delta(0)),
            (0, 1): bundle_calculus.total(BaseForm.unit(), GroupForm.delta(1)),
        }
        f = GaugeMap(images, "identity")
        assert "Ad-covariance fails" in gauge_group.gauge_violations(f)
        with pytest.raises(NotAGaugeMapError):
            gauge_group.gauge_action(f, OMEGA_YM)

    def test_shift_needs_one_form(self):
        with pytest.raises(NotAGaugeMapError):
            gauge_group.shift_map(BaseForm.unit())


class TestConvolution:
    def test_unit_is_neutral(self):
        f = gauge_group.phase_map(UNIT_MODULUS[2])
        unit = gauge_group.unit_map()
        assert gauge_group.convolve(unit, f) == f
        assert gauge_group.convolve(f, unit) == f

    def test_sigma_is_an_involution(self):
        sigma = gauge_group.f_sigma()
        assert gauge_group.convolve(sigma, sigma) == gauge_group.unit_map()
        assert gauge_group.conv_inverse(sigma) == sigma

    def test_phases_form_a_homomorphism(self):
        q1, q2 = UNIT_MODULUS[1], UNIT_MODULUS[3]
        product = gauge_group.convolve(gauge_group.phase_map(q1), gauge_group.phase_map(q2))
        assert product == gauge_group.phase_map(q1 * q2)

    def test_associativity(self):
        f, g, h = gauge_group.phase_map(I), gauge_group.shift_map(NU), gauge_group.f_sigma()
        left = gauge_group.convolve(gauge_group.convolve(f, g), h)
        right = gauge_group.convolve(f, gauge_group.convolve(g, h))
        assert left == right

    def test_inverse_of_shift(self):
        f = gauge_group.shift_map(NU)
        g = gauge_group.conv_inverse(f)
        assert gauge_group.convolve(f, g) == gauge_group.unit_map()
        assert gauge_group.convolve(g, f) == gauge_group.unit_map()

    def test_zero_divisor_has_no_inverse(self):
        """phase(0) sends the alternating element to zero."""
        f = gauge_group.phase_map(0)
        with pytest.raises(NotConvolutionInvertibleError):
            gauge_group.conv_inverse(f)
        assert not gauge_group.is_gauge_map(f)


class TestGaugeAction:
    def test_shift_translates_connections(self):
        omega = QPC(1, I)
        moved = gauge_group.gauge_action(gauge_group.shift_map(NU), omega)
        assert moved == QPC.from_mu(omega.mu + NU)

    def test_phases_fix_connections(self):
        gen = rng(31)
        for _ in range(3):
            omega = random_connection(gen)
            for q in UNIT_MODULUS:
                assert gauge_group.gauge_action(gauge_group.phase_map(q), omega) == omega

    def test_critical_points_are_fixed(self):
        sigma, unit = gauge_group.f_sigma(), gauge_group.unit_map()
        for omega in [OMEGA_TRIVIAL, OMEGA_YM] + flat_points(4):
            assert gauge_group.gauge_action(sigma, omega) == omega
            assert gauge_group.gauge_action(unit, omega) == omega

    def test_phase_on_sections(self):
        q = UNIT_MODULUS[1]
        t = Section.of(ALTERNATING, 2, ExactC(1, -1))
        f = gauge_group.phase_map(q)
        assert gauge_group.gauge_action(f, t, Side.LEFT) == t.with_p(t.p.scale(q))
        assert gauge_group.gauge_action(f, t, Side.RIGHT) == t.with_p(t.p.scale(q.conj()))

    def test_phase_leaves_trivial_sections(self):
        t = Section.of(TRIVIAL, 2, 3)
        assert gauge_group.gauge_action(gauge_group.phase_map(I), t) == t

    def test_composite_action(self):
        f, g = gauge_group.phase_map(UNIT_MODULUS[1]), gauge_group.phase_map(UNIT_MODULUS[2])
        t = Section.of(ALTERNATING, 1, I)
        composite = gauge_group.gauge_action(gauge_group.convolve(f, g), t)
        assert composite == gauge_group.gauge_action(f, gauge_group.gauge_action(g, t))

    def test_transform_preserves_total_unit(self):
        unit = bundle_calculus.total_unit()
        assert gauge_group.transform(gauge_group.f_sigma(), unit) == unit
        assert gauge_group.transform(gauge_group.f_sigma(), Tensor.zero(TOTAL_SPACES)).is_zero()


class TestYangMillsSubgroup:
    def test_sigma_is_in_the_subgroup(self):
        assert gauge_group.in_gg_ym(gauge_group.f_sigma())
        assert gauge_group.in_gg_ym(gauge_group.unit_map())

    def test_shift_is_not(self):
        assert not gauge_group.in_gg_ym(gauge_group.shift_map(NU))
