import numpy as np
import pytest

from qpb.config import SolverOptions
from qpb.errors import ConvergenceError
from qpb.fixtures import OMEGA_YM, clear_all
from qpb.models.connection import QPC
from qpb.models.potential import Potential
from qpb.models.results import CriticalPoint, PointKind
from qpb.models.scalar import ExactC, I
from qpb.services import bundle_calculus, field_theory
from qpb.services.solver import (
    SolverEngine,
    classify,
    damped_newton,
    enumerate_flat,
    exact_connection,
    fd_jacobian,
    find_critical_ym,
    find_critical_ymsm,
    flat_partner,
    random_seeds,
)


@pytest.fixture(autouse=True)
def clean_runs():
    clear_all()
    yield
    clear_all()


class TestNewton:
    def test_jacobian_of_linear_map(self):
        a = np.array([[1.0, 2.0], [3.0, -1.0]])
        jac = fd_jacobian(lambda x: a @ x, np.array([0.3, -0.2]), 1e-6)
        assert np.allclose(jac, a)

    def test_converges_on_a_simple_system(self):
        def fn(x):
            return np.array([x[0] ** 2 - 4.0, x[1] - 1.0])

        result = damped_newton(fn, np.array([1.0, 0.0]), SolverOptions())
        assert result.converged
        assert np.allclose(result.x, [2.0, 1.0])
        assert result.residual_norm < 1e-9
        assert result.trace

    def test_empty_parameter_vector(self):
        result = damped_newton(lambda x: np.zeros(2), np.zeros(0), SolverOptions())
        assert result.converged
        assert result.iterations == 0


class TestSeedsAndSnapping:
    def test_random_seeds_are_reproducible(self):
        first = random_seeds(5, seed=3)
        assert first == random_seeds(5, seed=3)
        assert len(first) == 5
        for l0, l1 in first:
            assert abs(l0) ** 2 + abs(l1) ** 2 <= 4.0 + 1e-12

    def test_flat_partner(self):
        for lambda0 in (ExactC(1), I, ExactC(2, -3)):
            omega = QPC(lambda0, flat_partner(lambda0))
            assert not bundle_calculus.curvature_scalar(omega)

    def test_flat_enumeration_reports_the_pole(self):
        entries = enumerate_flat([1, "1/2 i"])
        assert entries[0].omega is not None
        assert entries[1].omega is None
        assert "no flat completion" in entries[1].error

    def test_snaps_to_critical_connection(self):
        omega, distance = exact_connection((0.5j + 1e-9, 0.5j - 1e-9), SolverOptions())
        assert omega == OMEGA_YM
        assert distance < 1e-8

    def test_snaps_onto_flat_locus(self):
        lambda0 = 0.3 + 0.1j
        lambda1 = -lambda0 / (1 + 2j * lambda0)
        omega, _ = exact_connection((lambda0, lambda1), SolverOptions())
        assert not bundle_calculus.curvature_scalar(omega)


class TestYangMillsSearch:
    @pytest.mark.parametrize("seed", [(0.4j, 0.6j), (0.01 + 0.5j, -0.02 + 0.48j)], ids=["(0.4i,0.6i)", "near"])
    def test_seed_reaches_non_flat_point(self, seed):
        point = find_critical_ym(seed)
        assert point.omega == OMEGA_YM
        assert point.kind == PointKind.YM_NONFLAT
        assert point.exactified

    @pytest.mark.parametrize("seed", [(0j, 0j), (2 + 0j, 2 + 0j)], ids=["(0,0)", "(2,2)"])
    def test_seed_reaches_flat_locus(self, seed):
        point = find_critical_ym(seed)
        assert point.kind == PointKind.FLAT
        assert point.exactified
        assert not bundle_calculus.curvature_scalar(point.omega)

    def test_generic_seed_is_certified(self):
        point = find_critical_ym((1 + 0j, 0j))
        assert point.exactified
        assert field_theory.ym_residual(point.omega).is_zero()

    def test_budget_exhaustion(self):
        with pytest.raises(ConvergenceError) as info:
            find_critical_ym((1 + 0j, 0j), SolverOptions(max_iter=1))
        assert info.value.trace

    def test_classify(self):
        point = CriticalPoint(omega=OMEGA_YM, kind=PointKind.YM_NONFLAT, certificate=(), exactified=True)
        info = classify(point)
        assert info["action"] == "-1/8"
        assert not info["flat"]
        assert info["real"]
        assert info["orbit_fixed"]


class TestYangMillsScalarSearch:
    def test_trivial_corep_example_potential(self):
        point = find_critical_ymsm("trivial", Potential.paper_example(2, 1))
        assert point.exactified
        assert point.kind == PointKind.MATTER
        t1, t2 = point.sections
        assert t1.p.c == (ExactC(2), ExactC(1))
        assert t2.p.c == (ExactC(2), ExactC(1))

    def test_frozen_connection(self):
        point = find_critical_ymsm(
            "trivial", Potential.paper_example(3, 2), omega_seed=(0.5j, 0.5j), freeze_omega=True
        )
        assert point.omega == OMEGA_YM
        assert point.exactified

    @pytest.mark.parametrize(
        "potential",
        [Potential.zero(), Potential.identity(), Potential.polynomial(1, 0, 1), Potential.paper_example(2, 1)],
        ids=["zero", "identity", "polynomial", "paper_example"],
    )
    def test_float_path_runs_for_every_potential(self, potential):
        opts = SolverOptions(max_iter=5)
        try:
            point = find_critical_ymsm("alternating", potential, opts=opts)
        except ConvergenceError as exc:
            assert exc.trace
        else:
            assert point.kind == PointKind.MATTER

    def test_alternating_at_critical_connection(self):
        point = find_critical_ymsm(
            "alternating",
            Potential.identity(),
            omega_seed=(0.5j, 0.5j),
            section_seed=(1, 1, 1, 1),
            freeze_omega=True,
        )
        assert point.omega == OMEGA_YM
        assert point.exactified
        t1, t2 = point.sections
        assert t1.p.c == (ExactC(1), ExactC(1))
        assert t2.p.c == (ExactC(1), ExactC(1))

    def test_alternating_violation_has_no_certificate(self):
        with pytest.raises(ConvergenceError):
            find_critical_ymsm(
                "alternating",
                Potential.identity(),
                omega_seed=(0.5j, 0.5j),
                section_seed=(1, 1, 1, -1),
                freeze_omega=True,
                freeze_sections=True,
            )


class TestSolverEngine:
    def test_hundred_seeds_all_certify(self):
        run = SolverEngine().run_ym(seeds=100, seed=0)
        assert run.failures == []
        assert len(run.points) == 100
        assert all(point["exactified"] for point in run.points)

    def test_ym_run_is_stored(self):
        engine = SolverEngine()
        run = engine.run_ym(seeds=3, seed=1)
        assert run.mode == "ym"
        assert len(run.points) + len(run.failures) == 3
        assert engine.get_run(run.id) is run
        assert engine.list_runs() == [run]

    def test_ymsm_run(self):
        engine = SolverEngine()
        run = engine.run_ymsm("trivial", Potential.paper_example(2, 1))
        assert run.mode == "ymsm"
        assert len(run.points) == 1
        assert run.points[0]["exactified"]
        assert run.points[0]["classification"]["kind"] == "matter"
        assert run.config["potential"] == {"kind": "paper_example", "x": "2", "y": "1"}
