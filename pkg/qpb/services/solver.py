"""Critical-point search for the Yang-Mills and Yang-Mills-scalar actions.

The iteration works on float64 residual vectors (``field_theory.*_approx``)
with a damped Gauss-Newton method: central finite-difference Jacobian,
Tikhonov-regularized normal equations solved with scipy, and a halving line
search that only accepts steps which decrease ``||r||^2``. A converged point
is snapped to Gaussian rationals and certified with the exact residuals.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence
from uuid import UUID

import numpy as np
import scipy.linalg

from qpb.config import SolverOptions, get_settings
from qpb.errors import ConvergenceError, NotSnappableError, QPBError
from qpb.models.connection import QPC
from qpb.models.potential import Potential
from qpb.models.reports import SolveRun
from qpb.models.results import CriticalPoint, PointKind
from qpb.models.scalar import ExactC, I
from qpb.models.sections import Section
from qpb.services import bundle_calculus, field_theory, gauge_group, group_hopf
from qpb.services.scalar_arith import from_approx, snap_nearest
from qpb.status import get_status_tracker

logger = logging.getLogger(__name__)

YM_POINT = (0.5j, 0.5j)
# radius within which a converged point is matched to a known critical set
MATCH_RADIUS = 1e-6


@dataclass
class NewtonResult:
    x: np.ndarray
    residual: np.ndarray
    iterations: int
    converged: bool
    trace: list[dict] = field(default_factory=list)

    @property
    def residual_norm(self) -> float:
        return float(np.linalg.norm(self.residual))


def fd_jacobian(fn: Callable[[np.ndarray], np.ndarray], x: np.ndarray, h: float) -> np.ndarray:
    """Central finite-difference Jacobian."""
    columns = []
    for j in range(x.size):
        e = np.zeros_like(x)
        e[j] = h
        columns.append((fn(x + e) - fn(x - e)) / (2 * h))
    return np.column_stack(columns)


def damped_newton(fn: Callable[[np.ndarray], np.ndarray], x0: np.ndarray, opts: SolverOptions) -> NewtonResult:
    """Gauss-Newton on ``r(x) = 0`` with Tikhonov damping and monotone backtracking."""
    x = np.asarray(x0, dtype=float).copy()
    r = fn(x)
    trace: list[dict] = []
    if x.size == 0:
        return NewtonResult(x, r, 0, True, trace)
    for iteration in range(1, opts.max_iter + 1):
        norm = float(np.linalg.norm(r))
        if norm < opts.residual_tol:
            return NewtonResult(x, r, iteration - 1, True, trace)
        jac = fd_jacobian(fn, x, opts.fd_step)
        lhs = jac.T @ jac + opts.damping * np.eye(x.size)
        step = scipy.linalg.solve(lhs, -jac.T @ r, assume_a="pos")
        t = 1.0
        for _ in range(opts.max_backtracks):
            trial = fn(x + t * step)
            if np.linalg.norm(trial) < norm:
                break
            t *= 0.5
        else:
            logger.debug("no descent after %d halvings at |r| = %.3e", opts.max_backtracks, norm)
            return NewtonResult(x, r, iteration - 1, False, trace)
        x = x + t * step
        r = trial
        step_norm = float(np.linalg.norm(t * step))
        trace.append({"iteration": iteration, "residual_norm": float(np.linalg.norm(r)), "step": step_norm, "t": t})
        logger.debug("iteration %d: |r| = %.3e, |step| = %.3e", iteration, trace[-1]["residual_norm"], step_norm)
        if step_norm < opts.step_tol:
            return NewtonResult(x, r, iteration, True, trace)
    return NewtonResult(x, r, opts.max_iter, float(np.linalg.norm(r)) < opts.residual_tol, trace)


def _to_real(values: Sequence[complex]) -> np.ndarray:
    return np.array([part for z in values for part in (z.real, z.imag)], dtype=float)


def _to_complex(x: np.ndarray) -> np.ndarray:
    return x[0::2] + 1j * x[1::2]


def random_seeds(count: int, seed: int = 0, radius: float = 2.0) -> list[tuple[complex, complex]]:
    """Uniform samples of ``(lambda0, lambda1)`` in the real 4-ball of the given radius."""
    rng = np.random.default_rng(seed)
    seeds = []
    for _ in range(count):
        direction = rng.normal(size=4)
        direction /= np.linalg.norm(direction)
        point = direction * radius * rng.uniform() ** 0.25
        seeds.append((complex(point[0], point[1]), complex(point[2], point[3])))
    return seeds


def flat_partner(lambda0: ExactC) -> ExactC:
    """The unique lambda1 with u(lambda0, lambda1) = 0."""
    return -lambda0 / (1 + 2 * I * lambda0)


@dataclass(frozen=True)
class FlatEntry:
    lambda0: ExactC
    omega: Optional[QPC] = None
    error: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "lambda0": str(self.lambda0),
            "omega": self.omega.to_dict() if self.omega else None,
            "error": self.error,
        }


def enumerate_flat(samples: Sequence) -> list[FlatEntry]:
    entries = []
    for value in samples:
        lambda0 = ExactC.coerce(value)
        if not (1 + 2 * I * lambda0):
            entries.append(FlatEntry(lambda0, error=f"no flat completion for lambda0 = {lambda0}"))
            continue
        entries.append(FlatEntry(lambda0, omega=QPC(lambda0, flat_partner(lambda0))))
    return entries


def exact_connection(lam: Sequence[complex], opts: SolverOptions) -> tuple[QPC, float]:
    """Snap a converged connection; returns the exact point and its distance to ``lam``.

    Points near ``(i/2, i/2)`` snap to it; points near the flat locus snap the
    better-conditioned coordinate and complete the other one exactly.
    """
    lam = (complex(lam[0]), complex(lam[1]))
    if max(abs(lam[0] - YM_POINT[0]), abs(lam[1] - YM_POINT[1])) < MATCH_RADIUS:
        omega = QPC.yang_mills()
    elif abs(field_theory.curvature_scalar_approx(*lam)) < MATCH_RADIUS:
        k = 0 if abs(1 + 2j * lam[0]) >= abs(1 + 2j * lam[1]) else 1
        anchor = snap_nearest(lam[k], opts.max_denom)
        partner = flat_partner(anchor)
        omega = QPC(anchor, partner) if k == 0 else QPC(partner, anchor)
    else:
        omega = QPC(
            from_approx(lam[0], opts.snap_tol, opts.max_denom),
            from_approx(lam[1], opts.snap_tol, opts.max_denom),
        )
    distance = max(abs(complex(omega.lambda0) - lam[0]), abs(complex(omega.lambda1) - lam[1]))
    return omega, float(distance)


def _connection_kind(omega: QPC) -> PointKind:
    return PointKind.FLAT if not bundle_calculus.curvature_scalar(omega) else PointKind.YM_NONFLAT


def find_critical_ym(seed: Sequence[complex], opts: Optional[SolverOptions] = None) -> CriticalPoint:
    opts = opts or get_settings().solver_options()
    result = damped_newton(lambda x: field_theory.ym_residual_approx(_to_complex(x)), _to_real(seed), opts)
    if result.residual_norm > opts.accept_tol:
        raise ConvergenceError(
            f"no Yang-Mills critical point from seed {tuple(seed)}: |r| = {result.residual_norm:.3e}",
            result.trace,
        )
    lam = tuple(complex(z) for z in _to_complex(result.x))
    omega, distance = exact_connection(lam, opts)
    certificate = (field_theory.ym_residual(omega),)
    return CriticalPoint(
        omega=omega,
        kind=_connection_kind(omega),
        certificate=certificate,
        exactified=certificate[0].is_zero(),
        approx=lam,
        iterations=result.iterations,
        residual_norm=result.residual_norm,
        snap_distance=distance,
    )


def default_sections(potential: Potential) -> tuple[complex, ...]:
    """``diag(x, y)`` for the paper_example potential, constant 1 otherwise."""
    if potential.x is not None:
        x, y = complex(potential.x), complex(potential.y)
        return (x, y, x, y)
    return (1, 1, 1, 1)


def find_critical_ymsm(
    corep_name: str,
    potential: Potential,
    omega_seed: Sequence[complex] = (0, 0),
    section_seed: Optional[Sequence[complex]] = None,
    opts: Optional[SolverOptions] = None,
    freeze_omega: bool = False,
    freeze_sections: bool = False,
) -> CriticalPoint:
    """Solve eqs. 8-10 over ``(lambda0, lambda1, p~0, p~1, p^0, p^1)``."""
    opts = opts or get_settings().solver_options()
    corep = group_hopf.corep_catalog(corep_name)
    section_seed = default_sections(potential) if section_seed is None else section_seed
    base = _to_real(list(omega_seed) + list(section_seed))
    free = np.array([not freeze_omega] * 4 + [not freeze_sections] * 8)

    def residual(x_free: np.ndarray) -> np.ndarray:
        full = base.copy()
        full[free] = x_free
        return field_theory.ymsm_residual_approx(_to_complex(full), corep.name, potential)

    result = damped_newton(residual, base[free], opts)
    if result.residual_norm > opts.accept_tol:
        raise ConvergenceError(
            f"no {corep.name} Yang-Mills-scalar critical point from the seed: |r| = {result.residual_norm:.3e}",
            result.trace or [{"iteration": 0, "residual_norm": result.residual_norm}],
        )
    full = base.copy()
    full[free] = result.x
    values = tuple(complex(z) for z in _to_complex(full))
    omega, distance = exact_connection(values[:2], opts)
    try:
        p = [from_approx(z, opts.snap_tol, opts.max_denom) for z in values[2:]]
    except NotSnappableError as exc:
        logger.info("sections not snappable (%s); reporting the approximate point", exc)
        return CriticalPoint(
            omega=omega,
            kind=PointKind.MATTER,
            certificate=(),
            exactified=False,
            approx=values,
            iterations=result.iterations,
            residual_norm=result.residual_norm,
            snap_distance=distance,
        )
    t1 = Section.of(corep, p[0], p[1])
    t2 = Section.of(group_hopf.conjugate(corep), p[2], p[3])
    residuals = field_theory.ymsm_residuals(omega, t1, t2, potential)
    return CriticalPoint(
        omega=omega,
        kind=PointKind.MATTER,
        certificate=tuple(residuals),
        exactified=residuals.is_zero(),
        sections=(t1, t2),
        approx=values,
        iterations=result.iterations,
        residual_norm=result.residual_norm,
        snap_distance=distance,
    )


def classify(point: CriticalPoint, potential: Optional[Potential] = None) -> dict:
    """Kind, action, flatness and the orbit under ``{1 epsilon, f_sigma}``."""
    omega = point.omega
    if point.sections is not None and potential is not None:
        value = field_theory.action_ymsm(omega, *point.sections, potential)
    else:
        value = field_theory.action_ym(omega)
    orbit = {
        f.name: gauge_group.gauge_action(f, omega, check=False) == omega
        for f in (gauge_group.unit_map(), gauge_group.f_sigma())
    }
    return {
        "kind": point.kind.value,
        "action": str(value),
        "flat": not bundle_calculus.curvature_scalar(omega),
        "real": omega.is_real,
        "orbit": orbit,
        "orbit_fixed": all(orbit.values()),
    }


def _solve_ym_seed(args: tuple) -> dict:
    seed, opts = args
    try:
        point = find_critical_ym(seed, opts)
    except QPBError as exc:
        trace = getattr(exc, "trace", [])
        return {"ok": False, "seed": [[z.real, z.imag] for z in seed], "error": str(exc), "iterations": len(trace)}
    return {"ok": True, "sort_key": point.sort_key(), "report": {**point.to_dict(), "classification": classify(point)}}


class SolverEngine:
    """Runs solver batches and keeps their reports by id."""

    def __init__(self):
        self._runs: dict[UUID, SolveRun] = {}

    def run_ym(
        self,
        seeds: int = 100,
        seed: int = 0,
        opts: Optional[SolverOptions] = None,
        workers: int = 1,
    ) -> SolveRun:
        opts = opts or get_settings().solver_options()
        jobs = [(s, opts) for s in random_seeds(seeds, seed)]
        with get_status_tracker().track("solving", f"Yang-Mills search over {seeds} seeds"):
            if workers > 1:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    outcomes = list(pool.map(_solve_ym_seed, jobs))
            else:
                outcomes = [_solve_ym_seed(job) for job in jobs]
        found = sorted((o for o in outcomes if o["ok"]), key=lambda o: o["sort_key"])
        run = SolveRun(
            mode="ym",
            config={"seeds": seeds, "seed": seed, "workers": workers, "options": opts.model_dump()},
            points=[o["report"] for o in found],
            failures=[{k: v for k, v in o.items() if k != "ok"} for o in outcomes if not o["ok"]],
        )
        self._runs[run.id] = run
        logger.info("ym run %s: %d points, %d failures", run.id, len(run.points), len(run.failures))
        return run

    def run_ymsm(
        self,
        corep_name: str,
        potential: Potential,
        omega_seed: Sequence[complex] = (0, 0),
        section_seed: Optional[Sequence[complex]] = None,
        opts: Optional[SolverOptions] = None,
        freeze_omega: bool = False,
        freeze_sections: bool = False,
    ) -> SolveRun:
        opts = opts or get_settings().solver_options()
        config = {
            "corep": corep_name,
            "potential": potential.to_dict(),
            "omega": [[complex(z).real, complex(z).imag] for z in omega_seed],
            "freeze_omega": freeze_omega,
            "freeze_sections": freeze_sections,
            "options": opts.model_dump(),
        }
        points, failures = [], []
        with get_status_tracker().track("solving", f"Yang-Mills-scalar search, {corep_name} corep"):
            try:
                point = find_critical_ymsm(
                    corep_name, potential, omega_seed, section_seed, opts, freeze_omega, freeze_sections
                )
                points.append({**point.to_dict(), "classification": classify(point, potential)})
            except ConvergenceError as exc:
                failures.append({"error": str(exc), "trace": exc.trace})
        run = SolveRun(mode="ymsm", config=config, points=points, failures=failures)
        self._runs[run.id] = run
        logger.info("ymsm run %s: %d points, %d failures", run.id, len(points), len(failures))
        return run

    def get_run(self, run_id: UUID) -> Optional[SolveRun]:
        return self._runs.get(run_id)

    def list_runs(self) -> list[SolveRun]:
        return list(self._runs.values())


# Singleton instance
_solver_engine: Optional[SolverEngine] = None


def get_solver_engine() -> SolverEngine:
    """Get the singleton SolverEngine instance."""
    global _solver_engine
    if _solver_engine is None:
        _solver_engine = SolverEngine()
    return _solver_engine
