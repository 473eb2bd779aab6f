"""Claim-by-claim replication ledger.

Each claim pairs a displayed value with the value computed here. A claim
whose computation raises is reported as failed with the error text as the
computed value, so a flipped calibration shows up as failures rather than
a crash.
"""

import logging
from fractions import Fraction
from typing import Callable, Optional

from qpb.errors import QPBError
from qpb.fixtures import (
    OMEGA_I_ZERO,
    OMEGA_ONE_ZERO,
    OMEGA_TRIVIAL,
    OMEGA_YM,
    UNIT_MODULUS,
    flat_points,
    random_connection,
    random_exact,
    random_section,
    rng,
)
from qpb.models.connection import QPC
from qpb.models.forms import BaseForm, Side
from qpb.models.potential import Potential
from qpb.models.reports import Claim, ReplicationReport
from qpb.models.scalar import ExactC, I
from qpb.models.sections import Section
from qpb.services import associated_qvb, base_calculus, bundle_calculus, field_theory, gauge_group, group_hopf
from qpb.services.calibration import CalibrationFlip, current_calibration, use_calibration
from qpb.services.verification import (
    ALTERNATING_SAMPLES,
    ALTERNATING_VIOLATION,
    CONNECTION_SAMPLES,
    CURVATURE_SAMPLES,
    TRIVIAL_TRIPLETS,
    alternating_pair,
    get_verification_engine,
    variational_consistency,
)
from qpb.status import get_status_tracker

logger = logging.getLogger(__name__)

ClaimFn = Callable[[], tuple[str, bool]]


def _random_connections(seed: int, count: int) -> list[QPC]:
    gen = rng(seed)
    return [random_connection(gen) for _ in range(count)]


def _count(label: str, results: list[bool]) -> tuple[str, bool]:
    return f"{sum(results)}/{len(results)} {label}", all(results)


def _dvol() -> tuple[str, bool]:
    value = base_calculus.dvol()
    return str(value), value == BaseForm(2, (-I, I))


def _integral() -> tuple[str, bool]:
    p0, p1 = BaseForm.of(0, 1, 0), BaseForm.of(0, 0, 1)
    mul, d = base_calculus.mul, base_calculus.d
    value = base_calculus.integral(mul(mul(p0, d(p1)), d(p0)))
    return str(value), value == Fraction(1, 2)


def _codiff_displays() -> tuple[str, bool]:
    # the displayed component formulas against the composite hodge . d . hodge
    cases = [
        base_calculus.codiff(e, side) == base_calculus.hodge_codiff(e, side)
        for side in Side
        for k in (1, 2)
        for e in BaseForm.basis_elements(k)
    ]
    return _count("basis forms agree", cases)


def _curvature_random() -> tuple[str, bool]:
    results = []
    for omega in _random_connections(10, CURVATURE_SAMPLES):
        closed = bundle_calculus.curvature(omega, bundle_calculus.CurvaturePath.CLOSED_FORM)
        results.append(
            bundle_calculus.curvature(omega) == closed
            and bundle_calculus.curvature(omega, bundle_calculus.CurvaturePath.TOTAL_SPACE) == closed
        )
    return _count("connections agree", results)


def _curvature_ym() -> tuple[str, bool]:
    value = bundle_calculus.curvature(OMEGA_YM)
    half_i = ExactC(0, Fraction(1, 2))
    return str(value), value == BaseForm(2, (-half_i, -half_i))


def _ym_solutions() -> tuple[str, bool]:
    points = [OMEGA_TRIVIAL, OMEGA_YM] + flat_points()
    return _count("points critical", [field_theory.ym_residual(w).is_zero() for w in points])


def _ym_non_solutions() -> tuple[str, bool]:
    results = [not field_theory.ym_residual(w).is_zero() for w in (OMEGA_ONE_ZERO, OMEGA_I_ZERO)]
    return _count("points rejected", results)


def _action_ym() -> tuple[str, bool]:
    value = field_theory.action_ym(OMEGA_YM)
    return str(value), value == Fraction(-1, 8)


def _variational() -> tuple[str, bool]:
    results = [variational_consistency(w)[0] for w in _random_connections(11, CONNECTION_SAMPLES)]
    return _count("connections consistent", results)


def _trivial_triplets() -> tuple[str, bool]:
    trivial = group_hopf.corep_catalog("trivial")
    flat = flat_points(2)[1]
    results = []
    for x, y in TRIVIAL_TRIPLETS:
        t = Section.of(trivial, x, y)
        for omega in (OMEGA_TRIVIAL, flat, OMEGA_YM):
            results.append(field_theory.ymsm_residuals(omega, t, t, Potential.paper_example(x, y)).is_zero())
    return _count("triplets critical", results)


def _alternating_reduction() -> tuple[str, bool]:
    results = []
    for sample in ALTERNATING_SAMPLES:
        t1, t2 = alternating_pair(sample)
        alt_connection_eq, alt_section_eq = field_theory.alt_component_equations(OMEGA_YM, t1, t2)
        results.append(alt_connection_eq.is_zero() and alt_section_eq.is_zero())
    t1, t2 = alternating_pair(ALTERNATING_VIOLATION)
    alt_connection_eq, _ = field_theory.alt_component_equations(OMEGA_YM, t1, t2)
    results.append(not alt_connection_eq.is_zero())
    return _count("samples behave (last one violates the condition)", results)


def _laplacian_identity() -> tuple[str, bool]:
    alternating = group_hopf.corep_catalog("alternating")
    results = [
        associated_qvb.laplacian(OMEGA_YM, Section(alternating, e), side) == Section(alternating, e)
        for side in Side
        for e in BaseForm.basis_elements(0)
    ]
    return _count("basis sections fixed", results)


def _continuity() -> tuple[str, bool]:
    points = [OMEGA_TRIVIAL, OMEGA_YM] + _random_connections(12, CONNECTION_SAMPLES)
    return _count("connections satisfy it", [field_theory.continuity_check(w) for w in points])


def _gauge_orbits() -> tuple[str, bool]:
    sigma, unit = gauge_group.f_sigma(), gauge_group.unit_map()
    points = [OMEGA_YM] + flat_points(4)
    results = [gauge_group.in_gg_ym(sigma)]
    results += [gauge_group.gauge_action(f, w) == w for f in (sigma, unit) for w in points]
    return _count("checks hold", results)


def _phase_invariance() -> tuple[str, bool]:
    gen = rng(13)
    alternating = group_hopf.corep_catalog("alternating")
    omega = random_connection(gen)
    potential = Potential.polynomial(random_exact(gen), random_exact(gen), 1)
    t1, t2 = random_section(gen, alternating), random_section(gen, alternating)
    before = field_theory.lagrangian_ymsm(omega, t1, t2, potential)
    results = []
    for q in UNIT_MODULUS[1:]:
        f = gauge_group.phase_map(q)
        after = field_theory.lagrangian_ymsm(
            gauge_group.gauge_action(f, omega),
            gauge_group.gauge_action(f, t1, Side.LEFT),
            gauge_group.gauge_action(f, t2, Side.RIGHT),
            potential,
        )
        results.append(after == before)
    return _count("phases leave L_YMSM invariant", results)


def _calibration_unique() -> tuple[str, bool]:
    ledger = get_verification_engine().calibration_ledger()
    passing = [c.calibration for c in ledger.candidates if c.passed]
    return f"{len(passing)} passing: {passing}", ledger.unique


CLAIMS: tuple[tuple[str, str, ClaimFn], ...] = (
    ("volume form", "[-i, i]_2", _dvol),
    ("integral of p0 dp1 dp0", "1/2", _integral),
    ("codifferential displays", "equal to hodge d hodge on both sides", _codiff_displays),
    ("curvature closed form", "[u, u]_2 with u = -(l0+l1) - 2i l0 l1", _curvature_random),
    ("curvature of the non-flat critical connection", "[-1/2 i, -1/2 i]_2", _curvature_ym),
    ("Yang-Mills solutions", "trivial, flat locus and (i/2, i/2) are critical", _ym_solutions),
    ("Yang-Mills non-solutions", "(1, 0) and (i, 0) are not critical", _ym_non_solutions),
    ("action at the non-flat critical point", "-1/8", _action_ym),
    ("variational consistency", "finite differences match the pairing", _variational),
    ("trivial corep solutions", "(omega, diag(x,y), diag(x,y)) solve the system", _trivial_triplets),
    ("alternating corep at (i/2, i/2)", "reduction holds iff p~0 p~1* = p^0* p^1", _alternating_reduction),
    ("Laplacians at (i/2, i/2)", "identity on alternating sections", _laplacian_identity),
    ("continuity identity", "adjoint operator squares to zero", _continuity),
    ("gauge orbits", "f_sigma in GG_YM; unit and f_sigma fix critical points", _gauge_orbits),
    ("phase invariance", "L_YMSM invariant under e^{it}", _phase_invariance),
    ("calibration uniqueness", "exactly one convention combination passes", _calibration_unique),
)


def _run_claim(name: str, expected: str, fn: ClaimFn) -> Claim:
    try:
        computed, passed = fn()
    except (QPBError, ArithmeticError) as exc:
        computed, passed = f"{type(exc).__name__}: {exc}", False
    return Claim(name=name, expected=expected, computed=computed, passed=passed)


class ReplicationEngine:
    """Evaluates the claim ledger, optionally under a flipped convention."""

    def run(self, flip: Optional[str] = None) -> ReplicationReport:
        calibration = current_calibration()
        if flip is not None:
            calibration = calibration.flipped(CalibrationFlip(flip))
        with get_status_tracker().track("replicating", f"flip={flip}" if flip else None):
            with use_calibration(calibration):
                claims = [_run_claim(*entry) for entry in CLAIMS]
        for claim in claims:
            logger.debug("%s: %s (%s)", claim.name, "PASS" if claim.passed else "FAIL", claim.computed)
        report = ReplicationReport(
            passed=all(c.passed for c in claims),
            calibration=calibration.to_dict(),
            flip=flip,
            claims=claims,
        )
        logger.info("replication: %d/%d claims pass", sum(c.passed for c in claims), len(claims))
        return report


# Singleton instance
_replication_engine: Optional[ReplicationEngine] = None


def get_replication_engine() -> ReplicationEngine:
    """Get the singleton ReplicationEngine instance."""
    global _replication_engine
    if _replication_engine is None:
        _replication_engine = ReplicationEngine()
    return _replication_engine
