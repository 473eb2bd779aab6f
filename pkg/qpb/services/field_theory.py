"""Lagrangians, actions and field equations of the Yang-Mills(-scalar) theory.

Everything here runs on the exact pipeline: curvature from the bundle
calculus, covariant derivatives from the associated bundles, adjoints from
Gram matrices. The ``*_approx`` helpers at the bottom evaluate the same
equations in float64 from their component formulas; the solver iterates with
them and then certifies its result with the exact functions.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from qpb.errors import DegreeMismatchError, UnsupportedCorepError
from qpb.models.connection import QPC
from qpb.models.forms import BaseForm, Side
from qpb.models.potential import Potential, PotentialKind
from qpb.models.results import Residual
from qpb.models.scalar import ExactC, I
from qpb.models.sections import AdForm, Section, VForm
from qpb.services import associated_qvb, base_calculus, bundle_calculus, exact_linalg, group_hopf
from qpb.services.calibration import calibrated_cache

logger = logging.getLogger(__name__)

# <sigma, sigma> on the invariant forms
SIGMA_NORM = ExactC(1)

LAMBDA_BASIS: tuple[tuple[str, BaseForm], ...] = (
    ("e0", BaseForm.basis(1, 0)),
    ("e1", BaseForm.basis(1, 1)),
    ("i*e0", BaseForm.basis(1, 0).scale(I)),
    ("i*e1", BaseForm.basis(1, 1).scale(I)),
)


def hat_adform(tau: AdForm) -> AdForm:
    """``* . tau . *`` on an ad-valued form; ``sigma* = -sigma`` gives ``-comp*``."""
    return AdForm(-base_calculus.star(tau.comp))


def hat_curvature(omega: QPC) -> BaseForm:
    """R-hat of omega, i.e. the curvature of the hatted connection."""
    return bundle_calculus.curvature(omega.hat())


def lagrangian_ym(omega: QPC) -> BaseForm:
    r = bundle_calculus.curvature(omega)
    rh = hat_curvature(omega)
    total = base_calculus.herm(r, r, Side.LEFT) + base_calculus.herm(rh, rh, Side.RIGHT)
    return total.scale(SIGMA_NORM * ExactC(-1) / 4)


def action(lagrangian: BaseForm) -> ExactC:
    return base_calculus.integral(base_calculus.mul(lagrangian, base_calculus.dvol()))


def action_ym(omega: QPC) -> ExactC:
    return action(lagrangian_ym(omega))


def action_ym_closed(omega: QPC) -> ExactC:
    """S_YM = -|u|^2 / 2."""
    return ExactC(-bundle_calculus.curvature_scalar(omega).abs2() / 2)


def _ad_operator(omega: QPC, side: Side):
    """``d^nabla - S^omega`` on ad-valued forms, as a map on components."""
    trivial = group_hopf.corep_catalog("trivial")

    def op(comp: BaseForm) -> BaseForm:
        covariant = associated_qvb.ext_cov_deriv(omega, VForm(trivial, comp, Side(side))).comp
        return covariant - bundle_calculus.s_operator(omega, AdForm(comp)).comp

    return op


def ad_operator_matrix(omega: QPC, degree: int, side: Side = Side.LEFT):
    return base_calculus.operator_matrix(_ad_operator(omega, side), degree)


@calibrated_cache
def ad_adjoint_matrix(omega: QPC, degree: int, side: Side = Side.LEFT):
    """Matrix of the adjoint of ``d^nabla - S^omega`` from ad-valued k-forms to (k-1)-forms."""
    if degree < 1:
        raise DegreeMismatchError("the adjoint operator is defined on degrees 1 and 2")
    return exact_linalg.adjoint_matrix(
        ad_operator_matrix(omega, degree - 1, side),
        base_calculus.gram(degree - 1, side),
        base_calculus.gram(degree, side),
        base_calculus.inner_linearity(side),
    )


def ad_adjoint(omega: QPC, tau: AdForm, side: Side = Side.LEFT) -> AdForm:
    m = ad_adjoint_matrix(omega, tau.degree, side)
    values = exact_linalg.to_column(m.matmul(exact_linalg.column(tau.comp.c)))
    return AdForm(BaseForm(tau.degree - 1, tuple(values)))


def ym_pairing(omega: QPC, nu: BaseForm) -> ExactC:
    """Left side of the Yang-Mills equation tested against ``lambda(sigma) = nu x 1``.

    The right-handed half uses the hatted connection, its curvature and
    ``* . lambda . *``.
    """
    if nu.degree != 1:
        raise DegreeMismatchError(f"test form must be a 1-form, got degree {nu.degree}")
    r = AdForm(bundle_calculus.curvature(omega))
    left = base_calculus.inner(nu, ad_adjoint(omega, r, Side.LEFT).comp, Side.LEFT)
    omega_hat = omega.hat()
    r_hat = AdForm(bundle_calculus.curvature(omega_hat))
    lam_hat = hat_adform(AdForm(nu))
    right = base_calculus.inner(lam_hat.comp, ad_adjoint(omega_hat, r_hat, Side.RIGHT).comp, Side.RIGHT)
    return (left + right) * SIGMA_NORM


def curvature_variation(omega: QPC, nu: BaseForm) -> ExactC:
    """Derivative of u along ``mu -> mu + t nu``."""
    n0, n1 = nu.c
    return -n0 * (1 + 2 * I * omega.lambda1) - n1 * (1 + 2 * I * omega.lambda0)


def ym_pairing_closed(omega: QPC, nu: BaseForm) -> ExactC:
    """Closed form ``2 conj(u) du(nu)`` of the Yang-Mills pairing."""
    return 2 * bundle_calculus.curvature_scalar(omega).conj() * curvature_variation(omega, nu)


def ym_residual(omega: QPC) -> Residual:
    return Residual.of("ym", ((label, ym_pairing(omega, nu)) for label, nu in LAMBDA_BASIS))


def _check_pair(t1: Section, t2: Section):
    if t2.corep != group_hopf.conjugate(t1.corep):
        raise UnsupportedCorepError(
            f"T2 must use the conjugate of {t1.corep.name}, got {t2.corep.name}"
        )


def lagrangian_ymsm(omega: QPC, t1: Section, t2: Section, potential: Potential) -> BaseForm:
    _check_pair(t1, t2)
    n1 = associated_qvb.nabla(omega, t1)
    n2 = associated_qvb.nabla_hat(omega, t2)
    matter = (
        associated_qvb.vform_herm(n1, n1)
        - potential.value(associated_qvb.section_herm(t1, t1, Side.LEFT))
        - associated_qvb.vform_herm(n2, n2)
        + potential.value(associated_qvb.section_herm(t2, t2, Side.RIGHT))
    )
    return lagrangian_ym(omega) + matter.scale(ExactC(1) / 4)


def action_ymsm(omega: QPC, t1: Section, t2: Section, potential: Potential) -> ExactC:
    return action(lagrangian_ymsm(omega, t1, t2, potential))


@dataclass(frozen=True)
class YMSMResiduals:
    connection_eq: Residual
    left_section_eq: Residual
    right_section_eq: Residual

    @property
    def connection_eq_real(self) -> Residual:
        return self.connection_eq.real_part()

    def __iter__(self):
        return iter((self.connection_eq, self.left_section_eq, self.right_section_eq))

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self)

    def to_dict(self) -> dict:
        return {
            "connection_eq": self.connection_eq.to_dict(),
            "connection_eq_real": self.connection_eq_real.to_dict(),
            "left_section_eq": self.left_section_eq.to_dict(),
            "right_section_eq": self.right_section_eq.to_dict(),
            "is_zero": self.is_zero(),
        }


def matter_pairing(omega: QPC, t1: Section, t2: Section, nu: BaseForm) -> ExactC:
    """``<K^lambda T1 | nabla T1>_l - <(* K^lambda *) T2 | nabla-hat T2>_r``."""
    lam = AdForm(nu)
    left = associated_qvb.vform_inner(
        associated_qvb.k_lambda(lam, t1, Side.LEFT), associated_qvb.nabla(omega, t1)
    )
    right = associated_qvb.vform_inner(
        associated_qvb.k_lambda(lam, t2, Side.RIGHT), associated_qvb.nabla_hat(omega, t2)
    )
    return left - right


def _section_residual(name: str, section: Section) -> Residual:
    return Residual.of(name, (("p0", section.p.c[0]), ("p1", section.p.c[1])))


def left_section_residual(omega: QPC, t1: Section, potential: Potential) -> Residual:
    slope = potential.derivative(associated_qvb.section_herm(t1, t1, Side.LEFT))
    value = associated_qvb.laplacian(omega, t1, Side.LEFT).p - base_calculus.mul(base_calculus.star(slope), t1.p)
    return _section_residual("left_section_eq", t1.with_p(value))


def right_section_residual(omega: QPC, t2: Section, potential: Potential) -> Residual:
    slope = potential.derivative(associated_qvb.section_herm(t2, t2, Side.RIGHT))
    value = associated_qvb.laplacian(omega, t2, Side.RIGHT).p - base_calculus.mul(t2.p, base_calculus.star(slope))
    return _section_residual("right_section_eq", t2.with_p(value))


def ymsm_residuals(omega: QPC, t1: Section, t2: Section, potential: Potential) -> YMSMResiduals:
    _check_pair(t1, t2)
    connection_eq = Residual.of(
        "connection_eq",
        ((label, matter_pairing(omega, t1, t2, nu) - ym_pairing(omega, nu)) for label, nu in LAMBDA_BASIS),
    )
    return YMSMResiduals(
        connection_eq,
        left_section_residual(omega, t1, potential),
        right_section_residual(omega, t2, potential),
    )


def _require_alternating(*sections: Section):
    for t in sections:
        if t.corep.name != "alternating":
            raise UnsupportedCorepError(f"component equations need the alternating corep, got {t.corep.name}")


def alt_matter_side(omega: QPC, t1: Section, t2: Section, k: int) -> ExactC:
    """Component formula for the matter side of the alternating connection equation at ``lambda = e_k``."""
    j = 1 - k
    pt, ph = t1.p.c, t2.p.c
    lam = (omega.lambda0, omega.lambda1)
    tilde2, hat2 = ExactC(pt[k].abs2()), ExactC(ph[k].abs2())
    return (
        I * (tilde2 - pt[k] * pt[j].conj() + ph[k].conj() * ph[j] - hat2)
        + 2 * (tilde2 - hat2) * lam[k].conj()
    )


def alt_rhs(omega: QPC, k: int) -> ExactC:
    """Transcribed right-hand side ``u* (1 + 2i lambda_{1-k})``."""
    lam = (omega.lambda0, omega.lambda1)
    return bundle_calculus.curvature_scalar(omega).conj() * (1 + 2 * I * lam[1 - k])


def alt_rhs_ratio(omega: QPC, k: int = 0) -> Optional[ExactC]:
    """Ratio of the Yang-Mills pairing at ``e_k`` to the transcribed right-hand side.

    Returns None where both vanish.
    """
    rhs = alt_rhs(omega, k)
    if not rhs:
        return None
    return ym_pairing(omega, BaseForm.basis(1, k)) / rhs


def alt_component_equations(
    omega: QPC, t1: Section, t2: Section, potential: Optional[Potential] = None
) -> tuple[Residual, Residual]:
    """Component transcriptions for the alternating corep, independent of the generic pipeline.

    ``alt_connection_eq`` holds one entry per ``lambda = e_k``; ``alt_section_eq`` holds the
    Laplacian formulas minus the potential term, left (``t``) and right (``h``).
    """
    _require_alternating(t1, t2)
    potential = potential or Potential.identity()
    alt_connection_eq = Residual.of(
        "alt_connection_eq",
        ((f"e{k}", alt_matter_side(omega, t1, t2, k) - alt_rhs(omega, k)) for k in (0, 1)),
    )
    left = associated_qvb.laplacian_transcribed(omega, t1, Side.LEFT).p
    right = associated_qvb.laplacian_transcribed(omega, t2, Side.RIGHT).p
    slope1 = base_calculus.star(potential.derivative(associated_qvb.section_herm(t1, t1, Side.LEFT)))
    slope2 = base_calculus.star(potential.derivative(associated_qvb.section_herm(t2, t2, Side.RIGHT)))
    left = left - base_calculus.mul(slope1, t1.p)
    right = right - base_calculus.mul(t2.p, slope2)
    alt_section_eq = Residual.of(
        "alt_section_eq",
        (("t0", left.c[0]), ("t1", left.c[1]), ("h0", right.c[0]), ("h1", right.c[1])),
    )
    return alt_connection_eq, alt_section_eq


def continuity_matrices(omega: QPC, side: Side = Side.LEFT):
    """Square of the adjoint operator, ad-valued 2-forms to 0-forms."""
    target = omega if Side(side) == Side.LEFT else omega.hat()
    return ad_adjoint_matrix(target, 1, side).matmul(ad_adjoint_matrix(target, 2, side))


def continuity_check(omega: QPC) -> bool:
    return all(exact_linalg.is_zero(continuity_matrices(omega, side)) for side in Side)


# float64 evaluation for the solver


def _operator_approx(l0: complex, l1: complex, corep_name: str) -> tuple[np.ndarray, np.ndarray]:
    """Component matrices of nabla (left) and nabla-hat (right) on sections."""
    if corep_name == "trivial":
        l0 = l1 = 0j
    left = np.array([[-1j + 2 * l0, 1j], [1j, -1j + 2 * l1]])
    right = np.array([[-1j, 1j + 2 * np.conj(l1)], [1j + 2 * np.conj(l0), -1j]])
    return left, right


def laplacian_approx(l0: complex, l1: complex, p: np.ndarray, corep_name: str, side: Side) -> np.ndarray:
    """Component formulas of nabla-star-nabla on a section, as in the exact path."""
    p0, p1 = p
    if corep_name == "trivial":
        return np.array([2 * (p0 - p1), -2 * (p0 - p1)])
    mid0, mid1 = (p1 * l1, p0 * l0) if side == Side.LEFT else (p1 * l0, p0 * l1)
    u0 = 2 * (p0 - p1) + 2j * p0 * (l0 + l1) - 4j * mid0 - 4 * p0 * l0 * l1
    u1 = -2 * (p0 - p1) + 2j * p1 * (l0 + l1) - 4j * mid1 - 4 * p1 * l0 * l1
    return np.array([u0, u1])


def curvature_scalar_approx(l0: complex, l1: complex) -> complex:
    return -(l0 + l1) - 2j * l0 * l1


def ym_pairing_approx(l0: complex, l1: complex) -> np.ndarray:
    """Pairings at ``e0, e1``."""
    u = curvature_scalar_approx(l0, l1)
    return np.array([-2 * np.conj(u) * (1 + 2j * l1), -2 * np.conj(u) * (1 + 2j * l0)])


def ym_residual_approx(lam: np.ndarray) -> np.ndarray:
    """Real residual vector ``[Re P0, Im P0, Re P1, Im P1]``."""
    p = ym_pairing_approx(complex(lam[0]), complex(lam[1]))
    return np.array([p[0].real, p[0].imag, p[1].real, p[1].imag])


def potential_derivative_approx(potential: Potential, values: np.ndarray) -> np.ndarray:
    if potential.kind == PotentialKind.PAPER_EXAMPLE:
        x, y = complex(potential.x), complex(potential.y)
        result = np.array([2 - 2 * y / x, 2 - 2 * x / y], dtype=complex)
    else:
        result = np.zeros_like(values, dtype=complex)
        for n, c in enumerate(potential.coeffs[1:], start=1):
            result = result + n * complex(c) * values ** (n - 1)
    if potential.shift is not None:
        result = result + np.array([complex(z) for z in potential.shift.c])
    return result


def ymsm_residual_approx(params: np.ndarray, corep_name: str, potential: Potential) -> np.ndarray:
    """Twelve real components of connection_eq (at e0, e1), left_section_eq and right_section_eq.

    ``params`` holds the complex values ``(lambda0, lambda1, p~0, p~1, p^0, p^1)``.
    """
    l0, l1 = complex(params[0]), complex(params[1])
    pt, ph = np.asarray(params[2:4], dtype=complex), np.asarray(params[4:6], dtype=complex)
    a, b = _operator_approx(l0, l1, corep_name)
    eta, eta_hat = a @ pt, b @ ph
    if corep_name == "alternating":
        matter = np.array([pt[k] * np.conj(eta[k]) - np.conj(ph[k]) * eta_hat[1 - k] for k in (0, 1)])
    else:
        matter = np.zeros(2, dtype=complex)
    connection_eq = matter - ym_pairing_approx(l0, l1)
    slope1 = potential_derivative_approx(potential, np.abs(pt) ** 2 + 0j)
    slope2 = potential_derivative_approx(potential, np.abs(ph) ** 2 + 0j)
    left_section_eq = laplacian_approx(l0, l1, pt, corep_name, Side.LEFT) - np.conj(slope1) * pt
    right_section_eq = laplacian_approx(l0, l1, ph, corep_name, Side.RIGHT) - ph * np.conj(slope2)
    out = np.concatenate([connection_eq, left_section_eq, right_section_eq])
    return np.concatenate([[z.real, z.imag] for z in out])
