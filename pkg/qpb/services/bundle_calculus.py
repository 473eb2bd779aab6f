"""Calculus on the trivial bundle M x G: connections, curvature, covariant derivative.

Total-space forms are Tensors over ``(BASE, GROUP)``; horizontal forms are
those whose group legs all have degree 0.
"""

import logging
from enum import Enum

from qpb.errors import NotHorizontalError
from qpb.models.connection import QPC
from qpb.models.forms import BaseForm, GroupForm
from qpb.models.scalar import ExactC, I
from qpb.models.sections import AdForm
from qpb.models.tensor import Space, Tensor
from qpb.services import base_calculus, graded_tensor, group_hopf
from qpb.services.calibration import current_calibration

logger = logging.getLogger(__name__)

PG = (Space.BASE, Space.GROUP)
PGG = (Space.BASE, Space.GROUP, Space.GROUP)


class CurvaturePath(str, Enum):
    DEFINITIONAL = "definitional"
    CLOSED_FORM = "closed_form"
    TOTAL_SPACE = "total_space"


def total(base: BaseForm, group: GroupForm) -> Tensor:
    return Tensor.pure(base, group)


def total_unit() -> Tensor:
    return graded_tensor.unit(PG)


def total_mul(a: Tensor, b: Tensor) -> Tensor:
    return graded_tensor.mul(a, b)


def total_d(a: Tensor) -> Tensor:
    return graded_tensor.d(a)


def total_star(a: Tensor) -> Tensor:
    return graded_tensor.star(a)


def psi(a: Tensor) -> Tensor:
    """Coaction of the structure group on total-space forms, ``id x phi_hat``."""
    return graded_tensor.apply_leg(a, 1, group_hopf.leg_phi_hat, group_hopf.GG)


def is_horizontal(a: Tensor) -> bool:
    return all(key[1][0] == 0 for key in a.terms)


def horizontal_parts(a: Tensor, degree: int) -> tuple[BaseForm, BaseForm]:
    """Base forms ``(eta_0, eta_1)`` with ``a = eta_0 x Delta_0 + eta_1 x Delta_1``."""
    if not is_horizontal(a):
        raise NotHorizontalError(f"form has vertical legs: {a}")
    coeffs = [[ExactC(0), ExactC(0)], [ExactC(0), ExactC(0)]]
    for (base_leg, group_leg), coef in a.items():
        if base_leg[0] != degree:
            raise ValueError(f"expected a homogeneous form of degree {degree}, found {base_leg[0]}")
        coeffs[group_leg[1]][base_leg[1]] = coef
    return BaseForm(degree, tuple(coeffs[0])), BaseForm(degree, tuple(coeffs[1]))


def base_part(a: Tensor, degree: int) -> BaseForm:
    """The base form ``nu`` of ``a = nu x 1``."""
    eta0, eta1 = horizontal_parts(a, degree)
    if eta0 != eta1:
        raise NotHorizontalError(f"form is not of the shape nu x 1: {a}")
    return eta0


def connection_value(omega: QPC) -> Tensor:
    """omega(sigma) = mu x 1 + 1 x sigma."""
    return total(omega.mu, GroupForm.unit()) + total(BaseForm.unit(), group_hopf.sigma())


def connection_form(omega: QPC):
    """The linear map inv Gamma -> Omega^1(M x G) determined by ``omega``."""
    value = connection_value(omega)

    def apply(theta: GroupForm) -> Tensor:
        if theta.degree != 1 or theta.c[0] != theta.c[1]:
            raise ValueError(f"{theta} is not in the span of sigma")
        return value.scale(theta.c[0])

    return apply


def curvature_scalar(omega: QPC) -> ExactC:
    """u = -(lambda0 + lambda1) - 2 i lambda0 lambda1."""
    l0, l1 = omega.lambda0, omega.lambda1
    return -(l0 + l1) - 2 * I * l0 * l1


def curvature(omega: QPC, path: CurvaturePath = CurvaturePath.DEFINITIONAL) -> BaseForm:
    """Curvature 2-form R with R^omega(sigma) = R x 1."""
    path = CurvaturePath(path)
    if path == CurvaturePath.CLOSED_FORM:
        u = curvature_scalar(omega)
        return BaseForm(2, (u, u))
    if path == CurvaturePath.TOTAL_SPACE:
        w = connection_value(omega)
        r = total_d(w) - total_mul(w, w).scale(2)
        return base_part(r, 2)
    mu = omega.mu
    return base_calculus.d(mu) - base_calculus.mul(mu, mu).scale(2)


def cov_deriv_unchecked(omega: QPC, h: Tensor) -> Tensor:
    """D(eta x g) = d(eta x g) - s (-1)^|eta| (eta x g_(1)) omega(pi(g_(2))), no horizontality check."""
    sign = current_calibration().connection_sign
    w = connection_value(omega)
    result = total_d(h)
    for (base_leg, group_leg), coef in h.items():
        if group_leg[0] != 0:
            raise NotHorizontalError(f"covariant derivative of a non-horizontal form: {h}")
        eta = BaseForm.basis(*base_leg).scale(coef)
        koszul = -1 if base_leg[0] % 2 else 1
        b = group_leg[1]
        for a in (0, 1):
            germ = group_hopf.germ_coefficient(GroupForm.delta((a + b) % 2))
            if not germ:
                continue
            term = total_mul(total(eta, GroupForm.delta(a)), w.scale(germ))
            result = result - term.scale(sign * koszul)
    return result


def cov_deriv(omega: QPC, h: Tensor) -> Tensor:
    result = cov_deriv_unchecked(omega, h)
    if not is_horizontal(result):
        raise NotHorizontalError(f"vertical legs survive in D(h): {result}")
    return result


def cov_deriv_equivariance_holds(omega: QPC, h: Tensor) -> bool:
    """Psi . D = (D x id) . Psi on a horizontal form."""
    lhs = psi(cov_deriv(omega, h))
    rhs = Tensor.zero(PGG)
    for leg, rest in graded_tensor.split_last(psi(h)).items():
        rhs = rhs + graded_tensor.outer(cov_deriv(omega, rest), Tensor((Space.GROUP,), {(leg,): ExactC(1)}))
    return lhs == rhs


def s_operator(omega: QPC, tau: AdForm) -> AdForm:
    """S(tau)(sigma) = 2 (omega(sigma) tau(sigma) - (-1)^k tau(sigma) omega(sigma))."""
    k = tau.degree
    w = connection_value(omega)
    t = total(tau.comp, GroupForm.unit())
    sign = -1 if k % 2 else 1
    value = (total_mul(w, t) - total_mul(t, w).scale(sign)).scale(2)
    if k + 1 > 2:
        return AdForm(BaseForm.zero(k + 1))
    return AdForm(base_part(value, k + 1))
