"""Associated quantum vector bundles for the 1-dimensional corepresentations.

A section or qvb-valued form is stored as its base-form component against
the central basis section ``T_basis(1) = 1 x v``. Covariant derivatives go
through the bundle: embed the component as ``comp x v``, apply D (or
``* . D . *`` on the right), and strip ``v`` again.
"""

import logging
from enum import Enum

from qpb.errors import DegreeMismatchError, NotHorizontalError, UnsupportedCorepError
from qpb.models.connection import QPC
from qpb.models.corep import Corep
from qpb.models.forms import BaseForm, GroupForm, MAX_DEGREE, Side
from qpb.models.scalar import ExactC, I
from qpb.models.sections import AdForm, Section, VForm
from qpb.models.tensor import Tensor
from qpb.services import base_calculus, bundle_calculus, exact_linalg, graded_tensor, group_hopf
from qpb.services.calibration import calibrated_cache

logger = logging.getLogger(__name__)

SUPPORTED_COREPS = ("trivial", "alternating")


class LaplacianFormula(str, Enum):
    COMPOSITE = "composite"
    TRANSCRIBED = "transcribed"


def _require_supported(corep: Corep):
    if corep.name not in SUPPORTED_COREPS or not corep.is_one_dimensional:
        raise UnsupportedCorepError(f"operation supports {SUPPORTED_COREPS}, got {corep.name!r}")


def _same_corep(a: Corep, b: Corep):
    if a != b:
        raise UnsupportedCorepError(f"corepresentation mismatch: {a.name} vs {b.name}")


def embed(comp: BaseForm, corep: Corep) -> Tensor:
    """Horizontal equivariant form ``comp x v``."""
    return bundle_calculus.total(comp, corep.element)


def section_tensor(t: Section) -> Tensor:
    return embed(t.p, t.corep)


def basis_section(corep: Corep) -> Section:
    return Section(corep, BaseForm.unit())


def upsilon(h: Tensor, corep: Corep, degree: int) -> BaseForm:
    """Inverse of ``embed``: the component ``comp`` with ``h = comp x v``."""
    eta0, eta1 = bundle_calculus.horizontal_parts(h, degree)
    v0, v1 = corep.element.c
    comp = eta0.scale(ExactC(1) / v0) if v0 else eta1.scale(ExactC(1) / v1)
    if embed(comp, corep) != h:
        raise NotHorizontalError(f"form is not a multiple of the basis section of {corep.name}")
    return comp


def mor_check(corep: Corep, images: list[Tensor]) -> bool:
    """True iff ``Phi(T(e_j)) = sum_i T(e_i) x v_ij`` for all basis vectors e_j."""
    if len(images) != corep.dim:
        raise DegreeMismatchError(f"{len(images)} images for a corepresentation of dimension {corep.dim}")
    for j in range(corep.dim):
        expected = Tensor.zero(bundle_calculus.PGG)
        for i in range(corep.dim):
            expected = expected + graded_tensor.outer(images[i], Tensor.pure(corep.matrix[i][j]))
        if bundle_calculus.psi(images[j]) != expected:
            return False
    return True


def section_herm(t1: Section, t2: Section, side: Side = Side.LEFT) -> BaseForm:
    """Left: ``T1(1) T2(1)*``; right: ``T1(1)* T2(1)``, computed in the bundle."""
    _same_corep(t1.corep, t2.corep)
    a, b = section_tensor(t1), section_tensor(t2)
    if Side(side) == Side.LEFT:
        value = bundle_calculus.total_mul(a, bundle_calculus.total_star(b))
    else:
        value = bundle_calculus.total_mul(bundle_calculus.total_star(a), b)
    return bundle_calculus.base_part(value, 0)


def vform_herm(a: VForm, b: VForm) -> BaseForm:
    """Hermitian structure ``<eta x T, eta' x T'> = <eta . <T,T'>, eta'>`` on qvb-valued forms."""
    _same_corep(a.corep, b.corep)
    h = section_herm(basis_section(a.corep), basis_section(b.corep), a.side)
    if a.side == Side.LEFT:
        return base_calculus.herm(base_calculus.mul(h, a.comp), b.comp, Side.LEFT)
    return base_calculus.herm(a.comp, base_calculus.mul(h, b.comp), Side.RIGHT)


def vform_inner(a: VForm, b: VForm) -> ExactC:
    return base_calculus.integral(base_calculus.mul(vform_herm(a, b), base_calculus.dvol()))


def _covariant(omega: QPC, comp: BaseForm, corep: Corep, side: Side) -> BaseForm:
    h = embed(comp, corep)
    if Side(side) == Side.LEFT:
        image = bundle_calculus.cov_deriv(omega, h)
    else:
        star = bundle_calculus.total_star
        image = star(bundle_calculus.cov_deriv(omega, star(h)))
    return upsilon(image, corep, comp.degree + 1)


def nabla(omega: QPC, t: Section) -> VForm:
    _require_supported(t.corep)
    return VForm(t.corep, _covariant(omega, t.p, t.corep, Side.LEFT), Side.LEFT)


def nabla_hat(omega: QPC, t: Section) -> VForm:
    _require_supported(t.corep)
    return VForm(t.corep, _covariant(omega, t.p, t.corep, Side.RIGHT), Side.RIGHT)


def ext_cov_deriv(omega: QPC, psi: VForm) -> VForm:
    _require_supported(psi.corep)
    if psi.degree >= MAX_DEGREE:
        raise DegreeMismatchError(f"exterior covariant derivative of a {psi.degree}-form leaves the calculus")
    return VForm(psi.corep, _covariant(omega, psi.comp, psi.corep, psi.side), psi.side)


@calibrated_cache
def ext_cov_matrix(omega: QPC, corep: Corep, degree: int, side: Side):
    """Exact matrix of d^nabla from qvb-valued k-forms to (k+1)-forms."""
    return base_calculus.operator_matrix(
        lambda e: ext_cov_deriv(omega, VForm(corep, e, side)).comp, degree
    )


@calibrated_cache
def vform_gram(corep: Corep, degree: int, side: Side):
    basis = [VForm(corep, e, side) for e in BaseForm.basis_elements(degree)]
    return exact_linalg.gram_matrix(basis, vform_inner)


def adjoint_ext_cov(omega: QPC, psi: VForm) -> VForm:
    """Adjoint of d^nabla with respect to the extended inner products."""
    _require_supported(psi.corep)
    k = psi.degree
    if k == 0:
        raise DegreeMismatchError("no adjoint exterior covariant derivative on 0-forms")
    a = ext_cov_matrix(omega, psi.corep, k - 1, psi.side)
    adjoint = exact_linalg.adjoint_matrix(
        a,
        vform_gram(psi.corep, k - 1, psi.side),
        vform_gram(psi.corep, k, psi.side),
        base_calculus.inner_linearity(psi.side),
    )
    values = exact_linalg.to_column(adjoint.matmul(exact_linalg.column(psi.comp.c)))
    return VForm(psi.corep, BaseForm(k - 1, tuple(values)), psi.side)


def laplacian_transcribed(omega: QPC, t: Section, side: Side = Side.LEFT) -> Section:
    """Closed-form component formulas for the nabla-star-nabla composite."""
    _require_supported(t.corep)
    p0, p1 = t.p.c
    if t.corep.name == "trivial":
        return t.with_p(BaseForm(0, (2 * (p0 - p1), -2 * (p0 - p1))))
    l0, l1 = omega.lambda0, omega.lambda1
    if Side(side) == Side.LEFT:
        mid0, mid1 = p1 * l1, p0 * l0
    else:
        mid0, mid1 = p1 * l0, p0 * l1
    u0 = 2 * (p0 - p1) + 2 * I * p0 * (l0 + l1) - 4 * I * mid0 - 4 * p0 * l0 * l1
    u1 = -2 * (p0 - p1) + 2 * I * p1 * (l0 + l1) - 4 * I * mid1 - 4 * p1 * l0 * l1
    return t.with_p(BaseForm(0, (u0, u1)))


def laplacian(
    omega: QPC,
    t: Section,
    side: Side = Side.LEFT,
    formula: LaplacianFormula = LaplacianFormula.TRANSCRIBED,
) -> Section:
    """nabla-star applied to nabla T (left) or the hatted version (right).

    The component formulas are the default; ``COMPOSITE`` evaluates the
    Gram adjoint of the exterior covariant derivative instead. The two agree
    when both connection parameters are real.
    """
    if LaplacianFormula(formula) == LaplacianFormula.TRANSCRIBED:
        return laplacian_transcribed(omega, t, side)
    first = nabla(omega, t) if Side(side) == Side.LEFT else nabla_hat(omega, t)
    return t.with_p(adjoint_ext_cov(omega, first).comp)


def laplacian_discrepancy(omega: QPC, t: Section, side: Side = Side.LEFT) -> BaseForm:
    """Component formulas minus the composite; zero on real connections."""
    transcribed = laplacian(omega, t, side, LaplacianFormula.TRANSCRIBED)
    composite = laplacian(omega, t, side, LaplacianFormula.COMPOSITE)
    return transcribed.p - composite.p


def k_lambda(lam: AdForm, t: Section, side: Side = Side.LEFT) -> VForm:
    """K^lambda(T) = -T^(0) lambda(pi(T^(1))); the right version is ``* . K . *``."""
    _require_supported(t.corep)
    if lam.degree != 1:
        raise DegreeMismatchError(f"K^lambda needs a 1-form lambda, got degree {lam.degree}")
    h = section_tensor(t)
    star = bundle_calculus.total_star
    if Side(side) == Side.RIGHT:
        h = star(h)
    value = Tensor.zero(bundle_calculus.PG)
    lam_value = bundle_calculus.total(lam.comp, GroupForm.unit())
    for leg, rest in graded_tensor.split_last(bundle_calculus.psi(h)).items():
        germ = group_hopf.germ_coefficient(GroupForm.basis(*leg))
        if germ:
            value = value - bundle_calculus.total_mul(rest, lam_value.scale(germ))
    if Side(side) == Side.RIGHT:
        value = star(value)
    return VForm(t.corep, upsilon(value, t.corep, 1), Side(side))
