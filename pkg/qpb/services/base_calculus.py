"""Differential *-calculus of the two-point space.

Forms are 2x2 matrices: diagonal in degrees 0 and 2, off diagonal in
degree 1. Products are matrix products, except that two 1-forms multiply
to ``phase * (matrix product)`` read in the degree-2 picture, where the
phase comes from the active calibration. Anything above degree 2 is zero.
"""

import logging
from fractions import Fraction

from qpb.errors import DegreeMismatchError
from qpb.models.forms import BaseForm, MAX_DEGREE, MixedForm, Side
from qpb.models.scalar import ExactC, I
from qpb.services.calibration import calibrated_cache, current_calibration
from qpb.services import exact_linalg

logger = logging.getLogger(__name__)

HALF_I = ExactC(0, Fraction(1, 2))


def dvol() -> BaseForm:
    """Volume form ``[-i, i]_2``."""
    return BaseForm(2, (-I, I))


def mul(a: BaseForm, b: BaseForm) -> BaseForm:
    """Product in Omega(M), truncated above degree 2."""
    degree = a.degree + b.degree
    if degree > MAX_DEGREE or a.is_zero() or b.is_zero():
        return BaseForm.zero(degree)
    (a0, a1), (b0, b1) = a.c, b.c
    if a.degree == 1 and b.degree == 1:
        phase = current_calibration().product_phase
        return BaseForm(2, (phase * a0 * b1, phase * a1 * b0))
    if a.degree == 1:
        # off-diagonal times diagonal swaps which entry of b is picked
        return BaseForm(1, (a0 * b1, a1 * b0))
    return BaseForm(degree, (a0 * b0, a1 * b1))


def d(a: BaseForm) -> BaseForm:
    if a.degree == 0:
        z0, z1 = a.c
        return BaseForm(1, (I * (z1 - z0), I * (z0 - z1)))
    if a.degree == 1:
        s = -(a.c[0] + a.c[1])
        return BaseForm(2, (s, s))
    return BaseForm.zero(a.degree + 1)


def star(a: BaseForm) -> BaseForm:
    """The *-involution: conjugation, with the two entries swapped in degree 1."""
    if a.degree == 1:
        return BaseForm(1, (a.c[1].conj(), a.c[0].conj()))
    return a.map(ExactC.conj)


def _over_dvol(a: BaseForm) -> BaseForm:
    """The degree-0 form p with ``a = p dvol``."""
    v0, v1 = a.c
    return BaseForm(0, (I * v0, -I * v1))


def herm(a: BaseForm, b: BaseForm, side: Side = Side.LEFT) -> BaseForm:
    """Degree-0 hermitian structure; left is linear in ``a``."""
    if a.degree != b.degree:
        raise DegreeMismatchError(f"hermitian structure of degrees {a.degree} and {b.degree}")
    if Side(side) == Side.RIGHT:
        return herm(star(a), star(b), Side.LEFT)
    if a.degree == 0:
        return mul(a, star(b))
    if a.degree == 1:
        return BaseForm(0, (a.c[0] * b.c[0].conj(), a.c[1] * b.c[1].conj()))
    return mul(_over_dvol(a), star(_over_dvol(b)))


def integral(a: BaseForm) -> ExactC:
    if a.degree != 2:
        raise DegreeMismatchError(f"only 2-forms are integrated, got degree {a.degree}")
    return HALF_I * (a.c[0] - a.c[1])


def inner(a: BaseForm, b: BaseForm, side: Side = Side.LEFT) -> ExactC:
    return integral(mul(herm(a, b, side), dvol()))


def hodge(a: BaseForm, side: Side = Side.LEFT) -> BaseForm:
    """Hodge operator; it squares to the identity."""
    if Side(side) == Side.RIGHT:
        return star(hodge(star(a), Side.LEFT))
    sign = current_calibration().hodge_even_sign
    if a.degree == 0:
        return mul(a, dvol()).scale(sign)
    if a.degree == 1:
        return BaseForm(1, (-a.c[0], a.c[1]))
    return _over_dvol(a).scale(sign)


def codiff(a: BaseForm, side: Side = Side.LEFT) -> BaseForm:
    """Codifferential from its displayed component formulas."""
    if Side(side) == Side.RIGHT:
        return star(codiff(star(a), Side.LEFT))
    z0, z1 = a.c
    if a.degree == 1:
        return BaseForm(0, (I * (z0 - z1), -I * (z0 - z1)))
    if a.degree == 2:
        s = -(z0 + z1)
        return BaseForm(1, (s, s))
    return BaseForm.zero(a.degree - 1)


def hodge_codiff(a: BaseForm, side: Side = Side.LEFT) -> BaseForm:
    """The composite hodge . d . hodge, which must agree with ``codiff``."""
    return hodge(d(hodge(a, side)), side)


def coords(a: BaseForm) -> tuple[ExactC, ExactC]:
    return a.c


def operator_matrix(op, degree: int):
    """Exact matrix of a linear map on k-forms in the component basis."""
    return exact_linalg.operator_matrix(op, BaseForm.basis_elements(degree), coords)


@calibrated_cache
def gram(degree: int, side: Side = Side.LEFT):
    return exact_linalg.gram_matrix(BaseForm.basis_elements(degree), lambda a, b: inner(a, b, side))


def inner_linearity(side: Side) -> exact_linalg.Linearity:
    """Left pairings are linear in the first slot, right ones in the second."""
    if Side(side) == Side.LEFT:
        return exact_linalg.Linearity.FIRST
    return exact_linalg.Linearity.SECOND


def mixed_mul(a: MixedForm, b: MixedForm) -> MixedForm:
    """Degree-by-degree product of inhomogeneous forms, truncated above degree 2."""
    terms = [mul(a[i], b[j]) for i in range(MAX_DEGREE + 1) for j in range(MAX_DEGREE + 1 - i)]
    return MixedForm.of(*terms)


def mixed_d(a: MixedForm) -> MixedForm:
    """Satisfies ``d(ab) = d(a) b + a' d(b)`` with ``a'`` the grade involution of ``a``."""
    return MixedForm.of(*(d(a[k]) for k in range(MAX_DEGREE)))
