"""The gauge group: convolution-invertible gauge maps and their action.

The structure group is commutative, so the adjoint coaction is trivial and
Ad-covariance of a gauge map means that every image has the shape
``nu x 1``. The action on connections then reduces to
``F_f omega (sigma) = omega(sigma) + f(sigma)``; it is nevertheless computed
through the coaction below so the reduction is checked rather than assumed.
"""

import logging
from typing import Union

from qpb.errors import (
    NotAConnectionError,
    NotAGaugeMapError,
    NotConvolutionInvertibleError,
    SingularSystemError,
)
from qpb.models.connection import QPC
from qpb.models.forms import BaseForm, GroupForm, MAX_DEGREE, Side
from qpb.models.gauge import GROUP_LEGS, TOTAL_SPACES, GaugeMap, total_basis
from qpb.models.scalar import ExactC, ONE
from qpb.models.sections import Section
from qpb.models.tensor import Tensor
from qpb.services import associated_qvb, bundle_calculus, exact_linalg, graded_tensor, group_hopf

logger = logging.getLogger(__name__)


def _scalar_image(c) -> Tensor:
    return bundle_calculus.total_unit().scale(c)


def scalar_map(c0, c1, name: str = "") -> GaugeMap:
    """``Delta_0 -> c0 1``, ``Delta_1 -> c1 1``, zero on higher degrees."""
    return GaugeMap({(0, 0): _scalar_image(c0), (0, 1): _scalar_image(c1)}, name)


def unit_map() -> GaugeMap:
    """Convolution unit ``1 epsilon``; the counit is extended by zero to degrees >= 1."""
    return scalar_map(group_hopf.counit(GroupForm.delta(0)), group_hopf.counit(GroupForm.delta(1)), "unit")


def phase_map(q) -> GaugeMap:
    """The map with ``f(1) = 1`` and ``f(1^alt) = q 1``; unit-modulus ``q`` gives the e^{it} family."""
    q = ExactC.coerce(q)
    half = ExactC(1) / 2
    return scalar_map(half * (ONE + q), half * (ONE - q), f"phase({q})")


def f_sigma() -> GaugeMap:
    """Evaluation at the non-trivial group element."""
    return phase_map(-1).named("sigma")


def shift_map(nu: BaseForm) -> GaugeMap:
    """Unit on degree 0 with ``f(sigma) = nu x 1``: translates every connection by ``nu``."""
    if nu.degree != 1:
        raise NotAGaugeMapError(f"shift needs a 1-form, got degree {nu.degree}")
    images = dict(unit_map().images)
    images[(1, 0)] = bundle_calculus.total(nu, GroupForm.unit())
    return GaugeMap(images, f"shift({nu})")


def _apply(f: GaugeMap, theta: Tensor, position: int) -> Tensor:
    return graded_tensor.apply_leg(theta, position, f.image, TOTAL_SPACES)


def evaluate(f: GaugeMap, theta: GroupForm) -> Tensor:
    result = Tensor.zero(TOTAL_SPACES)
    for idx, coef in enumerate(theta.c):
        if coef:
            result = result + f.image((theta.degree, idx)).scale(coef)
    return result


def convolve(f1: GaugeMap, f2: GaugeMap) -> GaugeMap:
    """``(f1 * f2)(theta) = f1(theta_(1)) f2(theta_(2))`` with the extended coproduct."""
    images = {}
    for leg in GROUP_LEGS:
        split = group_hopf.leg_phi_hat(leg)
        both = _apply(f2, _apply(f1, split, 0), 2)
        images[leg] = graded_tensor.multiply_blocks(both, 2)
    return GaugeMap(images, f"{f1.name}*{f2.name}" if f1.name and f2.name else "")


def _coordinates(t: Tensor, degree: int) -> list[ExactC]:
    return [t.terms.get(key, ExactC(0)) for key in total_basis(degree)]


def _with_block(images: dict, degree: int, values: list[ExactC]) -> GaugeMap:
    keys = total_basis(degree)
    n = len(keys)
    full = dict(images)
    for x in (0, 1):
        terms = dict(zip(keys, values[x * n:(x + 1) * n]))
        full[(degree, x)] = Tensor(TOTAL_SPACES, terms)
    return GaugeMap(full)


def _solve_side(f: GaugeMap, left: bool) -> GaugeMap:
    """Solve ``f * g = 1 epsilon`` (or ``g * f``) degree by degree.

    The degree-k block of the equation is affine in the degree-k images of
    ``g`` once the lower blocks are known.
    """
    unit = unit_map()
    images: dict = {}
    for degree in range(MAX_DEGREE + 1):
        n = len(total_basis(degree))

        def residual(values):
            g = _with_block(images, degree, values)
            conv = convolve(f, g) if left else convolve(g, f)
            out = []
            for x in (0, 1):
                diff = conv.image((degree, x)) - unit.image((degree, x))
                out.extend(_coordinates(diff, degree))
            return out

        zero = [ExactC(0)] * (2 * n)
        offset = residual(zero)
        columns = []
        for j in range(2 * n):
            e = list(zero)
            e[j] = ONE
            columns.append([a - b for a, b in zip(residual(e), offset)])
        a = exact_linalg.matrix([[columns[j][i] for j in range(2 * n)] for i in range(2 * n)])
        try:
            solution = exact_linalg.solve_unique(a, [-z for z in offset])
        except SingularSystemError as exc:
            raise NotConvolutionInvertibleError(f"{f.name or 'gauge map'} is not convolution invertible") from exc
        images = dict(_with_block(images, degree, solution).images)
    return GaugeMap(images)


def conv_inverse(f: GaugeMap) -> GaugeMap:
    g = _solve_side(f, left=True)
    unit = unit_map()
    if convolve(f, g) != unit or convolve(g, f) != unit:
        raise NotConvolutionInvertibleError(f"{f.name or 'gauge map'} has no two-sided convolution inverse")
    logger.debug("convolution inverse of %s computed", f.name or "gauge map")
    return g.named(f"{f.name}^-1" if f.name else "")


def is_covariant(f: GaugeMap) -> bool:
    """``Psi . f = (f x id) . Ad`` on every basis form."""
    for leg in GROUP_LEGS:
        lhs = bundle_calculus.psi(f.image(leg))
        rhs = _apply(f, group_hopf.leg_ad(leg), 0)
        if lhs != rhs:
            return False
    return True


def gauge_violations(f: GaugeMap) -> list[str]:
    failures = []
    if evaluate(f, GroupForm.unit()) != bundle_calculus.total_unit():
        failures.append("f(1) != 1")
    if not is_covariant(f):
        failures.append("Ad-covariance fails")
    try:
        conv_inverse(f)
    except NotConvolutionInvertibleError as exc:
        failures.append(str(exc))
    return failures


def is_gauge_map(f: GaugeMap) -> bool:
    return not gauge_violations(f)


def _require_gauge(f: GaugeMap):
    failures = gauge_violations(f)
    if failures:
        raise NotAGaugeMapError(f"{f.name or 'map'} is not a gauge map: {'; '.join(failures)}")


def transform(f: GaugeMap, h: Tensor) -> Tensor:
    """``F_f = m . (id x f) . Psi`` on a total-space form."""
    return graded_tensor.multiply_blocks(_apply(f, bundle_calculus.psi(h), 2), 2)


def _act_on_connection(f: GaugeMap, omega: QPC) -> QPC:
    value = transform(f, bundle_calculus.connection_value(omega))
    rest = value - bundle_calculus.total(BaseForm.unit(), group_hopf.sigma())
    try:
        mu = bundle_calculus.base_part(rest, 1)
    except (ValueError, NotAConnectionError) as exc:
        raise NotAConnectionError(f"F_f omega is not of the shape mu x 1 + 1 x sigma: {value}") from exc
    return QPC.from_mu(mu)


def _act_on_section(f: GaugeMap, t: Section, side: Side) -> Section:
    h = associated_qvb.section_tensor(t)
    if Side(side) == Side.LEFT:
        image = transform(f, h)
    else:
        star = bundle_calculus.total_star
        image = star(transform(f, star(h)))
    return t.with_p(associated_qvb.upsilon(image, t.corep, 0))


def gauge_action(f: GaugeMap, x: Union[QPC, Section], side: Side = Side.LEFT, check: bool = True):
    """Act on a connection (``F_f . omega``) or a section (left ``F_f T``, right ``* F_f * T``)."""
    if check:
        _require_gauge(f)
    if isinstance(x, QPC):
        return _act_on_connection(f, x)
    return _act_on_section(f, x, side)


def in_gg_ym(f: GaugeMap) -> bool:
    """True iff ``F_f . omega_triv = omega_triv``."""
    _require_gauge(f)
    return gauge_action(f, QPC.trivial(), check=False) == QPC.trivial()
