"""The Hopf *-algebra C(S2) and its universal differential calculus.

Group forms use the path picture: degree-0 forms are functions on the two
group elements, 1-forms live on the paths 0->1 and 1->0, 2-forms on the
closed paths 0->1->0 and 1->0->1. Products concatenate paths, so the
calculus needs no calibration constant.
"""

import logging
from enum import Enum
from functools import lru_cache
from typing import Union

from qpb.errors import DegreeMismatchError, UnsupportedCorepError
from qpb.models.corep import Corep
from qpb.models.forms import GroupForm, MAX_DEGREE
from qpb.models.scalar import ExactC, ONE
from qpb.models.tensor import Leg, Space, Tensor

logger = logging.getLogger(__name__)

GG = (Space.GROUP, Space.GROUP)


class HopfMap(str, Enum):
    COPRODUCT = "coproduct"
    COUNIT = "counit"
    ANTIPODE = "antipode"


def mul(a: GroupForm, b: GroupForm) -> GroupForm:
    degree = a.degree + b.degree
    if degree > MAX_DEGREE or a.is_zero() or b.is_zero():
        return GroupForm.zero(degree)
    (a0, a1), (b0, b1) = a.c, b.c
    if a.degree == 1:
        # a path 0->1 continues with whatever starts at 1
        return GroupForm(degree, (a0 * b1, a1 * b0))
    return GroupForm(degree, (a0 * b0, a1 * b1))


def d(a: GroupForm) -> GroupForm:
    if a.degree == 0:
        g0, g1 = a.c
        return GroupForm(1, (g1 - g0, g0 - g1))
    if a.degree == 1:
        s = a.c[0] + a.c[1]
        return GroupForm(2, (s, s))
    return GroupForm.zero(a.degree + 1)


def star(a: GroupForm) -> GroupForm:
    if a.degree == 0:
        return a.map(ExactC.conj)
    if a.degree == 1:
        return GroupForm(1, (-a.c[1].conj(), -a.c[0].conj()))
    return a.map(lambda z: -z.conj())


def coproduct(g: GroupForm) -> Tensor:
    """phi(Delta_b) = sum_a Delta_a x Delta_{a+b}."""
    _require_degree_zero(g)
    terms = {}
    for b, coef in enumerate(g.c):
        for a in (0, 1):
            terms[((0, a), (0, (a + b) % 2))] = coef
    return Tensor(GG, terms)


def counit(g: GroupForm) -> ExactC:
    _require_degree_zero(g)
    return g.c[0]


def antipode(g: GroupForm) -> GroupForm:
    """Every element of S2 is its own inverse, so the antipode is the identity."""
    _require_degree_zero(g)
    return g


def hopf(g: GroupForm, which: HopfMap) -> Union[Tensor, ExactC, GroupForm]:
    which = HopfMap(which)
    if which == HopfMap.COPRODUCT:
        return coproduct(g)
    if which == HopfMap.COUNIT:
        return counit(g)
    return antipode(g)


def _require_degree_zero(g: GroupForm):
    if g.degree != 0:
        raise DegreeMismatchError(f"Hopf structure maps act on degree 0, got {g.degree}")


def sigma() -> GroupForm:
    return GroupForm.sigma()


def germs(g: GroupForm) -> GroupForm:
    """Quantum germs map pi(g) = kappa(g_(1)) d g_(2)."""
    _require_degree_zero(g)
    result = GroupForm.zero(1)
    for b, coef in enumerate(g.c):
        for a in (0, 1):
            term = mul(antipode(GroupForm.delta(a)), d(GroupForm.delta((a + b) % 2)))
            result = result + term.scale(coef)
    return result


@lru_cache(maxsize=None)
def germ_coefficient(g: GroupForm) -> ExactC:
    """Coefficient c with pi(g) = c * sigma; the germs image is spanned by sigma."""
    image = germs(g)
    if image.c[0] != image.c[1]:
        raise ValueError(f"germs image {image} is not a multiple of sigma")
    return image.c[0]


def basis_word(leg: Leg) -> list[GroupForm]:
    """Factorization of a basis form into Delta's and dDelta's.

    Degree 1: ``(1, 0) = Delta_0 dDelta_1``, ``(1, 1) = Delta_1 dDelta_0``;
    degree 2: ``(2, 0) = Delta_0 dDelta_1 dDelta_0``, ``(2, 1) = Delta_1 dDelta_0 dDelta_1``.
    """
    degree, x = leg
    word = [GroupForm.delta(x)]
    y = x
    for _ in range(degree):
        y = 1 - y
        word.append(d(GroupForm.delta(y)))
    return word


def _extend(on_delta) -> dict[Leg, Tensor]:
    """Extend a map given on Delta_b to all basis forms, multiplicatively and commuting with d."""
    from qpb.services import graded_tensor

    images = {}
    for degree in range(MAX_DEGREE + 1):
        for x in (0, 1):
            factors = []
            y = x
            factors.append(on_delta(x))
            for _ in range(degree):
                y = 1 - y
                factors.append(graded_tensor.d(on_delta(y)))
            images[(degree, x)] = graded_tensor.mul_all(*factors)
    return images


@lru_cache(maxsize=1)
def _phi_hat_table() -> dict[Leg, Tensor]:
    return _extend(lambda b: coproduct(GroupForm.delta(b)))


@lru_cache(maxsize=1)
def _ad_table() -> dict[Leg, Tensor]:
    from qpb.services import graded_tensor

    def ad_delta(b: int) -> Tensor:
        # Ad(g) = g_(2) x kappa(g_(1)) g_(3)
        result = Tensor.zero(GG)
        for key1, c1 in coproduct(GroupForm.delta(b)).items():
            first, rest = key1
            for key2, c2 in coproduct(GroupForm.delta(rest[1])).items():
                middle, last = key2
                outer_g = mul(antipode(GroupForm.delta(first[1])), GroupForm.delta(last[1]))
                piece = Tensor.pure(GroupForm.delta(middle[1]), outer_g).scale(c1 * c2)
                result = result + piece
        return result

    return _extend(ad_delta)


def leg_phi_hat(leg: Leg) -> Tensor:
    return _phi_hat_table()[leg]


def leg_ad(leg: Leg) -> Tensor:
    return _ad_table()[leg]


def _apply_table(theta: GroupForm, table: dict[Leg, Tensor]) -> Tensor:
    result = Tensor.zero(GG)
    for idx, coef in enumerate(theta.c):
        if coef:
            result = result + table[(theta.degree, idx)].scale(coef)
    return result


def phi_hat(theta: GroupForm) -> Tensor:
    """The coproduct extended to the calculus as a graded differential map."""
    return _apply_table(theta, _phi_hat_table())


def ad_coaction(theta: GroupForm) -> Tensor:
    """Right adjoint coaction, extended to the calculus."""
    return _apply_table(theta, _ad_table())


CATALOG = ("trivial", "alternating")


def corep_catalog(name: str) -> Corep:
    if name == "trivial":
        return Corep(name="trivial", matrix=((GroupForm.unit(),),))
    if name == "alternating":
        return Corep(name="alternating", matrix=((GroupForm.alternating(),),))
    raise UnsupportedCorepError(f"unknown corepresentation {name!r}; expected one of {CATALOG}")


def conjugate(alpha: Corep) -> Corep:
    matrix = tuple(tuple(star(v) for v in row) for row in alpha.matrix)
    name = alpha.name if matrix == alpha.matrix else f"conj({alpha.name})"
    return Corep(name=name, matrix=matrix)


def direct_sum(*coreps: Corep) -> Corep:
    dim = sum(c.dim for c in coreps)
    rows = [[GroupForm.zero(0)] * dim for _ in range(dim)]
    offset = 0
    for c in coreps:
        for i in range(c.dim):
            for j in range(c.dim):
                rows[offset + i][offset + j] = c.matrix[i][j]
        offset += c.dim
    return Corep(name="+".join(c.name for c in coreps), matrix=tuple(tuple(r) for r in rows))


def corep_violations(alpha: Corep) -> list[str]:
    """Failed corepresentation laws: coaction, counit and unitarity."""
    failures = []
    n = alpha.dim
    v = alpha.matrix
    for i in range(n):
        for j in range(n):
            expected = Tensor.zero(GG)
            for k in range(n):
                expected = expected + Tensor.pure(v[i][k], v[k][j])
            if coproduct(v[i][j]) != expected:
                failures.append(f"coaction law fails at ({i},{j})")
            if counit(v[i][j]) != (1 if i == j else 0):
                failures.append(f"counit law fails at ({i},{j})")
            unit = GroupForm.unit() if i == j else GroupForm.zero(0)
            left = GroupForm.zero(0)
            right = GroupForm.zero(0)
            for k in range(n):
                left = left + mul(star(v[k][i]), v[k][j])
                right = right + mul(v[i][k], star(v[j][k]))
            if left != unit or right != unit:
                failures.append(f"unitarity fails at ({i},{j})")
    return failures
