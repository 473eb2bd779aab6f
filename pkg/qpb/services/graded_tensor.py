"""Graded tensor algebra over base and group forms.

Implements the product ``(a1 x a2)(b1 x b2) = (-1)^{|a2||b1|} a1 b1 x a2 b2``
(and its n-leg generalization), the Leibniz differential with Koszul signs,
the involution ``(a1 x a2)* = (-1)^{|a1||a2|} a1* x a2*``, and leg-wise
linear maps. Products of basis legs are tabulated per calibration.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Callable

from qpb.models.forms import PairForm
from qpb.models.scalar import ExactC, ONE
from qpb.models.tensor import FORM_TYPES, Key, Leg, Space, Tensor
from qpb.services import base_calculus, group_hopf
from qpb.services.calibration import Calibration, current_calibration

logger = logging.getLogger(__name__)

_ALGEBRAS = {
    Space.BASE: (base_calculus.mul, base_calculus.d, base_calculus.star),
    Space.GROUP: (group_hopf.mul, group_hopf.d, group_hopf.star),
}


def _expand(form: PairForm) -> tuple[tuple[Leg, ExactC], ...]:
    return tuple(((form.degree, idx), c) for idx, c in enumerate(form.c) if c)


@lru_cache(maxsize=None)
def _leg_product(space: Space, a: Leg, b: Leg, calibration: Calibration):
    mul = _ALGEBRAS[space][0]
    cls = FORM_TYPES[space]
    return _expand(mul(cls.basis(*a), cls.basis(*b)))


@lru_cache(maxsize=None)
def _leg_d(space: Space, a: Leg):
    return _expand(_ALGEBRAS[space][1](FORM_TYPES[space].basis(*a)))


@lru_cache(maxsize=None)
def _leg_star(space: Space, a: Leg):
    return _expand(_ALGEBRAS[space][2](FORM_TYPES[space].basis(*a)))


def _combine(spaces, factors, coef: ExactC, out: dict):
    """Accumulate the cartesian product of per-leg expansions into ``out``."""
    for choice in product(*factors):
        key = tuple(leg for leg, _ in choice)
        value = coef
        for _, c in choice:
            value = value * c
        out[key] = out.get(key, ExactC(0)) + value


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def mul(a: Tensor, b: Tensor) -> Tensor:
    if a.spaces != b.spaces:
        raise TypeError(f"cannot multiply tensors over {a.spaces} and {b.spaces}")
    calibration = current_calibration()
    out: dict[Key, ExactC] = {}
    n = len(a.spaces)
    for ka, ca in a.items():
        for kb, cb in b.items():
            if sum(l[0] for l in ka) + sum(l[0] for l in kb) > 2:
                continue
            crossing = sum(ka[i][0] * kb[j][0] for i in range(n) for j in range(i))
            factors = [_leg_product(a.spaces[i], ka[i], kb[i], calibration) for i in range(n)]
            _combine(a.spaces, factors, ca * cb * _sign(crossing), out)
    return Tensor(a.spaces, out)


def mul_all(*tensors: Tensor) -> Tensor:
    result = tensors[0]
    for t in tensors[1:]:
        result = mul(result, t)
    return result


def d(t: Tensor) -> Tensor:
    out: dict[Key, ExactC] = {}
    for key, coef in t.items():
        passed = 0
        for i, space in enumerate(t.spaces):
            for leg, c in _leg_d(space, key[i]):
                new_key = key[:i] + (leg,) + key[i + 1:]
                out[new_key] = out.get(new_key, ExactC(0)) + coef * c * _sign(passed)
            passed += key[i][0]
    return Tensor(t.spaces, out)


def star(t: Tensor) -> Tensor:
    out: dict[Key, ExactC] = {}
    n = len(t.spaces)
    for key, coef in t.items():
        exponent = sum(key[i][0] * key[j][0] for i in range(n) for j in range(i + 1, n))
        factors = [_leg_star(t.spaces[i], key[i]) for i in range(n)]
        _combine(t.spaces, factors, coef.conj() * _sign(exponent), out)
    return Tensor(t.spaces, out)


def unit(spaces: tuple[Space, ...]) -> Tensor:
    return Tensor.pure(*(FORM_TYPES[s].unit() for s in spaces))


def outer(a: Tensor, b: Tensor) -> Tensor:
    terms = {ka + kb: ca * cb for ka, ca in a.items() for kb, cb in b.items()}
    return Tensor(a.spaces + b.spaces, terms)


def apply_leg(t: Tensor, position: int, fn: Callable[[Leg], Tensor], out_spaces: tuple[Space, ...]) -> Tensor:
    """Replace leg ``position`` by the image of a degree-preserving linear map.

    ``fn`` maps a basis leg of ``t.spaces[position]`` to a tensor over
    ``out_spaces``; no Koszul sign arises since the map is even.
    """
    spaces = t.spaces[:position] + tuple(out_spaces) + t.spaces[position + 1:]
    out: dict[Key, ExactC] = {}
    for key, coef in t.items():
        image = fn(key[position])
        for ikey, icoef in image.items():
            new_key = key[:position] + ikey + key[position + 1:]
            out[new_key] = out.get(new_key, ExactC(0)) + coef * icoef
    return Tensor(spaces, out)


def multiply_blocks(t: Tensor, split: int) -> Tensor:
    """Read ``t`` as an element of A x A (first ``split`` legs, rest) and multiply."""
    left_spaces, right_spaces = t.spaces[:split], t.spaces[split:]
    result = Tensor.zero(left_spaces)
    for key, coef in t.items():
        left = Tensor(left_spaces, {key[:split]: coef})
        right = Tensor(right_spaces, {key[split:]: ONE})
        result = result + mul(left, right)
    return result


def split_last(t: Tensor) -> dict[Leg, Tensor]:
    """Group terms by their last leg: ``t = sum_l rest_l x l``."""
    groups: dict[Leg, dict[Key, ExactC]] = {}
    for key, coef in t.items():
        groups.setdefault(key[-1], {})[key[:-1]] = coef
    return {leg: Tensor(t.spaces[:-1], terms) for leg, terms in groups.items()}
