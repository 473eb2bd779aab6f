"""Exact field operations on ExactC and the exact/float bridge."""

import logging
from enum import Enum
from fractions import Fraction
from typing import Optional

from qpb.config import get_settings
from qpb.errors import NotSnappableError
from qpb.models.scalar import ApproxC, ExactC

logger = logging.getLogger(__name__)


class ArithOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"
    CONJ = "conj"
    NEG = "neg"


def arith(a: ExactC, b: Optional[ExactC], op: ArithOp) -> ExactC:
    """Apply ``op`` to ``a`` (and ``b`` for binary operations).

    Division by zero raises ExactDivisionError.
    """
    op = ArithOp(op)
    if op == ArithOp.CONJ:
        return a.conj()
    if op == ArithOp.NEG:
        return -a
    if b is None:
        raise ValueError(f"{op.value} needs two operands")
    if op == ArithOp.ADD:
        return a + b
    if op == ArithOp.SUB:
        return a - b
    if op == ArithOp.MUL:
        return a * b
    return a / b


def to_approx(a: ExactC) -> ApproxC:
    return ApproxC(float(a.re), float(a.im))


def snap_real(x: float, tol: float, max_denom: int) -> Fraction:
    """Closest rational with denominator <= max_denom, if within tol."""
    q = Fraction(x).limit_denominator(max_denom)
    if abs(float(q) - x) > tol:
        raise NotSnappableError(f"{x!r} has no rational within {tol:g} (max denominator {max_denom})")
    return q


def from_approx(a: ApproxC | complex, tol: Optional[float] = None, max_denom: Optional[int] = None) -> ExactC:
    """Reconstruct an exact value by continued-fraction snapping of both parts."""
    settings = get_settings()
    tol = settings.snap_tol if tol is None else tol
    max_denom = settings.max_denom if max_denom is None else max_denom
    z = complex(a)
    value = ExactC(snap_real(z.real, tol, max_denom), snap_real(z.imag, tol, max_denom))
    logger.debug("snapped %r to %s", z, value)
    return value


def snap_nearest(a: ApproxC | complex, max_denom: Optional[int] = None) -> ExactC:
    """Closest Gaussian rational with bounded denominators, without a tolerance check."""
    max_denom = get_settings().max_denom if max_denom is None else max_denom
    z = complex(a)
    return ExactC(Fraction(z.real).limit_denominator(max_denom), Fraction(z.imag).limit_denominator(max_denom))
