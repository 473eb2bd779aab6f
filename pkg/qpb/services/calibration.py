"""Convention constants that the calculus formulas leave open.

Three conventions are not fixed by the displayed formulas alone:

* ``product_phase``: scalar in front of the product of two base 1-forms;
* ``hodge_even_sign``: global sign of the Hodge operator on degrees 0 and 2;
* ``connection_sign``: sign of the connection term in the covariant derivative.

The active choice is a context variable so a whole computation can be re-run
under a different convention (``use_calibration``). The default is the unique
combination that passes the law checks; see ``VerificationEngine.calibration_ledger``.
"""

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache, wraps
from itertools import product
from typing import Callable, Iterator, TypeVar

from qpb.models.scalar import ExactC, I, ONE


class CalibrationFlip(str, Enum):
    PHASE = "phase"
    HODGE = "hodge"
    CONNECTION = "connection"


@dataclass(frozen=True)
class Calibration:
    product_phase: ExactC = I
    hodge_even_sign: int = 1
    connection_sign: int = 1

    def flipped(self, which: CalibrationFlip) -> "Calibration":
        which = CalibrationFlip(which)
        if which == CalibrationFlip.PHASE:
            return replace(self, product_phase=-self.product_phase)
        if which == CalibrationFlip.HODGE:
            return replace(self, hodge_even_sign=-self.hodge_even_sign)
        return replace(self, connection_sign=-self.connection_sign)

    def to_dict(self) -> dict:
        return {
            "product_phase": str(self.product_phase),
            "hodge_even_sign": self.hodge_even_sign,
            "connection_sign": self.connection_sign,
        }


DEFAULT_CALIBRATION = Calibration()

_active: ContextVar[Calibration] = ContextVar("qpb_calibration", default=DEFAULT_CALIBRATION)


def current_calibration() -> Calibration:
    return _active.get()


T = TypeVar("T")


def calibrated_cache(fn: Callable[..., T]) -> Callable[..., T]:
    """``lru_cache`` keyed on the arguments and the active calibration.

    For exact matrix builders whose result depends on the calibration.
    Cached matrices are shared between callers, which must not mutate them.
    """

    @lru_cache(maxsize=None)
    def cached(calibration: Calibration, *args, **kwargs):
        return fn(*args, **kwargs)

    @wraps(fn)
    def wrapper(*args, **kwargs):
        return cached(current_calibration(), *args, **kwargs)

    wrapper.cache_clear = cached.cache_clear
    wrapper.cache_info = cached.cache_info
    return wrapper


@contextmanager
def use_calibration(calibration: Calibration) -> Iterator[Calibration]:
    token = _active.set(calibration)
    try:
        yield calibration
    finally:
        _active.reset(token)


def calibration_candidates() -> list[Calibration]:
    """All 16 combinations: phase in {1, i, -1, -i}, two signs."""
    phases = [ONE, I, -ONE, -I]
    return [
        Calibration(phase, hodge, conn)
        for phase, hodge, conn in product(phases, (1, -1), (1, -1))
    ]
