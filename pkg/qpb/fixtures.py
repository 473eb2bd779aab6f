"""
Canonical sample points and exact random generators.

Used by the verification suites, the replication ledger and the tests:
- Named connections: the trivial one, the non-flat critical one, (1, 0), (i, 0)
- Exact samples: Gaussian rationals with small numerators and denominators,
  so every law check stays in exact arithmetic
"""

from fractions import Fraction

import numpy as np

from qpb.models.connection import QPC
from qpb.models.corep import Corep
from qpb.models.forms import BaseForm
from qpb.models.scalar import ExactC, I
from qpb.models.sections import Section

OMEGA_TRIVIAL = QPC.trivial()
OMEGA_YM = QPC.yang_mills()
OMEGA_ONE_ZERO = QPC(1, 0)
OMEGA_I_ZERO = QPC(I, 0)

# e^{it} at exact points: i, (3+4i)/5, (5+12i)/13, (8+15i)/17
UNIT_MODULUS = (
    I,
    ExactC(Fraction(3, 5), Fraction(4, 5)),
    ExactC(Fraction(5, 13), Fraction(12, 13)),
    ExactC(Fraction(8, 17), Fraction(15, 17)),
)

FLAT_SEEDS = (0, 1, -1, 2, I, -I, ExactC(1, 1), ExactC(Fraction(1, 2)), ExactC(0, 2), ExactC(Fraction(-1, 3), Fraction(1, 4)))


def rng(seed: int = 0) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_exact(gen: np.random.Generator, bound: int = 5, max_denom: int = 4) -> ExactC:
    def part():
        return Fraction(int(gen.integers(-bound, bound + 1)), int(gen.integers(1, max_denom + 1)))

    return ExactC(part(), part())


def random_base_form(gen: np.random.Generator, degree: int) -> BaseForm:
    return BaseForm(degree, (random_exact(gen), random_exact(gen)))


def random_connection(gen: np.random.Generator) -> QPC:
    return QPC(random_exact(gen), random_exact(gen))


def random_real_connection(gen: np.random.Generator) -> QPC:
    """A connection with ``mu* = -mu``."""
    lambda0 = random_exact(gen)
    return QPC(lambda0, -lambda0.conj())


def random_section(gen: np.random.Generator, corep: Corep) -> Section:
    return Section(corep, random_base_form(gen, 0))


def flat_points(count: int = len(FLAT_SEEDS)) -> list[QPC]:
    """Exact flat connections from the lambda0 samples above."""
    from qpb.services.solver import enumerate_flat

    return [entry.omega for entry in enumerate_flat(FLAT_SEEDS[:count]) if entry.omega is not None]


def clear_all():
    """Clear stored solver runs and reset the status tracker."""
    from qpb.services.solver import get_solver_engine
    from qpb.status import get_status_tracker

    get_solver_engine()._runs.clear()
    get_status_tracker().clear()
