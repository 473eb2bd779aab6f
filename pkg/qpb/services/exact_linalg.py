"""Exact linear algebra over the Gaussian rationals.

Thin layer over sympy's DomainMatrix on QQ_I: conversions to and from
ExactC, operator matrices of linear maps given on a basis, Gram-matrix
adjoints and uniquely solvable systems.
"""

from enum import Enum
from fractions import Fraction
from typing import Callable, Sequence

from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from qpb.errors import SingularSystemError
from qpb.models.scalar import ExactC


class Linearity(str, Enum):
    """Which argument a sesquilinear pairing is linear in."""

    FIRST = "first"
    SECOND = "second"


def to_domain(z: ExactC):
    return QQ_I(QQ(z.re.numerator, z.re.denominator), QQ(z.im.numerator, z.im.denominator))


def from_domain(e) -> ExactC:
    return ExactC(
        Fraction(int(e.x.numerator), int(e.x.denominator)),
        Fraction(int(e.y.numerator), int(e.y.denominator)),
    )


def matrix(rows: Sequence[Sequence[ExactC]]) -> DomainMatrix:
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    return DomainMatrix([[to_domain(ExactC.coerce(z)) for z in row] for row in rows], (nrows, ncols), QQ_I)


def to_rows(m: DomainMatrix) -> list[list[ExactC]]:
    return [[from_domain(e) for e in row] for row in m.to_list()]


def column(values: Sequence[ExactC]) -> DomainMatrix:
    return matrix([[v] for v in values])


def to_column(m: DomainMatrix) -> list[ExactC]:
    return [row[0] for row in to_rows(m)]


def identity(n: int) -> DomainMatrix:
    return matrix([[ExactC(1 if i == j else 0) for j in range(n)] for i in range(n)])


def conj(m: DomainMatrix) -> DomainMatrix:
    return matrix([[z.conj() for z in row] for row in to_rows(m)])


def conj_transpose(m: DomainMatrix) -> DomainMatrix:
    return conj(m).transpose()


def is_zero(m: DomainMatrix) -> bool:
    return all(not z for row in to_rows(m) for z in row)


def inverse(m: DomainMatrix) -> DomainMatrix:
    try:
        return m.inv()
    except DMNonInvertibleMatrixError as exc:
        raise SingularSystemError("matrix is not invertible") from exc


def operator_matrix(
    op: Callable,
    basis_in: Sequence,
    coords_out: Callable[[object], Sequence[ExactC]],
) -> DomainMatrix:
    """Matrix whose j-th column holds the coordinates of ``op(basis_in[j])``."""
    columns = [list(coords_out(op(e))) for e in basis_in]
    nrows = len(columns[0]) if columns else 0
    return matrix([[columns[j][i] for j in range(len(columns))] for i in range(nrows)])


def gram_matrix(basis: Sequence, pairing: Callable[[object, object], ExactC]) -> DomainMatrix:
    return matrix([[pairing(a, b) for b in basis] for a in basis])


def adjoint_matrix(
    a: DomainMatrix,
    gram_in: DomainMatrix,
    gram_out: DomainMatrix,
    linearity: Linearity = Linearity.FIRST,
) -> DomainMatrix:
    """Matrix of the adjoint of ``a: V -> W`` for pairings given by Gram matrices.

    With ``G[i][j] = <e_i|e_j>``, the adjoint satisfies
    ``<y|A x>_W = <A* y|x>_V``. For pairings linear in the first argument
    this is ``G_V^{-T} A^H G_W^T``; linear in the second it is
    ``G_V^{-H} A^H G_W^H``.
    """
    if Linearity(linearity) == Linearity.FIRST:
        left = inverse(gram_in.transpose())
        right = gram_out.transpose()
    else:
        left = inverse(conj_transpose(gram_in))
        right = conj_transpose(gram_out)
    return left.matmul(conj_transpose(a)).matmul(right)


def solve_unique(a: DomainMatrix, b: Sequence[ExactC]) -> list[ExactC]:
    """Solve ``a x = b`` exactly; raise unless the solution exists and is unique."""
    nrows, ncols = a.shape
    augmented = a.hstack(column(b))
    reduced, pivots = augmented.rref()
    if ncols in pivots:
        raise SingularSystemError("inconsistent linear system")
    if len(pivots) < ncols:
        raise SingularSystemError(f"solution not unique (rank {len(pivots)} < {ncols})")
    rows = to_rows(reduced)
    solution = [ExactC(0)] * ncols
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = rows[row_index][ncols]
    return solution
