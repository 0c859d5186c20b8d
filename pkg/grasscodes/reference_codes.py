"""Worked codes over M_2(F_2), M_2(F_3) and P_2(3), with their expected listings"""
from dataclasses import dataclass

from grasscodes.algebra import MatrixFp, PrimeField
from grasscodes.subspace import Subspace, code_from_subspaces, subspace_sum


@dataclass(frozen=True)
class ReferenceIdeal:
    name: str
    p: int
    side: str
    generator: tuple
    elements: tuple
    lifted_vectors: tuple = ()
    lifted_bases: tuple = ()

    @property
    def field(self):
        return PrimeField(self.p)

    def generator_matrix(self):
        return MatrixFp([self.generator[:2], self.generator[2:]], self.field)

    def element_matrices(self):
        return [MatrixFp(rows, self.field) for rows in self.elements]

    def expected_subspaces(self):
        """Lifted codewords as vector sets, or from their listed bases"""
        if self.lifted_vectors:
            return {frozenset(vectors) for vectors in self.lifted_vectors}
        return {Subspace.from_rows(basis, self.field).vectors() for basis in self.lifted_bases}


LEFT_IDEAL_F2 = ReferenceIdeal(
    name='left ideal of [[0,0],[0,1]] over F_2',
    p=2,
    side='left',
    generator=(0, 0, 0, 1),
    elements=(
        ((0, 0), (0, 0)),
        ((0, 1), (0, 0)),
        ((0, 0), (0, 1)),
        ((0, 1), (0, 1)),
    ),
    lifted_vectors=(
        ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 0)),
        ((1, 0, 0, 1), (0, 1, 0, 0), (1, 1, 0, 1), (0, 0, 0, 0)),
        ((1, 0, 0, 0), (0, 1, 0, 1), (1, 1, 0, 1), (0, 0, 0, 0)),
        ((1, 0, 0, 1), (0, 1, 0, 1), (1, 1, 0, 0), (0, 0, 0, 0)),
    ),
)

RIGHT_IDEAL_F2 = ReferenceIdeal(
    name='right ideal of [[0,0],[0,1]] over F_2',
    p=2,
    side='right',
    generator=(0, 0, 0, 1),
    elements=(
        ((0, 0), (0, 0)),
        ((0, 0), (1, 0)),
        ((0, 0), (0, 1)),
        ((0, 0), (1, 1)),
    ),
    lifted_vectors=(
        ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (0, 0, 0, 0)),
        ((1, 0, 0, 0), (0, 1, 1, 0), (1, 1, 1, 0), (0, 0, 0, 0)),
        ((1, 0, 0, 0), (0, 1, 0, 1), (1, 1, 0, 1), (0, 0, 0, 0)),
        ((1, 0, 0, 0), (0, 1, 1, 1), (1, 1, 1, 1), (0, 0, 0, 0)),
    ),
)

LEFT_IDEAL_F3 = ReferenceIdeal(
    name='left ideal of [[0,2],[0,1]] over F_3',
    p=3,
    side='left',
    generator=(0, 2, 0, 1),
    elements=(
        ((0, 0), (0, 0)),
        ((0, 1), (0, 0)),
        ((0, 2), (0, 0)),
        ((0, 0), (0, 1)),
        ((0, 0), (0, 2)),
        ((0, 1), (0, 1)),
        ((0, 2), (0, 2)),
        ((0, 2), (0, 1)),
        ((0, 1), (0, 2)),
    ),
    lifted_bases=(
        ((1, 0, 0, 0), (0, 1, 0, 0)),
        ((1, 0, 0, 1), (0, 1, 0, 0)),
        ((1, 0, 0, 2), (0, 1, 0, 0)),
        ((1, 0, 0, 0), (0, 1, 0, 1)),
        ((1, 0, 0, 0), (0, 1, 0, 2)),
        ((1, 0, 0, 1), (0, 1, 0, 1)),
        ((1, 0, 0, 2), (0, 1, 0, 2)),
        ((1, 0, 0, 2), (0, 1, 0, 1)),
        ((1, 0, 0, 1), (0, 1, 0, 2)),
    ),
)

REFERENCE_IDEALS = {2: (LEFT_IDEAL_F2, RIGHT_IDEAL_F2), 3: (LEFT_IDEAL_F3,)}


# ==================== SUM-CLOSED SUBSPACE CODE ====================

SUM_CLOSED_A = ((0, 0, 0), (1, 0, 1), (0, 1, 0), (1, 1, 1))
SUM_CLOSED_B = ((0, 0, 0), (0, 1, 1), (1, 0, 0), (1, 1, 1))


def sum_closed_code():
    """{A, B, A + B} in P_2(3): Delta = 2 yet d = 1"""
    field = PrimeField(2)
    A = Subspace.from_rows([(1, 0, 1), (0, 1, 0)], field)
    B = Subspace.from_rows([(1, 0, 0), (0, 1, 1)], field)
    return A, B, code_from_subspaces([A, B, subspace_sum(A, B)])
