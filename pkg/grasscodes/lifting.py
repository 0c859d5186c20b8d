"""The lifting construction L(A) = (I_k A) and the parameters of lifted codes"""
import logging
from dataclasses import dataclass

import numpy as np

from grasscodes.algebra import MatrixFp
from grasscodes.errors import InvalidParameterError, NotIdempotentError, TheoremViolationError
from grasscodes.rank_code import code_basis, code_from_matrix_set, rank_distance
from grasscodes.ring import RingDescriptor, as_side, is_nontrivial_idempotent, principal_ideal
from grasscodes.subspace import GrassmannParameters, code_from_subspaces, rowspace, subspace_distance

logger = logging.getLogger(__name__)


def lift(A):
    """The k x (k + l) matrix (I_k A)"""
    identity = np.eye(A.rows, dtype=np.int64)
    return MatrixFp(np.hstack([identity, A.data]), A.field)


def unlift(U, k):
    """Recover A from <L(A)>: the last l columns of the canonical basis"""
    if U.dim != k or U.pivots != tuple(range(k)):
        raise InvalidParameterError(f'{U} is not the lift of a {k}-row matrix')
    return MatrixFp([row[k:] for row in U.rows], U.field)


@dataclass(frozen=True)
class LiftedCode:
    source: object
    codewords: object
    claimed: GrassmannParameters | None

    @property
    def measured(self):
        return self.codewords.parameters

    @property
    def theorem_ok(self):
        """None when the source is not linear and no parameters are claimed"""
        if self.claimed is None:
            return None
        return self.claimed == self.measured


def lift_code(code):
    """Lift every codeword and check the (k + l, q^rho, 2 delta, k)_q parameters from scratch"""
    subspaces = [rowspace(lift(A)) for A in code]
    lifted = code_from_subspaces(subspaces)
    if lifted.M != code.size:
        raise TheoremViolationError(f'lifting merged codewords: {code.size} matrices gave {lifted.M} subspaces')

    claimed = None
    if code.linear and code.delta is not None:
        q = code.field.p
        claimed = GrassmannParameters(n=code.k + code.l, M=q**len(code_basis(code)), d=2 * code.delta, k=code.k, q=q)

    result = LiftedCode(source=code, codewords=lifted, claimed=claimed)
    if result.theorem_ok is False:
        logger.error(f'lift of {code.params}: claimed {claimed}, measured {result.measured}')
        raise TheoremViolationError(f'lift of {code.params}: claimed {claimed}, measured {result.measured}')
    logger.info(f'lift of {code.params} is a {result.measured} code')
    return result


def verify_idempotent_ideal_lift(p, a, side, descriptor=None):
    """The lift of the one-sided ideal of a nontrivial idempotent is a (4, p^2, 2, 2)_p code"""
    if not is_nontrivial_idempotent(a):
        raise NotIdempotentError(f'{a.entries} is not a nonzero nonunit idempotent')
    descriptor = descriptor or RingDescriptor(p)
    ideal = principal_ideal(a, as_side(side), descriptor)
    lifted = lift_code(code_from_matrix_set(ideal.elements))
    expected = GrassmannParameters(n=4, M=p**2, d=2, k=2, q=p)
    if lifted.measured != expected:
        logger.error(f'{side} ideal of {a.entries}: expected {expected}, measured {lifted.measured}')
        raise TheoremViolationError(f'{side} ideal of {a.entries}: expected {expected}, measured {lifted.measured}')
    return lifted


def distance_transport(pairs):
    """First (A, B) with d_S(<L(A)>, <L(B)>) != 2 d_R(A, B), or None"""
    for A, B in pairs:
        if subspace_distance(rowspace(lift(A)), rowspace(lift(B))) != 2 * rank_distance(A, B):
            return A, B
    return None
