"""Rank-metric codes: minimum rank distance, minimum rank weight, dimension"""
import itertools
import logging
from dataclasses import dataclass

import numpy as np
from sortedcontainers import SortedSet

from grasscodes.algebra import GLOrderQuery, MatrixFp, gl_order, rank, reduce_rows
from grasscodes.errors import (
    EmptyCodeError,
    FieldMismatchError,
    InvalidParameterError,
    ShapeMismatchError,
    TheoremViolationError,
)
from grasscodes.ring import RingDescriptor

logger = logging.getLogger(__name__)

# Largest q whose ring M_2(F_q) is also counted element by element
EXHAUSTIVE_DISTRIBUTION_LIMIT = 5


@dataclass(frozen=True)
class RankMetricCode:
    k: int
    l: int
    field: object
    elements: SortedSet
    linear: bool
    rho: int | None
    delta: int | None
    omega: int | None
    delta_witness: tuple | None
    omega_witness: MatrixFp | None
    basis: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, A):
        return A in self.elements

    @property
    def size(self):
        return len(self.elements)

    @property
    def params(self):
        rho = self.rho if self.rho is not None else '-'
        delta = self.delta if self.delta is not None else '-'
        return f'[{self.k}x{self.l}, {rho}, {delta}]'


def rank_distance(A, B):
    """d_R(A, B) = rank(A - B)"""
    if A.field != B.field:
        raise FieldMismatchError(f'modulus mismatch: {A.field.p} vs {B.field.p}')
    if A.shape != B.shape:
        raise ShapeMismatchError(f'shape mismatch: {A.shape} vs {B.shape}')
    return rank(A - B)


def _vector_codes(vectors, p):
    """Integer code of each flattened matrix, base p"""
    place = p ** np.arange(vectors.shape[1] - 1, -1, -1, dtype=object)
    return [int(v) for v in vectors.astype(object) @ place]


def _is_linear(vectors, p):
    codes = set(_vector_codes(vectors, p))
    if 0 not in codes:
        return False
    for row in vectors:
        if not set(_vector_codes((row + vectors) % p, p)) <= codes:
            return False
    for c in range(2, p):
        if not set(_vector_codes((c * vectors) % p, p)) <= codes:
            return False
    return True


def _extract_basis(elements):
    """Greedy F_p-basis in canonical element order"""
    basis = []
    rows = []
    for A in elements:
        if A.is_zero():
            continue
        candidate = np.array(rows + [A.data.ravel()])
        if len(reduce_rows(candidate, A.field.p)[1]) == len(candidate):
            rows.append(A.data.ravel())
            basis.append(A)
    return tuple(basis)


def _log_p(size, p):
    rho = 0
    while p ** rho < size:
        rho += 1
    if p ** rho != size:
        raise TheoremViolationError(f'a linear code over F_{p} cannot have {size} elements')
    return rho


def minimum_distance(elements):
    """Minimum rank distance over distinct pairs, with the lexicographically first witness"""
    best = None
    witness = None
    for A, B in itertools.combinations(elements, 2):
        distance = rank(A - B)
        if best is None or distance < best:
            best, witness = distance, (A, B)
            if best == 1:
                break
    return best, witness


def minimum_weight(elements):
    """Minimum rank among nonzero elements, with the first minimizing element"""
    best = None
    witness = None
    for A in elements:
        if A.is_zero():
            continue
        weight = rank(A)
        if best is None or weight < best:
            best, witness = weight, A
            if best == 1:
                break
    return best, witness


def code_from_matrix_set(matrices):
    """Measure a matrix code: delta, Omega, linearity and rho by exhaustive scans"""
    elements = SortedSet(matrices)
    if not elements:
        raise EmptyCodeError('a matrix code needs at least one element')
    first = elements[0]
    for A in elements:
        if A.field != first.field:
            raise FieldMismatchError(f'mixed moduli {first.field.p} and {A.field.p}')
        if A.shape != first.shape:
            raise ShapeMismatchError(f'mixed shapes {first.shape} and {A.shape}')

    p = first.field.p
    vectors = np.array([A.data.ravel() for A in elements], dtype=np.int64)
    linear = _is_linear(vectors, p)
    rho = _log_p(len(elements), p) if linear else None
    basis = _extract_basis(elements) if linear else ()
    if linear and len(basis) != rho:
        raise TheoremViolationError(f'basis of size {len(basis)} for a code of dimension {rho}')

    delta, delta_witness = minimum_distance(elements)
    omega, omega_witness = minimum_weight(elements)

    code = RankMetricCode(
        k=first.rows,
        l=first.cols,
        field=first.field,
        elements=elements,
        linear=linear,
        rho=rho,
        delta=delta,
        omega=omega,
        delta_witness=delta_witness,
        omega_witness=omega_witness,
        basis=basis,
    )
    logger.info(f'rank-metric code {code.params} over F_{p}: {len(elements)} elements, linear={linear}')
    return code


def code_basis(code):
    return code.basis


def random_linear_subcode(descriptor, rng, generators=None):
    """F_p-span of a few random ring elements"""
    p = descriptor.p
    count = int(rng.integers(1, descriptor.dimension + 1)) if generators is None else generators
    picks = [descriptor.element(int(c)) for c in rng.integers(0, descriptor.order, size=count)]
    span = set()
    for coefficients in itertools.product(range(p), repeat=count):
        total = MatrixFp.zeros(2, 2, descriptor.field)
        for c, A in zip(coefficients, picks):
            total = total + c * A
        span.add(total)
    return code_from_matrix_set(span)


# ==================== RANK DISTRIBUTION ====================

@dataclass(frozen=True)
class RankDistribution:
    q: int
    counts: tuple
    exhaustive: bool

    @property
    def A0(self):
        return self.counts[0]

    @property
    def A1(self):
        return self.counts[1]

    @property
    def A2(self):
        return self.counts[2]


def rank_distribution(query):
    """(A_0, A_1, A_2) of M_2(F_q); counted element by element as well when q = p <= 5"""
    if query.n != 2:
        raise InvalidParameterError(f'the rank distribution is defined here for 2x2 matrices, got n={query.n}')
    q = query.q
    units = gl_order(query)
    counts = (1, q**4 - units - 1, units)

    exhaustive = query.r == 1 and q <= EXHAUSTIVE_DISTRIBUTION_LIMIT
    if exhaustive:
        scanned = tuple(int(c) for c in np.bincount(RingDescriptor(q).rank_table, minlength=3))
        if scanned != counts:
            logger.error(f'rank distribution of M_2(F_{q}): formula {counts}, scan {scanned}')
            raise TheoremViolationError(f'rank distribution of M_2(F_{q}): formula gives {counts}, scan gives {scanned}')
    return RankDistribution(q=q, counts=counts, exhaustive=exhaustive)


def rank_weight_sum(q):
    """Sum of all ranks over M_2(F_q): 2q^4 - q^3 - q^2 + q - 1"""
    GLOrderQuery(q)
    return 2 * q**4 - q**3 - q**2 + q - 1


# ==================== DELTA = OMEGA ====================

@dataclass(frozen=True)
class DeltaOmegaReport:
    applicable: bool
    delta: int | None
    omega: int | None
    equal: bool | None
    delta_witness: tuple | None
    omega_witness: MatrixFp | None
    reason: str = ''


def verify_delta_equals_omega(code):
    """For a linear code the minimum distance equals the minimum nonzero rank"""
    if not code.linear:
        return DeltaOmegaReport(False, code.delta, code.omega, None,
                                code.delta_witness, code.omega_witness, 'code is not linear')
    if code.size < 2:
        return DeltaOmegaReport(False, None, None, None, None, None, 'code has a single element')
    equal = code.delta == code.omega
    if not equal:
        logger.error(f'delta={code.delta} but Omega={code.omega} for linear code {code.params}')
    return DeltaOmegaReport(True, code.delta, code.omega, equal, code.delta_witness, code.omega_witness)
