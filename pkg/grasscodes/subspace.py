"""Subspaces of F_q^n: canonical RREF form, distances, Grassmannians, subspace weight"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import total_ordering
from math import prod

import numpy as np

from grasscodes.algebra import MatrixFp, PrimeField, prime_power_decomposition, reduce_rows
from grasscodes.config import Config
from grasscodes.errors import (
    AmbientMismatchError,
    BudgetExceededError,
    EmptyCodeError,
    InvalidParameterError,
    TheoremViolationError,
)
from grasscodes.weights import WeightAxiomReport

logger = logging.getLogger(__name__)


@total_ordering
class Subspace:
    """A subspace of F_p^n held by its reduced row echelon basis

    Two subspaces are equal exactly when their bases are identical.
    """

    __slots__ = ('ambient_n', 'field', 'rows')

    def __init__(self, ambient_n, field, rows):
        self.ambient_n = ambient_n
        self.field = field
        self.rows = tuple(tuple(int(v) for v in row) for row in rows)

    @classmethod
    def zero(cls, n, field):
        return cls(n, field, ())

    @classmethod
    def from_rows(cls, rows, field, ambient_n=None):
        """Row space of arbitrary (possibly dependent) rows"""
        rows = [list(row) for row in rows]
        if ambient_n is None:
            if not rows:
                raise InvalidParameterError('ambient dimension is needed for an empty row list')
            ambient_n = len(rows[0])
        return _span(rows, ambient_n, field)

    @property
    def dim(self):
        return len(self.rows)

    @property
    def weight(self):
        return self.dim

    @property
    def basis(self):
        """The RREF basis as a MatrixFp; None for the zero subspace"""
        if not self.rows:
            return None
        return MatrixFp(self.rows, self.field)

    @property
    def pivots(self):
        return tuple(next(j for j, v in enumerate(row) if v) for row in self.rows)

    def is_zero(self):
        return not self.rows

    def vectors(self, budget=None):
        """Every vector of the subspace, for desk-scale checks"""
        budget = Config.VECTOR_BUDGET if budget is None else budget
        size = self.field.p ** self.dim
        if size > budget:
            raise BudgetExceededError(f'vectors of a {self.dim}-dimensional subspace', size, budget, 'GRASSCODES_ENUM_BUDGET')
        p = self.field.p
        basis = np.array(self.rows, dtype=np.int64).reshape(self.dim, self.ambient_n)
        vectors = set()
        for coefficients in itertools.product(range(p), repeat=self.dim):
            vectors.add(tuple(int(v) for v in (np.array(coefficients, dtype=np.int64) @ basis) % p))
        return frozenset(vectors)

    def _key(self):
        return (self.field.p, self.ambient_n, self.dim, self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._key() == other._key()

    def __lt__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f'Subspace(n={self.ambient_n}, p={self.field.p}, rows={list(self.rows)})'

    def __str__(self):
        if not self.rows:
            return '<0>'
        return '<' + ', '.join('(' + ','.join(str(v) for v in row) + ')' for row in self.rows) + '>'


def _span(rows, n, field):
    if len(rows) == 0:
        return Subspace.zero(n, field)
    reduced, pivots = reduce_rows(np.array(rows, dtype=np.int64).reshape(-1, n), field.p)
    return Subspace(n, field, reduced[:len(pivots)])


def rowspace(M):
    """RREF of M with zero rows dropped"""
    return _span(M.data, M.cols, M.field)


def _check_ambient(A, B):
    if A.ambient_n != B.ambient_n or A.field != B.field:
        raise AmbientMismatchError(
            f'subspaces of F_{A.field.p}^{A.ambient_n} and F_{B.field.p}^{B.ambient_n} cannot be combined'
        )


def subspace_sum(A, B):
    _check_ambient(A, B)
    return _span(list(A.rows) + list(B.rows), A.ambient_n, A.field)


def intersection_dim(A, B):
    """dim A + dim B - dim(A + B)"""
    return A.dim + B.dim - subspace_sum(A, B).dim


def subspace_distance(A, B):
    """d_S(A, B) = dim A + dim B - 2 dim(A & B)"""
    return A.dim + B.dim - 2 * intersection_dim(A, B)


def injection_distance(A, B):
    """d_I(A, B) = max(dim A, dim B) - dim(A & B)"""
    return max(A.dim, B.dim) - intersection_dim(A, B)


def contains(A, vector):
    """Membership of a vector, by a rank test"""
    if len(vector) != A.ambient_n:
        raise AmbientMismatchError(f'vector of length {len(vector)} in F_{A.field.p}^{A.ambient_n}')
    return _span(list(A.rows) + [list(vector)], A.ambient_n, A.field).dim == A.dim


# ==================== GRASSMANNIANS ====================

def gaussian_coefficient(n, k, q):
    """[n k]_q = prod_{i<k} (q^n - q^i) / (q^k - q^i), in exact integers"""
    prime_power_decomposition(q)
    if n < 0 or k < 0:
        raise InvalidParameterError(f'n and k must be nonnegative, got n={n}, k={k}')
    if k > n:
        raise InvalidParameterError(f'k={k} exceeds n={n}')
    numerator = prod(q**n - q**i for i in range(k))
    denominator = prod(q**k - q**i for i in range(k))
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise TheoremViolationError(f'[{n} {k}]_{q}: {numerator} is not divisible by {denominator}')
    return value


def _check_budget(what, size, budget):
    budget = Config.ENUMERATION_BUDGET if budget is None else budget
    if size > budget:
        raise BudgetExceededError(what, size, budget, 'GRASSCODES_ENUM_BUDGET')


def enumerate_grassmannian(n, k, p, budget=None):
    """Every k-dimensional subspace of F_p^n once, ordered by pivot pattern then free entries"""
    field = p if isinstance(p, PrimeField) else PrimeField(p)
    _check_budget(f'G_{field.p}({n},{k})', gaussian_coefficient(n, k, field.p), budget)

    subspaces = []
    for pivots in itertools.combinations(range(n), k):
        free = [(i, j) for i, pivot in enumerate(pivots) for j in range(pivot + 1, n) if j not in pivots]
        for values in itertools.product(range(field.p), repeat=len(free)):
            rows = np.zeros((k, n), dtype=np.int64)
            for i, pivot in enumerate(pivots):
                rows[i, pivot] = 1
            for (i, j), value in zip(free, values):
                rows[i, j] = value
            subspaces.append(Subspace(n, field, rows))
    logger.debug(f'G_{field.p}({n},{k}): {len(subspaces)} subspaces')
    return subspaces


def enumerate_projective_space(n, p, budget=None):
    """All of P_p(n), by increasing dimension"""
    field = p if isinstance(p, PrimeField) else PrimeField(p)
    total = sum(gaussian_coefficient(n, k, field.p) for k in range(n + 1))
    _check_budget(f'P_{field.p}({n})', total, budget)
    return [U for k in range(n + 1) for U in enumerate_grassmannian(n, k, field, budget)]


# ==================== SUBSPACE CODES ====================

@dataclass(frozen=True)
class GrassmannParameters:
    n: int
    M: int
    d: int | None
    k: int | None
    q: int

    @property
    def rate(self):
        if self.k is None:
            return None
        return Fraction(self.k, self.n)

    def __str__(self):
        d = '-' if self.d is None else self.d
        k = '-' if self.k is None else self.k
        return f'({self.n},{self.M},{d},{k})_{self.q}'


@dataclass(frozen=True)
class SubspaceCode:
    ambient_n: int
    field: PrimeField
    codewords: tuple
    d: int | None
    constant_k: int | None
    Delta: int | None
    distance_witness: tuple | None
    distance_distribution: dict = field(default_factory=dict)

    @property
    def M(self):
        return len(self.codewords)

    @property
    def q(self):
        return self.field.p

    @property
    def parameters(self):
        return GrassmannParameters(self.ambient_n, self.M, self.d, self.constant_k, self.field.p)

    def __iter__(self):
        return iter(self.codewords)

    def __len__(self):
        return len(self.codewords)

    def __contains__(self, U):
        return U in self.codewords


def code_from_subspaces(subspaces):
    """M, d, Delta and the common dimension, by exhaustive pairwise comparison"""
    codewords = tuple(sorted(set(subspaces)))
    if not codewords:
        raise EmptyCodeError('a subspace code needs at least one codeword')
    first = codewords[0]
    for U in codewords[1:]:
        _check_ambient(first, U)

    d = None
    witness = None
    histogram = Counter()
    for U, V in itertools.combinations(codewords, 2):
        distance = subspace_distance(U, V)
        histogram[distance] += 1
        if d is None or distance < d:
            d, witness = distance, (U, V)

    dims = {U.dim for U in codewords}
    nonzero = [U.dim for U in codewords if U.dim]
    code = SubspaceCode(
        ambient_n=first.ambient_n,
        field=first.field,
        codewords=codewords,
        d=d,
        constant_k=dims.pop() if len(dims) == 1 else None,
        Delta=min(nonzero) if nonzero else None,
        distance_witness=witness,
        distance_distribution=dict(sorted(histogram.items())),
    )
    logger.info(f'subspace code {code.parameters}, Delta={code.Delta}')
    return code


@dataclass(frozen=True)
class TrivialIntersectionReport:
    predicted: int | None
    measured: int
    delta_e: int | None = None
    delta_f: int | None = None
    E: Subspace | None = None
    F: Subspace | None = None
    ambiguous: bool = False

    @property
    def holds(self):
        return None if self.predicted is None else self.predicted == self.measured


def trivial_intersection_distance(code):
    """Predict d = Delta_E + Delta_F when codewords pairwise meet only in 0"""
    if code.M < 2:
        raise InvalidParameterError('the distance prediction needs at least two codewords')
    for U, V in itertools.combinations(code.codewords, 2):
        if intersection_dim(U, V):
            return TrivialIntersectionReport(predicted=None, measured=code.d)

    # Two smallest weights over distinct codewords, ties broken on the canonical basis
    E, F = sorted(code.codewords, key=lambda U: (U.dim, U.rows))[:2]
    predicted = E.dim + F.dim
    ambiguous = sum(1 for U in code.codewords if U.dim == E.dim) > 2
    if predicted != code.d:
        logger.error(f'trivially intersecting code {code.parameters}: predicted d={predicted}, measured d={code.d}')
        raise TheoremViolationError(f'predicted d={predicted} but measured d={code.d} on {code.parameters}')
    return TrivialIntersectionReport(
        predicted=predicted,
        measured=code.d,
        delta_e=E.dim,
        delta_f=F.dim,
        E=E,
        F=F,
        ambiguous=ambiguous,
    )


def enumerate_partial_spreads(n, k, p, min_size=2, budget=None):
    """Every family of at least min_size pairwise trivially intersecting k-subspaces"""
    subspaces = enumerate_grassmannian(n, k, p, budget)
    count = len(subspaces)
    skew = [
        {j for j in range(i + 1, count) if intersection_dim(subspaces[i], subspaces[j]) == 0}
        for i in range(count)
    ]
    limit = Config.ENUMERATION_BUDGET if budget is None else budget

    families = []

    def extend(family, candidates):
        if len(family) >= min_size:
            families.append(tuple(subspaces[i] for i in family))
            if len(families) > limit:
                raise BudgetExceededError(f'partial spreads of G_{p}({n},{k})', len(families), limit, 'GRASSCODES_ENUM_BUDGET')
        for j in sorted(candidates):
            extend(family + [j], candidates & skew[j])

    for i in range(count):
        extend([i], skew[i])
    logger.info(f'G_{p}({n},{k}): {len(families)} partial spreads of size >= {min_size}')
    return families


def greedy_partial_spread(n, k, p, rng=None, budget=None):
    """Greedy pairwise trivially intersecting family, in canonical or shuffled order"""
    subspaces = enumerate_grassmannian(n, k, p, budget)
    order = range(len(subspaces)) if rng is None else rng.permutation(len(subspaces))
    family = []
    for i in order:
        U = subspaces[int(i)]
        if all(intersection_dim(U, V) == 0 for V in family):
            family.append(U)
    return tuple(family)


# ==================== SUBSPACE WEIGHT ====================

@dataclass(frozen=True)
class SubspaceEgalitarianReport:
    egalitarian: bool
    gamma: Fraction | None
    witnesses: tuple = ()


def subspace_weight_egalitarian_check(family):
    """Egalitarian over all nonempty subsets exactly when every member has the same dimension"""
    members = sorted(set(family))
    if not members:
        raise EmptyCodeError('the egalitarian check needs a nonempty family')
    reference = members[0]
    for U in members[1:]:
        if U.dim != reference.dim:
            return SubspaceEgalitarianReport(False, None, (reference, U))
    return SubspaceEgalitarianReport(True, Fraction(reference.dim))


def is_subspace_weight(n, p, budget=None):
    """w_S = dim satisfies the weight axioms on P_p(n), with + the subspace sum"""
    space = enumerate_projective_space(n, p, budget)
    members = set(space)
    zero = Subspace.zero(n, space[0].field)

    for A in space:
        # i. and ii.
        if (A.weight == 0) != (A == zero):
            return WeightAxiomReport(False, 'i', (str(A),))
        if A.weight < 0:
            return WeightAxiomReport(False, 'ii', (str(A),))
        # iii. -A is A as a set
        negated = _span([[-v for v in row] for row in A.rows], n, A.field)
        if negated != A:
            return WeightAxiomReport(False, 'iii', (str(A),))

    # iv. dim(A + B) <= dim A + dim B, and A + B stays in P_p(n)
    for A, B in itertools.product(space, repeat=2):
        total = subspace_sum(A, B)
        if total not in members:
            return WeightAxiomReport(False, 'closure', (str(A), str(B)))
        if total.weight > A.weight + B.weight:
            return WeightAxiomReport(False, 'iv', (str(A), str(B)))

    logger.info(f'subspace weight on P_{p}({n}) satisfies the weight axioms')
    return WeightAxiomReport(True)
