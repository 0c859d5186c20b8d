"""Exact arithmetic over prime fields F_p and on k x l matrices over F_p"""
import logging
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from math import prod

import numpy as np

from grasscodes.config import Config
from grasscodes.errors import (
    FieldMismatchError,
    InvalidModulusError,
    InvalidParameterError,
    InvalidPrimePowerError,
    ShapeMismatchError,
    ZeroDivisionInFieldError,
)

logger = logging.getLogger(__name__)


def _is_integer(value):
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool)


def is_prime(n):
    """Primality by trial division"""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_decomposition(q):
    """Return (p, r) with q = p**r, raising InvalidPrimePowerError otherwise"""
    if not _is_integer(q) or q < 2:
        raise InvalidPrimePowerError(f'{q!r} is not a prime power')
    q = int(q)

    # The smallest factor of q is prime
    p = q
    d = 2
    while d * d <= q:
        if q % d == 0:
            p = d
            break
        d += 1

    r = 0
    rest = q
    while rest % p == 0:
        rest //= p
        r += 1
    if rest != 1:
        raise InvalidPrimePowerError(f'{q} is not a prime power')
    return p, r


# ==================== PRIME FIELDS ====================

@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not _is_integer(self.p):
            raise InvalidModulusError(f'modulus must be an integer, got {self.p!r}')
        object.__setattr__(self, 'p', int(self.p))
        if not is_prime(self.p):
            raise InvalidModulusError(f'{self.p} is not prime')
        if self.p >= Config.MAX_MODULUS:
            raise InvalidModulusError(f'modulus {self.p} is over the limit {Config.MAX_MODULUS}')

    def __call__(self, value):
        return FieldElement(int(value) % self.p, self)

    def __str__(self):
        return f'F_{self.p}'

    @property
    def zero(self):
        return FieldElement(0, self)

    @property
    def one(self):
        return FieldElement(1, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.p)]


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not _is_integer(self.value):
            raise InvalidParameterError(f'field element must be an integer, got {self.value!r}')
        object.__setattr__(self, 'value', int(self.value))
        if not 0 <= self.value < self.field.p:
            raise InvalidParameterError(f'{self.value} is not in [0, {self.field.p})')

    def _coerce(self, other):
        if _is_integer(other):
            return self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f'cannot combine elements of {self.field} and {other.field}')
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return field_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return field_add(self, field_neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return field_add(other, field_neg(self))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return field_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return field_mul(self, field_inv(other))

    def __neg__(self):
        return field_neg(self)

    def inverse(self):
        return field_inv(self)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __str__(self):
        return str(self.value)


def _same_field(a, b):
    if a.field != b.field:
        raise FieldMismatchError(f'modulus mismatch: {a.field.p} vs {b.field.p}')
    return a.field


def field_add(a, b):
    field = _same_field(a, b)
    return FieldElement((a.value + b.value) % field.p, field)


def field_mul(a, b):
    field = _same_field(a, b)
    return FieldElement((a.value * b.value) % field.p, field)


def field_neg(a):
    return FieldElement((-a.value) % a.field.p, a.field)


def field_inv(a):
    if a.value == 0:
        raise ZeroDivisionInFieldError(f'0 has no inverse in {a.field}')
    return FieldElement(pow(a.value, -1, a.field.p), a.field)


# ==================== MATRICES OVER F_p ====================

@total_ordering
class MatrixFp:
    """An immutable k x l matrix over a prime field"""

    __slots__ = ('_data', 'field')

    def __init__(self, entries, field):
        if isinstance(entries, np.ndarray):
            data = np.array(entries, dtype=np.int64)
        else:
            data = np.array([[int(v) for v in row] for row in entries], dtype=np.int64)
        if data.ndim != 2 or data.shape[0] < 1 or data.shape[1] < 1:
            raise ShapeMismatchError(f'a matrix needs at least one row and column, got shape {data.shape}')
        data %= field.p
        data.setflags(write=False)
        self._data = data
        self.field = field

    @classmethod
    def zeros(cls, k, l, field):
        return cls(np.zeros((k, l), dtype=np.int64), field)

    @classmethod
    def identity(cls, k, field):
        return cls(np.eye(k, dtype=np.int64), field)

    @property
    def data(self):
        return self._data

    @property
    def rows(self):
        return self._data.shape[0]

    @property
    def cols(self):
        return self._data.shape[1]

    @property
    def shape(self):
        return self._data.shape

    @property
    def entries(self):
        """Row-major entry tuple"""
        return tuple(int(v) for v in self._data.flat)

    def tolist(self):
        return self._data.tolist()

    def is_zero(self):
        return not self._data.any()

    def __getitem__(self, index):
        return FieldElement(int(self._data[index]), self.field)

    def __eq__(self, other):
        if not isinstance(other, MatrixFp):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and np.array_equal(self._data, other._data))

    def __lt__(self, other):
        if not isinstance(other, MatrixFp):
            return NotImplemented
        return (self.field.p, self.shape, self.entries) < (other.field.p, other.shape, other.entries)

    def __hash__(self):
        return hash((self.field.p, self.shape, self._data.tobytes()))

    def __add__(self, other):
        return mat_add(self, other)

    def __sub__(self, other):
        return mat_sub(self, other)

    def __neg__(self):
        return mat_neg(self)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __mul__(self, scalar):
        return mat_scale(self, scalar)

    __rmul__ = __mul__

    @property
    def T(self):
        return transpose(self)

    def __repr__(self):
        return f'MatrixFp({self.tolist()}, p={self.field.p})'

    def __str__(self):
        return '\n'.join(' '.join(str(v) for v in row) for row in self.tolist())


def _check_field(A, B):
    if A.field != B.field:
        raise FieldMismatchError(f'modulus mismatch: {A.field.p} vs {B.field.p}')


def _check_same_shape(A, B):
    _check_field(A, B)
    if A.shape != B.shape:
        raise ShapeMismatchError(f'shape mismatch: {A.shape} vs {B.shape}')


def mat_add(A, B):
    _check_same_shape(A, B)
    return MatrixFp(A.data + B.data, A.field)


def mat_sub(A, B):
    _check_same_shape(A, B)
    return MatrixFp(A.data - B.data, A.field)


def mat_neg(A):
    return MatrixFp(-A.data, A.field)


def mat_mul(A, B):
    _check_field(A, B)
    if A.cols != B.rows:
        raise ShapeMismatchError(f'cannot multiply {A.shape} by {B.shape}')
    return MatrixFp(A.data @ B.data, A.field)


def mat_scale(A, scalar):
    if isinstance(scalar, FieldElement):
        if scalar.field != A.field:
            raise FieldMismatchError(f'modulus mismatch: {A.field.p} vs {scalar.field.p}')
        scalar = scalar.value
    elif not _is_integer(scalar):
        return NotImplemented
    return MatrixFp(A.data * (int(scalar) % A.field.p), A.field)


def transpose(A):
    return MatrixFp(A.data.T, A.field)


# ==================== ELIMINATION ====================

def reduce_rows(data, p):
    """Reduced row echelon form of an integer array mod p, with its pivot columns

    Pivots are taken on the first nonzero entry in column order.
    """
    m = np.array(data, dtype=np.int64) % p
    n_rows, n_cols = m.shape
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        nonzero = np.flatnonzero(m[r:, c])
        if nonzero.size == 0:
            continue
        pivot_row = r + int(nonzero[0])
        if pivot_row != r:
            m[[r, pivot_row]] = m[[pivot_row, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        for i in range(n_rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, tuple(pivots)


def row_reduce(A):
    """RREF of A as a MatrixFp, together with the pivot columns"""
    reduced, pivots = reduce_rows(A.data, A.field.p)
    return MatrixFp(reduced, A.field), pivots


@lru_cache(maxsize=1 << 16)
def _cached_rank(A):
    return len(reduce_rows(A.data, A.field.p)[1])


def rank(A):
    """Rank over F_p; 0 <= rank <= min(k, l)"""
    return _cached_rank(A)


# ==================== GENERAL LINEAR GROUP ====================

@dataclass(frozen=True)
class GLOrderQuery:
    q: int
    n: int = 2

    def __post_init__(self):
        prime_power_decomposition(self.q)
        object.__setattr__(self, 'q', int(self.q))
        if not _is_integer(self.n) or self.n < 1:
            raise InvalidParameterError(f'matrix size must be a positive integer, got {self.n!r}')
        object.__setattr__(self, 'n', int(self.n))

    @property
    def p(self):
        return prime_power_decomposition(self.q)[0]

    @property
    def r(self):
        return prime_power_decomposition(self.q)[1]


def gl_order(query):
    """|GL(n, q)| = prod_{i<n} (q^n - q^i)"""
    q, n = query.q, query.n
    return prod(q**n - q**i for i in range(n))
