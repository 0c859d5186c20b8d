"""The matrix ring M_2(F_p): idempotents, element classes and one-sided ideals"""
import enum
import itertools
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sortedcontainers import SortedSet

from grasscodes.algebra import MatrixFp, PrimeField, rank
from grasscodes.config import Config
from grasscodes.errors import BudgetExceededError, InvalidParameterError, ShapeMismatchError

logger = logging.getLogger(__name__)


class Side(str, enum.Enum):
    LEFT = 'left'
    RIGHT = 'right'

    def __str__(self):
        return self.value


class ElementClass(str, enum.Enum):
    ZERO = 'zero'
    ZERO_DIVISOR = 'zero-divisor'
    UNIT = 'unit'


def as_side(side):
    try:
        return Side(str(side).lower())
    except ValueError:
        raise InvalidParameterError(f'side must be left or right, got {side!r}') from None


# ==================== FINITE RINGS ====================

class FiniteRing(ABC):
    """A finite ring whose additive group is F_p^m

    Elements are coded by integers in [0, p^m): the code of an element is its
    coordinate tuple read as a base-p number, so code order is lexicographic
    coordinate order and the zero element has code 0.
    """

    def __init__(self, field, ring_budget=None):
        if not isinstance(field, PrimeField):
            field = PrimeField(field)
        self.field = field
        budget = Config.RING_BUDGET if ring_budget is None else ring_budget
        if self.order > budget:
            raise BudgetExceededError(f'{self}', self.order, budget, 'GRASSCODES_RING_BUDGET')

    @property
    @abstractmethod
    def dimension(self):
        """Number of F_p coordinates of an element"""

    @abstractmethod
    def multiples(self, code, side):
        """Codes of r*x (left) or x*r (right) for every r, in ring order"""

    @abstractmethod
    def label(self, code):
        """Human readable form of an element"""

    @property
    @abstractmethod
    def one_code(self):
        """Code of the multiplicative identity"""

    @property
    def p(self):
        return self.field.p

    @property
    def order(self):
        return self.field.p ** self.dimension

    @cached_property
    def _place_values(self):
        return self.field.p ** np.arange(self.dimension - 1, -1, -1, dtype=np.int64)

    @cached_property
    def digits(self):
        """Coordinates of every element, row i being the element with code i"""
        rows = itertools.product(range(self.field.p), repeat=self.dimension)
        digits = np.array(list(rows), dtype=np.int64).reshape(self.order, self.dimension)
        digits.setflags(write=False)
        return digits

    def encode(self, digits):
        return np.asarray(digits, dtype=np.int64).reshape(-1, self.dimension) @ self._place_values

    def add_codes(self, x, ys):
        """Codes of x + y for y in ys"""
        return self.encode((self.digits[x] + self.digits[ys]) % self.field.p)

    def neg_codes(self, xs):
        return self.encode((-self.digits[xs]) % self.field.p)

    def cyclic_submodule(self, code, side=Side.LEFT):
        """Sorted codes of Rx (left) or xR (right)"""
        return np.unique(self.multiples(code, as_side(side)))

    def codes(self):
        return range(self.order)


class FieldRing(FiniteRing):
    """The prime field F_p regarded as a ring"""

    @property
    def dimension(self):
        return 1

    def multiples(self, code, side):
        return (self.digits[:, 0] * int(code)) % self.field.p

    def label(self, code):
        return str(int(code))

    @property
    def one_code(self):
        return 1

    def __str__(self):
        return f'F_{self.field.p}'


class RingDescriptor(FiniteRing):
    """M_2(F_p); elements are coded by their row-major entries"""

    n = 2

    @property
    def dimension(self):
        return self.n * self.n

    def __str__(self):
        return f'M_2(F_{self.field.p})'

    def __eq__(self, other):
        return isinstance(other, RingDescriptor) and other.field == self.field

    def __hash__(self):
        return hash(('M2', self.field.p))

    @cached_property
    def stack(self):
        """All p^4 elements as a (p^4, 2, 2) array in code order"""
        stack = self.digits.reshape(self.order, self.n, self.n)
        stack.setflags(write=False)
        return stack

    @cached_property
    def rank_table(self):
        """rank of each element by Gaussian elimination, indexed by code"""
        table = np.array([rank(A) for A in self.elements()], dtype=np.int64)
        table.setflags(write=False)
        return table

    def element(self, code):
        return MatrixFp(self.stack[int(code)], self.field)

    def elements(self):
        return [self.element(code) for code in self.codes()]

    def code_of(self, A):
        self._check_member(A)
        return int(self.encode(A.data)[0])

    def codes_of(self, arrays):
        return self.encode(np.asarray(arrays) % self.field.p)

    def _check_member(self, A):
        if A.shape != (self.n, self.n) or A.field != self.field:
            raise ShapeMismatchError(f'{A!r} is not an element of {self}')

    def multiples(self, code, side):
        x = self.stack[int(code)]
        if side is Side.LEFT:
            products = self.stack @ x
        else:
            products = x @ self.stack
        return self.codes_of(products)

    def label(self, code):
        return ' '.join(str(v) for v in self.digits[int(code)])

    @property
    def one_code(self):
        return int(self.encode(np.eye(self.n, dtype=np.int64))[0])


def enumerate_ring(descriptor):
    """Each of the p^4 matrices once, in lexicographic entry order"""
    return descriptor.elements()


# ==================== IDEMPOTENTS AND ELEMENT CLASSES ====================

def _check_square(A):
    if A.shape != (2, 2):
        raise ShapeMismatchError(f'expected a 2x2 matrix, got shape {A.shape}')


def is_idempotent(A):
    _check_square(A)
    return A @ A == A


def is_nontrivial_idempotent(A):
    return is_idempotent(A) and not A.is_zero() and rank(A) < 2


def enumerate_nontrivial_idempotents(descriptor):
    """Nonzero nonunit idempotents found by scanning the whole ring"""
    stack = descriptor.stack
    squares = np.einsum('nij,njk->nik', stack, stack) % descriptor.p
    found = []
    for code in np.flatnonzero((squares == stack).all(axis=(1, 2))):
        if code != 0 and descriptor.rank_table[code] < 2:
            found.append(descriptor.element(code))
    logger.info(f'{descriptor}: {len(found)} nontrivial idempotents')
    return found


def canonical_idempotents(field):
    """The closed-form idempotents [[0,0],[0,1]] and [[1,r],[0,0]], r in F_p"""
    forms = [MatrixFp([[0, 0], [0, 1]], field)]
    forms.extend(MatrixFp([[1, r], [0, 0]], field) for r in range(field.p))
    return forms


def classify_element(A):
    """Zero, zero divisor or unit

    Units are told apart by the determinant, not by elimination, so the
    agreement with rank stays a real check. In a finite ring every nonzero
    nonunit is a zero divisor.
    """
    _check_square(A)
    if A.is_zero():
        return ElementClass.ZERO
    (a, b), (c, d) = A.tolist()
    if (a * d - b * c) % A.field.p:
        return ElementClass.UNIT
    return ElementClass.ZERO_DIVISOR


def zero_divisor_witness(A, descriptor):
    """A nonzero B with A*B = 0, found by scan, or None"""
    products = descriptor.codes_of(A.data @ descriptor.stack)
    for code in np.flatnonzero(products == 0):
        if code != 0:
            return descriptor.element(code)
    return None


# ==================== ONE-SIDED IDEALS ====================

@dataclass(frozen=True)
class PrincipalIdeal:
    generator: MatrixFp
    side: Side
    elements: SortedSet

    def __len__(self):
        return len(self.elements)

    def __contains__(self, A):
        return A in self.elements

    def __iter__(self):
        return iter(self.elements)

    @property
    def field(self):
        return self.generator.field

    def same_members(self, other):
        return list(self.elements) == list(other.elements)


def principal_ideal(a, side, descriptor=None):
    """{r*a} (left) or {a*r} (right) by multiplying through the whole ring"""
    _check_square(a)
    side = as_side(side)
    descriptor = descriptor or RingDescriptor(a.field)
    codes = descriptor.cyclic_submodule(descriptor.code_of(a), side)
    elements = SortedSet(descriptor.element(code) for code in codes)
    logger.debug(f'{side} ideal of {a.entries} in {descriptor}: {len(elements)} elements')
    return PrincipalIdeal(generator=a, side=side, elements=elements)


def is_closed(ideal, descriptor=None):
    """Additive closure and closure under the ideal's one-sided multiplication"""
    descriptor = descriptor or RingDescriptor(ideal.field)
    members = set(descriptor.code_of(A) for A in ideal)
    member_codes = np.array(sorted(members))
    for x in member_codes:
        if not set(descriptor.add_codes(x, member_codes)) <= members:
            return False
        if not set(descriptor.multiples(x, ideal.side)) <= members:
            return False
    return True


def _additive_closure(descriptor, seeds):
    """Smallest additive subgroup containing the seed codes"""
    members = {0}
    frontier = set(seeds) - members
    while frontier:
        members |= frontier
        ordered = np.array(sorted(members))
        grown = set()
        for x in frontier:
            grown.update(int(c) for c in descriptor.add_codes(x, ordered))
        frontier = grown - members
    return members


def _closure(descriptor, seeds, side):
    """Smallest one-sided ideal containing the seed codes"""
    multiples = set()
    for code in seeds:
        multiples.update(int(c) for c in descriptor.multiples(code, side))
    return _additive_closure(descriptor, multiples)


def is_minimal(ideal, descriptor=None):
    """No nonzero element generates a proper nonzero sub-ideal"""
    descriptor = descriptor or RingDescriptor(ideal.field)
    members = {descriptor.code_of(A) for A in ideal}
    for code in members - {0}:
        if _closure(descriptor, [code], ideal.side) != members:
            return False
    return True


def is_maximal(ideal, descriptor=None):
    """Adding any outside element generates the whole ring"""
    descriptor = descriptor or RingDescriptor(ideal.field)
    members = {descriptor.code_of(A) for A in ideal}
    generator = descriptor.code_of(ideal.generator)
    for code in descriptor.codes():
        if code in members:
            continue
        if len(_closure(descriptor, [generator, code], ideal.side)) != descriptor.order:
            return False
    return True


def two_sided_ideal(a, descriptor=None):
    """Codes of the two-sided ideal generated by a: additive span of all r*a*s"""
    descriptor = descriptor or RingDescriptor(a.field)
    stack = descriptor.stack
    p = descriptor.p
    left = np.einsum('nij,jk->nik', stack, a.data) % p
    seeds = set()
    for product in left:
        seeds.update(int(c) for c in descriptor.codes_of(product @ stack))
    return _additive_closure(descriptor, seeds)


@dataclass(frozen=True)
class IdealLattice:
    descriptor: RingDescriptor
    side: Side
    idempotents: list
    ideals: list

    @property
    def idempotent_count(self):
        return len(self.idempotents)

    @property
    def ideal_count(self):
        return len(self.ideals)


def ideal_lattice(descriptor, side=Side.LEFT):
    """Distinct one-sided ideals generated by the nontrivial idempotents"""
    side = as_side(side)
    idempotents = enumerate_nontrivial_idempotents(descriptor)
    ideals = []
    seen = set()
    for a in idempotents:
        ideal = principal_ideal(a, side, descriptor)
        key = tuple(ideal.elements)
        if key not in seen:
            seen.add(key)
            ideals.append(ideal)
    logger.info(f'{descriptor}: {len(idempotents)} idempotents generate {len(ideals)} distinct {side} ideals')
    return IdealLattice(descriptor=descriptor, side=side, idempotents=idempotents, ideals=ideals)
