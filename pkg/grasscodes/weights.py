"""Weight functions on finite rings: axioms, conditions (E) and (H), average values"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from grasscodes.algebra import MatrixFp, FieldElement
from grasscodes.config import Config
from grasscodes.errors import BudgetExceededError, InvalidParameterError, ZeroGeneratorError
from grasscodes.ring import RingDescriptor, Side, as_side

logger = logging.getLogger(__name__)

UNIT_INVARIANCE_LIMIT = 5


# ==================== WEIGHT FUNCTIONS ====================

@dataclass(frozen=True)
class WeightFunction:
    """A weight given extensionally: table[code] is the weight of that element"""
    name: str
    ring: object
    table: tuple

    @classmethod
    def from_function(cls, name, ring, fn):
        return cls(name=name, ring=ring, table=tuple(Fraction(fn(code)) for code in ring.codes()))

    def evaluate(self, x):
        return self.table[element_code(self.ring, x)]

    def scaled(self):
        """Weights as integers over one common denominator"""
        denominator = math.lcm(*(w.denominator for w in self.table))
        ints = np.array([int(w * denominator) for w in self.table], dtype=np.int64)
        return ints, denominator


def rank_weight(descriptor):
    return WeightFunction(
        name='rank',
        ring=descriptor,
        table=tuple(Fraction(int(r)) for r in descriptor.rank_table),
    )


def hamming_weight(ring):
    """Number of nonzero coordinates"""
    counts = np.count_nonzero(ring.digits, axis=1)
    return WeightFunction(name='hamming', ring=ring, table=tuple(Fraction(int(c)) for c in counts))


def element_code(ring, x):
    if isinstance(x, MatrixFp):
        return ring.code_of(x)
    if isinstance(x, FieldElement):
        return x.value
    code = int(x)
    if not 0 <= code < ring.order:
        raise InvalidParameterError(f'{code} does not code an element of {ring}')
    return code


# ==================== WEIGHT AXIOMS ====================

@dataclass(frozen=True)
class WeightAxiomReport:
    is_weight: bool
    failed_axiom: str | None = None
    witness: tuple = ()


def is_weight(w, ring_budget=None):
    """Check axioms i-iv exhaustively; iv over all pairs"""
    ring = w.ring
    budget = Config.RING_BUDGET if ring_budget is None else ring_budget
    if ring.order > budget:
        raise BudgetExceededError(f'weight axioms on {ring}', ring.order, budget, 'GRASSCODES_RING_BUDGET')

    ints, _ = w.scaled()
    codes = np.arange(ring.order)

    # i. w(x) = 0 iff x = 0
    for code in codes:
        if (ints[code] == 0) != (code == 0):
            return WeightAxiomReport(False, 'i', (ring.label(code),))

    # ii. nonnegative
    for code in codes:
        if ints[code] < 0:
            return WeightAxiomReport(False, 'ii', (ring.label(code),))

    # iii. w(x) = w(-x)
    negatives = ring.neg_codes(codes)
    for code, negative in zip(codes, negatives):
        if ints[code] != ints[negative]:
            return WeightAxiomReport(False, 'iii', (ring.label(code),))

    # iv. w(x + y) <= w(x) + w(y)
    for x in codes:
        sums = ring.add_codes(x, codes)
        violations = np.flatnonzero(ints[sums] > ints[x] + ints)
        if violations.size:
            y = int(violations[0])
            return WeightAxiomReport(False, 'iv', (ring.label(x), ring.label(y)))

    logger.info(f'{w.name} weight on {ring} satisfies the weight axioms')
    return WeightAxiomReport(True)


# ==================== AVERAGE VALUES ====================

@dataclass(frozen=True)
class AverageValueReport:
    generator: int
    label: str
    side: Side
    cardinality: int
    weight_sum: Fraction
    gamma: Fraction


def _average(w, ints, denominator, code, side):
    submodule = w.ring.cyclic_submodule(code, side)
    weight_sum = Fraction(int(ints[submodule].sum()), denominator)
    return AverageValueReport(
        generator=code,
        label=w.ring.label(code),
        side=side,
        cardinality=len(submodule),
        weight_sum=weight_sum,
        gamma=weight_sum / len(submodule),
    )


def average_value(w, x, side=Side.LEFT):
    """Gamma of the cyclic submodule Rx (or xR), in exact rational arithmetic"""
    code = element_code(w.ring, x)
    if code == 0:
        raise ZeroGeneratorError('the average value needs a nonzero generator')
    ints, denominator = w.scaled()
    return _average(w, ints, denominator, code, as_side(side))


@dataclass(frozen=True)
class EgalitarianReport:
    egalitarian: bool
    side: Side
    gamma: Fraction | None
    normalized: bool | None
    values: list
    witnesses: tuple = ()
    gammas: dict = field(default_factory=dict, repr=False)


def egalitarian_check(w, side=Side.LEFT):
    """Condition (E): every cyclic submodule Rx, x != 0, has the same average weight"""
    side = as_side(side)
    ring = w.ring
    ints, denominator = w.scaled()

    gammas = {}
    values = []
    seen = set()
    for code in range(1, ring.order):
        report = _average(w, ints, denominator, code, side)
        gammas[code] = report.gamma
        key = ring.cyclic_submodule(code, side).tobytes()
        if key not in seen:
            seen.add(key)
            values.append(report)

    # Compare against the submodule generated by the identity, i.e. the whole ring
    reference = ring.one_code
    reference_gamma = gammas[reference]
    witnesses = ()
    for code, gamma in gammas.items():
        if gamma != reference_gamma:
            witnesses = (reference, code)
            break

    egalitarian = not witnesses
    gamma = reference_gamma if egalitarian else None
    logger.info(f'{w.name} weight on {ring} ({side}): egalitarian={egalitarian}')
    return EgalitarianReport(
        egalitarian=egalitarian,
        side=side,
        gamma=gamma,
        normalized=(gamma == 1) if egalitarian else None,
        values=values,
        witnesses=witnesses,
        gammas=gammas,
    )


@dataclass(frozen=True)
class HomogeneityReport:
    side: Side
    E: bool
    H: bool
    homogeneous: bool
    egalitarian: EgalitarianReport
    h_witnesses: tuple = ()


def homogeneous_check(w, side=Side.LEFT):
    """Condition (H): elements generating the same cyclic submodule share a weight"""
    side = as_side(side)
    ring = w.ring
    egalitarian = egalitarian_check(w, side)

    first_by_submodule = {}
    h_witnesses = ()
    for code in ring.codes():
        key = ring.cyclic_submodule(code, side).tobytes()
        first = first_by_submodule.setdefault(key, code)
        if w.table[first] != w.table[code]:
            h_witnesses = (first, code)
            break

    H = not h_witnesses
    return HomogeneityReport(
        side=side,
        E=egalitarian.egalitarian,
        H=H,
        homogeneous=egalitarian.egalitarian and H,
        egalitarian=egalitarian,
        h_witnesses=h_witnesses,
    )


@dataclass(frozen=True)
class HomogeneityProfile:
    left: HomogeneityReport
    right: HomogeneityReport

    @property
    def homogeneous(self):
        """Left and right homogeneous"""
        return self.left.homogeneous and self.right.homogeneous


def homogeneity_profile(w):
    return HomogeneityProfile(left=homogeneous_check(w, Side.LEFT), right=homogeneous_check(w, Side.RIGHT))


# ==================== RANK WEIGHT CLOSED FORMS ====================

def full_ring_gamma(p):
    """Average rank over all of M_2(F_p)"""
    return Fraction(2 * p**4 - p**3 - p**2 + p - 1, p**4)


def ideal_gamma(p):
    """Average rank over a minimal one-sided ideal of M_2(F_p)"""
    return Fraction(p**2 - 1, p**2)


def gammas_coincide(p):
    """The two averages agree only if (p^3 + 1)(p - 1) = 0"""
    return (p**3 + 1) * (p - 1) == 0


# ==================== UNIT INVARIANCE ====================

@dataclass(frozen=True)
class UnitInvarianceReport:
    p: int
    holds: bool
    pairs_checked: int
    witness: tuple = ()


def unit_invariance_check(p, sides=(Side.LEFT,)):
    """rank(UA) = rank(A) for every unit U and every A (and rank(AU) when asked)"""
    if p > UNIT_INVARIANCE_LIMIT:
        raise InvalidParameterError(f'unit invariance is checked exhaustively for p <= {UNIT_INVARIANCE_LIMIT}, got {p}')
    descriptor = RingDescriptor(p)
    ranks = descriptor.rank_table
    stack = descriptor.stack
    units = np.flatnonzero(ranks == 2)

    checked = 0
    for side in (as_side(s) for s in sides):
        for code in units:
            U = stack[code]
            products = U @ stack if side is Side.LEFT else stack @ U
            changed = np.flatnonzero(ranks[descriptor.codes_of(products)] != ranks)
            checked += descriptor.order
            if changed.size:
                A = int(changed[0])
                logger.error(f'rank changed under a unit on the {side}: U={descriptor.label(code)}, A={descriptor.label(A)}')
                return UnitInvarianceReport(p, False, checked, (descriptor.element(code), descriptor.element(A), side))

    logger.info(f'M_2(F_{p}): rank is unit invariant over {checked} pairs')
    return UnitInvarianceReport(p, True, checked)
