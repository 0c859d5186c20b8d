"""Report records: what the command line prints and serializes"""
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from grasscodes.algebra import is_prime, prime_power_decomposition
from grasscodes.config import Config
from grasscodes.errors import BudgetExceededError

SUBCOMMANDS = (
    'idempotents',
    'ideal',
    'rankcode-info',
    'lift',
    'verify',
    'distribution',
    'gl-order',
    'gaussian',
    'weights-report',
)

# Subcommands that walk every element of M_2(F_p)
EXHAUSTIVE_SUBCOMMANDS = ('idempotents', 'ideal', 'verify', 'weights-report')


class Record(BaseModel):
    model_config = ConfigDict(frozen=True)


class Rational(Record):
    num: int
    den: int

    @classmethod
    def from_fraction(cls, value):
        return cls(num=value.numerator, den=value.denominator)

    def __str__(self):
        return str(self.num) if self.den == 1 else f'{self.num}/{self.den}'


# ==================== REQUEST ====================

class CommandRequest(Record):
    subcommand: Literal[SUBCOMMANDS]
    p: int | None = None
    q: int | None = None
    n: int | None = None
    k: int | None = None
    side: Literal['left', 'right'] | None = None
    generator: list[int] | None = None
    input_path: str | None = None
    output_path: str | None = None
    format: Literal['table', 'json'] = 'table'
    seed: int | None = None
    fault: str | None = None
    ring_budget: int = Config.RING_BUDGET
    enumeration_budget: int = Config.ENUMERATION_BUDGET

    @model_validator(mode='after')
    def check_parameters(self):
        if self.subcommand in EXHAUSTIVE_SUBCOMMANDS:
            if self.p is None or not is_prime(self.p):
                raise ValueError(f'{self.subcommand} needs a prime p, got {self.p}')
            if self.p**4 > self.ring_budget:
                raise BudgetExceededError(f'M_2(F_{self.p})', self.p**4, self.ring_budget, 'GRASSCODES_RING_BUDGET')
        if self.subcommand in ('distribution', 'gl-order', 'gaussian'):
            if self.q is None:
                raise ValueError(f'{self.subcommand} needs a prime power q')
            prime_power_decomposition(self.q)
        if self.subcommand == 'ideal':
            if self.side is None:
                raise ValueError('ideal needs a side')
            if self.generator is None or len(self.generator) != 4:
                raise ValueError('ideal needs the four entries of a 2x2 generator')
        if self.subcommand in ('rankcode-info', 'lift') and not self.input_path:
            raise ValueError(f'{self.subcommand} needs a code file')
        return self


# ==================== CONSTRUCTION RECORDS ====================

class IdempotentRecord(Record):
    generator: list[int]
    canonical_form: bool
    left_ideal_size: int
    right_ideal_size: int


class IdempotentsRecord(Record):
    p: int
    idempotent_count: int
    canonical_count: int
    distinct_left_ideals: int
    distinct_right_ideals: int
    idempotents: list[IdempotentRecord]


class IdealRecord(Record):
    p: int
    side: str
    generator: list[int]
    idempotent: bool
    size: int
    elements: list[list[int]]


class RankCodeWitnesses(Record):
    delta_pair: list[list[int]] | None = None
    omega_element: list[int] | None = None


class RankCodeRecord(Record):
    k: int
    l: int
    p: int
    size: int
    delta: int | None
    omega: int | None
    rho: int | None
    linear: bool
    delta_equals_omega: bool | None
    witnesses: RankCodeWitnesses


class SourceParameters(Record):
    k: int
    l: int
    rho: int | None
    delta: int | None


class LiftedParameters(Record):
    n: int
    M: int
    d: int | None
    k: int | None
    q: int


class LiftRecord(Record):
    source: SourceParameters
    lifted: LiftedParameters
    theorem_ok: bool | None
    distance_distribution: dict[int, int] = Field(default_factory=dict)


# ==================== REPORT RECORDS ====================

class DistributionRecord(Record):
    q: int
    A0: int
    A1: int
    A2: int
    exhaustive: bool


class GLOrderRecord(Record):
    q: int
    n: int
    order: int


class GaussianRecord(Record):
    n: int
    k: int
    q: int
    value: int


class GammaValue(Record):
    generator: str
    cardinality: int
    gamma_num: int
    gamma_den: int


class WeightsRecord(Record):
    weight_name: str
    ring: str
    side: str
    E: bool
    H: bool
    homogeneous: bool
    normalized: bool | None
    gamma_values: list[GammaValue]
    witnesses: list[str]


class WeightsReportRecord(Record):
    p: int
    is_weight: bool
    full_ring_gamma: Rational
    ideal_gamma: Rational
    homogeneous: bool
    sides: list[WeightsRecord]
    unit_invariant: bool | None


class CheckRecord(Record):
    name: str
    ok: bool
    detail: str


class VerificationRecord(Record):
    p: int
    seed: int
    ok: bool
    checks: list[CheckRecord]
