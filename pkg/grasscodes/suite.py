"""Theorem verification over M_2(F_p): every claim checked from scratch for one p"""
import itertools
import logging
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from unittest import mock

import numpy as np

from grasscodes import algebra, lifting, rank_code, subspace, weights
from grasscodes.algebra import GLOrderQuery, MatrixFp
from grasscodes.config import Config
from grasscodes.errors import GrassCodesError, InvalidParameterError
from grasscodes.reference_codes import REFERENCE_IDEALS, sum_closed_code
from grasscodes.ring import (
    ElementClass,
    RingDescriptor,
    Side,
    canonical_idempotents,
    classify_element,
    enumerate_nontrivial_idempotents,
    ideal_lattice,
    is_closed,
    is_maximal,
    is_minimal,
    principal_ideal,
    two_sided_ideal,
    zero_divisor_witness,
)

logger = logging.getLogger(__name__)

# Exhaustive maximality and two-sided scans are kept to the small rings
EXHAUSTIVE_IDEAL_LIMIT = 3
EXHAUSTIVE_PAIRS_LIMIT = 2


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


@dataclass(frozen=True)
class SuiteReport:
    p: int
    seed: int
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c.ok]


@dataclass
class SuiteContext:
    p: int
    descriptor: RingDescriptor
    rng: np.random.Generator
    app_config: type
    _idempotents: list | None = field(default=None, init=False, repr=False)

    @property
    def field(self):
        return self.descriptor.field

    def idempotents(self):
        if self._idempotents is None:
            self._idempotents = enumerate_nontrivial_idempotents(self.descriptor)
        return self._idempotents


CHECKS = []


def check(name):
    def register(fn):
        CHECKS.append((name, fn))
        return fn
    return register


# ==================== FAULT INJECTION ====================

_gaussian_coefficient = subspace.gaussian_coefficient
_full_ring_gamma = weights.full_ring_gamma


def _skewed_gl_order(query):
    return algebra.gl_order(query) + 1


def _skewed_gaussian(n, k, q):
    return _gaussian_coefficient(n, k, q) + 1


def _dropped_identity_lift(A):
    return MatrixFp(np.hstack([np.zeros((A.rows, A.rows), dtype=np.int64), A.data]), A.field)


def _skewed_full_ring_gamma(p):
    return _full_ring_gamma(p) + Fraction(1, p**4)


FAULTS = {
    'gl-order': ('grasscodes.rank_code.gl_order', _skewed_gl_order),
    'gaussian': ('grasscodes.subspace.gaussian_coefficient', _skewed_gaussian),
    'lift': ('grasscodes.lifting.lift', _dropped_identity_lift),
    'full-ring-gamma': ('grasscodes.weights.full_ring_gamma', _skewed_full_ring_gamma),
}


@contextmanager
def injected_fault(name):
    """Swap one core formula for a wrong one while the block runs"""
    if name is None:
        yield
        return
    if name not in FAULTS:
        raise InvalidParameterError(f'unknown fault {name!r}; choose from {", ".join(sorted(FAULTS))}')
    target, mutant = FAULTS[name]
    logger.warning(f'fault injected: {target} replaced')
    with mock.patch(target, mutant):
        yield


# ==================== IDEALS ====================

@check('idempotents')
def _check_idempotents(ctx):
    found = ctx.idempotents()
    missing = [A for A in canonical_idempotents(ctx.field) if A not in found]
    left = ideal_lattice(ctx.descriptor, Side.LEFT)
    right = ideal_lattice(ctx.descriptor, Side.RIGHT)
    p = ctx.p
    ok = (not missing and len(found) == p * (p + 1)
          and left.ideal_count == p + 1 and right.ideal_count == p + 1)
    detail = (f'{len(found)} nontrivial idempotents, {left.ideal_count} distinct left '
              f'and {right.ideal_count} distinct right ideals')
    if missing:
        detail += f'; closed forms missing from the scan: {[A.entries for A in missing]}'
    return ok, detail


@check('minimal ideals')
def _check_minimal_ideals(ctx):
    p = ctx.p
    ideals = []
    for side in Side:
        ideals.extend(ideal_lattice(ctx.descriptor, side).ideals)
    for ideal in ideals:
        if len(ideal) != p**2:
            return False, f'{ideal.side} ideal of {ideal.generator.entries} has {len(ideal)} elements'
        if not is_closed(ideal, ctx.descriptor):
            return False, f'{ideal.side} ideal of {ideal.generator.entries} is not closed'
        if not is_minimal(ideal, ctx.descriptor):
            return False, f'{ideal.side} ideal of {ideal.generator.entries} is not minimal'
        if p <= EXHAUSTIVE_IDEAL_LIMIT and not is_maximal(ideal, ctx.descriptor):
            return False, f'{ideal.side} ideal of {ideal.generator.entries} is not maximal'
    scope = 'minimal and maximal' if p <= EXHAUSTIVE_IDEAL_LIMIT else 'minimal'
    return True, f'{len(ideals)} one-sided ideals of size {p**2}, closed and {scope}'


@check('two-sided ideals')
def _check_two_sided(ctx):
    d = ctx.descriptor
    if ctx.p <= EXHAUSTIVE_IDEAL_LIMIT:
        generators = [d.element(code) for code in range(1, d.order)]
    else:
        generators = ctx.idempotents()
    for a in generators:
        if len(two_sided_ideal(a, d)) != d.order:
            return False, f'{a.entries} generates a proper two-sided ideal'
    return True, f'{len(generators)} nonzero generators all give the whole ring'


@check('element classes')
def _check_element_classes(ctx):
    d = ctx.descriptor
    counts = {c: 0 for c in ElementClass}
    for code, A in enumerate(d.elements()):
        kind = classify_element(A)
        counts[kind] += 1
        expected = {0: ElementClass.ZERO, 2: ElementClass.UNIT}.get(int(d.rank_table[code]), ElementClass.ZERO_DIVISOR)
        if kind is not expected:
            return False, f'{A.entries} classified {kind.value}, rank says {expected.value}'
        if kind is ElementClass.ZERO_DIVISOR and zero_divisor_witness(A, d) is None:
            return False, f'{A.entries} has no zero-divisor witness'
    return True, (f'{counts[ElementClass.UNIT]} units, {counts[ElementClass.ZERO_DIVISOR]} zero divisors, '
                  f'every zero divisor witnessed')


# ==================== RANK-METRIC CODES ====================

@check('delta = Omega')
def _check_delta_omega(ctx):
    codes = []
    for a in ctx.idempotents():
        for side in Side:
            codes.append(rank_code.code_from_matrix_set(principal_ideal(a, side, ctx.descriptor).elements))
    max_generators = ctx.descriptor.dimension if ctx.p <= EXHAUSTIVE_IDEAL_LIMIT else 2
    for _ in range(ctx.app_config.RANDOM_SUBCODES):
        generators = int(ctx.rng.integers(1, max_generators + 1))
        codes.append(rank_code.random_linear_subcode(ctx.descriptor, ctx.rng, generators))

    applicable = 0
    for code in codes:
        report = rank_code.verify_delta_equals_omega(code)
        if not report.applicable:
            continue
        applicable += 1
        if not report.equal:
            return False, f'delta={report.delta}, Omega={report.omega} on {code.params}'
    return True, f'{applicable} linear codes, delta = Omega on all'


@check('rank distribution')
def _check_rank_distribution(ctx):
    p = ctx.p
    distribution = rank_code.rank_distribution(GLOrderQuery(p))
    units = (p**2 - 1) * (p**2 - p)
    expected = (1, p**4 - units - 1, units)
    if distribution.counts != expected:
        return False, f'distribution {distribution.counts}, expected {expected}'
    total = distribution.A1 + 2 * distribution.A2
    if total != rank_code.rank_weight_sum(p):
        return False, f'rank sum {total} differs from {rank_code.rank_weight_sum(p)}'
    return True, f'(A0, A1, A2) = {distribution.counts}'


# ==================== WEIGHTS ====================

@check('average values')
def _check_average_values(ctx):
    p = ctx.p
    w = weights.rank_weight(ctx.descriptor)
    full = weights.average_value(w, MatrixFp.identity(2, ctx.field)).gamma
    if full != weights.full_ring_gamma(p):
        return False, f'average over the ring is {full}, closed form {weights.full_ring_gamma(p)}'
    for a in ctx.idempotents():
        for side in Side:
            gamma = weights.average_value(w, a, side).gamma
            if gamma != weights.ideal_gamma(p):
                return False, f'{side} ideal of {a.entries}: average {gamma}, closed form {weights.ideal_gamma(p)}'
    if weights.gammas_coincide(p) or weights.egalitarian_check(w).egalitarian:
        return False, 'rank weight came out egalitarian'
    return True, f'whole ring {full}, minimal ideals {weights.ideal_gamma(p)}, not egalitarian'


@check('rank weight')
def _check_rank_weight(ctx):
    w = weights.rank_weight(ctx.descriptor)
    axioms = weights.is_weight(w, ctx.app_config.RING_BUDGET)
    if not axioms.is_weight:
        return False, f'axiom {axioms.failed_axiom} fails at {axioms.witness}'
    profile = weights.homogeneity_profile(w)
    for report in (profile.left, profile.right):
        if not report.H or report.E:
            return False, f'{report.side}: E={report.E}, H={report.H}'
    return True, 'weight axioms hold; (H) holds and (E) fails on both sides'


@check('unit invariance')
def _check_unit_invariance(ctx):
    if ctx.p > weights.UNIT_INVARIANCE_LIMIT:
        return True, f'skipped above p={weights.UNIT_INVARIANCE_LIMIT}'
    report = weights.unit_invariance_check(ctx.p, sides=(Side.LEFT, Side.RIGHT))
    if not report.holds:
        U, A, side = report.witness
        return False, f'rank changes for U={U.entries}, A={A.entries} on the {side}'
    return True, f'{report.pairs_checked} unit products preserve rank'


# ==================== LIFTING ====================

@check('ideal lifts')
def _check_ideal_lifts(ctx):
    expected = subspace.GrassmannParameters(n=4, M=ctx.p**2, d=2, k=2, q=ctx.p)
    count = 0
    for a in ctx.idempotents():
        for side in Side:
            lifting.verify_idempotent_ideal_lift(ctx.p, a, side, ctx.descriptor)
            count += 1
    return True, f'{count} one-sided ideals lift to {expected}'


@check('distance transport')
def _check_distance_transport(ctx):
    d = ctx.descriptor
    if ctx.p <= EXHAUSTIVE_PAIRS_LIMIT:
        elements = d.elements()
        pairs = list(itertools.product(elements, repeat=2))
        scope = 'all'
    else:
        codes = ctx.rng.integers(0, d.order, size=(ctx.app_config.RANDOM_PAIRS, 2))
        pairs = [(d.element(a), d.element(b)) for a, b in codes]
        scope = 'random'
    counterexample = lifting.distance_transport(pairs)
    if counterexample is not None:
        A, B = counterexample
        return False, f'd_S != 2 d_R for {A.entries}, {B.entries}'
    return True, f'd_S = 2 d_R on {scope} {len(pairs)} pairs'


@check('reference codes')
def _check_reference_codes(ctx):
    references = REFERENCE_IDEALS.get(ctx.p, ())
    if not references:
        return True, f'none listed for p={ctx.p}'
    for ref in references:
        ideal = principal_ideal(ref.generator_matrix(), ref.side, ctx.descriptor)
        if list(ideal.elements) != sorted(ref.element_matrices()):
            return False, f'{ref.name}: members differ from the listing'
        code = rank_code.code_from_matrix_set(ideal.elements)
        if (code.rho, code.delta, code.omega) != (2, 1, 1):
            return False, f'{ref.name}: measured {code.params}, Omega={code.omega}'
        lifted = lifting.lift_code(code)
        vectors = {U.vectors() for U in lifted.codewords}
        if vectors != ref.expected_subspaces():
            return False, f'{ref.name}: lifted subspaces differ from the listing'
    detail = f'{len(references)} listed ideals reproduced'
    if ctx.p == 2:
        _, _, closed = sum_closed_code()
        if (closed.M, closed.Delta, closed.d) != (3, 2, 1):
            return False, f'sum-closed code gave M={closed.M}, Delta={closed.Delta}, d={closed.d}'
        detail += ', sum-closed code has Delta=2, d=1'
    return True, detail


# ==================== SUBSPACES ====================

@check('gaussian coefficients')
def _check_gaussian(ctx):
    p = ctx.p
    top = 5 if p <= EXHAUSTIVE_IDEAL_LIMIT else 4
    checked = 0
    for n in range(1, top + 1):
        for k in range(n + 1):
            counted = len(subspace.enumerate_grassmannian(n, k, p, ctx.app_config.ENUMERATION_BUDGET))
            formula = subspace.gaussian_coefficient(n, k, p)
            if counted != formula:
                return False, f'G_{p}({n},{k}) has {counted} members, formula gives {formula}'
            if formula != subspace.gaussian_coefficient(n, n - k, p):
                return False, f'[{n} {k}]_{p} is not symmetric'
            checked += 1
    return True, f'{checked} Grassmannians counted up to n={top}'


@check('trivial intersection')
def _check_trivial_intersection(ctx):
    p = ctx.p
    budget = ctx.app_config.ENUMERATION_BUDGET
    if p <= EXHAUSTIVE_PAIRS_LIMIT:
        families = subspace.enumerate_partial_spreads(4, 2, p, budget=budget)
    else:
        families = [subspace.greedy_partial_spread(4, 2, p, ctx.rng, budget) for _ in range(10)]
    largest = 0
    for family in families:
        code = subspace.code_from_subspaces(family)
        report = subspace.trivial_intersection_distance(code)
        if not report.holds or code.d != 4:
            return False, f'{code.parameters}: predicted d={report.predicted}, measured d={code.d}'
        largest = max(largest, code.M)
    if p <= EXHAUSTIVE_PAIRS_LIMIT and largest != p**2 + 1:
        return False, f'largest partial spread has {largest} members, expected {p**2 + 1}'
    return True, f'd = Delta_E + Delta_F = 4 on {len(families)} partial spreads, largest {largest}'


@check('subspace weight')
def _check_subspace_weight(ctx):
    p = ctx.p
    budget = ctx.app_config.ENUMERATION_BUDGET
    axioms = subspace.is_subspace_weight(3, p, budget)
    if not axioms.is_weight:
        return False, f'axiom {axioms.failed_axiom} fails at {axioms.witness}'
    grassmannian = subspace.subspace_weight_egalitarian_check(subspace.enumerate_grassmannian(4, 2, p, budget))
    projective = subspace.subspace_weight_egalitarian_check(subspace.enumerate_projective_space(3, p, budget))
    if not grassmannian.egalitarian or grassmannian.gamma != 2 or projective.egalitarian:
        return False, 'dim is egalitarian exactly on a Grassmannian'
    return True, 'dim is a weight on P(3), egalitarian on G(4,2) only'


# ==================== RUNNER ====================

def run_suite(p, seed=None, app_config=Config, fault=None):
    """Run every check; a check that raises counts as failed"""
    seed = app_config.DEFAULT_SEED if seed is None else seed
    ctx = SuiteContext(
        p=p,
        descriptor=RingDescriptor(p, app_config.RING_BUDGET),
        rng=np.random.default_rng(seed),
        app_config=app_config,
    )
    results = []
    with injected_fault(fault):
        for name, fn in CHECKS:
            try:
                ok, detail = fn(ctx)
            except GrassCodesError as e:
                ok, detail = False, str(e)
            except Exception as e:
                ok, detail = False, f'{type(e).__name__}: {e}'
            if ok:
                logger.info(f'{name}: {detail}')
            else:
                logger.error(f'{name} failed for p={p}: {detail}')
            results.append(CheckResult(name=name, ok=ok, detail=detail))
    return SuiteReport(p=p, seed=seed, checks=results)
