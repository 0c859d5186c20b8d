"""distribution, gl-order, gaussian and weights-report"""
import click

from grasscodes.algebra import GLOrderQuery, gl_order
from grasscodes.commands import Outcome, handles, invoke
from grasscodes.models import (
    DistributionRecord,
    GammaValue,
    GaussianRecord,
    GLOrderRecord,
    Rational,
    WeightsRecord,
    WeightsReportRecord,
)
from grasscodes.rank_code import rank_distribution
from grasscodes.ring import RingDescriptor
from grasscodes.subspace import gaussian_coefficient
from grasscodes.utils.render import Table
from grasscodes.weights import (
    UNIT_INVARIANCE_LIMIT,
    full_ring_gamma,
    homogeneity_profile,
    ideal_gamma,
    is_weight,
    rank_weight,
    unit_invariance_check,
)


# ==================== HANDLERS ====================

@handles('distribution')
def distribution_report(request, app_config):
    distribution = rank_distribution(GLOrderQuery(request.q))
    record = DistributionRecord(
        q=distribution.q,
        A0=distribution.A0,
        A1=distribution.A1,
        A2=distribution.A2,
        exhaustive=distribution.exhaustive,
    )
    table = Table(
        title=f'rank distribution of M_2(F_{distribution.q})',
        headers=['A0', 'A1', 'A2', 'counted'],
        rows=[[record.A0, record.A1, record.A2, 'yes' if record.exhaustive else 'formula only']],
    )
    return Outcome(record=record, tables=[table])


@handles('gl-order')
def gl_order_report(request, app_config):
    query = GLOrderQuery(request.q, request.n or 2)
    record = GLOrderRecord(q=query.q, n=query.n, order=gl_order(query))
    table = Table(title=f'|GL({query.n}, {query.q})|', headers=['n', 'q', 'order'],
                  rows=[[record.n, record.q, record.order]])
    return Outcome(record=record, tables=[table])


@handles('gaussian')
def gaussian_report(request, app_config):
    value = gaussian_coefficient(request.n, request.k, request.q)
    record = GaussianRecord(n=request.n, k=request.k, q=request.q, value=value)
    table = Table(title=f'[{request.n} {request.k}]_{request.q}', headers=['n', 'k', 'q', 'value'],
                  rows=[[record.n, record.k, record.q, record.value]])
    return Outcome(record=record, tables=[table])


def _side_record(w, report, descriptor):
    egalitarian = report.egalitarian
    gamma_values = [
        GammaValue(
            generator=value.label,
            cardinality=value.cardinality,
            gamma_num=value.gamma.numerator,
            gamma_den=value.gamma.denominator,
        )
        for value in egalitarian.values
    ]
    return WeightsRecord(
        weight_name=w.name,
        ring=str(descriptor),
        side=str(report.side),
        E=report.E,
        H=report.H,
        homogeneous=report.homogeneous,
        normalized=egalitarian.normalized,
        gamma_values=gamma_values,
        witnesses=[descriptor.label(code) for code in egalitarian.witnesses],
    )


@handles('weights-report')
def weights_report(request, app_config):
    p = request.p
    descriptor = RingDescriptor(p, request.ring_budget)
    w = rank_weight(descriptor)
    axioms = is_weight(w, request.ring_budget)
    profile = homogeneity_profile(w)
    unit_invariant = unit_invariance_check(p).holds if p <= UNIT_INVARIANCE_LIMIT else None

    sides = [_side_record(w, report, descriptor) for report in (profile.left, profile.right)]
    record = WeightsReportRecord(
        p=p,
        is_weight=axioms.is_weight,
        full_ring_gamma=Rational.from_fraction(full_ring_gamma(p)),
        ideal_gamma=Rational.from_fraction(ideal_gamma(p)),
        homogeneous=profile.homogeneous,
        sides=sides,
        unit_invariant=unit_invariant,
    )

    summary = Table(
        title=f'rank weight on {descriptor}',
        headers=['side', 'weight', '(E)', '(H)', 'homogeneous', 'E witnesses'],
        rows=[[s.side, record.is_weight, s.E, s.H, s.homogeneous, ' vs '.join(s.witnesses) or '-'] for s in sides],
    )
    gammas = Table(
        title='average value per cyclic submodule',
        headers=['side', 'generator', 'size', 'gamma'],
        rows=[[s.side, g.generator, g.cardinality, str(Rational(num=g.gamma_num, den=g.gamma_den))]
              for s in sides for g in s.gamma_values],
    )
    closed = Table(
        title='closed forms',
        headers=['whole ring', 'minimal ideal', 'unit invariant'],
        rows=[[str(record.full_ring_gamma), str(record.ideal_gamma), '-' if unit_invariant is None else unit_invariant]],
    )
    return Outcome(record=record, tables=[summary, gammas, closed])


# ==================== COMMANDS ====================

@click.command('distribution')
@click.argument('q', type=int)
@click.pass_obj
def distribution_command(state, q):
    """Number of 2x2 matrices over F_q of rank 0, 1 and 2"""
    invoke(state, 'distribution', q=q)


@click.command('gl-order')
@click.argument('q', type=int)
@click.option('--n', 'n', type=int, default=2, show_default=True, help='Matrix size')
@click.pass_obj
def gl_order_command(state, q, n):
    """Order of GL(n, q)"""
    invoke(state, 'gl-order', q=q, n=n)


@click.command('gaussian')
@click.argument('n', type=int)
@click.argument('k', type=int)
@click.argument('q', type=int)
@click.pass_obj
def gaussian_command(state, n, k, q):
    """Number of k-dimensional subspaces of F_q^n"""
    invoke(state, 'gaussian', n=n, k=k, q=q)


@click.command('weights-report')
@click.argument('p', type=int)
@click.pass_obj
def weights_report_command(state, p):
    """Egalitarian and homogeneous analysis of the rank weight on M_2(F_p)"""
    invoke(state, 'weights-report', p=p)


commands = [distribution_command, gl_order_command, gaussian_command, weights_report_command]
