"""idempotents, ideal, rankcode-info and lift"""
import logging

import click

from grasscodes.algebra import MatrixFp, PrimeField
from grasscodes.commands import Outcome, handles, invoke
from grasscodes.lifting import lift, lift_code
from grasscodes.models import (
    IdealRecord,
    IdempotentRecord,
    IdempotentsRecord,
    LiftedParameters,
    LiftRecord,
    RankCodeRecord,
    RankCodeWitnesses,
    SourceParameters,
)
from grasscodes.rank_code import code_from_matrix_set, verify_delta_equals_omega
from grasscodes.ring import (
    RingDescriptor,
    Side,
    canonical_idempotents,
    enumerate_nontrivial_idempotents,
    ideal_lattice,
    is_idempotent,
    principal_ideal,
)
from grasscodes.subspace import rowspace
from grasscodes.utils.codefiles import (
    format_rank_code,
    format_subspace_code,
    parse_rank_code,
    read_file,
    write_file,
)
from grasscodes.utils.render import Table, matrix_label, render_tables

logger = logging.getLogger(__name__)


def _na(value):
    return '-' if value is None else value


# ==================== HANDLERS ====================

@handles('idempotents')
def idempotents_report(request, app_config):
    descriptor = RingDescriptor(request.p, request.ring_budget)
    found = enumerate_nontrivial_idempotents(descriptor)
    closed_forms = set(canonical_idempotents(descriptor.field))
    lattices = {side: ideal_lattice(descriptor, side) for side in Side}

    rows = []
    records = []
    for a in found:
        left = principal_ideal(a, Side.LEFT, descriptor)
        right = principal_ideal(a, Side.RIGHT, descriptor)
        records.append(IdempotentRecord(
            generator=list(a.entries),
            canonical_form=a in closed_forms,
            left_ideal_size=len(left),
            right_ideal_size=len(right),
        ))
        rows.append([matrix_label(a), 'yes' if a in closed_forms else 'no', len(left), len(right)])

    record = IdempotentsRecord(
        p=request.p,
        idempotent_count=len(found),
        canonical_count=len(closed_forms),
        distinct_left_ideals=lattices[Side.LEFT].ideal_count,
        distinct_right_ideals=lattices[Side.RIGHT].ideal_count,
        idempotents=records,
    )
    summary = Table(
        title=f'nontrivial idempotents of {descriptor}',
        headers=['idempotents', 'closed forms', 'distinct left ideals', 'distinct right ideals'],
        rows=[[record.idempotent_count, record.canonical_count,
               record.distinct_left_ideals, record.distinct_right_ideals]],
    )
    listing = Table(title='idempotents', headers=['a', 'closed form', '|Ra|', '|aR|'], rows=rows)
    return Outcome(record=record, tables=[summary, listing])


@handles('ideal')
def ideal_file(request, app_config):
    field = PrimeField(request.p)
    entries = request.generator
    a = MatrixFp([entries[:2], entries[2:]], field)
    descriptor = RingDescriptor(field, request.ring_budget)
    ideal = principal_ideal(a, request.side, descriptor)
    record = IdealRecord(
        p=request.p,
        side=request.side,
        generator=list(a.entries),
        idempotent=is_idempotent(a),
        size=len(ideal),
        elements=[list(A.entries) for A in ideal],
    )
    text = format_rank_code(ideal.elements, side=request.side, generator=a.entries)
    if request.output_path:
        write_file(request.output_path, text)
        logger.info(f'wrote {len(ideal)} matrices to {request.output_path}')
        summary = Table(
            title=f'{request.side} ideal of {matrix_label(a)} in {descriptor}',
            headers=['idempotent', 'size', 'file'],
            rows=[['yes' if record.idempotent else 'no', record.size, request.output_path]],
        )
        text = render_tables([summary])
    return Outcome(record=record, text=text.rstrip('\n'))


def _load_rank_code(path):
    parsed = parse_rank_code(read_file(path))
    return code_from_matrix_set(parsed.matrices)


@handles('rankcode-info')
def rank_code_info(request, app_config):
    code = _load_rank_code(request.input_path)
    report = verify_delta_equals_omega(code)
    witnesses = RankCodeWitnesses(
        delta_pair=[list(A.entries) for A in code.delta_witness] if code.delta_witness else None,
        omega_element=list(code.omega_witness.entries) if code.omega_witness is not None else None,
    )
    record = RankCodeRecord(
        k=code.k,
        l=code.l,
        p=code.field.p,
        size=code.size,
        delta=code.delta,
        omega=code.omega,
        rho=code.rho,
        linear=code.linear,
        delta_equals_omega=report.equal,
        witnesses=witnesses,
    )
    parameters = Table(
        title=f'{code.params} rank-metric code over {code.field}',
        headers=['k', 'l', 'p', 'size', 'linear', 'rho', 'delta', 'Omega', 'delta = Omega'],
        rows=[[code.k, code.l, code.field.p, code.size, code.linear, _na(code.rho),
               _na(code.delta), _na(code.omega), _na(report.equal) if report.applicable else report.reason]],
    )
    tables = [parameters]
    if code.delta_witness or code.omega_witness is not None:
        rows = []
        if code.delta_witness:
            A, B = code.delta_witness
            rows.append(['delta', f'{matrix_label(A)} / {matrix_label(B)}'])
        if code.omega_witness is not None:
            rows.append(['Omega', matrix_label(code.omega_witness)])
        tables.append(Table(title='witnesses', headers=['quantity', 'matrices'], rows=rows))
    return Outcome(record=record, tables=tables)


@handles('lift')
def lift_file(request, app_config):
    code = _load_rank_code(request.input_path)
    lifted = lift_code(code)
    measured = lifted.measured
    record = LiftRecord(
        source=SourceParameters(k=code.k, l=code.l, rho=code.rho, delta=code.delta),
        lifted=LiftedParameters(n=measured.n, M=measured.M, d=measured.d, k=measured.k, q=measured.q),
        theorem_ok=lifted.theorem_ok,
        distance_distribution=lifted.codewords.distance_distribution,
    )
    if request.output_path:
        write_file(request.output_path, format_subspace_code(lifted.codewords))
        logger.info(f'wrote {measured} lifted code to {request.output_path}')

    claimed = lifted.claimed if lifted.claimed is not None else 'not claimed (source is not linear)'
    tables = [Table(
        title='lifted code',
        headers=['source', 'lifted', 'claimed', 'theorem'],
        rows=[[code.params, measured, claimed, _na(lifted.theorem_ok)]],
    )]
    if not request.output_path:
        tables.append(Table(
            title='codewords',
            headers=['lifted from', 'basis'],
            rows=[[matrix_label(A), str(rowspace(lift(A)))] for A in code],
        ))
    return Outcome(record=record, tables=tables)


# ==================== COMMANDS ====================

@click.command('idempotents')
@click.argument('p', type=int)
@click.pass_obj
def idempotents_command(state, p):
    """List the nontrivial idempotents of M_2(F_p) and the ideals they generate"""
    invoke(state, 'idempotents', p=p)


@click.command('ideal')
@click.argument('p', type=int)
@click.argument('side', type=click.Choice(['left', 'right']))
@click.argument('entries', nargs=4, type=int)
@click.option('-o', '--output', 'output_path', type=click.Path(dir_okay=False), help='Write the code file here')
@click.pass_obj
def ideal_command(state, p, side, entries, output_path):
    """Write the one-sided ideal generated by [[a, b], [c, d]] as a code file"""
    invoke(state, 'ideal', p=p, side=side, generator=list(entries), output_path=output_path)


@click.command('rankcode-info')
@click.argument('codefile', type=click.Path(dir_okay=False))
@click.pass_obj
def rank_code_info_command(state, codefile):
    """delta, Omega and rho of a rank-metric code file"""
    invoke(state, 'rankcode-info', input_path=codefile)


@click.command('lift')
@click.argument('codefile', type=click.Path(dir_okay=False))
@click.option('-o', '--output', 'output_path', type=click.Path(dir_okay=False), help='Write the lifted subspace code here')
@click.pass_obj
def lift_command(state, codefile, output_path):
    """Lift a rank-metric code file to a subspace code"""
    invoke(state, 'lift', input_path=codefile, output_path=output_path)


commands = [idempotents_command, ideal_command, rank_code_info_command, lift_command]
