"""verify: the theorem suite for one p"""
import click

from grasscodes.commands import Outcome, handles, invoke
from grasscodes.errors import TheoremViolationError
from grasscodes.models import CheckRecord, VerificationRecord
from grasscodes.suite import FAULTS, run_suite
from grasscodes.utils.render import render_checklist


@handles('verify')
def verify_report(request, app_config):
    report = run_suite(request.p, seed=request.seed, app_config=app_config, fault=request.fault)
    record = VerificationRecord(
        p=report.p,
        seed=report.seed,
        ok=report.ok,
        checks=[CheckRecord(name=c.name, ok=c.ok, detail=c.detail) for c in report.checks],
    )
    failed = len(report.failures)
    if failed:
        summary = f'verify p={report.p} seed={report.seed}: {failed} of {len(report.checks)} checks failed'
    else:
        summary = f'verify p={report.p} seed={report.seed}: all {len(report.checks)} checks passed'
    text = render_checklist(report.checks) + '\n' + summary
    exit_code = 0 if report.ok else TheoremViolationError.exit_code
    return Outcome(record=record, text=text, exit_code=exit_code)


@click.command('verify')
@click.argument('p', type=int)
@click.option('--seed', type=int, default=None, help='Seed for the random sweeps')
@click.option('--inject-fault', 'fault', type=click.Choice(sorted(FAULTS)), default=None, hidden=True)
@click.pass_obj
def verify_command(state, p, seed, fault):
    """Check every theorem on M_2(F_p); exits nonzero on any violation"""
    invoke(state, 'verify', p=p, seed=seed if seed is not None else state.config.DEFAULT_SEED, fault=fault)


commands = [verify_command]
