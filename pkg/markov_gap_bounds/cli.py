# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import logging
import sys

import click

from .bernoulli.chain import BernoulliChain, histogram
from .bernoulli.data_types import IfsParams, StepFunction
from .bounds.certificates import bernoulli_certificate, doeblin_gap, hypercube_gap, lemma_gap
from .bounds.concentration import (BvCorollaryBound, DoeblinCorollaryBound, TheoremABound, TheoremBBound,
                                   min_n_theorem_a, plan_required_n)
from .bounds.data_types import GapCertificate, LemmaInput, NormFamily, ObservableSpec
from .doeblin.chain import DoeblinChain
from .doeblin.data_types import FiniteKernel
from .doeblin.operators import certificate_for_kernel
from .errors import DomainError, GapBoundsError
from .hypercube.chain import HypercubeWalk
from .hypercube.data_types import MAX_SIMULATION_SLOTS, ObservableKind, Vertex
from .hypercube.operators import build_observable, first_slot_subcube
from .output import dumps_json, load_json, write_csv
from .simulation import DeviationCurve
from .verification import run_suites
from .version import version

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_VERIFY_FAILED = 3

NORM_CHOICES = click.Choice([family.value for family in NormFamily])


class GapBoundsGroup(click.Group):
    """
    Command group mapping failures to exit codes: 1 for usage errors and
    arguments outside their domain, 2 for violated preconditions and
    infeasible requests.
    """

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            code = super(GapBoundsGroup, self).main(args=args, prog_name=prog_name, complete_var=complete_var,
                                                     standalone_mode=False, **extra)
        except click.ClickException as e:
            e.show()
            code = EXIT_USAGE
        except click.Abort:
            click.echo('Aborted!', err=True)
            code = EXIT_USAGE
        except DomainError as e:
            click.echo('Error: {}'.format(e), err=True)
            code = EXIT_USAGE
        except GapBoundsError as e:
            click.echo('Error: {}'.format(e), err=True)
            code = EXIT_PRECONDITION
        code = EXIT_OK if code is None else code
        if standalone_mode:
            sys.exit(code)
        return code


def _flag_key(key):
    return key.lstrip('-').replace('-', '_')


def _load_config(ctx, param, value):
    """
    Turn the JSON config into click's default_map. Keys may be written as
    flags (``"n-slots"``, ``"--lambda"``) or as parameter names.
    """
    if value is None:
        return value
    try:
        config = load_json(value)
    except ValueError as e:
        raise click.BadParameter('not valid JSON ({})'.format(e), ctx=ctx, param=param)
    if not isinstance(config, dict):
        raise click.BadParameter('expected a JSON object keyed by subcommand', ctx=ctx, param=param)
    group = ctx.command
    group_names = {_flag_key(opt): p.name for p in group.params for opt in p.opts}
    default_map = {}
    for key, section in config.items():
        command = group.commands.get(key)
        if command is None:
            if _flag_key(key) not in group_names:
                raise click.BadParameter('unknown subcommand or flag {!r}'.format(key), ctx=ctx, param=param)
            default_map[group_names[_flag_key(key)]] = section
            continue
        if not isinstance(section, dict):
            raise click.BadParameter('defaults of {!r} must be a JSON object'.format(key), ctx=ctx, param=param)
        names = {_flag_key(opt): p.name for p in command.params for opt in p.opts}
        default_map[key] = {names.get(_flag_key(flag), flag): item for flag, item in section.items()}
    ctx.default_map = default_map
    return value


@click.group(cls=GapBoundsGroup)
@click.option('--config', type=click.File('r'), callback=_load_config, is_eager=True, expose_value=False,
              help='JSON file with flag defaults, keyed by subcommand name.')
@click.option('-v', '--verbose', count=True, help='Log INFO (-v) or DEBUG (-vv) to stderr.')
@click.option('--threads', type=click.IntRange(min=1), default=1, show_default=True,
              help='Maximum number of worker threads of the simulations.')
@click.version_option(version, prog_name='markov-gap-bounds')
@click.pass_context
def cli(ctx, verbose, threads):
    """
    Spectral gap certificates and concentration bounds for Markov chains.

    Seeds are 64 bit unsigned integers. Replica i of a run with seed s draws
    from a Philox generator keyed by numpy's SeedSequence(entropy=s,
    spawn_key=(i,)), so results do not depend on --threads.
    """
    level = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format='%(levelname)s %(name)s: %(message)s')
    ctx.obj = {'threads': threads}


@cli.command()
@click.option('--family', type=click.Choice(['doeblin', 'hypercube', 'bernoulli', 'custom']), required=True)
@click.option('--norm', type=NORM_CHOICES, default='W', show_default=True, help='Hypercube norm.')
@click.option('--n-slots', type=click.IntRange(min=1), help='Hypercube dimension N.')
@click.option('--beta', type=float, help='Doeblin minorization constant.')
@click.option('--kernel', type=click.File('r'), help='Doeblin kernel as JSON {"size": k, "rows": [...]}.')
@click.option('--lambda', 'lambda_', type=float, help='Bernoulli convolution ratio.')
@click.option('--c-const', type=float, help='Custom: the constant C.')
@click.option('--theta', type=float, help='Custom: the contraction factor theta.')
@click.option('--delta0', type=float, help='Custom: a bare gap value.')
@click.option('--output', type=click.File('w'), default='-')
def gap(family, norm, n_slots, beta, kernel, lambda_, c_const, theta, delta0, output):
    """
    Print a gap certificate as JSON.
    """
    if family == 'hypercube':
        if n_slots is None:
            raise click.UsageError('--n-slots is required for --family hypercube')
        cert = hypercube_gap(n_slots, NormFamily(norm))
    elif family == 'doeblin':
        if kernel is not None:
            cert = certificate_for_kernel(FiniteKernel.from_dict(load_json(kernel)))
        elif beta is not None:
            cert = doeblin_gap(beta)
        else:
            raise click.UsageError('--beta or --kernel is required for --family doeblin')
    elif family == 'bernoulli':
        if lambda_ is None:
            raise click.UsageError('--lambda is required for --family bernoulli')
        cert = bernoulli_certificate(lambda_)[1]
    elif c_const is not None and theta is not None:
        cert = lemma_gap(LemmaInput(c_const, theta))
    elif delta0 is not None:
        cert = GapCertificate.from_delta0(delta0)
    else:
        raise click.UsageError('--c-const and --theta, or --delta0, are required for --family custom')
    output.write(dumps_json(cert.to_dict()))


@cli.command()
@click.option('--theorem', type=click.Choice(['A', 'B', 'doeblin', 'bv']), required=True)
@click.option('--delta0', type=float, help='Gap (theorems A and B).')
@click.option('--norm', 'norm', type=float, help='Observable norm |phi| (BV norm for --theorem bv).')
@click.option('--sigma2', type=float, help='Known dynamical variance (theorem B).')
@click.option('--u', 'variance_proxy', type=float, help='Variance proxy U >= sigma^2 (theorem B).')
@click.option('--beta', type=float, help='Minorization constant (doeblin).')
@click.option('--ell', type=click.IntRange(min=1), help='Block length (bv).')
@click.option('--n', 'n', type=click.IntRange(min=1), required=True, help='Sample size.')
@click.option('--a', 'a', type=click.FloatRange(min=0.0), required=True, help='Deviation.')
@click.option('--output', type=click.File('w'), default='-')
def bound(theorem, delta0, norm, sigma2, variance_proxy, beta, ell, n, a, output):
    """
    Evaluate a concentration bound. Exits with 2 when a validity
    precondition is violated; the value is printed anyway.
    """
    def need(value, flag):
        if value is None:
            raise click.UsageError('{} is required for --theorem {}'.format(flag, theorem))
        return value

    if theorem in ('A', 'B'):
        cert = GapCertificate.from_delta0(need(delta0, '--delta0'))
        obs = ObservableSpec(norm=need(norm, '--norm'), sigma2=sigma2)
        if theorem == 'A':
            evaluator = TheoremABound(cert, obs)
        else:
            evaluator = TheoremBBound(cert, obs, need(variance_proxy, '--u'))
    elif theorem == 'doeblin':
        evaluator = DoeblinCorollaryBound(need(beta, '--beta'))
    else:
        evaluator = BvCorollaryBound(need(ell, '--ell'), need(norm, '--norm'))
    result = evaluator.evaluate(n, a)
    data = result.to_dict()
    data.update({'theorem': theorem, 'n': n, 'a': a, 'threshold_n': evaluator.threshold_n})
    output.write(dumps_json(data))
    if not result.valid:
        click.echo('violated preconditions: {}'.format(
            ' '.join(code.value for code in result.violated_preconditions)), err=True)
        return EXIT_PRECONDITION
    return EXIT_OK


@cli.command()
@click.option('--delta0', type=float, required=True, help='Gap.')
@click.option('--norm', type=float, required=True, help='Observable norm |phi|.')
@click.option('--a', 'a', type=click.FloatRange(min=0.0), required=True, help='Deviation.')
@click.option('--p', 'target_p', type=float, required=True, help='Target tail probability.')
@click.option('--output', type=click.File('w'), default='-')
def plan(delta0, norm, a, target_p, output):
    """
    Smallest sample size whose two-regime bound is at most --p.
    """
    cert = GapCertificate.from_delta0(delta0)
    n = plan_required_n(cert, ObservableSpec(norm=norm), a, target_p)
    exact_n, simplified_n = min_n_theorem_a(cert)
    output.write(dumps_json({'n': n, 'delta0': delta0, 'norm': norm, 'a': a, 'p': target_p,
                              'exact_n': exact_n, 'simplified_n': simplified_n}))


def _hypercube_curve(ctx, n_slots, observable, norm, start, n, replicas, seed, a_grid):
    if n_slots is None:
        raise click.UsageError('--n-slots is required for --family hypercube')
    if observable not in ('rho', 'indicator', 'parity'):
        raise click.BadParameter('{!r} is not a hypercube observable'.format(observable), param_hint='--observable')
    kind = ObservableKind(observable)
    if kind is ObservableKind.INDICATOR:
        f = build_observable(kind, n_slots, first_slot_subcube(n_slots))
    else:
        f = build_observable(kind, n_slots)
    if start in (None, 'uniform'):
        start = None
    else:
        start = Vertex.from_string(start)
    return HypercubeWalk(n_slots).deviation_curve(f, n, replicas, seed, a_grid=a_grid,
                                                  norm_family=None if norm is None else NormFamily(norm),
                                                  start=start, threads=ctx.obj['threads'])


def _doeblin_curve(ctx, kernel, values, start, n, replicas, seed, a_grid):
    if kernel is None or values is None:
        raise click.UsageError('--kernel and --values are required for --family doeblin')
    chain = DoeblinChain(FiniteKernel.from_dict(load_json(kernel)))
    try:
        f = [float(value) for value in values.split(',')]
    except ValueError:
        raise click.BadParameter('expected comma separated numbers', param_hint='--values')
    if start in (None, 'stationary'):
        start = None
    else:
        try:
            start = int(start)
        except ValueError:
            raise click.BadParameter('expected a state index or "stationary"', param_hint='--start')
    return chain.deviation_curve(f, n, replicas, seed, a_grid=a_grid, start=start, threads=ctx.obj['threads'])


def _bernoulli_curve(ctx, lambda_, observable, step_function, threshold, start, n, replicas, seed, a_grid,
                     reference):
    if lambda_ is None:
        raise click.UsageError('--lambda is required for --family bernoulli')
    if observable not in ('indicator', 'sign'):
        raise click.BadParameter('{!r} is not a Bernoulli observable'.format(observable), param_hint='--observable')
    params = IfsParams(lambda_)
    if step_function is not None:
        f = StepFunction.from_dict(load_json(step_function))
    elif observable == 'sign':
        f = StepFunction.sign(params.attractor)
    else:
        f = StepFunction.indicator(threshold, params.attractor)
    try:
        start = 0.0 if start is None else float(start)
    except ValueError:
        raise click.BadParameter('expected a point of the attractor', param_hint='--start')
    return BernoulliChain(params).estimate_integral(f, n, replicas, seed, start=start, a_grid=a_grid,
                                                    reference=reference, threads=ctx.obj['threads'])


@cli.command()
@click.option('--family', type=click.Choice(['hypercube', 'doeblin', 'bernoulli']), required=True)
@click.option('--seed', type=click.IntRange(min=0, max=2 ** 64 - 1), required=True, help='Master seed.')
@click.option('--n', 'n', type=click.IntRange(min=1), required=True, help='Steps (blocks) per replica.')
@click.option('--replicas', type=click.IntRange(min=1), default=10000, show_default=True)
@click.option('--a', 'a_grid', type=click.FloatRange(min=0.0), multiple=True,
              help='Deviation, repeatable; default: 10 points inside the validity window.')
@click.option('--n-slots', type=click.IntRange(min=1, max=MAX_SIMULATION_SLOTS), help='Hypercube dimension N.')
@click.option('--observable', type=click.Choice(['rho', 'indicator', 'parity', 'sign']), default=None,
              help='hypercube: rho, indicator (of [0]) or parity; bernoulli: indicator (of [t, oo)) or sign.')
@click.option('--norm', type=NORM_CHOICES, help='Hypercube norm; default: the one giving the smallest bound.')
@click.option('--kernel', type=click.File('r'), help='Doeblin kernel JSON.')
@click.option('--values', help='Doeblin observable, comma separated values in [-1, 1].')
@click.option('--lambda', 'lambda_', type=float, help='Bernoulli convolution ratio.')
@click.option('--step-function', type=click.File('r'), help='Bernoulli observable as step function JSON.')
@click.option('--threshold', type=float, default=0.0, show_default=True, help='Bernoulli indicator threshold t.')
@click.option('--reference', type=float, help='Bernoulli: value deviations are measured from.')
@click.option('--start', help="Start: bit string or 'uniform' (hypercube), state or 'stationary' (doeblin), "
                              "point (bernoulli, default 0).")
@click.option('--format', 'output_format', type=click.Choice(['csv', 'json']), default='csv', show_default=True)
@click.option('--output', type=click.File('w'), default='-')
@click.pass_context
def simulate(ctx, family, seed, n, replicas, a_grid, n_slots, observable, norm, kernel, values, lambda_,
             step_function, threshold, reference, start, output_format, output):
    """
    Empirical tail frequencies of seeded replicas against the bound.
    """
    a_grid = list(a_grid) or None
    estimate = None
    if family == 'hypercube':
        curve = _hypercube_curve(ctx, n_slots, observable or 'rho', norm, start, n, replicas, seed, a_grid)
    elif family == 'doeblin':
        curve = _doeblin_curve(ctx, kernel, values, start, n, replicas, seed, a_grid)
    else:
        estimate, curve = _bernoulli_curve(ctx, lambda_, observable or 'indicator', step_function, threshold,
                                           start, n, replicas, seed, a_grid, reference)
    if output_format == 'csv':
        write_csv(output, DeviationCurve.COLUMNS, curve.rows())
    else:
        data = {'family': family, 'seed': seed, 'n': curve.n, 'replicas': curve.replicas,
                'reference': curve.reference, 'sigma2_hat': curve.sigma2_hat,
                'rows': [dict(zip(DeviationCurve.COLUMNS, row)) for row in curve.rows()]}
        if estimate is not None:
            data['estimate'] = estimate
        output.write(dumps_json(data))


@cli.command()
@click.option('--seed', type=click.IntRange(min=0, max=2 ** 64 - 1), required=True, help='Master seed.')
@click.option('--quick', is_flag=True, help='Reduced sample sizes.')
@click.option('--statistical', is_flag=True, help='Also run the seeded bound validity simulations.')
@click.option('--output', type=click.File('w'), default='-')
@click.pass_context
def verify(ctx, seed, quick, statistical, output):
    """
    Run the property suites; exits with 3 on any violation.
    """
    reports = run_suites(seed=seed, quick=quick, statistical=statistical, threads=ctx.obj['threads'])
    output.write(dumps_json({'seed': seed, 'quick': quick, 'suites': [r.to_dict() for r in reports],
                              'passed': all(r.passed for r in reports)}))
    failed = [r.name for r in reports if not r.passed]
    if failed:
        click.echo('failed suites: {}'.format(', '.join(failed)), err=True)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


@cli.command()
@click.option('--lambda', 'lambda_', type=float, required=True, help='Bernoulli convolution ratio.')
@click.option('--seed', type=click.IntRange(min=0, max=2 ** 64 - 1), required=True, help='Master seed.')
@click.option('--bins', type=click.IntRange(min=1), default=500, show_default=True)
@click.option('--runs', type=click.IntRange(min=1), default=30, show_default=True)
@click.option('--points', type=click.IntRange(min=1), default=10 ** 6, show_default=True)
@click.option('--start', type=float, default=0.0, show_default=True, help='Start point X0.')
@click.option('--output', type=click.File('w'), default='-')
@click.pass_context
def hist(ctx, lambda_, seed, bins, runs, points, start, output):
    """
    Histogram CSV (bin_left, bin_right, mass) of the Bernoulli convolution chain.
    """
    result = histogram(lambda_, seed, n_points=points, bins=bins, runs=runs, start=start,
                       threads=ctx.obj['threads'])
    write_csv(output, result.COLUMNS, result.rows())


def main(args=None):
    """
    Console entry point.

    :rtype: int
    """
    return cli.main(args=args, prog_name='markov-gap-bounds', standalone_mode=False)


if __name__ == '__main__':
    sys.exit(main())
