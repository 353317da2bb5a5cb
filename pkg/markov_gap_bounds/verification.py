# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

"""
Property suites checking the certificates, the bounds and the exact
operators against brute-force computations.

Every suite returns a :py:class:`PropertyReport`. A check compares two
quantities ``lhs <= rhs`` up to a tolerance and records the excess
``lhs - rhs``; equalities are checked as ``|lhs - rhs| <= tolerance``.
Sizes default to the full acceptance runs, :py:func:`run_suites` with
``quick=True`` shrinks them.
"""

from __future__ import absolute_import, division, print_function

import logging
import math
import time

import numpy as np

from .bernoulli.chain import BernoulliChain
from .bernoulli.data_types import IfsParams, StepFunction
from .bernoulli.operators import apply_block_operator
from .bounds.certificates import bernoulli_certificate, doeblin_gap, hypercube_gap, lemma_gap
from .bounds.concentration import (BvCorollaryBound, DoeblinCorollaryBound, TheoremABound, TheoremBBound,
                                   min_n_theorem_a, plan_required_n, theorem_b_window)
from .bounds.constants import B_PREFACTOR
from .bounds.data_types import GapCertificate, LemmaInput, NormFamily, ObservableSpec
from .doeblin.chain import DoeblinChain
from .doeblin.data_types import FiniteKernel
from .doeblin.operators import (dobrushin_coefficient, minorization_split, s_norm, s_seminorm,
                                stationary_distribution, tv_distance)
from .hypercube.chain import HypercubeWalk
from .hypercube.data_types import ObservableKind
from .hypercube.operators import (average_table, build_observable, dynamical_variance_exact,
                                  first_slot_subcube, linear_functional, norm_tables, scrambled_variance,
                                  seminorm_tables, seminorms, spike, subcube)
from .simulation import replica_generator

log = logging.getLogger(__name__)

#: Slack of the inequality checks on exact computations.
TOLERANCE = 1e-9

#: Lambdas of the bounded variation suite.
BV_LAMBDAS = (0.55, 0.618, 2.0 / 3.0, 0.75, 0.9)


class PropertyReport(object):
    """
    Outcome of one property suite.

    :param str name: Suite name.
    :param int checks: Number of elementary checks.
    :param int violations: Checks that failed.
    :param float max_excess: Largest lhs - rhs seen (negative when all checks hold with margin).
    :param float elapsed: Run time in seconds.
    """
    def __init__(self, name, checks, violations, max_excess, elapsed):
        #: Suite name.
        self.name = name

        #: Number of elementary checks.
        self.checks = int(checks)

        #: Checks that failed.
        self.violations = int(violations)

        #: Largest excess lhs - rhs.
        self.max_excess = float(max_excess)

        #: Run time in seconds.
        self.elapsed = float(elapsed)

    @property
    def passed(self):
        """
        :rtype: bool
        """
        return self.violations == 0

    def to_dict(self):
        return {'name': self.name, 'checks': self.checks, 'violations': self.violations,
                'max_excess': self.max_excess, 'elapsed': self.elapsed, 'passed': self.passed}

    def __repr__(self):
        return 'PropertyReport({!r}, checks={}, violations={})'.format(self.name, self.checks, self.violations)


class _Tally(object):
    def __init__(self, name):
        self.name = name
        self.checks = 0
        self.violations = 0
        self.max_excess = -math.inf
        self.started = time.perf_counter()

    def at_most(self, lhs, rhs, tolerance=TOLERANCE):
        excess = np.atleast_1d(np.asarray(lhs, dtype=float) - np.asarray(rhs, dtype=float))
        self.checks += excess.size
        self.violations += int(np.count_nonzero(~(excess <= tolerance)))
        if excess.size:
            self.max_excess = max(self.max_excess, float(np.max(excess)))

    def close_to(self, lhs, rhs, tolerance=TOLERANCE):
        self.at_most(np.abs(np.asarray(lhs, dtype=float) - np.asarray(rhs, dtype=float)), 0.0, tolerance)

    def holds(self, condition):
        self.at_most(0.0 if condition else 1.0, 0.0, 0.0)

    def report(self):
        result = PropertyReport(self.name, self.checks, self.violations, self.max_excess,
                                time.perf_counter() - self.started)
        log.info("%s: %d checks, %d violations, max excess %r (%.2f s)", result.name, result.checks,
                 result.violations, result.max_excess, result.elapsed)
        return result


def lambda_for_ell(ell):
    """
    :return: A ratio whose block length is exactly ``ell``.
    :rtype: float
    """
    return 2.0 ** (-1.0 / (ell - 0.5))


def gap_identities(betas=None, dimensions=range(1, 21), ells=range(1, 11)):
    """
    Certified gaps against their closed forms and against the lemma applied
    to their (C, theta).
    """
    tally = _Tally('gap identities')
    betas = np.arange(1, 101) / 100.0 if betas is None else betas

    def through_lemma(cert):
        return lemma_gap(LemmaInput(cert.c_const, cert.theta)).delta0

    for beta in betas:
        cert = doeblin_gap(beta)
        tally.close_to(cert.delta0, beta / (2.0 - beta), 1e-12)
        tally.close_to(cert.delta0, through_lemma(cert), 1e-12)
    for n_slots in dimensions:
        for norm_family, expected in ((NormFamily.L, 1.0 / n_slots ** 2), (NormFamily.DL, 1.0 / (2 * n_slots - 1)),
                                      (NormFamily.W, 1.0 / (4 * n_slots - 1))):
            cert = hypercube_gap(n_slots, norm_family)
            tally.close_to(cert.delta0, expected, 1e-12)
            tally.close_to(cert.delta0, through_lemma(cert), 1e-12)
    for ell in ells:
        found, cert = bernoulli_certificate(lambda_for_ell(ell))
        tally.holds(found == ell)
        tally.close_to(cert.delta0, 1.0 / (2.0 ** (ell + 1) - 1.0), 1e-12)
        tally.close_to(cert.delta0, through_lemma(cert), 1e-12)
    return tally.report()


def _random_bound_inputs(rng):
    delta0 = rng.uniform(0.01, 1.0)
    norm = rng.uniform(0.5, 5.0)
    return GapCertificate.from_delta0(delta0), ObservableSpec(norm=norm)


def bound_consistency(rng, cases=100):
    """
    Clipping, the ordering of the Theorem A thresholds, monotonicity of the
    two-regime bound in n (and in a inside the gaussian branch), the validity
    flags of the variance-aware bound inside its window, and monotonicity in
    n and a of both corollary bounds.
    """
    tally = _Tally('bound consistency')
    for _ in range(cases):
        cert, obs = _random_bound_inputs(rng)
        exact_n, simplified_n = min_n_theorem_a(cert)
        tally.at_most(exact_n, simplified_n, 0.0)
        bound = TheoremABound(cert, obs)
        n = int(rng.integers(exact_n, 10 * simplified_n))
        window = cert.delta0 * obs.norm / 3.0
        a_small, a_large = np.sort(rng.uniform(0.0, window, size=2))
        low, high = bound.evaluate(n, a_large), bound.evaluate(n, a_small)
        tally.at_most(low.raw, high.raw, 0.0)
        tally.at_most(bound.evaluate(n + 1, a_large).raw, low.raw, 0.0)
        tally.close_to(low.clipped, min(low.raw, 1.0), 0.0)
        a_any = rng.uniform(0.0, 2.0 * obs.norm)
        tally.at_most(bound.evaluate(n + 1, a_any).raw, bound.evaluate(n, a_any).raw, 0.0)

        variance_proxy = rng.uniform(0.1, 10.0)
        bound_b = TheoremBBound(cert, obs.with_sigma2(variance_proxy), variance_proxy)
        tally.close_to(bound_b.evaluate(n, 0.0).raw, B_PREFACTOR, 1e-12)
        result_b = bound_b.evaluate(n, rng.uniform(0.0, theorem_b_window(cert, obs, variance_proxy)))
        tally.holds(result_b.valid == (n >= bound_b.threshold_n))

        corollaries = (DoeblinCorollaryBound(rng.uniform(0.01, 1.0)),
                       BvCorollaryBound(int(rng.integers(1, 11)), rng.uniform(0.5, 5.0)))
        for corollary in corollaries:
            n_small, n_large = np.sort(rng.integers(1, 10 ** 6, size=2))
            a_small, a_large = np.sort(rng.uniform(0.0, corollary.window, size=2))
            reference = corollary.evaluate(n_small, a_small).raw
            tally.at_most(corollary.evaluate(n_large, a_small).raw, reference, 0.0)
            tally.at_most(corollary.evaluate(n_small, a_large).raw, reference, 0.0)
    return tally.report()


def planner_round_trip(rng, cases=100):
    """
    The planned n reaches the target and is the smallest admissible one.
    """
    tally = _Tally('planner round trip')
    for _ in range(cases):
        cert, obs = _random_bound_inputs(rng)
        a = rng.uniform(0.01, 1.0) * obs.norm * cert.delta0
        target = 10.0 ** rng.uniform(-6.0, -0.5)
        n = plan_required_n(cert, obs, a, target)
        bound = TheoremABound(cert, obs)
        tally.at_most(bound.evaluate(n, a).raw, target, 0.0)
        tally.holds(n >= bound.threshold_n)
        tally.holds(n - 1 < bound.threshold_n or bound.evaluate(n - 1, a).raw > target)
    return tally.report()


def hypercube_contraction(rng, dimensions=range(2, 9), samples=1000):
    """
    Lipschitz and W contraction of the averaging operator, sup-norm
    non-expansion, and the certified gap in the three norms on mean zero
    functions.
    """
    tally = _Tally('hypercube contraction')
    for n_slots in dimensions:
        tables = rng.normal(size=(samples, 1 << n_slots))
        averaged = average_table(tables, n_slots)
        sup, lip, w, _ = seminorm_tables(tables, n_slots)
        sup_l0, lip_l0, w_l0, _ = seminorm_tables(averaged, n_slots)
        tally.at_most(lip_l0, (1.0 - 1.0 / n_slots) * lip)
        tally.at_most(w_l0, (1.0 - 1.0 / (2.0 * n_slots)) * w)
        tally.at_most(sup_l0, sup)

        centered = tables - tables.mean(axis=-1, keepdims=True)
        centered_l0 = average_table(centered, n_slots)
        for norm_family in NormFamily:
            delta0 = hypercube_gap(n_slots, norm_family).delta0
            tally.at_most(norm_tables(centered_l0, n_slots, norm_family),
                          (1.0 - delta0) * norm_tables(centered, n_slots, norm_family))
    return tally.report()


def petrov(rng, dimensions=range(1, 11), samples=10000):
    """
    The spread of a function never exceeds its local total variation:
    random tables plus spikes, subcube indicators and linear functionals.
    """
    tally = _Tally('petrov')
    for n_slots in dimensions:
        tables = [rng.normal(size=(samples, 1 << n_slots)),
                  rng.integers(0, 2, size=(samples // 10 + 1, 1 << n_slots)).astype(float)]
        structured = [spike(n_slots, vertex).values for vertex in range(min(1 << n_slots, 64))]
        structured.append(build_observable(ObservableKind.INDICATOR, n_slots, first_slot_subcube(n_slots)).values)
        for slot in range(1, n_slots + 1):
            structured.append(build_observable(ObservableKind.INDICATOR, n_slots, subcube(n_slots, {slot: 1})).values)
        structured.append(build_observable(ObservableKind.PARITY, n_slots).values)
        structured.append(build_observable(ObservableKind.RHO, n_slots).values)
        for _ in range(10):
            structured.append(linear_functional(n_slots, rng.normal(size=n_slots)).values)
        tables.append(np.array(structured))
        for table in tables:
            _, _, w, s = seminorm_tables(table, n_slots)
            tally.at_most(s, w)
    return tally.report()


def hypercube_variance(dimensions=range(2, 11)):
    """
    The exact variance of the first-slot indicator is (2N - 1)/4, in
    agreement with the flip-probability formula at p = 1/(2N).
    """
    tally = _Tally('hypercube variance')
    for n_slots in dimensions:
        indicator = build_observable(ObservableKind.INDICATOR, n_slots, first_slot_subcube(n_slots))
        expected = (2.0 * n_slots - 1.0) / 4.0
        tally.close_to(dynamical_variance_exact(indicator), expected)
        tally.close_to(scrambled_variance(1.0 / (2.0 * n_slots)), expected)
    return tally.report()


def banach_algebra(rng, dimensions=range(2, 7), samples=200):
    """
    |fg| <= |f| |g| in each of the three norms, for random tables and for
    products of the structured observables.
    """
    tally = _Tally('banach algebra')
    for n_slots in dimensions:
        f = rng.normal(size=(samples, 1 << n_slots))
        g = rng.normal(size=(samples, 1 << n_slots))
        for norm_family in NormFamily:
            tally.at_most(norm_tables(f * g, n_slots, norm_family),
                          norm_tables(f, n_slots, norm_family) * norm_tables(g, n_slots, norm_family))

        structured = [build_observable(ObservableKind.RHO, n_slots),
                      build_observable(ObservableKind.PARITY, n_slots),
                      build_observable(ObservableKind.INDICATOR, n_slots, first_slot_subcube(n_slots)),
                      linear_functional(n_slots, rng.normal(size=n_slots))]
        reports = [seminorms(h) for h in structured]
        for i, left in enumerate(structured):
            for j, right in enumerate(structured):
                product = seminorms(left * right)
                for norm_family in NormFamily:
                    tally.at_most(product.norm(norm_family),
                                  reports[i].norm(norm_family) * reports[j].norm(norm_family))
    return tally.report()


def random_kernel(rng, size):
    """
    :return: A kernel with Dirichlet(1, ..., 1) rows (all entries positive).
    :rtype: ~markov_gap_bounds.doeblin.data_types.FiniteKernel
    """
    rows = rng.dirichlet(np.ones(size), size=size)
    return FiniteKernel(rows / rows.sum(axis=1, keepdims=True))


def doeblin_oracle(rng, kernels=100, sizes=(5, 50), functions=20):
    """
    Minorization splits, Dobrushin coefficients, the S-contraction and the
    certified gap on finite kernels, and the metric axioms of d_TV.
    """
    tally = _Tally('doeblin oracle')
    for _ in range(kernels):
        kernel = random_kernel(rng, int(rng.integers(sizes[0], sizes[1] + 1)))
        split = minorization_split(kernel)
        tally.close_to(split.reconstruct(), kernel.rows, 1e-12)
        tally.at_most(-split.residual, 0.0, 1e-15)
        tally.close_to(split.residual.sum(axis=1), 1.0 - split.beta, 1e-12)
        coefficient = dobrushin_coefficient(kernel)
        tally.at_most(coefficient, 1.0 - split.beta, 1e-12)

        pi = stationary_distribution(kernel)
        tally.close_to(pi.dot(kernel.rows), pi, 1e-12)
        rate = 1.0 - doeblin_gap(split.beta).delta0
        for _ in range(functions):
            f = rng.normal(size=kernel.size)
            tally.at_most(s_seminorm(kernel.apply(f)), coefficient * s_seminorm(f))
            centered = f - pi.dot(f)
            tally.at_most(s_norm(kernel.apply(centered)), rate * s_norm(centered))

        mu, nu, rho = (rng.dirichlet(np.ones(kernel.size)) for _ in range(3))
        tally.close_to(tv_distance(mu, nu), tv_distance(nu, mu), 0.0)
        tally.at_most(tv_distance(mu, rho), tv_distance(mu, nu) + tv_distance(nu, rho))
    return tally.report()


def random_step_function(rng, interval, max_jumps=50):
    """
    :return: A step function with at most ``max_jumps`` breakpoints and values in [-1, 1].
    :rtype: ~markov_gap_bounds.bernoulli.data_types.StepFunction
    """
    lo, hi = interval
    jumps = int(rng.integers(0, max_jumps + 1))
    breakpoints = np.unique(rng.uniform(lo, hi, size=jumps))
    breakpoints = breakpoints[(breakpoints > lo) & (breakpoints < hi)]
    return StepFunction(breakpoints, rng.uniform(-1.0, 1.0, size=breakpoints.size + 1), interval)


def bv_contraction(rng, lambdas=BV_LAMBDAS, samples=1000, max_jumps=50):
    """
    Variation contraction by 1 - 2^-ell and sup non-expansion of the block
    operator, additivity of the variation over a split interval, the
    disjointness of the extreme images, and the reference example
    lambda = 2/3, f = 1_{x >= 0}.
    """
    tally = _Tally('bv contraction')
    for lambda_ in lambdas:
        params = IfsParams(lambda_)
        tally.holds(params.extreme_images_disjoint())
        factor = 1.0 - 2.0 ** -params.ell
        for _ in range(samples):
            f = random_step_function(rng, params.attractor, max_jumps)
            image = apply_block_operator(params, f)
            tally.at_most(image.variation(), factor * f.variation())
            tally.at_most(image.sup(), f.sup(), 1e-12)
            if f.breakpoints.size:
                split = f.breakpoints[0] if f.breakpoints.size == 1 else 0.5 * (f.breakpoints[0] + f.breakpoints[1])
                tally.close_to(f.variation_on(params.attractor[0], split)
                               + f.variation_on(split, params.attractor[1]), f.variation())

    params = IfsParams(2.0 / 3.0)
    image = apply_block_operator(params, StepFunction.indicator(0.0, params.attractor))
    tally.holds(image.breakpoints.size == 2)
    if image.breakpoints.size == 2:
        tally.close_to(image.breakpoints, [-0.5, 0.5], 1e-12)
        tally.close_to(image.values, [0.25, 0.5, 0.75], 1e-12)
    return tally.report()


def statistical_validity(seed, replicas=10000, threads=1):
    """
    The 99% Wilson upper limits of the empirical tails never exceed the
    bounds, on a 10-point grid inside each validity window:

    - walk on {0,1}^4, f = rho, dL norm, n = 1000
    - two-state kernel with beta = 0.75, f = (1, -1), n = 10^4
    - lambda = 0.618, f = 1_{x >= 0}, n = 120 2^ell
    """
    tally = _Tally('statistical validity')
    rho = build_observable(ObservableKind.RHO, 4)
    curves = [HypercubeWalk(4).deviation_curve(rho, 1000, replicas, seed, norm_family=NormFamily.DL,
                                               threads=threads)]

    chain = DoeblinChain(FiniteKernel([[0.5, 0.5], [0.25, 0.75]]))
    curves.append(chain.deviation_curve([1.0, -1.0], 10000, replicas, seed, threads=threads))

    params = IfsParams(0.618)
    indicator = StepFunction.indicator(0.0, params.attractor)
    _, curve = BernoulliChain(params).estimate_integral(indicator, 120 * 2 ** params.ell, replicas, seed,
                                                        reference=0.5, threads=threads)
    curves.append(curve)

    for curve in curves:
        for point in curve.points:
            tally.at_most(point.tail.wilson_upper, point.bound.raw, 0.0)
    return tally.report()


def run_suites(seed=0, quick=False, statistical=False, threads=1):
    """
    Run every suite.

    :param int seed: Master seed; suite ``k`` draws from replica stream ``k``.
    :param bool quick: Shrink the sample sizes.
    :param bool statistical: Also run the (slow) statistical validity suite.
    :param int threads: Worker threads of the statistical suite.
    :rtype: list
    """
    scale = 10 if quick else 1
    streams = iter(replica_generator(seed, index) for index in range(16))
    reports = [
        gap_identities(),
        bound_consistency(next(streams), cases=100 // scale),
        planner_round_trip(next(streams), cases=100 // scale),
        hypercube_contraction(next(streams), dimensions=range(2, 7 if quick else 9), samples=1000 // scale),
        petrov(next(streams), samples=10000 // scale),
        hypercube_variance(dimensions=range(2, 7 if quick else 11)),
        banach_algebra(next(streams), samples=200 // scale),
        doeblin_oracle(next(streams), kernels=100 // scale),
        bv_contraction(next(streams), samples=1000 // scale),
    ]
    if statistical:
        reports.append(statistical_validity(seed, replicas=10000 // scale, threads=threads))
    return reports
