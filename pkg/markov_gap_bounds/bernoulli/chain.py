# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

"""
Simulation of the Bernoulli convolution chain X_{k+1} = T_w(X_k), w uniform.

A path of the ell-block chain is the linear recurrence
X_{k+1} = lambda^ell X_k + c_k with i.i.d. offsets c_k, evaluated with
:py:func:`scipy.signal.lfilter`. Per replica the stream is consumed as
uniform words in [0, 2^ell), drawn in chunks of :py:data:`CHUNK_STEPS`.
"""

from __future__ import absolute_import, division, print_function

import logging

import numpy as np
from scipy.signal import lfilter

from ..bounds.concentration import BvCorollaryBound, ZeroObservableBound
from ..errors import DomainError
from ..simulation import DeviationCurve, default_a_grid, run_replicas
from .data_types import ATTRACTOR_SLACK, IfsParams
from .operators import apply_word, bv_norm
from .response_types import Histogram

log = logging.getLogger(__name__)

#: Steps drawn and filtered at once.
CHUNK_STEPS = 65536

#: Defaults of :py:func:`histogram`: 500 bins, 30 runs of 10^6 points from X0 = 0.
HISTOGRAM_BINS = 500
HISTOGRAM_RUNS = 30
HISTOGRAM_POINTS = 10 ** 6


def block_step(params, x, rng):
    """
    One step of the ell-block chain: a uniform word w of length ell, then T_w(x).

    :param ~markov_gap_bounds.bernoulli.data_types.IfsParams params: The system.
    :param float x: Current point of the attractor.
    :param numpy.random.Generator rng: Random stream.
    :rtype: float
    """
    return apply_word(params, params.word(rng.integers(0, 1 << params.ell)), x)


def _check_steps(n):
    if int(n) != n or n < 1:
        raise DomainError("n must be an integer >= 1, got {!r}.".format(n))
    return int(n)


class BernoulliChain(object):
    """
    Replica simulation of the ell-block chain.

    :param ~markov_gap_bounds.bernoulli.data_types.IfsParams params: The system.
    """

    def __init__(self, params):
        #: The system.
        self.params = params

    def _check_start(self, start):
        start = float(start)
        if not self.params.contains(start):
            raise DomainError("Start {!r} lies outside the attractor {!r}.".format(start, self.params.attractor))
        return start

    def _chunks(self, generators, n, start):
        """
        Yield the path X_1 .. X_n of every generator, CHUNK_STEPS columns at a time.
        """
        params = self.params
        radius = params.radius
        state = np.full((len(generators), 1), start)
        for first in range(0, n, CHUNK_STEPS):
            steps = min(CHUNK_STEPS, n - first)
            words = np.stack([g.integers(0, 1 << params.ell, size=steps) for g in generators])
            offsets = params.offsets_of(words)
            path, _ = lfilter([1.0], [1.0, -params.contraction], offsets, axis=1,
                              zi=params.contraction * state)
            np.clip(path, -radius, radius, out=path)
            state = path[:, -1:]
            yield path

    def paths(self, n, replicas, seed, start=0.0, threads=1):
        """
        :return: The points X_1 .. X_n of every replica, shape (replicas, n).
        :rtype: numpy.ndarray
        """
        n = _check_steps(n)
        start = self._check_start(start)
        return run_replicas(lambda generators: np.hstack(list(self._chunks(generators, n, start))),
                            replicas, seed, threads)

    def replica_means(self, f, n, replicas, seed, start=0.0, threads=1):
        """
        Empirical means (1/n) sum_{k=1..n} f(X_k), one per replica.

        :param ~markov_gap_bounds.bernoulli.data_types.StepFunction f: The observable.
        :rtype: numpy.ndarray
        """
        n = _check_steps(n)
        start = self._check_start(start)

        def simulate_block(generators):
            totals = np.zeros(len(generators))
            for path in self._chunks(generators, n, start):
                totals += f(path).sum(axis=1)
            return totals / n

        log.debug("Simulating %d replicas of %d blocks, lambda=%r, ell=%d",
                  replicas, n, self.params.lambda_, self.params.ell)
        return run_replicas(simulate_block, replicas, seed, threads)

    def estimate_integral(self, f, n, replicas, seed, start=0.0, a_grid=None, reference=None, threads=1):
        """
        Estimate the integral of f against the Bernoulli convolution.

        An observable that vanishes identically is compared with its exact
        tail, which is 0 for every positive deviation, on the window of a unit
        BV norm.

        :param ~markov_gap_bounds.bernoulli.data_types.StepFunction f: The observable.
        :param int n: Blocks per replica.
        :param int replicas: Number of replicas.
        :param int seed: Master seed.
        :param float start: Start point X0.
        :param a_grid: Deviations; by default 10 points inside the bound's window.
        :param float reference:
            Value the deviations are measured from; by default the estimate.
        :param int threads: Worker threads.
        :return:
            - estimate (float) - median of the replica means
            - curve (:py:class:`~markov_gap_bounds.simulation.DeviationCurve`) -
              empirical tails against the bounded variation bound
        :rtype: tuple
        """
        norm = bv_norm(f).norm
        if norm > 0.0:
            bound = BvCorollaryBound(self.params.ell, norm)
        else:
            log.info("Observable vanishes on the attractor, its tail is 0 for every a > 0")
            bound = ZeroObservableBound(BvCorollaryBound(self.params.ell, 1.0).window)
        if a_grid is None:
            a_grid = default_a_grid(bound.window)
        means = self.replica_means(f, n, replicas, seed, start=start, threads=threads)
        estimate = float(np.median(means))
        curve = DeviationCurve(means, estimate if reference is None else reference, n, a_grid, bound)
        return estimate, curve


def histogram(params, seed, n_points=HISTOGRAM_POINTS, bins=HISTOGRAM_BINS, runs=HISTOGRAM_RUNS,
              start=0.0, threads=1):
    """
    Binned empirical law of the one-step chain X_{k+1} = lambda X_k +- lambda.

    Run ``r`` uses the stream of replica ``r``; the mass of a bin is its share
    of X_1 .. X_n_points, averaged over runs.

    :param params:
        The system, or a bare contraction ratio in (0, 1); a bare ratio needs
        no certified block length, so it may lie arbitrarily close to 1.
    :type params: ~markov_gap_bounds.bernoulli.data_types.IfsParams or float
    :param int seed: Master seed.
    :param int n_points: Points per run.
    :param int bins: Equal-width bins over the attractor.
    :param int runs: Independent runs.
    :param float start: Start point X0.
    :param int threads: Worker threads.
    :rtype: ~markov_gap_bounds.bernoulli.response_types.Histogram
    """
    if int(bins) != bins or bins < 1:
        raise DomainError("bins must be an integer >= 1, got {!r}.".format(bins))
    n_points = _check_steps(n_points)
    if isinstance(params, IfsParams):
        lam, radius = params.lambda_, params.radius
    else:
        lam = float(params)
        if not 0.0 < lam < 1.0:
            raise DomainError("lambda must lie in (0, 1), got {!r}.".format(lam))
        radius = lam / (1.0 - lam)
    start = float(start)
    if not -radius - ATTRACTOR_SLACK <= start <= radius + ATTRACTOR_SLACK:
        raise DomainError("Start {!r} lies outside the attractor [{!r}, {!r}].".format(start, -radius, radius))
    edges = np.linspace(-radius, radius, int(bins) + 1)

    def simulate_run(generators):
        counts = []
        for generator in generators:
            total = np.zeros(int(bins))
            state = np.array([lam * start])
            for first in range(0, n_points, CHUNK_STEPS):
                steps = min(CHUNK_STEPS, n_points - first)
                offsets = lam * (2.0 * generator.integers(0, 2, size=steps) - 1.0)
                points, state = lfilter([1.0], [1.0, -lam], offsets, zi=state)
                total += np.histogram(np.clip(points, -radius, radius), bins=edges)[0]
            counts.append(total / n_points)
        return np.array(counts)

    log.debug("Histogram of lambda=%r: %d runs of %d points in %d bins", lam, runs, n_points, bins)
    mass = run_replicas(simulate_run, runs, seed, threads, block_size=1).mean(axis=0)
    return Histogram(edges, mass, runs, n_points)

