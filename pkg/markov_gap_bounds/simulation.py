# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

"""
Replica simulation shared by the chain labs.

Random streams
--------------
Replica ``i`` of a run with master seed ``s`` draws from its own Philox
generator (counter based, 256 bit counter and 128 bit key) keyed by
``numpy.random.SeedSequence(entropy=s, spawn_key=(i,))``. Inside a replica
the step index is the position in that stream, so a replica's trajectory
depends only on ``(s, i)``: results are identical whatever the number of
threads and the order in which replica blocks are executed.
"""

from __future__ import absolute_import, division, print_function

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.stats import norm

from .errors import DomainError

log = logging.getLogger(__name__)

#: Largest accepted master seed (seeds are 64 bit unsigned).
MAX_SEED = 2 ** 64 - 1

#: Confidence level of the one-sided Wilson limits.
WILSON_CONFIDENCE = 0.99

#: Replicas simulated together in one vectorized block.
BLOCK_SIZE = 256


def check_seed(seed):
    """
    Validate a master seed.

    :param int seed: Seed in [0, 2^64 - 1].
    :rtype: int
    :raise ~markov_gap_bounds.errors.DomainError: If the seed is out of range.
    """
    if seed is None or int(seed) != seed or not 0 <= seed <= MAX_SEED:
        raise DomainError("seed must be an integer in [0, 2^64 - 1], got {!r}.".format(seed))
    return int(seed)


def replica_generator(seed, index):
    """
    The private random stream of one replica.

    :param int seed: Master seed.
    :param int index: Replica index, >= 0.
    :rtype: numpy.random.Generator
    """
    sequence = np.random.SeedSequence(entropy=check_seed(seed), spawn_key=(int(index),))
    return np.random.Generator(np.random.Philox(sequence))


def run_replicas(simulate_block, replicas, seed, threads=1, block_size=BLOCK_SIZE):
    """
    Run ``replicas`` independent replicas in blocks and collect their
    results, in replica order.

    :param callable simulate_block:
        Called with a list of generators (one per replica of the block),
        returns an array whose first axis runs over the generators.
    :param int replicas: Number of replicas, >= 1.
    :param int seed: Master seed.
    :param int threads: Maximum number of worker threads.
    :param int block_size: Replicas per block.
    :rtype: numpy.ndarray
    """
    if int(replicas) != replicas or replicas < 1:
        raise DomainError("replicas must be an integer >= 1, got {!r}.".format(replicas))
    seed = check_seed(seed)
    blocks = [range(start, min(start + block_size, replicas)) for start in range(0, int(replicas), block_size)]

    def run(block):
        values = simulate_block([replica_generator(seed, index) for index in block])
        log.debug("Replicas %d..%d done", block.start, block.stop - 1)
        return np.asarray(values, dtype=float)

    if threads is None or threads <= 1 or len(blocks) == 1:
        results = [run(block) for block in blocks]
    else:
        with ThreadPoolExecutor(max_workers=int(threads)) as pool:
            results = list(pool.map(run, blocks))
    return np.concatenate(results)


def wilson_upper(count, total, confidence=WILSON_CONFIDENCE):
    """
    One-sided Wilson upper confidence limit of a binomial proportion.

    :param int count: Number of successes.
    :param int total: Number of trials, >= 1.
    :param float confidence: Confidence level.
    :rtype: float
    """
    z = norm.ppf(confidence)
    p = count / total
    z2 = z * z
    centre = p + z2 / (2.0 * total)
    half_width = z * math.sqrt(p * (1.0 - p) / total + z2 / (4.0 * total * total))
    return min(1.0, (centre + half_width) / (1.0 + z2 / total))


class TailEstimate(object):
    """
    Empirical frequency of |mean_n - reference| >= a over replicas.

    :param int exceedances: Replicas deviating by at least a.
    :param int replicas: Number of replicas.
    """
    def __init__(self, exceedances, replicas):
        #: Replicas deviating by at least a.
        self.exceedances = int(exceedances)

        #: Number of replicas.
        self.replicas = int(replicas)

        #: Empirical tail frequency.
        self.p_hat = self.exceedances / self.replicas

        #: 99% one-sided Wilson upper limit of the tail probability.
        self.wilson_upper = wilson_upper(self.exceedances, self.replicas)

    def __iter__(self):
        return iter((self.p_hat, self.wilson_upper))

    def __repr__(self):
        return 'TailEstimate(p_hat={!r}, wilson_upper={!r})'.format(self.p_hat, self.wilson_upper)


def tail_estimate(means, reference, a):
    """
    :param numpy.ndarray means: Replica means.
    :param float reference: The stationary mean.
    :param float a: Deviation.
    :rtype: ~markov_gap_bounds.simulation.TailEstimate
    """
    deviations = np.abs(np.asarray(means, dtype=float) - reference)
    return TailEstimate(np.count_nonzero(deviations >= a), deviations.size)


def empirical_dynamical_variance(means, n):
    """
    Batch means estimate n Var(mean_n) of the dynamical variance.

    :param numpy.ndarray means: Replica means of n steps each.
    :param int n: Steps per replica.
    :rtype: float
    """
    means = np.asarray(means, dtype=float)
    if means.size < 2:
        return float('nan')
    return float(n * np.var(means, ddof=1))


def default_a_grid(window, points=10):
    """
    ``points`` deviations spread strictly inside (0, window).

    :rtype: numpy.ndarray
    """
    return window * np.arange(1, points + 1) / (points + 1.0)


class DeviationPoint(object):
    """
    One row of a deviation curve.
    """
    def __init__(self, a, tail, bound):
        #: The deviation.
        self.a = float(a)

        #: The empirical tail (:py:class:`TailEstimate`).
        self.tail = tail

        #: The proven bound (:py:class:`~markov_gap_bounds.bounds.response_types.BoundResult`).
        self.bound = bound

    @property
    def bound_holds(self):
        """
        True if the Wilson upper limit does not exceed the bound, or if both
        the bound and the empirical tail vanish.

        :rtype: bool
        """
        if self.bound.raw == 0.0:
            return self.tail.exceedances == 0
        return self.tail.wilson_upper <= self.bound.raw


class DeviationCurve(object):
    """
    Empirical tails next to a proven bound over a grid of deviations.

    :param numpy.ndarray means: Replica means.
    :param float reference: The stationary mean the deviations are measured from.
    :param int n: Steps per replica.
    :param a_grid: Deviations.
    :param ~markov_gap_bounds.bounds.concentration.ConcentrationBound bound: The bound.
    """

    #: CSV header of :py:meth:`rows`.
    COLUMNS = ('a', 'p_hat', 'wilson_upper', 'bound_raw', 'bound_clipped', 'regime')

    def __init__(self, means, reference, n, a_grid, bound):
        means = np.asarray(means, dtype=float)

        #: The stationary mean used as reference.
        self.reference = float(reference)

        #: Steps per replica.
        self.n = int(n)

        #: Number of replicas.
        self.replicas = means.size

        #: Batch means estimate of the dynamical variance.
        self.sigma2_hat = empirical_dynamical_variance(means, n)

        #: The rows (:py:class:`DeviationPoint`).
        self.points = [DeviationPoint(a, tail_estimate(means, reference, a), bound.evaluate(n, a))
                       for a in a_grid]

    @property
    def bound_holds(self):
        """
        True if no Wilson upper limit exceeds its bound.

        :rtype: bool
        """
        return all(point.bound_holds for point in self.points)

    def rows(self):
        """
        :return: Tuples in :py:attr:`COLUMNS` order.
        :rtype: list
        """
        return [(p.a, p.tail.p_hat, p.tail.wilson_upper, p.bound.raw, p.bound.clipped, p.bound.regime.value)
                for p in self.points]
