# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import logging

import numpy as np

from ..bounds.concentration import DoeblinCorollaryBound
from ..errors import DomainError, ObservableRangeError
from ..simulation import DeviationCurve, default_a_grid, run_replicas, tail_estimate
from .operators import minorization_split, stationary_distribution

log = logging.getLogger(__name__)


class DoeblinChain(object):
    """
    Replica simulation of a chain on a finite state space.

    Per replica the stream is consumed as: one uniform for the start state
    (stationary start only), then n uniforms, one per step. A step from x
    moves to the first state y whose cumulative row probability exceeds the
    uniform.

    :param ~markov_gap_bounds.doeblin.data_types.FiniteKernel kernel: The kernel.
    """

    def __init__(self, kernel):
        #: The kernel.
        self.kernel = kernel

        #: Its stationary law.
        self.stationary = stationary_distribution(kernel)

        #: Its maximal one-step minorization.
        self.split = minorization_split(kernel)

        self._cumulative = np.cumsum(kernel.rows, axis=1)
        self._cumulative[:, -1] = 1.0

    def _check_observable(self, f):
        f = np.asarray(f, dtype=float)
        if f.shape != (self.kernel.size,):
            raise DomainError("Expected {} values, got shape {}.".format(self.kernel.size, f.shape))
        if f.min() < -1.0 or f.max() > 1.0:
            raise ObservableRangeError(float(f.min()), float(f.max()))
        return f

    def replica_means(self, f, n, replicas, seed, start=None, threads=1):
        """
        Empirical means (1/n) sum_{k=1..n} f(X_k), one per replica.

        :param f: Observable, k values in [-1, 1].
        :param int n: Steps per replica.
        :param int replicas: Number of replicas.
        :param int seed: Master seed.
        :param int start: Start state; None to start from the stationary law.
        :param int threads: Worker threads.
        :rtype: numpy.ndarray
        :raise ~markov_gap_bounds.errors.ObservableRangeError: If f leaves [-1, 1].
        """
        f = self._check_observable(f)
        if int(n) != n or n < 1:
            raise DomainError("n must be an integer >= 1, got {!r}.".format(n))
        n = int(n)
        if start is not None and not 0 <= int(start) < self.kernel.size:
            raise DomainError("Start state {!r} outside 0..{}.".format(start, self.kernel.size - 1))
        cumulative = self._cumulative
        start_cumulative = np.cumsum(self.stationary)
        start_cumulative[-1] = 1.0

        def simulate_block(generators):
            if start is None:
                draws = np.array([g.random() for g in generators])
                states = np.searchsorted(start_cumulative, draws, side='right')
            else:
                states = np.full(len(generators), int(start), dtype=np.int64)
            uniforms = np.stack([g.random(n) for g in generators])
            totals = np.zeros(len(generators))
            for t in range(n):
                states = np.count_nonzero(cumulative[states] <= uniforms[:, t, np.newaxis], axis=1)
                totals += f[states]
            return totals / n

        log.debug("Simulating %d replicas of %d steps on %d states", replicas, n, self.kernel.size)
        return run_replicas(simulate_block, replicas, seed, threads)

    def simulate_tail(self, f, n, a, replicas, seed, start=None, threads=1):
        """
        Frequency of |mean_n(f) - pi(f)| >= a over replicas.

        :return: The tail estimate; unpacks as ``p_hat, wilson_upper``.
        :rtype: ~markov_gap_bounds.simulation.TailEstimate
        """
        means = self.replica_means(f, n, replicas, seed, start=start, threads=threads)
        return tail_estimate(means, float(self.stationary.dot(f)), a)

    def deviation_curve(self, f, n, replicas, seed, a_grid=None, start=None, threads=1):
        """
        Empirical tails against the Doeblin chain bound.

        :param a_grid: Deviations; by default 10 points inside (0, beta/2).
        :rtype: ~markov_gap_bounds.simulation.DeviationCurve
        """
        bound = DoeblinCorollaryBound(self.split.beta)
        if a_grid is None:
            a_grid = default_a_grid(bound.window)
        means = self.replica_means(f, n, replicas, seed, start=start, threads=threads)
        return DeviationCurve(means, float(self.stationary.dot(f)), n, a_grid, bound)
