# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import logging

import numpy as np

from ..bounds.certificates import hypercube_gap
from ..bounds.concentration import TheoremABound, theorem_a_gaussian_window
from ..errors import DomainError
from ..simulation import DeviationCurve, default_a_grid, run_replicas, tail_estimate
from .data_types import MAX_SIMULATION_SLOTS, Vertex, check_slots
from .operators import preferred_norm, seminorms

log = logging.getLogger(__name__)


def chain_step(vertex, rng):
    """
    One step of the lazy walk: a uniformly chosen slot is replaced by a
    fair coin toss.

    :param ~markov_gap_bounds.hypercube.data_types.Vertex vertex: Current state.
    :param numpy.random.Generator rng: Random stream.
    :return: The next state, equal to ``vertex`` with probability 1/2 and to
             each neighbor with probability 1/(2N).
    :rtype: ~markov_gap_bounds.hypercube.data_types.Vertex
    """
    slot = int(rng.integers(vertex.n_slots))
    bit = int(rng.integers(2))
    return vertex.with_slot(slot + 1, bit)


class HypercubeWalk(object):
    """
    Replica simulation of the lazy random walk on {0,1}^N.

    Per replica the stream is consumed as: the start word (uniform start
    only), then n slot indices, then n coin tosses.

    :param int n_slots: The dimension N.
    """

    def __init__(self, n_slots):
        #: The dimension N.
        self.n_slots = check_slots(n_slots, MAX_SIMULATION_SLOTS)

    def _start_word(self, start):
        if start is None:
            return None
        if isinstance(start, Vertex):
            if start.n_slots != self.n_slots:
                raise DomainError("Start vertex has {} slots, walk has {}.".format(start.n_slots, self.n_slots))
            return start.bits
        start = int(start)
        if not 0 <= start < (1 << self.n_slots):
            raise DomainError("Start word {!r} outside {{0,1}}^{}.".format(start, self.n_slots))
        return start

    def replica_means(self, f, n, replicas, seed, start=None, threads=1):
        """
        Empirical means (1/n) sum_{k=1..n} f(X_k), one per replica.

        :param ~markov_gap_bounds.hypercube.data_types.DenseObservable f: The observable.
        :param int n: Steps per replica.
        :param int replicas: Number of replicas.
        :param int seed: Master seed.
        :param start: Start vertex (:py:class:`Vertex` or word); None for the uniform law.
        :param int threads: Worker threads.
        :rtype: numpy.ndarray
        """
        if f.n_slots != self.n_slots:
            raise DomainError("Observable has {} slots, walk has {}.".format(f.n_slots, self.n_slots))
        if int(n) != n or n < 1:
            raise DomainError("n must be an integer >= 1, got {!r}.".format(n))
        n = int(n)
        table = f.values
        start_word = self._start_word(start)

        def simulate_block(generators):
            if start_word is None:
                states = np.array([g.integers(0, 1 << self.n_slots) for g in generators], dtype=np.int64)
            else:
                states = np.full(len(generators), start_word, dtype=np.int64)
            slots = np.stack([g.integers(0, self.n_slots, size=n) for g in generators])
            bits = np.stack([g.integers(0, 2, size=n) for g in generators])
            totals = np.zeros(len(generators))
            for t in range(n):
                shift = slots[:, t]
                states = (states & ~(np.int64(1) << shift)) | (bits[:, t] << shift)
                totals += table[states]
            return totals / n

        log.debug("Simulating %d replicas of %d steps on {0,1}^%d", replicas, n, self.n_slots)
        return run_replicas(simulate_block, replicas, seed, threads)

    def empirical_tail_probability(self, f, n, a, replicas, seed, start=None, threads=1):
        """
        Frequency of |mean_n(f) - mu0(f)| >= a over replicas, mu0 uniform.

        :return: The tail estimate; unpacks as ``p_hat, wilson_upper``.
        :rtype: ~markov_gap_bounds.simulation.TailEstimate
        """
        means = self.replica_means(f, n, replicas, seed, start=start, threads=threads)
        return tail_estimate(means, f.mean(), a)

    def deviation_curve(self, f, n, replicas, seed, a_grid=None, norm_family=None, start=None, threads=1):
        """
        Empirical tails against the two-regime bound.

        :param norm_family:
            The norm certifying the gap; by default the one maximizing
            delta0/|f|^2.
        :param a_grid:
            Deviations; by default 10 points inside the gaussian window.
        :rtype: ~markov_gap_bounds.simulation.DeviationCurve
        """
        report = seminorms(f)
        if norm_family is None:
            norm_family, cert, obs = preferred_norm(report)
        else:
            cert = hypercube_gap(self.n_slots, norm_family)
            obs = report.observable_spec(norm_family)
        bound = TheoremABound(cert, obs)
        if a_grid is None:
            a_grid = default_a_grid(theorem_a_gaussian_window(cert, obs))
        means = self.replica_means(f, n, replicas, seed, start=start, threads=threads)
        return DeviationCurve(means, f.mean(), n, a_grid, bound)
