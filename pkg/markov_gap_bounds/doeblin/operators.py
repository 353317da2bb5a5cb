# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

"""
Exact computations for chains on a finite state space.

Distances between probability vectors use the normalization
d_TV(mu, nu) = sup_{S(f) = 1} |mu(f) - nu(f)| = (1/2) sum |mu - nu|.
"""

from __future__ import absolute_import, division, print_function

import logging

import numpy as np

from ..bounds.certificates import doeblin_gap
from ..errors import DomainError, NoMinorizationError, NotContractingError, SolverError
from .response_types import MinorizationSplit

log = logging.getLogger(__name__)

#: Target accuracy (sup-norm) of the stationary distribution.
STATIONARY_TOLERANCE = 1e-12


def minorization_split(kernel):
    """
    The maximal one-step minorization m_x >= beta omega, built from the
    column minima of the kernel.

    :param ~markov_gap_bounds.doeblin.data_types.FiniteKernel kernel: The kernel.
    :rtype: ~markov_gap_bounds.doeblin.response_types.MinorizationSplit
    :raise ~markov_gap_bounds.errors.NoMinorizationError: If all column minima are 0.
    """
    column_minima = kernel.rows.min(axis=0)
    mass = float(column_minima.sum())
    if mass <= 0.0:
        raise NoMinorizationError(kernel.size)
    # rows may sum to 1 + rounding, beta stays in (0, 1]
    beta = min(mass, 1.0)
    omega = column_minima / mass
    return MinorizationSplit(beta, omega, kernel.rows - beta * omega[np.newaxis, :])


def certificate_for_kernel(kernel):
    """
    Gap certificate of a kernel from its maximal one-step minorization.

    :param ~markov_gap_bounds.doeblin.data_types.FiniteKernel kernel: The kernel.
    :rtype: ~markov_gap_bounds.bounds.data_types.GapCertificate
    :raise ~markov_gap_bounds.errors.NoMinorizationError: If the kernel has no minorization.
    """
    return doeblin_gap(minorization_split(kernel).beta)


def tv_distance(mu, nu):
    """
    :param mu: Probability vector.
    :param nu: Probability vector of the same length.
    :return: (1/2) sum |mu - nu|
    :rtype: float
    :raise ~markov_gap_bounds.errors.DomainError: On a length mismatch.
    """
    mu = np.asarray(mu, dtype=float)
    nu = np.asarray(nu, dtype=float)
    if mu.shape != nu.shape or mu.ndim != 1:
        raise DomainError("Cannot compare vectors of shapes {} and {}.".format(mu.shape, nu.shape))
    return 0.5 * float(np.abs(mu - nu).sum())


def dobrushin_coefficient(kernel):
    """
    Largest total variation distance between two rows of the kernel, the
    exact contraction factor of L0 on the spread S(f) = max f - min f.

    :param ~markov_gap_bounds.doeblin.data_types.FiniteKernel kernel: The kernel.
    :rtype: float
    """
    rows = kernel.rows
    coefficient = 0.0
    for x in range(kernel.size):
        coefficient = max(coefficient, 0.5 * float(np.abs(rows - rows[x]).sum(axis=1).max()))
    return coefficient


def stationary_distribution(kernel, tolerance=STATIONARY_TOLERANCE, max_iterations=1000000):
    """
    The unique stationary law pi = pi P, by power iteration from the
    uniform law.

    With Dobrushin coefficient c < 1 the iterates satisfy
    d_TV(pi_t, pi) <= c/(1 - c) d_TV(pi_t, pi_{t-1}); the iteration stops
    once this bound is below ``tolerance / 2``, which caps the sup-norm error
    at ``tolerance``.

    :param ~markov_gap_bounds.doeblin.data_types.FiniteKernel kernel: The kernel.
    :param float tolerance: Required sup-norm accuracy.
    :param int max_iterations: Iteration cap.
    :rtype: numpy.ndarray
    :raise ~markov_gap_bounds.errors.NotContractingError: If the Dobrushin coefficient is 1.
    :raise ~markov_gap_bounds.errors.SolverError: If the cap is reached.
    """
    coefficient = dobrushin_coefficient(kernel)
    if coefficient >= 1.0:
        raise NotContractingError(coefficient)
    factor = coefficient / (1.0 - coefficient)
    pi = np.full(kernel.size, 1.0 / kernel.size)
    for iteration in range(1, max_iterations + 1):
        update = pi.dot(kernel.rows)
        update /= update.sum()
        error = factor * tv_distance(update, pi)
        pi = update
        if error < 0.5 * tolerance:
            log.debug("Stationary law after %d iterations (error bound %r)", iteration, error)
            return pi
    raise SolverError(max_iterations, error)


def s_seminorm(f):
    """
    :return: The spread S(f) = max f - min f.
    :rtype: float
    """
    f = np.asarray(f, dtype=float)
    return float(f.max() - f.min())


def s_norm(f):
    """
    :return: |f|_S = |f|_inf + S(f), the norm of the Doeblin certificate.
    :rtype: float
    """
    f = np.asarray(f, dtype=float)
    return float(np.abs(f).max()) + s_seminorm(f)


def dynamical_variance(kernel, f):
    """
    Exact dynamical variance of an observable under the stationary chain.

    With phi_c = f - pi(f) the correlation sum g = sum_{k >= 1} P^k phi_c
    is Z phi_c - phi_c, Z = (I - P + 1 pi)^-1 the fundamental matrix.

    :param ~markov_gap_bounds.doeblin.data_types.FiniteKernel kernel: The kernel.
    :param f: k values.
    :rtype: float
    """
    f = np.asarray(f, dtype=float)
    if f.shape != (kernel.size,):
        raise DomainError("Expected {} values, got shape {}.".format(kernel.size, f.shape))
    pi = stationary_distribution(kernel)
    centered = f - pi.dot(f)
    fundamental = np.eye(kernel.size) - kernel.rows + np.outer(np.ones(kernel.size), pi)
    correlation = np.linalg.solve(fundamental, centered) - centered
    return float(pi.dot(centered ** 2) + 2.0 * pi.dot(centered * correlation))
