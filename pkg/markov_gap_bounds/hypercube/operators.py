# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

"""
Exact operators on functions over the hypercube {0,1}^N.

The averaging operator of the lazy walk is

    (L0 f)(x) = f(x)/2 + 1/(2N) sum_i f(x with slot i flipped).

All table functions work along the last axis, so a stack of observables
(shape ``(..., 2^N)``) is processed in one call.
"""

from __future__ import absolute_import, division, print_function

import logging

import numpy as np

from ..bounds.certificates import hypercube_gap
from ..bounds.data_types import NormFamily
from ..errors import DomainError, SolverError
from .data_types import DenseObservable, ObservableKind, check_slots
from .response_types import SeminormReport

log = logging.getLogger(__name__)

#: Stopping threshold (sup-norm of the residual) of the variance solver.
VARIANCE_TOLERANCE = 1e-12


def vertex_indices(n_slots):
    """
    :return: All vertex words 0 .. 2^N - 1.
    :rtype: numpy.ndarray
    """
    return np.arange(1 << check_slots(n_slots), dtype=np.int64)


def popcount(words, n_slots):
    """
    :return: Number of 1's of each word.
    :rtype: numpy.ndarray
    """
    words = np.asarray(words, dtype=np.int64)
    counts = np.zeros(words.shape, dtype=np.int64)
    for i in range(n_slots):
        counts += (words >> i) & 1
    return counts


def average_table(table, n_slots):
    """
    Apply L0 to tables along the last axis.

    :param numpy.ndarray table: Values, shape (..., 2^N).
    :param int n_slots: The dimension N.
    :rtype: numpy.ndarray
    """
    table = np.asarray(table, dtype=float)
    index = vertex_indices(n_slots)
    flipped = np.zeros_like(table)
    for i in range(n_slots):
        flipped += table[..., index ^ (1 << i)]
    return 0.5 * table + flipped / (2.0 * n_slots)


def seminorm_tables(table, n_slots):
    """
    Uniform norm, Lipschitz constant, W and S of tables along the last axis.

    :param numpy.ndarray table: Values, shape (..., 2^N).
    :param int n_slots: The dimension N.
    :return: sup, lip, w, s arrays of shape (...)
    :rtype: tuple
    """
    table = np.asarray(table, dtype=float)
    index = vertex_indices(n_slots)
    lip = np.zeros(table.shape[:-1])
    local_variation = np.zeros_like(table)
    for i in range(n_slots):
        difference = np.abs(table[..., index ^ (1 << i)] - table)
        lip = np.maximum(lip, difference.max(axis=-1))
        local_variation += difference
    sup = np.abs(table).max(axis=-1)
    spread = table.max(axis=-1) - table.min(axis=-1)
    return sup, lip, local_variation.max(axis=-1), spread


def norm_tables(table, n_slots, norm_family):
    """
    One of the three norms of tables along the last axis.

    :rtype: numpy.ndarray
    """
    sup, lip, w, _ = seminorm_tables(table, n_slots)
    norm_family = NormFamily(norm_family)
    if norm_family is NormFamily.L:
        return sup + lip
    if norm_family is NormFamily.DL:
        return sup + n_slots * lip
    return sup + w


def first_slot_subcube(n_slots):
    """
    Words of the subcube [0] = {x : slot 1 of x is 0}.

    :rtype: numpy.ndarray
    """
    index = vertex_indices(n_slots)
    return index[(index & 1) == 0]


def subcube(n_slots, fixed):
    """
    Words of the subcube with some slots fixed.

    :param int n_slots: The dimension N.
    :param dict fixed: Slot (1-based) to value (0 or 1).
    :rtype: numpy.ndarray
    """
    index = vertex_indices(n_slots)
    keep = np.ones(index.shape, dtype=bool)
    for slot, value in fixed.items():
        if not 1 <= slot <= n_slots:
            raise DomainError("Slot {!r} outside 1..{}.".format(slot, n_slots))
        keep &= ((index >> (slot - 1)) & 1) == int(value)
    return index[keep]


def build_observable(kind, n_slots, subset=None, table=None):
    """
    Tabulate an observable on {0,1}^N.

    :param ~markov_gap_bounds.hypercube.data_types.ObservableKind kind:
        What to build.
    :param int n_slots: The dimension N.
    :param subset:
        For :py:attr:`ObservableKind.INDICATOR`: the vertex set, as words or
        :py:class:`Vertex` objects.
    :param table:
        For :py:attr:`ObservableKind.CUSTOM`: the 2^N values.
    :rtype: ~markov_gap_bounds.hypercube.data_types.DenseObservable
    :raise ~markov_gap_bounds.errors.TableSizeError: If N is above the oracle range.
    """
    kind = ObservableKind(kind)
    n_slots = check_slots(n_slots)
    index = vertex_indices(n_slots)
    if kind is ObservableKind.RHO:
        values = popcount(index, n_slots) / float(n_slots)
    elif kind is ObservableKind.PARITY:
        values = 1.0 - 2.0 * (popcount(index, n_slots) % 2)
    elif kind is ObservableKind.INDICATOR:
        if subset is None:
            raise DomainError("An indicator needs a vertex set.")
        members = np.array([int(v) for v in subset], dtype=np.int64)
        if members.size and (members.min() < 0 or members.max() >= index.size):
            raise DomainError("Vertex set contains words outside {0,1}^N.")
        values = np.zeros(index.size)
        values[members] = 1.0
    else:
        if table is None:
            raise DomainError("A custom observable needs a table.")
        values = table
    return DenseObservable(n_slots, values)


def seminorms(f):
    """
    Seminorms and norms of an observable.

    The Lipschitz constant for the Hamming (graph) metric is the largest
    difference across an edge.

    :param ~markov_gap_bounds.hypercube.data_types.DenseObservable f: The observable.
    :rtype: ~markov_gap_bounds.hypercube.response_types.SeminormReport
    """
    sup, lip, w, s = seminorm_tables(f.values, f.n_slots)
    return SeminormReport(f.n_slots, sup, lip, w, s)


def apply_averaging(f):
    """
    The averaging operator L0 of the lazy walk.

    :param ~markov_gap_bounds.hypercube.data_types.DenseObservable f: The observable.
    :rtype: ~markov_gap_bounds.hypercube.data_types.DenseObservable
    """
    return DenseObservable(f.n_slots, average_table(f.values, f.n_slots))


def dynamical_variance_exact(f, tolerance=VARIANCE_TOLERANCE, max_iterations=100000):
    """
    The dynamical variance
    sigma^2 = mu0(phi_c^2) + 2 sum_{k >= 1} mu0(phi_c L0^k phi_c), with
    phi_c = f - mu0(f) and mu0 uniform.

    The correlation sum is g = sum_{k >= 1} L0^k phi_c, the solution of
    (I - L0) g = L0 phi_c among centered functions. It is built from the
    Neumann iteration g <- L0 phi_c + L0 g, re-centered at every step,
    until the sup-norm of the update is below ``tolerance``.

    :param ~markov_gap_bounds.hypercube.data_types.DenseObservable f: The observable.
    :param float tolerance: Residual threshold.
    :param int max_iterations: Iteration cap.
    :rtype: float
    :raise ~markov_gap_bounds.errors.SolverError: If the cap is reached.
    """
    n_slots = f.n_slots
    centered = f.values - f.values.mean()
    source = average_table(centered, n_slots)
    correlation = source - source.mean()
    residual = float(np.max(np.abs(correlation))) if correlation.size else 0.0
    iterations = 0
    while residual >= tolerance:
        if iterations >= max_iterations:
            raise SolverError(iterations, residual)
        update = source + average_table(correlation, n_slots)
        update -= update.mean()
        residual = float(np.max(np.abs(update - correlation)))
        correlation = update
        iterations += 1
    log.debug("Variance solver converged after %d iterations (residual %r)", iterations, residual)
    return float(np.mean(centered ** 2) + 2.0 * np.mean(centered * correlation))


def scrambled_variance(p):
    """
    Dynamical variance 1/4 + (1 - 2p)/(4p) of the indicator of a half-size
    set whose value flips with probability p per step (p = 1/(2N) for the
    subcube [0]).

    :param float p: Per-step flip probability, in (0, 1/2].
    :rtype: float
    :raise ~markov_gap_bounds.errors.DomainError: If p is outside (0, 1/2].
    """
    p = float(p)
    if not 0.0 < p <= 0.5:
        raise DomainError("p must lie in (0, 1/2], got {!r}.".format(p))
    return 0.25 + (1.0 - 2.0 * p) / (4.0 * p)


def preferred_norm(report):
    """
    The norm maximizing delta0 / |phi|^2, which governs the gaussian branch
    of the two-regime bound.

    :param ~markov_gap_bounds.hypercube.response_types.SeminormReport report:
        Seminorms of the observable.
    :return:
        - norm (:py:class:`~markov_gap_bounds.bounds.data_types.NormFamily`)
        - certificate (:py:class:`~markov_gap_bounds.bounds.data_types.GapCertificate`)
        - observable (:py:class:`~markov_gap_bounds.bounds.data_types.ObservableSpec`)
    :rtype: tuple
    """
    best = None
    for norm_family in NormFamily:
        cert = hypercube_gap(report.n_slots, norm_family)
        score = cert.delta0 / report.norm(norm_family) ** 2
        if best is None or score > best[0]:
            best = (score, norm_family, cert)
    _, norm_family, cert = best
    return norm_family, cert, report.observable_spec(norm_family)


def spike(n_slots, vertex, height=1.0):
    """
    :return: An observable vanishing everywhere but at one vertex.
    :rtype: ~markov_gap_bounds.hypercube.data_types.DenseObservable
    """
    values = np.zeros(1 << check_slots(n_slots))
    values[int(vertex)] = height
    return DenseObservable(n_slots, values)


def linear_functional(n_slots, weights):
    """
    :param weights: One weight per slot.
    :return: x -> sum_i weights[i] x_i.
    :rtype: ~markov_gap_bounds.hypercube.data_types.DenseObservable
    """
    weights = np.asarray(weights, dtype=float)
    if weights.shape != (n_slots,):
        raise DomainError("Expected {} weights.".format(n_slots))
    index = vertex_indices(n_slots)
    values = np.zeros(index.size)
    for i in range(n_slots):
        values += weights[i] * ((index >> i) & 1)
    return DenseObservable(n_slots, values)


