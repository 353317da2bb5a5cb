# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

"""
Exact bounded variation calculus for the ell-block transfer operator

    (L0^ell f)(x) = 2^-ell sum_w f(T_w(x))

on step functions over the attractor. Every T_w is increasing and affine,
so f o T_w is again a step function whose breakpoints are the preimages
T_w^-1(b) of the breakpoints of f that fall inside the attractor.
"""

from __future__ import absolute_import, division, print_function

import logging

import numpy as np

from ..errors import BreakpointOverflowError, DomainError
from .data_types import ATTRACTOR_SLACK, StepFunction
from .response_types import BvNormReport

log = logging.getLogger(__name__)

#: Breakpoints closer than this are merged.
MERGE_TOLERANCE = 1e-12

#: Default maximum number of breakpoints of an operator image.
BREAKPOINT_CAP = 10 ** 6

#: Relative size under which neighbouring piece values count as equal.
VALUE_TOLERANCE = 1e-14


def apply_word(params, word, x):
    """
    T_w(x) = T_w1(T_w2(... T_wk(x))).

    :param ~markov_gap_bounds.bernoulli.data_types.IfsParams params: The system.
    :param word: A '0'/'1' string or bit sequence, first letter applied last.
    :param float x: A point of the attractor.
    :rtype: float
    :raise ~markov_gap_bounds.errors.DomainError: If x is outside the attractor.
    """
    x = float(x)
    if not params.contains(x):
        raise DomainError("x={!r} lies outside the attractor {!r}.".format(x, params.attractor))
    lam = params.lambda_
    for letter in reversed([int(letter) for letter in word]):
        if letter not in (0, 1):
            raise DomainError("A word is made of 0's and 1's, got {!r}.".format(word))
        x = lam * x + (lam if letter else -lam)
    return min(max(x, -params.radius), params.radius)


def bv_norm(f):
    """
    :param ~markov_gap_bounds.bernoulli.data_types.StepFunction f: The function.
    :return: sup, var and norm = sup + var.
    :rtype: ~markov_gap_bounds.bernoulli.response_types.BvNormReport
    """
    return BvNormReport(f.sup(), f.variation())


def merge_breakpoints(points, tolerance=MERGE_TOLERANCE):
    """
    Sort and drop every point closer than ``tolerance`` to its predecessor.

    :rtype: numpy.ndarray
    """
    points = np.sort(np.asarray(points, dtype=float))
    if points.size < 2:
        return points
    return points[np.concatenate(([True], np.diff(points) >= tolerance))]


def _drop_flat_breakpoints(breakpoints, values):
    scale = max(1.0, float(np.abs(values).max()))
    jumps = np.abs(np.diff(values)) > VALUE_TOLERANCE * scale
    return breakpoints[jumps], np.concatenate((values[:1], values[1:][jumps]))


def apply_block_operator(params, f, cap=BREAKPOINT_CAP):
    """
    The exact image 2^-ell sum_w f o T_w of a step function on the attractor.

    Piece values are obtained by evaluating every f o T_w at the midpoint of
    each piece of the merged breakpoint set; breakpoints across which the
    value does not change are dropped.

    :param ~markov_gap_bounds.bernoulli.data_types.IfsParams params: The system.
    :param ~markov_gap_bounds.bernoulli.data_types.StepFunction f: A function on the attractor.
    :param int cap: Maximum number of breakpoints.
    :rtype: ~markov_gap_bounds.bernoulli.data_types.StepFunction
    :raise ~markov_gap_bounds.errors.DomainError: If f is not defined on the attractor.
    :raise ~markov_gap_bounds.errors.BreakpointOverflowError: If the image needs more than ``cap`` breakpoints.
    """
    lo, hi = params.attractor
    if abs(f.interval[0] - lo) > ATTRACTOR_SLACK or abs(f.interval[1] - hi) > ATTRACTOR_SLACK:
        raise DomainError("Step function lives on {!r}, not on the attractor {!r}.".format(
            f.interval, params.attractor))
    if not f.breakpoints.size:
        return StepFunction.constant(f.values[0], params.attractor)
    offsets = params.all_offsets()
    preimages = (f.breakpoints[np.newaxis, :] - offsets[:, np.newaxis]) / params.contraction
    preimages = preimages[(preimages > lo + MERGE_TOLERANCE) & (preimages < hi - MERGE_TOLERANCE)]
    breakpoints = merge_breakpoints(preimages)
    if breakpoints.size > cap:
        raise BreakpointOverflowError(breakpoints.size, cap)

    edges = np.concatenate(([lo], breakpoints, [hi]))
    midpoints = 0.5 * (edges[:-1] + edges[1:])
    values = np.zeros(midpoints.size)
    for offset in offsets:
        values += f(params.contraction * midpoints + offset)
    values /= offsets.size
    breakpoints, values = _drop_flat_breakpoints(breakpoints, values)
    log.debug("Block operator: %d -> %d breakpoints", f.breakpoints.size, breakpoints.size)
    return StepFunction(breakpoints, values, params.attractor)
