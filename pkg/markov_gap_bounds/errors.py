# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function


class GapBoundsError(Exception):
    """
    Base class for all errors raised by this package.
    """
    def __init__(self, message):
        super(GapBoundsError, self).__init__(message)


class DomainError(GapBoundsError, ValueError):
    """
    An argument lies outside the mathematical domain of an operation,
    e.g. a gap outside (0, 1] or a negative deviation.
    """
    def __init__(self, message):
        super(DomainError, self).__init__(message)


class TableSizeError(DomainError):
    """
    A dense table over the hypercube would be too large.

    :param int n_slots:
        The requested number of slots.
    :param int limit:
        The largest supported number of slots.
    """
    def __init__(self, n_slots, limit):
        super(TableSizeError, self).__init__(
            "Dense tables need n_slots <= {}, got {}.".format(limit, n_slots))
        self.n_slots = n_slots
        self.limit = limit


class ObservableRangeError(DomainError):
    """
    An observable leaves the range [-1, 1] required by a corollary.

    :param float low:
        Smallest observable value.
    :param float high:
        Largest observable value.
    """
    def __init__(self, low, high):
        super(ObservableRangeError, self).__init__(
            "Observable must take values in [-1, 1], got [{!r}, {!r}].".format(low, high))
        self.low = low
        self.high = high


class InfeasibleError(GapBoundsError):
    """
    No sample size satisfies the requested planning target.
    """
    def __init__(self, message):
        super(InfeasibleError, self).__init__(message)


class NoMinorizationError(GapBoundsError):
    """
    A finite kernel has no one-step Doeblin minorization: every column
    minimum is zero.

    :param int size:
        Number of states of the kernel.
    """
    def __init__(self, size):
        super(NoMinorizationError, self).__init__(
            "Kernel with {} states admits no one-step minorization "
            "(all column minima are 0).".format(size))
        self.size = size


class NotContractingError(GapBoundsError):
    """
    The Dobrushin coefficient of a kernel equals 1, so uniqueness of the
    stationary law is not certified.

    :param float coefficient:
        The computed Dobrushin coefficient.
    """
    def __init__(self, coefficient):
        super(NotContractingError, self).__init__(
            "Kernel is not contracting in total variation "
            "(Dobrushin coefficient {!r}).".format(coefficient))
        self.coefficient = coefficient


class SolverError(GapBoundsError):
    """
    An iterative solver stopped before reaching its tolerance.

    :param int iterations:
        Number of iterations performed.
    :param float residual:
        Residual (sup-norm) at the last iteration.
    """
    def __init__(self, iterations, residual):
        super(SolverError, self).__init__(
            "Solver did not converge after {} iterations "
            "(residual {!r}).".format(iterations, residual))
        self.iterations = iterations
        self.residual = residual


class BreakpointOverflowError(GapBoundsError):
    """
    A step function produced by the transfer operator would exceed the
    configured number of breakpoints.

    :param int count:
        Number of breakpoints that would have been produced.
    :param int cap:
        Configured maximum.
    """
    def __init__(self, count, cap):
        super(BreakpointOverflowError, self).__init__(
            "Step function would have {} breakpoints, cap is {}.".format(count, cap))
        self.count = count
        self.cap = cap
