# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import numpy as np

from ..bounds.certificates import min_ell
from ..errors import DomainError

#: Slack allowed when checking that a point lies in the attractor.
ATTRACTOR_SLACK = 1e-12

#: Largest block length for which all 2^ell words are enumerated.
MAX_ENUMERATED_ELL = 20


class IfsParams(object):
    """
    The iterated function system T0(x) = lambda x - lambda,
    T1(x) = lambda x + lambda, observed in blocks of ell steps.

    A word w of length ell applies T_w = T_w1 o T_w2 o ... o T_w_ell, so
    T_w(x) = lambda^ell x + sum_j s(w_j) lambda^j with s(0) = -1 and
    s(1) = +1. As an integer, the word's first letter is its most
    significant bit.

    :param float lambda_: The contraction ratio, in (0, 1).
    :param int ell: The block length; by default the smallest with lambda^ell < 1/2.
    :raise ~markov_gap_bounds.errors.DomainError: If lambda^ell >= 1/2.
    """
    def __init__(self, lambda_, ell=None):
        default_ell = min_ell(lambda_)
        if ell is None:
            ell = default_ell
        elif int(ell) != ell or ell < default_ell:
            raise DomainError("lambda={!r} needs ell >= {}, got {!r}.".format(lambda_, default_ell, ell))

        #: The contraction ratio.
        self.lambda_ = float(lambda_)

        #: The block length.
        self.ell = int(ell)

        #: lambda^ell, the contraction of every block map.
        self.contraction = self.lambda_ ** self.ell

        #: Half-length lambda/(1 - lambda) of the attractor.
        self.radius = self.lambda_ / (1.0 - self.lambda_)

        #: The attractor [-radius, radius]; its ends are the fixed points of T0 and T1.
        self.attractor = (-self.radius, self.radius)

        self._powers = self.lambda_ ** np.arange(1, self.ell + 1)

    def word(self, index):
        """
        :param int index: Word as an integer in [0, 2^ell).
        :return: The word as a '0'/'1' string, first letter first.
        :rtype: str
        """
        return format(int(index), '0{}b'.format(self.ell))

    def offset(self, word):
        """
        :param word: A '0'/'1' string or a sequence of bits, of any length.
        :return: sum_j s(w_j) lambda^j, the image of 0 under T_w.
        :rtype: float
        """
        letters = [int(letter) for letter in word]
        if any(letter not in (0, 1) for letter in letters):
            raise DomainError("A word is made of 0's and 1's, got {!r}.".format(word))
        return float(sum((2 * letter - 1) * self.lambda_ ** (j + 1) for j, letter in enumerate(letters)))

    def offsets_of(self, indices):
        """
        Vectorized :py:meth:`offset` for ell-letter words given as integers.

        :param numpy.ndarray indices: Words in [0, 2^ell).
        :rtype: numpy.ndarray
        """
        indices = np.asarray(indices, dtype=np.int64)
        total = np.zeros(indices.shape)
        for j in range(self.ell):
            letter = (indices >> (self.ell - 1 - j)) & 1
            total += (2.0 * letter - 1.0) * self._powers[j]
        return total

    def all_offsets(self):
        """
        :return: The offsets of all 2^ell words, in integer order.
        :rtype: numpy.ndarray
        :raise ~markov_gap_bounds.errors.DomainError: If ell > :py:data:`MAX_ENUMERATED_ELL`.
        """
        if self.ell > MAX_ENUMERATED_ELL:
            raise DomainError("Enumerating 2^{} words is not supported.".format(self.ell))
        return self.offsets_of(np.arange(1 << self.ell))

    def contains(self, x, slack=ATTRACTOR_SLACK):
        """
        :rtype: bool
        """
        return -self.radius - slack <= x <= self.radius + slack

    def extreme_images_disjoint(self):
        """
        Check on the endpoints that T_{0...0}(I) and T_{1...1}(I) do not meet:
        the right end of the first image lies left of the left end of the
        second, which holds exactly when lambda^ell < 1/2.

        :rtype: bool
        """
        lowest = self.offset('0' * self.ell)
        right_of_lowest = self.contraction * self.radius + lowest
        left_of_highest = -self.contraction * self.radius - lowest
        return right_of_lowest < left_of_highest

    def to_dict(self):
        """
        :rtype: dict
        """
        return {'lambda': self.lambda_, 'ell': self.ell, 'attractor': list(self.attractor)}

    def __repr__(self):
        return 'IfsParams(lambda_={!r}, ell={})'.format(self.lambda_, self.ell)


class StepFunction(object):
    """
    A piecewise constant function on an interval [lo, hi].

    Pieces are [lo, b_1), [b_1, b_2), ..., [b_m, hi]: at a breakpoint the
    function takes the value of the piece on its right.

    :param breakpoints: Strictly increasing, strictly inside (lo, hi).
    :param values: Piece values, one more than breakpoints.
    :param tuple interval: The interval (lo, hi).
    """
    def __init__(self, breakpoints, values, interval):
        breakpoints = np.array(breakpoints, dtype=float).reshape(-1)
        values = np.array(values, dtype=float).reshape(-1)
        lo, hi = float(interval[0]), float(interval[1])
        if not lo < hi:
            raise DomainError("Empty interval ({!r}, {!r}).".format(lo, hi))
        if values.size != breakpoints.size + 1:
            raise DomainError("{} breakpoints need {} values, got {}.".format(
                breakpoints.size, breakpoints.size + 1, values.size))
        if not np.all(np.isfinite(values)):
            raise DomainError("Step function values must be finite.")
        if breakpoints.size:
            if np.any(np.diff(breakpoints) <= 0.0):
                raise DomainError("Breakpoints must be strictly increasing.")
            if breakpoints[0] <= lo or breakpoints[-1] >= hi:
                raise DomainError("Breakpoints must lie strictly inside ({!r}, {!r}).".format(lo, hi))

        #: Jump locations.
        self.breakpoints = breakpoints

        #: Piece values, left to right.
        self.values = values

        #: The interval (lo, hi).
        self.interval = (lo, hi)

    @classmethod
    def constant(cls, value, interval):
        """
        :rtype: ~markov_gap_bounds.bernoulli.data_types.StepFunction
        """
        return cls([], [value], interval)

    @classmethod
    def indicator(cls, threshold, interval):
        """
        :return: The indicator of [threshold, hi].
        :rtype: ~markov_gap_bounds.bernoulli.data_types.StepFunction
        """
        lo, hi = interval
        if threshold <= lo:
            return cls.constant(1.0, interval)
        if threshold >= hi:
            return cls.constant(0.0, interval)
        return cls([threshold], [0.0, 1.0], interval)

    @classmethod
    def sign(cls, interval):
        """
        :return: -1 left of 0 and +1 from 0 on.
        :rtype: ~markov_gap_bounds.bernoulli.data_types.StepFunction
        """
        return cls([0.0], [-1.0, 1.0], interval)

    @classmethod
    def discretize(cls, func, interval, pieces):
        """
        Step function on ``pieces`` equal pieces with the value of ``func``
        at each piece's midpoint.

        :param callable func: Vectorized real function.
        :param tuple interval: The interval (lo, hi).
        :param int pieces: Number of pieces, >= 1.
        :rtype: ~markov_gap_bounds.bernoulli.data_types.StepFunction
        """
        if int(pieces) != pieces or pieces < 1:
            raise DomainError("pieces must be an integer >= 1, got {!r}.".format(pieces))
        edges = np.linspace(interval[0], interval[1], int(pieces) + 1)
        midpoints = 0.5 * (edges[:-1] + edges[1:])
        return cls(edges[1:-1], np.asarray(func(midpoints), dtype=float), interval)

    def __call__(self, x):
        index = np.searchsorted(self.breakpoints, x, side='right')
        return self.values[index]

    def sup(self):
        """
        :return: max |f|.
        :rtype: float
        """
        return float(np.abs(self.values).max())

    def variation(self):
        """
        :return: The total variation, the sum of the jump sizes.
        :rtype: float
        """
        return float(np.abs(np.diff(self.values)).sum())

    def variation_on(self, lo, hi):
        """
        Variation on the sub-interval [lo, hi]: the jumps b with lo < b <= hi.

        :rtype: float
        """
        jumps = np.abs(np.diff(self.values))
        inside = (self.breakpoints > lo) & (self.breakpoints <= hi)
        return float(jumps[inside].sum())

    @classmethod
    def from_dict(cls, data):
        """
        :param dict data: ``{"breakpoints": [...], "values": [...], "interval": [lo, hi]}``.
        :rtype: ~markov_gap_bounds.bernoulli.data_types.StepFunction
        """
        try:
            return cls(data['breakpoints'], data['values'], data['interval'])
        except (KeyError, TypeError):
            raise DomainError("A step function needs 'breakpoints', 'values' and 'interval'.")

    def to_dict(self):
        """
        :rtype: dict
        """
        return {'breakpoints': self.breakpoints.tolist(), 'values': self.values.tolist(),
                'interval': list(self.interval)}

    def __repr__(self):
        return 'StepFunction(pieces={}, interval={!r})'.format(self.values.size, self.interval)
