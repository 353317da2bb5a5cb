# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import math
from enum import Enum


class Regime(Enum):
    """
    The branch of a concentration inequality a value was computed with.
    """
    GAUSSIAN = 'gaussian'          #: exp(-c n a^2) branch
    EXPONENTIAL = 'exponential'    #: exp(-c n a) branch of Theorem A
    VARIANCE = 'variance'          #: variance-aware bound of Theorem B


class Precondition(Enum):
    """
    Codes of the validity preconditions a bound evaluation can violate.
    """
    N_TOO_SMALL = 'N_TOO_SMALL'              #: sample size below the theorem's threshold
    A_WINDOW = 'A_WINDOW'                    #: deviation outside the admissible window
    U_BELOW_VARIANCE = 'U_BELOW_VARIANCE'    #: variance proxy U below the known sigma^2
    NORM_MISMATCH = 'NORM_MISMATCH'          #: observable norm family differs from the certificate's


class BoundResult(object):
    """
    An evaluated tail bound.

    The formula is always evaluated, also when preconditions are violated;
    in that case :py:attr:`valid` is False and the codes are listed.

    :param float log_raw:
        Natural logarithm of the formula value.
    :param ~markov_gap_bounds.bounds.response_types.Regime regime:
        The branch used.
    :param list violated_preconditions:
        :py:class:`Precondition` codes, empty if the bound applies.
    """
    def __init__(self, log_raw, regime, violated_preconditions=()):
        #: Natural logarithm of the formula value.
        self.log_raw = float(log_raw)

        #: The formula value, may exceed 1 (inf if it overflows).
        self.raw = math.exp(self.log_raw) if self.log_raw < 709.0 else float('inf')

        #: min(raw, 1).
        self.clipped = min(self.raw, 1.0)

        #: The branch (:py:class:`Regime`).
        self.regime = Regime(regime)

        #: Violated preconditions in evaluation order, without duplicates.
        self.violated_preconditions = []
        for code in violated_preconditions:
            code = Precondition(code)
            if code not in self.violated_preconditions:
                self.violated_preconditions.append(code)

    @property
    def valid(self):
        """
        True iff no precondition is violated.

        :rtype: bool
        """
        return not self.violated_preconditions

    def to_dict(self):
        """
        :return: A JSON-friendly representation.
        :rtype: dict
        """
        return {
            'raw': self.raw,
            'clipped': self.clipped,
            'regime': self.regime.value,
            'valid': self.valid,
            'violated_preconditions': [code.value for code in self.violated_preconditions],
        }

    def __repr__(self):
        return 'BoundResult(raw={!r}, regime={}, valid={})'.format(self.raw, self.regime.value, self.valid)

    def __str__(self):
        return '{:.4g} ({})'.format(self.clipped, self.regime.value)
