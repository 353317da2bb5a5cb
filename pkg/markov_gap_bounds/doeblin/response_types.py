# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import numpy as np


class MinorizationSplit(object):
    """
    Decomposition of every kernel row as ``beta * omega + residual[x]``.

    :param float beta: The minorization constant.
    :param omega: The common probability vector.
    :param residual: The k x k remainder table.
    """
    def __init__(self, beta, omega, residual):
        #: The minorization constant, in (0, 1].
        self.beta = float(beta)

        #: Probability vector of the common part.
        self.omega = np.asarray(omega, dtype=float)

        #: Remainder r_x = m_x - beta omega, rows summing to 1 - beta.
        self.residual = np.asarray(residual, dtype=float)

    def reconstruct(self):
        """
        :return: The table beta omega + residual.
        :rtype: numpy.ndarray
        """
        return self.beta * self.omega[np.newaxis, :] + self.residual

    def to_dict(self):
        """
        :return: A JSON-friendly representation.
        :rtype: dict
        """
        return {'beta': self.beta, 'omega': self.omega.tolist(), 'residual': self.residual.tolist()}

    def __repr__(self):
        return 'MinorizationSplit(beta={!r})'.format(self.beta)
