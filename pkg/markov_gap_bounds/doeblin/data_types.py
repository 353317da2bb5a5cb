# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import numpy as np

from ..errors import DomainError

#: Allowed deviation of a row sum from 1.
ROW_SUM_TOLERANCE = 1e-12


class FiniteKernel(object):
    """
    A transition kernel on the states 0 .. k-1, stored as a row-stochastic
    k x k table: ``rows[x][y]`` is the probability to jump from x to y.

    :param rows: k rows of k non-negative numbers, each summing to 1.
    :raise ~markov_gap_bounds.errors.DomainError: If the table is not row-stochastic.
    """
    def __init__(self, rows):
        rows = np.array(rows, dtype=float)
        if rows.ndim != 2 or rows.shape[0] != rows.shape[1] or rows.shape[0] < 1:
            raise DomainError("A kernel needs a non-empty square table, got shape {}.".format(rows.shape))
        if not np.all(np.isfinite(rows)) or np.any(rows < 0.0):
            raise DomainError("Kernel entries must be finite and non-negative.")
        deviation = np.abs(rows.sum(axis=1) - 1.0)
        if np.any(deviation > ROW_SUM_TOLERANCE):
            raise DomainError("Row {} sums to {!r}, not 1.".format(
                int(np.argmax(deviation)), float(rows[np.argmax(deviation)].sum())))

        #: The transition table (read-only numpy array).
        self.rows = rows
        self.rows.setflags(write=False)

    @property
    def size(self):
        """
        :return: The number of states k.
        :rtype: int
        """
        return self.rows.shape[0]

    def apply(self, f):
        """
        The averaging operator, (L0 f)(x) = sum_y rows[x][y] f(y).

        :param f: k values.
        :rtype: numpy.ndarray
        """
        f = np.asarray(f, dtype=float)
        if f.shape != (self.size,):
            raise DomainError("Expected {} values, got shape {}.".format(self.size, f.shape))
        return self.rows.dot(f)

    def power(self, ell):
        """
        The ell-step kernel. Chains that only satisfy a minorization after
        ell steps are handled by certifying ``kernel.power(ell)`` and
        simulating it as the extracted chain observed every ell steps.

        :param int ell: Number of steps, >= 1.
        :rtype: ~markov_gap_bounds.doeblin.data_types.FiniteKernel
        """
        if int(ell) != ell or ell < 1:
            raise DomainError("ell must be an integer >= 1, got {!r}.".format(ell))
        rows = np.linalg.matrix_power(self.rows, int(ell))
        return FiniteKernel(rows / rows.sum(axis=1, keepdims=True))

    @classmethod
    def from_dict(cls, data):
        """
        :param dict data: ``{"size": k, "rows": [[...], ...]}``; size is optional.
        :rtype: ~markov_gap_bounds.doeblin.data_types.FiniteKernel
        """
        try:
            rows = data['rows']
        except (KeyError, TypeError):
            raise DomainError("Kernel description needs a 'rows' entry.")
        kernel = cls(rows)
        if 'size' in data and int(data['size']) != kernel.size:
            raise DomainError("Declared size {} does not match {} rows.".format(data['size'], kernel.size))
        return kernel

    def to_dict(self):
        """
        :return: A JSON-friendly representation.
        :rtype: dict
        """
        return {'size': self.size, 'rows': self.rows.tolist()}

    def __repr__(self):
        return 'FiniteKernel(size={})'.format(self.size)
