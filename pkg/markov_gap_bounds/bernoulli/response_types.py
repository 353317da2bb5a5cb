# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import numpy as np


class BvNormReport(object):
    """
    The BV norm |f|_BV = |f|_inf + var(f) of a step function and its parts.

    :param float sup: max |f|.
    :param float var: Total variation.
    """
    def __init__(self, sup, var):
        #: max |f|.
        self.sup = float(sup)

        #: Total variation.
        self.var = float(var)

        #: sup + var.
        self.norm = self.sup + self.var

    def __iter__(self):
        return iter((self.sup, self.var, self.norm))

    def to_dict(self):
        return {'sup': self.sup, 'var': self.var, 'norm': self.norm}

    def __repr__(self):
        return 'BvNormReport(sup={!r}, var={!r}, norm={!r})'.format(self.sup, self.var, self.norm)


class Histogram(object):
    """
    Binned empirical law of the chain, averaged over independent runs.

    :param numpy.ndarray edges: bins + 1 bin edges.
    :param numpy.ndarray mass: Fraction of points per bin, averaged over runs.
    :param int runs: Number of runs.
    :param int points: Points per run.
    """

    #: CSV header of :py:meth:`rows`.
    COLUMNS = ('bin_left', 'bin_right', 'mass')

    def __init__(self, edges, mass, runs, points):
        #: Bin edges.
        self.edges = np.asarray(edges, dtype=float)

        #: Mass per bin.
        self.mass = np.asarray(mass, dtype=float)

        #: Number of runs averaged.
        self.runs = int(runs)

        #: Points per run.
        self.points = int(points)

    def rows(self):
        """
        :return: ``(bin_left, bin_right, mass)`` tuples.
        :rtype: list
        """
        return list(zip(self.edges[:-1].tolist(), self.edges[1:].tolist(), self.mass.tolist()))

    def __repr__(self):
        return 'Histogram(bins={}, runs={}, points={})'.format(self.mass.size, self.runs, self.points)
