# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

from ..bounds.data_types import NormFamily, ObservableSpec


class SeminormReport(object):
    """
    Seminorms and norms of a function on {0,1}^N.

    With the :py:attr:`lip`, :py:attr:`w` and :py:attr:`s` attributes you can
    access the seminorms; the three norms are :py:attr:`norm_l`,
    :py:attr:`norm_dl` and :py:attr:`norm_w`.

    :param int n_slots: The dimension N.
    :param float sup: The uniform norm.
    :param float lip: Lipschitz constant for the Hamming metric.
    :param float w: Local total variation W(f).
    :param float s: Spread max f - min f.
    """
    def __init__(self, n_slots, sup, lip, w, s):
        #: The dimension N.
        self.n_slots = int(n_slots)

        #: The uniform norm.
        self.sup = float(sup)

        #: Largest difference across an edge (the Lipschitz constant).
        self.lip = float(lip)

        #: Largest sum of the N edge differences at a vertex.
        self.w = float(w)

        #: max f - min f.
        self.s = float(s)

        #: |f|_inf + Lip(f).
        self.norm_l = self.sup + self.lip

        #: |f|_inf + N Lip(f).
        self.norm_dl = self.sup + self.n_slots * self.lip

        #: |f|_inf + W(f).
        self.norm_w = self.sup + self.w

    def seminorm(self, norm_family):
        """
        :param ~markov_gap_bounds.bounds.data_types.NormFamily norm_family: The norm.
        :return: The regularity part of the norm.
        :rtype: float
        """
        norm_family = NormFamily(norm_family)
        if norm_family is NormFamily.L:
            return self.lip
        if norm_family is NormFamily.DL:
            return self.n_slots * self.lip
        return self.w

    def norm(self, norm_family):
        """
        :param ~markov_gap_bounds.bounds.data_types.NormFamily norm_family: The norm.
        :rtype: float
        """
        return {NormFamily.L: self.norm_l, NormFamily.DL: self.norm_dl,
                NormFamily.W: self.norm_w}[NormFamily(norm_family)]

    def observable_spec(self, norm_family, sigma2=None):
        """
        :param ~markov_gap_bounds.bounds.data_types.NormFamily norm_family: The norm.
        :param float sigma2: The dynamical variance, if known.
        :rtype: ~markov_gap_bounds.bounds.data_types.ObservableSpec
        """
        norm_family = NormFamily(norm_family)
        return ObservableSpec(sup_norm=self.sup, seminorm=self.seminorm(norm_family), sigma2=sigma2,
                              family=norm_family.gap_family)

    def to_dict(self):
        """
        :return: A JSON-friendly representation.
        :rtype: dict
        """
        return {'n_slots': self.n_slots, 'sup': self.sup, 'lip': self.lip, 'w': self.w, 's': self.s,
                'norm_L': self.norm_l, 'norm_dL': self.norm_dl, 'norm_W': self.norm_w}

    def __repr__(self):
        return 'SeminormReport(lip={!r}, w={!r}, s={!r})'.format(self.lip, self.w, self.s)
