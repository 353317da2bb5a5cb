# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

"""
Gap certificates for the three chain families.

Each constructor produces the (C, theta) pair of its family and derives the
gap through :py:func:`lemma_gap`'s formula (1 - theta)/(1 + C theta).
"""

from __future__ import absolute_import, division, print_function

import logging

from ..errors import DomainError
from .data_types import GapCertificate, GapFamily, NormFamily, lemma_delta

log = logging.getLogger(__name__)

#: Largest block length for the Bernoulli convolution chain. Beyond 53,
#: 1 - 2^-ell rounds to 1 in binary64 and theta < 1 cannot be represented.
MAX_ELL = 53


def lemma_gap(lemma_input):
    """
    Turn a seminorm contraction into a gap.

    :param ~markov_gap_bounds.bounds.data_types.LemmaInput lemma_input:
        The constant C and the contraction factor theta.
    :return: A custom certificate with delta0 = (1 - theta)/(1 + C theta).
    :rtype: ~markov_gap_bounds.bounds.data_types.GapCertificate
    """
    return GapCertificate(lemma_delta(lemma_input.c_const, lemma_input.theta), GapFamily.CUSTOM,
                          c_const=lemma_input.c_const, theta=lemma_input.theta)


def doeblin_gap(beta):
    """
    Gap of a chain satisfying a one-step Doeblin minorization with constant
    beta, on bounded functions with the norm |.|_inf + S(.).

    :param float beta: The minorization constant, in (0, 1].
    :return: Certificate with delta0 = beta/(2 - beta), C = 1, theta = 1 - beta.
    :rtype: ~markov_gap_bounds.bounds.data_types.GapCertificate
    :raise ~markov_gap_bounds.errors.DomainError: If beta is outside (0, 1].
    """
    beta = float(beta)
    if not 0.0 < beta <= 1.0:
        raise DomainError("beta must lie in (0, 1], got {!r}.".format(beta))
    theta = 1.0 - beta
    return GapCertificate(lemma_delta(1.0, theta), GapFamily.DOEBLIN, c_const=1.0, theta=theta,
                          params={'beta': beta})


def hypercube_gap(n_slots, norm_family):
    """
    Gap of the lazy random walk on {0,1}^N in one of the three norms.

    ============  ==========  ===============  ==============
    norm          C           theta            delta0
    ============  ==========  ===============  ==============
    L             N           1 - 1/N          1/N^2
    dL            1           1 - 1/N          1/(2N - 1)
    W             1           1 - 1/(2N)       1/(4N - 1)
    ============  ==========  ===============  ==============

    :param int n_slots: The dimension N >= 1.
    :param ~markov_gap_bounds.bounds.data_types.NormFamily norm_family: The norm.
    :rtype: ~markov_gap_bounds.bounds.data_types.GapCertificate
    :raise ~markov_gap_bounds.errors.DomainError: If N < 1.
    """
    norm_family = NormFamily(norm_family)
    if int(n_slots) != n_slots or n_slots < 1:
        raise DomainError("n_slots must be an integer >= 1, got {!r}.".format(n_slots))
    n_slots = int(n_slots)
    if norm_family is NormFamily.L:
        c_const, theta = float(n_slots), 1.0 - 1.0 / n_slots
    elif norm_family is NormFamily.DL:
        c_const, theta = 1.0, 1.0 - 1.0 / n_slots
    else:
        c_const, theta = 1.0, 1.0 - 1.0 / (2.0 * n_slots)
    return GapCertificate(lemma_delta(c_const, theta), norm_family.gap_family, c_const=c_const, theta=theta,
                          params={'n_slots': n_slots, 'norm': norm_family.value})


def min_ell(lambda_):
    """
    Smallest block length ell with lambda^ell < 1/2 (strict).

    Powers are built by repeated multiplication so that a power landing on
    1/2 exactly is never misclassified.

    :param float lambda_: The contraction ratio, in (0, 1).
    :rtype: int
    :raise ~markov_gap_bounds.errors.DomainError:
        If lambda is outside (0, 1) or needs ell > :py:data:`MAX_ELL`.
    """
    lambda_ = float(lambda_)
    if not 0.0 < lambda_ < 1.0:
        raise DomainError("lambda must lie in (0, 1), got {!r}.".format(lambda_))
    power = lambda_
    ell = 1
    while not power < 0.5:
        power *= lambda_
        ell += 1
        if ell > MAX_ELL:
            raise DomainError("lambda {!r} needs a block length above {}.".format(lambda_, MAX_ELL))
    return ell


def bernoulli_certificate(lambda_):
    """
    Gap of the extracted Bernoulli convolution chain on BV(I_lambda).

    :param float lambda_: The contraction ratio, in (0, 1).
    :return:
        - ell (int) - the block length, smallest with lambda^ell < 1/2
        - certificate (:py:class:`~markov_gap_bounds.bounds.data_types.GapCertificate`) -
          C = 1, theta = 1 - 2^-ell, delta0 = 1/(2^(ell+1) - 1)
    :rtype: tuple
    """
    ell = min_ell(lambda_)
    theta = 1.0 - 2.0 ** -ell
    log.debug("lambda=%r needs block length %d", lambda_, ell)
    cert = GapCertificate(lemma_delta(1.0, theta), GapFamily.BERNOULLI_BV, c_const=1.0, theta=theta,
                          params={'lambda': float(lambda_), 'ell': ell})
    return ell, cert
