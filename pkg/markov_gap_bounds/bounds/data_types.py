# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import math
from enum import Enum

from ..errors import DomainError

#: Tolerance for the relation between a gap and its (C, theta) provenance.
CERTIFICATE_TOLERANCE = 1e-12


class GapFamily(Enum):
    """
    The chain family (and function space) a gap certificate belongs to.
    Each value also names the norm the matching observables are measured in.
    """
    DOEBLIN = 'doeblin'              #: Doeblin chains on bounded functions, norm |.|_inf + S(.)
    HYPERCUBE_L = 'hypercube_L'      #: Hypercube walk, Lipschitz norm
    HYPERCUBE_DL = 'hypercube_dL'    #: Hypercube walk, diameter-weighted Lipschitz norm
    HYPERCUBE_W = 'hypercube_W'      #: Hypercube walk, local total variation norm
    BERNOULLI_BV = 'bernoulli_bv'    #: Extracted Bernoulli convolution chain, BV norm
    CUSTOM = 'custom'                #: Any other (C, theta) pair or a bare gap


class NormFamily(Enum):
    """
    The three norms on functions over the hypercube {0,1}^N.
    """
    L = 'L'      #: |f|_inf + Lip(f)
    DL = 'dL'    #: |f|_inf + N Lip(f)
    W = 'W'      #: |f|_inf + W(f)

    @property
    def gap_family(self):
        """
        The certificate family matching this norm.

        :rtype: ~markov_gap_bounds.bounds.data_types.GapFamily
        """
        return {
            NormFamily.L: GapFamily.HYPERCUBE_L,
            NormFamily.DL: GapFamily.HYPERCUBE_DL,
            NormFamily.W: GapFamily.HYPERCUBE_W,
        }[self]


def lemma_delta(c_const, theta):
    """
    The gap (1 - theta) / (1 + C theta) obtained by turning a seminorm
    contraction into a spectral gap.

    :param float c_const: The constant C.
    :param float theta: The seminorm contraction factor.
    :rtype: float
    """
    return (1.0 - theta) / (1.0 + c_const * theta)


class LemmaInput(object):
    """
    The data turned into a gap: a constant C with |f|_inf <= C V(f) on
    centered functions and a factor theta with V(L0 f) <= theta V(f).

    :param float c_const:
        The constant C, must be positive.
    :param float theta:
        The contraction factor, in [0, 1).
    :raise ~markov_gap_bounds.errors.DomainError:
        If C <= 0 or theta is outside [0, 1).
    """
    def __init__(self, c_const, theta):
        c_const = float(c_const)
        theta = float(theta)
        if not c_const > 0.0:
            raise DomainError("C must be positive, got {!r}.".format(c_const))
        if not 0.0 <= theta < 1.0:
            raise DomainError("theta must lie in [0, 1), got {!r}.".format(theta))

        #: The constant C.
        self.c_const = c_const

        #: The seminorm contraction factor theta.
        self.theta = theta

    def __repr__(self):
        return 'LemmaInput(c_const={!r}, theta={!r})'.format(self.c_const, self.theta)


class GapCertificate(object):
    """
    A certified contraction gap delta0 of an averaging operator on a
    hyperplane, together with where it comes from.

    For every family but :py:attr:`GapFamily.CUSTOM` the gap must equal
    (1 - theta)/(1 + C theta) within 1e-12. Custom certificates may omit
    ``c_const`` and ``theta`` (see :py:meth:`from_delta0`).

    :param float delta0:
        The gap, in (0, 1].
    :param ~markov_gap_bounds.bounds.data_types.GapFamily family:
        The family the gap was derived for.
    :param float c_const:
        The constant C used to derive the gap (None for bare custom gaps).
    :param float theta:
        The contraction factor used to derive the gap (None for bare gaps).
    :param dict params:
        Family parameters (beta, n_slots, lambda, ell as applicable).
    :raise ~markov_gap_bounds.errors.DomainError:
        If any invariant is violated.
    """
    def __init__(self, delta0, family, c_const=None, theta=None, params=None):
        delta0 = float(delta0)
        family = GapFamily(family)
        if not 0.0 < delta0 <= 1.0:
            raise DomainError("delta0 must lie in (0, 1], got {!r}.".format(delta0))
        if c_const is not None and not float(c_const) >= 0.0:
            raise DomainError("C must be non-negative, got {!r}.".format(c_const))
        if theta is not None and not 0.0 <= float(theta) < 1.0:
            raise DomainError("theta must lie in [0, 1), got {!r}.".format(theta))
        if family is not GapFamily.CUSTOM:
            if c_const is None or theta is None:
                raise DomainError("Certificates of family {} need C and theta.".format(family.value))
            expected = lemma_delta(float(c_const), float(theta))
            if abs(expected - delta0) > CERTIFICATE_TOLERANCE:
                raise DomainError("delta0 {!r} does not match (1 - theta)/(1 + C theta) = {!r}.".format(
                    delta0, expected))

        #: The certified gap.
        self.delta0 = delta0

        #: The family (:py:class:`GapFamily`).
        self.family = family

        #: The constant C (float or None).
        self.c_const = None if c_const is None else float(c_const)

        #: The contraction factor theta (float or None).
        self.theta = None if theta is None else float(theta)

        #: Family parameters.
        self.params = dict(params or {})

    @classmethod
    def from_delta0(cls, delta0):
        """
        A custom certificate carrying only a gap value.

        :param float delta0: The gap, in (0, 1].
        :rtype: ~markov_gap_bounds.bounds.data_types.GapCertificate
        """
        return cls(delta0, GapFamily.CUSTOM)

    def to_dict(self):
        """
        :return: A JSON-friendly representation.
        :rtype: dict
        """
        return {
            'delta0': self.delta0,
            'family': self.family.value,
            'c_const': self.c_const,
            'theta': self.theta,
            'params': dict(self.params),
        }

    def __repr__(self):
        return 'GapCertificate(delta0={!r}, family={})'.format(self.delta0, self.family.value)


class ObservableSpec(object):
    """
    The norm data of an observable phi.

    All implemented norms have the shape |.|_inf + V(.); when both parts are
    known the total ``norm`` is their sum. If only the total is known (for
    example when it is passed on the command line) the parts stay None.

    :param float sup_norm:
        The uniform norm |phi|_inf.
    :param float seminorm:
        The regularity part V(phi).
    :param float norm:
        The total norm |phi|; computed from the parts when omitted.
    :param float sigma2:
        The dynamical variance, if known.
    :param ~markov_gap_bounds.bounds.data_types.GapFamily family:
        The norm family the values were computed in, if known.
    :raise ~markov_gap_bounds.errors.DomainError:
        If the values are inconsistent or out of range.
    """
    def __init__(self, sup_norm=None, seminorm=None, norm=None, sigma2=None, family=None):
        if (sup_norm is None) != (seminorm is None):
            raise DomainError("sup_norm and seminorm must be given together.")
        if sup_norm is not None:
            sup_norm = float(sup_norm)
            seminorm = float(seminorm)
            if sup_norm < 0.0 or seminorm < 0.0:
                raise DomainError("Norm parts must be non-negative.")
            total = sup_norm + seminorm
            if norm is not None and not math.isclose(float(norm), total, rel_tol=1e-12, abs_tol=1e-12):
                raise DomainError("norm {!r} differs from sup_norm + seminorm = {!r}.".format(norm, total))
            norm = total
        if norm is None:
            raise DomainError("Either norm or both norm parts are required.")
        norm = float(norm)
        if not norm > 0.0:
            raise DomainError("The observable norm must be positive, got {!r}.".format(norm))
        if sigma2 is not None and not float(sigma2) >= 0.0:
            raise DomainError("sigma2 must be non-negative, got {!r}.".format(sigma2))

        #: The total norm |phi|.
        self.norm = norm

        #: The uniform norm (float or None).
        self.sup_norm = sup_norm

        #: The regularity seminorm (float or None).
        self.seminorm = seminorm

        #: The dynamical variance (float or None).
        self.sigma2 = None if sigma2 is None else float(sigma2)

        #: The norm family (:py:class:`GapFamily` or None).
        self.family = None if family is None else GapFamily(family)

    def with_sigma2(self, sigma2):
        """
        A copy with the dynamical variance set.

        :param float sigma2: The dynamical variance.
        :rtype: ~markov_gap_bounds.bounds.data_types.ObservableSpec
        """
        return ObservableSpec(sup_norm=self.sup_norm, seminorm=self.seminorm, norm=self.norm,
                              sigma2=sigma2, family=self.family)

    def to_dict(self):
        """
        :return: A JSON-friendly representation.
        :rtype: dict
        """
        return {
            'norm': self.norm,
            'sup_norm': self.sup_norm,
            'seminorm': self.seminorm,
            'sigma2': self.sigma2,
            'family': None if self.family is None else self.family.value,
        }

    def __repr__(self):
        return 'ObservableSpec(norm={!r})'.format(self.norm)
