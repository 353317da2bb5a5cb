# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

"""
Explicit concentration inequalities for empirical means of Markov chains
with a certified gap, and their inversion into sample size budgets.

Each inequality is a class binding the data that stays fixed (certificate,
observable, variance proxy, ...) and evaluating the bound for a sample size
``n`` and a deviation ``a``. Violated preconditions never abort an
evaluation: the value is computed anyway and flagged.
"""

from __future__ import absolute_import, division, print_function

import logging
import math

from ..errors import DomainError, InfeasibleError
from . import constants as c
from .data_types import GapFamily
from .response_types import BoundResult, Precondition, Regime

log = logging.getLogger(__name__)

#: Largest sample size the planner returns; beyond it consecutive integers
#: are no longer distinct as floats.
MAX_PLANNED_N = 2 ** 53


def ceil_threshold(value):
    """
    Ceiling that does not step over an integer because of rounding noise,
    e.g. 60 / (1/3) evaluates to 180.00000000000003 and yields 180.

    :param float value: A positive real.
    :rtype: int
    """
    nearest = round(value)
    if abs(value - nearest) <= 1e-9 * max(1.0, abs(value)):
        return int(nearest)
    return int(math.ceil(value))


def _check_sample(n, a):
    if int(n) != n or n < 1:
        raise DomainError("n must be an integer >= 1, got {!r}.".format(n))
    a = float(a)
    if not (a >= 0.0 and math.isfinite(a)):
        raise DomainError("a must be a finite non-negative number, got {!r}.".format(a))
    return int(n), a


def _norm_mismatch(cert, obs):
    return (cert.family is not GapFamily.CUSTOM and obs.family is not None
            and obs.family is not cert.family)


def min_n_theorem_a(cert):
    """
    Smallest sample sizes allowed by Theorem A.

    :param ~markov_gap_bounds.bounds.data_types.GapCertificate cert: The gap.
    :return:
        - exact_n (int) - ceil(1 + log 100 / (-log(1 - delta0/13)))
        - simplified_n (int) - ceil(60/delta0), never smaller than exact_n
    :rtype: tuple
    :raise ~markov_gap_bounds.errors.DomainError: If delta0 is outside (0, 1].
    """
    delta0 = float(cert.delta0)
    if not 0.0 < delta0 <= 1.0:
        raise DomainError("delta0 must lie in (0, 1], got {!r}.".format(delta0))
    exact = 1.0 + math.log(c.A_MIN_N_LOG_ARGUMENT) / -math.log1p(-delta0 / c.A_MIN_N_GAP_DIVISOR)
    return ceil_threshold(exact), ceil_threshold(c.A_SIMPLIFIED_MIN_N / delta0)


def theorem_a_gaussian_window(cert, obs):
    """
    Largest deviation handled by the gaussian branch of Theorem A.

    :rtype: float
    """
    return cert.delta0 * obs.norm / c.A_REGIME_DIVISOR


def theorem_b_window(cert, obs, variance_proxy):
    """
    Largest deviation admitted by Theorem B, (U/|phi|) log(1 + delta0^2/(12 + 13 delta0)).
    Raising U widens the window at the cost of a weaker leading rate.

    :param float variance_proxy: The upper bound U on sigma^2, positive.
    :rtype: float
    :raise ~markov_gap_bounds.errors.DomainError: If U <= 0.
    """
    variance_proxy = float(variance_proxy)
    if not variance_proxy > 0.0:
        raise DomainError("U must be positive, got {!r}.".format(variance_proxy))
    delta0 = cert.delta0
    denominator = c.RATE_DENOMINATOR_OFFSET + c.RATE_DENOMINATOR_SLOPE * delta0
    return variance_proxy / obs.norm * math.log1p(delta0 ** 2 / denominator)


class ConcentrationBound(object):
    """
    Base class of the tail bounds P[|mean_n(phi) - mu0(phi)| >= a] <= ...
    """

    def evaluate(self, n, a):
        """
        Evaluate the bound.

        :param int n: Number of chain steps averaged, >= 1.
        :param float a: Deviation, >= 0.
        :rtype: ~markov_gap_bounds.bounds.response_types.BoundResult
        :raise ~markov_gap_bounds.errors.DomainError: If n < 1 or a < 0.
        """
        n, a = _check_sample(n, a)
        log_raw, regime, violations = self._evaluate(n, a)
        result = BoundResult(log_raw, regime, violations)
        if not result.valid:
            log.info("%s evaluated outside its validity conditions at n=%d, a=%r: %s",
                     type(self).__name__, n, a, ', '.join(v.value for v in result.violated_preconditions))
        return result

    def _evaluate(self, n, a):
        raise NotImplementedError()


class TheoremABound(ConcentrationBound):
    """
    The two-regime bound for observables in a Banach algebra on which the
    averaging operator contracts with gap delta0.

    :param ~markov_gap_bounds.bounds.data_types.GapCertificate cert: The gap.
    :param ~markov_gap_bounds.bounds.data_types.ObservableSpec obs: The observable norm.
    """

    def __init__(self, cert, obs):
        super(TheoremABound, self).__init__()
        self.cert = cert
        self.obs = obs
        delta0 = cert.delta0

        #: Smallest admissible n.
        self.threshold_n = min_n_theorem_a(cert)[0]

        #: Rate of the gaussian branch, multiplies n a^2 / |phi|^2.
        self.gaussian_rate = delta0 / (c.A_GAUSS_GAP_SLOPE * delta0 + c.A_GAUSS_OFFSET)

        #: Rate of the exponential branch, multiplies n (a/|phi| - 0.254 delta0).
        self.exponential_rate = c.A_EXP_RATE * delta0 ** 2 / (
            c.RATE_DENOMINATOR_OFFSET + c.RATE_DENOMINATOR_SLOPE * delta0)

    def regime_for(self, a):
        """
        The branch used for deviation a; the boundary a/|phi| = delta0/3
        belongs to the gaussian branch.

        :rtype: ~markov_gap_bounds.bounds.response_types.Regime
        """
        if a / self.obs.norm <= self.cert.delta0 / c.A_REGIME_DIVISOR:
            return Regime.GAUSSIAN
        return Regime.EXPONENTIAL

    def _evaluate(self, n, a):
        violations = []
        if n < self.threshold_n:
            violations.append(Precondition.N_TOO_SMALL)
        if _norm_mismatch(self.cert, self.obs):
            violations.append(Precondition.NORM_MISMATCH)
        ratio = a / self.obs.norm
        regime = self.regime_for(a)
        if regime is Regime.GAUSSIAN:
            log_raw = math.log(c.A_GAUSS_PREFACTOR) - n * self.gaussian_rate * ratio ** 2
        else:
            log_raw = math.log(c.A_EXP_PREFACTOR) - n * self.exponential_rate * (
                ratio - c.A_EXP_SHIFT * self.cert.delta0)
        return log_raw, regime, violations


class TheoremBBound(ConcentrationBound):
    """
    The variance-aware bound, sharp in the leading term when U is close to
    the dynamical variance sigma^2.

    :param ~markov_gap_bounds.bounds.data_types.GapCertificate cert: The gap.
    :param ~markov_gap_bounds.bounds.data_types.ObservableSpec obs: The observable norm.
    :param float variance_proxy: An upper bound U on sigma^2, positive.
    :raise ~markov_gap_bounds.errors.DomainError: If U <= 0.
    """

    def __init__(self, cert, obs, variance_proxy):
        super(TheoremBBound, self).__init__()
        self.cert = cert
        self.obs = obs

        #: The admissible deviation window.
        self.window = theorem_b_window(cert, obs, variance_proxy)

        #: The variance proxy U.
        self.variance_proxy = float(variance_proxy)

        #: Smallest admissible n.
        self.threshold_n = ceil_threshold(c.B_MIN_N / cert.delta0)

    def _evaluate(self, n, a):
        violations = []
        if n < self.threshold_n:
            violations.append(Precondition.N_TOO_SMALL)
        if self.obs.sigma2 is not None and self.variance_proxy < self.obs.sigma2:
            violations.append(Precondition.U_BELOW_VARIANCE)
        if a > self.window:
            violations.append(Precondition.A_WINDOW)
        if _norm_mismatch(self.cert, self.obs):
            violations.append(Precondition.NORM_MISMATCH)
        u = self.variance_proxy
        cubic = c.B_CUBIC_FACTOR * (1.0 + 1.0 / self.cert.delta0) ** 2 * self.obs.norm ** 3 * a ** 3 / u ** 3
        log_raw = math.log(c.B_PREFACTOR) - n * (a ** 2 / (2.0 * u) - cubic)
        return log_raw, Regime.VARIANCE, violations


class DoeblinCorollaryBound(ConcentrationBound):
    """
    The bound for chains with a one-step Doeblin minorization of constant
    beta and observables with values in [-1, 1]. The range of the
    observable is the caller's responsibility.

    :param float beta: The minorization constant, in (0, 1].
    :raise ~markov_gap_bounds.errors.DomainError: If beta is outside (0, 1].
    """

    def __init__(self, beta):
        super(DoeblinCorollaryBound, self).__init__()
        beta = float(beta)
        if not 0.0 < beta <= 1.0:
            raise DomainError("beta must lie in (0, 1], got {!r}.".format(beta))
        self.beta = beta

        #: Largest admissible deviation.
        self.window = beta / c.DOEBLIN_WINDOW_DIVISOR

        #: Smallest admissible n.
        self.threshold_n = ceil_threshold(c.DOEBLIN_MIN_N / beta)

        #: Rate multiplying n a^2.
        self.rate = beta / (c.DOEBLIN_RATE_OFFSET + c.DOEBLIN_RATE_SLOPE * beta)

    def _evaluate(self, n, a):
        violations = []
        if n < self.threshold_n:
            violations.append(Precondition.N_TOO_SMALL)
        if a > self.window:
            violations.append(Precondition.A_WINDOW)
        log_raw = math.log(c.DOEBLIN_PREFACTOR) - n * a ** 2 * self.rate
        return log_raw, Regime.GAUSSIAN, violations


class BvCorollaryBound(ConcentrationBound):
    """
    The bound for the ell-block Bernoulli convolution chain and observables
    of bounded variation.

    :param int ell: The block length, >= 1.
    :param float norm_bv: The BV norm |phi|_inf + var(phi), positive.
    :raise ~markov_gap_bounds.errors.DomainError: If ell < 1 or the norm is not positive.
    """

    def __init__(self, ell, norm_bv):
        super(BvCorollaryBound, self).__init__()
        if int(ell) != ell or ell < 1:
            raise DomainError("ell must be an integer >= 1, got {!r}.".format(ell))
        norm_bv = float(norm_bv)
        if not norm_bv > 0.0:
            raise DomainError("The BV norm must be positive, got {!r}.".format(norm_bv))
        self.ell = int(ell)
        self.norm_bv = norm_bv
        blocks = 2.0 ** self.ell

        #: Deviations must stay strictly below this value.
        self.window = norm_bv / (c.BV_WINDOW_DIVISOR * (2.0 * blocks - 1.0))

        #: Smallest admissible n.
        self.threshold_n = ceil_threshold(c.BV_MIN_N * blocks)

        #: Rate multiplying n a^2.
        self.rate = 1.0 / (norm_bv ** 2 * (c.BV_RATE_SLOPE * blocks + c.BV_RATE_OFFSET))

    def _evaluate(self, n, a):
        violations = []
        if n < self.threshold_n:
            violations.append(Precondition.N_TOO_SMALL)
        if a > 0.0 and a >= self.window:
            violations.append(Precondition.A_WINDOW)
        log_raw = math.log(c.BV_PREFACTOR) - n * a ** 2 * self.rate
        return log_raw, Regime.GAUSSIAN, violations


class ZeroObservableBound(ConcentrationBound):
    """
    The exact tail of an observable that vanishes identically: every empirical
    mean is 0, so P(|mean| > a) is 0 for a > 0 and at most 1 at a = 0.

    :param float window: Largest deviation reported on, positive.
    :raise ~markov_gap_bounds.errors.DomainError: If the window is not positive.
    """

    def __init__(self, window):
        super(ZeroObservableBound, self).__init__()
        window = float(window)
        if not (window > 0.0 and math.isfinite(window)):
            raise DomainError("window must be a finite positive number, got {!r}.".format(window))

        #: Largest deviation reported on.
        self.window = window

        #: Smallest admissible n.
        self.threshold_n = 1

    def _evaluate(self, n, a):
        return (0.0 if a == 0.0 else -math.inf), Regime.GAUSSIAN, ()


def theorem_a_bound(cert, obs, n, a):
    """
    Evaluate the two-regime bound; see :py:class:`TheoremABound`.

    :rtype: ~markov_gap_bounds.bounds.response_types.BoundResult
    """
    return TheoremABound(cert, obs).evaluate(n, a)


def theorem_b_bound(cert, obs, variance_proxy, n, a):
    """
    Evaluate the variance-aware bound; see :py:class:`TheoremBBound`.

    :rtype: ~markov_gap_bounds.bounds.response_types.BoundResult
    """
    return TheoremBBound(cert, obs, variance_proxy).evaluate(n, a)


def doeblin_corollary_bound(beta, n, a):
    """
    Evaluate the Doeblin chain bound; see :py:class:`DoeblinCorollaryBound`.

    :rtype: ~markov_gap_bounds.bounds.response_types.BoundResult
    """
    return DoeblinCorollaryBound(beta).evaluate(n, a)


def bv_corollary_bound(ell, norm_bv, n, a):
    """
    Evaluate the bounded variation bound; see :py:class:`BvCorollaryBound`.

    :rtype: ~markov_gap_bounds.bounds.response_types.BoundResult
    """
    return BvCorollaryBound(ell, norm_bv).evaluate(n, a)


def plan_required_n(cert, obs, a, target_p):
    """
    Smallest n with a Theorem A bound at most ``target_p`` and at least the
    Theorem A threshold.

    The branch is fixed by a/|phi|; the exponential is inverted in closed
    form and the result is corrected by re-evaluating the bound at n and
    n - 1.

    :param ~markov_gap_bounds.bounds.data_types.GapCertificate cert: The gap.
    :param ~markov_gap_bounds.bounds.data_types.ObservableSpec obs: The observable norm.
    :param float a: Deviation, positive.
    :param float target_p: Target tail probability, positive.
    :rtype: int
    :raise ~markov_gap_bounds.errors.DomainError: If target_p <= 0 or a < 0.
    :raise ~markov_gap_bounds.errors.InfeasibleError:
        If a = 0, where the bound does not depend on n, or if a is so small
        that the required n exceeds :py:data:`MAX_PLANNED_N`.
    """
    a = float(a)
    target_p = float(target_p)
    if not (a >= 0.0 and math.isfinite(a)):
        raise DomainError("a must be a finite non-negative number, got {!r}.".format(a))
    if not target_p > 0.0:
        raise DomainError("target_p must be positive, got {!r}.".format(target_p))
    if a == 0.0:
        raise InfeasibleError("At a = 0 the bound is the constant {}; no sample size is defined.".format(
            c.A_GAUSS_PREFACTOR))

    bound = TheoremABound(cert, obs)
    ratio = a / obs.norm
    if bound.regime_for(a) is Regime.GAUSSIAN:
        prefactor = c.A_GAUSS_PREFACTOR
        rate = bound.gaussian_rate * ratio ** 2
    else:
        prefactor = c.A_EXP_PREFACTOR
        rate = bound.exponential_rate * (ratio - c.A_EXP_SHIFT * cert.delta0)
    if not rate > 0.0:
        raise InfeasibleError("a = {!r} is too small for the bound to decay with n.".format(a))
    n_closed_form = math.log(prefactor / target_p) / rate
    if not n_closed_form <= MAX_PLANNED_N:
        raise InfeasibleError("The required sample size {!r} exceeds {}.".format(n_closed_form, MAX_PLANNED_N))
    n = max(bound.threshold_n, int(math.ceil(n_closed_form)) if n_closed_form > 0.0 else 1)

    while bound.evaluate(n, a).raw > target_p:
        n += 1
    while n - 1 >= bound.threshold_n and bound.evaluate(n - 1, a).raw <= target_p:
        n -= 1
    log.debug("Planned n=%d (closed form %r, threshold %d)", n, n_closed_form, bound.threshold_n)
    return n
