# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

"""
Numerical constants of the concentration inequalities.

Every constant is stored exactly once in :py:data:`CONSTANTS` together with
the statement it comes from; the module level names are bound from this
table and are the only way the evaluators access them.
"""

from __future__ import absolute_import, division, print_function

from collections import OrderedDict, namedtuple

#: A constant and the statement it is taken from.
Constant = namedtuple('Constant', ['value', 'source'])

CONSTANTS = OrderedDict([
    # Theorem A
    ('A_MIN_N_LOG_ARGUMENT', Constant(100.0, "Theorem A, sample size threshold 1 + log 100 / (-log(1 - d0/13))")),
    ('A_MIN_N_GAP_DIVISOR', Constant(13.0, "Theorem A, sample size threshold 1 + log 100 / (-log(1 - d0/13))")),
    ('A_SIMPLIFIED_MIN_N', Constant(60.0, "Theorem A remark, strengthened hypothesis n >= 60/d0")),
    ('A_REGIME_DIVISOR', Constant(3.0, "Theorem A, regime split a/|phi| <= d0/3")),
    ('A_GAUSS_PREFACTOR', Constant(2.488, "Theorem A, gaussian branch prefactor")),
    ('A_GAUSS_GAP_SLOPE', Constant(13.44, "Theorem A, gaussian rate d0/(13.44 d0 + 8.324)")),
    ('A_GAUSS_OFFSET', Constant(8.324, "Theorem A, gaussian rate d0/(13.44 d0 + 8.324)")),
    ('A_EXP_PREFACTOR', Constant(2.624, "Theorem A, exponential branch prefactor")),
    ('A_EXP_RATE', Constant(0.98, "Theorem A, exponential rate 0.98 d0^2/(12 + 13 d0)")),
    ('A_EXP_SHIFT', Constant(0.254, "Theorem A, exponential branch shift a/|phi| - 0.254 d0")),
    ('RATE_DENOMINATOR_OFFSET', Constant(12.0, "Theorems A and B, denominator 12 + 13 d0")),
    ('RATE_DENOMINATOR_SLOPE', Constant(13.0, "Theorems A and B, denominator 12 + 13 d0")),
    # Theorem B
    ('B_MIN_N', Constant(60.0, "Theorem B, n >= 60/d0")),
    ('B_PREFACTOR', Constant(2.637, "Theorem B, prefactor")),
    ('B_CUBIC_FACTOR', Constant(10.0, "Theorem B, cubic correction 10 (1 + 1/d0)^2 |phi|^3 a^3 / U^3")),
    # Doeblin corollary
    ('DOEBLIN_PREFACTOR', Constant(2.5, "Doeblin corollary, prefactor")),
    ('DOEBLIN_RATE_OFFSET', Constant(150.0, "Doeblin corollary, rate beta/(150 + 47 beta)")),
    ('DOEBLIN_RATE_SLOPE', Constant(47.0, "Doeblin corollary, rate beta/(150 + 47 beta)")),
    ('DOEBLIN_MIN_N', Constant(120.0, "Doeblin corollary, n >= 120/beta")),
    ('DOEBLIN_WINDOW_DIVISOR', Constant(2.0, "Doeblin corollary, a <= beta/2")),
    # Bounded variation corollary
    ('BV_PREFACTOR', Constant(2.488, "BV corollary, prefactor")),
    ('BV_RATE_SLOPE', Constant(16.65, "BV corollary, rate 1/(16.65 2^l + 5.12)")),
    ('BV_RATE_OFFSET', Constant(5.12, "BV corollary, rate 1/(16.65 2^l + 5.12)")),
    ('BV_MIN_N', Constant(120.0, "BV corollary, n >= 120 2^l")),
    ('BV_WINDOW_DIVISOR', Constant(3.0, "BV corollary, a < |phi|_BV / 3(2^(l+1) - 1)")),
])

A_MIN_N_LOG_ARGUMENT = CONSTANTS['A_MIN_N_LOG_ARGUMENT'].value
A_MIN_N_GAP_DIVISOR = CONSTANTS['A_MIN_N_GAP_DIVISOR'].value
A_SIMPLIFIED_MIN_N = CONSTANTS['A_SIMPLIFIED_MIN_N'].value
A_REGIME_DIVISOR = CONSTANTS['A_REGIME_DIVISOR'].value
A_GAUSS_PREFACTOR = CONSTANTS['A_GAUSS_PREFACTOR'].value
A_GAUSS_GAP_SLOPE = CONSTANTS['A_GAUSS_GAP_SLOPE'].value
A_GAUSS_OFFSET = CONSTANTS['A_GAUSS_OFFSET'].value
A_EXP_PREFACTOR = CONSTANTS['A_EXP_PREFACTOR'].value
A_EXP_RATE = CONSTANTS['A_EXP_RATE'].value
A_EXP_SHIFT = CONSTANTS['A_EXP_SHIFT'].value
RATE_DENOMINATOR_OFFSET = CONSTANTS['RATE_DENOMINATOR_OFFSET'].value
RATE_DENOMINATOR_SLOPE = CONSTANTS['RATE_DENOMINATOR_SLOPE'].value
B_MIN_N = CONSTANTS['B_MIN_N'].value
B_PREFACTOR = CONSTANTS['B_PREFACTOR'].value
B_CUBIC_FACTOR = CONSTANTS['B_CUBIC_FACTOR'].value
DOEBLIN_PREFACTOR = CONSTANTS['DOEBLIN_PREFACTOR'].value
DOEBLIN_RATE_OFFSET = CONSTANTS['DOEBLIN_RATE_OFFSET'].value
DOEBLIN_RATE_SLOPE = CONSTANTS['DOEBLIN_RATE_SLOPE'].value
DOEBLIN_MIN_N = CONSTANTS['DOEBLIN_MIN_N'].value
DOEBLIN_WINDOW_DIVISOR = CONSTANTS['DOEBLIN_WINDOW_DIVISOR'].value
BV_PREFACTOR = CONSTANTS['BV_PREFACTOR'].value
BV_RATE_SLOPE = CONSTANTS['BV_RATE_SLOPE'].value
BV_RATE_OFFSET = CONSTANTS['BV_RATE_OFFSET'].value
BV_MIN_N = CONSTANTS['BV_MIN_N'].value
BV_WINDOW_DIVISOR = CONSTANTS['BV_WINDOW_DIVISOR'].value
