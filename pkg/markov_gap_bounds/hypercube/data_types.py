# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

from enum import Enum

import numpy as np

from ..errors import DomainError, TableSizeError

#: Largest dimension for dense 2^N tables (16M entries).
MAX_ORACLE_SLOTS = 24

#: Largest dimension for vertices of the simulated walk.
MAX_SIMULATION_SLOTS = 63


def check_slots(n_slots, limit=MAX_ORACLE_SLOTS):
    """
    Validate a hypercube dimension.

    :param int n_slots: The dimension N.
    :param int limit: Largest accepted N.
    :rtype: int
    :raise ~markov_gap_bounds.errors.TableSizeError: If N > limit.
    :raise ~markov_gap_bounds.errors.DomainError: If N < 1.
    """
    if int(n_slots) != n_slots or n_slots < 1:
        raise DomainError("n_slots must be an integer >= 1, got {!r}.".format(n_slots))
    if n_slots > limit:
        raise TableSizeError(int(n_slots), limit)
    return int(n_slots)


class ObservableKind(Enum):
    """
    Observables that :py:func:`~markov_gap_bounds.hypercube.operators.build_observable`
    knows how to tabulate.
    """
    RHO = 'rho'                #: proportion of 1's ("polarization")
    INDICATOR = 'indicator'    #: indicator of a vertex set
    PARITY = 'parity'          #: +1/-1 according to the parity of the number of 1's
    CUSTOM = 'custom'          #: caller supplied table


class Vertex(object):
    """
    A vertex of {0,1}^N stored as an unsigned word: slot i (1-based) is
    bit i - 1. The string form lists slots 1..N left to right, so
    ``Vertex.from_string('1000')`` has word 1.

    :param int n_slots: The dimension N.
    :param int bits: The word, in [0, 2^N).
    """
    def __init__(self, n_slots, bits):
        n_slots = check_slots(n_slots, MAX_SIMULATION_SLOTS)
        bits = int(bits)
        if not 0 <= bits < (1 << n_slots):
            raise DomainError("Word {!r} does not fit in {} slots.".format(bits, n_slots))

        #: The dimension N.
        self.n_slots = n_slots

        #: The word.
        self.bits = bits

    @classmethod
    def from_string(cls, text):
        """
        :param str text: Slot values '0'/'1', slot 1 first.
        :rtype: ~markov_gap_bounds.hypercube.data_types.Vertex
        """
        if not text or set(text) - set('01'):
            raise DomainError("Not a bit string: {!r}.".format(text))
        return cls(len(text), sum(1 << i for i, char in enumerate(text) if char == '1'))

    def slot(self, i):
        """
        :param int i: Slot index, 1-based.
        :return: The value (0 or 1) of slot i.
        :rtype: int
        """
        return (self.bits >> (i - 1)) & 1

    def with_slot(self, i, value):
        """
        :param int i: Slot index, 1-based.
        :param int value: The new value (0 or 1).
        :rtype: ~markov_gap_bounds.hypercube.data_types.Vertex
        """
        mask = 1 << (i - 1)
        return Vertex(self.n_slots, (self.bits | mask) if value else (self.bits & ~mask))

    def neighbors(self):
        """
        :return: The N adjacent vertices.
        :rtype: list
        """
        return [Vertex(self.n_slots, self.bits ^ (1 << i)) for i in range(self.n_slots)]

    def __int__(self):
        return self.bits

    def __index__(self):
        return self.bits

    def __eq__(self, other):
        return isinstance(other, Vertex) and (self.n_slots, self.bits) == (other.n_slots, other.bits)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n_slots, self.bits))

    def __str__(self):
        return ''.join(str(self.slot(i)) for i in range(1, self.n_slots + 1))

    def __repr__(self):
        return "Vertex('{}')".format(self)


class DenseObservable(object):
    """
    A real function on {0,1}^N stored as a table indexed by vertex word.

    :param int n_slots: The dimension N.
    :param values: 2^N values.
    """
    def __init__(self, n_slots, values):
        n_slots = check_slots(n_slots)
        values = np.array(values, dtype=float)
        if values.shape != (1 << n_slots,):
            raise DomainError("Expected {} values, got shape {}.".format(1 << n_slots, values.shape))

        #: The dimension N.
        self.n_slots = n_slots

        #: The table (numpy array of length 2^N).
        self.values = values
        self.values.setflags(write=False)

    def __call__(self, vertex):
        return float(self.values[int(vertex)])

    def mean(self):
        """
        :return: The average under the uniform (stationary) law.
        :rtype: float
        """
        return float(np.mean(self.values))

    def sup_norm(self):
        """
        :rtype: float
        """
        return float(np.max(np.abs(self.values)))

    def __mul__(self, other):
        if not isinstance(other, DenseObservable) or other.n_slots != self.n_slots:
            raise DomainError("Only observables on the same cube can be multiplied.")
        return DenseObservable(self.n_slots, self.values * other.values)

    def __repr__(self):
        return 'DenseObservable(n_slots={})'.format(self.n_slots)
