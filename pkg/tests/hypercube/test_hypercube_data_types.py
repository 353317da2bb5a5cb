# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import numpy as np
import pytest

from markov_gap_bounds.errors import DomainError, TableSizeError
from markov_gap_bounds.hypercube.data_types import MAX_ORACLE_SLOTS, MAX_SIMULATION_SLOTS, DenseObservable, \
    Vertex, check_slots


@pytest.mark.parametrize("value", [
    dict({'text': '0110', 'bits': 6, 'slots': [0, 1, 1, 0]}),
    dict({'text': '1000', 'bits': 1, 'slots': [1, 0, 0, 0]}),
    dict({'text': '1', 'bits': 1, 'slots': [1]}),
    dict({'text': '000', 'bits': 0, 'slots': [0, 0, 0]}),
])
def test_vertex(value):
    """
    Test if Vertex() maps slot i to bit i - 1 and back to its string form.
    """
    vertex = Vertex.from_string(value.get('text'))
    assert vertex.n_slots == len(value.get('text'))
    assert vertex.bits == value.get('bits')
    assert int(vertex) == value.get('bits')
    assert [vertex.slot(i) for i in range(1, vertex.n_slots + 1)] == value.get('slots')
    assert str(vertex) == value.get('text')
    assert repr(vertex) == "Vertex('{}')".format(value.get('text'))


def test_vertex_with_slot():
    """
    Test if with_slot() sets a single slot and leaves the original unchanged.
    """
    vertex = Vertex.from_string('0110')
    assert str(vertex.with_slot(1, 1)) == '1110'
    assert str(vertex.with_slot(2, 0)) == '0010'
    assert vertex.with_slot(3, 1) == vertex
    assert str(vertex) == '0110'


def test_vertex_neighbors():
    """
    Test if a vertex has N distinct neighbors at Hamming distance 1.
    """
    vertex = Vertex.from_string('0110')
    neighbors = vertex.neighbors()
    assert sorted(str(v) for v in neighbors) == ['0010', '0100', '0111', '1110']
    assert len(set(neighbors)) == 4
    assert vertex not in neighbors


@pytest.mark.parametrize("value", [
    dict({'n_slots': 4, 'bits': 16}),
    dict({'n_slots': 4, 'bits': -1}),
    dict({'n_slots': 0, 'bits': 0}),
    dict({'n_slots': MAX_SIMULATION_SLOTS + 1, 'bits': 0}),
])
def test_vertex_domain(value):
    """
    Test if words outside {0,1}^N and unsupported dimensions are rejected.
    """
    with pytest.raises(DomainError):
        Vertex(value.get('n_slots'), value.get('bits'))


@pytest.mark.parametrize("text", ['', '0120', 'abc'])
def test_vertex_from_string_domain(text):
    """
    Test if only non-empty bit strings are accepted.
    """
    with pytest.raises(DomainError):
        Vertex.from_string(text)


def test_check_slots():
    """
    Test if dense tables are limited to MAX_ORACLE_SLOTS slots.
    """
    assert check_slots(MAX_ORACLE_SLOTS) == MAX_ORACLE_SLOTS
    with pytest.raises(TableSizeError) as info:
        check_slots(MAX_ORACLE_SLOTS + 1)
    assert info.value.limit == MAX_ORACLE_SLOTS
    assert isinstance(info.value, DomainError)


def test_dense_observable():
    """
    Test the table, mean and uniform norm of a DenseObservable().
    """
    f = DenseObservable(2, [1., -3., 0., 2.])
    assert f.n_slots == 2
    assert f(Vertex(2, 1)) == -3.
    assert f(3) == 2.
    assert f.mean() == 0.
    assert f.sup_norm() == 3.
    assert np.array_equal((f * f).values, [1., 9., 0., 4.])
    with pytest.raises(ValueError):
        f.values[0] = 5.


def test_dense_observable_shape():
    """
    Test if a table of the wrong length is rejected.
    """
    with pytest.raises(DomainError):
        DenseObservable(3, np.zeros(4))


def test_dense_observable_product():
    """
    Test if observables on the same cube multiply pointwise.
    """
    f = DenseObservable(2, [1., 2., 3., 4.])
    g = DenseObservable(2, [0., -1., 0.5, 2.])
    assert (f * g).values.tolist() == [0., -2., 1.5, 8.]
    with pytest.raises(DomainError):
        f * DenseObservable(1, [1., 2.])
    with pytest.raises(DomainError):
        f * 2.
