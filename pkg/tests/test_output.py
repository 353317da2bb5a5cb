# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import io

import numpy as np
import pytest

from markov_gap_bounds.output import dumps_json, format_value, load_json, write_csv, write_json


@pytest.mark.parametrize("value", [
    dict({'input': True, 'text': 'true'}),
    dict({'input': np.bool_(False), 'text': 'false'}),
    dict({'input': 42, 'text': '42'}),
    dict({'input': np.int64(-7), 'text': '-7'}),
    dict({'input': 0.1, 'text': '0.10000000000000001'}),
    dict({'input': 0.5, 'text': '0.5'}),
    dict({'input': float('inf'), 'text': 'inf'}),
    dict({'input': 'gaussian', 'text': 'gaussian'}),
])
def test_format_value(value):
    """
    Test the CSV text of booleans, integers, 17 digit floats and strings.
    """
    assert format_value(value.get('input')) == value.get('text')


def test_write_csv():
    """
    Test if write_csv() writes the header and rows with '\\n' line endings.
    """
    stream = io.StringIO()
    write_csv(stream, ('a', 'p_hat', 'regime'), [(0.25, 0, 'gaussian'), (0.5, 1., 'exponential')])
    assert stream.getvalue() == 'a,p_hat,regime\n0.25,0,gaussian\n0.5,1,exponential\n'


def test_dumps_json():
    """
    Test if dumps_json() sorts keys, converts numpy values and ends with a newline.
    """
    text = dumps_json({'b': np.float64(0.1), 'a': np.arange(3), 'c': np.bool_(True)})
    assert text == '{\n  "a": [\n    0,\n    1,\n    2\n  ],\n  "b": 0.1,\n  "c": true\n}\n'


def test_json_round_trip():
    """
    Test if floats survive writing and loading unchanged.
    """
    data = {'delta0': 1. / 15., 'rows': [[1. / 3., 2]], 'family': 'hypercube'}
    stream = io.StringIO()
    write_json(stream, data)
    stream.seek(0)
    assert load_json(stream) == data
