# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

"""
CSV and JSON writers for the artifacts of the command line tool.

Floats are written with 17 significant digits in CSV and with Python's
shortest round-trip representation in JSON, with '.' as decimal point in
both. The same data always gives the same bytes.
"""

from __future__ import absolute_import, division, print_function

import csv
import json
import numbers

import numpy as np


def format_value(value):
    """
    :return: The CSV cell text of a value.
    :rtype: str
    """
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, numbers.Integral):
        return str(int(value))
    if isinstance(value, numbers.Real):
        return '{:.17g}'.format(float(value))
    return str(value)


def write_csv(stream, columns, rows):
    """
    :param stream: Text stream opened with ``newline=''``.
    :param columns: Header cells.
    :param rows: Iterable of tuples in ``columns`` order.
    """
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(value) for value in row])


def _plain(value):
    if isinstance(value, dict):
        return {str(key): _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return [_plain(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(value)
    return value


def dumps_json(data):
    """
    :param data: Dicts, lists and numbers, numpy scalars and arrays included.
    :return: Indented JSON text with sorted keys and a final newline.
    :rtype: str
    """
    return json.dumps(_plain(data), indent=2, sort_keys=True) + '\n'


def write_json(stream, data):
    """
    Write :py:func:`dumps_json` of ``data`` to a text stream.
    """
    stream.write(dumps_json(data))


def load_json(stream):
    """
    :param stream: Text stream.
    :rtype: object
    """
    return json.load(stream)
