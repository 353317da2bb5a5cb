# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function
from markov_gap_bounds.simulation import replica_generator
import pytest


def pytest_addoption(parser):
    """
    Register command line options
    """
    parser.addoption("--seed", action="store", type=int, default=20240501,
                     help="Master seed of the randomized tests.")


def _get_seed(config):
    """
    Get the master seed to be used for the tests.
    """
    return config.getoption("--seed")


def pytest_report_header(config):
    """
    Add extra information to test report header
    """
    return "Master seed: " + str(_get_seed(config))


@pytest.fixture(scope="session")
def seed(request):
    return _get_seed(request.config)


@pytest.fixture
def rng(seed):
    # A fresh stream per test, independent of the test order
    return replica_generator(seed, 0)
