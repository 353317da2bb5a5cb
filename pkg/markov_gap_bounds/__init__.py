#!/usr/bin/env python
# -*- coding: utf-8 -*-
from __future__ import absolute_import, division, print_function
from .version import version as __version__  # noqa: F401

from .bounds.certificates import bernoulli_certificate, doeblin_gap, hypercube_gap, lemma_gap, min_ell  # noqa: F401
from .bounds.concentration import bv_corollary_bound, doeblin_corollary_bound, min_n_theorem_a  # noqa: F401
from .bounds.concentration import plan_required_n, theorem_a_bound, theorem_b_bound  # noqa: F401
from .bounds.data_types import GapCertificate, GapFamily, LemmaInput, NormFamily, ObservableSpec  # noqa: F401
from .bounds.response_types import BoundResult, Precondition, Regime  # noqa: F401
