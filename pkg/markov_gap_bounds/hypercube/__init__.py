# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers
from __future__ import absolute_import, division, print_function
