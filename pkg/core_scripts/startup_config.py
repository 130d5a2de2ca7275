#!/usr/bin/env python
"""
startup_config

Startup configuration utilities

"""
from __future__ import absolute_import

import os
import random

import numpy as np


def set_random_seed(random_seed):
    """ rng = set_random_seed(random_seed)

    Set the random_seed for numpy and python, and return a numpy Generator
    seeded with the same value

    input
    -----
      random_seed: integer random seed
    """
    random.seed(random_seed)
    np.random.seed(random_seed)
    os.environ['PYTHONHASHSEED'] = str(random_seed)
    return np.random.default_rng(random_seed)
