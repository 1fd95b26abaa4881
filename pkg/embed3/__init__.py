# -*- coding: utf-8 -*-
"""
Combinatorial certificates for embeddings of 2-dimensional simplicial complexes in
3-space.

The following APIs should remain stable for front ends:

* embed3.pipeline.decide
* embed3.pipeline.Verdict
* embed3.complex
* embed3.matroid
* embed3.constants
* embed3.errors
* embed3.config.main

"""

__version__ = "0.3.0"
__author__ = "The embed3 developers"
