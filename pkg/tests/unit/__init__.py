# -*- coding: utf-8 -*-
"""
This package provides the unit tests of the nbspec modules.
"""
