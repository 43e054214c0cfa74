# -*- coding: utf-8 -*-
"""
This package provides the integration tests of the nbspec command line and census tables.
"""
