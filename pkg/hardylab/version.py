#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
.. currentmodule:: hardylab.version
.. moduleauthor:: Pat Daburu <pat@daburu.net>

This module contains project version information.
"""

__version__ = '0.1.0'  #: the working version
__release__ = '0.1.0'  #: the release version
