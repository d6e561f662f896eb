#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/2/26 by Pat Daburu
"""
.. currentmodule:: hardylab.errors
.. moduleauthor:: Pat Daburu <pat@daburu.net>

The base of every error this library raises.  Each module declares its own
subclasses next to the code that raises them: a measure whose weights don't
sum to `1`, a parameter outside its family's range, samples that overflow on
a circle, a bracket that holds no critical exponent.  Catch
:py:class:`HardylabException` to catch them all.
"""


class HardylabException(Exception):
    """
    The base exception for the numerical and configuration errors raised by
    :py:mod:`hardylab`.  It keeps the exception that caused it, if any.
    """
    def __init__(self, message: str, inner: Exception = None):
        """

        :param message: the exception message
        :param inner: the exception that caused this exception
        """
        super().__init__(message)
        self._message = message
        self._inner = inner

    @property
    def message(self) -> str:
        """
        Get the exception message.
        """
        return self._message

    @property
    def inner(self) -> Exception or None:
        """
        Get the exception that caused this exception.
        """
        return self._inner
