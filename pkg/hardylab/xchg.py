#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Created on 10/2/26 by Pat Daburu
"""
.. currentmodule:: hardylab.xchg
.. moduleauthor:: Pat Daburu <pat@daburu.net>

Document exchange... data exchange... it all starts here!
"""
from abc import ABC, abstractmethod
from typing import Any, Mapping
from .types import InvalidTypeException, pycls

#: the version of the exported document layout
SCHEMA_VERSION: str = '1.0'


class Exportable(ABC):
    """
    Objects that can be exported as and loaded from simple data types
    should extend `Exportable` to make their intentions clear and their
    methods consistent.
    """
    @abstractmethod
    def export(self) -> Mapping[str, Any]:
        """
        Export the instance as a mapping of simple types.

        :return: the mapping
        """

    @classmethod
    @abstractmethod
    def load(cls, data: Mapping[str, Any]) -> Any:
        """
        Create an instance from a mapping.

        :param data: the data
        :return: the instance
        """


def load_any(data: Mapping[str, Any]) -> Any:
    """
    Revive an exported object from the `__type__` it carries.

    :param data: the exported mapping
    :return: the instance (or `None` if there is no data)
    :raises InvalidTypeException: if the mapping names no `Exportable` type
    """
    # If we didn't receive any data...
    if not data:
        # ...then the answer is nothing.
        return None
    try:
        _cls = pycls(data['__type__'])
    except KeyError:
        raise InvalidTypeException("The mapping carries no '__type__'.")
    if not (isinstance(_cls, type) and issubclass(_cls, Exportable)):
        raise InvalidTypeException(f"{data['__type__']} is not exportable.")
    return _cls.load(data)


def complex_pair(value: complex) -> list:
    """
    Get the `[re, im]` pair that stands for a complex number in documents.

    :param value: the complex number
    :return: the pair
    """
    value = complex(value)
    return [value.real, value.imag]


def from_pair(pair) -> complex:
    """
    Get the complex number an `[re, im]` pair (or a plain real) stands for.

    :param pair: the pair
    :return: the complex number
    """
    if isinstance(pair, (int, float)):
        return complex(pair)
    return complex(pair[0], pair[1])
