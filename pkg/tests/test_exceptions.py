#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest
from hardylab.config import BadConfigException, THREADS_ENV, max_workers
from hardylab.errors import HardylabException
from hardylab.herglotz import InvalidMeasureException
from hardylab.means import NoBracketException
from hardylab.series import ZeroConstantTermException
from hardylab.verify import NotZeroA2Exception
from hardylab.zoo import NotInOmegaException, ParamOutOfRangeException


@pytest.mark.parametrize('exception', [
    BadConfigException,
    InvalidMeasureException,
    NoBracketException,
    NotInOmegaException,
    NotZeroA2Exception,
    ParamOutOfRangeException,
    ZeroConstantTermException
])
def test_exceptions_carry_message_and_inner(exception):
    """
    Arrange/Act: Raise a library exception with an inner exception.
    Assert: It is a `HardylabException` that keeps both.

    :param exception: the exception type
    """
    inner = ValueError('inner')
    with pytest.raises(HardylabException) as info:
        raise exception('outer', inner=inner)
    assert info.value.message == 'outer'
    assert info.value.inner is inner
    assert str(info.value) == 'outer'


@pytest.mark.parametrize('value', ['zero', '0', '-2'])
def test_max_workers_bad_environment(monkeypatch, value):
    """
    Arrange: Set the thread count to something that isn't a positive integer.
    Act: Ask for the number of workers.
    Assert: The call raises `BadConfigException`.

    :param monkeypatch: the monkeypatch fixture
    :param value: the environment value
    """
    monkeypatch.setenv(THREADS_ENV, value)
    with pytest.raises(BadConfigException):
        max_workers()


@pytest.mark.parametrize('value,expected', [(None, 1), ('4', 4)])
def test_max_workers(monkeypatch, value, expected):
    """
    Arrange: Set (or clear) the thread count.
    Act: Ask for the number of workers.
    Assert: The count comes back (`1` when unset).

    :param monkeypatch: the monkeypatch fixture
    :param value: the environment value
    :param expected: the expected count
    """
    if value is None:
        monkeypatch.delenv(THREADS_ENV, raising=False)
    else:
        monkeypatch.setenv(THREADS_ENV, value)
    assert max_workers() == expected
