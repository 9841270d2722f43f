import math
from fractions import Fraction

import pytest

from sparsedet.logmag import LogMagnitude


def test_of_and_format():
    assert LogMagnitude.of(1000).format(5) == "1.0000e3"
    assert LogMagnitude.of(10**500).format(3) == "1.00e500"
    assert LogMagnitude.of(Fraction(1, 4)).to_float() == pytest.approx(0.25)
    assert LogMagnitude.of(0).is_zero


def test_format_carries_rounding_into_exponent():
    assert LogMagnitude.of(9.99999).format(3) == "1.00e1"


def test_arithmetic_in_log_domain():
    a = LogMagnitude.of(3)
    assert (a * a).to_float() == pytest.approx(9)
    assert (a ** 1000).log10 == pytest.approx(1000 * math.log10(3))
    assert (LogMagnitude.of(12) / LogMagnitude.of(4)).to_float() == pytest.approx(3)
    assert LogMagnitude.power(0, 0) == LogMagnitude.one()
    assert LogMagnitude.power(0, 2).is_zero


def test_ordering():
    assert LogMagnitude.zero() < LogMagnitude.of(1e-300)
    assert LogMagnitude.of(2) < LogMagnitude.of(3)
    assert max(LogMagnitude.of(5), LogMagnitude.of(10**400)).log10 == pytest.approx(400)


def test_sci():
    m, e = LogMagnitude.of(3.636e238).sci()
    assert e == 238 and m == pytest.approx(3.636)
