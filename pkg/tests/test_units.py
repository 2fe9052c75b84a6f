import math

import pytest

from qcrossover import Duration, DomainError


@pytest.mark.parametrize("text,seconds", [
    ("17ms", 0.017), ("33ns", 33e-9), ("7 ns", 7e-9), ("440ms", 0.44),
    ("1.5e-3s", 1.5e-3), ("2us", 2e-6), ("3", 3.0), ("0s", 0.0),
])
def test_parse(text, seconds):
    assert Duration.parse(text).seconds == seconds


@pytest.mark.parametrize("text", ["17MS", "3 sec", "5 μs", "1h", "ms", "", "1..2s"])
def test_parse_rejects(text):
    with pytest.raises(DomainError):
        Duration.parse(text)


@pytest.mark.parametrize("bad", [-1.0, math.inf, math.nan, "1s", True])
def test_construction_rejects(bad):
    with pytest.raises(DomainError):
        Duration(bad)


def test_negative_text_rejected():
    with pytest.raises(DomainError, match="non-negative"):
        Duration.parse("-1ms")


@pytest.mark.parametrize("seconds", [0.017, 33e-9, 7e-9, 0.44, 1.65, 1.6500000000000001, 8.757e3, 1e-12, 0.0])
def test_text_round_trip(seconds):
    d = Duration(seconds)
    assert Duration.parse(d.to_text()) == d


def test_text_is_short_for_plain_values():
    assert Duration(0.017).to_text() == "17ms"
    assert Duration(33e-9).to_text() == "33ns"
    assert Duration(2.0).to_text() == "2s"


def test_arithmetic():
    assert (Duration(0.017) * 100).seconds == pytest.approx(1.7)
    assert (Duration(0.44) / 10).seconds == pytest.approx(0.044)
    assert Duration(1.0) < Duration(2.0)
