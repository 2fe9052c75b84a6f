import pytest
from hypothesis import given, strategies as st

from qcrossover import format_count, format_duration
from qcrossover.formatting import YEAR, parse_count_display, parse_duration_display, round_sig


@pytest.mark.parametrize("seconds,text", [
    (8757.6, "2.4 hours"),
    (2.766e7, "320 days"),
    (2.766e10, "880 years"),
    (8.76e4, "1.0 day"),
    (0, "0 seconds"),
    (59.9, "60 seconds"),
    (60, "1.0 minute"),
    (0.5, "0.50 seconds"),
    (1.0, "1.0 second"),
    (3600 * 1.04, "1.0 hour"),
    (YEAR * 1000 * 2000, "2000 millennia"),
])
def test_format_duration(seconds, text):
    assert format_duration(seconds) == text


def test_year_is_julian():
    assert YEAR == 3.15576e7
    assert format_duration(0.88 * YEAR) == "320 days"
    assert format_duration(8.77 * YEAR) == "8.8 years"


@pytest.mark.parametrize("value,text", [
    (5.1515e5, "5.2×10^5"), (1, "1.0×10^0"), (6.2857e7, "6.3×10^7"),
    (9.96e5, "1.0×10^6"), (7.2e2, "7.2×10^2"), (0.05, "5.0×10^-2"),
])
def test_format_count(value, text):
    assert format_count(value) == text


def test_format_count_ascii():
    assert format_count(5.1515e5, unicode=False) == "5.2x10^5"


def test_format_count_rejects_nonpositive():
    with pytest.raises(ValueError):
        format_count(0)


def test_ties_and_float_noise():
    assert str(round_sig(165)) == "1.7E+2"
    assert str(round_sig(5.5 * 30e-6 * 1e6)) == "1.7E+2"
    assert str(round_sig(0.125)) == "0.13"


@given(st.floats(1.0, 1e16))
def test_duration_display_within_rounding_band(seconds):
    back = parse_duration_display(format_duration(seconds))
    assert abs(back - seconds) / seconds <= 0.05


@given(st.floats(1e-6, 1e30))
def test_count_display_within_rounding_band(value):
    back = parse_count_display(format_count(value))
    assert abs(back - value) / value <= 0.05
