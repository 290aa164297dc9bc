from fractions import Fraction

import pytest

from pvlab import ParseError
from pvlab.rationals import format_rate, format_rational, parse_probability, parse_rational

F = Fraction


class TestParseRational:
    def test_slash_form(self):
        assert parse_rational("3/8") == F(3, 8)

    def test_decimal_form(self):
        assert parse_rational("0.25") == F(1, 4)

    def test_integer(self):
        assert parse_rational("1") == 1

    def test_scientific(self):
        assert parse_rational("2e-3") == F(1, 500)

    def test_whitespace(self):
        assert parse_rational(" 1/3 ") == F(1, 3)

    @pytest.mark.parametrize("bad", ["", "1/0", "abc", "nan", "inf", "1/2/3"])
    def test_rejects(self, bad):
        with pytest.raises(ParseError):
            parse_rational(bad)


class TestParseProbability:
    def test_in_range(self):
        assert parse_probability("1/2") == F(1, 2)

    @pytest.mark.parametrize("bad", ["-1/4", "5/4", "2"])
    def test_out_of_range(self, bad):
        with pytest.raises(ParseError):
            parse_probability(bad)


class TestFormat:
    def test_round_trip(self):
        for v in [F(0), F(1), F(3, 8), F(999, 2000)]:
            assert parse_rational(format_rational(v)) == v

    def test_zero_and_one_compact(self):
        assert format_rational(F(0)) == "0"
        assert format_rational(F(1)) == "1"

    def test_rate_digits(self):
        assert format_rate(0.25) == "0.25"
        assert len(format_rate(1 / 3).replace("0.", "")) == 12

    def test_rate_inf(self):
        assert format_rate(float("inf")) == "inf"
