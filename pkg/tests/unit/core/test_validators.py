"""Tests for exact-value parsing and validation utilities."""

from fractions import Fraction

import pytest

from app.core.shared.exceptions import ConfigurationError, MissingEntryError, ValidationError
from app.core.utils.validators import (
    format_rational,
    parse_rational,
    validate_beta,
    validate_window,
)


@pytest.mark.unit
class TestParseRational:
    @pytest.mark.parametrize(
        "raw, expected",
        [
            ("3/4", Fraction(3, 4)),
            ("-1/2", Fraction(-1, 2)),
            (" 6 / 8 ", Fraction(3, 4)),
            ("7", Fraction(7)),
            (5, Fraction(5)),
            (Fraction(2, 3), Fraction(2, 3)),
        ],
    )
    def test_accepts_exact_values(self, raw, expected):
        assert parse_rational(raw) == expected

    @pytest.mark.parametrize("raw", [0.5, "1.5", "1/0", "abc", True, None])
    def test_rejects_inexact_or_malformed(self, raw):
        with pytest.raises(ValidationError):
            parse_rational(raw)

    def test_error_names_field(self):
        with pytest.raises(ValidationError, match="stability.k"):
            parse_rational("x", field="stability.k")


@pytest.mark.unit
class TestFormatRational:
    def test_integer_has_no_denominator(self):
        assert format_rational(Fraction(4, 2)) == "2"

    def test_fraction_is_reduced(self):
        assert format_rational(Fraction(-6, 8)) == "-3/4"


@pytest.mark.unit
class TestValidateBeta:
    def test_valid_vector(self):
        assert validate_beta([1, 0], 2) == (1, 0)

    def test_wrong_length(self):
        with pytest.raises(ValidationError, match="expected 2 components"):
            validate_beta([1], 2)

    def test_negative_component(self):
        with pytest.raises(ValidationError):
            validate_beta([-1], 1)


@pytest.mark.unit
class TestValidateWindow:
    def test_valid_window(self):
        assert validate_window([-3, 3]) == (-3, 3)

    def test_reversed_window(self):
        with pytest.raises(ValidationError, match="exceeds"):
            validate_window([2, 1])


@pytest.mark.unit
class TestExceptions:
    def test_configuration_error_prefixes_field(self):
        error = ConfigurationError("bad", field="model.omega")
        assert error.message == "model.omega: bad"
        assert error.field == "model.omega"
        assert isinstance(error, ValidationError)

    def test_missing_entry_names_class(self):
        error = MissingEntryError("P", 4, (1,), "outside stored window [0, 3]")
        assert error.n == 4
        assert error.beta == (1,)
        assert "(n=4, beta=[1])" in error.message
