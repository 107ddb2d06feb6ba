"""Monomial ideal powers, good/bad classification and Ratliff-Rush closures."""

from ._monorr import (
    BadIdealError,
    Ideal,
    NotMPrimaryError,
    ParseError,
    box_ideal,
    classify,
    closure,
    colon,
    colon_monomial,
    format,
    freiman,
    is_ratliff_rush,
    is_very_good,
    oracle,
    parse,
    profile,
    stabilize,
    verify_box_decomposition,
)

__version__ = "0.1.0"


def ideal(text):
    """Parse text and return only the ideal."""
    return parse(text)[1]


__all__ = [
    "BadIdealError",
    "Ideal",
    "NotMPrimaryError",
    "ParseError",
    "box_ideal",
    "classify",
    "closure",
    "colon",
    "colon_monomial",
    "format",
    "freiman",
    "ideal",
    "is_ratliff_rush",
    "is_very_good",
    "oracle",
    "parse",
    "profile",
    "stabilize",
    "verify_box_decomposition",
]
