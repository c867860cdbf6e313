"""US state codes and free-text location resolution.

The corpus is restricted to the 50 states plus DC. Raw tweet locations are
free-form strings ("New York, USA", "Brooklyn, NY", "Texas"); `resolve_state`
maps them onto a USPS code or returns None for foreign, ambiguous, or
unrecognizable locations.
"""
from __future__ import annotations

import re

STATE_NAMES: dict[str, str] = {
    "AL": "Alabama",
    "AK": "Alaska",
    "AZ": "Arizona",
    "AR": "Arkansas",
    "CA": "California",
    "CO": "Colorado",
    "CT": "Connecticut",
    "DE": "Delaware",
    "FL": "Florida",
    "GA": "Georgia",
    "HI": "Hawaii",
    "ID": "Idaho",
    "IL": "Illinois",
    "IN": "Indiana",
    "IA": "Iowa",
    "KS": "Kansas",
    "KY": "Kentucky",
    "LA": "Louisiana",
    "ME": "Maine",
    "MD": "Maryland",
    "MA": "Massachusetts",
    "MI": "Michigan",
    "MN": "Minnesota",
    "MS": "Mississippi",
    "MO": "Missouri",
    "MT": "Montana",
    "NE": "Nebraska",
    "NV": "Nevada",
    "NH": "New Hampshire",
    "NJ": "New Jersey",
    "NM": "New Mexico",
    "NY": "New York",
    "NC": "North Carolina",
    "ND": "North Dakota",
    "OH": "Ohio",
    "OK": "Oklahoma",
    "OR": "Oregon",
    "PA": "Pennsylvania",
    "RI": "Rhode Island",
    "SC": "South Carolina",
    "SD": "South Dakota",
    "TN": "Tennessee",
    "TX": "Texas",
    "UT": "Utah",
    "VT": "Vermont",
    "VA": "Virginia",
    "WA": "Washington",
    "WV": "West Virginia",
    "WI": "Wisconsin",
    "WY": "Wyoming",
    "DC": "District of Columbia",
}

STATE_CODES: frozenset[str] = frozenset(STATE_NAMES)

_NAME_TO_CODE: dict[str, str] = {name.lower(): code for code, name in STATE_NAMES.items()}
_NAME_TO_CODE["washington dc"] = "DC"
_NAME_TO_CODE["washington d c"] = "DC"

# Country qualifiers that carry no state information.
_COUNTRY_TOKENS = frozenset({"usa", "us", "u s", "u s a", "united states", "united states of america", "america"})

_PUNCT_RE = re.compile(r"[.’']")
_SPACE_RE = re.compile(r"\s+")


class UnknownState(ValueError):
    """Raised when a caller names a state outside the 50+DC code set."""

    def __init__(self, code: str):
        super().__init__(f"unknown state code: {code!r}")
        self.code = code


def is_state_code(code: str) -> bool:
    return code in STATE_CODES


def require_state_code(code: str) -> str:
    if code not in STATE_CODES:
        raise UnknownState(code)
    return code


def _clean(part: str) -> str:
    part = _PUNCT_RE.sub("", part)
    return _SPACE_RE.sub(" ", part).strip().lower()


def resolve_state(location: str | None) -> str | None:
    """Map a free-form location string to a USPS state code, or None.

    Recognizes bare codes ("NY"), full names ("New York"), "City, ST"
    suffixes ("Brooklyn, NY"), and comma-qualified forms ("New York, USA").
    A trailing 2-letter code wins over earlier parts so "Washington, DC"
    resolves to DC, not WA. Distinct codes from different parts make the
    location ambiguous and it is dropped.
    """
    if not location:
        return None
    parts = [_clean(p) for p in location.split(",")]
    parts = [p for p in parts if p and p not in _COUNTRY_TOKENS]
    if not parts:
        return None

    # "City, ST" convention: a trailing code is authoritative.
    last = parts[-1]
    if len(last) == 2 and last.upper() in STATE_CODES:
        return last.upper()

    found: set[str] = set()
    for part in parts:
        if len(part) == 2 and part.upper() in STATE_CODES:
            found.add(part.upper())
        elif part in _NAME_TO_CODE:
            found.add(_NAME_TO_CODE[part])
    if len(found) == 1:
        return found.pop()
    return None
