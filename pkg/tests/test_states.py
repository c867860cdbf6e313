import pytest

from tweetpulse.states import (
    STATE_CODES,
    UnknownState,
    is_state_code,
    require_state_code,
    resolve_state,
)


def test_all_codes_are_two_letter_upper():
    assert len(STATE_CODES) == 51  # 50 states + DC
    assert all(len(c) == 2 and c.isupper() for c in STATE_CODES)


@pytest.mark.parametrize(
    "raw,expected",
    [
        ("Philadelphia, PA", "PA"),
        ("pa", "PA"),
        ("New York", "NY"),
        ("new york, usa", "NY"),
        ("Washington, D.C.", "DC"),
        ("Trenton, New Jersey", "NJ"),
        ("NY, USA", "NY"),
    ],
)
def test_resolve_state_accepts_common_forms(raw, expected):
    assert resolve_state(raw) == expected


@pytest.mark.parametrize("raw", ["", None, "Middle of Nowhere", "Canada", "Earth"])
def test_resolve_state_rejects_unknown(raw):
    assert resolve_state(raw) is None


def test_require_state_code_passes_through():
    assert require_state_code("GA") == "GA"


def test_require_state_code_raises_with_code_attached():
    with pytest.raises(UnknownState) as err:
        require_state_code("ZZ")
    assert err.value.code == "ZZ"
    assert not is_state_code("ZZ")
