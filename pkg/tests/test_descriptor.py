import json

import pytest
from hypothesis import given, strategies as st

from stampbasis import descriptor as desc
from stampbasis.errors import MalformedDescriptor, VerificationMismatch
from stampbasis.intbasis import StructuredIntegerBasis


@given(st.integers(3, 200), st.sets(st.integers(1, 10**20), min_size=1, max_size=6))
def test_round_trip(m, elems):
    d = desc.cyclic(m, elems, {"order": 3})
    assert desc.BasisDescriptor.from_json(d.to_json()) == d


def test_big_ints_written_as_strings():
    d = desc.structured(StructuredIntegerBasis(6, (1, 2**60 + 1)))
    data = json.loads(d.to_json())
    assert data["elements"] == [1, str(2**60 + 1)]
    assert desc.BasisDescriptor.from_dict(data).elements == (1, 2**60 + 1)


def test_verify_measures_and_detects_mismatch():
    d = desc.structured(StructuredIntegerBasis(6, (1, 2, 3, 4, 5)),
                        {"order": 2, "essential_count": 2, "essential_sizes": [3, 4]})
    assert desc.verify(d)["order"] == 2
    bad = desc.cyclic(7, (1, 2), {"order": 1})
    with pytest.raises(VerificationMismatch) as err:
        desc.verify(bad)
    assert err.value.field == "order" and err.value.actual == 3
    assert desc.verify(desc.segment((1, 3, 4), 2))["reach"] == 8


@pytest.mark.parametrize("text", [
    "{not json",
    "[]",
    '{"kind": "cyclic", "params": {}, "elements": [1]}',
    '{"kind": "ring", "params": {"modulus": 5}, "elements": [1]}',
    '{"kind": "cyclic", "params": {"modulus": 5}, "elements": [1.5]}',
    '{"kind": "cyclic", "params": {"modulus": 5}, "elements": [1], "claimed": {"colour": 1}}',
])
def test_malformed(text):
    with pytest.raises(MalformedDescriptor):
        d = desc.BasisDescriptor.from_json(text)
        d.basis()
