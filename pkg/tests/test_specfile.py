from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from normtrace.specfile import CodeSpec, SpecError, format_spec, load_spec, parse_spec

SPECS = sorted((Path(__file__).parent.parent / "specs").glob("*.spec"))


def test_parse_basic():
    spec = parse_spec("# c\nq=3 r=2 u=4\nfamily onepoint:23\n7 1  # extra\n")
    assert spec == CodeSpec(3, 2, 4, "onepoint:23", ((7, 1),))
    assert len(spec.monomials()) == 22


@pytest.mark.parametrize(
    "text",
    ["", "q=3 r=2", "q=3 r=2 u=4 q=3", "q=6 r=2 u=1\n0 0", "q=3 r=2 u=3\n0 0", "q=3 r=2 u=4\nfamily cube:3",
     "q=3 r=2 u=4\n0 x", "q=3 r=2 u=4\nfamily full\nfamily full", "q=3 r=2 u=4\n1 0", "q=3 r=2 u=4\n9 0",
     "q=3 r=2 u=4"],
)
def test_invalid_specs(text):
    with pytest.raises(SpecError):
        parse_spec(text).monomials()


@pytest.mark.parametrize("path", SPECS, ids=lambda p: p.name)
def test_fixtures_load(path):
    spec = load_spec(path)
    assert len(spec.monomials()) > 0


pairs = st.lists(st.tuples(st.integers(0, 20), st.integers(0, 20)), max_size=12)
families = st.one_of(st.none(), st.sampled_from(["full", "degree:3", "box:2x5", "onepoint:17"]))


@given(st.integers(2, 9), st.integers(2, 5), st.integers(1, 50), families, pairs)
def test_round_trip(q, r, u, family, ps):
    spec = CodeSpec(q, r, u, family, tuple(sorted(set(ps), key=lambda ab: (ab[1], ab[0]))))
    text = format_spec(spec)
    assert parse_spec(text) == spec
    assert format_spec(parse_spec(text)) == text
