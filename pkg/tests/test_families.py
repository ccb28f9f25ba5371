import pytest
from hypothesis import given
from hypothesis import strategies as st

from domcrit.constructions import build_B_chain, build_H_example, build_J, build_R
from domcrit.families import (
    FamilySpec,
    FamilySpecError,
    build_family,
    parse_family_spec,
    seed_graph,
)
from domcrit.graph import cycle_graph
from domcrit.io import graph6_encode


def test_parse_simple():
    spec = parse_family_spec("R:m=2")
    assert spec == FamilySpec("R", (("m", "2"),))
    assert spec.int_param("m") == 2
    assert parse_family_spec("B:k=3,t=2").params == (("k", "3"), ("t", "2"))
    assert parse_family_spec("R").int_param("m") == 2


def test_parse_seed_names():
    assert parse_family_spec("C7") == FamilySpec("C", (("n", "7"),))
    assert parse_family_spec("Hex5") == FamilySpec("Hex", (("t", "5"),))
    assert build_family("C7").graph == cycle_graph(7)


def test_parse_chain():
    spec = parse_family_spec("chain:R:m=2,J:t=2")
    assert spec.family == "chain"
    assert [p.family for p in spec.parts] == ["R", "J"]
    spec = parse_family_spec("chain:R,Q:h=Hex4,J")
    assert [p.to_text() for p in spec.parts] == ["R", "Q:h=Hex4", "J"]


SPECS = [
    "R:m=2",
    "J:t=3",
    "A:h=Hex5",
    "corona:h=C4",
    "B:k=3,t=2",
    "thm16:k=7",
    "Qn:n=1,h=Hex4",
    "chain:R:m=2,J:t=2",
    "chain:R:m=3,Q:h=Hex4,R:m=2",
    "g6:A_",
]


@pytest.mark.parametrize("text", SPECS)
def test_to_text_round_trip(text):
    spec = parse_family_spec(text)
    assert spec.to_text() == text
    assert parse_family_spec(spec.to_text()) == spec


@given(st.lists(st.sampled_from(["R:m=2", "R:m=3", "J:t=2", "A:h=Hex4", "Q", "J"]), min_size=1, max_size=4))
def test_chain_text_round_trip(parts):
    text = "chain:" + ",".join(parts)
    assert parse_family_spec(parse_family_spec(text).to_text()) == parse_family_spec(text)


@pytest.mark.parametrize(
    "text",
    ["", "nope:x=1", "R:q=2", "R:m=2,m=3", "R:m", "chain:", "chain:C:n=5", "chain:m=2,R", "R:m=x", "R:m=1", "g6:"],
)
def test_invalid_specs(text):
    with pytest.raises(FamilySpecError):
        build_family(text)


def test_build_matches_constructors():
    assert build_family("R:m=2").graph == build_R(2).graph
    assert build_family("J:t=2").pointed == build_J(2)
    assert build_family("B:k=4,t=2").graph == build_B_chain(4, 2)
    assert build_family("Hex6").graph == build_H_example(6)
    assert seed_graph("g6-" + graph6_encode(cycle_graph(5))) == cycle_graph(5)
    with pytest.raises(FamilySpecError):
        seed_graph("X9")
