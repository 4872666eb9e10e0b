import pytest
from hypothesis import given, settings

from core.errors import InvalidInputError, LabelingError
from core.labeling import Labeling, Violation, is_valid, violations
from models import DominationVariant

from tests.strategies import graphs, graphs_with_labelings

PID = DominationVariant.PERFECT_ITALIAN


def test_weight():
    assert Labeling.ones(5).weight() == 5
    assert Labeling.zeros(4).weight() == 0
    assert Labeling.of([1, 0, 1, 0, 1, 0, 1]).weight() == 4


def test_parse_and_format():
    labeling = Labeling.parse("1, 0,2")
    assert labeling.values == (1, 0, 2)
    assert labeling.format() == "1,0,2"


@pytest.mark.parametrize("text", ["1,a,0", "1,3", "-1,0", "1,,0"])
def test_parse_rejects_bad_text(text):
    with pytest.raises(LabelingError):
        Labeling.parse(text)


def test_partition():
    v0, v1, v2 = Labeling.of([2, 0, 1, 0, 2]).partition()
    assert v0 == {1, 3}
    assert v1 == {2}
    assert v2 == {0, 4}


def test_p3_pid_valid_but_not_roman(family):
    p3 = family("path:3")
    labeling = Labeling.of([1, 0, 1])
    assert is_valid(p3, labeling, PID)
    assert not is_valid(p3, labeling, DominationVariant.ROMAN)


def test_pid_rejects_overshoot(family):
    # the centre of a star with three 1-leaves sees weight 3
    assert violations(family("star:3"), Labeling.of([0, 1, 1, 1]), PID) == [Violation(0, 3)]
    assert is_valid(family("star:3"), Labeling.of([0, 1, 1, 1]), DominationVariant.ITALIAN)


def test_violations_all_zeros_on_k2(family):
    assert violations(family("complete:2"), Labeling.zeros(2), PID) == [(0, 0), (1, 0)]


def test_violations_on_p4(family):
    assert violations(family("path:4"), Labeling.of([2, 0, 0, 0]), PID) == [(2, 0), (3, 0)]


def test_size_mismatch_rejected(family):
    with pytest.raises(LabelingError, match="3 vertices"):
        is_valid(family("path:3"), Labeling.ones(4), PID)


def test_domination_rejects_label_two(family):
    with pytest.raises(LabelingError):
        is_valid(family("path:3"), Labeling.of([0, 2, 0]), DominationVariant.DOMINATION)


def test_isolated_zero_fails_every_variant(family):
    empty = family("empty:2")
    for variant in DominationVariant:
        assert violations(empty, Labeling.of([1, 0]), variant) == [(1, 0)]


@given(graphs(max_vertices=9))
@settings(max_examples=50, deadline=None)
def test_all_ones_valid_everywhere(graph):
    for variant in DominationVariant:
        assert is_valid(graph, Labeling.ones(graph.n), variant)


@given(graphs_with_labelings())
@settings(max_examples=200, deadline=None)
def test_variant_implications(case):
    graph, labeling = case
    pid = is_valid(graph, labeling, PID)
    italian = is_valid(graph, labeling, DominationVariant.ITALIAN)
    roman = is_valid(graph, labeling, DominationVariant.ROMAN)
    if pid:
        assert italian
    if roman:
        assert italian
    assert (violations(graph, labeling, PID) == []) == pid


@given(graphs_with_labelings(max_label=1))
@settings(max_examples=100, deadline=None)
def test_zero_one_italian_implies_domination(case):
    graph, labeling = case
    if is_valid(graph, labeling, DominationVariant.ITALIAN):
        assert is_valid(graph, labeling, DominationVariant.DOMINATION)


def test_variant_parse_aliases():
    assert DominationVariant.parse("PID") is PID
    assert DominationVariant.parse("perfect_italian") is PID
    assert DominationVariant.parse("dom") is DominationVariant.DOMINATION
    with pytest.raises(InvalidInputError):
        DominationVariant.parse("total")
