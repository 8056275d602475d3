import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sunitgraph.errors import DenominatorNotSOnly, DuplicatePoints, EmptySet, VerificationFailed
from sunitgraph.graphcore import Graph, complete_graph, has_triangle, path
from sunitgraph.sintring import PrimeSet
from sunitgraph.unitgraph import (
    Representation,
    are_equivalent,
    build_graph,
    canonical_values,
    canonicalize,
)

S2 = PrimeSet.of([2])
S3 = PrimeSet.of([3])
S23 = PrimeSet.of([2, 3])


def test_build_graph_examples():
    assert build_graph(S23, [0, 1, 3]) == complete_graph(3)
    assert build_graph(S2, [0, 1, 3]) == path(3)
    with pytest.raises(DuplicatePoints):
        build_graph(S2, [1, 1])
    with pytest.raises(DenominatorNotSOnly):
        build_graph(S2, [0, Fraction(1, 3)])


def test_build_graph_with_fractions():
    G = build_graph(S23, [0, Fraction(1, 6), Fraction(7, 6), 1])
    assert G.edge_list() == [(0, 1), (0, 3), (1, 2), (2, 3)]


@settings(max_examples=50)
@given(st.lists(st.integers(-200, 200), min_size=3, max_size=9, unique=True))
def test_odd_prime_sets_give_triangle_free_graphs(A):
    assert not has_triangle(build_graph(S3, A))
    assert not has_triangle(build_graph(PrimeSet.of([3, 5, 7]), A))


def test_canonicalize_examples():
    assert canonical_values(S2, [3, 5, 9]) == [0, 1, 3]
    assert canonical_values(S2, [6, 10, 12]) == [0, 1, 3]
    assert canonical_values(S23, [Fraction(7, 2)]) == [0]
    assert [str(x) for x in canonicalize(S23, [5, 2, -1])] == ["0", "1", "2"]
    with pytest.raises(EmptySet):
        canonical_values(S2, [])


def test_equivalence_examples():
    assert not are_equivalent(S2, [0, 1], [0, 1, 2])
    assert not are_equivalent(S2, [0, 1, 3], [0, 1, 4])


def test_no_small_affine_map_between_inequivalent_sets():
    A, B = [0, 1, 3], [0, 1, 4]
    for e in range(-8, 9):
        for sign in (1, -1):
            u = sign * Fraction(2) ** e
            image = sorted(u * a for a in A)
            shift = B[0] - image[0]
            assert sorted(x + shift for x in image) != B


units23 = st.builds(
    lambda s, a, b: s * Fraction(2) ** a * Fraction(3) ** b,
    st.sampled_from([1, -1]),
    st.integers(-5, 5),
    st.integers(-5, 5),
)


@given(
    st.lists(st.integers(-10**4, 10**4), min_size=1, max_size=7, unique=True),
    units23,
    st.builds(Fraction, st.integers(-999, 999), st.sampled_from([1, 2, 3, 4, 6, 9, 72])),
)
def test_affine_images_are_equivalent(A, u, b):
    B = [u * a + b for a in A]
    assert are_equivalent(S23, A, B)
    assert canonical_values(S23, A) == canonical_values(S23, B)
    assert build_graph(S23, A) == build_graph(S23, B)


@given(st.lists(st.integers(-50, 50), min_size=2, max_size=6, unique=True))
def test_canonical_form_is_idempotent_and_normalised(A):
    c = canonical_values(S23, A)
    assert canonical_values(S23, c) == c
    assert c[0] == 0 and c == sorted(c)


def _related_by_search(A, B, units):
    for u in units:
        image = sorted(u * a for a in A)
        shift = B[0] - image[0]
        if [x + shift for x in image] == B:
            return True
    return False


def test_equivalence_agrees_with_brute_force_on_small_sets():
    units = [s * Fraction(2) ** e for e in range(-4, 5) for s in (1, -1)]
    triples = [list(t) for t in itertools.combinations(range(9), 3)]
    for A in triples[:25]:
        for B in triples:
            assert _related_by_search(A, B, units) == are_equivalent(S2, A, B), (A, B)


def test_representation_json_and_verify():
    C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    rep = Representation.from_values(PrimeSet.of([11]), [0, 1, 12, 11], C4)
    assert rep.is_valid()
    again = Representation.from_json(rep.to_json())
    assert again == rep
    assert rep.to_json()["points"] == ["0", "1", "12", "11"]
    bad = Representation.from_values(S23, [0, 1, 3], path(3))
    with pytest.raises(VerificationFailed):
        bad.verify()
