import math

import numpy as np
import pytest
import scipy.linalg
from oracles import naive_girth

from twistcode import graphs
from twistcode.errors import ParseError, ValidationError
from twistcode.graphs import (
    Graph,
    complete,
    cycle,
    cycle_space_dimension,
    format_graph,
    girth,
    is_regular,
    parse_graph,
    path,
    petersen,
    random_graph,
    random_regular,
    second_eigenvalue,
    second_eigenvalue_abs,
)


def test_neighbors():
    assert complete(4).neighbors(0) == (1, 2, 3)
    assert path(3).neighbors(1) == (0, 2)
    assert Graph(3, [(0, 1)]).neighbors(2) == ()
    with pytest.raises(ValidationError):
        complete(4).neighbors(4)


def test_edges_canonical_and_sorted():
    G = Graph(4, [(3, 1), (2, 0), (1, 0)])
    assert G.edges == ((0, 1), (0, 2), (1, 3))
    with pytest.raises(ValidationError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValidationError):
        Graph(3, [(0, 1), (1, 0)])


def test_is_regular():
    assert is_regular(complete(8)) == 7
    assert is_regular(graphs.star(4)) is None
    assert is_regular(cycle(5)) == 2


def _dense_oracle(G):
    # different LAPACK driver from the implementation's eigvalsh
    return np.sort(scipy.linalg.eigh(G.adjacency_matrix(), eigvals_only=True, driver="ev"))[::-1]


@pytest.mark.parametrize("n", [2, 3, 5, 8, 13])
def test_second_eigenvalue_complete(n):
    assert abs(second_eigenvalue(complete(n)) - (-1)) <= 1e-9
    assert abs(second_eigenvalue(complete(n)) - _dense_oracle(complete(n))[1]) <= 1e-9


@pytest.mark.parametrize("n", [3, 4, 5, 7, 10, 31])
def test_second_eigenvalue_cycle(n):
    lam = second_eigenvalue(cycle(n))
    assert abs(lam - 2 * math.cos(2 * math.pi / n)) <= 1e-9
    assert abs(lam - _dense_oracle(cycle(n))[1]) <= 1e-9


def test_second_eigenvalue_petersen_and_bipartite_variant():
    assert abs(second_eigenvalue(petersen()) - 1) <= 1e-9
    assert abs(second_eigenvalue_abs(petersen()) - 2) <= 1e-9
    # bipartite: the signed value ignores the -d end of the spectrum
    cube = graphs.hypercube(3)
    assert abs(second_eigenvalue(cube) - 1) <= 1e-9
    assert abs(second_eigenvalue_abs(cube) - 3) <= 1e-9


def test_second_eigenvalue_needs_two_vertices():
    with pytest.raises(ValidationError):
        second_eigenvalue(Graph(1))


def test_girth_examples():
    assert girth(cycle(7)) == 7
    assert girth(path(6)) is None
    assert girth(complete(4)) == 3
    assert girth(petersen()) == 5
    assert girth(graphs.hypercube(4)) == 4


def test_girth_matches_edge_removal_oracle():
    for seed in range(40):
        n = 6 + seed % 20
        G = random_graph(n, n + seed % 7, seed)
        assert girth(G) == naive_girth(G.n, G.edges)


def test_cycle_space_dimension():
    assert cycle_space_dimension(path(7)) == 0
    assert cycle_space_dimension(cycle(9)) == 1
    assert cycle_space_dimension(complete(4)) == 3
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert cycle_space_dimension(two_triangles) == 2


def test_random_regular_examples():
    assert random_regular(4, 3, seed=123) == complete(4)
    assert random_regular(16, 3, seed=7) == random_regular(16, 3, seed=7)
    G = random_regular(10, 3, seed=1)
    assert G.degrees() == [3] * 10
    with pytest.raises(ValidationError):
        random_regular(5, 3, seed=0)
    with pytest.raises(ValidationError):
        random_regular(4, 4, seed=0)


@pytest.mark.parametrize("n,d", [(8, 7), (9, 6), (12, 5), (16, 7), (30, 4), (50, 3)])
def test_random_regular_degrees_and_spectrum(n, d):
    for seed in range(5):
        G = random_regular(n, d, seed)
        assert G.degrees() == [d] * n
        assert sum(G.degrees()) == 2 * G.m
        spec = graphs.spectrum(G)
        if graphs.components(G) == 1:
            assert abs(spec[0] - d) <= 1e-9
            assert spec[1] < d - 1e-9
        assert second_eigenvalue(G) <= max(G.degrees()) + 1e-9


def test_named_graph_counts():
    assert complete(4).m == 6
    assert cycle(5).m == 5
    P = petersen()
    assert (P.n, P.m, girth(P)) == (10, 15, 5)
    assert graphs.named_graph("hypercube", 3).m == 12
    with pytest.raises(ValidationError):
        graphs.named_graph("moebius", 3)


def test_girth_none_iff_no_cycles():
    for seed in range(30):
        n = 5 + seed % 10
        G = random_graph(n, (seed * 3) % (n + 2), seed)
        assert (girth(G) is None) == (cycle_space_dimension(G) == 0)


def test_graph_text_roundtrip():
    G = petersen()
    text = format_graph(G)
    assert text.splitlines()[0] == "p 10 15"
    assert parse_graph(text) == G


@pytest.mark.parametrize(
    "text, line",
    [
        ("p 3 1\ne 1 0\n", 2),
        ("p 3 2\ne 0 1\n", 1),
        ("q 3 1\ne 0 1\n", 1),
        ("p 3 2\ne 0 2\ne 0 1\n", 3),
        ("p 3 1\ne 0 x\n", 2),
        ("p 3 1\ne 0 3\n", 2),
    ],
)
def test_graph_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line
