import networkx as nx
import pytest
from hypothesis import given

from faircoal.catalog import cubic_catalog
from faircoal.graph import (
    CapExceeded,
    EdgeListError,
    Graph,
    Graph6ByteError,
    Graph6HeaderError,
    Graph6OrderError,
    Graph6TrailingError,
    GraphError,
    ParseError,
    corona_k1,
    find_isomorphism,
    gen_complete,
    gen_cycle,
    gen_empty,
    gen_path,
    gen_petersen,
    gen_random_tree,
    is_isomorphic,
    parse_edge_list,
    parse_family,
    parse_graph6,
    to_edge_list,
    to_graph6,
)

from .strategies import graphs, graphs_with_perm


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def nx_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


def test_graph_rejects_asymmetric_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_graph_rejects_loops_and_out_of_range_bits():
    with pytest.raises(GraphError):
        Graph(1, (1,))
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0))


def test_graph_order_cap():
    with pytest.raises(CapExceeded):
        gen_empty(65)


@given(graphs(max_n=12))
def test_graph6_matches_reference_encoder(g):
    assert to_graph6(g) == nx_graph6(g)


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(to_graph6(g)) == g


def test_graph6_round_trip_at_order_62():
    g = gen_cycle(62)
    assert parse_graph6(to_graph6(g)) == g
    assert to_graph6(g) == nx_graph6(g)


def test_graph6_p5_against_reference():
    s = nx_graph6(gen_path(5))
    g = parse_graph6(s)
    assert sorted(g.edges()) == [(0, 1), (1, 2), (2, 3), (3, 4)]


def test_graph6_k1_and_p2():
    assert to_graph6(gen_path(1)) == "@"
    assert parse_graph6("@") == gen_empty(1)
    s = to_graph6(gen_path(2))
    assert len(s) == 2 and ord(s[1]) - 63 == 0b100000


def test_graph6_c4_degrees():
    g = parse_graph6(nx_graph6(gen_cycle(4)))
    assert g.degrees() == [2, 2, 2, 2]


def test_graph6_header_prefix_accepted():
    assert parse_graph6(">>graph6<<C~") == gen_complete(4)


@pytest.mark.parametrize("text,exc", [
    ("", Graph6HeaderError),
    ("?", Graph6HeaderError),
    ("C", Graph6HeaderError),
    ("C~~", Graph6TrailingError),
    ("A`", Graph6ByteError),  # padding bit set
    ("C\x7f", Graph6ByteError),
    ("~?@?", Graph6OrderError),
])
def test_graph6_errors(text, exc):
    with pytest.raises(exc):
        parse_graph6(text)


def test_catalog_strings_round_trip():
    for order in (4, 6, 8, 10):
        for e in cubic_catalog(order):
            assert to_graph6(e.graph) == e.graph6


def test_edge_list_examples():
    assert parse_edge_list("4\n0 1\n1 2\n2 3") == gen_path(4)
    g = parse_edge_list("3\n0 1\n1 0")
    assert g.edges() == [(0, 1)] and g.degree(2) == 0
    with pytest.raises(EdgeListError):
        parse_edge_list("2\n0 0")


@pytest.mark.parametrize("text", ["", "x", "3\n0 5", "3\n0 1 2", "3\n0 a", "0", "65"])
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


@given(graphs(max_n=10))
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g


def test_generators():
    assert gen_path(1) == gen_empty(1)
    assert gen_cycle(3) == gen_complete(3)
    pet = gen_petersen()
    assert pet.num_edges == 15 and pet.girth() == 5
    assert set(pet.degrees()) == {3}
    assert nx.is_isomorphic(to_nx(pet), nx.petersen_graph())
    with pytest.raises(GraphError):
        gen_cycle(2)


def test_corona_examples():
    assert corona_k1(gen_path(1)) == gen_path(2)
    assert is_isomorphic(corona_k1(gen_path(2)), gen_path(4))
    assert sorted(corona_k1(gen_complete(3)).degrees()) == [1, 1, 1, 3, 3, 3]


@given(graphs(max_n=8))
def test_corona_doubles_order_and_adds_n_edges(g):
    c = corona_k1(g)
    assert c.n == 2 * g.n and c.num_edges == g.num_edges + g.n


@pytest.mark.parametrize("n", range(1, 12))
def test_random_tree_is_tree_and_reproducible(n):
    t = gen_random_tree(n, seed=7)
    assert t == gen_random_tree(n, seed=7)
    assert t.num_edges == n - 1 and t.is_connected()


def test_parse_family():
    assert parse_family("path:9") == gen_path(9)
    assert parse_family("cycle:12") == gen_cycle(12)
    assert parse_family("petersen") == gen_petersen()
    assert parse_family("corona:tree:4:seed=7") == corona_k1(gen_random_tree(4, 7))
    for bad in ("wheel:5", "path", "path:x", "cycle:2"):
        with pytest.raises(ParseError):
            parse_family(bad)


def test_isomorphism_examples():
    c6 = gen_cycle(6)
    assert is_isomorphic(c6, c6.relabel([3, 1, 5, 0, 2, 4]))
    k33, prism = (e.graph for e in cubic_catalog(6))
    assert not is_isomorphic(k33, prism)
    (pet,) = [e for e in cubic_catalog(10) if e.petersen]
    assert is_isomorphic(pet.graph, gen_petersen())


@given(graphs_with_perm(max_n=9))
def test_find_isomorphism_returns_valid_map(gp):
    g, perm = gp
    h = g.relabel(perm)
    m = find_isomorphism(g, h)
    assert m is not None
    assert g.relabel(m) == h


@given(graphs(max_n=7), graphs(max_n=7))
def test_isomorphism_agrees_with_networkx(g, h):
    assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
