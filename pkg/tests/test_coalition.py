import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from faircoal.catalog import cubic_catalog
from faircoal.coalition import (
    BRUTEFORCE_MAX_ORDER,
    FcCertificate,
    Justification,
    Violation,
    cf_bruteforce,
    cf_solve,
    connected_upper_bound_claim,
    domatic_construction,
    format_partition,
    is_fair_coalition,
    lower_bound_from_domatic,
    parse_partition,
    partition_from_lists,
    partition_to_lists,
    set_partitions,
    upper_bound,
    verify_fc_partition,
)
from faircoal.domination import fair_domatic_number, is_fd
from faircoal.enumeration import all_graphs, all_graphs_upto
from faircoal.graph import (
    CapExceeded,
    Graph,
    bits,
    corona_k1,
    gen_complete,
    gen_cycle,
    gen_empty,
    gen_path,
    gen_petersen,
    mask_of,
    parse_graph6,
)

from . import naive
from .strategies import graphs, graphs_with_perm, random_graphs

SMALL = all_graphs_upto(6)
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def m(*vs):
    return mask_of(vs)


# recognition and verification


def test_is_fair_coalition_examples():
    ok, why = is_fair_coalition(gen_path(8), m(0, 4), m(3, 7))
    assert ok and "Fair(1)" in why
    ok, _ = is_fair_coalition(gen_path(8), m(1, 5), m(2, 6))
    assert ok
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert not is_fair_coalition(star, m(0), m(1))[0]
    ok, why = is_fair_coalition(gen_path(5), m(0), m(2))
    assert not ok and "union" in why
    with pytest.raises(ValueError):
        is_fair_coalition(gen_path(3), m(0), m(0, 1))
    with pytest.raises(ValueError):
        is_fair_coalition(gen_path(3), 0, m(1))


def test_verify_c5_certificate():
    cert = verify_fc_partition(gen_cycle(5), [[0, 1], [2], [3], [4]])
    assert isinstance(cert, FcCertificate)
    assert cert.entries == (
        Justification(0, 1, 1),
        Justification(1, 0, 1),
        Justification(2, 0, 2),
        Justification(3, 0, 1),
    )


def test_verify_p3_certificate():
    cert = verify_fc_partition(gen_path(3), [[1], [0], [2]])
    assert cert.to_json() == [
        {"class": 0, "justification": "singleton_fd"},
        {"class": 1, "partner": 2, "k": 2},
        {"class": 2, "partner": 1, "k": 2},
    ]


def test_verify_rejects_non_singleton_fd_class():
    v = verify_fc_partition(gen_cycle(4), [[0, 2], [1, 3]])
    assert isinstance(v, Violation) and v.cls == 0 and "not a singleton" in v.reason


def test_verify_vacuous_partner_serialises():
    cert = verify_fc_partition(gen_empty(2), [[0], [1]])
    assert cert.to_json()[0] == {"class": 0, "partner": 1, "k": "vacuous"}


@pytest.mark.parametrize("classes,reason", [
    ([[0, 1], [1, 2, 3]], "overlaps"),
    ([[0, 1], [2]], "cover"),
    ([[0, 1], [2, 3], []], "empty"),
    ([[0, 1], [2, 3, 4]], "out of range"),
    ([[0, 0, 1], [2, 3]], "repeated"),
])
def test_verify_structural_violations(classes, reason):
    v = verify_fc_partition(gen_path(4), classes)
    assert isinstance(v, Violation) and reason in v.reason


def test_verify_no_partner():
    # {0} and {1} on P_3 are not FD, and their union does not dominate vertex 2 fairly
    v = verify_fc_partition(gen_path(4), [[0], [1, 2, 3]])
    assert isinstance(v, Violation)


@given(graphs(max_n=6), st.data())
def test_verifier_matches_naive(g, data):
    rgs = data.draw(st.lists(st.integers(0, g.n - 1), min_size=g.n, max_size=g.n))
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(rgs):
        classes.setdefault(c, []).append(v)
    p = list(classes.values())
    result = verify_fc_partition(g, p)
    assert isinstance(result, FcCertificate) == naive.is_fc_partition(naive.to_nx(g), p)
    if isinstance(result, FcCertificate):
        masks = partition_from_lists(p)
        for e in result.entries:
            if e.partner is None:
                assert is_fd(g, masks[e.cls]) and len(p[e.cls]) == 1
            else:
                assert e.partner != e.cls
                assert not is_fd(g, masks[e.cls]) and not is_fd(g, masks[e.partner])
                assert is_fd(g, masks[e.cls] | masks[e.partner])


def test_two_class_split_verifies():
    for g in SMALL:
        if g.n < 2:
            continue
        for a in range(1, g.vertex_mask):
            b = g.vertex_mask ^ a
            if not is_fd(g, a) and not is_fd(g, b):
                assert isinstance(verify_fc_partition(g, (a, b)), FcCertificate)
                assert cf_bruteforce(g).value >= 2
                break


# partitions


@pytest.mark.parametrize("n", range(0, 9))
def test_set_partitions_count_is_bell(n):
    parts = list(set_partitions(n))
    assert len(parts) == BELL[n]
    assert len({tuple(p) for p in parts}) == BELL[n]


def test_partition_text_round_trip():
    p = partition_from_lists([[0, 4], [1, 5], [2], [3]])
    text = format_partition(p)
    assert text == "0 4\n1 5\n2\n3\n"
    assert parse_partition("# c\n0 4\n\n1 5  # x\n2\n3\n") == partition_to_lists(p)
    with pytest.raises(ValueError):
        parse_partition("0 a\n")


# exact values


def test_bruteforce_examples():
    r = cf_bruteforce(gen_path(2))
    assert r.value == 2 and partition_to_lists(r.witness) == [[0], [1]]
    assert all(e.partner is None for e in r.certificate.entries)
    r = cf_bruteforce(gen_cycle(4))
    assert r.value == 4
    # lowest-index partners are recorded; the opposite pairs also qualify
    assert [(e.cls, e.partner) for e in r.certificate.entries] == [(0, 1), (1, 0), (2, 0), (3, 0)]
    assert is_fair_coalition(gen_cycle(4), m(0), m(2))[0]
    assert is_fair_coalition(gen_cycle(4), m(1), m(3))[0]
    assert cf_bruteforce(gen_empty(3)).value == 2


def test_bruteforce_cap():
    with pytest.raises(CapExceeded):
        cf_bruteforce(gen_path(BRUTEFORCE_MAX_ORDER + 1))


def test_solve_examples():
    assert cf_solve(gen_petersen()).value == 4
    for e in cubic_catalog(6):
        assert cf_solve(e.graph).value == 6
    # published as 4; {0,3},{1,5},{2},{4},{6} is a valid 5-class fc-partition
    assert cf_solve(gen_path(7)).value == 5
    assert isinstance(verify_fc_partition(gen_path(7), [[0, 3], [1, 5], [2], [4], [6]]),
                      FcCertificate)


@pytest.mark.parametrize("n", range(1, 6))
def test_bruteforce_matches_naive(n):
    for g in all_graphs(n):
        assert cf_bruteforce(g).value == naive.fair_coalition_number(naive.to_nx(g))


def test_solve_matches_bruteforce_exhaustive():
    for g in SMALL:
        exact = cf_bruteforce(g).value
        assert cf_solve(g).value == exact
        assert cf_solve(g, partner_pruning=False, seed_lower_bound=False).value == exact


def test_solve_matches_bruteforce_random_order_7():
    for g in random_graphs(7, 20, seed=5):
        assert cf_solve(g).value == cf_bruteforce(g).value


def test_report_invariants():
    for g in SMALL:
        r = cf_solve(g)
        assert len(r.witness) == r.value
        assert isinstance(verify_fc_partition(g, r.witness), FcCertificate)
        assert r.lower <= r.value <= r.upper == upper_bound(g)
        assert set(json.loads(json.dumps(r.to_json()))) == {
            "cf", "witness", "certificate", "upper_bound", "lower_bound", "nodes",
            "elapsed", "method"}


@given(graphs_with_perm(max_n=7))
def test_solve_relabel_invariance(gp):
    g, perm = gp
    assert cf_solve(g).value == cf_solve(g.relabel(perm)).value


def test_solve_is_deterministic():
    g = parse_graph6("IsP@PGXD_")
    assert cf_solve(g).witness == cf_solve(g).witness


# bounds


def test_upper_bound_examples():
    assert upper_bound(gen_path(4)) == 4 == cf_solve(gen_path(4)).value
    for n in range(2, 7):
        assert upper_bound(gen_empty(n)) == 2 == cf_bruteforce(gen_empty(n)).value
    t = corona_k1(gen_path(3))
    assert upper_bound(t) == t.n // 2 + 2


def test_connected_claim_fails_on_p4():
    assert connected_upper_bound_claim(gen_path(4)) == 2 < cf_solve(gen_path(4)).value


def test_lower_bound_examples():
    for g in (gen_cycle(6), corona_k1(gen_path(2)), cubic_catalog(6)[1].graph):
        bound, witness = lower_bound_from_domatic(g)
        assert bound >= max(4, 2 * fair_domatic_number(g).value)
        assert isinstance(verify_fc_partition(g, witness), FcCertificate)
        assert cf_solve(g).value >= bound


def test_lower_bound_preconditions():
    with pytest.raises(ValueError):
        lower_bound_from_domatic(gen_path(2))
    with pytest.raises(ValueError):
        lower_bound_from_domatic(gen_complete(4))


def test_lower_bound_exhaustive():
    routes = set()
    for g in SMALL:
        if g.n < 3 or g.full_vertices():
            continue
        c = domatic_construction(g)
        routes.add(c.route)
        assert c.bound >= 2 * c.d_f
        assert isinstance(verify_fc_partition(g, c.witness), FcCertificate)
        assert cf_bruteforce(g).value >= c.bound
    assert routes == {"literal"}


def test_lower_bound_needs_fallback_on_some_order_8_graph():
    g = parse_graph6("GTYQuo")
    c = domatic_construction(g)
    assert c.route != "literal"
    assert isinstance(verify_fc_partition(g, c.witness), FcCertificate)


def test_bounds_hold_exhaustively():
    for g in SMALL:
        cf = cf_bruteforce(g).value
        assert cf <= upper_bound(g)
        if g.n >= 3 and not g.full_vertices():
            assert cf >= 2 * fair_domatic_number(g).value
