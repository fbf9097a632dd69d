import json
from itertools import combinations

import numpy as np
import pytest

from sidon_c4 import constructions as c
from sidon_c4 import formulas
from sidon_c4 import graph as gr
from sidon_c4.constructions import SidonSet
from sidon_c4.errors import EdgeExists, NotC4Free, SameVertex, SizeExceeded
from sidon_c4.group import GroupSpec
from sidon_c4.oracle import oracle_count_c4, oracle_sum_graph_edges

SMALL = [c.singer(2), c.singer(3), c.singer(4), c.bose_chowla(3), c.bose_chowla(4), c.bose_chowla(5),
         c.ruzsa(5), c.ruzsa(7), c.cartesian1(5), c.cartesian2(5), c.cartesian2(7),
         c.cartesian3(7), c.cartesian3(7, 3)]
MEDIUM = [c.singer(13), c.bose_chowla(19), c.ruzsa(13), c.cartesian1(13), c.cartesian2(13),
          c.cartesian3(13), c.cartesian3(13, 2)]


def ids(s):
    return str(s.provenance)


def brute_saturated(G):
    """Every non-edge closes a 4-cycle, from the cube of the adjacency matrix."""
    adj = G.adjacency_matrix().astype(np.int64)
    walks3 = adj @ adj @ adj
    for x, y in combinations(range(G.n), 2):
        if not adj[x, y] and walks3[x, y] == 0:
            return False
    return True


def test_singer2_graph():
    G = gr.build_sum_graph(c.singer(2))
    assert G.n == 7 and G.edge_count == 9
    assert G.absolute == (0, 4, 5)
    assert gr.is_c4_free(G) and gr.is_c4_saturated(G)


def test_singer3_and_bc3_counts():
    assert gr.build_sum_graph(c.singer(3)).edge_count == 24
    G = gr.build_sum_graph(c.bose_chowla(3))
    assert len(G.absolute) == 2 and G.edge_count == 11
    assert gr.build_sum_graph(c.ruzsa(5)).edge_count == 38
    assert gr.build_sum_graph(c.cartesian1(5)).edge_count == 60


@pytest.mark.parametrize("s", SMALL + MEDIUM, ids=ids)
def test_edges_match_oracle(s):
    G = gr.build_sum_graph(s)
    edges = oracle_sum_graph_edges(s.elements, s.group.variant, s.group.n)
    assert G.edges() == edges
    assert all(G.has_edge(u, v) for u, v in edges[:50])
    k = len(s)
    assert 2 * G.edge_count == G.n * k - len(G.absolute)
    deg = G.degrees
    assert set(np.flatnonzero(deg == k - 1).tolist()) == set(G.absolute)
    assert ((deg == k) | (deg == k - 1)).all()


@pytest.mark.parametrize("s", SMALL + MEDIUM, ids=ids)
def test_c4_free_and_saturated(s):
    G = gr.build_sum_graph(s)
    assert gr.is_c4_free(G)
    assert oracle_count_c4(G.n, G.edges()) == 0
    assert gr.is_c4_saturated(G) == brute_saturated(G)


@pytest.mark.parametrize("s", SMALL, ids=ids)
def test_new_c4_exhaustive_oracle(s):
    G = gr.build_sum_graph(s)
    edges = G.edges()
    mat = gr.new_c4_count_matrix(G)
    for x, y in gr.non_edges(G):
        want = oracle_count_c4(G.n, edges + [(x, y)])
        assert gr.new_c4_count(G, x, y) == want == mat[x, y]


@pytest.mark.parametrize("s", MEDIUM, ids=ids)
def test_new_c4_sampled_oracle(s):
    G = gr.build_sum_graph(s)
    edges = G.edges()
    ne = gr.non_edges(G)
    rng = np.random.default_rng(1)
    mat = gr.new_c4_count_matrix(G)
    for i in rng.choice(len(ne), 6, replace=False):
        x, y = ne[i]
        assert gr.new_c4_count(G, x, y) == oracle_count_c4(G.n, edges + [(x, y)]) == mat[x, y]


def test_non_sidon_has_c4():
    G = gr.build_sum_graph(SidonSet(GroupSpec.cyclic(7), (0, 1, 2)))
    assert not gr.is_c4_free(G)
    x, y = gr.c4_witness(G)
    assert len(set(G.neighbors(x)) & set(G.neighbors(y))) >= 2
    assert oracle_count_c4(G.n, G.edges()) > 0
    with pytest.raises(NotC4Free):
        gr.is_c4_saturated(G)


def test_empty_set_graph():
    G = gr.build_sum_graph(SidonSet(GroupSpec.cyclic(7), ()))
    assert G.edge_count == 0 and gr.is_c4_free(G)
    assert not gr.is_c4_saturated(G)


def test_unsaturated_witness():
    G = gr.build_sum_graph(SidonSet(GroupSpec.cyclic(7), (0, 1)))
    bad = gr.unsaturated_pairs(G)
    assert bad
    for x, y in bad:
        assert not G.has_edge(x, y)
        assert gr.new_c4_count(G, x, y) == 0
    assert not gr.is_c4_saturated(G)


def test_k4_oracle():
    assert oracle_count_c4(4, list(combinations(range(4), 2))) == 3


def test_new_c4_errors():
    G = gr.build_sum_graph(c.singer(2))
    with pytest.raises(SameVertex):
        gr.new_c4_count(G, 2, 2)
    with pytest.raises(EdgeExists):
        gr.new_c4_count(G, 0, 1)


def test_budget(monkeypatch):
    monkeypatch.setenv("SIDON_BUDGET", "graph=100")
    with pytest.raises(SizeExceeded):
        gr.build_sum_graph(c.bose_chowla(11))


def test_extremal_check():
    rep = gr.extremal_check(gr.build_sum_graph(c.singer(4)))
    assert rep["match"] and rep["edges"]["observed"] == 50
    assert rep["turan"] == {"status": "equal", "value": 50, "source": "exhaustive search, n <= 21"}
    rep = gr.extremal_check(gr.build_sum_graph(c.singer(5)))
    assert rep["turan"]["status"] == "lower-bound"
    rep = gr.extremal_check(gr.build_sum_graph(c.cartesian3(11, 2)))
    assert rep["match"]


def test_edge_list_format():
    text = gr.edge_list(gr.build_sum_graph(c.singer(2)))
    lines = text.splitlines()
    assert lines[0] == "# sumgraph singer(2) n=7 m=9"
    pairs = [tuple(map(int, ln.split())) for ln in lines[1:]]
    assert len(pairs) == 9 and pairs == sorted(pairs)
    assert all(u < v for u, v in pairs)


def test_json_export():
    doc = json.loads(gr.to_json(gr.build_sum_graph(c.singer(3))))
    assert doc["schema"] == 1 and doc["m"] == 24
    assert len(doc["absolute"]) == 3 + 1
    assert gr.to_json(gr.build_sum_graph(c.singer(3))) == gr.to_json(gr.build_sum_graph(c.singer(3)))


@pytest.mark.parametrize("s", [c.cartesian3(p, a) for p in (5, 7, 11, 13, 17) for a in range(1, p)], ids=ids)
def test_cart3_absolute_count_every_alpha(s):
    G = gr.build_sum_graph(s)
    assert len(G.absolute) == formulas.absolute_count(s.provenance)
    assert G.edge_count == formulas.edge_count(s.provenance)


def test_pair_matrix_budget(monkeypatch):
    G = gr.build_sum_graph(c.singer(5))
    monkeypatch.setenv("SIDON_BUDGET", "pairs=20")
    with pytest.raises(SizeExceeded):
        gr.new_c4_count_matrix(G)
