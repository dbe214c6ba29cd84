from fractions import Fraction

import pytest

import hedet


def test_graph_basics():
    g = hedet.Graph(3, [(0, 1), (1, 2)])
    assert g.order == 3 and len(g) == 3
    assert g.edge_count == 2
    assert g.adjacent(1, 0) and not g.adjacent(0, 2)
    assert g.degree(1) == 2
    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    with pytest.raises(IndexError):
        g.adjacent(0, 3)


def test_dimacs_round_trip():
    g = hedet.generate("petersen", 10)
    assert hedet.Graph.from_dimacs(g.to_dimacs()) == g
    with pytest.raises(hedet.HedetError):
        hedet.Graph.from_dimacs("p edge 2 1\ne 1 3\n")


def test_seeds():
    assert hedet.load_seed("c7").edge_count == 7
    assert hedet.load_seed("groetzsch").order == 11
    with pytest.raises(hedet.HedetError):
        hedet.load_seed("nonsense")


def test_products_and_mycielski():
    c5 = hedet.generate("cycle", 5)
    k2 = hedet.generate("complete", 2)
    assert hedet.tensor_product(c5, k2).order == 10
    assert hedet.lex_complete(c5, 3).edge_count == 5 * 3 + 5 * 9
    assert hedet.mycielski(c5, 2).order == 11
    chain = hedet.mycielski_chain(hedet.generate("cycle", 7), [3, 3, 3, 3])
    assert chain.order == 607
    assert hedet.odd_girth(chain) == 7
    assert hedet.odd_girth(hedet.generate("cycle", 6)) is None


def test_distances():
    d = hedet.bfs_distances(hedet.generate("cycle", 7), 0)
    assert d == [0, 1, 2, 3, 3, 2, 1]
    assert hedet.bfs_distances(hedet.generate("edgeless", 2), 0) == [0, None]


def test_solvers():
    pet = hedet.load_seed("petersen")
    assert hedet.chromatic_number(pet) == 3
    assert hedet.independence_number(pet) == 4
    assert hedet.chromatic_number(hedet.load_seed("groetzsch")) == 4
    c5 = hedet.generate("cycle", 5)
    assert hedet.is_proper(c5, [1, 2, 1, 2, 3], 3)
    assert not hedet.is_proper(c5, [1, 2, 1, 2, 1], 3)
    assert hedet.extendable(c5, [1, 0, 0, 0, 0], 2) == "infeasible"
    assert hedet.extendable(c5, [1, 0, 0, 0, 0], 3) == "feasible"


def test_fractional():
    assert hedet.chi_f(hedet.generate("cycle", 7)) == Fraction(7, 3)
    assert hedet.chi_f(hedet.load_seed("groetzsch")) == Fraction(29, 10)
    assert hedet.tardif_value(Fraction(5, 2), 2) == Fraction(29, 10)
    assert hedet.tardif_value(Fraction(7, 3), 3) == Fraction(286, 111)
    assert hedet.tardif_chain_value(Fraction(7, 3), [3, 3, 3, 3]) > Fraction(309, 100)


def test_exponential():
    k2 = hedet.generate("complete", 2)
    assert hedet.has_loop([1, 2], k2, 2)
    assert not hedet.has_loop([1, 1], k2, 2)
    assert hedet.exp_adjacent([1, 2], [2, 1], k2, 2) is False
    assert hedet.exp_adjacent([1, 1], [2, 2], k2, 2) is True


def test_counterexample_construction():
    assert hedet.h_vertex_count(83, 41, 125) == 10501
    assert hedet.h_vertex_count_closed_form(83) == 10501
    c7 = hedet.generate("cycle", 7)
    assert hedet.build_G(c7, 3).order == 21
    h, tags = hedet.build_H(c7, 3)
    assert h.order == 89 and h.edge_count == 731
    assert tags[0] == "g:1" and tags[11] == "phi"
    assert hedet.vertex_map(c7, 3, "phi", 4, 2) == 4
    assert hedet.vertex_map(c7, 3, "g:5", 1, 1) == 5
    closed, ok, brute = hedet.image(c7, 3, "theta:2:9")
    assert ok and closed == brute == [2, 9]
    with pytest.raises(hedet.HedetError):
        hedet.build_G(c7, 2)


def test_verify_reports():
    c7 = hedet.generate("cycle", 7)
    r = hedet.verify(c7, 3, name="c7", timings=False)
    assert r["verdict"].startswith("not a counterexample")
    status = {c["name"]: c["status"] for c in r["checks"]}
    assert status["embedding"] == "pass"
    assert status["h_lower"] == "pass"
    assert status["g_lower"] == "fail"
    assert hedet.verify(c7, 3, name="c7", timings=False) == r

    c5 = hedet.generate("cycle", 5)
    r = hedet.verify(c5, 2, mode="bruteforce")
    emb = next(c for c in r["checks"] if c["name"] == "embedding")
    assert emb["status"] == "fail"
    assert emb["witness"]["h_edge"] == ["mu:1:4", "mu:1:5"]
