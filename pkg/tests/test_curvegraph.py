from tropical_patchwork.core import SignDistribution, TropicalPolynomial, lattice_points
from tropical_patchwork.curvegraph import curve_betti_oracle, midpoint_graph
from tropical_patchwork.generators import random_full_triangulation, random_signs
from tropical_patchwork.homology import analyze
from tropical_patchwork.subdivision import regular_subdivision


def test_line_is_one_circle():
    pts = lattice_points(3, 1)
    poly = TropicalPolynomial(3, 1, tuple(pts), (0, 0, 0))
    for bits in ((0, 0, 0), (1, 0, 0), (0, 1, 1)):
        eps = SignDistribution(dict(zip(pts, bits)))
        graph = midpoint_graph(regular_subdivision(poly), bits)
        assert graph.betti == (1, 1)
        assert graph.vertices == graph.edges  # disjoint circles
        assert eps.vector(poly) == bits


def test_example1_two_circles(harnack):
    poly, signs = harnack
    graph = midpoint_graph(regular_subdivision(poly), signs.vector(poly))
    assert graph.betti == (2, 2)
    assert {seg.component for seg in graph.segments} == {0, 1}


def test_degree_two_graphs_are_unions_of_circles():
    for seed in range(8):
        poly = random_full_triangulation(3, 2, seed)
        eps = random_signs(3, 2, 100 + seed)
        graph = midpoint_graph(regular_subdivision(poly), eps.vector(poly))
        assert graph.vertices == graph.edges
        assert graph.components == graph.cycle_rank


def test_oracle_matches_chain_complex():
    for i in range(12):
        d = 2 + (i % 3)
        poly = random_full_triangulation(3, d, 1000 + i)
        eps = random_signs(3, d, 2000 + i)
        assert curve_betti_oracle(poly, eps) == analyze(poly, eps).betti.b
