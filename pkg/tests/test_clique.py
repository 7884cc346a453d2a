import importlib.util
import random
import unittest

from mrn.core.constants import COLOR_ONE
from mrn.domain.clique import (
    CliqueCertificate,
    clique_number,
    contains_clique,
    has_clique_in,
    maximum_clique,
    verify_clique,
)
from mrn.domain.formulas import RamseyQuery
from mrn.domain.graph import Graph, iter_bits
from mrn.domain.multipartite import TwoColoring, color_subgraph, make_shape
from mrn.domain.witness import build_extremal

HAS_NETWORKX = importlib.util.find_spec("networkx") is not None


def _random_multipartite_subgraph(rng: random.Random) -> Graph:
    j = rng.randint(2, 5)
    t = rng.randint(1, 10 // j)
    shape = make_shape(j, t)
    p = rng.choice((0.4, 0.7, 0.9))
    edges = [e for e in shape.edges() if rng.random() < p]
    return Graph.from_edges(shape.N, edges, parts=shape.part_labels())


def _brute_force_omega(graph: Graph) -> int:
    best = 0
    for mask in range(1 << graph.order):
        size = bin(mask).count("1")
        if size <= best:
            continue
        if all(mask & ~(1 << v) & ~graph.adj[v] == 0 for v in iter_bits(mask)):
            best = size
    return best


class TestContainsClique(unittest.TestCase):
    def test_complete_graph(self):
        g = color_subgraph(TwoColoring.all_color(make_shape(4, 1), COLOR_ONE), COLOR_ONE)
        self.assertEqual(contains_clique(g, 4), CliqueCertificate((0, 1, 2, 3)))

    def test_witness_color_one_has_no_k4(self):
        g1 = color_subgraph(build_extremal(RamseyQuery(5, 4, 3)), COLOR_ONE)
        self.assertIsNone(contains_clique(g1, 4))
        self.assertIsNotNone(contains_clique(g1, 3))

    def test_bipartite_is_triangle_free(self):
        g = make_shape(2, 2).host_graph()
        self.assertIsNone(contains_clique(g, 3))

    def test_trivial_orders(self):
        g = Graph.empty(3)
        self.assertEqual(contains_clique(g, 0), CliqueCertificate(()))
        self.assertEqual(contains_clique(g, 1), CliqueCertificate((0,)))
        self.assertIsNone(contains_clique(Graph.empty(0), 1))

    def test_has_clique_in_respects_mask(self):
        g = Graph.complete_multipartite([1, 1, 1, 1])
        self.assertTrue(has_clique_in(g.adj, 0b1111, 4))
        self.assertFalse(has_clique_in(g.adj, 0b0111, 4))
        self.assertTrue(has_clique_in(g.adj, 0, 0))


class TestCliqueNumber(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(clique_number(Graph.complete_multipartite([2, 2, 2])), 3)
        g1 = color_subgraph(build_extremal(RamseyQuery(7, 4, 10)), COLOR_ONE)
        self.assertEqual(clique_number(g1), 3)
        self.assertEqual(clique_number(Graph.empty(1)), 1)
        self.assertEqual(clique_number(Graph.empty(0)), 0)

    def test_complete_multipartite_identity(self):
        rng = random.Random(17)
        for _ in range(100):
            sizes = [rng.randint(0, 3) for _ in range(rng.randint(1, 7))]
            g = Graph.complete_multipartite(sizes)
            self.assertEqual(clique_number(g), sum(1 for a in sizes if a >= 1))

    def test_matches_brute_force(self):
        rng = random.Random(41)
        for _ in range(500):
            g = _random_multipartite_subgraph(rng)
            omega = clique_number(g)
            self.assertEqual(omega, _brute_force_omega(g))
            cert = maximum_clique(g)
            self.assertEqual(len(cert.vertices), omega)
            self.assertTrue(verify_clique(g, cert, omega))
            for m in range(1, omega + 2):
                found = contains_clique(g, m)
                self.assertEqual(found is not None, omega >= m)
                if found is not None:
                    self.assertTrue(verify_clique(g, found, m))

    def test_unlabelled_graphs(self):
        rng = random.Random(8)
        for _ in range(100):
            order = rng.randint(0, 10)
            edges = [(u, v) for u in range(order) for v in range(u + 1, order) if rng.random() < 0.5]
            g = Graph.from_edges(order, edges)
            self.assertEqual(clique_number(g), _brute_force_omega(g))

    @unittest.skipUnless(HAS_NETWORKX, "networkx not installed")
    def test_matches_networkx(self):
        import networkx as nx

        rng = random.Random(23)
        for _ in range(50):
            g = _random_multipartite_subgraph(rng)
            expected = max((len(c) for c in nx.find_cliques(g.to_networkx())), default=0)
            self.assertEqual(clique_number(g), expected)


class TestVerifyClique(unittest.TestCase):
    def setUp(self):
        self.g = make_shape(4, 1).host_graph()

    def test_valid(self):
        self.assertTrue(verify_clique(self.g, CliqueCertificate((0, 1, 2, 3)), 4))

    def test_repeated_vertex(self):
        self.assertFalse(verify_clique(self.g, CliqueCertificate((0, 1, 1, 2)), 4))

    def test_non_edge(self):
        g = make_shape(2, 2).host_graph()
        cert = CliqueCertificate((0, 2))
        self.assertTrue(verify_clique(g, cert, 2))
        # 0 and 1 share part 0.
        self.assertFalse(verify_clique(g, CliqueCertificate((0, 1)), 2))

    def test_wrong_size(self):
        self.assertFalse(verify_clique(self.g, CliqueCertificate((0, 1, 2)), 4))


if __name__ == "__main__":
    unittest.main()
