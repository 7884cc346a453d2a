import random
import unittest

from mrn.core.constants import COLOR_ONE, COLOR_TWO
from mrn.core.errors import ParameterError
from mrn.domain.clique import verify_clique
from mrn.domain.formulas import RamseyQuery
from mrn.domain.matching import is_valid_matching
from mrn.domain.multipartite import TwoColoring, color_subgraph, make_shape
from mrn.domain.witness import build_diagonal_star, build_extremal, verify_good, witness_sweep


class TestBuildExtremal(unittest.TestCase):
    def test_five_parts_k4_three_stripes(self):
        c = build_extremal(RamseyQuery(5, 4, 3))
        self.assertEqual((c.shape.j, c.shape.t), (5, 1))
        self.assertEqual(c.colors_string(), "1111111222")
        report = verify_good(c, 4, 3)
        self.assertTrue(report.good)
        self.assertEqual((report.omega1, report.nu2), (3, 1))
        self.assertEqual(report.render(), "good omega1=3 nu2=1")

    def test_diagonal_uses_last_two_parts(self):
        c = build_extremal(RamseyQuery(4, 4, 5))
        self.assertEqual(c.shape.t, 4)
        s = c.shape
        for u, v in c.color_edges(COLOR_TWO):
            self.assertEqual((s.part(u), s.part(v)), (2, 3))
        self.assertEqual(c.count(COLOR_TWO), 16)
        report = verify_good(c, 4, 5)
        self.assertTrue(report.good)
        self.assertEqual((report.omega1, report.nu2), (3, 4))

    def test_infinite_regime_needs_t(self):
        q = RamseyQuery(3, 5, 2)
        with self.assertRaises(ParameterError):
            build_extremal(q)
        c = build_extremal(q, 7)
        self.assertEqual(c.count(COLOR_TWO), 0)
        report = verify_good(c, 5, 2)
        self.assertTrue(report.good)
        self.assertEqual((report.omega1, report.nu2), (3, 0))

    def test_n_one_gives_empty_host(self):
        c = build_extremal(RamseyQuery(6, 4, 1))
        self.assertEqual((c.shape.t, c.shape.E), (0, 0))
        self.assertTrue(verify_good(c, 4, 1).good)

    def test_k5_seven_parts(self):
        c = build_extremal(RamseyQuery(7, 5, 8))
        self.assertEqual(c.shape.t, 3)
        report = verify_good(c, 5, 8)
        self.assertTrue(report.good)
        self.assertEqual((report.omega1, report.nu2), (4, 6))

    def test_explicit_t_in_finite_regime(self):
        # At t = t* the construction is no longer good.
        q = RamseyQuery(5, 4, 3)
        report = verify_good(build_extremal(q, 2), 4, 3)
        self.assertFalse(report.good)
        self.assertIsNotNone(report.matching_cert)

    def test_subdiagonal_construction_coincides(self):
        # For j = m + 1 and n in {3, 4, 5}: color 2 is K_{3 x (n-2)} at t = n - 2.
        for m in range(4, 9):
            for n in (3, 4, 5):
                c = build_extremal(RamseyQuery(m + 1, m, n))
                self.assertEqual(c.shape.t, n - 2)
                parts = {c.shape.part(v) for e in c.color_edges(COLOR_TWO) for v in e}
                self.assertEqual(parts, {m - 2, m - 1, m})

    def test_k5_six_parts_small_n_construction_coincides(self):
        # m_6(K_5, nK_2) = n - 2 for n in {6, 7, 8}: witness at t = n - 3.
        for n in (6, 7, 8):
            c = build_extremal(RamseyQuery(6, 5, n))
            self.assertEqual(c.shape.t, n - 3)
            report = verify_good(c, 5, n)
            self.assertTrue(report.good)
            self.assertEqual(report.nu2, 3 * (n - 3) // 2)


class TestDiagonalStar(unittest.TestCase):
    def test_star_and_general_are_both_extremal(self):
        for j in range(3, 8):
            for n in range(1, 7):
                q = RamseyQuery(j, j, n)
                star = build_diagonal_star(q)
                general = build_extremal(q)
                self.assertEqual(star.shape, general.shape)
                for c in (star, general):
                    report = verify_good(c, j, n)
                    self.assertTrue(report.good, msg=report.render())
                    if n >= 2:
                        self.assertEqual((report.omega1, report.nu2), (j - 1, n - 1))

    def test_star_color_two_touches_last_part(self):
        c = build_diagonal_star(RamseyQuery(4, 4, 3))
        s = c.shape
        for u, v in c.color_edges(COLOR_TWO):
            self.assertEqual(s.part(v), 3)
        self.assertEqual(c.count(COLOR_TWO), 2 * 6)

    def test_star_requires_diagonal(self):
        with self.assertRaises(ParameterError):
            build_diagonal_star(RamseyQuery(5, 4, 3))


class TestVerifyGood(unittest.TestCase):
    def test_all_one_k4(self):
        c = TwoColoring.all_color(make_shape(4, 1), COLOR_ONE)
        report = verify_good(c, 4, 1)
        self.assertFalse(report.good)
        self.assertEqual(report.clique_cert.vertices, (0, 1, 2, 3))
        self.assertIsNone(report.matching_cert)
        self.assertTrue(report.render().startswith("bad clique=[0,1,2,3]"))

    def test_all_two_k6(self):
        c = TwoColoring.all_color(make_shape(6, 1), COLOR_TWO)
        report = verify_good(c, 4, 3)
        self.assertFalse(report.good)
        self.assertEqual(len(report.matching_cert), 3)
        self.assertIsNone(report.clique_cert)
        self.assertIn("matching=[", report.render())

    def test_invariant_and_certificates_on_random_colorings(self):
        rng = random.Random(13)
        for _ in range(200):
            shape = make_shape(rng.randint(2, 6), rng.randint(1, 3))
            colors = tuple(rng.choice((COLOR_ONE, COLOR_TWO)) for _ in range(shape.E))
            c = TwoColoring(shape, colors)
            m, n = rng.randint(3, 5), rng.randint(1, 4)
            report = verify_good(c, m, n)
            self.assertEqual(report.good, report.omega1 <= m - 1 and report.nu2 <= n - 1)
            self.assertEqual(report.clique_cert is not None, report.omega1 >= m)
            self.assertEqual(report.matching_cert is not None, report.nu2 >= n)
            if report.clique_cert is not None:
                self.assertTrue(verify_clique(color_subgraph(c, COLOR_ONE), report.clique_cert, m))
            if report.matching_cert is not None:
                self.assertEqual(len(report.matching_cert), n)
                self.assertTrue(is_valid_matching(color_subgraph(c, COLOR_TWO), report.matching_cert))

    def test_planted_structures_are_found(self):
        rng = random.Random(29)
        for _ in range(200):
            q = RamseyQuery(rng.randint(5, 8), rng.randint(3, 5), rng.randint(2, 4))
            if q.j <= q.m - 1:
                continue
            base = build_extremal(q)
            shape = make_shape(q.j, max(base.shape.t, 1))
            c = build_extremal(q, shape.t)
            colors = list(c.colors)
            if rng.random() < 0.5:
                # Plant K_m in color 1: one vertex from each of m random parts.
                parts = rng.sample(range(shape.j), q.m)
                vs = [shape.vertex(p, rng.randrange(shape.t)) for p in parts]
                for a in range(len(vs)):
                    for b in range(a + 1, len(vs)):
                        colors[shape.edge_rank(vs[a], vs[b])] = COLOR_ONE
                report = verify_good(TwoColoring(shape, tuple(colors)), q.m, q.n)
                self.assertFalse(report.good)
                self.assertIsNotNone(report.clique_cert)
            else:
                # Plant nK_2 in color 2 on a fresh host large enough for it.
                big = make_shape(q.j, q.n)
                colors = [COLOR_ONE] * big.E
                for i in range(q.n):
                    u = big.vertex(0, i)
                    v = big.vertex(1 + i % (big.j - 1), i)
                    colors[big.edge_rank(u, v)] = COLOR_TWO
                report = verify_good(TwoColoring(big, tuple(colors)), q.m, q.n)
                self.assertFalse(report.good)
                self.assertEqual(len(report.matching_cert), q.n)

    def test_rejects_bad_parameters(self):
        c = TwoColoring.all_color(make_shape(2, 1), COLOR_ONE)
        with self.assertRaises(ParameterError):
            verify_good(c, 0, 1)


class TestWitnessSweep(unittest.TestCase):
    def test_k4_range(self):
        summary = witness_sweep([4], range(5, 13), range(1, 21))
        self.assertTrue(summary.ok, msg=summary.failures)
        self.assertEqual(summary.checked, 8 * 20)

    def test_k5_range(self):
        summary = witness_sweep([5], range(6, 13), range(1, 21))
        self.assertTrue(summary.ok, msg=summary.failures)

    def test_general_range(self):
        for m in range(6, 9):
            summary = witness_sweep([m], range(m, 13), range(1, 21))
            self.assertTrue(summary.ok, msg=summary.failures)

    def test_full_default_range(self):
        summary = witness_sweep(range(3, 9), range(3, 13), range(1, 21))
        self.assertTrue(summary.ok, msg=summary.failures)
        self.assertEqual(summary.checked, 900)
        self.assertEqual(summary.skipped_infinite, 300)

    def test_infinite_queries_are_skipped(self):
        summary = witness_sweep([5], range(2, 6), [3])
        self.assertEqual((summary.checked, summary.skipped_infinite), (1, 3))


if __name__ == "__main__":
    unittest.main()
