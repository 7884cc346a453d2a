import unittest

from mrn.core.errors import ParameterError
from mrn.domain.formulas import (
    COMBINED_K4,
    COMBINED_K5,
    LEMMA_SMALL_DIAGONAL,
    SMALL_CASE,
    THM_DIAGONAL,
    THM_GENERAL,
    THM_INFINITE,
    THM_K3,
    THM_K4_J5,
    THM_K5_J6,
    THM_K5_J6_SMALL,
    THM_LOWER_BOUND,
    THM_SUBDIAGONAL,
    RamseyQuery,
    RamseyValue,
    Regime,
    ValueKind,
    classify_regime,
    consistency_table,
    mrn_value,
    theorem_value,
)


def _v(j: int, m: int, n: int) -> RamseyValue:
    return mrn_value(RamseyQuery(j, m, n))


class TestMrnValue(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(_v(3, 5, 2).is_infinite)
        self.assertEqual(_v(5, 5, 9), RamseyValue.finite(9))
        self.assertEqual(_v(7, 4, 10), RamseyValue.finite(4))
        self.assertEqual(_v(6, 5, 7), RamseyValue.finite(5))
        self.assertEqual(_v(6, 5, 6), RamseyValue.finite(4))
        self.assertEqual(_v(4, 3, 4), RamseyValue.finite(3))

    def test_parameter_errors(self):
        for j, m, n in ((5, 2, 3), (1, 4, 3), (5, 4, 0)):
            with self.subTest(j=j, m=m, n=n):
                with self.assertRaises(ParameterError):
                    RamseyQuery(j, m, n)
        with self.assertRaises(ParameterError) as ctx:
            RamseyQuery(5, 2, 3)
        self.assertIn("m must be", str(ctx.exception))

    def test_value_type(self):
        self.assertEqual(str(RamseyValue.infinite()), "INF")
        self.assertEqual(str(RamseyValue.finite(3)), "3")
        self.assertIs(RamseyValue.infinite().kind, ValueKind.INFINITE)
        with self.assertRaises(ParameterError):
            RamseyValue.finite(0)
        with self.assertRaises(ParameterError):
            RamseyValue(ValueKind.INFINITE, 3)

    def test_small_n(self):
        for m in range(3, 9):
            for j in range(m, 13):
                self.assertEqual(_v(j, m, 1), RamseyValue.finite(1))
                self.assertEqual(_v(j, m, 2), RamseyValue.finite(2 if j <= m + 1 else 1))

    def test_monotone_in_n(self):
        for m in range(3, 9):
            for j in range(m, 13):
                values = [_v(j, m, n).t for n in range(1, 41)]
                self.assertEqual(values, sorted(values))

    def test_non_increasing_in_j(self):
        for m in range(3, 9):
            for n in range(1, 41):
                values = [_v(j, m, n).t for j in range(m, 13)]
                self.assertEqual(values, sorted(values, reverse=True))

    def test_infinite_exactly_below_m(self):
        for m in range(3, 9):
            for j in range(2, 13):
                self.assertEqual(_v(j, m, 5).is_infinite, j <= m - 1)


class TestClassifyRegime(unittest.TestCase):
    def _tag(self, j, m, n):
        return classify_regime(RamseyQuery(j, m, n))

    def test_examples(self):
        tag = self._tag(4, 4, 7)
        self.assertEqual((tag.regime, tag.theorem), (Regime.DIAGONAL, THM_DIAGONAL))
        tag = self._tag(5, 4, 3)
        self.assertEqual((tag.regime, tag.theorem), (Regime.SUBDIAGONAL_SMALL_N, THM_SUBDIAGONAL))
        tag = self._tag(2, 4, 1)
        self.assertEqual((tag.regime, tag.theorem), (Regime.INFINITE_FEW_PARTS, THM_INFINITE))

    def test_labels(self):
        self.assertEqual(self._tag(7, 4, 10).theorem, COMBINED_K4)
        self.assertEqual(self._tag(6, 5, 7).theorem, COMBINED_K5)
        self.assertEqual(self._tag(4, 3, 4).theorem, THM_K3)
        self.assertEqual(self._tag(3, 3, 4).regime, Regime.DIAGONAL)
        self.assertEqual(self._tag(5, 5, 2).theorem, LEMMA_SMALL_DIAGONAL)
        self.assertEqual(self._tag(7, 4, 2).theorem, SMALL_CASE)
        self.assertEqual(self._tag(8, 6, 5).theorem, THM_GENERAL)
        self.assertEqual(self._tag(7, 6, 7).theorem, THM_LOWER_BOUND)

    def test_subdiagonal_boundary(self):
        self.assertEqual(self._tag(5, 4, 5).regime, Regime.SUBDIAGONAL_SMALL_N)
        self.assertEqual(self._tag(5, 4, 6).regime, Regime.GENERAL)


class TestConsistency(unittest.TestCase):
    def test_all_rows_agree(self):
        rows = consistency_table(j_max=12, n_max=40)
        bad = [r for r in rows if not r.agree]
        self.assertEqual(bad, [])

    def test_covers_stated_ranges(self):
        rows = consistency_table()
        index = {(r.query.j, r.query.m, r.query.n, r.theorem): r for r in rows}
        row = index[(5, 4, 5, THM_SUBDIAGONAL)]
        self.assertEqual((row.unified, row.stated), (RamseyValue.finite(4), RamseyValue.finite(4)))
        row = index[(6, 5, 8, THM_K5_J6_SMALL)]
        self.assertEqual(row.stated, RamseyValue.finite(6))
        row = index[(5, 4, 2, SMALL_CASE)]
        self.assertEqual(row.stated, RamseyValue.finite(2))
        self.assertIn((5, 4, 7, THM_K4_J5), index)
        self.assertIn((6, 5, 20, THM_K5_J6), index)
        self.assertIn((8, 8, 20, THM_DIAGONAL), index)
        self.assertIn((9, 8, 4, THM_SUBDIAGONAL), index)
        self.assertNotIn((6, 5, 9, THM_K5_J6_SMALL), index)

    def test_theorem_value(self):
        q = RamseyQuery(6, 5, 9)
        self.assertEqual(theorem_value(THM_K5_J6, q), RamseyValue.finite(6))
        self.assertIsNone(theorem_value(THM_K4_J5, q))
        with self.assertRaises(ParameterError):
            theorem_value("Theorem t99", q)

    def test_empty_grid_is_rejected(self):
        with self.assertRaises(ParameterError):
            consistency_table(j_max=1)


if __name__ == "__main__":
    unittest.main()
