"""Block decomposition, exact linear algebra, suites and cohomology.

The kernel/rank computation has an independent oracle: specialize the
matrix at a rational point and run a from-scratch elimination over plain
Fractions; ranks must agree.
"""

from fractions import Fraction

import pytest

import podles.qalgebra as qa
import podles.verify as V
from podles.scalars import ONE, Scalar, ZERO

s0 = Fraction(7, 10)


def fraction_rank_oracle(mat, point: Fraction) -> int:
    """Plain row reduction over (re, im) Fraction pairs, written separately
    from the Scalar elimination it checks."""
    rows = [[x.specialize(point) for x in row] for row in mat]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][c] != (Fraction(0), Fraction(0)):
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr, pi = rows[rank][c]
        nrm = pr * pr + pi * pi
        inv = (pr / nrm, -pi / nrm)
        for r in range(len(rows)):
            if r == rank:
                continue
            xr, xi = rows[r][c]
            if xr == 0 and xi == 0:
                continue
            fr = xr * inv[0] - xi * inv[1]
            fi = xr * inv[1] + xi * inv[0]
            rows[r] = [(yr - (fr * zr - fi * zi), yi - (fr * zi + fi * zr))
                       for (yr, yi), (zr, zi) in zip(rows[r], rows[rank])]
        rank += 1
    return rank


class TestLinearAlgebra:
    def test_identity(self):
        ident = [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]
        kern, rank = V.kernel_and_rank(ident)
        assert rank == 3 and kern == []

    def test_zero(self):
        zero = [[ZERO] * 3 for _ in range(2)]
        kern, rank = V.kernel_and_rank(zero)
        assert rank == 0 and len(kern) == 3

    def test_rank_nullity(self):
        q = Scalar.q_power(1)
        mat = [[ONE, q, ZERO], [q, q * q, ZERO]]
        kern, rank = V.kernel_and_rank(mat)
        assert rank + len(kern) == 3
        assert rank == 1
        # kernel vectors really are annihilated
        for v in kern:
            for row in mat:
                acc = ZERO
                for x, y in zip(row, v):
                    acc = acc + x * y
                assert acc.is_zero()

    def test_rank_against_fraction_oracle(self, calc, blocks):
        for op in ("d", "Delta_d", "L"):
            mat = blocks.matrix_of(blocks.operator(op), 2)
            _, rank = V.kernel_and_rank(mat)
            assert rank == fraction_rank_oracle(mat, s0)

    def test_solve_in_span(self):
        b1 = qa.B_ZERO
        b2 = qa.B_PLUS * qa.B_MINUS
        target = b1.scale(Scalar.q_power(2)) + b2
        sol = V.solve_in_span([b1, b2], target)
        assert sol == [Scalar.q_power(2), ONE]
        with pytest.raises(V.BlockError):
            V.solve_in_span([b1], qa.A * qa.B)

    def test_certified_equality(self):
        q = Scalar.q_power(1)
        a = (ONE - Scalar.q_power(2)) / (ONE - q)
        b = ONE + q
        assert V.scalar_eq_certified(a, b)
        assert not V.scalar_eq_certified(a, b + q)
        # agrees with the symbolic comparator on matrices
        m1 = [[a, ZERO], [q, b]]
        m2 = [[b, ZERO], [q, a]]
        assert V.mat_eq(m1, m2, "certified", Fraction(7, 10))


class TestBlocks:
    def test_dimensions(self, blocks):
        for n in range(5):
            blk = blocks.block(n)
            expected_forms = 4 * (n + 1) if n % 2 == 0 and n > 0 else (
                2 if n == 0 else 0)
            assert blk.dim == expected_forms

    def test_sector_dims(self, blocks):
        assert blocks.block(0).sector_dims() == {
            "omega0": 1, "omega10": 0, "omega01": 0, "omega2": 1}
        assert blocks.block(2).sector_dims() == {
            "omega0": 3, "omega10": 3, "omega01": 3, "omega2": 3}
        assert blocks.block(4).sector_dims() == {
            "omega0": 5, "omega10": 5, "omega01": 5, "omega2": 5}

    def test_sector_dims_weight_oracle(self, blocks):
        # multiplicity of weight w among length-n monomials
        for n in (2, 4):
            mult0 = sum(1 for m in qa.monomials_of_length(n)
                        if qa.mono_degree(m) == 0)
            mult2 = sum(1 for m in qa.monomials_of_length(n)
                        if qa.mono_degree(m) == 2)
            dims = blocks.block(n).sector_dims()
            assert dims["omega0"] == mult0
            assert dims["omega10"] == mult2

    def test_algebra_block_dimension(self, blocks):
        for n in range(5):
            total = sum(len(v) for v in blocks.algebra_block(n).values())
            assert total == (n + 1) ** 2

    def test_blocks_haar_orthogonal(self, calc, blocks):
        # distinct blocks are orthogonal under the Haar form
        for (x_bucket) in blocks.algebra_block(2).values():
            for x in x_bucket:
                for y_bucket in blocks.algebra_block(0).values():
                    for y in y_bucket:
                        assert qa.haar_form(y, x).is_zero()

    def test_operators_preserve_blocks(self, calc, blocks):
        # matrix assembly raises on any covariance failure
        for op in ("d", "del", "dbar", "d*", "Delta_d", "L", "Lambda",
                   "Counting", "HodgeStar"):
            for n in (0, 2):
                mat = blocks.matrix_of(blocks.operator(op), n)
                assert len(mat) == blocks.block(n).dim

    def test_matrix_reproduces_operator(self, calc, blocks):
        blk = blocks.block(2)
        mat = blocks.matrix_of(blocks.operator("Delta_d"), 2)
        # column j: coordinates of Delta applied to basis j
        img = blocks.operator("Delta_d")(blk.forms[0])
        coords = blocks._expand(blk, img)
        assert coords == [mat[r][0] for r in range(blk.dim)]


class TestSuites:
    def test_hopf(self):
        rows = V.hopf_suite(3)
        assert rows and all(r["status"] == "pass" for r in rows)

    def test_calculus(self, calc, blocks):
        rows = V.calculus_suite(calc, blocks, 2)
        assert rows and all(r["status"] == "pass" for r in rows)

    def test_metric(self, calc, blocks):
        rows = V.metric_suite(calc, blocks, 2)
        assert rows and all(r["status"] == "pass" for r in rows)

    def test_hodge(self, calc, blocks):
        rows = V.hodge_suite(calc, blocks, 2)
        assert rows and all(r["status"] == "pass" for r in rows)

    def test_sl2(self, calc, blocks):
        rows = V.sl2_suite(calc, blocks, 2)
        assert rows and all(r["status"] == "pass" for r in rows)

    def test_kahler(self, calc, blocks):
        rows = V.kahler_suite(calc, blocks, 2)
        assert rows and all(r["status"] == "pass" for r in rows)

    @pytest.mark.parametrize("point", [Fraction(1, 2), Fraction(7, 10),
                                       Fraction(1)])
    def test_specialization_consistency(self, calc, blocks, point):
        # every identity that holds symbolically must also hold after
        # exact specialization, including the classical point s0 = 1
        rows = []
        rows.extend(V.kahler_suite(calc, blocks, 2, mode="numeric", s0=point))
        rows.extend(V.sl2_suite(calc, blocks, 2, mode="numeric", s0=point))
        assert rows and all(r["status"] == "pass" for r in rows)

    def test_kahler_constant(self, calc):
        assert V.kahler_constant(calc) == ONE

    def test_rows_deterministic(self, calc, blocks):
        r1 = V.sl2_suite(calc, blocks, 2)
        r2 = V.sl2_suite(calc, blocks, 2)
        assert r1 == r2


class TestHodgeDecomposition:
    def test_block0(self, calc, blocks):
        # harmonics are 1 and tau, images empty
        lap = blocks.matrix_of(blocks.operator("Delta_d"), 0)
        kern, rank = V.kernel_and_rank(lap)
        assert len(kern) == 2 and rank == 0

    def test_block2_no_harmonics(self, calc, blocks):
        for flavor in ("d", "del", "dbar"):
            lap = blocks.matrix_of(blocks.operator(f"Delta_{flavor}"), 2)
            kern, _ = V.kernel_and_rank(lap)
            assert len(kern) == 0

    def test_diagonalisable_route(self, calc, blocks):
        # ker Delta = ker D as the theorem asserts
        for n in (0, 2):
            lap = blocks.matrix_of(blocks.operator("Delta_d"), n)
            dm = blocks.matrix_of(blocks.operator("D_d"), n)
            k1, _ = V.kernel_and_rank(lap)
            k2, _ = V.kernel_and_rank(dm)
            assert len(k1) == len(k2)


class TestCohomology:
    def test_level0(self, calc, blocks):
        table = V.cohomology(calc, blocks, 0)
        assert table["totals"] == {"H0": 1, "H1": 0, "H2": 1}

    def test_level4_totals_stable(self, calc, blocks):
        table = V.cohomology(calc, blocks, 4)
        assert table["totals"] == {"H0": 1, "H1": 0, "H2": 1}
        assert table["refinement_ok"]
        assert table["H0_equals_H2"]
        assert table["pairing_H10_H01"] == {"del": True, "dbar": True}

    def test_refinement_values(self, calc, blocks):
        table = V.cohomology(calc, blocks, 2)
        bt = table["bidegree_totals"]
        assert bt["del"]["(1,0)"] + bt["del"]["(0,1)"] == table["totals"]["H1"]
