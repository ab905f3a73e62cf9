"""Fundamental form, L, Lambda, counting operator and the sl2 action."""

import podles.hermitian as herm
import podles.lefschetz as lef
import podles.qalgebra as qa
from podles.calculus import Form, UNIT_FORM
from podles.qalgebra import B_MINUS, B_PLUS, B_ZERO
from podles.scalars import I, MINUS_ONE, ONE, Scalar, ZERO


class TestKappa:
    def test_closed_form(self, calc):
        kap = lef.kappa(calc)
        assert kap == calc.wedge(calc.e_plus(), calc.e_minus()).scale(MINUS_ONE)
        # with the calibrated tau normalization this is i tau
        assert kap == calc.tau().scale(I)

    def test_coinvariant(self, calc):
        kap = lef.kappa(calc)
        for comp in kap.c:
            for m in comp.terms:
                assert m == qa.MONO_ONE

    def test_closed(self, calc):
        assert calc.d(lef.kappa(calc)).is_zero()

    def test_reality_constant(self, calc):
        # form_star(kappa) = -kappa in this normalization
        kap = lef.kappa(calc)
        assert calc.form_star(kap) == kap.scale(MINUS_ONE)


class TestOperators:
    def test_L_on_unit(self, calc):
        L = lef.lefschetz_L(calc)
        assert L(UNIT_FORM) == lef.kappa(calc)

    def test_L_kills_higher(self, calc):
        L = lef.lefschetz_L(calc)
        assert L(calc.e_plus()).is_zero()
        assert L(calc.tau()).is_zero()

    def test_L_on_functions(self, calc):
        # L(f) = f kappa with no q twist (weight zero coefficients)
        L = lef.lefschetz_L(calc)
        got = L(Form.from_function(B_ZERO))
        assert got == Form(ct=B_ZERO).scale(I)

    def test_Lambda_degrees(self, calc):
        Lam = lef.lefschetz_dual(calc)
        assert Lam(UNIT_FORM).is_zero()
        assert Lam(calc.e_plus()).is_zero()
        assert Lam(calc.e_minus()).is_zero()

    def test_Lambda_on_top(self, calc):
        Lam = lef.lefschetz_dual(calc)
        assert Lam(Form(ct=B_ZERO)) == Form.from_function(B_ZERO).scale(-I)

    def test_Lambda_is_adjoint(self, calc, blocks):
        L = lef.lefschetz_L(calc)
        Lam = lef.lefschetz_dual(calc)
        for n in (0, 2):
            forms = blocks.block(n).forms
            for w1 in forms:
                for w2 in forms:
                    assert herm.inner(calc, L(w1), w2) == \
                        herm.inner(calc, w1, Lam(w2))

    def test_counting(self, calc):
        H = lef.counting(calc)
        assert H(Form.from_function(B_ZERO)) == \
            Form.from_function(B_ZERO).scale(MINUS_ONE)
        assert H(calc.e_plus()).is_zero()
        assert H(calc.tau()) == calc.tau()


class TestSl2:
    def test_commutators_on_forms(self, calc):
        L = lef.lefschetz_L(calc)
        Lam = lef.lefschetz_dual(calc)
        H = lef.counting(calc)
        two = Scalar.from_rational(2)
        probes = [UNIT_FORM, Form.from_function(B_ZERO), calc.e_plus(),
                  calc.e_minus(), calc.tau(), Form(ct=B_PLUS * B_MINUS),
                  Form(cp=qa.B * qa.D), Form(cm=qa.A * qa.C)]
        for w in probes:
            assert lef.commutator(H, L)(w) == L(w).scale(two)
            assert lef.commutator(H, Lam)(w) == Lam(w).scale(-two)
            assert lef.commutator(L, Lam)(w) == H(w)

    def test_HL_on_unit_gives_2kappa(self, calc):
        H = lef.counting(calc)
        L = lef.lefschetz_L(calc)
        got = lef.commutator(H, L)(UNIT_FORM)
        assert got == lef.kappa(calc).scale(Scalar.from_rational(2))

    def test_block_matrices(self, calc, blocks):
        from podles.verify import sl2_suite

        rows = sl2_suite(calc, blocks, 2)
        assert all(r["status"] == "pass" for r in rows)

    def test_anticommutator_handle(self, calc, blocks):
        # (del, dbar*) vanishes on the first nonempty block
        ops = lef.operator_table(calc)
        anti = lef.commutator(ops["del"], ops["dbar*"], graded=True)
        for w in blocks.block(2).forms:
            assert anti(w).is_zero()

    def test_split_preserved(self, calc, blocks):
        L = lef.lefschetz_L(calc)
        Lam = lef.lefschetz_dual(calc)
        for w in blocks.block(2).forms:
            even = w.degree_part(0) + w.degree_part(2)
            for op in (L, Lam):
                img = op(even)
                assert img.degree_part(1).is_zero()
