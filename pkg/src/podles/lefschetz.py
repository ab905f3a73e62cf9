"""Fundamental form, Lefschetz operators and the sl2 action.

kappa is the closed form -e+ ^ e-.  L wedges by kappa on the right; its
metric adjoint Lambda is computed by conjugating L with the conjugate-linear
Hodge composite (hodge o form_star), which is the reading of the classical
formula Lambda = *^-1 L * that survives q-deformation in this normalization.
H multiplies the degree-k component by k - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import hermitian
from . import qalgebra as qa
from .calculus import Calculus, Form, UNIT_FORM
from .scalars import MINUS_ONE, ONE, Scalar


@dataclass(frozen=True)
class OperatorHandle:
    """A named linear (or conjugate-linear) operator on forms."""

    name: str
    fn: Callable[[Form], Form]
    conjugate_linear: bool = False

    def __call__(self, w: Form) -> Form:
        return self.fn(w)


def kappa(calc: Calculus) -> Form:
    return calc.wedge(calc.e_plus(), calc.e_minus()).scale(MINUS_ONE)


def lefschetz_L(calc: Calculus) -> OperatorHandle:
    kap = kappa(calc)
    return OperatorHandle("L", lambda w: calc.wedge(w, kap))


def lefschetz_dual(calc: Calculus) -> OperatorHandle:
    kap = kappa(calc)

    def conj_hodge(w: Form) -> Form:
        return calc.hodge(calc.form_star(w))

    def conj_hodge_inv(w: Form) -> Form:
        return calc.form_star(calc.hodge_inverse(w))

    def apply(w: Form) -> Form:
        return conj_hodge_inv(calc.wedge(conj_hodge(w), kap))

    return OperatorHandle("Lambda", apply)


def counting(calc: Calculus) -> OperatorHandle:
    def apply(w: Form) -> Form:
        out = Form()
        for k in (0, 1, 2):
            part = w.degree_part(k)
            if not part.is_zero():
                out = out + part.scale(Scalar.from_rational(k - 1))
        return out

    return OperatorHandle("Counting", apply)


def commutator(a: OperatorHandle, b: OperatorHandle,
               graded: bool = False) -> OperatorHandle:
    """[a, b] = ab - ba, or the anticommutator ab + ba when graded."""
    sign = ONE if graded else MINUS_ONE
    symbol = "(%s,%s)" if graded else "[%s,%s]"

    def apply(w: Form) -> Form:
        return a(b(w)) + b(a(w)).scale(sign)

    return OperatorHandle(symbol % (a.name, b.name), apply,
                          conjugate_linear=a.conjugate_linear != b.conjugate_linear)


def scaled(op: OperatorHandle, s: Scalar, name: str | None = None) -> OperatorHandle:
    return OperatorHandle(name or f"({s.render()})*{op.name}",
                          lambda w: op(w).scale(s), op.conjugate_linear)


def operator_table(calc: Calculus) -> dict[str, OperatorHandle]:
    """Every named operator the block-matrix machinery can export."""
    table = {
        "d": OperatorHandle("d", calc.d),
        "del": OperatorHandle("del", calc.del_),
        "dbar": OperatorHandle("dbar", calc.dbar),
        "d*": OperatorHandle("d*", lambda w: hermitian.codifferential(calc, w, "d")),
        "del*": OperatorHandle("del*", lambda w: hermitian.codifferential(calc, w, "del")),
        "dbar*": OperatorHandle("dbar*", lambda w: hermitian.codifferential(calc, w, "dbar")),
        "D_d": OperatorHandle("D_d", lambda w: hermitian.dirac(calc, w, "d")),
        "D_del": OperatorHandle("D_del", lambda w: hermitian.dirac(calc, w, "del")),
        "D_dbar": OperatorHandle("D_dbar", lambda w: hermitian.dirac(calc, w, "dbar")),
        "Delta_d": OperatorHandle("Delta_d", lambda w: hermitian.laplacian(calc, w, "d")),
        "Delta_del": OperatorHandle("Delta_del", lambda w: hermitian.laplacian(calc, w, "del")),
        "Delta_dbar": OperatorHandle("Delta_dbar", lambda w: hermitian.laplacian(calc, w, "dbar")),
        "L": lefschetz_L(calc),
        "Lambda": lefschetz_dual(calc),
        "Counting": counting(calc),
        "HodgeStar": OperatorHandle("HodgeStar", calc.hodge),
        "FormStar": OperatorHandle("FormStar", calc.form_star, conjugate_linear=True),
    }
    return table


def sl2_sample(calc: Calculus) -> bool:
    """Quick [H,L] = 2L, [H,Lambda] = -2Lambda, [L,Lambda] = H spot check."""
    L = lefschetz_L(calc)
    Lam = lefschetz_dual(calc)
    H = counting(calc)
    two = Scalar.from_rational(2)
    probes = [UNIT_FORM, Form.from_function(qa.B_ZERO), calc.e_plus(),
              calc.e_minus(), calc.tau(), Form(ct=qa.B_PLUS * qa.B_MINUS)]
    for w in probes:
        if commutator(H, L)(w) != L(w).scale(two):
            return False
        if commutator(H, Lam)(w) != Lam(w).scale(-two):
            return False
        if commutator(L, Lam)(w) != H(w):
            return False
    return True
