"""Metric, integral, inner product, codifferentials, Dirac and Laplace
operators for the calculus on the Podles sphere.

Two pairings live here.

The *metric* is the sesquilinear, conjugate-linear-in-the-second-argument
pairing used by the inner product.  Weight balance forces it to pair each
frame sector with itself (a cross pairing of e+ against e- with a starred
coefficient would land in weight +-4, outside the base algebra), so

    g(f v, h v) = q^nu_v f h*          for v in {1, e+, e-, tau},

with sector scales q^nu fixed at calibration, and all other pairings zero.

The *frame pairing* is the bilinear pairing that pairs e+ with e-; it is
what the inverse metric element g = e+ (x) e- + q^2 e- (x) e+ contracts
against, with its q^-2 exponent resolved by the contraction identity.

The inner product is <w, v> = haar(g(w, v)); the Hodge route
integral(w ^ hodge(star v)) agrees with it symbolically, and the
codifferential formulas -hodge d hodge (flavored) are its true adjoints.
"""

from __future__ import annotations

from fractions import Fraction

from . import qalgebra as qa
from .calculus import (
    Calculus,
    F_EM,
    F_EP,
    F_ONE,
    F_TAU,
    Form,
    UNIT_FORM,
)
from .qalgebra import ELEM_ZERO, Element
from .scalars import ONE, Scalar, ZERO


def metric(calc: Calculus, w1: Form, w2: Form) -> Element:
    """Sesquilinear metric value in the base algebra.

    Same-frame sectors pair with the calibrated scale q^nu at the balanced
    weight; off the balanced weight the scale twists by q^(-2 kappa) per unit
    of weight, which is exactly what keeps this table equal to the Hodge
    route on every homogeneous coefficient.
    """
    k = calc.k
    out = ELEM_ZERO
    for ix, base, kappa, w_bal in (
            (F_ONE, k.nu_0, 0, 0),
            (F_EP, k.nu_p, k.komm_m, 2),
            (F_EM, k.nu_m, k.komm_p, -2),
            (F_TAU, k.nu_t, 0, 0)):
        a, b = w1.c[ix], w2.c[ix]
        if a.is_zero() or b.is_zero():
            continue
        for m, s in b.terms.items():
            expo = base - 2 * kappa * (qa.mono_degree(m) - w_bal)
            term = a * qa.star(Element.from_mono(m, s), k.beta)
            out = out + term.scale(Scalar.q_power(expo))
    return out


def frame_pairing(calc: Calculus, w1: Form, w2: Form) -> Element:
    """Bilinear pairing of 1-forms: p(f e+, g e-) = fg, p(g e-, f e+) = q^mu gf."""
    k = calc.k
    out = ELEM_ZERO
    a, b = w1.c[F_EP], w2.c[F_EM]
    if not a.is_zero() and not b.is_zero():
        out = out + a * b
    a, b = w1.c[F_EM], w2.c[F_EP]
    if not a.is_zero() and not b.is_zero():
        out = out + (a * b).scale(Scalar.q_power(k.metric_exponent))
    return out


def inverse_metric_tensor(calc: Calculus) -> list[tuple[Form, Form]]:
    """The element e+ (x) e- + q^2 e- (x) e+ as a list of form pairs."""
    q2 = Scalar.q_power(2)
    return [(calc.e_plus(), calc.e_minus()),
            (calc.e_minus().scale(q2), calc.e_plus())]


def integral(calc: Calculus, w: Form) -> Scalar:
    """Integration of the top component: haar of the tau coefficient."""
    return qa.haar(w.c[F_TAU])


def inner(calc: Calculus, w1: Form, w2: Form) -> Scalar:
    return qa.haar(metric(calc, w1, w2))


def inner_via_hodge(calc: Calculus, w1: Form, w2: Form) -> Scalar:
    """The second computation route: integral(w1 ^ hodge(star(w2)))."""
    return integral(calc, calc.wedge(w1, calc.hodge(calc.form_star(w2))))


def metric_via_hodge(calc: Calculus, w1: Form, w2: Form) -> Element:
    """Tau coefficient of w1 ^ hodge(star(w2)); equals the metric pointwise."""
    return calc.wedge(w1, calc.hodge(calc.form_star(w2))).c[F_TAU]


def hodge(calc: Calculus, w: Form) -> Form:
    return calc.hodge(w)


def codifferential(calc: Calculus, w: Form, flavor: str = "d") -> Form:
    """The adjoints d* = -*H d *H, del* = -*H dbar *H, dbar* = -*H del *H."""
    if flavor == "d":
        inner_op = calc.d
    elif flavor == "del":
        inner_op = calc.dbar
    elif flavor == "dbar":
        inner_op = calc.del_
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    return calc.hodge(inner_op(calc.hodge(w))).scale(-ONE)


def differential(calc: Calculus, w: Form, flavor: str = "d") -> Form:
    if flavor == "d":
        return calc.d(w)
    if flavor == "del":
        return calc.del_(w)
    if flavor == "dbar":
        return calc.dbar(w)
    raise ValueError(f"unknown flavor {flavor!r}")


def dirac(calc: Calculus, w: Form, flavor: str = "d") -> Form:
    return differential(calc, w, flavor) + codifferential(calc, w, flavor)


def laplacian(calc: Calculus, w: Form, flavor: str = "d") -> Form:
    return dirac(calc, dirac(calc, w, flavor), flavor)


# ---------------------------------------------------------------------------
# Small symbolic samples used while calibrating (full suites live in verify).
# ---------------------------------------------------------------------------


def _sample_forms(calc: Calculus) -> list[Form]:
    return [
        UNIT_FORM,
        Form.from_function(qa.B_ZERO),
        Form.from_function(qa.B_PLUS),
        Form(cp=qa.D * qa.D),
        Form(cp=qa.B * qa.D),
        Form(cm=qa.A * qa.C),
        Form(cm=qa.C * qa.C),
        calc.e_plus(),
        calc.e_minus(),
        calc.tau(),
        Form(ct=qa.B_ZERO),
    ]


def routes_agree_sample(calc: Calculus) -> bool:
    forms = _sample_forms(calc)
    for w1 in forms:
        for w2 in forms:
            if metric(calc, w1, w2) != metric_via_hodge(calc, w1, w2):
                return False
    # positivity spot check at s = 7/10 on the frame forms
    s0 = Fraction(7, 10)
    for w in forms:
        v = inner(calc, w, w).specialize(s0)
        if v[1] != 0 or v[0] <= 0:
            return False
    return True


def adjointness_sample(calc: Calculus) -> bool:
    pairs = [
        (Form.from_function(qa.B_ZERO), Form(cm=qa.A * qa.C)),
        (Form.from_function(qa.B_ZERO), Form(cp=qa.B * qa.D)),
        (Form.from_function(qa.B_PLUS), Form(cp=qa.D * qa.D)),
        (Form(cp=qa.B * qa.D), Form(ct=qa.B_ZERO)),
        (Form(cm=qa.A * qa.C), Form(ct=qa.B_ZERO)),
        (Form(cm=qa.A * qa.C), Form(ct=qa.B_PLUS * qa.B_MINUS)),
    ]
    for w, v in pairs:
        if inner(calc, calc.d(w), v) != inner(calc, w, codifferential(calc, v, "d")):
            return False
    return True


def inverse_metric_ok(calc: Calculus) -> bool:
    """(id, p(., w)) applied to the inverse metric element returns w, and
    the wedge of the element vanishes."""
    gg = inverse_metric_tensor(calc)
    wedge_sum = Form()
    for left, right in gg:
        wedge_sum = wedge_sum + calc.wedge(left, right)
    if not wedge_sum.is_zero():
        return False
    # the identity is about the weight-balanced 1-forms
    probes = ([Form(cp=e) for e in (qa.D * qa.D, qa.B * qa.D, qa.B * qa.B)]
              + [Form(cm=e) for e in (qa.A * qa.A, qa.A * qa.C, qa.C * qa.C)])
    for w in probes:
        out = Form()
        for left, right in gg:
            val = frame_pairing(calc, right, w)
            if val.is_zero():
                continue
            for ix, comp in enumerate(left.c):
                if comp.is_zero():
                    continue
                moved = calc.commute_past(ix, val)
                out = out + Form.on_frame(ix, comp * moved)
        if out != w:
            return False
        # mirror contraction (p(., w), id)
        out2 = Form()
        for left, right in gg:
            val = frame_pairing(calc, left, w)
            if val.is_zero():
                continue
            for ix, comp in enumerate(right.c):
                if comp.is_zero():
                    continue
                out2 = out2 + Form.on_frame(ix, val * comp)
        if out2 != w:
            return False
    return True
