"""The covariant first order differential calculus on the Podles sphere,
in frame presentation, together with the one-time calibration that pins
every normalization constant.

A form is stored as four algebra coefficients against the invariant frame
{1, e+, e-, tau}:

    omega = c1 + c_plus e+ + c_minus e- + c_tau tau

with c1 and c_tau of weight 0 and c_plus, c_minus of weights +2 and -2.
The weight convention for the 1-form coefficients is itself an output of
calibration (both choices give isomorphic calculi); with the tangent
functionals normalized by X+(b+) = 1 on c and X-(b-) = 1 on b, the exterior
derivative lands e+ coefficients in weight +2.

The derivative of a function is computed from the coproduct,

    d f  =  sum f(1) X+(f(2)) e+  +  sum f(1) X-(f(2)) e-,

with frame symbols closed, and the tangent functionals extended to products
by the twisted rule X(xy) = X(x) chi(y) + eps(x) X(y) for the character
chi(a) = q^-w, chi(d) = q^w with twist weight w.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import qalgebra as qa
from .qalgebra import (
    ELEM_ONE,
    ELEM_ZERO,
    Element,
    MONO_ONE,
    Monomial,
    mono_coproduct,
    mono_degree,
)
from .scalars import I, MINUS_I, MINUS_ONE, ONE, Q, Scalar, ZERO

# Frame indices.
F_ONE, F_EP, F_EM, F_TAU = 0, 1, 2, 3
FRAME_NAMES = ("1", "e+", "e-", "tau")
FRAME_DEGREE = (0, 1, 1, 2)
FRAME_BIDEGREE = ((0, 0), (1, 0), (0, 1), (1, 1))
# weight of the coefficient space attached to each frame symbol
FRAME_COEFF_WEIGHT = (0, 2, -2, 0)

SECTOR_NAMES = ("omega0", "omega10", "omega01", "omega2")
SECTOR_OF_FRAME = {F_ONE: "omega0", F_EP: "omega10", F_EM: "omega01", F_TAU: "omega2"}
FRAME_OF_SECTOR = {v: k for k, v in SECTOR_OF_FRAME.items()}


class WeightError(ValueError):
    """A form coefficient fell outside its graded component."""


class Form:
    """Coefficients against the invariant frame {1, e+, e-, tau}.

    Weight-balanced forms (coefficient weights 0, +2, -2, 0) make up the
    exterior algebra over the Podles sphere itself; arbitrary coefficients
    are tolerated so that bare frame symbols and generator expressions stay
    usable as CLI values, with the balanced subspace singled out by
    ``is_weight_balanced``.
    """

    __slots__ = ("c",)

    def __init__(self, c1: Element = ELEM_ZERO, cp: Element = ELEM_ZERO,
                 cm: Element = ELEM_ZERO, ct: Element = ELEM_ZERO,
                 check: bool = False):
        self.c = (c1, cp, cm, ct)
        if check and not self.is_weight_balanced():
            raise WeightError(f"form is not weight balanced: {self}")

    def is_weight_balanced(self) -> bool:
        for ix, comp in enumerate(self.c):
            w = FRAME_COEFF_WEIGHT[ix]
            if any(mono_degree(m) != w for m in comp.terms):
                return False
        return True

    @staticmethod
    def from_function(f: Element) -> "Form":
        return Form(c1=f)

    @staticmethod
    def from_scalar(s: Scalar) -> "Form":
        return Form(c1=Element.from_scalar(s))

    @staticmethod
    def on_frame(ix: int, coeff: Element) -> "Form":
        comps = [ELEM_ZERO] * 4
        comps[ix] = coeff
        return Form(*comps)

    def __add__(self, other: "Form") -> "Form":
        return Form(*(x + y for x, y in zip(self.c, other.c)), check=False)

    def __sub__(self, other: "Form") -> "Form":
        return Form(*(x - y for x, y in zip(self.c, other.c)), check=False)

    def __neg__(self) -> "Form":
        return self.scale(MINUS_ONE)

    def scale(self, s: Scalar) -> "Form":
        return Form(*(x.scale(s) for x in self.c), check=False)

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.c)

    def degree_part(self, k: int) -> "Form":
        comps = [x if FRAME_DEGREE[ix] == k else ELEM_ZERO
                 for ix, x in enumerate(self.c)]
        return Form(*comps, check=False)

    def bidegree_part(self, p: int, q: int) -> "Form":
        comps = [x if FRAME_BIDEGREE[ix] == (p, q) else ELEM_ZERO
                 for ix, x in enumerate(self.c)]
        return Form(*comps, check=False)

    def degrees_present(self) -> set[int]:
        return {FRAME_DEGREE[ix] for ix, x in enumerate(self.c) if not x.is_zero()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __str__(self) -> str:
        bits = []
        for ix, comp in enumerate(self.c):
            if comp.is_zero():
                continue
            cs = str(comp)
            if ix == F_ONE:
                bits.append(cs)
            elif cs == "1":
                bits.append(FRAME_NAMES[ix])
            else:
                if " + " in cs or " - " in cs or cs.startswith("-"):
                    cs = f"({cs})"
                bits.append(f"{cs}*{FRAME_NAMES[ix]}")
        return " + ".join(bits) if bits else "0"

    def __repr__(self) -> str:
        return f"Form({self})"


ZERO_FORM = Form()
UNIT_FORM = Form.from_function(ELEM_ONE)


@dataclass(frozen=True)
class Constants:
    """Every normalization constant of the calculus, metric and Hodge map.

    The defaults are the unique assignment produced by ``calibrate``.
    """

    # tangent functionals: X+(c) = gamma_p, X-(b) = gamma_m, twist weights
    gamma_p: Scalar = field(default_factory=lambda: Scalar.q_power(-1))
    gamma_m: Scalar = field(default_factory=lambda: ONE)
    twist_p: int = 1
    twist_m: int = 1
    # commutation exponents: e+- f = q^(kappa * deg f) f e+-
    komm_p: int = 1
    komm_m: int = 1
    # wedge structure constants: e+ ^ e- = s_pm tau, e- ^ e+ = s_mp tau
    s_pm: Scalar = field(default_factory=lambda: MINUS_I)
    s_mp: Scalar = field(default_factory=lambda: I * Scalar.q_power(-2))
    # algebra star: *(b) = beta c
    beta: Scalar = field(default_factory=lambda: -Q)
    # form star: (e+)* = sigma_p e-, (e-)* = sigma_m e+, tau* = sigma_t tau
    sigma_p: Scalar = field(default_factory=lambda: -Q)
    sigma_m: Scalar = field(default_factory=lambda: -Scalar.q_power(-1))
    sigma_t: Scalar = field(default_factory=lambda: ONE)
    # Hodge map on the frame: *H(1) = h1 tau, *H(e+-) = hp/hm e+-, *H(tau) = ht
    h1: Scalar = field(default_factory=lambda: ONE)
    hp: Scalar = field(default_factory=lambda: I)
    hm: Scalar = field(default_factory=lambda: MINUS_I)
    ht: Scalar = field(default_factory=lambda: ONE)
    # sesquilinear metric scales per sector: g(f v, h v) = q^nu f h*
    nu_0: int = 0
    nu_p: int = -3
    nu_m: int = 1
    nu_t: int = 0
    # bilinear pairing used by the inverse-metric identity: p(e-, e+) = q^mu
    metric_exponent: int = -2


def standard_constants() -> Constants:
    return Constants()


class Calculus:
    """Differential, wedge and star operations for one constant assignment."""

    def __init__(self, constants: Constants | None = None):
        self.k = constants or standard_constants()
        self._x_memo: dict[tuple[int, Monomial], Scalar] = {}
        self._d_memo: dict[tuple[Monomial, int], Form] = {}

    # -- tangent functionals -------------------------------------------

    def _chi(self, m: Monomial, w: int) -> Scalar:
        # character chi_w: kills b and c, a -> q^-w, d -> q^w
        if m == MONO_ONE:
            return ONE
        if m[0] == 0:
            if m[2] == 0 and m[3] == 0:
                return Scalar.q_power(-w * m[1])
            return ZERO
        if m[1] == 0 and m[2] == 0:
            return Scalar.q_power(w * m[3])
        return ZERO

    def _x_mono(self, sign: int, m: Monomial) -> Scalar:
        """X+ (sign=+1) or X- (sign=-1) on a basis monomial."""
        key = (sign, m)
        hit = self._x_memo.get(key)
        if hit is not None:
            return hit
        out = self._x_word(sign, _mono_word(m))
        self._x_memo[key] = out
        return out

    def _x_word(self, sign: int, word: tuple[Monomial, ...]) -> Scalar:
        if not word:
            return ZERO
        g, rest = word[0], word[1:]
        w = self.k.twist_p if sign > 0 else self.k.twist_m
        gamma = self.k.gamma_p if sign > 0 else self.k.gamma_m
        target = qa.GEN_C if sign > 0 else qa.GEN_B
        val = gamma if g == target else ZERO
        out = ZERO
        if not val.is_zero():
            chi = ONE
            for h in rest:
                chi = chi * self._chi(h, w)
                if chi.is_zero():
                    break
            out = val * chi
        # eps(g) = 1 only for a and d
        if g in (qa.GEN_A, qa.GEN_D) and rest:
            out = out + self._x_word(sign, rest)
        return out

    def x_plus(self, x: Element) -> Scalar:
        out = ZERO
        for m, s in x.terms.items():
            out = out + s * self._x_mono(+1, m)
        return out

    def x_minus(self, x: Element) -> Scalar:
        out = ZERO
        for m, s in x.terms.items():
            out = out + s * self._x_mono(-1, m)
        return out

    def lambda_map(self, x: Element) -> tuple[Scalar, Scalar]:
        """Frame components (on e+, on e-) of the invariant 1-form class of x."""
        return self.x_plus(x), self.x_minus(x)

    # -- coefficient commutation ----------------------------------------

    def commute_past(self, frame_ix: int, f: Element) -> Element:
        """Rewrite (frame symbol) f as (twisted f) (frame symbol).

        The twist is q^(kappa * deg) applied per weight component; it is
        q^(kappa * deg f) f for homogeneous f, and the identity on 1 and tau.
        """
        if f.is_zero() or frame_ix in (F_ONE, F_TAU):
            return f
        kappa = self.k.komm_p if frame_ix == F_EP else self.k.komm_m
        out: dict[Monomial, Scalar] = {}
        for m, s in f.terms.items():
            out[m] = s * Scalar.q_power(kappa * mono_degree(m))
        return Element(out, _clean=True)

    # -- wedge ------------------------------------------------------------

    def wedge(self, w1: Form, w2: Form) -> Form:
        out = ZERO_FORM
        for ix1, c1 in enumerate(w1.c):
            if c1.is_zero():
                continue
            for ix2, c2 in enumerate(w2.c):
                if c2.is_zero():
                    continue
                if FRAME_DEGREE[ix1] + FRAME_DEGREE[ix2] > 2:
                    continue
                if ix1 == F_ONE:
                    out = out + Form.on_frame(ix2, c1 * c2)
                    continue
                moved = self.commute_past(ix1, c2)
                if ix2 == F_ONE:
                    out = out + Form.on_frame(ix1, c1 * moved)
                    continue
                # two 1-forms
                if ix1 == ix2:
                    continue
                coeff = self.k.s_pm if ix1 == F_EP else self.k.s_mp
                out = out + Form.on_frame(F_TAU, (c1 * moved).scale(coeff))
        return out

    # -- exterior derivative ----------------------------------------------

    def _d_mono(self, m: Monomial, frame_ix: int) -> Form:
        key = (m, frame_ix)
        hit = self._d_memo.get(key)
        if hit is not None:
            return hit
        if frame_ix == F_TAU:
            out = ZERO_FORM
        else:
            cp: dict[Monomial, Scalar] = {}
            cm: dict[Monomial, Scalar] = {}
            for m1, m2, s in mono_coproduct(m):
                xp = self._x_mono(+1, m2)
                if not xp.is_zero():
                    qa._acc(cp, m1, s * xp)
                xm = self._x_mono(-1, m2)
                if not xm.is_zero():
                    qa._acc(cm, m1, s * xm)
            ep_coeff = Element(cp, _clean=True)
            em_coeff = Element(cm, _clean=True)
            if frame_ix == F_ONE:
                out = Form(cp=ep_coeff, cm=em_coeff)
            elif frame_ix == F_EP:
                # only the e- part survives against e+
                out = Form(ct=em_coeff.scale(self.k.s_mp))
            else:
                out = Form(ct=ep_coeff.scale(self.k.s_pm))
        self._d_memo[key] = out
        return out

    def d(self, w: Form) -> Form:
        out = ZERO_FORM
        for ix, comp in enumerate(w.c):
            for m, s in comp.terms.items():
                out = out + self._d_mono(m, ix).scale(s)
        return out

    def del_(self, w: Form) -> Form:
        """The (1,0) part of d."""
        full = self.d(w)
        # on functions: keep the e+ component; on (0,1): the tau component;
        # the tau component of d on (1,0) is the dbar part.
        out = Form(cp=full.c[F_EP])
        if not w.c[F_EM].is_zero():
            out = out + Form(ct=self.d(Form(cm=w.c[F_EM])).c[F_TAU])
        return out

    def dbar(self, w: Form) -> Form:
        """The (0,1) part of d."""
        full = self.d(w)
        out = Form(cm=full.c[F_EM])
        if not w.c[F_EP].is_zero():
            out = out + Form(ct=self.d(Form(cp=w.c[F_EP])).c[F_TAU])
        return out

    # -- stars -------------------------------------------------------------

    def form_star(self, w: Form) -> Form:
        """Conjugate-linear involution extending the algebra star.

        (f e+)* = sigma_p e- f* with the starred coefficient then commuted
        back to the left, and likewise on e-; tau coefficients just pick up
        sigma_t.
        """
        k = self.k
        c1, cp, cm, ct = w.c
        new1 = qa.star(c1, k.beta)
        newm = self.commute_past(F_EM, qa.star(cp, k.beta)).scale(k.sigma_p)
        newp = self.commute_past(F_EP, qa.star(cm, k.beta)).scale(k.sigma_m)
        newt = qa.star(ct, k.beta).scale(k.sigma_t)
        return Form(new1, newp, newm, newt)

    def hodge(self, w: Form) -> Form:
        k = self.k
        c1, cp, cm, ct = w.c
        return Form(ct.scale(k.ht), cp.scale(k.hp), cm.scale(k.hm), c1.scale(k.h1))

    def hodge_inverse(self, w: Form) -> Form:
        k = self.k
        c1, cp, cm, ct = w.c
        return Form(ct.scale(k.ht.inverse()), cp.scale(k.hp.inverse()),
                    cm.scale(k.hm.inverse()), c1.scale(k.h1.inverse()))

    # -- convenience ---------------------------------------------------------

    def frame_form(self, ix: int) -> Form:
        return Form.on_frame(ix, ELEM_ONE)

    def e_plus(self) -> Form:
        return self.frame_form(F_EP)

    def e_minus(self) -> Form:
        return self.frame_form(F_EM)

    def tau(self) -> Form:
        return self.frame_form(F_TAU)



def _mono_word(m: Monomial) -> tuple[Monomial, ...]:
    if m[0] == 0:
        gens = (qa.GEN_A, qa.GEN_B, qa.GEN_C)
    else:
        gens = (qa.GEN_B, qa.GEN_C, qa.GEN_D)
    out: list[Monomial] = []
    for g, e in zip(gens, m[1:]):
        out.extend([g] * e)
    return tuple(out)


# ---------------------------------------------------------------------------
# Calibration.
# ---------------------------------------------------------------------------


class CalibrationError(RuntimeError):
    """No assignment, or more than one, survived a pinning stage."""


@dataclass
class CalibrationReport:
    constants: Constants
    stages: list[dict]
    conventions: dict[str, str]

    def to_dict(self) -> dict:
        k = self.constants
        return {
            "constants": {
                "X_plus_on_c": k.gamma_p.render(),
                "X_minus_on_b": k.gamma_m.render(),
                "twist_weights": [k.twist_p, k.twist_m],
                "commutation_exponents": [k.komm_p, k.komm_m],
                "wedge_ep_em": k.s_pm.render(),
                "wedge_em_ep": k.s_mp.render(),
                "star_beta": k.beta.render(),
                "form_star": [k.sigma_p.render(), k.sigma_m.render(),
                              k.sigma_t.render()],
                "hodge": [k.h1.render(), k.hp.render(), k.hm.render(),
                          k.ht.render()],
                "metric_scales_q_exponents": [k.nu_0, k.nu_p, k.nu_m, k.nu_t],
                "metric_exponent": k.metric_exponent,
            },
            "stages": self.stages,
            "conventions": self.conventions,
        }


def _relation_words() -> list[tuple[list[str], list[tuple[Scalar, list[str]]]]]:
    qv = Q
    qi = Scalar.q_power(-1)
    return [
        (["a", "b"], [(qv, ["b", "a"])]),
        (["a", "c"], [(qv, ["c", "a"])]),
        (["b", "c"], [(ONE, ["c", "b"])]),
        (["b", "d"], [(qv, ["d", "b"])]),
        (["c", "d"], [(qv, ["d", "c"])]),
        (["a", "d"], [(ONE, []), (qv, ["b", "c"])]),
        (["d", "a"], [(ONE, []), (qi, ["b", "c"])]),
    ]


def _x_on_word(word: list[str], gamma_p: Scalar, w_p: int, gamma_m: Scalar,
               w_m: int, sign: int) -> Scalar:
    """Twisted-derivation value on a raw generator word (no normalization)."""
    gamma = gamma_p if sign > 0 else gamma_m
    w = w_p if sign > 0 else w_m
    target = "c" if sign > 0 else "b"
    chi = {"a": Scalar.q_power(-w), "d": Scalar.q_power(w), "b": ZERO, "c": ZERO}
    eps = {"a": ONE, "d": ONE, "b": ZERO, "c": ZERO}
    out = ZERO
    for t, g in enumerate(word):
        if g != target:
            continue
        coeff = gamma
        ok = True
        for r in range(t):
            if eps[word[r]].is_zero():
                ok = False
                break
        if not ok:
            continue
        for r in range(t + 1, len(word)):
            coeff = coeff * chi[word[r]]
            if coeff.is_zero():
                break
        out = out + coeff
    return out


def _search_functional(sign: int) -> tuple[Scalar, int, list[dict]]:
    """Grid search for one tangent functional; returns value, twist, log."""
    log: list[dict] = []
    survivors: list[tuple[int, int]] = []
    norm_only: list[tuple[int, int]] = []
    for mpow in range(-2, 3):
        for w in range(-4, 5):
            gamma = Scalar.q_power(mpow)
            gp, wp = (gamma, w) if sign > 0 else (ONE, 1)
            gm, wm = (gamma, w) if sign < 0 else (ONE, 1)

            def xw(word: list[str]) -> Scalar:
                return _x_on_word(word, gp, wp, gm, wm, sign)

            # normalization: X+(b+) = 1, X-(b-) = 1, both kill b0 and 1
            target = xw(["c", "d"]) if sign > 0 else xw(["a", "b"])
            partner = xw(["a", "b"]) if sign > 0 else xw(["c", "d"])
            if target != ONE or not partner.is_zero() or not xw(["b", "c"]).is_zero():
                continue
            norm_only.append((mpow, w))
            ok = True
            for lhs, rhs in _relation_words():
                val = xw(lhs)
                for s, word in rhs:
                    val = val - s * xw(word)
                if not val.is_zero():
                    ok = False
                    break
            if ok:
                survivors.append((mpow, w))
    name = "X+" if sign > 0 else "X-"
    log.append({
        "stage": f"functional {name}",
        "normalization_only_candidates": len(norm_only),
        "survivors": [f"gamma=q^{m}, twist={w}" for m, w in survivors],
    })
    if len(survivors) != 1:
        raise CalibrationError(
            f"{name}: expected a unique (gamma, twist), got {survivors}")
    m, w = survivors[0]
    return Scalar.q_power(m), w, log


def _qpow_phase_grid(powers: Iterable[int]) -> list[Scalar]:
    out = []
    for ph in (ONE, MINUS_ONE, I, MINUS_I):
        for m in powers:
            out.append(ph * Scalar.q_power(m))
    return out


def calibrate(max_check_level: int = 2) -> CalibrationReport:
    """Derive every constant from its pinning tests over a bounded ansatz grid.

    Raises CalibrationError with the surviving candidate list whenever a
    stage does not cut to a unique assignment.  The returned report records
    each stage, the final constants, and the convention choices that remain
    (documented, not searched).
    """
    from . import hermitian, lefschetz, verify

    stages: list[dict] = []

    gamma_p, twist_p, log = _search_functional(+1)
    stages.extend(log)
    gamma_m, twist_m, log = _search_functional(-1)
    stages.extend(log)

    # Commutation exponents: graded Leibniz on (function, 1-form) products.
    # The tau channel compares q^(2 kappa) against the coproduct twist and is
    # independent of the wedge constants, so probe with both set to 1.
    komm_survivors = []
    for kp in range(-2, 3):
        for km in range(-2, 3):
            trial = Calculus(Constants(
                gamma_p=gamma_p, gamma_m=gamma_m, twist_p=twist_p,
                twist_m=twist_m, komm_p=kp, komm_m=km, s_pm=ONE, s_mp=ONE))
            if _leibniz_ok(trial):
                komm_survivors.append((kp, km))
    stages.append({"stage": "commutation exponents",
                   "survivors": [str(s) for s in komm_survivors]})
    if len(komm_survivors) != 1:
        raise CalibrationError(f"commutation exponents: {komm_survivors}")
    komm_p, komm_m = komm_survivors[0]

    # Wedge ratio: d^2 = 0 forces s_mp / s_pm; scan the ratio grid.
    ratio_survivors = []
    for ratio in _qpow_phase_grid(range(-3, 4)):
        trial = Calculus(Constants(
            gamma_p=gamma_p, gamma_m=gamma_m, twist_p=twist_p, twist_m=twist_m,
            komm_p=komm_p, komm_m=komm_m, s_pm=ONE, s_mp=ratio))
        if _d_squared_ok(trial):
            ratio_survivors.append(ratio)
    stages.append({"stage": "wedge ratio e-^e+ / e+^e- (d^2 = 0)",
                   "survivors": [s.render() for s in ratio_survivors]})
    if len(ratio_survivors) != 1:
        raise CalibrationError(f"wedge ratio: {ratio_survivors}")
    ratio = ratio_survivors[0]

    # Algebra star scalar: Hopf *-axioms plus Haar positivity.  Two of the
    # four ansatz values survive every axiom (they differ by a Hopf
    # *-automorphism); the convention is the one with the classical value -1
    # reached through -q.
    beta_survivors = []
    for beta in (Q, -Q, Scalar.q_power(-1), -Scalar.q_power(-1)):
        if _star_axioms_ok(beta) and _star_positivity_ok(beta):
            beta_survivors.append(beta)
    stages.append({"stage": "star scalar *(b) = beta c",
                   "survivors": [b.render() for b in beta_survivors],
                   "note": "axiom-equivalent via the Hopf *-automorphism "
                           "b -> t b, c -> t^-1 c; convention picks -q"})
    if not beta_survivors:
        raise CalibrationError("no star scalar survives")
    beta = -Q
    if beta not in beta_survivors:
        raise CalibrationError(f"star convention -q not among {beta_survivors}")

    # Form-star scalars: (d omega)* = d(omega*) on functions pins sigma_m,
    # involutivity pins sigma_p, anti-multiplicativity over the wedge pins
    # sigma_t once the tau phase is known.  Solve sigma_m on the grid.
    sigma_m_survivors = []
    for sm in _qpow_phase_grid(range(-3, 4)):
        trial = Calculus(Constants(
            gamma_p=gamma_p, gamma_m=gamma_m, twist_p=twist_p, twist_m=twist_m,
            komm_p=komm_p, komm_m=komm_m, s_pm=ONE, s_mp=ratio, beta=beta,
            sigma_m=sm, sigma_p=ONE / sm.conjugate(), sigma_t=ONE))
        if _dstar_function_ok(trial):
            sigma_m_survivors.append(sm)
    stages.append({"stage": "form star (e-)* = sigma_m e+ ((df)* = d f*)",
                   "survivors": [s.render() for s in sigma_m_survivors]})
    if len(sigma_m_survivors) != 1:
        raise CalibrationError(f"sigma_m: {sigma_m_survivors}")
    sigma_m = sigma_m_survivors[0]
    sigma_p = ONE / sigma_m.conjugate()

    # Joint stage for the remaining scale: the tau normalization s_pm, the
    # Hodge eigenvalues, the metric scales.  Pinning tests: the two
    # inner-product routes agree, the Hodge map commutes with the star, the
    # inner product is positive definite, the codifferential formula is the
    # true adjoint, and [L, Lambda] = H.
    final_survivors: list[Constants] = []
    for s_pm in _qpow_phase_grid(range(-2, 3)):
        s_mp = ratio * s_pm
        sigma_t = -sigma_p * sigma_m * s_pm / s_pm.conjugate()
        if sigma_t * sigma_t.conjugate() != ONE:
            continue
        for nu_m in range(-4, 5):
            # route agreement in closed form fixes the remaining entries
            hp = Scalar.q_power(nu_m - 1) / s_pm
            if hp != I:
                # the displayed Hodge table, hodge(e+) = i e+, is a pin
                continue
            hm = hp.conjugate()
            nu_p_scalar = (-Q) * hm * Scalar.q_power(-4) * s_pm
            nu_p = _as_q_power(nu_p_scalar)
            if nu_p is None or hm != -Scalar.q_power(nu_p + 3) / s_pm:
                continue
            cand = Constants(
                gamma_p=gamma_p, gamma_m=gamma_m, twist_p=twist_p,
                twist_m=twist_m, komm_p=komm_p, komm_m=komm_m,
                s_pm=s_pm, s_mp=s_mp, beta=beta, sigma_p=sigma_p,
                sigma_m=sigma_m, sigma_t=sigma_t, h1=ONE, hp=hp, hm=hm,
                ht=ONE, nu_0=0, nu_p=nu_p, nu_m=nu_m, nu_t=0,
                metric_exponent=-2)
            trial = Calculus(cand)
            if not _hodge_star_commute_ok(trial):
                continue
            if not hermitian.routes_agree_sample(trial):
                continue
            if not hermitian.adjointness_sample(trial):
                continue
            if not lefschetz.sl2_sample(trial):
                continue
            final_survivors.append(cand)
    stages.append({
        "stage": "tau normalization, Hodge eigenvalues, metric scales",
        "survivors": [
            f"e+^e- = ({c.s_pm.render()}) tau, hodge(e+) = ({c.hp.render()}) e+, "
            f"metric q-exponents ({c.nu_p}, {c.nu_m})"
            for c in final_survivors],
    })
    if len(final_survivors) != 1:
        raise CalibrationError(
            f"tau/Hodge/metric stage: {len(final_survivors)} survivors")
    constants = final_survivors[0]

    # Metric exponent on the inverse-metric pairing, scanned independently.
    import dataclasses

    mu_survivors = []
    for mu in range(-4, 5):
        cand = dataclasses.replace(constants, metric_exponent=mu)
        if hermitian.inverse_metric_ok(Calculus(cand)):
            mu_survivors.append(mu)
    stages.append({"stage": "metric exponent (inverse metric identity)",
                   "survivors": [str(m) for m in mu_survivors]})
    if len(mu_survivors) != 1:
        raise CalibrationError(f"metric exponent: {mu_survivors}")
    constants = dataclasses.replace(constants, metric_exponent=mu_survivors[0])

    calc = Calculus(constants)
    battery = verify.calibration_battery(calc, max_level=max_check_level)
    failed = [r for r in battery if r["status"] != "pass"]
    if failed:
        raise CalibrationError(f"global verification failed: {failed}")
    stages.append({"stage": "global verification",
                   "checks": len(battery), "failures": 0})

    kappa_coeff = (-constants.s_pm).render()
    conventions = {
        "coefficient_weights": "e+ carries weight +2 coefficients, e- weight -2 "
                               "(forced by the tangent functional supports)",
        "tau_vs_wedge": f"e+ ^ e- = ({constants.s_pm.render()}) tau; the phase "
                        "is imaginary, so the displayed wedge values hold up "
                        "to this common tau normalization",
        "wedge_display_phase": (constants.s_pm * Scalar.q_power(-2)).render(),
        "kappa": f"kappa = -e+ ^ e- = ({kappa_coeff}) tau",
        "kahler_constant": "the Lefschetz commutators produce +-dbar/del with "
                           "real constant 1 in this integral normalization "
                           "(the geometric normalization carries the i)",
        "dual_lefschetz": "Lambda = (hodge o star)^-1 o L o (hodge o star), "
                          "the conjugate-linear Hodge composite; equals the "
                          "metric adjoint of L",
    }
    return CalibrationReport(constants=constants, stages=stages,
                             conventions=conventions)


def _as_q_power(s: Scalar) -> int | None:
    for m in range(-8, 9):
        if s == Scalar.q_power(m):
            return m
    return None


def _leibniz_ok(calc: Calculus) -> bool:
    funcs = [qa.B_MINUS, qa.B_ZERO, qa.B_PLUS]
    ones = ([Form(cp=e) for e in _weight_elems(2)]
            + [Form(cm=e) for e in _weight_elems(-2)])
    for f in funcs:
        ff = Form.from_function(f)
        df = calc.d(ff)
        for om in ones:
            lhs = calc.d(calc.wedge(ff, om))
            rhs = calc.wedge(df, om) + calc.wedge(ff, calc.d(om))
            if lhs != rhs:
                return False
    return True


def _weight_elems(w: int) -> list[Element]:
    if w == 2:
        return [qa.D * qa.D, qa.B * qa.D, qa.B * qa.B]
    return [qa.A * qa.A, qa.A * qa.C, qa.C * qa.C]


def _d_squared_ok(calc: Calculus) -> bool:
    for el in [qa.B_MINUS, qa.B_ZERO, qa.B_PLUS,
               qa.B_ZERO * qa.B_PLUS, qa.B_MINUS * qa.B_ZERO,
               qa.B_MINUS * qa.B_PLUS]:
        if not calc.d(calc.d(Form.from_function(el))).is_zero():
            return False
    return True


def _star_axioms_ok(beta: Scalar) -> bool:
    gens = [qa.A, qa.B, qa.C, qa.D]
    for x in gens + [qa.B_PLUS, qa.B_MINUS * qa.B_ZERO]:
        if qa.star(qa.star(x, beta), beta) != x:
            return False
    for x in gens:
        for y in gens:
            if qa.star(x * y, beta) != qa.star(y, beta) * qa.star(x, beta):
                return False
    # coalgebra compatibility on generators
    for x in gens:
        lhs = qa.coproduct(qa.star(x, beta))
        rhs = qa.Tensor({}, _clean=True)
        for m1, m2, s in qa.coproduct(x):
            e1 = qa.star(Element.from_mono(m1), beta)
            e2 = qa.star(Element.from_mono(m2), beta)
            for mm1, s1 in e1.terms.items():
                for mm2, s2 in e2.terms.items():
                    rhs = rhs + qa.Tensor({(mm1, mm2): s.conjugate() * s1 * s2})
        if lhs != rhs:
            return False
    return True


def _star_positivity_ok(beta: Scalar) -> bool:
    s0 = Fraction(7, 10)
    basis = qa.monomials_up_to(2)
    gram = [[qa.haar_form(Element.from_mono(x), Element.from_mono(y), beta)
             for y in basis] for x in basis]
    from .verify import leading_minors_positive
    return leading_minors_positive(gram, s0)


def _dstar_function_ok(calc: Calculus) -> bool:
    for f in [qa.B_MINUS, qa.B_ZERO, qa.B_PLUS, qa.B_MINUS * qa.B_PLUS]:
        ff = Form.from_function(f)
        if calc.form_star(calc.d(ff)) != calc.d(calc.form_star(ff)):
            return False
    return True


def _hodge_star_commute_ok(calc: Calculus) -> bool:
    probes = [UNIT_FORM, calc.tau(), calc.e_plus(), calc.e_minus(),
              Form(cp=qa.D * qa.D), Form(cm=qa.A * qa.C),
              Form.from_function(qa.B_ZERO), Form(ct=qa.B_PLUS)]
    for w in probes:
        if calc.hodge(calc.form_star(w)) != calc.form_star(calc.hodge(w)):
            return False
    return True


STANDARD = Calculus()
