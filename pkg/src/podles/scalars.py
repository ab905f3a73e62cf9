"""Exact arithmetic in the field Q(i)(s), where s is a formal square root of q.

Every coefficient in the engine is a ratio of polynomials in s with Gaussian
rational coefficients, kept in a canonical reduced form: numerator and
denominator coprime, denominator monic.  Equality of values is then literal
equality of representations, which the verification suites rely on.

The deformation parameter is q = s**2.  The square root is carried so that
half-integer q-powers are available if a normalization ever needs one; in
practice everything the engine produces lives in Q(i)(q).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Fraction
_F0 = Fraction(0)
_F1 = Fraction(1)

# A Gaussian rational is a (real, imag) pair of Fractions.
GaussRat = tuple[Fraction, Fraction]
GR_ZERO: GaussRat = (_F0, _F0)
GR_ONE: GaussRat = (_F1, _F0)


def gr_add(x: GaussRat, y: GaussRat) -> GaussRat:
    return (x[0] + y[0], x[1] + y[1])


def gr_sub(x: GaussRat, y: GaussRat) -> GaussRat:
    return (x[0] - y[0], x[1] - y[1])


def gr_mul(x: GaussRat, y: GaussRat) -> GaussRat:
    # real-by-real is by far the common case
    if x[1] == 0:
        if y[1] == 0:
            return (x[0] * y[0], _F0)
        return (x[0] * y[0], x[0] * y[1])
    if y[1] == 0:
        return (x[0] * y[0], x[1] * y[0])
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def gr_neg(x: GaussRat) -> GaussRat:
    return (-x[0], -x[1])


def gr_conj(x: GaussRat) -> GaussRat:
    return (x[0], -x[1])


def gr_inv(x: GaussRat) -> GaussRat:
    n = x[0] * x[0] + x[1] * x[1]
    if n == 0:
        raise ZeroDivisionError("inverse of zero Gaussian rational")
    return (x[0] / n, -x[1] / n)


def gr_is_zero(x: GaussRat) -> bool:
    return x[0] == 0 and x[1] == 0


# Polynomials in s are tuples of GaussRat, lowest degree first, no trailing zeros.
Poly = tuple[GaussRat, ...]
P_ZERO: Poly = ()
P_ONE: Poly = (GR_ONE,)


def _ptrim(cs: list[GaussRat]) -> Poly:
    while cs and gr_is_zero(cs[-1]):
        cs.pop()
    return tuple(cs)


def p_add(u: Poly, v: Poly) -> Poly:
    if len(u) < len(v):
        u, v = v, u
    out = list(u)
    for k, c in enumerate(v):
        out[k] = gr_add(out[k], c)
    return _ptrim(out)


def p_neg(u: Poly) -> Poly:
    return tuple(gr_neg(c) for c in u)


def p_sub(u: Poly, v: Poly) -> Poly:
    return p_add(u, p_neg(v))


def p_mul(u: Poly, v: Poly) -> Poly:
    if not u or not v:
        return P_ZERO
    out = [GR_ZERO] * (len(u) + len(v) - 1)
    for a, ca in enumerate(u):
        if gr_is_zero(ca):
            continue
        for b, cb in enumerate(v):
            if gr_is_zero(cb):
                continue
            out[a + b] = gr_add(out[a + b], gr_mul(ca, cb))
    return _ptrim(out)


def p_scale(u: Poly, c: GaussRat) -> Poly:
    if gr_is_zero(c):
        return P_ZERO
    return _ptrim([gr_mul(x, c) for x in u])


def p_divmod(u: Poly, v: Poly) -> tuple[Poly, Poly]:
    if not v:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(u)
    q = [GR_ZERO] * max(0, len(u) - len(v) + 1)
    inv_lead = gr_inv(v[-1])
    dv = len(v) - 1
    while len(r) >= len(v):
        while r and gr_is_zero(r[-1]):
            r.pop()
        if len(r) < len(v):
            break
        coef = gr_mul(r[-1], inv_lead)
        shift = len(r) - 1 - dv
        q[shift] = coef
        for k, c in enumerate(v):
            r[shift + k] = gr_sub(r[shift + k], gr_mul(coef, c))
    return _ptrim(q), _ptrim(r)


def p_monic(u: Poly) -> Poly:
    if not u or u[-1] == GR_ONE:
        return u
    return p_scale(u, gr_inv(u[-1]))


def _p_valuation(u: Poly) -> int:
    for i, c in enumerate(u):
        if not gr_is_zero(c):
            return i
    return 0


def _p_nterms(u: Poly) -> int:
    return sum(1 for c in u if not gr_is_zero(c))


def p_gcd(u: Poly, v: Poly) -> Poly:
    if not u or not v:
        return p_monic(u or v) if (u or v) else P_ONE
    # strip the common power of s first; a monomial then divides out entirely
    vu, vv = _p_valuation(u), _p_valuation(v)
    shift = min(vu, vv)
    u, v = u[vu:], v[vv:]
    base = (GR_ZERO,) * shift + (GR_ONE,)
    if len(u) == 1 or len(v) == 1 or _p_nterms(u) == 1 or _p_nterms(v) == 1:
        return base if shift else P_ONE
    while v:
        _, r = p_divmod(u, v)
        u, v = v, r
    g = p_monic(u)
    if shift:
        g = p_mul(base, g)
    return g


def p_conj(u: Poly) -> Poly:
    # s itself is fixed (q is treated as real); only i is conjugated.
    return tuple(gr_conj(c) for c in u)


def p_eval(u: Poly, s0: Fraction) -> GaussRat:
    re, im = _F0, _F0
    pw = _F1
    for (cr, ci) in u:
        re += cr * pw
        im += ci * pw
        pw *= s0
    return (re, im)


class SpecializationPole(ZeroDivisionError):
    """Raised when a scalar is specialized at a point where its denominator vanishes."""


class Scalar:
    """An element of Q(i)(s) in canonical form.

    Immutable and hashable.  Arithmetic returns new canonical values, so two
    equal field elements always compare (and hash) equal.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly = P_ONE, _canonical: bool = False):
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_rational(p: Union[int, Fraction], q: int = 1) -> "Scalar":
        f = Fraction(p, q)
        if f == 0:
            return ZERO
        return Scalar(((f, _F0),), P_ONE, _canonical=True)

    @staticmethod
    def from_gauss(re: Union[int, Fraction], im: Union[int, Fraction]) -> "Scalar":
        re, im = Fraction(re), Fraction(im)
        if re == 0 and im == 0:
            return ZERO
        return Scalar((((re, im)),), P_ONE, _canonical=True)

    @staticmethod
    def s_power(k: int) -> "Scalar":
        if k >= 0:
            return Scalar((GR_ZERO,) * k + (GR_ONE,), P_ONE, _canonical=True)
        return Scalar(P_ONE, (GR_ZERO,) * (-k) + (GR_ONE,), _canonical=True)

    @staticmethod
    def q_power(k: int) -> "Scalar":
        return Scalar.s_power(2 * k)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == P_ONE and self.den == P_ONE

    def is_real(self) -> bool:
        return all(c[1] == 0 for c in self.num) and all(c[1] == 0 for c in self.den)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den:
            return Scalar(p_add(self.num, other.num), self.den)
        return Scalar(
            p_add(p_mul(self.num, other.den), p_mul(other.num, self.den)),
            p_mul(self.den, other.den),
        )

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __neg__(self) -> "Scalar":
        return Scalar(p_neg(self.num), self.den, _canonical=True)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self.is_zero() or other.is_zero():
            return ZERO
        if self.is_one():
            return other
        if other.is_one():
            return self
        return Scalar(p_mul(self.num, other.num), p_mul(self.den, other.den))

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if self.is_zero():
            return ZERO
        return Scalar(p_mul(self.num, other.den), p_mul(self.den, other.num))

    def inverse(self) -> "Scalar":
        return ONE / self

    def __pow__(self, k: int) -> "Scalar":
        if k == 0:
            return ONE
        base = self if k > 0 else self.inverse()
        out = ONE
        for _ in range(abs(k)):
            out = out * base
        return out

    def conjugate(self) -> "Scalar":
        return Scalar(p_conj(self.num), p_conj(self.den), _canonical=True)

    def specialize(self, s0: Union[int, Fraction]) -> GaussRat:
        """Exact evaluation at s = s0.  Raises SpecializationPole at a pole."""
        s0 = Fraction(s0)
        d = p_eval(self.den, s0)
        if gr_is_zero(d):
            raise SpecializationPole(f"pole at s = {s0}")
        return gr_mul(p_eval(self.num, s0), gr_inv(d))

    # -- comparison ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.num, self.den)))
        return self._hash

    # -- rendering -----------------------------------------------------

    def render(self) -> str:
        """Canonical text form, e.g. ``-q*(1 + q^2)^-1``.

        Round-trips through the CLI expression parser.
        """
        if self.is_zero():
            return "0"
        num_s, num_multi = _poly_str(self.num)
        if self.den == P_ONE:
            return num_s
        den_s, _ = _poly_str(self.den)
        right = f"({den_s})^-1"
        if num_s == "1":
            return right
        if num_s == "-1":
            return f"-{right}"
        left = f"({num_s})" if num_multi else num_s
        return f"{left}*{right}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Scalar({self.render()})"


def _canonicalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return P_ZERO, P_ONE
    # common power of s
    vn, vd = _p_valuation(num), _p_valuation(den)
    shift = min(vn, vd)
    if shift:
        num, den = num[shift:], den[shift:]
    # after the shift a monomial numerator or denominator is already coprime
    if _p_nterms(num) > 1 and _p_nterms(den) > 1:
        g = p_gcd(num, den)
        if len(g) > 1:
            num, _ = p_divmod(num, g)
            den, _ = p_divmod(den, g)
    lead = den[-1]
    if lead != GR_ONE:
        inv = gr_inv(lead)
        num = p_scale(num, inv)
        den = p_scale(den, inv)
    return num, den


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _gr_term(c: GaussRat) -> tuple[str, bool]:
    """Render a Gaussian rational; second value marks an a+bi composite."""
    re, im = c
    if im == 0:
        return _frac_str(re), False
    if re == 0:
        if im == 1:
            return "i", False
        if im == -1:
            return "-i", False
        return f"{_frac_str(im)}*i", False
    im_s = "i" if im == 1 else ("-i" if im == -1 else f"{_frac_str(im)}*i")
    joiner = " + " if not im_s.startswith("-") else " - "
    return f"{_frac_str(re)}{joiner}{im_s.lstrip('-')}", True


def _power_sym(k: int) -> str:
    # s^(2m) prints as q^m; an odd power keeps a single s factor.
    m, r = divmod(k, 2)
    parts = []
    if m == 1:
        parts.append("q")
    elif m > 1:
        parts.append(f"q^{m}")
    if r:
        parts.append("s")
    return "*".join(parts)


def _poly_str(u: Poly) -> tuple[str, bool]:
    terms: list[str] = []
    for k, c in enumerate(u):
        if gr_is_zero(c):
            continue
        sym = _power_sym(k)
        cs, composite = _gr_term(c)
        if not sym:
            terms.append(f"({cs})" if composite else cs)
        elif cs == "1":
            terms.append(sym)
        elif cs == "-1":
            terms.append(f"-{sym}")
        else:
            cs = f"({cs})" if composite else cs
            terms.append(f"{cs}*{sym}")
    out = terms[0]
    for t in terms[1:]:
        out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
    return out, len(terms) > 1


ZERO = Scalar(P_ZERO, P_ONE, _canonical=True)
ONE = Scalar(P_ONE, P_ONE, _canonical=True)
MINUS_ONE = Scalar(((( -_F1), _F0),), P_ONE, _canonical=True)
I = Scalar(((_F0, _F1),), P_ONE, _canonical=True)
MINUS_I = Scalar(((_F0, -_F1),), P_ONE, _canonical=True)
S = Scalar.s_power(1)
Q = Scalar.q_power(1)
Q_INV = Scalar.q_power(-1)


def integer(n: int) -> Scalar:
    return Scalar.from_rational(n)

