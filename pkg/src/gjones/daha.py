"""Operator actions behind the transition coefficients.

Two module structures are implemented:

* the right action of the quantum-torus generators X, Y, s and of the
  deformed shift (Dunkl) operator on Laurent polynomials in U, carrying
  the distinguished vector U - U^-1;
* the T1/T3 generator actions on Laurent polynomials in X, T1 with
  parameters (t1, t2) and T3 with parameters (t3, t4).

Conventions: right actions compose left to right, f.(AB) = (f.A).B.
The basic generators act by

    f(U) . Y = f(U) * U^-1
    f(U) . X = -f(q^2 U)          (so U^k is an eigenvector: -q^(2k) U^k)
    f(U) . s = -f(U^-1)

The deformed shift acts monomial-wise through the scalar function
a(k) = (tbar2 - tbar1 q^(1-2k)) / {2k-1}:

    U^k . Y' = (t1 - a(k)) U^(k-1) - a(k) U^(-k)

Its two-sided inverse follows from a 2x2 solve on each monomial whose
determinant is identically 1 (because a(k+1) + a(-k) = tbar1):

    U^k . Y'^-1 = (t1 - a(-k)) U^(k+1) + a(k+1) U^(-k)
"""

from __future__ import annotations

from functools import lru_cache

from .exactalg import (VARS, LaurentPoly, QFraction, divide_one_minus_sq,
                       qbrace_poly)


class NotSkewSymmetric(ArithmeticError):
    """An operator-expanded vector failed the U -> U^-1 sign check."""


class NonPolynomialResult(ArithmeticError):
    """A generator action left an uncancelled X-denominator."""


_T1 = LaurentPoly.var("t1")
_T1I = LaurentPoly.var("t1", -1)
_TBAR1 = _T1 - _T1I
_TBAR2 = LaurentPoly.var("t2") - LaurentPoly.var("t2", -1)


class UPoly:
    """Laurent polynomial in U with QFraction coefficients in (q, t1, t2)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: dict[int, QFraction] | None = None):
        self._c = {k: c for k, c in (coeffs or {}).items() if not c.is_zero}

    @classmethod
    def monomial(cls, k: int, c: QFraction | LaurentPoly | int = 1) -> UPoly:
        if not isinstance(c, QFraction):
            c = QFraction(c)
        return cls({k: c})

    @property
    def is_zero(self) -> bool:
        return not self._c

    def coeff(self, k: int) -> QFraction:
        return self._c.get(k, QFraction.zero())

    def support(self) -> list[int]:
        return sorted(self._c)

    def __add__(self, other: UPoly) -> UPoly:
        out = dict(self._c)
        for k, c in other._c.items():
            s = out.get(k)
            out[k] = c if s is None else s + c
        return UPoly(out)

    def __sub__(self, other: UPoly) -> UPoly:
        return self + (-other)

    def __neg__(self) -> UPoly:
        return UPoly({k: -c for k, c in self._c.items()})

    def scale(self, c: QFraction | LaurentPoly | int) -> UPoly:
        if not isinstance(c, QFraction):
            c = QFraction(c)
        return UPoly({k: ck * c for k, ck in self._c.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return (self - other).is_zero

    def eval_at(self, j: int) -> QFraction:
        """Evaluate at U = -q^(2j): sum of c_k (-1)^k q^(2jk)."""
        out = QFraction.zero()
        for k, c in self._c.items():
            sign = -1 if k % 2 else 1
            out = out + c * LaurentPoly.term(sign, q=2 * j * k)
        return out

    def __str__(self) -> str:
        parts = [f"U^{k}: {c}" for k, c in sorted(self._c.items())]
        return "{" + ", ".join(parts) + "}" if parts else "0"

    __repr__ = __str__


def base_vector() -> UPoly:
    """The distinguished cyclic vector U - U^-1."""
    return UPoly({1: QFraction.one(), -1: -QFraction.one()})


def act_x(f: UPoly) -> UPoly:
    return UPoly({k: c * LaurentPoly.term(-1, q=2 * k) for k, c in f._c.items()})


def act_y(f: UPoly) -> UPoly:
    return UPoly({k - 1: c for k, c in f._c.items()})


def act_s(f: UPoly) -> UPoly:
    return UPoly({-k: -c for k, c in f._c.items()})


def act_basic(f: UPoly, gen: str) -> UPoly:
    """Right action of a basic generator: gen in {"X", "Y", "s"}."""
    try:
        return {"X": act_x, "Y": act_y, "s": act_s}[gen](f)
    except KeyError:
        raise ValueError(f"unknown generator {gen!r}") from None


@lru_cache(maxsize=None)
def a_scalar(k: int) -> QFraction:
    """The X-eigenvalue scalar of the Dunkl correction term at U^k.

    Evaluating (q tbar1 X^-1 + tbar2)/(q X^-1 - q^-1 X) at X = -q^(2k)
    gives (tbar2 - tbar1 q^(1-2k)) / {2k-1}; the sign is absorbed so the
    stored brace index is positive.
    """
    num = _TBAR2 - _TBAR1 * LaurentPoly.var("q", 1 - 2 * k)
    m = 2 * k - 1
    if m < 0:
        return QFraction(-num, (-m,))
    return QFraction(num, (m,))


def dunkl_y(f: UPoly, inverse: bool = False) -> UPoly:
    """Right action of the deformed shift operator (or its inverse)."""
    out: dict[int, QFraction] = {}

    def add(k: int, c: QFraction) -> None:
        s = out.get(k)
        out[k] = c if s is None else s + c

    t1 = QFraction(_T1)
    for k, c in f._c.items():
        if inverse:
            add(k + 1, c * (t1 - a_scalar(-k)))
            add(-k, c * a_scalar(k + 1))
        else:
            add(k - 1, c * (t1 - a_scalar(k)))
            add(-k, -(c * a_scalar(k)))
    return UPoly(out)


def act_y_dunkl(f: UPoly, inverse: bool = False) -> UPoly:
    return dunkl_y(f, inverse)


def dunkl_pair(f: UPoly) -> UPoly:
    """f . (Y' + Y'^-1)."""
    return dunkl_y(f) + dunkl_y(f, inverse=True)


@lru_cache(maxsize=None)
def _s_vector(j: int) -> UPoly:
    # (U - U^-1) . S_j(Y' + Y'^-1) via the Chebyshev recurrence
    if j < 0:
        return UPoly()
    if j == 0:
        return base_vector()
    return dunkl_pair(_s_vector(j - 1)) - _s_vector(j - 2)


def skew_coefficients(v: UPoly, pmax: int | None = None) -> dict[int, QFraction]:
    """Expand a vector over the skew basis U^p - U^-p, p >= 1.

    Raises NotSkewSymmetric unless v changes sign under U -> U^-1 (and,
    when ``pmax`` is given, unless the support stays within it).
    """
    if not v.coeff(0).is_zero:
        raise NotSkewSymmetric("U^0 coefficient is nonzero")
    out: dict[int, QFraction] = {}
    for p in range(1, max((abs(k) for k in v.support()), default=0) + 1):
        cp, cm = v.coeff(p), v.coeff(-p)
        if not (cp + cm).is_zero:
            raise NotSkewSymmetric(f"skew symmetry fails at p={p}")
        if not cp.is_zero:
            out[p] = cp.reduced()
    if pmax is not None and any(p > pmax for p in out):
        raise NotSkewSymmetric(f"support exceeds U^{pmax}")
    return out


def transition_row(n: int) -> dict[int, QFraction]:
    """Expand (U - U^-1) . S_{n-1}(Y' + Y'^-1) over the skew basis U^p - U^-p.

    Returns {p: coefficient} for p = 1..n.  The expanded vector must be
    skew-symmetric under U -> U^-1; a failure means the operator actions
    are broken and raises NotSkewSymmetric.
    """
    if n < 1:
        raise ValueError("transition_row requires n >= 1")
    return skew_coefficients(_s_vector(n - 1), pmax=n)


def dunkl_pair_eval(f: UPoly, N: int) -> QFraction:
    """Closed form of [f . (Y' + Y'^-1)] at U = -q^(2N), N >= 1.

    Equals -(t1 q^-2N + t1^-1 q^2N) f(-q^2N)
           + tbar1 sum_{p=0}^{N-1} {2p} f(-q^(2(2p-N)))
           - tbar2 sum_{p=0}^{N-1} {2p+1} f(-q^(2(2p-N+1))).
    """
    if N < 1:
        raise ValueError("dunkl_pair_eval requires N >= 1")
    lead = LaurentPoly.term(-1, t1=1, q=-2 * N) + LaurentPoly.term(-1, t1=-1, q=2 * N)
    out = f.eval_at(N) * lead
    for p in range(N):
        if p:
            out = out + f.eval_at(2 * p - N) * (_TBAR1 * qbrace_poly(2 * p))
        out = out - f.eval_at(2 * p - N + 1) * (_TBAR2 * qbrace_poly(2 * p + 1))
    return out


# ---------------------------------------------------------------------------
# Polynomial-line generators T1 and T3
# ---------------------------------------------------------------------------

class XFrac:
    """Laurent polynomial in X over powers of (1 - X^2).

    T1 keeps polynomials polynomial, but T3 with generic parameters does
    not; composed relations are therefore checked on this carrier, where
    the only denominator ever needed is (1 - X^2)^j.
    """

    __slots__ = ("num", "j")

    def __init__(self, num: LaurentPoly, j: int = 0):
        self.num = num
        self.j = j

    @classmethod
    def poly(cls, p: LaurentPoly) -> XFrac:
        return cls(p, 0)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def _match(self, other: XFrac) -> tuple[LaurentPoly, LaurentPoly, int]:
        j = max(self.j, other.j)
        onemx2 = LaurentPoly.one() - LaurentPoly.var("X", 2)
        na, nb = self.num, other.num
        for _ in range(j - self.j):
            na = na * onemx2
        for _ in range(j - other.j):
            nb = nb * onemx2
        return na, nb, j

    def __add__(self, other: XFrac) -> XFrac:
        na, nb, j = self._match(other)
        return XFrac(na + nb, j)

    def __sub__(self, other: XFrac) -> XFrac:
        na, nb, j = self._match(other)
        return XFrac(na - nb, j)

    def scale(self, c: LaurentPoly | int) -> XFrac:
        return XFrac(self.num * c, self.j)

    def reduced(self) -> XFrac:
        num, j = self.num, self.j
        if num.is_zero:
            return XFrac(num, 0)
        while j > 0:
            qt = divide_one_minus_sq(num, "X")
            if qt is None:
                break
            num, j = qt, j - 1
        return XFrac(num, j)

    def as_poly(self) -> LaurentPoly:
        r = self.reduced()
        if r.j:
            raise NonPolynomialResult("a (1 - X^2) denominator survives")
        return r.num

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XFrac):
            return NotImplemented
        na, nb, _ = self._match(other)
        return na == nb


def _sub_x_inv(p: LaurentPoly) -> LaurentPoly:
    return p.substitute("X", LaurentPoly.var("X", -1))


_XI = VARS.index("X")


def _geometric(n: int) -> LaurentPoly:
    # (1 - (qX)^2n) / (1 - (qX)^2) read as a sum: forward for n >= 0,
    # the complementary negated range for n < 0
    out = LaurentPoly.zero()
    ks = range(n) if n >= 0 else range(n, 0)
    sgn = 1 if n >= 0 else -1
    for k in ks:
        out = out + LaurentPoly.term(sgn, q=2 * k, X=2 * k)
    return out


def t1_act(f: XFrac | LaurentPoly) -> XFrac:
    """T1 . X^n = t1 q^-2n X^-n + q^-2n X^-n (q^2 tbar1 X^2 + q tbar2 X) * g_n,

    where g_n is the geometric reading of (1 - (qX)^2n) / (1 - (qX)^2):
    sum_{k=0}^{n-1} (qX)^2k for n >= 0 and -sum_{k=n}^{-1} (qX)^2k for
    n < 0, the unique extension keeping the rational identity.  The result
    is always polynomial.

    This is t1*V + a(X)(1 - V) for the involution V: f -> f(q^-2 X^-1)
    and a(X) = (q tbar1 X + tbar2)/(q X - q^-1 X^-1); the quadratic Hecke
    relation holds because a + V(a) = tbar1, and it pins the q^-2n power
    of the leading term.
    """
    if isinstance(f, XFrac):
        f = f.as_poly()
    bracket = (LaurentPoly.term(1, q=2, t1=1, X=2) - LaurentPoly.term(1, q=2, t1=-1, X=2)
               + LaurentPoly.term(1, q=1, t2=1, X=1) - LaurentPoly.term(1, q=1, t2=-1, X=1))
    out = LaurentPoly.zero()
    for mono, c in f.terms_sorted():
        n = mono[_XI]
        rest = list(mono)
        rest[_XI] = 0
        restpoly = LaurentPoly({tuple(rest): c})
        lead = LaurentPoly.term(1, t1=1, q=-2 * n, X=-n)
        tail = LaurentPoly.term(1, q=-2 * n, X=-n) * bracket * _geometric(n)
        out = out + restpoly * (lead + tail)
    return XFrac.poly(out)


def t3_act(f: XFrac | LaurentPoly, generic: bool = True) -> XFrac:
    """T3 . f = -t3 f(X^-1) + (tbar3 + tbar4 X)(f + f(X^-1)) / (1 - X^2).

    With t3 = t4 = 1 (generic=False) this collapses to -f(X^-1) and keeps
    polynomials polynomial; with generic parameters the denominator is
    genuine and the result lives on the XFrac carrier.
    """
    if isinstance(f, LaurentPoly):
        f = XFrac.poly(f)
    g, j = f.num, f.j
    ghat = _sub_x_inv(g)
    # (1 - X^-2)^j = (-1)^j X^-2j (1 - X^2)^j
    sign = -1 if j % 2 else 1
    xshift = LaurentPoly.term(sign, X=2 * j)
    fhat_num = xshift * ghat          # f(X^-1) = fhat_num / (1 - X^2)^j
    if not generic:
        return XFrac(-fhat_num, j).reduced()
    t3 = LaurentPoly.var("t3")
    tbar34 = (t3 - LaurentPoly.var("t3", -1)
              + LaurentPoly.term(1, t4=1, X=1) - LaurentPoly.term(1, t4=-1, X=1))
    onemx2 = LaurentPoly.one() - LaurentPoly.var("X", 2)
    num = -(t3 * fhat_num) * onemx2 + tbar34 * (g + fhat_num)
    return XFrac(num, j + 1).reduced()


def polyrep_act(f: LaurentPoly | XFrac, gen: str, generic_t34: bool = False) -> LaurentPoly:
    """Apply a polynomial-line generator and insist on a polynomial result.

    T1 always lands back in Laurent polynomials.  T3 does so for
    t3 = t4 = 1; with generic parameters a single application generally
    leaves a (1 - X^2) pole and NonPolynomialResult is raised.
    """
    if isinstance(f, LaurentPoly):
        f = XFrac.poly(f)
    if gen == "T1":
        return t1_act(f).as_poly()
    if gen == "T3":
        return t3_act(f, generic=generic_t34).as_poly()
    raise ValueError(f"unknown generator {gen!r}")


def hecke_defect(gen: str, n: int) -> XFrac:
    """(T - t)(T + t^-1) applied to X^n; identically zero when the
    quadratic Hecke relation holds.  T1 runs with formal (t1, t2), T3 with
    formal (t3, t4) on the rational carrier."""
    xn = XFrac.poly(LaurentPoly.var("X", n))
    if gen == "T1":
        t, tinv = LaurentPoly.var("t1"), LaurentPoly.var("t1", -1)
        step = t1_act(xn) + xn.scale(tinv)
        return (t1_act(step) - step.scale(t)).reduced()
    if gen == "T3":
        t, tinv = LaurentPoly.var("t3"), LaurentPoly.var("t3", -1)
        step = t3_act(xn) + xn.scale(tinv)
        return (t3_act(step) - step.scale(t)).reduced()
    raise ValueError(f"unknown generator {gen!r}")
