"""q-combinatorial building blocks.

Braces, balanced q-integers and q-binomials, finite q-Pochhammer products,
Chebyshev coefficient sequences, the classical cyclotomic coefficients, and
the signed binomial weights with their companion product polynomial.

Balanced convention throughout: [n] in base b is the Laurent polynomial
sum_{j=0}^{n-1} q^{b(n-1-2j)}, i.e. [n] in the variable q^b, symmetric
under q -> q^-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactalg import LaurentPoly, QFraction, qbrace_poly


def qbrace(n: int) -> LaurentPoly:
    """{n} = q^n - q^-n; antisymmetric in n, {0} = 0."""
    return qbrace_poly(n)


def _check_base(base: int) -> None:
    if base <= 0 or base % 2:
        raise ValueError("base must be a positive even exponent")


@lru_cache(maxsize=None)
def qint(n: int, base: int) -> LaurentPoly:
    """Balanced q-integer [n] in the variable q^base; equals {base*n}/{base}."""
    _check_base(base)
    if n < 0:
        raise ValueError("qint requires n >= 0")
    out = LaurentPoly.zero()
    for j in range(n):
        out = out + LaurentPoly.var("q", base * (n - 1 - 2 * j))
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, m: int, base: int) -> LaurentPoly:
    """Balanced q-binomial coefficient in base ``base``, 0 <= m <= n.

    Computed by the q-Pascal recurrence, so no division is ever needed:
    [n,m] = q^(b*m) [n-1,m] + q^(-b*(n-m)) [n-1,m-1].
    """
    _check_base(base)
    if m < 0 or m > n:
        raise IndexError(f"qbinom out of range: n={n}, m={m}")
    if m == 0 or m == n:
        return LaurentPoly.one()
    left = qbinom(n - 1, m, base) * LaurentPoly.var("q", base * m)
    right = qbinom(n - 1, m - 1, base) * LaurentPoly.var("q", -base * (n - m))
    return left + right


@lru_cache(maxsize=None)
def gauss_qbinom(n: int, m: int, base: int) -> LaurentPoly:
    """One-sided Gaussian binomial in the variable Q = q^base.

    Equals (Q^base-Pochhammer quotient) with nonnegative powers only;
    related to the balanced form by q^(base*m*(n-m)) * qbinom(n, m, base).
    """
    if base <= 0:
        raise ValueError("base must be a positive exponent")
    if m < 0 or m > n:
        raise IndexError(f"gauss_qbinom out of range: n={n}, m={m}")
    if m == 0 or m == n:
        return LaurentPoly.one()
    return (gauss_qbinom(n - 1, m - 1, base)
            + gauss_qbinom(n - 1, m, base) * LaurentPoly.var("q", base * m))


def qpochhammer(a_qexp: int, base_exp: int, n: int) -> LaurentPoly:
    """Finite product (q^a; q^b)_n = prod_{k=0}^{n-1} (1 - q^(a + k*b))."""
    if n < 0:
        raise ValueError("qpochhammer requires n >= 0")
    out = LaurentPoly.one()
    for k in range(n):
        out = out * (LaurentPoly.one() - LaurentPoly.var("q", a_qexp + k * base_exp))
    return out


@dataclass(frozen=True)
class ChebCoeffs:
    """Coefficient sequence of a Chebyshev polynomial in its argument.

    ``coeffs[d]`` is the integer coefficient of arg^d.  Kind T starts from
    T0 = 2, T1 = arg; kind S from S0 = 1, S1 = arg; both satisfy
    P_{n+1} = arg*P_n - P_{n-1}.
    """
    kind: str
    n: int
    coeffs: tuple[int, ...]


@lru_cache(maxsize=None)
def chebyshev(kind: str, n: int) -> ChebCoeffs:
    if kind not in ("T", "S"):
        raise ValueError("kind must be 'T' or 'S'")
    if n < 0:
        raise ValueError("chebyshev requires n >= 0")
    prev = [2] if kind == "T" else [1]
    if n == 0:
        return ChebCoeffs(kind, 0, tuple(prev))
    cur = [0, 1]
    for _ in range(n - 1):
        nxt = [0] + cur
        for d, c in enumerate(prev):
            nxt[d] -= c
        prev, cur = cur, nxt
    return ChebCoeffs(kind, n, tuple(cur))


def cheb_eval(c: ChebCoeffs, arg: LaurentPoly) -> LaurentPoly:
    """Expand the coefficient sequence at a polynomial argument."""
    out = LaurentPoly.zero()
    p = LaurentPoly.one()
    for d, cd in enumerate(c.coeffs):
        if cd:
            out = out + p * cd
        if d < len(c.coeffs) - 1:
            p = p * arg
    return out


@lru_cache(maxsize=None)
def cyclotomic_c(n: int, i: int) -> LaurentPoly:
    """Classical cyclotomic coefficient c_{n,i-1}, 1 <= i <= n.

    The product prod_{p=n-i+1}^{n+i-1} {2p} divided by {2}; the division is
    always exact (the factor {2n} alone is a multiple of {2}).
    """
    if i < 1 or i > n:
        raise IndexError(f"cyclotomic_c out of range: n={n}, i={i}")
    num = LaurentPoly.one()
    for p in range(n - i + 1, n + i):
        num = num * qbrace(2 * p)
    return QFraction(num, (2,)).as_poly()


@lru_cache(maxsize=None)
def alpha_weight(i: int, k: int) -> LaurentPoly:
    """Signed q^2-binomial weight (-1)^(i-k) [2i-1, i-k] in base 2, 1 <= k <= i."""
    if k < 1 or k > i:
        raise IndexError(f"alpha_weight out of range: i={i}, k={k}")
    sign = -1 if (i - k) % 2 else 1
    return qbinom(2 * i - 1, i - k, 2) * sign


@lru_cache(maxsize=None)
def eigen_product(i: int) -> LaurentPoly:
    """Product polynomial prod_{k=1}^{i-1} (q^-2k X - q^2k X^-1)(q^2k X - q^-2k X^-1).

    Symmetric in X -> X^-1; multiplying by X - X^-1 expands it over the
    alpha weights on the odd powers of X (see the tests).
    """
    if i < 1:
        raise ValueError("eigen_product requires i >= 1")
    out = LaurentPoly.one()
    for k in range(1, i):
        f1 = LaurentPoly.term(1, q=-2 * k, X=1) - LaurentPoly.term(1, q=2 * k, X=-1)
        f2 = LaurentPoly.term(1, q=2 * k, X=1) - LaurentPoly.term(1, q=-2 * k, X=-1)
        out = out * f1 * f2
    return out
