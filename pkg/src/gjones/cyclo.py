"""Transition coefficients and generalized cyclotomic coefficients.

The triangular table a[n][p] is generated by the recurrence

    a[n+1][p] = A(p) a[n][p-1] + (A(p) - A(p+1)) a[n][p] + A(-p) a[n][p+1]
                - a[n-1][p]

from a[1][1] = 1, with a[n][0] = 0 and a[n][p] = 0 for p > n.  The same
rows come out of the Dunkl-operator expansion in ``daha``; the two routes
cross-check each other.

Generalized cyclotomic coefficients are then available by four routes:

* ``coeff_sum``        weighted sum over a table row (production route);
* ``coeff_series``     lam-series from a lower-triangular solve;
* ``coeff_det_series`` same series from a small bordered determinant;
* ``coeff_t2one``      closed form at t2 = 1 via Rogers polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactalg import LaurentPoly, QFraction, TruncatedSeries, qbrace_poly, qfrac_sum
from .macdonald import rogers_c
from .qcombo import alpha_weight, cyclotomic_c, qint


class IntegralityViolation(ArithmeticError):
    """A generalized coefficient failed to reduce to a Laurent polynomial."""


@lru_cache(maxsize=None)
def a_ratio(p: int) -> QFraction:
    """A(p) = (q^(2p-1) t1^-1 - q^(1-2p) t1 + t2 - t2^-1) / {2p-1}.

    Defined for every integer p; the brace index 2p-1 is never zero, and
    for p <= 0 the sign is folded into the numerator so the stored brace
    stays positive.  At t1 = t2 = 1 the value is 1 for all p.
    """
    num = (LaurentPoly.term(1, q=2 * p - 1, t1=-1)
           - LaurentPoly.term(1, q=1 - 2 * p, t1=1)
           + LaurentPoly.var("t2") - LaurentPoly.var("t2", -1))
    m = 2 * p - 1
    if m < 0:
        return QFraction(-num, (-m,))
    return QFraction(num, (m,))


@dataclass(frozen=True)
class ATable:
    """Triangular table of transition coefficients a[n][p], 1 <= p <= n <= nmax."""

    nmax: int
    rows: tuple[dict[int, QFraction], ...]

    def get(self, n: int, p: int) -> QFraction:
        """Entry with the skew extension: a[n][-p] = -a[n][p], a[n][0] = 0."""
        if n < 1 or n > self.nmax or p == 0 or abs(p) > n:
            return QFraction.zero()
        row = self.rows[n - 1]
        if p > 0:
            return row.get(p, QFraction.zero())
        v = row.get(-p)
        return -v if v is not None else QFraction.zero()

    def row(self, n: int) -> dict[int, QFraction]:
        return dict(self.rows[n - 1])


@lru_cache(maxsize=8)
def a_table(nmax: int) -> ATable:
    """Fill the table row by row from the recurrence and boundary rows."""
    if nmax < 1:
        raise ValueError("a_table requires nmax >= 1")
    rows: list[dict[int, QFraction]] = [{1: QFraction.one()}]
    for n in range(1, nmax):
        prev = rows[n - 1]
        below = rows[n - 2] if n >= 2 else {}
        cur: dict[int, QFraction] = {}
        for p in range(1, n + 2):
            acc = QFraction.zero()
            left = prev.get(p - 1)
            if left is not None:
                acc = acc + a_ratio(p) * left
            mid = prev.get(p)
            if mid is not None:
                acc = acc + (a_ratio(p) - a_ratio(p + 1)) * mid
            right = prev.get(p + 1)
            if right is not None:
                acc = acc + a_ratio(-p) * right
            low = below.get(p)
            if low is not None:
                acc = acc - low
            acc = acc.reduced()
            if not acc.is_zero:
                cur[p] = acc
        rows.append(cur)
    return ATable(nmax, tuple(rows))


def _coeff_sum_impl(n: int, i: int, table: ATable) -> LaurentPoly:
    parts = []
    for p in range(i, n + 1):
        a = table.get(n, p)
        if a.is_zero:
            continue
        term = a * cyclotomic_c(p, i)
        parts.append(term if (n + p) % 2 == 0 else -term)
    try:
        return qfrac_sum(parts).as_poly()
    except ValueError as exc:
        raise IntegralityViolation(f"coefficient (n={n}, i={i}) kept {exc}") from exc


@lru_cache(maxsize=None)
def _coeff_sum_cached(n: int, i: int) -> LaurentPoly:
    return _coeff_sum_impl(n, i, a_table(n))


def coeff_sum(n: int, i: int, table: ATable | None = None) -> LaurentPoly:
    """Generalized cyclotomic coefficient via sum_{p=i}^{n} (-1)^(n+p) a[n][p] c[p][i-1].

    The classical coefficients vanish for p < i, so the sum starts at i.
    The result must reduce to an integer Laurent polynomial; anything else
    signals a bug and raises IntegralityViolation.
    """
    if i < 1 or n < i:
        raise IndexError(f"coeff_sum out of range: n={n}, i={i}")
    if table is None:
        return _coeff_sum_cached(n, i)
    return _coeff_sum_impl(n, i, table)


# ---------------------------------------------------------------------------
# lam-series route
# ---------------------------------------------------------------------------

def b_entry(p: int, N: int) -> LaurentPoly:
    """Sub-diagonal entry coupling row p to column N of the triangular system.

    The parity of p - N selects which deformation parameter appears:
    (-1)^sel * ({p+N} - {p-N}) * (t_sel - t_sel^-1) with sel = 1 for p - N
    even and sel = 2 for p - N odd.  (sel is a parity selector, not the
    matrix size index.)
    """
    if not 1 <= N < p:
        raise IndexError(f"b_entry needs p > N >= 1, got p={p}, N={N}")
    braces = qbrace_poly(p + N) - qbrace_poly(p - N)
    if (p - N) % 2 == 0:
        tbar = LaurentPoly.var("t1") - LaurentPoly.var("t1", -1)
        return -(braces * tbar)
    tbar = LaurentPoly.var("t2") - LaurentPoly.var("t2", -1)
    return braces * tbar


def gamma_lam(N: int, order: int) -> TruncatedSeries:
    """lam * gamma_N = -1 + (q^2N t1^-1 + q^-2N t1) lam - lam^2.

    Multiplying each row of the system by lam clears lam^-1 and leaves a
    unit constant term, so plain power-series inversion applies.
    """
    mid = LaurentPoly.term(1, q=2 * N, t1=-1) + LaurentPoly.term(1, q=-2 * N, t1=1)
    return TruncatedSeries([LaurentPoly.const(-1), mid, LaurentPoly.const(-1)], order)


@lru_cache(maxsize=None)
def _eigen_row(N: int, order: int) -> TruncatedSeries:
    rhs = TruncatedSeries([LaurentPoly.zero(), -qbrace_poly(2 * N)], order)
    acc = rhs
    for M in range(1, N):
        acc = acc - _eigen_row(M, order).scale(b_entry(N, M)).shift(1)
    return gamma_lam(N, order).invert() * acc


def eigen_series(n_values: list[int] | tuple[int, ...], order: int) -> dict[int, TruncatedSeries]:
    """Solve the lam-cleared lower-triangular system by forward substitution.

    Returns the series attached to each requested index N >= 1; every
    series has constant term 0.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    return {N: _eigen_row(N, order) for N in n_values}


def coeff_series(i: int, order: int) -> TruncatedSeries:
    """Generating series whose lam^n coefficient is the (n, i) generalized
    coefficient: a {2}-normalized alpha-weighted combination of the odd
    rows of the triangular solve."""
    if i < 1:
        raise ValueError("coeff_series requires i >= 1")
    if order < i:
        raise ValueError("order must be at least i")
    rows = eigen_series([2 * k - 1 for k in range(1, i + 1)], order)
    acc = TruncatedSeries.zero(order)
    for k in range(1, i + 1):
        acc = acc + rows[2 * k - 1].scale(alpha_weight(i, k))
    return acc.scale(QFraction(LaurentPoly.one(), (2,)))


# ---------------------------------------------------------------------------
# determinant route
# ---------------------------------------------------------------------------

def _det(rows: list[list[TruncatedSeries]]) -> TruncatedSeries:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    out: TruncatedSeries | None = None
    for j, entry in enumerate(rows[0]):
        if entry.is_zero:
            continue
        minor = _det([r[:j] + r[j + 1:] for r in rows[1:]])
        term = entry * minor
        if j % 2:
            term = -term
        out = term if out is None else out + term
    return out if out is not None else TruncatedSeries.zero(rows[0][0].order)


def coeff_det_series(i: int, order: int) -> TruncatedSeries:
    """The same generating series from the bordered (2i x 2i) matrix:
    det(B) / prod_{N=1}^{2i-1} gamma_N, rows pre-multiplied by lam.

    Symbolic determinants blow up quickly, so i is capped at 3; this route
    exists as a verification oracle and CLI alternate.
    """
    if not 1 <= i <= 3:
        raise ValueError("determinant route is limited to 1 <= i <= 3")
    if order < i:
        raise ValueError("order must be at least i")
    size = 2 * i
    zero = TruncatedSeries.zero(order)
    rows: list[list[TruncatedSeries]] = []
    top = [zero] * size
    for k in range(1, i + 1):
        top[2 * k - 1] = TruncatedSeries.constant(alpha_weight(i, k), order)
    rows.append(top)
    for N in range(1, size):
        row = [zero] * size
        row[0] = TruncatedSeries([LaurentPoly.zero(), qint(N, 2)], order)
        for M in range(1, N):
            row[M] = TruncatedSeries([LaurentPoly.zero(), b_entry(N, M)], order)
        row[N] = gamma_lam(N, order)
        rows.append(row)
    det = _det(rows)
    for N in range(1, size):
        det = det * gamma_lam(N, order).invert()
    return det


# ---------------------------------------------------------------------------
# t2 = 1 closed form
# ---------------------------------------------------------------------------

def coeff_t2one(n: int, i: int) -> LaurentPoly:
    """Closed form at t2 = 1 (deformation variable t1), via the explicit
    Rogers-polynomial expansion:

        c[i][i-1] * q^(-2(n-i)(i-1)) * C_{n-i}(q^2i t1^-1) * prod_{k=2}^{i} A(k)|_{t2=1}
    """
    if i < 1 or n < i:
        raise IndexError(f"coeff_t2one out of range: n={n}, i={i}")
    rog = rogers_c(n - i, i).substitute("x", LaurentPoly.term(1, q=2 * i, t1=-1))
    acc = QFraction(cyclotomic_c(i, i) * rog * LaurentPoly.var("q", -2 * (n - i) * (i - 1)))
    for k in range(2, i + 1):
        acc = acc * a_ratio(k).substitute("t2", 1)
    try:
        return acc.as_poly()
    except ValueError as exc:
        raise IntegralityViolation(f"t2=1 coefficient (n={n}, i={i}) kept {exc}") from exc


@dataclass(frozen=True)
class CoeffTable:
    """Triangular tables of classical and generalized coefficients."""

    nmax: int
    route: str
    classical: tuple[tuple[LaurentPoly, ...], ...]
    generalized: tuple[tuple[LaurentPoly, ...], ...]

    def c(self, n: int, i: int) -> LaurentPoly:
        return self.classical[n - 1][i - 1]

    def chat(self, n: int, i: int) -> LaurentPoly:
        return self.generalized[n - 1][i - 1]


def coeff_table(nmax: int, route: str = "sum") -> CoeffTable:
    if route not in ("sum", "series", "det"):
        raise ValueError(f"unknown route {route!r}")
    classical = tuple(tuple(cyclotomic_c(n, i) for i in range(1, n + 1))
                      for n in range(1, nmax + 1))
    if route == "sum":
        table = a_table(nmax)
        gen = tuple(tuple(coeff_sum(n, i, table) for i in range(1, n + 1))
                    for n in range(1, nmax + 1))
    else:
        maker = coeff_series if route == "series" else coeff_det_series
        cols = {i: maker(i, nmax) for i in range(1, nmax + 1)}
        gen = tuple(tuple(_series_coeff_poly(cols[i], n, i) for i in range(1, n + 1))
                    for n in range(1, nmax + 1))
    return CoeffTable(nmax, route, classical, gen)


def _series_coeff_poly(series: TruncatedSeries, n: int, i: int) -> LaurentPoly:
    try:
        return series.coeff(n).as_poly()
    except ValueError as exc:
        raise IntegralityViolation(f"series coefficient (n={n}, i={i}) kept {exc}") from exc
