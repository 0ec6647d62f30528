"""Knot records and polynomial assembly.

A knot enters the library only through its cyclotomic expansion data: the
sequence of integer Laurent polynomials H_k(q) multiplying the classical
cyclotomic coefficients.  Two knots are built in (the unknot and the
figure-eight); everything else is ingested from JSON files of the form

    {"name": str,
     "habiro": [[[q_exponent, int_coeff], ...], ...],
     "all_ones": bool}

where habiro[k] lists the terms of H_k.  all_ones = true means H_k = 1
for every k.  Coefficients must be integers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache

from .cyclo import ATable, IntegralityViolation, a_table, coeff_series, coeff_sum, coeff_t2one
from .exactalg import LaurentPoly, QFraction, qfrac_sum
from .qcombo import cyclotomic_c, qint


class MissingHabiro(LookupError):
    """The knot's expansion data does not reach the requested color."""


class RouteUnavailable(ValueError):
    """The requested evaluation route does not apply to these parameters."""


@dataclass(frozen=True)
class KnotRecord:
    """A knot name plus its expansion polynomial sequence.

    ``all_ones`` means H_k = 1 for every k; ``zero_tail`` means entries
    beyond the explicit list are genuinely zero (used by the built-in
    unknot, not expressible in the file format where padding is explicit).
    """

    name: str
    habiro: tuple[LaurentPoly, ...] = ()
    all_ones: bool = False
    zero_tail: bool = False

    def habiro_at(self, k: int) -> LaurentPoly:
        if k < 0:
            raise IndexError("habiro index must be >= 0")
        if self.all_ones:
            return LaurentPoly.one()
        if k < len(self.habiro):
            return self.habiro[k]
        if self.zero_tail:
            return LaurentPoly.zero()
        raise MissingHabiro(
            f"knot {self.name!r} defines H_k only for k < {len(self.habiro)}, needed k={k}")


@lru_cache(maxsize=None)
def unknot() -> KnotRecord:
    return KnotRecord("unknot", (LaurentPoly.one(),), zero_tail=True)


@lru_cache(maxsize=None)
def figure_eight() -> KnotRecord:
    return KnotRecord("figure-eight", (), all_ones=True)


_BUILTINS = {"unknot": unknot, "figure-eight": figure_eight, "figure_eight": figure_eight}


def builtin_knot(name: str) -> KnotRecord:
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown knot {name!r}; built-ins: unknot, figure-eight") from None


def knot_from_dict(data: dict) -> KnotRecord:
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise ValueError("knot record needs a nonempty string 'name'")
    all_ones = bool(data.get("all_ones", False))
    seq = []
    for k, terms in enumerate(data.get("habiro", [])):
        p = LaurentPoly.zero()
        for entry in terms:
            if len(entry) != 2:
                raise ValueError(f"H_{k}: each term must be [q_exponent, coeff]")
            e, c = entry
            if not isinstance(e, int) or not isinstance(c, int) or isinstance(c, bool):
                raise ValueError(f"H_{k}: exponents and coefficients must be integers")
            p = p + LaurentPoly.term(c, q=e)
        seq.append(p)
    return KnotRecord(name, tuple(seq), all_ones=all_ones)


def load_knot_file(path: str) -> KnotRecord:
    with open(path, "r", encoding="utf-8") as fh:
        return knot_from_dict(json.load(fh))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

def classical_jones(knot: KnotRecord, n: int) -> LaurentPoly:
    """J_n(q) = sum_{i=1}^n c[n][i-1] H_{i-1}(q); J_0 = 0 and J_1 = H_0."""
    if n < 0:
        raise ValueError("color n must be >= 0")
    out = LaurentPoly.zero()
    for i in range(1, n + 1):
        h = knot.habiro_at(i - 1)
        if not h.is_zero:
            out = out + cyclotomic_c(n, i) * h
    return out


def _specialize(p: LaurentPoly, t1, t2) -> LaurentPoly:
    if t1 == 1:
        p = p.substitute("t1", 1)
    if t2 == 1:
        p = p.substitute("t2", 1)
    return p


def generalized_jones(knot: KnotRecord, n: int, t1=None, t2=None,
                      route: str = "sum", table: ATable | None = None) -> LaurentPoly:
    """The two-parameter deformation sum_i chat[n][i-1](q, t1, t2) H_{i-1}(q).

    ``t1``/``t2`` are either None (keep the formal variable) or the int 1.
    Routes: "sum" (default), "series", and "macdonald" (t2 = 1 only).
    The result always reduces to an integer Laurent polynomial; at
    t1 = t2 = 1 it equals the classical polynomial.
    """
    if n < 0:
        raise ValueError("color n must be >= 0")
    if t1 not in (None, 1) or t2 not in (None, 1):
        raise ValueError("specializations accept only 1 or the formal variable")
    if route not in ("sum", "series", "macdonald"):
        raise RouteUnavailable(f"unknown route {route!r}")
    if route == "macdonald" and t2 != 1:
        raise RouteUnavailable("the macdonald route needs t2 = 1")
    if n == 0:
        return LaurentPoly.zero()
    if route == "series":
        cols = {i: coeff_series(i, n) for i in range(1, n + 1)}

        def chat(nn: int, i: int) -> LaurentPoly:
            try:
                return cols[i].coeff(nn).as_poly()
            except ValueError as exc:
                raise IntegralityViolation(str(exc)) from exc
    elif route == "macdonald":
        def chat(nn: int, i: int) -> LaurentPoly:
            return coeff_t2one(nn, i)
    else:
        def chat(nn: int, i: int) -> LaurentPoly:
            return coeff_sum(nn, i, table)

    out = LaurentPoly.zero()
    for i in range(1, n + 1):
        h = knot.habiro_at(i - 1)
        if not h.is_zero:
            out = out + chat(n, i) * h
    return _specialize(out, t1, t2)


@dataclass(frozen=True)
class RepClass:
    """A finite combination of irreducible classes [V_p] with QFraction weights."""

    coeffs: dict[int, QFraction] = field(default_factory=dict)

    def coeff(self, p: int) -> QFraction:
        return self.coeffs.get(p, QFraction.zero())


def tilde_v(n: int, table: ATable | None = None) -> RepClass:
    """The deformed class: coefficient of [V_p] is (-1)^(n+p) a[n][p]."""
    if n < 1:
        raise ValueError("tilde_v requires n >= 1")
    if table is None:
        table = a_table(n)
    out: dict[int, QFraction] = {}
    for p in range(1, n + 1):
        a = table.get(n, p)
        if not a.is_zero:
            out[p] = a if (n + p) % 2 == 0 else -a
    return RepClass(out)


def sigma_trace(k: int, n: int) -> LaurentPoly:
    """Quantum trace of the k-th central element on the n-dimensional class.

    Computed through the Casimir scalar chi = v^n + v^-n with v = q^2:

        [n]_{q^2} * prod_{i=1}^k (chi^2 - (v^i + v^-i)^2)

    which reproduces the classical cyclotomic coefficient c[n][k] for
    k < n and vanishes for k >= n (the i = n factor is zero).
    """
    if k < 0 or n < 1:
        raise ValueError("sigma_trace requires k >= 0 and n >= 1")
    chi = LaurentPoly.var("q", 2 * n) + LaurentPoly.var("q", -2 * n)
    chi2 = chi * chi
    out = qint(n, 2)
    for i in range(1, k + 1):
        vi = LaurentPoly.var("q", 2 * i) + LaurentPoly.var("q", -2 * i)
        out = out * (chi2 - vi * vi)
        if out.is_zero:
            break
    return out


def universal_eval(knot: KnotRecord, n: int, t1=None, t2=None,
                   table: ATable | None = None) -> LaurentPoly:
    """Evaluate through the deformed class: sum_p (-1)^(n+p) a[n][p] J_p(q).

    Agrees exactly with ``generalized_jones``; the classical polynomials
    J_p are assembled before the transition weights are applied, so the
    two computations share only the table itself.
    """
    if n < 0:
        raise ValueError("color n must be >= 0")
    if n == 0:
        return LaurentPoly.zero()
    if table is None:
        table = a_table(n)
    parts = []
    for p in range(1, n + 1):
        a = table.get(n, p)
        if a.is_zero:
            continue
        term = a * classical_jones(knot, p)
        parts.append(term if (n + p) % 2 == 0 else -term)
    try:
        poly = qfrac_sum(parts).as_poly()
    except ValueError as exc:
        raise IntegralityViolation(f"universal evaluation at n={n}: {exc}") from exc
    return _specialize(poly, t1, t2)
