"""Exact sparse arithmetic substrate.

Three layers, each immutable and exact:

``LaurentPoly``
    Sparse Laurent polynomials with arbitrary-precision integer
    coefficients in the fixed variable set q, t1, t2, t3, t4, U, X, x, lam.

``QFraction``
    A Laurent polynomial divided by a multiset of q-braces
    {m} = q^m - q^-m.  These are the only denominators the library ever
    needs, so no general rational-function field is built; reduction
    removes brace factors by exact trial division and never changes the
    value.

``TruncatedSeries``
    Power series in lam to a fixed order with QFraction coefficients.
    lam^-1 never appears in a stored series: every equation involving
    lam + lam^-1 is multiplied through by lam before it reaches this type.

All values are immutable after construction and every operation is a pure
function, so values may be shared between threads freely.

Monomials are packed into a single integer key, one 20-bit biased field
per variable with q in the most significant position, so that monomial
multiplication is one integer addition and sorting keys numerically gives
the canonical term order (ascending lexicographic on the exponents of
q, t1, t2, ..., module variable).
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable

VARS = ("q", "t1", "t2", "t3", "t4", "U", "X", "x", "lam")
_VIDX = {v: i for i, v in enumerate(VARS)}
_NV = len(VARS)

_FIELD = 20
_BIAS = 1 << (_FIELD - 1)
_MASK = (1 << _FIELD) - 1
_EXP_LIMIT = 1 << 17        # construction-time guard, leaves product headroom
_SHIFTS = tuple(_FIELD * (_NV - 1 - i) for i in range(_NV))
_OFFSET = sum(_BIAS << s for s in _SHIFTS)

# JSON term lists expose exponents for the public variables, in this order.
JSON_VARS = ("q", "t1", "t2", "U", "X", "x", "lam")

_LATEX_NAMES = {"q": "q", "t1": "t_1", "t2": "t_2", "t3": "t_3", "t4": "t_4",
                "U": "U", "X": "X", "x": "x", "lam": "\\lambda"}


class NonUnitConstantTerm(ArithmeticError):
    """Series inversion requires a single-monomial unit constant term."""


def _pack(mono: tuple[int, ...]) -> int:
    return sum((e + _BIAS) << s for e, s in zip(mono, _SHIFTS))


def _unpack(key: int) -> tuple[int, ...]:
    return tuple(((key >> s) & _MASK) - _BIAS for s in _SHIFTS)


def _mono_key(**exps: int) -> int:
    key = _OFFSET
    for name, e in exps.items():
        if name not in _VIDX:
            raise ValueError(f"unknown variable {name!r}; allowed: {', '.join(VARS)}")
        if abs(e) >= _EXP_LIMIT:
            raise ValueError(f"exponent {e} out of supported range")
        key += e << _SHIFTS[_VIDX[name]]
    return key


class LaurentPoly:
    """Sparse exact Laurent polynomial with integer coefficients.

    The public face of a term is a tuple of exponents, one slot per
    variable in ``VARS``; internally terms are keyed by packed integers.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: dict[tuple[int, ...], int] | None = None):
        self._t: dict[int, int] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    self._t[_pack(mono)] = c

    @classmethod
    def _raw(cls, packed: dict[int, int]) -> LaurentPoly:
        p = cls.__new__(cls)
        p._t = packed
        return p

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls._raw({})

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls._raw({_OFFSET: 1})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls._raw({_OFFSET: c} if c else {})

    @classmethod
    def term(cls, coeff: int, **exps: int) -> LaurentPoly:
        """Single term ``coeff * prod(var^exp)``, e.g. ``term(-3, q=2, t1=-1)``."""
        return cls._raw({_mono_key(**exps): coeff} if coeff else {})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> LaurentPoly:
        return cls.term(1, **{name: exp})

    # -- inspection ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._t

    def __len__(self) -> int:
        return len(self._t)

    def terms_sorted(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in the canonical order: ascending lexicographic exponents."""
        return [(_unpack(k), self._t[k]) for k in sorted(self._t)]

    def coeff(self, **exps: int) -> int:
        return self._t.get(_mono_key(**exps), 0)

    def exponents(self, name: str) -> set[int]:
        s = _SHIFTS[_VIDX[name]]
        return {((k >> s) & _MASK) - _BIAS for k in self._t}

    def vars_used(self) -> set[str]:
        used: set[str] = set()
        for k in self._t:
            for i, s in enumerate(_SHIFTS):
                if ((k >> s) & _MASK) != _BIAS:
                    used.add(VARS[i])
        return used

    def as_single_term(self) -> tuple[tuple[int, ...], int]:
        if len(self._t) != 1:
            raise ValueError("not a single-term polynomial")
        k, c = next(iter(self._t.items()))
        return _unpack(k), c

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._t:
            return other
        if not other._t:
            return self
        out = dict(self._t)
        get = out.get
        for k, c in other._t.items():
            s = get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return LaurentPoly._raw(out)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._t:
            return self
        out = dict(self._t)
        get = out.get
        for k, c in other._t.items():
            s = get(k, 0) - c
            if s:
                out[k] = s
            else:
                del out[k]
        return LaurentPoly._raw(out)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return LaurentPoly._raw({})
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        off = _OFFSET
        items_b = list(b.items())
        for ka, ca in a.items():
            base = ka - off
            for kb, cb in items_b:
                k = base + kb
                s = get(k, 0) + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            mono, c = self.as_single_term()
            if c not in (1, -1):
                raise ValueError("negative powers only for unit monomials")
            inv = LaurentPoly({tuple(-e for e in mono): c})
            return inv ** (-n)
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._t == ({} if other == 0 else {_OFFSET: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    # -- substitution -------------------------------------------------

    def substitute(self, name: str, image: LaurentPoly | int) -> LaurentPoly:
        """Replace ``name`` by a signed monomial image, exactly.

        ``image`` must be a single term with coefficient +1 or -1 (ints 1
        and -1 are accepted); its exponents may be negative, so inversions
        like U -> U^-1 and evaluations like U -> -q^2 are all covered.
        """
        if isinstance(image, int):
            image = LaurentPoly.const(image)
        if len(image._t) != 1:
            raise ValueError("substitution image must be a single term")
        ikey, ic = next(iter(image._t.items()))
        if ic not in (1, -1):
            raise ValueError("substitution image must have coefficient +1 or -1")
        delta = ikey - _OFFSET
        sh = _SHIFTS[_VIDX[name]]
        out: dict[int, int] = {}
        get = out.get
        for k, c in self._t.items():
            e = ((k >> sh) & _MASK) - _BIAS
            if e:
                k = k - (e << sh) + e * delta
                if ic == -1 and e % 2:
                    c = -c
            s = get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return LaurentPoly._raw(out)

    # -- rendering ----------------------------------------------------

    def render(self, fmt: str = "text") -> str:
        if not self._t:
            return "0"
        parts = []
        for mono, c in self.terms_sorted():
            if fmt == "latex":
                body = "".join(
                    _LATEX_NAMES[VARS[i]] + (f"^{{{e}}}" if e != 1 else "")
                    for i, e in enumerate(mono) if e
                )
                sep = ""
            else:
                body = "*".join(
                    VARS[i] + (f"^{e}" if e != 1 else "")
                    for i, e in enumerate(mono) if e
                )
                sep = "*"
            if not body:
                s = str(c)
            elif c == 1:
                s = body
            elif c == -1:
                s = "-" + body
            else:
                s = f"{c}{sep}{body}"
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def json_terms(self) -> list[list[int]]:
        """Term list ``[[e_q, e_t1, e_t2, e_U, e_X, e_x, e_lam, coeff], ...]``."""
        idx = [_VIDX[v] for v in JSON_VARS]
        hidden = [i for i in range(_NV) if VARS[i] not in JSON_VARS]
        rows = []
        for mono, c in self.terms_sorted():
            if any(mono[i] for i in hidden):
                raise ValueError("polynomial uses variables outside the JSON schema")
            rows.append([mono[i] for i in idx] + [c])
        return rows

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.render()})"


def qbrace_poly(m: int) -> LaurentPoly:
    """The q-brace {m} = q^m - q^-m as a polynomial; {0} = 0."""
    if m == 0:
        return LaurentPoly.zero()
    return LaurentPoly._raw({_mono_key(q=m): 1, _mono_key(q=-m): -1})


def _divide_var_binomial(p: LaurentPoly, name: str, e_hi: int, c_hi: int,
                         e_lo: int, c_lo: int) -> LaurentPoly | None:
    """Exact division of ``p`` by ``c_hi*name^e_hi + c_lo*name^e_lo``.

    The divisor coefficients must be +1 or -1 and e_hi > e_lo.  Returns
    the quotient, or None when the division is not exact.  Synthetic
    division along the distinguished variable, scanning exponents
    downward; whatever cannot be absorbed is a remainder and aborts.
    """
    if p.is_zero:
        return p
    sh = _SHIFTS[_VIDX[name]]
    step = e_hi - e_lo
    buckets: dict[int, dict[int, int]] = {}
    for k, c in p._t.items():
        e = ((k >> sh) & _MASK) - _BIAS
        buckets.setdefault(e, {})[k] = c
    emax = max(buckets)
    emin = min(buckets)
    gain = -c_lo * c_hi
    quot: dict[int, int] = {}
    for e in range(emax, emin + step - 1, -1):
        cur = buckets.pop(e, None)
        if not cur:
            continue
        low = buckets.setdefault(e - step, {})
        get = low.get
        for k, c in cur.items():
            quot[k - (e_hi << sh)] = c_hi * c
            kl = k - (step << sh)
            s = get(kl, 0) + gain * c
            if s:
                low[kl] = s
            else:
                del low[kl]
    for rest in buckets.values():
        if rest:
            return None
    return LaurentPoly._raw(quot)


def divide_brace(p: LaurentPoly, m: int) -> LaurentPoly | None:
    """Exact division by {m} = q^m - q^-m, or None if not exact."""
    return _divide_var_binomial(p, "q", m, 1, -m, -1)


def divide_one_minus_sq(p: LaurentPoly, name: str) -> LaurentPoly | None:
    """Exact division by 1 - name^2, or None if not exact."""
    return _divide_var_binomial(p, name, 2, -1, 0, 1)


def brace_product(ms: Iterable[int]) -> LaurentPoly:
    out = LaurentPoly.one()
    for m in ms:
        out = out * qbrace_poly(m)
    return out


def _times_braces(p: LaurentPoly, ms: Iterable[int]) -> LaurentPoly:
    # one brace at a time: multiplying by the expanded product would cost
    # 2^k times more on large polynomials
    for m in ms:
        p = p * qbrace_poly(m)
    return p


class QFraction:
    """A LaurentPoly numerator over a multiset of q-brace factors.

    ``den`` is a sorted tuple of positive ints, each standing for a factor
    {m} = q^m - q^-m.  An empty den means the value is just the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly | int, den: Iterable[int] = ()):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        d = tuple(sorted(den)) if not num.is_zero else ()
        if any(m <= 0 for m in d):
            raise ValueError("brace denominators must be positive integers")
        self.num = num
        self.den = d

    @classmethod
    def zero(cls) -> QFraction:
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls) -> QFraction:
        return cls(LaurentPoly.one())

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    # -- arithmetic over the least common brace multiset ---------------

    def _match(self, other: QFraction) -> tuple[LaurentPoly, LaurentPoly, tuple[int, ...]]:
        if self.den == other.den:
            return self.num, other.num, self.den
        ca, cb = Counter(self.den), Counter(other.den)
        lcm = ca | cb
        na = _times_braces(self.num, (lcm - ca).elements())
        nb = _times_braces(other.num, (lcm - cb).elements())
        return na, nb, tuple(sorted(lcm.elements()))

    def __add__(self, other: QFraction) -> QFraction:
        if not isinstance(other, QFraction):
            return NotImplemented
        na, nb, den = self._match(other)
        return QFraction(na + nb, den)

    def __sub__(self, other: QFraction) -> QFraction:
        if not isinstance(other, QFraction):
            return NotImplemented
        na, nb, den = self._match(other)
        return QFraction(na - nb, den)

    def __neg__(self) -> QFraction:
        return QFraction(-self.num, self.den)

    def __mul__(self, other: QFraction | LaurentPoly | int) -> QFraction:
        if isinstance(other, QFraction):
            return QFraction(self.num * other.num, self.den + other.den)
        if isinstance(other, (LaurentPoly, int)):
            return QFraction(self.num * other, self.den)
        return NotImplemented

    __rmul__ = __mul__

    def over_braces(self, ms: Iterable[int]) -> QFraction:
        """Divide by the brace factors {m} for each m in ``ms``."""
        return QFraction(self.num, self.den + tuple(ms))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QFraction(other)
        if not isinstance(other, QFraction):
            return NotImplemented
        na, nb, _ = self._match(other)
        return na == nb

    def __hash__(self) -> int:
        r = self.reduced()
        return hash((r.num, r.den))

    def reduced(self) -> QFraction:
        """Remove every brace factor that divides the numerator exactly."""
        if self.num.is_zero or not self.den:
            return self
        num = self.num
        rem = list(self.den)
        progress = True
        while progress and rem:
            progress = False
            for i, m in enumerate(rem):
                qt = divide_brace(num, m)
                if qt is not None:
                    num = qt
                    rem.pop(i)
                    progress = True
                    break
        return QFraction(num, rem)

    def as_poly(self) -> LaurentPoly:
        """The value as a LaurentPoly; raises ValueError if braces remain."""
        r = self.reduced()
        if r.den:
            raise ValueError(f"denominator {r.den} does not cancel")
        return r.num

    def substitute(self, name: str, image: LaurentPoly | int) -> QFraction:
        if name == "q" and self.den:
            raise ValueError("cannot substitute q while brace denominators remain")
        return QFraction(self.num.substitute(name, image), self.den)

    def inverse_unit(self) -> QFraction:
        """Inverse of a unit: single-monomial numerator with coefficient +-1."""
        r = self.reduced()
        try:
            mono, c = r.num.as_single_term()
        except ValueError:
            raise NonUnitConstantTerm(f"not a unit: {r}") from None
        if c not in (1, -1):
            raise NonUnitConstantTerm(f"coefficient {c} is not invertible over Z")
        inv = LaurentPoly({tuple(-e for e in mono): c})
        return QFraction(inv * brace_product(r.den))

    def render(self, fmt: str = "text") -> str:
        if not self.den:
            return self.num.render(fmt)
        braces = "".join("{%d}" % m for m in self.den)
        return f"({self.num.render(fmt)}) / {braces}"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"QFraction({self.render()})"


def frac_reduce(f: QFraction) -> QFraction:
    return f.reduced()


def qfrac_sum(terms: Iterable[QFraction]) -> QFraction:
    """Sum many QFractions over their least common brace multiset at once,
    cheaper than folding pairwise."""
    terms = [t for t in terms if not t.is_zero]
    if not terms:
        return QFraction.zero()
    if len(terms) == 1:
        return terms[0]
    counters = [Counter(t.den) for t in terms]
    lcm = Counter()
    for c in counters:
        lcm |= c
    acc = LaurentPoly.zero()
    for t, c in zip(terms, counters):
        acc = acc + _times_braces(t.num, (lcm - c).elements())
    return QFraction(acc, tuple(sorted(lcm.elements())))


class TruncatedSeries:
    """Power series in lam, truncated at a fixed order, QFraction coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[QFraction | LaurentPoly | int], order: int):
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = []
        for c in coeffs:
            if not isinstance(c, QFraction):
                c = QFraction(c)
            cs.append(c)
        cs = cs[: order + 1]
        cs.extend(QFraction.zero() for _ in range(order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls([QFraction.one()], order)

    @classmethod
    def constant(cls, c: QFraction | LaurentPoly | int, order: int) -> TruncatedSeries:
        return cls([c], order)

    def coeff(self, n: int) -> QFraction:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        k = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)][:k + 1], k)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        k = min(self.order, other.order)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)][:k + 1], k)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        k = min(self.order, other.order)
        out = []
        for n in range(k + 1):
            acc = QFraction.zero()
            for j in range(n + 1):
                a, b = self.coeffs[j], other.coeffs[n - j]
                if not (a.is_zero or b.is_zero):
                    acc = acc + a * b
            out.append(acc.reduced())
        return TruncatedSeries(out, k)

    def scale(self, c: QFraction | LaurentPoly | int) -> TruncatedSeries:
        if not isinstance(c, QFraction):
            c = QFraction(c)
        return TruncatedSeries([a * c for a in self.coeffs], self.order)

    def shift(self, k: int = 1) -> TruncatedSeries:
        """Multiply by lam^k (k >= 0), truncating at the same order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return TruncatedSeries([QFraction.zero()] * k + list(self.coeffs[: self.order + 1 - k]),
                               self.order)

    def invert(self) -> TruncatedSeries:
        """Series inverse; the constant term must be a unit QFraction."""
        b0 = self.coeffs[0].inverse_unit()
        out = [b0]
        for n in range(1, self.order + 1):
            acc = QFraction.zero()
            for j in range(1, n + 1):
                a = self.coeffs[j]
                if not a.is_zero:
                    acc = acc + a * out[n - j]
            out.append((-(b0 * acc)).reduced())
        return TruncatedSeries(out, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        k = min(self.order, other.order)
        return all(self.coeffs[n] == other.coeffs[n] for n in range(k + 1))

    def __str__(self) -> str:
        parts = [f"({c}) lam^{n}" for n, c in enumerate(self.coeffs) if not c.is_zero]
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(lam^{self.order + 1})"

    __repr__ = __str__


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    return s.invert()
