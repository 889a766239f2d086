"""Exact sparse polynomials in x1..xn over the rationals, and truncated
series in the formal variable v = 1/u with polynomial coefficients.

Coefficients are kept as ``int`` whenever they are integral and as
``fractions.Fraction`` otherwise; both compare and hash consistently, so
callers never need to care which one they get back.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Scalar = Union[int, Fraction]
Monomial = Tuple[int, ...]

# Degree of the zero polynomial; only ever tested for identity.
NEG_INF = float("-inf")


def as_scalar(value) -> Scalar:
    """Coerce ``value`` to an exact scalar, collapsing integral fractions."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return as_scalar(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return as_scalar(Fraction(value))
    raise TypeError(f"not an exact rational: {value!r}")


def render_scalar(c: Scalar) -> str:
    c = as_scalar(c)
    return str(c)


def _grlex_key(m: Monomial):
    # Larger key = earlier in canonical order.
    return (sum(m), m)


class MultiPoly:
    """Immutable sparse polynomial in ``n`` variables.

    >>> x1, x2 = MultiPoly.gens(2)
    >>> str((x1 + x2) * (x1 - x2))
    'x1^2 - x2^2'
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, Scalar] | None = None):
        if n < 0:
            raise ValueError("variable count must be non-negative")
        self.n = n
        clean: Dict[Monomial, Scalar] = {}
        if terms:
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != n or any(e < 0 for e in m):
                    raise ValueError(f"bad monomial {m} for {n} variables")
                c = as_scalar(c)
                if c:
                    clean[m] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: Dict[Monomial, Scalar]) -> "MultiPoly":
        # Trusted constructor: terms already canonical and zero-free.
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls._raw(n, {})

    @classmethod
    def const(cls, n: int, value) -> "MultiPoly":
        c = as_scalar(value)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def one(cls, n: int) -> "MultiPoly":
        return cls.const(n, 1)

    @classmethod
    def var(cls, n: int, index: int) -> "MultiPoly":
        """The variable x_index, 1-based."""
        if not 1 <= index <= n:
            raise IndexError(f"variable x{index} out of range for n={n}")
        m = [0] * n
        m[index - 1] = 1
        return cls._raw(n, {tuple(m): 1})

    @classmethod
    def gens(cls, n: int) -> Tuple["MultiPoly", ...]:
        return tuple(cls.var(n, i) for i in range(1, n + 1))

    # -- basic protocol ---------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Scalar]]:
        """Terms in canonical (descending graded-lex) order."""
        for m in sorted(self._terms, key=_grlex_key, reverse=True):
            yield m, self._terms[m]

    def coeff(self, monomial: Sequence[int]) -> Scalar:
        return self._terms.get(tuple(monomial), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(sum(m) for m in self._terms)

    def degree_in(self, index: int):
        if not self._terms:
            return NEG_INF
        return max(m[index - 1] for m in self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def constant_value(self) -> Scalar:
        return self._terms.get((0,) * self.n, 0)

    def homogeneous_component(self, d: int) -> "MultiPoly":
        return MultiPoly._raw(self.n, {m: c for m, c in self._terms.items() if sum(m) == d})

    def top_component(self) -> "MultiPoly":
        if not self._terms:
            return self
        return self.homogeneous_component(self.degree())

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.n == other.n and self._terms == other._terms
        try:
            c = as_scalar(other)
        except TypeError:
            return NotImplemented
        return self._terms == ({(0,) * self.n: c} if c else {})

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({self.n}, {str(self)!r})"

    def __str__(self) -> str:
        return render(self)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.n != self.n:
                raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
            return other
        return MultiPoly.const(self.n, other)

    def __add__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = as_scalar(s) if isinstance(s, Fraction) else s
            else:
                out.pop(m, None)
        return MultiPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                c = as_scalar(other)
            except TypeError:
                return NotImplemented
            if not c:
                return MultiPoly.zero(self.n)
            return MultiPoly._raw(
                self.n, {m: as_scalar(v * c) for m, v in self._terms.items()}
            )
        if other.n != self.n:
            raise ValueError(f"variable count mismatch: {self.n} vs {other.n}")
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly.zero(self.n)
        out: Dict[Monomial, Scalar] = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = get(m, 0) + ca * cb
        return MultiPoly._raw(
            self.n, {m: as_scalar(c) for m, c in out.items() if c}
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def exact_div(self, c) -> "MultiPoly":
        """Division by a nonzero scalar."""
        c = as_scalar(c)
        if not c:
            raise ZeroDivisionError("division of a polynomial by zero")
        return MultiPoly._raw(
            self.n, {m: as_scalar(Fraction(v) / c) for m, v in self._terms.items()}
        )

    # -- evaluation and substitution -------------------------------------

    def __call__(self, *point) -> Scalar:
        return poly_eval(self, point)

    def permute(self, perm: Sequence[int]) -> "MultiPoly":
        """Rename variables: x_i -> x_{perm[i-1]} (perm is 1-based)."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {perm}")
        out = {}
        for m, c in self._terms.items():
            e = [0] * self.n
            for i, k in enumerate(m):
                e[perm[i] - 1] = k
            out[tuple(e)] = c
        return MultiPoly._raw(self.n, out)

    def embed(self, n: int) -> "MultiPoly":
        """Same polynomial viewed in n >= self.n variables."""
        if n < self.n:
            raise ValueError("cannot embed into fewer variables")
        pad = (0,) * (n - self.n)
        return MultiPoly._raw(n, {m + pad: c for m, c in self._terms.items()})


Polyish = Union[MultiPoly, Scalar]


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def poly_neg(p: MultiPoly) -> MultiPoly:
    return -p


def poly_eval(p: MultiPoly, point: Sequence) -> Scalar:
    if len(point) != p.n:
        raise ValueError(f"point has {len(point)} coordinates, expected {p.n}")
    point = [as_scalar(v) for v in point]
    powers = [dict() for _ in point]
    total: Scalar = 0
    for m, c in p._terms.items():
        term = c
        for i, e in enumerate(m):
            if e:
                cache = powers[i]
                pw = cache.get(e)
                if pw is None:
                    pw = cache[e] = point[i] ** e
                term = term * pw
        total = total + term
    return as_scalar(total)


def poly_substitute(p: MultiPoly, values: Mapping[int, MultiPoly], n: int | None = None) -> MultiPoly:
    """Compose: x_i -> values[i] for the given (1-based) indices.

    All values live in a ring of ``n`` variables (default ``p.n + 1``, i.e. one
    extra variable t = x_{p.n+1}).  Unmapped x_j become x_j of the target ring.
    """
    if n is None:
        n = p.n + 1
    for i in values:
        if not 1 <= i <= p.n:
            raise IndexError(f"substitution index {i} out of range for n={p.n}")
    images = []
    for j in range(1, p.n + 1):
        if j in values:
            v = values[j]
            if not isinstance(v, MultiPoly):
                v = MultiPoly.const(n, v)
            if v.n != n:
                raise ValueError("substitution values must share the target ring")
            images.append(v)
        else:
            if j > n:
                raise ValueError(f"x{j} has no image in a ring of {n} variables")
            images.append(MultiPoly.var(n, j))
    result = MultiPoly.zero(n)
    cache: Dict[Tuple[int, int], MultiPoly] = {}
    for m, c in p._terms.items():
        term = MultiPoly.const(n, c)
        for j, e in enumerate(m):
            if e:
                key = (j, e)
                if key not in cache:
                    cache[key] = images[j] ** e
                term = term * cache[key]
        result = result + term
    return result


def is_symmetric(p: MultiPoly) -> bool:
    for i in range(1, p.n):
        perm = list(range(1, p.n + 1))
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
        if p.permute(perm) != p:
            return False
    return True


def is_supersymmetric(p: MultiPoly) -> bool:
    """Symmetric, and independent of t after x1 := t, x2 := -t."""
    if not is_symmetric(p):
        return False
    if p.n < 2:
        return True
    t = MultiPoly.var(p.n + 1, p.n + 1)
    q = poly_substitute(p, {1: t, 2: -t})
    return q.degree_in(p.n + 1) in (0, NEG_INF)


def restrict_last_var(p: MultiPoly) -> MultiPoly:
    """Set x_n = 0 and drop it."""
    if p.n == 0:
        raise ValueError("no variable to restrict")
    return MultiPoly._raw(p.n - 1, {m[:-1]: c for m, c in p._terms.items() if m[-1] == 0})


# -- text format ----------------------------------------------------------

def _render_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def render(p: MultiPoly) -> str:
    """Canonical text, e.g. ``2*x1^2*x2 - 1/3*x3``."""
    if p.is_zero():
        return "0"
    chunks = []
    for k, (m, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        mono = _render_monomial(m)
        if not mono:
            body = render_scalar(a)
        elif a == 1:
            body = mono
        else:
            body = f"{render_scalar(a)}*{mono}"
        if k == 0:
            chunks.append(f"-{body}" if sign == "-" else body)
        else:
            chunks.append(f" {sign} {body}")
    return "".join(chunks)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, n: int) -> MultiPoly:
    """Inverse of :func:`render` (also accepts any term order and spacing)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    out = MultiPoly.zero(n)
    pos = 0
    while pos < len(s):
        mt = _TERM_RE.match(s, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign = -1 if mt.group(1) == "-" else 1
        body = mt.group(2).strip()
        if not body:
            raise ValueError(f"dangling sign in {text!r}")
        coeff: Scalar = 1
        expo = [0] * n
        for factor in body.split("*"):
            factor = factor.strip()
            if factor.startswith("x"):
                name, _, power = factor.partition("^")
                idx = int(name[1:])
                if not 1 <= idx <= n:
                    raise ValueError(f"variable {name} out of range for n={n}")
                expo[idx - 1] += int(power) if power else 1
            else:
                coeff = coeff * Fraction(factor)
        out = out + MultiPoly(n, {tuple(expo): sign * coeff})
        pos = mt.end()
    return out


def structured_terms(p: MultiPoly) -> list:
    """JSON-friendly term list: ``[{"exponents": [...], "coeff": "p/q"}, ...]``."""
    return [{"exponents": list(m), "coeff": render_scalar(c)} for m, c in p.items()]


# -- series in v = 1/u ------------------------------------------------------

class USeries:
    """Truncated series sum_{k=0}^{order} coeffs[k] * u^{-k}.

    Coefficients are polynomials in x.  Everything beyond ``order`` is dropped.
    """

    __slots__ = ("order", "n", "coeffs")

    def __init__(self, coeffs: Iterable[Polyish], order: int, n: int):
        if order < 0:
            raise ValueError("negative truncation order")
        cs = []
        for c in list(coeffs)[: order + 1]:
            cs.append(c if isinstance(c, MultiPoly) else MultiPoly.const(n, c))
        while len(cs) < order + 1:
            cs.append(MultiPoly.zero(n))
        self.order = order
        self.n = n
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value: Polyish, order: int, n: int) -> "USeries":
        return cls([value], order, n)

    def __getitem__(self, k: int) -> MultiPoly:
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, USeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"USeries(order={self.order}, [{body}])"

    def _check(self, other: "USeries") -> None:
        if other.order != self.order or other.n != self.n:
            raise ValueError("series truncation order or ring mismatch")

    def __add__(self, other: "USeries") -> "USeries":
        self._check(other)
        return USeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.n)

    def __sub__(self, other: "USeries") -> "USeries":
        self._check(other)
        return USeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.n)

    def __neg__(self) -> "USeries":
        return USeries([-a for a in self.coeffs], self.order, self.n)

    def __mul__(self, other) -> "USeries":
        if not isinstance(other, USeries):
            return USeries([c * other for c in self.coeffs], self.order, self.n)
        return useries_mul(self, other)

    __rmul__ = __mul__

    def shift(self, k: int) -> "USeries":
        """Multiply by u^{-k}."""
        return USeries([MultiPoly.zero(self.n)] * k + list(self.coeffs), self.order, self.n)


def useries_mul(s: USeries, t: USeries) -> USeries:
    s._check(t)
    N = s.order
    out = []
    for k in range(N + 1):
        acc = MultiPoly.zero(s.n)
        for i in range(k + 1):
            a, b = s.coeffs[i], t.coeffs[k - i]
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return USeries(out, N, s.n)


def useries_inv(s: USeries) -> USeries:
    """Multiplicative inverse; the constant term must be a nonzero constant."""
    c0 = s.coeffs[0]
    if not c0.is_constant() or c0.is_zero():
        raise ZeroDivisionError("series constant term is not a unit")
    inv0 = Fraction(1) / Fraction(c0.constant_value())
    out = [MultiPoly.const(s.n, inv0)]
    for k in range(1, s.order + 1):
        acc = MultiPoly.zero(s.n)
        for i in range(1, k + 1):
            if s.coeffs[i] and out[k - i]:
                acc = acc + s.coeffs[i] * out[k - i]
        out.append(acc * (-inv0))
    return USeries(out, s.order, s.n)


def useries_of_ratio(num: Sequence[Polyish], den: Sequence[Polyish], order: int, n: int) -> USeries:
    """Expand num(u)/den(u) at u = infinity in powers of 1/u.

    ``num`` and ``den`` list coefficients by ascending power of u.  Writing
    v = 1/u, num/den = v^(deg den - deg num) * (v^deg num * num)/(v^deg den * den),
    and the exponent shift deg den - deg num must be >= 0 (no positive powers
    of u are representable).  The leading u-coefficient of ``den`` must be a
    nonzero constant.
    """

    def trim(cs):
        cs = [c if isinstance(c, MultiPoly) else MultiPoly.const(n, c) for c in cs]
        while cs and cs[-1].is_zero():
            cs.pop()
        return cs

    num_c, den_c = trim(num), trim(den)
    if not den_c:
        raise ZeroDivisionError("zero denominator")
    if not num_c:
        return USeries([], order, n)
    dn, dd = len(num_c) - 1, len(den_c) - 1
    shift = dd - dn
    if shift < 0:
        raise ValueError("numerator degree exceeds denominator degree in u")
    num_v = USeries(list(reversed(num_c)), order, n)
    den_v = USeries(list(reversed(den_c)), order, n)
    return useries_mul(num_v, useries_inv(den_v)).shift(shift)
