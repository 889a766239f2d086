"""Strict partitions, shifted diagrams, parameter sequences and border strips."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .polyring import Scalar, as_scalar

Cell = Tuple[int, int]


class NonStrictPartition(ValueError):
    """Parts are not strictly decreasing positive integers."""


class ParameterIndexError(IndexError):
    """A computation needed a_k beyond the stored prefix."""


class NotAStrip(ValueError):
    """Skew shifted shape contains a 2x2 block of cells."""


class StrictPartition(tuple):
    """Strictly decreasing tuple of positive integers.

    >>> StrictPartition((3, 2, 1)).weight
    6
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise NonStrictPartition(f"parts must be positive: {parts}")
        if any(a <= b for a, b in zip(parts, parts[1:])):
            raise NonStrictPartition(f"parts must be strictly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """lambda_i (1-based), zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def cells(self) -> FrozenSet[Cell]:
        return shifted_diagram(self)

    def __repr__(self) -> str:
        return f"StrictPartition({tuple(self)})"

    def __str__(self) -> str:
        return render_partition(self)


def render_partition(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts) if len(parts) else "-"


def parse_parts(text: str) -> Tuple[int, ...]:
    """Parse ``"3,2,1"`` (or ``"-"`` for the empty partition) without the strictness check."""
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"malformed partition {text!r}: parts must be non-increasing and >= 0")
    return tuple(p for p in parts if p)


def parse_partition(text: str) -> StrictPartition:
    return StrictPartition(parse_parts(text))


def is_strict(parts: Sequence[int]) -> bool:
    try:
        StrictPartition(parts)
    except NonStrictPartition:
        return False
    return True


# -- parameter sequences ---------------------------------------------------

DEFAULT_PREFIX = 64


@dataclass(frozen=True)
class ParameterSequence:
    """Finite prefix (a_1, ..., a_M) of the parameter sequence, with a_1 = 0."""

    values: Tuple[Scalar, ...]
    kind: str = "custom"

    def __post_init__(self):
        vals = tuple(as_scalar(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("parameter prefix must contain a_1")
        if vals[0] != 0:
            raise ValueError("a_1 must be 0")
        if self.kind not in ("classical", "factorial", "custom"):
            raise ValueError(f"unknown parameter kind {self.kind!r}")

    @classmethod
    def classical(cls, length: int = DEFAULT_PREFIX) -> "ParameterSequence":
        return cls((0,) * length, "classical")

    @classmethod
    def factorial(cls, length: int = DEFAULT_PREFIX) -> "ParameterSequence":
        return cls(tuple(range(length)), "factorial")

    @classmethod
    def custom(cls, values: Sequence) -> "ParameterSequence":
        return cls(tuple(values), "custom")

    @classmethod
    def random(cls, rng: random.Random, length: int = 16) -> "ParameterSequence":
        """a_1 = 0 followed by pairwise-distinct positive small rationals."""
        seen = {Fraction(0)}
        vals = [Fraction(0)]
        while len(vals) < length:
            v = Fraction(rng.randint(1, 40), rng.randint(1, 6))
            if v not in seen:
                seen.add(v)
                vals.append(v)
        return cls(tuple(vals), "custom")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> Scalar:
        """a_k, 1-based."""
        if not 1 <= k <= len(self.values):
            raise ParameterIndexError(
                f"needs a_{k} but only a_1..a_{len(self.values)} are stored"
            )
        return self.values[k - 1]

    def shifted(self) -> Tuple[Scalar, ...]:
        """The left shift (a_2, a_3, ...)."""
        return self.values[1:]

    def require(self, k: int) -> None:
        self[k]

    def distinct_upto(self, k: int) -> bool:
        self.require(k)
        head = self.values[:k]
        return len(set(head)) == len(head)

    def label(self) -> str:
        if self.kind in ("classical", "factorial"):
            return self.kind
        return "custom:" + ",".join(str(v) for v in self.values)

    def __str__(self) -> str:
        return self.label()


def parse_params(text: str, length: int = DEFAULT_PREFIX) -> ParameterSequence:
    """``classical``, ``factorial`` or ``custom:0,1,3,6`` (must start with 0)."""
    text = text.strip()
    if text == "classical":
        return ParameterSequence.classical(length)
    if text == "factorial":
        return ParameterSequence.factorial(length)
    if text.startswith("custom:"):
        body = text[len("custom:"):]
        try:
            vals = [Fraction(v) for v in body.split(",") if v.strip()]
        except ValueError:
            raise ValueError(f"malformed parameter list {body!r}") from None
        return ParameterSequence.custom(vals)
    raise ValueError(f"unknown parameter string {text!r}")


def generalized_power(x, k: int, a: ParameterSequence):
    """(x | a)^k = (x - a_1)(x - a_2)...(x - a_k); works for scalars and polynomials."""
    if k < 0:
        raise ValueError("negative exponent")
    if k:
        a.require(k)
    result = 1
    for j in range(1, k + 1):
        result = (x - a[j]) * result
    return result


def falling_factorial(x, k: int):
    """(x | k) = x(x-1)...(x-k+1)."""
    result = 1
    for j in range(k):
        result = result * (x - j)
    return result


# -- diagrams ---------------------------------------------------------------

def shifted_diagram(lam: Sequence[int]) -> FrozenSet[Cell]:
    return frozenset(
        (i, j) for i, p in enumerate(lam, start=1) for j in range(i, i + p)
    )


def contains(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """D(mu)' is a subset of D(lam)'."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def covers(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """mu -> lam adds exactly one cell."""
    return contains(mu, lam) and sum(lam) == sum(mu) + 1


def cover_successors(mu: Sequence[int]) -> List[StrictPartition]:
    """All strict lam with mu -> lam, in decreasing lexicographic order."""
    mu = tuple(mu)
    out = []
    for i in range(len(mu)):
        if i == 0 or mu[i - 1] > mu[i] + 1:
            out.append(StrictPartition(mu[:i] + (mu[i] + 1,) + mu[i + 1:]))
    if not mu or mu[-1] > 1:
        out.append(StrictPartition(mu + (1,)))
    return out


def cover_predecessors(lam: Sequence[int]) -> List[StrictPartition]:
    lam = tuple(lam)
    out = []
    for i in range(len(lam)):
        new = list(lam)
        new[i] -= 1
        new = [p for p in new if p]
        if is_strict(new):
            out.append(StrictPartition(new))
    return out


@lru_cache(maxsize=None)
def _strict_partitions(n: int, max_part: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _strict_partitions(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def strict_partitions_of(n: int) -> List[StrictPartition]:
    """DP_n in decreasing lexicographic order."""
    if n < 0:
        return []
    return [StrictPartition(p) for p in _strict_partitions(n, n)]


def strict_partitions_upto(n: int) -> List[StrictPartition]:
    """DP_0, DP_1, ..., DP_n concatenated."""
    return [p for k in range(n + 1) for p in strict_partitions_of(k)]


def strict_subpartitions(lam: Sequence[int]) -> List[StrictPartition]:
    """Every strict mu with mu contained in lam, by weight."""
    lam = tuple(lam)
    out = []

    def rec(i: int, bound: int, acc: Tuple[int, ...]):
        out.append(StrictPartition(acc))
        if i >= len(lam):
            return
        for p in range(min(lam[i], bound - 1), 0, -1):
            rec(i + 1, p, acc + (p,))

    rec(0, 10 ** 9, ())
    out.sort(key=lambda p: (sum(p), [-x for x in p]))
    return out


def node_point(lam: Sequence[int], a: ParameterSequence, n: int) -> Tuple[Scalar, ...]:
    """x(lam) = (a_{lam_1+1}, ..., a_{lam_l+1}, a_1, ..., a_1), length n."""
    if n < len(lam):
        raise ValueError(f"n={n} is smaller than the length of {tuple(lam)}")
    return tuple(a[p + 1] for p in lam) + (a[1],) * (n - len(lam))


def h_weight(mu: Sequence[int], a: ParameterSequence) -> Scalar:
    """P_{mu;a}(x(mu)), in the division-free form.

    The factor (a_{mu_i+1} - a_{mu_j+1}) for i < j is cancelled against the
    generalized power of row i, leaving only the unmatched linear factors.
    """
    mu = tuple(mu)
    if not mu:
        return 1
    a.require(mu[0] + 1)
    result: Scalar = 1
    for i, p in enumerate(mu):
        top = a[p + 1]
        cancelled = {q + 1 for q in mu[i + 1:]}
        for k in range(1, p + 1):
            if k not in cancelled:
                result = result * (top - a[k])
        for q in mu[i + 1:]:
            result = result * (top + a[q + 1])
    return as_scalar(result)


def shifted_hook_product(mu: Sequence[int]) -> Fraction:
    """prod mu_t! * prod_{i<j} (mu_i + mu_j)/(mu_i - mu_j)."""
    mu = tuple(mu)
    result = Fraction(1)
    for p in mu:
        result *= factorial(p)
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            result *= Fraction(mu[i] + mu[j], mu[i] - mu[j])
    return result


# -- border strips ------------------------------------------------------------

@dataclass(frozen=True)
class InteriorSide:
    """A side shared by two cells of a skew shape.

    Coordinates put the centre of cell (i, j) at (i, j), so exactly one
    coordinate of the midpoint is a half-integer.  A horizontal side separates
    two vertically stacked cells.
    """

    eps: Fraction
    delta: Fraction
    orientation: str
    cells: Tuple[Cell, Cell] = field(compare=False)

    @property
    def param_index(self) -> int:
        # Matches the content j - i + 1 of the cell the side "enters".
        idx = self.delta - self.eps + Fraction(3, 2)
        assert idx.denominator == 1
        return int(idx)


def skew_cells(outer: Sequence[int], inner: Sequence[int]) -> FrozenSet[Cell]:
    if not contains(inner, outer):
        raise ValueError(f"{tuple(inner)} is not contained in {tuple(outer)}")
    return shifted_diagram(outer) - shifted_diagram(inner)


def has_2x2_block(cells: FrozenSet[Cell]) -> bool:
    return any(
        (i, j + 1) in cells and (i + 1, j) in cells and (i + 1, j + 1) in cells
        for (i, j) in cells
    )


def border_strip_decompose(cells: FrozenSet[Cell]) -> List[FrozenSet[Cell]]:
    """Split a 2x2-free skew shape into components whose diagonal index sets
    j - i are maximal integer intervals."""
    cells = frozenset(cells)
    if has_2x2_block(cells):
        raise NotAStrip("skew shape contains a 2x2 block")
    if not cells:
        return []
    diags = sorted({j - i for i, j in cells})
    groups: List[List[int]] = [[diags[0]]]
    for d in diags[1:]:
        if d == groups[-1][-1] + 1:
            groups[-1].append(d)
        else:
            groups.append([d])
    comps = []
    for g in groups:
        lo, hi = g[0], g[-1]
        comps.append(frozenset(c for c in cells if lo <= c[1] - c[0] <= hi))
    return comps


def interior_sides(cells: FrozenSet[Cell]) -> List[InteriorSide]:
    half = Fraction(1, 2)
    sides = []
    for (i, j) in sorted(cells):
        if (i, j + 1) in cells:
            sides.append(InteriorSide(Fraction(i), j + half, "vertical", ((i, j), (i, j + 1))))
        if (i + 1, j) in cells:
            sides.append(InteriorSide(i + half, Fraction(j), "horizontal", ((i, j), (i + 1, j))))
    return sides


def has_diagonal_hook(cells: FrozenSet[Cell]) -> bool:
    """Cells (i,i), (i,i+1), (i+1,i+1): a turn that no marked filling realizes."""
    return any(
        (i, j - 1) in cells and (i + 1, j) in cells for (i, j) in cells
    )


def strip_factor(cells: FrozenSet[Cell], a: ParameterSequence, x):
    """Product over components of 2x * prod'(x + a_s) * prod''(x - a_s).

    prod' runs over horizontal interior sides, prod'' over vertical ones, and
    a_s is indexed by :attr:`InteriorSide.param_index`.  A component with a
    cell that has neighbours both to its left and below contributes 0.
    """
    result = 1
    for comp in border_strip_decompose(cells):
        if has_diagonal_hook(comp):
            return 0 * x
        factor = 2 * x
        for side in interior_sides(comp):
            if side.orientation == "horizontal":
                factor = factor * (x + a[side.param_index])
            else:
                factor = factor * (x - a[side.param_index])
        result = factor * result
    return result
