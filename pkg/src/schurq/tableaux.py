"""Marked and unmarked shifted tableaux, and the multiparameter Q- and P-functions.

The primary route to Q_{lam;a} is the marked-tableau sum

    Q_{lam;a}(x_1..x_n) = sum_T prod_{(i,j)} (x_{|T(i,j)|} - sgn T(i,j) * a_{j-i+1}).

:func:`q_multiparam` evaluates exactly this sum, grouped by the chain of
shapes {cells with |T| <= k}: the cells carrying level k form a strip, and
the admissible markings of different strips are independent.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Sequence, Tuple

from .polyring import MultiPoly
from .shapes import (
    Cell,
    NotAStrip,
    ParameterSequence,
    StrictPartition,
    contains,
    has_2x2_block,
    shifted_diagram,
    strict_subpartitions,
    strip_factor,
)

MAX_CELLS = 12
MAX_VARS = 6


class EnumerationGuard(RuntimeError):
    """Shape or variable count beyond the enumeration guard."""


def max_cells() -> int:
    return int(os.environ.get("SCHURQ_MAX_CELLS", MAX_CELLS))


def check_guard(lam: Sequence[int], n: int, force: bool = False) -> None:
    if force:
        return
    if sum(lam) > max_cells():
        raise EnumerationGuard(
            f"|lambda| = {sum(lam)} exceeds the guard {max_cells()} (set SCHURQ_MAX_CELLS or force)"
        )
    if n > MAX_VARS:
        raise EnumerationGuard(f"n = {n} exceeds the guard {MAX_VARS}")


@total_ordering
@dataclass(frozen=True)
class MarkedLetter:
    """k or k' in the alphabet 1' < 1 < 2' < 2 < ..."""

    level: int
    marked: bool = False

    @property
    def rank(self) -> int:
        return 2 * self.level - (1 if self.marked else 0)

    @property
    def sign(self) -> int:
        return -1 if self.marked else 1

    def __lt__(self, other: "MarkedLetter") -> bool:
        return self.rank < other.rank

    def __str__(self) -> str:
        return f"{self.level}'" if self.marked else str(self.level)


def alphabet(n: int) -> List[MarkedLetter]:
    return [MarkedLetter(k, m) for k in range(1, n + 1) for m in (True, False)]


@dataclass(frozen=True)
class MarkedShiftedTableau:
    shape: StrictPartition
    entries: Tuple[Tuple[Cell, MarkedLetter], ...]

    def __getitem__(self, cell: Cell) -> MarkedLetter:
        return dict(self.entries)[cell]

    def rows(self) -> List[List[MarkedLetter]]:
        out: Dict[int, List[MarkedLetter]] = {}
        for (i, _), letter in self.entries:
            out.setdefault(i, []).append(letter)
        return [out[i] for i in sorted(out)]

    def __str__(self) -> str:
        lines = []
        for i, row in enumerate(self.rows()):
            lines.append("   " * i + " ".join(f"{str(c):>2}" for c in row))
        return "\n".join(lines)

    def weight(self, a: ParameterSequence, n: int) -> MultiPoly:
        xs = MultiPoly.gens(n)
        result = MultiPoly.one(n)
        for (i, j), letter in self.entries:
            result = result * (xs[letter.level - 1] - letter.sign * a[j - i + 1])
        return result


def _admissible(letter: MarkedLetter, left: MarkedLetter | None, above: MarkedLetter | None) -> bool:
    # Equal letters are contiguous in rows and columns, so neighbours suffice.
    if left is not None and (letter < left or (letter.marked and letter == left)):
        return False
    if above is not None and (letter < above or (not letter.marked and letter == above)):
        return False
    return True


def enumerate_marked(lam: Sequence[int], n: int) -> Iterator[MarkedShiftedTableau]:
    """Every marked shifted tableau of shape lam with letters up to n, once each.

    Depth-first over the cells in row-major order.
    """
    lam = StrictPartition(lam)
    if n < 0:
        return
    cells = sorted(shifted_diagram(lam))
    letters = alphabet(n)
    filling: Dict[Cell, MarkedLetter] = {}

    def rec(idx: int):
        if idx == len(cells):
            yield MarkedShiftedTableau(lam, tuple((c, filling[c]) for c in cells))
            return
        i, j = cells[idx]
        left = filling.get((i, j - 1))
        above = filling.get((i - 1, j))
        for letter in letters:
            if _admissible(letter, left, above):
                filling[(i, j)] = letter
                yield from rec(idx + 1)
                del filling[(i, j)]

    yield from rec(0)


def q_from_marked_tableaux(lam: Sequence[int], a: ParameterSequence, n: int) -> MultiPoly:
    """Literal per-tableau sum (slow; kept as a cross-check)."""
    lam = StrictPartition(lam)
    total = MultiPoly.zero(n)
    for t in enumerate_marked(lam, n):
        total = total + t.weight(a, n)
    return total


# -- strip-grouped evaluation ---------------------------------------------------

def _lift(coeffs: Sequence, k: int, n: int) -> MultiPoly:
    """Univariate coefficient list (ascending) as a polynomial in x_k."""
    terms = {}
    for e, c in enumerate(coeffs):
        if c:
            m = [0] * n
            m[k - 1] = e
            terms[tuple(m)] = c
    return MultiPoly(n, terms)


@lru_cache(maxsize=None)
def _marked_strip_weight(cells: FrozenSet[Cell], a: ParameterSequence) -> Tuple:
    """sum over admissible {k', k} markings of the strip of prod (x - sgn a_{j-i+1}),
    as ascending coefficients of a univariate polynomial in x."""
    x = MultiPoly.var(1, 1)
    order = sorted(cells)
    total = MultiPoly.zero(1)
    for marks in product((True, False), repeat=len(order)):
        fill = {c: MarkedLetter(1, m) for c, m in zip(order, marks)}
        if all(
            _admissible(fill[(i, j)], fill.get((i, j - 1)), fill.get((i - 1, j)))
            for (i, j) in order
        ):
            w = MultiPoly.one(1)
            for (i, j), letter in fill.items():
                w = w * (x - letter.sign * a[j - i + 1])
            total = total + w
    deg = total.degree()
    if total.is_zero():
        return ()
    return tuple(total.coeff((e,)) for e in range(deg + 1))


@lru_cache(maxsize=None)
def _unmarked_strip_weight(cells: FrozenSet[Cell], a: ParameterSequence) -> Tuple:
    x = MultiPoly.var(1, 1)
    try:
        f = strip_factor(cells, a, x)
    except NotAStrip:
        return ()
    f = f if isinstance(f, MultiPoly) else MultiPoly.const(1, f)
    if f.is_zero():
        return ()
    return tuple(f.coeff((e,)) for e in range(f.degree() + 1))


def _chain_sum(lam: StrictPartition, a: ParameterSequence, n: int, strip_weight) -> MultiPoly:
    subs = strict_subpartitions(lam)
    diagrams = {mu: shifted_diagram(mu) for mu in subs}
    steps: Dict[StrictPartition, List[Tuple[StrictPartition, FrozenSet[Cell]]]] = {}
    for nu in subs:
        for mu in subs:
            if contains(mu, nu):
                cells = diagrams[nu] - diagrams[mu]
                if not has_2x2_block(cells):
                    steps.setdefault(nu, []).append((mu, cells))
    layer: Dict[StrictPartition, MultiPoly] = {StrictPartition(): MultiPoly.one(n)}
    for k in range(1, n + 1):
        nxt: Dict[StrictPartition, MultiPoly] = {}
        for nu, preds in steps.items():
            acc = None
            for mu, cells in preds:
                prev = layer.get(mu)
                if prev is None:
                    continue
                if not cells:
                    term = prev
                else:
                    w = strip_weight(cells, a)
                    if not w:
                        continue
                    term = prev * _lift(w, k, n)
                acc = term if acc is None else acc + term
            if acc is not None and not acc.is_zero():
                nxt[nu] = acc
        layer = nxt
    return layer.get(lam, MultiPoly.zero(n))


@lru_cache(maxsize=4096)
def _q_cached(lam: StrictPartition, a: ParameterSequence, n: int) -> MultiPoly:
    return _chain_sum(lam, a, n, _marked_strip_weight)


def q_multiparam(lam: Sequence[int], a: ParameterSequence, n: int) -> MultiPoly:
    """Q_{lam;a}(x_1, ..., x_n); zero when l(lam) > n."""
    lam = StrictPartition(lam)
    if n < 0:
        raise ValueError("negative variable count")
    if lam:
        a.require(lam[0])
    if len(lam) > n:
        return MultiPoly.zero(n)
    return _q_cached(lam, a, n)


def p_multiparam(lam: Sequence[int], a: ParameterSequence, n: int) -> MultiPoly:
    lam = StrictPartition(lam)
    return q_multiparam(lam, a, n).exact_div(2 ** len(lam))


def q_via_unmarked(lam: Sequence[int], a: ParameterSequence, n: int) -> MultiPoly:
    """Same function, as a sum over chains of strict partitions weighted by
    :func:`schurq.shapes.strip_factor`."""
    lam = StrictPartition(lam)
    if lam:
        a.require(lam[0])
    if len(lam) > n:
        return MultiPoly.zero(n)
    return _chain_sum(lam, a, n, _unmarked_strip_weight)


def _preset(kind: str, lam: Sequence[int]) -> ParameterSequence:
    need = (max(lam) if len(lam) else 0) + 2
    length = max(need, 64)
    return ParameterSequence.classical(length) if kind == "classical" else ParameterSequence.factorial(length)


def q_classical(lam, n):
    return q_multiparam(lam, _preset("classical", lam), n)


def p_classical(lam, n):
    return p_multiparam(lam, _preset("classical", lam), n)


def q_factorial(lam, n):
    return q_multiparam(lam, _preset("factorial", lam), n)


def p_factorial(lam, n):
    return p_multiparam(lam, _preset("factorial", lam), n)


def two_row_q(k: int, l: int, a: ParameterSequence, n: int) -> MultiPoly:
    """Q_{(k,l);a} for any k, l >= 0, with Q_{(k,l)} = -Q_{(l,k)} when k <= l."""
    if k < 0 or l < 0:
        raise ValueError("two-row indices must be non-negative")
    if k == l:
        return MultiPoly.zero(n)
    if k < l:
        return -two_row_q(l, k, a, n)
    return q_multiparam((k, l) if l else (k,), a, n)


def two_row_p(k: int, l: int, a: ParameterSequence, n: int) -> MultiPoly:
    if k == l:
        return MultiPoly.zero(n)
    if k < l:
        return -two_row_p(l, k, a, n)
    return p_multiparam((k, l) if l else (k,), a, n)


def one_row_p(k: int, a: ParameterSequence, n: int) -> MultiPoly:
    """P_{(k);a}, with P_{(0)} = 1."""
    return p_multiparam((k,) if k else (), a, n)
