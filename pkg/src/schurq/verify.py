"""Deterministic verification batteries, one per family of identities.

Each suite expands into a list of independent tasks.  A task is a picklable
(label, function, args) triple so that ``jobs > 1`` can fan out over worker
processes while the report keeps the original task order.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .dimensions import g_all
from .identities import (
    characterization_nodes_vanish,
    characterization_one,
    definition_oracle_eval,
    interpolate,
    interpolation_system,
    pieri_sides,
    vanishing_check,
)
from .linalg import identity, matmul
from .pfaffian import giambelli, nimmo_eval
from .polyring import is_supersymmetric, poly_eval, render, restrict_last_var
from .series import (
    d_closed_form,
    d_coeffs,
    dlin_sides,
    expansion_residual,
    koro_sides,
    one_row_genfun_check,
    simple_two_row_check,
    transition_matrix,
    transition_two_row_check,
    two_row_genfun_check,
)
from .shapes import (
    ParameterSequence,
    StrictPartition,
    contains,
    h_weight,
    render_partition,
    shifted_hook_product,
    strict_partitions_of,
    strict_partitions_upto,
)
from .tableaux import p_multiparam, q_classical, q_multiparam


@dataclass
class Outcome:
    label: str
    passed: bool
    detail: Optional[str] = None

    def as_dict(self) -> dict:
        return {"label": self.label, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    outcomes: List[Outcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)

    @property
    def first_failure(self) -> Optional[Outcome]:
        return next((o for o in self.outcomes if not o.passed), None)

    def as_dict(self) -> dict:
        fail = self.first_failure
        return {
            "suite": self.suite,
            "passed": self.passed,
            "instances": len(self.outcomes),
            "failures": sum(not o.passed for o in self.outcomes),
            "first_counterexample": fail.as_dict() if fail else None,
            "outcomes": [o.as_dict() for o in self.outcomes],
        }


Task = Tuple[str, Callable, tuple]


# -- shared inputs -----------------------------------------------------------

def parameter_battery(seed: int) -> List[Tuple[str, ParameterSequence]]:
    rng = random.Random(seed)
    return [
        ("classical", ParameterSequence.classical(32)),
        ("factorial", ParameterSequence.factorial(32)),
        ("random", ParameterSequence.random(rng, 32)),
    ]


def random_point(rng: random.Random, n: int, allow_zero: bool = False) -> Tuple[Fraction, ...]:
    """Distinct rationals with no pair summing to zero (rejection sampling)."""
    while True:
        pt = tuple(Fraction(rng.randint(-30, 30), rng.randint(1, 7)) for _ in range(n))
        if not allow_zero and any(v == 0 for v in pt):
            continue
        if len(set(pt)) < n:
            continue
        if any(pt[i] + pt[j] == 0 for i in range(n) for j in range(i + 1, n)):
            continue
        return pt


def _shape(lam) -> str:
    return render_partition(lam)


def _point_text(pt) -> str:
    return "(" + ", ".join(str(v) for v in pt) + ")"


# -- task bodies (module level so they pickle) -----------------------------------

def _task_supersymmetry(lam, a, n):
    q = q_multiparam(lam, a, n)
    if not is_supersymmetric(q):
        return False, f"Q = {render(q)} is not supersymmetric"
    top = q.top_component() if not q.is_zero() else q
    classical = q_classical(lam, n)
    if top != classical:
        return False, f"top component {render(top)} != classical {render(classical)}"
    return True, None


def _task_stability(lam, a, n):
    big = q_multiparam(lam, a, n + 1)
    small = q_multiparam(lam, a, n)
    got = restrict_last_var(big)
    if got != small:
        return False, f"restriction {render(got)} != {render(small)}"
    return True, None


def _task_definition(lam, a, points):
    p = p_multiparam(lam, a, len(points[0]))
    for pt in points:
        want = definition_oracle_eval(lam, a, pt)
        got = poly_eval(p, pt)
        if got != want:
            return False, f"at {_point_text(pt)}: tableau {got} != symmetrization {want}"
    return True, None


def _task_nimmo(lam, a, points):
    p = p_multiparam(lam, a, len(points[0]))
    for pt in points:
        want = poly_eval(p, pt)
        got = nimmo_eval(lam, a, pt)
        if got != want:
            return False, f"at {_point_text(pt)}: Pfaffian ratio {got} != tableau {want}"
    return True, None


def _task_giambelli(lam, a, n):
    got = giambelli(lam, a, n)
    want = q_multiparam(lam, a, n)
    if got != want:
        return False, f"Pfaffian {render(got)} != tableau {render(want)}"
    return True, None


def _task_pieri(mu, a, n):
    lhs, rhs = pieri_sides(mu, a, n)
    if lhs != rhs:
        return False, f"difference {render(lhs - rhs)}"
    return True, None


def _task_interpolation_system(max_weight, a):
    system = interpolation_system(max_weight, a)
    if not system.is_triangular():
        return False, "some P_mu does not vanish at a node x(lam) with mu not inside lam"
    for mu, d in zip(system.shapes, system.diagonal()):
        if d != h_weight(mu, a):
            return False, f"P_mu(x(mu)) = {d} != H_a = {h_weight(mu, a)} at mu = {_shape(mu)}"
        if a.kind == "factorial" and d != shifted_hook_product(mu):
            return False, f"factorial diagonal {d} != hook product at mu = {_shape(mu)}"
    return True, None


def _task_interpolate(mu, a):
    coeffs = interpolate(mu, a)
    bad = {nu: c for nu, c in coeffs.items() if c != (1 if nu == StrictPartition(mu) else 0)}
    if bad:
        return False, "non-unit coefficients: " + ", ".join(f"{_shape(k)}: {v}" for k, v in bad.items())
    return True, None


def _task_vanishing_pairs(mu, a, max_weight):
    for lam in strict_partitions_upto(max_weight):
        if not vanishing_check(mu, lam, a):
            return False, f"fails at node x({_shape(lam)})"
    return True, None


def _task_characterization(coeffs, a, n):
    if not characterization_nodes_vanish(coeffs, a, n):
        return False, "combination does not vanish at the lower nodes"
    if not characterization_one(coeffs, a, n):
        return False, "the lower-degree correction is not the multiparameter combination"
    return True, None


def _task_dimension(mu, lam):
    vals = g_all(mu, lam)
    if len(set(vals.values())) != 1:
        return False, ", ".join(f"{k}={v}" for k, v in vals.items())
    return True, None


def _task_dimension_value(mu, lam, expected):
    vals = g_all(mu, lam)
    if any(v != expected for v in vals.values()):
        return False, f"expected {expected}, got " + ", ".join(f"{k}={v}" for k, v in vals.items())
    return True, None


def _task_one_row(a, n, N):
    return one_row_genfun_check(a, n, N), None


def _task_dlin(k, l, a, n):
    lhs, rhs = dlin_sides(k, l, a, n)
    return lhs == rhs, None if lhs == rhs else f"difference {render(lhs - rhs)}"


def _task_koro(k, a, n):
    lhs, rhs = koro_sides(k, a, n)
    return lhs == rhs, None if lhs == rhs else f"difference {render(lhs - rhs)}"


def _task_simple(k, l, n):
    return simple_two_row_check(k, l, n), None


def _task_two_row_series(a, n, order):
    return two_row_genfun_check(a, n, order), None


def _task_d_cross_check(a, b, R):
    d = d_coeffs(a, b, R)
    for r in range(R + 1):
        for rp in range(R + 1):
            if d(r, rp) != d_closed_form(a, b, r, rp):
                return False, f"d_({r},{rp}) = {d(r, rp)} but closed form gives {d_closed_form(a, b, r, rp)}"
    return True, None


def _task_identity_transition(a, max_weight):
    t = transition_matrix(a, a, max_weight)
    return t.entries == identity(len(t.shapes)), None


def _task_roundtrip(a, b, max_weight):
    t1 = transition_matrix(a, b, max_weight)
    t2 = transition_matrix(b, a, max_weight)
    if not t1.is_unitriangular():
        return False, "transition matrix is not unitriangular in the containment order"
    if matmul(t1.entries, t2.entries) != identity(len(t1.shapes)):
        return False, "T(a,b) T(b,a) is not the identity"
    return True, None


def _task_expansion(mu, a, b, n, max_weight):
    res = expansion_residual(mu, a, b, n, transition_matrix(a, b, max_weight))
    return res.is_zero(), None if res.is_zero() else f"residual {render(res)}"


def _task_two_row_transition(r, s, a, b, n):
    return transition_two_row_check(r, s, a, b, n), None


# -- suite builders -----------------------------------------------------------

def _n_range(lam, hi):
    return range(max(len(lam), 1), hi + 1)


def tasks_supersymmetry(max_weight: int, seed: int) -> List[Task]:
    return [
        (f"lam={_shape(lam)} n={n} a={name}", _task_supersymmetry, (lam, a, n))
        for name, a in parameter_battery(seed)
        for lam in strict_partitions_upto(max_weight)
        for n in range(1, 4)
    ]


def tasks_stability(max_weight: int, seed: int) -> List[Task]:
    return [
        (f"lam={_shape(lam)} n={n}->{n + 1} a={name}", _task_stability, (lam, a, n))
        for name, a in parameter_battery(seed)
        for lam in strict_partitions_upto(max_weight)
        for n in range(1, 4)
    ]


def _point_tasks(kind, body, max_weight: int, seed: int, points: int = 5, max_vars: int = 4) -> List[Task]:
    rng = random.Random(f"{kind}:{seed}")
    tasks = []
    for name, a in parameter_battery(seed):
        for lam in strict_partitions_upto(max_weight):
            for n in _n_range(lam, max_vars):
                pts = tuple(random_point(rng, n) for _ in range(points))
                tasks.append((f"lam={_shape(lam)} n={n} a={name}", body, (lam, a, pts)))
    return tasks


def tasks_definition(max_weight: int, seed: int) -> List[Task]:
    return _point_tasks("definition", _task_definition, max_weight, seed)


def tasks_nimmo(max_weight: int, seed: int) -> List[Task]:
    return _point_tasks("nimmo", _task_nimmo, max_weight, seed)


def tasks_giambelli(max_weight: int, seed: int) -> List[Task]:
    return [
        (f"lam={_shape(lam)} n={n} a={name}", _task_giambelli, (lam, a, n))
        for name, a in parameter_battery(seed)
        for lam in strict_partitions_upto(max_weight)
        if len(lam) <= 4
        for n in range(1, 4)
    ]


def tasks_pieri(max_weight: int, seed: int) -> List[Task]:
    return [
        (f"mu={_shape(mu)} n={len(mu) + 2} a={name}", _task_pieri, (mu, a, len(mu) + 2))
        for name, a in parameter_battery(seed)
        for mu in strict_partitions_upto(max_weight)
    ]


def _distinct_battery(seed: int):
    return [(name, a) for name, a in parameter_battery(seed) if name != "classical"]


def tasks_vanishing(max_weight: int, seed: int) -> List[Task]:
    tasks: List[Task] = []
    for name, a in _distinct_battery(seed):
        tasks.append((f"system |lam|<={max_weight} a={name}", _task_interpolation_system, (max_weight, a)))
        for mu in strict_partitions_upto(min(max_weight, 4)):
            tasks.append((f"interpolate mu={_shape(mu)} a={name}", _task_interpolate, (mu, a)))
            tasks.append((f"nodes mu={_shape(mu)} a={name}", _task_vanishing_pairs, (mu, a, max_weight)))
    return tasks


def tasks_characterization(max_weight: int, seed: int) -> List[Task]:
    rng = random.Random(f"characterization:{seed}")
    tasks: List[Task] = []
    for name, a in _distinct_battery(seed):
        for w in range(1, min(max_weight, 5) + 1):
            shapes = strict_partitions_of(w)
            n = max(len(s) for s in strict_partitions_upto(w))
            for trial in range(2):
                coeffs = {tuple(s): Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for s in shapes}
                if not any(coeffs.values()):
                    coeffs[tuple(shapes[0])] = 1
                tasks.append((f"w={w} trial={trial} a={name}", _task_characterization, (coeffs, a, n)))
    return tasks


SPECIFIC_DIMENSIONS = [((), (2, 1), 1), ((), (3, 1), 2), ((), (3, 2, 1), 2), ((2, 1), (3, 2, 1), 1)]


def tasks_dimensions(max_weight: int, seed: int) -> List[Task]:
    tasks: List[Task] = [
        (f"g({_shape(lam)}/{_shape(mu)})={g}", _task_dimension_value, (mu, lam, g))
        for mu, lam, g in SPECIFIC_DIMENSIONS
    ]
    for lam in strict_partitions_upto(max_weight):
        subs = [mu for mu in strict_partitions_upto(lam.weight) if contains(mu, lam)]
        tasks.extend((f"g({_shape(lam)}/{_shape(mu)})", _task_dimension, (mu, lam)) for mu in subs)
    return tasks


def tasks_genfun_one_row(max_weight: int, seed: int) -> List[Task]:
    return [
        (f"N={max_weight} n={n} a={name}", _task_one_row, (a, n, max_weight))
        for name, a in parameter_battery(seed)
        for n in range(1, 4)
    ]


def tasks_genfun_two_row(max_weight: int, seed: int) -> List[Task]:
    tasks: List[Task] = []
    for name, a in parameter_battery(seed):
        for n in range(1, 4):
            for k in range(1, max_weight + 1):
                tasks.append((f"koro k={k} n={n} a={name}", _task_koro, (k, a, n)))
                for l in range(1, k):
                    tasks.append((f"dlin k={k} l={l} n={n} a={name}", _task_dlin, (k, l, a, n)))
        tasks.append((f"double series order 6 n=2 a={name}", _task_two_row_series, (a, 2, 6)))
    for k in range(1, max_weight + 1):
        for l in range(1, k):
            tasks.append((f"classical k={k} l={l} n=3", _task_simple, (k, l, 3)))
    return tasks


def tasks_transition(max_weight: int, seed: int) -> List[Task]:
    battery = dict(parameter_battery(seed))
    rng = random.Random(f"transition:{seed}")
    other = ParameterSequence.random(rng, 32)
    pairs = [
        ("factorial", battery["factorial"], "classical", battery["classical"]),
        ("classical", battery["classical"], "factorial", battery["factorial"]),
        ("random", battery["random"], "random2", other),
    ]
    tasks: List[Task] = []
    for name, a in battery.items():
        tasks.append((f"identity a=b={name}", _task_identity_transition, (a, max_weight)))
    for an, a, bn, b in pairs:
        tag = f"a={an} b={bn}"
        tasks.append((f"closed form {tag}", _task_d_cross_check, (a, b, max_weight + 2)))
        tasks.append((f"roundtrip {tag}", _task_roundtrip, (a, b, max_weight)))
        for mu in strict_partitions_upto(max_weight):
            n = min(max(len(mu), 1), 3)
            for m in sorted({n, 3}):
                tasks.append((f"expand mu={_shape(mu)} n={m} {tag}", _task_expansion, (mu, a, b, m, max_weight)))
        for r in range(2, 5):
            for s in range(1, r):
                tasks.append((f"two-row r={r} s={s} {tag}", _task_two_row_transition, (r, s, a, b, 2)))
    return tasks


@dataclass(frozen=True)
class Suite:
    build: Callable[[int, int], List[Task]]
    default_weight: int
    summary: str


SUITES: Dict[str, Suite] = {
    "supersymmetry": Suite(tasks_supersymmetry, 5, "supersymmetry and classical top component"),
    "stability": Suite(tasks_stability, 5, "setting the last variable to zero"),
    "definition": Suite(tasks_definition, 5, "tableau sum against the symmetrization formula"),
    "nimmo": Suite(tasks_nimmo, 5, "Pfaffian ratio against the tableau sum"),
    "giambelli": Suite(tasks_giambelli, 8, "Pfaffian of two-row functions"),
    "pieri": Suite(tasks_pieri, 5, "multiplication by P_(1)"),
    "vanishing": Suite(tasks_vanishing, 6, "vanishing at nodes and interpolation"),
    "characterization": Suite(tasks_characterization, 4, "uniqueness from vanishing at nodes"),
    "dimensions": Suite(tasks_dimensions, 9, "paths, product formula and Pfaffian"),
    "genfun-one-row": Suite(tasks_genfun_one_row, 8, "one-row generating series"),
    "genfun-two-row": Suite(tasks_genfun_two_row, 5, "two-row relations and series"),
    "transition": Suite(tasks_transition, 5, "change of parameters"),
}


def _run(task: Task) -> Outcome:
    label, fn, args = task
    try:
        passed, detail = fn(*args)
    except Exception as exc:  # a crash is a failed instance, with the reason attached
        return Outcome(label, False, f"{type(exc).__name__}: {exc}")
    return Outcome(label, bool(passed), detail)


def run_suite(name: str, max_weight: int | None = None, seed: int = 0, jobs: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    tasks = suite.build(suite.default_weight if max_weight is None else max_weight, seed)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_run, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        outcomes = [_run(t) for t in tasks]
    return SuiteReport(name, outcomes)


def run_suites(names: Sequence[str], max_weight: int | None = None, seed: int = 0, jobs: int = 1) -> List[SuiteReport]:
    return [run_suite(n, max_weight, seed, jobs) for n in names]
