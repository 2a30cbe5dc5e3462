"""Classical realizability of 2x2 correlation tables.

A table of joint expectations is classically explainable when some convex
mixture of the 16 deterministic outcome assignments reproduces it. That
membership question is decided here by a small linear program, written as

    minimize t  subject to  |M w - target| <= t,  sum(w) = 1,  w >= 0

over the 16 strategy weights w: the optimal t is the best achievable
sup-norm residual, and the table is realizable exactly when t falls within
tolerance. This route is deliberately independent of the Bell-form
enumeration in the sibling module; the test suite holds the two against
each other rather than assuming their equivalence.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog

from .bell import CorrelationTable, bell_value_all_forms, CHSH_FORMS

#: Largest functional value reachable by tensor-product measurements on a
#: shared quantum state.
TSIRELSON_BOUND = 2.0 * math.sqrt(2.0)

CLASSICAL = "classical"
QUANTUM_ACHIEVABLE = "quantum-achievable"
SUPRA_QUANTUM = "supra-quantum"


@dataclass(frozen=True)
class DeterministicStrategy:
    """Fixed +1/-1 outcomes for both row contexts and both column contexts."""

    row_outcomes: tuple[int, int]
    col_outcomes: tuple[int, int]

    def __post_init__(self) -> None:
        for v in (*self.row_outcomes, *self.col_outcomes):
            if v not in (1, -1):
                raise ValueError(f"strategy outcomes must be +1 or -1, got {v!r}")

    def joint_products(self) -> tuple[int, int, int, int]:
        """Products row_i * col_j in row-major order."""
        r, c = self.row_outcomes, self.col_outcomes
        return (r[0] * c[0], r[0] * c[1], r[1] * c[0], r[1] * c[1])

    def outcome_vector(self) -> tuple[int, int, int, int]:
        return (*self.row_outcomes, *self.col_outcomes)


_STRATEGIES: tuple[DeterministicStrategy, ...] = tuple(
    DeterministicStrategy((a0, a1), (b0, b1))
    for a0, a1, b0, b1 in itertools.product((1, -1), repeat=4)
)

# Joint-product matrix: one column per strategy, rows are the four joints.
_JOINT_MATRIX = np.array(
    [s.joint_products() for s in _STRATEGIES], dtype=float
).T
# Same for the four single-side outcomes.
_SINGLE_MATRIX = np.array(
    [s.outcome_vector() for s in _STRATEGIES], dtype=float
).T


def enumerate_strategies() -> tuple[DeterministicStrategy, ...]:
    """All 16 deterministic strategies, in a fixed order."""
    return _STRATEGIES


@dataclass(frozen=True)
class Witness:
    """A single violated constraint certifying non-realizability.

    ``kind`` is "bell-form" when a sign placement of the joints exceeds the
    classical ceiling of 2, or "outcome-probability" when (with singles
    present) some implied outcome probability goes negative.
    """

    kind: str
    value: float
    bound: float
    description: str
    signs: tuple[int, int, int, int] | None = None


@dataclass(frozen=True)
class RealizabilityResult:
    feasible: bool
    weights: tuple[float, ...] | None
    witness: Witness | None
    max_residual: float


def realizable(table: CorrelationTable, tol: float = 1e-9) -> RealizabilityResult:
    """Decide membership in the classical correlation polytope.

    With singles present they become extra constraints alongside the four
    joints. Feasible results carry cleaned weights (clipped to >= 0 and
    renormalized); infeasible ones carry a violated-constraint witness.
    """
    rows = [_JOINT_MATRIX]
    target = list(table.joints_flat())
    if table.has_singles:
        rows.append(_SINGLE_MATRIX)
        target.extend(table.singles_a)
        target.extend(table.singles_b)
    m = np.vstack(rows)
    b = np.array(target)
    n_cons, n_w = m.shape

    # Variables: 16 weights then the residual t. Constraints fold
    # |M w - b| <= t into two one-sided inequalities.
    cost = np.zeros(n_w + 1)
    cost[-1] = 1.0
    ones_col = np.ones((n_cons, 1))
    a_ub = np.block([[m, -ones_col], [-m, -ones_col]])
    b_ub = np.concatenate([b, -b])
    a_eq = np.concatenate([np.ones(n_w), [0.0]]).reshape(1, -1)
    res = linprog(
        cost,
        A_ub=a_ub,
        b_ub=b_ub,
        A_eq=a_eq,
        b_eq=[1.0],
        bounds=[(0.0, None)] * n_w + [(0.0, None)],
        method="highs",
    )
    if not res.success:
        raise RuntimeError(f"feasibility solve failed: {res.message}")

    best_residual = float(res.fun)
    if best_residual <= tol:
        w = np.clip(res.x[:n_w], 0.0, None)
        w /= w.sum()
        residual = float(np.max(np.abs(m @ w - b)))
        return RealizabilityResult(True, tuple(w.tolist()), None, residual)
    return RealizabilityResult(False, None, _witness(table), best_residual)


def _witness(table: CorrelationTable) -> Witness:
    joints = table.joints_flat()
    best_signs = max(
        CHSH_FORMS, key=lambda s: abs(sum(si * e for si, e in zip(s, joints)))
    )
    best_value = abs(sum(si * e for si, e in zip(best_signs, joints)))
    if best_value > 2.0:
        terms = " ".join(
            f"{'+' if s > 0 else '-'}E{i // 2}{i % 2}" for i, s in enumerate(best_signs)
        )
        return Witness(
            kind="bell-form",
            value=best_value,
            bound=2.0,
            description=f"|{terms}| = {best_value!r} > 2",
            signs=best_signs,
        )

    # Joints alone are fine, so the obstruction involves the singles: some
    # outcome probability implied by (singles, joint) is negative.
    worst = None
    for i, j, sa, sb in itertools.product(range(2), range(2), (1, -1), (1, -1)):
        q = (
            1.0
            + sa * table.singles_a[i]
            + sb * table.singles_b[j]
            + sa * sb * float(table.joint[i, j])
        ) / 4.0
        if worst is None or q < worst[0]:
            worst = (q, i, j, sa, sb)
    q, i, j, sa, sb = worst
    if q < 0.0:
        return Witness(
            kind="outcome-probability",
            value=q,
            bound=0.0,
            description=(
                f"p(row={sa:+d}, col={sb:+d} | {table.row_contexts[i]!r}, "
                f"{table.col_contexts[j]!r}) = {q!r} < 0"
            ),
        )
    raise RuntimeError(
        "infeasible table with no violated facet; residual inconsistent"
    )


def is_kolmogorovian(table: CorrelationTable, tol: float = 1e-12) -> bool:
    """Joints-only shortcut: classical iff every Bell form stays <= 2."""
    if table.has_singles:
        raise ValueError(
            "is_kolmogorovian applies to joints-only tables; "
            "use realizable() when singles are present"
        )
    return bell_value_all_forms(table) <= 2.0 + tol


def classify(table: CorrelationTable, tol: float = 1e-12) -> str:
    """Band of the all-forms value: classical, quantum-achievable, supra-quantum."""
    value = bell_value_all_forms(table)
    if value <= 2.0 + tol:
        return CLASSICAL
    if value <= TSIRELSON_BOUND + tol:
        return QUANTUM_ACHIEVABLE
    return SUPRA_QUANTUM
