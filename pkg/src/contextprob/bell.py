"""Bell-functional evaluation on 2x2 correlation tables.

A correlation table holds the four joint expectations E(row_i, col_j) of
+1/-1 measurements, two settings per side, optionally together with the
four single-side expectations. The primary functional is

    |E(r0,c0) - E(r0,c1)| + |E(r1,c0) + E(r1,c1)|

whose classical ceiling is 2. The full battery takes the maximum of all
eight sign placements (one relative minus, anywhere, times a global flip);
a table is classically explainable exactly when every form stays at or
below 2.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

#: All eight sign placements: one minus among the four terms, up to a
#: global flip, i.e. every sign tuple with an odd number of -1 entries.
CHSH_FORMS: tuple[tuple[int, int, int, int], ...] = tuple(
    s for s in itertools.product((1, -1), repeat=4) if s.count(-1) % 2 == 1
)


def _check_expectation(value: float, where: str) -> float:
    v = float(value)
    if not math.isfinite(v) or not (-1.0 <= v <= 1.0):
        raise ValueError(f"expectation out of range at {where}: {value!r}")
    return v


@dataclass(frozen=True, eq=False)
class CorrelationTable:
    """Joint expectations for a 2x2 settings grid, plus optional singles.

    ``joint[i][j]`` pairs row context i with column context j. When given,
    ``singles_a`` follows the row contexts and ``singles_b`` the columns.
    """

    row_contexts: tuple[str, str]
    col_contexts: tuple[str, str]
    joint: np.ndarray
    singles_a: tuple[float, float] | None = None
    singles_b: tuple[float, float] | None = None

    def __post_init__(self) -> None:
        rows = _context_pair(self.row_contexts, "row")
        cols = _context_pair(self.col_contexts, "col")
        joint = np.array(self.joint, dtype=float)
        if joint.shape != (2, 2):
            raise ValueError(f"joint expectations must be 2x2, got shape {joint.shape}")
        for i, j in itertools.product(range(2), range(2)):
            _check_expectation(joint[i, j], f"({rows[i]!r}, {cols[j]!r})")
        joint.flags.writeable = False
        singles_a = _singles(self.singles_a, rows)
        singles_b = _singles(self.singles_b, cols)
        if (singles_a is None) != (singles_b is None):
            raise ValueError("singles must be given for both sides or neither")
        object.__setattr__(self, "row_contexts", rows)
        object.__setattr__(self, "col_contexts", cols)
        object.__setattr__(self, "joint", joint)
        object.__setattr__(self, "singles_a", singles_a)
        object.__setattr__(self, "singles_b", singles_b)

    @property
    def has_singles(self) -> bool:
        return self.singles_a is not None

    def joints_flat(self) -> tuple[float, float, float, float]:
        """The four joints in row-major order."""
        j = self.joint
        return (float(j[0, 0]), float(j[0, 1]), float(j[1, 0]), float(j[1, 1]))


def _context_pair(labels, kind: str) -> tuple[str, str]:
    pair = tuple(labels)
    if len(pair) != 2 or any(not isinstance(x, str) or not x for x in pair):
        raise ValueError(f"need exactly two non-empty {kind} context labels, got {labels!r}")
    if pair[0] == pair[1]:
        raise ValueError(f"{kind} context labels must differ, got {pair[0]!r} twice")
    return pair


def _singles(values, contexts) -> tuple[float, float] | None:
    if values is None:
        return None
    vals = tuple(values)
    if len(vals) != 2:
        raise ValueError(f"need exactly two single-side expectations, got {values!r}")
    return (
        _check_expectation(vals[0], f"single ({contexts[0]!r})"),
        _check_expectation(vals[1], f"single ({contexts[1]!r})"),
    )


def bell_value(table: CorrelationTable) -> float:
    """The primary functional: |E00 - E01| + |E10 + E11|."""
    e00, e01, e10, e11 = table.joints_flat()
    return abs(e00 - e01) + abs(e10 + e11)


def bell_value_all_forms(table: CorrelationTable) -> float:
    """Maximum of |s0*E00 + s1*E01 + s2*E10 + s3*E11| over all eight forms."""
    joints = table.joints_flat()
    return max(
        abs(sum(s * e for s, e in zip(signs, joints))) for signs in CHSH_FORMS
    )


def is_violated(value: float, tol: float = 1e-12) -> bool:
    """Whether a functional value exceeds the classical ceiling of 2."""
    return float(value) > 2.0 + tol


@dataclass(frozen=True)
class ProductEqualityResult:
    """Per-cell verdicts for E(row_i, col_j) = E(row_i) * E(col_j)."""

    cells: tuple[tuple[bool, bool], tuple[bool, bool]]
    all_hold: bool
    tolerance: float


def product_equality_check(
    singles: Sequence[float],
    joints: Sequence[float],
    tol: float = 1e-9,
) -> ProductEqualityResult:
    """Check each joint against the product of its two singles.

    ``singles`` is (row 0, row 1, col 0, col 1); ``joints`` is row-major
    (r0c0, r0c1, r1c0, r1c1). When all four products match, every sign
    placement of the functional evaluates to exactly 2, so no violation is
    possible.
    """
    s = tuple(_check_expectation(v, f"singles[{i}]") for i, v in enumerate(singles))
    j = tuple(_check_expectation(v, f"joints[{i}]") for i, v in enumerate(joints))
    if len(s) != 4 or len(j) != 4:
        raise ValueError("need four singles and four joints")
    cells = tuple(
        tuple(
            abs(j[2 * r + c] - s[r] * s[2 + c]) <= tol for c in range(2)
        )
        for r in range(2)
    )
    all_hold = all(cells[r][c] for r in range(2) for c in range(2))
    return ProductEqualityResult(cells, all_hold, float(tol))


@dataclass(frozen=True)
class PetFoodScenario:
    """Two pets, two foods, and a watcher who reports what got eaten.

    Pet one normally eats food one and pet two food two. With probability
    ``odd_event_probability`` the day is odd: the report that "pet one is
    eating" coincides with "food two is eaten" only by chance rather than
    perfectly. At zero the correlations are perfect and the functional
    reaches its algebraic maximum of 4.
    """

    odd_event_probability: float

    def __post_init__(self) -> None:
        p = float(self.odd_event_probability)
        if not math.isfinite(p) or not (0.0 <= p <= 1.0):
            raise ValueError(f"mixing probability must lie in [0, 1], got {p!r}")
        object.__setattr__(self, "odd_event_probability", p)


_PET_FOOD_ROWS = ("pet one is eating", "one of the pets is eating")
_PET_FOOD_COLS = ("food two is eaten", "one of the foods is eaten")


def pet_food_table(scenario: PetFoodScenario) -> CorrelationTable:
    """Correlation table for the two-pets scenario.

    The coarse contexts ("one of the pets", "one of the foods") are always
    true, so three joints sit at +1 regardless of mixing. The sharp pair
    moves linearly from -1 (perfect anti-alignment) to +1 as the odd-event
    probability goes from 0 to 1.
    """
    p = scenario.odd_event_probability
    joint = np.array([[2.0 * p - 1.0, 1.0], [1.0, 1.0]])
    return CorrelationTable(
        _PET_FOOD_ROWS,
        _PET_FOOD_COLS,
        joint,
        singles_a=(1.0, 1.0),
        singles_b=(1.0, 1.0),
    )


@dataclass(frozen=True)
class SweepPoint:
    odd_event_probability: float
    bell_value: float
    violated: bool


def sweep_mixing(grid: Sequence[float]) -> list[SweepPoint]:
    """Evaluate the pet-food functional over a grid of mixing probabilities."""
    points: list[SweepPoint] = []
    for i, p in enumerate(grid):
        try:
            scenario = PetFoodScenario(p)
        except ValueError as exc:
            raise ValueError(f"grid point {i}: {exc}") from None
        value = bell_value(pet_food_table(scenario))
        points.append(SweepPoint(scenario.odd_event_probability, value, is_violated(value)))
    return points


def load_scenario(path: str | Path) -> CorrelationTable:
    """Read a correlation table, or a pet-food mixing probability, from JSON.

    Exactly one of ``odd_event_probability`` and ``joint`` must be present.
    With ``joint``, optional keys ``row_contexts``, ``col_contexts``,
    ``singles_a`` and ``singles_b`` fill in the rest of the table.
    """
    raw = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object at top level")

    has_p = "odd_event_probability" in data
    has_joint = "joint" in data
    if has_p == has_joint:
        raise ValueError(
            f"{path}: give exactly one of 'odd_event_probability' and 'joint'"
        )
    try:
        if has_p:
            return pet_food_table(PetFoodScenario(data["odd_event_probability"]))
        return CorrelationTable(
            tuple(data.get("row_contexts", ("row-0", "row-1"))),
            tuple(data.get("col_contexts", ("col-0", "col-1"))),
            np.array(data["joint"], dtype=float),
            singles_a=tuple(data["singles_a"]) if "singles_a" in data else None,
            singles_b=tuple(data["singles_b"]) if "singles_b" in data else None,
        )
    except (ValueError, TypeError) as exc:
        raise ValueError(f"{path}: {exc}") from None
