"""Typicality rating tables and the context-dependent states they induce.

The input is a table of non-negative exemplar ratings, one column per
context. Normalizing a column gives the probability that a subject picks
each exemplar as a good example of the concept under that context; taking
square roots of those probabilities gives the concept's state vector for
the context.

Table text format (tab-separated by default)::

    exemplar<TAB>context label 1<TAB>context label 2
    rabbit<TAB>0.07<TAB>2.52
    cat<TAB>3.96<TAB>4.80

The first header cell is ignored. Blank lines are skipped.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

import numpy as np

from .hilbert import StateVector

_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class RatingTable:
    """Non-negative ratings, exemplars along rows and contexts along columns."""

    exemplars: tuple[str, ...]
    contexts: tuple[str, ...]
    ratings: np.ndarray

    def __post_init__(self) -> None:
        exemplars = _distinct_labels(self.exemplars, "exemplar")
        contexts = _distinct_labels(self.contexts, "context")
        ratings = np.array(self.ratings, dtype=float)
        if ratings.shape != (len(exemplars), len(contexts)):
            raise ValueError(
                f"ratings shape {ratings.shape} does not match "
                f"{len(exemplars)} exemplars x {len(contexts)} contexts"
            )
        if not np.all(np.isfinite(ratings)):
            raise ValueError("ratings must be finite numbers")
        bad = np.argwhere(ratings < 0)
        if bad.size:
            i, j = bad[0]
            raise ValueError(
                f"negative rating at ({exemplars[i]!r}, {contexts[j]!r}): "
                f"{ratings[i, j]!r}"
            )
        dead = np.flatnonzero(ratings.sum(axis=0) <= 0)
        if dead.size:
            raise ValueError(f"context column has no mass: {contexts[dead[0]]!r}")
        ratings.flags.writeable = False
        object.__setattr__(self, "exemplars", exemplars)
        object.__setattr__(self, "contexts", contexts)
        object.__setattr__(self, "ratings", ratings)

    def context_index(self, context: str) -> int:
        try:
            return self.contexts.index(context)
        except ValueError:
            raise ValueError(
                f"unknown context {context!r}; available contexts: "
                + ", ".join(repr(c) for c in self.contexts)
            ) from None

    def exemplar_index(self, exemplar: str) -> int:
        try:
            return self.exemplars.index(exemplar)
        except ValueError:
            raise ValueError(
                f"unknown exemplar {exemplar!r}; available exemplars: "
                + ", ".join(repr(x) for x in self.exemplars)
            ) from None

    def rating(self, exemplar: str, context: str) -> float:
        return float(
            self.ratings[self.exemplar_index(exemplar), self.context_index(context)]
        )

    def column(self, context: str) -> np.ndarray:
        return self.ratings[:, self.context_index(context)].copy()


def _distinct_labels(labels, kind: str) -> tuple[str, ...]:
    out = tuple(labels)
    if not out:
        raise ValueError(f"need at least one {kind} label")
    for label in out:
        if not isinstance(label, str) or not label:
            raise ValueError(f"{kind} labels must be non-empty strings, got {label!r}")
    if len(set(out)) != len(out):
        seen: set[str] = set()
        dup = next(x for x in out if x in seen or seen.add(x))
        raise ValueError(f"duplicate {kind} label: {dup!r}")
    return out


@dataclass(frozen=True, eq=False)
class ContextDistribution:
    """Probability of choosing each exemplar, for one fixed context.

    Probabilities are kept in insertion order, sum to one within 1e-12, and
    are clamped into [0, 1] after an equally tight range check, so that
    floating-point dust from upstream arithmetic never leaks out.
    """

    context: str
    probabilities: Mapping[str, float]

    def __post_init__(self) -> None:
        if not isinstance(self.context, str) or not self.context:
            raise ValueError("context label must be a non-empty string")
        probs: dict[str, float] = {}
        for label, p in dict(self.probabilities).items():
            if not isinstance(label, str) or not label:
                raise ValueError(f"exemplar labels must be non-empty strings, got {label!r}")
            p = float(p)
            if not (-_SUM_TOL <= p <= 1.0 + _SUM_TOL):
                raise ValueError(
                    f"probability for {label!r} out of range: {p!r}"
                )
            probs[label] = min(max(p, 0.0), 1.0)
        if not probs:
            raise ValueError("distribution needs at least one exemplar")
        total = float(sum(probs.values()))
        if abs(total - 1.0) > _SUM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, expected 1")
        object.__setattr__(self, "probabilities", probs)

    @property
    def exemplars(self) -> tuple[str, ...]:
        return tuple(self.probabilities)

    def probability(self, exemplar: str) -> float:
        try:
            return self.probabilities[exemplar]
        except KeyError:
            raise ValueError(
                f"unknown exemplar {exemplar!r}; available exemplars: "
                + ", ".join(repr(x) for x in self.probabilities)
            ) from None


def parse_ratings(text: str, delimiter: str = "\t") -> RatingTable:
    """Parse rating-table text. Errors cite 1-based line numbers."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip():
            continue
        rows.append((lineno, raw.split(delimiter)))
    if len(rows) < 2:
        raise ValueError("rating table needs a header line and at least one exemplar row")

    header_line, header = rows[0]
    contexts = [c.strip() for c in header[1:]]
    if not contexts or any(not c for c in contexts):
        raise ValueError(
            f"line {header_line}: header must list at least one non-empty context label"
        )

    exemplars: list[str] = []
    values: list[list[float]] = []
    for lineno, cells in rows[1:]:
        if len(cells) != len(header):
            raise ValueError(
                f"line {lineno}: expected {len(header)} fields, got {len(cells)}"
            )
        exemplar = cells[0].strip()
        row: list[float] = []
        for j, cell in enumerate(cells[1:]):
            try:
                v = float(cell)
            except ValueError:
                raise ValueError(
                    f"line {lineno}: rating at ({exemplar!r}, {contexts[j]!r}) "
                    f"is not a number: {cell.strip()!r}"
                ) from None
            if v < 0:
                raise ValueError(
                    f"line {lineno}: negative rating at ({exemplar!r}, {contexts[j]!r}): {v!r}"
                )
            row.append(v)
        exemplars.append(exemplar)
        values.append(row)

    return RatingTable(tuple(exemplars), tuple(contexts), np.array(values))


def load_ratings(path: str | Path, delimiter: str = "\t") -> RatingTable:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return parse_ratings(text, delimiter=delimiter)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def context_distribution(table: RatingTable, context: str) -> ContextDistribution:
    """Normalize one rating column into choice probabilities."""
    col = table.column(context)
    probs = col / col.sum()
    return ContextDistribution(
        context, dict(zip(table.exemplars, probs.tolist()))
    )


def context_state(table: RatingTable, context: str) -> StateVector:
    """The concept's state under a context: amplitudes are square roots
    of the choice probabilities, in exemplar order."""
    dist = context_distribution(table, context)
    amps = np.sqrt(np.array([dist.probabilities[x] for x in table.exemplars]))
    return StateVector(table.exemplars, amps)


def typicality(table: RatingTable, context: str, exemplar: str) -> float:
    """Choice probability of one exemplar under a context."""
    table.exemplar_index(exemplar)  # label check with a helpful message
    return context_distribution(table, context).probability(exemplar)


def rank_exemplars(table: RatingTable, context: str) -> list[str]:
    """Exemplars from most to least typical; ties break alphabetically."""
    dist = context_distribution(table, context)
    return sorted(table.exemplars, key=lambda x: (-dist.probability(x), x))
