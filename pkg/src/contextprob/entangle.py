"""Entangled combinations of two concepts.

Two concepts, each carrying a choice distribution for its own context, are
combined over a declared compatibility relation: a set of (left exemplar,
right exemplar) pairs that make sense together. The combined state puts
amplitude proportional to sqrt(pA(x) * pB(y)) on each compatible pair and
zero elsewhere, then renormalizes.

This rule is a deliberate modeling choice, not a derived consequence: it
concentrates all joint probability on the compatible pairs, which is what
produces perfect correlations between the two sides, and it reproduces the
input marginals only when the relation is the full Cartesian product. The
narrower the relation, the more the marginals can shift; see guppy_gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .concepts import ContextDistribution
from .hilbert import Observable

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class CompatibilityRelation:
    """Ordered, duplicate-free pairs of (left, right) exemplar labels."""

    pairs: tuple[tuple[str, str], ...]

    def __post_init__(self) -> None:
        pairs = tuple((str(a), str(b)) for a, b in self.pairs)
        if not pairs:
            raise ValueError("compatibility relation needs at least one pair")
        for a, b in pairs:
            if not a or not b:
                raise ValueError(f"pair labels must be non-empty, got ({a!r}, {b!r})")
        if len(set(pairs)) != len(pairs):
            seen: set[tuple[str, str]] = set()
            dup = next(p for p in pairs if p in seen or seen.add(p))
            raise ValueError(f"duplicate pair in relation: {dup!r}")
        object.__setattr__(self, "pairs", pairs)

    @property
    def left_labels(self) -> frozenset[str]:
        return frozenset(a for a, _ in self.pairs)

    @property
    def right_labels(self) -> frozenset[str]:
        return frozenset(b for _, b in self.pairs)


def full_relation(left: tuple[str, ...], right: tuple[str, ...]) -> CompatibilityRelation:
    """The Cartesian product relation: every pair is compatible."""
    return CompatibilityRelation(tuple((a, b) for a in left for b in right))


def parse_relation(text: str) -> CompatibilityRelation:
    """Parse one tab-separated (left, right) pair per line.

    Blank lines and lines starting with '#' are skipped.
    """
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in raw.split("\t")]
        if len(fields) != 2 or not all(fields):
            raise ValueError(
                f"line {lineno}: expected two tab-separated labels, got {line!r}"
            )
        pairs.append((fields[0], fields[1]))
    if not pairs:
        raise ValueError("relation file contains no pairs")
    return CompatibilityRelation(tuple(pairs))


def load_relation(path: str | Path) -> CompatibilityRelation:
    try:
        return parse_relation(Path(path).read_text(encoding="utf-8"))
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


@dataclass(frozen=True, eq=False)
class EntangledState:
    """Unit-norm joint amplitudes over pairs drawn from two label bases.

    Only pairs with nonzero amplitude are stored; everything else is an
    implicit zero.
    """

    basis_a: tuple[str, ...]
    basis_b: tuple[str, ...]
    amplitudes: Mapping[tuple[str, str], complex]

    def __post_init__(self) -> None:
        basis_a = _check_side(self.basis_a, "A")
        basis_b = _check_side(self.basis_b, "B")
        amps: dict[tuple[str, str], complex] = {}
        for (x, y), a in dict(self.amplitudes).items():
            if x not in basis_a:
                raise ValueError(f"pair label {x!r} is not in side A basis {list(basis_a)}")
            if y not in basis_b:
                raise ValueError(f"pair label {y!r} is not in side B basis {list(basis_b)}")
            a = complex(a)
            if a != 0:
                amps[(x, y)] = a
        norm_sq = sum(abs(a) ** 2 for a in amps.values())
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise ValueError(f"joint state is not normalized: squared norm {norm_sq!r}")
        object.__setattr__(self, "basis_a", basis_a)
        object.__setattr__(self, "basis_b", basis_b)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def support(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.amplitudes)

    def amplitude(self, x: str, y: str) -> complex:
        return self.amplitudes.get((x, y), 0j)

    def probability(self, x: str, y: str) -> float:
        return abs(self.amplitude(x, y)) ** 2


def _check_side(labels, side: str) -> tuple[str, ...]:
    out = tuple(labels)
    if not out:
        raise ValueError(f"side {side} basis must contain at least one label")
    for label in out:
        if not isinstance(label, str) or not label:
            raise ValueError(f"side {side} labels must be non-empty strings, got {label!r}")
    if len(set(out)) != len(out):
        raise ValueError(f"side {side} basis has duplicate labels")
    return out


def combine(
    dist_a: ContextDistribution,
    dist_b: ContextDistribution,
    relation: CompatibilityRelation,
) -> EntangledState:
    """Entangle two distributions along a compatibility relation.

    Weight pA(x) * pB(y) goes on each compatible pair; the amplitudes are
    the square roots of those weights after renormalization. Fails when no
    compatible pair carries positive probability on both sides.
    """
    basis_a = dist_a.exemplars
    basis_b = dist_b.exemplars
    weights: dict[tuple[str, str], float] = {}
    for x, y in relation.pairs:
        w = dist_a.probability(x) * dist_b.probability(y)
        if w > 0:
            weights[(x, y)] = w
    if not weights:
        raise ValueError(
            "concepts cannot be combined: no compatible pair has positive "
            "probability on both sides"
        )
    total = sum(weights.values())
    amps = {pair: complex(math.sqrt(w / total)) for pair, w in weights.items()}
    return EntangledState(basis_a, basis_b, amps)


def joint_expectation(state: EntangledState, obs_a: Observable, obs_b: Observable) -> float:
    """Mean of the product of two one-sided +1/-1 observables."""
    if obs_a.basis != state.basis_a:
        raise ValueError(
            f"side A basis mismatch: observable {list(obs_a.basis)} vs "
            f"state {list(state.basis_a)}"
        )
    if obs_b.basis != state.basis_b:
        raise ValueError(
            f"side B basis mismatch: observable {list(obs_b.basis)} vs "
            f"state {list(state.basis_b)}"
        )
    total = 0.0
    for (x, y), a in state.amplitudes.items():
        total += obs_a.signs[x] * obs_b.signs[y] * abs(a) ** 2
    return min(max(total, -1.0), 1.0)


def marginal(state: EntangledState, side: str) -> ContextDistribution:
    """One side's exemplar distribution, summing the joint over the other."""
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    pick = 0 if side == "A" else 1
    basis = state.basis_a if side == "A" else state.basis_b
    probs = dict.fromkeys(basis, 0.0)
    for pair, a in state.amplitudes.items():
        probs[pair[pick]] += abs(a) ** 2
    return ContextDistribution(f"marginal of side {side}", probs)


def conditional_collapse(state: EntangledState, side: str, exemplar: str) -> EntangledState:
    """Condition the joint state on one side's exemplar being observed."""
    if side not in ("A", "B"):
        raise ValueError(f"side must be 'A' or 'B', got {side!r}")
    basis = state.basis_a if side == "A" else state.basis_b
    if exemplar not in basis:
        raise ValueError(
            f"unknown exemplar {exemplar!r} on side {side}; basis is {list(basis)}"
        )
    pick = 0 if side == "A" else 1
    kept = {pair: a for pair, a in state.amplitudes.items() if pair[pick] == exemplar}
    mass = sum(abs(a) ** 2 for a in kept.values())
    if mass <= _NORM_TOL:
        raise ValueError(
            f"cannot collapse side {side} to {exemplar!r}: its marginal probability is zero"
        )
    scale = 1.0 / math.sqrt(mass)
    return EntangledState(
        state.basis_a, state.basis_b, {pair: a * scale for pair, a in kept.items()}
    )


def guppy_gap(
    state: EntangledState,
    dist_a: ContextDistribution,
    dist_b: ContextDistribution,
    exemplar: str,
) -> float:
    """How much the combination boosts one exemplar beyond both inputs.

    Returns marginal_A(exemplar) - max(pA(exemplar), pB(exemplar)). A
    strictly positive gap means the combined concept rates the exemplar
    higher than either concept alone ever did.
    """
    if exemplar not in state.basis_a or exemplar not in state.basis_b:
        raise ValueError(
            f"exemplar {exemplar!r} must appear in both bases; "
            f"side A has {list(state.basis_a)}, side B has {list(state.basis_b)}"
        )
    joint_p = marginal(state, "A").probability(exemplar)
    return joint_p - max(dist_a.probability(exemplar), dist_b.probability(exemplar))
