"""Finite-dimensional complex state spaces over labeled bases.

A state is a unit-norm vector of complex amplitudes indexed by an ordered
tuple of string labels. Observables are diagonal in that basis with
eigenvalues +1/-1, and projectors are diagonal 0/1 matrices identified by
the set of labels they keep. Everything here is immutable and every
operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

DEFAULT_TOL = 1e-12

# Separator used for tensor-product labels. Joining flat strings keeps
# three-factor products associative at the label level as well.
TENSOR_SEP = "⊗"


def _as_basis(labels: Iterable[str]) -> tuple[str, ...]:
    basis = tuple(labels)
    if not basis:
        raise ValueError("basis must contain at least one label")
    for label in basis:
        if not isinstance(label, str) or not label:
            raise ValueError(f"basis labels must be non-empty strings, got {label!r}")
    if len(set(basis)) != len(basis):
        seen: set[str] = set()
        dup = next(x for x in basis if x in seen or seen.add(x))
        raise ValueError(f"duplicate basis label: {dup!r}")
    return basis


def _same_basis(a, b, op: str) -> None:
    if a.basis != b.basis:
        raise ValueError(
            f"basis mismatch in {op}: {list(a.basis)} vs {list(b.basis)}"
        )


@dataclass(frozen=True, eq=False)
class StateVector:
    """Unit-norm complex amplitudes over an ordered label basis."""

    basis: tuple[str, ...]
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        basis = _as_basis(self.basis)
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape[0] != len(basis):
            raise ValueError(
                f"{amps.shape[0]} amplitudes for {len(basis)} basis labels"
            )
        norm_sq = float(np.sum(np.abs(amps) ** 2))
        if abs(norm_sq - 1.0) > DEFAULT_TOL:
            raise ValueError(f"state is not normalized: squared norm {norm_sq!r}")
        amps.flags.writeable = False
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "_pos", {x: i for i, x in enumerate(basis)})

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, label: str) -> int:
        try:
            return self._pos[label]  # type: ignore[attr-defined]
        except KeyError:
            raise ValueError(
                f"unknown basis label {label!r}; basis is {list(self.basis)}"
            ) from None

    def amplitude(self, label: str) -> complex:
        return complex(self.amplitudes[self.index(label)])


@dataclass(frozen=True)
class Projector:
    """Diagonal 0/1 projector keeping the amplitudes in ``support``.

    An empty support is the zero projector; it is allowed but cannot be
    used to collapse a state.
    """

    basis: tuple[str, ...]
    support: frozenset[str]

    def __post_init__(self) -> None:
        basis = _as_basis(self.basis)
        support = frozenset(self.support)
        stray = support - set(basis)
        if stray:
            raise ValueError(
                f"projector support not in basis: {sorted(stray)!r}"
            )
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "support", support)


def identity_projector(basis: Sequence[str]) -> Projector:
    b = _as_basis(basis)
    return Projector(b, frozenset(b))


@dataclass(frozen=True, eq=False)
class Observable:
    """Diagonal two-valued observable: each basis label gets +1 or -1."""

    basis: tuple[str, ...]
    signs: Mapping[str, int]

    def __post_init__(self) -> None:
        basis = _as_basis(self.basis)
        signs = dict(self.signs)
        if set(signs) != set(basis):
            missing = sorted(set(basis) - set(signs))
            stray = sorted(set(signs) - set(basis))
            raise ValueError(
                f"observable signs must cover the basis exactly; "
                f"missing {missing!r}, stray {stray!r}"
            )
        for label, s in signs.items():
            if s not in (1, -1):
                raise ValueError(f"sign for {label!r} must be +1 or -1, got {s!r}")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "signs", signs)

    def sign(self, label: str) -> int:
        if label not in self.signs:
            raise ValueError(
                f"unknown basis label {label!r}; basis is {list(self.basis)}"
            )
        return self.signs[label]


def sign_projectors(obs: Observable) -> tuple[Projector, Projector]:
    """The (+1, -1) eigenspace projectors of a diagonal observable."""
    plus = frozenset(x for x in obs.basis if obs.signs[x] == 1)
    minus = frozenset(x for x in obs.basis if obs.signs[x] == -1)
    return Projector(obs.basis, plus), Projector(obs.basis, minus)


def basis_state(basis: Sequence[str], label: str) -> StateVector:
    """The state with all amplitude on one label."""
    b = _as_basis(basis)
    if label not in b:
        raise ValueError(f"unknown basis label {label!r}; basis is {list(b)}")
    amps = np.zeros(len(b), dtype=complex)
    amps[b.index(label)] = 1.0
    return StateVector(b, amps)


def normalize(
    basis: Sequence[str], amplitudes: Sequence[complex], tol: float = DEFAULT_TOL
) -> StateVector:
    """Scale a raw amplitude vector to unit norm.

    Vectors whose norm is at or below ``tol`` are treated as zero and
    rejected, since no direction can be recovered from them.
    """
    b = _as_basis(basis)
    amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
    if amps.shape[0] != len(b):
        raise ValueError(f"{amps.shape[0]} amplitudes for {len(b)} basis labels")
    norm = float(np.linalg.norm(amps))
    if norm <= tol:
        raise ValueError("cannot normalize an all-zero amplitude vector")
    return StateVector(b, amps / norm)


def inner(u: StateVector, v: StateVector) -> complex:
    """Hermitian inner product <u|v>, conjugating the first argument."""
    _same_basis(u, v, "inner product")
    return complex(np.vdot(u.amplitudes, v.amplitudes))


def tensor(u: StateVector, v: StateVector) -> StateVector:
    """Joint state over pair labels, amplitude = product of amplitudes.

    Pair labels are formed by joining the factor labels with a separator,
    left factor first, so the result is sensitive to argument order.
    """
    labels = [f"{a}{TENSOR_SEP}{b}" for a in u.basis for b in v.basis]
    amps = np.outer(u.amplitudes, v.amplitudes).reshape(-1)
    # Each factor is unit norm only within tolerance, so the product can
    # drift past the constructor gate; renormalize the (near-unit) result.
    return normalize(labels, amps)


def born_prob(proj: Projector, state: StateVector) -> float:
    """Probability of the outcome ``proj`` keeps, for a given state."""
    _same_basis(proj, state, "born_prob")
    mask = np.fromiter(
        (x in proj.support for x in state.basis), dtype=bool, count=state.dim
    )
    p = float(np.sum(np.abs(state.amplitudes[mask]) ** 2))
    return min(max(p, 0.0), 1.0)


def collapse(proj: Projector, state: StateVector, tol: float = DEFAULT_TOL) -> StateVector:
    """Project a state onto ``proj``'s support and renormalize."""
    _same_basis(proj, state, "collapse")
    mask = np.fromiter(
        (x in proj.support for x in state.basis), dtype=bool, count=state.dim
    )
    kept = np.where(mask, state.amplitudes, 0.0)
    if float(np.sum(np.abs(kept) ** 2)) <= tol:
        raise ValueError(
            "cannot collapse: state has no amplitude on "
            f"{sorted(proj.support)!r}"
        )
    return normalize(state.basis, kept)


def expectation(obs: Observable, state: StateVector) -> float:
    """Mean outcome of a +1/-1 observable.

    Computed as the difference of the two Born probabilities, so it agrees
    with them exactly, term for term.
    """
    if obs.basis != state.basis:
        raise ValueError(
            f"basis mismatch in expectation: {list(obs.basis)} vs {list(state.basis)}"
        )
    plus, minus = sign_projectors(obs)
    return born_prob(plus, state) - born_prob(minus, state)
