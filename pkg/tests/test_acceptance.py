"""End-to-end acceptance gate.

One test per headline behavior, each printing a single [PASS] or [FAIL]
line. Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines
alongside the test names.
"""

import itertools
import math
import time
from contextlib import contextmanager

import numpy as np
import pytest

from contextprob.bell import (
    CorrelationTable,
    PetFoodScenario,
    bell_value,
    bell_value_all_forms,
    is_violated,
    pet_food_table,
    product_equality_check,
    sweep_mixing,
)
from contextprob.concepts import context_distribution, load_ratings, rank_exemplars
from contextprob.entangle import combine, load_relation, marginal
from contextprob.fixtures import fixture_path
from contextprob.polytope import (
    SUPRA_QUANTUM,
    TSIRELSON_BOUND,
    classify,
    is_kolmogorovian,
    realizable,
)
from contextprob.semspace import (
    TermDocMatrix,
    bow_vector,
    build_matrix,
    load_corpus,
    order_representation,
    svd_truncate,
)

ROWS = ("r0", "r1")
COLS = ("c0", "c1")


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    print(f"[PASS] {name}")


def joints_table(joint):
    return CorrelationTable(ROWS, COLS, np.array(joint, dtype=float))


def test_maximal_violation_at_zero_mixing():
    with criterion("zero-mixing table reaches the algebraic maximum of 4"):
        table = pet_food_table(PetFoodScenario(0.0))
        assert np.array_equal(table.joint, [[-1.0, 1.0], [1.0, 1.0]])
        assert bell_value(table) == 4.0
        # Construction plus evaluation must be interactive-speed.
        best = math.inf
        for _ in range(5):
            start = time.perf_counter()
            bell_value(pet_food_table(PetFoodScenario(0.0)))
            best = min(best, time.perf_counter() - start)
        assert best < 1e-3


def test_mixing_attenuates_the_violation_linearly():
    with criterion("bell value is 4 - 2p within 1e-12 across the mixing grid"):
        grid = [i / 10 for i in range(11)]
        for point in sweep_mixing(grid):
            p = point.odd_event_probability
            assert abs(point.bell_value - (4.0 - 2.0 * p)) <= 1e-12
            assert point.violated == (p < 1.0)
            assert point.violated == is_violated(point.bell_value)


def test_product_generated_joints_sit_exactly_on_the_ceiling():
    with criterion("all 16 sign quadruples give bell value exactly 2"):
        for ra, rb, ca, cb in itertools.product((1, -1), repeat=4):
            table = CorrelationTable(
                ROWS,
                COLS,
                np.array(
                    [[ra * ca, ra * cb], [rb * ca, rb * cb]], dtype=float
                ),
                singles_a=(ra, rb),
                singles_b=(ca, cb),
            )
            assert bell_value(table) == 2.0


def test_product_equality_check_flags_the_broken_cell():
    with criterion("singles +1 with joint -1 flags exactly the first cell"):
        result = product_equality_check((1, 1, 1, 1), (-1, 1, 1, 1))
        assert result.cells[0][0] is False
        assert result.cells[0][1] is True
        assert result.cells[1][0] is True
        assert result.cells[1][1] is True
        assert not result.all_hold


def test_membership_solver_agrees_with_form_enumeration():
    with criterion(
        "mixture feasibility matches the 8-form test on 10,000 random tables"
    ):
        rng = np.random.default_rng(8128)
        start = time.perf_counter()
        for _ in range(10_000):
            table = joints_table(rng.uniform(-1.0, 1.0, size=(2, 2)))
            assert realizable(table).feasible == is_kolmogorovian(table)
        elapsed = time.perf_counter() - start
        assert elapsed < 30.0

    with criterion("the zero-mixing table is infeasible with witness value 4"):
        table = joints_table([[-1.0, 1.0], [1.0, 1.0]])
        result = realizable(table)
        assert not result.feasible
        assert result.witness.value == pytest.approx(4.0, abs=1e-9)
        assert classify(table) == SUPRA_QUANTUM


def qubit_joints(state, a_settings, b_settings):
    """Oracle: correlations of +-1-spectrum spin observables on a 2x2 state.

    Observables are Bloch-direction spin operators, so the outcomes are
    always +-1; the expectation of the product is <psi| A (x) B |psi>.
    """
    pauli = (
        np.array([[0, 1], [1, 0]], dtype=complex),
        np.array([[0, -1j], [1j, 0]], dtype=complex),
        np.array([[1, 0], [0, -1]], dtype=complex),
    )

    def spin(direction):
        return sum(n * p for n, p in zip(direction, pauli))

    joints = np.empty((2, 2))
    for i, a_dir in enumerate(a_settings):
        for j, b_dir in enumerate(b_settings):
            op = np.kron(spin(a_dir), spin(b_dir))
            value = float(np.real(np.conj(state) @ op @ state))
            joints[i, j] = min(max(value, -1.0), 1.0)
    return joints


def random_unit_vectors(rng, count):
    v = rng.normal(size=(count, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def test_tensor_model_correlations_respect_the_quantum_ceiling():
    with criterion(
        "10,000 random two-by-two tensor states stay within 2*sqrt(2) + 1e-9"
    ):
        rng = np.random.default_rng(2718281)
        for _ in range(10_000):
            amplitudes = rng.normal(size=4) + 1j * rng.normal(size=4)
            state = amplitudes / np.linalg.norm(amplitudes)
            directions = random_unit_vectors(rng, 4)
            joints = qubit_joints(state, directions[:2], directions[2:])
            assert bell_value_all_forms(joints_table(joints)) <= TSIRELSON_BOUND + 1e-9

    with criterion("a tuned tensor configuration reaches at least 2.828"):
        state = np.array([1.0, 0.0, 0.0, 1.0], dtype=complex) / math.sqrt(2.0)
        s = 1.0 / math.sqrt(2.0)
        a_settings = [(0.0, 0.0, 1.0), (1.0, 0.0, 0.0)]
        b_settings = [(s, 0.0, s), (-s, 0.0, s)]
        joints = qubit_joints(state, a_settings, b_settings)
        assert bell_value_all_forms(joints_table(joints)) >= 2.828


def test_rating_fixture_reproduces_the_published_rankings():
    with criterion("dog tops the bone context at 6.81/15.84 within 1e-9"):
        table = load_ratings(fixture_path("pet_context_ratings.tsv"))
        bone = "The pet is chewing a bone"
        ranking = rank_exemplars(table, bone)
        assert ranking[0] == "dog"
        dist = context_distribution(table, bone)
        assert dist.probability("dog") == pytest.approx(6.81 / 15.84, abs=1e-9)

    with criterion("spider then snake top the weird-person context"):
        weird = next(c for c in table.contexts if "weird" in c)
        assert rank_exemplars(table, weird)[:2] == ["spider", "snake"]


def test_combined_concept_boosts_the_shared_exemplar():
    with criterion("combined guppy marginal is 0.25 against singles of 0.1"):
        pets = load_ratings(fixture_path("petfish_pet_ratings.tsv"))
        fish = load_ratings(fixture_path("petfish_fish_ratings.tsv"))
        relation = load_relation(fixture_path("pet_fish_pairs.tsv"))
        dist_a = context_distribution(pets, pets.contexts[0])
        dist_b = context_distribution(fish, fish.contexts[0])
        state = combine(dist_a, dist_b, relation)
        combined = marginal(state, "A").probability("guppy")
        assert combined == pytest.approx(0.25, abs=1e-12)
        assert combined > dist_a.probability("guppy") == pytest.approx(0.1)
        gap = combined - max(dist_a.probability("guppy"), dist_b.probability("guppy"))
        assert gap == pytest.approx(0.15, abs=1e-12)


def test_word_order_splits_otherwise_identical_sentences():
    with criterion("bag-of-words ties the reversed sentence, order splits it"):
        matrix = build_matrix(load_corpus(fixture_path("toy_corpus.txt")))
        forward = "mary hits john".split()
        reverse = "john hits mary".split()
        assert np.array_equal(
            bow_vector(forward, matrix.terms), bow_vector(reverse, matrix.terms)
        )
        assert not np.array_equal(
            order_representation(forward, matrix.terms),
            order_representation(reverse, matrix.terms),
        )

    with criterion("full-rank truncation reconstructs count matrices to 1e-9"):
        for m in (
            matrix,
            TermDocMatrix(("x", "y"), ("d1", "d2"), np.array([[1, 2], [2, 4]])),
        ):
            space = svd_truncate(m, min(len(m.terms), len(m.docs)))
            error = np.linalg.norm(space.reconstruct() - m.counts)
            assert error <= 1e-9
