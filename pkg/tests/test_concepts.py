import math

import numpy as np
import pytest

from contextprob.concepts import (
    ContextDistribution,
    RatingTable,
    context_distribution,
    context_state,
    load_ratings,
    parse_ratings,
    rank_exemplars,
    typicality,
)
from contextprob.hilbert import Projector, born_prob
from conftest import (
    CONTEXT_BONE,
    CONTEXT_TAUGHT,
    CONTEXT_WEIRD,
    PET_CONTEXTS,
    PET_RATING_ROWS,
    pet_column,
)


def small_table(ratings, exemplars=("ant", "bee"), contexts=("c1",)):
    return RatingTable(exemplars, contexts, np.array(ratings))


# -------------------------------------------------------------------- parsing


def test_shipped_pet_table_shape(pet_table):
    assert len(pet_table.exemplars) == 14
    assert pet_table.contexts == PET_CONTEXTS


def test_shipped_pet_table_matches_frozen_rows(pet_table):
    for exemplar, row in PET_RATING_ROWS.items():
        for context, value in zip(PET_CONTEXTS, row):
            assert pet_table.rating(exemplar, context) == value


def test_parse_negative_cell_cites_coordinates():
    text = "exemplar\tc1\nant\t0.5\nbee\t-0.1\n"
    with pytest.raises(ValueError, match=r"line 3: negative rating at \('bee', 'c1'\)"):
        parse_ratings(text)


def test_parse_non_numeric_cell_cites_coordinates():
    text = "exemplar\tc1\nant\tmany\n"
    with pytest.raises(ValueError, match=r"line 2: .*\('ant', 'c1'\).*'many'"):
        parse_ratings(text)


def test_parse_duplicate_exemplar_rejected():
    text = "exemplar\tc1\nant\t1\nant\t2\n"
    with pytest.raises(ValueError, match="duplicate exemplar label: 'ant'"):
        parse_ratings(text)


def test_parse_all_zero_column_rejected():
    text = "exemplar\tc1\tc2\nant\t1\t0\nbee\t2\t0\n"
    with pytest.raises(ValueError, match="no mass: 'c2'"):
        parse_ratings(text)


def test_parse_ragged_row_rejected():
    text = "exemplar\tc1\tc2\nant\t1\n"
    with pytest.raises(ValueError, match="line 2: expected 3 fields, got 2"):
        parse_ratings(text)


def test_parse_skips_blank_lines():
    text = "exemplar\tc1\n\nant\t1\n\nbee\t3\n"
    table = parse_ratings(text)
    assert table.exemplars == ("ant", "bee")


def test_load_ratings_prefixes_path_on_error(tmp_path):
    bad = tmp_path / "bad.tsv"
    bad.write_text("exemplar\tc1\nant\t-1\n")
    with pytest.raises(ValueError, match="bad.tsv"):
        load_ratings(bad)


# ------------------------------------------------------- context_distribution


def test_distribution_dog_under_bone_context(pet_table):
    column_sum = sum(pet_column(0))
    dist = context_distribution(pet_table, CONTEXT_BONE)
    assert dist.probability("dog") == pytest.approx(6.81 / column_sum, abs=1e-12)
    assert dist.probability("dog") == pytest.approx(6.81 / 15.84, abs=1e-9)


def test_distribution_single_exemplar_is_certain():
    table = small_table([[2.4]], exemplars=("ant",))
    assert context_distribution(table, "c1").probability("ant") == 1.0


def test_distribution_equal_ratings_split_evenly():
    table = small_table([[3.3], [3.3]])
    dist = context_distribution(table, "c1")
    assert dist.probability("ant") == 0.5
    assert dist.probability("bee") == 0.5


def test_distribution_unknown_context_lists_available(pet_table):
    with pytest.raises(ValueError) as err:
        context_distribution(pet_table, "nope")
    for context in PET_CONTEXTS:
        assert context in str(err.value)


def test_distribution_constructor_validates_sum():
    with pytest.raises(ValueError, match="sum to"):
        ContextDistribution("c", {"a": 0.5, "b": 0.4})


# --------------------------------------------------------------- context_state


def test_state_of_uniform_distribution():
    table = small_table([[1.0], [1.0]])
    state = context_state(table, "c1")
    assert np.allclose(state.amplitudes, [1 / math.sqrt(2)] * 2)


def test_state_amplitude_is_sqrt_probability(pet_table):
    state = context_state(pet_table, CONTEXT_BONE)
    p = typicality(pet_table, CONTEXT_BONE, "dog")
    assert state.amplitude("dog") == pytest.approx(math.sqrt(p), abs=1e-15)


def test_state_of_point_distribution_is_basis_state():
    table = small_table([[1.0], [0.0]])
    state = context_state(table, "c1")
    assert state.amplitude("ant") == 1.0
    assert state.amplitude("bee") == 0.0


def test_state_round_trips_to_distribution(pet_table):
    # Born probabilities of the rank-1 projectors recover the distribution;
    # squaring a square root costs half an ulp, hence the 1e-12 comparison.
    for context in PET_CONTEXTS:
        state = context_state(pet_table, context)
        dist = context_distribution(pet_table, context)
        for exemplar in pet_table.exemplars:
            proj = Projector(state.basis, frozenset({exemplar}))
            assert born_prob(proj, state) == pytest.approx(
                dist.probability(exemplar), abs=1e-12
            )


# ------------------------------------------------------------------ typicality


def test_typicality_spider_under_weird_context(pet_table):
    column_sum = sum(pet_column(2))
    assert typicality(pet_table, CONTEXT_WEIRD, "spider") == pytest.approx(
        5.96 / column_sum, abs=1e-12
    )


def test_typicality_zero_rating_is_zero():
    table = small_table([[1.0], [0.0]])
    assert typicality(table, "c1", "bee") == 0.0


def test_typicality_sums_to_one(pet_table):
    for context in PET_CONTEXTS:
        total = sum(typicality(pet_table, context, x) for x in pet_table.exemplars)
        assert abs(total - 1.0) <= 1e-12


def test_typicality_unknown_exemplar_errors(pet_table):
    with pytest.raises(ValueError, match="unknown exemplar 'unicorn'"):
        typicality(pet_table, CONTEXT_BONE, "unicorn")


# -------------------------------------------------------------- rank_exemplars


def test_ranking_bone_context_puts_dog_first(pet_table):
    assert rank_exemplars(pet_table, CONTEXT_BONE)[0] == "dog"


def test_ranking_weird_context_spider_then_snake(pet_table):
    ranking = rank_exemplars(pet_table, CONTEXT_WEIRD)
    assert ranking[:2] == ["spider", "snake"]


def test_ranking_taught_context_dog_then_parrot(pet_table):
    ranking = rank_exemplars(pet_table, CONTEXT_TAUGHT)
    assert ranking[:2] == ["dog", "parrot"]


def test_ranking_all_equal_is_lexicographic():
    table = RatingTable(("wasp", "ant", "bee"), ("c1",), np.full((3, 1), 2.0))
    assert rank_exemplars(table, "c1") == ["ant", "bee", "wasp"]


def test_ranking_breaks_ties_alphabetically():
    table = RatingTable(("zig", "ant", "top"), ("c1",), np.array([[5.0], [1.0], [5.0]]))
    assert rank_exemplars(table, "c1") == ["top", "zig", "ant"]


# ----------------------------------------------------------------- properties


def test_column_scaling_leaves_distribution_and_ranking_alone(pet_table):
    scaled = pet_table.ratings.copy()
    scaled[:, 2] *= 7.3
    scaled_table = RatingTable(pet_table.exemplars, pet_table.contexts, scaled)
    base = context_distribution(pet_table, CONTEXT_WEIRD)
    dist = context_distribution(scaled_table, CONTEXT_WEIRD)
    for x in pet_table.exemplars:
        assert dist.probability(x) == pytest.approx(base.probability(x), abs=1e-12)
    assert rank_exemplars(scaled_table, CONTEXT_WEIRD) == rank_exemplars(
        pet_table, CONTEXT_WEIRD
    )


def test_ranking_head_matches_raw_column_argmax(pet_table):
    for context in PET_CONTEXTS:
        column = pet_table.column(context)
        best = pet_table.exemplars[int(np.argmax(column))]
        assert rank_exemplars(pet_table, context)[0] == best
