import pytest
from hypothesis import given, strategies as st

from adjminors import (
    AdjacentMinor,
    GridVariable,
    InputError,
    MinorSet,
    binomial_of,
    is_chessboard,
    minor_generators,
    minor_set_from_json,
    minor_set_to_json,
    used_variables,
    variable_space,
    variables_of,
)


def names(vs):
    return {v.name for v in vs}


def test_variables_of_examples():
    assert names(variables_of(AdjacentMinor(1, 2))) == {"x_1_2", "x_1_3", "x_2_2", "x_2_3"}
    assert names(variables_of(AdjacentMinor(1, 1))) == {"x_1_1", "x_1_2", "x_2_1", "x_2_2"}
    assert names(variables_of(AdjacentMinor(2, 3))) == {"x_2_3", "x_2_4", "x_3_3", "x_3_4"}


def test_diagonals():
    m = AdjacentMinor(1, 2)
    assert names(m.main_diagonal()) == {"x_1_2", "x_2_3"}
    assert names(m.anti_diagonal()) == {"x_1_3", "x_2_2"}


@pytest.mark.parametrize(
    "cell, text",
    [
        ((1, 2), "x_1_2*x_2_3 - x_1_3*x_2_2"),
        ((2, 1), "x_2_1*x_3_2 - x_2_2*x_3_1"),
        ((3, 2), "x_3_2*x_4_3 - x_3_3*x_4_2"),
    ],
)
def test_binomial_of_examples(cell, text):
    s = MinorSet.of(5, 5, [cell])
    space = variable_space(s)
    expected = space.parse_binomial(text)
    assert binomial_of(AdjacentMinor(*cell), space) == expected


def test_is_chessboard(cycle4_set):
    assert is_chessboard(cycle4_set)
    assert not is_chessboard(MinorSet.of(2, 3, [(1, 1), (1, 2)]))
    assert not is_chessboard(MinorSet.of(3, 2, [(1, 1), (2, 1)]))
    assert is_chessboard(MinorSet.of(2, 2, []))
    # column distance >= 2 in the same row band is fine
    assert is_chessboard(MinorSet.of(2, 4, [(1, 1), (1, 3)]))


def test_used_variables(cycle4_set):
    assert used_variables(MinorSet.of(2, 2, [])) == ()
    single = used_variables(MinorSet.of(2, 2, [(1, 1)]))
    assert names(single) == {"x_1_1", "x_1_2", "x_2_1", "x_2_2"}
    # brute-force union oracle for the 4-cycle example: 4*4 minus 4 shared
    brute = set()
    for m in cycle4_set:
        brute |= set(m.variables())
    got = used_variables(cycle4_set)
    assert set(got) == brute
    assert len(got) == 12
    assert list(got) == sorted(got)


def test_minor_generators_match_paper(cycle4_set):
    space, gens = minor_generators(cycle4_set)
    expected = {
        space.parse_binomial("x_1_2*x_2_3 - x_1_3*x_2_2"),
        space.parse_binomial("x_2_3*x_3_4 - x_2_4*x_3_3"),
        space.parse_binomial("x_3_2*x_4_3 - x_3_3*x_4_2"),
        space.parse_binomial("x_2_1*x_3_2 - x_2_2*x_3_1"),
    }
    assert set(gens) == expected


def test_json_round_trip(cycle4_set):
    text = minor_set_to_json(cycle4_set)
    assert minor_set_from_json(text) == cycle4_set


def test_json_errors():
    with pytest.raises(InputError, match="line 1"):
        minor_set_from_json("{not json")
    with pytest.raises(InputError, match='missing field "minors"'):
        minor_set_from_json('{"rows": 2, "cols": 2}')
    with pytest.raises(InputError, match="outside"):
        minor_set_from_json('{"rows": 2, "cols": 2, "minors": [[2, 1]]}')
    with pytest.raises(InputError, match="duplicate"):
        minor_set_from_json('{"rows": 3, "cols": 3, "minors": [[1, 1], [1, 1]]}')
    with pytest.raises(InputError, match="at least 2x2"):
        minor_set_from_json('{"rows": 1, "cols": 5, "minors": []}')
    with pytest.raises(InputError, match="entry 0"):
        minor_set_from_json('{"rows": 2, "cols": 2, "minors": [[1]]}')


cells_st = st.frozensets(
    st.tuples(st.integers(1, 4), st.integers(1, 4)), max_size=6
)


@given(cells=cells_st)
def test_chessboard_transposition_invariant(cells):
    s = MinorSet.of(5, 5, sorted(cells))
    assert is_chessboard(s) == is_chessboard(s.transposed())


@given(cells=cells_st)
def test_chessboard_pairs_share_at_most_one_variable(cells):
    s = MinorSet.of(5, 5, sorted(cells))
    if not is_chessboard(s):
        return
    ms = list(s)
    sharing_pairs = 0
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            shared = set(ms[i].variables()) & set(ms[j].variables())
            assert len(shared) <= 1
            sharing_pairs += bool(shared)
    # the union size bookkeeping: every sharing pair collapses one variable
    assert len(used_variables(s)) == 4 * len(ms) - sharing_pairs
