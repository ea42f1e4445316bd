import pytest
from hypothesis import given, strategies as st

from almost_special.errors import InvalidInput
from almost_special.intervals import (
    APART,
    CONTAINS,
    ENTANGLED,
    EQUAL,
    NESTED_IN,
    Interval,
    admissible_kappa,
    even_interior,
    interval,
    kappa,
    parity_intervals,
    relate,
)

import oracles


@st.composite
def intervals(draw, D=12):
    a = draw(st.integers(1, D))
    b = draw(st.integers(a, D))
    return Interval(a, b)


@st.composite
def parity_interval(draw, D=12):
    a = draw(st.integers(1, D))
    b = draw(st.sampled_from(range(a, D + 1, 2)))
    return Interval(a, b)


@pytest.mark.parametrize("I, expected", [((1, 3), 1), ((2, 2), 0), ((2, 4), 0), ((5, 5), 1)])
def test_kappa(I, expected):
    assert kappa(Interval(*I)) == expected


def test_kappa_rejects_mixed_parity():
    with pytest.raises(InvalidInput):
        kappa(Interval(1, 2))


@pytest.mark.parametrize("I, J, tag", [
    ((3, 3), (2, 4), NESTED_IN),
    ((2, 4), (3, 3), CONTAINS),
    ((1, 1), (3, 3), APART),
    ((1, 1), (2, 2), ENTANGLED),
    ((2, 4), (2, 4), EQUAL),
    ((1, 3), (3, 3), ENTANGLED),  # shared right endpoint is not strict nesting
])
def test_relate_examples(I, J, tag):
    assert relate(Interval(*I), Interval(*J)) == tag


def test_relate_entangled_example_against_definition():
    I, J = (1, 1), (2, 2)
    assert not oracles.nested(I, J) and not oracles.nested(J, I) and not oracles.apart(I, J)


@given(intervals(), intervals())
def test_relate_exclusive_and_matches_definitions(I, J):
    tags = {
        EQUAL: I == J,
        NESTED_IN: oracles.nested(I, J),
        CONTAINS: oracles.nested(J, I),
        APART: oracles.apart(I, J),
    }
    hits = [t for t, v in tags.items() if v]
    assert len(hits) <= 1
    assert relate(I, J) == (hits[0] if hits else ENTANGLED)


@given(intervals(), intervals())
def test_relate_symmetry(I, J):
    flip = {NESTED_IN: CONTAINS, CONTAINS: NESTED_IN, APART: APART,
            ENTANGLED: ENTANGLED, EQUAL: EQUAL}
    assert relate(J, I) == flip[relate(I, J)]


@given(parity_interval())
def test_even_interior(I):
    pts = even_interior(I)
    assert len(pts) == (I.b - I.a) // 2
    assert all(x % 2 != I.a % 2 and I.a < x < I.b for x in pts)
    if I.a == I.b:
        assert pts == []


@pytest.mark.parametrize("seq, expected", [
    ([(1, 1), (3, 3)], 1),
    ([(1, 1)], 1),
    ([(1, 1), (4, 4)], None),
    ([(2, 4), (6, 6), (8, 10)], 0),
    ([(1, 1), (3, 4)], None),
])
def test_admissible_kappa(seq, expected):
    assert admissible_kappa([Interval(*x) for x in seq]) == expected


def test_admissible_kappa_needs_items():
    with pytest.raises(InvalidInput):
        admissible_kappa([])


@given(st.integers(0, 1), st.lists(st.tuples(st.integers(0, 3), st.integers(2, 2)), min_size=1, max_size=5))
def test_admissible_sequences_built_by_hand(parity, steps):
    seq = []
    start = 1 + (1 - parity) if parity == 0 else 1
    for width, gap in steps:
        a = start if not seq else seq[-1].b + gap
        seq.append(Interval(a, a + 2 * width))
    k = admissible_kappa(seq)
    assert k == kappa(seq[0]) == kappa(seq[-1]) == parity


def test_interval_coercion_and_rendering():
    assert interval([2, 4]) == Interval(2, 4)
    assert Interval(2, 6).digits() == "23456"
    assert Interval(3, 5).to_json() == [3, 5]
    with pytest.raises(InvalidInput):
        interval((4, 2))
    with pytest.raises(InvalidInput):
        interval("x")


def test_parity_intervals_lex_order():
    items = parity_intervals(4)
    assert items == sorted(items)
    assert [tuple(I) for I in items] == oracles.parity_intervals(4)
    assert parity_intervals(0) == []
