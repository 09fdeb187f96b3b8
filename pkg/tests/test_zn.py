import pytest
from hypothesis import given, strategies as st

from zerosum import DomainError, ParseError, ResidueSequence, bar, format_sequence, parse_sequence, scale, sums
from zerosum.normalizer import units


def seq(n, counts):
    return ResidueSequence.from_counts(n, counts)


@st.composite
def sequences(draw, max_n=15, max_len=10):
    n = draw(st.integers(2, max_n))
    terms = draw(st.lists(st.integers(0, n - 1), max_size=max_len))
    return ResidueSequence.from_terms(n, terms)


@pytest.mark.parametrize(
    "text, n, counts",
    [
        ("n=5: 1,3", 5, {1: 1, 3: 1}),
        ("n=5: 3,3,3,3", 5, {3: 4}),
        ("n=7: 8,1", 7, {1: 2}),
        ("n=5:", 5, {}),
        ("  n = 6 : 5 , -1 ,0", 6, {5: 2, 0: 1}),
    ],
)
def test_parse(text, n, counts):
    assert parse_sequence(text) == seq(n, counts)


def test_parse_order_irrelevant():
    assert parse_sequence("n=9: 4,1,4,2") == parse_sequence("n=9: 2,4,1,4")


@pytest.mark.parametrize("text, token", [("n=5: 1,,2", ""), ("n=5: 1,a", "a"), ("n=x: 1", "x"), ("5: 1", "5: 1")])
def test_parse_errors_name_token(text, token):
    with pytest.raises(ParseError) as info:
        parse_sequence(text)
    assert info.value.token == token


@pytest.mark.parametrize("text", ["n=1: 0", "n=0:"])
def test_parse_small_modulus(text):
    with pytest.raises(DomainError):
        parse_sequence(text)


def test_format_is_ascending_expanded():
    assert format_sequence(seq(7, {5: 1, 1: 2})) == "n=7: 1,1,5"
    assert format_sequence(seq(7, {})) == "n=7:"


@pytest.mark.parametrize("value, n, expected", [(7, 5, 2), (0, 5, 5), (4, 5, 4), (-1, 5, 4), (10, 5, 5)])
def test_bar(value, n, expected):
    assert bar(value, n) == expected


def test_bar_is_bijection_onto_interval():
    for n in range(2, 30):
        assert sorted(bar(a, n) for a in range(n)) == list(range(1, n + 1))


@pytest.mark.parametrize(
    "counts, g, expected",
    [({1: 1, 3: 1}, 2, {2: 1, 1: 1}), ({1: 1, 3: 1}, 1, {1: 1, 3: 1}), ({3: 4}, 2, {1: 4})],
)
def test_scale(counts, g, expected):
    assert scale(seq(5, counts), g) == seq(5, expected)


def test_scale_rejects_non_unit():
    with pytest.raises(DomainError):
        scale(seq(6, {1: 2}), 2)


@pytest.mark.parametrize(
    "counts, expected", [({1: 1, 3: 1}, (4, 4)), ({2: 2}, (4, 4)), ({3: 4}, (2, 12)), ({}, (0, 0))]
)
def test_sums(counts, expected):
    assert sums(seq(5, counts)) == expected


def test_equality_ignores_construction_order():
    assert ResidueSequence.from_terms(5, [3, 1, 3]) == ResidueSequence.from_terms(5, [3, 3, 1])
    assert hash(ResidueSequence.from_terms(5, [3, 1, 3])) == hash(ResidueSequence.from_terms(5, [1, 3, 3]))


def test_rejects_bad_tables():
    with pytest.raises(DomainError):
        ResidueSequence(5, ((1, 0),))
    with pytest.raises(DomainError):
        ResidueSequence(5, ((3, 1), (1, 1)))
    with pytest.raises(DomainError):
        ResidueSequence(5, ((5, 1),))


def test_divides():
    S = seq(7, {1: 3, 2: 1})
    assert seq(7, {1: 2}).divides(S)
    assert not seq(7, {1: 4}).divides(S)
    assert not seq(5, {1: 1}).divides(S)


@given(sequences())
def test_length_is_total_multiplicity(S):
    assert S.length == len(S.terms) == sum(S.multiplicity.values())
    assert all(m >= 1 for m in S.multiplicity.values())


@given(sequences(), st.data())
def test_scale_roundtrip(S, data):
    g = data.draw(st.sampled_from(units(S.n) or [1]))
    g_inv = pow(g, -1, S.n)
    assert scale(scale(S, g), g_inv) == S
    assert scale(S, g).length == S.length


@given(sequences(), st.data())
def test_scale_multiplies_sigma(S, data):
    g = data.draw(st.sampled_from(units(S.n) or [1]))
    assert sums(scale(S, g))[0] == (g * sums(S)[0]) % S.n


@given(sequences())
def test_sigma_bar_congruent_to_sigma(S):
    sigma_mod, sigma_bar = sums(S)
    assert sigma_bar % S.n == sigma_mod


@given(sequences())
def test_format_parse_roundtrip(S):
    assert parse_sequence(format_sequence(S)) == S
