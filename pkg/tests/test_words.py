import pytest
from hypothesis import given, strategies as st

from torlen.words import (
    Word,
    WordError,
    cyclic_reduce,
    free_reduce,
    is_cyclically_reduced,
    is_freely_reduced,
    reduce_ints,
    invert_ints,
    substitute,
)

SYMS = ("a", "b", "c")

letters = st.tuples(st.sampled_from(SYMS), st.sampled_from((1, -1)))
words = st.lists(letters, max_size=12).map(lambda ls: Word(tuple(ls)))


def test_from_text_round_trip():
    w = Word.from_text("x y^-1 x_01 x")
    assert w.to_text() == "x y^-1 x_01 x"
    assert Word.from_text(w.to_text()) == w


def test_from_text_rejects_bad_tokens():
    with pytest.raises(WordError):
        Word.from_text("x^2")
    with pytest.raises(WordError):
        Word.from_text("x^-2")


def test_empty_word():
    assert Word.from_text("") == Word.empty()
    assert len(Word.empty()) == 0
    assert not Word.empty()


def test_pow_and_inverse():
    x = Word.gen("x")
    assert x**3 == Word.from_text("x x x")
    assert x**-2 == Word.from_text("x^-1 x^-1")
    assert Word.from_text("x y").inverse() == Word.from_text("y^-1 x^-1")


@given(words)
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert is_freely_reduced(r)
    assert free_reduce(r) == r


@given(words)
def test_word_times_inverse_is_trivial(w):
    assert free_reduce(w * w.inverse()) == Word.empty()
    assert free_reduce(w.inverse() * w) == Word.empty()


@given(words, words)
def test_reduction_is_a_homomorphism(u, v):
    assert free_reduce(u * v) == free_reduce(free_reduce(u) * free_reduce(v))


@given(words)
def test_cyclic_reduce_reassembles(w):
    core, conj = cyclic_reduce(w)
    assert is_cyclically_reduced(core)
    assert free_reduce(conj * core * conj.inverse()) == free_reduce(w)


@given(words)
def test_substitute_commutes_with_reduction(w):
    mapping = {"a": Word.from_text("c c"), "b": Word.empty()}
    assert substitute(w, mapping) == substitute(free_reduce(w), mapping)


def test_substitute_rejects_chained_substitution():
    with pytest.raises(WordError):
        substitute(Word.from_text("a"), {"a": Word.from_text("b"), "b": Word.from_text("a")})


@given(st.lists(st.sampled_from((1, -1, 2, -2)), max_size=10))
def test_int_reduction_matches_word_reduction(ls):
    iw = tuple(ls)
    names = ("a", "b")
    as_word = Word(tuple((names[abs(x) - 1], 1 if x > 0 else -1) for x in iw))
    red = reduce_ints(iw)
    red_word = Word(tuple((names[abs(x) - 1], 1 if x > 0 else -1) for x in red))
    assert red_word == free_reduce(as_word)
    assert reduce_ints(red + invert_ints(red)) == ()
