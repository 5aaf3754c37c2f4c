import random

import pytest
from hypothesis import given, strategies as st

from braidcert.errors import ParseError
from braidcert.words import (
    complexity,
    cyclic_reduce,
    format_toy_word,
    is_reduced,
    parse_inv_word,
    parse_toy_word,
    reduce_involutive,
    toy_normal_form,
    toy_switch_feasible,
    toy_switch_lower_bound,
)

letters = st.integers(min_value=1, max_value=5)
inv_words = st.lists(letters, max_size=40).map(tuple)


def naive_random_order_reduce(word, rng):
    """Oracle: cancel a randomly chosen adjacent equal pair until none remain."""
    word = list(word)
    while True:
        pairs = [t for t in range(len(word) - 1) if word[t] == word[t + 1]]
        if not pairs:
            return tuple(word)
        t = rng.choice(pairs)
        del word[t:t + 2]


def test_reduce_examples():
    assert reduce_involutive(["a1", "a1"]) == ()
    assert reduce_involutive(["a1", "a2", "a2", "a1"]) == ()
    # already-reduced parity word: f0 f_{e1} f_{e1+e2} f_{e1}
    w = (0b00, 0b01, 0b11, 0b01)
    assert reduce_involutive(w) == w


def test_reduce_idempotent_and_reduced():
    w = (1, 2, 2, 3, 3, 1, 4)
    r = reduce_involutive(w)
    assert r == (4,)
    assert reduce_involutive(r) == r
    assert is_reduced(r)


def test_cyclic_reduce_examples():
    assert cyclic_reduce(["a1", "a2", "a1"]) == ("a2",)
    assert cyclic_reduce([]) == ()
    assert cyclic_reduce(["a1", "a2", "a3", "a1"]) == ("a2", "a3")


def test_cyclic_reduce_single_letter_kept():
    assert cyclic_reduce(["a1"]) == ("a1",)
    assert cyclic_reduce(["a1", "a2", "a2", "a1", "a1"]) == ("a1",)


def test_complexity_examples():
    assert complexity(list("abcbabca")) == 8
    assert complexity([]) == 0
    assert complexity(["a1", "a2", "a2", "a3"]) == 2


def test_reduction_confluence_randomized():
    rng = random.Random(20240811)
    for _ in range(1000):
        w = tuple(rng.randrange(4) for _ in range(rng.randrange(30)))
        assert naive_random_order_reduce(w, rng) == reduce_involutive(w)


@given(inv_words, inv_words)
def test_complexity_subadditive(u, v):
    assert complexity(u + v) <= complexity(u) + complexity(v)


@given(letters)
def test_square_of_letter_trivial(x):
    assert complexity((x, x)) == 0


@given(inv_words, letters, st.integers(min_value=0, max_value=40))
def test_pair_insertion_invariance(w, x, cut):
    cut = min(cut, len(w))
    padded = w[:cut] + (x, x) + w[cut:]
    assert reduce_involutive(padded) == reduce_involutive(w)


# ---------------------------------------------------------------------------
# Toy model.

def test_toy_normal_form_examples():
    assert toy_normal_form([("a", 2), ("a", -2)]) == ()
    assert toy_normal_form([("b", 2), ("b", 3)]) == (("b", 5),)
    w = parse_toy_word("a^4 b^2 c^4 b^-4")
    assert toy_normal_form(w) == w


def test_toy_normal_form_cascades():
    assert toy_normal_form([("a", 1), ("b", 1), ("b", -1), ("a", -1)]) == ()
    assert toy_normal_form([("a", 1), ("b", 1), ("b", -1), ("a", 2)]) == (("a", 3),)


def test_toy_switch_feasible_examples():
    assert not toy_switch_feasible(parse_toy_word("a b c b a b c a"))
    assert toy_switch_feasible(parse_toy_word("a^4 b^2 c^4 b^-4"))
    assert toy_switch_feasible(())


def test_toy_switch_lower_bound_examples():
    assert toy_switch_lower_bound(parse_toy_word("a^4 b^2 c^4 b^-4")) == 5
    assert toy_switch_lower_bound(parse_toy_word("a^2")) == 1
    assert toy_switch_lower_bound(parse_toy_word("a^6 b^-2")) == 4


toy_syllables = st.lists(
    st.tuples(st.sampled_from("abc"), st.integers(min_value=-5, max_value=5).filter(bool)),
    max_size=12,
).map(tuple)


@given(toy_syllables, st.sampled_from("abc"), st.integers(min_value=1, max_value=4),
       st.integers(min_value=0, max_value=12))
def test_toy_bound_invariant_under_cancelling_insertion(w, g, e, cut):
    cut = min(cut, len(w))
    padded = w[:cut] + ((g, e), (g, -e)) + w[cut:]
    assert toy_switch_lower_bound(padded) == toy_switch_lower_bound(w)


@given(toy_syllables, st.integers(min_value=0, max_value=11))
def test_toy_bound_changes_by_at_most_one_per_switch(w, pos):
    # a switch flips one letter occurrence, moving one syllable exponent by 2
    if not w:
        return
    pos = pos % len(w)
    g, e = w[pos]
    step = -2 if e > 0 else 2
    switched = w[:pos] + ((g, e + step),) + w[pos + 1:]
    assert abs(toy_switch_lower_bound(switched) - toy_switch_lower_bound(w)) <= 1


def test_toy_parsing():
    assert parse_toy_word("a b^-2 c^3") == (("a", 1), ("b", -2), ("c", 3))
    assert format_toy_word((("a", 1), ("b", -2))) == "a b^-2"
    with pytest.raises(ParseError):
        parse_toy_word("d^2")
    with pytest.raises(ParseError):
        parse_toy_word("a^0")
    with pytest.raises(ParseError):
        parse_toy_word("a^x")


def test_inv_word_parsing():
    assert parse_inv_word("x y  z") == ("x", "y", "z")
