import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import SympyOracle

from fpgroups.parser import parse_word
from fpgroups.word import (
    Alphabet,
    CyclicSubstitutionError,
    IncompatibleAlphabetsError,
    Word,
    commutator,
    cyclic_reduce,
    format_word,
    invert,
    multiply,
    reduce,
    substitute,
)

AB = Alphabet("a b c d e f g h k p q x y".split())


def w(text, alphabet=AB):
    return parse_word(text, alphabet)


codes = st.lists(st.integers(1, len(AB)).flatmap(lambda i: st.sampled_from([i, -i])), max_size=30)
raw_words = codes.map(lambda c: Word.raw(AB, c))
words = codes.map(lambda c: Word(AB, c))


@pytest.mark.parametrize("text, expected", [
    ("a a^-1", "1"),
    ("a b b^-1 a", "a^2"),
    ("a f", "a f"),
])
def test_reduce_examples(text, expected):
    assert format_word(reduce(w(text))) == expected


@pytest.mark.parametrize("u, v, expected", [
    ("a", "a^-1", "1"),
    ("a b", "b^-1 c", "a c"),
    ("c q", "d^-1", "c q d^-1"),
])
def test_multiply_examples(u, v, expected):
    assert multiply(w(u), w(v)) == w(expected)


@pytest.mark.parametrize("text, expected", [
    ("a b", "b^-1 a^-1"),
    ("1", "1"),
    ("a q a^-1 d^-1", "d a q^-1 a^-1"),
])
def test_invert_examples(text, expected):
    assert invert(w(text)) == w(expected)


def test_commutator_convention():
    assert commutator(w("a"), w("q")) == w("a q a^-1 q^-1")
    # with d = c q the relator a q a^-1 d^-1 reads [a,q] = c
    relator = substitute(w("a q a^-1 d^-1"), "d", w("c q"))
    assert relator == commutator(w("a"), w("q")) * ~w("c")
    assert invert(commutator(w("a"), w("b"))) == commutator(w("b"), w("a"))


@given(words)
def test_commutator_with_itself_is_trivial(u):
    assert commutator(u, u).code == ()


@pytest.mark.parametrize("text, g, value, expected", [
    ("a f", "f", "a^-1", "1"),
    ("g", "f", "a^-1", "g"),
    ("a q a^-1 d^-1", "d", "c q", "a q a^-1 q^-1 c^-1"),
])
def test_substitute_examples(text, g, value, expected):
    assert substitute(w(text), g, w(value)) == w(expected)


def test_substitute_rejects_cyclic_definition():
    with pytest.raises(CyclicSubstitutionError):
        substitute(w("a f"), "f", w("f a"))


@settings(max_examples=200)
@given(words, st.sampled_from(AB.names), words)
def test_substitute_matches_sympy(target, g, value):
    value = Word(AB, [x for x in value.code if AB.names[abs(x) - 1] != g])
    ours = substitute(target, g, value)
    oracle = SympyOracle(AB)
    gi = AB.names.index(g)
    theirs = oracle.element(target).eliminate_word(oracle.gens[gi], oracle.element(value), _all=True)
    assert ours.code == oracle.letters(theirs)


def test_cyclic_reduce_examples():
    core, conj = cyclic_reduce(w("a b a^-1"))
    assert (core, conj) == (w("b"), w("a"))
    assert cyclic_reduce(w("1")) == (w("1"), w("1"))
    assert cyclic_reduce(w("c q d^-1")) == (w("c q d^-1"), w("1"))


@given(words)
def test_cyclic_reduce_reconstructs(u):
    core, conj = cyclic_reduce(u)
    assert conj * core * ~conj == u
    assert not (len(core.code) >= 2 and core.code[0] == -core.code[-1])


@given(raw_words)
def test_reduce_idempotent(u):
    r = reduce(u)
    assert reduce(r) == r and r.is_reduced()


@given(raw_words, st.integers(1, len(AB)), st.integers(0, 30))
def test_reduce_confluent_under_insertion(u, g, pos):
    pos = min(pos, len(u.code))
    padded = Word.raw(AB, u.code[:pos] + (g, -g) + u.code[pos:])
    assert reduce(padded) == reduce(u)


@given(words, words)
def test_inverse_antihomomorphism(u, v):
    assert invert(multiply(u, v)) == multiply(invert(v), invert(u))


@given(words, words, words)
def test_multiply_associative(u, v, x):
    assert (u * v) * x == u * (v * x)


@given(words)
def test_agrees_with_sympy_free_group(u):
    oracle = SympyOracle(AB)
    assert oracle.letters(oracle.element(u)) == u.code


def test_incompatible_alphabets():
    other = Alphabet(["a", "b"])
    with pytest.raises(IncompatibleAlphabetsError):
        multiply(w("a"), parse_word("a", other))


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(["a", "a"])
    with pytest.raises(ValueError):
        Alphabet(["1a"])
    with pytest.raises(ValueError):
        Word(Alphabet(["a"]), [2])


def test_format_groups_runs():
    assert format_word(w("a a a b^-1 b^-1 c")) == "a^3 b^-2 c"
    assert str(w("1")) == "1"
