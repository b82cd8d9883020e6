import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fpgroups import corpus
from fpgroups.parser import (
    MAX_DEPTH,
    ParseError,
    parse_presentation,
    parse_proof,
    parse_word,
    serialize_presentation,
    serialize_proof,
)
from fpgroups.verify import fuzz_input
from fpgroups.word import Alphabet, Word, format_word


@pytest.mark.parametrize("text, gens, relators", [
    ("< a | a^3 >", ("a",), ["a^3"]),
    ("< a, e | [a,e] = 1 >", ("a", "e"), ["a e a^-1 e^-1"]),
    ("< a,c,e,g,h,q | [q^-1,c][g^-1,e] = 1 >", ("a", "c", "e", "g", "h", "q"),
     ["q^-1 c q c^-1 g^-1 e g e^-1"]),
    ("< a, q, c | [a,q] = c >", ("a", "q", "c"), ["a q a^-1 q^-1 c^-1"]),
    ("< | >", (), []),
    ("< a, b | >", ("a", "b"), []),
    ("< a | a^2 = a^-1 >", ("a",), ["a^3"]),
])
def test_presentation_examples(text, gens, relators):
    p = parse_presentation(text)
    assert p.generators == gens
    assert [format_word(r) for r in p.relators] == [format_word(parse_word(r, p.alphabet))
                                                   for r in relators]


def test_relation_is_stored_as_lhs_times_inverse_rhs():
    p = parse_presentation("< a, b | a b = b a >")
    assert p.relators[0] == parse_word("a b a^-1 b^-1", p.alphabet)


def test_comments_and_whitespace():
    p = parse_presentation("# header\n<a,b|  # gens\n a^2 ,\n\tb^3 # tail\n>\n")
    assert len(p.relators) == 2


def test_raw_relators_are_kept_unreduced_until_presentation():
    # relators are freely reduced when stored
    p = parse_presentation("< a, b | a b b^-1 >")
    assert p.relators[0] == parse_word("a", p.alphabet)


ALPHA = Alphabet(["a", "b", "e", "x", "y"])


@pytest.mark.parametrize("text, expected", [
    ("1", ()),
    ("(a b)^-2", parse_word("b^-1 a^-1 b^-1 a^-1", ALPHA).code),
    ("e^-1 y x^-1", (-3, 5, -4)),
    ("[a, b]^2", parse_word("a b a^-1 b^-1 a b a^-1 b^-1", ALPHA).code),
    ("a^0 b", (2,)),
])
def test_word_examples(text, expected):
    assert parse_word(text, ALPHA).code == expected


@pytest.mark.parametrize("text, start, end", [
    ("< a | a z >", 8, 9),
    ("< a | a^ >", 9, 10),
    ("< a, a | >", 5, 6),
    ("< a | a", 7, 7),
    ("< a | a > extra", 10, 15),
])
def test_errors_carry_spans(text, start, end):
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    assert (info.value.span.start, info.value.span.end) == (start, end)


def test_spans_are_byte_offsets():
    text = "# éé\n< a | z >"
    with pytest.raises(ParseError) as info:
        parse_presentation(text)
    data = text.encode("utf-8")
    assert data[info.value.span.start:info.value.span.end] == b"z"


def test_invalid_utf8_is_a_spanned_error():
    with pytest.raises(ParseError) as info:
        parse_presentation(b"< a | \xff >")
    assert info.value.span.start == 6


def test_limits():
    with pytest.raises(ParseError):
        parse_word("(" * (MAX_DEPTH + 5) + "a" + ")" * (MAX_DEPTH + 5), ALPHA)
    with pytest.raises(ParseError):
        parse_word("a^99999999999999", ALPHA)
    with pytest.raises(ParseError):
        parse_word("(a b)^900000", ALPHA)


def test_serialize_trivial():
    assert serialize_presentation(parse_presentation("<|>")) == "< | >"


@pytest.mark.parametrize("entry", corpus.manifest(), ids=lambda e: e.path)
def test_corpus_round_trip(entry):
    if entry.kind == "presentation":
        p = corpus.presentation(entry.path)
        text = serialize_presentation(p)
        assert parse_presentation(text) == p
        assert serialize_presentation(parse_presentation(text)) == text
    else:
        script = corpus.proof(entry.path)
        alphabet = corpus.presentation(script.presentation).alphabet
        assert parse_proof(serialize_proof(script), alphabet) == script


def test_serialized_raw_presentation_counts():
    text = serialize_presentation(corpus.presentation("e0_raw.grp"))
    gens, rels = text.strip("<> ").split("|")
    assert len(gens.split(",")) == 11
    assert len(rels.split(",")) == 14


small_names = st.sampled_from(["a", "b", "c"])
letters = st.tuples(small_names, st.integers(-3, 3))
word_texts = st.lists(letters, max_size=6).map(
    lambda ls: " ".join(f"{g}^{n}" for g, n in ls) or "1")


@given(st.lists(word_texts, max_size=5))
def test_round_trip_property(rels):
    text = f"< a, b, c | {', '.join(rels)} >"
    p = parse_presentation(text)
    canon = serialize_presentation(p)
    assert parse_presentation(canon) == p
    assert serialize_presentation(parse_presentation(canon)) == canon


@given(st.binary(max_size=80))
def test_fuzz_bytes_value_or_spanned_error(data):
    try:
        parse_presentation(data)
    except ParseError as exc:
        assert 0 <= exc.span.start <= exc.span.end <= len(data)


def test_fuzz_mutated_corpus():
    rng = random.Random(1)
    seeds = [corpus.read_text(e.path).encode() for e in corpus.manifest() if e.kind == "presentation"]
    for k in range(300):
        data = fuzz_input(rng, seeds, k)
        try:
            parse_presentation(data)
        except ParseError as exc:
            assert 0 <= exc.span.start <= exc.span.end <= len(data)


# proof scripts

PRES = parse_presentation("< a, b | a b a^-1 b^-1, a^2 >")


def test_proof_parse():
    script = parse_proof(
        "presentation demo.grp\n"
        "# comment\n"
        "step s1: a b = b a via conj(1, r1)\n"
        "step s2: a^-1 = a via conj(b, r2^-1), conj(1, s1)^-1\n",
        PRES.alphabet)
    assert script.presentation == "demo.grp"
    assert [s.name for s in script.steps] == ["s1", "s2"]
    f = script.steps[1].factors
    assert f[0].source == 2 and f[0].exponent == -1
    assert f[0].conjugator == Word.generator(PRES.alphabet, "b")
    assert f[1].source == "s1" and f[1].exponent == -1


@pytest.mark.parametrize("text, fragment", [
    ("step s1 a = a", b"step s1 a = a"),
    ("step s1: a = a via conj(1, later)", b"later"),
    ("step s1: a = z", b"z"),
    ("step r3: a = a", b"r3"),
    ("step s: a = a\nstep s: a = a", b"s"),
])
def test_proof_errors(text, fragment):
    with pytest.raises(ParseError) as info:
        parse_proof(text, PRES.alphabet)
    data = text.encode()
    assert data[info.value.span.start:info.value.span.end] == fragment
