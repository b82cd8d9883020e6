import random

import pytest
from oracles import SympyOracle

from fpgroups import corpus
from fpgroups.bruteforce import max_transitive_degree, order_by_search
from fpgroups.enumerator import CosetTable, enumerate_cosets, verify_table
from fpgroups.parser import parse_presentation
from fpgroups.randomized import SMALL_GROUPS, random_small_presentation


@pytest.mark.parametrize("text, order", [
    ("< a | a^3 >", 3),
    ("< a, b | a^2, b^2, (a b)^3 >", 6),
    ("< a | a >", 1),
    ("< | >", 1),
    ("< a, b | a^3, b^2, a b a b >", 6),
    ("< a, b | a^4, a^2 b^-2, b^-1 a b a >", 8),
])
def test_orders(text, order):
    p = parse_presentation(text)
    res = enumerate_cosets(p)
    assert res.completed and res.index == order
    assert res.outcome == f"completed({order})"
    assert verify_table(res.table, p)


def test_m_displayed_is_trivial():
    p = corpus.presentation("m_displayed.grp")
    res = enumerate_cosets(p)
    assert res.outcome == "completed(1)"
    assert verify_table(res.table, p)


def test_subgroup_index():
    p = parse_presentation("< a, b | a^2, b^2, (a b)^3 >")
    res = enumerate_cosets(p, [p.word("a")])
    assert res.completed and res.index == 3
    assert verify_table(res.table, p, [p.word("a")])
    assert not verify_table(res.table, p, [p.word("b")])


def test_free_group_exhausts():
    p = parse_presentation("< a, b | >")
    res = enumerate_cosets(p, max_cosets=500)
    assert not res.completed and res.index is None
    assert res.outcome.startswith("exhausted(")


def test_infinite_cyclic_exhausts():
    res = enumerate_cosets(parse_presentation("< a, b | b >"), max_cosets=200)
    assert not res.completed


def test_corrupted_entry_fails_verification():
    p = parse_presentation("< a, b | a^2, b^2, (a b)^3 >")
    t = enumerate_cosets(p).table.compact()
    assert verify_table(t, p)
    rng = random.Random(0)
    for _ in range(20):
        bad = t.compact()
        c = rng.randrange(len(bad.rows))
        x = rng.randrange(bad.width)
        bad.rows[c][x] = (bad.rows[c][x] + 1 + rng.randrange(len(bad.rows) - 1)) % len(bad.rows)
        assert not verify_table(bad, p)


def test_incomplete_table_fails_verification():
    p = parse_presentation("< a | a^3 >")
    t = CosetTable(1)
    assert not verify_table(t, p)


def test_determinism():
    p = corpus.presentation("m_raw.grp")
    a, b = enumerate_cosets(p), enumerate_cosets(p)
    assert a.stats == b.stats
    assert a.table.dump(p.generators) == b.table.dump(p.generators)


def test_dump_format():
    p = parse_presentation("< a | a^2 >")
    text = enumerate_cosets(p).table.compact().dump(p.generators)
    assert text == "# cosets 2\n# coset a a^-1\n0 1 1\n1 0 0\n"


def test_max_live_limit():
    p = parse_presentation("< a | a^50 >")
    assert not enumerate_cosets(p, max_live=10).completed
    assert enumerate_cosets(p).index == 50


@pytest.mark.parametrize("text, order", SMALL_GROUPS)
def test_small_suite_against_bruteforce_and_sympy(text, order):
    p = parse_presentation(text)
    assert order_by_search(p) == order
    assert SympyOracle(p.alphabet).order(p) == order
    assert enumerate_cosets(p).index == order


def test_random_small_presentations_against_bruteforce():
    rng = random.Random(42)
    checked = 0
    for _ in range(400):
        p = random_small_presentation(rng)
        res = enumerate_cosets(p, max_cosets=50_000)
        assert res.completed
        oracle = order_by_search(p)
        assert oracle is not None
        assert res.index == oracle
        assert verify_table(res.table, p)
        checked += 1
    assert checked == 400


def test_bruteforce_bound():
    assert order_by_search(parse_presentation("< a | a^13 >")) is None
    assert max_transitive_degree(parse_presentation("< a | a^20 >"), 5) == 5
    # outside the precondition the search reports a proper quotient
    assert order_by_search(parse_presentation("< a | a^20 >")) == 10


def test_quotients_against_sympy():
    q = corpus.quotients()[0]
    p = corpus.presentation(q.target)
    p = p.with_relators(p.relators + q.extra)
    assert enumerate_cosets(p).index == SympyOracle(p.alphabet).order(p) == q.order
