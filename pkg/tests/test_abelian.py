import random

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from fpgroups import corpus
from fpgroups.abelian import (
    IntMatrix,
    abelianize,
    exponent_vector,
    in_row_lattice,
    invariant_factors,
    relation_matrix,
    smith_normal_form,
)
from fpgroups.parser import parse_presentation
from fpgroups.verify import M_DEFINITIONS, eliminate_chain


def diagonal(m: IntMatrix) -> list[int]:
    rows, cols = m.shape
    return [m[i, i] for i in range(min(rows, cols))]


def check_snf(m: IntMatrix):
    S, U, V = smith_normal_form(m)
    assert U @ m @ V == S
    assert U.determinant() in (1, -1) and V.determinant() in (1, -1)
    rows, cols = S.shape
    d = diagonal(S)
    for i in range(rows):
        for j in range(cols):
            if i != j:
                assert S[i, j] == 0
    nonzero = [x for x in d if x]
    assert all(x > 0 for x in nonzero)
    assert d[:len(nonzero)] == nonzero
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))
    return S


def test_relation_matrix_examples():
    assert relation_matrix(parse_presentation("< a | a^3 >")).tolist() == [[3]]
    p = parse_presentation("< a, e | [a, e] >")
    assert relation_matrix(p).tolist() == [[0, 0]]
    raw = corpus.presentation("e0_raw.grp")
    row = exponent_vector(raw.word("a q a^-1 d^-1"))
    expected = [0] * len(raw.alphabet)
    expected[raw.alphabet.index("d")] = -1
    expected[raw.alphabet.index("q")] = 1
    assert row == expected


def test_snf_examples():
    assert diagonal(check_snf(IntMatrix([[2, 0], [0, 3]]))) == [1, 6]
    S, U, V = smith_normal_form(IntMatrix.zeros(2, 3))
    assert S == IntMatrix.zeros(2, 3)
    assert U == IntMatrix.identity(2) and V == IntMatrix.identity(3)


def test_snf_of_displayed_e0():
    m = relation_matrix(corpus.presentation("e0_displayed.grp"))
    S = check_snf(m)
    d = diagonal(S)
    assert d == [1, 1, 1, 1, 0, 0]
    assert m.shape == (9, 6)


small_matrices = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c),
                       min_size=r, max_size=r)))


@given(small_matrices)
def test_snf_against_sympy(rows):
    m = IntMatrix(rows)
    S = check_snf(m)
    theirs = sympy_snf(Matrix(rows), domain=ZZ)
    expected = sorted(abs(theirs[i, i]) for i in range(min(theirs.shape)))
    assert sorted(diagonal(S)) == expected


def test_determinant_bareiss():
    rng = random.Random(2)
    for _ in range(50):
        n = rng.randint(1, 5)
        rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
        assert IntMatrix(rows).determinant() == Matrix(rows).det()


@pytest.mark.parametrize("name, text", [
    ("m_displayed.grp", "0"),
    ("e0_displayed.grp", "Z + Z"),
    ("e0_raw.grp", "Z + Z"),
    ("m_raw.grp", "0"),
])
def test_corpus_abelianizations(name, text):
    assert str(abelianize(corpus.presentation(name))) == text


def test_abelianize_examples():
    inv = abelianize(parse_presentation("< a | a^4 >"))
    assert inv.torsion == (4,) and inv.free_rank == 0
    inv = abelianize(parse_presentation("< a, b | a^2, b^4 >"))
    assert inv.torsion == (2, 4) and str(inv) == "Z/2 + Z/4"
    # 2x2 minors 24, -12, -12 and entry gcd 1 give Z/12
    assert abelianize(parse_presentation("< a, b | a^6, b^4, a^3 b^-2 >")).torsion == (12,)
    derived = eliminate_chain(corpus.presentation("m_raw.grp"), M_DEFINITIONS)
    assert abelianize(derived).trivial


def test_invariant_factors():
    assert invariant_factors(IntMatrix([[2, 0], [0, 3]])) == [1, 6]
    assert invariant_factors(IntMatrix([[0, 0]])) == []


def test_row_lattice():
    m = IntMatrix([[2, 0], [0, 3]])
    assert in_row_lattice(m, [4, -3])
    assert not in_row_lattice(m, [1, 0])
    assert in_row_lattice(IntMatrix.zeros(0, 2), [0, 0])
    assert not in_row_lattice(IntMatrix.zeros(0, 2), [0, 1])
