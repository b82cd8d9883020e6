import pytest

from fpgroups.surgery import (
    GluingMatrix,
    NotUnimodularError,
    compose,
    determinant,
    invert,
    is_luttinger,
    log_transform_matrix,
)


def rows(m):
    return [tuple(r) for r in m.rows]


def test_examples():
    assert rows(log_transform_matrix(1)) == [(1, 0, 0), (0, 1, -1), (0, 1, 0)]
    m0 = log_transform_matrix(0)
    assert rows(m0) == [(1, 0, 0), (0, 0, -1), (0, 1, 0)]
    # columns are images: b goes to c, c goes to -b
    assert m0.image("b") == (0, 0, 1)
    assert m0.image("c") == (0, -1, 0)


def cofactor_det(m):
    (a, b, c), (d, e, f), (g, h, i) = m.rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@pytest.mark.parametrize("p", range(-5, 6))
def test_determinant_one(p):
    m = log_transform_matrix(p)
    assert determinant(m) == cofactor_det(m) == 1
    assert m.is_unimodular()
    assert is_luttinger(p) == (p in (1, -1))


def test_algebra():
    m = log_transform_matrix(3)
    assert compose(GluingMatrix.identity(), m) == m
    assert compose(m, GluingMatrix.identity()) == m
    inv = invert(log_transform_matrix(1))
    assert compose(inv, log_transform_matrix(1)) == GluingMatrix.identity()
    for p in range(-5, 6):
        m = log_transform_matrix(p)
        assert compose(invert(m), m) == GluingMatrix.identity() == compose(m, invert(m))


def test_non_unimodular():
    m = GluingMatrix(((2, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert not m.is_unimodular()
    with pytest.raises(NotUnimodularError):
        invert(m)
