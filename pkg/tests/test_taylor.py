import pytest

from monores.algebra import (EMPTY_SEQ, IndexSeq, Monomial, VarContext,
                             element_from, one_monomial)
from monores.errors import (CapacityError, ContextError, DegreeError,
                            DuplicateError, LabelError)
from monores.taylor import FreeComplex, build_taylor, delta_set


def squarefree_fixture():
    ctx = VarContext(("x", "y", "z"))
    mons = [Monomial((1, 1, 0)), Monomial((1, 0, 1)), Monomial((0, 1, 1))]
    return ctx, mons, build_taylor(ctx, mons)


def test_ranks_and_labels():
    _, _, T = squarefree_fixture()
    assert T.ranks() == (1, 3, 3, 1)
    assert T.max_degree == 3
    assert T.labels(0) == (EMPTY_SEQ,)
    assert T.labels(2) == (IndexSeq((1, 2)), IndexSeq((1, 3)), IndexSeq((2, 3)))
    assert T.has_label(IndexSeq((1, 2, 3)))
    assert not T.has_label(IndexSeq((4,)))
    assert len(list(T.all_labels())) == 8
    with pytest.raises(DegreeError):
        T.labels(4)


def test_multidegrees():
    _, mons, T = squarefree_fixture()
    assert T.multidegree(EMPTY_SEQ) == one_monomial(3)
    assert T.multidegree(IndexSeq((2,))) == mons[1]
    assert T.multidegree(IndexSeq((1, 2))) == Monomial((1, 1, 1))
    assert T.multidegree(IndexSeq((1, 2, 3))) == Monomial((1, 1, 1))
    with pytest.raises(LabelError):
        T.multidegree(IndexSeq((5,)))


def test_differential_values():
    _, mons, T = squarefree_fixture()
    x, y, z = Monomial((1, 0, 0)), Monomial((0, 1, 0)), Monomial((0, 0, 1))
    one = one_monomial(3)
    assert T.diff(IndexSeq((1,))) == element_from([(1, mons[0], EMPTY_SEQ)])
    assert T.diff(IndexSeq((1, 2))) == element_from(
        [(1, y, IndexSeq((2,))), (-1, z, IndexSeq((1,)))])
    assert T.diff(IndexSeq((1, 3))) == element_from(
        [(1, x, IndexSeq((3,))), (-1, z, IndexSeq((1,)))])
    assert T.diff(IndexSeq((2, 3))) == element_from(
        [(1, x, IndexSeq((3,))), (-1, y, IndexSeq((2,)))])
    assert T.diff(IndexSeq((1, 2, 3))) == element_from(
        [(1, one, IndexSeq((2, 3))), (-1, one, IndexSeq((1, 3))),
         (1, one, IndexSeq((1, 2)))])
    assert T.diff(EMPTY_SEQ).is_zero()


def test_delta_on_elements():
    _, _, T = squarefree_fixture()
    u = element_from([(2, Monomial((0, 0, 1)), IndexSeq((1, 2)))])
    expected = T.diff(IndexSeq((1, 2))).term_mul(2, Monomial((0, 0, 1)))
    assert T.delta(u) == expected
    assert T.delta(T.delta(u)).is_zero()
    assert T.delta(element_from([])).is_zero()


def test_delta_squared_everywhere():
    _, _, T = squarefree_fixture()
    for q in range(1, T.max_degree + 1):
        for label in T.labels(q):
            assert T.delta(T.diff(label)).is_zero()


def test_delta_set_arrangements():
    _, _, T = squarefree_fixture()
    labels, elems = delta_set(T, 1)
    assert labels == [IndexSeq((1, 2)), IndexSeq((1, 3)), IndexSeq((2, 3))]
    assert elems == [T.diff(l) for l in labels]
    desc, _ = delta_set(T, 1, descending=True)
    assert desc == list(reversed(labels))
    with pytest.raises(DegreeError):
        delta_set(T, 3)


def test_build_guards():
    ctx = VarContext(("x", "y"))
    with pytest.raises(ContextError):
        build_taylor(ctx, [Monomial((1, 0, 0))])
    with pytest.raises(DuplicateError):
        build_taylor(ctx, [Monomial((1, 0)), Monomial((1, 0))])
    wide = VarContext(tuple(f"x{i}" for i in range(13)))
    mons = [Monomial(tuple(1 if j == i else 0 for j in range(13)))
            for i in range(13)]
    with pytest.raises(CapacityError):
        build_taylor(wide, mons)
    small = build_taylor(ctx, [Monomial((1, 0))])
    assert small.ranks() == (1, 1)


def test_complex_equality():
    ctx, mons, T = squarefree_fixture()
    again = build_taylor(ctx, mons)
    assert T == again
    other = build_taylor(ctx, list(reversed(mons)))
    assert T != other


def test_single_generator():
    ctx = VarContext(("x",))
    T = build_taylor(ctx, [Monomial((3,))])
    assert T.ranks() == (1, 1)
    assert T.diff(IndexSeq((1,))) == element_from([(1, Monomial((3,)), EMPTY_SEQ)])
