from fractions import Fraction

import pytest

from monores.algebra import (EMPTY_SEQ, IndexSeq, ModuleElement, ModuleTerm,
                             Monomial, Polynomial, VarContext, ZERO_ELEMENT,
                             element_from, lcm_of, one_monomial, seq_compare)
from monores.errors import (ContextError, DegreeError, LabelError,
                            ZeroElementError)


def test_monomial_arithmetic():
    xy = Monomial((1, 1, 0))
    xz = Monomial((1, 0, 1))
    assert xy * xz == Monomial((2, 1, 1))
    assert (xy * xz) / xy == xz
    assert xy.divides(Monomial((2, 1, 0)))
    assert not xy.divides(xz)
    assert xy.degree == 2
    assert one_monomial(3).is_one()
    with pytest.raises(ArithmeticError):
        xy / xz
    with pytest.raises(ValueError):
        Monomial((1, -1))
    with pytest.raises(ContextError):
        xy * Monomial((1, 1))


def test_monomial_format():
    ctx = VarContext(("x", "y", "z"))
    assert Monomial((2, 1, 0)).format(ctx) == "x^2*y"
    assert one_monomial(3).format(ctx) == "1"
    with pytest.raises(ContextError):
        Monomial((1, 0)).format(ctx)


def test_lcm():
    assert lcm_of(Monomial((1, 1, 0)), Monomial((1, 0, 1))) == Monomial((1, 1, 1))
    assert lcm_of(Monomial((2, 0))) == Monomial((2, 0))
    with pytest.raises(ValueError):
        lcm_of()


def test_var_context():
    ctx = VarContext(("x", "y"))
    assert ctx.n == 2
    assert ctx.index("y") == 1
    with pytest.raises(ContextError):
        ctx.index("w")
    with pytest.raises(ContextError):
        VarContext(("x", "x"))


def test_index_seq():
    k = IndexSeq((1, 3, 5))
    assert len(k) == 3
    assert k[0] == 1 and k[-1] == 5
    assert 3 in k and 2 not in k
    assert k.drop(2) == IndexSeq((1, 5))
    assert k.insert(2) == IndexSeq((1, 2, 3, 5))
    assert k.above(3) == IndexSeq((5,))
    assert k.below(3) == IndexSeq((1,))
    assert repr(k) == "(1,3,5)"
    assert len(EMPTY_SEQ) == 0
    with pytest.raises(LabelError):
        IndexSeq((2, 2))
    with pytest.raises(LabelError):
        IndexSeq((3, 1))
    with pytest.raises(LabelError):
        IndexSeq((0, 1))
    with pytest.raises(LabelError):
        k.insert(3)
    with pytest.raises(LabelError):
        k.drop(4)


def test_seq_compare():
    assert seq_compare(IndexSeq((1, 2)), IndexSeq((1, 3))) == -1
    assert seq_compare(IndexSeq((2,)), IndexSeq((1, 9))) == 1
    assert seq_compare(IndexSeq((1,)), IndexSeq((1, 2))) == -1
    assert seq_compare(IndexSeq((1, 2)), IndexSeq((1, 2))) == 0


def test_module_element_canonical():
    x = Monomial((1, 0))
    y = Monomial((0, 1))
    u = element_from([(1, x, IndexSeq((2,))), (2, y, IndexSeq((1,))),
                      (1, x, IndexSeq((2,)))])
    # duplicates combine, then descending structural sort
    assert [(t.coeff, t.mono, t.label) for t in u.terms] == [
        (Fraction(2), x, IndexSeq((2,))),
        (Fraction(2), y, IndexSeq((1,))),
    ]
    assert u - u == ZERO_ELEMENT
    assert (u - u).is_zero()
    assert u.degree == 1
    assert u.labels() == {IndexSeq((1,)), IndexSeq((2,))}
    assert -u == u.scale(Fraction(-1))
    assert u.term_mul(Fraction(1, 2), x) == element_from(
        [(1, x * x, IndexSeq((2,))), (1, x * y, IndexSeq((1,)))])
    with pytest.raises(ZeroElementError):
        ZERO_ELEMENT.degree
    with pytest.raises(DegreeError):
        element_from([(1, x, IndexSeq((1,))), (1, x, IndexSeq((1, 2)))])


def test_module_element_map_labels():
    u = element_from([(1, Monomial((1,)), IndexSeq((2,)))])
    v = u.map_labels(lambda l: IndexSeq((l[0], l[0] + 1)))
    assert v == element_from([(1, Monomial((1,)), IndexSeq((2, 3)))])


def test_polynomial():
    x = Monomial((1, 0))
    y = Monomial((0, 1))
    p = Polynomial()
    p.add_term(Fraction(2), x)
    p.add_term(Fraction(1), y)
    p.add_term(Fraction(-2), x)
    assert p.items() == [(y, Fraction(1))]
    u = element_from([(1, x, IndexSeq((1,)))])
    assert p.apply_to(u) == element_from([(1, x * y, IndexSeq((1,)))])
    assert Polynomial().is_zero()
    assert Polynomial({x: 1}) == Polynomial({x: Fraction(1)})
