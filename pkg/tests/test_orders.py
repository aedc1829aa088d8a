from fractions import Fraction

import pytest

from monores.algebra import (EMPTY_SEQ, IndexSeq, Monomial, element_from,
                             one_monomial)
from monores.errors import DegreeError, LabelError, ZeroElementError
from monores.orders import (BaseOrder, SchreyerOrder, TaylorOrder,
                            leading_term, term_compare)

X2 = Monomial((2, 0))
XY = Monomial((1, 1))
Y2 = Monomial((0, 2))


def test_base_order_kinds():
    xz = Monomial((1, 0, 1))
    y2 = Monomial((0, 2, 0))
    assert BaseOrder("lex").cmp_mono(xz, y2) == 1
    assert BaseOrder("grlex").cmp_mono(xz, y2) == 1
    assert BaseOrder("grevlex").cmp_mono(xz, y2) == -1
    # graded kinds sort by total degree first
    x = Monomial((1, 0, 0))
    y3 = Monomial((0, 3, 0))
    assert BaseOrder("lex").cmp_mono(x, y3) == 1
    assert BaseOrder("grlex").cmp_mono(x, y3) == -1
    assert BaseOrder("grevlex").cmp_mono(x, y3) == -1
    assert BaseOrder().cmp_mono(x, x) == 0
    with pytest.raises(ValueError):
        BaseOrder("degrevlex")


def test_base_order_permutation():
    x = Monomial((1, 0))
    y = Monomial((0, 1))
    assert BaseOrder("lex").cmp_mono(x, y) == 1
    assert BaseOrder("lex", (1, 0)).cmp_mono(x, y) == -1
    with pytest.raises(ValueError):
        BaseOrder("lex", (0, 2))


def test_base_order_single_component():
    with pytest.raises(LabelError):
        BaseOrder().compare(X2, IndexSeq((1,)), XY, IndexSeq((2,)))
    assert BaseOrder().compare(X2, IndexSeq((1,)), XY, IndexSeq((1,))) == 1


def test_taylor_order_base_level():
    order = TaylorOrder((X2, XY, Y2))
    x = Monomial((1, 0))
    one = one_monomial(2)
    # x*m_1 = x^3 beats 1*m_2 = xy under lex
    assert order.compare(x, IndexSeq((1,)), one, IndexSeq((2,))) == 1
    with pytest.raises(DegreeError):
        order.compare(x, IndexSeq((1,)), one, IndexSeq((1, 2)))
    with pytest.raises(LabelError):
        order.multidegree(IndexSeq((4,)))


def test_taylor_order_tie_breaks():
    order = TaylorOrder((X2, XY, Y2))
    rorder = TaylorOrder((X2, XY, Y2), reverse=True)
    x = Monomial((1, 0))
    y = Monomial((0, 1))
    # x v_(2) and y v_(1) agree at the base level (both give x^2 y)
    assert order.compare(x, IndexSeq((2,)), y, IndexSeq((1,))) == 1
    assert rorder.compare(x, IndexSeq((2,)), y, IndexSeq((1,))) == -1
    # deeper labels: v_(1,3) and x v_(2,3) both sit over x^2 y^2, so the
    # shared last entry passes and the full suffix (prefix in reverse) decides
    one = one_monomial(2)
    assert order.compare(one, IndexSeq((1, 3)), x, IndexSeq((2, 3))) == -1
    assert rorder.compare(one, IndexSeq((1, 3)), x, IndexSeq((2, 3))) == 1
    assert order.compare(one, IndexSeq((1, 2)), one, IndexSeq((1, 2))) == 0


def test_taylor_order_leading_terms():
    # delta v_(1,2) over M = {x^2, xy} is x v_(2) - y v_(1)
    mons = (X2, XY)
    x = Monomial((1, 0))
    y = Monomial((0, 1))
    d12 = element_from([(1, x, IndexSeq((2,))), (-1, y, IndexSeq((1,)))])
    lt = leading_term(d12, TaylorOrder(mons))
    assert (lt.coeff, lt.mono, lt.label) == (Fraction(1), x, IndexSeq((2,)))
    lt_r = leading_term(d12, TaylorOrder(mons, reverse=True))
    assert (lt_r.coeff, lt_r.mono, lt_r.label) == (Fraction(-1), y, IndexSeq((1,)))
    with pytest.raises(ZeroElementError):
        leading_term(element_from([]), TaylorOrder(mons))


def test_schreyer_order():
    g1 = element_from([(1, X2, EMPTY_SEQ)])
    g2 = element_from([(1, XY, EMPTY_SEQ)])
    order = SchreyerOrder((g1, g2), BaseOrder())
    x = Monomial((1, 0))
    y = Monomial((0, 1))
    one = one_monomial(2)
    # x*lt(g2) = y*lt(g1) = x^2 y; the later generator loses the tie
    assert order.compare(x, IndexSeq((2,)), y, IndexSeq((1,))) == -1
    assert order.compare(one, IndexSeq((2,)), one, IndexSeq((1,))) == -1
    assert order.compare(x, IndexSeq((1,)), x, IndexSeq((1,))) == 0
    with pytest.raises(LabelError):
        order.compare(x, IndexSeq((1, 2)), y, IndexSeq((1,)))
    with pytest.raises(IndexError):
        order.compare(x, IndexSeq((3,)), y, IndexSeq((1,)))


def test_term_compare_helper():
    order = TaylorOrder((X2, XY))
    u = element_from([(1, Monomial((1, 0)), IndexSeq((2,)))])
    v = element_from([(1, Monomial((0, 1)), IndexSeq((1,)))])
    assert term_compare(order, u.terms[0], v.terms[0]) == 1
