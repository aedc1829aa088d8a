import random
from fractions import Fraction

import pytest

from monores.algebra import IndexSeq, Monomial, VarContext
from monores.errors import DegreeError
from monores.serialize import complex_from_dict, complex_to_dict
from monores.taylor import build_taylor
from monores.verify import (betti_numbers, check_d_squared, check_exactness,
                            lattice_multidegrees, rational_rank, strand,
                            strand_homology)


def build(names, *rows):
    ctx = VarContext(tuple(names))
    return build_taylor(ctx, [Monomial(tuple(r)) for r in rows])


def seq(*entries):
    return IndexSeq(entries)


SQUAREFREE = build("xyz", (1, 1, 0), (1, 0, 1), (0, 1, 1))
POWERS = build("xy", (2, 0), (1, 1), (0, 2))


def test_rational_rank():
    F = Fraction
    assert rational_rank([[F(1), F(0)], [F(0), F(1)]]) == 2
    assert rational_rank([[F(1), F(2)], [F(2), F(4)]]) == 1
    assert rational_rank([[F(0), F(0)], [F(0), F(0)]]) == 0
    assert rational_rank([]) == 0
    assert rational_rank([[]]) == 0
    assert rational_rank([[F(1), F(0), F(1)], [F(0), F(1), F(1)]]) == 2
    assert rational_rank([[F(1, 2), F(1, 3)], [F(3, 2), F(1)]]) == 1


def test_strand_matrix_full_multidegree():
    mu = Monomial((1, 1, 1))
    m = strand(SQUAREFREE, mu, 2)
    assert m.col_labels == (seq(1, 2), seq(1, 3), seq(2, 3))
    assert m.row_labels == (seq(1), seq(2), seq(3))
    assert m.rows == ((Fraction(-1), Fraction(-1), Fraction(0)),
                      (Fraction(1), Fraction(0), Fraction(-1)),
                      (Fraction(0), Fraction(1), Fraction(1)))
    assert m.rank() == 2
    with pytest.raises(DegreeError):
        strand(SQUAREFREE, mu, 0)
    with pytest.raises(DegreeError):
        strand(SQUAREFREE, mu, 4)


def test_strand_homology():
    full = Monomial((1, 1, 1))
    assert strand_homology(SQUAREFREE, full) == [0, 0, 0, 0]
    edge = Monomial((1, 1, 0))
    assert strand_homology(SQUAREFREE, edge) == [0, 0, 0, 0]
    # x divides no generator, so the strand is v_empty alone
    off = Monomial((1, 0, 0))
    assert strand_homology(SQUAREFREE, off) == [1, 0, 0, 0]


def test_check_d_squared():
    assert check_d_squared(SQUAREFREE)
    assert check_d_squared(POWERS)


def corrupt_sign(complex_):
    data = complex_to_dict(complex_)
    for rec in data["differential"]:
        if rec["from"] == [1, 2]:
            rec["terms"][0]["coeff_num"] *= -1
            break
    rebuilt, _ = complex_from_dict(data)
    return rebuilt


def drop_generator(complex_, entries):
    data = complex_to_dict(complex_)
    target = list(entries)
    for level in data["degrees"]:
        level["generators"] = [g for g in level["generators"]
                               if g["label"] != target]
    data["differential"] = [r for r in data["differential"]
                            if r["from"] != target]
    rebuilt, _ = complex_from_dict(data)
    return rebuilt


def test_sign_corruption_detected():
    bad = corrupt_sign(SQUAREFREE)
    assert not check_d_squared(bad)


def test_illegal_deletion_detected():
    # degree-2 differentials still reference the removed generator, so the
    # strand matrices cannot be formed and the check reports the escape
    bad = drop_generator(SQUAREFREE, (1,))
    report = check_exactness(bad)
    assert not report.ok
    notes = [c.note for c in report.failures()]
    assert any("exits the strand" in note for note in notes)


def test_check_exactness():
    report = check_exactness(SQUAREFREE)
    assert report.ok
    assert len(report.checks) == 4
    assert report.failures() == ()
    assert check_exactness(POWERS).ok
    with pytest.raises(ValueError):
        check_exactness(SQUAREFREE, samples=3)
    sampled = check_exactness(SQUAREFREE, samples=3, rng=random.Random(1))
    assert sampled.ok
    assert len(sampled.checks) == 7


def test_exactness_threads_agree():
    serial = check_exactness(SQUAREFREE, threads=1)
    parallel = check_exactness(SQUAREFREE, threads=4)
    assert serial == parallel


def test_lattice_multidegrees():
    lattice = lattice_multidegrees(SQUAREFREE.monomials)
    assert set(lattice) == {Monomial((1, 1, 0)), Monomial((1, 0, 1)),
                            Monomial((0, 1, 1)), Monomial((1, 1, 1))}
    assert len(lattice) == 4
    assert lattice == sorted(lattice, key=lambda m: m.exps)


def test_betti_numbers():
    assert betti_numbers(SQUAREFREE) == [1, 3, 2]
    assert betti_numbers(POWERS) == [1, 3, 2]
    single = build("xy", (1, 1))
    assert betti_numbers(single) == [1, 1]
