import random

from monores.algebra import Monomial, VarContext
from monores.selftest import (homotopy_check, random_monomial_set,
                              run_selftest, sdr_check, splitting_check)
from monores.serialize import complex_from_dict, complex_to_dict
from monores.taylor import build_taylor


def squarefree():
    ctx = VarContext(("x", "y", "z"))
    mons = [Monomial((1, 1, 0)), Monomial((1, 0, 1)), Monomial((0, 1, 1))]
    return build_taylor(ctx, mons)


def test_checks_pass_on_good_complex():
    T = squarefree()
    assert homotopy_check(T, "forward") is None
    assert homotopy_check(T, "reverse") is None
    assert splitting_check(T, "forward") is None
    assert splitting_check(T, "reverse") is None
    assert sdr_check(T) is None


def test_homotopy_check_catches_corruption():
    data = complex_to_dict(squarefree())
    for rec in data["differential"]:
        if rec["from"] == [1, 2]:
            rec["terms"][0]["coeff_num"] *= -1
    bad, _ = complex_from_dict(data)
    message = homotopy_check(bad, "forward")
    assert message is not None
    assert "forward" in message
    assert splitting_check(bad, "forward") is not None


def test_random_monomial_set_bounds():
    rng = random.Random(4)
    for _ in range(50):
        context, monomials = random_monomial_set(rng, 5, 3, 4)
        assert 1 <= context.n <= 3
        assert 1 <= len(monomials) <= 5
        assert len(set(monomials)) == len(monomials)
        for m in monomials:
            assert not m.is_one()
            assert all(e <= 4 for e in m.exps)


def test_run_selftest_small():
    lines = []
    assert run_selftest(4, 4, 3, 3, seed=9, log=lines.append)
    assert lines == ["selftest: 4 trials passed (seed 9)"]
