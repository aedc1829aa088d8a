import json

import pytest

from monores.algebra import IndexSeq, Monomial, VarContext
from monores.errors import ParseError
from monores.reduction import lyubeznik_filter
from monores.serialize import (IdealInput, complex_from_dict, complex_to_dict,
                               dumps_complex, loads_complex,
                               looks_like_complex, parse_ideal)
from monores.taylor import build_taylor


def test_parse_human_squarefree():
    ideal = parse_ideal("x*y, x*z, y*z")
    assert ideal.context.names == ("x", "y", "z")
    assert [m.exps for m in ideal.monomials] == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]


def test_parse_human_exponents():
    ideal = parse_ideal("x^2, x*y, y^2")
    assert ideal.context.names == ("x", "y")
    assert [m.exps for m in ideal.monomials] == [(2, 0), (1, 1), (0, 2)]


def test_parse_human_variable_order_of_first_appearance():
    ideal = parse_ideal("b*a, c")
    assert ideal.context.names == ("b", "a", "c")
    assert [m.exps for m in ideal.monomials] == [(1, 1, 0), (0, 0, 1)]


def test_parse_human_fixed_variables():
    ideal = parse_ideal("y, x", variables=("x", "y"))
    assert ideal.context.names == ("x", "y")
    assert [m.exps for m in ideal.monomials] == [(0, 1), (1, 0)]
    with pytest.raises(ParseError) as err:
        parse_ideal("x*q", variables=("x", "y"))
    assert "unknown variable 'q'" in str(err.value)
    assert err.value.pos == 2


def test_parse_human_repeated_factor_accumulates():
    ideal = parse_ideal("x*x, x*y^2*x")
    assert [m.exps for m in ideal.monomials] == [(2, 0), (2, 2)]


def test_parse_human_errors():
    with pytest.raises(ParseError) as err:
        parse_ideal("x^0")
    assert "exponent must be positive" in str(err.value)
    assert err.value.pos == 2
    with pytest.raises(ParseError) as err:
        parse_ideal("x^")
    assert "expected an exponent" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_ideal("x*y,, z")
    assert "empty monomial" in str(err.value)
    assert err.value.pos == 4
    with pytest.raises(ParseError) as err:
        parse_ideal("x, %y")
    assert "unexpected character '%'" in str(err.value)
    assert err.value.pos == 3
    with pytest.raises(ParseError):
        parse_ideal("x y")
    with pytest.raises(ParseError) as err:
        parse_ideal("x*y, x*y")
    assert "duplicate monomial" in str(err.value)
    with pytest.raises(ParseError):
        parse_ideal("   ")


def test_parse_json_ideal():
    text = json.dumps({"variables": ["x", "y"],
                       "monomials": [[2, 0], [1, 1], [0, 2]]})
    ideal = parse_ideal(text)
    assert ideal.context.names == ("x", "y")
    assert [m.exps for m in ideal.monomials] == [(2, 0), (1, 1), (0, 2)]


def test_parse_json_order_permutation():
    text = json.dumps({"variables": ["x", "y"],
                       "monomials": [[2, 0], [1, 1], [0, 2]],
                       "order": [3, 1, 2]})
    ideal = parse_ideal(text)
    assert [m.exps for m in ideal.monomials] == [(0, 2), (2, 0), (1, 1)]


def test_parse_json_errors():
    with pytest.raises(ParseError) as err:
        parse_ideal("{not json")
    assert "invalid JSON" in str(err.value)
    assert err.value.pos is not None
    with pytest.raises(ParseError):
        parse_ideal(json.dumps({"variables": "xy", "monomials": []}))
    with pytest.raises(ParseError) as err:
        parse_ideal(json.dumps({"variables": ["x"], "monomials": [[1, 2]]}))
    assert "malformed exponent vector" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_ideal(json.dumps({"variables": ["x"], "monomials": [[-1]]}))
    assert "malformed exponent vector" in str(err.value)
    with pytest.raises(ParseError) as err:
        parse_ideal(json.dumps({"variables": ["x"],
                                "monomials": [[1], [2]],
                                "order": [1, 1]}))
    assert "permutation" in str(err.value)
    with pytest.raises(ParseError):
        parse_ideal(json.dumps({"variables": ["x"], "monomials": [[1], [1]]}))
    with pytest.raises(ParseError):
        parse_ideal(json.dumps(["x"]))


def fixture_complex():
    ctx = VarContext(("x", "y", "z"))
    mons = [Monomial((1, 1, 0)), Monomial((1, 0, 1)), Monomial((0, 1, 1))]
    return build_taylor(ctx, mons)


def test_complex_round_trip():
    T = fixture_complex()
    report = lyubeznik_filter(T, "forward")
    text = dumps_complex(T, report)
    back, eliminated = loads_complex(text)
    assert back == T
    assert back.kind == T.kind
    assert eliminated == ((IndexSeq((2, 3)), 1), (IndexSeq((1, 2, 3)), 1))
    assert dumps_complex(back, report) == text


def test_complex_round_trip_without_report():
    T = fixture_complex()
    back, eliminated = loads_complex(dumps_complex(T))
    assert back == T
    assert eliminated == ()


def test_complex_dict_rejects_degree_gap():
    data = complex_to_dict(fixture_complex())
    data["degrees"] = [lv for lv in data["degrees"] if lv["q"] != 1]
    with pytest.raises(ParseError) as err:
        complex_from_dict(data)
    assert "malformed complex file" in str(err.value)


def test_complex_dict_rejects_missing_keys():
    data = complex_to_dict(fixture_complex())
    del data["variables"]
    with pytest.raises(ParseError):
        complex_from_dict(data)


def test_looks_like_complex():
    T = fixture_complex()
    assert looks_like_complex(dumps_complex(T))
    assert not looks_like_complex("x*y, y*z")
    assert not looks_like_complex('{"variables": ["x"], "monomials": [[1]]}')
    assert not looks_like_complex("[1, 2]")


def test_dumps_deterministic():
    T = fixture_complex()
    assert dumps_complex(T) == dumps_complex(T)
    assert dumps_complex(T).endswith("\n")
