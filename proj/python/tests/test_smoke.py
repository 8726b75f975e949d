import cmath
import json

import pytest

import charvar


def test_reduce_trace_golden():
    p = charvar.reduce_trace([1, 2, -3, 1])
    want = charvar.parse_polynomial("t{3}*(t{1}*t{1,2} - t{2}) + t{2,3} - t{1}*t{1,2,3}")
    assert p == want


def test_reduce_trace_matches_matrices():
    w = charvar.parse_word("abAB", 2)
    traces = charvar.random_traces(2, 7)
    got = charvar.reduce_trace(w)(traces)
    assert abs(got - charvar.eval_word(w, 2, 7)) < 1e-10


def test_counts():
    assert len(charvar.generators(4)) == 14
    assert len(charvar.free_relations(4)) == 14
    assert [str(v) for v in charvar.generators(2)] == ["t{1}", "t{2}", "t{1,2}"]


def test_abab_presentation():
    cv = charvar.full_presentation(charvar.parse_presentation("<a,b | abab>"))
    assert sorted(str(p) for p in cv.cutout_relations) == sorted(
        ["t{1,2}^2 - 4", "t{1}*t{1,2}^2 - t{2}*t{1,2} - 2*t{1}", "t{2}*t{1,2}^2 - t{1}*t{1,2} - 2*t{2}"]
    )


def test_json_round_trip():
    g = charvar.parse_snappy("Generators:\n   a,b\nRelators:\n   aabbaaBaB\n   aabbAbAbb\n")[0]
    cv = charvar.full_presentation(g)
    text = charvar.export_ideal(cv, "json", g.relators)
    assert json.loads(text)["rank"] == 2
    back = charvar.import_ideal_json(text)
    assert back.cutout_relations == cv.cutout_relations


def test_whitehead_radical():
    g = charvar.parse_presentation("<a,b | abaBABabABAbabAB>")
    i1 = charvar.cutout_relations(g)
    w = g.relators[0]
    p4 = charvar.reduce_trace([1, 2] + list(w.letters)) - charvar.parse_polynomial("t{1,2}")
    assert not charvar.normal_form(p4, i1).is_zero()
    assert charvar.radical_member(p4, i1)


def test_discrete_faithful_point():
    f = charvar.parse_polynomial(
        "-t{1}*t{2} - 2*t{1,2} + t{1}^2*t{1,2} + t{2}^2*t{1,2} - t{1}*t{2}*t{1,2}^2 + t{1,2}^3"
    )
    assert abs(f({"t{1}": 2, "t{2}": 2, "t{1,2}": 1 + 1j})) < 1e-12


def test_groebner_and_budget():
    x, y = charvar.parse_polynomial("t{1}"), charvar.parse_polynomial("t{2}")
    basis = charvar.groebner_basis([x * y - charvar.TracePolynomial(1), y])
    assert [str(p) for p in basis] == ["1"]
    gens = [charvar.parse_polynomial(s) for s in ["t{1}^2 + t{2} + t{3} - 1", "t{1} + t{2}^2 + t{3} - 1"]]
    with pytest.raises(charvar.GroebnerLimitExceeded):
        charvar.groebner_basis(gens + [charvar.parse_polynomial("t{1} + t{2} + t{3}^2 - 1")], "lex", 1)


def test_numeric():
    assert charvar.check_vanishing(charvar.free_relations(3), 3, 20) == []
    assert len(charvar.check_vanishing([charvar.parse_polynomial("t{1} - 3")], 1, 5)) == 5
    assert charvar.jacobian_independence(3, 1) > 1e-6
    assert charvar.jacobian_independence(3, 1, True) <= 1e-9


def test_psl2():
    assert set(charvar.psl2_generators(2, 3)) == {"t{1}^2", "t{2}^2", "t{1,2}^2", "t{1}*t{2}*t{1,2}"}


def test_errors():
    with pytest.raises(charvar.ParseError):
        charvar.parse_presentation("<a,a | aa>")
    with pytest.raises(ValueError):
        charvar.parse_polynomial("t{1} +")
    assert cmath.isfinite(charvar.eval_word(charvar.FreeWord([1, -2], 2), 2, 0))
