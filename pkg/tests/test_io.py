"""Ideal and poset file parsing, DOT export, and the JSON report schema."""

import json

import pytest

from posetres import (QQ, GF2, IdealParseError, build_lattice, dump_json,
                      format_ideal, format_poset, parse_ideal, parse_poset,
                      report_json)
from posetres.io import (betti_section, dot_lattice, dot_poset, field_name,
                         lattice_section, poset_from_lattice_section)
from posetres.construction import BettiTable

from conftest import CORPUS, data_text, load_ideal


def test_parse_both_monomial_syntaxes():
    r = parse_ideal("vars: x y z\nx^2*y\n[0, 1, 3]\nx*z\n")
    assert [g.exponents for g in r.ideal.generators] == \
        [(2, 1, 0), (0, 1, 3), (1, 0, 1)]
    assert r.removed == ()


def test_parse_reports_minimization():
    r = parse_ideal("vars: x y\nx\nx*y\ny^2\n")
    assert [g.exponents for g in r.ideal.generators] == [(1, 0), (0, 2)]
    assert r.removed == ("x*y",)


def test_parse_skips_comments_and_blanks():
    r = parse_ideal("# header\n\nvars: x  # trailing\n\nx^2  # the gen\n")
    assert [g.exponents for g in r.ideal.generators] == [(2,)]


def test_parse_errors_carry_line_and_column():
    cases = [
        ("", "empty file"),
        ("gens first\n", "expected `vars:"),
        ("vars:\n", "no variables"),
        ("vars: x 2y\n", "bad variable name"),
        ("vars: x x\n", "duplicate variable"),
        ("vars: x\nx^-2\n", "negative exponent"),
        ("vars: x\ny\n", "undeclared variable"),
        ("vars: x\nx+1\n", "bad factor"),
        ("vars: x y\n[1]\n", "expected 2 exponents"),
        ("vars: x y\n[1, 2\n", "unterminated exponent vector"),
        ("vars: x y\n[1, b]\n", "bad exponent"),
        ("vars: x y\n[-1, 2]\n", "negative exponent"),
        ("vars: x\nx^0\n", "unit monomial"),
    ]
    for text, fragment in cases:
        with pytest.raises(IdealParseError) as err:
            parse_ideal(text)
        assert fragment in str(err.value), text
    err = pytest.raises(IdealParseError, parse_ideal, "vars: x\n\n y\n")
    assert err.value.line == 3


def test_ideal_roundtrip_through_format():
    for name in CORPUS:
        ideal = load_ideal(name)
        again = parse_ideal(format_ideal(ideal))
        assert again.ideal == ideal and again.removed == ()


def test_poset_parse_and_roundtrip():
    text = "elements: a b c d\na < b\na < c\nb < d\nc < d\n"
    p = parse_poset(text)
    assert p.n == 4 and p.is_lattice()
    assert format_poset(p) == text
    assert parse_poset(format_poset(p)).covers == p.covers


def test_poset_parse_errors():
    with pytest.raises(IdealParseError):
        parse_poset("")
    with pytest.raises(IdealParseError):
        parse_poset("covers: a b\n")
    with pytest.raises(IdealParseError):
        parse_poset("elements: a a\n")
    with pytest.raises(IdealParseError):
        parse_poset("elements: a b\na < b < b\n")
    with pytest.raises(IdealParseError):
        parse_poset("elements: a b\na < z\n")


def test_dot_outputs():
    p = parse_poset("elements: a b\na < b\n")
    dot = dot_poset(p)
    assert dot.startswith("digraph poset {")
    assert 'n0 [label="a"];' in dot and "n0 -> n1;" in dot
    L = build_lattice(load_ideal("scarf_small"))
    lat = dot_lattice(L)
    assert 'label="x^2*y^3"' in lat
    assert lat.count("->") == len(L.poset.covers)


def test_field_names():
    assert field_name(QQ) == "Q"
    assert field_name(GF2) == "GF(2)"


def test_lattice_section_roundtrip():
    L = build_lattice(load_ideal("rp2"))
    sec = lattice_section(L)
    q = poset_from_lattice_section(sec)
    assert q.labels == L.poset.labels
    assert q.covers == L.poset.covers
    assert len(sec["degrees"]) == L.poset.n


def test_report_json_has_every_key():
    doc = report_json()
    assert set(doc) == {"schema_version", "ideal", "field", "variant",
                        "lattice", "dims", "betti", "flags", "witnesses"}
    assert doc["schema_version"] == 1
    assert doc["ideal"] is None and doc["witnesses"] == {}


def test_report_json_content_and_determinism():
    ideal = load_ideal("scarf_small")
    L = build_lattice(ideal)
    betti = BettiTable({(0, (0, 0)): 1, (1, (2, 0)): 1})
    doc = report_json(ideal=ideal, fieldspec=QQ, variant="gamma", lattice=L,
                      dims={(1, (2, 0)): 1}, betti=betti,
                      flags={"is_complex": True},
                      witnesses={"complex": None, "minimal": (1, (0,), (0, 1))})
    assert doc["field"] == "Q"
    assert doc["ideal"]["generators"] == [[2, 0], [1, 1], [0, 3]]
    assert doc["dims"] == [[1, [2, 0], 1]]
    assert doc["betti"]["by_degree"] == [1, 1]
    # None-valued witnesses are dropped; tuples become lists
    assert doc["witnesses"] == {"minimal": [1, [0], [0, 1]]}
    text = dump_json(doc)
    assert text == dump_json(report_json(
        ideal=ideal, fieldspec=QQ, variant="gamma", lattice=L,
        dims={(1, (2, 0)): 1}, betti=betti, flags={"is_complex": True},
        witnesses={"complex": None, "minimal": (1, (0,), (0, 1))}))
    parsed = json.loads(text)
    assert parsed["flags"] == {"is_complex": True}
    assert text.endswith("\n")


def test_betti_section_shape():
    assert betti_section(None) is None
    sec = betti_section(BettiTable({(1, (1, 1)): 2, (0, (0, 0)): 1}))
    assert sec["multigraded"] == [[0, [0, 0], 1], [1, [1, 1], 2]]
    assert sec["totals"] == [[0, 0, 1], [1, 2, 2]]
    assert sec["by_degree"] == [1, 2]


def test_corpus_files_all_parse():
    for name in CORPUS:
        r = parse_ideal(data_text(name))
        assert r.removed == (), name
        assert r.ideal.generators, name
