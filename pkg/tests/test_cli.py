"""The command-line interface: subcommands, exit codes, and report files."""

import json

import pytest

from posetres.cli import main

from conftest import DATA, data_text


def path_of(name):
    return str(DATA / f"{name}.ideal")


def test_no_arguments_is_a_usage_error(capsys):
    assert main([]) == 2
    capsys.readouterr()


def test_missing_file_is_an_input_error(capsys):
    assert main(["lattice", "/nonexistent/nowhere.ideal"]) == 3
    assert "input error" in capsys.readouterr().err


def test_bad_field_is_a_usage_error(capsys):
    assert main(["betti", "--field", "gf:4", path_of("triangle")]) == 2
    assert "usage error" in capsys.readouterr().err


def test_tiny_cap_exceeded(capsys):
    assert main(["lattice", "--max-gens", "2", path_of("rp2")]) == 4
    assert "cap exceeded" in capsys.readouterr().err


def test_lattice_listing(capsys):
    assert main(["lattice", path_of("scarf_small")]) == 0
    out = capsys.readouterr().out
    assert "7 elements, 9 covers, 3 atoms" in out
    assert "x^2*y^3" in out and "(rank 3)" in out


def test_lattice_writes_dot_and_json(tmp_path, capsys):
    dot = tmp_path / "lat.dot"
    doc = tmp_path / "lat.json"
    assert main(["lattice", "--dot", str(dot), "--json", str(doc),
                 path_of("scarf_small")]) == 0
    capsys.readouterr()
    assert dot.read_text().startswith("digraph poset {")
    data = json.loads(doc.read_text())
    assert data["schema_version"] == 1
    assert len(data["lattice"]["elements"]) == 7
    assert data["ideal"]["variables"] == ["x", "y"]


def test_resolve_prints_dims_and_table(capsys):
    assert main(["resolve", path_of("path4")]) == 0
    out = capsys.readouterr().out
    assert "ranks [1, 3, 2]" in out
    assert "C_1 at x*y: dim 1" in out


def test_resolve_variant_both_agrees_on_lattices(capsys):
    assert main(["resolve", "--variant", "both", path_of("scarf_small")]) == 0
    capsys.readouterr()


def test_betti_over_different_fields(capsys):
    assert main(["betti", path_of("rp2")]) == 0
    assert "totals [1, 10, 15, 6]" in capsys.readouterr().out
    assert main(["betti", "--field", "gf:2", path_of("rp2")]) == 0
    assert "totals [1, 10, 15, 7, 1]" in capsys.readouterr().out


def test_check_lattice_linear_yes(capsys, tmp_path):
    doc = tmp_path / "r.json"
    assert main(["check-lattice-linear", "--json", str(doc),
                 path_of("scarf_small")]) == 0
    out = capsys.readouterr().out
    assert "lattice-linear over Q: yes" in out
    data = json.loads(doc.read_text())
    assert data["flags"]["lattice_linear"] is True
    assert data["witnesses"] == {}


def test_check_lattice_linear_no_with_complex_witness(capsys, tmp_path):
    doc = tmp_path / "r.json"
    assert main(["check-lattice-linear", "--json", str(doc),
                 path_of("nonll_small")]) == 1
    out = capsys.readouterr().out
    assert "lattice-linear over Q: no" in out
    assert "d^2 != 0 witness: degree 2" in out
    data = json.loads(doc.read_text())
    assert data["flags"]["lattice_linear"] is False
    assert data["witnesses"]["complex"] == [2, [2, 3, 3, 3]]


def test_check_lattice_linear_depends_on_field(capsys):
    assert main(["check-lattice-linear", "--field", "gf:2",
                 path_of("rp2")]) == 1
    out = capsys.readouterr().out
    assert "homology witness: H_2" in out
    assert main(["check-lattice-linear", "--field", "gf:3",
                 path_of("rp2")]) == 0
    capsys.readouterr()


def test_check_lattice_linear_both_variants(capsys):
    assert main(["check-lattice-linear", "--variant", "both",
                 path_of("triangle")]) == 0
    capsys.readouterr()


def test_scarf_exit_codes(capsys):
    assert main(["scarf", path_of("scarf_small")]) == 0
    assert "resolves: yes" in capsys.readouterr().out
    assert main(["scarf", path_of("triangle")]) == 1
    out = capsys.readouterr().out
    assert "resolves: no" in out
    assert "homology witness: H_1 of strand x*y*z has dim 2" in out


def test_taylor_reports_minimality(capsys):
    assert main(["taylor", path_of("triangle")]) == 0
    out = capsys.readouterr().out
    assert "ranks [1, 3, 3, 1]" in out
    assert "resolves: yes  minimal: no" in out
    assert main(["taylor", path_of("koszul3")]) == 0
    assert "minimal: yes" in capsys.readouterr().out


def test_compare_variants(capsys):
    assert main(["compare-variants", path_of("rp2")]) == 0
    out = capsys.readouterr().out
    assert "dimensions agree: yes" in out
    assert "comparison squares commute: yes" in out


def test_removal_note_goes_to_stderr(tmp_path, capsys):
    f = tmp_path / "nonmin.ideal"
    f.write_text("vars: x y\nx\nx*y\n")
    assert main(["lattice", str(f)]) == 0
    assert "removed redundant generators: x*y" in capsys.readouterr().err


def test_rank_complete_subdivides(tmp_path, capsys):
    f = tmp_path / "jump.poset"
    f.write_text("elements: z a b c ab one\nz < a\nz < b\nz < c\n"
                 "a < ab\nb < ab\nc < one\nab < one\n")
    out_file = tmp_path / "completed.poset"
    assert main(["rank-complete", str(f), "--out", str(out_file)]) == 0
    capsys.readouterr()
    text = out_file.read_text()
    assert "c.one.1" in text
    assert "c < c.one.1" in text and "c.one.1 < one" in text
    # already-ranked input passes through unchanged, on stdout
    g = tmp_path / "diamond.poset"
    g.write_text("elements: z a b one\nz < a\nz < b\na < one\nb < one\n")
    assert main(["rank-complete", str(g)]) == 0
    assert capsys.readouterr().out == g.read_text()


def test_selftest_battery(capsys):
    assert main(["selftest", "--seed", "7"]) == 0
    out = capsys.readouterr().out
    assert "selftest passed (seed 7)" in out
    assert out.count("ok") == 4
