"""CLI: spec grammar, output formats, exit codes."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from odgraph.cli import main, parse_spec
from odgraph.errors import SpecConstraintError, SpecSyntaxError
from odgraph.groups import Cyclic, Dihedral, Product, Units, format_spec


# --- spec grammar -------------------------------------------------------------


def test_parse_spec_atoms():
    assert parse_spec("Z6") == Cyclic(6)
    assert parse_spec("D4") == Dihedral(4)
    assert parse_spec("U24") == Units(24)


def test_parse_spec_products():
    assert parse_spec("Z2xZ3") == Product((Cyclic(2), Cyclic(3)))
    assert parse_spec("Z2XD3xU8") == Product((Cyclic(2), Dihedral(3), Units(8)))


def test_parse_spec_case_and_whitespace():
    assert parse_spec("z6") == Cyclic(6)
    assert parse_spec("d4") == Dihedral(4)
    assert parse_spec(" Z 6 x Z 3 ") == Product((Cyclic(6), Cyclic(3)))


def test_parse_spec_constraint_errors():
    with pytest.raises(SpecConstraintError):
        parse_spec("D2")
    with pytest.raises(SpecConstraintError):
        parse_spec("U1")
    with pytest.raises(SpecConstraintError):
        parse_spec("Z0")


@pytest.mark.parametrize(
    "text,position",
    [
        ("", 0),
        ("Q5", 0),
        ("Z", 1),
        ("Z6y", 2),
        ("Z6x", 3),
        ("Z6xx", 3),
    ],
)
def test_parse_spec_syntax_errors(text, position):
    with pytest.raises(SpecSyntaxError) as info:
        parse_spec(text)
    assert info.value.position == position
    assert f"offset {position}" in str(info.value)


ATOMS = st.one_of(
    st.integers(min_value=1, max_value=50).map(Cyclic),
    st.integers(min_value=3, max_value=50).map(Dihedral),
    st.integers(min_value=2, max_value=50).map(Units),
)
SPECS = st.one_of(
    ATOMS,
    st.lists(ATOMS, min_size=2, max_size=4).map(lambda fs: Product(tuple(fs))),
)


@given(SPECS)
def test_parse_spec_round_trips_format_spec(spec):
    assert parse_spec(format_spec(spec)) == spec


# --- scalar commands -----------------------------------------------------------


def test_size_text(capsys):
    assert main(["size", "Z6"]) == 0
    assert capsys.readouterr().out == "11\n"


def test_size_json(capsys):
    assert main(["size", "D4", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"group": "D4", "size": 17}


def test_girth_text(capsys):
    assert main(["girth", "D9"]) == 0
    assert capsys.readouterr().out == "3\n"
    assert main(["girth", "U24"]) == 0
    assert capsys.readouterr().out == "0\n"


# --- degrees --------------------------------------------------------------------


def test_degrees_text(capsys):
    assert main(["degrees", "Z6"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == "group=Z6 order=6"
    assert lines[1].split() == ["order", "count", "formula", "oracle"]
    body = [line.split() for line in lines[2:]]
    assert body == [
        ["1", "1", "5", "5"],
        ["2", "1", "3", "3"],
        ["3", "2", "3", "3"],
        ["6", "2", "4", "4"],
    ]


def test_degrees_json(capsys):
    assert main(["degrees", "D4", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["group"] == "D4" and data["order"] == 8
    by_order = {row["order"]: row for row in data["rows"]}
    assert by_order[1]["degree_formula"] == 7
    assert by_order[2] == {
        "order": 2,
        "count": 5,
        "degree_formula": 3,
        "degree_oracle": 3,
    }


def test_degrees_csv(capsys):
    assert main(["degrees", "Z6", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "order,count,degree_formula,degree_oracle"
    assert len(lines) == 5
    assert lines[1] == "1,1,5,5"


def test_degrees_formula_only_past_bound(capsys):
    assert main(["degrees", "Z200000"]) == 0
    out = capsys.readouterr().out
    for line in out.splitlines()[2:]:
        assert line.split()[-1] == "-"


def test_degrees_oracle_flag_fails_past_bound(capsys):
    assert main(["degrees", "Z200000", "--oracle"]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "error:" in captured.err


# --- classify -------------------------------------------------------------------


def test_classify_text(capsys):
    assert main(["classify", "U24"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "group=U24" in lines
    assert "order=8" in lines
    assert "star=true" in lines
    assert "bipartite=true" in lines
    assert "path=false" in lines
    assert "profile=1:1,2:7" in lines


def test_classify_json(capsys):
    assert main(["classify", "Z6", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {
        "group": "Z6",
        "order": 6,
        "is_star": False,
        "is_bipartite": False,
        "is_path": False,
        "profile": {"1": 1, "2": 1, "3": 2, "6": 2},
    }


# --- export ---------------------------------------------------------------------


def test_export_dot(capsys):
    assert main(["export", "Z6"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert lines[0] == 'graph "OD(Z6)" {'
    assert lines[-1] == "}"
    assert sum("label=" in line for line in lines) == 6
    assert sum("--" in line for line in lines) == 11
    assert '  0 [label="0:1"];' in lines
    assert "  0 -- 1;" in lines


def test_export_dot_is_deterministic(capsys):
    assert main(["export", "Z8"]) == 0
    first = capsys.readouterr().out
    assert main(["export", "Z8"]) == 0
    assert capsys.readouterr().out == first
    assert sum("--" in line for line in first.splitlines()) == 21


def test_export_trivial_group(capsys):
    assert main(["export", "Z1"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ['graph "OD(Z1)" {', '  0 [label="0:1"];', "}"]


def test_export_json(capsys):
    assert main(["export", "Z6", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert set(data) == {"group", "order", "vertices", "edges", "invariants"}
    assert len(data["vertices"]) == 6
    assert len(data["edges"]) == 11
    assert data["vertices"][2] == {"id": 2, "label": "2", "order": 3}
    assert data["invariants"] == {
        "size": 11,
        "girth": 3,
        "is_star": False,
        "is_bipartite": False,
        "is_path": False,
        "radius": 1,
        "diameter": 2,
        "chromatic_number": 3,
    }


def test_export_json_chromatic_bound(capsys):
    assert main(["export", "Z6", "--format", "json", "--chromatic-bound", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["invariants"]["chromatic_number"] is None


def test_export_csv(capsys):
    assert main(["export", "D5", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "source,target,source_label,target_label"
    assert len(lines) == 10
    assert lines[1] == "0,1,e,a"


def test_export_product_labels(capsys):
    assert main(["export", "Z2xZ2", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert '"(0,0)"' in out or "(0,0)" in out


# --- verify ---------------------------------------------------------------------


def test_verify_cyclic_sweep(capsys):
    assert main(["verify", "cyclic", "1..20"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "cyclic 1..20: 20/20 pass"


def test_verify_units_notes(capsys):
    assert main(["verify", "units", "2..30"]) == 0
    out = capsys.readouterr().out
    assert "note star_instances=[2, 3, 4, 6, 8, 12, 24]" in out
    assert "note star_iff_divides_24=True" in out


def test_verify_json(capsys):
    assert main(["verify", "dihedral", "3..10", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["pass"] is True
    assert data["passed"] == 8 and data["failed"] == 0
    assert all(instance["pass"] for instance in data["instances"])


def test_verify_usage_errors(capsys):
    assert main(["verify", "cyclic", "5..3"]) == 2
    assert main(["verify", "cyclic", "5-3"]) == 2
    assert main(["verify", "dihedral", "1..5"]) == 2
    capsys.readouterr()


def test_unknown_family_rejected_by_argparse(capsys):
    assert main(["verify", "quaternion", "1..5"]) == 2
    capsys.readouterr()


# --- dispatch and io ------------------------------------------------------------


def test_out_writes_file(tmp_path, capsys):
    target = tmp_path / "size.txt"
    assert main(["size", "Z6", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    assert target.read_text(encoding="utf-8") == "11\n"


def test_out_failure_is_runtime_error(tmp_path, capsys):
    target = tmp_path / "missing" / "size.txt"
    assert main(["size", "Z6", "--out", str(target)]) == 1
    assert "error:" in capsys.readouterr().err


def test_bad_spec_is_usage_error(capsys):
    assert main(["girth", "Z6y"]) == 2
    assert main(["girth", "D2"]) == 2
    assert "error:" in capsys.readouterr().err


def test_help_and_missing_command(capsys):
    assert main(["--help"]) == 0
    assert main([]) == 2
    capsys.readouterr()
