import json

import pytest

from filtergerm.algebra import brandt
from filtergerm.cli import RunConfig, main, run
from filtergerm.formats import format_semigroup


@pytest.fixture
def b2_file(tmp_path):
    path = tmp_path / "b2.txt"
    path.write_text(format_semigroup(brandt(2)))
    return str(path)


def test_check_brandt2(capsys):
    assert main(["check", "--build", "brandt:2"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out and out.count("PASS") == 20


def test_check_from_file(b2_file, capsys):
    assert main(["check", b2_file]) == 0


def test_topology_chain2(capsys):
    assert main(["topology", "--build", "chain:2", "--space", "units", "--basis", "principal"]) == 0
    out = capsys.readouterr().out
    assert "non-Hausdorff, witness (↑x1, ↑x2)" in out
    assert main(["topology", "--build", "chain:2", "--space", "units", "--basis", "patch"]) == 0
    assert "\tHausdorff" in capsys.readouterr().out


@pytest.mark.parametrize("space", ["units", "efilters", "arrows"])
def test_topology_json(space, capsys):
    assert main(["topology", "--build", "brandt:2", "--space", space, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["topology"]["hausdorff"] is True


@pytest.mark.parametrize("kind", ["compose", "germ-equiv"])
def test_mutation_exit_code(kind, capsys):
    assert main(["check", "--build", "brandt:2", "--mutate", kind]) == 1
    out = capsys.readouterr().out
    assert "FAIL\tgroupoid-axioms" in out and "witness" in out


def test_check_json(capsys):
    assert main(["check", "--build", "brandt:2", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema_version"] == 1 and doc["verdict"] == "PASS"
    assert all(c["passed"] for c in doc["claims"])


def test_check_is_deterministic(capsys):
    main(["check", "--build", "symmetric_inverse:2", "--format", "json"])
    first = capsys.readouterr().out
    main(["check", "--build", "symmetric_inverse:2", "--format", "json"])
    assert capsys.readouterr().out == first


@pytest.mark.parametrize("kind", ["filters", "germs", "ultra", "ultragerms", "tight", "tightgerms"])
def test_groupoid_kinds(kind, capsys):
    assert main(["groupoid", "--build", "symmetric_inverse:2", "--kind", kind]) == 0
    first = capsys.readouterr().out.splitlines()[0]
    expected = "6 arrows, 3 units" if kind in ("filters", "germs") else "4 arrows, 2 units"
    assert expected in first


def test_emit_dot_to_file(tmp_path, capsys):
    out = tmp_path / "g.dot"
    assert main(["emit-dot", "--build", "brandt:2", "-o", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("digraph") and text.count("->") == 2
    assert capsys.readouterr().out == ""


def test_info(capsys):
    assert main(["info", "--build", "chain:2"]) == 0
    out = capsys.readouterr().out
    assert "idempotents\t0 x1 x2" in out and "hasse\tx1\tx2" in out


def test_filters_listing(capsys):
    assert main(["filters", "--build", "symmetric_inverse:2", "--select", "ultra"]) == 0
    assert capsys.readouterr().out.startswith("# 4 filters")
    assert main(["filters", "--build", "chain:2", "--efilters", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)["filters"]) == 2
    assert main(["filters", "--build", "brandt:2", "--mode", "bruteforce", "--select", "all"]) == 0


def test_validate(b2_file, tmp_path, capsys):
    assert main(["validate", b2_file]) == 0
    assert capsys.readouterr().out.startswith("ok:")
    bad = tmp_path / "band.txt"
    bad.write_text("2\n0 0\n1 1\n")
    assert main(["validate", str(bad)]) == 1
    assert "idempotents do not commute" in capsys.readouterr().out


def test_input_errors(tmp_path, capsys):
    z2 = tmp_path / "z2.txt"
    z2.write_text("2\n0 1\n1 0\n")
    assert main(["info", str(z2)]) == 2
    assert "--adjoin-zero" in capsys.readouterr().err
    assert main(["info", str(z2), "--adjoin-zero"]) == 0
    ragged = tmp_path / "ragged.txt"
    ragged.write_text("2\n0 0\n0\n")
    assert main(["info", str(ragged)]) == 2
    assert "line 3" in capsys.readouterr().err
    assert main(["info", str(tmp_path / "missing.txt")]) == 2
    assert main(["info", "--build", "nosuch:2"]) == 2
    assert main(["topology", "--build", "brandt:3", "--point-cap", "2"]) == 2


def test_exactly_one_input(b2_file, capsys):
    assert main(["info"]) == 2
    assert main(["info", b2_file, "--build", "brandt:2"]) == 2


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig("info", build="brandt:2", bruteforce_cap=0)
    assert run(RunConfig("validate", build="brandt:1")) == 0
