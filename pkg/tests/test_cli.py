import json

import pytest

from ajsdual.cli import UsageError, main, parse_field, parse_word


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_word():
    assert parse_word("s0 s1 sA", 2) == (0, 1, 2)
    assert parse_word("e", 2) == ()
    assert parse_word("s0,s1", 2) == (0, 1)
    for bad in ("s2", "t0", "s-1"):
        with pytest.raises(UsageError):
            parse_word(bad, 2)
    with pytest.raises(UsageError):
        parse_word("sA", 2, affine=False)


def test_parse_field():
    assert parse_field("Q") == 0
    assert parse_field("F7") == 7
    with pytest.raises(UsageError):
        parse_field("R")


def test_build_translated_unit_in_a1(capsys):
    code, out, _ = run(capsys, "build", "--type", "A1", "--word", "s0", "--base", "P0", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert len(data["components"]) == 2
    assert all(len(c["degrees"]) == 1 for c in data["components"])


def test_build_table(capsys):
    code, out, _ = run(capsys, "build", "--type", "A2", "--base", "Q0")
    assert code == 0 and "support: 6 alcoves" in out


def test_invalid_token(capsys):
    code, _, err = run(capsys, "build", "--type", "A2", "--word", "s0 s7")
    assert code == 2 and "s7" in err


def test_g2_needs_flag(capsys):
    assert run(capsys, "build", "--type", "G2")[0] == 2
    assert run(capsys, "build", "--type", "G2", "--experimental", "--base", "Q0")[0] == 0


def test_bad_field(capsys):
    assert run(capsys, "build", "--type", "A2", "--field", "F2")[0] == 2
    assert run(capsys, "build", "--type", "A1", "--field", "F7", "--word", "s0 sA")[0] == 0


def test_unknown_suite(capsys):
    assert run(capsys, "verify", "nosuch")[0] == 2


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "q0dual", "--type", "A1")
    assert code == 0 and out.startswith("PASS q0dual")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "controls", "--type", "A1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["suites"][0]["suite"] == "controls"


def test_kipptrans_without_tilt_fails(capsys):
    code, out, _ = run(capsys, "verify", "kipptrans", "--type", "A2", "--max-word", "1",
                       "--tilt-by", "e", "--base", "Q0")
    assert code == 1 and "FAIL kipptrans" in out


def test_dump_load_round_trip(tmp_path, capsys):
    path = tmp_path / "obj.json"
    code, _, _ = run(capsys, "dump", "--type", "A2", "--word", "s0 s1", "--base", "Q0",
                     "--shift", "2", "-o", str(path))
    assert code == 0
    code, out, _ = run(capsys, "load", str(path), "--format", "json")
    assert code == 0 and json.loads(out)["matches_provenance"] is True


def test_load_detects_tampering(tmp_path, capsys):
    path = tmp_path / "obj.json"
    run(capsys, "dump", "--type", "A1", "--word", "s0", "-o", str(path))
    data = json.loads(path.read_text())
    data["edges"][0]["basis"]["matrix"][0][0] = "(a1^3)/(1)"
    path.write_text(json.dumps(data))
    code, _, _ = run(capsys, "load", str(path))
    assert code in (1, 2)
    data["edges"][0]["basis"]["matrix"][0][0] = "a1/("
    path.write_text(json.dumps(data))
    assert run(capsys, "load", str(path))[0] == 2


def test_load_rejects_non_dump(tmp_path, capsys):
    path = tmp_path / "x.json"
    path.write_text("[1, 2]")
    assert run(capsys, "load", str(path))[0] == 2
    assert run(capsys, "load", str(tmp_path / "missing.json"))[0] == 2
