from __future__ import annotations

import csv
import io
import json

import pytest

from codegree.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_json_schema(capsys):
    code, out, _ = run(capsys, "table", "A5", "--format", "json")
    assert code == 0
    env = json.loads(out)
    assert env["schema_version"] == 1 and env["command"] == "table" and env["timing"] is None
    res = env["result"]
    assert set(res) == {"group", "order", "num_classes", "classes", "characters", "sc", "fcod", "acod"}
    assert res["sc"] == 68 and res["fcod"] == {"num": 17, "den": 15}
    assert "threads" not in env["inputs"]
    assert json.dumps(env, sort_keys=True, indent=2) == out.strip()


def test_table_text_and_csv(capsys):
    code, out, _ = run(capsys, "table", "D16")
    assert code == 0 and "S_c = 27" in out
    code, out, _ = run(capsys, "table", "D16", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "row,degree,kernel_order,cod" and len(lines) == 8
    code, out, _ = run(capsys, "table", "C8:[3,5]")
    assert "order 32" in out


def test_cod_product(capsys):
    code, out, _ = run(capsys, "cod", "A5 x C7", "--format", "json", "--approx")
    res = json.loads(out)["result"]
    assert res["sc"] == 2924 and res["fcod"] == {"num": 731, "den": 105}
    assert res["fcod_approx"] == "6.961905"


def test_search_and_identify(capsys):
    code, out, _ = run(capsys, "search", "primepairs", "--limit", "13", "--format", "json")
    pairs = json.loads(out)["result"]["pairs"]
    assert {"p": 13, "q": 157} in pairs and {"p": 3, "q": 7} in pairs
    code, out, _ = run(capsys, "search", "fcod1", "--bound", "30", "--threads", "1")
    assert "S3" in out and "C7:[2]" in out
    code, out, _ = run(capsys, "identify", "order32", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert ["C8:[3,5]", "31", "True"] in rows


def test_scan_text(capsys):
    code, out, _ = run(capsys, "scan", "--max-order", "120", "--threads", "1")
    assert code == 0 and "min S_c = 68 at A5" in out and "catalog-restricted" in out


def test_timing_flag(capsys):
    code, out, _ = run(capsys, "cod", "S3", "--format", "json", "--timing")
    assert isinstance(json.loads(out)["timing"]["elapsed_ms"], int)


@pytest.mark.parametrize("argv, code", [
    (["table", "A5 x Q8"], 2),
    (["table", "C7:C5"], 2),
    (["table", "S7", "--cap", "1000"], 3),
    (["table", "C100", "--class-limit", "50"], 3),
    (["table", "file:does_not_exist.gens"], 4),
    (["cod", "S3", "--seedless"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_bad_flags_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["table"])
    assert err.value.code == 2
    with pytest.raises(SystemExit) as err:
        main(["verify", "--level", "huge"])
    assert err.value.code == 2


def test_bad_generator_file_exit_4(capsys, tmp_path):
    bad = tmp_path / "bad.gens"
    bad.write_text("(1,2\n")
    assert run(capsys, "table", f"file:{bad}")[0] == 4
