import io
import json
import subprocess
import sys

import pytest

from nca.cli import main, run


def ok(argv):
    code, env, _ = run(argv)
    assert code == 0 and env["status"] == "ok", env["error"]
    return env["payload"]


def err(argv):
    code, env, _ = run(argv)
    assert code == 1 and env["status"] == "error" and env["payload"] is None
    return env["error"]["code"]


def test_envelope_shape():
    code, env, command = run(["enumerate", "--shape", "1", "--kind", "syt"])
    assert command == "enumerate" and code == 0
    assert set(env) == {"schema", "command", "status", "payload", "error", "timing_ms", "provenance"}
    assert env["schema"] == "nca/1" and env["error"] is None and env["provenance"]


def test_enumerate_examples():
    assert ok(["enumerate", "--shape", "2,1,1", "--kind", "nct"])["count"] == 3
    assert ok(["enumerate", "--shape", "1", "--kind", "syt"])["count"] == 1
    assert ok(["enumerate", "--shape", "2,1", "--kind", "snct", "--weight", "2,1"])["count"] == 1
    assert ok(["enumerate", "--shape", "3,2", "--kind", "ssyt", "--weight", "2,2,1"])["count"] == 2
    done = ok(["enumerate", "--shape", "2,1", "--kind", "nct", "--complete"])
    assert all(sum(len(c) for c in t["columns"]) == 4 for t in done["tableaux"])


@pytest.mark.parametrize("shape", ["2,,1", "a", "1,2", "", "2;1"])
def test_bad_shapes(shape):
    assert err(["enumerate", "--shape", shape, "--kind", "nct"]) == "bad_shape"


def test_usage_errors():
    assert err([]) == "usage"
    assert err(["frobnicate"]) == "usage"
    assert err(["enumerate", "--shape", "2,1", "--kind", "snct"]) == "usage"
    assert err(["verify", "--suite", "nope"]) == "usage"
    assert err(["enumerate", "--shape", "13", "--kind", "syt"]) == "out_of_range"


def test_biject_examples():
    p = ok(["biject", "--json", '{"columns": [[1, 3], [2, 4]]}', "--round-trip"])
    assert p["image"]["columns"] == [[2, 3], [1, 4]]
    assert p["reading"] == [1, 1, 2, 2] and p["round_trip"] is True
    p = ok(["biject", "--json", "[[1, 2, 3]]"])
    assert p["image"]["columns"] == [[1, 2, 3]]
    back = ok(["biject", "--json", '[[2, 3], [1, 4]]', "--direction", "nct-to-syt", "--round-trip"])
    assert back["image"]["columns"] == [[1, 3], [2, 4]] and back["round_trip"]
    assert err(["biject", "--json", "[[1, 4], [2, 3]]"]) == "classification"
    assert err(["biject", "--json", "{oops"]) == "usage"


def test_biject_reads_file_and_stdin(tmp_path, monkeypatch):
    path = tmp_path / "t.json"
    path.write_text('{"columns": [[1, 3], [2, 4]]}')
    assert ok(["biject", "--input", str(path)])["image"]["columns"] == [[2, 3], [1, 4]]
    monkeypatch.setattr(sys, "stdin", io.StringIO("[[1, 3], [2, 4]]"))
    assert ok(["biject", "--input", "-"])["reading"] == [1, 1, 2, 2]
    assert err(["biject", "--input", str(tmp_path / "missing.json")]) == "bad_input"


def _coeffs(payload):
    return [t["coeff"] for t in payload["terms"]]


def test_decompose_display():
    p = ok(["decompose", "--target", "specht-nct", "--json", "[[2, 4, 5], [1, 3, 6]]"])
    assert sorted(_coeffs(p)) == ["-1", "1", "1"] and p["verified"]


def test_decompose_nct_is_single_term():
    p = ok(["decompose", "--target", "specht-nct", "--json", "[[2, 3], [1, 4]]"])
    assert _coeffs(p) == ["1"]


def test_tl_and_specht_agree_on_two_rows():
    for cols in ("[[1, 3], [2, 4]]", "[[1, 4], [2, 5], [3, 6]]", "[[1, 5], [2, 6], [3, 7], [4, 8]]"):
        tl = ok(["decompose", "--target", "tl", "--json", cols])
        sp = ok(["decompose", "--target", "specht-nct", "--json", cols])
        as_map = lambda p: {json.dumps(t["tableau"]["columns"]): t["coeff"] for t in p["terms"]}
        assert as_map(tl) == as_map(sp)


def test_tl_rejects_three_rows():
    assert err(["decompose", "--target", "tl", "--json", "[[1, 2, 3], [4, 5, 6]]"]) == "unsupported_shape"


def test_decompose_syt_and_bitableau():
    p = ok(["decompose", "--target", "specht-syt", "--json", "[[1, 4], [2, 3]]"])
    assert all(t["tableau"]["columns"] in ([[1, 2], [3, 4]], [[1, 3], [2, 4]]) for t in p["terms"])
    b = ok(["decompose", "--target", "bitableau", "--json", '{"T": [[1], [2]], "Tprime": [[2], [1]]}'])
    got = {(json.dumps(t["bitableau"]["T"]), json.dumps(t["bitableau"]["Tprime"])): t["coeff"] for t in b["terms"]}
    assert got == {("[[1], [2]]", "[[1], [2]]"): "1", ("[[1, 2]]", "[[1, 2]]"): "-1"}


def test_decompose_completed_tableau():
    p = ok(["enumerate", "--shape", "2,1", "--kind", "syt", "--complete"])
    t = json.dumps(p["tableaux"][0]["columns"])
    q = ok(["decompose", "--target", "specht-nct", "--shape", "2,1", "--json", t])
    assert all(sum(len(c) for c in term["tableau"]["columns"]) == 4 for term in q["terms"])


def test_straighten():
    p = ok(["straighten", "--n", "2", "--monomial", "13,24"])
    assert p["text"] == "P12P34 + P14P23"
    assert ok(["straighten", "--n", "2", "--monomial", "14,23"])["text"] == "P14P23"
    assert ok(["straighten", "--n", "9", "--monomial", "1:10,2:11"])["text"] == "P(1,2)P(10,11) + P(1,11)P(2,10)"
    assert err(["straighten", "--m", "3", "--n", "3", "--monomial", "135,234"]) == "unsupported_shape"
    assert err(["straighten", "--n", "2", "--monomial", "15,23"]) == "out_of_range"
    x = ok(["straighten", "--m", "3", "--n", "3", "--monomial", "135,234", "--explore"])
    assert x["finished"] and x["text"] == "-P123P345 + P134P235"


def test_verify(monkeypatch):
    p = ok(["verify", "--suite", "display"])
    assert p["all_ok"] and p["reports"][0]["checked"] == 1
    monkeypatch.setenv("NCA_MAX_N", "3")
    assert ok(["verify", "--suite", "nct-count"])["max_n"] == 3
    monkeypatch.setenv("NCA_MAX_N", "x")
    assert err(["verify", "--suite", "display"]) == "usage"


@pytest.mark.slow
def test_verify_all_at_default_bounds():
    p = ok(["verify", "--suite", "all", "--max-n", "6"])
    assert p["all_ok"] and len(p["reports"]) == 10


def test_payload_is_deterministic_and_round_trips():
    argv = ["decompose", "--target", "specht-nct", "--json", "[[2, 4, 5], [1, 3, 6]]"]
    _, a, _ = run(argv)
    _, b, _ = run(argv)
    assert a["payload"] == b["payload"]
    assert json.loads(json.dumps(a)) == a


def test_main_prints_json_and_pretty(capsys):
    assert main(["enumerate", "--shape", "2,1", "--kind", "syt"]) == 0
    assert json.loads(capsys.readouterr().out)["payload"]["count"] == 2
    assert main(["enumerate", "--pretty", "--shape", "2,1", "--kind", "syt"]) == 0
    text = capsys.readouterr().out
    assert text.startswith("2 syt of shape [2, 1]")
    assert main(["--pretty", "biject", "--json", "[[1, 4], [2, 3]]"]) == 1
    assert capsys.readouterr().out.startswith("error [classification]")


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "nca.cli", "straighten", "--n", "2", "--monomial", "13,24"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["payload"]["text"] == "P12P34 + P14P23"
