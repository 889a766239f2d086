import json

import pytest

from schurq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out else None), out.err


def test_compute_one_box(capsys):
    code, doc, _ = run(capsys, "compute", "--shape", "1", "--params", "classical", "--n", "2", "--q")
    assert code == 0
    assert doc["result"]["polynomial"] == "2*x1 + 2*x2"
    assert doc["timing"] is None
    assert set(doc) == {"command", "inputs", "result", "checks", "timing"}


def test_compute_non_strict(capsys):
    code, doc, _ = run(capsys, "compute", "--shape", "2,2", "--n", "2")
    assert code == 0
    assert doc["result"]["identically_zero"]
    assert "identically zero" in doc["result"]["notice"]


def test_compute_empty(capsys):
    _, doc, _ = run(capsys, "compute", "--shape", "-", "--n", "2")
    assert doc["result"]["polynomial"] == "1"


@pytest.mark.parametrize("method", ["tableau", "giambelli", "unmarked"])
def test_compute_methods_agree(capsys, method):
    _, doc, _ = run(capsys, "compute", "--shape", "3,1", "--params", "custom:0,1/2,3,7", "--n", "3",
                    "--p", "--method", method)
    _, ref, _ = run(capsys, "compute", "--shape", "3,1", "--params", "custom:0,1/2,3,7", "--n", "3", "--p")
    assert doc["result"]["polynomial"] == ref["result"]["polynomial"]
    assert "7/2*x1^2*x2" in doc["result"]["polynomial"]


def test_compute_guard(capsys, monkeypatch):
    code, _, err = run(capsys, "compute", "--shape", "13", "--n", "1")
    assert code == 2 and "guard" in err
    code, _, _ = run(capsys, "compute", "--shape", "13", "--n", "1", "--force")
    assert code == 0
    monkeypatch.setenv("SCHURQ_MAX_CELLS", "13")
    code, _, _ = run(capsys, "compute", "--shape", "13", "--n", "1")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ("compute", "--shape", "x", "--n", "2"),
    ("compute", "--shape", "1", "--n", "2", "--params", "custom:1,2"),
    ("compute", "--shape", "5", "--n", "2", "--params", "custom:0,1"),
    ("dim", "--outer", "2,2"),
    ("transition", "--a", "nope", "--b", "classical"),
])
def test_usage_errors(capsys, argv):
    code, doc, err = run(capsys, *argv)
    assert code == 2 and doc is None and err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_dim(capsys):
    code, doc, _ = run(capsys, "dim", "--outer", "3,2,1", "--inner", "2,1", "--method", "all")
    assert code == 0
    assert doc["result"] == {"paths": 1, "formula": 1, "pfaffian": 1}
    assert doc["checks"] == {"agree": True}
    _, doc, _ = run(capsys, "dim", "--outer", "2,1")
    assert doc["result"] == {"paths": 1}
    _, doc, _ = run(capsys, "dim", "--outer", "1", "--inner", "2")
    assert doc["result"] == {"paths": 0}


def test_verify(capsys):
    code, doc, _ = run(capsys, "verify", "--suite", "giambelli", "--max-weight", "6")
    assert code == 0 and doc["checks"] == {"giambelli": True}
    code, doc, _ = run(capsys, "verify", "--suite", "dimensions", "--max-weight", "8")
    assert code == 0


def test_verify_is_deterministic(capsys):
    first = run(capsys, "verify", "--suite", "nimmo", "--seed", "7", "--verbose")
    second = run(capsys, "verify", "--suite", "nimmo", "--seed", "7", "--verbose")
    assert first == second
    other = run(capsys, "verify", "--suite", "nimmo", "--seed", "8", "--verbose")
    assert other[1]["result"] != first[1]["result"] or other[1]["inputs"] != first[1]["inputs"]


def test_verify_parallel_matches_serial(capsys):
    serial = run(capsys, "verify", "--suite", "pieri", "--verbose")
    parallel = run(capsys, "verify", "--suite", "pieri", "--verbose", "--jobs", "2")
    assert serial == parallel


def test_transition(capsys):
    code, doc, _ = run(capsys, "transition", "--a", "factorial", "--b", "factorial", "--max-weight", "3")
    m = doc["result"]["matrix"]
    assert all(v == ("1" if i == j else "0") for i, row in enumerate(m) for j, v in enumerate(row))
    code, doc, _ = run(capsys, "transition", "--a", "factorial", "--b", "classical", "--max-weight", "4", "--roundtrip")
    assert code == 0
    assert doc["checks"] == {"unitriangular": True, "roundtrip_identity": True}
    assert all(doc["result"]["matrix"][i][i] == "1" for i in range(len(doc["result"]["shapes"])))


def test_timing_flag(capsys):
    _, doc, _ = run(capsys, "--timing", "dim", "--outer", "3,1")
    assert doc["timing"]["seconds"] >= 0
