import io
import json

import pytest

from canonical_covers.cli import main, resolve_format

from corruptions import corrupted_catalogs


def run(argv, **kw):
    out = io.StringIO()
    code = main(argv, out=out, **kw)
    return code, out.getvalue()


def test_pair_numeric():
    code, out = run(["pair", "--id", "I", "--n", "3", "--format", "markdown"])
    assert code == 0
    assert "X: q=2 pg=9 K2=40" in out


def test_pair_symbolic():
    code, out = run(["pair", "--id", "III", "--symbolic", "--format", "markdown"])
    assert code == 0 and "K2_X = 48n-48" in out


@pytest.mark.parametrize("argv", [
    ["pair", "--id", "IV"],
    ["pair", "--id", "I", "--n", "2"],
    ["pair", "--id", "I"],
    ["table", "--example", "1", "--k", "0"],
    ["table", "--example", "4", "--k", "1"],
    ["basis", "--weights", "0,x", "--u", "1,2", "--degree", "3"],
    ["basis", "--weights", "0,1", "--u", "1", "--degree", "3"],
    ["verify", "--k-max", "0"],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_table_csv():
    code, out = run(["table", "--example", "1", "--k", "1..3", "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    header = lines[0].split(",")
    row = dict(zip(header, lines[1].split(",")))
    assert (row["K2_Y"], row["pg_Y"], row["sigma_a1"]) == ("12", "3", "48")


def test_table_markdown_example3():
    code, out = run(["table", "--example", "3", "--k", "2", "--format", "markdown"])
    assert code == 0
    header, _, row = out.strip().splitlines()
    cells = dict(zip([c.strip() for c in header.split("|")], [c.strip() for c in row.split("|")]))
    assert cells["K2_T"] == "39"


def test_table_symbolic_csv():
    code, out = run(["table", "--example", "2", "--symbolic", "--format", "csv"])
    assert code == 0 and "32*k-12" in out and "16*k-6" in out


def test_table_pipeline_error_exit1():
    cat = corrupted_catalogs()["wrong alpha"]
    assert run(["table", "--example", "1", "--k", "1", "--format", "csv"], catalog=cat)[0] == 1


def test_solve():
    code, out = run(["solve", "--k2", "4", "--chi", "1", "--fixed", "14", "--beta-min", "10",
                     "--format", "markdown"])
    assert code == 0 and out.strip() == "(4,10)"
    code, out = run(["solve", "--k2", "4", "--chi", "1", "--fixed", "14", "--require-k2-nonneg",
                     "--format", "markdown"])
    assert code == 0 and out.strip() == "(4,10)"
    code, out = run(["solve", "--k2", "1", "--chi", "1", "--fixed", "0", "--format", "json"])
    assert code == 3 and json.loads(out) == {"profiles": []}


def test_basis():
    code, out = run(["basis", "--weights", "0,0,2,1", "--u", "1,2", "--degree", "3", "--format", "markdown"])
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 7 and lines[-1] == "dim = 6"
    code, out = run(["basis", "--weights", "0", "--u", "0,0", "--degree", "2", "--format", "markdown"])
    assert out.strip().splitlines()[:-1] == ["x0^0 x1^2 f_0", "x0^1 x1^1 f_0", "x0^2 x1^0 f_0"]
    code, out = run(["basis", "--weights", "0,0,2", "--u", "2,1", "--degree", "3", "--format", "markdown"])
    assert "x0^1 x1^2 f_2" in out.splitlines()


def test_verify_passes():
    code, out = run(["verify", "--k-max", "50", "--format", "markdown"])
    assert code == 0 and "all checks passed" in out
    assert run(["verify", "--k-max", "1", "--format", "json"])[0] == 0


@pytest.mark.parametrize("name", list(corrupted_catalogs()))
def test_verify_catches_corruption(name):
    code, out = run(["verify", "--k-max", "3", "--format", "json"], catalog=corrupted_catalogs()[name])
    assert code == 1
    report = json.loads(out)
    assert report["ok"] is False and report["failures"]


@pytest.mark.parametrize("argv", [
    ["pair", "--id", "II", "--symbolic"],
    ["pair", "--id", "II", "--n", "5"],
    ["table", "--example", "1", "--k", "1..3"],
    ["table", "--example", "3", "--symbolic"],
    ["basis", "--weights", "0,0,2,1", "--u", "1,2", "--degree", "6"],
    ["verify", "--k-max", "2"],
])
def test_json_roundtrip_is_byte_identical(argv):
    code, out = run(argv + ["--format", "json"])
    assert code == 0
    assert json.dumps(json.loads(out), indent=2, ensure_ascii=False) + "\n" == out
    assert not any(isinstance(v, float) for v in _leaves(json.loads(out)))


def _leaves(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _leaves(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _leaves(v)
    else:
        yield obj


def test_format_resolution(monkeypatch):
    monkeypatch.delenv("CANONICAL_COVERS_FORMAT", raising=False)
    assert resolve_format(None, io.StringIO()) == "json"

    class Tty(io.StringIO):
        def isatty(self):
            return True

    assert resolve_format(None, Tty()) == "markdown"
    monkeypatch.setenv("CANONICAL_COVERS_FORMAT", "csv")
    assert resolve_format(None, Tty()) == "csv"
    assert resolve_format("json", Tty()) == "json"
