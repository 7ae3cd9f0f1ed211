import json

import pytest

from qschur.cli import main, parse_datum, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_datum_literals():
    d = parse_datum(["gl", "2|1"], None)
    assert d.describe() == "gl 2|1 order=e1,e2,d1"
    d2 = parse_datum(["gl", "2|1", "order=e1,d1,e2"], None)
    assert d2.ordering == (("e", 1), ("d", 1), ("e", 2))
    d3 = parse_datum(["osp", "3|2", "order=d1,e1"], None)
    assert d3.m == 3 and d3.n == 1
    with pytest.raises(UsageError):
        parse_datum(["osp", "3|3"], None)  # odd part must be even
    with pytest.raises(UsageError):
        parse_datum(["gl"], None)
    with pytest.raises(UsageError):
        parse_datum(["su", "2|1"], None)


def test_rmatrix_command(capsys):
    code, out, _ = run(capsys, "rmatrix", "gl", "1|1")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("# rows=4 cols=4")
    assert "1 2 q - q^-1" in lines
    code, out, _ = run(capsys, "rmatrix", "gl", "1|1", "--json")
    data = json.loads(out)
    assert data["rows"] == 4
    assert ["1", "2", "q - q^-1"] in [[str(x) for x in e] for e in data["entries"]]


def test_rmatrix_braiding_flag(capsys):
    code, out, _ = run(capsys, "rmatrix", "gl", "1|1", "--braiding")
    assert code == 0
    # the braiding swaps the middle basis vectors: entry (2,1) is 1
    assert "2 1 1" in out.splitlines()


def test_rmatrix_rejects_bad_spec(capsys):
    code, _, err = run(capsys, "rmatrix", "gl", "0|0")
    assert code == 2
    code, _, err = run(capsys, "rmatrix", "osp", "3|2")
    assert code == 2


def test_algebra_flag_variant(capsys):
    code, out, _ = run(capsys, "sdim", "--algebra", "gl 3|1")
    assert code == 0 and out.strip() == "q + q^-1"
    code, _, _ = run(capsys, "sdim", "gl", "3|1", "--algebra", "gl 2|1")
    assert code == 2  # both forms at once is ambiguous


def test_sdim_command(capsys):
    code, out, _ = run(capsys, "sdim", "gl", "3|1")
    assert code == 0 and out.strip() == "q + q^-1"
    code, out, _ = run(capsys, "sdim", "osp", "2|2")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "sdim", "gl", "2|1", "--all-orderings")
    assert code == 0 and "invariant across 3 orderings" in out


def test_invariant_command(capsys):
    code, out, _ = run(capsys, "invariant", "gl", "2|1", "--braid", "")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "invariant", "gl", "1|1", "--braid", "s1")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "invariant", "gl", "2|1", "--braid", "s1 s1",
                       "--json")
    assert code == 0 and json.loads(out)["value"] == "q^2"


def test_invariant_ribbon_json(capsys):
    word = '{"mode": "directed", "layers": [["U+"], ["Om-"]]}'
    code, out, _ = run(capsys, "invariant", "gl", "2|1", "--ribbon-json", word)
    assert code == 0 and out.strip() == "1"  # the unknot loop
    open_word = '{"mode": "directed", "layers": [["I+"]]}'
    code, _, _ = run(capsys, "invariant", "gl", "2|1", "--ribbon-json", open_word)
    assert code == 2
    code, _, _ = run(capsys, "invariant", "gl", "2|1", "--braid", "s1",
                     "--ribbon-json", word)
    assert code == 2


def test_fft_command(capsys):
    code, out, _ = run(capsys, "fft", "gl", "1|1", "-r", "2", "--json")
    assert code == 0
    cell = json.loads(out)["cells"][0]
    assert cell["verdict"] == "equal"
    code, out, _ = run(capsys, "fft", "osp", "3|2", "-r", "1,2")
    assert code == 0
    assert out.count("verdict=equal") == 2
    code, out, _ = run(capsys, "fft", "osp", "2|2", "-r", "3")
    assert "outside" in out  # bound recorded


def test_fft_budget_exit_code(capsys):
    code, _, err = run(capsys, "fft", "gl", "1|1", "-r", "2", "--budget", "3")
    assert code == 3


def test_fft_json_deterministic(capsys):
    code, out1, _ = run(capsys, "fft", "gl", "1|1", "-r", "2", "--json")
    code, out2, _ = run(capsys, "fft", "gl", "1|1", "-r", "2", "--json")
    assert out1 == out2
    assert "wall_clock_ms" not in out1
    code, out3, _ = run(capsys, "fft", "gl", "1|1", "-r", "2", "--json",
                        "--timing")
    assert "wall_clock_ms" in out3


def test_relations_command(capsys):
    code, out, _ = run(capsys, "relations", "gl", "2|1", "--kind", "hecke",
                       "-r", "3")
    assert code == 0 and "all zero: True" in out
    code, out, _ = run(capsys, "relations", "gl", "2|1", "--kind", "walledbmw")
    assert code == 0
    code, out, _ = run(capsys, "relations", "osp", "3|2", "--kind", "bmw",
                       "--json")
    assert code == 0 and json.loads(out)["all_zero"] is True
    # wrong z must fail verification with exit 1
    code, _, _ = run(capsys, "relations", "gl", "2|1", "--kind", "walledbmw",
                     "--z", "q")
    assert code == 1


def test_brauer_command(capsys):
    code, out, _ = run(capsys, "brauer", "-r", "3")
    assert code == 0 and "15 diagrams" in out
    code, out, _ = run(capsys, "brauer", "-r", "2", "osp", "3|2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 3 and data["all_zero"] is True


def test_usage_exit_codes(capsys):
    assert main([]) == 2
    assert main(["sdim"]) == 2
    assert main(["frobnicate", "gl", "1|1"]) == 2


def test_malformed_braid_word_is_usage_error(capsys):
    code, _, err = run(capsys, "invariant", "gl", "2|1", "--braid", "x1 y2")
    assert code == 2
    code, _, err = run(capsys, "invariant", "gl", "2|1", "--braid", "s1^3")
    assert code == 2


def test_invariant_budget_exit(capsys):
    code, _, err = run(capsys, "invariant", "gl", "2|1",
                       "--braid", "s1 s2 s1", "--budget", "100")
    assert code == 3
    assert "budget" in err
