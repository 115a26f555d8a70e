import json

from nlcseq.bitseq import canonical_value, from_bits
from nlcseq.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_nlc(capsys):
    assert call(capsys, "nlc", "0010010010", "--periodic") == (0, "9\n", "")
    assert call(capsys, "nlc", "000010010")[1] == "4\n"
    assert call(capsys, "nlc", "000010010", "--fast")[1] == "4\n"


def test_profile(capsys):
    assert call(capsys, "profile", "000010010", "--right")[1] == "4 5 5 5 5 4 5 6 3\n"
    assert call(capsys, "profile", "0010010010")[1] == "2 2 7 6 5 4 6 5 4 3\n"
    code, out, _ = call(capsys, "profile", "000010010", "--right", "--format", "json")
    data = json.loads(out)
    assert data["schema"] == 1 and data["values"][7] == 6
    assert {"c": 4, "d": 1, "add": 1} in data["memberships"][0]


def test_decompose(capsys):
    code, out, _ = call(capsys, "decompose", "000010010")
    assert code == 0 and "c=4 d=1 q=4 r=0 add=1" in out


def test_gen_lines(capsys):
    code, out, _ = call(capsys, "gen", "--n", "7", "--omega", "3", "--format", "lines")
    assert code == 0 and len(out.split()) == 12
    code, out, _ = call(capsys, "gen", "--n", "7", "--omega", "3", "--expand")
    assert len(out.split()) == 28
    assert out.split() == sorted(out.split())


def test_gen_json_round_trip(capsys):
    code, out, _ = call(capsys, "gen", "--n", "8", "--omega", "6", "--format", "json")
    data = json.loads(out)
    assert data["schema"] == 1 and data["method"] == "large"
    assert data["class_count"] == len(data["classes"]) == 6
    assert data["sequence_count"] == 48
    assert data["elapsed"] is None
    canon = {canonical_value(from_bits(k["witness"]).value, 8) for k in data["classes"]}
    assert canon == {from_bits(k["canonical"]).value for k in data["classes"]}


def test_gen_is_deterministic_across_methods_and_workers(capsys):
    a = call(capsys, "gen", "--n", "10", "--omega", "5", "--format", "csv")[1]
    b = call(capsys, "gen", "--n", "10", "--omega", "5", "--format", "csv", "--workers", "3")[1]
    assert a == b and a.startswith("canonical,omega,add,spacing\n")
    small = call(capsys, "gen", "--n", "10", "--omega", "5", "--method", "small", "--format", "json")[1]
    large = call(capsys, "gen", "--n", "10", "--omega", "5", "--method", "large", "--format", "json")[1]
    oracle = call(capsys, "gen", "--n", "10", "--omega", "5", "--method", "oracle", "--format", "json")[1]
    canon = [{k["canonical"] for k in json.loads(x)["classes"]} for x in (small, large, oracle)]
    assert canon[0] == canon[1] == canon[2]


def test_debruijn(capsys):
    assert call(capsys, "debruijn", "--m", "4", "--count-only")[1] == "classes=16 prefilter=36\n"
    code, out, _ = call(capsys, "debruijn", "--m", "3")
    assert code == 0 and len(out.split()) == 2


def test_verify(capsys):
    code, out, _ = call(capsys, "verify", "--n", "8")
    assert code == 0 and "FAIL" not in out


def test_scan_reports_findings(capsys):
    assert call(capsys, "scan-open-problem", "--max-n", "12")[0] == 0
    code, out, _ = call(capsys, "scan-open-problem", "--max-n", "15", "--min-n", "15")
    assert code == 1 and "findings=8" in out


def test_bench(capsys):
    code, out, _ = call(capsys, "bench", "--n", "12", "--omega", "6")
    assert code == 0 and "ratio=" in out


def test_usage_errors(capsys):
    assert call(capsys, "nlc", "0102")[0] == 2
    assert call(capsys, "nlc", "")[0] == 2
    assert call(capsys, "gen", "--n", "8", "--omega", "9")[0] == 2
    assert call(capsys, "gen", "--n", "8", "--omega", "6", "--method", "small")[0] == 2
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "gen", "--n", "8")[0] == 2
    code, _, err = call(capsys, "debruijn", "--m", "9")
    assert code == 2 and "error" in err
