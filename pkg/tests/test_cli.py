import json
import subprocess
import sys

import pytest

from sylvid.campaign import IDENTITIES, CampaignConfig, CheckParams, run_campaign
from sylvid.cli import main
from sylvid.errors import ConfigurationError
from sylvid.matrix import read_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def reports(out):
    return [json.loads(line) for line in out.splitlines()]


def test_gen_degenerate_range(capsys):
    code, out, _ = run(capsys, "gen", "2", "2", "1", "1", "17")
    assert code == 0
    assert out == "2 2\n1 1\n1 1\n"


def test_gen_files_are_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert run(capsys, "gen", "3", "3", "-9", "9", "42", "--out", str(a))[0] == 0
    assert run(capsys, "gen", "--rows", "3", "--cols", "3", "--lo", "-9", "--hi", "9", "--seed", "42", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert read_matrix(a).shape == (3, 3)


@pytest.mark.parametrize(
    "argv",
    [
        ("gen", "0", "3", "1", "2", "3"),
        ("gen", "2", "2", "5", "1", "0"),
        ("gen", "2", "2"),
        ("verify", "nosuch"),
        ("verify", "glr", "--lists", "(1,2),(3,4)"),
        ("verify", "sylvester", "--trials", "0"),
        ("bench", "13"),
        ("bench", "4", "--lo", "3", "--hi", "1"),
        (),
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 64


def test_verify_fixture(tmp_path, capsys):
    path = tmp_path / "m.txt"
    path.write_text("3 3\n1 2 3\n4 5 6\n7 8 10\n")
    code, out, _ = run(capsys, "verify", "sylvester", "--t", "1", "--matrix", str(path))
    assert code == 0
    (r,) = reports(out)
    assert r["identity"] == "sylvester" and r["holds"] is True
    assert set(r) >= {"identity", "params", "lhs", "rhs", "holds", "notes"}


def test_verify_glr_full_cover(tmp_path, capsys):
    path = tmp_path / "m.txt"
    assert run(capsys, "gen", "5", "5", "-9", "9", "3", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", "glr", "--matrix", str(path), "--lists", "(1,3,4),(1,4,5),(2,4,5)")
    assert code == 0
    (r,) = reports(out)
    assert r["params"]["c"] == -1 and r["params"]["mu"] == 7 and r["holds"]


def test_verify_mulders_repeated_column(tmp_path, capsys):
    path = tmp_path / "m.txt"
    run(capsys, "gen", "7", "8", "-9", "9", "5", "--out", str(path))
    code, out, _ = run(capsys, "verify", "mulders", "--t", "6", "--p", "2", "--q", "3", "--s", "3", "--matrix", str(path))
    assert code == 0
    (r,) = reports(out)
    assert r["lhs"] == r["rhs"] == "0"


def test_malformed_and_unsuitable_matrices(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("2 2\n1 x\n3 4\n")
    assert run(capsys, "verify", "chio", "--matrix", str(bad))[0] == 65
    rect = tmp_path / "rect.txt"
    rect.write_text("2 3\n1 2 3\n4 5 6\n")
    assert run(capsys, "verify", "sylvester", "--matrix", str(rect))[0] == 65
    zero = tmp_path / "zero.txt"
    zero.write_text("2 2\n0 1\n1 0\n")
    assert run(capsys, "verify", "chio", "--matrix", str(zero))[0] == 65


def test_io_errors(tmp_path, capsys):
    assert run(capsys, "verify", "chio", "--matrix", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "gen", "2", "2", "0", "1", "0", "--out", str(tmp_path / "no" / "dir.txt"))[0] == 2


@pytest.mark.parametrize("identity", IDENTITIES)
def test_every_identity_campaign(capsys, identity):
    code, out, _ = run(capsys, "verify", identity, "--trials", "3", "--seed", "11")
    assert code == 0
    assert all(r["verdict"] in ("holds", "not applicable", "inconclusive") for r in reports(out))


def test_campaign_is_deterministic(capsys):
    argv = ("verify", "yakovlev", "--trials", "20", "--rows", "4-7", "--seed", "8")
    first = run(capsys, *argv)[1]
    assert first == run(capsys, *argv)[1]
    assert len({r["params"]["n"] for r in reports(first)}) > 1


def test_text_output(capsys):
    code, out, _ = run(capsys, "verify", "chio", "--text")
    assert code == 0 and out.startswith("chio") and "holds" in out


def test_bench(capsys, tmp_path):
    code, out, err = run(capsys, "bench", "8", "--trials", "20", "--seed", "1")
    assert code == 0
    assert "# trials=20" in err
    lines = out.splitlines()
    assert lines[0] == "stage\tff_bits\tnaive_bits"
    for line in lines[1:]:
        _, ff, naive = line.split("\t")
        assert float(ff) <= float(naive)
    assert run(capsys, "bench", "8", "--trials", "20", "--seed", "1")[1] == out
    code, out, _ = run(capsys, "bench", "1", "--trials", "3")
    assert code == 0 and len(out.splitlines()) == 2


def test_bench_all_trials_skipped(capsys):
    code, _, err = run(capsys, "bench", "3", "--trials", "4", "--lo", "0", "--hi", "0")
    assert code == 65 and "skipped=4" in err


def test_campaign_skips_zero_pivots():
    cfg = CampaignConfig("chio", trials=5, entries=(0, 0))
    outcomes = list(run_campaign(cfg))
    assert all(o.skipped for o in outcomes)


def test_campaign_config_validation():
    with pytest.raises(ConfigurationError):
        CampaignConfig("nosuch")
    with pytest.raises(ConfigurationError):
        CampaignConfig("chio", trials=0)
    with pytest.raises(ConfigurationError):
        CampaignConfig("chio", entries=(2, 1))
    cfg = CampaignConfig("newgen", params=CheckParams(t=1, s=3))
    (outcome,) = run_campaign(cfg)
    assert [r.params["k"] for r in outcome.reports] == [0, 1, 2]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sylvid", "gen", "2", "2", "1", "1", "0"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "2 2\n1 1\n1 1\n"
