"""End-to-end tests of the command-line tool via the MODPART_CLI path."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("MODPART_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="MODPART_CLI not set")


def run(args, cwd):
    return subprocess.run([CLI] + args, cwd=cwd, capture_output=True, text=True)


def test_verify_report_and_exit_codes(tmp_path):
    out = tmp_path / "report.json"
    r = run(["verify", "--modulus", "3", "--max-n", "12", "--out", str(out)], tmp_path)
    assert r.returncode == 0, r.stderr
    report = json.loads(out.read_text())
    assert report["verified"] is True
    assert report["cells_checked"] == 97
    cell = next(c for c in report["cells"] if c["type"] == [3, 1] and c["n"] == 11)
    assert cell["p_count"] == 4 and cell["q_count"] == 4

    bad = run(["verify", "--modulus", "1", "--max-n", "5"], tmp_path)
    assert bad.returncode == 2

    missing = run(["verify"], tmp_path)
    assert missing.returncode == 2


def test_verify_cache_resume(tmp_path):
    env_dir = tmp_path / "cache"
    env_dir.mkdir()
    env = dict(os.environ, MODPART_CACHE_DIR=str(env_dir))

    def run_env(args):
        return subprocess.run([CLI] + args, cwd=tmp_path, env=env, capture_output=True, text=True)

    first = run_env(["verify", "--modulus", "3", "--max-n", "8"])
    assert first.returncode == 0
    cache_file = env_dir / "scan.jsonl"
    records = [json.loads(line) for line in cache_file.read_text().splitlines()]
    assert len(records) == 8
    assert all(rec["status"] == "verified" for rec in records)
    assert all(rec["flags"] == ["types=all"] for rec in records)
    assert all(rec["counts_hash"].startswith("fnv1a64:") for rec in records)

    second = run_env(["verify", "--modulus", "3", "--max-n", "8", "--resume"])
    assert second.returncode == 0
    assert "8 weights skipped via cache" in second.stdout

    # a run with different flags must not reuse those records
    pure = run_env(["verify", "--modulus", "3", "--max-n", "8", "--types", "pure", "--resume"])
    assert pure.returncode == 0
    assert "0 weights skipped via cache" in pure.stdout


def test_verify_jobs_deterministic(tmp_path):
    out1 = tmp_path / "r1.json"
    out4 = tmp_path / "r4.json"
    assert run(["verify", "--modulus", "4", "--max-n", "14", "--out", str(out1)],
               tmp_path).returncode == 0
    assert run(["verify", "--modulus", "4", "--max-n", "14", "--jobs", "4", "--out", str(out4)],
               tmp_path).returncode == 0
    assert out1.read_text() == out4.read_text()


def test_table_layout(tmp_path):
    r = run(["table", "--modulus", "3", "--n", "11", "--mixed-only"], tmp_path)
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    row_headers = [ln for ln in lines if ln and not ln.startswith(" ") and ":" in ln]
    assert row_headers[0] == "(1,2): 4"
    assert row_headers[1] == "(3,1): 4"
    assert row_headers[-1] == "(9,1): 1"
    assert "  P: 5+4+2, 4+4+2+1, 4+3+2+1+1, 3+3+2+2+1" in lines
    assert "  Q: 8+2+1, 7+2+2, 5+5+1, 5+4+2" in lines

    single = run(["table", "--modulus", "2", "--n", "1"], tmp_path)
    assert single.returncode == 0
    assert "(1): 1" in single.stdout
    assert "  P: 1" in single.stdout


def test_series(tmp_path):
    pure = run(["series", "--trunc", "0", "--which", "pure"], tmp_path)
    assert pure.returncode == 0
    assert pure.stdout == "q^0 : 1\n"

    p_side = run(["series", "--modulus", "3", "--trunc", "14", "--which", "p"], tmp_path)
    assert "z1^3 z2^1 q^14 : 7" in p_side.stdout

    q_side = run(["series", "--modulus", "3", "--trunc", "11", "--which", "q"], tmp_path)
    assert "z1^1 z2^2 q^11 : 4" in q_side.stdout

    unknown = run(["series", "--trunc", "5", "--which", "nope"], tmp_path)
    assert unknown.returncode == 2

    bad_lemma = run(["series", "--trunc", "5", "--which", "lemma:L34:0:0"], tmp_path)
    assert bad_lemma.returncode == 2


def test_qdiff(tmp_path):
    r = run(["qdiff", "--max-length", "9", "--trunc", "16"], tmp_path)
    assert r.returncode == 0, r.stdout
    assert "qdiff: all checks pass" in r.stdout
    assert "cell ((6,1), 11) = 2" in r.stdout

    trivial = run(["qdiff", "--max-length", "0", "--trunc", "5"], tmp_path)
    assert trivial.returncode == 0


def test_rrag(tmp_path):
    ok = run(["rrag", "--d", "2", "--i", "2", "--max-n", "11"], tmp_path)
    assert ok.returncode == 0
    assert "n=11: gap-side 7, type-side 7 ok" in ok.stdout

    wit = run(["rrag", "--d", "2", "--i", "1", "--max-n", "11", "--witnesses"], tmp_path)
    assert "n=11: gap-side 4, type-side 4 ok" in wit.stdout
    assert "  gap:  11, 9+2, 8+3, 7+4" in wit.stdout

    bad_i = run(["rrag", "--d", "2", "--i", "5", "--max-n", "3"], tmp_path)
    assert bad_i.returncode == 2

    literal = run(
        ["rrag", "--d", "2", "--i", "1", "--max-n", "5", "--ag-interpretation", "literal"],
        tmp_path)
    assert literal.returncode == 1
    assert "n=4: gap-side 2, type-side 1 MISMATCH" in literal.stdout
