import io
import json
import subprocess
import sys

import pytest

from gappal.cli import EXIT_ERROR, EXIT_INFEASIBLE, EXIT_OK, InputError, RunConfig, main, parse_fasta, run

from conftest import HIV92


def invoke(**kwargs):
    out, err = io.StringIO(), io.StringIO()
    code = run(RunConfig(**kwargs), out, err)
    return code, out.getvalue(), err.getvalue()


def test_hiv_pretty_roundtrip():
    code, out, _ = invoke(mode="maximal-delta", metric="edit", involution="dna", g=4, m=14, delta=3, text=HIV92)
    assert code == EXIT_OK
    header, body, notes = out.strip().split("\n")
    assert "total_gap_length=32" in header and "gaps=4" in header
    assert body.replace("[", "").replace("]", "").replace(" ", "") == HIV92
    assert "[GGACTCG]" in body and "[AAATTTTG]" in body
    assert notes.startswith("# palindromes")


def test_hiv_json_and_tsv():
    code, out, _ = invoke(mode="maximal-delta", metric="hamming", involution="dna", g=4, m=14, delta=3,
                          text=HIV92, format="json")
    assert code == EXIT_OK
    rec = json.loads(out)
    assert rec["status"] == "ok" and rec["total_gap_length"] == 46 and rec["gap_count"] == 4
    assert rec["length"] == 92
    code, out, _ = invoke(mode="maximal-delta", metric="edit", involution="dna", g=4, m=14, delta=3,
                          text=HIV92, format="tsv")
    lines = out.strip().split("\n")
    assert lines[0].split("\t") == ["seq_id", "start", "end", "kind", "length", "errors_used"]
    gaps = [l.split("\t") for l in lines[1:] if l.split("\t")[3] == "gap"]
    assert [(int(r[1]), int(r[2])) for r in gaps] == [(1, 7), (33, 41), (61, 68), (85, 92)]


def test_exact_gaps_without_gaps():
    code, out, _ = invoke(g=0, m=1, text="abc", format="json")
    rec = json.loads(out)
    assert code == EXIT_OK and rec["gap_count"] == 0
    assert [s["kind"] for s in rec["segments"]] == ["palindrome"] * 3


def test_infeasible_exit_status():
    code, out, err = invoke(mode="maximal-delta", metric="hamming", delta=0, g=0, text="abaca")
    assert code == EXIT_INFEASIBLE
    assert out.startswith("#INFEASIBLE") and "infeasible" in err
    code, out, _ = invoke(g=0, m=2, text="abc", format="json")
    assert code == EXIT_INFEASIBLE and json.loads(out)["status"] == "infeasible"


@pytest.mark.parametrize("kwargs", [
    dict(g=-1, text="abc"),
    dict(m=0, text="abc"),
    dict(mode="maximal-delta", text="abc"),               # metric missing
    dict(metric="edit", text="abc"),                      # metric outside maximal-delta
    dict(delta=1, text="abc"),
    dict(mode="maximal-delta", metric="edit", delta=-2, text="abc"),
    dict(involution="dna", text="ACGX"),                  # letter outside the involution's domain
    dict(involution="nonsense", text="abc"),
    dict(input="/nonexistent/file.fa"),
    dict(),                                               # no input at all
])
def test_bad_configuration(kwargs):
    code, _, err = invoke(**kwargs)
    assert code == EXIT_ERROR
    assert err.startswith("gappal: error")


def test_fasta_records(tmp_path):
    path = tmp_path / "reads.fa"
    path.write_text(">r1 first\nacgt\nTT\n>r2\nGGCC\n")
    code, out, _ = invoke(input=str(path), involution="dna", g=1, m=2, format="json")
    recs = [json.loads(l) for l in out.strip().split("\n")]
    assert code == EXIT_OK
    assert [r["seq_id"] for r in recs] == ["r1", "r2"]
    assert recs[0]["length"] == 6 and recs[1]["total_gap_length"] == 0


def test_raw_file_and_no_upper(tmp_path):
    path = tmp_path / "plain.txt"
    path.write_text("abBa\n")
    code, out, _ = invoke(input=str(path), g=0, m=4, upper=False, format="tsv")
    assert code == EXIT_INFEASIBLE
    code, out, _ = invoke(input=str(path), g=0, m=4, format="tsv")
    assert code == EXIT_OK and "plain\t1\t4\tpalindrome" in out


def test_malformed_fasta():
    with pytest.raises(InputError):
        list(parse_fasta(io.StringIO(">r1\nACGT\n>r2\n")))
    with pytest.raises(InputError):
        list(parse_fasta(io.StringIO(">\nACGT\n")))


def test_involution_file(tmp_path):
    inv = tmp_path / "pairs.txt"
    inv.write_text("# purine/pyrimidine swap\nA T\nC G\n")
    code, out, _ = invoke(involution=f"file:{inv}", g=0, m=4, text="ACGT", format="json")
    assert code == EXIT_OK and json.loads(out)["segments"][0]["end"] == 4
    bad = tmp_path / "bad.txt"
    bad.write_text("A T\nA C\n")
    code, _, err = invoke(involution=f"file:{bad}", text="ACGT")
    assert code == EXIT_ERROR


def test_argparse_errors_use_error_status(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--mode", "bogus", "--text", "abc"])
    assert exc.value.code == EXIT_ERROR


def test_main_entry_point(capsys):
    assert main(["--text", "abba", "-g", "0", "-m", "4"]) == EXIT_OK
    assert "ABBA" in capsys.readouterr().out


def test_module_invocation():
    proc = subprocess.run([sys.executable, "-m", "gappal", "--text", "GTATCG", "-g", "2", "-m", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "[G] TAT [CG]" in proc.stdout
