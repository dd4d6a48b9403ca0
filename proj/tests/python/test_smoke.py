import json
import os
import subprocess

import pytest

import skewlab

CLI = os.environ.get("SKEWLAB_CLI")


def run_cli(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_enumerate_counts():
    assert len(skewlab.enumerate_braces(skewlab.cyclic(4))) == 2
    for p in (2, 3, 5, 7):
        assert len(skewlab.enumerate_braces(skewlab.cyclic(p))) == 1
    assert len(skewlab.enumerate_braces(skewlab.dihedral(8))) == 20


def test_group_surface():
    s3 = skewlab.symmetric(3)
    assert s3.order == 6
    assert not s3.is_abelian()
    assert skewlab.is_isomorphic(s3, skewlab.dihedral(6))
    assert skewlab.is_z_group(s3)
    assert not skewlab.is_z_group(skewlab.quaternion8())
    assert [g.order for g in skewlab.enumerate_z_groups(21)] == [21, 21]


def test_brace_surface():
    braces = skewlab.enumerate_braces(skewlab.cyclic(4))
    b = braces[1]  # tables are sorted by lambda, so the twisted one is second
    assert b.lambda_perm(1) != [0, 1, 2, 3]
    assert b.order == 4
    assert skewlab.socle(b) == [0, 2]
    assert skewlab.is_ideal(b, [0, 2])
    chain = skewlab.supersolvable_chain(b)
    assert chain is not None
    levels, factors = chain
    assert factors == [2, 2]
    assert levels[0] == [0] and sorted(levels[-1]) == [0, 1, 2, 3]


def test_example_braces():
    first, second = skewlab.build_example_braces()
    assert skewlab.is_isomorphic(first.additive_group(), skewlab.alternating4())
    assert skewlab.is_almost_sylow_cyclic(first.multiplicative_group())
    assert not skewlab.is_z_group(first.additive_group())
    assert skewlab.is_isomorphic(second.multiplicative_group(), skewlab.cyclic(8))
    assert skewlab.is_z_group(second.multiplicative_group())


def test_report_round_trip():
    doc = skewlab.verify_theorem_a(15)
    report = json.loads(doc)
    assert report["kind"] == "sweep-report"
    assert report["verdict"] == "verified"
    assert report["totals"]["violations"] == 0
    assert "theorem-a,total," in skewlab.report_to_csv(doc)
    assert "verdict: verified" in skewlab.report_to_human(doc)


def test_report_determinism_across_workers():
    assert skewlab.verify_theorem_c(15, workers=1) == skewlab.verify_theorem_c(
        15, workers=3)


def test_document_round_trips():
    g = skewlab.group_by_name("C2xC4")
    assert skewlab.parse_group(skewlab.serialize_group(g)).same_table(g)
    b = skewlab.enumerate_braces(skewlab.cyclic(4))[1]
    parsed = skewlab.parse_brace(skewlab.serialize_brace(b))
    assert parsed.order == 4
    assert parsed.lambda_perm(1) == b.lambda_perm(1)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        skewlab.parse_group("not a document")
    with pytest.raises(ValueError):
        skewlab.group_by_name("E8")


@pytest.mark.skipif(CLI is None, reason="SKEWLAB_CLI not set")
class TestCli:
    def test_verify_ok_exits_zero(self):
        proc = run_cli("verify", "theorem-a", "--max-order", "15")
        assert proc.returncode == 0
        assert "verdict: verified" in proc.stdout

    def test_bad_group_name_exits_two(self):
        proc = run_cli("enumerate", "--additive", "E8")
        assert proc.returncode == 2

    def test_missing_file_exits_two(self):
        proc = run_cli("enumerate", "--additive", "/no/such/file.group")
        assert proc.returncode == 2

    def test_unknown_flag_exits_two(self):
        proc = run_cli("verify", "theorem-a", "--max-order", "15", "--bogus")
        assert proc.returncode == 2

    def test_strangled_budget_exits_three(self):
        proc = run_cli("--max-search-nodes", "2", "verify", "theorem-a",
                       "--max-order", "8")
        assert proc.returncode == 3
        assert "partial" in proc.stdout

    def test_examples_pass(self):
        proc = run_cli("examples")
        assert proc.returncode == 0
        assert "all example checks passed" in proc.stdout

    def test_export_csv(self, tmp_path):
        out = tmp_path / "report.json"
        proc = run_cli("verify", "theorem-c", "--max-order", "15", "--out",
                       str(out))
        assert proc.returncode == 0
        doc = out.read_text()
        assert json.loads(doc)["kind"] == "sweep-report"
        rendered = run_cli("export", "--in", str(out), "--format", "csv")
        assert rendered.returncode == 0
        assert "theorem-c,total," in rendered.stdout
