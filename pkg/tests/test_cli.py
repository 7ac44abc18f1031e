"""Command-line interface, driven in-process through ``main(argv)``.

Exit codes, output formats, file loading and the --out path are all covered
here; the audit content itself is exercised in test_classify.  One canonical
audit run (the slow part) is shared module-wide.
"""

import json

import pytest

from skewpersp import psts
from skewpersp.cli import (
    EX_DATAERR,
    EX_IOERR,
    EX_MISMATCH,
    EX_NOINPUT,
    EX_NONISO,
    EX_OK,
    EX_USAGE,
    emit_levi_dot,
    main,
)
from skewpersp.iso import verify_point_map
from skewpersp.perspective import build, parse_spec_text
from skewpersp.veblen import CanonicalKind, canonical, to_psts


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


# ---------------------------------------------------------------- build


class TestBuild:
    def test_stdout_parses_back(self, capsys):
        code, out, err = run(capsys, "build", "perm:id@G2")
        assert code == EX_OK and err == ""
        s = psts.from_text(out)
        assert len(s.points) == 15 and len(s.lines) == 20
        assert s == build(parse_spec_text("perm:id@G2")).psts

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "g2.psts"
        code, out, _ = run(capsys, "build", "kappa:(1,2,3)@V5", "--out", str(target))
        assert code == EX_OK and out == ""
        s = psts.from_text(target.read_text())
        assert len(s.lines) == 20

    def test_levi_counts(self, capsys):
        code, out, _ = run(capsys, "build", "perm:(1,2)@B2", "--levi")
        assert code == EX_OK
        assert out.startswith("graph levi {")
        node_rows = [r for r in out.splitlines() if "shape=" in r]
        edge_rows = [r for r in out.splitlines() if " -- " in r]
        assert len(node_rows) == 15 + 20
        assert len(edge_rows) == 20 * 3

    def test_levi_deterministic(self, capsys):
        a = run(capsys, "build", "kappa:id@B2", "--levi")
        b = run(capsys, "build", "kappa:id@B2", "--levi")
        assert a == b

    def test_levi_of_axis_structure(self):
        dot = emit_levi_dot(to_psts(canonical(CanonicalKind.V5)))
        node_rows = [r for r in dot.splitlines() if "shape=" in r]
        edge_rows = [r for r in dot.splitlines() if " -- " in r]
        assert len(node_rows) == 6 + 4
        assert len(edge_rows) == 4 * 3

    def test_axis_from_file(self, capsys, tmp_path):
        axis = tmp_path / "axis.psts"
        axis.write_text(psts.to_text(to_psts(canonical(CanonicalKind.B2))))
        code, out, _ = run(capsys, "build", f"perm:id@{axis}")
        ref_code, ref_out, _ = run(capsys, "build", "perm:id@B2")
        assert code == ref_code == EX_OK
        assert out == ref_out

    def test_axis_file_missing(self, capsys):
        code, _, err = run(capsys, "build", "perm:id@/no/such/axis.psts")
        assert code == EX_NOINPUT
        assert "axis file not found" in err

    def test_axis_file_malformed(self, capsys, tmp_path):
        bad = tmp_path / "bad.psts"
        bad.write_text("psts 3 1\nhello\n")
        code, _, err = run(capsys, "build", f"perm:id@{bad}")
        assert code == EX_DATAERR
        assert "bad axis file" in err


# ---------------------------------------------------------------- census


class TestCensus:
    def test_text(self, capsys):
        code, out, err = run(capsys, "census")
        assert code == EX_OK and err == ""
        assert "census: 30 labelings of the six pairs" in out
        assert "orbit sizes under the 24 extended maps: [1, 1, 6, 6, 8, 8]" in out
        assert "orbit sizes under all 48 candidate maps: [2, 12, 16]" in out
        assert "coverage: 30 of 30 labelings in canonical orbits" in out
        # one row per kind
        for kind in ("G2", "G2_STAR", "B2", "V4", "V5", "V6"):
            assert any(r.startswith(kind + " ") for r in out.splitlines()), kind

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "census.txt"
        code, out, _ = run(capsys, "census", "--out", str(target))
        assert code == EX_OK and out == ""
        assert "census: 30" in target.read_text()


# ---------------------------------------------------------------- iso / aut


class TestIso:
    def test_witness_verifies(self, capsys):
        code, out, err = run(capsys, "iso", "perm:(1,2,4)@V5", "perm:(1,4,2)@V5")
        assert code == EX_OK and err == ""
        mapping = {}
        for row in out.splitlines():
            src, _, dst = row.partition(" -> ")
            mapping[src] = dst
        x = build(parse_spec_text("perm:(1,2,4)@V5")).psts
        y = build(parse_spec_text("perm:(1,4,2)@V5")).psts
        assert verify_point_map(x, y, mapping)

    def test_non_isomorphic(self, capsys):
        code, out, err = run(capsys, "iso", "perm:(1,2)@B2", "perm:(3,4)@B2")
        assert code == EX_NONISO
        assert out == ""
        assert "not isomorphic" in err

    def test_file_input(self, capsys, tmp_path):
        f = tmp_path / "x.psts"
        f.write_text(psts.to_text(build(parse_spec_text("kappa:id@G2")).psts))
        code, out, _ = run(capsys, "iso", str(f), "kappa:id@G2")
        assert code == EX_OK
        assert " -> " in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "iso", "/no/such/file.psts", "perm:id@G2")
        assert code == EX_NOINPUT
        assert "no such file" in err

    def test_malformed_file(self, capsys, tmp_path):
        f = tmp_path / "junk.psts"
        f.write_text("psts 2 1\nnot a structure\n")
        code, _, err = run(capsys, "aut", str(f))
        assert code == EX_DATAERR
        assert "bad PSTS file" in err


class TestAut:
    def test_order_and_generators(self, capsys):
        code, out, err = run(capsys, "aut", "kappa:id@V5")
        assert code == EX_OK and err == ""
        rows = out.splitlines()
        assert rows[0] == "order 3"
        gens = [r for r in rows[1:] if r.startswith("generator: ")]
        assert len(gens) >= 1

    def test_identity_only_group(self, capsys):
        # the two B2 plain-family classes with trivial-free automorphisms
        # still have order 8; use a file round trip to cover the path
        code, out, _ = run(capsys, "aut", "perm:id@B2")
        assert code == EX_OK
        assert out.splitlines()[0] == "order 8"


# ---------------------------------------------------------------- classify


class TestClassify:
    def test_text_header(self, capsys):
        code, out, err = run(capsys, "classify", "perm")
        assert code == EX_OK and err == ""
        assert out.splitlines()[0] == "plain family (perm), canonical axes: 43 classes"
        assert out.splitlines()[1].split() == ["id", "representative", "size", "k5", "aut", "br"]

    def test_structured(self, capsys):
        code, out, _ = run(capsys, "classify", "kappa", "--format", "structured")
        assert code == EX_OK
        doc = json.loads(out)
        assert doc["family"] == "kappa" and doc["axes"] == "canonical"
        assert len(doc["classes"]) == 25
        first = doc["classes"][0]
        assert set(first) >= {"id", "representative", "size", "key", "free_k5", "aut_order", "branch"}
        assert sum(c["size"] for c in doc["classes"]) == 144

    def test_jobs_flag_same_output(self, capsys):
        a = run(capsys, "classify", "perm", "--jobs", "1")
        b = run(capsys, "classify", "perm", "--jobs", "2")
        assert a == b


# ---------------------------------------------------------------- audit

# one canonical-axes audit run shared by the assertions below (they only
# read the emitted text, so a module-scoped capture keeps this at ~12 s)


@pytest.fixture(scope="module")
def audit_run(tmp_path_factory):
    target = tmp_path_factory.mktemp("audit") / "report.txt"
    code = main(["audit", "--axes", "canonical", "--out", str(target)])
    return code, target.read_text()


class TestAudit:
    def test_exit_code_flags_divergence(self, audit_run):
        code, _ = audit_run
        assert code == EX_MISMATCH

    def test_verdict_line(self, audit_run):
        _, text = audit_run
        assert text.rstrip().endswith("verdict: 5 MISMATCH")

    def test_claims_present(self, audit_run):
        _, text = audit_run
        for cid in ("fact_2_1", "lemma_3_3", "prop_4_5", "theorem_3_4", "theorem_4_9"):
            assert cid in text, cid


# ---------------------------------------------------------------- errors


class TestErrors:
    def test_no_arguments(self, capsys):
        code, _, err = run(capsys)
        assert code == EX_USAGE
        assert "usage error" in err

    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == EX_USAGE

    def test_bad_spec_text(self, capsys):
        code, _, err = run(capsys, "build", "perm:(1,2@G2")
        assert code == EX_DATAERR

    def test_unknown_axis(self, capsys):
        # bare word that is neither a kind, census token, nor a file
        code, _, err = run(capsys, "build", "perm:id@XX")
        assert code in (EX_DATAERR, EX_NOINPUT)

    def test_unwritable_out(self, capsys):
        code, _, err = run(capsys, "census", "--out", "/no/such/dir/census.txt")
        assert code == EX_IOERR
        assert "cannot write" in err
