import json
from importlib import resources

import jsonschema
import pytest

from circnut.cli import main

from reference_tables import FOLDED_REMAINDERS, REMAINDERS_GAP3

SCHEMAS = json.loads(
    resources.files("circnut").joinpath("schemas.json").read_text()
)


def validate(doc, name):
    schema = dict(SCHEMAS)
    schema["$ref"] = f"#/commands/{name}"
    jsonschema.validate(doc, schema)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == 0, out
    return json.loads(out)


def test_nut_check(capsys):
    doc = run_json(capsys, "nut-check", "--order", "14", "--set", "1,2,3,4")
    assert doc["is_nut"] is True
    assert doc["reason"] == "Nut"
    assert doc["zero_multiplicity"] == 1
    assert doc["order"] == 14 and doc["set"] == [1, 2, 3, 4]
    validate(doc, "nut-check")

    doc = run_json(capsys, "nut-check", "--order", "16", "--set", "1,2,3,4")
    assert doc["reason"] == "CyclotomicWitness"
    assert doc["witness_b"] == 4
    assert doc["zero_multiplicity"] == 3
    validate(doc, "nut-check")

    doc = run_json(capsys, "nut-check", "--order", "8", "--set", "5")
    assert doc["reason"] == "GeneratorTooLarge"
    assert doc["zero_multiplicity"] is None
    validate(doc, "nut-check")


def test_oracle_command(capsys):
    doc = run_json(capsys, "oracle", "--order", "14", "--set", "1,2,3,4")
    assert doc["nullity"] == 1
    assert doc["is_nut"] is True
    assert doc["kernel_basis"] == [[(-1) ** (i + 1) for i in range(14)]]
    validate(doc, "oracle")


def test_exhaust_command(capsys):
    docs = run_json(capsys, "exhaust", "--order", "16", "--t", "2")
    assert len(docs) == 18
    assert {d["nullity"] for d in docs} == {3, 5, 9}
    assert not any(d["is_nut"] for d in docs)
    validate(docs, "exhaust")
    # worker count must not affect output
    jobs4 = run_json(capsys, "exhaust", "--order", "16", "--t", "2", "--jobs", "4")
    assert jobs4 == docs


def test_universal_command(capsys):
    doc = run_json(capsys, "universal", "--set", "1,2,4,5,6,7")
    assert doc["universal"] is True
    assert doc["degree_bound"] == 14
    assert doc["min_order"] == 16
    assert doc["failing_b"] == []
    validate(doc, "universal")


def test_cyclotomic_command(capsys):
    code, out = run(capsys, "cyclotomic", "18")
    assert code == 0
    assert out == "y^6 - y^3 + 1\n"


def test_pstar_table_text(capsys):
    code, out = run(capsys, "pstar-table", "--set", "1,2,4,5,6,7")
    assert code == 0
    expected = "".join(
        f"{b}: {REMAINDERS_GAP3[b]}\n" for b in sorted(REMAINDERS_GAP3)
    )
    assert out == expected


def test_pstar_table_latex(capsys):
    code, out = run(
        capsys, "pstar-table", "--set", "1,2,4,5,6,7", "--format", "latex"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "\\begin{tabular}{rl}"
    assert lines[-1] == "\\end{tabular}"
    rows = [ln for ln in lines if ln and ln[0].isdigit()]
    assert rows == [
        f"{b} & ${REMAINDERS_GAP3[b]}$ \\\\" for b in sorted(REMAINDERS_GAP3)
    ]


def test_appendix_table_text(capsys):
    code, out = run(capsys, "appendix-table", "--b", "3", "--format", "text")
    assert code == 0
    assert out == "0: 6y + 3\n1: y - 1\n2: -y - 2\n"


def test_appendix_table_latex(capsys):
    code, out = run(capsys, "appendix-table", "--b", "5", "--format", "latex")
    assert code == 0
    rows = [ln for ln in out.splitlines() if ln and ln[0].isdigit()]
    assert rows == [
        f"{r} & ${FOLDED_REMAINDERS[5][r]}$ \\\\" for r in range(5)
    ]


def test_appendix_table_extension_note(capsys):
    code, out = run(capsys, "appendix-table", "--b", "4")
    assert code == 0
    assert out.startswith("# extension:")


def test_predicate_commands(capsys):
    doc = run_json(
        capsys, "predicate", "thm3", "--n", "14", "--x", "1", "--t", "2"
    )
    assert doc == {"predicate": "thm3", "n": 14, "x": 1, "t": 2, "value": True}
    validate(doc, "predicate")

    doc = run_json(capsys, "predicate", "lemma5", "--t", "11", "--n", "50")
    assert doc == {"predicate": "lemma5", "t": 11, "n": 50, "value": True}
    validate(doc, "predicate")


def test_claim1_command(capsys):
    doc = run_json(capsys, "claim1", "--t", "3", "--p", "5")
    assert doc == {"t": 3, "p": 5, "unique_exponent": 4}
    validate(doc, "claim1")


def test_lemma7_command(capsys):
    doc = run_json(capsys, "lemma7", "--t", "2")
    assert doc == {"t": 2, "order": 12, "sets_checked": 3, "holds": True}
    validate(doc, "lemma7")


def test_find_pt_command(capsys):
    doc = run_json(capsys, "find-pt", "--t", "11")
    assert doc["p"] == 5
    assert doc["report"]["universal"] is True
    validate(doc, "find-pt")


def test_find_qr_command(capsys):
    doc = run_json(capsys, "find-qr", "--t", "4")
    assert doc["t"] == 4
    assert len(doc["pairs"]) == 1
    assert doc["pairs"][0]["report"]["universal"] is True
    validate(doc, "find-qr")


def test_scan_command(capsys):
    code, out = run(capsys, "scan", "--from", "3", "--to", "5")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 3
    for line in lines:
        validate(json.loads(line), "scan-record")
    assert [json.loads(ln)["t"] for ln in lines] == [3, 4, 5]

    # --resume-from skips already-finished values of t
    code, resumed = run(capsys, "scan", "--from", "3", "--to", "5",
                        "--resume-from", "5")
    assert resumed.strip().splitlines() == lines[2:]

    # worker count never changes the stream
    code, wide = run(capsys, "scan", "--from", "3", "--to", "5", "--jobs", "4")
    assert wide == out


def test_scan_latex(capsys):
    code, out = run(
        capsys, "scan", "--from", "3", "--to", "4", "--format", "latex"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "3 & $S_{3}$ \\\\"
    assert lines[1].startswith("4 & $\\{1,\\dots,10\\}\\setminus\\{")


def test_precondition_errors(capsys):
    code, out = run(capsys, "nut-check", "--order", "1", "--set", "1")
    assert code == 1
    doc = json.loads(out)
    assert doc["error"] == "precondition"
    validate(doc, "error")

    code, out = run(capsys, "lemma7", "--t", "8")
    assert code == 1
    validate(json.loads(out), "error")

    code, out = run(capsys, "appendix-table", "--b", "2")
    assert code == 1
    validate(json.loads(out), "error")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["nut-check", "--order", "14", "--set", "1,1"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nut-check", "--order", "14", "--set", "0,2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nut-check", "--order", "14", "--set", "a,b"])
    assert exc.value.code == 2


def test_console_script_runs():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "circnut.cli", "cyclotomic", "12"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "y^4 - y^2 + 1\n"
