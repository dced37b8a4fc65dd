import json
import subprocess
import sys

import pytest

from pbent.cli.main import EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, main

F81 = "p=3,n=4,mod=[2,0,0,2,1]"
F729 = "p=3,n=6,mod=[2,2,1,0,2,0,1]"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_field_info(capsys):
    code, out, _ = run(capsys, "field-info", F729)
    assert code == EXIT_OK
    assert "order: 729" in out
    assert "primitive: true" in out
    assert "subfields: F_3, F_9, F_27" in out
    code, out, _ = run(capsys, "field-info", F81, "--json")
    rep = json.loads(out)
    assert rep["schema"] == 1 and rep["subfields"] == ["F_3", "F_9"]


@pytest.mark.parametrize(
    "spec",
    [
        "p=3,n=6,mod=[1,2,1,0,2,0,1]",  # reducible
        "p=4,n=2,mod=[1,1,1]",
        "p=3,n=2,mod=[1,0,2]",
        "garbage",
    ],
)
def test_field_info_rejects(capsys, spec):
    code, _, err = run(capsys, "field-info", spec)
    assert code == EXIT_INPUT
    assert err.startswith("error:")


def test_analyze_example_case(capsys, tmp_path):
    spec = json.dumps({"family": "theorem1", "field": F729,
                       "params": {"lambda": "g^84", "u": "g^4", "v": "g^6"}})
    dump = tmp_path / "spec.tsv"
    code, out, _ = run(capsys, "analyze", spec, "--naive", "--dump-spectrum", str(dump))
    assert code == EXIT_OK
    rep = json.loads(out)
    assert list(rep)[0] == "schema"
    assert rep["triple"] == [1, 0, 0]
    assert rep["predicted"] == rep["verdict"] == "bent"
    assert len(dump.read_text().splitlines()) == 730


def test_analyze_from_file_with_degree(capsys, tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"family": "theorem5", "field": "p=5,n=3,mod=[3,3,0,1]",
                                "params": {"lambda": "g^9", "u": "g^14"}}))
    code, out, _ = run(capsys, "analyze", str(path), "--degree", "--dual")
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["verdict"] == "bent" and rep["degree"] == 5
    assert rep["conditions"]["all_hold"] is True
    assert len(rep["dual_table"]) == 125


def test_analyze_pair_domain(capsys):
    spec = json.dumps({"family": "theorem3", "field": F81,
                       "params": {"pi": {"a": "g^1", "r": 2}, "u": ["g^4", "g^5"], "v": ["g^10", "g^46"]}})
    code, out, _ = run(capsys, "analyze", spec)
    rep = json.loads(out)
    assert code == EXIT_OK
    assert rep["triple"] == [2, 0, 0] and rep["verdict"] == "2-plateaued"


@pytest.mark.parametrize(
    "spec",
    [
        '{"family": "sidelnikov", "field": "p=3,n=4,mod=[2,0,0,2,1]", "params": {"lambda": "0"}}',
        '{"family": "kasami", "field": "p=3,n=4,mod=[2,0,0,2,1]", "params": {"lambda": "g^1"}}',
        '{"family": "nope", "field": "p=3,n=4,mod=[2,0,0,2,1]"}',
        '{"family": "kasami", "field": ',
        "/does/not/exist.json",
    ],
)
def test_analyze_input_errors(capsys, spec):
    code, _, err = run(capsys, "analyze", spec)
    assert code == EXIT_INPUT
    assert "error:" in err


def test_degree_command(capsys):
    spec = json.dumps({"family": "theorem4", "field": "p=7,n=4,mod=[3,4,5,0,1]",
                       "params": {"lambda": "g^200", "u": "g^90"}})
    code, out, _ = run(capsys, "degree", spec)
    assert code == EXIT_OK and out.strip() == "7"
    pair = json.dumps({"family": "zero", "field": F81, "params": {"domain": "pair"}})
    assert run(capsys, "degree", pair)[0] == EXIT_INPUT


def test_invert_linearized(capsys):
    code, out, _ = run(capsys, "invert-linearized", F81, "1*x^p2 + g^1*x", "--json")
    rep = json.loads(out)
    assert code == EXIT_OK and rep["method"] == "binomial"
    code, out, _ = run(capsys, "invert-linearized", F81, "1*x^p + 1*x^p2 + g^1*x")
    assert code == EXIT_OK and "method: linear-solve" in out
    code, _, err = run(capsys, "invert-linearized", F81, "1*x^p2 + 2*x")
    assert code == EXIT_INPUT  # x^9 - x kills F_9


def test_survey_command(capsys, tmp_path):
    out_path = tmp_path / "s.tsv"
    code, out, _ = run(capsys, "survey", "theorem2", F729, "--sample", "40", "--seed", "2",
                       "--out", str(out_path))
    assert code == EXIT_OK
    assert "records\t40" in out and "mismatches\t0" in out
    assert len(out_path.read_text().splitlines()) == 41
    assert run(capsys, "survey", "theorem2", F729)[0] == EXIT_INPUT
    assert run(capsys, "survey", "theorem1", "p=3,n=2,mod=[2,2,1]", "--exhaustive")[0] == EXIT_INPUT


def test_verify_distribution_suite(capsys):
    code, out, _ = run(capsys, "verify-paper", "--suite", "distributions")
    assert code == EXIT_OK
    assert out.count("PASS") == 2
    assert "hard checks: 2/2 passed" in out


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_MISMATCH, EXIT_INPUT) == (0, 1, 2)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pbent", "field-info", F81],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "order: 81" in proc.stdout
