"""Exit codes and output shapes of the command line front end."""

import json

from braidrep.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_text(capsys):
    code, out, _ = run(capsys, "eval", "--rep", "artin", "--n", "3", "--word", "s1 s2")
    assert code == 0
    assert "x1 ->" in out


def test_eval_json(capsys):
    code, out, _ = run(
        capsys, "eval", "--rep", "rho-d", "--n", "3", "--word", "s1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["images"]["x2"] == "x1^-1 x2"


def test_eval_bad_word_is_usage_error(capsys):
    code, _, err = run(capsys, "eval", "--rep", "artin", "--n", "3", "--word", "s9")
    assert code == 2
    assert "error" in err


def test_verify_pass_and_json(capsys):
    code, out, _ = run(
        capsys, "verify", "--rep", "rho-u", "--n", "3", "--g", "1", "--p", "1",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["pass"] is True
    assert all(row["pass"] for row in data["relators"])


def test_verify_mutated_fails(capsys):
    code, out, _ = run(
        capsys, "verify", "--rep", "artin", "--n", "4", "--mutate-seed", "3"
    )
    assert code == 1


def test_verify_rho_v_uses_outer_check(capsys):
    code, out, _ = run(
        capsys, "verify", "--rep", "rho-v", "--n", "3", "--g", "1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert any("outer" in row["schema"] for row in data["relators"])


def test_fixed_rejects_wrong_family(capsys):
    code, _, err = run(capsys, "fixed", "--rep", "artin", "--n", "3")
    assert code == 2


def test_fixed_passes(capsys):
    code, out, _ = run(
        capsys, "fixed", "--rep", "rho-w", "--n", "3", "--g", "1", "--p", "2",
        "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_artin_check_roundtrip(tmp_path, capsys):
    code, out, _ = run(
        capsys, "eval", "--rep", "artin", "--n", "3", "--word", "s1 s2^-1",
        "--format", "json",
    )
    endo_file = tmp_path / "endo.json"
    endo_file.write_text(out)
    code, out, _ = run(
        capsys, "artin-check", "--endo-file", str(endo_file), "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["pass"] is True


def test_artin_check_rejects_non_artin(tmp_path, capsys):
    data = {
        "alphabet": {"families": [["x", 2]]},
        "images": {"x1": "x2", "x2": "x1"},
    }
    endo_file = tmp_path / "swap.json"
    endo_file.write_text(json.dumps(data))
    code, out, _ = run(capsys, "artin-check", "--endo-file", str(endo_file))
    assert code == 1
    assert "REJECT" in out


def test_rewrite_word(capsys):
    code, out, _ = run(
        capsys, "rewrite", "--n", "4", "--g", "0", "--p", "1", "--word", "s3 s3"
    )
    assert code == 0
    assert "[t3]" in out


def test_rewrite_word_outside_subgroup(capsys):
    code, _, err = run(
        capsys, "rewrite", "--n", "4", "--g", "0", "--p", "1", "--word", "s3"
    )
    assert code == 2


def test_rewrite_relators_json(capsys):
    code, out, _ = run(
        capsys, "rewrite", "--n", "3", "--g", "1", "--p", "1", "--relators",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert rows and all("symbols" in row for row in rows)


def test_rewrite_roundtrip(capsys):
    code, out, _ = run(
        capsys, "rewrite", "--n", "3", "--g", "1", "--p", "1", "--roundtrip",
        "--samples", "5", "--seed", "1",
    )
    assert code == 0
    assert "5/5" in out


def test_list_presentations_json(capsys):
    code, out, _ = run(capsys, "list-presentations", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    families = {row["family"] for row in rows}
    assert "braid" in families and "artin-tits-d" in families


def test_missing_subcommand_is_usage_error(capsys):
    try:
        main([])
    except SystemExit as exc:
        assert exc.code == 2
    else:
        raise AssertionError("argparse should exit on missing subcommand")
