"""End-to-end checks of the command line surface.

Everything runs in process through cli.main so we can assert on exit
codes and captured output without spawning interpreters.
"""

import json

import pytest

from milnor import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out), err


def test_solve_human_output_lists_all_pairs(capsys):
    code, out, _ = run(capsys, "solve", "105")
    assert code == cli.EXIT_OK
    pair_lines = [ln for ln in out.splitlines() if ln.startswith("  (")]
    assert len(pair_lines) == 8
    assert pair_lines[0] == "  (29, 1)"


def test_solve_json_matches_library(capsys):
    code, payload, _ = run_json(capsys, "solve", "105")
    assert code == cli.EXIT_OK
    assert payload["k"] == 105
    assert [29, 1] in payload["solutions"]
    assert [-211, 209] in payload["solutions"]
    assert len(payload["solutions"]) == 8


def test_json_output_is_byte_deterministic(capsys):
    _, first, _ = run(capsys, "solve", "105", "--json")
    _, second, _ = run(capsys, "solve", "105", "--json")
    assert first == second
    _, third, _ = run(capsys, "isotropy", "-3", "5", "1", "5", "--json")
    _, fourth, _ = run(capsys, "isotropy", "-3", "5", "1", "5", "--json")
    assert third == fourth


def test_canonical_and_euler_round_trip(capsys):
    code, payload, _ = run_json(capsys, "canonical", "105")
    assert code == cli.EXIT_OK
    p_minus, p_plus = payload["solution"]
    code2, payload2, _ = run_json(
        capsys, "euler", str(p_minus), str(p_plus))
    assert code2 == cli.EXIT_OK
    assert payload2["k"] == 105


def test_classify_reports_bundle_pair(capsys):
    code, payload, _ = run_json(capsys, "classify", "5", "-3", "1", "5")
    assert code == cli.EXIT_OK
    assert payload["k"] == 3
    assert payload["l"] == 2
    assert payload["euler_number"] == 5
    assert payload["homotopy_sphere"] is False


def test_isotropy_payload_names_orbit_types(capsys):
    code, payload, _ = run_json(capsys, "isotropy", "-3", "5", "1", "5")
    assert code == cli.EXIT_OK
    assert "SO(2)" not in payload["types"]
    assert payload["almost_free"] is True
    assert payload["disc_extension"] in (
        "extension_excluded", "inconclusive", "not_applicable")


def test_table42_agrees_and_exits_zero(capsys):
    code, payload, _ = run_json(capsys, "table42", "3", "-2")
    assert code == cli.EXIT_OK
    assert sorted(payload["dihedral_orders"]) == payload["closed_form_orders"]


def test_table42_without_family_index_is_a_domain_error(capsys):
    code, _, err = run(capsys, "table42", "1", "0")
    assert code == cli.EXIT_DOMAIN
    assert "error:" in err


def test_table42_family_index_accepted(capsys):
    code, payload, _ = run_json(capsys, "table42", "1", "0", "--n", "3")
    assert code == cli.EXIT_OK
    assert payload["n"] == 3


def test_ek_and_diffeo_commands(capsys):
    code, payload, _ = run_json(capsys, "ek", "2")
    assert code == cli.EXIT_OK
    assert payload["class_mod_28"] == 1
    assert payload["standard_sphere"] is False

    code2, payload2, _ = run_json(capsys, "diffeo", "2", "58")
    assert code2 == cli.EXIT_OK
    assert payload2["diffeomorphic"] is True

    code3, payload3, _ = run_json(capsys, "diffeo", "2", "3")
    assert code3 == cli.EXIT_OK
    assert payload3["diffeomorphic"] is False


def test_brieskorn_and_rp5_commands(capsys):
    code, payload, _ = run_json(capsys, "brieskorn", "5", "3")
    assert code == cli.EXIT_OK
    assert payload["dimension"] == 9
    assert payload["exotic"] is True

    code2, _, err = run(capsys, "rp5", "4")
    assert code2 == cli.EXIT_DOMAIN
    assert "error:" in err


def test_s7class_command(capsys):
    code, payload, _ = run_json(capsys, "s7class", "5")
    assert code == cli.EXIT_OK
    assert payload["class_mod_12"] == 3
    assert payload["achievable"] == [0, 1, 3, 4, 6, 7, 9, 10]


def test_cohomology_command(capsys):
    code, out, _ = run(capsys, "cohomology", "sphere2", "5")
    assert code == cli.EXIT_OK
    assert "H^" in out

    code2, _, err = run(capsys, "cohomology", "sphere3", "1")
    assert code2 == cli.EXIT_DOMAIN
    assert "error:" in err


def test_curvature_scan_reports_oracle_gap(capsys):
    code, payload, _ = run_json(
        capsys, "curvature-scan", "--a", "1", "--budget", "2000")
    assert code == cli.EXIT_OK
    assert payload["min_sectional"] >= -1e-9
    assert payload["oracle_max_gap"] < 1e-8


def test_curvature_scan_finds_negative_plane(capsys):
    code, payload, _ = run_json(
        capsys, "curvature-scan", "--a", "1.05", "--budget", "20000",
        "--find-negative")
    assert code == cli.EXIT_OK
    assert payload["negative_plane_found"] is True
    assert payload["negative_value"] < 0


def test_curvature_scan_negative_search_can_fail(capsys):
    code, payload, _ = run_json(
        capsys, "curvature-scan", "--algebra", "su2", "--subalgebra",
        "span-i", "--a", "1", "--budget", "3000", "--find-negative")
    assert code == cli.EXIT_FAILED
    assert payload["negative_plane_found"] is False


def test_glue_certificate_passes(capsys):
    code, payload, _ = run_json(capsys, "glue", "--a", "4/3", "--r", "1")
    assert code == cli.EXIT_OK
    assert payload["passed"] is True
    assert payload["matching_level"] == 2.0
    names = [c["name"] for c in payload["clauses"]]
    assert "plateau_match" in names


def test_glue_writes_csv(tmp_path, capsys):
    target = tmp_path / "profile.csv"
    code, out, _ = run(capsys, "glue", "--a", "4/3", "--r", "1",
                       "--csv", str(target))
    assert code == cli.EXIT_OK
    assert str(target) in out
    lines = target.read_text().splitlines()
    assert lines[0] == "t,f,orbit_factor"
    assert len(lines) > 100


def test_glue_rejects_undeformed_metric(capsys):
    code, _, err = run(capsys, "glue", "--a", "1", "--r", "1")
    assert code == cli.EXIT_DOMAIN
    assert "error:" in err


def test_solve_zero_without_bound_is_domain_error(capsys):
    code, _, err = run(capsys, "solve", "0")
    assert code == cli.EXIT_DOMAIN
    assert "error:" in err


def test_repro_all_is_clean(capsys):
    code, payload, _ = run_json(capsys, "repro", "all")
    assert code == cli.EXIT_OK
    assert payload["ok"] is True
    assert sorted(payload["results"]) == [
        "ek16", "k105", "s7", "table42", "thm45"]


def test_repro_detects_tampered_expectations(capsys, monkeypatch):
    expected = cli.load_expected()
    tampered = dict(expected)
    tampered["euler105"] = expected["euler105"][:-1]
    monkeypatch.setattr(cli, "load_expected", lambda: tampered)
    code, out, _ = run(capsys, "repro", "k105")
    assert code == cli.EXIT_FAILED
    assert "MISMATCH" in out


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["solve"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2
    capsys.readouterr()
