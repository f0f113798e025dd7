"""Command line interface: flags, exit codes, report formats, config files."""

import json

import pytest

jsonschema = pytest.importorskip("jsonschema")

from pgl3chow import cli
from pgl3chow.config import ConfigError, parse_config


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestList:
    def test_lists_all_checks_with_anchors(self, capsys):
        code, out, _ = run_cli(capsys, "list")
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip()]
        assert len(lines) >= 18
        assert all("anchor:" in line for line in lines)


class TestCheck:
    def test_single_check_passes(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--name", "point-class")
        assert code == 0
        assert "point-class: pass" in out

    def test_unknown_check_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "check", "--name", "bogus")
        assert code == 2
        assert "unknown check" in err

    def test_all_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--all", "--format", "json")
        # hsurj-restrictions fails by design: the published c6 coefficient is
        # contradicted by the computation, so --all exits nonzero.
        assert code == 1
        payload = json.loads(out)
        jsonschema.validate(payload, cli.REPORT_SCHEMA)
        assert len(payload["results"]) == 18
        assert payload["summary"] == {"pass": 17, "fail": 1, "error": 0}
        failing = [r for r in payload["results"] if r["verdict"] == "fail"]
        assert [r["name"] for r in failing] == ["hsurj-restrictions"]

    def test_text_and_json_agree(self, capsys):
        code_t, text_out, _ = run_cli(capsys, "check", "--name",
                                      "a3mu3-chern", "--format", "text")
        code_j, json_out, _ = run_cli(capsys, "check", "--name",
                                      "a3mu3-chern", "--format", "json")
        assert code_t == code_j == 0
        payload = json.loads(json_out)
        result = payload["results"][0]
        assert f"a3mu3-chern: {result['verdict']}" in text_out
        for label, value in result["witnesses"].items():
            assert f"{label}: {value}" in text_out

    def test_json_deterministic_up_to_timing(self, capsys):
        _, first, _ = run_cli(capsys, "check", "--name", "gamma-syzygy",
                              "--format", "json")
        _, second, _ = run_cli(capsys, "check", "--name", "gamma-syzygy",
                               "--format", "json")

        def strip(doc):
            payload = json.loads(doc)
            for result in payload["results"]:
                result.pop("elapsed_ms")
            return payload

        assert strip(first) == strip(second)

    def test_max_degree_override(self, capsys):
        code, out, _ = run_cli(capsys, "check", "--name", "gamma-generation",
                               "--max-degree", "4")
        assert code == 0
        assert "0..4" in out

    def test_negative_max_degree_rejected(self, capsys):
        code, _, err = run_cli(capsys, "check", "--name", "gamma-generation",
                               "--max-degree", "-1")
        assert code == 2

    def test_missing_selection_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "check")
        assert code == 2


class TestHilbert:
    def test_builtin_rstar_rows(self, capsys):
        code, out, _ = run_cli(capsys, "hilbert", "--spec", "builtin:Rstar",
                               "--max-degree", "4")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "0: Z"
        assert lines[3] == "3: Z"
        assert lines[4] == "4: Z ⊕ Z/3"

    def test_unknown_builtin_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "hilbert", "--spec", "builtin:nope",
                               "--max-degree", "2")
        assert code == 2
        assert "unknown builtin" in err

    def test_presentation_from_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "pres.cfg"
        cfg.write_text(
            "[presentation torsion-line]\n"
            "generators = g:1\n"
            "relation = 3*g\n")
        code, out, _ = run_cli(capsys, "hilbert", "--spec", str(cfg),
                               "--max-degree", "3")
        assert code == 0
        assert out.splitlines() == ["0: Z", "1: Z/3", "2: Z/3", "3: Z/3"]

    def test_parse_failure_exits_2(self, capsys, tmp_path):
        cfg = tmp_path / "broken.cfg"
        cfg.write_text("[presentation p]\ngenerators = g:one\n")
        code, _, err = run_cli(capsys, "hilbert", "--spec", str(cfg),
                               "--max-degree", "2")
        assert code == 2


class TestConfigFile:
    def test_options_section(self, capsys, tmp_path):
        cfg = tmp_path / "opts.cfg"
        cfg.write_text(
            "[options]\n"
            "format = json\n"
            "max-degree gamma-generation = 4\n")
        code, out, _ = run_cli(capsys, "--config", str(cfg),
                               "check", "--name", "gamma-generation")
        assert code == 0
        payload = json.loads(out)
        assert payload["results"][0]["witnesses"]["checked degrees"] == "0..4"

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError, match="unknown options key"):
            parse_config("[options]\ncolour = green\n")

    def test_unknown_section_rejected(self):
        with pytest.raises(ConfigError, match="unknown section kind"):
            parse_config("[widgets w]\n")

    def test_group_section_closure_validated(self):
        good = parse_config(
            "[group swap]\n"
            "context = x y\n"
            "element e = 1 0 / 0 1\n"
            "element s = 0 1 / 1 0\n")
        assert good.groups["swap"].closure_check().order == 2
        with pytest.raises(ConfigError, match="closure"):
            parse_config(
                "[group shear]\n"
                "context = x y\n"
                "element e = 1 0 / 0 1\n"
                "element m = 1 1 / 0 1\n")

    def test_rep_section(self):
        cfg = parse_config(
            "[rep pair]\n"
            "lattice = T_SL3_u\n"
            "weight = 1 0\n"
            "weight = 0 1 * 2\n")
        rep = cfg.representations["pair"]
        assert rep.dimension == 3
        assert rep.multiplicity((0, 1)) == 2

    def test_rep_unknown_lattice_rejected(self):
        with pytest.raises(ConfigError, match="unknown lattice"):
            parse_config("[rep r]\nlattice = nowhere\nweight = 1\n")

    def test_constraint_section(self):
        cfg = parse_config(
            "[constraint shift]\n"
            "context = x1 x2 x3\n"
            "shift = 1 1 1\n")
        assert cfg.constraints["shift"].constraint.direction == (1, 1, 1)

    def test_bad_config_path_exits_2(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "--config", str(tmp_path / "absent.cfg"),
                               "list")
        assert code == 2
