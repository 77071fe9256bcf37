import csv
import json
import shutil
import subprocess

import pytest

from qha import __version__
from qha.cli import config_hash, main


def run(tmp_path, *argv, name="out"):
    out = tmp_path / name
    code = main([*argv, "--out", str(out)])
    return code, out


def write_cfg(tmp_path, cfg, name="cfg.json"):
    p = tmp_path / name
    p.write_text(json.dumps(cfg))
    return str(p)


class TestVerify:
    def test_pass_and_outputs(self, tmp_path, capsys):
        code, out = run(tmp_path, "verify", "--n", "8")
        assert code == 0
        rep = json.loads((out / "verify.json").read_text())
        assert rep["header"]["tool"] == "qha" and rep["header"]["version"] == __version__
        assert rep["header"]["schema"] == 1
        text = (out / "verify.csv").read_text()
        assert text.startswith(f"# qha {__version__} verify config_hash={rep['header']['config_hash']}")
        rows = list(csv.reader(text.splitlines()[1:]))
        assert len(rows) > 10
        assert "PASS" in capsys.readouterr().out

    def test_byte_identical(self, tmp_path):
        _, a = run(tmp_path, "verify", "--n", "8,10", "--seed", "7", name="a")
        _, b = run(tmp_path, "verify", "--n", "8,10", "--seed", "7", name="b")
        for f in ("verify.json", "verify.csv"):
            assert (a / f).read_bytes() == (b / f).read_bytes()

    def test_zero_tolerance_fails(self, tmp_path):
        cfg = write_cfg(tmp_path, {"schema": 1, "n": [8], "tolerances": {"weyl": 0.0}})
        code, _ = run(tmp_path, "verify", "--config", cfg)
        assert code == 1

    def test_seed_changes_hash(self, tmp_path):
        _, a = run(tmp_path, "verify", "--n", "8", "--seed", "1", name="a")
        _, b = run(tmp_path, "verify", "--n", "8", "--seed", "2", name="b")
        ha = json.loads((a / "verify.json").read_text())["header"]["config_hash"]
        hb = json.loads((b / "verify.json").read_text())["header"]["config_hash"]
        assert ha != hb


class TestConfigErrors:
    @pytest.mark.parametrize(
        "argv",
        [
            ["verify", "--n", "7"],
            ["verify", "--n", "4"],
            ["verify", "--n", "eight"],
            ["verify", "--seed", "-1"],
            ["verify", "--format", "xml"],
            ["frobnicate"],
            [],
        ],
    )
    def test_usage_exit_2(self, tmp_path, argv):
        assert main([*argv, "--out", str(tmp_path)] if argv else []) == 2

    @pytest.mark.parametrize(
        "cfg",
        [
            {"schema": 2},
            {"schema": 1, "bogus": 1},
            {"schema": 1, "tolerances": {"weyl": -1}},
            {"schema": 1, "tolerances": {"nope": 1e-3}},
            {"schema": 1, "format": "xml"},
            {"schema": 1, "n": [9]},
        ],
    )
    def test_bad_config_exit_2(self, tmp_path, cfg):
        assert main(["verify", "--config", write_cfg(tmp_path, cfg), "--out", str(tmp_path / "o")]) == 2

    def test_unreadable(self, tmp_path):
        assert main(["verify", "--config", str(tmp_path / "missing.json")]) == 2
        p = tmp_path / "bad.json"
        p.write_text("{not json")
        assert main(["verify", "--config", str(p)]) == 2
        p.write_text("[1, 2]")
        assert main(["verify", "--config", str(p)]) == 2

    def test_fg_size_limit(self, tmp_path):
        assert main(["fg", "--n", "64", "--out", str(tmp_path)]) == 2

    def test_version(self, capsys):
        assert main(["--version"]) == 0
        assert __version__ in capsys.readouterr().out


class TestConfigHash:
    def test_order_and_out_independent(self):
        a = {"schema": 1, "n": [8], "seed": 0, "out": "x"}
        b = {"out": "y", "seed": 0, "n": [8], "schema": 1}
        assert config_hash(a) == config_hash(b)
        assert config_hash(a) != config_hash({**a, "seed": 1})
        assert len(config_hash(a)) == 64


class TestTauber:
    def test_default_masks(self, tmp_path):
        code, out = run(tmp_path, "tauber", "--n", "16,32")
        assert code == 0
        rep = json.loads((out / "tauber.json").read_text())
        v = {(r["mask"], r["window"]): r["verdicts"] for r in rep["reports"]}
        chirp = next(val for (m, _), val in v.items() if m.startswith("chirp"))
        plane = next(val for (m, _), val in v.items() if m.startswith("plane_wave"))
        assert chirp == {"i": "pass-trend", "ii": "pass-trend", "iii": "pass-trend"}
        assert plane == {"i": "fail", "ii": "fail", "iii": "fail"}
        # the gaussian window has seam zeros, so the residual is a pseudo residual
        cell = rep["reports"][0]["per_n"]["16"]
        assert cell["residual_mode"] == "pseudo" and cell["wiener_ok"] is False
        assert (out / "tauber.csv").exists()

    def test_random_window_exact(self, tmp_path):
        cfg = write_cfg(
            tmp_path,
            {"schema": 1, "n": [16], "masks": [{"kind": "chirp"}], "windows": [{"kind": "random", "seed": 3}]},
        )
        code, out = run(tmp_path, "tauber", "--config", cfg)
        assert code == 0
        cell = json.loads((out / "tauber.json").read_text())["reports"][0]["per_n"]["16"]
        assert cell["residual_mode"] == "exact" and cell["residual"] <= 1e-8

    def test_byte_identical(self, tmp_path):
        _, a = run(tmp_path, "tauber", "--n", "16", name="a")
        _, b = run(tmp_path, "tauber", "--n", "16", name="b")
        assert (a / "tauber.json").read_bytes() == (b / "tauber.json").read_bytes()
        assert (a / "tauber.csv").read_bytes() == (b / "tauber.csv").read_bytes()


class TestOtherCommands:
    def test_quantize_csv(self, tmp_path):
        code, out = run(tmp_path, "quantize", "--n", "16", "--format", "csv")
        assert code == 0
        assert (out / "quantize.csv").exists() and not (out / "quantize.json").exists()

    def test_iso(self, tmp_path):
        code, out = run(tmp_path, "iso", "--n", "32")
        assert code == 0
        rep = json.loads((out / "iso.json").read_text())
        assert rep["header"]["command"] == "iso"

    def test_iso_not_invertible(self, tmp_path):
        cfg = write_cfg(tmp_path, {"schema": 1, "n": [16], "masks": [{"kind": "indicator_disk", "r": 0.5}]})
        code, _ = run(tmp_path, "iso", "--config", cfg)
        assert code == 1

    def test_fg(self, tmp_path):
        assert run(tmp_path, "fg", "--n", "16")[0] == 0

    def test_berezin(self, tmp_path):
        code, out = run(tmp_path, "berezin", "--n", "8")
        assert code == 0 and (out / "berezin.json").exists()


@pytest.mark.skipif(shutil.which("qha") is None, reason="console script not installed")
def test_console_script(tmp_path):
    p = subprocess.run(["qha", "verify", "--n", "8", "--out", str(tmp_path)], capture_output=True, text=True)
    assert p.returncode == 0
    p = subprocess.run(["qha", "verify", "--n", "7"], capture_output=True, text=True)
    assert p.returncode == 2
