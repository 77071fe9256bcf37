"""Command-line front end: ``qha verify|tauber|quantize|iso|fg|berezin``.

Every command reads an optional JSON config (``"schema": 1``), lets
``--n``, ``--seed``, ``--out`` and ``--format`` override it, and writes one
report per command into the output directory.  Reports start with a header
holding the tool version, the sha256 of the effective config and the
tolerance table; they carry no timestamps, so identical inputs give
byte-identical files.

Exit codes: 0 pass, 1 failure (a suite over tolerance or an experiment cell
that raised), 2 usage or config error.
"""

from __future__ import annotations

import argparse
import copy
import csv
import hashlib
import io as _io
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .core import GridSpec, atom, decay_profile, mask
from .io import dumps, format_float, to_json_obj
from .suites import DEFAULT_TOLERANCES, SUITES, run_suites

__all__ = ["main", "build_parser", "load_config", "ConfigError", "config_hash"]

COMMANDS = ("verify", "tauber", "quantize", "iso", "fg", "berezin")
SCHEMA = 1

_DEFAULTS = {
    "verify": {"n": [8, 16]},
    "tauber": {
        "n": [16, 32],
        "masks": [{"kind": "chirp"}, {"kind": "plane_wave", "z0": [1, 2]}, {"kind": "constant", "value": 1.0}],
        "windows": [{"kind": "gaussian"}],
        "A": 0.0,
    },
    "quantize": {
        "n": [16, 32, 64],
        "quantizers": [{"kind": "tau", "tau": 0.3}, {"kind": "tau", "tau": 0.5}, {"kind": "born_jordan"}],
        "masks": [{"kind": "chirp"}, {"kind": "gaussian_env"}],
        "bj_nodes": 64,
    },
    "iso": {
        "n": [32, 48, 64],
        "masks": [{"kind": "indicator_disk_complement", "r": 1.0}],
        "windows": [{"kind": "gaussian"}, {"kind": "random_hermite", "seed": 0}],
    },
    "fg": {
        "n": [16, 32],
        "masks": [{"kind": "chirp"}, {"kind": "plane_wave", "z0": [2, 1]}],
        "A": 0.0,
        "R_freq": 1.0,
    },
    "berezin": {
        "n": [8, 16],
        "masks": [{"kind": "gaussian_env"}],
        "windows": [{"kind": "gaussian"}],
    },
}

_COMMON = {"schema": 1, "seed": 0, "format": "json", "out": "qha-out", "eps": 0.01,
           "radii_fracs": [0.0, 0.2, 0.4, 0.6, 0.8], "tolerances": {}}
_KNOWN_KEYS = set(_COMMON) | {"n", "masks", "windows", "A", "quantizers", "R_freq", "bj_nodes", "suites"}


class ConfigError(ValueError):
    """Malformed configuration or command line; maps to exit code 2."""


# ----------------------------------------------------------------------------
# configuration
# ----------------------------------------------------------------------------

def _parse_n_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"--n expects a comma-separated list of integers, got {text!r}") from exc


def _as_complex(value, what: str) -> complex:
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    raise ConfigError(f"{what} must be a number or an [re, im] pair, got {value!r}")


def _validate(cfg: dict, command: str) -> dict:
    unknown = set(cfg) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if cfg.get("schema") != SCHEMA:
        raise ConfigError(f"config needs \"schema\": {SCHEMA}, got {cfg.get('schema')!r}")
    ns = cfg.get("n")
    if not isinstance(ns, list) or not ns:
        raise ConfigError("\"n\" must be a non-empty list of grid sizes")
    for n in ns:
        try:
            GridSpec(n)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad grid size {n!r}: {exc}") from exc
    seed = cfg.get("seed")
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < 2**64:
        raise ConfigError(f"\"seed\" must be an unsigned 64-bit integer, got {seed!r}")
    if cfg.get("format") not in ("json", "csv"):
        raise ConfigError(f"\"format\" must be json or csv, got {cfg.get('format')!r}")
    tol = cfg.get("tolerances")
    if not isinstance(tol, dict):
        raise ConfigError("\"tolerances\" must be an object")
    for k, v in tol.items():
        if k not in DEFAULT_TOLERANCES:
            raise ConfigError(f"unknown tolerance {k!r}; known: {sorted(DEFAULT_TOLERANCES)}")
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not v >= 0:
            raise ConfigError(f"tolerance {k!r} must be a non-negative number, got {v!r}")
    for key in ("masks", "windows", "quantizers"):
        items = cfg.get(key, [])
        if not isinstance(items, list) or not all(isinstance(x, dict) and "kind" in x for x in items):
            raise ConfigError(f"\"{key}\" must be a list of objects with a \"kind\" field")
    if "suites" in cfg:
        bad = [s for s in cfg["suites"] if s not in SUITES]
        if bad:
            raise ConfigError(f"unknown suites {bad}; known: {list(SUITES)}")
    if "A" in cfg:
        _as_complex(cfg["A"], "\"A\"")
    if command == "fg" and max(ns) > 32:
        raise ConfigError("fg builds a 4-D table and supports n <= 32")
    return cfg


def load_config(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    return cfg


def effective_config(command: str, file_cfg: dict | None, args) -> dict:
    cfg = copy.deepcopy(_COMMON)
    cfg.update(copy.deepcopy(_DEFAULTS[command]))
    if file_cfg:
        cfg.update(copy.deepcopy(file_cfg))
    if args.n is not None:
        cfg["n"] = _parse_n_list(args.n)
    if args.seed is not None:
        cfg["seed"] = args.seed
    if args.out is not None:
        cfg["out"] = args.out
    if args.format is not None:
        cfg["format"] = args.format
    return _validate(cfg, command)


def config_hash(cfg: dict) -> str:
    """sha256 of the config with sorted keys and no whitespace; ``out`` is excluded."""
    body = {k: v for k, v in cfg.items() if k != "out"}
    text = json.dumps(body, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _tolerances(cfg: dict) -> dict:
    tol = dict(DEFAULT_TOLERANCES)
    tol.update(cfg.get("tolerances", {}))
    return tol


def _header(command: str, cfg: dict) -> dict:
    return {
        "tool": "qha",
        "version": __version__,
        "command": command,
        "schema": SCHEMA,
        "config_hash": config_hash(cfg),
        "tolerances": _tolerances(cfg),
        "config": {k: v for k, v in cfg.items() if k != "out"},
    }


# ----------------------------------------------------------------------------
# helpers
# ----------------------------------------------------------------------------

def _label(spec: dict) -> str:
    if "name" in spec:
        return str(spec["name"])
    extra = ",".join(f"{k}={spec[k]}" for k in sorted(spec) if k != "kind")
    return spec["kind"] + (f"({extra})" if extra else "")


def _params(spec: dict) -> dict:
    out = {k: v for k, v in spec.items() if k not in ("kind", "name")}
    if "value" in out:
        out["value"] = _as_complex(out["value"], "mask value")
    return out


def _mask(n: int, spec: dict) -> np.ndarray:
    return mask(n, spec["kind"], **_params(spec))


def _atom(n: int, spec: dict) -> np.ndarray:
    return atom(n, spec["kind"], **_params(spec))


def _radii(cfg: dict, n: int) -> list[float]:
    g = GridSpec(n)
    return [float(fr) * g.rho_max for fr in cfg["radii_fracs"]]


# quantities below this are roundoff of an exact zero (all inputs are O(1))
_ZERO = 1e-10


def _decays(values, factor: float = 0.5) -> bool:
    """Tail (last radius) at most ``factor`` times the value at the second radius."""
    return bool(values[1] > 0 and values[-1] <= factor * values[1])


def _csv_text(header: list, rows: list) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([format_float(v) if isinstance(v, float) else v for v in r])
    return buf.getvalue()


def _emit(cfg: dict, command: str, report: dict, rows: tuple | None, always_both: bool = False) -> list[Path]:
    out = Path(cfg["out"])
    out.mkdir(parents=True, exist_ok=True)
    written = []
    if cfg["format"] == "json" or always_both or rows is None:
        p = out / f"{command}.json"
        p.write_text(dumps(report), encoding="utf-8")
        written.append(p)
    if rows is not None and (cfg["format"] == "csv" or always_both):
        p = out / f"{command}.csv"
        head = f"# qha {__version__} {command} config_hash={report['header']['config_hash']}\n"
        p.write_text(head + _csv_text(*rows), encoding="utf-8")
        written.append(p)
    return written


# ----------------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------------

def cmd_verify(cfg: dict) -> tuple[int, dict, tuple]:
    names = cfg.get("suites", list(SUITES))
    checks = run_suites(cfg["n"], cfg["seed"], _tolerances(cfg), names)
    suites = {}
    for name in names:
        mine = [c for c in checks if c.suite == name]
        fails = [c.as_dict() for c in mine if not c.passed]
        suites[name] = {
            "passed": not fails,
            "max_residual": max(c.residual for c in mine),
            "tol": mine[0].tol,
            "failures": fails,
        }
    ok = all(s["passed"] for s in suites.values())
    report = {
        "header": _header("verify", cfg),
        "passed": ok,
        "suites": suites,
        "checks": [c.as_dict() for c in checks],
    }
    rows = (["suite", "name", "n", "residual", "tol", "passed"],
            [[c.suite, c.name, c.n, c.residual, c.tol, str(c.passed).lower()] for c in checks])
    for name, s in suites.items():
        status = "PASS" if s["passed"] else "FAIL"
        print(f"{status} {name}: max residual {s['max_residual']:.3e} (tol {s['tol']:.0e})")
        for f in s["failures"]:
            print(f"    n={f['n']} {f['name']}: {f['residual']:.3e}")
    return (0 if ok else 1), report, rows


def _tauber_cell(f, phi, A: complex, n: int, cfg: dict, rng) -> dict:
    from .conv import conv_fun_fun, conv_fun_op, conv_op_op
    from .core import integral
    from .operator import fourier_wigner, rank_one
    from .rng import random_operator
    from .tauber import DECONV_GUARD, fg_sup_profile, tauberian_transfer_fun, wiener_class_op

    S = rank_one(phi, phi)
    ok, wmin = wiener_class_op(S, DECONV_GUARD * float(np.abs(fourier_wigner(S)).max()))
    T = random_operator(n, rng)
    res, K_T = tauberian_transfer_fun(f, S, A, T, drop_zeros=not ok)
    eye = np.eye(n, dtype=np.complex128)
    K_S = conv_fun_op(f, S) - A * np.trace(S) * eye
    a = conv_op_op(S, S)
    h = conv_fun_fun(f, a) - A * integral(a)
    radii = _radii(cfg, n)
    cell = {
        "wiener_ok": bool(ok),
        "wiener_min": wmin,
        "residual": res,
        "residual_mode": "exact" if ok else "pseudo",
        "compact": _schatten_summary(K_S, cfg["eps"]),
        "compact_T": _schatten_summary(K_T, cfg["eps"]),
        "decay": decay_profile(h, radii, n).as_dict(),
    }
    if n <= 32:
        G = fg_sup_profile(f, A, mask(n, "gaussian_env"), float(cfg.get("R_freq", 1.0)), radii)
        cell["fg"] = G.as_dict()
    return cell


def _schatten_summary(K, eps: float) -> dict:
    from .operator import schatten

    return schatten(K).summary(eps)


def cmd_tauber(cfg: dict) -> tuple[int, dict, tuple]:
    from .rng import spawn

    ns = sorted(cfg["n"])
    A = _as_complex(cfg.get("A", 0.0), "A")
    reports = []
    rows = []
    status = 0
    cells = [(ms, ws) for ms in cfg["masks"] for ws in cfg["windows"]]
    streams = spawn(cfg["seed"], len(cells) * len(ns))
    for ci, (ms, ws) in enumerate(cells):
        mname, wname = _label(ms), _label(ws)
        # a constant mask is its own limit value
        A_cell = _as_complex(ms.get("value", 1.0), "mask value") if ms["kind"] == "constant" else A
        rep = {"mask": mname, "window": wname, "A": [A_cell.real, A_cell.imag], "ns": ns, "per_n": {}}
        try:
            for ni, n in enumerate(ns):
                f = _mask(n, ms)
                phi = _atom(n, ws)
                rep["per_n"][str(n)] = _tauber_cell(f, phi, A_cell, n, cfg, streams[ci * len(ns) + ni])
        except Exception as exc:  # recorded with identifiers, run continues
            rep["error"] = f"{type(exc).__name__}: {exc}"
            status = 1
            reports.append(rep)
            print(f"ERROR {mname}/{wname}: {rep['error']}", file=sys.stderr)
            continue
        per = [rep["per_n"][str(n)] for n in ns]
        fr = [c["compact"]["fraction_above"] for c in per]
        zero_k = all(c["compact"]["op"] <= _ZERO for c in per)
        v1 = zero_k or (all(b <= a for a, b in zip(fr, fr[1:])) and fr[-1] < fr[0])
        v2 = all(_decays(c["decay"]["D"]) or max(c["decay"]["D"]) <= _ZERO for c in per)
        fgs = [c["fg"]["D"] for c in per if "fg" in c]
        v3 = None if not fgs else all(_decays(G) or max(G) <= _ZERO for G in fgs)
        verdict = lambda v: "not-run" if v is None else ("pass-trend" if v else "fail")  # noqa: E731
        rep["verdicts"] = {"i": verdict(v1), "ii": verdict(v2), "iii": verdict(v3)}
        reports.append(rep)
        for n, c in zip(ns, per):
            base = [mname, wname, n]
            rows.append(base + ["transfer", "residual", c["residual"]])
            rows.append(base + ["transfer", "wiener_min", c["wiener_min"]])
            rows.append(base + ["i", "fraction_above", c["compact"]["fraction_above"]])
            rows.append(base + ["i", "s1", c["compact"]["s1"]])
            for r, d in zip(c["decay"]["radii"], c["decay"]["D"]):
                rows.append(base + ["ii", f"D({format_float(r)})", d])
            if "fg" in c:
                for r, d in zip(c["fg"]["radii"], c["fg"]["D"]):
                    rows.append(base + ["iii", f"G({format_float(r)})", d])
        print(f"{mname}/{wname}: (i) {rep['verdicts']['i']}, (ii) {rep['verdicts']['ii']}, (iii) {rep['verdicts']['iii']}")
    report = {"header": _header("tauber", cfg), "reports": reports}
    return status, report, (["mask", "window", "n", "condition", "quantity", "value"], rows)


def cmd_quantize(cfg: dict) -> tuple[int, dict, tuple]:
    from .operator import schatten
    from .quantize import (
        QuantizerSpec,
        born_jordan_quadrature,
        cohen_Q,
        quantization_compactness_check,
        quantizer_operator,
    )
    from .rng import random_signal, spawn

    ns = sorted(cfg["n"])
    streams = spawn(cfg["seed"], len(ns))
    out = []
    rows = []
    status = 0
    for qs in cfg["quantizers"]:
        try:
            spec = QuantizerSpec(qs["kind"], tau=qs.get("tau"))
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad quantizer {qs!r}: {exc}") from exc
        entry = {"quantizer": spec.label, "per_n": {}}
        for n, rng in zip(ns, streams):
            try:
                R = quantizer_operator(spec, n)
                masks = {_label(m): _mask(n, m) for m in cfg["masks"]}
                psi = random_signal(n, rng)
                signals = {"hermite(1)": atom(n, "hermite", order=1), "random": psi}
                rep = quantization_compactness_check(R, masks, signals, eps=cfg["eps"], radii_fracs=cfg["radii_fracs"])
                rep["op_norm"] = schatten(R).op
                if spec.kind == "tau":
                    rep["op_norm_limit"] = float(1.0 / np.sqrt(spec.tau * (1.0 - spec.tau)))
                if spec.kind == "born_jordan":
                    phi0 = atom(n, "gaussian")
                    dev = np.abs(born_jordan_quadrature(phi0, int(cfg.get("bj_nodes", 64))) - cohen_Q(R, phi0)).max()
                    rep["quadrature_deviation"] = float(dev)
            except Exception as exc:
                rep = {"error": f"{type(exc).__name__}: {exc}"}
                status = 1
                print(f"ERROR {spec.label} n={n}: {rep['error']}", file=sys.stderr)
            entry["per_n"][str(n)] = rep
            if "error" not in rep:
                rows.append([spec.label, n, "op_norm", rep["op_norm"]])
                rows.append([spec.label, n, "husimi_decays", str(rep["husimi"]["decays"]).lower()])
                for name, m in rep["masks"].items():
                    rows.append([spec.label, n, f"fraction_above[{name}]", m["fraction_above"]])
                if "quadrature_deviation" in rep:
                    rows.append([spec.label, n, "quadrature_deviation", rep["quadrature_deviation"]])
                print(f"{spec.label} n={n}: op norm {rep['op_norm']:.4f}, husimi decays {rep['husimi']['decays']}")
        out.append(entry)
    report = {"header": _header("quantize", cfg), "quantizers": out}
    return status, report, (["quantizer", "n", "quantity", "value"], rows)


def cmd_iso(cfg: dict) -> tuple[int, dict, tuple]:
    from .tauber import iso_check

    ns = sorted(cfg["n"])
    results = []
    rows = []
    status = 0
    for ms in cfg["masks"]:
        for ws in cfg["windows"]:
            entry = {"mask": _label(ms), "window": _label(ws), "per_n": {}}
            for n in ns:
                r = iso_check(_mask(n, ms), _atom(n, ws))
                entry["per_n"][str(n)] = r.as_dict()
                rows.append([entry["mask"], entry["window"], n, r.sigma_min, r.sigma_max, r.verdict])
                print(f"{entry['mask']}/{entry['window']} n={n}: sigma_min {r.sigma_min:.6g}, sigma_max {r.sigma_max:.6g} ({r.verdict})")
            smins = [entry["per_n"][str(n)]["sigma_min"] for n in ns]
            entry["spread"] = (max(smins) - min(smins)) / max(smins) if max(smins) > 0 else float("nan")
            if any(entry["per_n"][str(n)]["verdict"] != "invertible" for n in ns):
                status = 1
            results.append(entry)
    report = {"header": _header("iso", cfg), "results": results}
    return status, report, (["mask", "window", "n", "sigma_min", "sigma_max", "verdict"], rows)


def cmd_fg(cfg: dict) -> tuple[int, dict, tuple]:
    from .tauber import fg_sup_profile

    ns = sorted(cfg["n"])
    A = _as_complex(cfg.get("A", 0.0), "A")
    R_freq = float(cfg.get("R_freq", 1.0))
    results = []
    rows = []
    for ms in cfg["masks"]:
        entry = {"mask": _label(ms), "A": [A.real, A.imag], "R_freq": R_freq, "per_n": {}}
        for n in ns:
            G = fg_sup_profile(_mask(n, ms), A, mask(n, "gaussian_env"), R_freq, _radii(cfg, n))
            entry["per_n"][str(n)] = G.as_dict()
            for r, d in zip(G.radii, G.values):
                rows.append([entry["mask"], n, r, d])
            print(f"{entry['mask']} n={n}: G = " + ", ".join(f"{v:.3g}" for v in G.values))
        results.append(entry)
    report = {"header": _header("fg", cfg), "results": results}
    return 0, report, (["mask", "n", "rho", "G"], rows)


def cmd_berezin(cfg: dict) -> tuple[int, dict, tuple]:
    from .conv import loc_op
    from .gabor import berezin, berezin_direct, toeplitz_berezin

    ns = sorted(cfg["n"])
    tol = _tolerances(cfg)["berezin"]
    results = []
    rows = []
    status = 0
    for ms in cfg["masks"]:
        for ws in cfg["windows"]:
            entry = {"mask": _label(ms), "window": _label(ws), "per_n": {}}
            for n in ns:
                f, phi = _mask(n, ms), _atom(n, ws)
                T = loc_op(f, phi, phi)
                fast = berezin(T, phi)
                direct = berezin_direct(T, phi)
                dev = float(np.abs(fast - direct).max())
                dev_t = float(np.abs(fast - toeplitz_berezin(f, phi)).max())
                entry["per_n"][str(n)] = {
                    "max_deviation": dev,
                    "toeplitz_deviation": dev_t,
                    "convolution_path": to_json_obj("phase_fn", fast),
                    "direct_path": to_json_obj("phase_fn", direct),
                }
                scale = max(float(np.abs(direct).max()), 1e-300)
                if dev > tol * scale or dev_t > tol * scale:
                    status = 1
                half = n // 2
                for i, j in np.ndindex(n, n):
                    rows.append([entry["mask"], entry["window"], n, i - half, j - half,
                                 float(fast[i, j].real), float(fast[i, j].imag),
                                 float(direct[i, j].real), float(direct[i, j].imag)])
                print(f"{entry['mask']}/{entry['window']} n={n}: max deviation {dev:.3e}, toeplitz {dev_t:.3e}")
            results.append(entry)
    report = {"header": _header("berezin", cfg), "results": results}
    head = ["mask", "window", "n", "m", "k", "conv_re", "conv_im", "direct_re", "direct_im"]
    return status, report, (head, rows)


_RUNNERS = {
    "verify": cmd_verify,
    "tauber": cmd_tauber,
    "quantize": cmd_quantize,
    "iso": cmd_iso,
    "fg": cmd_fg,
    "berezin": cmd_berezin,
}


# ----------------------------------------------------------------------------
# entry point
# ----------------------------------------------------------------------------

def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from exc
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


_HELP = {
    "verify": "run the identity suites",
    "tauber": "Tauberian transfer reports per (mask, window)",
    "quantize": "compactness diagnostics for quantizers",
    "iso": "extreme singular values of localization operators",
    "fg": "sup-profiles of the phase-space STFT",
    "berezin": "Berezin transform via both paths",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qha", description="Finite-lattice quantum harmonic analysis experiments.")
    parser.add_argument("--version", action="version", version=f"qha {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=_HELP[name])
        p.add_argument("--config", metavar="PATH", help="JSON config with \"schema\": 1")
        p.add_argument("--n", metavar="LIST", help="comma-separated grid sizes, e.g. 8,16")
        p.add_argument("--out", metavar="DIR", help="output directory (default qha-out)")
        p.add_argument("--format", choices=("json", "csv"), help="report format (default json)")
        p.add_argument("--seed", type=_seed, metavar="U64", help="seed for the random inputs")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        file_cfg = load_config(args.config) if args.config else None
        cfg = effective_config(args.command, file_cfg, args)
        status, report, rows = _RUNNERS[args.command](cfg)
    except ConfigError as exc:
        print(f"qha {args.command}: config error: {exc}", file=sys.stderr)
        return 2
    paths = _emit(cfg, args.command, report, rows, always_both=args.command in ("verify", "tauber"))
    for p in paths:
        print(f"wrote {p}")
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
