"""JSON and CSV serialization for signals, phase functions, operators and reports.

JSON layouts (all complex numbers are ``[re, im]`` pairs, row-major)::

    {"kind": "signal",   "n": 16, "values": [[re, im], ...]}            # n entries
    {"kind": "phase_fn", "n": 16, "values": [[re, im], ...]}            # n*n, row m, column k
    {"kind": "operator", "n": 16, "values": [[re, im], ...]}            # n*n, row-major
    {"kind": "stft4",    "n": 8,  "values": [[re, im], ...]}            # n**4, (x1, x2, w1, w2)
    {"kind": "spectrum", "n": 16, "sigma": [s1, s2, ...]}

CSV layouts carry centered indices (``-n/2 .. n/2-1``)::

    signal:   j,re,im
    phase_fn: m,k,re,im
    operator: row,col,re,im
    stft4:    x1,x2,w1,w2,re,im   (preceded by a "# n=..., layout=..." header line)
    spectrum: index,sigma

Floats are written with 17 significant digits and keys keep insertion
order, so identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math
from pathlib import Path

import numpy as np

from .core import GridSpec, check_operator, check_phase_fn, check_signal

__all__ = [
    "format_float",
    "dumps",
    "write_json",
    "to_json_obj",
    "from_json_obj",
    "save_json",
    "load_json",
    "to_csv",
    "from_csv",
    "save_csv",
    "load_csv",
]

_KINDS = ("signal", "phase_fn", "operator", "stft4", "spectrum")


def format_float(x: float) -> str:
    x = float(x)
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    if x == 0.0:
        return "0.0" if math.copysign(1.0, x) > 0 else "-0.0"
    text = format(x, ".17g")
    if not any(c in text for c in ".en"):
        text += ".0"
    return text


def _encode(obj, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return _encode([obj.real, obj.imag], indent, level)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return _encode(obj.tolist(), indent, level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        # short scalar lists (complex pairs, profiles) stay on one line
        if all(isinstance(v, (int, float, np.integer, np.floating)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(_encode(v, indent, level) for v in obj) + "]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize object of type {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    """Deterministic JSON text (17 significant digits, insertion-ordered keys)."""
    return _encode(obj, indent, 0) + "\n"


def write_json(path, obj) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(dumps(obj), encoding="utf-8")


def _pairs(a: np.ndarray) -> list:
    flat = np.asarray(a, dtype=np.complex128).ravel()
    return [[float(v.real), float(v.imag)] for v in flat]


def to_json_obj(kind: str, data) -> dict:
    if kind == "signal":
        a = check_signal(data)
        return {"kind": kind, "n": a.shape[0], "values": _pairs(a)}
    if kind == "phase_fn":
        a = check_phase_fn(data)
        return {"kind": kind, "n": a.shape[0], "values": _pairs(a)}
    if kind == "operator":
        a = check_operator(data)
        return {"kind": kind, "n": a.shape[0], "values": _pairs(a)}
    if kind == "stft4":
        a = np.asarray(data, dtype=np.complex128)
        if a.ndim != 4 or len(set(a.shape)) != 1:
            raise ValueError(f"4-D table must have shape (n, n, n, n), got {a.shape}")
        return {"kind": kind, "n": a.shape[0], "values": _pairs(a)}
    if kind == "spectrum":
        s = np.asarray(getattr(data, "sigma", data), dtype=float)
        return {"kind": kind, "n": int(s.size), "sigma": [float(v) for v in s]}
    raise ValueError(f"unknown kind {kind!r}; expected one of {_KINDS}")


def _shape(kind: str, n: int) -> tuple:
    return {"signal": (n,), "phase_fn": (n, n), "operator": (n, n), "stft4": (n, n, n, n)}[kind]


def from_json_obj(obj: dict):
    """Inverse of :func:`to_json_obj`; returns ``(kind, array)``."""
    if not isinstance(obj, dict) or "kind" not in obj or "n" not in obj:
        raise ValueError("JSON object needs 'kind' and 'n' fields")
    kind = obj["kind"]
    n = int(obj["n"])
    if kind == "spectrum":
        return kind, np.asarray(obj["sigma"], dtype=float)
    if kind not in _KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    GridSpec(n)
    vals = np.asarray(obj["values"], dtype=float)
    shape = _shape(kind, n)
    if vals.shape != (int(np.prod(shape)), 2):
        raise ValueError(f"{kind} with n={n} needs {int(np.prod(shape))} [re, im] pairs, got shape {vals.shape}")
    return kind, (vals[:, 0] + 1j * vals[:, 1]).reshape(shape)


def save_json(path, kind: str, data) -> None:
    write_json(path, to_json_obj(kind, data))


def load_json(path):
    return from_json_obj(json.loads(Path(path).read_text(encoding="utf-8")))


_HEADERS = {
    "signal": ["j", "re", "im"],
    "phase_fn": ["m", "k", "re", "im"],
    "operator": ["row", "col", "re", "im"],
    "stft4": ["x1", "x2", "w1", "w2", "re", "im"],
    "spectrum": ["index", "sigma"],
}


def to_csv(kind: str, data) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if kind == "spectrum":
        s = np.asarray(getattr(data, "sigma", data), dtype=float)
        w.writerow(_HEADERS[kind])
        for i, v in enumerate(s):
            w.writerow([i, format_float(v)])
        return buf.getvalue()
    if kind not in _HEADERS:
        raise ValueError(f"unknown kind {kind!r}")
    a = np.asarray(data, dtype=np.complex128)
    n = a.shape[0]
    if a.shape != _shape(kind, n):
        raise ValueError(f"{kind} must have shape {_shape(kind, n)}, got {a.shape}")
    GridSpec(n)
    if kind == "stft4":
        buf.write(f"# n={n}, layout=x1,x2,w1,w2 (centered indices), chunk=one x-pair per {n * n} rows\n")
    w.writerow(_HEADERS[kind])
    half = n // 2
    for idx in np.ndindex(a.shape):
        v = a[idx]
        w.writerow([i - half for i in idx] + [format_float(v.real), format_float(v.imag)])
    return buf.getvalue()


def from_csv(kind: str, text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    rows = list(csv.reader(lines))
    if not rows or rows[0] != _HEADERS.get(kind):
        raise ValueError(f"CSV header for {kind!r} must be {_HEADERS.get(kind)}")
    body = rows[1:]
    if kind == "spectrum":
        return np.array([float(r[1]) for r in body])
    dims = len(_HEADERS[kind]) - 2
    count = len(body)
    n = int(round(count ** (1.0 / dims)))
    if n**dims != count:
        raise ValueError(f"{count} rows do not form a {kind} table")
    GridSpec(n)
    out = np.zeros(_shape(kind, n), dtype=np.complex128)
    half = n // 2
    for r in body:
        idx = tuple(int(v) + half for v in r[:dims])
        out[idx] = float(r[dims]) + 1j * float(r[dims + 1])
    return out


def save_csv(path, kind: str, data) -> None:
    p = Path(path)
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(to_csv(kind, data), encoding="utf-8")


def load_csv(path, kind: str) -> np.ndarray:
    return from_csv(kind, Path(path).read_text(encoding="utf-8"))
