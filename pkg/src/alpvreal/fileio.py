"""File formats: JSON for structured objects, CSV for matrices and signals.

All JSON emitted here carries the schema tag "alpv-1" and every numeric
value is printed with 17 significant digits, so identical objects always
serialize to identical bytes.  Writers go through a temp-file rename, so a
crashed run never leaves a half-written file behind.

Formats
-------
system JSON     {"schema","D","n","m","p","A":[D][n][n],"B":[D][n][m],"C":[D][p][n]}
markov JSON     {"schema","D","m","p","horizon","entries":[{"word","S":[p][m]},...]}
hankel CSV      dense matrix; sidecar JSON {"schema","L","M","D","m","p"} at <path>.meta.json
signal CSV      header p_1..p_D,u_1..u_m, one row per time step
switched CSV    header mode,u_1..u_m
outputs CSV     header y_1..y_p
equation JSON   {"schema","n","m","D","Q":[poly],"L":[[poly]]}
                poly = [{"coeff": real, "exps": {"P_<i>_<j>": exponent}}]
report JSON     the six analysis fields / the equation check fields
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile

import numpy as np

from . import words as _w
from .ioeq import AffineIOEquation, EquationCheckReport, SchedulingPoly
from .hankel import HankelBlockMatrix
from .markov import MarkovTable
from .model import ALPVSystem, InputSequence, validate
from .realize import AnalysisReport
from .switched import SwitchedInput

SCHEMA = "alpv-1"


def format_float(x) -> str:
    """One float as text, 17 significant digits."""
    return "%.17g" % float(x)


def dumps_json(obj, indent: int = 0) -> str:
    """Deterministic JSON with 17-significant-digit floats."""
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        inner = ",\n".join(
            f"{pad}  {json.dumps(str(k))}: {dumps_json(v, indent + 1)}"
            for k, v in obj.items()
        )
        return "{\n" + inner + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if len(obj) == 0:
            return "[]"
        if all(isinstance(x, (bool, int, float, str, np.integer, np.floating)) for x in obj):
            return "[" + ", ".join(dumps_json(x) for x in obj) + "]"
        inner = ",\n".join(pad + "  " + dumps_json(x, indent + 1) for x in obj)
        return "[\n" + inner + "\n" + pad + "]"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if obj is None:
        return "null"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def write_text(path, text: str) -> None:
    """Atomic file write: temp file in the same directory, then rename."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _nested(matrix) -> list:
    return [[float(x) for x in row] for row in np.atleast_2d(matrix)]


def _matrix_csv(matrix) -> str:
    out = io.StringIO()
    for row in np.atleast_2d(matrix):
        out.write(",".join(format_float(x) for x in row))
        out.write("\n")
    return out.getvalue()


def load_matrix_csv(path) -> np.ndarray:
    with open(path, newline="") as handle:
        rows = [[float(x) for x in row] for row in csv.reader(handle) if row]
    if not rows:
        raise ValueError(f"{path}: empty matrix file")
    return np.array(rows)


def save_matrix_csv(path, matrix) -> None:
    write_text(path, _matrix_csv(matrix))


# -- systems -----------------------------------------------------------------

def system_to_dict(sys: ALPVSystem) -> dict:
    validate(sys)
    return {
        "schema": SCHEMA,
        "D": sys.D,
        "n": sys.n,
        "m": sys.m,
        "p": sys.p,
        "A": [_nested(M) for M in sys.A],
        "B": [_nested(M) for M in sys.B],
        "C": [_nested(M) for M in sys.C],
    }


def system_from_dict(data: dict) -> ALPVSystem:
    try:
        D, n, m, p = (int(data[k]) for k in ("D", "n", "m", "p"))
        A = [np.array(M, dtype=float).reshape(n, n) for M in data["A"]]
        B = [np.array(M, dtype=float).reshape(n, m) for M in data["B"]]
        C = [np.array(M, dtype=float).reshape(p, n) for M in data["C"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed system object: {exc}") from exc
    if len(A) != D or len(B) != D or len(C) != D:
        raise ValueError(f"expected {D} matrices per family")
    return validate(ALPVSystem(A=A, B=B, C=C))


def save_system(path, sys: ALPVSystem) -> None:
    write_text(path, dumps_json(system_to_dict(sys)) + "\n")


def load_system(path) -> ALPVSystem:
    with open(path) as handle:
        return system_from_dict(json.load(handle))


# -- Markov tables -----------------------------------------------------------

def table_to_dict(table: MarkovTable) -> dict:
    entries = [
        {"word": _w.word_to_str(v, table.D), "S": _nested(S)}
        for v, S in sorted(table.entries.items(), key=lambda kv: (len(kv[0]), kv[0]))
    ]
    return {
        "schema": SCHEMA,
        "D": table.D,
        "m": table.m,
        "p": table.p,
        "horizon": table.horizon,
        "entries": entries,
    }


def table_from_dict(data: dict) -> MarkovTable:
    try:
        D = int(data["D"])
        m = int(data["m"])
        p = int(data["p"])
        horizon = int(data["horizon"])
        entries = {}
        for item in data["entries"]:
            v = _w.word_from_str(item["word"], D)
            entries[v] = np.array(item["S"], dtype=float).reshape(p, m)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed Markov table: {exc}") from exc
    expected = sum(D ** k for k in range(2, horizon + 1))
    if len(entries) != expected or any(not 2 <= len(v) <= horizon for v in entries):
        raise ValueError(
            f"table must cover exactly the words of length 2..{horizon} "
            f"({expected} entries), got {len(entries)}"
        )
    return MarkovTable(D=D, m=m, p=p, horizon=horizon, entries=entries)


def save_table(path, table: MarkovTable) -> None:
    write_text(path, dumps_json(table_to_dict(table)) + "\n")


def load_table(path) -> MarkovTable:
    with open(path) as handle:
        return table_from_dict(json.load(handle))


# -- Hankel dumps ------------------------------------------------------------

def hankel_sidecar_path(path) -> str:
    return str(path) + ".meta.json"


def save_hankel(path, H: HankelBlockMatrix) -> None:
    write_text(path, _matrix_csv(H.data))
    meta = {"schema": SCHEMA, "L": H.L, "M": H.M, "D": H.D, "m": H.m, "p": H.p}
    write_text(hankel_sidecar_path(path), dumps_json(meta) + "\n")


def load_hankel(path) -> HankelBlockMatrix:
    data = load_matrix_csv(path)
    with open(hankel_sidecar_path(path)) as handle:
        meta = json.load(handle)
    try:
        L, M, D, m, p = (int(meta[k]) for k in ("L", "M", "D", "m", "p"))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed Hankel sidecar: {exc}") from exc
    expected = (_w.word_count(L, D) * p * D, _w.word_count(M, D) * m * D)
    if data.shape != expected:
        raise ValueError(
            f"Hankel data is {data.shape} but the sidecar implies {expected}"
        )
    return HankelBlockMatrix(L=L, M=M, D=D, m=m, p=p, data=data)


# -- signals and outputs -----------------------------------------------------

def save_signal(path, w: InputSequence) -> None:
    header = [f"p_{j}" for j in range(1, w.D + 1)] + [f"u_{l}" for l in range(1, w.m + 1)]
    lines = [",".join(header)]
    for t in range(w.length):
        row = list(w.scheduling[t]) + list(w.inputs[t])
        lines.append(",".join(format_float(x) for x in row))
    write_text(path, "\n".join(lines) + "\n")


def load_signal(path) -> InputSequence:
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None:
            raise ValueError(f"{path}: empty signal file")
        header = [h.strip() for h in header]
        D = sum(1 for h in header if h.startswith("p_"))
        m = sum(1 for h in header if h.startswith("u_"))
        if D < 1 or m < 1 or header != [f"p_{j}" for j in range(1, D + 1)] + [
            f"u_{l}" for l in range(1, m + 1)
        ]:
            raise ValueError(f"{path}: header must be p_1..p_D,u_1..u_m")
        rows = [[float(x) for x in row] for row in reader if row]
    if not rows:
        raise ValueError(f"{path}: signal file has no data rows")
    data = np.array(rows)
    if data.shape[1] != D + m:
        raise ValueError(f"{path}: rows must have {D + m} columns")
    return InputSequence(scheduling=data[:, :D], inputs=data[:, D:])


def save_outputs(path, outputs) -> None:
    out = np.atleast_2d(np.asarray(outputs, dtype=float))
    header = ",".join(f"y_{k}" for k in range(1, out.shape[1] + 1))
    write_text(path, header + "\n" + _matrix_csv(out))


def load_switched(path, D: int) -> SwitchedInput:
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None:
            raise ValueError(f"{path}: empty switched-input file")
        header = [h.strip() for h in header]
        m = len(header) - 1
        if m < 1 or header != ["mode"] + [f"u_{l}" for l in range(1, m + 1)]:
            raise ValueError(f"{path}: header must be mode,u_1..u_m")
        modes = []
        inputs = []
        for row in reader:
            if not row:
                continue
            modes.append(int(row[0]))
            inputs.append([float(x) for x in row[1:]])
    if not modes:
        raise ValueError(f"{path}: switched-input file has no data rows")
    return SwitchedInput(D=D, modes=tuple(modes), inputs=np.array(inputs))


def save_switched(path, sw: SwitchedInput) -> None:
    header = ["mode"] + [f"u_{l}" for l in range(1, sw.m + 1)]
    lines = [",".join(header)]
    for t in range(sw.length):
        lines.append(
            ",".join([str(sw.modes[t])] + [format_float(x) for x in sw.inputs[t]])
        )
    write_text(path, "\n".join(lines) + "\n")


# -- equations ---------------------------------------------------------------

def _poly_to_list(poly: SchedulingPoly) -> list:
    terms = []
    for key, coeff in sorted(poly.monomials.items()):
        exps = {f"P_{i}_{j}": e for (i, j), e in key}
        terms.append({"coeff": coeff, "exps": exps})
    return terms


def _poly_from_list(terms, order: int, D: int) -> SchedulingPoly:
    parsed = []
    for term in terms:
        exps = {}
        for name, e in term.get("exps", {}).items():
            parts = name.split("_")
            if len(parts) != 3 or parts[0] != "P":
                raise ValueError(f"bad variable name {name!r}, expected P_<i>_<j>")
            exps[(int(parts[1]), int(parts[2]))] = int(e)
        parsed.append((float(term["coeff"]), exps))
    return SchedulingPoly.from_terms(parsed, order=order, D=D)


def equation_to_dict(eq: AffineIOEquation) -> dict:
    return {
        "schema": SCHEMA,
        "n": eq.order,
        "m": eq.m,
        "D": eq.D,
        "Q": [_poly_to_list(p) for p in eq.output_coeffs],
        "L": [[_poly_to_list(p) for p in row] for row in eq.input_coeffs],
    }


def equation_from_dict(data: dict) -> AffineIOEquation:
    try:
        n = int(data["n"])
        m = int(data["m"])
        D = int(data["D"])
        Q = [_poly_from_list(terms, n, D) for terms in data["Q"]]
        L = [[_poly_from_list(terms, n, D) for terms in row] for row in data["L"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed equation object: {exc}") from exc
    return AffineIOEquation(order=n, m=m, D=D, output_coeffs=Q, input_coeffs=L)


def save_equation(path, eq: AffineIOEquation) -> None:
    write_text(path, dumps_json(equation_to_dict(eq)) + "\n")


def load_equation(path) -> AffineIOEquation:
    with open(path) as handle:
        return equation_from_dict(json.load(handle))


# -- reports -----------------------------------------------------------------

def report_to_dict(report: AnalysisReport) -> dict:
    return {
        "schema": SCHEMA,
        "reach_rank": report.reach_rank,
        "obs_rank": report.obs_rank,
        "n": report.n,
        "reachable": report.reachable,
        "observable": report.observable,
        "minimal": report.minimal,
    }


def check_report_to_dict(report: EquationCheckReport, trials: int, seed: int, tol: float) -> dict:
    return {
        "schema": SCHEMA,
        "satisfied": report.satisfied,
        "max_residual": report.max_residual,
        "trials": trials,
        "seed": seed,
        "tol": tol,
    }
