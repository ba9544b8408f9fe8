"""Command-line front end.

    genpolygamma eval --z -1 --q 1
    genpolygamma table --z -2.5 --q-start 0.1 --q-end 2 --steps 20 --format csv
    genpolygamma check-identities --suite shift --samples 300 --tol 1e-10
    genpolygamma check-integrals
    genpolygamma expansions-demo --z -2.5

Exit status: 0 on success, 1 when a check fails (or an evaluation does not
converge), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys

from .config import DEFAULT_CONFIG
from .errors import DomainError, HypothesisError, NoConvergenceError, PoleError
from .expansions import asymptotic_psi, fourier_psi, taylor_psi
from .genpoly import gen_polygamma, shift_rhs
from .verify.suites import SUITES, integral_suite, run_suite

METHODS = ("auto", "direct", "taylor", "fourier", "asymptotic")
_EPS = 2.220446049250313e-16


class UsageError(Exception):
    """Raised for arguments that parse but cannot be honoured."""


# ---------------------------------------------------------------------------
# parsing and serialization

def parse_complex(text: str) -> complex:
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi`` (``j`` is accepted for ``i``)."""
    s = text.strip().replace(" ", "").replace("I", "i").replace("i", "j")
    s = re.sub(r"(^|[+-])j$", r"\g<1>1j", s)  # bare unit: "i", "-i", "2+i"
    try:
        z = complex(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid complex value: {text!r}") from None
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise argparse.ArgumentTypeError(f"non-finite complex value: {text!r}")
    return z


def format_complex(z: complex) -> str:
    z = complex(z)
    sign = "-" if z.imag < 0 or (z.imag == 0 and math.copysign(1, z.imag) < 0) else "+"
    return f"{_fmt(z.real)}{sign}{_fmt(abs(z.imag))}i"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def to_json(obj, indent: int = 0) -> str:
    """Deterministic JSON: 17 significant digits, insertion-ordered keys.

    Complex numbers become {"re": ..., "im": ...}; non-finite floats become null.
    """
    pad = "  " * indent
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, complex):
        return "{" + f'"re": {to_json(obj.real)}, "im": {to_json(obj.imag)}' + "}"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        inner = ",\n".join(pad + "  " + to_json(v, indent + 1) for v in obj)
        return "[\n" + inner + "\n" + pad + "]"
    if hasattr(obj, "to_dict"):
        return to_json(obj.to_dict(), indent)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# evaluation


def evaluate(z: complex, q: complex, method: str = "auto", tol: float = 1e-10) -> dict:
    """One evaluation record: z, q, value, est_error and the method actually used."""
    cfg = DEFAULT_CONFIG
    if method == "auto":
        if abs(q) >= 1:
            method = "direct"
        else:
            if q.real <= 0:
                raise UsageError(f"--q: Re q must be positive, got {format_complex(q)}")
            # psi(z, q) = psi(z, q+1) - shift increment, keeps the direct formula at |q| >= 1
            v = gen_polygamma(z, q + 1, cfg)
            inc = shift_rhs(z, q)
            return _record(z, q, v.value - inc, v.est_error + 4 * _EPS * abs(inc), "shift-reduced")
    if method == "direct":
        v = gen_polygamma(z, q, cfg)
        return _record(z, q, v.value, v.est_error, "direct")
    if method == "taylor":
        if not abs(q - 1) < 1:
            raise UsageError("--method taylor needs |q - 1| < 1")
        r = taylor_psi(z, q - 1, tol=tol)
        return _record(z, q, r.value, r.est_truncation, "taylor")
    if method == "fourier":
        if q.imag != 0 or not 0 <= q.real <= 1 or not z.real < -1:
            raise UsageError("--method fourier needs real q in [0, 1] and Re z < -1")
        r = fourier_psi(z, q.real, tol=tol)
        return _record(z, q, r.value, r.est_truncation, "fourier")
    if method == "asymptotic":
        if q.imag != 0 or q.real < 10:
            raise UsageError("--method asymptotic needs real q >= 10")
        r = asymptotic_psi(z, q.real)
        return _record(z, q, r.value, r.first_omitted, "asymptotic")
    raise UsageError(f"--method: unknown method {method!r}")


def _record(z, q, value, est, method) -> dict:
    return {"z": complex(z), "q": complex(q), "value": complex(value), "est_error": float(est), "method": method}


def _q_grid(start: complex, end: complex, steps: int) -> list[complex]:
    return [start + (end - start) * i / (steps - 1) for i in range(steps)]


# ---------------------------------------------------------------------------
# output


CSV_COLUMNS = ["z_re", "z_im", "q_re", "q_im", "value_re", "value_im", "est_error", "method"]


def _records_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow([_fmt(r["z"].real), _fmt(r["z"].imag), _fmt(r["q"].real), _fmt(r["q"].imag),
                    _fmt(r["value"].real), _fmt(r["value"].imag), _fmt(r["est_error"]), r["method"]])
    return buf.getvalue()


def _records_text(records: list[dict]) -> str:
    lines = []
    for r in records:
        lines.append(f"psi({format_complex(r['z'])}, {format_complex(r['q'])}) = {format_complex(r['value'])}"
                     f"  (est. error {r['est_error']:.2e}, {r['method']})")
    return "\n".join(lines) + "\n"


def _reports_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["identity_id", "inputs", "lhs", "rhs", "abs_residual", "rel_residual", "tol", "pass"])
    for rep in reports:
        d = rep.to_dict()
        inputs = ";".join(f"{k}={format_complex(v) if isinstance(v, complex) else v}" for k, v in d["inputs"].items())
        w.writerow([d["identity_id"], inputs, format_complex(d["lhs"]), format_complex(d["rhs"]),
                    _fmt(d["abs_residual"]), _fmt(d["rel_residual"]), _fmt(d["tol"]), str(d["pass"]).lower()])
    return buf.getvalue()


def _reports_text(reports) -> str:
    lines = []
    for rep in reports:
        flag = "PASS" if rep.passed else "FAIL"
        args = ", ".join(f"{k}={format_complex(v) if isinstance(v, complex) else v}" for k, v in rep.inputs.items())
        lines.append(f"{flag} {rep.identity_id}({args}) abs={rep.abs_residual:.2e} rel={rep.rel_residual:.2e}")
    n_fail = sum(not r.passed for r in reports)
    lines.append(f"{len(reports) - n_fail}/{len(reports)} passed")
    return "\n".join(lines) + "\n"


def _emit_records(records, fmt, single=False) -> str:
    if fmt == "json":
        return to_json(records[0] if single else records) + "\n"
    if fmt == "csv":
        return _records_csv(records)
    return _records_text(records)


def _emit_reports(reports, fmt) -> str:
    if fmt == "json":
        return to_json(list(reports)) + "\n"
    if fmt == "csv":
        return _reports_csv(reports)
    return _reports_text(reports)


# ---------------------------------------------------------------------------
# commands


def _cmd_eval(args) -> tuple[str, int]:
    if args.q is None:
        raise UsageError("--q is required for eval")
    rec = evaluate(args.z, args.q, args.method, args.tol or 1e-10)
    return _emit_records([rec], args.format, single=True), 0


def _cmd_table(args) -> tuple[str, int]:
    if args.q_start is None or args.q_end is None:
        raise UsageError("--q-start and --q-end are required for table")
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    recs = [evaluate(args.z, q, args.method, args.tol or 1e-10) for q in _q_grid(args.q_start, args.q_end, args.steps)]
    return _emit_records(recs, args.format), 0


def _cmd_check_identities(args) -> tuple[str, int]:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    reports = run_suite(args.suite, args.samples, seed=args.seed, tol=args.tol)
    return _emit_reports(reports, args.format), 0 if all(r.passed for r in reports) else 1


def _cmd_check_integrals(args) -> tuple[str, int]:
    reports = integral_suite(tol=args.tol)
    return _emit_reports(reports, args.format), 0 if all(r.passed for r in reports) else 1


def _cmd_expansions_demo(args) -> tuple[str, int]:
    """Evaluate with every applicable method and report the spread per q."""
    z = args.z
    qs = [0.25, 0.5, 0.75, 1.5, 12.0, 25.0] if args.q is None else [args.q]
    rows = []
    ok = True
    for q in qs:
        q = complex(q)
        recs = []
        for m in METHODS[1:]:
            try:
                recs.append(evaluate(z, q, m, 1e-11))
            except (UsageError, DomainError, NoConvergenceError):
                continue
        ref = recs[0]["value"]
        spread = max(abs(r["value"] - ref) for r in recs)
        agree = spread <= 1e-8 * max(1.0, abs(ref))
        ok &= agree
        rows.append({"z": z, "q": q, "methods": [r["method"] for r in recs],
                     "values": [r["value"] for r in recs], "max_spread": spread, "agree": agree})
    if args.format == "json":
        return to_json(rows) + "\n", 0 if ok else 1
    lines = []
    for r in rows:
        vals = ", ".join(f"{m}={format_complex(v)}" for m, v in zip(r["methods"], r["values"]))
        lines.append(f"q={format_complex(r['q'])}: {vals}  spread={r['max_spread']:.2e} {'ok' if r['agree'] else 'MISMATCH'}")
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["z", "q", "method", "value", "max_spread", "agree"])
        for r in rows:
            for m, v in zip(r["methods"], r["values"]):
                w.writerow([format_complex(z), format_complex(r["q"]), m, format_complex(v),
                            _fmt(r["max_spread"]), str(r["agree"]).lower()])
        return buf.getvalue(), 0 if ok else 1
    return "\n".join(lines) + "\n", 0 if ok else 1


def _tol(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid tolerance: {text!r}")
    if not 1e-14 <= v <= 1e-2:
        raise argparse.ArgumentTypeError(f"tolerance must lie in [1e-14, 1e-2], got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genpolygamma", description="Generalized polygamma function psi(z, q).")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
        sp.add_argument("--tol", type=_tol, default=None, help="tolerance in [1e-14, 1e-2]")

    e = sub.add_parser("eval", help="evaluate psi(z, q)")
    e.add_argument("--z", type=parse_complex, required=True)
    e.add_argument("--q", type=parse_complex)
    e.add_argument("--method", choices=METHODS, default="auto")
    common(e)

    t = sub.add_parser("table", help="tabulate psi(z, q) along a q segment")
    t.add_argument("--z", type=parse_complex, required=True)
    t.add_argument("--q-start", type=parse_complex)
    t.add_argument("--q-end", type=parse_complex)
    t.add_argument("--steps", type=int, default=11)
    t.add_argument("--method", choices=METHODS, default="auto")
    common(t)

    c = sub.add_parser("check-identities", help="run randomized functional-equation suites")
    c.add_argument("--suite", choices=SUITES + ("all",), default="all")
    c.add_argument("--samples", type=int, default=50)
    c.add_argument("--seed", type=int, default=42)
    common(c)

    i = sub.add_parser("check-integrals", help="verify the definite-integral identities by quadrature")
    common(i)

    d = sub.add_parser("expansions-demo", help="compare every applicable evaluation method")
    d.add_argument("--z", type=parse_complex, default=complex(-2.5))
    d.add_argument("--q", type=parse_complex)
    common(d)
    return p


_COMMANDS = {
    "eval": _cmd_eval,
    "table": _cmd_table,
    "check-identities": _cmd_check_identities,
    "check-integrals": _cmd_check_integrals,
    "expansions-demo": _cmd_expansions_demo,
}


_VALUE_FLAGS = ("--z", "--q", "--q-start", "--q-end")


def _attach_signed_values(argv: list[str]) -> list[str]:
    # argparse reads "-1.5+0.5i" as an option; glue such values to their flag
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_attach_signed_values(argv))
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        text, code = _COMMANDS[args.command](args)
    except (UsageError, DomainError, PoleError, HypothesisError) as exc:
        print(f"genpolygamma {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except NoConvergenceError as exc:
        print(f"genpolygamma {args.command}: no convergence: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
