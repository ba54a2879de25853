"""Command line: ``frobcoh <command> [options]``.

Every command builds one report dict and renders it either as an aligned
table or, with ``--json``, as key-sorted JSON.  Exit codes: 0 when every
check passed, 1 when a mathematical verification failed, 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import __version__
from . import acceptance
from . import algfile
from . import cohomology as coh
from . import deformation as df
from . import yangbaxter as yb
from .errors import FrobError, InputError, MathError
from .frobenius import BUILTIN_FORMS, builtin, validate
from .scalars import field_from_name
from .tensorlin import basis_tuple

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


class Failed(Exception):
    """A check failed; the report is complete and the exit code is 1."""


# -- algebra selection --------------------------------------------------------

def _load_algebra(args):
    field = field_from_name(args.field) if args.field else None
    if args.file:
        if field is not None:
            raise InputError("--field cannot be combined with --file (the file names its field)")
        pres = algfile.load(args.file)
    else:
        pres = builtin(args.builtin, field)
    return validate(pres)


def _tensor_label(alg, index, arity):
    return "(x)".join(alg.basis_names[a] for a in basis_tuple(alg.dim, index, arity))


def _witness(alg, w, dom, cod):
    row, col, lhs, rhs = w
    F = alg.field
    return {"input": _tensor_label(alg, col, dom), "output": _tensor_label(alg, row, cod),
            "lhs": F.format(lhs), "rhs": F.format(rhs)}


# -- commands -----------------------------------------------------------------

def cmd_check(args, alg):
    F = alg.field
    res = {
        "dimension": alg.dim,
        "basis": list(alg.basis_names),
        "symmetric": alg.symmetric,
        "commutative": alg.commutative,
        "delta0": F.format(alg.delta0),
        "handle_element": alg.format_element(alg.handle_element),
        "delta1": None if alg.scalar_handle is None else F.format(alg.scalar_handle),
        "copairing": alg.format_tensor(alg.gamma.column(0), 2),
        "comultiplication": {nm: alg.format_tensor(alg.delta.column(k), 2)
                             for k, nm in enumerate(alg.basis_names)},
        "axioms": "ok",
    }
    return res


def cmd_cohomology(args, alg):
    if args.max_degree == 3 and alg.dim >= 4 and not args.deep:
        raise InputError("degree 3 on a %d-dimensional algebra needs --deep" % alg.dim)
    rep = coh.cohomology_dims(alg, args.max_degree, args.variant)
    res = rep.as_dict()
    if not all(rep.checks.values()):
        raise Failed(res)
    return res


def _r_report(alg, R):
    res = yb.check_ybe(R)
    inv = yb.invert_r(R)
    out = {"construction": R.describe(), "ybe": res.ok, "invertible": inv is not None}
    if not res.ok:
        out["witness"] = _witness(alg, res.witness, 3, 3)
    return out


def _solution(alg, s):
    F = alg.field
    A, B, C, T = s.R.coefficients
    Ap, Bp, Cp, Tp = s.inverse.coefficients
    return {"R": {"A": F.format(A), "B": F.format(B), "C": F.format(C), "T": F.format(T)},
            "inverse": {"A": F.format(Ap), "B": F.format(Bp), "C": F.format(Cp), "T": F.format(Tp)},
            "ybe": s.ybe.ok, "inverse_ok": s.inverse_ok}


def cmd_ybe(args, alg):
    F = alg.field
    if args.case:
        if args.case == "i":
            sols = yb.solve_skein_case_i(alg)
        else:
            sols = [yb.solve_skein_case_ii(alg, F.parse(args.C or "1"), F.parse(args.T or "1"))]
        return {"case": args.case, "solutions": [_solution(alg, s) for s in sols]}
    kind = args.construction or "delta-mu"
    if kind == "skein":
        coeffs = [F.parse(x) if x is not None else F.zero for x in (args.A, args.B, args.C, args.T)]
        R = yb.r_skein(alg, *coeffs)
    else:
        make = {"delta-mu": yb.r_delta_mu, "tau-delta-mu": yb.r_tau_delta_mu,
                "sandwich": yb.r_sandwich}[kind]
        try:
            R = make(alg)
        except yb.YBEFails as e:
            raise Failed({"construction": kind, "ybe": False,
                          "witness": _witness(alg, e.witness, 3, 3)}) from None
    res = _r_report(alg, R)
    if not res["ybe"]:
        raise Failed(res)
    return res


def cmd_deform(args, alg):
    F = alg.field
    c, t = F.parse(args.C), F.parse(args.T)
    space = df.deformation_constraint_space(alg)
    basis = []
    all_ok = True
    for cochain in space.cochains():
        _, ok = df.deformed_r(alg, cochain, None, c, t)
        all_ok &= ok
        coords = {df.display_name(alg, k): F.format(v) for k, v in df.coordinates(alg, cochain).items()}
        basis.append({"coordinates": coords, "ybe": ok,
                      "delta1": df.delta1_of(alg, cochain, None).format(F)})
    rng = random.Random(args.seed)
    sampled = []
    for _ in range(args.sample):
        vec = [F.zero] * space.space.ambient_dim
        for b in space.space.basis:
            w = F.random(rng)
            vec = [x + w * y for x, y in zip(vec, b)]
        _, ok = df.deformed_r(alg, coh.cochain_from_vector(alg, 2, vec), None, c, t)
        all_ok &= ok
        sampled.append(ok)
    res = {"C": F.format(c), "T": F.format(t), "dimension": space.dim, "basis": basis,
           "samples": {"count": len(sampled), "ybe_ok": sum(sampled)}}
    if not all_ok:
        raise Failed(res)
    return res


def cmd_selftest(args, _alg=None):
    crits = acceptance.run(deep=args.deep)
    res = {"criteria": [c.as_dict() for c in crits], "deep": args.deep}
    if not all(c.passed for c in crits):
        raise Failed(res)
    return res


# -- rendering ----------------------------------------------------------------

def _flatten(value, prefix, rows):
    if isinstance(value, dict):
        if not value:
            rows.append((prefix, "{}"))
        for k in sorted(value):
            _flatten(value[k], "%s.%s" % (prefix, k) if prefix else str(k), rows)
    elif isinstance(value, list):
        if not value:
            rows.append((prefix, "[]"))
        elif all(not isinstance(v, (dict, list)) for v in value):
            rows.append((prefix, " ".join(_cell(v) for v in value)))
        else:
            for i, v in enumerate(value):
                _flatten(v, "%s[%d]" % (prefix, i), rows)
    else:
        rows.append((prefix, _cell(value)))


def _cell(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render_table(report):
    rows = [("command", report["command"]), ("algebra", report["algebra"]),
            ("field", report["field"])]
    _flatten(report["results"], "", rows)
    width = max(len(k) for k, _ in rows)
    return "\n".join("%-*s  %s" % (width, k, v) for k, v in rows)


def render_json(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def _selftest_table(results):
    lines = []
    for c in results["criteria"]:
        status = "PASS" if c["passed"] else "FAIL"
        lines.append("criterion %d [%s] %s" % (c["number"], status, c["title"]))
        for ch in c["checks"]:
            if not ch["ok"]:
                lines.append("    failed %s: expected %s, got %s %s"
                             % (ch["name"], ch["expected"], ch["got"], ch["note"]))
    return "\n".join(lines)


# -- argument parsing ---------------------------------------------------------

def _add_algebra_args(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", metavar="NAME",
                     help="one of: " + ", ".join(BUILTIN_FORMS))
    src.add_argument("--file", metavar="PATH", help="algebra definition file")
    p.add_argument("--field", help="Q, Qi or GF<p>; overrides the field of poly and group builtins")
    p.add_argument("--json", action="store_true", help="print the report as JSON")


def build_parser():
    parser = argparse.ArgumentParser(prog="frobcoh", description="Exact Frobenius algebra computations.")
    parser.add_argument("--version", action="version", version="frobcoh " + __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate an algebra and print its structure data")
    _add_algebra_args(p)

    p = sub.add_parser("cohomology", help="cocycle, coboundary and cohomology dimensions")
    _add_algebra_args(p)
    p.add_argument("--max-degree", type=int, choices=(1, 2, 3), default=2)
    p.add_argument("--variant", type=int, choices=(1, 2), default=1)
    p.add_argument("--deep", action="store_true", help="allow degree 3 on algebras of dimension >= 4")

    p = sub.add_parser("ybe", help="Yang-Baxter checks for R-matrices")
    _add_algebra_args(p)
    p.add_argument("--construction", choices=yb.KINDS)
    for name in ("A", "B", "C", "T"):
        p.add_argument("--" + name, metavar="SCALAR")
    p.add_argument("--case", choices=("i", "ii"), help="solve the skein conditions")

    p = sub.add_parser("deform", help="deformed skein R-matrices mod t^2")
    _add_algebra_args(p)
    p.add_argument("--C", default="1", metavar="SCALAR")
    p.add_argument("--T", default="1", metavar="SCALAR")
    p.add_argument("--sample", type=int, default=0, metavar="N",
                   help="also check N random elements of the constraint space")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--deep", action="store_true", help="include the d=4 and d=6 chain identities")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("fmt", help="print a definition file in canonical form")
    p.add_argument("path")
    p.add_argument("--write", action="store_true", help="rewrite the file in place")
    p.add_argument("--check", action="store_true", help="exit 1 if the file is not canonical")
    return parser


COMMANDS = {"check": cmd_check, "cohomology": cmd_cohomology, "ybe": cmd_ybe,
            "deform": cmd_deform, "selftest": cmd_selftest}


def _fmt(args, out):
    path = Path(args.path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputError("cannot read %s: %s" % (path, e.strerror)) from None
    canon = algfile.canonicalize(text)
    if args.check:
        return EXIT_OK if canon == text else EXIT_MATH
    if args.write:
        if canon != text:
            path.write_text(canon)
        return EXIT_OK
    out.write(canon)
    return EXIT_OK


def run_command(argv, out=None, err=None):
    """Run one command; returns (exit code, report or None)."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (EXIT_OK if e.code == 0 else EXIT_INPUT), None

    if args.command == "fmt":
        try:
            return _fmt(args, out), None
        except FrobError as e:
            err.write("frobcoh: %s\n" % e)
            return EXIT_INPUT, None

    report = {"command": args.command, "algebra": None, "field": None, "version": __version__}
    code = EXIT_OK
    try:
        alg = None
        if args.command != "selftest":
            alg = _load_algebra(args)
            report["algebra"], report["field"] = alg.name, str(alg.field)
        report["results"] = COMMANDS[args.command](args, alg)
    except Failed as f:
        report["results"] = f.args[0]
        code = EXIT_MATH
    except MathError as e:
        report["results"] = {"error": type(e).__name__, "message": str(e)}
        code = EXIT_MATH
    except InputError as e:
        report["results"] = {"error": type(e).__name__, "message": str(e)}
        code = EXIT_INPUT

    if args.json:
        out.write(render_json(report) + "\n")
    elif args.command == "selftest" and "criteria" in report["results"]:
        out.write(_selftest_table(report["results"]) + "\n")
    else:
        out.write(render_table(report) + "\n")
    if code == EXIT_INPUT:
        err.write("frobcoh: %s\n" % report["results"]["message"])
    return code, report


def main(argv=None):
    code, _ = run_command(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
