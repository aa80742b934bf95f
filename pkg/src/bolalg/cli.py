"""Command-line frontend.

One subcommand per library operation; every command reads JSON input
files, prints a deterministic report (text by default, a machine-readable
object with --json), and exits 0 when the property holds or the
construction succeeded, 1 when the property fails (the report carries the
witness), and 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import (
    BolAlgebra,
    CheckReport,
    MaltsevAlgebra,
    VerificationError,
    maltsev_to_bol,
    verify_bol,
    verify_maltsev,
)
from .cohomology import (
    CochainPair,
    cohomology,
    is_coboundary,
    is_cocycle,
)
from .deformation import (
    DeformationDatum,
    check_first_order_formal,
    first_order_equivalent,
    generates_infinitesimal_deformation,
)
from .extension import (
    AbelianExtension,
    InvalidExtensionError,
    extensions_equivalent,
    induced_cocycle,
    induced_representation,
    twisted_product,
    validate_extension,
)
from .formats import (
    ParseError,
    algebra_to_obj,
    cochain_to_obj,
    extension_to_obj,
    parse_action,
    parse_algebra,
    parse_cochain,
    parse_extension,
    parse_representation,
    render_scalar,
    representation_to_obj,
)
from .linalg import Mat, Vec
from .representation import (
    PseudoderivationData,
    Representation,
    adjoint_representation,
    check_delta_identity,
    induce_from_maltsev,
    pseudoderivation_space,
    verify_representation,
)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


# ---------------------------------------------------------------------------
# report rendering


def _witness_json(w):
    if w is None:
        return None
    return [_witness_json(x) if isinstance(x, tuple) else x for x in w]


def _vec_json(v: Vec | None):
    if v is None:
        return None
    return [render_scalar(x) for x in v]


def _mat_json(m: Mat):
    return [[render_scalar(x) for x in m.row(r)] for r in range(m.rows)]


def _checks_json(report: CheckReport):
    return [
        {
            "name": c.name,
            "passed": c.passed,
            "witness": _witness_json(c.witness),
            "residual": _vec_json(c.residual),
        }
        for c in report.checks
    ]


def _vec_text(v: Vec) -> str:
    return "(" + ", ".join(render_scalar(x) for x in v) + ")"


def _check_lines(report: CheckReport) -> list[str]:
    lines = []
    for c in report.checks:
        if c.passed:
            lines.append(f"{c.name}: pass")
        else:
            lines.append(f"{c.name}: FAIL at witness={c.witness}; "
                         f"residual={_vec_text(c.residual)}")
    return lines


def _cochain_lines(c: CochainPair, indent: str = "  ") -> list[str]:
    lines = []
    n, m = c.n, c.m
    for i in range(n):
        for j in range(i + 1, n):
            val = tuple(c.nu[a][i][j] for a in range(m))
            if any(val):
                lines.append(f"{indent}nu(e{i},e{j}) = {_vec_text(val)}")
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                val = tuple(c.omega[a][i][j][k] for a in range(m))
                if any(val):
                    lines.append(f"{indent}omega(e{i},e{j},e{k}) = {_vec_text(val)}")
    if not lines:
        lines.append(f"{indent}(zero cochain)")
    return lines


def _mat_text(m: Mat) -> str:
    return "[" + ", ".join(
        "[" + ", ".join(render_scalar(x) for x in m.row(r)) + "]"
        for r in range(m.rows)
    ) + "]"


# ---------------------------------------------------------------------------
# input loading


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(path, f"cannot read file: {exc.strerror}") from None


def _load_bol(path: str) -> BolAlgebra:
    alg = parse_algebra(_read(path))
    if not isinstance(alg, BolAlgebra):
        raise ParseError(path, "expected a bol algebra file")
    return alg


def _load_maltsev(path: str) -> MaltsevAlgebra:
    alg = parse_algebra(_read(path))
    if not isinstance(alg, MaltsevAlgebra):
        raise ParseError(path, "expected a maltsev algebra file")
    return alg


def _require_verified_bol(B: BolAlgebra) -> None:
    report = verify_bol(B)
    if not report.passed:
        raise VerificationError("algebra fails Bol verification", report)


def _load_representation(args, B: BolAlgebra) -> Representation:
    if getattr(args, "adjoint", False):
        return adjoint_representation(B)
    R = parse_representation(_read(args.rep), B)
    report = verify_representation(R)
    if not report.passed:
        raise VerificationError("representation fails verification", report)
    return R


def _write_output(args, text: str, report: dict, lines: list[str]) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        report["output"] = args.output
        lines.append(f"written: {args.output}")


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (status, report dict, text lines)


def _cmd_verify(args):
    alg = parse_algebra(_read(args.algebra))
    if isinstance(alg, BolAlgebra):
        report = verify_bol(alg)
        kind = "bol"
    else:
        report = verify_maltsev(alg)
        kind = "maltsev"
    status = "pass" if report.passed else "fail"
    obj = {
        "command": "verify",
        "status": status,
        "kind": kind,
        "dimension": alg.n,
        "checks": _checks_json(report),
    }
    lines = [f"algebra: {args.algebra} ({kind}, dimension {alg.n})"]
    lines += _check_lines(report)
    lines.append(f"result: {status.upper()}")
    return status, obj, lines


def _cmd_maltsev_to_bol(args):
    M = _load_maltsev(args.algebra)
    B = maltsev_to_bol(M)
    from .formats import render_algebra

    obj = {
        "command": "maltsev-to-bol",
        "status": "pass",
        "dimension": B.n,
        "algebra": algebra_to_obj(B),
    }
    lines = [f"maltsev algebra: {args.algebra} (dimension {M.n})",
             "associated bol algebra constructed; axioms verified"]
    _write_output(args, render_algebra(B), obj, lines)
    return "pass", obj, lines


def _cmd_adjoint(args):
    B = _load_bol(args.algebra)
    R = adjoint_representation(B)
    from .formats import render_representation

    obj = {
        "command": "adjoint",
        "status": "pass",
        "dimension": B.n,
        "module_dimension": R.m,
        "representation": representation_to_obj(R),
    }
    lines = [f"algebra: {args.algebra} (bol, dimension {B.n})",
             f"adjoint representation on module of dimension {R.m}"]
    _write_output(args, render_representation(R), obj, lines)
    return "pass", obj, lines


def _cmd_induce_rep(args):
    M = _load_maltsev(args.algebra)
    m, rho = parse_action(_read(args.action), M.n)
    R = induce_from_maltsev(M, rho)
    from .formats import render_representation

    obj = {
        "command": "induce-rep",
        "status": "pass",
        "dimension": M.n,
        "module_dimension": m,
        "representation": representation_to_obj(R),
    }
    lines = [
        f"maltsev algebra: {args.algebra} (dimension {M.n})",
        f"action file: {args.action} (module dimension {m})",
        "induced representation of the associated bol algebra constructed",
    ]
    _write_output(args, render_representation(R), obj, lines)
    return "pass", obj, lines


def _cmd_verify_rep(args):
    B = _load_bol(args.algebra)
    _require_verified_bol(B)
    R = parse_representation(_read(args.rep), B)
    report = verify_representation(R)
    status = "pass" if report.passed else "fail"
    obj = {
        "command": "verify-rep",
        "status": status,
        "dimension": B.n,
        "module_dimension": R.m,
        "checks": _checks_json(report),
    }
    lines = [f"algebra: {args.algebra} (bol, dimension {B.n})",
             f"representation: {args.rep} (module dimension {R.m})"]
    lines += _check_lines(report)
    lines.append(f"result: {status.upper()}")
    return status, obj, lines


def _cmd_delta_check(args):
    B = _load_bol(args.algebra)
    _require_verified_bol(B)
    R = _load_representation(args, B)
    report = check_delta_identity(R)
    status = "pass" if report.passed else "fail"
    obj = {
        "command": "delta-check",
        "status": status,
        "dimension": B.n,
        "module_dimension": R.m,
        "checks": _checks_json(report),
    }
    lines = [f"algebra: {args.algebra} (bol, dimension {B.n})"]
    lines += _check_lines(report)
    lines.append(f"result: {status.upper()}")
    return status, obj, lines


def _cmd_pseudoderivations(args):
    B = _load_bol(args.algebra)
    _require_verified_bol(B)
    R = _load_representation(args, B)
    basis = pseudoderivation_space(R)
    obj = {
        "command": "pseudoderivations",
        "status": "pass",
        "dimension": B.n,
        "module_dimension": R.m,
        "pseudoderivation_dimension": len(basis),
        "pseudoderivation_basis": [
            {"f": _mat_json(p.f), "chi": _vec_json(p.chi)} for p in basis
        ],
    }
    lines = [f"algebra: {args.algebra} (bol, dimension {B.n})",
             f"pseudoderivation space dimension: {len(basis)}"]
    for idx, p in enumerate(basis):
        lines.append(f"basis[{idx}]: f = {_mat_text(p.f)}, chi = {_vec_text(p.chi)}")
    return "pass", obj, lines


def _cmd_cohomology(args):
    B = _load_bol(args.algebra)
    _require_verified_bol(B)
    R = _load_representation(args, B)
    rep = cohomology(R)
    obj = {
        "command": "cohomology",
        "status": "pass",
        "dimension": rep.n,
        "module_dimension": rep.m,
        "dim_C": rep.dim_C,
        "dim_Z": rep.dim_Z,
        "dim_B": rep.dim_B,
        "dim_H": rep.dim_H,
        "z_basis": [cochain_to_obj(c) for c in rep.z_basis],
        "b_basis": [cochain_to_obj(c) for c in rep.b_basis],
        "h_representatives": [cochain_to_obj(c) for c in rep.h_representatives],
    }
    lines = [
        f"algebra: {args.algebra} (bol, dimension {B.n})",
        f"module dimension: {rep.m}",
        f"dim_C = {rep.dim_C}",
        f"dim_Z = {rep.dim_Z}",
        f"dim_B = {rep.dim_B}",
        f"dim_H = {rep.dim_H}",
    ]
    for idx, c in enumerate(rep.h_representatives):
        lines.append(f"h_representative[{idx}]:")
        lines += _cochain_lines(c, "  ")
    return "pass", obj, lines


def _cmd_is_cocycle(args):
    B = _load_bol(args.algebra)
    _require_verified_bol(B)
    R = _load_representation(args, B)
    c = parse_cochain(_read(args.cochain), B)
    report = is_cocycle(R, c)
    status = "pass" if report.passed else "fail"
    obj = {
        "command": "is-cocycle",
        "status": status,
        "dimension": B.n,
        "module_dimension": c.m,
        "checks": _checks_json(report),
    }
    lines = [f"cochain: {args.cochain}"]
    lines += _check_lines(report)
    lines.append(f"result: {status.upper()}")
    return status, obj, lines


def _cmd_is_coboundary(args):
    B = _load_bol(args.algebra)
    _require_verified_bol(B)
    R = _load_representation(args, B)
    c = parse_cochain(_read(args.cochain), B)
    found, wit = is_coboundary(R, c)
    status = "pass" if found else "fail"
    obj = {
        "command": "is-coboundary",
        "status": status,
        "dimension": B.n,
        "module_dimension": c.m,
        "coboundary": found,
        "witness": None if wit is None else
        {"f": _mat_json(wit.f), "chi": _vec_json(wit.chi)},
    }
    lines = [f"cochain: {args.cochain}"]
    if found:
        lines.append("coboundary: yes")
        lines.append(f"witness f = {_mat_text(wit.f)}")
        lines.append(f"witness chi = {_vec_text(wit.chi)}")
    else:
        lines.append("coboundary: no (system inconsistent)")
    lines.append(f"result: {status.upper()}")
    return status, obj, lines


def _load_deformation(args, B: BolAlgebra, attr: str = "cochain") -> DeformationDatum:
    c = parse_cochain(_read(getattr(args, attr)), B)
    if c.m != B.n:
        raise ParseError(getattr(args, attr),
                         "deformation data needs module_dimension equal to the "
                         "algebra dimension (adjoint coefficients)")
    return DeformationDatum(B, c)


def _cmd_deform_check(args):
    B = _load_bol(args.algebra)
    d = _load_deformation(args, B)
    rep = generates_infinitesimal_deformation(d, cross_check=True)
    status = "pass" if rep.passed else "fail"
    obj = {
        "command": "deform-check",
        "status": status,
        "dimension": B.n,
        "deformation_type_checks": _checks_json(rep.deformation_type),
        "cocycle_checks": _checks_json(rep.cocycle),
        "sampling": [
            {"t": render_scalar(t), "passed": r.passed} for t, r in rep.sampling
        ],
        "routes_agree": rep.routes_agree,
    }
    lines = [f"cochain: {args.cochain}", "deformation-type conditions:"]
    lines += ["  " + s for s in _check_lines(rep.deformation_type)]
    lines.append("cocycle conditions (adjoint coefficients):")
    lines += ["  " + s for s in _check_lines(rep.cocycle)]
    lines.append("t-sampling cross-check (t in {1, 2, 3, 5}):")
    for t, r in rep.sampling:
        lines.append(f"  t={render_scalar(t)}: {'pass' if r.passed else 'FAIL'}")
    lines.append(f"routes agree: {'yes' if rep.routes_agree else 'NO'}")
    lines.append(f"result: {status.upper()}")
    return status, obj, lines


def _cmd_deform_formal(args):
    B = _load_bol(args.algebra)
    d = _load_deformation(args, B)
    report = check_first_order_formal(d)
    status = "pass" if report.passed else "fail"
    obj = {
        "command": "deform-formal",
        "status": status,
        "dimension": B.n,
        "checks": _checks_json(report),
    }
    lines = [f"cochain: {args.cochain}"]
    lines += _check_lines(report)
    lines.append(f"result: {status.upper()}")
    return status, obj, lines


def _cmd_deform_equiv(args):
    B = _load_bol(args.algebra)
    d1 = _load_deformation(args, B, "cochain1")
    d2 = _load_deformation(args, B, "cochain2")
    res = first_order_equivalent(B, d1, d2)
    status = "pass" if res.equivalent else "fail"
    obj = {
        "command": "deform-equiv",
        "status": status,
        "dimension": B.n,
        "equivalent": res.equivalent,
        "phi": None if res.phi is None else _mat_json(res.phi),
        "routes_agree": res.routes_agree,
    }
    lines = [f"data: {args.cochain1} vs {args.cochain2}"]
    if res.equivalent:
        lines.append("equivalent at first order: yes")
        lines.append(f"phi = {_mat_text(res.phi)}")
    else:
        lines.append("equivalent at first order: no (linear system inconsistent)")
    lines.append(f"routes agree: {'yes' if res.routes_agree else 'NO'}")
    lines.append(f"result: {status.upper()}")
    return status, obj, lines


def _cmd_extend_build(args):
    B = _load_bol(args.algebra)
    _require_verified_bol(B)
    R = _load_representation(args, B)
    c = parse_cochain(_read(args.cochain), B)
    E = twisted_product(R, c)
    from .formats import render_extension

    obj = {
        "command": "extend-build",
        "status": "pass",
        "dimension": B.n,
        "module_dimension": R.m,
        "extension": extension_to_obj(E),
    }
    lines = [
        f"algebra: {args.algebra} (bol, dimension {B.n})",
        f"cocycle: {args.cochain}",
        f"twisted product built: dimension {E.hat.n}, axioms verified",
    ]
    _write_output(args, render_extension(E), obj, lines)
    return "pass", obj, lines


def _cmd_extend_analyze(args):
    E = parse_extension(_read(args.bundle))
    report = validate_extension(E)
    if not report.passed:
        obj = {
            "command": "extend-analyze",
            "status": "fail",
            "dimension": E.base.n,
            "module_dimension": E.m,
            "checks": _checks_json(report),
        }
        lines = [f"bundle: {args.bundle}"]
        lines += _check_lines(report)
        lines.append("result: FAIL")
        return "fail", obj, lines
    R = induced_representation(E)
    c = induced_cocycle(E)
    obj = {
        "command": "extend-analyze",
        "status": "pass",
        "dimension": E.base.n,
        "module_dimension": E.m,
        "checks": _checks_json(report),
        "representation": representation_to_obj(R),
        "cochain": cochain_to_obj(c),
    }
    lines = [f"bundle: {args.bundle}"]
    lines += _check_lines(report)
    lines.append("induced representation:")
    for i in range(E.base.n):
        lines.append(f"  rho(e{i}) = {_mat_text(R.rho[i])}")
    lines.append("induced cocycle:")
    lines += _cochain_lines(c, "  ")
    lines.append("result: PASS")
    if args.output:
        analysis = {
            "representation": representation_to_obj(R),
            "cochain": cochain_to_obj(c),
        }
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(analysis, indent=2) + "\n")
        obj["output"] = args.output
        lines.append(f"written: {args.output}")
    return "pass", obj, lines


def _cmd_extend_equiv(args):
    E1 = parse_extension(_read(args.bundle1))
    E2 = parse_extension(_read(args.bundle2))
    res = extensions_equivalent(E1, E2)
    status = "pass" if res.equivalent else "fail"
    obj = {
        "command": "extend-equiv",
        "status": status,
        "dimension": E1.base.n,
        "module_dimension": E1.m,
        "equivalence_status": res.status,
        "cohomologous": res.cohomologous,
        "phi": None if res.phi is None else _mat_json(res.phi),
    }
    lines = [f"bundles: {args.bundle1} vs {args.bundle2}",
             f"status: {res.status}",
             f"cohomologous: {'yes' if res.cohomologous else 'no'}"]
    if res.phi is not None:
        lines.append(f"phi = {_mat_text(res.phi)}")
    lines.append(f"result: {status.upper()}")
    return status, obj, lines


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bolalg",
        description="Exact computations with Bol algebras: verification, "
                    "representations, (2,3)-cohomology, deformations, and "
                    "abelian extensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true",
                       help="emit a machine-readable JSON report")
        p.set_defaults(handler=handler)
        return p

    def add_rep_source(p):
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--adjoint", action="store_true",
                           help="use the adjoint representation")
        group.add_argument("--rep", metavar="FILE",
                           help="representation file over the algebra")

    p = add("verify", _cmd_verify, "verify the axioms of an algebra file")
    p.add_argument("algebra")

    p = add("maltsev-to-bol", _cmd_maltsev_to_bol,
            "construct the Bol algebra associated with a Maltsev algebra")
    p.add_argument("algebra")
    p.add_argument("-o", "--output", help="write the constructed algebra here")

    p = add("adjoint", _cmd_adjoint, "construct the adjoint representation")
    p.add_argument("algebra")
    p.add_argument("-o", "--output", help="write the representation here")

    p = add("induce-rep", _cmd_induce_rep,
            "induce a Bol representation from a Maltsev action")
    p.add_argument("algebra", help="maltsev algebra file")
    p.add_argument("action", help="action file (module_dimension + rho)")
    p.add_argument("-o", "--output", help="write the representation here")

    p = add("verify-rep", _cmd_verify_rep, "verify a representation file")
    p.add_argument("algebra")
    p.add_argument("rep")

    p = add("delta-check", _cmd_delta_check,
            "check the Delta commutator identity of a representation")
    p.add_argument("algebra")
    add_rep_source(p)

    p = add("pseudoderivations", _cmd_pseudoderivations,
            "basis of the pseudoderivation space (maps with companion)")
    p.add_argument("algebra")
    add_rep_source(p)

    p = add("cohomology", _cmd_cohomology,
            "dimensions and bases of the (2,3)-cohomology")
    p.add_argument("algebra")
    add_rep_source(p)

    p = add("is-cocycle", _cmd_is_cocycle, "test the cocycle conditions")
    p.add_argument("algebra")
    p.add_argument("cochain")
    add_rep_source(p)

    p = add("is-coboundary", _cmd_is_coboundary,
            "test for a coboundary witness (f, chi)")
    p.add_argument("algebra")
    p.add_argument("cochain")
    add_rep_source(p)

    p = add("deform-check", _cmd_deform_check,
            "does the pair generate a t-parameter infinitesimal deformation?")
    p.add_argument("algebra")
    p.add_argument("cochain")

    p = add("deform-formal", _cmd_deform_formal,
            "first-order formal deformation closure equations")
    p.add_argument("algebra")
    p.add_argument("cochain")

    p = add("deform-equiv", _cmd_deform_equiv,
            "first-order equivalence of two deformation data")
    p.add_argument("algebra")
    p.add_argument("cochain1")
    p.add_argument("cochain2")

    p = add("extend-build", _cmd_extend_build,
            "build the twisted-product extension of a cocycle")
    p.add_argument("algebra")
    p.add_argument("cochain")
    add_rep_source(p)
    p.add_argument("-o", "--output", help="write the extension bundle here")

    p = add("extend-analyze", _cmd_extend_analyze,
            "validate an extension bundle and read off its data")
    p.add_argument("bundle")
    p.add_argument("-o", "--output",
                   help="write the induced representation and cocycle here")

    p = add("extend-equiv", _cmd_extend_equiv,
            "equivalence of two extension bundles")
    p.add_argument("bundle1")
    p.add_argument("bundle2")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    try:
        status, obj, lines = args.handler(args)
    except (VerificationError, InvalidExtensionError) as exc:
        obj = {
            "command": command,
            "status": "fail",
            "message": str(exc),
        }
        if exc.report is not None:
            obj["checks"] = _checks_json(exc.report)
        if args.json:
            print(json.dumps(obj, indent=2))
        else:
            print(f"FAIL: {exc}")
            if exc.report is not None:
                for line in _check_lines(exc.report):
                    print(line)
        return EXIT_FAIL
    except (ParseError, ValueError) as exc:
        obj = {"command": command, "status": "error", "message": str(exc)}
        if args.json:
            print(json.dumps(obj, indent=2))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if args.json:
        print(json.dumps(obj, indent=2))
    else:
        for line in lines:
            print(line)
    return EXIT_PASS if status == "pass" else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
