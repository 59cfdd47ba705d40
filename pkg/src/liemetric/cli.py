"""Batch command-line interface.

Algebra files are UTF-8 JSON:

    {
      "dim": 3,
      "basis_names": ["E1", "E2", "Z"],          # optional
      "brackets": [{"i": 0, "j": 1, "coeffs": {"2": 0.816}}],
      "metric": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    }

Exit codes: 0 success, 2 parse/validation failure, 3 mathematical
precondition failure, 4 verification failure (a certified invariant of a
constructed object did not hold).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .classify import TYPE_I, TYPE_II, classify_ricci, decompose_double_extension, type_I_decomposition, type_II_canonical_basis
from .constructions import DoubleExtensionSpec, catalog, check_parallel_conditions, complexify, double_extension, extension_invariants, type_I_metric
from .errors import (
    BadParamsError,
    DegenerateFormError,
    DimensionMismatchError,
    JacobiError,
    LieMetricError,
    NullImageError,
    ParseError,
    StructureMismatchError,
    ValidationError,
    VerificationError,
)
from .geometry import MetricLieAlgebra, is_ad_invariant, is_einstein, is_ricci_flat, is_ricci_parallel, ricci
from .lie import LieAlgebra, structure_report, validate_jacobi
from .linalg import SymmetricForm, Tolerance, signature

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_VERIFY = 4

_PARSE_ERRORS = (ParseError, ValidationError)
_VERIFY_ERRORS = (VerificationError, StructureMismatchError, NullImageError)


def _exit_code(exc: LieMetricError) -> int:
    if isinstance(exc, _PARSE_ERRORS):
        return EXIT_PARSE
    if isinstance(exc, _VERIFY_ERRORS):
        return EXIT_VERIFY
    return EXIT_PRECONDITION


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _emit(obj, out: str | None):
    text = _dump(obj)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# algebra file format
# ---------------------------------------------------------------------------


def load_algebra_file(path, tol: Tolerance) -> MetricLieAlgebra:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    if "dim" not in doc or not isinstance(doc["dim"], int) or doc["dim"] < 1:
        raise ParseError(f"{path}: field 'dim' must be a positive integer")
    dim = doc["dim"]

    structure = {}
    for rec_no, rec in enumerate(doc.get("brackets", [])):
        where = f"{path}: brackets[{rec_no}]"
        if not isinstance(rec, dict) or "i" not in rec or "j" not in rec:
            raise ParseError(f"{where}: each record needs integer fields 'i' and 'j'")
        i, j = rec["i"], rec["j"]
        if not isinstance(i, int) or not isinstance(j, int):
            raise ParseError(f"{where}: 'i' and 'j' must be integers")
        if not (0 <= i < j < dim):
            raise ParseError(f"{where}: need 0 <= i < j < dim, got i={i}, j={j}")
        if (i, j) in structure:
            raise ParseError(f"{where}: duplicate bracket pair ({i}, {j})")
        coeffs = np.zeros(dim)
        for key, val in rec.get("coeffs", {}).items():
            try:
                k = int(key)
            except (TypeError, ValueError):
                raise ParseError(f"{where}: coefficient index {key!r} is not an integer") from None
            if not (0 <= k < dim):
                raise ParseError(f"{where}: coefficient index {k} out of range")
            if not isinstance(val, (int, float)) or isinstance(val, bool):
                raise ParseError(f"{where}: coefficient value for index {k} must be a number")
            coeffs[k] = float(val)
        structure[(i, j)] = coeffs

    metric = doc.get("metric")
    if metric is None:
        raise ParseError(f"{path}: field 'metric' is required")
    try:
        gram = np.asarray(metric, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: metric is not a numeric matrix: {exc}") from exc
    if gram.shape != (dim, dim):
        raise ParseError(f"{path}: metric must be {dim}x{dim}, got shape {gram.shape}")

    names = doc.get("basis_names")
    if names is not None and (not isinstance(names, list) or len(names) != dim):
        raise ParseError(f"{path}: basis_names must list {dim} labels")

    try:
        algebra = LieAlgebra(dim, structure, basis_names=names).validate(tol)
    except JacobiError as exc:
        raise ValidationError(f"{path}: Jacobi identity fails (residual {exc.residual:.3e})") from exc
    try:
        form = SymmetricForm(gram, tol)
    except DegenerateFormError as exc:
        raise ValidationError(f"{path}: metric nondegeneracy fails: {exc}") from exc
    except ValueError as exc:
        raise ValidationError(f"{path}: metric symmetry fails: {exc}") from exc
    return MetricLieAlgebra(algebra, form, tol)


def algebra_to_dict(m: MetricLieAlgebra) -> dict:
    brackets = []
    for (i, j) in sorted(m.algebra.structure):
        vec = m.algebra.structure[(i, j)]
        coeffs = {str(k): float(vec[k]) for k in range(m.dim) if vec[k] != 0.0}
        if coeffs:
            brackets.append({"i": i, "j": j, "coeffs": coeffs})
    doc = {"dim": m.dim}
    if m.algebra.basis_names is not None:
        doc["basis_names"] = list(m.algebra.basis_names)
    doc["brackets"] = brackets
    doc["metric"] = [[float(x) for x in row] for row in m.gram]
    return doc


def _matrix(a) -> list:
    return [[float(x) for x in row] for row in np.asarray(a)]


def _vector(v) -> list:
    return [float(x) for x in np.asarray(v)]


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


def build_report(m: MetricLieAlgebra, tol: Tolerance) -> dict:
    sig = signature(m.metric, tol)
    rep = structure_report(m.algebra, tol)
    einstein_c, einstein_res = is_einstein(m, tol)
    flat, flat_res = is_ricci_flat(m, tol)
    par = is_ricci_parallel(m, tol)
    adinv, adinv_res = is_ad_invariant(m, tol)
    cls = classify_ricci(m, tol)
    data = ricci(m)

    eig = np.linalg.eigvals(data.operator)
    eigs = sorted(({"re": float(z.real), "im": float(z.imag)} for z in eig),
                  key=lambda e: (e["re"], e["im"]))

    report = {
        "tool": "liemetric",
        "version": __version__,
        "tolerance": {"abs": tol.abs, "rel": tol.rel, "rank": tol.rank},
        "dim": m.dim,
        "signature": {"p": sig.p, "q": sig.q},
        "jacobi_residual": float(validate_jacobi(m.algebra)),
        "structure": {
            "is_nilpotent": rep.is_nilpotent,
            "is_solvable": rep.is_solvable,
            "is_unimodular": rep.is_unimodular,
            "center_dim": rep.center_dim,
            "derived_dim": rep.derived_dim,
            "nilpotency_step": rep.nilpotency_step,
        },
        "einstein": {
            "flag": einstein_c is not None,
            "constant": einstein_c,
            "residual": einstein_res,
        },
        "ricci_flat": {"flag": flat, "residual": flat_res},
        "ricci_parallel": {
            "flag": par.ok,
            "commutator_residual": par.commutator_residual,
            "nabla_ric_residual": par.nabla_residual,
        },
        "ad_invariant": {"flag": adinv, "residual": adinv_res},
        "classification": {
            "tag": cls.tag,
            "constant": cls.constant,
            "lambda": cls.lam,
            "mu": cls.mu,
            "residuals": {k: (None if v is None else float(v)) for k, v in cls.residuals.items()},
        },
        "scalar_curvature": data.scalar,
        "ricci_eigenvalues": eigs,
        "type_I": None,
        "type_II": None,
    }

    if cls.tag == TYPE_I:
        dec = type_I_decomposition(m, cls, tol)
        report["type_I"] = {
            "lambda": dec.lam,
            "mu": dec.mu,
            "J": _matrix(dec.J),
            "einstein_metric": _matrix(dec.einstein_metric.gram),
            "residuals": {k: float(v) for k, v in dec.residuals.items()},
        }
    elif cls.tag == TYPE_II and sig.p == 1:
        canon = type_II_canonical_basis(m, tol)
        report["type_II"] = {
            "basis": _matrix(canon.basis),
            "gram_sign": canon.gram_sign,
            "residuals": {k: float(v) for k, v in canon.residuals.items()},
        }
    return report


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _cmd_validate(args, tol: Tolerance) -> int:
    m = load_algebra_file(args.path, tol)
    sig = signature(m.metric, tol)
    diag = {
        "file": str(args.path),
        "dim": m.dim,
        "jacobi_residual": float(validate_jacobi(m.algebra)),
        "metric_signature": {"p": sig.p, "q": sig.q},
        "valid": True,
    }
    if args.json or args.out:
        _emit(diag, args.out)
    else:
        print(f"{args.path}: dim {m.dim}, signature ({sig.p},{sig.q}), "
              f"jacobi residual {diag['jacobi_residual']:.3e}: OK")
    return EXIT_OK


def _cmd_report(args, tol: Tolerance) -> int:
    path = Path(args.path)
    if path.is_dir():
        reports = []
        for child in sorted(path.glob("*.json")):
            m = load_algebra_file(child, tol)
            reports.append({"file": child.name, "report": build_report(m, tol)})
        _emit(reports, args.out)
        return EXIT_OK
    m = load_algebra_file(path, tol)
    report = build_report(m, tol)
    if args.json or args.out:
        _emit(report, args.out)
    else:
        cls = report["classification"]
        print(f"{args.path}: dim {report['dim']}, signature "
              f"({report['signature']['p']},{report['signature']['q']})")
        print(f"  classification: {cls['tag']}")
        print(f"  einstein: {report['einstein']['flag']} (c={report['einstein']['constant']})")
        print(f"  ricci_flat: {report['ricci_flat']['flag']}")
        print(f"  ricci_parallel: {report['ricci_parallel']['flag']}")
        print(f"  ad_invariant: {report['ad_invariant']['flag']}")
    return EXIT_OK


def _load_extension_data(path, dim: int):
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: extension data must be an object")
    try:
        d = np.asarray(doc.get("D", np.zeros((dim, dim))), dtype=float)
        k = np.asarray(doc.get("K", np.zeros((dim, dim))), dtype=float)
        lvec = np.asarray(doc.get("L", np.zeros(dim)), dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{path}: D, K, L must be numeric arrays: {exc}") from exc
    return d, k, lvec


def _cmd_double_extend(args, tol: Tolerance) -> int:
    base = load_algebra_file(args.base, tol)
    d, k, lvec = _load_extension_data(args.ext, base.dim)
    try:
        spec = DoubleExtensionSpec(base=base, D=d, K=k, L=lvec)
    except DimensionMismatchError as exc:
        raise ParseError(f"{args.ext}: {exc}") from exc
    ext = double_extension(spec, tol)
    inv = extension_invariants(spec)
    cond = check_parallel_conditions(spec, tol)
    par = is_ricci_parallel(ext, tol)
    sidecar = {
        "delta": _vector(inv.delta),
        "gamma": inv.gamma,
        "conditions": {name: float(res) for name, res in cond.conditions.items()},
        "base_ricci_parallel": cond.base_parallel.ok,
        "conditions_verdict": cond.ok,
        "extension_ricci_parallel": par.ok,
    }
    if args.out:
        _emit(algebra_to_dict(ext), args.out)
        _emit(sidecar, args.out + ".sidecar.json")
    else:
        _emit({"algebra": algebra_to_dict(ext), "sidecar": sidecar}, None)
    return EXIT_OK


def _cmd_complexify(args, tol: Tolerance) -> int:
    base = load_algebra_file(args.base, tol)
    if args.type1 is not None:
        lam, mu = args.type1
        m = type_I_metric(base, lam, mu, tol)
        dec = type_I_decomposition(m, None, tol)
        sidecar = {
            "lambda": dec.lam,
            "mu": dec.mu,
            "J": _matrix(dec.J),
            "einstein_metric": _matrix(dec.einstein_metric.gram),
        }
    else:
        m, j = complexify(base)
        sidecar = {"J": _matrix(j)}
    if args.out:
        _emit(algebra_to_dict(m), args.out)
        _emit(sidecar, args.out + ".sidecar.json")
    else:
        _emit({"algebra": algebra_to_dict(m), "sidecar": sidecar}, None)
    return EXIT_OK


def _cmd_decompose(args, tol: Tolerance) -> int:
    m = load_algebra_file(args.path, tol)
    dec = decompose_double_extension(m, tol)
    sidecar = {
        "D": _matrix(dec.spec.D),
        "K": _matrix(dec.spec.K),
        "L": _vector(dec.spec.L),
        "basis": _matrix(dec.basis),
        "residuals": {k: float(v) for k, v in dec.residuals.items()},
    }
    if args.out:
        _emit(algebra_to_dict(dec.spec.base), args.out)
        _emit(sidecar, args.out + ".sidecar.json")
    else:
        _emit({"algebra": algebra_to_dict(dec.spec.base), "sidecar": sidecar}, None)
    return EXIT_OK


def _cmd_catalog(args, tol: Tolerance) -> int:
    try:
        params = json.loads(args.params) if args.params else {}
    except json.JSONDecodeError as exc:
        raise BadParamsError(f"--params is not valid JSON: {exc.msg}") from exc
    if not isinstance(params, dict):
        raise BadParamsError("--params must be a JSON object")
    m = catalog(args.name, tol, **params)
    _emit(algebra_to_dict(m), args.out)
    return EXIT_OK


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--tol-abs", type=float, default=1e-9, help="absolute residual floor")
    parser.add_argument("--tol-rel", type=float, default=1e-9, help="scale-relative residual factor")
    parser.add_argument("--tol-rank", type=float, default=1e-8, help="singular-value cutoff")
    parser.add_argument("--out", default=None, help="write JSON output to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="liemetric",
                                     description="curvature and Ricci classification on metric Lie algebras")
    parser.add_argument("--version", action="version", version=f"liemetric {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an algebra file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("report", help="full geometric report (file or directory)")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    _add_common(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("double-extend", help="double extension of a base algebra file")
    p.add_argument("base")
    p.add_argument("ext", help="JSON file with fields D, K, L")
    _add_common(p)
    p.set_defaults(func=_cmd_double_extend)

    p = sub.add_parser("complexify", help="double the algebra with the split metric")
    p.add_argument("base")
    p.add_argument("--type1", nargs=2, type=float, metavar=("LAM", "MU"), default=None,
                   help="build the mixed metric with Ricci lambda*Id + mu*J")
    _add_common(p)
    p.set_defaults(func=_cmd_complexify)

    p = sub.add_parser("decompose", help="peel a Lorentz type-II metric into extension data")
    p.add_argument("path")
    _add_common(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("catalog", help="emit a named catalog algebra")
    p.add_argument("name")
    p.add_argument("--params", default=None, help="JSON object of parameters, e.g. '{\"n\": 2}'")
    _add_common(p)
    p.set_defaults(func=_cmd_catalog)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        tol = Tolerance(abs=args.tol_abs, rel=args.tol_rel, rank=args.tol_rank)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args, tol)
    except LieMetricError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return _exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
