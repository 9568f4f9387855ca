"""Command-line front end: ``movsurf matrices|spaces|resultant|implicitize|verify``.

Surfaces are read from a line-oriented ``key=value`` file::

    case=tensor
    m=1
    n=1
    x1=s*t+u*v
    ...

Exit codes: 0 success, 1 failed check / refused computation, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .exactla import ExactMatrix
from .identities import IDENTITIES, run_suite
from .implicitize import (
    MethodHypothesisError,
    implicit_direct_resultant,
    implicit_moving_quadrics,
    validate_on_surface,
)
from .movmat import (
    block_label_name,
    build_MP,
    build_MP_I,
    build_MQd,
    build_MSd,
    build_MTd,
    moving_space_basis,
)
from .polycore import (
    TENSOR_VARS,
    TRIANGULAR_VARS,
    ParamSurface,
    PolySyntaxError,
    SparsePoly,
    parse_poly,
)
from .resultant import BasePointError, ResultantVanishes, macaulay_res, res_dixon, res_koszul

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(ValueError):
    """Malformed surface description or inconsistent flags."""


@dataclass
class SurfaceSpec:
    case: str
    degrees: tuple[int, ...]
    polys: dict = field(default_factory=dict)

    @property
    def vars(self) -> tuple[str, ...]:
        return TENSOR_VARS if self.case == "tensor" else TRIANGULAR_VARS

    def parsed(self, name: str) -> SparsePoly:
        try:
            return parse_poly(self.polys[name], self.vars)
        except PolySyntaxError as e:
            raise InputError(f"{name}: {e}") from None

    def surface(self) -> ParamSurface:
        missing = [k for k in ("x1", "x2", "x3", "x4") if k not in self.polys]
        if missing:
            raise InputError(f"missing {', '.join(missing)}")
        xs = tuple(self.parsed(f"x{i}") for i in range(1, 5))
        try:
            return ParamSurface(self.case, self.degrees, xs)
        except ValueError as e:
            raise InputError(str(e)) from None

    def triple(self) -> tuple[SparsePoly, SparsePoly, SparsePoly]:
        """``f1..f3`` if given, otherwise ``x1..x3``; degrees are checked."""
        prefix = "f" if "f1" in self.polys else "x"
        names = [f"{prefix}{i}" for i in (1, 2, 3)]
        missing = [k for k in names if k not in self.polys]
        if missing:
            raise InputError(f"missing {', '.join(missing)}")
        out = []
        for name in names:
            p = self.parsed(name)
            try:
                got = p.bidegree() if self.case == "tensor" else (p.homogeneous_degree(),)
            except ValueError as e:
                raise InputError(f"{name}: {e}") from None
            if got != self.degrees:
                raise InputError(f"{name} has degree {got}, declared {self.degrees}")
            out.append(p)
        return tuple(out)


def _int(key: str, value: str) -> int:
    try:
        k = int(value)
    except ValueError:
        raise InputError(f"{key} must be an integer, got {value!r}") from None
    if k < 1:
        raise InputError(f"{key} must be positive, got {k}")
    return k


def parse_spec(text: str, case: str | None = None, m: int | None = None,
               n: int | None = None) -> SurfaceSpec:
    """Parse the ``key=value`` format; command-line values override the file."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InputError(f"line {lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in ("case", "m", "n", "x1", "x2", "x3", "x4", "f1", "f2", "f3"):
            raise InputError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise InputError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = value
    declared = {k: _int(k, raw.pop(k)) for k in ("m", "n") if k in raw}
    case = case or raw.pop("case", None)
    raw.pop("case", None)
    if case not in ("tensor", "triangular"):
        raise InputError(f"case must be 'tensor' or 'triangular', got {case!r}")
    n = n if n is not None else declared.get("n")
    if n is None:
        raise InputError("missing degree n")
    if case == "tensor":
        m = m if m is not None else declared.get("m")
        if m is None:
            raise InputError("tensor surfaces need m")
        degrees = (m, n)
    else:
        if "m" in declared:
            raise InputError("triangular surfaces take only n")
        degrees = (n,)
    return SurfaceSpec(case, degrees, raw)


# formatting --------------------------------------------------------------

def _mono(vars, e) -> str:
    return str(SparsePoly.monomial(vars, e))


def _col_label(vars, label) -> str:
    block, mu = label
    return f"{block_label_name(block)}|{_mono(vars, mu)}"


def matrix_report(name: str, A: ExactMatrix, vars) -> dict:
    rows = [_mono(vars, r if not isinstance(r[0], tuple) else r[1]) for r in A.row_labels]
    return {
        "matrix": name,
        "shape": [A.nrows, A.ncols],
        "rows": rows,
        "columns": [_col_label(vars, c) for c in A.col_labels],
        "entries": [[str(x) for x in r] for r in A.rows],
    }


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _parse_index_set(text: str | None):
    if text is None:
        return None
    try:
        return tuple(tuple(int(a) for a in p.split(",")) for p in text.split(";") if p.strip())
    except ValueError:
        raise InputError(f"index set must look like '0,0;1,0', got {text!r}") from None


def _parse_sigma(text: str, case: str):
    try:
        parts = tuple(int(a) for a in text.split(","))
    except ValueError:
        raise InputError(f"sigma must be integers, got {text!r}") from None
    want = 2 if case == "tensor" else 1
    if len(parts) != want or min(parts) < 0:
        raise InputError(f"sigma for a {case} surface needs {want} non-negative integer(s)")
    return parts


# commands ----------------------------------------------------------------

def _load(args) -> SurfaceSpec:
    if not args.input:
        raise InputError("--input FILE is required")
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError(f"cannot read {args.input}: {e.strerror}") from None
    return parse_spec(text, args.case, getattr(args, "m", None), getattr(args, "n", None))


def cmd_matrices(args) -> int:
    spec = _load(args)
    S = spec.surface()
    I = _parse_index_set(args.index_set)
    which, d = args.which, args.d
    try:
        if which == "MP":
            A, name = (build_MP_I(S, I), "MP_I") if I else (build_MP(S), "MP")
        elif which == "MQ":
            A, name = build_MQd(S, d), f"MQ^{d}"
        elif which == "MS":
            A, name = build_MSd(S, d, I), f"MS^{d}" + ("_I" if I else "")
        else:
            A, name = build_MTd(S, d, I), f"MT^{d}" + ("_I" if I else "")
    except ValueError as e:
        raise InputError(str(e)) from None
    rep = matrix_report(name, A, S.vars)
    lines = [f"{name} of {S}", f"{A.nrows} x {A.ncols}",
             "rows: " + " ".join(rep["rows"]),
             "columns: " + " ".join(rep["columns"]), "entries:"]
    lines += [" ".join(r) for r in rep["entries"]]
    _emit(args, rep, lines)
    return EXIT_OK


def cmd_spaces(args) -> int:
    spec = _load(args)
    S = spec.surface()
    sigma = _parse_sigma(args.sigma, S.kind)
    basis = moving_space_basis(S, args.d, sigma)
    data = {"surface": str(S), "d": args.d, "sigma": list(sigma),
            "dimension": len(basis), "basis": [str(b) for b in basis]}
    lines = [f"moving surfaces of degree {args.d}, sigma={','.join(map(str, sigma))} for {S}",
             f"dimension {len(basis)}"] + [f"  {b}" for b in basis]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_resultant(args) -> int:
    spec = _load(args)
    f1, f2, f3 = spec.triple()
    engine = args.engine
    if engine == "dixon" and spec.case != "tensor":
        raise InputError("the dixon engine handles tensor (bidegree) triples")
    if engine == "macaulay" and spec.case != "triangular":
        raise InputError("the macaulay engine handles triangular (ternary form) triples")
    if engine == "koszul":
        try:
            value = res_koszul(f1, f2, f3, spec.case)
        except ResultantVanishes:
            value = Fraction(0)
    elif engine == "dixon":
        value = res_dixon(f1, f2, f3)
    else:
        value = macaulay_res(f1, f2, f3)
    data = {"engine": engine, "case": spec.case, "degrees": list(spec.degrees),
            "polynomials": [str(f1), str(f2), str(f3)], "resultant": str(value)}
    lines = [f"engine: {engine}", f"case: {spec.case} {'x'.join(map(str, spec.degrees))}",
             f"f1 = {f1}", f"f2 = {f2}", f"f3 = {f3}", f"resultant: {value}"]
    _emit(args, data, lines)
    return EXIT_OK


def cmd_implicitize(args) -> int:
    spec = _load(args)
    S = spec.surface()
    start = time.perf_counter()
    try:
        if args.method == "mq":
            r = implicit_moving_quadrics(S)
        else:
            r = implicit_direct_resultant(S)
    except (BasePointError, MethodHypothesisError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_FAIL
    val = validate_on_surface(r.F, S, trials=args.trials, seed=args.seed)
    checks = dict(r.checks)
    checks[f"F vanishes at {val.trials} image points"] = val.passed
    data = {"surface": str(S), "method": r.method, "F": str(r.F), "degree": r.degree,
            "root": str(r.root), "power": r.power,
            "checks": checks, "passed": all(checks.values())}
    lines = [f"surface: {S}", f"method: {r.method}", f"F = {r.F}", f"degree: {r.degree}",
             f"F = c * ({r.root})^{r.power}"]
    lines += [f"[{'PASS' if ok else 'FAIL'}] {name}" for name, ok in checks.items()]
    if args.timing:
        data["elapsed"] = time.perf_counter() - start
        lines.append(f"elapsed: {data['elapsed']:.3f}s")
    _emit(args, data, lines)
    return EXIT_OK if data["passed"] else EXIT_FAIL


def cmd_verify(args) -> int:
    surface = None
    if args.input:
        spec = _load(args)
        surface = spec.surface()
        kind, degrees = surface.kind, surface.degrees
    else:
        kind = args.case or "tensor"
        if kind not in ("tensor", "triangular"):
            raise InputError(f"case must be 'tensor' or 'triangular', got {kind!r}")
        n = args.n or 1
        degrees = (args.m or 1, n) if kind == "tensor" else (n,)
    if args.identity == "conj-61" and kind != "tensor":
        raise InputError("conj-61 is a tensor-product identity; use conj-62 for triangular")
    if args.identity == "conj-62" and kind != "triangular":
        raise InputError("conj-62 is a triangular identity; use conj-61 for tensor")
    command = "movsurf " + " ".join(a for a in args.argv if a != "--timing")
    report = run_suite(args.identity, kind, degrees, d=args.d, trials=args.trials,
                       seed=args.seed, command=command, surface=surface,
                       all_index_sets=True if args.all_index_sets else None,
                       timing=args.timing)
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


# argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="movsurf", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, need_input=True):
        sp.add_argument("--input", required=need_input, help="surface file (key=value lines)")
        sp.add_argument("--case", choices=("tensor", "triangular"))
        sp.add_argument("--m", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--json", action="store_true", help="machine-readable report")

    sp = sub.add_parser("matrices", help="dump a moving-surface coefficient matrix")
    common(sp)
    sp.add_argument("--which", choices=("MP", "MQ", "MS", "MT"), default="MP")
    sp.add_argument("--d", type=int, default=2)
    sp.add_argument("--index-set", help="triangular index set, e.g. '0,0;1,0'")
    sp.set_defaults(func=cmd_matrices)

    sp = sub.add_parser("spaces", help="basis of moving surfaces of a given degree")
    common(sp)
    sp.add_argument("--d", type=int, default=1)
    sp.add_argument("--sigma", required=True, help="'i,j' (tensor) or 'k' (triangular)")
    sp.set_defaults(func=cmd_spaces)

    sp = sub.add_parser("resultant", help="resultant of three forms")
    common(sp)
    sp.add_argument("--engine", choices=("koszul", "dixon", "macaulay"), default="koszul")
    sp.set_defaults(func=cmd_resultant)

    sp = sub.add_parser("implicitize", help="implicit equation of a surface")
    common(sp)
    sp.add_argument("--method", choices=("mq", "res"), default="mq")
    sp.add_argument("--trials", type=int, default=25, help="image points to validate on")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--timing", action="store_true")
    sp.set_defaults(func=cmd_implicitize)

    sp = sub.add_parser("verify", help="check a determinant identity on random or given surfaces")
    common(sp, need_input=False)
    sp.add_argument("--identity", choices=IDENTITIES, required=True)
    sp.add_argument("--d", type=int, default=2)
    sp.add_argument("--trials", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--all-index-sets", action="store_true")
    sp.add_argument("--timing", action="store_true")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    args.argv = argv
    for key in ("d", "trials", "m", "n"):
        v = getattr(args, key, None)
        if v is not None and v < (0 if key == "trials" else 1):
            sys.stderr.write(f"error: --{key} must be positive\n")
            return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
