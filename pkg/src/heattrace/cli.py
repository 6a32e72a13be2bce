"""Command-line entry point: ``heattrace <subcommand> [flags]``.

Subcommands: coeffs, trace, fit, regularize, symbols, verify-all.
Exit codes: 0 pass, 2 validation error, 3 tolerance failure, 4 internal
consistency failure.  Errors are reported as a JSON record on stderr.

Weight defaults: ``--alpha 0`` with no cutoff flags and no F_1, F_2 is the
constant weight F_0 on the whole manifold; any other weight needs a cutoff,
which defaults to eps0 = 0.4 and eps = 0.6 times the collar width.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import HeatTraceError, InternalConsistencyError, ToleranceFailure, ValidationError
from .geometry import ALL_KINDS, ModelGeometry, make_geometry

DEFAULT_EPS0_FRACTION = 0.4
DEFAULT_EPS_FRACTION = 0.6


# ------------------------------------------------------------------ serialization


def _num(x: float) -> str:
    if math.isnan(x):
        return '"nan"'
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    text = f"{x:.17g}"
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON with every float written to 17 significant digits."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if obj is None or isinstance(obj, bool):
        return "null" if obj is None else ("true" if obj else "false")
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _num(float(obj))
    if isinstance(obj, complex):
        return dumps([obj.real, obj.imag], indent, _level)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, np.ndarray):
        return dumps(obj.tolist(), indent, _level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}{dumps(v, indent, _level + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


# ------------------------------------------------------------------ config


def _alpha(text: str):
    try:
        z = complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid alpha {text!r}") from None
    return z.real if z.imag == 0 else z


@dataclass
class RunConfig:
    """Everything a subcommand needs; validated by :meth:`validate` before any computation."""

    subcommand: str
    geometry: str = "disk"
    length: float | None = None
    radius: float | None = None
    inner: float | None = None
    outer: float | None = None
    rho: float | None = None
    alpha: complex | float = 0.0
    f0: float = 1.0
    f1: float = 0.0
    f2: float = 0.0
    eps0: float | None = None
    eps: float | None = None
    E: float = 0.0
    t_min: float = 1e-4
    t_max: float = 1e-2
    t_points: int = 24
    lambda_max: float | None = None
    n_fit: int | None = None
    input: str | None = None
    output: str | None = None
    tol: list = field(default_factory=list)
    criteria: list | None = None

    def geom(self) -> ModelGeometry:
        return make_geometry(self.geometry, length=self.length, radius=self.radius, inner=self.inner,
                             outer=self.outer, rho=self.rho)

    def weight(self, geom: ModelGeometry | None = None):
        from .weight import CutoffSpec, WeightProfile

        geom = geom or self.geom()
        coeffs = (self.f0, self.f1, self.f2)
        while len(coeffs) > 1 and coeffs[-1] == 0.0:
            coeffs = coeffs[:-1]
        constant = self.alpha == 0 and len(coeffs) == 1 and self.eps0 is None and self.eps is None
        if constant:
            return WeightProfile(0.0, coeffs, None)
        width = min(c.collar_width for c in geom.boundary_data())
        eps0 = DEFAULT_EPS0_FRACTION * width if self.eps0 is None else self.eps0
        eps = DEFAULT_EPS_FRACTION * width if self.eps is None else self.eps
        return WeightProfile(self.alpha, coeffs, CutoffSpec(eps0, eps))

    def scalar_tol(self, default: float) -> float:
        plain = [t for t in self.tol if "=" not in t]
        if any("=" in t for t in self.tol):
            raise ValidationError("per-criterion tolerances (ID=VALUE) are only accepted by verify-all")
        if not plain:
            return default
        if len(plain) > 1:
            raise ValidationError("--tol given more than once")
        return _positive_float(plain[0], "--tol")

    def criterion_tols(self) -> dict:
        out = {}
        for t in self.tol:
            if "=" not in t:
                raise ValidationError("verify-all expects --tol ID=VALUE")
            k, v = t.split("=", 1)
            try:
                out[int(k)] = _positive_float(v, f"--tol {k}")
            except ValueError:
                raise ValidationError(f"invalid criterion id {k!r}") from None
        return out

    def validate(self):
        if self.geometry not in ALL_KINDS:
            raise ValidationError(f"unknown geometry {self.geometry!r}")
        for name in ("length", "radius", "inner", "outer", "rho", "eps0", "eps", "lambda_max"):
            v = getattr(self, name)
            if v is not None and not (math.isfinite(v) and v > 0):
                raise ValidationError(f"--{name.replace('_', '-')} must be positive, got {v}")
        for name in ("f0", "f1", "f2", "E"):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f"--{name} must be finite")
        if (self.eps0 is None) != (self.eps is None):
            raise ValidationError("--eps0 and --eps must be given together")
        if self.subcommand in ("coeffs", "trace", "fit", "regularize"):
            geom = self.geom()
            self.weight(geom)
        if self.subcommand == "trace":
            if not (math.isfinite(self.t_min) and math.isfinite(self.t_max) and 0 < self.t_min <= self.t_max):
                raise ValidationError("need 0 < --t-min <= --t-max")
            if self.t_points < 1 or (self.t_points == 1 and self.t_min != self.t_max):
                raise ValidationError("--t-points must be >= 1 (exactly 1 only when t-min == t-max)")
            self.scalar_tol(1e-9)
        if self.subcommand == "fit" and not self.input:
            raise ValidationError("fit needs --input (a CSV written by the trace subcommand)")
        if self.subcommand == "fit" and self.n_fit is not None and self.n_fit < 1:
            raise ValidationError("--n-fit must be >= 1")
        if self.subcommand == "verify-all":
            self.criterion_tols()
        return self

    def t_grid(self) -> np.ndarray:
        if self.t_points == 1:
            return np.array([self.t_min])
        return np.geomspace(self.t_min, self.t_max, self.t_points)

    def to_json(self) -> dict:
        d = asdict(self)
        if self.subcommand != "trace":
            for k in ("t_min", "t_max", "t_points", "lambda_max"):
                d.pop(k)
        if self.subcommand in ("symbols", "verify-all"):
            for k in list(d):
                if k not in ("subcommand", "output", "tol", "criteria"):
                    d.pop(k)
        return {k: v for k, v in d.items() if v is not None and v != []}


def _positive_float(text, what) -> float:
    try:
        v = float(text)
    except ValueError:
        raise ValidationError(f"{what} must be a number, got {text!r}") from None
    if not (math.isfinite(v) and v > 0):
        raise ValidationError(f"{what} must be positive, got {text!r}")
    return v


# ------------------------------------------------------------------ subcommands


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_coeffs(cfg: RunConfig) -> int:
    from .predict import full_expansion

    geom = cfg.geom()
    exp = full_expansion(geom, cfg.weight(geom), cfg.E)
    _emit(dumps({"config": cfg.to_json(), **exp.to_json()}) + "\n", cfg.output)
    return 0


def cmd_trace(cfg: RunConfig) -> int:
    from .spectrum import weighted_trace

    geom = cfg.geom()
    if cfg.E != 0:
        raise ValidationError("numeric traces are for the Dirichlet Laplacian (E = 0)")
    s = weighted_trace(geom, cfg.weight(geom), cfg.t_grid(), tol=cfg.scalar_tol(1e-9), lambda_max=cfg.lambda_max)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "value", "tail_bound"])
    for row in zip(s.t, s.values, s.truncation_bound):
        w.writerow([f"{x:.17g}" for x in row])
    _emit(buf.getvalue(), cfg.output)
    return 0


def read_trace_csv(path: str) -> np.ndarray:
    try:
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    if not rows or [c.strip() for c in rows[0][:2]] != ["t", "value"]:
        raise ValidationError(f"{path}: expected a header row starting with t,value")
    try:
        data = np.array([[float(r[0]), float(r[1])] for r in rows[1:] if r], dtype=float)
    except (ValueError, IndexError):
        raise ValidationError(f"{path}: malformed numeric row") from None
    if data.size == 0:
        raise ValidationError(f"{path}: no samples")
    return data


def cmd_fit(cfg: RunConfig) -> int:
    from .fit import fit_coefficients, ladder_from
    from .predict import full_expansion

    data = read_trace_csv(cfg.input)
    geom = cfg.geom()
    pred = full_expansion(geom, cfg.weight(geom), cfg.E)
    ladder = ladder_from(pred)
    n_fit = len(ladder) if cfg.n_fit is None else cfg.n_fit
    rep = fit_coefficients(data, ladder, n_fit, pred)
    _emit(dumps({"config": cfg.to_json(), **rep.to_json(), "meta": rep.meta}) + "\n", cfg.output)
    if not rep.valid:
        raise ToleranceFailure(
            f"fit validity gate failed: residual order {rep.residual_order:.3f} < next power {rep.next_power} - 0.2"
        )
    return 0


def cmd_regularize(cfg: RunConfig) -> int:
    from .regularize import i_reg_weight

    geom = cfg.geom()
    w = cfg.weight(geom)
    rv = i_reg_weight(w, geom)
    out = {"config": cfg.to_json(), "value": rv.value, "pole_dropped": rv.pole_dropped, "residue": rv.residue}
    if w.cutoff is not None:
        e0 = w.cutoff.eps0
        other = i_reg_weight(w, geom, eps=0.5 * e0)
        spread = abs(complex(other.value) - complex(rv.value)) / max(1.0, abs(complex(rv.value)))
        tol = cfg.scalar_tol(1e-10)
        out["eps_check"] = {"eps": [e0, 0.5 * e0], "values": [rv.value, other.value], "rel_spread": spread,
                            "tol": tol, "pass": spread <= tol}
        _emit(dumps(out) + "\n", cfg.output)
        if spread > tol:
            raise ToleranceFailure(f"regularized value depends on eps (spread {spread:.3g} > {tol:g})")
        return 0
    _emit(dumps(out) + "\n", cfg.output)
    return 0


def cmd_symbols(cfg: RunConfig) -> int:
    from .symbols import verify_all

    rep = verify_all()
    _emit(dumps({"config": cfg.to_json(), **rep}) + "\n", cfg.output)
    if not rep["pass"]:
        raise InternalConsistencyError("symbol-calculus identities failed")
    return 0


def cmd_verify_all(cfg: RunConfig) -> int:
    from .acceptance import AcceptanceConfig, run_all

    acc = AcceptanceConfig().with_tolerances(cfg.criterion_tols())
    results = run_all(acc, cfg.criteria, echo=lambda line: print(line, file=sys.stderr, flush=True))
    ok = all(r.passed for r in results)
    if cfg.output:
        # runtimes are wall-clock; they only go into the optional report file
        _emit(dumps({"config": {**cfg.to_json(), "acceptance": acc.to_json()}, "pass": ok,
                     "criteria": [r.to_json() for r in results]}) + "\n", cfg.output)
    print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed", file=sys.stderr)
    return 0 if ok else ToleranceFailure.exit_code


COMMANDS = {
    "coeffs": cmd_coeffs,
    "trace": cmd_trace,
    "fit": cmd_fit,
    "regularize": cmd_regularize,
    "symbols": cmd_symbols,
    "verify-all": cmd_verify_all,
}


# ------------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="heattrace", description="Weighted heat-trace asymptotics with singular boundary weights")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def geometry_flags(sp):
        g = sp.add_argument_group("geometry")
        g.add_argument("--geometry", choices=ALL_KINDS, default="disk")
        for name in ("length", "radius", "inner", "outer", "rho"):
            g.add_argument(f"--{name}", type=float)

    def weight_flags(sp):
        g = sp.add_argument_group("weight")
        g.add_argument("--alpha", type=_alpha, default=0.0, help="real or complex, e.g. 0.5 or 0.5+0.2j")
        g.add_argument("--f0", type=float, default=1.0)
        g.add_argument("--f1", type=float, default=0.0)
        g.add_argument("--f2", type=float, default=0.0)
        g.add_argument("--eps0", type=float, help="plateau radius of the cutoff (default 0.4 x collar width)")
        g.add_argument("--eps", type=float, help="support radius of the cutoff (default 0.6 x collar width)")
        g.add_argument("--E", type=float, default=0.0, help="endomorphism: D = Laplacian - E")

    def out_flag(sp):
        sp.add_argument("--output", "-o", help="output file (default stdout)")

    sp = sub.add_parser("coeffs", help="predicted small-t expansion as JSON")
    geometry_flags(sp), weight_flags(sp), out_flag(sp)

    sp = sub.add_parser("trace", help="weighted heat trace on the exact spectrum as CSV")
    geometry_flags(sp), weight_flags(sp), out_flag(sp)
    sp.add_argument("--t-min", type=float, default=1e-4)
    sp.add_argument("--t-max", type=float, default=1e-2)
    sp.add_argument("--t-points", type=int, default=24)
    sp.add_argument("--lambda-max", type=float)
    sp.add_argument("--tol", action="append", default=[], help="truncation tolerance (default 1e-9)")

    sp = sub.add_parser("fit", help="fit a trace CSV against the predicted exponent ladder")
    geometry_flags(sp), weight_flags(sp), out_flag(sp)
    sp.add_argument("--input", "-i", required=True)
    sp.add_argument("--n-fit", type=int)

    sp = sub.add_parser("regularize", help="regularized integral of the weight")
    geometry_flags(sp), weight_flags(sp), out_flag(sp)
    sp.add_argument("--tol", action="append", default=[], help="eps-independence tolerance (default 1e-10)")

    sp = sub.add_parser("symbols", help="symbol-calculus identity report")
    out_flag(sp)

    sp = sub.add_parser("verify-all", help="run the acceptance suite; exit 0 iff every criterion passes")
    out_flag(sp)
    sp.add_argument("--tol", action="append", default=[], metavar="ID=VALUE", help="override a criterion tolerance")
    sp.add_argument("--criteria", type=int, nargs="+", help="run only these criterion ids")
    return p


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    known = set(RunConfig.__dataclass_fields__)
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in known}).validate()


def run(cfg: RunConfig) -> int:
    return COMMANDS[cfg.subcommand](cfg)


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
        return run(cfg)
    except HeatTraceError as exc:
        sys.stderr.write(dumps({"error": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}) + "\n")
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
