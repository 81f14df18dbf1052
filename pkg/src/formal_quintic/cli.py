"""Command-line front end: series tables, verification suites, HAE solver."""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .errors import (BoundViolation, IdentityViolation, K2DegreeViolation,
                     MissingConstants, NotIntegrable, QuinticError, UnknownSeries)
from .ring.laurent import LaurentL

SERIES_NAMES = ("i0", "i1reg", "mirror", "L", "C0", "C1", "C2", "C3", "C4",
                "X", "X1", "X2", "Y", "K2", "A2", "A4", "A6", "mu")
SUITES = ("picard-fuchs", "birkhoff-cycle", "c-relations", "drule", "drule2",
          "lemma-rr", "zagier-zinger", "rpoly", "degree-bounds", "hae-qseries")
ASYMPTOTIC_SUITES = ("lemma-rr", "zagier-zinger", "rpoly", "degree-bounds")
RECOGNITION_SUITES = ("zagier-zinger", "rpoly", "degree-bounds")
_R_NAME = re.compile(r"^R\[?([0-4])\]?\[?(\d+)\]?$")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    precision: int = 20
    z_order: int = 10
    kmax: int = 4
    genus: int = 2
    constants_path: str | None = None
    output_format: str = "json"

    def validate(self, suite: str | None = None) -> None:
        if self.precision < 1:
            raise UsageError("precision must be positive")
        if self.z_order < 0 or self.kmax < 0:
            raise UsageError("z-order and kmax must be non-negative")
        if self.output_format not in ("json", "table"):
            raise UsageError("format must be json or table")
        if suite in ASYMPTOTIC_SUITES and self.precision < 2 * self.kmax + 5:
            raise UsageError(f"{suite} needs precision >= 2*kmax + 5 = {2 * self.kmax + 5}")
        if suite in RECOGNITION_SUITES and self.precision < 4 * self.kmax + 10:
            raise UsageError(
                f"{suite} recognizes R_k up to L^(4k+3) and needs precision "
                f">= 4*kmax + 10 = {4 * self.kmax + 10}")


def _pair(a) -> list[str]:
    a = Fraction(a)
    return [str(a.numerator), str(a.denominator)]


def series_by_name(name: str, N: int, kmax: int = 4):
    """The q-series called ``name`` to precision ``N``."""
    from .quintic import build_series

    m = _R_NAME.match(name)
    if m:
        from .asymptotics import rjk_extract
        j, k = int(m.group(1)), int(m.group(2))
        return rjk_extract(j, N, max(k, 0))[k]
    if name == "mu":
        from .asymptotics import mu_extract
        return mu_extract(N)
    if name in ("C2", "C3", "C4"):
        from .ifunc import sbar_build
        return sbar_build(N, "Q").constants[int(name[1])]
    if name not in SERIES_NAMES:
        raise UnknownSeries(name)
    return build_series(N).named()[name]


def cmd_series(name: str, config: RunConfig) -> dict:
    f = series_by_name(name, config.precision, config.kmax)
    coeffs = [_pair(c) for c in f.coeffs[:config.precision + 1]]
    return {"name": name, "precision": config.precision, "coefficients": coeffs}


def run_suite(suite: str, config: RunConfig):
    """Run one verification suite; returns a list of check reports."""
    N, K = config.precision, config.kmax
    if suite == "picard-fuchs":
        from .ifunc import picard_fuchs_check
        return [picard_fuchs_check(N, config.z_order)]
    if suite == "birkhoff-cycle":
        from .ifunc import check_c0_matches_i0, sbar_cycle_check
        return [sbar_cycle_check(N), check_c0_matches_i0(N)]
    if suite == "c-relations":
        from .ifunc import c_relations_check
        return [c_relations_check(N)]
    if suite == "drule":
        from .quintic import check_drule
        return [check_drule(N)]
    if suite == "drule2":
        from .quintic import check_drule2
        return [check_drule2(N)]
    if suite == "lemma-rr":
        from .asymptotics import lemma_rr_check
        return [lemma_rr_check(N, K)]
    if suite == "zagier-zinger":
        from .asymptotics import zagier_zinger_check
        return [zagier_zinger_check(N, K)]
    if suite == "rpoly":
        from .asymptotics import rpoly_structure_check
        return [rpoly_structure_check(N, K)]
    if suite == "degree-bounds":
        from .asymptotics import degree_bound_check
        return [degree_bound_check(N, K)]
    if suite == "hae-qseries":
        from .hae.solver import hae_qseries_check
        constants = load_constants(config.constants_path) if config.constants_path else {}
        return [hae_qseries_check(config.genus, N, constants=constants)]
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(suite: str, config: RunConfig) -> tuple[int, dict]:
    try:
        reports = run_suite(suite, config)
    except IdentityViolation as exc:
        return 1, {"suite": suite, "passed": False, "identity": exc.identity,
                   "locus": exc.locus, "detail": exc.detail}
    except (BoundViolation, NotIntegrable, K2DegreeViolation) as exc:
        return 1, {"suite": suite, "passed": False, "error": type(exc).__name__,
                   "detail": str(exc)}
    return 0, {"suite": suite, "passed": True, "precision": config.precision,
               "checks": [r.to_json() for r in reports]}


def load_constants(path: str) -> dict[int, LaurentL]:
    """Read ``{genus: {L-exponent: "p/q"}}`` and check each degree window."""
    from .hae.solver import constant_window

    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read constants file: {exc}") from exc
    if not isinstance(raw, dict):
        raise UsageError("constants file must be a JSON object")
    out = {}
    for g, terms in raw.items():
        try:
            genus = int(g)
            c = LaurentL.from_json(terms)
        except (TypeError, ValueError, AttributeError) as exc:
            raise UsageError(f"bad constants entry for genus {g!r}: {exc}") from exc
        lo, hi = constant_window(genus)
        w = c.window()
        if w is not None and (w[0] < lo or w[1] > hi):
            raise UsageError(f"genus {genus} constant has L-degrees {list(w)}, "
                             f"outside [{lo}, {hi}]")
        out[genus] = c
    return out


def cmd_hae(config: RunConfig) -> dict:
    import warnings

    from .hae.solver import reconstruct

    if config.genus < 2:
        raise UsageError("genus must be at least 2; genus one is input data")
    constants = load_constants(config.constants_path) if config.constants_path else {}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        fe = reconstruct(config.genus, constants)
    doc = fe.to_json()
    doc["constants_file"] = config.constants_path is not None
    doc["constant_resolved"] = fe.constant_known
    return doc


def _table(doc: dict) -> str:
    if "coefficients" in doc:
        rows = [f"{doc['name']}  (precision {doc['precision']})"]
        for d, (n, den) in enumerate(doc["coefficients"]):
            rows.append(f"{d:4d}  {n if den == '1' else n + '/' + den}")
        return "\n".join(rows)
    return json.dumps(doc, indent=2, sort_keys=True)


def _emit(doc: dict, fmt: str) -> None:
    text = json.dumps(doc, indent=2, sort_keys=True) if fmt == "json" else _table(doc)
    sys.stdout.write(text + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="formal-quintic",
        description="Exact series, identity checks and anomaly-equation solver "
                    "for the formal quintic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--precision", "-N", type=int, default=20)
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("series", help="print a q-series as exact rationals")
    p.add_argument("name")
    p.add_argument("--kmax", type=int, default=4)
    common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite")
    p.add_argument("--z-order", type=int, default=10)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--genus", type=int, default=2)
    p.add_argument("--constants")
    common(p)

    p = sub.add_parser("hae", help="reconstruct a free energy")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--constants")
    common(p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    config = RunConfig(precision=args.precision,
                       z_order=getattr(args, "z_order", 10),
                       kmax=getattr(args, "kmax", 4),
                       genus=getattr(args, "genus", 2),
                       constants_path=getattr(args, "constants", None),
                       output_format=args.format)
    try:
        if args.command == "series":
            config.validate()
            _emit(cmd_series(args.name, config), config.output_format)
            return 0
        if args.command == "verify":
            if args.suite not in SUITES:
                raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
            config.validate(args.suite)
            code, doc = cmd_verify(args.suite, config)
            _emit(doc, config.output_format)
            return code
        config.validate()
        _emit(cmd_hae(config), config.output_format)
        return 0
    except UnknownSeries as exc:
        print(f"error: unknown series {exc.args[0]!r}", file=sys.stderr)
        return 2
    except MissingConstants as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit({"error": "MissingConstants", "genera": exc.genera}, "json")
        return 2
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuinticError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
