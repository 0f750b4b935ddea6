"""Command-line front end.

Exit codes: 0 success, 2 guard or precondition violation, 3 internal
mathematical inconsistency (including a closed form that disagrees with the
resultant oracle).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import __version__
from .distribution import clt_probe, closed_form_measure, emit_scatter, exact_measure, moment_check
from .errors import GuardError, HyperspecError, InvariantError, RepeatedRoots
from .polynomial import ExactPoly
from .resultants import (
    Hypergraph,
    Hypermatrix,
    char_poly_oracle,
    load_input,
    poisson_check_binary,
    random_binary_pair,
    sunflower,
)
from .spectra import (
    MAX_TOTAL_DEGREE,
    all_ones_charpoly,
    expand,
    petal_feasibility,
    sunflower_charpoly,
    zero_charpoly,
)
from .walks import walk_counts

EXIT_OK, EXIT_GUARD, EXIT_INVARIANT = 0, 2, 3
POISSON_TOLERANCE = 1e-6


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    fmt: str = "json"
    output: str | None = None
    max_degree: int = MAX_TOTAL_DEGREE
    seed: int = 0

    def validate(self) -> None:
        p = self.params
        for key in ("n", "m", "k", "q", "trials"):
            if p.get(key) is not None and p[key] < 0:
                raise ValueError(f"--{key} must be nonnegative")
        if p.get("m") is not None and p["m"] < 2:
            raise ValueError("--m must be at least 2")
        if self.command in ("charpoly", "verify", "measure") and p.get("n") is not None and p["n"] < 1:
            raise ValueError("--n must be at least 1")


def _frac(x: Fraction) -> dict:
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


def _int_coeffs(p: ExactPoly) -> list[int]:
    return [int(Fraction(c)) for c in p.coeffs]


def _write(cfg: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _closed_form(kind: str, n: int, m: int | None, max_degree: int):
    if kind == "all-ones":
        return all_ones_charpoly(n, m, max_degree=max_degree)
    if kind == "sunflower":
        return sunflower_charpoly(n, max_degree=max_degree)
    if kind == "zero":
        return zero_charpoly(n, m, max_degree=max_degree)
    raise ValueError(f"unknown kind {kind!r}")


def cmd_charpoly(args, cfg: RunConfig) -> int:
    m = args.m if args.kind != "sunflower" else 3
    if args.kind != "sunflower" and m is None:
        raise ValueError("--m is required")
    f = _closed_form(args.kind, args.n, m, cfg.max_degree)
    out = {"kind": args.kind, "n": args.n, "m": m, **f.to_json()}
    if args.expand:
        out["coefficients"] = _int_coeffs(expand(f))
    if cfg.fmt == "csv":
        if "coefficients" not in out:
            out["coefficients"] = _int_coeffs(expand(f))
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degree", "coefficient"])
        for k, c in enumerate(out["coefficients"]):
            w.writerow([k, c])
        _write(cfg, buf.getvalue())
    else:
        _write(cfg, _dump(out))
    return EXIT_OK


def _sunflower_petals(H: Hypergraph) -> int | None:
    """n if H is isomorphic to S(n,1,3), else None."""
    if H.k != 3 or not H.edges or H.vertices != 2 * len(H.edges) + 1:
        return None
    common = set(H.edges[0]).intersection(*map(set, H.edges[1:]))
    if not common:
        return None
    for seed in sorted(common):
        petals = [set(e) - {seed} for e in H.edges]
        covered = set().union(*petals)
        if len(covered) == 2 * len(petals) and seed not in covered:
            return len(petals)
    return None


def _identify(obj) -> tuple[str, object] | None:
    """Recognize inputs that have a closed-form characteristic polynomial."""
    if isinstance(obj, Hypergraph):
        if not obj.edges:
            return "zero", zero_charpoly(obj.vertices, obj.k)
        n = _sunflower_petals(obj)
        return ("sunflower", sunflower_charpoly(n)) if n else None
    if not obj.entries:
        return "zero", zero_charpoly(obj.n, obj.m)
    if obj.is_all_ones():
        return "all-ones", all_ones_charpoly(obj.n, obj.m)
    return None


def _first_difference(a: list[int], b: list[int]) -> int | None:
    """Degree of the first differing coefficient, scanning down from the top."""
    top = max(len(a), len(b))
    for k in range(top - 1, -1, -1):
        x = a[k] if k < len(a) else 0
        y = b[k] if k < len(b) else 0
        if x != y:
            return k
    return None


def cmd_verify(args, cfg: RunConfig) -> int:
    if args.target == "all-ones":
        if args.m is None:
            raise ValueError("--m is required")
        subject = Hypermatrix.all_ones(args.n, args.m)
        closed = all_ones_charpoly(args.n, args.m, max_degree=cfg.max_degree)
        label = "all-ones"
    elif args.target == "sunflower":
        subject = sunflower(args.n, 1, 3)
        closed = sunflower_charpoly(args.n, max_degree=cfg.max_degree)
        label = "sunflower"
    else:
        if not args.file:
            raise ValueError("--file is required for hypergraph-file")
        subject = load_input(args.file)
        found = _identify(subject)
        label, closed = found if found else ("unrecognized", None)

    oracle = char_poly_oracle(subject)
    oracle_coeffs = oracle.int_coeffs()
    report = {
        "target": args.target,
        "recognized_as": label,
        "oracle": oracle_coeffs,
        "oracle_raw_leading": _frac(oracle.raw_leading),
        "oracle_skipped_samples": list(oracle.skipped),
    }
    if closed is None:
        report["status"] = "NO_CLOSED_FORM"
        _write(cfg, _dump(report))
        return EXIT_OK
    closed_coeffs = _int_coeffs(expand(closed))
    diff = _first_difference(closed_coeffs, oracle_coeffs)
    report["closed_form"] = closed_coeffs
    report["status"] = "EQUAL" if diff is None else "DIFFER"
    report["first_difference_degree"] = diff
    _write(cfg, _dump(report))
    return EXIT_OK if diff is None else EXIT_INVARIANT


def cmd_measure(args, cfg: RunConfig) -> int:
    measure = closed_form_measure(args.n, args.m) if args.closed_form else exact_measure(args.n, args.m)
    if cfg.fmt == "csv":
        _write(cfg, emit_scatter(measure, scaled=args.scaled))
    else:
        out = measure.to_json()
        out["scaled"] = bool(args.scaled)
        _write(cfg, _dump(out))
    if args.plot:
        from .plotting import plot_measure

        plot_measure(measure, args.plot, scaled=args.scaled)
    return EXIT_OK


def cmd_probe(args, cfg: RunConfig) -> int:
    if args.petal:
        if args.k is None:
            raise ValueError("--k is required for --petal")
        have, need, equal = petal_feasibility(args.k)
        verdict = "product formula applicable" if equal else "product formula not applicable"
        rel = "=" if equal else "!="
        out = {
            "probe": "petal",
            "k": args.k,
            "solutions_per_petal": have,
            "required_per_petal": need,
            "equal": equal,
            "message": f"{have} {rel} {need}: {verdict}",
        }
    elif args.poisson:
        rng = np.random.default_rng(cfg.seed)
        errors, rejected = [], 0
        while len(errors) < args.trials:
            a, b = random_binary_pair(rng, args.d0, args.d1)
            try:
                errors.append(poisson_check_binary(a, b))
            except RepeatedRoots:
                rejected += 1
        worst = max(errors, default=0.0)
        out = {
            "probe": "poisson",
            "trials": args.trials,
            "seed": cfg.seed,
            "degrees": [args.d0, args.d1],
            "rejected_instances": rejected,
            "max_relative_error": worst,
            "tolerance": POISSON_TOLERANCE,
            "pass": worst <= POISSON_TOLERANCE,
        }
    else:
        if args.n is None or args.m is None:
            raise ValueError("--clt needs --n and --m")
        moments = moment_check(args.n, args.m)
        out = {
            "probe": "clt",
            "n": args.n,
            "m": args.m,
            "moments": {
                "E_re2": _frac(moments[0]),
                "E_im2": _frac(moments[1]),
                "E_re_im": _frac(moments[2]),
            },
            "sup_distance": clt_probe(args.n, args.m),
        }
        if args.plot:
            from .plotting import plot_clt

            plot_clt(args.n, args.m, args.plot)
    _write(cfg, _dump(out))
    return EXIT_OK


def cmd_walks(args, cfg: RunConfig) -> int:
    table = walk_counts(args.n, args.q)
    if cfg.fmt == "json":
        rows = [{"re": re, "im": im, "count": c} for re, im, c in table.rows()]
        _write(cfg, _dump({"n": args.n, "q": args.q, "endpoints": rows}))
    else:
        _write(cfg, table.to_csv())
    if args.plot:
        from .plotting import plot_walk_table

        plot_walk_table(table, args.plot)
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperspec",
        description="Exact spectra of all-ones hypermatrices and sunflower hypergraphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default=None)
    common.add_argument(
        "--max-degree", type=int, default=MAX_TOTAL_DEGREE, help="total-degree guard"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", parents=[common], help="factored characteristic polynomial")
    p.add_argument("kind", choices=("all-ones", "sunflower", "zero"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--expand", action="store_true", help="include integer coefficients")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", parents=[common], help="closed form versus resultant oracle")
    p.add_argument("target", choices=("all-ones", "sunflower", "hypergraph-file"))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--file", help="hypergraph or hypermatrix JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("measure", parents=[common], help="spectral measure of J_n^m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--scaled", action="store_true", help="divide atoms by sqrt(n)")
    p.add_argument("--csv", action="store_true", help="scatter CSV instead of JSON")
    p.add_argument("--plot", help="also render a scatter figure to this path")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("probe", parents=[common], help="numeric probes")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--clt", action="store_true")
    mode.add_argument("--poisson", action="store_true")
    mode.add_argument("--petal", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--d0", type=int, default=2)
    p.add_argument("--d1", type=int, default=3)
    p.add_argument("--plot", help="figure path (with --clt)")
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("walks", parents=[common], help="walk endpoint counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--plot", help="also render the endpoint cloud to this path")
    p.set_defaults(func=cmd_walks, csv=True)

    return parser


def make_config(args) -> RunConfig:
    fmt = args.format
    if fmt is None:
        fmt = "csv" if getattr(args, "csv", False) else "json"
    params = {k: getattr(args, k, None) for k in ("n", "m", "k", "q", "trials")}
    return RunConfig(
        command=args.command,
        params=params,
        fmt=fmt,
        output=args.output,
        max_degree=args.max_degree,
        seed=getattr(args, "seed", 0) or 0,
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = make_config(args)
    try:
        cfg.validate()
        return args.func(args, cfg)
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ValueError, KeyError, OSError, HyperspecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
