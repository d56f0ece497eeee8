"""Command line front end.

Every subcommand prints one table, as CSV (default) or JSON. CSV output
is metadata comment lines starting with '#', then a header line, then
rows, LF-terminated, with reals at 15 significant digits; the body below
the metadata block is reproducible byte for byte for a fixed library
version, regardless of --threads.

Exit codes: 0 success, 2 usage or domain error, 3 capacity or resource
limit, 4 internal cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .arith import Polynomial, factorize, fixed_divisor, primes_up_to
from .counting import (
    Weight,
    count_table,
    prime_power_tail,
    progression_weighted_sum,
    singular_series,
    weighted_lambda_sum,
)
from .dset import dset_density
from .errors import CapacityError, ConsistencyError, DomainError, ResourceError
from .residues import (
    BRUTE_FORCE_BUDGET,
    QuadraticForm,
    cubic_residue_euler,
    gauss_classify,
    rho,
    rho_bruteforce,
)
from .series import (
    _log_checkpoints,
    dirichlet_partial_sum,
    epstein_mu_sum,
    epstein_zeta_partial,
    kappa_trajectory,
)
from .verify import SUITES, run_suite


@dataclass
class OutputTable:
    command: str
    header: tuple[str, ...]
    rows: list[tuple]
    extra: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0


def _fmt(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return format(value, ".15g")
    return str(value)


def render_csv(table: OutputTable, argv: list[str]) -> str:
    lines = [
        f"# command={table.command}",
        f"# argv={shlex.join(argv)}",
        f"# version={__version__}",
        f"# wall_time={table.wall_time:.6f}",
    ]
    lines.extend(f"# {key}={_fmt(val)}" for key, val in table.extra.items())
    lines.append(",".join(table.header))
    lines.extend(",".join(_fmt(v) for v in row) for row in table.rows)
    return "\n".join(lines) + "\n"


def render_json(table: OutputTable, argv: list[str]) -> str:
    obj = {
        "metadata": {
            "command": table.command,
            "argv": list(argv),
            "version": __version__,
            "wall_time": table.wall_time,
            **table.extra,
        },
        "header": list(table.header),
        "rows": [list(row) for row in table.rows],
    }
    return json.dumps(obj, indent=2) + "\n"


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _form_triple(text: str) -> tuple[int, int, int]:
    parts = _int_list(text)
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"--form wants a,b,c, got {text!r}")
    return parts[0], parts[1], parts[2]


def _polynomial(args: argparse.Namespace) -> Polynomial:
    coeffs = getattr(args, "coeffs", None)
    if coeffs is not None:
        if getattr(args, "highest_first", False):
            coeffs = list(reversed(coeffs))
        return Polynomial(tuple(coeffs))
    k = getattr(args, "k", None)
    if k is None:
        raise DomainError("give --k (shift of n^3) or --coeffs")
    return Polynomial.cubic(k)


def _cmd_count(args: argparse.Namespace) -> OutputTable:
    checkpoints = args.checkpoints or ([args.x] if args.x is not None else None)
    if not checkpoints:
        raise DomainError("count needs --x or --checkpoints")
    records = count_table(args.k, checkpoints, p_cutoff=args.pmax, threads=args.threads)
    rows = [(r.x, r.observed, r.predicted, r.ratio, r.p_cutoff) for r in records]
    return OutputTable(
        "count", ("x", "observed", "predicted", "ratio", "p_cutoff"), rows,
        extra={"k": args.k, "threads": args.threads})


def _cmd_constant(args: argparse.Namespace) -> OutputTable:
    cutoffs = args.checkpoints or [args.pmax]
    if sorted(cutoffs) != cutoffs:
        raise DomainError("cutoffs must be ascending")
    primes = primes_up_to(max(cutoffs))
    rows = [(args.k, c, singular_series(args.k, c, primes=primes)) for c in cutoffs]
    return OutputTable("constant", ("k", "p_cutoff", "value"), rows)


def _cmd_residue(args: argparse.Namespace) -> OutputTable:
    cls = cubic_residue_euler(args.a, args.p)
    branch = witness_u = witness_v = None
    if args.a == 2:
        gc = gauss_classify(args.p)
        branch = gc.branch.value
        if gc.witness is not None:
            witness_u, witness_v = gc.witness
    rows = [(args.a, args.p, cls.tag.value, cls.exponent, branch, witness_u, witness_v)]
    return OutputTable(
        "residue",
        ("a", "p", "class", "exponent", "branch", "witness_u", "witness_v"),
        rows)


def _cmd_rho(args: argparse.Namespace) -> OutputTable:
    squarefree = args.q == 1 or factorize(args.q).is_squarefree
    formula = rho(args.k, args.q) if squarefree else None
    scan = None
    if args.q <= BRUTE_FORCE_BUDGET:
        scan = rho_bruteforce(Polynomial.cubic(args.k), args.q)
    agree = None
    if formula is not None and scan is not None:
        agree = int(formula == scan)
    rows = [(args.k, args.q, int(squarefree), formula, scan, agree)]
    return OutputTable(
        "rho", ("k", "q", "squarefree", "rho", "scan", "agree"), rows)


def _cmd_dset(args: argparse.Namespace) -> OutputTable:
    f = _polynomial(args)
    checkpoints = args.checkpoints or _log_checkpoints(args.x)
    stats = dset_density(f, args.x, checkpoints)
    rows = [(x, cnt, ratio) for x, cnt, ratio in stats.checkpoints]
    return OutputTable(
        "dset", ("x", "members", "ratio"), rows,
        extra={"poly": str(f), "decay_exponent": stats.decay_exponent})


def _cmd_dseries(args: argparse.Namespace) -> OutputTable:
    f = _polynomial(args)
    extra: dict[str, Any] = {"poly": str(f)}
    if args.s == 1.0:
        trajectory = kappa_trajectory(f, args.x)
        if args.checkpoints:
            records = dirichlet_partial_sum(f, args.s, args.x, args.checkpoints)
        else:
            records = trajectory.records
        extra["fitted_kappa"] = trajectory.fitted_kappa
        extra["fit_residual"] = trajectory.fit_residual
    else:
        records = dirichlet_partial_sum(
            f, args.s, args.x, args.checkpoints or _log_checkpoints(args.x))
    rows = [(r.x, args.s, r.value, r.terms_used) for r in records]
    return OutputTable("dseries", ("x", "s", "value", "terms_used"), rows, extra=extra)


def _cmd_epstein(args: argparse.Namespace) -> OutputTable:
    a, b, c = args.form
    form = QuadraticForm(a, b, c)
    if args.mu:
        kind = "mobius"
        value = epstein_mu_sum(form, args.s, args.x)
    else:
        kind = "lattice"
        value = epstein_zeta_partial(form, args.s, args.x)
    rows = [(a, b, c, args.s, args.x, kind, value)]
    return OutputTable(
        "epstein", ("a", "b", "c", "s", "n_max", "kind", "value"), rows)


def _cmd_chebyshev(args: argparse.Namespace) -> OutputTable:
    f = _polynomial(args)
    weight = Weight(args.weight, args.exponent)
    record = weighted_lambda_sum(f, weight, args.x)
    rows = [(record.x, str(record.weight), record.value, record.tail_value, record.bound)]
    return OutputTable(
        "chebyshev", ("x", "weight", "value", "tail", "bound"), rows,
        extra={"poly": str(f)})


def _cmd_lemma4(args: argparse.Namespace) -> OutputTable:
    ps = progression_weighted_sum(args.q, args.a, args.x)
    rows = [(
        ps.q, ps.a, ps.x, len(ps.roots), ps.exact, ps.closed_form, ps.leading,
        ";".join(str(r) for r in ps.roots),
    )]
    return OutputTable(
        "lemma4",
        ("q", "a", "x", "rho", "exact", "closed_form", "leading", "roots"),
        rows)


def _cmd_tail(args: argparse.Namespace) -> OutputTable:
    xs = args.checkpoints or [args.x]
    if None in xs or not xs:
        raise DomainError("tail needs --x or --checkpoints")
    rows = []
    for x in xs:
        tail, bound = prime_power_tail(args.k, x)
        rows.append((x, tail, bound))
    return OutputTable("tail", ("x", "tail", "bound"), rows, extra={"k": args.k})


def _cmd_fixdiv(args: argparse.Namespace) -> OutputTable:
    f = _polynomial(args)
    rows = [(";".join(str(c) for c in f.coefficients), f.degree, fixed_divisor(f))]
    return OutputTable(
        "fixdiv", ("coefficients_low_first", "degree", "fixed_divisor"), rows)


def _cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    results = run_suite(
        args.suite, scale=args.scale, n_max=args.nmax, p_max=args.pmax,
        sample_seed=args.sample_seed, k=args.k)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}" for r in results
    ]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", 0 if passed == len(results) else 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicprimes",
        description="Primes of the form n^3 + k: counts, densities, partial sums.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler, help_text: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(handler=handler)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", help="write output to this path instead of stdout")
        return sp

    def add_poly(sp: argparse.ArgumentParser, k_default: int | None = None) -> None:
        sp.add_argument("--k", type=int, default=k_default,
                        help="shift in n^3 + k")
        sp.add_argument("--coeffs", type=_int_list,
                        help="polynomial coefficients, lowest degree first")
        sp.add_argument("--highest-first", action="store_true",
                        help="read --coeffs highest degree first")

    sp = add("count", _cmd_count, "count primes n^3 + k up to x against the prediction")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--x", type=int)
    sp.add_argument("--checkpoints", type=_int_list)
    sp.add_argument("--pmax", type=int, default=10**6,
                    help="prime cutoff for the predicted constant")
    sp.add_argument("--threads", type=int, default=1)

    sp = add("constant", _cmd_constant, "singular series partial product")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--pmax", type=int, default=10**6)
    sp.add_argument("--checkpoints", type=_int_list,
                    help="report the product at several prime cutoffs")

    sp = add("residue", _cmd_residue, "cubic residuacity of a mod p")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = add("rho", _cmd_rho, "roots of x^3 + k mod q, formula vs scan")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)

    sp = add("dset", _cmd_dset, "solvable-moduli counts and density")
    add_poly(sp)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--checkpoints", type=_int_list)

    sp = add("dseries", _cmd_dseries, "partial sums of mu(n) log n / n^s over solvable moduli")
    add_poly(sp)
    sp.add_argument("--s", type=float, default=1.0)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--checkpoints", type=_int_list)

    sp = add("epstein", _cmd_epstein, "partial Epstein zeta values of a binary form")
    sp.add_argument("--form", type=_form_triple, required=True,
                    help="form coefficients a,b,c for a u^2 + b uv + c v^2")
    sp.add_argument("--s", type=float, required=True)
    sp.add_argument("--x", type=int, required=True, help="largest represented value")
    sp.add_argument("--mu", action="store_true",
                    help="weight each represented value by its Mobius factor")

    sp = add("chebyshev", _cmd_chebyshev, "weighted Mangoldt sum over polynomial values")
    add_poly(sp)
    sp.add_argument("--x", type=int, required=True)
    sp.add_argument("--weight", choices=("power", "totient", "sigma", "tau"),
                    default="power")
    sp.add_argument("--exponent", type=int, default=1,
                    help="exponent for the power weight")

    sp = add("lemma4", _cmd_lemma4, "index sum over the classes solving n^3 = a mod q")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--x", type=int, required=True)

    sp = add("tail", _cmd_tail, "prime-power part of the weighted sum, with its bound")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--x", type=int)
    sp.add_argument("--checkpoints", type=_int_list)

    sp = add("fixdiv", _cmd_fixdiv, "fixed divisor of an integer polynomial")
    add_poly(sp)

    sp = add("verify", _cmd_verify, "run a named self-check suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--scale", choices=("tiny", "full"), default="tiny")
    sp.add_argument("--nmax", type=int)
    sp.add_argument("--pmax", type=int)
    sp.add_argument("--sample-seed", type=int, default=0)
    sp.add_argument("--k", type=int, default=2)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    started = time.perf_counter()
    try:
        result = args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CapacityError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    if isinstance(result, tuple):
        text, code = result
        _emit(text, args.out)
        return code
    result.wall_time = time.perf_counter() - started
    render = render_csv if args.format == "csv" else render_json
    _emit(render(result, argv), args.out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
