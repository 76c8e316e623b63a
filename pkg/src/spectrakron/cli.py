"""Command-line interface.

Every command accepts ``--format human|records``, ``--cache-dir``,
``--bits`` and ``--seed``. Unset flags fall back to environment variables
SPECTRAKRON_FORMAT, SPECTRAKRON_CACHE_DIR, SPECTRAKRON_BITS and
SPECTRAKRON_SEED.

Exit status: 0 success, 1 invalid input, 2 internal-consistency failure.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys

import numpy as np

from . import characters, dimensions, kronecker, quantum, symfunc, tensor_oracle
from .errors import InternalConsistencyError, ValidationError
from .partitions import Partition, enumerate_partitions
from .records import format_records, format_table

ENV_PREFIX = "SPECTRAKRON_"
DEFAULT_SEED = 12345


class UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name, default)


def _partition(text: str) -> Partition:
    return Partition.parse(text)


_partition.__name__ = "partition"


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"malformed number list: {text!r}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"malformed integer list: {text!r}") from None


def _state(args) -> quantum.DensityMatrix:
    if args.rho is not None:
        if not os.path.exists(args.rho):
            raise UsageError(f"file not found: {args.rho}")
        return quantum.DensityMatrix.load(args.rho)
    if args.spectrum is not None:
        return quantum.DensityMatrix.diagonal(_floats(args.spectrum))
    raise UsageError("one of --rho or --spectrum is required")


# command handlers return a list of records


def cmd_partitions(args):
    return [{"k": args.k, "partition": str(p)} for p in enumerate_partitions(args.k, args.max_rows)]


def cmd_char(args):
    value = characters.character(args.lam, args.tau)
    return [{"lambda": str(args.lam), "tau": str(args.tau), "chi": str(value)}]


def cmd_chartable(args):
    table = characters.character_table(args.k, cap=args.cap, cache_dir=args.cache_dir)
    if not table.orthogonality_holds():
        raise InternalConsistencyError(f"character table of S_{args.k} fails orthogonality")
    out = [{"lambda": "class size", **{str(t): str(z) for t, z in zip(table.classes, table.sizes)}}]
    for lam, row in zip(table.rows, table.values):
        out.append({"lambda": str(lam), **{str(t): str(v) for t, v in zip(table.classes, row)}})
    return out


def cmd_dims(args):
    return [dimensions.bounds(args.lam, args.d).to_record()]


def cmd_schur(args):
    x = _floats(args.x)
    return [{"lambda": str(args.lam), "x": x, "value": symfunc.schur(args.lam, x)}]


def cmd_kron(args):
    g = kronecker.kron(args.lam, args.mu, args.nu, cap=args.cap)
    return [{"lambda": str(args.lam), "mu": str(args.mu), "nu": str(args.nu), "g": str(g)}]


def cmd_kron_table(args):
    rows = tuple(None if r <= 0 else r for r in _ints(args.max_rows)) if args.max_rows else (None,) * 3
    if len(rows) != 3:
        raise UsageError("--max-rows needs three comma-separated limits (0 = unrestricted)")
    return [t.to_record() for t in kronecker.kron_table(args.k, rows, cap=args.cap)]


def cmd_young_dist(args):
    dist = quantum.young_distribution(_state(args), args.k)
    return [{"lambda": str(lam), "weight": w} for lam, w in dist.items()]


def cmd_kw_check(args):
    rep = quantum.kw_bound_check(_state(args), args.k, args.eps)
    out = [
        {
            "record": "frame",
            "lambda": str(r.lam),
            "weight": r.weight,
            "divergence": r.divergence if np.isfinite(r.divergence) else "inf",
            "bound": r.bound,
            "passed": r.passed,
        }
        for r in rep.rows
    ]
    out.append(
        {
            "record": "outside-ball",
            "eps": rep.eps,
            "weight": rep.outside_weight,
            "bound": rep.outside_bound,
            "passed": rep.passed,
        }
    )
    return out


def cmd_ball_prob(args):
    p = quantum.ball_probability(_state(args), args.k, args.eps)
    return [{"k": args.k, "eps": args.eps, "probability": p}]


def cmd_compat(args):
    rho = _state(args)
    if rho.bipartition is None:
        raise UsageError("compat needs a bipartite state (m, n in the input file)")
    rep = quantum.compat_search(rho, _ints(args.k), args.eps, cap=args.cap)
    return [e.to_record() for e in rep.entries]


def cmd_entropy_check(args):
    rep = quantum.entropy_inequality_report(_state(args), args.k, base=2 if args.bits else None)
    return [rep.to_record()]


def cmd_oracle(args):
    rng = np.random.default_rng(args.seed)
    rho = quantum.random_density_matrix(args.d, rng)
    spec = rho.spectrum()
    out = []
    for lam in enumerate_partitions(args.k):
        proj = tensor_oracle.central_projector(lam, args.d)
        expected = dimensions.dim_u(lam) * dimensions.dim_v(lam, args.d)
        oracle = tensor_oracle.exact_trace(rho, lam)
        formula = dimensions.dim_u(lam) * symfunc.schur(lam, spec) if len(lam) <= args.d else 0.0
        out.append(
            {
                "lambda": str(lam),
                "rank": tensor_oracle.numerical_rank(proj),
                "dim_u_dim_v": str(expected),
                "trace_oracle": oracle,
                "trace_formula": formula,
                "agree": bool(
                    tensor_oracle.numerical_rank(proj) == expected and abs(oracle - formula) <= 1e-10
                ),
            }
        )
    return out


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--format", choices=["human", "records"], default=_env("FORMAT", "human"),
        help="output style (env SPECTRAKRON_FORMAT)",
    )
    common.add_argument("--cache-dir", default=_env("CACHE_DIR"), help="character table cache directory")
    common.add_argument(
        "--bits", action="store_true", default=_env("BITS", "0") not in ("0", "", "false"),
        help="report entropies in bits",
    )
    common.add_argument("--seed", type=int, default=int(_env("SEED", DEFAULT_SEED)))
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="spectrakron", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    def state_args(p):
        p.add_argument("--rho", help="density matrix JSON file")
        p.add_argument("--spectrum", help="diagonal state given by its eigenvalues, e.g. 0.7,0.3")

    p = add("partitions", cmd_partitions, "list partitions of k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-rows", type=int)

    p = add("char", cmd_char, "one character value")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--tau", type=_partition, required=True)

    p = add("chartable", cmd_chartable, "full character table of S_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=characters.DEFAULT_CAP)

    p = add("dims", cmd_dims, "dimensions and bounds")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--d", type=int, required=True)

    p = add("schur", cmd_schur, "evaluate a Schur function")
    p.add_argument("--lambda", dest="lam", type=_partition, required=True)
    p.add_argument("--x", required=True, help="comma-separated point")

    p = add("kron", cmd_kron, "one Kronecker coefficient")
    for flag, dest in (("--lambda", "lam"), ("--mu", "mu"), ("--nu", "nu")):
        p.add_argument(flag, dest=dest, type=_partition, required=True)
    p.add_argument("--cap", type=int, default=kronecker.DEFAULT_CAP)

    p = add("kron-table", cmd_kron_table, "all nonzero Kronecker coefficients of degree k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-rows", help="row limits for lambda,mu,nu (0 = none)")
    p.add_argument("--cap", type=int, default=kronecker.DEFAULT_CAP)

    p = add("young-dist", cmd_young_dist, "Young-frame distribution of rho^(x)k")
    state_args(p)
    p.add_argument("--k", type=int, required=True)

    p = add("kw-check", cmd_kw_check, "exponential bound check per frame")
    state_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=float, default=0.1)

    p = add("ball-prob", cmd_ball_prob, "probability of frames within eps of the spectrum")
    state_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)

    p = add("compat", cmd_compat, "closest compatible partition triples")
    state_args(p)
    p.add_argument("--k", required=True, help="comma-separated list of degrees")
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--cap", type=int, default=quantum.COMPAT_KRON_CAP)

    p = add("entropy-check", cmd_entropy_check, "subadditivity and triangle inequality report")
    state_args(p)
    p.add_argument("--k", type=int, default=6)

    p = add("oracle", cmd_oracle, "tensor-space cross-checks for a random state")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
        records = args.func(args)
    except InternalConsistencyError as exc:
        print(f"InternalConsistencyError: {exc}", file=stderr)
        return 2
    except (ValidationError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=stderr)
        return 1
    text = format_records(records) if args.format == "records" else format_table(records)
    stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
