"""Command-line front end.

Exit codes: 0 ok, 1 computation error, 2 usage error, 3 selftest failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from .affine import demazure_sequence, rho_table, rho_table_json
from .characters import weyl_dimension
from .limit import convergence_check
from .minaff import (
    HighestWeightInput,
    decompose_graded_limit,
    defining_relations,
    factorial_matrix_det,
    graded_limit_character,
    highest_l_weight_monomials,
    kr_decomposition,
)
from . import selftest

EXIT_COMPUTATION = 1
EXIT_USAGE = 2
EXIT_SELFTEST = 3


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _subset(text: str) -> frozenset[int]:
    try:
        J = frozenset(int(x) for x in text.replace("{", "").replace("}", "").split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad subset {text!r}") from None
    if not J or not J <= {1, 2}:
        raise argparse.ArgumentTypeError("J must be a nonempty subset of {1,2}, e.g. 1,2")
    return J


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _render_decomposition(dec, args) -> str:
    if args.json:
        return _dump(dec.to_json())
    lines = []
    if not args.quiet:
        for mu, mult in dec.sorted_items():
            lines.append(f"V({mu})  mult {mult}  dim {weyl_dimension(mu)}")
    lines.append(f"total {dec.dimension}")
    return "\n".join(lines)


def cmd_decompose(args) -> str:
    return _render_decomposition(decompose_graded_limit(HighestWeightInput(args.k, args.l)), args)


def cmd_kr(args) -> str:
    return _render_decomposition(kr_decomposition(args.node, args.n), args)


def cmd_character(args) -> str:
    chi = graded_limit_character(HighestWeightInput(args.k, args.l))
    if args.json:
        return _dump(chi.to_json())
    lines = [] if args.quiet else [f"{c} e^({w})" for w, c in chi.sorted_items()]
    lines.append(f"dim {chi.dimension}")
    return "\n".join(lines)


def cmd_dim(args) -> str:
    dim = decompose_graded_limit(HighestWeightInput(args.k, args.l)).dimension
    if args.json:
        return _dump({"k": args.k, "l": args.l, "dim": dim})
    return str(dim)


def cmd_monomial(args) -> str:
    mono = highest_l_weight_monomials(HighestWeightInput(args.k, args.l), args.variant)
    if args.json:
        return _dump(mono.to_json())
    return str(mono)


def cmd_relations(args) -> str:
    rels = defining_relations(HighestWeightInput(args.k, args.l))
    if args.json:
        return _dump([r.to_json() for r in rels])
    return "\n".join(str(r) for r in rels)


def cmd_rho_table(args) -> str:
    table = rho_table(HighestWeightInput(args.k, args.l), args.p_max)
    if args.json:
        return _dump(rho_table_json(table))
    rows = rho_table_json(table)
    nonzero = [row for row in rows if row["rho"]]
    lines = [f"rho({m},{n},{p}) = {row['rho']}" for row in nonzero for m, n, p in [row["root"]]]
    if not args.quiet:
        lines.append(f"{len(rows) - len(nonzero)} other positive real roots with p <= {args.p_max}: 0")
    return "\n".join(lines)


def cmd_demazure_seq(args) -> str:
    seq = demazure_sequence(HighestWeightInput(args.k, args.l))
    if args.json:
        return _dump([{"weight": w.to_json(), "level": n} for w, n in seq])
    return "D(" + ", ".join(f"({w}, {n})" for w, n in seq) + ")"


def cmd_limit_check(args) -> str:
    n = convergence_check(args.J, args.D, args.n_max)
    J = sorted(args.J)
    if args.json:
        return _dump({"J": J, "D": args.D, "n_max": args.n_max, "n": n})
    label = "{" + ",".join(map(str, J)) + "}"
    found = f"stabilizes at n = {n}" if n is not None else "not found"
    return f"J={label} D={args.D} n_max={args.n_max}: {found}"


def cmd_lemma46(args) -> str:
    det = factorial_matrix_det(args.r)
    if args.json:
        return _dump({"r": args.r, "det": str(det), "nonzero": det != 0})
    return f"det = {det}, nonzero: {'true' if det != 0 else 'false'}"


def cmd_selftest(args) -> tuple[str, int]:
    lines = []
    failed = 0
    for name, msg in selftest.run_all(args.scale):
        if msg is not None:
            failed += 1
        if args.json:
            lines.append({"check": name, "ok": msg is None, "message": msg})
        elif msg is None:
            if not args.quiet:
                lines.append(f"PASS {name}")
        else:
            lines.append(f"FAIL {name}: {msg}")
    out = _dump(lines) if args.json else "\n".join(lines + [f"{failed} failed"])
    return out, EXIT_SELFTEST if failed else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="terse output")

    parser = argparse.ArgumentParser(
        prog="g2minaff",
        description="Graded limits of minimal affinizations of type G2.",
    )
    # Separate actions: set_defaults on a shared parent would leak into subparsers.
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--quiet", action="store_true", help="terse output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, kl=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if kl:
            p.add_argument("k", type=_nonneg)
            p.add_argument("l", type=_nonneg)
        p.set_defaults(func=func)
        return p

    add("decompose", cmd_decompose, "decomposition into simple g-modules")
    add("character", cmd_character, "full character")
    add("dim", cmd_dim, "dimension")
    p = add("monomial", cmd_monomial, "dominant monomial of a minimal affinization")
    p.add_argument("--variant", choices=("first", "second"), default="first")
    add("relations", cmd_relations, "defining relations of the cyclic module")
    p = add("rho-table", cmd_rho_table, "rho on positive real affine roots")
    p.add_argument("--p-max", type=_positive, default=4)
    add("demazure-seq", cmd_demazure_seq, "weight sequence of the generalized Demazure module")
    p = add("kr", cmd_kr, "Kirillov-Reshetikhin decomposition", kl=False)
    p.add_argument("node", type=int, choices=(1, 2))
    p.add_argument("n", type=_nonneg)
    p = add("limit-check", cmd_limit_check, "stabilization of normalized characters", kl=False)
    p.add_argument("--J", type=_subset, default=frozenset({1, 2}))
    p.add_argument("--D", type=_positive, default=6)
    p.add_argument("--n-max", type=_positive, default=12)
    p = add("lemma46", cmd_lemma46, "determinant of the factorial matrix", kl=False)
    p.add_argument("r", type=_positive)
    p = add("selftest", cmd_selftest, "run the invariant suite", kl=False)
    p.add_argument("--scale", type=_positive, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "rho-table" and args.p_max < 2:
        parser.error("--p-max must be at least 2")
    try:
        result = args.func(args)
    except (ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
