"""Command-line front end: JSON in, one Report JSON document out.

Exit codes: 0 when the verdict is Pass, 1 when it is Fail or a
counterexample was found, 2 on usage or input errors.  Output is
deterministic for fixed inputs and seed, so reports can be diffed in CI.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import NoWitness
from .partitions import is_partition, trim
from .polytope import from_generators
from .schur import SchurSum
from .tableaux import is_ssyt
from .verify import (
    ExploreConfig,
    Report,
    check_2pm,
    check_idp,
    check_snp,
    decompose_report,
    explore_conjecture,
    lemma41_check,
    matrix_identities,
    mlp_report,
)


class UsageError(Exception):
    pass


def _thread_cap() -> int:
    raw = os.environ.get("POLYIDP_THREADS", "0")
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"POLYIDP_THREADS must be a nonnegative integer, got {raw!r}")
    if cap < 0:
        raise UsageError(f"POLYIDP_THREADS must be a nonnegative integer, got {raw!r}")
    return cap


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}")


def _parse_inline(text: str, flag: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{flag} is not valid JSON: {exc}")


def _as_partition(obj, what: str) -> tuple[int, ...]:
    if not isinstance(obj, list) or not is_partition(obj):
        raise UsageError(f"{what} must be a weakly decreasing array of nonnegative integers, got {obj!r}")
    return tuple(obj)


def _load_generators(path: str) -> tuple[tuple[tuple[int, ...], ...], int]:
    doc = _load_json(path)
    if not isinstance(doc, dict) or "n" not in doc or "generators" not in doc:
        raise UsageError(f'{path} must look like {{"n": 3, "generators": [[10,2,1],[7,6,0]]}}')
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise UsageError(f'"n" must be a positive integer, got {n!r}')
    gens = doc["generators"]
    if not isinstance(gens, list) or not gens:
        raise UsageError('"generators" must be a nonempty array of partitions')
    gens = tuple(_as_partition(g, "generator") for g in gens)
    for g in gens:
        if len(trim(g)) > n:
            raise UsageError(f"generator {list(g)} does not fit in {n} coordinates")
    return gens, n


def _load_tableau(path: str) -> tuple[tuple[int, ...], ...]:
    doc = _load_json(path)
    if not isinstance(doc, dict) or "rows" not in doc:
        raise UsageError(f'{path} must look like {{"shape": [8,7,2], "rows": [[1,1],[2]]}}')
    rows = doc["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise UsageError('"rows" must be an array of arrays of positive integers')
    rows = tuple(tuple(r) for r in rows)
    try:
        valid = is_ssyt(rows)
    except ValueError as exc:
        raise UsageError(str(exc))
    if not valid:
        raise UsageError("rows do not form a semistandard tableau")
    if "shape" in doc and trim(tuple(doc["shape"])) != trim(tuple(len(r) for r in rows)):
        raise UsageError(f'"shape" {doc["shape"]} disagrees with the row lengths')
    return rows


def _emit(report: Report, out: str | None) -> int:
    text = json.dumps(report.to_dict(), indent=2) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyidp",
        description="Exact checks for symmetric lattice polytopes: maximal "
        "partitions, dilated-support saturation, and integer decompositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("mlp", help="maximal lattice partitions of a polytope")
    p.add_argument("--polytope", required=True, help='JSON file {"n":..,"generators":[..]}')
    add_out(p)

    p = sub.add_parser("check-2pm", help="is the polytope 2-partition maximal?")
    p.add_argument("--polytope", required=True)
    add_out(p)

    p = sub.add_parser("snp", help="saturation of the dilated Schur sum")
    p.add_argument("--polytope", required=True)
    p.add_argument("--t", type=int, required=True, help="dilation factor")
    p.add_argument("--certificates", action="store_true",
                   help="include per-point witnesses in the report")
    add_out(p)

    p = sub.add_parser("idp", help="integer decomposition of a dilation")
    p.add_argument("--polytope", required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--certificates", action="store_true")
    add_out(p)

    p = sub.add_parser("decompose", help="split a tableau into summand shapes")
    p.add_argument("--tableau", required=True, help='JSON file {"shape":..,"rows":..}')
    p.add_argument("--shapes", required=True, help='inline JSON, e.g. "[[2,2,1],[4,3,1],[2,2,0]]"')
    add_out(p)

    p = sub.add_parser("lemma41", help="difference-one dichotomy for a length-3 pair")
    p.add_argument("--lam", required=True, help='inline JSON partition, e.g. "[8,2,2]"')
    p.add_argument("--mu", required=True)
    add_out(p)

    p = sub.add_parser("matrix", help="determinant and solve identities for a pair")
    p.add_argument("--lam", required=True)
    p.add_argument("--mu", required=True)
    add_out(p)

    p = sub.add_parser("explore", help="sweep generator families for counterexamples")
    p.add_argument("--n", type=int, required=True, help="ambient dimension")
    p.add_argument("--k", type=int, required=True, help="generators per instance")
    p.add_argument("--max-part", type=int, required=True)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--filter", choices=["all", "2pm-only", "same-size-only"], default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=0, help="0 = exhaustive")
    p.add_argument("--stop-on-first", action="store_true")
    p.add_argument("--basis", choices=["mlp", "generators"], default="mlp")
    add_out(p)

    return parser


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        _thread_cap()  # validated; the implementation is single-threaded
        if args.command == "mlp":
            gens, n = _load_generators(args.polytope)
            return _emit(mlp_report(from_generators(gens, n)), args.out)
        if args.command == "check-2pm":
            gens, n = _load_generators(args.polytope)
            return _emit(check_2pm(from_generators(gens, n)), args.out)
        if args.command == "snp":
            gens, n = _load_generators(args.polytope)
            report = check_snp(SchurSum(gens, n), args.t, certificates=args.certificates)
            return _emit(report, args.out)
        if args.command == "idp":
            gens, n = _load_generators(args.polytope)
            report = check_idp(from_generators(gens, n), args.t,
                               certificates=args.certificates)
            return _emit(report, args.out)
        if args.command == "decompose":
            rows = _load_tableau(args.tableau)
            shapes = _parse_inline(args.shapes, "--shapes")
            if not isinstance(shapes, list) or not shapes:
                raise UsageError("--shapes must be a nonempty array of partitions")
            shapes = [_as_partition(s, "shape") for s in shapes]
            return _emit(decompose_report(rows, shapes), args.out)
        if args.command == "lemma41":
            lam = _as_partition(_parse_inline(args.lam, "--lam"), "--lam")
            mu = _as_partition(_parse_inline(args.mu, "--mu"), "--mu")
            return _emit(lemma41_check(lam, mu), args.out)
        if args.command == "matrix":
            lam = _as_partition(_parse_inline(args.lam, "--lam"), "--lam")
            mu = _as_partition(_parse_inline(args.mu, "--mu"), "--mu")
            return _emit(matrix_identities(lam, mu), args.out)
        if args.command == "explore":
            cfg = ExploreConfig(
                ambient=args.n,
                generator_count=args.k,
                max_part=args.max_part,
                max_dilation=args.t_max,
                filter=args.filter,
                seed=args.seed,
                samples=args.samples,
                stop_on_first=args.stop_on_first,
                basis=args.basis,
            )
            return _emit(explore_conjecture(cfg), args.out)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"polyidp: error: {exc}", file=sys.stderr)
        return 2
    except NoWitness as exc:
        # theory-contradicting outcome surfaced by a library call
        print(f"polyidp: missing witness: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"polyidp: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
