"""Batch command-line surface.

Reads problem instances as JSON, runs the combinatorial deciders and the
brute-force tensor oracle, and emits JSON verdicts, witnesses, tensors
and character tables.  Rationals travel as strings ("p/q" or "p"), never
as floats, and every payload is ordered deterministically so reruns are
byte-identical.

Exit codes: 0 success, 1 self-check property failure, 2 input error,
3 size-limit exceeded.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .characters import character_table
from .combinatorics import (
    DEFAULT_MAX_N,
    SizeLimitError,
    compose,
    enumerate_partitions,
    enumerate_permutations,
    is_partition,
)
from .decision import (
    EqualityVerdict,
    decide_equality,
    gamas_nonvanishing,
    gamas_standard,
)
from .group_algebra import isotypic_projector
from .linalg import VectorFamily, format_rational
from .sampling import random_family, scaled_family
from .tensor import (
    act,
    apply_element,
    decomposable,
    is_zero,
    tensor_add,
    tensor_equal,
    to_json_obj,
)

EXIT_OK = 0
EXIT_SELFCHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_LIMIT_ERROR = 3


class InputError(Exception):
    """Malformed instance file or inconsistent instance data."""


def _parse_vector_list(raw, dim: int, n: int, label: str) -> tuple:
    if not isinstance(raw, list) or len(raw) != n:
        raise InputError(f'"{label}" must be a list of {n} vectors')
    vectors = []
    for vec in raw:
        if not isinstance(vec, list) or len(vec) != dim:
            raise InputError(f'every vector in "{label}" must have {dim} entries')
        try:
            vectors.append(tuple(Fraction(x) for x in vec))
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise InputError(f'bad rational in "{label}": {exc}') from exc
    return tuple(vectors)


def load_instance(path: str, require_u: bool = False):
    """Parse an instance file into (lambda, v-family, u-family-or-None)."""
    try:
        with open(path) as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("instance must be a JSON object")
    dim = obj.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise InputError('"dim" must be a positive integer')
    lam = obj.get("lambda")
    if (
        not isinstance(lam, list)
        or not all(isinstance(p, int) for p in lam)
        or not is_partition(lam)
    ):
        raise InputError('"lambda" must be a weakly decreasing list of positive integers')
    lam = tuple(lam)
    n = sum(lam)
    fv = VectorFamily(dim, _parse_vector_list(obj.get("v"), dim, n, "v"))
    fu = None
    if obj.get("u") is not None:
        fu = VectorFamily(dim, _parse_vector_list(obj.get("u"), dim, n, "u"))
    elif require_u:
        raise InputError('"u" is required for this command')
    return lam, fv, fu


def _emit(obj: dict, output: str | None) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if output:
        with open(output, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _system_json(system) -> list[list[int]]:
    return [list(column) for column in system]


def verdict_json(verdict: EqualityVerdict) -> dict:
    obj: dict = {"equal": verdict.equal, "mode": verdict.mode}
    obj["failures"] = []
    for failure in verdict.failures:
        entry: dict = {
            "system": _system_json(failure.system),
            "reason": failure.reason,
        }
        if failure.scalars is not None:
            entry["scalars"] = [format_rational(s) for s in failure.scalars]
            entry["product"] = format_rational(failure.product)
        obj["failures"].append(entry)
    obj["witnesses"] = [
        {
            "system": _system_json(w.system),
            "sigma": list(w.sigma),
            "scalars": [format_rational(s) for s in w.scalars],
            "product": format_rational(w.product),
        }
        for w in verdict.witnesses
    ]
    return obj


def cmd_gamas(args) -> int:
    lam, fv, _ = load_instance(args.input)
    nonzero, system = gamas_nonvanishing(fv, lam, args.max_n)
    standard_nonzero, tableau = gamas_standard(fv, lam, args.max_n)
    assert nonzero == standard_nonzero
    _emit(
        {
            "nonzero": nonzero,
            "witness_system": _system_json(system) if system else None,
            "standard_witness": [list(r) for r in tableau] if tableau else None,
        },
        args.output,
    )
    return EXIT_OK


def cmd_equal(args) -> int:
    lam, fv, fu = load_instance(args.input, require_u=True)
    verdict = decide_equality(fv, fu, lam, args.max_n, args.exhaustive_failures)
    _emit(verdict_json(verdict), args.output)
    return EXIT_OK


def cmd_symmetrize(args) -> int:
    lam, fv, _ = load_instance(args.input)
    projector = isotypic_projector(lam, args.max_n)
    result = apply_element(decomposable(fv), projector)
    obj = to_json_obj(result)
    if args.shape_only:
        obj = {
            "dim": obj["dim"],
            "order": obj["order"],
            "entry_count": len(obj["entries"]),
        }
    _emit(obj, args.output)
    return EXIT_OK


def cmd_characters(args) -> int:
    table = character_table(args.n, args.max_n)
    _emit(
        {
            "n": table.n,
            "partitions": [list(p) for p in table.partitions],
            "classes": [list(c) for c in table.classes],
            "class_sizes": list(table.class_sizes),
            "values": [list(row) for row in table.values],
        },
        args.output,
    )
    return EXIT_OK


def _selfcheck_properties(n: int, trials: int, rng: random.Random, max_n: int):
    dims = (2, 3)
    partitions = enumerate_partitions(n)
    projectors = {lam: isotypic_projector(lam, max_n) for lam in partitions}
    perms = list(enumerate_permutations(n, max_n))

    def right_action_law() -> int:
        checks = 0
        for _ in range(trials):
            fam = random_family(rng, n, rng.choice(dims), adversarial=True)
            x = tensor_add(
                decomposable(fam),
                decomposable(random_family(rng, n, fam.dim)),
            )
            s, t = rng.choice(perms), rng.choice(perms)
            assert tensor_equal(act(act(x, s), t), act(x, compose(s, t)))
            checks += 1
        return checks

    def projector_idempotent_and_complete() -> int:
        checks = 0
        for _ in range(trials):
            fam = random_family(rng, n, rng.choice(dims), adversarial=True)
            x = decomposable(fam)
            total = None
            for lam in partitions:
                once = apply_element(x, projectors[lam])
                assert tensor_equal(apply_element(once, projectors[lam]), once)
                total = once if total is None else tensor_add(total, once)
                checks += 1
            assert tensor_equal(total, x)
        return checks

    def gamas_matches_oracle() -> int:
        checks = 0
        for _ in range(trials):
            fam = random_family(rng, n, rng.choice(dims), adversarial=True)
            x = decomposable(fam)
            for lam in partitions:
                nonzero, _ = gamas_nonvanishing(fam, lam, max_n)
                standard, _ = gamas_standard(fam, lam, max_n)
                assert nonzero == (not is_zero(apply_element(x, projectors[lam])))
                assert standard == nonzero
                checks += 1
        return checks

    def equality_matches_oracle() -> int:
        checks = 0
        for trial in range(trials):
            dim = rng.choice(dims)
            fv = random_family(rng, n, dim, adversarial=True)
            if trial % 3 == 0:
                fu = random_family(rng, n, dim, adversarial=True)
            else:
                fu = scaled_family(rng, fv, unit_product=(trial % 3 == 1))
            xv = decomposable(fv)
            xu = decomposable(fu)
            for lam in partitions:
                verdict = decide_equality(fv, fu, lam, max_n)
                oracle = tensor_equal(
                    apply_element(xv, projectors[lam]),
                    apply_element(xu, projectors[lam]),
                )
                assert verdict.equal == oracle
                checks += 1
        return checks

    return [
        ("right_action_law", right_action_law),
        ("projector_idempotent_and_complete", projector_idempotent_and_complete),
        ("gamas_matches_oracle", gamas_matches_oracle),
        ("equality_matches_oracle", equality_matches_oracle),
    ]


def cmd_selfcheck(args) -> int:
    rng = random.Random(args.seed)
    results = []
    ok = True
    for name, prop in _selfcheck_properties(args.n, args.trials, rng, args.max_n):
        try:
            checks = prop()
            results.append({"name": name, "pass": True, "checks": checks})
        except AssertionError:
            results.append({"name": name, "pass": False, "checks": 0})
            ok = False
    _emit(
        {
            "n": args.n,
            "trials": args.trials,
            "seed": args.seed,
            "properties": results,
            "ok": ok,
        },
        args.output,
    )
    return EXIT_OK if ok else EXIT_SELFCHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symten",
        description="Symmetrized decomposable tensors over the rationals: "
        "vanishing and equality, decided combinatorially and by brute force.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, needs_input: bool):
        if needs_input:
            p.add_argument("--input", required=True, help="instance JSON file")
        p.add_argument("--output", help="output path (default stdout)")
        p.add_argument(
            "--max-n",
            type=int,
            default=DEFAULT_MAX_N,
            help="size guard for factorial enumerations",
        )

    p = sub.add_parser("gamas", help="decide vanishing of the symmetrized tensor")
    add_common(p, True)
    p.set_defaults(func=cmd_gamas)

    p = sub.add_parser("equal", help="decide equality of two symmetrized tensors")
    add_common(p, True)
    p.add_argument(
        "--exhaustive-failures",
        action="store_true",
        help="collect all failing systems instead of stopping at the first",
    )
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("symmetrize", help="compute the symmetrized tensor")
    add_common(p, True)
    p.add_argument(
        "--shape-only",
        action="store_true",
        help="emit dimensions and entry count without the entries",
    )
    p.set_defaults(func=cmd_symmetrize)

    p = sub.add_parser("characters", help="emit the character table of S_n")
    add_common(p, False)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_characters)

    p = sub.add_parser("selfcheck", help="run randomized cross-validation suites")
    add_common(p, False)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--trials", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
