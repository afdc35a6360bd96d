"""Command-line front end.

Inputs are inline JSON, a file path, or ``-`` for stdin.  Output is
deterministic byte-for-byte for a fixed request: JSON is emitted compact
with sorted keys, CSV without quoting.  Exit codes: 0 success, 2 input
error, 3 size error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abelian import AbelianGroup, wedge_equivalent
from .bng import (
    BnGPresentation,
    project_symbol,
    reduce_class,
)
from .errors import BurnsideError, InputError, SizeError
from .groups import FiniteGroup
from .relations import expand_b2, relation_rows
from .symbols import Atom, Symbol, canonicalize_symbol
from .zlinalg import row_space_equal

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SIZE = 3


def _read_value(value: str) -> str:
    """Resolve an argument to text: stdin for ``-``, file contents, or inline."""
    if value == "-":
        return sys.stdin.read()
    if value.lstrip()[:1] not in ("{", "["):
        try:
            with open(value, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise InputError(f"cannot read input file {value!r}: {exc}") from exc
    return value


def _json_value(value: str, what: str):
    text = _read_value(value)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON for {what}: {exc}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n"


def _abelian_group(value: str) -> AbelianGroup:
    return AbelianGroup.from_json(_read_value(value))


def _char_tuple(A: AbelianGroup, data, what: str):
    if not isinstance(data, list) or any(not isinstance(c, list) for c in data):
        raise InputError(f"{what} must be an array of character vectors")
    return [A.reduce(c) for c in data]


def group_label(A: AbelianGroup) -> str:
    if not A.invariant_factors:
        return "1"
    return "x".join(f"Z/{n}" for n in A.invariant_factors)


def emit_table(results) -> str:
    """CSV table of structure results: one row per (group, n, structure)."""
    lines = ["group,n,free_rank,torsion"]
    for A, n, (free_rank, torsion) in results:
        lines.append(
            f"{group_label(A)},{n},{free_rank},{';'.join(str(t) for t in torsion)}"
        )
    return "\n".join(lines) + "\n"


def _cmd_bng_structure(args) -> str:
    A = _abelian_group(args.group)
    structure = BnGPresentation(A, args.n).structure()
    if args.format == "csv":
        return emit_table([(A, args.n, structure)])
    free_rank, torsion = structure
    return _dump({"free_rank": free_rank, "torsion": torsion})


def _cmd_bng_reduce(args) -> str:
    A = _abelian_group(args.group)
    P = BnGPresentation(A, args.n)
    chars = _char_tuple(A, _json_value(args.cls, "--class"), "--class")
    cls = reduce_class(P, {tuple(chars): 1})
    return _dump({"normal_form": cls.to_json_obj()})


def _cmd_bng_equal(args) -> str:
    A = _abelian_group(args.group)
    P = BnGPresentation(A, args.n)
    x = _char_tuple(A, _json_value(args.x, "--x"), "--x")
    y = _char_tuple(A, _json_value(args.y, "--y"), "--y")
    equal = reduce_class(P, {tuple(x): 1}) == reduce_class(P, {tuple(y): 1})
    return _dump({"equal": equal})


def _cmd_expand(args) -> str:
    G = FiniteGroup.from_json(_read_value(args.group))
    s = Symbol.from_json(G, _read_value(args.symbol))
    report = expand_b2(s, args.i, args.j)
    obj = report.to_json_obj()
    obj["raw_theta1"] = [t.to_json_obj() for t in report.raw_theta1]
    obj["raw_theta2"] = [t.to_json_obj() for t in report.raw_theta2]
    return _dump(obj)


def _cmd_canon(args) -> str:
    G = FiniteGroup.from_json(_read_value(args.group))
    s = Symbol.from_json(G, _read_value(args.symbol))
    return _dump(canonicalize_symbol(s).to_json_obj())


def _cmd_verify_prop71(args) -> str:
    A = _abelian_group(args.group)
    if args.n == 1:
        equal = True
    else:
        equal = row_space_equal(
            relation_rows(A, args.n, 2), relation_rows(A, args.n, args.n)
        )
    return _dump({"row_spaces_equal": equal})


def d8_example_report() -> dict:
    """The packaged dihedral regression: expand the order-4 subgroup symbol."""
    G = FiniteGroup.from_permutations(4, [[1, 2, 3, 0], [2, 1, 0, 3]])
    rho = 1
    sigma = 2
    rho2 = G.mul(rho, rho)
    H = G.subgroup(G.closure([rho2, sigma]))
    K = Atom(name="CxC", trdeg=0, alg_closure_degree=1, num_components=2)
    s = Symbol(
        group=G,
        subgroup=H,
        field_label=K,
        beta=((1, 0), (0, 1)),
        ambient_n=2,
    )
    report = expand_b2(s, 0, 1)
    sigma_class, _ = G.class_representative(G.closure([sigma]))
    theta2_sub = report.raw_theta2[0].subgroup.elements
    theta2_class, _ = G.class_representative(theta2_sub)
    return {
        "input": s.to_json_obj(),
        "raw_theta1": [t.to_json_obj() for t in report.raw_theta1],
        "raw_theta2": [t.to_json_obj() for t in report.raw_theta2],
        "theta1": report.theta1.to_json_obj(),
        "theta2": report.theta2.to_json_obj(),
        "vanished_by": report.vanished_by,
        "theta2_subgroup_class": list(theta2_class),
        "theta2_in_reflection_class": theta2_class == sigma_class,
    }


def _cmd_example_d8(args) -> str:
    return _dump(d8_example_report())


def _cmd_wedge(args) -> str:
    A = _abelian_group(args.group)
    x = _char_tuple(A, _json_value(args.x, "--x"), "--x")
    y = _char_tuple(A, _json_value(args.y, "--y"), "--y")
    return _dump({"equivalent": wedge_equivalent(A, x, y)})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burnside",
        description="Exact symbol calculus for equivariant Burnside groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **flags):
        p = sub.add_parser(name)
        for flag, kwargs in flags.items():
            p.add_argument(flag, **kwargs)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.set_defaults(func=func)
        return p

    add(
        "bng-structure",
        _cmd_bng_structure,
        **{
            "--group": dict(required=True),
            "--n": dict(type=int, required=True),
        },
    )
    add(
        "bng-reduce",
        _cmd_bng_reduce,
        **{
            "--group": dict(required=True),
            "--n": dict(type=int, required=True),
            "--class": dict(required=True, dest="cls"),
        },
    )
    add(
        "bng-equal",
        _cmd_bng_equal,
        **{
            "--group": dict(required=True),
            "--n": dict(type=int, required=True),
            "--x": dict(required=True),
            "--y": dict(required=True),
        },
    )
    add(
        "expand",
        _cmd_expand,
        **{
            "--group": dict(required=True),
            "--symbol": dict(required=True),
            "--i": dict(type=int, required=True),
            "--j": dict(type=int, required=True),
        },
    )
    add(
        "canon",
        _cmd_canon,
        **{
            "--group": dict(required=True),
            "--symbol": dict(required=True),
        },
    )
    add(
        "verify-prop71",
        _cmd_verify_prop71,
        **{
            "--group": dict(required=True),
            "--n": dict(type=int, required=True),
        },
    )
    add("example-d8", _cmd_example_d8)
    add(
        "wedge",
        _cmd_wedge,
        **{
            "--group": dict(required=True),
            "--x": dict(required=True),
            "--y": dict(required=True),
        },
    )
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        sys.stdout.write(args.func(args))
        return EXIT_OK
    except SizeError as exc:
        sys.stderr.write(f"size error: {exc}\n")
        return EXIT_SIZE
    except BurnsideError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
