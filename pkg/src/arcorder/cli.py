"""Command line front end.

Exit codes: 0 success, 1 a mathematical negative (not comparable, invalid
tableau, failed identity, golden mismatch), 2 malformed input.
"""

from __future__ import annotations

import argparse
import difflib
import sys
from importlib import resources
from pathlib import Path

from .arcs import arc_diagram_of, klein_of
from .category import decompose, dim_end, dim_end_operator, orbit_dim_embed, orbit_dim_tableau
from .finite_field.oracle import DEFAULT_BUDGET, BudgetExceeded, orbit_identity_check
from .io import InputError, dumps, load_json, parse_diagram, parse_klein, parse_lr, parse_pair, parse_partition
from .orders import ext_witness, leq_hom, move_sequence
from .partitions import moment
from .posets import build_poset_gamma, build_poset_type, export_dot
from .reference import REPROS, _poset_json
from .tableaux import (
    InvalidTableau,
    UnsupportedType,
    deviation,
    enumerate_lr,
    refinements,
    validate_klein,
    validate_lr,
)


class Negative(Exception):
    """Carries output for exit code 1."""

    def __init__(self, text: str):
        self.text = text


def _read_input(args):
    if not args.input:
        raise InputError("/", "--input FILE is required")
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
    return load_json(text)


def _type_flags(args):
    missing = [n for n in ("alpha", "beta", "gamma") if getattr(args, n) is None]
    if missing:
        raise InputError("/", f"missing --{', --'.join(missing)}")
    return tuple(parse_partition(load_json(getattr(args, n)), f"/{n}") for n in ("alpha", "beta", "gamma"))


def _tableaux_of(args):
    if args.input:
        data = _read_input(args)
        if isinstance(data, dict) and "zeta" in data:
            return refinements(parse_lr(data))
        return [parse_klein(data)]
    return [pi for lr in enumerate_lr(*_type_flags(args)) for pi in refinements(lr)]


def cmd_validate(args) -> str:
    data = _read_input(args)
    if isinstance(data, dict) and "zeta" in data:
        kind, d = "lr", validate_lr(parse_lr(data))
    elif isinstance(data, dict) and "decomposition" in data:
        kind, d = "klein", validate_klein(parse_klein(data))
    else:
        delta, type_ = parse_diagram(data)
        kind = "klein"
        try:
            d = validate_klein(klein_of(delta, type_))
        except InvalidTableau as e:
            d = e.diagnosis
    out = dumps({"kind": kind, "valid": d.ok, "code": d.code, "detail": d.detail})
    if not d.ok:
        raise Negative(out)
    return out


def cmd_enum_lr(args) -> str:
    return dumps([t.to_json() for t in enumerate_lr(*_type_flags(args))])


def cmd_refine(args) -> str:
    return dumps([dict(pi.to_json(), deviation=deviation(pi), crossings=pi.crossings) for pi in _tableaux_of(args)])


def cmd_arc(args) -> str:
    pi = parse_klein(_read_input(args))
    return dumps(
        {
            "diagram": arc_diagram_of(pi).to_json(),
            "tableau": dict(pi.to_json(), lr=pi.lr.to_json()),
            "decomposition": decompose(pi).to_json(),
            "crossings": pi.crossings,
        }
    )


def cmd_order(args) -> str:
    y, z = parse_pair(_read_input(args))
    v = leq_hom(y, z)
    if not v.leq:
        raise Negative(dumps(v.to_json()))
    return dumps({"leq": True, "witness": [m.to_json() for m in move_sequence(y, z, args.strategy)]})


def cmd_sequence(args) -> str:
    y, z = parse_pair(_read_input(args))
    v = leq_hom(y, z)
    if not v.leq:
        raise Negative(dumps(v.to_json()))
    cur = decompose(z)
    steps = []
    for mv in move_sequence(y, z, args.strategy):
        cur = cur - mv.removed + mv.added
        steps.append({"move": mv.to_json(), "result": cur.to_json(), "ext": ext_witness(mv).to_json()})
    return dumps({"leq": True, "start": decompose(z).to_json(), "steps": steps})


def cmd_poset(args) -> str:
    if args.input:
        poset = build_poset_gamma(parse_lr(_read_input(args)))
    else:
        poset = build_poset_type(*_type_flags(args))
    if args.format == "dot":
        return export_dot(poset)
    return dumps(_poset_json(poset))


def cmd_dims(args) -> str:
    rows = []
    for pi in _tableaux_of(args):
        a, b, g = pi.type()
        rows.append(
            dict(
                pi.to_json(),
                crossings=pi.crossings,
                moment={"alpha": moment(a), "beta": moment(b), "gamma": moment(g)},
                orbit_dim_tableau=orbit_dim_tableau(pi),
                dim_end_alpha=dim_end_operator(a),
                dim_end_beta=dim_end_operator(b),
                dim_end=dim_end(decompose(pi)),
                orbit_dim_embed=orbit_dim_embed(pi),
            )
        )
    return dumps(rows)


def cmd_oracle(args) -> str:
    a, b, g = _type_flags(args)
    try:
        rep = orbit_identity_check(a, b, g, args.prime, args.budget)
    except BudgetExceeded as e:
        raise InputError("/budget", str(e)) from None
    if not rep.ok:
        raise Negative(dumps(rep.to_json()))
    return dumps(rep.to_json())


def golden_dir():
    return resources.files("arcorder") / "data" / "goldens"


def cmd_repro(args) -> str:
    lines, bad = [], False
    for name, fn in REPROS.items():
        got = dumps(fn())
        path = golden_dir() / f"{name}.json"
        if args.update:
            Path(str(path)).write_text(got)
            lines.append(f"{name}: written")
            continue
        want = path.read_text()
        if got == want:
            lines.append(f"{name}: ok")
        else:
            bad = True
            lines.append(f"{name}: MISMATCH")
            lines.extend(difflib.unified_diff(want.splitlines(), got.splitlines(), "golden", "computed", lineterm=""))
    text = "\n".join(lines) + "\n"
    if bad:
        raise Negative(text)
    return text


COMMANDS = {
    "validate": cmd_validate,
    "enum-lr": cmd_enum_lr,
    "refine": cmd_refine,
    "arc": cmd_arc,
    "order": cmd_order,
    "sequence": cmd_sequence,
    "poset": cmd_poset,
    "dims": cmd_dims,
    "oracle": cmd_oracle,
    "repro": cmd_repro,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="arcorder", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--alpha", help="JSON array, e.g. [2,1,1]")
        p.add_argument("--beta")
        p.add_argument("--gamma")
        p.add_argument("--input", help="JSON file, or - for stdin")
        p.add_argument("--format", choices=["json", "dot"], default="json")
        p.add_argument("--prime", type=int, default=2)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--strategy", choices=["baseline", "parallelogram"], default="baseline")
        if name == "repro":
            p.add_argument("--update", action="store_true", help="rewrite the goldens")
    return ap


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        stdout.write(COMMANDS[args.command](args))
        return 0
    except Negative as n:
        stdout.write(n.text)
        return 1
    except (InputError, UnsupportedType, OSError, ValueError) as e:
        stderr.write(f"error: {e}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
