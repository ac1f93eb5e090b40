"""JSON formats at the boundary, with error messages that point into the input."""

from __future__ import annotations

import json

import jsonschema

from .arcs import ArcDiagram, klein_of
from .category import tableau_of_decomposition
from .partitions import Partition
from .summands import Decomposition, Indecomposable
from .tableaux import InvalidTableau, KleinTableau, LRTableau

PARTITION = {"type": "array", "items": {"type": "integer", "minimum": 0}}
PAIR = {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 2, "maxItems": 2}
SUMMAND = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["P0", "P1", "P2", "B2"]},
        "m": {"type": "integer", "minimum": 1},
        "r": {"type": "integer", "minimum": 1},
    },
    "required": ["kind", "m"],
    "additionalProperties": False,
}
KLEIN = {
    "type": "object",
    "properties": {
        "alpha": PARTITION,
        "beta": PARTITION,
        "gamma": PARTITION,
        "arcs": {"type": "array", "items": PAIR},
        "poles": {"type": "array", "items": {"type": "integer", "minimum": 1}},
    },
    "required": ["beta", "gamma", "arcs"],
}
LR = {
    "type": "object",
    "properties": {"gamma": PARTITION, "zeta": PARTITION, "beta": PARTITION},
    "required": ["gamma", "zeta", "beta"],
}
DECOMPOSITION = {
    "type": "object",
    "properties": {"decomposition": {"type": "array", "items": SUMMAND}},
    "required": ["decomposition"],
}
OBJECT = {"oneOf": [DECOMPOSITION, {"allOf": [KLEIN, {"not": {"required": ["decomposition"]}}]}]}
PAIR_OF_OBJECTS = {
    "type": "object",
    "properties": {"y": OBJECT, "z": OBJECT},
    "required": ["y", "z"],
}


class InputError(ValueError):
    """Malformed input; the message starts with a JSON pointer."""

    def __init__(self, pointer: str, message: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer or "/"


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


def check(data, schema, base: str = ""):
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as e:
        best = jsonschema.exceptions.best_match([e])
        raise InputError(base + _pointer(best.absolute_path), best.message) from None


def load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError("/", f"not valid JSON ({e.msg} at line {e.lineno})") from None


def parse_partition(data, where: str = "") -> Partition:
    check(data, PARTITION, where)
    try:
        return Partition(data)
    except ValueError as e:
        raise InputError(where, str(e)) from None


def parse_lr(data, where: str = "") -> LRTableau:
    check(data, LR, where)
    parts = {k: parse_partition(data[k], f"{where}/{k}") for k in ("gamma", "zeta", "beta")}
    return LRTableau(parts["gamma"], parts["zeta"], parts["beta"])


def parse_diagram(data, where: str = "") -> tuple[ArcDiagram, tuple]:
    check(data, KLEIN, where)
    beta = parse_partition(data["beta"], f"{where}/beta")
    gamma = parse_partition(data["gamma"], f"{where}/gamma")
    arcs = [tuple(a) for a in data["arcs"]]
    poles = list(data.get("poles", []))
    if "alpha" in data:
        alpha = parse_partition(data["alpha"], f"{where}/alpha")
    else:
        alpha = Partition([2] * len(arcs) + [1] * len(poles))
    try:
        delta = ArcDiagram(beta[0] if beta else 0, tuple(arcs), tuple(poles))
    except ValueError as e:
        raise InputError(f"{where}/arcs", str(e)) from None
    return delta, (alpha, beta, gamma)


def parse_klein(data, where: str = "") -> KleinTableau:
    """A Klein tableau from its arc form or from a list of summands."""
    check(data, OBJECT, where)
    if "decomposition" in data:
        try:
            d = Decomposition(tuple(Indecomposable.from_json(x) for x in data["decomposition"]))
        except ValueError as e:
            raise InputError(f"{where}/decomposition", str(e)) from None
        return tableau_of_decomposition(d)
    delta, type_ = parse_diagram(data, where)
    try:
        return klein_of(delta, type_)
    except InvalidTableau as e:
        raise InputError(where, f"not a Klein tableau: {e}") from None
    except ValueError as e:
        raise InputError(where, str(e)) from None


def parse_pair(data) -> tuple[KleinTableau, KleinTableau]:
    check(data, PAIR_OF_OBJECTS)
    return parse_klein(data["y"], "/y"), parse_klein(data["z"], "/z")


def dumps(obj) -> str:
    """Stable JSON text: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
