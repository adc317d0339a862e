"""JSON documents for ideals, depth functions and specs.

Ideal document::

    {
      "ring": {"vars": ["x", "y", "z"]},
      "generators": [
        [3, 0, 0],
        [1, 1, 1]
      ]
    }

Generator rows may come in any order and may be redundant on input; output
is always minimalized and canonically ordered.  Extra top-level keys (for
example ``"predicted"`` or ``"note"``) are annotations: they are ignored on
input and emitted after the two required keys on output.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import DocumentError
from .monomial import MonomialIdeal, Ring


def ideal_to_dict(I: MonomialIdeal) -> dict:
    return {"ring": {"vars": list(I.ring.var_names)}, "generators": [list(g) for g in I.gens]}


def ideal_from_dict(doc: Any) -> MonomialIdeal:
    if not isinstance(doc, dict):
        raise DocumentError("ideal document must be an object")
    try:
        names = doc["ring"]["vars"]
        rows = doc["generators"]
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"ideal document is missing field {exc}") from None
    if not isinstance(names, list) or not isinstance(rows, list):
        raise DocumentError("ring.vars and generators must be arrays")
    try:
        ring = Ring(tuple(names))
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    gens = []
    for row in rows:
        if not isinstance(row, list) or any(type(e) is not int for e in row):
            raise DocumentError(f"generator row {row!r} is not an array of integers")
        if len(row) != ring.arity:
            raise DocumentError(f"generator row {row} has {len(row)} entries, ring has {ring.arity} variables")
        if any(e < 0 for e in row):
            raise DocumentError(f"negative exponent in generator row {row}")
        gens.append(tuple(row))
    return MonomialIdeal(ring, tuple(gens))


def _dump_value(value: Any) -> str:
    return json.dumps(value, separators=(", ", ": "))


def serialize_ideal(I: MonomialIdeal, annotations: dict | None = None) -> str:
    lines = ["{", f'  "ring": {{"vars": {_dump_value(list(I.ring.var_names))}}},']
    if I.gens:
        lines.append('  "generators": [')
        rows = [f"    {_dump_value(list(g))}" for g in I.gens]
        lines.append(",\n".join(rows))
        lines.append("  ]" + ("," if annotations else ""))
    else:
        lines.append('  "generators": []' + ("," if annotations else ""))
    if annotations:
        items = [f"  {json.dumps(k)}: {_dump_value(v)}" for k, v in annotations.items()]
        lines.append(",\n".join(items))
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> MonomialIdeal:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not a valid document: {exc}") from None
    return ideal_from_dict(doc)


def load_json_arg(arg: str) -> Any:
    """Parse ``arg`` as inline JSON, or as a path to a JSON file."""
    text = arg
    stripped = arg.lstrip()
    if not stripped.startswith(("{", "[")):
        path = Path(arg)
        if not path.exists():
            raise DocumentError(f"no such file: {arg}")
        text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not a valid document: {exc}") from None


def read_ideal(arg: str) -> MonomialIdeal:
    return ideal_from_dict(load_json_arg(arg))
