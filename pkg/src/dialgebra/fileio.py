"""JSON serialization of algebras and derivation spaces.

Algebra files look like::

    {"dim": 2,
     "left":  [{"i": 1, "j": 2, "k": 1, "c": "1"}],
     "right": [{"i": 2, "j": 2, "k": 1, "c": "-3/2"}]}

Indices are 1-based, coefficients use the ``p`` / ``p/q`` text form and
omitted entries are zero.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import LEFT, RIGHT, Algebra
from .derivations import DerivationSpace
from .linalg import QMatrix, format_rational, parse_rational


class ParseError(ValueError):
    pass


def _parse_entries(data, key: str, n: int) -> dict:
    raw = data.get(key, [])
    if not isinstance(raw, list):
        raise ParseError(f"{key}: expected a list of entries")
    products: dict = {}
    seen = set()
    for pos, entry in enumerate(raw):
        where = f"{key}[{pos}]"
        if not isinstance(entry, dict):
            raise ParseError(f"{where}: expected an object with i, j, k, c")
        missing = [f for f in ("i", "j", "k", "c") if f not in entry]
        if missing:
            raise ParseError(f"{where}: missing field(s) {', '.join(missing)}")
        idx = []
        for f in ("i", "j", "k"):
            v = entry[f]
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                raise ParseError(f"{where}.{f}: index must be an integer in 1..{n}, got {v!r}")
            idx.append(v - 1)
        c = entry["c"]
        if not isinstance(c, (str, int)) or isinstance(c, bool):
            raise ParseError(f"{where}.c: coefficient must be a string like \"-3/2\"")
        try:
            coeff = parse_rational(c)
        except ValueError as exc:
            raise ParseError(f"{where}.c: {exc}") from None
        i, j, k = idx
        if (i, j, k) in seen:
            raise ParseError(f"{where}: duplicate entry for (i,j,k) = ({i + 1},{j + 1},{k + 1})")
        seen.add((i, j, k))
        products.setdefault((i, j), {})[k] = coeff
    return products


def algebra_from_dict(data, name: str = "") -> Algebra:
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object")
    n = data.get("dim")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"dim: expected a positive integer, got {n!r}")
    unknown = set(data) - {"dim", "left", "right", "name"}
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(sorted(unknown))}")
    left = _parse_entries(data, "left", n)
    right = _parse_entries(data, "right", n)
    return Algebra.from_products(n, left, right, name=data.get("name", name))


def loads_algebra(text: str, name: str = "") -> Algebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return algebra_from_dict(data, name)


def load_algebra(path) -> Algebra:
    path = Path(path)
    return loads_algebra(path.read_text(encoding="utf-8"), name=path.stem)


def algebra_to_dict(alg: Algebra) -> dict:
    out = {"dim": alg.dim}
    for which in (LEFT, RIGHT):
        out[which] = [{"i": i + 1, "j": j + 1, "k": k + 1, "c": format_rational(c)}
                      for i, j, k, c in alg.nonzero_products(which)]
    return out


def dumps_algebra(alg: Algebra) -> str:
    return json.dumps(algebra_to_dict(alg), indent=2)


def matrix_to_json(m: QMatrix) -> list:
    return [[format_rational(x) for x in m.row(i)] for i in range(m.rows)]


def matrix_from_json(rows) -> QMatrix:
    try:
        return QMatrix.from_rows([[parse_rational(x) for x in r] for r in rows])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad matrix: {exc}") from None


def derivation_space_to_dict(space: DerivationSpace) -> dict:
    return {
        "algebra": space.algebra.name,
        "triple": [format_rational(x) for x in space.triple],
        "dim": space.dim,
        "convention": "column",
        "basis": [matrix_to_json(b) for b in space.basis],
    }
