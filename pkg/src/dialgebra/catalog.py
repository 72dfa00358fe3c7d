"""The six isomorphism classes of two-dimensional left-symmetric dialgebras.

Products not listed are zero (indices are 1-based in the comments)::

    L1(a,b), a != 0:  e1⊣e2 = e1, e2⊣e2 = e2, e2⊢e1 = a e1, e2⊢e2 = b e1 + e2
    L2(b,c), c != 0:  e1⊣e2 = e1, e2⊣e2 = c e1 + e2, e2⊢e2 = b e1 + e2
    L3(b):            e1⊣e2 = e1, e2⊣e2 = e2, e2⊢e2 = b e1 + e2
    L4(c):            e2⊣e2 = c e1 + e2, e2⊢e1 = e1, e2⊢e2 = e2
    L5(a,c), a != 1:  e2⊣e2 = c e1 + e2, e2⊢e1 = a e1, e2⊢e2 = c(1-a) e1 + e2
    L6(a), a != 0:    e2⊣e2 = e2, e2⊢e1 = a e1, e2⊢e2 = e2

Alongside the constructors this module keeps the published dimension table
and the published basis patterns, verbatim, so they can be compared with
what the solver finds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .algebra import Algebra
from .derivations import FAMILIES, Family
from .linalg import QMatrix

CLASS_IDS = ("L1", "L2", "L3", "L4", "L5", "L6")

PARAMETERS = {
    "L1": ("a", "b"),
    "L2": ("b", "c"),
    "L3": ("b",),
    "L4": ("c",),
    "L5": ("a", "c"),
    "L6": ("a",),
}

# (parameter, forbidden value)
CONSTRAINTS = {
    "L1": ("a", 0),
    "L2": ("c", 0),
    "L5": ("a", 1),
    "L6": ("a", 0),
}

DEFAULT_PARAMS = {"a": Fraction(2), "b": Fraction(3), "c": Fraction(5)}
DEFAULT_DELTA = Fraction(7)

# published Dim column, families in FAMILIES order
EXPECTED_DIMS = {
    "L1": (1, 1, 1, 0, 0, 0, 0, 1),
    "L2": (0, 1, 1, 0, 0, 2, 0, 1),
    "L3": (1, 2, 1, 0, 0, 2, 0, 1),
    "L4": (1, 2, 2, 0, 0, 0, 2, 1),
    "L5": (1, 1, 2, 0, 0, 0, 2, 1),
    "L6": (1, 1, 2, 0, 0, 0, 2, 2),
}


class ConstraintViolation(ValueError):
    pass


@dataclass(frozen=True)
class ClassSpec:
    id: str
    params: Mapping = field(default_factory=dict)

    def __post_init__(self):
        if self.id not in CLASS_IDS:
            raise ValueError(f"unknown class {self.id!r}; expected one of {', '.join(CLASS_IDS)}")
        missing = [p for p in PARAMETERS[self.id] if p not in self.params]
        if missing:
            raise ValueError(f"{self.id} needs parameter(s) {', '.join(missing)}")
        clean = {p: Fraction(self.params[p]) for p in PARAMETERS[self.id]}
        object.__setattr__(self, "params", clean)

    def __hash__(self):
        return hash((self.id, tuple(sorted(self.params.items()))))

    def violated_constraint(self) -> str | None:
        if self.id in CONSTRAINTS:
            name, bad = CONSTRAINTS[self.id]
            if self.params[name] == bad:
                return f"{name} ≠ {bad}"
        return None

    def __str__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.id}({args})"


def make_spec(class_id: str, **params) -> ClassSpec:
    """ClassSpec keeping only the parameters the class uses; others ignored."""
    return ClassSpec(class_id, {k: v for k, v in params.items() if k in PARAMETERS[class_id] and v is not None})


def instantiate(spec: ClassSpec) -> Algebra:
    msg = spec.violated_constraint()
    if msg is not None:
        raise ConstraintViolation(msg)
    p = spec.params
    a, b, c = p.get("a"), p.get("b"), p.get("c")
    # 0-based indices: e1 -> 0, e2 -> 1
    if spec.id == "L1":
        left = {(0, 1): {0: 1}, (1, 1): {1: 1}}
        right = {(1, 0): {0: a}, (1, 1): {0: b, 1: 1}}
    elif spec.id == "L2":
        left = {(0, 1): {0: 1}, (1, 1): {0: c, 1: 1}}
        right = {(1, 1): {0: b, 1: 1}}
    elif spec.id == "L3":
        left = {(0, 1): {0: 1}, (1, 1): {1: 1}}
        right = {(1, 1): {0: b, 1: 1}}
    elif spec.id == "L4":
        left = {(1, 1): {0: c, 1: 1}}
        right = {(1, 0): {0: 1}, (1, 1): {1: 1}}
    elif spec.id == "L5":
        left = {(1, 1): {0: c, 1: 1}}
        right = {(1, 0): {0: a}, (1, 1): {0: c * (1 - a), 1: 1}}
    else:
        left = {(1, 1): {1: 1}}
        right = {(1, 0): {0: a}, (1, 1): {1: 1}}
    return Algebra.from_products(2, left, right, name=str(spec))


def default_sample_params(class_id: str) -> ClassSpec:
    return make_spec(class_id, **DEFAULT_PARAMS)


def expected_dimension(class_id: str, family: Family) -> int:
    if class_id not in EXPECTED_DIMS:
        raise ValueError(f"unknown class {class_id!r}")
    if family not in FAMILIES:
        raise ValueError(f"no table column for {family}")
    return EXPECTED_DIMS[class_id][FAMILIES.index(family)]


def _m(a11, a12, a21, a22) -> QMatrix:
    return QMatrix(2, 2, (a11, a12, a21, a22))


def claimed_basis(spec: ClassSpec, family: Family) -> list[QMatrix] | None:
    """The published matrix pattern, one matrix per free entry set to 1.

    Patterns are read in the column convention. Returns None where the cell
    cannot be instantiated: the L1 (1,1,1) cell at b = 0 (its formula divides
    by b) and the L4 (1,1,0) cell, which mentions a parameter b that L4 lacks.
    """
    if family not in FAMILIES:
        raise ValueError(f"no table column for {family}")
    p = spec.params
    a, b, c = p.get("a"), p.get("b"), p.get("c")
    ident = [_m(1, 0, 0, 1)]
    upper = [_m(1, 0, 0, 0), _m(0, 1, 0, 0)]
    F = Family
    if spec.id == "L1":
        cells = {F.D111: None if b == 0 else [_m((a - 1) / b, 1, 0, 0)],
                 F.D110: ident, F.D101: ident, F.D01d: ident}
    elif spec.id == "L2":
        cells = {F.D110: ident, F.D101: ident, F.D001: upper, F.D01d: ident}
    elif spec.id == "L3":
        cells = {F.D111: [_m(1, -b, 0, 0)], F.D110: [_m(1, -b, 0, 0), _m(0, b, 0, 1)],
                 F.D101: ident, F.D001: upper, F.D01d: ident}
    elif spec.id == "L4":
        cells = {F.D111: [_m(1, -c, 0, 0)], F.D110: None,
                 F.D101: [_m(1, -c, 0, 0), _m(0, c, 0, 1)], F.D010: upper, F.D01d: ident}
    elif spec.id == "L5":
        cells = {F.D111: [_m(1, -c, 0, 0)], F.D110: ident,
                 F.D101: [_m(1, -c, 0, 0), _m(0, c, 0, 1)], F.D010: upper, F.D01d: ident}
    else:
        cells = {F.D111: [_m(1, 0, 0, 0)], F.D110: ident,
                 F.D101: [_m(1, 0, 0, 0), _m(0, 0, 0, 1)], F.D010: upper, F.D01d: upper}
    return cells.get(family, [])
