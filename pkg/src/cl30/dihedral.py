"""The eight symmetry operations of the square as canonical rotors.

Element labels, in canonical order:

    ==========  ==============================  =========================
    label       operation                       rotor
    ==========  ==============================  =========================
    ``Id``      identity                        1
    ``F1``      half-turn flip about e1         i e1
    ``F2``      half-turn flip about e2         i e2
    ``F3``      half-turn about the normal e3   i e3
    ``Rccw``    quarter turn ccw about e3       (1 + i e3) / sqrt(2)
    ``Rcw``     quarter turn cw about e3        (1 - i e3) / sqrt(2)
    ``F1p2``    flip about the diagonal e1+e2   i (e1 + e2) / sqrt(2)
    ``F1m2``    flip about the diagonal e1-e2   i (e1 - e2) / sqrt(2)
    ==========  ==============================  =========================

Every element is built once from the half-angle exponential of its defining
axis and angle and then frozen; the multiplication table is generated by
rotor products and canonical matching.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

from .multivector import DEFAULT_TOL, Vec3, E1, E2, E3
from .rotors import AxisAngle, Rotor, canonicalize, exp_half, rotate_vector, rotor_product

_SQRT_HALF = math.sqrt(0.5)

LABELS = ("Id", "F1", "F2", "F3", "Rccw", "Rcw", "F1p2", "F1m2")

# In-plane diagonal axes of the square.
E_1P2 = Vec3(_SQRT_HALF, _SQRT_HALF, 0.0)
E_1M2 = Vec3(_SQRT_HALF, -_SQRT_HALF, 0.0)

# The five symmetry axes of the unit square in the e1-e2 plane.
SYMMETRY_AXES = (E1, E2, E3, E_1P2, E_1M2)

# The four distinct vertices of the square, counterclockwise from e1+e2.
VERTICES = (
    Vec3(_SQRT_HALF, _SQRT_HALF, 0.0),
    Vec3(-_SQRT_HALF, _SQRT_HALF, 0.0),
    Vec3(-_SQRT_HALF, -_SQRT_HALF, 0.0),
    Vec3(_SQRT_HALF, -_SQRT_HALF, 0.0),
)


class UnknownElementError(ValueError):
    """Raised for labels outside the eight square symmetries."""


@dataclass(frozen=True)
class D4Element:
    label: str
    rotor: Rotor
    axis: Vec3
    angle: float

    def __repr__(self):
        return f"D4Element({self.label})"


def _build_elements() -> tuple[D4Element, ...]:
    half_pi = 0.5 * math.pi
    defs = (
        ("Id", E3, 0.0),
        ("F1", E1, math.pi),
        ("F2", E2, math.pi),
        ("F3", E3, math.pi),
        ("Rccw", E3, half_pi),
        ("Rcw", -1.0 * E3, half_pi),
        ("F1p2", E_1P2, math.pi),
        ("F1m2", E_1M2, math.pi),
    )
    return tuple(
        D4Element(label, exp_half(axis * angle), axis, angle)
        for label, axis, angle in defs
    )


ELEMENTS: tuple[D4Element, ...] = _build_elements()
_BY_LABEL = {e.label: e for e in ELEMENTS}


def element(label: str) -> D4Element:
    try:
        return _BY_LABEL[label]
    except KeyError:
        raise UnknownElementError(
            f"unknown element label {label!r}; expected one of {', '.join(LABELS)}"
        ) from None


def element_from_rotor(rotor: Rotor, tol: float = DEFAULT_TOL) -> D4Element | None:
    """Match a canonical rotor against the eight elements; None if no match."""
    for e in ELEMENTS:
        if e.rotor.approx_eq(rotor, tol):
            return e
    return None


def multiply(g: D4Element, h: D4Element, tol: float = DEFAULT_TOL) -> D4Element:
    """Group product: the element whose rotor is canonicalize(rotor(g)*rotor(h))."""
    product = rotor_product(g.rotor, h.rotor)
    match = element_from_rotor(product, tol)
    if match is None:
        raise RuntimeError(
            f"product {g.label}*{h.label} matches no element; rotor {product}"
        )
    return match


def inverse(g: D4Element, tol: float = DEFAULT_TOL) -> D4Element:
    """The inverse element; its rotor is the canonicalized reverse."""
    match = element_from_rotor(canonicalize(g.rotor.reverse()), tol)
    if match is None:
        raise RuntimeError(f"inverse of {g.label} matches no element")
    return match


def action_on_vector(g: D4Element, r: Vec3) -> Vec3:
    """The sandwich action of the element's rotor on a vector."""
    return rotate_vector(g.rotor, r)


@lru_cache(maxsize=None)
def multiplication_table(tol: float = DEFAULT_TOL) -> tuple[tuple[D4Element, ...], ...]:
    """8x8 table with rows as the left factor and columns as the right."""
    return tuple(tuple(multiply(g, h, tol) for h in ELEMENTS) for g in ELEMENTS)


def table_labels(tol: float = DEFAULT_TOL) -> list[list[str]]:
    return [[cell.label for cell in row] for row in multiplication_table(tol)]


def table_json(tol: float = DEFAULT_TOL) -> str:
    return json.dumps({"order": list(LABELS), "table": table_labels(tol)})


def table_text(tol: float = DEFAULT_TOL) -> str:
    """Plain-text grid of the multiplication table."""
    width = max(len(label) for label in LABELS)
    header = " " * width + " | " + " ".join(label.ljust(width) for label in LABELS)
    rule = "-" * len(header)
    lines = [header, rule]
    for label, row in zip(LABELS, table_labels(tol)):
        lines.append(
            label.ljust(width) + " | " + " ".join(cell.ljust(width) for cell in row)
        )
    return "\n".join(lines)


def bra_to_ket(label: str) -> D4Element:
    """Convert a bra-side element label to the ket acting identically.

    A bra carries the inverse exponential of its ket twin, so the bra written
    with the label of g acts on vectors exactly as the ket of g's inverse.
    """
    return inverse(element(label))


def axis_angle_of(label: str) -> AxisAngle:
    e = element(label)
    if e.angle == 0.0:
        return AxisAngle(axis=E3, angle=0.0, degenerate=True)
    return AxisAngle(axis=e.axis, angle=e.angle)
