"""Input grammar shared by the CLI and the chain evaluator.

Axis-angle strings take the form ``<axis>:<angle>`` where the axis is one of
the named symmetry axes (``e1``, ``e2``, ``e3``, ``e1+2``, ``e1-2``) or three
comma-separated reals, and the angle is a real number or a rational multiple
of pi written like ``pi``, ``pi/2``, ``3pi/4`` or ``-0.5pi``.
"""

from __future__ import annotations

import math
import re

from . import dihedral
from .chains import KetStep, MixedChainError, ScaleStep
from .multivector import Cliffor, Vec3
from .rotors import exp_half

AXIS_NAMES = {
    "e1": dihedral.SYMMETRY_AXES[0],
    "e2": dihedral.SYMMETRY_AXES[1],
    "e3": dihedral.SYMMETRY_AXES[2],
    "e1+2": dihedral.E_1P2,
    "e1-2": dihedral.E_1M2,
}

_PI_PATTERN = re.compile(r"^(?P<sign>[+-]?)(?P<mult>\d+(?:\.\d*)?)?pi(?:/(?P<den>\d+(?:\.\d*)?))?$")


class MalformedInputError(ValueError):
    """Raised when a flag or JSON payload does not match its grammar."""


def parse_angle(text: str) -> float:
    text = text.strip().lower()
    match = _PI_PATTERN.match(text)
    if match:
        value = math.pi
        if match.group("mult"):
            value *= float(match.group("mult"))
        if match.group("den"):
            value /= float(match.group("den"))
        return -value if match.group("sign") == "-" else value
    try:
        return float(text)
    except ValueError:
        raise MalformedInputError(
            f"angle {text!r} is neither a real number nor a multiple of pi"
        ) from None


def parse_vector(text: str) -> Vec3:
    """A named axis or three comma-separated reals."""
    text = text.strip()
    if text.lower() in AXIS_NAMES:
        return AXIS_NAMES[text.lower()]
    parts = text.split(",")
    if len(parts) != 3:
        raise MalformedInputError(
            f"vector {text!r} must be an axis name or three comma-separated reals"
        )
    try:
        return Vec3(*(float(p) for p in parts))
    except ValueError:
        raise MalformedInputError(f"vector {text!r} has non-numeric components") from None


def parse_rotation_vector(text: str) -> Vec3:
    """``<axis>:<angle>`` as the rotation vector axis*angle."""
    if ":" not in text:
        raise MalformedInputError(
            f"rotation {text!r} must look like '<axis>:<angle>', e.g. 'e3:pi/2'"
        )
    axis_text, angle_text = text.rsplit(":", 1)
    axis = parse_vector(axis_text)
    if axis.norm() == 0.0:
        raise MalformedInputError("rotation axis must be nonzero")
    return axis.normalized() * parse_angle(angle_text)


def parse_scale(value) -> Cliffor:
    """A chain multiplier: scalar, named axis, 3-vector or 8-coefficient cliffor."""
    if isinstance(value, str):
        name = value.strip().lower()
        if name in AXIS_NAMES:
            return AXIS_NAMES[name].as_cliffor()
        try:
            return Cliffor.scalar(float(name))
        except ValueError:
            raise MalformedInputError(
                f"scale {value!r} must be a number, an axis name, or a coefficient list"
            ) from None
    if isinstance(value, (int, float)):
        return Cliffor.scalar(float(value))
    if isinstance(value, (list, tuple)):
        if len(value) == 3:
            return Vec3.from_sequence(value).as_cliffor()
        if len(value) == 8:
            return Cliffor.from_coefficients(value)
        raise MalformedInputError(
            f"scale list must have 3 (vector) or 8 (cliffor) entries, got {len(value)}"
        )
    raise MalformedInputError(f"unsupported scale value {value!r}")


def parse_ket(value) -> KetStep:
    """A chain rotation: an element label, '<axis>:<angle>', or {axis, angle}."""
    if isinstance(value, str):
        text = value.strip()
        if text.lower().startswith("bra:"):
            raise MixedChainError(
                "chains evaluate right-acting kets only; convert the bra "
                f"{text[4:]!r} to its ket form before chaining"
            )
        if text in dihedral.LABELS:
            return KetStep(dihedral.element(text).rotor, label=text)
        return KetStep(exp_half(parse_rotation_vector(text)))
    if isinstance(value, dict):
        axis = Vec3.from_sequence(value["axis"])
        if axis.norm() == 0.0:
            raise MalformedInputError("rotation axis must be nonzero")
        return KetStep(exp_half(axis.normalized() * float(value["angle"])))
    raise MalformedInputError(f"unsupported ket value {value!r}")


def parse_step(step: dict):
    """One chain step: exactly one of ``ket`` or ``scale``."""
    if not isinstance(step, dict):
        raise MalformedInputError(f"chain step must be an object, got {step!r}")
    if "bra" in step:
        raise MixedChainError(
            "chains evaluate right-acting kets only; bras cannot appear as steps"
        )
    keys = set(step) & {"ket", "scale"}
    if len(keys) != 1:
        raise MalformedInputError(
            f"chain step must carry exactly one of 'ket' or 'scale', got {sorted(step)}"
        )
    if "ket" in keys:
        return parse_ket(step["ket"])
    return ScaleStep(parse_scale(step["scale"]))


def resolve_element(label: str, allow_bra: bool = False) -> dihedral.D4Element:
    """An element label, optionally in ``bra:<label>`` form.

    A bra carries the inverse exponential of its ket twin, so it is converted
    immediately to the equivalent ket element and evaluation proceeds on the
    ket side only.
    """
    text = label.strip()
    if text.lower().startswith("bra:"):
        if not allow_bra:
            raise MixedChainError("bra operators are not accepted here")
        return dihedral.bra_to_ket(text[4:].strip())
    return dihedral.element(text)
