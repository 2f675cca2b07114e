"""Left-to-right evaluation of ket chains.

A chain is an operand followed by steps, each either a right-acting rotation
ket or a cliffor multiplier.  Evaluation folds strictly left to right
(left-most precedence): a ket step conjugates the whole accumulated value by
its rotor sandwich, a scale step multiplies on the right by the geometric
product.  Only right-acting kets are representable, so mixed bra/ket chains
cannot be expressed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .multivector import Cliffor, Vec3
from .rotors import Rotor, rotate_cliffor


class MixedChainError(ValueError):
    """Raised when a chain tries to mix left-acting bras with kets."""


@dataclass(frozen=True)
class KetStep:
    rotor: Rotor
    label: str | None = None


@dataclass(frozen=True)
class ScaleStep:
    value: Cliffor


ChainStep = Union[KetStep, ScaleStep]


@dataclass(frozen=True)
class KetChainExpr:
    operand: Cliffor
    steps: tuple[ChainStep, ...]

    @classmethod
    def from_vector(cls, r: Vec3, steps) -> "KetChainExpr":
        return cls(r.as_cliffor(), tuple(steps))


def eval_chain(expr: KetChainExpr) -> Cliffor:
    acc = expr.operand
    for step in expr.steps:
        if isinstance(step, KetStep):
            acc = rotate_cliffor(step.rotor, acc)
        elif isinstance(step, ScaleStep):
            acc = acc * step.value
        else:
            raise TypeError(f"unsupported chain step {step!r}")
    return acc
