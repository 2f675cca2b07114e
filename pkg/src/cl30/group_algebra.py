"""Real linear combinations of the square's symmetry operations.

An element is a formal sum ``sum_g c_g |g>`` over the eight dihedral
operations, multiplied by convolution through the group table and applied to
vectors as right-acting operators (the left factor of a product acts first).
Sums stay formal: two elements are *equal* only coefficientwise.  Equal
*action* on some subspace is a weaker relation -- several nonzero sums
annihilate every vector of a plane or of all of 3-space -- and is provided as
a separate subspace-relative predicate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from . import dihedral
from .multivector import DEFAULT_TOL, Vec3, E1, E2, E3
from .dihedral import LABELS

_INDEX = {label: i for i, label in enumerate(LABELS)}
_N = len(LABELS)


@dataclass(frozen=True)
class GroupAlgebraElement:
    """Formal real-coefficient sum over the eight dihedral operations."""

    coeff: tuple[float, ...]

    def __post_init__(self):
        c = tuple(float(x) for x in self.coeff)
        if len(c) != _N:
            raise ValueError(f"expected {_N} coefficients, got {len(c)}")
        object.__setattr__(self, "coeff", c)

    @classmethod
    def zero(cls) -> "GroupAlgebraElement":
        return cls((0.0,) * _N)

    @classmethod
    def basis(cls, label: str) -> "GroupAlgebraElement":
        dihedral.element(label)  # validates the label
        c = [0.0] * _N
        c[_INDEX[label]] = 1.0
        return cls(tuple(c))

    @classmethod
    def from_dict(cls, mapping: Mapping[str, float]) -> "GroupAlgebraElement":
        c = [0.0] * _N
        for label, value in mapping.items():
            if label not in _INDEX:
                raise dihedral.UnknownElementError(
                    f"unknown element label {label!r} in coefficient mapping"
                )
            c[_INDEX[label]] = float(value)
        return cls(tuple(c))

    def to_dict(self) -> dict[str, float]:
        """Label -> coefficient mapping; exact zeros are omitted."""
        return {
            label: value for label, value in zip(LABELS, self.coeff) if value != 0.0
        }

    def __getitem__(self, label: str) -> float:
        return self.coeff[_INDEX[label]]

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            tuple(a + b for a, b in zip(self.coeff, other.coeff))
        )

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return GroupAlgebraElement(
            tuple(a - b for a, b in zip(self.coeff, other.coeff))
        )

    def __neg__(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement(tuple(-a for a in self.coeff))

    def __mul__(self, other) -> "GroupAlgebraElement":
        if isinstance(other, GroupAlgebraElement):
            return ga_multiply(self, other)
        scalar = float(other)
        return GroupAlgebraElement(tuple(a * scalar for a in self.coeff))

    __rmul__ = __mul__

    def approx_eq(self, other: "GroupAlgebraElement", tol: float = DEFAULT_TOL) -> bool:
        return all(abs(a - b) <= tol for a, b in zip(self.coeff, other.coeff))

    def to_json(self) -> dict[str, float]:
        return self.to_dict()

    @classmethod
    def from_json(cls, data) -> "GroupAlgebraElement":
        return cls.from_dict(data)


def _product_index_table() -> tuple[tuple[int, ...], ...]:
    table = dihedral.multiplication_table()
    return tuple(tuple(_INDEX[cell.label] for cell in row) for row in table)


_PRODUCT_INDEX = _product_index_table()


def ga_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Bilinear convolution through the group multiplication table."""
    out = [0.0] * _N
    for i, ca in enumerate(a.coeff):
        if ca == 0.0:
            continue
        row = _PRODUCT_INDEX[i]
        for j, cb in enumerate(b.coeff):
            if cb == 0.0:
                continue
            out[row[j]] += ca * cb
    return GroupAlgebraElement(tuple(out))


def ga_apply(a: GroupAlgebraElement, r: Vec3) -> Vec3:
    """Apply the operator sum to a vector: sum_g c_g (r acted by g).

    Composition follows left-most precedence: in a product A*B the left
    factor A acts first, so ga_apply(A*B, r) == ga_apply(B, ga_apply(A, r)).
    """
    out = Vec3(0.0, 0.0, 0.0)
    for c, g in zip(a.coeff, dihedral.ELEMENTS):
        if c != 0.0:
            out = out + dihedral.action_on_vector(g, r) * c
    return out


def fermion_dyadic(mu: int, nu: int) -> GroupAlgebraElement:
    """The extraction-replacement operator: picks the mu-component of a
    vector and re-emits it along e_nu.

    Built from half-sums of flips, post-rotated by a quarter turn where the
    output axis differs from the input axis; the expansion runs through the
    convolution product so each dyadic comes out as plain coefficients in
    {0, +-1/2}.
    """
    if mu not in (1, 2) or nu not in (1, 2):
        raise ValueError(f"dyadic indices must be 1 or 2, got ({mu}, {nu})")
    one = GroupAlgebraElement.basis("Id")
    if (mu, nu) == (1, 1):
        return 0.5 * (one + GroupAlgebraElement.basis("F1"))
    if (mu, nu) == (2, 2):
        return 0.5 * (one + GroupAlgebraElement.basis("F2"))
    if (mu, nu) == (1, 2):
        half = 0.5 * (one + GroupAlgebraElement.basis("F1"))
        return ga_multiply(half, GroupAlgebraElement.basis("Rccw"))
    half = 0.5 * (one + GroupAlgebraElement.basis("F2"))
    return ga_multiply(half, GroupAlgebraElement.basis("Rcw"))


def equivalent_on(
    a: GroupAlgebraElement,
    b: GroupAlgebraElement,
    basis: Iterable[Vec3],
    tol: float = DEFAULT_TOL,
) -> bool:
    """Whether two operator sums act identically on span(basis).

    This is the subspace-relative sense in which nonzero sums can be
    "zero": equality of coefficients implies equivalence on every subspace,
    but not conversely.
    """
    diff = a - b
    return all(
        abs(c) <= tol
        for v in basis
        for c in ga_apply(diff, v).components()
    )


def annihilates(
    a: GroupAlgebraElement, basis: Iterable[Vec3], tol: float = DEFAULT_TOL
) -> bool:
    return equivalent_on(a, GroupAlgebraElement.zero(), basis, tol)


# Standard subspaces for the annihilation identities.
LINE_BASIS = (E1,)
PLANE_BASIS = (E1, E2)
SPACE_BASIS = (E1, E2, E3)


def _sum(*labels: str) -> GroupAlgebraElement:
    out = GroupAlgebraElement.zero()
    for label in labels:
        out = out + GroupAlgebraElement.basis(label)
    return out


def null_identities() -> tuple[tuple[str, GroupAlgebraElement, tuple[Vec3, ...]], ...]:
    """The six operator sums that annihilate a stated subspace.

    Returns (name, operator, subspace basis) triples; identities on a
    higher-dimensional subspace also hold on every lower one.
    """
    return (
        (
            "ket(1) - ket(i e1) on span{e1}",
            GroupAlgebraElement.basis("Id") - GroupAlgebraElement.basis("F1"),
            LINE_BASIS,
        ),
        ("ket(1) + ket(i e3) on span{e1,e2}", _sum("Id", "F3"), PLANE_BASIS),
        ("ket(i e1) + ket(i e2) on span{e1,e2}", _sum("F1", "F2"), PLANE_BASIS),
        (
            "quarter turn ccw + quarter turn cw on span{e1,e2}",
            _sum("Rccw", "Rcw"),
            PLANE_BASIS,
        ),
        (
            "diagonal flips (e1+e2) + (e1-e2) on span{e1,e2}",
            _sum("F1p2", "F1m2"),
            PLANE_BASIS,
        ),
        (
            "ket(1) + ket(i e1) + ket(i e2) + ket(i e3) on span{e1,e2,e3}",
            _sum("Id", "F1", "F2", "F3"),
            SPACE_BASIS,
        ),
    )
