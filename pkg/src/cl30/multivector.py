"""Multivector arithmetic in the Clifford algebra Cl(3,0).

A general element (a "cliffor") is stored as 8 real coefficients in the
canonical order ``[s, v1, v2, v3, b1, b2, b3, p]``:

* ``s``  -- scalar (grade 0)
* ``v``  -- vector components on e1, e2, e3 (grade 1)
* ``b``  -- bivector components, ``b_k`` multiplying ``i*e_k`` (grade 2)
* ``p``  -- pseudoscalar coefficient, multiplying ``i = e1 e2 e3`` (grade 3)

The algebra is generated by the orthonormality axioms ``e_j**2 = 1`` and
``e_j e_k = -e_k e_j`` for ``j != k``.  The unit volume ``i`` is central and
squares to -1, so the scalar/pseudoscalar pair and each vector/bivector pair
behave as single complex coefficients; the geometric product below exploits
exactly that pairing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_TOL = 1e-9

_GRADES = (0, 1, 2, 3)


class NonInvertibleError(ValueError):
    """Raised when a cliffor has no inverse reachable through its reverse."""


def _as_triple(values) -> tuple[float, float, float]:
    t = tuple(float(c) for c in values)
    if len(t) != 3:
        raise ValueError(f"expected 3 components, got {len(t)}")
    return t


@dataclass(frozen=True)
class Vec3:
    """A vector x1*e1 + x2*e2 + x3*e3."""

    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        for name in ("x1", "x2", "x3"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"non-finite component {name}={value!r}")
            object.__setattr__(self, name, value)

    @classmethod
    def from_sequence(cls, values) -> "Vec3":
        return cls(*_as_triple(values))

    def components(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)

    def __add__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x1, -self.x2, -self.x3)

    def __mul__(self, scalar: float) -> "Vec3":
        scalar = float(scalar)
        return Vec3(self.x1 * scalar, self.x2 * scalar, self.x3 * scalar)

    __rmul__ = __mul__

    def dot(self, other: "Vec3") -> float:
        return self.x1 * other.x1 + self.x2 * other.x2 + self.x3 * other.x3

    def cross(self, other: "Vec3") -> "Vec3":
        return Vec3(
            self.x2 * other.x3 - self.x3 * other.x2,
            self.x3 * other.x1 - self.x1 * other.x3,
            self.x1 * other.x2 - self.x2 * other.x1,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def normalized(self) -> "Vec3":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return self * (1.0 / n)

    def is_unit(self, tol: float = DEFAULT_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def as_cliffor(self) -> "Cliffor":
        return Cliffor(v=self.components())

    def approx_eq(self, other: "Vec3", tol: float = DEFAULT_TOL) -> bool:
        return (
            abs(self.x1 - other.x1) <= tol
            and abs(self.x2 - other.x2) <= tol
            and abs(self.x3 - other.x3) <= tol
        )

    def to_json(self) -> list[float]:
        return [self.x1, self.x2, self.x3]

    @classmethod
    def from_json(cls, data) -> "Vec3":
        return cls.from_sequence(data)


@dataclass(frozen=True)
class Cliffor:
    """A full Cl(3,0) multivector: scalar + vector + bivector + pseudoscalar."""

    s: float = 0.0
    v: tuple[float, float, float] = (0.0, 0.0, 0.0)
    b: tuple[float, float, float] = (0.0, 0.0, 0.0)
    p: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "v", _as_triple(self.v))
        object.__setattr__(self, "b", _as_triple(self.b))
        object.__setattr__(self, "p", float(self.p))
        for c in self.coefficients():
            if not math.isfinite(c):
                raise ValueError(f"non-finite coefficient {c!r}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def scalar(cls, value: float) -> "Cliffor":
        return cls(s=value)

    @classmethod
    def vector(cls, x1: float, x2: float, x3: float) -> "Cliffor":
        return cls(v=(x1, x2, x3))

    @classmethod
    def bivector(cls, b1: float, b2: float, b3: float) -> "Cliffor":
        return cls(b=(b1, b2, b3))

    @classmethod
    def pseudoscalar(cls, value: float) -> "Cliffor":
        return cls(p=value)

    @classmethod
    def from_coefficients(cls, coeffs) -> "Cliffor":
        c = tuple(float(x) for x in coeffs)
        if len(c) != 8:
            raise ValueError(f"expected 8 coefficients, got {len(c)}")
        return cls(s=c[0], v=c[1:4], b=c[4:7], p=c[7])

    def coefficients(self) -> tuple[float, ...]:
        return (self.s, *self.v, *self.b, self.p)

    # -- structure ---------------------------------------------------------

    def grade(self, k: int) -> "Cliffor":
        """Project onto the grade-k part; the four projections sum to self."""
        if k not in _GRADES:
            raise ValueError(f"grade must be one of {_GRADES}, got {k}")
        if k == 0:
            return Cliffor(s=self.s)
        if k == 1:
            return Cliffor(v=self.v)
        if k == 2:
            return Cliffor(b=self.b)
        return Cliffor(p=self.p)

    def vector_part(self) -> Vec3:
        return Vec3(*self.v)

    def reverse(self) -> "Cliffor":
        """Reversal: flips the sign of the grade-2 and grade-3 parts."""
        return Cliffor(s=self.s, v=self.v, b=tuple(-c for c in self.b), p=-self.p)

    def inverse(self, tol: float = 1e-12) -> "Cliffor":
        """Inverse through the reverse: a * a.inverse() == 1.

        Only defined when ``a * reverse(a)`` is an invertible complex number
        (scalar + pseudoscalar); unit rotors and nonzero vectors qualify.
        """
        n = self * self.reverse()
        z = complex(n.s, n.p)
        residue = max(abs(c) for c in (*n.v, *n.b))
        if abs(z) <= tol or residue > tol * max(1.0, abs(z)):
            raise NonInvertibleError(
                "cliffor has no reverse-based inverse "
                f"(norm part {z!r}, non-complex residue {residue:.3e})"
            )
        w = 1.0 / z
        return self.reverse() * Cliffor(s=w.real, p=w.imag)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Cliffor") -> "Cliffor":
        return Cliffor(
            s=self.s + other.s,
            v=tuple(a + b for a, b in zip(self.v, other.v)),
            b=tuple(a + b for a, b in zip(self.b, other.b)),
            p=self.p + other.p,
        )

    def __sub__(self, other: "Cliffor") -> "Cliffor":
        return self + (-other)

    def __neg__(self) -> "Cliffor":
        return Cliffor(
            s=-self.s,
            v=tuple(-c for c in self.v),
            b=tuple(-c for c in self.b),
            p=-self.p,
        )

    def __mul__(self, other) -> "Cliffor":
        if isinstance(other, Cliffor):
            return _product(self, other)
        scalar = float(other)
        return Cliffor(
            s=self.s * scalar,
            v=tuple(c * scalar for c in self.v),
            b=tuple(c * scalar for c in self.b),
            p=self.p * scalar,
        )

    def __rmul__(self, other) -> "Cliffor":
        # Scalars commute with everything; cliffor*cliffor goes via __mul__.
        return self * other

    # -- comparison / serialization ----------------------------------------

    def approx_eq(self, other: "Cliffor", tol: float = DEFAULT_TOL) -> bool:
        return all(
            abs(a - b) <= tol
            for a, b in zip(self.coefficients(), other.coefficients())
        )

    def max_abs(self) -> float:
        return max(abs(c) for c in self.coefficients())

    def to_json(self) -> list[float]:
        return list(self.coefficients())

    @classmethod
    def from_json(cls, data) -> "Cliffor":
        return cls.from_coefficients(data)


def _product(a: Cliffor, b: Cliffor) -> Cliffor:
    # The pseudoscalar is central with i**2 = -1, so write a cliffor as
    # a0 + sum_k a_k e_k with complex a0 = s + i*p and a_k = v_k + i*b_k.
    # Then e_j e_k = delta_jk + i eps_jkm e_m gives
    #   AB = (a0 b0 + a.b) + sum_m (a0 b_m + b0 a_m + i (a x b)_m) e_m.
    a0 = complex(a.s, a.p)
    b0 = complex(b.s, b.p)
    a1 = complex(a.v[0], a.b[0])
    a2 = complex(a.v[1], a.b[1])
    a3 = complex(a.v[2], a.b[2])
    b1 = complex(b.v[0], b.b[0])
    b2 = complex(b.v[1], b.b[1])
    b3 = complex(b.v[2], b.b[2])

    c0 = a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3
    c1 = a0 * b1 + b0 * a1 + 1j * (a2 * b3 - a3 * b2)
    c2 = a0 * b2 + b0 * a2 + 1j * (a3 * b1 - a1 * b3)
    c3 = a0 * b3 + b0 * a3 + 1j * (a1 * b2 - a2 * b1)

    return Cliffor(
        s=c0.real,
        v=(c1.real, c2.real, c3.real),
        b=(c1.imag, c2.imag, c3.imag),
        p=c0.imag,
    )


# Module-level units.
ZERO = Cliffor()
ONE = Cliffor.scalar(1.0)
E1 = Vec3(1.0, 0.0, 0.0)
E2 = Vec3(0.0, 1.0, 0.0)
E3 = Vec3(0.0, 0.0, 1.0)
PSEUDOSCALAR = Cliffor.pseudoscalar(1.0)


def geometric_product(a: Cliffor, b: Cliffor) -> Cliffor:
    """Associative product induced by e_j**2 = 1, e_j e_k = -e_k e_j."""
    return a * b


def grade_project(a: Cliffor, k: int) -> Cliffor:
    return a.grade(k)


def reverse(a: Cliffor) -> Cliffor:
    return a.reverse()


def inverse(a: Cliffor, tol: float = 1e-12) -> Cliffor:
    return a.inverse(tol=tol)


def pauli_decompose(a: Vec3, b: Vec3) -> tuple[float, Vec3]:
    """Split a vector product per the Pauli identity: ab = a.b + i (a x b)."""
    return a.dot(b), a.cross(b)
