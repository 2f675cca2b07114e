"""Half-angle exponential rotors and rotation composition.

A rotation about the vector ``theta`` by the angle ``|theta|`` (right-hand
rule, counterclockwise) acts through the two-sided sandwich

    r' = exp(-i theta/2) r exp(i theta/2)

so the stored operator is the *right* factor ``exp(i theta/2)``: a unit
scalar-plus-bivector element.  Since ``R`` and ``-R`` produce the same
sandwich (Hestenes equivalence), rotors are kept in a canonical sign:
positive scalar part, or -- at half-angle pi/2, where the scalar part
vanishes -- a positive leading bivector component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .multivector import DEFAULT_TOL, Cliffor, Vec3, E3

# Scalar parts at angle pi sit at ~1e-16; anything smaller than this is a
# sign tie broken by the bivector components.
_SIGN_TIE_TOL = 1e-9
# Norm drift beyond this is renormalized; beyond _NORM_REJECT it is an error.
_NORM_SNAP = 1e-12
_NORM_REJECT = 1e-6


@dataclass(frozen=True)
class Rotor:
    """Canonical unit even element exp(i theta/2): scalar + bivector."""

    s: float
    b: tuple[float, float, float]

    def __post_init__(self):
        object.__setattr__(self, "s", float(self.s))
        object.__setattr__(self, "b", tuple(float(c) for c in self.b))

    @classmethod
    def identity(cls) -> "Rotor":
        return cls(1.0, (0.0, 0.0, 0.0))

    def as_cliffor(self) -> Cliffor:
        return Cliffor(s=self.s, b=self.b)

    def norm(self) -> float:
        return math.sqrt(self.s * self.s + sum(c * c for c in self.b))

    def reverse(self) -> "Rotor":
        # The reverse of a unit rotor is its inverse rotation; it is again
        # canonical only when s > 0, so callers needing canonical form should
        # pass through canonicalize().
        return Rotor(self.s, tuple(-c for c in self.b))

    def approx_eq(self, other: "Rotor", tol: float = DEFAULT_TOL) -> bool:
        return abs(self.s - other.s) <= tol and all(
            abs(a - b) <= tol for a, b in zip(self.b, other.b)
        )

    def to_json(self) -> list[float]:
        return self.as_cliffor().to_json()

    @classmethod
    def from_json(cls, data, tol: float = DEFAULT_TOL) -> "Rotor":
        return canonicalize(Cliffor.from_json(data), tol=tol)


@dataclass(frozen=True)
class AxisAngle:
    """A rotation described by a unit axis and an angle in [0, pi].

    ``degenerate`` marks the identity rotation, whose axis is reported as the
    conventional default e3.
    """

    axis: Vec3
    angle: float
    degenerate: bool = False

    def __post_init__(self):
        angle = float(self.angle)
        if not math.isfinite(angle):
            raise ValueError("angle must be finite")
        if angle < -1e-12 or angle > math.pi + 1e-9:
            raise ValueError(f"canonical angle must lie in [0, pi], got {angle}")
        object.__setattr__(self, "angle", min(max(angle, 0.0), math.pi))
        if not self.degenerate and self.angle > 0 and not self.axis.is_unit(1e-9):
            raise ValueError(f"axis must be a unit vector, |axis|={self.axis.norm()}")

    @classmethod
    def from_vector(cls, theta: Vec3) -> "AxisAngle":
        """Canonical axis/angle of the rotation vector theta (any magnitude)."""
        return log_rotor(exp_half(theta))

    def to_vector(self) -> Vec3:
        return self.axis * self.angle

    def to_json(self) -> dict:
        return {"axis": self.axis.to_json(), "angle": self.angle}

    @classmethod
    def from_json(cls, data) -> "AxisAngle":
        axis = Vec3.from_json(data["axis"])
        angle = float(data["angle"])
        if angle <= _SIGN_TIE_TOL:
            return cls(axis=E3, angle=0.0, degenerate=True)
        return cls(axis=axis, angle=angle)


def canonicalize(rotor, tol: float = DEFAULT_TOL) -> Rotor:
    """Pick the canonical representative of the pair {R, -R}.

    Accepts a Rotor or an even Cliffor of unit norm (small drift is
    renormalized).  Both signs produce the same sandwich, so this is purely a
    representative choice; it never changes the rotation.
    """
    if isinstance(rotor, Rotor):
        s, b = rotor.s, rotor.b
    else:
        if max(abs(c) for c in (*rotor.v, rotor.p)) > max(tol, 1e-12):
            raise ValueError("rotor must be an even (scalar + bivector) element")
        s, b = rotor.s, rotor.b

    norm = math.sqrt(s * s + sum(c * c for c in b))
    if abs(norm - 1.0) > _NORM_REJECT:
        raise ValueError(f"rotor must have unit norm, got {norm}")
    if abs(norm - 1.0) > _NORM_SNAP:
        scale = 1.0 / norm
        s = s * scale
        b = tuple(c * scale for c in b)

    flip = False
    if s < -_SIGN_TIE_TOL:
        flip = True
    elif abs(s) <= _SIGN_TIE_TOL:
        for c in b:
            if abs(c) > _SIGN_TIE_TOL:
                flip = c < 0
                break
    if flip:
        s = -s
        b = tuple(-c for c in b)
    return Rotor(s, tuple(b))


def exp_half(theta: Vec3) -> Rotor:
    """Half-angle exponential: cos(|t|/2) + i (t/|t|) sin(|t|/2), canonical."""
    n = theta.norm()
    if n == 0.0:
        return Rotor.identity()
    half = 0.5 * n
    scale = math.sin(half) / n
    return canonicalize(
        Cliffor(s=math.cos(half), b=(theta * scale).components())
    )


def log_rotor(rotor: Rotor, tol: float = DEFAULT_TOL) -> AxisAngle:
    """Invert exp_half on a canonical rotor; angle lands in [0, pi]."""
    bvec = Vec3(*rotor.b)
    bnorm = bvec.norm()
    if bnorm <= tol:
        return AxisAngle(axis=E3, angle=0.0, degenerate=True)
    angle = 2.0 * math.atan2(bnorm, rotor.s)
    return AxisAngle(axis=bvec * (1.0 / bnorm), angle=min(angle, math.pi))


def rotor_product(r1: Rotor, r2: Rotor) -> Rotor:
    """Canonical rotor of the composition "r1 first, then r2"."""
    return canonicalize(r1.as_cliffor() * r2.as_cliffor())


def rotate_vector(rotor: Rotor, r: Vec3) -> Vec3:
    """Apply the sandwich exp(-i theta/2) r exp(i theta/2)."""
    ket = rotor.as_cliffor()
    return (ket.reverse() * r.as_cliffor() * ket).vector_part()


def rotate_cliffor(rotor: Rotor, a: Cliffor) -> Cliffor:
    """Rotate a full cliffor: only the vector-bivector part is affected."""
    ket = rotor.as_cliffor()
    moving = a.grade(1) + a.grade(2)
    rotated = ket.reverse() * moving * ket
    return Cliffor(s=a.s, v=rotated.v, b=rotated.b, p=a.p)


def compose_axis_angle(t1: AxisAngle, t2: AxisAngle) -> AxisAngle:
    """Compose two rotations (t1 applied first) by the Euler-Rodrigues formulas.

    The closed-form cosine/sine equations are evaluated directly -- not by
    multiplying rotors -- and the resulting half-angle pair is canonicalized,
    which resolves the angle-pi sign ambiguity.
    """
    c1 = math.cos(0.5 * t1.angle)
    c2 = math.cos(0.5 * t2.angle)
    # q_k = axis_k sin(angle_k / 2); a degenerate axis contributes nothing
    # because its sine factor is exactly zero.
    q1 = t1.axis * math.sin(0.5 * t1.angle) if not t1.degenerate else Vec3(0, 0, 0)
    q2 = t2.axis * math.sin(0.5 * t2.angle) if not t2.degenerate else Vec3(0, 0, 0)

    cos_half = c1 * c2 - q1.dot(q2)
    sin_vec = q1 * c2 + q2 * c1 - q1.cross(q2)
    return log_rotor(canonicalize(Cliffor(s=cos_half, b=sin_vec.components())))


def flip(eta: Vec3, r: Vec3, tol: float = DEFAULT_TOL) -> Vec3:
    """Flip r by a half-turn about the unit axis eta: eta r eta."""
    if not eta.is_unit(tol):
        raise ValueError(f"flip axis must be a unit vector, |eta|={eta.norm()}")
    e = eta.as_cliffor()
    return (e * r.as_cliffor() * e).vector_part()


def reflect(eta: Vec3, r: Vec3, tol: float = DEFAULT_TOL) -> Vec3:
    """Mirror r in the plane with unit normal eta: -eta r eta."""
    return -flip(eta, r, tol=tol)
