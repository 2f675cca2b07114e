"""The 2x2 matrix layer built from rotation operators.

Right-acting matrices are linear combinations of the four extraction-
replacement dyadics and act on row vectors (``x' = x M``); left-acting
matrices are obtained from them by transposition, never constructed
independently, and act on column vectors (``x' = M x``).  The two actions
agree: ``M^T . r == r . M``.

The complex 2x2 layer carries the exact correspondence between Cl(3,0) and
Pauli matrices (``1 -> sigma0``, ``e_k -> sigma_k``, pseudoscalar ``-> i``),
used throughout as the ground-truth oracle, plus the classical named bases:
the four single-entry Fermion matrices, Campbell's primary matrices
``I, +, x, J``, and the Pauli matrices themselves, each tied back to the
rotation operator that generates it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import dihedral
from .multivector import DEFAULT_TOL, Cliffor, Vec3
from .group_algebra import GroupAlgebraElement, fermion_dyadic

# -- complex 2x2 constants ---------------------------------------------------

SIGMA0 = np.array([[1, 0], [0, 1]], dtype=complex)
SIGMA1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA3 = np.array([[1, 0], [0, -1]], dtype=complex)
SIGMA = (SIGMA0, SIGMA1, SIGMA2, SIGMA3)

FERMION_MATRICES = {
    (1, 1): np.array([[1, 0], [0, 0]], dtype=complex),
    (1, 2): np.array([[0, 1], [0, 0]], dtype=complex),
    (2, 1): np.array([[0, 0], [1, 0]], dtype=complex),
    (2, 2): np.array([[0, 0], [0, 1]], dtype=complex),
}


def matrix2_allclose(a: np.ndarray, b: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return bool(np.max(np.abs(np.asarray(a) - np.asarray(b))) <= tol)


def matrix2_to_json(m: np.ndarray) -> list[list[list[float]]]:
    m = np.asarray(m, dtype=complex)
    return [[[m[r, c].real, m[r, c].imag] for c in range(2)] for r in range(2)]


def matrix2_from_json(data) -> np.ndarray:
    out = np.zeros((2, 2), dtype=complex)
    if len(data) != 2:
        raise ValueError("matrix must have 2 rows")
    for r, row in enumerate(data):
        if len(row) != 2:
            raise ValueError("matrix must have 2 columns")
        for c, entry in enumerate(row):
            if isinstance(entry, (list, tuple)):
                if len(entry) != 2:
                    raise ValueError("complex entries are [re, im] pairs")
                out[r, c] = complex(float(entry[0]), float(entry[1]))
            else:
                out[r, c] = complex(float(entry), 0.0)
    return out


# -- the Pauli-representation oracle -----------------------------------------


def pauli_rep(a: Cliffor) -> np.ndarray:
    """Algebra isomorphism onto complex 2x2 matrices.

    Sends 1 to sigma0, e_k to sigma_k and the unit volume to i*sigma0, so a
    bivector coefficient b_k lands on i*sigma_k.  Products of cliffors map to
    matrix products, which makes this the independent cross-check for the
    coefficient-level geometric product.
    """
    m = a.s * SIGMA0 + (a.p * 1j) * SIGMA0
    for k in range(3):
        m = m + a.v[k] * SIGMA[k + 1] + (a.b[k] * 1j) * SIGMA[k + 1]
    return m


def _rep_inverse() -> np.ndarray:
    basis = np.zeros((8, 8))
    for j in range(8):
        coeffs = [0.0] * 8
        coeffs[j] = 1.0
        m = pauli_rep(Cliffor.from_coefficients(coeffs))
        basis[:, j] = [
            m[0, 0].real, m[0, 0].imag,
            m[0, 1].real, m[0, 1].imag,
            m[1, 0].real, m[1, 0].imag,
            m[1, 1].real, m[1, 1].imag,
        ]
    return np.linalg.inv(basis)


_REP_INV = _rep_inverse()


def cliffor_from_matrix(m: np.ndarray) -> Cliffor:
    """Invert pauli_rep by solving the 8-real-dimensional correspondence."""
    m = np.asarray(m, dtype=complex)
    vec = np.array([
        m[0, 0].real, m[0, 0].imag,
        m[0, 1].real, m[0, 1].imag,
        m[1, 0].real, m[1, 0].imag,
        m[1, 1].real, m[1, 1].imag,
    ])
    return Cliffor.from_coefficients(_REP_INV @ vec)


def decompose_fermion(m: np.ndarray) -> np.ndarray:
    """Coefficients c_munu with m = sum c_munu * fermion(mu, nu).

    The Fermion matrices are the single-entry basis, so the coefficient of
    fermion(mu, nu) is exactly entry (mu, nu).
    """
    return np.array(np.asarray(m, dtype=complex), copy=True)


def fermion_matrix(mu: int, nu: int) -> np.ndarray:
    try:
        return FERMION_MATRICES[(mu, nu)].copy()
    except KeyError:
        raise ValueError(f"fermion indices must be 1 or 2, got ({mu}, {nu})") from None


# -- real 2x2 operators on the plane ------------------------------------------


class NonPlanarVectorError(ValueError):
    """Raised when a matrix action receives a vector with an e3 component."""


def _check_planar(r: Vec3, tol: float = 1e-12) -> None:
    if abs(r.x3) > tol:
        raise NonPlanarVectorError(
            f"matrix actions are defined on the e1-e2 plane; got x3={r.x3}"
        )


def _rows2x2(m) -> tuple[tuple[float, float], tuple[float, float]]:
    rows = tuple(tuple(float(x) for x in row) for row in m)
    if len(rows) != 2 or any(len(row) != 2 for row in rows):
        raise ValueError("expected a 2x2 array of reals")
    return rows


@dataclass(frozen=True)
class RightActingMatrix:
    """Coefficients M_munu on the dyadic basis; acts on row vectors."""

    m: tuple[tuple[float, float], tuple[float, float]]

    def __post_init__(self):
        object.__setattr__(self, "m", _rows2x2(self.m))

    @classmethod
    def identity(cls) -> "RightActingMatrix":
        return cls(((1.0, 0.0), (0.0, 1.0)))

    def entry(self, mu: int, nu: int) -> float:
        return self.m[mu - 1][nu - 1]

    def apply(self, r: Vec3) -> Vec3:
        """Right action on a planar vector: x_nu' = sum_mu x_mu M_munu."""
        _check_planar(r)
        (m11, m12), (m21, m22) = self.m
        return Vec3(r.x1 * m11 + r.x2 * m21, r.x1 * m12 + r.x2 * m22, 0.0)

    def multiply(self, other: "RightActingMatrix") -> "RightActingMatrix":
        (a11, a12), (a21, a22) = self.m
        (b11, b12), (b21, b22) = other.m
        return RightActingMatrix((
            (a11 * b11 + a12 * b21, a11 * b12 + a12 * b22),
            (a21 * b11 + a22 * b21, a21 * b12 + a22 * b22),
        ))

    __matmul__ = multiply

    def transpose(self) -> "LeftActingMatrix":
        """The left-acting twin: M^T . r == r . M, and (MN)^T == N^T M^T."""
        (m11, m12), (m21, m22) = self.m
        return LeftActingMatrix(((m11, m21), (m12, m22)))

    def group_algebra_form(self) -> GroupAlgebraElement:
        """The operator sum_munu M_munu * dyadic(mu, nu)."""
        out = GroupAlgebraElement.zero()
        for mu in (1, 2):
            for nu in (1, 2):
                out = out + self.entry(mu, nu) * fermion_dyadic(mu, nu)
        return out

    @classmethod
    def from_group_algebra(
        cls, a: GroupAlgebraElement, tol: float = DEFAULT_TOL
    ) -> "RightActingMatrix":
        """Extract dyadic-basis coefficients from an operator sum.

        The dyadic span is only closed under convolution modulo the two
        full-space annihilator quads (identity+flips and the quarter/diagonal
        quad), so those components are projected out; anything else left over
        means the operator is not a planar matrix and is rejected.
        """
        alpha = a["F3"]
        beta = a["F1m2"]
        m11 = 2.0 * (a["F1"] - alpha)
        m22 = 2.0 * (a["F2"] - alpha)
        m12 = 2.0 * (a["Rccw"] - beta)
        m21 = 2.0 * (a["Rcw"] - beta)
        scale = max(1.0, max(abs(c) for c in a.coeff))
        residues = (
            a["Id"] - a["F1"] - a["F2"] + alpha,
            a["F1p2"] - a["Rccw"] - a["Rcw"] + beta,
        )
        if any(abs(res) > tol * scale for res in residues):
            raise ValueError(
                "operator is not a planar matrix: residues "
                f"{tuple(float(r) for r in residues)}"
            )
        return cls(((m11, m12), (m21, m22)))

    def as_array(self) -> np.ndarray:
        return np.array(self.m, dtype=float)

    def to_json(self) -> list[list[float]]:
        return [list(row) for row in self.m]


@dataclass(frozen=True)
class LeftActingMatrix:
    """Transpose twin of a right-acting matrix; acts on column vectors."""

    m: tuple[tuple[float, float], tuple[float, float]]

    def __post_init__(self):
        object.__setattr__(self, "m", _rows2x2(self.m))

    def apply(self, r: Vec3) -> Vec3:
        _check_planar(r)
        (m11, m12), (m21, m22) = self.m
        return Vec3(m11 * r.x1 + m12 * r.x2, m21 * r.x1 + m22 * r.x2, 0.0)

    def multiply(self, other: "LeftActingMatrix") -> "LeftActingMatrix":
        (a11, a12), (a21, a22) = self.m
        (b11, b12), (b21, b22) = other.m
        return LeftActingMatrix((
            (a11 * b11 + a12 * b21, a11 * b12 + a12 * b22),
            (a21 * b11 + a22 * b21, a21 * b12 + a22 * b22),
        ))

    __matmul__ = multiply

    def transpose(self) -> RightActingMatrix:
        (m11, m12), (m21, m22) = self.m
        return RightActingMatrix(((m11, m21), (m12, m22)))

    def as_array(self) -> np.ndarray:
        return np.array(self.m, dtype=float)

    def as_complex(self) -> np.ndarray:
        return np.array(self.m, dtype=complex)

    def to_json(self) -> list[list[float]]:
        return [list(row) for row in self.m]


def apply_right(r: Vec3, m: RightActingMatrix) -> Vec3:
    return m.apply(r)


def matrix_multiply(m: RightActingMatrix, n: RightActingMatrix) -> RightActingMatrix:
    return m.multiply(n)


def transpose(m: RightActingMatrix) -> LeftActingMatrix:
    return m.transpose()


def _snap_unit(value: float, tol: float = DEFAULT_TOL) -> float:
    snapped = round(value)
    if abs(value - snapped) > tol or snapped not in (-1, 0, 1):
        raise RuntimeError(f"expected an entry in {{0, +-1}}, got {value}")
    return float(snapped)


@lru_cache(maxsize=None)
def d4_matrix_of(label: str) -> RightActingMatrix:
    """Right-acting matrix of a square symmetry, rows read off its action.

    Row mu is the image of e_mu under the element's rotor; entries snap to
    exact 0/+-1 so the eight matrices form an exact representation.
    """
    g = dihedral.element(label)
    rows = []
    for basis in (Vec3(1, 0, 0), Vec3(0, 1, 0)):
        image = dihedral.action_on_vector(g, basis)
        if abs(image.x3) > DEFAULT_TOL:
            raise RuntimeError(f"{label} does not preserve the plane")
        rows.append((_snap_unit(image.x1), _snap_unit(image.x2)))
    return RightActingMatrix(tuple(rows))


def left_matrix_of_ket(label: str) -> LeftActingMatrix:
    return d4_matrix_of(label).transpose()


# -- named operator constructions ---------------------------------------------


@dataclass(frozen=True)
class OperatorMatrix:
    """A named 2x2 matrix together with the rotation operator behind it.

    ``ket_label`` names the right-acting operator whose left-acting
    (transposed) form the matrix is; ``bra_label`` is the same operator in
    bra form, which carries the inverse exponential.  ``pseudoscalar_factor``
    marks an extra overall factor of the unit volume i.
    """

    name: str
    matrix: np.ndarray
    ket_label: str
    bra_label: str
    pseudoscalar_factor: bool = False
    negative_partner: str | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "matrix": matrix2_to_json(self.matrix),
            "ket": self.ket_label,
            "bra": self.bra_label,
            "pseudoscalar_factor": self.pseudoscalar_factor,
            "negative_partner": self.negative_partner,
            "note": self.note,
        }


def _bra_label(ket_label: str) -> str:
    return dihedral.inverse(dihedral.element(ket_label)).label


def campbell_matrices() -> tuple[OperatorMatrix, ...]:
    """Campbell's primary matrices I, +, x, J as left-acting operators.

    Each is the left form of one square symmetry; its ``negative_partner``
    names the operator whose left form is its negative *on the plane* -- the
    pairing only holds for planar operands.
    """
    def build(name, ket_label, partner, note):
        return OperatorMatrix(
            name=name,
            matrix=left_matrix_of_ket(ket_label).as_complex(),
            ket_label=ket_label,
            bra_label=_bra_label(ket_label),
            negative_partner=partner,
            note=note,
        )

    return (
        build("I", "Id", "F3", "identity"),
        build("+", "F1", "F2", "flip about e1"),
        build("x", "F1p2", "F1m2", "flip about the diagonal e1+e2"),
        build("J", "Rcw", "Rccw", "quarter turn cw about e3"),
    )


def pauli_matrices() -> tuple[OperatorMatrix, ...]:
    """The Pauli matrices as rotation operators.

    sigma0, sigma1 and sigma3 are the left-acting forms of the identity, the
    diagonal flip and the e1 flip.  sigma2 alone needs an extra factor of the
    unit volume i on top of a quarter turn about e3; the turn direction is
    chosen as whichever of the two quarter rotations reproduces the standard
    matrix under the left-equals-transpose convention.
    """
    sigma2_ket = None
    for candidate in ("Rccw", "Rcw"):
        m = 1j * left_matrix_of_ket(candidate).as_complex()
        if matrix2_allclose(m, SIGMA2, 0.0):
            sigma2_ket = candidate
            break
    if sigma2_ket is None:
        raise RuntimeError("no quarter rotation reproduces sigma2")

    def build(name, ket_label, pseudo, note):
        m = left_matrix_of_ket(ket_label).as_complex()
        if pseudo:
            m = 1j * m
        return OperatorMatrix(
            name=name,
            matrix=m,
            ket_label=ket_label,
            bra_label=_bra_label(ket_label),
            pseudoscalar_factor=pseudo,
            note=note,
        )

    return (
        build("sigma0", "Id", False, "identity rotation"),
        build("sigma1", "F1p2", False, "flip (rotation by pi) about e1+e2"),
        build(
            "sigma2",
            sigma2_ket,
            True,
            "quarter rotation about e3 scaled by the unit volume i",
        ),
        build("sigma3", "F1", False, "flip (rotation by pi) about e1"),
    )


def quarter_turn_pair_note() -> str:
    """Documentation string for the quarter-turn bra/matrix convention."""
    return (
        "Left-acting matrices are defined as transposes of right-acting ones, "
        "and a bra label carries the inverse exponential of its ket. Under "
        "this convention J = [[0,1],[-1,0]] is the left form of the clockwise "
        "quarter turn (bra label: counterclockwise). Conventions that instead "
        "attach J to the clockwise bra label differ from this one by a sign "
        "on the quarter-turn pair; the two assignments cannot both hold, and "
        "this library keeps the self-consistent transpose convention."
    )
