"""The single evaluation pathway behind both the HTTP routes and the CLI.

Every handler maps a request model to a response model using the core
library; domain errors propagate as the library's exception types and are
translated to transport-specific diagnostics by the callers.
"""

from __future__ import annotations

import os

from .. import dihedral, verify
from ..chains import KetChainExpr, eval_chain
from ..matrices import (
    campbell_matrices,
    cliffor_from_matrix,
    decompose_fermion,
    matrix2_from_json,
    pauli_matrices,
    quarter_turn_pair_note,
)
from ..multivector import DEFAULT_TOL, Cliffor, Vec3
from ..parsing import parse_step, resolve_element
from ..rotors import AxisAngle, compose_axis_angle, exp_half, rotate_vector
from . import models


def matching_tolerance() -> float:
    """The rotor-matching tolerance, overridable through CL30_TOL."""
    raw = os.environ.get("CL30_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"CL30_TOL must be a number, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"CL30_TOL must be positive, got {value}")
    return value


def _rotation_vector(theta: models.AxisAngleModel) -> Vec3:
    axis = Vec3.from_sequence(theta.axis)
    if axis.norm() == 0.0:
        if abs(theta.angle) <= 1e-12:
            return Vec3(0.0, 0.0, 0.0)
        raise ValueError("rotation axis must be nonzero")
    return axis.normalized() * float(theta.angle)


def handle_table(tol: float | None = None) -> models.TableResponse:
    tol = matching_tolerance() if tol is None else tol
    return models.TableResponse(
        order=list(dihedral.LABELS),
        table=dihedral.table_labels(tol),
        text=dihedral.table_text(tol),
    )


def handle_compose(req: models.ComposeRequest) -> models.ComposeResponse:
    t1 = AxisAngle.from_vector(_rotation_vector(req.theta1))
    t2 = AxisAngle.from_vector(_rotation_vector(req.theta2))
    composed = compose_axis_angle(t1, t2)
    return models.ComposeResponse(
        axis=composed.axis.to_json(),
        angle=composed.angle,
        degenerate=composed.degenerate,
        rotor=exp_half(composed.to_vector()).to_json(),
    )


def handle_rotate(req: models.RotateRequest) -> models.VectorResponse:
    rotor = exp_half(_rotation_vector(req.theta))
    image = rotate_vector(rotor, Vec3.from_sequence(req.vector))
    return models.VectorResponse(vector=image.to_json())


def handle_apply(req: models.ApplyRequest) -> models.ApplyResponse:
    element = resolve_element(req.element, allow_bra=True)
    image = dihedral.action_on_vector(element, Vec3.from_sequence(req.vector))
    return models.ApplyResponse(element=element.label, vector=image.to_json())


def handle_decompose(req: models.DecomposeRequest) -> models.DecomposeResponse:
    matrix = matrix2_from_json(req.matrix)
    coeffs = decompose_fermion(matrix)
    fermion = {
        f"c{mu}{nu}": [coeffs[mu - 1, nu - 1].real, coeffs[mu - 1, nu - 1].imag]
        for mu in (1, 2)
        for nu in (1, 2)
    }
    return models.DecomposeResponse(
        fermion=fermion, cliffor=cliffor_from_matrix(matrix).to_json()
    )


def handle_pauli() -> models.PauliResponse:
    return models.PauliResponse(
        pauli=[models.OperatorMatrixModel(**op.to_json()) for op in pauli_matrices()],
        campbell=[
            models.OperatorMatrixModel(**op.to_json()) for op in campbell_matrices()
        ],
        convention=quarter_turn_pair_note(),
    )


def handle_chain(req: models.ChainRequest) -> models.ChainResponse:
    if req.vector is not None:
        operand = Vec3.from_sequence(req.vector).as_cliffor()
    else:
        operand = Cliffor.from_coefficients(req.cliffor)
    steps = tuple(
        parse_step(step.model_dump(exclude_none=True)) for step in req.steps
    )
    result = eval_chain(KetChainExpr(operand, steps))
    response = models.ChainResponse(cliffor=result.to_json())
    if max(abs(c) for c in (result.s, *result.b, result.p)) <= 1e-12:
        response.vector = result.vector_part().to_json()
    return response


def handle_verify(req: models.VerifyRequest) -> models.VerifyResponse:
    tol = req.tol if req.tol is not None else matching_tolerance()
    results = verify.run_checks(seed=req.seed, tol=tol)
    passed = sum(1 for r in results if r.passed)
    return models.VerifyResponse(
        ok=passed == len(results),
        passed=passed,
        total=len(results),
        checks=[models.CheckModel(**r.to_json()) for r in results],
    )
