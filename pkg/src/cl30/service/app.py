"""HTTP service exposing the algebra; run with ``cl30 serve`` or
``uvicorn cl30.service.app:app``."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..chains import MixedChainError
from ..dihedral import UnknownElementError
from ..matrices import NonPlanarVectorError
from ..multivector import NonInvertibleError
from ..parsing import MalformedInputError
from . import handlers, models

app = FastAPI(
    title="cl30",
    description=(
        "Cl(3,0) rotor algebra: square-symmetry group table, rotation "
        "composition, ket chains, and 2x2 matrix decompositions."
    ),
)

_ERROR_CODES = (
    (UnknownElementError, "unknown-element"),
    (MixedChainError, "mixed-chain"),
    (NonPlanarVectorError, "non-planar-vector"),
    (NonInvertibleError, "non-invertible"),
    (MalformedInputError, "malformed-input"),
)


def _error_code(exc: Exception) -> str:
    for exc_type, code in _ERROR_CODES:
        if isinstance(exc, exc_type):
            return code
    return "invalid-value"


@app.exception_handler(ValueError)
async def _value_error_handler(request: Request, exc: ValueError):
    return JSONResponse(
        status_code=422,
        content=models.ErrorResponse(error=_error_code(exc), message=str(exc)).model_dump(),
    )


@app.get("/", include_in_schema=False)
def root():
    return {
        "service": "cl30",
        "endpoints": [
            "/table",
            "/compose",
            "/rotate",
            "/apply",
            "/decompose",
            "/pauli",
            "/chain",
            "/verify",
        ],
    }


@app.get("/table", response_model=models.TableResponse)
def table():
    return handlers.handle_table()


@app.post("/compose", response_model=models.ComposeResponse)
def compose(req: models.ComposeRequest):
    return handlers.handle_compose(req)


@app.post("/rotate", response_model=models.VectorResponse)
def rotate(req: models.RotateRequest):
    return handlers.handle_rotate(req)


@app.post("/apply", response_model=models.ApplyResponse)
def apply(req: models.ApplyRequest):
    return handlers.handle_apply(req)


@app.post("/decompose", response_model=models.DecomposeResponse)
def decompose(req: models.DecomposeRequest):
    return handlers.handle_decompose(req)


@app.get("/pauli", response_model=models.PauliResponse)
def pauli():
    return handlers.handle_pauli()


@app.post("/chain", response_model=models.ChainResponse)
def chain(req: models.ChainRequest):
    return handlers.handle_chain(req)


@app.post("/verify", response_model=models.VerifyResponse)
def run_verify(req: models.VerifyRequest):
    return handlers.handle_verify(req)
