"""Command-line client for the algebra service.

Every subcommand builds the same request model the HTTP endpoint consumes
and renders the same response model; by default the handler runs in-process,
with ``--url`` the request is sent to a running server instead.  Exit status
is 0 on success, 1 when ``verify`` finds a failing identity, and 2 on bad
input (with a category-tagged diagnostic on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .chains import MixedChainError
from .dihedral import UnknownElementError
from .matrices import NonPlanarVectorError
from .multivector import NonInvertibleError
from .parsing import MalformedInputError, parse_rotation_vector, parse_vector
from .service import handlers, models

_ERROR_CODES = (
    (UnknownElementError, "unknown-element"),
    (MixedChainError, "mixed-chain"),
    (NonPlanarVectorError, "non-planar-vector"),
    (NonInvertibleError, "non-invertible"),
    (MalformedInputError, "malformed-input"),
    (json.JSONDecodeError, "malformed-json"),
)


class CliError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def _classify(exc: Exception) -> CliError:
    for exc_type, code in _ERROR_CODES:
        if isinstance(exc, exc_type):
            return CliError(code, str(exc))
    return CliError("invalid-value", str(exc))


def _fmt_floats(values) -> str:
    return " ".join(f"{v:.12g}" for v in values)


def _theta_model(text: str) -> models.AxisAngleModel:
    vec = parse_rotation_vector(text)
    angle = vec.norm()
    axis = vec.normalized().to_json() if angle > 0 else [0.0, 0.0, 1.0]
    return models.AxisAngleModel(axis=axis, angle=angle)


def _parse_json_flag(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError("malformed-json", f"{what} is not valid JSON: {exc}") from exc


# -- remote transport ---------------------------------------------------------


def _remote(url: str, method: str, path: str, payload=None):
    import httpx

    full = url.rstrip("/") + path
    response = (
        httpx.get(full, timeout=30.0)
        if method == "GET"
        else httpx.post(full, json=payload, timeout=30.0)
    )
    body = response.json()
    if response.status_code != 200:
        if isinstance(body, dict) and "error" in body:
            raise CliError(body["error"], body.get("message", ""))
        raise CliError("remote-error", f"HTTP {response.status_code}: {body}")
    return body


def _run(args, method: str, path: str, request_model, handler, response_cls):
    if args.url:
        payload = request_model.model_dump() if request_model is not None else None
        return response_cls.model_validate(_remote(args.url, method, path, payload))
    return handler() if request_model is None else handler(request_model)


# -- subcommands --------------------------------------------------------------


def _cmd_table(args) -> int:
    resp = _run(args, "GET", "/table", None, handlers.handle_table, models.TableResponse)
    if args.format == "json":
        print(json.dumps({"order": resp.order, "table": resp.table}))
    else:
        print(resp.text)
    return 0


def _cmd_compose(args) -> int:
    req = models.ComposeRequest(
        theta1=_theta_model(args.theta1), theta2=_theta_model(args.theta2)
    )
    resp = _run(args, "POST", "/compose", req, handlers.handle_compose, models.ComposeResponse)
    if args.format == "json":
        print(resp.model_dump_json())
    else:
        print(f"axis: {_fmt_floats(resp.axis)}")
        print(f"angle: {resp.angle:.12g}")
        if resp.degenerate:
            print("degenerate: identity rotation (default axis reported)")
        print(f"rotor: {_fmt_floats(resp.rotor)}")
    return 0


def _cmd_rotate(args) -> int:
    req = models.RotateRequest(
        theta=_theta_model(args.theta), vector=parse_vector(args.vector).to_json()
    )
    resp = _run(args, "POST", "/rotate", req, handlers.handle_rotate, models.VectorResponse)
    if args.format == "json":
        print(resp.model_dump_json())
    else:
        print(f"vector: {_fmt_floats(resp.vector)}")
    return 0


def _cmd_apply(args) -> int:
    req = models.ApplyRequest(
        element=args.element, vector=parse_vector(args.vector).to_json()
    )
    resp = _run(args, "POST", "/apply", req, handlers.handle_apply, models.ApplyResponse)
    if args.format == "json":
        print(resp.model_dump_json())
    else:
        print(f"element: {resp.element}")
        print(f"vector: {_fmt_floats(resp.vector)}")
    return 0


def _cmd_decompose(args) -> int:
    matrix = _parse_json_flag(args.matrix, "--matrix")
    try:
        req = models.DecomposeRequest(matrix=matrix)
    except ValidationError as exc:
        raise CliError("malformed-input", f"--matrix must be a 2x2 array: {exc}") from exc
    resp = _run(
        args, "POST", "/decompose", req, handlers.handle_decompose, models.DecomposeResponse
    )
    if args.format == "json":
        print(resp.model_dump_json())
    else:
        for name, (re_part, im_part) in resp.fermion.items():
            print(f"{name}: {re_part:.12g}{im_part:+.12g}i")
        print(f"cliffor: {_fmt_floats(resp.cliffor)}")
    return 0


def _cmd_pauli(args) -> int:
    resp = _run(args, "GET", "/pauli", None, handlers.handle_pauli, models.PauliResponse)
    if args.format == "json":
        print(resp.model_dump_json())
        return 0

    def render(entry: models.OperatorMatrixModel):
        rows = [
            " ".join(_fmt_complex(re_im) for re_im in row) for row in entry.matrix
        ]
        factor = " (x unit volume i)" if entry.pseudoscalar_factor else ""
        print(f"{entry.name}: ket {entry.ket}, bra {entry.bra}{factor}")
        for row in rows:
            print(f"    [{row}]")
        if entry.negative_partner:
            print(f"    negative on the plane: {entry.negative_partner}")
        print(f"    {entry.note}")

    print("Pauli matrices as rotation operators:")
    for entry in resp.pauli:
        render(entry)
    print("Campbell primary matrices:")
    for entry in resp.campbell:
        render(entry)
    print(resp.convention)
    return 0


def _fmt_complex(re_im) -> str:
    re_part, im_part = re_im
    if im_part == 0:
        return f"{re_part:.12g}"
    if re_part == 0:
        return f"{im_part:.12g}i"
    return f"{re_part:.12g}{im_part:+.12g}i"


def _cmd_chain(args) -> int:
    steps = _parse_json_flag(args.steps, "--steps") if args.steps else []
    if not isinstance(steps, list):
        raise CliError("malformed-input", "--steps must be a JSON array of steps")
    body: dict = {"steps": steps}
    if args.cliffor:
        body["cliffor"] = _parse_json_flag(args.cliffor, "--cliffor")
    else:
        body["vector"] = parse_vector(args.vector).to_json()
    try:
        req = models.ChainRequest.model_validate(body)
    except ValidationError as exc:
        raise CliError("malformed-input", str(exc)) from exc
    resp = _run(args, "POST", "/chain", req, handlers.handle_chain, models.ChainResponse)
    if args.format == "json":
        print(resp.model_dump_json())
    else:
        print(f"cliffor: {_fmt_floats(resp.cliffor)}")
        if resp.vector is not None:
            print(f"vector: {_fmt_floats(resp.vector)}")
    return 0


def _cmd_verify(args) -> int:
    req = models.VerifyRequest(seed=args.seed)
    resp = _run(args, "POST", "/verify", req, handlers.handle_verify, models.VerifyResponse)
    if args.format == "json":
        print(resp.model_dump_json())
    else:
        for check in resp.checks:
            status = "PASS" if check.passed else "FAIL"
            print(f"[{status}] {check.name} - {check.detail}")
        print(f"{resp.passed}/{resp.total} identities hold")
    return 0 if resp.ok else 1


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cl30",
        description=(
            "Geometric-algebra rotors, the symmetry group of the square, and "
            "2x2 matrices built from rotation operators."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--url", default=None, help="send the request to a running cl30 service"
    )

    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("table", parents=[common], help="8x8 multiplication table").set_defaults(
        fn=_cmd_table
    )

    p = sub.add_parser("compose", parents=[common], help="compose two rotations")
    p.add_argument("--theta1", required=True, help="first rotation, '<axis>:<angle>'")
    p.add_argument("--theta2", required=True, help="second rotation, '<axis>:<angle>'")
    p.set_defaults(fn=_cmd_compose)

    p = sub.add_parser("rotate", parents=[common], help="rotate a vector")
    p.add_argument("--theta", required=True, help="rotation, '<axis>:<angle>'")
    p.add_argument("--vector", required=True, help="axis name or 'x1,x2,x3'")
    p.set_defaults(fn=_cmd_rotate)

    p = sub.add_parser("apply", parents=[common], help="apply a square symmetry")
    p.add_argument(
        "--element",
        required=True,
        help="element label (Id, F1, F2, F3, Rccw, Rcw, F1p2, F1m2) or 'bra:<label>'",
    )
    p.add_argument("--vector", required=True, help="axis name or 'x1,x2,x3'")
    p.set_defaults(fn=_cmd_apply)

    p = sub.add_parser("decompose", parents=[common], help="decompose a 2x2 matrix")
    p.add_argument(
        "--matrix",
        required=True,
        help='2x2 JSON matrix; entries are numbers or [re, im], e.g. "[[1,0],[0,1]]"',
    )
    p.set_defaults(fn=_cmd_decompose)

    sub.add_parser(
        "pauli", parents=[common], help="Pauli and Campbell matrices as operators"
    ).set_defaults(fn=_cmd_pauli)

    p = sub.add_parser("chain", parents=[common], help="evaluate a ket chain")
    p.add_argument("--vector", help="operand vector: axis name or 'x1,x2,x3'")
    p.add_argument("--cliffor", help="operand cliffor: JSON array of 8 coefficients")
    p.add_argument(
        "--steps",
        help=(
            "JSON array of steps; each step is "
            '{"ket": "<label or axis:angle>"} or {"scale": <number|vector|cliffor>}'
        ),
    )
    p.set_defaults(fn=_cmd_chain)

    p = sub.add_parser("verify", parents=[common], help="run the identity suite")
    p.add_argument("--seed", type=int, default=0, help="RNG seed for sampled checks")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(fn=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "chain" and bool(args.vector) == bool(args.cliffor):
        print(
            "error[malformed-input]: provide exactly one of --vector or --cliffor",
            file=sys.stderr,
        )
        return 2
    try:
        return args.fn(args)
    except CliError as err:
        print(f"error[{err.code}]: {err}", file=sys.stderr)
        return 2
    except (ValueError, ValidationError) as exc:
        err = _classify(exc)
        print(f"error[{err.code}]: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
