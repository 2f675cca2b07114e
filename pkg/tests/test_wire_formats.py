"""Canonical JSON forms parse and re-serialize byte-stably."""

import json
import math

from cl30 import AxisAngle, Cliffor, Rotor, Vec3, exp_half
from cl30.group_algebra import GroupAlgebraElement
from cl30.matrices import matrix2_from_json, matrix2_to_json


def stable(serialize, parse, payload: str) -> bool:
    return json.dumps(parse(json.loads(payload)), sort_keys=True) == payload


def test_cliffor_json_byte_stable():
    payload = json.dumps(Cliffor(s=1.5, v=(0.0, -2.0, 0.25), p=-1.0).to_json())
    assert stable(None, lambda d: Cliffor.from_json(d).to_json(), payload)


def test_vector_json_byte_stable():
    payload = json.dumps(Vec3(0.5, -1.0, 3.0).to_json())
    assert stable(None, lambda d: Vec3.from_json(d).to_json(), payload)


def test_axis_angle_json_byte_stable():
    payload = json.dumps(AxisAngle(Vec3(0, 0, 1), math.pi / 2).to_json(), sort_keys=True)
    assert stable(None, lambda d: AxisAngle.from_json(d).to_json(), payload)


def test_rotor_json_byte_stable():
    payload = json.dumps(exp_half(Vec3(0, 0, math.pi / 2)).to_json())
    assert stable(None, lambda d: Rotor.from_json(d).to_json(), payload)


def test_group_algebra_json_byte_stable():
    payload = json.dumps(
        GroupAlgebraElement.from_dict({"Id": 0.5, "Rcw": -0.25}).to_json(),
        sort_keys=True,
    )
    assert stable(None, lambda d: GroupAlgebraElement.from_json(d).to_json(), payload)


def test_matrix_json_byte_stable():
    payload = json.dumps(matrix2_to_json(matrix2_from_json([[1, [0, -1]], [[0, 1], 1]])))
    assert stable(None, lambda d: matrix2_to_json(matrix2_from_json(d)), payload)
