import math
import random

import pytest

from cl30 import AxisAngle, Cliffor, Vec3, exp_half


@pytest.fixture
def rng():
    return random.Random(20240613)


def rand_vector(rng, scale=1.0):
    return Vec3(*(rng.uniform(-scale, scale) for _ in range(3)))


def rand_unit(rng):
    while True:
        v = Vec3(*(rng.gauss(0.0, 1.0) for _ in range(3)))
        if v.norm() > 1e-6:
            return v.normalized()


def rand_cliffor(rng):
    return Cliffor.from_coefficients([rng.uniform(-1, 1) for _ in range(8)])


def rand_axis_angle(rng, lo=1e-6, hi=math.pi):
    return AxisAngle(axis=rand_unit(rng), angle=rng.uniform(lo, hi))


def rand_rotor(rng):
    return exp_half(rand_axis_angle(rng).to_vector())
