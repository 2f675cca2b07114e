import math

import pytest

from cl30 import Cliffor, Vec3, E1, E2, E3
from cl30.chains import KetChainExpr, KetStep, MixedChainError, ScaleStep, eval_chain
from cl30.dihedral import element
from cl30.parsing import (
    MalformedInputError,
    parse_angle,
    parse_ket,
    parse_rotation_vector,
    parse_scale,
    parse_step,
    parse_vector,
    resolve_element,
)

from conftest import rand_rotor, rand_vector


# -- evaluation ---------------------------------------------------------------


def test_empty_chain_returns_operand():
    expr = KetChainExpr.from_vector(E1, ())
    assert eval_chain(expr) == E1.as_cliffor()


def test_single_ket_rotates():
    expr = KetChainExpr.from_vector(E1, (KetStep(element("Rccw").rotor),))
    assert eval_chain(expr).vector_part().approx_eq(E2, 1e-15)


def test_scale_then_ket():
    # e1 scaled by e2 gives the bivector i e3; the flip about e1 then
    # conjugates it to -i e3.
    expr = KetChainExpr.from_vector(
        E1, (ScaleStep(E2.as_cliffor()), KetStep(element("F1").rotor))
    )
    result = eval_chain(expr)
    assert result.approx_eq(Cliffor.bivector(0, 0, -1), 1e-12)


def test_chain_folds_left_to_right(rng):
    # applying two kets one after the other equals the single ket of the
    # rotor product with the left factor first
    from cl30.rotors import rotor_product

    for _ in range(50):
        r1, r2 = rand_rotor(rng), rand_rotor(rng)
        r = rand_vector(rng)
        chained = eval_chain(
            KetChainExpr.from_vector(r, (KetStep(r1), KetStep(r2)))
        )
        combined = eval_chain(
            KetChainExpr.from_vector(r, (KetStep(rotor_product(r1, r2)),))
        )
        assert chained.approx_eq(combined, 1e-12)


def test_ket_step_acts_on_accumulated_cliffor(rng):
    # a ket conjugates the whole accumulated value, complex part untouched
    rotor = rand_rotor(rng)
    operand = Cliffor(s=2.0, v=(1, 0, 0), b=(0, 1, 0), p=-3.0)
    result = eval_chain(KetChainExpr(operand, (KetStep(rotor),)))
    assert result.s == 2.0 and result.p == -3.0


def test_scale_multiplies_on_the_right():
    # (e1)|Rccw> e1 = e2 * e1 = -i e3
    expr = KetChainExpr.from_vector(
        E1, (KetStep(element("Rccw").rotor), ScaleStep(E1.as_cliffor()))
    )
    assert eval_chain(expr).approx_eq(Cliffor.bivector(0, 0, -1), 1e-12)


# -- parsing ------------------------------------------------------------------


def test_parse_angle_accepts_pi_forms():
    assert parse_angle("pi") == math.pi
    assert parse_angle("pi/2") == math.pi / 2
    assert parse_angle("3pi/4") == 3 * math.pi / 4
    assert parse_angle("-pi/2") == -math.pi / 2
    assert parse_angle("0.5pi") == 0.5 * math.pi
    assert parse_angle("1.25") == 1.25


def test_parse_angle_rejects_garbage():
    with pytest.raises(MalformedInputError):
        parse_angle("tau/2")


def test_parse_vector_names_and_triples():
    assert parse_vector("e1") == E1
    assert parse_vector("e1+2").approx_eq(
        Vec3(math.sqrt(0.5), math.sqrt(0.5), 0), 1e-15
    )
    assert parse_vector("1,2,3") == Vec3(1, 2, 3)
    with pytest.raises(MalformedInputError):
        parse_vector("1,2")
    with pytest.raises(MalformedInputError):
        parse_vector("a,b,c")


def test_parse_rotation_vector():
    v = parse_rotation_vector("e3:pi/2")
    assert v.approx_eq(E3 * (math.pi / 2), 1e-15)
    v = parse_rotation_vector("0,0,2:pi")
    assert v.approx_eq(E3 * math.pi, 1e-15)
    with pytest.raises(MalformedInputError):
        parse_rotation_vector("e3")
    with pytest.raises(MalformedInputError):
        parse_rotation_vector("0,0,0:pi")


def test_parse_scale_forms():
    assert parse_scale(2) == Cliffor.scalar(2.0)
    assert parse_scale("e2") == E2.as_cliffor()
    assert parse_scale([1, 2, 3]) == Cliffor.vector(1, 2, 3)
    assert parse_scale([1, 0, 0, 0, 0, 0, 0, 1]) == Cliffor(s=1, p=1)
    with pytest.raises(MalformedInputError):
        parse_scale([1, 2])
    with pytest.raises(MalformedInputError):
        parse_scale("banana")


def test_parse_ket_forms():
    step = parse_ket("Rccw")
    assert step.label == "Rccw"
    step = parse_ket("e3:pi/2")
    assert step.rotor.approx_eq(element("Rccw").rotor, 1e-12)
    step = parse_ket({"axis": [0, 0, 1], "angle": math.pi / 2})
    assert step.rotor.approx_eq(element("Rccw").rotor, 1e-12)


def test_parse_step_shapes():
    assert isinstance(parse_step({"ket": "F1"}), KetStep)
    assert isinstance(parse_step({"scale": 2.0}), ScaleStep)
    with pytest.raises(MalformedInputError):
        parse_step({"ket": "F1", "scale": 1.0})
    with pytest.raises(MalformedInputError):
        parse_step({})


def test_bra_steps_are_rejected_as_mixed_chains():
    with pytest.raises(MixedChainError):
        parse_step({"bra": "Rccw"})
    with pytest.raises(MixedChainError):
        parse_ket("bra:Rccw")


def test_resolve_element_converts_bras_to_inverse_kets():
    assert resolve_element("Rccw").label == "Rccw"
    assert resolve_element("bra:Rccw", allow_bra=True).label == "Rcw"
    assert resolve_element("bra:F1", allow_bra=True).label == "F1"
    with pytest.raises(MixedChainError):
        resolve_element("bra:Rccw", allow_bra=False)


def test_bra_conversion_preserves_the_action(rng):
    # A bra with argument B acts on the left: x -> B x reverse(B).  That
    # must coincide with the action of the converted ket (the inverse
    # element), which is what evaluation actually uses.
    from cl30.dihedral import action_on_vector, bra_to_ket

    for label in ("Id", "F1", "F2", "F3", "Rccw", "Rcw", "F1p2", "F1m2"):
        bra_arg = element(label).rotor.as_cliffor()
        twin = bra_to_ket(label)
        for _ in range(10):
            r = rand_vector(rng)
            left_sandwich = (bra_arg * r.as_cliffor() * bra_arg.reverse()).vector_part()
            assert left_sandwich.approx_eq(action_on_vector(twin, r), 1e-12)
