import numpy as np
import pytest

from cl30 import Cliffor, Vec3, E1, E2, E3
from cl30.dihedral import ELEMENTS, LABELS, action_on_vector, element, multiply
from cl30.group_algebra import GroupAlgebraElement, fermion_dyadic, ga_apply, ga_multiply
from cl30.matrices import (
    NonPlanarVectorError,
    RightActingMatrix,
    SIGMA,
    apply_right,
    campbell_matrices,
    cliffor_from_matrix,
    d4_matrix_of,
    decompose_fermion,
    fermion_matrix,
    left_matrix_of_ket,
    matrix2_allclose,
    matrix2_from_json,
    matrix2_to_json,
    matrix_multiply,
    pauli_matrices,
    pauli_rep,
    transpose,
)

from conftest import rand_cliffor
from reference_data import CAMPBELL, D4_MATRICES, FERMION, PAULI


def rand_matrix(rng):
    return RightActingMatrix(
        tuple(tuple(rng.uniform(-1, 1) for _ in range(2)) for _ in range(2))
    )


def rand_planar(rng):
    return Vec3(rng.uniform(-1, 1), rng.uniform(-1, 1), 0.0)


# -- right action ---------------------------------------------------------------


def test_swap_matrix_exchanges_components(rng):
    swap = RightActingMatrix(((0, 1), (1, 0)))
    for _ in range(20):
        r = rand_planar(rng)
        assert swap.apply(r) == Vec3(r.x2, r.x1, 0.0)


def test_identity_matrix_action(rng):
    ident = RightActingMatrix.identity()
    r = rand_planar(rng)
    assert ident.apply(r) == Vec3(r.x1, r.x2, 0.0)


def test_right_action_example_rows_times_columns():
    m = RightActingMatrix(((1, 2), (3, 4)))
    # row-vector times matrix: (1,1) @ [[1,2],[3,4]] = (1+3, 2+4)
    assert apply_right(Vec3(1, 1, 0), m) == Vec3(4, 6, 0)


def test_right_action_rejects_non_planar():
    m = RightActingMatrix.identity()
    with pytest.raises(NonPlanarVectorError):
        m.apply(Vec3(1, 0, 0.5))


def test_action_consistency_three_routes(rng):
    for _ in range(100):
        m = rand_matrix(rng)
        r = rand_planar(rng)
        direct = m.apply(r)
        via_operators = ga_apply(m.group_algebra_form(), r)
        expected = np.array(r.components()[:2]) @ m.as_array()
        assert max(
            abs(a - b) for a, b in zip(direct.components(), via_operators.components())
        ) <= 1e-12
        assert abs(direct.x1 - expected[0]) <= 1e-12
        assert abs(direct.x2 - expected[1]) <= 1e-12


# -- products -------------------------------------------------------------------


def test_matrix_multiply_example():
    a = RightActingMatrix(((1, 2), (3, 4)))
    b = RightActingMatrix(((5, 6), (7, 8)))
    product = matrix_multiply(a, b)
    # entrywise oracle: [[1*5+2*7, 1*6+2*8], [3*5+4*7, 3*6+4*8]]
    assert product.m == ((19.0, 22.0), (43.0, 50.0))


def test_matrix_multiply_identity(rng):
    m = rand_matrix(rng)
    assert matrix_multiply(m, RightActingMatrix.identity()).m == m.m
    assert matrix_multiply(RightActingMatrix.identity(), m).m == m.m


def test_matrix_multiply_matches_entrywise_formulas_exactly(rng):
    for _ in range(100):
        a, b = rand_matrix(rng), rand_matrix(rng)
        product = matrix_multiply(a, b)
        (a11, a12), (a21, a22) = a.m
        (b11, b12), (b21, b22) = b.m
        assert product.m == (
            (a11 * b11 + a12 * b21, a11 * b12 + a12 * b22),
            (a21 * b11 + a22 * b21, a21 * b12 + a22 * b22),
        )


def test_matrix_multiply_agrees_with_operator_convolution(rng):
    for _ in range(100):
        a, b = rand_matrix(rng), rand_matrix(rng)
        via_matrix = matrix_multiply(a, b)
        via_operators = RightActingMatrix.from_group_algebra(
            ga_multiply(a.group_algebra_form(), b.group_algebra_form())
        )
        assert float(
            np.max(np.abs(via_matrix.as_array() - via_operators.as_array()))
        ) <= 1e-12


def test_group_algebra_form_is_exact_dyadic_combination(rng):
    for _ in range(20):
        m = rand_matrix(rng)
        expected = GroupAlgebraElement.zero()
        for mu in (1, 2):
            for nu in (1, 2):
                expected = expected + m.entry(mu, nu) * fermion_dyadic(mu, nu)
        assert m.group_algebra_form() == expected


def test_from_group_algebra_round_trip(rng):
    for _ in range(50):
        m = rand_matrix(rng)
        back = RightActingMatrix.from_group_algebra(m.group_algebra_form())
        assert float(np.max(np.abs(back.as_array() - m.as_array()))) <= 1e-12


def test_from_group_algebra_rejects_non_planar_operators():
    with pytest.raises(ValueError):
        RightActingMatrix.from_group_algebra(GroupAlgebraElement.basis("F1") * 1.0 + GroupAlgebraElement.basis("Id") * 5.0)


# -- transposition ---------------------------------------------------------------


def test_dyadic_transpose_swaps_indices():
    # right-acting single-entry (1,2) becomes left-acting single-entry (2,1)
    right = RightActingMatrix(((0, 1), (0, 0)))
    left = transpose(right)
    assert left.m == ((0.0, 0.0), (1.0, 0.0))


def test_identity_transpose_is_identity():
    assert transpose(RightActingMatrix.identity()).m == ((1.0, 0.0), (0.0, 1.0))


def test_transpose_duality_on_dyadics(rng):
    for mu in (1, 2):
        for nu in (1, 2):
            entries = [[0.0, 0.0], [0.0, 0.0]]
            entries[mu - 1][nu - 1] = 1.0
            right = RightActingMatrix(tuple(tuple(row) for row in entries))
            left = transpose(right)
            for _ in range(10):
                r = rand_planar(rng)
                assert left.apply(r) == right.apply(r)


def test_transpose_duality_random(rng):
    for _ in range(100):
        m = rand_matrix(rng)
        r = rand_planar(rng)
        assert max(
            abs(a - b)
            for a, b in zip(transpose(m).apply(r).components(), m.apply(r).components())
        ) <= 1e-12


def test_transpose_of_product_reverses_factors():
    a = RightActingMatrix(((1, 2), (3, 4)))
    b = RightActingMatrix(((5, 6), (7, 8)))
    lhs = transpose(matrix_multiply(a, b))
    rhs = transpose(b).multiply(transpose(a))
    # oracle for both sides: ((19,43),(22,50))
    assert lhs.m == rhs.m == ((19.0, 43.0), (22.0, 50.0))


def test_transpose_of_product_random_exact(rng):
    for _ in range(100):
        a, b = rand_matrix(rng), rand_matrix(rng)
        assert transpose(matrix_multiply(a, b)).m == transpose(b).multiply(transpose(a)).m


def test_double_transpose_returns_right_acting(rng):
    m = rand_matrix(rng)
    assert transpose(m).transpose().m == m.m


# -- square-symmetry matrices -----------------------------------------------------


def test_d4_matrices_match_reference():
    for label in LABELS:
        assert d4_matrix_of(label).m == tuple(
            tuple(float(x) for x in row) for row in D4_MATRICES[label]
        )


def test_d4_matrix_action_equals_rotor_action(rng):
    for label in LABELS:
        g = element(label)
        for _ in range(25):
            r = rand_planar(rng)
            via_matrix = d4_matrix_of(label).apply(r)
            via_rotor = action_on_vector(g, r)
            assert max(
                abs(a - b)
                for a, b in zip(via_matrix.components(), via_rotor.components())
            ) <= 1e-12


def test_d4_representation_is_exact_homomorphism():
    for g in ELEMENTS:
        for h in ELEMENTS:
            lhs = matrix_multiply(d4_matrix_of(g.label), d4_matrix_of(h.label))
            rhs = d4_matrix_of(multiply(g, h).label)
            assert lhs.m == rhs.m


# -- named constructions ------------------------------------------------------------


def test_campbell_matrices_values():
    ops = {op.name: op for op in campbell_matrices()}
    assert set(ops) == {"I", "+", "x", "J"}
    for name, expected in CAMPBELL.items():
        assert matrix2_allclose(ops[name].matrix, expected, 0.0)


def test_campbell_pairs_are_negatives_on_the_plane(rng):
    for op in campbell_matrices():
        left = left_matrix_of_ket(op.ket_label)
        partner = left_matrix_of_ket(op.negative_partner)
        for _ in range(100):
            r = rand_planar(rng)
            image = left.apply(r)
            mirrored = partner.apply(r)
            assert max(
                abs(a + b) for a, b in zip(image.components(), mirrored.components())
            ) <= 1e-12


def test_campbell_bra_labels_follow_inverse_rule():
    ops = {op.name: op for op in campbell_matrices()}
    assert ops["I"].bra_label == "Id"
    assert ops["+"].bra_label == "F1"
    assert ops["x"].bra_label == "F1p2"
    # the quarter turn is the one pair where bra and ket labels differ
    assert ops["J"].ket_label == "Rcw" and ops["J"].bra_label == "Rccw"


def test_pauli_matrices_reproduce_standard_values():
    ops = pauli_matrices()
    assert [op.name for op in ops] == ["sigma0", "sigma1", "sigma2", "sigma3"]
    for op, expected in zip(ops, PAULI):
        assert matrix2_allclose(op.matrix, expected, 0.0)


def test_pauli_constructions_are_rotation_operators():
    ops = {op.name: op for op in pauli_matrices()}
    assert ops["sigma0"].ket_label == "Id"
    assert ops["sigma1"].ket_label == "F1p2"
    assert ops["sigma3"].ket_label == "F1"
    assert not any(
        ops[name].pseudoscalar_factor for name in ("sigma0", "sigma1", "sigma3")
    )
    # only sigma2 needs the extra unit-volume factor, on a quarter turn
    assert ops["sigma2"].pseudoscalar_factor
    assert ops["sigma2"].ket_label in ("Rccw", "Rcw")
    chosen = left_matrix_of_ket(ops["sigma2"].ket_label).as_complex()
    assert matrix2_allclose(1j * chosen, PAULI[2], 0.0)


def test_pauli_anticommutators_via_oracle():
    for j in range(1, 4):
        for k in range(1, 4):
            anti = SIGMA[j] @ SIGMA[k] + SIGMA[k] @ SIGMA[j]
            expected = (2.0 if j == k else 0.0) * np.eye(2)
            assert matrix2_allclose(anti, expected, 0.0)


# -- the oracle itself ---------------------------------------------------------------


def test_pauli_rep_basis_images():
    assert matrix2_allclose(pauli_rep(E1.as_cliffor()), PAULI[1], 0.0)
    assert matrix2_allclose(pauli_rep(E2.as_cliffor()), PAULI[2], 0.0)
    assert matrix2_allclose(pauli_rep(E3.as_cliffor()), PAULI[3], 0.0)
    assert matrix2_allclose(pauli_rep(Cliffor.pseudoscalar(1.0)), 1j * np.eye(2), 0.0)


def test_pauli_rep_bivector_image():
    # sigma1 @ sigma2 oracle: [[i, 0], [0, -i]]
    product = PAULI[1] @ PAULI[2]
    assert matrix2_allclose(product, np.array([[1j, 0], [0, -1j]]), 0.0)
    assert matrix2_allclose(
        pauli_rep(E1.as_cliffor() * E2.as_cliffor()), product, 0.0
    )


def test_pauli_rep_is_linear(rng):
    for _ in range(50):
        a, b = rand_cliffor(rng), rand_cliffor(rng)
        lhs = pauli_rep(a + b * 0.5)
        rhs = pauli_rep(a) + 0.5 * pauli_rep(b)
        assert matrix2_allclose(lhs, rhs, 1e-12)


def test_pauli_rep_homomorphism(rng):
    worst = 0.0
    for _ in range(1000):
        a, b = rand_cliffor(rng), rand_cliffor(rng)
        delta = pauli_rep(a * b) - pauli_rep(a) @ pauli_rep(b)
        worst = max(worst, float(np.max(np.abs(delta))))
    assert worst <= 1e-12


def test_cliffor_from_matrix_examples():
    assert cliffor_from_matrix(np.eye(2, dtype=complex)).approx_eq(
        Cliffor.scalar(1.0), 1e-12
    )
    assert cliffor_from_matrix(PAULI[2]).approx_eq(E2.as_cliffor(), 1e-12)
    got = cliffor_from_matrix(np.array([[1, 2], [3, 4]], dtype=complex))
    expected = Cliffor(s=2.5, v=(2.5, 0.0, -1.5), b=(0.0, -0.5, 0.0))
    assert got.approx_eq(expected, 1e-12)
    # round trip through the forward map confirms the solve
    assert matrix2_allclose(
        pauli_rep(got), np.array([[1, 2], [3, 4]], dtype=complex), 1e-12
    )


def test_round_trip_both_ways(rng):
    for _ in range(300):
        a = rand_cliffor(rng)
        assert cliffor_from_matrix(pauli_rep(a)).approx_eq(a, 1e-12)
    for _ in range(100):
        m = np.array(
            [[complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(2)] for _ in range(2)]
        )
        assert matrix2_allclose(pauli_rep(cliffor_from_matrix(m)), m, 1e-12)


# -- fermion decomposition -------------------------------------------------------------


def test_fermion_matrices_are_single_entry():
    for (mu, nu), expected in FERMION.items():
        assert matrix2_allclose(fermion_matrix(mu, nu), expected, 0.0)


def test_decompose_fermion_examples():
    coeffs = decompose_fermion(np.array([[1, 0], [0, 0]], dtype=complex))
    assert coeffs[0, 0] == 1 and np.count_nonzero(coeffs) == 1

    coeffs = decompose_fermion(PAULI[2])
    assert coeffs[0, 1] == -1j and coeffs[1, 0] == 1j

    assert np.count_nonzero(decompose_fermion(np.zeros((2, 2)))) == 0


def test_decompose_fermion_reconstructs(rng):
    m = np.array(
        [[complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(2)] for _ in range(2)]
    )
    coeffs = decompose_fermion(m)
    rebuilt = sum(
        coeffs[mu - 1, nu - 1] * fermion_matrix(mu, nu)
        for mu in (1, 2)
        for nu in (1, 2)
    )
    assert matrix2_allclose(rebuilt, m, 0.0)


def test_fermion_dyadic_matrix_products_delta_rule_exact():
    def as_right(mu, nu):
        entries = [[0.0, 0.0], [0.0, 0.0]]
        entries[mu - 1][nu - 1] = 1.0
        return RightActingMatrix(tuple(tuple(row) for row in entries))

    for mu1 in (1, 2):
        for nu1 in (1, 2):
            for mu2 in (1, 2):
                for nu2 in (1, 2):
                    product = matrix_multiply(as_right(mu1, nu1), as_right(mu2, nu2))
                    if nu1 == mu2:
                        assert product.m == as_right(mu1, nu2).m
                    else:
                        assert product.m == ((0.0, 0.0), (0.0, 0.0))


def test_e12_matrix_times_e21_matrix_is_e11():
    e12 = RightActingMatrix(((0, 1), (0, 0)))
    e21 = RightActingMatrix(((0, 0), (1, 0)))
    assert matrix_multiply(e12, e21).m == ((1.0, 0.0), (0.0, 0.0))


# -- json -------------------------------------------------------------------------------


def test_matrix2_json_round_trip():
    m = np.array([[1 + 2j, -0.5], [0, 3j]])
    data = matrix2_to_json(m)
    assert data[0][0] == [1.0, 2.0]
    assert matrix2_allclose(matrix2_from_json(data), m, 0.0)


def test_matrix2_from_json_accepts_plain_numbers():
    m = matrix2_from_json([[1, 0], [0, 1]])
    assert matrix2_allclose(m, np.eye(2), 0.0)
    with pytest.raises(ValueError):
        matrix2_from_json([[1, 0, 0], [0, 1, 0]])
