from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohoparam.errors import MathCheckError, UnsupportedGroupError
from cohoparam.halfint import HalfIntVector
from cohoparam.rootdata import (
    StandardParabolic,
    build_classical_dual,
    dominant_orbit_rep,
    epsilon_element,
    expand_in_basis,
    is_regular_orbit,
    is_self_associate,
    opposition_involution,
    parse_group,
    principal_sl2_coefficients,
)

# a spread of supported descriptors reused across tests
DESCRIPTORS = [
    "GL(1,R)", "GL(2,R)", "GL(3,R)", "GL(4,R)", "GL(5,R)",
    "SL(3,R)",
    "U(1,1)", "U(2,1)", "U(2,2)", "U(3,2)",
    "Sp(2,R)", "Sp(4,R)", "Sp(6,R)",
    "SO(2,3)", "SO(3,4)", "SO(2,2)", "SO(3,3)", "SO(2,4)", "SO(4,4)", "SO(1,5)",
    "GL(2,C)", "GL(3,C)",
]


def test_parse_group_accepts_grammar():
    assert parse_group("gl(4, r)") == ("GL", 4, "R")
    assert parse_group("U(2,1)") == ("U", 2, 1)
    assert parse_group("Sp(6,R)") == ("SP", 6, "R")
    assert parse_group("so(2,3)") == ("SO", 2, 3)


@pytest.mark.parametrize(
    "bad",
    ["GL(4)", "SL(2,C)", "Sp(3,R)", "Sp(4,C)", "E8", "SO(2)", "U(2,R)", ""],
)
def test_parse_group_rejects(bad):
    with pytest.raises(UnsupportedGroupError):
        parse_group(bad)


def test_triality_signature_rejected():
    with pytest.raises(UnsupportedGroupError):
        build_classical_dual("SO(3,5)")
    with pytest.raises(UnsupportedGroupError):
        build_classical_dual("SO(1,7)")
    # even-even signatures at p+q=8 are unambiguous and fine
    build_classical_dual("SO(4,4)")
    build_classical_dual("SO(2,6)")


# -- rho-check closed forms (hand tables for the four classical types) ------


def test_rho_check_type_A():
    d = build_classical_dual("GL(4,R)")
    assert d.rho_check == HalfIntVector.parse("3/2,1/2,-1/2,-3/2")
    assert d.rho == d.rho_check


def test_rho_check_type_B():
    d = build_classical_dual("Sp(6,R)")  # dual SO_7, type B_3
    assert d.rho_check == HalfIntVector.from_ints(3, 2, 1)
    assert d.rho == HalfIntVector.parse("5/2,3/2,1/2")


def test_rho_check_type_C():
    d = build_classical_dual("SO(3,4)")  # dual Sp_6, type C_3
    assert d.rho_check == HalfIntVector.parse("5/2,3/2,1/2")
    assert d.rho == HalfIntVector.from_ints(3, 2, 1)


def test_rho_check_type_D():
    d = build_classical_dual("SO(4,4)")  # dual SO_8, type D_4
    assert d.rho_check == HalfIntVector.from_ints(3, 2, 1, 0)
    assert d.rho == d.rho_check


def test_rho_check_product():
    d = build_classical_dual("GL(3,C)")
    assert d.rho_check == HalfIntVector.from_twice((2, 0, -2, 2, 0, -2))


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_rho_check_pairs_to_one(desc):
    d = build_classical_dual(desc)
    for i in range(1, d.rank + 1):
        assert d.rho_check.dot(d.alpha(i)) == 1
        assert d.rho.dot(d.alpha_check(i)) == 1


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_cartan_diagonal_and_integrality(desc):
    d = build_classical_dual(desc)
    c = d.cartan_matrix()
    for i in range(d.rank):
        assert c[i][i] == 2
        for j in range(d.rank):
            assert c[i][j].denominator == 1
            if i != j:
                assert c[i][j] <= 0


def test_cartan_matrix_B2_C2():
    b2 = build_classical_dual("Sp(4,R)").cartan_matrix()
    assert b2 == [[2, -2], [-1, 2]]
    c2 = build_classical_dual("SO(2,3)").cartan_matrix()
    assert c2 == [[2, -1], [-2, 2]]


# -- involutions -------------------------------------------------------------


def test_opposition_GL4():
    d = build_classical_dual("GL(4,R)")
    idx, lin = opposition_involution(d)
    assert idx == (3, 2, 1)
    assert lin.apply(HalfIntVector.from_ints(1, 2, 3, 4)) == HalfIntVector.from_ints(
        -4, -3, -2, -1
    )


def test_opposition_is_identity_for_BC_and_even_D():
    for desc in ["Sp(4,R)", "SO(2,3)", "SO(4,4)", "SO(2,2)"]:
        d = build_classical_dual(desc)
        assert d.iota_linear.is_identity


def test_opposition_swaps_fork_for_odd_D():
    d = build_classical_dual("SO(3,3)")  # D_3
    assert d.iota_index == (1, 3, 2)


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_involutions_are_involutive_diagram_maps(desc):
    d = build_classical_dual(desc)
    for idx_map in (d.iota_index, d.galois_index, d.theta_index):
        assert sorted(idx_map) == list(range(1, d.rank + 1))
        for i in range(1, d.rank + 1):
            assert idx_map[idx_map[i - 1] - 1] == i


def test_theta_trivial_for_equal_rank_forms():
    # U(p,q), even-even SO, and non-split SO(4n+2) have discrete series:
    # every standard parabolic is self-associate.
    for desc in ["U(2,1)", "U(2,2)", "SO(2,4)", "SO(4,4)", "GL(4,R)"]:
        d = build_classical_dual(desc)
        if desc.startswith("GL"):
            continue
        assert all(d.theta(i) == i for i in range(1, d.rank + 1)), desc


def test_theta_on_split_GL_is_the_flip():
    d = build_classical_dual("GL(4,R)")
    assert d.theta_index == (3, 2, 1)


def test_self_associate_examples():
    d = build_classical_dual("GL(4,R)")
    assert is_self_associate(StandardParabolic(d, frozenset({1, 3})))
    assert is_self_associate(StandardParabolic(d, frozenset({2})))
    assert is_self_associate(StandardParabolic(d, frozenset()))
    assert not is_self_associate(StandardParabolic(d, frozenset({1})))
    # split SO(3,3): only fork-symmetric subsets
    d33 = build_classical_dual("SO(3,3)")
    assert is_self_associate(StandardParabolic(d33, frozenset({2, 3})))
    assert not is_self_associate(StandardParabolic(d33, frozenset({2})))


def test_galois_for_complex_group_swaps_factors():
    d = build_classical_dual("GL(3,C)")
    assert d.galois_index == (3, 4, 1, 2)
    v = HalfIntVector.from_ints(1, 2, 3, 4, 5, 6)
    assert d.galois_linear.apply(v) == HalfIntVector.from_ints(4, 5, 6, 1, 2, 3)
    # theta pairs factor-1 subsets with flipped factor-2 subsets
    assert d.theta_index == (4, 3, 2, 1)


# -- parabolic data ----------------------------------------------------------


def test_rho_check_levi_GL4():
    d = build_classical_dual("GL(4,R)")
    p = StandardParabolic(d, frozenset({1, 3}))
    assert p.rho_check_levi == HalfIntVector.parse("1/2,-1/2,1/2,-1/2")
    borel = StandardParabolic(d, frozenset())
    assert borel.rho_check_levi.is_zero


def test_rho_check_levi_B2_short_root():
    d = build_classical_dual("Sp(4,R)")  # B_2
    p = StandardParabolic(d, frozenset({2}))  # Levi contains the short root e_2
    assert p.rho_check_levi == HalfIntVector.from_ints(0, 1)


def test_levi_counts_full_subset():
    d = build_classical_dual("Sp(4,R)")
    full = StandardParabolic(d, frozenset({1, 2}))
    assert len(full.levi_positive()) == len(d.positive_roots)


def test_expand_in_basis():
    d = build_classical_dual("Sp(4,R)")
    simples = list(d.simple_roots)
    # e_1 + e_2 = alpha_1 + 2 alpha_2 in B_2
    target = HalfIntVector.from_ints(1, 1)
    assert expand_in_basis(simples, target) == [Fraction(1), Fraction(2)]
    # inconsistent target: e_1 + e_2 is not a multiple of e_1 - e_2
    assert expand_in_basis(simples[:1], target) is None


# -- principal SL2 -----------------------------------------------------------


def test_principal_sl2_A2_A3():
    d3 = build_classical_dual("GL(3,R)")
    out = principal_sl2_coefficients(StandardParabolic(d3, frozenset({1, 2})))
    assert out.coeffs == {1: 2, 2: 2}
    d4 = build_classical_dual("GL(4,R)")
    out = principal_sl2_coefficients(StandardParabolic(d4, frozenset({1, 2, 3})))
    assert out.coeffs == {1: 3, 2: 4, 3: 3}


def test_principal_sl2_B2_C2():
    b2 = build_classical_dual("Sp(4,R)")
    out = principal_sl2_coefficients(StandardParabolic(b2, frozenset({1, 2})))
    assert out.coeffs == {1: 4, 2: 3}
    c2 = build_classical_dual("SO(2,3)")
    out = principal_sl2_coefficients(StandardParabolic(c2, frozenset({1, 2})))
    assert out.coeffs == {1: 3, 2: 4}


def test_principal_sl2_phi_symmetry_and_t_assignment():
    d = build_classical_dual("GL(4,R)")
    p = StandardParabolic(d, frozenset({1, 2, 3}))
    phi = {1: 3, 2: 2, 3: 1}
    out = principal_sl2_coefficients(p, phi)
    assert out.t_assignment[1] * out.t_assignment[3] == out.coeffs[1]
    assert out.needs_sqrt == frozenset({2})
    assert out.t_assignment[2] == out.coeffs[2]


def test_principal_sl2_rejects_asymmetric_phi():
    d = build_classical_dual("GL(4,R)")
    p = StandardParabolic(d, frozenset({1, 2}))
    with pytest.raises(ValueError):
        principal_sl2_coefficients(p, {1: 3, 2: 2})  # 3 not in S


def test_principal_sl2_empty_subset():
    d = build_classical_dual("GL(4,R)")
    out = principal_sl2_coefficients(StandardParabolic(d, frozenset()))
    assert out.coeffs == {}


subset_strategy = st.sets(st.integers(min_value=1, max_value=4), max_size=4)


@settings(deadline=None, max_examples=60)
@given(desc=st.sampled_from(["GL(5,R)", "Sp(4,R)", "SO(3,4)", "SO(4,4)", "U(3,2)"]),
       raw=subset_strategy)
def test_principal_sl2_residual_always_zero(desc, raw):
    d = build_classical_dual(desc)
    s = frozenset(i for i in raw if i <= d.rank)
    out = principal_sl2_coefficients(StandardParabolic(d, s))
    # in-op residual and 2*rho_check_L expansion checks did not raise
    assert set(out.coeffs) == set(s)
    assert all(a > 0 for a in out.coeffs.values())


# -- epsilon ------------------------------------------------------------------


def test_epsilon_GL():
    e2 = epsilon_element(build_classical_dual("GL(2,R)"))
    assert e2.sign(HalfIntVector.from_ints(1, 0)) == -1
    assert not e2.is_trivial
    e3 = epsilon_element(build_classical_dual("GL(3,R)"))
    assert e3.is_trivial


def test_epsilon_sp_so():
    # dual SO_5: 2 rho-check = (4,2), trivial on Z^2
    assert epsilon_element(build_classical_dual("Sp(4,R)")).is_trivial
    # dual Sp_4: 2 rho-check = (3,1): -I, nontrivial
    eps = epsilon_element(build_classical_dual("SO(2,3)"))
    assert not eps.is_trivial
    assert eps.sign(HalfIntVector.from_ints(1, 0)) == -1
    assert eps.sign(HalfIntVector.from_ints(1, 1)) == 1


def test_epsilon_adjoint_always_trivial():
    for n in (2, 3, 4, 5):
        assert epsilon_element(build_classical_dual(f"SL({n},R)")).is_trivial


def test_epsilon_rejects_fractional_pairing():
    eps = epsilon_element(build_classical_dual("GL(2,R)"))
    with pytest.raises(Exception):
        eps.sign(HalfIntVector.parse("1/2,0"))


@pytest.mark.parametrize("desc", DESCRIPTORS)
def test_epsilon_multiplicative(desc):
    eps = epsilon_element(build_classical_dual(desc))
    n = build_classical_dual(desc).ambient_dim
    u = HalfIntVector.from_ints(*range(n))
    v = HalfIntVector.from_ints(*([1] * n))
    assert eps.sign(u) * eps.sign(v) == eps.sign(u + v)


# -- orbit normal forms -------------------------------------------------------


def test_dominant_orbit_rep_types():
    a = build_classical_dual("GL(3,R)")
    assert dominant_orbit_rep(a, HalfIntVector.from_ints(1, 3, 2)) == \
        HalfIntVector.from_ints(3, 2, 1)
    b = build_classical_dual("Sp(4,R)")
    assert dominant_orbit_rep(b, HalfIntVector.from_ints(-3, 1)) == \
        HalfIntVector.from_ints(3, 1)
    d = build_classical_dual("SO(4,4)")
    # odd number of sign flips sticks to the last coordinate in type D
    assert dominant_orbit_rep(d, HalfIntVector.from_ints(-4, 3, 2, 1)) == \
        HalfIntVector.from_ints(4, 3, 2, -1)
    assert dominant_orbit_rep(d, HalfIntVector.from_ints(-4, 3, 0, 1)) == \
        HalfIntVector.from_ints(4, 3, 1, 0)


def test_regularity():
    a = build_classical_dual("GL(3,R)")
    assert is_regular_orbit(a, HalfIntVector.from_ints(2, 1, 0))
    assert not is_regular_orbit(a, HalfIntVector.from_ints(1, 1, 0))
    b = build_classical_dual("Sp(4,R)")
    assert not is_regular_orbit(b, HalfIntVector.from_ints(1, 0))
    d = build_classical_dual("SO(4,4)")
    assert is_regular_orbit(d, HalfIntVector.from_ints(3, 2, 1, 0))
    assert not is_regular_orbit(d, HalfIntVector.from_ints(3, 1, 1, 0))


def test_weight_lattices():
    gl = build_classical_dual("GL(2,R)")
    assert gl.weight_is_integral(HalfIntVector.from_ints(1, -1))
    assert not gl.weight_is_integral(HalfIntVector.parse("1/2,-1/2"))
    sl = build_classical_dual("SL(2,R)")
    assert sl.weight_is_integral(HalfIntVector.parse("1/2,-1/2"))
    assert not sl.weight_is_integral(HalfIntVector.parse("1/2,0"))
