import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohoparam.errors import WeylSizeError
from cohoparam.halfint import HalfIntVector
from cohoparam.rootdata import StandardParabolic, build_classical_dual
from cohoparam.weyl import (
    WeylElement,
    compact_weyl_catalog,
    conjugate_element,
    double_cosets,
    full_weyl_group,
    levi_weyl_group,
    longest_element,
    simple_reflection,
    subgroup_closure,
    theta_fixed_subgroup,
    weyl_order,
)


def _rand_element(draw, n):
    perm = draw(st.permutations(range(n)))
    signs = draw(st.tuples(*[st.sampled_from([1, -1])] * n))
    return WeylElement(tuple(perm), tuple(signs))


@settings(deadline=None, max_examples=80)
@given(data=st.data(), n=st.integers(min_value=1, max_value=5))
def test_group_axioms(data, n):
    w = _rand_element(data.draw, n)
    u = _rand_element(data.draw, n)
    v = HalfIntVector.from_ints(*range(1, n + 1))
    # composition convention: (w*u)(v) == w(u(v))
    assert (w * u).apply(v) == w.apply(u.apply(v))
    assert (w * w.inverse()).is_identity
    assert (w.inverse() * w).is_identity
    ident = WeylElement.identity(n)
    assert w * ident == w and ident * w == w


def test_simple_reflections_B2():
    d = build_classical_dual("Sp(4,R)")  # B_2
    s1 = simple_reflection(d, 1)
    s2 = simple_reflection(d, 2)
    assert s1 == WeylElement((1, 0), (1, 1))
    assert s2 == WeylElement((0, 1), (1, -1))
    prod = s1 * s2
    power = prod
    for _ in range(3):
        power = power * prod
    assert power.is_identity  # (s1 s2)^4 = e
    assert not (prod * prod).is_identity


def test_simple_reflection_braid_A2():
    d = build_classical_dual("GL(3,R)")
    s1, s2 = simple_reflection(d, 1), simple_reflection(d, 2)
    assert s1 * s2 * s1 == s2 * s1 * s2


@pytest.mark.parametrize(
    "desc,order",
    [
        ("GL(4,R)", 24),
        ("Sp(4,R)", 8),
        ("Sp(6,R)", 48),
        ("SO(3,4)", 48),
        ("SO(4,4)", 192),
        ("SO(2,4)", 24),
        ("GL(2,C)", 4),
        ("GL(3,C)", 36),
        ("U(2,2)", 24),
    ],
)
def test_weyl_orders(desc, order):
    d = build_classical_dual(desc)
    assert weyl_order(d) == order
    elems = full_weyl_group(d)
    assert len(elems) == order
    assert len(set(elems)) == order


def test_weyl_cap_closed_form_refusal():
    d = build_classical_dual("Sp(20,R)")
    with pytest.raises(WeylSizeError):
        full_weyl_group(d)  # 2^10 * 10! over the default cap
    with pytest.raises(WeylSizeError):
        full_weyl_group(build_classical_dual("Sp(4,R)"), max_size=4)


def test_env_override(monkeypatch):
    monkeypatch.setenv("COHOPARAM_MAX_WEYL", "4")
    with pytest.raises(WeylSizeError):
        compact_weyl_catalog("Sp(4,R)")
    monkeypatch.setenv("COHOPARAM_MAX_WEYL", "50")
    assert len(compact_weyl_catalog("Sp(4,R)").w_theta) == 8


def test_longest_element_GL4_is_reversal():
    d = build_classical_dual("GL(4,R)")
    w0 = longest_element(d)
    assert w0 == WeylElement((3, 2, 1, 0), (1, 1, 1, 1))


@pytest.mark.parametrize(
    "desc",
    [
        "GL(2,R)", "GL(3,R)", "GL(4,R)", "GL(5,R)", "U(2,1)", "U(2,2)",
        "Sp(4,R)", "Sp(6,R)", "SO(2,3)", "SO(3,4)", "SO(2,4)", "SO(4,4)",
        "SO(3,3)", "GL(2,C)", "GL(3,C)",
    ],
)
def test_longest_element_matches_opposition(desc):
    d = build_classical_dual(desc)
    w0 = longest_element(d)
    assert w0.apply(d.rho_check) == -d.rho_check
    for i in range(1, d.rank + 1):
        assert w0.apply(d.alpha(i)) == -d.alpha(d.iota_index[i - 1])


def test_theta_fixed_subgroup_GL4():
    d = build_classical_dual("GL(4,R)")
    w = full_weyl_group(d)
    fixed = theta_fixed_subgroup(w, d.theta_linear)
    assert len(fixed) == 8  # centralizer of the reversal: hyperoctahedral B_2
    rev = WeylElement((3, 2, 1, 0), (1, 1, 1, 1))
    assert rev in fixed


def test_conjugate_element():
    d = build_classical_dual("GL(3,R)")
    s1 = simple_reflection(d, 1)
    s2 = simple_reflection(d, 2)
    assert conjugate_element(d.theta_linear, s1) == s2


def test_double_cosets_two_block_example():
    # A_3 with K-side of special-orthogonal flavor, Levi blocks (2,2):
    # exactly two packets of four elements each.
    cat = compact_weyl_catalog("SL(4,R)")
    p = StandardParabolic(cat.datum, frozenset({1, 3}))
    w_l = levi_weyl_group(p)
    w_l_theta = theta_fixed_subgroup(w_l, cat.theta_map)
    assert len(w_l_theta) == 2
    cosets = double_cosets(cat.k_weyl, w_l_theta, cat.w_theta)
    assert [c.size for c in cosets] == [4, 4]
    assert sum(c.size for c in cosets) == len(cat.w_theta)
    assert cosets[0].rep.is_identity


def test_double_cosets_partition_and_determinism():
    cat = compact_weyl_catalog("Sp(4,R)")
    p = StandardParabolic(cat.datum, frozenset({1}))
    w_l = theta_fixed_subgroup(levi_weyl_group(p), cat.theta_map)
    once = double_cosets(cat.k_weyl, w_l, cat.w_theta)
    twice = double_cosets(cat.k_weyl, w_l, cat.w_theta)
    assert once == twice
    seen = [w for c in once for w in c.elements]
    assert len(seen) == len(set(seen)) == len(cat.w_theta)


# catalog golden table: (descriptor, |W^theta|, |K-side|, cosets, d)
CATALOG_TABLE = [
    ("U(1,1)", 2, 1, 2, 0),
    ("U(2,1)", 6, 2, 3, 0),
    ("U(2,2)", 24, 4, 6, 0),
    ("U(3,2)", 120, 12, 10, 0),
    ("Sp(2,R)", 2, 1, 2, 0),
    ("Sp(4,R)", 8, 2, 4, 0),
    ("Sp(6,R)", 48, 6, 8, 0),
    ("SO(2,3)", 8, 2, 4, 0),
    ("SO(3,4)", 48, 8, 6, 0),
    ("SO(2,5)", 48, 8, 6, 0),
    ("SO(1,4)", 8, 4, 2, 0),
    ("GL(1,R)", 1, 1, 1, 1),
    ("GL(2,R)", 2, 2, 1, 1),
    ("GL(3,R)", 2, 2, 1, 2),
    ("GL(4,R)", 8, 8, 1, 2),
    ("GL(5,R)", 8, 8, 1, 3),
    ("SL(2,R)", 2, 1, 2, 1),
    ("SL(4,R)", 8, 4, 2, 2),
    ("SL(5,R)", 8, 8, 1, 3),
    ("SO(2,2)", 4, 1, 4, 0),
    ("SO(2,4)", 24, 4, 6, 0),
    ("SO(4,4)", 192, 16, 12, 0),
    ("SO(1,1)", 1, 1, 1, 1),
    ("SO(1,3)", 2, 2, 1, 1),
    ("SO(3,3)", 8, 4, 2, 1),
    ("SO(1,5)", 8, 8, 1, 1),
    ("GL(2,C)", 2, 2, 1, 2),
    ("GL(3,C)", 6, 6, 1, 3),
]


@pytest.mark.parametrize("desc,tw,k,nc,d", CATALOG_TABLE)
def test_compact_catalog_table(desc, tw, k, nc, d):
    cat = compact_weyl_catalog(desc)
    assert len(cat.w_theta) == tw
    assert len(cat.k_weyl) == k
    assert cat.n_cosets == nc
    assert cat.d_exponent == d
    assert set(cat.k_weyl) <= set(cat.w_theta)


def test_unitary_coset_count_is_binomial():
    for p, q in [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)]:
        cat = compact_weyl_catalog(f"U({p},{q})")
        assert cat.n_cosets == math.comb(p + q, p)


def test_symplectic_coset_count_is_power_of_two():
    for n in (1, 2, 3):
        cat = compact_weyl_catalog(f"Sp({2 * n},R)")
        assert cat.n_cosets == 2**n


def test_so_odd_odd_gate():
    from cohoparam.errors import UnsupportedGroupError

    with pytest.raises(UnsupportedGroupError):
        compact_weyl_catalog("SO(3,5)")
    with pytest.raises(UnsupportedGroupError):
        compact_weyl_catalog("SO(5,5)")


def test_catalog_deterministic():
    a = compact_weyl_catalog("SO(2,3)")
    b = compact_weyl_catalog("SO(2,3)")
    assert a.w_theta == b.w_theta
    assert a.k_weyl == b.k_weyl
    assert a.to_json() == b.to_json()


def test_subgroup_closure_trivial():
    (only,) = subgroup_closure([], n=3)
    assert only.is_identity
