"""Parameter layer: atoms, subset-side parameters, enumeration routes,
routing, transfers, central values.

Golden tables below were first computed by hand from the exponent data
(chi = weight + rho-check - rho-check of the Levi, sl2 = twice rho-check
of the Levi) and then frozen; the enumeration sweeps re-derive everything
through the independent direct routes.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cohoparam.errors import (
    InvalidWeightError,
    MathCheckError,
    UnsupportedGroupError,
)
from cohoparam.halfint import HalfIntVector
from cohoparam.params import (
    CohomParameter,
    ComplexParameter,
    GLParameter,
    QuadAtom,
    TwoDimAtom,
    central_value_report,
    enumerate_cohomological,
    enumerate_complex_cohomological,
    enumerate_gl_real,
    enumerate_selfdual,
    gl_cascade_parameters,
    gl_coefficient_weight,
    parse_complex_parameter,
    parse_gl_parameter,
    route_selfdual,
    standard_rep_parameter,
    tempered_companion,
    transfer_cohom,
    transfer_weight,
    unitary_relevance,
)
from cohoparam.rootdata import build_classical_dual


def zero(n: int) -> HalfIntVector:
    return HalfIntVector((0,) * n)


# ---------------------------------------------------------------------------
# atoms


class TestAtoms:
    def test_twodim_basics(self):
        a = TwoDimAtom(3, 2)
        assert a.dim == 4
        assert a.text() == "s3[2]"
        assert sorted(a.exponents()) == [
            Fraction(-2),
            Fraction(-1),
            Fraction(1),
            Fraction(2),
        ]

    def test_quad_basics(self):
        a = QuadAtom(1, 3)
        assert a.dim == 3
        assert a.text() == "w1[3]"
        assert sorted(a.exponents()) == [Fraction(-1), Fraction(0), Fraction(1)]

    # symplectic iff exactly one of (d odd), (m even)
    @pytest.mark.parametrize(
        "d,m,sympl",
        [(1, 1, True), (2, 1, False), (1, 2, False), (2, 2, True), (3, 2, False), (4, 3, False)],
    )
    def test_twodim_symplectic(self, d, m, sympl):
        assert TwoDimAtom(d, m).is_symplectic is sympl

    @pytest.mark.parametrize("eps,a,sympl", [(0, 1, False), (1, 2, True), (0, 4, True), (1, 5, False)])
    def test_quad_symplectic(self, eps, a, sympl):
        assert QuadAtom(eps, a).is_symplectic is sympl

    # det(s{d}[m]) = w^m for even d, trivial for odd d; det(w{e}[a]) = w^(ea)
    @pytest.mark.parametrize(
        "atom,det",
        [
            (TwoDimAtom(4, 1), 1),
            (TwoDimAtom(4, 2), 0),
            (TwoDimAtom(3, 2), 0),
            (TwoDimAtom(3, 5), 0),
            (QuadAtom(1, 3), 1),
            (QuadAtom(1, 2), 0),
            (QuadAtom(0, 7), 0),
        ],
    )
    def test_det_exponents(self, atom, det):
        assert atom.det_exponent == det

    def test_bad_atoms_rejected(self):
        with pytest.raises(ValueError):
            TwoDimAtom(0, 1)
        with pytest.raises(ValueError):
            TwoDimAtom(1, 0)
        with pytest.raises(ValueError):
            QuadAtom(2, 1)
        with pytest.raises(ValueError):
            QuadAtom(0, 0)


class TestGLParameter:
    def test_canonical_sorting(self):
        p = GLParameter((QuadAtom(0, 1), TwoDimAtom(2, 1), TwoDimAtom(4, 1)))
        assert p.text() == "s4[1]+s2[1]+w0[1]"

    def test_dimension_and_det(self):
        p = parse_gl_parameter("s4[1]+w1[3]")
        assert p.dimension == 5
        assert p.det_exponent == 0  # w + w^3 = trivial

    def test_selfdual_types(self):
        assert parse_gl_parameter("s4[1]+s2[1]+w0[1]").selfdual_type == "orthogonal"
        assert parse_gl_parameter("s1[1]+w0[2]").selfdual_type == "symplectic"
        assert parse_gl_parameter("s1[1]+s2[1]").selfdual_type == "mixed"
        assert parse_gl_parameter("s2[1]*nu^1/2").selfdual_type == "twisted"

    def test_regularity_and_multiplicity(self):
        assert parse_gl_parameter("s3[1]+s1[1]").is_regular
        assert not parse_gl_parameter("s1[2]").is_regular  # exponents 1,0,0,-1
        assert not parse_gl_parameter("w0[1]+w0[1]").is_multiplicity_free

    def test_omega_twist_orbit(self):
        p = parse_gl_parameter("s4[1]+w1[3]+w0[1]")
        q = p.omega_twist()
        assert q.text() == "s4[1]+w0[3]+w1[1]"
        assert p.orbit_key() == q.orbit_key()

    def test_exponents_with_twist(self):
        p = parse_gl_parameter("s4[1]+w0[1]*nu^1")
        assert p.exponents() == [Fraction(3), Fraction(1), Fraction(-1)]

    def test_parse_roundtrip_and_rejects(self):
        for text in ("s4[1]+s2[1]+w0[1]", "s3[2]+w0[1]", "w0[5]", "s2[2]*nu^3/2"):
            assert parse_gl_parameter(text).text() == text
        assert parse_gl_parameter("s4").text() == "s4[1]"
        for bad in ("x3[1]", "s[2]", "s3[2]+", "w2[1]", "s3[2]*nu^1/3"):
            with pytest.raises(InvalidWeightError):
                parse_gl_parameter(bad)

    # central element: s{d}[m] needs d+m = N mod 2, w{e}[a] needs a = N mod 2
    def test_central_parity(self):
        ok, per = parse_gl_parameter("s4[1]+s2[1]+w0[1]").central_parity_ok()
        assert ok and per == [True, True, True]
        # s2 alone has N=2 but d+m=3: the weight behind it is half-integral
        ok, per = parse_gl_parameter("s2[1]").central_parity_ok()
        assert not ok and per == [False]


class TestComplexParameter:
    def test_text_and_parse(self):
        p = ComplexParameter(((1, 2), (-2, 1)))
        assert p.text() == "e1/2[2]+e-1[1]"
        assert parse_complex_parameter("e1/2[2]+e-1[1]") == p
        assert parse_complex_parameter("e1[1]").entries == ((2, 1),)

    def test_conjugate_symmetry(self):
        assert ComplexParameter(((2, 2), (-2, 2))).is_conjugate_symmetric
        assert not ComplexParameter(((1, 2), (-2, 1))).is_conjugate_symmetric

    def test_central_parity(self):
        # entries (2d, m): parity of 2d+m against N
        p = parse_complex_parameter("e1[1]+e0[1]+e-1[1]")
        ok, per = p.central_parity_ok()
        assert ok and per == [True, True, True]


# ---------------------------------------------------------------------------
# subset-side parameters and validation


class TestCohomParameter:
    def test_validation_errors(self):
        d = build_classical_dual("GL(4,R)")
        with pytest.raises(InvalidWeightError):
            CohomParameter(d, frozenset(), HalfIntVector.from_ints(0, 0, 0))
        with pytest.raises(InvalidWeightError):
            CohomParameter(d, frozenset(), HalfIntVector.parse("1/2,0,0,-1/2"))
        with pytest.raises(InvalidWeightError):  # not dominant
            CohomParameter(d, frozenset(), HalfIntVector.from_ints(0, 1, -1, 0))
        with pytest.raises(InvalidWeightError):  # not theta-fixed
            CohomParameter(d, frozenset(), HalfIntVector.from_ints(1, 0, 0, 0))
        with pytest.raises(InvalidWeightError):  # S not self-associate
            CohomParameter(d, frozenset({1}), zero(4))
        with pytest.raises(InvalidWeightError):  # weight not orthogonal to S
            CohomParameter(
                d, frozenset({1, 3}), HalfIntVector.from_ints(1, 0, 0, -1)
            )

    def test_chi_and_sl2(self):
        d = build_classical_dual("Sp(4,R)")
        c = CohomParameter(d, frozenset({2}), zero(2))
        assert str(c.chi_exponent) == "2,0"
        assert str(c.sl2_cochar) == "0,2"
        assert str(c.inf_char) == "2,1"

    def test_enumeration_order(self):
        subsets = [sorted(c.S) for c in enumerate_cohomological("Sp(4,R)")]
        assert subsets == [[], [1], [2], [1, 2]]

    def test_enumeration_respects_singularity(self):
        lam = HalfIntVector.from_ints(1, 1)  # alpha_2 stays regular
        subs = [sorted(c.S) for c in enumerate_cohomological("Sp(4,R)", lam)]
        assert subs == [[], [1]]

    def test_so_even_counts_all_subsets(self):
        # theta = id for SO(2,4), so all 8 subsets of D_3 are self-associate
        assert len(enumerate_cohomological("SO(2,4)")) == 8
        # theta swaps the fork for SO(3,3): 4 stable subsets
        assert [sorted(c.S) for c in enumerate_cohomological("SO(3,3)")] == [
            [],
            [1],
            [2, 3],
            [1, 2, 3],
        ]


# ---------------------------------------------------------------------------
# golden tables


SP4_TABLE = {
    (): "s4[1]+s2[1]+w0[1]",
    (1,): "s3[2]+w0[1]",
    (2,): "s4[1]+w1[3]",
    (1, 2): "w0[5]",
}

SO23_TABLE = {
    (): "s3[1]+s1[1]",
    (1,): "s2[2]",
    (2,): "s3[1]+w0[2]",
    (1, 2): "w0[4]",
}

U21_TABLE = {
    (): "e1[1]+e0[1]+e-1[1]",
    (1,): "e1/2[2]+e-1[1]",
    (2,): "e1[1]+e-1/2[2]",
    (1, 2): "e0[3]",
}

GL4_TABLE = {
    (): "s3[1]+s1[1]",
    (2,): "s3[1]+w0[2]",
    (1, 3): "s2[2]",
    (1, 2, 3): "w0[4]",
}

GLC3_TABLE = {
    (): "e1[1]+e0[1]+e-1[1]",
    (1, 4): "e1/2[2]+e-1[1]",
    (2, 3): "e1[1]+e-1/2[2]",
    (1, 2, 3, 4): "e0[3]",
}


@pytest.mark.parametrize(
    "descriptor,table",
    [
        ("Sp(4,R)", SP4_TABLE),
        ("SO(2,3)", SO23_TABLE),
        ("U(2,1)", U21_TABLE),
        ("GL(4,R)", GL4_TABLE),
        ("GL(3,C)", GLC3_TABLE),
    ],
)
def test_golden_tables(descriptor, table):
    got = {
        tuple(sorted(c.S)): standard_rep_parameter(c).text()
        for c in enumerate_cohomological(descriptor)
    }
    assert got == table


def test_sp4_quad_sign_forced_by_determinant():
    # the orthogonal 5-dimensional image must have trivial determinant:
    # with s4 contributing w, the zero string must contribute w as well
    p = parse_gl_parameter(SP4_TABLE[(2,)])
    assert p.det_exponent == 0
    assert QuadAtom(1, 3) in p.atoms


def test_so_even_images_carry_discriminant():
    for desc, delta in (("SO(3,3)", 0), ("SO(2,4)", 1), ("SO(4,4)", 0), ("SO(2,6)", 0)):
        for c in enumerate_cohomological(desc):
            img = standard_rep_parameter(c)
            assert img.det_exponent == delta, (desc, sorted(c.S), img.text())


def test_so33_empty_subset_not_multiplicity_free():
    # no compact Cartan: the tempered member repeats the trivial character
    c = enumerate_cohomological("SO(3,3)")[0]
    img = standard_rep_parameter(c)
    assert img.text() == "s4[1]+s2[1]+w0[1]+w0[1]"
    assert not img.is_multiplicity_free


# ---------------------------------------------------------------------------
# dual-route equality: subset route vs direct enumeration


class TestRouteEquality:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7])
    def test_gl_real_three_routes(self, n):
        s_route = sorted(
            standard_rep_parameter(c).text()
            for c in enumerate_cohomological(f"GL({n},R)")
        )
        direct = sorted(p.text() for p in enumerate_gl_real(n))
        cascade = sorted(p.text() for p in gl_cascade_parameters(n))
        assert s_route == direct == cascade
        assert len(direct) == 2 ** (n // 2)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_gl_complex_two_routes(self, n):
        s_route = sorted(
            standard_rep_parameter(c).text()
            for c in enumerate_cohomological(f"GL({n},C)")
        )
        direct = sorted(p.text() for p in enumerate_complex_cohomological(n))
        assert s_route == direct
        assert len(direct) == 2 ** (n - 1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_sp_two_routes(self, n):
        s_route = sorted(
            standard_rep_parameter(c).text()
            for c in enumerate_cohomological(f"Sp({2 * n},R)")
        )
        ent = [Fraction(k) for k in range(1, n + 1)]
        exps = ent + [-e for e in ent] + [Fraction(0)]
        direct = sorted(p.text() for p in enumerate_selfdual(exps, "orthogonal", 0))
        assert s_route == direct
        assert len(direct) == 2 ** n

    @pytest.mark.parametrize("p,q", [(2, 3), (4, 3), (2, 5), (4, 5), (6, 5)])
    def test_so_odd_two_routes(self, p, q):
        n = (p + q) // 2
        s_route = sorted(
            standard_rep_parameter(c).text()
            for c in enumerate_cohomological(f"SO({p},{q})")
        )
        ent = [Fraction(2 * k - 1, 2) for k in range(1, n + 1)]
        exps = ent + [-e for e in ent]
        direct = sorted(pp.text() for pp in enumerate_selfdual(exps, "symplectic"))
        assert s_route == direct
        assert len(direct) == 2 ** n
        # symplectic-valued parameters leave the quad sign free
        for c in enumerate_cohomological(f"SO({p},{q})"):
            img = standard_rep_parameter(c)
            quads = [a for a in img.atoms if isinstance(a, QuadAtom)]
            assert img.omega_pair == bool(quads)
            assert all(a.eps == 0 for a in quads)

    @pytest.mark.parametrize(
        "p,q", [(2, 2), (3, 3), (2, 4), (4, 4), (2, 6), (4, 6), (6, 6), (5, 7)]
    )
    def test_so_even_two_routes(self, p, q):
        n = (p + q) // 2
        s_route = {
            standard_rep_parameter(c).text()
            for c in enumerate_cohomological(f"SO({p},{q})")
        }
        ent = [Fraction(k) for k in range(n)]
        exps = ent + [-e for e in ent]
        delta = (q - n) % 2
        direct = {
            pp.text() for pp in enumerate_selfdual(exps, "orthogonal", delta)
        }
        assert s_route == direct

    def test_so_even_fork_collisions(self):
        # the two fork singletons of SO(2,4) give the same image
        params = enumerate_cohomological("SO(2,4)")
        by_s = {
            tuple(sorted(c.S)): standard_rep_parameter(c).text() for c in params
        }
        assert by_s[(2,)] == by_s[(3,)]
        assert by_s[(1, 2)] == by_s[(1, 3)]

    def test_u_exponents_mirror_under_negation(self):
        # single entries need not be symmetric (the diagram involution is
        # trivial for unitary groups, so every subset enumerates), but the
        # exponent multiset always is: the weight sits on the hyperplane
        # fixed by the flip
        for desc in ("U(2,1)", "U(2,2)", "U(3,2)"):
            for c in enumerate_cohomological(desc):
                exps = standard_rep_parameter(c).exponents()
                assert sorted(-e for e in exps) == sorted(exps)
        # the two singleton subsets of U(2,1) give mirror images
        by_s = {
            tuple(sorted(c.S)): standard_rep_parameter(c)
            for c in enumerate_cohomological("U(2,1)")
        }
        flip = tuple(sorted((-t, m) for t, m in by_s[(1,)].entries))
        assert flip == tuple(sorted(by_s[(2,)].entries))


# ---------------------------------------------------------------------------
# twisted and weighted enumeration


class TestWeightedEnumeration:
    def test_gl_twisted_weight(self):
        lam = HalfIntVector.from_ints(2, 1, 0)
        (p,) = enumerate_gl_real(3, lam)
        assert p.text() == "s4[1]+w0[1]*nu^1"
        assert p.exponents() == [Fraction(3), Fraction(1), Fraction(-1)]

    def test_gl_rejects_bad_weights(self):
        with pytest.raises(InvalidWeightError):
            enumerate_gl_real(3, HalfIntVector.from_ints(0, 1, 0))
        with pytest.raises(InvalidWeightError):
            enumerate_gl_real(2, HalfIntVector.parse("1/2,0"))
        # not self-dual up to twist: exponent sums disagree
        with pytest.raises(InvalidWeightError):
            enumerate_gl_real(3, HalfIntVector.from_ints(5, 1, 0))

    def test_weighted_matches_subset_route(self):
        lam = HalfIntVector.from_ints(2, 1, -1, -2)
        s_route = sorted(
            standard_rep_parameter(c).text()
            for c in enumerate_cohomological("GL(4,R)", lam)
        )
        direct = sorted(p.text() for p in enumerate_gl_real(4, lam))
        cascade = sorted(p.text() for p in gl_cascade_parameters(4, lam))
        assert s_route == direct == cascade

    def test_sp_weighted(self):
        lam = HalfIntVector.from_ints(1, 1)
        s_route = sorted(
            standard_rep_parameter(c).text()
            for c in enumerate_cohomological("Sp(4,R)", lam)
        )
        exps = [Fraction(3), Fraction(2), Fraction(0), Fraction(-2), Fraction(-3)]
        direct = sorted(p.text() for p in enumerate_selfdual(exps, "orthogonal", 0))
        assert s_route == direct

    def test_coefficient_weight_roundtrip(self):
        for n in (2, 3, 4, 5, 6):
            for p in enumerate_gl_real(n):
                assert gl_coefficient_weight(p, n) == zero(n)
        lam = HalfIntVector.from_ints(2, 1, 0)
        for p in enumerate_gl_real(3, lam):
            assert gl_coefficient_weight(p, 3) == lam


# ---------------------------------------------------------------------------
# tempered companions


class TestTemperedCompanion:
    def test_sp4_companions_all_land_on_tempered_member(self):
        tempered = SP4_TABLE[()]
        for c in enumerate_cohomological("Sp(4,R)"):
            img = standard_rep_parameter(c)
            comp = tempered_companion(img)
            assert comp.text() == tempered, (sorted(c.S), comp.text())

    def test_so23_companions(self):
        tempered = SO23_TABLE[()]
        for c in enumerate_cohomological("SO(2,3)"):
            comp = tempered_companion(standard_rep_parameter(c))
            # symplectic: quad signs are free, compare up to the twist orbit
            assert comp.orbit_key() == parse_gl_parameter(tempered).orbit_key()

    def test_companion_preserves_exponents_and_det(self):
        for text in ("w0[5]", "s4[1]+w1[3]", "s3[2]+w0[1]", "w1[4]", "w0[7]"):
            p = parse_gl_parameter(text)
            c = tempered_companion(p)
            assert sorted(c.exponents()) == sorted(p.exponents())
            assert c.det_exponent == p.det_exponent
            assert all(
                a.m == 1 if isinstance(a, TwoDimAtom) else a.a == 1
                for a in c.atoms
            )

    def test_companion_rejects_colliding_atom(self):
        with pytest.raises(MathCheckError):
            tempered_companion(parse_gl_parameter("s1[2]"))


# ---------------------------------------------------------------------------
# routing between families


class TestRouting:
    def test_gl5_routes_to_sp4(self):
        golden = set(SP4_TABLE.values())
        for p in enumerate_gl_real(5):
            r = route_selfdual(p)
            assert r.target == "Sp(4,R)"
            assert r.normalized.det_exponent == 0
            assert r.normalized.text() in golden

    def test_gl4_routes_to_so23(self):
        for p in enumerate_gl_real(4):
            r = route_selfdual(p)
            assert r.target == "SO(2,3)"

    def test_mixed_and_twisted_do_not_route(self):
        assert route_selfdual(parse_gl_parameter("s1[1]+s2[1]")).target is None
        assert route_selfdual(parse_gl_parameter("s2[1]*nu^1")).target is None

    def test_even_orthogonal_discriminant_split(self):
        # determinant class selects the even orthogonal signature
        assert route_selfdual(parse_gl_parameter("s4[1]+w0[3]+w1[1]")).target == "SO(3,3)"
        assert route_selfdual(parse_gl_parameter("s4[1]+s2[1]+w0[1]+w1[1]")).target == "SO(4,2)"

    def test_odd_symplectic_impossible(self):
        # every symplectic atom has even dimension, so a symplectic-valued
        # parameter of odd dimension cannot even be written down
        for d in range(1, 5):
            for m in range(1, 5):
                a = TwoDimAtom(d, m)
                if a.is_symplectic:
                    assert a.dim % 2 == 0
        for eps in (0, 1):
            for ln in range(1, 7):
                q = QuadAtom(eps, ln)
                if q.is_symplectic:
                    assert q.dim % 2 == 0
        # mixing types blocks the route instead
        r = route_selfdual(parse_gl_parameter("s1[1]+w0[2]+w0[1]"))
        assert r.target is None and "mixed" in r.reason


# ---------------------------------------------------------------------------
# transfers


class TestTransfers:
    def test_weight_maps(self):
        so23 = build_classical_dual("SO(2,3)")
        sp4 = build_classical_dual("Sp(4,R)")
        gl3 = build_classical_dual("GL(3,R)")
        v = HalfIntVector.parse("3/2,1/2")
        assert str(transfer_weight("so-odd-to-gl", so23, v)) == "3/2,1/2,-1/2,-3/2"
        w = HalfIntVector.from_ints(2, 1)
        assert str(transfer_weight("sp-to-gl", sp4, w)) == "2,1,0,-1,-2"
        assert str(transfer_weight("sp-to-so-even", sp4, w)) == "2,1,0"
        u = HalfIntVector.from_ints(1, 0, -1)
        assert str(transfer_weight("gl-to-complex", gl3, u)) == "1,0,-1,1,0,-1"

    def test_weight_map_family_mismatch(self):
        gl3 = build_classical_dual("GL(3,R)")
        with pytest.raises(UnsupportedGroupError):
            transfer_weight("so-odd-to-gl", gl3, HalfIntVector.from_ints(1, 0, -1))
        with pytest.raises(UnsupportedGroupError):
            transfer_weight("nope", gl3, HalfIntVector.from_ints(1, 0, -1))

    def test_so_odd_to_gl_images(self):
        for c in enumerate_cohomological("SO(2,3)"):
            r = transfer_cohom(c, "so-odd-to-gl")
            assert r.target_group == "GL(4,R)"
            assert r.image_cohomological is True
            assert str(r.inf_char) == "3/2,1/2,-1/2,-3/2"
            assert r.image_regular

    def test_sp_to_gl_images(self):
        want = {
            (): "s4[1]+s2[1]+w0[1]",
            (1,): "s3[2]+w0[1]",
            (2,): "s4[1]+w1[3]",
            (1, 2): "w0[5]",
        }
        for c in enumerate_cohomological("Sp(4,R)"):
            r = transfer_cohom(c, "sp-to-gl")
            assert r.target_group == "GL(5,R)"
            assert r.parameter.text() == want[tuple(sorted(c.S))]
            assert r.image_cohomological is True

    def test_sp_to_so_even_images(self):
        rows = {}
        for c in enumerate_cohomological("Sp(4,R)"):
            r = transfer_cohom(c, "sp-to-so-even")
            rows[tuple(sorted(c.S))] = (
                r.target_group,
                r.parameter.text(),
                r.image_cohomological,
                "order-two twist" in r.notes,
            )
        # the appended line is always the trivial character
        assert rows[()] == ("SO(3,3)", "s4[1]+s2[1]+w0[1]+w0[1]", True, False)
        assert rows[(1,)] == ("SO(3,3)", "s3[2]+w0[1]+w0[1]", True, False)
        assert rows[(1, 2)] == ("SO(3,3)", "w0[5]+w0[1]", True, False)
        # the determinant-forced sign on the B side lands on the twist
        # partner of the enumerated member, and the note says so
        assert rows[(2,)] == ("SO(3,3)", "s4[1]+w1[3]+w0[1]", True, True)

    def test_sp_to_so_even_image_not_regular(self):
        c = enumerate_cohomological("Sp(4,R)")[0]
        r = transfer_cohom(c, "sp-to-so-even")
        # appended zero exponent collides with the existing one
        assert not r.parameter.is_regular
        assert r.image_regular  # but the orbit in D_3 coordinates is regular

    def test_gl_to_complex_images(self):
        want = {
            (): "e3/2[1]+e1/2[1]+e-1/2[1]+e-3/2[1]",
            (2,): "e3/2[1]+e0[2]+e-3/2[1]",
            (1, 3): "e1[2]+e-1[2]",
            (1, 2, 3): "e0[4]",
        }
        for c in enumerate_cohomological("GL(4,R)"):
            r = transfer_cohom(c, "gl-to-complex")
            assert r.target_group == "GL(4,C)"
            assert r.parameter.text() == want[tuple(sorted(c.S))]
            assert r.image_cohomological is True

    def test_transfer_rho_check_assertion_runs(self):
        # transporting any weight exercises the rho-check consistency gate
        sp6 = build_classical_dual("Sp(6,R)")
        for kind in ("sp-to-gl", "sp-to-so-even"):
            transfer_weight(kind, sp6, sp6.rho_check)


# ---------------------------------------------------------------------------
# central values


class TestCentralValue:
    def test_reports_on_golden_tables(self):
        for c in enumerate_cohomological("Sp(4,R)"):
            rep = central_value_report(standard_rep_parameter(c), c)
            assert rep.overall and rep.subset_side
        for c in enumerate_cohomological("U(2,1)"):
            rep = central_value_report(standard_rep_parameter(c), c)
            assert rep.overall and rep.subset_side

    def test_halfintegral_weight_fails_parity(self):
        # s2 alone corresponds to the weight (1/2,-1/2): not integral
        rep = central_value_report(parse_gl_parameter("s2[1]"))
        assert not rep.overall
        assert rep.subset_side is None

    def test_parity_is_per_atom(self):
        rep = central_value_report(parse_gl_parameter("s3[1]+w0[2]"))
        assert rep.overall
        # s3 against N=3 fails (d+m even), the quad line passes
        rep = central_value_report(parse_gl_parameter("s3[1]+w0[1]"))
        assert rep.per_atom == (False, True)


class TestUnitaryRelevance:
    def test_u21_trivial_flagged(self):
        ok, why = unitary_relevance(parse_complex_parameter("e0[3]"), 2, 1)
        assert not ok
        assert "exceeds" in why

    def test_u21_others_fine(self):
        for text in U21_TABLE.values():
            if text == "e0[3]":
                continue
            ok, _ = unitary_relevance(parse_complex_parameter(text), 2, 1)
            assert ok

    def test_balanced_always_fine(self):
        for c in enumerate_cohomological("U(2,2)"):
            ok, _ = unitary_relevance(standard_rep_parameter(c), 2, 2)
            assert ok


# ---------------------------------------------------------------------------
# property tests


@st.composite
def dominant_integral_weight(draw):
    n = draw(st.integers(min_value=1, max_value=6))
    steps = draw(st.lists(st.integers(min_value=0, max_value=2), min_size=n, max_size=n))
    tail = draw(st.integers(min_value=-2, max_value=2))
    vals = []
    acc = tail
    for s in steps:
        acc += s
        vals.append(acc)
    return HalfIntVector.from_ints(*reversed(vals))


class TestProperties:
    @settings(max_examples=60, deadline=None)
    @given(dominant_integral_weight())
    def test_gl_direct_enumeration_invariants(self, lam):
        n = len(lam)
        big = sorted(
            (e + Fraction(n - 1 - 2 * i, 2) for i, e in enumerate(lam)),
            reverse=True,
        )
        try:
            params = enumerate_gl_real(n, lam)
        except InvalidWeightError:
            # not self-dual up to twist: nothing to check
            return
        assert params, lam
        texts = set()
        for p in params:
            assert p.dimension == n
            assert sorted(p.exponents(), reverse=True) == big
            assert p.is_regular
            assert p.is_multiplicity_free
            assert p.text() not in texts
            texts.add(p.text())
            assert parse_gl_parameter(p.text()).text() == p.text()
        assert sorted(p.text() for p in gl_cascade_parameters(n, lam)) == sorted(texts)

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(["GL(5,R)", "GL(6,R)", "Sp(4,R)", "Sp(6,R)", "SO(2,3)",
                            "SO(4,3)", "SO(2,4)", "SO(3,3)", "U(2,1)", "U(2,2)",
                            "GL(3,C)", "GL(4,C)"]),
           st.integers(min_value=0, max_value=30))
    def test_subset_route_structural_invariants(self, desc, seed):
        params = enumerate_cohomological(desc)
        c = params[seed % len(params)]
        img = standard_rep_parameter(c)
        datum = c.datum
        # dimensions: A-types keep n, B adds the zero line, C/D double
        fam = datum.family
        n = datum.ambient_dim
        expected = {"GL_R": n, "SL_R": n, "U": n, "GL_C": n // 2,
                    "Sp_R": 2 * n + 1, "SO_odd": 2 * n, "SO_even": 2 * n}[fam]
        assert img.dimension == expected
        # exponent multiset of the image is the family embedding of the
        # infinitesimal character lam + rho-check = chi + half the sl2 part
        inf = [
            x + Fraction(h, 2)
            for x, h in zip(list(c.chi_exponent), list(c.sl2_cochar))
        ]
        if fam in ("GL_R", "SL_R", "U"):
            want = inf
        elif fam == "GL_C":
            want = inf[: n // 2]
        elif fam == "Sp_R":
            want = inf + [-x for x in inf] + [Fraction(0)]
        else:
            want = inf + [-x for x in inf]
        assert sorted(img.exponents()) == sorted(want)
        # the subset-side character is regular within its factor
        slab = inf[: n // 2] if fam == "GL_C" else inf
        assert len(set(slab)) == len(slab)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=1, max_value=7))
    def test_counts(self, n):
        assert len(enumerate_gl_real(n)) == 2 ** (n // 2)
        assert len(enumerate_complex_cohomological(n)) == 2 ** (n - 1)
