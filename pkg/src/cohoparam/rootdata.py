"""Based root data for duals of classical real groups.

Supported groups (descriptor grammar, ASCII, case-insensitive):

    GL(n,R) | GL(n,C) | SL(n,R) | U(p,q) | Sp(2n,R) | SO(p,q)

`build_classical_dual` returns the based root datum of the complex dual
group in epsilon-coordinates, together with the Galois action on the
Dynkin diagram determined by the real form.  Simple roots are numbered
1..rank in the usual (Bourbaki) order, factor by factor.

Three diagram involutions matter downstream:

* ``gamma``  -- the Galois involution of the quasi-split inner form;
* ``iota``   -- the opposition involution (-w0 as a linear map);
* ``theta``  -- iota o gamma; a standard parabolic is *self-associate*
  exactly when theta preserves its simple-root subset.

Everything is exact: coordinates are `HalfIntVector`s, linear solves run
over `fractions.Fraction`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Mapping

from .errors import InvalidWeightError, MathCheckError, UnsupportedGroupError
from .halfint import HalfIntVector, solve_rational

__all__ = [
    "AmbientMap",
    "Factor",
    "RootDatum",
    "StandardParabolic",
    "PrincipalSL2",
    "EpsilonElement",
    "build_classical_dual",
    "parse_group",
    "opposition_involution",
    "is_self_associate",
    "principal_sl2_coefficients",
    "epsilon_element",
    "expand_in_basis",
    "dominant_orbit_rep",
    "is_regular_orbit",
]


# ---------------------------------------------------------------------------
# linear maps on the ambient coordinate space


@dataclass(frozen=True)
class AmbientMap:
    """A signed coordinate permutation: e_i |-> signs[i] * e_{perm[i]}."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "AmbientMap":
        return cls(tuple(range(n)), (1,) * n)

    def apply(self, v: HalfIntVector) -> HalfIntVector:
        out = [0] * len(self.perm)
        for i, t in enumerate(v.twice):
            out[self.perm[i]] = self.signs[i] * t
        return HalfIntVector(tuple(out))

    def compose(self, other: "AmbientMap") -> "AmbientMap":
        """self o other (apply `other` first)."""
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        signs = tuple(
            other.signs[i] * self.signs[other.perm[i]] for i in range(len(self.perm))
        )
        return AmbientMap(perm, signs)

    def inverse(self) -> "AmbientMap":
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i in range(n):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return AmbientMap(tuple(perm), tuple(signs))

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm)) and all(
            s == 1 for s in self.signs
        )


# ---------------------------------------------------------------------------
# factors and the datum


@dataclass(frozen=True)
class Factor:
    """One simple (or torus) factor of the dual group, in local coordinates.

    ``cartan`` is the Dynkin type of the factor ('A', 'B', 'C', 'D'),
    ``rank`` the number of simple roots, ``dim`` the number of ambient
    coordinates the factor occupies, ``offset`` its first coordinate.
    ``flavor`` fixes the (co)character lattice: 'GL' and 'Adjoint' for
    type A, 'SO' for types B/D, 'Sp' for type C.
    """

    cartan: str
    rank: int
    dim: int
    offset: int
    flavor: str


def _local_simple_roots(f: Factor) -> list[tuple[list[int], list[int]]]:
    """(root, coroot) pairs for the simple roots, as integer coordinate lists."""
    n = f.dim
    out: list[tuple[list[int], list[int]]] = []

    def e(i: int, c: int = 1) -> list[int]:
        v = [0] * n
        v[i] = c
        return v

    def diff(i: int) -> list[int]:
        v = [0] * n
        v[i] = 1
        v[i + 1] = -1
        return v

    if f.cartan == "A":
        for i in range(f.rank):
            out.append((diff(i), diff(i)))
    elif f.cartan == "B":
        for i in range(f.rank - 1):
            out.append((diff(i), diff(i)))
        out.append((e(n - 1, 1), e(n - 1, 2)))
    elif f.cartan == "C":
        for i in range(f.rank - 1):
            out.append((diff(i), diff(i)))
        out.append((e(n - 1, 2), e(n - 1, 1)))
    elif f.cartan == "D":
        if f.rank >= 2:
            for i in range(f.rank - 1):
                out.append((diff(i), diff(i)))
            v = [0] * n
            v[n - 2] = 1
            v[n - 1] = 1
            out.append((v, v))
        # rank <= 1 in type D means SO(2): a torus, no roots.
    else:
        raise ValueError(f"unknown Cartan type {f.cartan!r}")
    return out


def _local_positive_roots(f: Factor) -> list[tuple[list[int], list[int]]]:
    n = f.dim
    out: list[tuple[list[int], list[int]]] = []

    def vec(items: dict[int, int]) -> list[int]:
        v = [0] * n
        for i, c in items.items():
            v[i] = c
        return v

    if f.cartan == "A":
        for i in range(n):
            for j in range(i + 1, n):
                r = vec({i: 1, j: -1})
                out.append((r, r))
    elif f.cartan in ("B", "C", "D"):
        for i in range(n):
            for j in range(i + 1, n):
                r = vec({i: 1, j: -1})
                out.append((r, r))
                r = vec({i: 1, j: 1})
                out.append((r, r))
        if f.cartan == "B":
            for i in range(n):
                out.append((vec({i: 1}), vec({i: 2})))
        elif f.cartan == "C":
            for i in range(n):
                out.append((vec({i: 2}), vec({i: 1})))
    else:
        raise ValueError(f"unknown Cartan type {f.cartan!r}")
    return out


def _embed(local: list[int], offset: int, total: int) -> HalfIntVector:
    v = [0] * total
    v[offset : offset + len(local)] = local
    return HalfIntVector.from_ints(*v)


@dataclass(frozen=True)
class RootDatum:
    """Based root datum of the dual group, plus the Galois diagram action.

    ``galois_index`` maps 1-based simple-root indices; ``galois_linear``
    is the corresponding signed coordinate permutation (the identity for
    split forms, -w0 for U(p,q), the factor swap for GL(n,C), the last
    sign flip for non-inner-split even SO).
    """

    descriptor: str
    family: str
    factors: tuple[Factor, ...]
    galois_index: tuple[int, ...]
    galois_linear: AmbientMap
    signature: tuple[int, int] | None = None

    # -- coordinates -------------------------------------------------------

    @property
    def ambient_dim(self) -> int:
        return sum(f.dim for f in self.factors)

    @cached_property
    def simple_roots(self) -> tuple[HalfIntVector, ...]:
        total = self.ambient_dim
        out = []
        for f in self.factors:
            for root, _ in _local_simple_roots(f):
                out.append(_embed(root, f.offset, total))
        return tuple(out)

    @cached_property
    def simple_coroots(self) -> tuple[HalfIntVector, ...]:
        total = self.ambient_dim
        out = []
        for f in self.factors:
            for _, coroot in _local_simple_roots(f):
                out.append(_embed(coroot, f.offset, total))
        return tuple(out)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def alpha(self, i: int) -> HalfIntVector:
        """Simple root by 1-based index."""
        return self.simple_roots[i - 1]

    def alpha_check(self, i: int) -> HalfIntVector:
        return self.simple_coroots[i - 1]

    @cached_property
    def positive_roots(self) -> tuple[tuple[HalfIntVector, HalfIntVector], ...]:
        total = self.ambient_dim
        out = []
        for f in self.factors:
            for root, coroot in _local_positive_roots(f):
                out.append((_embed(root, f.offset, total), _embed(coroot, f.offset, total)))
        return tuple(out)

    @cached_property
    def rho(self) -> HalfIntVector:
        acc = HalfIntVector((0,) * self.ambient_dim)
        for root, _ in self.positive_roots:
            acc = acc + root
        return acc.scale(1, 2)

    @cached_property
    def rho_check(self) -> HalfIntVector:
        acc = HalfIntVector((0,) * self.ambient_dim)
        for _, coroot in self.positive_roots:
            acc = acc + coroot
        return acc.scale(1, 2)

    def pairing(self, i: int, j: int) -> Fraction:
        """<alpha_i, alpha_j-check> for 1-based indices."""
        return self.alpha(i).dot(self.alpha_check(j))

    def cartan_matrix(self, subset: Iterable[int] | None = None) -> list[list[Fraction]]:
        idx = sorted(subset) if subset is not None else list(range(1, self.rank + 1))
        return [[self.pairing(i, j) for j in idx] for i in idx]

    # -- diagram involutions -------------------------------------------------

    @cached_property
    def iota_linear(self) -> AmbientMap:
        """-w0, factor by factor."""
        perm: list[int] = []
        signs: list[int] = []
        for f in self.factors:
            if f.cartan == "A":
                perm.extend(f.offset + f.dim - 1 - k for k in range(f.dim))
                signs.extend([-1] * f.dim)
            elif f.cartan in ("B", "C") or (f.cartan == "D" and f.rank % 2 == 0):
                perm.extend(f.offset + k for k in range(f.dim))
                signs.extend([1] * f.dim)
            elif f.cartan == "D":  # odd rank: -w0 flips the last coordinate
                perm.extend(f.offset + k for k in range(f.dim))
                signs.extend([1] * (f.dim - 1) + [-1])
            else:
                raise ValueError(f.cartan)
        return AmbientMap(tuple(perm), tuple(signs))

    def _index_map(self, linear: AmbientMap) -> tuple[int, ...]:
        out = []
        for i in range(1, self.rank + 1):
            image = linear.apply(self.alpha(i))
            for j in range(1, self.rank + 1):
                if image == self.alpha(j):
                    out.append(j)
                    break
            else:
                raise MathCheckError(
                    f"{self.descriptor}: diagram map does not permute simple roots"
                )
        return tuple(out)

    @cached_property
    def iota_index(self) -> tuple[int, ...]:
        return self._index_map(self.iota_linear)

    @cached_property
    def theta_linear(self) -> AmbientMap:
        return self.iota_linear.compose(self.galois_linear)

    @cached_property
    def theta_index(self) -> tuple[int, ...]:
        return self._index_map(self.theta_linear)

    def theta(self, i: int) -> int:
        return self.theta_index[i - 1]

    def theta_subset(self, s: Iterable[int]) -> frozenset[int]:
        return frozenset(self.theta(i) for i in s)

    # -- lattices ------------------------------------------------------------

    def weight_is_integral(self, v: HalfIntVector) -> bool:
        """Is v in the (co)character lattice declared by the flavors?"""
        if len(v) != self.ambient_dim:
            raise ValueError("weight has wrong length")
        for f in self.factors:
            seg = v.twice[f.offset : f.offset + f.dim]
            if f.flavor == "Adjoint":
                # weights mod the central direction: entries congruent mod 1
                if any((t - seg[0]) % 2 != 0 for t in seg):
                    return False
            else:
                if any(t % 2 != 0 for t in seg):
                    return False
        return True


# ---------------------------------------------------------------------------
# descriptor parsing and construction

_GROUP_RE = re.compile(
    r"^\s*(GL|SL|U|SP|SO)\s*\(\s*(\d+)\s*,\s*(\d+|R|C)\s*\)\s*$", re.IGNORECASE
)


def parse_group(descriptor: str) -> tuple[str, int, int | str]:
    """Parse a group descriptor into (family, first, second).

    Accepted: GL(n,R) GL(n,C) SL(n,R) U(p,q) Sp(2n,R) SO(p,q).
    """
    m = _GROUP_RE.match(descriptor)
    if not m:
        raise UnsupportedGroupError(
            f"cannot parse group descriptor {descriptor!r}; expected one of "
            "GL(n,R), GL(n,C), SL(n,R), U(p,q), Sp(2n,R), SO(p,q)"
        )
    kind = m.group(1).upper()
    first = int(m.group(2))
    second_raw = m.group(3).upper()
    second: int | str = int(second_raw) if second_raw.isdigit() else second_raw

    if kind in ("GL", "SL"):
        if not isinstance(second, str):
            raise UnsupportedGroupError(
                f"{descriptor!r}: second argument of {kind} must be R or C"
            )
        if kind == "SL" and second == "C":
            raise UnsupportedGroupError("SL(n,C) is not supported; use GL(n,C)")
        if first < 1:
            raise UnsupportedGroupError(f"{descriptor!r}: need n >= 1")
    elif kind == "SP":
        if second != "R":
            raise UnsupportedGroupError(f"{descriptor!r}: expected Sp(2n,R)")
        if first < 2 or first % 2 != 0:
            raise UnsupportedGroupError(f"{descriptor!r}: Sp needs an even rank 2n >= 2")
    else:  # U, SO
        if not isinstance(second, int):
            raise UnsupportedGroupError(f"{descriptor!r}: expected two integers")
        if first + second < 1:
            raise UnsupportedGroupError(f"{descriptor!r}: empty signature")
    return kind, first, second


def _canonical(kind: str, first: int, second: int | str) -> str:
    name = {"GL": "GL", "SL": "SL", "U": "U", "SP": "Sp", "SO": "SO"}[kind]
    return f"{name}({first},{second})"


def build_classical_dual(descriptor: str) -> RootDatum:
    """Based root datum of the complex dual group of a classical real group.

    The Galois diagram action is derived from the descriptor:
    trivial for split forms, the A-flip for U(p,q), the coordinate swap
    for GL(n,C), and for even SO(p,q) the last sign flip exactly when the
    form is not an inner form of the split one (q odd differs from
    (p+q)/2 odd).  SO(p,q) with p+q = 8 and p,q odd is rejected: that is
    the signature whose diagram action is triality-ambiguous.
    """
    kind, first, second = parse_group(descriptor)
    canon = _canonical(kind, first, second)

    if kind in ("GL", "SL") and second == "R":
        n = first
        flavor = "GL" if kind == "GL" else "Adjoint"
        f = Factor("A", n - 1, n, 0, flavor)
        return RootDatum(
            descriptor=canon,
            family="GL_R" if kind == "GL" else "SL_R",
            factors=(f,),
            galois_index=tuple(range(1, n)),
            galois_linear=AmbientMap.identity(n),
        )

    if kind == "GL" and second == "C":
        n = first
        f1 = Factor("A", n - 1, n, 0, "GL")
        f2 = Factor("A", n - 1, n, n, "GL")
        swap = AmbientMap(
            tuple(list(range(n, 2 * n)) + list(range(n))), (1,) * (2 * n)
        )
        # the swap sends factor-1 node i to factor-2 node i
        galois_index = tuple(
            list(range(n, 2 * n - 1)) + list(range(1, n))
        )
        return RootDatum(
            descriptor=canon,
            family="GL_C",
            factors=(f1, f2),
            galois_index=galois_index,
            galois_linear=swap,
        )

    if kind == "U":
        p, q = first, second
        n = p + q
        f = Factor("A", n - 1, n, 0, "GL")
        flip = AmbientMap(tuple(range(n - 1, -1, -1)), (-1,) * n)
        return RootDatum(
            descriptor=canon,
            family="U",
            factors=(f,),
            galois_index=tuple(range(n - 1, 0, -1)),
            galois_linear=flip,
            signature=(p, q),
        )

    if kind == "SP":
        n = first // 2
        f = Factor("B", n, n, 0, "SO")
        return RootDatum(
            descriptor=canon,
            family="Sp_R",
            factors=(f,),
            galois_index=tuple(range(1, n + 1)),
            galois_linear=AmbientMap.identity(n),
        )

    # SO(p,q)
    p, q = first, second
    total = p + q
    if total % 2 == 1:
        n = total // 2
        f = Factor("C", n, n, 0, "Sp")
        return RootDatum(
            descriptor=canon,
            family="SO_odd",
            factors=(f,),
            galois_index=tuple(range(1, n + 1)),
            galois_linear=AmbientMap.identity(n),
            signature=(p, q),
        )
    n = total // 2
    if total == 8 and p % 2 == 1:
        raise UnsupportedGroupError(
            "SO(p,q) with p+q=8 and p,q odd: the outer diagram action is "
            "triality-ambiguous and not supported"
        )
    inner_of_split = q % 2 == n % 2
    n_roots = n if n >= 2 else 0
    if inner_of_split:
        galois_linear = AmbientMap.identity(n)
        galois_index = tuple(range(1, n_roots + 1))
    else:
        galois_linear = AmbientMap(
            tuple(range(n)), (1,) * (n - 1) + (-1,) if n >= 1 else ()
        )
        # the last sign flip swaps the fork nodes e_{n-1}-e_n <-> e_{n-1}+e_n
        galois_index = tuple(
            list(range(1, n_roots - 1)) + [n_roots, n_roots - 1]
        ) if n_roots >= 2 else ()
    f = Factor("D", n, n, 0, "SO")
    return RootDatum(
        descriptor=canon,
        family="SO_even",
        factors=(f,),
        galois_index=galois_index,
        galois_linear=galois_linear,
        signature=(p, q),
    )


# ---------------------------------------------------------------------------
# parabolics


@lru_cache(maxsize=None)
def _positive_root_supports(datum: RootDatum) -> tuple[frozenset[int], ...]:
    """Simple-root support of each positive root, in enumeration order.

    The expansion does not depend on any Levi subset, so it is computed
    once per datum; per-subset filtering stays uncached.
    """
    simples = list(datum.simple_roots)
    supports = []
    for root, _ in datum.positive_roots:
        coeffs = expand_in_basis(simples, root)
        if coeffs is None:
            raise MathCheckError("positive root outside simple-root span")
        supports.append(frozenset(i + 1 for i, c in enumerate(coeffs) if c != 0))
    return tuple(supports)


@dataclass(frozen=True)
class StandardParabolic:
    """A standard parabolic of the dual group, named by its Levi subset S.

    S contains 1-based simple-root indices.  The Levi's rho-check is
    recomputed from the subsystem on every access; it is never cached,
    so S mutations via `replace` cannot leave a stale value.
    """

    datum: RootDatum
    S: frozenset[int]

    def __post_init__(self) -> None:
        bad = [i for i in self.S if not 1 <= i <= self.datum.rank]
        if bad:
            raise ValueError(
                f"Levi subset {sorted(self.S)} out of range 1..{self.datum.rank}"
            )

    def levi_positive(self) -> list[tuple[HalfIntVector, HalfIntVector]]:
        """Positive roots of the Levi: those supported on S."""
        supports = _positive_root_supports(self.datum)
        return [
            pair
            for pair, support in zip(self.datum.positive_roots, supports)
            if support <= self.S
        ]

    @property
    def rho_check_levi(self) -> HalfIntVector:
        acc = HalfIntVector((0,) * self.datum.ambient_dim)
        for _, coroot in self.levi_positive():
            acc = acc + coroot
        return acc.scale(1, 2)

    @property
    def rho_levi(self) -> HalfIntVector:
        acc = HalfIntVector((0,) * self.datum.ambient_dim)
        for root, _ in self.levi_positive():
            acc = acc + root
        return acc.scale(1, 2)


def opposition_involution(datum: RootDatum) -> tuple[tuple[int, ...], AmbientMap]:
    """The opposition involution: (1-based index map, linear -w0)."""
    return datum.iota_index, datum.iota_linear


def is_self_associate(parabolic: StandardParabolic) -> bool:
    """Is the standard parabolic conjugate to its opposite in the full dual?

    Combinatorially: does iota o gamma preserve the Levi subset S.
    """
    return parabolic.datum.theta_subset(parabolic.S) == parabolic.S


# ---------------------------------------------------------------------------
# principal SL2 coefficients


@dataclass(frozen=True)
class PrincipalSL2:
    """Solution of the principal-SL2 linear system on a Levi subset.

    ``coeffs[alpha]`` are the unique rationals with
    sum_beta coeffs[beta] * <alpha, beta-check> = 2 for every alpha in S;
    the semisimple element is sum coeffs[beta] * beta-check = 2 rho_check_L.
    ``t_assignment`` satisfies t[alpha] * t[phi(alpha)] = coeffs[alpha]
    for the supplied diagram involution phi; indices in ``needs_sqrt``
    are phi-fixed, and their recorded value is coeffs[alpha] itself
    (a consumer takes the square root).
    """

    subset: tuple[int, ...]
    coeffs: Mapping[int, Fraction]
    t_assignment: Mapping[int, Fraction]
    needs_sqrt: frozenset[int]


def principal_sl2_coefficients(
    parabolic: StandardParabolic,
    phi: Callable[[int], int] | Mapping[int, int] | None = None,
) -> PrincipalSL2:
    """Coefficients of the principal SL2 of the Levi on simple coroots.

    Solves sum_{beta in S} a_beta <alpha, beta-check> = 2 (alpha in S)
    exactly, re-checks the residual, verifies the expansion
    sum a_beta beta-check = 2 rho_check_L, and, when a diagram involution
    phi preserving S is supplied, verifies a_alpha = a_{phi(alpha)} and
    builds a t-assignment with t_alpha t_{phi(alpha)} = a_alpha.
    """
    datum = parabolic.datum
    idx = sorted(parabolic.S)
    if phi is not None and not callable(phi):
        table = dict(phi)
        phi = table.__getitem__

    if not idx:
        return PrincipalSL2((), {}, {}, frozenset())

    rows = [[datum.pairing(i, j) for j in idx] for i in idx]
    rhs = [Fraction(2)] * len(idx)
    sol = solve_rational(rows, rhs)
    if sol is None:
        raise MathCheckError(f"Cartan matrix of {idx} is singular")
    coeffs = {i: a for i, a in zip(idx, sol)}

    # residual must vanish identically
    for r, row in enumerate(rows):
        res = sum(row[c] * sol[c] for c in range(len(idx))) - 2
        if res != 0:
            raise MathCheckError(f"principal SL2 system residual {res} at {idx[r]}")

    # the semisimple element is exactly 2 rho_check of the Levi
    acc = HalfIntVector((0,) * datum.ambient_dim)
    for i in idx:
        scaled = datum.alpha_check(i).scale(coeffs[i].numerator, coeffs[i].denominator)
        acc = acc + scaled
    if acc != parabolic.rho_check_levi.scale(2):
        raise MathCheckError(
            f"sum a_beta beta-check != 2 rho_check_L on {idx} of {datum.descriptor}"
        )

    t: dict[int, Fraction] = {}
    fixed: set[int] = set()
    if phi is None:
        fixed.update(idx)
        t.update(coeffs)
    else:
        image = {i: phi(i) for i in idx}
        if set(image.values()) != set(idx):
            raise ValueError(f"phi does not preserve the subset {idx}")
        for i in idx:
            j = image[i]
            if coeffs[i] != coeffs[j]:
                raise MathCheckError(
                    f"phi-symmetry fails: a_{i}={coeffs[i]} but a_{j}={coeffs[j]}"
                )
            if j == i:
                fixed.add(i)
                t[i] = coeffs[i]
            elif j > i:
                t[i] = coeffs[i]
                t[j] = Fraction(1)
    return PrincipalSL2(tuple(idx), coeffs, t, frozenset(fixed))


# ---------------------------------------------------------------------------
# the canonical central element epsilon = 2 rho-check(-1)


@dataclass(frozen=True)
class EpsilonElement:
    """The order-<=2 central element 2 rho-check(-1) as a parity functional."""

    datum: RootDatum
    two_rho_check: HalfIntVector

    def sign(self, mu: HalfIntVector) -> int:
        """(-1)^{<2 rho-check, mu>}; mu must pair integrally."""
        val = self.two_rho_check.dot(mu)
        if val.denominator != 1:
            raise InvalidWeightError(
                f"<2 rho-check, {mu}> = {val} is not an integer"
            )
        return -1 if val % 2 else 1

    @property
    def is_trivial(self) -> bool:
        """Does the parity functional vanish on the declared weight lattice?"""
        for f in self.datum.factors:
            seg = self.two_rho_check.twice[f.offset : f.offset + f.dim]
            if f.flavor == "Adjoint":
                # root lattice: only differences of coordinates pair
                if any((seg[k] - seg[0]) // 2 % 2 for k in range(len(seg))):
                    return False
            else:
                if any((t // 2) % 2 for t in seg):
                    return False
        return True


def epsilon_element(datum: RootDatum) -> EpsilonElement:
    two_rc = datum.rho_check.scale(2)
    if not two_rc.is_integral:
        raise MathCheckError("2 rho-check must be integral")
    return EpsilonElement(datum, two_rc)


# ---------------------------------------------------------------------------
# small exact linear helpers


def expand_in_basis(
    basis: list[HalfIntVector], target: HalfIntVector
) -> list[Fraction] | None:
    """Coefficients of `target` in the linearly independent `basis`, or None.

    Works for overdetermined coordinates (ambient dim > len(basis)).
    """
    if not basis:
        return [] if target.is_zero else None
    dim = len(target)
    cols = len(basis)
    a = [[Fraction(b.twice[r], 2) for b in basis] + [Fraction(target.twice[r], 2)] for r in range(dim)]
    pivot_rows: list[int] = []
    row = 0
    for col in range(cols):
        pr = next((r for r in range(row, dim) if a[r][col] != 0), None)
        if pr is None:
            return None  # basis not independent; callers pass simple roots
        a[row], a[pr] = a[pr], a[row]
        inv = a[row][col]
        a[row] = [x / inv for x in a[row]]
        for r in range(dim):
            if r != row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivot_rows.append(row)
        row += 1
    # consistency: rows below the pivots must have zero rhs
    for r in range(row, dim):
        if a[r][cols] != 0:
            return None
    return [a[k][cols] for k in range(cols)]


# ---------------------------------------------------------------------------
# Weyl-orbit normal forms (used by infinitesimal characters)


def dominant_orbit_rep(datum: RootDatum, v: HalfIntVector) -> HalfIntVector:
    """The dominant representative of W.v, factor by factor.

    Type A sorts; B/C sort absolute values; D sorts absolute values and
    pushes the orbit's sign-product onto the final coordinate.
    """
    out: list[int] = []
    for f in datum.factors:
        seg = list(v.twice[f.offset : f.offset + f.dim])
        if f.cartan == "A":
            seg.sort(reverse=True)
        elif f.cartan in ("B", "C"):
            seg = sorted((abs(t) for t in seg), reverse=True)
        elif f.cartan == "D":
            neg = sum(1 for t in seg if t < 0)
            has_zero = any(t == 0 for t in seg)
            seg = sorted((abs(t) for t in seg), reverse=True)
            if neg % 2 == 1 and not has_zero and seg:
                seg[-1] = -seg[-1]
        out.extend(seg)
    return HalfIntVector(tuple(out))


def is_regular_orbit(datum: RootDatum, v: HalfIntVector) -> bool:
    """Is the W-stabilizer of v trivial (equivalently: no root pairs to zero)?"""
    for f in datum.factors:
        seg = list(v.twice[f.offset : f.offset + f.dim])
        if f.cartan == "A":
            if len(set(seg)) != len(seg):
                return False
        elif f.cartan in ("B", "C"):
            a = [abs(t) for t in seg]
            if len(set(a)) != len(a) or 0 in a:
                return False
        elif f.cartan == "D":
            a = [abs(t) for t in seg]
            if len(set(a)) != len(a) or a.count(0) > 1:
                return False
    return True
