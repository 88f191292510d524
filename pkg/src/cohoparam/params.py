"""Parameters and their arithmetic atoms.

Two coordinate systems meet here:

* the *subset side*: a self-associate set S of simple roots of the dual
  group plus a compatible twisting weight, packaged as `CohomParameter`;
* the *atom side*: formal sums of two-dimensional pieces s{d}[m] and
  one-dimensional pieces w{eps}[a], packaged as `GLParameter` (self-dual
  coefficient field R) or `ComplexParameter` (pairs (d, m) over C).

`standard_rep_parameter` maps the first to the second by pushing the
(exponent, sl2-weight) data of each coordinate through the standard
representation of the dual group and splitting the result into strings.
Independent direct enumerations (`enumerate_gl_real`,
`enumerate_selfdual`, `enumerate_complex_cohomological`) recover the same
sets from the infinitesimal character alone, which is what the test suite
leans on.

Conventions:

* s{d}[m] is irreducible two-dimensional with exponents +-d/2, tensored
  with the m-dimensional sl2 piece; it is symplectic iff exactly one of
  (d odd), (m even) holds; its determinant is w^(m) when d is even and
  trivial when d is odd.
* w{eps}[a] is the one-dimensional character with sign eps tensored with
  [a]; symplectic iff a is even; determinant w^(eps*a).
* a global half-integral twist nu^b is stored doubled (`twist2 = 2b`) and
  shifts every exponent by b.
* where a sign eps is genuinely free (symplectic-valued parameters, and
  even-signature zero pairs), the canonical choice is eps = 0 and the
  parameter carries `omega_pair = True`; where the determinant class pins
  it down, it is solved for.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidWeightError,
    MathCheckError,
    UnsupportedGroupError,
)
from .halfint import HalfIntVector
from .rootdata import (
    RootDatum,
    StandardParabolic,
    build_classical_dual,
    dominant_orbit_rep,
    is_regular_orbit,
    is_self_associate,
)

__all__ = [
    "TwoDimAtom",
    "QuadAtom",
    "GLParameter",
    "ComplexParameter",
    "CohomParameter",
    "parse_gl_parameter",
    "parse_complex_parameter",
    "enumerate_cohomological",
    "standard_rep_parameter",
    "enumerate_gl_real",
    "enumerate_selfdual",
    "gl_cascade_parameters",
    "enumerate_complex_cohomological",
    "gl_coefficient_weight",
    "tempered_companion",
    "route_selfdual",
    "RouteResult",
    "transfer_weight",
    "transfer_cohom",
    "TransferResult",
    "TRANSFER_KINDS",
    "central_value_report",
    "CentralReport",
    "unitary_relevance",
]


# ---------------------------------------------------------------------------
# atoms


@dataclass(frozen=True, order=True)
class TwoDimAtom:
    """s{d}[m]: the two-dimensional piece with exponents +-d/2 times [m]."""

    d: int
    m: int

    def __post_init__(self) -> None:
        if self.d < 1 or self.m < 1:
            raise ValueError(f"bad atom s{self.d}[{self.m}]")

    @property
    def dim(self) -> int:
        return 2 * self.m

    @property
    def is_symplectic(self) -> bool:
        return (self.d % 2 == 1) != (self.m % 2 == 0)

    @property
    def det_exponent(self) -> int:
        return self.m % 2 if self.d % 2 == 0 else 0

    def exponents(self) -> list[Fraction]:
        out = []
        for k in range(self.m):
            shift = Fraction(self.m - 1 - 2 * k, 2)
            out.append(Fraction(self.d, 2) + shift)
            out.append(Fraction(-self.d, 2) + shift)
        return out

    def text(self) -> str:
        return f"s{self.d}[{self.m}]"


@dataclass(frozen=True, order=True)
class QuadAtom:
    """w{eps}[a]: the order-two character to the eps times [a]."""

    eps: int
    a: int

    def __post_init__(self) -> None:
        if self.eps not in (0, 1) or self.a < 1:
            raise ValueError(f"bad atom w{self.eps}[{self.a}]")

    @property
    def dim(self) -> int:
        return self.a

    @property
    def is_symplectic(self) -> bool:
        return self.a % 2 == 0

    @property
    def det_exponent(self) -> int:
        return (self.eps * self.a) % 2

    def exponents(self) -> list[Fraction]:
        return [Fraction(self.a - 1 - 2 * k, 2) for k in range(self.a)]

    def text(self) -> str:
        return f"w{self.eps}[{self.a}]"


Atom = TwoDimAtom | QuadAtom


def _atom_sort_key(atom: Atom) -> tuple:
    if isinstance(atom, TwoDimAtom):
        return (0, -atom.d, -atom.m, 0)
    return (1, -atom.a, atom.eps, 0)


# ---------------------------------------------------------------------------
# self-dual (real-coefficient) parameters


@dataclass(frozen=True)
class GLParameter:
    """A formal sum of atoms, optionally twisted by nu^(twist2/2).

    The constructor is permissive: it sorts the atoms canonically and
    checks only the atoms' own field ranges.  Semantic health (regular
    infinitesimal character, multiplicity freeness, self-duality type)
    is exposed through predicates so callers can decide what to require.
    """

    atoms: tuple[Atom, ...]
    twist2: int = 0
    omega_pair: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "atoms", tuple(sorted(self.atoms, key=_atom_sort_key))
        )

    @property
    def dimension(self) -> int:
        return sum(a.dim for a in self.atoms)

    @property
    def det_exponent(self) -> int:
        return sum(a.det_exponent for a in self.atoms) % 2

    @property
    def is_multiplicity_free(self) -> bool:
        return len(set(self.atoms)) == len(self.atoms)

    def exponents(self) -> list[Fraction]:
        shift = Fraction(self.twist2, 2)
        out = []
        for a in self.atoms:
            out.extend(e + shift for e in a.exponents())
        return sorted(out, reverse=True)

    @property
    def is_regular(self) -> bool:
        exps = self.exponents()
        return len(set(exps)) == len(exps)

    @property
    def selfdual_type(self) -> str:
        """'orthogonal' | 'symplectic' | 'mixed' | 'twisted'."""
        if self.twist2 != 0:
            return "twisted"
        if not self.atoms:
            return "orthogonal"
        kinds = {a.is_symplectic for a in self.atoms}
        if kinds == {True}:
            return "symplectic"
        if kinds == {False}:
            return "orthogonal"
        return "mixed"

    def central_parity_ok(self) -> tuple[bool, list[bool]]:
        """Per-atom sign of the central element against the parity of N."""
        n = self.dimension
        per = []
        for a in self.atoms:
            if isinstance(a, TwoDimAtom):
                per.append((a.d + a.m) % 2 == n % 2)
            else:
                per.append(a.a % 2 == n % 2)
        return all(per), per

    def text(self) -> str:
        body = "+".join(a.text() for a in self.atoms) if self.atoms else "0"
        if self.twist2:
            body += f"*nu^{Fraction(self.twist2, 2)}"
        return body

    def omega_twist(self) -> "GLParameter":
        """Tensor with the order-two character: flips every quad's sign."""
        flipped = tuple(
            QuadAtom(1 - a.eps, a.a) if isinstance(a, QuadAtom) else a
            for a in self.atoms
        )
        return GLParameter(flipped, self.twist2, self.omega_pair)

    def orbit_key(self) -> str:
        """Canonical text of the twist orbit {self, self (x) omega}."""
        return min(self.text(), self.omega_twist().text())

    def to_json(self) -> dict:
        return {
            "text": self.text(),
            "dimension": self.dimension,
            "det": "1" if self.det_exponent == 0 else "w",
            "selfdual_type": self.selfdual_type,
            "multiplicity_free": self.is_multiplicity_free,
            "regular": self.is_regular,
            "omega_pair": self.omega_pair,
            "exponents": [str(e) for e in self.exponents()],
        }


_GL_ATOM_RE = re.compile(r"^(s|w)(\d+)(?:\[(\d+)\])?$")


def parse_gl_parameter(text: str) -> GLParameter:
    """Parse `s3[2]+w0[1]` style text, with optional `*nu^b` suffix."""
    body = text.strip()
    twist2 = 0
    if "*nu^" in body:
        body, _, tw = body.partition("*nu^")
        try:
            f = Fraction(tw)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidWeightError(f"bad twist {tw!r}") from exc
        if f.denominator not in (1, 2):
            raise InvalidWeightError(f"twist {tw!r} is not half-integral")
        twist2 = f.numerator * (2 // f.denominator)
    atoms: list[Atom] = []
    if body not in ("", "0"):
        for piece in body.split("+"):
            m = _GL_ATOM_RE.match(piece.strip())
            if not m:
                raise InvalidWeightError(f"bad atom {piece!r}")
            kind, first, bracket = m.groups()
            size = int(bracket) if bracket else 1
            try:
                if kind == "s":
                    atoms.append(TwoDimAtom(int(first), size))
                else:
                    atoms.append(QuadAtom(int(first), size))
            except ValueError as exc:
                raise InvalidWeightError(str(exc)) from exc
    return GLParameter(tuple(atoms), twist2)


# ---------------------------------------------------------------------------
# complex-coefficient parameters


@dataclass(frozen=True)
class ComplexParameter:
    """A formal sum of pieces (z-exponent d, sl2-size m); d stored doubled."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for two_d, m in self.entries:
            if m < 1:
                raise ValueError(f"bad entry ({two_d}, {m})")
        object.__setattr__(
            self,
            "entries",
            tuple(sorted(self.entries, key=lambda e: (-e[0], -e[1]))),
        )

    @property
    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def is_multiplicity_free(self) -> bool:
        return len(set(self.entries)) == len(self.entries)

    def exponents(self) -> list[Fraction]:
        out = []
        for two_d, m in self.entries:
            for k in range(m):
                out.append(Fraction(two_d, 2) + Fraction(m - 1 - 2 * k, 2))
        return sorted(out, reverse=True)

    @property
    def is_regular(self) -> bool:
        exps = self.exponents()
        return len(set(exps)) == len(exps)

    @property
    def is_conjugate_symmetric(self) -> bool:
        """Multiset symmetry (d, m) <-> (-d, m)."""
        bag = Counter(self.entries)
        return all(bag[(-t, m)] == c for (t, m), c in bag.items())

    def central_parity_ok(self) -> tuple[bool, list[bool]]:
        n = self.dimension
        per = [(two_d + m) % 2 == n % 2 for two_d, m in self.entries]
        return all(per), per

    def text(self) -> str:
        if not self.entries:
            return "0"
        return "+".join(
            f"e{Fraction(two_d, 2)}[{m}]" for two_d, m in self.entries
        )

    def to_json(self) -> dict:
        return {
            "text": self.text(),
            "dimension": self.dimension,
            "entries": [[str(Fraction(t, 2)), m] for t, m in self.entries],
            "conjugate_symmetric": self.is_conjugate_symmetric,
            "multiplicity_free": self.is_multiplicity_free,
            "regular": self.is_regular,
        }


_C_ATOM_RE = re.compile(r"^e(-?\d+(?:/2)?)(?:\[(\d+)\])?$")


def parse_complex_parameter(text: str) -> ComplexParameter:
    """Parse `e1[1]+e-1/2[2]` style text."""
    entries = []
    body = text.strip()
    if body not in ("", "0"):
        for piece in body.split("+"):
            m = _C_ATOM_RE.match(piece.strip())
            if not m:
                raise InvalidWeightError(f"bad entry {piece!r}")
            d_text, bracket = m.groups()
            f = Fraction(d_text)
            entries.append((f.numerator * (2 // f.denominator), int(bracket or 1)))
    return ComplexParameter(tuple(entries))


# ---------------------------------------------------------------------------
# subset-side parameters


@dataclass(frozen=True)
class CohomParameter:
    """A self-associate subset of simple roots plus a compatible weight.

    Validity (checked eagerly):

    * `lam` is an integral dominant weight fixed by theta;
    * S is stable under theta;
    * `lam` pairs to zero with every coroot indexed by S.
    """

    datum: RootDatum
    S: frozenset[int]
    lam: HalfIntVector

    def __post_init__(self) -> None:
        d = self.datum
        if len(self.lam) != d.ambient_dim:
            raise InvalidWeightError(
                f"weight has {len(self.lam)} coordinates, expected {d.ambient_dim}"
            )
        if not d.weight_is_integral(self.lam):
            raise InvalidWeightError(f"{self.lam} is not integral for {d.descriptor}")
        if d.theta_linear.apply(self.lam) != self.lam:
            raise InvalidWeightError(f"{self.lam} is not theta-fixed")
        for i in range(1, d.rank + 1):
            p = self.lam.dot(d.alpha_check(i))
            if p < 0:
                raise InvalidWeightError(f"{self.lam} is not dominant (alpha_{i})")
            if i in self.S and p != 0:
                raise InvalidWeightError(
                    f"weight pairs to {p} with alpha_{i}, which lies in S"
                )
        if not all(1 <= i <= d.rank for i in self.S):
            raise InvalidWeightError(f"S = {sorted(self.S)} out of range")
        if not is_self_associate(StandardParabolic(d, self.S)):
            raise InvalidWeightError(f"S = {sorted(self.S)} is not self-associate")

    @property
    def parabolic(self) -> StandardParabolic:
        return StandardParabolic(self.datum, self.S)

    @property
    def chi_exponent(self) -> HalfIntVector:
        return self.lam + self.datum.rho_check - self.parabolic.rho_check_levi

    @property
    def sl2_cochar(self) -> HalfIntVector:
        return self.parabolic.rho_check_levi.scale(2)

    @property
    def inf_char(self) -> HalfIntVector:
        return dominant_orbit_rep(self.datum, self.lam + self.datum.rho_check)

    @property
    def central_ok(self) -> bool:
        """(-1)^(2 chi + sl2) equals (-1)^(2 rho-check), coordinatewise."""
        two_chi = self.chi_exponent.scale(2)
        target = self.datum.rho_check.scale(2)
        for a, b, c in zip(
            two_chi.twice, self.sl2_cochar.twice, target.twice
        ):
            # a, b, c are doubled integers of integral vectors: values a/2 etc.
            if ((a + b) // 2) % 2 != (c // 2) % 2:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "group": self.datum.descriptor,
            "subset": sorted(self.S),
            "weight": str(self.lam),
            "chi": str(self.chi_exponent),
            "sl2": str(self.sl2_cochar),
            "inf_char": str(self.inf_char),
        }


def enumerate_cohomological(
    descriptor: str | RootDatum, lam: HalfIntVector | None = None
) -> tuple[CohomParameter, ...]:
    """All subset-side parameters for a group at one coefficient weight.

    Subsets run over the theta-stable subsets of the singular support of
    `lam`, ordered by (size, lexicographic).
    """
    datum = (
        descriptor
        if isinstance(descriptor, RootDatum)
        else build_classical_dual(descriptor)
    )
    if lam is None:
        lam = HalfIntVector((0,) * datum.ambient_dim)
    # validate the weight once through the parameter with S = {}
    CohomParameter(datum, frozenset(), lam)
    singular = [
        i for i in range(1, datum.rank + 1) if lam.dot(datum.alpha_check(i)) == 0
    ]
    subsets = []
    for r in range(len(singular) + 1):
        for combo in itertools.combinations(singular, r):
            s = frozenset(combo)
            if datum.theta_subset(s) == s:
                subsets.append(tuple(sorted(combo)))
    subsets.sort(key=lambda t: (len(t), t))
    return tuple(CohomParameter(datum, frozenset(t), lam) for t in subsets)


# ---------------------------------------------------------------------------
# strings: (exponent, sl2-eigenvalue) data -> atoms


def _extract_strings(
    pairs: list[tuple[Fraction, int]],
) -> list[tuple[Fraction, int]]:
    """Split weight pairs into sl2-strings, longest first.

    Each returned (x, m) certifies the presence of the m pairs
    (x, m-1), (x, m-3), ..., (x, -(m-1)).
    """
    work = Counter(pairs)
    out = []
    while work:
        x, h = max(work, key=lambda p: (p[1], p[0]))
        if h < 0:
            raise MathCheckError(f"unmatched sl2 weight {(x, h)}")
        m = h + 1
        for k in range(m):
            key = (x, h - 2 * k)
            if work[key] <= 0:
                raise MathCheckError(f"broken string: missing {key}")
            work[key] -= 1
            if not work[key]:
                del work[key]
        out.append((x, m))
    return out


def _pair_strings_selfdual(
    strings: list[tuple[Fraction, int]],
) -> tuple[list[TwoDimAtom], list[int]]:
    """Match (x, m) strings with their mirrors; zero strings become quads."""
    rem = Counter(strings)
    twodims: list[TwoDimAtom] = []
    quadlens: list[int] = []
    while rem:
        x, m = max(rem)
        if x > 0:
            mirror = (-x, m)
            if rem[mirror] <= 0:
                raise MathCheckError(f"string ({x}, {m}) has no mirror")
            for key in ((x, m), mirror):
                rem[key] -= 1
                if not rem[key]:
                    del rem[key]
            two_x = 2 * x
            if two_x.denominator != 1:
                raise MathCheckError(f"exponent {x} is not half-integral")
            twodims.append(TwoDimAtom(int(two_x), m))
        elif x == 0:
            rem[(x, m)] -= 1
            if not rem[(x, m)]:
                del rem[(x, m)]
            quadlens.append(m)
        else:
            raise MathCheckError(f"negative string ({x}, {m}) left over")
    return twodims, sorted(quadlens, reverse=True)


def _assign_quad_eps(
    quadlens: list[int],
    twodim_det: int,
    mode: str,
    delta: int = 0,
) -> tuple[list[QuadAtom], bool]:
    """Choose the signs on zero strings.

    mode 'plain'  -- no determinant constraint; eps = 0, flag the orbit;
    mode 'free'   -- symplectic-valued: sign invisible to the form; same;
    mode 'det'    -- determinant class must come out to delta: duplicated
                     lengths split {0,1} or {0,0} by parity, then the
                     smallest single length absorbs the rest.
    """
    if mode in ("plain", "free"):
        return [QuadAtom(0, a) for a in quadlens], bool(quadlens)
    counts = Counter(quadlens)
    if any(c > 2 for c in counts.values()):
        raise MathCheckError(f"zero string repeated 3+ times: {quadlens}")
    doubles = sorted((a for a, c in counts.items() if c == 2), reverse=True)
    singles = sorted((a for a, c in counts.items() if c == 1), reverse=True)
    if any(a % 2 == 0 for a in doubles + singles):
        raise MathCheckError(
            f"even zero string in a determinant-constrained parameter: {quadlens}"
        )
    atoms: list[QuadAtom] = []
    flag = False
    need = (delta - twodim_det) % 2
    # try to settle each doubled length as {0,0} first, spending need on it
    # only if no single can absorb it
    for a in doubles:
        if need and not singles:
            atoms.append(QuadAtom(0, a))
            atoms.append(QuadAtom(1, a))
            need = (need - a) % 2
        else:
            atoms.append(QuadAtom(0, a))
            atoms.append(QuadAtom(0, a))
            flag = True
    eps_map = {a: 0 for a in singles}
    if need:
        if not singles:
            raise MathCheckError(
                f"determinant class {delta} unreachable with zero strings {quadlens}"
            )
        eps_map[singles[-1]] = 1
    atoms.extend(QuadAtom(eps_map[a], a) for a in singles)
    return atoms, flag


def _coordinate_pairs(cohom: CohomParameter) -> list[tuple[Fraction, int]]:
    chi = list(cohom.chi_exponent)
    sl2 = list(cohom.sl2_cochar)
    out = []
    for c, s in zip(chi, sl2):
        if s.denominator != 1:
            raise MathCheckError("sl2 weights must be integers")
        out.append((c, int(s)))
    return out


def standard_rep_parameter(cohom: CohomParameter) -> GLParameter | ComplexParameter:
    """Push a subset-side parameter through the dual standard representation."""
    fam = cohom.datum.family
    coords = _coordinate_pairs(cohom)
    n = cohom.datum.ambient_dim

    if fam in ("GL_R", "SL_R"):
        strings = _extract_strings(coords)
        twodims, quadlens = _pair_strings_selfdual(strings)
        quads, flag = _assign_quad_eps(quadlens, 0, "plain")
        return GLParameter(tuple(twodims + quads), 0, flag)

    if fam == "U":
        strings = _extract_strings(coords)
        entries = []
        for x, m in strings:
            two_x = 2 * x
            if two_x.denominator != 1:
                raise MathCheckError(f"exponent {x} is not half-integral")
            entries.append((int(two_x), m))
        return ComplexParameter(tuple(entries))

    if fam == "GL_C":
        half = n // 2
        s1 = _extract_strings(coords[:half])
        s2 = _extract_strings(coords[half:])
        if Counter((-x, m) for x, m in s1) != Counter(s2):
            raise MathCheckError("second factor is not the conjugate of the first")
        entries = []
        for x, m in s1:
            two_x = 2 * x
            if two_x.denominator != 1:
                raise MathCheckError(f"exponent {x} is not half-integral")
            entries.append((int(two_x), m))
        return ComplexParameter(tuple(entries))

    # orthogonal/symplectic-valued families: symmetrize the weights first
    sym = list(coords) + [(-c, -s) for c, s in coords]
    if fam == "Sp_R":
        sym.append((Fraction(0), 0))
        mode, delta = "det", 0
    elif fam == "SO_odd":
        mode, delta = "free", 0
    elif fam == "SO_even":
        p, q = cohom.datum.signature
        mode, delta = "det", (q - n) % 2
    else:  # pragma: no cover
        raise UnsupportedGroupError(f"no standard-representation rule for {fam}")
    strings = _extract_strings(sym)
    twodims, quadlens = _pair_strings_selfdual(strings)
    twodim_det = sum(t.det_exponent for t in twodims) % 2
    quads, flag = _assign_quad_eps(quadlens, twodim_det, mode, delta)
    return GLParameter(tuple(twodims + quads), 0, flag)


# ---------------------------------------------------------------------------
# direct enumerations from the infinitesimal character


def _atom_sets(rem: Counter) -> list[tuple]:
    """All splittings of a symmetric exponent multiset into raw atoms.

    Raw atoms are ('s', d, m) and ('w', a); recursion is on the largest
    remaining exponent, which every covering atom must reach.
    """
    if not rem:
        return [()]
    x = max(rem)
    out = []

    def _minus(bag: Counter) -> Counter | None:
        nxt = rem.copy()
        for v, c in bag.items():
            if nxt[v] < c:
                return None
            nxt[v] -= c
            if not nxt[v]:
                del nxt[v]
        return nxt

    # two-dimensional options: top exponent x = (d + m - 1)/2.  When d < m
    # the two chains overlap; the multiset subtraction below is the only
    # gate needed (overlaps require doubled entries, e.g. the zero pair of
    # an even orthogonal exponent set).
    m = 0
    while True:
        m += 1
        d2 = 2 * x - m + 1
        if d2.denominator != 1:
            break  # exponents of mixed parity class: no two-dim atom at x
        d = int(d2)
        if d < 1:
            break
        chain = [x - k for k in range(m)]
        nxt = _minus(Counter(chain + [-c for c in chain]))
        if nxt is not None:
            for tail in _atom_sets(nxt):
                out.append((("s", d, m),) + tail)
    # one quad option: a = 2x + 1 covering the chain x .. -x
    a2 = 2 * x + 1
    if a2.denominator == 1 and x >= 0:
        a = int(a2)
        nxt = _minus(Counter(x - k for k in range(a)))
        if nxt is not None:
            for tail in _atom_sets(nxt):
                out.append((("w", a),) + tail)
    return out


def _finish_enumeration(
    raw_sets: list[tuple],
    twist2: int,
    valued_in: str | None,
    delta: int | None,
) -> tuple[GLParameter, ...]:
    results = []
    for raw in raw_sets:
        twodims = [TwoDimAtom(r[1], r[2]) for r in raw if r[0] == "s"]
        quadlens = sorted((r[1] for r in raw if r[0] == "w"), reverse=True)
        if valued_in == "orthogonal":
            if any(t.is_symplectic for t in twodims):
                continue
            if any(a % 2 == 0 for a in quadlens):
                continue
            twodim_det = sum(t.det_exponent for t in twodims) % 2
            try:
                quads, flag = _assign_quad_eps(
                    quadlens, twodim_det, "det", delta or 0
                )
            except MathCheckError:
                continue
        elif valued_in == "symplectic":
            if any(not t.is_symplectic for t in twodims):
                continue
            if any(a % 2 == 1 for a in quadlens):
                continue
            quads, flag = _assign_quad_eps(quadlens, 0, "free")
        else:
            quads, flag = _assign_quad_eps(quadlens, 0, "plain")
        results.append(GLParameter(tuple(twodims + quads), twist2, flag))
    results.sort(key=lambda p: p.text())
    return tuple(results)


def enumerate_gl_real(n: int, lam: HalfIntVector | None = None) -> tuple[GLParameter, ...]:
    """Every self-dual-up-to-twist parameter with the given coefficients.

    Works straight from the exponent multiset lam + rho-check of GL(n),
    independently of the subset-side construction.
    """
    if lam is None:
        lam = HalfIntVector((0,) * n)
    if len(lam) != n:
        raise InvalidWeightError(f"weight has {len(lam)} coordinates, expected {n}")
    entries = list(lam)
    if any(e.denominator != 1 for e in entries):
        raise InvalidWeightError(f"{lam} is not an integral weight")
    if any(entries[i] < entries[i + 1] for i in range(n - 1)):
        raise InvalidWeightError(f"{lam} is not dominant")
    big = [entries[i] + Fraction(n - 1 - 2 * i, 2) for i in range(n)]
    csums = {big[i] + big[n - 1 - i] for i in range(n)}
    if len(csums) != 1:
        raise InvalidWeightError(
            f"{lam} is not self-dual up to twist: exponent sums {sorted(csums)}"
        )
    c = csums.pop() / 2
    twist2 = 2 * c
    if twist2.denominator != 1:
        raise InvalidWeightError(f"twist {c} is not half-integral")
    sym = Counter(b - c for b in big)
    return _finish_enumeration(_atom_sets(sym), int(twist2), None, None)


def enumerate_selfdual(
    entries: list[Fraction] | HalfIntVector,
    valued_in: str,
    delta: int | None = None,
) -> tuple[GLParameter, ...]:
    """All orthogonal- or symplectic-valued parameters with given exponents.

    `entries` is the full symmetric exponent multiset of the standard
    representation (dimension many entries).  For 'orthogonal' a
    determinant class `delta` may be imposed.
    """
    if valued_in not in ("orthogonal", "symplectic"):
        raise ValueError(f"valued_in = {valued_in!r}")
    bag = Counter(Fraction(e) for e in entries)
    if any(bag[-v] != c for v, c in bag.items()):
        raise InvalidWeightError("exponent multiset is not symmetric")
    return _finish_enumeration(_atom_sets(bag), 0, valued_in, delta)


def gl_cascade_parameters(
    n: int, lam: HalfIntVector | None = None
) -> tuple[GLParameter, ...]:
    """Second independent route: blocks of mirror-symmetric compositions.

    Each composition (n_1, ..., n_k) of n with n_j = n_{k+1-j} and
    block-constant weight contributes one parameter; the j-th block
    carries the exponent (n - n_j)/2 - (preceding sum) + weight.
    """
    if lam is None:
        lam = HalfIntVector((0,) * n)
    entries = list(lam)
    if len(entries) != n:
        raise InvalidWeightError(f"weight has {len(entries)} coordinates")
    out = []
    for comp in _compositions(n):
        k = len(comp)
        if any(comp[j] != comp[k - 1 - j] for j in range(k)):
            continue
        # block-constant weight required
        blocks = []
        pos = 0
        ok = True
        for size in comp:
            vals = set(entries[pos : pos + size])
            if len(vals) != 1:
                ok = False
                break
            blocks.append(vals.pop())
            pos += size
        if not ok:
            continue
        d_vals = []
        pos = 0
        for j, size in enumerate(comp):
            d_vals.append(Fraction(n - size, 2) - pos + blocks[j])
            pos += size
        csums = {d_vals[j] + d_vals[k - 1 - j] for j in range(k)}
        if len(csums) != 1:
            continue
        c = csums.pop() / 2
        twist2 = 2 * c
        if twist2.denominator != 1:
            continue
        atoms: list[Atom] = []
        quadlens: list[int] = []
        for j in range(k // 2):
            two_d = 2 * (d_vals[j] - c)
            if two_d.denominator != 1 or two_d <= 0:
                ok = False
                break
            atoms.append(TwoDimAtom(int(two_d), comp[j]))
        if not ok:
            continue
        if k % 2 == 1:
            mid = d_vals[k // 2] - c
            if mid != 0:
                continue
            quadlens.append(comp[k // 2])
        quads, flag = _assign_quad_eps(quadlens, 0, "plain")
        out.append(GLParameter(tuple(atoms + quads), int(twist2), flag))
    out.sort(key=lambda p: p.text())
    return tuple(out)


def _compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def enumerate_complex_cohomological(
    n: int, lam: HalfIntVector | None = None
) -> tuple[ComplexParameter, ...]:
    """Direct route for complex-coefficient parameters: one per composition
    with block-constant weight."""
    if lam is None:
        lam = HalfIntVector((0,) * n)
    entries = list(lam)
    if len(entries) != n:
        raise InvalidWeightError(f"weight has {len(entries)} coordinates")
    out = []
    for comp in _compositions(n):
        blocks = []
        pos = 0
        ok = True
        for size in comp:
            vals = set(entries[pos : pos + size])
            if len(vals) != 1:
                ok = False
                break
            blocks.append(vals.pop())
            pos += size
        if not ok:
            continue
        pieces = []
        pos = 0
        for j, size in enumerate(comp):
            d = Fraction(n - size, 2) - pos + blocks[j]
            two_d = 2 * d
            if two_d.denominator != 1:
                ok = False
                break
            pieces.append((int(two_d), size))
            pos += size
        if ok:
            out.append(ComplexParameter(tuple(pieces)))
    seen = {}
    for p in out:
        seen.setdefault(p.text(), p)
    return tuple(sorted(seen.values(), key=lambda p: p.text()))


def gl_coefficient_weight(param: GLParameter | ComplexParameter, n: int) -> HalfIntVector:
    """The dominant weight whose exponents the parameter carries."""
    exps = param.exponents()
    if len(exps) != n:
        raise InvalidWeightError(
            f"parameter has dimension {len(exps)}, expected {n}"
        )
    rho = [Fraction(n - 1 - 2 * i, 2) for i in range(n)]
    lam = [e - r for e, r in zip(exps, rho)]
    if any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise InvalidWeightError("exponents are not dominant after the rho shift")
    return HalfIntVector.from_fractions(lam)


def tempered_companion(param: GLParameter) -> GLParameter:
    """The tempered parameter with the same exponents and determinant."""
    atoms: list[Atom] = []
    det_acc = 0
    pending_eps: list[int] = []
    for a in param.atoms:
        if isinstance(a, TwoDimAtom):
            if a.d < a.m:
                raise MathCheckError(f"{a.text()} has colliding exponents")
            for k in range(a.m):
                atoms.append(TwoDimAtom(a.d + a.m - 1 - 2 * k, 1))
        else:
            top = a.a - 1
            for t in range(top, 0, -2):
                atoms.append(TwoDimAtom(t, 1))
            if a.a % 2 == 1:
                spread = sum(1 for t in range(top, 0, -2))
                pending_eps.append((a.eps + spread) % 2)
    for eps in pending_eps:
        atoms.append(QuadAtom(eps, 1))
    out = GLParameter(tuple(atoms), param.twist2, param.omega_pair)
    if sorted(out.exponents()) != sorted(param.exponents()):
        raise MathCheckError("companion changed the exponents")
    return out


# ---------------------------------------------------------------------------
# self-dual classification and routing


@dataclass(frozen=True)
class RouteResult:
    target: str | None
    normalized: GLParameter
    reason: str

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "parameter": self.normalized.text(),
            "reason": self.reason,
        }


def route_selfdual(param: GLParameter) -> RouteResult:
    """Which classical family a self-dual parameter belongs to.

    Odd-dimensional orthogonal parameters are normalized to determinant
    one (flipping the sign on the smallest odd zero string) and sent to
    the symplectic group; even symplectic ones to the odd orthogonal
    family; even orthogonal ones to the even orthogonal family whose
    discriminant class is the parameter's determinant.
    """
    n = param.dimension
    kind = param.selfdual_type
    if kind == "twisted":
        return RouteResult(None, param, "nonzero twist: not self-dual")
    if kind == "mixed":
        return RouteResult(None, param, "mixed atoms: not orthogonal or symplectic")
    if kind == "symplectic":
        if n % 2 == 1:
            raise MathCheckError("odd-dimensional symplectic parameter")
        half = n // 2
        a = half + 1 if half % 2 == 1 else half
        b = (n + 1) - a
        return RouteResult(f"SO({a},{b})", param, "even symplectic")
    # orthogonal
    if n % 2 == 1:
        normalized = param
        if param.det_exponent != 0:
            odd_quads = [
                q
                for q in param.atoms
                if isinstance(q, QuadAtom) and q.a % 2 == 1
            ]
            if not odd_quads:
                return RouteResult(
                    None, param, "odd orthogonal with unfixable determinant"
                )
            target_q = min(odd_quads, key=lambda q: (q.a, q.eps))
            new_atoms = list(param.atoms)
            new_atoms[new_atoms.index(target_q)] = QuadAtom(
                1 - target_q.eps, target_q.a
            )
            normalized = GLParameter(
                tuple(new_atoms), param.twist2, param.omega_pair
            )
            if normalized.det_exponent != 0:
                raise MathCheckError("determinant normalization failed")
        return RouteResult(
            f"Sp({n - 1},R)", normalized, "odd orthogonal, determinant normalized"
        )
    half = n // 2
    delta = param.det_exponent
    p, q = (half, half) if delta == 0 else (half + 1, half - 1)
    return RouteResult(
        f"SO({p},{q})",
        param,
        f"even orthogonal, discriminant class {delta}",
    )


# ---------------------------------------------------------------------------
# transfers


TRANSFER_KINDS = ("so-odd-to-gl", "sp-to-gl", "sp-to-so-even", "gl-to-complex")


def _transfer_weight_map(kind: str, v: HalfIntVector) -> HalfIntVector:
    t = v.twice
    n = len(t)
    if kind == "so-odd-to-gl":
        return HalfIntVector(t + tuple(-x for x in reversed(t)))
    if kind == "sp-to-gl":
        return HalfIntVector(t + (0,) + tuple(-x for x in reversed(t)))
    if kind == "sp-to-so-even":
        return HalfIntVector(t + (0,))
    if kind == "gl-to-complex":
        return HalfIntVector(t + t)
    raise UnsupportedGroupError(f"unknown transfer kind {kind!r}")


def _transfer_check_datum(kind: str, source: RootDatum) -> RootDatum:
    """A representative target datum used for root-system-level checks.

    For the even orthogonal target the signature is taken even-even:
    rho-check and dominance do not depend on it, and the even-even form
    always has an unambiguous diagram action.
    """
    n = source.ambient_dim
    if kind == "so-odd-to-gl":
        if source.family != "SO_odd":
            raise UnsupportedGroupError(f"{kind} needs an odd orthogonal source")
        return build_classical_dual(f"GL({2 * n},R)")
    if kind == "sp-to-gl":
        if source.family != "Sp_R":
            raise UnsupportedGroupError(f"{kind} needs a symplectic source")
        return build_classical_dual(f"GL({2 * n + 1},R)")
    if kind == "sp-to-so-even":
        if source.family != "Sp_R":
            raise UnsupportedGroupError(f"{kind} needs a symplectic source")
        m = n + 1
        p, q = (m, m) if m % 2 == 0 else (m + 1, m - 1)
        return build_classical_dual(f"SO({p},{q})")
    if kind == "gl-to-complex":
        if source.family not in ("GL_R", "SL_R"):
            raise UnsupportedGroupError(f"{kind} needs a general linear source")
        return build_classical_dual(f"GL({n},C)")
    raise UnsupportedGroupError(f"unknown transfer kind {kind!r}")


def transfer_weight(kind: str, source: RootDatum, v: HalfIntVector) -> HalfIntVector:
    """Transport a weight; hard-checks that rho-check maps to rho-check."""
    check = _transfer_check_datum(kind, source)
    image = _transfer_weight_map(kind, v)
    rho_image = _transfer_weight_map(kind, source.rho_check)
    if dominant_orbit_rep(check, rho_image) != check.rho_check:
        raise MathCheckError(
            f"{kind}: rho-check of the source does not map onto rho-check "
            f"of the target"
        )
    return image


@dataclass(frozen=True)
class TransferResult:
    kind: str
    source_group: str
    target_group: str
    parameter: GLParameter | ComplexParameter
    inf_char: HalfIntVector
    image_regular: bool
    image_cohomological: bool | None
    notes: str

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "source": self.source_group,
            "target": self.target_group,
            "parameter": self.parameter.text(),
            "inf_char": str(self.inf_char),
            "image_regular": self.image_regular,
            "image_cohomological": self.image_cohomological,
            "notes": self.notes,
        }


def transfer_cohom(cohom: CohomParameter, kind: str) -> TransferResult:
    """Functorial image of a subset-side parameter along one embedding."""
    source = cohom.datum
    check = _transfer_check_datum(kind, source)
    base = standard_rep_parameter(cohom)
    image_inf = transfer_weight(kind, source, cohom.lam + source.rho_check)
    notes = []
    coh: bool | None = None
    target_name = check.descriptor

    if kind in ("so-odd-to-gl", "sp-to-gl"):
        assert isinstance(base, GLParameter)
        image: GLParameter | ComplexParameter = base
        target_n = check.ambient_dim
        try:
            mu = gl_coefficient_weight(base, target_n)
            orbit_keys = {p.orbit_key() for p in enumerate_gl_real(target_n, mu)}
            coh = base.orbit_key() in orbit_keys
        except InvalidWeightError as exc:
            notes.append(f"image coefficients not checkable: {exc}")
        notes.append("standard-representation image")
    elif kind == "sp-to-so-even":
        assert isinstance(base, GLParameter)
        # the extra line is fixed pointwise, so it carries the trivial
        # character -- even when that repeats an atom already present
        extra = QuadAtom(0, 1)
        image = GLParameter(base.atoms + (extra,), 0, base.omega_pair)
        route = route_selfdual(image)
        if route.target is not None:
            target_name = route.target
        delta = image.det_exponent
        family = enumerate_selfdual(image.exponents(), "orthogonal", delta)
        if image.text() in {p.text() for p in family}:
            coh = True
        elif image.orbit_key() in {p.orbit_key() for p in family}:
            coh = True
            notes.append("matches the enumerated family up to the order-two twist")
        else:
            coh = False
        notes.append(f"appended {extra.text()}; discriminant class {delta}")
    elif kind == "gl-to-complex":
        assert isinstance(base, GLParameter)
        entries = []
        for a in base.atoms:
            if isinstance(a, TwoDimAtom):
                entries.append((a.d, a.m))
                entries.append((-a.d, a.m))
            else:
                entries.append((0, a.a))
        image = ComplexParameter(tuple(entries))
        half = source.ambient_dim
        coh = image.text() in {
            p.text() for p in enumerate_complex_cohomological(half, cohom.lam)
        }
        notes.append("restriction of scalars")
    else:
        raise UnsupportedGroupError(f"unknown transfer kind {kind!r}")

    image_inf_dom = dominant_orbit_rep(check, image_inf)
    return TransferResult(
        kind=kind,
        source_group=source.descriptor,
        target_group=target_name,
        parameter=image,
        inf_char=image_inf_dom,
        image_regular=is_regular_orbit(check, image_inf_dom),
        image_cohomological=coh,
        notes="; ".join(notes),
    )


# ---------------------------------------------------------------------------
# central value and unitary bookkeeping


@dataclass(frozen=True)
class CentralReport:
    overall: bool
    per_atom: tuple[bool, ...]
    subset_side: bool | None

    def to_json(self) -> dict:
        return {
            "overall": self.overall,
            "per_atom": list(self.per_atom),
            "subset_side": self.subset_side,
        }


def central_value_report(
    param: GLParameter | ComplexParameter, cohom: CohomParameter | None = None
) -> CentralReport:
    """Atom-by-atom central-element parity, with the subset-side check."""
    overall, per = param.central_parity_ok()
    side = cohom.central_ok if cohom is not None else None
    if side is not None and side != overall:
        raise MathCheckError(
            "central parity differs between the subset side and the atom side"
        )
    return CentralReport(overall, tuple(per), side)


def unitary_relevance(param: ComplexParameter, p: int, q: int) -> tuple[bool, str]:
    """Signature balance: blocks bigger than one force equal split."""
    singles = sum(1 for _, m in param.entries if m == 1)
    ok = abs(p - q) <= singles
    why = (
        f"|p-q| = {abs(p - q)} <= {singles} single blocks"
        if ok
        else f"|p-q| = {abs(p - q)} exceeds the {singles} single blocks"
    )
    return ok, why
