"""Signed-permutation Weyl machinery.

Elements act on ambient coordinates by e_i |-> signs[i] * e_{perm[i]}
(0-based), the same convention as `AmbientMap`.  Everything that returns a
collection returns a tuple sorted by `WeylElement.sort_key`, so identical
inputs always serialize identically.

The size of any group this module is asked to write down is capped:
`COHOPARAM_MAX_WEYL` (default 10**6).  Requests past the cap raise
`WeylSizeError` *before* enumeration starts whenever the order is known in
closed form.

`compact_weyl_catalog` packages, per supported real form, the data the
packet layer consumes: the twisted Weyl group W^theta, the compact-side
subgroup inside it, the rank split (split, complex, compact) of the
fundamental Cartan, and the dimension-shift exponent d = #split + #complex.
For the orthogonal families the compact side is taken from the *identity
component* of the maximal compact subgroup; `k_connected_only` records
this.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import MathCheckError, UnsupportedGroupError, WeylSizeError
from .halfint import HalfIntVector
from .rootdata import (
    AmbientMap,
    RootDatum,
    StandardParabolic,
    build_classical_dual,
    parse_group,
)

__all__ = [
    "WeylElement",
    "DoubleCoset",
    "CompactWeylData",
    "max_weyl_size",
    "weyl_order",
    "simple_reflection",
    "all_simple_reflections",
    "full_weyl_group",
    "longest_element",
    "subgroup_closure",
    "levi_weyl_group",
    "conjugate_element",
    "theta_fixed_subgroup",
    "double_cosets",
    "compact_weyl_catalog",
]

DEFAULT_MAX_WEYL = 10**6


def max_weyl_size() -> int:
    """Enumeration cap; override with the COHOPARAM_MAX_WEYL env var."""
    raw = os.environ.get("COHOPARAM_MAX_WEYL", "")
    if raw.strip():
        try:
            val = int(raw)
        except ValueError as exc:
            raise WeylSizeError(f"COHOPARAM_MAX_WEYL={raw!r} is not an integer") from exc
        if val < 1:
            raise WeylSizeError(f"COHOPARAM_MAX_WEYL={raw!r} must be positive")
        return val
    return DEFAULT_MAX_WEYL


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class WeylElement:
    """A signed permutation: e_i |-> signs[i] * e_{perm[i]} (0-based)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls(tuple(range(n)), (1,) * n)

    @property
    def n(self) -> int:
        return len(self.perm)

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.perm)) and all(
            s == 1 for s in self.signs
        )

    @property
    def n_flips(self) -> int:
        return self.signs.count(-1)

    @property
    def sort_key(self) -> tuple:
        return (tuple(0 if s == 1 else 1 for s in self.signs), self.perm)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """self o other (apply `other` first)."""
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self.perm)))
        signs = tuple(
            other.signs[i] * self.signs[other.perm[i]]
            for i in range(len(self.perm))
        )
        return WeylElement(perm, signs)

    def inverse(self) -> "WeylElement":
        n = len(self.perm)
        perm = [0] * n
        signs = [1] * n
        for i in range(n):
            perm[self.perm[i]] = i
            signs[self.perm[i]] = self.signs[i]
        return WeylElement(tuple(perm), tuple(signs))

    def apply(self, v: HalfIntVector) -> HalfIntVector:
        out = [0] * len(self.perm)
        for i, t in enumerate(v.twice):
            out[self.perm[i]] = self.signs[i] * t
        return HalfIntVector(tuple(out))

    def to_ambient(self) -> AmbientMap:
        return AmbientMap(self.perm, self.signs)

    @classmethod
    def from_ambient(cls, m: AmbientMap) -> "WeylElement":
        if sorted(m.perm) != list(range(len(m.perm))) or any(
            s not in (1, -1) for s in m.signs
        ):
            raise MathCheckError(f"not a signed permutation: {m}")
        return cls(tuple(m.perm), tuple(m.signs))

    def __str__(self) -> str:
        """Window notation: image of e_1..e_n as signed 1-based indices."""
        return "(" + " ".join(
            f"{'-' if s < 0 else ''}{p + 1}" for p, s in zip(self.perm, self.signs)
        ) + ")"

    def to_json(self) -> dict:
        return {
            "perm": [p + 1 for p in self.perm],
            "signs": list(self.signs),
            "window": str(self),
        }


def _transposition(n: int, i: int, j: int) -> WeylElement:
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    return WeylElement(tuple(perm), (1,) * n)


def _flips(n: int, *idxs: int) -> WeylElement:
    signs = [1] * n
    for i in idxs:
        signs[i] = -1
    return WeylElement(tuple(range(n)), tuple(signs))


# ---------------------------------------------------------------------------
# reflections and full groups


def simple_reflection(datum: RootDatum, i: int) -> WeylElement:
    """The reflection in the i-th simple root (1-based), as an element."""
    root = datum.alpha(i)
    coroot = datum.alpha_check(i)
    n = datum.ambient_dim
    cols = []
    for k in range(n):
        basis = HalfIntVector.from_ints(*(1 if j == k else 0 for j in range(n)))
        pairing = basis.dot(coroot)
        image = basis - root.scale(pairing.numerator, pairing.denominator)
        cols.append(image.twice)
    perm = [0] * n
    signs = [1] * n
    for k, col in enumerate(cols):
        hits = [(j, t) for j, t in enumerate(col) if t != 0]
        if len(hits) != 1 or abs(hits[0][1]) != 2:
            raise MathCheckError(
                f"reflection in alpha_{i} of {datum.descriptor} is not a signed "
                f"permutation"
            )
        perm[k] = hits[0][0]
        signs[k] = 1 if hits[0][1] > 0 else -1
    return WeylElement(tuple(perm), tuple(signs))


def all_simple_reflections(datum: RootDatum) -> tuple[WeylElement, ...]:
    return tuple(simple_reflection(datum, i) for i in range(1, datum.rank + 1))


def weyl_order(datum: RootDatum) -> int:
    """Closed-form order of the (full) Weyl group of the datum."""
    total = 1
    for f in datum.factors:
        r = f.rank
        if f.cartan == "A":
            total *= math.factorial(r + 1)
        elif f.cartan in ("B", "C"):
            total *= (2**r) * math.factorial(r)
        elif f.cartan == "D":
            total *= 1 if r < 2 else (2 ** (r - 1)) * math.factorial(r)
        else:  # pragma: no cover
            raise UnsupportedGroupError(f"unknown Cartan type {f.cartan}")
    return total


def subgroup_closure(
    gens: list[WeylElement] | tuple[WeylElement, ...],
    *,
    n: int | None = None,
    max_size: int | None = None,
) -> tuple[WeylElement, ...]:
    """Close a generating set under multiplication; sorted, capped."""
    cap = max_size if max_size is not None else max_weyl_size()
    if not gens:
        if n is None:
            raise ValueError("empty generating set needs an explicit dimension n")
        return (WeylElement.identity(n),)
    dim = gens[0].n
    if any(g.n != dim for g in gens):
        raise ValueError("generators act on spaces of different dimensions")
    ident = WeylElement.identity(dim)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                x = w * g
                if x not in seen:
                    if len(seen) >= cap:
                        raise WeylSizeError(
                            f"group closure exceeds the cap of {cap} elements"
                        )
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return tuple(sorted(seen, key=lambda w: w.sort_key))


def full_weyl_group(
    datum: RootDatum, *, max_size: int | None = None
) -> tuple[WeylElement, ...]:
    """All elements of W, generated from the simple reflections."""
    cap = max_size if max_size is not None else max_weyl_size()
    expected = weyl_order(datum)
    if expected > cap:
        raise WeylSizeError(
            f"|W({datum.descriptor})| = {expected} exceeds the cap of {cap}"
        )
    elems = subgroup_closure(
        list(all_simple_reflections(datum)), n=datum.ambient_dim, max_size=cap
    )
    if len(elems) != expected:
        raise MathCheckError(
            f"generated {len(elems)} elements for {datum.descriptor}, "
            f"expected {expected}"
        )
    return elems


def longest_element(datum: RootDatum) -> WeylElement:
    """w_0, assembled factor by factor and checked against rho-check."""
    n = datum.ambient_dim
    perm = list(range(n))
    signs = [1] * n
    for f in datum.factors:
        lo = f.offset
        hi = f.offset + f.dim
        if f.cartan == "A":
            for k in range(f.dim):
                perm[lo + k] = hi - 1 - k
        elif f.cartan in ("B", "C"):
            for k in range(lo, hi):
                signs[k] = -1
        elif f.cartan == "D":
            if f.rank < 2:
                continue
            for k in range(lo, hi):
                signs[k] = -1
            if f.rank % 2 == 1:
                signs[hi - 1] = 1
    w0 = WeylElement(tuple(perm), tuple(signs))
    if not (w0 * w0).is_identity:
        raise MathCheckError("longest element is not an involution")
    if w0.apply(datum.rho_check) != -datum.rho_check:
        raise MathCheckError("longest element does not negate rho-check")
    return w0


def levi_weyl_group(
    parabolic: StandardParabolic, *, max_size: int | None = None
) -> tuple[WeylElement, ...]:
    """W_L for a standard parabolic: closure of its simple reflections."""
    gens = [simple_reflection(parabolic.datum, i) for i in sorted(parabolic.S)]
    return subgroup_closure(
        gens, n=parabolic.datum.ambient_dim, max_size=max_size
    )


# ---------------------------------------------------------------------------
# twisted subgroups and double cosets


def conjugate_element(m: AmbientMap, w: WeylElement) -> WeylElement:
    """m o w o m^{-1} as a signed permutation."""
    amb = m.compose(w.to_ambient()).compose(m.inverse())
    return WeylElement.from_ambient(amb)


def theta_fixed_subgroup(
    elements: tuple[WeylElement, ...], theta: AmbientMap
) -> tuple[WeylElement, ...]:
    """Fixed points of conjugation by `theta` on a group given by listing.

    Checks that conjugation maps the listed group into itself (so the fixed
    set really is a subgroup) and raises `MathCheckError` otherwise.
    """
    pool = set(elements)
    fixed = []
    for w in elements:
        cw = conjugate_element(theta, w)
        if cw not in pool:
            raise MathCheckError(
                "conjugation does not preserve the given group; element "
                f"{w} maps outside it"
            )
        if cw == w:
            fixed.append(w)
    return tuple(sorted(fixed, key=lambda w: w.sort_key))


@dataclass(frozen=True)
class DoubleCoset:
    """One (left, right) double coset, with its sort_key-minimal member."""

    rep: WeylElement
    size: int
    elements: tuple[WeylElement, ...]

    def to_json(self) -> dict:
        return {"rep": self.rep.to_json(), "size": self.size}


def double_cosets(
    left: tuple[WeylElement, ...],
    right: tuple[WeylElement, ...],
    ambient: tuple[WeylElement, ...],
) -> tuple[DoubleCoset, ...]:
    """Partition `ambient` into left*x*right double cosets.

    `left` and `right` must be subgroups contained in `ambient` (checked).
    Cosets come back sorted by their minimal representative.
    """
    amb_set = set(ambient)
    for grp, name in ((left, "left"), (right, "right")):
        if not set(grp) <= amb_set:
            raise MathCheckError(f"{name} subgroup is not inside the ambient group")
    remaining = dict.fromkeys(sorted(amb_set, key=lambda w: w.sort_key))
    cosets = []
    while remaining:
        seed = next(iter(remaining))
        half = {l * seed for l in left}
        orbit = {x * r for x in half for r in right}
        if not orbit <= amb_set:
            raise MathCheckError("double coset escapes the ambient group")
        ordered = tuple(sorted(orbit, key=lambda w: w.sort_key))
        cosets.append(DoubleCoset(rep=ordered[0], size=len(ordered), elements=ordered))
        for x in ordered:
            remaining.pop(x, None)
    return tuple(sorted(cosets, key=lambda c: c.rep.sort_key))


# ---------------------------------------------------------------------------
# per-family compact-side data


@dataclass(frozen=True)
class CompactWeylData:
    """Twisted Weyl group and compact-side subgroup for one real form.

    * `w_theta`: fixed points of conjugation by `theta_map` on W;
    * `k_weyl`: the compact-side subgroup inside `w_theta`;
    * `cartan_signature`: (split, complex, compact) rank split of the
      fundamental (maximally compact) Cartan subgroup;
    * `d_exponent`: split + complex; each packet member carries a factor
      2**d_exponent in its dimension count;
    * `k_connected_only`: True when `k_weyl` comes from the identity
      component of the maximal compact subgroup (orthogonal families).
    """

    descriptor: str
    datum: RootDatum
    ambient_dim: int
    theta_map: AmbientMap
    full_order: int
    w_theta: tuple[WeylElement, ...]
    k_weyl: tuple[WeylElement, ...]
    cartan_signature: tuple[int, int, int]
    k_connected_only: bool

    @property
    def d_exponent(self) -> int:
        return self.cartan_signature[0] + self.cartan_signature[1]

    @property
    def n_cosets(self) -> int:
        if len(self.w_theta) % len(self.k_weyl) != 0:
            raise MathCheckError(
                f"|W^theta| = {len(self.w_theta)} not divisible by "
                f"|K-side| = {len(self.k_weyl)} for {self.descriptor}"
            )
        return len(self.w_theta) // len(self.k_weyl)

    def to_json(self) -> dict:
        return {
            "group": self.descriptor,
            "ambient_dim": self.ambient_dim,
            "weyl_order": self.full_order,
            "twisted_order": len(self.w_theta),
            "compact_side_order": len(self.k_weyl),
            "cartan_signature": list(self.cartan_signature),
            "d_exponent": self.d_exponent,
            "k_connected_only": self.k_connected_only,
        }


def _gl_pair_block_gens(n: int) -> list[WeylElement]:
    """Generators of the centralizer of i <-> n+1-i inside S_n."""
    m = n // 2
    gens: list[WeylElement] = []
    for i in range(m - 1):
        # swap pair i with pair i+1 on both ends
        gens.append(
            _transposition(n, i, i + 1) * _transposition(n, n - 1 - i, n - 2 - i)
        )
    if m >= 1:
        if n % 2 == 0:
            gens.append(_transposition(n, m - 1, m))  # innermost within-pair swap
        else:
            gens.append(_transposition(n, m - 1, m + 1))  # skip the fixed middle
    return gens


def _gl_even_special_gens(n: int) -> list[WeylElement]:
    """Even-within-pair-swap subgroup (index 2) for K = SO(n), n even."""
    m = n // 2
    gens: list[WeylElement] = []
    for i in range(m - 1):
        gens.append(
            _transposition(n, i, i + 1) * _transposition(n, n - 1 - i, n - 2 - i)
        )
    if m >= 2:
        # product of the two innermost within-pair swaps
        gens.append(_transposition(n, m - 1, m) * _transposition(n, m - 2, m + 1))
    return gens


def _block_transpositions(n: int, lo: int, hi: int) -> list[WeylElement]:
    return [_transposition(n, i, i + 1) for i in range(lo, hi - 1)]


def _so_like_block_gens(n: int, lo: int, hi: int, kind: str) -> list[WeylElement]:
    """Weyl generators of SO(2r) ('D') or SO(2r+1) ('B') on one coordinate block."""
    gens = _block_transpositions(n, lo, hi)
    r = hi - lo
    if kind == "B" and r >= 1:
        gens.append(_flips(n, hi - 1))
    if kind == "D" and r >= 2:
        gens.append(_flips(n, hi - 2, hi - 1))
    return gens


def compact_weyl_catalog(
    descriptor: str, *, max_size: int | None = None
) -> CompactWeylData:
    """Twisted Weyl group and compact-side subgroup for one real form.

    Conventions baked in here (and relied on by the packet layer):

    * everything lives in the coordinates of the dual root datum, whose
      Weyl group is canonically the same signed-permutation group;
    * the twist is conjugation by the datum's `theta_linear`;
    * for SO(p,q) with one of p, q even, the even part sits on the *first*
      block of coordinates;
    * SO(p,q) with both p and q odd is only served through rank
      (p+q)/2 <= 3, where the diagram involution is pinned down by the
      signature alone.
    """
    datum = build_classical_dual(descriptor)
    kind, first, second = parse_group(descriptor)
    n = datum.ambient_dim
    cap = max_size if max_size is not None else max_weyl_size()
    theta_map = datum.theta_linear
    full_order = weyl_order(datum)

    connected_only = False
    if datum.family in ("GL_R", "SL_R"):
        m = n // 2
        w_theta_gens = _gl_pair_block_gens(n)
        expected_theta = (2**m) * _fact(m)
        if datum.family == "SL_R" and n % 2 == 0:
            k_gens = _gl_even_special_gens(n)
            expected_k = max(expected_theta // 2, 1)
        else:
            k_gens = list(w_theta_gens)
            expected_k = expected_theta
        sig = (1, m, 0) if n % 2 == 1 else (0, m, 0)
    elif datum.family == "U":
        p, q = datum.signature
        w_theta_gens = _block_transpositions(n, 0, n)
        expected_theta = _fact(n)
        k_gens = _block_transpositions(n, 0, p) + _block_transpositions(n, p, n)
        expected_k = _fact(p) * _fact(q)
        sig = (0, 0, n)
    elif datum.family == "Sp_R":
        w_theta_gens = None  # full W
        expected_theta = full_order
        k_gens = _block_transpositions(n, 0, n)
        expected_k = _fact(n)
        sig = (0, 0, n)
    elif datum.family == "SO_odd":
        p, q = datum.signature
        even, odd = (p, q) if p % 2 == 0 else (q, p)
        a, b = even // 2, (odd - 1) // 2
        w_theta_gens = None
        expected_theta = full_order
        k_gens = _so_like_block_gens(n, 0, a, "D") + _so_like_block_gens(n, a, n, "B")
        expected_k = _so_like_order(a, "D") * _so_like_order(b, "B")
        sig = (0, 0, n)
        connected_only = True
    elif datum.family == "SO_even":
        p, q = datum.signature
        connected_only = True
        if p % 2 == 0:
            a, b = p // 2, q // 2
            w_theta_gens = None
            expected_theta = full_order
            k_gens = _so_like_block_gens(n, 0, a, "D") + _so_like_block_gens(
                n, a, n, "D"
            )
            expected_k = _so_like_order(a, "D") * _so_like_order(b, "D")
            sig = (0, 0, n)
        else:
            if n > 3:
                raise UnsupportedGroupError(
                    f"{descriptor}: packets for SO(odd,odd) are only provided "
                    f"through rank 3"
                )
            a, b = (first - 1) // 2, (second - 1) // 2
            gens = _block_transpositions(n, 0, a) + _block_transpositions(
                n, a, n - 1
            )
            if a >= 1:
                gens.append(_flips(n, a - 1, n - 1))
            if b >= 1:
                gens.append(_flips(n, n - 2, n - 1))
            k_gens = gens
            expected_k = _so_like_order(a, "B") * _so_like_order(b, "B")
            w_theta_gens = _block_transpositions(n, 0, n - 1) + (
                [_flips(n, n - 2, n - 1)] if n >= 2 else []
            )
            expected_theta = (2 ** max(n - 1, 0)) * _fact(n - 1)
            sig = (1, 0, n - 1)
    elif datum.family == "GL_C":
        half = n // 2
        w_theta_gens = []
        for i in range(half - 1):
            w_theta_gens.append(
                _transposition(n, i, i + 1)
                * _transposition(n, half + half - 2 - i, half + half - 1 - i)
            )
        expected_theta = _fact(half)
        k_gens = list(w_theta_gens)
        expected_k = expected_theta
        sig = (0, half, 0)
    else:  # pragma: no cover
        raise UnsupportedGroupError(f"no compact-side data for {descriptor}")

    if expected_theta > cap:
        raise WeylSizeError(
            f"twisted Weyl group of {descriptor} has {expected_theta} elements, "
            f"over the cap of {cap}"
        )
    if w_theta_gens is None:
        w_theta = full_weyl_group(datum, max_size=cap)
    else:
        w_theta = subgroup_closure(w_theta_gens, n=n, max_size=cap)
    if len(w_theta) != expected_theta:
        raise MathCheckError(
            f"twisted Weyl group of {descriptor}: got {len(w_theta)}, "
            f"expected {expected_theta}"
        )
    for w in w_theta:
        if conjugate_element(theta_map, w) != w:
            raise MathCheckError(
                f"claimed twisted element {w} of {descriptor} is not fixed"
            )

    k_weyl = subgroup_closure(k_gens, n=n, max_size=cap)
    if len(k_weyl) != expected_k:
        raise MathCheckError(
            f"compact-side subgroup of {descriptor}: got {len(k_weyl)}, "
            f"expected {expected_k}"
        )
    if not set(k_weyl) <= set(w_theta):
        raise MathCheckError(
            f"compact-side subgroup of {descriptor} is not inside W^theta"
        )

    return CompactWeylData(
        descriptor=datum.descriptor,
        datum=datum,
        ambient_dim=n,
        theta_map=theta_map,
        full_order=full_order,
        w_theta=w_theta,
        k_weyl=k_weyl,
        cartan_signature=sig,
        k_connected_only=connected_only,
    )


def _fact(k: int) -> int:
    return math.factorial(max(k, 0))


def _so_like_order(r: int, kind: str) -> int:
    if r <= 0:
        return 1
    if kind == "B":
        return (2**r) * _fact(r)
    if r < 2:
        return 1
    return (2 ** (r - 1)) * _fact(r)
