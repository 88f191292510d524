"""Exact half-integer vectors.

Everything downstream (weights, roots, coroots, infinitesimal characters)
lives in (1/2)Z^n.  Entries are stored as *doubled* integers, so all vector
arithmetic is integer arithmetic; only pairings divide, and those return
`fractions.Fraction`.  No floats anywhere.

>>> v = HalfIntVector.parse("3/2,1,-1/2")
>>> str(v)
'3/2,1,-1/2'
>>> str(v + v)
'3,2,-1'
>>> v.dot(HalfIntVector.from_ints(2, 0, 2))
Fraction(2, 1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

__all__ = ["HalfIntVector", "solve_rational"]


def _fmt_half(twice: int) -> str:
    if twice % 2 == 0:
        return str(twice // 2)
    return f"{twice}/2"


@dataclass(frozen=True)
class HalfIntVector:
    """A vector in (1/2)Z^n, stored as the tuple of doubled entries."""

    twice: tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(t, int) for t in self.twice):
            raise TypeError("doubled entries must be ints")

    # -- construction ------------------------------------------------------

    @classmethod
    def from_ints(cls, *entries: int) -> "HalfIntVector":
        return cls(tuple(2 * e for e in entries))

    @classmethod
    def from_twice(cls, twice: Iterable[int]) -> "HalfIntVector":
        return cls(tuple(twice))

    @classmethod
    def from_fractions(cls, entries: Iterable[Fraction]) -> "HalfIntVector":
        out = []
        for e in entries:
            f = Fraction(e)
            if f.denominator not in (1, 2):
                raise ValueError(f"{f} is not a half-integer")
            out.append(int(f * 2))
        return cls(tuple(out))

    @classmethod
    def zero(cls, n: int) -> "HalfIntVector":
        return cls((0,) * n)

    @classmethod
    def parse(cls, text: str) -> "HalfIntVector":
        """Parse comma-separated entries; each entry is `a`, `a/2`, or `a.5`."""
        parts = [p.strip() for p in text.split(",")] if text.strip() else []
        twice = []
        for p in parts:
            if not p:
                raise ValueError(f"empty entry in weight string {text!r}")
            try:
                f = Fraction(p)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad weight entry {p!r}") from exc
            if f.denominator not in (1, 2):
                raise ValueError(f"weight entry {p!r} is not a half-integer")
            twice.append(int(f * 2))
        return cls(tuple(twice))

    # -- basic structure ---------------------------------------------------

    def __len__(self) -> int:
        return len(self.twice)

    def __iter__(self) -> Iterator[Fraction]:
        return (Fraction(t, 2) for t in self.twice)

    def entry(self, i: int) -> Fraction:
        return Fraction(self.twice[i], 2)

    def entries(self) -> tuple[Fraction, ...]:
        return tuple(self)

    @property
    def is_integral(self) -> bool:
        return all(t % 2 == 0 for t in self.twice)

    @property
    def is_zero(self) -> bool:
        return all(t == 0 for t in self.twice)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "HalfIntVector") -> "HalfIntVector":
        self._check_len(other)
        return HalfIntVector(tuple(a + b for a, b in zip(self.twice, other.twice)))

    def __sub__(self, other: "HalfIntVector") -> "HalfIntVector":
        self._check_len(other)
        return HalfIntVector(tuple(a - b for a, b in zip(self.twice, other.twice)))

    def __neg__(self) -> "HalfIntVector":
        return HalfIntVector(tuple(-a for a in self.twice))

    def scale(self, num: int, den: int = 1) -> "HalfIntVector":
        """Exact scalar multiple by num/den; raises if the result leaves (1/2)Z."""
        out = []
        for t in self.twice:
            q, r = divmod(t * num, den)
            if r:
                raise ValueError(f"scaling by {num}/{den} leaves half-integers")
            out.append(q)
        return HalfIntVector(tuple(out))

    def dot(self, other: "HalfIntVector") -> Fraction:
        self._check_len(other)
        return Fraction(sum(a * b for a, b in zip(self.twice, other.twice)), 4)

    def concat(self, other: "HalfIntVector") -> "HalfIntVector":
        return HalfIntVector(self.twice + other.twice)

    def slice(self, start: int, stop: int) -> "HalfIntVector":
        return HalfIntVector(self.twice[start:stop])

    def reversed(self) -> "HalfIntVector":
        return HalfIntVector(self.twice[::-1])

    def sorted_desc(self) -> "HalfIntVector":
        return HalfIntVector(tuple(sorted(self.twice, reverse=True)))

    def _check_len(self, other: "HalfIntVector") -> None:
        if len(self.twice) != len(other.twice):
            raise ValueError(
                f"length mismatch: {len(self.twice)} vs {len(other.twice)}"
            )

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        return ",".join(_fmt_half(t) for t in self.twice)

    def __repr__(self) -> str:
        return f"HalfIntVector.parse({str(self)!r})"


def solve_rational(
    rows: list[list[Fraction]], rhs: list[Fraction]
) -> list[Fraction] | None:
    """Solve a square linear system exactly by Gaussian elimination.

    Returns None when the matrix is singular.  Systems here are tiny
    (Cartan matrices of Levi subsystems), so no pivot strategy is needed
    beyond nonzero selection.
    """
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


if __name__ == "__main__":
    import doctest

    doctest.testmod()
