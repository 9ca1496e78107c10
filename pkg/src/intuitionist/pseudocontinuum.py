"""Brouwer's pseudo-continuum as a twisted group ring.

A point is a finitely supported map from integer coordinate tuples
``(a_1, ..., a_n)`` (read as ``a_1*w**(n-1) + ... + a_n``) to rational
coefficients.  Addition is coefficientwise.  Multiplication adds coordinate
tuples and multiplies by the twist ``p**B(a, b)`` with
``B(a, b) = sum_{i<j} a_i * b_j``; since ``B`` is bilinear the twist is a
bicharacter and the product is associative.  Points are ordered by the
coefficient at the lexicographically smallest coordinate where they differ,
so negative coordinates are infinitely large and positive ones infinitesimal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from . import kernels

__all__ = [
    "DimensionError",
    "Ordering",
    "TwistConfig",
    "PseudoContinuum",
    "PseudoPoint",
    "NonArchimedeanWitness",
    "commutator",
    "non_archimedean_witness",
]


class DimensionError(ValueError):
    pass


class Ordering(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class TwistConfig:
    p: Fraction = Fraction(2)

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        if self.p <= 0:
            raise ValueError("twist p must be a positive rational")

    @staticmethod
    def bilinear(a: tuple[int, ...], b: tuple[int, ...]) -> int:
        return sum(a[i] * b[j] for j in range(len(b)) for i in range(j))

    def factor(self, a, b) -> Fraction:
        return self.p ** self.bilinear(a, b)


@dataclass(frozen=True)
class PseudoContinuum:
    """The ambient space: dimension and twist.  Points remember their space."""

    dim: int = 2
    twist: TwistConfig = TwistConfig()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be at least 1")

    @property
    def zero_index(self) -> tuple[int, ...]:
        return (0,) * self.dim

    def _check_index(self, c) -> tuple[int, ...]:
        c = tuple(int(a) for a in c)
        if len(c) != self.dim:
            raise DimensionError(f"index {list(c)} has length {len(c)}, expected {self.dim}")
        return c

    def point(self, terms: Mapping | Iterable = ()) -> "PseudoPoint":
        items = terms.items() if isinstance(terms, Mapping) else terms
        support: dict[tuple[int, ...], Fraction] = {}
        for idx, coeff in items:
            idx = self._check_index(idx)
            support[idx] = support.get(idx, 0) + Fraction(coeff)
        return PseudoPoint(self, support)

    def unit(self, c) -> "PseudoPoint":
        return PseudoPoint(self, {self._check_index(c): Fraction(1)})

    def embed(self, q) -> "PseudoPoint":
        return PseudoPoint(self, {self.zero_index: Fraction(q)})

    @property
    def zero(self) -> "PseudoPoint":
        return PseudoPoint(self, {})

    @property
    def one(self) -> "PseudoPoint":
        return self.embed(1)


class PseudoPoint:
    __slots__ = ("space", "_support", "_hash")

    def __init__(self, space: PseudoContinuum, support: dict):
        self.space = space
        self._support = {k: v for k, v in support.items() if v != 0}
        self._hash = None

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def support(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._support)

    def terms(self) -> list[tuple[tuple[int, ...], Fraction]]:
        return sorted(self._support.items())

    def coefficient(self, c) -> Fraction:
        return self._support.get(tuple(c), Fraction(0))

    def is_zero(self) -> bool:
        return not self._support

    def leading(self) -> tuple[tuple[int, ...], Fraction]:
        """Smallest support index and its coefficient (the most significant term)."""
        if not self._support:
            raise ValueError("zero has no leading term")
        idx = min(self._support)
        return idx, self._support[idx]

    def _same_space(self, other: "PseudoPoint"):
        if not isinstance(other, PseudoPoint):
            return NotImplemented
        if other.space.dim != self.space.dim:
            raise DimensionError(f"dimension {self.dim} vs {other.dim}")
        if other.space.twist != self.space.twist:
            raise ValueError("points come from differently twisted spaces")
        return other

    def _lift(self, other) -> "PseudoPoint":
        if isinstance(other, PseudoPoint):
            return self._same_space(other)
        if isinstance(other, (int, Fraction)):
            return self.space.embed(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._support)
        for k, v in other._support.items():
            out[k] = out.get(k, 0) + v
        return PseudoPoint(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return PseudoPoint(self.space, {k: -v for k, v in self._support.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = kernels.twisted_product(
            list(self._support.items()),
            list(other._support.items()),
            self.space.twist.p,
            self.dim,
        )
        return PseudoPoint(self.space, out)

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self

    def scale(self, q) -> "PseudoPoint":
        q = Fraction(q)
        return PseudoPoint(self.space, {k: q * v for k, v in self._support.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("only natural powers")
        out = self.space.one
        for _ in range(n):
            out = out * self
        return out

    def compare(self, other) -> Ordering:
        other = self._lift(other)
        diff = kernels.lex_first_difference(self._support, other._support)
        if diff is None:
            return Ordering.EQ
        _, a, b = diff
        return Ordering.LT if a < b else Ordering.GT

    def __eq__(self, other):
        if isinstance(other, PseudoPoint):
            return (
                self.space.dim == other.space.dim
                and self.space.twist == other.space.twist
                and self._support == other._support
            )
        if isinstance(other, (int, Fraction)):
            return self._support == self.space.embed(other)._support
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.space, frozenset(self._support.items())))
        return self._hash

    def __lt__(self, other):
        return self.compare(other) is Ordering.LT

    def __le__(self, other):
        return self.compare(other) is not Ordering.GT

    def __gt__(self, other):
        return self.compare(other) is Ordering.GT

    def __ge__(self, other):
        return self.compare(other) is not Ordering.LT

    def sign(self) -> int:
        if not self._support:
            return 0
        return 1 if self.leading()[1] > 0 else -1

    def is_infinitely_large(self) -> bool:
        """Positive and above every embedded rational."""
        idx, coeff = self._nonzero_leading()
        return idx < self.space.zero_index and coeff > 0

    def is_infinitesimal(self) -> bool:
        idx, _ = self._nonzero_leading()
        return idx > self.space.zero_index

    def _nonzero_leading(self):
        if not self._support:
            raise ValueError("sign of zero is undefined")
        return self.leading()

    def __str__(self):
        if not self._support:
            return "0"
        parts = []
        for idx, c in self.terms():
            unit = "e[" + ",".join(str(a) for a in idx) + "]"
            parts.append(unit if c == 1 else f"{c}*{unit}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PseudoPoint({self})"


def commutator(x: PseudoPoint, y: PseudoPoint) -> PseudoPoint:
    return x * y - y * x


@dataclass(frozen=True)
class NonArchimedeanWitness:
    """Certificate that no natural multiple of ``x`` reaches ``y``.

    Scaling by ``n`` leaves the support of ``x`` unchanged, so ``y`` keeps
    its more significant leading term at ``y_lead`` and ``n*x < y`` for all
    ``n``.
    """

    x: PseudoPoint
    y: PseudoPoint
    x_lead: tuple[int, ...]
    y_lead: tuple[int, ...]

    def holds_for(self, n: int) -> bool:
        return self.x.scale(n).compare(self.y) is Ordering.LT

    def __str__(self):
        return (
            f"for all n: n*({self.x}) < {self.y}  "
            f"(leading index {list(self.y_lead)} < {list(self.x_lead)})"
        )


def non_archimedean_witness(x: PseudoPoint, y: PseudoPoint) -> Optional[NonArchimedeanWitness]:
    """Witness of ``not exists n: n*x > y`` for positive ``x`` and ``y``, or None."""
    if x.sign() <= 0 or y.sign() <= 0:
        return None
    x_lead, _ = x.leading()
    y_lead, _ = y.leading()
    if y_lead < x_lead:
        return NonArchimedeanWitness(x, y, x_lead, y_lead)
    return None

