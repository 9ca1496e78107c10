"""Constructive reals as regular rational sequences.

A :class:`RealGen` is a total map from index ``v`` to a :class:`Fraction`
satisfying ``|x(v) - x(w)| <= 2**-v + 2**-w``.  Positive order relations
(measurably smaller/greater, apartness) are semidecidable: they are searched
for up to an explicit ``fuel`` bound and come back with a certificate that
can be re-checked independently.  Negative relations are only ever
established from structural facts (global bounds, construction identity).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Optional, Union

from . import kernels

Rational = Fraction

__all__ = [
    "Rational",
    "RealGen",
    "MeasurablyCert",
    "ApartCert",
    "StructuralCert",
    "Side",
    "Proved",
    "Disproved",
    "Unknown",
    "TriVerdict",
    "const_rational",
    "add",
    "neg",
    "sub",
    "abs_real",
    "scale_nat",
    "mul",
    "measurably_smaller",
    "measurably_greater",
    "apart",
    "not_measurably_smaller",
    "verify_measurably_cert",
    "format_rational",
    "ceil_log2",
]


def format_rational(q: Fraction) -> str:
    """``a/b`` in lowest terms, ``a`` when the denominator is 1."""
    return str(Fraction(q))


def ceil_log2(q) -> int:
    """Smallest ``k >= 0`` with ``2**k >= q`` (``q`` rational, 0 for ``q <= 1``)."""
    q = Fraction(q)
    if q <= 1:
        return 0
    c = -((-q.numerator) // q.denominator)
    return (c - 1).bit_length()


class RealGen:
    """A regular sequence of rationals, memoized.

    ``lower``/``upper`` are optional global bounds that every approximant
    respects.  ``key`` is a hashable description of how the generator was
    built; two generators with equal non-None keys denote the same sequence.
    """

    __slots__ = ("_fn", "lower", "upper", "key", "_cache")

    def __init__(
        self,
        fn: Callable[[int], Fraction],
        lower: Optional[Fraction] = None,
        upper: Optional[Fraction] = None,
        key: Optional[Hashable] = None,
    ):
        self._fn = fn
        self.lower = None if lower is None else Fraction(lower)
        self.upper = None if upper is None else Fraction(upper)
        self.key = key
        self._cache: dict[int, Fraction] = {}

    def approx(self, v: int) -> Fraction:
        if v < 0:
            raise ValueError("index must be a natural number")
        q = self._cache.get(v)
        if q is not None:
            return q
        q = self._fn(v)
        if type(q) is not Fraction:
            q = Fraction(q)
        # setdefault keeps the first stored value if another thread got there
        return self._cache.setdefault(v, q)

    __call__ = approx

    def same_as(self, other: "RealGen") -> bool:
        return self is other or (self.key is not None and self.key == other.key)

    def trace(self, count: int) -> list[Fraction]:
        return [self.approx(v) for v in range(count)]

    def magnitude_bound(self) -> Fraction:
        """A bound on ``|approx(v)|`` valid for every ``v``."""
        if self.lower is not None and self.upper is not None:
            return max(abs(self.lower), abs(self.upper))
        # |x(v) - x(0)| <= 2**-v + 1 <= 2
        return abs(self.approx(0)) + 2

    def __add__(self, other):
        return add(self, _coerce(other))

    def __radd__(self, other):
        return add(_coerce(other), self)

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __neg__(self):
        return neg(self)

    def __abs__(self):
        return abs_real(self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    def __rmul__(self, other):
        return mul(_coerce(other), self)

    def __repr__(self):
        return f"RealGen(key={self.key!r}, lower={self.lower}, upper={self.upper})"


def _coerce(x) -> RealGen:
    if isinstance(x, RealGen):
        return x
    return const_rational(Fraction(x))


def _key(tag, *parts):
    if any(isinstance(p, RealGen) and p.key is None for p in parts):
        return None
    return (tag,) + tuple(p.key if isinstance(p, RealGen) else p for p in parts)


def const_rational(q) -> RealGen:
    q = Fraction(q)
    return RealGen(lambda v: q, lower=q, upper=q, key=("const", q))


def add(x: RealGen, y: RealGen) -> RealGen:
    lower = x.lower + y.lower if x.lower is not None and y.lower is not None else None
    upper = x.upper + y.upper if x.upper is not None and y.upper is not None else None
    return RealGen(
        lambda v: x.approx(v + 1) + y.approx(v + 1),
        lower=lower,
        upper=upper,
        key=_key("add", x, y),
    )


def neg(x: RealGen) -> RealGen:
    return RealGen(
        lambda v: -x.approx(v),
        lower=None if x.upper is None else -x.upper,
        upper=None if x.lower is None else -x.lower,
        key=_key("neg", x),
    )


def sub(x: RealGen, y: RealGen) -> RealGen:
    return add(x, neg(y))


def abs_real(x: RealGen) -> RealGen:
    lower = Fraction(0)
    upper = None
    if x.lower is not None and x.upper is not None:
        upper = max(abs(x.lower), abs(x.upper))
        if x.lower > 0:
            lower = x.lower
        elif x.upper < 0:
            lower = -x.upper
    return RealGen(lambda v: abs(x.approx(v)), lower=lower, upper=upper, key=_key("abs", x))


def scale_nat(n: int, x: RealGen) -> RealGen:
    """``n * x`` for a natural ``n``; reads ``x`` ``ceil(log2 n)`` indices ahead."""
    if n < 0:
        raise ValueError("scale_nat takes a natural number")
    pad = ceil_log2(max(n, 1))
    return RealGen(
        lambda v: n * x.approx(v + pad),
        lower=None if x.lower is None else n * x.lower,
        upper=None if x.upper is None else n * x.upper,
        key=_key("scale", n, x),
    )


def mul(x: RealGen, y: RealGen) -> RealGen:
    bound = max(x.magnitude_bound(), y.magnitude_bound())
    # 2**pad >= 2*(1 + bound) keeps the product regular
    pad = ceil_log2(1 + bound) + 1
    lower = upper = None
    if None not in (x.lower, x.upper, y.lower, y.upper):
        corners = [a * b for a in (x.lower, x.upper) for b in (y.lower, y.upper)]
        lower, upper = min(corners), max(corners)
    return RealGen(
        lambda v: x.approx(v + pad) * y.approx(v + pad),
        lower=lower,
        upper=upper,
        key=_key("mul", x, y),
    )


# --- verdicts -------------------------------------------------------------


@dataclass(frozen=True)
class MeasurablyCert:
    """From index ``m`` on, the upper sequence exceeds the lower by more than ``2**-n``."""

    m: int
    n: int

    def __str__(self):
        return f"m={self.m} n={self.n}"


class Side(enum.Enum):
    LEFT_SMALLER = "left_smaller"
    RIGHT_SMALLER = "right_smaller"


@dataclass(frozen=True)
class ApartCert:
    k: int
    side: Side
    inner: MeasurablyCert

    def __str__(self):
        return f"{self.inner} k={self.k} side={self.side.value}"


@dataclass(frozen=True)
class StructuralCert:
    reason: str

    def __str__(self):
        return f"structural: {self.reason}"


Certificate = Union[MeasurablyCert, ApartCert, StructuralCert]


@dataclass(frozen=True)
class Proved:
    cert: Certificate

    def __str__(self):
        if isinstance(self.cert, StructuralCert):
            return "PROVED structural"
        return f"PROVED {self.cert}"


@dataclass(frozen=True)
class Disproved:
    cert: StructuralCert

    def __str__(self):
        return "DISPROVED"


@dataclass(frozen=True)
class Unknown:
    fuel_spent: int

    def __str__(self):
        return f"UNKNOWN fuel={self.fuel_spent}"


TriVerdict = Union[Proved, Disproved, Unknown]


def _never_exceeds(lo: RealGen, hi: RealGen) -> Optional[StructuralCert]:
    """Evidence that ``hi(v) - lo(v) <= 0`` for every ``v``."""
    if lo.same_as(hi):
        return StructuralCert("identical generators")
    if hi.upper is not None and lo.lower is not None and hi.upper <= lo.lower:
        return StructuralCert(f"upper bound {hi.upper} <= lower bound {lo.lower}")
    return None


def measurably_smaller(beta: RealGen, gamma: RealGen, fuel: int) -> TriVerdict:
    """Search for ``beta <o gamma``: some ``m, n <= fuel`` with
    ``gamma(m) - beta(m) > 2**-n + 2**(2-m)``.

    Smallest ``m`` wins, then smallest ``n``.  A structural refutation is
    reported whatever the fuel.
    """
    refutation = _never_exceeds(beta, gamma)
    if refutation is not None:
        return Disproved(refutation)
    if fuel <= 0:
        return Unknown(0)
    found = kernels.margin_search(beta.approx, gamma.approx, fuel)
    if found is None:
        return Unknown(fuel)
    return Proved(MeasurablyCert(*found))


def measurably_greater(beta: RealGen, gamma: RealGen, fuel: int) -> TriVerdict:
    return measurably_smaller(gamma, beta, fuel)


def apart(beta: RealGen, gamma: RealGen, fuel: int) -> TriVerdict:
    left = measurably_smaller(beta, gamma, fuel)
    if isinstance(left, Proved):
        return Proved(ApartCert(left.cert.n, Side.LEFT_SMALLER, left.cert))
    right = measurably_greater(beta, gamma, fuel)
    if isinstance(right, Proved):
        return Proved(ApartCert(right.cert.n, Side.RIGHT_SMALLER, right.cert))
    if isinstance(left, Disproved) and isinstance(right, Disproved):
        return Disproved(StructuralCert("both directions refuted"))
    return Unknown(max(fuel, 0))


def not_measurably_smaller(beta: RealGen, gamma: RealGen) -> TriVerdict:
    """``not (beta <o gamma)`` from structure alone: ``beta >= gamma`` everywhere."""
    cert = _never_exceeds(beta, gamma)
    if cert is None:
        return Unknown(0)
    return Proved(cert)


def verify_measurably_cert(
    beta: RealGen, gamma: RealGen, cert: MeasurablyCert, window: int = 64
) -> bool:
    """Re-check a certificate for ``beta <o gamma`` without the search code.

    Checks the margin at ``m`` (which by regularity covers every ``v >= m``)
    and, directly, ``gamma(v) - beta(v) > 2**-n`` on ``[m, m + window]``.
    """
    m, n = cert.m, cert.n
    eps = Fraction(1, 2**n)
    slack = Fraction(4, 2**m)
    if not gamma.approx(m) - beta.approx(m) > eps + slack:
        return False
    return all(gamma.approx(v) - beta.approx(v) > eps for v in range(m, m + window + 1))
