"""Creating-Subject engine.

The Creating Subject's knowledge about an open problem is modelled as a
staged oracle: ``status(s)`` is ``None`` while undecided and a
:class:`Verdict` from the first deciding stage on.  Choice sequences built
from an oracle (Brouwer's weak-counterexample real, Vesley's signed real,
the Kripke witness) read only the stage of first decision and its verdict.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .creals import (
    MeasurablyCert,
    Disproved,
    Proved,
    RealGen,
    TriVerdict,
    Unknown,
    abs_real,
    const_rational,
    measurably_greater,
    mul,
    neg,
    not_measurably_smaller,
    scale_nat,
)

__all__ = [
    "Verdict",
    "PROVED_P",
    "PROVED_NOT_P",
    "PROVED_ALL_ZERO",
    "found_nonzero",
    "ProblemOracle",
    "SyntheticOracle",
    "GoldbachOracle",
    "parse_oracle",
    "BinarySeq",
    "brouwer_alpha",
    "vesley_x",
    "kripke_witness",
    "MembershipCert",
    "m_alpha_contains",
    "archimedean_probe",
    "SubringReport",
    "subring_probe",
]


@dataclass(frozen=True)
class Verdict:
    """What the Subject has found out: ``provedP``/``provedNotP`` for a
    P-oracle, ``allzero``/``nonzero`` (with the offending index) for an
    oracle about ``forall n alpha(n) = 0``."""

    kind: str
    index: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("provedP", "provedNotP", "allzero", "nonzero"):
            raise ValueError(f"unknown verdict kind {self.kind!r}")
        if (self.kind == "nonzero") != (self.index is not None):
            raise ValueError("only a nonzero verdict carries an index")

    @property
    def domain(self) -> str:
        return "P" if self.kind in ("provedP", "provedNotP") else "allzero"

    def __str__(self):
        return f"nonzero@{self.index}" if self.kind == "nonzero" else self.kind


PROVED_P = Verdict("provedP")
PROVED_NOT_P = Verdict("provedNotP")
PROVED_ALL_ZERO = Verdict("allzero")


def found_nonzero(k: int) -> Verdict:
    return Verdict("nonzero", k)


class ProblemOracle:
    """Monotone staged decision process with at most one transition."""

    #: verdict domain, or None if it never decides and so fits either
    domain: Optional[str] = None

    def status(self, s: int) -> Optional[Verdict]:
        raise NotImplementedError

    def decision_stage(self, horizon: int) -> Optional[int]:
        """First stage ``s <= horizon`` with a decision, else None."""
        if horizon < 0 or self.status(horizon) is None:
            return None
        lo, hi = 0, horizon
        while lo < hi:
            mid = (lo + hi) // 2
            if self.status(mid) is None:
                lo = mid + 1
            else:
                hi = mid
        return lo


@dataclass(frozen=True)
class SyntheticOracle(ProblemOracle):
    """Deterministic stand-in: decides ``verdict`` at stage ``decide_at``."""

    decide_at: Optional[int] = None
    verdict: Optional[Verdict] = None

    def __post_init__(self):
        if self.decide_at is not None:
            if self.decide_at < 0:
                raise ValueError("decision stage must be a natural number")
            if self.verdict is None:
                raise ValueError("a deciding oracle needs a verdict")

    @property
    def domain(self):
        return None if self.decide_at is None else self.verdict.domain

    def status(self, s: int) -> Optional[Verdict]:
        if self.decide_at is not None and s >= self.decide_at:
            return self.verdict
        return None

    def decision_stage(self, horizon: int) -> Optional[int]:
        if self.decide_at is not None and self.decide_at <= horizon:
            return self.decide_at
        return None

    def __str__(self):
        if self.decide_at is None:
            return "undecided"
        return f"synthetic:decide={self.decide_at}:verdict={self.verdict}"


@dataclass(frozen=True, eq=False)
class GoldbachOracle(ProblemOracle):
    """Decides ``nonzero@k`` at stage ``s`` iff an even number in
    ``[4, 2s + 4]`` is not a sum of two primes; ``k`` indexes the first such
    even number ``2k + 4``."""

    domain = "allzero"
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    _state: dict = field(default_factory=lambda: {"checked": -1, "fail": None}, repr=False)
    _primes: bytearray = field(default_factory=bytearray, repr=False)

    def __eq__(self, other):
        return isinstance(other, GoldbachOracle)

    def __hash__(self):
        return hash(GoldbachOracle)

    def _sieve(self, limit: int) -> bytearray:
        if len(self._primes) <= limit:
            size = max(limit + 1, 2 * len(self._primes))
            sieve = bytearray([1]) * size
            sieve[0:2] = b"\x00\x00"
            for p in range(2, math.isqrt(size - 1) + 1):
                if sieve[p]:
                    sieve[p * p :: p] = bytearray(len(range(p * p, size, p)))
            self._primes[:] = sieve
        return self._primes

    @staticmethod
    def _representable(e: int, sieve: bytearray) -> bool:
        return any(sieve[p] and sieve[e - p] for p in range(2, e // 2 + 1))

    def status(self, s: int) -> Optional[Verdict]:
        with self._lock:
            st = self._state
            if st["fail"] is None and st["checked"] < s:
                sieve = self._sieve(2 * s + 4)
                for k in range(st["checked"] + 1, s + 1):
                    if not self._representable(2 * k + 4, sieve):
                        st["fail"] = k
                        break
                    st["checked"] = k
            fail = st["fail"]
        if fail is not None and fail <= s:
            return found_nonzero(fail)
        return None

    def __str__(self):
        return "goldbach"


def parse_oracle(spec: str) -> ProblemOracle:
    """Parse ``undecided``, ``goldbach`` or
    ``synthetic:decide=<s>:verdict=<provedP|provedNotP|allzero|nonzero@k>``."""
    spec = spec.strip()
    if spec == "undecided":
        return SyntheticOracle()
    if spec == "goldbach":
        return GoldbachOracle()
    parts = spec.split(":")
    if parts[0] != "synthetic" or len(parts) != 3:
        raise ValueError(f"malformed oracle spec {spec!r}")
    fields = {}
    for part in parts[1:]:
        name, sep, value = part.partition("=")
        if not sep or name in fields:
            raise ValueError(f"malformed oracle spec {spec!r}")
        fields[name] = value
    if set(fields) != {"decide", "verdict"}:
        raise ValueError(f"malformed oracle spec {spec!r}")
    try:
        stage = int(fields["decide"])
    except ValueError:
        raise ValueError(f"bad decision stage in {spec!r}") from None
    if stage < 0:
        raise ValueError(f"bad decision stage in {spec!r}")
    raw = fields["verdict"]
    if raw.startswith("nonzero@"):
        try:
            k = int(raw[len("nonzero@"):])
        except ValueError:
            raise ValueError(f"bad nonzero index in {spec!r}") from None
        if k < 0:
            raise ValueError(f"bad nonzero index in {spec!r}")
        verdict = found_nonzero(k)
    elif raw in ("provedP", "provedNotP", "allzero"):
        verdict = Verdict(raw)
    else:
        raise ValueError(f"unknown verdict {raw!r}")
    return SyntheticOracle(stage, verdict)


def _require_domain(oracle: ProblemOracle, domain: str, what: str):
    if oracle.domain is not None and oracle.domain != domain:
        raise ValueError(f"{what} needs a {domain}-oracle, got {oracle}")


def brouwer_alpha(oracle: ProblemOracle) -> RealGen:
    """0 while undecided; ``2**-s`` from the first deciding stage ``s`` on,
    whichever way the problem was decided."""

    def approx(v):
        s = oracle.decision_stage(v)
        return Fraction(0) if s is None else Fraction(1, 2**s)

    return RealGen(approx, lower=0, upper=1, key=("alpha", oracle))


def vesley_x(oracle: ProblemOracle) -> RealGen:
    """0 while undecided; ``+2**-s`` after an all-zero proof at stage ``s``,
    ``-2**-s`` after a nonzero entry is found."""
    _require_domain(oracle, "allzero", "vesley_x")

    def approx(v):
        s = oracle.decision_stage(v)
        if s is None:
            return Fraction(0)
        mag = Fraction(1, 2**s)
        return mag if oracle.status(s).kind == "allzero" else -mag

    return RealGen(approx, lower=-1, upper=1, key=("vesley", oracle))


class BinarySeq:
    """0/1 sequence whose entry at ``n`` is 1 iff the oracle has decided by stage ``n``."""

    __slots__ = ("oracle",)

    def __init__(self, oracle: ProblemOracle):
        self.oracle = oracle

    def entries(self, n: int) -> int:
        return 0 if self.oracle.status(n) is None else 1

    __getitem__ = entries

    def trace(self, count: int) -> list[int]:
        return [self.entries(n) for n in range(count)]


def kripke_witness(oracle: ProblemOracle) -> BinarySeq:
    return BinarySeq(oracle)


@dataclass(frozen=True)
class MembershipCert:
    """``|multiplier * y| >o |x|`` for the canonical witness ``y``, hence
    ``not (|x| >o |multiplier * y|)``."""

    multiplier: int
    inner: MeasurablyCert

    def __str__(self):
        return f"witness={self.multiplier}*y {self.inner}"


def m_alpha_contains(x: RealGen, oracle: ProblemOracle, fuel: int) -> TriVerdict:
    """Stage-relative membership of ``x`` in the alpha-infinitesimals.

    Witnesses are the canonical ``y = vesley_x(oracle)`` and its natural
    multiples, all of which lie in ``L(alpha)``.  ``Proved`` comes either from
    structure (``|x| <= |y|`` everywhere) or, once the oracle has decided
    within ``fuel``, from a certificate ``|k*y| >o |x|``.  Nothing observed
    at a finite stage rules membership out, so ``Disproved`` never occurs.
    """
    y = vesley_x(oracle)
    ax = abs_real(x)
    structural = not_measurably_smaller(abs_real(y), ax)
    if isinstance(structural, Proved):
        return structural
    if fuel <= 0 or oracle.decision_stage(fuel) is None:
        return Unknown(max(fuel, 0))
    k = 1
    for _ in range(fuel + 1):
        verdict = measurably_greater(abs_real(scale_nat(k, y)), ax, fuel)
        if isinstance(verdict, Proved):
            return Proved(MembershipCert(k, verdict.cert))
        k *= 2
    return Unknown(fuel)


def archimedean_probe(x: RealGen, fuel: int) -> Optional[tuple[int, MeasurablyCert]]:
    """Least ``n`` in ``1..fuel`` with ``n * x >o 1`` provable within ``fuel``."""
    one = const_rational(1)
    for n in range(1, fuel + 1):
        verdict = measurably_greater(scale_nat(n, x), one, fuel)
        if isinstance(verdict, Proved):
            return n, verdict.cert
    return None


@dataclass
class SubringReport:
    entries: list[tuple[str, TriVerdict]] = field(default_factory=list)

    @property
    def disproved(self) -> list[tuple[str, TriVerdict]]:
        return [(label, v) for label, v in self.entries if isinstance(v, Disproved)]

    def lines(self) -> list[str]:
        return [f"{label}: {verdict}" for label, verdict in self.entries]


def _multipliers():
    """1, -1, 0, then 1/2, -1/2, 1/3, -1/3, 2/3, ... (all of modulus <= 1)."""
    yield Fraction(1)
    yield Fraction(-1)
    yield Fraction(0)
    den = 2
    while True:
        for num in range(1, den):
            q = Fraction(num, den)
            if q.denominator == den:
                yield q
                yield -q
        den += 1


def subring_probe(oracle: ProblemOracle, sample_count: int, fuel: int) -> SubringReport:
    """Re-run membership on sums, differences and products of known members."""
    _require_domain(oracle, "allzero", "subring_probe")
    y = vesley_x(oracle)
    members: list[tuple[str, RealGen]] = []
    for q, _ in zip(_multipliers(), range(sample_count)):
        if q == 1:
            members.append(("y", y))
        elif q == -1:
            members.append(("-y", neg(y)))
        elif q == 0:
            members.append(("0", const_rational(0)))
        else:
            members.append((f"{q}*y", mul(const_rational(q), y)))

    report = SubringReport()
    for label, x in members:
        report.entries.append((label, m_alpha_contains(x, oracle, fuel)))
    for i, (la, a) in enumerate(members):
        for lb, b in members[i:]:
            for op, z in (("+", a + b), ("-", a - b), ("*", a * b)):
                report.entries.append((f"({la}) {op} ({lb})", m_alpha_contains(z, oracle, fuel)))
    return report

