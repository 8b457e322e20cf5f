"""Wigner 3-j symbols in exact arithmetic, with independent oracles.

The production route is the Racah single-sum formula evaluated entirely in
rational arithmetic, returning a SignedSqrtRational.  Two cross-checks live
alongside it: a brute-force Clebsch-Gordan construction that builds coupled
states by ladder-operator recursion from the highest weight, and the Wigner
small-d function used to validate the monopole harmonics.  Phase convention
is Condon-Shortley throughout.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exact_algebra import HalfInt, SignedSqrtRational, as_half_int, factorial


@dataclass(frozen=True)
class ThreeJArgs:
    """Validated arguments (j1 j2 j3; m1 m2 m3) of a 3-j symbol."""

    j1: HalfInt
    j2: HalfInt
    j3: HalfInt
    m1: HalfInt
    m2: HalfInt
    m3: HalfInt

    def __post_init__(self) -> None:
        for j, m, name in (
            (self.j1, self.m1, "1"),
            (self.j2, self.m2, "2"),
            (self.j3, self.m3, "3"),
        ):
            if j.twice_value < 0:
                raise DomainError(f"j{name} must be non-negative, got {j}")
            if abs(m.twice_value) > j.twice_value:
                raise DomainError(f"|m{name}| exceeds j{name}: m{name}={m}, j{name}={j}")
            if (j.twice_value - m.twice_value) % 2 != 0:
                raise DomainError(f"j{name} - m{name} must be an integer: j{name}={j}, m{name}={m}")

    @classmethod
    def of(cls, j1, j2, j3, m1, m2, m3) -> "ThreeJArgs":
        return cls(*(as_half_int(v) for v in (j1, j2, j3, m1, m2, m3)))


def _triangle_ok(tj1: int, tj2: int, tj3: int) -> bool:
    return abs(tj1 - tj2) <= tj3 <= tj1 + tj2


def three_j(args: ThreeJArgs) -> SignedSqrtRational:
    """Exact 3-j symbol via the Racah single-sum formula.

    Returns the canonical zero when the m's do not sum to zero or the
    triangle condition fails; otherwise an exact signed square root.
    """
    tj1, tj2, tj3 = args.j1.twice_value, args.j2.twice_value, args.j3.twice_value
    tm1, tm2, tm3 = args.m1.twice_value, args.m2.twice_value, args.m3.twice_value
    if tm1 + tm2 + tm3 != 0:
        return SignedSqrtRational.zero()
    if not _triangle_ok(tj1, tj2, tj3):
        return SignedSqrtRational.zero()
    # m-sum zero plus per-column integrality forces an integer j1+j2+j3
    assert (tj1 + tj2 + tj3) % 2 == 0

    a = (tj1 + tj2 - tj3) // 2
    b = (tj1 - tj2 + tj3) // 2
    c = (-tj1 + tj2 + tj3) // 2
    delta = Fraction(
        factorial(a) * factorial(b) * factorial(c),
        factorial((tj1 + tj2 + tj3) // 2 + 1),
    )
    norm = Fraction(
        factorial((tj1 - tm1) // 2) * factorial((tj1 + tm1) // 2)
        * factorial((tj2 - tm2) // 2) * factorial((tj2 + tm2) // 2)
        * factorial((tj3 - tm3) // 2) * factorial((tj3 + tm3) // 2)
    )

    # bounds keep every factorial argument non-negative
    p = (tj3 - tj2 + tm1) // 2
    q = (tj3 - tj1 - tm2) // 2
    r1 = (tj1 - tm1) // 2
    r2 = (tj2 + tm2) // 2
    t_min = max(0, -p, -q)
    t_max = min(a, r1, r2)
    total = Fraction(0)
    for t in range(t_min, t_max + 1):
        term = Fraction(
            1,
            factorial(t) * factorial(a - t) * factorial(r1 - t) * factorial(r2 - t)
            * factorial(p + t) * factorial(q + t),
        )
        total += -term if t % 2 else term
    if total == 0:
        return SignedSqrtRational.zero()

    phase_exp = (tj1 - tj2 - tm3) // 2
    sign = -1 if phase_exp % 2 else 1
    if total < 0:
        sign, total = -sign, -total
    return SignedSqrtRational(sign, total * total * delta * norm)


def three_j_column_negation(args: ThreeJArgs) -> int:
    """Sign (-1)^(j1+j2+j3) relating a 3-j symbol to its m-negated form."""
    tsum = args.j1.twice_value + args.j2.twice_value + args.j3.twice_value
    if tsum % 2 != 0:
        raise DomainError(f"j1+j2+j3 is not an integer: {args.j1}+{args.j2}+{args.j3}")
    return -1 if (tsum // 2) % 2 else 1


def _raising_coeff(tj: int, tm: int) -> SignedSqrtRational:
    """Matrix element sqrt((j-m)(j+m+1)) of J+ between |j m> and |j m+1>."""
    val = Fraction((tj - tm) // 2) * Fraction((tj + tm) // 2 + 1)
    return SignedSqrtRational.sqrt_of(val)


def _lowering_coeff(tj: int, tm: int) -> SignedSqrtRational:
    """Matrix element sqrt((j+m)(j-m+1)) of J- between |j m> and |j m-1>."""
    val = Fraction((tj + tm) // 2) * Fraction((tj - tm) // 2 + 1)
    return SignedSqrtRational.sqrt_of(val)


_CG_TABLE_LOCK = threading.Lock()
_CG_TABLES: dict[tuple[int, int, int], dict[tuple[int, int], SignedSqrtRational]] = {}


def _cg_table(tj1: int, tj2: int, tj: int) -> dict[tuple[int, int], SignedSqrtRational]:
    """All <j1 m1 j2 m2 | j m> for one coupling triple, keyed by (2m, 2m1).

    Built once per triple: the highest-weight state from the J+ null
    condition with a positive leading coefficient (Condon-Shortley), then
    every lower m level by applying J-.  Exact throughout.
    """
    key = (tj1, tj2, tj)
    with _CG_TABLE_LOCK:
        cached = _CG_TABLES.get(key)
    if cached is not None:
        return cached

    def m1_range(tm: int) -> range:
        lo = max(-tj1, tm - tj2)
        hi = min(tj1, tm + tj2)
        return range(lo, hi + 2, 2)

    table: dict[tuple[int, int], SignedSqrtRational] = {}

    # highest weight m = j: J+ annihilates, fixing successive ratios
    level: dict[int, SignedSqrtRational] = {tj1: SignedSqrtRational.one()}
    for tm1 in range(tj1, max(-tj1, tj - tj2) + 1, -2):
        # coefficient pairing (m1-1, m2+1) against (m1, m2) in J+ = 0
        tm2 = tj - tm1
        level[tm1 - 2] = -(level[tm1] * _raising_coeff(tj2, tm2)) / _raising_coeff(tj1, tm1 - 2)
    norm2 = sum((v.radicand for v in level.values()), Fraction(0))
    inv = SignedSqrtRational.sqrt_of(norm2)
    level = {tm1: v / inv for tm1, v in level.items()}
    for tm1, v in level.items():
        table[(tj, tm1)] = v

    # descend: J- on the coupled side equals J1- + J2- on the product side
    for tm in range(tj, -tj + 1, -2):
        lower: dict[int, SignedSqrtRational] = {}
        denom = _lowering_coeff(tj, tm)
        for tm1 in m1_range(tm - 2):
            tm2 = tm - 2 - tm1
            acc = SignedSqrtRational.zero()
            up1 = level.get(tm1 + 2)
            if up1 is not None and tm1 + 2 <= tj1:
                acc = acc.add_commensurate(up1 * _lowering_coeff(tj1, tm1 + 2))
            up2 = level.get(tm1)
            if up2 is not None and abs(tm2 + 2) <= tj2:
                acc = acc.add_commensurate(up2 * _lowering_coeff(tj2, tm2 + 2))
            lower[tm1] = acc / denom
        for tm1, v in lower.items():
            table[(tm - 2, tm1)] = v
        level = lower

    with _CG_TABLE_LOCK:
        _CG_TABLES[key] = table
    return table


def clebsch_gordan_oracle(j1, j2, j, m1, m2) -> SignedSqrtRational:
    """<j1 m1 j2 m2 | j (m1+m2)> by explicit ladder recursion, exact.

    Deliberately independent of the Racah route so the two can be compared
    symbol by symbol.
    """
    j1, j2, j = as_half_int(j1), as_half_int(j2), as_half_int(j)
    m1, m2 = as_half_int(m1), as_half_int(m2)
    tj1, tj2, tj = j1.twice_value, j2.twice_value, j.twice_value
    if min(tj1, tj2, tj) < 0 or not _triangle_ok(tj1, tj2, tj) or (tj1 + tj2 + tj) % 2 != 0:
        raise DomainError(f"invalid coupling triple ({j1}, {j2}) -> {j}")
    for jj, mm, name in ((j1, m1, "m1"), (j2, m2, "m2")):
        if abs(mm.twice_value) > jj.twice_value or (jj.twice_value - mm.twice_value) % 2 != 0:
            raise DomainError(f"{name}={mm} invalid for j={jj}")
    tm = m1.twice_value + m2.twice_value
    if abs(tm) > tj:
        return SignedSqrtRational.zero()
    return _cg_table(tj1, tj2, tj).get((tm, m1.twice_value), SignedSqrtRational.zero())


def three_j_via_clebsch_gordan(args: ThreeJArgs) -> SignedSqrtRational:
    """Oracle value of a 3-j symbol from the ladder-built CG coefficient."""
    if args.m1.twice_value + args.m2.twice_value + args.m3.twice_value != 0:
        return SignedSqrtRational.zero()
    tj1, tj2, tj3 = args.j1.twice_value, args.j2.twice_value, args.j3.twice_value
    if not _triangle_ok(tj1, tj2, tj3) or (tj1 + tj2 + tj3) % 2 != 0:
        return SignedSqrtRational.zero()
    cg = clebsch_gordan_oracle(args.j1, args.j2, args.j3, args.m1, args.m2)
    phase_exp = (tj1 - tj2 - args.m3.twice_value) // 2
    sign = SignedSqrtRational.one() if phase_exp % 2 == 0 else -SignedSqrtRational.one()
    return sign * cg / SignedSqrtRational.sqrt_of(Fraction(tj3 + 1))


def wigner_small_d(j, m1, m2, beta: float) -> float:
    """Wigner small-d element d^j_{m1 m2}(beta) by the factorial sum.

    Rational term coefficients are exact; only the trigonometric powers are
    floating point.
    """
    j, m1, m2 = as_half_int(j), as_half_int(m1), as_half_int(m2)
    tj = j.twice_value
    for m, name in ((m1, "m1"), (m2, "m2")):
        if abs(m.twice_value) > tj:
            raise DomainError(f"|{name}| exceeds j: {name}={m}, j={j}")
        if (tj - m.twice_value) % 2 != 0:
            raise DomainError(f"j - {name} must be an integer: j={j}, {name}={m}")
    if tj < 0:
        raise DomainError(f"j must be non-negative, got {j}")

    jpm1 = (tj + m1.twice_value) // 2
    jmm1 = (tj - m1.twice_value) // 2
    jpm2 = (tj + m2.twice_value) // 2
    jmm2 = (tj - m2.twice_value) // 2
    dm = (m1.twice_value - m2.twice_value) // 2  # m1 - m2 is an integer
    pref = math.sqrt(float(factorial(jpm1) * factorial(jmm1) * factorial(jpm2) * factorial(jmm2)))
    c = math.cos(beta / 2.0)
    s = math.sin(beta / 2.0)
    total = 0.0
    for k in range(max(0, -dm), min(jpm2, jmm1) + 1):
        coeff = Fraction(
            1,
            factorial(jpm2 - k) * factorial(k) * factorial(jmm1 - k) * factorial(dm + k),
        )
        sign = -1.0 if (dm + k) % 2 else 1.0
        total += sign * float(coeff) * c ** (jpm2 + jmm1 - 2 * k) * s ** (dm + 2 * k)
    return pref * total
