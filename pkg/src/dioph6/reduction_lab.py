"""Reduction analysis of the two-torsion model: p-integral and p-minimal
models, good/multiplicative/additive classification at odd primes, and
empirical tables for the p-adic valuation patterns of seed-point multiples.

Classification uses the (v_p(delta), v_p(c4)) criterion on a p-minimal
model reached by u-scaling.  For p >= 5 this is exact; for p = 3 the same
criterion is applied and the mod-3 tables cross-check it, since u-scaling
alone need not reach a fully minimal model there.  p = 2 is out of scope
and rejected everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError
from .exactnum import (
    DEFAULT_FACTOR_BOUND,
    Rat,
    _int_vp,
    is_prime,
    odd_prime_divisors,
    vp,
)
from .family import curve_E, curve_Epp, point_R, require_param
from .weierstrass import Curve, INFINITY, Point

#: Coordinate digit counts grow quadratically in the multiple index; tables
#: beyond this are past desk scale.
DEFAULT_TABLE_MAX = 6
HARD_TABLE_MAX = 12

GOOD = "good"
MULTIPLICATIVE = "mult"
ADDITIVE = "add"


@dataclass(frozen=True)
class ReductionReport:
    """Reduction data of a curve at one odd prime, on a p-minimal model.

    ``v_c4`` is None when c4 = 0 (infinite valuation).  ``scaling_exponent``
    is the k with u = p^k applied to reach the minimal p-integral model.
    """

    p: int
    type: str
    v_delta: int
    v_c4: int | None
    scaling_exponent: int

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "type": self.type,
            "v_delta": self.v_delta,
            "v_c4": self.v_c4,
            "scaling_exponent": self.scaling_exponent,
        }


@dataclass(frozen=True)
class ValuationRow:
    """One predicted-vs-observed valuation (or valuation-sign) comparison."""

    m: int
    predicted: int
    observed: int
    lemma_part: str

    @property
    def passed(self) -> bool:
        return self.predicted == self.observed

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "lemma_part": self.lemma_part,
            "predicted": self.predicted,
            "observed": self.observed,
            "pass": self.passed,
        }


def _require_odd_prime(p: int) -> None:
    if p == 2:
        raise ValueError("p = 2 is out of scope for reduction analysis")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def epp_invariants(t, pt: Point) -> tuple[Rat, Rat]:
    """Closed-form discriminant and c4 of the two-torsion model at a
    base-curve point: delta = t^6 y^2 / x^6 and
    c4 = ((t^2+1)^2 x^-1 + 1)(y^2 + 3 x^2 t^2) / x^3."""
    t = require_param(t)
    if pt.is_infinity or pt.x == 0:
        raise ValueError("need an affine base-curve point with x != 0")
    if not curve_E(t).contains(pt):
        raise ValueError(f"point {pt} is not on the base curve at t = {t}")
    x, y = pt.x, pt.y
    tt = t * t
    delta = tt**3 * y * y / x**6
    c4 = ((tt + 1) ** 2 / x + 1) * (y * y + 3 * x * x * tt) / x**3
    return delta, c4


def p_minimal_model(curve: Curve, p: int) -> tuple[Curve, int]:
    """Scale by u = p^k to the p-minimal p-integral model; return it and k.

    k is the largest exponent keeping all coefficients p-integral, i.e.
    min over i in {2, 4, 6} of floor(v_p(a_i)/i).  Any further u-scaling
    satisfying v_p(c4) >= 4 and v_p(delta) >= 12 would break integrality,
    so this single step already reaches the fixpoint of the usual
    unscale-while-reducible loop.
    """
    _require_odd_prime(p)
    exponents = [
        vp(coeff, p) // i
        for i, coeff in ((2, curve.a2), (4, curve.a4), (6, curve.a6))
        if coeff != 0
    ]
    k = min(exponents)
    return curve.scale(Fraction(p) ** k), k


def classify(curve: Curve, p: int) -> ReductionReport:
    """Reduction type of a curve at an odd prime."""
    model, k = p_minimal_model(curve, p)
    sq = model.std_quantities()
    v_delta = vp(sq.delta, p)
    v_c4 = vp(sq.c4, p) if sq.c4 != 0 else None
    if v_delta == 0:
        kind = GOOD
    elif v_c4 == 0:
        kind = MULTIPLICATIVE
    else:
        kind = ADDITIVE
    return ReductionReport(p, kind, v_delta, v_c4, k)


# ---------------------------------------------------------------------------
# bad primes of the two-torsion model at a point
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BadPrimesReport:
    """Classification of the two-torsion model at every relevant odd prime.

    ``candidates`` are the odd primes dividing t(t^2+1) - the only primes
    where additive reduction can occur when t is an integer and
    v_3(y) <= 0.  ``entries`` additionally classifies every other odd
    prime where the minimal discriminant has positive valuation.
    """

    t: int
    x: Rat
    y: Rat
    entries: tuple[tuple[int, ReductionReport], ...]
    candidates: tuple[int, ...]
    additive: tuple[int, ...]
    prop_applicable: bool
    prop_holds: bool | None

    def to_json_dict(self) -> dict:
        from .exactnum import format_rat

        return {
            "t": self.t,
            "x": format_rat(self.x),
            "y": format_rat(self.y),
            "candidates": list(self.candidates),
            "entries": [rep.to_json_dict() for _, rep in self.entries],
            "additive": list(self.additive),
            "containment_applicable": self.prop_applicable,
            "containment_holds": self.prop_holds,
        }


def bad_primes_epp(
    t: int, pt: Point, bound: int = DEFAULT_FACTOR_BOUND
) -> BadPrimesReport:
    """Classify the two-torsion model at every odd prime that matters.

    Classifies all odd primes dividing t(t^2+1) (the additive candidates)
    plus every other odd prime where the minimal discriminant has positive
    valuation.  When v_3(y) <= 0 the additive set must be contained in the
    candidates; a violation raises :class:`ConsistencyError`.  When
    v_3(y) > 0 the containment is not asserted (3 can then turn additive),
    and the report records that the guarantee did not apply.
    """
    if not isinstance(t, int):
        raise ValueError("integer parameter required for the bad-prime scan")
    tq = require_param(t)
    base = curve_E(tq)
    if pt.is_infinity or pt.x == 0:
        raise ValueError("need an affine base-curve point with x != 0")
    if not base.contains(pt):
        raise ValueError(f"point {pt} is not on the base curve at t = {t}")
    x, y = pt.x, pt.y
    model = curve_Epp(tq, x)

    candidates = tuple(odd_prime_divisors(t * (t * t + 1), bound))
    extra_sources = (x.numerator, x.denominator, y.numerator, y.denominator)
    extras = sorted(
        {
            p
            for source in extra_sources
            if source not in (1, -1)
            for p in odd_prime_divisors(source, bound)
        }
        - set(candidates)
    )

    entries: list[tuple[int, ReductionReport]] = []
    for p in candidates:
        entries.append((p, classify(model, p)))
    for p in extras:
        report = classify(model, p)
        if report.v_delta > 0:
            entries.append((p, report))
    entries.sort(key=lambda item: item[0])

    additive = tuple(p for p, rep in entries if rep.type == ADDITIVE)
    applicable = vp(y, 3) <= 0 if y != 0 else False
    holds: bool | None = None
    if applicable:
        holds = set(additive) <= set(candidates)
        if not holds:
            raise ConsistencyError(
                f"additive primes {additive} escape the candidate set "
                f"{candidates} at t = {t} despite v_3(y) <= 0"
            )
    return BadPrimesReport(
        t=t,
        x=x,
        y=y,
        entries=tuple(entries),
        candidates=candidates,
        additive=additive,
        prop_applicable=applicable,
        prop_holds=holds,
    )


# ---------------------------------------------------------------------------
# valuation tables for seed-point multiples
# ---------------------------------------------------------------------------

def _check_table_args(t, m_max: int) -> Rat:
    tq = require_param(t)
    if not isinstance(t, int):
        raise ValueError("valuation tables need an integer parameter")
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    if m_max > HARD_TABLE_MAX:
        raise ValueError(
            f"m_max = {m_max} exceeds the desk-scale cap {HARD_TABLE_MAX}; "
            "coordinate sizes grow quadratically in the multiple"
        )
    return tq


def valuation_table(t: int, p: int, m_max: int = DEFAULT_TABLE_MAX) -> list[ValuationRow]:
    """Predicted vs observed p-adic valuations for seed-point multiples.

    Requires an odd prime that exactly divides t^2 + 1.  The predictions:
    v(x([2]R)) = 0, v(x([3]R)) = 4, v(x([4]R)) = -2, v(y([4]R)) = -3, and
    for each m:  v(x([4m]R)) = -2 v_p(m) - 2,  v(x(R+[m][4]R)) = 4 + v_p(m),
    v(x([2]R+[m][4]R)) = 0,  v(x([3]R+[m][4]R)) = 4 + v_p(m+1).
    """
    tq = _check_table_args(t, m_max)
    _require_odd_prime(p)
    e = _int_vp(t * t + 1, p)
    if e == 0:
        raise ValueError(f"{p} does not divide t^2 + 1 = {t * t + 1}")
    if e > 1:
        raise ValueError(f"{p}^2 divides t^2 + 1 = {t * t + 1}; need exact division")

    base = curve_E(tq)
    seed = point_R(tq)
    r2 = base.mul(2, seed)
    r3 = base.add(r2, seed)
    r4 = base.add(r3, seed)
    rows = [
        ValuationRow(2, 0, vp(r2.x, p), "v(x([2]R))"),
        ValuationRow(3, 4, vp(r3.x, p), "v(x([3]R))"),
        ValuationRow(4, -2, vp(r4.x, p), "v(x([4]R))"),
        ValuationRow(4, -3, vp(r4.y, p), "v(y([4]R))"),
    ]
    q = INFINITY
    for m in range(1, m_max + 1):
        q = base.add(q, r4)
        vm = _int_vp(m, p)
        rows.append(ValuationRow(m, -2 * vm - 2, vp(q.x, p), "v(x([4m]R))"))
        rows.append(ValuationRow(m, 4 + vm, vp(base.add(seed, q).x, p), "v(x(R+[m][4]R))"))
        rows.append(ValuationRow(m, 0, vp(base.add(r2, q).x, p), "v(x([2]R+[m][4]R))"))
        rows.append(
            ValuationRow(m, 4 + _int_vp(m + 1, p), vp(base.add(r3, q).x, p), "v(x([3]R+[m][4]R))")
        )
    return rows


def _valuation_sign(value: Rat, p: int) -> int:
    v = vp(value, p)
    return (v > 0) - (v < 0)


def mod3_sign_table(t: int, m_max: int = DEFAULT_TABLE_MAX) -> list[ValuationRow]:
    """Signs of 3-adic valuations along multiples of [3]R.

    Predictions: v_3(x([m][3]R)) < 0, v_3(x(R+[m][3]R)) > 0 and
    v_3(x([2]R+[m][3]R)) > 0; rows carry the signs (-1 / +1).
    """
    tq = _check_table_args(t, m_max)
    base = curve_E(tq)
    seed = point_R(tq)
    r2 = base.mul(2, seed)
    r3 = base.add(r2, seed)
    rows = []
    q = INFINITY
    for m in range(1, m_max + 1):
        q = base.add(q, r3)
        rows.append(ValuationRow(m, -1, _valuation_sign(q.x, 3), "sign v3(x([m][3]R))"))
        rows.append(
            ValuationRow(m, 1, _valuation_sign(base.add(seed, q).x, 3), "sign v3(x(R+[m][3]R))")
        )
        rows.append(
            ValuationRow(m, 1, _valuation_sign(base.add(r2, q).x, 3), "sign v3(x([2]R+[m][3]R))")
        )
    return rows


def nonsingular_residues(t: int, q: int, m_max: int = DEFAULT_TABLE_MAX) -> bool:
    """True iff no multiple [m]R, 1 <= m <= m_max, reduces to the singular
    residue x = -1 modulo the odd prime q dividing t.

    Multiples with v_q(x) < 0 reduce to the point at infinity and count as
    automatically non-congruent.
    """
    tq = _check_table_args(t, m_max)
    _require_odd_prime(q)
    if t % q != 0:
        raise ValueError(f"{q} does not divide t = {t}")
    base = curve_E(tq)
    seed = point_R(tq)
    acc = INFINITY
    for _ in range(1, m_max + 1):
        acc = base.add(acc, seed)
        x = acc.x
        if x == 0:
            continue
        if vp(x, q) < 0:
            continue
        if x.numerator * pow(x.denominator, -1, q) % q == q - 1:
            return False
    return True
