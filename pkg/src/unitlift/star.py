"""Unit-image surjectivity along quotient maps, four equivalent ways.

A quotient map R -> R/I has the lifting property when every unit of R/I is
the image of a unit of R.  Equivalently: the set of elements congruent to a
unit mod I is saturated; that set equals the saturation of 1 + I; and every
element that is invertible mod I is congruent mod I to an actual unit.  All
four checks are implemented independently, and a disagreement between them
is treated as a fatal library defect, never reported as an answer.

Lifting is constructive: the exceptional maximal ideals (those not
containing I) are finitely many, and a CRT adjustment a with a = 0 mod I and
a = 1 - r mod each exceptional ideal turns any preimage r of a unit into a
unit preimage r + a.  For products of fields there is an even more direct
adjustment using the indicator of the vanishing coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_GUARDS, Guards
from .errors import InternalDefectError
from .rings import (
    FiniteRing,
    Ideal,
    PresentedRing,
    ProductRing,
    enumerate_ideals,
    quotient_ring,
)
from .spectrum import CongruenceSystem, crt_solve, maximal_ideals, radical_quotient


def saturate(ring: FiniteRing, subset) -> frozenset[int]:
    """{ r : s*r lands in the subset for some s }.

    A closure operation (taking s = 1 gives extensivity; monotonicity and
    idempotence follow); the saturation of {1} is exactly the unit group.
    """
    w = frozenset(subset)
    for x in w:
        if not 0 <= x < ring.carrier_size:
            raise ValueError(f"subset member {x} outside the carrier")
    if not w:
        return w
    tabs = ring.tables()
    if tabs is not None:
        member = np.zeros(ring.carrier_size, dtype=bool)
        member[sorted(w)] = True
        hit = member[tabs[1]].any(axis=0)
        return frozenset(np.nonzero(hit)[0].tolist())
    out = set()
    for r in ring.elements():
        if any(ring.mul(s, r) in w for s in ring.elements()):
            out.add(r)
    return frozenset(out)


class StarMethod(enum.Enum):
    DIRECT = "direct"
    SATURATED_SUM = "saturatedSum"
    SATURATION_EQUALITY = "satEquality"
    WITNESS = "witness"


@dataclass(frozen=True)
class StarCheck:
    method: StarMethod
    holds: bool
    witness: int | None  # an element demonstrating failure, when false


@dataclass(frozen=True)
class StarReport:
    """All four verdicts for one ideal; they are required to agree."""

    ring: FiniteRing
    ideal: Ideal
    checks: tuple[StarCheck, ...]

    @property
    def holds(self) -> bool:
        return self.checks[0].holds

    def verdicts(self) -> dict[str, bool]:
        return {c.method.value: c.holds for c in self.checks}


def _units_plus_ideal(ring: FiniteRing, ideal: Ideal) -> frozenset[int]:
    tabs = ring.tables()
    us = sorted(ring.units())
    elems = sorted(ideal.elements)
    if tabs is not None:
        return frozenset(np.unique(tabs[0][np.ix_(us, elems)]).tolist())
    return frozenset(ring.add(u, i) for u in us for i in elems)


def _one_plus_ideal(ring: FiniteRing, ideal: Ideal) -> frozenset[int]:
    return frozenset(ring.add(ring.one, i) for i in ideal.elements)


def star_check(ring: FiniteRing, ideal: Ideal, method: StarMethod) -> StarCheck:
    """One of the four equivalent checks for the quotient by one ideal."""
    if not isinstance(method, StarMethod):
        method = StarMethod(method)
    if ideal.ring is not ring:
        raise ValueError("ideal belongs to a different ring")
    if not ideal.is_proper():
        raise ValueError("star checks need a proper ideal")

    if method is StarMethod.DIRECT:
        quotient, hom = quotient_ring(ring, ideal)
        image = hom.image_of_units()
        target = quotient.units()
        if image == target:
            return StarCheck(method, True, None)
        return StarCheck(method, False, min(target - image))

    if method is StarMethod.SATURATED_SUM:
        w = _units_plus_ideal(ring, ideal)
        sat = saturate(ring, w)
        if sat == w:
            return StarCheck(method, True, None)
        return StarCheck(method, False, min(sat - w))

    if method is StarMethod.SATURATION_EQUALITY:
        w = _units_plus_ideal(ring, ideal)
        sat = saturate(ring, _one_plus_ideal(ring, ideal))
        if sat == w:
            return StarCheck(method, True, None)
        return StarCheck(method, False, min(sat.symmetric_difference(w)))

    # WITNESS: everything invertible mod I is congruent mod I to a unit
    tabs = ring.tables()
    if tabs is not None:
        member = np.zeros(ring.carrier_size, dtype=bool)
        member[sorted(ideal.elements)] = True
        add, mul, neg = tabs
        one_minus = add[ring.one, neg]
        cond = member[one_minus[mul]]  # cond[a, b]: 1 - a*b in I
        has_partner = cond.any(axis=1)
        unit_cols = sorted(ring.units())
        has_unit = cond[:, unit_cols].any(axis=1)
        bad = np.nonzero(has_partner & ~has_unit)[0]
        if len(bad) == 0:
            return StarCheck(method, True, None)
        return StarCheck(method, False, int(bad[0]))
    for a in ring.elements():
        if any(ring.sub(ring.one, ring.mul(a, b)) in ideal for b in ring.elements()):
            if not any(ring.sub(ring.one, ring.mul(a, u)) in ideal
                       for u in ring.units()):
                return StarCheck(method, False, a)
    return StarCheck(method, True, None)


def star_report(ring: FiniteRing, ideal: Ideal) -> StarReport:
    """Run all four methods; any disagreement is a fatal defect."""
    checks = tuple(star_check(ring, ideal, m) for m in StarMethod)
    verdicts = {c.holds for c in checks}
    if len(verdicts) != 1:
        detail = ", ".join(f"{c.method.value}={c.holds}" for c in checks)
        raise InternalDefectError(
            f"star methods disagree on {ring!r} / {ideal!r}: {detail}")
    return StarReport(ring, ideal, checks)


@dataclass(frozen=True)
class RingStarReport:
    ring: FiniteRing
    holds: bool
    entries: tuple[tuple[Ideal, StarCheck], ...]


def ring_has_star(ring: FiniteRing, guards: Guards | None = None) -> RingStarReport:
    """Direct check over every proper ideal, in canonical enumeration order."""
    entries = []
    overall = True
    for ideal in enumerate_ideals(ring, guards):
        if not ideal.is_proper():
            continue
        check = star_check(ring, ideal, StarMethod.DIRECT)
        overall = overall and check.holds
        entries.append((ideal, check))
    return RingStarReport(ring, overall, tuple(entries))


# ---------------------------------------------------------------------------
# constructive lifting


def crt_unit_lift(ring: FiniteRing, ideal: Ideal, v: int) -> int:
    """A unit of R mapping onto the unit v of R/I.

    Exceptional maximal ideals are those not containing I.  Solving
    a = 0 mod I and a = 1 - r mod each exceptional ideal (always a
    comaximal system) makes r + a a unit with the same image as r.
    """
    quotient, hom = quotient_ring(ring, ideal)
    if not quotient.is_unit(v):
        raise ValueError(f"{quotient.render(v)} is not a unit of the quotient")
    r = hom.preimage(v)
    exceptional = [m for m in maximal_ideals(ring).ideals
                   if not ideal.elements <= m.elements]
    target = ring.sub(ring.one, r)
    system = CongruenceSystem.of(
        [(ideal, ring.zero)] + [(m, target) for m in exceptional])
    a = crt_solve(ring, system)
    lifted = ring.add(r, a)
    if not ring.is_unit(lifted):
        raise InternalDefectError("constructed lift is not a unit")
    if hom(lifted) != v:
        raise InternalDefectError("constructed lift has the wrong image")
    return lifted


def product_fields_adjust(ring: FiniteRing, ideal: Ideal, a: int, b: int) -> int:
    """Unit congruent to a mod I, for a product of fields.

    Requires 1 - a*b in I.  With J the set of coordinates where a vanishes
    and e the indicator of J, the element a + e*(1 - a*b) is invertible and
    differs from a by an ideal element.
    """
    if not isinstance(ring, ProductRing):
        raise ValueError("adjustment needs a product of fields")
    for f in ring.factors:
        if len(f.units()) != f.carrier_size - 1:
            raise ValueError("adjustment needs every factor to be a field")
    if ideal.ring is not ring:
        raise ValueError("ideal belongs to a different ring")
    defect = ring.sub(ring.one, ring.mul(a, b))
    if defect not in ideal:
        raise ValueError("1 - a*b is not in the ideal")
    comps = ring.decode(a)
    indicator = ring.encode(
        [f.one if c == f.zero else f.zero for f, c in zip(ring.factors, comps)])
    adjusted = ring.add(a, ring.mul(indicator, defect))
    if not ring.is_unit(adjusted):
        raise InternalDefectError("adjusted element is not a unit")
    if ring.sub(adjusted, a) not in ideal:
        raise InternalDefectError("adjustment left the congruence class")
    return adjusted


# ---------------------------------------------------------------------------
# reduction modulo the radical


@dataclass(frozen=True)
class RadicalReductionReport:
    verdict: bool          # for R -> R/I
    reduced_verdict: bool  # for R/rad -> R/(rad + I)
    degenerate: bool       # rad + I improper (cannot happen for real inputs)


def reduce_mod_rad_equiv(ring: FiniteRing, ideal: Ideal) -> RadicalReductionReport:
    """The lifting verdict is unchanged by first passing to R/rad(R).

    Both verdicts are computed and their equality asserted.  If rad + I were
    the whole ring the reduced map would be degenerate; that cannot happen
    for a proper I (1 + rad consists of units), but the case is reported
    rather than silently mis-handled.
    """
    direct = star_check(ring, ideal, StarMethod.DIRECT).holds
    reduced, proj = radical_quotient(ring)
    image = frozenset(proj(x) for x in ideal.elements)
    if reduced.one in image:
        return RadicalReductionReport(direct, True, True)
    from .rings import ideal_from_elements

    reduced_ideal = ideal_from_elements(reduced, image)
    reduced_verdict = star_check(reduced, reduced_ideal, StarMethod.DIRECT).holds
    if direct != reduced_verdict:
        raise InternalDefectError(
            "reduction modulo the radical changed the lifting verdict")
    return RadicalReductionReport(direct, reduced_verdict, False)


# ---------------------------------------------------------------------------
# presented rings


@dataclass(frozen=True)
class PresentedStarCheck:
    has_star: bool
    witness: int | None        # unit of the quotient missed by the unit image
    quotient: FiniteRing = field(repr=False)

    def __bool__(self):
        return self.has_star


def presented_star_check(presented: PresentedRing, modulus,
                         guards: Guards = DEFAULT_GUARDS) -> PresentedStarCheck:
    """Does reduction by the modulus carry the (finitely many) units of the
    presented ring onto the units of the finite quotient?"""
    quotient, reduce = presented.quotient(modulus, guards)
    image = frozenset(reduce(u) for u in presented.unit_list())
    target = quotient.units()
    if not image <= target:
        raise InternalDefectError("unit image contains a non-unit")
    if image == target:
        return PresentedStarCheck(True, None, quotient)
    return PresentedStarCheck(False, min(target - image), quotient)
