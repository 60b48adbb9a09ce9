"""Semi-inverses, the rho invariant, and the semi-unit decomposition.

A set S is a semi-inverse set for r when every maximal ideal either contains
r or contains 1 - s*r for some s in S.  rho(r) is the minimum size of such a
set: 0 exactly on the radical, 1 for the semi-units, and infinite otherwise.
On a finite commutative ring every element is a semi-unit or radical, so the
infinite value only arises for the presented infinite rings, where a nonzero
nonunit r of a domain with zero radical can never satisfy r*(1 - s*r) = 0.

A semi-unit decomposes as r = u*e + t with u a unit, e idempotent modulo the
radical, and t in the radical; the construction here follows the algebra
(e and u are built from any semi-inverse, then lifted) and verifies every
claimed property exactly before returning.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import InternalDefectError
from .rings import FiniteRing, Ideal, PresentedRing, ideal_from_elements
from .spectrum import jacobson_radical, maximal_ideals, radical_quotient


class Rho(enum.Enum):
    ZERO = 0
    ONE = 1
    INFINITE = "inf"

    def json(self):
        return self.value


def is_semi_inverse_set(ring: FiniteRing, r: int, candidates) -> bool:
    """Does every maximal ideal contain r or some 1 - s*r with s in the set?"""
    cand = sorted(set(candidates))
    for m in maximal_ideals(ring).ideals:
        if r in m:
            continue
        if not any(ring.sub(ring.one, ring.mul(s, r)) in m for s in cand):
            return False
    return True


def _semi_inverse_mask(ring: FiniteRing, r: int) -> np.ndarray | None:
    tabs = ring.tables()
    if tabs is None:
        return None
    rad = jacobson_radical(ring)
    member = np.zeros(ring.carrier_size, dtype=bool)
    member[sorted(rad.elements)] = True
    add, mul, neg = tabs
    one_minus = add[ring.one, neg]  # vector: 1 - x for each x
    # r*(1 - s*r) over all s
    return member[mul[r, one_minus[mul[:, r]]]]


def semi_inverses(ring: FiniteRing, r: int) -> frozenset[int]:
    """All s with r*(1 - s*r) in the radical; errors unless rho(r) = 1."""
    rad = jacobson_radical(ring)
    if r in rad:
        raise ValueError(f"{ring.render(r)} is radical (rho 0), not a semi-unit")
    mask = _semi_inverse_mask(ring, r)
    if mask is not None:
        out = frozenset(np.nonzero(mask)[0].tolist())
    else:
        out = frozenset(
            s for s in ring.elements()
            if ring.mul(r, ring.sub(ring.one, ring.mul(s, r))) in rad)
    if not out:
        raise ValueError(f"{ring.render(r)} has no semi-inverse")
    return out


def rho(ring, r) -> Rho:
    """The rho invariant of one element.

    For the presented rings the value follows from zero radical in a domain:
    r*(1 - s*r) = 0 forces r = 0 or s*r = 1, so only 0 and the units have
    finite rho there (0 and 1 respectively); everything else is infinite.
    """
    if isinstance(ring, PresentedRing):
        r = ring.canonical(r)
        if r == ring.zero:
            return Rho.ZERO
        if ring.is_unit(r):
            return Rho.ONE
        return Rho.INFINITE
    rad = jacobson_radical(ring)
    if r in rad:
        return Rho.ZERO
    mask = _semi_inverse_mask(ring, r)
    if mask is not None:
        found = bool(mask.any())
    else:
        found = any(ring.mul(r, ring.sub(ring.one, ring.mul(s, r))) in rad
                    for s in ring.elements())
    if not found:
        # impossible on a finite commutative ring; see is_semifield
        raise InternalDefectError(
            f"element {ring.render(r)} of a finite ring has no semi-inverse")
    return Rho.ONE


def collapse_semi_inverse_set(ring: FiniteRing, r: int, candidates) -> int:
    """Shrink a verified semi-inverse set to a single semi-inverse.

    The product of the 1 - s_i*r has the form 1 - s*r (expand: every non-1
    term carries a factor r), and that s alone already works.
    """
    cand = sorted(set(candidates))
    if not is_semi_inverse_set(ring, r, cand):
        raise ValueError("candidates are not a semi-inverse set for r")
    q = ring.one
    for s in cand:
        q = ring.mul(q, ring.sub(ring.one, ring.mul(s, r)))
    collapsed = None
    for s in ring.elements():
        if ring.sub(ring.one, ring.mul(s, r)) == q:
            collapsed = s
            break
    if collapsed is None:
        raise InternalDefectError("product of 1 - s*r terms is not of that form")
    if not is_semi_inverse_set(ring, r, (collapsed,)):
        raise InternalDefectError("collapsed singleton is not a semi-inverse set")
    return collapsed


def colon_into_radical(ring: FiniteRing, r: int) -> Ideal:
    """The ideal of a with a*r in the radical; stable under squaring r."""
    rad = jacobson_radical(ring)
    tabs = ring.tables()
    if tabs is not None:
        member = np.zeros(ring.carrier_size, dtype=bool)
        member[sorted(rad.elements)] = True
        col = frozenset(np.nonzero(member[tabs[1][:, r]])[0].tolist())
        col2 = frozenset(
            np.nonzero(member[tabs[1][:, ring.mul(r, r)]])[0].tolist())
    else:
        col = frozenset(a for a in ring.elements() if ring.mul(a, r) in rad)
        col2 = frozenset(a for a in ring.elements()
                         if ring.mul(a, ring.mul(r, r)) in rad)
    if col != col2:
        raise InternalDefectError("colon ideal changed when squaring r")
    return ideal_from_elements(ring, col)


@dataclass(frozen=True)
class SemiUnitDecomposition:
    """r = u*e + t with every certificate re-verified at construction time."""

    ring: FiniteRing
    r: int
    u: int
    e: int
    t: int
    certificates: tuple[str, ...]


_CERTIFICATES = (
    "u is a unit",
    "e is idempotent modulo the radical",
    "t lies in the radical",
    "r equals u*e + t",
    "the inverse of u is a semi-inverse of r",
)


def semi_unit_decomposition(ring: FiniteRing, r: int) -> SemiUnitDecomposition:
    """Decompose a semi-unit as r = u*e + t.

    Construction: take any semi-inverse s; modulo the radical, e = r*s is
    idempotent and u = r*e + (1 - e) is a unit; lift both back.  Reduction
    modulo the radical reflects units, but rather than trusting that, the
    lift scans the preimages of u for one that is invertible and fails loudly
    if none is.
    """
    rad = jacobson_radical(ring)
    if r in rad:
        raise ValueError(f"{ring.render(r)} is radical (rho 0), not a semi-unit")
    s = min(semi_inverses(ring, r))
    reduced, proj = radical_quotient(ring)
    e_bar = reduced.mul(proj(r), proj(s))
    u_bar = reduced.add(reduced.mul(proj(r), e_bar),
                        reduced.sub(reduced.one, e_bar))
    u = None
    for cand in proj.preimages(u_bar):
        if ring.is_unit(cand):
            u = cand
            break
    if u is None:
        raise InternalDefectError("no unit lift of a unit modulo the radical")
    e = proj.preimage(e_bar)
    t = ring.sub(r, ring.mul(u, e))

    ok = (
        ring.is_unit(u),
        ring.sub(e, ring.mul(e, e)) in rad,
        t in rad,
        r == ring.add(ring.mul(u, e), t),
        ring.mul(r, ring.sub(ring.one, ring.mul(ring.inverse(u), r))) in rad,
    )
    for passed, name in zip(ok, _CERTIFICATES):
        if not passed:
            raise InternalDefectError(f"decomposition certificate failed: {name}")
    return SemiUnitDecomposition(ring, r, u, e, t, _CERTIFICATES)


def is_von_neumann_regular(ring: FiniteRing) -> bool:
    """Every a factors as a*x*a for some x."""
    tabs = ring.tables()
    if tabs is not None:
        mul = tabs[1]
        return all(bool(np.any(mul[mul[a], a] == a)) for a in ring.elements())
    return all(
        any(ring.mul(ring.mul(a, x), a) == a for x in ring.elements())
        for a in ring.elements())


def is_semifield(ring) -> bool:
    """Every element is a semi-unit or radical.

    Computed two ways on finite rings, with disagreement fatal: directly,
    and as von Neumann regularity of R/rad(R).  The presented rings are
    domains with zero radical and nonunits besides zero, so they are not
    semi-fields (rho is infinite on any nonzero nonunit).
    """
    if isinstance(ring, PresentedRing):
        return False
    rad = jacobson_radical(ring)
    direct = True
    for r in ring.elements():
        if r in rad:
            continue
        mask = _semi_inverse_mask(ring, r)
        if mask is not None:
            found = bool(mask.any())
        else:
            found = any(
                ring.mul(r, ring.sub(ring.one, ring.mul(s, r))) in rad
                for s in ring.elements())
        if not found:
            direct = False
            break
    reduced, _ = radical_quotient(ring)
    structural = is_von_neumann_regular(reduced)
    if direct != structural:
        raise InternalDefectError(
            "semi-field verdicts disagree between the direct scan and the "
            "regularity of the reduced ring")
    return direct


def rho_table(ring: FiniteRing) -> list[Rho]:
    """rho for every element, in carrier order."""
    return [rho(ring, r) for r in ring.elements()]
