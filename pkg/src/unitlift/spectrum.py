"""Radical, idempotents, maximal ideals, and congruence solving.

For a finite commutative ring the Jacobson radical coincides with the set of
nilpotent elements, which gives two independent ways to compute it; this
module computes both and treats disagreement as a fatal defect.  Maximal
ideals are recovered structurally: modulo the radical the ring is a product
of fields, so its primitive idempotents (the atoms of the idempotent lattice)
index the maximal ideals, each the annihilator of one atom pulled back along
the projection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalDefectError
from .rings import (
    FiniteRing,
    Ideal,
    SurjectiveHom,
    ideal_from_elements,
    quotient_ring,
)
from .specs import ModularSpec


def nilpotent_elements(ring: FiniteRing) -> frozenset[int]:
    """All nilpotents, by repeated squaring.

    ceil(log2 n) + 2 squarings are enough: the chain of principal ideals
    (r) >= (r^2) >= (r^4) >= ... halves in size at every strict step, and once
    it stabilizes a nilpotent has already reached zero.
    """
    n = ring.carrier_size
    steps = max(1, n - 1).bit_length() + 2
    tabs = ring.tables()
    if tabs is not None:
        v = np.arange(n)
        mul = tabs[1]
        for _ in range(steps):
            v = mul[v, v]
        return frozenset(np.nonzero(v == ring.zero)[0].tolist())
    out = set()
    for r in ring.elements():
        x = r
        for _ in range(steps):
            x = ring.mul(x, x)
        if x == ring.zero:
            out.add(r)
    return frozenset(out)


def idempotents(ring: FiniteRing) -> frozenset[int]:
    tabs = ring.tables()
    if tabs is not None:
        idx = np.arange(ring.carrier_size)
        return frozenset(np.nonzero(tabs[1][idx, idx] == idx)[0].tolist())
    return frozenset(e for e in ring.elements() if ring.mul(e, e) == e)


def radical_quotient(ring: FiniteRing) -> tuple[FiniteRing, SurjectiveHom]:
    """R/rad(R) with its projection; cached on the ring."""
    if "radical_quotient" not in ring._cache:
        rad = jacobson_radical(ring)
        ring._cache["radical_quotient"] = quotient_ring(ring, rad)
    return ring._cache["radical_quotient"]


@dataclass(frozen=True)
class MaximalIdealList:
    """All maximal ideals of a finite ring.

    ``primitive_idempotents`` are the atoms of the idempotent lattice of
    R/rad(R), in the same order as ``ideals``: ideal i is the pullback of the
    annihilator of atom i.
    """

    ring: FiniteRing
    ideals: tuple[Ideal, ...]
    primitive_idempotents: tuple[int, ...]

    def __len__(self):
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)


def maximal_ideals(ring: FiniteRing) -> MaximalIdealList:
    if "maximal_ideals" in ring._cache:
        return ring._cache["maximal_ideals"]
    nil = nilpotent_elements(ring)
    reduced, proj = quotient_ring(ring, ideal_from_elements(ring, nil))
    idem = sorted(idempotents(reduced))
    atoms = [e for e in idem
             if e != reduced.zero
             and all(reduced.mul(e, f) in (reduced.zero, e) for f in idem)]
    ideals = []
    for e in atoms:
        annihilator = {s for s in reduced.elements() if reduced.mul(s, e) == reduced.zero}
        pulled = frozenset(a for a in ring.elements() if proj(a) in annihilator)
        ideal = ideal_from_elements(ring, pulled)
        field, _ = quotient_ring(ring, ideal)
        if len(field.units()) != field.carrier_size - 1:
            raise InternalDefectError(
                "pullback of an idempotent annihilator is not maximal")
        ideals.append(ideal)
    out = MaximalIdealList(ring, tuple(ideals), tuple(atoms))
    ring._cache["maximal_ideals"] = out
    return out


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """Intersection of the maximal ideals, cross-checked against the
    nilpotent set (the two agree on finite commutative rings)."""
    if "radical" in ring._cache:
        return ring._cache["radical"]
    nil = nilpotent_elements(ring)
    intersection = set(ring.elements())
    for m in maximal_ideals(ring).ideals:
        intersection &= m.elements
    if frozenset(intersection) != nil:
        raise InternalDefectError(
            "radical mismatch: intersection of maximal ideals differs from "
            "the nilpotent set")
    out = ideal_from_elements(ring, nil)
    ring._cache["radical"] = out
    return out


def is_connected_mod_rad(ring: FiniteRing) -> bool:
    """True when R/rad(R) has no idempotents besides 0 and 1."""
    reduced, _ = radical_quotient(ring)
    return idempotents(reduced) == frozenset((reduced.zero, reduced.one))


# ---------------------------------------------------------------------------
# congruence systems


@dataclass(frozen=True)
class CongruenceSystem:
    """Constraints x = target (mod ideal), pairwise comaximal."""

    constraints: tuple[tuple[Ideal, int], ...]

    @staticmethod
    def of(pairs) -> "CongruenceSystem":
        return CongruenceSystem(tuple((i, t) for i, t in pairs))


def _comaximal_pair(ring: FiniteRing, a, b) -> bool:
    # cached per ring: unit lifting re-solves systems over the same ideals
    key = ("comaximal", a.elements, b.elements)
    cached = ring._cache.get(key)
    if cached is not None:
        return cached
    tabs = ring.tables()
    if tabs is not None:
        sums = tabs[0][np.ix_(sorted(a.elements), sorted(b.elements))]
        ok = bool(np.any(sums == ring.one))
    else:
        ok = any(ring.add(x, y) == ring.one
                 for x in a.elements for y in b.elements)
    ring._cache[key] = ok
    ring._cache[("comaximal", b.elements, a.elements)] = ok
    return ok


def _check_comaximal(ring: FiniteRing, system: CongruenceSystem):
    cons = system.constraints
    for i in range(len(cons)):
        for j in range(i + 1, len(cons)):
            if not _comaximal_pair(ring, cons[i][0], cons[j][0]):
                raise ValueError(
                    f"ideals {i} and {j} are not comaximal; no solution is promised")


def crt_solve(ring: FiniteRing, system: CongruenceSystem | list, method: str = "auto") -> int:
    """Smallest element satisfying every congruence.

    The default is an exhaustive carrier scan (corpus carriers are small);
    for Z/n a modular fast path computes the same minimal solution from
    integer CRT.  Both paths agree element-for-element.
    """
    if not isinstance(system, CongruenceSystem):
        system = CongruenceSystem.of(system)
    for ideal, t in system.constraints:
        if ideal.ring is not ring:
            raise ValueError("congruence ideal belongs to a different ring")
        if not 0 <= t < ring.carrier_size:
            raise ValueError(f"target {t} outside the carrier")
    _check_comaximal(ring, system)
    if method not in ("auto", "scan", "modular"):
        raise ValueError(f"unknown method {method!r}")
    if method == "modular" or (method == "auto" and isinstance(ring.spec, ModularSpec)):
        if not isinstance(ring.spec, ModularSpec):
            raise ValueError("modular fast path needs a Z/n ring")
        sol = _crt_modular(ring, system)
    else:
        sol = _crt_scan(ring, system)
    for ideal, t in system.constraints:
        if ring.sub(sol, t) not in ideal:
            raise InternalDefectError("crt solution fails a congruence")
    return sol


def _crt_scan(ring: FiniteRing, system: CongruenceSystem) -> int:
    tabs = ring.tables()
    if tabs is not None:
        ok = np.ones(ring.carrier_size, dtype=bool)
        for ideal, t in system.constraints:
            member = np.zeros(ring.carrier_size, dtype=bool)
            member[sorted(ideal.elements)] = True
            # a - t in I, vectorized over a
            ok &= member[tabs[0][:, ring.neg(t)]]
        hits = np.nonzero(ok)[0]
        if len(hits) == 0:
            raise InternalDefectError("no solution despite comaximal ideals")
        return int(hits[0])
    for a in ring.elements():
        if all(ring.sub(a, t) in ideal for ideal, t in system.constraints):
            return a
    raise InternalDefectError("no solution despite comaximal ideals")


def _crt_modular(ring: FiniteRing, system: CongruenceSystem) -> int:
    n = ring.carrier_size
    # every ideal of Z/n is dZ/n with d = n/|I|
    x, modulus = 0, 1
    for ideal, t in system.constraints:
        d = n // len(ideal.elements)
        if d == 1:
            continue
        inv = pow(modulus % d, -1, d)
        x = x + modulus * ((t - x) * inv % d)
        modulus *= d
    return x % modulus if modulus > 1 else 0
