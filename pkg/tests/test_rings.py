"""Ring construction, unit groups, ideals, quotients.

Oracles:
  - units of Z/n are exactly {a : gcd(a, n) = 1}
  - unit counts match a brute-force totient
  - prod(Z/2,Z/3) is isomorphic to Z/6 via a hand-built CRT bijection
  - the tabulated fast paths agree with a ring forced onto the scalar path
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unitlift.config import Guards
from unitlift.errors import GuardExceededError
from unitlift.rings import (
    build_ring,
    check_ring_axioms,
    enumerate_ideals,
    ideal_closure,
    ideal_from_elements,
    quotient_ring,
)

AXIOM_SPECS = [
    "Z/2",
    "Z/12",
    "GF(2)[x]/(x^2+x+1)",
    "GF(3)[x]/(x^2)",
    "prod(Z/2,Z/3)",
    "prod(Z/8,Z/8,Z/8)",
    "quot(Z/12;4)",
]


@pytest.mark.parametrize("spec", AXIOM_SPECS)
def test_ring_axioms(spec):
    check_ring_axioms(build_ring(spec))


# ---------------------------------------------------------------------------
# units


@pytest.mark.parametrize("n", range(2, 41))
def test_modular_units_match_gcd(n):
    ring = build_ring(f"Z/{n}")
    coprime = frozenset(a for a in range(n) if math.gcd(a, n) == 1)
    assert ring.units() == coprime


def test_poly_quotient_units():
    ring = build_ring("GF(2)[x]/(x^2)")
    # x is nilpotent, so only 1 and 1+x are invertible
    assert {ring.render(u) for u in ring.units()} == {"1", "x+1"}
    field = build_ring("GF(3)[x]/(x^2+1)")
    assert len(field.units()) == 8  # x^2+1 is irreducible mod 3


@pytest.mark.parametrize("spec", ["Z/35", "GF(2)[x]/(x^3+x+1)", "prod(Z/4,Z/9)"])
def test_units_against_brute_scan(spec):
    ring = build_ring(spec)
    brute = frozenset(
        a for a in ring.elements()
        if any(ring.mul(a, b) == ring.one for b in ring.elements())
    )
    assert ring.units() == brute


def test_inverse_law():
    for spec in ["Z/24", "GF(3)[x]/(x^2+1)", "prod(Z/4,GF(2)[x]/(x^2+x+1))"]:
        ring = build_ring(spec)
        for u in ring.units():
            assert ring.mul(u, ring.inverse(u)) == ring.one


def test_inverse_of_nonunit_raises():
    ring = build_ring("Z/12")
    with pytest.raises(ValueError):
        ring.inverse(6)


# ---------------------------------------------------------------------------
# product structure


def test_product_is_crt_isomorphic_to_z6():
    prod = build_ring("prod(Z/2,Z/3)")
    z6 = build_ring("Z/6")
    iso = {a: prod.encode((a % 2, a % 3)) for a in range(6)}
    assert sorted(iso.values()) == list(range(6))
    for a in range(6):
        for b in range(6):
            assert iso[z6.add(a, b)] == prod.add(iso[a], iso[b])
            assert iso[z6.mul(a, b)] == prod.mul(iso[a], iso[b])


def test_product_encode_decode_round_trip():
    ring = build_ring("prod(Z/8,Z/9,Z/5)")
    assert ring.carrier_size == 360
    for a in ring.elements():
        assert ring.encode(ring.decode(a)) == a


def test_render_parse_round_trip():
    for spec in ["Z/12", "GF(3)[x]/(x^2+1)", "prod(Z/4,GF(2)[x]/(x^2))"]:
        ring = build_ring(spec)
        for a in ring.elements():
            assert ring.parse_element(str(ring.render(a))) == a


# ---------------------------------------------------------------------------
# quotients


def test_quotient_of_z12_by_4():
    ring = build_ring("Z/12")
    ideal = ideal_closure(ring, [4])
    assert ideal.elements == frozenset({0, 4, 8})
    quot, hom = quotient_ring(ring, ideal)
    assert quot.carrier_size == 4
    assert hom.kernel is ideal
    assert len(quot.units()) == 2
    for a in ring.elements():
        for b in ring.elements():
            assert hom(ring.add(a, b)) == quot.add(hom(a), hom(b))
            assert hom(ring.mul(a, b)) == quot.mul(hom(a), hom(b))


def test_quotient_by_zero_ideal_is_the_ring():
    ring = build_ring("Z/10")
    quot, hom = quotient_ring(ring, ideal_closure(ring, [0]))
    assert quot.carrier_size == 10
    assert [hom(a) for a in ring.elements()] == list(ring.elements())


def test_preimage_buckets_have_kernel_size():
    ring = build_ring("Z/12")
    ideal = ideal_closure(ring, [4])
    quot, hom = quotient_ring(ring, ideal)
    for t in quot.elements():
        assert len(hom.preimages(t)) == len(ideal)
        assert {hom(a) for a in hom.preimages(t)} == {t}


def test_quot_spec_builds_the_quotient():
    ring = build_ring("quot(Z/12;4)")
    assert ring.carrier_size == 4
    assert len(ring.units()) == 2


# ---------------------------------------------------------------------------
# ideals


def test_ideal_closure_of_4_in_z12():
    ring = build_ring("Z/12")
    assert ideal_closure(ring, [4]).elements == frozenset({0, 4, 8})


def _divisor_count(n):
    return sum(1 for d in range(1, n + 1) if n % d == 0)


@pytest.mark.parametrize("n", range(2, 41))
def test_modular_ideal_count_is_divisor_count(n):
    ring = build_ring(f"Z/{n}")
    assert len(enumerate_ideals(ring)) == _divisor_count(n)


def test_z12_ideal_lattice():
    ring = build_ring("Z/12")
    found = {i.elements for i in enumerate_ideals(ring)}
    # one ideal (d) per divisor d of 12; (12) = (0)
    expected = {frozenset(range(0, 12, d)) for d in [1, 2, 3, 4, 6]}
    expected.add(frozenset({0}))
    assert found == expected


def test_product_ideal_count_multiplies():
    assert len(enumerate_ideals(build_ring("prod(Z/4,Z/9)"))) == 9
    # x^2+x = x(x+1), so the quotient splits into GF(2) x GF(2)
    assert len(enumerate_ideals(build_ring("GF(2)[x]/(x^2+x)"))) == 4


def test_ideal_from_elements_checks_closure():
    ring = build_ring("Z/12")
    good = ideal_from_elements(ring, {0, 4, 8})
    assert good.is_proper()
    with pytest.raises(ValueError):
        ideal_from_elements(ring, {0, 4})


def test_ideal_enumeration_guard():
    with pytest.raises(GuardExceededError):
        enumerate_ideals(build_ring("Z/8192"))


def test_build_guard():
    with pytest.raises(GuardExceededError):
        build_ring("prod(Z/512,Z/512)")


# ---------------------------------------------------------------------------
# the table cache must be observably transparent


@pytest.mark.parametrize("spec", ["Z/12", "GF(2)[x]/(x^2+x+1)", "prod(Z/2,Z/3)"])
def test_scalar_path_matches_tabulated(spec):
    fast = build_ring(spec)
    slow = build_ring(spec, Guards(table_limit=2))
    assert fast.tables() is not None
    assert slow.tables() is None
    check_ring_axioms(slow)
    assert slow.units() == fast.units()
    n = fast.carrier_size
    for a in range(n):
        for b in range(n):
            assert slow.add(a, b) == fast.add(a, b)
            assert slow.mul(a, b) == fast.mul(a, b)
    assert (len(enumerate_ideals(slow, slow.guards))
            == len(enumerate_ideals(fast)))


RING_POOL = ["Z/7", "Z/36", "GF(3)[x]/(x^3+2x+1)", "prod(Z/4,Z/25)"]


@settings(deadline=None, max_examples=120)
@given(st.sampled_from(RING_POOL), st.data())
def test_ring_laws_random_elements(spec, data):
    ring = build_ring(spec)
    pick = st.integers(0, ring.carrier_size - 1)
    a, b, c = data.draw(pick), data.draw(pick), data.draw(pick)
    assert ring.add(a, b) == ring.add(b, a)
    assert ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c))
    assert ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c))
    assert ring.sub(a, a) == ring.zero
    assert ring.mul(ring.one, a) == a
