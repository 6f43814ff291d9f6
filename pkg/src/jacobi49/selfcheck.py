"""Startup algebra self-checks: fast, deterministic, no field larger than p = 29.

These guard the foundations everything else silently relies on: the
polynomial identity behind the residue map, the ring-homomorphism
property of that map, ideal membership of 7, and the elementary
Jacobi-sum identities on a small field.
"""

import math
import random

from .cyclotomic_ring import (CyclotomicInt, check_reduction_identity,
                              cyclotomic_poly_at_zeta, residue_mod_t8, valuation)
from .cyclotomy import identity_suite
from .prime_field import build_ctx


def _random_element(rng: random.Random) -> CyclotomicInt:
    return CyclotomicInt(49, [rng.randrange(-50, 51) for _ in range(49)])


def run_selfchecks(pairs: int = 100, seed: int = 7) -> list[tuple[str, bool]]:
    """Run every check; returns (name, passed) pairs."""
    rng = random.Random(seed)
    results = []

    results.append(("cyclotomic polynomial at 1 + t is t^42 over F_7",
                    check_reduction_identity()))
    results.append(("defining relation canonicalizes to zero",
                    cyclotomic_poly_at_zeta(49).is_zero()
                    and cyclotomic_poly_at_zeta(7).is_zero()))
    results.append(("residue of 7 vanishes",
                    residue_mod_t8(CyclotomicInt.from_int(49, 7)).coeffs == (0,) * 8))
    zeta_minus_1 = CyclotomicInt.monomial(49, 1) - 1
    results.append(("valuation anchors: v(0) = inf, v(zeta - 1) = 1, v(7) = 42",
                    valuation(CyclotomicInt.zero(49)) == math.inf
                    and valuation(zeta_minus_1) == 1
                    and valuation(CyclotomicInt.from_int(49, 7)) == 42))

    hom_ok = True
    for _ in range(pairs):
        a, b = _random_element(rng), _random_element(rng)
        if residue_mod_t8(a * b) != residue_mod_t8(a) * residue_mod_t8(b):
            hom_ok = False
            break
        if residue_mod_t8(a + b).coeffs != tuple(
                (x + y) % 7 for x, y in
                zip(residue_mod_t8(a).coeffs, residue_mod_t8(b).coeffs)):
            hom_ok = False
            break
    results.append((f"residue map is a ring homomorphism ({pairs} random pairs)",
                    hom_ok))

    ctx = build_ctx(29)
    results.append(("elementary Jacobi-sum identities hold at p = 29",
                    not identity_suite(ctx, 7)))
    return results
