"""Cyclotomic numbers, Jacobi sums, and Dickson-Hurwitz sums over F_p.

The package keeps three independent routes to every Jacobi sum J(1,n)_e:

  * a direct character sum over F_p (jacobi_sum),
  * the Fourier transform of the cyclotomic-number table (jacobi_from_cyc),
  * the Dickson-Hurwitz expansion J(1,n)_e = sum_i B(i,n) zeta^i
    (jacobi_via_dh, valid because the cofactor f is even for odd e).

All three must agree exactly; certificates record the comparison.

Convention trap, isolated here once: characters vanish at zero for every
exponent, including exponent 0.  Direct sums therefore always skip the
two field elements where an argument vanishes, which is what makes the
identity J(chi^0, chi^0) = p - 2 come out.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .cyclotomic_ring import CyclotomicInt, apply_automorphism
from .errors import InvariantViolation, UnsupportedCase
from .prime_field import FieldContext


@dataclass(frozen=True)
class CycNumberTable:
    """The e*e cyclotomic numbers (i,j)_e: counts of v with given index pair."""

    e: int
    p: int
    gamma: int
    counts: np.ndarray = field(repr=False)

    def cell(self, i: int, j: int) -> int:
        return int(self.counts[i % self.e, j % self.e])

    def to_json(self) -> list[list[int]]:
        return self.counts.tolist()


@dataclass(frozen=True)
class DicksonHurwitzTable:
    """Dickson-Hurwitz sums B(i,j)_e = sum_h (h, i - j*h)_e."""

    e: int
    p: int
    gamma: int
    B: np.ndarray = field(repr=False)

    def cell(self, i: int, j: int) -> int:
        return int(self.B[i % self.e, j % self.e])

    def to_json(self) -> list[list[int]]:
        return self.B.tolist()


def cyclotomic_numbers(ctx: FieldContext, e: int) -> CycNumberTable:
    """One pass over v in F_p minus {0, -1}, binning by (ind v, ind(v+1)) mod e."""
    ctx.f(e)  # validates e | p - 1
    counts = _kernels.pair_counts(ctx.ind, e)
    counts.flags.writeable = False
    return CycNumberTable(e=e, p=ctx.p, gamma=ctx.gamma, counts=counts)


def jacobi_sum(ctx: FieldContext, e: int, i: int, j: int) -> CyclotomicInt:
    """J(i,j)_e = sum over v of chi^i(v) chi^j(1+v), as an exact element."""
    ctx.f(e)
    hist = _kernels.power_pair_hist(ctx.ind, e, i % e, j % e)
    return CyclotomicInt(e, hist.tolist())


def jacobi_sum_variant(ctx: FieldContext, e: int, i: int, j: int) -> CyclotomicInt:
    """The 1-v convention: J(chi^i, chi^j)_e = sum of chi^i(v) chi^j(1-v)."""
    ctx.f(e)
    hist = _kernels.power_pair_hist_variant(ctx.ind, e, i % e, j % e)
    return CyclotomicInt(e, hist.tolist())


def chi_at_minus_one(ctx: FieldContext, e: int, i: int) -> CyclotomicInt:
    """chi^i(-1) = zeta^(i (p-1)/2) as an element of Z[zeta_e]."""
    return CyclotomicInt.monomial(e, i * ((ctx.p - 1) // 2) % e)


def jacobi_from_cyc(cyc: CycNumberTable, a: int, b: int) -> CyclotomicInt:
    """J(a,b)_e rebuilt from the cyclotomic-number table (Fourier direction)."""
    e = cyc.e
    i = np.arange(e, dtype=np.int64)
    exps = (a * i[:, None] + b * i[None, :]) % e
    coeffs = np.zeros(e, dtype=np.int64)
    np.add.at(coeffs, exps.ravel(), cyc.counts.ravel())
    return CyclotomicInt(e, coeffs.tolist())


def cyc_from_jacobi(all_j: dict[tuple[int, int], CyclotomicInt], e: int,
                    a: int, b: int) -> int:
    """Inverse Fourier direction: recover (a,b)_e from the full Jacobi grid.

    Evaluates sum_{i,j} zeta^-(ai+bj) J(i,j)_e, which must be the rational
    constant e^2 (a,b)_e; anything else raises, since it means an upstream
    table or sum is wrong.
    """
    acc = [0] * e
    for i in range(e):
        for j in range(e):
            shift = (-(a * i + b * j)) % e
            for k, v in enumerate(all_j[i, j].coeffs):
                if v:
                    acc[(k + shift) % e] += v
    total = CyclotomicInt(e, acc)
    try:
        value = total.constant_value()
    except ValueError as exc:
        raise InvariantViolation(
            f"Fourier inversion at ({a},{b}) is not a rational integer"
        ) from exc
    if value % (e * e) != 0:
        raise InvariantViolation(
            f"Fourier inversion at ({a},{b}) not divisible by {e}^2: {value}"
        )
    return value // (e * e)


def dickson_hurwitz(cyc: CycNumberTable) -> DicksonHurwitzTable:
    """Full table of B(i,j)_e = sum_h (h, i - j*h)_e from the cyclotomic numbers."""
    e = cyc.e
    counts = cyc.counts
    i = np.arange(e, dtype=np.int64)
    h = np.arange(e, dtype=np.int64)
    B = np.zeros((e, e), dtype=np.int64)
    for j in range(e):
        cols = (i[:, None] - j * h[None, :]) % e
        B[:, j] = counts[h[None, :], cols].sum(axis=1)
    B.flags.writeable = False
    return DicksonHurwitzTable(e=e, p=cyc.p, gamma=cyc.gamma, B=B)


def jacobi_via_dh(dh: DicksonHurwitzTable, j: int) -> CyclotomicInt:
    """J(1,j)_e as sum_i B(i,j) zeta^i; needs the cofactor f even."""
    f = (dh.p - 1) // dh.e
    if f % 2 != 0:
        raise UnsupportedCase("the Dickson-Hurwitz expansion of J(1,j) needs f even")
    return CyclotomicInt(dh.e, [int(dh.B[i, j % dh.e]) for i in range(dh.e)])


def six_class(e: int, i: int, j: int) -> set[tuple[int, int]]:
    """The symmetry class of the cyclotomic number (i,j)_e when f is even."""
    return {
        (i % e, j % e),
        (j % e, i % e),
        ((i - j) % e, -j % e),
        ((j - i) % e, -i % e),
        (-i % e, (j - i) % e),
        (-j % e, (i - j) % e),
    }


def jacobi_six_class(e: int, i: int, j: int) -> set[tuple[int, int]]:
    """The index pairs sharing the same Jacobi sum when f is even."""
    return {
        (i % e, j % e),
        (j % e, i % e),
        ((-i - j) % e, j % e),
        (j % e, (-i - j) % e),
        ((-i - j) % e, i % e),
        (i % e, (-i - j) % e),
    }


def check_symmetries(cyc: CycNumberTable) -> list[str]:
    """Verify the even-f symmetry classes and the total count; return failures."""
    e, p = cyc.e, cyc.p
    problems = []
    if int(cyc.counts.sum()) != p - 2:
        problems.append(f"total {int(cyc.counts.sum())} != p - 2")
    for i in range(e):
        for j in range(e):
            base = cyc.cell(i, j)
            for (a, b) in six_class(e, i, j):
                if cyc.cell(a, b) != base:
                    problems.append(f"({i},{j}) class broken at ({a},{b})")
    return problems


def check_dh_identities(dh: DicksonHurwitzTable) -> list[str]:
    """B(i,0) values, column sums, and the column symmetry B(i,j) = B(i, e-j-1).

    The symmetry also circulates with the second index written e-j-i;
    that reading fails every table scan (a 1 read as i), while e-j-1
    follows from the even-f class relation (a,b) = (-a, b-a) applied
    inside the defining sum.
    """
    e, p = dh.e, dh.p
    f = (p - 1) // e
    problems = []
    if dh.cell(0, 0) != f - 1:
        problems.append(f"B(0,0) = {dh.cell(0, 0)} != f - 1")
    for i in range(1, e):
        if dh.cell(i, 0) != f:
            problems.append(f"B({i},0) != f")
    for j in range(e):
        colsum = sum(dh.cell(i, j) for i in range(e))
        if colsum != p - 2:
            problems.append(f"column {j} sums to {colsum} != p - 2")
    for i in range(e):
        for j in range(e):
            if dh.cell(i, j) != dh.cell(i, e - j - 1):
                problems.append(f"B({i},{j}) != B({i},{e - j - 1})")
    return problems


def identity_suite(ctx: FieldContext, e: int, pairs=None, abs_pairs=None) -> list[str]:
    """Exercise the elementary Jacobi-sum identities; return a list of failures.

    pairs: index pairs for the structural identities (default: all e*e).
    abs_pairs: pairs for the modulus check J * sigma_-1(J) = p (default: same).
    """
    p = ctx.p
    if pairs is None:
        pairs = [(i, j) for i in range(e) for j in range(e)]
    if abs_pairs is None:
        abs_pairs = pairs
    failures = []
    f_even = ctx.f(e) % 2 == 0

    variant_cache: dict[tuple[int, int], CyclotomicInt] = {}
    direct_cache: dict[tuple[int, int], CyclotomicInt] = {}

    def variant(i, j):
        key = (i % e, j % e)
        if key not in variant_cache:
            variant_cache[key] = jacobi_sum_variant(ctx, e, i, j)
        return variant_cache[key]

    def direct(i, j):
        key = (i % e, j % e)
        if key not in direct_cache:
            direct_cache[key] = jacobi_sum(ctx, e, i, j)
        return direct_cache[key]

    for (i, j) in pairs:
        v = variant(i, j)
        if i % e == 0 and j % e == 0:
            if v != p - 2:
                failures.append(f"J(chi^0,chi^0) != p - 2 at ({i},{j})")
        elif (i % e == 0) != (j % e == 0):
            if v != -1:
                failures.append(f"one-zero identity fails at ({i},{j})")
        elif i % e != 0 and (i + j) % e == 0:
            if v != -chi_at_minus_one(ctx, e, i):
                failures.append(f"opposite-pair identity fails at ({i},{j})")
        # symmetry and the index shuffle, for every pair
        if v != variant(j, i):
            failures.append(f"J(chi^i,chi^j) != J(chi^j,chi^i) at ({i},{j})")
        if v != chi_at_minus_one(ctx, e, i) * variant(-i - j, i):
            failures.append(f"index-shuffle identity fails at ({i},{j})")
        # the two conventions differ by chi^i(-1)
        if direct(i, j) != chi_at_minus_one(ctx, e, i) * v:
            failures.append(f"convention relation fails at ({i},{j})")

    for (i, j) in abs_pairs:
        if i % e and j % e and (i + j) % e:
            jj = direct(i, j)
            if jj * apply_automorphism(jj, -1) != p:
                failures.append(f"|J|^2 != p at ({i},{j})")

    if f_even:
        for (i, j) in pairs:
            jj = direct(i, j)
            for (a, b) in jacobi_six_class(e, i, j):
                if direct(a, b) != jj:
                    failures.append(f"even-f Jacobi symmetry fails at ({i},{j})")
                    break
        for i in range(1, e):
            jii = direct(i, i)
            if not (jii == direct(-2 * i, i) == direct(i, -2 * i)):
                failures.append(f"J(i,i) = J(-2i,i) = J(i,-2i) fails at i={i}")
    return failures
