"""Exact arithmetic in Z[zeta_e] for e in {7, 49}, and the reduction map
into F_7[t]/(t^8) used for congruence checks.

Elements are stored as length-e integer coefficient vectors on the power
basis 1, zeta, ..., zeta^(e-1) and canonicalized so that coefficients at
exponents >= phi(e) vanish, using the relation Phi_e(zeta) = 0.  All
coefficients are Python ints, so arithmetic is exact at any size.

Congruences modulo powers of (1 - zeta) are never checked by
constructing the ideal.  Instead zeta maps to 1 + t: the 49th cyclotomic
polynomial at 1 + t is t^42 modulo 7, so Z[zeta_49]/(1 - zeta)^k is
F_7[t]/(t^k) for k <= 42, and reducing modulo (7, t^k) computes the
congruence class exactly.  `check_reduction_identity` asserts this once.
"""

import math
from dataclasses import dataclass

from .errors import InputError

SUPPORTED_ORDERS = (7, 49)

# binomial(k, i) mod 7 for k <= 48, i <= 41: coefficient of t^i in (1+t)^k.
_BINOM7 = [[math.comb(k, i) % 7 for i in range(42)] for k in range(49)]


def _phi(e: int) -> int:
    return 6 if e == 7 else 42


def _canonicalize(e: int, coeffs: list[int]) -> tuple[int, ...]:
    c = list(coeffs)
    ph = _phi(e)
    step = e // 7  # 1 for e=7, 7 for e=49
    for m in range(e - 1, ph - 1, -1):
        v = c[m]
        if v:
            c[m] = 0
            r = m - ph
            for j in range(6):
                c[j * step + r] -= v
    return tuple(c)


class CyclotomicInt:
    """An element of Z[zeta_e], kept in canonical form."""

    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs):
        if e not in SUPPORTED_ORDERS:
            raise InputError(f"unsupported cyclotomic order {e}")
        coeffs = [int(v) for v in coeffs]
        if len(coeffs) > e:
            raise InputError(f"coefficient vector longer than {e}")
        coeffs += [0] * (e - len(coeffs))
        object.__setattr__(self, "e", e)
        object.__setattr__(self, "coeffs", _canonicalize(e, coeffs))

    def __setattr__(self, *_):
        raise AttributeError("CyclotomicInt is immutable")

    @classmethod
    def zero(cls, e: int) -> "CyclotomicInt":
        return cls(e, [])

    @classmethod
    def from_int(cls, e: int, n: int) -> "CyclotomicInt":
        return cls(e, [n])

    @classmethod
    def monomial(cls, e: int, k: int, c: int = 1) -> "CyclotomicInt":
        coeffs = [0] * e
        coeffs[k % e] = c
        return cls(e, coeffs)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.coeffs)

    def constant_value(self) -> int:
        """The rational integer this element equals, or raise if it is not one."""
        if any(self.coeffs[1:]):
            raise ValueError("element is not a rational integer")
        return self.coeffs[0]

    def _check_same_ring(self, other: "CyclotomicInt") -> None:
        if not isinstance(other, CyclotomicInt):
            raise TypeError("expected a CyclotomicInt")
        if self.e != other.e:
            raise InputError(f"mixed cyclotomic orders {self.e} and {other.e}")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.e, other)
        self._check_same_ring(other)
        return CyclotomicInt(self.e, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.e, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.e, other)
        self._check_same_ring(other)
        return CyclotomicInt(self.e, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.e, [other * a for a in self.coeffs])
        self._check_same_ring(other)
        e = self.e
        out = [0] * e
        for k, a in enumerate(self.coeffs):
            if a:
                for m, b in enumerate(other.coeffs):
                    if b:
                        out[(k + m) % e] += a * b
        return CyclotomicInt(e, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == CyclotomicInt.from_int(self.e, other).coeffs
        return (
            isinstance(other, CyclotomicInt)
            and self.e == other.e
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.e, self.coeffs))

    def __repr__(self):
        terms = [f"{a}*z^{k}" for k, a in enumerate(self.coeffs) if a]
        return f"CyclotomicInt({self.e}: {' + '.join(terms) or '0'})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def apply_automorphism(a: CyclotomicInt, s: int) -> CyclotomicInt:
    """The ring automorphism zeta -> zeta^s, for s coprime to the order."""
    if math.gcd(s, a.e) != 1:
        raise InputError(f"automorphism index {s} not coprime to {a.e}")
    out = [0] * a.e
    for k, v in enumerate(a.coeffs):
        if v:
            out[s * k % a.e] += v
    return CyclotomicInt(a.e, out)


@dataclass(frozen=True)
class Residue8:
    """An element of F_7[t]/(t^8): the target ring of the main congruence."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != 8 or any(not 0 <= v <= 6 for v in self.coeffs):
            raise InputError("Residue8 needs eight coefficients in [0, 6]")

    def __add__(self, other: "Residue8") -> "Residue8":
        return Residue8(tuple((a + b) % 7 for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "Residue8") -> "Residue8":
        out = [0] * 8
        for k, a in enumerate(self.coeffs):
            if a:
                for m, b in enumerate(other.coeffs[: 8 - k]):
                    out[k + m] += a * b
        return Residue8(tuple(v % 7 for v in out))

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def residue8(*coeffs: int) -> Residue8:
    return Residue8(tuple(v % 7 for v in coeffs))


def _image_coeffs(a: CyclotomicInt, upto: int) -> list[int]:
    # Coefficients of the image of a under zeta -> 1 + t, modulo (7, t^upto).
    out = [0] * upto
    for k, v in enumerate(a.coeffs):
        if v % 7:
            row = _BINOM7[k]
            for i in range(min(upto, k + 1)):
                out[i] += v * row[i]
    return [v % 7 for v in out]


def residue_mod_t8(a: CyclotomicInt) -> Residue8:
    """Image of a in F_7[t]/(t^8) under zeta -> 1 + t (order 49 only)."""
    if a.e != 49:
        raise InputError("reduction mod (1 - zeta)^8 is defined for order 49")
    return Residue8(tuple(_image_coeffs(a, 8)))


def valuation(a: CyclotomicInt) -> int | float:
    """(1 - zeta)-adic valuation of a, capped at 42; inf for the zero element.

    A return of 42 means "at least 42": 7 generates (1 - zeta)^42, and
    finer resolution would need arithmetic mod 7^2, which is out of scope.
    """
    if a.e != 49:
        raise InputError("valuation is defined for order 49")
    if a.is_zero():
        return math.inf
    img = _image_coeffs(a, 42)
    for i, v in enumerate(img):
        if v:
            return i
    return 42


def cyclotomic_poly_at_zeta(e: int) -> CyclotomicInt:
    """Phi_e evaluated at zeta_e, as an element; canonicalizes to zero."""
    # Phi_7(x) = 1 + x + ... + x^6; Phi_49(x) = 1 + x^7 + ... + x^42.
    step = e // 7
    coeffs = [0] * e
    for j in range(7):
        coeffs[j * step] = 1
    return CyclotomicInt(e, coeffs)


def check_reduction_identity() -> bool:
    """Assert Phi_49(1 + t) = t^42 (mod 7), the fact the residue map rests on.

    Also checks Phi_49(1) = 7, which pins the valuation of 7 at exactly 42.
    """
    # Expand Phi_49(1 + t) = sum_j (1 + t)^(7j) over j = 0..6 exactly.
    poly = [0] * 43
    for j in range(7):
        for i in range(7 * j + 1):
            poly[i] += math.comb(7 * j, i)
    target = [0] * 42 + [1]
    return [v % 7 for v in poly] == target and poly[0] == 7
