"""Prime-field context: primality, primitive roots, and the index table.

The index table ind[a] is the discrete logarithm of a with respect to a
fixed primitive root gamma, i.e. gamma**ind[a] == a (mod p).  Every
multiplicative character used elsewhere in the package is read off this
table, so the context is built once per prime and shared read-only.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .errors import DomainError, InputError

# Above this the length-p index table stops being desk-scale.
MAX_PRIME = 10**7

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond the supported range."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in F_p*, via the divisors of p - 1."""
    if a % p == 0:
        raise DomainError("zero has no multiplicative order")
    order = p - 1
    for q in _prime_factors(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


def is_primitive_root(g: int, p: int) -> bool:
    if g % p == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1))


def find_generator(p: int) -> int:
    """Smallest primitive root modulo the odd prime p (smallest for determinism)."""
    if not is_prime(p) or p == 2:
        raise InputError(f"{p} is not an odd prime")
    factors = _prime_factors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise InputError(f"no generator found for {p}")  # pragma: no cover


@dataclass(frozen=True)
class FieldContext:
    """Immutable per-prime context: p, the chosen generator, and the index table."""

    p: int
    gamma: int
    ind: np.ndarray = field(repr=False, compare=False)

    def f(self, e: int) -> int:
        """The cofactor (p - 1) / e for a modulus e dividing p - 1."""
        if (self.p - 1) % e != 0:
            raise InputError(f"{e} does not divide p - 1 = {self.p - 1}")
        return (self.p - 1) // e


def build_ctx(p: int, gamma: int | None = None) -> FieldContext:
    """Build the index table for F_p with the given (or the smallest) generator."""
    if not is_prime(p) or p == 2:
        raise InputError(f"{p} is not an odd prime")
    if p > MAX_PRIME:
        raise InputError(f"p = {p} exceeds the supported bound {MAX_PRIME}")
    if gamma is None:
        gamma = find_generator(p)
    else:
        gamma = gamma % p
        if not is_primitive_root(gamma, p):
            raise InputError(f"{gamma} is not a primitive root modulo {p}")
    ind = _kernels.index_table(p, gamma)
    ind.flags.writeable = False
    return FieldContext(p=p, gamma=gamma, ind=ind)


def index_of(ctx: FieldContext, a: int) -> int:
    """Discrete log of a with respect to ctx.gamma; a must be nonzero mod p."""
    r = a % ctx.p
    if r == 0:
        raise DomainError("index of 0 is undefined")
    return int(ctx.ind[r])


def is_seventh_power_residue(ctx: FieldContext, a: int) -> bool:
    """Whether a is a seventh power in F_p*; requires p = 1 (mod 7)."""
    if (ctx.p - 1) % 7 != 0:
        raise InputError("p must be 1 (mod 7)")
    return index_of(ctx, a) % 7 == 0
