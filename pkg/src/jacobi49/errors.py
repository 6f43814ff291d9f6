"""Exception types shared across the package.

The distinction matters for the CLI exit-code contract: bad user input
(InputError, DomainError) exits 2, while a failed mathematical identity
(InvariantViolation) indicates a bug or a genuine counterexample and is
surfaced, never swallowed.
"""


class InputError(ValueError):
    """Invalid input: composite modulus, wrong residue class, bad generator."""


class DomainError(ValueError):
    """Value outside an operation's domain, e.g. a discrete log of zero."""


class InvariantViolation(RuntimeError):
    """An identity that must hold mathematically failed; signals an upstream bug."""


class UnsupportedCase(RuntimeError):
    """Reachable in principle but outside the supported parameter range."""
