"""Exception types raised across the package."""

from __future__ import annotations


class InvalidFamilyError(ValueError):
    """Malformed graph family descriptor or parameters below the family minimum."""


class NumericalFailure(ArithmeticError):
    """An eigensolver exceeded its iteration cap."""


class MultisetMismatch(ValueError):
    """A spectrum subtraction found an element with no partner within tolerance."""

    def __init__(self, value: float, tol: float):
        super().__init__(f"no element within {tol:g} of {value!r}")
        self.value = value
        self.tol = tol


class NotSymmetrizable(ValueError):
    """A tridiagonal matrix has an off-diagonal pair with negative product."""


class NonRegularPartition(ValueError):
    """A partition is not regular (equitable) for the given graph.

    ``witness`` is ``(u, u2, j)``: vertices ``u`` and ``u2`` share a cell but
    have different neighbour counts in cell ``j``.
    """

    def __init__(self, witness: tuple[int, int, int]):
        u, u2, j = witness
        super().__init__(f"vertices {u} and {u2} differ in neighbours inside cell {j}")
        self.witness = witness


class LiftNotSimple(ValueError):
    """A voltage lift would contain a loop or a multiple edge."""


class CapExceeded(RuntimeError):
    """A dense computation would exceed the configured vertex cap."""


class OverliftInconsistency(ArithmeticError):
    """The over-lift union did not contain the expected extra eigenvalues 4."""
