"""Diagonal scaling matrices for torus quotients."""

from dataclasses import dataclass

from .errors import ParameterDomainError

__all__ = ["DiagonalLattice"]


@dataclass(frozen=True)
class DiagonalLattice:
    """A = diag(a_1, ..., a_d) with positive entries.

    Describes both the continuous torus (quotient of d-space by the column
    span of A) and, together with a refinement level n, the discrete torus
    whose side lengths are n a_i.
    """

    a: tuple

    def __post_init__(self):
        entries = tuple(float(x) for x in self.a)
        if len(entries) == 0:
            raise ParameterDomainError("need at least one axis")
        if any(x <= 0.0 for x in entries):
            raise ParameterDomainError("scaling entries must be positive")
        object.__setattr__(self, "a", entries)

    @property
    def d(self):
        return len(self.a)

    def det(self):
        p = 1.0
        for x in self.a:
            p *= x
        return p

    def sides(self, n):
        """Integer side lengths n a_i of the level n discrete torus."""
        if n < 1 or n != int(n):
            raise ParameterDomainError("refinement level must be a positive integer")
        out = []
        for x in self.a:
            m = x * n
            if abs(m - round(m)) > 1e-9 or round(m) < 2:
                raise ParameterDomainError(
                    "side %g * %d is not an integer >= 2" % (x, n))
            out.append(int(round(m)))
        return tuple(out)
