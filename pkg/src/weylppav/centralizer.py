"""Centralizer of the embedded reflection action inside the symplectic group.

Every symplectic matrix commuting with the embedded action has the shape
[[a*I, b*z0], [c*z0^{-1}, d*I]] with ad - bc = 1; integrality pins b to
multiples of the level N, the least integer with N * z0 integral. That
level is what parameterizes the family as a quotient of the upper
half-plane by the congruence group of matrices whose upper-right entry is
divisible by N (written Gamma^0(N); level 1 is the full modular group).

Exhaustiveness of this shape is an assumption recorded here, not something
the toolkit proves; what it checks is that every constructed element is
symplectic and commutes with the embedded generators.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactmat import Matrix
from .ppav import riemann_family
from .rootsys import RootSystemId, gram_matrix
from .symplectic import SymplecticMat


class DeterminantNotOne(ValueError):
    """The parameters (a, b, c, d) must satisfy ad - bc = 1."""


class LevelViolation(ValueError):
    """b * z0 is not integral: b must be a multiple of the level."""


@dataclass(frozen=True)
class CentralizerReport:
    """Congruence level and the modular-curve description of one family."""

    system: RootSystemId
    level: int
    curve: str


def centralizer_level(system: RootSystemId) -> int:
    """Least N with N * z0 integral."""
    return riemann_family(system).z0.denominator_lcm()


def centralizer_element(system: RootSystemId, a: int, b: int, c: int,
                        d: int) -> SymplecticMat:
    """Build [[a*I, b*z0], [c*z0^{-1}, d*I]] as an integer symplectic matrix."""
    if a * d - b * c != 1:
        raise DeterminantNotOne(f"ad - bc = {a * d - b * c}")
    level = centralizer_level(system)
    if b % level:
        raise LevelViolation(f"b = {b} is not a multiple of the level {level}")
    n = system.rank
    z0 = riemann_family(system).z0
    ident = Matrix.identity(n)
    top_right = b * z0
    if not top_right.is_integral():
        raise AssertionError("level check should have guaranteed integrality")
    bottom_left = c * gram_matrix(system)  # z0^{-1} is the Gram matrix, always integral
    return SymplecticMat(n, Matrix.block2(a * ident, top_right,
                                          bottom_left, d * ident))


def curve_description(level: int) -> str:
    """Render H_1 / Gamma^0(level); level 1 collapses to the full modular group."""
    return "H_1/Gamma" if level == 1 else f"H_1/Gamma^0({level})"


def modular_curve_report(system: RootSystemId) -> CentralizerReport:
    level = centralizer_level(system)
    return CentralizerReport(system=system, level=level,
                             curve=curve_description(level))
