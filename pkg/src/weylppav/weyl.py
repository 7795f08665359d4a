"""Finite closure of integer matrix groups.

Breadth-first closure under products from a generator set, used to realize
reflection groups explicitly and to verify their orders. The closure loop
multiplies flat integer tuples through the selected kernel backend; see
``_kernel`` for the compiled/pure split.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from ._kernel import mat_mul_flat
from .exactmat import Matrix
from .rootsys import RootSystemId


class NonUnimodularGenerator(ValueError):
    """A generator with |det| != 1 cannot generate a group of lattice symmetries."""


@dataclass(frozen=True)
class MatrixGroup:
    """Closure result: elements in canonical order plus a truncation flag.

    ``elements`` is sorted lexicographically on the flattened entries, so
    two runs (or two backends) produce identical output. When ``truncated``
    is True the closure hit the cap and ``elements`` holds exactly what had
    been found, in the same canonical order.
    """

    dimension: int
    elements: tuple
    generators: tuple
    truncated: bool

    @property
    def order(self) -> int:
        return len(self.elements)


def generate_group(generators, cap: int) -> MatrixGroup:
    """Close a set of unimodular integer matrices under multiplication.

    The cap is mandatory: if one more element would push the closure past
    it, exploration stops and the result is flagged truncated.
    """
    gens = list(generators)
    if not gens:
        raise ValueError("at least one generator required")
    n = gens[0].nrows
    for g in gens:
        if not (g.is_square and g.nrows == n and g.is_integral()):
            raise ValueError("generators must be square integer matrices of equal size")
        if abs(g.det()) != 1:
            raise NonUnimodularGenerator(f"generator has determinant {g.det()}")
    if cap < 1:
        raise ValueError("cap must be positive")

    gen_flats = [g.flat for g in gens]
    ident = Matrix.identity(n).flat
    seen = {ident}
    frontier = [ident]
    truncated = False
    while frontier and not truncated:
        nxt = []
        for el in frontier:
            for g in gen_flats:
                prod = mat_mul_flat(el, g, n)
                if prod not in seen:
                    if len(seen) >= cap:
                        truncated = True
                        break
                    seen.add(prod)
                    nxt.append(prod)
            if truncated:
                break
        frontier = nxt

    elements = tuple(Matrix.from_flat(f, n, n) for f in sorted(seen))
    return MatrixGroup(dimension=n, elements=elements,
                       generators=tuple(gens), truncated=truncated)


def check_invariance(generators, form: Matrix) -> bool:
    """True iff g^t * form * g == form for every generator.

    Checking generators suffices for the whole generated group.
    """
    if not form.is_symmetric():
        raise ValueError("symmetric form required")
    return all(g.T * form * g == form for g in generators)


def expected_order(system: RootSystemId) -> int:
    """Classical order of the reflection group of the given root system."""
    fam, n = system.family, system.rank
    if fam == "A":
        return factorial(n + 1)
    if fam in ("B", "C"):
        return 2 ** n * factorial(n)
    if fam == "D":
        return 2 ** (n - 1) * factorial(n)
    if fam == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[n]
    if fam == "F":
        return 1152
    return 12  # G2
