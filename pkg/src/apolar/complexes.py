"""Divisor-closed monomial cell complexes.

A degree-k monomial is a (k-1)-cell; the complex of a polynomial is the
divisor closure of its support, and the subcomplex order is monomial
divisibility.  The complex is stored purely as its face poset: no geometric
realization is kept, because every downstream query (skeleton counts, cell
counts, minimal non-faces) reads only the poset.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .monomials import ExponentVector, enumerate_exponents
from .polynomials import GradedPolynomial


@dataclass(frozen=True)
class CellComplex:
    """Divisor-closed set of monomials; cell dimension is degree minus one."""

    num_vars: int
    cells: frozenset

    def has_cell(self, exps: ExponentVector) -> bool:
        return tuple(exps) in self.cells

    def cells_of_degree(self, degree: int) -> tuple[ExponentVector, ...]:
        return tuple(sorted(c for c in self.cells if sum(c) == degree))


def divisors(exps: ExponentVector) -> list[ExponentVector]:
    """All monomial divisors of degree >= 1 (the monomial itself included)."""
    out = [
        d
        for d in product(*(range(e + 1) for e in exps))
        if any(d)
    ]
    out.sort()
    return out


def divides(g: ExponentVector, h: ExponentVector) -> bool:
    if len(g) != len(h):
        raise ValueError("exponent vectors of different lengths")
    return all(a <= b for a, b in zip(g, h))


def is_subcomplex(g: ExponentVector, h: ExponentVector) -> bool:
    """Whether the complex of ``g`` sits inside the complex of ``h``.

    Equivalent to coordinatewise divisibility of the monomials.
    """
    return divides(g, h)


def divisor_closure(support: Iterable[ExponentVector], num_vars: int) -> CellComplex:
    """Complex of a support set: every monomial of degree >= 1 dividing at
    least one support monomial.  Gluing along shared divisors is automatic
    because shared divisors are identical set elements."""
    support = [tuple(m) for m in support]
    if not support:
        raise ValueError("empty support")
    if any(len(m) != num_vars for m in support):
        raise ValueError("support monomial with wrong variable count")
    degrees = {sum(m) for m in support}
    if len(degrees) != 1:
        raise ValueError(f"inhomogeneous support: degrees {sorted(degrees)}")
    if degrees.pop() < 1:
        raise ValueError("support must have degree at least 1")
    cells: set[ExponentVector] = set()
    for m in support:
        cells.update(divisors(m))
    return CellComplex(num_vars, frozenset(cells))


def complex_of(f: GradedPolynomial) -> CellComplex:
    if f.is_zero():
        raise ValueError("zero polynomial")
    return divisor_closure(f.support(), f.num_vars)


def skeleton_count(c: CellComplex, k: int) -> int:
    """Number of cells of dimension at most ``k`` (degree at most ``k + 1``)."""
    return sum(1 for m in c.cells if sum(m) <= k + 1)


def cell_count_vector(c: CellComplex, d: int) -> tuple[int, ...]:
    """Cells per degree, ``(s_0, ..., s_d)`` with the convention ``s_0 = 1``."""
    counts = [1] + [0] * d
    for m in c.cells:
        degree = sum(m)
        if degree <= d:
            counts[degree] += 1
    return tuple(counts)


def minimal_nonfaces(c: CellComplex, j: int) -> tuple[ExponentVector, ...]:
    """Degree-``j`` monomials outside the complex whose proper divisors of
    degree >= 1 all lie inside it.  For ``j = 1`` these are the unused
    variables."""
    if j < 1:
        raise ValueError("degree must be at least 1")
    out = []
    for m in enumerate_exponents(c.num_vars, j):
        if m in c.cells:
            continue
        if all(d in c.cells for d in divisors(m) if d != m):
            out.append(m)
    return tuple(out)
