"""Combinatorial support analysis for the standard locus.

The standard locus of degree-d forms decomposes into components indexed by
admissible supports; a support is admissible when three combinatorial
conditions on its partial-derivative exponent vectors hold (every variable is
hit, each derived vector arises from at most one source, and no two distinct
sources collide).  These predicates are implemented literally as stated in
the source characterization, even where they disagree with the linear-algebra
notion of standardness; the CLI reports both verdicts side by side.

This module also builds the two projection matrices between ambient Perazzo
polynomial spaces (eliminating the last u-variable, and stepping the degree
down by one) and reports their computed kernel dimensions next to the
published closed-form values.  Where the computation disagrees with the
closed form, the discrepancy is reported verbatim, never patched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardExceeded
from .linalg import RationalMatrix, rank
from .monomials import (
    ExponentVector,
    decrement_at,
    decrement_last,
    enumerate_exponents,
    last_variable_multiples,
    lift_image,
    lift_image_positions,
    monomial_count,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)

DEFAULT_ENUMERATION_GUARD = 20
DEFAULT_MATRIX_GUARD = 20000


@dataclass(frozen=True)
class SupportConditions:
    """The three admissibility predicates on a support set."""

    covers_all_variables: bool
    unique_derivative_source: bool
    no_cross_collision: bool

    @property
    def all_hold(self) -> bool:
        return (
            self.covers_all_variables
            and self.unique_derivative_source
            and self.no_cross_collision
        )


@dataclass(frozen=True)
class ComponentDescriptor:
    """An admissible support together with its derived exponent set.

    Two dimension counts are reported: one from the size of the support
    (torus parameterization) and one from the size of the derived set; the
    two can differ and neither is silently preferred.
    """

    support: tuple
    derived_set: tuple
    dim_support: int
    dim_derived: int


def _derivative_pairs(support, num_vars: int):
    for vec in support:
        for k in range(1, num_vars + 1):
            down = decrement_at(vec, k)
            if down is not None:
                yield vec, k, down


def support_conditions(support, num_vars: int) -> SupportConditions:
    """Evaluate the three admissibility predicates on a support set."""
    support = sorted(tuple(m) for m in support)
    hit_variables = set()
    sources: dict[ExponentVector, list] = {}
    for vec, k, down in _derivative_pairs(support, num_vars):
        hit_variables.add(k)
        sources.setdefault(down, []).append((vec, k))
    covers = len(hit_variables) == num_vars
    unique = all(len(v) <= 1 for v in sources.values())
    collision = any(
        v1 != v2 and k1 != k2
        for pairs in sources.values()
        for v1, k1 in pairs
        for v2, k2 in pairs
    )
    return SupportConditions(covers, unique, not collision)


def derived_set(support, num_vars: int) -> tuple[ExponentVector, ...]:
    """All defined derivative exponent vectors of the support, sorted."""
    return tuple(
        sorted({down for _, _, down in _derivative_pairs(support, num_vars)})
    )


def enumerate_admissible_supports(
    n: int,
    d: int,
    max_basis: int = DEFAULT_ENUMERATION_GUARD,
) -> list[ComponentDescriptor]:
    """All support subsets of the degree-d basis passing every admissibility
    predicate, in deterministic (subset bitmask) order.

    The scan is exponential in the basis size, hence the guard.
    """
    basis = enumerate_exponents(n, d)
    if len(basis) > max_basis:
        raise GuardExceeded(
            f"basis size {len(basis)} exceeds enumeration guard {max_basis}"
        )
    out = []
    for mask in range(1, 1 << len(basis)):
        support = tuple(basis[b] for b in range(len(basis)) if mask >> b & 1)
        if support_conditions(support, n).all_hold:
            derived = derived_set(support, n)
            out.append(
                ComponentDescriptor(
                    support, derived, len(support) - 1, len(derived) - 1
                )
            )
    return out


def pairwise_gcd_bounded(support) -> bool:
    """Whether every pair of distinct support monomials has gcd degree at
    most d - 2.  Vacuously true for fewer than two monomials."""
    support = [tuple(m) for m in support]
    if not support:
        raise ValueError("empty support")
    d = sum(support[0])
    for i, a in enumerate(support):
        for b in support[i + 1 :]:
            gcd_degree = sum(min(x, y) for x, y in zip(a, b))
            if gcd_degree > d - 2:
                return False
    return True


def _unit_matrix_from_images(
    images: list[int | None],
    n_rows: int,
) -> RationalMatrix:
    """Matrix with a single 1 in column c at row images[c] (None = zero column)."""
    cols = len(images)
    flat = [_ZERO] * (n_rows * cols)
    for c, r in enumerate(images):
        if r is not None:
            flat[r * cols + c] = _ONE
    return RationalMatrix(n_rows, cols, tuple(flat))


def u_elimination_matrix(
    n: int,
    d: int,
    max_dim: int = DEFAULT_MATRIX_GUARD,
) -> RationalMatrix:
    """Matrix of the projection that eliminates the last u-variable.

    Source: degree-d monomials in tau(n, d-1) x-variables plus n u-variables.
    Target: degree-d monomials in tau(n-1, d-1) x-variables plus n-1
    u-variables.  A monomial dies when the last u-variable divides it or when
    one of its x-variables is paired with a u-monomial divisible by the last
    u-variable; surviving monomials drop the killed coordinates (all zero on
    survivors, removed in descending index order).  Bases are lex ascending.
    """
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    p = monomial_count(n, d - 1)
    p_target = monomial_count(n - 1, d - 1)
    killed_x = frozenset(k - 1 for k in last_variable_multiples(n, d))
    source = enumerate_exponents(p + n, d)
    target = enumerate_exponents(p_target + (n - 1), d)
    if max(len(source), len(target)) > max_dim:
        raise GuardExceeded(
            f"matrix dimension {max(len(source), len(target))} exceeds guard {max_dim}"
        )
    target_index = {m: t for t, m in enumerate(target)}
    images: list[int | None] = []
    for vec in source:
        x_part, u_part = vec[:p], vec[p:]
        if u_part[n - 1] >= 1 or any(x_part[t] > 0 for t in killed_x):
            images.append(None)
            continue
        reduced_x = tuple(e for t, e in enumerate(x_part) if t not in killed_x)
        images.append(target_index[reduced_x + u_part[: n - 1]])
    return _unit_matrix_from_images(images, len(target))


def degree_step_matrix(
    n: int,
    d: int,
    max_dim: int = DEFAULT_MATRIX_GUARD,
) -> RationalMatrix:
    """Matrix of the projection that lowers the degree by one.

    Source: degree-d monomials in tau(n, d-1) x-variables plus n u-variables.
    Target: degree-(d-1) monomials in tau(n, d-2) x-variables plus the same n
    u-variables.  A monomial survives only when it has the shape "one
    x-variable whose paired u-monomial is a minimal fiber representative,
    times a u-monomial that is itself such a representative", and the full
    exponent vector is a minimal fiber representative too; the image then
    lowers the last positive u-exponent.  Surviving x-positions are re-indexed
    by their rank among the eligible positions, which is what makes the
    x-block of the target well defined.  Bases are lex ascending.
    """
    if n < 2 or d < 3:
        raise ValueError("need n >= 2 and d >= 3")
    p = monomial_count(n, d - 1)
    p_target = monomial_count(n, d - 2)
    eligible = tuple(k - 1 for k in lift_image_positions(n, d))
    eligible_rank = {orig: t for t, orig in enumerate(eligible)}
    u_image = lift_image(n, d - 1)
    big_image = lift_image(p + n, d)
    source = enumerate_exponents(p + n, d)
    target = enumerate_exponents(p_target + n, d - 1)
    if max(len(source), len(target)) > max_dim:
        raise GuardExceeded(
            f"matrix dimension {max(len(source), len(target))} exceeds guard {max_dim}"
        )
    target_index = {m: t for t, m in enumerate(target)}
    images: list[int | None] = []
    for vec in source:
        x_part, u_part = vec[:p], vec[p:]
        if any(
            x_part[t] > 0 for t in range(p) if t not in eligible_rank
        ) or vec not in big_image or u_part not in u_image:
            images.append(None)
            continue
        # survivors have x-degree 1 at an eligible position and u-degree d-1
        lowered = decrement_last(vec)
        new_x = [0] * p_target
        for t in eligible:
            if x_part[t]:
                new_x[eligible_rank[t]] = x_part[t]
        images.append(target_index[tuple(new_x) + lowered[p:]])
    return _unit_matrix_from_images(images, len(target))


def full_perazzo_locus_dimension(n: int, d: int) -> int:
    """Dimension of the full Perazzo locus: tau(n, d-1) - 1."""
    if n < 2 or d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    return monomial_count(n, d - 1) - 1


def _map_report(matrix: RationalMatrix, formula_value: int) -> dict:
    computed_rank = rank(matrix)
    kernel_dim = matrix.cols - computed_rank
    return {
        "rows": matrix.rows,
        "cols": matrix.cols,
        "rank": computed_rank,
        "kernel_dim": kernel_dim,
        "surjective": computed_rank == matrix.rows,
        "published_kernel_formula": formula_value,
        "formula_matches": kernel_dim == formula_value,
    }


def projection_map_report(
    n: int,
    d: int,
    max_dim: int = DEFAULT_MATRIX_GUARD,
) -> dict:
    """Computed kernel dimensions of both projection maps next to the
    published closed-form values.  Mismatches are reported, never repaired."""
    report = {
        "u_elimination": _map_report(
            u_elimination_matrix(n, d, max_dim=max_dim),
            monomial_count(n, d - 1) - monomial_count(n - 1, d - 1) + 1,
        )
    }
    if d >= 3:
        report["degree_step"] = _map_report(
            degree_step_matrix(n, d, max_dim=max_dim),
            monomial_count(n, d - 1) - monomial_count(n, d - 2),
        )
    return report
