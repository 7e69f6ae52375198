"""Graded polynomials, the apolarity pairing, catalecticants and Hilbert vectors.

A homogeneous polynomial is a finite map from exponent tuples to nonzero
rationals.  Differential operators live in the dual variables and are stored
with the same type; which ring a value belongs to is determined by use.

Two monomial pairing rules are supported:

* ``DUAL_BASIS`` (the default): a degree-a operator monomial sends ``x^b`` to
  ``x^(b-a)`` when ``a <= b`` coordinatewise and to zero otherwise, so the
  equal-degree pairing of monomial bases is the Kronecker delta.
* ``DIFFERENTIATION``: honest partial derivatives, which multiply by the
  falling factorials ``prod b_i! / (b_i - a_i)!``.

Annihilator dimensions agree between the two conventions for generic
coefficients, but not for every polynomial: coefficient patterns aligned with
the basis (for example all-ones coefficients) can gain dual-basis relations
that differentiation does not see.  The default is pinned to ``DUAL_BASIS``,
under which the coefficient-one combinatorics of this package is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .linalg import RationalMatrix, kernel_basis, rank
from .monomials import ExponentVector, enumerate_exponents, monomial_count

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PairingConvention(Enum):
    DUAL_BASIS = "dual"
    DIFFERENTIATION = "diff"


DUAL_BASIS = PairingConvention.DUAL_BASIS
DIFFERENTIATION = PairingConvention.DIFFERENTIATION


@dataclass(frozen=True, eq=True)
class GradedPolynomial:
    """Homogeneous polynomial: ``terms`` maps exponent tuples to nonzero
    rationals.  An empty map is the zero polynomial of the given graded slot."""

    num_vars: int
    degree: int
    terms: dict

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> tuple[ExponentVector, ...]:
        return tuple(sorted(self.terms))

    def coefficient(self, exps: ExponentVector) -> Fraction:
        return self.terms.get(tuple(exps), _ZERO)

    def is_coefficient_one(self) -> bool:
        return all(c == 1 for c in self.terms.values())

    def scaled(self, factor) -> "GradedPolynomial":
        factor = Fraction(factor)
        if factor == 0:
            return GradedPolynomial(self.num_vars, self.degree, {})
        return GradedPolynomial(
            self.num_vars, self.degree, {e: c * factor for e, c in self.terms.items()}
        )


def graded_polynomial(num_vars: int, terms: Mapping) -> GradedPolynomial:
    """Validating constructor: enforces homogeneity and drops zero coefficients.

    Rejects the zero polynomial; intermediate zero results are produced only
    by :func:`contract` and friends.
    """
    if num_vars < 1:
        raise ValueError("need at least one variable")
    cleaned: dict[ExponentVector, Fraction] = {}
    for exps, coeff in terms.items():
        key = tuple(int(e) for e in exps)
        if len(key) != num_vars:
            raise ValueError(f"exponent vector {key} has wrong length")
        if any(e < 0 for e in key):
            raise ValueError(f"negative exponent in {key}")
        value = cleaned.get(key, _ZERO) + Fraction(coeff)
        if value:
            cleaned[key] = value
        else:
            cleaned.pop(key, None)
    if not cleaned:
        raise ValueError("zero polynomial")
    degrees = {sum(e) for e in cleaned}
    if len(degrees) != 1:
        raise ValueError(f"inhomogeneous support: degrees {sorted(degrees)}")
    return GradedPolynomial(num_vars, degrees.pop(), cleaned)


def monomial_poly(num_vars: int, exps: ExponentVector) -> GradedPolynomial:
    return graded_polynomial(num_vars, {tuple(exps): 1})


def coefficient_one_poly(num_vars: int, support: Iterable[ExponentVector]) -> GradedPolynomial:
    return graded_polynomial(num_vars, {tuple(e): 1 for e in support})


def _falling(b: int, a: int) -> int:
    out = 1
    for t in range(a):
        out *= b - t
    return out


def _pair_coefficient(op_exps, target_exps, convention: PairingConvention) -> Optional[Fraction]:
    """Coefficient of x^(target - op) in op(x^target), or None when it dies."""
    if any(o > t for o, t in zip(op_exps, target_exps)):
        return None
    if convention is DUAL_BASIS:
        return _ONE
    c = 1
    for o, t in zip(op_exps, target_exps):
        c *= _falling(t, o)
    return Fraction(c)


def contract(
    op: GradedPolynomial,
    f: GradedPolynomial,
    convention: PairingConvention = DUAL_BASIS,
) -> GradedPolynomial:
    """Apply the operator to the polynomial; bilinear extension of the
    monomial rule of the convention.  The result may be zero."""
    if op.num_vars != f.num_vars:
        raise ValueError("operator and polynomial have different variable counts")
    if op.degree > f.degree:
        raise ValueError("operator degree exceeds polynomial degree")
    out: dict[ExponentVector, Fraction] = {}
    for a, ca in op.terms.items():
        for b, cb in f.terms.items():
            scale = _pair_coefficient(a, b, convention)
            if scale is None:
                continue
            r = tuple(bi - ai for ai, bi in zip(a, b))
            value = out.get(r, _ZERO) + ca * cb * scale
            if value:
                out[r] = value
            else:
                out.pop(r, None)
    return GradedPolynomial(f.num_vars, f.degree - op.degree, out)


def catalecticant_matrix(
    f: GradedPolynomial,
    j: int,
    convention: PairingConvention = DUAL_BASIS,
) -> RationalMatrix:
    """Matrix of "apply to f" from degree-j operators to degree-(d-j) polynomials.

    Rows are indexed by the degree-(d-j) basis, columns by the degree-j basis,
    both in the pinned ascending lex order.
    """
    if not 0 <= j <= f.degree:
        raise ValueError(f"degree {j} outside 0..{f.degree}")
    n = f.num_vars
    row_basis = enumerate_exponents(n, f.degree - j)
    col_basis = enumerate_exponents(n, j)
    flat: list[Fraction] = []
    for r in row_basis:
        for c in col_basis:
            target = tuple(ri + ci for ri, ci in zip(r, c))
            coeff = f.terms.get(target)
            if coeff is None:
                flat.append(_ZERO)
                continue
            scale = _pair_coefficient(c, target, convention)
            flat.append(coeff * scale)
    return RationalMatrix(len(row_basis), len(col_basis), tuple(flat))


def annihilator_dimension(
    f: GradedPolynomial,
    j: int,
    convention: PairingConvention = DUAL_BASIS,
) -> int:
    """Dimension of the degree-j slice of the annihilator ideal of ``f``.

    Beyond the degree of ``f`` every operator annihilates.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if j < 0:
        raise ValueError("degree must be nonnegative")
    if j > f.degree:
        return monomial_count(f.num_vars, j)
    m = catalecticant_matrix(f, j, convention)
    return m.cols - rank(m)


def annihilator_basis(
    f: GradedPolynomial,
    j: int,
    convention: PairingConvention = DUAL_BASIS,
) -> list[GradedPolynomial]:
    """Canonical basis of the degree-j annihilator slice, as operator
    polynomials over the pinned lex basis.  Deterministic."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    m = catalecticant_matrix(f, j, convention)
    col_basis = enumerate_exponents(f.num_vars, j)
    out = []
    for vec in kernel_basis(m):
        terms = {col_basis[t]: vec[t] for t in range(len(vec)) if vec[t]}
        out.append(GradedPolynomial(f.num_vars, j, terms))
    return out


def hilbert_vector(
    f: GradedPolynomial,
    convention: PairingConvention = DUAL_BASIS,
) -> tuple[int, ...]:
    """Dimensions of the graded quotient algebra, degree by degree.

    Each entry is computed from its own catalecticant; the symmetry of the
    result is a theorem, not an assumption, and the test suite checks it.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    n = f.num_vars
    return tuple(
        monomial_count(n, j) - annihilator_dimension(f, j, convention)
        for j in range(f.degree + 1)
    )


def is_standard(
    f: GradedPolynomial,
    convention: PairingConvention = DUAL_BASIS,
) -> bool:
    """True when no nonzero degree-1 operator annihilates ``f``."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    return annihilator_dimension(f, 1, convention) == 0


class HilbertOrder(Enum):
    LESS_EQ = "LESS_EQ"
    GREATER_EQ = "GREATER_EQ"
    EQUAL = "EQUAL"
    INCOMPARABLE = "INCOMPARABLE"


def compare_hilbert(a: tuple[int, ...], b: tuple[int, ...]) -> HilbertOrder:
    """Coordinatewise comparison over all entries.

    Vectors of different lengths (different socle degrees) are rejected;
    ``LESS_EQ`` and ``GREATER_EQ`` are strict dominations, ``EQUAL`` requires
    identity.
    """
    if len(a) != len(b):
        raise ValueError("Hilbert vectors of different lengths are incomparable")
    if tuple(a) == tuple(b):
        return HilbertOrder.EQUAL
    if all(x <= y for x, y in zip(a, b)):
        return HilbertOrder.LESS_EQ
    if all(x >= y for x, y in zip(a, b)):
        return HilbertOrder.GREATER_EQ
    return HilbertOrder.INCOMPARABLE
