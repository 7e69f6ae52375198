"""Structured annihilator generators for coefficient-one polynomials.

For a polynomial with all coefficients equal to one, the annihilator ideal is
generated by three structured families:

* top powers of the dual variables (one degree above the socle degree),
* minimal non-face monomials of the divisor-closure complex,
* differences of coefficient-one operator polynomials with equal image.

``extract_generators`` emits these families degree by degree, pruning every
candidate that already lies in the ideal generated so far, so the output is
non-redundant and deterministic.  ``verify_generators`` checks degree-wise
against the linear-algebra kernel that a generator set really generates the
whole annihilator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import complex_of, minimal_nonfaces
from .errors import GuardExceeded
from .monomials import ExponentVector, enumerate_exponents, monomial_count
from .polynomials import (
    DUAL_BASIS,
    GradedPolynomial,
    annihilator_dimension,
    contract,
    graded_polynomial,
    monomial_poly,
)

_ZERO = Fraction(0)


@dataclass
class GeneratorSet:
    """Degree-structured generators of an annihilator ideal.

    ``powers`` holds (variable index, exponent) pairs, 1-based; nonface
    monomials and difference pairs are grouped by degree.
    """

    num_vars: int
    socle_degree: int
    powers: frozenset
    nonface_monomials: dict
    differences: dict

    def polynomials(self) -> list[tuple[int, GradedPolynomial]]:
        """All generators as (degree, operator polynomial), deterministic order."""
        out: list[tuple[int, GradedPolynomial]] = []
        for j in sorted(self.nonface_monomials):
            for m in sorted(self.nonface_monomials[j]):
                out.append((j, monomial_poly(self.num_vars, m)))
        for j in sorted(self.differences):
            for p1, p2 in self.differences[j]:
                out.append((j, _difference(p1, p2)))
        for k, e in sorted(self.powers):
            exps = tuple(e if t == k - 1 else 0 for t in range(self.num_vars))
            out.append((e, monomial_poly(self.num_vars, exps)))
        return out


def _difference(p1: GradedPolynomial, p2: GradedPolynomial) -> GradedPolynomial:
    terms = dict(p1.terms)
    for e, c in p2.terms.items():
        value = terms.get(e, _ZERO) - c
        if value:
            terms[e] = value
        else:
            terms.pop(e, None)
    return graded_polynomial(p1.num_vars, terms)


class _Span:
    """Incremental row space over a fixed monomial basis (row echelon form)."""

    def __init__(self, basis: tuple[ExponentVector, ...]):
        self.basis = basis
        self.index = {m: t for t, m in enumerate(basis)}
        self.rows: dict[int, list[Fraction]] = {}

    def _vector(self, poly: GradedPolynomial) -> list[Fraction]:
        v = [_ZERO] * len(self.basis)
        for e, c in poly.terms.items():
            v[self.index[e]] = c
        return v

    def _reduce(self, v: list[Fraction]) -> list[Fraction]:
        for pivot in sorted(self.rows):
            if v[pivot]:
                f = v[pivot]
                row = self.rows[pivot]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, poly: GradedPolynomial) -> bool:
        """Insert unless already in the span; returns True when new."""
        v = self._reduce(self._vector(poly))
        for pivot, value in enumerate(v):
            if value:
                new_row = [x / value for x in v]
                # keep rows mutually reduced so _reduce terminates in one pass
                for other_pivot, row in self.rows.items():
                    if row[pivot]:
                        f = row[pivot]
                        self.rows[other_pivot] = [
                            a - f * b for a, b in zip(row, new_row)
                        ]
                self.rows[pivot] = new_row
                return True
        return False

    def contains(self, poly: GradedPolynomial) -> bool:
        return not any(self._reduce(self._vector(poly)))

    @property
    def dimension(self) -> int:
        return len(self.rows)


def _shift(poly: GradedPolynomial, exps: ExponentVector) -> GradedPolynomial:
    """Multiply an operator polynomial by a monomial."""
    terms = {
        tuple(a + b for a, b in zip(e, exps)): c for e, c in poly.terms.items()
    }
    return GradedPolynomial(poly.num_vars, poly.degree + sum(exps), terms)


def _ideal_span(
    generators: list[tuple[int, GradedPolynomial]],
    n: int,
    j: int,
) -> _Span:
    """Span of all degree-j monomial multiples of the given generators."""
    span = _Span(enumerate_exponents(n, j))
    for degree, poly in generators:
        if degree > j:
            continue
        for m in enumerate_exponents(n, j - degree):
            span.add(_shift(poly, m))
    return span


def contraction_image_classes(
    f: GradedPolynomial,
    j: int,
    max_subsets: int = 1 << 16,
) -> list[list[tuple[ExponentVector, ...]]]:
    """Partition of coefficient-one degree-j operator polynomials by image.

    Polynomials are identified with their supports (nonempty subsets of the
    monomials that do not annihilate ``f``); two belong to the same class
    exactly when they contract ``f`` to the same polynomial.  Classes and
    members come back sorted, so the result is deterministic.
    """
    if not 1 <= j <= f.degree:
        raise ValueError(f"degree {j} outside 1..{f.degree}")
    n = f.num_vars
    target = enumerate_exponents(n, f.degree - j)
    target_index = {m: t for t, m in enumerate(target)}
    cells = []
    images = []
    for m in enumerate_exponents(n, j):
        image = contract(monomial_poly(n, m), f)
        if image.is_zero():
            continue
        vec = [_ZERO] * len(target)
        for e, c in image.terms.items():
            vec[target_index[e]] = c
        cells.append(m)
        images.append(vec)
    count = len(cells)
    if count and (1 << count) > max_subsets:
        raise GuardExceeded(
            f"{count} non-annihilating monomials: 2^{count} subsets exceed the "
            f"guard of {max_subsets}; raise max_subsets to override"
        )
    groups: dict[tuple, list[int]] = {}
    running = [_ZERO] * len(target)
    gray = 0
    for i in range(1, 1 << count):
        bit = (i & -i).bit_length() - 1
        gray ^= 1 << bit
        sign = 1 if gray & (1 << bit) else -1
        vec = images[bit]
        for t in range(len(target)):
            if vec[t]:
                running[t] += vec[t] if sign > 0 else -vec[t]
        groups.setdefault(tuple(running), []).append(gray)
    classes = []
    for masks in groups.values():
        supports = sorted(
            tuple(cells[b] for b in range(count) if mask >> b & 1)
            for mask in masks
        )
        classes.append(supports)
    classes.sort(key=lambda cls: cls[0])
    return classes


def extract_generators(
    f: GradedPolynomial,
    max_difference_degree: int | None = None,
    max_subsets: int = 1 << 16,
) -> GeneratorSet:
    """Structured generator extraction for a coefficient-one polynomial.

    Candidates are processed in a fixed order (non-faces by degree, then
    consecutive-pair differences within each equal-image class, then top
    powers) and kept only when outside the ideal generated so far.  By
    default differences are searched in every degree up to the socle degree;
    ``max_difference_degree`` caps the search at the caller's risk, in which
    case :func:`verify_generators` reports whether the capped set still
    generates.
    """
    if not f.is_coefficient_one():
        raise ValueError("generator extraction requires all coefficients equal to 1")
    n, d = f.num_vars, f.degree
    cap = d if max_difference_degree is None else min(max_difference_degree, d)
    zeta = complex_of(f)
    kept: list[tuple[int, GradedPolynomial]] = []
    nonfaces: dict[int, frozenset] = {}
    differences: dict[int, tuple] = {}
    for j in range(1, d + 1):
        nf = minimal_nonfaces(zeta, j)
        if nf:
            nonfaces[j] = frozenset(nf)
        span = _ideal_span(kept, n, j)
        for m in nf:
            poly = monomial_poly(n, m)
            span.add(poly)
            kept.append((j, poly))
        if j > cap:
            continue
        pairs = []
        for cls in contraction_image_classes(f, j, max_subsets=max_subsets):
            if len(cls) < 2:
                continue
            for left, right in zip(cls, cls[1:]):
                p1 = graded_polynomial(n, {e: 1 for e in left})
                p2 = graded_polynomial(n, {e: 1 for e in right})
                diff = _difference(p1, p2)
                if span.add(diff):
                    pairs.append((p1, p2))
                    kept.append((j, diff))
        if pairs:
            differences[j] = tuple(pairs)
    top_span = _ideal_span(kept, n, d + 1)
    powers = set()
    for k in range(1, n + 1):
        exps = tuple(d + 1 if t == k - 1 else 0 for t in range(n))
        poly = monomial_poly(n, exps)
        if top_span.add(poly):
            powers.add((k, d + 1))
            kept.append((d + 1, poly))
    return GeneratorSet(n, d, frozenset(powers), nonfaces, differences)


def verify_generators(f: GradedPolynomial, gens: GeneratorSet) -> bool:
    """Degree-wise check that the generator set generates the annihilator.

    For every degree up to one above the socle degree, the span of all
    monomial multiples of the generators must equal the kernel of the
    corresponding catalecticant (the full operator space at the top).  Every
    generator must itself annihilate ``f``.
    """
    n, d = f.num_vars, f.degree
    generators = gens.polynomials()
    for degree, poly in generators:
        if degree <= d and not contract(poly, f, DUAL_BASIS).is_zero():
            return False
    for j in range(1, d + 2):
        span = _ideal_span(generators, n, j)
        expected = (
            annihilator_dimension(f, j, DUAL_BASIS)
            if j <= d
            else monomial_count(n, j)
        )
        if span.dimension != expected:
            return False
    return True
