"""Perazzo polynomials, their Hilbert vectors, and minimality sampling.

A Perazzo polynomial of degree d is bihomogeneous of bidegree (1, d-1): a sum
of x-variables each multiplied by a distinct degree-(d-1) monomial in the
u-variables.  In the full case the u-monomials run over the entire monomial
basis, so there are tau(n, d-1) x-variables.  Variables are always ordered
x-block first, then u-block, and the u-monomial basis is the pinned lex
order.

The sampling harness draws random polynomials of the matching codimension
and socle degree and compares their Hilbert vectors against the full Perazzo
one.  A strict violator (a vector coordinatewise below and not equal) would
falsify minimality; the harness makes such an event loud and reproducible
from the seed, never impossible by construction.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import GuardExceeded
from .monomials import ExponentVector, enumerate_exponents, monomial_count
from .parsing import format_monomial
from .polynomials import (
    DUAL_BASIS,
    GradedPolynomial,
    HilbertOrder,
    PairingConvention,
    annihilator_dimension,
    compare_hilbert,
    contract,
    graded_polynomial,
    hilbert_vector,
    is_standard,
    monomial_poly,
)
from .rng import substream

DEFAULT_MATRIX_GUARD = 20000
RESAMPLE_CAP = 50


@dataclass(frozen=True)
class PerazzoSpec:
    """Parameters of a Perazzo polynomial.

    ``n`` counts the u-variables, ``d`` is the socle degree.  ``m_choice``
    selects the u-monomials of a non-full Perazzo polynomial; when absent the
    polynomial is full and uses the whole degree-(d-1) basis.
    """

    n: int
    d: int
    m_choice: Optional[tuple] = None

    def u_monomials(self) -> tuple[ExponentVector, ...]:
        if self.m_choice is None:
            return enumerate_exponents(self.n, self.d - 1)
        chosen = sorted(tuple(m) for m in self.m_choice)
        if len(set(chosen)) != len(chosen):
            raise ValueError("duplicate u-monomials")
        if any(len(m) != self.n or sum(m) != self.d - 1 for m in chosen):
            raise ValueError("u-monomials must have the declared arity and degree")
        return tuple(chosen)


def build_perazzo(spec: PerazzoSpec) -> GradedPolynomial:
    """Coefficient-one Perazzo polynomial in x-block-then-u-block variables."""
    if spec.n < 2 or spec.d < 2:
        raise ValueError("need n >= 2 and d >= 2")
    monomials = spec.u_monomials()
    p = len(monomials)
    if p < 1:
        raise ValueError("need at least one u-monomial")
    terms = {}
    for i, m in enumerate(monomials):
        x_part = tuple(1 if t == i else 0 for t in range(p))
        terms[x_part + m] = 1
    return graded_polynomial(p + spec.n, terms)


def build_full_perazzo(n: int, d: int) -> GradedPolynomial:
    return build_perazzo(PerazzoSpec(n, d))


def is_bihomogeneous(f: GradedPolynomial, x_count: int) -> Optional[tuple[int, int]]:
    """Bidegree of ``f`` under the prefix split into ``x_count`` x-variables
    and the remaining u-variables, or ``None`` when terms disagree."""
    if not 0 <= x_count <= f.num_vars:
        raise ValueError("split out of range")
    bidegrees = {
        (sum(e[:x_count]), sum(e[x_count:])) for e in f.terms
    }
    if len(bidegrees) == 1:
        return bidegrees.pop()
    return None


def full_perazzo_hilbert(
    n: int,
    d: int,
    convention: PairingConvention = DUAL_BASIS,
    max_dim: int = DEFAULT_MATRIX_GUARD,
) -> tuple[int, ...]:
    f = build_full_perazzo(n, d)
    _guard_catalecticants(f.num_vars, d, max_dim)
    return hilbert_vector(f, convention)


def _guard_catalecticants(num_vars: int, d: int, max_dim: int) -> None:
    biggest = max(monomial_count(num_vars, j) for j in range(d + 1))
    if biggest > max_dim:
        raise GuardExceeded(
            f"catalecticant dimension {biggest} exceeds guard {max_dim}"
        )


@dataclass(frozen=True)
class Degree2Census:
    """Classification of a canonical degree-2 annihilator basis.

    Greedy and deterministic: first every annihilating monomial, then
    independent sign-pattern binomials, the remainder is "other"; the three
    counts always add up to the full degree-2 annihilator dimension.
    """

    monomial_count: int
    binomial_count: int
    other_count: int
    total_dim: int

    def as_dict(self) -> dict:
        return {
            "monomial_count": self.monomial_count,
            "binomial_count": self.binomial_count,
            "other_count": self.other_count,
            "total_dim": self.total_dim,
        }


def degree2_census(f: GradedPolynomial) -> Degree2Census:
    """Count monomial, binomial and leftover generators of the degree-2
    annihilator slice.

    Monomials annihilating ``f`` are independent basis vectors; binomials
    (+1/-1 differences of distinct non-annihilating monomials with equal
    image) contribute one less than each equal-image class size; whatever
    dimension remains is classified as other.
    """
    if f.degree < 2:
        raise ValueError("degree-2 census needs socle degree at least 2")
    n = f.num_vars
    total = annihilator_dimension(f, 2, DUAL_BASIS)
    killed = 0
    image_classes: dict[tuple, int] = {}
    for m in enumerate_exponents(n, 2):
        image = contract(monomial_poly(n, m), f, DUAL_BASIS)
        if image.is_zero():
            killed += 1
            continue
        key = tuple(sorted(image.terms.items()))
        image_classes[key] = image_classes.get(key, 0) + 1
    binomials = sum(size - 1 for size in image_classes.values())
    other = total - killed - binomials
    return Degree2Census(killed, binomials, other, total)


def hilbert_h2(f: GradedPolynomial) -> int:
    """Second Hilbert entry: dim of degree-2 operators minus the annihilator."""
    if f.degree < 2:
        raise ValueError("needs socle degree at least 2")
    return monomial_count(f.num_vars, 2) - annihilator_dimension(f, 2, DUAL_BASIS)


def _draw_polynomial(rng, basis, num_vars: int) -> Optional[GradedPolynomial]:
    """One sampling attempt: each basis monomial kept with probability 1/2
    (one coin per monomial, in lex order), then uniform nonzero coefficients
    in [-9, 9] over the chosen support (again in lex order)."""
    support = [m for m in basis if rng.coin()]
    if not support:
        return None
    terms = {m: Fraction(rng.nonzero_int(9)) for m in support}
    return graded_polynomial(num_vars, terms)


def _standard_draw(seed: int, trial: int, basis, num_vars: int) -> Optional[GradedPolynomial]:
    rng = substream(seed, trial)
    for _ in range(RESAMPLE_CAP):
        f = _draw_polynomial(rng, basis, num_vars)
        if f is not None and is_standard(f):
            return f
    return None


def _format_exponents(exps: ExponentVector) -> str:
    return format_monomial(exps)


def _conjecture_trial(args) -> dict:
    seed, trial, num_vars, d, reference = args
    basis = enumerate_exponents(num_vars, d)
    f = _standard_draw(seed, trial, basis, num_vars)
    if f is None:
        return {"trial": trial, "verdict": "SKIPPED"}
    h = hilbert_vector(f)
    verdict = compare_hilbert(h, reference)
    out = {"trial": trial, "verdict": verdict.value}
    if verdict is HilbertOrder.LESS_EQ:
        out["violator"] = {
            "hilbert": list(h),
            "coefficients": [
                [_format_exponents(e), str(c)] for e, c in sorted(f.terms.items())
            ],
        }
    return out


def conjecture_sample_check(
    n: int,
    d: int,
    trials: int,
    seed: int,
    jobs: int = 1,
    max_dim: int = DEFAULT_MATRIX_GUARD,
) -> dict:
    """Randomized minimality stress test for the full Perazzo Hilbert vector.

    Draws standard polynomials of the matching codimension and socle degree
    and tallies their Hilbert vectors against the full Perazzo one.  The
    report is a stable JSON-ready dict: byte-identical for identical inputs,
    regardless of ``jobs``.
    """
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    num_vars = n + monomial_count(n, d - 1)
    _guard_catalecticants(num_vars, d, max_dim)
    reference = full_perazzo_hilbert(n, d, max_dim=max_dim)
    work = [(seed, t, num_vars, d, reference) for t in range(trials)]
    if jobs > 1 and trials > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_conjecture_trial, work, chunksize=16))
    else:
        results = [_conjecture_trial(w) for w in work]
    tallies = {order.value: 0 for order in HilbertOrder}
    skipped = 0
    violators = []
    for result in results:
        if result["verdict"] == "SKIPPED":
            skipped += 1
            continue
        tallies[result["verdict"]] += 1
        if "violator" in result:
            violators.append({"trial": result["trial"], **result["violator"]})
    return {
        "n": n,
        "d": d,
        "codimension": num_vars,
        "socle_degree": d,
        "seed": seed,
        "trials": trials,
        "skipped_trials": skipped,
        "hilbert_full_perazzo": list(reference),
        "tallies": tallies,
        "violators": violators,
    }


def coefficient_one_minimality_check(
    support,
    num_vars: int,
    trials: int,
    seed: int,
) -> dict:
    """Compare the coefficient-one Hilbert vector on a support against random
    nonzero coefficient assignments on the same support.

    The coefficient-one vector should never dominate a random one; any
    counterexample is reported with full reproduction data.  Coefficients are
    drawn like the conjecture harness: uniform nonzero integers in [-9, 9],
    one per support monomial in lex order, from the per-trial substream.
    """
    support = sorted(tuple(m) for m in support)
    if not support:
        raise ValueError("empty support")
    ones = graded_polynomial(num_vars, {m: 1 for m in support})
    h_ones = hilbert_vector(ones)
    verdicts = []
    counterexamples = []
    for trial in range(trials):
        rng = substream(seed, trial)
        terms = {m: Fraction(rng.nonzero_int(9)) for m in support}
        h_random = hilbert_vector(graded_polynomial(num_vars, terms))
        verdict = compare_hilbert(h_ones, h_random)
        verdicts.append(verdict.value)
        if verdict not in (HilbertOrder.LESS_EQ, HilbertOrder.EQUAL):
            counterexamples.append(
                {
                    "trial": trial,
                    "hilbert": list(h_random),
                    "coefficients": [
                        [_format_exponents(e), str(c)]
                        for e, c in sorted(terms.items())
                    ],
                }
            )
    return {
        "support": [_format_exponents(m) for m in support],
        "num_vars": num_vars,
        "standard": is_standard(ones),
        "hilbert_ones": list(h_ones),
        "seed": seed,
        "trials": trials,
        "verdicts": verdicts,
        "counterexamples": counterexamples,
    }
