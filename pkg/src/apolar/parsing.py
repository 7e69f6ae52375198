"""Text grammar for homogeneous polynomials.

Terms are separated by ``+``/``-``; a term is an optional integer or
rational coefficient followed by ``^``-powered variables joined with ``*``
(the ``*`` between a coefficient and the first variable may be omitted).
Variables are positional: ``x1 .. xp`` name the leading block and
``u1 .. um`` the trailing block when a u-block size is given.

Printing uses the same grammar, highest term first, so parsing a printed
polynomial always gives back the original.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .polynomials import GradedPolynomial, graded_polynomial

_TOKEN = re.compile(
    r"\s*(?:(?P<number>\d+)|(?P<name>[xu]\d+)|(?P<op>[-+*^/]))"
)


class PolynomialSyntaxError(ValueError):
    """Malformed polynomial text; ``position`` is the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise PolynomialSyntaxError(
                f"unexpected character {stripped[0]!r}", len(text) - len(stripped)
            )
        if m.lastgroup == "number":
            tokens.append(("number", m.group("number"), m.start("number")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, num_vars: int, num_u_vars: int):
        self.text = text
        self.tokens = _tokenize(text)
        self.idx = 0
        self.num_vars = num_vars
        self.x_count = num_vars - num_u_vars

    def _peek(self):
        return self.tokens[self.idx] if self.idx < len(self.tokens) else None

    def _next(self):
        tok = self._peek()
        if tok is not None:
            self.idx += 1
        return tok

    def _fail(self, message: str):
        tok = self._peek()
        position = tok[2] if tok else len(self.text)
        raise PolynomialSyntaxError(message, position)

    def _variable_index(self, name: str, position: int) -> int:
        block, number = name[0], int(name[1:])
        if number < 1:
            raise PolynomialSyntaxError(f"variable {name!r} is not positive", position)
        if block == "x":
            index = number - 1
            if index >= self.x_count:
                raise PolynomialSyntaxError(
                    f"unknown variable {name!r}: only {self.x_count} x-variables",
                    position,
                )
        else:
            index = self.x_count + number - 1
            if self.x_count + number > self.num_vars or self.x_count == self.num_vars:
                raise PolynomialSyntaxError(
                    f"unknown variable {name!r}: no u-block of that size", position
                )
        return index

    def _number(self) -> int:
        tok = self._next()
        if tok is None or tok[0] != "number":
            self._fail("expected a number")
        return int(tok[1])

    def _coefficient(self) -> Fraction:
        value = Fraction(self._number())
        tok = self._peek()
        if tok is not None and tok[:2] == ("op", "/"):
            self._next()
            denominator = self._number()
            if denominator == 0:
                self._fail("zero denominator")
            value /= denominator
        return value

    def _factor(self, exps: list[int]):
        tok = self._next()
        index = self._variable_index(tok[1], tok[2])
        power = 1
        nxt = self._peek()
        if nxt is not None and nxt[:2] == ("op", "^"):
            self._next()
            power = self._number()
        exps[index] += power

    def _term(self):
        coeff = None
        exps = [0] * self.num_vars
        tok = self._peek()
        if tok is None:
            self._fail("expected a term")
        if tok[0] == "number":
            coeff = self._coefficient()
            nxt = self._peek()
            if nxt is not None and nxt[:2] == ("op", "*"):
                self._next()
                if self._peek() is None or self._peek()[0] != "name":
                    self._fail("expected a variable after '*'")
        has_factor = False
        if self._peek() is not None and self._peek()[0] == "name":
            has_factor = True
            self._factor(exps)
            while self._peek() is not None and self._peek()[:2] == ("op", "*"):
                self._next()
                if self._peek() is None or self._peek()[0] != "name":
                    self._fail("expected a variable after '*'")
                self._factor(exps)
        if coeff is None and not has_factor:
            self._fail("expected a term")
        return Fraction(1) if coeff is None else coeff, tuple(exps)

    def parse(self) -> dict:
        terms: dict[tuple, Fraction] = {}
        sign = 1
        tok = self._peek()
        if tok is not None and tok[:2] in (("op", "+"), ("op", "-")):
            self._next()
            sign = -1 if tok[1] == "-" else 1
        while True:
            coeff, exps = self._term()
            value = terms.get(exps, Fraction(0)) + sign * coeff
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
            tok = self._next()
            if tok is None:
                break
            if tok[:2] == ("op", "+"):
                sign = 1
            elif tok[:2] == ("op", "-"):
                sign = -1
            else:
                raise PolynomialSyntaxError(
                    f"expected '+' or '-', found {tok[1]!r}", tok[2]
                )
        return terms


def parse_polynomial(text: str, num_vars: int, num_u_vars: int = 0) -> GradedPolynomial:
    """Parse a homogeneous polynomial; like terms are combined, zero terms
    dropped, and the zero polynomial and inhomogeneous input rejected."""
    if num_vars < 1:
        raise ValueError("need at least one variable")
    if not 0 <= num_u_vars <= num_vars:
        raise ValueError("u-block size out of range")
    terms = _Parser(text, num_vars, num_u_vars).parse()
    if not terms:
        raise ValueError("zero polynomial")
    return graded_polynomial(num_vars, terms)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def variable_name(index: int, num_vars: int, num_u_vars: int = 0, operator: bool = False) -> str:
    x_count = num_vars - num_u_vars
    if index < x_count:
        name = f"x{index + 1}"
    else:
        name = f"u{index - x_count + 1}"
    return name.upper() if operator else name


def format_monomial(
    exps,
    num_u_vars: int = 0,
    operator: bool = False,
) -> str:
    parts = []
    for index, power in enumerate(exps):
        if power == 0:
            continue
        name = variable_name(index, len(exps), num_u_vars, operator)
        parts.append(name if power == 1 else f"{name}^{power}")
    return "*".join(parts) if parts else "1"


def format_polynomial(
    f: GradedPolynomial,
    num_u_vars: int = 0,
    operator: bool = False,
) -> str:
    """Render with the highest term first; ``parse_polynomial`` inverts this."""
    if f.is_zero():
        return "0"
    pieces = []
    for exps in sorted(f.terms, reverse=True):
        coeff = f.terms[exps]
        mono = format_monomial(exps, num_u_vars, operator)
        magnitude = abs(coeff)
        if mono == "1":
            body = format_rational(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{format_rational(magnitude)}*{mono}"
        pieces.append(("-" if coeff < 0 else "+", body))
    sign, body = pieces[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
