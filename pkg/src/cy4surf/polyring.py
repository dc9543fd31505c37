"""Homogeneous polynomials in x0, ..., xN over an exact field.

Monomials are exponent tuples. Within a fixed degree they are ordered by
graded reverse lexicographic order with x0 > x1 > ... > xN, which is the
order :func:`monomial_basis` returns and the column order of every matrix
built from a degree piece.
"""
from __future__ import annotations

import re
from functools import lru_cache
from math import comb

from .errors import (
    BasisMismatch,
    FieldMismatch,
    NotHomogeneous,
    ParseError,
    VariableCountMismatch,
)
from .fields import ExtensionField, Field


def grevlex_key(mono):
    """Sort key: ``sorted(monos, key=grevlex_key)`` lists a degree piece from largest to smallest."""
    return tuple(reversed(mono))


def _compositions(n_vars, degree):
    if n_vars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _compositions(n_vars - 1, degree - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomial_basis(n_vars: int, degree: int) -> tuple:
    """All monomials of the given degree, largest first in grevlex."""
    if n_vars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        return ()
    return tuple(sorted(_compositions(n_vars, degree), key=grevlex_key))


@lru_cache(maxsize=None)
def monomial_index(n_vars: int, degree: int) -> dict:
    return {m: i for i, m in enumerate(monomial_basis(n_vars, degree))}


def dim_graded_piece(n_vars: int, degree: int) -> int:
    return comb(degree + n_vars - 1, n_vars - 1) if degree >= 0 else 0


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


class HomogeneousPolynomial:
    """A homogeneous form; ``terms`` maps exponent tuples to nonzero coefficients.

    Instances are treated as immutable.
    """

    __slots__ = ("field", "n_vars", "degree", "terms")

    def __init__(self, field: Field, n_vars: int, degree: int, terms=None):
        self.field = field
        self.n_vars = n_vars
        self.degree = degree
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n_vars:
                raise VariableCountMismatch(f"monomial {mono} has {len(mono)} exponents, expected {n_vars}")
            if sum(mono) != degree:
                raise NotHomogeneous(f"monomial {mono} does not have degree {degree}")
            if not field.is_zero(c):
                clean[mono] = c
        self.terms = dict(sorted(clean.items(), key=lambda kv: grevlex_key(kv[0])))

    # construction -----------------------------------------------------------
    @classmethod
    def zero(cls, field, n_vars, degree):
        return cls(field, n_vars, degree, {})

    @classmethod
    def constant(cls, field, n_vars, value=None):
        value = field.one() if value is None else value
        return cls(field, n_vars, 0, {(0,) * n_vars: value})

    @classmethod
    def monomial(cls, field, exponents, coeff=None):
        exponents = tuple(exponents)
        coeff = field.one() if coeff is None else coeff
        return cls(field, len(exponents), sum(exponents), {exponents: coeff})

    @classmethod
    def variable(cls, field, n_vars, i):
        e = [0] * n_vars
        e[i] = 1
        return cls.monomial(field, e)

    @classmethod
    def from_vector(cls, field, n_vars, degree, vector, basis=None):
        basis = monomial_basis(n_vars, degree) if basis is None else basis
        if len(vector) != len(basis):
            raise BasisMismatch("vector length does not match basis")
        return cls(field, n_vars, degree, dict(zip(basis, vector)))

    @classmethod
    def parse(cls, text, field, n_vars, degree=None):
        """Parse a literal such as ``"x0^6 + x1^6 - 3*z*x2^3 x3^3"``."""
        if isinstance(field, ExtensionField):
            raw = parse_expression(text, field.base, n_vars, allow_z=True)
            collected = {}
            for exps, c in raw.items():
                mono, zpow = exps[:-1], exps[-1]
                coeffs = collected.setdefault(mono, [field.base.zero()] * (zpow + 1))
                if len(coeffs) <= zpow:
                    coeffs.extend([field.base.zero()] * (zpow + 1 - len(coeffs)))
                coeffs[zpow] = field.base.add(coeffs[zpow], c)
            terms = {m: field.reduce(cs) for m, cs in collected.items()}
        else:
            terms = parse_expression(text, field, n_vars, allow_z=False)
        terms = {m: c for m, c in terms.items() if not field.is_zero(c)}
        degrees = {sum(m) for m in terms}
        if len(degrees) > 1:
            raise NotHomogeneous(f"{text!r} mixes degrees {sorted(degrees)}")
        if degrees:
            (d,) = degrees
            if degree is not None and d != degree:
                raise NotHomogeneous(f"{text!r} has degree {d}, expected {degree}")
        elif degree is None:
            raise ParseError(f"zero polynomial {text!r} needs an explicit degree")
        else:
            d = degree
        return cls(field, n_vars, d, terms)

    # queries ------------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPolynomial):
            return NotImplemented
        return (
            self.field == other.field
            and self.n_vars == other.n_vars
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.n_vars, self.degree, frozenset(self.terms.items())))

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), self.field.zero())

    # arithmetic ---------------------------------------------------------------
    def _check_compatible(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.n_vars != other.n_vars:
            raise VariableCountMismatch(f"{self.n_vars} vs {other.n_vars} variables")

    def __add__(self, other):
        self._check_compatible(other)
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise NotHomogeneous(f"cannot add degrees {self.degree} and {other.degree}")
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = F.add(out[m], c) if m in out else c
        return HomogeneousPolynomial(F, self.n_vars, self.degree, out)

    def __neg__(self):
        F = self.field
        return HomogeneousPolynomial(F, self.n_vars, self.degree, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        F = self.field
        return HomogeneousPolynomial(F, self.n_vars, self.degree, {m: F.mul(c, v) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HomogeneousPolynomial):
            return multiply(self, other)
        return self.scale(self.field.coerce(other) if hasattr(self.field, "coerce") else other)

    def __pow__(self, k):
        result = HomogeneousPolynomial.constant(self.field, self.n_vars)
        for _ in range(k):
            result = result * self
        return result

    def coefficient_vector(self, basis=None):
        return coefficient_vector(self, basis)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"HomogeneousPolynomial({self.field}, deg={self.degree}, {format_polynomial(self)!r})"


def multiply(f: HomogeneousPolynomial, g: HomogeneousPolynomial) -> HomogeneousPolynomial:
    f._check_compatible(g)
    F = f.field
    out = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            m = _mono_mul(m1, m2)
            c = F.mul(c1, c2)
            out[m] = F.add(out[m], c) if m in out else c
    return HomogeneousPolynomial(F, f.n_vars, f.degree + g.degree, out)


def coefficient_vector(f: HomogeneousPolynomial, basis=None) -> list:
    """Coefficients of ``f`` against ``basis`` (default: the full grevlex basis of its degree)."""
    if basis is None:
        index = monomial_index(f.n_vars, f.degree)
        size = len(index)
    else:
        index = {m: i for i, m in enumerate(basis)}
        size = len(basis)
    vec = [f.field.zero()] * size
    for m, c in f.terms.items():
        i = index.get(m)
        if i is None:
            raise BasisMismatch(f"monomial {m} is not in the basis")
        vec[i] = c
    return vec


def format_polynomial(f: HomogeneousPolynomial) -> str:
    if f.is_zero():
        return "0"
    F = f.field
    pieces = []
    for mono, c in f.terms.items():
        vars_ = " ".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(mono) if e)
        cs = F.format(c)
        if not vars_:
            pieces.append(cs)
        elif c == F.one():
            pieces.append(vars_)
        else:
            if isinstance(F, ExtensionField) and not cs.startswith("("):
                cs = f"({cs})" if any(ch in cs for ch in "+-") else cs
            pieces.append(f"{cs}*{vars_}")
    return " + ".join(pieces)


# -- literal parser ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|x(?P<var>\d+)|(?P<z>z)|(?P<op>[-+*/^()]))")


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in {text!r}", column=pos + 1)
        col = m.start() + len(m.group(0)) - len(m.group(0).lstrip()) + 1
        if m.group("num") is not None:
            out.append(("num", int(m.group("num")), col))
        elif m.group("var") is not None:
            out.append(("x", int(m.group("var")), col))
        elif m.group("z"):
            out.append(("z", None, col))
        else:
            out.append((m.group("op"), None, col))
        pos = m.end()
    out.append(("end", None, len(text) + 1))
    return out


class _Parser:
    """Recursive descent over sparse dict polynomials {exponents: coeff}."""

    def __init__(self, text, field, n_vars, allow_z):
        self.text = text
        self.F = field
        self.n = n_vars
        self.width = n_vars + (1 if allow_z else 0)
        self.allow_z = allow_z
        self.toks = _tokenize(text)
        self.i = 0

    # dict-polynomial helpers
    def const(self, c):
        return {(0,) * self.width: c} if not self.F.is_zero(c) else {}

    def add(self, a, b, sign=1):
        F = self.F
        out = dict(a)
        for m, c in b.items():
            c = c if sign > 0 else F.neg(c)
            out[m] = F.add(out[m], c) if m in out else c
            if F.is_zero(out[m]):
                del out[m]
        return out

    def mul(self, a, b):
        F = self.F
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = _mono_mul(m1, m2)
                c = F.mul(c1, c2)
                out[m] = F.add(out[m], c) if m in out else c
        return {m: c for m, c in out.items() if not F.is_zero(c)}

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r} in {self.text!r}", column=tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial", column=1)
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[0]!r} in {self.text!r}", column=tok[2])
        return value

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        value = self.add({}, self.term(), sign)
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            value = self.add(value, self.term(), sign)
        return value

    def term(self):
        value = self.power()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                value = self.mul(value, self.power())
            elif kind == "/":
                tok = self.take()
                divisor = self.power()
                zero_mono = (0,) * self.width
                if set(divisor) - {zero_mono} or not divisor:
                    raise ParseError("can only divide by a nonzero constant", column=tok[2])
                inv = self.F.inv(divisor[zero_mono])
                value = {m: self.F.mul(c, inv) for m, c in value.items()}
            elif kind in ("num", "x", "z", "("):
                value = self.mul(value, self.power())
            else:
                return value

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            exp = self.take("num")[1]
            result = self.const(self.F.one())
            for _ in range(exp):
                result = self.mul(result, base)
            return result
        return base

    def atom(self):
        kind, value, col = self.take()
        if kind == "num":
            return self.const(self.F.from_int(value))
        if kind == "x":
            if value >= self.n:
                raise ParseError(f"variable x{value} out of range (ring has {self.n} variables)", column=col)
            e = [0] * self.width
            e[value] = 1
            return {tuple(e): self.F.one()}
        if kind == "z":
            if not self.allow_z:
                raise ParseError("symbol z used but the field has no extension generator", column=col)
            e = [0] * self.width
            e[-1] = 1
            return {tuple(e): self.F.one()}
        if kind == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected {kind!r} in {self.text!r}", column=col)


def parse_expression(text: str, field: Field, n_vars: int, allow_z: bool = False) -> dict:
    """Parse to ``{exponents: coeff}``; with ``allow_z`` the last exponent slot belongs to z."""
    return _Parser(text, field, n_vars, allow_z).parse()
