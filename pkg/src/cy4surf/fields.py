"""Exact coefficient fields: the rationals, prime fields F_p and simple extensions F[z]/(m).

Field elements are plain Python values owned by their field:

* ``Rationals``      -> :class:`fractions.Fraction` in lowest terms
* ``PrimeField(p)``  -> ``int`` in ``[0, p)``
* ``ExtensionField`` -> ``tuple`` of base-field elements of length ``deg m``
  (coefficients of 1, z, z^2, ...)

All arithmetic goes through the field object (``F.add(a, b)``, ``F.inv(a)``, ...).
Keeping elements unboxed keeps the elimination loops in :mod:`cy4surf.linalg` cheap.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .errors import FieldError, NonInvertible, ZeroInversion


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def compatible_prime(minimum: int, modulus: int = 1) -> int:
    """Smallest prime ``p >= minimum`` with ``p = 1 (mod modulus)``."""
    p = max(minimum, 2)
    if modulus > 1:
        p += (1 - p) % modulus
    while not is_prime(p):
        p += modulus if modulus > 1 else 1
    return p


class Field:
    """Common interface; concrete fields override the arithmetic."""

    characteristic: int = 0
    order: int | None = None  # number of elements, None when infinite

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        return self.div(self.from_int(q.numerator), self.from_int(q.denominator))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k: int):
        if k < 0:
            return self.pow(self.inv(a), -k)
        result = self.one()
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def eq(self, a, b) -> bool:
        return a == b

    def elements(self):
        """Iterate over all elements (finite fields only)."""
        raise FieldError(f"{self} is infinite")


@dataclass(frozen=True)
class Rationals(Field):
    characteristic = 0

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def coerce(self, a):
        return Fraction(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroInversion("inverse of 0 in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroInversion("division by 0 in Q")
        return a / b

    def is_zero(self, a):
        return a == 0

    def random(self, rng, bound: int = 100):
        return Fraction(int(rng.integers(-bound, bound + 1)))

    def format(self, a) -> str:
        return str(a)

    def __str__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def characteristic(self):
        return self.p

    @property
    def order(self):
        return self.p

    def from_int(self, n):
        return n % self.p

    def from_fraction(self, q):
        q = Fraction(q)
        if q.denominator % self.p == 0:
            raise ZeroInversion(f"denominator of {q} vanishes mod {self.p}")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def coerce(self, a):
        return int(a) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroInversion(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def pow(self, a, k):
        if k < 0:
            return pow(self.inv(a), -k, self.p)
        return pow(a, k, self.p)

    def is_zero(self, a):
        return a == 0

    def elements(self):
        return iter(range(self.p))

    def random(self, rng, bound=None):
        return int(rng.integers(0, self.p))

    def format(self, a):
        return str(a)

    def __str__(self):
        return f"Fp:{self.p}"


# -- univariate polynomials over a field, coefficient lists low -> high ------


def _trim(F, a):
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def _poly_sub(F, a, b):
    n = max(len(a), len(b))
    za = F.zero()
    return _trim(F, [F.sub(a[i] if i < len(a) else za, b[i] if i < len(b) else za) for i in range(n)])


def _poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(F, out)


def _poly_divmod(F, a, b):
    a = _trim(F, a)
    b = _trim(F, b)
    if not b:
        raise ZeroInversion("polynomial division by zero")
    inv_lead = F.inv(b[-1])
    q = [F.zero()] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        c = F.mul(a[-1], inv_lead)
        q[shift] = c
        a = _poly_sub(F, a, [F.zero()] * shift + [F.mul(c, y) for y in b])
    return _trim(F, q), a


def _poly_gcd(F, a, b):
    a, b = _trim(F, a), _trim(F, b)
    while b:
        a, b = b, _poly_divmod(F, a, b)[1]
    return a


def _poly_powmod(F, a, k, m):
    result = [F.one()]
    a = _poly_divmod(F, a, m)[1]
    while k:
        if k & 1:
            result = _poly_divmod(F, _poly_mul(F, result, a), m)[1]
        a = _poly_divmod(F, _poly_mul(F, a, a), m)[1]
        k >>= 1
    return result


def _rational_roots(coeffs):
    """Rational roots of a polynomial with rational coefficients (low -> high)."""
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    if ints and ints[0] == 0:
        return [Fraction(0)]
    lead, const = abs(ints[-1]), abs(ints[0])
    roots = []
    for p in _divisors(const):
        for q in _divisors(lead):
            for r in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * r**i for i, c in enumerate(ints)) == 0:
                    roots.append(r)
    return roots


def _divisors(n):
    n = abs(n)
    return [d for d in range(1, n + 1) if n % d == 0] if n else [0]


def _quartic_has_quadratic_factor_over_q(coeffs) -> bool:
    # Gauss: a monic integer quartic factors over Q iff it factors into monic integer quadratics.
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    # y = lcm * x turns the monic rational quartic into a monic integer one
    p0, p1, p2, p3 = (int(coeffs[i] * lcm ** (4 - i)) for i in range(4))
    for b in _divisors(p0):
        for b in (b, -b):
            d = p0 // b
            # a + c = p3, a*c = p2 - b - d
            s, prod = p3, p2 - b - d
            disc = s * s - 4 * prod
            if disc < 0:
                continue
            r = math.isqrt(disc)
            if r * r != disc or (s + r) % 2:
                continue
            a, c = (s + r) // 2, (s - r) // 2
            if a * d + b * c == p1 or c * d + b * a == p1:
                return True
    return False


@dataclass(frozen=True)
class ExtensionField(Field):
    """``base[z]/(min_poly)`` with ``min_poly`` monic, given low -> high."""

    base: Field
    min_poly: tuple
    irreducibility_verified: bool = field(default=False, compare=False)

    def __post_init__(self):
        m = tuple(self.base.coerce(c) if hasattr(self.base, "coerce") else c for c in self.min_poly)
        object.__setattr__(self, "min_poly", m)
        if len(m) < 3:
            raise FieldError("minimal polynomial must have degree >= 2")
        if m[-1] != self.base.one():
            raise FieldError("minimal polynomial must be monic")
        object.__setattr__(self, "irreducibility_verified", self._check_irreducible())

    def _check_irreducible(self) -> bool:
        """True if verified irreducible, False if unverified; raises if reducible."""
        B, m, n = self.base, list(self.min_poly), self.degree
        if B.order is not None:
            # Ben-Or: no factor of degree i divides m for i <= n/2
            x = [B.zero(), B.one()]
            xq = x
            for _ in range(n // 2):
                xq = _poly_powmod(B, xq, B.order, m)
                g = _poly_gcd(B, m, _poly_sub(B, xq, x))
                if len(g) > 1:
                    raise FieldError(f"minimal polynomial {m} is reducible over {B}")
            return True
        if isinstance(B, Rationals) and n <= 4:
            if _rational_roots(m):
                raise FieldError(f"minimal polynomial {m} has a rational root")
            if n == 4 and _quartic_has_quadratic_factor_over_q(m):
                raise FieldError(f"minimal polynomial {m} has a quadratic factor over Q")
            return True
        return False  # trusted, not verified

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    @property
    def characteristic(self):
        return self.base.characteristic

    @property
    def order(self):
        return None if self.base.order is None else self.base.order**self.degree

    def from_int(self, n):
        return (self.base.from_int(n),) + (self.base.zero(),) * (self.degree - 1)

    def from_fraction(self, q):
        return (self.base.from_fraction(q),) + (self.base.zero(),) * (self.degree - 1)

    def from_base(self, b):
        return (b,) + (self.base.zero(),) * (self.degree - 1)

    def coerce(self, a):
        if isinstance(a, tuple):
            return self.reduce(a)
        return self.from_base(self.base.coerce(a))

    @cached_property
    def generator(self):
        return self.reduce((self.base.zero(), self.base.one()))

    def reduce(self, coeffs):
        """Reduce a coefficient sequence of any length modulo the minimal polynomial."""
        B, n = self.base, self.degree
        c = list(coeffs)
        m = self.min_poly
        for top in range(len(c) - 1, n - 1, -1):
            lead = c[top]
            if B.is_zero(lead):
                continue
            for i in range(n + 1):
                c[top - n + i] = B.sub(c[top - n + i], B.mul(lead, m[i]))
        c = c[:n] + [B.zero()] * (n - len(c))
        return tuple(c)

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(self.base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        B = self.base
        out = [B.zero()] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if B.is_zero(x):
                continue
            for j, y in enumerate(b):
                if not B.is_zero(y):
                    out[i + j] = B.add(out[i + j], B.mul(x, y))
        return self.reduce(out)

    def inv(self, a):
        B = self.base
        if all(B.is_zero(x) for x in a):
            raise ZeroInversion(f"inverse of 0 in {self}")
        # extended Euclid: s*a + t*m = g
        r0, r1 = list(self.min_poly), _trim(B, a)
        s0, s1 = [], [B.one()]
        while len(r1) > 1:
            q, r = _poly_divmod(B, r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(B, s0, _poly_mul(B, q, s1))
        if not r1:
            raise NonInvertible(f"{a} is a zero divisor in {self}")
        c = B.inv(r1[0])
        return self.reduce([B.mul(c, x) for x in s1])

    def is_zero(self, a):
        return all(self.base.is_zero(x) for x in a)

    def elements(self):
        import itertools

        for combo in itertools.product(list(self.base.elements()), repeat=self.degree):
            yield tuple(combo)

    def random(self, rng, bound=100):
        return tuple(self.base.random(rng, bound) for _ in range(self.degree))

    def format(self, a) -> str:
        terms = []
        for i, c in enumerate(a):
            if self.base.is_zero(c):
                continue
            cs = self.base.format(c)
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                terms.append(cs)
            elif c == self.base.one():
                terms.append(mono)
            else:
                terms.append(f"({cs})*{mono}" if "/" in cs or "-" in cs else f"{cs}*{mono}")
        return "(" + " + ".join(terms) + ")" if len(terms) > 1 else (terms[0] if terms else "0")

    def __str__(self):
        return f"{self.base}[z]/({_format_univariate(self.base, self.min_poly, 'z')})"


def _format_univariate(F, coeffs, var):
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if F.is_zero(c):
            continue
        cs = F.format(c)
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            parts.append(cs)
        elif c == F.one():
            parts.append(mono)
        elif c == F.neg(F.one()):
            parts.append("-" + mono)
        else:
            parts.append(f"{cs}*{mono}")
    return "+".join(parts).replace("+-", "-")


QQ = Rationals()


def invert(a, F: Field):
    """Multiplicative inverse of ``a`` in ``F``."""
    return F.inv(a)


def root_of_minus_one(k: int, F: Field):
    """Return some zeta in F with zeta^k = -1, or None.

    Prime fields are searched exhaustively (smallest residue wins). Over Q the
    only candidate is -1. In an extension the search runs over +-(base root) * z^j
    for the powers of the generator; this finds every root that is a signed power
    of z (all of them for cyclotomic presentations such as Q[z]/(z^4 - z^2 + 1)).
    """
    if k < 1:
        raise ValueError("k must be positive")
    minus_one = F.neg(F.one())
    if isinstance(F, PrimeField):
        for zeta in range(1, F.p):
            if pow(zeta, k, F.p) == minus_one:
                return zeta
        return None
    if isinstance(F, Rationals):
        return Fraction(-1) if k % 2 else None
    if isinstance(F, ExtensionField):
        base_root = root_of_minus_one(k, F.base)
        if base_root is not None:
            return F.from_base(base_root)
        z = F.generator
        power = F.one()
        for _ in range(4 * F.degree * F.degree + 8):
            power = F.mul(power, z)
            for cand in (power, F.neg(power)):
                if F.pow(cand, k) == minus_one:
                    return cand
            if power == F.one():
                break
        return None
    raise FieldError(f"unsupported field {F!r}")


_PRIME_RE = re.compile(r"^\s*(?:Fp|GF|F)\s*[:(]?\s*(\d+)\s*\)?\s*$")
_EXT_RE = re.compile(r"^\s*(.+?)\s*\[\s*z\s*\]\s*/\s*\((.+)\)\s*$")


def parse_field(text: str) -> Field:
    """Parse ``"Q"``, ``"Fp:13"``, ``"Q[z]/(z^2+1)"`` or ``"Fp:13[z]/(z^2+2)"``."""
    s = text.strip()
    m = _EXT_RE.match(s)
    if m:
        base = parse_field(m.group(1))
        return ExtensionField(base, tuple(_parse_univariate(m.group(2), base)))
    if s in ("Q", "QQ"):
        return QQ
    m = _PRIME_RE.match(s)
    if m:
        return PrimeField(int(m.group(1)))
    raise FieldError(f"cannot parse field descriptor {text!r}")


def _parse_univariate(text, base):
    # imported lazily: polyring depends on this module
    from .polyring import parse_expression

    terms = parse_expression(text, base, n_vars=0, allow_z=True)
    n = max((mono[-1] for mono in terms), default=0)
    coeffs = [base.zero()] * (n + 1)
    for mono, c in terms.items():
        coeffs[mono[-1]] = c
    return coeffs
