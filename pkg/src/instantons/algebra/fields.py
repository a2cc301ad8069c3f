"""Exact base fields: the rationals, the Gaussian rationals and prime fields.

Elements of Q are plain :class:`fractions.Fraction` objects; elements of Q(i)
and F_p get small immutable wrapper classes so that generic code can be
written with ordinary arithmetic operators.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational


class Gaussian:
    """a + b*i with a, b rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian is immutable")

    @staticmethod
    def _lift(x):
        if isinstance(x, Gaussian):
            return x
        if isinstance(x, (int, Rational)):
            return Gaussian(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return Gaussian(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def conjugate(self):
        return Gaussian(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def __str__(self):
        return QQI.format(self)


class FpElement:
    """Residue class modulo a prime p, stored in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", v % p)

    def __setattr__(self, name, value):
        raise AttributeError("FpElement is immutable")

    def _lift(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError("mixing residues of different primes")
            return x.v
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FpElement(self.v + o, self.p)

    __radd__ = __add__

    def __neg__(self):
        return FpElement(-self.v, self.p)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FpElement(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FpElement(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FpElement(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return FpElement(o, self.p) / self

    def conjugate(self):
        return self

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except ValueError:
            return False
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"FpElement({self.v}, {self.p})"

    def __str__(self):
        return f"{self.v} mod {self.p}"


class Field:
    """Common interface of the three exact fields."""

    tag: str = ""
    characteristic: int = 0

    def __call__(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def conj(self, x):
        return x

    def format(self, x) -> str:
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def to_modp(self, x, p: int) -> int:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and other.tag == self.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return self.tag


def _frac_mod(x: Fraction, p: int) -> int:
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


class RationalField(Field):
    tag = "Q"

    def __call__(self, x):
        if isinstance(x, Gaussian):
            if x.im:
                raise ValueError(f"{x} is not rational")
            return x.re
        if isinstance(x, FpElement):
            raise TypeError("cannot lift a residue to Q")
        return Fraction(x)

    def format(self, x) -> str:
        x = Fraction(x)
        return f"{x.numerator}/{x.denominator}"

    def parse(self, s: str):
        s = s.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
            raise ValueError(f"malformed rational scalar {s!r}")
        return Fraction(s)

    def to_modp(self, x, p):
        return _frac_mod(Fraction(x), p)


_GAUSS_RE = re.compile(r"([+-]?\d+(?:/\d+)?)([+-]\d+(?:/\d+)?)\*i")


class GaussianField(Field):
    tag = "Qi"

    def __call__(self, x):
        if isinstance(x, Gaussian):
            return x
        if isinstance(x, FpElement):
            raise TypeError("cannot lift a residue to Q(i)")
        if isinstance(x, complex):
            return Gaussian(Fraction(x.real), Fraction(x.imag))
        return Gaussian(x, 0)

    def conj(self, x):
        return self(x).conjugate()

    def format(self, x) -> str:
        x = self(x)
        sign = "-" if x.im < 0 else "+"
        im = abs(x.im)
        return f"{x.re.numerator}/{x.re.denominator}{sign}{im.numerator}/{im.denominator}*i"

    def parse(self, s: str):
        s = s.strip()
        m = _GAUSS_RE.fullmatch(s)
        if m:
            return Gaussian(Fraction(m.group(1)), Fraction(m.group(2)))
        return Gaussian(QQ.parse(s), 0)

    def to_modp(self, x, p):
        x = self(x)
        if not x.im:
            return _frac_mod(x.re, p)
        return (_frac_mod(x.re, p) + _frac_mod(x.im, p) * sqrt_minus_one(p)) % p


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.tag = f"Fp:{p}"

    def __call__(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError("residue of a different prime")
            return x
        if isinstance(x, Fraction):
            return FpElement(_frac_mod(x, self.p), self.p)
        if isinstance(x, Gaussian):
            return FpElement(QQI.to_modp(x, self.p), self.p)
        return FpElement(int(x), self.p)

    def format(self, x) -> str:
        return f"{self(x).v} mod {self.p}"

    def parse(self, s: str):
        m = re.fullmatch(r"\s*(\d+) mod (\d+)\s*", s)
        if not m or int(m.group(2)) != self.p:
            raise ValueError(f"malformed residue {s!r} for p={self.p}")
        return self(int(m.group(1)))

    def to_modp(self, x, p):
        if p != self.p:
            raise ValueError("cannot change the characteristic of F_p data")
        return self(x).v


QQ = RationalField()
QQI = GaussianField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag: str) -> Field:
    if tag == "Q":
        return QQ
    if tag == "Qi":
        return QQI
    if tag.startswith("Fp:"):
        return GF(int(tag[3:]))
    raise ValueError(f"unknown field tag {tag!r}")


# -- primes -------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(rng, lo: int = 2**30, hi: int = 2**31, one_mod_four: bool = True) -> int:
    """A random prime in [lo, hi); p = 1 mod 4 so that sqrt(-1) exists."""
    while True:
        p = rng.randrange(lo, hi) | 1
        if one_mod_four and p % 4 != 1:
            continue
        if is_prime(p):
            return p


# largest prime below 2^31 that is 1 mod 4; default modulus for batch ranks
DEFAULT_PRIME = 2147483629


@lru_cache(maxsize=None)
def sqrt_minus_one(p: int) -> int:
    if p % 4 != 1:
        raise ValueError(f"-1 is not a square mod {p}")
    for g in range(2, p):
        r = pow(g, (p - 1) // 4, p)
        if r * r % p == p - 1:
            return r
    raise AssertionError("unreachable")
