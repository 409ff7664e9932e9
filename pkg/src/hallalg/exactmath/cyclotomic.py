"""Exact cyclotomic numbers: Q(zeta_m) as polynomials in zeta_m mod Phi_m.

A Cyc stores its conductor m and a coefficient vector of length
euler_phi(m) = deg Phi_m over Fraction.  Mixed-conductor arithmetic promotes
both operands to the lcm conductor via zeta_m = zeta_M^(M/m).  Conductor 1
embeds the rationals.
"""

from fractions import Fraction
from functools import cache
from math import gcd


@cache
def euler_phi(m: int) -> int:
    assert m >= 1
    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def _polydivmod_int(num: list[int], den: list[int]):
    """Exact division of integer polynomials, den monic; coefficients low-first."""
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, dc in enumerate(den):
                num[i - dd + j] -= c * dc
    assert all(c == 0 for c in num[:dd]) and all(c == 0 for c in num[dd:]), \
        "non-exact polynomial division"
    return quot


@cache
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m, low degree first, monic."""
    assert m >= 1
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _polydivmod_int(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


@cache
def _reduction_rows(m: int, upto: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row k: the vector of zeta_m^k in the basis 1..zeta^(phi-1), for k < upto."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    for k in range(upto):
        if k < deg:
            row = [Fraction(0)] * deg
            row[k] = Fraction(1)
        else:
            # zeta^k = zeta * zeta^(k-1) reduced mod Phi_m
            prev = rows[k - 1]
            row = [Fraction(0)] + list(prev[:-1])
            top = prev[-1]
            if top:
                for j in range(deg):
                    row[j] -= top * phi[j]
        rows.append(tuple(row))
    return tuple(rows)


def _reduce_power_poly(m: int, coeffs: dict[int, Fraction]) -> tuple[Fraction, ...]:
    """Reduce sum_k c_k zeta_m^k (k arbitrary, taken mod m) mod Phi_m."""
    deg = euler_phi(m)
    rows = _reduction_rows(m, m if m > 1 else 1)
    out = [Fraction(0)] * deg
    for k, c in coeffs.items():
        if not c:
            continue
        row = rows[k % m]
        for j in range(deg):
            out[j] += c * row[j]
    return tuple(out)


class Cyc:
    """An element of the m-th cyclotomic field, reduced mod Phi_m."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        assert m >= 1 and len(coeffs) == euler_phi(m)
        self.m = m
        self.coeffs = coeffs

    @classmethod
    def rational(cls, q) -> "Cyc":
        return cls(1, (Fraction(q),))

    @classmethod
    def zeta(cls, m: int, k: int = 1) -> "Cyc":
        return cls(m, _reduce_power_poly(m, {k % m: Fraction(1)}))

    @classmethod
    def zero(cls, m: int = 1) -> "Cyc":
        return cls(m, (Fraction(0),) * euler_phi(m))

    @classmethod
    def one(cls, m: int = 1) -> "Cyc":
        c = [Fraction(0)] * euler_phi(m)
        c[0] = Fraction(1)
        return cls(m, c)

    def promote(self, big_m: int) -> "Cyc":
        """Re-express in Q(zeta_M) for m | M."""
        assert big_m % self.m == 0
        if big_m == self.m:
            return self
        step = big_m // self.m
        return Cyc(big_m, _reduce_power_poly(
            big_m, {k * step: c for k, c in enumerate(self.coeffs)}))

    @staticmethod
    def _pair(a, b):
        if not isinstance(a, Cyc):
            a = Cyc.rational(a)
        if not isinstance(b, Cyc):
            b = Cyc.rational(b)
        m = a.m * b.m // gcd(a.m, b.m)
        return a.promote(m), b.promote(m)

    def __add__(self, other):
        a, b = Cyc._pair(self, other)
        return Cyc(a.m, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.m, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = Cyc._pair(self, other)
        return Cyc(a.m, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc(self.m, tuple(c * other for c in self.coeffs))
        a, b = Cyc._pair(self, other)
        acc: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if y:
                    acc[i + j] = acc.get(i + j, Fraction(0)) + x * y
        return Cyc(a.m, _reduce_power_poly(a.m, acc))

    __rmul__ = __mul__

    def __truediv__(self, other):
        assert isinstance(other, (int, Fraction)) and other != 0
        return Cyc(self.m, tuple(c / other for c in self.coeffs))

    def conj(self) -> "Cyc":
        """Complex conjugation zeta -> zeta^-1."""
        acc: dict[int, Fraction] = {}
        for k, c in enumerate(self.coeffs):
            if c:
                acc[(-k) % self.m] = acc.get((-k) % self.m, Fraction(0)) + c
        return Cyc(self.m, _reduce_power_poly(self.m, acc))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        assert self.is_rational(), f"not rational: {self!r}"
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyc):
            return NotImplemented
        a, b = Cyc._pair(self, other)
        return a.coeffs == b.coeffs

    __hash__ = None  # equality crosses conductors; not usable as a dict key

    def __repr__(self):
        if self.is_rational():
            return f"Cyc({self.coeffs[0]})"
        return f"Cyc(m={self.m}, {self.to_string()})"

    def to_string(self, var: str = "z") -> str:
        """Human form like '1-2*z+1/2*z^2'; '0' when zero."""
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def to_json(self):
        return {"conductor": self.m, "coeffs": [str(c) for c in self.coeffs]}
