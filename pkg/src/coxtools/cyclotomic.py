"""Exact arithmetic in cyclotomic number fields.

Elements of QQ(zeta_n) are represented by rational coefficient vectors
of length phi(n), reduced modulo the n-th cyclotomic polynomial, which
is computed by recursively dividing x^n - 1 by the lower-order factors.
"""

from fractions import Fraction
from functools import lru_cache


def euler_phi(n):
    result = n
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _poly_divmod(num, den):
    """Exact division of integer polynomials (coefficient lists, low first)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - len(den), -1, -1):
        if num[i + len(den) - 1] == 0:
            continue
        q, r = divmod(num[i + len(den) - 1], den[-1])
        if r:
            raise ArithmeticError("non-exact polynomial division")
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Integer coefficients of Phi_n, lowest degree first."""
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divmod(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CycloNum:
    """An element of QQ(zeta_n) in reduced representation."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor, coeffs=()):
        self.conductor = int(conductor)
        deg = euler_phi(self.conductor)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > deg:
            cs = _reduce(cs, self.conductor)
        cs += [Fraction(0)] * (deg - len(cs))
        self.coeffs = tuple(cs[:deg])

    @classmethod
    def rational(cls, conductor, value):
        return cls(conductor, (Fraction(value),))

    @classmethod
    def zeta(cls, conductor):
        """A primitive conductor-th root of unity."""
        if conductor == 1:
            return cls(1, (1,))
        return cls(conductor, (0, 1))

    def _check(self, other):
        if not isinstance(other, CycloNum):
            other = CycloNum.rational(self.conductor, other)
        if other.conductor != self.conductor:
            raise ValueError("mixed conductors")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CycloNum(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return CycloNum(self.conductor)
        prod = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return CycloNum(self.conductor, prod)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        lead = next(c for c in reversed(r0) if c)
        inv = [c / lead for c in s0]
        return CycloNum(self.conductor, inv)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.rational(self.conductor, other)
        return (isinstance(other, CycloNum) and self.conductor == other.conductor
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.conductor, self.coeffs))

    def __lt__(self, other):
        other = self._check(other)
        return self.coeffs < other.coeffs

    def __repr__(self):
        return f"CycloNum({self.conductor}, {self.render()})"

    def render(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            coeff = "" if (mag == 1 and i > 0) else (
                str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}")
            var = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            body = coeff + ("*" if coeff and var else "") + var
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(parts)


def _reduce(coeffs, n):
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    cs = list(coeffs)
    for i in range(len(cs) - 1, deg - 1, -1):
        c = cs[i]
        if c:
            for j in range(deg + 1):
                cs[i - deg + j] -= c * phi[j]
    return cs[:deg]


def _frac_poly_divmod(num, den):
    num = list(num)
    dlead = len(den) - 1
    while dlead > 0 and den[dlead] == 0:
        dlead -= 1
    q = [Fraction(0)] * max(1, len(num) - dlead)
    for i in range(len(num) - 1, dlead - 1, -1):
        if num[i] == 0:
            continue
        f = num[i] / den[dlead]
        q[i - dlead] = f
        for j in range(dlead + 1):
            num[i - dlead + j] -= f * den[j]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


def _frac_poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]
