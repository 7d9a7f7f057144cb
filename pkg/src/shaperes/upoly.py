"""Dense univariate polynomials over exact rationals.

Coefficients are `fractions.Fraction` (always reduced, positive denominator),
stored lowest degree first with no trailing zeros; the zero polynomial has an
empty coefficient tuple.  The variable name is a display tag only: arithmetic
and equality ignore it, and mixing two differently-tagged nonconstant
polynomials raises.
"""

from fractions import Fraction
from math import isqrt

from .errors import BothZero, DegreeZero, ZeroInput


class UPoly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="x"):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def zero(cls, var="x"):
        return cls((), var)

    @classmethod
    def one(cls, var="x"):
        return cls((1,), var)

    @classmethod
    def constant(cls, c, var="x"):
        return cls((c,), var)

    @classmethod
    def variable(cls, var="x"):
        return cls((0, 1), var)

    @classmethod
    def monomial(cls, coeff, exponent, var="x"):
        return cls((0,) * exponent + (coeff,), var)

    @property
    def degree(self):
        """Degree, with deg(0) = -1."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == (() if other == 0 else (Fraction(other),))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _join_var(self, other):
        if self.degree > 0 and other.degree > 0 and self.var != other.var:
            raise ValueError(f"mixed variables {self.var!r} and {other.var!r}")
        return self.var if self.degree > 0 else (other.var if other.degree > 0 else self.var)

    @staticmethod
    def _coerce(value, var):
        if isinstance(value, UPoly):
            return value
        return UPoly((value,), var)

    def __add__(self, other):
        other = self._coerce(other, self.var)
        var = self._join_var(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out, var)

    __radd__ = __add__

    def __neg__(self):
        return UPoly(tuple(-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other, self.var))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return UPoly((), self.var)
            return UPoly(tuple(c * other for c in self.coeffs), self.var)
        var = self._join_var(other)
        if not self or not other:
            return UPoly((), var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UPoly(out, var)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = UPoly.one(self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other, self.var)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        var = self._join_var(other)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UPoly((), var), UPoly(rem, var)
        quo = [Fraction(0)] * (dq + 1)
        dlc = other.lc
        for i in range(dq, -1, -1):
            c = rem[i + other.degree]
            if c:
                q = c / dlc
                quo[i] = q
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= q * b
        return UPoly(quo, var), UPoly(rem[: other.degree], var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other):
        return bool(self) and not (other % self)

    def monic(self):
        if not self or self.lc == 1:
            return self
        inv = 1 / self.lc
        return UPoly(tuple(c * inv for c in self.coeffs), self.var)

    def derivative(self):
        return UPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i), self.var)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                mono = str(abs(c))
            else:
                head = self.var if i == 1 else f"{self.var}^{i}"
                mono = head if abs(c) == 1 else f"{abs(c)}*{head}"
            if not parts:
                parts.append(("-" if c < 0 else "") + mono)
            else:
                parts.append((" - " if c < 0 else " + ") + mono)
        return "".join(parts)

    def __repr__(self):
        return f"UPoly({self})"


def upoly_gcd(a, b):
    """Monic gcd, with gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic()


def extended_gcd(a, b):
    """Return (g, u, v) with u*a + v*b = g, g the monic gcd.

    Cofactors are the canonical minimal-degree pair: deg u < deg b - deg g
    and deg v < deg a - deg g whenever those bounds are meaningful.
    """
    if not a and not b:
        raise BothZero("extended_gcd(0, 0)")
    var = a.var if a.degree > 0 else b.var
    r0, r1 = a, b
    u0, u1 = UPoly.one(var), UPoly.zero(var)
    v0, v1 = UPoly.zero(var), UPoly.one(var)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    inv = 1 / r0.lc
    g, u, v = r0 * inv, u0 * inv, v0 * inv
    if b:
        cof = b // g
        if cof.degree > 0:
            u = u % cof
        else:
            u = UPoly.zero(var)
        v = (g - u * a) // b
    return g, u, v


def squarefree_part(a):
    """Monic product of the distinct irreducible factors of a."""
    if not a:
        raise ZeroInput("squarefree_part(0)")
    g = upoly_gcd(a, a.derivative())
    return (a // g).monic()


def squarefree_decomposition(a):
    """Return [(q_i, m_i), ...] with a = lc * prod q_i^{m_i}, q_i monic squarefree, coprime."""
    if not a:
        raise ZeroInput("squarefree_decomposition(0)")
    levels = []
    g = a.monic()
    while g.degree > 0:
        levels.append(squarefree_part(g))
        g = upoly_gcd(g, g.derivative())
    out = []
    for i, cur in enumerate(levels):
        nxt = levels[i + 1] if i + 1 < len(levels) else UPoly.one(a.var)
        fac = cur // nxt
        if fac.degree > 0:
            out.append((fac, i + 1))
    return out


def resultant(a, b):
    """Classical resultant Res_{deg a, deg b}(a, b) as a rational number."""
    if not a or not b:
        return Fraction(0)
    sign = 1
    acc = Fraction(1)
    while True:
        if b.degree == 0:
            return sign * acc * b.lc ** a.degree
        if a.degree < b.degree:
            if (a.degree % 2) and (b.degree % 2):
                sign = -sign
            a, b = b, a
            continue
        r = a % b
        if not r:
            return Fraction(0)
        if (a.degree % 2) and (b.degree % 2):
            sign = -sign
        acc *= b.lc ** (a.degree - r.degree)
        a, b = b, r


def discriminant(a):
    """disc(a) = (-1)^{m(m-1)/2} Res(a, a') / lc(a)."""
    m = a.degree
    if m < 1:
        raise DegreeZero("discriminant needs degree >= 1")
    sign = -1 if (m * (m - 1) // 2) % 2 else 1
    return sign * resultant(a, a.derivative()) / a.lc


def _divisors(n):
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def rational_roots(a):
    """All rational roots with exact multiplicities, sorted by root."""
    if not a:
        raise ZeroInput("rational_roots(0)")
    roots = []
    k = 0
    while k <= a.degree and a.coeffs[k] == 0:
        k += 1
    if k:
        roots.append((Fraction(0), k))
        a = UPoly(a.coeffs[k:], a.var)
    if a.degree < 1:
        return roots
    # primitive integer version for the candidate search
    den = 1
    for c in a.coeffs:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    ints = [int(c * den) for c in a.coeffs]
    content = 0
    for c in ints:
        content = _int_gcd(content, abs(c))
    ints = [c // content for c in ints]
    for q in _divisors(ints[-1]):
        for p in _divisors(ints[0]):
            if _int_gcd(p, q) != 1:
                continue
            for r in (Fraction(p, q), Fraction(-p, q)):
                if a(r) == 0:
                    lin = UPoly((-r, 1), a.var)
                    mult = 0
                    while True:
                        quo, rem = divmod(a, lin)
                        if rem:
                            break
                        a = quo
                        mult += 1
                    roots.append((r, mult))
    roots.sort(key=lambda rm: rm[0])
    return roots


def _int_gcd(x, y):
    while y:
        x, y = y, x % y
    return x


def factor_rational_clusters(a, assume_irreducible=()):
    """Split a into (constant, [(factor, exponent, certified), ...]).

    Factors are monic and pairwise coprime: rational linear factors are split
    off exactly; what remains of each squarefree level is kept whole.  A
    residual of degree <= 3 without rational roots is certified irreducible,
    as is anything listed in `assume_irreducible` (externally confirmed).
    """
    if not a:
        raise ZeroInput("factor_rational_clusters(0)")
    assumed = {p.monic().coeffs for p in assume_irreducible}
    factors = []
    for level, mult in squarefree_decomposition(a):
        residual = level
        for root, _ in rational_roots(level):
            factors.append((UPoly((-root, 1), a.var), mult, True))
            residual = residual // UPoly((-root, 1), a.var)
        if residual.degree > 0:
            certified = residual.degree <= 3 or residual.coeffs in assumed
            factors.append((residual.monic(), mult, certified))
    factors.sort(key=lambda f: (f[0].degree, f[0].coeffs))
    return a.lc, factors
