"""Exact determinants and interpolation for matrices of rationals or of
univariate polynomials.

Polynomial determinants go through evaluation at rational points followed by
Lagrange interpolation, so all elimination happens over plain rationals where
fraction-free Bareiss is cheap.
"""

from fractions import Fraction

from .upoly import UPoly


def det_int(rows):
    """Bareiss fraction-free determinant of a square integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_fraction(rows):
    """Determinant of a square matrix of Fractions."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    scale = 1
    int_rows = []
    for row in rows:
        den = 1
        for c in row:
            den = den * c.denominator // _gcd(den, c.denominator)
        scale *= den
        int_rows.append([int(c * den) for c in row])
    return Fraction(det_int(int_rows), scale)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def interpolate(points, var="x"):
    """UPoly through the given (x, y) pairs; len(points) - 1 bounds the degree."""
    xs = [Fraction(x) for x, _ in points]
    ys = [Fraction(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must be distinct")
    full = UPoly.one(var)
    for x in xs:
        full = full * UPoly((-x, 1), var)
    acc = UPoly.zero(var)
    for x, y in zip(xs, ys):
        if y == 0:
            continue
        q = full // UPoly((-x, 1), var)
        acc = acc + q * (y / q(x))
    return acc


def sample_points():
    """Deterministic evaluation points 0, 1, -1, 2, -2, ..."""
    yield Fraction(0)
    k = 1
    while True:
        yield Fraction(k)
        yield Fraction(-k)
        k += 1


def det_upoly(rows, var):
    """Determinant of a square matrix with UPoly entries, computed exactly.

    The degree bound is the sum over rows of the largest entry degree, and
    exactly bound + 1 sample points are used.
    """
    n = len(rows)
    if n == 0:
        return UPoly.one(var)
    bound = 0
    for row in rows:
        bound += max((e.degree for e in row if e), default=0)
    pts = []
    gen = sample_points()
    for _ in range(bound + 1):
        t = next(gen)
        value = det_fraction([[e(t) for e in row] for row in rows])
        pts.append((t, value))
    return interpolate(pts, var)
