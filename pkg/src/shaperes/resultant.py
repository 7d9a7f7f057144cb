"""Hidden-variable resultants.

The last variable is treated as part of the coefficient ring, the rest of the
system is homogenized with x0, and the multivariable resultant of the
homogenized forms is a univariate polynomial in the hidden variable.

Conventions fixed here (they pin determinant signs):
  * Sylvester path (n = 2): coefficient rows of f1 first, powers of x1
    descending; the determinant is returned as-is.
  * Macaulay path (any n): polynomial fi is paired with the variable
    x_{i-1}; a row monomial goes to the smallest eligible i; rows and
    columns share one ordering, lex-descending on exponents, so the
    determinant does not depend on it.  The quotient det(M)/det(M') is
    normalized classically: the resultant of x0^{d1}, ..., x_{n-1}^{dn} is 1.
    For n = 2 the two paths may differ by a sign determined by (d1, d2).

Determinants over Q[xn] are evaluated at xn = 0, 1, -1, 2, -2, ... and
interpolated; points where the quotient minor vanishes are skipped.  When the
minor vanishes identically, each evaluation falls back to perturbing fi by
u * x_{i-1}^{di} and taking the constant term in u of the exact quotient.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import AllEvaluationsDegenerate, DegenerateDegree
from .linalg import det_fraction, det_upoly, interpolate, sample_points
from .mpoly import MPoly, PolySystem, lex_key
from .upoly import UPoly


def _monomials_of_degree(nvars, degree):
    """Exponent tuples of the given total degree, lex descending."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=lex_key, reverse=True)
    return out


@dataclass(frozen=True)
class MacaulayMatrix:
    """Rows are Macaulay-assigned multiples of the homogenized system at one degree.

    Entries are UPoly coefficients in the hidden variable.  `minor_rows` and
    `minor_cols` mark the quotient minor (monomials divisible by at least two
    of the x_{i-1}^{di}).
    """
    degree: int
    columns: tuple
    rows: tuple          # (row monomial, polynomial index i, entry tuple)
    minor_rows: tuple    # row indices
    minor_cols: tuple    # column indices
    hidden_var: str

    def entry_rows(self):
        return [list(r[2]) for r in self.rows]

    def minor_entry_rows(self):
        cols = set(self.minor_cols)
        keep = [j for j in range(len(self.columns)) if j in cols]
        return [[self.rows[i][2][j] for j in keep] for i in self.minor_rows]


@dataclass(frozen=True)
class HiddenVarResultant:
    poly: UPoly
    degree_bound_used: int
    method: str
    degenerate_fallback: bool = False


def _assignment(gamma, degrees):
    """Smallest i (1-based) with x_{i-1}^{d_i} dividing the monomial, else None."""
    for i, d in enumerate(degrees, start=1):
        if gamma[i - 1] >= d:
            return i
    return None


def _divisor_count(gamma, degrees):
    return sum(1 for i, d in enumerate(degrees) if gamma[i] >= d)


def build_macaulay_matrix(S, degree):
    """Macaulay matrix of the homogenized system at the given total degree.

    A row exists for every degree-`degree` monomial in x0..x_{n-1} that some
    x_{i-1}^{di} divides; at the resultant degree rho+1 that is all of them.
    """
    n = S.n
    xn = S.hidden_var
    columns = _monomials_of_degree(n, degree)
    col_index = {m: j for j, m in enumerate(columns)}
    # coefficient tables of the homogenized polynomials: x-part -> UPoly in xn
    tables = []
    for fh in S.homogenized():
        table = {}
        for m, c in fh.terms.items():
            table.setdefault(m[:-1], {})[m[-1]] = c
        tables.append({
            part: UPoly([coeffs.get(k, 0) for k in range(max(coeffs) + 1)], xn)
            for part, coeffs in table.items()})
    zero = UPoly.zero(xn)
    rows = []
    for gamma in columns:
        i = _assignment(gamma, S.degrees)
        if i is None:
            continue
        shift = tuple(g - (S.degrees[i - 1] if j == i - 1 else 0)
                      for j, g in enumerate(gamma))
        entries = [zero] * len(columns)
        for part, cp in tables[i - 1].items():
            target = tuple(p + s for p, s in zip(part, shift))
            entries[col_index[target]] = cp
        rows.append((gamma, i, tuple(entries)))
    row_index = {r[0]: k for k, r in enumerate(rows)}
    minor_cols = tuple(j for j, m in enumerate(columns)
                       if _divisor_count(m, S.degrees) >= 2)
    minor_rows = tuple(row_index[columns[j]] for j in minor_cols)
    return MacaulayMatrix(degree, tuple(columns), tuple(rows),
                          minor_rows, minor_cols, xn)


def sylvester_matrix(f1, f2):
    """Sylvester matrix in x1 with entries in Q[x2]; f1 rows first, descending powers."""
    x1, x2 = f1.vars
    d1, d2 = f1.degree_of(x1), f2.degree_of(x1)
    if d1 < 1 or d2 < 1:
        raise DegenerateDegree("both polynomials must involve x1")
    zero = UPoly.zero(x2)

    def coeff_list(f, d):
        table = f.coeffs_in(x1)
        return [table[k].as_upoly(x2) if k in table else zero for k in range(d, -1, -1)]

    a, b = coeff_list(f1, d1), coeff_list(f2, d2)
    size = d1 + d2
    rows = []
    for i in range(d2):
        rows.append([zero] * i + a + [zero] * (size - d1 - 1 - i))
    for i in range(d1):
        rows.append([zero] * i + b + [zero] * (size - d2 - 1 - i))
    return rows


def sylvester_resultant(f1, f2):
    """Exact Sylvester determinant for a two-variable system."""
    rows = sylvester_matrix(f1, f2)
    bound = sum(max((e.degree for e in row if e), default=0) for row in rows)
    poly = det_upoly(rows, f1.vars[1])
    return HiddenVarResultant(poly, bound, "sylvester")


def _resultant_degree_bound(S):
    xn = S.hidden_var
    bound = 0
    for i, f in enumerate(S.polys):
        others = 1
        for j, d in enumerate(S.degrees):
            if j != i:
                others *= d
        bound += max(f.degree_of(xn), 0) * others
    return bound


def _evaluate_rows(rows, t):
    return [[e(t) for e in row] for row in rows]


def macaulay_resultant(S, allow_fallback=True):
    """Resultant via the Macaulay quotient det(M)/det(M') at degree rho + 1."""
    xn = S.hidden_var
    M = build_macaulay_matrix(S, S.critical_degree + 1)
    full = M.entry_rows()
    minor = M.minor_entry_rows()
    bound = _resultant_degree_bound(S)
    minor_degree_bound = sum(max((e.degree for e in row if e), default=0)
                             for row in minor)
    points = []
    gen = sample_points()
    for _ in range(bound + 1 + minor_degree_bound + 1):
        t = next(gen)
        dm = det_fraction(_evaluate_rows(minor, t))
        if dm == 0:
            continue
        dfull = det_fraction(_evaluate_rows(full, t))
        points.append((t, dfull / dm))
        if len(points) == bound + 1:
            break
    if len(points) < bound + 1:
        if not allow_fallback:
            raise AllEvaluationsDegenerate(
                "quotient minor vanishes at every admissible sample point")
        return _macaulay_perturbed(S, M, bound)
    return HiddenVarResultant(interpolate(points, xn), bound, "macaulay")


def _char_poly_value(rows_t):
    """det(A + u*I) as a UPoly in u, by interpolation over u."""
    n = len(rows_t)
    pts = []
    for u in range(n + 1):
        uu = Fraction(u)
        pts.append((uu, det_fraction(
            [[rows_t[i][j] + (uu if i == j else 0) for j in range(n)]
             for i in range(n)])))
    return interpolate(pts, "u")


def _macaulay_perturbed(S, M, bound):
    """Degenerate-minor fallback: perturb fi by u * x_{i-1}^{di}.

    The perturbation adds u on the diagonal of both the full matrix and the
    minor, the quotient is then an exact polynomial in u, and its constant
    term is the unperturbed resultant.
    """
    xn = S.hidden_var
    full = M.entry_rows()
    minor = M.minor_entry_rows()
    points = []
    gen = sample_points()
    for _ in range(bound + 1):
        t = next(gen)
        pm = _char_poly_value(_evaluate_rows(full, t))
        pmm = _char_poly_value(_evaluate_rows(minor, t))
        quo, rem = divmod(pm, pmm)
        if rem:
            raise AllEvaluationsDegenerate("perturbed quotient is not a polynomial")
        points.append((t, quo(0)))
    return HiddenVarResultant(interpolate(points, xn), bound, "macaulay",
                              degenerate_fallback=True)


@lru_cache(maxsize=256)
def hidden_variable_resultant(S):
    """Dispatch: Sylvester for n = 2, Macaulay quotient for n >= 3."""
    if S.n == 2:
        return sylvester_resultant(S.polys[0], S.polys[1])
    return macaulay_resultant(S)
