"""Scalar subresultants at the critical degree and the linear-in-x_i
polynomials they produce.

At the critical degree rho = d1 + ... + dn - n exactly one monomial
(prod x_{i-1}^{di - 1}) has no Macaulay assignment, so the assigned multiples
form an (N-1) x N matrix.  Appending a symbolic monomial row on top and
expanding along it yields one signed maximal minor per column; that cofactor
vector is a kernel covector of the matrix, which is what makes
s_alpha * x^beta - s_beta * x^alpha land in the homogenized ideal.

The whole s-vector is only defined up to one global sign; it is normalized so
the first nonzero of s_0, s_1, ... has positive leading coefficient.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import CriticalDegreeZero, WrongDegree
from .linalg import det_upoly
from .mpoly import MPoly, mono_degree
from .resultant import build_macaulay_matrix
from .upoly import UPoly


@dataclass(frozen=True)
class SubresultantData:
    rho: int
    s: dict                 # alpha (exponent tuple over x0..x_{n-1}) -> UPoly
    p: tuple                # p_i = s0*x_i - s_i as MPoly over the system ring
    sign_normalized: bool
    all_scalars_zero: bool

    def s_list(self):
        """s_0, ..., s_{n-1} in index order."""
        n = len(next(iter(self.s)))
        return [self.s[_alpha_index_monomial(n, self.rho, i)] for i in range(n)]


def _alpha_index_monomial(n, rho, i):
    """Exponent tuple of x0^(rho-1) * x_i over x0..x_{n-1}."""
    e = [0] * n
    e[0] = rho - 1
    e[i] += 1
    return tuple(e)


def critical_matrix(S):
    """The (N-1) x N matrix of Macaulay-assigned multiples at degree rho."""
    if S.critical_degree < 1:
        raise CriticalDegreeZero(
            "all degrees are 1; the single critical-degree scalar is 1 by convention")
    return build_macaulay_matrix(S, S.critical_degree)


@lru_cache(maxsize=256)
def _raw_subresultants(S):
    """Unnormalized signed minors for every critical-degree column monomial."""
    M = critical_matrix(S)
    rows = M.entry_rows()
    xn = S.hidden_var
    out = {}
    for j, column in enumerate(M.columns):
        sub = [row[:j] + row[j + 1:] for row in rows]
        minor = det_upoly(sub, xn)
        out[column] = minor if j % 2 == 0 else -minor
    return M, out


@lru_cache(maxsize=256)
def _global_sign(S):
    """-1 when the first nonzero of s_0..s_{n-1} has a negative leading coefficient."""
    _, raw = _raw_subresultants(S)
    for i in range(S.n):
        cand = raw[_alpha_index_monomial(S.n, S.critical_degree, i)]
        if cand:
            return -1 if cand.lc < 0 else 1
    return 1


def scalar_subresultant(S, alpha):
    """The sign-normalized scalar subresultant attached to the monomial alpha.

    For critical degree zero every degree is 1 and the answer is the
    constant 1.
    """
    alpha = tuple(alpha)
    if S.critical_degree == 0:
        if any(alpha):
            raise WrongDegree(f"{alpha} does not have degree 0")
        return UPoly.one(S.hidden_var)
    if len(alpha) != S.n or mono_degree(alpha) != S.critical_degree:
        raise WrongDegree(f"{alpha} does not have degree {S.critical_degree}")
    _, raw = _raw_subresultants(S)
    return raw[alpha] * _global_sign(S)


@lru_cache(maxsize=256)
def first_subresultant_polys(S):
    """s_0..s_{n-1} plus the polynomials p_i = s0*x_i - s_i, sign-normalized."""
    if S.critical_degree < 1:
        raise CriticalDegreeZero(
            "all degrees are 1; the single critical-degree scalar is 1 by convention")
    sign = _global_sign(S)
    _, raw = _raw_subresultants(S)
    s = {}
    for i in range(S.n):
        alpha = _alpha_index_monomial(S.n, S.critical_degree, i)
        s[alpha] = raw[alpha] * sign
    values = list(s.values())
    s0 = s[_alpha_index_monomial(S.n, S.critical_degree, 0)]
    ps = []
    s0_m = MPoly.from_upoly(s0, S.vars, S.hidden_var)
    for i in range(1, S.n):
        si = s[_alpha_index_monomial(S.n, S.critical_degree, i)]
        pi = s0_m * MPoly.variable(S.vars, S.vars[i - 1]) \
            - MPoly.from_upoly(si, S.vars, S.hidden_var)
        ps.append(pi)
    return SubresultantData(
        rho=S.critical_degree,
        s=s,
        p=tuple(ps),
        sign_normalized=True,
        all_scalars_zero=all(not v for v in values),
    )
