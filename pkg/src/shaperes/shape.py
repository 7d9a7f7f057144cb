"""Shape-Lemma detection, solutions at infinity, the parametric-to-shape
reduction, and the machine checkers for the equivalences between shape
position, resultant-generated elimination ideals and subresultant generators.

Checkers never infer one condition from another: every condition is computed
independently and the claimed logical relation is asserted afterwards, so
each run is a concrete verification.  A failed assertion raises
AssertionViolation (a bug); a failed hypothesis is reported, not raised.

"Zero-dimensional" throughout means a finite quotient of dimension >= 1: the
unit ideal (empty variety) does not satisfy the hypotheses.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import (AssertionViolation, GcdNotOne, NotZeroDimensional,
                     WrongArity, ZeroModulus)
from .groebner import (INFINITE, Ideal, elimination_generator,
                       elimination_ideal, ideal_equal, ideal_member,
                       quotient_dim, radical_zero_dim, saturation,
                       system_ideal)
from .mpoly import MPoly, restrict_to_infinity
from .resultant import hidden_variable_resultant
from .subresultant import first_subresultant_polys
from .upoly import UPoly, rational_roots, upoly_gcd


@dataclass(frozen=True)
class ShapeBasis:
    """Monic r(xn) plus x_i - g_i(xn) generators with deg g_i < deg r."""
    r: UPoly
    g: tuple

    def to_ideal(self, vars):
        vars = tuple(vars)
        xn = vars[-1]
        gens = [MPoly.from_upoly(self.r, vars, xn)]
        for name, gi in zip(vars[:-1], self.g):
            gens.append(MPoly.variable(vars, name) - MPoly.from_upoly(gi, vars, xn))
        return Ideal(gens, vars)


class UnitIdeal:
    """Marker: the parametric generators collapse to the whole ring."""

    def __repr__(self):
        return "UnitIdeal"


UNIT_IDEAL = UnitIdeal()


@dataclass(frozen=True)
class ChartWitness:
    pivot: str
    nonempty: bool
    finite: bool
    xn_generator: UPoly | None   # monic generator of the chart's xn-elimination
    rational_xn: tuple           # rational xn-coordinates under the chart


@dataclass(frozen=True)
class InfinityReport:
    exists: bool
    finite: bool
    charts: tuple


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    hypotheses: dict
    hypothesis_failed: str | None
    conditions: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)
    verdict: str = "hypothesis_failed"

    @property
    def ok(self):
        return self.verdict == "pass"


def _proper_zero_dimensional(I):
    d = quotient_dim(I)
    return d != INFINITE and d >= 1


def has_shape_lemma(I):
    """The ShapeBasis read off the reduced lex basis, or None.

    Shape position means the basis is exactly {r(xn), x1 - g1(xn), ...,
    x_{n-1} - g_{n-1}(xn)} with r monic and deg g_i < deg r.
    """
    if quotient_dim(I) == INFINITE:
        raise NotZeroDimensional("shape detection needs a finite quotient")
    basis = I.basis()
    vars = I.vars
    xn = vars[-1]
    if len(basis) != len(vars):
        return None
    r = None
    g = {}
    for poly in basis:
        if all(not any(m[:-1]) for m in poly.terms):
            if r is not None:
                return None
            r = poly.as_upoly(xn)
            continue
        # needs to be x_i - g_i(xn): one degree-1 term in a single head variable
        head = None
        rest = {}
        for m, c in poly.terms.items():
            lead = [j for j, e in enumerate(m[:-1]) if e]
            if not lead:
                rest[m[-1]] = c
                continue
            if len(lead) > 1 or m[lead[0]] != 1 or m[-1] != 0 or c != 1:
                return None
            if head is not None:
                return None
            head = lead[0]
        if head is None or vars[head] in g:
            return None
        g[vars[head]] = UPoly([-c for c in _dense(rest)], xn)
    if r is None or len(g) != len(vars) - 1:
        return None
    if any(gi.degree >= r.degree for gi in g.values()):
        return None
    return ShapeBasis(r.monic(), tuple(g[v] for v in vars[:-1]))


def _dense(sparse):
    if not sparse:
        return []
    out = [0] * (max(sparse) + 1)
    for k, c in sparse.items():
        out[k] = c
    return out


def projection_injective(I):
    """True iff distinct points of the variety have distinct xn-coordinates.

    Decided algebraically: the radical has a Shape Lemma exactly when the
    reduced points separate along xn, so irrational points need no special
    handling.
    """
    d = quotient_dim(I)
    if d == INFINITE:
        raise NotZeroDimensional("injectivity test needs a finite quotient")
    if d == 0:
        return True  # empty variety
    return has_shape_lemma(radical_zero_dim(I)) is not None


def infinity_chart_ideals(S):
    """The n-1 charts at infinity: x0 = 0, x_j = 0 for j < i, x_i = 1."""
    inf_gens = [restrict_to_infinity(fh) for fh in S.homogenized()]
    charts = []
    for i, pivot in enumerate(S.vars[:-1]):
        assignment = {v: 0 for v in S.vars[:i]}
        assignment[pivot] = 1
        gens = [g.set_vars(assignment) for g in inf_gens]
        ring = S.vars[i + 1:]
        charts.append((pivot, Ideal(gens, ring)))
    return charts


@lru_cache(maxsize=256)
def solutions_at_infinity(S):
    """Existence and finiteness of solutions of the homogenized system with x0 = 0.

    Existence is decided by saturation: some coordinate x_i (i < n) fails to
    vanish identically on the infinity ideal.  Finiteness is decided chart by
    chart.  The two views must agree on existence; a mismatch is a bug.
    """
    inf_gens = [restrict_to_infinity(fh) for fh in S.homogenized()]
    I_inf = Ideal(inf_gens, S.vars)
    exists = False
    for pivot in S.vars[:-1]:
        sat = saturation(I_inf, MPoly.variable(S.vars, pivot))
        if not sat.is_unit():
            exists = True
            break
    witnesses = []
    any_nonempty = False
    finite = True
    for pivot, chart in infinity_chart_ideals(S):
        nonempty = not chart.is_unit()
        any_nonempty = any_nonempty or nonempty
        dim = quotient_dim(chart.ideal if False else chart)
        chart_finite = dim != INFINITE
        finite = finite and chart_finite
        gen = None
        rational = ()
        if nonempty and chart_finite:
            gen = elimination_generator(chart)
            if gen:
                rational = tuple(r for r, _ in rational_roots(gen))
        witnesses.append(ChartWitness(pivot, nonempty, chart_finite, gen, rational))
    if exists != any_nonempty:
        raise AssertionViolation(
            "saturation and chart decompositions disagree about solutions at infinity")
    return InfinityReport(exists, finite, tuple(witnesses))


def gcd_leading_coeffs(S):
    """For n = 2: the monic gcd of the leading x1-coefficients.

    Nonconstant exactly when there are solutions at infinity.
    """
    if S.n != 2:
        raise WrongArity("leading-coefficient test needs n = 2")
    from .mpoly import leading_coeff_x1
    return upoly_gcd(leading_coeff_x1(S.polys[0]), leading_coeff_x1(S.polys[1]))


def shape_from_parametric(d, d0, ds):
    """Shape basis of J = <d(xn), d0(xn)*x_i - d_i(xn)> by gcd reduction.

    Repeatedly splits off e0 = gcd(d, d0) and rewrites the generators with a
    Bezout identity, strictly decreasing deg d; ends by inverting d0 modulo d.
    Returns UNIT_IDEAL when d collapses to a nonzero constant.
    """
    if not d:
        raise ZeroModulus("the modulus polynomial is zero")
    ds = list(ds)
    total = d
    for q in [d0] + ds:
        total = upoly_gcd(total, q)
    if total.degree != 0:
        raise GcdNotOne(f"common factor {total}; the ideal is not zero-dimensional")
    from .upoly import extended_gcd
    while True:
        if d.degree == 0:
            return UNIT_IDEAL
        e0 = upoly_gcd(d, d0)
        if e0.degree == 0:
            break
        e = d // e0
        E = d0 // e0
        _, A, B = extended_gcd(e, E)
        if e.degree == 0:
            return UNIT_IDEAL
        ds = [(B * di) % e for di in ds]
        d, d0 = e.monic(), e0
    # gcd(d, d0) = 1: invert d0 modulo d and read off the shape generators
    _, inv, _ = extended_gcd(d0, d)
    r = d.monic()
    g = tuple(((inv * di) % r) for di in ds)
    return ShapeBasis(r, g)


# -- report plumbing -----------------------------------------------------------

def _hypothesis_report(theorem, hyps):
    failed = next((k for k, v in hyps.items() if not v), None)
    return TheoremReport(theorem, hyps, failed)


def _resultant_and_elim(S, I):
    R = hidden_variable_resultant(S).poly
    r = elimination_generator(I)
    elim_by_R = bool(R) and R.monic() == r
    return R, r, elim_by_R


def _rs_ideal(S, R, ps):
    gens = [MPoly.from_upoly(R, S.vars, S.hidden_var)] + list(ps)
    return Ideal([g for g in gens if g], S.vars)


def check_shape_vs_elimination(S):
    """Checker 1.1: with injective projection, among (shape, no solutions at
    infinity, elimination generated by the resultant) any two imply the third."""
    I = system_ideal(S)
    zero_dim = _proper_zero_dimensional(I)
    hyps = {"zero_dimensional": zero_dim,
            "injective_projection": projection_injective(I) if zero_dim else False}
    if not all(hyps.values()):
        return _hypothesis_report("1.1", hyps)
    shape = has_shape_lemma(I)
    inf = solutions_at_infinity(S)
    R, r, elim_by_R = _resultant_and_elim(S, I)
    conditions = {"shape_lemma": shape is not None,
                  "no_solutions_at_infinity": not inf.exists,
                  "elimination_generated_by_resultant": elim_by_R}
    if sum(conditions.values()) == 2:
        raise AssertionViolation(f"two-imply-third logic violated: {conditions}")
    details = {"resultant": str(R), "elimination_generator": str(r)}
    if shape:
        details["r"] = str(shape.r)
    return TheoremReport("1.1", hyps, None, conditions, details, "pass")


def check_generator_equivalences(S):
    """Checker 1.3: equivalence of (shape + no infinity), (elimination by the
    resultant + gcd(R, s0) = 1), and (ideal generated by R and the p_i +
    elimination by the resultant); plus the subset elimination claim."""
    I = system_ideal(S)
    hyps = {"zero_dimensional": _proper_zero_dimensional(I),
            "critical_degree_positive": S.critical_degree >= 1}
    if not all(hyps.values()):
        return _hypothesis_report("1.3", hyps)
    shape = has_shape_lemma(I)
    inf = solutions_at_infinity(S)
    R, r, elim_by_R = _resultant_and_elim(S, I)
    sub = first_subresultant_polys(S)
    s0 = sub.s_list()[0]
    gcd_R_s0 = upoly_gcd(R, s0)
    generated = ideal_equal(I, _rs_ideal(S, R, sub.p))
    c1 = shape is not None and not inf.exists
    c2 = elim_by_R and gcd_R_s0 == 1
    c3 = generated and elim_by_R
    conditions = {"shape_and_no_infinity": c1,
                  "elim_by_resultant_and_gcd_one": c2,
                  "generated_by_resultant_and_p": c3}
    details = {"shape_lemma": str(shape is not None).lower(),
               "no_solutions_at_infinity": str(not inf.exists).lower(),
               "elimination_generated_by_resultant": str(elim_by_R).lower(),
               "gcd_resultant_s0": str(gcd_R_s0),
               "generated_by_resultant_and_p": str(generated).lower(),
               "resultant": str(R), "elimination_generator": str(r)}
    if not (c1 == c2 == c3):
        raise AssertionViolation(f"equivalence violated: {conditions}")
    if c1:
        _check_subset_eliminations(S, I, R, sub)
        details["subset_eliminations"] = "verified"
    return TheoremReport("1.3", hyps, None, conditions, details, "pass")


def _check_subset_eliminations(S, I, R, sub):
    """I ∩ Q[x_{i1}..x_{il}, xn] = <R, p_{i1}, ..., p_{il}> for every subset."""
    xn = S.hidden_var
    heads = S.vars[:-1]
    for size in range(len(heads) + 1):
        for subset in combinations(range(len(heads)), size):
            keep = tuple(heads[i] for i in subset) + (xn,)
            left = elimination_ideal(I, keep)
            gens = [MPoly.from_upoly(R, keep, xn)]
            for i in subset:
                gens.append(sub.p[i].change_ring(keep))
            right = Ideal(gens, keep)
            if not ideal_equal(left, right):
                raise AssertionViolation(
                    f"subset elimination claim failed for variables {keep}")


def check_subresultant_generators(S):
    """Checker 1.4: when I = <R, p_1, ..., p_{n-1}>, the full gcd is 1 and the
    ideal is in shape position; elimination-by-R, gcd(R, s0) = 1 and absence
    of solutions at infinity are equivalent."""
    I = system_ideal(S)
    hyps = {"zero_dimensional": _proper_zero_dimensional(I),
            "critical_degree_positive": S.critical_degree >= 1}
    if not all(hyps.values()):
        return _hypothesis_report("1.4", hyps)
    R, r, elim_by_R = _resultant_and_elim(S, I)
    sub = first_subresultant_polys(S)
    generated = ideal_equal(I, _rs_ideal(S, R, sub.p))
    hyps["generators_match"] = generated
    if not generated:
        report = _hypothesis_report("1.4", hyps)
        return TheoremReport("1.4", hyps, "GeneratorsMismatch",
                             details={"resultant": str(R)})
    s_list = sub.s_list()
    full_gcd = R
    for s in s_list:
        full_gcd = upoly_gcd(full_gcd, s)
    if full_gcd != 1:
        raise AssertionViolation(f"gcd(R, s_0..s_{S.n - 1}) = {full_gcd} != 1")
    shape = has_shape_lemma(I)
    if shape is None:
        raise AssertionViolation("generators match but no Shape Lemma")
    inf = solutions_at_infinity(S)
    gcd_R_s0 = upoly_gcd(R, s_list[0])
    c3, c4, c5 = elim_by_R, gcd_R_s0 == 1, not inf.exists
    conditions = {"full_gcd_one": True, "shape_lemma": True,
                  "elimination_generated_by_resultant": c3,
                  "gcd_resultant_s0_one": c4,
                  "no_solutions_at_infinity": c5}
    if not (c3 == c4 == c5):
        raise AssertionViolation(f"equivalence of (3)(4)(5) violated: {conditions}")
    details = {"gcd_resultant_s0": str(gcd_R_s0), "resultant": str(R),
               "elimination_generator": str(r), "r": str(shape.r)}
    return TheoremReport("1.4", hyps, None, conditions, details, "pass")


def check_bezout_degree_criterion(S):
    """Checker 5.6 (n = 2): if deg R equals the product of the total degrees
    and R has distinct roots, every condition of checker 1.3 holds."""
    if S.n != 2:
        raise WrongArity("the degree criterion is for n = 2")
    hyps = {"critical_degree_positive": S.critical_degree >= 1}
    if not all(hyps.values()):
        return _hypothesis_report("5.6", hyps)
    R = hidden_variable_resultant(S).poly
    m1, m2 = S.total_degrees
    deg_ok = bool(R) and R.degree == m1 * m2
    squarefree = bool(R) and upoly_gcd(R, R.derivative()) == 1
    conditions = {"degree_is_product_of_total_degrees": deg_ok,
                  "distinct_roots": squarefree}
    details = {"resultant": str(R), "degree": str(R.degree),
               "total_degree_product": str(m1 * m2)}
    if not (deg_ok and squarefree):
        return TheoremReport("5.6", {**hyps, **conditions},
                             next(k for k, v in conditions.items() if not v),
                             conditions, details)
    inner = check_generator_equivalences(S)
    if not inner.ok or not all(inner.conditions.values()):
        raise AssertionViolation(
            f"degree criterion held but the equivalences failed: {inner.conditions}")
    details["equivalences"] = "all conditions verified"
    return TheoremReport("5.6", hyps, None, conditions, details, "pass")


CHECKERS = {"1.1": check_shape_vs_elimination,
            "1.3": check_generator_equivalences,
            "1.4": check_subresultant_generators,
            "5.6": check_bezout_degree_criterion}
