"""Buchberger engine and ideal-level queries.

The elimination order is fixed throughout the package: lex with
x1 > x2 > ... > xn, so the hidden variable xn is smallest.  Reduced bases are
unique per order and cached on the Ideal instance; all operations are pure,
so concurrent recomputation is harmless.

The pair loop is bounded by the SHAPERES_MAX_PAIRS environment variable
(default 200000) to keep runaway inputs diagnosable.
"""

import math
import os
from fractions import Fraction
from functools import lru_cache
from heapq import heappush, heappop

from .errors import NotZeroDimensional, WorkLimitExceeded
from .mpoly import (MPoly, ORDER_KEYS, lex_key, mono_div, mono_divides,
                    mono_lcm, mono_mul)
from .upoly import UPoly, squarefree_part

INFINITE = math.inf

DEFAULT_MAX_PAIRS = 200000


def _max_pairs():
    raw = os.environ.get("SHAPERES_MAX_PAIRS", "")
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_MAX_PAIRS


# -- dict-level core ----------------------------------------------------------
# A polynomial here is a dict {exponent tuple: Fraction}; basis elements are
# kept monic so reduction needs no divisions.

def _leading(p, key):
    return max(p, key=key)


def _normal_form(p, basis, key):
    """Fully reduce p against a list of (lt, poly) with monic polys."""
    p = dict(p)
    rem = {}
    while p:
        m = max(p, key=key)
        c = p.pop(m)
        for lt, g in basis:
            if mono_divides(lt, m):
                shift = mono_div(m, lt)
                for e, ce in g.items():
                    if e == lt:
                        continue
                    t = mono_mul(e, shift)
                    s = p.get(t, _ZERO) - c * ce
                    if s:
                        p[t] = s
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
    return rem


_ZERO = Fraction(0)


def _monic(p, key):
    lc = p[max(p, key=key)]
    if lc == 1:
        return dict(p)
    inv = 1 / lc
    return {m: c * inv for m, c in p.items()}


def _buchberger(gens, key, max_pairs=None):
    """Reduced Groebner basis of the given polynomial dicts for the key order."""
    if max_pairs is None:
        max_pairs = _max_pairs()
    seed = sorted((_monic(g, key) for g in gens if g),
                  key=lambda g: key(max(g, key=key)))
    G = []      # (lt, poly)
    sugars = []
    pairs = []  # heap of (sugar, lcm key, i, j)

    def add_poly(p, sugar):
        lt = max(p, key=key)
        if len(p) == 1 and sum(lt) == 0:
            return True  # the ideal is the whole ring
        idx = len(G)
        for j, (ltj, _) in enumerate(G):
            lcm = mono_lcm(lt, ltj)
            s = max(sugars[j] + sum(mono_div(lcm, ltj)), sugar + sum(mono_div(lcm, lt)))
            heappush(pairs, (s, key(lcm), j, idx))
        G.append((lt, p))
        sugars.append(sugar)
        return False

    unit = False
    for g in seed:
        if add_poly(g, sum(max(g, key=key))):
            unit = True
            break

    processed = 0
    while pairs and not unit:
        sugar, lcmkey, i, j = heappop(pairs)
        processed += 1
        if processed > max_pairs:
            raise WorkLimitExceeded(
                f"more than {max_pairs} S-pairs; raise SHAPERES_MAX_PAIRS to override")
        lti, gi = G[i]
        ltj, gj = G[j]
        lcm = mono_lcm(lti, ltj)
        if mono_mul(lti, ltj) == lcm:
            continue  # coprime leading terms
        si, sj = mono_div(lcm, lti), mono_div(lcm, ltj)
        s = {}
        for e, c in gi.items():
            s[mono_mul(e, si)] = c
        for e, c in gj.items():
            t = mono_mul(e, sj)
            v = s.get(t, _ZERO) - c
            if v:
                s[t] = v
            else:
                s.pop(t, None)
        h = _normal_form(s, G, key)
        if h:
            if add_poly(_monic(h, key), sugar):
                unit = True

    if unit:
        width = len(max(seed[0], key=key))
        return [{(0,) * width: Fraction(1)}]

    # minimal generators: drop any element whose LT is divisible by another LT
    items = sorted(((lt, p) for lt, p in G), key=lambda lp: key(lp[0]))
    minimal = []
    for lt, p in items:
        if not any(mono_divides(lt2, lt) for lt2, _ in minimal):
            minimal.append((lt, p))

    # tail-reduce to the unique reduced basis
    changed = True
    while changed:
        changed = False
        for i in range(len(minimal)):
            lt, p = minimal[i]
            others = minimal[:i] + minimal[i + 1:]
            h = _normal_form(p, others, key)
            h = _monic(h, key)
            if h != p:
                minimal[i] = (max(h, key=key), h)
                changed = True
    minimal.sort(key=lambda lp: key(lp[0]), reverse=True)
    return [p for _, p in minimal]


# -- Ideal and public operations ----------------------------------------------

class Ideal:
    """An ideal of Q[vars] given by generators, with a cached reduced lex basis."""

    __slots__ = ("gens", "vars", "_bases", "_staircase_cache")

    def __init__(self, gens, vars=None):
        gens = tuple(g for g in gens if g)
        if vars is None:
            if not gens:
                raise ValueError("zero ideal needs an explicit variable list")
            vars = gens[0].vars
        vars = tuple(vars)
        for g in gens:
            if g.vars != vars:
                raise ValueError("generators live in different rings")
        self.gens = gens
        self.vars = vars
        self._bases = {}
        self._staircase_cache = None

    def basis(self, order="lex"):
        """Reduced Groebner basis for the order, cached."""
        if order not in self._bases:
            key = ORDER_KEYS[order]
            dicts = _buchberger([g.terms for g in self.gens], key)
            self._bases[order] = tuple(MPoly._raw(self.vars, d) for d in dicts)
        return self._bases[order]

    def is_unit(self):
        b = self.basis()
        return len(b) == 1 and b[0].total_degree() == 0

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))})"


def groebner_basis(I, order="lex"):
    """Reduced Groebner basis, leading terms descending."""
    return list(I.basis(order))


def normal_form(f, I):
    """Remainder of f on division by the reduced lex basis of I."""
    if f.vars != I.vars:
        f = f.change_ring(I.vars)
    basis = [(max(g.terms, key=lex_key), g.terms) for g in I.basis()]
    return MPoly._raw(I.vars, _normal_form(f.terms, basis, lex_key))


def ideal_member(f, I):
    """True iff f reduces to zero modulo I."""
    return not normal_form(f, I)


def ideal_equal(I, J):
    """True iff the reduced lex bases coincide."""
    if I.vars != J.vars:
        raise ValueError("ideals live in different rings")
    return I.basis() == J.basis()


def elimination_ideal(I, keep):
    """Generators of the intersection with Q[keep], as an ideal of that subring.

    `keep` must be a subset of the ambient variables; the result keeps their
    original relative order.
    """
    keep = [v for v in I.vars if v in set(keep)]
    if not keep:
        raise ValueError("keep set is empty")
    keep_set = set(keep)
    if tuple(keep) == I.vars[len(I.vars) - len(keep):]:
        basis = I.basis()  # lex basis already eliminates a prefix
    else:
        perm = tuple(v for v in I.vars if v not in keep_set) + tuple(keep)
        permuted = Ideal([g.change_ring(perm) for g in I.gens], perm)
        basis = permuted.basis()
    kept = [g for g in basis
            if all(not e or v in keep_set for m in g.terms for v, e in zip(g.vars, m))]
    return Ideal([g.change_ring(tuple(keep)) for g in kept], tuple(keep))


def elimination_generator(I):
    """Monic generator of I ∩ Q[xn] (the zero polynomial when the intersection is 0)."""
    xn = I.vars[-1]
    elim = elimination_ideal(I, [xn])
    if not elim.gens:
        return UPoly.zero(xn)
    basis = elim.basis()
    return basis[0].as_upoly(xn).monic()


def staircase(I):
    """Monomials below the leading-term staircase, or None when infinite."""
    if I._staircase_cache is None:
        basis = I.basis()
        lts = [max(g.terms, key=lex_key) for g in basis]
        nvars = len(I.vars)
        box = []
        for i in range(nvars):
            pures = [lt[i] for lt in lts if all(e == 0 for j, e in enumerate(lt) if j != i)]
            if not pures:
                I._staircase_cache = (None,)
                return None
            box.append(min(pures))
        mons = [()]
        for b in box:
            mons = [m + (e,) for m in mons for e in range(b)]
        result = tuple(m for m in mons if not any(mono_divides(lt, m) for lt in lts))
        I._staircase_cache = (result,)
    return I._staircase_cache[0]


def quotient_dim(I):
    """Vector-space dimension of Q[vars]/I, or INFINITE."""
    mons = staircase(I)
    return INFINITE if mons is None else len(mons)


def is_zero_dimensional(I):
    """Finite and nonzero quotient: the variety is a nonempty finite set."""
    d = quotient_dim(I)
    return d != INFINITE and d >= 1


def saturation(I, g):
    """(I : g^infinity) computed with a tag variable t and the relation 1 - t*g."""
    if not g:
        raise ValueError("saturation by zero")
    tag = "t_sat"
    ring = (tag,) + I.vars
    gens = [p.change_ring(ring) for p in I.gens]
    rel = MPoly.const(ring, 1) - MPoly.variable(ring, tag) * g.change_ring(ring)
    big = Ideal(gens + [rel], ring)
    kept = [p for p in big.basis() if p.degree_of(tag) <= 0]
    return Ideal([p.change_ring(I.vars) for p in kept], I.vars)


def minimal_polynomial(I, var):
    """Monic generator of I ∩ Q[var] for a zero-dimensional ideal.

    Computed as the minimal polynomial of multiplication by var on the
    quotient, by linear algebra over the staircase monomials.
    """
    mons = staircase(I)
    if mons is None:
        raise NotZeroDimensional("infinite quotient")
    if not mons:
        return UPoly.one(var)
    index = {m: i for i, m in enumerate(mons)}
    dim = len(mons)
    basis = [(max(g.terms, key=lex_key), g.terms) for g in I.basis()]
    vi = I.vars.index(var)
    shift = tuple(1 if j == vi else 0 for j in range(len(I.vars)))

    # rows: reduced vectors with their expression in terms of the power sequence
    rows = []  # (pivot, vector, combo)
    current = {(0,) * len(I.vars): Fraction(1)}  # NF(var^0)
    power = 0
    while True:
        vec = [Fraction(0)] * dim
        for m, c in current.items():
            vec[index[m]] = c
        combo = [Fraction(0)] * (power + 1)
        combo[power] = Fraction(1)
        for pivot, rvec, rcombo in rows:
            c = vec[pivot]
            if c:
                for k in range(dim):
                    vec[k] -= c * rvec[k]
                for k in range(len(rcombo)):
                    combo[k] -= c * rcombo[k]
        nz = next((k for k, v in enumerate(vec) if v), None)
        if nz is None:
            return UPoly(combo, var)  # monic by construction
        inv = 1 / vec[nz]
        rows.append((nz, [v * inv for v in vec], [v * inv for v in combo]))
        power += 1
        nxt = {}
        for m, c in current.items():
            nxt[mono_mul(m, shift)] = c
        current = _normal_form(nxt, basis, lex_key)


def radical_zero_dim(I):
    """Radical of a zero-dimensional ideal (characteristic-zero shortcut):
    adjoin the squarefree part of each variable's minimal polynomial."""
    if quotient_dim(I) is INFINITE:
        raise NotZeroDimensional("radical shortcut needs a finite quotient")
    extra = []
    for v in I.vars:
        mp = minimal_polynomial(I, v)
        extra.append(MPoly.from_upoly(squarefree_part(mp), I.vars, v))
    return Ideal(list(I.gens) + extra, I.vars)


@lru_cache(maxsize=256)
def system_ideal(S):
    """The ideal generated by a system's polynomials (cached per system)."""
    return Ideal(S.polys, S.vars)
