"""Sparse multivariate polynomials over exact rationals.

A monomial is an exponent tuple aligned with the ambient variable list; a
polynomial maps monomials to nonzero Fraction coefficients.  The variable
list fixes the term order: position 0 is the largest variable in lex, so a
system in x1..xn eliminates toward xn, and the homogenization variable x0
(when present) occupies the first slot.

Values are immutable after construction and safe to share.
"""

from fractions import Fraction

from .errors import ArityMismatch, DegenerateDegree, DegreeTooSmall, WrongArity
from .upoly import UPoly

HOMOG_VAR = "x0"


# -- monomial helpers (exponent tuples) --------------------------------------

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))

def mono_divides(a, b):
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))

def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))

def mono_degree(a):
    return sum(a)

def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))

def lex_key(e):
    return e

ORDER_KEYS = {"lex": lex_key, "grevlex": grevlex_key}


class MPoly:
    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars, terms=()):
        self.vars = tuple(vars)
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for mono, coeff in items:
            if not isinstance(coeff, Fraction):
                coeff = Fraction(coeff)
            if coeff:
                mono = tuple(mono)
                if len(mono) != len(self.vars):
                    raise ValueError("monomial length does not match variable count")
                data[mono] = data.get(mono, Fraction(0)) + coeff
                if not data[mono]:
                    del data[mono]
        self.terms = data
        self._hash = None

    @classmethod
    def zero(cls, vars):
        return cls(vars)

    @classmethod
    def const(cls, vars, c):
        return cls(vars, {(0,) * len(vars): Fraction(c)})

    @classmethod
    def variable(cls, vars, name):
        e = [0] * len(vars)
        e[tuple(vars).index(name)] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            if isinstance(other, (int, Fraction)):
                other = MPoly.const(self.vars, other)
            else:
                return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError("mixed ambient rings")
            return other
        return MPoly.const(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return MPoly._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly(self.vars)
            other = Fraction(other)
            return MPoly._raw(self.vars, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MPoly._raw(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = MPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @classmethod
    def _raw(cls, vars, terms):
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    def total_degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def degree_of(self, name):
        i = self.vars.index(name)
        return max((m[i] for m in self.terms), default=-1)

    def degree_in(self, names):
        idx = [self.vars.index(v) for v in names]
        return max((sum(m[i] for i in idx) for m in self.terms), default=-1)

    def coeffs_in(self, name):
        """Coefficients with respect to one variable: {exponent: MPoly without it}."""
        i = self.vars.index(name)
        rest = self.vars[:i] + self.vars[i + 1:]
        out = {}
        for m, c in self.terms.items():
            key = m[i]
            sub = m[:i] + m[i + 1:]
            out.setdefault(key, {})[sub] = c
        return {k: MPoly._raw(rest, v) for k, v in out.items()}

    def as_upoly(self, name=None):
        """View a polynomial involving a single variable as a UPoly."""
        living = [i for i in range(len(self.vars)) if any(m[i] for m in self.terms)]
        if name is None:
            if len(living) > 1:
                raise ValueError("polynomial is not univariate")
            name = self.vars[living[0]] if living else self.vars[-1]
        i = self.vars.index(name)
        if any(j != i for j in living):
            raise ValueError(f"polynomial involves more than {name}")
        coeffs = [Fraction(0)] * (self.degree_of(name) + 1)
        for m, c in self.terms.items():
            coeffs[m[i]] = c
        return UPoly(coeffs, name)

    @classmethod
    def from_upoly(cls, u, vars, name=None):
        name = name or u.var
        i = tuple(vars).index(name)
        terms = {}
        for k, c in enumerate(u.coeffs):
            if c:
                e = [0] * len(vars)
                e[i] = k
                terms[tuple(e)] = c
        return cls(vars, terms)

    def change_ring(self, new_vars):
        """Re-express over another variable list (dropped variables must not occur)."""
        new_vars = tuple(new_vars)
        pos = {v: i for i, v in enumerate(new_vars)}
        out = {}
        for m, c in self.terms.items():
            e = [0] * len(new_vars)
            for v, exp in zip(self.vars, m):
                if exp:
                    if v not in pos:
                        raise ValueError(f"variable {v} does not exist in target ring")
                    e[pos[v]] = exp
            out[tuple(e)] = c
        return MPoly._raw(new_vars, out)

    def set_vars(self, assignment):
        """Substitute rational values for some variables and drop them from the ring."""
        keep = [i for i, v in enumerate(self.vars) if v not in assignment]
        values = {i: Fraction(assignment[v]) for i, v in enumerate(self.vars) if v in assignment}
        new_vars = tuple(self.vars[i] for i in keep)
        out = {}
        for m, c in self.terms.items():
            for i, val in values.items():
                if m[i]:
                    c = c * val ** m[i]
                if not c:
                    break
            if not c:
                continue
            key = tuple(m[i] for i in keep)
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                del out[key]
        return MPoly._raw(new_vars, out)

    def substitute(self, mapping):
        """Substitute polynomials (same ring) for variables."""
        subs = {self.vars.index(v): p for v, p in mapping.items()}
        acc = MPoly(self.vars)
        for m, c in self.terms.items():
            term = MPoly.const(self.vars, c)
            plain = list(m)
            for i, p in subs.items():
                if m[i]:
                    term = term * p ** m[i]
                    plain[i] = 0
            term = term * MPoly._raw(self.vars, {tuple(plain): Fraction(1)})
            acc = acc + term
        return acc

    def evaluate(self, point):
        """Value at a full rational point given as {var: value}."""
        acc = Fraction(0)
        values = [Fraction(point[v]) for v in self.vars]
        for m, c in self.terms.items():
            term = c
            for e, val in zip(m, values):
                if e:
                    term *= val ** e
            acc += term
        return acc

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: lex_key(mc[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = []
            for v, e in zip(self.vars, mono):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            if not factors:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(coeff))] + factors)
            if not parts:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append((" - " if coeff < 0 else " + ") + body)
        return "".join(parts)

    def __repr__(self):
        return f"MPoly({self})"


# -- homogenization and friends ----------------------------------------------

def homogenize_partial(f, degree):
    """Homogenize with x0 up to `degree` counted in all variables but the last.

    The last variable plays the role of a coefficient; setting x0 = 1
    recovers f.
    """
    if HOMOG_VAR in f.vars:
        raise ValueError("input already contains the homogenization variable")
    head = len(f.vars) - 1
    actual = max((sum(m[:head]) for m in f.terms), default=0)
    if degree < actual:
        raise DegreeTooSmall(f"degree {degree} below actual degree {actual}")
    new_vars = (HOMOG_VAR,) + f.vars
    out = {}
    for m, c in f.terms.items():
        w = sum(m[:head])
        out[(degree - w,) + m] = c
    return MPoly._raw(new_vars, out)


def restrict_to_infinity(fh):
    """Set the homogenization variable to zero and drop it from the ring."""
    if not fh.vars or fh.vars[0] != HOMOG_VAR:
        raise ValueError("expected a polynomial with leading x0 slot")
    out = {m[1:]: c for m, c in fh.terms.items() if m[0] == 0}
    return MPoly._raw(fh.vars[1:], out)


def leading_coeff_x1(f):
    """For a two-variable polynomial, the coefficient of the top power of x1."""
    if len(f.vars) != 2:
        raise WrongArity("leading coefficient shortcut needs exactly two variables")
    d = f.degree_of(f.vars[0])
    if d < 0:
        return UPoly.zero(f.vars[1])
    lead = f.coeffs_in(f.vars[0])[d]
    return lead.as_upoly(f.vars[1])


class PolySystem:
    """An ordered square system f1..fn in x1..xn with its degree data.

    `degrees` counts only the first n-1 variables (the last one is hidden in
    the coefficients); `critical_degree` is their sum minus n and
    `total_degrees` are the usual total degrees.
    """

    __slots__ = ("polys", "vars", "degrees", "critical_degree", "total_degrees",
                 "_homogenized", "_hash")

    def __init__(self, polys):
        polys = tuple(polys)
        if not polys:
            raise ArityMismatch("empty system")
        vars = polys[0].vars
        n = len(vars)
        if n < 2:
            raise ArityMismatch("need at least two variables")
        if len(polys) != n:
            raise ArityMismatch(f"{len(polys)} polynomials for {n} variables")
        head = vars[:-1]
        degrees = []
        for i, f in enumerate(polys):
            if f.vars != vars:
                raise ArityMismatch("polynomials live in different rings")
            d = f.degree_in(head)
            if d < 1:
                raise DegenerateDegree(f"f{i + 1} has degree {max(d, 0)} in {', '.join(head)}")
            degrees.append(d)
        self.polys = polys
        self.vars = vars
        self.degrees = tuple(degrees)
        self.critical_degree = sum(degrees) - n
        self.total_degrees = tuple(f.total_degree() for f in polys)
        self._homogenized = None
        self._hash = None

    @property
    def n(self):
        return len(self.vars)

    @property
    def hidden_var(self):
        return self.vars[-1]

    def homogenized(self):
        if self._homogenized is None:
            self._homogenized = tuple(
                homogenize_partial(f, d) for f, d in zip(self.polys, self.degrees))
        return self._homogenized

    def __eq__(self, other):
        return isinstance(other, PolySystem) and self.polys == other.polys

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.polys)
        return self._hash

    def __repr__(self):
        return f"PolySystem(n={self.n}, d={self.degrees}, rho={self.critical_degree})"
