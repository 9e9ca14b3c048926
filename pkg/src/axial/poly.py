"""Sparse bivariate polynomials over Q, with resultants, rational roots
and a small Buchberger engine.

The coefficient ring used throughout the package is Q[lam, mu]: exact
fractions in two fixed variables.  Rational scalars are plain
``fractions.Fraction`` values and coerce freely into polynomials, so code
that is generic over the coefficient ring can mix the two.  Nothing here
ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .linalg import det

VARS = ("lam", "mu")


def _var_index(var: str) -> int:
    if var not in VARS:
        raise ValueError(f"unknown variable {var!r}, expected one of {VARS}")
    return VARS.index(var)


class MultiPoly:
    """Polynomial in Q[lam, mu] stored as a map exponent pair -> coefficient.

    The zero polynomial is the empty map and no stored coefficient is zero.
    Instances are treated as immutable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff != 0:
                    i, j = exps
                    clean[(int(i), int(j))] = coeff
        self.terms = clean

    @staticmethod
    def const(value) -> "MultiPoly":
        return MultiPoly({(0, 0): Fraction(value)})

    @staticmethod
    def variable(var: str) -> "MultiPoly":
        idx = _var_index(var)
        exps = (1, 0) if idx == 0 else (0, 1)
        return MultiPoly({exps: Fraction(1)})

    # -- ring structure ---------------------------------------------------

    @staticmethod
    def _lift(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        other = MultiPoly._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = MultiPoly._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = MultiPoly._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = MultiPoly._lift(other)
        if other is None:
            return NotImplemented
        terms = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = MultiPoly._lift(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    # -- queries ----------------------------------------------------------

    def coefficient(self, i: int, j: int) -> Fraction:
        return self.terms.get((i, j), Fraction(0))

    def degree(self, var: str | None = None) -> int:
        """Degree in one variable, or total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(i + j for i, j in self.terms)
        idx = _var_index(var)
        return max(e[idx] for e in self.terms)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coefficient(0, 0)

    def evaluate(self, lam, mu) -> Fraction:
        lam, mu = Fraction(lam), Fraction(mu)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * lam**i * mu**j
        return total

    def substitute(self, lam=None, mu=None) -> "MultiPoly":
        """Partially evaluate; variables left as None stay symbolic."""
        terms = {}
        for (i, j), c in self.terms.items():
            if lam is not None:
                c = c * Fraction(lam) ** i
                i = 0
            if mu is not None:
                c = c * Fraction(mu) ** j
                j = 0
            terms[(i, j)] = terms.get((i, j), Fraction(0)) + c
        return MultiPoly(terms)

    # -- presentation -----------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: _grevlex_key(t[0]), reverse=True):
            factors = []
            if i:
                factors.append("lam" if i == 1 else f"lam^{i}")
            if j:
                factors.append("mu" if j == 1 else f"mu^{j}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"MultiPoly({self})"

    def to_json(self) -> dict:
        return {f"{i},{j}": str(c) for (i, j), c in sorted(self.terms.items())}

    @staticmethod
    def from_json(data: dict) -> "MultiPoly":
        terms = {}
        for key, val in data.items():
            i, j = key.split(",")
            terms[(int(i), int(j))] = Fraction(val)
        return MultiPoly(terms)


ZERO = MultiPoly()
ONE = MultiPoly.const(1)
LAM = MultiPoly.variable("lam")
MU = MultiPoly.variable("mu")


def coefficients_in(f: MultiPoly, var: str) -> list[MultiPoly]:
    """Coefficients of f viewed as a polynomial in `var`, low to high.

    Entry k is a polynomial in the other variable.
    """
    idx = _var_index(var)
    deg = f.degree(var)
    if deg < 0:
        return []
    coeffs = [dict() for _ in range(deg + 1)]
    for e, c in f.terms.items():
        k = e[idx]
        rest = (0, e[1]) if idx == 0 else (e[0], 0)
        coeffs[k][rest] = c
    return [MultiPoly(d) for d in coeffs]


def from_coefficients(coeffs, var: str) -> MultiPoly:
    """Assemble a univariate polynomial in `var` from Fraction coefficients."""
    idx = _var_index(var)
    terms = {}
    for k, c in enumerate(coeffs):
        c = Fraction(c)
        if c:
            terms[(k, 0) if idx == 0 else (0, k)] = c
    return MultiPoly(terms)


def _other_var(var: str) -> str:
    return VARS[1 - _var_index(var)]


def _lagrange_coeffs(xs, ys) -> list[Fraction]:
    """Coefficients (low to high) of the interpolating polynomial."""
    n = len(xs)
    acc = [Fraction(0)] * n
    for k in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == k:
                continue
            # multiply basis by (t - xs[j])
            nxt = [Fraction(0)] * (len(basis) + 1)
            for d, c in enumerate(basis):
                nxt[d] += -xs[j] * c
                nxt[d + 1] += c
            basis = nxt
            denom *= xs[k] - xs[j]
        scale = ys[k] / denom
        for d, c in enumerate(basis):
            acc[d] += scale * c
    return acc


def resultant(f: MultiPoly, g: MultiPoly, eliminate: str) -> MultiPoly:
    """Sylvester resultant of f and g with respect to `eliminate`.

    The result is a polynomial in the remaining variable; it vanishes at
    exactly the values of that variable over which f and g share a root
    in the eliminated one.
    """
    if not f or not g:
        raise ValueError("resultant of a zero polynomial is not defined")
    m = f.degree(eliminate)
    n = g.degree(eliminate)
    if m < 1 or n < 1:
        raise ValueError(f"inputs must have positive degree in {eliminate}")
    kept = _other_var(eliminate)
    fc = coefficients_in(f, eliminate)
    gc = coefficients_in(g, eliminate)
    kf = max((c.degree(kept) for c in fc if c), default=0)
    kg = max((c.degree(kept) for c in gc if c), default=0)
    bound = n * max(kf, 0) + m * max(kg, 0)

    # Evaluate the Sylvester determinant at bound+1 points of the kept
    # variable and interpolate; this avoids polynomial-entry elimination.
    xs, ys = [], []
    t = 0
    while len(xs) < bound + 1:
        point = Fraction(t)
        size = m + n
        rows = []
        fr = [c.evaluate(point, point) for c in fc]  # univariate: safe to pass both
        gr = [c.evaluate(point, point) for c in gc]
        for shift in range(n):
            row = [Fraction(0)] * size
            for k, c in enumerate(fr):
                row[shift + (m - k)] = c
            rows.append(row)
        for shift in range(m):
            row = [Fraction(0)] * size
            for k, c in enumerate(gr):
                row[shift + (n - k)] = c
            rows.append(row)
        xs.append(point)
        ys.append(det(rows))
        t = -t if t > 0 else -t + 1
    coeffs = _lagrange_coeffs(xs, ys)
    return from_coefficients(coeffs, kept)


def rational_roots(f: MultiPoly) -> set[Fraction]:
    """All rational roots of a nonzero univariate polynomial, verified exactly."""
    if not f:
        raise ValueError("rational_roots of the zero polynomial")
    deg_l, deg_m = f.degree("lam"), f.degree("mu")
    if deg_l > 0 and deg_m > 0:
        raise ValueError("polynomial is not univariate")
    var = "lam" if deg_l > 0 else "mu"
    if f.is_constant():
        return set()
    coeffs = [c.constant_value() for c in coefficients_in(f, var)]

    roots = set()
    low = 0
    while coeffs[low] == 0:
        low += 1
    if low > 0:
        roots.add(Fraction(0))
    coeffs = coeffs[low:]
    if len(coeffs) == 1:
        return roots

    # Clear denominators and divide by content to get a primitive integer
    # polynomial with the same roots.
    denom_lcm = 1
    for c in coeffs:
        denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in coeffs]
    content = 0
    for c in ints:
        content = gcd(content, abs(c))
    ints = [c // content for c in ints]

    def divisors(n):
        n = abs(n)
        out = set()
        d = 1
        while d * d <= n:
            if n % d == 0:
                out.add(d)
                out.add(n // d)
            d += 1
        return out

    for p in divisors(ints[0]):
        for q in divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * cand + c
                if val == 0:
                    roots.add(cand)
    for r in roots:
        assert f.evaluate(r, r) == 0
    return roots


def univariate_gcd(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Monic gcd of two univariate polynomials in `var` over Q."""

    def coeff_list(p):
        return [c.constant_value() for c in coefficients_in(p, var)]

    def strip(cs):
        while cs and cs[-1] == 0:
            cs.pop()
        return cs

    a, b = strip(coeff_list(f)), strip(coeff_list(g))
    while b:
        # remainder of a modulo b
        a = a[:]
        while len(a) >= len(b) and a:
            factor = a[-1] / b[-1]
            shift = len(a) - len(b)
            for k in range(len(b)):
                a[shift + k] -= factor * b[k]
            strip(a)
        a, b = b, a
    if not a:
        return ZERO
    lead = a[-1]
    return from_coefficients([c / lead for c in a], var)


# -- Groebner bases (two variables, graded reverse lexicographic) ---------


def _grevlex_key(e):
    return (e[0] + e[1], -e[1])


def leading_term(f: MultiPoly):
    if not f:
        raise ValueError("zero polynomial has no leading term")
    e = max(f.terms, key=_grevlex_key)
    return e, f.terms[e]


def _divides(e, m):
    return e[0] <= m[0] and e[1] <= m[1]


def _monomial(e, c=1):
    return MultiPoly({e: Fraction(c)})


def reduce_poly(f: MultiPoly, basis) -> MultiPoly:
    """Remainder of f under multivariate division by `basis`."""
    rem = ZERO
    work = f
    while work:
        e, c = leading_term(work)
        for b in basis:
            be, bc = leading_term(b)
            if _divides(be, e):
                quot = _monomial((e[0] - be[0], e[1] - be[1]), c / bc)
                work = work - quot * b
                break
        else:
            rem = rem + _monomial(e, c)
            work = work - _monomial(e, c)
    return rem


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    fe, fc = leading_term(f)
    ge, gc = leading_term(g)
    lcm_e = (max(fe[0], ge[0]), max(fe[1], ge[1]))
    uf = _monomial((lcm_e[0] - fe[0], lcm_e[1] - fe[1]), Fraction(1, 1) / fc)
    ug = _monomial((lcm_e[0] - ge[0], lcm_e[1] - ge[1]), Fraction(1, 1) / gc)
    return uf * f - ug * g


def buchberger(gens) -> list[MultiPoly]:
    """Reduced Groebner basis (grevlex) of the ideal generated by `gens`."""
    basis = [g for g in gens if g]
    if not basis:
        return []
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    while pairs:
        i, j = pairs.pop()
        fe, _ = leading_term(basis[i])
        ge, _ = leading_term(basis[j])
        if min(fe[0], ge[0]) == 0 and min(fe[1], ge[1]) == 0:
            continue  # coprime leading monomials: S-polynomial reduces to zero
        rem = reduce_poly(s_polynomial(basis[i], basis[j]), basis)
        if rem:
            basis.append(rem)
            pairs.extend((k, len(basis) - 1) for k in range(len(basis) - 1))
    # interreduce to the unique reduced basis
    reduced = []
    for i, b in enumerate(basis):
        others = basis[:i] + basis[i + 1 :]
        rem = reduce_poly(b, others)
        if rem:
            reduced.append(rem)
    final = []
    for i, b in enumerate(reduced):
        rem = reduce_poly(b, reduced[:i] + reduced[i + 1 :])
        if rem:
            _, lc = leading_term(rem)
            final.append(rem * (Fraction(1) / lc))
    final.sort(key=lambda p: _grevlex_key(leading_term(p)[0]))
    return final


def standard_monomial_count(gens) -> int | None:
    """Dimension of Q[lam,mu]/(gens) as a vector space; None when infinite."""
    for g in gens:
        if not g:
            raise ValueError("generators must be nonzero")
    basis = buchberger(gens)
    if not basis:
        return None
    leads = [leading_term(b)[0] for b in basis]
    pure_lam = [e[0] for e in leads if e[1] == 0]
    pure_mu = [e[1] for e in leads if e[0] == 0]
    if not pure_lam or not pure_mu:
        return None
    count = 0
    for i in range(min(pure_lam)):
        for j in range(min(pure_mu)):
            if not any(_divides(e, (i, j)) for e in leads):
                count += 1
    return count
