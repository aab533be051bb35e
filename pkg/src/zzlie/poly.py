"""Exact coefficient arithmetic: rationals and sparse multivariate polynomials.

Rationals are ``fractions.Fraction`` (arbitrary precision, always canonical).
Polynomials are stored as a sparse map from exponent vectors to rational
coefficients; zero coefficients are never stored, so equality of the term
maps is equality of polynomials.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "UsageError",
    "Rational",
    "parse_rational",
    "format_rational",
    "MultiPoly",
    "symbol",
    "const",
    "coefficient_of",
    "poly_eval",
    "rational_root_scan",
]


class UsageError(ValueError):
    """Raised when an operation is called outside its contract."""


Rational = Fraction

# A symbol is just its name; exponent vectors are sorted tuples of
# (name, positive exponent) pairs.
Monomial = tuple


def parse_rational(text):
    """Parse "p/q" or a plain integer literal into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational literal: {text!r}") from exc


def format_rational(value):
    """Canonical "p/q" form, sign on the numerator, denominator always shown."""
    f = Fraction(value)
    return f"{f.numerator}/{f.denominator}"


def _coerce_coeff(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise UsageError(f"cannot use {value!r} as a polynomial coefficient")


class MultiPoly:
    """Sparse multivariate polynomial over the rationals in named symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # Internal: `terms` must already be canonical (no zero coefficients,
        # monomial keys sorted, exponents positive).  Use symbol()/const().
        self.terms = {} if terms is None else terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def const(cls, value):
        c = _coerce_coeff(value)
        return cls({} if c == 0 else {(): c})

    @classmethod
    def symbol(cls, name):
        return cls({((name, 1),): Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def symbols(self):
        names = set()
        for mono in self.terms:
            for name, _ in mono:
                names.add(name)
        return names

    def is_constant(self):
        return all(mono == () for mono in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise UsageError("polynomial is not constant")
        return self.terms.get((), Fraction(0))

    def degree_in(self, name):
        deg = 0
        for mono in self.terms:
            for n, e in mono:
                if n == name:
                    deg = max(deg, e)
        return deg

    # -- equality / hashing ------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MultiPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _as_poly(value):
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.const(value)

    def __add__(self, other):
        other = self._as_poly(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._as_poly(other))

    def __rsub__(self, other):
        return self._as_poly(other) + (-self)

    def __mul__(self, other):
        other = self._as_poly(other)
        out = {}
        for m1, c1 in self.terms.items():
            d1 = dict(m1)
            for m2, c2 in other.terms.items():
                exps = dict(d1)
                for name, e in m2:
                    exps[name] = exps.get(name, 0) + e
                mono = tuple(sorted(exps.items()))
                s = out.get(mono, 0) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise UsageError("polynomial powers must be non-negative integers")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- structural operations --------------------------------------------

    def coefficient_of(self, name, degree):
        """The polynomial (in the remaining symbols) multiplying name**degree."""
        if degree < 0:
            raise UsageError("degree must be non-negative")
        out = {}
        for mono, c in self.terms.items():
            exps = dict(mono)
            if exps.pop(name, 0) != degree:
                continue
            out[tuple(sorted(exps.items()))] = c
        return MultiPoly(out)

    def substitute(self, assignment):
        """Partial evaluation: replace the given symbols by rationals."""
        result = MultiPoly()
        for mono, c in self.terms.items():
            factor = _coerce_coeff(c)
            rest = {}
            for name, e in mono:
                if name in assignment:
                    factor *= _coerce_coeff(assignment[name]) ** e
                else:
                    rest[name] = e
            if factor:
                result = result + MultiPoly({tuple(sorted(rest.items())): factor})
        return result

    def eval(self, assignment):
        """Full exact evaluation; every occurring symbol must be assigned."""
        missing = self.symbols() - set(assignment)
        if missing:
            raise UsageError(f"unassigned symbols: {sorted(missing)}")
        return self.substitute(assignment).constant_value()

    # -- serialization -----------------------------------------------------

    def to_records(self):
        """Sorted list of {"exponents": {...}, "coeff": "p/q"} records."""
        records = []
        for mono in sorted(self.terms):
            records.append(
                {"exponents": dict(mono), "coeff": format_rational(self.terms[mono])}
            )
        return records

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            factors = [] if c == 1 and mono else [str(c)]
            for name, e in mono:
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)


def symbol(name):
    return MultiPoly.symbol(name)


def const(value):
    return MultiPoly.const(value)


def coefficient_of(p, name, degree):
    return p.coefficient_of(name, degree)


def poly_eval(p, assignment):
    return p.eval(assignment)


def rational_root_scan(p, candidates):
    """Roots of a univariate polynomial among an explicit candidate set.

    No factorization is attempted: every candidate is substituted exactly and
    kept iff the value is zero.
    """
    syms = p.symbols()
    if len(syms) > 1:
        raise UsageError(f"rational_root_scan needs a univariate polynomial, got symbols {sorted(syms)}")
    name = next(iter(syms)) if syms else None
    roots = set()
    for cand in candidates:
        cand = Fraction(cand)
        if name is None:
            if p.is_zero():
                roots.add(cand)
        elif p.eval({name: cand}) == 0:
            roots.add(cand)
    return roots


def proportionality(p, q):
    """The nonzero rational c with p == c*q, or None if there is none.

    Used to check that a derived polynomial equals a reference product of
    factors up to a rational scale (exact division with rational remainder).
    """
    if p.is_zero() or q.is_zero():
        return None
    mono = next(iter(q.terms))
    if mono not in p.terms:
        return None
    c = p.terms[mono] / q.terms[mono]
    if c != 0 and p == q * c:
        return c
    return None
