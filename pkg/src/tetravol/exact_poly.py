"""Exact integer polynomial arithmetic.

Sparse multivariate polynomials over Z with a plain-text serialization
format.  Everything here is exact: coefficients are Python ints (or
Fractions where evaluation points are rational) and no floating point
is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction


class Monomial:
    """A single term: integer coefficient times a power product."""

    __slots__ = ("coeff", "exponents")

    def __init__(self, coeff, exponents):
        self.coeff = coeff
        self.exponents = tuple(int(e) for e in exponents)
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")

    @property
    def degree(self):
        return sum(self.exponents)

    def __eq__(self, other):
        return (isinstance(other, Monomial)
                and self.coeff == other.coeff
                and self.exponents == other.exponents)

    def __repr__(self):
        return "Monomial(%r, %r)" % (self.coeff, self.exponents)


class Polynomial:
    """Sparse polynomial in ``nvars`` variables with int coefficients.

    Terms are stored as a dict mapping exponent tuples to nonzero
    coefficients.  Instances should be treated as immutable; all
    operations return fresh objects.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = int(nvars)
        clean = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != self.nvars:
                    raise ValueError("exponent arity mismatch")
                if c:
                    key = tuple(int(e) for e in exps)
                    clean[key] = clean.get(key, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars, j):
        if not 0 <= j < nvars:
            raise ValueError("variable index out of range")
        exps = [0] * nvars
        exps[j] = 1
        return cls(nvars, {tuple(exps): 1})

    # -- inspection ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        """Largest sum of exponents, or -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def max_variable_degree(self):
        """Largest single exponent appearing in any term."""
        return max((max(e) for e in self.terms), default=0)

    def term_count(self):
        return len(self.terms)

    def monomials(self):
        """Terms in canonical order (exponent tuples sorted lexicographically)."""
        return [Monomial(self.terms[e], e) for e in sorted(self.terms)]

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), 0)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.nvars, out)

    def __neg__(self):
        return Polynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Polynomial.zero(self.nvars)
            return Polynomial(self.nvars,
                              {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, int):
            return Polynomial.constant(self.nvars, other)
        if not isinstance(other, Polynomial):
            raise TypeError("cannot combine with %r" % (other,))
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        return other

    def __eq__(self, other):
        return (isinstance(other, Polynomial)
                and self.nvars == other.nvars
                and self.terms == other.terms)

    def __repr__(self):
        n = len(self.terms)
        return "Polynomial(nvars=%d, %d term%s)" % (
            self.nvars, n, "" if n == 1 else "s")

    # -- evaluation and composition -----------------------------------

    def evaluate(self, point):
        """Evaluate at a point of ints or Fractions, exactly."""
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        total = 0
        powers = [{} for _ in range(self.nvars)]
        for exps, c in self.terms.items():
            v = c
            for j, e in enumerate(exps):
                if e:
                    cache = powers[j]
                    if e not in cache:
                        cache[e] = point[j] ** e
                    v *= cache[e]
            total += v
        return total

    def partial_derivative(self, j):
        if not 0 <= j < self.nvars:
            raise ValueError("variable index out of range")
        out = {}
        for exps, c in self.terms.items():
            e = exps[j]
            if e:
                key = exps[:j] + (e - 1,) + exps[j + 1:]
                out[key] = out.get(key, 0) + c * e
        return Polynomial(self.nvars, out)

    def substitute(self, images):
        """Compose with polynomials: variable j is replaced by images[j].

        All images must share a variable count, which becomes the
        variable count of the result.  Powers of the images are cached,
        so repeated exponents cost one multiplication each.
        """
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if not images:
            raise ValueError("nullary substitution")
        m = images[0].nvars
        for q in images:
            if q.nvars != m:
                raise ValueError("images disagree on variable count")
        power_cache = [{0: Polynomial.constant(m, 1)} for _ in range(self.nvars)]

        def power(j, e):
            cache = power_cache[j]
            if e not in cache:
                cache[e] = power(j, e - 1) * images[j]
            return cache[e]

        acc = Polynomial.zero(m)
        for exps, c in self.terms.items():
            piece = Polynomial.constant(m, c)
            for j, e in enumerate(exps):
                if e:
                    piece = piece * power(j, e)
            acc = acc + piece
        return acc

    def restrict_curve(self, curves):
        """Restrict along a curve: variable j becomes the univariate curves[j].

        Returns a UnivariatePoly in the curve parameter.
        """
        if len(curves) != self.nvars:
            raise ValueError("need one curve per variable")
        power_cache = [{0: UnivariatePoly([1])} for _ in range(self.nvars)]

        def power(j, e):
            cache = power_cache[j]
            if e not in cache:
                cache[e] = power(j, e - 1) * curves[j]
            return cache[e]

        acc = UnivariatePoly([])
        for exps, c in self.terms.items():
            piece = UnivariatePoly([c])
            for j, e in enumerate(exps):
                if e:
                    piece = piece * power(j, e)
            acc = acc + piece
        return acc

    # -- serialization ------------------------------------------------

    def serialize(self):
        """Canonical text form: one ``<coeff> <e1> ... <ek>`` line per term."""
        lines = []
        for exps in sorted(self.terms):
            lines.append(" ".join([str(self.terms[exps])] + [str(e) for e in exps]))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def parse(cls, text, nvars=None):
        """Parse the text form; ``#`` starts a comment, blank lines ignored.

        The variable count is inferred from the first term unless given.
        Duplicate exponent rows are merged.
        """
        terms = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            try:
                values = [int(t) for t in tokens]
            except ValueError:
                raise ValueError("non-integer token in %r" % raw)
            coeff, exps = values[0], tuple(values[1:])
            if nvars is None:
                nvars = len(exps)
            elif len(exps) != nvars:
                raise ValueError("inconsistent arity in %r" % raw)
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in %r" % raw)
            terms[exps] = terms.get(exps, 0) + coeff
        if nvars is None:
            raise ValueError("empty polynomial text needs an explicit nvars")
        return cls(nvars, terms)


class UnivariatePoly:
    """Dense univariate polynomial; coeffs[k] multiplies t**k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def t(cls):
        return cls([0, 1])

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def lowest_term(self):
        """(coeff, exponent) of the lowest-degree nonzero term; None if zero."""
        for k, c in enumerate(self.coeffs):
            if c:
                return c, k
        return None

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly([self.coefficient(k) + other.coefficient(k)
                               for k in range(n)])

    def __neg__(self):
        return UnivariatePoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return UnivariatePoly([c * other for c in self.coeffs])
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return UnivariatePoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return UnivariatePoly(out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, int):
            return UnivariatePoly([other])
        if not isinstance(other, UnivariatePoly):
            raise TypeError("cannot combine with %r" % (other,))
        return other

    def evaluate(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        return isinstance(other, UnivariatePoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return "UnivariatePoly(%r)" % (self.coeffs,)


# Module-level operation names, mirroring the class methods.

def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def evaluate(p, point):
    return p.evaluate(point)


def partial_derivative(p, j):
    return p.partial_derivative(j)


def substitute(p, images):
    return p.substitute(images)


def restrict_curve(p, curves):
    return p.restrict_curve(curves)


def rational_point(values):
    """Coerce a mixed int/str/Fraction sequence to exact Fractions."""
    return tuple(Fraction(v) for v in values)
