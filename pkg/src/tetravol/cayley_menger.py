"""The Cayley-Menger determinant of four points and its edge derivatives.

Coordinates follow the fixed edge order (d12, d13, d14, d23, d24, d34).
``build_f`` returns the determinant as a degree-6 polynomial in the six
edge lengths; it equals 288 times the squared volume of the tetrahedron
with those lengths.  ``directional_derivative`` sums the partials over
an edge subset, the combination whose sign controls whether lengthening
those edges grows the volume.
"""

from __future__ import annotations

from fractions import Fraction

from .exact_poly import Polynomial

EDGES = ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4))

# Face (i,j,k) of the tetrahedron -> the three coordinate slots of its edges.
FACES = {
    (1, 2, 3): (0, 1, 3),
    (1, 2, 4): (0, 2, 4),
    (1, 3, 4): (1, 2, 5),
    (2, 3, 4): (3, 4, 5),
}

# Opposite-edge pairs (the three "axes" of K4) and per-vertex edge stars.
AXIS_PAIRS = ((0, 5), (1, 4), (2, 3))
VERTEX_EDGES = {1: (0, 1, 2), 2: (0, 3, 4), 3: (1, 3, 5), 4: (2, 4, 5)}


class EdgeIndex:
    """Fixed bijection between K4 edges and coordinates 0..5."""

    _BY_PAIR = {pair: k for k, pair in enumerate(EDGES)}

    @staticmethod
    def of(i, j):
        a, b = (i, j) if i < j else (j, i)
        try:
            return EdgeIndex._BY_PAIR[(a, b)]
        except KeyError:
            raise ValueError("no edge (%r, %r)" % (i, j))

    @staticmethod
    def pair(k):
        return EDGES[k]

    @staticmethod
    def all():
        return tuple(range(6))


class EdgeSubset:
    """A nonempty set of K4 edges, with its isomorphism-type tag.

    The ``friendly`` flag marks the types for which lengthening certifies
    cleanly on every relevant chamber; the three remaining types only
    admit partial or experimental treatment.
    """

    def __init__(self, indices):
        idx = frozenset(int(k) for k in indices)
        if not idx:
            raise ValueError("edge subset must be nonempty")
        if not idx <= set(range(6)):
            raise ValueError("edge index out of range")
        self.indices = idx

    @classmethod
    def parse(cls, text):
        """Parse a spec like ``"12"`` or ``"12,34"`` or ``"12,13,14"``."""
        toks = [t for t in text.replace(" ", "").split(",") if t]
        indices = []
        for t in toks:
            if len(t) != 2 or not t.isdigit():
                raise ValueError("bad edge token %r" % t)
            indices.append(EdgeIndex.of(int(t[0]), int(t[1])))
        return cls(indices)

    @classmethod
    def full(cls):
        return cls(range(6))

    def edges(self):
        return tuple(sorted(EDGES[k] for k in self.indices))

    def vertices(self):
        out = set()
        for k in self.indices:
            out.update(EDGES[k])
        return out

    def contains_vertex_star(self, v):
        return set(VERTEX_EDGES[v]) <= self.indices

    def classify(self):
        """Isomorphism-type tag of the edge subset."""
        n = len(self.indices)
        if n == 1:
            return "single-edge"
        if n == 2:
            k1, k2 = sorted(self.indices)
            if (k1, k2) in AXIS_PAIRS:
                return "opposite-pair"
            return "incident-pair"
        if n == 3:
            counts = sorted(self._degrees().values())
            if counts == [1, 1, 1, 3]:
                return "tripod"
            if counts == [2, 2, 2]:
                return "3-cycle"
            return "3-path"
        if n == 4:
            comp = EdgeSubset(set(range(6)) - self.indices)
            if comp.classify() == "opposite-pair":
                return "4-cycle"
            return "complement-of-incident-pair"
        if n == 5:
            return "complement-of-edge"
        return "full-K4"

    def _degrees(self):
        degs = {}
        for k in self.indices:
            for v in EDGES[k]:
                degs[v] = degs.get(v, 0) + 1
        return degs

    @property
    def friendly(self):
        return self.classify() in {
            "single-edge", "incident-pair", "opposite-pair",
            "tripod", "3-path", "4-cycle", "full-K4",
        }

    def spec(self):
        """Canonical text spec, the inverse of parse()."""
        return ",".join("%d%d" % EDGES[k] for k in sorted(self.indices))

    def __eq__(self, other):
        return isinstance(other, EdgeSubset) and self.indices == other.indices

    def __hash__(self):
        return hash(self.indices)

    def __repr__(self):
        return "EdgeSubset(%s)" % self.spec()


def _det(matrix):
    """Determinant by cofactor expansion; entries are Polynomials."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    nvars = matrix[0][0].nvars
    total = Polynomial.zero(nvars)
    for j, entry in enumerate(matrix[0]):
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        cof = entry * _det(minor)
        total = total + (cof if j % 2 == 0 else -cof)
    return total


def _bordered_matrix(squares):
    """The 5x5 bordered matrix with the given squared-length entries."""
    one = Polynomial.constant(squares[0].nvars, 1)
    zero = Polynomial.zero(squares[0].nvars)
    m = [[zero, one, one, one, one]]
    for i in range(1, 5):
        row = [one]
        for j in range(1, 5):
            if i == j:
                row.append(zero)
            else:
                row.append(squares[EdgeIndex.of(i, j)])
        m.append(row)
    return m


def build_f_on_squares():
    """The determinant as a degree-3 polynomial in the six squared lengths."""
    squares = [Polynomial.variable(6, k) for k in range(6)]
    return _det(_bordered_matrix(squares))


def build_f():
    """The determinant as a degree-6 polynomial in the six edge lengths."""
    squares = [Polynomial.variable(6, k) ** 2 for k in range(6)]
    return _det(_bordered_matrix(squares))


_F = None
_F_HAT = None


def f_polynomial():
    """Cached build_f()."""
    global _F
    if _F is None:
        _F = build_f()
    return _F


def f_hat_polynomial():
    """Cached build_f_on_squares()."""
    global _F_HAT
    if _F_HAT is None:
        _F_HAT = build_f_on_squares()
    return _F_HAT


def directional_derivative(beta):
    """Sum of the partials of f over the edges of ``beta``."""
    if not isinstance(beta, EdgeSubset):
        beta = EdgeSubset(beta)
    f = f_polynomial()
    total = Polynomial.zero(6)
    for k in sorted(beta.indices):
        total = total + f.partial_derivative(k)
    return total


def _clear_denominators(d):
    vals = [Fraction(x) for x in d]
    scale = 1
    for v in vals:
        q = v.denominator
        scale = scale * q // _gcd(scale, q)
    return [int(v * scale) for v in vals], scale


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def is_tetrahedral(d):
    """True when the six lengths are realized by a nondegenerate tetrahedron.

    Requires positive entries, a strict triangle inequality on each of
    the four faces, and a positive determinant.  Rational input is
    scaled to integers first so every comparison is exact.
    """
    if len(d) != 6:
        raise ValueError("need six lengths")
    ints, _ = _clear_denominators(d)
    if any(x <= 0 for x in ints):
        return False
    for slots in FACES.values():
        a, b, c = (ints[s] for s in slots)
        if a + b <= c or a + c <= b or b + c <= a:
            return False
    return f_polynomial().evaluate(ints) > 0


def volume_squared(d):
    """Exact squared volume f(d)/288 as a Fraction."""
    ints, scale = _clear_denominators(d)
    return Fraction(f_polynomial().evaluate(ints), 288 * scale ** 6)
