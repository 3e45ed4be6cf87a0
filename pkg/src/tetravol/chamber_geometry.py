"""Extreme points, symmetry action and chamber partitions of the
normalized pseudo-tetrahedron cone.

X is the cone of length lists satisfying every (weak) face triangle
inequality; X24 is its slice at coordinate sum 24.  X24 is the hull of
seven lattice points: three A-type extrema (one axis sum zero) and four
B-type extrema (one vertex sum maximal).  Nested partitions of X24 into
3, 4, 12 and 48 lattice simplices are built here, the finest one indexed
by decorated embedded 3-paths of K4, and membership in any cell is
decided by exact integer arithmetic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .cayley_menger import AXIS_PAIRS, EDGES, VERTEX_EDGES, EdgeIndex

EXTREME_A = {
    1: (0, 6, 6, 6, 6, 0),
    2: (6, 0, 6, 6, 0, 6),
    3: (6, 6, 0, 0, 6, 6),
}
EXTREME_B = {
    1: (8, 8, 8, 0, 0, 0),
    2: (8, 0, 0, 8, 8, 0),
    3: (0, 8, 0, 8, 0, 8),
    4: (0, 0, 8, 0, 8, 8),
}
CENTER = (4, 4, 4, 4, 4, 4)

_AXIS_OF = {frozenset(pair): i for i, pair in enumerate(AXIS_PAIRS, start=1)}


def extrema():
    """The seven extreme points of X24 as (label, coords) pairs."""
    out = [("A%d" % i, EXTREME_A[i]) for i in (1, 2, 3)]
    out += [("B%d" % j, EXTREME_B[j]) for j in (1, 2, 3, 4)]
    return out


def midpoint(p, q):
    out = []
    for a, b in zip(p, q):
        s = a + b
        if s % 2:
            raise ValueError("midpoint is not a lattice point")
        out.append(s // 2)
    return tuple(out)


A_MID = {(i, j): midpoint(EXTREME_A[i], EXTREME_A[j])
         for i, j in itertools.combinations((1, 2, 3), 2)}
B_MID = {(i, j): midpoint(EXTREME_B[i], EXTREME_B[j])
         for i, j in itertools.combinations((1, 2, 3, 4), 2)}


def vertex_sums(p):
    """Sum of the three edge coordinates at each vertex of K4."""
    return tuple(sum(p[k] for k in VERTEX_EDGES[v]) for v in (1, 2, 3, 4))


def axis_sums(p):
    """Sum of each opposite-edge pair."""
    return tuple(p[a] + p[b] for a, b in AXIS_PAIRS)


def in_cone(p):
    """Weak membership in the pseudo-tetrahedron cone X."""
    if any(x < 0 for x in p):
        return False
    from .cayley_menger import FACES
    for slots in FACES.values():
        a, b, c = (p[s] for s in slots)
        if a > b + c or b > a + c or c > a + b:
            return False
    return True


# -- vertex relabelings -------------------------------------------------

def all_relabelings():
    """The 24 vertex relabelings of K4 as image tuples (s(1),...,s(4))."""
    return list(itertools.permutations((1, 2, 3, 4)))


def relabel_sign(sigma):
    inv = 0
    for a, b in itertools.combinations(range(4), 2):
        if sigma[a] > sigma[b]:
            inv += 1
    return -1 if inv % 2 else 1


def even_relabelings():
    return [s for s in all_relabelings() if relabel_sign(s) == 1]


def relabel_action(sigma):
    """Induced coordinate permutation: slot k moves to perm[k]."""
    return tuple(EdgeIndex.of(sigma[i - 1], sigma[j - 1]) for i, j in EDGES)


def apply_relabel(sigma, p):
    perm = relabel_action(sigma)
    out = [None] * 6
    for k in range(6):
        out[perm[k]] = p[k]
    return tuple(out)


def axis_image(sigma):
    """Induced permutation of the three axes, as an image tuple."""
    perm = relabel_action(sigma)
    return tuple(_AXIS_OF[frozenset((perm[a], perm[b]))]
                 for a, b in AXIS_PAIRS)


def compose(sigma, tau):
    """sigma after tau."""
    return tuple(sigma[tau[i] - 1] for i in range(4))


def invert(sigma):
    out = [0] * 4
    for i in range(4):
        out[sigma[i] - 1] = i + 1
    return tuple(out)


def stabilizer(edge_indices):
    """Relabelings fixing the given edge set (setwise)."""
    target = frozenset(edge_indices)
    out = []
    for s in all_relabelings():
        perm = relabel_action(s)
        if frozenset(perm[k] for k in target) == target:
            out.append(s)
    return out


# -- exact simplex machinery --------------------------------------------

def _int_det(rows):
    """Fraction-free Bareiss determinant of a square int matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


class LatticeSimplex6:
    """A 5-simplex in the sum-24 hyperplane with integer vertices."""

    def __init__(self, name, vertices):
        vs = tuple(tuple(v) for v in vertices)
        if len(vs) != 6 or any(len(v) != 6 for v in vs):
            raise ValueError("need six 6-coordinate vertices")
        self.name = name
        self.vertices = vs

    def vertex_set(self):
        return frozenset(self.vertices)

    def barycenter(self):
        return tuple(Fraction(sum(col), 6) for col in zip(*self.vertices))

    def volume_scaled(self):
        """|det| of the edge matrix after dropping the last coordinate.

        Proportional to 5-dimensional volume with one global constant
        for every simplex in the hyperplane, so sums compare exactly.
        """
        v0 = self.vertices[0]
        rows = [[self.vertices[j][c] - v0[c] for c in range(5)]
                for j in range(1, 6)]
        return abs(_int_det(rows))

    def contains(self, p):
        """Exact barycentric membership test; accepts ints or Fractions.

        The vertices all lie on the sum-24 plane, so for a query on that
        plane the solution of V*lam = p automatically has sum(lam) = 1;
        membership is then lam >= 0 componentwise, decided by Cramer
        determinant signs.
        """
        fr = [Fraction(x) for x in p]
        denom = 1
        for x in fr:
            denom = denom * x.denominator // _gcd(denom, x.denominator)
        ints = [int(x * denom) for x in fr]
        if sum(ints) != 24 * denom:
            return False
        matrix = [[self.vertices[j][r] for j in range(6)] for r in range(6)]
        d = _int_det(matrix)
        if d == 0:
            raise ValueError("degenerate simplex %s" % self.name)
        for j in range(6):
            mj = [row[:] for row in matrix]
            for r in range(6):
                mj[r][j] = ints[r]
            if _int_det(mj) * d < 0:
                return False
        return True

    def barycentric(self, p):
        """Exact barycentric coordinates of a sum-24-plane point."""
        fr = [Fraction(x) for x in p]
        matrix = [[self.vertices[j][r] for j in range(6)] for r in range(6)]
        d = _int_det(matrix)
        out = []
        for j in range(6):
            mj = [[Fraction(matrix[r][c]) for c in range(6)] for r in range(6)]
            for r in range(6):
                mj[r][j] = fr[r]
            out.append(_frac_det(mj) / d)
        return tuple(out)

    def relabeled(self, sigma, name=None):
        return LatticeSimplex6(name or self.name,
                               [apply_relabel(sigma, v) for v in self.vertices])

    def __repr__(self):
        return "LatticeSimplex6(%s)" % self.name


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _frac_det(m):
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    det = Fraction(1)
    for k in range(n):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        det *= m[k][k]
        for i in range(k + 1, n):
            ratio = m[i][k] / m[k][k]
            for j in range(k, n):
                m[i][j] -= ratio * m[k][j]
    return det * sign


# -- decorations --------------------------------------------------------

class Decoration:
    """An embedded 3-path with a white endpoint and a black vertex.

    The path is stored white-endpoint first, so (p1,p2,p3,p4) means the
    path p1-p2-p3-p4 with p1 white.  The black vertex is whichever path
    vertex is not adjacent to p1, i.e. p3 or p4.
    """

    def __init__(self, path, black):
        path = tuple(path)
        if sorted(path) != [1, 2, 3, 4]:
            raise ValueError("path must visit all four vertices once")
        if black not in (path[2], path[3]):
            raise ValueError("black vertex must avoid the white endpoint's"
                             " closed neighborhood on the path")
        self.path = path
        self.black = black

    @property
    def white(self):
        return self.path[0]

    @property
    def id(self):
        return "p%d%d%d%db%d" % (self.path + (self.black,))

    def edge_indices(self):
        p = self.path
        return (EdgeIndex.of(p[0], p[1]), EdgeIndex.of(p[1], p[2]),
                EdgeIndex.of(p[2], p[3]))

    def outer_axis(self):
        p = self.path
        return _AXIS_OF[frozenset((EdgeIndex.of(p[0], p[1]),
                                   EdgeIndex.of(p[2], p[3])))]

    def middle_axis(self):
        p = self.path
        return _AXIS_OF[frozenset((EdgeIndex.of(p[1], p[2]),
                                   EdgeIndex.of(p[0], p[3])))]

    def disjoint_axis(self):
        p = self.path
        return _AXIS_OF[frozenset((EdgeIndex.of(p[0], p[2]),
                                   EdgeIndex.of(p[1], p[3])))]

    def outer_pair(self):
        return AXIS_PAIRS[self.outer_axis() - 1]

    def relabeled(self, sigma):
        return Decoration([sigma[v - 1] for v in self.path],
                          sigma[self.black - 1])

    def membership(self, p):
        """Weak inequality system of the chamber."""
        asum = axis_sums(p)
        vsum = vertex_sums(p)
        a_out = asum[self.outer_axis() - 1]
        a_mid = asum[self.middle_axis() - 1]
        a_dis = asum[self.disjoint_axis() - 1]
        if a_out < a_mid or a_out < a_dis or a_dis > a_mid:
            return False
        vb = vsum[self.black - 1]
        if any(vb > vsum[v - 1] for v in (1, 2, 3, 4) if v != self.black):
            return False
        return vsum[self.white - 1] <= vsum[self.path[1] - 1]

    def __eq__(self, other):
        return (isinstance(other, Decoration)
                and self.path == other.path and self.black == other.black)

    def __hash__(self):
        return hash((self.path, self.black))

    def __repr__(self):
        return "Decoration(%s)" % self.id


def decorations():
    """All 48 decorations, sorted by id."""
    out = []
    for path in itertools.permutations((1, 2, 3, 4)):
        for black in (path[2], path[3]):
            out.append(Decoration(path, black))
    return sorted(out, key=lambda d: d.id)


def chamber_membership(dec, p):
    """Weak membership of a cone point in a decoration's chamber."""
    if not in_cone(p):
        raise ValueError("point outside the pseudo-tetrahedron cone")
    return dec.membership(p)


def chambers_containing(p):
    """Ids of all chambers whose closed cone contains p."""
    return [d.id for d in decorations() if d.membership(p)]


# -- the four nested partitions -----------------------------------------

_A_ORDER = (1, 2, 3)
_B_ORDER = (1, 2, 3, 4)


def _omit_a(i):
    return [EXTREME_A[x] for x in _A_ORDER if x != i]


def _omit_b(j):
    return [EXTREME_B[x] for x in _B_ORDER if x != j]


_D_SEEDS = {
    (1, 1): (CENTER, EXTREME_B[2], B_MID[(3, 4)], A_MID[(2, 3)],
             EXTREME_B[3], EXTREME_A[2]),
    (1, 2): (CENTER, EXTREME_B[2], B_MID[(3, 4)], A_MID[(2, 3)],
             EXTREME_B[3], EXTREME_A[3]),
    (2, 1): (CENTER, EXTREME_B[2], B_MID[(3, 4)], A_MID[(2, 3)],
             EXTREME_B[4], EXTREME_A[2]),
    (2, 2): (CENTER, EXTREME_B[2], B_MID[(3, 4)], A_MID[(2, 3)],
             EXTREME_B[4], EXTREME_A[3]),
}


def cell_transporter(i, j):
    """The unique even relabeling taking cell (1,1) to cell (i,j).

    Even relabelings act freely and transitively on (axis, vertex)
    pairs, sending the axis-1-largest, vertex-1-smallest cell to the
    axis-i-largest, vertex-j-smallest one.
    """
    for s in even_relabelings():
        if s[0] == j and axis_image(s)[0] == i:
            return s
    raise RuntimeError("no transporter for cell (%d, %d)" % (i, j))


class Partitions:
    """The nested 3-, 4-, 12- and 48-cell partitions of X24."""

    def __init__(self):
        self.three = {}
        for i in _A_ORDER:
            self.three["A_%d" % i] = LatticeSimplex6(
                "A_%d" % i, _omit_a(i) + [EXTREME_B[x] for x in _B_ORDER])
        self.four = {}
        for j in _B_ORDER:
            self.four["B_%d" % j] = LatticeSimplex6(
                "B_%d" % j, [EXTREME_A[x] for x in _A_ORDER] + _omit_b(j))
        self.twelve = {}
        for i in _A_ORDER:
            for j in _B_ORDER:
                name = "C_%d%d" % (i, j)
                self.twelve[name] = LatticeSimplex6(
                    name, [CENTER] + _omit_a(i) + _omit_b(j))
        self.fortyeight = {}
        for i in _A_ORDER:
            for j in _B_ORDER:
                s = cell_transporter(i, j)
                for (k, l), seed in _D_SEEDS.items():
                    name = "D_%d%d%d%d" % (i, j, k, l)
                    self.fortyeight[name] = LatticeSimplex6(
                        name, [apply_relabel(s, v) for v in seed])
        self._decoration_of = None

    def all_cells(self):
        out = {}
        for d in (self.three, self.four, self.twelve, self.fortyeight):
            out.update(d)
        return out

    def decoration_table(self):
        """Bijection D-simplex name -> decoration.

        Matched by requiring every vertex of the simplex to satisfy the
        decoration's weak inequality system; exactly one of the 48
        systems passes for each simplex.
        """
        if self._decoration_of is None:
            decs = decorations()
            table = {}
            used = set()
            for name, simplex in sorted(self.fortyeight.items()):
                hits = [d for d in decs
                        if all(d.membership(v) for v in simplex.vertices)]
                if len(hits) != 1:
                    raise RuntimeError(
                        "%s matches %d decorations" % (name, len(hits)))
                if hits[0].id in used:
                    raise RuntimeError("decoration %s matched twice" % hits[0].id)
                used.add(hits[0].id)
                table[name] = hits[0]
            self._decoration_of = table
        return self._decoration_of

    def simplex_for_decoration(self, dec):
        for name, d in self.decoration_table().items():
            if d == dec:
                return self.fortyeight[name]
        raise KeyError(dec.id)


_PARTITIONS = None


def build_partitions():
    global _PARTITIONS
    if _PARTITIONS is None:
        _PARTITIONS = Partitions()
    return _PARTITIONS


# -- region covered by a lengthening certificate ------------------------

def certified_chambers(beta):
    """Decorations of the chambers making up the certified region X_beta.

    Characterized combinatorially per edge-subset type; raises for the
    two complement types, which have no certified region.
    """
    from .cayley_menger import EdgeSubset
    if not isinstance(beta, EdgeSubset):
        beta = EdgeSubset(beta)
    tag = beta.classify()
    idx = beta.indices
    out = []
    for d in decorations():
        path_edges = set(d.edge_indices())
        outer = set(d.outer_pair())
        if tag == "full-K4":
            ok = True
        elif tag == "single-edge":
            (k,) = idx
            ok = k not in path_edges and d.black in EDGES[k]
        elif tag == "incident-pair":
            common = _common_vertex(idx)
            ok = not (outer & idx) and d.black == common
        elif tag == "opposite-pair":
            ok = outer != idx
        elif tag == "tripod":
            apex = next(v for v in (1, 2, 3, 4)
                        if set(VERTEX_EDGES[v]) == idx)
            ok = d.black == apex
        elif tag == "3-path":
            interior = {v for v in (1, 2, 3, 4)
                        if sum(v in EDGES[k] for k in idx) == 2}
            ok = d.black in interior and not (outer & idx)
        elif tag == "4-cycle":
            ok = outer == set(range(6)) - idx
        elif tag == "3-cycle":
            verts = set()
            for k in idx:
                verts.update(EDGES[k])
            ok = d.black in verts
        else:
            raise ValueError("no certified region for type %r" % tag)
        if ok:
            out.append(d)
    return out


def _common_vertex(pair):
    k1, k2 = sorted(pair)
    common = set(EDGES[k1]) & set(EDGES[k2])
    if len(common) != 1:
        raise ValueError("not an incident pair")
    return next(iter(common))


# -- reports ------------------------------------------------------------

def verify_barycenter_conditions():
    """Exact checks of the two boundary-barycenter coincidences.

    The barycenter of {A2,A3,B1,B2,B3} satisfies d14+d24 = d12 (a face
    inequality holds with equality) and the barycenter of {A2,A3,B1,B2,C}
    has equal vertex sums at 3 and 4.  Also confirms that the A- and
    B-extrema both average to the center.
    """
    pts1 = [EXTREME_A[2], EXTREME_A[3], EXTREME_B[1], EXTREME_B[2], EXTREME_B[3]]
    b1 = tuple(Fraction(sum(c), 5) for c in zip(*pts1))
    pts2 = [EXTREME_A[2], EXTREME_A[3], EXTREME_B[1], EXTREME_B[2], CENTER]
    b2 = tuple(Fraction(sum(c), 5) for c in zip(*pts2))
    vs2 = vertex_sums(b2)
    a_avg = tuple(Fraction(sum(c), 3) for c in zip(*EXTREME_A.values()))
    b_avg = tuple(Fraction(sum(c), 4) for c in zip(*EXTREME_B.values()))
    return {
        "face_equality_point": b1,
        "face_equality_holds": b1[2] + b1[4] == b1[0],
        "vertex_tie_point": b2,
        "vertex_tie_holds": vs2[2] == vs2[3],
        "extrema_average_to_center":
            a_avg == tuple(map(Fraction, CENTER))
            and b_avg == tuple(map(Fraction, CENTER)),
    }


def sample_x24(rng, n):
    """n exact rational points of X24, as convex combos of the extrema."""
    pts = [coords for _, coords in extrema()]
    out = []
    for _ in range(n):
        weights = [rng.randrange(0, 1000) for _ in pts]
        if not any(weights):
            weights[0] = 1
        total = sum(weights)
        out.append(tuple(
            Fraction(sum(w * p[c] for w, p in zip(weights, pts)), total)
            for c in range(6)))
    return out


def cell_description_membership(name, p):
    """Inequality-description membership for a named partition cell.

    A_i is the locus where axis sum i is weakly largest, B_j where
    vertex sum j is weakly smallest, C_ij the intersection of both,
    D_ijkl its decoration's system.
    """
    asum = axis_sums(p)
    vsum = vertex_sums(p)
    kind, idx = name.split("_")
    if kind == "A":
        i = int(idx)
        return asum[i - 1] == max(asum)
    if kind == "B":
        j = int(idx)
        return vsum[j - 1] == min(vsum)
    if kind == "C":
        i, j = int(idx[0]), int(idx[1])
        return asum[i - 1] == max(asum) and vsum[j - 1] == min(vsum)
    if kind == "D":
        parts = build_partitions()
        return parts.decoration_table()[name].membership(p)
    raise KeyError(name)


def partition_check(samples=10000, seed=0, cross_check=200):
    """Coverage report: every sampled point lies in each partition level.

    Membership uses the fast axis/vertex-sum and decoration
    descriptions; a prefix of the sample is cross-checked against exact
    barycentric containment in the corresponding lattice simplices, at
    all four levels, which ties the descriptions to the actual hulls.
    """
    import random
    rng = random.Random(seed)
    parts = build_partitions()
    parts.decoration_table()
    levels = {"three": parts.three, "four": parts.four,
              "twelve": parts.twelve, "fortyeight": parts.fortyeight}
    pts = sample_x24(rng, samples)
    misses = {level: 0 for level in levels}
    for p in pts:
        for level, cells in levels.items():
            if not any(cell_description_membership(name, p) for name in cells):
                misses[level] += 1
    cross = 0
    cross_n = min(len(pts), cross_check)
    for p in pts[:cross_n]:
        for level, cells in levels.items():
            for name, simplex in cells.items():
                if cell_description_membership(name, p) != simplex.contains(p):
                    cross += 1
    return {
        "samples": samples,
        "seed": seed,
        "misses": misses,
        "cross_checked": cross_n,
        "cross_mismatches": cross,
        "ok": not any(misses.values()) and cross == 0,
    }
