"""Pulling polynomials back from a lattice 5-simplex to the unit cube.

A point of the open unit cube (x1,...,x5) maps onto the simplex with
ordered vertices v1,...,v6 through stick-breaking barycentric weights:

    U(x) = (x1, x1x2, x1x2x3, x1x2x3x4, x1x2x3x4x5)
    V(u) = (1-u1, u1-u2, u2-u3, u3-u4, u4-u5, u5)

The six weights V(U(x)) are nonnegative on the cube and sum to one, so
Z(x) = W V(U(x)) (W = matrix with the vertices as columns) sweeps out
the whole simplex; the cube origin lands on v1 and the all-ones corner
on v6.  Composing a polynomial with Z keeps integer coefficients and
caps every single-variable degree by the total degree, which is what
the dominance certifier needs.
"""

from __future__ import annotations

from .exact_poly import Polynomial


def _barycentric_affine():
    """The six affine weights V as polynomials in (u1,...,u5)."""
    u = [Polynomial.variable(5, j) for j in range(5)]
    one = Polynomial.constant(5, 1)
    vs = [one - u[0]]
    for j in range(4):
        vs.append(u[j] - u[j + 1])
    vs.append(u[4])
    return vs


def _stick_rewrite(p):
    """Substitute u_k = x1*...*xk by rewriting exponents as suffix sums.

    The exponent map is injective, so no two source terms collide.
    """
    out = {}
    for exps, c in p.terms.items():
        total = 0
        suffix = []
        for e in reversed(exps):
            total += e
            suffix.append(total)
        key = tuple(reversed(suffix))
        if key in out:
            raise RuntimeError("stick rewrite collision")
        out[key] = c
    return Polynomial(5, out)


class PullbackMap:
    """The composition machinery for one ordered simplex."""

    def __init__(self, simplex):
        self.simplex = simplex
        vs = simplex.vertices
        affine_weights = _barycentric_affine()
        self.affine = []
        for k in range(6):
            mk = Polynomial.zero(5)
            for j in range(6):
                w = vs[j][k]
                if w:
                    mk = mk + w * affine_weights[j]
            self.affine.append(mk)
        self.z_polys = [_stick_rewrite(mk) for mk in self.affine]

    def apply(self, p):
        """Pull a 6-variable polynomial back to the cube.

        Composes with the affine weights first (keeping the total
        degree small) and only then rewrites to stick-breaking
        coordinates.
        """
        if p.nvars != 6:
            raise ValueError("expected a 6-variable polynomial")
        composed = p.substitute(self.affine)
        return _stick_rewrite(composed)

    def apply_reference(self, p):
        """Direct substitution of the Z polynomials; slow oracle path."""
        if p.nvars != 6:
            raise ValueError("expected a 6-variable polynomial")
        return p.substitute(self.z_polys)

    def point_image(self, x):
        """Z(x) for an exact cube point; useful for spot checks."""
        return tuple(z.evaluate(x) for z in self.z_polys)


_CACHE = {}


def build_pullback(simplex):
    key = simplex.vertices
    if key not in _CACHE:
        _CACHE[key] = PullbackMap(simplex)
    return _CACHE[key]


def pullback(p, simplex):
    """Pull p back to the unit cube through the ordered simplex."""
    return build_pullback(simplex).apply(p)
