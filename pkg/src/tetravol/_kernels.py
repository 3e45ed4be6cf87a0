"""Dense coefficient-cube engines for the dominance certifier.

A 5-variable polynomial with per-variable degree <= 6 lives in a dense
7^5 coefficient cube.  The certifier's hot operations (box partial
sums, axis dilation, axis reflection) are implemented twice:

* ``numba``: cubes are pairs of flat int64 arrays holding two-limb
  values hi*2^40 + lo with lo in [0, 2^40).  Kernels are jitted, exact
  up to a guarded magnitude bound of 2^85 per coefficient (far beyond
  the <= 20 decimal digits seen in practice); exceeding the guard
  raises BackendOverflow.
* ``numpy``: cubes are object-dtype arrays of Python ints.  Exact at
  any size, vectorized through numpy's object loops, used as the
  fallback and as an independent cross-check.

Select with the TETRAVOL_BACKEND environment variable ("numba" or
"numpy"); default is numba when importable.
"""

from __future__ import annotations

import os

import numpy as np

from .exact_poly import Polynomial

SHAPE = (7, 7, 7, 7, 7)
SIZE = 7 ** 5
LIMB_BITS = 40
LIMB = 1 << LIMB_BITS
COEFF_LIMIT = 1 << 85
GUARD_HI = 1 << 45

INNER = tuple(7 ** (4 - a) for a in range(5))
OUTER = tuple(7 ** a for a in range(5))

# Signed Pascal rows: SIGNED_BINOM[e, j] = (-1)^j * C(e, j), the
# coefficient of x^j in (1-x)^e.
_BINOM = [[0] * 7 for _ in range(7)]
for _e in range(7):
    _BINOM[_e][0] = 1
    for _j in range(1, _e + 1):
        _BINOM[_e][_j] = _BINOM[_e - 1][_j - 1] + _BINOM[_e - 1][_j]
SIGNED_BINOM = np.array(
    [[(-1) ** j * _BINOM[e][j] for j in range(7)] for e in range(7)],
    dtype=np.int64)


class BackendOverflow(RuntimeError):
    """A two-limb coefficient left the guarded magnitude range."""


def flat_index(exps):
    idx = 0
    for e in exps:
        idx = idx * 7 + e
    return idx


class NumpyBackend:
    """Exact object-dtype engine; cubes are (7,)*5 arrays of ints."""

    name = "numpy"

    def from_poly(self, p):
        if p.nvars != 5:
            raise ValueError("expected a 5-variable polynomial")
        if p.max_variable_degree() > 6:
            raise ValueError("per-variable degree exceeds 6")
        cube = np.zeros(SHAPE, dtype=object)
        for exps, c in p.terms.items():
            cube[exps] = c
        return cube

    def to_poly(self, cube):
        terms = {}
        for exps in np.ndindex(SHAPE):
            c = cube[exps]
            if c:
                terms[exps] = int(c)
        return Polynomial(5, terms)

    def wpd(self, cube):
        acc = cube
        for a in range(5):
            acc = acc.cumsum(axis=a)
        return not (acc < 0).any()

    def origin_negative(self, cube):
        return cube[0, 0, 0, 0, 0] < 0

    def corner_value(self, cube):
        return int(cube[0, 0, 0, 0, 0])

    def max_exponent(self, cube, axis):
        for k in range(6, -1, -1):
            if (np.take(cube, k, axis=axis) != 0).any():
                return k
        return 0

    def dilate(self, cube, axis):
        E = self.max_exponent(cube, axis)
        out = cube.copy()
        sl = [slice(None)] * 5
        for k in range(E):
            sl[axis] = k
            out[tuple(sl)] *= 1 << (E - k)
        return out

    def reflect(self, cube, axis):
        out = np.zeros(SHAPE, dtype=object)
        sl = [slice(None)] * 5
        slabs = [np.take(cube, e, axis=axis) for e in range(7)]
        for j in range(7):
            acc = np.zeros(SHAPE[:axis] + SHAPE[axis + 1:], dtype=object)
            for e in range(j, 7):
                acc = acc + int(SIGNED_BINOM[e, j]) * slabs[e]
            sl[axis] = j
            out[tuple(sl)] = acc
        return out

    def guard(self, cube):
        pass


# -- numba engine -------------------------------------------------------

try:
    from numba import njit
    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - exercised only without numba
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn
        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True, nogil=True)
def _k_wpd(hi, lo):
    h = hi.copy()
    l = lo.copy()
    for a in range(5):
        inner = 1
        for _ in range(4 - a):
            inner *= 7
        outer = 1
        for _ in range(a):
            outer *= 7
        last = a == 4
        for o in range(outer):
            base_o = o * 7 * inner
            for i in range(inner):
                ah = np.int64(0)
                al = np.int64(0)
                for k in range(7):
                    idx = base_o + k * inner + i
                    al += l[idx]
                    ah += h[idx]
                    q = al >> 40
                    al -= q << 40
                    ah += q
                    if last and ah < 0:
                        return False
                    h[idx] = ah
                    l[idx] = al
    return True


@njit(cache=True, nogil=True)
def _k_max_exponent(hi, lo, inner, outer):
    for k in range(6, -1, -1):
        for o in range(outer):
            base = (o * 7 + k) * inner
            for i in range(inner):
                if hi[base + i] != 0 or lo[base + i] != 0:
                    return k
    return 0


@njit(cache=True, nogil=True)
def _k_dilate(hi, lo, inner, outer, E):
    for o in range(outer):
        for k in range(E):
            m = np.int64(1) << (E - k)
            base = (o * 7 + k) * inner
            for i in range(inner):
                idx = base + i
                nl = lo[idx] * m
                nh = hi[idx] * m
                q = nl >> 40
                hi[idx] = nh + q
                lo[idx] = nl - (q << 40)


@njit(cache=True, nogil=True)
def _k_reflect(hi, lo, inner, outer, binom, out_hi, out_lo):
    for o in range(outer):
        base_o = o * 7 * inner
        for i in range(inner):
            base = base_o + i
            for j in range(7):
                ah = np.int64(0)
                al = np.int64(0)
                for e in range(j, 7):
                    b = binom[e, j]
                    if b != 0:
                        idx = base + e * inner
                        ah += hi[idx] * b
                        al += lo[idx] * b
                q = al >> 40
                out_hi[base + j * inner] = ah + q
                out_lo[base + j * inner] = al - (q << 40)


@njit(cache=True, nogil=True)
def _k_max_abs_hi(hi):
    m = np.int64(0)
    for i in range(hi.size):
        v = hi[i]
        if v < 0:
            v = -v
        if v > m:
            m = v
    return m


class NumbaBackend:
    """Two-limb int64 engine with jitted kernels."""

    name = "numba"

    def from_poly(self, p):
        if p.nvars != 5:
            raise ValueError("expected a 5-variable polynomial")
        if p.max_variable_degree() > 6:
            raise ValueError("per-variable degree exceeds 6")
        hi = np.zeros(SIZE, dtype=np.int64)
        lo = np.zeros(SIZE, dtype=np.int64)
        for exps, c in p.terms.items():
            if not -COEFF_LIMIT < c < COEFF_LIMIT:
                raise BackendOverflow("coefficient exceeds two-limb range")
            q, r = divmod(c, LIMB)
            idx = flat_index(exps)
            hi[idx] = q
            lo[idx] = r
        return hi, lo

    def to_poly(self, cube):
        hi, lo = cube
        terms = {}
        for idx in range(SIZE):
            v = int(hi[idx]) * LIMB + int(lo[idx])
            if v:
                exps = []
                rem = idx
                for a in range(5):
                    exps.append(rem // INNER[a])
                    rem %= INNER[a]
                terms[tuple(exps)] = v
        return Polynomial(5, terms)

    def wpd(self, cube):
        return bool(_k_wpd(cube[0], cube[1]))

    def origin_negative(self, cube):
        return cube[0][0] < 0

    def corner_value(self, cube):
        return int(cube[0][0]) * LIMB + int(cube[1][0])

    def max_exponent(self, cube, axis):
        return int(_k_max_exponent(cube[0], cube[1], INNER[axis], OUTER[axis]))

    def dilate(self, cube, axis):
        hi, lo = cube[0].copy(), cube[1].copy()
        E = _k_max_exponent(hi, lo, INNER[axis], OUTER[axis])
        _k_dilate(hi, lo, INNER[axis], OUTER[axis], E)
        return hi, lo

    def reflect(self, cube, axis):
        hi, lo = cube
        out_hi = np.empty(SIZE, dtype=np.int64)
        out_lo = np.empty(SIZE, dtype=np.int64)
        _k_reflect(hi, lo, INNER[axis], OUTER[axis], SIGNED_BINOM,
                   out_hi, out_lo)
        return out_hi, out_lo

    def guard(self, cube):
        if int(_k_max_abs_hi(cube[0])) > GUARD_HI:
            raise BackendOverflow("coefficient magnitude exceeded the guard")


_BACKENDS = {}


def get_backend(name=None):
    """Resolve a backend by name, env var, or availability."""
    if name is None:
        name = os.environ.get("TETRAVOL_BACKEND", "").strip() or None
    if name is None:
        name = "numba" if NUMBA_AVAILABLE else "numpy"
    if name not in ("numba", "numpy"):
        raise ValueError("unknown backend %r" % name)
    if name == "numba" and not NUMBA_AVAILABLE:
        name = "numpy"
    if name not in _BACKENDS:
        _BACKENDS[name] = NumbaBackend() if name == "numba" else NumpyBackend()
    return _BACKENDS[name]
