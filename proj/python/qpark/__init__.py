"""Exact-arithmetic Hecke traces, Deodhar cells, rational parking/Kirkman
polynomials, HOMFLYPT slices, and finite-field flag counting."""

import json as _json

try:
    from qpark import _core
except ImportError:  # development layout: _core on sys.path next to the build
    import _core

__all__ = [
    "park",
    "park_cell_sum",
    "kirk",
    "deodhar",
    "homfly",
    "parking_table_a3p3",
    "verify",
    "sigma",
    "noncrossing",
    "oracle_verify",
    "suite_names",
]


def park(type, p, J=(), sign="+"):
    """Rational parabolic parking polynomial Park_{W,p}^{J,±}(X)."""
    return _json.loads(_core.park_json(type, p, list(J), sign))


def park_cell_sum(type, p, J=(), sign="+"):
    """The same polynomial from the Deodhar side: (X-1)^{-r} sum of cell
    polynomials over the coset representatives (note the sign flip)."""
    return _json.loads(_core.park_cell_sum_json(type, p, list(J), sign))


def kirk(n, p, k):
    """Rational Kirkman polynomial of (S_n, p) at exterior degree k."""
    return _json.loads(_core.kirk_json(n, p, k))


def deodhar(type, v, word):
    """v-distinguished subwords of a word, with cell statistics."""
    return _json.loads(_core.deodhar_json(type, list(v), list(word)))


def homfly(strands, braid):
    """Reduced HOMFLYPT polynomial of the closure of a braid word."""
    if not isinstance(braid, str):
        braid = " ".join(str(x) for x in braid)
    return _json.loads(_core.homfly_json(strands, braid))


def parking_table_a3p3():
    """Box counts, park values, and Kirkman numbers for S_4, c=(1,2,3), p=3."""
    return _json.loads(_core.parking_table_json())


def verify(suite):
    """Run a named verification sweep; see suite_names()."""
    return _json.loads(_core.verify_json(suite))


def sigma(type, J=(), sign="-"):
    """Central element Sigma_{J,±} in the T-basis (serialized)."""
    return _json.loads(_core.sigma_json(type, list(J), sign))


def noncrossing(n, c=()):
    """Noncrossing partitions below the Coxeter element of the word c."""
    return _json.loads(_core.nc_json(n, list(c)))


def oracle_verify(what, n, q):
    """Brute-force verification over GL_n(F_q): what in {main, cell, trace}."""
    return _core.oracle_verify(what, n, q)


def suite_names():
    return _core.suite_names()
