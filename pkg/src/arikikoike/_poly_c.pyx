"""Compiled kernels for sparse multivariate integer polynomials.

Drop-in replacement for ``arikikoike._poly_py`` (see there for the data
model).  The dict/tuple manipulation dominates the runtime of the normal
form arithmetic, so these loops are compiled.
"""


def padd(dict a, dict b):
    """Sum of two polynomials."""
    cdef dict out = dict(a)
    for exps, coeff in b.items():
        new = out.get(exps, 0) + coeff
        if new:
            out[exps] = new
        else:
            out.pop(exps, None)
    return out


def pneg(dict a):
    """Negation of a polynomial."""
    cdef dict out = {}
    for exps, coeff in a.items():
        out[exps] = -coeff
    return out


def pscale(dict a, k):
    """Product of a polynomial with the integer ``k``."""
    cdef dict out = {}
    if not k:
        return out
    for exps, coeff in a.items():
        out[exps] = coeff * k
    return out


def pmul(dict a, dict b):
    """Product of two polynomials."""
    cdef dict out = {}
    cdef tuple ea, eb, exps
    cdef Py_ssize_t i, m
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        m = len(ea)
        for eb, cb in b.items():
            exps = tuple([ea[i] + eb[i] for i in range(m)])
            new = out.get(exps, 0) + ca * cb
            if new:
                out[exps] = new
            else:
                del out[exps]
    return out


def pshift(dict a, tuple mono):
    """Product of a polynomial with the monomial exponent tuple ``mono``."""
    cdef dict out = {}
    cdef tuple exps
    cdef Py_ssize_t i, m = len(mono)
    for exps, c in a.items():
        out[tuple([exps[i] + mono[i] for i in range(m)])] = c
    return out
