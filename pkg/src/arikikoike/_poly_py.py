"""Pure-Python kernels for sparse multivariate integer polynomials.

A polynomial is a dict mapping exponent tuples to nonzero integer
coefficients.  All functions return new dicts and never mutate their
arguments.  ``arikikoike._poly_c`` is a compiled drop-in replacement;
``arikikoike.kernel`` picks one of the two at import time.
"""


def padd(a, b):
    """Sum of two polynomials."""
    out = dict(a)
    for exps, coeff in b.items():
        new = out.get(exps, 0) + coeff
        if new:
            out[exps] = new
        else:
            out.pop(exps, None)
    return out


def pneg(a):
    """Negation of a polynomial."""
    return {exps: -coeff for exps, coeff in a.items()}


def pscale(a, k):
    """Product of a polynomial with the integer ``k``."""
    if not k:
        return {}
    return {exps: coeff * k for exps, coeff in a.items()}


def pmul(a, b):
    """Product of two polynomials."""
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            exps = tuple(x + y for x, y in zip(ea, eb))
            new = out.get(exps, 0) + ca * cb
            if new:
                out[exps] = new
            else:
                del out[exps]
    return out


def pshift(a, mono):
    """Product of a polynomial with the monomial exponent tuple ``mono``."""
    return {tuple(x + y for x, y in zip(exps, mono)): c for exps, c in a.items()}
