"""Exact arithmetic over the rational function field Q(q, Q_1, ..., Q_r).

Polynomials are sparse: a :class:`Poly` wraps a dict mapping exponent
tuples of length ``r + 1`` to nonzero integer coefficients, with variable
index 0 reserved for ``q`` and index ``s`` for ``Q_s``.  A :class:`RatFunc`
is a quotient of two such dicts kept in a cheap canonical form (no common
integer content, no common monomial factor, positive leading denominator
coefficient under lex order q > Q_1 > ... > Q_r).  Full GCD reduction is
never needed: equality is decided by cross multiplication, which is exact.

:class:`EvalPoint` fixes rational values for the parameters so the same
code can run over Q instead of the symbolic field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from arikikoike.kernel import padd, pmul, pneg, pscale, pshift

__all__ = [
    "ParamSpec",
    "Poly",
    "RatFunc",
    "EvalPoint",
    "q_int",
    "q_fact",
    "poly_exact_div",
]


def _clean(terms: dict) -> dict:
    return {e: c for e, c in terms.items() if c}


_RINGS: dict = {}


def _poly_ring(r: int):
    """Integer polynomial ring in q, Q_1..Q_r (for GCD cancellation only)."""
    R = _RINGS.get(r)
    if R is None:
        from sympy.polys.domains import ZZ
        from sympy.polys.rings import ring

        R = ring(["q"] + [f"Q{s}" for s in range(1, r + 1)], ZZ)[0]
        _RINGS[r] = R
    return R


def _cancel(r: int, num: dict, den: dict):
    """Divide num and den by their polynomial GCD (exact, over ZZ)."""
    R = _poly_ring(r)
    pn = R.from_dict(num)
    pd = R.from_dict(den)
    g = pn.gcd(pd)
    if g != R.one:
        pn = pn.quo(g)
        pd = pd.quo(g)
    return (
        {m: int(c) for m, c in pn.terms()},
        {m: int(c) for m, c in pd.terms()},
    )


class Poly:
    """Sparse integer-coefficient polynomial in q, Q_1, ..., Q_r."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: dict):
        self.r = r
        self.terms = _clean(terms)

    # -- ring operations -------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        return Poly(self.r, padd(self.terms, other.terms))

    def __sub__(self, other: "Poly") -> "Poly":
        return Poly(self.r, padd(self.terms, pneg(other.terms)))

    def __neg__(self) -> "Poly":
        return Poly(self.r, pneg(self.terms))

    def __mul__(self, other: "Poly") -> "Poly":
        return Poly(self.r, pmul(self.terms, other.terms))

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a Poly; use RatFunc")
        out = {(0,) * (self.r + 1): 1}
        base = self.terms
        while k:
            if k & 1:
                out = pmul(out, base)
            k >>= 1
            if k:
                base = pmul(base, base)
        return Poly(self.r, out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly) and self.r == other.r and self.terms == other.terms

    def __hash__(self):
        return hash((self.r, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, values: tuple) -> Fraction:
        """Value at ``values = (q, Q_1, ..., Q_r)`` (Fractions)."""
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = Fraction(coeff)
            for v, e in zip(values, exps):
                term *= v**e
            total += term
        return total

    def __str__(self) -> str:
        return _poly_str(self.terms)

    def __repr__(self) -> str:
        return f"Poly({self})"


def _mono_str(exps) -> str:
    parts = []
    for idx, e in enumerate(exps):
        if not e:
            continue
        name = "q" if idx == 0 else f"Q{idx}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def _poly_str(terms: dict) -> str:
    if not terms:
        return "0"
    pieces = []
    for exps in sorted(terms, reverse=True):
        coeff = terms[exps]
        mono = _mono_str(exps)
        if mono:
            if coeff == 1:
                body = mono
            elif coeff == -1:
                body = f"-{mono}"
            else:
                body = f"{coeff}*{mono}"
        else:
            body = str(coeff)
        if not pieces:
            pieces.append(body)
        elif body.startswith("-"):
            pieces.append(f" - {body[1:]}")
        else:
            pieces.append(f" + {body}")
    return "".join(pieces)


def poly_exact_div(num: Poly, den: Poly) -> Optional[Poly]:
    """Exact quotient ``num / den`` in the polynomial ring, or None.

    Lex division by a single divisor decides divisibility: if ``num`` is a
    multiple of ``den`` then the leading monomial of ``den`` divides the
    leading monomial of every partial remainder.  Quotient coefficients are
    rational during the loop; the result is returned only when the division
    leaves no remainder, with integer check left to the caller if wanted.
    """
    if den.is_zero():
        raise ZeroDivisionError("exact division by zero polynomial")
    rem = dict(num.terms)
    out: dict = {}
    lt_den = max(den.terms)
    c_den = den.terms[lt_den]
    while rem:
        lt_rem = max(rem)
        diff = tuple(a - b for a, b in zip(lt_rem, lt_den))
        if any(e < 0 for e in diff):
            return None
        c = Fraction(rem[lt_rem], c_den)
        out[diff] = out.get(diff, 0) + c
        rem = padd(rem, pneg(pshift(pscale(den.terms, c), diff)))
    return Poly(num.r, {e: c for e, c in out.items() if c})


@dataclass(frozen=True)
class EvalPoint:
    """Rational values for (q, Q_1, ..., Q_r), with a semisimplicity flag."""

    q: Fraction
    Q: tuple
    semisimple: bool = False

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "Q", tuple(Fraction(x) for x in self.Q))
        if self.q == 0:
            raise ValueError("q must be invertible")

    @property
    def r(self) -> int:
        return len(self.Q)

    @property
    def values(self) -> tuple:
        return (self.q, *self.Q)


class RatFunc:
    """Element of Q(q, Q_1, ..., Q_r) as a canonicalised num/den pair."""

    __slots__ = ("r", "num", "den")

    def __init__(self, r: int, num: dict, den: dict):
        num = _clean(num)
        den = _clean(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.r = r
            self.num = {}
            self.den = {(0,) * (r + 1): 1}
            return
        # Clear rational coefficients (inputs may carry Fractions).
        denoms = [c.denominator for c in (*num.values(), *den.values()) if isinstance(c, Fraction)]
        if denoms:
            m = math.lcm(*denoms)
            num = {e: int(c * m) for e, c in num.items()}
            den = {e: int(c * m) for e, c in den.items()}
        # Common monomial factor first: this also clears negative exponents,
        # which the polynomial-GCD step below cannot handle.
        mins = tuple(
            min(min(e[i] for e in num), min(e[i] for e in den)) for i in range(r + 1)
        )
        if any(mins):
            shift = tuple(-m for m in mins)
            num = pshift(num, shift)
            den = pshift(den, shift)
        # Cancel the polynomial GCD whenever the denominator is not a
        # monomial; unreduced fractions otherwise blow up under repeated
        # addition (cross multiplication squares shared denominators).
        if len(den) > 1:
            num, den = _cancel(r, num, den)
        # Integer content.
        g = math.gcd(*(abs(c) for c in num.values()), *(abs(c) for c in den.values()))
        if g > 1:
            num = {e: c // g for e, c in num.items()}
            den = {e: c // g for e, c in den.items()}
        # Sign: leading denominator coefficient positive.
        if den[max(den)] < 0:
            num = pneg(num)
            den = pneg(den)
        self.r = r
        self.num = num
        self.den = den

    # -- construction ----------------------------------------------------
    @staticmethod
    def from_poly(p: Poly) -> "RatFunc":
        return RatFunc(p.r, p.terms, {(0,) * (p.r + 1): 1})

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, int):
            one = (0,) * (self.r + 1)
            return RatFunc(self.r, {one: other}, {one: 1})
        if isinstance(other, Fraction):
            one = (0,) * (self.r + 1)
            return RatFunc(self.r, {one: other.numerator}, {one: other.denominator})
        return NotImplemented

    # -- field operations ------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.r, padd(self.num, other.num), self.den)
        num = padd(pmul(self.num, other.den), pmul(other.num, self.den))
        return RatFunc(self.r, num, pmul(self.den, other.den))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.r, padd(self.num, pneg(other.num)), self.den)
        num = padd(pmul(self.num, other.den), pneg(pmul(other.num, self.den)))
        return RatFunc(self.r, num, pmul(self.den, other.den))

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return RatFunc(self.r, pneg(self.num), self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.r, pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.r, pmul(self.num, other.den), pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def inverse(self) -> "RatFunc":
        return RatFunc(self.r, self.den, self.num)

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc(self.r, {(0,) * (self.r + 1): 1}, {(0,) * (self.r + 1): 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return pmul(self.num, other.den) == pmul(other.num, self.den)

    __hash__ = None  # canonical form is not unique; use == explicitly

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    # -- substitutions ---------------------------------------------------
    def evaluate(self, point: EvalPoint) -> Fraction:
        """Value at a rational point; raises if the denominator vanishes."""
        dval = Poly(self.r, self.den).evaluate(point.values)
        if dval == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return Poly(self.r, self.num).evaluate(point.values) / dval

    def prime(self) -> "RatFunc":
        """The ' involution: q -> 1/q and Q_s -> Q_{r-s+1}."""

        def transform(d: dict):
            if not d:
                return {}, 0
            m = max(e[0] for e in d)
            out = {}
            for e, c in d.items():
                out[(m - e[0], *reversed(e[1:]))] = c
            return out, m

        num, mn = transform(self.num)
        den, md = transform(self.den)
        # self' = (num / q^mn) / (den / q^md)
        return RatFunc(self.r, pshift(num, (md,) + (0,) * self.r), pshift(den, (mn,) + (0,) * self.r))

    def permute_Q(self, images: tuple) -> "RatFunc":
        """Substitute Q_s -> Q_{images[s-1]} for a permutation of 1..r."""

        def transform(d: dict):
            out = {}
            for e, c in d.items():
                new = [e[0]] + [0] * self.r
                for s in range(1, self.r + 1):
                    new[images[s - 1]] += e[s]
                out[tuple(new)] = out.get(tuple(new), 0) + c
            return out

        return RatFunc(self.r, transform(self.num), transform(self.den))

    # -- display ---------------------------------------------------------
    def __str__(self) -> str:
        if self.den == {(0,) * (self.r + 1): 1}:
            return _poly_str(self.num)
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    @property
    def num_poly(self) -> Poly:
        return Poly(self.r, self.num)

    @property
    def den_poly(self) -> Poly:
        return Poly(self.r, self.den)


@dataclass(frozen=True)
class ParamSpec:
    """Number of cyclotomic parameters; factory for field elements."""

    r: int

    @property
    def nvars(self) -> int:
        return self.r + 1

    def _one_exps(self) -> tuple:
        return (0,) * (self.r + 1)

    @property
    def zero(self) -> RatFunc:
        return RatFunc(self.r, {}, {self._one_exps(): 1})

    @property
    def one(self) -> RatFunc:
        return self.from_int(1)

    def from_int(self, k: int) -> RatFunc:
        return RatFunc(self.r, {self._one_exps(): k}, {self._one_exps(): 1})

    def from_fraction(self, x: Fraction) -> RatFunc:
        return RatFunc(self.r, {self._one_exps(): x.numerator}, {self._one_exps(): x.denominator})

    def mono(self, qexp: int = 0, Qexps: Iterable[int] = ()) -> RatFunc:
        """Monomial q^qexp * prod Q_s^e_s; exponents may be negative."""
        Qexps = tuple(Qexps)
        exps = [qexp] + list(Qexps) + [0] * (self.r - len(Qexps))
        num = tuple(max(e, 0) for e in exps)
        den = tuple(max(-e, 0) for e in exps)
        return RatFunc(self.r, {num: 1}, {den: 1})

    def q(self, e: int = 1) -> RatFunc:
        return self.mono(qexp=e)

    def Q(self, s: int, e: int = 1) -> RatFunc:
        if not 1 <= s <= self.r:
            raise ValueError(f"Q_{s} out of range for r={self.r}")
        return self.mono(Qexps=tuple(e if t == s else 0 for t in range(1, self.r + 1)))

    def res_mono(self, d: int, s: int) -> RatFunc:
        """Residue monomial q^d * Q_s."""
        return self.mono(qexp=d, Qexps=tuple(1 if t == s else 0 for t in range(1, self.r + 1)))

    def poly(self, terms: dict) -> Poly:
        return Poly(self.r, terms)

    def elem_sym_Q(self, m: int) -> RatFunc:
        """Elementary symmetric polynomial e_m(Q_1, ..., Q_r)."""
        import itertools

        if m < 0 or m > self.r:
            return self.zero
        terms = {}
        for combo in itertools.combinations(range(1, self.r + 1), m):
            exps = [0] * (self.r + 1)
            for s in combo:
                exps[s] = 1
            terms[tuple(exps)] = 1
        return RatFunc(self.r, terms or {self._one_exps(): 1}, {self._one_exps(): 1})


def q_int(k: int, ps: ParamSpec) -> RatFunc:
    """Quantum integer [k]_q = 1 + q + ... + q^(k-1); [-k]_q = -q^(-k) [k]_q."""
    if k >= 0:
        terms = {(j,) + (0,) * ps.r: 1 for j in range(k)}
        return RatFunc(ps.r, terms, {ps._one_exps(): 1})
    return -(ps.q(k) * q_int(-k, ps))


def q_fact(k: int, ps: ParamSpec) -> RatFunc:
    """Quantum factorial [k]_q! = [1]_q [2]_q ... [k]_q."""
    if k < 0:
        raise ValueError("q-factorial of a negative integer")
    out = ps.one
    for i in range(2, k + 1):
        out = out * q_int(i, ps)
    return out
