"""Exact normal-form arithmetic in the Ariki-Koike algebra H_q(n).

Elements are stored on the basis { L_1^{c_1} ... L_n^{c_n} T_w } with
0 <= c_k <= r-1 and w in S_n, as sparse maps (c, w) -> coefficient.  The
deformation parameters live in Q(q, Q_1, ..., Q_r) (SYMBOLIC backend) or
in Q after fixing an :class:`~arikikoike.ratfunc.EvalPoint` (EVAL backend).

The multiplication engine works by LEFT multiplication with generators:

* ``T_0 = L_1`` bumps the L_1 exponent, reducing with the cyclotomic
  relation ``L_1^r = sum_j (-1)^(r-j+1) e_{r-j}(Q) L_1^j`` on overflow;
* ``T_i`` (i >= 1) commutes with every ``L_k`` for ``k != i, i+1`` and
  with the product ``L_i L_{i+1}``; the residual pure power is pushed
  through with the closed-form expansions derived from
  ``T_i L_i = L_{i+1} T_i - (q-1) L_{i+1}`` and
  ``T_i L_{i+1} = L_i T_i + (q-1) L_{i+1}``, which never raise an exponent
  above max(c_i, c_{i+1}) < r;
* ``T_i T_w`` concatenates or applies the quadratic relation
  ``T_i^2 = (q-1) T_i + q``.

General products expand the left factor into generator words
(``L_k = q^{1-k} T_{k-1} ... T_1 T_0 T_1 ... T_{k-1}``) and apply the
letters right-to-left; single-generator-times-basis-term results are
memoised per spec, which makes the heavily repetitive idempotent/Murphy
products cheap.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from arikikoike.combinat import Perm
from arikikoike.ratfunc import EvalPoint, ParamSpec, RatFunc

__all__ = [
    "AlgebraSpec",
    "AlgebraElem",
    "shared_spec",
    "unit",
    "gen_T",
    "elem_L",
    "from_basis",
    "mul",
    "star",
    "prime",
    "tau",
    "dim_check",
    "lmul_word",
    "rmul_word",
]

SYMBOLIC = "symbolic"
EVAL = "eval"


class AlgebraSpec:
    """Parameters, backend, and memo caches for one Ariki-Koike algebra."""

    def __init__(self, n: int, params: ParamSpec, backend: str = SYMBOLIC,
                 point: EvalPoint | None = None):
        if backend not in (SYMBOLIC, EVAL):
            raise ValueError(f"unknown backend {backend!r}")
        if backend == EVAL:
            if point is None:
                raise ValueError("EVAL backend needs an EvalPoint")
            if point.r != params.r:
                raise ValueError("EvalPoint arity does not match ParamSpec")
        self.n = n
        self.params = params
        self.backend = backend
        self.point = point
        self.identity = Perm.identity(n)
        self.zero_c = (0,) * n
        # Backend scalars used by the rewriting rules.
        self.one = self.scalar(params.one)
        self.q = self.scalar(params.q())
        self.qm1 = self.scalar(params.q() - 1)
        # Cyclotomic reduction: L_1^r = sum_j cyclo[j] L_1^j.
        self.cyclo = tuple(
            self.scalar(params.elem_sym_Q(params.r - j) * (-1) ** (params.r - j + 1))
            for j in range(params.r)
        )
        self._qpow: dict = {0: self.one}
        self._push: dict = {}
        self._lmul: dict = {}
        self._star: dict = {}
        self._word: dict = {}
        self.cache: dict = {}  # shared memo for higher layers (F_t, m_lambda, ...)

    @property
    def r(self) -> int:
        return self.params.r

    def scalar(self, x):
        """Coerce x (RatFunc, int, Fraction) to the backend scalar type."""
        if isinstance(x, RatFunc):
            return x.evaluate(self.point) if self.backend == EVAL else x
        if isinstance(x, int):
            return Fraction(x) if self.backend == EVAL else self.params.from_int(x)
        if isinstance(x, Fraction):
            return x if self.backend == EVAL else self.params.from_fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to a scalar")

    def q_power(self, k: int):
        out = self._qpow.get(k)
        if out is None:
            out = self._qpow[k] = self.scalar(self.params.q(k))
        return out

    def scalars_equal(self, a, b) -> bool:
        return a == b

    # -- the rewriting core ------------------------------------------------

    def _push_terms(self, a: int, b: int):
        """Expansion of T_i L_i^a L_{i+1}^b over terms (e_i, e_{i+1}, hasT).

        Factors out the central power (L_i L_{i+1})^min(a,b) and pushes the
        remaining pure power through T_i.
        """
        key = (a, b)
        out = self._push.get(key)
        if out is not None:
            return out
        m0 = min(a, b)
        terms = []
        if a == b:
            terms.append((a, b, True, self.one))
        elif a < b:
            m = b - a
            terms.append((b, a, True, self.one))
            for j in range(m):
                terms.append((a + j, b - j, False, self.qm1))
        else:
            m = a - b
            terms.append((b, a, True, self.one))
            for j in range(1, m + 1):
                terms.append((a - j, b + j, False, -self.qm1))
        del m0
        out = tuple(terms)
        self._push[key] = out
        return out

    def lmul_gen(self, i: int, c: tuple, w: Perm):
        """T_i * (L^c T_w) as a tuple of ((c', w'), coefficient)."""
        key = (i, c, w)
        out = self._lmul.get(key)
        if out is not None:
            return out
        terms = []
        if i == 0:
            c1 = c[0] + 1
            if c1 < self.r:
                terms.append((((c1,) + c[1:], w), self.one))
            else:
                for j in range(self.r):
                    coeff = self.cyclo[j]
                    if coeff:
                        terms.append((((j,) + c[1:], w), coeff))
        else:
            a, b = c[i - 1], c[i]
            im = w.images
            longer = im[i - 1] < im[i]
            siw = None
            for ea, eb, has_t, coeff in self._push_terms(a, b):
                cp = c[: i - 1] + (ea, eb) + c[i + 1:]
                if has_t:
                    if siw is None:
                        siw = Perm(im[: i - 1] + (im[i], im[i - 1]) + im[i + 1:])
                    if longer:
                        terms.append(((cp, siw), coeff))
                    else:
                        terms.append(((cp, w), coeff * self.qm1))
                        terms.append(((cp, siw), coeff * self.q))
                else:
                    terms.append(((cp, w), coeff))
        out = tuple(terms)
        self._lmul[key] = out
        return out

    def lmul_gen_terms(self, i: int, terms: dict) -> dict:
        """T_i * (sparse element given as a terms dict)."""
        out: dict = {}
        for (c, w), coeff in terms.items():
            for key, factor in self.lmul_gen(i, c, w):
                new = out.get(key)
                new = coeff * factor if new is None else new + coeff * factor
                if new:
                    out[key] = new
                elif key in out:
                    del out[key]
        return out

    def apply_word(self, letters, terms: dict) -> dict:
        """(T_{a_1} T_{a_2} ... T_{a_k}) * element, letters = (a_1, ..., a_k)."""
        for letter in reversed(letters):
            terms = self.lmul_gen_terms(letter, terms)
        return terms

    def term_word(self, c: tuple, w: Perm):
        """(q-exponent, generator letters) with L^c T_w = q^e T_{letters}."""
        key = (c, w)
        out = self._word.get(key)
        if out is None:
            letters = []
            qexp = 0
            for k, ck in enumerate(c, start=1):
                if ck:
                    lk = tuple(range(k - 1, 0, -1)) + tuple(range(k))
                    letters.extend(lk * ck)
                    qexp += ck * (1 - k)
            letters.extend(w.reduced_word())
            out = self._word[key] = (qexp, tuple(letters))
        return out

    def star_term(self, c: tuple, w: Perm) -> dict:
        """(L^c T_w)^* = T_{w^{-1}} L^c as a terms dict."""
        key = (c, w)
        out = self._star.get(key)
        if out is None:
            base = {(c, self.identity): self.one}
            out = self.apply_word(w.inv().reduced_word(), base)
            self._star[key] = out
        return out


_SHARED: dict = {}


def shared_spec(r: int, n: int, backend: str = SYMBOLIC,
                point: EvalPoint | None = None) -> AlgebraSpec:
    """Memoised AlgebraSpec factory (shares the engine caches)."""
    key = (r, n, backend, point)
    spec = _SHARED.get(key)
    if spec is None:
        spec = _SHARED[key] = AlgebraSpec(n, ParamSpec(r), backend, point)
    return spec


class AlgebraElem:
    """Sparse element of H_q(n) on the Ariki-Koike basis."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec: AlgebraSpec, terms: dict):
        self.spec = spec
        self.terms = {k: v for k, v in terms.items() if v}

    # -- linear structure ---------------------------------------------------
    def _check(self, other: "AlgebraElem"):
        if self.spec is not other.spec:
            raise ValueError("elements belong to different algebra specs")

    def __add__(self, other: "AlgebraElem") -> "AlgebraElem":
        self._check(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            new = out.get(key)
            new = coeff if new is None else new + coeff
            if new:
                out[key] = new
            elif key in out:
                del out[key]
        return AlgebraElem(self.spec, out)

    def __sub__(self, other: "AlgebraElem") -> "AlgebraElem":
        return self + (-other)

    def __neg__(self) -> "AlgebraElem":
        return AlgebraElem(self.spec, {k: -v for k, v in self.terms.items()})

    def scale(self, scalar) -> "AlgebraElem":
        scalar = self.spec.scalar(scalar) if not _is_backend_scalar(self.spec, scalar) else scalar
        if not scalar:
            return AlgebraElem(self.spec, {})
        return AlgebraElem(self.spec, {k: v * scalar for k, v in self.terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction, RatFunc)):
            return self.scale(self.spec.scalar(scalar))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, AlgebraElem):
            return mul(self, other)
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.scale(self.spec.scalar(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElem):
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(other.terms[k] == v for k, v in self.terms.items())

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure maps -------------------------------------------------------
    def star(self) -> "AlgebraElem":
        return star(self)

    def prime(self) -> "AlgebraElem":
        return prime(self)

    def tau(self):
        return tau(self)

    def to_records(self) -> list:
        """Deterministic serialization: sorted records with string coeffs."""
        out = []
        for (c, w) in sorted(self.terms, key=lambda k: (k[0], k[1].images)):
            out.append({"c": list(c), "w": list(w.images), "coeff": str(self.terms[(c, w)])})
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "AlgebraElem(0)"
        bits = []
        for rec in self.to_records():
            mono = []
            for k, ck in enumerate(rec["c"], start=1):
                if ck:
                    mono.append(f"L{k}" if ck == 1 else f"L{k}^{ck}")
            w = Perm(rec["w"])
            if not w.is_identity():
                mono.append(f"T{w.cycle_str()}")
            body = "*".join(mono) if mono else "1"
            bits.append(f"({rec['coeff']})*{body}")
        return " + ".join(bits)


def _is_backend_scalar(spec: AlgebraSpec, x) -> bool:
    if spec.backend == EVAL:
        return isinstance(x, Fraction)
    return isinstance(x, RatFunc)


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def unit(spec: AlgebraSpec) -> AlgebraElem:
    return AlgebraElem(spec, {(spec.zero_c, spec.identity): spec.one})


def from_basis(spec: AlgebraSpec, c: tuple, w: Perm) -> AlgebraElem:
    c = tuple(c)
    if len(c) != spec.n or any(not 0 <= x < spec.r for x in c):
        raise ValueError(f"bad exponent vector {c}")
    return AlgebraElem(spec, {(c, w): spec.one})


def elem_L(spec: AlgebraSpec, k: int) -> AlgebraElem:
    if not 1 <= k <= spec.n:
        raise ValueError(f"L_{k} out of range")
    if spec.r > 1:
        c = tuple(1 if m == k else 0 for m in range(1, spec.n + 1))
        return AlgebraElem(spec, {(c, spec.identity): spec.one})
    # For r = 1 all exponents vanish, so reduce the defining word
    # q^(1-k) T_{k-1} ... T_1 T_0 T_1 ... T_{k-1} instead.
    letters = tuple(range(k - 1, 0, -1)) + tuple(range(k))
    base = {(spec.zero_c, spec.identity): spec.q_power(1 - k)}
    return AlgebraElem(spec, spec.apply_word(letters, base))


def gen_T(spec: AlgebraSpec, i: int) -> AlgebraElem:
    if i == 0:
        return elem_L(spec, 1)
    if not 1 <= i < spec.n:
        raise ValueError(f"T_{i} out of range")
    from arikikoike.combinat import s_adj

    return AlgebraElem(spec, {(spec.zero_c, s_adj(i, spec.n)): spec.one})


def from_perm(spec: AlgebraSpec, w: Perm) -> AlgebraElem:
    """The basis element T_w."""
    if w.degree > spec.n:
        raise ValueError("permutation degree exceeds n")
    w = Perm(tuple(w(k) for k in range(1, spec.n + 1)))
    return AlgebraElem(spec, {(spec.zero_c, w): spec.one})


# ---------------------------------------------------------------------------
# Products and structure maps
# ---------------------------------------------------------------------------

def mul(a: AlgebraElem, b: AlgebraElem) -> AlgebraElem:
    a._check(b)
    spec = a.spec
    out: dict = {}
    for (c, w), coeff in a.terms.items():
        qexp, letters = spec.term_word(c, w)
        scale = coeff * spec.q_power(qexp)
        for key, val in spec.apply_word(letters, b.terms).items():
            new = out.get(key)
            new = scale * val if new is None else new + scale * val
            if new:
                out[key] = new
            elif key in out:
                del out[key]
    return AlgebraElem(spec, out)


def lmul_word(word, a: AlgebraElem) -> AlgebraElem:
    """(T_{word}) * a for a generator word (letters >= 0)."""
    return AlgebraElem(a.spec, a.spec.apply_word(tuple(word), a.terms))


def rmul_gen(a: AlgebraElem, i: int) -> AlgebraElem:
    """a * T_i for i >= 1 (the L-part of basis terms is untouched)."""
    spec = a.spec
    if not 1 <= i < spec.n:
        raise ValueError(f"T_{i} out of range")
    out: dict = {}

    def bump(key, val):
        new = out.get(key)
        new = val if new is None else new + val
        if new:
            out[key] = new
        elif key in out:
            del out[key]

    for (c, w), coeff in a.terms.items():
        im = w.images
        # w * s_i swaps the values i, i+1; longer iff i sits left of i+1.
        wsi = Perm(tuple(i + 1 if v == i else i if v == i + 1 else v for v in im))
        if im.index(i) < im.index(i + 1):
            bump((c, wsi), coeff)
        else:
            bump((c, w), coeff * spec.qm1)
            bump((c, wsi), coeff * spec.q)
    return AlgebraElem(spec, out)


def rmul_word(a: AlgebraElem, word) -> AlgebraElem:
    """a * T_{word} for a word in the generators T_1, ..., T_{n-1}."""
    for letter in word:
        a = rmul_gen(a, letter)
    return a


def star(a: AlgebraElem) -> AlgebraElem:
    """The *-antiautomorphism: T_w -> T_{w^{-1}}, L_k -> L_k."""
    spec = a.spec
    out: dict = {}
    for (c, w), coeff in a.terms.items():
        for key, val in spec.star_term(c, w).items():
            new = out.get(key)
            new = coeff * val if new is None else new + coeff * val
            if new:
                out[key] = new
            elif key in out:
                del out[key]
    return AlgebraElem(spec, out)


def prime(a: AlgebraElem) -> AlgebraElem:
    """The ' involution (SYMBOLIC backend only)."""
    spec = a.spec
    if spec.backend != SYMBOLIC:
        raise ValueError("prime is only defined on the symbolic backend")
    out: dict = {}
    for (c, w), coeff in a.terms.items():
        ell = w.length
        factor = spec.params.q(-ell) * (-1) ** ell
        out[(c, w)] = coeff.prime() * factor
    return AlgebraElem(spec, out)


def tau(a: AlgebraElem):
    """The symmetrizing trace: coefficient of the identity basis element."""
    spec = a.spec
    coeff = a.terms.get((spec.zero_c, spec.identity))
    if coeff is None:
        return spec.scalar(0)
    return coeff


def dim_check(spec: AlgebraSpec) -> int:
    """r^n * n!, asserted equal to the basis-index count."""
    expected = spec.r ** spec.n * math.factorial(spec.n)
    count = len(list(itertools.product(range(spec.r), repeat=spec.n))) * math.factorial(spec.n)
    assert count == expected
    return expected


def basis_indices(spec: AlgebraSpec):
    """All (c, w) basis indices in a fixed deterministic order."""
    perms = sorted(
        (Perm(p) for p in itertools.permutations(range(1, spec.n + 1))),
        key=lambda w: w.images,
    )
    for c in itertools.product(range(spec.r), repeat=spec.n):
        for w in perms:
            yield (c, w)
