"""Seminormal structure: idempotents F_t, orthogonal basis f_st, matrix
units, Specht representations, and the Ψ/Φ and dual g_st elements."""

from __future__ import annotations

from arikikoike.algebra import (
    AlgebraElem,
    AlgebraSpec,
    elem_L,
    mul,
    rmul_gen,
    tau,
    unit,
)
from arikikoike.combinat import (
    Multipartition,
    Tableau,
    down_step,
    multipartitions,
    residue_set,
    std_tableaux,
    t_row,
)

__all__ = [
    "F_t",
    "F_lambda",
    "f_st",
    "gamma_algebraic",
    "matrix_units",
    "L_spectral",
    "L_minpoly",
    "specht_rep",
    "character",
    "trace_decomposition_check",
    "psi_phi",
    "g_st",
]


def _require_semisimple(spec: AlgebraSpec):
    if spec.backend == "eval" and not spec.point.semisimple:
        raise ValueError(
            "seminormal operations need a semisimple evaluation point "
            "(P_H must not vanish)"
        )


def F_t(spec: AlgebraSpec, t: Tableau) -> AlgebraElem:
    """F_t = ∏_k ∏_{c ∈ R(k), c ≠ res_t(k)} (L_k − c)/(res_t(k) − c)."""
    _require_semisimple(spec)
    key = ("F", t)
    out = spec.cache.get(key)
    if out is not None:
        return out
    ps = spec.params
    out = unit(spec)
    for k in range(1, spec.n + 1):
        res = t.residue(k, ps)
        Lk = elem_L(spec, k)
        for c in residue_set(k, ps):
            if c == res:  # symbolic comparison, exact for any backend
                continue
            denom = spec.scalar(ps.one / (res - c))
            factor = (Lk - unit(spec).scale(spec.scalar(c))).scale(denom)
            out = mul(factor, out)
    spec.cache[key] = out
    return out


def F_lambda(spec: AlgebraSpec, lam: Multipartition) -> AlgebraElem:
    """F_λ = Σ_{t ∈ Std(λ)} F_t."""
    out = AlgebraElem(spec, {})
    for t in std_tableaux(lam):
        out = out + F_t(spec, t)
    return out


def f_st(spec: AlgebraSpec, s: Tableau, t: Tableau) -> AlgebraElem:
    """f_st = F_s m_st F_t."""
    from arikikoike.cellular import m_st

    key = ("f", s, t)
    out = spec.cache.get(key)
    if out is None:
        out = spec.cache[key] = mul(mul(F_t(spec, s), m_st(spec, s, t)), F_t(spec, t))
    return out


def gamma_algebraic(spec: AlgebraSpec, lam: Multipartition) -> dict:
    """γ_t extracted from f_{t^λ t} f_{t t^λ} = γ_t f_{t^λ t^λ}."""
    base_t = t_row(lam)
    base = f_st(spec, base_t, base_t)
    if base.is_zero():
        raise ArithmeticError("f_{t^λ t^λ} vanished; engine inconsistency")
    probe_key = next(iter(base.terms))
    out = {}
    for t in std_tableaux(lam):
        prod = mul(f_st(spec, base_t, t), f_st(spec, t, base_t))
        gamma = prod.terms.get(probe_key, spec.scalar(0)) / base.terms[probe_key]
        if prod != base.scale(gamma):
            raise ArithmeticError(f"f-product is not a multiple of f_(t^λ t^λ) at {t}")
        out[t] = gamma
    return out


def matrix_units(spec: AlgebraSpec, lam: Multipartition) -> dict:
    """The normalized units f̃_st = γ_t^{-1} f_st for all pairs (s, t)."""
    from arikikoike.combinat import gamma_table

    gammas = {t: spec.scalar(g) for t, g in gamma_table(lam, spec.params).items()}
    tabs = std_tableaux(lam)
    return {
        (s, t): f_st(spec, s, t).scale(1 / gammas[t] if spec.backend == "eval"
                                       else gammas[t].inverse())
        for s in tabs
        for t in tabs
    }


def all_tableaux(spec: AlgebraSpec) -> list:
    """All standard tableaux of all shapes for (r, n), enumeration order."""
    return [
        t for lam in multipartitions(spec.n, spec.r) for t in std_tableaux(lam)
    ]


def L_spectral(spec: AlgebraSpec, k: int) -> bool:
    """Cor 3.17: L_k = Σ_t res_t(k) F_t over all standard tableaux."""
    acc = AlgebraElem(spec, {})
    for t in all_tableaux(spec):
        acc = acc + F_t(spec, t).scale(spec.scalar(t.residue(k, spec.params)))
    return acc == elem_L(spec, k)


def L_minpoly(spec: AlgebraSpec, k: int) -> bool:
    """Cor 3.16: ∏_{c∈R(k)}(L_k − c) = 0, and no proper subproduct vanishes."""
    ps = spec.params
    roots = residue_set(k, ps)
    Lk = elem_L(spec, k)

    def prod_skipping(skip: int | None) -> AlgebraElem:
        out = unit(spec)
        for idx, c in enumerate(roots):
            if idx == skip:
                continue
            out = mul(Lk - unit(spec).scale(spec.scalar(c)), out)
        return out

    if not prod_skipping(None).is_zero():
        return False
    return all(not prod_skipping(i).is_zero() for i in range(len(roots)))


# ---------------------------------------------------------------------------
# Seminormal (Specht) representations
# ---------------------------------------------------------------------------

def specht_rep(spec: AlgebraSpec, lam: Multipartition) -> dict:
    """Matrices ρ(T_i) on the basis Std(λ), rows acting on the right.

    Built purely combinatorially from the seminormal action: ρ(L_1) is
    diagonal with the residues, and ρ(T_i) follows the four-case rule for
    f_s T_i (same row: q; same column: −1; otherwise mixing with the
    residue-ratio coefficients).
    """
    key = ("rep", lam)
    out = spec.cache.get(key)
    if out is not None:
        return out
    ps = spec.params
    tabs = std_tableaux(lam)
    index = {t: i for i, t in enumerate(tabs)}
    dim = len(tabs)
    zero = spec.scalar(0)
    mats = {}
    mats[0] = [
        [spec.scalar(s.residue(1, ps)) if a == b else zero for b in range(dim)]
        for a, s in enumerate(tabs)
    ]
    for i in range(1, spec.n):
        mat = [[zero] * dim for _ in range(dim)]
        for a, s in enumerate(tabs):
            (ri, rj, rs) = s.position(i)
            (ti, tj, ts) = s.position(i + 1)
            if rs == ts and ri == ti:  # same row
                mat[a][a] = spec.q
            elif rs == ts and rj == tj:  # same column
                mat[a][a] = -spec.one
            else:
                t = s.swap(i)
                res_s = s.residue(i, ps)
                res_t = t.residue(i, ps)
                diag = spec.scalar((ps.q() - 1) * res_t / (res_t - res_s))
                mat[a][a] = diag
                if s.d().length < t.d().length:
                    # s strictly dominates t: coefficient of f_t is 1
                    mat[a][index[t]] = spec.one
                else:
                    beta = spec.scalar(
                        (ps.q() * res_s - res_t)
                        * (res_s - ps.q() * res_t)
                        / ((res_t - res_s) ** 2)
                    )
                    mat[a][index[t]] = beta
        mats[i] = mat
    spec.cache[key] = mats
    return mats


def _mat_mul(a, b, zero):
    n = len(a)
    m = len(b[0])
    k_range = range(len(b))
    out = [[zero] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for k in k_range:
            c = ai[k]
            if not c:
                continue
            bk = b[k]
            for j in range(m):
                if bk[j]:
                    oi[j] = oi[j] + c * bk[j]
    return out


def _rho_T_word(spec: AlgebraSpec, lam: Multipartition, w) -> list:
    key = ("rhoT", lam, w)
    out = spec.cache.get(key)
    if out is not None:
        return out
    mats = specht_rep(spec, lam)
    tabs = std_tableaux(lam)
    dim = len(tabs)
    zero = spec.scalar(0)
    acc = [[spec.one if a == b else zero for b in range(dim)] for a in range(dim)]
    for letter in w.reduced_word():
        acc = _mat_mul(acc, mats[letter], zero)
    spec.cache[key] = acc
    return acc


def character(spec: AlgebraSpec, lam: Multipartition, a: AlgebraElem):
    """χ^λ(a): trace of a through the seminormal representation."""
    ps = spec.params
    tabs = std_tableaux(lam)
    total = spec.scalar(0)
    for (c, w), coeff in a.terms.items():
        rho = _rho_T_word(spec, lam, w)
        tr = spec.scalar(0)
        for idx, t in enumerate(tabs):
            if not rho[idx][idx]:
                continue
            d = spec.one
            for k, ck in enumerate(c, start=1):
                if ck:
                    d = d * spec.scalar(t.residue(k, ps)) ** ck
            tr = tr + d * rho[idx][idx]
        total = total + coeff * tr
    return total


def trace_decomposition_check(spec: AlgebraSpec, schur_values: dict) -> bool:
    """Def 2.5: τ(b) = Σ_λ χ^λ(b)/s_λ for every Ariki-Koike basis element."""
    from arikikoike.algebra import basis_indices, from_basis

    lams = multipartitions(spec.n, spec.r)
    for c, w in basis_indices(spec):
        b = from_basis(spec, c, w)
        total = spec.scalar(0)
        for lam in lams:
            total = total + character(spec, lam, b) / schur_values[lam]
        if total != tau(b):
            return False
    return True


# ---------------------------------------------------------------------------
# Ψ / Φ elements and duals
# ---------------------------------------------------------------------------

def psi_phi(spec: AlgebraSpec, t: Tableau):
    """(Ψ_t, Φ_t) built along the canonical dominance chain from t^λ."""
    key = ("psiphi", t)
    out = spec.cache.get(key)
    if out is not None:
        return out
    if t.d().is_identity():
        out = (unit(spec), unit(spec))
    else:
        s, i = down_step(t)
        psi_s, phi_s = psi_phi(spec, s)
        ps = spec.params
        res_s = s.residue(i, ps)
        res_t = t.residue(i, ps)
        a = spec.scalar((ps.q() - 1) * res_t / (res_t - res_s))
        b = spec.scalar((ps.q() - 1) * res_s / (res_s - res_t))
        psi = rmul_gen(psi_s, i) - psi_s.scale(b)
        phi = rmul_gen(phi_s, i) - phi_s.scale(a)
        out = (psi, phi)
    spec.cache[key] = out
    return out


def g_st(spec: AlgebraSpec, s: Tableau, t: Tableau) -> AlgebraElem:
    """g_st = F_{s′} n_st F_{t′}."""
    from arikikoike.cellular import n_st

    return mul(
        mul(F_t(spec, s.conjugate()), n_st(spec, s, t)), F_t(spec, t.conjugate())
    )
