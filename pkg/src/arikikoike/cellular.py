"""Murphy-type cellular basis m_st, its dual n_st, and the element z_λ."""

from __future__ import annotations

import itertools

from arikikoike.algebra import (
    AlgebraElem,
    AlgebraSpec,
    from_perm,
    lmul_word,
    mul,
    rmul_word,
    unit,
)
from arikikoike.combinat import Multipartition, Perm, Tableau, t_row, w_lambda

__all__ = [
    "row_stabilizer",
    "x_elem",
    "y_elem",
    "u_plus",
    "u_minus",
    "m_lambda",
    "n_lambda",
    "m_st",
    "n_st",
    "z_elem",
]


def row_stabilizer(lam: Multipartition) -> list:
    """The Young subgroup S_λ: permutations fixing each row of t^λ setwise."""
    n = lam.size
    blocks = [row for comp in t_row(lam).rows for row in comp]
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        images = [0] * n
        for block, perm in zip(blocks, choice):
            for src, dst in zip(block, perm):
                images[src - 1] = dst
        out.append(Perm(images))
    out.sort(key=lambda w: w.images)
    return out


def x_elem(spec: AlgebraSpec, lam: Multipartition) -> AlgebraElem:
    """x_λ = Σ_{w ∈ S_λ} T_w."""
    out = AlgebraElem(spec, {})
    for w in row_stabilizer(lam):
        out = out + from_perm(spec, w)
    return out


def y_elem(spec: AlgebraSpec, lam: Multipartition) -> AlgebraElem:
    """y_λ = Σ_{w ∈ S_λ} (−q)^{−ℓ(w)} T_w."""
    out = AlgebraElem(spec, {})
    for w in row_stabilizer(lam):
        coeff = spec.q_power(-w.length) * ((-1) ** w.length)
        out = out + from_perm(spec, w).scale(coeff)
    return out


def _u_product(spec: AlgebraSpec, lam: Multipartition, q_index) -> AlgebraElem:
    from arikikoike.algebra import elem_L

    out = unit(spec)
    a = lam.a_values()
    for s in range(2, lam.r + 1):
        Q = spec.scalar(spec.params.Q(q_index(s)))
        for k in range(1, a[s - 1] + 1):
            out = mul(elem_L(spec, k) - unit(spec).scale(Q), out)
    return out


def u_plus(spec: AlgebraSpec, lam: Multipartition) -> AlgebraElem:
    """u_λ^+ = ∏_{s=2}^r ∏_{k=1}^{a_s} (L_k − Q_s)."""
    return _u_product(spec, lam, lambda s: s)


def u_minus(spec: AlgebraSpec, lam: Multipartition) -> AlgebraElem:
    """u_λ^- = ∏_{s=2}^r ∏_{k=1}^{a_s} (L_k − Q_{r−s+1})."""
    return _u_product(spec, lam, lambda s: lam.r - s + 1)


def m_lambda(spec: AlgebraSpec, lam: Multipartition) -> AlgebraElem:
    """m_λ = x_λ u_λ^+ (cached per spec)."""
    key = ("m_lambda", lam)
    out = spec.cache.get(key)
    if out is None:
        out = spec.cache[key] = mul(u_plus(spec, lam), x_elem(spec, lam))
    return out


def n_lambda(spec: AlgebraSpec, lam: Multipartition) -> AlgebraElem:
    """n_λ = y_λ u_λ^- (cached per spec)."""
    key = ("n_lambda", lam)
    out = spec.cache.get(key)
    if out is None:
        out = spec.cache[key] = mul(u_minus(spec, lam), y_elem(spec, lam))
    return out


def _sandwich(spec: AlgebraSpec, middle: AlgebraElem, s: Tableau, t: Tableau) -> AlgebraElem:
    if s.shape() != t.shape():
        raise ValueError("tableaux have different shapes")
    out = lmul_word(s.d().inv().reduced_word(), middle)
    return rmul_word(out, t.d().reduced_word())


def m_st(spec: AlgebraSpec, s: Tableau, t: Tableau) -> AlgebraElem:
    """m_st = T_{d(s)}^* m_λ T_{d(t)}."""
    key = ("m_st", s, t)
    out = spec.cache.get(key)
    if out is None:
        out = spec.cache[key] = _sandwich(spec, m_lambda(spec, s.shape()), s, t)
    return out


def n_st(spec: AlgebraSpec, s: Tableau, t: Tableau) -> AlgebraElem:
    """n_st = T_{d(s)}^* n_λ T_{d(t)}."""
    key = ("n_st", s, t)
    out = spec.cache.get(key)
    if out is None:
        out = spec.cache[key] = _sandwich(spec, n_lambda(spec, s.shape()), s, t)
    return out


def z_elem(spec: AlgebraSpec, lam: Multipartition) -> AlgebraElem:
    """z_λ = m_λ T_{w_λ} n_{λ'}."""
    key = ("z", lam)
    out = spec.cache.get(key)
    if out is None:
        left = rmul_word(m_lambda(spec, lam), w_lambda(lam).reduced_word())
        out = spec.cache[key] = mul(left, n_lambda(spec, lam.conjugate()))
    return out
