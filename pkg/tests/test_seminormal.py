"""Seminormal idempotents, orthogonal basis, matrix units, Specht matrices."""

import itertools

import pytest

from arikikoike.algebra import (
    AlgebraElem,
    elem_L,
    gen_T,
    mul,
    shared_spec,
    star,
    unit,
)
from arikikoike.combinat import (
    Multipartition,
    gamma_closed_row,
    gamma_table,
    multipartitions,
    std_tableaux,
    t_col,
    t_row,
)
from arikikoike.ratfunc import EvalPoint
from arikikoike.seminormal import (
    F_lambda,
    F_t,
    L_minpoly,
    L_spectral,
    all_tableaux,
    character,
    f_st,
    g_st,
    gamma_algebraic,
    matrix_units,
    psi_phi,
    specht_rep,
)


def _zero(spec):
    return AlgebraElem(spec, {})


# ---------------------------------------------------------------------------
# F_t idempotents
# ---------------------------------------------------------------------------

def test_F_t_orthogonal_idempotents(spec22):
    spec = spec22
    tabs = all_tableaux(spec)
    Fs = {t: F_t(spec, t) for t in tabs}
    for s in tabs:
        for t in tabs:
            want = Fs[t] if s == t else _zero(spec)
            assert mul(Fs[s], Fs[t]) == want


def test_F_t_sum_to_one(spec22, spec23_eval):
    for spec in (spec22, spec23_eval):
        total = _zero(spec)
        for t in all_tableaux(spec):
            total = total + F_t(spec, t)
        assert total == unit(spec)


def test_F_t_murphy_eigenvalues(spec22):
    spec = spec22
    ps = spec.params
    for t in all_tableaux(spec):
        F = F_t(spec, t)
        for k in range(1, spec.n + 1):
            res = spec.scalar(t.residue(k, ps))
            assert mul(F, elem_L(spec, k)) == F.scale(res)
            assert mul(elem_L(spec, k), F) == F.scale(res)


def test_F_t_star_invariant(spec22):
    for t in all_tableaux(spec22):
        assert star(F_t(spec22, t)) == F_t(spec22, t)


def test_F_lambda_central(spec22):
    spec = spec22
    for lam in multipartitions(spec.n, spec.r):
        Fl = F_lambda(spec, lam)
        for i in range(spec.n):
            T = gen_T(spec, i)
            assert mul(Fl, T) == mul(T, Fl)


def test_semisimple_point_required():
    pt = EvalPoint(2, (3, 5), semisimple=False)
    spec = shared_spec(2, 2, "eval", pt)
    lam = Multipartition(((2,), ()))
    with pytest.raises(ValueError):
        F_t(spec, t_row(lam))


# ---------------------------------------------------------------------------
# Orthogonal basis f_st and matrix units
# ---------------------------------------------------------------------------

def test_f_product_rule(spec22):
    # f_st f_uv = delta_tu gamma_t f_sv, including across shapes.
    spec = spec22
    ps = spec.params
    lams = multipartitions(spec.n, spec.r)
    gammas = {}
    for lam in lams:
        gammas.update(
            {t: spec.scalar(g) for t, g in gamma_table(lam, ps).items()}
        )
    reps = {lam: std_tableaux(lam) for lam in lams}
    for lam in lams:
        tabs = reps[lam]
        for s, t, v in itertools.product(tabs, repeat=3):
            got = mul(f_st(spec, s, t), f_st(spec, t, v))
            assert got == f_st(spec, s, v).scale(gammas[t])
    # Cross-shape products vanish.
    for lam1, lam2 in itertools.combinations(lams, 2):
        s, t = reps[lam1][0], reps[lam1][-1]
        u, v = reps[lam2][0], reps[lam2][-1]
        assert mul(f_st(spec, s, t), f_st(spec, u, v)).is_zero()


def test_f_tt_is_gamma_times_F(spec22):
    spec = spec22
    ps = spec.params
    for lam in multipartitions(spec.n, spec.r):
        gt = gamma_table(lam, ps)
        for t in std_tableaux(lam):
            assert f_st(spec, t, t) == F_t(spec, t).scale(spec.scalar(gt[t]))


def test_gamma_algebraic_matches_recursive(spec22):
    spec = spec22
    ps = spec.params
    for lam in multipartitions(spec.n, spec.r):
        ga = gamma_algebraic(spec, lam)
        gt = gamma_table(lam, ps)
        for t in std_tableaux(lam):
            assert ga[t] == spec.scalar(gt[t])


def test_matrix_unit_laws(spec22):
    spec = spec22
    for lam in multipartitions(spec.n, spec.r):
        tabs = std_tableaux(lam)
        units_ = matrix_units(spec, lam)
        for s, t, u, v in itertools.product(tabs, repeat=4):
            want = units_[(s, v)] if t == u else _zero(spec)
            assert mul(units_[(s, t)], units_[(u, v)]) == want


def test_L_spectral_and_minpoly(spec22, spec23_eval):
    for spec in (spec22, spec23_eval):
        for k in range(1, spec.n + 1):
            assert L_spectral(spec, k)
            assert L_minpoly(spec, k)


# ---------------------------------------------------------------------------
# Specht representations
# ---------------------------------------------------------------------------

def test_specht_matrices_satisfy_relations(spec22, spec32):
    for spec in (spec22, spec32):
        for lam in multipartitions(spec.n, spec.r):
            mats = specht_rep(spec, lam)
            dim = len(std_tableaux(lam))
            zero = spec.scalar(0)
            ident = [[spec.one if a == b else zero for b in range(dim)]
                     for a in range(dim)]

            def mm(a, b):
                return [
                    [sum((a[i][k] * b[k][j] for k in range(dim)), zero)
                     for j in range(dim)]
                    for i in range(dim)
                ]

            def add_scaled(a, b, ca, cb):
                return [
                    [ca * a[i][j] + cb * b[i][j] for j in range(dim)]
                    for i in range(dim)
                ]

            for i in range(1, spec.n):
                T = mats[i]
                # T_i^2 = (q-1) T_i + q
                assert mm(T, T) == add_scaled(T, ident, spec.qm1, spec.q)
            # Cyclotomic relation for rho(T_0) = rho(L_1).
            acc = ident
            for s in range(1, spec.r + 1):
                Q = spec.scalar(spec.params.Q(s))
                acc = mm(add_scaled(mats[0], ident, spec.one, -Q), acc)
            assert acc == [[zero] * dim for _ in range(dim)]
            if spec.n >= 2:
                L = mm(mats[0], mats[1])
                assert mm(mm(L, mats[0]), mats[1]) == mm(mm(mats[1], mats[0]), mm(mats[1], mats[0]))


def test_specht_rows_match_f_basis(spec22):
    # Row a of rho(T_i) gives the expansion f_(t^l, s_a) T_i = sum_b c_ab f_(t^l, s_b).
    spec = spec22
    for lam in multipartitions(spec.n, spec.r):
        tabs = std_tableaux(lam)
        tl = t_row(lam)
        mats = specht_rep(spec, lam)
        for i in range(1, spec.n):
            for a, s in enumerate(tabs):
                lhs = mul(f_st(spec, tl, s), gen_T(spec, i))
                rhs = _zero(spec)
                for b, t in enumerate(tabs):
                    if mats[i][a][b]:
                        rhs = rhs + f_st(spec, tl, t).scale(mats[i][a][b])
                assert lhs == rhs


def test_f_row_module_is_stable(spec22):
    # The span of { f_(t^l, t) } is a right ideal: closed under every generator.
    spec = spec22
    for lam in multipartitions(spec.n, spec.r):
        tabs = std_tableaux(lam)
        tl = t_row(lam)
        mats = specht_rep(spec, lam)
        for a, s in enumerate(tabs):
            lhs = mul(f_st(spec, tl, s), gen_T(spec, 0))
            rhs = _zero(spec)
            for b, t in enumerate(tabs):
                if mats[0][a][b]:
                    rhs = rhs + f_st(spec, tl, t).scale(mats[0][a][b])
            assert lhs == rhs


def test_character_of_identity(spec22, spec23_eval):
    for spec in (spec22, spec23_eval):
        for lam in multipartitions(spec.n, spec.r):
            val = character(spec, lam, unit(spec))
            assert val == spec.scalar(len(std_tableaux(lam)))


# ---------------------------------------------------------------------------
# Psi/Phi ladders and the dual g_st
# ---------------------------------------------------------------------------

def test_psi_phi_intertwine(spec22):
    spec = spec22
    for lam in multipartitions(spec.n, spec.r):
        tl = t_row(lam)
        for t in std_tableaux(lam):
            psi, phi = psi_phi(spec, t)
            assert mul(psi, F_t(spec, t)) == mul(F_t(spec, tl), phi)


def test_phi_transports_f(spec22):
    spec = spec22
    for lam in multipartitions(spec.n, spec.r):
        tl = t_row(lam)
        base = f_st(spec, tl, tl)
        for s, t in itertools.product(std_tableaux(lam), repeat=2):
            _, phi_s = psi_phi(spec, s)
            _, phi_t = psi_phi(spec, t)
            assert f_st(spec, s, t) == mul(mul(star(phi_s), base), phi_t)


def test_g_conjugate_orthogonality(spec22):
    # f_st g_uv = 0 unless t = u'.
    spec = spec22
    lams = multipartitions(spec.n, spec.r)
    pairs = [(std_tableaux(lam)[0], std_tableaux(lam)[-1]) for lam in lams]
    for (s, t), (u, v) in itertools.product(pairs, repeat=2):
        if t == u.conjugate():
            continue
        assert mul(f_st(spec, s, t), g_st(spec, u, v)).is_zero()


def test_F_prime_is_F_of_conjugate(spec22):
    from arikikoike.algebra import prime

    spec = spec22
    for t in all_tableaux(spec):
        assert prime(F_t(spec, t)) == F_t(spec, t.conjugate())


def test_z_lambda_equals_scaled_f(spec22):
    from arikikoike.cellular import z_elem

    spec = spec22
    ps = spec.params
    for lam in multipartitions(spec.n, spec.r):
        gprime = spec.scalar(gamma_closed_row(lam.conjugate(), ps).prime())
        want = f_st(spec, t_row(lam), t_col(lam)).scale(gprime)
        assert z_elem(spec, lam) == want
