"""Defining relations, structure maps, and trace for the normal-form engine."""

import itertools
import math
import random

import pytest

from arikikoike.algebra import (
    AlgebraElem,
    basis_indices,
    dim_check,
    elem_L,
    from_basis,
    from_perm,
    gen_T,
    lmul_word,
    mul,
    prime,
    rmul_word,
    shared_spec,
    star,
    tau,
    unit,
)
from arikikoike.combinat import Perm, s_adj
from arikikoike.verify import random_elem


def _zero(spec):
    return AlgebraElem(spec, {})


def _specs(spec22, spec32, spec13, spec23_eval):
    return [spec22, spec32, spec13, spec23_eval]


# ---------------------------------------------------------------------------
# Defining relations
# ---------------------------------------------------------------------------

def test_quadratic_relation(spec22, spec32, spec13, spec23_eval):
    for spec in _specs(spec22, spec32, spec13, spec23_eval):
        for i in range(1, spec.n):
            T = gen_T(spec, i)
            assert mul(T, T) == T.scale(spec.qm1) + unit(spec).scale(spec.q)


def test_cyclotomic_relation(spec22, spec32, spec13, spec23_eval):
    for spec in _specs(spec22, spec32, spec13, spec23_eval):
        acc = unit(spec)
        for s in range(1, spec.r + 1):
            acc = mul(gen_T(spec, 0) - unit(spec).scale(spec.scalar(spec.params.Q(s))), acc)
        assert acc.is_zero()


def test_braid_relations(spec23_eval):
    spec = spec23_eval
    T0, T1, T2 = (gen_T(spec, i) for i in range(3))
    assert mul(mul(mul(T0, T1), T0), T1) == mul(mul(mul(T1, T0), T1), T0)
    assert mul(mul(T1, T2), T1) == mul(mul(T2, T1), T2)
    assert mul(T0, T2) == mul(T2, T0)


def test_jucys_murphy_commute_and_word_form(spec22, spec23_eval):
    for spec in (spec22, spec23_eval):
        Ls = [elem_L(spec, k) for k in range(1, spec.n + 1)]
        for a in range(spec.n):
            for b in range(a + 1, spec.n):
                assert mul(Ls[a], Ls[b]) == mul(Ls[b], Ls[a])
        # L_m = q^(1-m) T_{m-1} ... T_1 T_0 T_1 ... T_{m-1}
        for m in range(1, spec.n + 1):
            word = tuple(range(m - 1, 0, -1)) + tuple(range(m))
            got = lmul_word(word, unit(spec)).scale(spec.q_power(1 - m))
            assert got == Ls[m - 1]


def test_l_powers_stay_in_basis(spec32):
    spec = spec32
    L1 = elem_L(spec, 1)
    p = unit(spec)
    for _ in range(2 * spec.r):
        p = mul(L1, p)
        assert all(0 <= x < spec.r for (c, w) in p.terms for x in c)


# ---------------------------------------------------------------------------
# Basis, dimension, products of basis elements
# ---------------------------------------------------------------------------

def test_dimension(spec22, spec32, spec13, spec23_eval):
    for spec in _specs(spec22, spec32, spec13, spec23_eval):
        want = spec.r ** spec.n * math.factorial(spec.n)
        assert dim_check(spec) == want
        assert len(list(basis_indices(spec))) == want


def test_t_w_concatenation(spec23_eval):
    # T_u T_v = T_{uv} whenever lengths add.
    spec = spec23_eval
    u = s_adj(1, 3)
    v = s_adj(2, 3)
    uv = u * v
    assert uv.length == u.length + v.length
    assert mul(from_perm(spec, u), from_perm(spec, v)) == from_perm(spec, uv)


def test_rmul_matches_mul(spec22, spec23_eval):
    for spec in (spec22, spec23_eval):
        rng = random.Random(11)
        for _ in range(5):
            a = random_elem(spec, rng)
            images = list(range(1, spec.n + 1))
            rng.shuffle(images)
            w = Perm(images)
            word = w.reduced_word()
            assert rmul_word(a, word) == mul(a, from_perm(spec, w))


def test_from_basis_validation(spec22):
    with pytest.raises(ValueError):
        from_basis(spec22, (2, 0), Perm.identity(2))
    with pytest.raises(ValueError):
        from_basis(spec22, (0,), Perm.identity(2))
    with pytest.raises(ValueError):
        elem_L(spec22, 3)
    with pytest.raises(ValueError):
        gen_T(spec22, 2)


# ---------------------------------------------------------------------------
# Linear structure and random identities
# ---------------------------------------------------------------------------

def test_ring_axioms_on_random_elements(spec22, spec23_eval):
    for spec in (spec22, spec23_eval):
        rng = random.Random(3)
        for _ in range(4):
            a, b, c = (random_elem(spec, rng) for _ in range(3))
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
            assert mul(a, b + c) == mul(a, b) + mul(a, c)
            assert mul(a + b, c) == mul(a, c) + mul(b, c)
            assert mul(unit(spec), a) == a
            assert mul(a, unit(spec)) == a
            assert (a - a).is_zero()


def test_scalar_operators(spec22):
    spec = spec22
    a = gen_T(spec, 1) + elem_L(spec, 2)
    assert 2 * a == a + a
    assert a * 2 == a + a
    assert (-a) + a == _zero(spec)
    assert a.scale(0).is_zero()


# ---------------------------------------------------------------------------
# Structure maps: star, prime, tau
# ---------------------------------------------------------------------------

def test_star_fixes_generators_and_reverses_products(spec22, spec23_eval):
    for spec in (spec22, spec23_eval):
        for i in range(spec.n):
            assert star(gen_T(spec, i)) == gen_T(spec, i)
        for k in range(1, spec.n + 1):
            assert star(elem_L(spec, k)) == elem_L(spec, k)
        rng = random.Random(17)
        for _ in range(4):
            a, b = random_elem(spec, rng), random_elem(spec, rng)
            assert star(mul(a, b)) == mul(star(b), star(a))
            assert star(star(a)) == a
            assert tau(star(a)) == tau(a)


def test_prime_is_an_algebra_involution(spec22):
    spec = spec22
    rng = random.Random(23)
    for _ in range(4):
        a, b = random_elem(spec, rng), random_elem(spec, rng)
        assert prime(prime(a)) == a
        assert prime(mul(a, b)) == mul(prime(a), prime(b))
        assert prime(a + b) == prime(a) + prime(b)
    # T_i' = -q^{-1} T_i for i >= 1; L_k' = L_k (with Q-reversed coefficients).
    T1 = gen_T(spec, 1)
    assert prime(T1) == T1.scale(-spec.params.q(-1))
    Qs = spec.scalar(spec.params.Q(1))
    assert prime(unit(spec).scale(Qs)) == unit(spec).scale(spec.scalar(spec.params.Q(2)))


def test_prime_requires_symbolic_backend(spec23_eval):
    with pytest.raises(ValueError):
        prime(unit(spec23_eval))


def test_tau_values(spec22, spec23_eval):
    for spec in (spec22, spec23_eval):
        assert tau(unit(spec)) == spec.one
        for i in range(1, spec.n):
            assert tau(gen_T(spec, i)) == spec.scalar(0)
        # tau(T_x T_y) = q^l(x) [y = x^{-1}]
        perms = [Perm(p) for p in itertools.permutations(range(1, spec.n + 1))]
        for x in perms:
            for y in perms:
                got = tau(mul(from_perm(spec, x), from_perm(spec, y)))
                want = spec.q_power(x.length) if y == x.inv() else spec.scalar(0)
                assert got == want
        rng = random.Random(29)
        a, b = random_elem(spec, rng), random_elem(spec, rng)
        assert tau(mul(a, b)) == tau(mul(b, a))


def test_tau_t0_moment(spec22):
    # tau(T_0) = tau(L_1) is the coefficient of 1 in the basis: zero unless r=1.
    assert tau(gen_T(spec22, 0)) == spec22.scalar(0)
    spec1 = shared_spec(1, 2, "symbolic", None)
    assert tau(gen_T(spec1, 0)) == spec1.scalar(spec1.params.Q(1))


def test_spec_mismatch_rejected(spec22, spec32):
    with pytest.raises(ValueError):
        mul(unit(spec22), unit(spec32))


def test_shared_spec_is_memoised():
    assert shared_spec(2, 2) is shared_spec(2, 2)
