"""Multipartition, tableau, and permutation combinatorics."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arikikoike.combinat import (
    Multipartition,
    Perm,
    Tableau,
    alpha,
    beta_symbol,
    conjugate_partition,
    gamma_closed_col,
    gamma_closed_row,
    gamma_product,
    gamma_recursive,
    gamma_table,
    hooks,
    mp_q_fact,
    multipartitions,
    partitions,
    q_fact,
    q_int,
    residue_set,
    row_hand,
    s_adj,
    s_ij,
    std_tableaux,
    t_col,
    t_row,
    w_ab,
    w_lambda,
    w_lambda_factorization,
)
from arikikoike.ratfunc import ParamSpec


def perms(n_max=6):
    return st.integers(min_value=1, max_value=n_max).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    ).map(Perm)


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------

@settings(max_examples=80, deadline=None)
@given(perms(), perms())
def test_perm_group_laws(u, v):
    n = max(u.degree, v.degree)
    e = Perm.identity(n)
    assert u * u.inv() == e
    assert u.inv() * u == e
    assert (u * v).inv() == v.inv() * u.inv()
    assert abs(u.length - (u * s_adj(1, n + 1)).length) == 1 if n >= 1 else True


@settings(max_examples=80, deadline=None)
@given(perms())
def test_reduced_word_roundtrip(u):
    word = u.reduced_word()
    assert len(word) == u.length
    assert Perm.from_word(word, u.degree) == u


@settings(max_examples=60, deadline=None)
@given(perms(), perms())
def test_composition_convention(u, v):
    # (u * v)(k) = v(u(k)): words concatenate left-to-right.
    for k in range(1, max(u.degree, v.degree) + 1):
        assert (u * v)(k) == v(u(k))


def test_length_is_inversion_count():
    w = Perm((3, 1, 4, 2))
    assert w.length == 3
    assert w.inv().length == 3
    assert Perm.identity(5).length == 0


def test_s_ij_and_w_ab():
    # s_{j,i} = 1 for i > j; w_{a,b} has the displayed two-row form.
    assert s_ij(3, 2, 4).is_identity()
    assert s_ij(1, 3, 4) == Perm((4, 1, 2, 3))
    assert w_ab(2, 3).images == (4, 5, 1, 2, 3)
    # w_{a,b} = s_{a,a+b-1} ... s_{1,b}
    a, b = 3, 2
    w = Perm.identity(a + b)
    for i in range(a, 0, -1):
        w = w * s_ij(i, i + b - 1, a + b)
    assert w == w_ab(a, b)


# ---------------------------------------------------------------------------
# Partitions and multipartitions
# ---------------------------------------------------------------------------

def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_conjugate_partition():
    assert conjugate_partition((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate_partition(conjugate_partition((5, 3, 3, 1))) == (5, 3, 3, 1)
    assert conjugate_partition(()) == ()


def test_multipartition_counts():
    assert len(multipartitions(2, 2)) == 5
    assert len(multipartitions(3, 2)) == 10
    assert len(multipartitions(2, 3)) == 9


def test_multipartition_validation():
    with pytest.raises(ValueError):
        Multipartition(((1, 2),))
    with pytest.raises(ValueError):
        Multipartition(((2, 0),))


def test_dominance_order():
    lams = multipartitions(2, 2)
    top = Multipartition(((2,), ()))
    bot = Multipartition(((), (1, 1)))
    assert all(top.dominates(lam) for lam in lams)
    assert all(lam.dominates(bot) for lam in lams)
    assert lams[0] == top and lams[-1] == bot
    a = Multipartition(((1,), (1,)))
    b = Multipartition(((1, 1), ()))
    assert not a.dominates(b) and not b.dominates(a) or a != b


def test_conjugate_multipartition_reverses_components():
    lam = Multipartition(((2, 1, 1), (2, 1), (2,)))
    conj = lam.conjugate()
    assert conj == Multipartition(((1, 1), (2, 1), (3, 1)))
    assert conj.conjugate() == lam


# ---------------------------------------------------------------------------
# Tableaux
# ---------------------------------------------------------------------------

def test_t_row_and_t_col_fixtures():
    lam = Multipartition(((3, 1), (2, 1), (1, 1)))
    assert t_row(lam) == Tableau((((1, 2, 3), (4,)), ((5, 6), (7,)), ((8,), (9,))))
    lam = Multipartition(((2, 1, 1), (2, 1), (2,)))
    assert t_col(lam) == Tableau((((6, 9), (7,), (8,)), ((3, 5), (4,)), ((1, 2),)))


def test_tableau_d_and_right_action():
    lam = Multipartition(((2, 1), (1,)))
    for t in std_tableaux(lam):
        assert t_row(lam).act(t.d()) == t
        assert t.shape() == lam
    assert t_row(lam).d().is_identity()


def test_std_tableaux_order_and_count():
    lam = Multipartition(((2, 1), (1,)))
    tabs = std_tableaux(lam)
    assert tabs[0] == t_row(lam)
    assert tabs[-1] == t_col(lam)
    lens = [t.d().length for t in tabs]
    assert lens == sorted(lens)
    # |Std| check against the hook length formula within each component spread.
    assert len(std_tableaux(Multipartition(((2,), (1,))))) == 3
    assert len(std_tableaux(Multipartition(((1,), (1,), (1,))))) == 6


def test_standardness_tests_agree():
    lam = Multipartition(((2, 1), (1,)))
    rng = random.Random(5)
    for _ in range(30):
        entries = list(range(1, 5))
        rng.shuffle(entries)
        it = iter(entries)
        t = Tableau((((next(it), next(it)), (next(it),)), ((next(it),),)))
        assert t.is_standard() == t.is_standard_by_restriction()


def test_tableau_dominance_endpoints():
    lam = Multipartition(((2, 1), ()))
    tabs = std_tableaux(lam)
    for t in tabs:
        assert tabs[0].dominates(t)
        assert t.dominates(tabs[-1])


def test_conjugate_tableau_residue_identity():
    # (4.2): res_{t'}(k) = res_t(k)'.
    ps = ParamSpec(2)
    lam = Multipartition(((2,), (1,)))
    for t in std_tableaux(lam):
        tc = t.conjugate()
        assert tc.shape() == lam.conjugate()
        for k in range(1, 4):
            assert tc.residue(k, ps) == t.residue(k, ps).prime()


def test_residue_set_r1_exclusions():
    ps = ParamSpec(1)
    assert ps.res_mono(0, 1) not in residue_set(2, ps)
    assert ps.res_mono(0, 1) not in residue_set(3, ps)
    assert ps.res_mono(1, 1) in residue_set(2, ps)
    ps2 = ParamSpec(2)
    assert len(residue_set(2, ps2)) == 6


# ---------------------------------------------------------------------------
# Gamma coefficients
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("r,n", [(1, 3), (2, 2), (3, 2)])
def test_gamma_four_ways(r, n):
    ps = ParamSpec(r)
    for lam in multipartitions(n, r):
        table = gamma_table(lam, ps)
        for t in std_tableaux(lam):
            g = table[t]
            assert gamma_product(t, ps) == g
            assert gamma_recursive(t, ps) == g
        assert table[t_row(lam)] == gamma_closed_row(lam, ps)
        assert table[t_col(lam)] == gamma_closed_col(lam, ps)


def test_gamma_row_is_q_factorial_for_r1():
    # With a single component there are no cross terms: gamma at t^lambda
    # is exactly [lambda]_q!.
    ps = ParamSpec(1)
    for part in [(3,), (2, 1), (1, 1, 1), (2, 2)]:
        lam = Multipartition((part,))
        assert gamma_closed_row(lam, ps) == mp_q_fact(lam, ps)


def test_alpha_values():
    assert alpha(Multipartition(((3, 1), (2,)))) == 3 + 0 + 1
    assert alpha(Multipartition(((1, 1, 1),))) == 0


# ---------------------------------------------------------------------------
# Hooks, row-hand lengths, beta symbols
# ---------------------------------------------------------------------------

def test_hooks_fixture():
    h = hooks((3, 2))
    assert h == {(1, 1): 4, (1, 2): 3, (1, 3): 1, (2, 1): 2, (2, 2): 1}


def test_row_hand_q_factorial_identity():
    # prod over nodes of [row_hand]_q = [lambda]_q! componentwise.
    ps = ParamSpec(1)
    for part in [(3, 1), (2, 2), (4,), (2, 1, 1)]:
        lam = Multipartition((part,))
        prod = ps.one
        for (i, j), ell in row_hand(part).items():
            prod = prod * q_int(ell, ps)
        assert prod == mp_q_fact(lam, ps)


def test_beta_symbol_shift():
    lam = Multipartition(((2, 1), (1,)))
    b2 = beta_symbol(lam, 2)
    b3 = beta_symbol(lam, 3)
    assert b2 == ((3, 1), (2, 0))
    assert b3 == ((4, 2, 0), (3, 1, 0))
    with pytest.raises(ValueError):
        beta_symbol(lam, 1)


# ---------------------------------------------------------------------------
# w_lambda and its factorization
# ---------------------------------------------------------------------------

def test_w_lambda_fixture():
    lam = Multipartition(((2, 1, 1), (2, 1), (2,)))
    assert w_lambda(lam).cycle_str() == "(1,6,5,3,7,4,8)(2,9)"


def test_w_lambda_factorization_fixture():
    lam = Multipartition(((2, 1, 1), (2, 1), (2,)))
    parts, rest = w_lambda_factorization(lam)
    assert len(parts) == 2
    assert parts[0] == Perm((6, 7, 8, 9, 1, 2, 3, 4, 5))  # w_{4,5}
    assert parts[1] == Perm((3, 4, 5, 1, 2, 6, 7, 8, 9))  # w_{3,2}
    assert rest == Perm((1, 2, 3, 5, 4, 6, 9, 7, 8))  # (4,5)(7,9,8)
    w = Perm.identity(9)
    for p in parts:
        w = w * p
    assert w * rest == w_lambda(lam)
    assert sum(p.length for p in parts) + rest.length == w_lambda(lam).length


def test_w_ab_lengths():
    for n in range(0, 7):
        for a in range(0, n + 1):
            assert w_ab(a, n - a).length == a * (n - a)


@pytest.mark.parametrize("r,n", [(2, 4), (3, 3), (2, 6)])
def test_w_bar_length_formula(r, n):
    for lam in multipartitions(n, r):
        parts, rest = w_lambda_factorization(lam)
        sizes = lam.sizes()
        want = sum(
            sizes[s] * sizes[t] for s in range(r) for t in range(s + 1, r)
        )
        assert sum(p.length for p in parts) == want
        assert want + rest.length == w_lambda(lam).length
