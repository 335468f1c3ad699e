"""Verification suites: each suite runs a battery of exact identity checks
and yields CheckResult records with the smallest failing witness on failure."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from arikikoike.algebra import (
    AlgebraElem,
    AlgebraSpec,
    basis_indices,
    elem_L,
    from_basis,
    from_perm,
    gen_T,
    mul,
    rmul_word,
    star,
    tau,
    unit,
)
from arikikoike.combinat import (
    Multipartition,
    Perm,
    gamma_closed_col,
    gamma_closed_row,
    gamma_product,
    gamma_table,
    multipartitions,
    std_tableaux,
    t_col,
    t_row,
    w_ab,
    w_lambda,
    w_lambda_factorization,
)
from arikikoike.ratfunc import EvalPoint

__all__ = [
    "CheckResult",
    "SUITES",
    "run_suite",
    "suite_engine",
    "suite_combinatorics",
    "suite_cellular",
    "suite_seminormal",
    "suite_involution",
    "suite_psiphi",
    "suite_trace",
    "suite_schur",
    "suite_specialization",
]


@dataclass
class CheckResult:
    suite: str
    check: str
    status: str  # PASS | FAIL | SKIP
    lam: str = ""
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "FAIL"

    def to_record(self) -> dict:
        return {
            "suite": self.suite,
            "check": self.check,
            "status": self.status,
            "lambda": self.lam,
            "witness": self.witness,
        }


def _result(suite, check, ok, lam="", witness=""):
    return CheckResult(
        suite, check, "PASS" if ok else "FAIL", lam, "" if ok else witness
    )


def _sample_perms(n: int, count: int, rng: random.Random) -> list:
    out = []
    for _ in range(count):
        images = list(range(1, n + 1))
        rng.shuffle(images)
        out.append(Perm(tuple(images)))
    return out


# ---------------------------------------------------------------------------
# engine
# ---------------------------------------------------------------------------

def suite_engine(spec: AlgebraSpec):
    name = "engine"
    n, r = spec.n, spec.r
    gens = [gen_T(spec, i) for i in range(n)]
    q, one = spec.q, spec.one

    for i in range(1, n):
        ok = mul(gens[i], gens[i]) == gens[i].scale(q - one) + unit(spec).scale(q)
        yield _result(name, f"quadratic T_{i}", ok, witness=f"T_{i}^2")
    cyclo = unit(spec)
    for s in range(1, r + 1):
        cyclo = mul(gens[0] - unit(spec).scale(spec.scalar(spec.params.Q(s))), cyclo)
    yield _result(name, "cyclotomic relation", cyclo.is_zero(), witness=repr(cyclo))
    if n >= 2:
        lhs = mul(mul(mul(gens[0], gens[1]), gens[0]), gens[1])
        rhs = mul(mul(mul(gens[1], gens[0]), gens[1]), gens[0])
        yield _result(name, "braid T_0T_1T_0T_1", lhs == rhs)
    for i in range(1, n - 1):
        lhs = mul(mul(gens[i], gens[i + 1]), gens[i])
        rhs = mul(mul(gens[i + 1], gens[i]), gens[i + 1])
        yield _result(name, f"braid T_{i}T_{i+1}T_{i}", lhs == rhs)
    for i in range(n):
        for j in range(i + 2, n):
            ok = mul(gens[i], gens[j]) == mul(gens[j], gens[i])
            yield _result(name, f"commuting T_{i}T_{j}", ok)

    Ls = [elem_L(spec, k) for k in range(1, n + 1)]
    ok = all(
        mul(Ls[a], Ls[b]) == mul(Ls[b], Ls[a])
        for a in range(n)
        for b in range(a + 1, n)
    )
    yield _result(name, "Jucys-Murphy elements commute", ok)

    yield _result(name, "dimension r^n n!", spec_dim_check(spec))

    rng = random.Random(20240 + 13 * r + n)
    perms = _sample_perms(n, 4, rng)
    for x in perms:
        for y in perms:
            got = tau(mul(from_perm(spec, x), from_perm(spec, y)))
            want = spec.q_power(x.length) if y == x.inv() else spec.scalar(0)
            yield _result(
                name, "tau(T_xT_y) = q^l(x) delta", got == want,
                witness=f"x={x.cycle_str()} y={y.cycle_str()}",
            )
    elems = [random_elem(spec, rng) for _ in range(3)]
    a, b, c = elems
    yield _result(name, "associativity", mul(mul(a, b), c) == mul(a, mul(b, c)))
    yield _result(name, "trace property tau(ab)=tau(ba)", tau(mul(a, b)) == tau(mul(b, a)))
    yield _result(name, "star antiautomorphism", star(mul(a, b)) == mul(star(b), star(a)))
    yield _result(name, "star involution", star(star(a)) == a)


def spec_dim_check(spec: AlgebraSpec) -> bool:
    return len(list(basis_indices(spec))) == spec.r ** spec.n * math.factorial(spec.n)


def random_elem(spec: AlgebraSpec, rng: random.Random, terms: int = 3) -> AlgebraElem:
    keys = list(basis_indices(spec))
    out = AlgebraElem(spec, {})
    for _ in range(terms):
        c, w = keys[rng.randrange(len(keys))]
        coeff = spec.scalar(rng.randint(-3, 3))
        out = out + from_basis(spec, c, w).scale(coeff)
    return out


# ---------------------------------------------------------------------------
# combinatorics
# ---------------------------------------------------------------------------

def suite_combinatorics(spec: AlgebraSpec):
    name = "combinatorics"
    ps = spec.params

    # Reference fixture: lambda = ((2,1,1),(2,1),(2)) has the stated w_lambda.
    lam9 = Multipartition(((2, 1, 1), (2, 1), (2,)))
    ok = w_lambda(lam9).cycle_str() == "(1,6,5,3,7,4,8)(2,9)"
    yield _result(name, "w_lambda fixture at ((2,1,1),(2,1),(2))", ok,
                  witness=w_lambda(lam9).cycle_str())

    # Factorization lengths are additive, and l(w_{a,b}) = a*b.
    for nn in range(2, 7):
        for a in range(1, nn):
            ok = w_ab(a, nn - a).length == a * (nn - a)
            yield _result(name, f"l(w_({a},{nn-a})) = {a*(nn-a)}", ok)
    for lam in multipartitions(spec.n, spec.r):
        parts, w_rest = w_lambda_factorization(lam)
        total = sum(p.length for p in parts) + w_rest.length
        ok = total == w_lambda(lam).length
        yield _result(name, "factorization lengths additive", ok, lam=str(lam))
        sizes = lam.sizes()
        want = sum(
            sizes[s] * sizes[t]
            for s in range(spec.r)
            for t in range(s + 1, spec.r)
        )
        ok = sum(p.length for p in parts) == want
        yield _result(name, "l(w_bar) = sum |l^(s)||l^(t)|", ok, lam=str(lam))

    # Four independent gamma computations agree.
    for lam in multipartitions(spec.n, spec.r):
        table = gamma_table(lam, ps)
        for t in std_tableaux(lam):
            ok = gamma_product(t, ps) == table[t]
            yield _result(name, "gamma product = recursive", ok, lam=str(lam),
                          witness=str(t))
        ok = table[t_row(lam)] == gamma_closed_row(lam, ps)
        yield _result(name, "gamma closed row form", ok, lam=str(lam))
        ok = table[t_col(lam)] == gamma_closed_col(lam, ps)
        yield _result(name, "gamma closed hook form", ok, lam=str(lam))


# ---------------------------------------------------------------------------
# cellular
# ---------------------------------------------------------------------------

def suite_cellular(spec: AlgebraSpec):
    from arikikoike.cellular import m_lambda, m_st, n_st, z_elem

    name = "cellular"
    for lam in multipartitions(spec.n, spec.r):
        tabs = std_tableaux(lam)
        tl = t_row(lam)
        ok = m_st(spec, tl, tl) == m_lambda(spec, lam)
        yield _result(name, "m_(t^l t^l) = m_lambda", ok, lam=str(lam))
        for s, t in itertools.combinations_with_replacement(tabs, 2):
            ok = star(m_st(spec, s, t)) == m_st(spec, t, s)
            yield _result(name, "m_st* = m_ts", ok, lam=str(lam),
                          witness=f"{s} {t}")
            ok = star(n_st(spec, s, t)) == n_st(spec, t, s)
            yield _result(name, "n_st* = n_ts", ok, lam=str(lam),
                          witness=f"{s} {t}")
        yield _result(name, "z_lambda nonzero", not z_elem(spec, lam).is_zero(),
                      lam=str(lam))
        # tau(z_lambda T_{w_lambda}^*) closed form.
        w = w_lambda(lam)
        val = tau(mul(z_elem(spec, lam), star(rmul_word(unit(spec), w.reduced_word()))))
        expect = spec.q_power(w.length) * ((-1) ** (spec.n * (spec.r - 1)))
        for s, sz in enumerate(lam.sizes(), start=1):
            expect = expect * spec.scalar(spec.params.Q(s)) ** (spec.n - sz)
        yield _result(name, "tau(z_l T_w*) closed form", val == expect, lam=str(lam),
                      witness=str(val))


# ---------------------------------------------------------------------------
# seminormal
# ---------------------------------------------------------------------------

def suite_seminormal(spec: AlgebraSpec):
    from arikikoike.seminormal import (
        F_t,
        L_minpoly,
        L_spectral,
        f_st,
        gamma_algebraic,
        matrix_units,
    )

    name = "seminormal"
    ps = spec.params
    lams = multipartitions(spec.n, spec.r)
    total = AlgebraElem(spec, {})
    for lam in lams:
        for t in std_tableaux(lam):
            F = F_t(spec, t)
            yield _result(name, "F_t idempotent", mul(F, F) == F, lam=str(lam),
                          witness=str(t))
            for k in range(1, spec.n + 1):
                ok = mul(F, elem_L(spec, k)) == F.scale(spec.scalar(t.residue(k, ps)))
                yield _result(name, f"F_t L_{k} = res F_t", ok, lam=str(lam),
                              witness=str(t))
            total = total + F
    yield _result(name, "sum F_t = 1", total == unit(spec))

    for lam in lams:
        tabs = std_tableaux(lam)
        gt = {t: spec.scalar(g) for t, g in gamma_table(lam, ps).items()}
        ga = gamma_algebraic(spec, lam)
        for t in tabs:
            yield _result(name, "gamma algebraic = recursive", ga[t] == gt[t],
                          lam=str(lam), witness=str(t))
        for s, t, v in itertools.product(tabs, repeat=3):
            ok = mul(f_st(spec, s, t), f_st(spec, t, v)) == f_st(spec, s, v).scale(gt[t])
            yield _result(name, "f_st f_tv = gamma_t f_sv", ok, lam=str(lam),
                          witness=f"{s} {t} {v}")
        units_ = matrix_units(spec, lam)
        checked = 0
        for s, t, u, v in itertools.product(tabs, repeat=4):
            ok = mul(units_[(s, t)], units_[(u, v)]) == (
                units_[(s, v)] if t == u else AlgebraElem(spec, {})
            )
            if not ok:
                yield _result(name, "matrix unit law", False, lam=str(lam),
                              witness=f"{s} {t} {u} {v}")
            checked += 1
        yield _result(name, f"matrix unit laws ({checked} tuples)", True, lam=str(lam))
        Fl = AlgebraElem(spec, {})
        for t in tabs:
            Fl = Fl + F_t(spec, t)
        ok = all(mul(Fl, gen_T(spec, i)) == mul(gen_T(spec, i), Fl) for i in range(spec.n))
        yield _result(name, "F_lambda central", ok, lam=str(lam))
    for k in range(1, spec.n + 1):
        yield _result(name, f"minimum polynomial of L_{k}", L_minpoly(spec, k))
        yield _result(name, f"spectral expansion of L_{k}", L_spectral(spec, k))


# ---------------------------------------------------------------------------
# involution
# ---------------------------------------------------------------------------

def suite_involution(spec: AlgebraSpec):
    from arikikoike.schur import schur_hook
    from arikikoike.seminormal import F_t, f_st, g_st

    name = "involution"
    if spec.backend != "symbolic":
        yield CheckResult(name, "prime involution needs the symbolic backend", "SKIP")
        return
    ps = spec.params
    lams = multipartitions(spec.n, spec.r)
    for lam in lams:
        for t in std_tableaux(lam):
            ok = F_t(spec, t).prime() == F_t(spec, t.conjugate())
            yield _result(name, "F_t' = F_(t')", ok, lam=str(lam), witness=str(t))
        yield _result(
            name, "s_(lambda') = s_lambda'",
            schur_hook(lam.conjugate(), ps) == schur_hook(lam, ps).prime(),
            lam=str(lam),
        )
        tabs = std_tableaux(lam)
        gt = gamma_table(lam, ps)
        # n_st here uses plain T_(d(t)) words, so g_st differs from f_st' by
        # the unit (-q)^(l(d(s)) + l(d(t))).
        for s, t in itertools.product(tabs, repeat=2):
            k = s.d().length + t.d().length
            scale = spec.q_power(k) * ((-1) ** k)
            ok = g_st(spec, s, t) == f_st(spec, s, t).prime().scale(scale)
            yield _result(name, "g_st = (-q)^k f_st'", ok, lam=str(lam),
                          witness=f"{s} {t}")
        for t in tabs:
            k = 2 * t.d().length
            scale = spec.scalar(gt[t].prime()) * spec.q_power(k) * ((-1) ** k)
            want = F_t(spec, t.conjugate()).scale(scale)
            yield _result(name, "g_tt = (-q)^k gamma_t' F_(t')",
                          g_st(spec, t, t) == want, lam=str(lam), witness=str(t))
    # Cross-shape orthogonality f_st g_uv = 0 unless t = u'.
    pairs = [
        (lam, std_tableaux(lam)[0], std_tableaux(lam)[-1]) for lam in lams
    ]
    for (lam1, s, t), (lam2, u, v) in itertools.product(pairs, repeat=2):
        if t == u.conjugate():
            continue
        ok = mul(f_st(spec, s, t), g_st(spec, u, v)).is_zero()
        yield _result(name, "f_st g_uv = 0 for t != u'", ok,
                      lam=f"{lam1} {lam2}", witness=f"{t} {u}")
    # z_lambda = gamma'_{t^{lambda'}} f_(t^l t_l).
    from arikikoike.cellular import z_elem

    for lam in lams:
        gprime = spec.scalar(gamma_closed_row(lam.conjugate(), ps).prime())
        ok = z_elem(spec, lam) == f_st(spec, t_row(lam), t_col(lam)).scale(gprime)
        yield _result(name, "z_lambda = gamma' f_(t^l t_l)", ok, lam=str(lam))


# ---------------------------------------------------------------------------
# psi / phi
# ---------------------------------------------------------------------------

def suite_psiphi(spec: AlgebraSpec):
    from arikikoike.cellular import z_elem
    from arikikoike.seminormal import F_t, f_st, psi_phi

    name = "psiphi"
    ps = spec.params
    for lam in multipartitions(spec.n, spec.r):
        tabs = std_tableaux(lam)
        tl = t_row(lam)
        base = f_st(spec, tl, tl)
        gt = gamma_table(lam, ps)
        for t in tabs:
            psi, phi = psi_phi(spec, t)
            ok = mul(psi, F_t(spec, t)) == mul(F_t(spec, tl), phi)
            yield _result(name, "Psi_t F_t = F_(t^l) Phi_t", ok, lam=str(lam),
                          witness=str(t))
            coeff = spec.scalar(gt[tl] / gt[t])
            ok = F_t(spec, tl) == mul(mul(psi, F_t(spec, t)), star(psi)).scale(coeff)
            yield _result(name, "F_(t^l) = (g_(t^l)/g_t) Psi F Psi*", ok,
                          lam=str(lam), witness=str(t))
        for s, t in itertools.product(tabs, repeat=2):
            _, phi_s = psi_phi(spec, s)
            _, phi_t = psi_phi(spec, t)
            ok = f_st(spec, s, t) == mul(mul(star(phi_s), base), phi_t)
            yield _result(name, "f_st = Phi_s* f_(t^l t^l) Phi_t", ok,
                          lam=str(lam), witness=f"{s} {t}")
        g_col = spec.scalar(gt[t_col(lam)])
        gprime = spec.scalar(gamma_closed_row(lam.conjugate(), ps).prime())
        psi_col, _ = psi_phi(spec, t_col(lam))
        lhs = mul(z_elem(spec, lam), star(psi_col))
        ok = lhs == F_t(spec, tl).scale(g_col * gprime)
        yield _result(name, "z_l Psi*_(t_l) = g_(t_l) g' F_(t^l)", ok, lam=str(lam))


# ---------------------------------------------------------------------------
# trace
# ---------------------------------------------------------------------------

def suite_trace(spec: AlgebraSpec):
    from arikikoike.schur import schur_hook
    from arikikoike.seminormal import character

    name = "trace"
    ps = spec.params
    lams = multipartitions(spec.n, spec.r)
    schur = {lam: spec.scalar(schur_hook(lam, ps)) for lam in lams}
    total = spec.scalar(0)
    for lam in lams:
        total = total + spec.scalar(len(std_tableaux(lam))) / schur[lam]
    yield _result(name, "sum |Std(lambda)|/s_lambda = 1", total == spec.one)
    for c, w in basis_indices(spec):
        b = from_basis(spec, c, w)
        acc = spec.scalar(0)
        for lam in lams:
            acc = acc + character(spec, lam, b) / schur[lam]
        yield _result(name, "tau = sum chi/s on basis", acc == tau(b),
                      witness=f"c={c} w={w.cycle_str()}")


# ---------------------------------------------------------------------------
# schur
# ---------------------------------------------------------------------------

def suite_schur(spec: AlgebraSpec):
    from arikikoike.schur import (
        METHODS,
        eta_closed_form,
        eta_shape,
        schur_report,
        symmetry_checks,
    )

    name = "schur"
    ps = spec.params
    for lam in multipartitions(spec.n, spec.r):
        rep = schur_report(spec, lam)
        yield _result(
            name, "four-way agreement " + "/".join(METHODS), rep.agree,
            lam=str(lam),
            witness="; ".join(f"{m}={v}" for m, v in rep.values.items()),
        )
    for t in range(1, spec.r + 1):
        lam = eta_shape(spec.n, spec.r, t)
        from arikikoike.schur import schur_hook

        ok = schur_hook(lam, ps) == eta_closed_form(spec.n, spec.r, t, ps)
        yield _result(name, "one-row closed form", ok, lam=str(lam))
    if spec.backend == "symbolic":
        for check, lam, ok in symmetry_checks(ps, spec.n):
            yield _result(name, f"symmetry {check}", ok, lam=str(lam))
    else:
        yield CheckResult(name, "symmetry checks need the symbolic backend", "SKIP")


# ---------------------------------------------------------------------------
# specialization
# ---------------------------------------------------------------------------

def suite_specialization(spec: AlgebraSpec):
    from arikikoike.schur import schur_hook

    name = "specialization"
    r, n = spec.r, spec.n
    if r > 2:
        yield CheckResult(
            name, "group-algebra points defined for r <= 2 only", "SKIP"
        )
        return
    ps = spec.params
    Q = (Fraction(1),) if r == 1 else (Fraction(-1), Fraction(1))
    pt = EvalPoint(Fraction(1), Q)
    order = r**n * math.factorial(n)
    for lam in multipartitions(n, r):
        val = schur_hook(lam, ps).evaluate(pt)
        ok = len(std_tableaux(lam)) * val == order
        yield _result(name, f"|Std(lambda)| * s_lambda(1) = {order}", ok,
                      lam=str(lam), witness=str(val))


SUITES = {
    "engine": suite_engine,
    "combinatorics": suite_combinatorics,
    "cellular": suite_cellular,
    "seminormal": suite_seminormal,
    "involution": suite_involution,
    "psiphi": suite_psiphi,
    "trace": suite_trace,
    "schur": suite_schur,
    "specialization": suite_specialization,
}


def run_suite(spec: AlgebraSpec, suite: str):
    """Yield CheckResults for one suite, or all of them in declaration order."""
    if suite == "all":
        for key in SUITES:
            yield from SUITES[key](spec)
        return
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}")
    yield from SUITES[suite](spec)
