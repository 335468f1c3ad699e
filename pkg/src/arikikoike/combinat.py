"""Multipartition and tableau combinatorics for the Ariki-Koike workbench.

Conventions:

* Nodes are triples ``(i, j, s)`` = (row, column, component), all 1-based.
* Permutations are stored in one-line notation (1-based image tuples) and
  compose left-to-right: ``(u * v)(k) = v(u(k))``, so reduced words read as
  products of adjacent transpositions from left to right.
* Permutations act on tableaux on the right by relabelling entries,
  ``t = t_row(shape) * d(t)``.
* The node order used for the gamma product (3.6-style) is
  ``(a,b,c) < (i,j,k)`` iff ``c > k`` or (``c == k`` and ``b < j``): later
  components and, within a component, strictly smaller columns count as
  "below".  (The source display transposes this; the closed formula for
  gamma at the row-reading tableau forces this orientation.)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from arikikoike.ratfunc import ParamSpec, RatFunc, q_fact, q_int

__all__ = [
    "Perm",
    "Multipartition",
    "Tableau",
    "partitions",
    "multipartitions",
    "conjugate_partition",
    "std_tableaux",
    "t_row",
    "t_col",
    "residue_set",
    "addable_below",
    "removable_below",
    "gamma_product",
    "gamma_recursive",
    "gamma_table",
    "gamma_closed_row",
    "gamma_closed_col",
    "mp_q_fact",
    "hooks",
    "row_hand",
    "alpha",
    "beta_symbol",
    "s_adj",
    "s_ij",
    "w_ab",
    "w_lambda",
    "w_lambda_factorization",
    "down_step",
]


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------

class Perm:
    """Permutation in one-line notation with cached Coxeter length."""

    __slots__ = ("images", "_len", "_key", "_hash")

    def __init__(self, images):
        self.images = tuple(images)
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")
        key = self.images
        while key and key[-1] == len(key):
            key = key[:-1]
        self._key = key
        self._hash = hash(key)
        self._len = None

    # -- basics -----------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1] if k <= len(self.images) else k

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self._key == other._key

    def __hash__(self):
        return self._hash

    def is_identity(self) -> bool:
        return not self._key

    def __mul__(self, other: "Perm") -> "Perm":
        m = max(self.degree, other.degree)
        return Perm(tuple(other(self(k)) for k in range(1, m + 1)))

    def inv(self) -> "Perm":
        out = [0] * self.degree
        for k, v in enumerate(self.images, start=1):
            out[v - 1] = k
        return Perm(tuple(out))

    @property
    def length(self) -> int:
        """Coxeter length = number of inversions."""
        if self._len is None:
            im = self.images
            n = len(im)
            self._len = sum(
                1 for a in range(n) for b in range(a + 1, n) if im[a] > im[b]
            )
        return self._len

    def reduced_word(self) -> tuple:
        """A reduced word (s_{i_1} ... s_{i_k} left-to-right) for self."""
        im = list(self.images)
        word = []
        # Strip descents on the right: w*s_i swaps the values i, i+1; it
        # shortens w exactly when i appears after i+1 in one-line notation.
        while True:
            pos = {v: p for p, v in enumerate(im)}
            for i in range(1, len(im)):
                if pos[i] > pos[i + 1]:
                    im[pos[i]], im[pos[i + 1]] = i + 1, i
                    word.append(i)
                    break
            else:
                break
        word.reverse()
        return tuple(word)

    def cycles(self) -> list:
        """Nontrivial cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, self.degree + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def cycle_str(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycs)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self) -> str:
        return f"Perm{self.images}"

    # -- constructors -------------------------------------------------------
    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(range(1, n + 1))

    @staticmethod
    def from_word(word, n: int) -> "Perm":
        out = Perm.identity(n)
        for i in word:
            out = out * s_adj(i, n)
        return out


def s_adj(i: int, n: int) -> Perm:
    """Adjacent transposition s_i = (i, i+1) in S_n."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} undefined in S_{n}")
    im = list(range(1, n + 1))
    im[i - 1], im[i] = i + 1, i
    return Perm(im)


def s_ij(i: int, j: int, n: int) -> Perm:
    """s_{i,j} = s_i s_{i+1} ... s_j, with s_{j,i} = 1 for i > j."""
    return Perm.from_word(range(i, j + 1), n)


def w_ab(a: int, b: int) -> Perm:
    """The shuffle w_{a,b} sending 1..a to b+1..b+a and a+1..a+b to 1..b."""
    if a < 0 or b < 0:
        raise ValueError("w_ab needs a, b >= 0")
    return Perm(tuple(range(b + 1, b + a + 1)) + tuple(range(1, b + 1)))


# ---------------------------------------------------------------------------
# Partitions and multipartitions
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple:
    """All partitions of n (tuples, weakly decreasing), largest-first."""
    if n == 0:
        return ((),)
    if max_part is None or max_part > n:
        max_part = n
    out = []
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def conjugate_partition(p: tuple) -> tuple:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


@dataclass(frozen=True)
class Multipartition:
    """An r-tuple of partitions."""

    comps: tuple

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.comps)
        for c in comps:
            if any(x <= 0 for x in c) or any(c[i] < c[i + 1] for i in range(len(c) - 1)):
                raise ValueError(f"invalid partition component {c}")
        object.__setattr__(self, "comps", comps)

    @property
    def r(self) -> int:
        return len(self.comps)

    @property
    def size(self) -> int:
        return sum(sum(c) for c in self.comps)

    @property
    def length(self) -> int:
        """Maximal number of rows in any component."""
        return max((len(c) for c in self.comps), default=0)

    def sizes(self) -> tuple:
        return tuple(sum(c) for c in self.comps)

    def a_values(self) -> tuple:
        """a_s = |λ^(1)| + ... + |λ^(s-1)| for s = 1..r."""
        out = []
        total = 0
        for c in self.comps:
            out.append(total)
            total += sum(c)
        return tuple(out)

    def row(self, i: int, s: int) -> int:
        """λ^(s)_i with zero padding."""
        c = self.comps[s - 1]
        return c[i - 1] if 1 <= i <= len(c) else 0

    def nodes(self) -> list:
        """All nodes (i, j, s), component-major, row-major."""
        return [
            (i, j, s)
            for s, c in enumerate(self.comps, start=1)
            for i, row in enumerate(c, start=1)
            for j in range(1, row + 1)
        ]

    def contains(self, node) -> bool:
        i, j, s = node
        return 1 <= s <= self.r and 1 <= i and 1 <= j <= self.row(i, s)

    def addable_nodes(self) -> list:
        out = []
        for s, c in enumerate(self.comps, start=1):
            for i in range(1, len(c) + 2):
                if i == 1 or self.row(i, s) < self.row(i - 1, s):
                    out.append((i, self.row(i, s) + 1, s))
        return out

    def removable_nodes(self) -> list:
        out = []
        for s, c in enumerate(self.comps, start=1):
            for i in range(1, len(c) + 1):
                if self.row(i, s) > self.row(i + 1, s):
                    out.append((i, self.row(i, s), s))
        return out

    def remove(self, node) -> "Multipartition":
        i, j, s = node
        comps = [list(c) for c in self.comps]
        comps[s - 1][i - 1] -= 1
        if comps[s - 1][i - 1] == 0:
            comps[s - 1].pop()
        return Multipartition(tuple(tuple(c) for c in comps))

    def conjugate(self) -> "Multipartition":
        return Multipartition(
            tuple(conjugate_partition(self.comps[self.r - s]) for s in range(1, self.r + 1))
        )

    def _cumsums(self, depth: int) -> tuple:
        out = []
        total = 0
        for c in self.comps:
            running = 0
            for i in range(depth):
                running += c[i] if i < len(c) else 0
                out.append(total + running)
            total += sum(c)
        return tuple(out)

    def dominates(self, other: "Multipartition") -> bool:
        if self.size != other.size or self.r != other.r:
            raise ValueError("dominance needs equal size and r")
        depth = max(self.size, 1)
        return all(a >= b for a, b in zip(self._cumsums(depth), other._cumsums(depth)))

    def strictly_dominates(self, other: "Multipartition") -> bool:
        return self != other and self.dominates(other)

    def sort_key(self) -> tuple:
        return self._cumsums(max(self.size, 1))

    def __str__(self) -> str:
        return "(" + "|".join(",".join(map(str, c)) for c in self.comps) + ")"


def multipartitions(n: int, r: int) -> list:
    """All multipartitions of n with r components, dominance-compatible order."""
    if n < 0 or r < 1:
        raise ValueError("need n >= 0, r >= 1")
    out = []

    def build(remaining: int, comps: list):
        if len(comps) == r - 1:
            for p in partitions(remaining):
                out.append(Multipartition(tuple(comps) + (p,)))
            return
        for k in range(remaining, -1, -1):
            for p in partitions(k):
                build(remaining - k, comps + [p])

    build(n, [])
    out.sort(key=lambda lam: lam.sort_key(), reverse=True)
    return out


# ---------------------------------------------------------------------------
# Tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Tableau:
    """Filling of a multipartition diagram by 1..n (row tuples per component)."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "rows", tuple(tuple(tuple(row) for row in comp) for comp in self.rows)
        )

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return sum(len(row) for comp in self.rows for row in comp)

    def shape(self) -> Multipartition:
        return Multipartition(tuple(tuple(len(row) for row in comp) for comp in self.rows))

    def entry(self, node) -> int:
        i, j, s = node
        return self.rows[s - 1][i - 1][j - 1]

    def position(self, k: int):
        """Node (i, j, s) containing the entry k."""
        for s, comp in enumerate(self.rows, start=1):
            for i, row in enumerate(comp, start=1):
                for j, e in enumerate(row, start=1):
                    if e == k:
                        return (i, j, s)
        raise ValueError(f"entry {k} not in tableau")

    def restricted_shape(self, k: int) -> Multipartition:
        """Shape of t restricted to entries <= k; raises if not a diagram."""
        comps = []
        for comp in self.rows:
            counts = [sum(1 for e in row if e <= k) for row in comp]
            while counts and counts[-1] == 0:
                counts.pop()
            if any(counts[i] < counts[i + 1] for i in range(len(counts) - 1)) or any(
                c == 0 for c in counts
            ):
                raise ValueError("restriction is not a diagram")
            comps.append(tuple(counts))
        return Multipartition(tuple(comps))

    def is_standard(self) -> bool:
        for comp in self.rows:
            for i, row in enumerate(comp):
                for j, e in enumerate(row):
                    if j + 1 < len(row) and row[j + 1] <= e:
                        return False
                    if i + 1 < len(comp) and j < len(comp[i + 1]) and comp[i + 1][j] <= e:
                        return False
        return True

    def is_standard_by_restriction(self) -> bool:
        """Equivalent standardness test: for every k the entries <= k occupy
        the leftmost cells of their rows and form a diagram."""
        try:
            for k in range(1, self.n + 1):
                self.restricted_shape(k)
        except ValueError:
            return False
        for comp in self.rows:
            for row in comp:
                for k in range(1, self.n + 1):
                    cnt = sum(1 for e in row if e <= k)
                    if any(e > k for e in row[:cnt]):
                        return False
        return True

    def d(self) -> Perm:
        """The permutation with t = t_row(shape) * d(t)."""
        base = t_row(self.shape())
        images = [0] * self.n
        for node in self.shape().nodes():
            images[base.entry(node) - 1] = self.entry(node)
        return Perm(images)

    def act(self, w: Perm) -> "Tableau":
        """Right action: replace every entry e by w(e)."""
        return Tableau(
            tuple(tuple(tuple(w(e) for e in row) for row in comp) for comp in self.rows)
        )

    def swap(self, i: int) -> "Tableau":
        """Exchange the entries i and i+1."""
        sub = {i: i + 1, i + 1: i}
        return Tableau(
            tuple(
                tuple(tuple(sub.get(e, e) for e in row) for row in comp)
                for comp in self.rows
            )
        )

    def conjugate(self) -> "Tableau":
        """Transpose every component and reverse the component order."""
        out = []
        for s in range(self.r, 0, -1):
            comp = self.rows[s - 1]
            ncols = len(comp[0]) if comp else 0
            out.append(
                tuple(
                    tuple(comp[i][j] for i in range(len(comp)) if j < len(comp[i]))
                    for j in range(ncols)
                )
            )
        return Tableau(tuple(out))

    def residue(self, k: int, ps: ParamSpec) -> RatFunc:
        """res_t(k) = q^(j-i) Q_s for k at node (i, j, s)."""
        i, j, s = self.position(k)
        return ps.res_mono(j - i, s)

    def row_word(self) -> tuple:
        return tuple(e for comp in self.rows for row in comp for e in row)

    def dominates(self, other: "Tableau") -> bool:
        return all(
            self.restricted_shape(k).dominates(other.restricted_shape(k))
            for k in range(1, self.n + 1)
        )

    def __str__(self) -> str:
        comps = [
            "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in comp) + "]"
            for comp in self.rows
        ]
        return "(" + ",".join(comps) + ")"


def t_row(lam: Multipartition) -> Tableau:
    """The row-reading tableau t^λ: 1..n along rows, components in order."""
    rows = []
    k = 0
    for comp in lam.comps:
        comp_rows = []
        for row_len in comp:
            comp_rows.append(tuple(range(k + 1, k + row_len + 1)))
            k += row_len
        rows.append(tuple(comp_rows))
    return Tableau(tuple(rows))


def t_col(lam: Multipartition) -> Tableau:
    """The column-reading tableau t_λ = conjugate of t^(λ') ."""
    return t_row(lam.conjugate()).conjugate()


def std_tableaux(lam: Multipartition) -> list:
    """All standard λ-tableaux, sorted by (ℓ(d(t)), row word); t^λ first, t_λ last."""
    n = lam.size

    def build(shape: Multipartition, k: int):
        if k == 0:
            return [Tableau(tuple(() for _ in range(lam.r)))]
        out = []
        for node in shape.removable_nodes():
            for sub in build(shape.remove(node), k - 1):
                i, j, s = node
                comps = [list(map(list, comp)) for comp in sub.rows]
                while len(comps[s - 1]) < i:
                    comps[s - 1].append([])
                comps[s - 1][i - 1].append(k)
                out.append(Tableau(tuple(tuple(map(tuple, comp)) for comp in comps)))
        return out

    tabs = build(lam, n)
    tabs.sort(key=lambda t: (t.d().length, t.row_word()))
    return tabs


# ---------------------------------------------------------------------------
# Residue sets, addable/removable data, gamma coefficients
# ---------------------------------------------------------------------------

def residue_set(k: int, ps: ParamSpec) -> list:
    """R(k) = {q^d Q_s : |d| < k, excluding d=0 when r=1 and k in {2,3}}."""
    if k < 1:
        raise ValueError("k must be positive")
    out = []
    for s in range(1, ps.r + 1):
        for d in range(-(k - 1), k):
            if d == 0 and ps.r == 1 and k in (2, 3):
                continue
            out.append(ps.res_mono(d, s))
    return out


def _node_below(y, x) -> bool:
    """The order on nodes used by the gamma product (see module docstring)."""
    a, b, c = y
    i, j, k = x
    return c > k or (c == k and b < j)


def addable_below(t: Tableau, i: int) -> list:
    """Addable nodes of Shape(t↓i) strictly below the node of i."""
    x = t.position(i)
    shape = t.restricted_shape(i)
    return [y for y in shape.addable_nodes() if _node_below(y, x)]


def removable_below(t: Tableau, i: int) -> list:
    """Removable nodes of Shape(t↓(i-1)) strictly below the node of i."""
    x = t.position(i)
    shape = t.restricted_shape(i - 1)
    return [y for y in shape.removable_nodes() if _node_below(y, x)]


def _node_res(node, ps: ParamSpec) -> RatFunc:
    i, j, s = node
    return ps.res_mono(j - i, s)


def alpha(lam: Multipartition) -> int:
    """α(λ) = ½ Σ (λ_i^(s) − 1) λ_i^(s)."""
    return sum(row * (row - 1) // 2 for comp in lam.comps for row in comp)


def gamma_product(t: Tableau, ps: ParamSpec) -> RatFunc:
    """γ_t by the addable/removable product formula."""
    lam = t.shape()
    out = ps.q(t.d().length + alpha(lam))
    for i in range(1, t.n + 1):
        res_i = t.residue(i, ps)
        for y in addable_below(t, i):
            out = out * (res_i - _node_res(y, ps))
        for y in removable_below(t, i):
            out = out / (res_i - _node_res(y, ps))
    return out


def mp_q_fact(lam: Multipartition, ps: ParamSpec) -> RatFunc:
    """[λ]_q! = product of [row length]_q! over all rows of all components."""
    out = ps.one
    for comp in lam.comps:
        for row in comp:
            out = out * q_fact(row, ps)
    return out


def gamma_closed_row(lam: Multipartition, ps: ParamSpec) -> RatFunc:
    """Closed form for γ at t^λ: [λ]_q! ∏_{s<t} ∏_{(i,j)∈λ^(s)} (q^(j-i)Q_s − Q_t)."""
    out = mp_q_fact(lam, ps)
    for s in range(1, lam.r + 1):
        for tt in range(s + 1, lam.r + 1):
            for i, row in enumerate(lam.comps[s - 1], start=1):
                for j in range(1, row + 1):
                    out = out * (ps.res_mono(j - i, s) - ps.Q(tt))
    return out


def _swap_ratio(s: Tableau, t: Tableau, i: int, ps: ParamSpec) -> RatFunc:
    """γ_t / γ_s for t = s(i, i+1) with s strictly dominating t."""
    rs = s.residue(i, ps)
    rt = t.residue(i, ps)
    return (ps.q() * rs - rt) * (rs - ps.q() * rt) / ((rs - rt) ** 2)


def down_step(t: Tableau):
    """For t ≠ t^λ: the pair (s, i) with s = t(i,i+1) standard, s ▷ t, i minimal."""
    lt = t.d().length
    for i in range(1, t.n):
        s = t.swap(i)
        if s.is_standard() and s.d().length < lt:
            return s, i
    raise ValueError("tableau is already the row-reading tableau")


def gamma_table(lam: Multipartition, ps: ParamSpec) -> dict:
    """γ_t for all t ∈ Std(λ), by (3.7)-style recursion from the closed form."""
    out = {}
    for t in std_tableaux(lam):
        if t.d().is_identity():
            out[t] = gamma_closed_row(lam, ps)
        else:
            s, i = down_step(t)
            out[t] = _swap_ratio(s, t, i, ps) * out[s]
    return out


def gamma_recursive(t: Tableau, ps: ParamSpec) -> RatFunc:
    return gamma_table(t.shape(), ps)[t]


def gamma_closed_col(lam: Multipartition, ps: ParamSpec) -> RatFunc:
    """Closed hook-style form for γ at t_λ."""
    out = ps.q(w_lambda(lam).length)
    for s in range(1, lam.r + 1):
        comp = lam.comps[s - 1]
        conj = conjugate_partition(comp)
        for i, row in enumerate(comp, start=1):
            for j in range(1, row + 1):
                h = row + conj[j - 1] - i - j + 1
                # Leg length: nodes below (i,j) in its column, inclusive.
                # (The source display and the row-hand variant both fail the
                # recursion oracle; see tests.)
                ell = conj[j - 1] - i + 1
                out = out * q_int(h, ps) / q_int(ell, ps)
                for tt in range(s + 1, lam.r + 1):
                    top = lam.row(1, tt)
                    tconj = conjugate_partition(lam.comps[tt - 1])
                    out = out * (ps.res_mono(j - i, s) - ps.res_mono(top, tt))
                    for k in range(1, top + 1):
                        out = out * (
                            ps.res_mono(j - i, s) - ps.res_mono(k - 1 - tconj[k - 1], tt)
                        ) / (ps.res_mono(j - i, s) - ps.res_mono(k - tconj[k - 1], tt))
    return out


# ---------------------------------------------------------------------------
# Hooks, beta symbols
# ---------------------------------------------------------------------------

def hooks(part: tuple) -> dict:
    """Hook lengths h_ij = λ_i + λ'_j − i − j + 1 for one partition."""
    conj = conjugate_partition(part)
    return {
        (i, j): part[i - 1] + conj[j - 1] - i - j + 1
        for i in range(1, len(part) + 1)
        for j in range(1, part[i - 1] + 1)
    }


def row_hand(part: tuple) -> dict:
    """Row-hand lengths λ_i − j + 1 (the corrected 'leg' count)."""
    return {
        (i, j): part[i - 1] - j + 1
        for i in range(1, len(part) + 1)
        for j in range(1, part[i - 1] + 1)
    }


def beta_symbol(lam: Multipartition, L: int) -> tuple:
    """The L-symbol: rows (λ_i^(s) + L − i for i = 1..L) per component."""
    if L < lam.length:
        raise ValueError(f"L={L} smaller than the length of {lam}")
    return tuple(
        tuple(lam.row(i, s) + L - i for i in range(1, L + 1)) for s in range(1, lam.r + 1)
    )


# ---------------------------------------------------------------------------
# The permutations w_λ and their factorization
# ---------------------------------------------------------------------------

def w_lambda(lam: Multipartition) -> Perm:
    """w_λ = d(t_λ)."""
    return t_col(lam).d()


def w_lambda_factorization(lam: Multipartition):
    """(w_{λ̄,1}, ..., w_{λ̄,r−1}, w_{λ/λ̄}) with ℓ(w_λ) = Σℓ(w_{λ̄,s}) + ℓ(w_{λ/λ̄})."""
    n = lam.size
    sizes = lam.sizes()
    parts = []
    for s in range(1, lam.r):
        n_s = sizes[s - 1]
        b_s = sum(sizes[s:])
        # w_{a,b} lives on the first b_{s-1} = n_s + b_s letters.
        w = w_ab(n_s, b_s)
        parts.append(Perm(tuple(w(k) for k in range(1, n + 1))) if n else w)
    w_bar = Perm.identity(n)
    for w in parts:
        w_bar = w_bar * w
    w_rest = w_bar.inv() * w_lambda(lam)
    return parts, w_rest
