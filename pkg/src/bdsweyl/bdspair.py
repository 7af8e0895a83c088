"""Borel-de Siebenthal pairs (g, g0) attached to a node j with mark >= 2.

Given a simple root system and a node j whose mark a_j is at least 2, this
module constructs the fixed-point data of the associated finite-order
automorphism: the simple system Delta_0 = {alpha_i : i != j} u {alpha_0}
with alpha_0 = w_par^{-1}(theta), the grading of the roots by a_j(alpha)
mod a_j, the dominant elements theta_k of each graded piece, and the
reflection chain from alpha_0 down to a simple root.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from .rootsys import ROOT_COUNTS, Root, RootSystem, build, cartan_matrix, format_root


@dataclass(frozen=True)
class ReflectionChain:
    """Chain (i_r, beta_r) with beta_0 = alpha_0, beta_{r+1} = s_{i_r}(beta_r)."""

    entries: tuple[tuple[int, Root], ...]

    @property
    def node_sequence(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.entries)

    def node_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for i in self.node_sequence:
            counts[i] = counts.get(i, 0) + 1
        return counts

    def __len__(self) -> int:
        return len(self.entries)


class BdsPair:
    """The pair (g, g0) determined by a root system and a node with mark >= 2."""

    def __init__(self, rs: RootSystem, j: int):
        if j not in rs.nodes:
            raise ValueError(f"node {j} out of range 1..{rs.rank}")
        a_j = rs.marks[j - 1]
        if a_j < 2:
            raise ValueError(
                f"mark a_{j} = {a_j}; the fixed-point construction requires a node of mark >= 2"
            )
        self.rs = rs
        self.j = j
        self.a_j = a_j
        self.i_complement = tuple(i for i in rs.nodes if i != j)
        self._parabolic_word = rs.longest_parabolic_word(self.i_complement)
        # alpha_0 = w_par^{-1}(theta); the longest element is an involution
        self.alpha0: Root = rs.apply_word(tuple(reversed(self._parabolic_word)), rs.theta)
        self._check_alpha0()
        self.marks_alpha0 = self.alpha0
        self.comarks_alpha0 = rs.coroot_coordinates(self.alpha0)

    def _check_alpha0(self) -> None:
        rs, j = self.rs, self.j
        a0 = self.alpha0
        assert rs.is_root(a0) and min(a0) >= 0, "alpha_0 must be a positive root"
        assert a0[j - 1] == self.a_j, "a_j(alpha_0) must equal a_j"
        assert rs.inner(a0, a0) == 2, "alpha_0 must be long"
        for i in self.i_complement:
            assert rs.inner(a0, rs.simple_root(i)) <= 0
        assert rs.inner(a0, rs.simple_root(j)) > 0

    # -- simple system of the fixed-point subalgebra -----------------------

    @property
    def delta0_labels(self) -> tuple[int, ...]:
        """Node labels for Delta_0: the nodes of I(j) in order, then 0 for alpha_0."""
        return self.i_complement + (0,)

    def delta0_root(self, label: int) -> Root:
        if label == 0:
            return self.alpha0
        if label == self.j or label not in self.rs.nodes:
            raise ValueError(f"{label} is not a Delta_0 label")
        return self.rs.simple_root(label)

    @cached_property
    def delta0(self) -> tuple[Root, ...]:
        return tuple(self.delta0_root(i) for i in self.delta0_labels)

    @cached_property
    def g0_cartan(self) -> tuple[tuple[int, ...], ...]:
        """Cartan matrix of Delta_0 (entries <delta_q, delta_p^vee>)."""
        rows = []
        for dp in self.delta0:
            sq = self.rs.inner(dp, dp)
            row = []
            for dq in self.delta0:
                val = 2 * self.rs.inner(dq, dp) / sq
                assert val.denominator == 1
                row.append(int(val))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def g0_components(self) -> tuple[str, ...]:
        """Simple types of the fixed-point subalgebra, e.g. ('A3',) or ('A1', 'A1')."""
        comps = _connected_components(self.g0_cartan)
        names = []
        for comp in comps:
            sub = tuple(tuple(self.g0_cartan[p][q] for q in comp) for p in comp)
            names.append(_classify_component(sub))
        return tuple(sorted(names))

    # -- grading of the roots ----------------------------------------------

    @cached_property
    def _graded(self) -> tuple[tuple[Root, ...], ...]:
        buckets: list[list[Root]] = [[] for _ in range(self.a_j)]
        for a in self.rs.roots:
            buckets[a[self.j - 1] % self.a_j].append(a)
        return tuple(tuple(b) for b in buckets)

    def graded_roots(self, k: int) -> tuple[Root, ...]:
        """R_k, the roots with a_j(alpha) congruent to k mod a_j (0 <= k < a_j)."""
        if not 0 <= k < self.a_j:
            raise ValueError(f"grade {k} out of range 0..{self.a_j - 1}")
        return self._graded[k]

    def graded_positive(self, k: int) -> tuple[Root, ...]:
        return tuple(a for a in self.graded_roots(k) if min(a) >= 0)

    def graded_dim(self, s: int) -> int:
        """Dimension of the degree-s piece of the graded fixed-point algebra."""
        if s < 0:
            raise ValueError("degree must be non-negative")
        k = s % self.a_j
        return len(self.graded_roots(k)) + (self.rs.rank if k == 0 else 0)

    @cached_property
    def thetas(self) -> tuple[Root, ...]:
        return tuple(self.theta_k(k) for k in range(1, self.a_j))

    def theta_k(self, k: int) -> Root:
        """The unique alpha in R_k^+ orthogonal-or-positive against Delta_0 with
        alpha + delta never a root (the dominant element of the graded piece)."""
        if not 1 <= k < self.a_j:
            raise ValueError(f"grade {k} out of range 1..{self.a_j - 1}")
        rs = self.rs
        cands = []
        for a in self.graded_positive(k):
            ok = True
            for d in self.delta0:
                summ = tuple(x + y for x, y in zip(a, d))
                if rs.inner(a, d) < 0 or rs.is_root(summ):
                    ok = False
                    break
            if ok:
                cands.append(a)
        if len(cands) != 1:
            raise AssertionError(f"grade {k}: expected a unique dominant element, got {cands}")
        th = cands[0]
        assert all(c > 0 for c in th), "dominant graded element must have full support"
        up = tuple(x + y for x, y in zip(th, rs.simple_root(self.j)))
        assert rs.is_root(up) and min(up) >= 0
        heights = [sum(a) for a in self.graded_positive(k)]
        assert heights.count(max(heights)) == 1 and sum(th) == max(heights)
        return th

    # -- reflection chain ----------------------------------------------------

    def reflection_chain(self, prefer: Sequence[int] | None = None) -> ReflectionChain:
        """Chain of reflections carrying alpha_0 to a simple root.

        At each step the next node i must satisfy (beta, alpha_i) > 0 and,
        when beta is not simple, beta + alpha_i must not be a root.  Ties are
        broken by the priority order `prefer` (default: smallest node first);
        the per-node visit counts are independent of this choice.
        """
        rs = self.rs
        order = tuple(prefer) if prefer is not None else tuple(rs.nodes)
        if sorted(order) != list(rs.nodes):
            raise ValueError("prefer must be a permutation of the nodes")
        entries: list[tuple[int, Root]] = []
        beta = self.alpha0
        i = self.j
        while True:
            simple_node = _simple_index(beta)
            if simple_node is not None and entries:
                entries.append((simple_node, beta))
                break
            if entries:
                admissible = [
                    p for p in order
                    if rs.inner(beta, rs.simple_root(p)) > 0
                    and not rs.is_root(tuple(x + y for x, y in zip(beta, rs.simple_root(p))))
                ]
                assert admissible, f"no admissible reflection from {beta}"
                i = admissible[0]
            else:
                assert rs.inner(beta, rs.simple_root(self.j)) > 0
                i = self.j
            entries.append((i, beta))
            beta = rs.reflect(i, beta)
            assert rs.is_root(beta) and min(beta) >= 0, "chain left the positive roots"
        return ReflectionChain(tuple(entries))

    # -- the fixed-point subalgebra as a root subsystem ----------------------

    @cached_property
    def _delta0_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        cols = self.delta0
        n = self.rs.rank
        mat = [[Fraction(cols[q][p]) for q in range(n)] for p in range(n)]
        return _invert(mat)

    def delta0_coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of a root-lattice vector in the Delta_0 basis."""
        inv = self._delta0_inverse
        out = []
        for row in inv:
            c = sum(r * x for r, x in zip(row, v))
            if c.denominator != 1:
                raise ValueError(f"{tuple(v)} is not in the Delta_0 lattice")
        # recompute with int conversion (two passes keeps the error message clean)
        for row in inv:
            out.append(int(sum(r * x for r, x in zip(row, v))))
        return tuple(out)

    def g0_weight_values(self, v: Sequence[int]) -> dict[int, int]:
        """Values <v, delta^vee> over Delta_0, keyed by the Delta_0 labels."""
        rs = self.rs
        out = {}
        for label, d in zip(self.delta0_labels, self.delta0):
            val = 2 * rs.inner(v, d) / rs.inner(d, d)
            assert val.denominator == 1
            out[label] = int(val)
        return out

    def g0_coroot_coordinates(self, a: Sequence[int]) -> tuple[int, ...]:
        """Expansion of the coroot of a (a in R_0) over the coroots of Delta_0."""
        rs = self.rs
        coords = self.delta0_coordinates(a)
        sq_a = rs.inner(a, a)
        out = []
        for m, d in zip(coords, self.delta0):
            c = m * rs.inner(d, d) / sq_a
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)

    def g0_weyl_dim(self, weight: Mapping[int, int]) -> int:
        """Weyl dimension formula for the fixed-point subalgebra.

        `weight` maps Delta_0 labels (I(j) and 0) to non-negative values;
        the result is multiplicative over the simple components.
        """
        bad = [k for k in weight if k not in self.delta0_labels]
        if bad:
            raise ValueError(f"weight keys {bad} are not Delta_0 labels")
        vals = [int(weight.get(label, 0)) for label in self.delta0_labels]
        if any(v < 0 for v in vals):
            raise ValueError(f"weight {weight} is not dominant for the subalgebra")
        num = 1
        den = 1
        for a in self.graded_positive(0):
            cor = self.g0_coroot_coordinates(a)
            assert all(c >= 0 for c in cor)
            s = sum(cor)
            num *= s + sum(c * v for c, v in zip(cor, vals))
            den *= s
        dim, rem = divmod(num, den)
        assert rem == 0
        return dim

    def gk_irreducibility_check(self, k: int) -> bool:
        """Whether the degree-k piece has the dimension of the irreducible
        subalgebra module generated by its dominant element theta_k."""
        th = self.theta_k(k)
        weight = self.g0_weight_values(th)
        if any(v < 0 for v in weight.values()):
            raise AssertionError(f"theta_{k} is not Delta_0-dominant: {weight}")
        return self.g0_weyl_dim(weight) == len(self.graded_roots(k))

    def bracket_weight_check(self, k: int, m: int) -> bool:
        """Weight-level necessary condition for R_k = R_{k-m} + R_m (1 <= m < k).

        Checks only that every root of grade k splits as a sum of roots of
        grades k-m and m; surjectivity of the bracket itself would need
        structure constants and is not verified here.
        """
        if not 1 <= m < k < self.a_j:
            raise ValueError("need 1 <= m < k < a_j")
        lower = set(self.graded_roots(m))
        target = set(self.graded_roots(k - m))
        for a in self.graded_roots(k):
            if not any(tuple(x - y for x, y in zip(a, d)) in target for d in lower):
                return False
        return True

    # ------------------------------------------------------------------

    def describe(self) -> str:
        return (f"{self.rs.type_letter}{self.rs.rank}, node {self.j} (a_j={self.a_j}), "
                f"alpha0={format_root(self.alpha0)}, g0={'+'.join(self.g0_components)}")

    def __repr__(self) -> str:
        return f"BdsPair({self.describe()})"


def build_pair(rs: RootSystem | str, j: int, rank: int | None = None) -> BdsPair:
    """Build the pair for a root system (or a (type, rank) spec) and node j."""
    if isinstance(rs, str):
        if rank is None:
            raise ValueError("rank is required when passing a type letter")
        rs = build(rs, rank)
    return BdsPair(rs, j)


def eligible_nodes(rs: RootSystem) -> tuple[int, ...]:
    """Nodes with mark >= 2, i.e. the valid choices of j."""
    return tuple(i for i in rs.nodes if rs.marks[i - 1] >= 2)


def all_pairs(max_rank: int) -> list[BdsPair]:
    """Every pair over every simple type up to the given rank, in a fixed order."""
    out = []
    for letter, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3), ("E", 6), ("F", 4), ("G", 2)):
        hi = {"E": 8, "F": 4, "G": 2}.get(letter, max_rank)
        for n in range(lo, min(hi, max_rank) + 1):
            if letter == "E" and n < 6:
                continue
            rs = build(letter, n)
            for j in eligible_nodes(rs):
                out.append(BdsPair(rs, j))
    return out


def alpha0_by_scan(rs: RootSystem, j: int) -> Root:
    """Independent recomputation of alpha_0: scan R_0^+ for its simple system.

    The simple system of R_0 ^+ consists of the elements that are not sums of
    two elements of R_0^+; exactly one of them is not a simple root of R.
    """
    a_j = rs.marks[j - 1]
    r0_pos = [a for a in rs.positive_roots if a[j - 1] % a_j == 0]
    pos_set = set(r0_pos)
    simple_sys = []
    for a in r0_pos:
        if not any(tuple(x - y for x, y in zip(a, b)) in pos_set for b in r0_pos if b != a):
            simple_sys.append(a)
    extras = [a for a in simple_sys if sum(a) > 1]
    assert len(extras) == 1, f"expected one non-simple element, got {extras}"
    return extras[0]


# -- classification helpers --------------------------------------------------


def _simple_index(a: Root) -> int | None:
    if sum(a) == 1 and min(a) >= 0:
        return a.index(1) + 1
    return None


def _connected_components(cartan: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(cartan)
    seen: set[int] = set()
    comps = []
    for s in range(n):
        if s in seen:
            continue
        comp = []
        stack = [s]
        seen.add(s)
        while stack:
            p = stack.pop()
            comp.append(p)
            for q in range(n):
                if q not in seen and p != q and cartan[p][q] != 0:
                    seen.add(q)
                    stack.append(q)
        comps.append(sorted(comp))
    return comps


def _cartan_isomorphic(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> bool:
    n = len(a)
    if len(b) != n:
        return False
    if sorted(sorted(row) for row in a) != sorted(sorted(row) for row in b):
        return False
    perm: list[int] = []
    used = [False] * n

    def extend(p: int) -> bool:
        if p == n:
            return True
        for q in range(n):
            if used[q]:
                continue
            if all(a[p][r] == b[q][perm[r]] and a[r][p] == b[perm[r]][q] for r in range(p)):
                used[q] = True
                perm.append(q)
                if extend(p + 1):
                    return True
                perm.pop()
                used[q] = False
        return False

    return extend(0)


def _classify_component(cartan: Sequence[Sequence[int]]) -> str:
    """Match one connected Cartan matrix against the simple types.

    Rank-2 double edges report as B2 (= C2) and rank-3 D-shapes as A3;
    candidates are tried in the order A, B, C, D, E, F, G.
    """
    m = recorded = len(cartan)
    for letter in "ABCDEFG":
        try:
            template = cartan_matrix(letter, m)
        except ValueError:
            continue
        if _cartan_isomorphic(cartan, template):
            return f"{letter}{recorded}"
    raise AssertionError(f"component {cartan} matches no simple type")


def component_root_count(name: str) -> int:
    return ROOT_COUNTS[name[0]](int(name[1:]))


def _invert(mat: list[list[Fraction]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(mat)
    aug = [row[:] + [Fraction(int(p == q)) for q in range(n)] for p, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)
