"""Exact root-system engine for the simple types A-G.

Roots are stored as integer coordinate vectors in the simple-root basis
(Bourbaki node numbering, nodes are 1-based).  The bilinear form is the
symmetrized Cartan form normalized so that long roots have squared length 2.
All arithmetic is exact (integers and fractions.Fraction); there is no
Euclidean embedding anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, cached_property
from typing import Iterable, Mapping, Sequence, Tuple

Root = Tuple[int, ...]
WeylWord = Tuple[int, ...]

CLASSICAL_MAX_RANK = 12

# closed-form |R| per type, used as a construction cross-check
ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "B": lambda n: 2 * n * n,
    "C": lambda n: 2 * n * n,
    "D": lambda n: 2 * n * (n - 1),
    "E": lambda n: {6: 72, 7: 126, 8: 240}[n],
    "F": lambda n: 48,
    "G": lambda n: 12,
}


def _chain_edges(n: int) -> list[tuple[int, int, int, int]]:
    return [(i, i + 1, -1, -1) for i in range(1, n)]


def _edges(type_letter: str, n: int) -> list[tuple[int, int, int, int]]:
    """Dynkin edges as (p, q, C[p][q], C[q][p]) with C[p][q] = <alpha_q, alpha_p^vee>."""
    if type_letter == "A":
        return _chain_edges(n)
    if type_letter == "B":
        # alpha_n is short: <alpha_{n-1}, alpha_n^vee> = -2
        return _chain_edges(n - 1) + [(n - 1, n, -1, -2)]
    if type_letter == "C":
        # alpha_n is long: <alpha_n, alpha_{n-1}^vee> = -2
        return _chain_edges(n - 1) + [(n - 1, n, -2, -1)]
    if type_letter == "D":
        return _chain_edges(n - 2) + [(n - 2, n - 1, -1, -1), (n - 2, n, -1, -1)]
    if type_letter == "E":
        spine = [(1, 3, -1, -1)] + [(i, i + 1, -1, -1) for i in range(3, n)]
        return spine + [(2, 4, -1, -1)]
    if type_letter == "F":
        return [(1, 2, -1, -1), (2, 3, -1, -2), (3, 4, -1, -1)]
    if type_letter == "G":
        # alpha_1 short, alpha_2 long, highest root 3*a1 + 2*a2
        return [(1, 2, -3, -1)]
    raise ValueError(f"unknown type letter {type_letter!r}")


def validate_type(type_letter: str, rank: int) -> None:
    """Reject invalid (type, rank) combinations."""
    bounds = {"A": (1, CLASSICAL_MAX_RANK), "B": (2, CLASSICAL_MAX_RANK),
              "C": (2, CLASSICAL_MAX_RANK), "D": (3, CLASSICAL_MAX_RANK),
              "E": (6, 8), "F": (4, 4), "G": (2, 2)}
    if type_letter not in bounds:
        raise ValueError(f"unknown type letter {type_letter!r}; expected one of A-G")
    lo, hi = bounds[type_letter]
    if not lo <= rank <= hi:
        raise ValueError(f"type {type_letter} requires rank in [{lo}, {hi}], got {rank}")


def cartan_matrix(type_letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix with C[p][q] = <alpha_q, alpha_p^vee> (1-based nodes into 0-based rows)."""
    validate_type(type_letter, rank)
    c = [[2 if p == q else 0 for q in range(rank)] for p in range(rank)]
    for p, q, cpq, cqp in _edges(type_letter, rank):
        c[p - 1][q - 1] = cpq
        c[q - 1][p - 1] = cqp
    return tuple(tuple(row) for row in c)


def symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Integers d_i = 2/(alpha_i, alpha_i) with min d_i = 1, so long roots have length^2 = 2."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            p = stack.pop()
            for q in range(n):
                if p != q and cartan[p][q] != 0 and d[q] is None:
                    # symmetry of (alpha_p, alpha_q): C[p][q]/d_p = C[q][p]/d_q
                    d[q] = d[p] * Fraction(cartan[q][p], cartan[p][q])
                    stack.append(q)
    scale = min(x for x in d)  # type: ignore[type-var]
    out = [x / scale for x in d]  # type: ignore[operator]
    if any(x.denominator != 1 for x in out):
        raise ValueError("Cartan matrix is not symmetrizable with integer ratios")
    return tuple(int(x) for x in out)


class RootSystem:
    """Immutable root system of a simple Lie algebra, nodes numbered per Bourbaki."""

    def __init__(self, type_letter: str, rank: int):
        validate_type(type_letter, rank)
        self.type_letter = type_letter
        self.rank = rank
        self.cartan = cartan_matrix(type_letter, rank)
        self.d = symmetrizer(self.cartan)
        self.roots = self._close_roots()
        self._root_set = frozenset(self.roots)
        self.positive_roots = tuple(a for a in self.roots if min(a) >= 0)
        neg = frozenset(self._neg(a) for a in self.positive_roots)
        if len(self.positive_roots) * 2 != len(self.roots) or not neg.isdisjoint(self.positive_roots):
            raise AssertionError("roots do not split into positive and negative halves")
        self.theta = max(self.positive_roots, key=sum)
        if sum(1 for a in self.positive_roots if sum(a) == sum(self.theta)) != 1:
            raise AssertionError("highest root is not unique")
        if any(self.pairing(self.theta, i) < 0 for i in self.nodes):
            raise AssertionError("highest root is not dominant")
        if self.inner(self.theta, self.theta) != 2:
            raise AssertionError("(theta, theta) != 2")
        self.marks = self.theta

    # -- basic structure -------------------------------------------------

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def simple_root(self, i: int) -> Root:
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    @cached_property
    def simple_root_lengths(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(2, di) for di in self.d)

    def _neg(self, a: Root) -> Root:
        return tuple(-x for x in a)

    def _close_roots(self) -> tuple[Root, ...]:
        seen: set[Root] = {self.simple_root(i) for i in self.nodes}
        queue = list(seen)
        while queue:
            a = queue.pop()
            for i in self.nodes:
                b = self.reflect(i, a)
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        expected = ROOT_COUNTS[self.type_letter](self.rank)
        if len(seen) != expected:
            raise AssertionError(f"reflection closure gave {len(seen)} roots, expected {expected}")
        return tuple(sorted(seen))

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._root_set

    def height(self, v: Sequence[int]) -> int:
        return sum(v)

    # -- bilinear form and coroots ---------------------------------------

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        """Bilinear form on the root lattice, (theta, theta) = 2."""
        total = Fraction(0)
        for p, ap in enumerate(a):
            if ap == 0:
                continue
            row = self.cartan[p]
            s = sum(row[q] * bq for q, bq in enumerate(b) if bq != 0)
            total += Fraction(ap * s, self.d[p])
        return total

    def pairing(self, v: Sequence[int], i: int) -> int:
        """<v, alpha_i^vee> for v in root coordinates."""
        row = self.cartan[i - 1]
        return sum(row[q] * vq for q, vq in enumerate(v) if vq != 0)

    def d_alpha(self, a: Sequence[int]) -> int:
        """d_alpha = 2/(alpha, alpha); 1 for long roots, 2 or 3 for short ones."""
        if not self.is_root(a):
            raise ValueError(f"{tuple(a)} is not a root")
        val = Fraction(2) / self.inner(a, a)
        assert val.denominator == 1
        return int(val)

    def comark(self, i: int, a: Sequence[int]) -> int:
        """Coefficient of h_i in h_alpha, i.e. a_i(alpha) * d_alpha / d_i."""
        d_a = self.d_alpha(a)
        val = Fraction(a[i - 1] * d_a, self.d[i - 1])
        if val.denominator != 1:
            raise AssertionError(f"non-integral coroot coefficient for {tuple(a)} at node {i}")
        return int(val)

    def coroot_coordinates(self, a: Sequence[int]) -> tuple[int, ...]:
        """Expansion h_alpha = sum_i c_i h_i over all nodes."""
        return tuple(self.comark(i, a) for i in self.nodes)

    # -- Weyl group -------------------------------------------------------

    def reflect(self, i: int, v: Sequence[int]) -> Root:
        """Simple reflection s_i on a root-lattice vector."""
        coeff = self.pairing(v, i)
        out = list(v)
        out[i - 1] -= coeff
        return tuple(out)

    def apply_word(self, word: Sequence[int], v: Sequence[int]) -> Root:
        """Apply a word of simple reflections; the first index in the word acts first."""
        out = tuple(v)
        for i in word:
            out = self.reflect(i, out)
        return out

    def reflect_weight(self, i: int, mu: Sequence[int]) -> tuple[int, ...]:
        """s_i on a weight given by its coroot values (mu_k = <mu, alpha_k^vee>)."""
        mi = mu[i - 1]
        return tuple(mu[k] - mi * self.cartan[k][i - 1] for k in range(self.rank))

    def longest_parabolic_word(self, J: Iterable[int]) -> WeylWord:
        """A reduced word for the longest element of the parabolic subgroup on J.

        Computed by pushing the J-restricted Weyl vector to the antidominant
        chamber, smallest admissible node first.  The result is an involution,
        so the same word also represents its inverse.
        """
        Jset = sorted(set(J))
        for i in Jset:
            if i not in self.nodes:
                raise ValueError(f"node {i} out of range 1..{self.rank}")
        mu = tuple(1 if i in Jset else 0 for i in self.nodes)
        word: list[int] = []
        while True:
            i = next((i for i in Jset if mu[i - 1] > 0), None)
            if i is None:
                break
            word.append(i)
            mu = self.reflect_weight(i, mu)
        return tuple(word)

    # -- representation dimensions ----------------------------------------

    def weyl_dim(self, lam: Mapping[int, int] | Sequence[int]) -> int:
        """Dimension of the irreducible module with dominant highest weight lam.

        lam gives the values lam(h_i); a mapping may omit zero entries.
        """
        vals = self._weight_values(lam)
        if any(v < 0 for v in vals):
            raise ValueError(f"weight {vals} is not dominant")
        num = 1
        den = 1
        for a in self.positive_roots:
            cor = self.coroot_coordinates(a)
            s = sum(cor)
            num *= s + sum(c * v for c, v in zip(cor, vals))
            den *= s
        dim, rem = divmod(num, den)
        assert rem == 0, "Weyl dimension did not come out integral"
        return dim

    def _weight_values(self, lam: Mapping[int, int] | Sequence[int]) -> tuple[int, ...]:
        if isinstance(lam, Mapping):
            bad = [i for i in lam if i not in self.nodes]
            if bad:
                raise ValueError(f"weight keys {bad} out of range 1..{self.rank}")
            return tuple(int(lam.get(i, 0)) for i in self.nodes)
        if len(lam) != self.rank:
            raise ValueError(f"weight has {len(lam)} entries, expected {self.rank}")
        return tuple(int(v) for v in lam)

    def __repr__(self) -> str:
        return f"RootSystem({self.type_letter}{self.rank}, {len(self.roots)} roots)"


@lru_cache(maxsize=None)
def build(type_letter: str, rank: int) -> RootSystem:
    """Build (and cache) the root system of the given simple type."""
    return RootSystem(type_letter, rank)


def reflect_by_root(rs: RootSystem, alpha: Sequence[int], v: Sequence[int]) -> Root:
    """Reflection s_alpha on a root-lattice vector, for an arbitrary root alpha."""
    coeff = 2 * rs.inner(v, alpha) / rs.inner(alpha, alpha)
    assert coeff.denominator == 1
    c = int(coeff)
    return tuple(x - c * a for x, a in zip(v, alpha))


def format_root(a: Sequence[int]) -> str:
    """Render a root-lattice vector like 'a2+2a3'."""
    parts = []
    for i, c in enumerate(a, start=1):
        if c == 0:
            continue
        if c == 1:
            term = f"a{i}"
        elif c == -1:
            term = f"-a{i}"
        else:
            term = f"{c}a{i}"
        parts.append(term if not parts or term.startswith("-") else "+" + term)
    return "".join(parts) if parts else "0"
