"""Stanley-Reisner presentation of the highest-weight endomorphism algebra.

For a pair (g, g0) and a dominant weight lam of the fixed-point subalgebra
(values on h_i for i in I(j) and on h_0), the semisimple quotient of the
endomorphism algebra of the global Weyl module is the quotient of a
polynomial ring in finitely many surviving generators P[i,r] by a squarefree
monomial ideal.  This module computes the surviving variables, the minimal
monomial generators, the associated simplicial complex with its facets and
shellings, and the graded Hilbert series (with a brute-force counting oracle).

The t-degree of P[i,r] is a_j * r.  A set sigma of variables is a face iff

    sum_i comark_i(alpha_0) * max{r : P[i,r] in sigma} <= lam(h_0),

and the minimal generators are the inclusion-minimal violating sets, which
take at most one variable per node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, NamedTuple, Sequence

from .bdspair import BdsPair


class Weight0(Mapping[int, int]):
    """Dominant integral weight for the fixed-point subalgebra.

    Keys are the Delta_0 labels: nodes i in I(j) for the values lam(h_i)
    and 0 for lam(h_0).  Missing keys mean 0.
    """

    def __init__(self, values: Mapping[int, int] | None = None):
        vals = {int(k): int(v) for k, v in (values or {}).items() if v != 0}
        if any(v < 0 for v in vals.values()):
            raise ValueError(f"weight values must be non-negative, got {values}")
        self._values = vals

    @classmethod
    def parse(cls, spec: str) -> "Weight0":
        """Parse a spec like 'h2=1,h0=1'."""
        vals: dict[int, int] = {}
        spec = spec.strip()
        if spec:
            for part in spec.split(","):
                m = re.fullmatch(r"\s*h(\d+)\s*=\s*(\d+)\s*", part)
                if not m:
                    raise ValueError(f"bad weight component {part!r}; expected like 'h2=1'")
                vals[int(m.group(1))] = int(m.group(2))
        return cls(vals)

    def __getitem__(self, key: int) -> int:
        return self._values.get(key, 0)

    def get(self, key: int, default: int = 0) -> int:
        return self._values.get(key, default)

    def __iter__(self):
        return iter(sorted(self._values))

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other) -> bool:
        if isinstance(other, Weight0):
            return self._values == other._values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._values.items()))

    def is_zero(self) -> bool:
        return not self._values

    def format(self) -> str:
        items = sorted(self._values.items(), key=lambda kv: (kv[0] == 0, kv[0]))
        return ",".join(f"h{k}={v}" for k, v in items) or "0"

    def __repr__(self) -> str:
        return f"Weight0({self.format()})"


class SRVariable(NamedTuple):
    """A surviving polynomial generator P[node, level] of t-degree a_j * level."""

    node: int
    level: int
    degree: int

    def label(self) -> str:
        return f"P({self.node},{self.level})"


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex given by its vertices and facet list."""

    vertices: tuple[SRVariable, ...]
    facets: tuple[frozenset, ...]

    def __post_init__(self):
        for a in self.facets:
            for b in self.facets:
                if a is not b and a <= b:
                    raise ValueError("facet list contains a non-maximal face")

    @property
    def is_pure(self) -> bool:
        sizes = {len(f) for f in self.facets}
        return len(sizes) <= 1

    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def faces(self) -> set[frozenset]:
        """All faces; exponential in facet size, intended for small complexes."""
        out: set[frozenset] = set()
        for f in self.facets:
            members = sorted(f)
            for mask in range(1 << len(members)):
                out.add(frozenset(members[k] for k in range(len(members)) if mask >> k & 1))
        return out


def verify_shelling(complex_: SimplicialComplex, order: Sequence[frozenset]) -> bool:
    """Literal shelling test: each facet must meet the union of the earlier
    ones in a pure subcomplex of dimension dim(F_r) - 1."""
    if sorted(map(sorted, order)) != sorted(map(sorted, complex_.facets)):
        raise ValueError("order is not a permutation of the facet list")
    for r in range(1, len(order)):
        inters = {order[i] & order[r] for i in range(r)}
        maximal = [a for a in inters if not any(a < b for b in inters)]
        if any(len(a) != len(order[r]) - 1 for a in maximal):
            return False
    return True


def find_shelling(complex_: SimplicialComplex, budget: int = 20000) -> tuple[frozenset, ...] | None:
    """Bounded backtracking search for a shelling order; None means 'not found
    within budget', never 'not shellable'."""
    facets = list(complex_.facets)
    if len(facets) <= 1:
        return tuple(facets)

    steps = [0]

    def ok_next(prefix: list[frozenset], cand: frozenset) -> bool:
        inters = {f & cand for f in prefix}
        maximal = [a for a in inters if not any(a < b for b in inters)]
        return all(len(a) == len(cand) - 1 for a in maximal)

    def extend(prefix: list[frozenset], rest: list[frozenset]):
        if steps[0] > budget:
            return None
        if not rest:
            return tuple(prefix)
        for k, cand in enumerate(rest):
            steps[0] += 1
            if not prefix or ok_next(prefix, cand):
                got = extend(prefix + [cand], rest[:k] + rest[k + 1:])
                if got is not None:
                    return got
        return None

    return extend([], facets)


@dataclass(frozen=True)
class ClosedForm:
    """Rational form numerator / prod_d (1 - t^d), d over `denominator`."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def coefficients(self, D: int) -> tuple[int, ...]:
        out = [0] * (D + 1)
        for k, c in enumerate(self.numerator):
            if k <= D:
                out[k] = c
        for d in self.denominator:
            for k in range(d, D + 1):
                out[k] += out[k - d]
        return tuple(out)

    def format(self) -> str:
        num = _format_poly(self.numerator)
        if not self.denominator:
            return num
        den = "".join(f"(1-t^{d})" for d in sorted(self.denominator))
        return f"({num}) / {den}"


@dataclass(frozen=True)
class HilbertSeries:
    """Exact truncated Hilbert series, with a closed rational form when available."""

    truncation_degree: int
    coefficients: tuple[int, ...]
    closed_form: ClosedForm | None = None

    def __post_init__(self):
        assert self.coefficients[0] == 1
        assert all(c >= 0 for c in self.coefficients)


class SRPresentation:
    """Surviving variables and minimal relations for a pair and a weight."""

    def __init__(self, pair: BdsPair, lam: Weight0):
        bad = [k for k in lam if k not in pair.delta0_labels]
        if bad:
            raise ValueError(f"weight keys {bad} are not Delta_0 labels of {pair!r}")
        self.pair = pair
        self.lam = lam
        self.h0 = lam[0]
        self.comarks = pair.comarks_alpha0
        self.caps = self._caps()

    def _caps(self) -> dict[int, int]:
        pair = self.pair
        caps = {}
        for i in pair.rs.nodes:
            c = self.comarks[i - 1]
            if i == pair.j:
                caps[i] = self.h0 // c
            elif c == 0:
                caps[i] = self.lam[i]
            else:
                caps[i] = min(self.lam[i], self.h0 // c)
        return caps

    def _var(self, i: int, r: int) -> SRVariable:
        return SRVariable(i, r, self.pair.a_j * r)

    @cached_property
    def variables(self) -> tuple[SRVariable, ...]:
        return tuple(self._var(i, r)
                     for i in self.pair.rs.nodes
                     for r in range(1, self.caps[i] + 1))

    @cached_property
    def _variable_set(self) -> frozenset:
        return frozenset(self.variables)

    @property
    def free_nodes(self) -> tuple[int, ...]:
        return tuple(i for i in self.pair.rs.nodes
                     if self.comarks[i - 1] == 0 and self.caps[i] > 0)

    @property
    def constrained_nodes(self) -> tuple[int, ...]:
        return tuple(i for i in self.pair.rs.nodes
                     if self.comarks[i - 1] > 0 and self.caps[i] > 0)

    @property
    def support_nodes(self) -> tuple[int, ...]:
        """Nodes carried by alpha_0 (positive mark); always includes j."""
        return tuple(i for i in self.pair.rs.nodes if self.pair.marks_alpha0[i - 1] > 0)

    @property
    def two_support_nodes(self) -> bool:
        return len(self.support_nodes) == 2

    @property
    def jac_zero(self) -> bool:
        return self.comarks[self.pair.j - 1] == 1

    # -- relations ---------------------------------------------------------

    @cached_property
    def generators(self) -> tuple[frozenset, ...]:
        """Minimal generators of the monomial ideal: the inclusion-minimal
        sets of variables (one per node) whose weighted level sum exceeds
        lam(h_0).  Single-variable violations are absorbed into the caps,
        so every generator has at least two variables."""
        nodes = self.constrained_nodes
        out = []
        ranges = [range(self.caps[i] + 1) for i in nodes]
        weights = [self.comarks[i - 1] for i in nodes]
        for levels in product(*ranges):
            total = sum(w * r for w, r in zip(weights, levels))
            if total <= self.h0:
                continue
            if all(r == 0 or total - w * r <= self.h0 for w, r in zip(weights, levels)):
                out.append(frozenset(self._var(i, r) for i, r in zip(nodes, levels) if r > 0))
        return tuple(sorted(out, key=lambda g: sorted(g)))

    def face_predicate(self, sigma: Iterable[SRVariable]) -> bool:
        """Whether sigma is a face: no generator divides its product."""
        sigma = frozenset(sigma)
        stray = sigma - self._variable_set
        if stray:
            raise ValueError(f"{sorted(stray)} are not surviving variables")
        tops: dict[int, int] = {}
        for v in sigma:
            tops[v.node] = max(tops.get(v.node, 0), v.level)
        weighted = sum(self.comarks[i - 1] * r for i, r in tops.items())
        return weighted <= self.h0

    # -- simplicial complex --------------------------------------------------

    def _facet_tuples(self) -> list[dict[int, int]]:
        """Per-node top levels of the maximal faces, on the constrained nodes."""
        nodes = self.constrained_nodes
        weights = {i: self.comarks[i - 1] for i in nodes}
        out: list[dict[int, int]] = []

        def rec(idx: int, budget: int, tops: dict[int, int]):
            if idx == len(nodes):
                if all(tops[i] == self.caps[i] or weights[i] > budget for i in nodes):
                    out.append(dict(tops))
                return
            i = nodes[idx]
            for m in range(0, min(self.caps[i], budget // weights[i]) + 1):
                tops[i] = m
                rec(idx + 1, budget - weights[i] * m, tops)
            del tops[i]

        rec(0, self.h0, {})
        return out

    def _facet_from_tops(self, tops: Mapping[int, int]) -> frozenset:
        members = [self._var(i, r) for i in self.free_nodes for r in range(1, self.caps[i] + 1)]
        for i, m in tops.items():
            members.extend(self._var(i, r) for r in range(1, m + 1))
        return frozenset(members)

    def facets(self) -> SimplicialComplex:
        facets = sorted({self._facet_from_tops(t) for t in self._facet_tuples()},
                        key=lambda f: sorted(f))
        return SimplicialComplex(self.variables, tuple(facets))

    def krull_dim(self) -> int:
        """Krull dimension = maximal facet cardinality; checked against the
        closed form lam(h_0) + sum over mark-zero nodes when it applies."""
        dim = max(len(f) for f in self.facets().facets)
        if self.jac_zero:
            assert dim == self.d_lambda()
        return dim

    def d_lambda(self) -> int:
        return self.h0 + sum(self.lam[i] for i in self.pair.rs.nodes
                             if self.pair.marks_alpha0[i - 1] == 0 and i != self.pair.j)

    # -- Hilbert series --------------------------------------------------------

    def hilbert_series(self, D: int = 24) -> HilbertSeries:
        """Graded dimension counting by per-node dynamic programming.

        A monomial in the quotient is nonzero iff its support is a face, so
        the series factors as the free-variable part times a budgeted sum
        over top levels at the constrained nodes.
        """
        if D < 0:
            raise ValueError("truncation degree must be >= 0")
        a_j = self.pair.a_j
        free = [1] + [0] * D
        for i in self.free_nodes:
            for r in range(1, self.caps[i] + 1):
                _geometric_inplace(free, a_j * r)

        nodes = self.constrained_nodes
        weights = [self.comarks[i - 1] for i in nodes]
        total = [0] * (D + 1)

        def node_terms(i: int) -> list[list[int]]:
            terms = [[1] + [0] * D]
            g = [1] + [0] * D
            for m in range(1, self.caps[i] + 1):
                _geometric_inplace(g, a_j * m)
                terms.append(_shift(g, a_j * m, D))
            return terms

        terms = {i: node_terms(i) for i in nodes}

        def rec(idx: int, budget: int, acc: list[int]):
            if idx == len(nodes):
                for k, c in enumerate(acc):
                    total[k] += c
                return
            i = nodes[idx]
            w = weights[idx]
            for m in range(0, min(self.caps[i], budget // w) + 1):
                rec(idx + 1, budget - w * m, _mul_trunc(acc, terms[i][m], D))

        rec(0, self.h0, [1] + [0] * D)
        coeffs = tuple(_mul_trunc(free, total, D))
        closed = self._closed_form() if self.jac_zero else None
        if closed is not None:
            assert closed.coefficients(D) == coeffs
        return HilbertSeries(D, coeffs, closed)

    def _closed_form(self) -> ClosedForm:
        a_j = self.pair.a_j
        nodes = self.constrained_nodes
        weights = [self.comarks[i - 1] for i in nodes]
        num = [0]

        def rec(idx: int, budget: int, acc: list[int]):
            nonlocal num
            if idx == len(nodes):
                num = _add(num, acc)
                return
            i = nodes[idx]
            w = weights[idx]
            for m in range(0, min(self.caps[i], budget // w) + 1):
                term = [0] * (a_j * m) + [1]
                for r in range(m + 1, self.caps[i] + 1):
                    term = _mul(term, _one_minus_td(a_j * r))
                rec(idx + 1, budget - w * m, _mul(acc, term))

        rec(0, self.h0, [1])
        denom = sorted(v.degree for v in self.variables)
        num, denom = _cancel(num, denom)
        return ClosedForm(tuple(num), tuple(denom))

    # -- shelling ---------------------------------------------------------------

    def canonical_shelling(self) -> tuple[frozenset, ...]:
        """The explicit shelling available when the comark of alpha_0 at j is 1
        and alpha_0 is supported on exactly two nodes {s, j}."""
        if not self.jac_zero:
            raise ValueError("canonical shelling needs comark 1 at node j")
        if not self.two_support_nodes:
            raise ValueError(
                f"canonical shelling needs exactly two support nodes, got {self.support_nodes}")
        s = next(i for i in self.support_nodes if i != self.pair.j)
        m = min(self.h0, self.lam[s])
        order = []
        for r in range(m + 1):
            order.append(self._facet_from_tops({self.pair.j: self.h0 - r, s: r}))
        complex_ = self.facets()
        assert set(order) == set(complex_.facets), "shelling list must be exactly the facet set"
        assert len(order) == len(complex_.facets)
        assert verify_shelling(complex_, order)
        return tuple(order)

    def flags(self) -> dict:
        """Derived flags: jac_zero, koszul (True or None for unknown), purity,
        and a Cohen-Macaulay certificate (a shelling was exhibited)."""
        complex_ = self.facets()
        pure = complex_.is_pure
        gens = self.generators
        koszul = True if all(len(g) == 2 for g in gens) else None
        cm = False
        if pure:
            if self.jac_zero and self.two_support_nodes:
                self.canonical_shelling()
                cm = True
            elif len(complex_.facets) <= 9:
                cm = find_shelling(complex_) is not None
        return {
            "jac_zero": self.jac_zero,
            "koszul": koszul,
            "pure": pure,
            "cohen_macaulay_certified": cm,
        }

    def format(self) -> str:
        vars_ = ", ".join(v.label() for v in self.variables) or "-"
        gens = ", ".join("".join(v.label() for v in sorted(g)) for g in self.generators) or "-"
        return f"C[{vars_}] / ({gens})"


def presentation(pair: BdsPair, lam: Weight0) -> SRPresentation:
    return SRPresentation(pair, lam)


def hilbert_series_bruteforce(pres: SRPresentation, D: int) -> tuple[int, ...]:
    """Count monomials degree by degree by direct enumeration.

    A monomial survives iff no minimal generator divides it; the check is the
    literal divisibility test against `pres.generators`, independent of the
    weighted-top-level face predicate, so this is a genuine oracle for
    `hilbert_series`.
    """
    variables = sorted(pres.variables)
    gens = pres.generators
    by_var: dict[SRVariable, list[frozenset]] = {v: [] for v in variables}
    for g in gens:
        for v in g:
            by_var[v].append(g)
    coeffs = [0] * (D + 1)

    def rec(idx: int, deg: int, support: frozenset):
        if idx == len(variables):
            coeffs[deg] += 1
            return
        v = variables[idx]
        rec(idx + 1, deg, support)
        if deg + v.degree > D:
            return
        new_support = support | {v}
        if any(g <= new_support for g in by_var[v]):
            return
        step = v.degree
        total = step
        while deg + total <= D:
            rec(idx + 1, deg + total, new_support)
            total += step

    rec(0, 0, frozenset())
    return tuple(coeffs)


# -- small integer-polynomial helpers (coefficient lists in t) ---------------


def _geometric_inplace(p: list[int], d: int) -> None:
    """Multiply the truncated series p by 1/(1 - t^d) in place."""
    for k in range(d, len(p)):
        p[k] += p[k - d]


def _shift(p: list[int], d: int, D: int) -> list[int]:
    out = [0] * (D + 1)
    for k, c in enumerate(p):
        if c and k + d <= D:
            out[k + d] = c
    return out


def _mul_trunc(a: list[int], b: list[int], D: int) -> list[int]:
    out = [0] * (D + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > D:
            continue
        for k in range(min(len(b) - 1, D - i) + 1):
            if b[k]:
                out[i + k] += ai * b[k]
    return out


def _mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for k, bk in enumerate(b):
            if bk:
                out[i + k] += ai * bk
    return out


def _add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)]


def _one_minus_td(d: int) -> list[int]:
    out = [0] * (d + 1)
    out[0] = 1
    out[d] = -1
    return out


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _divide_one_minus_td(num: list[int], d: int) -> list[int] | None:
    """Exact quotient num / (1 - t^d), or None when the division is inexact."""
    num = _trim(list(num))
    if len(num) <= d and num != [0]:
        return None
    q = [0] * len(num)
    for k in range(len(num)):
        q[k] = num[k] + (q[k - d] if k >= d else 0)
    for k in range(max(0, len(num) - d), len(num)):
        if q[k] != 0:
            return None
    return _trim(q[:max(1, len(num) - d)])


def _cancel(num: list[int], denom: list[int]) -> tuple[list[int], list[int]]:
    num = _trim(list(num))
    remaining: list[int] = []
    for d in sorted(denom, reverse=True):
        q = _divide_one_minus_td(num, d)
        if q is not None:
            num = q
        else:
            remaining.append(d)
    return num, sorted(remaining)


def _format_poly(coeffs: Sequence[int]) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            mono = "t" if k == 1 else f"t^{k}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}{mono}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out
