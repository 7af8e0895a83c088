"""Decision procedures and closed-form dimensions for global and local Weyl modules.

Contents: conversion between subalgebra weights (values on h_i, i in I(j),
and h_0) and full weights (values on all h_i, possibly negative at j), the
finite-dimensionality test for the endomorphism algebra, the irreducibility
criterion for global Weyl modules, evaluation-parameter points of the
variety of the endomorphism algebra, and the local Weyl module dimension
formulas for the pair (B_n, D_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Mapping, Sequence

from .bdspair import BdsPair
from .srring import Weight0


@dataclass(frozen=True)
class DeltaWeight:
    """Weight given by its values on every h_i, i in I; the value at j may be negative."""

    values: tuple[int, ...]

    @classmethod
    def of(cls, rank: int, vals: Mapping[int, int]) -> "DeltaWeight":
        bad = [k for k in vals if not 1 <= k <= rank]
        if bad:
            raise ValueError(f"weight keys {bad} out of range 1..{rank}")
        return cls(tuple(int(vals.get(i, 0)) for i in range(1, rank + 1)))

    def __getitem__(self, i: int) -> int:
        return self.values[i - 1]

    def is_dominant(self) -> bool:
        return all(v >= 0 for v in self.values)


def weight_convert(pair: BdsPair, lam: Weight0) -> DeltaWeight:
    """Recover the value lam(h_j) from the expansion of h_0 over the h_i.

    Fails when the result is not an integer, which happens exactly when lam
    lies outside the weight lattice of the ambient algebra.
    """
    c = pair.comarks_alpha0
    rest = sum(c[i - 1] * lam[i] for i in pair.i_complement)
    num = lam[0] - rest
    cj = c[pair.j - 1]
    if num % cj != 0:
        raise ValueError(
            f"lam(h_{pair.j}) = {num}/{cj} is not integral; "
            "the weight does not lie in the ambient weight lattice")
    vals = {i: lam[i] for i in pair.i_complement}
    vals[pair.j] = num // cj
    return DeltaWeight.of(pair.rs.rank, vals)


def weight_restrict(pair: BdsPair, dw: DeltaWeight) -> Weight0:
    """Inverse direction: values on I(j) plus lam(h_0) = sum_i comark_i * lam(h_i)."""
    c = pair.comarks_alpha0
    h0 = sum(c[i - 1] * dw[i] for i in pair.rs.nodes)
    vals = {i: dw[i] for i in pair.i_complement}
    vals[0] = h0
    if any(v < 0 for v in vals.values()):
        raise ValueError(f"restricted weight {vals} is not dominant for the subalgebra")
    return Weight0(vals)


def is_alambda_trivial(pair: BdsPair, lam: Weight0) -> bool:
    """Whether the semisimple quotient of the endomorphism algebra is just C.

    Holds iff (i) lam(h_i) > 0 only at nodes where alpha_0 has a positive
    comark, and (ii) lam(h_0) is smaller than the comark at j and at every
    node in the support of lam.  Equivalent to the presentation having no
    surviving variables.
    """
    c = pair.comarks_alpha0
    h0 = lam[0]
    for i in pair.i_complement:
        if lam[i] > 0 and c[i - 1] == 0:
            return False
    if h0 >= c[pair.j - 1]:
        return False
    for i in pair.i_complement:
        if lam[i] > 0 and h0 >= c[i - 1]:
            return False
    return True


def is_global_weyl_irreducible(pair: BdsPair, lam: Weight0) -> bool:
    """Irreducibility criterion for the global Weyl module of weight lam.

    Requires lam(h_0) = 0, and for every i in I(j) in the support of lam the
    coordinates of theta_{a_j - 1} and alpha_0 at i must agree.
    """
    if lam[0] != 0:
        return False
    th = pair.theta_k(pair.a_j - 1)
    for i in pair.i_complement:
        if lam[i] > 0 and th[i - 1] != pair.alpha0[i - 1]:
            return False
    return True


# -- evaluation parameters and ideal points -----------------------------------


@dataclass(frozen=True)
class EvalPoint:
    """One evaluation point: the a_j-th power of the parameter and a dominant weight."""

    z_power: Fraction
    weight: DeltaWeight


@dataclass(frozen=True)
class EvalParams:
    mu: Weight0
    points: tuple[EvalPoint, ...]


@dataclass(frozen=True)
class IdealPoint:
    """Exact scalars pi[i][r] satisfying the presentation relations at weight lam."""

    lam: Weight0
    mu_h0: int
    pi: tuple[tuple[Fraction, ...], ...]  # coefficient list of pi_i(u), per node

    def pi_coeff(self, i: int, r: int) -> Fraction:
        row = self.pi[i - 1]
        return row[r] if r < len(row) else Fraction(0)

    def degree(self, i: int) -> int:
        return len(self.pi[i - 1]) - 1

    def nonzero_entries(self) -> dict[tuple[int, int], Fraction]:
        out = {}
        for i, row in enumerate(self.pi, start=1):
            for r, c in enumerate(row):
                if r >= 1 and c != 0:
                    out[(i, r)] = c
        return out


def ideal_point_from_params(pair: BdsPair, lam: Weight0, params: EvalParams) -> IdealPoint:
    """Evaluate the generators P[i,r] on the tensor product of evaluation modules.

    pi_i(u) = prod_s (1 - z_s^{a_j} u)^{lam_s(h_i)}.  The returned point is
    verified against the presentation relations and the degree identity
    mu(h_0) = lam(h_0) - sum_i comark_i * deg pi_i.
    """
    powers = [p.z_power for p in params.points]
    if any(z == 0 for z in powers):
        raise ValueError("violated invariant: evaluation parameters must be nonzero")
    if len(set(powers)) != len(powers):
        raise ValueError("violated invariant: repeated z powers")
    for p in params.points:
        if len(p.weight.values) != pair.rs.rank:
            raise ValueError("evaluation weight has the wrong rank")
        if not p.weight.is_dominant():
            raise ValueError(f"violated invariant: non-dominant evaluation weight {p.weight}")
    c = pair.comarks_alpha0
    for i in pair.i_complement:
        if params.mu[i] + sum(p.weight[i] for p in params.points) != lam[i]:
            raise ValueError(f"violated invariant: weight sum mismatch at h_{i}")
    point_h0 = sum(c[i - 1] * p.weight[i] for p in params.points for i in pair.rs.nodes)
    if params.mu[0] + point_h0 != lam[0]:
        raise ValueError("violated invariant: weight sum mismatch at h_0")

    rows = []
    for i in pair.rs.nodes:
        poly = [Fraction(1)]
        for p in params.points:
            factor = [Fraction(1), -p.z_power]
            for _ in range(p.weight[i]):
                poly = _poly_mul(poly, factor)
        rows.append(tuple(poly))
    point = IdealPoint(lam, params.mu[0], tuple(rows))
    verify_ideal_point(pair, point)
    return point


def verify_ideal_point(pair: BdsPair, point: IdealPoint) -> None:
    """Check the presentation relations and the degree identity; raises on failure.

    Products over the relation family vanish iff the weighted degree bound
    sum_i comark_i * deg pi_i <= lam(h_0) holds: any violating level tuple
    must exceed the degree of some pi_i, and scalars have no zero divisors.
    """
    lam = point.lam
    c = pair.comarks_alpha0
    for i in pair.i_complement:
        if point.degree(i) > lam[i]:
            raise AssertionError(f"relation violated: deg pi_{i} > lam(h_{i})")
    weighted = sum(c[i - 1] * point.degree(i) for i in pair.rs.nodes)
    if weighted > lam[0]:
        raise AssertionError("relation violated: weighted degree exceeds lam(h_0)")
    if weighted != lam[0] - point.mu_h0:
        raise AssertionError("degree identity violated: mu(h_0) != lam(h_0) - weighted degree")


def _poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for k, bk in enumerate(b):
                if bk:
                    out[i + k] += ai * bk
    return out


# -- local Weyl module dimensions for (B_n, D_n) -------------------------------


def sl2_local_weyl_basis(m: int) -> list[tuple[int, ...]]:
    """Index set of the rank-1 local Weyl module basis at highest weight m:
    the empty sequence and all 0 <= r_1 <= ... <= r_k <= m - k, 1 <= k <= m."""
    if m < 0:
        raise ValueError("weight must be non-negative")
    out: list[tuple[int, ...]] = [()]
    for k in range(1, m + 1):
        out.extend(combinations_with_replacement(range(m - k + 1), k))
    return out


def untwisted_fundamental_local_dim(n: int, i: int) -> int:
    """Local Weyl module dimension at a fundamental weight for the plain
    current algebra of type B_n: sum of binom(2n+1, i-2k) for i < n, 2^n at i = n."""
    if not 1 <= i <= n:
        raise ValueError(f"fundamental index {i} out of range 1..{n}")
    if i == n:
        return 2 ** n
    return sum(comb(2 * n + 1, i - 2 * k) for k in range(i // 2 + 1))


def displayed_sum_dim(n: int, i: int, r: int) -> int:
    """The closed form (binom(2n,i) + ... + binom(2n,1))^r; kept separate
    because it lacks the binom(2n,0) term of the telescoped value."""
    return sum(comb(2 * n, s) for s in range(1, i + 1)) ** r


def _check_bn_pair(pair: BdsPair) -> int:
    n = pair.rs.rank
    if pair.rs.type_letter != "B" or pair.j != n or n < 3:
        raise ValueError(f"local dimensions implemented for (B_n, j=n), n >= 3; got {pair!r}")
    return n


def local_weyl_dim_bn(pair: BdsPair, i: int, r: int) -> int:
    """Local Weyl module dimension for the multiple r of the i-th fundamental
    subalgebra weight of the pair (B_n, D_n), 0 <= i <= n-1.

    The value is the graded-pullback closed form (2^n)^r at i = 0 and
    (sum_{k} binom(2n+1, i-2k))^r otherwise, i.e. the dimension of the
    corresponding local Weyl module of the plain current algebra.  For
    i <= n-2 this is the dimension at every maximal ideal; for i = n-1 it is
    the pullback value at a generic point, while the graded fiber is the
    irreducible module whose dimension `spin_module_dim` gives.
    """
    n = _check_bn_pair(pair)
    if not 0 <= i <= n - 1:
        raise ValueError(f"fundamental index {i} out of range 0..{n - 1}")
    if r < 0:
        raise ValueError("multiplicity must be non-negative")
    if i == 0:
        return 2 ** (n * r)
    return untwisted_fundamental_local_dim(n, i) ** r


def local_weyl_dim_bn_weight(pair: BdsPair, lam: Weight0) -> int:
    """Same as local_weyl_dim_bn, taking the weight itself (must be r times
    one fundamental subalgebra weight)."""
    support = [k for k in pair.delta0_labels if lam[k] > 0]
    if len(support) > 1:
        raise ValueError(f"{lam!r} is not a multiple of one fundamental weight")
    if not support:
        return 1
    label = support[0]
    return local_weyl_dim_bn(pair, label, lam[label])


def spin_module_dim(pair: BdsPair, r: int) -> int:
    """Dimension of the irreducible module of weight r times the spin-node
    fundamental weight of the fixed-point subalgebra (Weyl dimension formula)."""
    n = _check_bn_pair(pair)
    return pair.g0_weyl_dim({n - 1: r})


@dataclass(frozen=True)
class LocalDimReport:
    """Both closed forms for a local Weyl dimension, with the mismatch surfaced."""

    node: int
    multiplicity: int
    value: int
    displayed_value: int | None
    mismatch: bool
    spin_value: int | None

    def lines(self) -> list[str]:
        out = [f"dim W_loc({self.multiplicity} * lambda_{self.node}) = {self.value}"]
        if self.displayed_value is not None:
            out.append(f"displayed closed form gives {self.displayed_value}"
                       + (" (MISMATCH with the telescoped value)" if self.mismatch else ""))
        if self.spin_value is not None:
            out.append(f"graded fiber at the spin node is irreducible of dimension {self.spin_value}")
        return out


def local_weyl_dim_report(pair: BdsPair, i: int, r: int) -> LocalDimReport:
    """Compute the telescoped value and the displayed sum side by side."""
    n = _check_bn_pair(pair)
    value = local_weyl_dim_bn(pair, i, r)
    displayed = displayed_sum_dim(n, i, r) if i >= 1 else None
    mismatch = displayed is not None and displayed != value
    spin = spin_module_dim(pair, r) if i == n - 1 else None
    return LocalDimReport(i, r, value, displayed, mismatch, spin)


# -- recorded constants ---------------------------------------------------------


@dataclass(frozen=True)
class RecordedConstant:
    pair_name: str
    weight: str
    ideal_kind: str
    dim: int
    computed: bool
    note: str


_RECORDED = (
    RecordedConstant("B3", "h2=1,h0=1", "generic", 22, False,
                     "pullback local Weyl module at a generic maximal ideal"),
    RecordedConstant("B3", "h2=1,h0=1", "special", 32, False,
                     "special maximal ideal; value cited from an external thesis"),
)


def record_constants() -> tuple[RecordedConstant, ...]:
    """Regression constants recorded from the source analysis, not computed here."""
    return _RECORDED


def recorded_dim(pair_name: str, weight: str, ideal_kind: str) -> int | None:
    for rec in _RECORDED:
        if (rec.pair_name, rec.weight, rec.ideal_kind) == (pair_name, weight, ideal_kind):
            return rec.dim
    return None
