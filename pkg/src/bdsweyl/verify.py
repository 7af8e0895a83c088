"""Cross-cutting invariant suite, runnable from the CLI as `verify-all`.

Each check walks a family of pairs (bounded by rank) or a seeded random
family of weights and returns a named pass/fail result.  The suite is
deterministic for a fixed seed: identical inputs give identical reports.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import garland, weylcrit
from .bdspair import BdsPair, all_pairs, alpha0_by_scan, component_root_count
from .rootsys import build, reflect_by_root
from .srring import SimplicialComplex, Weight0, hilbert_series_bruteforce, presentation, verify_shelling


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        tail = f"  [{self.detail}]" if self.detail else ""
        return f"{status:4}  {self.name}{tail}"


def _random_weight(pair: BdsPair, rng: random.Random, bound: int = 3) -> Weight0:
    return Weight0({k: rng.randrange(0, bound + 1) for k in pair.delta0_labels})


def distinct_fractions(rng: random.Random, k: int) -> list[Fraction]:
    """k pairwise distinct nonzero rationals, deterministic for a fixed rng."""
    out: list[Fraction] = []
    while len(out) < k:
        z = Fraction(rng.randrange(1, 60), rng.randrange(1, 5))
        if rng.randrange(2):
            z = -z
        if z not in out:
            out.append(z)
    return out


def check_pair_structure(max_rank: int) -> CheckResult:
    count = 0
    for pair in all_pairs(max_rank):
        count += 1
        if pair.alpha0 != alpha0_by_scan(pair.rs, pair.j):
            return CheckResult("pair structure", False, f"alpha0 oracle mismatch for {pair.describe()}")
        sizes = [len(pair.graded_roots(k)) for k in range(pair.a_j)]
        if sum(sizes) != len(pair.rs.roots):
            return CheckResult("pair structure", False, f"grading does not partition {pair.describe()}")
        for k in range(1, pair.a_j):
            if sizes[k] != sizes[pair.a_j - k]:
                return CheckResult("pair structure", False, f"|R_k| asymmetry for {pair.describe()}")
            pair.theta_k(k)  # asserts uniqueness and the dominance conditions
        closure = set(pair.delta0)
        queue = list(closure)
        while queue:
            v = queue.pop()
            for d in pair.delta0:
                w = reflect_by_root(pair.rs, d, v)
                if w not in closure:
                    closure.add(w)
                    queue.append(w)
        if closure != set(pair.graded_roots(0)):
            return CheckResult("pair structure", False, f"Delta_0 closure != R_0 for {pair.describe()}")
        if sum(component_root_count(c) for c in pair.g0_components) != sizes[0]:
            return CheckResult("pair structure", False, f"component sizes for {pair.describe()}")
    return CheckResult("pair structure", True, f"{count} pairs")


def check_comark_bound(max_rank: int) -> CheckResult:
    hits = 0
    for pair in all_pairs(max_rank):
        if pair.comarks_alpha0[pair.j - 1] == 1:
            hits += 1
            if max(pair.comarks_alpha0) > 1:
                return CheckResult("comark bound", False, pair.describe())
    return CheckResult("comark bound", True, f"{hits} pairs with comark 1 at j")


def check_reflection_chains(max_rank: int) -> CheckResult:
    for pair in all_pairs(max_rank):
        nodes = list(pair.rs.nodes)
        orders = [None, tuple(reversed(nodes)), tuple(nodes[1:] + nodes[:1])]
        for prefer in orders:
            counts = pair.reflection_chain(prefer).node_counts()
            for i in pair.rs.nodes:
                if counts.get(i, 0) != pair.comarks_alpha0[i - 1]:
                    return CheckResult("reflection chains", False,
                                       f"{pair.describe()} with order {prefer}")
    return CheckResult("reflection chains", True, "3 tie-break orders per pair")


def check_graded_pieces(max_rank: int) -> CheckResult:
    for pair in all_pairs(max_rank):
        for k in range(1, pair.a_j):
            if not pair.gk_irreducibility_check(k):
                return CheckResult("graded piece dimensions", False, f"{pair.describe()} k={k}")
    return CheckResult("graded piece dimensions", True)


def check_criteria_consistency(max_rank: int, rng: random.Random, samples: int) -> CheckResult:
    for pair in all_pairs(max_rank):
        for _ in range(samples):
            lam = _random_weight(pair, rng)
            trivial = weylcrit.is_alambda_trivial(pair, lam)
            empty = len(presentation(pair, lam).variables) == 0
            if trivial != empty:
                return CheckResult("criteria consistency", False,
                                   f"trivial != empty at {pair.describe()} lam={lam.format()}")
            if weylcrit.is_global_weyl_irreducible(pair, lam) and not trivial:
                return CheckResult("criteria consistency", False,
                                   f"irreducible without trivial at {pair.describe()} lam={lam.format()}")
    return CheckResult("criteria consistency", True)


def check_krull(max_rank: int, rng: random.Random, samples: int) -> CheckResult:
    for pair in all_pairs(max_rank):
        for _ in range(samples):
            pres = presentation(pair, _random_weight(pair, rng))
            dim = pres.krull_dim()  # asserts the closed form when jac_zero
            if dim != max(len(f) for f in pres.facets().facets):
                return CheckResult("Krull dimension", False, pair.describe())
    return CheckResult("Krull dimension", True)


def check_hilbert_oracle(max_rank: int, rng: random.Random, samples: int, degree: int) -> CheckResult:
    pairs = all_pairs(max_rank)
    done = 0
    for _ in range(samples):
        pair = rng.choice(pairs)
        pres = presentation(pair, _random_weight(pair, rng))
        got = pres.hilbert_series(degree).coefficients
        want = hilbert_series_bruteforce(pres, degree)
        if got != want:
            return CheckResult("Hilbert oracle", False,
                               f"{pair.describe()} lam={pres.lam.format()}: {got} vs {want}")
        done += 1
    return CheckResult("Hilbert oracle", True, f"{done} instances to degree {degree}")


def check_shellings(rng: random.Random, samples: int, max_rank: int) -> CheckResult:
    for n in range(3, min(5, max_rank) + 1):
        pair = BdsPair(build("B", n), n)
        for _ in range(samples):
            pres = presentation(pair, _random_weight(pair, rng))
            order = pres.canonical_shelling()
            if not verify_shelling(pres.facets(), order):
                return CheckResult("shellings", False, f"B{n} lam={pres.lam.format()}")
    bad = SimplicialComplex((), (frozenset({1, 2, 3}), frozenset({3, 4, 5})))
    if verify_shelling(bad, list(bad.facets)):
        return CheckResult("shellings", False, "counterexample order accepted")
    return CheckResult("shellings", True)


def check_ideal_points(max_rank: int, rng: random.Random, samples: int) -> CheckResult:
    pairs = all_pairs(max_rank)
    for _ in range(samples):
        pair = rng.choice(pairs)
        lam, params = _random_eval_params(pair, rng)
        try:
            weylcrit.ideal_point_from_params(pair, lam, params)
        except AssertionError as exc:
            return CheckResult("ideal points", False, f"{pair.describe()}: {exc}")
    return CheckResult("ideal points", True, f"{samples} parameter draws")


def _random_eval_params(pair: BdsPair, rng: random.Random):
    mu = Weight0({k: rng.randrange(0, 3) for k in pair.delta0_labels})
    k = rng.randrange(0, 3)
    points = tuple(
        weylcrit.EvalPoint(z,
                           weylcrit.DeltaWeight.of(pair.rs.rank,
                                                   {i: rng.randrange(0, 3) for i in pair.rs.nodes}))
        for z in distinct_fractions(rng, k))
    c = pair.comarks_alpha0
    vals = {i: mu[i] + sum(p.weight[i] for p in points) for i in pair.i_complement}
    vals[0] = mu[0] + sum(c[i - 1] * p.weight[i] for p in points for i in pair.rs.nodes)
    return Weight0(vals), weylcrit.EvalParams(mu=mu, points=points)


def check_garland(max_rank: int, order: int) -> CheckResult:
    roots = 0
    for pair in all_pairs(min(max_rank, 3)):
        for alpha in pair.rs.positive_roots:
            roots += 1
            if not garland.product_formula_check(pair, alpha, order):
                return CheckResult("garland identities", False,
                                   f"product formula at {pair.describe()} alpha={alpha}")
            if not garland.grouplike_check(pair, alpha, order):
                return CheckResult("garland identities", False,
                                   f"coproduct at {pair.describe()} alpha={alpha}")
            if not garland.newton_identity_holds(pair, alpha, order):
                return CheckResult("garland identities", False,
                                   f"Newton identity at {pair.describe()} alpha={alpha}")
    return CheckResult("garland identities", True, f"{roots} roots at order {order}")


def run_all(max_rank: int = 5, seed: int = 0, weight_samples: int = 6,
            hilbert_samples: int = 10, hilbert_degree: int = 16,
            ideal_samples: int = 40, garland_order: int = 3) -> list[CheckResult]:
    rng = random.Random(seed)
    return [
        check_pair_structure(max_rank),
        check_comark_bound(max_rank),
        check_reflection_chains(max_rank),
        check_graded_pieces(min(max_rank, 6)),
        check_criteria_consistency(min(max_rank, 5), rng, weight_samples),
        check_krull(min(max_rank, 5), rng, weight_samples),
        check_hilbert_oracle(min(max_rank, 5), rng, hilbert_samples, hilbert_degree),
        check_shellings(rng, weight_samples, min(max_rank, 5)),
        check_ideal_points(min(max_rank, 5), rng, ideal_samples),
        check_garland(max_rank, garland_order),
    ]
