"""Seeded property suites behind the ``verify`` command and the acceptance
tests.

Each suite draws its cases from a deterministic RNG, runs an oracle-backed
check per case and reports per-property counts.  All randomness flows from
the single seed argument, so reports are reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations as _itertools_permutations

from .ideals import (
    RankCondition,
    RankConditionSpec,
    generator_polynomials,
    spec_from_permutation,
)
from .groebner import (
    IdealPresentation,
    buchberger,
    ideals_equal,
    initial_ideal,
    intersect,
    intersect_many,
    is_groebner,
    normal_form,
)
from .permutations import PartialPermutation
from .polynomials import (
    ANTIDIAGONAL,
    Antidiagonal,
    Cell,
    Monomial,
    compare,
    MONOMIAL_ONE,
    determinant,
)
from .union import generator_product, union_basis


@dataclass
class SuiteReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, detail: str):
        self.cases += 1
        if not ok:
            self.failures.append(detail)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {self.cases} cases, {len(self.failures)} failures [{verdict}]"


def honest_permutations(n: int) -> list[PartialPermutation]:
    return [
        PartialPermutation(images)
        for images in _itertools_permutations(range(1, n + 1))
    ]


def ideal_of(spec: RankConditionSpec) -> IdealPresentation:
    return IdealPresentation(tuple(generator_polynomials(spec)), ANTIDIAGONAL)


@lru_cache(maxsize=None)
def _condition_basis(row: int, col: int, max_rank: int, ambient: int):
    """Reduced basis of the single-condition determinantal ideal (cached,
    the gluing suite revisits the same few conditions many times)."""
    spec = RankConditionSpec(ambient, (RankCondition(row, col, max_rank),))
    return tuple(buchberger(generator_polynomials(spec), ANTIDIAGONAL))


def _random_monomial(rng: random.Random, n: int, max_vars: int = 4, max_exp: int = 3) -> Monomial:
    count = rng.randint(0, max_vars)
    picks = [
        (Cell(rng.randint(1, n), rng.randint(1, n)), rng.randint(1, max_exp))
        for _ in range(count)
    ]
    return Monomial.make(picks)


def _random_antidiagonal(rng: random.Random, n: int, max_len: int | None = None) -> Antidiagonal:
    length = rng.randint(1, max_len or n)
    rows = sorted(rng.sample(range(1, n + 1), length))
    cols = sorted(rng.sample(range(1, n + 1), length), reverse=True)
    return Antidiagonal(tuple(Cell(r, c) for r, c in zip(rows, cols)))


def _random_minor(rng: random.Random, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    size = rng.randint(1, n)
    rows = tuple(sorted(rng.sample(range(1, n + 1), size)))
    cols = tuple(sorted(rng.sample(range(1, n + 1), size)))
    return rows, cols


def suite_order_axioms(seed: int = 0, cases: int = 200) -> SuiteReport:
    """Totality, antisymmetry, transitivity samples, multiplicativity and
    minimality of 1 for the monomial order."""
    rng = random.Random(seed)
    report = SuiteReport("order-axioms")
    for index in range(cases):
        a = _random_monomial(rng, 5)
        b = _random_monomial(rng, 5)
        c = _random_monomial(rng, 5)
        p = _random_monomial(rng, 5)
        ab = compare(ANTIDIAGONAL, a, b)
        ok = (
            ab == -compare(ANTIDIAGONAL, b, a)
            and compare(ANTIDIAGONAL, a, a) == 0
            and (ab != 0 or a == b)
            and compare(ANTIDIAGONAL, MONOMIAL_ONE, a) <= 0
            and compare(ANTIDIAGONAL, a * p, b * p) == ab
        )
        if ok and compare(ANTIDIAGONAL, a, b) <= 0 and compare(ANTIDIAGONAL, b, c) <= 0:
            ok = compare(ANTIDIAGONAL, a, c) <= 0
        report.check(ok, f"case {index}: order axioms failed on {a}, {b}, {c}")
    return report


def suite_minor_leading_terms(seed: int = 0, cases: int = 200) -> SuiteReport:
    """The leading term of every sampled minor is its antidiagonal term,
    with the sign of the reversal permutation."""
    rng = random.Random(seed)
    report = SuiteReport("minor-init")
    for index in range(cases):
        n = rng.randint(1, 5)
        rows, cols = _random_minor(rng, n)
        size = len(rows)
        coeff, mono = determinant(rows, cols).leading_term(ANTIDIAGONAL)
        expected = Monomial.from_cells(
            Cell(r, c) for r, c in zip(rows, reversed(cols))
        )
        expected_sign = -1 if (size * (size - 1) // 2) % 2 else 1
        report.check(
            mono == expected and coeff == expected_sign,
            f"case {index}: minor rows={rows} cols={cols} led with {coeff}*{mono}",
        )
    return report


def suite_gluing(seed: int = 0, cases: int = 200) -> SuiteReport:
    """Overlapping antidiagonals glue: when A union B is an antidiagonal X
    and A, B overlap, det(X) lies in each single-condition ideal built on
    the region northwest of A (resp. B)."""
    rng = random.Random(seed)
    report = SuiteReport("gluing")
    ambient = 5
    for index in range(cases):
        x = _random_antidiagonal(rng, ambient)
        while len(x) < 2:
            x = _random_antidiagonal(rng, ambient)
        cells = list(x.cells)
        a_cells = rng.sample(cells, rng.randint(1, len(cells)))
        rest = [c for c in cells if c not in a_cells]
        shared = rng.sample(a_cells, rng.randint(1, len(a_cells)))
        b_cells = rest + shared
        det_x = x.determinant()
        ok = True
        detail = ""
        for part in (a_cells, b_cells):
            chain = Antidiagonal.from_cells(part)
            corner_row = max(c.row for c in chain)
            corner_col = max(c.col for c in chain)
            basis = _condition_basis(corner_row, corner_col, len(chain) - 1, ambient)
            if not normal_form(det_x, basis, ANTIDIAGONAL).is_zero():
                ok = False
                detail = f"case {index}: det({list(x.cells)}) not in ideal of {list(chain.cells)}"
                break
        report.check(ok, detail or f"case {index}")
    return report


def suite_generator_init(seed: int = 0, cases: int = 200) -> SuiteReport:
    """Structural invariants of synthesized generators: factor cells
    partition the occupied cells, the leading monomial is the squarefree
    product of the occupied cells, and for each input antidiagonal the
    first factor touching it is at least as long (it is extracted as a
    longest chain of a component containing the whole input)."""
    rng = random.Random(seed)
    report = SuiteReport("generator-init")
    for index in range(cases):
        count = rng.randint(2, 3)
        antidiags = [_random_antidiagonal(rng, 5, max_len=4) for _ in range(count)]
        built = generator_product(antidiags)
        occupied = set()
        for a in antidiags:
            occupied.update(a.cells)
        flat = [cell for factor in built.factors for cell in factor.cells]
        partition_ok = len(flat) == len(occupied) and set(flat) == occupied
        coeff, mono = built.poly.leading_term(ANTIDIAGONAL)
        init_ok = mono == Monomial.from_cells(occupied) and mono.is_squarefree()
        length_ok = True
        for a in antidiags:
            first = next(f for f in built.factors if set(f.cells) & set(a.cells))
            if len(first) < len(a):
                length_ok = False
        report.check(
            partition_ok and init_ok and length_ok,
            f"case {index}: inputs {[list(a.cells) for a in antidiags]} "
            f"partition={partition_ok} init={init_ok} length={length_ok}",
        )
    return report


def _union_pair_checks(
    report: SuiteReport,
    left: PartialPermutation,
    right: PartialPermutation,
    check_init_theorem: bool = False,
):
    spec_l = spec_from_permutation(left)
    spec_r = spec_from_permutation(right)
    basis = [g.poly for g in union_basis([spec_l, spec_r])]
    label = f"{left.one_line()} | {right.one_line()}"
    report.check(is_groebner(basis, ANTIDIAGONAL), f"{label}: basis fails Buchberger criterion")
    meet = intersect(ideal_of(spec_l), ideal_of(spec_r))
    report.check(
        ideals_equal(basis, meet, ANTIDIAGONAL),
        f"{label}: basis ideal differs from oracle intersection",
    )
    if check_init_theorem:
        left_init = initial_ideal(generator_polynomials(spec_l), ANTIDIAGONAL)
        right_init = initial_ideal(generator_polynomials(spec_r), ANTIDIAGONAL)
        meet_init = initial_ideal(meet, ANTIDIAGONAL)
        report.check(
            meet_init == left_init.intersect(right_init),
            f"{label}: init of intersection differs from intersection of inits",
        )


def suite_s3_exhaustive(seed: int = 0, cases: int | None = None) -> SuiteReport:
    """All 36 ordered pairs of honest permutations in S3."""
    report = SuiteReport("s3-exhaustive")
    perms = honest_permutations(3)
    for left in perms:
        for right in perms:
            _union_pair_checks(report, left, right)
    return report


# Pairs the reports in the source material work through; always included.
_REQUIRED_S4_PAIRS = (((1, 4, 2, 3), (1, 3, 4, 2)), ((2, 1, 4, 3), (1, 4, 3, 2)))


def sampled_s4_pairs(seed: int, count: int) -> list[tuple[PartialPermutation, PartialPermutation]]:
    rng = random.Random(seed)
    perms = honest_permutations(4)
    pool = [(a, b) for a in perms for b in perms]
    chosen = [
        (PartialPermutation(l), PartialPermutation(r)) for l, r in _REQUIRED_S4_PAIRS
    ]
    seen = {(l.images, r.images) for l, r in chosen}
    while len(chosen) < count and len(seen) < len(pool):
        left, right = rng.choice(pool)
        key = (left.images, right.images)
        if key in seen:
            continue
        seen.add(key)
        chosen.append((left, right))
    return chosen


def suite_s4_sampled(seed: int = 0, cases: int = 25) -> SuiteReport:
    """Seeded sample of ordered S4 pairs, plus the two fixed fixtures; also
    checks the initial-ideal intersection theorem on each pair."""
    report = SuiteReport("s4-sampled")
    for left, right in sampled_s4_pairs(seed, cases):
        _union_pair_checks(report, left, right, check_init_theorem=True)
    return report


def _embed(p: PartialPermutation, n: int) -> PartialPermutation:
    """View a permutation inside a larger symmetric group by appending fixed
    points.  The Rothe diagram, essential set and Fulton generators are
    unchanged; only the ambient matrix grows."""
    extra = tuple(range(p.n + 1, n + 1))
    return PartialPermutation(p.images + extra)


def suite_triple_intersections(seed: int = 0, cases: int = 10) -> SuiteReport:
    """Seeded triples drawn from S3 and S4 together (S3 elements are viewed
    inside S4 so the ideals share one ambient matrix): every synthesized
    generator reduces to zero in every input ideal, and the basis matches
    the iterated oracle intersection."""
    rng = random.Random(seed)
    report = SuiteReport("triples")
    pool = [_embed(p, 4) for p in honest_permutations(3)] + honest_permutations(4)
    for index in range(cases):
        triple = [rng.choice(pool) for _ in range(3)]
        specs = [spec_from_permutation(p) for p in triple]
        label = " | ".join(p.one_line() for p in triple)
        basis = [g.poly for g in union_basis(specs)]
        member_ok = True
        for spec in specs:
            gb = buchberger(generator_polynomials(spec), ANTIDIAGONAL)
            if not all(normal_form(g, gb, ANTIDIAGONAL).is_zero() for g in basis):
                member_ok = False
        report.check(member_ok, f"{label}: membership failure")
        meet = intersect_many([ideal_of(s) for s in specs])
        report.check(
            ideals_equal(basis, meet, ANTIDIAGONAL),
            f"{label}: basis differs from iterated intersection",
        )
    return report


def suite_km_regression(seed: int = 0, cases: int | None = None) -> SuiteReport:
    """The Fulton generators of every permutation in S3 and S4 pass the
    Buchberger criterion under the antidiagonal order."""
    report = SuiteReport("km-regression")
    for n in (3, 4):
        for p in honest_permutations(n):
            gens = generator_polynomials(spec_from_permutation(p))
            report.check(
                is_groebner(gens, ANTIDIAGONAL),
                f"{p.one_line()}: Fulton generators are not a Groebner basis",
            )
    return report


SUITES = {
    "order-axioms": suite_order_axioms,
    "minor-init": suite_minor_leading_terms,
    "gluing": suite_gluing,
    "generator-init": suite_generator_init,
    "s3-exhaustive": suite_s3_exhaustive,
    "s4-sampled": suite_s4_sampled,
    "triples": suite_triple_intersections,
    "km-regression": suite_km_regression,
}

_DEFAULT_CASES = {
    "order-axioms": 200,
    "minor-init": 200,
    "gluing": 200,
    "generator-init": 200,
    "s4-sampled": 25,
    "triples": 10,
}


def run_suite(name: str, seed: int = 0, cases: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choices: {', '.join(sorted(SUITES))}")
    effective = cases if cases is not None else _DEFAULT_CASES.get(name)
    if effective is None:
        return SUITES[name](seed)
    return SUITES[name](seed, effective)
