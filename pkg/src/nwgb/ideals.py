"""Schemes cut out by northwest rank conditions and their determinantal
generators.

A rank condition bounds the rank of the northwest i x j submatrix; the
matching generators are all (r+1) x (r+1) minors of that submatrix.  For a
(partial) permutation the conditions read off the essential boxes suffice,
and the resulting minors are the Fulton generators of its matrix Schubert
variety.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .permutations import PartialPermutation, essential_set, parse_one_line, rank_matrix
from .polynomials import Antidiagonal, Polynomial, antidiagonal_of, determinant


@dataclass(frozen=True)
class RankCondition:
    """The northwest ``row`` x ``col`` submatrix has rank at most ``max_rank``."""

    row: int
    col: int
    max_rank: int

    def __post_init__(self):
        if self.row < 1 or self.col < 1:
            raise ValueError("corner indices start at 1")
        if not 0 <= self.max_rank <= min(self.row, self.col):
            raise ValueError(
                f"rank bound {self.max_rank} out of range for a "
                f"{self.row}x{self.col} region"
            )

    def is_vacuous(self) -> bool:
        return self.max_rank >= min(self.row, self.col)


@dataclass(frozen=True)
class RankConditionSpec:
    """A scheme given by a list of rank conditions inside an n x n matrix.

    Conditions may be redundant; nothing is pruned.  An empty condition
    list denotes the whole matrix space (the zero ideal).
    """

    ambient_n: int
    conditions: tuple[RankCondition, ...] = ()
    label: str = ""

    def __post_init__(self):
        if self.ambient_n < 1:
            raise ValueError("ambient size must be positive")
        object.__setattr__(self, "conditions", tuple(self.conditions))
        for cond in self.conditions:
            if cond.row > self.ambient_n or cond.col > self.ambient_n:
                raise ValueError(f"condition {cond} exceeds ambient {self.ambient_n}")


@dataclass(frozen=True)
class FultonGenerator:
    """One minor imposed by a rank condition."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    poly: Polynomial
    antidiag: Antidiagonal
    source: RankCondition


def spec_from_permutation(p: PartialPermutation) -> RankConditionSpec:
    """Conditions at the essential boxes only (they suffice by Fulton's
    theorem)."""
    conditions = tuple(
        RankCondition(cell.row, cell.col, rank)
        for cell, rank in sorted(essential_set(p))
    )
    return RankConditionSpec(p.n, conditions, label=p.one_line())


def spec_from_rank_matrix(p: PartialPermutation) -> RankConditionSpec:
    """One condition per matrix position; deliberately redundant.

    Useful for checking that the essential boxes really do cut out the
    same ideal.
    """
    ranks = rank_matrix(p)
    conditions = tuple(
        RankCondition(i, j, ranks.entry(i, j))
        for i in range(1, p.n + 1)
        for j in range(1, p.n + 1)
    )
    return RankConditionSpec(p.n, conditions, label=f"{p.one_line()} full")


def fulton_generators(spec: RankConditionSpec) -> list[FultonGenerator]:
    """Every (r+1)-minor of every condition's region, rows then columns in
    ascending lexicographic subset order."""
    out: list[FultonGenerator] = []
    for cond in spec.conditions:
        size = cond.max_rank + 1
        if size > min(cond.row, cond.col):
            continue
        for rows in combinations(range(1, cond.row + 1), size):
            for cols in combinations(range(1, cond.col + 1), size):
                out.append(
                    FultonGenerator(
                        rows,
                        cols,
                        determinant(rows, cols, ambient_n=spec.ambient_n),
                        antidiagonal_of(rows, cols, ambient_n=spec.ambient_n),
                        cond,
                    )
                )
    return out


def generator_polynomials(spec: RankConditionSpec) -> list[Polynomial]:
    return [g.poly for g in fulton_generators(spec)]


def antidiagonals_of_spec(spec: RankConditionSpec) -> list[Antidiagonal]:
    """Antidiagonals of the Fulton generators, deduplicated, in generator
    enumeration order."""
    seen: set[Antidiagonal] = set()
    out: list[Antidiagonal] = []
    for gen in fulton_generators(spec):
        if gen.antidiag not in seen:
            seen.add(gen.antidiag)
            out.append(gen.antidiag)
    return out


# ---------------------------------------------------------------------------
# spec files

def spec_to_json(spec: RankConditionSpec) -> dict:
    return {
        "n": spec.ambient_n,
        "label": spec.label,
        "conditions": [
            {"i": c.row, "j": c.col, "r": c.max_rank} for c in spec.conditions
        ],
    }


def spec_from_json(data: Mapping) -> RankConditionSpec:
    """Accepts ``{"n":., "label":., "conditions":[{"i":.,"j":.,"r":.},..]}``
    or ``{"n":., "permutation":"1 4 2 3"}`` (n optional in the second form)."""
    if "permutation" in data:
        p = parse_one_line(str(data["permutation"]))
        if "n" in data and int(data["n"]) != p.n:
            raise ValueError(
                f"declared n={data['n']} but the permutation has {p.n} entries"
            )
        spec = spec_from_permutation(p)
        if "label" in data:
            spec = RankConditionSpec(spec.ambient_n, spec.conditions, str(data["label"]))
        return spec
    if "n" not in data or "conditions" not in data:
        raise ValueError("spec needs either a permutation or n plus conditions")
    conditions = tuple(
        RankCondition(int(c["i"]), int(c["j"]), int(c["r"])) for c in data["conditions"]
    )
    return RankConditionSpec(int(data["n"]), conditions, str(data.get("label", "")))


def load_spec(path: str) -> RankConditionSpec:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    return spec_from_json(data)
