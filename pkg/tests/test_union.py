"""Colored diagrams, chain extraction and union bases."""

import random
from itertools import permutations as itertools_permutations, product

import pytest

from nwgb import (
    ANTIDIAGONAL,
    Antidiagonal,
    Cell,
    ColoredDiagram,
    Monomial,
    PartialPermutation,
    Polynomial,
    RankCondition,
    RankConditionSpec,
    antidiagonals_of_spec,
    buchberger,
    components,
    extract_factors,
    generator_polynomials,
    generator_product,
    longest_antidiagonal,
    normal_form,
    parse_one_line,
    spec_from_permutation,
    union_basis,
)
from nwgb.polynomials import determinant, polynomial_text


def anti(*cells):
    return Antidiagonal(tuple(Cell(r, c) for r, c in cells))


def random_antidiagonal(rng, n=5, max_len=4):
    length = rng.randint(1, max_len)
    rows = sorted(rng.sample(range(1, n + 1), length))
    cols = sorted(rng.sample(range(1, n + 1), length), reverse=True)
    return Antidiagonal(tuple(Cell(r, c) for r, c in zip(rows, cols)))


def brute_longest_chains(cells):
    """Independent oracle: enumerate every strictly-SW-stepping chain."""
    cells = sorted(cells)
    best = []
    best_len = 0

    def grow(chain, rest):
        nonlocal best, best_len
        if len(chain) > best_len:
            best, best_len = [tuple(chain)], len(chain)
        elif len(chain) == best_len:
            best.append(tuple(chain))
        for index, cell in enumerate(rest):
            if not chain or (cell.row > chain[-1].row and cell.col < chain[-1].col):
                grow(chain + [cell], rest[index + 1 :])

    grow([], cells)
    return best_len, best


# components -------------------------------------------------------------------

def test_disjoint_antidiagonals_make_two_components():
    diagram = ColoredDiagram((anti((1, 2), (2, 1)), anti((1, 4), (3, 1))))
    comps = components(diagram)
    assert [sorted(c.cells) for c in comps] == [
        [Cell(1, 2), Cell(2, 1)],
        [Cell(1, 4), Cell(3, 1)],
    ]


def test_single_antidiagonal_is_one_component():
    diagram = ColoredDiagram((anti((1, 4), (3, 2), (4, 1)),))
    assert len(components(diagram)) == 1


def test_shared_cell_merges_components():
    diagram = ColoredDiagram((anti((1, 1),), anti((1, 1),)))
    assert len(components(diagram)) == 1
    diagram = ColoredDiagram((anti((2, 2), (3, 1)), anti((1, 3), (2, 2))))
    assert len(components(diagram)) == 1


def test_component_order_and_membership():
    diagram = ColoredDiagram((anti((2, 2),), anti((1, 3),), anti((2, 2),)))
    comps = components(diagram)
    assert [c.ne_cell() for c in comps] == [Cell(1, 3), Cell(2, 2)]
    assert comps[1].colors_at(Cell(2, 2)) == (0, 2)


# longest chains ----------------------------------------------------------------

def test_longest_antidiagonal_of_a_chain_is_itself():
    a = anti((1, 4), (3, 2), (4, 1))
    comp = components(ColoredDiagram((a,)))[0]
    assert longest_antidiagonal(comp) == a


def test_tie_break_prefers_most_northwest_chain():
    green = anti((1, 4), (2, 3), (3, 2))
    red = anti((1, 4), (4, 3), (5, 2))
    comp = components(ColoredDiagram((green, red)))[0]
    assert longest_antidiagonal(comp) == green


def test_longest_chain_matches_brute_force_and_is_lex_least():
    rng = random.Random(31)
    for _ in range(150):
        antidiags = [random_antidiagonal(rng) for _ in range(rng.randint(1, 3))]
        diagram = ColoredDiagram(tuple(antidiags))
        for comp in components(diagram):
            chosen = longest_antidiagonal(comp)
            best_len, best = brute_longest_chains(comp.cells)
            assert len(chosen) == best_len
            assert chosen.cells == min(best)


# extraction -------------------------------------------------------------------

def test_extract_disjoint_components_yield_their_own_antidiagonals():
    a = anti((1, 2), (2, 1))
    b = anti((1, 4), (3, 2), (4, 1))
    diagram = ColoredDiagram((a, b))
    assert [extract_factors(c, diagram) for c in components(diagram)] == [[a], [b]]


def test_extract_merged_antidiagonal_gives_single_factor():
    # two chains overlapping into one antidiagonal X
    green = anti((1, 4), (2, 3), (3, 2))
    red = anti((2, 3), (3, 2), (4, 1))
    diagram = ColoredDiagram((green, red))
    comp = components(diagram)[0]
    assert extract_factors(comp, diagram) == [anti((1, 4), (2, 3), (3, 2), (4, 1))]


def test_extract_tie_component_factors():
    green = anti((1, 4), (2, 3), (3, 2))
    red = anti((1, 4), (4, 3), (5, 2))
    diagram = ColoredDiagram((green, red))
    comp = components(diagram)[0]
    assert extract_factors(comp, diagram) == [green, anti((4, 3), (5, 2))]


def test_extraction_reconnects_surviving_dots_of_a_color():
    # the long chain consumes the middle of one color; its far tail must
    # come back as its own factor
    blue = anti((1, 2), (2, 1))
    green = anti((2, 4), (3, 2), (4, 1))
    red = anti((1, 5), (2, 4), (5, 1))
    diagram = ColoredDiagram((blue, green, red))
    comps = components(diagram)
    assert [sorted(c.cells)[0] for c in comps] == [Cell(1, 2), Cell(1, 5)]
    assert extract_factors(comps[0], diagram) == [blue]
    assert extract_factors(comps[1], diagram) == [
        anti((1, 5), (2, 4), (3, 2), (4, 1)),
        anti((5, 1),),
    ]


# generator products --------------------------------------------------------------

def test_single_antidiagonal_generator_is_its_determinant():
    a = anti((1, 4), (3, 2), (4, 1))
    built = generator_product([a])
    assert built.factors == (a,)
    assert built.poly == determinant([1, 3, 4], [1, 2, 4])


def test_two_disjoint_singletons_multiply():
    built = generator_product([anti((1, 1),), anti((1, 2),)])
    assert built.poly == Polynomial.variable(Cell(1, 1)) * Polynomial.variable(
        Cell(1, 2)
    )


def test_shared_box_collapses_to_one_factor():
    built = generator_product([anti((1, 1),), anti((1, 1),)])
    assert built.poly == Polynomial.variable(Cell(1, 1))


def test_generator_factor_text():
    built = generator_product([anti((1, 2), (2, 1)), anti((3, 1),)])
    assert built.factor_text() == "|m[1,1] m[1,2] ; m[2,1] m[2,2]| |m[3,1]|"


def test_generator_cell_partition_and_leading_monomial():
    rng = random.Random(37)
    for _ in range(150):
        antidiags = [random_antidiagonal(rng) for _ in range(rng.randint(1, 3))]
        built = generator_product(antidiags)
        occupied = set()
        for a in antidiags:
            occupied.update(a.cells)
        flat = [cell for factor in built.factors for cell in factor.cells]
        assert len(flat) == len(occupied)
        assert set(flat) == occupied
        coeff, lead = built.poly.leading_term(ANTIDIAGONAL)
        assert lead == Monomial.from_cells(occupied)
        assert lead.is_squarefree()


def test_first_touching_factor_dominates_inputs_on_schubert_diagrams():
    """On diagrams coming from S3/S4 ideal pairs, the first factor meeting an
    input antidiagonal is at least as long and fits a same-length window
    inside the input's northwest bounding region."""
    perms = [
        PartialPermutation(images)
        for images in itertools_permutations(range(1, 4))
    ]
    specs = [spec_from_permutation(p) for p in perms]
    pairs = [(a, b) for a in specs for b in specs]
    for left, right in pairs:
        for combo in product(
            antidiagonals_of_spec(left), antidiagonals_of_spec(right)
        ):
            built = generator_product(combo)
            for a in combo:
                first = next(
                    f for f in built.factors if set(f.cells) & set(a.cells)
                )
                assert len(first) >= len(a)
                size = len(a)
                max_row = max(c.row for c in a.cells)
                max_col = max(c.col for c in a.cells)
                assert any(
                    first.cells[s + size - 1].row <= max_row
                    and first.cells[s].col <= max_col
                    for s in range(len(first) - size + 1)
                )


def test_long_chain_can_escape_a_source_region():
    """Known limitation, kept as a regression marker: when the unique
    longest chain of a component jumps outside the bounding region of a
    touching input antidiagonal, the resulting product is not a member of
    that input's single-condition ideal.  This configuration cannot arise
    from the S3/S4 permutation ideals exercised by the acceptance suite."""
    a1 = anti((1, 4), (2, 1))
    a2 = anti((1, 4), (3, 2), (4, 1))
    built = generator_product([a1, a2])
    assert [(f.rows(), f.cols()) for f in built.factors] == [
        ((1, 3, 4), (1, 2, 4)),
        ((2,), (1,)),
    ]
    ideal_a1 = RankConditionSpec(4, (RankCondition(2, 4, 1),))
    basis = buchberger(generator_polynomials(ideal_a1), ANTIDIAGONAL)
    assert not normal_form(built.poly, basis, ANTIDIAGONAL).is_zero()


# union bases ---------------------------------------------------------------------

def test_union_231_312_matches_published_four_generators():
    basis = union_basis(
        [
            spec_from_permutation(parse_one_line("2 3 1")),
            spec_from_permutation(parse_one_line("3 1 2")),
        ]
    )
    assert [polynomial_text(g.poly) for g in basis] == [
        "1*m[1,1]",
        "1*m[1,1]*m[1,2]",
        "1*m[1,1]*m[2,1]",
        "1*m[1,2]*m[2,1]",
    ]


def test_union_of_single_spec_returns_fulton_generators():
    spec = spec_from_permutation(parse_one_line("2 1 4 3"))
    basis = union_basis([spec])
    assert [g.poly for g in basis] == generator_polynomials(spec)


def test_union_with_unconstrained_spec_is_whole_space():
    identity = spec_from_permutation(parse_one_line("1 2 3"))
    other = spec_from_permutation(parse_one_line("2 3 1"))
    assert union_basis([identity, other]) == []
    assert union_basis([other, identity]) == []


def test_union_deduplicates_by_polynomial():
    spec = spec_from_permutation(parse_one_line("2 3 1"))
    basis = union_basis([spec, spec])
    assert [polynomial_text(g.poly) for g in basis] == [
        "1*m[1,1]",
        "1*m[1,1]*m[2,1]",
        "1*m[2,1]",
    ]


def test_union_ambient_mismatch():
    with pytest.raises(ValueError):
        union_basis(
            [
                spec_from_permutation(parse_one_line("2 3 1")),
                spec_from_permutation(parse_one_line("2 1 4 3")),
            ]
        )
    with pytest.raises(ValueError):
        union_basis([])


def test_union_1423_1342_has_nine_products_in_display_order():
    basis = union_basis(
        [
            spec_from_permutation(parse_one_line("1 4 2 3")),
            spec_from_permutation(parse_one_line("1 3 4 2")),
        ]
    )
    shapes = [[(f.rows(), f.cols()) for f in g.factors] for g in basis]
    assert shapes == [
        [((1, 2), (1, 2))],
        [((1, 2), (1, 2)), ((3,), (1,))],
        [((1, 2), (1, 2)), ((2, 3), (1, 2))],
        [((1, 2), (1, 2)), ((1,), (3,))],
        [((1, 3), (1, 2)), ((1, 2), (1, 3))],
        [((1, 2), (1, 3)), ((2, 3), (1, 2))],
        [((1, 2), (1, 2)), ((1, 2), (2, 3))],
        [((1, 3), (1, 2)), ((1, 2), (2, 3))],
        [((1, 2, 3), (1, 2, 3))],
    ]


def test_generator_json_schema():
    built = generator_product([anti((1, 2), (2, 1)), anti((3, 1),)])
    data = built.to_json()
    assert data["factors"] == [
        {"rows": [1, 2], "cols": [1, 2]},
        {"rows": [3], "cols": [1]},
    ]
    assert data["poly"][0]["coeff"] == "-1"
