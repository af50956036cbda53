"""Sanity checks on the packaged property suites (small case counts; the
full-size runs live in the acceptance module)."""

import pytest

from nwgb.verify import (
    SUITES,
    honest_permutations,
    run_suite,
    sampled_s4_pairs,
)


@pytest.mark.parametrize("name", ["order-axioms", "minor-init", "generator-init"])
def test_light_suites_pass_with_small_counts(name):
    report = run_suite(name, seed=1, cases=40)
    assert report.passed
    assert report.cases == 40


def test_gluing_suite_small():
    report = run_suite("gluing", seed=1, cases=25)
    assert report.passed


def test_suite_reports_are_deterministic():
    a = run_suite("generator-init", seed=3, cases=30)
    b = run_suite("generator-init", seed=3, cases=30)
    assert (a.cases, a.failures) == (b.cases, b.failures)


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")


def test_registry_names():
    assert {
        "order-axioms",
        "minor-init",
        "gluing",
        "generator-init",
        "s3-exhaustive",
        "s4-sampled",
        "triples",
        "km-regression",
    } <= set(SUITES)


def test_honest_permutation_enumeration():
    assert len(honest_permutations(3)) == 6
    assert len({p.images for p in honest_permutations(4)}) == 24


def test_s4_sample_contains_required_fixtures():
    pairs = sampled_s4_pairs(seed=0, count=25)
    assert len(pairs) == 25
    keys = {(l.images, r.images) for l, r in pairs}
    assert ((1, 4, 2, 3), (1, 3, 4, 2)) in keys
    assert ((2, 1, 4, 3), (1, 4, 3, 2)) in keys
    assert len(keys) == 25
