import math
from fractions import Fraction

import pytest

from aronson.analysis import (AVERAGE_DENSITY, IDENTITIES, IdentityReport, all_checks,
                              average_density_constant, density_profile, segment_bounds,
                              verify_identity)
from aronson.core import GeneratedSequence, HorizonExceeded, InvalidParameters, UnknownIdentity
from aronson.registry import REGISTRY, sequence_a


def test_density_constant():
    assert round(average_density_constant(), 4) == 0.7075
    assert math.isclose(0.75 - average_density_constant(), math.log(32 / 27) / 4)
    # base-10 would give 0.7315
    assert abs(0.75 - math.log10(32 / 27) / 4 - 0.7315) < 1e-4


def test_segment_bounds():
    assert segment_bounds(0) == range(3, 9)
    assert segment_bounds(10) == range(6 * 1024 - 3, 12 * 1024 - 3)
    with pytest.raises(InvalidParameters):
        segment_bounds(-1)


@pytest.fixture(scope="module")
def a_to_12():
    return sequence_a((12 << 12) - 3)


def test_density_extremes_are_exact(a_to_12):
    for k in range(1, 13):
        p = density_profile(a_to_12, k)
        # the maximum sits at the segment midpoint, the minimum at its start
        assert p.argmax == 9 * 2**k - 3
        assert p.max_ratio == Fraction(9 * 2**k - 3, 12 * 2**k - 3)
        assert p.argmin == 6 * 2**k - 3
        assert p.min_ratio == Fraction(6 * 2**k - 3, 9 * 2**k - 3)
        assert 0 < p.min_ratio <= p.mean_ratio <= p.max_ratio <= 1


def test_density_segment_ten(a_to_12):
    p = density_profile(a_to_12, 10)
    assert abs(p.max_ratio - Fraction(3, 4)) < Fraction(1, 1000)
    assert abs(p.first_ratio - Fraction(2, 3)) < Fraction(1, 1000)
    assert abs(p.last_ratio - Fraction(2, 3)) < Fraction(1, 1000)


def test_density_mean_matches_exact_sum(a_to_12):
    p = density_profile(a_to_12, 8)
    exact = sum(Fraction(n, a_to_12(n)) for n in p.indices) / len(p.indices)
    assert abs(p.mean_ratio - float(exact)) < 1e-12


def test_density_needs_full_segment():
    with pytest.raises(HorizonExceeded):
        density_profile(sequence_a(100), 5)


def test_density_large_segment():
    a = sequence_a((12 << 18) - 3)
    p = density_profile(a, 18)
    assert p.stride == 1
    assert abs(p.mean_ratio - AVERAGE_DENSITY) < 5e-4


def test_report_format():
    assert str(IdentityReport("c_shift", 10, None)) == "c_shift, 10, PASS"
    assert str(IdentityReport("c_shift", 10, 7)) == "c_shift, 10, FAIL@7"


@pytest.mark.parametrize("name", sorted(IDENTITIES))
def test_identities_pass(name):
    report = verify_identity(name, 2000)
    assert report.passed, str(report)


def test_larger_horizons():
    assert verify_identity("a_odd_membership", 100_000).passed
    assert verify_identity("c_shift", 10_000).passed
    assert verify_identity("somos_e", 10_000).passed


def test_registry_checks_are_listed():
    names = all_checks()
    assert "registry:a" in names and "somos_e" in names
    assert verify_identity("registry:b", 1).passed


def test_unknown_identity():
    with pytest.raises(UnknownIdentity):
        verify_identity("nope", 10)
    with pytest.raises(UnknownIdentity):
        verify_identity("registry:nope", 10)
    with pytest.raises(InvalidParameters):
        verify_identity("c_shift", 0)


def test_checks_detect_failures():
    # feed a corrupted sequence through a check to see it report the right index
    from aronson import analysis
    real = analysis._seq

    def corrupt(name, count):
        seq = real(name, count)
        if name != "c":
            return seq
        # shift the tail up by one so the sequence stays increasing
        terms = seq.terms[:50] + tuple(t + 1 for t in seq.terms[50:])
        return GeneratedSequence(seq.n0, tuple(terms), seq.provenance)

    analysis._seq = corrupt
    try:
        assert verify_identity("c_shift", 100).failure == 50
    finally:
        analysis._seq = real


def test_every_registry_prefix_matches():
    for entry in REGISTRY.values():
        assert entry.check() is None, entry.name
