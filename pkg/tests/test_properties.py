"""Invariants over seeded random gentle algebras, driven by hypothesis."""

import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from gentle_ext.algebra import random_gentle
from gentle_ext.ext import ext1_dim, ext_dim, ext_sequence
from gentle_ext.formats import format_algebra, parse_algebra
from gentle_ext.fuzz import check_band, check_omega_cycles, check_periodicity, check_syzygy_shape, enumerate_bands
from gentle_ext.homology import cosyzygy, proj_dim, syzygy
from gentle_ext.modules import band_module, string_module
from gentle_ext.oracle import (
    cosyzygy_representation,
    ext_dims_oracle,
    kernel_representation,
    proj_dim_oracle,
    shuffle_basis,
    to_representation,
)
from gentle_ext.strings import canonical_form, enumerate_strings, invert
from gentle_ext.triangulation import algebra_from_triangulation, period3_check, random_disk_triangulation

seeds = st.integers(min_value=0, max_value=10**6)
fast = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def _pick(seed, n=1, length=4):
    alg = random_gentle(seed, 8, 12)
    rng = random.Random(seed)
    words = enumerate_strings(alg, length)
    return alg, [string_module(alg, rng.choice(words)) for _ in range(n)]


def _nz(d):
    return {k: v for k, v in d.items() if v}


@fast
@given(seeds)
def test_random_algebras_round_trip(seed):
    alg = random_gentle(seed, 8, 12)
    assert parse_algebra(format_algebra(alg)) == alg
    assert alg.opposite().opposite() == alg


@fast
@given(seeds)
def test_canonical_form_is_inversion_invariant(seed):
    alg, _ = _pick(seed, 0)
    for w in enumerate_strings(alg, 3):
        assert canonical_form(invert(w)) == canonical_form(w) == w


@fast
@given(seeds)
def test_ext_matches_oracle(seed):
    alg, (m, n) = _pick(seed, 2)
    combinatorial = [ext_dim(alg, m, n, d) for d in range(1, 6)]
    assert combinatorial == ext_dims_oracle(alg, m, n, 5), format_algebra(alg)


@fast
@given(seeds)
def test_syzygy_and_cosyzygy_dims_match_oracle(seed):
    alg, (m,) = _pick(seed)
    rep = to_representation(alg, m)
    assert syzygy(alg, m).dim_vector() == _nz(kernel_representation(alg, rep).dims)
    assert cosyzygy(alg, m).dim_vector() == _nz(cosyzygy_representation(alg, rep).dims)


@fast
@given(seeds)
def test_syzygy_shape(seed):
    alg, (m,) = _pick(seed)
    assert check_syzygy_shape(alg, m) is None


@fast
@given(seeds)
def test_omega_returns_along_cycles(seed):
    assert check_omega_cycles(random_gentle(seed, 8, 12)) == []


@fast
@given(seeds)
def test_periodic_classification(seed):
    alg, (m, n) = _pick(seed, 2)
    assert check_periodicity(alg, m, n) is None


@fast
@given(seeds)
def test_sequence_reproduces_values(seed):
    alg, (m, n) = _pick(seed, 2)
    seq = ext_sequence(alg, m, n)
    assert seq.values(10) == [ext_dim(alg, m, n, d) for d in range(1, 11)]


@fast
@given(seeds)
def test_projective_dimension_matches_oracle(seed):
    alg, (m,) = _pick(seed)
    pd = proj_dim(alg, m)
    got = proj_dim_oracle(alg, to_representation(alg, m), 8)
    assert got == (None if pd > 8 else pd)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_quasi_simple_bands(seed):
    alg = random_gentle(seed, 6, 9)
    for band in enumerate_bands(alg, 4)[:4]:
        assert check_band(alg, band_module(alg, band)) is None


@fast
@given(seeds, st.integers(0, 1000))
def test_basis_change_does_not_change_ext1(seed, shuffle):
    alg, (m, n) = _pick(seed, 2, 3)
    rm = shuffle_basis(alg, to_representation(alg, m), shuffle)
    assert ext_dims_oracle(alg, rm, n, 1) == [ext1_dim(alg, m, n)]


@settings(max_examples=20, deadline=None)
@given(seeds)
def test_disk_triangulations_have_period_three(seed):
    tri = random_disk_triangulation(seed)
    alg = algebra_from_triangulation(tri)
    assert all(len(c) == 3 for c in alg.relation_cycles)
    rng = random.Random(seed)
    words = enumerate_strings(alg, 3)
    m, n = string_module(alg, rng.choice(words)), string_module(alg, rng.choice(words))
    assert period3_check(alg, m, n).ok
