import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_force_sort_index, straight_line_orbit
from scramblecrack.errors import BadKeyFile, InvalidKey, NonFiniteOrbit
from scramblecrack.keystream import (
    PAPER_KEY,
    ChaoticOrbit,
    SecretKey,
    derive_keystreams,
    dump_keystreams,
    format_key,
    iterate_map,
    keystreams_from_orbit,
    load_keystream_dump,
    mask_from_index,
    parse_key,
    random_key,
    sort_to_index,
)


def test_first_iterate_of_published_key():
    orbit = iterate_map(PAPER_KEY, 1)
    # 50-digit mpmath evaluation of one map step
    assert orbit.xs[0] == pytest.approx(0.085714954035, abs=1e-12)
    assert orbit.ys[0] == pytest.approx(0.7382589855375, abs=1e-12)
    assert abs(orbit.xs[0] - 0.08571) < 1e-4 and abs(orbit.ys[0] - 0.73826) < 1e-4


def test_zero_controls_annihilate():
    orbit = iterate_map(SecretKey(0.5, 0.5, 0, 0, 0, 0), 2)
    assert list(orbit.xs) == [0.0, 0.0]
    assert list(orbit.ys) == [0.0, 0.0]


def test_orbit_matches_straight_line_reimplementation_bitwise():
    ref = straight_line_orbit(*PAPER_KEY.as_tuple(), 10)
    orbit = iterate_map(PAPER_KEY, 10)
    assert orbit.xs[9] == ref[9][0]
    assert list(zip(orbit.xs, orbit.ys)) == ref


def test_orbit_excludes_initial_point():
    orbit = iterate_map(PAPER_KEY, 3)
    assert len(orbit) == 3
    assert orbit.xs[0] != PAPER_KEY.x0


def test_divergent_key_raises():
    with pytest.raises(NonFiniteOrbit):
        iterate_map(SecretKey(0.5, 0.5, 50.0, 50.0, 50.0, 50.0), 100)


@pytest.mark.parametrize("bad", [
    (0.0, 0.5, 3, 3, 0.1, 0.1),
    (0.5, 1.0, 3, 3, 0.1, 0.1),
    (1.5, 0.5, 3, 3, 0.1, 0.1),
    (0.5, 0.5, math.inf, 3, 0.1, 0.1),
    (0.5, 0.5, 3, 3, math.nan, 0.1),
])
def test_key_validation(bad):
    with pytest.raises(InvalidKey):
        SecretKey(*bad)


def test_orbit_length_must_be_positive():
    with pytest.raises(ValueError):
        iterate_map(PAPER_KEY, 0)


@pytest.mark.parametrize("seq, expected", [
    ((0.3, 0.1, 0.2), (2, 3, 1)),
    ((0.1, 0.1, 0.05), (3, 1, 2)),
])
def test_sort_to_index_examples(seq, expected):
    assert [i + 1 for i in sort_to_index(seq)] == list(expected)


def test_sorted_input_gives_identity():
    assert list(sort_to_index(np.linspace(0, 1, 50))) == list(range(50))


@given(st.lists(st.floats(-1e6, 1e6, allow_nan=False), min_size=1, max_size=60))
def test_sort_to_index_matches_brute_force(values):
    idx = sort_to_index(values)
    assert list(idx) == brute_force_sort_index(values)
    gathered = np.asarray(values)[idx]
    assert np.all(gathered[:-1] <= gathered[1:])


def test_sort_rejects_nan():
    with pytest.raises(ValueError):
        sort_to_index([0.1, float("nan")])


def test_toy_orbit_keystreams():
    ks = keystreams_from_orbit(ChaoticOrbit(np.array([0.3, 0.1, 0.2]), np.array([0.9, 0.2, 0.5])))
    assert [i + 1 for i in ks.u] == [2, 3, 1]
    assert [i + 1 for i in ks.v] == [2, 3, 1]
    assert list(ks.k) == [2, 3, 1]


def test_single_pixel_keystreams():
    ks = derive_keystreams(PAPER_KEY, 1)
    assert list(ks.u) == [0] and list(ks.v) == [0] and list(ks.k) == [1]


def test_mask_wraps_at_257():
    # 1-based index 257 sits at 0-based 256
    u = np.arange(300)
    k = mask_from_index(u)
    assert k[256] == 1
    assert k[254] == 255 and k[255] == 0


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 3000))
def test_keystream_invariants(seed, length):
    key = random_key(np.random.default_rng(seed), length=length)
    ks = derive_keystreams(key, length)
    for perm in (ks.u, ks.v):
        assert sorted(perm) == list(range(length))
    assert np.array_equal(ks.k, (ks.u + 1) % 256)
    assert derive_keystreams(key, length) == ks


def test_key_file_roundtrip():
    text = format_key(PAPER_KEY)
    assert parse_key(text) == PAPER_KEY
    assert parse_key("0.02145\n0.3678   2.93 3.17\t0.179 0.139") == PAPER_KEY


@pytest.mark.parametrize("text", ["0.1 0.2 3 3 0.1", "0.1 0.2 3 3 0.1 x", ""])
def test_bad_key_file(text):
    with pytest.raises(BadKeyFile):
        parse_key(text)


def test_keystream_dump_layout():
    ks = derive_keystreams(PAPER_KEY, 5)
    blob = dump_keystreams(ks)
    assert blob[:4] == b"KSTM"
    assert int.from_bytes(blob[4:12], "little") == 5
    assert len(blob) == 12 + 4 * 5 + 5
    assert [int.from_bytes(blob[12 + 4 * i:16 + 4 * i], "little") for i in range(5)] == list(ks.v)
    assert blob[32:] == ks.k.tobytes()
    v, k = load_keystream_dump(blob)
    assert np.array_equal(v, ks.v) and np.array_equal(k, ks.k)
