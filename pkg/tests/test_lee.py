import random
from itertools import product

import pytest

from leecodes import (
    double_sphere,
    double_sphere_size,
    lee_distance,
    lee_sphere,
    lee_weight,
)
from leecodes.errors import DimensionError, DomainError
from leecodes.lee import format_word, format_words, parse_word, parse_words


def brute_sphere(n, r):
    return {w for w in product(range(-r, r + 1), repeat=n)
            if sum(abs(x) for x in w) <= r}


def test_lee_distance_examples():
    assert lee_distance((0, 0), (2, 3)) == 5
    assert lee_distance((7, -1, 4), (7, -1, 4)) == 0
    assert lee_distance((0,), (4,), q=5) == 1


def test_lee_distance_symmetric_and_zero():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(1, 5)
        u = tuple(rng.randrange(-9, 10) for _ in range(n))
        v = tuple(rng.randrange(-9, 10) for _ in range(n))
        assert lee_distance(u, v) == lee_distance(v, u)
        assert (lee_distance(u, v) == 0) == (u == v)


def test_lee_distance_triangle_inequality():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(1, 4)
        q = rng.choice([None, 5, 8, 13])
        u, v, w = (tuple(rng.randrange(-9, 10) for _ in range(n)) for _ in range(3))
        assert lee_distance(u, w, q) <= lee_distance(u, v, q) + lee_distance(v, w, q)


def test_lee_distance_dimension_mismatch():
    with pytest.raises(DimensionError):
        lee_distance((1, 2), (1, 2, 3))


def test_lee_sphere_examples():
    assert set(lee_sphere(2, 1)) == {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}
    assert len(lee_sphere(3, 1)) == 7
    assert len(lee_sphere(2, 2)) == 13  # brute-force oracle below agrees


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_lee_sphere_matches_brute_force(n, r):
    assert set(lee_sphere(n, r)) == brute_sphere(n, r)


def test_lee_sphere_sorted_and_symmetric():
    for n, r in [(2, 2), (3, 2)]:
        sph = lee_sphere(n, r)
        assert sph == sorted(sph)
        assert len(sph) == len(set(sph))
        pts = set(sph)
        assert all(tuple(-x for x in w) in pts for w in pts)


def test_double_sphere_examples():
    assert set(double_sphere(2, 1, 1)) == {
        (0, 0), (1, 0), (-1, 0), (2, 0), (0, 1), (0, -1), (1, 1), (1, -1)
    }
    assert len(double_sphere(3, 1, 1)) == 12  # 4n
    assert set(double_sphere(1, 0, 1)) == {(0,), (1,)}


def test_double_sphere_axis_out_of_range():
    with pytest.raises(DomainError):
        double_sphere(2, 1, 3)


def test_double_sphere_size_examples():
    assert double_sphere_size(2, 1) == 8
    assert double_sphere_size(2, 2) == 2 * (2 + 1) ** 2
    assert double_sphere_size(4, 3) == len(double_sphere(4, 3, 1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_double_sphere_size_matches_enumeration_all_axes(n, r):
    for axis in range(1, n + 1):
        assert double_sphere_size(n, r) == len(double_sphere(n, r, axis))


@pytest.mark.parametrize("n,r", [(1, 1), (2, 1), (2, 3), (3, 2)])
def test_double_sphere_is_anticode_of_odd_diameter(n, r):
    pts = double_sphere(n, r, 1)
    diam = max(lee_distance(u, v) for u in pts for v in pts)
    assert diam == 2 * r + 1


def test_word_serialization_roundtrip():
    w = (3, -1, 0, 12)
    assert parse_word(format_word(w)) == w
    words = [(1, 2), (-3, 0), (0, 0)]
    text = format_words(words)
    assert text.splitlines() == ["-3,0", "0,0", "1,2"]
    assert set(parse_words(text)) == set(words)


def test_lee_weight_modular():
    assert lee_weight((4, 4), q=8) == 8
    assert lee_weight((7,), q=8) == 1
