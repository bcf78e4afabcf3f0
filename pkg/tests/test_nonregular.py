from itertools import product

import pytest

from leecodes import (
    ShiftedWindowTiling,
    code_from_window_tiling,
    component_index_n3,
    construct_double_cross_hom,
    half_kernel_basis,
    lee_distance,
    shifted_tiling_n3,
    verify_cover,
    verify_nonregular,
)
from leecodes.errors import DomainError, StructuralError, WindowError
from leecodes.nonregular import (
    K1,
    K2,
    HalfWord,
    double_cross_support,
    apply_hom_half,
)
from leecodes.tiling import Homomorphism


def half_kernel_centers(bound):
    """Brute-force kernel points of the n=3 map, doubled-first coordinates."""
    out = []
    for d1 in range(-2 * bound, 2 * bound + 1):
        for x2 in range(-bound, bound + 1):
            for x3 in range(-bound, bound + 1):
                if (3 * d1 + x2 + 13 * x3) % 24 == 0:
                    out.append((d1, x2, x3))
    return out


def test_double_cross_support_size():
    for n in (2, 3, 5, 6):
        W = double_cross_support(n)
        assert len(W) == 8 * n
        assert len(set(W)) == 8 * n


def test_construct_double_cross_hom_n3():
    hom = construct_double_cross_hom(3)
    assert hom.group.factors == (24,)
    assert hom.half_image == (3,)
    assert hom.images == ((6,), (1,), (13,))


def test_construct_double_cross_hom_n6():
    hom = construct_double_cross_hom(6)
    assert hom.group.factors == (48,)
    assert hom.half_image == (3,)
    assert hom.images == ((6,), (18,), (1,), (13,), (25,), (37,))


def test_construct_double_cross_hom_rejects():
    with pytest.raises(DomainError):
        construct_double_cross_hom(4)  # power of two
    with pytest.raises(DomainError):
        construct_double_cross_hom(1)


@pytest.mark.parametrize(
    "n", [n for n in range(2, 31) if n & (n - 1) != 0]
)
def test_verify_nonregular_all_small_n(n):
    assert verify_nonregular(construct_double_cross_hom(n), n)


def test_verify_nonregular_negative():
    hom = construct_double_cross_hom(3)
    broken = Homomorphism(hom.group, ((6,), (2,), (13,)),
                          half_image=hom.half_image)
    assert not verify_nonregular(broken, 3)
    no_half = Homomorphism(hom.group, hom.images)
    with pytest.raises(StructuralError):
        verify_nonregular(no_half, 3)


def test_half_kernel_basis():
    kb = half_kernel_basis()
    assert kb.det_abs == 12
    assert [hw.doubled for hw in kb.rows] == [(-1, 3, 0), (0, 24, 0), (0, 13, -1)]
    hom = construct_double_cross_hom(3)
    for hw in kb.rows:
        assert apply_hom_half(hom, hw.doubled) == (0,)


def test_basis_spans_kernel_in_box():
    # every brute-force kernel point is an integer combination of the rows
    kb = half_kernel_basis()
    rows = [hw.doubled for hw in kb.rows]
    for p in half_kernel_centers(6):
        # solve p = a*rows[0] + b*rows[1] + c*rows[2] over Z
        a = -p[0]
        c = -p[2]
        rem = p[1] - a * rows[0][1] - c * rows[2][1]
        assert rem % 24 == 0
    assert len(half_kernel_centers(6)) > 0


def test_component_rule_examples():
    assert component_index_n3((0, 0, 0)) == (K1, None)
    assert component_index_n3((0, 9, 0)) == (K2, 1)
    assert component_index_n3((0, 7, -1)) == (K1, None)
    assert component_index_n3((0, 2, 0)) == (K2, 0)
    assert component_index_n3((0, -3, 0)) == (K2, -1)


def test_component_rule_ignores_first_axis():
    for x1 in (-5, 0, 7):
        for x2, x3 in [(0, 0), (4, 5), (-2, 1)]:
            assert component_index_n3((x1, x2, x3)) == component_index_n3((0, x2, x3))


def test_component_rule_matches_center_parity():
    # unshifted tile centers: K1 exactly when the half coordinate is integral
    # with even doubled part
    for d1, x2, x3 in half_kernel_centers(12):
        kind, _m = component_index_n3((0, x2, x3))
        assert (kind == K1) == (d1 % 2 == 0)


def flood_fill_components(cells):
    """Connected components of a cell set under 4-adjacency."""
    todo = set(cells)
    comps = []
    while todo:
        seed = todo.pop()
        comp = {seed}
        frontier = [seed]
        while frontier:
            x, y = frontier.pop()
            for nb in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
                if nb in todo:
                    todo.remove(nb)
                    comp.add(nb)
                    frontier.append(nb)
        comps.append(comp)
    return comps


@pytest.mark.parametrize("R", [10, 20, 30])
def test_component_rule_equals_flood_fill(R):
    k2_cells = [
        (x2, x3)
        for x2 in range(-R, R + 1)
        for x3 in range(-R, R + 1)
        if component_index_n3((0, x2, x3))[0] == K2
    ]
    by_rule = {}
    for cell in k2_cells:
        by_rule.setdefault(component_index_n3((0,) + cell)[1], set()).add(cell)
    comps = flood_fill_components(k2_cells)
    assert sorted(map(sorted, comps)) == sorted(
        sorted(v) for v in by_rule.values()
    )


def test_shifted_tiling_basic():
    t = shifted_tiling_n3("000", 24)
    assert t.R == 24 and t.bits == "000"
    assert len(t.centers) == len(set(t.centers))
    assert all(isinstance(x, int) for c in t.centers for x in c)
    assert verify_cover(t)


def test_shifted_tiling_families_distinct():
    seen = {}
    for bits in ["".join(p) for p in product("01", repeat=3)]:
        t = shifted_tiling_n3(bits, 24)
        assert verify_cover(t)
        key = t.centers
        assert key not in seen, f"{bits} collides with {seen.get(key)}"
        seen[key] = bits


def test_shifted_tiling_window_too_small():
    with pytest.raises(WindowError):
        shifted_tiling_n3("101", 10)


def test_shifted_tiling_rejects_bad_bits():
    with pytest.raises(DomainError):
        shifted_tiling_n3("10x", 30)


def test_code_from_window_tiling():
    t = shifted_tiling_n3("101", 24)
    cws = code_from_window_tiling(t)
    assert len(cws) == len(t.centers)
    from leecodes import lee_weight
    assert all(lee_weight(c) % 2 == 0 for c in cws)
    # codewords deep inside the window keep pairwise distance >= 4
    inner = [c for c in cws if all(-20 <= x <= 20 for x in c)]
    worst = min(
        lee_distance(u, v)
        for i, u in enumerate(inner) for v in inner[i + 1:]
    )
    assert worst == 4


def test_shifted_tiling_json_roundtrip():
    t = shifted_tiling_n3("01", 20)
    d = t.to_dict()
    assert d["R"] == 20 and d["bits"] == "01"
    assert tuple(tuple(c) for c in d["centers"]) == t.centers


def test_half_word_doubled():
    hw = HalfWord(-1, (3, 0))
    assert hw.doubled == (-1, 3, 0)
