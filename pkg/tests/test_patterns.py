import random
from fractions import Fraction

import pytest

from locodes import (CodeClass, GridFamily, PatternError, PeriodicPattern,
                     builtin_pattern, pattern_from_text, pattern_search,
                     pattern_to_text, pattern_to_torus_code, search_lattices,
                     verify)
from locodes.patterns import BUILTIN_PATTERNS, _hnf


def test_hnf_reduction():
    assert _hnf((1, 2), (2, -1)) == (5, 3, 1)  # (3,1) = (1,2) + (2,-1)
    assert _hnf((4, 0), (0, 2)) == (4, 0, 2)
    assert _hnf((3, 0), (0, 9)) == (3, 0, 9)
    with pytest.raises(PatternError):
        _hnf((1, 2), (2, 4))  # parallel


def test_hnf_spans_same_lattice():
    rng = random.Random(9)
    for _ in range(100):
        v1 = (rng.randrange(-6, 7), rng.randrange(-6, 7))
        v2 = (rng.randrange(-6, 7), rng.randrange(-6, 7))
        det = v1[0] * v2[1] - v1[1] * v2[0]
        if det == 0:
            continue
        pat = PeriodicPattern("square", v1, v2, ())
        alpha, beta, gamma = pat.hnf
        assert alpha * gamma == abs(det)
        assert pat.lattice_contains(v1) and pat.lattice_contains(v2)
        assert pat.lattice_contains((alpha, 0)) and pat.lattice_contains((beta, gamma))
        # reduction lands in the fundamental domain and is lattice-stable
        for _ in range(5):
            p = (rng.randrange(-40, 40), rng.randrange(-40, 40))
            x, y = pat._reduce(p)
            assert 0 <= x < alpha and 0 <= y < gamma
            assert pat._reduce((p[0] + v1[0] - 3 * v2[0], p[1] + v1[1] - 3 * v2[1])) == (x, y)


def test_density_exact():
    for pid, bp in BUILTIN_PATTERNS.items():
        num, den = pid.rsplit("-", 1)[-1].split("/")
        assert bp.pattern.density == Fraction(int(num), int(den))


def test_builtin_patterns_verify_on_three_scales():
    for bp in BUILTIN_PATTERNS.values():
        for scale in (1, 2, 3):
            px, py = bp.base_torus[0] * scale, bp.base_torus[1] * scale
            code = bp.pattern.to_torus_code(px, py)
            assert verify(code, bp.klass).valid, (bp.pattern_id, scale)
            assert len(code) * bp.pattern.det == len(bp.pattern.residues) * px * py


def test_hex_cover_counts():
    bp = builtin_pattern("hex-cover-1/4")
    assert len(bp.pattern.to_torus_code(8, 6)) == 12
    code = pattern_to_torus_code(bp.pattern, 16, 12)
    assert len(code) == 48


def test_tri_lld_density():
    bp = builtin_pattern("tri-lld-2/9")
    assert bp.pattern.density == Fraction(2, 9)
    assert len(bp.pattern.to_torus_code(9, 9)) == 18


def test_sq_cover_every_vertex_once():
    bp = builtin_pattern("sq-cover-1/5")
    code = bp.pattern.to_torus_code(10, 10)
    balls = code.graph.ball_masks(1)
    assert all((balls[v] & code.bits).bit_count() == 1 for v in range(code.graph.n))
    # triangle-free grid: the perfect cover is also local locating-dominating
    assert verify(code, CodeClass("lld", 1)).valid


def test_incompatible_torus_rejected():
    bp = builtin_pattern("tri-lld-2/9")
    with pytest.raises(PatternError):
        bp.pattern.to_torus_code(10, 9)  # 10 not a multiple of the x-period


def test_hex_parity_guard():
    with pytest.raises(PatternError):
        PeriodicPattern("hexagonal", (3, 0), (0, 2), ((0, 0),))


def test_residue_collision_guard():
    with pytest.raises(PatternError):
        PeriodicPattern("square", (2, 0), (0, 2), ((0, 0), (2, 0)))


def test_pattern_search_finds_perfect_cover():
    pat = pattern_search("square", (1, 2), (2, -1), 1, CodeClass("covering", 1))
    assert pat is not None
    assert pat.residues == ((0, 0),)
    assert pat.density == Fraction(1, 5)


def test_pattern_search_regenerates_frozen_patterns():
    for bp in BUILTIN_PATTERNS.values():
        if not bp.derived:
            continue
        pat = bp.pattern
        regen = pattern_search(pat.family, pat.v1, pat.v2, len(pat.residues), bp.klass)
        assert regen is not None and regen.residues == pat.residues, bp.pattern_id


def test_pattern_search_refutation_is_per_lattice():
    # the rectangular det-5 lattice has no 1-residue perfect cover
    assert pattern_search("square", (5, 0), (0, 1), 1, CodeClass("covering", 1)) is None


def test_pattern_search_det_cap():
    with pytest.raises(PatternError):
        pattern_search("square", (5, 0), (0, 5), 3, CodeClass("covering", 1))


def test_search_lattices_det11():
    pat = search_lattices("square", 11, 3, CodeClass("lid", 1))
    assert pat is not None and pat.density == Fraction(3, 11)


def test_pattern_text_roundtrip():
    for bp in BUILTIN_PATTERNS.values():
        text = pattern_to_text(bp.pattern)
        back = pattern_from_text(text)
        assert back == bp.pattern
    with pytest.raises(PatternError):
        pattern_from_text("v1 1 0\nv2 0 1\n")  # missing family line
    with pytest.raises(PatternError):
        pattern_from_text("pattern square\nv1 1 0\nv2 0 1\nbogus\n")


def test_compatible_torus_is_compatible():
    for bp in BUILTIN_PATTERNS.values():
        px, py = bp.pattern.compatible_torus()
        assert px >= 5 and py >= 5
        assert bp.pattern.lattice_contains((px, 0))
        assert bp.pattern.lattice_contains((0, py))
        if bp.pattern.family is GridFamily.HEXAGONAL:
            assert px % 2 == 0 and py % 2 == 0
