import random
from fractions import Fraction

import pytest

from locodes import (Code, CodeClass, ShareError, cycle, explicit, hamming_lift,
                     hypercube, hypercube_lid_lower_bound,
                     hypercube_lid_upper_bound, max_share_lower_bound,
                     share, share_profile, torus, window_count_bound)
from locodes.patterns import builtin_pattern


def test_share_fig2_example():
    ec = explicit("fig2-cover")
    g = ec.code.graph
    assert share(ec.code, g.index_of("v2")) == Fraction(13, 6)


def test_share_whole_cycle():
    g = cycle(5)
    full = Code(g, (1 << 5) - 1)
    for v in range(5):
        assert share(full, v) == 1


def test_share_guards():
    g = cycle(5)
    c = Code.from_indices(g, [0])
    with pytest.raises(ShareError):
        share(c, 1)  # not a codeword
    with pytest.raises(ShareError):
        share(c, 0)  # not covering


def test_hamming_lift_shares_within_case_bound():
    code = hamming_lift(2, 2)  # 8 words in F^5
    prof = share_profile(code)
    assert len(prof.shares) == 8
    assert prof.max_share <= Fraction(13, 3)  # (3n-2)/3 at n=5


def test_share_bounds_elementary():
    rng = random.Random(1)
    for g in (hypercube(4), cycle(7), torus("square", 5, 5)):
        balls = g.ball_masks(1)
        for _ in range(30):
            bits = rng.getrandbits(g.n)
            for v in range(g.n):
                if balls[v] & bits == 0:
                    bits |= 1 << v
            code = Code(g, bits)
            prof = share_profile(code)
            assert sum(prof.shares.values()) == Fraction(g.n)  # total-share identity
            for c, s in prof.shares.items():
                isz = (balls[c] & bits).bit_count()
                assert Fraction(1, isz) <= s <= g.degree(c) + 1
            # the size bound holds for the code itself
            assert len(code) >= max_share_lower_bound(code)


def test_max_share_bound_tight_on_cycle():
    g = cycle(5)
    full = Code(g, (1 << 5) - 1)
    assert max_share_lower_bound(full) == 5 == len(full)


def test_max_share_bound_on_lid6():
    g = hypercube(4)
    c6 = Code.from_labels(g, ["0000", "0100", "0010", "0111", "1111", "1101"])
    assert len(c6) >= max_share_lower_bound(c6)


def test_lid_lower_bound_values():
    assert hypercube_lid_lower_bound(3) == 4
    assert hypercube_lid_lower_bound(4) == 5
    assert hypercube_lid_lower_bound(5) == 8
    assert hypercube_lid_lower_bound(9) == 62
    with pytest.raises(ValueError):
        hypercube_lid_lower_bound(2)


def test_lid_upper_bound_values():
    assert hypercube_lid_upper_bound(2, 2) == 8
    assert hypercube_lid_upper_bound(3, 2) == 64
    assert hypercube_lid_upper_bound(2, 3) == 16
    with pytest.raises(ValueError):
        hypercube_lid_upper_bound(1, 2)
    with pytest.raises(ValueError):
        hypercube_lid_upper_bound(2, 1)


def test_window_bound_king_pattern():
    bp = builtin_pattern("king-lld-3/16")
    code = bp.pattern.to_torus_code(8, 8)
    rep = window_count_bound(code, 4, 3)
    assert rep.ok and rep.min_count >= 3
    # implied counting bound is attained by this pattern
    assert len(code) >= 3 * 64 // 16 == len(code)


def test_window_bound_failure_witness():
    g = torus("king", 8, 8)
    sparse = Code.from_indices(g, [0])
    rep = window_count_bound(sparse, 4, 3)
    assert not rep.ok
    assert rep.witness is not None
    x, y = rep.witness
    cnt = sum(1 for a in range(4) for b in range(4)
              if ((x + a) % 8) * 8 + ((y + b) % 8) in set(sparse))
    assert cnt < 3


def test_window_bound_square_perfect_cover():
    bp = builtin_pattern("sq-cover-1/5")
    code = bp.pattern.to_torus_code(10, 10)
    # brute-force oracle: every 5x5 window holds exactly 5 codewords
    member = set(code)
    for x in range(10):
        for y in range(10):
            cnt = sum(1 for a in range(5) for b in range(5)
                      if ((x + a) % 10) * 10 + ((y + b) % 10) in member)
            assert cnt == 5
    assert window_count_bound(code, 5, 5).ok


def test_window_bound_needs_torus():
    c = Code.from_indices(hypercube(3), [0])
    with pytest.raises(Exception):
        window_count_bound(c, 2, 1)


def test_share_case_bound_on_solver_codes():
    # codewords covered only by themselves share at most 1 + n/2
    from locodes import solve_min
    for n in (4, 5):
        g = hypercube(n)
        res = solve_min(g, CodeClass("lid", 1))
        prof = share_profile(res.witness)
        balls = g.ball_masks(1)
        for c, s in prof.shares.items():
            if (balls[c] & res.witness.bits).bit_count() == 1:
                assert s <= 1 + Fraction(n, 2)
