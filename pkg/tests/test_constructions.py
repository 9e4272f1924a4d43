import random

import pytest

from locodes import (Code, CodeClass, ConstructionError, dimension_lift,
                     dimension_lift_valid, direct_sum, explicit, full_space,
                     hamming, hamming_lift, hypercube, hypercube_lid_upper_bound,
                     lift_covering_to_lid, solve_min, verify)
from locodes.constructions import LinearCode

LID = CodeClass("lid", 1)
COV = CodeClass("covering", 1)


def test_hamming_s2_is_repetition_code():
    h = hamming(2)
    assert h.length == 3 and h.dimension == 1
    assert sorted(h.words()) == [0b000, 0b111]
    code = h.as_code()
    assert verify(code, COV).valid and len(code) == 2


@pytest.mark.parametrize("s", [2, 3, 4])
def test_hamming_balls_partition(s):
    h = hamming(s)
    g = hypercube(h.length)
    balls = g.ball_masks(1)
    union = 0
    total = 0
    for w in h.words():
        total += balls[w].bit_count()
        union |= balls[w]
    assert h.dimension == h.length - s
    assert total == 1 << h.length  # pairwise disjoint balls...
    assert union == (1 << g.n) - 1  # ...that exhaust the cube


def test_hamming_membership_by_parity():
    h = hamming(3)
    words = set(h.words())
    for w in range(1 << 7):
        assert h.contains(w) == (w in words)


def test_linear_code_guards():
    with pytest.raises(ConstructionError):
        LinearCode(3, [0b101, 0b101])  # dependent rows
    with pytest.raises(ConstructionError):
        LinearCode(2, [0b100])
    with pytest.raises(ConstructionError):
        hamming(1)


def test_direct_sum_examples():
    g2 = hypercube(2)
    c1 = Code.from_labels(g2, ["00", "11"])
    c2 = full_space(1)
    s = direct_sum(c1, c2)
    assert set(s.labels()) == {"000", "001", "110", "111"}
    assert len(s) == len(c1) * len(c2)

    lifted = direct_sum(hamming(2).as_code(), full_space(2))
    assert len(lifted) == 8 and lifted.graph.meta["dim"] == 5


def test_direct_sum_size_multiplicative():
    rng = random.Random(2)
    for _ in range(20):
        a = Code(hypercube(3), rng.getrandbits(8) or 1)
        b = Code(hypercube(2), rng.getrandbits(4) or 1)
        assert len(direct_sum(a, b)) == len(a) * len(b)


def test_hamming_lift_is_local_identifying():
    code = hamming_lift(2, 2)
    assert len(code) == 8 == hypercube_lid_upper_bound(2, 2)
    assert verify(code, LID).valid

    code6 = hamming_lift(2, 3)
    assert len(code6) == 16 == hypercube_lid_upper_bound(2, 3)
    assert verify(code6, LID).valid


def test_hamming_lift_codewords_covered_thrice():
    code = hamming_lift(2, 2)
    balls = code.graph.ball_masks(1)
    assert all((balls[c] & code.bits).bit_count() >= 3 for c in code)


def test_hamming_lift_linearity():
    code = hamming_lift(2, 2)
    words = list(code)
    rng = random.Random(3)
    for _ in range(50):
        a, b = rng.choice(words), rng.choice(words)
        assert (a ^ b) in code


def test_lift_covering_to_lid():
    cov3 = solve_min(hypercube(3), COV).witness  # optimal size 2
    lifted = lift_covering_to_lid(cov3)
    assert len(lifted) == 8 and lifted.graph.meta["dim"] == 5
    assert verify(lifted, LID).valid
    balls = lifted.graph.ball_masks(1)
    assert all((balls[c] & lifted.bits).bit_count() >= 3 for c in lifted)

    cov4 = solve_min(hypercube(4), COV).witness  # optimal size 4
    lifted6 = lift_covering_to_lid(cov4)
    assert len(lifted6) == 16 and verify(lifted6, LID).valid

    not_covering = Code.from_labels(hypercube(3), ["000"])
    with pytest.raises(ConstructionError):
        lift_covering_to_lid(not_covering)


def test_dimension_lift_predicate_matches_direct_check():
    g4 = hypercube(4)
    lid = CodeClass("lid", 1)
    rng = random.Random(4)
    seen = 0
    seen_false = 0
    while seen < 200:
        bits = rng.getrandbits(16) or 1
        code = Code(g4, bits)
        if not verify(code, lid).valid:
            continue
        seen += 1
        pred = dimension_lift_valid(code)
        real = verify(dimension_lift(code), lid).valid
        assert pred == real
        if not pred:
            seen_false += 1
    assert seen_false > 0  # both branches exercised


def test_dimension_lift_of_lifted_hamming():
    code = hamming_lift(2, 2)  # every codeword covered at least thrice
    assert dimension_lift_valid(code)
    lifted = dimension_lift(code)
    assert lifted.graph.meta["dim"] == 6
    assert verify(lifted, LID).valid


def test_dimension_lift_failure_witness_shape():
    # a code with an isolated codeword fails exactly at its two parity copies
    g = hypercube(2)
    code = Code.from_labels(g, ["00", "11"])
    assert verify(code, LID).valid
    assert not dimension_lift_valid(code)
    lifted = dimension_lift(code)
    rep = verify(lifted, LID)
    assert not rep.valid
    u, v = rep.failure.u, rep.failure.v
    assert u ^ v == 1 << 2  # the pair differs only in the new coordinate


def test_dimension_lift_requires_lid_input():
    g = hypercube(3)
    with pytest.raises(ConstructionError):
        dimension_lift_valid(Code.from_labels(g, ["000"]))


def test_explicit_registry():
    for cid, size in (("f2-lid", 2), ("f4-lid6", 6), ("f6-lid15", 15),
                      ("fig1-l2id", 5), ("fig2-cover", 4)):
        ec = explicit(cid)
        assert len(ec.code) == size
        assert verify(ec.code, ec.entry.klass).valid
    with pytest.raises(ConstructionError):
        explicit("nosuch")


def test_direct_sum_needs_hypercubes():
    from locodes import path
    with pytest.raises(ConstructionError):
        direct_sum(Code.from_indices(path(3), [0]), full_space(1))
