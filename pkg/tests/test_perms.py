import pytest
from hypothesis import given, strategies as st

from permcat.perms import (
    Permutation, all_permutations, block_permutation, block_sum,
    block_transposition, interleave_two,
)


perms = st.integers(min_value=0, max_value=6).flatmap(
    lambda n: st.permutations(list(range(n))).map(lambda im: Permutation(tuple(im))))


def test_identity_and_call():
    p = Permutation.identity(4)
    assert p.is_identity()
    assert [p(i) for i in range(4)] == [0, 1, 2, 3]


def test_one_line_round_trip():
    p = Permutation.from_one_line((2, 3, 1))
    assert p.one_line() == (2, 3, 1)
    assert p(0) == 1 and p(1) == 2 and p(2) == 0


def test_then_order():
    # (p then q)(i) = q(p(i))
    p = Permutation.from_one_line((2, 1, 3))
    q = Permutation.from_one_line((3, 2, 1))
    assert p.then(q).one_line() == tuple(q(p(i)) + 1 for i in range(3))


@given(perms)
def test_inverse(p):
    assert p.then(p.inverse()).is_identity()
    assert p.inverse().then(p).is_identity()


@given(perms, perms)
def test_block_sum_sizes(p, q):
    s = p + q
    assert s.size == p.size + q.size
    for i in range(p.size):
        assert s(i) == p(i)
    for j in range(q.size):
        assert s(p.size + j) == p.size + q(j)


def test_permute_places_items_at_image():
    p = Permutation.from_one_line((2, 3, 1))
    # item at source i lands at position p(i)
    assert p.permute(["a", "b", "c"]) == ["c", "a", "b"]


def test_block_transposition():
    t = block_transposition(2, 3)
    assert t.permute([1, 2, 3, 4, 5]) == [3, 4, 5, 1, 2]
    assert block_transposition(0, 3).is_identity()


def test_block_permutation_expands_blocks():
    # blocks of sizes 2,1 swapped: elements 0,1 move after element 2
    bp = Permutation.from_one_line((2, 1))
    p = block_permutation([2, 1], bp)
    assert p.permute(["a", "b", "c"]) == ["c", "a", "b"]


def test_block_permutation_identity_blocks():
    bp = Permutation.identity(3)
    assert block_permutation([2, 0, 3], bp).is_identity()


def test_interleave_two():
    p = interleave_two(2, 2)
    # sources: A1 A2 B1 B2 -> A1 B1 A2 B2
    assert p.permute(["A1", "A2", "B1", "B2"]) == ["A1", "B1", "A2", "B2"]


def test_all_permutations_count_and_determinism():
    ps = list(all_permutations(3))
    assert len(ps) == 6
    assert ps == list(all_permutations(3))
    assert ps[0].is_identity()


@given(st.lists(st.integers(min_value=0, max_value=3), min_size=1, max_size=4),
       st.data())
def test_block_permutation_vs_manual(sizes, data):
    n = len(sizes)
    bp_im = data.draw(st.permutations(list(range(n))))
    bp = Permutation(tuple(bp_im))
    p = block_permutation(sizes, bp)
    # build the expected item shuffle by blocks
    items = []
    for bi, sz in enumerate(sizes):
        items.extend((bi, k) for k in range(sz))
    got = p.permute(items)
    expected_order = sorted(range(n), key=lambda bi: bp(bi))
    expected = []
    for bi in expected_order:
        expected.extend((bi, k) for k in range(sizes[bi]))
    assert got == expected
