"""Differential tests: the compiled backend must match the pure reference."""

import pytest

from thompson_f.kernels import ALL_BACKENDS, BACKEND, pykernel

from conftest import random_element

compiled = pytest.mark.skipif(
    "cython" not in ALL_BACKENDS,
    reason="compiled kernel not built; pure backend only",
)


def test_some_backend_selected():
    assert BACKEND in ("cython", "pure")
    assert "pure" in ALL_BACKENDS


@compiled
def test_constants_agree():
    ck = ALL_BACKENDS["cython"]
    assert ck.GENERATOR_DIAGRAMS == pykernel.GENERATOR_DIAGRAMS
    assert ck.WEIGHT_TABLE == pykernel.WEIGHT_TABLE
    assert (ck.X0, ck.X0_INV, ck.X1, ck.X1_INV) == (0, 1, 2, 3)
    assert (ck.L0, ck.LL, ck.I0, ck.IR, ck.RI, ck.R0, ck.RNI) == tuple(range(7))


@compiled
def test_validate_tree_agrees():
    ck = ALL_BACKENDS["cython"]
    cases = ["0", "100", "10100", "11000", "", "1", "01", "10", "1100", "abc",
             "110100100", "1010100", "00", "111000010"]
    for s in cases:
        assert ck.validate_tree(s) == pykernel.validate_tree(s), s


@compiled
def test_elementwise_operations_agree(rng):
    ck = ALL_BACKENDS["cython"]
    for _ in range(800):
        w = random_element(rng, 16)
        n, p = w.neg_bits, w.pos_bits
        assert ck.classify(n) == pykernel.classify(n)
        assert ck.classify(p) == pykernel.classify(p)
        assert ck.is_reduced(n, p) == pykernel.is_reduced(n, p)
        assert ck.fordham_length(n, p) == pykernel.fordham_length(n, p)
        for g in range(4):
            assert ck.condition_holds(n, g) == pykernel.condition_holds(n, g)
            assert ck.right_multiply(n, p, g) == pykernel.right_multiply(n, p, g)
            if ck.condition_holds(n, g):
                assert ck.rotate(n, g) == pykernel.rotate(n, g)


@compiled
def test_multiply_and_union_agree(rng):
    ck = ALL_BACKENDS["cython"]
    for _ in range(800):
        a = random_element(rng, 12)
        b = random_element(rng, 12)
        assert ck.union_trees(a.neg_bits, b.pos_bits) == pykernel.union_trees(
            a.neg_bits, b.pos_bits
        )
        assert ck.multiply(
            a.neg_bits, a.pos_bits, b.neg_bits, b.pos_bits
        ) == pykernel.multiply(a.neg_bits, a.pos_bits, b.neg_bits, b.pos_bits)


@compiled
def test_reduce_pair_agrees_on_unreduced_input(rng):
    from test_reduce import _blow_up

    ck = ALL_BACKENDS["cython"]
    for _ in range(800):
        grown = _blow_up(random_element(rng, 10), rng, 1 + rng.randrange(4))
        assert ck.reduce_pair(grown.neg_bits, grown.pos_bits) == \
            pykernel.reduce_pair(grown.neg_bits, grown.pos_bits)


def _mini_bfs_spheres(impl, radius):
    seen = {("0", "0")}
    frontier = [("0", "0")]
    sizes = [1]
    for _ in range(radius):
        nxt = []
        for neg, pos in frontier:
            for g in range(4):
                res = impl.right_multiply(neg, pos, g)
                if res not in seen:
                    seen.add(res)
                    nxt.append(res)
        sizes.append(len(nxt))
        frontier = nxt
    return tuple(sizes)


@compiled
def test_mini_bfs_agrees():
    """Sphere sizes of B(5) are identical under both backends."""
    assert _mini_bfs_spheres(ALL_BACKENDS["cython"], 5) == \
        _mini_bfs_spheres(pykernel, 5)
