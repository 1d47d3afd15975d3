import pytest

from thompson_f.errors import CapacityError
from thompson_f.fordham import length
from thompson_f.geodesy import (
    bfs_ball,
    distance,
    fellow_traveller_demo,
    greedy_geodesic,
    synchronous_distance,
)
from thompson_f.group_ops import Generator, evaluate, right_multiply_generator
from thompson_f.seesaw import SeesawParams, seesaw_word
from thompson_f.trees import IDENTITY

from conftest import random_element

SPHERES = (1, 4, 12, 36, 108, 314, 906, 2576)


@pytest.fixture(scope="module")
def ball7():
    return bfs_ball(7)


def test_sphere_and_ball_sizes(ball7):
    assert ball7.sphere_sizes == SPHERES
    assert ball7.ball_sizes == tuple(
        sum(SPHERES[: i + 1]) for i in range(len(SPHERES))
    )


def test_ball_contains_and_distance(ball7):
    assert IDENTITY in ball7
    assert ball7.distance(IDENTITY) == 0
    x0 = evaluate([Generator.X0])
    assert ball7.distance(x0) == 1
    far = evaluate([Generator.X0] * 8)
    assert far not in ball7


def test_layers_are_parity_bipartite(ball7):
    """Every edge of the Cayley graph joins consecutive spheres."""
    for n, sphere in enumerate(ball7.spheres):
        if n >= ball7.radius:
            break
        for pair in sphere:
            for g in Generator:
                d = ball7.distances.get(right_multiply_generator(pair, g).text())
                if d is not None:
                    assert d in (n - 1, n + 1)


def test_capacity_error():
    with pytest.raises(CapacityError):
        bfs_ball(6, capacity=100)


def test_capacity_env_override(monkeypatch):
    monkeypatch.setenv("THOMPSON_F_BFS_CAPACITY", "50")
    with pytest.raises(CapacityError):
        bfs_ball(5)
    monkeypatch.setenv("THOMPSON_F_BFS_CAPACITY", "10000")
    assert bfs_ball(5).sphere_sizes == SPHERES[:6]


def test_distance_is_fordham_of_quotient(ball7):
    x0 = evaluate([Generator.X0])
    assert distance(x0, x0) == 0
    assert distance(IDENTITY, x0) == 1
    w = evaluate([Generator.X1, Generator.X0])
    assert distance(w, w) == 0
    assert distance(w, IDENTITY) == length(w)


def test_greedy_geodesic_realizes_the_metric(rng):
    for _ in range(10000):
        w = random_element(rng, 40)
        path = greedy_geodesic(w)
        assert len(path) == length(w)
        assert evaluate(path.word) == w


def test_geodesic_vertices_descend(rng):
    for _ in range(200):
        w = random_element(rng, 25)
        elements = greedy_geodesic(w).elements()
        assert elements[0] == IDENTITY
        assert elements[-1] == w
        for t, e in enumerate(elements):
            assert length(e) == t


def test_synchronous_distance_same_path_is_zero():
    w = evaluate([Generator.X1, Generator.X0, Generator.X0])
    p = greedy_geodesic(w)
    assert synchronous_distance(p, p) == 0


def test_synchronous_distance_endpoint_wait():
    a = greedy_geodesic(evaluate([Generator.X0] * 3))
    b = greedy_geodesic(IDENTITY)
    assert synchronous_distance(a, b) == 3


def test_fellow_traveller_gap_grows():
    words = [seesaw_word(SeesawParams(k, k)) for k in range(2, 7)]
    gaps = [r.gap for r in fellow_traveller_demo(words)]
    assert gaps == sorted(gaps)
    assert len(set(gaps)) == len(gaps)
    assert gaps[0] >= 4  # at least 2s with s = 2
