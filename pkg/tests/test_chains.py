import numpy as np
import pytest

from isoperim import (
    MarkovChain,
    WeightedGraph,
    chain_from_directed,
    chain_from_matrix,
    chain_from_undirected,
    is_irreducible,
    is_reversible,
    lazy_transform,
    stationary_distribution,
)
from isoperim.chains import _power_iteration
from isoperim.errors import (
    DeltaOutOfRange,
    DisconnectedGraph,
    IsolatedVertex,
    NegativeWeight,
    NotIrreducible,
    NotStronglyConnected,
    SinkVertex,
)


def test_cycle_chain(cycle4):
    assert np.allclose(cycle4.pi, 0.25)
    for i in range(4):
        assert cycle4.P[i, (i + 1) % 4] == 0.5
        assert cycle4.P[i, (i - 1) % 4] == 0.5


def test_single_edge(two_state):
    assert np.array_equal(two_state.P, [[0.0, 1.0], [1.0, 0.0]])
    assert np.array_equal(two_state.pi, [0.5, 0.5])


def test_path_pi_proportional_to_degree():
    g = WeightedGraph(n=3, edges=((0, 1, 1.0), (1, 2, 1.0)))
    c = chain_from_undirected(g)
    assert np.allclose(c.pi, [0.25, 0.5, 0.25])
    assert c.origin == "undirected-graph"


def test_undirected_is_reversible_and_stationary_fixed_point():
    rng = np.random.default_rng(7)
    for _ in range(10):
        n = rng.integers(3, 9)
        edges = [(u, v, float(rng.random() + 0.05)) for u in range(n) for v in range(u + 1, n)]
        c = chain_from_undirected(WeightedGraph(n=int(n), edges=tuple(edges)))
        assert is_reversible(c, tol=1e-10)
        assert np.max(np.abs(stationary_distribution(c.P) - c.pi)) < 1e-10
        assert np.max(np.abs(c.P.sum(axis=1) - 1)) < 1e-12


def test_directed_cycle_pi_uniform(directed_3cycle):
    assert np.allclose(directed_3cycle.pi, 1 / 3)
    assert not is_reversible(directed_3cycle)


def test_directed_triangle_with_reverse_edge():
    edges = ((0, 1, 1.0), (1, 2, 1.0), (2, 0, 1.0), (1, 0, 1.0))
    c = chain_from_directed(WeightedGraph(n=3, edges=edges, directed=True))
    assert np.allclose(c.pi, [0.4, 0.4, 0.2], atol=1e-12)


def test_stationary_two_state_asymmetric():
    P = np.array([[0.9, 0.1], [0.5, 0.5]])
    pi = stationary_distribution(P)
    assert np.allclose(pi, [5 / 6, 1 / 6], atol=1e-12)


def test_stationary_doubly_stochastic_uniform():
    P = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0.0]])
    assert np.allclose(stationary_distribution(P), 1 / 3)


def test_power_iteration_agrees_with_direct():
    P = np.array([[0.9, 0.1], [0.5, 0.5]])
    pi = _power_iteration(P)
    assert pi is not None
    assert np.allclose(pi, [5 / 6, 1 / 6], atol=1e-10)


def test_is_irreducible_cases():
    block = np.array([[0.5, 0.5, 0, 0], [0.5, 0.5, 0, 0], [0, 0, 0.5, 0.5], [0, 0, 0.5, 0.5]])
    assert not is_irreducible(block)
    perm = np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0.0]])
    assert is_irreducible(perm)
    assert not is_irreducible(np.eye(2))


def test_stationary_requires_irreducible():
    with pytest.raises(NotIrreducible):
        stationary_distribution(np.eye(3))


def test_lazy_transform_two_state(two_state):
    lazy = lazy_transform(two_state, 0.5)
    assert np.allclose(lazy.P, 0.5)
    assert lazy.pi is two_state.pi
    assert is_reversible(lazy)


def test_lazy_identity_delta_one(two_state):
    lazy = lazy_transform(two_state, 1.0)
    assert np.array_equal(lazy.P, two_state.P)


def test_lazy_delta_out_of_range(two_state):
    for bad in (0.0, -0.2, 1.5):
        with pytest.raises(DeltaOutOfRange):
            lazy_transform(two_state, bad)


def test_graph_errors():
    with pytest.raises(DisconnectedGraph):
        chain_from_undirected(WeightedGraph(n=4, edges=((0, 1, 1.0), (2, 3, 1.0))))
    with pytest.raises(IsolatedVertex):
        chain_from_undirected(WeightedGraph(n=3, edges=((0, 1, 1.0),)))
    with pytest.raises(SinkVertex):
        chain_from_directed(WeightedGraph(n=2, edges=((0, 1, 1.0),), directed=True))
    with pytest.raises(NotStronglyConnected):
        chain_from_directed(
            WeightedGraph(n=3, edges=((0, 1, 1.0), (1, 0, 1.0), (1, 2, 1.0), (2, 2, 1.0)), directed=True, allow_self_loops=True)
        )
    with pytest.raises(NegativeWeight):
        WeightedGraph(n=2, edges=((0, 1, -1.0),))
    with pytest.raises(ValueError):
        WeightedGraph(n=2, edges=((1, 0, 1.0),))  # undirected stored u < v
    with pytest.raises(ValueError):
        WeightedGraph(n=2, edges=((0, 0, 1.0),))  # self-loop without the flag


def test_chain_validation_rejects_bad_matrices():
    with pytest.raises(ValueError):
        chain_from_matrix(np.array([[0.5, 0.4], [0.5, 0.5]]))  # rows do not sum to 1
    with pytest.raises(NotIrreducible):
        MarkovChain(n=2, P=np.eye(2), pi=np.array([0.5, 0.5]))


def test_self_loops_contribute_to_degree():
    g = WeightedGraph(n=2, edges=((0, 0, 1.0), (0, 1, 1.0)), allow_self_loops=True)
    c = chain_from_undirected(g)
    assert np.allclose(c.P[0], [0.5, 0.5])
    assert np.allclose(c.pi, [2 / 3, 1 / 3])
    assert is_reversible(c)
