"""Flow realization, nowhere-zero completion, and boundary enumeration."""

import random

import pytest

from surfcolor import build_map, chains, dual, errors, flows
from surfcolor.chains import Chain0, Chain1, boundary1
from surfcolor.cli import gen_bouquet, gen_grid, gen_q13

from conftest import random_map, random_nowhere_zero


def test_parity_compliance():
    m = gen_grid(3, 3)  # all degrees 4
    assert flows.is_parity_compliant(m, Chain0(m))
    m2 = build_map([[0], [1]])  # degrees 1
    assert not flows.is_parity_compliant(m2, Chain0(m2))
    d = Chain0(m2, {0: 1, 1: -1})
    assert flows.is_parity_compliant(m2, d)
    # d[v] = deg(v) passes the parity test by definition
    m3 = gen_grid(3, 3)
    d3 = Chain0(m3, {v: m3.degree(v) for v in range(m3.num_vertices)})
    assert flows.is_parity_compliant(m3, d3)


def test_flow_with_zero_boundary_is_zero_flow():
    m = gen_bouquet(2)
    f = flows.flow_with_boundary(m, Chain0(m))
    assert f is not None
    assert f.chain.is_zero()


def test_flow_with_boundary_requires_zero_sum():
    m = gen_grid(3, 3)
    with pytest.raises(errors.NotAZeroBoundary):
        flows.flow_with_boundary(m, Chain0(m, {0: 2}))


def test_flow_routes_two_units_on_grid_dual():
    g = dual(gen_grid(3, 3))  # 4-regular
    h = g.canonical_half_edges()[0]
    u, w = g.tgt[g.opp[h]], g.tgt[h]
    d = Chain0(g, {u: 2, w: -2})
    f = flows.flow_with_boundary(g, d)
    assert f is not None
    assert boundary1(f.chain) == d


def test_flow_infeasible_on_bridge():
    # path on three vertices: sending 2 units across a unit bridge fails
    m = build_map([[0], [1, 2], [3]])
    d = Chain0(m, {0: -3, 2: 3})
    assert chains.boundary0(d) == 0
    assert flows.flow_with_boundary(m, d) is None


def test_completion_of_zero_flow_on_bouquet():
    m = gen_bouquet(2)
    f0 = flows.nowhere_zero_completion(m, flows.Flow(Chain1(m)))
    assert f0.nowhere_zero
    assert boundary1(f0.chain).is_zero()


def test_completion_keeps_nowhere_zero_flows():
    m = gen_bouquet(2)
    f = flows.Flow(Chain1(m, {0: 1, 2: -1}))
    done = flows.nowhere_zero_completion(m, f)
    assert done.chain == f.chain


def test_completion_rejects_odd_zero_subgraph():
    m = build_map([[0], [1]])
    with pytest.raises(errors.ParityViolation):
        flows.nowhere_zero_completion(m, flows.Flow(Chain1(m)))


def test_eulerian_orientation_on_even_maps(corpus_map):
    m = corpus_map
    if any(m.degree(v) % 2 for v in range(m.num_vertices)):
        pytest.skip("needs an all-even-degree map")
    f0 = flows.nowhere_zero_flow_with_boundary(m, Chain0(m))
    assert f0 is not None
    assert f0.nowhere_zero
    assert boundary1(f0.chain).is_zero()


def test_nowhere_zero_flow_none_when_parity_fails():
    m = build_map([[0], [1]])
    assert flows.nowhere_zero_flow_with_boundary(m, Chain0(m)) is None


def test_nowhere_zero_flow_on_q13_dual():
    g = dual(gen_q13())
    f0 = flows.nowhere_zero_flow_with_boundary(g, Chain0(g))
    assert f0 is not None and f0.nowhere_zero


def test_realized_boundaries_match_exactly():
    rng = random.Random(53)
    done = 0
    while done < 25:
        m = random_map(rng)
        f = random_nowhere_zero(rng, m)
        d = boundary1(f)
        f1 = flows.flow_with_boundary(m, d)
        assert f1 is not None, "a realizable boundary must be realized"
        assert boundary1(f1.chain) == d
        nz = flows.nowhere_zero_flow_with_boundary(m, d)
        assert nz is not None
        assert nz.nowhere_zero
        assert boundary1(nz.chain) == d
        done += 1


def test_relevant_boundaries_quadrangulation_dual():
    g = dual(gen_grid(3, 3))
    bs = list(flows.relevant_boundaries(g, 3))
    assert len(bs) == 1
    assert bs[0].chain.is_zero()


def test_relevant_boundaries_degree_three():
    # bouquet of one loop plus a pendant edge gives odd degrees 1 and 3;
    # build the theta graph instead: two vertices, three parallel edges
    m = build_map([[0, 2, 4], [1, 3, 5]])
    # degrees are 3: candidates at m=3 are {-3, 3}
    from surfcolor.surface_map import face_candidates

    assert face_candidates(3, 3) == [-3, 3]
    bs = list(flows.relevant_boundaries(m, 3))
    assert [sorted(b.chain.items()) for b in bs] == [
        [(0, -3), (1, 3)],
        [(0, 3), (1, -3)],
    ]


def test_relevant_boundaries_two_hexagon_vertices():
    # two degree-6 vertices (six parallel edges): candidates {-6, 0, 6}
    # each, and the zero-sum selections are (0,0), (6,-6), (-6,6)
    m = build_map([[1, 3, 5, 7, 9, 11], [0, 2, 4, 6, 8, 10]])
    assert sorted(m.degree(v) for v in range(2)) == [6, 6]
    bs = list(flows.relevant_boundaries(m, 3))
    assert len(bs) == 3
    sums = [sorted(c for _, c in b.chain.items()) for b in bs]
    assert sums.count([]) == 1  # the zero boundary
    assert sums.count([-6, 6]) == 2


def test_boundary_stream_is_sorted_and_bounded(corpus_map):
    from surfcolor.surface_map import face_profile

    m = corpus_map
    d = dual(m)
    prof = face_profile(d, 3)  # faces of the dual are vertices of m
    bs = list(flows.relevant_boundaries(m, 3))
    assert len(bs) <= prof.q_star
    keys = [tuple(b.chain[v] for v in range(m.num_vertices)) for b in bs]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    for b in bs:
        assert b.chain.norm() + 1 <= prof.b_star
        assert flows.is_parity_compliant(m, b.chain)


def test_flow_boundaries_are_relevant(corpus_map):
    rng = random.Random(67)
    m = corpus_map
    if m.num_edges == 0:
        pytest.skip("needs edges")
    for _ in range(5):
        f = random_nowhere_zero(rng, m)
        d = boundary1(f)
        for v in range(m.num_vertices):
            assert abs(d[v]) <= m.degree(v)
            assert (d[v] - m.degree(v)) % 2 == 0
