"""Combinatorial map construction, duality, face profiles, and the
SURF-MAP serialization."""

import pytest

from surfcolor import build_map, chains, dual, errors, face_profile, is_isomorphic
from surfcolor.cli import gen_bouquet, gen_grid
from surfcolor.surface_map import load_surfmap, save_surfmap


def test_bouquet2_single_face_orbit():
    m = gen_bouquet(2)
    assert m.num_vertices == 1
    assert m.num_edges == 2
    assert m.num_faces == 1
    assert m.euler_genus == 2
    # with a=0, ~a=1, b=2, ~b=3 the single orbit is (a, ~b, ~a, b)
    assert m.faces[0] == [0, 3, 1, 2]


def test_one_edge_sphere():
    m = build_map([[0], [1]])
    assert (m.num_vertices, m.num_edges, m.num_faces) == (2, 1, 1)
    assert m.face_lengths() == [2]
    assert m.euler_genus == 0


def test_opp_fixed_point_rejected():
    with pytest.raises(errors.NotInvolution):
        build_map([[0, 1]], opp=[0, 1])


def test_opp_not_involution_rejected():
    with pytest.raises(errors.NotInvolution):
        build_map([[0, 1, 2, 3]], opp=[1, 2, 3, 0])


def test_duplicate_half_edge_rejected():
    with pytest.raises(errors.DanglingHalfEdge):
        build_map([[0, 0], [1]])


def test_missing_half_edge_rejected():
    with pytest.raises(errors.DanglingHalfEdge):
        build_map([[0], [3]])


def test_disconnected_rejected():
    # two vertices with a loop each, no connecting edge
    with pytest.raises(errors.Disconnected):
        build_map([[0, 1], [2, 3]])


def test_dual_of_bouquet2():
    d = dual(gen_bouquet(2))
    assert (d.num_vertices, d.num_edges, d.num_faces) == (1, 2, 1)
    assert d.euler_genus == 2


def test_dual_of_grid_is_4_regular():
    d = dual(gen_grid(3, 3))
    assert d.num_vertices == 9
    assert all(d.degree(v) == 4 for v in range(d.num_vertices))


def test_dual_dual_roundtrip():
    m = gen_grid(3, 3)
    assert is_isomorphic(dual(dual(m)), m)


def test_dual_preserves_genus_and_swaps_roles(corpus_map):
    m = corpus_map
    d = dual(m)
    assert d.euler_genus == m.euler_genus
    assert d.num_vertices == m.num_faces
    assert d.num_faces == m.num_vertices
    assert all(d.tgt[h] == m.left[h] for h in m.half_edges())
    assert all(d.left[h] == m.tgt[h] for h in m.half_edges())
    assert is_isomorphic(dual(d), m)


def test_face_lengths_equal_dual_degrees(corpus_map):
    m = corpus_map
    d = dual(m)
    assert sorted(m.face_lengths()) == sorted(d.degree(v) for v in range(d.num_vertices))


def test_face_boundaries_sum_to_zero(corpus_map):
    m = corpus_map
    total = chains.Chain1(m)
    for x in range(m.num_faces):
        total = total + chains.face_boundary(m, x)
    assert total.is_zero()
    total = chains.Chain1(m)
    for v in range(m.num_vertices):
        total = total + chains.vertex_coboundary(m, v)
    assert total.is_zero()


def test_face_profile_quadrangulation():
    prof = face_profile(gen_grid(3, 3), 3)
    assert prof.q_star == 1
    assert prof.b_star == 1


def test_face_profile_with_hexagon():
    # one face of length 6, m = 3: candidates {-6, 0, 6}
    from surfcolor.surface_map import b_of, q_of

    assert q_of(6, 3) == 3
    assert b_of(6, 3) == 6
    assert q_of(4, 3) == 1
    assert b_of(4, 3) == 0
    # aggregate on a map with one 6-face and the rest 4-faces: a 3x3 grid
    # with one subdivided corner is overkill; check the arithmetic directly
    qs = [3] + [1] * 8
    bs = [6] + [0] * 8
    q_star = 1
    for q in qs:
        q_star *= q
    assert q_star == 3
    assert 1 + sum(bs) == 7


def test_face_profile_hexagon_m5():
    from surfcolor.surface_map import b_of, q_of

    assert q_of(6, 5) == 1
    assert b_of(6, 5) == 0


def test_face_profile_rejects_bad_modulus():
    m = gen_grid(3, 3)
    with pytest.raises(errors.EvenModulus):
        face_profile(m, 4)
    with pytest.raises(errors.ModulusTooSmall):
        face_profile(m, 1)


def test_q_b_basic_bounds(corpus_map):
    from surfcolor.surface_map import b_of, q_of

    for n in corpus_map.face_lengths():
        for m_mod in (3, 5, 7):
            q = q_of(n, m_mod)
            b = b_of(n, m_mod)
            assert b <= n
            if n % 2 == 0 or (m_mod <= n and m_mod % 2 == n % 2):
                assert q >= 1


def test_surfmap_roundtrip(corpus_map):
    text = save_surfmap(corpus_map)
    again = load_surfmap(text)
    assert is_isomorphic(again, corpus_map)
    # loading is a fixed point of emission
    assert save_surfmap(again) == text


def test_surfmap_rejects_garbage():
    with pytest.raises(errors.SurfMapFormatError):
        load_surfmap("not a map\n")
    with pytest.raises(errors.SurfMapFormatError):
        load_surfmap("surfmap 1\nhalfedges 2\nvertex 0: 0\nvertex 2: 1\n")
    with pytest.raises(errors.SurfMapFormatError):
        load_surfmap("surfmap 1\nhalfedges 4\nvertex 0: 0 1\n")


def test_surfmap_comments_and_blank_lines():
    text = "# a comment\nsurfmap 1\n\nhalfedges 2\nvertex 0: 0 # inline\nvertex 1: 1\n"
    m = load_surfmap(text)
    assert m.num_edges == 1
    assert m.num_vertices == 2


def test_edgeless_vertex_is_a_sphere():
    m = build_map([[]])
    assert (m.num_vertices, m.num_edges, m.num_faces) == (1, 0, 1)
    assert m.euler_genus == 0
    d = dual(m)
    assert (d.num_vertices, d.num_edges, d.num_faces) == (1, 0, 1)
