import numpy as np
import pytest
from hypothesis import given
from scipy.sparse.csgraph import shortest_path

from cyclesep import Cycle, find_root_cycle, gen_apollonian, k4
from cyclesep.errors import BadSeedPath
from cyclesep.fundamental import bfs_tree, dual_spanning_tree, tree_half_edges
from cyclesep.oracle import flood_fill_faces
from cyclesep.tree_partition import cut_bound

from conftest import embeddings, stacked5


def test_cycle_basics():
    c = Cycle((4, 7, 9))
    assert len(c) == 3
    assert c.edges() == [(4, 7), (7, 9), (9, 4)]
    t = Cycle((5,))
    assert t.is_trivial and len(t) == 0 and t.edges() == []


def test_k4_root_cycle():
    fc = find_root_cycle(k4())
    assert fc.root == 0
    assert fc.S.vertices == (0, 3, 1)
    assert (fc.faces_inside, fc.faces_outside) == (1, 3)
    assert fc.hT == 1


def test_stacked_five_root_cycle():
    fc = find_root_cycle(stacked5())
    assert fc.S.vertices == (0, 3, 4, 1)
    assert fc.deep == 4 and fc.hT == 2
    assert fc.deep_path == (0, 1, 4)
    assert (fc.faces_inside, fc.faces_outside) == (2, 4)


def test_seed_paths_are_kept():
    g = gen_apollonian(200, 3)
    base = bfs_tree(g, 5)
    far = int(np.argmax(base.rdist))
    path = base.path_to(far)
    t = bfs_tree(g, 5, [path])
    assert t.path_to(far) == path
    assert np.array_equal(t.rdist, base.rdist)


def test_bad_seed_paths():
    g = gen_apollonian(100, 3)
    t = bfs_tree(g, 0)
    far = int(np.argmax(t.rdist))
    assert t.rdist[far] >= 2
    with pytest.raises(BadSeedPath):
        bfs_tree(g, 0, [t.path_to(far)[1:]])
    # far has depth >= 2, so (0, far) is not an edge
    with pytest.raises(BadSeedPath):
        bfs_tree(g, 0, [[0, far]])
    # a walk that is not a shortest path
    x = g.rotation(0)[0]
    with pytest.raises(BadSeedPath):
        bfs_tree(g, 0, [[0, x, 0]])


@given(embeddings())
def test_bfs_depths_are_distances(g):
    r = int(np.random.default_rng(g.n).integers(g.n))
    t = bfs_tree(g, r)
    dist = shortest_path(g.adjacency_matrix(), unweighted=True, indices=r)
    assert np.array_equal(t.rdist, dist.astype(np.int64))
    kids = np.flatnonzero(t.parent >= 0)
    assert len(kids) == g.n - 1
    assert np.all(t.rdist[t.parent[kids]] == t.rdist[kids] - 1)


@given(embeddings())
def test_dual_tree_is_spanning(g):
    ft = g.faces
    t = bfs_tree(g, 0)
    assert tree_half_edges(g, t).sum() == 2 * (g.n - 1)
    dual = dual_spanning_tree(g, ft, t)
    assert dual.tree.m == ft.num_faces
    assert len(dual.tree.preorder()[0]) == ft.num_faces
    assert dual.tree.max_degree == 3


@given(embeddings())
def test_root_cycle_properties(g):
    fc = find_root_cycle(g)
    F = g.num_faces
    r = fc.root
    u, v = fc.uv
    assert g.has_edge(u, v)
    assert fc.p_u[0] == fc.p_v[0] == r
    assert fc.p_u[-1] == u and fc.p_v[-1] == v
    assert not set(fc.p_u[1:]) & set(fc.p_v[1:])

    dist = shortest_path(g.adjacency_matrix(), unweighted=True, indices=r).astype(np.int64)
    assert np.array_equal(fc.tree.rdist, dist)
    for p in (fc.p_u, fc.p_v):
        assert fc.tree.path_to(p[-1]) == list(p)
        assert [dist[x] for x in p] == list(range(len(p)))
    assert fc.hT == max(dist[u], dist[v]) == dist[fc.deep]
    assert fc.deep_path[-1] == fc.deep

    inside, outside = flood_fill_faces(g, fc.S)
    assert (len(inside), len(outside)) == (fc.faces_inside, fc.faces_outside)
    assert max(len(inside), len(outside)) <= cut_bound(F, 3)
    tris = {tuple(sorted(f)) for f in g.faces.faces[fc.inside_S].tolist()}
    assert tris == inside
