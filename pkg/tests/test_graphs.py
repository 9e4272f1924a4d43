import pytest

from locodes import (Graph, GraphError, GraphFormatError, GridFamily, TorusSpec,
                     complete_bipartite, cycle, figure_graph, graph_from_text,
                     graph_from_uri, graph_to_text, hypercube, path, torus)


def test_hypercube_basics():
    g1 = hypercube(1)
    assert (g1.n, g1.edge_count) == (2, 1)
    g3 = hypercube(3)
    assert (g3.n, g3.edge_count) == (8, 12)
    assert all(g3.degree(v) == 3 for v in range(8))
    g4 = hypercube(4)
    assert g4.distance(g4.index_of("0000"), g4.index_of("1111")) == 4


def test_hypercube_distance_is_hamming():
    for n in (2, 3, 4, 5, 6):
        g = hypercube(n)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                assert g.distance(u, v) == (u ^ v).bit_count()


def test_hypercube_triangle_free():
    for n in (1, 2, 3, 4, 5):
        assert hypercube(n).is_triangle_free()


def test_hypercube_range_guard():
    with pytest.raises(GraphError):
        hypercube(0)
    with pytest.raises(GraphError):
        hypercube(21)


def test_small_generators():
    p = path(5)
    assert sorted(p.degree(v) for v in range(5)).count(1) == 2
    c = cycle(4)
    assert all(c.degree(v) == 2 for v in range(4))
    kb = complete_bipartite(2, 3)
    assert (kb.n, kb.edge_count) == (5, 6)
    with pytest.raises(GraphError):
        cycle(2)
    with pytest.raises(GraphError):
        complete_bipartite(0, 3)
    with pytest.raises(GraphError):
        path(0)


def test_figure_graphs():
    f1 = figure_graph(1)
    assert (f1.n, f1.edge_count) == (6, 5)
    # the path end and the pendant have identical 2-balls
    assert f1.closed_ball(f1.index_of("v1"), 2) == f1.closed_ball(f1.index_of("u"), 2)
    f2 = figure_graph(2)
    assert (f2.n, f2.edge_count) == (5, 4)
    with pytest.raises(GraphError):
        figure_graph(3)


def test_closed_ball_examples():
    g = hypercube(3)
    ball = {g.labels[v] for v in g.closed_ball(g.index_of("000"), 1)}
    assert ball == {"000", "001", "010", "100"}
    assert g.closed_ball(0, 0) == {0}


def test_ball_monotone_and_component():
    for g in (hypercube(4), cycle(7), figure_graph(1)):
        for v in range(g.n):
            prev = set()
            for r in range(0, g.n):
                cur = g.closed_ball(v, r)
                assert v in cur
                assert prev <= cur
                prev = cur
            assert prev == set(range(g.n))  # connected: big ball is everything


def test_distance_unreachable():
    g = Graph(3, [(0, 1)])
    assert g.distance(0, 2) is None
    assert g.distance(0, 1) == 1


def test_torus_degrees():
    assert all(torus("square", 5, 5).degree(v) == 4 for v in range(25))
    assert all(torus("king", 5, 5).degree(v) == 8 for v in range(25))
    assert all(torus("tri", 6, 6).degree(v) == 6 for v in range(36))
    th = torus("hex", 6, 6)
    assert all(th.degree(v) == 3 for v in range(36))


def test_torus_triangles():
    assert not torus("tri", 6, 6).is_triangle_free()
    assert not torus("king", 5, 5).is_triangle_free()
    assert torus("square", 5, 5).is_triangle_free()
    assert torus("hex", 6, 6).is_triangle_free()


def test_torus_spec_guards():
    with pytest.raises(GraphError):
        TorusSpec(GridFamily.SQUARE, 4, 10)
    with pytest.raises(GraphError):
        TorusSpec(GridFamily.HEXAGONAL, 7, 6)
    with pytest.raises(GraphError):
        TorusSpec("nosuch", 6, 6)


# independent transcription of the grid neighbour rules, for unfolding checks
def _grid_neighbors(family, p):
    i, j = p
    if family == "square":
        offs = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    elif family == "triangular":
        offs = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)]
    elif family == "king":
        offs = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)]
    else:  # hexagonal: vertical edge direction alternates with parity of i+j
        offs = [(1, 0), (-1, 0), (0, -1 if (i + j) % 2 == 0 else 1)]
    return [(i + a, j + b) for a, b in offs]


def _grid_ball(family, p, r):
    ball = {p}
    frontier = {p}
    for _ in range(r):
        frontier = {q for x in frontier for q in _grid_neighbors(family, x)} - ball
        ball |= frontier
    return ball


@pytest.mark.parametrize("family,px,py", [
    ("square", 5, 5), ("square", 6, 7), ("triangular", 6, 6),
    ("king", 5, 5), ("king", 6, 8), ("hexagonal", 6, 6), ("hexagonal", 8, 6),
])
def test_torus_radius2_faithful(family, px, py):
    """Unfold every torus vertex: its radius-2 torus ball must be the
    injective image of the infinite-grid radius-2 ball."""
    g = torus(family, px, py)
    for i in range(px):
        for j in range(py):
            v = i * py + j
            grid_ball = _grid_ball(family, (i, j), 2)
            wrapped = {(a % px) * py + (b % py) for a, b in grid_ball}
            assert len(wrapped) == len(grid_ball)  # injective
            assert wrapped == g.closed_ball(v, 2)


def test_graph_text_roundtrip():
    g = figure_graph(1)
    text = graph_to_text(g)
    h = graph_from_text(text)
    assert h.n == g.n
    assert h.edges() == g.edges()
    assert h.labels == g.labels


def test_graph_text_errors_carry_line_numbers():
    with pytest.raises(GraphFormatError) as ei:
        graph_from_text("graph 2 1\n0 x\n")
    assert "line 2" in str(ei.value)
    with pytest.raises(GraphFormatError):
        graph_from_text("0 1\n")
    with pytest.raises(GraphFormatError):
        graph_from_text("graph 2 2\n0 1\n")  # announced two edges, found one


def test_graph_uris(tmp_path):
    assert graph_from_uri("hypercube:4").n == 16
    assert graph_from_uri("kbipartite:2,5").n == 7
    assert graph_from_uri("torus:square:10x10").n == 100
    assert graph_from_uri("cycle:9").n == 9
    f = tmp_path / "g.txt"
    f.write_text(graph_to_text(path(4)))
    assert graph_from_uri(f"file:{f}").edges() == path(4).edges()
    with pytest.raises(GraphError):
        graph_from_uri("nosuch:3")
    with pytest.raises(GraphError):
        graph_from_uri("hypercube")


def test_graph_construction_guards():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 5)])
    with pytest.raises(GraphError):
        Graph(2, [], labels=["a"])
    with pytest.raises(GraphError):
        Graph(2, [], labels=["a", "a"])
