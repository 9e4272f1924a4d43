"""Finite simple graphs with bit-indexed vertex sets.

Vertex ids are dense integers in ``[0, n)`` and every vertex set (adjacency,
radius-r balls) is a Python int bitmask, which keeps verification and search
hot paths allocation-free.  Graphs are immutable after construction; balls
are computed lazily per radius and cached.

Generators cover the families used throughout the package: binary
hypercubes, paths, cycles, complete bipartite graphs, two small pendant-path
fixture graphs, and toroidal wraps of the four planar grids (square,
hexagonal, triangular, king).  Toroidal wraps require periods of at least 5
so that every radius-2 ball of the infinite grid maps injectively onto the
torus; code-class checks at r=1 only ever look at radius-2 structure, so
validity on such a torus coincides with validity of the unfolded periodic
set on the infinite grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .bitset import iter_bits

MAX_VERTICES = 1 << 20


class GraphError(ValueError):
    """Bad construction parameters or malformed graph input."""


class GraphFormatError(GraphError):
    """Malformed graph/code text, tagged with the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GridFamily(str, Enum):
    SQUARE = "square"
    HEXAGONAL = "hexagonal"
    TRIANGULAR = "triangular"
    KING = "king"


_FAMILY_ALIASES = {
    "square": GridFamily.SQUARE,
    "sq": GridFamily.SQUARE,
    "s": GridFamily.SQUARE,
    "hexagonal": GridFamily.HEXAGONAL,
    "hex": GridFamily.HEXAGONAL,
    "h": GridFamily.HEXAGONAL,
    "triangular": GridFamily.TRIANGULAR,
    "tri": GridFamily.TRIANGULAR,
    "t": GridFamily.TRIANGULAR,
    "king": GridFamily.KING,
    "k": GridFamily.KING,
}


def parse_family(name) -> GridFamily:
    if isinstance(name, GridFamily):
        return name
    try:
        return _FAMILY_ALIASES[str(name).strip().lower()]
    except KeyError:
        raise GraphError(f"unknown grid family {name!r}") from None


_PLAIN_OFFSETS = {
    GridFamily.SQUARE: ((1, 0), (-1, 0), (0, 1), (0, -1)),
    GridFamily.TRIANGULAR: ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)),
    GridFamily.KING: ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)),
}


def grid_offsets(family: GridFamily, i: int, j: int):
    """Neighbour offsets of grid point (i, j).

    Hexagonal vertices have a single vertical neighbour whose direction
    alternates with the parity of i+j; the other three families are
    translation invariant.
    """
    if family is GridFamily.HEXAGONAL:
        return ((1, 0), (-1, 0), (0, -1 if (i + j) % 2 == 0 else 1))
    return _PLAIN_OFFSETS[family]


@dataclass(frozen=True)
class TorusSpec:
    """A toroidal wrap of one of the four grids, px columns by py rows."""

    family: GridFamily
    px: int
    py: int

    def __post_init__(self):
        object.__setattr__(self, "family", parse_family(self.family))
        if self.px < 5 or self.py < 5:
            raise GraphError("torus periods must be at least 5")
        if self.family is GridFamily.HEXAGONAL and (self.px % 2 or self.py % 2):
            raise GraphError("hexagonal torus periods must be even (edge rule depends on i+j parity)")


class Graph:
    """Immutable simple graph over dense vertex ids.

    ``labels`` are display data only; all set operations use indices.
    """

    __slots__ = ("n", "labels", "family", "meta", "_adj", "_balls", "_label_to_id", "_edges")

    def __init__(self, n: int, edges, labels=None, family: str = "custom", meta=None):
        if not 1 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} out of supported range [1, {MAX_VERTICES}]")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        if labels is None:
            labels = [str(v) for v in range(n)]
        if len(labels) != n:
            raise GraphError("label count does not match vertex count")
        self.labels = tuple(str(x) for x in labels)
        self._label_to_id = {lab: v for v, lab in enumerate(self.labels)}
        if len(self._label_to_id) != n:
            raise GraphError("vertex labels must be unique")
        self.family = family
        self.meta = dict(meta or {})
        # closed 1-balls are needed almost always; build them eagerly
        self._balls = {1: tuple(m | (1 << v) for v, m in enumerate(adj))}
        self._edges = None

    # -- basic queries -------------------------------------------------

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple:
        return tuple(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def edges(self):
        """All edges as (u, v) with u < v, in lexicographic order."""
        if self._edges is None:
            es = []
            for u, m in enumerate(self._adj):
                for off in iter_bits(m >> (u + 1)):
                    es.append((u, u + 1 + off))
            self._edges = tuple(es)
        return self._edges

    @property
    def is_vertex_transitive(self) -> bool:
        return bool(self.meta.get("vertex_transitive"))

    def __repr__(self):
        return f"<Graph {self.family} n={self.n} m={self.edge_count}>"

    # -- balls and distances -------------------------------------------

    def ball_masks(self, r: int):
        """Closed r-balls of every vertex, as a tuple of bitmasks."""
        if r < 0:
            raise GraphError("radius must be non-negative")
        got = self._balls.get(r)
        if got is None:
            if r == 0:
                got = tuple(1 << v for v in range(self.n))
            else:
                prev = self.ball_masks(r - 1)
                out = []
                for v in range(self.n):
                    m = prev[v]
                    grown = m
                    for u in iter_bits(m):
                        grown |= self._adj[u]
                    out.append(grown)
                got = tuple(out)
            self._balls[r] = got
        return got

    def ball_mask(self, v: int, r: int) -> int:
        return self.ball_masks(r)[v]

    def closed_ball(self, v: int, r: int) -> frozenset:
        """N_r[v] as a frozenset of vertex ids."""
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return frozenset(iter_bits(self.ball_masks(r)[v]))

    def distance(self, u: int, v: int):
        """BFS distance, or None when v is unreachable from u."""
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError("vertex out of range")
        if u == v:
            return 0
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= self._adj[w]
            nxt &= ~seen
            if (nxt >> v) & 1:
                return d
            seen |= nxt
            frontier = nxt
        return None

    def is_triangle_free(self) -> bool:
        return not any(self._adj[u] & self._adj[v] for u, v in self.edges())

    # -- labels ----------------------------------------------------------

    def label_of(self, v: int) -> str:
        return self.labels[v]

    def index_of(self, label: str) -> int:
        try:
            return self._label_to_id[label]
        except KeyError:
            raise GraphError(f"no vertex labelled {label!r}") from None


# -- generators ---------------------------------------------------------


def hypercube(n: int) -> Graph:
    """Binary n-cube: vertices are n-bit words, edges join words at Hamming distance 1."""
    if not 1 <= n <= 20:
        raise GraphError("hypercube dimension must be in [1, 20]")
    size = 1 << n
    edges = []
    for v in range(size):
        for b in range(n):
            u = v ^ (1 << b)
            if v < u:
                edges.append((v, u))
    labels = [format(v, f"0{n}b") for v in range(size)]
    return Graph(size, edges, labels, family="hypercube",
                 meta={"dim": n, "vertex_transitive": True})


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least one vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], family="path")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least three vertices")
    edges = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n, edges, family="cycle", meta={"vertex_transitive": True})


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("both parts need at least one vertex")
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    labels = [f"a{i}" for i in range(a)] + [f"b{j}" for j in range(b)]
    return Graph(a + b, edges, labels, family="kbipartite", meta={"parts": (a, b)})


def figure_graph(which) -> Graph:
    """Two small pendant-path fixtures.

    Graph 1 is the path v1..v5 with a pendant vertex u attached to v2: it
    has adjacent-only 2-ball twins, so it separates the local and plain
    identifying conditions at r=2.  Graph 2 is the path v1..v4 with a
    pendant u at v2, the standard share example.  The companion codes
    (the darkened vertices) are shipped in the explicit-code registry.
    """
    key = str(which).lower().removeprefix("fig")
    if key == "1":
        labels = ["v1", "v2", "v3", "v4", "v5", "u"]
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)]
        return Graph(6, edges, labels, family="figure", meta={"figure": 1})
    if key == "2":
        labels = ["v1", "v2", "v3", "v4", "u"]
        edges = [(0, 1), (1, 2), (2, 3), (1, 4)]
        return Graph(5, edges, labels, family="figure", meta={"figure": 2})
    raise GraphError(f"unknown figure graph {which!r}")


def torus(spec, px: int | None = None, py: int | None = None) -> Graph:
    """Toroidal wrap of a grid family; accepts a TorusSpec or (family, px, py)."""
    if not isinstance(spec, TorusSpec):
        spec = TorusSpec(parse_family(spec), px, py)
    fx, fy = spec.px, spec.py
    edges = set()
    for i in range(fx):
        for j in range(fy):
            v = i * fy + j
            for di, dj in grid_offsets(spec.family, i, j):
                u = ((i + di) % fx) * fy + ((j + dj) % fy)
                edges.add((min(u, v), max(u, v)))
    labels = [f"{i},{j}" for i in range(fx) for j in range(fy)]
    meta = {"grid_family": spec.family, "px": fx, "py": fy, "vertex_transitive": True}
    return Graph(fx * fy, sorted(edges), labels, family="torus", meta=meta)


def torus_vertex(graph: Graph, i: int, j: int) -> int:
    """Vertex id of torus cell (i, j), coordinates taken mod the periods."""
    px, py = graph.meta["px"], graph.meta["py"]
    return (i % px) * py + (j % py)


# -- text format ----------------------------------------------------------
#
# graph <n> <m>
# <u> <v>            (m edge lines, 0-based ids)
# label <v> <text>   (optional)


def graph_to_text(graph: Graph) -> str:
    lines = [f"graph {graph.n} {graph.edge_count}"]
    lines += [f"{u} {v}" for u, v in graph.edges()]
    for v, lab in enumerate(graph.labels):
        if lab != str(v):
            lines.append(f"label {v} {lab}")
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    header = None
    edges = []
    labels = None
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "graph" or len(parts) != 3:
                raise GraphFormatError("expected header 'graph <n> <m>'", lineno)
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("header counts must be integers", lineno) from None
            header = lineno
            labels = [str(v) for v in range(n)]
            continue
        if parts[0] == "label":
            if len(parts) < 3:
                raise GraphFormatError("expected 'label <v> <text>'", lineno)
            try:
                v = int(parts[1])
            except ValueError:
                raise GraphFormatError("label vertex must be an integer", lineno) from None
            if not 0 <= v < n:
                raise GraphFormatError(f"label vertex {v} out of range", lineno)
            labels[v] = " ".join(parts[2:])
            continue
        if len(parts) != 2:
            raise GraphFormatError("expected edge line '<u> <v>'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError("edge endpoints must be integers", lineno) from None
        edges.append((u, v))
    if header is None:
        raise GraphFormatError("missing 'graph <n> <m>' header")
    if len(edges) != m:
        raise GraphFormatError(f"header announced {m} edges but found {len(edges)}")
    try:
        return Graph(n, edges, labels, family="file")
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def read_graph(path_) -> Graph:
    with open(path_, "r", encoding="utf-8") as fh:
        return graph_from_text(fh.read())


def write_graph(graph: Graph, path_) -> None:
    with open(path_, "w", encoding="utf-8") as fh:
        fh.write(graph_to_text(graph))


# -- generator URIs --------------------------------------------------------


def graph_from_uri(uri: str) -> Graph:
    """Build a graph from a generator URI.

    Supported forms: ``hypercube:4``, ``path:7``, ``cycle:9``,
    ``kbipartite:2,5``, ``torus:square:10x10``, ``fig:1``, ``fig:2``,
    ``file:<path>``.
    """
    kind, sep, rest = uri.partition(":")
    if not sep:
        raise GraphError(f"malformed graph uri {uri!r}")
    kind = kind.strip().lower()
    try:
        if kind == "hypercube":
            return hypercube(int(rest))
        if kind == "path":
            return path(int(rest))
        if kind == "cycle":
            return cycle(int(rest))
        if kind == "kbipartite":
            a, b = rest.split(",")
            return complete_bipartite(int(a), int(b))
        if kind == "torus":
            fam, dims = rest.split(":")
            px, py = dims.lower().split("x")
            return torus(parse_family(fam), int(px), int(py))
        if kind == "fig":
            return figure_graph(rest)
        if kind == "file":
            return read_graph(rest)
    except GraphError:
        raise
    except (ValueError, OSError) as exc:
        raise GraphError(f"malformed graph uri {uri!r}: {exc}") from None
    raise GraphError(f"unknown graph uri scheme {kind!r}")
