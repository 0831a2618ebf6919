"""The (n,k)-star graph: construction, edge kinds, vertex indexing, the
automorphism action, and the small structural checks (triangles, six-cycles,
transposition products, brute-force automorphism counting).

Vertices are the k-permutations of {1..n}, held as plain tuples of 1-based
labels.  Two edge types exist:

* star edge: swap the label in position 1 with the label in position i,
  for some 2 <= i <= k;
* residual edge: change only the label in position 1.

Every vertex therefore meets k-1 star edges and n-k residual edges.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from enum import Enum
from typing import Iterator, Sequence

from .pairs import AutPair
from .perm import Perm

DEFAULT_VERTEX_CAP = 2_000_000

KPerm = tuple[int, ...]


class EdgeKind(Enum):
    STAR = "star"
    RESIDUAL = "residual"


class GraphSizeExceeded(RuntimeError):
    """Materializing the graph would exceed the vertex cap."""


class BudgetExceeded(RuntimeError):
    """The backtracking automorphism search ran past its node budget."""


class UnsupportedCyclePattern(ValueError):
    """Six-cycle query on an incident edge pair outside the two handled shapes."""


def validate_kperm(v: Sequence[int], n: int) -> KPerm:
    v = tuple(v)
    if len(set(v)) != len(v) or not v or any(not 1 <= x <= n for x in v):
        raise ValueError(f"not a k-permutation of 1..{n}: {v!r}")
    return v


# ---------------------------------------------------------------------------
# vertex indexing: lexicographic rank over ordered k-tuples


def rank(v: Sequence[int], n: int) -> int:
    """Lexicographic rank of a k-permutation among all k-permutations of n."""
    v = tuple(v)
    k = len(v)
    r = 0
    for i, a in enumerate(v):
        smaller = a - 1
        for j in range(i):
            if v[j] < a:
                smaller -= 1
        r += smaller * math.perm(n - 1 - i, k - 1 - i)
    return r


def unrank(index: int, n: int, k: int) -> KPerm:
    """Inverse of :func:`rank`."""
    if not 0 <= index < math.perm(n, k):
        raise ValueError(f"rank {index} out of range for P({n},{k})")
    available = list(range(1, n + 1))
    out = []
    for i in range(k):
        w = math.perm(n - 1 - i, k - 1 - i)
        pos, index = divmod(index, w)
        out.append(available.pop(pos))
    return tuple(out)


# ---------------------------------------------------------------------------
# adjacency from the definitions (usable without materializing a graph)


def star_neighbors(v: Sequence[int]) -> list[KPerm]:
    v = tuple(v)
    return [(v[i],) + v[1:i] + (v[0],) + v[i + 1:] for i in range(1, len(v))]


def residual_neighbors(v: Sequence[int], n: int) -> list[KPerm]:
    v = tuple(v)
    used = set(v)
    return [(x,) + v[1:] for x in range(1, n + 1) if x not in used]


def edge_kind(u: Sequence[int], v: Sequence[int]) -> EdgeKind | None:
    """Classify the pair as a star edge, residual edge, or None if not adjacent."""
    u, v = tuple(u), tuple(v)
    if len(u) != len(v):
        raise ValueError("vertices come from different graphs")
    if u == v:
        raise ValueError("self-loop query")
    diff = [i for i in range(len(u)) if u[i] != v[i]]
    if diff == [0] and v[0] not in u:
        return EdgeKind.RESIDUAL
    if (len(diff) == 2 and diff[0] == 0
            and u[0] == v[diff[1]] and u[diff[1]] == v[0]):
        return EdgeKind.STAR
    return None


class StarGraph:
    """A fully materialized (n,k)-star graph with kind-tagged adjacency.

    The backbone is one flat index row per vertex with the k-1 star
    neighbors first and the n-k residual neighbors after them, so the edge
    kind is positional and the million-vertex graphs stay materializable.
    The kind-tagged ``adjacency`` view and the per-vertex neighbor sets are
    built on first use and cached.

    Immutable after construction; every query is a pure read.
    """

    __slots__ = ("n", "k", "vertices", "index", "_rows", "_adjacency",
                 "_adjacent_sets")

    def __init__(self, n, k, vertices, index, rows):
        self.n = n
        self.k = k
        self.vertices = vertices
        self.index = index
        self._rows = rows
        self._adjacency = None
        self._adjacent_sets = None

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def adjacency(self) -> list[list[tuple[int, EdgeKind]]]:
        """Per vertex, the list of (neighbor rank, kind) entries."""
        if self._adjacency is None:
            split = self.k - 1
            self._adjacency = [
                [(j, EdgeKind.STAR if pos < split else EdgeKind.RESIDUAL)
                 for pos, j in enumerate(row)]
                for row in self._rows]
        return self._adjacency

    @property
    def _neighbor_sets(self) -> list[frozenset[int]]:
        if self._adjacent_sets is None:
            self._adjacent_sets = [frozenset(row) for row in self._rows]
        return self._adjacent_sets

    def rank_of(self, v: Sequence[int]) -> int:
        return self.index[tuple(v)]

    def neighbors(self, v: Sequence[int]) -> list[tuple[KPerm, EdgeKind]]:
        row = self._rows[self.index[tuple(v)]]
        split = self.k - 1
        return [(self.vertices[j],
                 EdgeKind.STAR if pos < split else EdgeKind.RESIDUAL)
                for pos, j in enumerate(row)]

    def are_adjacent(self, u: Sequence[int], v: Sequence[int]) -> bool:
        return self.index[tuple(v)] in self._neighbor_sets[self.index[tuple(u)]]

    def edges(self) -> Iterator[tuple[int, int, EdgeKind]]:
        """Each undirected edge once, as (smaller rank, larger rank, kind)."""
        split = self.k - 1
        for i, row in enumerate(self._rows):
            for pos, j in enumerate(row):
                if i < j:
                    yield i, j, EdgeKind.STAR if pos < split else EdgeKind.RESIDUAL

    def edge_count(self) -> int:
        return sum(len(row) for row in self._rows) // 2

    def triangle_count(self) -> int:
        sets = self._neighbor_sets
        total = 0
        for i, j, _ in self.edges():
            total += len(sets[i] & sets[j])
        return total // 3

    def degree_split(self) -> tuple[int, int]:
        """(star degree, residual degree), uniform over vertices by construction."""
        return self.k - 1, self.n - self.k


def build(n: int, k: int, vertex_cap: int = DEFAULT_VERTEX_CAP) -> StarGraph:
    """Materialize the (n,k)-star graph, vertices indexed by lexicographic rank."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got ({n},{k})")
    count = math.perm(n, k)
    if count > vertex_cap:
        raise GraphSizeExceeded(
            f"P({n},{k}) = {count} exceeds vertex cap {vertex_cap}")
    vertices = tuple(itertools.permutations(range(1, n + 1), k))
    index = {v: i for i, v in enumerate(vertices)}
    rows = [tuple(index[u] for u in star_neighbors(v))
            + tuple(index[u] for u in residual_neighbors(v, n))
            for v in vertices]
    return StarGraph(n, k, vertices, index, rows)


# ---------------------------------------------------------------------------
# the automorphism action


def apply_automorphism(f: AutPair | tuple[Perm, Perm], v: Sequence[int]) -> KPerm:
    """Apply the pair action [a1..ak] -> [mu(a_{nu^-1(1)}), ..., mu(a_{nu^-1(k)})]."""
    if not isinstance(f, AutPair):
        f = AutPair(*f)
    return f.apply(tuple(v))


# ---------------------------------------------------------------------------
# structural checks


def is_edge_in_triangle(graph: StarGraph, u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff the edge uv lies in a 3-cycle (shares a common neighbor)."""
    iu, iv = graph.index[tuple(u)], graph.index[tuple(v)]
    if iv not in graph._neighbor_sets[iu]:
        raise ValueError(f"{u!r} and {v!r} are not adjacent")
    return bool(graph._neighbor_sets[iu] & graph._neighbor_sets[iv])


def six_cycles_through(graph: StarGraph, u: Sequence[int], v: Sequence[int],
                       w: Sequence[int]) -> list[tuple[KPerm, ...]]:
    """All 6-cycles through the path u-v-w matching the kind pattern.

    With one residual and one star edge at v, the cycle must alternate kinds;
    with two star edges it must consist of star edges only.  Each returned
    cycle is (u, v, w, x, y, z) read around the cycle.  Two residual edges
    are outside both shapes and raise :class:`UnsupportedCyclePattern`.
    """
    u, v, w = tuple(u), tuple(v), tuple(w)
    k1 = edge_kind(u, v)
    k2 = edge_kind(v, w)
    if k1 is None or k2 is None:
        raise ValueError("u-v and v-w must both be edges")
    if k1 == k2 == EdgeKind.RESIDUAL:
        raise UnsupportedCyclePattern(
            "two residual edges: no uniqueness statement holds for this pattern")
    if k1 == k2 == EdgeKind.STAR:
        kinds = (EdgeKind.STAR,) * 4
    else:
        # alternate around the cycle: uv, vw, wx, xy, yz, zu
        kinds = (k1, k2, k1, k2)
    found = []
    iu = graph.index[u]
    path = {u, v, w}
    for x, kx in graph.neighbors(w):
        if kx is not kinds[0] or x in path:
            continue
        for y, ky in graph.neighbors(x):
            if ky is not kinds[1] or y in path or y == x:
                continue
            for z, kz in graph.neighbors(y):
                if kz is not kinds[2] or z in path or z in (x, y):
                    continue
                iz = graph.index[z]
                if iu in graph._neighbor_sets[iz]:
                    close = edge_kind(z, u)
                    if close is kinds[3]:
                        found.append((u, v, w, x, y, z))
    return found


def transposition_identity_check(n: int) -> bool:
    """Scan products of six transpositions through the point 1.

    For labels 2 <= a..f <= n with cyclically adjacent entries distinct,
    (1 f)(1 e)(1 d)(1 c)(1 b)(1 a) is the identity exactly when a=c=e and
    b=d=f.  Returns True iff the full scan finds no violation.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    idn = tuple(range(1, n + 1))
    swaps = {}
    for i in range(2, n + 1):
        img = list(idn)
        img[0], img[i - 1] = i, 1
        swaps[i] = tuple(img)

    labels = range(2, n + 1)
    for a in labels:
        for b in labels:
            if b == a:
                continue
            for c in labels:
                if c == b:
                    continue
                for d in labels:
                    if d == c:
                        continue
                    for e in labels:
                        if e == d:
                            continue
                        for f in labels:
                            if f == e or f == a:
                                continue
                            # apply (1 a) first, then (1 b), ..., then (1 f)
                            img = idn
                            for t in (a, b, c, d, e, f):
                                s = swaps[t]
                                img = tuple(s[x - 1] for x in img)
                            is_id = img == idn
                            should = (a == c == e and b == d == f)
                            if is_id != should:
                                return False
    return True


# ---------------------------------------------------------------------------
# independent automorphism-count oracle


def brute_force_automorphism_count(graph: StarGraph, node_budget: int = 10_000_000,
                                   max_vertices: int = 64,
                                   fix_vertex: int | None = None) -> int:
    """Count all adjacency-preserving vertex bijections by backtracking.

    Deliberately ignorant of edge kinds: the oracle must be able to confirm,
    not assume, that automorphisms preserve them.  Vertices are matched in a
    breadth-first order (each new vertex touches an already-mapped one) with
    a degree + triangle-count invariant filter.

    With fix_vertex set, only bijections fixing that rank are counted (the
    vertex stabilizer), which makes the orbit-stabilizer relation
    |Aut| = |V| * |Stab| checkable from two independent runs.
    """
    size = graph.vertex_count
    if size > max_vertices:
        raise ValueError(f"{size} vertices exceeds max_vertices={max_vertices}")
    adj = graph._neighbor_sets
    start = 0 if fix_vertex is None else fix_vertex
    order = [start]
    placed = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if y not in placed:
                placed.add(y)
                order.append(y)
                queue.append(y)
    if len(order) != size:
        raise ValueError("graph is not connected")
    degree = [len(a) for a in adj]
    triangles = [sum(len(adj[x] & adj[y]) for y in adj[x]) // 2 for x in range(size)]
    invariant = list(zip(degree, triangles))

    image = [-1] * size
    used = [False] * size
    count = 0
    nodes = 0

    def extend(pos: int) -> None:
        nonlocal count, nodes
        if pos == size:
            count += 1
            return
        v = order[pos]
        if v == fix_vertex:
            candidates = {v}
        else:
            mapped_nb = [x for x in adj[v] if image[x] >= 0]
            if mapped_nb:
                candidates = set(adj[image[mapped_nb[0]]])
                for x in mapped_nb[1:]:
                    candidates &= adj[image[x]]
            else:
                candidates = set(range(size))
        for c in sorted(candidates):
            if used[c] or invariant[c] != invariant[v]:
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded(f"exceeded {node_budget} search nodes")
            ok = True
            for x in range(size):
                if image[x] >= 0 and ((x in adj[v]) != (image[x] in adj[c])):
                    ok = False
                    break
            if not ok:
                continue
            image[v] = c
            used[c] = True
            extend(pos + 1)
            image[v] = -1
            used[c] = False

    extend(0)
    return count


# ---------------------------------------------------------------------------
# exports


def to_dot(graph: StarGraph) -> str:
    """DOT text; vertices labeled "[a1,...,ak]", edges tagged with their kind."""
    lines = [f'graph "S_{graph.n}_{graph.k}" {{']
    for i, v in enumerate(graph.vertices):
        label = "[" + ",".join(map(str, v)) + "]"
        lines.append(f'  v{i} [label="{label}"];')
    for i, j, kind in graph.edges():
        lines.append(f'  v{i} -- v{j} [kind="{kind.value}"];')
    lines.append("}")
    return "\n".join(lines)


def edge_list_lines(graph: StarGraph) -> list[str]:
    """One line per edge: "u v K" with vertex ranks and K in {S, R}."""
    tag = {EdgeKind.STAR: "S", EdgeKind.RESIDUAL: "R"}
    return [f"{i} {j} {tag[kind]}" for i, j, kind in graph.edges()]
