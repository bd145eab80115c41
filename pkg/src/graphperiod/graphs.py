"""Finite multigraphs (loops and parallel edges allowed) and the structural
operations that deletion-contraction invariants consume.

Vertices are dense ints 0..vertex_count-1; edges are dense ints identified by
their position in ``endpoints``.  Parallel edges are distinct edge ids sharing
an endpoint pair; a loop has both endpoints equal.  All operations return new
graphs; MultiGraph values are immutable and hashable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class GraphFormatError(ValueError):
    """Malformed graph text input."""


class EdgeClass(enum.Enum):
    BRIDGE = "bridge"
    LOOP = "loop"
    ORDINARY = "ordinary"


@dataclass(frozen=True)
class MultiGraph:
    vertex_count: int
    endpoints: tuple = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        norm = []
        for pair in self.endpoints:
            u, v = pair
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(
                    f"edge endpoint out of range: ({u}, {v}) with "
                    f"{self.vertex_count} vertices"
                )
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "endpoints", tuple(norm))

    @property
    def edge_count(self) -> int:
        return len(self.endpoints)

    def degree(self, v: int) -> int:
        """Incident edge ends at v; a loop contributes 2."""
        d = 0
        for a, b in self.endpoints:
            if a == v:
                d += 1
            if b == v:
                d += 1
        return d

    def __repr__(self):
        return f"MultiGraph({self.vertex_count}, {list(self.endpoints)!r})"


# -- text format --------------------------------------------------------


def parse_edge_list(text: str) -> MultiGraph:
    """Parse the line-oriented graph format.

    ``#`` starts a comment, the first significant line is ``n <vertices>``,
    every following significant line is ``e <u> <v>``.  Parallel ``e`` lines
    create parallel edges and ``e v v`` creates a loop.
    """
    vertex_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if vertex_count is None:
            if fields[0] != "n" or len(fields) != 2 or not fields[1].isdigit():
                raise GraphFormatError(
                    f"line {lineno}: expected 'n <vertex count>' header, got {line!r}"
                )
            vertex_count = int(fields[1])
            continue
        if fields[0] != "e" or len(fields) != 3:
            raise GraphFormatError(
                f"line {lineno}: expected 'e <u> <v>', got {line!r}"
            )
        if not (fields[1].isdigit() and fields[2].isdigit()):
            raise GraphFormatError(
                f"line {lineno}: endpoints must be non-negative integers, got {line!r}"
            )
        u, v = int(fields[1]), int(fields[2])
        if u >= vertex_count or v >= vertex_count:
            raise GraphFormatError(
                f"line {lineno}: endpoint {max(u, v)} out of range for "
                f"{vertex_count} vertices"
            )
        edges.append((u, v))
    if vertex_count is None:
        raise GraphFormatError("missing 'n <vertex count>' header")
    return MultiGraph(vertex_count, tuple(edges))


def render_edge_list(g: MultiGraph) -> str:
    lines = [f"n {g.vertex_count}"]
    lines.extend(f"e {u} {v}" for u, v in g.endpoints)
    return "\n".join(lines) + "\n"


# -- named graphs --------------------------------------------------------

# 12-cycle chord offsets for the rigid cubic graph on 12 vertices.
FRUCHT_LCF = (-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2)


def named_graph(name: str, *params: int) -> MultiGraph:
    """Build a named graph: empty n, path n, cycle n, complete n, theta k,
    petersen, frucht.  Parameters count vertices (theta counts edges)."""

    def need(count):
        if len(params) != count:
            raise ValueError(f"{name!r} takes {count} parameter(s), got {len(params)}")

    if name == "empty":
        need(1)
        if params[0] < 0:
            raise ValueError("empty n requires n >= 0")
        return MultiGraph(params[0])
    if name == "path":
        need(1)
        n = params[0]
        if n < 1:
            raise ValueError("path n requires n >= 1")
        return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))
    if name == "cycle":
        need(1)
        n = params[0]
        if n < 2:
            raise ValueError("cycle n requires n >= 2")
        return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))
    if name == "complete":
        need(1)
        n = params[0]
        if n < 1:
            raise ValueError("complete n requires n >= 1")
        return MultiGraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))
    if name == "theta":
        need(1)
        k = params[0]
        if k < 1:
            raise ValueError("theta k requires k >= 1")
        return MultiGraph(2, ((0, 1),) * k)
    if name == "petersen":
        need(0)
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return MultiGraph(10, tuple(outer + spokes + inner))
    if name == "frucht":
        need(0)
        cycle = [(i, (i + 1) % 12) for i in range(12)]
        chords = set()
        for i, offset in enumerate(FRUCHT_LCF):
            j = (i + offset) % 12
            chords.add((min(i, j), max(i, j)))
        return MultiGraph(12, tuple(cycle + sorted(chords)))
    raise ValueError(
        f"unknown graph name {name!r}; expected one of empty, path, cycle, "
        "complete, theta, petersen, frucht"
    )


# -- structural operations ------------------------------------------------


def _check_edge(g: MultiGraph, e: int):
    if not (0 <= e < g.edge_count):
        raise ValueError(f"edge index {e} out of range for {g.edge_count} edges")


def delete_edge(g: MultiGraph, e: int) -> MultiGraph:
    _check_edge(g, e)
    return MultiGraph(
        g.vertex_count, g.endpoints[:e] + g.endpoints[e + 1 :]
    )


def delete_edges(g: MultiGraph, edge_ids) -> MultiGraph:
    drop = set(edge_ids)
    for e in drop:
        _check_edge(g, e)
    kept = tuple(pair for i, pair in enumerate(g.endpoints) if i not in drop)
    return MultiGraph(g.vertex_count, kept)


def contract_edge(g: MultiGraph, e: int) -> MultiGraph:
    """Identify the endpoints of a non-loop edge and drop it.

    Edges parallel to e become loops; edges sharing one endpoint re-attach.
    The identified vertex takes the smaller of the two indices.
    """
    _check_edge(g, e)
    a, b = g.endpoints[e]
    if a == b:
        raise ValueError(f"cannot contract loop edge {e}")
    return contract_edges(g, (e,))


def contract_edges(g: MultiGraph, edge_ids) -> MultiGraph:
    """Identify endpoints within each connected chunk of the selected edges
    (which must contain no loops), dropping the selected edges."""
    selected = sorted(set(edge_ids))
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in selected:
        _check_edge(g, e)
        a, b = g.endpoints[e]
        if a == b:
            raise ValueError(f"cannot contract loop edge {e}")
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    # classes ordered by their smallest member keep indices stable
    roots = sorted({find(v) for v in range(g.vertex_count)})
    new_id = {root: i for i, root in enumerate(roots)}
    drop = set(selected)
    kept = tuple(
        (new_id[find(u)], new_id[find(v)])
        for i, (u, v) in enumerate(g.endpoints)
        if i not in drop
    )
    return MultiGraph(len(roots), kept)


def _component_labels(g: MultiGraph, edge_ids=None):
    parent = list(range(g.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    if edge_ids is None:
        pairs = g.endpoints
    else:
        pairs = []
        for e in edge_ids:
            _check_edge(g, e)
            pairs.append(g.endpoints[e])
    for u, v in pairs:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return [find(v) for v in range(g.vertex_count)]


def component_count(g: MultiGraph) -> int:
    return len(set(_component_labels(g)))


def spanning_subgraph_components(g: MultiGraph, edge_ids) -> int:
    """Components of the spanning subgraph (V, Y) that keeps exactly the
    listed edges; isolated vertices count."""
    return len(set(_component_labels(g, tuple(edge_ids))))


def is_connected(g: MultiGraph) -> bool:
    return component_count(g) == 1


def component_subgraphs(g: MultiGraph):
    """Split into connected components, vertices and edges keeping their
    relative order.  Returns a list of MultiGraphs."""
    labels = _component_labels(g)
    roots = sorted(set(labels))
    if len(roots) == 1:
        return [g]
    vmaps = {root: {} for root in roots}
    for v in range(g.vertex_count):
        m = vmaps[labels[v]]
        m[v] = len(m)
    pieces = []
    for root in roots:
        vmap = vmaps[root]
        edges = tuple(
            (vmap[u], vmap[v]) for u, v in g.endpoints if labels[u] == root
        )
        pieces.append(MultiGraph(len(vmap), edges))
    return pieces


def bridges(g: MultiGraph):
    """Edge ids whose deletion increases the component count.

    Loops and parallel edges are never bridges.  Iterative lowlink DFS that
    refuses to walk back along the tree edge id, so parallel edges count as
    back edges.
    """
    n = g.vertex_count
    adj = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(g.endpoints):
        if u != v:
            adj[u].append((v, eid))
            adj[v].append((u, eid))
    disc = [-1] * n
    low = [0] * n
    out = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, in_edge, it = stack[-1]
            step = next(it, None)
            if step is None:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if low[v] > disc[pv]:
                        out.append(in_edge)
                continue
            w, eid = step
            if eid == in_edge:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, eid, iter(adj[w])))
            elif disc[w] < low[v]:
                low[v] = disc[w]
    out.sort()
    return out


def classify_edge(g: MultiGraph, e: int) -> EdgeClass:
    _check_edge(g, e)
    u, v = g.endpoints[e]
    if u == v:
        return EdgeClass.LOOP
    if e in set(bridges(g)):
        return EdgeClass.BRIDGE
    return EdgeClass.ORDINARY


def relabel(g: MultiGraph, vertex_perm, edge_perm=None) -> MultiGraph:
    """Isomorphic copy: vertex v becomes vertex_perm[v], edge e becomes
    edge id edge_perm[e] (identity if omitted)."""
    vp = tuple(vertex_perm)
    if sorted(vp) != list(range(g.vertex_count)):
        raise ValueError("vertex_perm is not a permutation of the vertices")
    if edge_perm is None:
        ep = tuple(range(g.edge_count))
    else:
        ep = tuple(edge_perm)
        if sorted(ep) != list(range(g.edge_count)):
            raise ValueError("edge_perm is not a permutation of the edges")
    new_endpoints = [None] * g.edge_count
    for e, (u, v) in enumerate(g.endpoints):
        new_endpoints[ep[e]] = (vp[u], vp[v])
    return MultiGraph(g.vertex_count, tuple(new_endpoints))


# -- exact canonical form -------------------------------------------------
#
# Isomorphic multigraphs must map to identical keys and non-isomorphic ones
# to distinct keys: the key is the minimum adjacency encoding over all vertex
# orderings consistent with iterated neighborhood refinement, computed per
# connected component (component encodings commute with isomorphism, so the
# sorted list of them is canonical for the whole graph).


def _refine(n, adj, loops, colors):
    """Iterate color refinement until the class count stops growing.

    Returns the colors from the last strictly-refining round; the cell order
    induced by signature sorting is label-independent.
    """
    ncolors = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            row = sorted(
                (colors[u], mult) for u, mult in adj[v].items()
            )
            sigs.append((colors[v], loops[v], tuple(row)))
        ranking = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new_colors = [ranking[sig] for sig in sigs]
        new_count = len(ranking)
        if new_count == ncolors:
            return colors
        colors = new_colors
        ncolors = new_count


def _component_encoding(g: MultiGraph):
    n = g.vertex_count
    loops = [0] * n
    adj = [dict() for _ in range(n)]
    for u, v in g.endpoints:
        if u == v:
            loops[u] += 1
        else:
            adj[u][v] = adj[u].get(v, 0) + 1
            adj[v][u] = adj[v].get(u, 0) + 1

    best = None

    def encode(colors):
        order = sorted(range(n), key=colors.__getitem__)
        position = [0] * n
        for i, v in enumerate(order):
            position[v] = i
        loops_vec = tuple(loops[v] for v in order)
        rows = []
        for v in order:
            iv = position[v]
            for u, mult in adj[v].items():
                iu = position[u]
                if iv < iu:
                    rows.append((iv, iu, mult))
        rows.sort()
        return (n, loops_vec, tuple(rows))

    def swappable(u, v):
        # transposing u and v is an automorphism: identical loops and
        # identical multiplicity rows away from each other
        if loops[u] != loops[v]:
            return False
        row_u = {x: m for x, m in adj[u].items() if x != v}
        row_v = {x: m for x, m in adj[v].items() if x != u}
        return row_u == row_v

    def search(colors):
        nonlocal best
        cells = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            enc = encode(colors)
            if best is None or enc < best:
                best = enc
            return
        # vertices related by a swap automorphism lead to identical leaf
        # encodings, so one representative per twin class suffices
        skip = set()
        for i, v in enumerate(target):
            if v in skip:
                continue
            for w in target[i + 1 :]:
                if w not in skip and swappable(v, w):
                    skip.add(w)
            split = [c * 2 + 1 for c in colors]
            split[v] -= 1
            search(_refine(n, adj, loops, split))

    search(_refine(n, adj, loops, [0] * n))
    return best


def canonical_key(g: MultiGraph) -> bytes:
    """Exact canonical form: equal for isomorphic multigraphs, distinct
    otherwise.  Safe as a memoization key."""
    encodings = sorted(_component_encoding(c) for c in component_subgraphs(g))
    return repr(encodings).encode()
