"""Simple undirected graphs: representation, graph6 text I/O, and generators.

Vertices are 0-indexed. All graph objects are immutable after construction
and safe to share across threads. Generators (`enumerate_k_minus`,
`enumerate_trees`) yield one representative per isomorphism class and are
single-consumer streams.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence


class Graph6Error(ValueError):
    """Malformed graph6 text (bad header, wrong length, nonzero padding)."""


_G6_HEADER = ">>graph6<<"
_MAX_SHORT_ORDER = 62


class Graph:
    """Simple undirected graph with adjacency bitrows.

    `p` is the number of vertices, `edges` a sorted tuple of pairs (u, v)
    with u < v, and `adj[v]` an integer bitmask of the neighbours of v.
    """

    __slots__ = ("p", "edges", "adj")

    def __init__(self, p: int, edges: Sequence[tuple[int, int]]):
        if p < 0:
            raise ValueError("graph order must be nonnegative")
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < p and 0 <= v < p):
                raise ValueError(f"edge ({u}, {v}) out of range for order {p}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        for a, b in zip(norm, norm[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        adj = [0] * p
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adj", tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def q(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Image under the vertex permutation v -> perm[v]."""
        return Graph(self.p, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.p == other.p
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.p, self.edges))

    def __repr__(self) -> str:
        return f"Graph(p={self.p}, q={self.q})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# ---------------------------------------------------------------------------
# graph6 text format (short single-byte order encoding, order <= 62)
# ---------------------------------------------------------------------------


def parse_graph6(text: str) -> Graph:
    """Decode one line of graph6 text into a Graph.

    Accepts the optional `>>graph6<<` prefix emitted by some tools.
    Rejects bad header bytes, wrong body length, and nonzero padding bits.
    """
    line = text.strip()
    if line.startswith(_G6_HEADER):
        line = line[len(_G6_HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line")
    head = ord(line[0])
    if not 63 <= head <= 63 + _MAX_SHORT_ORDER:
        raise Graph6Error(f"bad graph6 header byte {head}; order must be <= 62")
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[1:]
    if len(body) != nbytes:
        raise Graph6Error(
            f"graph6 body has {len(body)} characters, expected {nbytes}"
        )
    bits = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"graph6 body byte {ord(ch)} out of range")
        bits = (bits << 6) | val
    pad = 6 * nbytes - nbits
    if pad and bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero graph6 padding bits")
    bits >>= pad
    edges = []
    # Bit order is column-major over the upper triangle: (0,1), (0,2), (1,2), ...
    pos = nbits
    for j in range(1, n):
        for i in range(j):
            pos -= 1
            if bits >> pos & 1:
                edges.append((i, j))
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as one line of graph6 text (order <= 62)."""
    if g.p > _MAX_SHORT_ORDER:
        raise Graph6Error(f"order {g.p} too large for single-byte graph6")
    n = g.p
    bits = 0
    nbits = n * (n - 1) // 2
    pos = nbits
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            pos -= 1
            if row >> i & 1:
                bits |= 1 << pos
    nbytes = (nbits + 5) // 6
    bits <<= 6 * nbytes - nbits
    chars = []
    for b in range(nbytes - 1, -1, -1):
        chars.append(chr(63 + (bits >> (6 * b) & 63)))
    return chr(63 + n) + "".join(chars)


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def build_cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise ValueError("cycle needs order >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def build_complete(n: int) -> Graph:
    """Complete graph K_n, n >= 1."""
    if n < 1:
        raise ValueError("complete graph needs order >= 1")
    return Graph(n, list(itertools.combinations(range(n), 2)))


def build_path(n: int) -> Graph:
    """Path P_n, n >= 1."""
    if n < 1:
        raise ValueError("path needs order >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def build_star(leaves: int) -> Graph:
    """Star K_{1,leaves} with the centre at vertex 0."""
    if leaves < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def build_prism(n: int) -> Graph:
    """Prism: the cartesian product of C_n and K_2 (2n vertices, 3n edges).

    Outer cycle on 0..n-1, inner cycle on n..2n-1, rungs i -- n+i.
    """
    if n < 3:
        raise ValueError("prism needs cycle length >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return Graph(2 * n, edges)


def build_lower_bound_witness(n: int):
    """Dense order-n graph with a labeling whose edge sums are consecutive.

    Returns (graph, labeling). The graph has size ceil(n/2)*(floor(n/2)+1);
    the labeling witnesses that graphs this dense can still have finite
    super edge-magic deficiency, which pins the lower side of the extremal
    size bracket.

    Vertices 0..a-1 form the x-side (labels 1..a with a = ceil(n/2)) and
    vertices a..n-1 the y-side (label of the j-th y-vertex is a*j + 1).
    """
    if n < 4:
        raise ValueError("witness construction needs order >= 4")
    a = (n + 1) // 2
    b = n // 2
    edges = [(i, a + j) for i in range(a) for j in range(b)]
    edges += [(0, i) for i in range(1, a)]
    edges.append((a, a + b - 1))
    labels = tuple(range(1, a + 1)) + tuple(a * j + 1 for j in range(1, b + 1))
    from .labelings import VertexLabeling

    return Graph(n, edges), VertexLabeling(labels)


# ---------------------------------------------------------------------------
# Canonical forms and isomorphism-free enumeration
# ---------------------------------------------------------------------------


def _pair_index(i: int, j: int) -> int:
    # Position of the pair (i, j), i < j, in column-major upper-triangle order.
    return j * (j - 1) // 2 + i


def _edge_mask(g: Graph) -> int:
    mask = 0
    for u, v in g.edges:
        mask |= 1 << _pair_index(u, v)
    return mask


def _refine_colors(g: Graph) -> list[int]:
    # Iterated degree refinement (colour = degree, then multiset of
    # neighbour colours), stabilised. Colour ids are assigned by sorted
    # signature so they are isomorphism-invariant.
    colors = g.degrees()
    while True:
        sigs = []
        for v in range(g.p):
            nb = sorted(colors[u] for u in g.neighbors(v))
            sigs.append((colors[v], tuple(nb)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canon_backtrack(g: Graph, refined: bool) -> list[int]:
    # Minimum row-bitstring sequence (row j = adjacency of the j-th placed
    # vertex to earlier ones) over vertex orderings, found by backtracking
    # with prefix pruning. With `refined`, orderings are restricted to the
    # colour-class blocks of the stable degree refinement (still a sound
    # canonical form: the colouring is an isomorphism invariant).
    p = g.p
    if refined:
        colors = _refine_colors(g)
    else:
        colors = [0] * p
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    slot_color = []
    for c in sorted(by_color):
        slot_color.extend([c] * len(by_color[c]))

    best_rows: list[int] | None = None
    chosen: list[int] = []
    rows: list[int] = []

    def rec(pos: int) -> None:
        nonlocal best_rows
        if pos == p:
            if best_rows is None or rows < best_rows:
                best_rows = rows.copy()
            return
        for v in by_color[slot_color[pos]]:
            if v in chosen:
                continue
            row = 0
            for k, u in enumerate(chosen):
                if g.adj[v] >> u & 1:
                    row |= 1 << k
            if best_rows is not None and rows + [row] > best_rows[: pos + 1]:
                continue
            chosen.append(v)
            rows.append(row)
            rec(pos + 1)
            chosen.pop()
            rows.pop()

    rec(0)
    assert best_rows is not None
    return best_rows


def _rows_to_mask(rows: list[int]) -> int:
    mask = 0
    for j in range(1, len(rows)):
        row = rows[j]
        for i in range(j):
            if row >> i & 1:
                mask |= 1 << _pair_index(i, j)
    return mask


def canonical_form(g: Graph, _force_refined: bool = False) -> tuple[int, int]:
    """Canonical key (order, edge bitmask); equal iff graphs are isomorphic.

    Orders <= 8 take the exact minimum adjacency bitstring over all vertex
    orderings; larger orders restrict the orderings by degree refinement
    before the backtracking minimisation. Keys embed the order, and each
    order uses one fixed objective, so equality is isomorphism either way.
    """
    refined = _force_refined or g.p > 8
    return (g.p, _rows_to_mask(_canon_backtrack(g, refined)))


def enumerate_k_minus(n: int, alpha: int) -> Iterator[Graph]:
    """All graphs K_n minus exactly alpha edges, one per isomorphism class.

    Requires n > 2*alpha. Classes are keyed by the canonical form of the
    removed-edge graph restricted to its non-isolated vertices (at most
    2*alpha of them), so the enumeration never canonicalises an order-n
    graph.
    """
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    if n <= 2 * alpha:
        raise ValueError("requires n > 2*alpha")
    if alpha > n * (n - 1) // 2:
        raise ValueError("cannot remove more edges than K_n has")
    support = 2 * alpha
    complete_edges = list(itertools.combinations(range(n), 2))
    seen = set()
    for removed in itertools.combinations(
        itertools.combinations(range(support), 2), alpha
    ):
        used = sorted({v for e in removed for v in e})
        remap = {v: i for i, v in enumerate(used)}
        small = Graph(len(used), [(remap[u], remap[v]) for u, v in removed])
        key = canonical_form(small)
        if key in seen:
            continue
        seen.add(key)
        gone = set(removed)
        yield Graph(n, [e for e in complete_edges if e not in gone])


# --- free trees -------------------------------------------------------------


def _tree_centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in adj[v]:
                if deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(layer)


def _rooted_encoding(adj: list[list[int]], root: int, parent: int) -> str:
    subs = sorted(
        _rooted_encoding(adj, u, root) for u in adj[root] if u != parent
    )
    return "(" + "".join(subs) + ")"


def tree_canonical_encoding(adj: list[list[int]]) -> str:
    """Canonical nested-parentheses encoding of a free tree (centre-rooted)."""
    centers = _tree_centers(adj)
    return min(_rooted_encoding(adj, c, -1) for c in centers)


def _tree_from_encoding(enc: str) -> Graph:
    # Rebuild the canonically-labelled tree: vertex ids in preorder, children
    # in the sorted order their encodings appear.
    edges = []
    stack: list[int] = []
    counter = 0
    for ch in enc:
        if ch == "(":
            v = counter
            counter += 1
            if stack:
                edges.append((stack[-1], v))
            stack.append(v)
        else:
            stack.pop()
    return Graph(counter, edges)


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All free trees of order n, one per isomorphism class.

    Grows trees one leaf at a time with canonical-encoding dedup; output is
    in sorted canonical-encoding order with canonical vertex numbering, so
    repeated runs are identical.
    """
    if n < 1:
        raise ValueError("tree order must be >= 1")
    level = {"()"}
    for _ in range(n - 1):
        nxt = set()
        for enc in level:
            g = _tree_from_encoding(enc)
            adj = [g.neighbors(v) for v in range(g.p)]
            for v in range(g.p):
                adj.append([v])
                adj[v].append(g.p)
                nxt.add(tree_canonical_encoding(adj))
                adj[v].pop()
                adj.pop()
        level = nxt
    for enc in sorted(level):
        yield _tree_from_encoding(enc)


def is_connected(g: Graph) -> bool:
    if g.p == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        v = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        grow = g.adj[v] & ~seen
        seen |= grow
        frontier |= grow
    return seen == (1 << g.p) - 1


def is_tree(g: Graph) -> bool:
    return g.p >= 1 and g.q == g.p - 1 and is_connected(g)


def is_caterpillar(g: Graph) -> bool:
    """True iff deleting every leaf of the tree leaves a (possibly empty) path."""
    if not is_tree(g):
        raise ValueError("caterpillar test requires a tree")
    if g.p <= 2:
        return True
    spine = [v for v in range(g.p) if g.degree(v) >= 2]
    spine_mask = 0
    for v in spine:
        spine_mask |= 1 << v
    return all((g.adj[v] & spine_mask).bit_count() <= 2 for v in spine)


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Two-colouring as a pair of vertex bitmasks, or None if not bipartite.

    Within each connected component the side containing its smallest vertex
    goes to the first mask, so the result is deterministic.
    """
    color = [-1] * g.p
    side = [0, 0]
    for s in range(g.p):
        if color[s] != -1:
            continue
        color[s] = 0
        side[0] |= 1 << s
        queue = [s]
        while queue:
            v = queue.pop()
            for u in g.neighbors(v):
                if color[u] == -1:
                    color[u] = 1 - color[v]
                    side[color[u]] |= 1 << u
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return side[0], side[1]


# ---------------------------------------------------------------------------
# Family tags (CLI plumbing)
# ---------------------------------------------------------------------------

_FAMILY_ARITY = {
    "cycle": 1,
    "complete": 1,
    "prism": 1,
    "lower-bound-witness": 1,
    "complete-minus-alpha": 2,
    "tree-enumeration": 1,
    "custom": 0,
}


class GraphFamilyTag:
    """A named graph family plus integer parameters; validates arity."""

    __slots__ = ("tag", "parameters")

    def __init__(self, tag: str, parameters: Sequence[int] = ()):
        if tag not in _FAMILY_ARITY:
            raise ValueError(f"unknown family tag {tag!r}")
        if len(parameters) != _FAMILY_ARITY[tag]:
            raise ValueError(
                f"family {tag!r} takes {_FAMILY_ARITY[tag]} parameter(s), "
                f"got {len(parameters)}"
            )
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "parameters", tuple(parameters))

    def __setattr__(self, name, value):
        raise AttributeError("GraphFamilyTag is immutable")

    def build(self) -> list[Graph]:
        """Materialise the family members (singleton list for single graphs)."""
        tag, params = self.tag, self.parameters
        if tag == "cycle":
            return [build_cycle(params[0])]
        if tag == "complete":
            return [build_complete(params[0])]
        if tag == "prism":
            return [build_prism(params[0])]
        if tag == "lower-bound-witness":
            return [build_lower_bound_witness(params[0])[0]]
        if tag == "complete-minus-alpha":
            return list(enumerate_k_minus(params[0], params[1]))
        if tag == "tree-enumeration":
            return list(enumerate_trees(params[0]))
        raise ValueError("custom family carries no generator")
