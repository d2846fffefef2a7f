"""Graph container, text formats, outerplanarity recognition, and decompositions.

Vertices are dense integers ``0..n-1``. Marked vertices are passed around as
indices and never stored on the graph itself. All types are immutable after
construction; every operation here is a pure function.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .errors import ParseError, StructureError, ValidationError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    n: int
    edges: frozenset[Edge]
    labels: tuple[str, ...] | None = None

    @staticmethod
    def from_edges(n: int, pairs, labels=None) -> "Graph":
        if n < 0:
            raise ValidationError("vertex count must be nonnegative")
        norm = set()
        for u, v in pairs:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add(_norm(u, v))
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValidationError("labels length must equal n")
        return Graph(n, frozenset(norm), labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        cached = self.__dict__.get("_adj")
        if cached is None:
            nbrs = [set() for _ in range(self.n)]
            for u, v in self.edges:
                nbrs[u].add(v)
                nbrs[v].add(u)
            cached = tuple(frozenset(s) for s in nbrs)
            object.__setattr__(self, "_adj", cached)
        return cached

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp, stack = [], [s]
            seen[s] = True
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, vertices) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``vertices``; returns (subgraph, new->old map)."""
        vmap = tuple(sorted(set(vertices)))
        back = {old: new for new, old in enumerate(vmap)}
        sub = [
            (back[u], back[v])
            for u, v in self.edges
            if u in back and v in back
        ]
        return Graph.from_edges(len(vmap), sub), vmap

    def relabelled(self, perm) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def to_networkx(self) -> "nx.Graph":
        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges)
        return h


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse lines of ``u v`` pairs, with an optional ``n <count>`` header."""
    header_n = None
    pairs = []
    max_idx = -1
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if seen_data or header_n is not None:
                raise ParseError(f"line {lineno}: header must come first")
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            try:
                header_n = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: malformed header {line!r}") from None
            if header_n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        seen_data = True
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex index")
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        pairs.append((u, v))
        max_idx = max(max_idx, u, v)
    n = header_n if header_n is not None else max_idx + 1
    return Graph.from_edges(n, pairs)


def _g6_read_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise ParseError("empty graph6 string")
    b0 = data[0]
    if b0 == 126:
        if len(data) >= 2 and data[1] == 126:
            chunk, rest = data[2:8], data[8:]
            if len(chunk) != 6:
                raise ParseError("truncated graph6 vertex count")
        else:
            chunk, rest = data[1:4], data[4:]
            if len(chunk) != 3:
                raise ParseError("truncated graph6 vertex count")
        n = 0
        for b in chunk:
            if not 63 <= b <= 126:
                raise ParseError(f"invalid graph6 byte {b}")
            n = (n << 6) | (b - 63)
        return n, rest
    if not 63 <= b0 <= 125:
        raise ParseError(f"invalid graph6 byte {b0}")
    return b0 - 63, data[1:]


def parse_graph6(text: str) -> Graph:
    """Decode one graph6-encoded graph (standard ASCII encoding, bit-exact)."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ParseError(f"expected exactly one graph6 line, got {len(lines)}")
    line = lines[0]
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    data = line.encode("ascii", errors="strict") if line.isascii() else None
    if data is None:
        raise ParseError("graph6 input is not ASCII")
    n, rest = _g6_read_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(rest) != nbytes:
        raise ParseError(
            f"graph6 bit vector has {len(rest)} bytes, expected {nbytes}"
        )
    bits = []
    for b in rest:
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b}")
        val = b - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ParseError("nonzero padding bits in graph6 input")
    pairs = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                pairs.append((i, j))
            k += 1
    return Graph.from_edges(n, pairs)


def iter_graph6(text: str):
    """Yield one Graph per nonblank graph6 line."""
    for ln in text.splitlines():
        ln = ln.strip()
        if ln:
            yield parse_graph6(ln)


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        head = bytes([126, 126] + [63 + ((n >> s) & 63) for s in range(30, -1, -6)])
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytes(
        63 + (b0 << 5 | b1 << 4 | b2 << 3 | b3 << 2 | b4 << 1 | b5)
        for b0, b1, b2, b3, b4, b5 in zip(*[iter(bits)] * 6)
    )
    return (head + body).decode("ascii")


# ---------------------------------------------------------------------------
# blocks and cutvertices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BCTree:
    """Biconnected components plus the block/cutvertex incidence structure."""

    blocks: tuple[frozenset[int], ...]
    cutvertices: frozenset[int]
    incidence: tuple[tuple[int, int], ...]  # (block index, cutvertex)


def blocks_and_cutvertices(g: Graph) -> BCTree:
    """Standard biconnected-component decomposition; bridges are blocks."""
    if not g.is_connected():
        raise StructureError("blocks_and_cutvertices requires a connected graph")
    if g.n == 0:
        return BCTree((), frozenset(), ())
    if g.m == 0:
        return BCTree((frozenset({0}),), frozenset(), ())

    disc = [0] * g.n  # 0 = unvisited, else 1-based discovery time
    low = [0] * g.n
    timer = itertools.count(1)
    edge_stack: list[Edge] = []
    blocks: list[frozenset[int]] = []
    cutvertices: set[int] = set()

    # iterative DFS so deep paths cannot hit the recursion limit
    root = 0
    disc[root] = low[root] = next(timer)
    root_children = 0
    stack = [(root, -1, iter(sorted(g.adj[root])))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w == parent:
                continue
            if disc[w]:
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            disc[w] = low[w] = next(timer)
            edge_stack.append((v, w))
            if v == root:
                root_children += 1
            stack.append((w, v, iter(sorted(g.adj[w]))))
            advanced = True
            break
        if advanced:
            continue
        stack.pop()
        if stack:
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                members = set()
                while True:
                    a, b = edge_stack.pop()
                    members.add(a)
                    members.add(b)
                    if (a, b) == (u, v):
                        break
                blocks.append(frozenset(members))
                if u != root or root_children > 1:
                    cutvertices.add(u)

    incidence = tuple(
        sorted(
            (bi, c)
            for bi, blk in enumerate(blocks)
            for c in sorted(blk & cutvertices)
        )
    )
    return BCTree(tuple(blocks), frozenset(cutvertices), incidence)


def bc_path(g: Graph, bct: BCTree, x: int, y: int) -> list[tuple[str, int]]:
    """Node path in the block-cutvertex tree from x's node to y's node.

    Nodes are ('b', block index) or ('c', cutvertex); a vertex that is a
    cutvertex is its own node, any other vertex is represented by its block.
    """
    adjacency: dict[tuple, list[tuple]] = {}
    for bi, c in bct.incidence:
        adjacency.setdefault(("b", bi), []).append(("c", c))
        adjacency.setdefault(("c", c), []).append(("b", bi))
    for bi in range(len(bct.blocks)):
        adjacency.setdefault(("b", bi), [])

    def node_of(v: int) -> tuple:
        if v in bct.cutvertices:
            return ("c", v)
        for bi, blk in enumerate(bct.blocks):
            if v in blk:
                return ("b", bi)
        raise StructureError(f"vertex {v} not in any block")

    src, dst = node_of(x), node_of(y)
    prev: dict[tuple, tuple | None] = {src: None}
    queue = [src]
    while queue:
        node = queue.pop(0)
        if node == dst:
            break
        for nxt in sorted(adjacency[node]):
            if nxt not in prev:
                prev[nxt] = node
                queue.append(nxt)
    if dst not in prev:
        raise StructureError(f"vertices {x} and {y} are not connected")
    path = []
    node: tuple | None = dst
    while node is not None:
        path.append(node)
        node = prev[node]
    path.reverse()
    return path


def bc_path_blocks(
    g: Graph, bct: BCTree, x: int, y: int
) -> list[tuple[int, int, int]]:
    """Blocks along the x-to-y tree path as (block index, entry, exit) triples.

    The entry of the first block is x and the exit of the last is y even when
    those vertices are themselves cutvertices.
    """
    path = bc_path(g, bct, x, y)
    out = []
    for idx, (kind, val) in enumerate(path):
        if kind != "b":
            continue
        entry = x if idx == 0 else path[idx - 1][1]
        exit_ = y if idx == len(path) - 1 else path[idx + 1][1]
        out.append((val, entry, exit_))
    if not out:
        # x and y are the same cutvertex node's vertex; callers exclude x == y,
        # so reaching here means the path is a single cutvertex, impossible.
        raise StructureError("block path is empty")
    return out


# ---------------------------------------------------------------------------
# outerplanarity
# ---------------------------------------------------------------------------

MINOR_SEARCH_MAX_N = 12


def _enum_paths(g: Graph, s: int, t: int, blocked: set):
    """All simple s-t paths whose internal vertices avoid ``blocked``."""
    path = [s]
    on_path = {s}

    def rec(v):
        for w in sorted(g.adj[v]):
            if w == t:
                yield path + [t]
            elif w not in on_path and w not in blocked:
                path.append(w)
                on_path.add(w)
                yield from rec(w)
                path.pop()
                on_path.remove(w)

    if s == t:
        return
    yield from rec(s)


def _pack_paths(g: Graph, pairs, branch: set) -> bool:
    """Can pairwise internally-disjoint paths realise all ``pairs``?"""
    used: set[int] = set()

    def rec(i):
        if i == len(pairs):
            return True
        s, t = pairs[i]
        for p in _enum_paths(g, s, t, branch | used):
            internal = set(p[1:-1])
            used.update(internal)
            if rec(i + 1):
                return True
            used.difference_update(internal)
        return False

    return rec(0)


def _has_k4_subdivision(g: Graph) -> bool:
    cand = [v for v in range(g.n) if g.degree(v) >= 3]
    for quad in itertools.combinations(cand, 4):
        branch = set(quad)
        pairs = list(itertools.combinations(quad, 2))
        if _pack_paths(g, pairs, branch):
            return True
    return False


def _has_k23_subdivision(g: Graph) -> bool:
    big = [v for v in range(g.n) if g.degree(v) >= 3]
    for a1, a2 in itertools.combinations(big, 2):
        rest = [v for v in range(g.n) if v not in (a1, a2) and g.degree(v) >= 2]
        for triple in itertools.combinations(rest, 3):
            branch = {a1, a2, *triple}
            pairs = [(a, b) for a in (a1, a2) for b in triple]
            if _pack_paths(g, pairs, branch):
                return True
    return False


def _apex_outerplanar(g: Graph) -> bool:
    """Classical criterion: g plus a universal apex vertex is planar."""
    h = g.to_networkx()
    apex = g.n
    h.add_node(apex)
    h.add_edges_from((apex, v) for v in range(g.n))
    ok, _ = nx.check_planarity(h, counterexample=False)
    return ok


def is_outerplanar(g: Graph) -> bool:
    """True iff g embeds with every vertex on the outer face.

    Components with at most 12 vertices are decided by forbidden-minor
    search (K4 and K2,3 have maximum degree 3, so minors coincide with
    subdivisions); larger components fall back to the apex-planarity
    reduction. Outerplanar graphs have at most 2n-3 edges, which prunes
    dense inputs before any search.
    """
    for comp in g.components():
        if len(comp) <= 3:
            continue
        sub, _ = g.induced(comp)
        if sub.m > 2 * sub.n - 3:
            return False
        if sub.n <= MINOR_SEARCH_MAX_N:
            if _has_k4_subdivision(sub) or _has_k23_subdivision(sub):
                return False
        elif not _apex_outerplanar(sub):
            return False
    return True


# ---------------------------------------------------------------------------
# outerplane embedding and weak dual
# ---------------------------------------------------------------------------

def _canonical_cycle(cycle: list[int]) -> tuple[int, ...]:
    """Rotate to the smallest vertex, then move toward its smaller neighbour."""
    k = len(cycle)
    i = cycle.index(min(cycle))
    fwd = cycle[i:] + cycle[:i]
    if k >= 3 and fwd[1] > fwd[-1]:
        fwd = [fwd[0]] + fwd[1:][::-1]
    return tuple(fwd)


@dataclass(frozen=True)
class OuterplaneEmbedding:
    """Unique outerplane embedding of a 2-connected outerplanar graph."""

    outer_cycle: tuple[int, ...]
    inner_faces: tuple[tuple[int, ...], ...]
    chords: frozenset[Edge]


def _hamiltonian_cycle(g: Graph) -> list[int] | None:
    n = g.n
    path = [0]
    on_path = [False] * n
    on_path[0] = True

    def rec():
        v = path[-1]
        if len(path) == n:
            return g.has_edge(v, 0)
        for w in sorted(g.adj[v]):
            if not on_path[w]:
                path.append(w)
                on_path[w] = True
                if rec():
                    return True
                path.pop()
                on_path[w] = False
        return False

    return path if rec() else None


def outerplane_embedding(g: Graph) -> OuterplaneEmbedding:
    """Outer Hamiltonian cycle plus inner faces of a 2-connected outerplanar graph."""
    if g.n < 3:
        raise StructureError("embedding requires at least 3 vertices")
    if not g.is_connected():
        raise StructureError("embedding requires a connected graph")
    if blocks_and_cutvertices(g).cutvertices:
        raise StructureError("embedding requires a 2-connected graph")
    if not is_outerplanar(g):
        raise StructureError("graph is not outerplanar")
    cycle = _hamiltonian_cycle(g)
    if cycle is None:
        raise StructureError("no Hamiltonian outer cycle found")
    outer = _canonical_cycle(cycle)

    n = g.n
    pos = {v: i for i, v in enumerate(outer)}
    # Convex placement along the outer cycle realises the embedding, so the
    # rotation at v is its neighbours ordered by cyclic position after v.
    rot = {
        v: sorted(g.adj[v], key=lambda w: (pos[w] - pos[v]) % n)
        for v in range(n)
    }
    index_in_rot = {
        v: {w: i for i, w in enumerate(rot[v])} for v in range(n)
    }

    faces = []
    seen: set[tuple[int, int]] = set()
    for u0 in range(n):
        for v0 in rot[u0]:
            if (u0, v0) in seen:
                continue
            face = []
            u, v = u0, v0
            while (u, v) not in seen:
                seen.add((u, v))
                face.append(u)
                nbrs = rot[v]
                i = index_in_rot[v][u]
                w = nbrs[(i - 1) % len(nbrs)]
                u, v = v, w
            faces.append(face)

    # The outer face is the orbit walking the Hamiltonian cycle; every other
    # orbit is an inner face.
    outer_edge_set = {
        _norm(outer[i], outer[(i + 1) % n]) for i in range(n)
    }
    inner = []
    outer_found = False
    for f in faces:
        fe = {_norm(f[i], f[(i + 1) % len(f)]) for i in range(len(f))}
        if not outer_found and len(f) == n and fe == outer_edge_set:
            outer_found = True
            continue
        inner.append(_canonical_cycle(f))
    if not outer_found:
        raise StructureError("failed to identify the outer face")
    inner.sort()
    chords = frozenset(g.edges - outer_edge_set)
    emb = OuterplaneEmbedding(outer, tuple(inner), chords)
    if len(inner) != g.m - g.n + 1:
        raise StructureError("face count violates the Euler relation")
    return emb


def face_edges(face: tuple[int, ...]) -> set[Edge]:
    return {_norm(face[i], face[(i + 1) % len(face)]) for i in range(len(face))}


def weak_dual(emb: OuterplaneEmbedding) -> Graph:
    """One vertex per inner face, edges between faces sharing a chord."""
    by_edge: dict[Edge, list[int]] = {}
    for i, f in enumerate(emb.inner_faces):
        for e in face_edges(f):
            by_edge.setdefault(e, []).append(i)
    pairs = []
    for e, fs in by_edge.items():
        if len(fs) == 2:
            pairs.append(tuple(fs))
        elif len(fs) > 2:
            raise StructureError(f"edge {e} lies on more than two inner faces")
    return Graph.from_edges(len(emb.inner_faces), pairs)


# ---------------------------------------------------------------------------
# isomorphism helpers (dedup for enumerators)
# ---------------------------------------------------------------------------

def iso_fingerprint(g: Graph) -> tuple:
    """Cheap isomorphism-invariant key; exact comparison happens per bucket."""
    degs = sorted(g.degree(v) for v in range(g.n))
    nbr_profile = sorted(
        tuple(sorted(g.degree(w) for w in g.adj[v])) for v in range(g.n)
    )
    tri = 0
    for u, v in g.edges:
        tri += len(g.adj[u] & g.adj[v])
    return (g.n, g.m, tuple(degs), tuple(nbr_profile), tri)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())
