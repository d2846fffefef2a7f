"""Structural constructions on marked outerplanar graphs.

Fundamental x-y subgraphs, shrinking along separating chords, 2-connections,
and typing of non-triangular inner faces. These are the reductions the
classifier dispatches on; every one of them preserves the colour relation of
the marked pair and the relevant monomial patterns of the graph polynomial.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import ClassificationError, ContractError, StructureError, ValidationError
from .graphs import (
    Graph,
    OuterplaneEmbedding,
    _apex_outerplanar,
    bc_path_blocks,
    blocks_and_cutvertices,
    face_edges,
    is_outerplanar,
    outerplane_embedding,
    weak_dual,
)


@dataclass(frozen=True)
class FundamentalSubgraph:
    """A fundamental x-y subgraph, reindexed, with its injection into the parent."""

    graph: Graph
    vertex_map: tuple[int, ...]  # new index -> parent index
    x: int
    y: int

    def to_json_obj(self) -> dict:
        return {
            "vertices": list(self.vertex_map),
            "edges": [
                [self.vertex_map[u], self.vertex_map[v]]
                for u, v in self.graph.sorted_edges()
            ],
            "x": self.vertex_map[self.x],
            "y": self.vertex_map[self.y],
        }


class FaceKind(enum.Enum):
    TYPE0 = "Type0"
    TYPE1 = "Type1"
    TYPE2 = "Type2"


@dataclass(frozen=True)
class FaceType:
    """A typed non-triangular inner face with its anchor vertices.

    Type 0 anchors are (a, b), the endpoints of the chord shared with the one
    neighbouring face. Type 1 anchors are (apex, b, c) where both neighbouring
    chords meet at the apex. Type 2 anchors are (a, b, c, d) with ab the chord
    toward x, cd the chord toward y, and a paired with c along one boundary
    arc of the face (b with d along the other).
    """

    face: tuple[int, ...]
    kind: FaceKind
    anchors: tuple[int, ...]

    def to_json_obj(self) -> dict:
        return {
            "face": list(self.face),
            "kind": self.kind.value,
            "anchors": list(self.anchors),
        }


# ---------------------------------------------------------------------------
# weak-dual face paths
# ---------------------------------------------------------------------------

def dual_face_path(emb: OuterplaneEmbedding, x: int, y: int) -> list[int]:
    """Inner-face indices along the weak-dual shortest path from x's faces to y's.

    The faces containing a vertex form a subtree of the weak dual, so the
    connecting path between the two subtrees is unique.
    """
    faces_x = [i for i, f in enumerate(emb.inner_faces) if x in f]
    faces_y = [i for i, f in enumerate(emb.inner_faces) if y in f]
    if not faces_x or not faces_y:
        raise StructureError("marked vertex lies on no inner face")
    common = sorted(set(faces_x) & set(faces_y))
    if common:
        return [common[0]]
    dual = weak_dual(emb)
    prev: dict[int, int | None] = {i: None for i in faces_x}
    queue = sorted(faces_x)
    target = set(faces_y)
    hit = None
    while queue:
        fi = queue.pop(0)
        if fi in target:
            hit = fi
            break
        for fj in sorted(dual.adj[fi]):
            if fj not in prev:
                prev[fj] = fi
                queue.append(fj)
    if hit is None:
        raise StructureError("weak dual is not connected")
    path = []
    node: int | None = hit
    while node is not None:
        path.append(node)
        node = prev[node]
    path.reverse()
    return path


# ---------------------------------------------------------------------------
# fundamental subgraphs
# ---------------------------------------------------------------------------

def _fundamental_vertices_2connected(block: Graph, a: int, b: int) -> set[int]:
    """Vertex set of the fundamental a-b subgraph inside a 2-connected graph."""
    if block.has_edge(a, b):
        return {a, b}
    emb = outerplane_embedding(block)
    path = dual_face_path(emb, a, b)
    verts: set[int] = set()
    for fi in path:
        verts.update(emb.inner_faces[fi])
    return verts


def fundamental_subgraph(g: Graph, x: int, y: int) -> FundamentalSubgraph:
    """The fundamental x-y subgraph of a connected outerplanar graph.

    Within one block: the induced subgraph on the faces along the weak-dual
    shortest path between the faces holding x and y (a single edge when x and
    y are adjacent). Across blocks: the block-cutvertex tree path, terminal
    blocks taken whole, every intermediate block replaced by its own
    fundamental subgraph between its two path cutvertices.
    """
    if x == y:
        raise ValidationError("marked vertices must differ")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValidationError("marked vertex out of range")
    comp = next((c for c in g.components() if x in c), None)
    if comp is None or y not in comp:
        raise StructureError("marked vertices lie in different components")
    sub, cmap = g.induced(comp)
    back = {old: new for new, old in enumerate(cmap)}
    cx, cy = back[x], back[y]
    if not is_outerplanar(sub):
        raise StructureError("graph is not outerplanar")

    if sub.has_edge(cx, cy):
        keep = {cx, cy}
    else:
        bct = blocks_and_cutvertices(sub)
        triples = bc_path_blocks(sub, bct, cx, cy)
        if len(triples) == 1:
            bi, _, _ = triples[0]
            blk, bmap = sub.induced(bct.blocks[bi])
            bback = {old: new for new, old in enumerate(bmap)}
            local = _fundamental_vertices_2connected(blk, bback[cx], bback[cy])
            keep = {bmap[v] for v in local}
        else:
            keep = set()
            for i, (bi, entry, exit_) in enumerate(triples):
                bverts = bct.blocks[bi]
                if i == 0 or i == len(triples) - 1:
                    keep.update(bverts)
                    continue
                blk, bmap = sub.induced(bverts)
                bback = {old: new for new, old in enumerate(bmap)}
                if blk.has_edge(bback[entry], bback[exit_]):
                    keep.update({entry, exit_})
                else:
                    local = _fundamental_vertices_2connected(
                        blk, bback[entry], bback[exit_]
                    )
                    keep.update(bmap[v] for v in local)

    fsub, fmap = sub.induced(keep)
    vmap = tuple(cmap[v] for v in fmap)
    fback = {old: new for new, old in enumerate(fmap)}
    return FundamentalSubgraph(fsub, vmap, fback[cx], fback[cy])


def is_xy_fundamental(g: Graph, x: int, y: int) -> bool:
    f = fundamental_subgraph(g, x, y)
    return f.graph.n == g.n and f.graph.m == g.m


# ---------------------------------------------------------------------------
# shrinking near-triangulations along separating chords
# ---------------------------------------------------------------------------

def _require_near_triangulation(g: Graph) -> OuterplaneEmbedding:
    emb = outerplane_embedding(g)
    for f in emb.inner_faces:
        if len(f) != 3:
            raise StructureError(f"non-triangular inner face {f}")
    return emb


def shrink_with_log(g: Graph, x: int, y: int):
    """Shrink a 2-connected near-triangulation along chords separating both marks.

    Returns ``(core_vertices, log)`` where ``core_vertices`` is the surviving
    vertex set (in g's indexing) and ``log`` lists removed pieces as
    ``(a, b, piece_vertices)``: the component beyond chord ab. The product of
    the core polynomial and the piece polynomials (each piece taken with a and
    b but without the edge ab) is the polynomial of g.
    """
    if x == y:
        raise ValidationError("marked vertices must differ")
    _require_near_triangulation(g)

    log: list[tuple[int, int, frozenset[int]]] = []
    if g.has_edge(x, y):
        others = sorted(set(range(g.n)) - {x, y})
        rest, rmap = g.induced(others)
        for comp in rest.components():
            log.append((x, y, frozenset(rmap[v] for v in comp)))
        return frozenset({x, y}), log

    alive = set(range(g.n))
    while True:
        cur, cmap = g.induced(alive)
        back = {old: new for new, old in enumerate(cmap)}
        emb = outerplane_embedding(cur)
        pos = {v: i for i, v in enumerate(emb.outer_cycle)}
        n = cur.n
        cx, cy = back[x], back[y]
        removed = None
        for a, b in sorted(emb.chords):
            ia, ib = sorted((pos[a], pos[b]))
            inside = {emb.outer_cycle[i] for i in range(ia + 1, ib)}
            outside = {emb.outer_cycle[i % n] for i in range(ib + 1, ia + n)}
            if inside and cx not in inside and cy not in inside:
                removed = (a, b, inside)
                break
            if outside and cx not in outside and cy not in outside:
                removed = (a, b, outside)
                break
        if removed is None:
            return frozenset(cmap), log
        a, b, side = removed
        log.append((cmap[a], cmap[b], frozenset(cmap[v] for v in side)))
        alive = {cmap[v] for v in range(n) if v not in side}


def shrink_separating_chords(g: Graph, x: int, y: int) -> Graph:
    """Remove every chord-separated component avoiding both marked vertices.

    The result, reindexed with vertex order preserved, is the edge xy when the
    marks are adjacent and otherwise a near-triangulation whose only degree-2
    vertices are x and y.
    """
    core, _ = shrink_with_log(g, x, y)
    out, omap = g.induced(core)
    back = {old: new for new, old in enumerate(omap)}
    if out.n > 2:
        deg2 = {v for v in range(out.n) if out.degree(v) == 2}
        if deg2 != {back[x], back[y]}:
            raise ContractError(
                "shrinking left degree-2 vertices other than the marked pair"
            )
    return out


# ---------------------------------------------------------------------------
# 2-connections
# ---------------------------------------------------------------------------

def _bridge_chains(g: Graph, bct) -> list[tuple[int, int, frozenset[int]]]:
    """Maximal chains of bridge blocks as (endpoint, endpoint, chain vertices)."""
    bridge_ids = [i for i, blk in enumerate(bct.blocks) if len(blk) == 2]
    if not bridge_ids:
        return []
    # Union bridges sharing a cutvertex into chains.
    parent = {i: i for i in bridge_ids}

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_cut: dict[int, list[int]] = {}
    for i in bridge_ids:
        for v in bct.blocks[i] & bct.cutvertices:
            by_cut.setdefault(v, []).append(i)
    for v, ids in by_cut.items():
        # a cutvertex shared by a bridge and a big block ends a chain there
        if len(ids) >= 2:
            if any(
                v in bct.blocks[bi] and len(bct.blocks[bi]) > 2
                for bi in range(len(bct.blocks))
            ):
                continue
            for other in ids[1:]:
                parent[find(other)] = find(ids[0])
    chains: dict[int, set[int]] = {}
    for i in bridge_ids:
        chains.setdefault(find(i), set()).add(i)

    out = []
    for ids in chains.values():
        verts: set[int] = set()
        for i in ids:
            verts.update(bct.blocks[i])
        degree_in_chain = {v: 0 for v in verts}
        for i in ids:
            for v in bct.blocks[i]:
                degree_in_chain[v] += 1
        tips = sorted(v for v, d in degree_in_chain.items() if d == 1)
        if len(tips) != 2:
            raise ContractError("bridge structure is not a chain; input not fundamental")
        out.append((tips[0], tips[1], frozenset(verts)))
    out.sort()
    return out


def _blocks_at(bct, v: int) -> list[int]:
    return [i for i, blk in enumerate(bct.blocks) if v in blk]


def _try_attach(g: Graph, a: int, b: int) -> Graph | None:
    """g plus a new length-2 path from a to b, if outerplanarity survives."""
    z = g.n
    cand = Graph.from_edges(g.n + 1, list(g.edges) + [(a, z), (b, z)])
    # apex-planarity is the fast equivalent of the public recognition routine
    if all(
        _apex_outerplanar(cand.induced(c)[0]) if len(c) > 3 else True
        for c in cand.components()
    ):
        return cand
    return None


def two_connection(g: Graph) -> Graph:
    """A 2-connected outerplanar supergraph built by attaching length-2 paths.

    One path per cutvertex that is not a bridge endpoint (joining neighbours
    from its two blocks), one path per bridge chain (joining the neighbours
    beyond the chain's endpoints, or a degree-1 endpoint itself), and for a
    bare path its two endpoints. Among eligible attachment pairs the
    lexicographically smallest that preserves outerplanarity is chosen, so the
    output is deterministic. A 2-connected input is returned unchanged.
    """
    if not g.is_connected():
        raise StructureError("two_connection requires a connected graph")
    if not is_outerplanar(g):
        raise StructureError("two_connection requires an outerplanar graph")
    if g.n <= 1:
        return g
    bct = blocks_and_cutvertices(g)
    if not bct.cutvertices and len(bct.blocks) == 1 and len(bct.blocks[0]) >= 3:
        return g

    current = g
    chains = _bridge_chains(g, bct)
    chain_vertices = set()
    for _, _, verts in chains:
        chain_vertices.update(verts)

    todo: list[tuple[str, tuple]] = []
    for c in sorted(bct.cutvertices):
        if any(len(bct.blocks[i]) == 2 for i in _blocks_at(bct, c)):
            continue  # bridge endpoints are handled by their chain
        todo.append(("cut", (c,)))
    for tip1, tip2, verts in chains:
        todo.append(("chain", (tip1, tip2, verts)))

    for kind, args in todo:
        if kind == "cut":
            (c,) = args
            blocks_here = _blocks_at(bct, c)
            if len(blocks_here) != 2:
                raise ContractError(
                    "cutvertex with more than two blocks; input not fundamental"
                )
            side1 = sorted(g.adj[c] & bct.blocks[blocks_here[0]])
            side2 = sorted(g.adj[c] & bct.blocks[blocks_here[1]])
            candidates = sorted(
                tuple(sorted((u, w))) for u in side1 for w in side2
            )
        else:
            tip1, tip2, verts = args
            opts1 = (
                [tip1]
                if g.degree(tip1) == 1
                else sorted(g.adj[tip1] - verts)
            )
            opts2 = (
                [tip2]
                if g.degree(tip2) == 1
                else sorted(g.adj[tip2] - verts)
            )
            candidates = sorted(
                tuple(sorted((u, w))) for u in opts1 for w in opts2 if u != w
            )
        attached = None
        for u, w in candidates:
            attached = _try_attach(current, u, w)
            if attached is not None:
                break
        if attached is None:
            raise ContractError(
                "no outerplanarity-preserving attachment exists; "
                "this violates the 2-connection guarantee for fundamental inputs"
            )
        current = attached

    final_bct = blocks_and_cutvertices(current)
    if final_bct.cutvertices or (current.n >= 3 and len(final_bct.blocks) != 1):
        raise ContractError("2-connection failed to produce a 2-connected graph")
    if not is_outerplanar(current):
        raise ContractError("2-connection destroyed outerplanarity")
    return current


# ---------------------------------------------------------------------------
# face typing
# ---------------------------------------------------------------------------

def _shared_chord(f1: tuple[int, ...], f2: tuple[int, ...]) -> tuple[int, int]:
    shared = face_edges(f1) & face_edges(f2)
    if len(shared) != 1:
        raise ClassificationError("adjacent faces must share exactly one chord")
    return next(iter(shared))


def _arc_mate(face: tuple[int, ...], a: int, b: int, targets: set[int]) -> int:
    """First of ``targets`` met walking the face cycle from a away from b."""
    k = len(face)
    ia = face.index(a)
    step = 1 if face[(ia + 1) % k] != b else -1
    i = ia
    while True:
        i = (i + step) % k
        v = face[i]
        if v in targets:
            return v
        if v == b:
            raise ClassificationError("face arc walk failed")


def classify_faces(
    emb: OuterplaneEmbedding, x: int, y: int
) -> tuple[FaceType, ...]:
    """Type every non-triangular inner face of an xy-fundamental embedding.

    Type 0: the face holds exactly one marked vertex (off the shared chord)
    and is an end of the dual path. Type 1: an internal face whose two
    neighbouring chords share an apex vertex. Type 2: an internal face whose
    neighbouring chords are disjoint edges. Shapes outside this taxonomy
    raise ClassificationError verbatim rather than being guessed.
    """
    faces = emb.inner_faces
    path = dual_face_path(emb, x, y)
    if sorted(set(path)) != sorted(range(len(faces))):
        raise ClassificationError(
            "embedding is not xy-fundamental: inner faces lie off the dual path"
        )
    out = []
    for posn, fi in enumerate(path):
        face = faces[fi]
        if len(face) == 3:
            continue
        has_x, has_y = x in face, y in face
        if has_x and has_y:
            raise ClassificationError(
                "uncovered shape: one non-triangular face contains both marked vertices"
            )
        if has_x or has_y:
            if posn == 0 and len(path) > 1:
                nb = faces[path[1]]
            elif posn == len(path) - 1 and len(path) > 1:
                nb = faces[path[posn - 1]]
            else:
                raise ClassificationError(
                    "uncovered shape: marked vertex on an internal non-triangular face"
                )
            a, b = sorted(_shared_chord(face, nb))
            marked = x if has_x else y
            if marked in (a, b):
                raise ClassificationError(
                    "uncovered shape: marked vertex lies on the shared chord"
                )
            out.append(FaceType(face, FaceKind.TYPE0, (a, b)))
            continue
        if posn == 0 or posn == len(path) - 1:
            raise ClassificationError(
                "uncovered shape: end face of the dual path misses its marked vertex"
            )
        e_prev = set(_shared_chord(face, faces[path[posn - 1]]))
        e_next = set(_shared_chord(face, faces[path[posn + 1]]))
        common = e_prev & e_next
        if len(common) == 1:
            apex = next(iter(common))
            b = next(iter(e_prev - common))
            c = next(iter(e_next - common))
            out.append(FaceType(face, FaceKind.TYPE1, (apex, b, c)))
        elif not common:
            a = min(e_prev)
            b = max(e_prev)
            c = _arc_mate(face, a, b, e_next)
            d = next(iter(e_next - {c}))
            out.append(FaceType(face, FaceKind.TYPE2, (a, b, c, d)))
        else:
            raise ClassificationError("neighbouring chords coincide")
    return tuple(out)
