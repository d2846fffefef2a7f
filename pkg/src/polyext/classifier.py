"""Decision procedures for the extendability trichotomy.

Two independent routes decide the class of a marked pair (x, y):

* the structural route walks the fundamental subgraph, its 2-connection and
  face types, composing forced-colour relations along chains of blocks,
  apexes and segments;
* the polynomial oracle looks for capped monomial witnesses of each shape
  (exponent of x and y at most 1, all others at most 2).

The two must agree; a disagreement raises DiscrepancyError and is the most
interesting output this package can produce. The colour relation computed by
exhaustive enumeration rides along in every report as ground truth for the
verification suites.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .coloring import (
    ColorRelation,
    Verdict,
    color_relation,
    unique_three_coloring,
)
from .errors import (
    ClassificationError,
    ContractError,
    DiscrepancyError,
    StructureError,
    ValidationError,
)
from .graphs import (
    Graph,
    bc_path_blocks,
    blocks_and_cutvertices,
    encode_graph6,
    is_outerplanar,
    outerplane_embedding,
)
from .polynomial import (
    MultiPoly,
    coefficient,
    find_monomial,
    graph_polynomial,
    standard_caps,
)
from .structure import (
    FaceKind,
    FundamentalSubgraph,
    classify_faces,
    dual_face_path,
    fundamental_subgraph,
    shrink_with_log,
)


class Case(enum.Enum):
    I = "I"
    II = "II"
    III = "III"


class Method(enum.Enum):
    STRUCTURAL = "Structural"
    ORACLE = "PolynomialOracle"
    BOTH = "Both"


class Rel(enum.Enum):
    """Forced relation of a vertex pair over all proper 3-colourings."""

    EQ = "equal"
    DIFF = "different"
    FREE = "free"


@dataclass(frozen=True)
class EtaSignature:
    eta1: int
    eta2: int
    eta3: int

    def as_multiset(self) -> tuple[int, ...]:
        return tuple(sorted((self.eta1, self.eta2, self.eta3)))


@dataclass(frozen=True)
class ExtendabilityReport:
    case: Case
    beta: int
    gamma: int
    witness: tuple[tuple[int, ...], int] | None
    method: Method
    color_relation: ColorRelation

    def to_json_obj(self) -> dict:
        wit = None
        if self.witness is not None:
            wit = {"exps": list(self.witness[0]), "coef": self.witness[1]}
        return {
            "case": self.case.value,
            "beta": self.beta,
            "gamma": self.gamma,
            "witness": wit,
            "method": self.method.value,
            "colorRelation": self.color_relation.verdict.value,
        }


_CASE_FROM_REL = {Rel.EQ: Case.I, Rel.DIFF: Case.II, Rel.FREE: Case.III}
_REL_FROM_VERDICT = {
    Verdict.FORCED_EQUAL: Rel.EQ,
    Verdict.FORCED_DIFFERENT: Rel.DIFF,
    Verdict.FREE: Rel.FREE,
}


def case_from_verdict(verdict: Verdict) -> Case:
    return _CASE_FROM_REL[_REL_FROM_VERDICT[verdict]]


# ---------------------------------------------------------------------------
# eta signatures of snakes
# ---------------------------------------------------------------------------

def _validate_snake(g: Graph, x: int, y: int):
    emb = outerplane_embedding(g)
    for f in emb.inner_faces:
        if len(f) != 3:
            raise StructureError("eta_signature requires a near-triangulation")
    if g.n > 3:
        deg2 = {v for v in range(g.n) if g.degree(v) == 2}
        if deg2 != {x, y}:
            raise StructureError(
                "eta_signature requires degree-2 vertices exactly at the marked pair"
            )


def eta_signature(g: Graph, x: int, y: int, z: int) -> EtaSignature:
    """Coefficients of the three distinguished monomials of a snake.

    With caps (x: 1, y: 2, z: 2, rest: 2), eta_k is the coefficient of the
    monomial x^1 (rest)^2 y^(k-1) z^(3-k) for k = 1, 2, 3. For a snake (or a
    triangle) the triple is always a permutation of (-1, 0, 1) under the
    canonical orientation.
    """
    if len({x, y, z}) != 3:
        raise ValidationError("x, y, z must be three distinct vertices")
    if z not in g.adj[y]:
        raise StructureError("z must be a neighbour of y")
    _validate_snake(g, x, y)
    caps: list[int | None] = [2] * g.n
    caps[x] = 1
    p = graph_polynomial(g, caps)
    base = [2] * g.n
    base[x] = 1
    etas = []
    for ye, ze in ((0, 2), (1, 1), (2, 0)):
        vec = base.copy()
        vec[y] = ye
        vec[z] = ze
        etas.append(coefficient(p, vec))
    return EtaSignature(*etas)


def smallest_eta_z(g: Graph, x: int, y: int) -> int:
    """Deterministic choice of z: the smallest eligible neighbour of y."""
    for z in sorted(g.adj[y]):
        if z != x:
            return z
    raise StructureError("y has no eligible neighbour for z")


# ---------------------------------------------------------------------------
# structural relation machinery
# ---------------------------------------------------------------------------

def _near_tri_relation(g: Graph, x: int, y: int) -> Rel:
    """Forced relation inside a 2-connected near-triangulation."""
    if g.has_edge(x, y):
        return Rel.DIFF
    emb = outerplane_embedding(g)
    cc = unique_three_coloring(g, emb)
    return Rel.EQ if cc.same(x, y) else Rel.DIFF


def _compose_chain(rels) -> Rel:
    """Relation of the endpoints of a chain of independently colourable pieces.

    Pieces meet only at shared connector vertices, so their colourings compose
    freely: the pair is forced equal iff every piece forces equality, forced
    different iff exactly one piece forces difference and the rest equality.
    """
    if any(r is Rel.FREE for r in rels):
        return Rel.FREE
    diffs = sum(1 for r in rels if r is Rel.DIFF)
    if diffs == 0:
        return Rel.EQ
    if diffs == 1:
        return Rel.DIFF
    return Rel.FREE


def _relation_in_subset(g: Graph, verts, u: int, v: int) -> Rel | None:
    if u == v:
        return Rel.EQ
    sub, vmap = g.induced(verts)
    back = {old: new for new, old in enumerate(vmap)}
    return _structural_relation(sub, back[u], back[v])


def _segment_relation(g: Graph, seg_verts, p: int, q: int) -> Rel:
    """Relation across a run of triangular faces between connectors p and q."""
    if p == q:
        return Rel.EQ
    sub, vmap = g.induced(seg_verts)
    back = {old: new for new, old in enumerate(vmap)}
    return _near_tri_relation(sub, back[p], back[q])


def _apex_chain_relation(
    g: Graph, emb, path, typed_by_face, x: int, y: int
) -> Rel | None:
    """Theorem-style chain counting when every non-triangular face has an apex.

    Removing each apex face's exclusive vertices would turn the apex into a
    cutvertex, so the graph behaves like a chain of near-triangulations joined
    at x, the apexes in dual order, and y.
    """
    connectors = [x]
    segments: list[list[int]] = [[]]
    for fi in path:
        t = typed_by_face.get(fi)
        if t is None:
            segments[-1].append(fi)
        else:
            connectors.append(t.anchors[0])
            segments.append([])
    connectors.append(y)

    rels = []
    faces = emb.inner_faces
    for (p, q), seg in zip(zip(connectors, connectors[1:]), segments):
        if p == q:
            rels.append(Rel.EQ)
            continue
        if not seg:
            # consecutive apex faces share a chord, whose endpoints are the
            # two apexes; distinct apexes are therefore adjacent
            rels.append(Rel.DIFF)
            continue
        verts: set[int] = set()
        for fi in seg:
            verts.update(faces[fi])
        if p not in verts or q not in verts:
            return None
        rels.append(_segment_relation(g, verts, p, q))
    return _compose_chain(rels)


def _structural_relation_block(b: Graph, a: int, c: int) -> Rel | None:
    """Relation inside one 2-connected block (or a single edge)."""
    if b.has_edge(a, c):
        return Rel.DIFF
    fund = fundamental_subgraph(b, a, c)
    fg, fa, fc = fund.graph, fund.x, fund.y
    try:
        emb = outerplane_embedding(fg)
    except StructureError:
        return None
    try:
        typed = classify_faces(emb, fa, fc)
    except ClassificationError:
        return None
    if not typed:
        return _near_tri_relation(fg, fa, fc)

    path = dual_face_path(emb, fa, fc)
    faces = emb.inner_faces
    typed_by_face = {faces.index(t.face): t for t in typed}

    if all(t.kind is FaceKind.TYPE1 for t in typed):
        return _apex_chain_relation(fg, emb, path, typed_by_face, fa, fc)

    non1 = [t for t in typed if t.kind is not FaceKind.TYPE1]
    if len(non1) >= 2:
        # two or more faces of type 0/2: the forcing conditions can always be
        # dodged by recolouring around one of them
        return Rel.FREE
    t = non1[0]
    fi = faces.index(t.face)
    posn = path.index(fi)
    before: set[int] = set()
    for j in path[:posn]:
        before.update(faces[j])
    after: set[int] = set()
    for j in path[posn + 1:]:
        after.update(faces[j])

    if t.kind is FaceKind.TYPE0:
        a1, a2 = t.anchors
        marked_here, far = (fa, fc) if fa in t.face else (fc, fa)
        remainder = before if posn != 0 else after
        conds = []
        for anchor in (a1, a2):
            if not fg.has_edge(marked_here, anchor):
                conds.append(False)
                continue
            r = _relation_in_subset(fg, remainder, anchor, far)
            if r is None:
                return None
            conds.append(r is Rel.EQ)
        return Rel.DIFF if any(conds) else Rel.FREE

    # type 2: anchors (a, b) on the x-side chord, (c, d) on the y-side,
    # a paired with c along one boundary arc and b with d along the other
    va, vb, vc, vd = t.anchors
    for branch in ((va, vc), (vb, vd)):
        p, q = branch
        if not fg.has_edge(p, q):
            continue
        r1 = _relation_in_subset(fg, before, fa, p)
        r2 = _relation_in_subset(fg, after, fc, q)
        if r1 is None or r2 is None:
            return None
        if r1 is Rel.EQ and r2 is Rel.EQ:
            return Rel.DIFF
    return Rel.FREE


def _structural_relation(g: Graph, x: int, y: int) -> Rel | None:
    """Structural forced-relation of a connected marked pair, None if uncovered."""
    fund = fundamental_subgraph(g, x, y)
    fg, fx, fy = fund.graph, fund.x, fund.y
    if fg.n == 2:
        return Rel.DIFF
    bct = blocks_and_cutvertices(fg)
    if not bct.cutvertices:
        return _structural_relation_block(fg, fx, fy)
    rels = []
    for bi, entry, exit_ in bc_path_blocks(fg, bct, fx, fy):
        sub, vmap = fg.induced(bct.blocks[bi])
        back = {old: new for new, old in enumerate(vmap)}
        r = _structural_relation_block(sub, back[entry], back[exit_])
        if r is None:
            return None
        rels.append(r)
    return _compose_chain(rels)


# ---------------------------------------------------------------------------
# oracle route and witness construction
# ---------------------------------------------------------------------------

_PATTERN_ORDER = {
    Case.III: [(0, 0)],
    Case.II: [(0, 1), (1, 0)],
    Case.I: [(1, 1)],
}


def _pattern_find(p: MultiPoly, x: int, y: int, beta: int, gamma: int):
    exact: list[int | None] = [None] * p.ambient_n
    exact[x] = beta
    exact[y] = gamma
    bounds = [1 if v in (x, y) else 2 for v in range(p.ambient_n)]
    return find_monomial(p, bounds, exact)


def oracle_case(g: Graph, x: int, y: int, poly: MultiPoly | None = None) -> Case:
    """Case read off capped monomial witnesses: the minimal pattern present.

    A (0,0) witness certifies case III, otherwise a witness with exponent sum
    1 on the marked pair certifies case II, otherwise (1,1) certifies case I.
    """
    if poly is None:
        poly = graph_polynomial(g, standard_caps(g.n, x, y))
    for case in (Case.III, Case.II, Case.I):
        for beta, gamma in _PATTERN_ORDER[case]:
            if _pattern_find(poly, x, y, beta, gamma) is not None:
                return case
    raise ContractError(
        "no admissible monomial exists; the trichotomy is violated"
    )


def _zero_anchored_term(g: Graph, verts, anchors):
    """A capped monomial of the induced piece avoiding its anchor vertices.

    The piece is taken with its anchors but without the edge between them when
    the anchors are an adjacent pair. Returns (exps over g, coef) or None.
    """
    sub, vmap = g.induced(set(verts) | set(anchors))
    back = {old: new for new, old in enumerate(vmap)}
    if len(anchors) == 2:
        a, b = anchors
        edges = [e for e in sub.edges if e != tuple(sorted((back[a], back[b])))]
        sub = Graph.from_edges(sub.n, edges)
    caps: list[int | None] = [2] * sub.n
    for a in anchors:
        caps[back[a]] = 0
    p = graph_polynomial(sub, caps)
    hit = find_monomial(p, caps)
    if hit is None:
        return None
    exps = [0] * g.n
    for i, e in enumerate(hit[0]):
        exps[vmap[i]] = e
    return exps, hit[1]


def _lift_witness(g: Graph, fund: FundamentalSubgraph, f_exps, f_coef):
    """Extend a fundamental-subgraph witness to the whole graph.

    Hanging pieces attach to the fundamental subgraph either at one cutvertex
    or along one chord; each contributes a capped monomial with exponent zero
    at the attachment, and coefficients multiply (gluing multiplicativity).
    Returns (exps, coef) or None when some piece has no such monomial.
    """
    exps = [0] * g.n
    for i, e in enumerate(f_exps):
        exps[fund.vertex_map[i]] = e
    coef = f_coef
    inside = set(fund.vertex_map)
    outside = sorted(set(range(g.n)) - inside)
    if not outside:
        return exps, coef
    rest, rmap = g.induced(outside)
    for comp in rest.components():
        comp_orig = {rmap[v] for v in comp}
        attach = sorted(
            {
                w
                for v in comp_orig
                for w in g.adj[v]
                if w in inside
            }
        )
        if len(attach) == 1:
            piece = _zero_anchored_term(g, comp_orig, (attach[0],))
        elif len(attach) == 2 and g.has_edge(*attach):
            piece = _zero_anchored_term(g, comp_orig, tuple(attach))
        else:
            return None
        if piece is None:
            return None
        p_exps, p_coef = piece
        for v, e in enumerate(p_exps):
            exps[v] += e
        coef *= p_coef
    return exps, coef


def _oracle_witness(g: Graph, x: int, y: int, case: Case):
    """Deterministic capped witness for ``case``: found on the fundamental
    subgraph and lifted, with a whole-graph search as fallback."""
    connected = any(
        x in comp and y in comp for comp in g.components()
    )
    if connected:
        fund = fundamental_subgraph(g, x, y)
        pf = graph_polynomial(
            fund.graph, standard_caps(fund.graph.n, fund.x, fund.y)
        )
        for beta, gamma in _PATTERN_ORDER[case]:
            hit = _pattern_find(pf, fund.x, fund.y, beta, gamma)
            if hit is None:
                continue
            lifted = _lift_witness(g, fund, hit[0], hit[1])
            if lifted is not None:
                exps, coef = lifted
                _check_witness(g, x, y, exps, beta, gamma)
                return (tuple(exps), coef), beta, gamma
    pg = graph_polynomial(g, standard_caps(g.n, x, y))
    for beta, gamma in _PATTERN_ORDER[case]:
        hit = _pattern_find(pg, x, y, beta, gamma)
        if hit is not None:
            return hit, beta, gamma
    raise DiscrepancyError(
        f"case {case.value} has no monomial witness",
        record={"graph": encode_graph6(g), "x": x, "y": y, "case": case.value},
    )


def _check_witness(g: Graph, x: int, y: int, exps, beta: int, gamma: int):
    if sum(exps) != g.m:
        raise ContractError("witness degree does not match the edge count")
    if exps[x] != beta or exps[y] != gamma:
        raise ContractError("witness has wrong marked exponents")
    if any(e > 2 for v, e in enumerate(exps) if v not in (x, y)):
        raise ContractError("witness exceeds the exponent caps")


# ---------------------------------------------------------------------------
# specialised classifiers
# ---------------------------------------------------------------------------

def classify_near_triangulation(g: Graph, x: int, y: int) -> ExtendabilityReport:
    """Classify a 2-connected near-triangulation (case III cannot occur).

    The case follows from the unique 3-colouring; the witness is rebuilt
    structurally: shrink along separating chords, read the eta monomial of the
    surviving snake, and multiply back one zero-anchored monomial per removed
    piece. The polynomial oracle cross-checks the case.
    """
    rel = _near_tri_relation(g, x, y)
    case = _CASE_FROM_REL[rel]

    core, log = shrink_with_log(g, x, y)
    exps = [0] * g.n
    if core == {x, y}:
        coef = 1 if x < y else -1
        exps[x] = 1
        beta, gamma = 1, 0
    else:
        sub, vmap = g.induced(core)
        back = {old: new for new, old in enumerate(vmap)}
        cx, cy = back[x], back[y]
        cz = smallest_eta_z(sub, cx, cy)
        eta = eta_signature(sub, cx, cy, cz)
        if rel is Rel.DIFF:
            coef, ye, ze = eta.eta1, 0, 2
            beta, gamma = 1, 0
        else:
            coef, ye, ze = eta.eta2, 1, 1
            beta, gamma = 1, 1
        if coef == 0:
            raise DiscrepancyError(
                "eta coefficient vanished where the colour classes forbid it",
                record={"graph": encode_graph6(g), "x": x, "y": y},
            )
        for v in range(sub.n):
            exps[vmap[v]] = 2
        exps[x] = 1
        exps[vmap[cy]] = ye
        exps[vmap[cz]] = ze
    for a, b, piece_verts in log:
        piece = _zero_anchored_term(g, piece_verts, (a, b))
        if piece is None:
            raise DiscrepancyError(
                "a shrunk piece has no zero-anchored monomial",
                record={"graph": encode_graph6(g), "x": x, "y": y},
            )
        p_exps, p_coef = piece
        for v, e in enumerate(p_exps):
            exps[v] += e
        coef *= p_coef
    _check_witness(g, x, y, exps, beta, gamma)

    ocase = oracle_case(g, x, y)
    if ocase is not case:
        raise DiscrepancyError(
            "structural and oracle classifications disagree",
            record={
                "graph": encode_graph6(g),
                "x": x,
                "y": y,
                "structural": case.value,
                "oracle": ocase.value,
            },
        )
    return ExtendabilityReport(
        case,
        beta,
        gamma,
        (tuple(exps), coef),
        Method.BOTH,
        color_relation(g, x, y),
    )


def classify_cutvertex_chain(g: Graph, x: int, y: int) -> ExtendabilityReport:
    """Classify an xy-fundamental near-triangulation with cutvertices.

    Counts the successive pairs of the cutvertex sequence (x, v1, ..., y)
    whose per-block colour classes differ: zero pairs force equality, one
    forces difference, two or more leave the pair free.
    """
    bct = blocks_and_cutvertices(g)
    if not bct.cutvertices:
        raise StructureError("classify_cutvertex_chain requires a cutvertex")
    triples = bc_path_blocks(g, bct, x, y)
    if set().union(*(bct.blocks[bi] for bi, _, _ in triples)) != set(range(g.n)):
        raise StructureError("graph is not xy-fundamental")
    diffs = 0
    for bi, entry, exit_ in triples:
        sub, vmap = g.induced(bct.blocks[bi])
        back = {old: new for new, old in enumerate(vmap)}
        if sub.n == 2:
            raise StructureError(
                "bridge block: not a near-triangulation chain, use classify()"
            )
        if _near_tri_relation(sub, back[entry], back[exit_]) is Rel.DIFF:
            diffs += 1
    case = Case.I if diffs == 0 else Case.II if diffs == 1 else Case.III
    witness, beta, gamma = _oracle_witness(g, x, y, case)
    ocase = oracle_case(g, x, y)
    if ocase is not case:
        raise DiscrepancyError(
            "chain counting disagrees with the oracle",
            record={
                "graph": encode_graph6(g),
                "x": x,
                "y": y,
                "structural": case.value,
                "oracle": ocase.value,
            },
        )
    return ExtendabilityReport(
        case, beta, gamma, witness, Method.BOTH, color_relation(g, x, y)
    )


def _single_face_report(g: Graph, x: int, y: int, case: Case) -> ExtendabilityReport:
    witness, beta, gamma = _oracle_witness(g, x, y, case)
    return ExtendabilityReport(
        case, beta, gamma, witness, Method.STRUCTURAL, color_relation(g, x, y)
    )


def _expect_single_face(g: Graph, x: int, y: int, kind: FaceKind):
    emb = outerplane_embedding(g)
    typed = classify_faces(emb, x, y)
    if len(typed) != 1 or typed[0].kind is not kind:
        raise StructureError(
            f"expected exactly one non-triangular face of {kind.value}"
        )
    return emb, typed[0]


def classify_face_type0(g: Graph, x: int, y: int, a: int, b: int) -> ExtendabilityReport:
    """One non-triangular face holding one marked vertex, chord anchors (a, b)."""
    emb, t = _expect_single_face(g, x, y, FaceKind.TYPE0)
    if set(t.anchors) != {a, b}:
        raise ValidationError(f"anchors {(a, b)} do not match the face ({t.anchors})")
    rel = _structural_relation_block(g, x, y)
    if rel is None:
        raise ClassificationError("face shape escaped the structural analysis")
    case = _CASE_FROM_REL[rel]
    if case is Case.I:
        raise ContractError("a type-0 face cannot force equality")
    return _single_face_report(g, x, y, case)


def classify_face_type1(g: Graph, x: int, y: int, apex: int) -> ExtendabilityReport:
    """One non-triangular face avoiding the marks, its chords sharing an apex."""
    emb, t = _expect_single_face(g, x, y, FaceKind.TYPE1)
    if t.anchors[0] != apex:
        raise ValidationError(f"apex {apex} does not match the face ({t.anchors[0]})")
    rel = _structural_relation_block(g, x, y)
    if rel is None:
        raise ClassificationError("face shape escaped the structural analysis")
    return _single_face_report(g, x, y, _CASE_FROM_REL[rel])


def classify_face_type2(
    g: Graph, x: int, y: int, a: int, b: int, c: int, d: int
) -> ExtendabilityReport:
    """One non-triangular face whose neighbouring chords are disjoint edges."""
    emb, t = _expect_single_face(g, x, y, FaceKind.TYPE2)
    if set(t.anchors) != {a, b, c, d}:
        raise ValidationError("anchors do not match the face")
    rel = _structural_relation_block(g, x, y)
    if rel is None:
        raise ClassificationError("face shape escaped the structural analysis")
    case = _CASE_FROM_REL[rel]
    if case is Case.I:
        raise ContractError("a type-2 face cannot force equality")
    return _single_face_report(g, x, y, case)


# ---------------------------------------------------------------------------
# the full pipeline
# ---------------------------------------------------------------------------

def classify(
    g: Graph, x: int, y: int, method: Method = Method.BOTH
) -> ExtendabilityReport:
    """Classify the marked pair of any outerplanar graph.

    Marked vertices in different components always fall into case III. For a
    connected pair the structural route reduces to the fundamental subgraph
    and dispatches on block structure and face types; the oracle route reads
    the minimal capped monomial pattern. With ``method=BOTH`` the routes must
    agree (DiscrepancyError otherwise). When the structural route meets a
    shape outside its taxonomy, the report falls back to the oracle and is
    flagged ``PolynomialOracle``.
    """
    if x == y:
        raise ValidationError("marked vertices must differ")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValidationError("marked vertex out of range")
    if not is_outerplanar(g):
        raise StructureError("classify requires an outerplanar graph")

    relation = color_relation(g, x, y)
    connected = any(x in comp and y in comp for comp in g.components())

    structural: Case | None = None
    effective = method
    if not connected:
        structural = Case.III
        if method is Method.ORACLE:
            structural = None
    elif method in (Method.STRUCTURAL, Method.BOTH):
        rel = _structural_relation(g, x, y)
        if rel is None:
            effective = Method.ORACLE
        else:
            structural = _CASE_FROM_REL[rel]

    oracle: Case | None = None
    if method in (Method.ORACLE, Method.BOTH) or structural is None:
        oracle = oracle_case(g, x, y)

    if structural is not None and oracle is not None and structural is not oracle:
        raise DiscrepancyError(
            "structural and oracle classifications disagree",
            record={
                "graph": encode_graph6(g),
                "x": x,
                "y": y,
                "structural": structural.value,
                "oracle": oracle.value,
            },
        )
    case = structural if structural is not None else oracle
    if method is Method.BOTH and structural is not None and oracle is not None:
        effective = Method.BOTH
    elif structural is not None and method is Method.STRUCTURAL:
        effective = Method.STRUCTURAL
    else:
        effective = Method.ORACLE

    witness, beta, gamma = _oracle_witness(g, x, y, case)
    return ExtendabilityReport(case, beta, gamma, witness, effective, relation)
