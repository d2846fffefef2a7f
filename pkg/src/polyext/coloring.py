"""Proper-colouring enumeration, forced colour relations, and list colouring.

The colour relation between two marked vertices is decided by exhaustive
enumeration of proper 3-colourings: at desk scale backtracking is instant and
immune to case-analysis bugs. The structural route lives in the classifier and
is cross-checked against this one.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import BudgetError, ContractError, StructureError, ValidationError
from .graphs import Graph, OuterplaneEmbedding, face_edges, weak_dual


class Verdict(enum.Enum):
    FORCED_EQUAL = "ForcedEqual"
    FORCED_DIFFERENT = "ForcedDifferent"
    FREE = "Free"


@dataclass(frozen=True)
class ColorClasses:
    """Per-vertex class id of the unique-up-to-permutation 3-colouring."""

    class_of: tuple[int, ...]

    def same(self, u: int, v: int) -> bool:
        return self.class_of[u] == self.class_of[v]


@dataclass(frozen=True)
class ColorRelation:
    verdict: Verdict
    witness_equal: tuple[int, ...] | None
    witness_diff: tuple[int, ...] | None


@dataclass(frozen=True)
class ListAssignment:
    """Per-vertex colour lists; every list must be nonempty."""

    lists: tuple[frozenset[int], ...]

    def __post_init__(self):
        if any(not lst for lst in self.lists):
            raise ValidationError("every colour list must be nonempty")

    def to_json_obj(self) -> list[dict]:
        return [
            {"vertex": v, "colors": sorted(lst)} for v, lst in enumerate(self.lists)
        ]


def enumerate_proper_colorings(g: Graph, k: int):
    """Yield all proper k-colourings (tuples over 0..k-1) in vertex order."""
    if k < 1:
        raise ValidationError("colour count must be positive")
    n = g.n
    if n == 0:
        yield ()
        return
    color = [-1] * n
    down_adj = [sorted(w for w in g.adj[v] if w < v) for v in range(n)]

    def rec(v):
        if v == n:
            yield tuple(color)
            return
        for c in range(k):
            if all(color[w] != c for w in down_adj[v]):
                color[v] = c
                yield from rec(v + 1)
        color[v] = -1

    yield from rec(0)


def count_proper_colorings(g: Graph, k: int) -> int:
    return sum(1 for _ in enumerate_proper_colorings(g, k))


def unique_three_coloring(g: Graph, emb: OuterplaneEmbedding) -> ColorClasses:
    """Colour classes of a 2-connected outerplane near-triangulation.

    Seeds the lexicographically smallest inner face with classes 0, 1, 2 (in
    ascending vertex order) and propagates across shared edges of the weak
    dual. Every inner face must be a triangle.
    """
    for f in emb.inner_faces:
        if len(f) != 3:
            raise StructureError(f"non-triangular inner face {f}")
    if not emb.inner_faces:
        raise StructureError("embedding has no inner faces")
    classes = [-1] * g.n
    seed = emb.inner_faces[0]
    for cls, v in enumerate(sorted(seed)):
        classes[v] = cls

    dual = weak_dual(emb)
    visited = [False] * dual.n
    queue = [0]
    visited[0] = True
    while queue:
        fi = queue.pop(0)
        face = emb.inner_faces[fi]
        known = [v for v in face if classes[v] >= 0]
        if len(known) == 3:
            if len({classes[v] for v in face}) != 3:
                raise StructureError("colour propagation conflict")
        elif len(known) == 2:
            missing = next(v for v in face if classes[v] < 0)
            used = {classes[v] for v in known}
            if len(used) != 2:
                raise StructureError("colour propagation conflict")
            classes[missing] = ({0, 1, 2} - used).pop()
        else:
            raise StructureError("disconnected weak dual during propagation")
        for fj in sorted(dual.adj[fi]):
            if not visited[fj]:
                visited[fj] = True
                queue.append(fj)
    if any(c < 0 for c in classes):
        raise StructureError("propagation did not reach every vertex")
    for u, v in g.edges:
        if classes[u] == classes[v]:
            raise StructureError("propagated classes are not a proper colouring")
    return ColorClasses(tuple(classes))


def color_relation(g: Graph, x: int, y: int) -> ColorRelation:
    """Verdict on the pair (x, y) over all proper 3-colourings of g."""
    if x == y:
        raise ValidationError("marked vertices must differ")
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValidationError("marked vertex out of range")
    witness_equal = None
    witness_diff = None
    for coloring in enumerate_proper_colorings(g, 3):
        if coloring[x] == coloring[y]:
            if witness_equal is None:
                witness_equal = coloring
        else:
            if witness_diff is None:
                witness_diff = coloring
        if witness_equal is not None and witness_diff is not None:
            return ColorRelation(Verdict.FREE, witness_equal, witness_diff)
    if witness_equal is None and witness_diff is None:
        raise ContractError("graph admits no proper 3-colouring")
    if witness_diff is None:
        return ColorRelation(Verdict.FORCED_EQUAL, witness_equal, None)
    return ColorRelation(Verdict.FORCED_DIFFERENT, None, witness_diff)


def list_colorable(g: Graph, lists: ListAssignment):
    """A proper colouring drawing each vertex's colour from its list, or None.

    Backtracks in smallest-list-first vertex order, colours tried ascending.
    """
    if len(lists.lists) != g.n:
        raise ValidationError("list assignment must cover every vertex")
    order = sorted(range(g.n), key=lambda v: (len(lists.lists[v]), v))
    color: dict[int, int] = {}

    def rec(i):
        if i == g.n:
            return True
        v = order[i]
        for c in sorted(lists.lists[v]):
            if all(color.get(w) != c for w in g.adj[v]):
                color[v] = c
                if rec(i + 1):
                    return True
                del color[v]
        return False

    if rec(0):
        return tuple(color[v] for v in range(g.n))
    return None


def _sorted_tuple(it):
    return tuple(sorted(it))


def is_extendable(
    g: Graph,
    x: int,
    y: int,
    i: int,
    j: int,
    universe: int = 6,
    budget: int = 5_000_000,
):
    """Exhaustive list-extendability check for list sizes (i, j, 3, ..., 3).

    True iff every assignment of lists of size ``i`` to x, ``j`` to y and 3 to
    all other vertices, drawn from colours ``1..universe``, admits a proper
    list colouring. On failure returns the lexicographically first failing
    assignment (lists compared as sorted tuples, in vertex order).

    Assignments differing by a global colour permutation are equivalent, so
    the search walks only orbit-minimal assignments: a prefix is pruned when
    some permutation fixing all earlier lists maps the current list strictly
    lower. The first failing orbit-minimal assignment is also the globally
    lexicographically first failing one, because failing is permutation
    invariant and orbit minima are lexicographic minima.
    """
    if x == y:
        raise ValidationError("marked vertices must differ")
    if i < 1 or j < 1:
        raise ValidationError("list sizes must be positive")
    if universe < 3:
        raise ValidationError("universe must offer at least 3 colours")
    if universe > 8:
        raise BudgetError("universe beyond 8 colours exceeds the search budget")
    n = g.n
    sizes = [3] * n
    sizes[x] = i
    sizes[y] = j
    if any(s > universe for s in sizes):
        raise ValidationError("list size exceeds the colour universe")
    colors = range(1, universe + 1)
    choices = [
        [_sorted_tuple(c) for c in itertools.combinations(colors, sizes[v])]
        for v in range(n)
    ]
    perms = [
        dict(zip(colors, p)) for p in itertools.permutations(colors)
    ]
    full = frozenset(colors)
    assigned: list[tuple[int, ...] | None] = [None] * n
    calls = 0

    def feasible() -> bool:
        lists = ListAssignment(
            tuple(
                frozenset(assigned[v]) if assigned[v] is not None else full
                for v in range(n)
            )
        )
        return list_colorable(g, lists) is not None

    def first_canonical_completion(v: int, stab) -> None:
        """Extend with the lexicographically first orbit-minimal tail."""
        for w in range(v, n):
            for lst in choices[w]:
                keep = []
                dominated = False
                for pm in stab:
                    mapped = _sorted_tuple(pm[c] for c in lst)
                    if mapped < lst:
                        dominated = True
                        break
                    if mapped == lst:
                        keep.append(pm)
                if not dominated:
                    assigned[w] = lst
                    stab = keep
                    break
            else:
                raise ContractError("no canonical list available")

    def dfs(v: int, stab):
        nonlocal calls
        if v == n:
            return not feasible()
        for lst in choices[v]:
            keep = []
            dominated = False
            for pm in stab:
                mapped = _sorted_tuple(pm[c] for c in lst)
                if mapped < lst:
                    dominated = True
                    break
                if mapped == lst:
                    keep.append(pm)
            if dominated:
                continue
            assigned[v] = lst
            calls += 1
            if calls > budget:
                raise BudgetError(
                    f"is_extendable exceeded its budget of {budget} solver calls"
                )
            if not feasible():
                # Every completion fails; the first canonical one is the
                # lexicographically first failing assignment overall.
                first_canonical_completion(v + 1, keep)
                return True
            if v + 1 < n and dfs(v + 1, keep):
                return True
            if v + 1 == n:
                pass  # feasible leaf, keep scanning
            assigned[v] = None
        return False

    if dfs(0, perms):
        witness = ListAssignment(tuple(frozenset(l) for l in assigned))
        return False, witness
    return True, None
