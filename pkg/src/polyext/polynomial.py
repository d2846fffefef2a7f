"""Sparse multivariate integer polynomials specialised to edge-binomial products.

The graph polynomial of ``g`` is the product over edges ``{u, v}``, ``u < v``,
of the binomial ``X_u - X_v`` (the canonical orientation: smaller index minus
larger index). Exponent caps may be applied during construction: a monomial
whose exponent exceeds a cap in any variable is discarded. Discarding is
sound because multiplying by further binomials never decreases exponents, so
every surviving coefficient equals the coefficient of the full expansion.

Terms are stored in a dict keyed by exponent vectors packed into a single
integer, ``width`` bits per variable. The width is chosen from the per-variable
exponent bounds, so packed additions can never carry between fields.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CapError, ContractError, ValidationError
from .graphs import Graph


def _pack(exps, width: int) -> int:
    key = 0
    for i, e in enumerate(exps):
        key |= e << (i * width)
    return key


def _unpack(key: int, n: int, width: int) -> tuple[int, ...]:
    mask = (1 << width) - 1
    return tuple((key >> (i * width)) & mask for i in range(n))


@dataclass(frozen=True)
class MultiPoly:
    """Immutable sparse polynomial over variables ``0..ambient_n - 1``.

    ``caps[i]`` is the exponent cap of variable ``i`` or ``None`` for no cap.
    ``terms`` maps packed exponent keys to nonzero integer coefficients.
    """

    ambient_n: int
    caps: tuple[int | None, ...]
    width: int
    terms: dict

    @property
    def is_capped(self) -> bool:
        return any(c is not None for c in self.caps)

    def __len__(self) -> int:
        return len(self.terms)

    def iter_terms(self):
        """Yield (exponent tuple, coefficient) in lexicographic exponent order."""
        decoded = [
            (_unpack(k, self.ambient_n, self.width), c) for k, c in self.terms.items()
        ]
        decoded.sort()
        yield from decoded

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {e: c for e, c in self.iter_terms()}

    def to_json_obj(self) -> dict:
        return {
            "vars": self.ambient_n,
            "terms": [{"exps": list(e), "coef": c} for e, c in self.iter_terms()],
        }


def _check_vector(p: MultiPoly, vec, what: str):
    if len(vec) != p.ambient_n:
        raise ValidationError(f"{what} must have length {p.ambient_n}")


def coefficient(p: MultiPoly, exps) -> int:
    """Stored coefficient of the monomial with exponent vector ``exps``, else 0."""
    _check_vector(p, exps, "exponent vector")
    for i, e in enumerate(exps):
        cap = p.caps[i]
        if e < 0:
            raise ValidationError("exponents must be nonnegative")
        if cap is not None and e > cap:
            raise CapError(
                f"exponent {e} of variable {i} exceeds cap {cap}; "
                "the coefficient would be unreliable"
            )
        if e >= (1 << p.width):
            return 0
    return p.terms.get(_pack(exps, p.width), 0)


def find_monomial(p: MultiPoly, bounds, exact=None):
    """Lexicographically smallest stored term within per-variable bounds.

    ``bounds`` caps each exponent from above; ``exact`` optionally pins
    variables to exact exponents (entries may be None). Returns
    ``(exponent tuple, coefficient)`` or ``None``.
    """
    _check_vector(p, bounds, "bounds")
    if exact is not None:
        _check_vector(p, exact, "exact constraints")
    for i, b in enumerate(bounds):
        cap = p.caps[i]
        if cap is not None and b > cap:
            raise CapError(f"bound {b} of variable {i} exceeds cap {cap}")
    for exps, coef in p.iter_terms():
        if any(e > b for e, b in zip(exps, bounds)):
            continue
        if exact is not None and any(
            x is not None and e != x for e, x in zip(exps, exact)
        ):
            continue
        # iter_terms is sorted, so the first match is lexicographically smallest
        return (exps, coef)
    return None


def evaluate(p: MultiPoly, point) -> int:
    """Integer value of p at ``point``; only defined for uncapped polynomials."""
    if p.is_capped:
        raise ContractError("evaluation of a truncated polynomial is meaningless")
    _check_vector(p, point, "point")
    total = 0
    for exps, coef in p.iter_terms():
        val = coef
        for x, e in zip(point, exps):
            if e:
                val *= x**e
        total += val
    return total


def _effective_bounds(g: Graph, caps) -> list[int]:
    # A variable's exponent never exceeds its degree, so the tighter of
    # cap and degree bounds the packed field.
    return [
        g.degree(v) if caps[v] is None else min(caps[v], g.degree(v))
        for v in range(g.n)
    ]


def graph_polynomial(g: Graph, caps=None) -> MultiPoly:
    """Product of edge binomials under the canonical orientation, cap-truncated.

    ``caps`` is a per-vertex sequence of ints or None (no cap); omitted means
    fully uncapped. Edges are multiplied in sorted order and caps are applied
    after each binomial, keeping the live term count minimal.
    """
    if caps is None:
        caps = [None] * g.n
    caps = tuple(caps)
    if len(caps) != g.n:
        raise ValidationError(f"cap sequence has length {len(caps)}, expected {g.n}")
    for c in caps:
        if c is not None and c < 0:
            raise ValidationError("caps must be nonnegative")

    bounds = _effective_bounds(g, caps)
    width = max(2, max(bounds, default=0).bit_length())
    mask = (1 << width) - 1
    terms = {0: 1}  # empty product
    for u, v in g.sorted_edges():
        su, sv = u * width, v * width
        bu, bv = bounds[u], bounds[v]
        nxt: dict[int, int] = {}
        for key, c in terms.items():
            if ((key >> su) & mask) < bu:
                k2 = key + (1 << su)
                nc = nxt.get(k2, 0) + c
                if nc:
                    nxt[k2] = nc
                elif k2 in nxt:
                    del nxt[k2]
            if ((key >> sv) & mask) < bv:
                k2 = key + (1 << sv)
                nc = nxt.get(k2, 0) - c
                if nc:
                    nxt[k2] = nc
                elif k2 in nxt:
                    del nxt[k2]
        terms = nxt
        if not terms:
            break
    return MultiPoly(g.n, caps, width, terms)


def glue_at_vertex(p: MultiPoly, q: MultiPoly, map_p, map_q, merged_n: int) -> MultiPoly:
    """Product polynomial of two graphs glued at one shared vertex.

    ``map_p[i]`` / ``map_q[j]`` give the merged index of each source variable.
    Exactly one merged vertex may receive variables from both sources, and it
    must be uncapped on both sides (a capped shared vertex would make the
    truncation unsound, since exponents add there). Non-shared caps carry over.
    """
    if len(map_p) != p.ambient_n or len(map_q) != q.ambient_n:
        raise ValidationError("variable index maps must cover both polynomials")
    targets_p, targets_q = set(map_p), set(map_q)
    if len(targets_p) != len(map_p) or len(targets_q) != len(map_q):
        raise ValidationError("variable index maps must be injective")
    shared = targets_p & targets_q
    if len(shared) > 1:
        raise ValidationError("glue_at_vertex shares at most one vertex")
    merged_caps: list[int | None] = [None] * merged_n
    for mp, poly in ((map_p, p), (map_q, q)):
        for i, tgt in enumerate(mp):
            if not 0 <= tgt < merged_n:
                raise ValidationError("map target out of range")
            cap = poly.caps[i]
            if tgt in shared:
                if cap is not None:
                    raise CapError("the shared vertex must be uncapped in both factors")
            else:
                merged_caps[tgt] = cap

    merged: dict[tuple[int, ...], int] = {}
    max_exp = 0
    terms_q = list(q.iter_terms())
    for ep, cp in p.iter_terms():
        base = [0] * merged_n
        for i, e in enumerate(ep):
            base[map_p[i]] = e
        for eq, cq in terms_q:
            vec = base.copy()
            for j, e in enumerate(eq):
                vec[map_q[j]] += e
            if any(c is not None and x > c for x, c in zip(vec, merged_caps)):
                continue
            key = tuple(vec)
            nc = merged.get(key, 0) + cp * cq
            if nc:
                merged[key] = nc
                m = max(vec, default=0)
                if m > max_exp:
                    max_exp = m
            elif key in merged:
                del merged[key]
    width = max(2, max_exp.bit_length())
    packed = {_pack(e, width): c for e, c in merged.items()}
    return MultiPoly(merged_n, tuple(merged_caps), width, packed)


def standard_caps(n: int, x: int, y: int) -> tuple[int | None, ...]:
    """Default caps for extendability queries: 1 for the marked pair, 2 elsewhere."""
    caps: list[int | None] = [2] * n
    caps[x] = 1
    caps[y] = 1
    return tuple(caps)
