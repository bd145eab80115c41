"""Graph polynomials computed by independent routes.

Three invariants of a multigraph G with r vertices, q edges and w components:

* Tutte polynomial tau(x, y), by the bridge/loop/ordinary deletion-contraction
  recursion with tau(edgeless) = 1, memoized on the exact canonical form; the
  shifted form T(s, t) = tau(s+1, t+1) comes along for free.
* Negami polynomial N(u, x, y) = sum over edge subsets Y of
  u^{components of (V, Y)} x^{q-|Y|} y^{|Y|}, by direct 2^q expansion or by
  converting the Tutte polynomial (the corank-nullity change of basis).
* Chromatic polynomial P(lam), by its own deletion-contraction recursion and
  by specializing N as (-1)^q N(lam, -1, 1).

The pairs of routes cross-check each other; the subset expansion is the
ground-truth oracle for small graphs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .graphs import (
    MultiGraph,
    bridges,
    canonical_key,
    component_count,
    component_subgraphs,
    contract_edge,
    contract_edges,
    delete_edge,
    delete_edges,
)
from .polynomials import Polynomial, divide_exact_monomial, substitute

TUTTE_CLASSIC_VARS = ("x", "y")
TUTTE_SHIFTED_VARS = ("s", "t")
NEGAMI_VARS = ("u", "x", "y")
CHROMATIC_VARS = ("λ",)

SUBSET_CAP_ENV = "GRAPHPERIOD_SUBSET_CAP"
DEFAULT_SUBSET_CAP = 24


class SubsetCapExceededError(ValueError):
    """The 2^q subset expansion was refused because q is too large."""


@dataclass(frozen=True)
class TuttePair:
    """Tutte polynomial in both coordinate systems.

    ``shifted`` is ``classic`` with x -> s+1, y -> t+1; the two carry the
    same information and the criteria are stated on the shifted form.
    """

    classic: Polynomial
    shifted: Polynomial


@dataclass(frozen=True)
class NegamiPolynomial:
    """Three-variable subset-expansion polynomial plus the source graph's
    vertex/edge/component counts needed by downstream specializations."""

    polynomial: Polynomial
    vertex_count: int
    edge_count: int
    components: int

    def __post_init__(self):
        u_low = self.components
        for exps in self.polynomial.terms:
            eu, ex, ey = exps
            if ex + ey != self.edge_count:
                raise ValueError(
                    f"term u^{eu}*x^{ex}*y^{ey} violates x+y degree {self.edge_count}"
                )
            if not u_low <= eu <= self.vertex_count:
                raise ValueError(
                    f"u-exponent {eu} outside {u_low}..{self.vertex_count}"
                )


def default_subset_cap() -> int:
    raw = os.environ.get(SUBSET_CAP_ENV)
    if raw is not None and raw.isdigit():
        return int(raw)
    return DEFAULT_SUBSET_CAP


# -- Tutte by deletion-contraction -----------------------------------------

_ONE_XY = Polynomial.constant(TUTTE_CLASSIC_VARS, 1)
_X = Polynomial.variable(TUTTE_CLASSIC_VARS, "x")
_Y = Polynomial.variable(TUTTE_CLASSIC_VARS, "y")

_tutte_cache: dict = {}
_chromatic_cache: dict = {}


def clear_caches():
    _tutte_cache.clear()
    _chromatic_cache.clear()


def _default_chooser(g: MultiGraph) -> int:
    """Ordinary edge with the largest endpoint degree sum (smallest id on
    ties); loops and bridges are already stripped when this runs."""
    degree = [0] * g.vertex_count
    for u, v in g.endpoints:
        degree[u] += 1
        degree[v] += 1
    best, best_score = 0, -1
    for e, (u, v) in enumerate(g.endpoints):
        score = degree[u] + degree[v]
        if score > best_score:
            best, best_score = e, score
    return best


def _tau(g: MultiGraph, memo, chooser) -> Polynomial:
    if g.edge_count == 0:
        return _ONE_XY

    pieces = component_subgraphs(g)
    if len(pieces) > 1:
        result = _ONE_XY
        for piece in pieces:
            result = result * _tau(piece, memo, chooser)
        return result

    loops = [e for e, (u, v) in enumerate(g.endpoints) if u == v]
    if loops:
        return (_Y ** len(loops)) * _tau(delete_edges(g, loops), memo, chooser)

    bridge_ids = bridges(g)
    if bridge_ids:
        rest = _tau(contract_edges(g, bridge_ids), memo, chooser)
        return (_X ** len(bridge_ids)) * rest

    # connected, loopless, bridgeless: every edge is ordinary
    key = canonical_key(g)
    cached = memo.get(key)
    if cached is not None:
        return cached
    e = chooser(g)
    result = _tau(delete_edge(g, e), memo, chooser) + _tau(
        contract_edge(g, e), memo, chooser
    )
    memo[key] = result
    return result


def tutte_deletion_contraction(g: MultiGraph, *, chooser=None, cache=None) -> TuttePair:
    """Tutte polynomial by the recursion: bridge -> x*tau(G/e), loop ->
    y*tau(G-e), ordinary -> tau(G-e) + tau(G/e), edgeless -> 1.

    The result is independent of the edge-selection order; ``chooser`` exists
    so tests can prove that.  ``cache`` overrides the shared session memo
    (pass a fresh dict to isolate a computation).
    """
    memo = _tutte_cache if cache is None else cache
    classic = _tau(g, memo, chooser or _default_chooser)
    s_plus_1 = Polynomial(TUTTE_SHIFTED_VARS, {(1, 0): 1, (0, 0): 1})
    t_plus_1 = Polynomial(TUTTE_SHIFTED_VARS, {(0, 1): 1, (0, 0): 1})
    shifted = substitute(classic, {"x": s_plus_1, "y": t_plus_1}, TUTTE_SHIFTED_VARS)
    return TuttePair(classic=classic, shifted=shifted)


# -- Negami by subset expansion ---------------------------------------------


def negami_subset_expansion(g: MultiGraph, *, cap=None) -> NegamiPolynomial:
    """Sum over all 2^q edge subsets Y of u^{w(V,Y)} x^{q-|Y|} y^{|Y|}.

    Exponential; refuses when q exceeds ``cap`` (default 24, overridable via
    the GRAPHPERIOD_SUBSET_CAP environment variable).
    """
    if cap is None:
        cap = default_subset_cap()
    q = g.edge_count
    if q > cap:
        raise SubsetCapExceededError(
            f"subset expansion over {q} edges exceeds the cap of {cap}; "
            "use the deletion-contraction route (negami_from_tutte) instead"
        )
    n = g.vertex_count

    # depth-first over include/exclude per edge with a rollback union-find,
    # so each subset costs O(alpha) instead of a fresh scan
    parent = list(range(n))
    size = [1] * n
    trail = []
    counts: dict = {}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            trail.append(None)
            return 0
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        trail.append(rb)
        return 1

    def undo_union():
        rb = trail.pop()
        if rb is not None:
            ra = parent[rb]
            size[ra] -= size[rb]
            parent[rb] = rb

    def walk(e, picked, comps):
        if e == q:
            key = (comps, picked)
            counts[key] = counts.get(key, 0) + 1
            return
        walk(e + 1, picked, comps)
        u, v = g.endpoints[e]
        merged = union(u, v)
        walk(e + 1, picked + 1, comps - merged)
        undo_union()

    walk(0, 0, n)
    table = {
        (comps, q - picked, picked): mult for (comps, picked), mult in counts.items()
    }
    return NegamiPolynomial(
        polynomial=Polynomial(NEGAMI_VARS, table),
        vertex_count=n,
        edge_count=q,
        components=component_count(g),
    )


def negami_from_tutte(g: MultiGraph, *, cache=None) -> NegamiPolynomial:
    """Negami polynomial via the Tutte recursion.

    With tau = sum b_{ij} x^i y^j, rank = r - w and nullity = q - rank:

        N(u, x, y) = u^w * sum b_{ij} (u*x + y)^i y^(rank-i) (x + y)^j x^(nullity-j)

    which is the corank-nullity expansion re-based to the subset-expansion
    variables; polynomial on the nose, no rational functions involved.
    """
    classic = tutte_deletion_contraction(g, cache=cache).classic
    r = g.vertex_count
    q = g.edge_count
    w = component_count(g)
    rank = r - w
    nullity = q - rank

    ux_plus_y = Polynomial(NEGAMI_VARS, {(1, 1, 0): 1, (0, 0, 1): 1})
    x_plus_y = Polynomial(NEGAMI_VARS, {(0, 1, 0): 1, (0, 0, 1): 1})
    x_var = Polynomial.variable(NEGAMI_VARS, "x")
    y_var = Polynomial.variable(NEGAMI_VARS, "y")

    pow_uxy = [Polynomial.constant(NEGAMI_VARS, 1)]
    for _ in range(rank):
        pow_uxy.append(pow_uxy[-1] * ux_plus_y)
    pow_xy = [Polynomial.constant(NEGAMI_VARS, 1)]
    for _ in range(nullity):
        pow_xy.append(pow_xy[-1] * x_plus_y)

    total = Polynomial.zero(NEGAMI_VARS)
    for (i, j), coeff in classic.terms.items():
        term = coeff * pow_uxy[i] * (y_var ** (rank - i))
        term = term * pow_xy[j] * (x_var ** (nullity - j))
        total = total + term
    total = Polynomial.monomial(NEGAMI_VARS, (w, 0, 0)) * total
    return NegamiPolynomial(
        polynomial=total, vertex_count=r, edge_count=q, components=w
    )


def negami_polynomial(g: MultiGraph, *, route="auto", cap=None, cache=None) -> NegamiPolynomial:
    """Dispatch between the expansion and recursion routes.

    ``auto`` expands when q fits under the cap and falls back to the
    recursion otherwise; both routes produce identical polynomials.
    """
    if route == "expansion":
        return negami_subset_expansion(g, cap=cap)
    if route == "recursion":
        return negami_from_tutte(g, cache=cache)
    if route == "auto":
        effective = default_subset_cap() if cap is None else cap
        if g.edge_count <= min(effective, 16):
            return negami_subset_expansion(g, cap=effective)
        return negami_from_tutte(g, cache=cache)
    raise ValueError(f"unknown route {route!r}")


def tutte_from_negami(n: NegamiPolynomial) -> Polynomial:
    """Shifted Tutte polynomial T(s, t) = N(s*t, 1, t) / (s^w t^r).

    The division is exact under the keep-Y reading of the subset expansion; a
    NonDivisibleTermError here means the expansion convention was violated.
    """
    st = Polynomial(TUTTE_SHIFTED_VARS, {(1, 1): 1})
    t = Polynomial.variable(TUTTE_SHIFTED_VARS, "t")
    specialized = substitute(
        n.polynomial, {"u": st, "x": 1, "y": t}, TUTTE_SHIFTED_VARS
    )
    return divide_exact_monomial(
        specialized, {"s": n.components, "t": n.vertex_count}
    )


# -- chromatic polynomial ----------------------------------------------------


def _chromatic(g: MultiGraph, memo) -> Polynomial:
    for u, v in g.endpoints:
        if u == v:
            return Polynomial.zero(CHROMATIC_VARS)

    # parallel edges constrain colorings exactly like single ones
    seen = set()
    dupes = []
    for e, pair in enumerate(g.endpoints):
        if pair in seen:
            dupes.append(e)
        else:
            seen.add(pair)
    if dupes:
        g = delete_edges(g, dupes)

    if g.edge_count == 0:
        return Polynomial.monomial(CHROMATIC_VARS, (g.vertex_count,))

    key = canonical_key(g)
    cached = memo.get(key)
    if cached is not None:
        return cached
    e = _default_chooser(g)
    result = _chromatic(delete_edge(g, e), memo) - _chromatic(contract_edge(g, e), memo)
    memo[key] = result
    return result


def chromatic_deletion_contraction(g: MultiGraph, *, cache=None) -> Polynomial:
    """Proper-coloring counting polynomial by P(G) = P(G-e) - P(G/e) with
    P(edgeless on n) = λ^n; any loop forces the zero polynomial."""
    memo = _chromatic_cache if cache is None else cache
    return _chromatic(g, memo)


def chromatic_from_negami(n: NegamiPolynomial) -> Polynomial:
    """(-1)^q N(λ, -1, 1): the subset-expansion route to the chromatic
    polynomial (the sign pairs with the keep-Y expansion convention)."""
    lam = Polynomial.variable(CHROMATIC_VARS, "λ")
    value = substitute(n.polynomial, {"u": lam, "x": -1, "y": 1}, CHROMATIC_VARS)
    if n.edge_count % 2:
        value = -value
    return value
