"""Gentle algebras of triangulated surfaces, handled purely combinatorially.

Internal edges become vertices.  Inside each triangle, whenever internal
edge y comes right after internal edge x in the triangle's listed
(counterclockwise) order there is an arrow x -> y, and any two arrows of
the same triangle compose to zero.  Arcs are given by the sequence of
internal edges they cross.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass

from .algebra import Arrow, GentleAlgebra, GentlenessError, validate_gentle
from .ext import ext1_from_R, ext_dim
from .homology import omega_orbit, syzygy
from .modules import StringModule
from .strings import Letter, StringError, StringWord, make_word


class TriangulationError(ValueError):
    pass


@dataclass(frozen=True)
class Triangulation:
    edges: tuple[str, ...]
    triangles: tuple[tuple[str, str, str], ...]
    boundary: frozenset[str]

    @property
    def internal(self) -> tuple[str, ...]:
        return tuple(e for e in self.edges if e not in self.boundary)


def validate_triangulation(tri: Triangulation) -> Triangulation:
    known = set(tri.edges)
    if len(known) != len(tri.edges):
        raise TriangulationError("duplicate edge name")
    for e in tri.boundary:
        if e not in known:
            raise TriangulationError(f"boundary edge {e} is not declared")
    count: Counter = Counter()
    for t in tri.triangles:
        if len(set(t)) != 3:
            raise TriangulationError(f"self-folded or degenerate triangle {t}")
        for e in t:
            if e not in known:
                raise TriangulationError(f"triangle {t} uses undeclared edge {e}")
            count[e] += 1
        if all(e in tri.boundary for e in t):
            raise TriangulationError(f"triangle {t} has no internal edge")
    for e in tri.edges:
        want = 1 if e in tri.boundary else 2
        if count[e] != want:
            kind = "boundary" if e in tri.boundary else "internal"
            raise TriangulationError(f"{kind} edge {e} lies in {count[e]} triangles, expected {want}")
    if not tri.internal:
        raise TriangulationError("no internal edges")
    return tri


def _triangle_arrows(tri: Triangulation):
    """(triangle index, x, y) for each arrow x -> y."""
    out = []
    for ti, t in enumerate(tri.triangles):
        for i in range(3):
            x, y = t[i], t[(i + 1) % 3]
            if x not in tri.boundary and y not in tri.boundary:
                out.append((ti, x, y))
    return out


def _arrow_names(pairs) -> dict[tuple[int, str, str], str]:
    seen = Counter((x, y) for _, x, y in pairs)
    return {(ti, x, y): (f"{x}_{y}" if seen[(x, y)] == 1 else f"{x}_{y}_{ti}") for ti, x, y in pairs}


def algebra_from_triangulation(tri: Triangulation) -> GentleAlgebra:
    validate_triangulation(tri)
    pairs = _triangle_arrows(tri)
    names = _arrow_names(pairs)
    arrows = [Arrow(names[p], p[1], p[2]) for p in pairs]
    rels = set()
    for p in pairs:
        for q in pairs:
            if p[0] == q[0] and p != q and p[2] == q[1]:
                rels.add((names[p], names[q]))
    try:
        alg = validate_gentle(tri.internal, arrows, rels)
    except GentlenessError as exc:
        raise TriangulationError(f"unsupported triangulation: {exc}") from exc
    bad = [c for c in alg.relation_cycles if len(c) != 3]
    if bad:
        raise TriangulationError(f"relation cycle of length {len(bad[0])}")
    return alg


def string_from_crossings(tri: Triangulation, alg: GentleAlgebra, crossed) -> StringWord:
    crossed = list(crossed)
    if not crossed:
        raise TriangulationError("an arc must cross at least one internal edge")
    for e in crossed:
        if e not in alg.vertices:
            raise TriangulationError(f"{e} is not an internal edge")
    if len(crossed) == 1:
        return StringWord.trivial(crossed[0])
    pairs = _triangle_arrows(tri)
    names = _arrow_names(pairs)
    letters = []
    for x, y in zip(crossed, crossed[1:]):
        shared = [ti for ti, t in enumerate(tri.triangles) if x in t and y in t]
        if len(shared) > 1:
            raise TriangulationError(f"edges {x} and {y} share several triangles; annotate the crossing")
        if not shared:
            raise TriangulationError(f"edges {x} and {y} share no triangle")
        ti = shared[0]
        if (ti, x, y) in names:
            letters.append(Letter(alg.arrow(names[(ti, x, y)])))
        else:
            letters.append(Letter(alg.arrow(names[(ti, y, x)]), True))
    try:
        return make_word(alg, letters)
    except StringError as exc:
        raise TriangulationError(f"invalid arc: {exc}") from exc


def random_disk_triangulation(seed: int, max_triangles: int = 12) -> Triangulation:
    """A random triangulation of a convex polygon with 2..max_triangles triangles."""
    rng = random.Random(seed)
    t = rng.randint(2, max(2, max_triangles))
    n = t + 2
    triangles = []
    diagonals = []

    def side(i, j):
        i, j = sorted((i, j))
        if j - i == 1 or (i == 0 and j == n - 1):
            return f"s{i}_{j}"
        return f"d{i}_{j}"

    stack = [list(range(n))]
    while stack:
        poly = stack.pop()
        if len(poly) < 3:
            continue
        a, b = poly[0], poly[-1]
        k = rng.randint(1, len(poly) - 2)
        c = poly[k]
        # a < c < b along a counterclockwise polygon
        triangles.append((side(a, c), side(c, b), side(b, a)))
        for e in (side(a, c), side(c, b)):
            if e.startswith("d") and e not in diagonals:
                diagonals.append(e)
        stack.append(poly[: k + 1])
        stack.append(poly[k:])
    sides = [side(i, (i + 1) % n) for i in range(n)]
    return Triangulation(tuple(sides + sorted(diagonals)), tuple(triangles), frozenset(sides))


@dataclass
class Period3Report:
    degrees: list[int]
    dims: list[int]
    violations: list[int]  # degrees n with Ext^n != Ext^{n+3}

    @property
    def ok(self) -> bool:
        return not self.violations and all(d in (0, 1, 2) for d in self.dims)


def period3_check(alg: GentleAlgebra, m: StringModule, n: StringModule, degree_range=range(2, 9)) -> Period3Report:
    degrees = [d for d in degree_range if d >= 2]
    dims = [ext_dim(alg, m, n, d) for d in degrees]
    bad = [d for d in degrees if ext_dim(alg, m, n, d) != ext_dim(alg, m, n, d + 3)]
    return Period3Report(degrees, dims, bad)


def ext_degree_profile(alg: GentleAlgebra, m: StringModule, n: StringModule) -> dict[str, list[int]]:
    """For each end arrow of Ω(M): the degrees r in {2, 3, 4} where its orbit meets N."""
    profile = {}
    for a in syzygy(alg, m).end_arrows():
        orb = omega_orbit(alg, a)
        hits = []
        for r in (2, 3, 4):
            b = orb.at(r - 2)
            if b is not None and ext1_from_R(alg, b, n)[0]:
                hits.append(r)
        profile[a] = hits
    return profile
