"""Gentle algebra presentations: validation, successor tables, relation cycles.

An algebra is given by a quiver (named vertices and arrows) together with a
set of length-two monomial relations.  Paths compose left to right, so the
relation ``(a, b)`` means the path ``a`` followed by ``b`` is zero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Optional


class GentlenessError(ValueError):
    """Raised when a presentation is not a finite-dimensional gentle algebra.

    ``clause`` names the violated condition, ``culprit`` the offending
    vertex or arrow token.
    """

    def __init__(self, message: str, clause: str = "syntax", culprit: str | None = None):
        super().__init__(message)
        self.clause = clause
        self.culprit = culprit


@dataclass(frozen=True, order=True)
class Arrow:
    name: str
    source: str
    target: str

    def __str__(self) -> str:
        return f"{self.name}:{self.source}->{self.target}"


def _check_token(kind: str, token: str) -> None:
    if not token or token[0] in "-@#" or any(ch.isspace() for ch in token) or token.startswith("band:"):
        raise GentlenessError(f"invalid {kind} name {token!r}", "syntax", token)


class GentleAlgebra:
    """An immutable, validated gentle algebra KQ/I.

    Build instances with :func:`validate_gentle`; the constructor assumes
    its input has already been checked.
    """

    def __init__(self, vertices, arrows, relations):
        self.vertices: tuple[str, ...] = tuple(vertices)
        self.arrows: dict[str, Arrow] = {a.name: a for a in arrows}
        self.relations: frozenset[tuple[str, str]] = frozenset(relations)

        self._out: dict[str, tuple[str, ...]] = {v: () for v in self.vertices}
        self._in: dict[str, tuple[str, ...]] = {v: () for v in self.vertices}
        for a in sorted(self.arrows):
            arr = self.arrows[a]
            self._out[arr.source] += (a,)
            self._in[arr.target] += (a,)

        self.direct_successors: dict[str, Optional[str]] = {}
        self.relation_successors: dict[str, Optional[str]] = {}
        self.direct_predecessors: dict[str, Optional[str]] = {}
        self.relation_predecessors: dict[str, Optional[str]] = {}
        for a, arr in self.arrows.items():
            nxt = self._out[arr.target]
            self.direct_successors[a] = _only(b for b in nxt if (a, b) not in self.relations)
            self.relation_successors[a] = _only(b for b in nxt if (a, b) in self.relations)
            prv = self._in[arr.source]
            self.direct_predecessors[a] = _only(c for c in prv if (c, a) not in self.relations)
            self.relation_predecessors[a] = _only(c for c in prv if (c, a) in self.relations)

        self.relation_cycles: tuple[tuple[str, ...], ...] = _find_relation_cycles(self)
        self._cycle_of = {a: cyc for cyc in self.relation_cycles for a in cyc}
        self._hash = hash(self._key())

    # -- basic queries -------------------------------------------------

    def arrow(self, name: str) -> Arrow:
        return self.arrows[name]

    def outgoing(self, v: str) -> tuple[str, ...]:
        """Arrow names leaving ``v``, sorted."""
        return self._out[v]

    def incoming(self, v: str) -> tuple[str, ...]:
        return self._in[v]

    def is_relation(self, first: str, second: str) -> bool:
        return (first, second) in self.relations

    def direct_successor(self, a: str) -> Optional[str]:
        return self.direct_successors[a]

    def relation_successor(self, a: str) -> Optional[str]:
        return self.relation_successors[a]

    def direct_predecessor(self, a: str) -> Optional[str]:
        return self.direct_predecessors[a]

    def relation_predecessor(self, a: str) -> Optional[str]:
        return self.relation_predecessors[a]

    def cycle_of(self, a: str) -> Optional[tuple[str, ...]]:
        """The relation cycle containing ``a``, if any."""
        return self._cycle_of.get(a)

    @property
    def cycle_arrows(self) -> frozenset[str]:
        return frozenset(self._cycle_of)

    def direct_path_after(self, a: str) -> tuple[str, ...]:
        """Arrows of the right-maximal path p with ``a p`` nonzero."""
        path = []
        b = self.direct_successors[a]
        while b is not None:
            path.append(b)
            b = self.direct_successors[b]
        return tuple(path)

    def direct_path_before(self, a: str) -> tuple[str, ...]:
        """Arrows of the left-maximal path q with ``q a`` nonzero."""
        path = []
        c = self.direct_predecessors[a]
        while c is not None:
            path.append(c)
            c = self.direct_predecessors[c]
        return tuple(reversed(path))

    def maximal_paths_from(self, v: str) -> list[tuple[str, ...]]:
        return [(a,) + self.direct_path_after(a) for a in self._out[v]]

    def maximal_paths_to(self, v: str) -> list[tuple[str, ...]]:
        return [self.direct_path_before(a) + (a,) for a in self._in[v]]

    def opposite(self) -> "GentleAlgebra":
        """The opposite algebra: arrows reversed, relations read backwards."""
        arrows = [Arrow(a.name, a.target, a.source) for a in self.arrows.values()]
        return GentleAlgebra(self.vertices, arrows, {(b, a) for a, b in self.relations})

    # -- comparison / display -------------------------------------------

    def _key(self):
        return (
            tuple(sorted(self.vertices)),
            tuple(sorted(self.arrows.values())),
            tuple(sorted(self.relations)),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, GentleAlgebra) and self._key() == other._key()

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return (
            f"GentleAlgebra({len(self.vertices)} vertices, {len(self.arrows)} arrows, "
            f"{len(self.relations)} relations)"
        )


def _only(items: Iterable[str]) -> Optional[str]:
    items = list(items)
    return items[0] if items else None


def _find_relation_cycles(alg: GentleAlgebra) -> tuple[tuple[str, ...], ...]:
    cycles = []
    seen: set[str] = set()
    for start in sorted(alg.arrows):
        if start in seen:
            continue
        chain = [start]
        nxt = alg.relation_successors[start]
        while nxt is not None and nxt != start and nxt not in chain:
            chain.append(nxt)
            nxt = alg.relation_successors[nxt]
        if nxt == start:
            seen.update(chain)
            # start is the smallest arrow of its cycle, so this is the lexicographic rotation
            cycles.append(tuple(chain))
    return tuple(cycles)


def validate_gentle(vertices, arrows, relations) -> GentleAlgebra:
    """Check a raw presentation and return the indexed :class:`GentleAlgebra`.

    ``arrows`` is an iterable of ``(name, source, target)`` triples (or
    :class:`Arrow` objects) and ``relations`` of ``(first, second)`` pairs.
    """
    vertices = list(vertices)
    seen_v: set[str] = set()
    for v in vertices:
        _check_token("vertex", v)
        if v in seen_v:
            raise GentlenessError(f"duplicate vertex {v}", "syntax", v)
        seen_v.add(v)

    arrow_objs: list[Arrow] = []
    names: set[str] = set()
    for item in arrows:
        arr = item if isinstance(item, Arrow) else Arrow(*item)
        _check_token("arrow", arr.name)
        if arr.name in names:
            raise GentlenessError(f"duplicate arrow {arr.name}", "syntax", arr.name)
        for end in (arr.source, arr.target):
            if end not in seen_v:
                raise GentlenessError(f"arrow {arr.name} has undeclared endpoint {end}", "syntax", arr.name)
        names.add(arr.name)
        arrow_objs.append(arr)
    by_name = {a.name: a for a in arrow_objs}

    rels: set[tuple[str, str]] = set()
    for first, second in relations:
        for a in (first, second):
            if a not in by_name:
                raise GentlenessError(f"relation uses unknown arrow {a}", "syntax", a)
        if by_name[first].target != by_name[second].source:
            raise GentlenessError(
                f"relation {first}{second} is not a path: t({first}) != s({second})", "syntax", first
            )
        if (first, second) in rels:
            raise GentlenessError(f"duplicate relation {first}{second}", "syntax", first)
        rels.add((first, second))

    out_deg = {v: 0 for v in vertices}
    in_deg = {v: 0 for v in vertices}
    for a in arrow_objs:
        out_deg[a.source] += 1
        in_deg[a.target] += 1
    for v in vertices:
        if out_deg[v] > 2:
            raise GentlenessError(f"valence: more than two arrows start at vertex {v}", "valence", v)
        if in_deg[v] > 2:
            raise GentlenessError(f"valence: more than two arrows end at vertex {v}", "valence", v)

    for a in sorted(by_name):
        arr = by_name[a]
        after = [b for b in sorted(by_name) if by_name[b].source == arr.target]
        before = [c for c in sorted(by_name) if by_name[c].target == arr.source]
        free_after = [b for b in after if (a, b) not in rels]
        rel_after = [b for b in after if (a, b) in rels]
        free_before = [c for c in before if (c, a) not in rels]
        rel_before = [c for c in before if (c, a) in rels]
        if len(free_after) > 1:
            raise GentlenessError(
                f"unique continuation: two arrows x with {a}x not in I ({', '.join(free_after)})", "continuation", a
            )
        if len(free_before) > 1:
            raise GentlenessError(
                f"unique continuation: two arrows x with x{a} not in I ({', '.join(free_before)})", "continuation", a
            )
        if len(rel_after) > 1:
            raise GentlenessError(
                f"unique relation: two arrows x with {a}x in I ({', '.join(rel_after)})", "relation", a
            )
        if len(rel_before) > 1:
            raise GentlenessError(
                f"unique relation: two arrows x with x{a} in I ({', '.join(rel_before)})", "relation", a
            )

    alg = GentleAlgebra(vertices, arrow_objs, rels)
    bad = _direct_cycle_arrow(alg)
    if bad is not None:
        raise GentlenessError(
            f"infinite-dimensional: arrow {bad} lies on an oriented cycle without relations",
            "finite",
            bad,
        )
    return alg


def _direct_cycle_arrow(alg: GentleAlgebra) -> Optional[str]:
    # each arrow has at most one direct successor, so cycles are found by chasing
    state: dict[str, int] = {}
    for start in sorted(alg.arrows):
        path = []
        a: Optional[str] = start
        while a is not None and state.get(a, 0) == 0:
            state[a] = 1
            path.append(a)
            a = alg.direct_successors[a]
        if a is not None and state.get(a) == 1:
            return a
        for b in path:
            state[b] = 2
    return None


_ARROW_NAMES = [chr(c) for c in range(ord("a"), ord("z") + 1)]


def random_gentle(seed: int, max_vertices: int, max_arrows: int, retries: int = 500) -> GentleAlgebra:
    """Sample a gentle algebra deterministically from ``seed``.

    The quiver has between 1 and ``max_vertices`` vertices and at most
    ``max_arrows`` arrows, each vertex having in- and out-valence at most
    two.  At every vertex each (incoming, outgoing) pair is declared either
    composable or a relation so that every arrow has at most one
    composable and at most one relation partner on each side; samples whose
    composable arrows close up into a cycle are rejected and redrawn.
    """
    if max_vertices < 1 or max_arrows < 0:
        raise ValueError("need max_vertices >= 1 and max_arrows >= 0")
    rng = random.Random(seed)
    for _ in range(retries):
        n = rng.randint(1, max_vertices)
        m = rng.randint(0, max_arrows)
        vertices = [str(i) for i in range(1, n + 1)]
        out_deg = dict.fromkeys(vertices, 0)
        in_deg = dict.fromkeys(vertices, 0)
        arrows: list[Arrow] = []
        for _ in range(8 * m):
            if len(arrows) == m:
                break
            s, t = rng.choice(vertices), rng.choice(vertices)
            if out_deg[s] >= 2 or in_deg[t] >= 2:
                continue
            name = _arrow_name(len(arrows))
            arrows.append(Arrow(name, s, t))
            out_deg[s] += 1
            in_deg[t] += 1

        relations = set()
        for v in vertices:
            ins = [a.name for a in arrows if a.target == v]
            outs = [a.name for a in arrows if a.source == v]
            if not ins or not outs:
                continue
            if len(ins) == 2 and len(outs) == 2:
                rng.shuffle(outs)
                relations.add((ins[0], outs[1]))
                relations.add((ins[1], outs[0]))
            elif len(ins) == 2:
                relations.add((rng.choice(ins), outs[0]))
            elif len(outs) == 2:
                relations.add((ins[0], rng.choice(outs)))
            elif rng.random() < 0.5:
                relations.add((ins[0], outs[0]))
        try:
            return validate_gentle(vertices, arrows, relations)
        except GentlenessError:
            continue
    raise ValueError(f"no gentle algebra found for seed {seed} within {retries} attempts")


def _arrow_name(i: int) -> str:
    base = _ARROW_NAMES[i % len(_ARROW_NAMES)]
    return base if i < len(_ARROW_NAMES) else f"{base}{i // len(_ARROW_NAMES)}"
