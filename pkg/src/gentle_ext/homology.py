"""Projective covers, syzygies and cosyzygies of string modules, and resolutions.

The first syzygy of M(w) splits into R(d) for the arrow d extending w on
the left, projectives at the interior valleys of w, and R(d') for the arrow
extending w on the right.  After that only the two end summands matter:
Ω(R(a)) = R(b) where ab is a relation, and Ω(R(a)) = 0 when a has no
relation successor.  Cosyzygies are the mirror image with U(g) and
injectives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .algebra import GentleAlgebra
from .modules import (
    BandModule,
    StringModule,
    injective,
    is_injective,
    is_projective,
    peak_positions,
    projective,
    r_module,
    simple,
    u_module,
    valley_positions,
)
from .strings import end_arrows, end_coarrows


@dataclass(frozen=True)
class SyzygyDecomposition:
    left: Optional[tuple[str, StringModule]]
    middle: tuple[StringModule, ...]
    right: Optional[tuple[str, StringModule]]
    kind: str = "syzygy"

    def summands(self) -> list[StringModule]:
        out = []
        if self.left:
            out.append(self.left[1])
        out.extend(self.middle)
        if self.right:
            out.append(self.right[1])
        return out

    def end_arrows(self) -> list[str]:
        return [e[0] for e in (self.left, self.right) if e]

    @property
    def dim(self) -> int:
        return sum(m.dim for m in self.summands())

    def dim_vector(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for m in self.summands():
            for v, d in m.dim_vector:
                out[v] = out.get(v, 0) + d
        return out

    def is_zero(self) -> bool:
        return not self.left and not self.right and not self.middle

    def describe(self) -> str:
        if self.is_zero():
            return "0"
        letter = "R" if self.kind == "syzygy" else "U"
        parts = []
        if self.left:
            parts.append(f"{letter}({self.left[0]})={self.left[1]}")
        parts.extend(str(m) for m in self.middle)
        if self.right:
            parts.append(f"{letter}({self.right[0]})={self.right[1]}")
        return " + ".join(parts)


@dataclass(frozen=True)
class OmegaOrbit:
    """Relation-successor chain of an arrow (or predecessor chain for cosyzygies).

    A chain either runs into an arrow without a successor (``cycle_length``
    is 0 and the last module is projective, resp. injective) or is a whole
    relation cycle starting at the given arrow.
    """

    chain: tuple[str, ...]
    cycle_length: int

    @property
    def cycles(self) -> bool:
        return self.cycle_length > 0

    @property
    def terminal(self) -> str:
        return f"cycle({self.cycle_length})" if self.cycles else "projective_reached"

    def at(self, i: int) -> Optional[str]:
        """Arrow at step ``i`` (0-based), or None once the chain has stopped."""
        if self.cycles:
            return self.chain[i % self.cycle_length]
        return self.chain[i] if i < len(self.chain) else None


def omega_orbit(alg: GentleAlgebra, a: str, horizon: int | None = None) -> OmegaOrbit:
    return _orbit(alg.relation_successor, a, horizon or len(alg.arrows) + 1)


def coomega_orbit(alg: GentleAlgebra, a: str, horizon: int | None = None) -> OmegaOrbit:
    return _orbit(alg.relation_predecessor, a, horizon or len(alg.arrows) + 1)


def _orbit(step, a: str, horizon: int) -> OmegaOrbit:
    chain = [a]
    nxt = step(a)
    while nxt is not None and nxt != a:
        if len(chain) > horizon:
            raise RuntimeError("orbit exceeded horizon")
        chain.append(nxt)
        nxt = step(nxt)
    return OmegaOrbit(tuple(chain), len(chain) if nxt == a else 0)


# -- first syzygy / cosyzygy ---------------------------------------------------


def projective_cover(alg: GentleAlgebra, m: StringModule) -> list[StringModule]:
    return [projective(alg, v) for v in sorted(m.top)]


def injective_hull(alg: GentleAlgebra, m: StringModule) -> list[StringModule]:
    return [injective(alg, v) for v in m.socle]


def syzygy(alg: GentleAlgebra, m: StringModule) -> SyzygyDecomposition:
    w = m.word
    verts = w.vertices()
    left, right = end_arrows(alg, w)
    inner = [verts[i] for i in valley_positions(w.letters) if 0 < i < len(w)]
    return SyzygyDecomposition(
        (left, r_module(alg, left)) if left else None,
        tuple(projective(alg, v) for v in inner),
        (right, r_module(alg, right)) if right else None,
    )


def cosyzygy(alg: GentleAlgebra, m: StringModule) -> SyzygyDecomposition:
    w = m.word
    verts = w.vertices()
    left, right = end_coarrows(alg, w)
    inner = [verts[i] for i in peak_positions(w.letters) if 0 < i < len(w)]
    return SyzygyDecomposition(
        (left, u_module(alg, left)) if left else None,
        tuple(injective(alg, v) for v in inner),
        (right, u_module(alg, right)) if right else None,
        kind="cosyzygy",
    )


# -- resolutions -------------------------------------------------------------------


@dataclass(frozen=True)
class ResolutionDegree:
    degree: int
    projectives: tuple[str, ...]  # P_v listed by vertex
    syzygy: str  # description of the kernel at this degree

    def describe(self) -> str:
        return " + ".join(f"P_{v}" for v in self.projectives) if self.projectives else "0"


@dataclass(frozen=True)
class Resolution:
    module: StringModule
    degrees: tuple[ResolutionDegree, ...]
    tail: Optional[tuple[int, int]]  # (start degree, period) of the periodic part
    length: float  # projective dimension

    def projectives_at(self, d: int) -> tuple[str, ...]:
        return self.degrees[d].projectives if d < len(self.degrees) else ()


def _degree_data(alg, first: SyzygyDecomposition, orbits: list[OmegaOrbit], d: int):
    """Projectives at degree d >= 1 and the R-summands of the next syzygy."""
    projs = []
    if d == 1:
        projs.extend(m.top[0] for m in first.middle)
    nxt = []
    for orb in orbits:
        a = orb.at(d - 1)
        if a is None:
            continue
        projs.append(alg.arrow(a).target)
        b = orb.at(d)
        if b is not None:
            nxt.append(f"R({b})={r_module(alg, b)}")
    return tuple(sorted(projs)), (" + ".join(nxt) if nxt else "0")


def _tail(first: SyzygyDecomposition, orbits: list[OmegaOrbit], data) -> Optional[tuple[int, int]]:
    cyc = [o for o in orbits if o.cycles]
    if not cyc:
        return None
    period = math.lcm(*(o.cycle_length for o in cyc))
    start = max([2 if first.middle else 1] + [len(o.chain) + 1 for o in orbits if not o.cycles])
    while start > 1 and data(start - 1) == data(start - 1 + period):
        start -= 1
    return start, period


def default_depth(alg: GentleAlgebra) -> int:
    lengths = [len(c) for c in alg.relation_cycles]
    return 2 + 2 * (math.lcm(*lengths) if lengths else 1)


def resolution(alg: GentleAlgebra, m: StringModule, depth: int | None = None) -> Resolution:
    """Minimal projective resolution through ``depth`` (inclusive), with periodic tail."""
    if depth is None:
        depth = default_depth(alg)
    first = syzygy(alg, m)
    orbits = [omega_orbit(alg, a) for a in first.end_arrows()]

    def data(d):
        if d == 0:
            return tuple(sorted(m.top)), first.describe()
        return _degree_data(alg, first, orbits, d)

    degrees = []
    for d in range(depth + 1):
        projs, syz = data(d)
        degrees.append(ResolutionDegree(d, projs, syz))
    return Resolution(m, tuple(degrees), _tail(first, orbits, data), proj_dim(alg, m))


def proj_dim(alg: GentleAlgebra, m: StringModule) -> float:
    if is_projective(alg, m):
        return 0
    first = syzygy(alg, m)
    best = 1
    for a in first.end_arrows():
        orb = omega_orbit(alg, a)
        if orb.cycles:
            return math.inf
        best = max(best, len(orb.chain))
    return best


def inj_dim(alg: GentleAlgebra, m: StringModule) -> float:
    if is_injective(alg, m):
        return 0
    first = cosyzygy(alg, m)
    best = 1
    for a in first.end_arrows():
        orb = coomega_orbit(alg, a)
        if orb.cycles:
            return math.inf
        best = max(best, len(orb.chain))
    return best


def r_proj_dim(alg: GentleAlgebra, a: str) -> float:
    orb = omega_orbit(alg, a)
    return math.inf if orb.cycles else len(orb.chain) - 1


def gl_dim_status(alg: GentleAlgebra) -> float:
    """Global dimension: max of pd over the simples; ``math.inf`` if infinite."""
    return max((proj_dim(alg, simple(alg, v)) for v in alg.vertices), default=0)


# -- bands ---------------------------------------------------------------------


def _cyclic_positions(letters, want_valley: bool) -> list[int]:
    n = len(letters)
    out = []
    for i in range(n):
        prev, cur = letters[i - 1], letters[i]
        if want_valley and prev.direct and cur.inverse:
            out.append(i)
        if not want_valley and prev.inverse and cur.direct:
            out.append(i)
    return out


def band_syzygy(alg: GentleAlgebra, b: BandModule) -> SyzygyDecomposition:
    letters = b.band.letters
    vs = [letters[i].source for i in _cyclic_positions(letters, True)]
    return SyzygyDecomposition(None, tuple(projective(alg, v) for v in vs), None)


def band_cosyzygy(alg: GentleAlgebra, b: BandModule) -> SyzygyDecomposition:
    letters = b.band.letters
    vs = [letters[i].source for i in _cyclic_positions(letters, False)]
    return SyzygyDecomposition(None, tuple(injective(alg, v) for v in vs), None, kind="cosyzygy")


def band_top(b: BandModule) -> list[str]:
    letters = b.band.letters
    return [letters[i].source for i in _cyclic_positions(letters, False)]


def band_socle(b: BandModule) -> list[str]:
    letters = b.band.letters
    return [letters[i].source for i in _cyclic_positions(letters, True)]


def band_proj_dim(alg: GentleAlgebra, b: BandModule) -> int:
    # a band module is never projective and its first syzygy is a sum of projectives
    return 1 if band_syzygy(alg, b).middle else 0


def band_inj_dim(alg: GentleAlgebra, b: BandModule) -> int:
    return 1 if band_cosyzygy(alg, b).middle else 0
