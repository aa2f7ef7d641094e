"""Extension spaces between string modules.

Ext^1(M(v), M(w)) has a basis of arrow extensions (middle term M(w b^-1 v))
and overlap extensions (two-summand middle term glued along a common
factor).  For n >= 2, Ext^n(M, N) is computed from the end summands R(d) of
Ω(M) and their relation-successor orbits: each contributes
Ext^1(R(a), N) for the arrow a reached after n - 2 steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .algebra import GentleAlgebra
from .homology import OmegaOrbit, omega_orbit, syzygy
from .modules import StringModule
from .strings import (
    Letter,
    StringWord,
    canonical_form,
    concat,
    invert,
    left_coextension_arrows,
    maximal_direct_path_after,
    orientations,
    right_coextension_arrows,
)


@dataclass(frozen=True)
class ExtBasisElement:
    kind: str  # "arrow" or "overlap"
    middle: tuple[StringWord, ...]
    arrow: Optional[str] = None
    overlap: Optional[StringWord] = None

    def describe(self) -> str:
        terms = " + ".join(f"M({w.text})" for w in self.middle)
        if self.kind == "arrow":
            return f"arrow {self.arrow}: {terms}"
        return f"overlap {self.overlap.text}: {terms}"


def _word(m) -> StringWord:
    return m.word if isinstance(m, StringModule) else m


def arrow_extensions(alg: GentleAlgebra, v, w) -> list[ExtBasisElement]:
    """Arrow extensions 0 -> M(w) -> M(w' b^-1 v') -> M(v) -> 0."""
    v, w = _word(v), _word(w)
    found: dict[tuple, ExtBasisElement] = {}
    for vv in orientations(v):
        for ww in orientations(w):
            for b in alg.outgoing(vv.start):
                if alg.arrow(b).target != ww.end:
                    continue
                mid = concat(alg, ww, Letter(alg.arrow(b), True), vv)
                if mid is None:
                    continue
                key = canonical_form(mid).key
                if key not in found:
                    found[key] = ExtBasisElement("arrow", (canonical_form(mid),), arrow=b)
    return [found[k] for k in sorted(found)]


def _factor(w: StringWord, i: int, j: int) -> StringWord:
    if i == j:
        return StringWord.trivial(w.vertices()[i])
    return StringWord.of(w.letters[i:j])


def overlap_extensions(alg: GentleAlgebra, v, w) -> list[ExtBasisElement]:
    """Overlap extensions of M(v) by M(w).

    With v' = vL B m A^-1 vR and w' = wL D^-1 m C wR (each boundary letter
    either absent at a word end or of the shown direction) and at least one
    of B, D and one of A, C present, the middle term is
    M(vL B m C wR) + M(wL D^-1 m A^-1 vR).
    """
    v, w = _word(v), _word(w)
    found: dict[tuple, ExtBasisElement] = {}
    for vv in orientations(v):
        for ww in orientations(w):
            nv, nw = len(vv), len(ww)
            vverts, wverts = vv.vertices(), ww.vertices()
            for i in range(nv + 1):
                if i > 0 and not vv.letters[i - 1].direct:
                    continue
                for j in range(i, nv + 1):
                    if j < nv and not vv.letters[j].inverse:
                        continue
                    m = vv.letters[i:j]
                    for k in range(nw + 1):
                        if k > 0 and not ww.letters[k - 1].inverse:
                            continue
                        l = k + len(m)
                        if l > nw or ww.letters[k:l] != m:
                            continue
                        if not m and wverts[k] != vverts[i]:
                            continue
                        if l < nw and not ww.letters[l].direct:
                            continue
                        if not ((i > 0 or k > 0) and (j < nv or l < nw)):
                            continue
                        base = vverts[i]
                        e1 = concat(alg, _factor(vv, 0, j), _factor(ww, l, nw))
                        e2 = concat(alg, _factor(ww, 0, l), _factor(vv, j, nv))
                        if e1 is None or e2 is None:
                            continue
                        key = min(
                            (vv.key, i, j, ww.key, k, l),
                            (invert(vv).key, nv - j, nv - i, invert(ww).key, nw - l, nw - k),
                        )
                        if key in found:
                            continue
                        mids = tuple(sorted((canonical_form(e1), canonical_form(e2)), key=lambda s: s.key))
                        found[key] = ExtBasisElement(
                            "overlap", mids, overlap=_factor(vv, i, j) if m else StringWord.trivial(base)
                        )
    return [found[k] for k in sorted(found)]


def ext1_basis(alg: GentleAlgebra, m, n) -> list[ExtBasisElement]:
    return arrow_extensions(alg, m, n) + overlap_extensions(alg, m, n)


def ext1_dim(alg: GentleAlgebra, m, n) -> int:
    return len(ext1_basis(alg, m, n))


def _present(ww: StringWord, w: StringWord, mid: StringWord) -> StringWord:
    # show the middle term with N's word in the orientation it was given
    return mid if ww == w else invert(mid)


def ext1_from_R(alg: GentleAlgebra, a: str, n) -> tuple[int, list[StringWord]]:
    """dim Ext^1(R(a), N) with the middle-term words w' b^-1 p, b the relation successor of a."""
    w = _word(n)
    b = alg.relation_successor(a)
    if b is None:
        return 0, []
    p = maximal_direct_path_after(alg, a)
    mids: dict[tuple, StringWord] = {}
    for ww in orientations(w):
        if ww.end != alg.arrow(b).target:
            continue
        mid = concat(alg, ww, Letter(alg.arrow(b), True), p)
        if mid is not None:
            mids.setdefault(canonical_form(mid).key, _present(ww, w, mid))
    return len(mids), [mids[k] for k in sorted(mids)]


@lru_cache(maxsize=65536)
def _ext1_from_R_cached(alg: GentleAlgebra, a: str, w: StringWord) -> int:
    return ext1_from_R(alg, a, w)[0]


def _end_orbits(alg: GentleAlgebra, m: StringModule) -> list[OmegaOrbit]:
    return [omega_orbit(alg, a) for a in syzygy(alg, m).end_arrows()]


def ext_dim(alg: GentleAlgebra, m: StringModule, n: StringModule, degree: int) -> int:
    if degree < 1:
        raise ValueError("degree must be at least 1")
    if degree == 1:
        return ext1_dim(alg, m, n)
    total = 0
    for orb in _end_orbits(alg, m):
        a = orb.at(degree - 2)
        if a is not None:
            total += _ext1_from_R_cached(alg, a, n.word)
    return total


def ext_basis_strings(alg: GentleAlgebra, m: StringModule, n: StringModule, degree: int) -> list[StringWord]:
    if degree < 2:
        raise ValueError("basis strings are reported for degrees >= 2")
    out = []
    for orb in _end_orbits(alg, m):
        a = orb.at(degree - 2)
        if a is not None:
            out.extend(ext1_from_R(alg, a, n)[1])
    return out


@dataclass(frozen=True)
class ExtSequence:
    """dim Ext^i(M, N) for i >= 1: ``prefix`` covers degrees 1..len(prefix), then ``block`` repeats.

    ``period`` 0 means every degree past the prefix is zero.
    """

    prefix: tuple[int, ...]
    period: int
    block: tuple[int, ...]

    @property
    def tail_start(self) -> int:
        return len(self.prefix) + 1

    @property
    def classification(self) -> str:
        return f"periodic({self.period})" if self.period else "eventually_zero"

    def dim(self, i: int) -> int:
        if i < 1:
            raise ValueError("degrees start at 1")
        if i <= len(self.prefix):
            return self.prefix[i - 1]
        if not self.period:
            return 0
        return self.block[(i - self.tail_start) % self.period]

    def values(self, upto: int) -> list[int]:
        return [self.dim(i) for i in range(1, upto + 1)]

    def window_sums(self) -> list[int]:
        """Sums over the period-length windows starting in the tail (one per phase)."""
        if not self.period:
            return []
        return [sum(self.dim(j + t) for t in range(self.period)) for j in range(self.tail_start, self.tail_start + self.period)]


def ext_sequence(alg: GentleAlgebra, m: StringModule, n: StringModule, probe_horizon: int | None = None) -> ExtSequence:
    """Exact eventual form of the Ext dimensions.

    ``probe_horizon`` is accepted for interface symmetry; the answer is exact
    and does not depend on it.
    """
    orbits = _end_orbits(alg, m)
    pre = [len(o.chain) - 1 for o in orbits if not o.cycles]
    n0 = 2 + max(pre, default=0)
    contributing = [
        o.cycle_length for o in orbits if o.cycles and any(_ext1_from_R_cached(alg, a, n.word) for a in o.chain)
    ]
    period = math.lcm(*contributing) if contributing else 0
    prefix = tuple(ext_dim(alg, m, n, d) for d in range(1, n0))
    block = tuple(ext_dim(alg, m, n, d) for d in range(n0, n0 + period))
    return ExtSequence(prefix, period, block)


def coextension_arrows(alg: GentleAlgebra, w: StringWord) -> frozenset[str]:
    """Arrows b for which some orientation w' of w makes w' b^-1 a string."""
    return frozenset(left_coextension_arrows(alg, w)) | frozenset(right_coextension_arrows(alg, w))


def periodicity_condition(alg: GentleAlgebra, m: StringModule, n: StringModule) -> bool:
    """True iff an end of Ω(M) cycles through a relation cycle that N's ends touch.

    Concretely: some relation cycle reached by an end summand of Ω(M)
    contains an arrow b such that N's string can be continued by b^-1.
    """
    cyc_arrows = set()
    for orb in _end_orbits(alg, m):
        if orb.cycles:
            cyc_arrows.update(orb.chain)
    return bool(cyc_arrows & coextension_arrows(alg, n.word))
