"""Ground truth by linear algebra, independent of the string combinatorics.

A module is a :class:`Representation`: a vector space per vertex and one
matrix per arrow, shape ``dim(target) x dim(source)`` acting on column
vectors.  Projective covers are built from indecomposable projectives
``P_v`` in their path bases (right modules: a path p maps to p·b under
arrow b), the top being read off as a complement of the radical.  Ext is
the cohomology of Hom(P_•, N) over a minimal projective resolution.
Everything uses exact rational arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from . import linalg
from .algebra import GentleAlgebra
from .modules import BandModule, StringModule

Path = tuple[str, ...]


@dataclass
class Representation:
    dims: dict[str, int]
    maps: dict[str, list[list]]

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def path_matrix(self, alg: GentleAlgebra, start: str, path: Path) -> list[list]:
        """Matrix of the path (composed left to right) from ``start``."""
        end = alg.arrow(path[-1]).target if path else start
        cols = []
        for i in range(self.dims[start]):
            vec = [1 if k == i else 0 for k in range(self.dims[start])]
            for a in path:
                vec = linalg.matvec(self.maps[a], vec)
            cols.append(vec)
        return linalg.transpose(cols, self.dims[start], self.dims[end])

    def relation_defects(self, alg: GentleAlgebra) -> list[tuple[str, str]]:
        bad = []
        for a, b in sorted(alg.relations):
            arr = alg.arrow(a)
            comp = linalg.matmul(self.maps[b], self.maps[a], inner=self.dims[arr.target])
            if not linalg.is_zero(comp):
                bad.append((a, b))
        return bad

    def dual(self, alg: GentleAlgebra) -> "Representation":
        """Representation of the dual module over the opposite algebra."""
        out = {}
        for a, arr in alg.arrows.items():
            out[a] = linalg.transpose(self.maps[a], self.dims[arr.target], self.dims[arr.source])
        return Representation(dict(self.dims), out)


def _empty_maps(alg: GentleAlgebra, dims: dict[str, int]) -> dict[str, list[list]]:
    return {
        a: linalg.zeros(dims[arr.target], dims[arr.source]) for a, arr in alg.arrows.items()
    }


def to_representation(alg: GentleAlgebra, m: Union[StringModule, BandModule]) -> Representation:
    if isinstance(m, BandModule):
        letters = m.band.letters
        verts = [l.source for l in letters]
        cyclic = True
    else:
        letters = m.word.letters
        verts = m.word.vertices()
        cyclic = False
    dims = dict.fromkeys(alg.vertices, 0)
    local = []
    for v in verts:
        local.append(dims[v])
        dims[v] += 1
    maps = _empty_maps(alg, dims)
    n = len(verts)
    for i, l in enumerate(letters):
        j = (i + 1) % n if cyclic else i + 1
        if l.direct:
            maps[l.name][local[j]][local[i]] = 1
        else:
            maps[l.name][local[i]][local[j]] = 1
    return Representation(dims, maps)


def shuffle_basis(alg: GentleAlgebra, rep: Representation, seed: int) -> Representation:
    """An isomorphic representation in a random integral basis."""
    rng = random.Random(seed)
    changes = {}
    inverses = {}
    for v, d in rep.dims.items():
        # unit lower times unit upper triangular: invertible over the integers
        lower = [[(1 if i == j else (rng.randint(-2, 2) if i > j else 0)) for j in range(d)] for i in range(d)]
        upper = [[(1 if i == j else (rng.randint(-2, 2) if i < j else 0)) for j in range(d)] for i in range(d)]
        g = linalg.matmul(lower, upper, inner=d)
        changes[v] = g
        inverses[v] = _inverse(g)
    maps = {}
    for a, arr in alg.arrows.items():
        s, t = arr.source, arr.target
        m = linalg.matmul(changes[t], rep.maps[a], inner=rep.dims[t])
        maps[a] = linalg.matmul(m, inverses[s], inner=rep.dims[s])
    return Representation(dict(rep.dims), maps)


def _inverse(g: list[list]) -> list[list]:
    d = len(g)
    cols = [linalg.solve_in_basis([[row[j] for row in g] for j in range(d)], [1 if i == k else 0 for i in range(d)]) for k in range(d)]
    return [[cols[k][i] for k in range(d)] for i in range(d)]


# -- projectives in path bases ---------------------------------------------------


@lru_cache(maxsize=None)
def _paths_from(alg: GentleAlgebra, v: str) -> tuple[tuple[Path, str], ...]:
    out: list[tuple[Path, str]] = [((), v)]
    stack: list[tuple[Path, str]] = [((), v)]
    while stack:
        p, end = stack.pop()
        for b in alg.outgoing(end):
            if p and alg.is_relation(p[-1], b):
                continue
            q = p + (b,)
            out.append((q, alg.arrow(b).target))
            stack.append((q, alg.arrow(b).target))
    return tuple(sorted(out))


def projective_representation(alg: GentleAlgebra, v: str) -> Representation:
    paths = _paths_from(alg, v)
    dims = dict.fromkeys(alg.vertices, 0)
    index = {}
    for p, end in paths:
        index[p] = dims[end]
        dims[end] += 1
    maps = _empty_maps(alg, dims)
    for p, end in paths:
        for b in alg.outgoing(end):
            q = p + (b,)
            if q in index:
                maps[b][index[q]][index[p]] = 1
    return Representation(dims, maps)


@dataclass
class _ProjSum:
    """A direct sum of P_v; coordinates at u are (summand, path ending at u)."""

    alg: GentleAlgebra
    tops: list[str]
    coords: dict[str, list[tuple[int, Path]]] = field(default_factory=dict)

    def __post_init__(self):
        self.coords = {u: [] for u in self.alg.vertices}
        for j, v in enumerate(self.tops):
            for p, end in _paths_from(self.alg, v):
                self.coords[end].append((j, p))
        self.index = {u: {c: i for i, c in enumerate(cs)} for u, cs in self.coords.items()}

    def dims(self) -> dict[str, int]:
        return {u: len(cs) for u, cs in self.coords.items()}

    def arrow_matrix(self, b: str) -> list[list]:
        arr = self.alg.arrow(b)
        src, tgt = self.coords[arr.source], self.index[arr.target]
        mat = linalg.zeros(len(self.coords[arr.target]), len(src))
        for col, (j, p) in enumerate(src):
            q = p + (b,)
            if (j, q) in tgt:
                mat[tgt[(j, q)]][col] = 1
        return mat


@dataclass
class CoverMap:
    source_tops: list[str]  # vertices v of the summands P_v
    generators: list[list]  # image of e_v in the target at vertex v
    blocks: dict[str, list[list]]  # per-vertex matrices from the projective sum to the target


@dataclass
class _Stage:
    tops: list[str]
    proj: _ProjSum
    # for each summand: its image in the previous projective sum, as {(j, path): coeff}
    images: list[dict[tuple[int, Path], Fraction]]


def top_generators(alg: GentleAlgebra, rep: Representation) -> list[tuple[str, list]]:
    """Vectors spanning a complement of the radical at each vertex."""
    gens = []
    for v in alg.vertices:
        d = rep.dims[v]
        if d == 0:
            continue
        rad = []
        for a in alg.incoming(v):
            m = rep.maps[a]
            src = rep.dims[alg.arrow(a).source]
            for c in range(src):
                col = [m[r][c] for r in range(d)]
                if any(col):
                    rad.append(col)
        for i in linalg.complement_basis(rad, d):
            gens.append((v, [1 if k == i else 0 for k in range(d)]))
    return gens


def cover_and_kernel(alg: GentleAlgebra, rep: Representation):
    """Projective cover of ``rep`` and its kernel.

    Returns ``(cover, kernel, embedding, projsum)``: ``embedding[u]`` lists
    the kernel basis at u as columns in the projective-sum coordinates.
    """
    gens = top_generators(alg, rep)
    tops = [v for v, _ in gens]
    ps = _ProjSum(alg, tops)
    blocks = {}
    for u in alg.vertices:
        cols = []
        for j, p in ps.coords[u]:
            v, x = gens[j]
            cols.append(linalg.matvec(rep.path_matrix(alg, v, p), x))
        blocks[u] = linalg.transpose(cols, len(cols), rep.dims[u])
        if linalg.rank(blocks[u]) != rep.dims[u]:
            raise AssertionError(f"cover is not surjective at vertex {u}")
    embedding = {u: linalg.nullspace(blocks[u], len(ps.coords[u])) for u in alg.vertices}
    kdims = {u: len(embedding[u]) for u in alg.vertices}
    kmaps = {}
    for b, arr in alg.arrows.items():
        pm = ps.arrow_matrix(b)
        basis_t = embedding[arr.target]
        cols = [linalg.solve_in_basis(basis_t, linalg.matvec(pm, k)) for k in embedding[arr.source]]
        kmaps[b] = linalg.transpose(cols, len(cols), kdims[arr.target])
    cover = CoverMap(tops, [x for _, x in gens], blocks)
    return cover, Representation(kdims, kmaps), embedding, ps


def kernel_representation(alg: GentleAlgebra, rep: Representation) -> Representation:
    return cover_and_kernel(alg, rep)[1]


def cosyzygy_representation(alg: GentleAlgebra, rep: Representation) -> Representation:
    """Cokernel of the injective hull, via projective covers over the opposite algebra."""
    op = alg.opposite()
    return kernel_representation(op, rep.dual(alg)).dual(op)


def resolution_stages(alg: GentleAlgebra, rep: Representation, length: int) -> list[_Stage]:
    """Stages P_0 .. P_length of a minimal projective resolution."""
    stages: list[_Stage] = []
    cover, kernel, emb, ps = cover_and_kernel(alg, rep)
    stages.append(_Stage(cover.source_tops, ps, []))
    for _ in range(length):
        if kernel.is_zero():
            break
        cover, nxt_kernel, nxt_emb, nxt_ps = cover_and_kernel(alg, kernel)
        images = []
        for v, x in zip(cover.source_tops, cover.generators):
            vec = linalg.matvec(linalg.transpose(emb[v], len(emb[v]), len(ps.coords[v])), x)
            images.append({ps.coords[v][i]: c for i, c in enumerate(vec) if c != 0})
        stages.append(_Stage(cover.source_tops, nxt_ps, images))
        kernel, emb, ps = nxt_kernel, nxt_emb, nxt_ps
    return stages


def _hom_coboundary(alg, stages, n: int, target: Representation) -> list[list]:
    """Matrix of Hom(P_{n-1}, N) -> Hom(P_n, N)."""
    prev, cur = stages[n - 1], stages[n]
    col_off = []
    off = 0
    for v in prev.tops:
        col_off.append(off)
        off += target.dims[v]
    ncols = off
    rows = []
    for u, image in zip(cur.tops, cur.images):
        block = linalg.zeros(target.dims[u], ncols)
        for (j, p), c in image.items():
            pm = target.path_matrix(alg, prev.tops[j], p)
            for r in range(target.dims[u]):
                for s in range(target.dims[prev.tops[j]]):
                    if pm[r][s]:
                        block[r][col_off[j] + s] += c * pm[r][s]
        rows.extend(block)
    return rows


def ext_dims_oracle(alg: GentleAlgebra, m, n_obj, max_degree: int) -> list[int]:
    """dim Ext^n(M, N) for n = 1..max_degree."""
    rep_m = m if isinstance(m, Representation) else to_representation(alg, m)
    rep_n = n_obj if isinstance(n_obj, Representation) else to_representation(alg, n_obj)
    stages = resolution_stages(alg, rep_m, max_degree + 1)

    def hom_dim_p(k):
        if k >= len(stages):
            return 0
        return sum(rep_n.dims[v] for v in stages[k].tops)

    ranks = {}

    def delta_rank(k):
        # rank of Hom(P_{k-1}, N) -> Hom(P_k, N)
        if k <= 0 or k >= len(stages):
            return 0
        if k not in ranks:
            ranks[k] = linalg.rank(_hom_coboundary(alg, stages, k, rep_n))
        return ranks[k]

    return [hom_dim_p(k) - delta_rank(k + 1) - delta_rank(k) for k in range(1, max_degree + 1)]


def ext_dim_oracle(alg: GentleAlgebra, m, n_obj, n: int) -> int:
    if n < 1:
        raise ValueError("degree must be at least 1")
    return ext_dims_oracle(alg, m, n_obj, n)[-1]


def hom_dim(alg: GentleAlgebra, x: Representation, y: Representation) -> int:
    offsets = {}
    total = 0
    for v in alg.vertices:
        offsets[v] = total
        total += y.dims[v] * x.dims[v]
    if total == 0:
        return 0

    def var(v, r, c):
        return offsets[v] + r * x.dims[v] + c

    rows = []
    for a, arr in alg.arrows.items():
        s, t = arr.source, arr.target
        xa, ya = x.maps[a], y.maps[a]
        # (F_t X_a - Y_a F_s)[r][c] = 0
        for r in range(y.dims[t]):
            for c in range(x.dims[s]):
                row = [0] * total
                for k in range(x.dims[t]):
                    if xa[k][c]:
                        row[var(t, r, k)] += xa[k][c]
                for k in range(y.dims[s]):
                    if ya[r][k]:
                        row[var(s, k, c)] -= ya[r][k]
                if any(row):
                    rows.append(row)
    return total - (linalg.rank(rows) if rows else 0)


def proj_dim_oracle(alg: GentleAlgebra, rep: Representation, horizon: int) -> Optional[int]:
    """Projective dimension if it is at most ``horizon``, else None."""
    cur = rep
    for d in range(horizon + 1):
        cur = kernel_representation(alg, cur)
        if cur.is_zero():
            return d
    return None


def inj_dim_oracle(alg: GentleAlgebra, rep: Representation, horizon: int) -> Optional[int]:
    return proj_dim_oracle(alg.opposite(), rep.dual(alg), horizon)


@dataclass
class PairReport:
    degrees: list[int]
    combinatorial: list[int]
    oracle: list[int]
    syzygy_dims: tuple[dict, dict]
    cosyzygy_dims: tuple[dict, dict]

    @property
    def first_mismatch(self) -> Optional[str]:
        for d, a, b in zip(self.degrees, self.combinatorial, self.oracle):
            if a != b:
                return f"Ext^{d}: combinatorial {a} != oracle {b}"
        if self.syzygy_dims[0] != self.syzygy_dims[1]:
            return f"syzygy dims {self.syzygy_dims[0]} != oracle {self.syzygy_dims[1]}"
        if self.cosyzygy_dims[0] != self.cosyzygy_dims[1]:
            return f"cosyzygy dims {self.cosyzygy_dims[0]} != oracle {self.cosyzygy_dims[1]}"
        return None

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def _nonzero(d: dict) -> dict:
    return {k: v for k, v in sorted(d.items()) if v}


def check_pair(alg: GentleAlgebra, m: StringModule, n: StringModule, horizon: int) -> PairReport:
    from .ext import ext_dim
    from .homology import cosyzygy, syzygy

    rep_m = to_representation(alg, m)
    comb = [ext_dim(alg, m, n, d) for d in range(1, horizon + 1)]
    orc = ext_dims_oracle(alg, rep_m, n, horizon)
    syz = (_nonzero(syzygy(alg, m).dim_vector()), _nonzero(kernel_representation(alg, rep_m).dims))
    cos = (_nonzero(cosyzygy(alg, m).dim_vector()), _nonzero(cosyzygy_representation(alg, rep_m).dims))
    return PairReport(list(range(1, horizon + 1)), comb, orc, syz, cos)
