"""Seeded random instances and the invariant suite run over them."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .algebra import GentleAlgebra, random_gentle
from .ext import ext1_dim, ext_dim, ext_sequence, periodicity_condition
from .formats import format_algebra
from .homology import (
    band_cosyzygy,
    band_inj_dim,
    band_proj_dim,
    band_syzygy,
    omega_orbit,
    proj_dim,
    projective_cover,
    syzygy,
)
from .modules import BandModule, StringModule, band_module, is_injective, is_projective, r_module, string_module
from .oracle import (
    check_pair,
    inj_dim_oracle,
    kernel_representation,
    proj_dim_oracle,
    to_representation,
)
from .strings import Band, Letter, band_defect, canonical_band_letters, enumerate_strings, pair_defect

CHECKS = ("oracle", "syzygy_shape", "omega_cycle", "window_bound", "band_dims", "periodicity")
RIGIDITY_CLASSES = ("pd0", "pd1", "pd2", "pd3+", "inf_loop", "inf_cycle")


def enumerate_bands(alg: GentleAlgebra, max_length: int) -> list[Band]:
    """Bands of length <= max_length up to rotation and inversion."""
    found = {}
    letters_all = [Letter(a, inv) for a in alg.arrows.values() for inv in (False, True)]
    frontier = [(l,) for l in letters_all]
    while frontier:
        nxt = []
        for word in frontier:
            if band_defect(alg, word) is None:
                canon = canonical_band_letters(word)
                found[tuple(l.key for l in canon)] = canon
            if len(word) == max_length:
                continue
            for l in letters_all:
                cand = word + (l,)
                if pair_defect(alg, word[-1], l) is None:
                    nxt.append(cand)
        frontier = nxt
    return [Band(found[k]) for k in sorted(found)]


@dataclass
class Failure:
    check: str
    seed: int
    detail: str
    algebra: str
    size: int

    def describe(self) -> str:
        return f"[{self.check}] seed={self.seed}: {self.detail}\n{self.algebra}"


@dataclass
class FuzzReport:
    seed: int
    count: int
    horizon: int
    checked: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    failures: list[Failure] = field(default_factory=list)
    # per pd class of R(α): [arrows seen, arrows with Ext^1(R(α), R(α)) != 0]
    rigidity: dict[str, list[int]] = field(default_factory=lambda: {c: [0, 0] for c in RIGIDITY_CLASSES})

    def violations(self, check: str) -> list[Failure]:
        return [f for f in self.failures if f.check == check]

    @property
    def ok(self) -> bool:
        return not self.failures

    def minimal_failure(self) -> Failure | None:
        return min(self.failures, key=lambda f: (f.size, f.seed, f.check), default=None)


def sample_pairs(alg: GentleAlgebra, rng: random.Random, pairs: int, max_length: int = 4):
    words = enumerate_strings(alg, max_length)
    return [(string_module(alg, rng.choice(words)), string_module(alg, rng.choice(words))) for _ in range(pairs)]


def check_syzygy_shape(alg: GentleAlgebra, m: StringModule) -> str | None:
    syz = syzygy(alg, m)
    for p in syz.middle:
        if not is_projective(alg, p):
            return f"middle summand {p} of Ω({m}) is not projective"
    expected = sum(p.dim for p in projective_cover(alg, m)) - m.dim
    if syz.dim != expected:
        return f"dim Ω({m}) = {syz.dim}, cover count gives {expected}"
    return None


def check_omega_cycles(alg: GentleAlgebra) -> list[str]:
    bad = []
    for cyc in alg.relation_cycles:
        for a in cyc:
            orb = omega_orbit(alg, a)
            if orb.cycle_length != len(cyc) or orb.at(len(cyc)) != a:
                bad.append(f"orbit of {a} does not return after {len(cyc)} steps")
    return bad


def check_window(alg, m, n) -> str | None:
    seq = ext_sequence(alg, m, n)
    sums = seq.window_sums()
    if sums and (len(set(sums)) > 1 or max(sums) > 2):
        return f"Ext({m}, {n}) tail {seq.block} has window sums {sums}"
    return None


def check_periodicity(alg, m, n) -> str | None:
    seq = ext_sequence(alg, m, n)
    cond = periodicity_condition(alg, m, n)
    lengths = [len(c) for c in alg.relation_cycles]
    big = math.lcm(*lengths) if lengths else 1
    horizon = 3 * big + seq.tail_start
    direct = [ext_dim(alg, m, n, d) for d in range(1, horizon + 1)]
    if direct != seq.values(horizon):
        return f"sequence {seq} disagrees with direct values {direct}"
    tail_nonzero = any(direct[seq.tail_start - 1:])
    if (seq.period > 0) != cond or tail_nonzero != cond:
        return f"Ext({m}, {n}): classification {seq.classification}, condition {cond}"
    return None


def check_band(alg: GentleAlgebra, b: BandModule, horizon: int = 4) -> str | None:
    pd, idim = band_proj_dim(alg, b), band_inj_dim(alg, b)
    if (pd, idim) != (1, 1):
        return f"{b}: combinatorial pd={pd} id={idim}"
    rep = to_representation(alg, b)
    if rep.relation_defects(alg):
        return f"{b}: representation violates relations"
    opd, oid = proj_dim_oracle(alg, rep, horizon), inj_dim_oracle(alg, rep, horizon)
    if (opd, oid) != (1, 1):
        return f"{b}: oracle pd={opd} id={oid}"
    kdim = kernel_representation(alg, rep).total_dim()
    if kdim != band_syzygy(alg, b).dim:
        return f"{b}: syzygy dimension {band_syzygy(alg, b).dim} vs oracle {kdim}"
    if not all(is_injective(alg, i) for i in band_cosyzygy(alg, b).middle):
        return f"{b}: cosyzygy not injective"
    return None


def rigidity_class(alg: GentleAlgebra, a: str) -> str:
    pd = proj_dim(alg, r_module(alg, a))
    if pd == math.inf:
        return "inf_loop" if omega_orbit(alg, a).cycle_length == 1 else "inf_cycle"
    return f"pd{pd}" if pd <= 2 else "pd3+"


def rigidity_census(alg: GentleAlgebra, into: dict[str, list[int]]) -> None:
    """Tally Ext^1(R(α), R(α)) != 0 by the projective dimension of R(α)."""
    for a in alg.arrows:
        row = into[rigidity_class(alg, a)]
        row[0] += 1
        r = r_module(alg, a)
        if ext1_dim(alg, r, r):
            row[1] += 1


def run_fuzz(
    seed: int,
    count: int,
    horizon: int = 6,
    pairs: int = 5,
    max_vertices: int = 8,
    max_arrows: int = 12,
    band_length: int = 4,
) -> FuzzReport:
    """Run every check on ``count`` algebras drawn from seeds derived from ``seed``."""
    report = FuzzReport(seed, count, horizon)
    master = random.Random(seed)
    for _ in range(count):
        s = master.randrange(2**31)
        alg = random_gentle(s, max_vertices, max_arrows)
        rng = random.Random(s)
        text = format_algebra(alg)
        size = len(alg.arrows)

        def fail(check, detail, extra=0):
            report.failures.append(Failure(check, s, detail, text, size + extra))

        rigidity_census(alg, report.rigidity)
        for msg in check_omega_cycles(alg):
            fail("omega_cycle", msg)
        report.checked["omega_cycle"] += 1
        for m, n in sample_pairs(alg, rng, pairs):
            extra = m.dim + n.dim
            rep = check_pair(alg, m, n, horizon)
            report.checked["oracle"] += 1
            if not rep.ok:
                fail("oracle", f"M={m} N={n}: {rep.first_mismatch}", extra)
            msg = check_syzygy_shape(alg, m)
            report.checked["syzygy_shape"] += 1
            if msg:
                fail("syzygy_shape", msg, extra)
            msg = check_window(alg, m, n)
            report.checked["window_bound"] += 1
            if msg:
                fail("window_bound", msg, extra)
            msg = check_periodicity(alg, m, n)
            report.checked["periodicity"] += 1
            if msg:
                fail("periodicity", msg, extra)
        for band in enumerate_bands(alg, band_length):
            msg = check_band(alg, band_module(alg, band))
            report.checked["band_dims"] += 1
            if msg:
                fail("band_dims", msg, len(band))
    return report
