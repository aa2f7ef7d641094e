"""String and quasi-simple band modules, and the named families S(v), P_v, I_v, R(a), U(a)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .algebra import GentleAlgebra
from .strings import (
    Band,
    Letter,
    StringWord,
    canonical_form,
    maximal_direct_path_after,
    maximal_direct_path_before,
    parse_string,
    validate_band,
)


def peak_positions(letters) -> list[int]:
    """Basis positions not hit by any arrow map (the top)."""
    n = len(letters)
    out = []
    for i in range(n + 1):
        hit_from_left = i > 0 and letters[i - 1].direct
        hit_from_right = i < n and letters[i].inverse
        if not hit_from_left and not hit_from_right:
            out.append(i)
    return out


def valley_positions(letters) -> list[int]:
    """Basis positions killed by every arrow (the socle)."""
    n = len(letters)
    out = []
    for i in range(n + 1):
        maps_left = i > 0 and letters[i - 1].inverse
        maps_right = i < n and letters[i].direct
        if not maps_left and not maps_right:
            out.append(i)
    return out


@dataclass(frozen=True)
class StringModule:
    word: StringWord
    dim_vector: tuple[tuple[str, int], ...] = field(compare=False)
    top: tuple[str, ...] = field(compare=False)
    socle: tuple[str, ...] = field(compare=False)

    @property
    def dim(self) -> int:
        return len(self.word) + 1

    def dims(self) -> dict[str, int]:
        return dict(self.dim_vector)

    @property
    def text(self) -> str:
        return self.word.text

    def __str__(self) -> str:
        return f"M({self.word.text})"


@dataclass(frozen=True)
class BandModule:
    band: Band
    dim_vector: tuple[tuple[str, int], ...] = field(compare=False)
    quasi_length: int = 1
    parameter: int = 1

    def dims(self) -> dict[str, int]:
        return dict(self.dim_vector)

    @property
    def dim(self) -> int:
        return len(self.band)

    def __str__(self) -> str:
        return f"B({self.band.text})"


def string_module(alg: GentleAlgebra, w: StringWord) -> StringModule:
    w = canonical_form(w)
    verts = w.vertices()
    dims = Counter(verts)
    top = tuple(verts[i] for i in peak_positions(w.letters))
    socle = tuple(verts[i] for i in valley_positions(w.letters))
    return StringModule(w, tuple(sorted(dims.items())), top, socle)


def simple(alg: GentleAlgebra, v: str) -> StringModule:
    return string_module(alg, StringWord.trivial(v))


def projective_word(alg: GentleAlgebra, v: str) -> StringWord:
    """The word p^-1 q of P_v, p and q the maximal paths leaving v (oriented p-branch first)."""
    branches = alg.maximal_paths_from(v)
    letters: list[Letter] = []
    if branches:
        letters += [Letter(alg.arrow(a), True) for a in reversed(branches[0])]
    if len(branches) > 1:
        letters += [Letter(alg.arrow(a)) for a in branches[1]]
    if not letters:
        return StringWord.trivial(v)
    return StringWord.of(letters)


def injective_word(alg: GentleAlgebra, v: str) -> StringWord:
    """The word p q^-1 of I_v, p and q the maximal paths ending at v."""
    branches = alg.maximal_paths_to(v)
    letters: list[Letter] = []
    if branches:
        letters += [Letter(alg.arrow(a)) for a in branches[0]]
    if len(branches) > 1:
        letters += [Letter(alg.arrow(a), True) for a in reversed(branches[1])]
    if not letters:
        return StringWord.trivial(v)
    return StringWord.of(letters)


def projective(alg: GentleAlgebra, v: str) -> StringModule:
    return string_module(alg, projective_word(alg, v))


def injective(alg: GentleAlgebra, v: str) -> StringModule:
    return string_module(alg, injective_word(alg, v))


def r_module(alg: GentleAlgebra, a: str) -> StringModule:
    """R(a) = a·Λ."""
    return string_module(alg, maximal_direct_path_after(alg, a))


def u_module(alg: GentleAlgebra, a: str) -> StringModule:
    """U(a), the dual of Λ·a."""
    return string_module(alg, maximal_direct_path_before(alg, a))


def is_projective(alg: GentleAlgebra, m: StringModule) -> bool:
    if len(m.top) != 1:
        return False
    return m.word == canonical_form(projective_word(alg, m.top[0]))


def is_injective(alg: GentleAlgebra, m: StringModule) -> bool:
    if len(m.socle) != 1:
        return False
    return m.word == canonical_form(injective_word(alg, m.socle[0]))


def band_module(alg: GentleAlgebra, band: Band | str) -> BandModule:
    if isinstance(band, str):
        band = validate_band(alg, band)
    dims = Counter(band.vertices())
    return BandModule(band, tuple(sorted(dims.items())))


def module_from_text(alg: GentleAlgebra, text: str) -> StringModule:
    return string_module(alg, parse_string(alg, text))

