"""Strings and bands over a gentle algebra.

Text syntax: whitespace-separated arrow tokens, ``-x`` for the formal
inverse of ``x``, ``@v`` for the trivial string at ``v``.  Bands use the
same letters with an optional ``band:`` prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Arrow, GentleAlgebra


class StringError(ValueError):
    pass


@dataclass(frozen=True)
class Letter:
    arrow: Arrow
    inverse: bool = False

    @property
    def name(self) -> str:
        return self.arrow.name

    @property
    def source(self) -> str:
        return self.arrow.target if self.inverse else self.arrow.source

    @property
    def target(self) -> str:
        return self.arrow.source if self.inverse else self.arrow.target

    @property
    def direct(self) -> bool:
        return not self.inverse

    def inv(self) -> "Letter":
        return Letter(self.arrow, not self.inverse)

    @property
    def token(self) -> str:
        return ("-" if self.inverse else "") + self.arrow.name

    @property
    def key(self) -> tuple[str, bool]:
        # direct letters sort before inverse letters on the same arrow
        return (self.arrow.name, self.inverse)

    def __str__(self) -> str:
        return self.token


@dataclass(frozen=True)
class StringWord:
    """A walk; ``base`` is its start vertex (the only data for a trivial string)."""

    letters: tuple[Letter, ...]
    base: str

    @classmethod
    def trivial(cls, v: str) -> "StringWord":
        return cls((), v)

    @classmethod
    def of(cls, letters) -> "StringWord":
        letters = tuple(letters)
        if not letters:
            raise ValueError("use StringWord.trivial for the empty word")
        return cls(letters, letters[0].source)

    @property
    def is_trivial(self) -> bool:
        return not self.letters

    @property
    def start(self) -> str:
        return self.base

    @property
    def end(self) -> str:
        return self.letters[-1].target if self.letters else self.base

    def vertices(self) -> list[str]:
        return [self.base] + [l.target for l in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def key(self) -> tuple:
        if not self.letters:
            return ((("@" + self.base), False),)
        return tuple(l.key for l in self.letters)

    @property
    def text(self) -> str:
        if not self.letters:
            return "@" + self.base
        return " ".join(l.token for l in self.letters)

    def is_direct(self) -> bool:
        return all(l.direct for l in self.letters)

    def is_inverse(self) -> bool:
        return all(l.inverse for l in self.letters)

    def __str__(self) -> str:
        return self.text

    def __repr__(self) -> str:
        return f"StringWord({self.text!r})"


@dataclass(frozen=True)
class SegmentDecomposition:
    """Alternating inverse/direct segments w_1 ... w_{2k}; w_1 and w_{2k} may be trivial."""

    segments: tuple[StringWord, ...]

    @property
    def k(self) -> int:
        return len(self.segments) // 2

    def peaks(self) -> list[str]:
        return [self.segments[i].end for i in range(0, len(self.segments), 2)]

    def valleys(self) -> list[str]:
        return [self.segments[0].start] + [self.segments[i].end for i in range(1, len(self.segments), 2)]


@dataclass(frozen=True)
class Band:
    """A primitive cyclic string with both letter directions, stored in canonical rotation."""

    letters: tuple[Letter, ...]

    @property
    def text(self) -> str:
        return "band:" + " ".join(l.token for l in self.letters)

    def vertices(self) -> list[str]:
        return [l.source for l in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return self.text


# -- validity -------------------------------------------------------------


def pair_defect(alg: GentleAlgebra, first: Letter, second: Letter) -> Optional[str]:
    """Why ``first second`` is not a string, or None when it is."""
    if first.target != second.source:
        return f"endpoint mismatch between {first.token} and {second.token}"
    if first.arrow == second.arrow and first.inverse != second.inverse:
        return f"backtrack {first.token} {second.token}"
    if first.direct and second.direct and alg.is_relation(first.name, second.name):
        return f"relation {first.name}{second.name} in I"
    if first.inverse and second.inverse and alg.is_relation(second.name, first.name):
        return f"relation {second.name}{first.name} in I"
    return None


def word_defect(alg: GentleAlgebra, letters) -> Optional[str]:
    for a, b in zip(letters, letters[1:]):
        why = pair_defect(alg, a, b)
        if why:
            return why
    return None


def is_string(alg: GentleAlgebra, letters) -> bool:
    letters = tuple(letters)
    return word_defect(alg, letters) is None


def make_word(alg: GentleAlgebra, letters, base: str | None = None) -> StringWord:
    """Build a validated word; ``base`` is required only for the empty word."""
    letters = tuple(letters)
    if not letters:
        if base is None:
            raise StringError("trivial string needs a base vertex")
        return StringWord.trivial(base)
    why = word_defect(alg, letters)
    if why:
        raise StringError(why)
    return StringWord.of(letters)


def try_word(alg: GentleAlgebra, letters, base: str | None = None) -> Optional[StringWord]:
    try:
        return make_word(alg, letters, base)
    except StringError:
        return None


def _parse_letters(alg: GentleAlgebra, tokens: list[str]) -> list[Letter]:
    out = []
    for tok in tokens:
        inverse = tok.startswith("-")
        name = tok[1:] if inverse else tok
        if name not in alg.arrows:
            raise StringError(f"unknown arrow {name!r}")
        out.append(Letter(alg.arrow(name), inverse))
    return out


def parse_string(alg: GentleAlgebra, text: str) -> StringWord:
    tokens = text.split()
    if not tokens:
        raise StringError("empty string text; use @vertex for a trivial string")
    if tokens[0].startswith("@"):
        if len(tokens) != 1:
            raise StringError("a trivial string @v stands alone")
        v = tokens[0][1:]
        if v not in alg.vertices:
            raise StringError(f"unknown vertex {v!r}")
        return StringWord.trivial(v)
    return make_word(alg, _parse_letters(alg, tokens))


def invert(w: StringWord) -> StringWord:
    if w.is_trivial:
        return w
    return StringWord(tuple(l.inv() for l in reversed(w.letters)), w.end)


def canonical_form(w: StringWord) -> StringWord:
    iw = invert(w)
    return iw if iw.key < w.key else w


def orientations(w: StringWord) -> list[StringWord]:
    iw = invert(w)
    return [w] if iw == w else [w, iw]


def concat(alg: GentleAlgebra, *parts) -> Optional[StringWord]:
    """Concatenate words and loose letters; None unless the result is a string."""
    letters: list[Letter] = []
    base = None
    for part in parts:
        if isinstance(part, Letter):
            if base is None:
                base = part.source
            elif not letters and base != part.source:
                return None
            letters.append(part)
        else:
            if base is None:
                base = part.start
            elif part.start != (letters[-1].target if letters else base):
                return None
            letters.extend(part.letters)
    return try_word(alg, letters, base)


def segments(w: StringWord) -> SegmentDecomposition:
    runs: list[list[Letter]] = []
    for l in w.letters:
        if runs and runs[-1][0].inverse == l.inverse:
            runs[-1].append(l)
        else:
            runs.append([l])
    segs = [StringWord.of(r) for r in runs]
    if not segs or segs[0].letters[0].direct:
        segs.insert(0, StringWord.trivial(w.start))
    if len(segs) % 2 == 1:
        segs.append(StringWord.trivial(w.end))
    return SegmentDecomposition(tuple(segs))


def substrings(w: StringWord):
    n = len(w)
    verts = w.vertices()
    for i in range(n + 1):
        yield StringWord.trivial(verts[i])
        for j in range(i + 1, n + 1):
            yield StringWord.of(w.letters[i:j])


# -- end extensions -------------------------------------------------------


def left_extension_arrows(alg: GentleAlgebra, w: StringWord) -> tuple[str, ...]:
    """Arrows d with ``-d w`` a string (all arrows leaving the vertex if w is trivial)."""
    if w.is_trivial:
        return alg.outgoing(w.base)
    first = w.letters[0]
    return tuple(
        d for d in alg.outgoing(w.start) if pair_defect(alg, Letter(alg.arrow(d), True), first) is None
    )


def right_extension_arrows(alg: GentleAlgebra, w: StringWord) -> tuple[str, ...]:
    """Arrows d with ``w d`` a string."""
    if w.is_trivial:
        return alg.outgoing(w.base)
    last = w.letters[-1]
    return tuple(d for d in alg.outgoing(w.end) if pair_defect(alg, last, Letter(alg.arrow(d))) is None)


def left_coextension_arrows(alg: GentleAlgebra, w: StringWord) -> tuple[str, ...]:
    """Arrows g with ``g w`` a string (all arrows into the vertex if w is trivial)."""
    if w.is_trivial:
        return alg.incoming(w.base)
    first = w.letters[0]
    return tuple(g for g in alg.incoming(w.start) if pair_defect(alg, Letter(alg.arrow(g)), first) is None)


def right_coextension_arrows(alg: GentleAlgebra, w: StringWord) -> tuple[str, ...]:
    """Arrows g with ``w -g`` a string."""
    if w.is_trivial:
        return alg.incoming(w.base)
    last = w.letters[-1]
    return tuple(
        g for g in alg.incoming(w.end) if pair_defect(alg, last, Letter(alg.arrow(g), True)) is None
    )


def _split_ends(left: tuple[str, ...], right: tuple[str, ...], trivial: bool):
    if trivial:
        # both sets are the same pair of arrows: smaller one goes left
        return (left[0] if left else None), (left[1] if len(left) > 1 else None)
    return (left[0] if left else None), (right[0] if right else None)


def end_arrows(alg: GentleAlgebra, w: StringWord) -> tuple[Optional[str], Optional[str]]:
    """(left, right) arrows whose R-modules are the end summands of the first syzygy."""
    return _split_ends(left_extension_arrows(alg, w), right_extension_arrows(alg, w), w.is_trivial)


def end_coarrows(alg: GentleAlgebra, w: StringWord) -> tuple[Optional[str], Optional[str]]:
    """(left, right) arrows whose U-modules are the end summands of the first cosyzygy."""
    return _split_ends(left_coextension_arrows(alg, w), right_coextension_arrows(alg, w), w.is_trivial)


def minimally_ends_in_cycle(alg: GentleAlgebra, w: StringWord) -> tuple[Optional[str], Optional[str]]:
    cyc = alg.cycle_arrows
    left, right = end_arrows(alg, w)
    return (left if left in cyc else None), (right if right in cyc else None)


def maximal_direct_path_after(alg: GentleAlgebra, a: str) -> StringWord:
    """The string p of R(a): right-maximal direct path with ``a p`` nonzero."""
    path = alg.direct_path_after(a)
    if not path:
        return StringWord.trivial(alg.arrow(a).target)
    return StringWord.of(Letter(alg.arrow(b)) for b in path)


def maximal_direct_path_before(alg: GentleAlgebra, a: str) -> StringWord:
    """The string q of U(a): left-maximal direct path with ``q a`` nonzero."""
    path = alg.direct_path_before(a)
    if not path:
        return StringWord.trivial(alg.arrow(a).source)
    return StringWord.of(Letter(alg.arrow(b)) for b in path)


def direct_word(alg: GentleAlgebra, path, base: str) -> StringWord:
    if not path:
        return StringWord.trivial(base)
    return StringWord.of(Letter(alg.arrow(b)) for b in path)


# -- bands ----------------------------------------------------------------


def _rotations(letters: tuple[Letter, ...]):
    for i in range(len(letters)):
        yield letters[i:] + letters[:i]


def canonical_band_letters(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    inv = tuple(l.inv() for l in reversed(letters))
    candidates = list(_rotations(letters)) + list(_rotations(inv))
    return min(candidates, key=lambda ls: tuple(l.key for l in ls))


def band_defect(alg: GentleAlgebra, letters: tuple[Letter, ...]) -> Optional[str]:
    if not letters:
        return "empty band"
    n = len(letters)
    for i in range(n):
        why = pair_defect(alg, letters[i], letters[(i + 1) % n])
        if why:
            return why
    if all(l.direct for l in letters) or all(l.inverse for l in letters):
        return "band must contain both direct and inverse letters"
    for d in range(1, n):
        if n % d == 0 and letters == letters[d:] + letters[:d]:
            return "band is a proper power"
    return None


def validate_band(alg: GentleAlgebra, text: str) -> Band:
    body = text.strip()
    if body.startswith("band:"):
        body = body[len("band:"):]
    tokens = body.split()
    if any(t.startswith("@") for t in tokens):
        raise StringError("bands have no trivial letters")
    letters = tuple(_parse_letters(alg, tokens))
    why = band_defect(alg, letters)
    if why:
        raise StringError(why)
    return Band(canonical_band_letters(letters))


def make_band(alg: GentleAlgebra, letters) -> Band:
    letters = tuple(letters)
    why = band_defect(alg, letters)
    if why:
        raise StringError(why)
    return Band(canonical_band_letters(letters))


def enumerate_strings(alg: GentleAlgebra, max_length: int) -> list[StringWord]:
    """All strings of length <= max_length up to inversion, in canonical form, sorted."""
    out = {}
    for v in alg.vertices:
        w = StringWord.trivial(v)
        out[w.key] = w
    frontier = [
        (Letter(a, inv),) for a in alg.arrows.values() for inv in (False, True)
    ] if max_length >= 1 else []
    while frontier:
        nxt = []
        for letters in frontier:
            w = canonical_form(StringWord.of(letters))
            out[w.key] = w
            if len(letters) == max_length:
                continue
            last = letters[-1]
            for a in alg.arrows.values():
                for inv in (False, True):
                    l = Letter(a, inv)
                    if pair_defect(alg, last, l) is None:
                        nxt.append(letters + (l,))
        frontier = nxt
    return [out[k] for k in sorted(out)]
