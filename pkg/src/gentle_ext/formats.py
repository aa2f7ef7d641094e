"""Plain-text algebra and triangulation files.

Algebra files::

    vertex <name>
    arrow <name> <source> <target>
    rel <first> <second>

Triangulation files::

    edge <name>
    triangle <e1> <e2> <e3>      # counterclockwise
    boundary <name>

``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .algebra import GentleAlgebra, GentlenessError, validate_gentle


class FormatError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_algebra(text: str) -> GentleAlgebra:
    vertices, arrows, rels = [], [], []
    for lineno, toks in _lines(text):
        kind, args = toks[0], toks[1:]
        want = {"vertex": 1, "arrow": 3, "rel": 2}.get(kind)
        if want is None:
            raise FormatError(f"line {lineno}: unknown directive {kind!r}")
        if len(args) != want:
            raise FormatError(f"line {lineno}: {kind} takes {want} field(s)")
        if kind == "vertex":
            vertices.append(args[0])
        elif kind == "arrow":
            arrows.append(tuple(args))
        else:
            rels.append(tuple(args))
    return validate_gentle(vertices, arrows, rels)


def format_algebra(alg: GentleAlgebra) -> str:
    lines = [f"vertex {v}" for v in alg.vertices]
    lines += [f"arrow {a.name} {a.source} {a.target}" for a in sorted(alg.arrows.values())]
    lines += [f"rel {a} {b}" for a, b in sorted(alg.relations)]
    return "\n".join(lines) + "\n"


def load_algebra(path) -> GentleAlgebra:
    return parse_algebra(Path(path).read_text())


def parse_triangulation(text: str):
    from .triangulation import Triangulation

    edges, triangles, boundary = [], [], []
    for lineno, toks in _lines(text):
        kind, args = toks[0], toks[1:]
        want = {"edge": 1, "triangle": 3, "boundary": 1}.get(kind)
        if want is None:
            raise FormatError(f"line {lineno}: unknown directive {kind!r}")
        if len(args) != want:
            raise FormatError(f"line {lineno}: {kind} takes {want} field(s)")
        if kind == "edge":
            edges.append(args[0])
        elif kind == "triangle":
            triangles.append(tuple(args))
        else:
            boundary.append(args[0])
    return Triangulation(tuple(edges), tuple(triangles), frozenset(boundary))


def format_triangulation(tri) -> str:
    lines = [f"edge {e}" for e in tri.edges]
    lines += [f"boundary {e}" for e in tri.edges if e in tri.boundary]
    lines += ["triangle " + " ".join(t) for t in tri.triangles]
    return "\n".join(lines) + "\n"


def load_triangulation(path):
    return parse_triangulation(Path(path).read_text())


def fixture_text(name: str) -> str:
    return resources.files("gentle_ext.fixtures").joinpath(name).read_text()


def fixture_algebra(name: str) -> GentleAlgebra:
    """Shipped algebra by stem, e.g. ``"C4"``."""
    return parse_algebra(fixture_text(f"{name}.alg"))


def fixture_triangulation(name: str):
    return parse_triangulation(fixture_text(f"{name}.tri"))


__all__ = [
    "FormatError",
    "GentlenessError",
    "fixture_algebra",
    "fixture_triangulation",
    "format_algebra",
    "format_triangulation",
    "load_algebra",
    "load_triangulation",
    "parse_algebra",
    "parse_triangulation",
]
