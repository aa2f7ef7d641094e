"""Syzygies, resolutions and Ext spaces for string modules over gentle algebras."""

from .algebra import Arrow, GentleAlgebra, GentlenessError, random_gentle, validate_gentle
from .ext import ext1_dim, ext_basis_strings, ext_dim, ext_sequence, ExtSequence
from .formats import fixture_algebra, fixture_triangulation, load_algebra, parse_algebra
from .homology import cosyzygy, proj_dim, inj_dim, resolution, syzygy
from .modules import StringModule, injective, module_from_text, projective, simple, string_module
from .strings import StringWord, canonical_form, invert, parse_string

__version__ = "0.1.0"
