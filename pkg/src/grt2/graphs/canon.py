"""Backend selection and the public canonicalization entry point."""

from __future__ import annotations

from .core import Graph, GraphClass, gc2_check, icg_check

try:
    from ._canon_cy import canonical_form as _canonical_form
    CANON_BACKEND = "compiled"
except ImportError:
    from ._canon_py import canonical_form as _canonical_form
    CANON_BACKEND = "python"


def canonicalize(g, check=True):
    """Minimal labeled representative of a graph modulo internal
    relabeling, with the parity of the induced edge permutation.

    Returns (GraphClass, sign) with sign in {+1, -1}, or (None, 0) when
    some automorphism induces an odd edge permutation (the class is
    zero).  With ``check`` the admissibility conditions of the relevant
    family (external vertices present or not) are enforced first.
    """
    if check:
        if any(g.ext):
            icg_check(g)
        else:
            gc2_check(g)
    edges, sign = _canonical_form(g.n, g.ext, g.edges)
    if sign == 0:
        return None, 0
    return GraphClass(g.n, g.ext, edges), sign


def class_of(g, check=True):
    """The GraphSum-ready (class, sign) of a raw graph, as a dict entry."""
    cls, sign = canonicalize(g, check=check)
    if cls is None:
        return {}
    return {cls: sign}
