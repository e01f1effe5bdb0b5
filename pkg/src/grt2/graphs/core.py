"""Graph containers, admissibility checks and the interchange format."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Graph:
    """An unoriented graph with a linear order on its edges.

    ``ext`` flags which vertices are external; external vertices keep
    their index under relabeling, internal ones are interchangeable.
    Edges are stored as (min, max) pairs; their position in the tuple is
    the edge order.
    """

    n: int
    ext: tuple
    edges: tuple

    def __post_init__(self):
        if len(self.ext) != self.n:
            raise ValueError("ext flags must cover every vertex")
        norm = []
        for u, v in self.edges:
            if u == v:
                raise ValueError("simple loops are not allowed")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError("edge endpoint out of range")
            norm.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def num_edges(self):
        return len(self.edges)

    def valence(self, v):
        return sum(1 for e in self.edges for w in e if w == v)

    def valences(self):
        out = [0] * self.n
        for u, v in self.edges:
            out[u] += 1
            out[v] += 1
        return out

    def neighbors(self, v):
        out = []
        for u, w in self.edges:
            if u == v:
                out.append(w)
            elif w == v:
                out.append(u)
        return out

    def incident_edges(self, v):
        return [i for i, (u, w) in enumerate(self.edges) if v in (u, w)]

    def external_vertices(self):
        return [v for v in range(self.n) if self.ext[v]]

    def internal_vertices(self):
        return [v for v in range(self.n) if not self.ext[v]]

    def has_double_edge(self):
        return len(set(self.edges)) < len(self.edges)

    def is_connected(self):
        return _connected(self.n, self.edges, set(range(self.n)))

    def is_internally_connected(self):
        keep = {v for v in range(self.n) if not self.ext[v]}
        inner = [e for e in self.edges if e[0] in keep and e[1] in keep]
        return _connected(self.n, inner, keep)


def _connected(n, edges, keep):
    if not keep:
        return True
    adj = {v: [] for v in keep}
    for u, v in edges:
        if u in keep and v in keep:
            adj[u].append(v)
            adj[v].append(u)
    start = next(iter(keep))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(keep)


def icg_check(g):
    """Raise ValueError naming the violated admissibility condition of an
    internally connected graph with external vertices; return g if fine.
    """
    if not any(g.ext):
        raise ValueError("inadmissible: no external vertex")
    if g.has_double_edge():
        raise ValueError("inadmissible: double edge")
    vals = g.valences()
    for v in g.internal_vertices():
        if vals[v] < 3:
            raise ValueError(
                "inadmissible: internal vertex %d has valence %d < 3"
                % (v, vals[v]))
    if not g.is_internally_connected():
        raise ValueError("inadmissible: not internally connected")
    if g.internal_vertices() and not g.is_connected():
        raise ValueError("inadmissible: internal part not joined to an "
                         "external vertex")
    return g


def gc2_check(g):
    """Admissibility for the connected graph complex: no external
    vertices, everything at least trivalent, connected.  Double edges are
    allowed here; they die under canonicalization.
    """
    if any(g.ext):
        raise ValueError("inadmissible: external vertex in a closed graph")
    vals = g.valences()
    for v in range(g.n):
        if vals[v] < 3:
            raise ValueError(
                "inadmissible: vertex %d has valence %d < 3" % (v, vals[v]))
    if not g.is_connected():
        raise ValueError("inadmissible: not connected")
    return g


def icg_degree(g):
    """1 - #edges + 2 #internal vertices."""
    return 1 - g.num_edges + 2 * len(g.internal_vertices())


def gc2_degree(g):
    """-2 - #edges + 2 #vertices."""
    return -2 - g.num_edges + 2 * g.n


def weight(g):
    """Number of edges adjacent to external vertices."""
    ext = set(g.external_vertices())
    return sum(1 for u, v in g.edges if u in ext or v in ext)


@dataclass(frozen=True)
class GraphClass:
    """A canonical representative of a graph modulo internal relabeling
    and edge reordering.  Instances are produced by ``canonicalize``.
    """

    n: int
    ext: tuple
    edges: tuple

    @property
    def graph(self):
        return Graph(self.n, self.ext, self.edges)

    def sort_key(self):
        return (self.n, self.ext, self.edges)


class GraphSum:
    """A finite rational linear combination of graph classes."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for cls, coeff in items:
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                data[cls] = data.get(cls, Fraction(0)) + coeff
        self.terms = {k: v for k, v in data.items() if v != 0}

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, GraphSum) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for cls, coeff in other.terms.items():
            out[cls] = out.get(cls, Fraction(0)) + coeff
        return GraphSum(out)

    def __neg__(self):
        return GraphSum({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return GraphSum({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def restrict(self, predicate):
        """Sub-sum of the terms whose class satisfies the predicate."""
        return GraphSum(
            {k: v for k, v in self.terms.items() if predicate(k)})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "GraphSum(0)"
        return "GraphSum(%d classes)" % len(self.terms)


def graph_to_text(g):
    """Line-oriented interchange form; the edge rank is the edge order."""
    lines = ["V %d E %d" % (g.n, g.num_edges)]
    for v in range(g.n):
        lines.append("v %d %s" % (v, "ext" if g.ext[v] else "int"))
    for rank, (u, v) in enumerate(g.edges):
        lines.append("e %d %d %d" % (rank, u, v))
    return "\n".join(lines) + "\n"


def graph_from_text(text):
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("V "):
        raise ValueError("graph text must start with a 'V <n> E <m>' header")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "V" or head[2] != "E":
        raise ValueError("malformed header: %r" % lines[0])
    n, m = int(head[1]), int(head[3])
    ext = [False] * n
    edges = [None] * m
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "v":
            idx, flag = int(parts[1]), parts[2]
            if flag not in ("ext", "int"):
                raise ValueError("vertex flag must be ext or int: %r" % ln)
            ext[idx] = flag == "ext"
        elif parts[0] == "e":
            rank, u, v = int(parts[1]), int(parts[2]), int(parts[3])
            if not 0 <= rank < m:
                raise ValueError("edge rank %d out of range" % rank)
            edges[rank] = (u, v)
        else:
            raise ValueError("unknown line: %r" % ln)
    if any(e is None for e in edges):
        raise ValueError("missing edge ranks")
    return Graph(n, tuple(ext), tuple(edges))
