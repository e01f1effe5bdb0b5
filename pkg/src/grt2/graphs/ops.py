"""Operations on graphs: differentials, insertion, filtrations, the
external-marking map and the bridge to the polynomial model.
"""

from __future__ import annotations

from itertools import combinations, product

from ..poly import Poly3
from ..theta import ThetaElement
from .build import theta_graph, wheel
from .canon import canonicalize
from .core import Graph, GraphSum, gc2_degree, icg_check


def internal_loop_count(g):
    """First Betti number of the subgraph on internal vertices."""
    internal = [v for v in range(g.n) if not g.ext[v]]
    keep = set(internal)
    inner = [e for e in g.edges if e[0] in keep and e[1] in keep]
    if not internal:
        return 0
    parent = {v: v for v in internal}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    components = len(internal)
    for u, v in inner:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return len(inner) - len(internal) + components


def filtration_value(g):
    """Number of vertices minus the maximal vertex valence."""
    return g.n - max(g.valences())


def is_one_vertex_irreducible(g):
    """Whether the graph stays connected after deleting any one vertex.

    Deleting a vertex from a graph on at most two vertices leaves a
    trivially connected remainder.
    """
    for v in range(g.n):
        keep = set(range(g.n)) - {v}
        if len(keep) <= 1:
            continue
        adj = {u: [] for u in keep}
        for a, b in g.edges:
            if a in keep and b in keep:
                adj[a].append(b)
                adj[b].append(a)
        start = next(iter(keep))
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(keep):
            return False
    return True


# -- vertex splitting --------------------------------------------------------


def _split(g, v, moved):
    """Split vertex v, moving the edges at positions ``moved`` to a new
    internal vertex; the connecting edge comes last in the order.
    """
    w = g.n
    edges = list(g.edges)
    for i in moved:
        a, b = edges[i]
        edges[i] = (w, b) if a == v else (a, w)
    edges.append((v, w))
    return Graph(g.n + 1, g.ext + (False,), tuple(edges))


def split_terms(g, v):
    """All admissible ways of splitting one vertex.

    An internal vertex splits into two internal vertices, each keeping
    at least two of the old edges; the two halves give the same graph,
    so the first incident edge is pinned to the original vertex.  An
    external vertex sheds any two or more of its edges onto the new
    internal vertex.
    """
    incident = g.incident_edges(v)
    m = len(incident)
    if g.ext[v]:
        for size in range(2, m + 1):
            for moved in combinations(incident, size):
                yield _split(g, v, moved)
    else:
        if m < 4:
            return
        rest = incident[1:]
        for size in range(2, m - 1):
            for moved in combinations(rest, size):
                yield _split(g, v, moved)


def icg_differential_raw(g, loop_preserving=True):
    """Vertex-splitting differential of a single labeled graph, as a
    canonicalized sum.  With ``loop_preserving`` the terms whose internal
    loop count exceeds the input's are discarded.
    """
    base = internal_loop_count(g)
    out = {}
    for v in range(g.n):
        for term in split_terms(g, v):
            if not term.is_internally_connected():
                continue
            if loop_preserving and internal_loop_count(term) > base:
                continue
            cls, sign = canonicalize(term, check=False)
            if cls is None:
                continue
            out[cls] = out.get(cls, 0) + sign
    return GraphSum(out)


def icg_differential(gs, loop_preserving=True):
    """Linear extension of the splitting differential to graph sums."""
    total = GraphSum.zero()
    for cls, coeff in gs.terms.items():
        total = total + icg_differential_raw(
            cls.graph, loop_preserving).scale(coeff)
    return total


# -- operadic insertion ------------------------------------------------------


def insert_at(g1, j, g2, assignment):
    """Replace vertex j of g1 by g2, reattaching the loose edges to the
    vertices of g2 named by ``assignment`` (one target per loose edge, in
    edge order).  Edges of g1 keep their positions, edges of g2 follow.
    """
    n1, n2 = g1.n, g2.n

    def map1(v):
        return v if v < j else v - 1

    def map2(u):
        return n1 - 1 + u

    loose = g1.incident_edges(j)
    if len(assignment) != len(loose):
        raise ValueError("need one target per loose edge")
    target = dict(zip(loose, assignment))
    edges = []
    for i, (u, v) in enumerate(g1.edges):
        if i in target:
            other = v if u == j else u
            edges.append((map1(other), map2(target[i])))
        else:
            edges.append((map1(u), map1(v)))
    for u, v in g2.edges:
        edges.append((map2(u), map2(v)))
    n = n1 + n2 - 1
    return Graph(n, (False,) * n, tuple(edges))


def pre_lie_raw(g1, g2):
    """Sum over all vertices of g1 and all reattachments of the loose
    edges to vertices of g2, canonicalized.
    """
    out = {}
    targets = range(g2.n)
    for j in range(g1.n):
        loose = g1.incident_edges(j)
        for assignment in product(targets, repeat=len(loose)):
            term = insert_at(g1, j, g2, assignment)
            cls, sign = canonicalize(term, check=False)
            if cls is None:
                continue
            out[cls] = out.get(cls, 0) + sign
    return GraphSum(out)


def gc2_bracket(s1, s2):
    """Graded commutator of the insertion product on graph sums."""
    total = GraphSum.zero()
    for c1, a1 in s1.terms.items():
        for c2, a2 in s2.terms.items():
            d1 = gc2_degree(c1.graph)
            d2 = gc2_degree(c2.graph)
            koszul = -1 if (d1 * d2) % 2 else 1
            part = pre_lie_raw(c1.graph, c2.graph) \
                - koszul * pre_lie_raw(c2.graph, c1.graph)
            total = total + part.scale(a1 * a2)
    return total


def wheel_class(spokes):
    """The canonical class of an odd wheel, as a one-term sum."""
    cls, sign = canonicalize(wheel(spokes))
    if cls is None:
        raise AssertionError("odd wheels are nonzero")
    return GraphSum({cls: sign})


def bowtie(a, b):
    """Insert the b-spoke wheel into the hub of the a-spoke wheel, with
    all but the last loose edge landing on the inner hub and the last
    one on a rim vertex (keeping the result one-vertex irreducible).
    """
    g1, g2 = wheel(a), wheel(b)
    loose = g1.incident_edges(0)
    assignment = [0] * (len(loose) - 1) + [1]
    return insert_at(g1, 0, g2, tuple(assignment))


def bowtie_difference(a, b):
    """The difference of the two joined-wheel classes on spokes a and b.

    The orientation (insert the a-wheel into the b-wheel, minus the
    other way around) is pinned so that marking the top-valence vertex
    of this difference is exactly what the splitting differential of the
    haired figure-eight produces next to four times the theta class.
    """
    out = {}
    for g, coeff in ((bowtie(b, a), 1), (bowtie(a, b), -1)):
        cls, sign = canonicalize(g, check=False)
        if cls is None:
            raise AssertionError("bowtie classes are nonzero")
        out[cls] = out.get(cls, 0) + coeff * sign
    return GraphSum(out)


# -- marking a vertex as external -------------------------------------------


def mark_one_external_raw(g):
    """Sum over all vertices of the graph with that vertex flagged
    external; terms violating admissibility are dropped.
    """
    out = {}
    for v in range(g.n):
        def remap(w):
            return 0 if w == v else (w + 1 if w < v else w)

        edges = tuple((remap(a), remap(b)) for a, b in g.edges)
        flags = tuple(i == 0 for i in range(g.n))
        marked = Graph(g.n, flags, edges)
        try:
            icg_check(marked)
        except ValueError:
            continue
        cls, sign = canonicalize(marked, check=False)
        if cls is None:
            continue
        out[cls] = out.get(cls, 0) + sign
    return GraphSum(out)


def mark_one_external(gs):
    total = GraphSum.zero()
    for cls, coeff in gs.terms.items():
        total = total + mark_one_external_raw(cls.graph).scale(coeff)
    return total


def two_loop_part(gs):
    """Terms with exactly two internal loops."""
    return gs.restrict(lambda cls: internal_loop_count(cls.graph) == 2)


# -- the bridge between theta graphs and monomials ---------------------------


def _theta_shape(g):
    """Recognize a hairy theta shape; returns (grade, counts).
    Raises ValueError for anything else.  Which junction carries the
    grade-1 hair does not matter: reversing the strands is an
    isomorphism onto the reference layout either way.
    """
    exts = g.external_vertices()
    if len(exts) != 1:
        raise ValueError("theta shapes have exactly one external vertex")
    ext = exts[0]
    internal = set(g.internal_vertices())
    int_adj = {v: [] for v in internal}
    hairs = {v: 0 for v in internal}
    for u, v in g.edges:
        if u in internal and v in internal:
            int_adj[u].append(v)
            int_adj[v].append(u)
        elif u in internal:
            hairs[u] += 1
        elif v in internal:
            hairs[v] += 1
    junctions = sorted(v for v in internal if len(int_adj[v]) == 3)
    if len(junctions) != 2:
        raise ValueError("not a theta shape: need two trivalent junctions")
    a, b = junctions
    for v in internal:
        if v in (a, b):
            if hairs[v] > 1:
                raise ValueError("not a theta shape: junction with two hairs")
        elif len(int_adj[v]) != 2 or hairs[v] != 1:
            raise ValueError("not a theta shape: bad strand vertex")
    counts = []
    seen = {a, b}
    for start in int_adj[a]:
        if start == b:
            counts.append(0)
            continue
        length = 0
        prev, cur = a, start
        while cur != b:
            if cur in seen or len(int_adj[cur]) != 2:
                raise ValueError("not a theta shape: strand leaves the path")
            seen.add(cur)
            length += 1
            nxt = [w for w in int_adj[cur] if w != prev]
            prev, cur = cur, nxt[0]
        counts.append(length)
    if len(seen) != len(internal):
        raise ValueError("not a theta shape: stray internal vertices")
    junction_hairs = hairs[a] + hairs[b]
    grade = 2 - junction_hairs
    return grade, tuple(counts)


def theta_graph_encode(g):
    """Read a theta-shaped graph as a coinvariant class.

    The hair counts give the monomial; the sign comes from comparing the
    graph with the reference layout through canonicalization.  A graph
    whose class vanishes encodes to zero.
    """
    grade, counts = _theta_shape(g)
    cls, sign = canonicalize(g, check=True)
    mono = Poly3.monomial(counts)
    if cls is None:
        return ThetaElement(grade, Poly3.zero())
    ref = theta_graph(grade, counts)
    ref_cls, ref_sign = canonicalize(ref, check=False)
    if ref_cls != cls:
        raise AssertionError("reference theta does not match input class")
    return ThetaElement(grade, (sign * ref_sign) * mono)


def theta_sum_encode(gs):
    """Encode a sum of theta-shaped classes, grade by grade."""
    by_grade = {}
    for cls, coeff in gs.terms.items():
        elem = theta_graph_encode(cls.graph)
        grade = elem.grade
        by_grade[grade] = by_grade.get(grade, Poly3.zero()) \
            + elem.value.scale(coeff)
    return {
        grade: ThetaElement(grade, value)
        for grade, value in by_grade.items()
    }


def theta_graph_decode(elem_grade, monomial):
    """The reference graph of a single monomial; inverse of the encoding
    on canonical monomials.
    """
    return theta_graph(elem_grade, monomial)
