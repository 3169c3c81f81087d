"""Colored oriented multigraphs and their two-row tabloids.

A graph on r vertices with edges colored by the tensor factors encodes a
two-row filling: the size-two columns of factor j are exactly the
color-j edges, tail on top.  Loops are allowed (they come from columns
with a repeated value and carry the zero covariant) and an edge counts
toward both endpoints' per-color incidence bound d_j.

Classification follows the usual dictionary: a graph is rich when it has
more edges than vertices; it is MCB (maximally connected bipartite) when
it is bipartite and connected, or a tree together with isolated nodes;
the type of an MCB graph is the pair of bipartition class sizes of its
maximal connected component, larger first.

``generators_catalog`` lists the minimal-generator tabloids in degrees
2, 3 and 4 for a given format, with factors normalized to weakly
decreasing degrees (the catalogs are stated up to that permutation).
Degree four is gated on the format containing 3, or 2 and 1, or three
1s; the four-hook degree-three shape carries two independent tabloids.
"""

from itertools import permutations
from math import ceil

from .generic import TabloidFilling, filling_from_columns
from .symfun import NPartition

CANONICAL_FORM_MAX_R = 8


class AdmissibilityError(ValueError):
    """Raised when a vertex exceeds its per-color incidence bound."""

    def __init__(self, vertex, color, count, bound):
        self.vertex = vertex
        self.color = color
        super().__init__(
            "vertex %d has %d incident edges of color %d (bound d_%d = %d)"
            % (vertex, count, color, color, bound))


class DslError(ValueError):
    """Raised on malformed edge-list text, with position information."""

    def __init__(self, message, line, column):
        self.line = line
        self.column = column
        super().__init__("%s (line %d, column %d)" % (message, line, column))


class ColoredGraph:
    """Oriented multigraph with colored edges on vertices 1..r."""

    __slots__ = ("r", "d", "edges")

    def __init__(self, r, d, edges):
        if r < 1:
            raise ValueError("graphs need at least one vertex")
        self.r = r
        self.d = tuple(d)
        edges = tuple(sorted(tuple(e) for e in edges))
        for (u, v, c) in edges:
            if not (1 <= u <= r and 1 <= v <= r):
                raise ValueError("edge (%d, %d) endpoint out of range" % (u, v))
            if not (1 <= c <= len(self.d)):
                raise ValueError("edge color %d out of range" % c)
        self.edges = edges
        self._check_admissible()

    def _check_admissible(self):
        counts = {}
        for (u, v, c) in self.edges:
            counts[(u, c)] = counts.get((u, c), 0) + 1
            counts[(v, c)] = counts.get((v, c), 0) + 1
        for (vertex, color), count in sorted(counts.items()):
            if count > self.d[color - 1]:
                raise AdmissibilityError(vertex, color, count, self.d[color - 1])

    def shape(self):
        """Two-row shape: color-j edge count in the second row."""
        m = [0] * len(self.d)
        for (_, _, c) in self.edges:
            m[c - 1] += 1
        comps = []
        for j, dj in enumerate(self.d):
            lam2 = m[j]
            lam1 = self.r * dj - lam2
            comps.append((lam1, lam2) if lam2 else (lam1,))
        return NPartition(comps)

    def edge_count(self, color=None):
        if color is None:
            return len(self.edges)
        return sum(1 for e in self.edges if e[2] == color)

    def reversed_edges(self):
        return ColoredGraph(self.r, self.d,
                            [(v, u, c) for (u, v, c) in self.edges])

    def __eq__(self, other):
        return (isinstance(other, ColoredGraph) and self.r == other.r
                and self.d == other.d and self.edges == other.edges)

    def __hash__(self):
        return hash((self.r, self.d, self.edges))

    def __repr__(self):
        return "ColoredGraph(r=%d, d=%s, edges=%s)" % (self.r, self.d, list(self.edges))


class Classification:
    """Flags from classify(): rich / triangle / odd cycle, and MCB type."""

    __slots__ = ("rich", "has_triangle", "has_odd_cycle", "mcb")

    def __init__(self, rich, has_triangle, has_odd_cycle, mcb):
        self.rich = rich
        self.has_triangle = has_triangle
        self.has_odd_cycle = has_odd_cycle
        self.mcb = mcb

    def __repr__(self):
        return ("Classification(rich=%r, has_triangle=%r, has_odd_cycle=%r, mcb=%r)"
                % (self.rich, self.has_triangle, self.has_odd_cycle, self.mcb))

    def __eq__(self, other):
        return (isinstance(other, Classification)
                and (self.rich, self.has_triangle, self.has_odd_cycle, self.mcb)
                == (other.rich, other.has_triangle, other.has_odd_cycle, other.mcb))


def _components(graph):
    parent = list(range(graph.r + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (u, v, _) in graph.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    comps = {}
    for v in range(1, graph.r + 1):
        comps.setdefault(find(v), []).append(v)
    return list(comps.values())


def _two_coloring(graph, vertices):
    """2-color the vertices of one component; None when not bipartite."""
    adj = {}
    for (u, v, _) in graph.edges:
        if u == v:
            if u in vertices:
                return None
            continue
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    color = {}
    for start in vertices:
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def classify(graph):
    """Exact classification flags; raises AdmissibilityError upstream."""
    rich = len(graph.edges) > graph.r

    pairs = set()
    loops = False
    for (u, v, _) in graph.edges:
        if u == v:
            loops = True
        else:
            pairs.add(frozenset((u, v)))
    has_triangle = False
    verts = sorted({v for p in pairs for v in p})
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if frozenset((u, v)) not in pairs:
                continue
            for w in verts:
                if w in (u, v):
                    continue
                if frozenset((u, w)) in pairs and frozenset((v, w)) in pairs:
                    has_triangle = True
    has_odd_cycle = loops
    comps = _components(graph)
    colorings = {}
    for comp in comps:
        col = _two_coloring(graph, comp)
        colorings[tuple(comp)] = col
        if col is None:
            has_odd_cycle = True

    mcb = None
    edged = [comp for comp in comps
             if any(u in comp or v in comp for (u, v, _) in graph.edges)]
    if not graph.edges:
        mcb = (1, 0)
    elif len(edged) == 1:
        comp = edged[0]
        col = colorings[tuple(comp)]
        if col is not None:
            nv = len(comp)
            ne = len(graph.edges)
            spanning = nv == graph.r
            is_tree = ne == nv - 1
            if spanning or is_tree:
                sizes = [sum(1 for v in comp if col[v] == 0),
                         sum(1 for v in comp if col[v] == 1)]
                mcb = (max(sizes), min(sizes))
    return Classification(rich, has_triangle, has_odd_cycle, mcb)


def bipartition_classes(graph):
    """Vertex classes (larger, smaller) of the maximal connected component
    of an MCB graph; ties broken toward the lexicographically smaller head set."""
    cls = classify(graph)
    if cls.mcb is None:
        raise ValueError("graph is not MCB")
    if not graph.edges:
        return ((1,), ())
    edged = {v for (u, v, _) in graph.edges} | {u for (u, v, _) in graph.edges}
    comp = next(c for c in _components(graph) if edged & set(c))
    col = _two_coloring(graph, comp)
    a = tuple(sorted(v for v in comp if col[v] == 0))
    b = tuple(sorted(v for v in comp if col[v] == 1))
    if len(a) < len(b) or (len(a) == len(b) and b < a):
        a, b = b, a
    return a, b


def is_canonically_oriented(graph):
    """True when every edge points into the smaller bipartition class."""
    big, small = bipartition_classes(graph)
    small_set = set(small)
    return all(v in small_set for (u, v, _) in graph.edges if u != v)


def canonically_orient(graph):
    """Reorient all edges into the smaller class; returns (graph, flips)."""
    big, small = bipartition_classes(graph)
    small_set = set(small)
    out = []
    flips = 0
    for (u, v, c) in graph.edges:
        if u != v and v not in small_set:
            out.append((v, u, c))
            flips += 1
        else:
            out.append((u, v, c))
    return ColoredGraph(graph.r, graph.d, out), flips


def mcb_exists(lam, type_ab, r, d):
    """Existence of an MCB graph of the given shape and type.

    Necessary and sufficient at desk scale (checked against brute-force
    enumeration): the smaller class must absorb every color's edges
    (b >= ceil(lam2_j / d_j)), and the component must be a spanning
    connected bipartite graph (a + b = r, e >= a + b - 1) or a tree plus
    isolated vertices (e = a + b - 1 exactly).  A graph has only r
    vertices, so a + b <= r is required even though the source statement
    leaves it implicit.
    """
    a, b = type_ab
    if not (a >= b >= 0 and a + b <= r):
        raise ValueError("type must satisfy a >= b >= 0 and a + b <= r")
    if not isinstance(lam, NPartition):
        lam = NPartition(lam)
    lam.validate_degree(r, d)
    if lam.max_rows() > 2:
        return False
    e = lam.e
    f = lam.f(d)
    if e == 0:
        return (a, b) == (1, 0)
    if b < max(f, 1):
        return False
    if a + b == r:
        return e >= a + b - 1
    return e == a + b - 1


def enumerate_admissible_graphs(lam, r, d):
    """All admissible graphs of a two-row shape (brute force, tests only)."""
    if not isinstance(lam, NPartition):
        lam = NPartition(lam)
    lam.validate_degree(r, d)
    counts = lam.second_rows()
    pairs = [(u, v) for u in range(1, r + 1) for v in range(u, r + 1)]
    results = []

    def rec(j, acc, degree):
        if j == len(d):
            results.append(ColoredGraph(r, d, acc))
            return
        need = counts[j]

        def place(start, left, cur):
            if left == 0:
                rec(j + 1, acc + cur, degree)
                return
            for idx in range(start, len(pairs)):
                u, v = pairs[idx]
                inc = 2 if u == v else 1
                du = degree.get((u, j), 0) + inc
                dv = degree.get((v, j), 0) + (2 if u == v else 1)
                if u == v:
                    if du > d[j]:
                        continue
                    degree[(u, j)] = du
                    place(idx, left - 1, cur + [(u, v, j + 1)])
                    degree[(u, j)] -= 2
                else:
                    if degree.get((u, j), 0) + 1 > d[j] or degree.get((v, j), 0) + 1 > d[j]:
                        continue
                    degree[(u, j)] = degree.get((u, j), 0) + 1
                    degree[(v, j)] = degree.get((v, j), 0) + 1
                    place(idx, left - 1, cur + [(u, v, j + 1)])
                    degree[(u, j)] -= 1
                    degree[(v, j)] -= 1

        place(0, need, [])

    rec(0, [], {})
    return results


def canonical_form(graph):
    """Orbit-minimal edge list under vertex relabeling (exhaustive, r <= 8)."""
    if graph.r > CANONICAL_FORM_MAX_R:
        raise ValueError("canonical forms are computed exhaustively for r <= %d"
                         % CANONICAL_FORM_MAX_R)
    best = None
    verts = range(1, graph.r + 1)
    for perm in permutations(verts):
        relab = {v: perm[v - 1] for v in verts}
        edges = tuple(sorted((relab[u], relab[v], c) for (u, v, c) in graph.edges))
        if best is None or edges < best:
            best = edges
    return best


def graph_equal(g1, g2):
    """Equality up to vertex relabeling (colors and orientations fixed)."""
    return (g1.r == g2.r and g1.d == g2.d
            and canonical_form(g1) == canonical_form(g2))


# ---------------------------------------------------------------------------
# graph <-> tabloid dictionary


def to_tabloid(graph):
    """The two-row filling of an admissible graph: color-j edges become
    the size-two columns of factor j, tails on top; leftover value
    occurrences fill the single columns in increasing order."""
    d = graph.d
    cols = []
    for j in range(len(d)):
        jcols = [(u, v) for (u, v, c) in graph.edges if c == j + 1]
        jcols.sort()
        used = {}
        for (u, v) in jcols:
            used[u] = used.get(u, 0) + 1
            used[v] = used.get(v, 0) + 1
        singles = []
        for v in range(1, graph.r + 1):
            singles.extend([(v,)] * (d[j] - used.get(v, 0)))
        cols.append([tuple(c) for c in jcols] + singles)
    return filling_from_columns(_shape_from_columns(cols, graph.r, d),
                                graph.r, d, cols)


def _shape_from_columns(cols, r, d):
    comps = []
    for j, jcols in enumerate(cols):
        lam2 = sum(1 for c in jcols if len(c) == 2)
        lam1 = r * d[j] - lam2
        comps.append((lam1, lam2) if lam2 else (lam1,))
    return NPartition(comps)


def from_tabloid(filling):
    """Inverse of to_tabloid; rejects fillings with columns of size > 2."""
    if filling.shape.max_rows() > 2:
        raise ValueError("filling has a column of size three or more; "
                         "not graph-backed")
    edges = []
    for j in range(len(filling.d)):
        for col in filling.columns(j):
            if len(col) == 2:
                edges.append((col[0], col[1], j + 1))
    return ColoredGraph(filling.r, filling.d, edges)


def witness_tabloid(lam, r, d):
    """The explicit nonvanishing filling for an admissible two-row shape.

    Its size-two columns are, left to right across the factors,
    (1,2), (3,4), ..., (2m-1,2m) twice over, plus (1, 2m+1) when the
    edge count is odd; requires 2 f <= e <= r.
    """
    if not isinstance(lam, NPartition):
        lam = NPartition(lam)
    lam.validate_degree(r, d)
    if lam.max_rows() > 2:
        raise ValueError("witness fillings need two-row shapes")
    e = lam.e
    f = lam.f(d)
    if not (2 * f <= e <= r):
        raise ValueError("witness construction needs 2f <= e <= r "
                         "(got e=%d, f=%d, r=%d)" % (e, f, r))
    m = e // 2
    seq = [(2 * i - 1, 2 * i) for i in range(1, m + 1)] * 2
    if e % 2 == 1:
        seq.append((1, 2 * m + 1))
    cols = []
    pos = 0
    for j, comp in enumerate(lam.components):
        lam2 = comp[1] if len(comp) > 1 else 0
        jcols = [tuple(c) for c in seq[pos:pos + lam2]]
        pos += lam2
        used = {}
        for (u, v) in jcols:
            used[u] = used.get(u, 0) + 1
            used[v] = used.get(v, 0) + 1
        singles = []
        for v in range(1, r + 1):
            singles.extend([(v,)] * (d[j] - used.get(v, 0)))
        cols.append(jcols + singles)
    return filling_from_columns(lam, r, d, cols)


def witness_grade(lam, r, d):
    """The grade used with the witness filling: a_j = lam2_j for j >= 2,
    the remainder on the first factor."""
    if not isinstance(lam, NPartition):
        lam = NPartition(lam)
    second = lam.second_rows()
    rest = sum(second[1:])
    return (r - rest,) + tuple(second[1:])


def mcb_witness_graph(lam, r, d, type_ab=None):
    """A canonically oriented MCB graph of the given shape, by backtracking.

    The default type is the unique one surviving modulo rich graphs:
    (ceil(r/2), floor(r/2)) when e = r, else (ceil(e/2)+1, floor(e/2)).
    """
    if not isinstance(lam, NPartition):
        lam = NPartition(lam)
    lam.validate_degree(r, d)
    e = lam.e
    if type_ab is None:
        if e == 0:
            type_ab = (1, 0)
        elif e == r:
            type_ab = (ceil(r / 2), r // 2)
        else:
            type_ab = (ceil(e / 2) + 1, e // 2)
    a, b = type_ab
    if not mcb_exists(lam, type_ab, r, d):
        raise ValueError("no MCB graph of shape %r and type %r" % (lam, type_ab))
    if e == 0:
        return ColoredGraph(r, d, [])
    heads = list(range(a + 1, a + b + 1))     # smaller class
    tails = list(range(1, a + 1))             # larger class
    counts = lam.second_rows()
    color_seq = []
    for j, k in enumerate(counts):
        color_seq.extend([j] * k)
    candidates = [(u, v) for u in tails for v in heads]
    degree = {}
    chosen = []

    def connected():
        parent = {v: v for v in tails + heads}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (u, v, _) in chosen:
            parent[find(u)] = find(v)
        roots = {find(v) for v in tails + heads}
        return len(roots) == 1

    def rec(idx, start):
        if idx == len(color_seq):
            return connected()
        j = color_seq[idx]
        fresh = idx == 0 or color_seq[idx - 1] != j
        lo = 0 if fresh else start
        for ci in range(lo, len(candidates)):
            u, v = candidates[ci]
            if degree.get((u, j), 0) + 1 > d[j] or degree.get((v, j), 0) + 1 > d[j]:
                continue
            degree[(u, j)] = degree.get((u, j), 0) + 1
            degree[(v, j)] = degree.get((v, j), 0) + 1
            chosen.append((u, v, j + 1))
            if rec(idx + 1, ci):
                return True
            chosen.pop()
            degree[(u, j)] -= 1
            degree[(v, j)] -= 1
        return False

    if not rec(0, 0):
        raise AssertionError("backtracking found no MCB graph despite mcb_exists")
    return ColoredGraph(r, d, chosen)


# ---------------------------------------------------------------------------
# generator catalogs


class CatalogResult(list):
    """Catalog entries [(shape, [fillings...]), ...] in normalized factor
    order, with the sorting permutation kept for mapping back."""

    def __init__(self, entries, d_sorted, permutation):
        super().__init__(entries)
        self.d_sorted = d_sorted
        self.permutation = permutation


def _sorted_format(d):
    order = sorted(range(len(d)), key=lambda j: (-d[j], j))
    return tuple(d[j] for j in order), tuple(order)


def _padded_tabloid(d, r, cols_by_factor):
    """Tabloid from the displayed (multi-cell) columns, singles filled in."""
    full = []
    for j, cols in enumerate(cols_by_factor):
        used = {}
        for col in cols:
            for v in col:
                used[v] = used.get(v, 0) + 1
        singles = []
        for v in range(1, r + 1):
            need = d[j] - used.get(v, 0)
            if need < 0:
                raise ValueError("columns use value %d too often in factor %d" % (v, j))
            singles.extend([(v,)] * need)
        full.append([tuple(c) for c in cols] + singles)
    shape = NPartition([_shape_of(cols, r * dj) for cols, dj in zip(full, d)])
    return filling_from_columns(shape, r, d, full)


def _shape_of(cols, total):
    sizes = sorted((len(c) for c in cols), reverse=True)
    comp = []
    i = 1
    while True:
        count = sum(1 for s in sizes if s >= i)
        if count == 0:
            break
        comp.append(count)
        i += 1
    if sum(comp) != total:
        raise AssertionError("column sizes do not fill the shape")
    return tuple(comp)


def _degree2_entries(d):
    entries = []
    n = len(d)

    def rec(j, ks):
        if j == n:
            total = sum(ks)
            if total >= 4 and total % 2 == 0:
                cols = [[(1, 2)] * k for k in ks]
                tab = _padded_tabloid(d, 2, cols)
                entries.append((tab.shape, [tab]))
            return
        for k in range(d[j] + 1):
            rec(j + 1, ks + [k])

    rec(0, [])
    entries.sort(key=lambda ent: ent[0].components)
    return entries


def _degree3_entries(d):
    n = len(d)
    entries = []

    def first_with(pred, exclude=()):
        for j in range(n):
            if j not in exclude and pred(d[j]):
                return j
        return None

    def add(assign):
        cols = [[] for _ in range(n)]
        for j, c in assign:
            cols[j] = c
        tab = _padded_tabloid(d, 3, cols)
        entries.append((tab.shape, [tab]))

    c123 = [(1, 2, 3)]
    # two columns of size three
    j0 = first_with(lambda x: x >= 2)
    if j0 is not None:
        add([(j0, [(1, 2, 3), (1, 2, 3)])])
    if n >= 2:
        add([(0, c123), (1, c123)])
    # one column of size three, two of size two
    if n >= 2 and j0 is not None:
        j1 = 0 if j0 != 0 else 1
        add([(j0, [(1, 2, 3), (1, 2)]), (j1, [(1, 3)])])
    if n >= 3:
        add([(0, c123), (1, [(1, 2)]), (2, [(1, 3)])])
    # one column of size three, three of size two
    j2 = first_with(lambda x: x == 2)
    if n >= 2 and j2 is not None:
        jo = 0 if j2 != 0 else 1
        add([(j2, [(1, 2), (1, 3), (2, 3)]), (jo, c123)])
    j3 = first_with(lambda x: x == 3)
    if j3 is not None:
        add([(j3, [(1, 2, 3), (1, 2), (1, 3), (2, 3)])])
    # no column of size three, four of size two
    if j0 is not None:
        jb = first_with(lambda x: x >= 2, exclude=(j0,))
        if jb is not None:
            add([(j0, [(1, 2), (1, 3)]), (jb, [(1, 2), (1, 3)])])
    if n >= 3 and j0 is not None:
        others = [j for j in range(n) if j != j0]
        add([(j0, [(1, 2), (1, 3)]), (others[0], [(1, 2)]), (others[1], [(1, 3)])])
    if n >= 4:
        t1 = _padded_tabloid(d, 3, [[(1, 2)], [(1, 3)], [(1, 2)], [(1, 3)]]
                             + [[] for _ in range(n - 4)])
        t2 = _padded_tabloid(d, 3, [[(1, 2)], [(1, 3)], [(1, 3)], [(1, 2)]]
                             + [[] for _ in range(n - 4)])
        entries.append((t1.shape, [t1, t2]))
    # five columns of size two
    if n >= 2 and j3 is not None:
        jo = 0 if j3 != 0 else 1
        add([(j3, [(1, 2), (1, 3), (2, 3), (1, 2)]), (jo, [(1, 3)])])
    if n >= 3 and j2 is not None:
        others = [j for j in range(n) if j != j2]
        add([(j2, [(1, 2), (1, 3), (2, 3)]), (others[0], [(1, 2)]),
             (others[1], [(1, 3)])])
    # six columns of size two
    if j2 is not None:
        j2b = first_with(lambda x: x == 2, exclude=(j2,))
        if j2b is not None:
            add([(j2, [(1, 2), (1, 3), (2, 3)]), (j2b, [(1, 2), (1, 3), (2, 3)])])
    j4 = first_with(lambda x: x == 4)
    if j4 is not None:
        add([(j4, [(1, 2), (1, 3), (2, 3), (1, 2), (1, 3), (2, 3)])])
    return entries


def _degree4_entries(d):
    n = len(d)
    entries = []

    def add(assign):
        cols = [[] for _ in range(n)]
        for j, c in assign:
            cols[j] = c
        tab = _padded_tabloid(d, 4, cols)
        entries.append((tab.shape, [tab]))

    threes = [j for j in range(n) if d[j] == 3]
    twos = [j for j in range(n) if d[j] == 2]
    ones = [j for j in range(n) if d[j] == 1]
    if threes:
        add([(threes[0], [(1, 2), (1, 3), (1, 3), (2, 4), (2, 4), (3, 4)])])
    if twos and ones:
        add([(twos[0], [(1, 3), (1, 3), (2, 4), (2, 4)]),
             (ones[0], [(1, 2), (3, 4)])])
    if len(ones) >= 3:
        add([(ones[0], [(1, 3), (2, 4)]), (ones[1], [(1, 3), (2, 4)]),
             (ones[2], [(1, 2), (3, 4)])])
    return entries


def generators_catalog(d, degree):
    """Minimal-generator tabloids of the given degree, format-normalized.

    Degree 2: all two-row shapes with an even total edge count above two
    (the two-vertex rich multigraphs).  Degree 3 and 4: the finite
    catalogs, including the multiplicity-two entry on four hook factors
    and the degree-four gate on the format containing {3}, {2, 1} or
    {1, 1, 1}.  Degree 1 is empty (no linear forms); other degrees are
    an error.
    """
    if degree not in (2, 3, 4):
        raise ValueError("catalogs exist for degrees 2, 3 and 4 only "
                         "(degree 1 is empty: the variety is nondegenerate)")
    d_sorted, perm = _sorted_format(d)
    if degree == 2:
        entries = _degree2_entries(d_sorted)
    elif degree == 3:
        entries = _degree3_entries(d_sorted)
    else:
        entries = _degree4_entries(d_sorted)
    return CatalogResult(entries, d_sorted, perm)


# ---------------------------------------------------------------------------
# edge-list DSL


def canonical_dsl_parse(text, d):
    """Parse the edge-list DSL: header "r=<int>;" then "u-v:c<j>;" entries.

    Whitespace-insensitive; errors carry line and column; the parsed
    graph is admissibility-checked.
    """
    tokens = []
    line, col = 1, 0
    buf = ""
    buf_pos = None
    for ch in text + ";":
        if ch == "\n":
            line += 1
            col = 0
            continue
        col += 1
        if ch.isspace():
            continue
        if ch == ";":
            if buf:
                tokens.append((buf, buf_pos))
                buf = ""
            continue
        if not buf:
            buf_pos = (line, col)
        buf += ch
    if buf:
        raise DslError("missing trailing ';'", *buf_pos)
    if not tokens:
        raise DslError("empty input", 1, 1)
    head, pos = tokens[0]
    if not head.startswith("r="):
        raise DslError("expected header 'r=<int>;'", *pos)
    try:
        r = int(head[2:])
    except ValueError:
        raise DslError("bad vertex count %r" % head[2:], *pos) from None
    edges = []
    for tok, pos in tokens[1:]:
        if "-" not in tok or ":" not in tok:
            raise DslError("expected 'u-v:c<j>'", *pos)
        body, color = tok.split(":", 1)
        u_s, v_s = body.split("-", 1)
        if not color.startswith("c"):
            raise DslError("color must look like 'c<j>'", *pos)
        try:
            u, v, c = int(u_s), int(v_s), int(color[1:])
        except ValueError:
            raise DslError("bad edge token %r" % tok, *pos) from None
        edges.append((u, v, c))
    return ColoredGraph(r, d, edges)
