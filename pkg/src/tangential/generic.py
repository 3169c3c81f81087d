"""The generic block algebra, its two-row target, and the tabloid calculus.

Monomials are blocks: r rows, each row an n-tuple of label sets that,
column by column, partition the factor's label universe.  Rows commute,
so the canonical form sorts them.  The graded map ``pi_generic`` sends a
block to a sum of two-row target blocks by moving, for every way of
assigning each row to a factor (a_j rows to factor j), a single label of
the assigned row into the bottom row.  This single-label reading
reproduces all worked calculations; moving whole cells at once does not,
and is therefore rejected.

Covariants are built from fillings: a filling of an n-tuple of shapes
assigns to each cell a value in [r], every value used d_j times per
factor.  ``symmetrize`` applies the Young symmetrizer of the canonical
numbering tableau, signed column sum first, then row symmetrization.
With this composition order the straightening relations hold exactly as
formal-sum identities (swapping a column negates, repeated entries kill,
same-size column permutations and value relabelings fix), which the test
suite exercises directly.

``pi_on_tabloid`` evaluates the graded map on a covariant in the target
tabloid basis: each surviving selection of one cell per value reduces,
by the exact identities above, to a sign times the unique canonical
{1,2}-filled tabloid of its shape and grade.
"""

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from .symfun import NPartition

SYMMETRIZE_MAX_R = 4
SYMMETRIZE_MAX_TOTAL_DEGREE = 4
SYMMETRIZE_MAX_TERMS = 5_000_000


class CapExceeded(RuntimeError):
    """Raised when an exact expansion would exceed the documented desk caps."""


class OverlapError(ValueError):
    """Raised when multiplying blocks whose label universes overlap."""


# ---------------------------------------------------------------------------
# blocks


class Block:
    """A monomial of the generic algebra: a multiset of r rows.

    Each row is an n-tuple of label tuples (sorted); the canonical form
    sorts the rows, so equal monomials compare equal.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        canon = tuple(sorted(
            tuple(tuple(sorted(cell)) for cell in row) for row in rows))
        self.rows = canon

    @property
    def r(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows[0]) if self.rows else 0

    def labels(self, j):
        """All labels of factor j, with multiplicity, sorted."""
        out = []
        for row in self.rows:
            out.extend(row[j])
        return tuple(sorted(out))

    def relabel(self, maps):
        """Apply per-factor label maps (dicts); missing keys stay fixed."""
        return Block(
            tuple(tuple(maps[j].get(v, v) for v in cell)
                  for j, cell in enumerate(row))
            for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, Block) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __lt__(self, other):
        return self.rows < other.rows

    def __repr__(self):
        return "Block(%s)" % (", ".join(
            "|".join(",".join(str(v) for v in cell) for cell in row)
            for row in self.rows))


class TargetBlock:
    """A two-row monomial of the target algebra; row order matters."""

    __slots__ = ("top", "bottom")

    def __init__(self, top, bottom):
        self.top = tuple(tuple(sorted(cell)) for cell in top)
        self.bottom = tuple(tuple(sorted(cell)) for cell in bottom)
        if len(self.top) != len(self.bottom):
            raise ValueError("top/bottom factor counts differ")

    @property
    def n(self):
        return len(self.top)

    @property
    def grade(self):
        return tuple(len(c) for c in self.bottom)

    def relabel(self, maps):
        return TargetBlock(
            tuple(tuple(maps[j].get(v, v) for v in cell)
                  for j, cell in enumerate(self.top)),
            tuple(tuple(maps[j].get(v, v) for v in cell)
                  for j, cell in enumerate(self.bottom)))

    def __eq__(self, other):
        return (isinstance(other, TargetBlock)
                and self.top == other.top and self.bottom == other.bottom)

    def __hash__(self):
        return hash((self.top, self.bottom))

    def __lt__(self, other):
        return (self.top, self.bottom) < (other.top, other.bottom)

    def __repr__(self):
        fmt = lambda cells: "|".join(",".join(map(str, c)) for c in cells)
        return "TargetBlock(%s // %s)" % (fmt(self.top), fmt(self.bottom))


class FormalSum:
    """Sparse rational linear combination of hashable terms."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, v in (terms.items() if isinstance(terms, dict) else terms):
                self.add_term(k, v)

    def add_term(self, key, coeff):
        coeff = Fraction(coeff)
        if coeff == 0:
            return
        cur = self.terms.get(key)
        if cur is None:
            self.terms[key] = coeff
        else:
            cur += coeff
            if cur == 0:
                del self.terms[key]
            else:
                self.terms[key] = cur

    def __add__(self, other):
        out = FormalSum(dict(self.terms))
        for k, v in other.terms.items():
            out.add_term(k, v)
        return out

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        if c == 0:
            return FormalSum()
        return FormalSum({k: v * c for k, v in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), key=lambda kv: kv[0]))

    def __repr__(self):
        if not self.terms:
            return "FormalSum(0)"
        bits = ["%s * %r" % (v, k) for k, v in self]
        return "FormalSum(" + " + ".join(bits) + ")"


def multiply(x, y):
    """Product in the generic algebra: row concatenation, after checking
    that the two label universes are disjoint factor by factor."""
    out = FormalSum()
    for bx, cx in x.terms.items():
        for by, cy in y.terms.items():
            for j in range(max(bx.n, by.n)):
                if set(bx.labels(j)) & set(by.labels(j)):
                    raise OverlapError("factor %d labels overlap" % j)
            out.add_term(Block(bx.rows + by.rows), cx * cy)
    return out


def target_multiply(x, y):
    """Product in the target algebra: componentwise union of rows."""
    out = FormalSum()
    for bx, cx in x.terms.items():
        for by, cy in y.terms.items():
            top = tuple(bx.top[j] + by.top[j] for j in range(bx.n))
            bot = tuple(bx.bottom[j] + by.bottom[j] for j in range(bx.n))
            out.add_term(TargetBlock(top, bot), cx * cy)
    return out


def _multiset_assignments(r, a):
    """All maps [r] -> factors with |preimage(j)| = a_j, as tuples."""
    items = []
    for j, aj in enumerate(a):
        items.extend([j] * aj)
    if len(items) != r:
        raise ValueError("grades %r do not sum to %d" % (a, r))
    seen = set()
    for p in permutations(items):
        if p not in seen:
            seen.add(p)
            yield p


def pi_generic(x, a):
    """Graded piece of the generic comultiplication-style map.

    For each assignment of rows to factors with a_j rows sent to factor
    j, one label per row moves into the bottom; each (assignment, label
    choice) contributes the resulting target block with coefficient 1.
    """
    if isinstance(x, Block):
        x = FormalSum({x: 1})
    out = FormalSum()
    for block, coeff in x.terms.items():
        rows = block.rows
        r = len(rows)
        n = block.n
        if sum(a) != r:
            raise ValueError("grade %r does not sum to the degree %d" % (a, r))
        all_labels = [block.labels(j) for j in range(n)]
        for assign in _multiset_assignments(r, a):
            choices = [rows[i][assign[i]] for i in range(r)]

            def rec(i, bottoms):
                if i == r:
                    bottom = tuple(tuple(bottoms[j]) for j in range(n))
                    top = []
                    for j in range(n):
                        avail = list(all_labels[j])
                        for v in bottoms[j]:
                            avail.remove(v)
                        top.append(tuple(avail))
                    out.add_term(TargetBlock(tuple(top), bottom), coeff)
                    return
                for v in choices[i]:
                    bottoms[assign[i]].append(v)
                    rec(i + 1, bottoms)
                    bottoms[assign[i]].pop()

            rec(0, [[] for _ in range(n)])
    return out


def pi_total(x, r):
    """All graded pieces of degree r at once, keyed by grade tuple."""
    if isinstance(x, Block):
        x = FormalSum({x: 1})
    n = next(iter(x.terms)).n if x.terms else 0
    out = {}
    for a in compositions(r, n):
        piece = pi_generic(x, a)
        if not piece.is_zero():
            out[a] = piece
    return out


def compositions(total, parts):
    """All tuples of `parts` nonnegative integers summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# fillings and tableaux


class TabloidFilling:
    """A filling of an n-tuple of shapes with values in [r].

    ``fillings[j]`` is a tuple of row tuples; value i appears exactly
    d_j times within factor j.  Fillings are considered up to global
    value relabeling and permutations of same-size columns; those
    equivalences are realized by ``canonical_key``.
    """

    __slots__ = ("shape", "r", "d", "fillings")

    def __init__(self, shape, r, d, fillings):
        if not isinstance(shape, NPartition):
            shape = NPartition(shape)
        self.shape = shape
        self.r = r
        self.d = tuple(d)
        self.fillings = tuple(tuple(tuple(row) for row in f) for f in fillings)
        shape.validate_degree(r, self.d)
        for j, (comp, fill) in enumerate(zip(shape.components, self.fillings)):
            if tuple(len(row) for row in fill) != comp:
                raise ValueError("factor %d filling does not match shape %r"
                                 % (j, comp))
            counts = {}
            for row in fill:
                for v in row:
                    if not (1 <= v <= r):
                        raise ValueError("value %r out of range [1, %d]" % (v, r))
                    counts[v] = counts.get(v, 0) + 1
            for v in range(1, r + 1):
                if counts.get(v, 0) != self.d[j]:
                    raise ValueError(
                        "value %d appears %d times in factor %d, expected d_j = %d"
                        % (v, counts.get(v, 0), j, self.d[j]))

    def columns(self, j):
        """Columns of factor j, top to bottom, left to right."""
        fill = self.fillings[j]
        width = len(fill[0]) if fill else 0
        cols = []
        for c in range(width):
            cols.append(tuple(row[c] for row in fill if len(row) > c))
        return cols

    def relabel(self, sigma):
        """Apply a value permutation (dict, 1-based) to every cell."""
        return TabloidFilling(
            self.shape, self.r, self.d,
            tuple(tuple(tuple(sigma[v] for v in row) for row in f)
                  for f in self.fillings))

    def canonical_key(self):
        """Invariant under value relabeling and same-size column swaps."""
        best = None
        for perm in permutations(range(1, self.r + 1)):
            sigma = {i + 1: perm[i] for i in range(self.r)}
            key = []
            for j in range(len(self.d)):
                cols = []
                for col in self.columns(j):
                    cols.append(tuple(sigma[v] for v in col))
                cols.sort(key=lambda c: (-len(c), c))
                key.append(tuple(cols))
            key = tuple(key)
            if best is None or key < best:
                best = key
        return best

    def __eq__(self, other):
        return (isinstance(other, TabloidFilling)
                and self.shape == other.shape and self.r == other.r
                and self.d == other.d and self.fillings == other.fillings)

    def __hash__(self):
        return hash((self.shape, self.r, self.d, self.fillings))

    def __repr__(self):
        return "TabloidFilling(%s)" % " (x) ".join(
            "[" + " / ".join("".join(str(v) for v in row) for row in f) + "]"
            for f in self.fillings)


def filling_from_columns(shape, r, d, columns_per_factor):
    """Build a filling from explicit per-factor column value lists."""
    fillings = []
    for j, cols in enumerate(columns_per_factor):
        comp = shape[j] if isinstance(shape, NPartition) else shape[j]
        n_rows = len(comp)
        rows = [[] for _ in range(n_rows)]
        for col in cols:
            for x, v in enumerate(col):
                rows[x].append(v)
        fillings.append(tuple(tuple(row) for row in rows))
    return TabloidFilling(shape, r, d, fillings)


def canonical_tableau(shape, universes=None):
    """The canonical numbering tableau: labels row-major, per factor."""
    if not isinstance(shape, NPartition):
        shape = NPartition(shape)
    out = []
    for j, comp in enumerate(shape.components):
        size = sum(comp)
        labels = list(range(1, size + 1)) if universes is None else list(universes[j])
        if len(labels) != size:
            raise ValueError("universe %d has %d labels, expected %d"
                             % (j, len(labels), size))
        rows = []
        pos = 0
        for p in comp:
            rows.append(tuple(labels[pos:pos + p]))
            pos += p
        out.append(tuple(rows))
    return tuple(out)


class TargetTabloid:
    """The canonical {1,2}-filled two-row tabloid of a shape and grade.

    Size-two columns read (1, 2) top to bottom; within the single-cell
    columns the ones come first, so the filling lists rd_j - a_j ones
    followed by a_j twos in row-major order.
    """

    __slots__ = ("shape", "r", "d", "grade")

    def __init__(self, shape, r, d, grade):
        if not isinstance(shape, NPartition):
            shape = NPartition(shape)
        shape.validate_degree(r, tuple(d))
        if shape.max_rows() > 2:
            raise ValueError("target tabloids have at most two rows")
        self.shape = shape
        self.r = r
        self.d = tuple(d)
        self.grade = tuple(grade)
        for j, comp in enumerate(shape.components):
            lam2 = comp[1] if len(comp) > 1 else 0
            s = self.grade[j] - lam2
            if not (0 <= s <= comp[0] - lam2):
                raise ValueError("grade %r incompatible with shape %r"
                                 % (grade, shape))

    def fillings(self):
        out = []
        for j, comp in enumerate(self.shape.components):
            lam1 = comp[0]
            lam2 = comp[1] if len(comp) > 1 else 0
            ones = lam1 + lam2 - self.grade[j]
            row1 = tuple(1 if c < ones else 2 for c in range(lam1))
            rows = (row1, tuple(2 for _ in range(lam2))) if lam2 else (row1,)
            out.append(rows)
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, TargetTabloid) and self.shape == other.shape
                and self.r == other.r and self.d == other.d
                and self.grade == other.grade)

    def __hash__(self):
        return hash((self.shape, self.r, self.d, self.grade))

    def __lt__(self, other):
        return (self.shape.components, self.grade) < (other.shape.components, other.grade)

    def __repr__(self):
        return "TargetTabloid(shape=%r, grade=%r)" % (
            self.shape.components, self.grade)


# ---------------------------------------------------------------------------
# Young symmetrizer expansion


def _column_group(tableau, n):
    """Signed permutations of every column across all factors.

    Returns a list of per-column option lists; an option is
    (sign, factor index, label map).
    """
    options = []
    for j in range(n):
        factor = tableau[j]
        n_rows = len(factor)
        width = len(factor[0]) if n_rows else 0
        for c in range(width):
            col = [factor[x][c] for x in range(n_rows) if len(factor[x]) > c]
            if len(col) < 2:
                continue
            opts = []
            for perm in permutations(col):
                sign = _perm_sign(col, perm)
                mapping = {a: b for a, b in zip(col, perm) if a != b}
                opts.append((sign, j, mapping))
            options.append(opts)
    return options


def _perm_sign(src, dst):
    pos = {v: i for i, v in enumerate(src)}
    perm = [pos[v] for v in dst]
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _ordered_partitions(labels, sizes):
    """All ways to split ``labels`` into ordered parts of the given sizes."""
    if not sizes:
        yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for head in combinations(labels, first):
        head_set = set(head)
        remaining = tuple(v for v in labels if v not in head_set)
        for tail in _ordered_partitions(remaining, rest):
            yield (head,) + tail


def _symmetrize_groups(groups, tableau, n, budget=SYMMETRIZE_MAX_TERMS):
    """Apply the Young symmetrizer (signed column sum, then full row
    symmetrization) to a grouped label arrangement.

    ``groups`` is a tuple of group rows, each an n-tuple of label
    tuples: for source blocks the groups are the r block rows, for
    target blocks just top and bottom.  Returns a dict mapping group
    tuples (cells sorted, group order preserved) to integer
    coefficients.  Row symmetrization is summed exactly: for each column
    permutation q the row orbit of q.z is enumerated once per distinct
    redistribution, whose permutation-count multiplier is the product of
    the within-cell factorials of q.z.
    """
    g_count = len(groups)
    col_options = _column_group(tableau, n)
    slots = []
    for j in range(n):
        for row_labels in tableau[j]:
            slots.append((j, tuple(row_labels), frozenset(row_labels)))

    out = {}
    work = [0]

    def redistribute(moved, sign):
        slot_parts = []
        mult = 1
        count = 1
        for j, row_labels, label_set in slots:
            in_row = [tuple(v for v in moved[g][j] if v in label_set)
                      for g in range(g_count)]
            sizes = [len(t) for t in in_row]
            for s in sizes:
                mult *= factorial(s)
            m = factorial(len(row_labels))
            for s in sizes:
                m //= factorial(s)
            count *= m
            slot_parts.append((j, row_labels, sizes))
        work[0] += count
        if work[0] > budget:
            raise CapExceeded(
                "symmetrizer expansion exceeds the term budget (%d)" % budget)

        def rec(slot_idx, acc):
            if slot_idx == len(slot_parts):
                key = tuple(
                    tuple(tuple(sorted(acc[g][j])) for j in range(n))
                    for g in range(g_count))
                out[key] = out.get(key, 0) + sign * mult
                return
            j, row_labels, sizes = slot_parts[slot_idx]
            for parts in _ordered_partitions(row_labels, sizes):
                new_acc = []
                for g in range(g_count):
                    cells = list(acc[g])
                    cells[j] = cells[j] + parts[g]
                    new_acc.append(cells)
                rec(slot_idx + 1, new_acc)

        rec(0, [[()] * n for _ in range(g_count)])

    def gen_col(idx, sign, maps):
        if idx == len(col_options):
            moved = [
                tuple(tuple(maps[j].get(v, v) for v in g[j]) for j in range(n))
                for g in groups]
            redistribute(moved, sign)
            return
        for s, j, mapping in col_options[idx]:
            if mapping:
                new_maps = list(maps)
                merged = dict(new_maps[j])
                merged.update(mapping)
                new_maps[j] = merged
                gen_col(idx + 1, sign * s, new_maps)
            else:
                gen_col(idx + 1, sign * s, maps)

    gen_col(0, 1, [{} for _ in range(n)])
    return {k: v for k, v in out.items() if v}


def _check_symmetrize_caps(r, d):
    if r > SYMMETRIZE_MAX_R or sum(d) > SYMMETRIZE_MAX_TOTAL_DEGREE:
        raise CapExceeded(
            "exact symmetrizer expansion is supported for r <= %d and "
            "sum(d) <= %d; got r=%d, d=%s"
            % (SYMMETRIZE_MAX_R, SYMMETRIZE_MAX_TOTAL_DEGREE, r, d))


def symmetrize(filling, universes=None, tableau=None, enforce_caps=True):
    """The covariant of a filling: Young symmetrizer applied to its block.

    Returns a FormalSum over Blocks.  The zero covariant is an empty
    sum.  Desk-scale caps are enforced unless ``enforce_caps`` is False
    (a term budget still applies).
    """
    if enforce_caps:
        _check_symmetrize_caps(filling.r, filling.d)
    if tableau is None:
        tableau = canonical_tableau(filling.shape, universes)
    n = len(filling.d)
    groups = []
    for i in range(1, filling.r + 1):
        row = []
        for j in range(n):
            cells = []
            fill = filling.fillings[j]
            for x, frow in enumerate(fill):
                for c, v in enumerate(frow):
                    if v == i:
                        cells.append(tableau[j][x][c])
            row.append(tuple(sorted(cells)))
        groups.append(tuple(row))
    raw = _symmetrize_groups(tuple(groups), tableau, n)
    out = FormalSum()
    for key, coeff in raw.items():
        out.add_term(Block(key), coeff)
    return out


def symmetrize_target(tt, universes=None, tableau=None, enforce_caps=True):
    """The covariant of a canonical {1,2}-filled target tabloid, expanded
    as a FormalSum over TargetBlocks (used to validate pi_on_tabloid)."""
    if enforce_caps:
        _check_symmetrize_caps(tt.r, tt.d)
    if tableau is None:
        tableau = canonical_tableau(tt.shape, universes)
    n = len(tt.d)
    fillings = tt.fillings()
    top, bottom = [], []
    for j in range(n):
        t_cells, b_cells = [], []
        for x, frow in enumerate(fillings[j]):
            for c, v in enumerate(frow):
                (t_cells if v == 1 else b_cells).append(tableau[j][x][c])
        top.append(tuple(sorted(t_cells)))
        bottom.append(tuple(sorted(b_cells)))
    groups = (tuple(top), tuple(bottom))
    raw = _symmetrize_groups(groups, tableau, n)
    out = FormalSum()
    for key, coeff in raw.items():
        out.add_term(TargetBlock(key[0], key[1]), coeff)
    return out


# ---------------------------------------------------------------------------
# straightening relations


class Relation:
    """A formal linear combination of fillings asserted to vanish."""

    def __init__(self, terms, label=""):
        self.terms = list(terms)
        self.label = label

    def __repr__(self):
        return "Relation(%s, %d terms)" % (self.label or "?", len(self.terms))


def straighten_check(relation):
    """Verify a straightening relation by exact symmetrizer expansion."""
    total = FormalSum()
    for coeff, filling in relation.terms:
        total = total + symmetrize(filling).scale(coeff)
    return total.is_zero()


def _replace_cells(filling, j, replacements):
    """Replace several (row, col) -> value cells of factor j at once."""
    rows = [list(row) for row in filling.fillings[j]]
    for x, c, value in replacements:
        rows[x][c] = value
    fillings = list(filling.fillings)
    fillings[j] = tuple(tuple(row) for row in rows)
    return TabloidFilling(filling.shape, filling.r, filling.d, fillings)


def column_swap_relation(filling, j, col):
    """[.. x/y ..] + [.. y/x ..] = 0 for a size-two column."""
    cols = filling.columns(j)
    if len(cols[col]) != 2:
        raise ValueError("column %d of factor %d does not have size 2" % (col, j))
    x, y = cols[col]
    swapped = _replace_cells(filling, j, [(0, col, y), (1, col, x)])
    return Relation([(1, filling), (1, swapped)], label="column swap")


def repeated_column_relation(filling, j, col):
    """[.. x/x ..] = 0 when a column repeats an entry."""
    cols = filling.columns(j)
    vals = cols[col]
    if len(set(vals)) == len(vals):
        raise ValueError("column %d of factor %d has no repeated entry" % (col, j))
    return Relation([(1, filling)], label="repeated column")


def shuffle_relation(filling, j, col, single_col):
    """[xz/y] = [xy/z] + [zx/y]: exchange through a size-one column.

    ``col`` is a size-two column of factor j with entries (x, y) top to
    bottom and ``single_col`` a size-one column of the same factor with
    entry z; all three indices refer to positions in ``columns(j)``.
    """
    cols = filling.columns(j)
    if len(cols[col]) != 2 or len(cols[single_col]) != 1:
        raise ValueError("need a size-2 column and a size-1 column")
    x, y = cols[col]
    z = cols[single_col][0]
    f2 = _replace_cells(filling, j, [(1, col, z), (0, single_col, y)])
    f3 = _replace_cells(filling, j, [(0, col, z), (0, single_col, x)])
    return Relation([(1, filling), (-1, f2), (-1, f3)], label="truncated shuffle")


def plucker_relation(filling, j, col1, col2):
    """[x/y][z/t] = [x/z][y/t] + [x/t][z/y] on two size-two columns of factor j."""
    cols = filling.columns(j)
    if len(cols[col1]) != 2 or len(cols[col2]) != 2:
        raise ValueError("need two size-2 columns")
    x, y = cols[col1]
    z, t = cols[col2]
    f2 = _replace_cells(filling, j, [(1, col1, z), (0, col2, y)])
    f3 = _replace_cells(filling, j, [(1, col1, t), (0, col2, z), (1, col2, y)])
    return Relation([(1, filling), (-1, f2), (-1, f3)], label="plucker")


# ---------------------------------------------------------------------------
# the graded map on tabloids


def pi_on_tabloid(filling, a):
    """pi_a of a covariant, in the canonical target tabloid basis.

    Sums over selections of one cell per value (a_j cells in factor j);
    a selection survives only if every column of size >= 2 contains
    exactly one selected cell, contributing the canonical tabloid with
    the sign of the column transpositions needed to straighten it.
    Rich tabloids therefore map to zero for every grade.
    """
    r, d = filling.r, filling.d
    n = len(d)
    if sum(a) != r:
        raise ValueError("grade %r does not sum to r=%d" % (a, r))
    shape = filling.shape

    # cells by value: (factor, column index, row-within-column, column size)
    by_value = {i: [] for i in range(1, r + 1)}
    col_sizes = []
    for j in range(n):
        cols = filling.columns(j)
        col_sizes.append([len(c) for c in cols])
        for ci, colvals in enumerate(cols):
            for x, v in enumerate(colvals):
                by_value[v].append((j, ci, x, len(colvals)))

    two_cols = [(j, ci) for j in range(n)
                for ci, s in enumerate(col_sizes[j]) if s >= 2]
    if any(s > 2 for sizes in col_sizes for s in sizes):
        # any selection leaves a repeated entry inside a size->=3 column
        return FormalSum()

    total = 0
    factor_quota = list(a)
    col_state = {key: 0 for key in two_cols}

    def rec(value, sign_tops):
        nonlocal total
        if value > r:
            if all(col_state[key] == 1 for key in two_cols):
                total += (-1) ** sign_tops
            return
        remaining = r - value + 1
        if sum(factor_quota) != remaining:
            return
        # prune: columns still unselected must be coverable by remaining values
        missing = sum(1 for key in two_cols if col_state[key] == 0)
        if missing > remaining:
            return
        for (j, ci, x, size) in by_value[value]:
            if factor_quota[j] == 0:
                continue
            if size >= 2:
                if col_state[(j, ci)]:
                    continue
                col_state[(j, ci)] += 1
            factor_quota[j] -= 1
            rec(value + 1, sign_tops + (1 if (size >= 2 and x == 0) else 0))
            factor_quota[j] += 1
            if size >= 2:
                col_state[(j, ci)] -= 1

    rec(1, 0)
    out = FormalSum()
    if total:
        lam2 = shape.second_rows()
        ok = all(lam2[j] <= a[j] <= lam2[j] + (shape[j][0] - lam2[j])
                 for j in range(n))
        if not ok:
            raise AssertionError("surviving selection with impossible grade")
        out.add_term(TargetTabloid(shape, r, d, a), total)
    return out


def pi_on_tabloid_all(filling):
    """pi_on_tabloid over every grade; dict grade -> FormalSum (nonzero only)."""
    out = {}
    for a in compositions(filling.r, len(filling.d)):
        piece = pi_on_tabloid(filling, a)
        if not piece.is_zero():
            out[a] = piece
    return out
