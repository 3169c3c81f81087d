"""Exact rational sparse linear algebra: rank, kernel bases, span membership.

Everything here is exact.  Two elimination strategies are provided:

* ``fraction_free`` -- integer row elimination with content stripping
  (Bareiss-flavoured: rows are scaled to integers, cross-multiplied and
  divided by their gcd after every step).  Pivots are chosen on the
  sparsest remaining column, ties broken by (col, row) lexicographic
  order, so results are reproducible bit for bit.
* ``certified`` -- a fast path for large matrices.  A modular echelon
  pass (numpy, word-sized primes) locates the pivot structure, kernel
  vectors are recovered by CRT + rational reconstruction, and the result
  is then *certified* exactly: every kernel vector is checked against
  the matrix over Q, and the pivot minor being nonzero mod p proves the
  rank lower bound.  A nonzero residue is a proof of a nonzero integer,
  so no heuristic survives into the returned answer; on any failure we
  fall back to ``fraction_free``.

Matrices are immutable after construction and safe to share across
threads; one elimination runs single-threaded.
"""

from fractions import Fraction
from math import gcd

import numpy as np

Rational = Fraction  # always reduced, positive denominator, 0 == Fraction(0, 1)


class DimensionError(ValueError):
    """Raised when vector/matrix dimensions do not match."""


_PRIMES = [
    2147483629, 2147483587, 2147483579, 2147483563, 2147483549,
    2147483543, 2147483497, 2147483489, 2147483477, 2147483423,
    2147483399, 2147483353, 2147483323, 2147483269, 2147483249,
    2147483237, 2147483179, 2147483171, 2147483137, 2147483123,
    2147483077, 2147483069, 2147483059, 2147483053, 2147483033,
    2147483029, 2147482951, 2147482949, 2147482943, 2147482937,
    2147482921, 2147482877, 2147482873, 2147482867, 2147482859,
    2147482819, 2147482817, 2147482811, 2147482801, 2147482763,
]

# above this many potential entries the certified path is tried first
_CERTIFIED_THRESHOLD = 40000


class SparseMatrix:
    """Sparse matrix over Q.  ``entries`` maps (row, col) -> nonzero Fraction."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise DimensionError("negative matrix dimensions")
        self.rows = rows
        self.cols = cols
        ent = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise DimensionError("entry index (%d, %d) out of range" % (i, j))
                v = Fraction(v)
                if v != 0:
                    ent[(i, j)] = v
        self.entries = ent

    @classmethod
    def from_dense(cls, dense):
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = {}
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise DimensionError("ragged dense matrix")
            for j, v in enumerate(row):
                if v != 0:
                    entries[(i, j)] = Fraction(v)
        return cls(rows, cols, entries)

    def nnz(self):
        return len(self.entries)

    def row_lists(self):
        """Rows as dicts col -> Fraction."""
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def transpose(self):
        return SparseMatrix(
            self.cols, self.rows,
            {(j, i): v for (i, j), v in self.entries.items()})

    def mul_vector(self, vec):
        if len(vec) != self.cols:
            raise DimensionError("vector length %d != cols %d" % (len(vec), self.cols))
        out = [Fraction(0)] * self.rows
        for (i, j), v in self.entries.items():
            if vec[j]:
                out[i] += v * vec[j]
        return out

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return "SparseMatrix(%d x %d, nnz=%d)" % (self.rows, self.cols, self.nnz())

    def dump(self):
        """Text dump: header "rows cols nnz", then one "row col num/den" line per entry."""
        lines = ["%d %d %d" % (self.rows, self.cols, self.nnz())]
        for (i, j) in sorted(self.entries):
            v = self.entries[(i, j)]
            lines.append("%d %d %d/%d" % (i, j, v.numerator, v.denominator))
        return "\n".join(lines) + "\n"

    @classmethod
    def load(cls, text):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        rows, cols, nnz = (int(t) for t in lines[0].split())
        entries = {}
        for ln in lines[1:]:
            i, j, frac = ln.split()
            entries[(int(i), int(j))] = Fraction(frac)
        if len(entries) != nnz:
            raise ValueError("dump header says nnz=%d, got %d entries" % (nnz, len(entries)))
        return cls(rows, cols, entries)


def _integer_rows(matrix):
    """Rows scaled to primitive integer dicts (scaling keeps rank and kernel)."""
    rows = []
    for r in matrix.row_lists():
        if not r:
            rows.append({})
            continue
        den = 1
        for v in r.values():
            den = den * v.denominator // gcd(den, v.denominator)
        ints = {j: int(v * den) for j, v in r.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if g > 1:
            ints = {j: v // g for j, v in ints.items()}
        rows.append(ints)
    return rows


def _eliminate_integer_rows(int_rows, cols):
    """Content-stripped integer elimination.

    Returns (pivots, rows) where pivots is a list of (row_index, col) in
    elimination order and rows holds the reduced integer rows.
    """
    rows = [dict(r) for r in int_rows]
    # col_count / col_rows track nonzeros among *unused* rows only
    col_count = [0] * cols
    col_rows = [set() for _ in range(cols)]
    for i, r in enumerate(rows):
        for j in r:
            col_count[j] += 1
            col_rows[j].add(i)
    pivots = []
    while True:
        pc = None
        for j in range(cols):
            if col_count[j] == 0:
                continue
            if pc is None or col_count[j] < col_count[pc]:
                pc = j
        if pc is None:
            break
        pr = min(col_rows[pc])
        pivots.append((pr, pc))
        prow = rows[pr]
        p = prow[pc]
        for j in prow:
            col_count[j] -= 1
            col_rows[j].discard(pr)
        for i in sorted(col_rows[pc]):
            row = rows[i]
            f = row[pc]
            for j in row:
                col_count[j] -= 1
                col_rows[j].discard(i)
            new = {}
            for j in set(prow) | set(row):
                v = p * row.get(j, 0) - f * prow.get(j, 0)
                if v:
                    new[j] = v
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {j: v // g for j, v in new.items()}
            rows[i] = new
            for j in new:
                col_count[j] += 1
                col_rows[j].add(i)
    return pivots, rows


def _kernel_from_echelon(pivots, rows, cols):
    """Kernel basis from eliminated rows, one vector per free column.

    Vectors are normalized to primitive integer form with the first
    nonzero entry positive, so bases are reproducible.
    """
    pivot_cols = [pc for (_, pc) in pivots]
    pivot_set = set(pivot_cols)
    free_cols = [j for j in range(cols) if j not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for k in range(len(pivots) - 1, -1, -1):
            pr, pc = pivots[k]
            row = rows[pr]
            s = Fraction(0)
            for j, v in row.items():
                if j != pc and vec[j]:
                    s += v * vec[j]
            if s:
                vec[pc] = -s / row[pc]
        basis.append(_normalize_vector(vec))
    return basis


def _normalize_vector(vec):
    den = 1
    for v in vec:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-x for x in ints]
            break
    return [Fraction(v) for v in ints]


def _rank_kernel_fraction_free(matrix):
    int_rows = _integer_rows(matrix)
    pivots, rows = _eliminate_integer_rows(int_rows, matrix.cols)
    kernel = _kernel_from_echelon(pivots, rows, matrix.cols)
    return len(pivots), kernel


def _mod_echelon(arr, p):
    """In-place row reduction of int64 array mod p.

    Returns (pivot_cols, pivot_src_rows); arr rows end up in reduced
    echelon form with unit pivots.  Row order of pivots is deterministic.
    """
    rows, cols = arr.shape
    src = np.arange(rows)
    piv_cols = []
    piv_rows = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(arr[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            arr[[r, k]] = arr[[k, r]]
            src[[r, k]] = src[[k, r]]
        inv = pow(int(arr[r, c]), p - 2, p)
        arr[r] = (arr[r] * inv) % p
        col = arr[:, c].copy()
        col[r] = 0
        mask = np.nonzero(col)[0]
        if mask.size:
            arr[mask] = (arr[mask] - np.outer(col[mask], arr[r])) % p
        piv_cols.append(c)
        piv_rows.append(int(src[r]))
        r += 1
    return piv_cols, piv_rows


def _rat_reconstruct(a, m):
    """Rational reconstruction of a mod m (|num|, den <= sqrt(m/2)); None if impossible."""
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if gcd(r1, abs(s1)) != 1 and r1 != 0:
        return None
    return Fraction(r1, s1)


def _mod_entry(v, p):
    """Fraction -> residue mod p; denominators here never share a factor
    with the word-sized primes in use."""
    num = v.numerator % p
    den = v.denominator % p
    if den == 1:
        return num
    return (num * pow(den, p - 2, p)) % p


def _rank_kernel_certified(matrix):
    """Modular pivot discovery + CRT kernel reconstruction + exact certification.

    Returns (rank, kernel) or None when certification could not be
    completed (caller falls back to fraction-free elimination).
    """
    cols = matrix.cols
    dense_src = [r for r in matrix.row_lists() if r]
    if not dense_src:
        return 0, [_unit_vector(cols, j) for j in range(cols)]

    residue_sets = []
    piv_cols = None
    moduli = []
    for p in _PRIMES:
        arr = np.zeros((len(dense_src), cols), dtype=np.int64)
        for i, r in enumerate(dense_src):
            for j, v in r.items():
                arr[i, j] = _mod_entry(v, p)
        pc, pr = _mod_echelon(arr, p)
        if piv_cols is None:
            piv_cols, piv_rows = pc, pr
            rank = len(pc)
        elif pc != piv_cols:
            # unlucky prime: pivot structure differs; lower-rank primes are
            # discarded, a higher-rank prime restarts the accumulation
            if len(pc) > rank:
                piv_cols, piv_rows, rank = pc, pr, len(pc)
                residue_sets, moduli = [], []
            else:
                continue
        free_cols = [j for j in range(cols) if j not in set(piv_cols)]
        # kernel vector for free col f mod p: v[f]=1, v[piv_cols[i]] = -arr[i, f]
        residues = {}
        for f in free_cols:
            vec = {f: 1}
            for i, c in enumerate(piv_cols):
                x = int(arr[i, f])
                if x:
                    vec[c] = (-x) % p
            residues[f] = vec
        residue_sets.append(residues)
        moduli.append(p)
        kernel = _try_reconstruct_kernel(residue_sets, moduli, free_cols, cols)
        if kernel is None:
            continue
        if _verify_kernel(matrix, kernel):
            return rank, kernel
    return None


def _try_reconstruct_kernel(residue_sets, moduli, free_cols, cols):
    kernel = []
    for f in free_cols:
        vec = [Fraction(0)] * cols
        touched = set()
        for rs in residue_sets:
            touched |= set(rs[f])
        ok = True
        for j in sorted(touched):
            r, m = 0, 1
            for rs, p in zip(residue_sets, moduli):
                rj = rs[f].get(j, 0)
                if m == 1:
                    r, m = rj, p
                else:
                    inv = pow(m % p, p - 2, p)
                    t = ((rj - r) * inv) % p
                    r, m = r + m * t, m * p
            val = _rat_reconstruct(r, m)
            if val is None:
                ok = False
                break
            vec[j] = val
        if not ok:
            return None
        kernel.append(_normalize_vector(vec))
    return kernel


def _verify_kernel(matrix, kernel):
    rows = matrix.row_lists()
    for vec in kernel:
        for r in rows:
            s = Fraction(0)
            for j, v in r.items():
                if vec[j]:
                    s += v * vec[j]
            if s != 0:
                return False
    return True


def _unit_vector(n, j):
    vec = [Fraction(0)] * n
    vec[j] = Fraction(1)
    return vec


def rank_and_kernel(matrix, method="auto"):
    """Exact rank and kernel basis of a SparseMatrix.

    Kernel vectors k satisfy M k = 0 over Q exactly and are linearly
    independent; rank + len(kernel) == cols always holds.  The certified
    method re-verifies everything exactly before returning, so both
    methods give correct answers (and the same rank).
    """
    if not isinstance(matrix, SparseMatrix):
        raise TypeError("rank_and_kernel expects a SparseMatrix")
    if matrix.cols == 0:
        return 0, []
    if matrix.nnz() == 0:
        return 0, [_unit_vector(matrix.cols, j) for j in range(matrix.cols)]
    if method == "auto":
        big = matrix.rows * matrix.cols > _CERTIFIED_THRESHOLD
        method = "certified" if big else "fraction_free"
    if method == "certified":
        out = _rank_kernel_certified(matrix)
        if out is not None:
            rank, kernel = out
            return rank, kernel
        method = "fraction_free"
    if method != "fraction_free":
        raise ValueError("unknown method %r" % (method,))
    return _rank_kernel_fraction_free(matrix)


def rank_naive(matrix):
    """Reference rank via plain Fraction Gaussian elimination (test oracle)."""
    rows = [r for r in matrix.row_lists() if r]
    rank = 0
    for c in range(matrix.cols):
        pivot = None
        for i, r in enumerate(rows):
            if r.get(c):
                pivot = i
                break
        if pivot is None:
            continue
        prow = rows.pop(pivot)
        pv = prow[c]
        new_rows = []
        for r in rows:
            f = r.get(c)
            if f:
                out = {}
                scale = f / pv
                for j in set(r) | set(prow):
                    v = r.get(j, Fraction(0)) - scale * prow.get(j, Fraction(0))
                    if v:
                        out[j] = v
                r = out
            if r:
                new_rows.append(r)
        rows = new_rows
        rank += 1
    return rank


def in_span(vector, basis):
    """True iff vector is a rational linear combination of basis vectors."""
    n = len(vector)
    for b in basis:
        if len(b) != n:
            raise DimensionError("basis vector length %d != %d" % (len(b), n))
    if all(v == 0 for v in vector):
        return True
    if not basis:
        return False
    entries = {}
    for j, b in enumerate(basis):
        for i, v in enumerate(b):
            if v:
                entries[(i, j)] = Fraction(v)
    m_basis = SparseMatrix(n, len(basis), entries)
    for i, v in enumerate(vector):
        if v:
            entries[(i, len(basis))] = Fraction(v)
    m_aug = SparseMatrix(n, len(basis) + 1, entries)
    r1, _ = rank_and_kernel(m_basis, method="fraction_free")
    r2, _ = rank_and_kernel(m_aug, method="fraction_free")
    return r1 == r2
