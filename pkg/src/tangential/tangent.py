"""Concrete tensor-space computations for the tangential variety.

Coordinates follow the monomial convention: a symmetric tensor is the
coefficient vector of its polynomial in the monomial basis, no divided
powers.  A degree-one coordinate is indexed by an n-tuple of multisets
(one multiset of d_j basis indices per factor); a degree-r monomial is a
sorted r-tuple of such indices.

Two independent routes to the degree-r equations are implemented and
cross-checked exactly:

* ``pi_concrete`` builds the matrices of the graded comultiplication
  pieces in the fixed monomial bases (entries are the label-choice
  multiplicities of the generic map, e.g. a repeated index moves with
  its multiplicity); the ideal is the joint kernel.
* ``evaluation_oracle`` samples random rational tangent points from a
  seeded generator and evaluates every monomial; a form vanishes on the
  variety iff it kills the samples, and rank certificates plus exact
  vanishing checks turn the random matrix into a proof.
"""

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from .exactalg import SparseMatrix, rank_and_kernel, in_span
from .generic import compositions
from .symfun import NPartition, dim_gl

MAX_MONOMIAL_BASIS = 2000
MAX_MATRIX_CELLS = 30_000_000
RATIONAL_BOUND = 97


class DeskCapError(RuntimeError):
    """Raised when a concrete computation exceeds the documented caps."""


class TensorSpaceSpec:
    """Format d = (d_1..d_n) with concrete dimensions m = (m_1..m_n)."""

    __slots__ = ("d", "m", "_var_basis", "_var_index")

    def __init__(self, d, m):
        self.d = tuple(int(x) for x in d)
        self.m = tuple(int(x) for x in m)
        if len(self.d) != len(self.m):
            raise ValueError("format and dimension tuples differ in length")
        if any(x < 1 for x in self.d) or any(x < 1 for x in self.m):
            raise ValueError("degrees and dimensions must be positive")
        self._var_basis = None
        self._var_index = None

    @property
    def n(self):
        return len(self.d)

    @property
    def ambient_dim(self):
        out = 1
        for dj, mj in zip(self.d, self.m):
            out *= comb(mj + dj - 1, dj)
        return out

    def factor_monomials(self, j, degree=None):
        degree = self.d[j] if degree is None else degree
        return list(combinations_with_replacement(range(1, self.m[j] + 1), degree))

    def variable_basis(self):
        """All degree-one coordinates z_alpha, lexicographically sorted."""
        if self._var_basis is None:
            per = [self.factor_monomials(j) for j in range(self.n)]
            basis = [()]
            for opts in per:
                basis = [b + (o,) for b in basis for o in opts]
            self._var_basis = basis
            self._var_index = {a: i for i, a in enumerate(basis)}
        return self._var_basis

    def variable_index(self):
        self.variable_basis()
        return self._var_index

    def monomial_basis(self, r):
        """Degree-r monomials in the z variables, as sorted r-tuples."""
        basis = list(combinations_with_replacement(self.variable_basis(), r))
        if len(basis) > MAX_MONOMIAL_BASIS:
            raise DeskCapError(
                "degree-%d monomial basis has %d elements (cap %d)"
                % (r, len(basis), MAX_MONOMIAL_BASIS))
        return basis

    def __repr__(self):
        return "TensorSpaceSpec(d=%s, m=%s)" % (self.d, self.m)

    def __eq__(self, other):
        return (isinstance(other, TensorSpaceSpec)
                and self.d == other.d and self.m == other.m)

    def __hash__(self):
        return hash((self.d, self.m))


def _poly_mul(p, q):
    out = {}
    for ma, ca in p.items():
        for mb, cb in q.items():
            key = tuple(sorted(ma + mb))
            out[key] = out.get(key, Fraction(0)) + ca * cb
    return {k: v for k, v in out.items() if v}


def _vector_poly(vec):
    return {(i + 1,): Fraction(c) for i, c in enumerate(vec) if c}


def _poly_pow(p, k):
    out = {(): Fraction(1)}
    for _ in range(k):
        out = _poly_mul(out, p)
    return out


def tangent_point(e_vectors, f_vectors, spec):
    """Exact coordinates of sum_i e_1^{d_1} x ... x e_i^{d_i-1} f_i x ... x e_n^{d_n}.

    Degenerate inputs are fine; they land in the cone over the variety.
    Returns the coefficient list over ``spec.variable_basis()``.
    """
    n = spec.n
    for j in range(n):
        if len(e_vectors[j]) != spec.m[j] or len(f_vectors[j]) != spec.m[j]:
            raise ValueError("vector length mismatch in factor %d" % j)
    e_polys = [_vector_poly(e_vectors[j]) for j in range(n)]
    f_polys = [_vector_poly(f_vectors[j]) for j in range(n)]
    powers = [_poly_pow(e_polys[j], spec.d[j]) for j in range(n)]
    mixed = [_poly_mul(_poly_pow(e_polys[j], spec.d[j] - 1), f_polys[j])
             for j in range(n)]
    total = {}
    for i in range(n):
        factors = [mixed[j] if j == i else powers[j] for j in range(n)]
        acc = {(): Fraction(1)}
        for j in range(n):
            nxt = {}
            for prefix, c in acc.items():
                for mono, cv in factors[j].items():
                    key = prefix + (mono,)
                    nxt[key] = nxt.get(key, Fraction(0)) + c * cv
            acc = nxt
        for key, c in acc.items():
            total[key] = total.get(key, Fraction(0)) + c
    basis = spec.variable_basis()
    index = spec.variable_index()
    vec = [Fraction(0)] * len(basis)
    for key, c in total.items():
        vec[index[key]] = c
    return vec


def pi_concrete(a, spec, r):
    """Matrix of the graded piece with bottom degrees a, monomial bases fixed.

    Columns follow ``spec.monomial_basis(r)``; rows the product basis of
    the degree-(r d - a) and degree-a symmetric powers.  Entries are the
    coefficients of the substituted parametrization in the monomial
    bases: each row of a column monomial contributes the multinomial
    weights of its untouched factor monomials times the multinomial
    weight of the moved factor's remaining multiset.  This matches the
    no-divided-powers coordinates of ``tangent_point`` exactly (the
    label-counting normalization differs by an invertible per-column and
    per-grade rescaling, checked in the tests), so the joint kernel over
    all grades is the degree-r ideal in evaluation coordinates.
    """
    a = tuple(a)
    n = spec.n
    if len(a) != n or any(x < 0 for x in a):
        raise ValueError("grade %r malformed" % (a,))
    if sum(a) != r:
        raise ValueError("grade %r does not sum to r=%d" % (a, r))
    if any(a[j] > r * spec.d[j] for j in range(n)):
        return SparseMatrix(0, len(spec.monomial_basis(r)), {})
    cols = spec.monomial_basis(r)
    top_parts = [list(combinations_with_replacement(range(1, spec.m[j] + 1),
                                                    r * spec.d[j] - a[j]))
                 for j in range(n)]
    bot_parts = [list(combinations_with_replacement(range(1, spec.m[j] + 1), a[j]))
                 for j in range(n)]
    rows = [((), ())]
    for j in range(n):
        rows = [(t + (tp,), b + (bp,)) for (t, b) in rows
                for tp in top_parts[j] for bp in bot_parts[j]]
    if len(rows) * len(cols) > MAX_MATRIX_CELLS:
        raise DeskCapError("pi matrix would have %d x %d cells"
                           % (len(rows), len(cols)))
    row_index = {rb: i for i, rb in enumerate(rows)}
    entries = {}
    for ci, mono in enumerate(cols):
        col_acc = {}
        totals = [sorted(sum((row[j] for row in mono), ())) for j in range(n)]
        full_weight = [
            [_multinomial(mono[i][j]) for j in range(n)] for i in range(r)]
        for assign in _assignments(r, a):
            choice_sets = []
            base = 1
            for i in range(r):
                c = assign[i]
                for j in range(n):
                    if j != c:
                        base *= full_weight[i][j]
                alpha = mono[i][c]
                opts = []
                for v in sorted(set(alpha)):
                    rest = list(alpha)
                    rest.remove(v)
                    opts.append((v, _multinomial(tuple(rest))))
                choice_sets.append(opts)

            def rec(i, bottoms, mult):
                if i == r:
                    gamma, beta = [], []
                    for j in range(n):
                        bj = tuple(sorted(bottoms[j]))
                        rest = list(totals[j])
                        for v in bj:
                            rest.remove(v)
                        gamma.append(bj)
                        beta.append(tuple(rest))
                    key = (tuple(beta), tuple(gamma))
                    col_acc[key] = col_acc.get(key, 0) + mult
                    return
                for v, w in choice_sets[i]:
                    bottoms[assign[i]].append(v)
                    rec(i + 1, bottoms, mult * w)
                    bottoms[assign[i]].pop()

            rec(0, [[] for _ in range(n)], base)
        for key, val in col_acc.items():
            if val:
                entries[(row_index[key], ci)] = Fraction(val)
    return SparseMatrix(len(rows), len(cols), entries)


def _multinomial(multiset):
    """Multinomial coefficient of a sorted index multiset."""
    from math import factorial
    counts = {}
    for v in multiset:
        counts[v] = counts.get(v, 0) + 1
    out = factorial(len(multiset))
    for c in counts.values():
        out //= factorial(c)
    return out


def _assignments(r, a):
    items = []
    for j, aj in enumerate(a):
        items.extend([j] * aj)
    seen = set()
    from itertools import permutations
    for p in permutations(items):
        if p not in seen:
            seen.add(p)
            yield p


def stacked_pi_matrix(spec, r):
    """All graded pieces stacked into one matrix (shared column basis)."""
    cols = spec.monomial_basis(r)
    blocks = []
    total_rows = 0
    for a in compositions(r, spec.n):
        m = pi_concrete(a, spec, r)
        blocks.append((total_rows, m))
        total_rows += m.rows
    entries = {}
    for off, m in blocks:
        for (i, j), v in m.entries.items():
            entries[(i + off, j)] = v
    return SparseMatrix(total_rows, len(cols), entries)


class ConcretePolynomial:
    """Sparse homogeneous polynomial in the degree-one coordinates."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        self.degree = degree
        self.coeffs = {}
        for mono, c in coeffs.items():
            c = Fraction(c)
            if c:
                if len(mono) != degree:
                    raise ValueError("monomial %r is not of degree %d" % (mono, degree))
                self.coeffs[tuple(sorted(mono))] = c

    @classmethod
    def from_vector(cls, vec, basis, degree):
        return cls(degree, {basis[i]: v for i, v in enumerate(vec) if v})

    def to_vector(self, index):
        vec = [Fraction(0)] * len(index)
        for mono, c in self.coeffs.items():
            vec[index[mono]] = c
        return vec

    def evaluate(self, point, var_index):
        total = Fraction(0)
        for mono, c in self.coeffs.items():
            term = c
            for alpha in mono:
                term *= point[var_index[alpha]]
                if term == 0:
                    break
            total += term
        return total

    def times_variable(self, alpha):
        return ConcretePolynomial(
            self.degree + 1,
            {tuple(sorted(mono + (alpha,))): c for mono, c in self.coeffs.items()})

    def is_zero(self):
        return not self.coeffs

    def scale(self, c):
        return ConcretePolynomial(self.degree,
                                  {m: v * c for m, v in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, ConcretePolynomial)
                and self.degree == other.degree and self.coeffs == other.coeffs)

    def __repr__(self):
        return "ConcretePolynomial(degree=%d, %d terms)" % (self.degree, len(self.coeffs))


def random_rational(rng):
    num = rng.randint(1, RATIONAL_BOUND) * rng.choice((1, -1))
    den = rng.randint(1, RATIONAL_BOUND)
    return Fraction(num, den)


def random_tangent_point(spec, rng):
    e = [[random_rational(rng) for _ in range(mj)] for mj in spec.m]
    f = [[random_rational(rng) for _ in range(mj)] for mj in spec.m]
    return tangent_point(e, f, spec)


def evaluation_oracle(spec, r, sample_count=None, seed=0):
    """Rows of evaluated degree-r monomials at seeded random tangent points."""
    basis = spec.monomial_basis(r)
    if sample_count is None:
        sample_count = 2 * len(basis)
    rng = random.Random(seed)
    var_index = spec.variable_index()
    entries = {}
    for s in range(sample_count):
        point = random_tangent_point(spec, rng)
        _fill_eval_row(entries, s, point, basis, var_index)
    return SparseMatrix(sample_count, len(basis), entries)


def _fill_eval_row(entries, row, point, basis, var_index):
    cache = {}
    for ci, mono in enumerate(basis):
        val = Fraction(1)
        for alpha in mono:
            v = cache.get(alpha)
            if v is None:
                v = point[var_index[alpha]]
                cache[alpha] = v
            val *= v
        if val:
            entries[(row, ci)] = val


def _modular_rank(matrix):
    """Rank mod a fixed word-sized prime: an exact lower bound on rank."""
    import numpy as np
    from .exactalg import _PRIMES, _mod_echelon, _mod_entry
    p = _PRIMES[0]
    rows = [rw for rw in matrix.row_lists() if rw]
    if not rows:
        return 0
    arr = np.zeros((len(rows), matrix.cols), dtype=np.int64)
    for i, rw in enumerate(rows):
        for j, v in rw.items():
            arr[i, j] = _mod_entry(v, p)
    piv_cols, _ = _mod_echelon(arr, p)
    return len(piv_cols)


class IdealReport:
    """Certificate data for one (spec, r) ideal computation."""

    def __init__(self, spec, r, dimension, kernel, seed, samples, oracle_agrees):
        self.spec = spec
        self.r = r
        self.dimension = dimension
        self.kernel = kernel
        self.seed = seed
        self.samples = samples
        self.oracle_agrees = oracle_agrees

    def __repr__(self):
        return ("IdealReport(d=%s, m=%s, r=%d, dim=%d, oracle_agrees=%r)"
                % (self.spec.d, self.spec.m, self.r, self.dimension,
                   self.oracle_agrees))


def ideal_dimension(spec, r, seed=0, cross_validate=True):
    """Exact dimension and basis of the degree-r ideal, doubly certified.

    The deterministic route is the joint kernel of the stacked graded
    pieces.  When ``cross_validate`` is on, random tangent-point
    evaluations must kill every kernel element exactly, and a modular
    rank certificate pins the evaluation kernel to the same dimension
    (sampling doubles until the modular kernel dimension stabilizes
    twice, and the final matrix is checked against the deterministic
    kernel).
    """
    basis = spec.monomial_basis(r)
    index = {mono: i for i, mono in enumerate(basis)}
    stacked = stacked_pi_matrix(spec, r)
    rank, kernel = rank_and_kernel(stacked)
    dim = len(kernel)
    polys = [ConcretePolynomial.from_vector(v, basis, r) for v in kernel]
    report = IdealReport(spec, r, dim, polys, seed, 0, None)
    if cross_validate:
        agrees, samples = _oracle_crosscheck(spec, r, kernel, basis, index, seed)
        report.samples = samples
        report.oracle_agrees = agrees
        if not agrees:
            raise AssertionError(
                "evaluation oracle disagrees with the pi kernel for %r, r=%d"
                % (spec, r))
    return dim, polys, report


def _oracle_crosscheck(spec, r, kernel, basis, index, seed):
    n_basis = len(basis)
    rng = random.Random(seed)
    var_index = spec.variable_index()
    entries = {}
    rows = 0

    def add_samples(count):
        nonlocal rows
        for _ in range(count):
            point = random_tangent_point(spec, rng)
            _fill_eval_row(entries, rows, point, basis, var_index)
            rows += 1

    target = n_basis + 16
    add_samples(target)
    history = []
    while True:
        matrix = SparseMatrix(rows, n_basis, entries)
        kdim = n_basis - _modular_rank(matrix)
        history.append(kdim)
        if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
            break
        if kdim == len(kernel) and len(history) >= 2 and history[-1] == history[-2]:
            break
        add_samples(rows)

    if history[-1] != len(kernel):
        return False, rows
    # exact vanishing of every kernel vector on every sample row
    row_lists = matrix.row_lists()
    for vec in kernel:
        for row in row_lists:
            s = Fraction(0)
            for j, v in row.items():
                if vec[j]:
                    s += v * vec[j]
            if s != 0:
                return False, rows
    return True, rows


def coordinate_dim(spec, r):
    """Predicted dimension of the degree-r coordinate ring: the 0/1
    multiplicity rule summed against concrete Weyl dimensions."""
    total = 0
    for lam in _two_row_shapes(spec, r):
        np_lam = NPartition(lam)
        e = np_lam.e
        f = np_lam.f(spec.d)
        if e < 2 * f or e > r:
            continue
        prod = 1
        for j, comp in enumerate(lam):
            prod *= dim_gl(comp, spec.m[j])
            if prod == 0:
                break
        total += prod
    return total


def _two_row_shapes(spec, r):
    per = []
    for j, dj in enumerate(spec.d):
        opts = []
        size = r * dj
        for k in range(size // 2 + 1):
            opts.append((size - k, k) if k else (size,))
        per.append(opts)
    shapes = [()]
    for opts in per:
        shapes = [s + (o,) for s in shapes for o in opts]
    return shapes


def graph_covariant_concrete(graph, spec):
    """Signed edge expansion of a two-row covariant at dimensions two.

    Vertices start with all-ones index multisets; each edge moves one
    index to 2 at its head (+) or tail (-); the signed sum over all
    choices is the concrete highest-weight polynomial (zero exactly when
    the tabloid covariant vanishes).  Each monomial is divided by the
    multinomial weights of its index multisets, which converts the
    natural bracket normalization into the no-divided-powers coordinates
    used everywhere else (for formats with all d_j = 1 nothing changes).
    """
    if any(mj != 2 for mj in spec.m):
        raise ValueError("the two-row specialization needs every m_j = 2")
    if graph.d != spec.d:
        raise ValueError("graph format %s does not match spec %s"
                         % (graph.d, spec.d))
    r = graph.r
    n = spec.n
    edges = list(graph.edges)
    coeffs = {}
    for mask in range(1 << len(edges)):
        twos = {}
        sign = 1
        for idx, (u, v, c) in enumerate(edges):
            if mask & (1 << idx):
                target = u
                sign = -sign
            else:
                target = v
            twos[(target, c - 1)] = twos.get((target, c - 1), 0) + 1
        mono = []
        for i in range(1, r + 1):
            alpha = []
            for j in range(n):
                t = twos.get((i, j), 0)
                alpha.append((1,) * (spec.d[j] - t) + (2,) * t)
            mono.append(tuple(alpha))
        key = tuple(sorted(mono))
        coeffs[key] = coeffs.get(key, 0) + sign
    out = {}
    for key, c in coeffs.items():
        if not c:
            continue
        norm = 1
        for alpha in key:
            for part in alpha:
                norm *= _multinomial(part)
        out[key] = Fraction(c, norm)
    return ConcretePolynomial(r, out)


class GenerationReport:
    """Per-degree comparison of the ideal with products from below."""

    def __init__(self, spec, rows):
        self.spec = spec
        self.rows = rows  # list of dicts: r, ideal_dim, span_dim, new_generators

    def degrees_with_new_generators(self):
        return [row["r"] for row in self.rows if row["new_generators"] > 0]

    def __repr__(self):
        return "GenerationReport(%s)" % (self.rows,)


def generated_in_degree(spec, up_to, seed=0, cross_validate=True):
    """For each degree r <= up_to, the span of (lower ideal) * (linear forms)
    against the full degree-r ideal; flags degrees with new generators."""
    rows = []
    prev_polys = []
    variables = spec.variable_basis()
    for r in range(1, up_to + 1):
        dim, polys, _ = ideal_dimension(spec, r, seed=seed,
                                        cross_validate=cross_validate)
        basis = spec.monomial_basis(r)
        index = {mono: i for i, mono in enumerate(basis)}
        products = []
        for p in prev_polys:
            for alpha in variables:
                products.append(p.times_variable(alpha))
        if products:
            entries = {}
            for i, p in enumerate(products):
                for mono, c in p.coeffs.items():
                    entries[(i, index[mono])] = c
            mat = SparseMatrix(len(products), len(basis), entries)
            span_dim, _ = rank_and_kernel(mat)
            kernel_vectors = [p.to_vector(index) for p in polys]
            for p in products:
                if not in_span(p.to_vector(index), kernel_vectors):
                    raise AssertionError(
                        "ideal is not closed under multiplication at r=%d" % r)
        else:
            span_dim = 0
        rows.append({
            "r": r,
            "ideal_dim": dim,
            "span_dim": span_dim,
            "new_generators": dim - span_dim,
        })
        prev_polys = polys
    return GenerationReport(spec, rows)
