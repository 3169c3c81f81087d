"""Partitions, symmetric-group characters, Kostka numbers, multiplicities.

The central quantity is the multiplicity of an irreducible S_lambda(V_1)
x ... x S_lambda(V_n) inside Sym^r(Sym^{d_1} V_1 (x) ... (x) Sym^{d_n} V_n),
computed two independent ways:

* weight-space counting: count monomials of each torus weight and invert
  the (unitriangular) Kostka matrix factor by factor;
* a character-theoretic path: expand the symmetric power over cycle
  types and pair with irreducible characters evaluated by the
  Murnaghan-Nakayama rule.

``coordinate_mult`` is the closed-form 0/1 rule for the tangential
variety's coordinate ring: zero when some component has more than two
rows, when the total edge count e is below twice the per-color demand f,
or when e exceeds the degree; one otherwise.
"""

import json
import os
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import ceil, factorial

CACHE_ENV = "TANGENT_CACHE_DIR"
CACHE_VERSION = 1


def check_partition(parts):
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError("partition parts must be positive: %r" % (parts,))
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("partition parts must be weakly decreasing: %r" % (parts,))
    return parts


def partitions(n, max_rows=None):
    """All partitions of n with at most max_rows parts, lexicographically sorted."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if max_rows is None:
        max_rows = n
    out = []

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == max_rows:
            return
        for p in range(min(max_part, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    out.sort()
    return out


def dominates(mu, lam):
    """True iff mu >= lam in dominance order (same size assumed)."""
    s_mu = s_lam = 0
    for i in range(max(len(mu), len(lam))):
        s_mu += mu[i] if i < len(mu) else 0
        s_lam += lam[i] if i < len(lam) else 0
        if s_mu < s_lam:
            return False
    return True


def dim_gl(lam, m):
    """Dimension of the irreducible GL_m representation of highest weight lam.

    Hook-content formula; zero when lam has more than m rows.
    """
    lam = check_partition(lam) if lam else ()
    if len(lam) > m:
        return 0
    num = den = 1
    cols = list(_conjugate(lam))
    for i, row_len in enumerate(lam):
        for j in range(row_len):
            num *= m + j - i
            arm = row_len - j - 1
            leg = cols[j] - i - 1
            den *= arm + leg + 1
    assert num % den == 0
    return num // den


def _conjugate(lam):
    if not lam:
        return ()
    out = [0] * lam[0]
    for p in lam:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def count_ssyt(lam, m):
    """Brute-force count of semistandard tableaux of shape lam, entries <= m."""
    lam = tuple(lam)
    cells = [(i, j) for i, p in enumerate(lam) for j in range(p)]

    def rec(idx, filled):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        lo = 1
        if j > 0:
            lo = max(lo, filled[(i, j - 1)])
        if i > 0:
            lo = max(lo, filled[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, m + 1):
            filled[(i, j)] = v
            total += rec(idx + 1, filled)
        filled.pop((i, j), None)
        return total

    return rec(0, {})


def cycle_types(r):
    """Pairs (mu, class size) for all cycle types of S_r."""
    out = []
    for mu in partitions(r):
        out.append((mu, factorial(r) // _z_mu(mu)))
    return out


def _z_mu(mu):
    z = 1
    counts = {}
    for p in mu:
        counts[p] = counts.get(p, 0) + 1
    for p, k in counts.items():
        z *= p ** k * factorial(k)
    return z


@lru_cache(maxsize=None)
def character(lam, mu):
    """Irreducible S_n character chi_lam at cycle type mu (Murnaghan-Nakayama)."""
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("size mismatch: |%r| != |%r|" % (lam, mu))
    if not lam:
        return 1
    k = mu[0]
    rest = mu[1:]
    # beta numbers: strictly decreasing first-column hook lengths
    n_rows = len(lam)
    beta = [lam[i] + (n_rows - 1 - i) for i in range(n_rows)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted([c if c != b else nb for c in beta], reverse=True)
        new_lam = []
        for i, c in enumerate(new_beta):
            p = c - (n_rows - 1 - i)
            if p > 0:
                new_lam.append(p)
            elif p < 0:
                raise AssertionError("bad beta set")
        total += (-1) ** height * character(tuple(new_lam), rest)
    return total


@lru_cache(maxsize=None)
def kostka(lam, mu):
    """Kostka number: semistandard tableaux of shape lam and content mu."""
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    if not lam:
        return 1
    if len(mu) == 1:
        return 1 if lam == mu else 0
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    for nu in _horizontal_strip_predecessors(lam, last):
        total += kostka(nu, rest)
    return total


def _horizontal_strip_predecessors(lam, k):
    """Partitions nu c= lam with lam/nu a horizontal strip of size k."""
    out = []

    def rec(i, remaining, prefix):
        if i == len(lam):
            if remaining == 0:
                out.append(tuple(p for p in prefix if p > 0))
            return
        below = lam[i + 1] if i + 1 < len(lam) else 0
        # interlacing lam_{i+1} <= nu_i <= lam_i keeps nu a partition and
        # makes the removed cells a horizontal strip
        lo = max(below, lam[i] - remaining)
        for v in range(lam[i], lo - 1, -1):
            prefix.append(v)
            rec(i + 1, remaining - (lam[i] - v), prefix)
            prefix.pop()

    rec(0, k, [])
    return out


class CharacterTable:
    """Full character table of S_r with exact integer values."""

    def __init__(self, r, values=None):
        self.r = r
        self.shapes = partitions(r)
        self.classes = cycle_types(r)
        if values is None:
            values = {}
            for lam in self.shapes:
                for mu, _ in self.classes:
                    values[(lam, mu)] = character(lam, mu)
        self.values = values

    def chi(self, lam, mu):
        return self.values[(tuple(lam), tuple(mu))]

    def verify_orthogonality(self):
        """Row orthogonality, exactly: <chi_lam, chi_nu> = delta."""
        order = factorial(self.r)
        for lam in self.shapes:
            for nu in self.shapes:
                s = Fraction(0)
                for mu, size in self.classes:
                    s += Fraction(size, order) * self.chi(lam, mu) * self.chi(nu, mu)
                if s != (1 if lam == nu else 0):
                    return False
        return True

    def to_json(self):
        return {
            "version": CACHE_VERSION,
            "r": self.r,
            "values": [
                [list(lam), list(mu), self.values[(lam, mu)]]
                for lam in self.shapes for mu, _ in self.classes
            ],
        }

    @classmethod
    def from_json(cls, data):
        if data.get("version") != CACHE_VERSION:
            raise ValueError("character table cache version mismatch")
        values = {(tuple(l), tuple(m)): v for l, m, v in data["values"]}
        return cls(data["r"], values)


def cache_dir(explicit=None):
    return explicit or os.environ.get(CACHE_ENV)


def character_table(r, cache=None):
    """Character table of S_r, optionally persisted as versioned JSON.

    Deleting the cache never changes results; a corrupt cache is ignored
    and rebuilt from scratch.
    """
    cdir = cache_dir(cache)
    path = None
    if cdir:
        path = os.path.join(cdir, "character_table_r%d_v%d.json" % (r, CACHE_VERSION))
        if os.path.exists(path):
            try:
                with open(path) as fh:
                    return CharacterTable.from_json(json.load(fh))
            except (ValueError, KeyError, json.JSONDecodeError):
                pass
    table = CharacterTable(r)
    if path:
        os.makedirs(cdir, exist_ok=True)
        with open(path, "w") as fh:
            json.dump(table.to_json(), fh, sort_keys=True)
    return table


def kostka_matrix(n, cache=None):
    """All Kostka numbers K[lam][mu] for lam, mu |- n, cached like characters."""
    cdir = cache_dir(cache)
    path = None
    if cdir:
        path = os.path.join(cdir, "kostka_n%d_v%d.json" % (n, CACHE_VERSION))
        if os.path.exists(path):
            try:
                with open(path) as fh:
                    data = json.load(fh)
                if data.get("version") != CACHE_VERSION:
                    raise ValueError
                return {
                    (tuple(l), tuple(m)): v for l, m, v in data["values"]
                }
            except (ValueError, KeyError, json.JSONDecodeError):
                pass
    shapes = partitions(n)
    out = {}
    for lam in shapes:
        for mu in shapes:
            out[(lam, mu)] = kostka(lam, mu)
    if path:
        os.makedirs(cdir, exist_ok=True)
        with open(path, "w") as fh:
            json.dump({
                "version": CACHE_VERSION,
                "n": n,
                "values": [[list(l), list(m), v] for (l, m), v in sorted(out.items())],
            }, fh, sort_keys=True)
    return out


class NPartition:
    """A tuple of partitions, one per tensor factor.

    ``e`` is the total number of second-row boxes and ``f`` the maximum
    per-factor demand ceil(second_row / d_j); both are derived on the fly
    from the components, never stored.
    """

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(check_partition(c) if c else () for c in components)

    def __eq__(self, other):
        return isinstance(other, NPartition) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "NPartition(%r)" % (self.components,)

    def __iter__(self):
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    def __getitem__(self, j):
        return self.components[j]

    def second_rows(self):
        return tuple(c[1] if len(c) > 1 else 0 for c in self.components)

    @property
    def e(self):
        return sum(self.second_rows())

    def f(self, d):
        if len(d) != len(self.components):
            raise ValueError("format length mismatch")
        vals = [ceil(k / dj) for k, dj in zip(self.second_rows(), d)]
        return max(vals) if vals else 0

    def max_rows(self):
        return max((len(c) for c in self.components), default=0)

    def validate_degree(self, r, d):
        if len(d) != len(self.components):
            raise ValueError("format length mismatch")
        for j, (c, dj) in enumerate(zip(self.components, d)):
            if sum(c) != r * dj:
                raise ValueError(
                    "component %d has size %d, expected r*d_j = %d" % (j, sum(c), r * dj))


def coordinate_mult(lam, r, d):
    """Multiplicity (0 or 1) of S_lam in degree r of the tangential coordinate ring.

    Zero when some component has more than two rows, when e < 2f, or
    when e > r; one otherwise.
    """
    if not isinstance(lam, NPartition):
        lam = NPartition(lam)
    lam.validate_degree(r, d)
    if lam.max_rows() > 2:
        return 0
    e = lam.e
    f = lam.f(d)
    if e < 2 * f or e > r:
        return 0
    return 1


def veronese_k1q(d, q):
    """Shapes of minimal generators of degree q+1 for the one-factor case."""
    if d < 2:
        raise ValueError("requires d >= 2")
    if q == 1:
        return [(2 * d - k, k) for k in range(4, d + 1) if k % 2 == 0]
    if q == 2:
        out = [(3 * d - 4, 2, 2)]
        if d == 3:
            out.append((4, 4, 1))
        if d == 4:
            out.append((6, 6))
        return out
    if q == 3:
        return [(6, 6)] if d == 3 else []
    raise ValueError("q must be 1, 2 or 3")


# ---------------------------------------------------------------------------
# multiplicities in Sym^r(Sym^{d_1} (x) ... (x) Sym^{d_n})


class FeasibilityError(RuntimeError):
    """Raised when a weight-counting enumeration would exceed the desk cap."""


_WEIGHT_CAP = 6_000_000  # max multisets enumerated for one weight table


def _binom(a, b):
    if b < 0 or b > a:
        return 0
    out = 1
    for i in range(b):
        out = out * (a - i) // (i + 1)
    return out


@lru_cache(maxsize=None)
def _weight_table(r, d, m):
    """Weight multiplicities of the monomial basis of Sym^r(Sym^d K^m).

    Keys are flat tuples: the per-factor content vectors concatenated.
    """
    blocks = list(_block_iter(d, m))
    count = _binom(len(blocks) + r - 1, r)
    if count > _WEIGHT_CAP:
        raise FeasibilityError(
            "weight table for r=%d d=%s m=%s needs %d multisets (cap %d)"
            % (r, d, m, count, _WEIGHT_CAP))
    width = sum(m)
    offsets = []
    off = 0
    for mj in m:
        offsets.append(off)
        off += mj
    weights = []
    for b in blocks:
        w = [0] * width
        for j in range(len(d)):
            for v in b[j]:
                w[offsets[j] + v] += 1
        weights.append(tuple(w))
    table = {}
    for combo in combinations_with_replacement(weights, r):
        key = tuple(map(sum, zip(*combo)))
        table[key] = table.get(key, 0) + 1
    return table


def _block_iter(d, m):
    per_factor = [list(combinations_with_replacement(range(mj), dj))
                  for dj, mj in zip(d, m)]
    def rec(j, prefix):
        if j == len(d):
            yield tuple(prefix)
            return
        for choice in per_factor[j]:
            prefix.append(choice)
            yield from rec(j + 1, prefix)
            prefix.pop()
    yield from rec(0, [])


def _weight_of_shape(lam, m):
    flat = []
    for j, c in enumerate(lam.components):
        flat.extend(list(c) + [0] * (m[j] - len(c)))
    return tuple(flat)


def mult_in_sym_weights(lam, r, d):
    """Multiplicity via weight counting plus per-factor Kostka inversion."""
    if not isinstance(lam, NPartition):
        lam = NPartition(lam)
    lam.validate_degree(r, d)
    if lam.max_rows() > r:
        return 0
    m = tuple(max(1, len(c)) for c in lam.components)
    # multiplicity is invariant under permuting factors; canonicalize the
    # factor order so cached weight tables are shared across queries
    perm = sorted(range(len(d)), key=lambda j: (-d[j], -m[j], j))
    d = tuple(d[j] for j in perm)
    m = tuple(m[j] for j in perm)
    comps = tuple(lam.components[j] for j in perm)
    table = _weight_table(r, d, m)

    # dominance up-set, factor by factor
    upsets = []
    for j, c in enumerate(comps):
        ups = [mu for mu in partitions(r * d[j], m[j]) if dominates(mu, c)]
        upsets.append(ups)

    def tuples(j):
        if j == len(upsets):
            yield ()
            return
        for head in upsets[j]:
            for tail in tuples(j + 1):
                yield (head,) + tail

    mults = {}
    # solve from most dominant down: strict dominators come first
    order = _dominance_toposort(list(tuples(0)))
    for mu in order:
        w = table.get(_weight_of_shape(NPartition(mu), m), 0)
        for nu, m_nu in mults.items():
            if nu == mu:
                continue
            if all(dominates(a, b) for a, b in zip(nu, mu)):
                prod = m_nu
                for a, b in zip(nu, mu):
                    prod *= kostka(a, b)
                w -= prod
        mults[mu] = w
    return mults[comps]


def _dominance_toposort(shapes):
    shapes = list(shapes)
    def key(t):
        # more dominant tuples first: larger partial sums sort earlier
        flat = []
        for p in t:
            sums = []
            s = 0
            for x in p:
                s += x
                sums.append(-s)
            flat.append(tuple(sums))
        return tuple(flat)
    shapes.sort(key=key)
    return shapes


def mult_in_sym_characters(lam, r, d):
    """Multiplicity via cycle-type expansion and Murnaghan-Nakayama characters."""
    if not isinstance(lam, NPartition):
        lam = NPartition(lam)
    lam.validate_degree(r, d)
    total = Fraction(0)
    order = factorial(r)
    for mu, size in cycle_types(r):
        prod = Fraction(size, order)
        for j, dj in enumerate(d):
            prod *= _sym_power_pairing(mu, dj, lam.components[j])
            if prod == 0:
                break
        total += prod
    assert total.denominator == 1 and total >= 0, "multiplicity must be a nonneg integer"
    return int(total)


def _sym_power_pairing(mu, dj, lam_j):
    """<prod_i h_{dj}[p_{mu_i}], s_{lam_j}> via power-sum expansion."""
    choices = [partitions(dj) for _ in mu]
    total = Fraction(0)
    def rec(i, acc_parts, acc_coeff):
        nonlocal total
        if i == len(mu):
            parts = tuple(sorted(acc_parts, reverse=True))
            total += acc_coeff * character(tuple(lam_j), parts)
            return
        for rho in choices[i]:
            scaled = [mu[i] * p for p in rho]
            rec(i + 1, acc_parts + scaled, acc_coeff * Fraction(1, _z_mu(rho)))
    rec(0, [], Fraction(1))
    return total


def mult_in_sym(lam, r, d, path="weights"):
    """Multiplicity of S_lam inside Sym^r(Sym^{d_1} (x) ... (x) Sym^{d_n}).

    ``path`` selects the computation route; both agree (tested at desk
    scale) and ``weights`` is the default.
    """
    if path == "weights":
        return mult_in_sym_weights(lam, r, d)
    if path == "characters":
        return mult_in_sym_characters(lam, r, d)
    raise ValueError("unknown path %r" % (path,))


def sym_space_dimension(d, m, r):
    """dim Sym^r(Sym^{d_1} K^{m_1} (x) ... ) = C(D + r - 1, r)."""
    D = 1
    for dj, mj in zip(d, m):
        D *= _binom(mj + dj - 1, dj)
    return _binom(D + r - 1, r)


def all_shapes(r, d, max_rows):
    """All NPartition shapes for degree r, with per-factor row bounds."""
    per_factor = [partitions(r * dj, mr) for dj, mr in zip(d, max_rows)]
    def rec(j):
        if j == len(d):
            yield ()
            return
        for head in per_factor[j]:
            for tail in rec(j + 1):
                yield (head,) + tail
    for t in rec(0):
        yield NPartition(t)
