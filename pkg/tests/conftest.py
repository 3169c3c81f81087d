import random

import pytest

from tangential.generic import TabloidFilling, filling_from_columns
from tangential.symfun import NPartition


def random_two_row_filling(rng, r=None, max_total_degree=4):
    """A random filling whose factors all have at most two rows.

    Shapes are drawn so the symmetrizer expansion stays cheap; every
    factor has at least one size-two column somewhere so straightening
    relations have something to act on.
    """
    while True:
        r = rng.choice((2, 3)) if r is None else r
        n = rng.randint(1, 3)
        d = []
        budget = max_total_degree
        for _ in range(n):
            dj = rng.randint(1, min(2, budget - (n - len(d) - 1)))
            d.append(dj)
            budget -= dj
        d = tuple(d)
        cols = []
        ok = True
        for j in range(n):
            pairs = []
            capacity = {v: d[j] for v in range(1, r + 1)}
            k_max = (r * d[j]) // 2
            k = rng.randint(0, min(2, k_max))
            for _ in range(k):
                choices = [(u, v) for u in range(1, r + 1) for v in range(1, r + 1)
                           if u != v and capacity[u] > 0 and capacity[v] > 0]
                if not choices:
                    ok = False
                    break
                u, v = rng.choice(choices)
                capacity[u] -= 1
                capacity[v] -= 1
                pairs.append((u, v))
            if not ok:
                break
            singles = []
            for v in range(1, r + 1):
                singles.extend([(v,)] * capacity[v])
            cols.append(pairs + singles)
        if not ok:
            continue
        shape = NPartition([
            _shape_of(c, r * d[j]) for j, c in enumerate(cols)])
        try:
            return filling_from_columns(shape, r, d, cols)
        except ValueError:
            continue


def _shape_of(cols, total):
    lam2 = sum(1 for c in cols if len(c) == 2)
    lam1 = total - lam2
    return (lam1, lam2) if lam2 else (lam1,)


@pytest.fixture
def rng():
    return random.Random(2024)
