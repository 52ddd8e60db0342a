"""Shared randomized property runners.

Each runner draws `cases` instances from a seeded RNG and raises
AssertionError on the first violation, so module tests can run small
counts and the acceptance suite can run the full ones.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import numpy as np

from steiner_spectra import (
    SymmetricHypermatrix,
    build_steiner_hypermatrix,
    charpoly_allones,
    hyperdet,
    nqz_spectral_radius,
    tree_from_prufer,
)
from steiner_spectra.hypermatrix import multisets


def random_hypermatrix(rng: random.Random, order: int, dim: int, lo=0, hi=3):
    entries = {ms: rng.randint(lo, hi) for ms in multisets(dim, order)}
    return SymmetricHypermatrix(order, dim, entries)


def naive_contract(a: SymmetricHypermatrix, x):
    """Direct sum over all n^(k-1) ordered index tuples."""
    n, k = a.dim, a.order
    out = []
    for i in range(1, n + 1):
        acc = 0
        for rest in product(range(1, n + 1), repeat=k - 1):
            term = a.entry((i,) + rest)
            for j in rest:
                term = term * x[j - 1]
            acc += term
        out.append(acc)
    return out


def run_contraction_vs_naive(cases: int, seed: int) -> int:
    """contract() against the brute-force summation, exact and float paths."""
    rng = random.Random(seed)
    for case in range(cases):
        n = rng.randint(1, 3)
        k = rng.randint(2, 4)
        a = random_hypermatrix(rng, k, n)
        x = [rng.randint(-3, 3) for _ in range(n)]
        assert a.contract(x) == naive_contract(a, x), (case, a, x)
        xf = np.array([float(v) for v in x])
        got = a.contract(xf)
        want = naive_contract(a, [float(v) for v in x])
        assert np.allclose(got, want, atol=1e-9), (case, a, x)
    return cases


def run_relabel_invariance(cases: int, seed: int) -> int:
    """hyperdet must be blind to vertex relabeling."""
    rng = random.Random(seed)
    for case in range(cases):
        n = rng.randint(2, 3)
        k = rng.choice([2, 3, 4]) if n == 2 else rng.choice([2, 3])
        if n == 2:
            a = random_hypermatrix(rng, k, n, lo=0, hi=4)
        else:
            seq = tuple(rng.randint(1, n) for _ in range(n - 2))
            a = build_steiner_hypermatrix(tree_from_prufer(seq), k)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        assert hyperdet(a.relabel(perm)) == hyperdet(a), (case, a, perm)
    return cases


def run_multiplicity_integrality(cases: int, seed: int) -> int:
    """charpoly_allones: merged multiplicities integral, total n(k-1)^(n-1)."""
    rng = random.Random(seed)
    for case in range(cases):
        n = rng.randint(2, 4)
        k = rng.randint(2, 6)
        pairs = charpoly_allones(n, k)
        total = sum((p.multiplicity for p in pairs), Fraction(0))
        assert total == n * (k - 1) ** (n - 1), (case, n, k, total)
        for p in pairs:
            assert p.multiplicity.denominator == 1 and p.multiplicity > 0, (case, n, k, p)
    return cases


def run_nqz_monotonicity(cases: int, seed: int) -> int:
    """Enclosure widths never grow along the iteration history."""
    rng = random.Random(seed)
    for case in range(cases):
        n = rng.randint(2, 6)
        k = rng.randint(2, 4)
        if n == 2:
            g = tree_from_prufer(())
        else:
            g = tree_from_prufer(tuple(rng.randint(1, n) for _ in range(n - 2)))
        enc = nqz_spectral_radius(build_steiner_hypermatrix(g, k), 1e-6)
        widths = [hi - lo for lo, hi in enc.history]
        slack = 1e-9 * (1.0 + abs(enc.hi))
        for earlier, later in zip(widths, widths[1:]):
            assert later <= earlier + slack, (case, n, k, widths)
        assert enc.lo - slack <= enc.value <= enc.hi + slack, (case, n, k)
    return cases
