"""Random fixtures and independent oracles shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from nilpotent_dga.graded import GradedMap, GradedSpace

# filled by the acceptance tests, printed by the terminal summary hook
ACCEPTANCE_LINES: list[str] = []


def rq(rng: random.Random, lo: int = -3, hi: int = 3, den: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_space(rng: random.Random, max_dim: int = 12) -> GradedSpace:
    comps, k = {}, 0
    for deg in range(rng.randint(-1, 0), rng.randint(1, 3)):
        n = min(rng.randint(1, 3), max_dim - k)
        if n <= 0:
            break
        comps[deg] = [f"v{k + i}" for i in range(n)]
        k += n
    return GradedSpace(comps)


def random_map(rng: random.Random, sp: GradedSpace, degree: int = 1, entry=None) -> GradedMap:
    entry = entry or (lambda: rq(rng))
    blocks = {i: [[entry() for _ in range(sp.dim(i))] for _ in range(sp.dim(i + degree))]
              for i in sp.degrees()}
    return GradedMap(sp, sp, degree, blocks)


def random_antisymmetric(rng: random.Random, size: int) -> list[list[Fraction]]:
    F = [[Fraction(0)] * size for _ in range(size)]
    for i, j in combinations(range(size), 2):
        c = rq(rng, -5, 5, 4)
        F[i][j], F[j][i] = c, -c
    return F


# wedge algebra oracle -----------------------------------------------------

def _wedge(x: dict, y: dict) -> dict:
    out: dict = {}
    for I, a in x.items():
        for J, b in y.items():
            if set(I) & set(J):
                continue
            merged = I + J
            inv = sum(1 for p in range(len(merged)) for q in range(p + 1, len(merged))
                      if merged[p] > merged[q])
            key = tuple(sorted(merged))
            out[key] = out.get(key, 0) + (-1) ** inv * a * b
    return {k: v for k, v in out.items() if v != 0}


def wedge_power_coefficient(F) -> Fraction:
    """Top coefficient of (sum_{i<j} F_ij e_i^e_j)^n divided by n!."""
    size = len(F)
    n = size // 2
    omega = {(i, j): Fraction(F[i][j]) for i, j in combinations(range(size), 2) if F[i][j] != 0}
    acc = {(): Fraction(1)}
    for _ in range(n):
        acc = _wedge(acc, omega)
    return acc.get(tuple(range(size)), Fraction(0)) / factorial(n)


def permutation_pfaffian(F) -> Fraction:
    """1/(2^n n!) sum_sigma sgn(sigma) prod F[sigma(2i)][sigma(2i+1)]."""
    size = len(F)
    n = size // 2
    total = Fraction(0)
    for perm in permutations(range(size)):
        inv = sum(1 for p in range(size) for q in range(p + 1, size) if perm[p] > perm[q])
        prod = Fraction((-1) ** inv)
        for i in range(n):
            prod *= F[perm[2 * i]][perm[2 * i + 1]]
            if not prod:
                break
        total += prod
    return total / (2 ** n * factorial(n))


def cofactor_det(a) -> Fraction:
    n = len(a)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(a[0][0])
    total = Fraction(0)
    for j in range(n):
        if a[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        total += (-1) ** j * a[0][j] * cofactor_det(minor)
    return total


# symbolic Leibniz oracle -------------------------------------------------

def symbolic_leibniz(n: int, parity: int) -> dict[int, int]:
    """Expand d^n(ab) term by term; key i means d^i(a) d^{n-i}(b).

    Each step differentiates every product with the plain Leibniz rule, the
    sign for passing d across d^i(a) being (-1)^{parity + i}.
    """
    terms = {0: 1}
    for _ in range(n):
        nxt: dict[int, int] = {}
        for i, c in terms.items():
            nxt[i + 1] = nxt.get(i + 1, 0) + c
            nxt[i] = nxt.get(i, 0) + (-1) ** ((parity + i) % 2) * c
        terms = nxt
    return terms


# path enumeration oracle -------------------------------------------------

def brute_path_sum(neighbors, n: int, x, y) -> Fraction:
    """Sum of path weights by explicit recursion, no memoization."""
    if n == 0:
        return Fraction(int(x == y))
    return sum((w * brute_path_sum(neighbors, n - 1, v, y) for v, w in neighbors(x)), Fraction(0))
