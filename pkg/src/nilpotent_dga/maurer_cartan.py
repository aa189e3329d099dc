"""Expansion of (d + e)^N, the (M,N)-Maurer-Cartan residual and deformations
of differentials over truncated polynomial rings Q[t]/(t^m)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .algebras import Kdgm, NDga, _sign, d_end
from .complexes import NComplex, nilpotency_order
from .graded import GradedMap, StructuralError, compose, power
from .multiindex import (MultiIndex, bump, delta, enumerate_EN, eta, s_gt,
                         s_lt, size, weight)
from .scalars import TruncatedRing, Trunc, constant_part, in_maximal_ideal


class PreconditionError(ValueError):
    pass


@lru_cache(maxsize=None)
def _c(s: MultiIndex, N: int) -> Fraction:
    if N <= 0:
        return Fraction(int(N == 0 and s == ()))
    if N == 1:
        return Fraction(int(s in ((), (0,))))
    if weight(s) > N:
        return Fraction(0)
    n = N - 1
    total = Fraction(0)
    if s and delta(s, 1):
        total += _c(s_gt(s, 1), n)
    total += _sign(weight(s)) * _c(s, n)
    for i in range(1, len(s) + 1):
        if eta(s, i):
            total += _sign(size(s_lt(s, i)) + i - 1) * _c(bump(s, i, -1), n)
    return total


def c_coeff(s, N: int) -> Fraction:
    """c(s, N), the coefficient of e^{(s)} d^{N(s)} in (d + e)^N.

    Zero outside E_N.  Memoized on (s, N); the cache is shared by all callers
    and its values never change once inserted.
    """
    return _c(tuple(int(x) for x in s), int(N))


def differential_of(A) -> GradedMap:
    if isinstance(A, GradedMap):
        return A
    if isinstance(A, Kdgm):
        return A.module_complex.d
    if isinstance(A, (NDga, NComplex)):
        return A.d
    raise TypeError(f"no differential on {type(A).__name__}")


class _Derivatives:
    """Cached e^{(l)} = d_End^l(e) and d^k."""

    def __init__(self, d: GradedMap, e: GradedMap):
        self.d, self.e = d, e
        self._e = [e]
        self._d = [GradedMap.identity(d.source)]

    def e_l(self, l: int) -> GradedMap:
        while len(self._e) <= l:
            self._e.append(d_end(self.d, self._e[-1]))
        return self._e[l]

    def d_k(self, k: int) -> GradedMap:
        while len(self._d) <= k:
            self._d.append(compose(self.d, self._d[-1]))
        return self._d[k]

    def e_s(self, s: MultiIndex) -> GradedMap:
        out = GradedMap.identity(self.d.source)
        for l in reversed(s):
            out = compose(self.e_l(l), out)
        return out


def apply_e_power(e: GradedMap, s, d: GradedMap) -> GradedMap:
    """e^{(s)} = e^{(s_1)} o ... o e^{(s_n)} with e^{(l)} = d_End^l(e)."""
    return _Derivatives(d, e).e_s(tuple(s))


@dataclass
class MCExpansion:
    N: int
    terms: list  # (s, c(s, N)) with c != 0
    operator: GradedMap
    contributions: dict = field(default_factory=dict, repr=False)
    factors: dict = field(default_factory=dict, repr=False)

    def active_terms(self) -> list:
        """Terms whose factor e^{(s)} is nonzero; for e = 0 only (∅, 1) is left."""
        return [(s, c) for s, c in self.terms if not self.factors[s].is_zero()]


def dN_expansion(A, e: GradedMap, N: int, M_filter: int | None = None) -> MCExpansion:
    """sum over s in E_N of c(s,N) e^{(s)} d^{N - |s| - l(s)}, optionally
    restricted to s with every s_i < M_filter."""
    d = differential_of(A)
    if e.degree != 1:
        raise ValueError(f"perturbation has degree {e.degree}, expected 1")
    cache = _Derivatives(d, e)
    terms, contributions, factors = [], {}, {}
    total = GradedMap.zero(d.source, d.target, N)
    for s in enumerate_EN(N):
        if M_filter is not None and any(x >= M_filter for x in s):
            continue
        c = c_coeff(s, N)
        if c == 0:
            continue
        factors[s] = cache.e_s(s)
        op = compose(factors[s], cache.d_k(N - weight(s)))
        terms.append((s, c))
        contributions[s] = op
        total = total + op.scale(c)
    return MCExpansion(N, terms, total, contributions, factors)


def mc_residual(A, e: GradedMap, M: int, N: int) -> GradedMap:
    """Left side of the (M,N)-Maurer-Cartan equation."""
    d = differential_of(A)
    if not power(d, M).is_zero():
        raise PreconditionError(f"d^{M} != 0, so the base is not a {M}-complex")
    if N < M:
        raise PreconditionError(f"need N >= M, got N={N}, M={M}")
    return dN_expansion(d, e, N, M_filter=M).operator


def mc2_operator(A, e: GradedMap) -> GradedMap:
    """d_End(e) + e^2."""
    d = differential_of(A)
    return d_end(d, e) + compose(e, e)


def mc_closed_form_2N(A, e: GradedMap, N: int) -> GradedMap:
    """(d_End(e)+e^2)^{(N-1)/2} (d+e) for odd N, (d_End(e)+e^2)^{N/2} for even N."""
    d = differential_of(A)
    if not power(d, 2).is_zero():
        raise PreconditionError("closed form needs d^2 = 0")
    x = mc2_operator(d, e)
    if N % 2 == 0:
        return power(x, N // 2)
    return compose(power(x, (N - 1) // 2), d + e)


def inner_derivation(A: NDga, a: Mapping) -> GradedMap:
    """e_a(b) = ab - (-1)^{deg b} ba for a of degree 1."""
    deg = A.degree(a)
    if deg is None:
        return GradedMap.zero(A.space, A.space, 1)
    if deg != 1:
        raise ValueError(f"inner derivation needs an element of degree 1, got {deg}")
    images = {}
    for lab in A.space.labels():
        s = _sign(A.space.degree_of(lab))
        ab = A.mul(a, {lab: 1})
        ba = A.mul({lab: 1}, a)
        img = dict(ab)
        for k, c in ba.items():
            y = img.get(k, 0) - s * c
            if y != 0:
                img[k] = y
            else:
                img.pop(k, None)
        images[lab] = img
    return GradedMap.from_images(A.space, A.space, 1, images)


def is_derivation(A: NDga, e: GradedMap) -> bool:
    """e(xy) = e(x)y + (-1)^{deg e deg x} x e(y) on all basis pairs."""
    labels = A.space.labels()
    for x in labels:
        s = _sign(e.degree * A.space.degree_of(x))
        ex = e.image_of(x)
        for y in labels:
            lhs = e(A.basis_product(x, y))
            rhs = A.mul(ex, {y: 1})
            for k, c in A.mul({x: 1}, e.image_of(y)).items():
                v = rhs.get(k, 0) + s * c
                if v != 0:
                    rhs[k] = v
                else:
                    rhs.pop(k, None)
            if lhs != rhs:
                return False
    return True


def reduce_mod_ideal(f: GradedMap) -> GradedMap:
    return f.map_entries(constant_part)


def lift_to_ring(f: GradedMap, ring: TruncatedRing) -> GradedMap:
    return f.map_entries(lambda x: x if isinstance(x, Trunc) else ring.constant(x))


@dataclass
class Deformation:
    base: object
    perturbation: GradedMap
    ring: TruncatedRing
    differential: GradedMap
    order: int | None  # realized nilpotency order of d + e

    def reduction(self) -> GradedMap:
        return reduce_mod_ideal(self.differential)


def _default_bound(d: GradedMap) -> int:
    degs = d.source.degrees()
    return (max(degs) - min(degs) + 2) if degs else 1


def deform(A, e: GradedMap, ring: TruncatedRing, bound: int | None = None) -> Deformation:
    """d + e over Q[t]/(t^m), with e required to vanish modulo t."""
    d = differential_of(A)
    if e.degree != 1 or e.source != d.source or e.target != d.target:
        raise StructuralError("perturbation must be a degree-1 endomorphism of the base")
    for lab, img in e.images().items():
        for tgt, c in img.items():
            if isinstance(c, Trunc) and c.m != ring.m:
                raise StructuralError(f"entry {tgt}<-{lab} lives in Q[t]/(t^{c.m}), not Q[t]/(t^{ring.m})")
            if not in_maximal_ideal(c):
                raise StructuralError(f"entry {tgt}<-{lab} = {c} is not in the maximal ideal")
    D = lift_to_ring(d, ring) + lift_to_ring(e, ring)
    if reduce_mod_ideal(D) != d:
        raise StructuralError("deformed differential does not reduce to the base differential")
    order = nilpotency_order(D, bound if bound is not None else _default_bound(d))
    return Deformation(A, e, ring, D, order)


# ordered pairings ----------------------------------------------------------

def ordered_pairings(n2: int):
    """Pairings {(a_i, b_i)} of 1..n2 with a_i < b_i, listed with a_1 < a_2 < ..."""
    if n2 % 2:
        raise ValueError("pairings need an even number of points")

    def rec(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for j in range(1, len(rest)):
            b = rest[j]
            for tail in rec(rest[1:j] + rest[j + 1:]):
                yield [(a, b)] + tail

    yield from rec(list(range(1, n2 + 1)))


def permutation_sign(seq) -> int:
    seq = list(seq)
    sign = 1
    seen = [False] * len(seq)
    pos = {v: i for i, v in enumerate(sorted(seq))}
    for i in range(len(seq)):
        if seen[i]:
            continue
        j, cycle = i, 0
        while not seen[j]:
            seen[j] = True
            j = pos[seq[j]]
            cycle += 1
        if cycle % 2 == 0:
            sign = -sign
    return sign


def pairing_sum(F) -> Fraction:
    """Signed sum over pairings of prod F[a_i][b_i] (1-based pairs, 0-based F)."""
    n2 = len(F)
    if n2 % 2 or any(len(row) != n2 for row in F):
        raise ValueError("pairing sum needs a square matrix of even size")
    for i in range(n2):
        for j in range(n2):
            if F[i][j] != -F[j][i]:
                raise ValueError(f"matrix is not antisymmetric at ({i + 1}, {j + 1})")
    total = Fraction(0)
    for alpha in ordered_pairings(n2):
        prod = Fraction(permutation_sign([x for pair in alpha for x in pair]))
        for a, b in alpha:
            prod *= F[a - 1][b - 1]
            if prod == 0:
                break
        total += prod
    return total
