"""N-differential graded algebras and K-differential graded modules.

Products are given by structure constants on basis labels.  Elements are
dicts from label to coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping

from .complexes import (NComplex, nilpotency_order, nilpotency_violations,
                        tensor_differential, tensor_label, tensor_space)
from .graded import GradedMap, GradedSpace, StructuralError, compose, power

Element = dict


def add_into(acc: dict, vec: Mapping, c=1) -> dict:
    for k, x in vec.items():
        y = acc.get(k, 0) + c * x
        if y != 0:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def combine(*pairs) -> dict:
    """Linear combination of (coefficient, vector) pairs."""
    out: dict = {}
    for c, v in pairs:
        add_into(out, v, c)
    return out


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


class NDga:
    """A graded associative algebra with a degree-1 derivation d, d^N = 0."""

    def __init__(self, complex: NComplex, product: Mapping[tuple[str, str], Mapping[str, object]],
                 unit: str | None = None):
        self.complex = complex
        space = complex.space
        prod = {}
        for (x, y), img in product.items():
            for lab in (x, y, *img):
                if lab not in space:
                    raise KeyError(f"unknown basis label {lab!r}")
            img = {k: Fraction(c) if not hasattr(c, "coeffs") else c
                   for k, c in img.items() if c != 0}
            if img:
                prod[(x, y)] = img
        self.product = prod
        if unit is not None and unit not in space:
            raise KeyError(f"unknown unit label {unit!r}")
        self.unit = unit

    @property
    def space(self) -> GradedSpace:
        return self.complex.space

    @property
    def d(self) -> GradedMap:
        return self.complex.d

    @property
    def N(self) -> int:
        return self.complex.N

    def degree(self, vec: Mapping) -> int | None:
        return self.space.element_degree(vec)

    def mul(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for a, ca in x.items():
            if ca == 0:
                continue
            for b, cb in y.items():
                if cb == 0:
                    continue
                img = self.product.get((a, b))
                if img:
                    add_into(out, img, ca * cb)
        return out

    def basis_product(self, a: str, b: str) -> dict:
        return dict(self.product.get((a, b), {}))

    def diff(self, x: Mapping, n: int = 1) -> dict:
        v = dict(x)
        for _ in range(n):
            v = self.d(v)
        return v

    def left_multiplication(self, a: Mapping, degree: int | None = None) -> GradedMap:
        """The map phi -> a phi, of degree deg a (``degree`` is needed for a = 0)."""
        deg = self.degree(a)
        if deg is None:
            deg = degree or 0
        elif degree is not None and degree != deg:
            raise ValueError(f"element has degree {deg}, not {degree}")
        images = {lab: self.mul(a, {lab: 1}) for lab in self.space.labels()}
        return GradedMap.from_images(self.space, self.space, deg, images)


def verify_ndga(A: NDga) -> list[str]:
    """Every violated axiom, naming the offending basis tuple; empty iff valid."""
    sp = A.space
    labels = sp.labels()
    report = []
    for (x, y), img in sorted(A.product.items()):
        want = sp.degree_of(x) + sp.degree_of(y)
        for z in img:
            if sp.degree_of(z) != want:
                report.append(f"degree: {x}*{y} has component {z} of degree "
                              f"{sp.degree_of(z)}, expected {want}")
    for x in labels:
        for y in labels:
            xy = A.product.get((x, y))
            for z in labels:
                left = A.mul(xy, {z: 1}) if xy else {}
                yz = A.product.get((y, z))
                right = A.mul({x: 1}, yz) if yz else {}
                if left != right:
                    report.append(f"associativity fails on ({x}, {y}, {z})")
    dimg = {x: A.d.image_of(x) for x in labels}
    for x in labels:
        s = _sign(sp.degree_of(x))
        for y in labels:
            lhs = A.d(A.product.get((x, y), {}))
            rhs = combine((1, A.mul(dimg[x], {y: 1})), (s, A.mul({x: 1}, dimg[y])))
            if lhs != rhs:
                report.append(f"Leibniz fails on ({x}, {y})")
    if A.unit is not None:
        u = A.unit
        for x in labels:
            if A.basis_product(u, x) != {x: 1} or A.basis_product(x, u) != {x: 1}:
                report.append(f"unit {u} fails on {x}")
    report.extend(nilpotency_violations(A.d, A.N))
    return report


@lru_cache(maxsize=None)
def graded_binomial(n: int, j: int, parity: int) -> Fraction:
    """Coefficient of d^j(a) d^{n-j}(b) in d^n(ab) when deg a = parity mod 2.

    Satisfies {n+1, j} = {n, j-1} + (-1)^{parity + j} {n, j} with {0, 0} = 1,
    which gives {n, 0} = (-1)^{n parity} and {n, n} = 1.
    """
    parity %= 2
    if j < 0 or j > n:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    return graded_binomial(n - 1, j - 1, parity) + _sign(parity + j) * graded_binomial(n - 1, j, parity)


def leibniz_power_check(A: NDga, a: Mapping, b: Mapping, n: int) -> bool:
    """d^n(ab) == sum_i {n,i} d^i(a) d^{n-i}(b) for homogeneous a, b."""
    da = A.degree(a)
    A.degree(b)
    if da is None:
        return not A.diff(A.mul(a, b), n)
    lhs = A.diff(A.mul(a, b), n)
    rhs: dict = {}
    for i in range(n + 1):
        add_into(rhs, A.mul(A.diff(a, i), A.diff(b, n - i)), graded_binomial(n, i, da))
    return lhs == rhs


def closedness_order(A, a: Mapping) -> int:
    """Minimal p >= 1 with d^p(a) = 0."""
    complex_ = A.complex if isinstance(A, NDga) else A
    v = complex_.d(dict(a))
    p = 1
    while v:
        v = complex_.d(v)
        p += 1
        if p > complex_.N:
            raise StructuralError("element is not annihilated by d^N")
    return p


def tensor_dga(A: NDga, B: NDga) -> NDga:
    """(a⊗b)(a'⊗b') = (-1)^{deg b deg a'} (aa')⊗(bb'); d as for complexes."""
    space = tensor_space(A.space, B.space)
    d = tensor_differential(A.complex, B.complex, space)
    product = {}
    for (a1, a2), pa in A.product.items():
        for (b1, b2), pb in B.product.items():
            s = _sign(B.space.degree_of(b1) * A.space.degree_of(a2))
            img = {}
            for x, cx in pa.items():
                for y, cy in pb.items():
                    img[tensor_label(x, y)] = s * cx * cy
            product[(tensor_label(a1, b1), tensor_label(a2, b2))] = img
    unit = tensor_label(A.unit, B.unit) if A.unit is not None and B.unit is not None else None
    return NDga(NComplex(space, d, A.N + B.N - 1), product, unit)


# End(M) ------------------------------------------------------------------

def end_label(target: str, source: str) -> str:
    """Basis map sending ``source`` to ``target`` and every other basis vector to 0."""
    return f"{target}<-{source}"


def end_space(M: GradedSpace) -> GradedSpace:
    comps: dict[int, list[str]] = {}
    for s in M.labels():
        for t in M.labels():
            comps.setdefault(M.degree_of(t) - M.degree_of(s), []).append(end_label(t, s))
    return GradedSpace(comps)


def map_to_end_element(f: GradedMap) -> dict:
    out = {}
    for s, img in f.images().items():
        for t, c in img.items():
            out[end_label(t, s)] = c
    return out


def end_element_to_map(M: GradedSpace, f: Mapping, degree: int) -> GradedMap:
    lookup = {end_label(t, s): (s, t) for s in M.labels() for t in M.labels()}
    images: dict = {}
    for lab, c in f.items():
        s, t = lookup[lab]
        images.setdefault(s, {})[t] = c
    return GradedMap.from_images(M, M, degree, images)


def d_end(d: GradedMap, f: GradedMap) -> GradedMap:
    """d o f - (-1)^{deg f} f o d."""
    return compose(d, f) - compose(f, d).scale(_sign(f.degree))


def d_end_power_formula(d: GradedMap, f: GradedMap, n: int) -> GradedMap:
    """Closed form of d_End^n(f) as a sum of d^k o f o d^{n-k}.

    Left composition by d and the signed right composition anticommute, so
    the coefficients are Gaussian binomials at q = -1:
    d_End^n(f) = sum_k [n k]_{-1} (-1)^{(n-k) deg f + (n-k)(n-k+1)/2} d^k f d^{n-k}.
    """
    total = None
    for k in range(n + 1):
        c = gaussian_binomial_minus_one(n, k)
        if c == 0:
            continue
        m = n - k
        c *= _sign(m * f.degree + m * (m + 1) // 2)
        term = compose(compose(power(d, k), f), power(d, m)).scale(c)
        total = term if total is None else total + term
    return total


def gaussian_binomial_minus_one(n: int, k: int) -> int:
    """[n choose k] at q = -1."""
    if k < 0 or k > n:
        return 0
    if n % 2 == 0 and k % 2 == 1:
        return 0
    return comb(n // 2, k // 2)


def end_algebra(M: NComplex, N: int | None = None) -> NDga:
    """End(M) with composition and d_End; a (2N-1)-dga by default."""
    sp = end_space(M.space)
    labels = M.space.labels()
    images = {}
    for s in labels:
        for t in labels:
            f = GradedMap.from_images(M.space, M.space,
                                      M.space.degree_of(t) - M.space.degree_of(s), {s: {t: 1}})
            images[end_label(t, s)] = map_to_end_element(d_end(M.d, f))
    d = GradedMap.from_images(sp, sp, 1, images)
    product = {}
    for t in labels:
        for s in labels:
            for r in labels:
                # (t<-s) o (s<-r) = t<-r
                product[(end_label(t, s), end_label(s, r))] = {end_label(t, r): Fraction(1)}
    bound = 2 * M.N - 1 if N is None else N
    return NDga(NComplex(sp, d, bound), product)


# K-dgms ------------------------------------------------------------------

class Kdgm:
    """A module over an NDga whose own differential satisfies d_M^K = 0."""

    def __init__(self, algebra: NDga, module_complex: NComplex,
                 action: Mapping[tuple[str, str], Mapping[str, object]]):
        self.algebra = algebra
        self.module_complex = module_complex
        act = {}
        for (a, m), img in action.items():
            if a not in algebra.space:
                raise KeyError(f"unknown algebra label {a!r}")
            for lab in (m, *img):
                if lab not in module_complex.space:
                    raise KeyError(f"unknown module label {lab!r}")
            img = {k: c for k, c in img.items() if c != 0}
            if img:
                act[(a, m)] = img
        self.action = act

    @property
    def K(self) -> int:
        return self.module_complex.N

    def act(self, a: Mapping, m: Mapping) -> dict:
        out: dict = {}
        for x, cx in a.items():
            for y, cy in m.items():
                img = self.action.get((x, y))
                if img and cx != 0 and cy != 0:
                    add_into(out, img, cx * cy)
        return out

    def action_operator(self, a: Mapping) -> GradedMap:
        sp = self.module_complex.space
        deg = self.algebra.degree(a) or 0
        return GradedMap.from_images(sp, sp, deg, {m: self.act(a, {m: 1}) for m in sp.labels()})


def verify_kdgm(M: Kdgm) -> list[str]:
    A = M.algebra
    asp, msp = A.space, M.module_complex.space
    report = []
    for (a, m), img in sorted(M.action.items()):
        want = asp.degree_of(a) + msp.degree_of(m)
        for z in img:
            if msp.degree_of(z) != want:
                report.append(f"degree: {a}.{m} has component {z} of degree "
                              f"{msp.degree_of(z)}, expected {want}")
    alabels, mlabels = asp.labels(), msp.labels()
    for a in alabels:
        for b in alabels:
            ab = A.product.get((a, b), {})
            for m in mlabels:
                left = M.act({a: 1}, M.act({b: 1}, {m: 1}))
                right = M.act(ab, {m: 1})
                if left != right:
                    report.append(f"action associativity fails on ({a}, {b}, {m})")
    dM = M.module_complex.d
    for a in alabels:
        s = _sign(asp.degree_of(a))
        da = A.d.image_of(a)
        for m in mlabels:
            lhs = dM(M.act({a: 1}, {m: 1}))
            rhs = combine((1, M.act(da, {m: 1})), (s, M.act({a: 1}, dM.image_of(m))))
            if lhs != rhs:
                report.append(f"module Leibniz fails on ({a}, {m})")
    if A.unit is not None:
        for m in mlabels:
            if M.act({A.unit: 1}, {m: 1}) != {m: 1}:
                report.append(f"unit does not act trivially on {m}")
    report.extend(nilpotency_violations(dM, M.K))
    return report


def regular_module(A: NDga) -> Kdgm:
    """A over itself by left multiplication."""
    return Kdgm(A, A.complex, A.product)


def evaluation_module(M: NComplex, E: NDga | None = None) -> Kdgm:
    """M as a module over End(M): (t<-s) acts by sending s to t."""
    E = E or end_algebra(M)
    labels = M.space.labels()
    action = {(end_label(t, s), s): {t: Fraction(1)} for s in labels for t in labels}
    return Kdgm(E, M, action)


def ndga_order(A: NDga) -> int | None:
    return nilpotency_order(A.d, A.N)
