"""N-complexes: d of degree 1 with d^N = 0, their generalized cohomology,
morphisms, homotopies and tensor products."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .graded import (GradedMap, GradedSpace, StructuralError, complement_basis,
                     compose, elementary_map, flatten, map_coordinates, power,
                     quotient_dimension, rank_kernel_image)


class NilpotencyError(StructuralError):
    """d^N is not zero."""


def nilpotency_order(d: GradedMap, bound: int) -> int | None:
    """Smallest N in 1..bound with d^N = 0, or None if it exceeds ``bound``."""
    if not d.is_endomorphism():
        raise StructuralError("nilpotency order needs an endomorphism")
    p = d
    for n in range(1, bound + 1):
        if p.is_zero():
            return n
        p = compose(d, p)
    return None


def nilpotency_violations(d: GradedMap, N: int) -> list[str]:
    """Basis labels on which d^N does not vanish, formatted for reports."""
    dn = power(d, N)
    return [f"d^{N}({lab}) != 0" for lab in d.source.labels() if dn.image_of(lab)]


@dataclass(frozen=True, eq=False)
class NComplex:
    space: GradedSpace
    d: GradedMap
    N: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be at least 1")
        if self.d.degree != 1:
            raise StructuralError(f"differential has degree {self.d.degree}, expected 1")
        if self.d.source != self.space or self.d.target != self.space:
            raise StructuralError("differential is not an endomorphism of the space")
        bad = nilpotency_violations(self.d, self.N)
        if bad:
            raise NilpotencyError("; ".join(bad))

    @property
    def order(self) -> int:
        """Actual nilpotency order (at most N)."""
        return nilpotency_order(self.d, self.N)

    def is_proper(self) -> bool:
        return self.order == self.N

    def dpow(self, n: int) -> GradedMap:
        return power(self.d, n)


def cohomology(C: NComplex, p: int, i: int) -> tuple[int, list[dict]]:
    """_pH^i = ker(d^p on A^i) / im(d^{N-p} into A^i), with representatives."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if p >= C.N:
        return 0, []
    ker = rank_kernel_image(C.dpow(p), i).kernel
    img = rank_kernel_image(C.dpow(C.N - p), i - C.N + p).image
    dim = quotient_dimension(img, ker)
    reps = complement_basis(img, ker)
    assert len(reps) == dim
    return dim, reps


def cohomology_table(C: NComplex) -> list[tuple[int, int, int]]:
    rows = []
    for p in range(1, C.N):
        for i in C.space.degrees():
            rows.append((p, i, cohomology(C, p, i)[0]))
    return rows


def check_morphism(f: GradedMap, A: NComplex, B: NComplex) -> bool:
    if f.source != A.space or f.target != B.space:
        raise StructuralError("morphism spaces do not match the complexes")
    return compose(B.d, f) == compose(f, A.d)


def _solve_for_map(source, target, degree, operator, rhs: GradedMap):
    """Solve operator(h) = rhs for h of the given degree; None if inconsistent.

    Unknowns are ordered lexicographically by (source label, target label);
    free unknowns are set to zero.
    """
    unknowns = map_coordinates(source, target, degree)
    columns = [operator(elementary_map(source, target, degree, s, t)) for s, t in unknowns]
    out_coords = map_coordinates(rhs.source, rhs.target, rhs.degree)
    b = flatten(rhs, out_coords)
    if not unknowns:
        return GradedMap.zero(source, target, degree) if all(x == 0 for x in b) else None
    if not out_coords:
        return GradedMap.zero(source, target, degree)
    a = linalg.transpose([flatten(c, out_coords) for c in columns])
    x = linalg.solve(a, b, cols=len(unknowns))
    if x is None:
        return None
    images: dict[str, dict[str, Fraction]] = {}
    for (s, t), c in zip(unknowns, x):
        if c != 0:
            images.setdefault(s, {})[t] = c
    return GradedMap.from_images(source, target, degree, images)


def homotopy_sum(h: GradedMap, A: NComplex, B: NComplex, N: int) -> GradedMap:
    """Sum over i of d_B^{N-1-i} h d_A^i."""
    total = None
    for i in range(N):
        term = compose(compose(power(B.d, N - 1 - i), h), power(A.d, i))
        total = term if total is None else total + term
    return total


def homotopy_witness(f: GradedMap, g: GradedMap, A: NComplex, B: NComplex,
                     N: int | None = None) -> GradedMap | None:
    """An h with f - g = sum_i d_B^{N-1-i} h d_A^i, or None if none exists.

    h has degree deg(f) - (N - 1) so that both sides have equal degree.
    """
    if f.degree != g.degree:
        raise StructuralError("f and g must have the same degree")
    N = max(A.N, B.N) if N is None else N
    hdeg = f.degree - (N - 1)
    return _solve_for_map(A.space, B.space, hdeg,
                          lambda h: homotopy_sum(h, A, B, N), f - g)


def morphism_space(A: NComplex, B: NComplex, degree: int = 0) -> list[GradedMap]:
    """Basis of all maps f of the given degree with d_B f = f d_A."""
    unknowns = map_coordinates(A.space, B.space, degree)
    if not unknowns:
        return []
    out_coords = map_coordinates(A.space, B.space, degree + 1)
    cols = []
    for s, t in unknowns:
        e = elementary_map(A.space, B.space, degree, s, t)
        cols.append(flatten(compose(B.d, e) - compose(e, A.d), out_coords))
    if out_coords:
        kernel = linalg.nullspace(linalg.transpose(cols))
    else:
        kernel = linalg.nullspace([], cols=len(unknowns))
    basis = []
    for v in kernel:
        images: dict[str, dict[str, Fraction]] = {}
        for (s, t), c in zip(unknowns, v):
            if c != 0:
                images.setdefault(s, {})[t] = c
        basis.append(GradedMap.from_images(A.space, B.space, degree, images))
    return basis


def map_rank(f: GradedMap) -> int:
    return sum(rank_kernel_image(f, i).rank for i in f.source.degrees())


def is_injective(f: GradedMap) -> bool:
    return map_rank(f) == f.source.dim()


def is_surjective(f: GradedMap) -> bool:
    return map_rank(f) == f.target.dim()


def induces_same_cohomology_maps(f: GradedMap, g: GradedMap, A: NComplex, B: NComplex) -> bool:
    """Whether f and g agree on every _pH^i(A) -> _pH^{i+deg}(B) (common N)."""
    if A.N != B.N:
        raise StructuralError("induced cohomology maps need a common N")
    N = A.N
    diff = f - g
    for p in range(1, N):
        for i in A.space.degrees():
            _, reps = cohomology(A, p, i)
            j = i + f.degree
            img = rank_kernel_image(B.dpow(N - p), j - N + p).image
            for r in reps:
                v = diff(r)
                if not v:
                    continue
                labels = sorted(set(v) | {k for w in img for k in w})
                mat = [[Fraction(w.get(k, 0)) for k in labels] for w in img]
                vec = [Fraction(v.get(k, 0)) for k in labels]
                if not img or linalg.solve(linalg.transpose(mat), vec) is None:
                    return False
    return True


TENSOR_SEP = "⊗"


def tensor_label(a: str, b: str) -> str:
    return f"{a}{TENSOR_SEP}{b}"


def tensor_space(A: GradedSpace, B: GradedSpace) -> GradedSpace:
    comps: dict[int, list[str]] = {}
    for i in A.degrees():
        for j in B.degrees():
            for a in A.basis(i):
                for b in B.basis(j):
                    comps.setdefault(i + j, []).append(tensor_label(a, b))
    return GradedSpace(comps)


def tensor_differential(A: NComplex, B: NComplex, space: GradedSpace | None = None) -> GradedMap:
    """d(a⊗b) = d_A(a)⊗b + (-1)^{deg a} a⊗d_B(b)."""
    space = space or tensor_space(A.space, B.space)
    images = {}
    for a in A.space.labels():
        sign = -1 if A.space.degree_of(a) % 2 else 1
        da = A.d.image_of(a)
        for b in B.space.labels():
            img: dict[str, Fraction] = {}
            for x, c in da.items():
                img[tensor_label(x, b)] = img.get(tensor_label(x, b), 0) + c
            for y, c in B.d.image_of(b).items():
                img[tensor_label(a, y)] = img.get(tensor_label(a, y), 0) + sign * c
            images[tensor_label(a, b)] = img
    return GradedMap.from_images(space, space, 1, images)


def tensor_complex(A: NComplex, B: NComplex) -> NComplex:
    space = tensor_space(A.space, B.space)
    return NComplex(space, tensor_differential(A, B, space), A.N + B.N - 1)


def complex_from_images(components, images, N: int) -> NComplex:
    space = GradedSpace(components)
    return NComplex(space, GradedMap.from_images(space, space, 1, images), N)
