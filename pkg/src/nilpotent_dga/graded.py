"""Finitely supported graded spaces and degree-homogeneous linear maps.

A :class:`GradedMap` of degree k stores one dense matrix per source degree
i, representing A^i -> B^{i+k}.  Vectors are plain dicts from basis label
to coefficient; absent labels are zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import linalg


class StructuralError(ValueError):
    """Raised when objects do not fit together (spaces, degrees, axioms)."""


class GradedSpace:
    """Basis labels per integer degree; labels are unique across degrees."""

    __slots__ = ("_components", "_index")

    def __init__(self, components: Mapping[int, Iterable[str]]):
        comps = {}
        index = {}
        for deg in sorted(components):
            labels = tuple(components[deg])
            if not labels:
                continue
            for pos, lab in enumerate(labels):
                if not isinstance(lab, str):
                    raise StructuralError(f"basis label must be a string: {lab!r}")
                if lab in index:
                    raise StructuralError(f"duplicate basis label {lab!r}")
                index[lab] = (int(deg), pos)
            comps[int(deg)] = labels
        self._components = comps
        self._index = index

    @property
    def components(self) -> dict[int, tuple[str, ...]]:
        return dict(self._components)

    def degrees(self) -> list[int]:
        return list(self._components)

    def basis(self, degree: int) -> tuple[str, ...]:
        return self._components.get(degree, ())

    def dim(self, degree: int | None = None) -> int:
        if degree is None:
            return len(self._index)
        return len(self._components.get(degree, ()))

    def labels(self) -> list[str]:
        return [lab for deg in self._components for lab in self._components[deg]]

    def __contains__(self, label) -> bool:
        return label in self._index

    def degree_of(self, label: str) -> int:
        try:
            return self._index[label][0]
        except KeyError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def position(self, label: str) -> tuple[int, int]:
        return self._index[label]

    def element_degree(self, vec: Mapping[str, object]) -> int | None:
        """Degree of a homogeneous vector (None for zero); raises otherwise."""
        degs = {self.degree_of(k) for k, c in vec.items() if c != 0}
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element with degrees {sorted(degs)}")
        return degs.pop() if degs else None

    def __eq__(self, other):
        return isinstance(other, GradedSpace) and self._components == other._components

    def __hash__(self):
        return hash(tuple(self._components.items()))

    def __repr__(self):
        inner = ", ".join(f"{d}: {list(ls)}" for d, ls in self._components.items())
        return f"GradedSpace({{{inner}}})"

    def mismatched_degrees(self, other: "GradedSpace") -> list[int]:
        degs = set(self._components) | set(other._components)
        return sorted(d for d in degs if self.basis(d) != other.basis(d))


def _check_same(target: GradedSpace, source: GradedSpace, what: str) -> None:
    if target != source:
        bad = target.mismatched_degrees(source)
        raise StructuralError(f"{what}: graded spaces disagree in degrees {bad}")


class GradedMap:
    """A linear map of fixed degree between graded spaces.

    ``blocks[i]`` is a matrix with ``target.dim(i + degree)`` rows and
    ``source.dim(i)`` columns.  Missing blocks are zero.
    """

    __slots__ = ("source", "target", "degree", "_blocks")

    def __init__(self, source: GradedSpace, target: GradedSpace, degree: int,
                 blocks: Mapping[int, list] | None = None):
        self.source = source
        self.target = target
        self.degree = int(degree)
        clean = {}
        for i, block in (blocks or {}).items():
            rows, cols = target.dim(i + degree), source.dim(i)
            if rows == 0 or cols == 0:
                if any(x != 0 for row in block for x in row):
                    raise StructuralError(f"nonzero block at degree {i} with no room")
                continue
            if len(block) != rows or any(len(r) != cols for r in block):
                raise StructuralError(
                    f"block at degree {i} should be {rows}x{cols}")
            if linalg.is_zero(block):
                continue
            clean[int(i)] = tuple(tuple(r) for r in block)
        self._blocks = clean

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, source, target=None, degree=0) -> "GradedMap":
        return cls(source, source if target is None else target, degree)

    @classmethod
    def identity(cls, space: GradedSpace) -> "GradedMap":
        return cls(space, space, 0, {d: linalg.identity(space.dim(d)) for d in space.degrees()})

    @classmethod
    def from_images(cls, source: GradedSpace, target: GradedSpace, degree: int,
                    images: Mapping[str, Mapping[str, object]]) -> "GradedMap":
        """Build from ``{source label: {target label: coefficient}}``."""
        blocks: dict[int, list] = {}
        for src, img in images.items():
            i, col = source.position(src) if src in source else (None, None)
            if i is None:
                raise KeyError(f"unknown basis label {src!r}")
            for tgt, c in img.items():
                if c == 0:
                    continue
                if tgt not in target:
                    raise KeyError(f"unknown basis label {tgt!r}")
                j, row = target.position(tgt)
                if j != i + degree:
                    raise StructuralError(
                        f"{src} (degree {i}) -> {tgt} (degree {j}) "
                        f"breaks degree {degree}")
                if i not in blocks:
                    blocks[i] = linalg.zeros(target.dim(i + degree), source.dim(i))
                blocks[i][row][col] = blocks[i][row][col] + c
        return cls(source, target, degree, blocks)

    # access --------------------------------------------------------------

    def block(self, i: int) -> list[list]:
        b = self._blocks.get(i)
        if b is None:
            return linalg.zeros(self.target.dim(i + self.degree), self.source.dim(i))
        return [list(r) for r in b]

    def support(self) -> list[int]:
        return sorted(self._blocks)

    def is_zero(self) -> bool:
        return not self._blocks

    def is_endomorphism(self) -> bool:
        return self.source == self.target

    def image_of(self, label: str) -> dict[str, object]:
        i, col = self.source.position(label)
        b = self._blocks.get(i)
        if b is None:
            return {}
        tgt = self.target.basis(i + self.degree)
        return {tgt[r]: b[r][col] for r in range(len(b)) if b[r][col] != 0}

    def entry(self, tgt: str, src: str):
        return self.image_of(src).get(tgt, Fraction(0))

    def __call__(self, vec: Mapping[str, object]) -> dict[str, object]:
        out: dict[str, object] = {}
        for lab, c in vec.items():
            if c == 0:
                continue
            for t, x in self.image_of(lab).items():
                y = out.get(t, 0) + c * x
                if y != 0:
                    out[t] = y
                else:
                    out.pop(t, None)
        return out

    def images(self) -> dict[str, dict[str, object]]:
        return {lab: img for lab in self.source.labels() if (img := self.image_of(lab))}

    def map_entries(self, fn) -> "GradedMap":
        return GradedMap(self.source, self.target, self.degree,
                         {i: [[fn(x) for x in row] for row in b]
                          for i, b in self._blocks.items()})

    # algebra -------------------------------------------------------------

    def _check_parallel(self, other: "GradedMap") -> None:
        if self.degree != other.degree:
            raise StructuralError(f"degrees differ: {self.degree} vs {other.degree}")
        _check_same(self.source, other.source, "sources")
        _check_same(self.target, other.target, "targets")

    def __add__(self, other: "GradedMap") -> "GradedMap":
        self._check_parallel(other)
        blocks = {}
        for i in set(self._blocks) | set(other._blocks):
            blocks[i] = linalg.mat_add(self.block(i), other.block(i))
        return GradedMap(self.source, self.target, self.degree, blocks)

    def __neg__(self) -> "GradedMap":
        return self.scale(-1)

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self + (-other)

    def scale(self, c) -> "GradedMap":
        return GradedMap(self.source, self.target, self.degree,
                         {i: linalg.mat_scale(b, c) for i, b in self._blocks.items()})

    def __rmul__(self, c) -> "GradedMap":
        return self.scale(c)

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        return compose(self, other)

    def __eq__(self, other):
        if not isinstance(other, GradedMap):
            return NotImplemented
        if (self.degree, self.source, self.target) != (other.degree, other.source, other.target):
            return False
        for i in set(self._blocks) | set(other._blocks):
            a, b = self._blocks.get(i), other._blocks.get(i)
            if a is None or b is None or any(x != y for ra, rb in zip(a, b) for x, y in zip(ra, rb)):
                return False
        return True

    __hash__ = None

    def __repr__(self):
        return f"GradedMap(degree={self.degree}, images={self.images()})"


def compose(f: GradedMap, g: GradedMap) -> GradedMap:
    """f after g."""
    _check_same(f.source, g.target, "compose")
    blocks = {}
    for i in g.support():
        j = i + g.degree
        if j not in f._blocks:
            continue
        blocks[i] = linalg.mat_mul(f._blocks[j], g._blocks[i])
    return GradedMap(g.source, f.target, f.degree + g.degree, blocks)


def power(f: GradedMap, n: int) -> GradedMap:
    if not f.is_endomorphism():
        bad = f.source.mismatched_degrees(f.target)
        raise StructuralError(f"power of a non-endomorphism (degrees {bad} differ)")
    if n < 0:
        raise ValueError("negative power")
    result = GradedMap.identity(f.source)
    for _ in range(n):
        result = compose(f, result)
    return result


@dataclass(frozen=True)
class KernelImage:
    rank: int
    kernel: list  # vectors in source^degree, as dicts
    image: list  # vectors in target^(degree + f.degree), as dicts


def _as_dict(labels, vec) -> dict:
    return {lab: c for lab, c in zip(labels, vec) if c != 0}


def rank_kernel_image(f: GradedMap, degree: int) -> KernelImage:
    """Rank and explicit kernel/image bases of the block of f at ``degree``."""
    src = f.source.basis(degree)
    tgt = f.target.basis(degree + f.degree)
    block = f.block(degree)
    if not src:
        return KernelImage(0, [], [])
    if not tgt:
        kernel = linalg.nullspace([], cols=len(src))
        return KernelImage(0, [_as_dict(src, v) for v in kernel], [])
    kernel = linalg.nullspace(block)
    image = linalg.column_space(block)
    return KernelImage(len(image), [_as_dict(src, v) for v in kernel],
                       [_as_dict(tgt, v) for v in image])


def _vectors_to_matrix(vectors, labels):
    return [[Fraction(v.get(lab, 0)) for lab in labels] for v in vectors]


def quotient_dimension(sub: list, amb: list) -> int:
    """dim span(amb) - dim span(sub), after checking sub lies in span(amb)."""
    labels = sorted({k for v in list(sub) + list(amb) for k in v})
    r_amb = linalg.span_rank(_vectors_to_matrix(amb, labels), len(labels))
    r_sub = linalg.span_rank(_vectors_to_matrix(sub, labels), len(labels))
    r_all = linalg.span_rank(_vectors_to_matrix(list(amb) + list(sub), labels), len(labels))
    if r_all != r_amb:
        raise StructuralError("image not contained in kernel")
    return r_amb - r_sub


def complement_basis(sub: list, amb: list) -> list:
    """Vectors of ``amb`` whose classes form a basis of span(amb)/span(sub)."""
    labels = sorted({k for v in list(sub) + list(amb) for k in v})
    chosen = list(sub)
    base = linalg.span_rank(_vectors_to_matrix(chosen, labels), len(labels))
    reps = []
    for v in amb:
        r = linalg.span_rank(_vectors_to_matrix(chosen + [v], labels), len(labels))
        if r > base:
            chosen.append(v)
            reps.append(v)
            base = r
    return reps


def map_coordinates(source: GradedSpace, target: GradedSpace, degree: int) -> list[tuple[str, str]]:
    """All (source label, target label) positions of a degree-``degree`` map,
    sorted lexicographically by label."""
    coords = []
    for i in source.degrees():
        for s in source.basis(i):
            for t in target.basis(i + degree):
                coords.append((s, t))
    return sorted(coords)


def elementary_map(source: GradedSpace, target: GradedSpace, degree: int,
                   src: str, tgt: str) -> GradedMap:
    return GradedMap.from_images(source, target, degree, {src: {tgt: Fraction(1)}})


def flatten(f: GradedMap, coords: list[tuple[str, str]]) -> list:
    return [f.entry(t, s) for s, t in coords]
