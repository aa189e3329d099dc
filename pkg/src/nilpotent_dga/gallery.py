"""Built-in fixtures: the 3-complex on e1, e2, e3, the 5-complex on V⊗V*,
polynomial differential-form models and pairing matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .algebras import (Kdgm, NDga, end_algebra, evaluation_module, regular_module, verify_kdgm,
                       verify_ndga)
from .complexes import NComplex, complex_from_images
from .graded import GradedMap, StructuralError


def build_ej1() -> NComplex:
    """e1 -> e2 -> e3 -> 0 in degrees 0, 1, 2; a proper 3-complex."""
    C = complex_from_images({0: ["e1"], 1: ["e2"], 2: ["e3"]},
                            {"e1": {"e2": 1}, "e2": {"e3": 1}}, 3)
    assert C.is_proper()
    return C


def build_chain(n: int, start_degree: int = 0, prefix: str = "v") -> NComplex:
    """v1 -> v2 -> ... -> vn, a proper n-complex."""
    labels = [f"{prefix}{k}" for k in range(1, n + 1)]
    comps = {start_degree + k: [lab] for k, lab in enumerate(labels)}
    images = {labels[k]: {labels[k + 1]: 1} for k in range(n - 1)}
    return complex_from_images(comps, images, max(n, 1))


def build_point() -> NComplex:
    """One basis vector in degree 0 with d = 0; a 1-complex."""
    return complex_from_images({0: ["pt"]}, {}, 1)


def build_point_algebra() -> NDga:
    """The ground field as a 1-dga with unit 'pt'."""
    return NDga(build_point(), {("pt", "pt"): {"pt": 1}}, unit="pt")


def build_ej1_algebra() -> NDga:
    """The 3-complex with the zero product."""
    return NDga(build_ej1(), {})


def vtensor_label(i: int, j: int) -> str:
    return f"E{i}{j}"


def build_vtensor() -> NComplex:
    """V⊗V* on E_ij (deg i - j), D(E_ij) = E_(i+1)j + (-1)^{i+j} E_i(j-1)."""
    comps: dict[int, list[str]] = {}
    images = {}
    for i in range(1, 4):
        for j in range(1, 4):
            comps.setdefault(i - j, []).append(vtensor_label(i, j))
            img = {}
            if i + 1 <= 3:
                img[vtensor_label(i + 1, j)] = 1
            if j - 1 >= 1:
                img[vtensor_label(i, j - 1)] = -1 if (i + j) % 2 else 1
            images[vtensor_label(i, j)] = img
    return complex_from_images(comps, images, 5)


def build_end_ej1() -> NDga:
    """End(V) of the 3-complex, with composition; a 5-dga."""
    return end_algebra(build_ej1())


# polynomial differential forms ------------------------------------------

def form_label(alpha: tuple[int, ...], forms: tuple[int, ...]) -> str:
    """``x1^2*x3*dx1^dx2`` style label; ``1`` for the constant 0-form."""
    parts = []
    for k, a in enumerate(alpha, start=1):
        if a == 1:
            parts.append(f"x{k}")
        elif a > 1:
            parts.append(f"x{k}^{a}")
    if forms:
        parts.append("^".join(f"dx{k}" for k in forms))
    return "*".join(parts) or "1"


def _monomials(n: int, max_deg: int):
    for deg in range(max_deg + 1):
        for combo in combinations_with_replacement(range(n), deg):
            alpha = [0] * n
            for k in combo:
                alpha[k] += 1
            yield tuple(alpha)


def _merge_sign(I, J):
    """Sign of sorting the concatenation I + J (0 if they overlap)."""
    if set(I) & set(J):
        return 0
    inversions = sum(1 for x in I for y in J if x > y)
    return -1 if inversions % 2 else 1


def forms_algebra(n: int, m: int) -> NDga:
    """Polynomial forms in x1..xn modulo total weight > m (x_i and dx_i have
    weight 1).  d preserves weight, so the quotient is a graded-commutative
    2-dga."""
    basis = {}
    comps: dict[int, list[str]] = {}
    for k in range(n + 1):
        for I in combinations(range(1, n + 1), k):
            for alpha in _monomials(n, m - k):
                lab = form_label(alpha, I)
                basis[lab] = (alpha, I)
                comps.setdefault(k, []).append(lab)
    images = {}
    for lab, (alpha, I) in basis.items():
        img = {}
        for i in range(n):
            if alpha[i] == 0 or (i + 1) in I:
                continue
            beta = list(alpha)
            beta[i] -= 1
            J = tuple(sorted(I + (i + 1,)))
            s = _merge_sign((i + 1,), I)
            img[form_label(tuple(beta), J)] = s * alpha[i]
        images[lab] = img
    C = complex_from_images(comps, images, 2)
    product = {}
    for x, (a1, I1) in basis.items():
        for y, (a2, I2) in basis.items():
            if sum(a1) + sum(a2) + len(I1) + len(I2) > m:
                continue
            s = _merge_sign(I1, I2)
            if s == 0:
                continue
            alpha = tuple(p + q for p, q in zip(a1, a2))
            product[(x, y)] = {form_label(alpha, tuple(sorted(I1 + I2))): s}
    return NDga(C, product, unit="1")


def one_form(n: int, coeffs: dict[int, dict[tuple[int, ...], object]]) -> dict:
    """sum_j A_j dx_j with A_j = {exponent tuple: coefficient}."""
    out = {}
    for j, poly in coeffs.items():
        for alpha, c in poly.items():
            if c != 0:
                lab = form_label(tuple(alpha), (j,))
                out[lab] = out.get(lab, 0) + Fraction(c)
    return out


def linear_one_form(c: list[list]) -> dict:
    """A = sum_{i,j} c[i][j] x_i dx_j (0-based matrix, 1-based variables)."""
    n = len(c)
    coeffs: dict = {}
    for i in range(n):
        for j in range(n):
            if c[i][j] != 0:
                alpha = tuple(int(k == i) for k in range(n))
                coeffs.setdefault(j + 1, {})[alpha] = c[i][j]
    return one_form(n, coeffs)


def two_form_matrix(n: int, omega: dict) -> list[list[Fraction]]:
    """Antisymmetric F with omega = sum_{i<j} F_ij dx_i dx_j (constant coefficients)."""
    F = [[Fraction(0)] * n for _ in range(n)]
    for i, j in combinations(range(1, n + 1), 2):
        lab = form_label((0,) * n, (i, j))
        c = Fraction(omega.get(lab, 0))
        F[i - 1][j - 1] = c
        F[j - 1][i - 1] = -c
    const = {form_label((0,) * n, (i, j)) for i, j in combinations(range(1, n + 1), 2)}
    if any(lab not in const for lab, c in omega.items() if c != 0):
        raise StructuralError("two-form has non-constant coefficients or wrong degree")
    return F


@dataclass
class ConnectionFixture:
    n: int
    m: int
    algebra: NDga
    module: Kdgm
    A: dict
    e_A: GradedMap

    def curvature(self) -> dict:
        """dA, the form whose left multiplication is d_End(e_A)."""
        return self.algebra.d(self.A)

    def curvature_operator(self) -> GradedMap:
        return self.algebra.left_multiplication(self.curvature(), degree=2)


def build_connection_fixture(n: int, m: int, A: dict | None = None,
                             check: bool = False) -> ConnectionFixture:
    """2-dgm of truncated polynomial forms with e_A(w) = A ∧ w.

    The default A is sum_j x_{j+1} dx_j (indices mod n).
    """
    alg = forms_algebra(n, m)
    if A is None:
        if m < 2:
            raise ValueError("the default connection needs m >= 2")
        coeffs = {j: {tuple(int(k == j % n) for k in range(n)): 1} for j in range(1, n + 1)}
        A = one_form(n, coeffs)
    for lab in A:
        if lab not in alg.space:
            raise StructuralError(f"{lab} is truncated away at weight {m}")
    if alg.degree(A) not in (1, None):
        raise ValueError("connection must be a 1-form")
    module = regular_module(alg)
    if check:
        bad = verify_ndga(alg) + verify_kdgm(module)
        if bad:
            raise StructuralError("; ".join(bad[:5]))
    e_A = alg.left_multiplication(A, degree=1)
    return ConnectionFixture(n, m, alg, module, dict(A), e_A)


def pairing_matrix(upper: dict[tuple[int, int], object], size: int) -> list[list[Fraction]]:
    """Antisymmetric matrix from its entries above the diagonal (1-based)."""
    F = [[Fraction(0)] * size for _ in range(size)]
    for (i, j), c in upper.items():
        if not 1 <= i < j <= size:
            raise ValueError(f"need 1 <= i < j <= {size}, got ({i}, {j})")
        F[i - 1][j - 1] = Fraction(c)
        F[j - 1][i - 1] = -Fraction(c)
    return F


PAIRING_EXAMPLES = {
    "F2": pairing_matrix({(1, 2): 1}, 2),
    "F4_block": pairing_matrix({(1, 2): 1, (3, 4): 1}, 4),
    "F4_degenerate": pairing_matrix({(1, 2): 1, (1, 3): 1, (2, 3): 1}, 4),
}


GALLERY = {
    "ej1": build_ej1,
    "ej1-algebra": build_ej1_algebra,
    "vtensor": build_vtensor,
    "end-ej1": build_end_ej1,
    "ej1-module": lambda: evaluation_module(build_ej1()),
    "point": build_point_algebra,
    "forms-2-2": lambda: forms_algebra(2, 2),
    "forms-3-3": lambda: forms_algebra(3, 3),
}
