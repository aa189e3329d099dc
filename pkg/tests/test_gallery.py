import random
from fractions import Fraction

import pytest

from nilpotent_dga.algebras import Kdgm, NDga, verify_kdgm, verify_ndga
from nilpotent_dga.complexes import NComplex, nilpotency_violations
from nilpotent_dga.gallery import (GALLERY, PAIRING_EXAMPLES, build_connection_fixture, build_ej1,
                                   build_vtensor, form_label, forms_algebra, linear_one_form,
                                   one_form, pairing_matrix, two_form_matrix)
from nilpotent_dga.graded import power
from nilpotent_dga.maurer_cartan import pairing_sum

from _support import rq


@pytest.mark.parametrize("name", sorted(GALLERY))
def test_gallery_fixtures_pass_their_verifier(name):
    obj = GALLERY[name]()
    if isinstance(obj, Kdgm):
        assert verify_kdgm(obj) == [] and verify_ndga(obj.algebra) == []
    elif isinstance(obj, NDga):
        assert verify_ndga(obj) == []
    else:
        assert isinstance(obj, NComplex)
        assert nilpotency_violations(obj.d, obj.N) == []


def test_vtensor_details():
    C = build_vtensor()
    assert C.space.dim() == 9
    assert C.space.degree_of("E13") == -2
    assert power(C.d, 4).image_of("E13") == {"E31": -2}
    assert C.order == 5
    assert C.d.image_of("E33") == {"E32": 1}


def test_ej1_labels():
    C = build_ej1()
    assert C.space.components == {0: ("e1",), 1: ("e2",), 2: ("e3",)}


def test_form_labels():
    assert form_label((0, 0), ()) == "1"
    assert form_label((2, 0, 1), (1, 2)) == "x1^2*x3*dx1^dx2"


def test_forms_dimensions():
    assert forms_algebra(2, 2).space.dim() == 13
    assert forms_algebra(3, 3).space.dim() == 63


def _random_one_form(rng, n, m):
    """Sum of monomial 1-forms x^alpha dx_j with weight |alpha| + 1 <= m."""
    coeffs = {}
    for j in range(1, n + 1):
        for _ in range(3):
            alpha = [0] * n
            for _ in range(rng.randint(0, m - 1)):
                alpha[rng.randrange(n)] += 1
            coeffs.setdefault(j, {})[tuple(alpha)] = rq(rng)
    return one_form(n, coeffs)


def test_any_connection_in_three_variables_is_a_four_complex():
    rng = random.Random(0)
    forms = [None] + [_random_one_form(rng, 3, 3) for _ in range(4)]
    for A in forms:
        fx = build_connection_fixture(3, 3, A)
        assert power(fx.algebra.d + fx.e_A, 4).is_zero()


def _three_condition(fx) -> bool:
    """dA ^ (d w + A w) = 0 for every basis 0-form w."""
    alg = fx.algebra
    dA = fx.curvature()
    for w in alg.space.basis(0):
        inner = dict(alg.d({w: 1}))
        for k, c in alg.mul(fx.A, {w: 1}).items():
            inner[k] = inner.get(k, 0) + c
        if alg.mul(dA, {k: c for k, c in inner.items() if c}):
            return False
    return True


def test_three_complex_criterion_is_an_equivalence():
    rng = random.Random(1)
    candidates = [None, linear_one_form([[0, 1, 0], [1, 0, 0], [0, 0, 2]]),
                  one_form(3, {1: {(0, 0, 0): 1}}), one_form(3, {1: {(0, 2, 0): 1}})]
    candidates += [_random_one_form(rng, 3, 3) for _ in range(3)]
    seen = set()
    for A in candidates:
        fx = build_connection_fixture(3, 3, A)
        three = power(fx.algebra.d + fx.e_A, 3).is_zero()
        assert three == _three_condition(fx)
        seen.add(three)
    assert seen == {True, False}


def test_closed_connection_gives_two_complex():
    A = linear_one_form([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
    fx = build_connection_fixture(3, 3, A)
    assert not fx.curvature()
    assert power(fx.algebra.d + fx.e_A, 2).is_zero()


@pytest.mark.parametrize("c, degenerate", [
    ([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]], False),
    ([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]], True),
    ([[0, 2, 1, 0], [0, 0, 0, 3], [0, 0, 0, 1], [0, 0, 0, 0]], False),
])
def test_four_complex_iff_pairing_sum_vanishes(c, degenerate):
    fx = build_connection_fixture(4, 4, linear_one_form(c))
    F = two_form_matrix(4, fx.curvature())
    pf = pairing_sum(F)
    assert (pf == 0) == degenerate
    assert power(fx.algebra.d + fx.e_A, 4).is_zero() == (pf == 0)


def test_pairing_examples():
    assert pairing_sum(PAIRING_EXAMPLES["F2"]) == 1
    assert pairing_sum(PAIRING_EXAMPLES["F4_block"]) == 1
    assert pairing_sum(PAIRING_EXAMPLES["F4_degenerate"]) == 0
    with pytest.raises(ValueError):
        pairing_matrix({(2, 1): 1}, 2)


def test_connection_rejects_truncated_form():
    with pytest.raises(ValueError):
        build_connection_fixture(2, 1, one_form(2, {1: {(1, 0): Fraction(1)}}))
