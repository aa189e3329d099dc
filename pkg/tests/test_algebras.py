import random

import pytest

from nilpotent_dga.algebras import (Kdgm, NDga, closedness_order, d_end, d_end_power_formula,
                                    end_algebra, evaluation_module, graded_binomial,
                                    leibniz_power_check, ndga_order, regular_module, tensor_dga,
                                    verify_kdgm, verify_ndga)
from nilpotent_dga.gallery import (build_chain, build_ej1, build_end_ej1, build_point_algebra,
                                   forms_algebra)
from nilpotent_dga.graded import power

from _support import random_map, random_space, symbolic_leibniz


def algebra_fixtures():
    return {
        "end-ej1": build_end_ej1(),
        "end-chain2": end_algebra(build_chain(2)),
        "end-chain4": end_algebra(build_chain(4)),
        "forms-2-2": forms_algebra(2, 2),
        "point": build_point_algebra(),
        "end2-tensor-end2": tensor_dga(end_algebra(build_chain(2)), end_algebra(build_chain(2))),
    }


ALGEBRAS = algebra_fixtures()


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_fixture_algebras_verify(name):
    assert verify_ndga(ALGEBRAS[name]) == []


@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_end_algebra_nilpotency_bound(N):
    E = end_algebra(build_chain(N))
    assert power(E.d, 2 * N - 1).is_zero()
    assert verify_ndga(E) == []


def test_end_ej1_is_proper_five():
    assert ndga_order(build_end_ej1()) == 5


@pytest.mark.parametrize("parity", [0, 1])
def test_graded_binomial_matches_symbolic_expansion(parity):
    for n in range(9):
        terms = symbolic_leibniz(n, parity)
        for j in range(n + 1):
            assert graded_binomial(n, j, parity) == terms.get(j, 0)
        assert graded_binomial(n, 0, parity) == (-1) ** (n * parity)
        assert graded_binomial(n, n, parity) == 1


def test_leibniz_powers_in_end_algebra():
    E = build_end_ej1()
    labels = E.space.labels()
    for a in labels:
        for b in labels:
            for n in range(1, 9):
                assert leibniz_power_check(E, {a: 1}, {b: 1}, n)


@pytest.mark.parametrize("name", sorted(ALGEBRAS))
def test_closedness_bound_on_basis_pairs(name):
    A = ALGEBRAS[name]
    orders = {x: closedness_order(A, {x: 1}) for x in A.space.labels()}
    for (x, y), img in A.product.items():
        assert closedness_order(A, img) <= orders[x] + orders[y] - 1


def test_d_end_power_formula_random():
    rng = random.Random(4)
    for _ in range(15):
        sp = random_space(rng, 8)
        d = random_map(rng, sp, 1)
        f = random_map(rng, sp, rng.choice([-1, 0, 1, 2]))
        it = f
        for n in range(1, 6):
            it = d_end(d, it)
            assert d_end_power_formula(d, f, n) == it


def test_modules_verify():
    assert verify_kdgm(evaluation_module(build_ej1())) == []
    assert verify_kdgm(regular_module(forms_algebra(2, 2))) == []


def test_broken_action_is_reported():
    good = evaluation_module(build_ej1())
    action = dict(good.action)
    action[("e2<-e1", "e1")] = {"e2": 2}
    bad = Kdgm(good.algebra, good.module_complex, action)
    report = verify_kdgm(bad)
    assert report and any("e2<-e1" in line for line in report)


def test_broken_product_is_reported():
    A = forms_algebra(2, 1)
    product = dict(A.product)
    product[("x1", "1")] = {"x2": 1}
    report = verify_ndga(NDga(A.complex, product, unit="1"))
    assert any("unit" in r for r in report)
    assert any("Leibniz" in r for r in report)
