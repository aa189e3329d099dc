import random
from itertools import product

import pytest

from nilpotent_dga import linalg
from nilpotent_dga.complexes import (NComplex, NilpotencyError, cohomology, cohomology_table,
                                     complex_from_images, homotopy_sum, homotopy_witness,
                                     induces_same_cohomology_maps, is_injective, is_surjective,
                                     morphism_space, nilpotency_order, tensor_complex)
from nilpotent_dga.gallery import build_chain, build_ej1, build_vtensor
from nilpotent_dga.graded import GradedMap, compose, power

from _support import rq


def brute_cohomology_dim(C: NComplex, p: int, i: int) -> int:
    """dim A^i - rank(d^p out of A^i) - rank(d^{N-p} into A^i), straight from blocks."""
    dp = power(C.d, p).block(i)
    dq = power(C.d, C.N - p).block(i - C.N + p)
    r1 = linalg.rank(dp) if dp and dp[0] else 0
    r2 = linalg.rank(dq) if dq and dq[0] else 0
    return C.space.dim(i) - r1 - r2


def test_ej1_facts():
    C = build_ej1()
    assert C.order == 3 and C.is_proper()
    assert C.d.image_of("e3") == {}
    assert all(dim == 0 for _, _, dim in cohomology_table(C))


def test_nilpotency_rejected():
    with pytest.raises(NilpotencyError, match=r"d\^2\(e1\)"):
        complex_from_images({0: ["e1"], 1: ["e2"], 2: ["e3"]},
                            {"e1": {"e2": 1}, "e2": {"e3": 1}}, 2)


def test_cohomology_argument_range():
    C = build_ej1()
    with pytest.raises(ValueError):
        cohomology(C, 0, 0)
    assert cohomology(C, 3, 0) == (0, [])


@pytest.mark.parametrize("builder", [build_ej1, build_vtensor,
                                     lambda: build_chain(4, start_degree=-1)])
def test_cohomology_matches_rank_formula(builder):
    C = builder()
    for p in range(1, C.N):
        for i in range(min(C.space.degrees()) - 1, max(C.space.degrees()) + 2):
            dim, reps = cohomology(C, p, i)
            assert dim == brute_cohomology_dim(C, p, i) == len(reps)


def test_zero_differential_cohomology_is_everything():
    comps = {0: ["a", "b"], 1: ["c"], 3: ["x", "y", "z"]}
    C = complex_from_images(comps, {}, 3)
    for p in (1, 2):
        for i, labels in comps.items():
            assert cohomology(C, p, i)[0] == len(labels)


def test_vtensor_has_cohomology_and_order_five():
    C = build_vtensor()
    assert C.order == 5
    assert power(C.d, 4).image_of("E13")
    assert sum(d for _, _, d in cohomology_table(C)) > 0


def test_homotopic_maps_have_witnesses_and_same_cohomology():
    rng = random.Random(2)
    A = build_vtensor()
    morphs = morphism_space(A, A, 0)
    assert morphs
    for _ in range(5):
        g = sum((m.scale(rq(rng)) for m in morphs[1:]), morphs[0].scale(rq(rng)))
        sp = A.space
        h = GradedMap(sp, sp, -(A.N - 1),
                      {i: [[rq(rng) for _ in range(sp.dim(i))] for _ in range(sp.dim(i - A.N + 1))]
                       for i in sp.degrees()})
        f = g + homotopy_sum(h, A, A, A.N)
        assert compose(A.d, f) == compose(f, A.d)
        w = homotopy_witness(f, g, A, A)
        assert w is not None
        assert homotopy_sum(w, A, A, A.N) == f - g
        assert induces_same_cohomology_maps(f, g, A, A)


def test_identity_homotopy():
    C = build_ej1()
    ident = GradedMap.identity(C.space)
    assert homotopy_witness(ident, GradedMap.zero(C.space, C.space, 0), C, C) is not None
    pt = complex_from_images({0: ["p"]}, {}, 2)
    ident = GradedMap.identity(pt.space)
    assert homotopy_witness(ident, GradedMap.zero(pt.space, pt.space, 0), pt, pt) is None
    assert not induces_same_cohomology_maps(ident, GradedMap.zero(pt.space, pt.space, 0), pt, pt)


@pytest.mark.parametrize("M, N", list(product(range(1, 5), repeat=2)))
def test_injective_and_surjective_morphisms_bound_orders(M, N):
    A, B = build_chain(M), build_chain(N)
    basis = morphism_space(A, B, 0)
    rng = random.Random(M * 10 + N)
    samples = list(basis)
    for _ in range(10):
        if basis:
            samples.append(sum((b.scale(rq(rng)) for b in basis[1:]), basis[0].scale(rq(rng))))
    for f in samples:
        if is_injective(f):
            assert M <= N
        if is_surjective(f):
            assert M >= N
    if M == N:
        assert any(is_injective(f) and is_surjective(f) for f in samples)


@pytest.mark.parametrize("M, N", list(product((2, 3, 4), repeat=2)))
def test_tensor_nilpotency_bound(M, N):
    T = tensor_complex(build_chain(M), build_chain(N, prefix="w"))
    assert power(T.d, M + N - 1).is_zero()
    assert nilpotency_order(T.d, M + N - 1) is not None
