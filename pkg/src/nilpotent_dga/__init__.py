"""Exact linear algebra for N-complexes, N-differential graded algebras,
deformed differentials (d+e)^N and noncommutative Chern-Simons functionals."""

from .algebras import (Kdgm, NDga, end_algebra, evaluation_module, graded_binomial,
                       regular_module, tensor_dga, verify_kdgm, verify_ndga)
from .complexes import NComplex, cohomology, homotopy_witness, nilpotency_order, tensor_complex
from .freealg import NCPoly, cs_functional, cyclic_reduce, variational_check
from .graded import GradedMap, GradedSpace, StructuralError
from .maurer_cartan import (c_coeff, dN_expansion, deform, inner_derivation, mc_closed_form_2N,
                            mc_residual, pairing_sum)
from .multiindex import enumerate_EN
from .paths import WeightedDigraph, c_oracle, kernel
from .scalars import Trunc, TruncatedRing

__all__ = [
    "GradedMap", "GradedSpace", "Kdgm", "NCPoly", "NComplex", "NDga", "StructuralError",
    "Trunc", "TruncatedRing", "WeightedDigraph", "c_coeff", "c_oracle", "cohomology",
    "cs_functional", "cyclic_reduce", "dN_expansion", "deform", "end_algebra",
    "enumerate_EN", "evaluation_module", "graded_binomial", "homotopy_witness",
    "inner_derivation", "kernel", "mc_closed_form_2N", "mc_residual", "nilpotency_order",
    "pairing_sum", "regular_module", "tensor_complex", "tensor_dga", "variational_check",
    "verify_kdgm", "verify_ndga",
]
