"""Bounded path algebras: rewriting, structure theory, modules, catalog."""

from .algebra import (
    FDAlgebra,
    TraceForm,
    basic_algebra_data,
    is_special_biserial,
    is_stably_biserial,
    is_symmetric,
    normalize,
    primitive_idempotents,
    quiver_of_algebra,
    trace_from_spec,
    wild_configuration_witness,
)
from .catalog import (
    appendix_example,
    basic_R2delta,
    catalog_presentation,
    double_loop_crossing,
    exponent_tuples,
    family_1,
    family_2a,
    family_2b,
    family_3a,
    family_3b,
    family_4a,
    family_4b,
    family_4c,
    klr_as_presentation,
    linear_a2,
)
from .modules import (
    AModule,
    ar_translate,
    ar_translate_inverse,
    cosyzygy,
    dual_module,
    ext1,
    ext1_via_two_step,
    factors_through_projective,
    hom_space,
    induce,
    is_indecomposable,
    is_projective,
    module_from_matrix_rep,
    modules_isomorphic,
    projective_module,
    quotient_module,
    radical_series,
    simple_module,
    socle_subspace,
    socle_vertices,
    stable_hom,
    submodule,
    syzygy,
    top_vertices,
    zero_module,
)
from .presentations import Arrow, Presentation, Quiver
from .rewrite import HorizonExceededError, brute_force_graded_dims
