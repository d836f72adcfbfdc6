"""Cluster-cyclic rank-3 quivers, their mutation orbits and the Markov constant."""

from .classify import (
    Classification,
    Component,
    ComponentCounts,
    Field,
    SliceKind,
    Verdict,
    band,
    component_of,
    component_table,
    descend,
    fundamental_representative,
    in_fundamental_domain,
    in_open_domain,
    is_cluster_cyclic,
    m_minus,
    m_plus,
    predicate_band,
    predicate_constant,
    singular_points,
    slice_classify,
)
from .core import (
    GENERATORS,
    Letter,
    MCase,
    Triple,
    apply_letter,
    apply_word,
    inverse_word,
    is_leq,
    m_case,
    markov_constant,
    mutate,
    non_decreasing_count,
    parse_word,
    permute,
    swap,
)
from .hochschild import (
    AcyclicQuiver3,
    dim_h1,
    dim_h1_closed_form,
    hereditary_candidates,
    mutate_to_cyclic,
    path_counts,
    verify_appendix_theorem,
)
from .orbits import (
    AcyclicClass,
    Finiteness,
    InfiniteFamilyError,
    OrbitGraph,
    OrbitSummary,
    acyclic_representatives,
    cyclic_representatives,
    enumerate_orbit,
    export_dot,
    is_finite_orbit,
    summarize_orbit,
)
from .spectral import CoxeterSpectrum, Regime, cartan, char_poly, coxeter, spectrum, spectrum_from_constant

__version__ = "0.1.0"

_SUBMODULES = {"classify", "core", "hochschild", "orbits", "spectral"}
__all__ = sorted(name for name in dir() if not name.startswith("_") and name not in _SUBMODULES)
