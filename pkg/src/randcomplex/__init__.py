"""Multi-parameter random simplicial complexes: exact measure, sampler,
parameter laws, topology checks, and a verification lab."""

from .complexes import (
    FaceProfile,
    Link,
    SimplicialComplex,
    build_complex,
    complement_is_open_star_union,
    degree,
    face_profile,
    external_faces,
    is_subcomplex,
    join_with_simplex,
    link,
    simplex,
    star,
)
from .laws import (
    DegreeLaw,
    degree_law,
    edge_degree_zero_bound,
    intersection_parameters,
    link_parameters,
    links_intersection_parameters,
    preset,
    restriction_parameters,
)
from .measure import (
    LogProbability,
    ParameterVector,
    SandwichConditionError,
    containment_probability,
    expected_edge_count,
    isolated_subcomplex_probability,
    measure,
    reconstruct_from_containment,
    sandwich_probability,
    vertex_count_pmf,
)
from .sampling import SampleConfig, derive_seed, sample, sample_stream
from .topology import (
    Certificate,
    FailedCondition,
    RegimeLabel,
    RegimePoint,
    Verdict,
    certify_simply_connected,
    connected_components,
    dimension,
    is_connected,
    isolated_vertices,
    regime_classify,
)

__version__ = "0.1.0"
