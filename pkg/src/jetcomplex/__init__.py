"""Stanley-Reisner complex of the leading-term ideal of the principal jet-scheme
component over rank-one matrices: generators, facets, counts and shelling."""

from ._accel import backend_name
from .counting import (
    binomial,
    krull_dimension,
    lgv_pair_count,
    multiplicity_closed,
    multiplicity_sum,
)
from .errors import (
    CapacityError,
    ClassificationError,
    DomainError,
    InternalConsistencyError,
    PreconditionError,
)
from .facets import FacetProfile, decompose, enumerate_facets, facet_vertex_set
from .grid import (
    GridShape,
    LatticePath,
    Layer,
    Region,
    Vertex,
    classify_region,
    enumerate_nonintersecting_pairs,
    enumerate_paths,
    x,
    y,
)
from .ideal import generators, is_face, violating_generators
from .oracle import MAX_ORACLE_VERTICES, enumerate_faces_bruteforce, enumerate_facets_bruteforce
from .shelling import (
    ShellingOrder,
    compare,
    construct_witness,
    h_vector,
    restriction_face,
    shelling_sequence,
    verify_shelling,
)

__version__ = "0.1.0"
