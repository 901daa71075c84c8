__all__ = [
    "FractalMode",
    "NeighborhoodType",
    "ParamsBundle",
    "PointedStructure",
    "Signature",
    "Structure",
    "TypeCensus",
    "WeaveResult",
    "ball",
    "canonical_labeling",
    "canonical_type",
    "ef_equivalent",
    "element_types",
    "find_isomorphism",
    "fractal_build",
    "fractal_type_id",
    "gaifman_distance",
    "gaifman_neighbors",
    "hanf_params",
    "layered_neighborhoods",
    "model_check",
    "n_bound",
    "neighborhood",
    "parse_structure",
    "safe_to_add",
    "settings",
    "short_cycle_through_s",
    "structure_degree",
    "threshold_equivalent",
    "type_census",
    "verify_weave",
    "weave_pair",
]

from . import cache, errors, logic, weaving  # noqa: F401
from .canonical import canonical_labeling, find_isomorphism
from .files import parse_structure
from .fractal import FractalMode, fractal_build, fractal_type_id
from .gaifman import (
    ball,
    gaifman_distance,
    gaifman_neighbors,
    n_bound,
    neighborhood,
    structure_degree,
)
from .layering import layered_neighborhoods, safe_to_add, short_cycle_through_s
from .logic import ef_equivalent, model_check, verify_weave
from .parameters import ParamsBundle, hanf_params
from .registry import (
    NeighborhoodType,
    TypeCensus,
    canonical_type,
    element_types,
    threshold_equivalent,
    type_census,
)
from .settings import settings
from .structures import PointedStructure, Signature, Structure
from .weaving import WeaveResult, weave_pair
