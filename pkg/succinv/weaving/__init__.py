__all__ = [
    "BuilderState",
    "Classification",
    "WeaveResult",
    "classify_types",
    "complete",
    "pick_far",
    "s_star",
    "transfer_partial",
    "weave_junctions",
    "weave_pair",
    "weave_rare",
]

from .classification import Classification, classify_types
from .completion import complete
from .junctions import weave_junctions
from .pipeline import WeaveResult, weave_pair
from .rare import weave_rare
from .state import BuilderState, pick_far, s_star
from .transfer import transfer_partial
