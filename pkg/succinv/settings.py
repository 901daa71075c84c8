from succinv import cache


class ResetCache(type):
    def __setattr__(self, name, value):
        super().__setattr__(name, value)
        cache.reset()


class settings(metaclass=ResetCache):
    fractal_element_budget: int = 100_000
    ef_state_budget: int = 2_000_000
    ef_pruning: bool = True
    sequence_limit: int = 2**63
    check_layering: bool = False

    class errors:
        out_of_range: str = "element {} out of range 0..{}"
        reserved_name: str = "relation name {!r} is reserved"
        arity_mismatch: str = "tuple of length {} for relation of arity {}"
        trivial_radius: str = (
            "radius {} is trivial: every successor keeps radius-0 similarity, "
            "weave with radius >= 1"
        )
        no_candidate: str = (
            "no element of type {} at distance > {} from {} excluded elements"
        )
        splice: str = (
            "no S-edge to splice element {} into; the greedy phase needs at least "
            "2N(d+2,2r)+1 = {} edges of its type"
        )
