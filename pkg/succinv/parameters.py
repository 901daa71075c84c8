__all__ = ["ParamsBundle", "a_sequence", "g_bounds", "g_of", "hanf_params"]
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from succinv.errors import InputError, ResourceError
from succinv.gaifman import n_bound
from succinv.settings import settings


def hanf_params(alpha: int, d: int) -> Tuple[int, int]:
    r = max(1, (3**alpha - 1) // 2)
    return r, alpha * n_bound(d, r) + 1


def g_bounds(beta: int, d: int, r: int, t: int, n_occ: int) -> Dict[str, int]:
    """The three lower bounds g(beta) must meet, by construction step."""
    protected = (beta + 2 * n_occ) * n_bound(d + 2, r)
    return {
        "rare-protection": beta * n_bound(d + 2, 3 * r) + 1,
        "completion": protected + 4 * n_bound(d + 2, 2 * r) + 1,
        "threshold": protected + t,
    }


def g_of(beta: int, d: int, r: int, t: int, n_occ: int) -> int:
    return max(g_bounds(beta, d, r, t, n_occ).values())


def a_sequence(g: Callable[[int], int], n: int) -> List[int]:
    result = [g(0)]
    for i in range(1, n):
        result.append(g(i * result[-1]))
        if result[-1] > settings.sequence_limit:
            raise ResourceError(f"a_{i + 1} exceeds {settings.sequence_limit}")
    return result[:n]


@dataclass(frozen=True)
class ParamsBundle:
    d: int
    r: int
    t: int
    n_occ: int
    alpha: Optional[int] = None
    g_const: Optional[int] = None

    def __post_init__(self):
        if self.r < 1:
            raise InputError(settings.errors.trivial_radius.format(self.r), ["r"])
        if self.t < 1:
            raise InputError(f"threshold {self.t} below 1", ["t"])
        if self.d < 0 or self.n_occ < 0:
            raise InputError("negative degree or type count")
        if self.g_const is not None and self.g_const < 1:
            raise InputError(f"constant g {self.g_const} below 1", ["g_const"])

    @staticmethod
    def from_alpha(alpha: int, d: int, n_occ: int) -> "ParamsBundle":
        r, t = hanf_params(alpha, d)
        return ParamsBundle(d, r, t, n_occ, alpha=alpha)

    def g(self, beta: int) -> int:
        if self.g_const is not None:
            return self.g_const
        return g_of(beta, self.d, self.r, self.t, self.n_occ)

    def bounds(self, beta: int) -> Dict[str, int]:
        return g_bounds(beta, self.d, self.r, self.t, self.n_occ)

    def binding_bound(self, beta: int) -> str:
        if self.g_const is not None:
            return "forced"
        bounds = self.bounds(beta)
        return max(bounds, key=bounds.__getitem__)
