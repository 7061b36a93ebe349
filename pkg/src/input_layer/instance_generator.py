"""
src/input_layer/instance_generator.py

Seeded random instance generator for every problem.

The same seed always produces the same instance. With `planted=True` one
solution is planted at a seeded position and the result is re-checked by
brute force before it is returned.
"""

import logging
from itertools import combinations
from typing import Any, Callable, Dict, Mapping, Optional, Tuple

import numpy as np

from ..processing_layer.errors import ConfigurationError
from ..processing_layer.fine_grained.fo_formula import parse_formula
from ..processing_layer.fine_grained.instances import (
    CliqueInstance,
    Graph,
    HittingSetInstance,
    OvInstance,
    ThreeSumInstance,
    ZwtInstance,
)
from ..processing_layer.fine_grained.model_checking import FoModelInstance
from ..processing_layer.lp_proof.lp_types import LpInstance
from ..processing_layer.proof_core.registry import get_entry, resolve_tag

logger = logging.getLogger(__name__)

SIZE_DEFAULTS: Dict[str, Dict[str, int]] = {
    "lp": {"m": 3, "n": 3, "range": 5},
    "threesum": {"n": 8},
    "hittingset": {"n": 6, "universe": 12, "set_size": 3},
    "ov": {"n": 8, "d": 4},
    "zwt": {"n": 6},
    "fomc": {"n": 6},
    "kclique": {"n": 8, "k": 3},
}

# Each holds on a graph with a vertex adjacent to every other vertex plus one triangle through it.
FORMULA_TEMPLATES = (
    "E x1 A x2 : (x1 = x2 | edge x1 x2)",
    "E x1 E x2 : edge x1 x2",
    "E x1 E x2 E x3 : (edge x1 x2 & edge x2 x3 & edge x1 x3)",
    "E x1 A x2 E x3 : (x1 = x2 | edge x2 x3)",
)

PLANT_ATTEMPTS = 64


class InstanceGenerator:
    """Reproducible instances from one numpy Generator."""

    def __init__(self, seed: int):
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    # ----- graphs -----

    def _random_pairs(self, n: int, probability: float):
        mask = np.triu(self.rng.random((n, n)) < probability, k=1)
        return [(int(u), int(v)) for u, v in np.argwhere(mask)]

    def _distinct(self, n: int, count: int):
        return sorted(int(v) for v in self.rng.choice(n, size=count, replace=False))

    # ----- problems -----

    def threesum(self, n: int, planted: bool = False, magnitude: Optional[int] = None) -> ThreeSumInstance:
        bound = magnitude or max(n, 16) ** 2
        if 2 * bound >= max(n, 16) ** 3:
            raise ConfigurationError(f"magnitude {bound} leaves no room for planted values")
        a, b, c = (self.rng.integers(-bound, bound + 1, size=n) for _ in range(3))
        if planted:
            i, j, k = (int(v) for v in self.rng.integers(0, n, size=3))
            c[k] = -(a[i] + b[j])
        return ThreeSumInstance.from_lists(a.tolist(), b.tolist(), c.tolist())

    def hittingset(self, n: int, universe: int, set_size: int, planted: bool = False) -> HittingSetInstance:
        if not 1 <= set_size <= universe:
            raise ConfigurationError(f"set_size must lie in [1, {universe}], got {set_size}")

        def draw():
            return [self._distinct(universe, set_size) for _ in range(n)]

        candidates, targets = draw(), draw()
        if planted:
            s = int(self.rng.integers(0, n))
            chosen = candidates[s]
            for t, target in enumerate(targets):
                if not set(target) & set(chosen):
                    targets[t] = sorted(set(target) | {int(self.rng.choice(chosen))})
        return HittingSetInstance.from_lists(
            [[v + 1 for v in members] for members in candidates],
            [[v + 1 for v in members] for members in targets],
        )

    def ov(self, n: int, d: int, planted: bool = False, density: float = 0.5) -> OvInstance:
        matrix = (self.rng.random((n, d)) < density).astype(np.int64)
        if planted:
            if n < 2:
                raise ConfigurationError("planting an orthogonal pair needs n >= 2")
            i, j = self._distinct(n, 2)
            matrix[j] = matrix[j] * (1 - matrix[i])
        return OvInstance.from_lists(matrix.tolist())

    def zwt(self, n: int, planted: bool = False, weight: Optional[int] = None) -> ZwtInstance:
        bound = weight or max(8, n * n)
        if not planted:
            upper = np.triu(self.rng.integers(-bound, bound + 1, size=(n, n)), k=1)
            return ZwtInstance.from_matrix(upper + upper.T)
        if n < 3:
            raise ConfigurationError("planting a triangle needs n >= 3")
        for _ in range(PLANT_ATTEMPTS):
            upper = np.triu(self.rng.integers(1, bound + 1, size=(n, n)), k=1)
            matrix = upper + upper.T
            i, j, k = self._distinct(n, 3)
            matrix[j, k] = matrix[k, j] = -(matrix[i, j] + matrix[i, k])
            instance = ZwtInstance.from_matrix(matrix)
            zeros = sum(1 for t in combinations(range(n), 3) if instance.weight(*t) == 0)
            if zeros == 1:
                return instance
        raise ConfigurationError(f"could not plant a unique zero triangle in {PLANT_ATTEMPTS} attempts")

    def fomc(
        self,
        n: int,
        planted: bool = False,
        edge_probability: float = 0.3,
        formula: Optional[str] = None,
    ) -> FoModelInstance:
        text = formula or FORMULA_TEMPLATES[int(self.rng.integers(0, len(FORMULA_TEMPLATES)))]
        pairs = self._random_pairs(n, edge_probability)
        if planted:
            if n < 3:
                raise ConfigurationError("planting needs n >= 3")
            centre, u, v = (int(x) for x in self.rng.permutation(n)[:3])
            pairs += [(centre, w) for w in range(n) if w != centre] + [(u, v)]
        return FoModelInstance.with_full_domains(Graph.from_pairs(n, pairs), parse_formula(text))

    def kclique(self, n: int, k: int, planted: bool = False, edge_probability: float = 0.4) -> CliqueInstance:
        pairs = self._random_pairs(n, edge_probability)
        if planted:
            if k > n:
                raise ConfigurationError(f"cannot plant a {k}-clique in {n} vertices")
            pairs += list(combinations(self._distinct(n, k), 2))
        return CliqueInstance(Graph.from_pairs(n, pairs), k)

    def lp(self, m: int, n: int, planted: bool = False, entry_range: int = 5) -> LpInstance:
        """Integer program with entries in [-entry_range, entry_range]; planted means feasible."""
        A = self.rng.integers(-entry_range, entry_range + 1, size=(m, n))
        c = self.rng.integers(-entry_range, entry_range + 1, size=n)
        if planted:
            point = self.rng.integers(0, entry_range + 1, size=n)
            b = A @ point + self.rng.integers(0, entry_range + 1, size=m)
        else:
            b = self.rng.integers(-entry_range, entry_range + 1, size=m)
        return LpInstance.from_lists(A.tolist(), b.tolist(), c.tolist())

    # ----- dispatch -----

    def _builders(self) -> Dict[str, Callable[[Dict[str, int], bool], Any]]:
        return {
            "lp": lambda s, p: self.lp(s["m"], s["n"], p, s["range"]),
            "threesum": lambda s, p: self.threesum(s["n"], p),
            "hittingset": lambda s, p: self.hittingset(s["n"], s["universe"], s["set_size"], p),
            "ov": lambda s, p: self.ov(s["n"], s["d"], p),
            "zwt": lambda s, p: self.zwt(s["n"], p),
            "fomc": lambda s, p: self.fomc(s["n"], p),
            "kclique": lambda s, p: self.kclique(s["n"], s["k"], p),
        }

    def generate(self, tag: str, sizes: Optional[Mapping[str, int]] = None, planted: bool = False) -> Tuple[str, Any]:
        """
        Build one instance of the given problem.

        Args:
            tag: problem tag
            sizes: overrides for SIZE_DEFAULTS[tag]
            planted: plant one solution and re-check it by brute force

        Returns:
            (tag, instance)

        Raises:
            ConfigurationError: unknown size key, non-positive size or failed planting
        """
        name = resolve_tag(tag).value
        merged = dict(SIZE_DEFAULTS[name])
        for key, value in (sizes or {}).items():
            if key not in merged:
                raise ConfigurationError(f"{name} has no size parameter {key!r}")
            merged[key] = int(value)
        if any(value < 1 for value in merged.values()):
            raise ConfigurationError(f"sizes must be positive: {merged}")

        instance = self._builders()[name](merged, planted)
        if planted and name != "lp" and get_entry(name).oracle(instance) is None:
            raise ConfigurationError(f"planted {name} instance has no solution")
        logger.info("generated %s instance (seed=%d, planted=%s, sizes=%s)", name, self.seed, planted, merged)
        return name, instance


def generate_instance(
    tag: str, seed: int, sizes: Optional[Mapping[str, int]] = None, planted: bool = False
) -> Tuple[str, Any]:
    return InstanceGenerator(seed).generate(tag, sizes, planted)
