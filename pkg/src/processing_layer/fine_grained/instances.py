"""
instances.py
-----------------
Instance types for the fine-grained problems and their text bodies.

Every instance reads from and writes to the body of an instance document
(the lines after `problem: <tag>`). Indices and vertex labels are 1-based
in text and 0-based in memory.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, List, Sequence, Tuple

import numpy as np

from ..errors import InstanceParseError
from ..proof_core.codec import Line, SectionReader, format_ints, parse_ints
from ..proof_core.protocol_config import DEFAULT_PARAMETERS

Edge = Tuple[int, int]


def _strictly_sorted(values: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


def threesum_magnitude_limit(n: int, exponent: int = DEFAULT_PARAMETERS.threesum_magnitude_exponent) -> int:
    """Entries must satisfy |x| < max(n, 16) ** exponent."""
    return max(n, 16) ** exponent


@dataclass(frozen=True)
class ThreeSumInstance:
    a: Tuple[int, ...]
    b: Tuple[int, ...]
    c: Tuple[int, ...]

    def __post_init__(self):
        if not self.a or not len(self.a) == len(self.b) == len(self.c):
            raise InstanceParseError("3-SUM lists must be non-empty and of equal length")
        limit = threesum_magnitude_limit(self.n)
        if any(abs(v) >= limit for v in self.a + self.b + self.c):
            raise InstanceParseError(f"3-SUM entries must satisfy |x| < {limit}")

    @property
    def n(self) -> int:
        return len(self.a)

    @cached_property
    def arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (
            np.asarray(self.a, dtype=np.int64),
            np.asarray(self.b, dtype=np.int64),
            np.asarray(self.c, dtype=np.int64),
        )

    @classmethod
    def from_lists(cls, a, b, c) -> "ThreeSumInstance":
        return cls(tuple(int(v) for v in a), tuple(int(v) for v in b), tuple(int(v) for v in c))

    @classmethod
    def from_reader(cls, reader: SectionReader) -> "ThreeSumInstance":
        reader.ensure_only({"n", "a", "b", "c"})
        n = reader.int("n")
        if n < 1:
            raise InstanceParseError(f"n must be >= 1, got {n}")
        return cls.from_lists(reader.ints("a", n), reader.ints("b", n), reader.ints("c", n))

    def to_lines(self) -> List[Line]:
        return [("n", str(self.n)), ("a", format_ints(self.a)), ("b", format_ints(self.b)), ("c", format_ints(self.c))]


@dataclass(frozen=True)
class HittingSetInstance:
    """Candidate sets S and target sets T, each a sorted duplicate-free tuple."""
    S: Tuple[Tuple[int, ...], ...]
    T: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for family in (self.S, self.T):
            if any(not _strictly_sorted(members) for members in family):
                raise InstanceParseError("sets must be sorted and duplicate-free")

    @property
    def size(self) -> int:
        """m = Σ|S| + Σ|T|."""
        return sum(len(s) for s in self.S) + sum(len(t) for t in self.T)

    @cached_property
    def member_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(s) for s in self.S)

    @classmethod
    def from_lists(cls, S, T) -> "HittingSetInstance":
        return cls(tuple(tuple(int(v) for v in s) for s in S), tuple(tuple(int(v) for v in t) for t in T))

    @classmethod
    def from_reader(cls, reader: SectionReader) -> "HittingSetInstance":
        reader.ensure_only({"S", "T"})
        return cls.from_lists(reader.int_rows("S"), reader.int_rows("T"))

    def to_lines(self) -> List[Line]:
        return [("S", format_ints(s)) for s in self.S] + [("T", format_ints(t)) for t in self.T]


@dataclass(frozen=True)
class OvInstance:
    vectors: Tuple[Tuple[int, ...], ...]
    d: int

    def __post_init__(self):
        if not self.vectors or self.d < 1:
            raise InstanceParseError("OV needs n >= 1 vectors of dimension d >= 1")
        if any(len(v) != self.d for v in self.vectors):
            raise InstanceParseError(f"every vector needs {self.d} entries")
        if any(x not in (0, 1) for v in self.vectors for x in v):
            raise InstanceParseError("OV entries must be 0 or 1")

    @property
    def n(self) -> int:
        return len(self.vectors)

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.asarray(self.vectors, dtype=np.int64)

    def inner(self, i: int, j: int) -> int:
        return sum(x * y for x, y in zip(self.vectors[i], self.vectors[j]))

    @classmethod
    def from_lists(cls, vectors) -> "OvInstance":
        rows = tuple(tuple(int(x) for x in v) for v in vectors)
        return cls(rows, len(rows[0]) if rows else 0)

    @classmethod
    def from_reader(cls, reader: SectionReader) -> "OvInstance":
        reader.ensure_only({"n", "d", "v"})
        n, d = reader.int("n"), reader.int("d")
        rows = reader.int_rows("v", width=d)
        if len(rows) != n:
            raise InstanceParseError(f"expected {n} vectors, got {len(rows)}")
        return cls(tuple(tuple(r) for r in rows), d)

    def to_lines(self) -> List[Line]:
        return [("n", str(self.n)), ("d", str(self.d))] + [("v", format_ints(v)) for v in self.vectors]


# |w| below this keeps every triangle sum inside int64
ZWT_WEIGHT_LIMIT = 1 << 61


@dataclass(frozen=True)
class ZwtInstance:
    """Complete graph with a symmetric integer weight matrix (zero diagonal)."""
    weights: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.weights)
        if n < 1 or any(len(row) != n for row in self.weights):
            raise InstanceParseError("weight matrix must be square with n >= 1")
        for i, j in combinations(range(n), 2):
            if self.weights[i][j] != self.weights[j][i]:
                raise InstanceParseError(f"weights of ({i + 1}, {j + 1}) are not symmetric")
            if abs(self.weights[i][j]) >= ZWT_WEIGHT_LIMIT:
                raise InstanceParseError(f"weight of ({i + 1}, {j + 1}) exceeds 2^61 in absolute value")
        if any(self.weights[i][i] for i in range(n)):
            raise InstanceParseError("weight matrix diagonal must be zero")

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def max_weight(self) -> int:
        return max((abs(v) for row in self.weights for v in row), default=0)

    @cached_property
    def matrix(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=np.int64)

    def weight(self, i: int, j: int, k: int) -> int:
        w = self.weights
        return w[i][j] + w[i][k] + w[j][k]

    @classmethod
    def from_edges(cls, n: int, edges: Dict[Edge, int]) -> "ZwtInstance":
        matrix = [[0] * n for _ in range(n)]
        for (i, j), w in edges.items():
            matrix[i][j] = matrix[j][i] = int(w)
        return cls(tuple(tuple(row) for row in matrix))

    @classmethod
    def from_matrix(cls, matrix) -> "ZwtInstance":
        return cls(tuple(tuple(int(v) for v in row) for row in matrix))

    @classmethod
    def from_reader(cls, reader: SectionReader) -> "ZwtInstance":
        reader.ensure_only({"n", "edge"})
        n = reader.int("n")
        if n < 1:
            raise InstanceParseError(f"n must be >= 1, got {n}")
        edges: Dict[Edge, int] = {}
        for i, j, w in reader.int_rows("edge", width=3):
            key = (min(i, j) - 1, max(i, j) - 1)
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise InstanceParseError(f"bad edge ({i}, {j}) for n={n}")
            if key in edges:
                raise InstanceParseError(f"edge ({i}, {j}) listed twice")
            edges[key] = w
        if len(edges) != n * (n - 1) // 2:
            raise InstanceParseError("the graph must be complete: every pair needs one edge line")
        return cls.from_edges(n, edges)

    def to_lines(self) -> List[Line]:
        lines: List[Line] = [("n", str(self.n))]
        for i, j in combinations(range(self.n), 2):
            lines.append(("edge", format_ints((i + 1, j + 1, self.weights[i][j]))))
        return lines


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1."""
    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise InstanceParseError(f"graph needs n >= 1, got {self.n}")

    @cached_property
    def adjacency(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges:
            matrix[u, v] = matrix[v, u] = True
        return matrix

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u, v])

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "Graph":
        """Normalize 0-based pairs: sorted endpoints, no duplicates, no loops."""
        edges = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise InstanceParseError(f"bad edge ({u + 1}, {v + 1}) for n={n}")
            edges.add((min(u, v), max(u, v)))
        return cls(n, tuple(sorted(edges)))

    @classmethod
    def read(cls, reader: SectionReader) -> "Graph":
        n = reader.int("n")
        pairs = [(u - 1, v - 1) for u, v in reader.int_rows("edge", width=2)]
        return cls.from_pairs(n, pairs)

    def to_lines(self) -> List[Line]:
        return [("n", str(self.n))] + [("edge", format_ints((u + 1, v + 1))) for u, v in self.edges]


@dataclass(frozen=True)
class CliqueInstance:
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InstanceParseError(f"k must be >= 1, got {self.k}")

    @classmethod
    def from_reader(cls, reader: SectionReader) -> "CliqueInstance":
        reader.ensure_only({"n", "k", "edge"})
        return cls(Graph.read(reader), reader.int("k"))

    def to_lines(self) -> List[Line]:
        lines = self.graph.to_lines()
        return lines[:1] + [("k", str(self.k))] + lines[1:]


def parse_index_line(text: str, bound: int) -> Tuple[int, ...]:
    """1-based vertex list to 0-based, each within [1, bound]."""
    values = parse_ints(text, InstanceParseError)
    if any(not 1 <= v <= bound for v in values):
        raise InstanceParseError(f"vertex outside [1, {bound}] in {text!r}")
    return tuple(v - 1 for v in values)
