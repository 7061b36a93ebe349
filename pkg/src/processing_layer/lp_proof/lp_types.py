"""
lp_types.py
-----------------
Linear program instances, size bounds, certificates and solver results.

Programs are in the form max cᵀx s.t. Ax <= b, x >= 0 with integer data.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from ..errors import InstanceParseError
from ..proof_core.codec import Line, SectionReader, format_ints

RationalVector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class LpInstance:
    """Integer LP; A is stored row-wise."""
    A: Tuple[Tuple[int, ...], ...]
    b: Tuple[int, ...]
    c: Tuple[int, ...]

    def __post_init__(self):
        if not self.A or not self.A[0]:
            raise InstanceParseError("LP needs m, n >= 1")
        if any(len(row) != self.n for row in self.A):
            raise InstanceParseError("every row of A needs n entries")
        if len(self.b) != self.m or len(self.c) != self.n:
            raise InstanceParseError(f"b needs {self.m} entries and c needs {self.n}")

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.A[0])

    @classmethod
    def from_lists(cls, A, b, c) -> "LpInstance":
        return cls(tuple(tuple(int(v) for v in row) for row in A), tuple(int(v) for v in b), tuple(int(v) for v in c))

    @classmethod
    def from_reader(cls, reader: SectionReader) -> "LpInstance":
        reader.ensure_only({"m", "n", "A", "b", "c"})
        m, n = reader.int("m"), reader.int("n")
        if m < 1 or n < 1:
            raise InstanceParseError(f"LP needs m, n >= 1, got m={m}, n={n}")
        rows = reader.int_rows("A", width=n)
        if len(rows) != m:
            raise InstanceParseError(f"expected {m} rows of A, got {len(rows)}")
        return cls.from_lists(rows, reader.ints("b", m), reader.ints("c", n))

    def to_lines(self) -> List[Line]:
        lines: List[Line] = [("m", str(self.m)), ("n", str(self.n))]
        lines.extend(("A", format_ints(row)) for row in self.A)
        lines.append(("b", format_ints(self.b)))
        lines.append(("c", format_ints(self.c)))
        return lines


@dataclass(frozen=True)
class SizeBound:
    """Bit-size bound L of the program and the perturbation step 2^(-3L-2)."""
    L: int

    @property
    def epsilon(self) -> Fraction:
        return Fraction(1, 1 << (3 * self.L + 2))


@dataclass(frozen=True)
class LpCertificate:
    """Primal vertex and a dual optimum of the perturbed program."""
    x_star: RationalVector
    y_star: RationalVector


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """y >= 0 with Aᵀy >= 0 and bᵀy < 0."""
    y: RationalVector


@dataclass(frozen=True)
class UnboundednessCertificate:
    """Feasible point plus a ray d >= 0 with Ad <= 0 and c'ᵀd > 0."""
    point: RationalVector
    ray: RationalVector


FarkasCertificate = Union[InfeasibilityCertificate, UnboundednessCertificate]


@dataclass(frozen=True)
class Optimal:
    x: RationalVector
    y: RationalVector
    value: Fraction

    @property
    def certificate(self) -> LpCertificate:
        return LpCertificate(self.x, self.y)


@dataclass(frozen=True)
class Infeasible:
    certificate: InfeasibilityCertificate


@dataclass(frozen=True)
class Unbounded:
    certificate: UnboundednessCertificate


SolveResult = Union[Optimal, Infeasible, Unbounded]
