"""
fields.py
-----------------
Prime fields F_p and extension fields F_{p^l}.

Extension elements are stored as ascending coefficient tuples of length
l. Multiplication, reduction and inversion go through
sympy.polys.galoistools, which works on descending coefficient lists.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Protocol, Sequence, Tuple, Union

import sympy.polys.galoistools as gf
from sympy.polys.domains import ZZ

from ..errors import ParameterError
from .primes import is_prime


class IntegerSource(Protocol):
    """Anything that can draw a uniform integer in [0, n)."""

    def randbelow(self, n: int) -> int:
        ...


# ===== PRIME FIELD =====

@dataclass(frozen=True)
class PrimeFieldElem:
    """Element of F_p with value in [0, p)."""
    value: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.value < self.modulus:
            raise ParameterError(f"{self.value} is not reduced modulo {self.modulus}")

    def _coerce(self, other: Union["PrimeFieldElem", int]) -> int:
        if isinstance(other, PrimeFieldElem):
            if other.modulus != self.modulus:
                raise ParameterError("mixing elements of different prime fields")
            return other.value
        return int(other) % self.modulus

    def __add__(self, other):
        return PrimeFieldElem((self.value + self._coerce(other)) % self.modulus, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElem((self.value - self._coerce(other)) % self.modulus, self.modulus)

    def __rsub__(self, other):
        return PrimeFieldElem((self._coerce(other) - self.value) % self.modulus, self.modulus)

    def __mul__(self, other):
        return PrimeFieldElem(self.value * self._coerce(other) % self.modulus, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElem((-self.value) % self.modulus, self.modulus)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElem(pow(self.value, exponent, self.modulus), self.modulus)

    def inverse(self) -> "PrimeFieldElem":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return PrimeFieldElem(pow(self.value, self.modulus - 2, self.modulus), self.modulus)

    def __truediv__(self, other):
        divisor = other if isinstance(other, PrimeFieldElem) else PrimeFieldElem(
            int(other) % self.modulus, self.modulus
        )
        return self * divisor.inverse()

    @property
    def vector(self) -> Tuple[int, ...]:
        return (self.value,)

    def is_zero(self) -> bool:
        return self.value == 0

    def encode(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class PrimeField:
    """F_p for a prime p."""
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParameterError(f"{self.p} is not prime")

    @property
    def degree(self) -> int:
        return 1

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, value: int) -> PrimeFieldElem:
        return PrimeFieldElem(int(value) % self.p, self.p)

    def from_int(self, value: int) -> PrimeFieldElem:
        return self(value)

    def zero(self) -> PrimeFieldElem:
        return PrimeFieldElem(0, self.p)

    def one(self) -> PrimeFieldElem:
        return PrimeFieldElem(1, self.p)

    def random_element(self, source: IntegerSource) -> PrimeFieldElem:
        return PrimeFieldElem(source.randbelow(self.p), self.p)

    def reduce_coefficients(self, values: Sequence[int]) -> PrimeFieldElem:
        return self(int(values[0]) if len(values) else 0)


# ===== EXTENSION FIELD =====

def _to_desc(coefficients: Sequence[int]) -> List[int]:
    return gf.gf_strip([int(c) for c in reversed(coefficients)])


def _to_asc(descending: Sequence[int], length: int) -> Tuple[int, ...]:
    ascending = [int(c) for c in reversed(descending)]
    return tuple(ascending + [0] * (length - len(ascending)))


@dataclass(frozen=True)
class ExtensionField:
    """
    F_{p^l} = F_p[x] / (f) for a monic irreducible f of degree l.

    Args:
        p: prime characteristic
        reducing: ascending coefficients of f, length l + 1, last entry 1
        check: verify irreducibility on construction
    """
    p: int
    reducing: Tuple[int, ...]
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "reducing", tuple(int(c) for c in self.reducing))
        if not is_prime(self.p):
            raise ParameterError(f"{self.p} is not prime")
        if len(self.reducing) < 2 or self.reducing[-1] != 1:
            raise ParameterError("reducing polynomial must be monic of degree >= 1")
        if any(not 0 <= c < self.p for c in self.reducing):
            raise ParameterError("reducing polynomial coefficients must lie in [0, p)")
        if self.check:
            from .irreducible import check_irreducible

            if not check_irreducible(self.reducing, self.p):
                raise ParameterError("reducing polynomial is not irreducible")

    @property
    def degree(self) -> int:
        return len(self.reducing) - 1

    @property
    def order(self) -> int:
        return self.p ** self.degree

    @property
    def _modulus_desc(self) -> List[int]:
        return _to_desc(self.reducing)

    def element(self, coefficients: Sequence[int]) -> "ExtFieldElem":
        if len(coefficients) != self.degree:
            raise ParameterError(
                f"extension element needs {self.degree} coefficients, got {len(coefficients)}"
            )
        return ExtFieldElem(tuple(int(c) % self.p for c in coefficients), self)

    def from_int(self, value: int) -> "ExtFieldElem":
        return ExtFieldElem((int(value) % self.p,) + (0,) * (self.degree - 1), self)

    def zero(self) -> "ExtFieldElem":
        return self.from_int(0)

    def one(self) -> "ExtFieldElem":
        return self.from_int(1)

    def random_element(self, source: IntegerSource) -> "ExtFieldElem":
        return self.element([source.randbelow(self.p) for _ in range(self.degree)])

    def reduce_coefficients(self, values: Sequence[int]) -> "ExtFieldElem":
        """Reduce an arbitrary-degree F_p polynomial (ascending) into the field."""
        reduced = gf.gf_rem(_to_desc([int(v) % self.p for v in values]), self._modulus_desc, self.p, ZZ)
        return ExtFieldElem(_to_asc(reduced, self.degree), self)

    def decode(self, text: str) -> "ExtFieldElem":
        """Parse l base-10 coefficients, ascending degree, each in [0, p)."""
        tokens = text.split()
        if len(tokens) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(tokens)}")
        values = [int(t) for t in tokens]
        if any(not 0 <= v < self.p for v in values):
            raise ValueError("extension coefficient out of range")
        return ExtFieldElem(tuple(values), self)


@dataclass(frozen=True)
class ExtFieldElem:
    """Element of F_{p^l}, ascending coefficients modulo the reducing polynomial."""
    coeffs: Tuple[int, ...]
    field: ExtensionField

    @property
    def vector(self) -> Tuple[int, ...]:
        return self.coeffs

    @property
    def coefficients(self) -> Tuple[PrimeFieldElem, ...]:
        return tuple(PrimeFieldElem(c, self.field.p) for c in self.coeffs)

    def _coerce(self, other: Union["ExtFieldElem", int]) -> "ExtFieldElem":
        if isinstance(other, ExtFieldElem):
            if other.field != self.field:
                raise ParameterError("mixing elements of different extension fields")
            return other
        return self.field.from_int(int(other))

    def __add__(self, other):
        rhs = self._coerce(other)
        p = self.field.p
        return ExtFieldElem(tuple((a + b) % p for a, b in zip(self.coeffs, rhs.coeffs)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        rhs = self._coerce(other)
        p = self.field.p
        return ExtFieldElem(tuple((a - b) % p for a, b in zip(self.coeffs, rhs.coeffs)), self.field)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        p = self.field.p
        return ExtFieldElem(tuple((-a) % p for a in self.coeffs), self.field)

    def __mul__(self, other):
        rhs = self._coerce(other)
        p = self.field.p
        if self.field.degree == 1:
            return ExtFieldElem((self.coeffs[0] * rhs.coeffs[0] % p,), self.field)
        product = gf.gf_mul(_to_desc(self.coeffs), _to_desc(rhs.coeffs), p, ZZ)
        reduced = gf.gf_rem(product, self.field._modulus_desc, p, ZZ)
        return ExtFieldElem(_to_asc(reduced, self.field.degree), self.field)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        p = self.field.p
        powered = gf.gf_pow_mod(_to_desc(self.coeffs), exponent, self.field._modulus_desc, p, ZZ)
        return ExtFieldElem(_to_asc(powered, self.field.degree), self.field)

    def inverse(self) -> "ExtFieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in F_{p^l}")
        p = self.field.p
        s, _, h = gf.gf_gcdex(_to_desc(self.coeffs), self.field._modulus_desc, p, ZZ)
        if len(h) != 1:
            raise ParameterError("element is not invertible; modulus is reducible")
        scale = pow(int(h[0]), p - 2, p)
        s = [int(c) * scale % p for c in s]
        return ExtFieldElem(_to_asc(s, self.field.degree), self.field)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def prime_subfield_value(self) -> Optional[int]:
        """The integer in [0, p) if the element lies in F_p, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def encode(self) -> str:
        return " ".join(str(c) for c in self.coeffs)
