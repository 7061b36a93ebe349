"""
polynomials.py
-----------------
Dense univariate polynomials over F_p or F_{p^l}, with subproduct-tree
multipoint evaluation and interpolation.

Large products use Kronecker substitution: every coefficient is an F_p
vector of length l, packed with stride 2l - 1 into one integer vector,
multiplied exactly by exact_convolve and unpacked. Division uses Newton
iteration on the reversed divisor, so the tree algorithms stay
quasi-linear.
"""

from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import ParameterError
from .convolution import exact_convolve

# Below this many coefficients, schoolbook arithmetic is faster.
FAST_MULTIPLY_CUTOFF = 24
FAST_DIVIDE_CUTOFF = 48
LEAF_SIZE = 8


class DensePolynomial:
    """
    Polynomial with coefficients in a field, ascending degree order.

    The coefficient tuple is trimmed so the leading coefficient is nonzero;
    the zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Any, coefficients: Sequence[Any] = ()):
        coeffs = [c if not isinstance(c, int) else field.from_int(c) for c in coefficients]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coeffs: Tuple[Any, ...] = tuple(coeffs)

    # ===== CONSTRUCTORS =====

    @classmethod
    def zero(cls, field: Any) -> "DensePolynomial":
        return cls(field, ())

    @classmethod
    def constant(cls, field: Any, value: Any) -> "DensePolynomial":
        return cls(field, (value,))

    @classmethod
    def from_ints(cls, field: Any, values: Sequence[int]) -> "DensePolynomial":
        return cls(field, [field.from_int(v) for v in values])

    @classmethod
    def linear_root(cls, field: Any, root: Any) -> "DensePolynomial":
        """x - root"""
        return cls(field, (-root, field.one()))

    # ===== BASIC PROPERTIES =====

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Any:
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def coefficient(self, k: int) -> Any:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.field.zero()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"DensePolynomial({[c.vector for c in self.coeffs]})"

    # ===== ARITHMETIC =====

    def __add__(self, other: "DensePolynomial") -> "DensePolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return DensePolynomial(
            self.field, [self.coefficient(k) + other.coefficient(k) for k in range(size)]
        )

    def __sub__(self, other: "DensePolynomial") -> "DensePolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return DensePolynomial(
            self.field, [self.coefficient(k) - other.coefficient(k) for k in range(size)]
        )

    def __neg__(self) -> "DensePolynomial":
        return DensePolynomial(self.field, [-c for c in self.coeffs])

    def scale(self, factor: Any) -> "DensePolynomial":
        return DensePolynomial(self.field, [c * factor for c in self.coeffs])

    def __mul__(self, other: "DensePolynomial") -> "DensePolynomial":
        if self.is_zero() or other.is_zero():
            return DensePolynomial.zero(self.field)
        if min(len(self.coeffs), len(other.coeffs)) < FAST_MULTIPLY_CUTOFF:
            return self._schoolbook_multiply(other)
        return self._kronecker_multiply(other)

    def _schoolbook_multiply(self, other: "DensePolynomial") -> "DensePolynomial":
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return DensePolynomial(self.field, out)

    def _pack(self, stride: int) -> np.ndarray:
        l = self.field.degree
        packed = np.zeros(len(self.coeffs) * stride, dtype=np.int64)
        for i, c in enumerate(self.coeffs):
            packed[i * stride : i * stride + l] = c.vector
        return packed

    def _kronecker_multiply(self, other: "DensePolynomial") -> "DensePolynomial":
        l = self.field.degree
        p = self.field.p
        stride = 2 * l - 1
        product = exact_convolve(self._pack(stride), other._pack(stride))
        count = len(self.coeffs) + len(other.coeffs) - 1
        out = []
        for k in range(count):
            window = [int(v) % p for v in product[k * stride : (k + 1) * stride]]
            out.append(self.field.reduce_coefficients(window))
        return DensePolynomial(self.field, out)

    def truncate(self, length: int) -> "DensePolynomial":
        return DensePolynomial(self.field, self.coeffs[:length])

    def reversed(self, length: int) -> "DensePolynomial":
        """x^(length-1) * p(1/x) for a declared length >= len(coeffs)."""
        padded = list(self.coeffs) + [self.field.zero()] * (length - len(self.coeffs))
        return DensePolynomial(self.field, padded[::-1])

    def divmod(self, divisor: "DensePolynomial") -> Tuple["DensePolynomial", "DensePolynomial"]:
        """
        Quotient and remainder with deg(remainder) < deg(divisor).

        Raises:
            ZeroDivisionError: divisor is the zero polynomial
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < divisor.degree:
            return DensePolynomial.zero(self.field), self
        if divisor.degree < FAST_DIVIDE_CUTOFF or self.degree - divisor.degree < FAST_DIVIDE_CUTOFF:
            return self._long_divide(divisor)
        return self._newton_divide(divisor)

    def _long_divide(self, divisor: "DensePolynomial") -> Tuple["DensePolynomial", "DensePolynomial"]:
        remainder = list(self.coeffs)
        lead_inverse = divisor.leading().inverse()
        shift_count = self.degree - divisor.degree + 1
        quotient = [self.field.zero()] * shift_count
        for shift in range(shift_count - 1, -1, -1):
            factor = remainder[shift + divisor.degree] * lead_inverse
            quotient[shift] = factor
            if factor.is_zero():
                continue
            for k, d in enumerate(divisor.coeffs):
                remainder[shift + k] = remainder[shift + k] - factor * d
        return (
            DensePolynomial(self.field, quotient),
            DensePolynomial(self.field, remainder[: divisor.degree]),
        )

    def _newton_divide(self, divisor: "DensePolynomial") -> Tuple["DensePolynomial", "DensePolynomial"]:
        m = self.degree - divisor.degree
        inverse = divisor.reversed(divisor.degree + 1).series_inverse(m + 1)
        quotient_rev = (self.reversed(self.degree + 1) * inverse).truncate(m + 1)
        quotient = quotient_rev.reversed(m + 1)
        remainder = self - divisor * quotient
        return quotient, remainder

    def series_inverse(self, precision: int) -> "DensePolynomial":
        """g with self * g = 1 mod x^precision; needs a nonzero constant term."""
        constant = self.coefficient(0)
        if constant.is_zero():
            raise ZeroDivisionError("power series inverse needs a nonzero constant term")
        two = DensePolynomial.constant(self.field, self.field.from_int(2))
        inverse = DensePolynomial.constant(self.field, constant.inverse())
        reached = 1
        while reached < precision:
            reached = min(2 * reached, precision)
            correction = two - (self.truncate(reached) * inverse).truncate(reached)
            inverse = (inverse * correction).truncate(reached)
        return inverse

    def __mod__(self, divisor: "DensePolynomial") -> "DensePolynomial":
        return self.divmod(divisor)[1]

    def __floordiv__(self, divisor: "DensePolynomial") -> "DensePolynomial":
        return self.divmod(divisor)[0]

    def derivative(self) -> "DensePolynomial":
        return DensePolynomial(self.field, [c * k for k, c in enumerate(self.coeffs)][1:])

    # ===== EVALUATION =====

    def evaluate(self, point: Any) -> Any:
        """Horner evaluation."""
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    __call__ = evaluate


# ===== SUBPRODUCT TREE =====

class SubproductTree:
    """Binary tree of products of (x - node) over contiguous node ranges."""

    __slots__ = ("poly", "left", "right", "start", "stop")

    def __init__(self, field: Any, nodes: Sequence[Any], start: int = 0, stop: Optional[int] = None):
        self.start = start
        self.stop = len(nodes) if stop is None else stop
        self.left: Optional[SubproductTree] = None
        self.right: Optional[SubproductTree] = None
        if self.stop - self.start == 1:
            self.poly = DensePolynomial.linear_root(field, nodes[self.start])
            return
        middle = (self.start + self.stop) // 2
        self.left = SubproductTree(field, nodes, self.start, middle)
        self.right = SubproductTree(field, nodes, middle, self.stop)
        self.poly = self.left.poly * self.right.poly

    @property
    def size(self) -> int:
        return self.stop - self.start

    def is_leaf(self) -> bool:
        return self.left is None


def _descend(remainder: DensePolynomial, tree: SubproductTree, nodes: Sequence[Any], out: List[Any]):
    remainder = remainder % tree.poly
    if tree.size <= LEAF_SIZE or tree.is_leaf():
        for k in range(tree.start, tree.stop):
            out[k] = remainder.evaluate(nodes[k])
        return
    _descend(remainder, tree.left, nodes, out)
    _descend(remainder, tree.right, nodes, out)


def multipoint_eval(poly: DensePolynomial, nodes: Sequence[Any]) -> List[Any]:
    """
    Evaluate poly at every node by remaindering down a subproduct tree.

    Args:
        poly: polynomial to evaluate
        nodes: field elements (repeats allowed)

    Returns:
        List: values[i] == poly(nodes[i]), identical to Horner
    """
    if not nodes:
        return []
    if poly.is_zero():
        return [poly.field.zero() for _ in nodes]
    out: List[Any] = [None] * len(nodes)
    _descend(poly, SubproductTree(poly.field, nodes), nodes, out)
    return out


def _combine(tree: SubproductTree, weights: Sequence[Any], field: Any) -> DensePolynomial:
    """Σ_k weights[k] · Π_{j≠k} (x - node_j) over the tree's range."""
    if tree.is_leaf():
        return DensePolynomial.constant(field, weights[tree.start])
    left = _combine(tree.left, weights, field)
    right = _combine(tree.right, weights, field)
    return left * tree.right.poly + right * tree.left.poly


def interpolate(points: Sequence[Tuple[Any, Any]], field: Any) -> DensePolynomial:
    """
    Unique polynomial of degree < len(points) through the given points.

    Args:
        points: (x_i, y_i) pairs of field elements with distinct x_i
        field: coefficient field

    Returns:
        DensePolynomial: P with P(x_i) = y_i

    Raises:
        ParameterError: empty input or repeated node
    """
    if not points:
        raise ParameterError("interpolation needs at least one point")
    xs = [field.from_int(x) if isinstance(x, int) else x for x, _ in points]
    ys = [field.from_int(y) if isinstance(y, int) else y for _, y in points]
    if len(set(xs)) != len(xs):
        raise ParameterError("interpolation nodes must be distinct")

    tree = SubproductTree(field, xs)
    derivative_values = multipoint_eval(tree.poly.derivative(), xs)
    weights = [y / d for y, d in zip(ys, derivative_values)]
    return _combine(tree, weights, field)
