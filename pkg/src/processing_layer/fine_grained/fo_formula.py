"""
fo_formula.py
-----------------
First-order formulas over undirected graphs in prenex form.

Text form: a quantifier prefix, a colon, then a quantifier-free matrix.

    E x1 E x2 A x3 : (edge x1 x2 & !edge x2 x3)

Matrix grammar (loosest binding first):
    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '!' factor | '(' expr ')' | 'edge' VAR VAR | VAR '=' VAR | 'true' | 'false'
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Sequence, Tuple, Union

from ..errors import FormulaError

Assignment = Dict[str, int]
EdgeTest = Callable[[int, int], bool]

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|([()&|!=]))")


class Quantifier(Enum):
    EXISTS = "E"
    FORALL = "A"


# ===== MATRIX AST =====

@dataclass(frozen=True)
class Constant:
    value: bool

    def evaluate(self, assignment: Assignment, edge: EdgeTest) -> bool:
        return self.value

    def render(self) -> str:
        return "true" if self.value else "false"


@dataclass(frozen=True)
class EdgeAtom:
    left: str
    right: str

    def evaluate(self, assignment: Assignment, edge: EdgeTest) -> bool:
        return edge(assignment[self.left], assignment[self.right])

    def render(self) -> str:
        return f"edge {self.left} {self.right}"


@dataclass(frozen=True)
class EqualsAtom:
    left: str
    right: str

    def evaluate(self, assignment: Assignment, edge: EdgeTest) -> bool:
        return assignment[self.left] == assignment[self.right]

    def render(self) -> str:
        return f"{self.left} = {self.right}"


@dataclass(frozen=True)
class Not:
    child: "Matrix"

    def evaluate(self, assignment: Assignment, edge: EdgeTest) -> bool:
        return not self.child.evaluate(assignment, edge)

    def render(self) -> str:
        return f"!{self.child.render()}"


@dataclass(frozen=True)
class Junction:
    """n-ary conjunction (`&`) or disjunction (`|`)."""
    operator: str
    children: Tuple["Matrix", ...]

    def evaluate(self, assignment: Assignment, edge: EdgeTest) -> bool:
        results = (child.evaluate(assignment, edge) for child in self.children)
        return all(results) if self.operator == "&" else any(results)

    def render(self) -> str:
        return "(" + f" {self.operator} ".join(child.render() for child in self.children) + ")"


Matrix = Union[Constant, EdgeAtom, EqualsAtom, Not, Junction]


def matrix_variables(node: Matrix) -> List[str]:
    if isinstance(node, (EdgeAtom, EqualsAtom)):
        return [node.left, node.right]
    if isinstance(node, Not):
        return matrix_variables(node.child)
    if isinstance(node, Junction):
        return [v for child in node.children for v in matrix_variables(child)]
    return []


# ===== FORMULA =====

@dataclass(frozen=True)
class Formula:
    prefix: Tuple[Tuple[Quantifier, str], ...]
    matrix: Matrix

    @property
    def k(self) -> int:
        return len(self.prefix)

    @property
    def variables(self) -> Tuple[str, ...]:
        return tuple(name for _, name in self.prefix)

    @property
    def existential_head(self) -> int:
        """Length of the leading run of existential quantifiers."""
        count = 0
        for quantifier, _ in self.prefix:
            if quantifier is not Quantifier.EXISTS:
                break
            count += 1
        return count

    def holds(
        self,
        domains: Sequence[Sequence[int]],
        edge: EdgeTest,
        assignment: Assignment,
        depth: int = 0,
    ) -> bool:
        """Truth of Q_{depth+1} .. Q_k ψ under a partial assignment of the first `depth` variables."""
        if depth == self.k:
            return self.matrix.evaluate(assignment, edge)
        quantifier, name = self.prefix[depth]

        def branch(vertex: int) -> bool:
            return self.holds(domains, edge, {**assignment, name: vertex}, depth + 1)

        if quantifier is Quantifier.EXISTS:
            return any(branch(v) for v in domains[depth])
        return all(branch(v) for v in domains[depth])

    def render(self) -> str:
        head = " ".join(f"{q.value} {name}" for q, name in self.prefix)
        return f"{head} : {self.matrix.render()}"


# ===== PARSER =====

class _MatrixParser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.tokens = self._tokenize(text)
        self.position = 0
        self.variables = set(variables)

    @staticmethod
    def _tokenize(text: str) -> List[str]:
        tokens, position = [], 0
        text = text.rstrip()
        while position < len(text):
            match = _TOKEN.match(text, position)
            if not match:
                raise FormulaError(f"unexpected character at {text[position:]!r}")
            tokens.append(match.group(1) or match.group(2))
            position = match.end()
        return tokens

    def _peek(self) -> str:
        return self.tokens[self.position] if self.position < len(self.tokens) else ""

    def _take(self) -> str:
        token = self._peek()
        if not token:
            raise FormulaError("formula ends unexpectedly")
        self.position += 1
        return token

    def _expect(self, token: str) -> None:
        found = self._take()
        if found != token:
            raise FormulaError(f"expected {token!r}, found {found!r}")

    def _variable(self) -> str:
        name = self._take()
        if name not in self.variables:
            raise FormulaError(f"unquantified variable {name!r}")
        return name

    def parse(self) -> Matrix:
        node = self._expression()
        if self.position != len(self.tokens):
            raise FormulaError(f"trailing tokens from {self._peek()!r}")
        return node

    def _junction(self, operator: str, operand: Callable[[], Matrix]) -> Matrix:
        children = [operand()]
        while self._peek() == operator:
            self._take()
            children.append(operand())
        return children[0] if len(children) == 1 else Junction(operator, tuple(children))

    def _expression(self) -> Matrix:
        return self._junction("|", self._term)

    def _term(self) -> Matrix:
        return self._junction("&", self._factor)

    def _factor(self) -> Matrix:
        token = self._peek()
        if token == "!":
            self._take()
            return Not(self._factor())
        if token == "(":
            self._take()
            node = self._expression()
            self._expect(")")
            return node
        if token in ("true", "false"):
            self._take()
            return Constant(token == "true")
        if token == "edge":
            self._take()
            return EdgeAtom(self._variable(), self._variable())
        left = self._variable()
        self._expect("=")
        return EqualsAtom(left, self._variable())


def parse_prefix(text: str) -> Tuple[Tuple[Quantifier, str], ...]:
    tokens = text.split()
    if not tokens or len(tokens) % 2:
        raise FormulaError(f"quantifier prefix must be pairs of 'E|A var', got {text!r}")
    prefix = []
    for symbol, name in zip(tokens[::2], tokens[1::2]):
        try:
            quantifier = Quantifier(symbol)
        except ValueError as exc:
            raise FormulaError(f"unknown quantifier {symbol!r}") from exc
        prefix.append((quantifier, name))
    names = [name for _, name in prefix]
    if len(set(names)) != len(names):
        raise FormulaError("each variable may be quantified once")
    return tuple(prefix)


def validate_prefix(formula: Formula, max_quantifiers: int) -> None:
    """
    Enforce the supported prefix shapes.

    Raises:
        FormulaError: more than max_quantifiers, no leading existential, or
            the shape E^{k-1} A with k >= 3
    """
    if formula.k > max_quantifiers:
        raise FormulaError(f"at most {max_quantifiers} quantifiers are supported, got {formula.k}")
    if formula.existential_head == 0:
        raise FormulaError("the prefix must begin with an existential quantifier")
    if formula.k >= 3 and formula.existential_head == formula.k - 1:
        raise FormulaError("prefixes of the form E^(k-1) A are not supported")


def parse_formula(text: str, max_quantifiers: int = 4) -> Formula:
    """
    Parse `<prefix> : <matrix>` and validate the prefix shape.

    Raises:
        FormulaError: on any syntax or shape problem
    """
    head, colon, body = text.partition(":")
    if not colon:
        raise FormulaError("formula needs ':' between prefix and matrix")
    prefix = parse_prefix(head)
    formula = Formula(prefix, _MatrixParser(body, [name for _, name in prefix]).parse())
    validate_prefix(formula, max_quantifiers)
    return formula
